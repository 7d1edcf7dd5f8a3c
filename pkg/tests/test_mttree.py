import random

import pytest

from schubstone import (Permutation, NodeKind, classify, mt_tree, grassmannian_product, stanley_via_mt, stable_expand,
                        product_expand, transition_identity_holds, is_reduced, no_descent_after_one,
                        one_positions_preserved, cross, NotGrassmannianError, LengthMismatchError)

from .conftest import perms


def test_tree_321_2413(root_321_2413):
    tree = mt_tree(root_321_2413, 2)
    assert tree.num_nodes == 13
    assert tree.num_edges == 12
    assert tree.good_leaves() == perms('53124', '451236')
    assert tree.bad_leaves() == perms('52314', '425136', '35214', '34512', '324615')
    assert tree.perm(1) == Permutation.parse('321654')
    assert tree.edges()[0] == (0, 4, 1)
    assert [j for parent, j, child in tree.edges() if parent == 1] == [1, 2, 3]
    assert tree.kind(0) is NodeKind.INTERNAL

def test_tree_321_2413_expansion(root_321_2413):
    w, u = perms('321', '2413')
    assert dict(mt_tree(root_321_2413, 2).expansion()) == dict(product_expand([w, u]))

def test_tree_3_variables():
    tree = mt_tree(cross(*perms('1432', '13524'), 3), 3)
    assert sorted(tree.good_leaves()) == sorted(perms('164235', '156234', '263145', '25413', '246135', '34512'))
    assert tree.bad_leaves() == perms('243615')

def test_small_tree():
    tree = mt_tree(Permutation.parse('2143'), 1)
    assert tree.good_leaves() == perms('3124')
    assert tree.bad_leaves() == perms('2314')
    assert dict(tree.leaf_multiset()) == {(Permutation.parse('3124'), NodeKind.GOOD): 1, (Permutation.parse('2314'), NodeKind.BAD): 1}

def test_leaves_survive_new_level():
    first = mt_tree(Permutation.parse('2143'), 1)
    second = mt_tree(Permutation.parse('21354'), 1)
    assert first.leaf_multiset() == second.leaf_multiset()

def test_classify():
    assert classify(Permutation.parse('3124'), 1) is NodeKind.GOOD
    assert classify(Permutation.parse('2314'), 1) is NodeKind.BAD
    assert classify(Permutation.parse('2143'), 1) is NodeKind.INTERNAL
    assert classify(Permutation.identity(), 1) is NodeKind.GOOD

def test_tree_bad_m():
    with pytest.raises(ValueError):
        mt_tree(Permutation.parse('2143'), 0)

def test_tree_text_and_json(root_321_2413):
    tree = mt_tree(root_321_2413, 2)
    lines = str(tree).splitlines()
    assert lines[0] == '3215746'
    assert lines[1] == '  j=4: 321654'
    assert len(lines) == 13
    data = tree.to_json()
    assert data['m'] == 2
    assert len(data['edges']) == 12
    assert sum(1 for leaf in data['leaves'] if leaf['kind'] == 'bad') == 5

def test_grassmannian_product_example():
    w, u = perms('321', '2413')
    assert dict(grassmannian_product(w, u)) == {Permutation.parse('53124'): 1, Permutation.parse('45123'): 1}
    assert dict(grassmannian_product(u, w)) == dict(grassmannian_product(w, u))

def test_grassmannian_product(s3_perm, grassmannian_perm):
    if len(s3_perm.code) > len(grassmannian_perm.code) and not s3_perm.is_grassmannian:
        pytest.skip('code of w longer than the Grassmannian factor')
    expected = dict(product_expand([s3_perm, grassmannian_perm]))
    assert dict(grassmannian_product(s3_perm, grassmannian_perm)) == expected

def test_grassmannian_product_errors():
    with pytest.raises(NotGrassmannianError):
        grassmannian_product(*perms('2143', '2143'))
    with pytest.raises(LengthMismatchError):
        grassmannian_product(*perms('1432', '21'))

def test_stanley_via_mt():
    w, u = perms('321', '2413')
    e = stanley_via_mt(w, u)
    expected = stable_expand(w, u)
    assert dict(e.terms) == dict(expected.terms)
    assert [dict(level) for level in e.levels] == [dict(level) for level in expected.levels]
    assert e.stability_number == 2
    assert e.method == 'mt'

@pytest.mark.parametrize('pair', [('21', '21'), ('231', '21'), ('132', '2413'), ('2143', '132'), ('21', '2413'),
                                  ('21', '231')],
                         ids=lambda p: f'{p[0]}x{p[1]}')
def test_stanley_via_mt_matches(pair):
    e = stanley_via_mt(*perms(*pair))
    assert dict(e.terms) == dict(stable_expand(*e.factors).terms)

def test_stanley_via_mt_padding():
    e = stanley_via_mt(*perms('2143', '132'))
    assert e.padding == 1
    assert e.factors == tuple(perms('2143', '1243'))
    e = stanley_via_mt(*perms('21', '231'))
    assert e.factors == tuple(perms('132', '231'))
    assert dict(e.terms) == dict(stable_expand(*perms('132', '231')).terms)
    assert stanley_via_mt(*perms('321', '2413')).padding == 0

def test_transition_identity(s4_perm):
    if s4_perm.is_identity:
        pytest.skip('identity has no descent')
    assert transition_identity_holds(s4_perm)

def test_reduced_has_no_descent_after_one(s4_perm):
    if is_reduced(s4_perm):
        assert no_descent_after_one(s4_perm)

def test_reduced():
    assert is_reduced(Permutation.parse('21'))
    assert not is_reduced(Permutation.parse('2143'))
    assert no_descent_after_one(Permutation.parse('2413'))
    assert not no_descent_after_one(Permutation.parse('2143'))

def test_one_positions_preserved():
    assert one_positions_preserved(Permutation.parse('52314'), 2)

def test_grassmannian_product_random():
    rng = random.Random(1)
    grassmannian = [u for u in Permutation.all(4) if u.is_grassmannian and not u.is_identity]
    pairs = [(w, u) for w in Permutation.all(4) for u in grassmannian
             if len(w.code) <= len(u.code) or w.is_grassmannian]
    for w, u in rng.sample(pairs, 30):
        assert dict(grassmannian_product(w, u)) == dict(product_expand([w, u]))

def test_stanley_via_mt_grassmannian_pairs(grassmannian_perm):
    for u in Permutation.all(4):
        if u.is_grassmannian and not u.is_identity and grassmannian_perm.length + u.length <= 4:
            e = stanley_via_mt(grassmannian_perm, u)
            assert dict(e.terms) == dict(stable_expand(*e.factors).terms)

def random_pairs(seed, count):
    rng = random.Random(seed)
    pool = [w for w in Permutation.all(3) if not w.is_identity]
    return [(rng.choice(pool), rng.choice(pool)) for _ in range(count)]

@pytest.mark.parametrize('pair', [perms('321', '2413'), perms('21', '21')] + random_pairs(3, 10),
                         ids=lambda p: f'{p[0]}x{p[1]}')
def test_inserted_fixed_point_keeps_leaves(pair):
    w, u = pair
    m = max(len(w.code), len(u.code))
    first = mt_tree(cross(w, u), m)
    second = mt_tree(cross(w, u.embed(1)), m)
    assert first.leaf_multiset() == second.leaf_multiset()

def test_leaves_321_2413_no_descent_after_one(root_321_2413):
    tree = mt_tree(root_321_2413, 2)
    assert all(no_descent_after_one(tree.perm(n)) for n in tree.leaves())

@pytest.mark.parametrize('pair', [perms('1432', '13524')] + random_pairs(5, 10), ids=lambda p: f'{p[0]}x{p[1]}')
def test_reduced_leaves_no_descent_after_one(pair):
    w, u = pair
    m = max(len(w.code), len(u.code))
    tree = mt_tree(cross(w, u), m)
    reduced = [tree.perm(n) for n in tree.leaves() if is_reduced(tree.perm(n))]
    assert all(no_descent_after_one(v) for v in reduced)
