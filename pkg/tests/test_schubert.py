import itertools

import pytest

from schubstone import (Permutation, Polynomial, SchubertExpansion, schubert_bjs, schubert_dd, schubert_poly,
                        compatible_sequences, expand_in_schubert, schubert_product, product_expand, format_terms,
                        monk, monk_terms, multiply_by_variable, multiply_expansion, product_terms, leading_exponent,
                        good_pair_check, exponent_from_indices, NotSchubertPositiveError, NotHomogeneousError,
                        InvalidPermutationError)

from .conftest import perms


X1 = Polynomial.var(1)
X2 = Polynomial.var(2)
X3 = Polynomial.var(3)


def test_small_polynomials():
    assert schubert_bjs(Permutation.parse('21')) == X1
    assert schubert_bjs(Permutation.parse('132')) == X1 + X2
    assert schubert_bjs(Permutation.parse('231')) == X1 * X2
    assert schubert_bjs(Permutation.parse('312')) == X1 * X1
    assert schubert_bjs(Permutation.parse('321')) == X1 * X1 * X2
    assert schubert_bjs(Permutation.identity()) == 1

def test_1432():
    expected = X1 * X1 * X2 + X1 * X1 * X3 + X1 * X2 * X2 + X1 * X2 * X3 + X2 * X2 * X3
    assert schubert_poly(Permutation.parse('1432')) == expected
    assert schubert_dd(Permutation.parse('1432'), 4) == expected

def test_compatible_sequences():
    assert list(compatible_sequences((1, 2, 1))) == []
    assert list(compatible_sequences((2, 1, 2))) == [(1, 1, 2)]
    assert list(compatible_sequences((2,))) == [(1,), (2,)]
    assert list(compatible_sequences((1, 2))) == [(1, 2)]

def test_constructions_agree(s4_perm):
    assert schubert_bjs(s4_perm) == schubert_dd(s4_perm, 4)
    assert schubert_poly(s4_perm) == schubert_bjs(s4_perm)

def test_leading_term_is_code(s4_perm):
    p = schubert_poly(s4_perm)
    assert leading_exponent(p) == s4_perm.code
    assert p[s4_perm.code] == 1
    assert p.degree == s4_perm.length

def test_stable_under_embedding(s3_perm):
    assert schubert_dd(s3_perm, 3) == schubert_dd(s3_perm, 4)

def test_schubert_dd_too_small():
    with pytest.raises(InvalidPermutationError):
        schubert_dd(Permutation.parse('4321'), 3)

def test_expand_single(s4_perm):
    assert dict(expand_in_schubert(schubert_poly(s4_perm))) == {s4_perm: 1}

def test_expand_square():
    w = Permutation.parse('132')
    assert dict(product_expand([w, w])) == {Permutation.parse('231'): 1, Permutation.parse('1423'): 1}
    assert dict(product_expand(perms('21', '21'))) == {Permutation.parse('312'): 1}

def test_expand_errors():
    with pytest.raises(NotSchubertPositiveError):
        expand_in_schubert(X1 - X2)
    with pytest.raises(NotHomogeneousError):
        expand_in_schubert(X1 + 1)
    with pytest.raises(ValueError):
        product_expand([])

def test_product_3241_4312():
    for engine in ('polynomial', 'monk'):
        e = product_expand(perms('3241', '4312'), engine)
        assert dict(e) == {Permutation.parse('642135'): 1}
        assert str(e) == 'S[6,4,2,1,3,5]'
    with pytest.raises(ValueError):
        product_expand(perms('21'), 'kohnert')

@pytest.mark.parametrize('pair', list(itertools.product(Permutation.all(3), repeat=2)), ids=lambda p: f'{p[0]}x{p[1]}')
def test_product_s3(pair):
    e = product_expand(pair)
    assert e.to_polynomial() == schubert_product(pair)
    assert all(c > 0 for c in e.values())
    assert dict(product_expand(pair, 'monk')) == dict(e)

def test_product_engines_s4(s4_perm):
    for u in perms('2413', '1432', '21'):
        assert dict(product_expand([s4_perm, u], 'monk')) == dict(product_expand([s4_perm, u]))

def test_three_factors():
    ws = perms('21', '132', '21')
    assert product_expand(ws).to_polynomial() == X1 * X1 * (X1 + X2)
    assert dict(product_expand(ws, 'monk')) == dict(product_expand(ws))

def test_multiply_by_variable():
    identity = Permutation.identity()
    assert multiply_by_variable({identity: 1}, 1) == {Permutation.parse('21'): 1}
    assert multiply_by_variable({identity: 1}, 2) == {Permutation.parse('132'): 1, Permutation.parse('21'): -1}

def test_multiply_expansion_identity():
    terms = {Permutation.parse('21'): 2}
    assert multiply_expansion(terms, Permutation.identity()) == terms

def test_expansion_container():
    e = SchubertExpansion({Permutation.parse('312'): 1, Permutation.parse('231'): 2})
    assert list(e) == perms('231', '312')
    assert e[Permutation.parse('21')] == 0
    assert e.degree == 2
    assert str(e) == '2*S[2,3,1] + S[3,1,2]'
    assert e.to_json() == dict(terms=[dict(perm=[2, 3, 1], coeff=2), dict(perm=[3, 1, 2], coeff=1)])
    assert SchubertExpansion().degree == -1

def test_expansion_invariants():
    with pytest.raises(NotSchubertPositiveError):
        SchubertExpansion({Permutation.parse('21'): -1})
    with pytest.raises(NotHomogeneousError):
        SchubertExpansion({Permutation.parse('21'): 1, Permutation.parse('321'): 1})

def test_format_terms():
    assert format_terms({Permutation.identity(): 1}) == 'S[1]'
    assert format_terms({}) == '0'
    assert format_terms({Permutation.parse('21'): 3}, 'F') == '3*F[2,1]'

def test_monk():
    assert dict(monk(Permutation.parse('21'), 1)) == {Permutation.parse('312'): 1}
    assert monk_terms(Permutation.parse('132'), 2) == perms('231', '1423')
    with pytest.raises(ValueError):
        monk(Permutation.parse('21'), 0)

@pytest.mark.parametrize('m', [1, 2, 3])
def test_monk_matches_product(s3_perm, m):
    t = Permutation.transposition(m, m + 1)
    assert dict(monk(s3_perm, m)) == dict(product_expand([s3_perm, t]))

@pytest.mark.parametrize('factors', [('21', '132', '2413'), ('3241', '21', '132')], ids='x'.join)
def test_product_terms_order_free(factors):
    ws = perms(*factors)
    expected = dict(product_expand(ws))
    for order in itertools.permutations(ws):
        assert product_terms(list(order)) == expected


def weak_sequences(length, top):
    return list(itertools.combinations_with_replacement(range(1, top + 1), length))


def good_pairs(length, top, n=None):
    seqs = weak_sequences(length, top)
    return [(b1, b2) for b1 in seqs for b2 in seqs if good_pair_check(b1, b2, n)]


def test_good_pair_coefficients_decrease(s4_perm):
    p = schubert_bjs(s4_perm)
    for b1, b2 in good_pairs(s4_perm.length, 4):
        assert p.coefficient(exponent_from_indices(b1)) >= p.coefficient(exponent_from_indices(b2))

@pytest.mark.parametrize('n', [1, 2])
def test_good_pair_coefficients_equal_below_shift(s3_perm, n):
    p = schubert_bjs(s3_perm.embed(n))
    for b1, b2 in good_pairs(s3_perm.length, n, n):
        assert p.coefficient(exponent_from_indices(b1)) == p.coefficient(exponent_from_indices(b2))
