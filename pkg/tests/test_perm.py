import pytest

from schubstone import (Permutation, ParseError, InvalidPermutationError, NoDescentError, code, perm_from_code,
                        cross, strip_leading_fixed, diagram, reduced_words, reduced_word_count, apply_word,
                        max_transition, perm_report, perm_stats)

from .conftest import perms


def test_parse():
    w = Permutation.parse('3241')
    assert w.word == (3, 2, 4, 1)
    assert Permutation.parse('[3, 2, 4, 1]') == w
    assert Permutation.parse('10,2,3,4,5,6,7,8,9,1')(1) == 10

def test_parse_errors():
    with pytest.raises(ParseError):
        Permutation.parse('32a1')
    with pytest.raises(InvalidPermutationError):
        Permutation.parse('3341')

def test_canonical_form():
    assert Permutation((2, 1, 3)) == Permutation((2, 1))
    assert Permutation((1, 2, 3)).is_identity
    assert len(Permutation.parse('1243')) == 4
    assert str(Permutation.identity()) == '1'
    assert str(Permutation.parse('10,2,3,4,5,6,7,8,9,1')) == '10,2,3,4,5,6,7,8,9,1'

def test_fixed_past_word():
    w = Permutation.parse('21')
    assert w(5) == 5
    assert w.padded(4) == (2, 1, 3, 4)

def test_compose_inverse(s4_perm):
    assert s4_perm * s4_perm.inverse() == Permutation.identity()
    u = Permutation.parse('2413')
    assert all((s4_perm * u)(i) == s4_perm(u(i)) for i in range(1, 5))

def test_code():
    w = Permutation.parse('3241')
    assert w.code == (2, 1, 1)
    assert w.length == 4
    assert perm_from_code((2, 1, 1)) == w
    assert perm_from_code((0, 2, 1)) == Permutation.parse('1432')
    assert code(Permutation.identity()) == ()

def test_code_bijection(s4_perm):
    assert perm_from_code(s4_perm.code) == s4_perm
    assert sum(s4_perm.code) == s4_perm.length

def test_perm_from_code_negative():
    with pytest.raises(InvalidPermutationError):
        perm_from_code((1, -1))

def test_descents():
    w = Permutation.parse('321654')
    assert w.descents == (1, 2, 4, 5)
    assert w.last_descent == 5
    assert Permutation.identity().last_descent is None

def test_grassmannian():
    assert Permutation.parse('2413').is_grassmannian
    assert Permutation.parse('4312').is_grassmannian is False
    assert Permutation.parse('2413').one_position == 3

def test_embed_cross():
    assert Permutation.parse('2134').embed(2) == Permutation.parse('124356')
    w, u = perms('321', '2413')
    assert cross(w, u, 2) == Permutation.parse('3215746')
    assert cross(*perms('1432', '13524'), 3) == Permutation.parse('143257968')

def test_strip_leading_fixed():
    assert strip_leading_fixed(Permutation.parse('1243')) == (2, Permutation.parse('21'))
    assert strip_leading_fixed(Permutation.parse('2413')) == (0, Permutation.parse('2413'))
    assert strip_leading_fixed(Permutation.identity()) == (0, Permutation.identity())

def test_swap_raises_length(s4_perm):
    for i in range(1, 5):
        for j in range(i + 1, 6):
            raises = s4_perm.swap(i, j).length == s4_perm.length + 1
            assert s4_perm.swap_raises_length(i, j) == raises

def test_diagram():
    d = diagram(Permutation.parse('3215746'))
    assert len(d) == 6
    assert (5, 6) in d
    assert (5, 4) in d
    assert d.row_counts() == (2, 1, 0, 1, 2)

def test_diagram_size(s4_perm):
    assert len(diagram(s4_perm)) == s4_perm.length

def test_reduced_words():
    w0 = Permutation.longest(3)
    assert reduced_words(w0) == [(1, 2, 1), (2, 1, 2)]
    assert all(apply_word(word) == w0 for word in reduced_words(w0))
    assert reduced_word_count(Permutation.longest(4)) == 16
    assert reduced_words(Permutation.identity()) == [()]

def test_reduced_word_count(s4_perm):
    words = reduced_words(s4_perm)
    assert reduced_word_count(s4_perm) == len(words)
    assert all(len(word) == s4_perm.length for word in words)

def test_max_transition():
    t = max_transition(Permutation.parse('321654'))
    assert (t.r, t.s) == (5, 6)
    assert t.J == (1, 2, 3)
    assert t.descendants == dict(zip((1, 2, 3), perms('421635', '341625', '324615')))
    assert t.u.length == t.w.length - 1

def test_max_transition_identity():
    with pytest.raises(NoDescentError):
        max_transition(Permutation.identity())

def test_perm_report():
    report = perm_report(Permutation.parse('2413'))
    assert report.code == (1, 2)
    assert report.reduced_word_count == 2
    assert report.stats == perm_stats(Permutation.parse('2413'))
    text = str(report)
    assert 'one_position: 3' in text
    assert 'grassmannian: true' in text
    assert report.to_json()['stats']['descents'] == [2]

def test_perm_report_identity():
    report = perm_report(Permutation.identity())
    assert report.transition is None
    assert report.to_json()['transition'] is None

def test_code_round_trip_s5(s5_perm):
    assert perm_from_code(s5_perm.code) == s5_perm

def test_diagram_rows_are_code(s5_perm):
    assert diagram(s5_perm).row_counts() == s5_perm.code

@pytest.mark.parametrize('pad', [0, 5])
def test_cross_length(s4_perm, pad):
    for u in Permutation.all(4):
        assert cross(s4_perm, u, pad).length == s4_perm.length + u.length
