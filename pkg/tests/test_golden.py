import pytest

from schubstone import GoldenCheck, run_golden, Permutation, NotFoundError, SchubstoneWarning
from schubstone.golden import (GOLDEN_CHECKS, UNCERTAIN_TERM, compare_printed, note_printed, is_valid_index,
                               check_elem_weak_stability)

from .conftest import perms


@pytest.fixture(params=[check.name for check in GOLDEN_CHECKS])
def golden_check(request):
    return GoldenCheck.by_name(request.param)


def test_golden_check(golden_check):
    result = golden_check.run()
    assert result.passed, result.detail
    assert result.seconds >= 0


def test_run_subset():
    report = run_golden(['product-3241-4312', 'mt-trees'])
    assert report.passed
    assert [r.name for r in report.results] == ['product-3241-4312', 'mt-trees']
    assert str(report).splitlines()[-1] == '2/2 checks passed'
    assert report.to_json()['passed']

def test_unknown_check():
    with pytest.raises(NotFoundError):
        run_golden(['no-such-check'])

def test_compare_printed():
    a, b = perms('21', '312')
    assert compare_printed({a: 1, b: 1}, [a, b]) == (True, '2 terms')
    ok, detail = compare_printed({a: 1}, [a, b])
    assert not ok
    assert 'missing 312' in detail
    ok, detail = compare_printed({a: 1, b: 2}, [a, b])
    assert not ok

def test_compare_printed_uncertain():
    a, b = perms('21', '312')
    with pytest.warns(Warning):
        ok, detail = compare_printed({a: 1, b: 1}, [a, UNCERTAIN_TERM])
    assert ok
    assert 'not printed: 312' in detail

def test_note_printed():
    a, b = perms('21', '312')
    assert note_printed({a: 1}, [a], 'same') == ''
    with pytest.warns(SchubstoneWarning, match='not printed: \\[312\\]'):
        assert note_printed({a: 1, b: 1}, [a], 'extra') == ', not printed: 312'

def test_stanley_321_2413_keeps_computed_terms():
    with pytest.warns(SchubstoneWarning, match='235614'):
        result = GoldenCheck.by_name('stanley-321-2413').run()
    assert result.passed
    assert result.detail.startswith('8 terms, not printed: 235614')

def test_is_valid_index():
    assert is_valid_index((0, 2))
    assert is_valid_index(())
    assert not is_valid_index((0, 3))
    assert not is_valid_index((2,))

def test_elem_weak_stability_skips_invalid_indices():
    passed, detail = check_elem_weak_stability()
    assert passed, detail
    outside = int(detail.split(', ')[1].split()[0])
    assert outside >= 1
