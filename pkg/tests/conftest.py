import pytest

from schubstone import Permutation


def perm_id(w):
    return str(w)


def perms(*texts):
    return [Permutation.parse(t) for t in texts]


@pytest.fixture(params=list(Permutation.all(3)), ids=perm_id)
def s3_perm(request):
    return request.param


@pytest.fixture(params=list(Permutation.all(4)), ids=perm_id)
def s4_perm(request):
    return request.param


@pytest.fixture(params=list(Permutation.all(5)), ids=perm_id)
def s5_perm(request):
    return request.param


@pytest.fixture(params=[w for w in Permutation.all(4) if w.is_grassmannian and not w.is_identity], ids=perm_id)
def grassmannian_perm(request):
    return request.param


@pytest.fixture
def root_321_2413():
    """Root of the MT-tree for 321 x 2413 with m = 2."""
    return Permutation.parse('3215746')
