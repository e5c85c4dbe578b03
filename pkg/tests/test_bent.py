import pytest

from butson.bent import BENT, CONJ_SELF_DUAL, NOT_BENT, SELF_DUAL, find_bent, is_bent
from butson.bhcode import BudgetExceeded, bh_code
from butson.bhmatrix import fourier, kronecker, sylvester
from butson.bounds import bent_lower_bound
from butson.homweight import WeightScaling, distance

from instances import small_instances
from oracles import ref_bent_vectors

SYL4 = kronecker(fourier(2), fourier(2))

# exhaustive floating-point scan of all 4^4 candidates: 32 bent vectors, 8 with x_1 = 0
F4_BENT_REDUCED = [
    (0, 0, 0, 2), (0, 0, 2, 0), (0, 1, 0, 3), (0, 1, 2, 1),
    (0, 2, 0, 0), (0, 2, 2, 2), (0, 3, 0, 1), (0, 3, 2, 3),
]


def test_is_bent_examples():
    c = is_bent(SYL4, (0, 0, 0, 1))
    assert c.kind == SELF_DUAL and c.lambda_log == 0
    assert is_bent(fourier(2), (0, 0)).kind == NOT_BENT
    assert is_bent(fourier(2), (0, 1)).kind == NOT_BENT
    with pytest.raises(ValueError):
        is_bent(SYL4, (0, 1))


def test_lambda_detection_on_shifted_vector():
    # x -> x + 1 multiplies Hx by -1 but also x by -1, so lambda is unchanged
    c = is_bent(SYL4, (1, 1, 1, 0))
    assert c.kind == SELF_DUAL and c.lambda_log == 0


def test_conjugate_self_dual_over_q4():
    # over q=4 self-duality and conjugate self-duality separate
    kinds = {is_bent(fourier(4), v).kind for v in F4_BENT_REDUCED}
    assert kinds <= {BENT, SELF_DUAL, CONJ_SELF_DUAL}
    for v in F4_BENT_REDUCED:
        c = is_bent(fourier(4), v)
        assert c.kind != NOT_BENT
        if c.lambda_log is not None:
            # check y = lambda x (or lambda conj x) numerically
            import numpy as np

            h = fourier(4).to_complex()
            x = np.exp(2j * np.pi * np.array(v) / 4)
            y = h @ x / 2
            lam = np.exp(2j * np.pi * c.lambda_log / 4)
            ref = x if c.self_dual else x.conj()
            assert np.allclose(y, lam * ref)


def test_find_bent_examples():
    r = find_bent(fourier(2))
    assert r.found == [] and r.exhaustive and r.searched == 2
    r = find_bent(SYL4)
    assert r.exhaustive and (0, 0, 0, 1) in [v for v, _ in r.found]
    r = find_bent(fourier(4))
    assert [v for v, _ in r.found] == F4_BENT_REDUCED
    assert r.searched == 64 and r.exhaustive


def test_find_bent_modes_and_limit():
    sd = find_bent(SYL4, "self_dual")
    assert all(c.self_dual for _, c in sd.found)
    assert (0, 0, 0, 1) in [v for v, _ in sd.found]
    lim = find_bent(fourier(4), limit=3)
    assert [v for v, _ in lim.found] == F4_BENT_REDUCED[:3]
    assert not lim.exhaustive and lim.searched < 64
    with pytest.raises(ValueError):
        find_bent(SYL4, "dual")


def test_find_bent_budget():
    with pytest.raises(BudgetExceeded):
        find_bent(kronecker(fourier(5), fourier(5)))


@pytest.mark.parametrize("name, m", sorted(small_instances().items()))
def test_orbit_reduction_matches_full_space_oracle(name, m):
    full = ref_bent_vectors(m.rows(), m.q)
    unreduced = find_bent(m, use_symmetry=False)
    assert [v for v, _ in unreduced.found] == full
    reduced = find_bent(m, workers=8)
    got = sorted(v for v, _ in reduced.found)
    assert got == [v for v in full if v[0] == 0]
    # every full-space hit is a phase shift of a reduced hit
    assert {tuple((a - v[0]) % m.q for a in v) for v in full} == set(got)
    for v, cls in reduced.found:
        again = is_bent(m, v)
        assert again == cls
        for t in range(m.q):
            shifted = tuple((a + t) % m.q for a in v)
            assert is_bent(m, shifted).kind == cls.kind


@pytest.mark.parametrize("name, m", sorted(small_instances().items()))
def test_bent_vectors_are_far_from_the_code(name, m):
    s = WeightScaling.honold(m.q)
    lb = bent_lower_bound(m.n, m.q, s)
    code = list(bh_code(m))
    for v, _ in find_bent(m).found:
        for c in code:
            assert lb.at_most(distance(v, c, s))


def test_sylvester_16():
    r = find_bent(sylvester(4), limit=5)
    for v, c in r.found:
        assert c.kind != NOT_BENT


def test_non_square_order_has_no_lambda():
    for v, c in find_bent(fourier(3)).found:
        assert c.lambda_log is None
