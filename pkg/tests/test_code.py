import numpy as np
import pytest

from uvcodes import gf, kernels
from uvcodes.code import TraceCode, WeightDistribution, gray
from uvcodes.errors import BudgetExceeded, NotInL, ParamsMismatch, UVCodesError
from uvcodes.ring import BaseRingElement, RingElement, ring_element


@pytest.fixture(scope="module")
def code31():
    return TraceCode(gf.field_new(3, 1))


@pytest.fixture(scope="module")
def code92():
    return TraceCode(gf.field_new(3, 2))


@pytest.fixture(scope="module")
def code71():
    return TraceCode(gf.field_new(7, 1))


EXPECTED = {
    (3, 1): {0: 1, 72: 78, 108: 2},
    (3, 2): {0: 1, 5832: 4, 7776: 6552, 11664: 4},
    (7, 1): {0: 1, 3528: 2394, 4116: 6},
}


# ----------------------------------------------------------------------
# evaluation map
# ----------------------------------------------------------------------

def test_evaluate_zero_gives_zero_vector(code31):
    ev = code31.evaluate(ring_element(code31.params, 0, 0, 0, 0))
    assert len(ev) == 27 and all(s.is_zero() for s in ev)


def test_evaluate_uv_is_constant_at_m1(code31):
    ev = code31.evaluate(ring_element(code31.params, 0, 0, 0, 1))
    assert all(s.as_tuple() == (0, 0, 0, 1) for s in ev)
    assert all(s.lee_weight() == 4 for s in ev)


def test_evaluate_one_has_weight_72(code31):
    assert code31.lee_weight_of(ring_element(code31.params, 1, 0, 0, 0)) == 72


def test_evaluate_params_mismatch(code31, code92):
    with pytest.raises(ParamsMismatch):
        code31.evaluate(ring_element(code92.params, 1, 0, 0, 0))


# ----------------------------------------------------------------------
# Gray map
# ----------------------------------------------------------------------

def test_gray_zero():
    word = gray([BaseRingElement(3, 0, 0, 0, 0)] * 5)
    assert word.shape == (20,) and not word.any()


def test_gray_single_uv_symbol():
    assert gray([BaseRingElement(3, 0, 0, 0, 1)]).tolist() == [1, 1, 1, 1]


def test_gray_block_layout():
    # two symbols: first a+bu+cv+duv = (1,2,0,1), second zero; blocks are
    # (d | c+d | b+d | a+b+c+d), each of length n=2
    word = gray([BaseRingElement(3, 1, 2, 0, 1), BaseRingElement(3, 0, 0, 0, 0)])
    assert word.tolist() == [1, 0, 1, 0, 0, 0, 1, 0]


def test_gray_weight_of_uv_codeword(code31):
    word = code31.gray_word(ring_element(code31.params, 0, 0, 0, 1))
    assert int((word != 0).sum()) == 108


def test_gray_isometry_exhaustive_31(code31):
    for a_code in range(81):
        a = RingElement.from_code(code31.params, a_code)
        assert int((code31.gray_word(a) != 0).sum()) == code31.lee_weight_of(a)


def test_gray_isometry_random_92(code92):
    rng = np.random.default_rng(5)
    for a_code in rng.integers(0, 9**4, size=50):
        a = RingElement.from_code(code92.params, int(a_code))
        assert int((code92.gray_word(a) != 0).sum()) == code92.lee_weight_of(a)


def test_lee_weight_examples(code31, code92):
    assert code31.lee_weight_of(ring_element(code31.params, 0, 0, 0, 2)) == 108
    assert code92.lee_weight_of(ring_element(code92.params, 0, 0, 0, 1)) == 5832


# ----------------------------------------------------------------------
# generator matrix
# ----------------------------------------------------------------------

def test_generator_matrix_shapes_and_rank(code31, code92, code71):
    from uvcodes.code import _rank_mod_p
    for code in (code31, code92, code71):
        G = code.generator_matrix()
        assert G.shape == (code.K, code.N)
        assert _rank_mod_p(G, code.params.p) == code.K
    assert code31.generator_matrix().shape == (4, 108)
    assert code92.generator_matrix().shape == (8, 11664)
    assert code71.generator_matrix().shape == (4, 4116)


def test_generator_matrix_spans_codewords(code31):
    # every codeword's Gray image is message @ G for the component message
    G = code31.generator_matrix().astype(np.int64)
    params = code31.params
    for a_code in range(0, 81, 7):
        a = RingElement.from_code(params, a_code)
        msg = np.concatenate([params.coeff_matrix[c]
                              for c in (a.c0, a.c1, a.c2, a.c3)])
        assert np.array_equal(msg @ G % 3, code31.gray_word(a))


def test_generator_matrix_text(code31):
    text = code31.generator_matrix_text()
    lines = text.splitlines()
    assert len(lines) == 4
    assert all(len(line) == 108 for line in lines)
    assert set("".join(lines)) <= set("012")
    assert np.array_equal(
        np.array([[int(ch) for ch in line] for line in lines]),
        code31.generator_matrix())


# ----------------------------------------------------------------------
# weight distribution
# ----------------------------------------------------------------------

def test_exhaustive_distributions(code31, code92, code71):
    for code, key in ((code31, (3, 1)), (code92, (3, 2)), (code71, (7, 1))):
        wd = code.weight_distribution("exhaustive")
        assert wd.entries == EXPECTED[key]
        assert wd.total == key[0] ** (4 * key[1])
        assert wd.min_distance == min(w for w in EXPECTED[key] if w)


def test_by_class_matches_exhaustive(code31, code92, code71):
    for code in (code31, code92, code71):
        assert code.weight_distribution("by_class") == \
            code.weight_distribution("exhaustive")


def test_by_class_seeded_and_deterministic(code92):
    a = code92.weight_distribution("by_class", samples=8, seed=123)
    b = code92.weight_distribution("by_class", samples=8, seed=123)
    assert a == b


def test_worker_count_does_not_change_result(code92):
    base = code92.weight_vector(workers=1)
    for workers in (2, 5, 8):
        assert np.array_equal(code92.weight_vector(workers=workers), base)


def test_budget_rejects_large_exhaustive():
    code = TraceCode(gf.field_new(5, 2))
    with pytest.raises(BudgetExceeded):
        code.weight_distribution("exhaustive")
    # class mode stays feasible
    wd = code.weight_distribution("by_class", samples=4)
    assert wd.total == 5**8


@pytest.mark.skipif(not kernels.HAS_NUMBA, reason="numba not installed")
def test_backends_agree(code92):
    a = code92.weight_vector(backend="numpy")
    b = code92.weight_vector(backend="numba")
    assert np.array_equal(a, b)


def test_weight_distribution_invariants_enforced():
    with pytest.raises(UVCodesError):
        WeightDistribution({0: 1, 5: 3}, total=5)
    with pytest.raises(UVCodesError):
        WeightDistribution({0: 2, 5: 3}, total=5)


def test_class_invariance_exhaustive(code31, code92):
    # all of R \ {uv-line} share one weight; the uv-line splits by the
    # quadratic character of alpha into (at most) two constant classes
    for code in (code31, code92):
        q = code.params.q
        wv = code.weight_vector()
        eta = code.params.eta_table
        uv_sq = {int(wv[c]) for c in range(1, q) if eta[c] == 1}
        uv_nsq = {int(wv[c]) for c in range(1, q) if eta[c] == -1}
        generic = set(np.unique(wv[q:]).tolist())
        assert len(uv_sq) == 1 and len(uv_nsq) == 1 and len(generic) == 1


# ----------------------------------------------------------------------
# character sums
# ----------------------------------------------------------------------

def test_theta_zero_is_N(code31, code92):
    for code in (code31, code92):
        zero = ring_element(code.params, 0, 0, 0, 0)
        assert code.theta(zero) == pytest.approx(code.N, abs=1e-6)


def test_theta_uv_real_part(code31):
    th = code31.theta(ring_element(code31.params, 0, 0, 0, 1))
    assert th.real == pytest.approx(-54, abs=1e-6)


def test_theta_one_vanishes(code31):
    th = code31.theta(ring_element(code31.params, 1, 0, 0, 0))
    assert abs(th) == pytest.approx(0, abs=1e-6)


def test_character_sum_weight_examples(code31, code92):
    assert code31.weight_via_character_sum(ring_element(code31.params, 0, 0, 0, 0)) == 0
    assert code31.weight_via_character_sum(ring_element(code31.params, 0, 0, 0, 1)) == 108
    assert code92.weight_via_character_sum(ring_element(code92.params, 0, 0, 0, 1)) == 5832


def test_character_sum_oracle_exhaustive_31(code31):
    for a_code in range(81):
        a = RingElement.from_code(code31.params, a_code)
        assert code31.weight_via_character_sum(a) == code31.lee_weight_of(a)


def test_character_sum_oracle_random_92(code92):
    rng = np.random.default_rng(17)
    for a_code in rng.integers(0, 9**4, size=300):
        a = RingElement.from_code(code92.params, int(a_code))
        assert code92.weight_via_character_sum(a) == code92.lee_weight_of(a)


def test_theta_sum_identity_on_random_words(code31):
    # independent oracle: evaluate Theta(s*y) by direct summation
    rng = np.random.default_rng(23)
    p, N = 3, code31.N
    for _ in range(100):
        y = rng.integers(0, p, size=N)
        lhs = sum(np.exp(2j * np.pi * (s * y) / p).sum() for s in range(1, p))
        rhs = (p - 1) * N - p * int((y != 0).sum())
        assert abs(lhs - rhs) < 1e-6


def test_theta_real_part_identity(code31, code92):
    # for p = 3 mod 4: sum_s theta(s*a) = (p-1) Re(theta(a))
    rng = np.random.default_rng(29)
    for code in (code31, code92):
        for a_code in rng.integers(0, code.params.q**4, size=25):
            a = RingElement.from_code(code.params, int(a_code))
            total = sum(code.theta(code.scalar_mul(s, a))
                        for s in range(1, code.params.p))
            assert abs(total - 2 * code.theta(a).real) < 1e-6


def test_even_m_theta_scalar_invariance(code92):
    rng = np.random.default_rng(31)
    for a_code in rng.integers(0, 9**4, size=25):
        a = RingElement.from_code(code92.params, int(a_code))
        th = code92.theta(a)
        assert code92.theta(code92.scalar_mul(2, a)) == pytest.approx(th, abs=1e-6)


# ----------------------------------------------------------------------
# abelian structure
# ----------------------------------------------------------------------

def test_abelian_action_identity(code31):
    one = ring_element(code31.params, 1, 0, 0, 0)
    a = ring_element(code31.params, 2, 1, 0, 2)
    assert code31.abelian_action_check(one, a)


def test_abelian_action_random(code31, code92):
    rng = np.random.default_rng(37)
    for code in (code31, code92):
        q = code.params.q
        sq = np.flatnonzero(code.params.eta_table == 1)
        for _ in range(30):
            c = RingElement(code.params, int(rng.choice(sq)), int(rng.integers(q)),
                            int(rng.integers(q)), int(rng.integers(q)))
            a = RingElement.from_code(code.params, int(rng.integers(q**4)))
            assert code.abelian_action_check(c, a)


def test_abelian_action_rejects_non_members(code31):
    a = ring_element(code31.params, 1, 0, 0, 0)
    with pytest.raises(NotInL):
        code31.abelian_action_check(ring_element(code31.params, 0, 1, 0, 0), a)
    with pytest.raises(NotInL):
        # leading component 2 is a non-square mod 3
        code31.abelian_action_check(ring_element(code31.params, 2, 0, 0, 0), a)


def test_unit_multiplication_acts_block_linearly(code31, code92):
    # multiplying a codeword by 1+u turns Gray blocks (B0,B1,B2,B3) into
    # (B1, 2B1-B0, B3, 2B3-B2); membership in the code is preserved
    rng = np.random.default_rng(41)
    for code in (code31, code92):
        p, n = code.params.p, code.n_ring
        r = ring_element(code.params, 1, 1, 0, 0)
        for a_code in rng.integers(0, code.params.q**4, size=20):
            a = RingElement.from_code(code.params, int(a_code))
            b = code.gray_word(a).reshape(4, n)
            got = code.gray_word(a * r).reshape(4, n)
            want = np.stack([b[1], (2 * b[1] - b[0]) % p,
                             b[3], (2 * b[3] - b[2]) % p])
            assert np.array_equal(got, want)
