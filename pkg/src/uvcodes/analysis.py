"""Empirical verification of the structural claims: dual distance via
column-dependence and low-support searches, codeword minimality, and the
democratic/dictatorial secret-sharing dichotomy.

Two dual searches are reported side by side, because the Hamming dual of
the Gray image and the Gray image of the ring dual need not coincide in
general:

  * the Gray-domain scan classifies the dual distance of the p-ary code
    from its generator columns (zero column <-> 1, proportional pair
    <-> 2, neither <-> ">2");

  * the ring-domain search looks for vectors over the symbol alphabet R
    supported on at most two coordinates of L that are orthogonal to
    every generator codeword, reporting the minimum-Lee-weight one.

Witnesses re-verify from scratch: column proportionality is rechecked
componentwise, and ring witnesses are recomputed with full ring
arithmetic in R_m (the base alphabet embeds as the constant-coefficient
subring, so the products agree with the scan's mod-p arithmetic).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import kernels
from .code import DEFAULT_BUDGET, TraceCode, _rank_mod_p
from .errors import BudgetExceeded, Class1Anomaly, RankDeficient
from .ring import BaseRingElement, RingElement

DEMOCRATIC = "democratic"
DICTATORIAL = "dictatorial"


@dataclass
class RingDualWitness:
    """A low-support vector over R orthogonal to every generator codeword."""

    support: tuple[int, ...]
    values: tuple[BaseRingElement, ...]
    lee_weight: int


@dataclass
class DualDistanceReport:
    gray_class: Union[int, str]                      # 1, 2 or ">2"
    witness: Optional[tuple[int, int, int]] = None   # (i, j, lam): col_i = lam*col_j
    zero_column: Optional[int] = None
    ring_witness: Optional[RingDualWitness] = None
    support_one_witness: Optional[RingDualWitness] = None


def gray_dual_distance_class(G: np.ndarray, p: int) -> DualDistanceReport:
    """Dual-distance class of the p-ary code generated by G.

    Exact scan: a zero column puts a weight-1 word in the dual (class 1);
    otherwise an F_p-proportional column pair puts a weight-2 word in the
    dual (class 2, first witness in column index order); otherwise ">2".
    """
    G = np.asarray(G, dtype=np.int64) % p
    rows, n = G.shape
    if _rank_mod_p(G, p) < rows:
        raise RankDeficient("generator matrix is rank deficient")
    zero_cols = np.flatnonzero(~G.any(axis=0))
    if zero_cols.size:
        return DualDistanceReport(gray_class=1, zero_column=int(zero_cols[0]))

    inv_p = np.array([0] + [pow(v, p - 2, p) for v in range(1, p)], dtype=np.int64)
    lead_rows = np.argmax(G != 0, axis=0)
    lead_vals = G[lead_rows, np.arange(n)]
    canon = (G * inv_p[lead_vals][None, :]) % p

    _, group_ids = np.unique(canon.T, axis=0, return_inverse=True)
    order = np.argsort(group_ids, kind="stable")
    gid = group_ids[order]
    starts = np.flatnonzero(np.r_[True, gid[1:] != gid[:-1]])
    sizes = np.diff(np.r_[starts, len(gid)])
    pairs = [(int(order[s]), int(order[s + 1])) for s, z in zip(starts, sizes) if z >= 2]
    if not pairs:
        return DualDistanceReport(gray_class=">2")
    i, j = min(pairs)
    lam = int(lead_vals[i] * inv_p[lead_vals[j]] % p)
    assert np.array_equal(G[:, i], lam * G[:, j] % p)
    return DualDistanceReport(gray_class=2, witness=(i, j, lam))


# ----------------------------------------------------------------------
# low-support dual vectors over the symbol alphabet R
# ----------------------------------------------------------------------

def _symbol_quadruples(p: int) -> np.ndarray:
    """(p^4, 4) component table of R, indexed by packed symbol code."""
    b = np.indices((p, p, p, p)).reshape(4, -1).T
    return np.ascontiguousarray(b, dtype=np.int64)


def _value_products(w: np.ndarray, c: np.ndarray, p: int) -> np.ndarray:
    """Products w*c_col in R: w is (..., 4), c is (4, K, n); broadcast result
    has shape (..., 4, K, n)."""
    w0, w1, w2, w3 = (w[..., k, None, None] for k in range(4))
    c0, c1, c2, c3 = c
    return np.stack([
        w0 * c0 % p,
        (w0 * c1 + w1 * c0) % p,
        (w0 * c2 + w2 * c0) % p,
        (w0 * c3 + w1 * c2 + w2 * c1 + w3 * c0) % p,
    ], axis=-3)


def ring_dual_low_weight_search(code: TraceCode, max_support: int = 2,
                                budget: int = DEFAULT_BUDGET) -> Optional[RingDualWitness]:
    """Minimum-Lee-weight vector over R, supported on at most max_support
    coordinates of L, orthogonal to all 4m generator codewords; None if the
    searched space contains no such vector.

    Deterministic: minimizes (Lee weight, support size, support, value codes).
    The support-2 stage matches negated syndromes by increasing total weight,
    so it stops at the first achievable weight level.
    """
    if max_support not in (1, 2):
        raise ValueError("max_support must be 1 or 2")
    p = code.params.p
    gt = np.ascontiguousarray(code.generator_traces().transpose(1, 0, 2))  # (4, K, n)
    n = code.n_ring
    quad = _symbol_quadruples(p)
    lee = kernels.lee_table(p)
    n_values = p**4 - 1

    best: Optional[tuple] = None   # (lee, support_len, support, value_codes)

    # support 1: scan every nonzero symbol against every coordinate
    if n_values * code.K * n > budget:
        raise BudgetExceeded("support-1 dual scan exceeds budget")
    chunk = max(1, (1 << 22) // (code.K * n))
    for lo in range(1, p**4, chunk):
        hi = min(lo + chunk, p**4)
        prod = _value_products(quad[lo:hi], gt, p)       # (B, 4, K, n)
        ok = ~prod.any(axis=(1, 2))                      # (B, n)
        for bi, ji in zip(*np.nonzero(ok)):
            w_code = lo + int(bi)
            cand = (int(lee[w_code]), 1, (int(ji),), (w_code,))
            if best is None or cand < best:
                best = cand
    if max_support == 1:
        return _witness_from_tuple(best, quad, p)

    # support 2: syndrome matching by increasing total Lee weight
    classes = {c: np.flatnonzero(lee == c) for c in range(1, 5)}
    spent = 0
    for total in range(2, 9):
        if best is not None and best[0] <= total:
            break
        found_at_level: list[tuple] = []
        for c1 in range(1, 5):
            c2 = total - c1
            if not 1 <= c2 <= 4 or c1 > c2:
                continue
            spent += (len(classes[c1]) + len(classes[c2])) * n
            if spent > budget:
                raise BudgetExceeded("support-2 dual scan exceeds budget")
            table: dict[int, list[tuple[int, int]]] = {}
            for w_code, syn in _syndromes(classes[c1], quad, gt, p):
                for j in range(n):
                    table.setdefault(int(syn[j]), []).append((j, int(w_code)))
            for w_code, syn in _syndromes(classes[c2], quad, gt, p, negate=True):
                for j2 in range(n):
                    for j1, w1 in table.get(int(syn[j2]), ()):
                        if j1 == j2:
                            continue
                        if j1 < j2:
                            found_at_level.append((total, 2, (j1, j2), (w1, int(w_code))))
                        else:
                            found_at_level.append((total, 2, (j2, j1), (int(w_code), w1)))
        if found_at_level:
            cand = min(found_at_level)
            if best is None or cand < best:
                best = cand
            break
    return _witness_from_tuple(best, quad, p)


def _syndromes(w_codes: np.ndarray, quad: np.ndarray, gt: np.ndarray, p: int,
               negate: bool = False):
    """Yield (w_code, packed syndrome array over coordinates) per value."""
    K, n = gt.shape[1], gt.shape[2]
    big = (p**4) ** K > 2**62  # packed key would overflow int64
    for w_code in w_codes:
        prod = _value_products(quad[int(w_code)], gt, p)   # (4, K, n)
        if negate:
            prod = (-prod) % p
        packed = ((prod[0] * p + prod[1]) * p + prod[2]) * p + prod[3]  # (K, n)
        if big:
            syn = sum(packed[i].astype(object) * (p**4) ** i for i in range(K))
        else:
            syn = np.zeros(n, dtype=np.int64)
            base = 1
            for i in range(K):
                syn += packed[i] * base
                base *= p**4
        yield int(w_code), syn


def _witness_from_tuple(best, quad: np.ndarray, p: int) -> Optional[RingDualWitness]:
    if best is None:
        return None
    weight, _, support, value_codes = best
    values = tuple(BaseRingElement(p, *(int(c) for c in quad[w])) for w in value_codes)
    return RingDualWitness(support=support, values=values, lee_weight=weight)


def verify_ring_witness(code: TraceCode, witness: RingDualWitness) -> bool:
    """Recompute the orthogonality products with full R_m arithmetic.

    Base-ring values embed into R_m as constant polynomials (same codes),
    the products are taken in R_m, and the sum must be zero there.
    """
    params = code.params
    L = [RingElement(params, int(code.x0[j]), int(code.x1[j]), int(code.x2[j]),
                     int(code.x3[j])) for j in witness.support]
    zero = RingElement(params, 0, 0, 0, 0)
    for b in code.basis:
        acc = zero
        for x, w in zip(L, witness.values):
            coord = (b * x).big_trace()
            acc = acc + RingElement(params, w.b0, w.b1, w.b2, w.b3) * \
                RingElement(params, coord.b0, coord.b1, coord.b2, coord.b3)
        if not acc.is_zero():
            return False
    return True


def dual_report(code: TraceCode, budget: int = DEFAULT_BUDGET) -> DualDistanceReport:
    """Gray-domain classification plus the ring-domain low-support search."""
    report = gray_dual_distance_class(code.generator_matrix(), code.params.p)
    report.support_one_witness = ring_dual_low_weight_search(code, 1, budget)
    report.ring_witness = ring_dual_low_weight_search(code, 2, budget)
    return report


# ----------------------------------------------------------------------
# minimal codewords
# ----------------------------------------------------------------------

def ab_ratio_criterion(w_min: int, w_max: int, p: int) -> bool:
    """Sufficient minimality test: all nonzero codewords are minimal when
    p*w_min > (p-1)*w_max.  Integer arithmetic, no division."""
    if not 0 < w_min <= w_max:
        raise ValueError("need 0 < w_min <= w_max")
    return p * w_min > (p - 1) * w_max


@dataclass
class MinimalityReport:
    w_min: int
    w_max: int
    criterion_passed: bool
    brute_force_all_minimal: Optional[bool] = None
    non_minimal_witness: Optional[tuple[int, int]] = None  # packed ring codes (x, y)


def brute_force_minimality(code: TraceCode, budget: int = DEFAULT_BUDGET,
                           workers: int = 1,
                           backend: Optional[str] = None) -> MinimalityReport:
    """Scan every ordered pair of nonzero Gray codewords for strict support
    containment, excluding scalar associates.

    Supports are packed into uint64 bitmasks; the pair scan runs in codeword
    index order, so the first witness is deterministic.  Work is roughly
    p^4m * |L| evaluations plus (p^4m)^2 * N/64 mask words, which the budget
    must cover (intended for p=3, m=1 and similarly small codes).
    """
    params = code.params
    q, p = params.q, params.p
    total = q**4
    words = -(-code.N // 64)
    cost = total * code.n_ring + (total - 1) ** 2 * words
    if cost > budget:
        raise BudgetExceeded(
            f"minimality scan needs ~{cost} operations, budget is {budget}")

    wv = code.weight_vector(workers=workers, budget=budget, backend=backend)
    weights = wv[1:].copy()

    masks = np.zeros((total - 1, words), dtype=np.uint64)
    padded = np.zeros(words * 64, dtype=np.uint8)
    for a_code in range(1, total):
        word = code.gray_word(RingElement.from_code(params, a_code))
        padded[:code.N] = word != 0
        masks[a_code - 1] = np.packbits(padded, bitorder="little").view(np.uint64)

    # scalar associates: index of s*a for each codeword a and s in 2..p-1
    codes = np.arange(1, total, dtype=np.int64)
    comps = np.stack([codes // q**3, codes // q**2 % q, codes // q % q, codes % q])
    assoc = np.empty((total - 1, p - 2), dtype=np.int64)
    for si, s in enumerate(range(2, p)):
        sc = params.mul_table[s]
        scaled = ((sc[comps[0]] * q + sc[comps[1]]) * q + sc[comps[2]]) * q + sc[comps[3]]
        assoc[:, si] = scaled - 1

    ix, iy = kernels.cover_scan(masks, weights.astype(np.int64), assoc, backend=backend)
    w_min, w_max = int(weights.min()), int(weights.max())
    report = MinimalityReport(
        w_min=w_min, w_max=w_max,
        criterion_passed=ab_ratio_criterion(w_min, w_max, p))
    if ix < 0:
        report.brute_force_all_minimal = True
    else:
        report.brute_force_all_minimal = False
        report.non_minimal_witness = (ix + 1, iy + 1)
    return report


def verify_non_minimal_witness(code: TraceCode, witness: tuple[int, int]) -> bool:
    """Check from scratch that codeword x covers codeword y, y not an
    associate of x."""
    x_code, y_code = witness
    x = code.gray_word(RingElement.from_code(code.params, x_code))
    y = code.gray_word(RingElement.from_code(code.params, y_code))
    if not np.all(x[y != 0] != 0):
        return False
    return all(code.scalar_mul(s, RingElement.from_code(code.params, x_code)).code
               != y_code for s in range(1, code.params.p))


# ----------------------------------------------------------------------
# secret sharing dichotomy
# ----------------------------------------------------------------------

def sss_classify(report: DualDistanceReport) -> str:
    """Massey-scheme access structure: dual distance 2 puts some users in
    every coalition (dictatorial); dual distance >= 3 treats all users
    alike (democratic).  Assumes minimality has been established."""
    if report.gray_class == 1:
        raise Class1Anomaly("zero generator column: dual distance 1")
    if report.gray_class == 2:
        return DICTATORIAL
    return DEMOCRATIC
