"""Construction of the trace code C(m,p) and its Gray image.

The code is the image of the evaluation map Ev(a) = (Tr(a*x)) for x
running over the defining set L (units with square leading component),
as a ranges over all of R_m.  Coordinates live in the base ring R;
applying the Gray map blockwise gives a p-ary linear code of length
N = 4*|L| and dimension 4m.

Two independent routes to the Lee weight of a codeword are implemented:
the direct route (sum of per-symbol Lee weights through lookup tables)
and the character-sum route (complex exponential sums over the Gray
image), and they are required to agree exactly.

The exhaustive weight distribution enumerates all p^(4m) codewords with
the kernels module; the packed codeword index space [0, q^4) is split
into contiguous chunks per worker and partial results are merged in
index order, so output never depends on worker count.  Codeword indices
are packed so that indices 1 .. q-1 are exactly the uv-line {alpha*uv},
which the class-based mode exploits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import BudgetExceeded, NotInL, NumericalDrift, ParamsMismatch, RankDeficient, UVCodesError
from .gf import FieldParams
from .ring import BaseRingElement, RingElement, l_component_codes

DEFAULT_BUDGET = 2**31
EXPORT_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def gray(codeword: Sequence[BaseRingElement]) -> np.ndarray:
    """Gray image of a vector over R in block layout: the n d-components,
    then c+d, then b+d, then a+b+c+d.  Length 4n."""
    arr = np.array([s.as_tuple() for s in codeword], dtype=np.int64).T
    if arr.size == 0:
        return np.zeros(0, dtype=np.int64)
    p = codeword[0].p
    return _gray_from_traces(arr, p)


def _gray_from_traces(t: np.ndarray, p: int) -> np.ndarray:
    b0, b1, b2, b3 = t
    return np.concatenate([b3, (b2 + b3) % p, (b1 + b3) % p,
                           (b0 + b1 + b2 + b3) % p])


@dataclass
class WeightDistribution:
    """Exact map weight -> frequency over all p^(4m) codewords."""

    entries: dict[int, int]
    total: int

    def __post_init__(self) -> None:
        if sum(self.entries.values()) != self.total:
            raise UVCodesError("weight frequencies do not sum to the code size")
        if self.entries.get(0) != 1:
            raise UVCodesError("weight 0 must occur exactly once")
        if any(w < 0 for w in self.entries):
            raise UVCodesError("negative weight")

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.entries.items())

    @property
    def min_distance(self) -> int:
        return min(w for w in self.entries if w > 0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeightDistribution)
                and self.entries == other.entries and self.total == other.total)


class TraceCode:
    """Frozen construction artifact: parameters, the ordered defining set L,
    and the 4m x N Gray generator matrix (verified full rank on build)."""

    def __init__(self, params: FieldParams, budget: int = DEFAULT_BUDGET):
        self.params = params
        q, m = params.q, params.m
        self.n_ring = (q - 1) // 2 * q**3
        self.N = 4 * self.n_ring
        self.K = 4 * m
        if self.n_ring * (self.K + 4) > budget:
            raise BudgetExceeded(
                f"materializing L (|L|={self.n_ring}) exceeds budget {budget}")
        self.x0, self.x1, self.x2, self.x3 = l_component_codes(params)
        self.l_codes = (((self.x0 * q + self.x1) * q + self.x2) * q + self.x3)
        self.lee4 = kernels.lee_table(params.p)

        # power basis of R_m over R: t^i, t^i*u, t^i*v, t^i*uv
        self.basis: list[RingElement] = []
        for slot in range(4):
            for i in range(m):
                comp = [0, 0, 0, 0]
                comp[slot] = params.p**i
                self.basis.append(RingElement(params, *comp))

        rows = [self.gray_word(b).astype(np.int8) for b in self.basis]
        self._gen = np.vstack(rows)
        if _rank_mod_p(self._gen, params.p) < self.K:
            raise RankDeficient("Gray images of the basis evaluations are dependent")

    # ------------------------------------------------------------------
    # evaluation and weights
    # ------------------------------------------------------------------

    def _check_element(self, a: RingElement) -> None:
        if not isinstance(a, RingElement) or a.params != self.params:
            raise ParamsMismatch("element does not belong to this code's ring")

    def _traces(self, a: RingElement) -> np.ndarray:
        """Component traces of (a*x) for x in L, as a (4, n_ring) array."""
        self._check_element(a)
        mul, add = self.params.mul_table, self.params.add_table
        trv = self.params.tr_table
        a0, a1, a2, a3 = a.c0, a.c1, a.c2, a.c3
        c0 = mul[a0, self.x0]
        c1 = add[mul[a0, self.x1], mul[a1, self.x0]]
        c2 = add[mul[a0, self.x2], mul[a2, self.x0]]
        c3 = add[add[mul[a0, self.x3], mul[a1, self.x2]],
                 add[mul[a2, self.x1], mul[a3, self.x0]]]
        return np.stack([trv[c0], trv[c1], trv[c2], trv[c3]])

    def evaluate(self, a: RingElement) -> list[BaseRingElement]:
        """Ev(a) = (Tr(a*x)) over the ordered defining set."""
        t = self._traces(a)
        p = self.params.p
        return [BaseRingElement(p, int(t[0, j]), int(t[1, j]), int(t[2, j]), int(t[3, j]))
                for j in range(self.n_ring)]

    def gray_word(self, a: RingElement) -> np.ndarray:
        return _gray_from_traces(self._traces(a), self.params.p)

    def lee_weight_of(self, a: RingElement) -> int:
        t = self._traces(a)
        p = self.params.p
        packed = ((t[0] * p + t[1]) * p + t[2]) * p + t[3]
        return int(self.lee4[packed].sum())

    def scalar_mul(self, s: int, a: RingElement) -> RingElement:
        """s*a for a prime-field scalar s (constant polynomials have code s)."""
        mul = self.params.mul_table
        s %= self.params.p
        return RingElement(self.params, int(mul[s, a.c0]), int(mul[s, a.c1]),
                           int(mul[s, a.c2]), int(mul[s, a.c3]))

    # ------------------------------------------------------------------
    # generator matrix
    # ------------------------------------------------------------------

    def generator_matrix(self) -> np.ndarray:
        """K x N matrix over GF(p) whose rows are the Gray images of the
        basis evaluations."""
        return self._gen.copy()

    def generator_traces(self) -> np.ndarray:
        """Base-ring coordinates of the K generator codewords, (K, 4, n)."""
        return np.stack([self._traces(b) for b in self.basis])

    def generator_matrix_text(self) -> str:
        """One line per row, one character per symbol (0-9 then a-z)."""
        p = self.params.p
        if p > len(EXPORT_DIGITS):
            raise UVCodesError(f"text export supports p <= {len(EXPORT_DIGITS)}")
        lut = np.frombuffer(EXPORT_DIGITS.encode(), dtype=np.uint8)
        lines = [lut[row.astype(np.int64)].tobytes().decode() for row in self._gen]
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------
    # weight distribution
    # ------------------------------------------------------------------

    def weight_vector(self, workers: int = 1, budget: int = DEFAULT_BUDGET,
                      backend: Optional[str] = None) -> np.ndarray:
        """Lee weights of all p^(4m) codewords, indexed by packed codeword code."""
        q = self.params.q
        total = q**4
        if total * self.n_ring > budget:
            raise BudgetExceeded(
                f"exhaustive enumeration needs {total * self.n_ring} coordinate "
                f"evaluations, budget is {budget}")
        return kernels.weight_vector(
            self.params.mul_table, self.params.add_table, self.params.tr_table,
            self.lee4, self.x0, self.x1, self.x2, self.x3, q, self.params.p,
            0, total, workers=workers, backend=backend)

    def weight_distribution(self, mode: str = "exhaustive", workers: int = 1,
                            budget: int = DEFAULT_BUDGET, samples: int = 32,
                            seed: int = 0,
                            backend: Optional[str] = None) -> WeightDistribution:
        """Exact Lee weight distribution.

        exhaustive: enumerate every a in R_m.
        by_class:   one weight per structural class (zero, the two halves of
                    the uv-line split by the quadratic character, and the
                    generic rest), with per-class constancy checked on a
                    seeded sample before multiplying by the class sizes.
        """
        q = self.params.q
        total = q**4
        if mode == "exhaustive":
            wv = self.weight_vector(workers=workers, budget=budget, backend=backend)
            hist = np.bincount(wv, minlength=self.N + 1)
            entries = {int(w): int(f) for w, f in enumerate(hist) if f}
            return WeightDistribution(entries, total)
        if mode != "by_class":
            raise ValueError(f"unknown mode {mode!r}")

        rng = np.random.default_rng(seed)
        sq = np.flatnonzero(self.params.eta_table == 1)
        nsq = np.flatnonzero(self.params.eta_table == -1)
        generic = rng.integers(q, total, size=samples, dtype=np.int64)
        classes = [
            (_subsample(sq, samples, rng), (q - 1) // 2, "uv-line, square alpha"),
            (_subsample(nsq, samples, rng), (q - 1) // 2, "uv-line, non-square alpha"),
            (generic, total - q, "generic"),
        ]
        n_reps = sum(len(codes) for codes, _, _ in classes)
        if n_reps * self.n_ring > budget:
            raise BudgetExceeded("class sampling exceeds budget")
        entries = {0: 1}
        for codes, size, label in classes:
            weights = {self.lee_weight_of(RingElement.from_code(self.params, int(c)))
                       for c in codes}
            if len(weights) != 1:
                raise UVCodesError(f"class '{label}' is not weight-constant: {weights}")
            w = weights.pop()
            entries[w] = entries.get(w, 0) + size
        return WeightDistribution(entries, total)

    # ------------------------------------------------------------------
    # character sums
    # ------------------------------------------------------------------

    def _symbol_counts(self, a: RingElement) -> np.ndarray:
        t = self._traces(a)
        p = self.params.p
        word = _gray_from_traces(t, p)
        return np.bincount(word, minlength=p)

    def theta(self, a: RingElement) -> complex:
        """Exponential sum over the Gray image of Ev(a)."""
        p = self.params.p
        counts = self._symbol_counts(a)
        omega = np.exp(2j * np.pi * np.arange(p) / p)
        return complex(np.dot(counts, omega))

    def weight_via_character_sum(self, a: RingElement) -> int:
        """Independent weight oracle: ((p-1)N - sum_s theta(s*a)) / p,
        with each theta(s*a) evaluated from scratch."""
        p = self.params.p
        acc = 0j
        for s in range(1, p):
            acc += self.theta(self.scalar_mul(s, a))
        w = ((p - 1) * self.N - acc) / p
        if abs(w.imag) > 1e-3 or abs(w.real - round(w.real)) > 1e-3:
            raise NumericalDrift(f"character-sum weight drifted: {w}")
        return int(round(w.real))

    # ------------------------------------------------------------------
    # abelian structure
    # ------------------------------------------------------------------

    def abelian_action_check(self, c: RingElement, a: RingElement) -> bool:
        """Does multiplying coordinates by c permute Ev(a) into Ev(a*c)?"""
        self._check_element(c)
        if not c.is_unit() or self.params.eta_table[c.c0] != 1:
            raise NotInL(f"{c!r} is not in the defining set")
        q = self.params.q
        mul, add = self.params.mul_table, self.params.add_table
        r0 = mul[c.c0, self.x0]
        r1 = add[mul[c.c0, self.x1], mul[c.c1, self.x0]]
        r2 = add[mul[c.c0, self.x2], mul[c.c2, self.x0]]
        r3 = add[add[mul[c.c0, self.x3], mul[c.c1, self.x2]],
                 add[mul[c.c2, self.x1], mul[c.c3, self.x0]]]
        prod = ((r0 * q + r1) * q + r2) * q + r3
        sigma = np.searchsorted(self.l_codes, prod)
        if not np.array_equal(self.l_codes[sigma], prod):
            raise UVCodesError("L is not closed under multiplication by c")
        ev_a = self._traces(a)
        ev_ac = self._traces(a * c)
        return bool(np.array_equal(ev_ac, ev_a[:, sigma]))


def _subsample(codes: np.ndarray, samples: int, rng: np.random.Generator) -> np.ndarray:
    if len(codes) <= samples:
        return codes
    return np.sort(rng.choice(codes, size=samples, replace=False))


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Row rank over GF(p) by Gaussian elimination (early exit at full rank)."""
    a = (mat.astype(np.int64) % p).copy()
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        piv = rank + int(np.argmax(a[rank:, col] != 0))
        if a[piv, col] == 0:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, col]), p - 2, p)) % p
        for r in range(rows):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
    return rank
