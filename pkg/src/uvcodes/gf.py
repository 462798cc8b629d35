"""Arithmetic in the finite field GF(p^m) for odd primes p.

Elements are represented by integer codes in [0, p^m): the element with
polynomial coefficients (c_0, ..., c_{m-1}), low degree first, has code
sum(c_i * p**i).  This encoding is a bijection and defines the canonical
element order used by every enumeration in the package.

A ``FieldParams`` instance fixes the modulus polynomial and precomputes
dense numpy lookup tables:

    add_table[x, y]   code of x + y
    mul_table[x, y]   code of x * y
    neg_table[x]      code of -x
    inv_table[x]      code of x^-1          (0 kept as sentinel for x = 0)
    tr_table[x]       absolute trace, a scalar in [0, p)
    eta_table[x]      quadratic character: +1 square, -1 non-square, 0 at 0

so that all downstream work, including the hot enumeration kernels,
reduces to integer table lookups.  Table construction is O(q^2) time and
memory for q = p^m, which is the intended desk scale (q <= a few
thousand).

The square test uses exponentiation x^((q-1)/2) rather than discrete
logs, so no generator search is needed anywhere.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import CompositeP, DivisionByZero, ParamsMismatch, ReducibleModulus, ZeroArgument


def is_odd_prime(n: int) -> bool:
    """Trial-division primality check, adequate for desk-scale p."""
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ----------------------------------------------------------------------
# Polynomial helpers over GF(p).  Polynomials are lists of ints in
# [0, p), low degree first, with no trailing-zero normalization needed
# by the callers below.
# ----------------------------------------------------------------------

def _poly_rem(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num modulo the monic polynomial den, over GF(p)."""
    num = [c % p for c in num]
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            for i in range(dd + 1):
                num[k - dd + i] = (num[k - dd + i] - c * den[i]) % p
    return num[:dd]


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    """All monic polynomials of the given degree, in low-degree-first
    lexicographic order of their coefficient vectors."""
    for code in range(p**degree):
        coeffs = []
        r = code
        for _ in range(degree):
            coeffs.append(r % p)
            r //= p
        yield coeffs + [1]


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by all lower-degree monic polynomials.

    Exponential in the degree; fine for the small m this package targets.
    """
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for div in _monic_polys(p, d):
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p),
    coefficients compared low degree first."""
    for cand in _monic_polys(p, m):
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldParams:
    """A concrete realization of GF(p^m) with precomputed tables.

    Immutable after construction; the numpy tables are marked read-only
    so instances can be shared freely across threads.
    """

    def __init__(self, p: int, m: int, modulus: Optional[Sequence[int]] = None):
        if not is_odd_prime(p):
            raise CompositeP(f"p={p} is not an odd prime")
        if m < 1:
            raise ValueError(f"extension degree m={m} must be >= 1")
        if modulus is None:
            modulus = default_modulus(p, m)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ReducibleModulus(
                    f"modulus must be monic of degree {m}, got {modulus}")
            if not _is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} factors over GF({p})")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self._build_tables()

    # ------------------------------------------------------------------
    # table construction
    # ------------------------------------------------------------------

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        pow_p = p ** np.arange(m, dtype=np.int64)

        # coefficient matrix: row x holds the m coefficients of code x
        coeffs = np.empty((q, m), dtype=np.int64)
        r = np.arange(q, dtype=np.int64)
        for i in range(m):
            coeffs[:, i] = r % p
            r //= p
        self.coeff_matrix = coeffs

        self.add_table = ((coeffs[:, None, :] + coeffs[None, :, :]) % p) @ pow_p
        self.neg_table = ((-coeffs) % p) @ pow_p

        # powers of t reduced mod the modulus, up to degree 2m-2
        red = np.zeros((2 * m - 1, m), dtype=np.int64)
        cur = [1] + [0] * (m - 1)
        for k in range(2 * m - 1):
            red[k] = cur
            cur = _poly_rem([0] + cur, self.modulus, p)

        # multiplication by convolution + reduction, in row blocks to
        # bound the intermediate (block, q, 2m-1) accumulator
        mul = np.empty((q, q), dtype=np.int64)
        block = max(1, (1 << 22) // (q * (2 * m - 1)))
        for lo in range(0, q, block):
            hi = min(lo + block, q)
            acc = np.zeros((hi - lo, q, 2 * m - 1), dtype=np.int64)
            for i in range(m):
                for j in range(m):
                    acc[:, :, i + j] += coeffs[lo:hi, None, i] * coeffs[None, :, j]
            mul[lo:hi] = ((acc @ red) % p) @ pow_p
        self.mul_table = mul

        inv = np.argmax(mul == 1, axis=1)
        inv[0] = 0  # sentinel, never a valid inverse
        self.inv_table = inv

        # eta via vectorized square-and-multiply to the exponent (q-1)/2
        self.eta_table = np.where(self._pow_codes(np.arange(q), (q - 1) // 2) == 1, 1, -1)
        self.eta_table[0] = 0
        assert int((self.eta_table == -1).sum()) == (q - 1) // 2

        # trace: sum of the m Frobenius images, then the constant coefficient
        total = np.zeros((q, m), dtype=np.int64)
        cur_codes = np.arange(q, dtype=np.int64)
        for _ in range(m):
            total = (total + coeffs[cur_codes]) % p
            cur_codes = self._pow_codes(cur_codes, p)
        assert not total[:, 1:].any(), "trace image left the prime field"
        self.tr_table = total[:, 0].copy()

        for t in (self.add_table, self.neg_table, self.mul_table,
                  self.inv_table, self.eta_table, self.tr_table, self.coeff_matrix):
            t.setflags(write=False)

    def _pow_codes(self, codes: np.ndarray, e: int) -> np.ndarray:
        """Elementwise codes**e via square-and-multiply on the mul table."""
        result = np.ones(len(codes), dtype=np.int64)
        base = np.asarray(codes, dtype=np.int64).copy()
        while e:
            if e & 1:
                result = self.mul_table[result, base]
            base = self.mul_table[base, base]
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # element access
    # ------------------------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Build an element from an int code or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.params is not self and value.params != self:
                raise ParamsMismatch("element from a different field")
            return FieldElement(self, value.code)
        if isinstance(value, (int, np.integer)):
            code = int(value)
            if not 0 <= code < self.q:
                raise ValueError(f"code {code} outside [0, {self.q})")
            return FieldElement(self, code)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(self, self.enc(coeffs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """The residue class of t (equals p as a code); for m = 1 this is 0."""
        return FieldElement(self, self.p % self.q)

    def elements(self) -> Iterator["FieldElement"]:
        for code in range(self.q):
            yield FieldElement(self, code)

    def enc(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (c % self.p)
        return code

    def dec(self, code: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coeff_matrix[code])

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldParams)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldParams(p={self.p}, m={self.m}, modulus={list(self.modulus)})"


class FieldElement:
    """An element of GF(p^m), identified by its integer code."""

    __slots__ = ("params", "code")

    def __init__(self, params: FieldParams, code: int):
        self.params = params
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.params.dec(self.code)

    def _check(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            other = self.params.element(other)
        elif other.params is not self.params and other.params != self.params:
            raise ParamsMismatch("operands from different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.params, int(self.params.add_table[self.code, other.code]))

    def __sub__(self, other):
        other = self._check(other)
        neg = int(self.params.neg_table[other.code])
        return FieldElement(self.params, int(self.params.add_table[self.code, neg]))

    def __neg__(self):
        return FieldElement(self.params, int(self.params.neg_table[self.code]))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.params, int(self.params.mul_table[self.code, other.code]))

    def inv(self) -> "FieldElement":
        if self.code == 0:
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.params, int(self.params.inv_table[self.code]))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inv()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result, base = 1, self.code
        mul = self.params.mul_table
        while e:
            if e & 1:
                result = int(mul[result, base])
            base = int(mul[base, base])
            e >>= 1
        return FieldElement(self.params, result)

    def tr(self) -> int:
        return int(self.params.tr_table[self.code])

    def eta(self) -> int:
        if self.code == 0:
            raise ZeroArgument("eta(0) is undefined")
        return int(self.params.eta_table[self.code])

    def is_zero(self) -> bool:
        return self.code == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self.params.element(int(other))
        return (isinstance(other, FieldElement)
                and self.params == other.params and self.code == other.code)

    def __hash__(self) -> int:
        return hash((self.params, self.code))

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                terms.append(t if c == 1 else f"{c}{t}")
        return "+".join(terms) if terms else "0"


# ----------------------------------------------------------------------
# module-level operations
# ----------------------------------------------------------------------

def field_new(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> FieldParams:
    """Construct GF(p^m), defaulting to the smallest irreducible modulus."""
    return FieldParams(p, m, modulus)


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def neg(x: FieldElement) -> FieldElement:
    return -x


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def tr(x: FieldElement) -> int:
    """Absolute trace down to GF(p): x + x^p + ... + x^(p^(m-1))."""
    return x.tr()


def eta(x: FieldElement) -> int:
    """Quadratic character: +1 on squares, -1 on non-squares of GF(p^m)*."""
    return x.eta()


def squares_and_nonsquares(params: FieldParams):
    """The square / non-square partition of GF(p^m)*, each list ascending
    by element code."""
    squares = [FieldElement(params, int(c))
               for c in np.flatnonzero(params.eta_table == 1)]
    nonsquares = [FieldElement(params, int(c))
                  for c in np.flatnonzero(params.eta_table == -1)]
    return squares, nonsquares


def additive_character_sum(z: FieldElement) -> complex:
    """sum over x in GF(p^m) of omega^tr(z*x), omega = exp(2*pi*i/p).

    Vanishes for every nonzero z; equals p^m at z = 0.
    """
    params = z.params
    vals = params.tr_table[params.mul_table[z.code]]
    counts = np.bincount(vals, minlength=params.p)
    omega = np.exp(2j * np.pi * np.arange(params.p) / params.p)
    return complex(np.dot(counts, omega))
