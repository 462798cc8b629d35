"""The local ring R_m = GF(p^m)[u,v]/(u^2, v^2, uv-vu) and its base ring
R = R_1 over GF(p).

A RingElement is a quadruple (a0, a1, a2, a3) of field elements standing
for a0 + a1*u + a2*v + a3*uv.  Units are exactly the elements with
a0 != 0; the complement M = {a0 = 0} is the unique maximal ideal.  The
defining set L of the trace code consists of the units whose leading
component is a nonzero square.

The componentwise trace Tr maps R_m onto R; a BaseRingElement is the
image: a quadruple of scalars mod p.  Its Lee weight is the Hamming
weight of the Gray image (d, c+d, b+d, a+b+c+d).

Elements are ordered by the packed code
    ((enc(a0)*q + enc(a1))*q + enc(a2))*q + enc(a3),   q = p^m,
so ascending code order is exactly lexicographic order on the component
encodings, which fixes the coordinate order of every generator matrix
produced downstream.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .errors import ParamsMismatch
from .gf import FieldElement, FieldParams


class BaseRingElement:
    """Element b0 + b1*u + b2*v + b3*uv of R = GF(p)[u,v]/(u^2, v^2)."""

    __slots__ = ("p", "b0", "b1", "b2", "b3")

    def __init__(self, p: int, b0: int, b1: int, b2: int, b3: int):
        self.p = p
        self.b0 = b0 % p
        self.b1 = b1 % p
        self.b2 = b2 % p
        self.b3 = b3 % p

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.b0, self.b1, self.b2, self.b3)

    def gray_symbols(self) -> tuple[int, int, int, int]:
        """Gray image (d, c+d, b+d, a+b+c+d) of a single ring symbol."""
        p = self.p
        return (self.b3,
                (self.b2 + self.b3) % p,
                (self.b1 + self.b3) % p,
                (self.b0 + self.b1 + self.b2 + self.b3) % p)

    def lee_weight(self) -> int:
        return sum(1 for s in self.gray_symbols() if s)

    def is_zero(self) -> bool:
        return not (self.b0 or self.b1 or self.b2 or self.b3)

    def __add__(self, other: "BaseRingElement") -> "BaseRingElement":
        self._check(other)
        return BaseRingElement(self.p, self.b0 + other.b0, self.b1 + other.b1,
                               self.b2 + other.b2, self.b3 + other.b3)

    def __neg__(self) -> "BaseRingElement":
        return BaseRingElement(self.p, -self.b0, -self.b1, -self.b2, -self.b3)

    def __sub__(self, other: "BaseRingElement") -> "BaseRingElement":
        return self + (-other)

    def __mul__(self, other: "BaseRingElement") -> "BaseRingElement":
        self._check(other)
        x0, x1, x2, x3 = self.as_tuple()
        y0, y1, y2, y3 = other.as_tuple()
        return BaseRingElement(self.p,
                               x0 * y0,
                               x0 * y1 + x1 * y0,
                               x0 * y2 + x2 * y0,
                               x0 * y3 + x1 * y2 + x2 * y1 + x3 * y0)

    def _check(self, other) -> None:
        if not isinstance(other, BaseRingElement) or other.p != self.p:
            raise ParamsMismatch("base ring operands with different p")

    def __eq__(self, other) -> bool:
        return (isinstance(other, BaseRingElement) and self.p == other.p
                and self.as_tuple() == other.as_tuple())

    def __hash__(self) -> int:
        return hash((self.p,) + self.as_tuple())

    def __repr__(self) -> str:
        return f"BaseRingElement(p={self.p}, {self.as_tuple()})"


def lee_weight(b: BaseRingElement) -> int:
    """Lee weight of one symbol: Hamming weight of its Gray image, in [0, 4]."""
    return b.lee_weight()


class RingElement:
    """Element a0 + a1*u + a2*v + a3*uv of R_m, components stored as codes."""

    __slots__ = ("params", "c0", "c1", "c2", "c3")

    def __init__(self, params: FieldParams, c0: int, c1: int, c2: int, c3: int):
        self.params = params
        self.c0 = c0
        self.c1 = c1
        self.c2 = c2
        self.c3 = c3

    @classmethod
    def from_code(cls, params: FieldParams, code: int) -> "RingElement":
        q = params.q
        c3 = code % q
        code //= q
        c2 = code % q
        code //= q
        c1 = code % q
        c0 = code // q
        return cls(params, c0, c1, c2, c3)

    @property
    def code(self) -> int:
        q = self.params.q
        return ((self.c0 * q + self.c1) * q + self.c2) * q + self.c3

    def components(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.params, c)
                     for c in (self.c0, self.c1, self.c2, self.c3))

    def _check(self, other) -> None:
        if not isinstance(other, RingElement):
            raise ParamsMismatch("expected a RingElement")
        if other.params is not self.params and other.params != self.params:
            raise ParamsMismatch("operands from different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        add = self.params.add_table
        return RingElement(self.params,
                           int(add[self.c0, other.c0]), int(add[self.c1, other.c1]),
                           int(add[self.c2, other.c2]), int(add[self.c3, other.c3]))

    def __neg__(self) -> "RingElement":
        neg = self.params.neg_table
        return RingElement(self.params, int(neg[self.c0]), int(neg[self.c1]),
                           int(neg[self.c2]), int(neg[self.c3]))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        # c0 = x0y0; c1 = x0y1 + x1y0; c2 = x0y2 + x2y0;
        # c3 = x0y3 + x1y2 + x2y1 + x3y0   (u^2 = v^2 = 0 kill the rest)
        self._check(other)
        mul, add = self.params.mul_table, self.params.add_table
        x0, x1, x2, x3 = self.c0, self.c1, self.c2, self.c3
        y0, y1, y2, y3 = other.c0, other.c1, other.c2, other.c3
        r0 = mul[x0, y0]
        r1 = add[mul[x0, y1], mul[x1, y0]]
        r2 = add[mul[x0, y2], mul[x2, y0]]
        r3 = add[add[mul[x0, y3], mul[x1, y2]], add[mul[x2, y1], mul[x3, y0]]]
        return RingElement(self.params, int(r0), int(r1), int(r2), int(r3))

    def is_unit(self) -> bool:
        return self.c0 != 0

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1 or self.c2 or self.c3)

    def big_trace(self) -> BaseRingElement:
        trt = self.params.tr_table
        return BaseRingElement(self.params.p, int(trt[self.c0]), int(trt[self.c1]),
                               int(trt[self.c2]), int(trt[self.c3]))

    def swap_uv(self) -> "RingElement":
        """Image under the ring automorphism exchanging u and v."""
        return RingElement(self.params, self.c0, self.c2, self.c1, self.c3)

    def inv(self) -> "RingElement":
        """Inverse of a unit: with a0 inverted, the nilpotent tail unwinds."""
        if not self.is_unit():
            raise ZeroDivisionError("non-unit has no inverse")
        params = self.params
        mul, neg, add = params.mul_table, params.neg_table, params.add_table
        i0 = int(params.inv_table[self.c0])
        # (a0 + n)^-1 = a0^-1 - a0^-2 n + a0^-3 n^2 with n the nilpotent part;
        # expand componentwise: b1 = -a1/a0^2, b2 = -a2/a0^2,
        # b3 = (2 a1 a2 / a0 - a3) / a0^2
        i0sq = int(mul[i0, i0])
        b1 = int(neg[mul[self.c1, i0sq]])
        b2 = int(neg[mul[self.c2, i0sq]])
        a1a2 = int(mul[self.c1, self.c2])
        twice = int(add[a1a2, a1a2])
        inner = int(add[mul[twice, i0], neg[self.c3]])
        b3 = int(mul[inner, i0sq])
        out = RingElement(params, i0, b1, b2, b3)
        assert (self * out).code == RingElement(params, 1, 0, 0, 0).code
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingElement) and self.params == other.params
                and (self.c0, self.c1, self.c2, self.c3)
                == (other.c0, other.c1, other.c2, other.c3))

    def __hash__(self) -> int:
        return hash((self.params, self.c0, self.c1, self.c2, self.c3))

    def __repr__(self) -> str:
        a0, a1, a2, a3 = self.components()
        return f"({a0}) + ({a1})u + ({a2})v + ({a3})uv"


def ring_element(params: FieldParams, a0, a1, a2, a3) -> RingElement:
    """Build a ring element from components given as codes, coefficient
    sequences, or FieldElements."""
    codes = [params.element(a).code for a in (a0, a1, a2, a3)]
    return RingElement(params, *codes)


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def ring_neg(x: RingElement) -> RingElement:
    return -x


def is_unit(x: RingElement) -> bool:
    return x.is_unit()


def big_trace(x: RingElement) -> BaseRingElement:
    """Componentwise field trace R_m -> R."""
    return x.big_trace()


def l_component_codes(params: FieldParams):
    """Component code arrays (x0, x1, x2, x3) of L in ascending packed-code
    order; the shared coordinate layout of all enumeration kernels."""
    q = params.q
    sq = np.flatnonzero(params.eta_table == 1).astype(np.int64)
    rest = np.arange(q**3, dtype=np.int64)
    x0 = np.repeat(sq, q**3)
    x1 = np.tile(rest // (q * q), len(sq))
    x2 = np.tile((rest // q) % q, len(sq))
    x3 = np.tile(rest % q, len(sq))
    return x0, x1, x2, x3


def enumerate_L(params: FieldParams) -> list[RingElement]:
    """The defining set L = {a0 in Q} as RingElements, lexicographic order."""
    x0, x1, x2, x3 = l_component_codes(params)
    return [RingElement(params, int(a), int(b), int(c), int(d))
            for a, b, c, d in zip(x0, x1, x2, x3)]


def enumerate_M(params: FieldParams) -> list[RingElement]:
    """The maximal ideal M = {a0 = 0}, lexicographic order."""
    q = params.q
    out = []
    for code in range(q**3):
        c1 = code // (q * q)
        c2 = (code // q) % q
        c3 = code % q
        out.append(RingElement(params, 0, c1, c2, c3))
    return out


def elements(params: FieldParams) -> Iterator[RingElement]:
    """All of R_m in ascending packed-code order."""
    for code in range(params.q**4):
        yield RingElement.from_code(params, code)
