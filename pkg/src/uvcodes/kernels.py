"""Hot enumeration kernels, with a numba path and a pure-numpy fallback.

Backend selection: the environment variable UVCODES_BACKEND may be set
to "numba" or "numpy"; unset (or "auto") picks numba when it imports and
falls back to numpy otherwise.  Both paths compute identical integer
results; benchmarks/bench_backends.py times them against each other.

The central kernel walks codeword indices a = 0 .. q^4-1, decodes the
four field components, multiplies against every element of L through
the field lookup tables, traces down to GF(p), and accumulates Lee
weights via a precomputed p^4-entry weight table.  Everything is int64
table lookups, which is why the nested loop JITs well.

Kernels are pure functions of their array arguments and release the GIL
under numba, so worker-level parallelism is plain ThreadPoolExecutor
chunking over the index space; partial results merge by concatenation,
making output independent of worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

BACKEND_ENV = "UVCODES_BACKEND"

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAS_NUMBA = False


def _resolve_backend(name: str | None = None) -> str:
    choice = (name or os.environ.get(BACKEND_ENV, "auto")).lower()
    if choice == "auto":
        return "numba" if HAS_NUMBA else "numpy"
    if choice not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {choice!r}; use 'numba' or 'numpy'")
    if choice == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return choice


_ACTIVE = _resolve_backend()


def active_backend() -> str:
    return _ACTIVE


def set_backend(name: str) -> str:
    """Override the active backend (mainly for tests and benchmarks)."""
    global _ACTIVE
    _ACTIVE = _resolve_backend(name)
    return _ACTIVE


def _select(backend: str | None) -> str:
    return _ACTIVE if backend is None else _resolve_backend(backend)


def lee_table(p: int) -> np.ndarray:
    """Lee weight of every base-ring symbol, indexed by the packed code
    ((b0*p + b1)*p + b2)*p + b3."""
    b = np.indices((p, p, p, p)).reshape(4, -1)
    gray = np.stack([b[3], (b[2] + b[3]) % p, (b[1] + b[3]) % p,
                     (b[0] + b[1] + b[2] + b[3]) % p])
    return (gray != 0).sum(axis=0).astype(np.int64)


# ----------------------------------------------------------------------
# Lee weight of Ev(a) for a block of codeword indices
# ----------------------------------------------------------------------

def _weight_block_numpy(mul, add, trv, lee, x0, x1, x2, x3, q, p, start, stop):
    out = np.empty(stop - start, dtype=np.int64)
    q2, q3 = q * q, q * q * q
    for k, a in enumerate(range(start, stop)):
        a0, r = divmod(a, q3)
        a1, r = divmod(r, q2)
        a2, a3 = divmod(r, q)
        m0 = mul[a0]
        c0 = m0[x0]
        c1 = add[m0[x1], mul[a1][x0]]
        c2 = add[m0[x2], mul[a2][x0]]
        c3 = add[add[m0[x3], mul[a1][x2]], add[mul[a2][x1], mul[a3][x0]]]
        t = ((trv[c0] * p + trv[c1]) * p + trv[c2]) * p + trv[c3]
        out[k] = lee[t].sum()
    return out


if HAS_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def _weight_block_numba(mul, add, trv, lee, x0, x1, x2, x3, q, p, start, stop):  # pragma: no cover - compiled
        n = x0.shape[0]
        out = np.empty(stop - start, dtype=np.int64)
        q2 = q * q
        q3 = q2 * q
        for a in range(start, stop):
            a0 = a // q3
            r = a - a0 * q3
            a1 = r // q2
            r -= a1 * q2
            a2 = r // q
            a3 = r - a2 * q
            w = 0
            for j in range(n):
                xj0 = x0[j]
                c0 = mul[a0, xj0]
                c1 = add[mul[a0, x1[j]], mul[a1, xj0]]
                c2 = add[mul[a0, x2[j]], mul[a2, xj0]]
                c3 = add[add[mul[a0, x3[j]], mul[a1, x2[j]]],
                         add[mul[a2, x1[j]], mul[a3, xj0]]]
                w += lee[((trv[c0] * p + trv[c1]) * p + trv[c2]) * p + trv[c3]]
            out[a - start] = w
        return out


def weight_vector(mul, add, trv, lee, x0, x1, x2, x3, q, p,
                  start, stop, workers: int = 1, backend: str | None = None) -> np.ndarray:
    """Lee weights of Ev(a) for a = start .. stop-1, chunked over workers.

    Chunks are contiguous index ranges merged back in order, so the result
    is byte-identical for any worker count.
    """
    fn = _weight_block_numba if _select(backend) == "numba" else _weight_block_numpy
    args = (mul, add, trv, lee, x0, x1, x2, x3, q, p)
    if workers <= 1 or stop - start < 2 * workers:
        return fn(*args, start, stop)
    bounds = np.linspace(start, stop, workers + 1).astype(np.int64)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda b: fn(*args, int(b[0]), int(b[1])),
                              zip(bounds[:-1], bounds[1:])))
    return np.concatenate(parts)


# ----------------------------------------------------------------------
# pairwise support-containment scan for the minimality check
# ----------------------------------------------------------------------

def _cover_scan_numpy(masks, weights, assoc):
    count, words = masks.shape
    for ix in range(count):
        candidates = ~np.any(masks & ~masks[ix], axis=1)
        candidates &= weights <= weights[ix]
        candidates[ix] = False
        row = assoc[ix]
        candidates[row[row >= 0]] = False  # -1 entries mean "no associate"
        hits = np.flatnonzero(candidates)
        if hits.size:
            return ix, int(hits[0])
    return -1, -1


if HAS_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def _cover_scan_numba(masks, weights, assoc):  # pragma: no cover - compiled
        count, words = masks.shape
        nass = assoc.shape[1]
        for ix in range(count):
            wx = weights[ix]
            for iy in range(count):
                if iy == ix or weights[iy] > wx:
                    continue
                skip = False
                for k in range(nass):
                    if assoc[ix, k] == iy:
                        skip = True
                        break
                if skip:
                    continue
                covered = True
                for w in range(words):
                    if masks[iy, w] & ~masks[ix, w]:
                        covered = False
                        break
                if covered:
                    return ix, iy
        return -1, -1


def cover_scan(masks: np.ndarray, weights: np.ndarray, assoc: np.ndarray,
               backend: str | None = None) -> tuple[int, int]:
    """First pair (ix, iy), in ascending index order, with support(y)
    contained in support(x) and y not an associate of x; (-1, -1) if none.

    masks: (count, words) uint64 support bitmasks of the nonzero codewords.
    assoc: (count, k) indices of the nonidentical scalar multiples of each
    codeword; entries of -1 are ignored.
    """
    fn = _cover_scan_numba if _select(backend) == "numba" else _cover_scan_numpy
    return tuple(int(v) for v in fn(masks, weights, assoc))


def warmup(backend: str | None = None) -> None:
    """Force JIT compilation on tiny inputs so timed runs measure steady state."""
    if _select(backend) != "numba":
        return
    one = np.zeros(1, dtype=np.int64)
    tbl = np.zeros((1, 1), dtype=np.int64)
    _weight_block_numba(tbl, tbl, one, np.zeros(16, dtype=np.int64),
                        one, one, one, one, 1, 1, 0, 1)
    _cover_scan_numba(np.zeros((1, 1), dtype=np.uint64), one,
                      np.zeros((1, 1), dtype=np.int64))
