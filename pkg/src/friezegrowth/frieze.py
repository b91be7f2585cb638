"""Periodic infinite friezes over a commutative ring.

Entries are addressed as ``a[i, j]`` with row ``i >= -1`` and column ``j`` any
integer, reduced modulo the period ``r``; the quiddity row is row 1 and its
entries are ``a[1, 1], ..., a[1, r]``.  Row 0 is all ones and row -1 all
zeros, so every row below the quiddity follows from the diamond rule

    a[i+1, j] = (a[i, j] * a[i, j+1] - 1) / a[i-1, j+1].
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any, Sequence

from .arith import NotDivisibleError, ring_of


class FriezeError(Exception):
    pass


class DegenerateFriezeError(FriezeError):
    """A zero entry blocks the diamond rule."""


class InconsistentQuiddityError(FriezeError):
    """A diamond division was not exact."""


class ConsistencyError(FriezeError):
    """A quantity that must be column independent was not."""


class Frieze:
    """An r-periodic infinite frieze generated lazily from its quiddity row.

    Rows are cached as they are computed.  Reads that extend the cache take
    a per-frieze lock, so one instance can be shared between threads.
    """

    def __init__(self, quiddity: Sequence[Any], ring=None):
        q = tuple(quiddity)
        if not q:
            raise ValueError("quiddity row must have at least one entry")
        if ring is None:
            ring = ring_of(q[0])
        q = tuple(ring.coerce(x) for x in q)
        self._check_quiddity(q, ring)
        self.ring = ring
        self.period = len(q)
        r = self.period
        # _rows[i + 1] is row i
        self._rows = [(ring.zero,) * r, (ring.one,) * r, q]
        self._lock = threading.Lock()

    def _check_quiddity(self, q, ring):
        for j, x in enumerate(q, start=1):
            if ring.is_zero(x):
                raise DegenerateFriezeError(f"quiddity entry a[1,{j}] is zero")

    @property
    def quiddity(self) -> tuple:
        return self._rows[2]

    @property
    def depth(self) -> int:
        """Deepest row currently cached."""
        return len(self._rows) - 2

    def _next_row(self):
        r = self.period
        ring = self.ring
        i = self.depth
        cur, prev = self._rows[-1], self._rows[-2]
        out = []
        for j in range(r):
            den = prev[(j + 1) % r]
            if ring.is_zero(den):
                raise DegenerateFriezeError(
                    f"zero entry a[{i - 1},{(j + 1) % r + 1}] blocks row {i + 1}"
                )
            num = cur[j] * cur[(j + 1) % r] - ring.one
            try:
                out.append(ring.exact_div(num, den))
            except NotDivisibleError:
                raise InconsistentQuiddityError(
                    f"a[{i},{j + 1}]*a[{i},{(j + 1) % r + 1}] - 1 is not divisible by "
                    f"a[{i - 1},{(j + 1) % r + 1}]"
                ) from None
        return tuple(out)

    def _ensure(self, depth):
        if depth <= self.depth:
            return
        with self._lock:
            while self.depth < depth:
                self._rows.append(self._next_row())

    def row(self, i: int) -> tuple:
        """Row ``i`` as ``(a[i,1], ..., a[i,r])``."""
        if i < -1:
            raise IndexError(f"row index {i} is above the frieze")
        self._ensure(i)
        return self._rows[i + 1]

    def rows(self, depth: int) -> list[tuple]:
        """Rows 1 through ``depth``."""
        self._ensure(depth)
        return self._rows[2:depth + 2]

    def entry(self, i: int, j: int):
        return self.row(i)[(j - 1) % self.period]

    def __getitem__(self, ij):
        i, j = ij
        return self.entry(i, j)

    def display_row(self, i: int) -> tuple:
        """Row ``i`` rotated to start where it appears in a staggered drawing.

        Entry ``a[i, j]`` sits at horizontal offset ``2j + i``; this returns
        the ``r`` entries of row ``i`` whose offsets start at the leftmost
        slot under the first quiddity entry, ``j = 1 - (i - 1) // 2``.
        """
        start = 1 - (i - 1) // 2
        return tuple(self.entry(i, j) for j in range(start, start + self.period))

    def __repr__(self):
        return f"Frieze(quiddity={list(self.quiddity)!r}, ring={self.ring!r})"


class HomogeneousFrieze(Frieze):
    """Rank-1 frieze following a[i+1] = z*a[i] - a[i-1]."""

    def __init__(self, z, ring=None):
        super().__init__((z,), ring)

    def _check_quiddity(self, q, ring):
        # the linear rule never divides, so zero is allowed here
        pass

    def _next_row(self):
        cur, prev = self._rows[-1], self._rows[-2]
        return (self.quiddity[0] * cur[0] - prev[0],)


def frieze_entry(f: Frieze, i: int, j: int):
    return f.entry(i, j)


def minimal_period(q) -> int:
    """Smallest divisor ``d`` of ``len(q)`` with ``q`` invariant under shifting by ``d``."""
    if isinstance(q, Frieze):
        q = q.quiddity
    q = tuple(q)
    r = len(q)
    for d in range(1, r + 1):
        if r % d == 0 and all(q[j] == q[j % d] for j in range(r)):
            return d
    return r


def growth_coefficient(f: Frieze, k: int = 1, declared_period: bool = False):
    """s_k = a[rk, j] - a[rk-2, j+1], checked for every column j.

    ``r`` is the minimal period of the quiddity unless ``declared_period`` is
    set, in which case the frieze's own period is used.
    """
    if k < 0:
        raise ValueError("growth coefficient index must be nonnegative")
    if k == 0:
        return f.ring.one + f.ring.one
    r = f.period if declared_period else minimal_period(f.quiddity)
    values = [f.entry(r * k, j) - f.entry(r * k - 2, j + 1) for j in range(1, r + 1)]
    first = values[0]
    for j, v in enumerate(values[1:], start=2):
        if v != first:
            raise ConsistencyError(
                f"s_{k} depends on the column: j=1 gives {first}, j={j} gives {v}"
            )
    return first


@dataclass(frozen=True)
class GrowthSequence:
    values: tuple

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def chebyshev_extend(s1, K: int, ring=None) -> GrowthSequence:
    """s_0 = 2, s_1 given, s_{k+2} = s_1 s_{k+1} - s_k, up to s_K."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    ring = ring or ring_of(s1)
    s1 = ring.coerce(s1)
    vals = [ring.one + ring.one, s1]
    while len(vals) < K + 1:
        vals.append(s1 * vals[-1] - vals[-2])
    return GrowthSequence(tuple(vals[:K + 1]))


@dataclass(frozen=True)
class UnimodularityReport:
    ok: bool
    depth: int
    failure: tuple[int, int] | None = None
    value: Any = None

    def __bool__(self):
        return self.ok


def verify_unimodularity(f: Frieze, depth: int) -> UnimodularityReport:
    """Check every diamond whose lowest entry lies in rows up to ``depth``.

    Reads the row cache as is, so a tampered cache is reported rather than
    silently recomputed.
    """
    f.row(depth)
    rows = f._rows
    r = f.period
    one = f.ring.one
    for i in range(0, depth):
        up, mid, down = rows[i], rows[i + 1], rows[i + 2]
        for j in range(r):
            jn = (j + 1) % r
            v = mid[j] * mid[jn] - up[jn] * down[j]
            if v != one:
                return UnimodularityReport(False, depth, (i, j + 1), v)
    return UnimodularityReport(True, depth)


def homogeneous_frieze(z, depth: int = 0, ring=None) -> HomogeneousFrieze:
    f = HomogeneousFrieze(z, ring)
    f.row(max(depth, 1))
    return f
