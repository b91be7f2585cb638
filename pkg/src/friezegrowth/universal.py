"""The universal infinite frieze and its continuant entries.

Entry ``a[i, j]`` of the universal frieze is the continuant of
``z_j, ..., z_{j+i-1}``: the determinant of the tridiagonal matrix with that
diagonal and ones beside it.  Polynomials in the ``z``'s are ordinary
``LaurentPolynomial`` values with nonnegative exponents.

Two indexing modes share every function here.  With ``r`` given, variable
indices are reduced modulo ``r`` and the ring has ``r`` variables
``z_1..z_r``.  With ``r=None`` indices are used as they are; the ring then
has ``nvars`` variables (by default just enough to hold ``z_j..z_{j+i-1}``),
which needs ``j >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import LaurentPolynomial
from .frieze import ConsistencyError


def z_names(n: int) -> list[str]:
    return [f"z_{k + 1}" for k in range(n)]


def _resolve(j, i, r, nvars):
    if r is not None:
        if r < 1:
            raise ValueError("period must be positive")
        n = r if nvars is None else nvars

        def slot(k):
            return (k - 1) % r
    else:
        if j < 1:
            raise ValueError("non-periodic indexing needs j >= 1")
        n = max(j + i - 1, 1) if nvars is None else nvars

        def slot(k):
            return k - 1
    return n, slot


def continuant(j: int, i: int, r: int | None = None, nvars: int | None = None) -> LaurentPolynomial:
    """a[i, j] of the universal frieze via K_i = z_{j+i-1} K_{i-1} - K_{i-2}."""
    if i < -1:
        raise ValueError("continuant size must be >= -1")
    n, slot = _resolve(j, i, r, nvars)
    prev = LaurentPolynomial.constant(n, 0)
    cur = LaurentPolynomial.constant(n, 1)
    if i == -1:
        return prev
    for k in range(j, j + i):
        prev, cur = cur, LaurentPolynomial.variable(n, slot(k)) * cur - prev
    return cur


def _matchings(length, cyclic):
    """Yield sets of disjoint adjacent pairs on positions ``0..length-1``.

    Pairs are given by their first position ``p`` (pairing ``p`` with
    ``p+1``, or with ``0`` when ``p == length-1`` on a cycle).
    """
    def path(start, stop):
        # matchings of the path start..stop-1
        if stop - start < 2:
            yield ()
            return
        for rest in path(start + 1, stop):
            yield rest
        for rest in path(start + 2, stop):
            yield (start,) + rest

    if not cyclic or length < 2:
        yield from path(0, length)
        return
    # either the wrap-around pair (length-1, 0) is used or it is not
    yield from path(0, length)
    for rest in path(1, length - 1):
        yield (length - 1,) + rest


def _expand(j, i, r, nvars, cyclic):
    n, slot = _resolve(j, i, r, nvars)
    terms = {}
    for pairs in _matchings(i, cyclic):
        covered = set()
        for p in pairs:
            covered.add(p)
            covered.add((p + 1) % i)
        e = [0] * n
        for pos in range(i):
            if pos not in covered:
                e[slot(j + pos)] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + (-1) ** len(pairs)
    return LaurentPolynomial(n, terms)


def monomial_expansion(j: int, i: int, r: int | None = None, nvars: int | None = None) -> LaurentPolynomial:
    """a[i, j] built by deleting disjoint adjacent pairs from z_j ... z_{j+i-1}."""
    if i < 0:
        raise ValueError("monomial expansion needs i >= 0")
    return _expand(j, i, r, nvars, cyclic=False)


def cyclic_growth_poly(j: int, i: int, r: int | None = None, nvars: int | None = None) -> LaurentPolynomial:
    """a[i, j] - a[i-2, j+1], with the wrap-around pair (z_{j+i-1}, z_j) allowed."""
    if i < 2:
        raise ValueError("cyclic expansion needs i >= 2")
    return _expand(j, i, r, nvars, cyclic=True)


def continuant_difference(j: int, i: int, r: int | None = None, nvars: int | None = None) -> LaurentPolynomial:
    """a[i, j] - a[i-2, j+1] computed from two continuants."""
    if r is None and nvars is None:
        nvars = max(j + i - 1, 1)
    return continuant(j, i, r, nvars) - continuant(j + 1, i - 2, r, nvars)


@dataclass(frozen=True)
class SplitCheck:
    ok: bool
    lhs: LaurentPolynomial
    rhs: LaurentPolynomial

    def __bool__(self):
        return self.ok


def splitting_identity_check(i: int, j: int, l: int, r: int | None = None) -> SplitCheck:
    """Compare a[i,j] with a[l,j] a[i-l,l+j] - a[l-1,j] a[i-l-1,l+j+1]."""
    if not 1 <= l <= i:
        raise ValueError("need 1 <= l <= i")
    n = None if r is not None else max(j + i - 1, 1)
    lhs = continuant(j, i, r, n)
    rhs = (continuant(j, l, r, n) * continuant(l + j, i - l, r, n)
           - continuant(j, l - 1, r, n) * continuant(l + j + 1, i - l - 1, r, n))
    return SplitCheck(lhs == rhs, lhs, rhs)


def universal_growth(k: int, r: int) -> LaurentPolynomial:
    """s_k of the universal r-periodic frieze, checked for every column."""
    if k < 1 or r < 1:
        raise ValueError("need k >= 1 and r >= 1")
    values = [continuant_difference(j, r * k, r) for j in range(1, r + 1)]
    for j, v in enumerate(values[1:], start=2):
        if v != values[0]:
            raise ConsistencyError(f"universal s_{k} differs between columns 1 and {j}")
    return values[0]


def universal_quiddity(r: int) -> tuple[LaurentPolynomial, ...]:
    return LaurentPolynomial.variables(r)
