"""Coefficient-free cluster algebras, tube friezes and the X_delta checks.

Mutation directions are 1-based, matching the variable names x1..xn; matrix
entries are accessed 0-based through ``ExchangeMatrix.rows``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .arith import (
    QQ,
    ZZ,
    LaurentPolynomial,
    NotDivisibleError,
    SpecializationError,
    lp_specialize,
)
from .frieze import (
    ConsistencyError,
    DegenerateFriezeError,
    Frieze,
    FriezeError,
    chebyshev_extend,
    growth_coefficient,
)


class NotSkewSymmetrizableError(ValueError):
    pass


class LaurentPhenomenonError(ArithmeticError):
    """An exchange relation failed to divide exactly."""


class InvalidTubeError(ValueError):
    pass


# -- exchange matrices ------------------------------------------------------


def check_skew_symmetrizable(B: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Minimal positive integer diagonal D with D*B skew-symmetric.

    Ratios d_j / d_i = -b_ij / b_ji are propagated along the nonzero
    entries of B; each connected component is then scaled to coprime
    integers.
    """
    n = len(B)
    if any(len(row) != n for row in B):
        raise NotSkewSymmetrizableError("matrix is not square")
    for i in range(n):
        if B[i][i] != 0:
            raise NotSkewSymmetrizableError(f"diagonal entry b_{i + 1}{i + 1} is nonzero")
        for j in range(i + 1, n):
            a, b = B[i][j], B[j][i]
            if (a == 0) != (b == 0) or (a != 0 and (a > 0) == (b > 0)):
                raise NotSkewSymmetrizableError(
                    f"entries b_{i + 1}{j + 1}={a} and b_{j + 1}{i + 1}={b} violate the sign condition"
                )
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if B[i][j] == 0:
                    continue
                want = -d[i] * B[i][j] / B[j][i]
                if d[j] is None:
                    d[j] = want
                    component.append(j)
                    stack.append(j)
                elif d[j] != want:
                    raise NotSkewSymmetrizableError(
                        f"inconsistent symmetrizer ratios around index {j + 1}"
                    )
        scale = lcm(*(d[i].denominator for i in component))
        ints = [int(d[i] * scale) for i in component]
        g = gcd(*ints)
        for i, v in zip(component, ints):
            d[i] = Fraction(v // g)
    return tuple(int(x) for x in d)


class ExchangeMatrix:
    """Immutable skew-symmetrizable integer matrix."""

    __slots__ = ("rows", "n", "_hash")

    def __init__(self, rows: Sequence[Sequence[int]], _checked=False):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.n = len(self.rows)
        self._hash = None
        if not _checked:
            check_skew_symmetrizable(self.rows)

    @property
    def symmetrizer(self) -> tuple[int, ...]:
        return check_skew_symmetrizable(self.rows)

    def mutate(self, k: int) -> "ExchangeMatrix":
        k -= 1
        B = self.rows
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if i == k or j == k:
                    row.append(-B[i][j])
                else:
                    bik, bkj = B[i][k], B[k][j]
                    row.append(B[i][j] + max(bik, 0) * max(bkj, 0) - max(-bik, 0) * max(-bkj, 0))
            out.append(tuple(row))
        return ExchangeMatrix(out, _checked=True)

    def permuted(self, order: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        """Rows and columns reordered so position ``a`` holds old index ``order[a]``."""
        B = self.rows
        return tuple(tuple(B[p][q] for q in order) for p in order)

    def __eq__(self, other):
        return isinstance(other, ExchangeMatrix) and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"ExchangeMatrix({[list(r) for r in self.rows]})"


# -- seeds and mutation -------------------------------------------------------


@dataclass(frozen=True)
class Seed:
    matrix: ExchangeMatrix
    variables: tuple[LaurentPolynomial, ...]

    @classmethod
    def initial(cls, B) -> "Seed":
        if not isinstance(B, ExchangeMatrix):
            B = ExchangeMatrix(B)
        return cls(B, LaurentPolynomial.variables(B.n))

    @property
    def n(self) -> int:
        return self.matrix.n

    def key(self):
        """Label-free identity: variables sorted canonically, matrix permuted to match."""
        order = sorted(range(self.n), key=lambda i: self.variables[i].sort_key())
        return (tuple(self.variables[i] for i in order), self.matrix.permuted(order))


def mutate(s: Seed, k: int) -> Seed:
    if not 1 <= k <= s.n:
        raise IndexError(f"mutation direction {k} out of range 1..{s.n}")
    B = s.matrix.rows
    col = k - 1
    one = LaurentPolynomial.constant(s.n, 1)
    pos, neg = one, one
    for i, x in enumerate(s.variables):
        b = B[i][col]
        if b > 0:
            pos = pos * x ** b
        elif b < 0:
            neg = neg * x ** (-b)
    try:
        new = (pos + neg).exact_div(s.variables[col])
    except NotDivisibleError as exc:
        raise LaurentPhenomenonError(f"mutation in direction {k} is not Laurent: {exc}") from None
    variables = s.variables[:col] + (new,) + s.variables[col + 1:]
    return Seed(s.matrix.mutate(k), variables)


def mutate_sequence(s: Seed, path: Iterable[int]) -> Seed:
    for k in path:
        s = mutate(s, k)
    return s


def d_vector(p: LaurentPolynomial) -> tuple[int, ...]:
    """Denominator exponents: d_i is minus the least exponent of x_i."""
    return tuple(-m for m in p.min_exponents())


# -- exchange graph search ---------------------------------------------------------


@dataclass
class SearchResult:
    found: dict
    paths: dict
    depths: dict
    missing: tuple
    max_depth: int
    seeds_visited: int

    @property
    def complete(self) -> bool:
        return not self.missing

    @property
    def depth_reached(self) -> int:
        return max(self.depths.values(), default=0)


def bfs_find(B, targets: Iterable[Sequence[int]], max_depth: int,
             directions: Sequence[int] | None = None) -> SearchResult:
    """Breadth-first search of the exchange graph for prescribed d-vectors.

    Seeds are deduplicated without regard to labeling.  Within a level every
    seed is kept under its lexicographically smallest mutation path and every
    target hit under the smallest path producing it, so the result does not
    depend on ``directions`` (the order in which neighbours are tried).
    Targets not reached within ``max_depth`` are listed in ``missing``.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    seed = Seed.initial(B)
    n = seed.n
    directions = tuple(directions) if directions is not None else tuple(range(1, n + 1))
    if sorted(directions) != list(range(1, n + 1)):
        raise ValueError("directions must be a permutation of 1..n")
    wanted = {tuple(t) for t in targets}
    for t in wanted:
        if len(t) != n:
            raise ValueError(f"target {t} does not have {n} entries")
    found, paths, depths = {}, {}, {}
    for v in seed.variables:
        dv = d_vector(v)
        if dv in wanted:
            found[dv], paths[dv], depths[dv] = v, (), 0

    visited = {seed.key()}
    frontier = [((), seed)]
    depth = 0
    while depth < max_depth and len(found) < len(wanted) and frontier:
        depth += 1
        nxt = {}
        hits = {}
        for path, s in frontier:
            for k in directions:
                if path and path[-1] == k:
                    continue
                child = mutate(s, k)
                p = path + (k,)
                dv = d_vector(child.variables[k - 1])
                if dv in wanted and dv not in found:
                    if dv not in hits or p < hits[dv][0]:
                        hits[dv] = (p, child.variables[k - 1])
                key = child.key()
                if key in visited:
                    continue
                if key not in nxt or p < nxt[key][0]:
                    nxt[key] = (p, child)
        for dv, (p, v) in hits.items():
            found[dv], paths[dv], depths[dv] = v, p, depth
        visited.update(nxt)
        frontier = sorted(nxt.values(), key=lambda t: t[0])
    missing = tuple(sorted(wanted - found.keys()))
    return SearchResult(found, paths, depths, missing, max_depth, len(visited))


# -- tubes -------------------------------------------------------------------------


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class TubeSpec:
    mouth: tuple[tuple[int, ...], ...]
    delta: tuple[int, ...]

    def __post_init__(self):
        mouth = tuple(tuple(int(x) for x in b) for b in self.mouth)
        delta = tuple(int(x) for x in self.delta)
        if not mouth:
            raise InvalidTubeError("a tube needs at least one mouth root")
        if any(len(b) != len(delta) for b in mouth):
            raise InvalidTubeError("mouth roots and delta must have the same length")
        object.__setattr__(self, "mouth", mouth)
        object.__setattr__(self, "delta", delta)

    @property
    def rank(self) -> int:
        return len(self.mouth)


@dataclass(frozen=True)
class TubeRoots:
    rows: tuple[tuple[tuple[int, ...], ...], ...]
    diamonds_checked: int


def tube_roots(t: TubeSpec) -> TubeRoots:
    """Rows 1..r-1 of the truncated tube; row s, entry j is beta_j + ... + beta_{j+s-1}.

    The additive diamond rule is checked on every diamond down to row r,
    and row r must consist of delta alone.
    """
    r = t.rank
    zero = tuple(0 for _ in t.delta)
    rows = [tuple(zero for _ in range(r))]
    for s in range(1, r + 1):
        rows.append(tuple(_vadd(rows[s - 1][j], t.mouth[(j + s - 1) % r]) for j in range(r)))
    checked = 0
    for s in range(1, r):
        for j in range(r):
            top, left, right, bottom = rows[s - 1][(j + 1) % r], rows[s][j], rows[s][(j + 1) % r], rows[s + 1][j]
            if _vadd(top, bottom) != _vadd(left, right):
                raise InvalidTubeError(f"diamond rule fails below row {s}, entry {j + 1}")
            checked += 1
    for j, v in enumerate(rows[r], start=1):
        if v != t.delta:
            raise InvalidTubeError(f"row {r} entry {j} is {v}, expected delta {t.delta}")
    return TubeRoots(tuple(rows[1:r]), checked)


def tube_frieze(mouth_vars: Sequence[LaurentPolynomial]) -> Frieze:
    """The universal frieze of rank r specialized at the mouth variables."""
    return Frieze(tuple(mouth_vars))


# -- X_delta and friends ---------------------------------------------------------------


def x_delta(f: Frieze):
    """X_delta read off a tube frieze, checked for every mouth position.

    For position i this is a[1,i] a[r-1,i+1] - a[r-2,i+1] - a[r-2,i+2];
    a rank-1 frieze returns its quiddity entry.
    """
    r = f.period
    if r == 1:
        return f.quiddity[0]
    values = [
        f.entry(1, i) * f.entry(r - 1, i + 1) - f.entry(r - 2, i + 1) - f.entry(r - 2, i + 2)
        for i in range(1, r + 1)
    ]
    for i, v in enumerate(values[1:], start=2):
        if v != values[0]:
            raise ConsistencyError(f"X_delta differs between mouth positions 1 and {i}")
    return values[0]


@dataclass(frozen=True)
class ThetaElement:
    level: int
    value: object


def higher_theta(xd, K: int) -> list[ThetaElement]:
    """X_{k delta} for k = 0..K: 2, X_delta, then X_{(k+2)} = X_delta X_{k+1} - X_k."""
    seq = chebyshev_extend(xd, K)
    return [ThetaElement(k, v) for k, v in enumerate(seq.values)]


@dataclass(frozen=True)
class RSCheck:
    index: int
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class RSReport:
    x_delta: object
    checks: tuple[RSCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok


def rs_identity_check(f: Frieze, xd=None) -> RSReport:
    """a[r-1,i] a[r-1,i+1] == a[r-2,i+1]^2 + X_delta a[r-2,i+1] + 1 for every i."""
    r = f.period
    if r < 2:
        raise ValueError("the identity needs a frieze of period at least 2")
    if xd is None:
        xd = x_delta(f)
    checks = []
    for i in range(1, r + 1):
        low = f.entry(r - 2, i + 1)
        lhs = f.entry(r - 1, i) * f.entry(r - 1, i + 1)
        rhs = low * low + xd * low + f.ring.one
        checks.append(RSCheck(i, lhs, rhs))
    return RSReport(xd, tuple(checks))


@dataclass
class TubeVerdict:
    rank: int
    growth: object
    x_delta: object
    proof_values: list = field(default_factory=list)


@dataclass
class TheoremReport:
    tubes: list[TubeVerdict]
    common: object
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self):
        return self.ok


def _proof_values(f: Frieze):
    # (a[r-1,i] a[r-1,i+1] - 1) / a[r-2,i+1] - a[r-2,i+1]
    r = f.period
    out = []
    for i in range(1, r + 1):
        low = f.entry(r - 2, i + 1)
        top = f.entry(r - 1, i) * f.entry(r - 1, i + 1) - f.ring.one
        out.append(f.ring.exact_div(top, low) - low)
    return out


def main_theorem_check(tube_friezes: Sequence[Frieze]) -> TheoremReport:
    """Every tube frieze must have growth coefficient X_delta, one value for all.

    Growth coefficients are taken with respect to the tube rank (the
    frieze's declared period).
    """
    if not tube_friezes:
        raise ValueError("need at least one tube frieze")
    verdicts = []
    mismatches = []
    for t, f in enumerate(tube_friezes, start=1):
        try:
            g = growth_coefficient(f, 1, declared_period=True)
            xd = x_delta(f)
        except (ConsistencyError, FriezeError) as exc:
            mismatches.append(f"tube {t}: {exc}")
            continue
        v = TubeVerdict(f.period, g, xd)
        if f.period >= 2:
            v.proof_values = _proof_values(f)
        verdicts.append(v)
    common = verdicts[0].growth if verdicts else None
    for t, v in enumerate(verdicts, start=1):
        for label, value in [("growth coefficient", v.growth), ("X_delta", v.x_delta)] + [
            (f"proof identity at i={i}", pv) for i, pv in enumerate(v.proof_values, start=1)
        ]:
            if value != common:
                mismatches.append(f"tube {t}: {label} = {value} differs from {common}")
    return TheoremReport(verdicts, common, mismatches)


@dataclass
class SpecializationReport:
    ok: bool
    quiddities: list
    growth: list
    x_delta_value: object
    violations: list[str]
    depth: int

    def __bool__(self):
        return self.ok


def _is_positive_int(v):
    return v > 0 and Fraction(v).denominator == 1


def specialization_check(mouth_vars_per_tube: Sequence[Sequence[LaurentPolynomial]],
                         a: Sequence, depth: int = 8, x_delta_poly=None) -> SpecializationReport:
    """Test the positivity/integrality condition at the point ``a``.

    Each tube's mouth variables are evaluated at ``a`` (exactly, over the
    rationals); the results must form the quiddity of a frieze of positive
    integers, checked down to ``depth``.  When all tubes pass, their growth
    coefficients are compared with X_delta evaluated at ``a``.
    Raises ``SpecializationError`` when ``a`` puts a zero in a denominator.
    """
    point = [Fraction(x) for x in a]
    violations = []
    quiddities = []
    for t, mouth in enumerate(mouth_vars_per_tube, start=1):
        if len(point) != mouth[0].nvars:
            raise SpecializationError(f"expected {mouth[0].nvars} values, got {len(point)}")
        q = [lp_specialize(v, point, QQ) for v in mouth]
        quiddities.append(q)
        for j, v in enumerate(q, start=1):
            if not _is_positive_int(v):
                violations.append(f"tube {t}, row 1, column {j}: {v} is not a positive integer")
    if x_delta_poly is None:
        for mouth in mouth_vars_per_tube:
            if len(mouth) >= 2:
                x_delta_poly = x_delta(tube_frieze(mouth))
                break
    xd_value = lp_specialize(x_delta_poly, point, QQ) if x_delta_poly is not None else None
    growth = []
    if not violations:
        for t, q in enumerate(quiddities, start=1):
            f = Frieze([int(v) for v in q], ZZ)
            bad = False
            for i in range(2, depth + 1):
                try:
                    row = f.row(i)
                except (DegenerateFriezeError, FriezeError) as exc:
                    violations.append(f"tube {t}, row {i}: {exc}")
                    bad = True
                    break
                for j, v in enumerate(row, start=1):
                    if v <= 0:
                        violations.append(f"tube {t}, row {i}, column {j}: {v} is not positive")
                        bad = True
                if bad:
                    break
            if not bad:
                growth.append(growth_coefficient(f, 1, declared_period=True))
    ok = not violations
    if ok and xd_value is not None:
        for t, g in enumerate(growth, start=1):
            if g != xd_value:
                ok = False
                violations.append(f"tube {t}: growth coefficient {g} differs from X_delta(a) = {xd_value}")
    if xd_value is not None and xd_value.denominator == 1:
        xd_value = int(xd_value)
    return SpecializationReport(ok, quiddities, growth, xd_value, violations, depth)
