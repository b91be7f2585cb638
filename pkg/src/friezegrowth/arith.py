"""Exact arithmetic: integers and sparse Laurent polynomials over the integers.

Integers are Python ints.  ``LaurentPolynomial`` stores a dict from exponent
tuples to nonzero int coefficients; the heavy lifting is delegated to
:mod:`friezegrowth.kernels`.  Every carrier is wrapped by a small ring object
(``ZZ``, ``QQ``, ``LaurentRing``) that supplies ``zero``, ``one`` and
``exact_div`` so the frieze code can stay generic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import kernels


class MalformedInputError(ValueError):
    """Raised for syntactically or structurally invalid input data."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class VariableCountError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


class SpecializationError(ArithmeticError):
    pass


def _glex_key(e):
    return (sum(e), e)


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial in ``nvars`` variables over Z.

    >>> x1, x2 = LaurentPolynomial.variables(2)
    >>> print((x1 + x2 ** -1) * (x1 - x2 ** -1))
    x1^2 - x2^-2
    """

    __slots__ = ("nvars", "_terms", "_hash", "_skey")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | None = None):
        if nvars < 0:
            raise MalformedInputError("variable count must be nonnegative")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise MalformedInputError(
                    f"exponent vector {e} has length {len(e)}, expected {nvars}"
                )
            c = int(c)
            if c:
                clean[e] = c
        self.nvars = nvars
        self._terms = clean
        self._hash = None
        self._skey = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        p._skey = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "LaurentPolynomial":
        return cls._raw(nvars, {(0,) * nvars: int(c)} if c else {})

    @classmethod
    def monomial(cls, nvars: int, exponents: Sequence[int], c: int = 1) -> "LaurentPolynomial":
        return cls(nvars, {tuple(exponents): c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "LaurentPolynomial":
        """The variable with 0-based position ``index``."""
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        e = [0] * nvars
        e[index] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def variables(cls, nvars: int) -> tuple["LaurentPolynomial", ...]:
        return tuple(cls.variable(nvars, i) for i in range(nvars))

    # -- inspection -----------------------------------------------------------

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in canonical order: graded-lex, largest monomial first."""
        return sorted(self._terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        """True when no exponent is negative."""
        return all(min(e, default=0) >= 0 for e in self._terms)

    def min_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return kernels.min_exponents(self._terms)

    def constant_value(self):
        """The int value if this is a constant, else ``None``."""
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            if not any(e):
                return c
        return None

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise VariableCountError(
                    f"variable counts differ: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial._raw(self.nvars, kernels.poly_add(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial._raw(self.nvars, kernels.poly_sub(self._terms, other._terms))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPolynomial._raw(self.nvars, {})
            return LaurentPolynomial._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial._raw(self.nvars, kernels.poly_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise NotDivisibleError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisibleError(f"{self} is not a unit")
            return LaurentPolynomial._raw(
                self.nvars, {tuple(k * x for x in e): c ** (-k)}
            )
        result = LaurentPolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other) -> "LaurentPolynomial":
        """Exact quotient; raises ``NotDivisibleError`` when there is none."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot divide by {type(other).__name__}")
        if not other._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        q = kernels.poly_divexact(self._terms, other._terms)
        if q is None:
            raise NotDivisibleError(f"({other}) does not divide ({self})")
        return LaurentPolynomial._raw(self.nvars, q)

    def __truediv__(self, other):
        return self.exact_div(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.exact_div(self)

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int):
            return self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            cv = self.constant_value()
            # constants hash like the int they equal
            self._hash = hash(cv) if cv is not None else hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self):
        """A total-order key usable for deterministic sorting."""
        if self._skey is None:
            self._skey = (len(self._terms), tuple(self.terms()))
        return self._skey

    # -- evaluation ------------------------------------------------------------

    def specialize(self, values: Sequence, ring=None):
        """Evaluate at ``values`` (one per variable) inside ``ring``."""
        return lp_specialize(self, values, ring)

    # -- text / JSON -------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = default_names(self.nvars) if names is None else names
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            factors = []
            for name, x in zip(names, e):
                if x == 1:
                    factors.append(name)
                elif x:
                    factors.append(f"{name}^{x}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def as_fraction(self) -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Split into a polynomial numerator and a monomial denominator."""
        if not self._terms:
            return self, LaurentPolynomial.constant(self.nvars, 1)
        den = tuple(max(0, -x) for x in self.min_exponents())
        num = kernels.poly_scale(self._terms, 1, den)
        return LaurentPolynomial._raw(self.nvars, num), LaurentPolynomial._raw(self.nvars, {den: 1})

    def to_fraction_text(self, names: Sequence[str] | None = None) -> str:
        num, den = self.as_fraction()
        if den == 1:
            return num.to_text(names)
        num_text = num.to_text(names)
        if len(num) > 1:
            num_text = f"({num_text})"
        den_text = den.to_text(names)
        if "*" in den_text:
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPolynomial({self.nvars}, {self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [{"e": list(e), "c": str(c)} for e, c in self.terms()],
        }

    @classmethod
    def from_json(cls, obj) -> "LaurentPolynomial":
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise MalformedInputError(f"invalid JSON: {exc.msg}", exc.pos) from None
        if not isinstance(obj, dict) or "vars" not in obj or "terms" not in obj:
            raise MalformedInputError('polynomial JSON needs "vars" and "terms"')
        n = obj["vars"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise MalformedInputError('"vars" must be a nonnegative integer')
        raw = []
        for k, t in enumerate(obj["terms"]):
            try:
                e, c = t["e"], t["c"]
                if isinstance(c, bool) or not isinstance(c, (int, str)):
                    raise TypeError
                c = int(c)
                if not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
                    raise TypeError
            except (KeyError, TypeError, ValueError):
                raise MalformedInputError(f"bad term entry {t!r}", f"terms[{k}]") from None
            raw.append((e, c))
        return lp_normalize(raw, n)

    @classmethod
    def parse(cls, text: str, nvars: int | None = None,
              names: Sequence[str] | None = None) -> "LaurentPolynomial":
        """Parse ``c*x1^e1*x2^e2 + ...`` (negative exponents allowed)."""
        return _parse(text, nvars, names)


def default_names(n: int, prefix: str = "x") -> list[str]:
    return [f"{prefix}{i + 1}" for i in range(n)]


def lp_normalize(terms: Iterable[tuple[Sequence[int], int]], nvars: int | None = None) -> LaurentPolynomial:
    """Merge duplicate monomials and drop zero coefficients."""
    merged = {}
    for e, c in terms:
        e = tuple(e)
        if nvars is None:
            nvars = len(e)
        if len(e) != nvars:
            raise MalformedInputError(
                f"exponent vector {e} has length {len(e)}, expected {nvars}"
            )
        merged[e] = merged.get(e, 0) + int(c)
    if nvars is None:
        raise MalformedInputError("cannot infer the variable count of an empty term list")
    return LaurentPolynomial(nvars, merged)


def lp_mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    if a.nvars != b.nvars:
        raise VariableCountError(f"variable counts differ: {a.nvars} vs {b.nvars}")
    return a * b


def lp_exact_div(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a.exact_div(b)


def lp_specialize(p: LaurentPolynomial, values: Sequence, ring=None):
    """Substitute ``values[i]`` for the i-th variable of ``p``.

    Negative exponents are handled by clearing the monomial denominator and
    performing a single exact division in ``ring`` at the end.
    """
    if len(values) != p.nvars:
        raise VariableCountError(f"expected {p.nvars} values, got {len(values)}")
    if ring is None:
        ring = ring_of(values[0]) if values else ZZ
    values = [ring.coerce(v) for v in values]
    if p.is_zero():
        return ring.zero
    lo = p.min_exponents()
    den_exp = [max(0, -x) for x in lo]
    for i, d in enumerate(den_exp):
        if d and ring.is_zero(values[i]):
            raise SpecializationError(
                f"variable {i + 1} appears with a negative exponent but is specialized to zero"
            )
    powers = [dict() for _ in values]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = values[i] ** k if k else ring.one
        return cache[k]

    num = ring.zero
    for e, c in p._terms.items():
        t = ring.coerce(c)
        for i, x in enumerate(e):
            k = x + den_exp[i]
            if k:
                t = t * power(i, k)
        num = num + t
    den = ring.one
    for i, d in enumerate(den_exp):
        if d:
            den = den * power(i, d)
    try:
        return ring.exact_div(num, den)
    except NotDivisibleError as exc:
        raise SpecializationError(f"specialized value is not in the target ring: {exc}") from None


# -- text parser ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^]))")
_INDEXED = re.compile(r"^[A-Za-z]+_?(\d+)$")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise MalformedInputError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def _parse(text, nvars, names):
    toks = _tokenize(text)
    lookup = {name: i for i, name in enumerate(names)} if names else {}
    k = 0
    raw = []
    max_index = -1

    def var_index(name, pos):
        nonlocal max_index
        if name in lookup:
            i = lookup[name]
        else:
            m = _INDEXED.match(name)
            if not m or int(m.group(1)) < 1:
                raise MalformedInputError(f"unknown variable {name!r}", pos)
            i = int(m.group(1)) - 1
        max_index = max(max_index, i)
        return i

    def peek():
        return toks[k]

    def take():
        nonlocal k
        t = toks[k]
        k += 1
        return t

    def expect_int():
        t = take()
        if t[0] != "int":
            raise MalformedInputError("expected an integer", t[2])
        return int(t[1])

    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    while True:
        coeff = sign
        exps = {}
        while True:
            t = take()
            if t[0] == "int":
                coeff *= int(t[1])
            elif t[0] == "name":
                i = var_index(t[1], t[2])
                e = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    take()
                    neg = False
                    if peek()[0] == "op" and peek()[1] in "+-":
                        neg = take()[1] == "-"
                    e = -expect_int() if neg else expect_int()
                exps[i] = exps.get(i, 0) + e
            else:
                raise MalformedInputError("expected a number or variable", t[2])
            if peek()[0] == "op" and peek()[1] == "*":
                take()
                continue
            break
        raw.append((exps, coeff))
        t = take()
        if t[0] == "end":
            break
        if t[0] == "op" and t[1] in "+-":
            sign = -1 if t[1] == "-" else 1
            continue
        raise MalformedInputError(f"unexpected token {t[1]!r}", t[2])

    if nvars is None:
        nvars = len(names) if names else max(max_index + 1, 1)
    if max_index >= nvars:
        raise MalformedInputError(f"variable index {max_index + 1} exceeds variable count {nvars}")
    terms = []
    for exps, c in raw:
        e = [0] * nvars
        for i, x in exps.items():
            e[i] = x
        terms.append((e, c))
    return lp_normalize(terms, nvars)


# -- rings ----------------------------------------------------------------------


class IntegerRing:
    name = "int"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, Fraction) and x.denominator == 1:
                return int(x)
            raise TypeError(f"{x!r} is not an integer")
        return x

    def is_zero(self, x):
        return x == 0

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("integer division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{b} does not divide {a}")
        return q

    def __repr__(self):
        return "ZZ"


class RationalField:
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def is_zero(self, x):
        return x == 0

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return Fraction(a) / b

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class LaurentRing:
    """Z[x_1^{+-1}, ..., x_n^{+-1}]."""

    nvars: int

    name = "laurent"

    @property
    def zero(self):
        return LaurentPolynomial.constant(self.nvars, 0)

    @property
    def one(self):
        return LaurentPolynomial.constant(self.nvars, 1)

    def gens(self):
        return LaurentPolynomial.variables(self.nvars)

    def coerce(self, x):
        if isinstance(x, LaurentPolynomial):
            if x.nvars != self.nvars:
                raise VariableCountError(f"variable counts differ: {x.nvars} vs {self.nvars}")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return LaurentPolynomial.constant(self.nvars, x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def is_zero(self, x):
        return x == 0

    def exact_div(self, a, b):
        return self.coerce(a).exact_div(self.coerce(b))


ZZ = IntegerRing()
QQ = RationalField()


def ring_of(x):
    """The ring a value naturally lives in."""
    if isinstance(x, LaurentPolynomial):
        return LaurentRing(x.nvars)
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, int) and not isinstance(x, bool):
        return ZZ
    raise TypeError(f"no ring for values of type {type(x).__name__}")
