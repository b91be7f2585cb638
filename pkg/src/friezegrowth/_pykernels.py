"""Pure-Python sparse Laurent polynomial kernels.

A polynomial is a dict mapping exponent tuples (all of one length, entries may
be negative) to nonzero Python ints.  Every function here returns a fresh dict
in that canonical form and never mutates its arguments.  ``_ckernels.pyx``
mirrors this module function for function.
"""

import heapq
from operator import add, sub

BACKEND = "python"


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def poly_sub(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def poly_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(add, ea, eb))
            v = get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def poly_scale(a, c, shift):
    """Return ``c * x**shift * a``."""
    if not c:
        return {}
    return {tuple(map(add, e, shift)): c * v for e, v in a.items()}


def min_exponents(a):
    it = iter(a)
    lo = list(next(it))
    n = len(lo)
    for e in it:
        for i in range(n):
            if e[i] < lo[i]:
                lo[i] = e[i]
    return tuple(lo)


def _glex_heap_key(e):
    # heapq is a min-heap; negate to pop the graded-lex largest monomial first
    return (-sum(e), tuple(-x for x in e))


def poly_divexact(a, b):
    """Exact quotient ``a / b`` in the Laurent ring, or ``None``.

    Monomial content is stripped from both operands, then the remaining
    polynomials are divided by graded-lex leading-term elimination.  Any
    leading term not divisible by the divisor's leading term (exponent or
    coefficient) means ``b`` does not divide ``a``.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    mb = min_exponents(b)
    ma = min_exponents(a)
    if len(b) == 1:
        (eb, cb), = b.items()
        out = {}
        for e, c in a.items():
            q, r = divmod(c, cb)
            if r:
                return None
            out[tuple(map(sub, e, eb))] = q
        return out

    b0 = [(tuple(map(sub, e, mb)), c) for e, c in b.items()]
    lead_e, lead_c = max(b0, key=lambda t: (sum(t[0]), t[0]))
    rest = [(e, c) for e, c in b0 if e != lead_e]
    rem = {tuple(map(sub, e, ma)): c for e, c in a.items()}
    heap = [(_glex_heap_key(e), e) for e in rem]
    heapq.heapify(heap)
    q = {}
    n = len(lead_e)
    while rem:
        while True:
            _, e = heapq.heappop(heap)
            if e in rem:
                break
        c = rem.pop(e)
        d = tuple(map(sub, e, lead_e))
        for i in range(n):
            if d[i] < 0:
                return None
        qc, r = divmod(c, lead_c)
        if r:
            return None
        q[d] = qc
        for eb, cb in rest:
            t = tuple(map(add, d, eb))
            old = rem.get(t)
            if old is None:
                rem[t] = -qc * cb
                heapq.heappush(heap, (_glex_heap_key(t), t))
            else:
                v = old - qc * cb
                if v:
                    rem[t] = v
                else:
                    del rem[t]
    shift = tuple(map(sub, ma, mb))
    return {tuple(map(add, e, shift)): c for e, c in q.items()}
