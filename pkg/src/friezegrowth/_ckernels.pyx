# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse Laurent polynomial kernels.

Same contract as ``_pykernels``: dicts of exponent tuple -> nonzero int.
Exponent arithmetic runs on C longs; coefficients stay Python ints so
precision is unbounded.
"""

import heapq

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc

BACKEND = "cython"

cdef enum:
    MAXVARS = 64


cdef inline tuple _from_c(long *v, Py_ssize_t n):
    cdef tuple t = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object item
    for i in range(n):
        item = v[i]
        Py_INCREF(item)
        PyTuple_SET_ITEM(t, i, item)
    return t


cdef inline void _to_c(tuple e, long *v, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        v[i] = e[i]


cdef inline Py_ssize_t _nvars(dict a) except -1:
    cdef Py_ssize_t n = len(next(iter(a)))
    if n > MAXVARS:
        raise ValueError("compiled kernels support at most %d variables" % MAXVARS)
    return n


def poly_add(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    cdef dict out = dict(a)
    cdef object e, c, v
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def poly_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, v
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def poly_mul(dict a, dict b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef Py_ssize_t n = _nvars(a)
    cdef Py_ssize_t nb = len(b), i, k
    cdef long va[MAXVARS]
    cdef long vt[MAXVARS]
    cdef list bcoef = list(b.values())
    cdef dict out = {}
    cdef object ca, v, old
    cdef tuple e
    cdef long *eb = <long *> malloc(nb * n * sizeof(long) + 1)
    if eb == NULL:
        raise MemoryError()
    try:
        k = 0
        for e in b:
            _to_c(e, eb + k * n, n)
            k += 1
        for ea, ca in a.items():
            _to_c(ea, va, n)
            for k in range(nb):
                for i in range(n):
                    vt[i] = va[i] + eb[k * n + i]
                e = _from_c(vt, n)
                v = ca * bcoef[k]
                old = out.get(e)
                if old is not None:
                    v = old + v
                    if v:
                        out[e] = v
                    else:
                        del out[e]
                else:
                    out[e] = v
    finally:
        free(eb)
    return out


def poly_scale(dict a, c, tuple shift):
    if not c:
        return {}
    cdef Py_ssize_t n = len(shift), i
    cdef long vs[MAXVARS]
    cdef long vt[MAXVARS]
    cdef tuple e
    cdef dict out = {}
    if n > MAXVARS:
        raise ValueError("compiled kernels support at most %d variables" % MAXVARS)
    _to_c(shift, vs, n)
    for e, v in a.items():
        for i in range(n):
            vt[i] = e[i] + vs[i]
        out[_from_c(vt, n)] = c * v
    return out


def min_exponents(dict a):
    cdef Py_ssize_t n = _nvars(a), i
    cdef long lo[MAXVARS]
    cdef long x
    cdef tuple e
    first = True
    for e in a:
        if first:
            _to_c(e, lo, n)
            first = False
            continue
        for i in range(n):
            x = e[i]
            if x < lo[i]:
                lo[i] = x
    return _from_c(lo, n)


cdef inline tuple _heap_key(long *v, Py_ssize_t n):
    cdef long deg = 0
    cdef Py_ssize_t i
    cdef long neg[MAXVARS]
    for i in range(n):
        deg += v[i]
        neg[i] = -v[i]
    return (-deg, _from_c(neg, n))


def poly_divexact(dict a, dict b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    cdef Py_ssize_t n = _nvars(b), i, k, nr
    cdef long ma[MAXVARS]
    cdef long mb[MAXVARS]
    cdef long vt[MAXVARS]
    cdef long vd[MAXVARS]
    cdef long lead[MAXVARS]
    cdef long best_deg, deg
    cdef tuple e, t, d
    cdef object c, q_c, r, old, v, lead_c, cb
    cdef dict out, rem, q
    cdef list heap

    _to_c(min_exponents(a), ma, n)
    _to_c(min_exponents(b), mb, n)

    if len(b) == 1:
        for e, cb in b.items():
            pass
        out = {}
        for e2, c in a.items():
            q_c, r = divmod(c, cb)
            if r:
                return None
            for i in range(n):
                vt[i] = (<tuple>e2)[i] - (<tuple>e)[i]
            out[_from_c(vt, n)] = q_c
        return out

    # strip monomial content of the divisor and pick its graded-lex leader
    cdef list rest_e = []
    cdef list rest_c = []
    cdef tuple lead_t = None
    lead_c = None
    for e, c in b.items():
        deg = 0
        for i in range(n):
            vt[i] = <long>e[i] - mb[i]
            deg += vt[i]
        t = _from_c(vt, n)
        if lead_t is None or (deg, t) > (best_deg, lead_t):
            if lead_t is not None:
                rest_e.append(lead_t)
                rest_c.append(lead_c)
            lead_t = t
            lead_c = c
            best_deg = deg
        else:
            rest_e.append(t)
            rest_c.append(c)
    _to_c(lead_t, lead, n)
    nr = len(rest_e)

    rem = {}
    heap = []
    for e, c in a.items():
        for i in range(n):
            vt[i] = <long>e[i] - ma[i]
        t = _from_c(vt, n)
        rem[t] = c
        heap.append((_heap_key(vt, n), t))
    heapq.heapify(heap)

    q = {}
    heappop = heapq.heappop
    heappush = heapq.heappush
    while rem:
        while True:
            e = heappop(heap)[1]
            if e in rem:
                break
        c = rem.pop(e)
        for i in range(n):
            vd[i] = <long>e[i] - lead[i]
            if vd[i] < 0:
                return None
        q_c, r = divmod(c, lead_c)
        if r:
            return None
        q[_from_c(vd, n)] = q_c
        for k in range(nr):
            t = <tuple>rest_e[k]
            for i in range(n):
                vt[i] = vd[i] + <long>t[i]
            t = _from_c(vt, n)
            old = rem.get(t)
            if old is None:
                rem[t] = -q_c * rest_c[k]
                heappush(heap, (_heap_key(vt, n), t))
            else:
                v = old - q_c * rest_c[k]
                if v:
                    rem[t] = v
                else:
                    del rem[t]

    out = {}
    for e, c in q.items():
        for i in range(n):
            vt[i] = <long>e[i] + ma[i] - mb[i]
        out[_from_c(vt, n)] = c
    return out
