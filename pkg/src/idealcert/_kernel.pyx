# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for sparse integer polynomial arithmetic.

Twin of `idealcert._kernel_py`; see that module for the representation and
contracts.  Coefficients are arbitrary-precision Python ints; the speedup
comes from compiled loop control, tuple handling and divisibility tests.
"""

from math import gcd

BACKEND = "cython"


cdef tuple _drl_key(tuple e):
    cdef Py_ssize_t i, n = len(e)
    cdef long total = 0
    cdef list rev = []
    for i in range(n):
        total += <long> e[i]
    for i in range(n - 1, -1, -1):
        rev.append(-<long> e[i])
    return (total, tuple(rev))


cdef tuple _ndrl_key(tuple e):
    cdef tuple k = _drl_key(e)
    return (-<long> k[0], k[1])


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long> a[i] > <long> b[i]:
            return False
    return True


cdef inline tuple _tadd(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] + <long> b[i]
    return tuple(out)


cdef inline tuple _tsub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long> a[i] - <long> b[i]
    return tuple(out)


cdef inline long _tdeg(tuple e):
    cdef Py_ssize_t i, n = len(e)
    cdef long total = 0
    for i in range(n):
        total += <long> e[i]
    return total


cdef tuple _max_mono(dict a, bint local):
    cdef tuple best = None, bk = None, k
    for e in a:
        k = _ndrl_key(<tuple> e) if local else _drl_key(<tuple> e)
        if best is None or k > bk:
            best, bk = <tuple> e, k
    return best


def iadd(dict a, dict b):
    cdef dict out = dict(a)
    cdef object v
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def isub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object v
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def imul(dict a, dict b):
    cdef dict out = {}
    cdef tuple e
    cdef object v
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _tadd(<tuple> ea, <tuple> eb)
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def iterm_mul(dict a, tuple exp, c):
    cdef dict out = {}
    for e, v in a.items():
        out[_tadd(<tuple> e, exp)] = v * c
    return out


def icontent(dict a):
    cdef object g = 0
    for v in a.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def istrip(dict a):
    cdef object g = icontent(a)
    cdef dict out
    if g <= 1:
        return dict(a)
    out = {}
    for e, v in a.items():
        out[e] = v // g
    return out


def inormalize(dict a, bint local):
    cdef dict out
    cdef tuple lead
    if not a:
        return {}
    out = istrip(a)
    lead = _max_mono(out, local)
    if out[lead] < 0:
        return {e: -v for e, v in out.items()}
    return out


def lead_exponent(dict a, bint local):
    return _max_mono(a, local)


def max_degree(dict a):
    cdef long best = -1, d
    for e in a:
        d = _tdeg(<tuple> e)
        if d > best:
            best = d
    return best


def ecart(dict a):
    cdef tuple lead = _max_mono(a, True)
    return max_degree(a) - _tdeg(lead)


def reduce_global(dict f, list lead_exps, list lead_coeffs, list polys,
                  long max_steps):
    cdef dict h = dict(f)
    cdef set done = set()
    cdef long steps = 0
    cdef Py_ssize_t nred = len(lead_exps), i, idx
    cdef tuple best, e2, shift, k, bk
    cdef object c, lc, d, mult, cf, v, g
    while True:
        best = None
        bk = None
        for e in h:
            if e in done:
                continue
            k = _drl_key(<tuple> e)
            if best is None or k > bk:
                best, bk = <tuple> e, k
        if best is None:
            break
        idx = -1
        for i in range(nred):
            if _divides(<tuple> lead_exps[i], best):
                idx = i
                break
        if idx < 0:
            done.add(best)
            continue
        steps += 1
        if steps > max_steps:
            return None
        c = h[best]
        lc = lead_coeffs[idx]
        d = gcd(c, lc)
        mult = lc // d
        cf = c // d
        if mult < 0:
            mult, cf = -mult, -cf
        if mult != 1:
            for e in h:
                h[e] = h[e] * mult
        shift = _tsub(best, <tuple> lead_exps[idx])
        for ge, gv in (<dict> polys[idx]).items():
            e2 = _tadd(<tuple> ge, shift)
            v = h.get(e2, 0) - cf * gv
            if v:
                h[e2] = v
            else:
                h.pop(e2, None)
        if steps % 16 == 0 and h:
            g = icontent(h)
            if g > 1:
                for e in h:
                    h[e] = h[e] // g
    return (inormalize(h, False), steps)


def mora_nf(dict f, list lead_exps, list lead_coeffs, list polys, list ecarts,
            long max_steps, long trunc=-1):
    # trunc > 0: caller promises m^trunc lies in the ideal, so terms of
    # degree >= trunc are dropped on sight (highest-corner cutoff)
    cdef list t_exps = list(lead_exps)
    cdef list t_coeffs = list(lead_coeffs)
    cdef list t_polys = list(polys)
    cdef list t_ecarts = list(ecarts)
    cdef dict h
    if trunc > 0:
        h = {}
        for e0, c0 in f.items():
            if _tdeg(<tuple> e0) < trunc:
                h[e0] = c0
    else:
        h = dict(f)
    cdef long steps = 0
    cdef Py_ssize_t best, i
    cdef long best_ecart, h_ecart, lead_deg
    cdef tuple lead, shift, e2
    cdef object c, lc, d, mult, cf, v, g
    cdef dict snap
    while h:
        lead = _max_mono(h, True)
        lead_deg = _tdeg(lead)
        best = -1
        best_ecart = -1
        for i in range(len(t_exps)):
            if _divides(<tuple> t_exps[i], lead):
                if best < 0 or <long> t_ecarts[i] < best_ecart:
                    best = i
                    best_ecart = <long> t_ecarts[i]
        if best < 0:
            break
        steps += 1
        if steps > max_steps:
            return None
        if trunc <= 0:
            # snapshots guarantee termination only in the uncapped case; with
            # a cutoff, leads descend through a finite monomial set anyway
            h_ecart = max_degree(h) - lead_deg
            if best_ecart > h_ecart:
                snap = dict(h)
                t_exps.append(lead)
                t_coeffs.append(h[lead])
                t_polys.append(snap)
                t_ecarts.append(h_ecart)
        c = h[lead]
        lc = t_coeffs[best]
        d = gcd(c, lc)
        mult = lc // d
        cf = c // d
        if mult < 0:
            mult, cf = -mult, -cf
        if mult != 1:
            for e in h:
                h[e] = h[e] * mult
        shift = _tsub(lead, <tuple> t_exps[best])
        for ge, gv in (<dict> t_polys[best]).items():
            e2 = _tadd(<tuple> ge, shift)
            if trunc > 0 and _tdeg(e2) >= trunc:
                continue
            v = h.get(e2, 0) - cf * gv
            if v:
                h[e2] = v
            else:
                h.pop(e2, None)
        if steps % 8 == 0 and h:
            g = icontent(h)
            if g > 1:
                for e in h:
                    h[e] = h[e] // g
    return (inormalize(h, True), steps)
