"""Pure-Python kernel for sparse integer polynomial arithmetic.

This is the fallback twin of the compiled extension `_kernel`; both expose
the same functions over the same representation and must agree exactly.

Representation: a polynomial is a dict mapping exponent tuples (nonnegative
ints, one per variable) to nonzero Python ints.  Rational coefficients are
handled by the callers, which clear denominators before entering the kernel;
all division steps below are fraction-free, so results differ from their
field counterparts only by a nonzero constant factor.  That is harmless for
every use in this package (ideal membership, leading terms, staircases).

Division loops return (result, steps) or None when the step budget is
exhausted; callers translate None into a resource-cap error.
"""

from math import gcd

BACKEND = "python"


def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _negdegrevlex_key(e):
    return (-sum(e), tuple(-x for x in reversed(e)))


def iadd(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def isub(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            del out[e]
    return out


def imul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def iterm_mul(a, exp, c):
    """c * x^exp * a, for nonzero integer c."""
    return {tuple(x + y for x, y in zip(e, exp)): v * c for e, v in a.items()}


def icontent(a):
    g = 0
    for v in a.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def istrip(a):
    """Divide out the integer content; zero maps to zero."""
    g = icontent(a)
    if g <= 1:
        return dict(a)
    return {e: v // g for e, v in a.items()}


def inormalize(a, local):
    """Content-stripped copy with positive leading coefficient."""
    if not a:
        return {}
    a = istrip(a)
    key = _negdegrevlex_key if local else _degrevlex_key
    lead = max(a, key=key)
    if a[lead] < 0:
        return {e: -v for e, v in a.items()}
    return a


def lead_exponent(a, local):
    key = _negdegrevlex_key if local else _degrevlex_key
    return max(a, key=key)


def max_degree(a):
    return max(sum(e) for e in a)


def ecart(a):
    """Max total degree minus the local leading degree (0 for monomials)."""
    lead = max(a, key=_negdegrevlex_key)
    return max(sum(e) for e in a) - sum(lead)


def reduce_global(f, lead_exps, lead_coeffs, polys, max_steps):
    """Fraction-free reduced division remainder for the global order.

    Eliminates every term divisible by some reducer lead, scanning terms in
    descending degrevlex order.  Reducers are tried in list order.
    """
    h = dict(f)
    done = set()
    steps = 0
    nred = len(lead_exps)
    while True:
        best = None
        best_key = None
        for e in h:
            if e in done:
                continue
            k = _degrevlex_key(e)
            if best is None or k > best_key:
                best, best_key = e, k
        if best is None:
            break
        idx = -1
        for i in range(nred):
            le = lead_exps[i]
            ok = True
            for x, y in zip(le, best):
                if x > y:
                    ok = False
                    break
            if ok:
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
                h[e] *= mult
        shift = tuple(x - y for x, y in zip(best, lead_exps[idx]))
        for ge, gv in polys[idx].items():
            e2 = tuple(x + y for x, y in zip(ge, shift))
            v = h.get(e2, 0) - cf * gv
            if v:
                h[e2] = v
            else:
                h.pop(e2, None)
        if steps % 16 == 0 and h:
            g = icontent(h)
            if g > 1:
                for e in h:
                    h[e] //= g
    return (inormalize(h, False), steps)


def mora_nf(f, lead_exps, lead_coeffs, polys, ecarts, max_steps, trunc=-1):
    """Weak normal form for the local order (Mora's tangent-cone division).

    Reducer choice is fixed: among reducers whose lead divides the lead of
    the partial remainder, take minimal ecart, ties broken by earliest
    insertion.  When every candidate has larger ecart the partial remainder
    itself joins the reducer list, which is what guarantees termination.
    Returns a result equal to the true weak normal form up to a nonzero
    constant factor.

    When trunc > 0 the caller promises that every monomial of total degree
    >= trunc lies in the ideal; such terms are then dropped on sight, which
    is a reduction step against those monomials and caps both chain length
    and coefficient growth (the highest-corner cutoff).
    """
    t_exps = list(lead_exps)
    t_coeffs = list(lead_coeffs)
    t_polys = list(polys)
    t_ecarts = list(ecarts)
    if trunc > 0:
        h = {e: c for e, c in f.items() if sum(e) < trunc}
    else:
        h = dict(f)
    steps = 0
    while h:
        lead = max(h, key=_negdegrevlex_key)
        lead_deg = sum(lead)
        best = -1
        best_ecart = -1
        for i in range(len(t_exps)):
            le = t_exps[i]
            ok = True
            for x, y in zip(le, lead):
                if x > y:
                    ok = False
                    break
            if ok and (best < 0 or t_ecarts[i] < best_ecart):
                best = i
                best_ecart = t_ecarts[i]
        if best < 0:
            break
        steps += 1
        if steps > max_steps:
            return None
        if trunc <= 0:
            # snapshots guarantee termination only in the uncapped case; with
            # a cutoff, leads descend through a finite monomial set anyway
            h_ecart = max(sum(e) for e in h) - lead_deg
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
                h[e] *= mult
        shift = tuple(x - y for x, y in zip(lead, t_exps[best]))
        for ge, gv in t_polys[best].items():
            e2 = tuple(x + y for x, y in zip(ge, shift))
            if trunc > 0 and sum(e2) >= trunc:
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
                    h[e] //= g
    return (inormalize(h, True), steps)
