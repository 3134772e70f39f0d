"""Ideals of the local ring at the origin, standard bases, and colength.

The local engine is Mora's tangent-cone division with the negative degrevlex
order; the same Buchberger completion drives the global degrevlex case with
classical division.  All coefficient work happens in the integer kernel
(fraction-free, so basis elements are integer polynomials with positive
leading coefficient and stripped content; each is a unit multiple of what
exact field arithmetic would produce, which leaves every contract here
unchanged: membership, leading ideals, staircases, colengths).
"""

import math
from fractions import Fraction

import numpy as np

from . import kernel
from .errors import ResourceCapError
from .orders import (
    GLOBAL_ORDER,
    LOCAL_ORDER,
    degree,
    degrevlex_key,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from .polyring import Polynomial


class Caps:
    """Resource caps for basis completion and division; desk-scale defaults."""

    __slots__ = ("max_pairs", "max_steps")

    def __init__(self, max_pairs=8000, max_steps=4_000_000):
        self.max_pairs = max_pairs
        self.max_steps = max_steps


DEFAULT_CAPS = Caps()


def to_int_poly(p):
    """Clear denominators and strip content: a unit rescale of p."""
    if p.is_zero:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return kernel.istrip({e: int(c * den) for e, c in p.terms.items()})


def from_int_poly(ring, d):
    return Polynomial(ring, {e: Fraction(c) for e, c in d.items()})


def _minimal_exponents(exponents):
    """Minimal antichain under divisibility, canonically sorted."""
    uniq = sorted(set(exponents), key=degrevlex_key)
    out = []
    for e in uniq:
        if not any(mono_divides(o, e) for o in out if o != e):
            out.append(e)
    # a later element never divides an earlier one of lower key, but two
    # passes keep the result independent of the scan order
    out = [e for e in out if not any(mono_divides(o, e) and o != e for o in out)]
    return out


class Staircase:
    """Monomials outside a leading ideal; None marks the infinite case."""

    __slots__ = ("monomials",)

    def __init__(self, monomials):
        self.monomials = None if monomials is None else tuple(monomials)

    @property
    def is_finite(self):
        return self.monomials is not None

    def count(self):
        return len(self.monomials) if self.is_finite else math.inf


def _pure_power_box(lead_exps, n):
    """Per-variable minimal pure-power exponents, or None if some axis lacks one."""
    box = []
    for i in range(n):
        cands = [e[i] for e in lead_exps if all(e[j] == 0 for j in range(n) if j != i)]
        if not cands:
            return None
        box.append(min(cands))
    return box


def staircase_from_leads(lead_exps, n):
    box = _pure_power_box(lead_exps, n)
    if box is None:
        return Staircase(None)
    arr = np.zeros(box, dtype=bool)
    if arr.size:
        for e in lead_exps:
            if all(e[i] < box[i] for i in range(n)):
                arr[tuple(slice(e[i], None) for i in range(n))] = True
        std = [tuple(int(v) for v in idx) for idx in zip(*np.nonzero(~arr))]
    else:
        std = []
    return Staircase(sorted(std, key=degrevlex_key))


class StandardBasis:
    """A confluent basis for one term order, with fast division state."""

    __slots__ = ("ring", "order", "elements", "_exps", "_coeffs", "_polys", "_ecarts",
                 "_lead_min", "_staircase")

    def __init__(self, ring, order, int_polys):
        self.ring = ring
        self.order = order
        self._polys = list(int_polys)
        self._exps = [kernel.lead_exponent(p, order.is_local) for p in self._polys]
        self._coeffs = [p[e] for p, e in zip(self._polys, self._exps)]
        self._ecarts = [kernel.ecart(p) for p in self._polys] if order.is_local else []
        self.elements = tuple(from_int_poly(ring, p) for p in self._polys)
        self._lead_min = tuple(_minimal_exponents(self._exps))
        self._staircase = None

    @property
    def leading_exponents(self):
        """Minimal generating exponents of the leading-term ideal."""
        return self._lead_min

    def leading_ideal(self):
        return tuple(self.ring.monomial(e) for e in self._lead_min)

    def normal_form_int(self, f_int, caps=None, trunc=-1):
        caps = caps or DEFAULT_CAPS
        if not f_int:
            return {}
        if self.order.is_local:
            res = kernel.mora_nf(f_int, self._exps, self._coeffs, self._polys,
                                 self._ecarts, caps.max_steps, trunc)
        else:
            res = kernel.reduce_global(f_int, self._exps, self._coeffs, self._polys,
                                       caps.max_steps)
        if res is None:
            raise ResourceCapError("division step budget exceeded")
        return res[0]

    def normal_form(self, f, caps=None):
        if f.ring != self.ring:
            raise ValueError("polynomial and basis from different rings")
        return from_int_poly(self.ring, self.normal_form_int(to_int_poly(f), caps))

    def reduces_to_zero(self, f, caps=None):
        """Membership test; uses the highest-corner cutoff when available."""
        return not self.normal_form_int(to_int_poly(f), caps, self.corner())

    def staircase(self):
        if self._staircase is None:
            self._staircase = staircase_from_leads(self._lead_min, self.ring.nvars)
        return self._staircase

    def colength(self):
        return self.staircase().count()

    def corner(self):
        """Least N with m^N inside the ideal (one past the staircase top);
        -1 when the staircase is infinite or empty."""
        sc = self.staircase()
        if not sc.is_finite or not sc.monomials:
            return -1
        return 1 + max(sum(e) for e in sc.monomials)


def _spoly(p1, e1, c1, p2, e2, c2):
    lcm = mono_lcm(e1, e2)
    d = math.gcd(c1, c2)
    a = kernel.iterm_mul(p1, mono_div(lcm, e1), c2 // d)
    b = kernel.iterm_mul(p2, mono_div(lcm, e2), c1 // d)
    return kernel.isub(a, b)


def monomials_of_degree(n, p):
    """All exponent tuples of total degree p in n variables."""
    if n == 1:
        return [(p,)]
    out = []
    for first in range(p + 1):
        for rest in monomials_of_degree(n - 1, p - first):
            out.append((first,) + rest)
    return out


def _complete(int_polys, order, caps, nvars, trunc=-1):
    """Buchberger completion; input polys are normalized, nonzero, deduped.

    Degree cutoff (local order only).  A cutoff T is valid once every
    monomial of degree >= T is known to lie in the ideal; division then
    drops such terms on sight, which tames Mora's coefficient growth, and
    the degree-T monomials join the final basis so the leading ideal stays
    complete.  Pairs against those monomials need no processing: a tail
    never has smaller degree than its lead under the local order, so their
    s-polynomials consist entirely of dropped terms.

    Two sources of cutoff: the caller may pass `trunc` (promising m^trunc
    inside the ideal), and whenever the basis holds a pure-power lead
    x_i^b_i for every variable, sum(b_i) - n + 1 becomes valid on the fly.
    """
    local = order.is_local
    basis = list(int_polys)
    exps = [kernel.lead_exponent(p, local) for p in basis]

    box = {}
    eff = trunc if (local and trunc > 0) else -1

    def note_lead(e):
        nonlocal eff
        support = [i for i, v in enumerate(e) if v]
        if len(support) == 1:
            i = support[0]
            if i not in box or e[i] < box[i]:
                box[i] = e[i]
                if len(box) == nvars:
                    dyn = sum(box.values()) - nvars + 1
                    if eff <= 0 or dyn < eff:
                        eff = dyn

    if local:
        for e in exps:
            note_lead(e)
        if eff > 0:
            basis = [{e: c for e, c in p.items() if degree(e) < eff} for p in basis]
            keep = [bool(p) for p in basis]
            basis = [p for p, k in zip(basis, keep) if k]
            exps = [e for e, k in zip(exps, keep) if k]
    coeffs = [p[e] for p, e in zip(basis, exps)]
    ecarts = [kernel.ecart(p) for p in basis]

    budget = caps.max_steps
    if not all(len(p) == 1 for p in basis):
        import heapq

        pairs = []
        for i in range(len(basis)):
            for j in range(i):
                heapq.heappush(pairs, (degree(mono_lcm(exps[i], exps[j])), j, i))
        processed = 0
        while pairs:
            _, i, j = heapq.heappop(pairs)
            processed += 1
            if processed > caps.max_pairs:
                raise ResourceCapError("pair queue cap exceeded in basis completion")
            if mono_coprime(exps[i], exps[j]):
                continue
            s = _spoly(basis[i], exps[i], coeffs[i], basis[j], exps[j], coeffs[j])
            if not s:
                continue
            if local:
                res = kernel.mora_nf(s, exps, coeffs, basis, ecarts, budget, eff)
            else:
                res = kernel.reduce_global(s, exps, coeffs, basis, budget)
            if res is None:
                raise ResourceCapError("division step budget exceeded in basis completion")
            h, used = res
            budget -= used
            if budget <= 0:
                raise ResourceCapError("division step budget exceeded in basis completion")
            if h:
                k = len(basis)
                basis.append(h)
                e = kernel.lead_exponent(h, local)
                exps.append(e)
                coeffs.append(h[e])
                ecarts.append(kernel.ecart(h))
                if local:
                    note_lead(e)
                for i in range(k):
                    heapq.heappush(pairs, (degree(mono_lcm(exps[i], e)), i, k))
    if local and eff > 0:
        for e in monomials_of_degree(nvars, eff):
            basis.append({e: 1})
            exps.append(e)
    return _minimalize(basis, exps, order, budget)


def _minimalize(basis, exps, order, budget):
    """Drop elements whose lead is divisible by another kept lead."""
    keep = []
    for i in range(len(basis)):
        redundant = False
        for j in range(len(basis)):
            if i == j:
                continue
            if mono_divides(exps[j], exps[i]) and (exps[j] != exps[i] or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    kept = [(exps[i], basis[i]) for i in keep]
    kept.sort(key=lambda t: order.key(t[0]), reverse=True)
    polys = [kernel.inormalize(p, order.is_local) for _, p in kept]
    if not order.is_local:
        polys = _tail_reduce(polys, budget)
    return polys


def _tail_reduce(polys, budget):
    """Interreduce a minimal global basis to the reduced Groebner basis."""
    out = list(polys)
    for i in range(len(out)):
        others = [p for k, p in enumerate(out) if k != i]
        if not others:
            continue
        exps = [kernel.lead_exponent(p, False) for p in others]
        coeffs = [p[e] for p, e in zip(others, exps)]
        res = kernel.reduce_global(out[i], exps, coeffs, others, max(budget, 1))
        if res is None:
            raise ResourceCapError("division step budget exceeded in interreduction")
        out[i] = kernel.inormalize(res[0], False)
    return out


class Ideal:
    """An ideal given by generators, with write-once per-order basis caches."""

    __slots__ = ("ring", "generators", "_bases", "_powers", "_cert_cache")

    def __init__(self, ring, generators):
        canonical = []
        seen = set()
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero:
                continue
            if g not in seen:
                canonical.append(g)
                seen.add(g)
        self.ring = ring
        self.generators = tuple(canonical)
        self._bases = {}
        self._powers = {1: self}
        self._cert_cache = {}

    @property
    def is_zero(self):
        return not self.generators

    def standard_basis(self, order=LOCAL_ORDER, caps=None):
        cached = self._bases.get(order.kind)
        if cached is not None:
            return cached
        caps = caps or DEFAULT_CAPS
        ints = []
        seen = set()
        for g in self.generators:
            d = kernel.inormalize(to_int_poly(g), order.is_local)
            key = tuple(sorted(d.items()))
            if d and key not in seen:
                ints.append(d)
                seen.add(key)
        polys = _complete(ints, order, caps, self.ring.nvars) if ints else []
        basis = StandardBasis(self.ring, order, polys)
        self._bases[order.kind] = basis
        return basis

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"


def standard_basis(ideal, order=LOCAL_ORDER, caps=None):
    return ideal.standard_basis(order, caps)


def truncated_standard_basis(ideal, trunc, caps=None):
    """Local standard basis computed with the degree-trunc cutoff.

    The caller guarantees m^trunc lies in the ideal; the cutoff monomials
    then belong to it, so the returned basis is an honest standard basis of
    the same ideal, just computed with bounded degrees.
    """
    caps = caps or DEFAULT_CAPS
    ints = []
    seen = set()
    for g in ideal.generators:
        d = kernel.inormalize(to_int_poly(g), True)
        key = tuple(sorted(d.items()))
        if d and key not in seen:
            ints.append(d)
            seen.add(key)
    polys = _complete(ints, LOCAL_ORDER, caps, ideal.ring.nvars, trunc) if ints else []
    return StandardBasis(ideal.ring, LOCAL_ORDER, polys)


def certified_capped_basis(ideal, valid_bound, initial=None, caps=None):
    """Capped local basis, with the cap tightened below the known-valid bound.

    valid_bound is a degree with m^valid_bound inside the (localized) ideal.
    Smaller caps N are tried first and self-certify: when the computed
    staircase tops out strictly below N, m^corner lies in ideal + m^N, which
    is inside ideal + m*(m^corner), and Nakayama promotes that to m^corner
    inside the ideal itself.  A staircase is divisibility-closed, so a biting
    cap always shows up as a standard monomial of degree N-1.
    """
    cap = valid_bound if initial is None else min(initial, valid_bound)
    while True:
        sb = truncated_standard_basis(ideal, cap, caps)
        if cap >= valid_bound or sb.corner() < cap:
            return sb
        cap = min(max(cap + 3, (3 * cap) // 2), valid_bound)


def truncation_degree(ideal, caps=None):
    """Least N with m^N inside the ideal, read off the staircase."""
    basis = ideal.standard_basis(LOCAL_ORDER, caps)
    sc = basis.staircase()
    if not sc.is_finite:
        raise ValueError("truncation degree needs a finite staircase")
    if not sc.monomials:
        return 0
    return 1 + max(sum(e) for e in sc.monomials)


def normal_form(f, basis, caps=None):
    return basis.normal_form(f, caps)


def is_member(f, ideal, caps=None):
    """Membership in the localized ring (unit multiples allowed)."""
    if f.is_zero:
        return True
    return ideal.standard_basis(LOCAL_ORDER, caps).reduces_to_zero(f, caps)


def colength(ideal, caps=None):
    """Vector-space dimension of the quotient; +inf when not zero-dimensional."""
    if ideal.is_zero:
        return math.inf
    return ideal.standard_basis(LOCAL_ORDER, caps).colength()


def staircase(ideal, caps=None):
    if ideal.is_zero:
        return Staircase(None)
    return ideal.standard_basis(LOCAL_ORDER, caps).staircase()


def is_m_primary(ideal, caps=None):
    """True iff the colength is finite (leading ideal has all pure powers)."""
    if ideal.is_zero:
        return False
    basis = ideal.standard_basis(LOCAL_ORDER, caps)
    return _pure_power_box(basis.leading_exponents, ideal.ring.nvars) is not None


def contains_unit(ideal):
    return any(g.order() == 0 for g in ideal.generators)


def _int_key(d):
    return tuple(sorted(d.items()))


def _prune_int_generators(int_polys):
    """Drop generators that provably lie in the ideal of the kept ones.

    Sound prunes only: duplicates, monomials divisible by another monomial,
    polynomials all of whose terms are divisible by a kept monomial, and
    exact term-multiples c*x^g*h of an already kept generator h.
    """
    seen = set()
    polys = []
    for d in int_polys:
        if not d:
            continue
        key = _int_key(d)
        if key not in seen:
            seen.add(key)
            polys.append(d)
    mono_exps = _minimal_exponents([next(iter(d)) for d in polys if len(d) == 1])
    remaining_monos = set(mono_exps)
    out = []
    shapes = {}
    for d in polys:
        if len(d) == 1:
            e = next(iter(d))
            if e in remaining_monos:
                remaining_monos.discard(e)
                out.append(d)
            continue
        if any(all(mono_divides(m, e) for e in d) for m in mono_exps):
            continue
        n = len(next(iter(d)))
        mins = tuple(min(e[i] for e in d) for i in range(n))
        shape = _int_key(kernel.inormalize({mono_div(e, mins): c for e, c in d.items()}, False))
        shifts = shapes.setdefault(shape, [])
        if any(mono_divides(s, mins) for s in shifts):
            continue
        shifts.append(mins)
        out.append(d)
    return out


def ideal_product(I, J, caps=None):
    """Ideal generated by all pairwise products of generators."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    gi = [to_int_poly(g) for g in I.generators]
    gj = [to_int_poly(g) for g in J.generators]
    prods = []
    for a in gi:
        for b in gj:
            prods.append(kernel.inormalize(kernel.imul(a, b), False))
    pruned = _prune_int_generators(prods)
    return Ideal(I.ring, [from_int_poly(I.ring, d) for d in pruned])


def ideal_power(I, k, caps=None):
    if not isinstance(k, int) or k < 1:
        raise ValueError("exponent must be a positive integer")
    have = max(e for e in I._powers if e <= k)
    current = I._powers[have]
    while have < k:
        current = ideal_product(current, I, caps)
        have += 1
        I._powers[have] = current
    return current


def ideal_sum(I, extra):
    """I + (extra generators); extra is an Ideal or iterable of polynomials."""
    gens = list(I.generators)
    if isinstance(extra, Ideal):
        gens.extend(extra.generators)
    else:
        gens.extend(extra)
    return Ideal(I.ring, gens)


def ideal_contains(I, J, caps=None):
    """True iff J is a subset of I (every generator of J in I)."""
    return all(is_member(g, I, caps) for g in J.generators)


def ideal_equal(I, J, caps=None):
    """Equality by mutual membership of generators, never basis comparison."""
    return ideal_contains(I, J, caps) and ideal_contains(J, I, caps)
