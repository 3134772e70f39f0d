"""Lojasiewicz-exponent brackets for m-primary ideals.

The exponent is inf{p/q : m^p inside the closure of I^q}.  For each fixed q
the minimal such p is nu(q) = ceil(q * L), so every probe yields the
two-sided constraint (nu(q)-1)/q < L <= nu(q)/q; the reported bracket is the
intersection over q = 1..qmax.  A point value is reported only on the
monomial fast path, where the exponent is the largest axis intercept of the
Newton polyhedron.

Powering a many-generator ideal is expensive, so for non-monomial input the
ideal is first replaced by a certified parameter reduction, which leaves
every closure of every power unchanged (a reduction J of I makes J^q a
reduction of I^q, hence closure(J^q) = closure(I^q)).
"""

from fractions import Fraction

from .errors import ResourceCapError
from .ideals import colength, ideal_power, is_member
from .multiplicity import DEFAULT_RMAX, DEFAULT_TRIALS, require_proper_m_primary
from .newton import MonomialIdeal, monomial_loja, monomial_power_test
from .reduction import closure_member, find_generic_reduction
from .serialize import frac_str


def monomials_of_degree(n, p):
    """All exponent tuples of total degree p in n variables."""
    if n == 1:
        return [(p,)]
    out = []
    for first in range(p + 1):
        for rest in monomials_of_degree(n - 1, p - first):
            out.append((first,) + rest)
    return out


class LojaBracket:
    """nu-table with the bracket (lower, upper]; exact only for monomial input."""

    def __init__(self, table, exact=None):
        self.table = dict(table)
        self.lower = max(Fraction(nu - 1, q) for q, nu in self.table.items())
        self.upper = min(Fraction(nu, q) for q, nu in self.table.items())
        self.exact = exact
        if not self.lower < self.upper:
            raise AssertionError(f"empty bracket ({self.lower}, {self.upper}]")
        if exact is not None and not self.lower < exact <= self.upper:
            raise AssertionError(f"exact value {exact} outside ({self.lower}, {self.upper}]")

    def to_json(self):
        return {
            "table": {str(q): nu for q, nu in sorted(self.table.items())},
            "lower": frac_str(self.lower),
            "upper": frac_str(self.upper),
            "exact": frac_str(self.exact) if self.exact is not None else None,
        }

    def __repr__(self):
        exact = f", exact={self.exact}" if self.exact is not None else ""
        return f"LojaBracket(({self.lower}, {self.upper}]{exact})"


def _is_monomial_ideal(I):
    return bool(I.generators) and all(g.is_monomial for g in I.generators)


def nu(I, q, pmax=None, seed=0, trials=DEFAULT_TRIALS, rmax=DEFAULT_RMAX, caps=None):
    """Least p with m^p inside the closure of I^q.

    Only the degree-p monomials need testing (the closure is an ideal), and
    the test is monotone in p, so a binary search applies.  The default cap
    pmax = q * colength(I) always suffices: m^c lies in I for c = colength(I).
    """
    require_proper_m_primary(I, caps)
    if pmax is None:
        pmax = q * colength(I, caps)
    if _is_monomial_ideal(I):
        M = MonomialIdeal.from_ideal(I)

        def probe(p):
            return monomial_power_test(M, p, q)

    else:
        K = ideal_power(I, q, caps)
        ring = I.ring

        def probe(p):
            for e in monomials_of_degree(ring.nvars, p):
                mono = ring.monomial(e)
                if is_member(mono, K, caps):
                    continue
                witness = closure_member(mono, K, seed=seed, trials=trials,
                                         rmax=rmax, caps=caps)
                if not witness.member:
                    return False
            return True

    if not probe(pmax):
        raise ResourceCapError(f"nu({q}) exceeds pmax={pmax}")
    lo, hi = 1, pmax
    while lo < hi:
        mid = (lo + hi) // 2
        if probe(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def loja_bracket(I, qmax=3, seed=0, trials=DEFAULT_TRIALS, rmax=DEFAULT_RMAX, caps=None):
    """nu-table for q = 1..qmax and the resulting bracket.

    Non-monomial ideals are replaced by a certified parameter reduction
    before powering; monomial ideals take the Newton fast path and also get
    the exact exponent.
    """
    require_proper_m_primary(I, caps)
    if _is_monomial_ideal(I):
        probe_ideal = I
        exact = monomial_loja(MonomialIdeal.from_ideal(I))
    else:
        probe_ideal, _, _ = find_generic_reduction(
            I, seed=seed, trials=trials, rmax=rmax, caps=caps)
        exact = None
    table = {}
    for q in range(1, qmax + 1):
        table[q] = nu(probe_ideal, q, seed=seed, trials=trials, rmax=rmax, caps=caps)
    return LojaBracket(table, exact)
