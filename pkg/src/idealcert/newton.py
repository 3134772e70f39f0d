"""Newton polyhedra of monomial ideals: the combinatorial oracle.

For a monomial ideal the integral closure, the multiplicity and the
Lojasiewicz exponent are all readable from the polyhedron
conv(generator exponents) + nonnegative orthant: closure monomials are the
lattice points of the polyhedron, the multiplicity is n! times the covolume
(the volume trapped between the polyhedron and the axes), and the exponent
is the largest axis intercept.  This module is deliberately independent of
the standard-basis machinery so the two can check each other.
"""

import itertools
import math
from fractions import Fraction

from .errors import NotMPrimaryError
from .geometry import dot, gauss_rank, hrep_vertices, hull_facets, hull_volume
from .ideals import Ideal, _minimal_exponents
from .orders import degrevlex_key, mono_divides
from .polyring import Polynomial


class MonomialIdeal:
    """Minimal generating exponents (an antichain under divisibility)."""

    __slots__ = ("ring", "exponents")

    def __init__(self, ring, exponents):
        self.ring = ring
        self.exponents = tuple(_minimal_exponents([tuple(e) for e in exponents]))
        if not self.exponents:
            raise ValueError("a monomial ideal needs at least one generator")

    @classmethod
    def from_ideal(cls, ideal):
        exps = []
        for g in ideal.generators:
            if not g.is_monomial:
                raise ValueError(f"generator {g} is not a monomial")
            exps.append(next(iter(g.terms)))
        return cls(ideal.ring, exps)

    def to_ideal(self):
        return Ideal(self.ring, [self.ring.monomial(e) for e in self.exponents])

    @property
    def is_m_primary(self):
        n = self.ring.nvars
        for i in range(n):
            if not any(e[i] > 0 and all(e[j] == 0 for j in range(n) if j != i)
                       for e in self.exponents):
                return False
        return True

    def pure_power(self, i):
        n = self.ring.nvars
        cands = [e[i] for e in self.exponents
                 if e[i] > 0 and all(e[j] == 0 for j in range(n) if j != i)]
        return min(cands) if cands else None

    def contains_monomial(self, exponent):
        return any(mono_divides(g, exponent) for g in self.exponents)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ring == other.ring
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.ring, self.exponents))

    def __repr__(self):
        gens = ", ".join(str(self.ring.monomial(e)) for e in self.exponents)
        return f"MonomialIdeal({gens})"


class NewtonPolyhedron:
    """conv(exponents) + orthant, as exact facet inequalities <w,a> >= c."""

    __slots__ = ("n", "facets", "vertices")

    def __init__(self, n, facets, vertices):
        self.n = n
        self.facets = tuple(facets)
        self.vertices = tuple(vertices)

    def contains(self, point):
        point = tuple(Fraction(v) for v in point)
        if len(point) != self.n:
            raise ValueError("point has the wrong dimension")
        if any(v < 0 for v in point):
            return False
        return all(dot(w, point) >= c for w, c in self.facets)

    def scaled_contains(self, point, q):
        """Membership of point in q times the polyhedron (facet constants scale)."""
        point = tuple(Fraction(v) for v in point)
        if any(v < 0 for v in point):
            return False
        return all(dot(w, point) >= q * c for w, c in self.facets)


def newton_polyhedron(M):
    """Exact half-space representation plus the extreme generator exponents."""
    n = M.ring.nvars
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    facets = hull_facets(list(M.exponents), rays)
    # orthant inequalities are implied constraints, kept out of the facet
    # list only when they are not actual facets of the hull
    all_ineqs = facets + [(r, 0) for r in rays
                          if (r, 0) not in facets and (tuple(map(Fraction, r)), Fraction(0)) not in facets]
    vertices = []
    for p in M.exponents:
        tight = [w for w, c in all_ineqs if dot(w, p) == c]
        if gauss_rank(tight) == n:
            vertices.append(p)
    vertices.sort(key=degrevlex_key)
    return NewtonPolyhedron(n, facets, vertices)


def contains(P, point):
    return P.contains(point)


def monomial_closure(M):
    """Integral closure: monomials whose exponents lie in the polyhedron.

    Minimal generators live in the box bounded componentwise by the maxima
    of the generator exponents (anything beyond is divisible by a closer
    lattice point of the polyhedron).
    """
    P = newton_polyhedron(M)
    n = M.ring.nvars
    box = [max(e[i] for e in M.exponents) for i in range(n)]
    inside = [e for e in itertools.product(*(range(b + 1) for b in box))
              if P.contains(e)]
    return MonomialIdeal(M.ring, _minimal_exponents(inside))


def monomial_multiplicity(M):
    """n! times the covolume (orthant minus polyhedron), computed exactly.

    The complement is bounded by the pure-power box; its volume is the box
    volume minus the volume of the polyhedron clipped to the box.
    """
    if not M.is_m_primary:
        raise NotMPrimaryError("monomial ideal has no pure power on some axis")
    n = M.ring.nvars
    box = [M.pure_power(i) for i in range(n)]
    P = newton_polyhedron(M)
    ineqs = [(tuple(map(Fraction, w)), Fraction(c)) for w, c in P.facets]
    for i in range(n):
        axis = tuple(Fraction(1 if j == i else 0) for j in range(n))
        ineqs.append((axis, Fraction(0)))
        ineqs.append((tuple(-v for v in axis), Fraction(-box[i])))
    verts = hrep_vertices(ineqs, n)
    clipped = hull_volume(verts)
    covol = Fraction(math.prod(box)) - clipped
    value = covol * math.factorial(n)
    if value.denominator != 1 or value <= 0:
        raise AssertionError(f"covolume {covol} is not a positive lattice volume")
    return int(value)


def monomial_loja(M):
    """Largest axis intercept of the polyhedron, an exact rational."""
    if not M.is_m_primary:
        raise NotMPrimaryError("monomial ideal has no pure power on some axis")
    P = newton_polyhedron(M)
    n = M.ring.nvars
    best = Fraction(0)
    for i in range(n):
        intercept = Fraction(0)
        for w, c in P.facets:
            if w[i] > 0:
                intercept = max(intercept, Fraction(c, w[i]))
        best = max(best, intercept)
    return best


def monomial_power_test(M, p, q):
    """True iff m^p lies in the closure of M^q.

    The degree-p exponents form a scaled simplex; by convexity membership of
    its corners p*e_i in q times the polyhedron settles all of them.
    """
    if not M.is_m_primary:
        raise NotMPrimaryError("monomial ideal has no pure power on some axis")
    P = newton_polyhedron(M)
    n = M.ring.nvars
    for i in range(n):
        corner = tuple(p if j == i else 0 for j in range(n))
        if not P.scaled_contains(corner, q):
            return False
    return True
