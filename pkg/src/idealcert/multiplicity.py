"""Hilbert-Samuel multiplicity with machine-checkable certificates.

Two independent routes:

* finite differences of the length function k -> dim O/I^k, whose n-th
  difference stabilizes at e(I) once the function is polynomial;
* a randomized generic reduction: draw an integer matrix A, form the
  n-generator ideal J = A * (generators), verify I^(r+1) = J * I^r for some
  small r, and read off e(I) = e(J) = colength(J).  The second equality is
  the parameter-ideal identity (the ambient ring is regular, hence
  Cohen-Macaulay); the first is Rees' multiplicity theorem.

A generic-reduction certificate records the matrix, the verified exponent r
and colength(J); replaying it needs no search.  The differences route
without stabilization is an estimate, never a certificate.
"""

from dataclasses import dataclass

from .errors import NotMPrimaryError, TrialsExhaustedError, NotStabilizedError, UnitIdealError
from .ideals import (
    Ideal,
    colength,
    contains_unit,
    ideal_power,
    ideal_product,
    is_m_primary,
    to_int_poly,
    certified_capped_basis,
    truncation_degree,
)
from .orders import LOCAL_ORDER
from .rng import DrawSource
from .serialize import matrix_to_json

DEFAULT_TRIALS = 8
DEFAULT_RMAX = 6
DEFAULT_BOUND = 7

ROUTE_DIFFERENCES = "differences"
ROUTE_GENERIC = "generic-reduction"


@dataclass(frozen=True)
class HSSample:
    """One sample of the length function: length = colength(I^k)."""

    k: int
    length: int


class MultiplicityCertificate:
    """A multiplicity value plus the witness that proves it."""

    def __init__(self, value, route, *, samples=None, window=None, matrix=None,
                 r=None, colength_j=None, seed=None, draw_index=None, diagnostics=()):
        self.value = value
        self.route = route
        self.samples = tuple(samples) if samples else None
        self.window = tuple(window) if window else None
        self.matrix = matrix
        self.r = r
        self.colength_j = colength_j
        self.seed = seed
        self.draw_index = draw_index
        self.diagnostics = tuple(diagnostics)

    def to_json(self):
        out = {"value": self.value, "route": self.route}
        if self.route == ROUTE_DIFFERENCES:
            out["samples"] = [{"k": s.k, "length": s.length} for s in self.samples]
            out["window"] = list(self.window)
        else:
            out["matrix"] = matrix_to_json(self.matrix)
            out["r"] = self.r
            out["colength-j"] = self.colength_j
            out["seed"] = self.seed
            out["draw-index"] = self.draw_index
        if self.diagnostics:
            out["failed-draws"] = [list(d) for d in self.diagnostics]
        return out

    def __repr__(self):
        return f"MultiplicityCertificate(e={self.value}, route={self.route})"


def require_proper_m_primary(I, caps=None):
    if contains_unit(I):
        raise UnitIdealError("the ideal is the whole ring")
    if not is_m_primary(I, caps):
        raise NotMPrimaryError("ideal is not primary to the maximal ideal")


def hs_length(I, k, caps=None):
    """colength(I^k), the Hilbert-Samuel function at k."""
    require_proper_m_primary(I, caps)
    return colength(ideal_power(I, k, caps), caps)


def e_by_differences(I, kmax=None, caps=None):
    """Multiplicity as the stabilized n-th finite difference of k -> colength(I^k).

    Raises NotStabilizedError (carrying the samples) when no two consecutive
    n-th differences agree within the window.
    """
    require_proper_m_primary(I, caps)
    n = I.ring.nvars
    if kmax is None:
        kmax = n + 6
    if kmax < n + 2:
        raise ValueError(f"kmax={kmax} leaves no room for two n-th differences")
    samples = [HSSample(k, colength(ideal_power(I, k, caps), caps))
               for k in range(1, kmax + 1)]
    diffs = [s.length for s in samples]
    for _ in range(n):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    for j in range(len(diffs) - 1):
        if diffs[j] == diffs[j + 1] and diffs[j] > 0:
            return MultiplicityCertificate(
                diffs[j], ROUTE_DIFFERENCES, samples=samples, window=(j + 1, j + 2))
    raise NotStabilizedError(
        f"n-th differences did not stabilize for k <= {kmax}", samples=samples)


def e_parameter(J, caps=None):
    """e(J) = colength(J) for an ideal generated by a system of parameters."""
    n = J.ring.nvars
    if len(J.generators) != n:
        raise NotMPrimaryError(
            f"parameter ideal needs exactly {n} generators, got {len(J.generators)}")
    require_proper_m_primary(J, caps)
    return colength(J, caps)


def _product_basis(J, I, r, prev_corner, corner_i, caps):
    """Capped basis of J * I^r given the true corner of J * I^(r-1).

    m^prev lies in J * I^(r-1), so m^(prev + corner(I)) lies in the product;
    that is the safe cap, and the optimistic first try sits just above prev.
    """
    K = ideal_product(J, ideal_power(I, r, caps), caps)
    return certified_capped_basis(K, prev_corner + corner_i, prev_corner + 3, caps)


def _power_contained(I, r, sb, caps):
    """Whether every generator of I^(r+1) reduces to zero in the given basis."""
    corner = sb.corner()
    for g in ideal_power(I, r + 1, caps).generators:
        if g.order() >= corner:
            continue  # already inside m^corner, hence inside the product
        if sb.normal_form_int(to_int_poly(g), caps, corner):
            return False
    return True


def verify_reduction_exponent(J, I, r, caps=None):
    """Check I^(r+1) = J * I^r generator by generator (containment <= suffices
    because J is inside I).

    Product bases are computed with degree caps chained through the corners
    of J * I^1, ..., J * I^(r-1); that keeps Mora division away from the
    coefficient blowup that plagues high powers.
    """
    corner_i = truncation_degree(I, caps)
    prev = truncation_degree(J, caps)
    for rr in range(1, r + 1):
        sb = _product_basis(J, I, rr, prev, corner_i, caps)
        prev = sb.corner()
    return _power_contained(I, r, sb, caps)


def find_reduction_exponent(J, I, rmax, caps=None):
    """Least r <= rmax with I^(r+1) = J * I^r, or None.

    None never means "not a reduction": the defining condition quantifies
    over all r > 0, so exhausting rmax is only a failed semi-decision.
    """
    corner_i = truncation_degree(I, caps)
    prev = truncation_degree(J, caps)
    for r in range(1, rmax + 1):
        sb = _product_basis(J, I, r, prev, corner_i, caps)
        prev = sb.corner()
        if _power_contained(I, r, sb, caps):
            return r
    return None


def combination_ideal(matrix, I):
    """The ideal generated by the rows of matrix times the generator column."""
    gens = I.generators
    combos = []
    for row in matrix:
        if len(row) != len(gens):
            raise ValueError("matrix width does not match the generator count")
        p = I.ring.zero()
        for a, g in zip(row, gens):
            if a:
                p = p + a * g
        combos.append(p)
    return Ideal(I.ring, combos)


def search_generic_reduction(I, seed=0, trials=DEFAULT_TRIALS, rmax=DEFAULT_RMAX,
                             bound=DEFAULT_BOUND, caps=None):
    """Randomized search for an n-generator reduction of I.

    Returns (matrix, J, r, colength_j, draw_index, failures); raises
    TrialsExhaustedError with per-draw diagnostics when every draw fails.
    Generic linear combinations succeed outside a proper algebraic subset of
    matrix space, so failures only trigger a fresh draw, never a "no".
    """
    require_proper_m_primary(I, caps)
    n = I.ring.nvars
    m = len(I.generators)
    if m < n:
        raise NotMPrimaryError(
            f"an m-primary ideal in {n} variables needs at least {n} generators")
    if m == n:
        identity = tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(n))
        return identity, I, 1, colength(I, caps), None, ()

    rng = DrawSource(seed, "generic-reduction")
    failures = []
    for draw in range(trials):
        matrix = rng.matrix(draw, n, m, bound)
        J = combination_ideal(matrix, I)
        if len(J.generators) != n:
            failures.append((draw, "degenerate combination"))
            continue
        if not is_m_primary(J, caps):
            failures.append((draw, "combination is not a system of parameters"))
            continue
        r = find_reduction_exponent(J, I, rmax, caps)
        if r is None:
            failures.append((draw, f"verification stalled at r={rmax}"))
            continue
        return matrix, J, r, colength(J, caps), draw, tuple(failures)
    raise TrialsExhaustedError(
        f"no verified reduction in {trials} draws", diagnostics=failures)


def e_certified(I, seed=0, trials=DEFAULT_TRIALS, rmax=DEFAULT_RMAX, kmax=None,
                bound=DEFAULT_BOUND, caps=None):
    """Certified multiplicity; generic-reduction route first, differences fallback.

    Deterministic given the seed; certificates record seed and draw index so
    runs replay exactly.  Results are cached on the ideal.
    """
    key = (seed, trials, rmax, kmax, bound)
    cached = I._cert_cache.get(key)
    if cached is not None:
        return cached
    try:
        matrix, J, r, e, draw, failures = search_generic_reduction(
            I, seed, trials, rmax, bound, caps)
    except TrialsExhaustedError as exc:
        try:
            cert = e_by_differences(I, kmax, caps)
        except NotStabilizedError as exc2:
            raise TrialsExhaustedError(
                "generic reduction failed and differences did not stabilize",
                diagnostics=tuple(exc.diagnostics) + (("differences", str(exc2)),),
            ) from exc2
        cert = MultiplicityCertificate(
            cert.value, ROUTE_DIFFERENCES, samples=cert.samples, window=cert.window,
            diagnostics=exc.diagnostics)
    else:
        cert = MultiplicityCertificate(
            e, ROUTE_GENERIC, matrix=matrix, r=r, colength_j=e, seed=seed,
            draw_index=draw, diagnostics=failures)
    I._cert_cache[key] = cert
    return cert
