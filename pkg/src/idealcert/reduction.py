"""Reduction tests and integral-closure membership via Rees' criterion.

A reduction J of I satisfies I^(r+1) = J * I^r for some r > 0.  The direct
test verifies that identity for increasing r; it is a semi-decision for
"yes" (the definition quantifies existentially over r, so exhausting the
search cap yields the first-class verdict "inconclusive", never "no").
Refutations come from Rees' theorem instead: for m-primary J inside I,
J is a reduction iff e(J) = e(I), so certified multiplicities can prove a
strict "no".  The same equivalence decides closure membership:
x lies in the integral closure of I iff e(I + (x)) = e(I).
"""

from .errors import NotContainedError, NotMPrimaryError, TrialsExhaustedError
from .ideals import ideal_contains, ideal_sum, is_member, is_m_primary
from .multiplicity import (
    DEFAULT_BOUND,
    DEFAULT_RMAX,
    DEFAULT_TRIALS,
    e_certified,
    find_reduction_exponent,
    require_proper_m_primary,
    search_generic_reduction,
)
from .serialize import matrix_to_json

VERDICT_YES_WITH_R = "yes-with-r"
VERDICT_YES = "yes"
VERDICT_NO = "no-by-multiplicity"
VERDICT_INCONCLUSIVE = "inconclusive"


class ReductionCertificate:
    """Outcome of a reduction test together with its replayable witness."""

    def __init__(self, verdict, r=None, e_i=None, e_j=None, matrix=None, rmax=None):
        self.verdict = verdict
        self.r = r
        self.e_i = e_i
        self.e_j = e_j
        self.matrix = matrix
        self.rmax = rmax

    @property
    def is_reduction(self):
        return self.verdict in (VERDICT_YES_WITH_R, VERDICT_YES)

    def to_json(self):
        out = {"verdict": self.verdict}
        if self.r is not None:
            out["r"] = self.r
        if self.rmax is not None:
            out["rmax"] = self.rmax
        if self.e_i is not None:
            out["e-big"] = self.e_i.to_json()
        if self.e_j is not None:
            out["e-sub"] = self.e_j.to_json()
        if self.matrix is not None:
            out["matrix"] = matrix_to_json(self.matrix)
        return out

    def __repr__(self):
        return f"ReductionCertificate({self.verdict}, r={self.r})"


class ClosureWitness:
    """Membership verdict for the integral closure, with its evidence."""

    def __init__(self, member, route, e_i=None, e_ix=None):
        self.member = member
        self.route = route  # "in-ideal" | "unit" | "multiplicity"
        self.e_i = e_i
        self.e_ix = e_ix

    def to_json(self):
        out = {"member": self.member, "route": self.route}
        if self.e_i is not None:
            out["e-ideal"] = self.e_i.to_json()
        if self.e_ix is not None:
            out["e-extended"] = self.e_ix.to_json()
        return out

    def __repr__(self):
        return f"ClosureWitness(member={self.member}, route={self.route})"


def _check_contained(J, I, caps=None):
    if not ideal_contains(I, J, caps):
        raise NotContainedError("the candidate is not contained in the ambient ideal")


def is_reduction_direct(J, I, rmax=DEFAULT_RMAX, caps=None):
    """Search r = 1..rmax for I^(r+1) = J * I^r.

    Only the containment of I^(r+1) in J * I^r needs checking since J lies
    inside I.
    """
    require_proper_m_primary(I, caps)
    _check_contained(J, I, caps)
    r = find_reduction_exponent(J, I, rmax, caps)
    if r is None:
        return ReductionCertificate(VERDICT_INCONCLUSIVE, rmax=rmax)
    return ReductionCertificate(VERDICT_YES_WITH_R, r=r, rmax=rmax)


def is_reduction_rees(J, I, seed=0, trials=DEFAULT_TRIALS, rmax=DEFAULT_RMAX, caps=None):
    """Decide by multiplicity equality; certify both sides.

    Yes-verdicts also report the direct exponent when it lies within rmax.
    """
    require_proper_m_primary(I, caps)
    if not is_m_primary(J, caps):
        raise NotMPrimaryError("the candidate sub-ideal is not m-primary")
    _check_contained(J, I, caps)
    cert_i = e_certified(I, seed=seed, trials=trials, rmax=rmax, caps=caps)
    cert_j = e_certified(J, seed=seed, trials=trials, rmax=rmax, caps=caps)
    if cert_i.value == cert_j.value:
        r = find_reduction_exponent(J, I, rmax, caps)
        verdict = VERDICT_YES_WITH_R if r is not None else VERDICT_YES
        return ReductionCertificate(verdict, r=r, e_i=cert_i, e_j=cert_j, rmax=rmax)
    if cert_j.value > cert_i.value:
        return ReductionCertificate(VERDICT_NO, e_i=cert_i, e_j=cert_j, rmax=rmax)
    raise AssertionError(
        f"certified e(J)={cert_j.value} < e(I)={cert_i.value} for J inside I")


def closure_member(x, I, seed=0, trials=DEFAULT_TRIALS, rmax=DEFAULT_RMAX, caps=None):
    """Integral-closure membership of x in the closure of I.

    Fast paths: elements of I are members; units never are (an integral
    equation for a unit would put 1 in the maximal ideal).  Otherwise the
    verdict is e(I) == e(I + (x)), both certified.
    """
    require_proper_m_primary(I, caps)
    if x.ring != I.ring:
        raise ValueError("element and ideal from different rings")
    if is_member(x, I, caps):
        return ClosureWitness(True, "in-ideal")
    if x.order() == 0:
        return ClosureWitness(False, "unit")
    cert_i = e_certified(I, seed=seed, trials=trials, rmax=rmax, caps=caps)
    extended = ideal_sum(I, [x])
    cert_ix = e_certified(extended, seed=seed, trials=trials, rmax=rmax, caps=caps)
    if cert_ix.value > cert_i.value:
        raise AssertionError("certified e grew after adding a generator")
    return ClosureWitness(cert_i.value == cert_ix.value, "multiplicity",
                          e_i=cert_i, e_ix=cert_ix)


def find_generic_reduction(I, seed=0, trials=DEFAULT_TRIALS, rmax=DEFAULT_RMAX,
                           bound=DEFAULT_BOUND, caps=None):
    """A certified n-generator reduction J = A * (generators) of I.

    Returns (J, certificate, matrix); raises TrialsExhaustedError carrying
    the failed matrices and where each verification stalled.
    """
    matrix, J, r, e, draw, failures = search_generic_reduction(
        I, seed, trials, rmax, bound, caps)
    cert_j = e_certified(J, seed=seed, trials=trials, rmax=rmax, caps=caps)
    cert = ReductionCertificate(VERDICT_YES_WITH_R, r=r, e_j=cert_j,
                                matrix=matrix, rmax=rmax)
    return J, cert, matrix
