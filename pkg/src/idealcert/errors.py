"""Exception hierarchy shared by the library and the command line tool.

Exit-code policy: 1 for violated mathematical hypotheses, 2 for input that
does not parse, 3 for exhausted resource caps.
"""


class IdealcertError(Exception):
    exit_code = 1


class HypothesisError(IdealcertError):
    """A mathematical precondition does not hold for the given input."""

    exit_code = 1


class NotMPrimaryError(HypothesisError):
    pass


class UnitIdealError(HypothesisError):
    """The ideal is the whole ring; multiplicity-type invariants are undefined."""


class NotContainedError(HypothesisError):
    """A candidate sub-ideal is not contained in the ambient ideal."""


class DegenerateSliceError(HypothesisError):
    """Every component of a family vanishes identically at the sample."""


class CertificateError(HypothesisError):
    """A certificate failed re-validation."""


class InputError(IdealcertError):
    exit_code = 2


class PolyParseError(InputError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ProblemFileError(InputError):
    pass


class ResourceCapError(IdealcertError):
    exit_code = 3


class NotStabilizedError(ResourceCapError):
    """Finite differences did not stabilize within the sampled window."""

    def __init__(self, message, samples=()):
        super().__init__(message)
        self.samples = tuple(samples)


class TrialsExhaustedError(ResourceCapError):
    """All randomized trials failed; diagnostics list each failed draw."""

    def __init__(self, message, diagnostics=()):
        super().__init__(message)
        self.diagnostics = tuple(diagnostics)
