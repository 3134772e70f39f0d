"""Exponent tuples and the two term orders used throughout.

Monomials are plain tuples of nonnegative ints, one entry per variable.
The global order is degree reverse lexicographic (a well-order); the local
order is its negative-degree variant, under which 1 is the largest monomial
and leading terms pick out minimal-degree parts.  Both share the same
reverse-lexicographic tie-break on a fixed variable indexing.
"""

GLOBAL_KIND = "global-degrevlex"
LOCAL_KIND = "local-negdegrevlex"


def degree(e):
    return sum(e)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent of a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def degrevlex_key(e):
    """Sort key: larger key = larger monomial in the global order."""
    return (sum(e), tuple(-x for x in reversed(e)))


def negdegrevlex_key(e):
    """Sort key: larger key = larger monomial in the local order."""
    return (-sum(e), tuple(-x for x in reversed(e)))


class TermOrder:
    """One of the two fixed orders; hashable so it can key basis caches."""

    __slots__ = ("kind",)

    def __init__(self, kind):
        if kind not in (GLOBAL_KIND, LOCAL_KIND):
            raise ValueError(f"unknown term order kind: {kind!r}")
        self.kind = kind

    @property
    def is_local(self):
        return self.kind == LOCAL_KIND

    def key(self, e):
        if self.kind == GLOBAL_KIND:
            return degrevlex_key(e)
        return negdegrevlex_key(e)

    def leading_exponent(self, exponents):
        return max(exponents, key=self.key)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"TermOrder({self.kind!r})"


GLOBAL_ORDER = TermOrder(GLOBAL_KIND)
LOCAL_ORDER = TermOrder(LOCAL_KIND)
