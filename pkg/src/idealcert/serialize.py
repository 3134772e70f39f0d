"""Small JSON helpers: exact rationals as strings, matrices row-major."""

from fractions import Fraction


def frac_str(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def frac_parse(s):
    return Fraction(s)


def matrix_to_json(rows):
    rows = [list(r) for r in rows]
    return {
        "rows": len(rows),
        "cols": len(rows[0]) if rows else 0,
        "entries": [frac_str(v) for r in rows for v in r],
    }


def matrix_from_json(obj):
    r, c = obj["rows"], obj["cols"]
    entries = [frac_parse(s) for s in obj["entries"]]
    if len(entries) != r * c:
        raise ValueError("matrix entry count does not match its shape")
    return tuple(tuple(entries[i * c : (i + 1) * c]) for i in range(r))
