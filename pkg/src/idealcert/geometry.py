"""Exact rational convex geometry in small dimension.

Everything here is brute force over subsets, which is the right trade at
desk scale (a handful of points, n <= 4): no floating point ever enters, so
facet lists, vertex sets and volumes are exact by construction.
"""

import itertools
from fractions import Fraction
from math import gcd


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def gauss_rank(rows):
    """Rank of a list of rational vectors."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_square(a, b):
    """Solve a*x = b for square rational a; None when singular."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(a, b)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return tuple(m[i][n] for i in range(n))


def primitive_normal(vectors, n):
    """Primitive integer vector orthogonal to all given vectors.

    Requires the span to have rank exactly n-1; returns None otherwise.
    Orientation is canonical only up to sign; callers try both.
    """
    m = [list(map(Fraction, v)) for v in vectors]
    pivots = {}
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots[col] = rank
        rank += 1
    if rank != n - 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    w = [Fraction(0)] * n
    w[free] = Fraction(1)
    for col, row in pivots.items():
        w[col] = -m[row][free]
    den = 1
    for v in w:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in w]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def hull_facets(points, rays=()):
    """Facets (w, c), meaning <w, x> >= c, of conv(points) + cone(rays).

    Assumes the polyhedron is full-dimensional; every facet hyperplane
    passes through at least one input point, so enumerating (n-1)-subsets
    of difference vectors and rays around each anchor point finds them all.
    """
    points = [tuple(map(Fraction, p)) for p in dict.fromkeys(tuple(p) for p in points)]
    rays = [tuple(map(Fraction, r)) for r in rays]
    n = len(points[0])
    if n == 1:
        lo = min(p[0] for p in points)
        facets = [((1,), lo)]
        if not rays:
            hi = max(p[0] for p in points)
            facets.append(((-1,), -hi))
        return facets
    candidates = set()
    for anchor in points:
        pool = [tuple(x - y for x, y in zip(p, anchor)) for p in points if p != anchor]
        pool += rays
        pool = list(dict.fromkeys(pool))
        for combo in itertools.combinations(pool, n - 1):
            w = primitive_normal(combo, n)
            if w is None:
                continue
            for sign in (w, tuple(-v for v in w)):
                c = dot(sign, anchor)
                if all(dot(sign, p) >= c for p in points) and \
                   all(dot(sign, r) >= 0 for r in rays):
                    candidates.add((sign, c))
    facets = []
    for w, c in sorted(candidates):
        tight_pts = [p for p in points if dot(w, p) == c]
        if not tight_pts:
            continue
        span = [tuple(x - y for x, y in zip(p, tight_pts[0])) for p in tight_pts[1:]]
        span += [r for r in rays if dot(w, r) == 0]
        if gauss_rank(span) == n - 1:
            facets.append((w, c))
    return facets


def hrep_vertices(inequalities, n):
    """Vertices of {x : <w, x> >= c for all (w, c)}; brute force over n-subsets."""
    verts = set()
    for combo in itertools.combinations(inequalities, n):
        sol = solve_square([w for w, _ in combo], [c for _, c in combo])
        if sol is None:
            continue
        if all(dot(w, sol) >= c for w, c in inequalities):
            verts.add(sol)
    return sorted(verts)


def hull_volume(points):
    """Exact volume of conv(points), recursing over facet cones.

    vol = (1/n) * sum over facets of dist(v0, facet) * vol(facet), with each
    facet volume computed in a dropped coordinate; the normal lengths cancel
    so every intermediate quantity is rational.
    """
    points = [tuple(map(Fraction, p)) for p in dict.fromkeys(tuple(p) for p in points)]
    if not points:
        return Fraction(0)
    n = len(points[0])
    if n == 1:
        return max(p[0] for p in points) - min(p[0] for p in points)
    base = points[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in points[1:]]
    if gauss_rank(diffs) < n:
        return Fraction(0)
    total = Fraction(0)
    v0 = points[0]
    for w, c in hull_facets(points):
        h = dot(w, v0) - c
        if h == 0:
            continue
        axis = next(i for i in range(n) if w[i] != 0)
        tight = [p[:axis] + p[axis + 1 :] for p in points if dot(w, p) == c]
        total += h * hull_volume(tight) / abs(w[axis])
    return total / n
