"""Shared test oracles, implemented independently of the library internals."""

from fractions import Fraction
from math import gcd


def brute_combination_sequence(n, a, b, kmax):
    """Sorted-with-repetition values a*k1 + b*k2 with k1 + k2 divisible by n,
    by exhaustive double loop over a box that is provably large enough."""
    a, b = Fraction(a), Fraction(b)
    limit = 0
    while True:
        limit += 10
        vals = sorted(
            a * k1 + b * k2
            for k1 in range(limit + 1)
            for k2 in range(limit + 1)
            if (k1 + k2) % n == 0
        )
        # values exceeding min(a,b)*limit might be missing from the box
        cutoff = min(a, b) * limit
        if len(vals) > kmax and vals[kmax] <= cutoff:
            return vals[: kmax + 1]


def pick_lattice_count(path):
    """L_n recomputed through Pick's theorem on the closed polygon bounded by
    the path and the two rays through the origin."""
    if path.is_empty():
        return 0
    poly = [(0, 0)] + path.vertices()
    twice_area = 0
    boundary = 0
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        twice_area += x1 * y2 - y1 * x2
        boundary += gcd(abs(x2 - x1), abs(y2 - y1))
    interior = (abs(twice_area) - boundary) // 2 + 1
    on_path = 1 + sum(
        gcd(abs(u[0] - v[0]), abs(u[1] - v[1]))
        for u, v in zip(path.vertices(), path.vertices()[1:])
    )
    return interior + boundary - on_path


def brute_path_length(domain, path):
    """Omega-length recomputed per unit step instead of per direction."""
    total = Fraction(0)
    for (dx, dy), mult in path.edges:
        step = min(p[0] * dy - p[1] * dx for p in domain.vertices)
        total += mult * step
    return total
