"""Concave integral lattice paths in V_n.

A path runs from a lattice point M*(n,1) on the ray to a lattice point on the
y-axis, with leftward primitive edge directions of strictly increasing slope.
The enclosed lattice count L_n, exhaustive bounded enumeration, corner
corounding, homology classes, and the combinatorial index of labeled
generators all live here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import geometry as geo
from .errors import InvalidVertex, PathError, ZeroEdge


@dataclass(frozen=True)
class IntegralPath:
    n: int
    start: tuple  # (M*n, M), integers
    edges: tuple  # (((-p, q), mult), ...) primitive directions, slopes increasing

    def vertices(self):
        out = [self.start]
        cur = self.start
        for (dx, dy), m in self.edges:
            cur = (cur[0] + m * dx, cur[1] + m * dy)
            out.append(cur)
        return out

    @property
    def end(self):
        return self.vertices()[-1]

    def is_empty(self) -> bool:
        return not self.edges


@dataclass(frozen=True)
class ConcaveGenerator:
    path: IntegralPath
    labels: tuple  # one 'e'/'h' per distinct edge direction

    def h_count(self) -> int:
        return sum(1 for lab in self.labels if lab == "h")


def empty_path(n: int) -> IntegralPath:
    return IntegralPath(n=n, start=(0, 0), edges=())


def path_violation(n: int, start, edges):
    """Return None if (start, edges) is a valid concave path, else a reason string."""
    if n < 1:
        return f"n must be positive, got {n}"
    sx, sy = start
    if sx != n * sy or sy < 0:
        return f"start {start} is not M*({n},1) with M >= 0"
    if not edges:
        return None if start == (0, 0) else "path without edges must be the empty path at the origin"
    if start == (0, 0):
        return "non-empty path cannot start at the origin"
    for (d, m) in edges:
        if d == (0, 0):
            return "zero edge direction"
        if d[0] >= 0:
            return f"direction {d} must have negative x-component"
        if not geo.is_primitive(d):
            return f"direction {d} is not primitive"
        if m < 1:
            return f"multiplicity {m} must be positive"
    dirs = [d for d, _ in edges]
    if len(set(dirs)) != len(dirs):
        return "directions must be pairwise distinct"
    for d1, d2 in zip(dirs, dirs[1:]):
        # slopes q/p for (-p, q) strictly increasing <=> cross(d1, d2) < 0
        if geo.cross(d1, d2) >= 0:
            return f"edge slopes not strictly increasing at {d1} -> {d2}"
    verts = IntegralPath(n=n, start=tuple(start), edges=tuple(edges)).vertices()
    end = verts[-1]
    if end[0] != 0 or end[1] < 0:
        return f"path must end on the y-axis, ends at {end}"
    for i, v in enumerate(verts):
        if not geo.in_cone(v, n):
            return f"vertex {v} outside the cone"
        if i > 0 and n * v[1] == v[0]:
            return f"vertex {v} revisits the (n,1)-ray"
        if i < len(verts) - 1 and i > 0 and v[0] == 0:
            return f"vertex {v} touches the y-axis before the end"
    return None


def is_concave_path(n: int, start, edges):
    """Validate path invariants; returns (ok, first_violation_or_None)."""
    reason = path_violation(n, start, edges)
    return reason is None, reason


def make_path(n: int, start, edges) -> IntegralPath:
    reason = path_violation(n, start, edges)
    if reason is not None:
        raise PathError(reason)
    return IntegralPath(n=n, start=tuple(start), edges=tuple(edges))


def path_from_vertices(n: int, verts) -> IntegralPath:
    """Build a path from a chain of lattice vertices, collapsing to primitive edges."""
    edges = []
    for u, v in zip(verts, verts[1:]):
        dx, dy = v[0] - u[0], v[1] - u[1]
        if (dx, dy) == (0, 0):
            raise ZeroEdge("repeated vertex in chain")
        g = gcd(abs(dx), abs(dy))
        d = (dx // g, dy // g)
        if edges and edges[-1][0] == d:
            edges[-1] = (d, edges[-1][1] + g)
        else:
            edges.append((d, g))
    return make_path(n, verts[0] if verts else (0, 0), tuple(edges))


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _count_columns(n: int, verts) -> int:
    """Lattice points under a leftward graph path, excluding points on the path.

    Works for any chain of lattice vertices with strictly decreasing x that
    stays in the cone; concavity is not assumed (the auxiliary paths of the
    orbit-set index are not concave).
    """
    total = 0
    for (x1, y1), (x2, y2) in zip(verts, verts[1:]):
        dx, dy = x2 - x1, y2 - y1
        g = gcd(abs(dx), abs(dy)) if dy else abs(dx)
        p = (-dx) // g  # primitive horizontal step
        for c in range(x2, x1):
            top = y1 + ((c - x1) * dy) // dx  # floor of the path height at c
            lo = _ceil_div(c, n)
            cnt = top - lo + 1
            if cnt > 0:
                total += cnt
            if (x1 - c) % p == 0:
                total -= 1  # lattice point on the path itself
    return total


def lattice_count(path: IntegralPath) -> int:
    """L_n: lattice points enclosed by the path and the two rays, minus the path."""
    if path.is_empty():
        return 0
    return _count_columns(path.n, path.vertices())


def displacement(path: IntegralPath) -> int:
    """Horizontal displacement y(path) = x-coordinate of the start."""
    return path.start[0]


def homology_class(w, n: int):
    """Unique (l, k1, k2) with 0 <= l < n and w + l*(-1,0) = k1*(n,1) + k2*(0,1)."""
    l = w[0] % n
    k1 = (w[0] - l) // n
    k2 = w[1] - k1
    return l, k1, k2


def generator_index(gen: ConcaveGenerator) -> int:
    """Combinatorial index 2*L_n + (number of hyperbolic labels)."""
    return 2 * lattice_count(gen.path) + gen.h_count()


# ---------------------------------------------------------------------------
# Exhaustive enumeration


_ENUM_CACHE = {}


def _enumerate_all(n: int, kmax: int, margin: int = 0):
    """All concave paths with L_n <= kmax, bucketed by L_n.

    Search box: start multiple M <= kmax + margin, heights <= kmax + 1 + margin.
    A path from M*(n,1) encloses the M ray points below its start and the end
    height many axis points below its end, so M and the end height are both
    at most L_n; concave paths take their height maximum at an endpoint.
    """
    key = (n, kmax, margin)
    cached = _ENUM_CACHE.get(key)
    if cached is not None:
        return cached
    ymax = kmax + 1 + margin
    buckets = {k: [] for k in range(kmax + 1)}
    buckets[0].append(empty_path(n))

    def column_block(x1, y1, x2, y2):
        """Count contribution of columns x2 <= c < x1 for edge (x1,y1)->(x2,y2)."""
        dx, dy = x2 - x1, y2 - y1
        g = gcd(abs(dx), abs(dy)) if dy else abs(dx)
        p = (-dx) // g
        sub = 0
        for c in range(x2, x1):
            top = y1 + ((c - x1) * dy) // dx
            lo = _ceil_div(c, n)
            if top >= lo:
                sub += top - lo + 1
            if (x1 - c) % p == 0:
                sub -= 1
        return sub

    def extend(chain, count, last_dir):
        x1, y1 = chain[-1]
        for x2 in range(x1 - 1, -1, -1):
            ylo = (x2 // n) + 1 if x2 > 0 else 1
            for y2 in range(ylo, ymax + 1):
                dx, dy = x2 - x1, y2 - y1
                g = gcd(abs(dx), abs(dy)) if dy else abs(dx)
                d = (dx // g, dy // g)
                if last_dir is not None and geo.cross(last_dir, d) >= 0:
                    continue
                new_count = count + column_block(x1, y1, x2, y2)
                if new_count > kmax:
                    continue
                if x2 == 0:
                    buckets[new_count].append(path_from_vertices(n, chain + [(x2, y2)]))
                else:
                    extend(chain + [(x2, y2)], new_count, d)

    for m_start in range(1, kmax + margin + 1):
        extend([(m_start * n, m_start)], 0, None)
    for k in buckets:
        buckets[k].sort(key=lambda p: (p.start, p.edges))
    _ENUM_CACHE[key] = buckets
    return buckets


def enumerate_paths(n: int, k: int, margin: int = 0):
    """Exactly the concave integral paths with L_n = k, in a deterministic order."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return list(_enumerate_all(n, k, margin)[k])


def enumerate_paths_up_to(n: int, kmax: int):
    """Buckets {k: paths with L_n = k} for all k <= kmax (shared search pass)."""
    return _enumerate_all(n, kmax)


# ---------------------------------------------------------------------------
# Corounding the corner


def coround_corner(path: IntegralPath, vertex_index: int) -> IntegralPath:
    """Replace the path by the hull boundary of its upper lattice region minus
    the addressed corner.

    The result never has larger length and never has a smaller L_n than the
    input; if the corner removal changes nothing the input is returned.
    """
    verts = path.vertices()
    if not 1 <= vertex_index <= len(verts) - 2:
        raise InvalidVertex(f"vertex index {vertex_index} is not an interior vertex")
    corner = verts[vertex_index]
    n = path.n
    sx = path.start[0]
    ymax = max(v[1] for v in verts)

    # Per-column lowest lattice point of the upper region, skipping the corner;
    # plus ray columns beyond the start so the hull rides the (n,1)-direction.
    candidates = []
    vv = verts
    for c in range(0, sx + 1):
        # exact path height at column c
        for (x1, y1), (x2, y2) in zip(vv, vv[1:]):
            if x2 <= c <= x1:
                h = Fraction(y1) + Fraction((c - x1) * (y2 - y1), x2 - x1) if x1 != x2 else Fraction(y1)
                break
        else:
            h = Fraction(vv[0][1])
        ymin = _ceil_div(h.numerator, h.denominator)
        if (c, ymin) == corner:
            ymin += 1
        candidates.append((c, ymin))
    for c in range(sx + 1, sx + 2 * n + 1):
        candidates.append((c, _ceil_div(c, n)))

    # lower convex hull, left to right
    hull = []
    for pt in candidates:
        while len(hull) >= 2 and geo.cross(
            (hull[-1][0] - hull[-2][0], hull[-1][1] - hull[-2][1]),
            (pt[0] - hull[-1][0], pt[1] - hull[-1][1]),
        ) <= 0:
            hull.pop()
        hull.append(pt)
    chain = [pt for pt in hull if pt[0] <= sx]
    if not chain or chain[-1] != path.start:
        chain = [pt for pt in chain if pt[0] < sx] + [path.start]
    chain.reverse()  # traversal from the ray to the y-axis
    new_path = path_from_vertices(n, chain)
    if new_path == path:
        return path
    return new_path


# ---------------------------------------------------------------------------
# Text form (CLI debugging output)


_PATH_RE = re.compile(
    r"^start=\((-?\d+),(-?\d+)\);\s*edges=\[(.*?)\](?:;\s*labels=\[(.*?)\])?$"
)
_EDGE_RE = re.compile(r"\((-?\d+),(-?\d+)\)x(\d+)")


def parse_path_text(n: int, text: str):
    """Inverse of path_to_text: returns (IntegralPath, labels-or-None)."""
    m = _PATH_RE.match(text.strip())
    if m is None:
        raise PathError(f"cannot parse path text {text!r}")
    start = (int(m.group(1)), int(m.group(2)))
    edges = []
    for em in _EDGE_RE.finditer(m.group(3)):
        edges.append(((int(em.group(1)), int(em.group(2))), int(em.group(3))))
    labels = None
    if m.group(4) is not None:
        labels = tuple(tok.strip() for tok in m.group(4).split(",") if tok.strip())
        if any(lab not in ("e", "h") for lab in labels):
            raise PathError(f"labels must be 'e' or 'h', got {labels}")
        if len(labels) != len(edges):
            raise PathError("need exactly one label per distinct edge direction")
    return make_path(n, start, tuple(edges)), labels


def path_to_text(path: IntegralPath, labels=None) -> str:
    edges = ", ".join(f"({d[0]},{d[1]})x{m}" for d, m in path.edges)
    text = f"start=({path.start[0]},{path.start[1]}); edges=[{edges}]"
    if labels is not None:
        text += "; labels=[" + ",".join(labels) + "]"
    return text
