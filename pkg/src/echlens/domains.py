"""Concave toric domains over the cone V_n and the length functional on paths.

A domain is described by the vertex chain of its upper boundary, traversed
from the endpoint on the (n,1)-ray to the endpoint on the y-axis.  The length
of a leftward lattice edge v is min_p cross(p, v) over boundary vertices p;
this min-formula is the operational form of the supporting-line definition
and fixes every sign convention downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import geometry as geo
from .errors import (
    ComplementNotConvex,
    DegenerateEdge,
    DeltaTooLarge,
    EmptyBoundary,
    EndpointNotOnRay,
    MismatchedN,
    NonPositiveScale,
    NotGraphOfFunction,
    ParseError,
    VertexOutsideCone,
    WrongOrientation,
    ZeroEdge,
)


@dataclass(frozen=True)
class ConcaveDomain:
    n: int
    vertices: tuple  # ((x, y), ...) exact rationals, ray endpoint first

    @property
    def a0(self) -> Fraction:
        """Parameter of the first vertex a0*(n,1)."""
        return Fraction(self.vertices[0][1])

    @property
    def a1(self) -> Fraction:
        """Height of the y-axis endpoint."""
        return Fraction(self.vertices[-1][1])

    def edge_vectors(self):
        v = self.vertices
        return [geo.vec_sub(v[i + 1], v[i]) for i in range(len(v) - 1)]


@dataclass(frozen=True)
class RotationNumbers:
    phi_plus: Fraction
    phi_minus: Fraction


def validate_domain(n: int, vertices) -> ConcaveDomain:
    """Validate a raw vertex chain, raising the first violated invariant."""
    if n < 1:
        raise VertexOutsideCone(f"n must be a positive integer, got {n}")
    verts = tuple((Fraction(x), Fraction(y)) for x, y in vertices)
    if len(verts) < 2:
        raise EmptyBoundary("boundary needs at least two vertices")
    first, last = verts[0], verts[-1]
    if first[0] != n * first[1] or first[1] <= 0:
        raise EndpointNotOnRay(f"first vertex {first} is not a0*({n},1) with a0 > 0")
    if last[0] != 0 or last[1] <= 0:
        raise EndpointNotOnRay(f"last vertex {last} is not (0, a1) with a1 > 0")
    for i, v in enumerate(verts):
        if not geo.in_cone(v, n):
            raise VertexOutsideCone(f"vertex {v} outside the cone V_{n}")
        if 0 < i < len(verts) - 1 and not geo.strictly_in_cone(v, n):
            raise VertexOutsideCone(f"interior vertex {v} lies on the cone boundary")
    for u, v in zip(verts, verts[1:]):
        if v[0] >= u[0]:
            raise NotGraphOfFunction(f"x does not strictly decrease at {u} -> {v}")
    edges = [geo.vec_sub(v, u) for u, v in zip(verts, verts[1:])]
    for e1, e2 in zip(edges, edges[1:]):
        if geo.cross(e1, e2) >= 0:
            raise ComplementNotConvex(f"edge slopes not strictly decreasing at {e1} -> {e2}")
    return ConcaveDomain(n=n, vertices=verts)


def omega_length_edge(domain: ConcaveDomain, v) -> Fraction:
    """Length of the single lattice edge v; v must point leftward (v.x <= 0)."""
    if v == (0, 0):
        raise ZeroEdge("zero vector has no length")
    if v[0] > 0:
        raise WrongOrientation(f"edge {v} must have non-positive x-component")
    return min(geo.cross(p, v) for p in domain.vertices)


def omega_length_path(domain: ConcaveDomain, path) -> Fraction:
    """Sum of edge lengths over a lattice path (edges weighted by multiplicity)."""
    if path.n != domain.n:
        raise MismatchedN(f"path has n={path.n}, domain has n={domain.n}")
    total = Fraction(0)
    for direction, mult in path.edges:
        total += mult * omega_length_edge(domain, direction)
    return total


def max_blowup_delta(domain: ConcaveDomain) -> Fraction:
    """Largest t with the singular ball triangle of size t weakly inside the domain."""
    return min(Fraction(v[1]) for v in domain.vertices)


def omega_length_blowup(domain: ConcaveDomain, path, delta) -> Fraction:
    """Length after a rational blow-up of size delta: l - delta * y(path)."""
    delta = Fraction(delta)
    if delta < 0:
        raise DeltaTooLarge("delta must be non-negative")
    if delta > 0 and delta >= max_blowup_delta(domain):
        raise DeltaTooLarge(
            f"delta={delta} does not leave the blow-up region strictly inside the domain"
        )
    return omega_length_path(domain, path) - delta * path.start[0]


def scale_domain(domain: ConcaveDomain, r) -> ConcaveDomain:
    r = Fraction(r)
    if r <= 0:
        raise NonPositiveScale(f"scale factor must be positive, got {r}")
    return ConcaveDomain(
        n=domain.n, vertices=tuple((r * x, r * y) for x, y in domain.vertices)
    )


def rotation_numbers(domain: ConcaveDomain) -> RotationNumbers:
    """Rotation numbers of the two exceptional orbits, from the end edges."""
    edges = domain.edge_vectors()
    first, last = edges[0], edges[-1]
    denom_plus = geo.cross(first, (domain.n, 1))
    if denom_plus == 0:
        raise DegenerateEdge("first boundary edge runs along the (n,1)-ray")
    if last[0] == 0:
        raise DegenerateEdge("last boundary edge is vertical")
    return RotationNumbers(
        phi_plus=Fraction(-first[1], 1) / denom_plus,
        phi_minus=Fraction(-last[1], 1) / last[0],
    )


def boundary_height(domain: ConcaveDomain, x) -> Fraction:
    """Exact height of the upper boundary over abscissa x (0 <= x <= start.x)."""
    x = Fraction(x)
    verts = domain.vertices
    if not (0 <= x <= verts[0][0]):
        raise ValueError(f"x={x} outside the boundary's span")
    for u, v in zip(verts, verts[1:]):
        if v[0] <= x <= u[0]:
            if u[0] == v[0]:
                return max(u[1], v[1])
            t = (x - v[0]) / (u[0] - v[0])
            return v[1] + t * (u[1] - v[1])
    raise AssertionError("unreachable: x inside span but no edge found")


def contains_point(domain: ConcaveDomain, p) -> bool:
    if not geo.in_cone(p, domain.n):
        return False
    if p[0] > domain.vertices[0][0]:
        return False
    return p[1] <= boundary_height(domain, p[0])


def domain_area(domain: ConcaveDomain) -> Fraction:
    """Exact area of the region between the boundary chain and the two rays."""
    poly = [(Fraction(0), Fraction(0))] + list(domain.vertices)
    total = Fraction(0)
    for u, v in zip(poly, poly[1:] + poly[:1]):
        total += geo.cross(u, v)
    return abs(total) / 2


def parse_domain_file(text: str) -> ConcaveDomain:
    """Parse the line-based domain description format.

    line 1: ``n = <positive integer>``
    line 2: ``vertices = (x1,y1) (x2,y2) ...``
    Blank lines and ``#`` comments are ignored.
    """
    n = None
    vertices = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError("expected `name = value`", lineno, 1)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        col = raw.index("=") + 2
        if key == "n":
            try:
                n = int(value)
            except ValueError:
                raise ParseError(f"bad integer {value!r}", lineno, col) from None
            if n < 1:
                raise ParseError(f"n must be positive, got {n}", lineno, col)
        elif key == "vertices":
            vertices = []
            cursor = col
            for token in value.split(" "):
                if not token:
                    cursor += 1
                    continue
                vertices.append(geo.parse_point(token, lineno, cursor))
                cursor += len(token) + 1
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
    if n is None:
        raise ParseError("missing `n = ...` line", 1, 1)
    if not vertices:
        raise ParseError("missing `vertices = ...` line", 1, 1)
    return validate_domain(n, vertices)
