"""Capacity sequences and index formulas.

Three routes to the capacities of a concave domain cross-check each other:
the singular-ellipsoid generator sequence, the weight-expansion packing
route, and brute-force maximization of path length over enumerated concave
lattice paths.  The orbit-set index formulas and the index-bijectivity check
for near-irrational ellipsoids live here too.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from . import paths as pth
from .domains import ConcaveDomain, max_blowup_delta, omega_length_blowup, omega_length_path, rotation_numbers
from .errors import (
    DegenerateRatio,
    DeltaTooLarge,
    HomologyNotZero,
    InsufficientLength,
    NonPositivePeriod,
    PathError,
    ResourceLimit,
)
from .geometry import in_cone
from .weights import singular_weight_expansion

DEFAULT_ORACLE_BUDGET = 16

MONOTONICITY_NOTE = (
    "no capacity obstruction found is not evidence that an embedding exists; "
    "for domains with an orbifold point, monotonicity of these capacities is "
    "only established for embeddings taking the orbifold point to the "
    "orbifold point."
)


@dataclass(frozen=True)
class CapacitySequence:
    values: tuple  # exact rationals c_0..c_kmax
    provenance: str  # ellipsoid | ball | union | weights | oracle | blowup

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if vals:
            if vals[0] != 0:
                raise ValueError(f"c_0 must be 0, got {vals[0]}")
            for k in range(len(vals) - 1):
                if vals[k] > vals[k + 1]:
                    raise ValueError(f"sequence decreases at k={k}")

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def ellipsoid_sequence(n: int, a, b, kmax: int) -> CapacitySequence:
    """First kmax+1 values a*k1 + b*k2 over k1 + k2 = 0 mod n, sorted with
    repetitions (lazy priority-queue merge over rows of fixed k1)."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise NonPositivePeriod(f"ellipsoid parameters must be positive, got {a}, {b}")
    if n < 1:
        raise NonPositivePeriod(f"n must be a positive integer, got {n}")
    if kmax < 0:
        raise ValueError("kmax must be non-negative")

    def row_head(k1):
        k2 = (-k1) % n
        return (a * k1 + b * k2, k1, k2)

    # Rows of fixed k1 are sorted, but their heads are not monotone in k1
    # (head = a*k1 + b*((-k1) mod n)); inject a row as soon as its lower
    # bound a*k1 could still beat the current minimum.
    heap = [row_head(0)]
    next_k1 = 1
    out = []
    while len(out) <= kmax:
        while a * next_k1 <= heap[0][0]:
            heapq.heappush(heap, row_head(next_k1))
            next_k1 += 1
        value, k1, k2 = heapq.heappop(heap)
        out.append(value)
        heapq.heappush(heap, (value + n * b, k1, k2 + n))
    return CapacitySequence(values=tuple(out), provenance="ellipsoid")


def ball_sequence(a, kmax: int) -> CapacitySequence:
    """Classical ball: c_k = a*d with d maximal such that d(d+1)/2 <= k."""
    a = Fraction(a)
    if a <= 0:
        raise NonPositivePeriod(f"ball parameter must be positive, got {a}")
    out = []
    d = 0
    for k in range(kmax + 1):
        while (d + 1) * (d + 2) // 2 <= k:
            d += 1
        out.append(a * d)
    return CapacitySequence(values=tuple(out), provenance="ball")


def singular_ball_closed_form(n: int, a, kmax: int) -> CapacitySequence:
    """c_k(B_n(a)) = a*n*d with minimal d such that k <= (d^2 n + d(n+2))/2.

    Cross-check for the generator route; the minimal-d reading resolves the
    overlap of the printed index intervals at their endpoints.
    """
    a = Fraction(a)
    if a <= 0:
        raise NonPositivePeriod(f"ball parameter must be positive, got {a}")
    out = []
    d = 0
    for k in range(kmax + 1):
        while d * d * n + d * (n + 2) < 2 * k:
            d += 1
        out.append(a * n * d)
    return CapacitySequence(values=tuple(out), provenance="ball")


def union_sequence(sequences, kmax: int) -> CapacitySequence:
    """Iterated max-plus convolution (disjoint-union capacities)."""
    seqs = list(sequences)
    if not seqs:
        raise InsufficientLength("need at least one sequence")
    for s in seqs:
        if len(s) < kmax + 1:
            raise InsufficientLength(f"sequence of length {len(s)} does not cover kmax={kmax}")
    acc = list(seqs[0].values[: kmax + 1])
    for s in seqs[1:]:
        vals = s.values
        acc = [
            max(acc[i] + vals[k - i] for i in range(k + 1)) for k in range(kmax + 1)
        ]
    return CapacitySequence(values=tuple(acc), provenance="union")


def packing_closed_form(n: int, a0, plain_weights, kmax: int) -> CapacitySequence:
    """Disjoint-union capacities of B_n(a0) and balls B(a_i), via the direct
    maximization over multiplicity tuples (independent of union_sequence)."""
    a0 = Fraction(a0)
    plain = [Fraction(w) for w in plain_weights]
    out = []
    for k in range(kmax + 1):
        best = Fraction(0)

        def rec(i, budget, value):
            nonlocal best
            if value > best:
                best = value
            if i == len(plain):
                return
            a = plain[i]
            d = 1
            while d * (d + 1) // 2 <= budget:
                rec(i + 1, budget - d * (d + 1) // 2, value + a * d)
                d += 1
            rec(i + 1, budget, value)

        d1 = 0
        while d1 * d1 * n - d1 * (n - 2) <= 2 * k:
            cost = (d1 * d1 * n - d1 * (n - 2)) // 2
            rec(0, k - cost, a0 * n * d1)
            d1 += 1
        out.append(best)
    return CapacitySequence(values=tuple(out), provenance="union")


def capacities_via_weights(domain: ConcaveDomain, kmax: int) -> CapacitySequence:
    """Packing route: weight expansion, then disjoint-union of ball capacities."""
    expansion = singular_weight_expansion(domain)
    seqs = [ellipsoid_sequence(domain.n, expansion.singular_weight, expansion.singular_weight, kmax)]
    seqs.extend(ball_sequence(w, kmax) for w in expansion.plain_weights)
    merged = union_sequence(seqs, kmax)
    return CapacitySequence(values=merged.values, provenance="weights")


def capacities_via_oracle(
    domain: ConcaveDomain, kmax: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> CapacitySequence:
    """Brute-force route: per k, maximize path length over all paths with L_n = k."""
    if kmax > budget:
        raise ResourceLimit(
            f"kmax={kmax} exceeds the enumeration budget {budget}; raise `budget` explicitly"
        )
    buckets = pth.enumerate_paths_up_to(domain.n, kmax)
    out = []
    for k in range(kmax + 1):
        if not buckets[k]:
            raise AssertionError(f"no concave path with L_{domain.n} = {k}")
        out.append(max(omega_length_path(domain, p) for p in buckets[k]))
    return CapacitySequence(values=tuple(out), provenance="oracle")


def capacities_blowup(
    domain: ConcaveDomain, delta, kmax: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> CapacitySequence:
    """Oracle route for the rational blow-up of size delta."""
    delta = Fraction(delta)
    if delta < 0 or (delta > 0 and delta >= max_blowup_delta(domain)):
        raise DeltaTooLarge(f"delta={delta} is not admissible for this domain")
    if kmax > budget:
        raise ResourceLimit(
            f"kmax={kmax} exceeds the enumeration budget {budget}; raise `budget` explicitly"
        )
    buckets = pth.enumerate_paths_up_to(domain.n, kmax)
    out = []
    for k in range(kmax + 1):
        out.append(max(omega_length_blowup(domain, p, delta) for p in buckets[k]))
    return CapacitySequence(values=tuple(out), provenance="blowup")


def singular_ball_capacity(domain: ConcaveDomain) -> Fraction:
    """Largest a with the singular ball B_n(a) included in the domain."""
    return singular_weight_expansion(domain).singular_weight


@dataclass(frozen=True)
class ObstructionReport:
    kmax: int
    violations: tuple  # ((k, source_value, target_value), ...)
    note: str = MONOTONICITY_NOTE

    @property
    def obstructed(self) -> bool:
        return bool(self.violations)


def obstruction_report(
    source: CapacitySequence, target: CapacitySequence, kmax=None
) -> ObstructionReport:
    """Indices where source capacities exceed target capacities (embedding
    obstructions by monotonicity)."""
    if kmax is None:
        kmax = min(len(source), len(target)) - 1
    if len(source) <= kmax or len(target) <= kmax:
        raise InsufficientLength(
            f"sequences of length {len(source)}, {len(target)} do not cover kmax={kmax}"
        )
    violations = tuple(
        (k, source[k], target[k]) for k in range(kmax + 1) if source[k] > target[k]
    )
    return ObstructionReport(kmax=kmax, violations=violations)


# ---------------------------------------------------------------------------
# Index formulas


def ellipsoid_orbit_index(n: int, a, b, r: int, s: int) -> int:
    """Index of the orbit set with the two exceptional orbits at powers r, s."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise NonPositivePeriod(f"ellipsoid parameters must be positive, got {a}, {b}")
    if r < 0 or s < 0:
        raise ValueError("multiplicities must be non-negative")
    if (r + s) % n != 0:
        raise HomologyNotZero(f"r + s = {r + s} is not a multiple of n = {n}")
    k = (r + s) // n
    total = n * k * (k + 1) + 2 * k
    phi_plus = (a - b) / (n * b)
    phi_minus = (b - a) / (n * a)
    total += 2 * sum(floor(i * phi_plus) for i in range(1, r + 1))
    total += 2 * sum(floor(i * phi_minus) for i in range(1, s + 1))
    return total


@dataclass(frozen=True)
class OrbitSetDescriptor:
    m_plus: int
    m_minus: int
    generator: pth.ConcaveGenerator


def orbit_set_index(domain: ConcaveDomain, orbit: OrbitSetDescriptor) -> int:
    """Index of an orbit set with exceptional-orbit powers, via the auxiliary
    path obtained by padding the generator with horizontal unit edges."""
    n = domain.n
    gen = orbit.generator
    m_plus, m_minus = orbit.m_plus, orbit.m_minus
    if m_plus < 0 or m_minus < 0:
        raise ValueError("exceptional multiplicities must be non-negative")
    run = m_plus + m_minus + sum(-d[0] * m for d, m in gen.path.edges)
    if run % n != 0:
        raise HomologyNotZero(f"total horizontal run {run} is not a multiple of n = {n}")
    big_m = run // n
    # auxiliary chain: m_plus horizontal steps, the generator, m_minus steps
    chain = [(big_m * n, big_m)]
    segments = []
    if m_plus:
        segments.append(((-1, 0), m_plus))
    segments.extend(gen.path.edges)
    if m_minus:
        segments.append(((-1, 0), m_minus))
    for d, m in segments:
        x, y = chain[-1]
        chain.append((x + m * d[0], y + m * d[1]))
    for v in chain:
        if not in_cone(v, n):
            raise PathError(f"auxiliary path vertex {v} leaves the cone")
    big_l = pth._count_columns(n, chain) if len(chain) > 1 else 0
    rot = rotation_numbers(domain)
    total = 2 * big_l + 2 * m_plus + 2 * m_minus + gen.h_count()
    total += 2 * sum(floor(i * rot.phi_plus) for i in range(1, m_plus + 1))
    total += 2 * sum(floor(j * rot.phi_minus) for j in range(1, m_minus + 1))
    return total


# ---------------------------------------------------------------------------
# Index bijectivity for near-irrational ellipsoids


def _layer_entries(n, a, b, k):
    entries = []
    for r in range(k * n + 1):
        s = k * n - r
        entries.append((ellipsoid_orbit_index(n, a, b, r, s), (r, s)))
    return entries


def index_bijectivity_check(n: int, a, b, kmax_layers: int):
    """Check that the index is a bijection onto the even numbers at desk scale.

    Considers every orbit set in layers r + s = k*n for k <= kmax_layers
    (count T of them) and verifies that the T smallest indices over a
    sufficiently extended range of layers are exactly 0, 2, ..., 2(T-1).
    Returns (ok, certificate) where the certificate is the sorted
    (index, (r, s)) table of those T orbit sets.
    """
    a, b = Fraction(a), Fraction(b)
    if kmax_layers < 0:
        raise ValueError("layer count must be non-negative")
    target_count = sum(k * n + 1 for k in range(kmax_layers + 1))
    bound = 2 * (target_count - 1)

    entries = []
    k = 0
    quiet_layers = 0
    imax = kmax_layers * n
    while k <= kmax_layers or quiet_layers < 2:
        layer = _layer_entries(n, a, b, k)
        entries.extend(layer)
        if k > kmax_layers:
            quiet_layers = quiet_layers + 1 if min(i for i, _ in layer) > bound else 0
            # extension entries influence the verdict (and thus need exact
            # floors) only when they can land inside the target window
            for index, (r, s) in layer:
                if index <= bound:
                    imax = max(imax, r, s)
        k += 1
        if k > 8 * (kmax_layers + 2):
            break

    phi_plus = (a - b) / (n * b)
    phi_minus = (b - a) / (n * a)
    for i in range(1, imax + 1):
        if (i * phi_plus).denominator == 1 or (i * phi_minus).denominator == 1:
            raise DegenerateRatio(
                f"floor argument is an exact integer at multiplicity {i}; "
                f"the ratio {a}/{b} is too rational for {kmax_layers} layers"
            )

    entries.sort()
    certificate = entries[:target_count]
    indices = [i for i, _ in certificate]
    ok = indices == list(range(0, 2 * target_count, 2))
    return ok, certificate


def spectrum_from_orbit_indices(n: int, a, b, count: int):
    """Actions a*r + b*s of the orbit sets with index 0, 2, ..., 2(count-1)."""
    a, b = Fraction(a), Fraction(b)
    layers = 1
    while sum(k * n + 1 for k in range(layers + 1)) < count:
        layers += 1
    ok, certificate = index_bijectivity_check(n, a, b, layers)
    if not ok:
        raise DegenerateRatio("index is not bijective on the tested range")
    return [a * r + b * s for _, (r, s) in certificate[:count]]
