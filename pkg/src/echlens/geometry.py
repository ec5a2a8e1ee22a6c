"""Exact 2D primitives: rational scalars, cross products, cone tests, SL2(Z) maps.

All scalars are `fractions.Fraction` (or plain int where a value is known to
be integral); nothing in the library ever rounds.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import ParseError

# Points and lattice vectors are plain (x, y) pairs; a 2x2 matrix is a pair
# of rows ((m11, m12), (m21, m22)).

IDENTITY = ((1, 0), (0, 1))

# The three unimodular matrices used by the weight expansion.
def cone_change_matrix(n: int):
    """Matrix sending the (n,1)-ray corner of the cone to the standard quadrant."""
    return ((0, 1), (-1, n))


SHEAR_DOWN = ((1, 0), (1, 1))
SHEAR_RIGHT = ((1, 1), (0, 1))

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the `p` / `p/q` rational syntax (no whitespace, q > 0)."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def cross(u, v):
    """u.x * v.y - u.y * v.x; the single orientation convention of the library."""
    return u[0] * v[1] - u[1] * v[0]


def in_cone(p, n: int) -> bool:
    """Membership in V_n = {r1*(n,1) + r2*(0,1) : r1, r2 >= 0}."""
    return p[0] >= 0 and n * p[1] >= p[0]


def strictly_in_cone(p, n: int) -> bool:
    return p[0] > 0 and n * p[1] > p[0]


def det(m) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def is_unimodular(m) -> bool:
    return det(m) in (1, -1)


def apply_matrix(m, p):
    return (m[0][0] * p[0] + m[0][1] * p[1], m[1][0] * p[0] + m[1][1] * p[1])


def apply_unimodular(m, p):
    if not is_unimodular(m):
        raise ValueError(f"matrix {m} has determinant {det(m)}, not +-1")
    return apply_matrix(m, p)


def is_primitive(v) -> bool:
    return gcd(abs(v[0]), abs(v[1])) == 1 and v != (0, 0)


def vec_add(u, v):
    return (u[0] + v[0], u[1] + v[1])


def vec_sub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def vec_scale(v, r):
    return (r * v[0], r * v[1])


def parse_point(text: str, line: int, col: int):
    """Parse `(x,y)` with rational coordinates; errors carry line/column."""
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"expected (x,y), got {text!r}", line, col)
    body = text[1:-1]
    parts = body.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected two comma-separated coordinates in {text!r}", line, col)
    coords = []
    offset = 1
    for part in parts:
        try:
            coords.append(parse_rational(part))
        except ValueError:
            raise ParseError(f"bad rational {part!r}", line, col + offset) from None
        offset += len(part) + 1
    return (coords[0], coords[1])
