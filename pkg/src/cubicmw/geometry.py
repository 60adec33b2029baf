"""Exact projective arithmetic over Q and small prime fields.

Points, lines, hyperplanes and integer cubic forms with evaluation,
gradient and polarization.  All arithmetic is exact; nothing here uses
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DimensionMismatch,
    ZeroVector,
)

_PRIME_CAP = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field tag: p=None means Q, otherwise the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not (self.p < _PRIME_CAP and _is_prime(self.p)):
                raise ValueError(f"not a prime below 2^31: {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __repr__(self):
        return "Q" if self.p is None else f"F{self.p}"


RATIONALS = Field(None)


def _canonical(raw: Sequence[int], field: Field) -> tuple[int, ...]:
    """Canonical representative of a projective vector (point or dual)."""
    v = [int(c) for c in raw]
    if field.p is None:
        g = math.gcd(*v) if len(v) > 1 else abs(v[0])
        if g == 0:
            raise ZeroVector(f"zero vector {tuple(raw)}")
        v = [c // g for c in v]
        for c in v:
            if c != 0:
                if c < 0:
                    v = [-x for x in v]
                break
        return tuple(v)
    p = field.p
    v = [c % p for c in v]
    lead = next((c for c in v if c != 0), 0)
    if lead == 0:
        raise ZeroVector(f"zero vector mod {p}: {tuple(raw)}")
    inv = pow(lead, -1, p)
    return tuple((c * inv) % p for c in v)


@dataclass(frozen=True)
class ProjPoint:
    """Normalized homogeneous coordinates of a point in P^2 or P^3."""

    coords: tuple[int, ...]
    field: Field = RATIONALS

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __repr__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Line2:
    """Line in P^2 by normalized dual coordinates."""

    coords: tuple[int, ...]
    field: Field = RATIONALS


@dataclass(frozen=True)
class Hyperplane3:
    """Hyperplane in P^3 by normalized dual coordinates."""

    coords: tuple[int, ...]
    field: Field = RATIONALS


def normalize(raw: Sequence[int], field: Field = RATIONALS) -> ProjPoint:
    """Canonical projective point: primitive, sign-fixed (Q) or monic-lead (F_p)."""
    if len(raw) not in (3, 4):
        raise DimensionMismatch(f"expected 3 or 4 coordinates, got {len(raw)}")
    return ProjPoint(_canonical(raw, field), field)


def line2(raw: Sequence[int], field: Field = RATIONALS) -> Line2:
    if len(raw) != 3:
        raise DimensionMismatch("a line in P^2 has 3 dual coordinates")
    return Line2(_canonical(raw, field), field)


def hyperplane3(raw: Sequence[int], field: Field = RATIONALS) -> Hyperplane3:
    if len(raw) != 4:
        raise DimensionMismatch("a hyperplane in P^3 has 4 dual coordinates")
    return Hyperplane3(_canonical(raw, field), field)


def _cross(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]


def line_through(a: ProjPoint, b: ProjPoint) -> Line2:
    """The unique line of P^2 containing the two distinct points a, b."""
    if a.field != b.field:
        raise DimensionMismatch("points over different fields")
    if a.dim != 3 or b.dim != 3:
        raise DimensionMismatch("line_through needs points of P^2")
    if a.coords == b.coords:
        raise CoincidentPoints(f"{a} = {b}")
    try:
        return line2(_cross(a.coords, b.coords), a.field)
    except ZeroVector:
        # proportional mod p despite distinct canonical forms cannot happen
        raise CoincidentPoints(f"{a} = {b}")


def meet(l1: Line2, l2: Line2) -> ProjPoint:
    """Intersection point of two distinct lines of P^2."""
    if l1.field != l2.field:
        raise DimensionMismatch("lines over different fields")
    if l1.coords == l2.coords:
        raise CoincidentLines(f"{l1.coords} = {l2.coords}")
    return normalize(_cross(l1.coords, l2.coords), l1.field)


def incident(line: Line2 | Hyperplane3, x: ProjPoint) -> bool:
    d = sum(a * b for a, b in zip(line.coords, x.coords))
    return d == 0 if x.field.p is None else d % x.field.p == 0


@dataclass
class CubicForm:
    """Integer homogeneous cubic form, stored sparsely by exponent multi-index."""

    dim: int
    coeffs: dict[tuple[int, ...], int]

    def __post_init__(self):
        cleaned = {}
        for expo, c in self.coeffs.items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != self.dim or any(e < 0 for e in expo) or sum(expo) != 3:
                raise ValueError(f"bad degree-3 exponent index {expo}")
            if c:
                cleaned[expo] = int(c)
        if not cleaned:
            raise ValueError("zero cubic form")
        self.coeffs = cleaned

    @classmethod
    def diagonal(cls, coefficients: Iterable[int]) -> "CubicForm":
        """Sum a_i x_i^3 from the given diagonal coefficients."""
        a = [int(c) for c in coefficients]
        n = len(a)
        coeffs = {}
        for i, ai in enumerate(a):
            expo = [0] * n
            expo[i] = 3
            coeffs[tuple(expo)] = ai
        return cls(n, coeffs)


def _check_dims(form: CubicForm, *points: ProjPoint) -> None:
    for x in points:
        if x.dim != form.dim:
            raise DimensionMismatch(
                f"form in {form.dim} variables, point has {x.dim} coordinates"
            )


def eval_form(form: CubicForm, x: ProjPoint) -> int:
    """Exact value of the form at the normalized representative."""
    _check_dims(form, x)
    v = x.coords
    total = 0
    for expo, c in form.coeffs.items():
        term = c
        for xi, e in zip(v, expo):
            for _ in range(e):
                term *= xi
        total += term
    return total if x.field.p is None else total % x.field.p


def gradient(form: CubicForm, x: ProjPoint) -> tuple[int, ...]:
    """Values of the partial derivatives at x; satisfies Euler's identity."""
    _check_dims(form, x)
    v = x.coords
    out = [0] * form.dim
    for expo, c in form.coeffs.items():
        for i, e in enumerate(expo):
            if e == 0:
                continue
            term = c * e
            for j, ej in enumerate(expo):
                pw = ej - 1 if j == i else ej
                for _ in range(pw):
                    term *= v[j]
            out[i] += term
    if x.field.p is not None:
        out = [c % x.field.p for c in out]
    return tuple(out)


def polar_coeffs(
    form: CubicForm, x: ProjPoint, y: ProjPoint
) -> tuple[int, int, int, int]:
    """Coefficients (c0,c1,c2,c3) of F(x + t*y) as a cubic polynomial in t."""
    _check_dims(form, x, y)
    if x.field != y.field:
        raise DimensionMismatch("points over different fields")
    c = [0, 0, 0, 0]
    for expo, a in form.coeffs.items():
        # multiply out prod (x_i + t y_i)^{e_i}, total degree 3
        poly = [a, 0, 0, 0]
        for xi, yi, e in zip(x.coords, y.coords, expo):
            for _ in range(e):
                poly = [
                    xi * poly[0],
                    xi * poly[1] + yi * poly[0],
                    xi * poly[2] + yi * poly[1],
                    xi * poly[3] + yi * poly[2],
                ]
        for k in range(4):
            c[k] += poly[k]
    if x.field.p is not None:
        c = [v % x.field.p for v in c]
    return tuple(c)
