"""Blow-up model of a split cubic surface and its plane machinery.

Six base points of P^2 in general position span a 4-dimensional space of
cubics; evaluating a basis of that space embeds the complement of the base
locus onto a cubic surface in P^3.  On top of the model: twisted cubics
(preimages of plane lines), the quaternary line-intersection operation,
the section-dependent modified composition, and projective-plane closure.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import (
    AmbiguousKernel,
    BasePoint,
    BasePointResult,
    CoincidentLines,
    DegeneratePosition,
    DegenerateSample,
    DegenerateSeeds,
    EmptyKernel,
    NotOnSection,
)
from .geometry import (
    CubicForm,
    Field,
    Hyperplane3,
    Line2,
    ProjPoint,
    RATIONALS,
    eval_form,
    hyperplane3,
    line_through,
    meet,
    normalize,
)
from .linalg import det3, kernel_basis, rank
from .planecubic import PlaneCubic, cubic_compose

# ten cubic monomials in 3 variables, fixed order
CUBIC_MONOMIALS_3 = [
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
]

# twenty cubic monomials in 4 variables, fixed order
CUBIC_MONOMIALS_4 = sorted(
    (e for e in itertools.product(range(4), repeat=4) if sum(e) == 3),
    reverse=True,
)

DEFAULT_BASE = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, 4, 9)]


def _monomial_value(coords, expo) -> int:
    v = 1
    for c, e in zip(coords, expo):
        for _ in range(e):
            v *= c
    return v


def check_general_position(pts: list[ProjPoint]) -> tuple[bool, list[str]]:
    """Pairwise distinct, no three collinear, not all six on a conic."""
    report = []
    if len(pts) != 6:
        return False, [f"expected 6 points, got {len(pts)}"]
    field = pts[0].field
    p = field.p
    for i, j in itertools.combinations(range(6), 2):
        if pts[i] == pts[j]:
            report.append(f"points {i} and {j} coincide: {pts[i]}")
    for i, j, k in itertools.combinations(range(6), 3):
        d = det3(pts[i].coords, pts[j].coords, pts[k].coords)
        if (d == 0) if p is None else (d % p == 0):
            report.append(f"points {i},{j},{k} are collinear")
    conic_monomials = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    m = [[_monomial_value(x.coords, e) for e in conic_monomials] for x in pts]
    if rank(m, field) < 6:
        report.append("all six points lie on a conic")
    return not report, report


def cubic_system_basis(pts: list[ProjPoint]) -> list[CubicForm]:
    """Canonical basis of the 4-dimensional space of cubics through the six points."""
    field = pts[0].field
    m = [[_monomial_value(x.coords, e) for e in CUBIC_MONOMIALS_3] for x in pts]
    basis = kernel_basis(m, field)
    if len(basis) != 4:
        raise DegeneratePosition(
            f"cubics through the six points form a {len(basis)}-dimensional space"
        )
    return [
        CubicForm(3, dict(zip(CUBIC_MONOMIALS_3, vec))) for vec in basis
    ]


@dataclass
class BlowupModel:
    """Six base points, the cubic system through them, and the image surface."""

    field: Field
    base: list[ProjPoint]
    cubics: list[CubicForm]
    surface: CubicForm

    @classmethod
    def build(cls, base_raw=None, field: Field = RATIONALS) -> "BlowupModel":
        base_raw = base_raw if base_raw is not None else DEFAULT_BASE
        base = [normalize(b, field) for b in base_raw]
        ok, report = check_general_position(base)
        if not ok:
            raise DegeneratePosition("; ".join(report))
        cubics = cubic_system_basis(base)
        model = cls(field, base, cubics, None)
        model.surface = recover_cubic_equation(model)
        return model

    def is_base(self, q: ProjPoint) -> bool:
        return q in self.base


def embed(model: BlowupModel, q: ProjPoint) -> ProjPoint:
    """Image of a plane point under the cubic system, a point of P^3."""
    vals = [eval_form(f, q) for f in model.cubics]
    if not any(vals):
        raise BasePoint(f"{q} is a base point of the cubic system")
    return normalize(vals, model.field)


def _sample_plane_points(model: BlowupModel, count: int):
    """Deterministic schedule of non-base plane points."""
    p = model.field.p
    out = []
    if p is None:
        coords = itertools.chain.from_iterable(
            ((1, a, b) for a in range(-n, n + 1) for b in range(-n, n + 1)
             if max(abs(a), abs(b)) == n)
            for n in itertools.count(1)
        )
    else:
        grid = [(1, a, b) for a in range(p) for b in range(p)]
        grid += [(0, 1, b) for b in range(p)] + [(0, 0, 1)]
        random.Random(0xC3).shuffle(grid)  # fixed seed: spread, deterministic
        coords = iter(grid)
    for raw in coords:
        q = normalize(raw, model.field)
        if q in model.base:
            continue
        out.append(q)
        if len(out) == count:
            return out
    raise EmptyKernel("not enough sample points over this field")


def recover_cubic_equation(model: BlowupModel, samples: int = 60) -> CubicForm:
    """The quaternary cubic vanishing on the embedded image, by linear algebra."""
    for n in (samples, 2 * samples):
        pts = []
        for q in _sample_plane_points(model, n):
            try:
                pts.append(embed(model, q))
            except BasePoint:
                continue
        m = [[_monomial_value(x.coords, e) for e in CUBIC_MONOMIALS_4] for x in pts]
        basis = kernel_basis(m, model.field)
        if len(basis) == 1:
            return CubicForm(4, dict(zip(CUBIC_MONOMIALS_4, basis[0])))
        if len(basis) == 0:
            raise EmptyKernel("no cubic vanishes on the embedded samples")
    raise AmbiguousKernel(f"kernel dimension {len(basis)} after resampling")


def quaternary_star(
    model: BlowupModel, a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint
) -> ProjPoint:
    """Intersection of the twisted cubics through (a,b) and (c,d), via plane lines."""
    l1 = line_through(a, b)
    l2 = line_through(c, d)
    if l1.coords == l2.coords:
        raise CoincidentLines("the four points span a single line")
    x = meet(l1, l2)
    if model.is_base(x):
        raise BasePointResult(f"{x} is blown down; the twisted cubics meet a common line")
    return x


def twisted_cubic_samples(
    model: BlowupModel, a: ProjPoint, b: ProjPoint, n: int
) -> tuple[list[ProjPoint], int]:
    """n embedded points of the twisted cubic over the line (a,b), plus skip count."""
    p = model.field.p
    ts = range(4 * n + 24) if p is None else range(p)
    out = []
    skipped = 0
    candidates = itertools.chain(
        (tuple(xa + t * xb for xa, xb in zip(a.coords, b.coords)) for t in ts),
        [b.coords],
    )
    for raw in candidates:
        if len(out) == n:
            break
        try:
            q = normalize(raw, model.field)
        except Exception:
            continue
        try:
            out.append(embed(model, q))
        except BasePoint:
            skipped += 1
    return out, skipped


def pullback_cubic(model: BlowupModel, section: Hyperplane3) -> PlaneCubic:
    """The plane cubic cut out by a hyperplane section, pulled back through the model."""
    coeffs: dict[tuple[int, int, int], int] = {}
    for lam, f in zip(section.coords, model.cubics):
        if lam == 0:
            continue
        for expo, c in f.coeffs.items():
            coeffs[expo] = coeffs.get(expo, 0) + lam * c
    p = model.field.p
    if p is not None:
        coeffs = {e: c % p for e, c in coeffs.items()}
    coeffs = {e: c for e, c in coeffs.items() if c}
    if not coeffs:
        raise NotOnSection("hyperplane pulls back to the zero form")
    return PlaneCubic(CubicForm(3, coeffs), model.field)


def modified_compose(
    model: BlowupModel, section: Hyperplane3, x: ProjPoint, y: ProjPoint
) -> ProjPoint:
    """Composition of x, y inside the plane cubic pulled back from the section."""
    curve = pullback_cubic(model, section)
    if not curve.contains(x) or not curve.contains(y):
        raise NotOnSection(f"{x} or {y} is not on the section")
    z = cubic_compose(curve, x, y)
    if model.is_base(z):
        raise BasePointResult(f"composition lands on the base point {z}")
    return z


def section_through(model: BlowupModel, pts3: list[ProjPoint]) -> Hyperplane3:
    """The hyperplane of P^3 through three embedded points; unique in the generic case."""
    m = [list(x.coords) for x in pts3]
    basis = kernel_basis(m, model.field)
    if len(basis) != 1:
        raise DegenerateSample("the three embedded points are collinear in P^3")
    return hyperplane3(basis[0], model.field)


def verify_claim1(
    model: BlowupModel, a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint
) -> bool:
    """Check that the quaternary operation agrees with a modified composition.

    Computes x = *(a,b;c,d), takes the plane section through the embedded
    a, b, x and compares the modified composition of a, b against x.
    """
    x = quaternary_star(model, a, b, c, d)
    if x == a or x == b:
        raise DegenerateSample("the star value coincides with an operand")
    section = section_through(model, [embed(model, q) for q in (a, b, x)])
    return modified_compose(model, section, a, b) == x


def plane_closure(
    field: Field,
    seeds: list[ProjPoint],
    height_cap: int | None = None,
    max_generations: int | None = None,
) -> tuple[set[ProjPoint], int]:
    """Closure of the seeds under pairwise line intersections.

    Over a prime field this runs to an exact fixpoint.  Over Q a height cap
    is required and newly generated points above the cap are discarded; the
    closure is then a bounded portion of the true (infinite) closure, and
    `max_generations` bounds the search.  Returns (points, generations).
    """
    if len(seeds) < 4:
        raise DegenerateSeeds("need at least four seed points")
    for i, j, k in itertools.combinations(range(4), 3):
        d = det3(seeds[i].coords, seeds[j].coords, seeds[k].coords)
        if (d == 0) if field.p is None else (d % field.p == 0):
            raise DegenerateSeeds(f"seeds {i},{j},{k} are collinear")
    if field.p is None and height_cap is None:
        raise DegenerateSeeds("a height cap is required over Q")

    def admissible(x: ProjPoint) -> bool:
        return height_cap is None or max(abs(c) for c in x.coords) <= height_cap

    points = {s for s in seeds if admissible(s)}
    generation = 0
    while max_generations is None or generation < max_generations:
        lines: set[Line2] = set()
        for a, b in itertools.combinations(sorted(points, key=lambda q: q.coords), 2):
            lines.add(line_through(a, b))
        new = set()
        for l1, l2 in itertools.combinations(sorted(lines, key=lambda l: l.coords), 2):
            try:
                x = meet(l1, l2)
            except CoincidentLines:
                continue
            if x not in points and admissible(x):
                new.add(x)
        if not new:
            break
        points |= new
        generation += 1
    return points, generation
