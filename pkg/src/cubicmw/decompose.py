"""Composition table over the point registry and decomposition search.

A point is strongly decomposable when it is y o z for two earlier points
(y = z meaning the tangent relation), and weakly decomposable when it is
reachable from the earlier points by iterated compositions whose
intermediate values all stay inside the registry.  Points that are neither
form the generator set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .enumeration import PointRegistry
from .errors import EqualPoints, LineOnSurface, ParseError
from .surface import on_tangent_section, secant_compose

OP = "∘"  # the composition symbol used in rendered schemes


@dataclass
class CompositionTable:
    """Outcomes of all unordered compositions restricted to the registry.

    `in_vh[(i, j)] = k` (i < j) when point_i o point_j is registry point k;
    `undefined` holds pairs whose secant line lies on the surface; every
    other pair composes to a point outside the registry.  `tangent[i]` is
    the sorted tuple of ranks lying on the tangent section at point i.
    """

    registry: PointRegistry
    in_vh: dict[tuple[int, int], int] = field(default_factory=dict)
    undefined: set[tuple[int, int]] = field(default_factory=set)
    tangent: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def outcome(self, i: int, j: int):
        key = (i, j) if i < j else (j, i)
        if key in self.in_vh:
            return ("in", self.in_vh[key])
        if key in self.undefined:
            return ("undefined", None)
        return ("outside", None)


def build_table(registry: PointRegistry) -> CompositionTable:
    """Evaluate all unordered pairs and all tangent-section rows."""
    if len(registry) == 0:
        raise ValueError("empty registry")
    table = CompositionTable(registry)
    surface = registry.surface
    pts = registry.points
    n = len(pts)
    for i in range(1, n + 1):
        xi = pts[i - 1]
        for j in range(i + 1, n + 1):
            try:
                z = secant_compose(surface, xi, pts[j - 1])
            except LineOnSurface:
                table.undefined.add((i, j))
                continue
            k = registry.index.get(z.coords)
            if k is not None:
                table.in_vh[(i, j)] = k
    for i in range(1, n + 1):
        xi = pts[i - 1]
        row = [
            j
            for j in range(1, n + 1)
            if j != i and on_tangent_section(surface, pts[j - 1], xi)
        ]
        table.tangent[i] = tuple(row)
    return table


def strong_decompositions(table: CompositionTable) -> dict[int, list[tuple[int, int]]]:
    """All relations x = y o z with y, z earlier than x (y = z allowed)."""
    strong: dict[int, list[tuple[int, int]]] = {}
    for (i, j), k in table.in_vh.items():
        if i < k and j < k:
            strong.setdefault(k, []).append((i, j))
    for i, row in table.tangent.items():
        for j in row:
            if i < j:
                strong.setdefault(j, []).append((i, i))
    return {k: sorted(v) for k, v in sorted(strong.items())}


@dataclass(frozen=True)
class Scheme:
    """Binary composition tree; leaves are ranks, nodes carry their value rank."""

    rank: int
    left: "Scheme | None" = None
    right: "Scheme | None" = None
    tangent: bool = False

    @property
    def is_leaf(self) -> bool:
        return self.left is None


def _closure(
    table: CompositionTable, seeds: set[int]
) -> tuple[set[int], dict[int, tuple[int, int]]]:
    """Fixpoint of the seed set under table compositions, with back-pointers.

    parents[k] = (i, j) is the lexicographically smallest producing pair in
    the earliest generation; (i, i) marks the tangent relation k = i o i.
    """
    reached = set(seeds)
    parents: dict[int, tuple[int, int]] = {}
    pair_items = sorted(table.in_vh.items())
    tangent_items = sorted(table.tangent.items())
    while True:
        candidates: dict[int, tuple[int, int]] = {}
        for (i, j), k in pair_items:
            if k not in reached and i in reached and j in reached:
                prev = candidates.get(k)
                if prev is None or (i, j) < prev:
                    candidates[k] = (i, j)
        for i, row in tangent_items:
            if i not in reached:
                continue
            for j in row:
                if j not in reached:
                    prev = candidates.get(j)
                    if prev is None or (i, i) < prev:
                        candidates[j] = (i, i)
        if not candidates:
            return reached, parents
        for k, pair in candidates.items():
            reached.add(k)
            parents[k] = pair


def _scheme_from_parents(
    target: int, seeds: set[int], parents: dict[int, tuple[int, int]]
) -> Scheme:
    if target in seeds:
        return Scheme(target)
    i, j = parents[target]
    left = _scheme_from_parents(i, seeds, parents)
    if i == j:
        return Scheme(target, left, left, tangent=True)
    return Scheme(target, left, _scheme_from_parents(j, seeds, parents))


def weak_closure(table: CompositionTable, x: int) -> tuple[bool, Scheme | None]:
    """Whether rank x is generated by the earlier ranks, with a witness scheme.

    Leaves of the witness are ranks below x; intermediate values may be any
    registry point.  The scheme is minimal in closure generations, ties
    broken by smallest producing rank pair.
    """
    seeds = set(range(1, x))
    reached, parents = _closure(table, seeds)
    if x not in reached:
        return False, None
    return True, _scheme_from_parents(x, seeds, parents)


def generators(table: CompositionTable) -> list[int]:
    """Ranks that are not weakly decomposable; they regenerate the registry."""
    strong = strong_decompositions(table)
    out = []
    for x in range(1, len(table.registry) + 1):
        if x in strong:
            continue
        ok, _ = weak_closure(table, x)
        if not ok:
            out.append(x)
    return out


def render_scheme(scheme: Scheme) -> str:
    """Fully parenthesized infix rendering over ranks, e.g. `5o(1o2)`."""

    def sub(s: Scheme) -> str:
        return str(s.rank) if s.is_leaf else "(" + top(s) + ")"

    def top(s: Scheme) -> str:
        return f"{sub(s.left)}{OP}{sub(s.right)}"

    return str(scheme.rank) if scheme.is_leaf else top(scheme)


def parse_scheme(text: str):
    """Parse a rendered scheme into nested (left, right) tuples with int leaves."""
    pos = 0

    def atom():
        nonlocal pos
        if pos < len(text) and text[pos] == "(":
            pos += 1
            node = expr()
            if pos >= len(text) or text[pos] != ")":
                raise ParseError(f"missing ')' at position {pos} in {text!r}")
            pos += 1
            return node
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError(f"expected rank at position {pos} in {text!r}")
        return int(text[start:pos])

    def expr():
        nonlocal pos
        left = atom()
        if pos < len(text) and text[pos] == OP:
            pos += 1
            return (left, atom())
        return left

    tree = expr()
    if pos != len(text):
        raise ParseError(f"trailing input at position {pos} in {text!r}")
    return tree


def evaluate_scheme(registry: PointRegistry, scheme: Scheme):
    """Re-evaluate an annotated scheme bottom-up through the surface arithmetic."""
    surface = registry.surface
    if scheme.is_leaf:
        return registry.point(scheme.rank)
    child = evaluate_scheme(registry, scheme.left)
    value = registry.point(scheme.rank)
    if scheme.tangent:
        if not on_tangent_section(surface, value, child):
            raise ValueError(f"tangent witness fails at rank {scheme.rank}")
        return value
    other = evaluate_scheme(registry, scheme.right)
    z = secant_compose(surface, child, other)
    if z.coords != value.coords:
        raise ValueError(f"scheme value mismatch at rank {scheme.rank}")
    return value


def evaluate_parsed(registry: PointRegistry, tree) -> set[tuple[int, ...]]:
    """Value set of a parsed (unannotated) scheme; tangent nodes are multivalued."""
    surface = registry.surface
    if isinstance(tree, int):
        return {registry.point(tree).coords}
    lvals = evaluate_parsed(registry, tree[0])
    rvals = evaluate_parsed(registry, tree[1])
    out: set[tuple[int, ...]] = set()
    for a in lvals:
        pa = registry.point(registry.index[a])
        for b in rvals:
            if a == b:
                for sp in registry.points:
                    if sp.coords != a and on_tangent_section(surface, sp, pa):
                        out.add(sp.coords)
                continue
            try:
                z = secant_compose(surface, pa, registry.point(registry.index[b]))
            except (EqualPoints, LineOnSurface):
                continue
            if z.coords in registry.index:
                out.add(z.coords)
    return out


@dataclass
class DecompositionReport:
    registry: PointRegistry
    strong: dict[int, list[tuple[int, int]]]
    weak_witnesses: dict[int, Scheme]
    generator_ranks: list[int]

    def to_json_dict(self) -> dict:
        reg = self.registry
        return {
            "points": len(reg),
            "strong_count": len(self.strong),
            "weak_only_count": len(self.weak_witnesses),
            "generator_count": len(self.generator_ranks),
            "generators": [list(reg.point(r).coords) for r in self.generator_ranks],
            "strong": {str(k): [list(p) for p in v] for k, v in self.strong.items()},
            "weak_witnesses": {
                str(k): render_scheme(s) for k, s in sorted(self.weak_witnesses.items())
            },
        }


def build_report(table: CompositionTable) -> DecompositionReport:
    """Partition the registry into strong / weak-only / generator points."""
    strong = strong_decompositions(table)
    weak: dict[int, Scheme] = {}
    gens: list[int] = []
    for x in range(1, len(table.registry) + 1):
        if x in strong:
            continue
        ok, scheme = weak_closure(table, x)
        if ok:
            weak[x] = scheme
        else:
            gens.append(x)
    return DecompositionReport(table.registry, strong, weak, gens)
