"""Face-poset model of finite regular CW-complexes.

A complex is stored through its covering relation: each cell lists the ids
of the cells one dimension down on its boundary sphere. Full closures,
per-dimension indexes and side degrees are computed once at construction;
after that a Complex never changes, so instances are safe to share and
every query gives the same answer twice.

Vocabulary used throughout: with n the dimension of the complex, *facets*
are the n-cells, *sides* the (n-1)-cells, *corners* the (n-2)-cells. The
*degree* of a side is the number of facets it lies under. A complex is
*pure* when every cell lies under some facet and *even* when it is pure
and every side degree is positive and even.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import (
    BadDimension,
    BadParameters,
    DanglingReference,
    DuplicateCellId,
    EmptyBoundary,
    EmptyComplex,
    EmptyFacetSet,
    NonRegularEdge,
    NotAFacet,
    NotPure,
    RankOutOfRange,
    ZeroDimensional,
)

__all__ = [
    "Cell",
    "cell",
    "Complex",
    "build_complex",
    "Violation",
    "ValidationReport",
    "validate_regularity",
    "skeleton",
    "induced_subcomplex",
    "DegreeProfile",
    "degree_profile",
    "DualEdge",
    "DualMultigraph",
    "dual_multigraph",
    "corner_link",
    "strong_components",
    "bridges",
    "euler_characteristic",
]


@dataclass(frozen=True)
class Cell:
    """One cell: an id, a dimension, and the ids one dimension down."""

    id: str
    dim: int
    boundary: frozenset[str]


def cell(id: str, dim: int, boundary: Iterable[str] = ()) -> Cell:
    """Terse Cell factory that accepts any iterable boundary."""
    return Cell(str(id), int(dim), frozenset(str(b) for b in boundary))


class Complex:
    """Immutable face poset with cached derived structure.

    Construct through :func:`build_complex` (or directly, same thing).
    Cell ids are opaque strings; every tie anywhere in the library is
    broken by lexicographic id order, so all outputs are deterministic.
    """

    __slots__ = (
        "dim",
        "_cells",
        "_by_dim",
        "_closure",
        "_side_degrees",
        "_under_facet",
        "_dual",
        "_components",
    )

    def __init__(self, cells: Iterable[Cell]):
        ordered = sorted(cells, key=lambda c: (c.dim, c.id))
        if not ordered:
            raise EmptyComplex("a complex needs at least one cell")

        table: dict[str, Cell] = {}
        for c in ordered:
            if c.id in table:
                raise DuplicateCellId(f"cell id {c.id!r} appears twice")
            table[c.id] = c

        for c in ordered:
            if c.dim < 0:
                raise BadDimension(f"cell {c.id!r} has negative dimension")
            if c.dim == 0:
                if c.boundary:
                    raise BadDimension(f"0-cell {c.id!r} has a nonempty boundary")
                continue
            if not c.boundary:
                raise EmptyBoundary(f"{c.dim}-cell {c.id!r} has an empty boundary")
            for b in c.boundary:
                other = table.get(b)
                if other is None:
                    raise DanglingReference(
                        f"cell {c.id!r} references missing cell {b!r}"
                    )
                if other.dim != c.dim - 1:
                    raise BadDimension(
                        f"cell {c.id!r} (dim {c.dim}) references {b!r} "
                        f"of dim {other.dim}"
                    )
            if c.dim == 1 and len(c.boundary) != 2:
                raise NonRegularEdge(
                    f"1-cell {c.id!r} has {len(c.boundary)} endpoints, needs 2"
                )

        n = ordered[-1].dim
        by_dim: list[list[str]] = [[] for _ in range(n + 1)]
        for c in ordered:
            by_dim[c.dim].append(c.id)

        # closures bottom-up; boundary members always have smaller dim
        closure: dict[str, frozenset[str]] = {}
        for c in ordered:
            if c.dim == 0:
                closure[c.id] = frozenset((c.id,))
            else:
                acc: set[str] = {c.id}
                for b in c.boundary:
                    acc |= closure[b]
                closure[c.id] = frozenset(acc)

        degrees: Counter[str] = Counter()
        under: set[str] = set()
        for f in by_dim[n]:
            under |= closure[f]
            degrees.update(table[f].boundary)
        side_degrees = {s: degrees.get(s, 0) for s in by_dim[n - 1]} if n >= 1 else {}

        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "_cells", table)
        object.__setattr__(self, "_by_dim", tuple(tuple(ids) for ids in by_dim))
        object.__setattr__(self, "_closure", closure)
        object.__setattr__(self, "_side_degrees", side_degrees)
        object.__setattr__(self, "_under_facet", frozenset(under))
        object.__setattr__(self, "_dual", None)
        object.__setattr__(self, "_components", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Complex is immutable")

    # ---- basic queries ------------------------------------------------

    def __contains__(self, cell_id: str) -> bool:
        return cell_id in self._cells

    def __iter__(self) -> Iterator[Cell]:
        for r in range(self.dim + 1):
            for cid in self._by_dim[r]:
                yield self._cells[cid]

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._cells == other._cells

    def __repr__(self) -> str:
        counts = ",".join(str(len(ids)) for ids in self._by_dim)
        return f"Complex(dim={self.dim}, cells=[{counts}])"

    def cell(self, cell_id: str) -> Cell:
        return self._cells[cell_id]

    def boundary(self, cell_id: str) -> frozenset[str]:
        return self._cells[cell_id].boundary

    def closure(self, cell_id: str) -> frozenset[str]:
        """All cells under cell_id, itself included."""
        return self._closure[cell_id]

    def cells_of_dim(self, r: int) -> tuple[str, ...]:
        if 0 <= r <= self.dim:
            return self._by_dim[r]
        return ()

    @property
    def facets(self) -> tuple[str, ...]:
        return self._by_dim[self.dim]

    @property
    def sides(self) -> tuple[str, ...]:
        return self.cells_of_dim(self.dim - 1)

    @property
    def corners(self) -> tuple[str, ...]:
        return self.cells_of_dim(self.dim - 2)

    @property
    def side_degrees(self) -> Mapping[str, int]:
        return self._side_degrees

    @property
    def is_pure(self) -> bool:
        return len(self._under_facet) == len(self._cells)

    def facets_over(self, side_id: str) -> tuple[str, ...]:
        """Facets whose boundary contains the given side, sorted."""
        return tuple(
            f for f in self.facets if side_id in self._cells[f].boundary
        )


def build_complex(cells: Iterable[Cell]) -> Complex:
    """Validate raw cells and assemble an immutable complex.

    Raises DuplicateCellId, DanglingReference, BadDimension,
    NonRegularEdge, EmptyBoundary or EmptyComplex on malformed input.
    """
    return Complex(cells)


# ---- regularity validation -------------------------------------------


class Violation(NamedTuple):
    rule: str
    cells: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check: pass flag plus itemized violations."""

    passed: bool
    violations: tuple[Violation, ...]

    @staticmethod
    def from_violations(violations: Sequence[Violation]) -> "ValidationReport":
        vs = tuple(violations)
        return ValidationReport(passed=not vs, violations=vs)


def validate_regularity(k: Complex) -> ValidationReport:
    """Check the necessary local conditions for a regular CW structure.

    Three rules, reported rather than raised:

    * ``diamond``: inside every r-cell (r >= 2), each (r-2)-face lies
      under exactly two of the cell's (r-1)-faces.
    * ``boundary-pure``: every proper face of an r-cell (r >= 2) lies
      under one of its (r-1)-faces.
    * ``boundary-connected``: the (r-1)-faces of an r-cell (r >= 2) form
      a connected graph under shared (r-2)-faces.

    A pass is necessary, not sufficient: these are the poset-visible
    consequences of regularity, so a complex that fails is certainly not
    regular while a pass only means no local obstruction was found.
    """
    violations: list[Violation] = []
    for r in range(2, k.dim + 1):
        for gid in k.cells_of_dim(r):
            faces = k.boundary(gid)
            sub_closures = {b: k.closure(b) for b in faces}
            proper = k.closure(gid) - {gid}

            covered: set[str] = set()
            for cl in sub_closures.values():
                covered |= cl
            stranded = sorted(proper - covered)
            if stranded:
                violations.append(
                    Violation(
                        "boundary-pure",
                        (gid, *stranded),
                        f"faces of {gid!r} not under any of its "
                        f"{r - 1}-faces: {stranded}",
                    )
                )

            for aid in sorted(x for x in proper if k.cell(x).dim == r - 2):
                count = sum(1 for cl in sub_closures.values() if aid in cl)
                if count != 2:
                    violations.append(
                        Violation(
                            "diamond",
                            (gid, aid),
                            f"{r - 2}-cell {aid!r} lies under {count} of the "
                            f"{r - 1}-faces of {gid!r}, expected 2",
                        )
                    )

            if len(faces) > 1:
                order = sorted(faces)
                seen = {order[0]}
                queue = deque(seen)
                while queue:
                    b = queue.popleft()
                    for other in order:
                        if other not in seen and any(
                            k.cell(x).dim == r - 2
                            for x in sub_closures[b] & sub_closures[other]
                        ):
                            seen.add(other)
                            queue.append(other)
                if len(seen) != len(faces):
                    violations.append(
                        Violation(
                            "boundary-connected",
                            (gid,),
                            f"the {r - 1}-faces of {gid!r} split into "
                            "disconnected groups",
                        )
                    )
    return ValidationReport.from_violations(violations)


# ---- subcomplex constructions ----------------------------------------


def skeleton(k: Complex, r: int) -> Complex:
    """The subcomplex of all cells of dimension at most r."""
    if not 0 <= r <= k.dim:
        raise RankOutOfRange(f"rank {r} outside [0, {k.dim}]")
    if r == k.dim:
        return k
    kept = [k.cell(cid) for s in range(r + 1) for cid in k.cells_of_dim(s)]
    return Complex(kept)


def induced_subcomplex(k: Complex, facet_ids: Iterable[str]) -> Complex:
    """Closure of a facet set: those facets plus every cell under them."""
    wanted = sorted(set(facet_ids))
    if not wanted:
        raise EmptyFacetSet("need at least one facet")
    top = set(k.facets)
    keep: set[str] = set()
    for f in wanted:
        if f not in top:
            raise NotAFacet(f"{f!r} is not a {k.dim}-cell of the complex")
        keep |= k.closure(f)
    return Complex([k.cell(cid) for cid in keep])


# ---- degrees and evenness --------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    degrees: Mapping[str, int]
    is_pure: bool
    is_even: bool

    def histogram(self) -> dict[int, int]:
        out: Counter[int] = Counter(self.degrees.values())
        return dict(sorted(out.items()))


def degree_profile(k: Complex) -> DegreeProfile:
    """Side degrees plus the pure/even verdicts. Needs dimension >= 1."""
    if k.dim == 0:
        raise ZeroDimensional("0-dimensional complexes have no sides")
    degrees = dict(k.side_degrees)
    pure = k.is_pure
    even = pure and all(d > 0 and d % 2 == 0 for d in degrees.values())
    return DegreeProfile(degrees=degrees, is_pure=pure, is_even=even)


# ---- dual multigraph --------------------------------------------------


class DualEdge(NamedTuple):
    left: str
    right: str
    side: str


@dataclass(frozen=True)
class DualMultigraph:
    """Vertices are facet ids; one edge per (facet pair, shared side)."""

    vertices: tuple[str, ...]
    edges: tuple[DualEdge, ...]

    def adjacency(self) -> dict[str, list[tuple[int, str]]]:
        """vertex -> list of (edge index, other endpoint)."""
        adj: dict[str, list[tuple[int, str]]] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            adj[e.left].append((i, e.right))
            adj[e.right].append((i, e.left))
        return adj


def dual_multigraph(k: Complex) -> DualMultigraph:
    """The side-adjacency multigraph on facets.

    A side of degree d contributes d*(d-1)/2 parallel-free edges, one per
    unordered facet pair over it; parallel edges between a pair arise from
    distinct shared sides. Requires a pure complex of dimension >= 1.
    """
    if k.dim == 0:
        raise ZeroDimensional("0-dimensional complexes have no dual")
    if (cached := k._dual) is not None:
        return cached
    if not k.is_pure:
        raise NotPure("dual multigraph needs a pure complex")
    edges: list[DualEdge] = []
    for s in k.sides:
        over = k.facets_over(s)
        for i in range(len(over)):
            for j in range(i + 1, len(over)):
                edges.append(DualEdge(over[i], over[j], s))
    edges.sort(key=lambda e: (e.side, e.left, e.right))
    g = DualMultigraph(vertices=k.facets, edges=tuple(edges))
    object.__setattr__(k, "_dual", g)
    return g


def corner_link(k: Complex, corner_id: str) -> DualMultigraph:
    """The multigraph around one corner: facets over it, edges per side.

    Vertices are the facets whose closure contains the corner; every side
    over the corner contributes one edge per pair of facets sharing it.
    In a pseudomanifold this graph is 2-regular, a disjoint union of
    cycles.
    """
    if corner_id not in k or k.cell(corner_id).dim != k.dim - 2:
        raise BadParameters(f"{corner_id!r} is not an (n-2)-cell")
    verts = tuple(f for f in k.facets if corner_id in k.closure(f))
    edges: list[DualEdge] = []
    for s in k.sides:
        if corner_id not in k.closure(s):
            continue
        over = [f for f in verts if s in k.boundary(f)]
        for i in range(len(over)):
            for j in range(i + 1, len(over)):
                edges.append(DualEdge(over[i], over[j], s))
    edges.sort(key=lambda e: (e.side, e.left, e.right))
    return DualMultigraph(vertices=verts, edges=tuple(edges))


def strong_components(k: Complex) -> list[frozenset[str]]:
    """Connected components of the dual multigraph, as facet-id sets.

    Components are ordered by their smallest facet id. A complex with one
    component is called strongly connected.
    """
    if k.dim == 0:
        raise ZeroDimensional("0-dimensional complexes have no dual")
    if (cached := k._components) is not None:
        return list(cached)
    if not k.is_pure:
        raise NotPure("strong components need a pure complex")
    parent: dict[str, str] = {f: f for f in k.facets}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in k.sides:
        over = k.facets_over(s)
        for other in over[1:]:
            ra, rb = find(over[0]), find(other)
            if ra != rb:
                parent[rb] = ra
    groups: dict[str, set[str]] = {}
    for f in k.facets:
        groups.setdefault(find(f), set()).add(f)
    comps = sorted((frozenset(g) for g in groups.values()), key=min)
    object.__setattr__(k, "_components", tuple(comps))
    return comps


def bridges(g: DualMultigraph) -> list[DualEdge]:
    """Cut edges of a multigraph, in the graph's edge order.

    Parallel edges are never bridges; the DFS skips only the single edge
    it arrived by, so a second edge between the same endpoints keeps the
    pair 2-edge-connected.
    """
    adj = g.adjacency()
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    out: set[int] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        # iterative DFS; stack holds (vertex, arriving edge index, iterator)
        disc[root] = low[root] = counter
        counter += 1
        stack: list[tuple[str, int, Iterator[tuple[int, str]]]] = [
            (root, -1, iter(adj[root]))
        ]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for ei, w in it:
                if ei == via:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, ei, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        out.add(via)
    return [e for i, e in enumerate(g.edges) if i in out]


def euler_characteristic(k: Complex) -> int:
    """Alternating sum of cell counts by dimension."""
    return sum(
        (-1) ** r * len(k.cells_of_dim(r)) for r in range(k.dim + 1)
    )
