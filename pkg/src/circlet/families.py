"""Deterministic generator families for fixtures, demos and benchmarks.

Every generator returns a freshly built Complex with stable ids, so two
calls with equal parameters produce byte-identical serializations. The
random families draw from one seeded RNG and are reproducible the same
way.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .complexes import Cell, Complex, build_complex, cell
from .errors import BadParameters

__all__ = [
    "FamilySpec",
    "FAMILIES",
    "generate",
    "cycle",
    "triangular_grid",
    "simplex_skeleton",
    "hypercube_skeleton",
    "crosspolytope_skeleton",
    "finned_circlet",
    "random_even",
    "random_even_multigraph",
]


def cycle(n: int) -> Complex:
    """The n-cycle as a 1-complex: vertices v0..v(n-1), edges ei-j."""
    if n < 3:
        raise BadParameters("cycle needs n >= 3")
    cells = [cell(f"v{i}", 0) for i in range(n)]
    for i in range(n):
        j = (i + 1) % n
        a, b = min(i, j), max(i, j)
        cells.append(cell(f"e{a}-{b}", 1, (f"v{a}", f"v{b}")))
    return build_complex(cells)


def triangular_grid(rows: int) -> Complex:
    """Triangle subdivided into rows^2 small triangles, edges only.

    Corner vertices have degree 2, boundary vertices 4, interior 6, so
    the graph is even and connected for every rows >= 1. rows=3 gives
    the 10-vertex, 18-edge grid used as the standard 1-dimensional
    fixture.
    """
    if rows < 1:
        raise BadParameters("triangular_grid needs rows >= 1")
    cells: list[Cell] = []
    for i in range(rows + 1):
        for j in range(i + 1):
            cells.append(cell(f"v{i}.{j}", 0))

    def edge(i1: int, j1: int, i2: int, j2: int) -> Cell:
        a, b = sorted([(i1, j1), (i2, j2)])
        return cell(
            f"e{a[0]}.{a[1]}-{b[0]}.{b[1]}",
            1,
            (f"v{a[0]}.{a[1]}", f"v{b[0]}.{b[1]}"),
        )

    for i in range(rows + 1):
        for j in range(i):
            cells.append(edge(i, j, i, j + 1))
    for i in range(rows):
        for j in range(i + 1):
            cells.append(edge(i, j, i + 1, j))
            cells.append(edge(i, j, i + 1, j + 1))
    return build_complex(cells)


def _tuple_id(vertices: tuple[int, ...]) -> str:
    return "-".join(str(v) for v in vertices)


def simplex_skeleton(v: int, k: int) -> Complex:
    """The k-skeleton of the simplex on v vertices labeled 1..v.

    An r-cell is an (r+1)-subset, id joined with dashes in numeric
    order; its boundary is all one-smaller subsets.
    """
    if v < 1 or not 0 <= k <= v - 1:
        raise BadParameters("simplex_skeleton needs v >= 1, 0 <= k <= v-1")
    cells: list[Cell] = []
    for r in range(k + 1):
        for combo in itertools.combinations(range(1, v + 1), r + 1):
            boundary = (
                _tuple_id(face)
                for face in itertools.combinations(combo, r)
            )
            cells.append(cell(_tuple_id(combo), r, boundary if r else ()))
    return build_complex(cells)


def hypercube_skeleton(d: int, k: int) -> Complex:
    """The k-skeleton of the d-cube; cells are words over 0, 1, *.

    A word with r stars is an r-cell; its boundary words fix one star.
    hypercube_skeleton(3, 2) is the cube boundary surface.
    """
    if d < 1 or not 0 <= k <= d:
        raise BadParameters("hypercube_skeleton needs d >= 1, 0 <= k <= d")
    cells: list[Cell] = []
    for r in range(k + 1):
        for stars in itertools.combinations(range(d), r):
            free = [i for i in range(d) if i not in stars]
            for bits in itertools.product("01", repeat=d - r):
                word = ["*"] * d
                for pos, b in zip(free, bits):
                    word[pos] = b
                wid = "".join(word)
                boundary = []
                for pos in stars:
                    for b in "01":
                        sub = word.copy()
                        sub[pos] = b
                        boundary.append("".join(sub))
                cells.append(cell(wid, r, boundary))
    return build_complex(cells)


def crosspolytope_skeleton(d: int, k: int) -> Complex:
    """The k-skeleton of the d-dimensional cross-polytope.

    Vertices are p1..pd and n1..nd; a proper face is any antipode-free
    vertex subset, so the r-cells are the (r+1)-subsets hitting no axis
    twice. k can go up to d-1; crosspolytope_skeleton(3, 2) is the
    octahedron boundary.
    """
    if d < 1 or not 0 <= k <= d - 1:
        raise BadParameters(
            "crosspolytope_skeleton needs d >= 1, 0 <= k <= d-1"
        )
    verts = [f"p{i}" for i in range(1, d + 1)] + [
        f"n{i}" for i in range(1, d + 1)
    ]

    def axis(v: str) -> int:
        return int(v[1:])

    cells: list[Cell] = []
    for r in range(k + 1):
        for combo in itertools.combinations(sorted(verts), r + 1):
            if len({axis(v) for v in combo}) != r + 1:
                continue
            cid = "-".join(combo)
            boundary = (
                "-".join(face) for face in itertools.combinations(combo, r)
            )
            cells.append(cell(cid, r, boundary if r else ()))
    return build_complex(cells)


def finned_circlet(k: int, m: int) -> Complex:
    """The finned wheel: k*m squares around a k-spine, capped by a km-gon.

    m fins of k squares each share a central cycle of k spine edges; the
    outer rim, one cycle through all km fin tips (successive fins joined
    end to start), bounds a single km-gon. Spine edges get degree m, all
    other edges degree 2, so the complex is even, and it is minimal:
    needs k >= 3 and m >= 4 even.
    """
    if k < 3 or m < 4 or m % 2 != 0:
        raise BadParameters("finned_circlet needs k >= 3 and even m >= 4")
    cells: list[Cell] = []
    for t in range(k):
        cells.append(cell(f"c{t}", 0))
    for i in range(m):
        for t in range(k):
            cells.append(cell(f"l{i}.{t}", 0))

    def leaf(i: int, t: int) -> str:
        # the twist: walking past the last layer lands on the next fin
        if t == k:
            return f"l{(i + 1) % m}.0"
        return f"l{i}.{t}"

    for t in range(k):
        cells.append(cell(f"s{t}", 1, (f"c{t}", f"c{(t + 1) % k}")))
    for i in range(m):
        for t in range(k):
            cells.append(cell(f"r{i}.{t}", 1, (f"c{t}", f"l{i}.{t}")))
            cells.append(cell(f"o{i}.{t}", 1, (leaf(i, t), leaf(i, t + 1))))

    def rung(i: int, t: int) -> str:
        if t == k:
            return f"r{(i + 1) % m}.0"
        return f"r{i}.{t}"

    for i in range(m):
        for t in range(k):
            cells.append(
                cell(
                    f"q{i}.{t}",
                    2,
                    (f"s{t}", f"o{i}.{t}", rung(i, t), rung(i, t + 1)),
                )
            )
    rim = tuple(f"o{i}.{t}" for i in range(m) for t in range(k))
    cells.append(cell("cap", 2, rim))
    return build_complex(cells)


# ---- random families --------------------------------------------------


def _library_circlets() -> list[Complex]:
    return [
        simplex_skeleton(4, 2),
        crosspolytope_skeleton(3, 2),
        hypercube_skeleton(3, 2),
    ]


def _relabel(k: Complex, prefix: str, identify: dict[str, str]) -> list[Cell]:
    """Copy cells with a fresh prefix except for the identified ones."""

    def rename(cid: str) -> str:
        return identify.get(cid, f"{prefix}{cid}")

    return [
        Cell(rename(c.id), c.dim, frozenset(rename(b) for b in c.boundary))
        for c in k
    ]


def random_even(seed: int, size: int) -> Complex:
    """A random even strongly connected 2-complex, reproducible by seed.

    Built by gluing `size` library circlets (tetrahedron, octahedron and
    cube boundaries) one at a time along a single shared edge, chosen at
    random. Each gluing raises the shared edge degree by 2, so evenness
    is preserved, and sharing a side keeps the dual connected.
    """
    if size < 1:
        raise BadParameters("random_even needs size >= 1")
    rng = random.Random(seed)
    library = _library_circlets()
    base = rng.choice(library)
    current: dict[str, Cell] = {
        c.id: c for c in _relabel(base, "g0.", {})
    }
    complex_now = build_complex(current.values())
    for step in range(1, size):
        piece = rng.choice(library)
        host_edge = rng.choice(sorted(complex_now.sides))
        piece_edge = rng.choice(sorted(piece.sides))
        hu, hv = sorted(complex_now.boundary(host_edge))
        pu, pv = sorted(piece.boundary(piece_edge))
        identify = {piece_edge: host_edge, pu: hu, pv: hv}
        for c in _relabel(piece, f"g{step}.", identify):
            existing = current.get(c.id)
            if existing is None:
                current[c.id] = c
        complex_now = build_complex(current.values())
    return complex_now


def random_even_multigraph(seed: int, max_vertices: int = 12) -> Complex:
    """A random even connected multigraph, reproducible by seed.

    Cycles (2-cycles of parallel edges allowed) glued at shared
    vertices, staying at or under the vertex budget. Every vertex degree
    stays even, so the result always carries a closed walk through every
    edge.
    """
    if max_vertices < 2:
        raise BadParameters("random_even_multigraph needs max_vertices >= 2")
    rng = random.Random(seed)

    def raw_cycle(n: int, tag: str, shared: str | None) -> list[Cell]:
        names = [shared if i == 0 and shared else f"{tag}v{i}" for i in range(n)]
        cells = [cell(v, 0) for v in names if shared is None or v != shared]
        for i in range(n):
            u, w = names[i], names[(i + 1) % n]
            cells.append(cell(f"{tag}e{i}", 1, (u, w)))
        return cells

    first = rng.randint(2, min(5, max_vertices))
    current: dict[str, Cell] = {c.id: c for c in raw_cycle(first, "a0.", None)}
    graph = build_complex(current.values())
    tags = "abcdefghijklmnop"
    step = 0
    while True:
        step += 1
        vertices = [c for c in graph.cells_of_dim(0)]
        budget = max_vertices - len(vertices)
        if budget < 1 or step >= len(tags) or rng.random() < 0.3:
            break
        n = rng.randint(2, min(5, budget + 1))
        shared = rng.choice(sorted(vertices))
        for c in raw_cycle(n, f"{tags[step]}{step}.", shared):
            if c.id not in current:
                current[c.id] = c
        graph = build_complex(current.values())
    return graph


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus integer parameters, e.g. cycle(6)."""

    family: str
    params: tuple[int, ...]


FAMILIES = {
    "cycle": (cycle, 1),
    "triangular_grid": (triangular_grid, 1),
    "simplex_skeleton": (simplex_skeleton, 2),
    "hypercube_skeleton": (hypercube_skeleton, 2),
    "crosspolytope_skeleton": (crosspolytope_skeleton, 2),
    "finned_circlet": (finned_circlet, 2),
    "random_even": (random_even, 2),
}


def generate(spec: FamilySpec) -> Complex:
    """Dispatch a FamilySpec to its generator."""
    entry = FAMILIES.get(spec.family)
    if entry is None:
        raise BadParameters(f"unknown family {spec.family!r}")
    fn, arity = entry
    if len(spec.params) != arity:
        raise BadParameters(
            f"{spec.family} takes {arity} parameter(s), got {len(spec.params)}"
        )
    return fn(*spec.params)
