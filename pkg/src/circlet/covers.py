"""Pseudomanifold covers of even complexes.

The central move: around every side of an even complex, split the facets
into pairs. Replacing each side by one copy per pair, with every facet
reattached to the copy its pair owns, yields a new complex in which every
side has degree exactly 2, together with a projection back onto the
original that is the identity below the side level and a bijection on
facets. Circlets admit such covers with strongly connected total space,
and covers of facet-disjoint pieces merge across a shared side by
re-pairing one copy from each piece, so every strongly connected even
complex acquires a pseudomanifold cover.

Gluings and covers determine each other: the pair carried by each side
copy can be read back off a cover, and rebuilding from that gluing
reproduces the cover verbatim.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .complexes import (
    Cell,
    Complex,
    ValidationReport,
    Violation,
    build_complex,
    corner_link,
    degree_profile,
    induced_subcomplex,
    strong_components,
)
from .errors import (
    BadParameters,
    DualNotSimple,
    GluingMismatch,
    InvalidCover,
    NoSharedSide,
    NotEven,
    NotFacetDisjoint,
    NotPseudomanifold,
    NotPure,
    NotStronglyConnected,
    OddFacet,
    ZeroDimensional,
)
from .matroid import decompose_into_circlets, require_circlet

__all__ = [
    "Gluing",
    "GluedComplex",
    "CoverMap",
    "SideTour",
    "canonical_gluing",
    "build_glued_complex",
    "cover_circlet",
    "merge_covers",
    "euler_cover",
    "gluing_from_cover",
    "verify_cover",
    "side_tour",
]


def side_copy_id(side_id: str, index: int) -> str:
    """Id of the index-th copy of a side in a glued complex (1-based)."""
    return f"{side_id}#{index}"


def facet_lift_id(facet_id: str) -> str:
    """Id of the unique facet lift in a glued complex."""
    return f"{facet_id}^"


def _natural_key(cell_id: str) -> tuple:
    """Sort key comparing embedded digit runs numerically.

    Keeps side copies in copy order: "s#2" before "s#10". Split always
    alternates text and number runs, so keys of any two ids compare.
    """
    parts = re.split(r"(\d+)", cell_id)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts))


# ---- gluings ----------------------------------------------------------


@dataclass(frozen=True)
class Gluing:
    """Per side, an ordered partition of its facets into unordered pairs.

    ``pairs[s]`` is a tuple of 2-tuples; each inner pair is sorted, the
    outer order is meaningful (it numbers the side copies).
    """

    pairs: Mapping[str, tuple[tuple[str, str], ...]]

    def _side_pairs(self, side_id: str) -> tuple[tuple[str, str], ...]:
        try:
            return self.pairs[side_id]
        except KeyError:
            raise GluingMismatch(f"no pairs recorded for side {side_id!r}")

    def partner(self, side_id: str, facet_id: str) -> str:
        """The facet paired with facet_id around side_id."""
        for a, b in self._side_pairs(side_id):
            if facet_id == a:
                return b
            if facet_id == b:
                return a
        raise GluingMismatch(f"{facet_id!r} not paired around {side_id!r}")

    def pair_index(self, side_id: str, facet_id: str) -> int:
        """1-based position of the pair containing facet_id."""
        for j, (a, b) in enumerate(self._side_pairs(side_id), start=1):
            if facet_id in (a, b):
                return j
        raise GluingMismatch(f"{facet_id!r} not paired around {side_id!r}")

    def total_pairs(self) -> int:
        return sum(len(p) for p in self.pairs.values())


def canonical_gluing(
    k: Complex, strategy: str = "canonical", seed: int = 0
) -> Gluing:
    """Pair the facets around every side of an even complex.

    ``canonical`` pairs consecutive facets in id order; ``seeded``
    shuffles each side's facet list first with one RNG seeded once, sides
    visited in id order, so a seed fully determines the result.
    """
    if strategy not in ("canonical", "seeded"):
        raise BadParameters(f"unknown strategy {strategy!r}")
    profile = degree_profile(k)
    if not profile.is_even:
        raise NotEven("gluing needs every side degree positive and even")
    rng = random.Random(seed) if strategy == "seeded" else None
    pairs: dict[str, tuple[tuple[str, str], ...]] = {}
    for s in k.sides:
        over = list(k.facets_over(s))
        if rng is not None:
            rng.shuffle(over)
        chunk = [
            (min(over[i], over[i + 1]), max(over[i], over[i + 1]))
            for i in range(0, len(over), 2)
        ]
        pairs[s] = tuple(chunk)
    return Gluing(pairs=pairs)


# ---- glued complexes --------------------------------------------------


@dataclass(frozen=True)
class CoverMap:
    """A cellular projection from a glued complex onto its base."""

    source: Complex
    target: Complex
    cell_map: Mapping[str, str]

    def preimage(self, target_id: str) -> tuple[str, ...]:
        return tuple(
            sorted(c for c, t in self.cell_map.items() if t == target_id)
        )


@dataclass(frozen=True)
class GluedComplex:
    """The total space of a gluing plus its bookkeeping.

    ``copy_index`` sends each side copy to (base side, 1-based index);
    ``facet_base`` sends each facet lift to the facet it covers.
    """

    complex: Complex
    copy_index: Mapping[str, tuple[str, int]]
    facet_base: Mapping[str, str]


def _check_gluing(k: Complex, g: Gluing) -> None:
    if set(g.pairs) != set(k.sides):
        raise GluingMismatch("gluing sides differ from the complex's sides")
    for s in k.sides:
        flat: list[str] = []
        for a, b in g.pairs[s]:
            if a == b:
                raise GluingMismatch(f"pair at {s!r} repeats facet {a!r}")
            flat += [a, b]
        if sorted(flat) != sorted(k.facets_over(s)):
            raise GluingMismatch(
                f"pairs at {s!r} do not partition its facets"
            )


def build_glued_complex(
    k: Complex, g: Gluing
) -> tuple[GluedComplex, CoverMap]:
    """Materialize the complex a gluing describes, plus its projection.

    Cells of dimension at most n-2 are taken over verbatim. Every side s
    becomes copies s#1 .. s#r (r pairs), each attached exactly like s.
    Every facet f becomes f^, attached to the copy of each of its sides
    whose pair contains f. Side copies end up with degree exactly 2.
    """
    if k.dim == 0:
        raise ZeroDimensional("cannot glue a 0-dimensional complex")
    _check_gluing(k, g)
    n = k.dim
    cells: list[Cell] = [
        k.cell(cid) for r in range(n - 1) for cid in k.cells_of_dim(r)
    ]
    cell_map: dict[str, str] = {c.id: c.id for c in cells}
    copy_index: dict[str, tuple[str, int]] = {}
    for s in k.sides:
        base_boundary = k.boundary(s)
        for j in range(1, len(g.pairs[s]) + 1):
            cid = side_copy_id(s, j)
            cells.append(Cell(cid, n - 1, base_boundary))
            cell_map[cid] = s
            copy_index[cid] = (s, j)
    facet_base: dict[str, str] = {}
    for f in k.facets:
        fid = facet_lift_id(f)
        boundary = frozenset(
            side_copy_id(s, g.pair_index(s, f)) for s in k.boundary(f)
        )
        cells.append(Cell(fid, n, boundary))
        cell_map[fid] = f
        facet_base[fid] = f
    m = build_complex(cells)
    glued = GluedComplex(complex=m, copy_index=copy_index, facet_base=facet_base)
    return glued, CoverMap(source=m, target=k, cell_map=cell_map)


def cover_circlet(
    c: Complex, strategy: str = "canonical", seed: int = 0
) -> CoverMap:
    """A pseudomanifold cover of a single circlet."""
    require_circlet(c)
    g = canonical_gluing(c, strategy=strategy, seed=seed)
    _, cover = build_glued_complex(c, g)
    return cover


# ---- reading a gluing back off a cover -------------------------------


def gluing_from_cover(cover: CoverMap) -> Gluing:
    """Recover the gluing a cover encodes.

    Each source side lies under exactly two facets; their images form one
    pair around the image side. Pair order follows the source side ids
    with digit runs compared numerically, which matches copy order for
    covers built here. Structural violations raise InvalidCover.
    """
    m, k, phi = cover.source, cover.target, cover.cell_map
    if m.dim != k.dim or k.dim == 0:
        raise InvalidCover("source and target dimensions unusable")
    target_facets = set(k.facets)
    images: dict[str, str] = {}
    for f in m.facets:
        img = phi.get(f)
        if img not in target_facets:
            raise InvalidCover(f"facet {f!r} maps to non-facet {img!r}")
        images[f] = img
    if sorted(images.values()) != sorted(target_facets):
        raise InvalidCover("facet map is not a bijection")

    by_side: dict[str, list[str]] = {s: [] for s in k.sides}
    for s_hat in m.sides:
        img = phi.get(s_hat)
        if img not in by_side:
            raise InvalidCover(f"side {s_hat!r} maps to non-side {img!r}")
        by_side[img].append(s_hat)

    pairs: dict[str, tuple[tuple[str, str], ...]] = {}
    for s in k.sides:
        ordered = sorted(by_side[s], key=_natural_key)
        chunk: list[tuple[str, str]] = []
        for s_hat in ordered:
            over = m.facets_over(s_hat)
            if len(over) != 2:
                raise InvalidCover(
                    f"side copy {s_hat!r} lies under {len(over)} facets"
                )
            a, b = sorted(images[f] for f in over)
            if a == b:
                raise InvalidCover(
                    f"side copy {s_hat!r} pairs {a!r} with itself"
                )
            chunk.append((a, b))
        flat = [f for p in chunk for f in p]
        if sorted(flat) != sorted(k.facets_over(s)):
            raise InvalidCover(f"pairs at {s!r} do not partition its facets")
        pairs[s] = tuple(chunk)
    return Gluing(pairs=pairs)


# ---- merging covers ---------------------------------------------------


def merge_covers(
    cover_l: CoverMap, cover_c: CoverMap, side_id: str
) -> CoverMap:
    """Combine covers of facet-disjoint complexes across a shared side.

    The merged gluing concatenates both pair lists at every side; at the
    chosen shared side the first pair {sigma, tau} of the left cover and
    the first pair {mu, lambda} of the right cover (ids sorted inside
    each pair) are replaced in place by {sigma, mu} and {tau, lambda}.
    The result is the rebuilt cover of the union complex.
    """
    l_target, c_target = cover_l.target, cover_c.target
    overlap = set(l_target.facets) & set(c_target.facets)
    if overlap:
        raise NotFacetDisjoint(f"targets share facets {sorted(overlap)[:4]}")
    if side_id not in l_target.sides or side_id not in c_target.sides:
        raise NoSharedSide(f"{side_id!r} is not a side of both targets")
    merged_cells: dict[str, Cell] = {c.id: c for c in l_target}
    for c in c_target:
        mine = merged_cells.get(c.id)
        if mine is not None and mine != c:
            raise InvalidCover(f"targets disagree on cell {c.id!r}")
        merged_cells[c.id] = c
    union = build_complex(merged_cells.values())

    g_l = gluing_from_cover(cover_l)
    g_c = gluing_from_cover(cover_c)
    pairs: dict[str, tuple[tuple[str, str], ...]] = {}
    for s in union.sides:
        left = list(g_l.pairs.get(s, ()))
        right = list(g_c.pairs.get(s, ()))
        if s == side_id:
            sigma, tau = left[0]
            mu, lam = right[0]
            left[0] = (min(sigma, mu), max(sigma, mu))
            right[0] = (min(tau, lam), max(tau, lam))
        pairs[s] = tuple(left + right)
    _, cover = build_glued_complex(union, Gluing(pairs=pairs))
    return cover


# ---- the main construction -------------------------------------------


def euler_cover(
    k: Complex, strategy: str = "canonical", seed: int = 0
) -> CoverMap:
    """A pseudomanifold cover of a strongly connected even complex.

    Decomposes into circlets, covers each one, and folds the covers
    together in breadth-first order over the circlet adjacency graph
    (circlets are adjacent when they share a side), starting from the
    lexicographically smallest circlet, always merging across the
    smallest shared side. Every prefix of that order is strongly
    connected, so each merge is defined.
    """
    profile = degree_profile(k)
    if not profile.is_pure:
        raise NotPure("cover needs a pure complex")
    if not profile.is_even:
        raise NotEven("cover needs every side degree positive and even")
    if len(strong_components(k)) != 1:
        raise NotStronglyConnected("cover needs one dual component")

    parts = [tuple(p) for p in decompose_into_circlets(k).parts]
    if len(parts) == 1:
        return cover_circlet(k, strategy=strategy, seed=seed)

    subs = [induced_subcomplex(k, p) for p in parts]
    side_sets = [set(sub.sides) for sub in subs]
    order_key = sorted(range(len(parts)), key=lambda i: parts[i])
    start = order_key[0]
    visited = [False] * len(parts)
    visited[start] = True
    queue = deque([start])
    fold_order = [start]
    while queue:
        i = queue.popleft()
        for j in order_key:
            if not visited[j] and side_sets[i] & side_sets[j]:
                visited[j] = True
                queue.append(j)
                fold_order.append(j)
    if not all(visited):
        raise NotStronglyConnected("circlet adjacency graph is disconnected")

    cover = cover_circlet(subs[fold_order[0]], strategy=strategy, seed=seed)
    for i in fold_order[1:]:
        nxt = cover_circlet(subs[i], strategy=strategy, seed=seed)
        shared = sorted(set(cover.target.sides) & side_sets[i])
        cover = merge_covers(cover, nxt, shared[0])
    if set(cover.target.facets) != set(k.facets):
        raise NotStronglyConnected("fold did not reach every facet")
    # the rebuilt union is cell-identical to k; hand back k itself
    return CoverMap(source=cover.source, target=k, cell_map=cover.cell_map)


# ---- verification -----------------------------------------------------


def verify_cover(cover: CoverMap) -> ValidationReport:
    """Check the eight structural properties of a pseudomanifold cover.

    Rules, reported independently: (a) source pure, (b) every source side
    degree 2, (c) source strongly connected, (d) source and target agree
    below the side level with the map the identity there, (e) facets in
    bijection, (f) the map is cellular (dimension kept, boundary of the
    image is the image of the boundary), (g) each target side has
    degree/2 preimages, (h) the link of every source corner is 2-regular.
    """
    m, k, phi = cover.source, cover.target, cover.cell_map
    n = k.dim
    v: list[Violation] = []

    structural_ok = True
    for c in m:
        img = phi.get(c.id)
        if img is None or img not in k:
            v.append(
                Violation(
                    "f-cellular", (c.id,), f"{c.id!r} has no valid image"
                )
            )
            structural_ok = False
            continue
        target_cell = k.cell(img)
        if target_cell.dim != c.dim:
            v.append(
                Violation(
                    "f-cellular",
                    (c.id, img),
                    f"{c.id!r} (dim {c.dim}) maps to dim {target_cell.dim}",
                )
            )
            structural_ok = False
            continue
        image_boundary = {phi.get(b) for b in c.boundary}
        if image_boundary != set(target_cell.boundary):
            v.append(
                Violation(
                    "f-cellular",
                    (c.id, img),
                    f"boundary image of {c.id!r} differs from boundary of "
                    f"{img!r}",
                )
            )

    if not m.is_pure:
        v.append(Violation("a-source-pure", (), "source is not pure"))
    if m.dim >= 1:
        for s, d in m.side_degrees.items():
            if d != 2:
                v.append(
                    Violation(
                        "b-side-degree",
                        (s,),
                        f"source side {s!r} has degree {d}, expected 2",
                    )
                )
        if m.is_pure and len(strong_components(m)) != 1:
            v.append(
                Violation(
                    "c-source-connected",
                    (),
                    "source dual multigraph is disconnected",
                )
            )

    low_m = {c.id for c in m if c.dim <= n - 2}
    low_k = {c.id for c in k if c.dim <= n - 2}
    if low_m != low_k:
        diff = sorted(low_m ^ low_k)
        v.append(
            Violation(
                "d-base-skeleton",
                tuple(diff[:6]),
                "cells below the side level differ between source and "
                "target",
            )
        )
    else:
        for cid in sorted(low_m):
            if phi.get(cid) != cid or m.cell(cid) != k.cell(cid):
                v.append(
                    Violation(
                        "d-base-skeleton",
                        (cid,),
                        f"{cid!r} is not carried over identically",
                    )
                )

    if structural_ok:
        facet_images = sorted(phi[f] for f in m.facets if phi[f] in k)
        if facet_images != sorted(set(facet_images)) or set(
            facet_images
        ) != set(k.facets):
            v.append(
                Violation(
                    "e-facet-bijection",
                    (),
                    "facet map is not a bijection onto the target facets",
                )
            )

        if n >= 1:
            preimages: dict[str, int] = {s: 0 for s in k.sides}
            for s_hat in m.sides:
                img = phi[s_hat]
                if img in preimages:
                    preimages[img] += 1
            for s in k.sides:
                deg = k.side_degrees[s]
                if deg % 2 != 0 or preimages[s] != deg // 2:
                    v.append(
                        Violation(
                            "g-preimage-count",
                            (s,),
                            f"side {s!r} of degree {deg} has "
                            f"{preimages[s]} preimages",
                        )
                    )

    if m.dim >= 2:
        for corner in m.corners:
            link = corner_link(m, corner)
            bad = {}
            for e in link.edges:
                bad[e.left] = bad.get(e.left, 0) + 1
                bad[e.right] = bad.get(e.right, 0) + 1
            for f in link.vertices:
                if bad.get(f, 0) != 2:
                    v.append(
                        Violation(
                            "h-corner-link",
                            (corner, f),
                            f"corner {corner!r} has degree {bad.get(f, 0)} "
                            f"at facet {f!r}, expected 2",
                        )
                    )
    return ValidationReport.from_violations(v)


# ---- side tours -------------------------------------------------------


@dataclass(frozen=True)
class SideTour:
    """A cyclic order on all sides; consecutive ones share a facet."""

    sides: tuple[str, ...]


def side_tour(m: Complex) -> SideTour:
    """Visit every side of a pseudomanifold once, facet by facet.

    Needs three things: the complex is a pseudomanifold, no two facets
    share more than one side, and every facet has an even number of
    sides. Then the dual multigraph (facets as vertices, one edge per
    side) is connected with even degrees, so it carries a closed walk
    using every edge once; that walk read off by edge labels is the tour.
    The returned rotation and direction are canonical, so the tour is
    deterministic.
    """
    profile = degree_profile(m)
    if not profile.is_pure:
        raise NotPseudomanifold("not pure")
    bad = sorted(s for s, d in profile.degrees.items() if d != 2)
    if bad:
        raise NotPseudomanifold(f"side degrees not all 2, e.g. {bad[0]!r}")
    if len(strong_components(m)) != 1:
        raise NotPseudomanifold("dual multigraph is disconnected")

    ends: dict[str, tuple[str, str]] = {}
    pair_count: dict[tuple[str, str], int] = {}
    for s in m.sides:
        a, b = m.facets_over(s)
        ends[s] = (a, b)
        pair_count[(a, b)] = pair_count.get((a, b), 0) + 1
        if pair_count[(a, b)] > 1:
            raise DualNotSimple(f"facets {a!r}, {b!r} share several sides")
    for f in m.facets:
        if len(m.boundary(f)) % 2 != 0:
            raise OddFacet(f"facet {f!r} has {len(m.boundary(f))} sides")

    sides = m.sides
    adj: dict[str, deque[tuple[int, str]]] = {f: deque() for f in m.facets}
    for i, s in enumerate(sides):
        a, b = ends[s]
        adj[a].append((i, b))
        adj[b].append((i, a))
    used = [False] * len(sides)
    stack: list[tuple[str, int]] = [(m.facets[0], -1)]
    out: list[int] = []
    while stack:
        vertex, via = stack[-1]
        nxt = None
        q = adj[vertex]
        while q:
            ei, w = q[0]
            if used[ei]:
                q.popleft()
                continue
            used[ei] = True
            q.popleft()
            nxt = (w, ei)
            break
        if nxt is None:
            stack.pop()
            if via >= 0:
                out.append(via)
        else:
            stack.append(nxt)
    if len(out) != len(sides):
        raise NotPseudomanifold("no closed walk through every side exists")
    seq = [sides[i] for i in reversed(out)]

    # canonical form: rotate the smallest side to the front, then pick
    # the smaller of the two directions
    pivot = seq.index(min(seq))
    forward = seq[pivot:] + seq[:pivot]
    backward = [forward[0]] + forward[1:][::-1]
    return SideTour(sides=tuple(min(forward, backward)))
