"""Even facet subsets as GF(2) column dependencies.

The side/facet incidence matrix of a pure complex turns evenness into
linear algebra: a nonempty facet set induces an even subcomplex exactly
when its incidence columns XOR to zero, because a side missing from the
induced subcomplex contributes degree zero and every present side must
be covered an even number of times. Minimal nonempty such sets are the
circlets; they are the circuits of a binary matroid on the facets, and
every even complex splits into facet-disjoint circlets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import gf2
from .complexes import Complex, ValidationReport, Violation, degree_profile
from .errors import NotCirclet, NotEven, NotPure, UnknownFacet, ZeroDimensional

__all__ = [
    "IncidenceMatrixGF2",
    "incidence_matrix",
    "is_even_subset",
    "find_even_subset",
    "extract_circlet",
    "CircletDecomposition",
    "decompose_into_circlets",
    "validate_decomposition",
    "require_circlet",
]


@dataclass(frozen=True)
class IncidenceMatrixGF2:
    """Side rows by facet columns over GF(2), bit-packed per column.

    Rows and columns are sorted by id; ``packed[j]`` holds column j as a
    bitset over row indices (64 rows per uint64 word).
    """

    side_ids: tuple[str, ...]
    facet_ids: tuple[str, ...]
    packed: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.side_ids), len(self.facet_ids)

    def column_index(self, facet_ids: Iterable[str]) -> list[int]:
        lookup = {f: j for j, f in enumerate(self.facet_ids)}
        out = []
        for f in facet_ids:
            j = lookup.get(f)
            if j is None:
                raise UnknownFacet(f"{f!r} is not a facet column")
            out.append(j)
        return out

    def dense(self) -> np.ndarray:
        """Unpacked uint8 matrix, rows by columns. For tests and display."""
        n_rows, n_cols = self.shape
        out = np.zeros((n_rows, n_cols), dtype=np.uint8)
        for j in range(n_cols):
            for r in gf2.bit_indices(self.packed[j]):
                out[r, j] = 1
        return out


def incidence_matrix(k: Complex) -> IncidenceMatrixGF2:
    """Build the side/facet incidence matrix of a complex of dim >= 1."""
    if k.dim == 0:
        raise ZeroDimensional("0-dimensional complexes have no sides")
    sides = k.sides
    facets = k.facets
    row = {s: i for i, s in enumerate(sides)}
    packed = gf2.pack_from_indices(
        [[row[s] for s in k.boundary(f)] for f in facets], len(sides)
    )
    return IncidenceMatrixGF2(side_ids=sides, facet_ids=facets, packed=packed)


def is_even_subset(m: IncidenceMatrixGF2, facet_ids: Iterable[str]) -> bool:
    """True iff the set is nonempty and its columns XOR to zero."""
    idx = m.column_index(facet_ids)
    if not idx:
        return False
    return not gf2.xor_select(m.packed, idx).any()


def find_even_subset(
    m: IncidenceMatrixGF2, facet_ids: Iterable[str]
) -> frozenset[str] | None:
    """Some nonempty even subset of the given facets, or None.

    Deterministic: columns are scanned in id order and the answer is the
    support of the dependency on the first column that is not independent
    of the earlier ones.
    """
    chosen = sorted(set(facet_ids))
    idx = m.column_index(chosen)
    if not idx:
        return None
    j, combo = gf2.first_dependency(m.packed[idx])
    if j < 0:
        return None
    return frozenset(chosen[b] for b in gf2.bit_indices(combo))


def extract_circlet(
    m: IncidenceMatrixGF2, facet_ids: Iterable[str]
) -> frozenset[str]:
    """Shrink an even facet set to a minimal even subset (a circlet).

    Scans facets in id order; whenever dropping one still leaves an even
    subset, replaces the working set by that subset and restarts the scan
    from the smallest id. Stops when no single facet can be spared.
    """
    current = frozenset(facet_ids)
    if not is_even_subset(m, current):
        raise NotEven("starting facet set is not even")
    while True:
        for f in sorted(current):
            found = find_even_subset(m, current - {f})
            if found is not None:
                current = found
                break
        else:
            return current


@dataclass(frozen=True)
class CircletDecomposition:
    """Ordered partition of the facets into circlets, in peel order."""

    parts: tuple[tuple[str, ...], ...]

    def all_facets(self) -> frozenset[str]:
        return frozenset(f for part in self.parts for f in part)


def decompose_into_circlets(k: Complex) -> CircletDecomposition:
    """Peel circlets off an even complex until no facet remains.

    Each peel extracts a circlet from the remaining facets; the remainder
    of an even set minus a circlet is even again (or empty), so the loop
    always terminates in a partition. Re-running gives the identical
    decomposition.
    """
    profile = degree_profile(k)
    if not profile.is_pure:
        raise NotPure("decomposition needs a pure complex")
    if not profile.is_even:
        raise NotEven("decomposition needs every side degree positive even")
    m = incidence_matrix(k)
    remaining = set(k.facets)
    parts: list[tuple[str, ...]] = []
    while remaining:
        circlet = extract_circlet(m, remaining)
        parts.append(tuple(sorted(circlet)))
        remaining -= circlet
    return CircletDecomposition(parts=tuple(parts))


def validate_decomposition(
    k: Complex, parts: Iterable[Iterable[str]]
) -> ValidationReport:
    """Check a proposed partition against the circlet-decomposition rules.

    Rules reported: ``partition`` (parts disjoint and covering the facets
    exactly), ``even`` (every part an even subset), ``minimal`` (no part
    has a proper nonempty even subset).
    """
    listed = [tuple(sorted(set(p))) for p in parts]
    violations: list[Violation] = []
    seen: set[str] = set()
    top = set(k.facets)
    for i, part in enumerate(listed):
        overlap = seen & set(part)
        if overlap:
            violations.append(
                Violation(
                    "partition",
                    tuple(sorted(overlap)),
                    f"part {i} reuses facets {sorted(overlap)}",
                )
            )
        stray = set(part) - top
        if stray:
            violations.append(
                Violation(
                    "partition",
                    tuple(sorted(stray)),
                    f"part {i} lists non-facets {sorted(stray)}",
                )
            )
        seen |= set(part)
    missing = top - seen
    if missing:
        violations.append(
            Violation(
                "partition",
                tuple(sorted(missing)),
                f"facets not covered: {sorted(missing)}",
            )
        )
    if violations:
        return ValidationReport.from_violations(violations)

    m = incidence_matrix(k)
    for i, part in enumerate(listed):
        if not is_even_subset(m, part):
            violations.append(
                Violation("even", part, f"part {i} is not an even subset")
            )
            continue
        shrunk = extract_circlet(m, part)
        if shrunk != frozenset(part):
            violations.append(
                Violation(
                    "minimal",
                    part,
                    f"part {i} properly contains the even subset "
                    f"{sorted(shrunk)}",
                )
            )
    return ValidationReport.from_violations(violations)


def require_circlet(k: Complex) -> IncidenceMatrixGF2:
    """Assert a complex is a circlet; returns its incidence matrix.

    A circlet is pure, even, and minimal: extracting from the full facet
    set returns the full facet set. Raises NotCirclet otherwise.
    """
    try:
        profile = degree_profile(k)
    except ZeroDimensional as exc:
        raise NotCirclet(str(exc)) from exc
    if not profile.is_pure:
        raise NotCirclet("not pure, so not a circlet")
    if not profile.is_even:
        raise NotCirclet("not even, so not a circlet")
    m = incidence_matrix(k)
    full = frozenset(k.facets)
    if extract_circlet(m, full) != full:
        raise NotCirclet("a proper even facet subset exists")
    return m
