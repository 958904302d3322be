"""Finite groups of isometries: closure, census-based naming, stabilizer audits."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceeded, NotEdgeStabilizer, Unrecognized
from .geometry import (
    ALL_SIGNED_PERMUTATIONS,
    IntVec3,
    Isometry,
    OrthoMatrix,
    classify,
    compose,
    sub,
)

SPECIAL_CAP = 48
STABILIZER_CAP = 96

# Lines that can be invariant under a subgroup of the cubic frame group:
# coordinate axes, face diagonals and body diagonals.
FRAME_DIRECTIONS: tuple[IntVec3, ...] = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1),
    (1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, 1),
)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group of isometries, elements listed in discovery order.

    ``elements[0]`` is the identity, followed by the distinct non-identity
    generators in the order given, then everything else in BFS order.
    """

    elements: tuple[Isometry, ...]
    generators: tuple[Isometry, ...] = field(default=())

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._members

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def _members(self) -> frozenset:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_member_set", cached)
        return cached

    def linear_parts(self) -> frozenset[OrthoMatrix]:
        return frozenset(g.linear for g in self.elements)


def close(generators: Iterable[Isometry], cap: int = STABILIZER_CAP) -> FiniteGroup:
    """Closure of ``generators`` under composition.

    Raises ``CapExceeded`` once more than ``cap`` elements are found, which is
    how an unexpected translation in a point stabilizer shows up.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    gens = tuple(generators)
    ident = Isometry.identity()
    elements = [ident]
    seen = {ident}
    for g in gens:
        if g not in seen:
            seen.add(g)
            elements.append(g)
    if len(elements) > cap:
        raise CapExceeded(f"group exceeds {cap} elements")
    frontier = list(elements)
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                c = compose(a, s)
                if c not in seen:
                    seen.add(c)
                    elements.append(c)
                    nxt.append(c)
                    if len(elements) > cap:
                        raise CapExceeded(f"group exceeds {cap} elements")
        frontier = nxt
    return FiniteGroup(tuple(elements), gens)


def special_group(gens: Iterable[Isometry], cap: int = SPECIAL_CAP) -> FiniteGroup:
    """Closure of the linear parts (translations killed)."""
    return close([Isometry(g.linear) for g in gens], cap)


# --- naming ---------------------------------------------------------------


@dataclass(frozen=True)
class Census:
    order: int
    plane_reflections: int
    central_inversion: bool
    rotation_periods: frozenset[int]
    rotations_only: bool
    irreducible: bool


def _is_linear(G: FiniteGroup) -> bool:
    return all(g.translation == (0, 0, 0) for g in G)


def invariant_lines(G: FiniteGroup) -> list[IntVec3]:
    """Frame directions mapped to +-themselves by every element."""
    out = []
    for d in FRAME_DIRECTIONS:
        neg = (-d[0], -d[1], -d[2])
        if all(g.linear.apply(d) in (d, neg) for g in G):
            out.append(d)
    return out


def census(G: FiniteGroup) -> Census:
    kinds = [classify(Isometry(g.linear)) for g in G]
    periods = frozenset(k.period for k in kinds if k.tag in ("rotation", "half-turn"))
    return Census(
        order=len(G),
        plane_reflections=sum(k.tag == "plane-reflection" for k in kinds),
        central_inversion=any(k.tag == "point-reflection" for k in kinds),
        rotation_periods=periods,
        rotations_only=all(g.linear.det() == 1 for g in G),
        irreducible=not invariant_lines(G),
    )


def _cyclic_or_dihedral(G: FiniteGroup) -> str | None:
    n = len(G)
    orders = [g.linear.order() for g in G]
    if n in orders:
        return f"C_{n}"
    if n % 2 == 0:
        half = n // 2
        for g, o in zip(G, orders):
            if o == half:
                rot = set(close([Isometry(g.linear)], cap=n).elements)
                if all(o2 == 2 for h, o2 in zip(G, orders) if Isometry(h.linear) not in rot):
                    return f"D_{half}"
    return None


def identify(G: FiniteGroup) -> str:
    """Name a point group among the cubic-frame subgroups by its element census."""
    if not _is_linear(G):
        raise ValueError("identify expects a group of linear maps (no translations)")
    c = census(G)
    if c.irreducible:
        if c.order == 48:
            return "[3,4]"
        if c.order == 24:
            if c.rotations_only:
                return "[3,4]+"
            if c.central_inversion and c.plane_reflections == 3:
                return "[3,3]*"
            if not c.central_inversion and c.plane_reflections == 6:
                return "[3,3]"
        if c.order == 12 and c.rotations_only:
            return "[3,3]+"
        raise Unrecognized(f"irreducible group of order {c.order} outside the taxonomy: {c}")
    if c.order == 16:
        return "[4,2]"
    name = _cyclic_or_dihedral(G)
    return name if name is not None else "reducible-other"


def rotation_period_audit(G: FiniteGroup) -> set[int]:
    """Periods of the proper rotations (identity excluded) in ``G``."""
    return set(census(G).rotation_periods)


def edge_stabilizer_type(g2_gens: Sequence[Isometry], edge: tuple[IntVec3, IntVec3]) -> tuple[str, int]:
    """``("cyclic", r)`` or ``("dihedral", r)`` for the pointwise stabilizer of ``edge``."""
    p, q = edge
    for g in g2_gens:
        if g.apply(p) != p or g.apply(q) != q:
            raise NotEdgeStabilizer(f"{g} moves the edge {p}--{q}")
    G = close(g2_gens, cap=STABILIZER_CAP)
    # fixing two distinct points fixes their line pointwise; the check is exact
    d = sub(q, p)
    assert all(g.linear.apply(d) == d for g in G)
    has_reflection = any(classify(g).tag == "plane-reflection" for g in G)
    return ("dihedral" if has_reflection else "cyclic", len(G))


def cubic_frame_group() -> FiniteGroup:
    """All 48 signed permutation matrices, identity first."""
    ident = Isometry.identity()
    rest = [Isometry(m) for m in ALL_SIGNED_PERMUTATIONS if not m.is_identity()]
    return FiniteGroup((ident, *rest), tuple(rest))


def element_census(G: FiniteGroup) -> Counter:
    return Counter(classify(g).tag for g in G)


def conjugate_group(G: FiniteGroup, by: Isometry) -> FiniteGroup:
    """The group ``by^-1 G by``, elements in corresponding order."""
    inv = by.inverse()
    conj = lambda g: compose(compose(inv, g), by)  # noqa: E731
    return FiniteGroup(tuple(conj(g) for g in G.elements), tuple(conj(g) for g in G.generators))
