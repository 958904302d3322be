"""Wythoff's construction of polygonal complexes inside a bounded box."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernel
from .errors import (
    BoundaryEdge,
    BoundaryVertex,
    InvalidGeneratorSystem,
    InvalidRadius,
    NonPlanarInfiniteFace,
)
from .geometry import ORIGIN, IntVec3, Isometry, add, compose, dot, norm_inf, scale, sub

Edge = tuple[IntVec3, IntVec3]

# BFS runs over flags whose vertex is within radius + ORBIT_SLACK, so that
# every in-box vertex is reached by a path that may step just outside the box.
ORBIT_SLACK = 2
ORBIT_CAP = 5_000_000


def edge_key(p: IntVec3, q: IntVec3) -> Edge:
    return (p, q) if p <= q else (q, p)


@dataclass(frozen=True)
class GeneratorSystem:
    """Distinguished generators ``R0``, ``R1`` and generators of ``G2``."""

    R0: Isometry
    R1: Isometry
    G2: tuple[Isometry, ...]
    base_vertex: IntVec3 = ORIGIN
    rank4: tuple[Isometry, ...] | None = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "G2", tuple(self.G2))
        if self.rank4 is not None:
            object.__setattr__(self, "rank4", tuple(self.rank4))

    @property
    def twin(self) -> IntVec3:
        return self.R0.apply(self.base_vertex)

    @property
    def generators(self) -> tuple[Isometry, ...]:
        return (self.R0, self.R1, *self.G2)

    @property
    def base_edge(self) -> Edge:
        return (self.base_vertex, self.twin)

    def with_(self, **changes) -> GeneratorSystem:
        return replace(self, **changes)

    def validate(self) -> None:
        o, v = self.base_vertex, self.twin
        problems = []
        if not self.R0.is_involution():
            problems.append(f"R0 = {self.R0} is not an involution")
        if not self.R1.is_involution():
            problems.append(f"R1 = {self.R1} is not an involution")
        if v == o:
            problems.append("R0 fixes the base vertex")
        if self.R1.apply(o) != o:
            problems.append(f"R1 = {self.R1} moves the base vertex")
        for g in self.G2:
            if g.apply(o) != o or g.apply(v) != v:
                problems.append(f"G2 generator {g} does not fix the base edge")
        if problems:
            raise InvalidGeneratorSystem("; ".join(problems))


@dataclass(frozen=True)
class Box:
    """The closed box ``|x|_inf <= radius``; ``margin`` shrinks it to the interior."""

    radius: int
    margin: int = 0

    def __post_init__(self):
        if self.radius < 0 or self.margin < 0:
            raise InvalidRadius(f"radius and margin must be non-negative, got {self.radius}, {self.margin}")

    def contains(self, p: IntVec3) -> bool:
        return norm_inf(p) <= self.radius

    @property
    def interior_radius(self) -> int:
        if self.radius <= self.margin:
            raise InvalidRadius(f"radius {self.radius} must exceed margin {self.margin}")
        return self.radius - self.margin

    def is_interior(self, p: IntVec3) -> bool:
        return norm_inf(p) <= self.radius - self.margin


class Face:
    """A finite cycle in canonical form, or a zigzag truncated to a box.

    Zigzags are the infinite sequence ``..., s, n, s + t, n + t, ...``; the
    pair ``(s, n)`` and period ``t`` are canonical, so two truncations of the
    same zigzag compare equal.
    """

    __slots__ = ("kind", "vertices", "period", "anchor", "indices", "_key")

    def __init__(self, kind, vertices, period=None, anchor=None, indices=None):
        self.kind = kind
        self.vertices = tuple(vertices)
        self.period = period
        self.anchor = anchor
        self.indices = tuple(indices) if indices is not None else None
        if kind == "finite-cycle":
            self._key = (kind, self.vertices)
        elif kind == "zigzag":
            self._key = (kind, period, anchor)
        else:
            raise ValueError(f"unknown face kind {kind!r}")

    @classmethod
    def cycle(cls, vertices: Sequence[IntVec3]) -> Face:
        from ._pykernel import canonical_cycle

        return cls("finite-cycle", canonical_cycle(tuple(tuple(v) for v in vertices)))

    @classmethod
    def zigzag(cls, period: IntVec3, start: IntVec3, nxt: IntVec3, radius: int | None = None, window: int = 8) -> Face:
        from ._pykernel import canonical_zigzag

        t, s, n = canonical_zigzag(start, nxt, add(start, period))
        face = cls("zigzag", (), t, (s, n), ())
        return face.truncated(radius, window)

    def truncated(self, radius: int | None, window: int = 8) -> Face:
        """Zigzag restricted to the box of ``radius`` (``window`` periods when unbounded)."""
        t = self.period
        s = self.anchor[0]
        if radius is None:
            lo, hi = -window, window
        else:
            # every in-box point has |k| small enough: bound k by the box extent along t
            tt = dot(t, t)
            reach = (abs(t[0]) + abs(t[1]) + abs(t[2])) * (radius + norm_inf(s) + 2)
            lo, hi = -(reach // tt) - 2, reach // tt + 2
        verts, idx = [], []
        for i in range(2 * lo, 2 * hi + 2):
            p = self.point(i)
            if radius is None or norm_inf(p) <= radius:
                verts.append(p)
                idx.append(i)
        return Face("zigzag", verts, t, self.anchor, idx)

    def point(self, i: int) -> IntVec3:
        s, n = self.anchor
        base = s if i % 2 == 0 else n
        return add(base, scale(self.period, i // 2))

    def index_of(self, v: IntVec3) -> int | None:
        t = self.period
        tt = dot(t, t)
        for parity, base in enumerate(self.anchor):
            d = sub(v, base)
            k = dot(d, t) // tt
            if add(base, scale(t, k)) == v:
                return 2 * k + parity
        return None

    @property
    def size(self) -> int | None:
        return len(self.vertices) if self.kind == "finite-cycle" else None

    def edges(self) -> list[Edge]:
        v = self.vertices
        if self.kind == "finite-cycle":
            return [edge_key(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]
        out = []
        for j in range(len(v) - 1):
            if self.indices[j + 1] == self.indices[j] + 1:
                out.append(edge_key(v[j], v[j + 1]))
        return out

    def neighbors(self, v: IntVec3) -> tuple[IntVec3, IntVec3]:
        """The two vertices adjacent to ``v`` along the face."""
        if self.kind == "finite-cycle":
            i = self.vertices.index(v)
            n = len(self.vertices)
            return self.vertices[i - 1], self.vertices[(i + 1) % n]
        i = self.index_of(v)
        if i is None:
            raise ValueError(f"{v} is not on this zigzag")
        return self.point(i - 1), self.point(i + 1)

    def __contains__(self, v):
        if self.kind == "finite-cycle":
            return v in self.vertices
        return self.index_of(v) is not None

    def __eq__(self, other):
        return isinstance(other, Face) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        if self.kind == "finite-cycle":
            return f"Face(cycle {list(self.vertices)})"
        return f"Face(zigzag period={self.period} anchor={self.anchor})"


@dataclass
class Multigraph:
    """Nodes plus a multiset of unordered node pairs."""

    nodes: frozenset
    edges: Counter = field(default_factory=Counter)

    def multiplicities(self) -> set[int]:
        return set(self.edges.values())

    def edge_count(self) -> int:
        return sum(self.edges.values())

    def is_connected(self) -> bool:
        if not self.nodes:
            return False
        adj = defaultdict(set)
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        start = next(iter(self.nodes))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == set(self.nodes)


@dataclass(frozen=True, eq=False)
class Complex:
    """Finite snapshot of a complex: the items lying in ``region``."""

    vertices: frozenset
    edges: frozenset
    faces: frozenset
    base_flag: tuple
    region: Box
    name: str = ""

    @cached_property
    def faces_at_vertex(self) -> dict[IntVec3, list[Face]]:
        out = defaultdict(list)
        for f in self.faces:
            for v in f.vertices:
                out[v].append(f)
        return out

    @cached_property
    def face_count_at_edge(self) -> Counter:
        c = Counter()
        for f in self.faces:
            c.update(f.edges())
        return c

    @cached_property
    def adjacency(self) -> dict[IntVec3, set[IntVec3]]:
        adj = defaultdict(set)
        for p, q in self.edges:
            adj[p].add(q)
            adj[q].add(p)
        return adj

    def interior_vertices(self) -> list[IntVec3]:
        r = self.region.interior_radius
        return sorted(v for v in self.vertices if norm_inf(v) <= r)

    def interior_edges(self) -> list[Edge]:
        r = self.region.interior_radius
        return sorted(e for e in self.edges if norm_inf(e[0]) <= r and norm_inf(e[1]) <= r)

    def with_margin(self, margin: int) -> Complex:
        return replace(self, region=Box(self.region.radius, margin))

    def without_face(self, face: Face) -> Complex:
        return replace(self, faces=self.faces - {face})

    def restrict(self, radius: int) -> Complex:
        """Discard every item with a vertex outside the smaller box."""
        if radius > self.region.radius:
            raise InvalidRadius("restriction radius exceeds the build radius")
        inside = lambda p: norm_inf(p) <= radius  # noqa: E731
        faces = set()
        for f in self.faces:
            if f.kind == "finite-cycle":
                if all(inside(v) for v in f.vertices):
                    faces.add(f)
            else:
                g = f.truncated(radius)
                if g.edges():
                    faces.add(g)
        vo, eo, fo = self.base_flag
        flag = (
            vo,
            eo if eo is not None and inside(eo[0]) and inside(eo[1]) else None,
            fo if fo is not None and fo in faces else None,
        )
        return Complex(
            frozenset(v for v in self.vertices if inside(v)),
            frozenset(e for e in self.edges if inside(e[0]) and inside(e[1])),
            frozenset(faces),
            flag,
            Box(radius, min(self.region.margin, radius)),
            self.name,
        )

    def summary(self) -> dict:
        return {"vertices": len(self.vertices), "edges": len(self.edges), "faces": len(self.faces)}


# --- operations -----------------------------------------------------------


def base_face(gs: GeneratorSystem, max_steps: int = 12) -> Face:
    """Orbit of the base vertex under the dihedral group <R0, R1>.

    Consecutive vertices are ``o (R1 R0)^k``. A closed orbit gives a finite
    cycle; otherwise the face must be a planar zigzag, i.e. ``(R1 R0)^2`` is
    a translation.
    """
    o = gs.base_vertex
    step = compose(gs.R1, gs.R0)
    path = [o]
    p = o
    for _ in range(max_steps):
        p = step.apply(p)
        if p == o:
            return Face.cycle(path)
        if p in path:
            raise NonPlanarInfiniteFace(f"orbit of the base vertex revisits {p} without closing")
        path.append(p)
    double = compose(step, step)
    if not double.linear.is_identity():
        raise NonPlanarInfiniteFace(
            f"face does not close in {max_steps} steps and (R1 R0)^2 = {double} is not a translation (helical face)"
        )
    v0, v1, v2 = path[0], path[1], path[2]
    if step.linear.is_identity():
        raise NonPlanarInfiniteFace("base face is a linear apeirogon")
    return Face.zigzag(sub(v2, v0), v0, v1)


def face_spread(face: Face) -> int:
    """Largest inf-norm distance between two vertices of a finite face, or
    between adjacent vertices of a zigzag."""
    if face.kind == "finite-cycle":
        vs = face.vertices
        return max(norm_inf(sub(p, q)) for p in vs for q in vs)
    return max(norm_inf(sub(face.point(0), face.point(1))), norm_inf(sub(face.point(1), face.point(2))))


def default_margin(gs: GeneratorSystem) -> int:
    return face_spread(base_face(gs))


def _seed(face: Face) -> tuple[list[IntVec3], bool]:
    if face.kind == "finite-cycle":
        return list(face.vertices), False
    return [face.point(0), face.point(1), face.point(2)], True


def build(gs: GeneratorSystem, region: Box | int, *, faces: bool = True, slack: int = ORBIT_SLACK,
          cap: int = ORBIT_CAP, backend: str | None = None) -> Complex:
    """Materialize the complex generated by ``gs`` inside ``region``.

    Items are images of the base vertex, base edge and base face under the
    group; one is kept iff all its vertices lie in the closed box (zigzags
    keep their in-box path when it contains an edge). With ``faces=False``
    only vertices and edges are produced, so helical faces are no obstacle.
    """
    if isinstance(region, int):
        region = Box(region, 0)
    gs.validate()
    if faces:
        face0 = base_face(gs)
        seed, zigzag = _seed(face0)
    else:
        face0 = None
        seed, zigzag = [gs.base_vertex], False
    orbit = kernel.get_flag_orbit(backend)
    rows = [g.as_row() for g in gs.generators]
    verts, twins, faces = orbit(rows, gs.base_vertex, gs.twin, seed, zigzag, region.radius + slack, cap)
    return _assemble(gs, region, face0, verts, twins, faces, zigzag)


def _assemble(gs, region, face0, verts, twins, faces, zigzag) -> Complex:
    R = region.radius
    inbox = lambda a: np.abs(a).max(axis=-1) <= R  # noqa: E731

    vk = np.unique(verts[inbox(verts)], axis=0)
    vertices = frozenset(tuple(int(c) for c in row) for row in vk)

    pairs = np.concatenate([verts, twins], axis=1)
    keep = inbox(verts) & inbox(twins)
    pairs = np.unique(pairs[keep], axis=0)
    edges = frozenset(edge_key(tuple(int(c) for c in r[:3]), tuple(int(c) for c in r[3:])) for r in pairs)

    flat = np.unique(faces.reshape(len(faces), -1), axis=0)
    face_set = set()
    if face0 is None:
        pass
    elif not zigzag:
        flat = flat[np.abs(flat).max(axis=1) <= R]
        for row in flat:
            pts = tuple(tuple(int(c) for c in row[i:i + 3]) for i in range(0, len(row), 3))
            face_set.add(Face("finite-cycle", pts))
    else:
        for row in flat:
            t, s, n = (tuple(int(c) for c in row[i:i + 3]) for i in (0, 3, 6))
            f = Face("zigzag", (), t, (s, n), ()).truncated(R)
            if f.edges():
                face_set.add(f)

    o, v = gs.base_vertex, gs.twin
    e0 = edge_key(o, v) if region.contains(o) and region.contains(v) else None
    f0 = None
    if face0 is None:
        pass
    elif face0.kind == "finite-cycle":
        f0 = face0 if all(region.contains(p) for p in face0.vertices) else None
    else:
        f0 = face0.truncated(R)
        f0 = f0 if f0.edges() else None
    flag = (o if region.contains(o) else None, e0, f0)
    return Complex(frozenset(vertices), edges, frozenset(face_set), flag, region, gs.name)


def vertex_figure(K: Complex, v: IntVec3) -> Multigraph:
    """Neighbours of ``v`` joined once per face in which they flank ``v``."""
    if not K.region.is_interior(v) or K.region.radius <= K.region.margin:
        raise BoundaryVertex(f"{v} is within the margin of the region boundary")
    nodes = frozenset(K.adjacency.get(v, ()))
    edges = Counter()
    for f in K.faces_at_vertex.get(v, ()):
        u, w = f.neighbors(v)
        edges[edge_key(u, w)] += 1
    return Multigraph(nodes, edges)


def edge_valence(K: Complex, e: Edge) -> int:
    """Number of faces containing the edge ``e``."""
    p, q = e
    if not (K.region.is_interior(p) and K.region.is_interior(q)) or K.region.radius <= K.region.margin:
        raise BoundaryEdge(f"edge {p}--{q} is within the margin of the region boundary")
    return K.face_count_at_edge.get(edge_key(p, q), 0)


def complex_from_faces(faces: Iterable[Face], region: Box, name: str = "") -> Complex:
    """Assemble a complex from an explicit face list (vertices and edges implied)."""
    faces = frozenset(faces)
    edges = set()
    verts = set()
    for f in faces:
        verts.update(f.vertices)
        edges.update(f.edges())
    return Complex(frozenset(verts), frozenset(edges), faces, (None, None, None), region, name)
