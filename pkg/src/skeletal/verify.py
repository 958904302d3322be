"""Mechanical checks of complex structure against stated claims."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

import networkx as nx

from . import catalog
from .errors import InvalidRadius, NotInvolution, RegionMismatch, Unrecognized
from .geometry import IntVec3, affine_rank, classify, dot, norm_inf, sub
from .groups import close, identify, rotation_period_audit, special_group
from .wythoff import Complex, Face, Multigraph, base_face, edge_valence, vertex_figure

UNRECOGNIZED = "unrecognized"


# --- lattices ---------------------------------------------------------------


def _even(n: int) -> bool:
    return n % 2 == 0


def _in_2fcc(p: IntVec3) -> bool:
    return all(_even(c) for c in p) and (p[0] + p[1] + p[2]) % 4 == 0


LATTICES: dict[str, Callable[[IntVec3], bool]] = {
    "Z3": lambda p: True,
    "FCC": lambda p: _even(p[0] + p[1] + p[2]),
    "BCC": lambda p: _even(p[0] - p[1]) and _even(p[1] - p[2]),
    # integer points minus (0,0,1) + BCC
    "Z3-minus-shifted-BCC": lambda p: not (_even(p[0] - p[1]) and not _even(p[2] - p[0])),
    # 2 FCC together with its translate by (1,-1,1)
    "diamond": lambda p: _in_2fcc(p) or _in_2fcc(sub(p, (1, -1, 1))),
}


@dataclass
class Outcome:
    passed: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.passed


def box_points(radius: int) -> Iterable[IntVec3]:
    rng = range(-radius, radius + 1)
    return ((x, y, z) for x in rng for y in rng for z in rng)


def lattice_test(points: Iterable[IntVec3], name: str, radius: int | None = None) -> Outcome:
    """Does ``points`` equal the named lattice inside the box of ``radius``?

    The box defaults to the smallest one containing the points.
    """
    pts = set(points)
    if name not in LATTICES:
        raise ValueError(f"unknown lattice {name!r}; choose from {sorted(LATTICES)}")
    if radius is None:
        radius = max((norm_inf(p) for p in pts), default=0)
    pred = LATTICES[name]
    for p in sorted(pts):
        if norm_inf(p) > radius or not pred(p):
            return Outcome(False, p, f"{p} is a vertex but not in {name}")
    for p in box_points(radius):
        if pred(p) and p not in pts:
            return Outcome(False, p, f"{p} is in {name} but not a vertex")
    return Outcome(True)


def identify_lattice(points: Iterable[IntVec3], radius: int) -> str | None:
    pts = set(points)
    for name in ("diamond", "BCC", "Z3-minus-shifted-BCC", "FCC", "Z3"):
        if lattice_test(pts, name, radius):
            return name
    return None


# --- vertex figures ---------------------------------------------------------

_SOLIDS = {
    "tetrahedron": [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)],
    "cube": [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)],
    "octahedron": [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
    "cuboctahedron": [p for p in box_points(1) if sum(c != 0 for c in p) == 2],
    "square": [(1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0)],
}


def _solid_graph(points, multiplicity: int) -> nx.Graph:
    d2 = lambda p, q: dot(sub(p, q), sub(p, q))  # noqa: E731
    shortest = min(d2(p, q) for p, q in combinations(points, 2))
    G = nx.Graph()
    G.add_nodes_from(points)
    for p, q in combinations(points, 2):
        if d2(p, q) == shortest:
            G.add_edge(p, q, m=multiplicity)
    return G


@lru_cache(maxsize=None)
def reference_vertex_figures() -> dict[str, nx.Graph]:
    refs = {}
    for solid, pts in _SOLIDS.items():
        refs[f"{solid}-simple"] = _solid_graph(pts, 1)
        refs[f"{solid}-double"] = _solid_graph(pts, 2)
    return refs


def to_networkx(G: Multigraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.nodes)
    for (u, w), m in G.edges.items():
        H.add_edge(u, w, m=m)
    return H


def identify_vertex_figure(G: Multigraph) -> str:
    """Name ``G`` by exact multigraph isomorphism against the reference solids."""
    H = to_networkx(G)
    same_m = lambda a, b: a["m"] == b["m"]  # noqa: E731
    for name, ref in reference_vertex_figures().items():
        if ref.number_of_nodes() == H.number_of_nodes() and ref.number_of_edges() == H.number_of_edges():
            if nx.is_isomorphic(H, ref, edge_match=same_m):
                return name
    return UNRECOGNIZED


# --- faces ------------------------------------------------------------------


@dataclass(frozen=True)
class FaceShape:
    kind: str  # "planar", "skew" or "planar-infinite"
    size: int | None
    edge_length_sq: int
    equilateral: bool

    def __str__(self):
        if self.kind == "planar-infinite":
            return "planar zigzag"
        return f"{self.kind} {self.size}-gon"


def classify_face_shape(F: Face) -> FaceShape:
    if F.kind == "zigzag":
        pts = [F.point(i) for i in range(4)]
        lengths = {dot(sub(pts[i + 1], pts[i]), sub(pts[i + 1], pts[i])) for i in range(3)}
        return FaceShape("planar-infinite", None, min(lengths), len(lengths) == 1)
    vs = F.vertices
    n = len(vs)
    lengths = {dot(sub(vs[(i + 1) % n], vs[i]), sub(vs[(i + 1) % n], vs[i])) for i in range(n)}
    kind = "planar" if affine_rank(vs) <= 2 else "skew"
    return FaceShape(kind, n, min(lengths), len(lengths) == 1)


# --- reports ----------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    expected: object = None
    observed: object = None
    witnesses: list = field(default_factory=list)


@dataclass
class VerificationReport:
    catalog_id: str
    checks: list[Check] = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    def add(self, name, passed, expected=None, observed=None, witnesses=()) -> Check:
        kept = [] if passed else [w for w in witnesses if w is not None]
        c = Check(name, bool(passed), expected, observed, kept)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "catalog_id": self.catalog_id,
            "passed": self.passed,
            "summary": {
                "checks": len(self.checks),
                "passed": sum(c.passed for c in self.checks),
                "failed": len(self.failures()),
                **self.counts,
            },
            "checks": [_jsonable(asdict(c)) for c in self.checks],
            "witnesses": [_jsonable({"check": c.name, "items": c.witnesses}) for c in self.failures()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"  [{mark}] {c.name}: observed {_jsonable(c.observed)}"
            if c.expected is not None:
                line += f", expected {_jsonable(c.expected)}"
            out.append(line)
            if not c.passed and c.witnesses:
                out.append(f"         witness: {_jsonable(c.witnesses[0])}")
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x, key=repr) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if isinstance(x, Face):
        return {"kind": x.kind, "vertices": _jsonable(x.vertices), "period": _jsonable(x.period)}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


# --- axioms -----------------------------------------------------------------


def _connected(nodes: set, adj: dict, allowed: set | None = None) -> tuple[bool, object]:
    """Are all ``nodes`` in one component of ``adj`` restricted to ``allowed``?"""
    if not nodes:
        return False, None
    allowed = nodes if allowed is None else allowed
    start = min(nodes)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj.get(u, ()):
            if w in allowed and w not in seen:
                seen.add(w)
                queue.append(w)
    missing = nodes - seen
    return not missing, (min(missing) if missing else None)


def check_axioms(K: Complex, report: VerificationReport | None = None) -> VerificationReport:
    """Connectivity, vertex-figure connectivity and constant edge valence on the interior."""
    report = report or VerificationReport(K.name)
    K.region.interior_radius  # raises InvalidRadius when nothing is interior
    verts = set(K.interior_vertices())
    edges = K.interior_edges()

    # paths may leave the interior: box truncation cuts corners off nets like diamond
    ok, witness = _connected(verts, K.adjacency, set(K.vertices))
    report.add("edge graph connected", ok, True, ok, [witness if verts else "no interior vertices"])

    bad = [v for v in sorted(verts) if not vertex_figure(K, v).is_connected()]
    report.add("vertex figures connected", not bad, True, not bad, bad[:1])

    valence = Counter({e: edge_valence(K, e) for e in edges})
    values = Counter(valence.values())
    if values:
        r = values.most_common(1)[0][0]
        odd = [(e, n) for e, n in sorted(valence.items()) if n != r]
        report.add("constant edge valence", not odd and r >= 2, "constant", r if not odd else dict(values), odd[:3])
    else:
        report.add("constant edge valence", False, "constant", None, ["no interior edges"])

    report.counts.update(
        vertices=len(K.vertices), edges=len(K.edges), faces=len(K.faces),
        interior_vertices=len(verts), interior_edges=len(edges),
    )
    report.add("finite within box", True, None, dict(K.summary()))
    return report


def interior_edge_valence(K: Complex) -> int | None:
    vals = {edge_valence(K, e) for e in K.interior_edges()}
    return vals.pop() if len(vals) == 1 else None


# --- comparisons ------------------------------------------------------------


def _common_interior(A: Complex, B: Complex) -> int:
    if A.region.radius != B.region.radius:
        raise RegionMismatch(f"radius {A.region.radius} vs {B.region.radius}")
    r = A.region.radius - max(A.region.margin, B.region.margin)
    if r < 0:
        raise InvalidRadius("regions have no common interior")
    return r


def _interior_items(K: Complex, r: int):
    inside = lambda p: norm_inf(p) <= r  # noqa: E731
    verts = {v for v in K.vertices if inside(v)}
    edges = {e for e in K.edges if inside(e[0]) and inside(e[1])}
    faces = set()
    for f in K.faces:
        if f.kind == "finite-cycle":
            if all(inside(v) for v in f.vertices):
                faces.add(f)
        elif any(inside(p) and inside(q) for p, q in f.edges()):
            faces.add(f)
    return verts, edges, faces


def _containment(A, B, r) -> Outcome:
    for label, a, b in zip(("vertex", "edge", "face"), _interior_items(A, r), _interior_items(B, r)):
        extra = a - b
        if extra:
            return Outcome(False, min(extra), f"{label} {min(extra)} of the first complex is missing from the second")
    return Outcome(True)


def complexes_equal(A: Complex, B: Complex) -> Outcome:
    """Equal vertex, edge and face sets over the common interior box."""
    r = _common_interior(A, B)
    out = _containment(A, B, r)
    return out if not out else _containment(B, A, r)


def is_subcomplex(A: Complex, B: Complex) -> Outcome:
    """Every interior vertex, edge and face of ``A`` belongs to ``B``."""
    return _containment(A, B, _common_interior(A, B))


# --- catalog verification ---------------------------------------------------


def vertex_figure_group(gs):
    return close(catalog.vertex_figure_generators(gs))


def mirror_dims(gs) -> tuple[int, int]:
    for g in (gs.R0, gs.R1):
        if not g.is_involution():
            raise NotInvolution(f"{g} is not an involution")
    return classify(gs.R0).mirror_dim, classify(gs.R1).mirror_dim


def verify_entry(cid: str, radius: int = 4, margin: int | None = None, K: Complex | None = None) -> VerificationReport:
    """Build a catalog entry and check it against its recorded claims."""
    cid = catalog.normalize_id(cid)
    if K is None:
        K = catalog.build_entry(cid, radius, margin)
    report = VerificationReport(cid)
    check_axioms(K, report)
    claims = catalog.CLAIMS.get(cid)
    ir = K.region.interior_radius
    verts = K.interior_vertices()
    o = (0, 0, 0)

    gs = catalog.generator_system(cid)
    if cid != "skel-434":
        face0 = base_face(gs)
    else:
        face0 = K.base_flag[2]
    shapes = {classify_face_shape(f) for f in K.faces}
    uneven = [f for f in sorted(K.faces) if not classify_face_shape(f).equilateral]
    report.add("faces equilateral", not uneven, True, sorted({s.edge_length_sq for s in shapes}), uneven[:1])

    if claims is None:
        return report

    # face size and shape
    sizes = {s.size for s in shapes}
    if claims.face_size is not None:
        wrong = [f for f in sorted(K.faces) if classify_face_shape(f).size != claims.face_size]
        report.add("face size", not wrong, claims.face_size, sorted(sizes, key=str), wrong[:1])
    else:
        wrong = [f for f in sorted(K.faces) if f.kind != "zigzag"]
        report.add("face size", not wrong, "zigzag", sorted(str(s) for s in shapes), wrong[:1])
    if cid in catalog.COMPLEX_IDS:
        flat = [f for f in sorted(K.faces) if classify_face_shape(f).kind != "skew"]
        report.add("faces skew", not flat, "skew", sorted({s.kind for s in shapes}), flat[:1])
    if claims.base_face is not None:
        same = Face.cycle(claims.base_face) == face0
        report.add("base face", same, list(claims.base_face), list(face0.vertices), [face0])

    r = interior_edge_valence(K)
    off = [(e, edge_valence(K, e)) for e in K.interior_edges() if edge_valence(K, e) != claims.r]
    report.add("edge valence r", not off, claims.r, r, off[:1])

    lat = lattice_test(verts, claims.lattice, ir)
    report.add("vertex lattice", lat.passed, claims.lattice, identify_lattice(verts, ir), [lat.witness])

    vf_name = identify_vertex_figure(vertex_figure(K, o))
    report.add("vertex figure at o", vf_name == claims.vertex_figure, claims.vertex_figure, vf_name, [o])
    mixed = []
    mults = set()
    for v in verts:
        m = frozenset(vertex_figure(K, v).multiplicities())
        mults.add(m)
        if len(m) != 1 or not m <= {1, 2}:
            mixed.append(v)
    report.add("vertex-figure edges all single or all double", not mixed, True,
               sorted(sorted(m) for m in mults), mixed[:1])

    if cid == "skel-434":
        return report
    if claims.vf_group_order is not None:
        G = vertex_figure_group(gs)
        name = _safe_identify(G)
        gens = [str(g) for g in catalog.vertex_figure_generators(gs)]
        report.add("vertex-figure group order", len(G) == claims.vf_group_order, claims.vf_group_order, len(G), [gens])
        report.add("vertex-figure group", name == claims.vf_group_name, claims.vf_group_name, name, [gens])
    if cid in catalog.COMPLEX_IDS:
        S = special_group(gs.generators)
        name = _safe_identify(S)
        report.add("special group", len(S) == 48 and name == "[3,4]", "[3,4] of order 48",
                   f"{name} of order {len(S)}", [[str(g) for g in gs.generators]])
        periods = rotation_period_audit(S)
        report.add("rotation periods", periods <= {2, 3, 4}, [2, 3, 4], sorted(periods),
                   sorted(periods - {2, 3, 4})[:1])
        try:
            mv = mirror_dims(gs)
        except NotInvolution as exc:
            mv = str(exc)
        report.add("mirror vector", mv == (1, 2), (1, 2), mv, [f"R0 = {gs.R0}, R1 = {gs.R1}"])
    return report


def _safe_identify(G) -> str:
    try:
        return identify(G)
    except Unrecognized:
        return UNRECOGNIZED


def catalog_matrix_row(cid: str, radius: int = 4, K: Complex | None = None) -> tuple:
    """(face size, r, lattice, vertex-figure name) measured from a build."""
    K = K or catalog.build_entry(cid, radius)
    ir = K.region.interior_radius
    sizes = {len(f.vertices) for f in K.faces if f.kind == "finite-cycle"}
    size = sizes.pop() if len(sizes) == 1 else None
    return (
        size,
        interior_edge_valence(K),
        identify_lattice(K.interior_vertices(), ir),
        identify_vertex_figure(vertex_figure(K, (0, 0, 0))),
    )
