"""Generator systems for the named complexes, polyhedra and apeirotope skeletons.

All coordinates use edge parameter a = 1. Each entry records the structural
claims that the verifier checks it against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownId
from .geometry import ORIGIN, IntVec3, Isometry, compose, iso
from .wythoff import Box, Complex, Face, GeneratorSystem, build, default_margin, edge_key

# --- the eight complexes with mirror vector (1,2) -------------------------

_R0_A = iso("(-x,y,-z)", (1, 0, 1))
_R0_B = iso("(y,x,-z)", (1, -1, 1))
_R0_C = iso("(-z,-y,-x)", (0, 1, 0))
_R0_D = iso("(-z,-y,-x)", (1, -1, 1))
_R0_E = iso("(-z,-y,-x)", (1, 0, 1))
_R1_SWAP = iso("(y,x,z)")
_R1_FLIP = iso("(x,-y,z)")

_SYSTEMS: dict[str, GeneratorSystem] = {
    "k1": GeneratorSystem(_R0_A, _R1_SWAP, (iso("(z,y,x)"), iso("(x,-y,z)")), name="k1"),
    "k2": GeneratorSystem(_R0_B, _R1_FLIP, (iso("(-y,-z,x)"),), name="k2"),
    "k3": GeneratorSystem(_R0_B, _R1_FLIP, (iso("(-y,-x,z)"), iso("(x,-z,-y)")), name="k3"),
    "k4": GeneratorSystem(_R0_C, _R1_SWAP, (iso("(-z,y,-x)"), iso("(z,y,x)")), name="k4"),
    "k5": GeneratorSystem(_R0_C, _R1_SWAP, (iso("(-x,y,z)"), iso("(x,y,-z)")), name="k5"),
    "k6": GeneratorSystem(_R0_C, _R1_SWAP, (iso("(-z,y,-x)"), iso("(-x,y,z)")), name="k6"),
    "k7": GeneratorSystem(_R0_D, _R1_SWAP, (iso("(-y,-x,z)"), iso("(x,-z,-y)")), name="k7"),
    "k8": GeneratorSystem(_R0_E, _R1_SWAP, (iso("(x,-y,z)"), iso("(z,y,x)")), name="k8"),
    # polyhedra: G2 is generated by a single half-turn about the base edge
    "p-664": GeneratorSystem(_R0_E, _R1_SWAP, (iso("(z,-y,x)"),), name="p-664"),
    "p-466": GeneratorSystem(_R0_A, _R1_SWAP, (iso("(z,-y,x)"),), name="p-466"),
    "p-646": GeneratorSystem(_R0_C, _R1_SWAP, (iso("(-x,y,-z)"),), name="p-646"),
}


# --- finite regular polyhedra and the apeir construction ------------------


@dataclass(frozen=True)
class RegularPolyhedronSeed:
    """Finite regular polyhedron centred at o: generators and initial vertex ``w``."""

    name: str
    generators: tuple[Isometry, Isometry, Isometry]
    w: IntVec3

    def validate(self) -> None:
        for g in self.generators:
            if g.apply(ORIGIN) != ORIGIN:
                raise ValueError(f"{self.name}: generator {g} moves the centroid")
        for g in self.generators[1:]:
            if g.apply(self.w) != self.w:
                raise ValueError(f"{self.name}: generator {g} moves the initial vertex")


_PETRIE_NAMES = {"{3,3}": "{4,3}_3", "{3,4}": "{6,4}_3", "{4,3}": "{6,3}_4"}
_PETRIE_NAMES.update({v: k for k, v in _PETRIE_NAMES.items()})


def octahedron_seed(a: int = 1) -> RegularPolyhedronSeed:
    """{3,4} with vertices (+-a,0,0), ... (``a=2`` gives the even-coordinate frame)."""
    return RegularPolyhedronSeed("{3,4}", (iso("(z,y,x)"), iso("(y,x,z)"), iso("(x,-y,z)")), (0, 0, a))


def cube_seed(a: int = 1) -> RegularPolyhedronSeed:
    """{4,3} with vertices (+-a,+-a,+-a)."""
    return RegularPolyhedronSeed("{4,3}", (iso("(x,-y,z)"), iso("(-y,-x,z)"), iso("(z,y,x)")), (a, -a, a))


def tetrahedron_seed(a: int = 1) -> RegularPolyhedronSeed:
    """{3,3} on alternate cube vertices (a,-a,a), (-a,a,a), (a,a,-a), (-a,-a,-a)."""
    return RegularPolyhedronSeed("{3,3}", (iso("(y,x,z)"), iso("(z,y,x)"), iso("(-y,-x,z)")), (a, -a, a))


SEEDS = {"{3,3}": tetrahedron_seed, "{3,4}": octahedron_seed, "{4,3}": cube_seed}


def petrie_dual_polyhedron(seed: RegularPolyhedronSeed) -> RegularPolyhedronSeed:
    r1, r2, r3 = seed.generators
    return RegularPolyhedronSeed(_PETRIE_NAMES.get(seed.name, seed.name + "^pi"), (compose(r1, r3), r2, r3), seed.w)


def apeir_generators(seed: RegularPolyhedronSeed) -> tuple[Isometry, Isometry, Isometry, Isometry]:
    """Rank-4 generators: the point reflection in w/2, then the seed's generators."""
    seed.validate()
    r0 = Isometry(iso("(-x,-y,-z)").linear, seed.w)
    return (r0, *seed.generators)


def skeleton_system(rank4, name: str = "") -> GeneratorSystem:
    """2-skeleton of a rank-4 system: edge, face and edge-stabilizer generators."""
    t0, t1, t2, t3 = rank4
    return GeneratorSystem(t0, t1, (t2, t3), rank4=tuple(rank4), name=name)


def apeir(seed: RegularPolyhedronSeed) -> GeneratorSystem:
    return skeleton_system(apeir_generators(seed), name=f"apeir{seed.name}")


# --- the cubical tessellation and its subgroup H --------------------------

T0 = iso("(-x,y,z)", (1, 0, 0))
T1 = iso("(y,x,z)")
T2 = iso("(x,z,y)")
T3 = iso("(x,y,-z)")
CUBIC_TESSELLATION = (T0, T1, T2, T3)


def subgroup_h() -> GeneratorSystem:
    """Index-2 subgroup <T0T3, T1, T2, T3T2T3> acting simply flag-transitively."""
    return GeneratorSystem(
        compose(T0, T3), T1, (T2, compose(compose(T3, T2), T3)),
        rank4=CUBIC_TESSELLATION, name="subgroup-h",
    )


def cubical_skeleton(region: Box | int) -> Complex:
    """Unit squares of the integer lattice in the box, constructed directly."""
    if isinstance(region, int):
        region = Box(region, 0)
    R = region.radius
    rng = range(-R, R + 1)
    verts = frozenset((x, y, z) for x in rng for y in rng for z in rng)
    axes = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    edges, faces = set(), set()
    for p in verts:
        for i, d in enumerate(axes):
            q = (p[0] + d[0], p[1] + d[1], p[2] + d[2])
            if q in verts:
                edges.add(edge_key(p, q))
            for e in axes[i + 1:]:
                c = [p, q, (q[0] + e[0], q[1] + e[1], q[2] + e[2]), (p[0] + e[0], p[1] + e[1], p[2] + e[2])]
                if all(v in verts for v in c):
                    faces.add(Face.cycle(c))
    o = ORIGIN
    twin = (1, 0, 0)
    e0 = edge_key(o, twin) if twin in verts else None
    f0 = Face.cycle([o, (1, 0, 0), (1, 1, 0), (0, 1, 0)])
    return Complex(verts, frozenset(edges), frozenset(faces), (o, e0, f0 if f0 in faces else None), region, "skel-434")


# --- registry --------------------------------------------------------------


@dataclass(frozen=True)
class Claims:
    """Structure the literature states for a catalog entry (None: not stated)."""

    face_size: int | None
    r: int
    lattice: str
    vertex_figure: str
    vf_group_order: int | None = None
    vf_group_name: str | None = None
    base_face: tuple[IntVec3, ...] | None = None
    notes: dict = field(default_factory=dict)


_FACE_FCC4 = ((0, 0, 0), (1, 0, 1), (1, 1, 0), (0, 1, 1))
_FACE_BCC4 = ((0, 0, 0), (1, -1, 1), (2, 0, 0), (1, 1, 1))
_FACE_Z6 = ((0, 0, 0), (0, 1, 0), (0, 1, -1), (1, 1, -1), (1, 0, -1), (1, 0, 0))
_FACE_D6 = ((0, 0, 0), (1, -1, 1), (0, -2, 2), (-1, -1, 3), (-2, 0, 2), (-1, 1, 1))
_FACE_F6 = ((0, 0, 0), (1, 0, 1), (0, -1, 1), (0, 0, 2), (-1, 0, 1), (0, 1, 1))

CLAIMS: dict[str, Claims] = {
    "k1": Claims(4, 4, "FCC", "cuboctahedron-simple", 48, "[3,4]", _FACE_FCC4),
    "k2": Claims(4, 3, "BCC", "cube-simple", 24, "[3,3]*", _FACE_BCC4),
    "k3": Claims(4, 6, "BCC", "cube-double", 48, "[3,4]", _FACE_BCC4),
    "k4": Claims(6, 4, "Z3", "octahedron-simple", 24, "[3,3]", _FACE_Z6),
    "k5": Claims(6, 4, "Z3-minus-shifted-BCC", "square-double", 16, "[4,2]", _FACE_Z6),
    "k6": Claims(6, 8, "Z3", "octahedron-double", 48, "[3,4]", _FACE_Z6),
    "k7": Claims(6, 6, "diamond", "tetrahedron-double", 24, "[3,3]", _FACE_D6),
    "k8": Claims(6, 4, "FCC", "cuboctahedron-simple", 48, "[3,4]", _FACE_F6),
    "skel-434": Claims(4, 4, "Z3", "octahedron-simple"),
    "subgroup-h": Claims(4, 4, "Z3", "octahedron-simple"),
    "skel-apeir-333": Claims(None, 3, "diamond", "tetrahedron-simple"),
    "skel-apeir-334": Claims(None, 4, "Z3", "octahedron-simple"),
    "skel-apeir-433": Claims(None, 3, "BCC", "cube-simple"),
}

COMPLEX_IDS = tuple(f"k{i}" for i in range(1, 9))
POLYHEDRON_IDS = ("p-664", "p-466", "p-646")
SKELETON_IDS = ("skel-434", "skel-apeir-333", "skel-apeir-334", "skel-apeir-433", "subgroup-h")
CATALOG_IDS = COMPLEX_IDS + POLYHEDRON_IDS + SKELETON_IDS

DESCRIPTIONS = {
    "k1": "skew squares, FCC vertices, 4 faces per edge",
    "k2": "skew squares, BCC vertices, 3 faces per edge",
    "k3": "skew squares, BCC vertices, 6 faces per edge",
    "k4": "skew hexagons, integer lattice, 4 faces per edge",
    "k5": "skew hexagons, integer lattice minus shifted BCC, 4 faces per edge",
    "k6": "skew hexagons, integer lattice, 8 faces per edge",
    "k7": "skew hexagons on the diamond net, 6 faces per edge",
    "k8": "skew hexagons, FCC vertices, 4 faces per edge",
    "p-664": "regular polyhedron {6,6}_4",
    "p-466": "regular polyhedron {4,6}_6",
    "p-646": "regular polyhedron {6,4}_6",
    "skel-434": "2-skeleton of the cubical tessellation (direct construction)",
    "skel-apeir-333": "2-skeleton of apeir{3,3}",
    "skel-apeir-334": "2-skeleton of apeir{3,4}",
    "skel-apeir-433": "2-skeleton of apeir{4,3}",
    "subgroup-h": "cubical 2-skeleton rebuilt from the index-2 subgroup H",
}


APEIR_SEEDS = {"skel-apeir-333": "{3,3}", "skel-apeir-334": "{3,4}", "skel-apeir-433": "{4,3}"}


def normalize_id(cid: str) -> str:
    key = cid.strip().lower()
    aliases = {"subgrouph": "subgroup-h", "h": "subgroup-h"}
    key = aliases.get(key, key)
    if key not in CATALOG_IDS:
        raise UnknownId(f"unknown catalog id {cid!r}; choose from {', '.join(CATALOG_IDS)}")
    return key


def generator_system(cid: str) -> GeneratorSystem:
    """Exact generators of a catalog entry (skel-434 uses the subgroup H system)."""
    key = normalize_id(cid)
    if key in _SYSTEMS:
        return _SYSTEMS[key]
    if key in ("skel-434", "subgroup-h"):
        return subgroup_h().with_(name=key)
    seed = SEEDS[APEIR_SEEDS[key]]()
    return apeir(seed).with_(name=key)


def margin_for(cid: str) -> int:
    key = normalize_id(cid)
    if key == "skel-434":
        return 1
    return default_margin(generator_system(key))


def build_entry(cid: str, radius: int, margin: int | None = None, **kw) -> Complex:
    """Build a catalog entry in the box of ``radius``; margin defaults to the face spread."""
    key = normalize_id(cid)
    box = Box(radius, margin_for(key) if margin is None else margin)
    if key == "skel-434":
        return cubical_skeleton(box)
    return build(generator_system(key), box, **kw)


def vertex_figure_generators(gs: GeneratorSystem) -> tuple[Isometry, ...]:
    """Generators of the stabilizer of the base vertex: R1 and G2."""
    return (gs.R1, *gs.G2)

