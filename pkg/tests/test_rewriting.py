from fractions import Fraction

import pytest

from skeletal.catalog import (
    CATALOG_IDS,
    COMPLEX_IDS,
    apeir_generators,
    generator_system,
    margin_for,
    petrie_dual_polyhedron,
    tetrahedron_seed,
)
from skeletal.errors import NotInG2, NotInvolution
from skeletal.geometry import Isometry, classify, iso
from skeletal.rewriting import candidates, g2_closure, lambda0, lambda1, mirror_vector, petrie
from skeletal.verify import complexes_equal
from skeletal.wythoff import Box, build


def _fixes(g, p):
    # exact check on a rational point through doubled coordinates
    doubled = tuple(int(2 * c) for c in p)
    image = g.linear.apply(doubled)
    return tuple(a + 2 * t for a, t in zip(image, g.translation)) == doubled


def test_lambda0_k1_plane_reflection():
    gs = generator_system("k1")
    R2 = gs.G2[0]
    axis = [(Fraction(1, 2), Fraction(y), Fraction(1, 2)) for y in (0, 1)]
    assert all(_fixes(gs.R0, p) for p in axis)
    assert all(_fixes(R2, p) for p in axis)  # the mirror of R2 contains the axis of R0
    new = lambda0(gs, R2)
    assert classify(new.R0).mirror_dim == 2
    assert mirror_vector(new) == (2, 2)


def test_lambda0_is_involutory_on_generators():
    gs = generator_system("k1")
    R2 = gs.G2[0]
    assert lambda0(lambda0(gs, R2), R2).R0 == gs.R0


def test_lambda1_k5_half_turn():
    gs = generator_system("k5")
    new = lambda1(gs, gs.G2[1])
    k = classify(new.R1)
    assert k.tag == "half-turn"
    # axis x = y, z = 0
    assert new.R1.apply((1, 1, 0)) == (1, 1, 0) and new.R1.apply((0, 0, 1)) == (0, 0, -1)
    assert mirror_vector(new) == (1, 1)


def test_lambda1_identity_keeps_system():
    gs = generator_system("k4")
    assert lambda1(gs, Isometry.identity()).R1 == gs.R1


def test_lambda1_k1_rejects_period_four():
    gs = generator_system("k1")
    with pytest.raises(NotInvolution):
        lambda1(gs, gs.G2[1])


def test_parameter_must_lie_in_g2():
    gs = generator_system("k1")
    with pytest.raises(NotInG2):
        lambda0(gs, iso("(y,z,x)"))


def test_petrie_is_involutory():
    gens = apeir_generators(tetrahedron_seed())
    assert petrie(petrie(gens)) == tuple(gens)


def test_petrie_of_apeir_is_apeir_of_petrie_dual():
    seed = tetrahedron_seed()
    assert petrie(apeir_generators(seed)) == apeir_generators(petrie_dual_polyhedron(seed))


@pytest.mark.parametrize("cid", COMPLEX_IDS)
def test_mirror_vectors_of_catalog(cid):
    assert mirror_vector(generator_system(cid)) == (1, 2)


def test_mirror_vector_requires_involutions():
    gs = generator_system("k1").with_(R1=iso("(y,z,x)"))
    with pytest.raises(NotInvolution):
        mirror_vector(gs)


def _derived_systems():
    out = []
    for cid in CATALOG_IDS:
        gs = generator_system(cid)
        out.append(gs)
        for op in ("lambda0", "lambda1"):
            out.extend(c.system for c in candidates(gs, op) if c.valid)
    return out


DERIVED = _derived_systems()


def _rule_cases(dim0, kind):
    cases = []
    for gs in DERIVED:
        if mirror_vector(gs)[0] != dim0:
            continue
        for R in g2_closure(gs):
            if classify(R).tag == kind:
                cases.append((gs, R))
    return cases


@pytest.mark.parametrize("dim0, kind, expected", [(2, "half-turn", 0), (0, "half-turn", 2), (0, "plane-reflection", 1)])
def test_mirror_vector_rules(dim0, kind, expected):
    cases = _rule_cases(dim0, kind)
    assert cases
    for gs, R in cases:
        new = lambda0(gs, R)
        assert mirror_vector(new) == (expected, mirror_vector(gs)[1])


@pytest.mark.parametrize("cid", [c for c in CATALOG_IDS if c != "skel-434"])
@pytest.mark.parametrize("op", ["lambda0", "lambda1"])
def test_vertices_and_edges_preserved(cid, op):
    gs = generator_system(cid)
    box = Box(3, margin_for(cid))
    ref = build(gs, box, faces=False)
    for c in candidates(gs, op):
        if c.valid:
            K = build(c.system, box, faces=False)
            assert K.vertices == ref.vertices and K.edges == ref.edges, c.element


@pytest.mark.parametrize("cid", ["k1", "k3", "k4", "k6", "k8"])
def test_complex_level_involution(cid):
    gs = generator_system(cid)
    box = Box(3, margin_for(cid))
    K = build(gs, box)
    fns = {"lambda0": lambda0, "lambda1": lambda1}
    for op, fn in fns.items():
        for c in candidates(gs, op):
            if not c.valid or not c.element.is_involution():
                continue
            twice = build(fn(c.system, c.element), box)
            assert complexes_equal(twice, K)
