"""Generator rewriting: lambda0, lambda1 and the Petrie operation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import NotInG2, NotInvolution, SkeletalError
from .geometry import Isometry, classify, compose
from .groups import FiniteGroup, close
from .wythoff import Box, Complex, GeneratorSystem, build


def g2_closure(gs: GeneratorSystem) -> FiniteGroup:
    """Elements of <G2>: identity, then the listed generators, then the rest."""
    return close(gs.G2)


def _check_member(gs: GeneratorSystem, R: Isometry) -> None:
    if R not in g2_closure(gs):
        raise NotInG2(f"{R} is not in the edge stabilizer <G2> of {gs.name or 'the system'}")


def lambda0(gs: GeneratorSystem, R: Isometry) -> GeneratorSystem:
    """``(R0 R, R1, G2)``; requires ``R`` in <G2> and ``R0 R`` an involution."""
    _check_member(gs, R)
    new = compose(gs.R0, R)
    if not new.is_involution():
        raise NotInvolution(f"R0 R = {new} is not an involution (R = {R})")
    return gs.with_(R0=new, rank4=None, name=f"{gs.name}^lambda0" if gs.name else "")


def lambda1(gs: GeneratorSystem, R: Isometry) -> GeneratorSystem:
    """``(R0, R1 R, G2)``; requires ``R`` in <G2> and ``R1 R`` an involution."""
    _check_member(gs, R)
    new = compose(gs.R1, R)
    if not new.is_involution():
        kind = classify(new)
        raise NotInvolution(f"R1 R = {new} is a {kind.tag} of period {kind.period}, not an involution (R = {R})")
    return gs.with_(R1=new, rank4=None, name=f"{gs.name}^lambda1" if gs.name else "")


def petrie(rank4: Sequence[Isometry]) -> tuple[Isometry, Isometry, Isometry, Isometry]:
    """``(T0, T1, T2, T3) -> (T0, T1 T3, T2, T3)``."""
    if len(rank4) != 4:
        raise ValueError("petrie expects four generators")
    t0, t1, t2, t3 = rank4
    return (t0, compose(t1, t3), t2, t3)


def petrie_system(gs: GeneratorSystem) -> GeneratorSystem:
    """2-skeleton system of the Petrie dual of a rank-4 system."""
    if gs.rank4 is None:
        raise ValueError(f"{gs.name or 'system'} carries no rank-4 generators")
    t0, t1, t2, t3 = petrie(gs.rank4)
    return GeneratorSystem(t0, t1, (t2, t3), gs.base_vertex, (t0, t1, t2, t3),
                           f"{gs.name}^petrie" if gs.name else "")


def mirror_vector(gs: GeneratorSystem) -> tuple[int, int]:
    """Mirror dimensions of ``R0`` and ``R1``."""
    for label, g in (("R0", gs.R0), ("R1", gs.R1)):
        if not g.is_involution():
            raise NotInvolution(f"{label} = {g} is not an involution")
    return classify(gs.R0).mirror_dim, classify(gs.R1).mirror_dim


OPERATIONS: dict[str, Callable[[GeneratorSystem, Isometry], GeneratorSystem]] = {
    "lambda0": lambda0,
    "lambda1": lambda1,
}


@dataclass
class Candidate:
    """One element of <G2> tried as the parameter of an operation."""

    index: int
    element: Isometry
    system: GeneratorSystem | None
    error: str | None = None
    complex: Complex | None = None
    matches: bool | None = None

    @property
    def valid(self) -> bool:
        return self.system is not None


def candidates(gs: GeneratorSystem, op: str) -> list[Candidate]:
    """Apply ``op`` with every element of <G2>, recording failures."""
    fn = OPERATIONS[op]
    out = []
    for i, R in enumerate(g2_closure(gs)):
        try:
            out.append(Candidate(i, R, fn(gs, R)))
        except SkeletalError as exc:
            out.append(Candidate(i, R, None, f"{type(exc).__name__}: {exc}"))
    return out


def search(gs: GeneratorSystem, op: str, region: Box, predicate: Callable[[Complex], bool]) -> list[Candidate]:
    """Build every valid rewriting of ``gs`` and test ``predicate`` on it."""
    found = candidates(gs, op)
    for c in found:
        if not c.valid:
            continue
        try:
            c.complex = build(c.system, region)
        except SkeletalError as exc:
            c.error = f"{type(exc).__name__}: {exc}"
            continue
        c.matches = bool(predicate(c.complex))
    return found
