"""Exact isometries of E^3 with signed-permutation linear parts.

Points are plain integer 3-tuples in units of the scale ``a`` (fixed to 1).
Isometries act on the right, ``x -> x M + t``, so ``compose(A, B)`` means
"apply A, then B", matching the word notation ``F0 R0 R1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import NamedTuple, Sequence

IntVec3 = tuple[int, int, int]

ORIGIN: IntVec3 = (0, 0, 0)


def add(p: IntVec3, q: IntVec3) -> IntVec3:
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2])


def sub(p: IntVec3, q: IntVec3) -> IntVec3:
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def scale(p: IntVec3, k: int) -> IntVec3:
    return (p[0] * k, p[1] * k, p[2] * k)


def dot(p: IntVec3, q: IntVec3) -> int:
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def cross(p: IntVec3, q: IntVec3) -> IntVec3:
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def norm_inf(p: IntVec3) -> int:
    return max(abs(p[0]), abs(p[1]), abs(p[2]))


class OrthoMatrix:
    """A 3x3 signed permutation matrix acting on row vectors.

    Stored as ``perm`` and ``signs``: coordinate ``j`` of ``x M`` is
    ``signs[j] * x[perm[j]]``. Equivalently ``M[perm[j]][j] = signs[j]``.
    """

    __slots__ = ("perm", "signs", "_hash")

    def __init__(self, perm: Sequence[int], signs: Sequence[int]):
        perm = tuple(perm)
        signs = tuple(signs)
        if sorted(perm) != [0, 1, 2] or any(s not in (1, -1) for s in signs) or len(signs) != 3:
            raise ValueError(f"not a signed permutation: perm={perm} signs={signs}")
        self.perm = perm
        self.signs = signs
        self._hash = hash((perm, signs))

    @classmethod
    def identity(cls) -> OrthoMatrix:
        return cls((0, 1, 2), (1, 1, 1))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> OrthoMatrix:
        perm = [None, None, None]
        signs = [0, 0, 0]
        for i, row in enumerate(rows):
            if len(row) != 3:
                raise ValueError("rows must have length 3")
            for j, v in enumerate(row):
                if v == 0:
                    continue
                if v not in (1, -1) or perm[j] is not None:
                    raise ValueError(f"not a signed permutation matrix: {rows}")
                perm[j] = i
                signs[j] = v
        if None in perm:
            raise ValueError(f"not a signed permutation matrix: {rows}")
        return cls(perm, signs)

    @property
    def rows(self) -> tuple[IntVec3, IntVec3, IntVec3]:
        m = [[0, 0, 0] for _ in range(3)]
        for j in range(3):
            m[self.perm[j]][j] = self.signs[j]
        return tuple(tuple(r) for r in m)

    def det(self) -> int:
        # sign of the permutation times product of signs
        p = self.perm
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        s = self.signs[0] * self.signs[1] * self.signs[2]
        return s if inversions % 2 == 0 else -s

    def trace(self) -> int:
        return sum(self.signs[j] for j in range(3) if self.perm[j] == j)

    def apply(self, p: IntVec3) -> IntVec3:
        pm, s = self.perm, self.signs
        return (s[0] * p[pm[0]], s[1] * p[pm[1]], s[2] * p[pm[2]])

    def __matmul__(self, other: OrthoMatrix) -> OrthoMatrix:
        # (x A) B: coordinate k is sB[k] * sA[pB[k]] * x[pA[pB[k]]]
        pa, sa, pb, sb = self.perm, self.signs, other.perm, other.signs
        return OrthoMatrix(
            (pa[pb[0]], pa[pb[1]], pa[pb[2]]),
            (sb[0] * sa[pb[0]], sb[1] * sa[pb[1]], sb[2] * sa[pb[2]]),
        )

    def transpose(self) -> OrthoMatrix:
        perm = [0, 0, 0]
        signs = [0, 0, 0]
        for j in range(3):
            perm[self.perm[j]] = j
            signs[self.perm[j]] = self.signs[j]
        return OrthoMatrix(perm, signs)

    inverse = transpose

    def order(self) -> int:
        m, k = self, 1
        ident = OrthoMatrix.identity()
        while m != ident:
            m = m @ self
            k += 1
        return k

    def is_identity(self) -> bool:
        return self.perm == (0, 1, 2) and self.signs == (1, 1, 1)

    def index(self) -> int:
        """Dense index in 0..47, used for packed keys."""
        return _PERM_INDEX[self.perm] * 8 + ((self.signs[0] < 0) << 2 | (self.signs[1] < 0) << 1 | (self.signs[2] < 0))

    def __eq__(self, other):
        return isinstance(other, OrthoMatrix) and self.perm == other.perm and self.signs == other.signs

    def __hash__(self):
        return self._hash

    def __lt__(self, other: OrthoMatrix):
        return (self.perm, self.signs) < (other.perm, other.signs)

    def __repr__(self):
        return f"OrthoMatrix({format_linear(self)})"


_PERM_INDEX = {p: i for i, p in enumerate(permutations(range(3)))}

ALL_SIGNED_PERMUTATIONS: tuple[OrthoMatrix, ...] = tuple(
    OrthoMatrix(p, s) for p in permutations(range(3)) for s in product((1, -1), repeat=3)
)


def format_linear(m: OrthoMatrix) -> str:
    names = "xyz"
    return "(" + ",".join(("-" if s < 0 else "") + names[p] for p, s in zip(m.perm, m.signs)) + ")"


_TERM = re.compile(r"^\s*([+-]?)\s*([xyz])\s*$")


def parse_linear(expr: str) -> OrthoMatrix:
    """Parse an image expression such as ``"(-z,-y,-x)"`` or ``"y,x,z"``."""
    body = expr.strip().strip("()")
    parts = body.replace("−", "-").split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three coordinates in {expr!r}")
    perm, signs = [], []
    for part in parts:
        m = _TERM.match(part)
        if not m:
            raise ValueError(f"cannot parse coordinate {part!r} in {expr!r}")
        signs.append(-1 if m.group(1) == "-" else 1)
        perm.append("xyz".index(m.group(2)))
    return OrthoMatrix(perm, signs)


@dataclass(frozen=True, slots=True)
class Isometry:
    """The map ``x -> x linear + translation``."""

    linear: OrthoMatrix
    translation: IntVec3 = ORIGIN

    def __post_init__(self):
        t = self.translation
        if len(t) != 3 or not all(isinstance(c, int) for c in t):
            raise TypeError(f"translation must be an integer 3-vector, got {t!r}")
        object.__setattr__(self, "translation", tuple(t))

    @classmethod
    def identity(cls) -> Isometry:
        return cls(OrthoMatrix.identity(), ORIGIN)

    @classmethod
    def translation_by(cls, t: IntVec3) -> Isometry:
        return cls(OrthoMatrix.identity(), tuple(t))

    def apply(self, p: IntVec3) -> IntVec3:
        pm, s = self.linear.perm, self.linear.signs
        t = self.translation
        return (s[0] * p[pm[0]] + t[0], s[1] * p[pm[1]] + t[1], s[2] * p[pm[2]] + t[2])

    def then(self, other: Isometry) -> Isometry:
        return compose(self, other)

    def inverse(self) -> Isometry:
        inv = self.linear.transpose()
        t = inv.apply(self.translation)
        return Isometry(inv, (-t[0], -t[1], -t[2]))

    def power(self, k: int) -> Isometry:
        base = self if k >= 0 else self.inverse()
        out = Isometry.identity()
        for _ in range(abs(k)):
            out = compose(out, base)
        return out

    def is_identity(self) -> bool:
        return self.linear.is_identity() and self.translation == ORIGIN

    def is_involution(self) -> bool:
        return not self.is_identity() and compose(self, self).is_identity()

    def as_row(self) -> tuple[int, ...]:
        """Flat ``perm + signs + translation`` row used by the orbit kernels."""
        return self.linear.perm + self.linear.signs + self.translation

    def __str__(self):
        t = self.translation
        if t == ORIGIN:
            return format_linear(self.linear)
        return f"{format_linear(self.linear)} + {t}"


def iso(linear: str, translation: IntVec3 = ORIGIN) -> Isometry:
    """Shorthand: ``iso("(-z,-y,-x)", (0, 1, 0))``."""
    return Isometry(parse_linear(linear), tuple(translation))


def compose(a: Isometry, b: Isometry) -> Isometry:
    """Apply ``a`` first, then ``b``."""
    lin = a.linear @ b.linear
    return Isometry(lin, b.apply(a.translation))


def compose_all(*isos: Isometry) -> Isometry:
    out = Isometry.identity()
    for g in isos:
        out = compose(out, g)
    return out


def apply(a: Isometry, p: IntVec3) -> IntVec3:
    return a.apply(p)


def conjugate(a: Isometry, by: Isometry) -> Isometry:
    """``by^-1 a by``: the map ``a`` transported along ``by``."""
    return compose_all(by.inverse(), a, by)


# --- classification -------------------------------------------------------


class IsometryKind(NamedTuple):
    tag: str
    mirror_dim: int
    period: int | None = None
    fixed_point: tuple[Fraction, Fraction, Fraction] | None = None


def _solve_affine(m: OrthoMatrix, t: IntVec3) -> tuple[int, tuple[Fraction, ...] | None]:
    """Rank of (M - I) and one solution of x (M - I) = -t, or None.

    The system is solved over doubled coordinates y = 2x so that half-integral
    fixed points stay integral; the returned point is divided back by 2.
    """
    rows = m.rows
    # x (M - I) = -t  <=>  (M - I)^T x^T = -t^T
    a = [[Fraction(rows[i][j] - (1 if i == j else 0)) for i in range(3)] for j in range(3)]
    b = [Fraction(-2 * t[j]) for j in range(3)]
    rank = 0
    pivots = []
    for col in range(3):
        piv = next((r for r in range(rank, 3) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        b[rank], b[piv] = b[piv], b[rank]
        for r in range(3):
            if r != rank and a[r][col] != 0:
                f = a[r][col] / a[rank][col]
                a[r] = [a[r][c] - f * a[rank][c] for c in range(3)]
                b[r] -= f * b[rank]
        pivots.append(col)
        rank += 1
    if any(b[r] != 0 for r in range(rank, 3)):
        return rank, None
    y = [Fraction(0)] * 3
    for r, col in enumerate(pivots):
        y[col] = b[r] / a[r][col]
    return rank, tuple(v / 2 for v in y)


def mirror_dim(a: Isometry) -> int:
    """Affine dimension of the fixed-point set, -1 when empty."""
    rank, sol = _solve_affine(a.linear, a.translation)
    return -1 if sol is None else 3 - rank


def classify(a: Isometry) -> IsometryKind:
    m, t = a.linear, a.translation
    rank, sol = _solve_affine(m, t)
    dim = -1 if sol is None else 3 - rank
    det = m.det()
    order = m.order()
    if m.is_identity():
        return IsometryKind("identity", 3, 1, sol) if t == ORIGIN else IsometryKind("translation", -1)
    if sol is None:
        return IsometryKind("screw" if det == 1 else "glide", -1, order)
    if det == 1:
        if order == 2:
            return IsometryKind("half-turn", 1, 2, sol)
        return IsometryKind("rotation", 1, order, sol)
    if m.trace() == -3:
        return IsometryKind("point-reflection", 0, 2, sol)
    if order == 2:
        return IsometryKind("plane-reflection", 2, 2, sol)
    return IsometryKind("rotatory-reflection", 0, order, sol)


def fixed_points_on_grid(a: Isometry, half_range: int = 4) -> list[tuple[int, int, int]]:
    """Brute force: doubled coordinates y in [-h, h]^3 with y M + 2t = y."""
    out = []
    t2 = scale(a.translation, 2)
    r = range(-half_range, half_range + 1)
    for y in product(r, r, r):
        if add(a.linear.apply(y), t2) == y:
            out.append(y)
    return out


def affine_rank(points: Sequence[IntVec3]) -> int:
    """Affine dimension of a finite point set (-1 when empty)."""
    if not points:
        return -1
    p0 = points[0]
    vecs = [sub(p, p0) for p in points[1:]]
    return _rank([list(v) for v in vecs])


def _rank(rows: list[list[int]]) -> int:
    rows = [[Fraction(v) for v in r] for r in rows if any(r)]
    rank = 0
    ncols = 3
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [rows[i][c] - f * rows[rank][c] for c in range(ncols)]
        rank += 1
    return rank
