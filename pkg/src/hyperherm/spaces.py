"""The linear model on R^{4n}: standard hypercomplex structure, the neutral
metric with its associated forms, the Hermitian/skew-Hermitian taxonomy of
bilinear forms with its four projectors, and the structural-group test.

Basis ordering in this module: x-block, y-block, u-block, v-block (n entries
each), with the negative-definite x,y directions first.  The Lie-group layer
uses the opposite sign layout; the two conventions are kept module-local.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix

CYCLIC = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


@dataclass(frozen=True)
class HypercomplexStructure:
    """An anticommuting triple (J1, J2, J3) with J3 = J1 J2 on R^{4n}."""

    n: int
    J: tuple[Matrix, Matrix, Matrix]

    @property
    def dim(self) -> int:
        return 4 * self.n

    def j(self, alpha: int) -> Matrix:
        if alpha not in (1, 2, 3):
            raise ValueError(f"alpha must be 1, 2 or 3, got {alpha}")
        return self.J[alpha - 1]


@dataclass(frozen=True)
class PseudoHermitianMetricPack:
    """The neutral metric g with its three associated forms.

    Phi = g(J1 ., .) is the Kaehler 2-form (skew), g2 = g(J2 ., .) and
    g3 = g(J3 ., .) are symmetric.  Memberships: Phi in B0, g in B1,
    g2 in B3, g3 in B2.
    """

    n: int
    g: Matrix
    phi: Matrix
    g2: Matrix
    g3: Matrix


def _block_index(slot: int, i: int, n: int) -> int:
    # slot: 0=x, 1=y, 2=u, 3=v
    return slot * n + i


def standard_structure(n: int) -> HypercomplexStructure:
    """The standard J1, J2, J3 on R^{4n}.

    Actions per block (x_i, y_i, u_i, v_i):
      J1: x->y, y->-x, u->-v, v->u
      J2: x->u, y->v, u->-x, v->-y
      J3 = J1 J2: x->-v, y->u, u->-y, v->x
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    dim = 4 * n

    def build(action):
        rows = [[0] * dim for _ in range(dim)]
        for src_slot, (dst_slot, sign) in enumerate(action):
            for i in range(n):
                rows[_block_index(dst_slot, i, n)][_block_index(src_slot, i, n)] = sign
        return Matrix(rows)

    j1 = build(((1, 1), (0, -1), (3, -1), (2, 1)))
    j2 = build(((2, 1), (3, 1), (0, -1), (1, -1)))
    j3 = build(((3, -1), (2, 1), (1, -1), (0, 1)))
    return HypercomplexStructure(n=n, J=(j1, j2, j3))


def metric_matrix(n: int) -> Matrix:
    """diag(-1 on the x,y blocks, +1 on the u,v blocks)."""
    return Matrix.diagonal([-1] * (2 * n) + [1] * (2 * n))


def standard_metric(n: int) -> PseudoHermitianMetricPack:
    h = standard_structure(n)
    g = metric_matrix(n)
    # f(J., .) has matrix J^T g in the column convention
    phi = h.j(1).transpose() @ g
    g2 = h.j(2).transpose() @ g
    g3 = h.j(3).transpose() @ g
    return PseudoHermitianMetricPack(n=n, g=g, phi=phi, g2=g2, g3=g3)


def pullback(f: Matrix, j: Matrix) -> Matrix:
    """The form f(J., J.), with matrix J^T f J."""
    return j.transpose() @ f @ j


@dataclass(frozen=True)
class HermitianTypeVerdict:
    """Per-structure behaviour of a bilinear form and its B-class memberships.

    ``per_alpha[a]`` says whether f(J_a ., J_a .) equals f ('hermitian'),
    -f ('skew'), or neither.  ``memberships`` collects every class whose
    defining sign pattern holds; the zero form belongs to all four.
    """

    per_alpha: tuple[str, str, str]
    memberships: frozenset[int]

    @property
    def label(self) -> str:
        if self.memberships == frozenset({0, 1, 2, 3}):
            return "zero-type (all classes)"
        if self.memberships == frozenset({0}):
            return "hermitian (B0)"
        for alpha in (1, 2, 3):
            if self.memberships == frozenset({alpha}):
                return f"pseudo-hermitian of type {alpha} (B{alpha})"
        return "unclassified"


def hermitian_type(f: Matrix, h: HypercomplexStructure) -> HermitianTypeVerdict:
    if f.nrows != h.dim or f.ncols != h.dim:
        raise ValueError(f"form is {f.nrows}x{f.ncols}, structure needs {h.dim}x{h.dim}")
    pulled = [pullback(f, h.j(a)) for a in (1, 2, 3)]
    labels = []
    for p in pulled:
        if p == f:
            labels.append("hermitian")
        elif p == -f:
            labels.append("skew")
        else:
            labels.append("neither")
    member = set()
    if all(p == f for p in pulled):
        member.add(0)
    for alpha in (1, 2, 3):
        beta, gamma = CYCLIC[alpha]
        if pulled[alpha - 1] == f and pulled[beta - 1] == -f and pulled[gamma - 1] == -f:
            member.add(alpha)
    return HermitianTypeVerdict(per_alpha=tuple(labels), memberships=frozenset(member))


def project(f: Matrix, h: HypercomplexStructure, alpha: int) -> Matrix:
    """Projector onto B_alpha: 1/4 (f + sum of signed pullbacks).

    alpha = 0 uses signs (+,+,+); alpha in {1,2,3} uses + for J_alpha and
    - for the other two.
    """
    if alpha not in (0, 1, 2, 3):
        raise ValueError(f"alpha must be in 0..3, got {alpha}")
    if alpha == 0:
        signs = (1, 1, 1)
    else:
        signs = tuple(1 if a == alpha else -1 for a in (1, 2, 3))
    acc = f
    for a, s in zip((1, 2, 3), signs):
        p = pullback(f, h.j(a))
        acc = acc + p if s == 1 else acc - p
    return acc.scale(Fraction(1, 4))


# -- structural group -------------------------------------------------

_BLOCK_PATTERN = (
    # rows of [[P, Q], [-Q, P]] with P = [[a, b], [-b, a]], Q = [[c, d], [d, -c]]
    (("a", 1), ("b", 1), ("c", 1), ("d", 1)),
    (("b", -1), ("a", 1), ("d", 1), ("c", -1)),
    (("c", -1), ("d", -1), ("a", 1), ("b", 1)),
    (("d", -1), ("c", 1), ("b", -1), ("a", 1)),
)


def quaternionic_block(a, b, c, d) -> Matrix:
    """The 4x4 block [[P,Q],[-Q,P]] commuting with every J_alpha."""
    vals = {"a": a, "b": b, "c": c, "d": d}
    return Matrix(tuple(tuple(sign * vals[name] for name, sign in row) for row in _BLOCK_PATTERN))


def block_matrix(n: int, params) -> Matrix:
    """Assemble a 4n x 4n matrix from n x n quaternionic (a,b,c,d) blocks."""
    dim = 4 * n
    rows = [[0] * dim for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            blk = quaternionic_block(*params[i][j])
            for s in range(4):
                for t in range(4):
                    rows[_block_index(s, i, n)][_block_index(t, j, n)] = blk[s, t]
    return Matrix(rows)


def _extract_blocks(a: Matrix, n: int):
    blocks = []
    for i in range(n):
        row = []
        for j in range(n):
            sub = [[a[_block_index(s, i, n), _block_index(t, j, n)] for t in range(4)] for s in range(4)]
            params = (sub[0][0], sub[0][1], sub[0][2], sub[0][3])
            if Matrix(sub) != quaternionic_block(*params):
                return None
            row.append(params)
        blocks.append(tuple(row))
    return tuple(blocks)


@dataclass(frozen=True)
class StructuralGroupVerdict:
    commutes: bool           # commutes with all J_alpha (quaternionic-linear)
    preserves_metric: bool   # A^T g A = g
    member: bool
    blocks: tuple | None     # per-block (a,b,c,d) when A has the quaternionic block form


def structural_group_member(a: Matrix, h: HypercomplexStructure | None = None) -> StructuralGroupVerdict:
    """Test membership in the structural group GL(n,H) intersect O(2n,2n).

    Returns whether A commutes with all three J_alpha, whether it preserves
    the neutral metric, and both; when A is built from quaternionic blocks
    the per-block (a,b,c,d) witnesses are extracted.
    """
    if not a.is_square() or a.nrows % 4 != 0 or a.nrows == 0:
        raise ValueError(f"matrix side must be a positive multiple of 4, got {a.nrows}")
    n = a.nrows // 4
    if h is None:
        h = standard_structure(n)
    elif h.dim != a.nrows:
        raise ValueError("structure dimension does not match the matrix")
    g = metric_matrix(n)
    commutes = all(a @ h.j(al) == h.j(al) @ a for al in (1, 2, 3))
    preserves = (a.transpose() @ g @ a) == g
    return StructuralGroupVerdict(
        commutes=commutes,
        preserves_metric=preserves,
        member=commutes and preserves,
        blocks=_extract_blocks(a, n),
    )


def admissible_basis(h: HypercomplexStructure) -> tuple[tuple, ...]:
    """The basis (e_i; J1 e_i; J2 e_i; J3 e_i) with e_i the x-directions.

    Orthonormal with respect to the neutral metric up to sign:
    |g(b_i, b_j)| equals delta_ij.
    """
    n = h.n
    dim = h.dim
    basis = []
    for alpha in range(4):
        for i in range(n):
            e = tuple(1 if k == i else 0 for k in range(dim))
            basis.append(e if alpha == 0 else h.j(alpha).apply(e))
    return tuple(basis)


def form_value(f: Matrix, x, y):
    """Evaluate a bilinear form on coordinate vectors: x^T F y."""
    return sum(xi * sum(fij * yj for fij, yj in zip(row, y)) for xi, row in zip(x, f.rows))
