"""The 4-parameter family of 4-dimensional Lie algebras with its invariant
neutral metric and hypercomplex structure, plus the full curvature apparatus.

Everything happens at the level of the algebra of left-invariant fields, in
the global basis X1..X4 (0-based internally).  The metric here is
diag(+1, +1, -1, -1), the opposite sign layout to the linear model module.

Curvature sign convention, fixed once:
    R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
with the last slot lowered by g, R_ijks = g(R(X_i,X_j)X_k, X_s).  The scalar
curvature is the double trace tau = g^{is} g^{jk} R_ijks (Ricci first).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .linalg import Matrix
from .rings import as_scalar, scalar_is_zero, scalar_str
from .tensors import MetricPair, Tensor, contract


class InvariantViolation(Exception):
    """An internal structural invariant failed (guards transcription bugs)."""


DIM = 4

# bracket table: (i, j) -> list of (k, lambda-index, sign), all 0-based,
# meaning [X_i, X_j] contains sign * lam[lambda-index] * X_k
_BRACKETS = {
    (0, 2): [(1, 1, 1), (3, 3, 1)],   # [X1,X3] =  l2 X2 + l4 X4
    (1, 3): [(0, 0, 1), (2, 2, 1)],   # [X2,X4] =  l1 X1 + l3 X3
    (1, 2): [(0, 1, -1), (3, 2, -1)],  # [X2,X3] = -l2 X1 - l3 X4
    (2, 3): [(0, 3, -1), (1, 2, 1)],   # [X3,X4] = -l4 X1 + l3 X2
    (3, 0): [(1, 0, 1), (2, 3, 1)],   # [X4,X1] =  l1 X2 + l4 X3
    (1, 0): [(2, 1, -1), (3, 0, 1)],   # [X2,X1] = -l2 X3 + l1 X4
}


@dataclass(frozen=True)
class LieFamily:
    """Structure constants c^k_ij of a 4-dimensional Lie algebra.

    ``c[i][j][k]`` is the coefficient of X_k in [X_i, X_j].  Antisymmetry
    and the Jacobi identity are verified at construction and their failure
    raises :class:`InvariantViolation`.
    """

    lam: tuple
    c: tuple

    def __post_init__(self):
        for i, j, k in product(range(DIM), repeat=3):
            lhs = self.c[i][j][k]
            rhs = self.c[j][i][k]
            if lhs != -rhs and not (scalar_is_zero(lhs) and scalar_is_zero(rhs)):
                raise InvariantViolation(f"structure constants not antisymmetric at ({i+1},{j+1},{k+1})")
        bad = jacobi_violation(self.c)
        if bad is not None:
            i, j, k, m, value = bad
            raise InvariantViolation(
                f"Jacobi identity fails on (X{i+1},X{j+1},X{k+1}) in the X{m+1} "
                f"component: {scalar_str(value)}"
            )

    @classmethod
    def from_lambda(cls, lam) -> "LieFamily":
        """Build the family member with parameters (l1,l2,l3,l4).

        A zero parameter vector is accepted (the abelian, flat case) even
        though the family proper excludes it; callers should surface the
        degeneracy warning from :meth:`is_degenerate`.
        """
        lam = tuple(as_scalar(x) for x in lam)
        if len(lam) != 4:
            raise ValueError("the family takes exactly four parameters")
        c = [[[0] * DIM for _ in range(DIM)] for _ in range(DIM)]
        for (i, j), entries in _BRACKETS.items():
            for k, li, sign in entries:
                c[i][j][k] = sign * lam[li]
                c[j][i][k] = -sign * lam[li]
        return cls(lam=lam, c=tuple(tuple(tuple(r) for r in plane) for plane in c))

    @classmethod
    def from_constants(cls, lam, c) -> "LieFamily":
        """Wrap arbitrary structure constants (generic predicates accept any
        Lie algebra, even though only one family is built in)."""
        lam = tuple(as_scalar(x) for x in lam)
        return cls(lam=lam, c=tuple(tuple(tuple(r) for r in plane) for plane in c))

    def is_degenerate(self) -> bool:
        return all(scalar_is_zero(x) for x in self.lam)

    def bracket(self, i: int, j: int) -> tuple:
        """[X_i, X_j] as a coefficient vector."""
        return tuple(self.c[i][j][k] for k in range(DIM))

    def bracket_vectors(self, x, y) -> tuple:
        """Bilinear extension of the bracket to coefficient vectors."""
        out = [0] * DIM
        for i in range(DIM):
            if scalar_is_zero(x[i]):
                continue
            for j in range(DIM):
                if scalar_is_zero(y[j]):
                    continue
                coeff = x[i] * y[j]
                for k in range(DIM):
                    out[k] = out[k] + coeff * self.c[i][j][k]
        return tuple(out)

    def constants_tensor(self) -> Tensor:
        return Tensor.from_function(DIM, "ddu", lambda i, j, k: self.c[i][j][k])


def jacobi_violation(c):
    for i, j, k in product(range(DIM), repeat=3):
        for m in range(DIM):
            total = 0
            # sum over cyclic permutations of [[X_i,X_j],X_k]
            for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
                for p in range(DIM):
                    total = total + c[a][b][p] * c[p][d][m]
            if not scalar_is_zero(total):
                return (i, j, k, m, total)
    return None


@dataclass(frozen=True)
class HGStructure4:
    """The invariant hypercomplex pseudo-Hermitian structure on the family.

    J2 is the base structure (X1->X3, X2->X4, X3->-X1, X4->-X2), J1 the
    complementary one (X1->X2, X2->-X1, X3->-X4, X4->X3), J3 = J1 J2, and
    the metric is diag(+1,+1,-1,-1).
    """

    J: tuple[Matrix, Matrix, Matrix]
    metric: MetricPair

    def j(self, alpha: int) -> Matrix:
        if alpha not in (1, 2, 3):
            raise ValueError(f"alpha must be 1, 2 or 3, got {alpha}")
        return self.J[alpha - 1]

    @property
    def g_matrix(self) -> Matrix:
        return Matrix.diagonal(self.metric.signs())


def family_structure() -> HGStructure4:
    j1 = Matrix(((0, -1, 0, 0),
                 (1, 0, 0, 0),
                 (0, 0, 0, 1),
                 (0, 0, -1, 0)))
    j2 = Matrix(((0, 0, -1, 0),
                 (0, 0, 0, -1),
                 (1, 0, 0, 0),
                 (0, 1, 0, 0)))
    j3 = j1 @ j2
    return HGStructure4(J=(j1, j2, j3), metric=MetricPair.diagonal((1, 1, -1, -1)))


def metric_invariance_violation(fam: LieFamily, metric: MetricPair):
    """First (i,j,k) with g([X_i,X_j],X_k) + g([X_i,X_k],X_j) != 0, else None."""
    g = metric.g
    for i, j, k in product(range(DIM), repeat=3):
        total = 0
        for m in range(DIM):
            total = total + fam.c[i][j][m] * g[m, k] + fam.c[i][k][m] * g[m, j]
        if not scalar_is_zero(total):
            return (i, j, k)
    return None


def levi_civita(fam: LieFamily, metric: MetricPair) -> Tensor:
    """Levi-Civita connection of an invariant metric with the ad-skew
    property: nabla_{X_i} X_j = 1/2 [X_i, X_j], so Gamma^k_ij = 1/2 c^k_ij.

    The invariance condition is a precondition and is checked; an
    independent Koszul evaluation lives in :func:`koszul_connection`.
    """
    bad = metric_invariance_violation(fam, metric)
    if bad is not None:
        i, j, k = bad
        raise InvariantViolation(
            f"metric invariance condition fails at (i,j,k)=({i+1},{j+1},{k+1}); "
            "the half-bracket connection formula does not apply"
        )
    return Tensor.from_function(DIM, "ddu", lambda i, j, k: as_scalar(fam.c[i][j][k]) / 2)


def koszul_connection(fam: LieFamily, metric: MetricPair) -> Tensor:
    """Connection from the Koszul formula specialized to left-invariant
    fields, where all direct derivative terms vanish:

        2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)

    Solved componentwise against the diagonal metric.  This is the oracle
    the half-bracket rule is audited against.
    """
    g = metric.g
    signs = metric.signs()

    def gamma(i, j, k):
        rhs = 0
        for m in range(DIM):
            rhs = rhs + fam.c[i][j][m] * g[m, k]
            rhs = rhs - fam.c[j][k][m] * g[m, i]
            rhs = rhs + fam.c[k][i][m] * g[m, j]
        # 2 g(nabla_i X_j, X_k) = rhs and g is diag(signs)
        return as_scalar(rhs) / (2 * signs[k])

    return Tensor.from_function(DIM, "ddu", gamma)


@dataclass(frozen=True)
class CurvatureData:
    """Curvature tensor with its traces.

    R is rank-4 fully covariant; ``ricci`` is the intermediate trace
    rho_jk = g^{is} R_ijks, kept so alternative trace conventions can be
    compared; ``tau_star`` holds the three associated scalar curvatures.
    """

    R: Tensor
    ricci: Tensor
    tau: object
    tau_star: tuple


def _nabla_vector(gamma: Tensor, i: int, vec) -> tuple:
    """nabla_{X_i} of a constant-coefficient field given by ``vec``."""
    out = [0] * DIM
    for m in range(DIM):
        if scalar_is_zero(vec[m]):
            continue
        for k in range(DIM):
            out[k] = out[k] + vec[m] * gamma[i, m, k]
    return tuple(out)


def curvature(fam: LieFamily, gamma: Tensor, hg: HGStructure4) -> CurvatureData:
    metric = hg.metric
    g = metric.g

    basis = [tuple(1 if m == k else 0 for m in range(DIM)) for k in range(DIM)]
    r_up = [[[None] * DIM for _ in range(DIM)] for _ in range(DIM)]
    for i, j, k in product(range(DIM), repeat=3):
        term1 = _nabla_vector(gamma, i, _nabla_vector(gamma, j, basis[k]))
        term2 = _nabla_vector(gamma, j, _nabla_vector(gamma, i, basis[k]))
        term3 = [0] * DIM
        for m in range(DIM):
            if scalar_is_zero(fam.c[i][j][m]):
                continue
            nm = _nabla_vector(gamma, m, basis[k])
            for s in range(DIM):
                term3[s] = term3[s] + fam.c[i][j][m] * nm[s]
        r_up[i][j][k] = tuple(t1 - t2 - t3 for t1, t2, t3 in zip(term1, term2, term3))

    def lowered(i, j, k, s):
        return sum(r_up[i][j][k][m] * g[m, s] for m in range(DIM))

    r = Tensor.from_function(DIM, "dddd", lowered)
    ricci = contract(metric.g_inv, r, [(0, 0), (1, 3)])       # rho_jk = g^{is} R_ijks
    tau = contract(metric.g_inv, ricci, [(0, 0), (1, 1)]).item()
    tau_star = (
        _tau_star_hermitian(r, hg.j(1), metric),
        _tau_star_norden(r, hg.j(2), metric),
        _tau_star_norden(r, hg.j(3), metric),
    )
    return CurvatureData(R=r, ricci=ricci, tau=tau, tau_star=tau_star)


def apply_to_slot(t: Tensor, slot: int, m: Matrix) -> Tensor:
    """Compose one covariant slot with an endomorphism: the result evaluated
    at e_a in that slot equals t evaluated at M e_a."""
    out_data = Tensor.from_function(
        t.dim,
        t.variance,
        lambda *idx: sum(
            m[b, idx[slot]] * t[tuple(idx[:slot] + (b,) + idx[slot + 1:])] for b in range(t.dim)
        ),
    )
    return out_data


def _tau_star_hermitian(r: Tensor, j: Matrix, metric: MetricPair):
    """tau*_1 = 1/2 g^{ij} g^{kl} R(X_i, J X_j, X_k, J X_l)."""
    w = apply_to_slot(apply_to_slot(r, 1, j), 3, j)
    first = contract(metric.g_inv, w, [(0, 0), (1, 1)])
    total = contract(metric.g_inv, first, [(0, 0), (1, 1)]).item()
    return as_scalar(total) / 2


def _tau_star_norden(r: Tensor, j: Matrix, metric: MetricPair):
    """tau*_alpha = g^{ij} g^{kl} R(X_i, X_k, J X_l, X_j) for alpha = 2, 3."""
    w = apply_to_slot(r, 2, j)  # slots now (i, k, l, j)
    outer = contract(metric.g_inv, w, [(0, 0), (1, 3)])  # contracts i with j
    return contract(metric.g_inv, outer, [(0, 0), (1, 1)]).item()
