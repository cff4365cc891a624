"""Structure tensors, Lee forms, Nijenhuis tensors, basic-class predicates
for the Hermitian and Norden-metric classifications, and the isotropic
invariants.

The class predicates are evaluated by exhaustive checks over all basis
triples (4^3 in dimension 4); exact ring equality makes that complete.  A
class verdict is a satisfied-set: classes are not mutually exclusive, the
zero tensor satisfies every defining identity, and "belongs to the basic
class W" is reported as the pair (identity of W holds, W0 fails).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .liealg import DIM, HGStructure4, LieFamily
from .linalg import Matrix
from .rings import as_scalar, scalar_is_zero
from .tensors import MetricPair, Tensor, contract, lower_index, square_norm


@dataclass(frozen=True)
class StructureTensors:
    """The three covariant derivative tensors F_alpha(x,y,z) = g((nabla_x J_alpha) y, z)
    and their Lee forms theta_alpha = g^{ij} F_alpha(e_i, e_j, .)."""

    F: tuple[Tensor, Tensor, Tensor]
    theta: tuple[Tensor, Tensor, Tensor]


def compute_structure_tensors(fam: LieFamily, hg: HGStructure4, gamma: Tensor) -> StructureTensors:
    g = hg.metric.g
    fs = []
    thetas = []
    for alpha in (1, 2, 3):
        j = hg.j(alpha)

        def f_entry(i, jj, k, j=j):
            # (nabla_{X_i} J) X_jj = nabla_{X_i}(J X_jj) - J(nabla_{X_i} X_jj)
            first = [0] * DIM
            for a in range(DIM):
                coeff = j[a, jj]
                if scalar_is_zero(coeff):
                    continue
                for m in range(DIM):
                    first[m] = first[m] + coeff * gamma[i, a, m]
            second = j.apply(tuple(gamma[i, jj, m] for m in range(DIM)))
            return sum((f - s) * g[m, k] for m, (f, s) in enumerate(zip(first, second)))

        f = Tensor.from_function(DIM, "ddd", f_entry)
        theta = contract(hg.metric.g_inv, f, [(0, 0), (1, 1)])
        fs.append(f)
        thetas.append(theta)
    return StructureTensors(F=tuple(fs), theta=tuple(thetas))


@dataclass(frozen=True)
class NijenhuisData:
    """Nijenhuis tensors as (1,2)-tensors N^k_ij (axes i, j, k-up) with their
    scalar squares g^{ij} g^{kl} g(N(e_i,e_k), N(e_j,e_l))."""

    N: tuple[Tensor, Tensor, Tensor]
    norms: tuple


def compute_nijenhuis(fam: LieFamily, hg: HGStructure4) -> NijenhuisData:
    metric = hg.metric
    tensors = []
    norms = []
    basis = [tuple(1 if m == k else 0 for m in range(DIM)) for k in range(DIM)]
    for alpha in (1, 2, 3):
        j = hg.j(alpha)
        jbasis = [j.apply(b) for b in basis]

        def n_vec(i, k, j=j, jbasis=jbasis):
            t1 = fam.bracket_vectors(jbasis[i], jbasis[k])
            t2 = j.apply(fam.bracket_vectors(jbasis[i], basis[k]))
            t3 = j.apply(fam.bracket_vectors(basis[i], jbasis[k]))
            t4 = fam.bracket(i, k)
            return tuple(a - b - c - d for a, b, c, d in zip(t1, t2, t3, t4))

        cache = {(i, k): n_vec(i, k) for i in range(DIM) for k in range(DIM)}
        n = Tensor.from_function(DIM, "ddu", lambda i, k, m: cache[(i, k)][m])
        lowered = lower_index(n, 2, metric)
        tensors.append(n)
        norms.append(square_norm(lowered, metric))
    return NijenhuisData(N=tuple(tensors), norms=tuple(norms))


def exterior_derivative(theta: Tensor, fam: LieFamily) -> Tensor:
    """d(theta) for a left-invariant 1-form: d theta(X_i, X_j) = -theta([X_i, X_j]).

    No 1/2 factor; this normalization reproduces the family's reference
    table for d(theta_1) exactly.
    """
    def entry(i, j):
        return -sum(fam.c[i][j][k] * theta[k] for k in range(DIM))

    return Tensor.from_function(DIM, "dd", entry)


# -- class predicates --------------------------------------------------

def compose_slots(j: Matrix, f: Tensor, slots) -> Tensor:
    """Compose the given covariant slots of f with the endomorphism j."""
    out = f
    for s in slots:
        dim = f.dim

        def entry(*idx, out=out, s=s):
            return sum(j[b, idx[s]] * out[tuple(idx[:s] + (b,) + idx[s + 1:])] for b in range(dim))

        out = Tensor.from_function(dim, out.variance, entry)
    return out


def _theta_pulled(j: Matrix, theta: Tensor) -> Tensor:
    return Tensor.from_function(theta.dim, "d", lambda k: sum(j[b, k] * theta[b] for b in range(theta.dim)))


def _g_j(g: Tensor, j: Matrix) -> Tensor:
    """The form g(., J .) as a rank-2 covariant tensor."""
    return Tensor.from_function(g.dim, "dd", lambda i, k: sum(g[i, b] * j[b, k] for b in range(g.dim)))


@dataclass(frozen=True)
class HermitianClassVerdict:
    """Satisfied-set over the basic classes of an almost Hermitian structure.

    ``j_invariance`` is the stand-alone identity F(x,y,z) = F(Jx,Jy,z);
    together with ``theta_zero`` it is the W3 defining condition.
    """

    w0: bool
    w1: bool
    w2: bool
    w3: bool
    w4: bool
    j_invariance: bool
    theta_zero: bool

    def satisfied(self) -> tuple[str, ...]:
        names = []
        for name in ("w0", "w1", "w2", "w3", "w4"):
            if getattr(self, name):
                names.append(name.upper())
        return tuple(names)


def classify_hermitian(f: Tensor, theta: Tensor, j: Matrix, metric: MetricPair) -> HermitianClassVerdict:
    """Evaluate the defining identities of W1, W2, W3, W4 for (J, g) with J
    an isometry of g.  Written for dimension 4n; the W4 coefficient is
    1/(2(2n-1))."""
    dim = f.dim
    n4 = dim // 4
    g = metric.g
    theta_zero = theta.is_zero()
    w0 = f.is_zero()

    w1 = all(f[i, jj, k] == -f[jj, i, k] for i, jj, k in product(range(dim), repeat=3))
    w2 = all(
        scalar_is_zero(f[i, jj, k] + f[jj, k, i] + f[k, i, jj])
        for i, jj, k in product(range(dim), repeat=3)
    )
    j_inv = f == compose_slots(j, f, (0, 1))

    gj = _g_j(g, j)
    tj = _theta_pulled(j, theta)
    coeff = as_scalar(1) / (2 * (2 * n4 - 1))

    def w4_rhs(i, jj, k):
        return coeff * (
            g[i, jj] * theta[k] - g[i, k] * theta[jj]
            - gj[i, jj] * tj[k] + gj[i, k] * tj[jj]
        )

    w4 = all(f[i, jj, k] == w4_rhs(i, jj, k) for i, jj, k in product(range(dim), repeat=3))
    return HermitianClassVerdict(
        w0=w0, w1=w1, w2=w2, w3=j_inv and theta_zero, w4=w4,
        j_invariance=j_inv, theta_zero=theta_zero,
    )


@dataclass(frozen=True)
class NordenClassVerdict:
    """Satisfied-set over the basic classes of an almost Norden structure
    (J an anti-isometry of g)."""

    w0: bool
    w1: bool
    w2: bool
    w3: bool
    theta_zero: bool

    def satisfied(self) -> tuple[str, ...]:
        names = []
        for name in ("w0", "w1", "w2", "w3"):
            if getattr(self, name):
                names.append(name.upper())
        return tuple(names)


def classify_norden(f: Tensor, theta: Tensor, j: Matrix, metric: MetricPair) -> NordenClassVerdict:
    dim = f.dim
    n4 = dim // 4
    g = metric.g
    theta_zero = theta.is_zero()
    w0 = f.is_zero()

    gj = _g_j(g, j)
    tj = _theta_pulled(j, theta)
    coeff = as_scalar(1) / (4 * n4)

    def w1_rhs(i, jj, k):
        return coeff * (
            g[i, jj] * theta[k] + g[i, k] * theta[jj]
            + gj[i, jj] * tj[k] + gj[i, k] * tj[jj]
        )

    w1 = all(f[i, jj, k] == w1_rhs(i, jj, k) for i, jj, k in product(range(dim), repeat=3))

    fj = compose_slots(j, f, (2,))  # F(x, y, J z)
    w2_cyclic = all(
        scalar_is_zero(fj[i, jj, k] + fj[jj, k, i] + fj[k, i, jj])
        for i, jj, k in product(range(dim), repeat=3)
    )
    w3 = all(
        scalar_is_zero(f[i, jj, k] + f[jj, k, i] + f[k, i, jj])
        for i, jj, k in product(range(dim), repeat=3)
    )
    return NordenClassVerdict(w0=w0, w1=w1, w2=w2_cyclic and theta_zero, w3=w3, theta_zero=theta_zero)


# -- isotropic invariants ----------------------------------------------

@dataclass(frozen=True)
class IsotropicReport:
    """Scalar squares of nabla J_alpha (computed as the squares of F_alpha)
    and the isotropic flags they induce.  A flag is true when the square
    norm is the zero scalar even though the tensor need not vanish."""

    nabla_j_norm: tuple
    isotropic: tuple[bool, bool, bool]
    isotropic_hyper: bool


def isotropic_flags(st: StructureTensors, metric: MetricPair) -> IsotropicReport:
    norms = tuple(square_norm(f, metric) for f in st.F)
    flags = tuple(scalar_is_zero(x) for x in norms)
    return IsotropicReport(nabla_j_norm=norms, isotropic=flags, isotropic_hyper=all(flags))


def nabla_j_square_norm_direct(hg: HGStructure4, gamma: Tensor, alpha: int):
    """Independent route to the square of nabla J_alpha: build the
    (1,2)-tensor (nabla_i J) e_k itself and contract

        g^{ij} g^{kl} g((nabla_i J) e_k, (nabla_j J) e_l).

    Used to audit the identity with the F-tensor square norm.
    """
    j = hg.j(alpha)
    metric = hg.metric
    g = metric.g

    def nabla_j_vec(i, k):
        first = [0] * DIM
        for a in range(DIM):
            coeff = j[a, k]
            if scalar_is_zero(coeff):
                continue
            for m in range(DIM):
                first[m] = first[m] + coeff * gamma[i, a, m]
        second = j.apply(tuple(gamma[i, k, m] for m in range(DIM)))
        return tuple(f - s for f, s in zip(first, second))

    cache = {(i, k): nabla_j_vec(i, k) for i in range(DIM) for k in range(DIM)}
    total = 0
    signs = metric.signs()
    for i, k in product(range(DIM), repeat=2):
        vec = cache[(i, k)]
        pairing = sum(v * v * g[m, m] for m, v in enumerate(vec))
        total = total + signs[i] * signs[k] * pairing
    return total


# -- combined report ----------------------------------------------------

@dataclass(frozen=True)
class ClassReport:
    """Everything the classification pipeline decides about one family
    member (or one symbolic run)."""

    hermitian: HermitianClassVerdict          # for J1
    norden: tuple[NordenClassVerdict, NordenClassVerdict]  # for J2, J3
    pseudo_hyper_kaehler: bool
    isotropic: tuple[bool, bool, bool]
    isotropic_hyper: bool
    tau: object
    tau_star: tuple
    nabla_j_norm: tuple
    n_norm: tuple
    d_theta1: Tensor


def build_class_report(
    st: StructureTensors,
    nij: NijenhuisData,
    curils,
    hg: HGStructure4,
    fam: LieFamily,
) -> ClassReport:
    herm = classify_hermitian(st.F[0], st.theta[0], hg.j(1), hg.metric)
    nor2 = classify_norden(st.F[1], st.theta[1], hg.j(2), hg.metric)
    nor3 = classify_norden(st.F[2], st.theta[2], hg.j(3), hg.metric)
    iso = isotropic_flags(st, hg.metric)
    return ClassReport(
        hermitian=herm,
        norden=(nor2, nor3),
        pseudo_hyper_kaehler=herm.w0 and nor2.w0 and nor3.w0,
        isotropic=iso.isotropic,
        isotropic_hyper=iso.isotropic_hyper,
        tau=curils.tau,
        tau_star=curils.tau_star,
        nabla_j_norm=iso.nabla_j_norm,
        n_norm=nij.norms,
        d_theta1=exterior_derivative(st.theta[0], fam),
    )
