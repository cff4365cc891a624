"""Closed-form reference tables for the four-parameter family and the audit
helpers that compare computed tensors against them, entry by entry.

All indices in this module are written 1-based, matching report output.
One known discrepancy is tracked: the reference table lists
R_1441 = -1/4 (l1^2 - l4^2) while the computed tensor gives the opposite
sign, and only the computed sign is consistent with the scalar-curvature
closed form.  The audit reports that entry as a sign flip instead of
silently matching either side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import Poly, as_scalar, scalar_is_zero, scalar_str
from .tensors import MetricPair, Tensor, contract


def s_invariant(lam):
    """The recurring combination l1^2 + l2^2 - l3^2 - l4^2."""
    l1, l2, l3, l4 = (as_scalar(x) for x in lam)
    return l1 * l1 + l2 * l2 - l3 * l3 - l4 * l4


def tau_reference(lam):
    return as_scalar(-3) / 2 * s_invariant(lam)


def tau_star_reference(lam):
    l1, l2, l3, l4 = (as_scalar(x) for x in lam)
    return (s_invariant(lam) / 2, l1 * l3 + l2 * l4, l1 * l4 - l2 * l3)


def theta_reference(lam):
    l1, l2, l3, l4 = (as_scalar(x) for x in lam)
    zero = (0, 0, 0, 0)
    return ((-l4, l3, -l2, l1), zero, zero)


def d_theta1_reference(lam):
    l1, l2, l3, l4 = (as_scalar(x) for x in lam)
    upper = {
        (1, 2): l1 * l1 + l2 * l2,
        (2, 4): l1 * l4 + l2 * l3,
        (1, 3): -(l1 * l4 + l2 * l3),   # table lists d theta1(X3, X1)
        (3, 4): -(l3 * l3) - l4 * l4,
        (1, 4): l1 * l3 - l2 * l4,
        (2, 3): l1 * l3 - l2 * l4,
    }

    def entry(i, j):
        if (i + 1, j + 1) in upper:
            return upper[(i + 1, j + 1)]
        if (j + 1, i + 1) in upper:
            return -upper[(j + 1, i + 1)]
        return 0

    return Tensor.from_function(4, "dd", entry)


def nabla_j_norm_reference(lam):
    s = s_invariant(lam)
    return (-2 * s, 4 * s, 4 * s)


def n_norm_reference(lam):
    """Stated squares of the Nijenhuis tensors for alpha = 2, 3."""
    return 32 * s_invariant(lam)


# -- curvature table ----------------------------------------------------

def _l(lam, i):
    return as_scalar(lam[i - 1])


def curvature_table(lam):
    """The listed curvature components; (indices, sign) entries share the
    row's closed-form value through R[indices] = sign * value."""
    q = Fraction(1, 4)

    def sq(i):
        return _l(lam, i) * _l(lam, i)

    def pr(i, j):
        return _l(lam, i) * _l(lam, j)

    return (
        ("R1221", (((1, 2, 2, 1), 1),), -q * (sq(1) + sq(2))),
        ("R1331", (((1, 3, 3, 1), 1),), q * (sq(2) - sq(4))),
        ("R1441", (((1, 4, 4, 1), 1),), -q * (sq(1) - sq(4))),
        ("R2332", (((2, 3, 3, 2), 1),), q * (sq(2) - sq(3))),
        ("R2442", (((2, 4, 4, 2), 1),), q * (sq(1) - sq(3))),
        ("R3443", (((3, 4, 4, 3), 1),), q * (sq(3) + sq(4))),
        ("R1341=R2342", (((1, 3, 4, 1), 1), ((2, 3, 4, 2), 1)), -q * pr(1, 2)),
        ("R2132=-R4134", (((2, 1, 3, 2), 1), ((4, 1, 3, 4), -1)), q * pr(1, 3)),
        ("R1231=-R4234", (((1, 2, 3, 1), 1), ((4, 2, 3, 4), -1)), q * pr(1, 4)),
        ("R2142=-R3143", (((2, 1, 4, 2), 1), ((3, 1, 4, 3), -1)), q * pr(2, 3)),
        ("R1241=-R3243", (((1, 2, 4, 1), 1), ((3, 2, 4, 3), -1)), q * pr(2, 4)),
        ("R3123=R4124", (((3, 1, 2, 3), 1), ((4, 1, 2, 4), 1)), q * pr(3, 4)),
    )


def riemann_orbit(idx):
    """The symmetry orbit of one component: skew in the first pair, skew in
    the last pair, and pair interchange."""
    i, j, k, s = idx
    seeds = {(i, j, k, s): 1}
    changed = True
    while changed:
        changed = False
        for (a, b, c, d), sign in list(seeds.items()):
            for nxt, nsign in (
                ((b, a, c, d), -sign),
                ((a, b, d, c), -sign),
                ((c, d, a, b), sign),
            ):
                if nxt not in seeds:
                    seeds[nxt] = nsign
                    changed = True
    return seeds


@dataclass(frozen=True)
class AuditEntry:
    name: str
    kind: str      # "component" or "pair-link"
    status: str    # "match", "sign-flip", "mismatch"
    expected: str
    computed: str


@dataclass(frozen=True)
class CurvatureAudit:
    """Entry-by-entry comparison of the computed curvature against the
    reference table, plus the trace consistency demonstration."""

    entries: tuple[AuditEntry, ...]
    unlisted_nonzero: tuple          # ((i,j,k,s), value-string) outside all listed orbits
    tau_contraction: str
    tau_closed_form: str
    tau_matches: bool
    tau_with_table_r1441: str        # trace recomputed with the table's R1441 sign
    tau_table_sign_consistent: bool  # whether that alternative reproduces the closed form
    ricci: Tensor

    @property
    def flagged(self) -> tuple[AuditEntry, ...]:
        return tuple(e for e in self.entries if e.status != "match")

    def counts(self):
        out = {"match": 0, "sign-flip": 0, "mismatch": 0}
        for e in self.entries:
            out[e.status] += 1
        return out


def _component_status(computed, expected):
    if computed == expected:
        return "match"
    if computed == -expected:
        return "sign-flip"
    return "mismatch"


def audit_curvature(curv, lam, metric: MetricPair) -> CurvatureAudit:
    r = curv.R
    table = curvature_table(lam)
    entries = []
    listed = {}

    for name, comps, value in table:
        for idx1, sign in comps:
            idx0 = tuple(a - 1 for a in idx1)
            expected = sign * value
            computed = r[idx0]
            label = "R" + "".join(str(a) for a in idx1)
            entries.append(
                AuditEntry(
                    name=label,
                    kind="component",
                    status=_component_status(computed, expected),
                    expected=scalar_str(expected),
                    computed=scalar_str(computed),
                )
            )
            listed[idx1] = expected
        if len(comps) == 2:
            (ia, sa), (ib, sb) = comps
            va = r[tuple(a - 1 for a in ia)]
            vb = r[tuple(a - 1 for a in ib)]
            # the chain asserts R[ia]/sa = R[ib]/sb
            ok = (sb * va) == (sa * vb)
            entries.append(
                AuditEntry(
                    name=name,
                    kind="pair-link",
                    status="match" if ok else "mismatch",
                    expected="linked components equal up to the listed sign",
                    computed="holds" if ok else "fails",
                )
            )

    # components outside every listed orbit must vanish
    covered = set()
    for idx1 in listed:
        covered.update(riemann_orbit(idx1))
    unlisted_nonzero = []
    for idx, value in r.nonzero_items():
        idx1 = tuple(a + 1 for a in idx)
        if idx1 not in covered:
            unlisted_nonzero.append((idx1, scalar_str(value)))

    tau_closed = tau_reference(lam)
    tau_alt = _tau_with_replaced_orbit(r, (1, 4, 4, 1), listed[(1, 4, 4, 1)], metric)
    return CurvatureAudit(
        entries=tuple(entries),
        unlisted_nonzero=tuple(unlisted_nonzero),
        tau_contraction=scalar_str(curv.tau),
        tau_closed_form=scalar_str(tau_closed),
        tau_matches=curv.tau == tau_closed,
        tau_with_table_r1441=scalar_str(tau_alt),
        tau_table_sign_consistent=tau_alt == tau_closed,
        ricci=curv.ricci,
    )


def _tau_with_replaced_orbit(r: Tensor, idx1, value, metric: MetricPair):
    """Recompute the scalar curvature after forcing one component (and its
    full symmetry orbit) to the given value."""
    orbit = riemann_orbit(idx1)
    replaced = {tuple(a - 1 for a in k): sign * value for k, sign in orbit.items()}

    def entry(*idx):
        return replaced.get(idx, r[idx])

    r2 = Tensor.from_function(r.dim, r.variance, entry)
    ricci = contract(metric.g_inv, r2, [(0, 0), (1, 3)])
    return contract(metric.g_inv, ricci, [(0, 0), (1, 1)]).item()


# -- structure tensor tables ---------------------------------------------

def structure_tensor_table(alpha: int, lam):
    """Listed components of F_alpha: (multiplier, indices) entries share the
    row's value through multiplier * F[indices] = value."""
    l1, l2, l3, l4 = (as_scalar(x) for x in lam)
    half = Fraction(1, 2)
    if alpha == 2:
        return (
            ((( -1, (1, 2, 2)), (-1, (1, 4, 4)), (2, (2, 1, 2)), (2, (2, 2, 1)), (2, (2, 3, 4)),
               (2, (2, 4, 3)), (2, (4, 1, 4)), (-2, (4, 2, 3)), (-2, (4, 3, 2)), (2, (4, 4, 1))), l1),
            ((( 2, (1, 1, 2)), (2, (1, 2, 1)), (2, (1, 3, 4)), (2, (1, 4, 3)), (-1, (2, 1, 1)),
               (-1, (2, 3, 3)), (-2, (3, 1, 4)), (2, (3, 2, 3)), (2, (3, 3, 2)), (-2, (3, 4, 1))), l2),
            ((( 2, (2, 1, 4)), (-2, (2, 2, 3)), (-2, (2, 3, 2)), (2, (2, 4, 1)), (1, (3, 2, 2)),
               (1, (3, 4, 4)), (-2, (4, 1, 2)), (-2, (4, 2, 1)), (-2, (4, 3, 4)), (-2, (4, 4, 3))), l3),
            (((-2, (1, 1, 4)), (2, (1, 2, 3)), (2, (1, 3, 2)), (-2, (1, 4, 1)), (-2, (3, 1, 2)),
               (-2, (3, 2, 1)), (-2, (3, 3, 4)), (-2, (3, 4, 3)), (1, (4, 1, 1)), (1, (4, 3, 3))), l4),
        )
    if alpha == 1:
        return (
            ((( 1, (1, 1, 4)), (-1, (1, 2, 3)), (1, (1, 3, 2)), (-1, (1, 4, 1)),
               (1, (2, 1, 3)), (1, (2, 2, 4)), (-1, (2, 3, 1)), (-1, (2, 4, 2))), half * l1),
            (((-1, (1, 1, 3)), (-1, (1, 2, 4)), (1, (1, 3, 1)), (1, (1, 4, 2)),
               (1, (2, 1, 4)), (-1, (2, 2, 3)), (1, (2, 3, 2)), (-1, (2, 4, 1))), half * l2),
            (((-1, (3, 1, 4)), (1, (3, 2, 3)), (-1, (3, 3, 2)), (1, (3, 4, 1)),
               (1, (4, 1, 3)), (1, (4, 2, 4)), (-1, (4, 3, 1)), (-1, (4, 4, 2))), half * l3),
            (((-1, (3, 1, 3)), (-1, (3, 2, 4)), (1, (3, 3, 1)), (1, (3, 4, 2)),
               (-1, (4, 1, 4)), (1, (4, 2, 3)), (-1, (4, 3, 2)), (1, (4, 4, 1))), half * l4),
        )
    if alpha == 3:
        return (
            ((( 1, (1, 1, 2)), (1, (1, 2, 1)), (-1, (1, 3, 4)), (-1, (1, 4, 3)), (-2, (2, 1, 1)),
               (-2, (2, 4, 4)), (1, (4, 1, 3)), (1, (4, 3, 1)), (1, (4, 2, 4)), (1, (4, 4, 2))), half * l1),
            ((( 2, (1, 2, 2)), (2, (1, 3, 3)), (-1, (2, 1, 2)), (-1, (2, 2, 1)), (1, (2, 3, 4)),
               (1, (2, 4, 3)), (-1, (3, 1, 3)), (-1, (3, 3, 1)), (-1, (3, 2, 4)), (-1, (3, 4, 2))), half * l2),
            ((( 1, (2, 1, 3)), (1, (2, 3, 1)), (1, (2, 2, 4)), (1, (2, 4, 2)), (-1, (3, 1, 2)),
               (-1, (3, 2, 1)), (1, (3, 4, 3)), (1, (3, 3, 4)), (-2, (4, 2, 2)), (-2, (4, 3, 3))), half * l3),
            (((-1, (1, 1, 3)), (-1, (1, 2, 4)), (-1, (1, 3, 1)), (-1, (1, 4, 2)), (2, (3, 1, 1)),
               (2, (3, 4, 4)), (1, (4, 1, 2)), (1, (4, 2, 1)), (-1, (4, 3, 4)), (-1, (4, 4, 3))), half * l4),
        )
    raise ValueError(f"alpha must be 1, 2 or 3, got {alpha}")


@dataclass(frozen=True)
class TableAudit:
    entries: tuple[AuditEntry, ...]
    unlisted_nonzero: tuple

    @property
    def flagged(self):
        return tuple(e for e in self.entries if e.status != "match")

    @property
    def clean(self) -> bool:
        return not self.flagged and not self.unlisted_nonzero


def audit_structure_tensor(f: Tensor, alpha: int, lam) -> TableAudit:
    entries = []
    listed = set()
    for comps, value in structure_tensor_table(alpha, lam):
        for mult, idx1 in comps:
            idx0 = tuple(a - 1 for a in idx1)
            expected = value / mult
            computed = f[idx0]
            listed.add(idx1)
            entries.append(
                AuditEntry(
                    name=f"F{alpha}" + "".join(str(a) for a in idx1),
                    kind="component",
                    status=_component_status(computed, expected),
                    expected=scalar_str(expected),
                    computed=scalar_str(computed),
                )
            )
    unlisted_nonzero = tuple(
        (tuple(a + 1 for a in idx), scalar_str(v))
        for idx, v in f.nonzero_items()
        if tuple(a + 1 for a in idx) not in listed
    )
    return TableAudit(entries=tuple(entries), unlisted_nonzero=unlisted_nonzero)


def rational_multiple(computed, reference):
    """The fixed rational c with computed = c * reference, or None.

    Zero reference pairs with zero computed (c = 0 reported as 1 would be
    misleading, so both-zero returns Fraction(1) only when they are equal).
    """
    computed = as_scalar(computed)
    reference = as_scalar(reference)
    if scalar_is_zero(reference):
        return Fraction(1) if scalar_is_zero(computed) else None
    if scalar_is_zero(computed):
        return Fraction(0)
    if isinstance(reference, Poly):
        exps, coeff = next(iter(sorted(reference.terms.items())))
        if not isinstance(computed, Poly):
            return None
        c = computed.terms.get(exps)
        if c is None:
            return None
        ratio = c / coeff
    else:
        if isinstance(computed, Poly):
            return None
        ratio = Fraction(computed) / Fraction(reference)
    return ratio if computed == ratio * reference else None
