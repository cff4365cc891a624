"""End-to-end analysis of one family member and its report documents.

Reports are byte-deterministic for identical requests: scalars are rendered
through their canonical string form, tensor components are listed in
row-major index order with only nonzero entries, and every document key is
inserted in a fixed order so JSON output round-trips byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import analysis, liealg, reference
from .rings import lambda_symbols, scalar_str
from .tensors import Tensor


@dataclass(frozen=True)
class AnalysisRequest:
    """CLI-facing request: concrete rational parameters or symbolic mode."""

    lam: tuple | None            # four exact rationals, or None for symbolic
    output_format: str = "text"  # "text" or "json"

    @property
    def symbolic(self) -> bool:
        return self.lam is None


@dataclass(frozen=True)
class FamilyAnalysis:
    """All computed data for one parameter choice (symbolic or numeric)."""

    lam: tuple
    symbolic: bool
    fam: liealg.LieFamily
    hg: liealg.HGStructure4
    gamma: Tensor
    curv: liealg.CurvatureData
    st: analysis.StructureTensors
    nij: analysis.NijenhuisData
    classes: analysis.ClassReport
    curvature_audit: reference.CurvatureAudit
    f_audits: tuple
    n_norm_ratio: tuple


def run_family_analysis(lam=None) -> FamilyAnalysis:
    symbolic = lam is None
    params = lambda_symbols() if symbolic else tuple(lam)
    fam = liealg.LieFamily.from_lambda(params)
    hg = liealg.family_structure()
    gamma = liealg.levi_civita(fam, hg.metric)
    curv = liealg.curvature(fam, gamma, hg)
    st = analysis.compute_structure_tensors(fam, hg, gamma)
    nij = analysis.compute_nijenhuis(fam, hg)
    classes = analysis.build_class_report(st, nij, curv, hg, fam)
    audit = reference.audit_curvature(curv, fam.lam, hg.metric)
    f_audits = tuple(reference.audit_structure_tensor(st.F[a - 1], a, fam.lam) for a in (1, 2, 3))
    n_ref = reference.n_norm_reference(fam.lam)
    ratio = tuple(reference.rational_multiple(nij.norms[a], n_ref) for a in (1, 2))
    return FamilyAnalysis(
        lam=fam.lam,
        symbolic=symbolic,
        fam=fam,
        hg=hg,
        gamma=gamma,
        curv=curv,
        st=st,
        nij=nij,
        classes=classes,
        curvature_audit=audit,
        f_audits=f_audits,
        n_norm_ratio=ratio,
    )


# -- document assembly ---------------------------------------------------

def tensor_components(t: Tensor) -> list:
    return [
        {"indices": [i + 1 for i in idx], "value": scalar_str(v)}
        for idx, v in t.nonzero_items()
    ]


def _vector_strings(t: Tensor) -> list:
    return [scalar_str(t[k]) for k in range(t.dim)]


def _audit_entry_doc(e: reference.AuditEntry) -> dict:
    return {
        "name": e.name,
        "kind": e.kind,
        "status": e.status,
        "expected": e.expected,
        "computed": e.computed,
    }


def _curvature_audit_doc(audit: reference.CurvatureAudit) -> dict:
    counts = audit.counts()
    return {
        "entries": [_audit_entry_doc(e) for e in audit.entries],
        "summary": {
            "match": counts["match"],
            "sign_flip": counts["sign-flip"],
            "mismatch": counts["mismatch"],
        },
        "unlisted_nonzero": [
            {"indices": list(idx), "value": v} for idx, v in audit.unlisted_nonzero
        ],
        "tau": {
            "contraction": audit.tau_contraction,
            "closed_form": audit.tau_closed_form,
            "matches": audit.tau_matches,
            "with_table_r1441": audit.tau_with_table_r1441,
            "table_sign_consistent": audit.tau_table_sign_consistent,
        },
        "ricci": tensor_components(audit.ricci),
    }


def _classes_doc(classes: analysis.ClassReport) -> dict:
    herm = classes.hermitian
    nor2, nor3 = classes.norden
    return {
        "J1": {
            "classification": "hermitian",
            "W0": herm.w0,
            "W1": herm.w1,
            "W2": herm.w2,
            "W3": herm.w3,
            "W4": herm.w4,
            "j_invariance_identity": herm.j_invariance,
            "theta_zero": herm.theta_zero,
            "satisfied": list(herm.satisfied()),
        },
        "J2": {
            "classification": "norden",
            "W0": nor2.w0,
            "W1": nor2.w1,
            "W2": nor2.w2,
            "W3": nor2.w3,
            "theta_zero": nor2.theta_zero,
            "satisfied": list(nor2.satisfied()),
        },
        "J3": {
            "classification": "norden",
            "W0": nor3.w0,
            "W1": nor3.w1,
            "W2": nor3.w2,
            "W3": nor3.w3,
            "theta_zero": nor3.theta_zero,
            "satisfied": list(nor3.satisfied()),
        },
    }


def build_document(fa: FamilyAnalysis) -> dict:
    warnings = []
    if fa.fam.is_degenerate():
        warnings.append(
            "all four parameters are zero: degenerate abelian case, excluded "
            "from the family proper; every tensor below is flat"
        )
    flagged = fa.curvature_audit.flagged
    if flagged:
        names = ", ".join(e.name for e in flagged)
        warnings.append(
            f"curvature reference table disagreement at {names}; the computed "
            "value is the one consistent with the scalar-curvature closed form"
        )
    for alpha, ratio in zip((2, 3), fa.n_norm_ratio):
        if ratio is not None and ratio != 1:
            warnings.append(
                f"Nijenhuis square norm for J{alpha} equals {ratio} times the "
                "reference closed form (fixed contraction-convention factor)"
            )

    classes = fa.classes
    doc = {
        "parameters": {
            "mode": "symbolic" if fa.symbolic else "numeric",
            "lambda": [scalar_str(x) for x in fa.lam],
        },
        "brackets": tensor_components(fa.fam.constants_tensor()),
        "connection": tensor_components(fa.gamma),
        "curvature": {
            "components": tensor_components(fa.curv.R),
            "audit": _curvature_audit_doc(fa.curvature_audit),
        },
        "scalars": {
            "tau": scalar_str(fa.curv.tau),
            "tau_star": [scalar_str(x) for x in fa.curv.tau_star],
        },
        "structure_tensors": {
            "F1": tensor_components(fa.st.F[0]),
            "F2": tensor_components(fa.st.F[1]),
            "F3": tensor_components(fa.st.F[2]),
            "theta": [_vector_strings(t) for t in fa.st.theta],
            "d_theta1": tensor_components(fa.classes.d_theta1),
        },
        "nijenhuis": {
            "components": [tensor_components(n) for n in fa.nij.N],
            "norms": [scalar_str(x) for x in fa.nij.norms],
            "reference_ratio": [None if r is None else str(r) for r in fa.n_norm_ratio],
        },
        "norms": {
            "nablaJ": [scalar_str(x) for x in classes.nabla_j_norm],
        },
        "classes": _classes_doc(classes),
        "flags": {
            "pseudo_hyper_kaehler": classes.pseudo_hyper_kaehler,
            "isotropic": list(classes.isotropic),
            "isotropic_hyper": classes.isotropic_hyper,
            "scalar_flat": scalar_str(fa.curv.tau) == "0",
        },
        "warnings": warnings,
    }
    return doc


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- plain-text rendering --------------------------------------------------

def _format_components(items, label) -> list[str]:
    lines = [f"{label}:"]
    if not items:
        lines.append("  (all components zero)")
    for it in items:
        idx = ",".join(str(i) for i in it["indices"])
        lines.append(f"  [{idx}] = {it['value']}")
    return lines


def to_text(doc: dict) -> str:
    lines = []
    par = doc["parameters"]
    lines.append(f"family analysis ({par['mode']} mode)")
    lines.append("lambda = (" + ", ".join(par["lambda"]) + ")")
    for w in doc["warnings"]:
        lines.append(f"warning: {w}")
    lines.append("")
    lines += _format_components(doc["brackets"], "structure constants c^k_ij  ([Xi,Xj] components)")
    lines.append("")
    lines += _format_components(doc["connection"], "connection Gamma^k_ij")
    lines.append("")
    lines += _format_components(doc["curvature"]["components"], "curvature R_ijks")
    audit = doc["curvature"]["audit"]
    s = audit["summary"]
    lines.append(
        f"curvature table audit: {s['match']} match, {s['sign_flip']} sign-flip, "
        f"{s['mismatch']} mismatch"
    )
    for e in audit["entries"]:
        if e["status"] != "match":
            lines.append(
                f"  {e['status'].upper()} {e['name']}: computed {e['computed']}, "
                f"table lists {e['expected']}"
            )
    tau = audit["tau"]
    lines.append(f"tau by contraction      = {tau['contraction']}")
    lines.append(f"tau closed form         = {tau['closed_form']} (match: {tau['matches']})")
    lines.append(
        f"tau with table R1441    = {tau['with_table_r1441']} "
        f"(consistent: {tau['table_sign_consistent']})"
    )
    lines.append("tau_star = (" + ", ".join(doc["scalars"]["tau_star"]) + ")")
    lines.append("")
    for key in ("F1", "F2", "F3"):
        lines += _format_components(doc["structure_tensors"][key], f"structure tensor {key}")
    for alpha, vec in enumerate(doc["structure_tensors"]["theta"], start=1):
        lines.append(f"theta{alpha} = (" + ", ".join(vec) + ")")
    lines += _format_components(doc["structure_tensors"]["d_theta1"], "d theta1")
    lines.append("")
    nij = doc["nijenhuis"]
    for alpha, comps in enumerate(nij["components"], start=1):
        lines += _format_components(comps, f"Nijenhuis N{alpha} (upper index last)")
    lines.append("Nijenhuis square norms = (" + ", ".join(nij["norms"]) + ")")
    lines.append("nablaJ square norms    = (" + ", ".join(doc["norms"]["nablaJ"]) + ")")
    lines.append("")
    for jname in ("J1", "J2", "J3"):
        cl = doc["classes"][jname]
        sat = ", ".join(cl["satisfied"]) if cl["satisfied"] else "none"
        lines.append(f"classes for {jname} ({cl['classification']}): satisfied = {sat}")
    flags = doc["flags"]
    lines.append(f"pseudo_hyper_kaehler = {flags['pseudo_hyper_kaehler']}")
    lines.append(f"isotropic per J      = {flags['isotropic']}")
    lines.append(f"isotropic_hyper      = {flags['isotropic_hyper']}")
    lines.append(f"scalar_flat          = {flags['scalar_flat']}")
    return "\n".join(lines) + "\n"
