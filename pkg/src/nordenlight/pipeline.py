"""Pipeline orchestration and report emission.

Runs validation, ambient derivation, and the per-hypersurface frame and
audit machinery, collecting everything into one report structure that renders
either as sectioned text or as a JSON document with stable field order and
rationals serialized as strings. Identical input produces byte-identical
structured reports.

Exit codes: 0 success, 2 parse error, 3 validation failure (the input is not
a valid Kaehler-Norden setup), 4 hypothesis failure (a hypersurface is not
lightlike / radical transversal / totally umbilical where required), 5
internal inconsistency (a proved identity failed; an engine bug, never an
input property). Hypothesis failures stop the failing block but not the
others.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from fractions import Fraction

from . import __version__
from .ambient import AmbientGeometry, build_ambient_geometry, validate_lie_algebra, validate_norden
from .errors import HypothesisFailure, InternalInconsistency, ValidationFailure
from .exact import Vector, format_rational
from .hypersurface import (
    HypersurfaceSpec,
    construct_screen,
    construct_transversal,
    gauss_weingarten,
    induce_and_classify,
    radical_transversal_check,
    umbilical_test,
    validate_span,
    verify_frame_identities,
)
from .manifold_file import ManifoldFile, hypersurface_specs, lie_algebra_spec, norden_from_file
from .symmetry import (
    SymmetryFlags,
    almost_einstein_fit,
    induced_curvature_closed_form,
    induced_curvature_gauss,
    induced_ricci,
    locally_symmetric_check,
    pde_residuals,
    ricci_semi_symmetric_check,
    semi_symmetric_check,
    symmetry_equivalence_audit,
)

RICCI_SIGN_NOTE = (
    "ricci convention: Ric(X,Y) = trace(Z -> R(Z,X)Y); the opposite trace order "
    "(Z -> R(X,Z)Y) negates every Ricci entry and the einstein coefficients, and "
    "leaves every vanishing check and the einstein feasibility unchanged"
)


@dataclass(frozen=True)
class Report:
    data: dict
    exit_code: int


def _fr(x: Fraction) -> str:
    return format_rational(x)


def _vector(v) -> list[str]:
    return [_fr(x) for x in v]


def _rows(rows) -> list[list[str]]:
    return [[_fr(x) for x in row] for row in rows]


def _combo(coords: Vector, labels) -> str:
    """Render a coordinate vector as a linear combination of basis labels."""
    parts = []
    for c, label in zip(coords, labels):
        if c == 0:
            continue
        if c == 1:
            parts.append(f"+ {label}")
        elif c == -1:
            parts.append(f"- {label}")
        elif c > 0:
            parts.append(f"+ {_fr(c)}*{label}")
        else:
            parts.append(f"- {_fr(-c)}*{label}")
    if not parts:
        return "0"
    head = parts[0]
    head = head[2:] if head.startswith("+ ") else "-" + head[2:]
    return " ".join([head] + parts[1:])


def _validation_dict(report) -> dict:
    return {
        "ok": report.ok,
        "checks": [
            {
                "name": c.name,
                "ok": c.ok,
                "witness": list(c.witness) if c.witness is not None else None,
            }
            for c in report.checks
        ],
    }


def _tensor_nonzeros(tensor) -> list[dict]:
    return [{"index": [i + 1 for i in ix], "value": _fr(val)} for ix, val in tensor.nonzero()]


def run_pipeline(mf: ManifoldFile) -> Report:
    digest = hashlib.sha256(mf.to_text().encode("utf-8")).hexdigest()
    data: dict = {
        "engine": {"name": "nordenlight", "version": __version__},
        "input_digest": f"sha256:{digest}",
    }
    labels = mf.basis_labels

    spec = lie_algebra_spec(mf)
    ns = norden_from_file(mf)
    lie_report = validate_lie_algebra(spec)
    data["validation"] = {"lie_algebra": _validation_dict(lie_report)}
    if not lie_report.ok:
        data["validation"]["ok"] = False
        data["status"] = "validation_failure"
        return Report(data, 3)
    norden_report = validate_norden(spec, ns)
    data["validation"]["norden"] = _validation_dict(norden_report)
    data["validation"]["ok"] = norden_report.ok
    if not norden_report.ok:
        data["status"] = "validation_failure"
        return Report(data, 3)

    try:
        amb = build_ambient_geometry(spec, ns)
    except ValidationFailure as exc:
        data["status"] = "validation_failure"
        data["ambient"] = {"kaehler_norden": False, "detail": str(exc)}
        return Report(data, 3)
    except InternalInconsistency as exc:
        data["status"] = "internal_inconsistency"
        data["ambient"] = {"detail": str(exc)}
        return Report(data, 5)

    trsc = amb.trsc
    ambient_dict = {
        "dim": spec.dim,
        "basis_labels": list(labels),
        "kaehler_norden": True,
        "connection_nonzero": _tensor_nonzeros(amb.gamma),
        "curvature_nonzero": _tensor_nonzeros(amb.riemann04),
        "constant_curvatures": (
            {
                "kind": "constant",
                "nu": _fr(trsc.nu),
                "nu_assoc": _fr(trsc.nu_assoc),
                "degenerate_fit": trsc.degenerate,
            }
            if trsc.kind == "constant"
            else {"kind": "not_constant"}
        ),
        "associated_constants": (
            {"nu_prime": _fr(amb.assoc.nu_prime), "nu_assoc_prime": _fr(amb.assoc.nu_assoc_prime)}
            if amb.assoc.nu_prime is not None
            else None
        ),
        "ricci_nonzero": _tensor_nonzeros(amb.ricci),
        "ricci_sign_note": RICCI_SIGN_NOTE,
    }
    data["ambient"] = ambient_dict

    hyper_dicts = []
    worst = 0
    for index, (block, hs) in enumerate(zip(mf.hypersurfaces, hypersurface_specs(mf))):
        hdict, level = _process_hypersurface(index, block, hs, amb, labels)
        hyper_dicts.append(hdict)
        worst = max(worst, level)
    data["hypersurfaces"] = hyper_dicts
    data["status"] = {0: "ok", 4: "hypothesis_failure", 5: "internal_inconsistency"}[worst]
    return Report(data, worst)


def _process_hypersurface(
    index: int, block, hs: HypersurfaceSpec, amb: AmbientGeometry, labels
) -> tuple[dict, int]:
    out: dict = {
        "index": index,
        "inducing_metric": hs.inducing_metric,
        "span_indices": list(block.span_indices),
        "span": [labels[i - 1] for i in block.span_indices],
    }
    try:
        validate_span(hs, amb)
        out["subalgebra"] = True

        both = {}
        for which in ("principal", "associated"):
            cls_w = induce_and_classify(
                HypersurfaceSpec(hs.span, which, None), amb
            )
            both[which] = cls_w.kind
        out["classification"] = both

        cls = induce_and_classify(hs, amb)
        if cls.kind == "nondegenerate":
            out["normal_direction"] = _vector(cls.normal_direction)
            out["normal_note"] = "raw direction vector; no unit normalization is attempted"
            raise HypothesisFailure(
                "hypersurface is nondegenerate for the inducing metric; "
                "the lightlike analysis does not apply"
            )
        out["radical"] = _vector(cls.radical_ambient)

        screen_indices = construct_screen(hs, cls)
        frame = construct_transversal(hs, amb, cls, screen_indices)
        rt = radical_transversal_check(frame, amb)
        out["frame"] = {
            "xi": _vector(frame.xi),
            "xi_combo": _combo(frame.xi, labels),
            "transversal": _vector(frame.transversal),
            "transversal_combo": _combo(frame.transversal, labels),
            "screen": [labels[block.span_indices[i] - 1] for i in screen_indices],
            "eta": _vector(frame.eta),
        }
        out["radical_transversal"] = {
            "holds": rt.is_radical_transversal,
            "b": _fr(rt.b) if rt.b is not None else None,
            "screen_holomorphic": rt.screen_holomorphic,
        }
        if not rt.is_radical_transversal:
            raise HypothesisFailure(
                "J does not map the radical onto the transversal line; "
                "the radical-transversal analysis does not apply"
            )
        frame = replace(frame, b=rt.b)

        sf = gauss_weingarten(frame, amb)
        umb = umbilical_test(sf, frame, amb)
        out["second_fundamental"] = {
            "b_table": _rows(sf.b_form),
            "c_table": _rows(sf.c_form),
            "a_star_xi": _rows(sf.a_star_xi),
            "a_n": _rows(sf.a_n),
            "tau": _vector(sf.tau),
        }
        if not umb.umbilical:
            witness_label = labels[block.span_indices[umb.witness_index] - 1]
            out["umbilical"] = {
                "holds": False,
                "witness": {
                    "field": witness_label,
                    "shape_image": _vector(umb.witness_image),
                    "shape_image_combo": _combo(umb.witness_image, labels),
                },
            }
            identity_checks = verify_frame_identities(sf, frame, amb, None)
            _record_identities(out, identity_checks)
            raise HypothesisFailure(
                "hypersurface is not totally umbilical; audit skipped"
            )
        sf = replace(sf, rho=umb.rho)
        out["umbilical"] = {"holds": True, "rho": _fr(umb.rho)}

        identity_checks = verify_frame_identities(sf, frame, amb, umb.rho)
        _record_identities(out, identity_checks)

        residuals = pde_residuals(sf, frame, amb)
        out["residuals"] = {
            "radial": _fr(residuals.radial),
            "screen": _vector(residuals.screen_directions),
        }

        r13 = induced_curvature_gauss(sf, frame, amb)
        r13_closed = induced_curvature_closed_form(frame, sf, amb)
        routes_match = r13 == r13_closed
        if not routes_match:
            raise InternalInconsistency("gauss and closed-form curvature routes disagree")
        ricci_routes = induced_ricci(r13, sf, frame, amb)
        ricci = ricci_routes.canonical

        metric = amb.norden.g
        metric_assoc = amb.norden.g_assoc
        m = len(hs.span)
        g_ind = tuple(
            tuple(_restrict(metric, hs.span[a], hs.span[b]) for b in range(m)) for a in range(m)
        )
        ga_ind = tuple(
            tuple(_restrict(metric_assoc, hs.span[a], hs.span[b]) for b in range(m))
            for a in range(m)
        )

        semi = semi_symmetric_check(r13)
        ricci_semi = ricci_semi_symmetric_check(r13, ricci)
        locally, _ = locally_symmetric_check(r13, sf.induced_gamma)
        einstein = almost_einstein_fit(ricci, g_ind, ga_ind)
        flags = SymmetryFlags(semi, ricci_semi, locally, einstein)

        out["induced"] = {
            "curvature_routes_match": routes_match,
            "curvature_nonzero": _tensor_nonzeros(r13),
            "ricci": _rows(ricci),
            "ricci_opposite_trace": _rows(
                tuple(tuple(-x for x in row) for row in ricci)
            ),
            "ricci_routes_match": ricci_routes.agree,
            "ricci_sign_note": RICCI_SIGN_NOTE,
        }
        out["flags"] = {
            "semi_symmetric": _flag_dict(semi),
            "ricci_semi_symmetric": _flag_dict(ricci_semi),
            "locally_symmetric": _flag_dict(locally),
            "almost_einstein": _einstein_dict(einstein),
        }

        verdict = symmetry_equivalence_audit(flags, hs.inducing_metric, amb.trsc, umb.rho, frame.b)
        audit: dict = {"applicable": verdict.applicable}
        if verdict.lhs is not None:
            audit["condition_iii"] = {"lhs": _fr(verdict.lhs), "rhs": _fr(verdict.rhs)}
            audit["condition_iii_holds"] = verdict.condition_holds
        audit["consistent"] = verdict.consistent
        audit["notes"] = list(verdict.notes)
        out["audit"] = audit
        out["status"] = "ok"
        return out, 0
    except HypothesisFailure as exc:
        out["status"] = "hypothesis_failure"
        out["detail"] = str(exc)
        return out, 4
    except InternalInconsistency as exc:
        out["status"] = "internal_inconsistency"
        out["detail"] = str(exc)
        return out, 5


def _restrict(metric, u, v) -> Fraction:
    return sum(u[i] * sum(metric[i][j] * v[j] for j in range(len(v))) for i in range(len(u)))


def _record_identities(out: dict, checks) -> None:
    out["identities"] = [
        {"name": c.name, "ok": c.ok, "witness": list(c.witness) if c.witness else None}
        for c in checks
    ]
    failed = [c for c in checks if not c.ok]
    if failed:
        raise InternalInconsistency(f"frame identity failed: {failed[0].name}")


def _flag_dict(flag) -> dict:
    d: dict = {"holds": flag.holds}
    if not flag.holds:
        d["witness"] = list(flag.witness)
        d["value"] = [_fr(x) for x in flag.value]
    return d


def _einstein_dict(fit) -> dict:
    if fit.kind == "infeasible":
        return {"kind": "infeasible", "witness": list(fit.witness) if fit.witness else None}
    d = {"kind": fit.kind, "k": _fr(fit.k), "c": _fr(fit.c)}
    if fit.kind == "parametric":
        d["family"] = [_vector(v) for v in fit.nullspace]
    return d


# ---------------------------------------------------------------------------
# emission


def emit_report(report: Report, fmt: str = "text") -> str:
    if fmt == "structured":
        return json.dumps(report.data, indent=2, ensure_ascii=True) + "\n"
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unknown report format {fmt!r}")


def _render_text(report: Report) -> str:
    d = report.data
    lines = []
    lines.append(f"{d['engine']['name']} {d['engine']['version']}")
    lines.append(f"input digest: {d['input_digest']}")
    lines.append("")
    lines.append("[validation]")
    val = d["validation"]
    for section in ("lie_algebra", "norden"):
        if section in val:
            sec = val[section]
            status = "PASS" if sec["ok"] else "FAIL"
            lines.append(f"{section.replace('_', ' ')}: {status}")
            for c in sec["checks"]:
                if not c["ok"]:
                    lines.append(f"  failed: {c['name']} witness {c['witness']}")
    if d["status"] == "validation_failure":
        if "ambient" in d and d["ambient"].get("detail"):
            lines.append(d["ambient"]["detail"])
        lines.append("")
        lines.append("validation failure: nothing further computed")
        return "\n".join(lines) + "\n"

    amb = d["ambient"]
    labels = amb["basis_labels"]
    lines.append("")
    lines.append("[ambient]")
    lines.append(f"dimension: {amb['dim']}")
    lines.append("kaehler-norden: yes")
    lines.append("connection nonzeros:")
    grouped: dict[tuple[int, int], list[str]] = {}
    for e in amb["connection_nonzero"]:
        i, j, k = e["index"]
        coef = e["value"]
        term = labels[k - 1] if coef == "1" else f"{coef}*{labels[k - 1]}"
        grouped.setdefault((i, j), []).append(term)
    for (i, j), terms in grouped.items():
        lines.append(f"  nabla_{{{labels[i - 1]}}} {labels[j - 1]} = " + " + ".join(terms))
    lines.append("curvature nonzeros:")
    for e in amb["curvature_nonzero"]:
        args = ",".join(labels[i - 1] for i in e["index"])
        lines.append(f"  R({args}) = {e['value']}")
    cc = amb["constant_curvatures"]
    if cc["kind"] == "constant":
        lines.append(
            f"totally real sectional curvatures: constant, nu = {cc['nu']}, nu_assoc = {cc['nu_assoc']}"
        )
        if amb["associated_constants"]:
            ac = amb["associated_constants"]
            lines.append(
                f"associated-metric constants: nu' = {ac['nu_prime']}, nu_assoc' = {ac['nu_assoc_prime']}"
            )
    else:
        lines.append("totally real sectional curvatures: not constant")
    lines.append(f"note: {amb['ricci_sign_note']}")

    for h in d.get("hypersurfaces", []):
        lines.append("")
        lines.append(
            f"[hypersurface {h['index'] + 1}] span {{{', '.join(h['span'])}}} "
            f"inducing metric: {h['inducing_metric']}"
        )
        if "classification" in h:
            cl = h["classification"]
            lines.append(
                f"classification: principal -> {cl['principal']}, associated -> {cl['associated']}"
            )
        if "normal_direction" in h:
            lines.append(f"normal direction (raw): {h['normal_direction']}")
        if "frame" in h:
            fr = h["frame"]
            lines.append(
                f"frame: xi = {fr['xi_combo']}, N = {fr['transversal_combo']}, "
                f"screen = {{{', '.join(fr['screen'])}}}"
            )
        if "radical_transversal" in h:
            rt = h["radical_transversal"]
            if rt["holds"]:
                lines.append(f"radical transversal: yes, b = {rt['b']}")
            else:
                lines.append("radical transversal: no")
        if "umbilical" in h:
            if h["umbilical"]["holds"]:
                lines.append(f"totally umbilical: rho = {h['umbilical']['rho']}")
            else:
                w = h["umbilical"]["witness"]
                lines.append(
                    "totally umbilical: no "
                    f"(shape image of {w['field']} is {w['shape_image_combo']})"
                )
        if "identities" in h:
            bad = [c["name"] for c in h["identities"] if not c["ok"]]
            if bad:
                lines.append(f"frame identities: FAILED {bad}")
            else:
                lines.append(f"frame identities: all pass ({len(h['identities'])})")
        if "residuals" in h:
            lines.append(
                f"umbilical residuals: radial = {h['residuals']['radial']}, "
                f"screen = {h['residuals']['screen']}"
            )
        if "induced" in h:
            ind = h["induced"]
            lines.append(
                "induced curvature: gauss and closed-form routes "
                + ("match" if ind["curvature_routes_match"] else "DIFFER")
            )
            lines.append(
                "induced ricci (canonical trace): "
                + "; ".join(" ".join(row) for row in ind["ricci"])
            )
            lines.append("ricci routes agree: " + ("yes" if ind["ricci_routes_match"] else "NO"))
        if "flags" in h:
            fl = h["flags"]
            ae = fl["almost_einstein"]
            ae_text = (
                f"k = {ae['k']}, c = {ae['c']}" + (" (family)" if ae["kind"] == "parametric" else "")
                if ae["kind"] != "infeasible"
                else "infeasible"
            )
            lines.append(
                "flags: locally symmetric: "
                + _yn(fl["locally_symmetric"]["holds"])
                + "; semi-symmetric: "
                + _yn(fl["semi_symmetric"]["holds"])
                + "; ricci semi-symmetric: "
                + _yn(fl["ricci_semi_symmetric"]["holds"])
                + "; almost einstein: "
                + ae_text
            )
        if "audit" in h:
            a = h["audit"]
            if a["applicable"]:
                ci = a["condition_iii"]
                lines.append(
                    f"audit: condition (iii) {ci['lhs']} = {ci['rhs']}: "
                    + _yn(a["condition_iii_holds"])
                    + "; consistent: "
                    + _yn(a["consistent"])
                )
            else:
                lines.append("audit: not applicable")
        if h["status"] != "ok":
            lines.append(f"status: {h['status']} ({h.get('detail', '')})")
    lines.append("")
    lines.append(f"overall status: {d['status']}")
    return "\n".join(lines) + "\n"


def _yn(flag) -> str:
    return "yes" if flag else "no"
