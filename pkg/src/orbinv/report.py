"""Analysis and verification reports.

Reports are plain dictionaries of JSON types.  Rationals are strings such as
"3" or "-1/2"; nothing is ever a float, so serialization is exact and stable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .confun import (
    GSet,
    commuting_fixed_triples,
    exhaustive_suite,
    inertia_model,
    model_suite,
    stabilizer_class_count,
    stringy_function,
    verify_inertia_pushforward,
)
from .epoly import EPolynomial
from .grp import class_equation_sum, commuting_pair_classes, conjugacy_classes, count_commuting_pairs
from .invariants import (
    NotApplicable,
    c1_ctop1,
    coarse_euler_routes,
    cr_hodge,
    evidence_check,
    inertia_euler,
    orbifold_E,
    stringy_euler_routes,
    trace_check,
)
from .model import PROJECTIVE, gorenstein_check, k_equivalence_check
from .modelfile import LoadedModel
from .sectors import double_inertia_sectors, inertia_sectors

FORMAT_VERSION = 1
CHECKS = ("confun", "euler", "trace", "evidence")

PASS, FAIL, NA = "pass", "fail", "not_applicable"


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, EPolynomial):
        return epoly_terms(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def epoly_terms(e: EPolynomial) -> list:
    return [{"p": str(p), "q": str(q), "coeff": str(c)} for p, q, c in e.sorted_terms()]


def to_json(report: dict) -> str:
    return json.dumps(jsonable(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _header(loaded: LoadedModel, command: str) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "tool_version": __version__,
        "command": command,
        "model": {"name": loaded.name, "kind": loaded.kind, "sha256": loaded.sha256},
    }


def _check(res) -> dict:
    return {"ok": res.ok, "criterion": res.criterion, "certificate": list(res.certificate)}


def _not_applicable(exc: NotApplicable) -> dict:
    return {"status": NA, "reason": exc.reason, "certificate": exc.certificate}


# -- analyze --------------------------------------------------------------------


def analyze(loaded: LoadedModel) -> dict:
    report = _header(loaded, "analyze")
    if isinstance(loaded.model, GSet):
        report.update(_analyze_gset(loaded.model))
    else:
        report.update(_analyze_quotient(loaded.model))
    return report


def _group_summary(G) -> dict:
    orders = G.orders()
    classes = conjugacy_classes(G)
    return {
        "order": G.order,
        "exponent": G.exponent(),
        "conjugacy_classes": [
            {"representative": c.representative, "size": c.size, "centralizer_order": c.centralizer_order,
             "element_order": orders[c.representative]}
            for c in classes
        ],
        "class_count": len(classes),
        "pair_class_count": len(commuting_pair_classes(G)),
        "commuting_pairs": count_commuting_pairs(G),
        "class_equation_sum": class_equation_sum(G),
    }


def _analyze_quotient(model) -> dict:
    G = model.group
    out = {
        "root_order": model.field.conductor,
        "ambient_dimension": model.n,
        "dimension": model.dimension,
        "group": _group_summary(G),
    }
    out["sectors"] = {
        "inertia": [
            {"class": s.index, "element": s.elements[0], "labels": list(s.component.labels),
             "dimension": s.dimension, "age": s.age, "stabilizer_order": s.stabilizer_order,
             "euler": s.euler, "epoly": s.epoly}
            for s in inertia_sectors(model)
        ],
        "double": [
            {"pair_class": s.index, "elements": list(s.elements), "labels": list(s.component.labels),
             "dimension": s.dimension, "stabilizer_order": s.stabilizer_order, "euler": s.euler}
            for s in double_inertia_sectors(model)
        ],
    }
    out["checks"] = {"gorenstein": _check(gorenstein_check(model)),
                     "k_equivalence": _check(k_equivalence_check(model))}
    inv: dict = {}
    routes = stringy_euler_routes(model)
    inv["stringy_euler"] = {"value": routes["double_inertia_sectors"], "routes": routes,
                            "agree": len(set(routes.values())) == 1}
    croutes = coarse_euler_routes(model)
    inv["coarse_euler"] = {"value": croutes["inertia_sectors"], "routes": croutes,
                           "agree": len(set(croutes.values())) == 1}
    inv["inertia_euler"] = inertia_euler(model)
    E = orbifold_E(model)
    inv["orbifold_E"] = {"terms": E, "text": str(E)}
    if model.kind == PROJECTIVE:
        h = cr_hodge(model)
        inv["cr_hodge"] = {
            "integral": [{"p": str(p), "q": str(q), "h": v} for (p, q), v in sorted(h.integral.items())],
            "fractional": [{"p": str(p), "q": str(q), "h": v} for (p, q), v in sorted(h.fractional.items())],
            "symmetric": h.is_symmetric(),
        }
    else:
        inv["cr_hodge"] = {"status": NA, "reason": "Chen-Ruan Hodge table needs a projective model",
                           "certificate": []}
    for key, fn in (("c1_ctop1", c1_ctop1), ("trace", trace_check), ("evidence", evidence_check)):
        try:
            val = fn(model)
        except NotApplicable as exc:
            inv[key] = _not_applicable(exc)
            continue
        if key == "c1_ctop1":
            inv[key] = {"value": val}
        else:
            inv[key] = {"lhs": val.lhs, "rhs": val.rhs, "equal": val.equal}
    out["invariants"] = inv
    return out


def _analyze_gset(S: GSet) -> dict:
    G = S.group
    phi = stringy_function(S)
    I = inertia_model(S)
    ipf = verify_inertia_pushforward(S)
    return {
        "group": _group_summary(G),
        "points": S.npoints,
        "orbits": [
            {"points": list(o), "stabilizer_order": S.stab_order[o[0]],
             "stabilizer_classes": stabilizer_class_count(S, o[0]), "stringy_function": phi.values[k]}
            for k, o in enumerate(S.orbits)
        ],
        "inertia": {"points": I.space.npoints, "orbits": len(I.space.orbits)},
        "coarse_pushforward_of_inertia": {
            "ok": ipf.ok, "stack": ipf.stack_values, "equivariant": ipf.equivariant_values,
            "averaged_indicator": ipf.alpha_values,
        },
        "stringy_mass": {"sum": sum(phi.values, Fraction(0)),
                         "commuting_triples_over_order": Fraction(commuting_fixed_triples(S), G.order)},
    }


# -- verify ---------------------------------------------------------------------


def parse_checks(text: str) -> tuple[list[str], bool]:
    """Split the --checks list; returns (checks, explicit)."""
    items = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in items if c not in CHECKS + ("all",)]
    if bad or not items:
        raise ValueError(f"unknown checks {bad}; choose from {', '.join(CHECKS + ('all',))}")
    if "all" in items:
        return list(CHECKS), False
    return sorted(set(items), key=CHECKS.index), True


def verify(loaded: LoadedModel, checks: list[str], explicit: bool = True) -> tuple[dict, int]:
    report = _header(loaded, "verify")
    out = {}
    for name in checks:
        out[name] = _RUNNERS[name](loaded)
    report["checks"] = out
    statuses = [v["status"] for v in out.values()]
    if FAIL in statuses:
        code = 1
    elif explicit and NA in statuses:
        code = 2
    elif not explicit and PASS not in statuses:
        code = 2
    else:
        code = 0
    report["exit_code"] = code
    return report, code


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _run_euler(loaded):
    model = loaded.model
    if isinstance(model, GSet):
        return {"status": NA, "reason": "Euler characteristics are computed for quotient models", "certificate": []}
    G = model.group
    routes = stringy_euler_routes(model)
    croutes = coarse_euler_routes(model)
    pairs = count_commuting_pairs(G)
    k = len(conjugacy_classes(G))
    ces = class_equation_sum(G)
    ok = len(set(routes.values())) == 1 and len(set(croutes.values())) == 1 and pairs == G.order * k and ces == 1
    return {
        "status": _status(ok),
        "stringy_euler_routes": routes,
        "coarse_euler_routes": croutes,
        "commuting_pairs": {"lhs": pairs, "rhs": G.order * k},
        "class_equation_sum": {"lhs": ces, "rhs": Fraction(1)},
    }


def _run_identity(fn):
    def run(loaded):
        if isinstance(loaded.model, GSet):
            return {"status": NA, "reason": "needs a projective quotient model", "certificate": []}
        try:
            res = fn(loaded.model)
        except NotApplicable as exc:
            return _not_applicable(exc)
        return {"status": _status(res.equal), "lhs": res.lhs, "rhs": res.rhs}
    return run


def _run_confun(loaded):
    S = loaded.model
    if not isinstance(S, GSet):
        return {"status": NA, "reason": "pushforward checks run on G-set models", "certificate": []}
    res = model_suite(S)
    out = {"model": res.summary()}
    ok = res.ok
    if loaded.suite is not None:
        suite = exhaustive_suite(**loaded.suite)
        out["exhaustive"] = suite.summary()
        ok = ok and suite.ok
    out["status"] = _status(ok)
    return out


_RUNNERS = {
    "euler": _run_euler,
    "trace": _run_identity(trace_check),
    "evidence": _run_identity(evidence_check),
    "confun": _run_confun,
}


# -- text -----------------------------------------------------------------------


def _fmt(v) -> str:
    return str(v)


def to_text(report: dict) -> str:
    lines = [f"orbinv {report['tool_version']}  {report['command']}  {report['model']['name']} "
             f"({report['model']['kind']})", f"sha256 {report['model']['sha256']}"]
    if report["command"] == "verify":
        lines.append("")
        lines.append(f"{'check':<10} {'status':<15} detail")
        for name, c in report["checks"].items():
            if c["status"] == NA:
                detail = c["reason"]
            elif "lhs" in c:
                detail = f"lhs = {c['lhs']}  rhs = {c['rhs']}"
            elif name == "euler":
                detail = "e_str routes " + ", ".join(f"{k}={v}" for k, v in c["stringy_euler_routes"].items())
            else:
                m = c["model"]
                detail = f"{m['maps']} maps, {m['checks']} checks"
                if "exhaustive" in c:
                    x = c["exhaustive"]
                    detail += f"; suite {x['models']} models, {x['maps']} maps, {x['homomorphisms']} homs"
            lines.append(f"{name:<10} {c['status']:<15} {detail}")
        lines.append(f"exit code {report['exit_code']}")
        return "\n".join(lines) + "\n"
    g = report["group"]
    lines.append("")
    lines.append(f"group order {g['order']}, {g['class_count']} classes, {g['pair_class_count']} commuting pair classes")
    if "orbits" in report:
        lines.append("")
        lines.append(f"{'orbit':<6} {'size':>5} {'|Stab|':>7} {'classes':>8} {'Phi':>6}")
        for k, o in enumerate(report["orbits"]):
            lines.append(f"{k:<6} {len(o['points']):>5} {o['stabilizer_order']:>7} "
                         f"{o['stabilizer_classes']:>8} {_fmt(o['stringy_function']):>6}")
        p = report["coarse_pushforward_of_inertia"]
        lines.append(f"coarse pushforward of 1 on the inertia: {'ok' if p['ok'] else 'FAILED'}")
        return "\n".join(lines) + "\n"
    lines.append("")
    lines.append(f"{'class':<6} {'elt':>5} {'labels':<8} {'dim':>4} {'age':>6} {'|C|':>5}")
    for s in report["sectors"]["inertia"]:
        lab = ",".join(map(str, s["labels"])) or "-"
        lines.append(f"{s['class']:<6} {s['element']:>5} {lab:<8} {s['dimension']:>4} {_fmt(s['age']):>6} "
                     f"{s['stabilizer_order']:>5}")
    lines.append(f"double inertia sectors: {len(report['sectors']['double'])}")
    lines.append("")
    for name, c in report["checks"].items():
        lines.append(f"{name:<14} {'yes' if c['ok'] else 'no':<4} {c['criterion']}")
    inv = report["invariants"]
    lines.append("")
    lines.append(f"E_orb          {inv['orbifold_E']['text']}")
    lines.append(f"e_str          {inv['stringy_euler']['value']}")
    lines.append(f"coarse euler   {inv['coarse_euler']['value']}")
    ch = inv["cr_hodge"]
    if "integral" in ch:
        cells = [f"h^{e['p']},{e['q']}={e['h']}" for e in ch["integral"] + ch["fractional"]]
        lines.append(f"cr hodge       {' '.join(cells)}")
    for key in ("c1_ctop1", "trace", "evidence"):
        c = inv[key]
        if c.get("status") == NA:
            lines.append(f"{key:<14} not applicable: {c['reason']}")
        elif "value" in c:
            lines.append(f"{key:<14} {c['value']}")
        else:
            lines.append(f"{key:<14} lhs = {c['lhs']}  rhs = {c['rhs']}  {'equal' if c['equal'] else 'DIFFER'}")
    return "\n".join(lines) + "\n"
