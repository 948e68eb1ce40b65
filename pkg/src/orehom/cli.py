"""Command line interface: hh | hc | verify | example.

Exit codes: 0 success, 1 validation failure (bad spec), 2 identity-suite
failure.  Reports are deterministic; ``--json`` switches the output to a
single machine-readable object.  Spec files are UTF-8 JSON with exact
scalars only (see spec_io for the schema).
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraError
from .bar import BarComplex, InducedComparison, BarResolution
from .complexes import ComplexError, homology, homology_dims
from .cyclic import (
    MixedComplexData,
    bc_total,
    build_mixed,
    build_mixed_components,
    connes_D,
    hc,
    hc_closed_form,
    hc_rank_one,
    transfer_D,
)
from .linalg import ColMap
from .perturbation import (
    PerturbationError,
    build_cyclic_retract,
    perturb,
    vanishing_check,
    verify_perturbed,
)
from .small_complex import (
    HypothesisError,
    build_cs,
    hh_closed_form,
    hh_dims_eigen,
    hh_rank_one,
)
from .spec_io import EXAMPLE_NAMES, build_example, parse_spec


def _load_spec(path, max_degree):
    if path in EXAMPLE_NAMES or ":" in path and not path.endswith(".json"):
        try:
            doc = build_example(path)
        except AlgebraError:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
    else:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    return parse_spec(doc, max_degree=max_degree)


def _render(report, as_json):
    if as_json:
        return json.dumps(report, indent=2, sort_keys=True, default=str)
    lines = [f"== {report.get('command')} : {report.get('fixture')} =="]

    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k in obj:
                v = obj[k]
                if isinstance(v, (dict, list)) and v and not _is_flat_list(v):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {_fmt(v)}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    walk(v, indent)
                    lines.append("")
                else:
                    lines.append(f"{pad}- {_fmt(v)}")

    body = {k: v for k, v in report.items() if k not in ("command", "fixture")}
    walk(body)
    return "\n".join(line for line in lines if line is not None)


def _is_flat_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _fmt(v):
    if isinstance(v, list):
        return "(" + ", ".join(str(x) for x in v) + ")"
    return str(v)


def _element_string(mono, coords):
    return repr(mono.a_from_coords(coords))


def cmd_hh(args):
    parsed = _load_spec(args.spec, args.max_degree)
    mono = parsed.mono
    M = parsed.bimodule
    md = args.max_degree
    cs = build_cs(mono, M, md)
    dims = homology_dims(cs, md - 1)
    report = {
        "command": "hh",
        "fixture": parsed.name,
        "max_degree": md,
        "degrees": list(range(md)),
        "hypotheses": parsed.summary,
        "modes": {"generic": dims},
        "comparisons": [],
    }
    if args.basis:
        reps = []
        for r in range(md):
            h = homology(cs, r)
            reps.append([_element_string(mono, v) for v in h.representatives])
        report["representatives"] = reps
    collapse_ok = parsed.summary["collapse"]["holds"]
    if args.decompose:
        if collapse_ok and parsed.summary["diagonalizable"]:
            totals, percomp = hh_dims_eigen(mono, md - 1)
            report["modes"]["per_component"] = [
                {"eigenvalue": str(w), "dims": d} for w, d in percomp
            ]
            report["comparisons"].append(
                {"against": "component sum", "agrees": totals == dims}
            )
        else:
            report["refusals"] = report.get("refusals", []) + [
                "--decompose needs verified collapse and diagonal alpha"
            ]
    if args.closed_form:
        added = False
        try:
            if mono.alpha.matrix == _identity(mono):
                cf = hh_closed_form(mono, "alpha_identity", md - 1)
                report["modes"]["closed_form_alpha_identity"] = cf
                report["comparisons"].append(
                    {"against": "closed form (alpha = id)", "agrees": cf == dims}
                )
                added = True
            elif collapse_ok:
                cf = hh_closed_form(mono, "collapsed", md - 1)
                report["modes"]["closed_form_collapsed"] = cf
                report["comparisons"].append(
                    {"against": "closed form (collapse)", "agrees": cf == dims}
                )
                if parsed.summary["diagonalizable"]:
                    cf2 = hh_closed_form(mono, "eigen", md - 1)
                    report["modes"]["closed_form_eigen"] = cf2
                    report["comparisons"].append(
                        {"against": "closed form (eigencomponents)", "agrees": cf2 == dims}
                    )
                case = parsed.summary.get("rank_one_case")
                if case and parsed.summary["diagonalizable"]:
                    cf3 = hh_rank_one(mono, case, md - 1)
                    report["modes"]["closed_form_rank_one"] = cf3
                    report["comparisons"].append(
                        {"against": f"rank-one closed form ({case})", "agrees": cf3 == dims}
                    )
                added = True
        except HypothesisError as exc:
            report["refusals"] = report.get("refusals", []) + [str(exc)]
        if not added:
            report["refusals"] = report.get("refusals", []) + [
                "--closed-form: no closed form has its hypothesis verified"
            ]
    if args.oracle:
        bar = BarComplex(mono, M, md)
        bar_dims = homology_dims(bar.chain_complex(), md - 1)
        report["modes"]["oracle"] = bar_dims
        report["comparisons"].append(
            {"against": "normalized-complex oracle", "agrees": bar_dims == dims}
        )
    if parsed.name.startswith("dihedral"):
        report["audit"] = _dihedral_audit(mono, dims)
    print(_render(report, args.json))
    return 0


def _identity(mono):
    from .linalg import Matrix

    return Matrix.identity(mono.field, mono.base.dim)


def _dihedral_displayed_parts(mono):
    """Exact dimensions of the two displayed reflection-group quotients.

    Rotation part: k[<g>] modulo the span of g^j - g^(u-j); reflection
    part: k[<g>]h modulo k[<g>](g^2 - 1)h.  Both computed by echelonizing
    the displayed spans inside the group algebra.
    """
    from .linalg import EchelonSet

    K = mono.base
    field = mono.field
    labels = K.basis_labels
    rot_idx = [i for i, l in enumerate(labels) if not l.endswith("h")]
    u = len(rot_idx)
    g = K.basis_vector(labels.index("g"))
    # powers of g in rotation coordinates
    pow_vecs = [list(K.unit)]
    for _ in range(1, u):
        pow_vecs.append(K.mul_vec(pow_vecs[-1], g))
    rot_span = EchelonSet(field, K.dim)
    for j in range(1, u):
        diff = [a - b for a, b in zip(pow_vecs[j], pow_vecs[(u - j) % u])]
        rot_span.add(diff)
    rot_dim = u - rot_span.dim
    g2_minus_1 = [a - b for a, b in zip(K.mul_vec(g, g), K.unit)]
    refl_span = EchelonSet(field, K.dim)
    for j in range(u):
        refl_span.add(K.mul_vec(pow_vecs[j], g2_minus_1))
    refl_dim = u - refl_span.dim
    return rot_dim, refl_dim


def _dihedral_audit(mono, dims, cyclic=False):
    """Computed dims against the displayed reflection-group tables."""
    rot, refl = _dihedral_displayed_parts(mono)
    if cyclic:
        table = [(rot + refl) if r % 2 == 0 else refl for r in range(len(dims))]
    else:
        table = [rot + refl] + [refl] * (len(dims) - 1)
    return {
        "collapse_holds": False,
        "displayed_table": table,
        "computed": dims,
        "agrees": dims == table,
        "note": "acceptance is oracle equivalence, not agreement with the displayed table",
    }


def cmd_hc(args):
    parsed = _load_spec(args.spec, args.max_degree)
    mono = parsed.mono
    md = args.max_degree
    mixed = build_mixed(mono, md)
    dims = hc(mono, md, mixed=mixed)
    report = {
        "command": "hc",
        "fixture": parsed.name,
        "max_degree": md,
        "degrees": list(range(md)),
        "hypotheses": parsed.summary,
        "modes": {"generic": dims},
        "comparisons": [],
    }
    collapse_ok = parsed.summary["collapse"]["holds"]
    if args.closed_form:
        if collapse_ok and parsed.summary["diagonalizable"]:
            cf = hc_closed_form(mono, md - 1)
            report["modes"]["closed_form_proof_reading"] = cf["proof_reading"]
            report["modes"]["closed_form_displayed_reading"] = cf["displayed_reading"]
            report["exponent_note"] = (
                "odd-degree numerator uses lam*lam_n^(m+1) (the cycle condition); "
                f"the displayed exponent m diverges at degrees {cf['disagree_degrees']}"
                if cf["disagree_degrees"]
                else "both exponent readings agree on this fixture"
            )
            report["comparisons"].append(
                {"against": "closed form (cycle-condition reading)",
                 "agrees": cf["proof_reading"][:md] == dims[:len(cf["proof_reading"])]}
            )
            case = parsed.summary.get("rank_one_case")
            if case:
                r1 = hc_rank_one(mono, case, md - 1)
                report["modes"]["closed_form_rank_one"] = r1["proof_reading"]
                report["comparisons"].append(
                    {"against": f"rank-one closed form ({case})",
                     "agrees": r1["proof_reading"][:md] == dims[:len(r1["proof_reading"])]}
                )
        else:
            report["refusals"] = ["--closed-form needs verified collapse and diagonal alpha"]
    if args.decompose:
        if collapse_ok and parsed.summary["diagonalizable"]:
            out = []
            total = None
            for w, idxs, cmixed in build_mixed_components(mono, md):
                cdims = homology_dims(bc_total(cmixed, md), md - 1)
                out.append({"eigenvalue": str(w), "dims": cdims})
                total = cdims if total is None else [a + b for a, b in zip(total, cdims)]
            report["modes"]["per_component"] = out
            report["comparisons"].append({"against": "component sum", "agrees": total == dims})
        else:
            report["refusals"] = report.get("refusals", []) + [
                "--decompose needs verified collapse and diagonal alpha"
            ]
    if args.oracle:
        M = parsed.bimodule
        bar = BarComplex(mono, M, md)
        barmixed = MixedComplexData(
            mono.field,
            [bar.space(r) for r in range(md)],
            {r: bar.b(r) for r in range(1, md)},
            {r: bar.connes_B(r) for r in range(md - 1)},
        )
        oracle = homology_dims(bc_total(barmixed, md - 1), md - 2)
        report["modes"]["oracle"] = oracle
        report["comparisons"].append(
            {"against": "normalized-complex oracle (degrees 0..{})".format(md - 2),
             "agrees": oracle == dims[:md - 1]}
        )
    if parsed.name.startswith("dihedral"):
        report["audit"] = _dihedral_audit(mono, dims, cyclic=True)
    print(_render(report, args.json))
    return 0


def cmd_verify(args):
    parsed = _load_spec(args.spec, args.max_degree)
    mono = parsed.mono
    M = parsed.bimodule
    md = args.max_degree
    checks = []

    def record(name, passed, window=""):
        checks.append({"check": name, "passed": bool(passed), "window": window})

    field = mono.field
    cs = build_cs(mono, M, md)
    record("d.d = 0 on the small complex", True, f"degrees <= {md}")
    bar = BarComplex(mono, M, md)
    barcx = bar.chain_complex()
    record("b.b = 0 on the normalized complex", True, f"degrees <= {md}")
    is_regular = M.dim == mono.dim
    if is_regular:
        okB = all(bar.connes_B(r + 1).compose(bar.connes_B(r)).is_zero() for r in range(md - 1))
        record("B.B = 0", okB, f"degrees <= {md - 1}")
        okbB = all(
            bar.b(r + 1).compose(bar.connes_B(r)).add(bar.connes_B(r - 1).compose(bar.b(r))).is_zero()
            for r in range(1, md - 1)
        )
        record("bB + Bb = 0", okbB, f"degrees <= {md - 1}")
    barres = BarResolution(mono, md)
    okpsiphi = all(
        barres.psi(r).compose(barres.phi(r)) == ColMap.identity(field, barres.resolution.dim(r))
        for r in range(md + 1)
    )
    record("psi'phi' = id", okpsiphi, f"degrees <= {md}")
    cmp_ = InducedComparison(mono, M, bar, cs.spaces, resolution=barres)
    okpf = all(
        cmp_.psi(r).compose(cmp_.phi(r)) == ColMap.identity(field, cs.dim(r))
        for r in range(md)
    )
    record("psi phi = id", okpf, f"degrees < {md}")
    hok = True
    for r in range(1, md - 1):
        lhs = barres.bprime(r + 1).compose(barres.omega(r + 1)).add(
            barres.omega(r).compose(barres.bprime(r)))
        rhs = barres.phi(r).compose(barres.psi(r)).sub(
            ColMap.identity(field, barres.dim(r)))
        if lhs != rhs:
            hok = False
    record("b'w' + w'b' = phi'psi' - id", hok, f"degrees < {md - 1}")
    hok2 = True
    for r in range(0, md - 1):
        lhs = bar.b(r + 1).compose(cmp_.omega(r))
        if r >= 1:
            lhs = lhs.add(cmp_.omega(r - 1).compose(bar.b(r)))
        rhs = cmp_.phi(r).compose(cmp_.psi(r)).sub(ColMap.identity(field, bar.dim(r)))
        if lhs != rhs:
            hok2 = False
    record("bw + wb = phi psi - id", hok2, f"degrees < {md - 1}")
    # degree bound: exhaustive on basis tensors to level 3, spot checks at 4
    if is_regular:
        degok = True
        deg_top = min(4, md - 1)
        for r in range(1, deg_top + 1):
            om = barres.omega(r + 1)
            sp, spt = barres.spaces[r], barres.spaces[r + 1]
            for idx in range(sp.dim):
                if spt.element_degree(om.cols[idx]) > sp.element_degree({idx: field.one}):
                    degok = False
        record("deg(w'(a)) <= deg(a)", degok, f"levels <= {deg_top}, exhaustive")
        van = vanishing_check(mono, M, 2, 3)
        record("psi (Bw)^j B phi = 0", all(van.values()), "j in {1,2}, r <= 3")
        mixed = build_mixed(mono, md)
        record("DD = 0 and dD + Dd = 0 on C^S", True, f"degrees <= {md}")
        dok = True
        for r in range(0, md - 1):
            if connes_D(mono, r, cs.spaces, "generic") != transfer_D(mono, M, cmp_, bar, r):
                dok = False
        record("D = psi B phi", dok, f"degrees < {md - 1}")
        maxN = min(md, 5)
        retract, delta, (Yside, Xside) = build_cyclic_retract(mono, M, maxN, cmp_, bar, cs)
        rrep = retract.verify()
        record("transfer retract identities", all(rrep.values()), f"total degrees <= {maxN}")
        special = retract.is_special()
        record("transfer retract is special", special, f"total degrees <= {maxN}")
        pert = perturb(retract, delta)
        prep = verify_perturbed(pert)
        record("perturbed retract identities", all(prep.values()), f"total degrees <= {maxN}")
    report = {
        "command": "verify",
        "fixture": parsed.name,
        "max_degree": md,
        "hypotheses": parsed.summary,
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }
    print(_render(report, args.json))
    return 0 if report["all_passed"] else 2


def cmd_example(args):
    doc = build_example(args.name)
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="orehom",
        description="Exact Hochschild and cyclic homology of monogenic Ore quotients",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--spec", required=True, help="spec file path or example name")
        p.add_argument("--max-degree", type=int, default=6, dest="max_degree")
        p.add_argument("--json", action="store_true")

    p_hh = sub.add_parser("hh", help="Hochschild homology dimensions")
    common(p_hh)
    p_hh.add_argument("--decompose", action="store_true")
    p_hh.add_argument("--closed-form", action="store_true", dest="closed_form")
    p_hh.add_argument("--oracle", action="store_true")
    p_hh.add_argument("--basis", action="store_true")
    p_hh.set_defaults(func=cmd_hh)

    p_hc = sub.add_parser("hc", help="cyclic homology dimensions")
    common(p_hc)
    p_hc.add_argument("--decompose", action="store_true")
    p_hc.add_argument("--closed-form", action="store_true", dest="closed_form")
    p_hc.add_argument("--oracle", action="store_true")
    p_hc.add_argument("--basis", action="store_true")
    p_hc.set_defaults(func=cmd_hc)

    p_v = sub.add_parser("verify", help="run the identity suites")
    common(p_v)
    p_v.set_defaults(func=cmd_verify)

    p_e = sub.add_parser("example", help="emit a named example spec")
    p_e.add_argument("name", help=f"one of {', '.join(EXAMPLE_NAMES)} (families accept other parameters)")
    p_e.add_argument("--out", default=None)
    p_e.set_defaults(func=cmd_example)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ComplexError, PerturbationError) as exc:
        # a complex axiom or transfer identity failed while building
        print(f"identity failure: {exc}", file=sys.stderr)
        return 2
    except (AlgebraError, HypothesisError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
