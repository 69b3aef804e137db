"""Command-line interface: one subcommand per pipeline stage.

Every command reads a single JSON problem file (see ``textio``) and emits
a deterministic JSON report with stable field names::

    {"command": ..., "status": ..., "payload": ..., "diagnostics": [...]}

Exit codes: 0 ok/verified, 1 refuted, 2 input error, 3 inconclusive.
``TB_STEP_BUDGET`` overrides the scalar-elimination budget of the border
division commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import border_div, groebner, order_ideal, textio
from .errors import TorsionBorderError
from .poly import Term

EXIT_CODES = {"ok": 0, "verified": 0, "refuted": 1, "error": 2, "inconclusive": 3}


def _render(problem):
    """Monomial/polynomial renderers bound to the problem's variables."""
    order = problem.display_order()
    vars = problem.vars

    def mon(m):
        return textio.format_monomial(vars, m)

    def poly(p):
        return textio.format_poly(order, vars, p)

    def term(t):
        c, m = t
        mon_txt = textio.format_monomial(vars, m)
        if mon_txt == "1":
            return str(c)
        if c == 1:
            return mon_txt
        if c == -1:
            return f"-{mon_txt}"
        return f"{c}{mon_txt}"

    return mon, poly, term


def _ideal_payload(ideal):
    return ideal.generator


def _step_budget():
    raw = os.environ.get("TB_STEP_BUDGET")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise TorsionBorderError(f"TB_STEP_BUDGET must be an integer, got {raw!r}")


def _require_order(problem):
    if problem.order is None:
        raise TorsionBorderError("problem file must fix a monomial order for this command")
    return problem.order


def _gb_pipeline(problem):
    order = _require_order(problem)
    gens = problem.require("ideal_generators")
    return groebner.short_reduce(groebner.buchberger(order, gens))


def _basis_payload(problem, sr):
    mon, poly, term = _render(problem)
    lead_mons = {g.leading_term(sr.order).monomial for g in sr.basis}
    lead_mons.add((0,) * sr.arity)
    ideals = {
        mon(m): _ideal_payload(groebner.leading_coefficient_ideal(sr, m))
        for m in sorted(lead_mons, key=lambda m: (sum(m), m))
    }
    return {
        "basis": [poly(g) for g in sr.basis],
        "leading_terms": [term(g.leading_term(sr.order)) for g in sr.basis],
        "leading_coefficient_ideals": ideals,
        "short_reduced": True,
    }


def cmd_gb(problem, opts):
    sr = _gb_pipeline(problem)
    return "ok", _basis_payload(problem, sr), []


def cmd_analyze(problem, opts):
    mon, poly, term = _render(problem)
    sr = _gb_pipeline(problem)
    analysis = groebner.residue_analysis(sr)
    payload = _basis_payload(problem, sr)
    payload["finitely_generated"] = analysis.finitely_generated
    payload["free_representation"] = analysis.free_representation
    diagnostics = []
    if analysis.finitely_generated:
        basis_entries = []
        for m in analysis.weak_std_monomials:
            ideal = analysis.monomial_ideals[m]
            if ideal.is_zero:
                cosets = "Z"
            else:
                cosets = list(range(ideal.generator))
            basis_entries.append(
                {
                    "monomial": mon(m),
                    "ideal_generator": _ideal_payload(ideal),
                    "coset_representatives": cosets,
                }
            )
        payload["weak_plus_basis"] = basis_entries
        diagnostics.append(
            "coset representatives are the full canonical residue systems {0..m-1}"
        )
    else:
        unbounded = _unbounded_variables(problem, sr)
        payload["unbounded_variables"] = [problem.vars[i] for i in unbounded]
        members, families = _weak_family_sketch(problem, sr, unbounded)
        payload["weak_monomial_families"] = {
            "finite_members": members,
            "infinite_families": families,
        }
        diagnostics.append(
            "the weak standard monomials form an infinite set; families list "
            "one representative exponent pattern per unbounded direction"
        )
    return "ok", payload, diagnostics


def _unbounded_variables(problem, sr):
    out = []
    for i in range(sr.arity):
        found = False
        for g in sr.basis:
            lc, lm = g.leading_term(sr.order)
            if lc == 1 and all(e == 0 for k, e in enumerate(lm) if k != i):
                found = True
                break
        if not found:
            out.append(i)
    return out


def _weak_family_sketch(problem, sr, unbounded):
    """Finite weak-standard members plus per-direction infinite families.

    Bounded exponents range below their monic pure-power degree; unbounded
    exponents are probed at 1 and reported as a family when the ideal has
    stabilized (same ideal at exponent 2).
    """
    mon, _, _ = _render(problem)
    bounds = []
    for i in range(sr.arity):
        if i in unbounded:
            bounds.append(2)  # probe exponents 0 and 1
            continue
        nu = min(
            lm[i]
            for g in sr.basis
            for lc, lm in [g.leading_term(sr.order)]
            if lc == 1 and all(e == 0 for k, e in enumerate(lm) if k != i)
        )
        bounds.append(nu)
    members = []
    families = []
    for m in sorted(order_ideal.box_monomials(bounds), key=lambda m: (sum(m), m)):
        ideal = groebner.leading_coefficient_ideal(sr, m)
        if ideal.is_unit:
            continue
        probe_dirs = [i for i in unbounded if m[i] >= 1]
        if not probe_dirs:
            members.append(mon(m))
            continue
        bumped = tuple(e + 1 if i in probe_dirs else e for i, e in enumerate(m))
        if groebner.leading_coefficient_ideal(sr, bumped) == ideal:
            pattern = "".join(
                f"{problem.vars[i]}^k" if i in probe_dirs else ""
                for i in range(sr.arity)
            )
            base = tuple(0 if i in probe_dirs else e for i, e in enumerate(m))
            base_txt = mon(base)
            families.append(pattern if base_txt == "1" else f"{base_txt}*{pattern}")
    return members, sorted(set(families))


def _order_ideal_from(problem):
    mapping = problem.require("mapping")
    return order_ideal.OrderIdealData(mapping)


def cmd_border(problem, opts):
    mon, poly, term = _render(problem)
    O = _order_ideal_from(problem)
    b = order_ideal.borders(O)
    payload = {
        "monomial_part": [mon(m) for m in O.sorted_mon_part()],
        "monomial_border": [mon(m) for m in b.monomial_border],
        "scalar_border": [term(t) for t in b.scalar_border],
        "kth_borders": {
            str(k): sorted(
                (mon(m) for m in order_ideal.kth_border(O, k)),
            )
            for k in (2, 3)
        },
    }
    return "ok", payload, []


def _prebasis_from(problem):
    O = _order_ideal_from(problem)
    elements = problem.require("prebasis")
    return O, border_div.validate_prebasis(O, elements)


def cmd_check_acyclic(problem, opts):
    mon, poly, term = _render(problem)
    O, P = _prebasis_from(problem)
    rep = border_div.acyclicity(P)
    payload = {"acyclic": rep.acyclic}
    if rep.acyclic:
        payload["topological_order"] = [i + 1 for i in rep.topological_order]
    else:
        payload["cycle_witness"] = [mon(m) for m in rep.cycle_witness]
    return "ok", payload, []


def cmd_divide(problem, opts):
    mon, poly, term = _render(problem)
    O, P = _prebasis_from(problem)
    budget = _step_budget()
    results = []
    for f in problem.require("query_polys"):
        div = border_div.border_divide(P, f, step_budget=budget)
        entry = {
            "input": poly(f),
            "cofactors": [poly(c) for c in div.cofactors],
            "remainder": poly(div.remainder()),
            "remainder_coefficients": {
                mon(m): c for m, c in sorted(div.remainder_coeffs.items())
            },
            "scalar_steps": div.step4_count,
        }
        if opts.trace:
            entry["trace"] = [t.to_dict(mon, term) for t in div.trace]
        results.append(entry)
    return "ok", {"divisions": results}, []


def cmd_nf(problem, opts):
    mon, poly, term = _render(problem)
    O, P = _prebasis_from(problem)
    budget = _step_budget()
    results = [
        {"input": poly(f), "normal_form": poly(border_div.normal_form(P, f, budget))}
        for f in problem.require("query_polys")
    ]
    return "ok", {"normal_forms": results}, []


def cmd_member(problem, opts):
    mon, poly, term = _render(problem)
    O, P = _prebasis_from(problem)
    budget = _step_budget()
    results = [
        {"input": poly(f), "member": border_div.is_member(P, f, budget)}
        for f in problem.require("query_polys")
    ]
    return "ok", {"membership": results}, []


def cmd_from_gb(problem, opts):
    mon, poly, term = _render(problem)
    sr = _gb_pipeline(problem)
    O, P = border_div.border_basis_from_gb(sr)
    b = order_ideal.borders(O)
    payload = {
        "mapping": [
            {"monomial": mon(m), "ideal_generator": _ideal_payload(O.ideal_at(m))}
            for m in O.sorted_mon_part()
        ],
        "monomial_border": [mon(m) for m in b.monomial_border],
        "scalar_border": [term(t) for t in b.scalar_border],
        "elements": [poly(p) for p in P.polynomials()],
    }
    return "ok", payload, []


def cmd_verify(problem, opts):
    mon, poly, term = _render(problem)
    order = _require_order(problem)
    O, P = _prebasis_from(problem)
    gens = problem.require("ideal_generators")
    rep = border_div.verify_border_basis(O, P, gens, order)
    payload = {
        "verdict": rep.verdict,
        "checks": {k: v for k, v in rep.checks.items()},
    }
    if rep.matched_order is not None:
        payload["matched_order"] = {
            "kind": rep.matched_order.kind,
            "priority": [problem.vars[i] for i in rep.matched_order.priority],
        }
    return rep.verdict, payload, list(rep.details)


COMMANDS = {
    "gb": cmd_gb,
    "analyze": cmd_analyze,
    "border": cmd_border,
    "divide": cmd_divide,
    "nf": cmd_nf,
    "member": cmd_member,
    "check-acyclic": cmd_check_acyclic,
    "from-gb": cmd_from_gb,
    "verify": cmd_verify,
}


def run_command(command, path, opts):
    """Execute one command on one problem file; never raises."""
    try:
        problem = textio.load_problem(path)
        status, payload, diagnostics = COMMANDS[command](problem, opts)
    except TorsionBorderError as e:
        status, payload, diagnostics = "error", {}, [str(e)]
    except FileNotFoundError:
        status, payload, diagnostics = "error", {}, [f"no such file: {path}"]
    report = {
        "command": command,
        "status": status,
        "payload": payload,
        "diagnostics": diagnostics,
    }
    return report, EXIT_CODES[status]


def _emit(text, out_path):
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="torsion-border",
        description="Groebner bases over Z and acyclic border bases with torsion",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("problem_file", nargs="?", help="JSON problem file")
    parser.add_argument("--trace", action="store_true", help="include step traces in reports")
    parser.add_argument("--batch", metavar="DIR", help="process every *.json file in DIR")
    parser.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    opts = parser.parse_args(argv)

    if (opts.problem_file is None) == (opts.batch is None):
        parser.error("provide exactly one of a problem file or --batch DIR")

    if opts.batch is None:
        report, code = run_command(opts.command, opts.problem_file, opts)
        _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", opts.out)
        return code

    batch_dir = Path(opts.batch)
    if not batch_dir.is_dir():
        parser.error(f"--batch {opts.batch}: not a directory")
    lines = []
    worst = 0
    for path in sorted(batch_dir.glob("*.json")):
        report, code = run_command(opts.command, str(path), opts)
        report["input_file"] = path.name
        lines.append(json.dumps(report, sort_keys=True))
        worst = max(worst, code)
    _emit("\n".join(lines) + "\n", opts.out)
    return worst


if __name__ == "__main__":
    sys.exit(main())
