"""Command-line interface.

Inputs are inline generator lists ("x1*x3, x2*x4") with --n, or a JSON
pair document via --I @file.json.  Results go to stdout, human-readable
by default and machine JSON with --json; diagnostics go to stderr.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 size guard
exceeded, 4 violations or regression failures found.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .core import (
    FactorPair,
    ModulePredicate,
    format_ideal,
    load_pair_text,
    parse_ideal,
    zero_ideal,
)
from .errors import (
    GuardExceededError,
    NotApplicableError,
    NotEquigeneratedError,
    NoLastVariableMultiplesError,
    ParseError,
    PrincipalIdealError,
    SqfdepthError,
)
from .harness import (
    RULES,
    InstanceParams,
    read_report,
    replay_record,
    scan as run_scan,
    write_report,
)
from .homology import depth as module_depth
from .linalg import DEFAULT_FIELD, FieldSpec
from .reference import example_names, verify_examples
from .stanley import brute_force_sdepth, sdepth_equals_indeg
from .theorems import (
    check_corollary_str,
    check_theorem_main,
    check_theorem_main1,
    koszul_witness,
    normalize_pair,
    quick_certificates,
)
from .core import rho as rho_count


def _echo_json(obj) -> None:
    click.echo(json.dumps(obj, sort_keys=True))


def _load_pair(n: int | None, ideal_text: str | None, sub_text: str | None) -> FactorPair:
    """Inline generator text plus --n, or a JSON document via @file."""
    if ideal_text is None:
        raise click.UsageError("--I is required")
    if ideal_text.startswith("@"):
        if n is not None or sub_text is not None:
            raise click.UsageError("with --I @file.json, omit --n and --J")
        return load_pair_text(Path(ideal_text[1:]).read_text(encoding="utf-8"))
    if n is None:
        raise click.UsageError("--n is required with inline generators")
    ideal = parse_ideal(ideal_text, n)
    sub = parse_ideal(sub_text, n) if sub_text is not None else zero_ideal(n)
    return FactorPair(ideal, sub)


def _field(label: str) -> FieldSpec:
    try:
        return FieldSpec.parse(label)
    except SqfdepthError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
def cli() -> None:
    """Exact depth and minimal Stanley depth for square-free factors I/J."""


@cli.command("depth")
@click.option("--n", "n_vars", type=int, default=None, help="Ambient variable count.")
@click.option("--I", "ideal_text", required=True, help="Generators of I, or @file.json.")
@click.option("--J", "sub_text", default=None, help="Generators of J (default 0).")
@click.option("--module", "role", type=click.Choice(["factor", "ideal", "quotient"]),
              default="factor", show_default=True)
@click.option("--field", "field_label", default="fp:32003", show_default=True)
@click.option("--force", is_flag=True, help="Override the n > 20 size guard.")
@click.option("--json", "as_json", is_flag=True)
def depth_cmd(n_vars, ideal_text, sub_text, role, field_label, force, as_json) -> int:
    """Depth and projective dimension by exact Koszul homology."""
    pair = _load_pair(n_vars, ideal_text, sub_text)
    field = _field(field_label)
    if role == "factor":
        module = ModulePredicate.for_factor(pair)
    else:
        if not pair.J.is_zero:
            raise click.UsageError(f"--module {role} does not take --J")
        module = (
            ModulePredicate.for_ideal(pair.I)
            if role == "ideal"
            else ModulePredicate.for_quotient(pair.I)
        )
    report = module_depth(module, field, force=force)
    if as_json:
        _echo_json(report.to_json())
    else:
        w = report.witness
        click.echo(
            f"depth {report.depth}  (pd {report.pd}, n {report.n}, "
            f"field {report.field})"
        )
        click.echo(
            f"witness: h_{w.i} has dimension {w.homology_dim} at "
            f"multidegree {{{', '.join(map(str, w.multidegree))}}}"
        )
    return 0


@cli.command("sdepth-min")
@click.option("--n", "n_vars", type=int, default=None)
@click.option("--I", "ideal_text", required=True)
@click.option("--J", "sub_text", default=None)
@click.option("--brute", is_flag=True, help="Also run the exhaustive oracle.")
@click.option("--json", "as_json", is_flag=True)
def sdepth_cmd(n_vars, ideal_text, sub_text, brute, as_json) -> int:
    """Decide whether the minimal Stanley depth equals the bottom degree."""
    pair = _load_pair(n_vars, ideal_text, sub_text)
    decision = sdepth_equals_indeg(pair)
    doc = decision.to_json()
    if brute:
        doc["brute_sdepth"] = brute_force_sdepth(pair)
    if as_json:
        _echo_json(doc)
        return 0
    click.echo(
        f"sdepth I/J == d={decision.d}: {'yes' if decision.answer else 'no'}"
    )
    cert = decision.certificate
    if cert.complete:
        click.echo("complete matching:")
        for u, v in cert.pairs:
            click.echo(f"  {cert.graph.left[u]} -> {cert.graph.right[v]}")
    else:
        click.echo(
            "violator A: " + ", ".join(str(cert.graph.left[u]) for u in cert.violator)
        )
        click.echo(
            "Gamma(A):   " + ", ".join(str(cert.graph.right[v]) for v in cert.gamma)
        )
        assert decision.witness_ideal is not None
        click.echo(f"witness ideal: {format_ideal(decision.witness_ideal)}")
    if brute:
        click.echo(f"brute-force sdepth: {doc['brute_sdepth']}")
    return 0


@cli.command("rho")
@click.option("--n", "n_vars", type=int, default=None)
@click.option("--I", "ideal_text", required=True)
@click.option("--d", "degree", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def rho_cmd(n_vars, ideal_text, degree, as_json) -> int:
    """Count the degree-d square-free monomials of an ideal."""
    pair = _load_pair(n_vars, ideal_text, None)
    count = rho_count(pair.I, degree)
    if as_json:
        _echo_json({"d": degree, "rho": count})
    else:
        click.echo(str(count))
    return 0


@cli.command("check")
@click.option("--n", "n_vars", type=int, default=None)
@click.option("--I", "ideal_text", required=True)
@click.option("--J", "sub_text", default=None)
@click.option("--json", "as_json", is_flag=True)
def check_cmd(n_vars, ideal_text, sub_text, as_json) -> int:
    """Run every count criterion and quick certificate on a pair."""
    pair = _load_pair(n_vars, ideal_text, sub_text)
    normalized = normalize_pair(pair)
    reports = []
    if normalized.changed:
        reports.append({
            "rule": "normalize_pair",
            "applies": True,
            "data": {
                "I": format_ideal(normalized.pair.I),
                "J": format_ideal(normalized.pair.J),
                "dropped_from_I": [str(g) for g in normalized.dropped_i],
                "dropped_from_J": [str(g) for g in normalized.dropped_j],
            },
        })
    reports.append(check_theorem_main(normalized).to_json())
    reports.extend(r.to_json() for r in quick_certificates(normalized))
    if pair.J.is_zero:
        ideal = pair.I
        try:
            reports.append(check_corollary_str(ideal).to_json())
        except (NotEquigeneratedError, PrincipalIdealError) as exc:
            reports.append({"rule": "corollary_str", "applies": False,
                            "data": {"reason": str(exc)}})
        try:
            if ideal.n < 2:
                raise SqfdepthError("need at least two variables")
            reports.append(check_theorem_main1(ideal).to_json())
        except (NoLastVariableMultiplesError, SqfdepthError) as exc:
            reports.append({"rule": "theorem_main1", "applies": False,
                            "data": {"reason": str(exc)}})
    if as_json:
        _echo_json(reports)
        return 0
    for rep in reports:
        detail = " ".join(f"{k}={v}" for k, v in sorted(rep["data"].items()))
        click.echo(f"{rep['rule']:<15} applies={rep['applies']}  {detail}")
    return 0


@cli.command("witness")
@click.option("--n", "n_vars", type=int, default=None)
@click.option("--I", "ideal_text", required=True)
@click.option("--J", "sub_text", default=None)
@click.option("--field", "field_label", default="fp:32003", show_default=True)
@click.option("--json", "as_json", is_flag=True)
def witness_cmd(n_vars, ideal_text, sub_text, field_label, as_json) -> int:
    """Emit the verified Koszul cycle that pins the depth to d."""
    pair = _load_pair(n_vars, ideal_text, sub_text)
    field = _field(field_label)
    wit = koszul_witness(normalize_pair(pair), field)
    if as_json:
        _echo_json(wit.to_json())
        return 0
    terms = []
    for f, sig, y in zip(wit.generators, wit.complements, wit.coefficients):
        terms.append(f"({y})*{f}*e{{{','.join(map(str, sig))}}}")
    click.echo("z = " + " + ".join(terms))
    click.echo(
        f"cycle in homological degree {wit.homological_degree} over "
        f"{wit.field.label}; boundary checked, class nonzero"
    )
    return 0


@cli.command("scan")
@click.option("--rule", type=click.Choice(sorted(RULES)), required=True)
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--n", "n_vars", type=int, default=6, show_default=True)
@click.option("--d", "degree", type=int, default=2, show_default=True)
@click.option("--kmin", type=int, default=2, show_default=True)
@click.option("--kmax", type=int, default=5, show_default=True)
@click.option("--density", type=float, default=0.5, show_default=True)
@click.option("--force-rs", is_flag=True, help="Bias instances so r > s holds.")
@click.option("--field", "field_label", default="fp:32003", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="Write a JSONL report (and figures) here.")
@click.option("--figures/--no-figures", default=True, show_default=True)
@click.option("--force", is_flag=True, help="Override the scan size guard.")
@click.option("--json", "as_json", is_flag=True)
def scan_cmd(rule, trials, seed, n_vars, degree, kmin, kmax, density,
             force_rs, field_label, out_path, figures, force, as_json) -> int:
    """Evaluate one rule over seeded random instances."""
    params = InstanceParams(
        n=n_vars, d=degree, k_min=kmin, k_max=kmax, density=density,
        seed=seed, count=trials, force_r_gt_s=force_rs,
    )
    field = _field(field_label)
    report = run_scan(rule, params, field, force=force)
    if out_path:
        path = write_report(report, out_path)
        click.echo(f"report: {path}", err=True)
        if figures:
            from .figures import render_scan_figures

            for fig_path in render_scan_figures(report, path):
                click.echo(f"figure: {fig_path}", err=True)
    summary = report.summary_json()
    if as_json:
        _echo_json(summary)
    else:
        click.echo(
            f"{rule}: {summary['count']} instances, "
            f"{summary['hypothesis_count']} with hypothesis, "
            f"{summary['violation_count']} violations"
        )
        for record in report.violations:
            click.echo(f"VIOLATION at index {record.index}: "
                       f"{json.dumps(record.instance, sort_keys=True)}")
    return 4 if report.violations else 0


@cli.command("examples")
@click.option("--list", "list_only", is_flag=True)
@click.option("--item", "items", multiple=True)
@click.option("--json", "as_json", is_flag=True)
def examples_cmd(list_only, items, as_json) -> int:
    """Verify the built-in regression table of known instances."""
    if list_only:
        for name in example_names():
            click.echo(name)
        return 0
    report = verify_examples(list(items) if items else None)
    if as_json:
        _echo_json(report.to_json())
    else:
        for result in report.results:
            mark = "PASS" if result.passed else "FAIL"
            click.echo(f"{mark}  {result.name}")
            if not result.passed:
                click.echo(f"      expected: {result.expected}")
                click.echo(f"      actual:   {result.actual}")
    return 0 if report.all_passed else 4


@cli.command("replay")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="JSONL report to replay.")
@click.option("--index", type=int, default=None,
              help="Single record index (default: all records).")
@click.option("--json", "as_json", is_flag=True)
def replay_cmd(in_path, index, as_json) -> int:
    """Re-evaluate report records from their embedded instances."""
    doc = read_report(in_path)
    field = _field(doc["header"].get("field", DEFAULT_FIELD.label))
    records = doc["records"]
    if index is not None:
        records = [r for r in records if r.get("index") == index]
        if not records:
            raise click.UsageError(f"no record with index {index}")
    any_violation = False
    any_mismatch = False
    outputs = []
    for record in records:
        fresh = replay_record(record, field)
        stored = {k: v for k, v in record.items() if k != "elapsed_ms"}
        redone = {k: v for k, v in fresh.to_json().items() if k != "elapsed_ms"}
        match = stored == redone
        any_mismatch |= not match
        any_violation |= fresh.violation
        outputs.append({
            "index": fresh.index,
            "violation": fresh.violation,
            "matches_stored": match,
        })
        if not as_json:
            state = "violation" if fresh.violation else "ok"
            drift = "" if match else "  RESULT DRIFTED FROM STORED RECORD"
            click.echo(f"index {fresh.index}: {state}{drift}")
    if as_json:
        _echo_json(outputs)
    return 4 if any_violation or any_mismatch else 0


def main(argv: list[str] | None = None) -> int:
    """Entry with exceptions mapped to documented exit codes."""
    try:
        result = cli.main(args=argv, prog_name="sqfdepth", standalone_mode=False)
        return result if isinstance(result, int) else 0
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        return 2
    except GuardExceededError as exc:
        click.echo(f"size guard: {exc}", err=True)
        return 3
    except NotApplicableError as exc:
        click.echo(f"not applicable: {exc}", err=True)
        return 1
    except SqfdepthError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
