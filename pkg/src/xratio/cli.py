"""Command line interface: ``xratio expand|energy|dual-check|scan|selftest``.

Exit codes: 0 success, 1 validation failure (bad input or a failed check),
2 a size cap was exceeded.
"""
from __future__ import annotations

import json
import logging
import sys
import time
from pathlib import Path

import click

from . import dual, energy as energy_mod
from .experiments import (
    IMAGE_CAPS,
    fit_exponent,
    records_to_csv,
    records_to_json,
    scan as run_scan,
)
from .expander import image
from .families import FamilySpec, SetFileError, read_set_file
from .kernels import HAVE_COMPILED

EXIT_OK, EXIT_INVALID, EXIT_CAP = 0, 1, 2
FIT_MODELS = {"pure": "pure_power", "powlog": "power_over_log"}


def _load(path: str):
    try:
        return read_set_file(path)
    except (SetFileError, ValueError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)


def _emit(doc) -> None:
    click.echo(json.dumps(doc, indent=2, default=str))


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool):
    """Exact cross-ratio expander experiments."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.option("--set-file", "set_file", required=True, type=click.Path(dir_okay=False))
@click.option("--function", "function", required=True, type=click.Choice(["f", "g", "h"]))
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON document instead of text.")
@click.option("--values", "show_values", is_flag=True, help="Include the distinct values.")
@click.option("--unsafe-cap", is_flag=True, help="Allow sizes above the default cap.")
@click.option("--workers", default=1, show_default=True, type=click.IntRange(1))
def expand(set_file, function, as_json, show_values, unsafe_cap, workers):
    """Size of f(A), g(A) or h(A) for the set in SET_FILE."""
    A = _load(set_file)
    if len(A) > IMAGE_CAPS[function] and not unsafe_cap:
        click.echo(f"error: |A| = {len(A)} exceeds the {function} cap {IMAGE_CAPS[function]}", err=True)
        sys.exit(EXIT_CAP)
    vs = image(function, A, values=show_values, workers=workers)
    doc = {
        "function": function,
        "n": len(A),
        "image_count": vs.count,
        "valid_tuples": vs.valid_tuples,
        "skipped": vs.skipped,
        "elapsed_ms": round(vs.elapsed_ms, 3),
    }
    if show_values:
        doc["values"] = sorted((str(v) if function != "h" else [str(v[0]), str(v[1])] for v in vs.values),
                               key=str)
    if as_json:
        _emit(doc)
    else:
        click.echo(f"|{function}(A)| = {vs.count}  (n={len(A)}, valid={vs.valid_tuples}, skipped={vs.skipped})")
        for v in doc.get("values", []):
            click.echo(f"  {v}")


@main.command()
@click.option("--order", required=True, type=click.Choice(["1", "2", "3"]))
@click.option("--method", default="direct", show_default=True, type=click.Choice(["direct", "dual"]))
@click.option("--set-file", "set_file", required=True, type=click.Path(dir_okay=False))
@click.option("--unsafe-cap", is_flag=True)
def energy(order, method, set_file, unsafe_cap):
    """Energy E1, E2 or E3 of the set, as a JSON record."""
    order = int(order)
    A = _load(set_file)
    big = 10**9
    try:
        if method == "direct":
            res = energy_mod.energy_direct_result(order, A, cap=big if unsafe_cap else None)
            tuples, images = res.tuple_count, res.image_count
        else:
            res = energy_mod.energy_dual_result(order, A, cap=big if unsafe_cap else energy_mod.DUAL_CAP)
            tuples, images = energy_mod.tuple_count_closed_form(order, A), None
    except energy_mod.CapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    lower = energy_mod.ceil_div(tuples**2, res.energy) if res.energy else 0
    _emit({
        "order": order,
        "method": method,
        "n": len(A),
        "energy": res.energy,
        "tuple_count": tuples,
        "image_count": images,
        "lower_bound": lower,
        "elapsed_ms": round(res.elapsed_ms, 3),
    })
    if images is not None and images < lower:
        sys.exit(EXIT_INVALID)


@main.command("dual-check")
@click.option("--set-file", "set_file", required=True, type=click.Path(dir_okay=False))
@click.option("--cap", default=dual.DEFAULT_LEMMA_CAP, show_default=True, type=click.IntRange(1))
@click.option("--unsafe-cap", is_flag=True)
def dual_check(set_file, cap, unsafe_cap):
    """Exhaustive planes-lemma report for the set, as JSON."""
    A = _load(set_file)
    try:
        report = dual.verify_planes_lemma(A, cap=10**9 if unsafe_cap else cap)
    except dual.CapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    _emit(report)
    if not report["passed"]:
        sys.exit(EXIT_INVALID)


def _parse_sizes(ctx, param, value: str):
    try:
        sizes = [int(s) for s in value.split(",") if s.strip()]
    except ValueError:
        raise click.BadParameter("sizes must be comma-separated integers")
    if not sizes or min(sizes) < 1:
        raise click.BadParameter("sizes must be positive")
    return sizes


@main.command()
@click.option("--family", required=True, type=click.Choice(["ap", "gp", "random", "squares"]))
@click.option("--sizes", required=True, callback=_parse_sizes, help="Comma-separated set sizes.")
@click.option("--function", "function", required=True, type=click.Choice(["f", "g", "h"]))
@click.option("--fit", "fit", type=click.Choice(sorted(FIT_MODELS)), default=None)
@click.option("--csv", "csv_out", type=click.Path(dir_okay=False), default=None,
              help="Write records as CSV ('-' for stdout).")
@click.option("--json-out", type=click.Path(dir_okay=False), default=None, help="Write records as JSON.")
@click.option("--start", default="1", show_default=True)
@click.option("--step", default="1", show_default=True)
@click.option("--ratio", default="2", show_default=True)
@click.option("--bound", default=10**6, show_default=True, type=click.IntRange(1))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--no-timing", is_flag=True, help="Blank the elapsed_ms column for byte-stable output.")
@click.option("--unsafe-cap", is_flag=True)
@click.option("--workers", default=1, show_default=True, type=click.IntRange(1))
def scan(family, sizes, function, fit, csv_out, json_out, start, step, ratio, bound, seed,
         no_timing, unsafe_cap, workers):
    """Image sizes over a family of sets, with an optional exponent fit."""
    try:
        spec = FamilySpec(family, sizes[0], start=_frac(start), step=_frac(step), ratio=_frac(ratio),
                          bound=bound, seed=seed)
        records, rejected = run_scan(function, spec, sizes, unsafe_cap=unsafe_cap, workers=workers)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    timing = not no_timing
    if csv_out == "-":
        click.echo(records_to_csv(records, timing), nl=False)
    elif csv_out:
        Path(csv_out).write_text(records_to_csv(records, timing))
    if json_out:
        Path(json_out).write_text(records_to_json(records, timing) + "\n")
    if fit:
        try:
            doc = fit_exponent(records, FIT_MODELS[fit]).to_dict()
        except ValueError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID)
        doc.update({"function": function, "family": spec.label})
        _emit(doc)
    elif not csv_out or csv_out != "-":
        for r in records:
            click.echo(f"{r.family} n={r.n} |{function}(A)|={r.image_count}")
    for n in rejected:
        click.echo(f"error: size {n} exceeds the {function} cap {IMAGE_CAPS[function]}", err=True)
    if rejected:
        sys.exit(EXIT_CAP)


def _frac(text: str):
    from .exact import parse_value

    return parse_value(text)


@main.command()
@click.option("--quick", is_flag=True, help="Smaller sets, a few seconds.")
def selftest(quick):
    """Cross-method energy equality and the planes-lemma report."""
    from .selfcheck import run_selftest

    t0 = time.perf_counter()
    results = run_selftest(quick=quick)
    ok = True
    for name, passed, detail in results:
        ok &= passed
        click.echo(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
    click.echo(f"compiled kernels: {'yes' if HAVE_COMPILED else 'no'}; "
               f"{time.perf_counter() - t0:.1f}s")
    sys.exit(EXIT_OK if ok else EXIT_INVALID)


if __name__ == "__main__":  # pragma: no cover
    main()
