"""Command-line front end.

Subcommands: gen (write constructions as hypergraph files), spectral
(tensor spectral radius of a file), check (Fano containment and
2-colorability verdicts), verify (numeric verification harness).

Exit codes: 0 ok, 1 negative verdict from check, 2 usage error, 3 I/O
or input-data error, 4 spectral iteration did not converge, 5 at least
one verification record failed.
"""

import json
from dataclasses import dataclass
from pathlib import Path

import click

from .containment import contains_subgraph, two_coloring
from .errors import ArgumentRangeError, HyperqError
from .hypergraph import (
    Hypergraph,
    build_bn,
    build_complete,
    build_expansion,
    build_fano,
    build_two_part_complete,
    parse,
    serialize,
)
from .reporting import FORMATS, Record, render
from .spectral import ADJACENCY, SIGNLESS_LAPLACIAN, spectral_radius
from .turan import (
    CriterionParams,
    bn_q_bounds,
    bn_scan_q,
    check_condition1,
    check_condition2,
    check_deletion_lemma,
    fano_turan_number,
    scan_splits,
    verify_extremality,
)

_OPERATORS = {
    "q": SIGNLESS_LAPLACIAN,
    "signless_laplacian": SIGNLESS_LAPLACIAN,
    "signless-laplacian": SIGNLESS_LAPLACIAN,
    "a": ADJACENCY,
    "adjacency": ADJACENCY,
}


@dataclass(frozen=True)
class RunConfig:
    """Validated bundle of the options shared by the subcommands."""

    subcommand: str
    input_path: str | None = None
    output_path: str | None = None
    tol: float = 1e-10
    max_iter: int = 100_000
    seed: int = 0
    format: str = "text"

    def __post_init__(self):
        if self.tol <= 0:
            raise ArgumentRangeError(f"--tol must be > 0, got {self.tol}")
        if self.max_iter < 1:
            raise ArgumentRangeError(f"--max-iter must be >= 1, got {self.max_iter}")
        if self.format not in FORMATS:
            raise ArgumentRangeError(f"--format must be one of {FORMATS}, got {self.format}")


class _Fail(click.ClickException):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _config(subcommand: str, **kw) -> RunConfig:
    try:
        return RunConfig(subcommand=subcommand, **kw)
    except ArgumentRangeError as exc:
        raise click.UsageError(str(exc)) from None


def _read_hypergraph(path: str) -> Hypergraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Fail(f"cannot read {path}: {exc}", 3) from None
    try:
        return parse(text)
    except HyperqError as exc:
        raise _Fail(f"{path}: {exc}", 3) from None


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise _Fail(f"cannot write {out}: {exc}", 3) from None


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise click.UsageError(f"range must be N or LO:HI, got {text!r}") from None
    if lo > hi:
        raise click.UsageError(f"empty range {text!r}")
    return lo, hi


@click.group()
@click.version_option(package_name="hyperq")
def main():
    """Spectral and extremal toolkit for uniform hypergraphs."""


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


@main.group()
def gen():
    """Write one of the built-in constructions as a hypergraph file."""


def _emit(hg: Hypergraph, out: str | None) -> None:
    summary = f"r={hg.r} n={hg.n} m={hg.m}"
    if out is None:
        click.echo(serialize(hg), nl=False)
        click.echo(summary, err=True)
    else:
        _write_text(serialize(hg), out)
        click.echo(f"{summary} -> {out}")


_OUT_OPT = click.option("--out", metavar="FILE", default=None, help="Write here instead of stdout.")


@gen.command("fano")
@_OUT_OPT
def gen_fano(out):
    """The 7-point projective plane as a 3-graph."""
    _emit(build_fano(), out)


@gen.command("bn")
@click.argument("n", type=int)
@_OUT_OPT
def gen_bn(n, out):
    """Balanced complete two-part 3-graph on N vertices."""
    try:
        hg, _ = build_bn(n)
    except ArgumentRangeError as exc:
        raise click.UsageError(str(exc)) from None
    _emit(hg, out)


@gen.command("two-part")
@click.argument("a", type=int)
@click.argument("b", type=int)
@_OUT_OPT
def gen_two_part(a, b, out):
    """Complete two-part 3-graph with part sizes A and B."""
    try:
        hg, _ = build_two_part_complete(a, b)
    except ArgumentRangeError as exc:
        raise click.UsageError(str(exc)) from None
    _emit(hg, out)


@gen.command("complete")
@click.argument("n", type=int)
@click.argument("r", type=int)
@_OUT_OPT
def gen_complete(n, r, out):
    """Complete R-graph on N vertices."""
    try:
        hg = build_complete(n, r)
    except ArgumentRangeError as exc:
        raise click.UsageError(str(exc)) from None
    _emit(hg, out)


@gen.command("expansion")
@click.argument("base_file", metavar="FILE")
@click.argument("r", type=int)
@_OUT_OPT
def gen_expansion(base_file, r, out):
    """Expand the 2-graph in FILE to an R-graph with fresh vertices."""
    base = _read_hypergraph(base_file)
    if base.r != 2:
        raise _Fail(f"{base_file}: expansion needs a 2-graph, got r={base.r}", 3)
    try:
        hg = build_expansion(base.edges, base.n, r)
    except ArgumentRangeError as exc:
        raise click.UsageError(str(exc)) from None
    _emit(hg, out)


# ---------------------------------------------------------------------------
# spectral
# ---------------------------------------------------------------------------


@main.command("spectral")
@click.argument("input_path", metavar="FILE")
@click.option("--operator", "-o", default="q", show_default=True, help="q|signless_laplacian or a|adjacency.")
@click.option("--tol", default=1e-10, show_default=True)
@click.option("--max-iter", default=100_000, show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@click.option("--eigenvector", "with_vector", is_flag=True, help="Include the eigenvector in the report.")
@_OUT_OPT
@click.pass_context
def cmd_spectral(ctx, input_path, operator, tol, max_iter, fmt, with_vector, out):
    """Tensor spectral radius of the hypergraph in FILE."""
    if operator not in _OPERATORS:
        raise click.UsageError(f"unknown operator {operator!r}; use one of {sorted(_OPERATORS)}")
    cfg = _config("spectral", input_path=input_path, output_path=out, tol=tol, max_iter=max_iter, format=fmt)
    hg = _read_hypergraph(cfg.input_path)
    res = spectral_radius(hg, _OPERATORS[operator], tol=cfg.tol, max_iter=cfg.max_iter)

    fields = {
        "operator": _OPERATORS[operator],
        "rho": res.rho,
        "lower": res.lower,
        "upper": res.upper,
        "iterations": res.iterations,
        "residual": res.residual,
        "converged": res.converged,
    }
    if with_vector:
        fields["eigenvector"] = [float(v) for v in res.eigenvector]
    if cfg.format == "json":
        text = json.dumps(fields, indent=2) + "\n"
    elif cfg.format == "csv":
        keys = [k for k in fields if k != "eigenvector"]
        row = [repr(fields[k]) if isinstance(fields[k], float) else str(fields[k]).lower() if isinstance(fields[k], bool) else str(fields[k]) for k in keys]
        text = ",".join(keys) + "\n" + ",".join(row) + "\n"
    else:
        lines = []
        for k, v in fields.items():
            if k == "eigenvector":
                lines.append("eigenvector = " + " ".join(repr(float(t)) for t in v))
            elif isinstance(v, bool):
                lines.append(f"{k} = {'true' if v else 'false'}")
            elif isinstance(v, float):
                lines.append(f"{k} = {v!r}")
            else:
                lines.append(f"{k} = {v}")
        text = "\n".join(lines) + "\n"
    _write_text(text, cfg.output_path)
    if not res.converged:
        ctx.exit(4)


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


@main.command("check")
@click.argument("what", type=click.Choice(["fano", "two-color"]))
@click.argument("input_path", metavar="FILE")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@_OUT_OPT
@click.pass_context
def cmd_check(ctx, what, input_path, fmt, out):
    """Fano-freeness or 2-colorability of the hypergraph in FILE.

    Exit 0 when the input is fano-free / 2-colorable, 1 otherwise.
    """
    cfg = _config("check", input_path=input_path, output_path=out, format=fmt)
    hg = _read_hypergraph(cfg.input_path)
    if what == "fano":
        if hg.r != 3:
            raise _Fail(f"{input_path}: fano check needs a 3-graph, got r={hg.r}", 3)
        embedding = contains_subgraph(hg, build_fano())
        ok = embedding is None
        verdict = "fano-free" if ok else "contains"
        witness = None if ok else list(embedding.mapping)
        witness_name = "embedding"
    else:
        coloring = two_coloring(hg)
        ok = coloring is not None
        verdict = "2-colorable" if ok else "not 2-colorable"
        witness = list(coloring.assignment) if ok else None
        witness_name = "coloring"

    if cfg.format == "json":
        text = json.dumps({"check": what, "verdict": verdict, "ok": ok, witness_name: witness}, indent=2) + "\n"
    elif cfg.format == "csv":
        cell = "" if witness is None else " ".join(map(str, witness))
        text = f"check,verdict,{witness_name}\n{what},{verdict},{cell}\n"
    else:
        text = verdict + "\n"
        if witness is not None:
            text += f"{witness_name}: " + " ".join(map(str, witness)) + "\n"
    _write_text(text, cfg.output_path)
    ctx.exit(0 if ok else 1)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@main.command("verify")
@click.argument("what", type=click.Choice(["bounds", "splits", "criterion", "deletion", "extremal"]))
@click.argument("n_range", metavar="RANGE")
@click.option("--sigma", default=0.05, show_default=True, help="Slack budget for the criterion conditions.")
@click.option("--samples", default=20, show_default=True, help="Sample count per size for extremal.")
@click.option("--seed", default=0, show_default=True)
@click.option("--tol", default=1e-10, show_default=True)
@click.option("--max-iter", default=100_000, show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
@_OUT_OPT
@click.pass_context
def cmd_verify(ctx, what, n_range, sigma, samples, seed, tol, max_iter, fmt, out):
    """Run one family of numeric checks over RANGE (N or LO:HI).

    Emits one record per check and size; exit 5 if any record fails.
    """
    lo, hi = _parse_range(n_range)
    cfg = _config("verify", output_path=out, tol=tol, max_iter=max_iter, seed=seed, format=fmt)
    records: list[Record] = []
    try:
        if what == "bounds":
            for n in range(lo, hi + 1):
                low, up = bn_q_bounds(n)
                hg, _ = build_bn(n)
                rho = spectral_radius(hg, tol=cfg.tol, max_iter=cfg.max_iter).rho
                ok = low - 1e-6 <= rho <= up + 1e-6
                records.append(Record("bounds", n, "operator=signless_laplacian", rho, f"{low!r}..{up!r}", ok))
        elif what == "splits":
            for n in range(lo, hi + 1):
                profiles, best_a = scan_splits(n)
                best_q = max(p.q_value for p in profiles)
                ok = abs(best_a - n / 2.0) <= 0.5
                records.append(Record("splits", n, f"a=1..{n - 1}", best_q, f"best_a={best_a}", ok))
        elif what == "criterion":
            params = CriterionParams(0.75, 3, sigma, (lo, hi))
            inputs = f"pi=0.75 r=3 sigma={sigma!r}"
            for rec in check_condition1(params, fano_turan_number):
                records.append(Record("condition1", rec.n, inputs, rec.slack, sigma * rec.n**2, rec.passed))
            for rec in check_condition2(params, bn_scan_q, fano_turan_number):
                records.append(Record("condition2", rec.n, inputs, rec.slack, sigma * rec.n, rec.passed))
        elif what == "deletion":
            for n in range(lo, hi + 1):
                hg, _ = build_bn(n)
                chk = check_deletion_lemma(hg, tol=cfg.tol)
                records.append(Record("deletion", n, f"B_{n} w={chk.w}", chk.lhs, chk.rhs, chk.passed))
        else:
            for n in range(lo, hi + 1):
                rep = verify_extremality(n, samples=samples, rng_seed=cfg.seed)
                records.append(
                    Record("extremal", n, f"samples={samples} seed={cfg.seed}", rep.max_q, rep.q_reference, rep.passed)
                )
    except ArgumentRangeError as exc:
        raise click.UsageError(str(exc)) from None
    _write_text(render(records, cfg.format), cfg.output_path)
    if not all(rec.passed for rec in records):
        ctx.exit(5)


if __name__ == "__main__":
    main()
