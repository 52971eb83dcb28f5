"""
molr/cli.py
Purpose: Main CLI entry point for molr. Enumeration, verification against
         the embedded tables, record-file tools (classify, canon,
         paratopism, extend), Galois MOLS and incidence geometry, all with
         --output json envelopes and --input-json parameter merging.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import click
from rich import box
from rich.console import Console
from rich.table import Table

from .cli_utils import (
    EXIT_BUDGET,
    EXIT_FAILURE,
    EXIT_MISMATCH,
    EXIT_SUCCESS,
    EXIT_USAGE,
    budget_option,
    grids_as_lists,
    input_json_option,
    json_error,
    key_hex,
    merge_json_input,
    output_option,
    render_output,
    workers_option,
)
from .config import Config, EnumerationSettings, effective_budget, effective_workers
from .enumerate import (
    FILTER_NONE,
    FILTERS,
    POPULATIONS,
    ExtensionFrontier,
    LevelSlice,
    enumerate_cell,
    extend_frontier,
    stepwise_flags,
    summarize,
)
from .errors import BudgetExceeded, DimensionMismatch, MolrError
from .expected import (
    STEPWISE_CENSUS_8,
    STEPWISE_TRANSITIVE_9,
    expected_table,
    table_keys,
)
from .fixtures import FIXTURES, load_fixture
from .galois import IRREDUCIBLE, field, galois_mols, stepwise_truncation
from .geometry import check_plane, complete_to_projective, partial_net, sandler_delete
from .logging import get_logger, setup_logging
from .records import MolrRecord, format_incidence, read_records, serialize_records, write_records
from .status import EnumerationStatus, ProgressReporter
from .symmetry import autotopism_class, canonical_form, paratopism_key
from .verify import SUITES, run_suite

logger = get_logger('cli')

ACTIONS = ("net", "complete", "sandler")


class MolrGroup(click.Group):
    """click.Group that exits with EXIT_USAGE on usage errors instead of 2."""

    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            return super().main(*args, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.exceptions.Abort:
            sys.stderr.write("Aborted!\n")
            sys.exit(EXIT_FAILURE)


@click.group(cls=MolrGroup)
@click.version_option(version=__import__("molr").__version__)
@click.option(
    "--config",
    "-c",
    type=click.Path(exists=True),
    help="Path to configuration file",
)
@click.pass_context
def cli(ctx, config):
    """molr - enumerate and classify mutually orthogonal Latin rectangles."""
    ctx.ensure_object(dict)
    try:
        ctx.obj["config"] = Config(config_path=config)
    except ValueError as e:
        json_error("molr", str(e), EXIT_USAGE, "text")
    ctx.obj["console"] = Console()
    setup_logging(ctx.obj["config"])


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _settings(config: Config, workers: Optional[int], budget: Optional[int],
              level_dir: Optional[str] = None) -> EnumerationSettings:
    return EnumerationSettings(
        budget=int(budget) if budget else effective_budget(config),
        workers=int(workers) if workers else effective_workers(config),
        chunk_size=config.enumeration.chunk_size,
        level_dir=level_dir or config.enumeration.level_dir,
    )


def _report_console(ctx, path: Optional[str]) -> Console:
    """Summaries go to stderr when records are being written to stdout."""
    if path == "-":
        return Console(stderr=True)
    return ctx.obj["console"]


def _load(command: str, path: str, output: str) -> List[MolrRecord]:
    try:
        records = read_records(path)
    except MolrError as e:
        json_error(command, str(e), EXIT_USAGE, output)
    except OSError as e:
        json_error(command, f"cannot read {path}: {e}", EXIT_USAGE, output)
    if not records:
        json_error(command, f"no records in {path}", EXIT_USAGE, output)
    return records


def _emit(records: List[MolrRecord], path: Optional[str], output: str, data: Dict) -> None:
    """Write records to path ('-' is stdout; JSON mode embeds them instead)."""
    if path is None:
        return
    if path == "-":
        if output == "json":
            data["records"] = serialize_records(records)
        else:
            write_records("-", records)
        return
    write_records(path, records)
    logger.info(f"Wrote {len(records)} records to {path}")
    data["file"] = path


def _fail(command: str, error: Exception, output: str) -> None:
    code = EXIT_BUDGET if isinstance(error, BudgetExceeded) else EXIT_USAGE
    json_error(command, str(error), code, output)


def _slice_dict(level: LevelSlice) -> Dict:
    return {
        "k": level.k,
        "isotopism": level.total(),
        "paratopism": level.paratopism,
        "regularity": list(level.regularity()),
        "histograms": level.histograms,
    }


def _histogram_table(title: str, level: LevelSlice) -> Table:
    table = Table(title=title, show_header=True, header_style="bold magenta", box=box.ROUNDED)
    table.add_column("|Aut|", justify="right", style="cyan")
    for population in POPULATIONS:
        table.add_column(population.replace("_", " "), justify="right")
    orders = sorted(level.histograms.get("all", {}))
    for order in orders:
        table.add_row(str(order), *(
            str(level.histograms.get(p, {}).get(order, "")) for p in POPULATIONS
        ))
    table.add_row("total", *(str(level.total(p)) for p in POPULATIONS), style="bold")
    return table


def _record_rows(records: List[MolrRecord]) -> List[Dict]:
    return [
        {
            "index": i,
            "n": r.molr.n,
            "k": r.molr.k,
            "t": r.molr.t,
            "aut": r.aut,
            "flags": r.flags.code() if r.flags is not None else None,
        }
        for i, r in enumerate(records, start=1)
    ]


def _records_table(title: str, rows: List[Dict], extra: Tuple[str, ...] = ()) -> Table:
    table = Table(title=title, show_header=True, header_style="bold magenta", box=box.ROUNDED)
    table.add_column("#", justify="right", style="dim")
    table.add_column("Shape", style="cyan")
    table.add_column("t", justify="right")
    table.add_column("|Aut|", justify="right", style="green")
    table.add_column("Flags")
    for column in extra:
        table.add_column(column)
    for row in rows:
        table.add_row(
            str(row["index"]),
            f"{row['k']}x{row['n']}",
            str(row["t"]),
            "" if row["aut"] is None else str(row["aut"]),
            row["flags"] or "",
            *(str(row.get(column.lower(), "")) for column in extra),
        )
    return table


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

@cli.command("enumerate")
@click.option("-n", "n", type=click.IntRange(min=2), required=True, help="Number of columns and symbols")
@click.option("-t", "t", type=click.IntRange(min=1), required=True, help="Number of rectangles")
@click.option("-k", "k", type=click.IntRange(min=1), required=True, help="Number of rows")
@click.option("--filter", "filter_name", type=click.Choice(FILTERS), default=FILTER_NONE,
              show_default=True, help="Keep only stepwise homogeneous/transitive classes at every level")
@click.option("--file", "-f", "path", default=None, metavar="PATH",
              help="Record file for the class representatives ('-' for stdout). "
                   "Default: molr_n<n>_t<t>_k<k>.txt in the configured output directory.")
@click.option("--level-dir", default=None, type=click.Path(file_okay=False),
              help="Also write every intermediate level to this directory")
@click.option("--paratopism/--no-paratopism", default=True, show_default=True,
              help="Count paratopism classes as well")
@budget_option
@workers_option
@output_option
@input_json_option
@click.pass_context
def enumerate_cmd(ctx, n, t, k, filter_name, path, level_dir, paratopism, budget, workers,
                  output, input_json):
    """Enumerate k×n t-MOLR up to isotopism."""
    merge_json_input(ctx, input_json)
    n = ctx.params.get("n", n)
    t = ctx.params.get("t", t)
    k = ctx.params.get("k", k)
    filter_name = ctx.params.get("filter_name", filter_name)
    path = ctx.params.get("path", path)
    level_dir = ctx.params.get("level_dir", level_dir)
    paratopism = ctx.params.get("paratopism", paratopism)
    budget = ctx.params.get("budget", budget)
    workers = ctx.params.get("workers", workers)

    config: Config = ctx.obj["config"]
    if k > n:
        json_error("enumerate", f"k={k} exceeds n={n}", EXIT_USAGE, output)
    if filter_name not in FILTERS:
        json_error("enumerate", f"unknown filter {filter_name!r}", EXIT_USAGE, output)
    if path is None:
        path = str(Path(config.output.directory).expanduser() / f"molr_n{n}_t{t}_k{k}.txt")
    settings = _settings(config, workers, budget, level_dir)
    console = _report_console(ctx, path)
    status = EnumerationStatus()

    try:
        if output == "json":
            level, frontier = enumerate_cell(n, t, k, filter_name, settings, status,
                                             paratopism=paratopism)
        else:
            with ProgressReporter(status, console) as progress:
                level, frontier = enumerate_cell(n, t, k, filter_name, settings, status,
                                                 progress.refresh, paratopism)
    except BudgetExceeded as e:
        done = status.snapshot()["level_counts"]
        data = {"level": e.level, "classes": e.classes, "completed_levels": done}
        render_output(data, output, "enumerate", success=False, errors=[str(e)])
        if output != "json":
            sys.stderr.write(f"Error: {e}\n")
            for lvl, count in sorted(done.items()):
                sys.stderr.write(f"  k={lvl}: {count} classes\n")
        sys.exit(EXIT_BUDGET)
    except MolrError as e:
        _fail("enumerate", e, output)

    records = [MolrRecord(r.representative, r.aut_order, r.flags) for r in frontier.classes]
    data = {"n": n, "t": t, "k": k, "filter": filter_name, "counts": _slice_dict(level)}
    _emit(records, path, output, data)
    render_output(data, output, "enumerate")

    if output != "json":
        console.print(
            f"[bold]{k}x{n} {t}-MOLR[/bold] ({filter_name}): "
            f"[green]{level.total()}[/green] isotopism classes"
            + ("" if level.paratopism is None else f", [green]{level.paratopism}[/green] paratopism classes")
        )
        if level.total():
            console.print(_histogram_table("Autotopism group orders", level))
        if path != "-":
            console.print(f"[dim]Wrote {len(records)} records to {path}[/dim]")


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@cli.command()
@click.argument("suite", type=click.Choice(SUITES))
@workers_option
@output_option
@input_json_option
@click.pass_context
def verify(ctx, suite, workers, output, input_json):
    """Recompute a suite and diff it against the embedded tables."""
    merge_json_input(ctx, input_json)
    suite = ctx.params.get("suite", suite)
    workers = ctx.params.get("workers", workers)
    if suite not in SUITES:
        json_error("verify", f"unknown suite {suite!r}", EXIT_USAGE, output)

    config: Config = ctx.obj["config"]
    console: Console = ctx.obj["console"]
    settings = _settings(config, workers, None)
    status = EnumerationStatus()

    try:
        if output == "json":
            result = run_suite(suite, settings, status)
        else:
            with ProgressReporter(status, console) as progress:
                result = run_suite(suite, settings, status, progress.refresh)
    except MolrError as e:
        _fail("verify", e, output)

    data = {
        "suite": suite,
        "checked": result.checked,
        "elapsed_seconds": round(result.elapsed, 3),
        "mismatches": [m.as_dict() for m in result.mismatches],
    }
    errors = [f"{m.cell}: expected {m.expected}, got {m.got}" for m in result.mismatches]
    render_output(data, output, "verify", success=result.ok, errors=errors)

    if output != "json":
        if result.ok:
            console.print(
                f"[green]✓ {suite}: {result.checked} checks match[/green] "
                f"[dim]({result.elapsed:.1f}s)[/dim]"
            )
        else:
            table = Table(title=f"{suite}: mismatches", show_header=True,
                          header_style="bold red", box=box.ROUNDED)
            table.add_column("Cell", style="cyan")
            table.add_column("Expected")
            table.add_column("Got")
            for m in result.mismatches:
                table.add_row(m.cell, str(m.expected), str(m.got))
            console.print(table)
            console.print(f"[red]✗ {len(result.mismatches)} of {result.checked} checks differ[/red]")
    sys.exit(EXIT_SUCCESS if result.ok else EXIT_MISMATCH)


# ---------------------------------------------------------------------------
# classify / canon / paratopism
# ---------------------------------------------------------------------------

@cli.command()
@click.argument("path", metavar="FILE")
@click.option("--file", "-f", "out_path", default="-", show_default=True, metavar="PATH",
              help="Annotated record file ('-' for stdout)")
@click.option("--stepwise/--no-stepwise", default=True, show_default=True,
              help="Also decide stepwise homogeneity and transitivity")
@output_option
@input_json_option
@click.pass_context
def classify(ctx, path, out_path, stepwise, output, input_json):
    """Validate records and annotate them with |Aut| and regularity flags."""
    merge_json_input(ctx, input_json)
    path = ctx.params.get("path", path)
    out_path = ctx.params.get("out_path", out_path)
    stepwise = ctx.params.get("stepwise", stepwise)
    records = _load("classify", path, output)

    annotated = []
    disagreements = []
    for i, record in enumerate(records, start=1):
        rec = canonical_form(record.molr)
        flags = rec.flags
        if stepwise:
            sh, st = stepwise_flags(record.molr)
            flags = rec.with_flags(stepwise_homogeneous=sh, stepwise_transitive=st).flags
        if record.aut is not None and record.aut != rec.aut_order:
            disagreements.append(f"record {i}: header aut={record.aut}, computed {rec.aut_order}")
        if stepwise and record.flags is not None and record.flags != flags:
            disagreements.append(
                f"record {i}: header flags={record.flags.code()}, computed {flags.code()}"
            )
        annotated.append(MolrRecord(record.molr, rec.aut_order, flags))

    rows = _record_rows(annotated)
    data = {"records_checked": len(annotated), "classes": rows}
    _emit(annotated, out_path, output, data)
    render_output(data, output, "classify", success=not disagreements, errors=disagreements)

    if output != "json":
        console = _report_console(ctx, out_path)
        console.print(_records_table(f"{path}: {len(annotated)} valid MOLR", rows))
        for line in disagreements:
            console.print(f"[yellow]{line}[/yellow]")
    if disagreements:
        sys.exit(EXIT_MISMATCH)


@cli.command()
@click.argument("path", metavar="FILE")
@click.option("--file", "-f", "out_path", default="-", show_default=True, metavar="PATH",
              help="Record file of canonical representatives ('-' for stdout)")
@output_option
@input_json_option
@click.pass_context
def canon(ctx, path, out_path, output, input_json):
    """Canonical representatives and autotopism group orders."""
    merge_json_input(ctx, input_json)
    path = ctx.params.get("path", path)
    out_path = ctx.params.get("out_path", out_path)
    records = _load("canon", path, output)

    out = []
    rows = []
    for i, record in enumerate(records, start=1):
        rec = canonical_form(record.molr)
        out.append(MolrRecord(rec.representative, rec.aut_order, rec.flags))
        rows.append({
            "index": i,
            "n": rec.n,
            "k": rec.k,
            "t": rec.t,
            "aut": rec.aut_order,
            "flags": rec.flags.code(),
            "key": key_hex(rec.canonical_key),
            "orbits": [list(o) for o in rec.rect_orbits],
            "generators": len(rec.aut_generators),
        })
    data = {"classes": rows}
    _emit(out, out_path, output, data)
    render_output(data, output, "canon")

    if output != "json":
        console = _report_console(ctx, out_path)
        for row in rows:
            row["key"] = row["key"][:16] + "…"
            row["orbits"] = " ".join("{" + ",".join(map(str, o)) + "}" for o in row["orbits"])
        console.print(_records_table(f"{path}: canonical forms", rows, ("Orbits", "Key")))


@cli.command()
@click.argument("path", metavar="FILE")
@click.option("--file", "-f", "out_path", default="-", show_default=True, metavar="PATH",
              help="One record per paratopism class ('-' for stdout)")
@output_option
@input_json_option
@click.pass_context
def paratopism(ctx, path, out_path, output, input_json):
    """Merge records that are paratopic."""
    merge_json_input(ctx, input_json)
    path = ctx.params.get("path", path)
    out_path = ctx.params.get("out_path", out_path)
    records = _load("paratopism", path, output)

    classes: Dict[bytes, List[int]] = {}
    first: Dict[bytes, MolrRecord] = {}
    for i, record in enumerate(records, start=1):
        key = paratopism_key(record.molr)
        classes.setdefault(key, []).append(i)
        if key not in first:
            rec = canonical_form(record.molr)
            first[key] = MolrRecord(rec.representative, rec.aut_order, rec.flags)
    keys = sorted(classes)
    merged = [first[key] for key in keys]
    data = {
        "records": len(records),
        "paratopism_classes": len(keys),
        "members": [classes[key] for key in keys],
    }
    _emit(merged, out_path, output, data)
    render_output(data, output, "paratopism")

    if output != "json":
        console = _report_console(ctx, out_path)
        table = Table(title=f"{path}: {len(keys)} paratopism classes", show_header=True,
                      header_style="bold magenta", box=box.ROUNDED)
        table.add_column("Class", justify="right", style="cyan")
        table.add_column("Records")
        for c, key in enumerate(keys, start=1):
            table.add_row(str(c), ", ".join(map(str, classes[key])))
        console.print(table)


# ---------------------------------------------------------------------------
# extend
# ---------------------------------------------------------------------------

@cli.command()
@click.argument("path", metavar="FILE")
@click.option("--filter", "filter_name", type=click.Choice(FILTERS), default=FILTER_NONE,
              show_default=True, help="Drop children without this stepwise flag")
@click.option("--file", "-f", "out_path", default="-", show_default=True, metavar="PATH",
              help="Record file for the next level ('-' for stdout)")
@budget_option
@workers_option
@output_option
@input_json_option
@click.pass_context
def extend(ctx, path, filter_name, out_path, budget, workers, output, input_json):
    """Add one row to every rectangle of the classes in FILE."""
    merge_json_input(ctx, input_json)
    path = ctx.params.get("path", path)
    filter_name = ctx.params.get("filter_name", filter_name)
    out_path = ctx.params.get("out_path", out_path)
    budget = ctx.params.get("budget", budget)
    workers = ctx.params.get("workers", workers)
    records = _load("extend", path, output)

    shapes = {(r.molr.n, r.molr.k, r.molr.t) for r in records}
    if len(shapes) != 1:
        _fail("extend", DimensionMismatch(f"records have several shapes: {sorted(shapes)}"), output)
    n, k, t = shapes.pop()
    if k >= n:
        json_error("extend", f"{k}x{n} rectangles cannot be extended", EXIT_USAGE, output)

    parents = {}
    for record in records:
        rec = canonical_form(record.molr)
        if record.flags is not None:
            sh, st = record.flags.stepwise_homogeneous, record.flags.stepwise_transitive
        else:
            sh, st = stepwise_flags(record.molr)
        rec = rec.with_flags(
            stepwise_homogeneous=rec.flags.homogeneous and sh,
            stepwise_transitive=rec.flags.transitive and st,
        )
        parents.setdefault(rec.canonical_key, rec)
    frontier = ExtensionFrontier(n, k, t, tuple(parents[key] for key in sorted(parents)))

    config: Config = ctx.obj["config"]
    settings = _settings(config, workers, budget)
    try:
        child = extend_frontier(frontier, filter_name, settings)
    except MolrError as e:
        _fail("extend", e, output)
    level = summarize(child, paratopism=False, settings=settings)

    out = [MolrRecord(r.representative, r.aut_order, r.flags) for r in child.classes]
    data = {"n": n, "t": t, "k": child.k, "parents": len(frontier), "counts": _slice_dict(level)}
    _emit(out, out_path, output, data)
    render_output(data, output, "extend")

    if output != "json":
        console = _report_console(ctx, out_path)
        console.print(
            f"[bold]{len(frontier)}[/bold] classes of {k}x{n} {t}-MOLR extend to "
            f"[green]{len(child)}[/green] classes of {child.k}x{n}"
        )
        if len(child):
            console.print(_histogram_table("Autotopism group orders", level))


# ---------------------------------------------------------------------------
# galois
# ---------------------------------------------------------------------------

@cli.command()
@click.argument("n", type=int)
@click.option("--file", "-f", "out_path", default=None, metavar="PATH",
              help="Write the MOLS as a record file ('-' for stdout)")
@click.option("--aut", "with_aut", is_flag=True, help="Compute the autotopism group order")
@output_option
@input_json_option
@click.pass_context
def galois(ctx, n, out_path, with_aut, output, input_json):
    """The (n-1)-MOLS over GF(n) and its chain of transitive truncations."""
    merge_json_input(ctx, input_json)
    n = int(ctx.params.get("n", n))
    out_path = ctx.params.get("out_path", out_path)
    with_aut = ctx.params.get("with_aut", with_aut)

    try:
        gf = field(n)
        m = galois_mols(n)
        chain = stepwise_truncation(m)
    except MolrError as e:
        _fail("galois", e, output)

    aut = autotopism_class(m).aut_order if with_aut else None
    data = {
        "n": n,
        "field": {"p": gf.p, "r": gf.r, "generator": gf.generator,
                  "modulus": list(IRREDUCIBLE.get(n, ()))},
        "aut": aut,
        "chain": [{"k": sub.k, "transitive": True} for sub in chain],
        "squares": grids_as_lists(m.grids) if out_path is None else None,
    }
    _emit([MolrRecord(m, aut)], out_path, output, data)
    render_output(data, output, "galois")

    if output != "json":
        console = _report_console(ctx, out_path)
        console.print(f"[bold]GF({n})[/bold] = GF({gf.p}^{gf.r}), generator {gf.generator}")
        if aut is not None:
            console.print(f"|Aut| = [green]{aut}[/green]")
        console.print(
            f"[green]✓[/green] truncations k={n}..2 are transitive under multiplication by the generator"
        )


# ---------------------------------------------------------------------------
# geometry
# ---------------------------------------------------------------------------

def _parse_lines(raw: Optional[str]) -> List[int]:
    if not raw:
        return []
    try:
        return [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated line indices, got {raw!r}",
                                 param_hint="--lines")


@cli.command()
@click.argument("path", metavar="FILE")
@click.option("--action", "-a", type=click.Choice(ACTIONS), default="net", show_default=True,
              help="net: partial net; complete: projective completion; sandler: delete lines")
@click.option("--lines", "-l", "line_spec", default=None, metavar="I,J,K",
              help="Line indices to delete (sandler only)")
@click.option("--file", "-f", "out_path", default="-", show_default=True, metavar="PATH",
              help="Incidence listing ('-' for stdout)")
@output_option
@input_json_option
@click.pass_context
def geometry(ctx, path, action, line_spec, out_path, output, input_json):
    """Incidence structures of MOLR sets and their plane-axiom reports.

    sandler deletes three lines from the projective completion, or one or
    two lines from the partial net.
    """
    merge_json_input(ctx, input_json)
    path = ctx.params.get("path", path)
    action = ctx.params.get("action", action)
    line_spec = ctx.params.get("line_spec", line_spec)
    out_path = ctx.params.get("out_path", out_path)
    lines = _parse_lines(line_spec)
    if action == "sandler" and not lines:
        json_error("geometry", "--lines is required for sandler", EXIT_USAGE, output)
    records = _load("geometry", path, output)

    listings = []
    reports = []
    for i, record in enumerate(records, start=1):
        m = record.molr
        try:
            if action == "net":
                s = partial_net(m)
                report = check_plane(s)
            elif action == "complete":
                s = complete_to_projective(m)
                report = check_plane(s)
            else:
                base = complete_to_projective(m) if len(lines) == 3 else partial_net(m)
                result = sandler_delete(base, lines)
                s, report = result.structure, result.report
        except MolrError as e:
            _fail("geometry", e, output)
        listings.append(f"# record {i}: {m.k}x{m.n} t={m.t} {action}\n" + format_incidence(s))
        reports.append({"index": i, **report.as_dict()})

    text = "\n".join(listings)
    data = {"action": action, "reports": reports}
    if out_path == "-":
        if output == "json":
            data["incidence"] = text
        else:
            sys.stdout.write(text)
    else:
        target = Path(out_path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text)
        data["file"] = out_path
    render_output(data, output, "geometry")

    if output != "json":
        console = _report_console(ctx, out_path)
        table = Table(title=f"{path}: {action}", show_header=True,
                      header_style="bold magenta", box=box.ROUNDED)
        for column in ("#", "Points", "Lines", "Kind", "P1", "P2", "P3", "Resolution", "Curvature"):
            table.add_column(column)
        for r in reports:
            table.add_row(
                str(r["index"]), str(r["points"]), str(r["lines"]), r["kind"],
                "✓" if r["p1"] else "", "✓" if r["p2"] else "", "✓" if r["p3"] else "",
                str(r["resolution_classes"]),
                "" if r["curvature"] is None else str(r["curvature"]),
            )
        console.print(table)


# ---------------------------------------------------------------------------
# expected / fixtures
# ---------------------------------------------------------------------------

@cli.command()
@click.option("-n", "n", type=int, required=True, help="Order (4..7 tables, 8 or 9 census)")
@click.option("-t", "t", type=int, default=None, help="Number of rectangles (default: all)")
@output_option
@input_json_option
@click.pass_context
def expected(ctx, n, t, output, input_json):
    """Print the embedded reference counts for n."""
    merge_json_input(ctx, input_json)
    n = ctx.params.get("n", n)
    t = ctx.params.get("t", t)
    console: Console = ctx.obj["console"]

    if n in (8, 9):
        census = STEPWISE_CENSUS_8 if n == 8 else STEPWISE_TRANSITIVE_9
        ts = [t] if t is not None else sorted(census)
        if any(x not in census for x in ts):
            json_error("expected", f"no census for n={n}, t={t}", EXIT_USAGE, output)
        data = {"n": n, "stepwise_census": {x: census[x] for x in ts}}
        render_output(data, output, "expected")
        if output != "json":
            table = Table(title=f"Stepwise census, n={n}", show_header=True,
                          header_style="bold magenta", box=box.ROUNDED)
            table.add_column("t", style="cyan")
            for k in range(2, n + 1):
                table.add_column(f"k={k}", justify="right")
            for x in ts:
                cells = census[x]
                table.add_row(str(x), *(
                    "/".join(map(str, cells[k])) if isinstance(cells[k], tuple) else str(cells[k])
                    for k in range(2, n + 1)
                ))
            console.print(table)
        return

    keys = [key for key in table_keys(n) if t is None or key[1] == t]
    if not keys:
        json_error("expected", f"no embedded table for n={n}" + ("" if t is None else f", t={t}"),
                   EXIT_USAGE, output)
    tables = [expected_table(*key) for key in keys]
    render_output({"tables": tables}, output, "expected")

    if output != "json":
        table = Table(title=f"Reference counts, n={n}", show_header=True,
                      header_style="bold magenta", box=box.ROUNDED)
        for column in ("t", "k", "Isotopism", "Paratopism", "H", "T", "sH", "sT"):
            table.add_column(column, justify="right")
        for entry in tables:
            for k, count in sorted(entry["isotopism"].items()):
                quad = entry["regularity"].get(k) or ("", "", "", "")
                table.add_row(str(entry["t"]), str(k), str(count),
                              str(entry["paratopism"].get(k, "")), *map(str, quad))
        console.print(table)


@cli.command()
@click.argument("name", required=False)
@click.option("--file", "-f", "out_path", default="-", show_default=True, metavar="PATH",
              help="Where to export the named fixture ('-' for stdout)")
@output_option
@input_json_option
@click.pass_context
def fixtures(ctx, name, out_path, output, input_json):
    """List the embedded example sets, or export one as a record file."""
    merge_json_input(ctx, input_json)
    name = ctx.params.get("name", name)
    out_path = ctx.params.get("out_path", out_path)

    if name is None:
        rows = [
            {"name": f.name, "description": f.description, "aut": f.aut,
             "shape": f"{len(f.rects[0])}x{len(f.rects[0][0])}", "t": len(f.rects)}
            for f in FIXTURES.values()
        ]
        render_output({"fixtures": rows}, output, "fixtures")
        if output != "json":
            table = Table(title="Fixtures", show_header=True, header_style="bold magenta",
                          box=box.ROUNDED)
            table.add_column("Name", style="cyan")
            table.add_column("Shape")
            table.add_column("t", justify="right")
            table.add_column("|Aut|", justify="right", style="green")
            table.add_column("Description", style="dim")
            for row in rows:
                table.add_row(row["name"], row["shape"], str(row["t"]),
                              "" if row["aut"] is None else str(row["aut"]), row["description"])
            ctx.obj["console"].print(table)
        return

    try:
        fixture = load_fixture(name)
        m = fixture.molrset()
    except KeyError as e:
        json_error("fixtures", e.args[0], EXIT_USAGE, output)
    except MolrError as e:
        _fail("fixtures", e, output)
    data = {"name": fixture.name, "description": fixture.description, "aut": fixture.aut}
    _emit([MolrRecord(m, fixture.aut)], out_path, output, data)
    render_output(data, output, "fixtures")


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

if __name__ == "__main__":
    cli()
