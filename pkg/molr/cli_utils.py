"""
molr/cli_utils.py
Purpose: Shared CLI helpers: the JSON envelope, exit codes, the
         --output / --input-json options and error routing used by
         every command in molr/cli.py.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import json
import os
import sys
from typing import Any, Dict, List, Optional

import click

# ---------------------------------------------------------------------------
# Environment variable names
# ---------------------------------------------------------------------------

MOLR_OUTPUT_ENV = "MOLR_OUTPUT"

# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------

EXIT_SUCCESS = 0
EXIT_FAILURE = 1    # unexpected error
EXIT_MISMATCH = 2   # verify found differences from the expected tables
EXIT_BUDGET = 3     # a level outgrew the class budget
EXIT_USAGE = 4      # bad arguments, unreadable or malformed input

# ---------------------------------------------------------------------------
# JSON envelope
# ---------------------------------------------------------------------------

ENVELOPE_SCHEMA_VERSION = "1"


def _build_envelope(
    command: str,
    data: Dict[str, Any],
    success: bool = True,
    errors: Optional[List[str]] = None,
) -> Dict[str, Any]:
    return {
        "schema_version": ENVELOPE_SCHEMA_VERSION,
        "command": command,
        "success": success,
        "data": data,
        "errors": errors or [],
    }


def _dump(envelope: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(envelope, indent=2, default=str) + "\n")
    sys.stdout.flush()


def render_output(
    data: Dict[str, Any],
    output_fmt: str,
    command: str,
    success: bool = True,
    errors: Optional[List[str]] = None,
) -> None:
    """
    Emit the JSON envelope on stdout when output_fmt == 'json'.
    Text mode is a no-op; the command renders its own rich tables.
    """
    if output_fmt != "json":
        return
    _dump(_build_envelope(command, data, success=success, errors=errors))


def json_error(
    command: str,
    message: str,
    exit_code: int = EXIT_USAGE,
    output_fmt: str = "json",
) -> None:
    """
    Report a fatal error and exit: an error envelope on stdout in JSON
    mode, a plain message on stderr otherwise.
    """
    if output_fmt == "json":
        _dump(_build_envelope(command, {}, success=False, errors=[message]))
    else:
        sys.stderr.write(f"Error: {message}\n")
        sys.stderr.flush()
    sys.exit(exit_code)

# ---------------------------------------------------------------------------
# Reusable decorators
# ---------------------------------------------------------------------------


def output_option(f):
    """
    Adds --output / -o [text|json]. The default is read from MOLR_OUTPUT
    at invocation time, then falls back to 'text'.
    """
    def _default():
        return os.environ.get(MOLR_OUTPUT_ENV, "text")

    return click.option(
        "--output",
        "-o",
        type=click.Choice(["text", "json"]),
        default=_default,
        show_default=True,
        help=(
            "Output format. 'json' emits a machine-readable envelope to stdout. "
            "Set MOLR_OUTPUT=json to default all commands to JSON."
        ),
    )(f)


def input_json_option(f):
    """
    Adds --input-json: a flat JSON object whose keys are option names
    (hyphens -> underscores), merged over the flags given on the command line.
    """
    return click.option(
        "--input-json",
        default=None,
        metavar="JSON",
        help=(
            "Supply parameters as a flat JSON object. Keys match option "
            "names (hyphens -> underscores). Unknown keys are ignored. "
            'Example: --input-json \'{"n": 5, "t": 2, "k": 3}\''
        ),
    )(f)


def workers_option(f):
    return click.option(
        "--workers",
        "-w",
        type=click.IntRange(min=1),
        default=None,
        help="Worker processes (default from config or MOLR_WORKERS).",
    )(f)


def budget_option(f):
    return click.option(
        "--budget",
        type=click.IntRange(min=1),
        default=None,
        help="Maximum classes kept per level (default from config or MOLR_BUDGET).",
    )(f)

# ---------------------------------------------------------------------------
# merge_json_input
# ---------------------------------------------------------------------------


def merge_json_input(ctx: click.Context, input_json: Optional[str]) -> None:
    """
    Parse --input-json and overwrite matching keys in ctx.params in place.
    Call at the top of a command body, then read parameters from ctx.params.

    Invalid JSON or a non-object value exits with EXIT_USAGE.
    """
    if not input_json:
        return
    output_fmt = ctx.params.get("output", os.environ.get(MOLR_OUTPUT_ENV, "text"))
    try:
        data = json.loads(input_json)
    except json.JSONDecodeError as exc:
        json_error(ctx.info_name or "unknown", f"--input-json is not valid JSON: {exc}",
                   EXIT_USAGE, output_fmt)
        return
    if not isinstance(data, dict):
        json_error(ctx.info_name or "unknown",
                   "--input-json must be a JSON object {}, not a list or scalar",
                   EXIT_USAGE, output_fmt)
        return
    for key, value in data.items():
        if key in ctx.params:
            ctx.params[key] = value

# ---------------------------------------------------------------------------
# JSON-friendly views
# ---------------------------------------------------------------------------


def grids_as_lists(grids) -> List[List[List[int]]]:
    return [[list(row) for row in g] for g in grids]


def key_hex(key: bytes) -> str:
    return key.hex()
