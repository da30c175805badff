r"""Stieltjes toolkit command line interface.

    stieltjes compute  --k 0 --a 1 --method hermite [--tol 1e-10] [--json]
    stieltjes table    --k-max 2 --a-list 1,2 --methods oracle,hermite --out gamma.csv [--show]
    stieltjes validate [--k-max 4] [--tol 1e-7] [--report report.json]

Exit codes: 0 success, 1 validation violation, 2 value not converged, 64 usage error,
73 output path cannot be written.
"""

import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, fields, replace
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click
import yaml
from tabulate import tabulate

from stieltjes.common.constants import (
    DEFAULT_RUN_TOL,
    DEFAULT_VALIDATE_K_MAX,
    DEFAULT_VALIDATE_TOL,
    EXIT_CANT_CREATE,
    EXIT_NOT_CONVERGED,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    ORACLE_K_BUDGET,
    PRINT_DIGITS,
    TABLE_COLUMNS,
    VALIDATION_A_GRID,
    MethodSelector,
)
from stieltjes.common.exceptions import (
    CapacityExceeded,
    DomainError,
    InvalidConfiguration,
    OutOfBudget,
    UnknownMethod,
    UnsupportedOrder,
)
from stieltjes.common.interpolation import VariableInterpolator
from stieltjes.common.values import ComputedValue, StieltjesQuery
from stieltjes.modules.quadrature import QuadratureSpec
from stieltjes.toolkit import Toolkit

CLI_LOGGER = logging.getLogger(__name__)

OUTPUT_FORMATS = ("csv", "json")

# Errors that mean the request itself was unusable
USAGE_ERRORS = (
    CapacityExceeded,
    DomainError,
    InvalidConfiguration,
    OutOfBudget,
    UnknownMethod,
    UnsupportedOrder,
)


@dataclass(frozen=True)
class RunConfig:
    """Settings of a table or validation run, from a YAML run file and the command line."""

    tol: float = DEFAULT_RUN_TOL
    k_max: int = DEFAULT_VALIDATE_K_MAX
    a_list: Tuple[float, ...] = VALIDATION_A_GRID
    methods: Tuple[str, ...] = tuple(sorted(MethodSelector.VALUES))
    output_path: Optional[str] = None
    format: str = "csv"

    def __post_init__(self):
        """Validate every setting and normalise the sequences to sorted tuples."""
        if not self.tol > 0:
            raise InvalidConfiguration(f"tol must be greater than zero, not {self.tol!r}")
        if isinstance(self.k_max, bool) or not isinstance(self.k_max, int):
            raise InvalidConfiguration(f"k_max must be an integer, not {self.k_max!r}")
        if not 0 <= self.k_max <= ORACLE_K_BUDGET:
            raise InvalidConfiguration(f"k_max must lie in 0..{ORACLE_K_BUDGET}, not {self.k_max}")
        if not self.a_list:
            raise InvalidConfiguration("a_list must not be empty")
        if any(not float(a) > 0 for a in self.a_list):
            raise InvalidConfiguration(f"Every a must be greater than zero: {self.a_list!r}")
        if not self.methods:
            raise InvalidConfiguration("methods must not be empty")
        for method in self.methods:
            MethodSelector.parse(method)
        if self.format not in OUTPUT_FORMATS:
            raise InvalidConfiguration(f"format must be one of {OUTPUT_FORMATS}")

        # Frozen dataclass, so normalisation goes through object.__setattr__
        object.__setattr__(self, "a_list", tuple(sorted({float(a) for a in self.a_list})))
        object.__setattr__(self, "methods", tuple(sorted(set(self.methods))))

    @classmethod
    def load(
        cls,
        config_file: Optional[str] = None,
        defaults: Optional[Dict[str, Any]] = None,
        **overrides,
    ) -> "RunConfig":
        """Build a configuration from defaults, then an optional YAML run file, then overrides.

        Overrides that are None are ignored, so unset command line flags leave the file alone.
        """
        settings: Dict[str, Any] = dict(defaults or {})
        if config_file:
            CLI_LOGGER.info("Loading run configuration from %s", config_file)
            with open(config_file, "r", encoding="utf-8") as run_file:
                loaded = yaml.safe_load(run_file) or {}
            if not isinstance(loaded, dict):
                raise InvalidConfiguration(f"{config_file} does not hold a mapping of settings")
            known = {field.name for field in fields(cls)}
            unknown = sorted(set(loaded) - known)
            if unknown:
                raise InvalidConfiguration(f"Unknown settings in {config_file}: {unknown}")
            settings.update(loaded)

        settings.update({key: value for key, value in overrides.items() if value is not None})
        for key in ("a_list", "methods"):
            if key in settings and not isinstance(settings[key], (list, tuple)):
                settings[key] = [settings[key]]
        if "a_list" in settings:
            try:
                settings["a_list"] = tuple(float(a) for a in settings["a_list"])
            except (TypeError, ValueError) as exc:
                raise InvalidConfiguration(
                    f"a_list must hold reals: {settings['a_list']!r}"
                ) from exc
        if "methods" in settings:
            settings["methods"] = tuple(str(method) for method in settings["methods"])

        config = cls(**settings)
        if config.output_path:
            output_path = VariableInterpolator().interpolate(config.output_path)
            config = replace(config, output_path=output_path)
        return config


def _fmt(value: float) -> str:
    """Render a value with enough digits to round-trip a binary64."""
    return format(value, f".{PRINT_DIGITS}g")


def _split_list(param_name: str, text: Optional[str]) -> Optional[List[str]]:
    """Split a comma-separated flag value, rejecting an empty list."""
    if text is None:
        return None
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise click.BadParameter("must name at least one value", param_hint=param_name)
    return items


def _parse_a_list(text: Optional[str]) -> Optional[List[float]]:
    """Parse --a-list into positive reals."""
    items = _split_list("--a-list", text)
    if items is None:
        return None
    try:
        values = [float(item) for item in items]
    except ValueError as exc:
        raise click.BadParameter(f"{text!r} is not a list of reals", param_hint="--a-list") from exc
    if any(not value > 0 for value in values):
        raise click.BadParameter("every a must be greater than zero", param_hint="--a-list")
    return values


def _parse_methods(text: Optional[str]) -> Optional[List[str]]:
    """Parse --methods into known method tags."""
    items = _split_list("--methods", text)
    if items is None:
        return None
    for item in items:
        if item not in MethodSelector:
            raise click.BadParameter(
                f"unknown method {item!r}; expected {MethodSelector.VALUES}", param_hint="--methods"
            )
    return items


def _configure_logging(verbose: bool, debug: bool):
    """Attach a stderr handler when verbose or debug output is requested."""
    if debug:
        level = logging.DEBUG
    elif verbose:
        level = logging.INFO
    else:
        return
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )


def _write_output(path: str, text: str) -> bool:
    """Write text to path; return False, after reporting, when the path cannot be written."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as output_file:
            output_file.write(text)
    except OSError as exc:
        click.echo(f"Error: cannot write {path}: {exc.strerror}", err=True)
        return False
    CLI_LOGGER.info("Wrote %s", path)
    return True


def _queries(k_max: int, a_list: Sequence[float]) -> List[StieltjesQuery]:
    """Return the (k, a) grid in lexicographic order."""
    return [StieltjesQuery(k, a) for k in range(k_max + 1) for a in sorted(a_list)]


@click.group()
@click.option("--verbose", is_flag=True, help="Log each evaluation.")
@click.option("--debug", is_flag=True, help="Log quadrature levels and extrapolation columns.")
def cli(verbose: bool, debug: bool):
    """Compute, tabulate and cross-validate the Stieltjes constants gamma_k(a)."""
    _configure_logging(verbose, debug)


@cli.command()
@click.option("--k", "k", type=click.IntRange(min=0), required=True, help="Stieltjes index.")
@click.option("--a", "a", type=float, required=True, help="Hurwitz parameter, a > 0.")
@click.option(
    "--method",
    type=click.Choice(MethodSelector.VALUES),
    default=MethodSelector.HERMITE.value,
    show_default=True,
)
@click.option("--tol", type=float, default=DEFAULT_RUN_TOL, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the result as JSON.")
def compute(k: int, a: float, method: str, tol: float, as_json: bool) -> int:
    """Compute gamma_k(a) with one method."""
    if not tol > 0:
        raise click.BadParameter("must be greater than zero", param_hint="--tol")

    with Toolkit(quadrature_spec=QuadratureSpec(tol=tol)) as toolkit:
        result = toolkit.compute(k, a, method)

    regime_ok = result.diagnostics.get("regime_ok")
    if as_json:
        payload = {"k": k, "a": a, **result.dump()}
        if regime_ok is not None:
            payload["regime_ok"] = regime_ok
        click.echo(json.dumps(payload))
    else:
        line = (
            f"gamma_{k}({_fmt(a)}) = {_fmt(result.value)} err_estimate={_fmt(result.err_estimate)} "
            f"method={result.method.value} work={result.work} converged={result.converged}"
        )
        if regime_ok is not None:
            line += f" regime_ok={regime_ok}"
        click.echo(line)

    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def _table_rows(grid: List[Tuple[Tuple[StieltjesQuery, MethodSelector], ComputedValue, float]]):
    """Flatten grid results into table rows keyed by the table columns."""
    rows = []
    for (query, sel), result, seconds in grid:
        rows.append(
            {
                "k": query.k,
                "a": _fmt(query.a),
                "method": sel.value,
                "value": _fmt(result.value),
                "err_estimate": _fmt(result.err_estimate),
                "work": result.work,
                "seconds": f"{seconds:.6f}",
            }
        )
    return rows


def _render_csv(rows: List[Dict[str, Any]]) -> str:
    """Render rows as CSV text with the fixed header."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


@cli.command()
@click.option("--k-max", type=click.IntRange(0, ORACLE_K_BUDGET), default=None)
@click.option("--a-list", default=None, help="Comma-separated values of a.")
@click.option("--methods", default=None, help="Comma-separated method tags.")
@click.option("--out", "output_path", default=None, help="Output file; ${ENV} is interpolated.")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None)
@click.option("--tol", type=float, default=None, help="Quadrature tolerance.")
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--show", is_flag=True, help="Also print the table.")
def table(  # pylint: disable=too-many-arguments
    k_max: Optional[int],
    a_list: Optional[str],
    methods: Optional[str],
    output_path: Optional[str],
    output_format: Optional[str],
    tol: Optional[float],
    config_file: Optional[str],
    show: bool,
) -> int:
    """Write a table of gamma_k(a) for every k <= k_max, a and applicable method."""
    config = RunConfig.load(
        config_file,
        k_max=k_max,
        a_list=_parse_a_list(a_list),
        methods=_parse_methods(methods),
        output_path=output_path,
        format=output_format,
        tol=tol,
    )
    if not config.output_path:
        raise click.UsageError("An output path is required: pass --out or set output_path")

    with Toolkit(quadrature_spec=QuadratureSpec(tol=config.tol)) as toolkit:
        grid = toolkit.compute_grid(_queries(config.k_max, config.a_list), config.methods)
    rows = _table_rows(grid)

    if config.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        text = _render_csv(rows)

    if show:
        click.echo(tabulate(rows, headers="keys", tablefmt="simple"))

    if not _write_output(config.output_path, text):
        return EXIT_CANT_CREATE
    return EXIT_OK


def _exempt(sel: MethodSelector, result: ComputedValue) -> bool:
    """Tell whether a value is listed in the report but left out of the comparison.

    Exempt are asymptotic values outside their regime and Stirling values short of the method
    target, which stop at the series' plateau.
    """
    if sel == MethodSelector.ASYMPTOTIC:
        return not result.diagnostics.get("regime_ok", True)
    if sel == MethodSelector.STIRLING:
        return not result.converged
    return False


def _allowance(tol: float, entries: Sequence[Dict[str, Any]]) -> float:
    """Return the deviation allowed between compared values.

    A value that did not converge is held to its own error estimate when that is looser.
    """
    return max([tol] + [entry["err"] for entry in entries if not entry["converged"]])


def build_report(
    grid: List[Tuple[Tuple[StieltjesQuery, MethodSelector], ComputedValue, float]],
    tol: float,
) -> Dict[str, Any]:
    """Assemble the validation report from grid results.

    Every pair of compared values must agree within the tolerance, widened to the error
    estimate of a member that did not converge. A compared value that is not finite, or has no
    finite error estimate, fails its entry.
    """
    entries: Dict[Tuple[int, float], Dict[str, Dict[str, Any]]] = {}
    for (query, sel), result, _ in grid:
        values = entries.setdefault((query.k, query.a), {})
        values[sel.value] = {
            "value": result.value,
            "err": result.err_estimate,
            "converged": result.converged,
            "compared": not _exempt(sel, result),
        }

    report_grid = []
    passed = True
    for (k, a), values in sorted(entries.items()):
        compared = [entry for entry in values.values() if entry["compared"]]
        entry_pass = all(
            math.isfinite(entry["value"]) and math.isfinite(entry["err"]) for entry in compared
        )
        max_dev = 0.0
        for first, second in combinations(compared, 2):
            deviation = abs(first["value"] - second["value"])
            max_dev = max(max_dev, deviation)
            entry_pass = entry_pass and deviation <= _allowance(tol, (first, second))
        passed = passed and entry_pass
        report_grid.append(
            {
                "k": k,
                "a": a,
                "values": {method: values[method] for method in sorted(values)},
                "max_dev": max_dev,
                "pass": entry_pass,
            }
        )
    return {"grid": report_grid, "tol": tol, "pass": passed}


@cli.command()
@click.option(
    "--k-max",
    type=click.IntRange(0, ORACLE_K_BUDGET),
    default=None,
    help=f"Largest k; defaults to {DEFAULT_VALIDATE_K_MAX}.",
)
@click.option("--tol", type=float, default=None, help=f"Defaults to {DEFAULT_VALIDATE_TOL:g}.")
@click.option("--report", "report_path", default=None, help="Report file; ${ENV} is interpolated.")
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False))
def validate(
    k_max: Optional[int],
    tol: Optional[float],
    report_path: Optional[str],
    config_file: Optional[str],
) -> int:
    """Cross-check every applicable method against the others on the validation grid."""
    config = RunConfig.load(
        config_file,
        defaults={"k_max": DEFAULT_VALIDATE_K_MAX, "tol": DEFAULT_VALIDATE_TOL},
        k_max=k_max,
        tol=tol,
        output_path=report_path,
        format="json",
    )
    CLI_LOGGER.info(
        "Validating k <= %d on a in %s at tol %g", config.k_max, config.a_list, config.tol
    )

    with Toolkit() as toolkit:
        grid = toolkit.compute_grid(_queries(config.k_max, config.a_list), config.methods)
    report = build_report(grid, config.tol)
    text = json.dumps(report, indent=2) + "\n"

    if config.output_path:
        if not _write_output(config.output_path, text):
            return EXIT_CANT_CREATE
    else:
        click.echo(text, nl=False)

    for entry in report["grid"]:
        if not entry["pass"]:
            click.echo(
                f"Violation at k={entry['k']} a={_fmt(entry['a'])}: "
                f"max deviation {_fmt(entry['max_dev'])}",
                err=True,
            )
    return EXIT_OK if report["pass"] else EXIT_VIOLATION


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface and return its exit status."""
    try:
        status = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="stieltjes",
            standalone_mode=False,
        )
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except USAGE_ERRORS as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE

    return EXIT_OK if status is None else status


def run():
    """Console script entry point."""
    sys.exit(main())
