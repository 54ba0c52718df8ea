"""Command-line surface for the equivariant invariant library.

Subcommands:

* ``class`` / ``factor`` -- canonical class and factored characteristic
  polynomial of a square integer matrix,
* ``invariants`` -- full report (u, λ, R, L per class, ℓ, vanishing) for a
  complex given as a builtin name, a file path, or inline JSON,
* ``realize`` -- build and verify the wedge-of-spheres model for a pair of
  matrices, printing the verified class and emitting the document,
* ``check`` -- validation-only run of the loader,
* ``example`` -- emit one of the builtin example documents.

Flags ``--json``, ``--output PATH``, ``--verbose`` are accepted by every
subcommand.  Exit codes: 0 success, 1 validation/parse failure, 2 internal
error.  JSON output is byte-stable: keys are sorted and all ordering is
canonical.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import pathlib
import sys
from typing import Any, Sequence

from .complex_model import (
    EquivariantComplex,
    load_builtin,
    load_complex,
    serialize_complex,
)
from .corpus import BUILTIN_COMPLEXES
from .exact_algebra import IntMatrix, char_poly, factor_over_Q
from .invariants import _encode_uz, build_report, render_report, universal_invariant
from .realize import RealizationTarget, realize
from .uz import class_of_matrix, uz_add, uz_eq, uz_neg

__all__ = ["CommandConfig", "main", "build_parser"]


class _InputError(ValueError):
    """A parse or validation failure attributable to the command input."""


@dataclasses.dataclass(frozen=True)
class CommandConfig:
    """Parsed command-line invocation: one subcommand plus shared flags."""

    subcommand: str
    arguments: tuple[str, ...]
    json_output: bool
    output: str | None
    verbose: bool


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with code 1, not 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit machine-readable JSON output"
    )
    common.add_argument(
        "--output", metavar="PATH", help="write the primary output to PATH"
    )
    common.add_argument(
        "--verbose", action="store_true", help="print progress details to stderr"
    )

    parser = _Parser(
        prog="eqlef",
        description=(
            "Exact invariants of equivariant cellular self-maps: the universal "
            "class u, the generalized Lefschetz class λ, Reidemeister traces, "
            "and the subgroup-decomposed fixed-point invariant ℓ."
        ),
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    for name in ("class", "factor"):
        sub = subparsers.add_parser(
            name,
            parents=[common],
            help="canonical class and factored characteristic polynomial of a matrix",
        )
        sub.add_argument(
            "matrix",
            help='square integer matrix as JSON rows, e.g. "[[0,-1],[1,0]]"',
        )

    sub = subparsers.add_parser(
        "invariants",
        parents=[common],
        help="compute every invariant of a complex (builtin name, file, or inline JSON)",
    )
    sub.add_argument("input", help="builtin name, document path, or inline JSON")

    sub = subparsers.add_parser(
        "realize",
        parents=[common],
        help="build the wedge-of-spheres model realizing [a] − [b'] and verify it",
    )
    sub.add_argument("a", help='square integer matrix a as JSON rows ("[]" for empty)')
    sub.add_argument(
        "b_prime", help='square integer matrix b\' as JSON rows ("[]" for empty)'
    )

    sub = subparsers.add_parser(
        "check",
        parents=[common],
        help="validate a complex document without computing invariants",
    )
    sub.add_argument("input", help="builtin name, document path, or inline JSON")

    sub = subparsers.add_parser(
        "example",
        parents=[common],
        help="emit a builtin example document",
    )
    sub.add_argument("name", choices=sorted(BUILTIN_COMPLEXES), help="builtin name")

    return parser


def _parse_config(argv: Sequence[str] | None) -> CommandConfig:
    args = build_parser().parse_args(argv)
    if args.subcommand in ("class", "factor"):
        arguments: tuple[str, ...] = (args.matrix,)
    elif args.subcommand == "realize":
        arguments = (args.a, args.b_prime)
    elif args.subcommand == "example":
        arguments = (args.name,)
    else:
        arguments = (args.input,)
    return CommandConfig(
        subcommand=args.subcommand,
        arguments=arguments,
        json_output=bool(args.json),
        output=args.output,
        verbose=bool(args.verbose),
    )


# ---------------------------------------------------------------------------
# input parsing


def _parse_matrix(text: str) -> IntMatrix:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _InputError(f"could not parse matrix {text!r}: {exc}.") from exc
    if not isinstance(value, list) or any(not isinstance(row, list) for row in value):
        raise _InputError(f"matrix input must be a JSON list of rows, got {text!r}.")
    rows = []
    for i, row in enumerate(value):
        converted = []
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, (int, str)):
                raise _InputError(
                    f"matrix entry ({i}, {j}) must be an integer, got {entry!r}."
                )
            try:
                converted.append(int(entry))
            except ValueError as exc:
                raise _InputError(
                    f"matrix entry ({i}, {j}) must be an integer, got {entry!r}."
                ) from exc
        rows.append(converted)
    if not rows:
        return IntMatrix.zeros(0, 0)
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise _InputError("matrix rows must all have the same length.")
    return IntMatrix.from_rows(rows)


def _parse_square_matrix(text: str, name: str) -> IntMatrix:
    matrix = _parse_matrix(text)
    if not matrix.is_square:
        raise _InputError(
            f"{name} must be square, got {matrix.rows}×{matrix.cols}."
        )
    return matrix


def _load_input_complex(text: str) -> EquivariantComplex:
    if text in BUILTIN_COMPLEXES:
        return load_builtin(text)
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            document = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise _InputError(f"could not parse inline JSON document: {exc}.") from exc
        return load_complex(document)
    path = pathlib.Path(text)
    if path.exists():
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise _InputError(f"could not parse document {text!r}: {exc}.") from exc
        return load_complex(document)
    builtin_names = ", ".join(sorted(BUILTIN_COMPLEXES))
    raise _InputError(
        f"input {text!r} is not a builtin name ({builtin_names}), an existing "
        "file, or an inline JSON document."
    )


# ---------------------------------------------------------------------------
# output helpers


def _dump_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def _emit(text: str, config: CommandConfig) -> None:
    if config.output:
        pathlib.Path(config.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _note(message: str, config: CommandConfig) -> None:
    if config.verbose:
        print(message, file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands


def cmd_class(config: CommandConfig) -> int:
    matrix = _parse_square_matrix(config.arguments[0], "matrix")
    uz = class_of_matrix(matrix)
    if matrix.rows == 0:
        if config.json_output:
            _emit(_dump_json({"class": _encode_uz(uz)}), config)
        else:
            _emit(str(uz), config)
        return 0
    polynomial = char_poly(matrix)
    content, factors = factor_over_Q(polynomial)
    factored = " · ".join(
        f"({factor})" + ("" if multiplicity == 1 else f"^{multiplicity}")
        for factor, multiplicity in factors
    )
    if content != 1:
        factored = f"{content} · {factored}"
    _note(f"{matrix.rows}×{matrix.cols} matrix, {len(factors)} irreducible factors", config)
    if config.json_output:
        payload = {
            "class": _encode_uz(uz),
            "characteristic_polynomial": str(polynomial),
            "factorization": {
                "content": content,
                "factors": [
                    {"polynomial": str(factor), "multiplicity": multiplicity}
                    for factor, multiplicity in factors
                ],
            },
        }
        _emit(_dump_json(payload), config)
    else:
        _emit(
            f"{uz}\ncharacteristic polynomial: {polynomial}\nfactorization: {factored}",
            config,
        )
    return 0


def cmd_invariants(config: CommandConfig) -> int:
    complex_data = _load_input_complex(config.arguments[0])
    _note(
        f"loaded complex ({len(complex_data.classes)} iso classes, "
        f"group order {complex_data.group.order})",
        config,
    )
    if config.json_output:
        _emit(_dump_json(build_report(complex_data)), config)
    else:
        _emit(render_report(complex_data), config)
    return 0


def cmd_realize(config: CommandConfig) -> int:
    a = _parse_square_matrix(config.arguments[0], "matrix a")
    b_prime = _parse_square_matrix(config.arguments[1], "matrix b'")
    target = RealizationTarget(a, b_prime)
    complex_data = realize(target)
    entry = universal_invariant(complex_data).entries[0]
    expected = uz_add(class_of_matrix(a), uz_neg(class_of_matrix(b_prime)))
    if entry.uz_image is None or not uz_eq(entry.uz_image, expected):
        raise RuntimeError(
            "realization round trip failed: computed class "
            f"{entry.uz_image} does not match target {expected}."
        )
    _note(
        f"realized [a ({a.rows}×{a.rows})] − [b' ({b_prime.rows}×{b_prime.rows})]; "
        "round trip verified",
        config,
    )
    document = serialize_complex(complex_data)
    if config.json_output:
        payload = {
            "class": _encode_uz(entry.uz_image),
            "verified": True,
            "document": document,
        }
        _emit(_dump_json(payload), config)
        return 0
    if config.output:
        pathlib.Path(config.output).write_text(
            _dump_json(document) + "\n", encoding="utf-8"
        )
        print(str(entry.uz_image))
    else:
        print(str(entry.uz_image))
        print(_dump_json(document))
    return 0


def cmd_check(config: CommandConfig) -> int:
    complex_data = _load_input_complex(config.arguments[0])
    summary = {
        "valid": True,
        "iso_classes": len(complex_data.classes),
        "group_order": complex_data.group.order,
        "fixed_points": len(complex_data.fixed_points),
    }
    if config.json_output:
        _emit(_dump_json(summary), config)
    else:
        _emit(
            f"OK: {summary['iso_classes']} iso classes, group order "
            f"{summary['group_order']}, {summary['fixed_points']} fixed points",
            config,
        )
    return 0


def cmd_example(config: CommandConfig) -> int:
    name = config.arguments[0]
    document = serialize_complex(load_builtin(name))
    _emit(_dump_json(document), config)
    return 0


_DISPATCH = {
    "class": cmd_class,
    "factor": cmd_class,
    "invariants": cmd_invariants,
    "realize": cmd_realize,
    "check": cmd_check,
    "example": cmd_example,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = _parse_config(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    try:
        return _DISPATCH[config.subcommand](config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
