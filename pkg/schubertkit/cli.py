"""Command line front end: compute, expand, verify and corpus."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import voluptuous as vol

from .config import set_options
from .const import (
    BASES,
    BASIS_ETA,
    BASIS_P,
    BASIS_Q,
    BASIS_SCHUR,
    BASIS_THETA,
    CONF_DEGREE_CAP,
    CONF_JOBS,
    CONF_OUTPUT_FORMAT,
    DOMAIN,
    LOG_DATE_FORMAT,
    LOG_FORMAT,
    OUTPUT_FORMATS,
    SCHUBERT_TYPES,
    STANLEY_VARIANTS,
    SUITE_ALL,
    SUITES,
)
from .exceptions import (
    IllegalGenerator,
    IncompatibleFlags,
    InvalidElement,
    InvalidFlag,
    InvalidOption,
    KindMismatch,
    LengthMismatch,
    NotKStrict,
    NotStrict,
    NotTypedKStrict,
    SchubertKitError,
)
from .polycore import format_poly
from .schubert import (
    coerce_element,
    eta,
    format_value,
    reverse_schubert,
    schubert,
    splitting_expand,
    stanley,
    stanley_coefficients,
    theta,
    value_to_json,
)
from .symfunc import basis_expand
from .verify import DEFAULT_MAX_N, run_suites
from .weyl import (
    FlagSequence,
    Kind,
    KStrictPartition,
    TypedKStrictPartition,
    WeylElement,
    iter_group,
    parse_generator,
)

_LOGGER = logging.getLogger(__name__)

COMMANDS = ["compute", "expand", "verify", "corpus"]
OBJECTS = ["schubert", "stanley", "theta", "eta", "reverse"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (
    IllegalGenerator,
    IncompatibleFlags,
    InvalidElement,
    InvalidFlag,
    InvalidOption,
    KindMismatch,
    LengthMismatch,
    NotKStrict,
    NotStrict,
    NotTypedKStrict,
)


def _generator(value: Any) -> int | None:
    if value is None:
        return None
    try:
        return parse_generator(str(value))
    except IllegalGenerator as err:
        raise vol.Invalid(str(err)) from err


def _count(value: Any) -> int | None:
    if value is None:
        return None
    return vol.All(vol.Coerce(int), vol.Range(min=0))(value)


COMMAND_SCHEMA = vol.Schema(
    {
        vol.Required("command"): vol.In(COMMANDS),
        vol.Optional("type", default="A"): vol.All(str, vol.Upper, vol.In(SCHUBERT_TYPES)),
        vol.Optional("object", default="schubert"): vol.In(OBJECTS),
        vol.Optional("variant", default="single"): vol.In(STANLEY_VARIANTS),
        vol.Optional("basis", default=None): vol.Any(None, vol.In(BASES)),
        vol.Optional("suite", default=SUITE_ALL): vol.In(SUITES + [SUITE_ALL]),
        vol.Optional("k", default=None): _generator,
        vol.Optional("l", default=None): _count,
        vol.Optional("m", default=None): _count,
        vol.Optional("n", default=None): vol.Any(None, vol.All(vol.Coerce(int), vol.Range(min=1, max=8))),
        vol.Optional("max_n", default=DEFAULT_MAX_N): vol.All(vol.Coerce(int), vol.Range(min=1, max=6)),
        vol.Optional("format", default=None): vol.Any(None, vol.In(OUTPUT_FORMATS)),
    },
    extra=vol.ALLOW_EXTRA,
)


def build_parser() -> argparse.ArgumentParser:
    """The argument parser for all subcommands."""
    parser = argparse.ArgumentParser(prog=DOMAIN, description="Double Schubert polynomials of types A, B, C and D")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeat for debug)")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="output format")
    parser.add_argument("--degree-cap", type=int, help="largest Q-degree normalized")
    parser.add_argument("--jobs", type=int, help="worker threads for verification")
    commands = parser.add_subparsers(dest="command", required=True)

    def common(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--type", default="A", help="A, B, C or D")
        sub.add_argument("--w", help='signed window such as "2,-3,1"')
        sub.add_argument("--k", help='arity k (use "b" for the box generator)')
        sub.add_argument("--l", help="arity l")

    compute = commands.add_parser("compute", help="compute a polynomial")
    common(compute)
    compute.add_argument("--object", default="schubert", help=f"one of {OBJECTS}")
    compute.add_argument("--variant", default="single", help=f"Stanley variant, one of {STANLEY_VARIANTS}")
    compute.add_argument("--shape", help='partition such as "2,1" or "2,1;type=1"')
    compute.add_argument("--m", help="number of Omega variables for reverse polynomials")
    compute.add_argument("--double", dest="double", action="store_true", default=True)
    compute.add_argument("--single", dest="double", action="store_false")

    expand = commands.add_parser("expand", help="expand in a basis or by splitting")
    common(expand)
    expand.add_argument("--basis", help=f"one of {BASES}")
    expand.add_argument("--flags-a", help="flag sequence a for splitting coefficients")
    expand.add_argument("--flags-b", help="flag sequence b for splitting coefficients")

    verify = commands.add_parser("verify", help="run identity suites")
    verify.add_argument("--suite", default=SUITE_ALL, help=f"one of {SUITES + [SUITE_ALL]}")
    verify.add_argument("--type", help="restrict to one type")
    verify.add_argument("--n", help="a single rank")
    verify.add_argument("--max-n", default=DEFAULT_MAX_N, help="largest rank swept")
    verify.add_argument("--w", help="element for the key suite")
    verify.add_argument("--k", help="k for the key suite")
    verify.add_argument("--l", help="l for the key suite")
    verify.add_argument("--m", help="Omega shift for the reverse suite")

    corpus = commands.add_parser("corpus", help="write golden JSON files")
    corpus.add_argument("--out", default="corpus", help="output directory")
    corpus.add_argument("--max-n", default=DEFAULT_MAX_N, help="largest rank written")
    return parser


def _shape_label(shape: Any) -> str:
    if isinstance(shape, TypedKStrictPartition):
        return f"({','.join(map(str, shape.parts))});type={shape.type_tag}"
    if isinstance(shape, KStrictPartition):
        shape = shape.parts
    return f"({','.join(map(str, shape))})"


def _emit(data: dict[str, Any], text: str, output: str) -> None:
    if output == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _element(options: dict[str, Any]) -> WeylElement:
    if not options.get("w"):
        raise InvalidOption("--w is required")
    return coerce_element(options["type"], options["w"])


def _compute(options: dict[str, Any], output: str) -> int:
    letter, what = options["type"], options["object"]
    if what == "schubert":
        sp = schubert(letter, _element(options), double=options["double"])
        _emit(sp.to_json(), str(sp), output)
    elif what == "stanley":
        fn = stanley(letter, _element(options), options["variant"], options["k"], options["l"])
        _emit(fn.to_json(), str(fn), output)
    elif what == "reverse":
        m = options["m"] or 0
        w = coerce_element("A", options["w"] or "e")
        value = reverse_schubert(w, m)
        _emit({"object": what, "w": str(w), "m": m, "value": value_to_json(value)}, format_poly(value), output)
    else:
        if not options.get("shape"):
            raise InvalidOption("--shape is required")
        k = max(options["k"] or 0, 0)
        if what == "theta":
            parts = tuple(int(p) for p in options["shape"].split(",") if p.strip())
            shape = KStrictPartition(parts, k)
            value = theta(shape, double=options["double"])
        else:
            shape = TypedKStrictPartition.parse(options["shape"], k)
            value = eta(shape, double=options["double"])
        data = {"object": what, "shape": _shape_label(shape), "k": k, "value": value_to_json(value)}
        _emit(data, format_value(value), output)
    return EXIT_OK


def _expand(options: dict[str, Any], output: str) -> int:
    letter = options["type"]
    w = _element(options)
    if options.get("flags_a") or options.get("flags_b"):
        kind = Kind.from_type(letter)
        a = FlagSequence.parse(kind, options.get("flags_a") or "")
        b = FlagSequence.parse(kind, options.get("flags_b") or "")
        table = splitting_expand(letter, w, a, b)
        coefficients = {" | ".join(_shape_label(s) for s in shapes): c for shapes, c in table.items()}
    else:
        basis = options["basis"] or _default_basis(letter)
        if basis in (BASIS_SCHUR, BASIS_THETA, BASIS_ETA):
            found = stanley_coefficients(letter, w, options["k"])
            coefficients = {_shape_label(shape): c for shape, c in found.items()}
        else:
            value = schubert(letter, w, double=False).value
            found = basis_expand(value, basis, integral=basis == BASIS_Q)
            coefficients = {_shape_label(lam): format_poly(c) for lam, c in found.items()}
    text = "\n".join(f"{label}: {c}" for label, c in coefficients.items())
    _emit(dict(coefficients), text, output)
    return EXIT_OK


def _default_basis(letter: str) -> str:
    return {"A": BASIS_SCHUR, "B": BASIS_P, "C": BASIS_THETA, "D": BASIS_ETA}[letter]


def _verify(options: dict[str, Any], output: str) -> int:
    params = {key: options[key] for key in ("w", "k", "l", "m") if options.get(key) is not None}
    type_letter = options["type"] if options["type_given"] else None
    reports = run_suites(options["suite"], type_letter, options["n"], options["max_n"], **params)
    if output == "json":
        print(json.dumps([report.to_dict() for report in reports], indent=2, sort_keys=True))
    else:
        for report in reports:
            counts = report.counts()
            status = "PASS" if report.passed else "FAIL"
            print(f"{status} {report.suite}: {counts['passed']}/{counts['total']} checks passed")
            failures = report.failures()
            if failures:
                first = failures[0]
                print(f"  first counterexample: {first.identity} {first.inputs}: {first.detail}")
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED


def _corpus(options: dict[str, Any], output: str) -> int:
    out = Path(options.get("out") or "corpus")
    out.mkdir(parents=True, exist_ok=True)
    for letter in SCHUBERT_TYPES:
        kind = Kind.from_type(letter)
        entries = []
        low = 2 if kind is Kind.D else 1
        for n in range(low, options["max_n"] + 1):
            for w in iter_group(kind, n):
                if any(entry["w"] == str(w) for entry in entries):
                    continue
                entries.append(schubert(letter, w).to_json())
        path = out / f"schubert_{letter}.json"
        path.write_text(json.dumps(entries, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        _LOGGER.info("Wrote %d polynomials to %s", len(entries), path)
    return EXIT_OK


_DISPATCH = {
    "compute": _compute,
    "expand": _expand,
    "verify": _verify,
    "corpus": _corpus,
}


def run(options: dict[str, Any]) -> int:
    """Validate parsed arguments and dispatch to the subcommand."""
    type_given = options.get("type") is not None
    try:
        options = COMMAND_SCHEMA({key: value for key, value in options.items() if value is not None})
    except vol.Invalid as err:
        _LOGGER.error("Invalid arguments: %s", err)
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    options["type_given"] = type_given
    options.setdefault("double", True)
    try:
        settings = set_options(
            {
                CONF_DEGREE_CAP: options.get("degree_cap"),
                CONF_JOBS: options.get("jobs"),
                CONF_OUTPUT_FORMAT: options.get("format"),
            }
        )
        return _DISPATCH[options["command"]](options, settings[CONF_OUTPUT_FORMAT])
    except USAGE_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except SchubertKitError as err:
        _LOGGER.exception("Command %s failed", options["command"])
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_FAILED


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)
    return run(vars(args))


if __name__ == "__main__":
    sys.exit(main())
