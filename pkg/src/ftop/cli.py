"""Command-line front end.

Subcommands:

* ``validate <space>`` checks a space document against the topology
  axioms (or closes a subbasis).
* ``classify set <name> --space <file>`` reports the four openness
  verdicts for one named set, with the operator values as evidence.
* ``classify fn --fn <file>`` reports the eight verdicts for a crisp map
  between two finite spaces, with a witness for every failure.
* ``search --target <have>-not-<avoid> --space <file> --grid k`` hunts
  for a grid set separating two classes.
* ``verify --seeds N --universe-size n --grid k [--cap M]`` runs the
  randomized self-check campaign.

Reports go to stdout, as JSON (``--format json``) or as an equivalent
plain-text rendering of the same data; timing and error diagnostics go
to stderr, so JSON output is byte-identical across runs with the same
inputs.  Exit codes: 0 success or all-pass, 1 negative outcome (invalid
topology, witness not found, campaign violation), 2 input error, 3
resource cap exceeded.  ``FTOP_CAP`` in the environment overrides the
default generation cap; ``--cap`` overrides both.

A ``--space``/``--fn`` argument is first tried as a filesystem path and
then as the name of a bundled document, so ``ftop validate example1.json``
works from any directory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from .documents import (
    build_function,
    build_topology,
    parse_function,
    parse_space,
    set_as_data,
)
from .errors import DocumentError, FtopError, ResourceCapError
from .functions import classify_function
from .oracle import GridSpec, SearchTarget, find_witness, run_campaign
from .semiclass import classify_set
from .topology import InvalidTopologyError

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _read_document(name: str) -> str:
    path = Path(name)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    if "/" not in name and "\\" not in name:
        bundled = resources.files("ftop") / "data" / name
        if bundled.is_file():
            return bundled.read_text(encoding="utf-8")
    raise DocumentError("missing-file", f"no such file or bundled document: {name}")


def _generation_cap(args: argparse.Namespace) -> int | None:
    cap = getattr(args, "cap", None)
    if cap is not None:
        return cap
    env = os.environ.get("FTOP_CAP")
    if env is None:
        return None
    try:
        cap = int(env)
    except ValueError:
        raise DocumentError("bad-cap", f"FTOP_CAP must be an integer, got {env!r}")
    if cap < 1:
        raise DocumentError("bad-cap", f"FTOP_CAP must be positive, got {cap}")
    return cap


def _render_scalar(value: Any) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "null"
    return str(value)


def _render_text(value: Any, lines: list[str], indent: int = 0, label: str | None = None) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if label is not None:
            lines.append(f"{pad}{label}:")
            indent += 1
        for key, item in value.items():
            _render_text(item, lines, indent, key)
    elif isinstance(value, list):
        if all(not isinstance(item, (dict, list)) for item in value):
            rendered = ", ".join(_render_scalar(item) for item in value)
            lines.append(f"{pad}{label}: [{rendered}]")
        else:
            lines.append(f"{pad}{label}:")
            for i, item in enumerate(value):
                _render_text(item, lines, indent + 1, f"[{i}]")
    else:
        lines.append(f"{pad}{label}: {_render_scalar(value)}")


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        lines: list[str] = []
        _render_text(report, lines)
        sys.stdout.write("\n".join(lines) + "\n")


def _cmd_validate(args: argparse.Namespace) -> tuple[dict, int]:
    doc = parse_space(_read_document(args.space))
    report: dict[str, Any] = {
        "command": "validate",
        "space": args.space,
        "kind": doc.kind,
        "topology_is": doc.topology_is,
    }
    try:
        space = build_topology(doc, cap=_generation_cap(args))
    except InvalidTopologyError as exc:
        report["valid"] = False
        report["violations"] = [
            {
                "axiom": violation.axiom,
                "detail": violation.detail,
                "witnesses": [set_as_data(w) for w in violation.witnesses],
            }
            for violation in exc.violations
        ]
        return report, EXIT_NEGATIVE
    report["valid"] = True
    report["members"] = len(space)
    return report, EXIT_OK


def _cmd_classify_set(args: argparse.Namespace) -> tuple[dict, int]:
    doc = parse_space(_read_document(args.space))
    space = build_topology(doc, cap=_generation_cap(args))
    value = doc.resolve(args.name)
    classification = classify_set(space, value)
    report = {
        "command": "classify set",
        "space": args.space,
        "set": args.name,
        "verdicts": classification.verdicts(),
        "evidence": {
            "interior": set_as_data(classification.interior),
            "closure": set_as_data(classification.closure),
            "semi_interior": set_as_data(classification.semi_interior),
            "semi_closure": set_as_data(classification.semi_closure),
        },
    }
    return report, EXIT_OK


def _cmd_classify_fn(args: argparse.Namespace) -> tuple[dict, int]:
    doc = parse_function(_read_document(args.fn))
    fn = build_function(doc, cap=_generation_cap(args))
    classification = classify_function(fn)
    report = {
        "command": "classify fn",
        "fn": args.fn,
        "map": {x: y for x, y in doc.map},
        "verdicts": classification.verdicts(),
        "witnesses": {
            name: set_as_data(witness)
            for name, witness in classification.witnesses.items()
        },
    }
    return report, EXIT_OK


def _cmd_search(args: argparse.Namespace) -> tuple[dict, int]:
    doc = parse_space(_read_document(args.space))
    if doc.kind != "finite":
        raise DocumentError("schema", "search needs a finite-kind space", "$.kind")
    space = build_topology(doc, cap=_generation_cap(args))
    target = SearchTarget.parse(args.target)
    spec = GridSpec(len(space.universe), args.grid)
    witness = find_witness(space, target, spec)
    report: dict[str, Any] = {
        "command": "search",
        "space": args.space,
        "target": str(target),
        "grid": args.grid,
        "found": witness is not None,
    }
    if witness is None:
        # Absence on this grid proves nothing about finer grids.
        report["witness"] = None
        return report, EXIT_NEGATIVE
    report["witness"] = set_as_data(witness)
    report["witness_verdicts"] = classify_set(space, witness).verdicts()
    return report, EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> tuple[dict, int]:
    cap = _generation_cap(args)
    kwargs = {} if cap is None else {"budget": cap}
    result = run_campaign(args.seeds, args.universe_size, args.grid, **kwargs)
    report = {"command": "verify", **result.as_dict()}
    return report, EXIT_OK if result.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ftop",
        description="Exact computations in finite and piecewise-linear fuzzy topologies.",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default=argparse.SUPPRESS,
            help="report format",
        )

    p_validate = sub.add_parser("validate", help="check a space document")
    p_validate.add_argument("space", help="space document (path or bundled name)")
    p_validate.add_argument("--cap", type=int, help="generation cap for subbasis documents")
    add_format(p_validate)
    p_validate.set_defaults(handler=_cmd_validate)

    p_classify = sub.add_parser("classify", help="classify a set or a function")
    classify_sub = p_classify.add_subparsers(dest="what", required=True)

    p_set = classify_sub.add_parser("set", help="four openness verdicts for one set")
    p_set.add_argument("name", help="set name from the document (or 0/1)")
    p_set.add_argument("--space", required=True, help="space document (path or bundled name)")
    p_set.add_argument("--cap", type=int, help="generation cap for subbasis documents")
    add_format(p_set)
    p_set.set_defaults(handler=_cmd_classify_set)

    p_fn = classify_sub.add_parser("fn", help="eight verdicts for a crisp map")
    p_fn.add_argument("--fn", required=True, help="function document (path or bundled name)")
    p_fn.add_argument("--cap", type=int, help="generation cap for subbasis documents")
    add_format(p_fn)
    p_fn.set_defaults(handler=_cmd_classify_fn)

    p_search = sub.add_parser("search", help="hunt for a class-separating set")
    p_search.add_argument(
        "--target", required=True, help="class combination, e.g. semiopen-not-open"
    )
    p_search.add_argument("--space", required=True, help="finite space document")
    p_search.add_argument("--grid", type=int, required=True, help="grid denominator k")
    p_search.add_argument("--cap", type=int, help="generation cap for subbasis documents")
    add_format(p_search)
    p_search.set_defaults(handler=_cmd_search)

    p_verify = sub.add_parser("verify", help="run the randomized self-check campaign")
    p_verify.add_argument("--seeds", type=int, default=100, help="number of seeded cases")
    p_verify.add_argument("--universe-size", type=int, default=3, help="points per universe")
    p_verify.add_argument("--grid", type=int, default=3, help="grid denominator k")
    p_verify.add_argument("--cap", type=int, help="enumeration budget override")
    add_format(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report, code = args.handler(args)
    except DocumentError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapError as exc:
        print(f"error[cap]: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvalidTopologyError as exc:
        print(f"error[invalid-topology]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FtopError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    elapsed = time.perf_counter() - started
    _emit(report, getattr(args, "format", "text"))
    print(f"{args.subcommand}: finished in {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
