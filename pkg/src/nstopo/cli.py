"""``nstopo`` command line.

Exit status: 0 success (or "is a topology"), 1 usage/parse error,
2 check failed, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import NSError, ParseError, ResourceLimitError
from .family import NSFamily
from .formatting import RenderOptions, render_family
from .script import family_from_document, family_to_document, parse_script
from .topology import (
    DEFAULT_MAX_SIZE,
    generate_base,
    topology_from_base,
    topology_from_subbase,
    topology_violations,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_TOPOLOGY = 2
EXIT_LIMIT = 3

MAX_SIZE_ENV = "NSTOPO_MAX_SIZE"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nstopo", description="Neutrosophic topologies from bases and sub-bases.")
    parser.add_argument("command", choices=("base", "topology", "check", "render"))
    parser.add_argument("script", help=".nst script, or a JSON document written by --json-out")
    parser.add_argument("--family", required=True, help="identifier of the family to use")
    parser.add_argument(
        "--from",
        dest="from_mode",
        choices=("base", "subbase"),
        default=None,
        help="topology: treat the family as a basis or sub-basis (default subbase); "
        "check/render: generate the topology this way first",
    )
    parser.add_argument("--tabular", action="store_true")
    parser.add_argument("--label", action="store_true")
    parser.add_argument("--extended", action="store_true")
    parser.add_argument("--json-out", action="store_true", help="emit a JSON document instead of text")
    parser.add_argument("--max-size", type=int, default=None, help=f"cap on family size (default {DEFAULT_MAX_SIZE})")
    parser.add_argument("--name", default=None, help="name for the generated family")
    return parser


def _max_size(arg: Optional[int]) -> int:
    if arg is not None:
        value = arg
    else:
        raw = os.environ.get(MAX_SIZE_ENV)
        if raw is None:
            return DEFAULT_MAX_SIZE
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"{MAX_SIZE_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("the size cap must be non-negative")
    return value


def load_family(path: str, identifier: str) -> NSFamily:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not UTF-8") from None
    if path.endswith(".json") or text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
        if not isinstance(doc, dict):
            raise ParseError("JSON document must be an object")
        family = family_from_document(doc)
        if family.name != identifier:
            raise UsageError(f"document holds family {family.name!r}, not {identifier!r}")
        return family
    doc = parse_script(text)
    if identifier not in doc.ids("family"):
        raise UsageError(f"no family {identifier!r} in {path}")
    return doc.family(identifier)


def _generate(family: NSFamily, mode: str, cap: int) -> NSFamily:
    if mode == "base":
        return topology_from_base(family, cap)
    return topology_from_subbase(family, cap)


def run(args: argparse.Namespace, out) -> int:
    cap = _max_size(args.max_size)
    family = load_family(args.script, args.family)
    opts = RenderOptions(args.tabular, args.label, args.extended)

    if args.command == "check":
        if args.from_mode:
            family = _generate(family, args.from_mode, cap)
        violations = topology_violations(family)
        if args.json_out:
            verdict = {
                "family": family.name,
                "topology": not violations,
                "violations": [
                    {"condition": v.condition, "witness": [s.name for s in v.pair] if v.pair else None}
                    for v in violations
                ],
            }
            out.write(json.dumps(verdict, ensure_ascii=False) + "\n")
        elif not violations:
            out.write("true\n")
        else:
            out.write("false\n" + "".join(v.describe() + "\n" for v in violations))
        return EXIT_OK if not violations else EXIT_NOT_TOPOLOGY

    header = ""
    if args.command == "base":
        result = generate_base(family, cap).named(args.name or "B")
    elif args.command == "topology":
        result = _generate(family, args.from_mode or "subbase", cap).named(args.name or "T")
        header = f"topology has cardinality {len(result)} and is:\n"
    else:
        result = family
        if args.from_mode:
            result = _generate(family, args.from_mode, cap).named(args.name or "T")
        elif args.name:
            result = result.named(args.name)

    if args.json_out:
        out.write(json.dumps(family_to_document(result), ensure_ascii=False, indent=2) + "\n")
        return EXIT_OK
    text = render_family(result, opts)
    out.write(header + text + ("" if text.endswith("\n") else "\n"))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(args, sys.stdout)
    except ResourceLimitError as exc:
        print(f"nstopo: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, NSError) as exc:
        print(f"nstopo: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
