"""Command-line front end: a thin client over the service handlers.

Exit codes: 0 success, 1 verification failure (counterexample in the
report), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from pydantic import BaseModel, ValidationError

from . import __version__
from .errors import InputError, ResourceLimitError
from .service import handlers, models


def _load_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument(
        "--json", dest="fmt", action="store_const", const="json", default="json",
        help="emit the report as JSON (default)",
    )
    fmt.add_argument(
        "--text", dest="fmt", action="store_const", const="text",
        help="emit the report as key: value lines",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freewreath",
        description=(
            "Schreier transversals, Nielsen-Schreier bases, wreath-product "
            "embeddings, and extension reports for free and finite permutation groups."
        ),
    )
    parser.add_argument("--version", action="version", version=f"freewreath {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transversal", help="prefix-closed coset representatives")
    p.add_argument("--rep", required=True, metavar="FILE", help="subgroup spec JSON")
    _add_output_flags(p)

    p = sub.add_parser("basis", help="Nielsen-Schreier basis of the subgroup")
    p.add_argument("--rep", required=True, metavar="FILE")
    _add_output_flags(p)

    p = sub.add_parser("rewrite", help="express a subgroup element in the basis")
    p.add_argument("--rep", required=True, metavar="FILE")
    p.add_argument("--word", required=True, metavar="STRING")
    _add_output_flags(p)

    p = sub.add_parser("embed", help="wreath-product embedding of a finite group")
    p.add_argument("--group", required=True, metavar="FILE",
                   help="finite-group JSON with subgroup_generators")
    _add_output_flags(p)

    p = sub.add_parser("extend", help="extend basis values through the wreath product")
    p.add_argument("--rep", required=True, metavar="FILE")
    p.add_argument("--group", required=True, metavar="FILE", help="target-group JSON")
    p.add_argument("--assign", required=True, metavar="FILE", help="assignment JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=50)
    _add_output_flags(p)

    p = sub.add_parser("witness", help="separating finite quotient for a word")
    p.add_argument("--word", required=True, metavar="STRING")
    p.add_argument("--alphabet", metavar="NAMES",
                   help="comma- or space-separated generator names (default: inferred)")
    _add_output_flags(p)

    p = sub.add_parser("verify", help="run the invariant suite for the given inputs")
    p.add_argument("--rep", metavar="FILE")
    p.add_argument("--group", metavar="FILE")
    p.add_argument("--assign", metavar="FILE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    _add_output_flags(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args: argparse.Namespace) -> BaseModel:
    if args.command == "transversal":
        request = models.TransversalRequest(
            rep=models.RepSpec.model_validate(_load_json(args.rep))
        )
        return handlers.handle_transversal(request)
    if args.command == "basis":
        request = models.BasisRequest(
            rep=models.RepSpec.model_validate(_load_json(args.rep))
        )
        return handlers.handle_basis(request)
    if args.command == "rewrite":
        request = models.RewriteRequest(
            rep=models.RepSpec.model_validate(_load_json(args.rep)), word=args.word
        )
        return handlers.handle_rewrite(request)
    if args.command == "embed":
        request = models.EmbedRequest(
            group=models.SubgroupedGroupSpec.model_validate(_load_json(args.group))
        )
        return handlers.handle_embed(request)
    if args.command == "extend":
        request = models.ExtendRequest(
            rep=models.RepSpec.model_validate(_load_json(args.rep)),
            target=models.GroupSpec.model_validate(_load_json(args.group)),
            assignment=models.AssignmentSpec.model_validate(_load_json(args.assign)),
            seed=args.seed,
            samples=args.samples,
        )
        return handlers.handle_extend(request)
    if args.command == "witness":
        alphabet = None
        if args.alphabet is not None:
            alphabet = [n for n in args.alphabet.replace(",", " ").split() if n]
        request = models.WitnessRequest(word=args.word, alphabet=alphabet)
        return handlers.handle_witness(request)
    if args.command == "verify":
        request = models.VerifyRequest(
            rep=(
                models.RepSpec.model_validate(_load_json(args.rep))
                if args.rep is not None
                else None
            ),
            group=(
                models.SubgroupedGroupSpec.model_validate(_load_json(args.group))
                if args.group is not None
                else None
            ),
            assignment=(
                models.AssignmentSpec.model_validate(_load_json(args.assign))
                if args.assign is not None
                else None
            ),
            seed=args.seed,
            samples=args.samples,
        )
        return handlers.handle_verify(request)
    raise InputError(f"unknown subcommand {args.command!r}")


def _render_text(report: BaseModel) -> str:
    lines = []
    for key, value in report.model_dump().items():
        if isinstance(value, list) and all(isinstance(v, (str, int, bool)) for v in value):
            lines.append(f"{key}: {', '.join(str(v) for v in value)}")
        elif isinstance(value, (dict, list)):
            lines.append(f"{key}: {json.dumps(value)}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        uvicorn.run("freewreath.service.app:app", host=args.host, port=args.port)
        return 0
    try:
        report = _dispatch(args)
    except ValidationError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.fmt == "text":
        print(_render_text(report))
    else:
        print(report.model_dump_json(indent=2))
    if not getattr(report, "all_passed", True):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
