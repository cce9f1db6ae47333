"""Command-line front end: a thin client over the service handlers.

Every subcommand builds the same request model the HTTP service accepts and
either calls the handler in-process (default) or posts it to a running
service (--server).  Exit codes: 0 success / all checks pass, 1 any failed
check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from pydantic import BaseModel, ValidationError

from . import __version__
from .matrix import SpecializationError
from .ratq import PoleError
from .service import handlers, schemas

_ENDPOINTS = {
    "verify": ("/verify", handlers.verify, schemas.VerifyRequest, schemas.VerifyResponse),
    "dim": ("/dim", handlers.dim, schemas.DimRequest, schemas.DimResponse),
    "basis": ("/basis", handlers.basis, schemas.BasisRequest, schemas.BasisResponse),
    "reduce": ("/reduce", handlers.reduce_word, schemas.ReduceRequest, schemas.ElementResponse),
    "multiply": (
        "/multiply",
        handlers.multiply_keys,
        schemas.MultiplyRequest,
        schemas.ElementResponse,
    ),
    "structure-constants": (
        "/structure-constants",
        handlers.structure,
        schemas.StructureConstantsRequest,
        schemas.StructureConstantsResponse,
    ),
    "appendix": ("/appendix", handlers.appendix, schemas.AppendixRequest, schemas.AppendixResponse),
    "remark45": ("/remark45", handlers.remark45, schemas.Remark45Request, schemas.Remark45Response),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="awbraid",
        description="Exact three-strand Askey-Wilson braid algebra toolkit",
    )
    parser.add_argument("--version", action="version", version=f"awbraid {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def spin_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--spin", type=int, required=True, metavar="N",
                       help="doubled spin (3 means s = 3/2)")
        p.add_argument("--unsafe-large-spin", action="store_true",
                       help="allow spins beyond the verified desk scale")
        p.add_argument("--json", action="store_true", help="emit the JSON response")
        p.add_argument("--server", metavar="URL",
                       help="send the request to a running service instead of in-process")

    p = sub.add_parser("verify", help="run the verification suite or one named check")
    spin_args(p)
    p.add_argument("--check", metavar="NAME",
                   help="one report name or group (core, crosscheck, tl, bmw)")

    p = sub.add_parser("dim", help="print the centralizer dimension")
    spin_args(p)

    p = sub.add_parser("basis", help="print the standard or path basis")
    spin_args(p)
    p.add_argument("--kind", choices=("std", "path"), default="std")

    p = sub.add_parser("reduce", help="normal form of a braid word")
    spin_args(p)
    p.add_argument("--word", required=True, metavar="WORD",
                   help='tokens s1, s2, s1^-1, s2^-1, e.g. "s1 s2 s1^-1"')

    p = sub.add_parser("multiply", help="product of two standard-basis keys")
    spin_args(p)
    p.add_argument("--x", required=True, metavar="a,c,p")
    p.add_argument("--y", required=True, metavar="a,c,p")

    p = sub.add_parser("structure-constants", help="the full multiplication table")
    spin_args(p)
    p.add_argument("--method", choices=("abstract", "matrix"), default="abstract")
    p.add_argument("--specialization", metavar="Q0",
                   help="rational point like 3/5 (matrix method at s >= 3/2)")
    p.add_argument("--out", metavar="FILE", help="write the JSON table to a file")

    p = sub.add_parser("appendix", help="the level-a kappa polynomial and its root-of-unity limit")
    spin_args(p)
    p.add_argument("--a", type=int, required=True, metavar="A", help="level with s < a <= 2s")

    p = sub.add_parser("remark45", help="multiplicity of (kappa - chi_s) in the raw contraction")
    spin_args(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _parse_key(text: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise handlers.UsageError(f"basis keys are a,c,p triples, got {text!r}")
    try:
        return [int(x) for x in parts]
    except ValueError as exc:
        raise handlers.UsageError(f"basis keys are integer triples, got {text!r}") from exc


def _make_request(args: argparse.Namespace) -> BaseModel:
    common = {"spin": args.spin, "unsafe_large_spin": args.unsafe_large_spin}
    try:
        if args.command == "verify":
            return schemas.VerifyRequest(**common, check=args.check)
        if args.command == "dim":
            return schemas.DimRequest(**common)
        if args.command == "basis":
            return schemas.BasisRequest(**common, kind=args.kind)
        if args.command == "reduce":
            return schemas.ReduceRequest(**common, word=args.word)
        if args.command == "multiply":
            return schemas.MultiplyRequest(
                **common, x=_parse_key(args.x), y=_parse_key(args.y)
            )
        if args.command == "structure-constants":
            return schemas.StructureConstantsRequest(
                **common, method=args.method, specialization=args.specialization
            )
        if args.command == "appendix":
            return schemas.AppendixRequest(**common, a=args.a)
        if args.command == "remark45":
            return schemas.Remark45Request(**common)
    except ValidationError as exc:
        raise handlers.UsageError(str(exc)) from exc
    raise handlers.UsageError(f"unknown command {args.command!r}")


def _dispatch(args: argparse.Namespace, request: BaseModel) -> BaseModel:
    path, handler, _, response_model = _ENDPOINTS[args.command]
    if args.server:
        import httpx

        reply = httpx.post(
            args.server.rstrip("/") + path, json=request.model_dump(), timeout=None
        )
        if reply.status_code == 400 or reply.status_code == 422:
            raise handlers.UsageError(reply.text)
        reply.raise_for_status()
        return response_model.model_validate(reply.json())
    return handler(request)


def _coeff_str(coeff: dict) -> str:
    from .serialize import ratq_from_json

    return str(ratq_from_json(coeff))


def _render(args: argparse.Namespace, response: BaseModel, out) -> int:
    if args.json:
        print(json.dumps(response.model_dump(), indent=2), file=out)
    elif isinstance(response, schemas.VerifyResponse):
        for r in response.reports:
            line = f"{'PASS' if r.status == 'pass' else 'FAIL'} {r.name}"
            if r.witness:
                line += f": {r.witness}"
            print(line, file=out)
        verdict = "all checks passed" if response.all_pass else "some checks FAILED"
        print(f"spin {response.spin}/2: {verdict} ({len(response.reports)} checks)", file=out)
    elif isinstance(response, schemas.DimResponse):
        print(response.dimension, file=out)
    elif isinstance(response, schemas.BasisResponse):
        if response.kind == "std":
            for a, c, p in response.keys or []:
                print(f"{a} {c} {p}", file=out)
        else:
            for levels in response.paths or []:
                print(" ".join(str(x) for x in levels), file=out)
    elif isinstance(response, schemas.ElementResponse):
        if not response.terms:
            print("0", file=out)
        for term in response.terms:
            print(
                f"[{term['a']},{term['c']},{term['p']}] {_coeff_str(term['coeff'])}",
                file=out,
            )
    elif isinstance(response, schemas.StructureConstantsResponse):
        print(json.dumps(response.model_dump(), indent=2), file=out)
    elif isinstance(response, schemas.AppendixResponse):
        from .serialize import kpoly_from_json

        print(f"Q_{response.a} = {kpoly_from_json(response.q_poly)}", file=out)
        print(f"limit at the primitive {response.order}-th root: "
              f"{_cyclo_str(response.value_at_root)}", file=out)
        print(f"reference value: {_cyclo_str(response.reference)}", file=out)
        print(f"equal: {response.equal}  nonzero: {response.nonzero}", file=out)
    elif isinstance(response, schemas.Remark45Response):
        print(response.multiplicity, file=out)
    else:
        print(json.dumps(response.model_dump(), indent=2), file=out)
    if isinstance(response, schemas.VerifyResponse) and not response.all_pass:
        return 1
    if isinstance(response, schemas.AppendixResponse) and not (
        response.equal and response.nonzero
    ):
        return 1
    return 0


def _cyclo_str(data: dict) -> str:
    from .serialize import cyclo_from_json

    return str(cyclo_from_json(data))


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0
    try:
        request = _make_request(args)
        response = _dispatch(args, request)
    except handlers.UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SpecializationError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.command == "structure-constants" and args.out:
        with open(args.out, "w") as fh:
            json.dump(response.model_dump(), fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.out}")
        return 0
    return _render(args, response, sys.stdout)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
