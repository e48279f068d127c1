"""Command-line front end.

The CLI is a thin client of the HTTP service: every command issues a
request against the FastAPI app, by default over an in-process transport
(no server needed), or over the network when --url / DNACODES_URL points
at a running instance.  Exit codes: 0 success, 1 verification failure,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from pathlib import Path

import httpx

VERIFY_FAILED = 1
USAGE_ERROR = 2


def _client(url: str | None) -> httpx.AsyncClient:
    if url:
        return httpx.AsyncClient(base_url=url, timeout=600.0)
    from .service.app import create_app
    transport = httpx.ASGITransport(app=create_app())
    return httpx.AsyncClient(transport=transport, base_url="http://dnacodes",
                             timeout=600.0)


class ServiceError(Exception):
    def __init__(self, detail):
        super().__init__(str(detail))
        self.detail = detail


async def _post(client: httpx.AsyncClient, path: str, payload: dict) -> dict:
    resp = await client.post(path, json=payload)
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise ServiceError(detail)
    return resp.json()


def _emit_codebook(client_factory, data: dict, args) -> int:
    payload = {"codebook": data["codebook"], "format": args.format}
    exported = asyncio.run(_run_post(client_factory, "/export", payload))
    content = exported["content"]
    if args.output:
        Path(args.output).write_text(content, encoding="utf-8")
    else:
        sys.stdout.write(content)
    return 0


async def _run_post(client_factory, path, payload):
    async with client_factory() as client:
        return await _post(client, path, payload)


def _read_codebook_payload(path: str, fmt: str, alphabet: str, client_factory):
    content = Path(path).read_text(encoding="utf-8")
    data = asyncio.run(_run_post(client_factory, "/import",
                                 {"content": content, "format": fmt,
                                  "alphabet": alphabet}))
    return data["codebook"]


def cmd_construct(args, client_factory) -> int:
    if args.family == "gau-rm":
        data = asyncio.run(_run_post(client_factory, "/construct/gau-rm",
                                     {"r": args.r, "m": args.m, "z": args.z}))
        print(f"# predicted {data['predicted']}", file=sys.stderr)
    elif args.family == "quinary":
        data = asyncio.run(_run_post(client_factory, "/construct/quinary",
                                     {"k": args.k}))
        print(f"# predicted {data['predicted']}", file=sys.stderr)
    else:  # nho
        payload = {"x": args.x, "y": args.y}
        if os.path.exists(args.code):
            content = Path(args.code).read_text(encoding="utf-8")
            imported = asyncio.run(_run_post(client_factory, "/import",
                                             {"content": content,
                                              "format": "codebook",
                                              "alphabet": "binary"}))
            payload["words"] = imported["codebook"]["words"]
        else:
            payload["code"] = args.code
        data = asyncio.run(_run_post(client_factory, "/construct/nho", payload))
        print(f"# admissibility {json.dumps(data['admissibility'])}",
              file=sys.stderr)
    return _emit_codebook(client_factory, data, args)


def cmd_verify(args, client_factory) -> int:
    codebook = _read_codebook_payload(args.input, args.input_format,
                                      args.alphabet, client_factory)
    data = asyncio.run(_run_post(client_factory, "/verify",
                                 {"codebook": codebook,
                                  "constraints": args.constraints}))
    print(json.dumps(data["reports"], indent=2))
    return 0 if data["passed"] else VERIFY_FAILED


def cmd_distance(args, client_factory) -> int:
    payload = {"metric": args.metric, "a": args.a, "b": args.b}
    if args.l is not None:
        payload["l"] = args.l
    data = asyncio.run(_run_post(client_factory, "/distance", payload))
    print(json.dumps(data))
    return 0


def _parse_values(raw: str | None) -> dict:
    values = {}
    if raw:
        for token in raw.split(","):
            token = token.strip()
            if not token:
                continue
            key, eq, val = token.partition("=")
            if not eq:
                raise ValueError(f"expected key=value, got {token!r}")
            values[key.strip()] = int(val)
    return values


def cmd_bounds(args, client_factory) -> int:
    payload = {"name": args.name, "values": _parse_values(args.salt_values)}
    for key in ("n", "d", "w", "a_prev", "variant"):
        value = getattr(args, key.replace("-", "_"), None)
        if value is not None:
            payload[key] = value
    data = asyncio.run(_run_post(client_factory, "/bounds", payload))
    print(json.dumps({k: v for k, v in data.items() if v is not None}))
    return 0


def cmd_info(args, client_factory) -> int:
    codebook = _read_codebook_payload(args.input, args.input_format,
                                      args.alphabet, client_factory)
    data = asyncio.run(_run_post(client_factory, "/info", codebook))
    print(json.dumps(data, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnacodes",
        description="Construct, verify and bound DNA codes.")
    parser.add_argument("--url", default=os.environ.get("DNACODES_URL"),
                        help="base URL of a running service "
                             "(default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a DNA code")
    fam = construct.add_subparsers(dest="family", required=True)

    gau = fam.add_parser("gau-rm", help="Reed-Muller-type code over Z4+uZ4")
    gau.add_argument("--r", type=int, required=True)
    gau.add_argument("--m", type=int, required=True)
    gau.add_argument("--z", required=True, help="nonzero ring element, e.g. 2u")

    quin = fam.add_parser("quinary", help="Z5 block-code family")
    quin.add_argument("--k", type=int, required=True, choices=range(2, 6))

    nho_p = fam.add_parser("nho", help="non-homopolymer map on a binary code")
    nho_p.add_argument("--code", required=True,
                       help="builtin name (repetition4, hamming_7_4, "
                            "golay_23_12) or a codebook file")
    nho_p.add_argument("--x", required=True)
    nho_p.add_argument("--y", required=True)

    for p in (gau, quin, nho_p):
        p.add_argument("--output", help="write here instead of stdout")
        p.add_argument("--format", default="codebook",
                       choices=["codebook", "fasta", "csv"])

    verify = sub.add_parser("verify", help="check constraints on a codebook")
    verify.add_argument("--input", required=True)
    verify.add_argument("--constraints", required=True,
                        help="comma list, e.g. hamming:3,rc:3,gc,tandem:2")
    verify.add_argument("--input-format", default="codebook",
                        choices=["codebook", "fasta", "csv"])
    verify.add_argument("--alphabet", default="DNA",
                        choices=["DNA", "binary", "quinary", "ringR"])

    distance = sub.add_parser("distance", help="distance between two words")
    distance.add_argument("metric", choices=["hamming", "gau", "nho"])
    distance.add_argument("--a", required=True)
    distance.add_argument("--b", required=True)
    distance.add_argument("--l", type=int, help="block length (nho)")

    bounds_p = sub.add_parser("bounds", help="evaluate a bound or relation")
    bounds_p.add_argument("name")
    bounds_p.add_argument("--n", type=int)
    bounds_p.add_argument("--d", type=int)
    bounds_p.add_argument("--w", type=int)
    bounds_p.add_argument("--a-prev", type=int, dest="a_prev")
    bounds_p.add_argument("--variant", choices=["w-1", "w"])
    bounds_p.add_argument("--salt-values", dest="salt_values",
                          help="named quantities, e.g. A4r=8,A4=16")

    info = sub.add_parser("info", help="parameters and profiles of a codebook")
    info.add_argument("--input", required=True)
    info.add_argument("--input-format", default="codebook",
                      choices=["codebook", "fasta", "csv"])
    info.add_argument("--alphabet", default="DNA",
                      choices=["DNA", "binary", "quinary", "ringR"])

    return parser


_COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "distance": cmd_distance,
    "bounds": cmd_bounds,
    "info": cmd_info,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    def client_factory():
        return _client(args.url)

    try:
        return _COMMANDS[args.command](args, client_factory)
    except (ServiceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
