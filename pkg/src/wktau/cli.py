"""Thin command-line client.

Parsing and rendering live here; all computation goes through the service
layer, either in process (the default) or against a running server via
``--server URL``.  Exit codes: 0 success, 2 usage error, 3 verification
failure, 4 resource limit.
"""

import argparse
import json
import sys

from .errors import BudgetError, UsageError
from .service import (
    AmatrixRequest,
    ExpandRequest,
    IntersectRequest,
    VerifyRequest,
    handle_amatrix,
    handle_expand,
    handle_intersect,
    handle_verify,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4


def _build_parser():
    # Common flags are accepted both before and after the subcommand; the
    # SUPPRESS defaults keep a subparser from clobbering a value that was
    # already parsed at the top level.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server",
        metavar="URL",
        default=argparse.SUPPRESS,
        help="send the request to a running service instead of computing here",
    )
    common.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default=argparse.SUPPRESS,
        help="output format (default: text)",
    )
    common.add_argument(
        "--output",
        metavar="FILE",
        default=argparse.SUPPRESS,
        help="write output to FILE instead of stdout",
    )
    common.add_argument(
        "--approx",
        action="store_true",
        default=argparse.SUPPRESS,
        help=(
            "append non-authoritative decimal approximations to text output "
            "(exact strings remain the only authoritative values)"
        ),
    )

    parser = argparse.ArgumentParser(
        prog="wktau",
        description=(
            "Exact Witten-Kontsevich tau-function toolkit: coefficient "
            "tables, series expansions, intersection numbers and "
            "verification suites."
        ),
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_am = sub.add_parser(
        "amatrix", help="emit a block of the coefficient table", parents=[common]
    )
    p_am.add_argument("--max-m", type=int, required=True)
    p_am.add_argument("--max-n", type=int, required=True)
    p_am.add_argument(
        "--provenance", choices=("closed", "recursive"), default="closed"
    )

    p_ex = sub.add_parser(
        "expand", help="emit the tau-function in a basis", parents=[common]
    )
    p_ex.add_argument(
        "--basis", choices=("schur", "p", "T", "t", "u"), required=True
    )
    p_ex.add_argument("--degree", type=int, default=12)
    p_ex.add_argument("--max-terms", type=int, default=1_000_000)

    p_in = sub.add_parser(
        "intersect", help="extract one intersection number", parents=[common]
    )
    p_in.add_argument("indices", type=int, nargs="+")
    p_in.add_argument("--degree", type=int, default=12)

    p_ve = sub.add_parser(
        "verify", help="run verification suites", parents=[common]
    )
    p_ve.add_argument(
        "--suite",
        action="append",
        choices=("recursion", "identities", "virasoro", "cutjoin", "fock", "all"),
        help="suite to run (repeatable; default: all)",
    )
    p_ve.add_argument("--degree", type=int, default=12)
    p_ve.add_argument("--max-weight", type=int, default=30)

    p_se = sub.add_parser("serve", help="run the HTTP service", parents=[common])
    p_se.add_argument("--host", default="127.0.0.1")
    p_se.add_argument("--port", type=int, default=8000)

    return parser


def _approx(re_str, im_str="0"):
    """Decimal rendering of re + im*s with s = i*sqrt(2); never exact."""
    from fractions import Fraction

    re = float(Fraction(re_str))
    im = float(Fraction(im_str)) * 2**0.5
    if im == 0.0:
        return f"~{re:.6g}"
    return f"~({re:.6g}{im:+.6g}i)"


def _split_scalar_text(value):
    # inverse of the canonical "a/b + c/d*s" form, for approximating
    re_str, im_str = "0", "0"
    for chunk in value.split(" + "):
        if chunk.endswith("*s"):
            im_str = chunk[:-2]
        else:
            re_str = chunk
    return re_str, im_str


def _post(server, path, payload):
    import httpx

    response = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
    if response.status_code == 413:
        raise BudgetError(response.text)
    if response.status_code >= 400:
        raise UsageError(response.text)
    return response.json()


def _run_amatrix(args):
    req = AmatrixRequest(
        max_m=args.max_m, max_n=args.max_n, provenance=args.provenance
    )
    if args.server:
        data = _post(args.server, "/amatrix", req.model_dump())
    else:
        data = handle_amatrix(req).model_dump()
    if args.format == "json":
        return _dumps(data)
    if args.format == "csv":
        values = {(e["m"], e["n"]): e["value"] for e in data["entries"]}
        lines = ["m\\n," + ",".join(str(n) for n in range(data["max_n"] + 1))]
        for m in range(data["max_m"] + 1):
            row = [str(m)] + [values[(m, n)] for n in range(data["max_n"] + 1)]
            lines.append(",".join(row))
        return "\n".join(lines)
    lines = []
    for e in data["entries"]:
        line = f"A[{e['m']},{e['n']}] = {e['value']}"
        if args.approx:
            line += "  " + _approx(*_split_scalar_text(e["value"]))
        lines.append(line)
    return "\n".join(lines)


def _run_expand(args):
    if args.degree % 3:
        print(
            f"note: degree {args.degree} is not a multiple of 3; nonzero "
            "content lives in degrees 0 mod 3",
            file=sys.stderr,
        )
    req = ExpandRequest(
        basis=args.basis, degree=args.degree, max_terms=args.max_terms
    )
    if args.server:
        data = _post(args.server, "/expand", req.model_dump())
    else:
        data = handle_expand(req).model_dump(exclude_none=True)
    if args.format == "json":
        return _dumps(data)
    if data["family"] == "schur":
        rows = [
            ("[" + ",".join(str(p) for p in c["partition"]) + "]", c["re"], c["im"])
            for c in data["coefficients"]
        ]
        head = "partition,re,im"
    else:
        rows = [
            (
                "*".join(
                    f"{data['family']}{i}^{e}" if e > 1 else f"{data['family']}{i}"
                    for i, e in t["monomial"]
                )
                or "1",
                t["re"],
                t["im"],
            )
            for t in data["terms"]
        ]
        head = "monomial,re,im"
    if args.format == "csv":
        return "\n".join([head] + [",".join(r) for r in rows])
    width = max((len(r[0]) for r in rows), default=1)
    lines = []
    for r in rows:
        line = f"{r[0]:<{width}}  re={r[1]}  im={r[2]}"
        if args.approx:
            line += "  " + _approx(r[1], r[2])
        lines.append(line)
    return "\n".join(lines)


def _run_intersect(args):
    req = IntersectRequest(indices=args.indices, degree=args.degree)
    if args.server:
        data = _post(args.server, "/intersect", req.model_dump())
    else:
        data = handle_intersect(req).model_dump()
    if args.format == "json":
        return _dumps(data)
    if args.format == "csv":
        return "indices,genus,value\n{},{},{}".format(
            " ".join(str(i) for i in data["indices"]), data["genus"], data["value"]
        )
    text = "{} (genus {})".format(data["value"], data["genus"])
    if args.approx:
        text += "  " + _approx(data["value"])
    return text


def _run_verify(args):
    suites = args.suite or ["all"]
    req = VerifyRequest(
        suites=suites, degree=args.degree, max_weight=args.max_weight
    )
    if args.server:
        data = _post(args.server, "/verify", req.model_dump())
    else:
        data = handle_verify(req).model_dump(by_alias=True)
    if args.format == "json":
        text = _dumps(data)
    elif args.format == "csv":
        lines = ["check,pass,residuals"]
        for c in data["checks"]:
            lines.append(
                "{},{},{}".format(
                    c["check"], c["pass"], ";".join(c["residuals"])
                )
            )
        text = "\n".join(lines)
    else:
        lines = []
        for c in data["checks"]:
            mark = "PASS" if c["pass"] else "FAIL"
            lines.append(f"{mark} {c['check']} {json.dumps(c['params'])}")
            for r in c["residuals"]:
                lines.append(f"     residual: {r}")
        lines.append("all checks passed" if data["pass"] else "FAILURES present")
        text = "\n".join(lines)
    return text, bool(data["pass"])


def _dumps(data):
    return json.dumps(data, indent=2, sort_keys=False)


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.server = getattr(args, "server", None)
    args.format = getattr(args, "format", "text")
    args.output = getattr(args, "output", None)
    args.approx = getattr(args, "approx", False)
    try:
        if args.command == "serve":
            import uvicorn

            uvicorn.run("wktau.service:app", host=args.host, port=args.port)
            return EXIT_OK
        if args.command == "amatrix":
            _emit(_run_amatrix(args), args.output)
            return EXIT_OK
        if args.command == "expand":
            _emit(_run_expand(args), args.output)
            return EXIT_OK
        if args.command == "intersect":
            _emit(_run_intersect(args), args.output)
            return EXIT_OK
        if args.command == "verify":
            text, passed = _run_verify(args)
            _emit(text, args.output)
            return EXIT_OK if passed else EXIT_VERIFY
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
