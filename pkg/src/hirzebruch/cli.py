"""Command-line interface.

Exit codes: 0 on success (an empty moduli space is a successful result),
2 on malformed input, 3 on an internal invariant violation (which would
signal a bug in the formulas, or an internally inconsistent fixed-point
record supplied by the caller).

JSON output is a deterministic envelope {request, result, version}:
identical requests against the same version produce identical bytes.
Timing is reported on stderr (with --timing) so stdout stays canonical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import re
import sys
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .ale import ale_index, ale_tangent_character, ale_poincare, enumerate_colored_fixed_points
from .counting import (
    check_nonempty,
    enumerate_fixed_points,
    hilbert_series_r1,
    indexed_points,
    morse_index_from_character,
    poincare_polynomial,
    rank2_series_closed,
    rank2_series_direct,
)
from .laurent import TPolynomial, ale_ordering, main_ordering
from .localization import (
    FixedPointDatum,
    InvariantError,
    ModuliParams,
    ReducedFixedPointDatum,
    reduced_tangent_character,
    tangent_character,
)

CACHE_ENV_VAR = "HIRZEBRUCH_CACHE_DIR"

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
_RANGE = re.compile(r"^([+-]?\d+)\.\.([+-]?\d+)$")


def _rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(
            f"expected an integer or a fraction a/b, got {text!r}"
        )
    return Fraction(text)


def _int_list(text: str) -> list[int]:
    out: list[int] = []
    for token in text.split(","):
        token = token.strip()
        matched = _RANGE.match(token)
        if matched:
            lo, hi = int(matched.group(1)), int(matched.group(2))
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(token))
            except ValueError:
                raise argparse.ArgumentTypeError(f"expected integers, got {token!r}")
    return out


def _rational_list(text: str) -> list[Fraction]:
    out: list[Fraction] = []
    for token in text.split(","):
        token = token.strip()
        matched = _RANGE.match(token)
        if matched:
            lo, hi = int(matched.group(1)), int(matched.group(2))
            out.extend(Fraction(x) for x in range(lo, hi + 1))
        elif _RATIONAL.match(token):
            out.append(Fraction(token))
        else:
            raise argparse.ArgumentTypeError(
                f"expected rationals or integer ranges a..b, got {token!r}"
            )
    return out


def _compact(obj) -> str:
    return json.dumps(obj, sort_keys=True)


class Cache:
    """Content-addressed result store keyed by (version, request)."""

    def __init__(self, root: str):
        self.root = root
        os.makedirs(root, exist_ok=True)

    def _path(self, request: dict) -> str:
        blob = json.dumps({"version": __version__, "request": request}, sort_keys=True)
        digest = hashlib.sha256(blob.encode()).hexdigest()
        return os.path.join(self.root, f"{digest}.json")

    def get(self, request: dict):
        path = self._path(request)
        if not os.path.exists(path):
            return None
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)["result"]

    def put(self, request: dict, payload) -> None:
        path = self._path(request)
        blob = json.dumps(
            {"version": __version__, "request": request, "result": payload},
            sort_keys=True,
        )
        # unique temp name so concurrent writers never share a partial file
        handle = tempfile.NamedTemporaryFile(
            "w", dir=self.root, suffix=".tmp", delete=False, encoding="utf-8"
        )
        with handle:
            handle.write(blob)
        os.replace(handle.name, path)


def _cached(cache: Cache | None, request: dict, compute):
    if cache is not None:
        hit = cache.get(request)
        if hit is not None:
            return hit
    payload = compute()
    if cache is not None:
        cache.put(request, payload)
    return payload


def _pmap(fn, items, jobs: int) -> list:
    items = list(items)
    if jobs > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _ordering(name: str, rank: int):
    return main_ordering(rank) if name == "main" else ale_ordering(rank)


def _params(args) -> ModuliParams:
    return ModuliParams(args.p, args.r, args.k, args.n)


def _poincare_payload(cache, p: int, r: int, k: int, n: Fraction):
    request = {"subcommand": "poincare", "p": p, "r": r, "k": k, "n": str(n)}
    return request, _cached(
        cache,
        request,
        lambda: poincare_polynomial(ModuliParams(p, r, k, n)).to_pairs(),
    )


def _ale_payload(cache, r: int, n: Fraction, ordering_name: str):
    request = {"subcommand": "ale", "r": r, "n": str(n), "ordering": ordering_name}
    return request, _cached(
        cache,
        request,
        lambda: ale_poincare(r, n, _ordering(ordering_name, r)).to_pairs(),
    )


def _cmd_fixed_points(args, cache):
    params = _params(args)
    request = {
        "subcommand": "fixed-points",
        "p": args.p,
        "r": args.r,
        "k": args.k,
        "n": str(args.n),
        "reduced": args.reduced,
    }
    if args.reduced:
        payload = [point.to_json() for point in indexed_points(params)]
    else:
        payload = [fp.to_json() for fp in enumerate_fixed_points(params)]
    text = "\n".join(_compact(record) for record in payload)
    return request, payload, text


def _load_fixed_point_records(source: str):
    if source == "-":
        return json.load(sys.stdin)
    with open(source, encoding="utf-8") as handle:
        return json.load(handle)


def _cmd_tangent(args, cache):
    params = _params(args)
    request = {
        "subcommand": "tangent",
        "p": args.p,
        "r": args.r,
        "k": args.k,
        "n": str(args.n),
        "reduced": args.reduced,
        "ordering": args.ordering,
    }
    if args.fixed_points:
        records = _load_fixed_point_records(args.fixed_points)
        if args.reduced:
            points = [ReducedFixedPointDatum.from_json(r) for r in records]
        else:
            points = [FixedPointDatum.from_json(r) for r in records]
    elif args.reduced:
        points = [point.datum for point in indexed_points(params)]
    else:
        points = list(enumerate_fixed_points(params))
    ordering = _ordering(args.ordering, params.r)

    def one(point):
        if args.reduced:
            x = reduced_tangent_character(params, point)
            return {
                "fixed_point": point.to_json(),
                "character": x.to_json(),
                "dimension": x.dimension(),
                "index": morse_index_from_character(x, ordering),
            }
        x = tangent_character(params, point)
        return {
            "fixed_point": point.to_json(),
            "character": x.to_json(),
            "dimension": x.dimension(),
        }

    payload = _pmap(one, points, args.jobs)
    text = "\n".join(_compact(record) for record in payload)
    return request, payload, text


def _cmd_poincare(args, cache):
    request, payload = _poincare_payload(cache, args.p, args.r, args.k, args.n)
    return request, payload, TPolynomial.from_pairs(payload).text()


def _series_text(payload) -> str:
    return "\n".join(
        f"q^{item['q']}: {TPolynomial.from_pairs(item['poly']).text()}"
        for item in payload
    )


def _cmd_series(args, cache):
    request = {
        "subcommand": "series",
        "p": args.p,
        "max_order": args.max_order,
        "method": args.method,
    }
    fn = rank2_series_closed if args.method == "closed" else rank2_series_direct
    payload = _cached(cache, request, lambda: fn(args.p, args.max_order).to_json())
    return request, payload, _series_text(payload)


def _cmd_hilbert(args, cache):
    request = {"subcommand": "hilbert", "p": args.p, "max_order": args.max_order}
    payload = _cached(
        cache, request, lambda: hilbert_series_r1(args.p, args.max_order).to_json()
    )
    return request, payload, _series_text(payload)


def _cmd_ale(args, cache):
    if args.points:
        request = {
            "subcommand": "ale",
            "r": args.r,
            "n": str(args.n),
            "ordering": args.ordering,
            "points": True,
        }
        ordering = _ordering(args.ordering, args.r)

        def one(fp):
            x = ale_tangent_character(fp)
            return {
                "fixed_point": fp.to_json(),
                "character": x.to_json(),
                "dimension": x.dimension(),
                "index": x.negative_count(ordering),
            }

        points = _pmap(one, enumerate_colored_fixed_points(args.r, args.n), args.jobs)
        poly = TPolynomial.zero()
        for record in points:
            poly = poly + TPolynomial.t_power(2 * record["index"])
        payload = {"poly": poly.to_pairs(), "points": points}
        text = "\n".join(
            [poly.text()] + [_compact(record) for record in points]
        )
        return request, payload, text
    request, payload = _ale_payload(cache, args.r, args.n, args.ordering)
    return request, payload, TPolynomial.from_pairs(payload).text()


def _cmd_check(args, cache):
    request = {
        "subcommand": "check",
        "p": args.p,
        "r": args.r,
        "k": args.k,
        "n": str(args.n),
    }
    payload = _cached(
        cache, request, lambda: {"nonempty": check_nonempty(_params(args))}
    )
    return request, payload, json.dumps(payload, sort_keys=True)


def _sweep_cell(mode: str, cache, p: int, r: int, k: int, n: Fraction) -> dict:
    row = {"p": p, "r": r, "k": k, "n": str(n)}
    try:
        if mode == "poincare":
            _, pairs = _poincare_payload(cache, p, r, k, n)
            row["poincare"] = pairs
        elif mode == "check":
            row["nonempty"] = check_nonempty(ModuliParams(p, r, k, n))
        else:  # crosscheck applies where the orbifold oracle exists: p=2, k=0 mod r
            _, pairs = _poincare_payload(cache, p, r, k, n)
            row["poincare"] = pairs
            if p == 2 and k % r == 0:
                _, ale_pairs = _ale_payload(cache, r, n, "ale")
                row["ale"] = ale_pairs
                row["match"] = ale_pairs == pairs
            else:
                row["ale"] = None
                row["match"] = "n/a"
    except InvariantError as exc:
        row["error"] = f"invariant violation: {exc}"
    except Exception as exc:  # a failing cell must not abort the sweep
        row["error"] = str(exc)
    return row


def _sweep_text(mode: str, rows: list[dict]) -> str:
    columns = {
        "poincare": ["p", "r", "k", "n", "poincare"],
        "check": ["p", "r", "k", "n", "nonempty"],
        "crosscheck": ["p", "r", "k", "n", "poincare", "ale", "match"],
    }[mode]
    lines = ["\t".join(columns)]
    for row in rows:
        cells = []
        for col in columns:
            if "error" in row and col not in ("p", "r", "k", "n"):
                cells.append(f"error:{row['error']}")
                break
            value = row.get(col)
            if col in ("poincare", "ale"):
                value = (
                    TPolynomial.from_pairs(value).text() if value is not None else "-"
                )
            elif isinstance(value, bool):
                value = "true" if value else "false"
            cells.append(str(value))
        lines.append("\t".join(cells))
    return "\n".join(lines)


def _cmd_sweep(args, cache):
    request = {
        "subcommand": "sweep",
        "mode": args.mode,
        "p": args.p,
        "r": args.r,
        "k": args.k,
        "n": [str(x) for x in args.n],
    }
    cells = [
        (p, r, k, n) for p in args.p for r in args.r for k in args.k for n in args.n
    ]
    rows = _pmap(lambda cell: _sweep_cell(args.mode, cache, *cell), cells, args.jobs)
    return request, rows, _sweep_text(args.mode, rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--jobs", type=int, default=1, help="worker threads (never changes output)"
    )
    common.add_argument(
        "--cache-dir",
        default=None,
        help=f"result cache directory (default: ${CACHE_ENV_VAR} if set)",
    )
    common.add_argument(
        "--timing", action="store_true", help="report elapsed milliseconds on stderr"
    )

    parser = argparse.ArgumentParser(
        prog="hirzebruch",
        description="Exact fixed-point data and Poincare polynomials of framed-sheaf "
        "moduli on Hirzebruch surfaces, with an A1 orbifold cross-check.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def moduli_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--p", type=int, required=True, help="Hirzebruch surface degree")
        p.add_argument("--r", type=int, required=True, help="sheaf rank")
        p.add_argument("--k", type=int, required=True, help="first Chern datum")
        p.add_argument(
            "--n", type=_rational, required=True, help="second Chern datum, a or a/b"
        )

    fp = sub.add_parser(
        "fixed-points", parents=[common], help="list torus fixed points"
    )
    moduli_flags(fp)
    fp.add_argument(
        "--reduced",
        action="store_true",
        help="list reduced fixed loci with Morse index and component factor",
    )
    fp.set_defaults(handler=_cmd_fixed_points)

    tg = sub.add_parser(
        "tangent", parents=[common], help="tangent characters at fixed points"
    )
    moduli_flags(tg)
    tg.add_argument("--reduced", action="store_true", help="reduced characters")
    tg.add_argument(
        "--fixed-points",
        metavar="FILE",
        default=None,
        help="read fixed-point records from FILE ('-' for stdin) instead of enumerating",
    )
    tg.add_argument(
        "--ordering", choices=("main", "ale"), default="main", help="index ordering"
    )
    tg.set_defaults(handler=_cmd_tangent)

    pc = sub.add_parser(
        "poincare", parents=[common], help="Poincare polynomial of a moduli space"
    )
    moduli_flags(pc)
    pc.set_defaults(handler=_cmd_poincare)

    se = sub.add_parser(
        "series", parents=[common], help="rank-2, k=0 generating series"
    )
    se.add_argument("--p", type=int, required=True, help="Hirzebruch surface degree")
    se.add_argument("--max-order", type=int, default=5, help="q-truncation order")
    se.add_argument(
        "--method",
        choices=("closed", "direct"),
        default="closed",
        help="closed product/bracket form or term-by-term summation",
    )
    se.set_defaults(handler=_cmd_series)

    hb = sub.add_parser(
        "hilbert", parents=[common], help="rank-1 (Hilbert scheme) generating series"
    )
    hb.add_argument("--p", type=int, default=1, help="Hirzebruch surface degree")
    hb.add_argument("--max-order", type=int, default=5, help="q-truncation order")
    hb.set_defaults(handler=_cmd_hilbert)

    al = sub.add_parser(
        "ale", parents=[common], help="A1 orbifold Poincare polynomial"
    )
    al.add_argument("--r", type=int, required=True, help="instanton rank")
    al.add_argument(
        "--n", type=_rational, required=True, help="instanton number, a or a/b"
    )
    al.add_argument(
        "--ordering", choices=("main", "ale"), default="ale", help="index ordering"
    )
    al.add_argument(
        "--points",
        action="store_true",
        help="also list fixed points with characters and indexes",
    )
    al.set_defaults(handler=_cmd_ale)

    ck = sub.add_parser(
        "check", parents=[common], help="decide whether the moduli space is nonempty"
    )
    moduli_flags(ck)
    ck.set_defaults(handler=_cmd_check)

    sw = sub.add_parser("sweep", parents=[common], help="run a parameter grid")
    sw.add_argument(
        "--mode",
        choices=("poincare", "check", "crosscheck"),
        required=True,
        help="what to compute per cell",
    )
    sw.add_argument("--p", type=_int_list, required=True, help="e.g. 1,2 or 1..3")
    sw.add_argument("--r", type=_int_list, required=True)
    sw.add_argument("--k", type=_int_list, required=True)
    sw.add_argument(
        "--n", type=_rational_list, required=True, help="e.g. 0..4 or 0,1/2,1"
    )
    sw.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    started = time.monotonic()
    try:
        cache = Cache(cache_dir) if cache_dir else None
        request, payload, text = args.handler(args, cache)
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        envelope = {"request": request, "result": payload, "version": __version__}
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        print(text)
    if args.timing:
        elapsed = int(1000 * (time.monotonic() - started))
        print(f"timing_ms={elapsed}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
