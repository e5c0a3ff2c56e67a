"""The ``maclab`` command: decomposition queries and identity verification.

Exit codes follow a CI-friendly contract: 0 on success (all checks pass),
1 when a verified identity mismatches (the report locates the first
differing coefficient), 2 on invalid input or usage.  Output is
deterministic -- byte-identical across runs and worker counts -- so wall
times are never printed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .identities import (
    MACDONALD,
    NO_SPECS,
    QNO_IDS,
    ParameterOutOfRange,
    UnknownIdentity,
    VerifyReport,
    raw_lattice_check,
    verify_macdonald,
    verify_no,
    verify_qno,
    verify_qtno,
)
from .littlewood import decompose
from .partitions import InvalidParts, NotInFamily, Partition
from .vcoding import vcoding

FORMATS = ("json", "tsv", "pretty")

MACDONALD_CLI_IDS = tuple("MACDONALD_" + k for k in MACDONALD)
RAW_CLI_IDS = ("RAW_A", "RAW_C")
VERIFY_IDS = (MACDONALD_CLI_IDS + RAW_CLI_IDS + QNO_IDS
              + tuple(NO_SPECS) + ("QTNO",))


class UsageError(ValueError):
    pass


def _parse_parts(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise InvalidParts("parts must be comma-separated integers: %r"
                           % (text,))
    return Partition(parts)


def _default_workers() -> int:
    env = os.environ.get("MACLAB_WORKERS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _emit(payload: dict, fmt: str, out) -> None:
    """One record; keys sorted so every format is canonical."""
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    elif fmt == "tsv":
        keys = sorted(payload)
        out.write("\t".join(keys) + "\n")
        out.write("\t".join(json.dumps(payload[k], sort_keys=True)
                            for k in keys) + "\n")
    else:
        for k in sorted(payload):
            out.write("%s: %s\n" % (k, json.dumps(payload[k],
                                                  sort_keys=True)))


def _report_payload(rep: VerifyReport) -> dict:
    payload = rep.to_json()
    # wall time would break byte-for-byte reproducibility
    payload.pop("seconds", None)
    return payload


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_decompose(args, out) -> int:
    lam = _parse_parts(args.parts)
    if args.t < 1:
        raise UsageError("t must be >= 1")
    data = decompose(lam, args.t)
    payload = {"schema": "1", "command": "decompose",
               "parts": list(lam.parts)}
    payload.update(data.to_json())
    _emit(payload, args.format, out)
    return 0


def cmd_vcoding(args, out) -> int:
    lam = _parse_parts(args.parts)
    if args.g < 1 or args.t < 1 or args.t > args.g:
        raise UsageError("need 1 <= t <= g")
    vc = vcoding(lam, args.g, args.t)
    payload = {"schema": "1", "command": "vcoding",
               "parts": list(lam.parts)}
    payload.update(vc.to_json())
    _emit(payload, args.format, out)
    return 0


def cmd_hooks(args, out) -> int:
    lam = _parse_parts(args.parts)
    hooks = sorted(lam.hooks())
    payload = {"schema": "1", "command": "hooks",
               "parts": list(lam.parts), "hooks": hooks}
    if args.t is not None:
        if args.t < 1:
            raise UsageError("t must be >= 1")
        payload["t"] = args.t
        payload["hooks_mod_t"] = sorted(lam.hooks_mod(args.t))
    _emit(payload, args.format, out)
    return 0


def _run_one(ident: str, args) -> VerifyReport:
    if ident.startswith("MACDONALD_"):
        key = ident[len("MACDONALD_"):]
        if key not in MACDONALD:
            raise UnknownIdentity(ident)
        if args.t is None:
            raise UsageError("%s requires --t" % ident)
        return verify_macdonald(key, args.t, args.order, mode=args.x_mode)
    if ident in RAW_CLI_IDS:
        if args.t is None:
            raise UsageError("%s requires --t" % ident)
        return raw_lattice_check(ident[len("RAW_"):], args.t, args.order)
    if ident in QNO_IDS:
        return verify_qno(ident, args.order, u_mode=args.u_mode,
                          mutate=args.mutate)
    if ident in NO_SPECS:
        return verify_no(ident, args.order, z_mode=args.z_mode)
    if ident == "QTNO":
        cap = args.degree_cap
        if cap is None:
            cap = 2 * args.order
        return verify_qtno(args.order, cap)
    raise UnknownIdentity(ident)


def cmd_verify(args, out) -> int:
    idents = [s.strip() for s in args.id.split(",") if s.strip()]
    if not idents:
        raise UsageError("at least one identity id is required")
    for ident in idents:
        if ident not in VERIFY_IDS:
            raise UnknownIdentity("%s (known: %s)"
                                  % (ident, ", ".join(VERIFY_IDS)))
    if args.order < 0:
        raise UsageError("order must be >= 0")
    workers = args.workers if args.workers else _default_workers()
    if workers > 1 and len(idents) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda i: _run_one(i, args), idents))
    else:
        reports = [_run_one(i, args) for i in idents]
    # deterministic order regardless of scheduling
    reports = [r for _, r in sorted(zip(idents, reports),
                                    key=lambda p: p[0])]
    all_ok = True
    payloads = []
    for rep in reports:
        payload = _report_payload(rep)
        payloads.append(payload)
        all_ok = all_ok and rep.ok
        _emit(payload, args.format, out)
        if args.format == "pretty":
            out.write("%s: %s\n" % (rep.identity,
                                    "PASS" if rep.ok else "FAIL"))
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(payloads if len(payloads) > 1 else payloads[0],
                      fh, sort_keys=True, indent=2)
            fh.write("\n")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=FORMATS, default="pretty",
                     help="output format (default: pretty)")
    sub.add_argument("--config", metavar="FILE",
                     help="JSON file of default option values; explicit "
                          "flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maclab",
        description="Exact verification of partition-indexed Macdonald and "
                    "Nekrasov-Okounkov identities.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("decompose",
                        help="core/quotient decomposition of a partition")
    p.add_argument("--parts", required=True,
                   help="comma-separated parts, e.g. 4,4,3,2 (empty ok)")
    p.add_argument("--t", type=int, required=True, help="core modulus")
    _add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = subs.add_parser("vcoding",
                        help="V-coding of a family member")
    p.add_argument("--parts", required=True)
    p.add_argument("--g", type=int, required=True, help="word modulus")
    p.add_argument("--t", type=int, required=True,
                   help="number of retained slots")
    _add_common(p)
    p.set_defaults(func=cmd_vcoding)

    p = subs.add_parser("hooks", help="hook-length multisets")
    p.add_argument("--parts", required=True)
    p.add_argument("--t", type=int, default=None,
                   help="also report hooks divisible by t")
    _add_common(p)
    p.set_defaults(func=cmd_hooks)

    p = subs.add_parser("verify", help="verify an identity to a given order")
    p.add_argument("--id", required=True,
                   help="identity id(s), comma-separated; one of: "
                        + ", ".join(VERIFY_IDS))
    p.add_argument("--order", type=int, required=True,
                   help="truncation order N")
    p.add_argument("--t", type=int, default=None,
                   help="rank parameter (Macdonald / raw lattice ids)")
    p.add_argument("--x-mode", choices=("symbolic", "specialized"),
                   default="specialized",
                   help="Macdonald evaluation points (default: specialized)")
    p.add_argument("--u-mode", choices=("symbolic", "samples"),
                   default="symbolic",
                   help="q-deformed formulas: symbolic u or rational samples")
    p.add_argument("--z-mode", choices=("poly", "samples"), default="poly",
                   help="hook-length formulas: polynomial z or samples")
    p.add_argument("--degree-cap", type=int, default=None,
                   help="(q,t) total-degree cap for QTNO "
                        "(default: 2*order)")
    p.add_argument("--mutate", action="store_true",
                   help="flip one product exponent (self-test of the "
                        "mismatch reporting)")
    p.add_argument("--report", metavar="FILE",
                   help="also write the JSON report(s) to FILE")
    p.add_argument("--workers", type=int, default=0,
                   help="worker pool size for multi-id runs "
                        "(default: $MACLAB_WORKERS or 1)")
    _add_common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list) -> list:
    """Load --config JSON values as defaults; explicit flags override."""
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    if idx + 1 >= len(argv):
        raise UsageError("--config requires a file path")
    path = argv[idx + 1]
    try:
        with open(path) as fh:
            values = json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError("cannot read config %s: %s" % (path, exc))
    if not isinstance(values, dict):
        raise UsageError("config must be a JSON object")
    extra = []
    for key, val in sorted(values.items()):
        flag = "--" + key.replace("_", "-")
        if flag in argv:
            continue
        if isinstance(val, bool):
            if val:
                extra.append(flag)
        else:
            extra.extend([flag, str(val)])
    # insert after the subcommand so argparse routes them correctly
    return argv[:1] + extra + argv[1:]


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        if argv:
            argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        return args.func(args, sys.stdout)
    except (InvalidParts, NotInFamily, UnknownIdentity, UsageError,
            ParameterOutOfRange, ValueError) as exc:
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
