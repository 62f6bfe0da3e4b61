"""Command line: export systems, run verifications and write a reproduction report."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .checks import CHECK_NAMES, check_geometry, run_check
from .export import bases_csv, dumps, rays_csv, system_document
from .golden import GoldenFileError
from .ksproofs import (
    check_coloring,
    enumerate_parity_proofs,
    incidence_matrix,
    ks_colorable,
    parity_analysis,
    verify_parity_proof,
)
from .registry import SYSTEM_IDS, load
from .systems import build_orthogonality_graph, enumerate_bases
from .witting import coordinate_rays, generate_witting_vertices

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Systems sharing the Penrose structure (same rays, or monomially equivalent)
PENROSE_LIKE = ("penrose-eq3", "penrose-canonical", "witting", *(f"f148-sub-{i}" for i in range(1, 9)))
PARITY_FLOOR = 10**9


class _Usage(Exception):
    pass


def _color(text: str, good: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{32 if good else 31}m{text}\033[0m"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise _Usage(f"cannot write {out}: {exc}") from exc


def cmd_rays(args) -> int:
    if args.system == "witting":
        items = generate_witting_vertices()
        labels = [f"v{i}" for i in range(len(items))]
    else:
        loaded = load(args.system)
        items, labels = loaded.system.rays, loaded.system.labels
    doc = system_document(args.system, labels, items)
    _emit(rays_csv(doc) if args.format == "csv" else dumps(doc), args.out)
    return EXIT_OK


def cmd_bases(args) -> int:
    loaded = load(args.system)
    s = loaded.system
    doc = system_document(args.system, s.labels, s.rays, loaded.bases.bases, loaded.signature)
    _emit(bases_csv(doc) if args.format == "csv" else dumps(doc), args.out)
    return EXIT_OK


def _check_text(res) -> str:
    head = _color("PASS" if res.ok else "FAIL", res.ok)
    return f"{head} {res.name}\n" + "".join(f"  {line}\n" for line in res.lines)


def cmd_verify(args) -> int:
    res = run_check(args.check, table1=args.table1, table3=args.table3)
    if args.format == "json":
        _emit(dumps({"check": res.name, "ok": res.ok, "lines": res.lines, "data": res.data}), args.out)
    else:
        _emit(_check_text(res), args.out)
    return EXIT_OK if res.ok else EXIT_FAIL


def _coloring_summary(system_id: str, workers: int) -> tuple[dict, bool | None]:
    loaded = load(system_id)
    outcome = ks_colorable(loaded.system, loaded.bases, workers=workers)
    summary = {
        "outcome": "colorable" if outcome.colorable else "noncolorable",
        "nodes_explored": outcome.nodes_explored,
        "propagations": outcome.propagations,
        "complete": outcome.complete,
    }
    if outcome.colorable:
        summary["assignment_valid"] = check_coloring(loaded.system, loaded.bases, outcome.assignment)
    claim = None
    if system_id in PENROSE_LIKE:
        claim = not outcome.colorable and outcome.complete
    return summary, claim


def _parity_summary(system_id: str, limit: int, max_weight: int | None) -> tuple[dict, bool | None]:
    loaded = load(system_id)
    analysis = parity_analysis(incidence_matrix(loaded.system, loaded.bases))
    certs = enumerate_parity_proofs(analysis, limit=limit, max_weight=max_weight)
    verified = [bool(verify_parity_proof(loaded.bases, c.basis_indices)) for c in certs]
    summary = {
        "bases": analysis.n_bases,
        "rank": analysis.rank,
        "kernel_dim": analysis.kernel_dim,
        "odd_weight_exists": analysis.odd_weight_exists,
        "proof_count": analysis.proof_count,
        "certificates": [list(c.basis_indices) for c in certs],
        "certificates_verified": all(verified),
    }
    claim = None
    if system_id in PENROSE_LIKE:
        claim = analysis.proof_count == 0
    elif system_id == "e8":
        claim = analysis.proof_count > PARITY_FLOOR and all(verified)
    return summary, claim


def _proof_count_text(n: int) -> str:
    if n > 10**12:
        return f"2^{n.bit_length() - 1}"
    return str(n)


def cmd_ks(args) -> int:
    if args.limit < 0 or (args.max_weight is not None and args.max_weight < 0):
        raise _Usage("--limit and --max-weight must be non-negative")
    if args.action == "color":
        summary, claim = _coloring_summary(args.system, args.threads)
    else:
        summary, claim = _parity_summary(args.system, args.limit, args.max_weight)
    if args.format == "json":
        _emit(dumps({"system": args.system, "action": args.action, **summary, "claim_holds": claim}), args.out)
    else:
        lines = [f"system: {args.system}"]
        for k, v in summary.items():
            if k == "certificates":
                lines.append(f"certificates: {len(v)}")
                lines.extend(f"  {' '.join(map(str, c))}" for c in v)
            elif k == "proof_count":
                lines.append(f"proof_count: {_proof_count_text(v)}")
            else:
                lines.append(f"{k}: {str(v).lower() if isinstance(v, bool) else v}")
        if claim is not None:
            lines.append("claim: " + _color("holds" if claim else "fails", claim))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if claim is False else EXIT_OK


def build_report(threads: int = 1, table1=None, table3=None) -> dict:
    """Run every system and verification; the result is independent of
    ``threads``."""
    systems = {}
    for sid in SYSTEM_IDS:
        loaded = load(sid)
        systems[sid] = {
            "rays": len(loaded.system),
            "bases": len(loaded.bases),
            "signature": loaded.signature,
            "degree": sorted(set(loaded.system.degrees().tolist())),
        }
    systems["witting"]["vertices"] = len(generate_witting_vertices())

    verifications = {}
    claims = {}
    for name in CHECK_NAMES:
        res = run_check(name, table1=table1, table3=table3)
        verifications[name] = {"ok": res.ok, "lines": res.lines, "data": res.data}
        claims[f"verify:{name}"] = res.ok
    geometry = check_geometry()
    construction = {"ok": geometry.ok, "lines": geometry.lines, "data": geometry.data}

    parity = {}
    for sid, limit in (("penrose-canonical", 0), ("e8", 100), ("f148", 0)):
        summary, claim = _parity_summary(sid, limit, None)
        summary["certificate_count"] = len(summary.pop("certificates"))
        summary["proof_count"] = _proof_count_text(summary["proof_count"])
        parity[sid] = summary
        if claim is not None:
            claims[f"parity:{sid}"] = claim

    coloring = {}
    for sid in ("penrose-canonical", "f148"):
        summary, claim = _coloring_summary(sid, threads)
        coloring[sid] = summary
        if claim is not None:
            claims[f"coloring:{sid}"] = claim
    control = build_orthogonality_graph(coordinate_rays(), name="single-basis")
    ctl = ks_colorable(control, enumerate_bases(control))
    coloring["single-basis"] = {"outcome": "colorable" if ctl.colorable else "noncolorable"}
    claims["coloring:single-basis"] = ctl.colorable

    body = {
        "tool": "wittingrays",
        "version": __version__,
        "systems": systems,
        "verifications": verifications,
        "construction": construction,
        "parity": parity,
        "coloring": coloring,
        "claims": claims,
        "all_claims_hold": all(claims.values()),
    }
    canonical = json.dumps(body, sort_keys=True, separators=(",", ":"))
    body["digest"] = "sha256:" + hashlib.sha256(canonical.encode()).hexdigest()
    return body


def cmd_report(args) -> int:
    if args.threads < 1:
        raise _Usage("--threads must be at least 1")
    doc = build_report(args.threads, args.table1, args.table3)
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    if not doc["all_claims_hold"]:
        failed = [k for k, v in doc["claims"].items() if not v]
        print(f"failed claims: {', '.join(failed)}", file=sys.stderr)
        for name in failed:
            if name.startswith("verify:"):
                for line in doc["verifications"][name.split(":", 1)[1]]["lines"]:
                    if not line.startswith("ok"):
                        print(f"  {line.strip()}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--out", metavar="PATH", default=None)

    p = argparse.ArgumentParser(prog="wittingrays", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rays", parents=[common], help="export the canonical rays of a system")
    r.add_argument("system", choices=SYSTEM_IDS)
    r.set_defaults(func=cmd_rays)

    b = sub.add_parser("bases", parents=[common], help="export the bases and signature of a system")
    b.add_argument("system", choices=SYSTEM_IDS)
    b.set_defaults(func=cmd_bases)

    v = sub.add_parser("verify", parents=[common], help="run a named verification")
    v.add_argument("check", choices=CHECK_NAMES)
    v.add_argument("--table1", metavar="PATH")
    v.add_argument("--table3", metavar="PATH")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("ks", parents=[common], help="coloring search or parity analysis")
    k.add_argument("action", choices=("color", "parity"))
    k.add_argument("system", choices=SYSTEM_IDS)
    k.add_argument("--limit", type=int, default=100, help="maximum certificates to print")
    k.add_argument("--max-weight", type=int, default=None, help="maximum bases per certificate")
    k.add_argument("--threads", type=int, default=1, help="worker processes for the coloring search")
    k.set_defaults(func=cmd_ks)

    rep = sub.add_parser("report", parents=[common], help="run everything and write a JSON report")
    rep.add_argument("--threads", type=int, default=1)
    rep.add_argument("--table1", metavar="PATH")
    rep.add_argument("--table3", metavar="PATH")
    rep.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("ks", "verify") and args.format == "csv":
        parser.error(f"{args.command} supports --format json only")
    if args.command == "report" and args.format == "csv":
        parser.error("report is JSON only")
    if args.command == "ks" and args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"wittingrays: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GoldenFileError as exc:
        print(f"wittingrays: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
