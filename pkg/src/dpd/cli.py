"""Command line entry point.

Every subcommand prints one record (JSON by default, ``--format text`` for
a flat ``path=value`` rendering of the same record).  Exit codes: 0 when
every check passes, 1 when a violation or counterexample was found, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
import warnings
from pathlib import Path

from . import __version__

OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# rendering ------------------------------------------------------------------------------


def flatten(obj, prefix=""):
    """``path=json`` lines; :func:`unflatten` inverts this."""
    if isinstance(obj, dict) and obj:
        out = []
        for k, v in obj.items():
            out += flatten(v, f"{prefix}.{k}" if prefix else str(k))
        return out
    if isinstance(obj, list) and obj:
        out = []
        for i, v in enumerate(obj):
            out += flatten(v, f"{prefix}[{i}]")
        return out
    return [f"{prefix}={json.dumps(obj)}"]


def _split_path(path):
    parts = []
    for chunk in path.split("."):
        while "[" in chunk:
            head, rest = chunk.split("[", 1)
            if head:
                parts.append(head)
            idx, chunk = rest.split("]", 1)
            parts.append(int(idx))
        if chunk:
            parts.append(chunk)
    return parts


def unflatten(lines):
    root = None
    for line in lines:
        if not line:
            continue
        path, value = line.split("=", 1)
        value = json.loads(value)
        parts = _split_path(path) if path else []
        if not parts:
            return value
        if root is None:
            root = [] if isinstance(parts[0], int) else {}
        cur = root
        for p, nxt in zip(parts, parts[1:]):
            if isinstance(p, int):
                while len(cur) <= p:
                    cur.append(None)
                if cur[p] is None:
                    cur[p] = [] if isinstance(nxt, int) else {}
                cur = cur[p]
            else:
                cur = cur.setdefault(p, [] if isinstance(nxt, int) else {})
        last = parts[-1]
        if isinstance(last, int):
            while len(cur) <= last:
                cur.append(None)
            cur[last] = value
        else:
            cur[last] = value
    return root


def emit(record, fmt, out=None):
    out = out or sys.stdout
    if fmt == "text":
        out.write("\n".join(flatten(record)) + "\n")
    else:
        out.write(json.dumps(record, indent=1) + "\n")


# input helpers ----------------------------------------------------------------------------


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_graph(path):
    from .plane import PlaneGraph, PlaneGraphError

    data = _read_json(path)
    if not isinstance(data, dict):
        raise UsageError(f"{path}: graph JSON must be an object")
    if isinstance(data.get("graph"), dict):  # corpus entry
        data = data["graph"]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            return PlaneGraph.from_json(data)
        except PlaneGraphError as exc:
            raise UsageError(f"{path}: {type(exc).__name__}: {exc}") from None
        except (TypeError, ValueError) as exc:
            raise UsageError(f"{path}: malformed graph: {exc}") from None


def _write_json(path, data):
    try:
        p = Path(path)
        if p.parent and not p.parent.exists():
            p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(json.dumps(data, indent=1) + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _seed(args):
    if args.seed is not None:
        return args.seed
    if getattr(args, "entropy", None) == "ok":
        return secrets.randbits(63)
    raise UsageError("this command samples at random: pass --seed S (or --entropy ok)")


def _jobs(args):
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("DPD_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"DPD_JOBS={env!r} is not an integer") from None
    return 1


# subcommands --------------------------------------------------------------------------------


def cmd_build_check(args):
    from .plane import PlaneGraph, PlaneGraphError

    data = _read_json(args.graph)
    if isinstance(data, dict) and isinstance(data.get("graph"), dict):
        data = data["graph"]
    rec = {"command": "build-check", "graph": str(args.graph)}
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            G = PlaneGraph.from_json(data)
    except PlaneGraphError as exc:
        rec.update(ok=False, error=type(exc).__name__, detail=str(exc))
        return rec, VIOLATION
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise UsageError(f"malformed graph: {exc}") from None
    rec.update(
        ok=True, n=G.n, m=len(G.edges), faces=len(G.faces),
        outer_face=list(G.faces[G.outer].boundary),
        face_degrees=sorted(f.degree for f in G.faces),
        warnings=[str(w.message) for w in caught],
    )
    return rec, OK


def cmd_lint(args):
    from .scan import failed, lint_hypotheses

    G = _load_graph(args.graph)
    rep = lint_hypotheses(G, args.tier)
    bad = failed(rep)
    return {"command": "lint", "tier": args.tier, "ok": not bad, "failed": bad, "predicates": rep}, (
        VIOLATION if bad else OK)


def cmd_scan(args):
    from .patterns import LIBRARY, UnknownPattern, find_pattern

    G = _load_graph(args.graph)
    if args.all:
        ids = list(LIBRARY)
    elif args.pattern:
        ids = args.pattern
    else:
        raise UsageError("scan needs --pattern ID or --all")
    out = []
    for pid in ids:
        try:
            out += [m.to_json() for m in find_pattern(G, pid)]
        except UnknownPattern:
            raise UsageError(f"unknown pattern {pid!r}") from None
    return out, OK


def cmd_clusters(args):
    from .scan import clusters

    G = _load_graph(args.graph)
    good, bad = clusters(G, strict=False)
    rec = {"command": "clusters", "ok": not bad, "clusters": [c.to_json() for c in good],
           "unclassifiable": [{"faces": sorted(e.faces), "reason": e.reason} for e in bad]}
    return rec, VIOLATION if bad else OK


def cmd_dp_color(args):
    from .cover import TooLarge, dp_chromatic

    G = _load_graph(args.graph)
    try:
        k = dp_chromatic(G, n_max_guard=args.guard)
    except TooLarge as exc:
        raise UsageError(f"graph too large for brute force: {exc}") from None
    return {"command": "dp-color", "n": G.n, "dp_chromatic": k}, OK


def cmd_extend(args):
    from .cover import Cover, CoverError, extend_transversal

    G = _load_graph(args.graph)
    data = _read_json(args.cover)
    try:
        cover, f = Cover.from_json(data, n=G.n, edges=[tuple(e) for e in G.edges])
    except (CoverError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad cover: {exc}") from None
    partial = [-1] * G.n
    for item in args.pick or []:
        try:
            v, c = (int(x) for x in item.split(":"))
        except ValueError:
            raise UsageError(f"--pick expects VERTEX:COLOUR, got {item!r}") from None
        if not (0 <= v < G.n and 1 <= c <= cover.s):
            raise UsageError(f"--pick {item} out of range")
        partial[v] = c - 1
    try:
        T = extend_transversal(cover, f, partial)
    except CoverError as exc:
        raise UsageError(str(exc)) from None
    rec = {"command": "extend", "ok": T is not None,
           "transversal": None if T is None else [c + 1 for c in T]}
    return rec, OK if T is not None else VIOLATION


def cmd_reduce(args):
    from . import reduce as R
    from .patterns import RC_IDS, UnknownPattern

    if args.replay:
        w = _read_json(args.replay)
        if isinstance(w, dict) and "witness" in w:
            w = w["witness"]
        try:
            v = R.replay(w)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad witness: {exc}") from None
        return {"command": "reduce", "replay": str(args.replay), "verdict": v}, (
            OK if v == "REDUCIBLE" else VIOLATION)
    if not args.pattern:
        raise UsageError("reduce needs --pattern or --replay")
    if args.pattern not in RC_IDS and not args.pattern.startswith("rc7b"):
        raise UsageError(f"--pattern must be one of {', '.join(RC_IDS)}")
    mode = args.mode
    seed = args.seed
    if mode == "sampled" or (mode == "auto" and seed is None):
        try:
            size = R.literal_size(args.pattern, args.s, args.f) if args.f != "ones" else R.exhaustive_size(args.pattern, args.s)
        except R.ReduceError as exc:
            raise UsageError(str(exc)) from None
        if mode == "sampled" or size > args.budget:
            seed = _seed(args)
    try:
        v = R.reducible_oracle(args.pattern, s=args.s, f=args.f, budget=args.budget, seed=seed,
                               mode=mode, jobs=_jobs(args))
    except (R.ReduceError, UnknownPattern) as exc:
        raise UsageError(str(exc)) from None
    rec = {"command": "reduce", "seed": seed, **v.to_json()}
    if v.witness is not None:
        path = args.witness_out or f"witness-{args.pattern}.json"
        _write_json(path, v.witness)
        rec["witness_file"] = str(path)
    return rec, OK if v.verdict == "REDUCIBLE" else VIOLATION


def cmd_discharge(args):
    from .discharge import HypothesisViolation, bound_trace, discharge, verify

    G = _load_graph(args.graph)
    try:
        led = discharge(G, require=args.require)
    except HypothesisViolation as exc:
        rec = {"command": "discharge", "ok": False, "error": "HypothesisViolation", "detail": str(exc)}
        return rec, VIOLATION
    rep = verify(G, led)
    rep["special_c4"] = []
    from .discharge import special_c4s

    for c in special_c4s(G, led.clusters):
        t = bound_trace(G, led, c)
        rep["special_c4"].append(t)
    if args.ledger:
        _write_json(args.ledger, led.to_json())
    if args.report:
        _write_json(args.report, rep)
    rec = {"command": "discharge", **rep}
    return rec, OK if rep["ok"] else VIOLATION


def cmd_gen(args):
    from .generator import FilterTooStrict, parse_filters, random_instances

    seed = _seed(args)
    try:
        filters = parse_filters(args.filters)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    files = []
    too_strict = None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", FilterTooStrict)
        try:
            stream = random_instances(args.n, seed, filters, count=args.count, cap=args.cap)
            graphs = list(stream)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for w in caught:
            if issubclass(w.category, FilterTooStrict):
                too_strict = str(w.message)
    out = Path(args.out) if args.out else None
    records = []
    for i, G in enumerate(graphs):
        if out is not None:
            p = out / f"g-{seed}-{i:05d}.json"
            _write_json(p, G.to_json())
            files.append(str(p))
        else:
            records.append(G.to_json())
    rec = {"command": "gen", "n": args.n, "seed": seed, "filters": list(filters),
           "count": len(graphs), "filter_too_strict": too_strict}
    if out is not None:
        rec["files"] = files
    else:
        rec["graphs"] = records
    return rec, OK


def cmd_fuzz(args):
    from .theorem import TheoremError, fuzz_conjecture, replay_witness

    if args.replay:
        try:
            v = replay_witness(_read_json(args.replay))
        except (TheoremError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad witness: {exc}") from None
        return {"command": "fuzz-conjecture", "replay": str(args.replay), "verdict": v}, (
            VIOLATION if v == "COUNTEREXAMPLE" else OK)
    seed = _seed(args)
    if not 1 <= args.n <= 12:
        raise UsageError("--n must be in 1..12")
    rep = fuzz_conjecture(count=args.count, n=args.n, seed=seed, s=args.s, samples=args.samples,
                          witness_dir=args.witness_dir)
    rep["witness_files"] = sorted(str(p) for p in Path(args.witness_dir).glob(f"conjecture-{seed}-*.json")) \
        if not rep["ok"] else []
    return {"command": "fuzz-conjecture", **rep}, OK if rep["ok"] else VIOLATION


def cmd_verify_theorem(args):
    from .scan import failed, lint_hypotheses
    from .theorem import TheoremError, replay_witness, verify_theorem, write_witness

    if args.replay:
        try:
            v = replay_witness(_read_json(args.replay))
        except (TheoremError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad witness: {exc}") from None
        return {"command": "verify-theorem", "replay": str(args.replay), "verdict": v}, (
            VIOLATION if v == "COUNTEREXAMPLE" else OK)
    seed = _seed(args)
    graphs = [(str(p), _load_graph(p)) for p in args.graph or []]
    if args.generated:
        from .generator import random_instances

        for i, G in enumerate(random_instances(args.n, seed, ("chorded6", "fig4", "outer3"), count=args.generated)):
            graphs.append((f"generated:{seed}:{i}", G))
    if not graphs:
        raise UsageError("verify-theorem needs --graph or --generated")
    results = []
    ok = True
    for name, G in graphs:
        if G.n > 10:
            raise UsageError(f"{name}: more than 10 vertices")
        bad = failed(lint_hypotheses(G, "theorem"))
        if bad:
            results.append({"graph": name, "skipped": True, "failed_hypotheses": bad})
            continue
        rep = verify_theorem(G, seed, s=args.s, samples=args.samples)
        rep["graph"] = name
        if not rep["ok"]:
            ok = False
            path = Path(args.witness_dir) / f"theorem-{seed}-{len(results)}.json"
            write_witness(rep["witness"], path)
            rep["witness_file"] = str(path)
        results.append(rep)
    checked = sum(1 for r in results if not r.get("skipped"))
    rec = {"command": "verify-theorem", "ok": ok, "seed": seed, "checked": checked, "results": results}
    return rec, OK if ok else VIOLATION


# parser ------------------------------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="dpd", description="DP-colouring and discharging toolkit")
    p.add_argument("--version", action="version", version=f"dpd {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=None, help="worker cap (env DPD_JOBS)")
    common.add_argument("-v", "--verbose", action="count", default=0)
    seeded = _Parser(add_help=False)
    seeded.add_argument("--seed", type=int, default=None)
    seeded.add_argument("--entropy", choices=("ok",), default=None, help="allow a random seed")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help, parents=(common,)):
        sp = sub.add_parser(name, help=help, parents=list(parents))
        sp.set_defaults(fn=fn)
        return sp

    sp = add("build-check", cmd_build_check, "build a graph and check Euler's formula")
    sp.add_argument("--graph", required=True)
    sp = add("lint", cmd_lint, "evaluate the structural hypotheses")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--tier", choices=("full", "theorem"), default="full")
    sp = add("scan", cmd_scan, "find library patterns")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--pattern", action="append")
    sp.add_argument("--all", action="store_true")
    sp = add("clusters", cmd_clusters, "classify clusters of 3-faces")
    sp.add_argument("--graph", required=True)
    sp = add("dp-color", cmd_dp_color, "DP-chromatic number by brute force")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--guard", type=int, default=10)
    sp = add("extend", cmd_extend, "extend a partial transversal")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--cover", required=True)
    sp.add_argument("--pick", action="append", help="VERTEX:COLOUR (1-based colour)")
    sp = add("reduce", cmd_reduce, "reducibility oracle", (common, seeded))
    sp.add_argument("--pattern")
    sp.add_argument("--s", type=int, default=4)
    sp.add_argument("--f", choices=("ones", "boundary"), default="ones")
    sp.add_argument("--budget", type=int, default=10**6)
    sp.add_argument("--mode", choices=("auto", "exhaustive", "sampled", "literal"), default="auto")
    sp.add_argument("--witness-out")
    sp.add_argument("--replay")
    sp = add("discharge", cmd_discharge, "run the discharging rules and verify")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--ledger")
    sp.add_argument("--report")
    sp.add_argument("--require", choices=("outer3", "none"), default="outer3")
    sp = add("gen", cmd_gen, "random filtered plane graphs", (common, seeded))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--filters", default="")
    sp.add_argument("--out")
    sp.add_argument("--cap", type=int, default=12)
    sp = add("fuzz-conjecture", cmd_fuzz, "sample covers of chorded-6-cycle-free graphs", (common, seeded))
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--s", type=int, default=4)
    sp.add_argument("--samples", type=int, default=256)
    sp.add_argument("--witness-dir", default="witnesses")
    sp.add_argument("--replay")
    sp = add("verify-theorem", cmd_verify_theorem, "check precolouring extension on small graphs",
             (common, seeded))
    sp.add_argument("--graph", action="append")
    sp.add_argument("--generated", type=int, default=0)
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--s", type=int, default=4)
    sp.add_argument("--samples", type=int, default=2000)
    sp.add_argument("--witness-dir", default="witnesses")
    sp.add_argument("--replay")
    return p


def run(argv=None):
    """(record, exit code); usage errors give an error record and code 2."""
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        if getattr(args, "seed", None) is not None and args.seed < 0:
            raise UsageError("--seed must be nonnegative")
        return args.fn(args) + (fmt,)
    except UsageError as exc:
        return {"error": str(exc)}, USAGE, fmt
    except SystemExit as exc:  # --help / --version
        return None, int(exc.code or 0), fmt


def main(argv=None):
    try:
        rec, code, fmt = run(argv)
    except KeyboardInterrupt:
        return 130
    except Exception as exc:  # last resort: never a traceback
        rec, code, fmt = {"error": f"internal error: {type(exc).__name__}: {exc}"}, USAGE, "json"
    if rec is not None:
        emit(rec, fmt, sys.stderr if code == USAGE and "error" in rec else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
