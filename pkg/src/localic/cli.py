"""Command line front end: validate documents, run the suite, query frames.

Exit codes: 0 success, 1 at least one theorem check failed, 2 input or
validation error.  Suite reports are byte-deterministic for a given spec,
filter and corpus; wall time is written to stderr only so report files
can be compared directly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fnmatch import fnmatch

from .errors import LocalicError
from .frame import FiniteFrame
from .generators import (
    GenSpec, gen_chains, gen_dense_sublocales, gen_frames, gen_squares,
    gen_triangles,
)
from .jsonio import load_document
from .registry import REGISTRY, checks_in_scope
from .remoteness import RemoteContext, _sample
from .result import FAIL, HYPOTHESES_NOT_MET, PASS, SKIPPED
from .sublocale import (
    Sublocale, booleanization, enumerate_sublocales, is_dense_in_itself,
    is_rare, nd_join, serialize_sublocale, whole_subl,
)

# Suite-level corpus budgets; deterministic truncation points.
MAX_CONTEXTS_PER_FRAME = 16
SQUARE_BUDGET = 400
CHAIN_BUDGET = 240
TRIANGLE_BUDGET = 240


def build_corpus(spec: GenSpec) -> dict[str, list]:
    """All suite instances for a spec, keyed by check scope."""
    frames = gen_frames(spec)
    contexts = []
    for f in frames:
        dense = gen_dense_sublocales(f)
        keep = set(id(s) for s in _sample(dense, MAX_CONTEXTS_PER_FRAME))
        bl = booleanization(f)
        for s in dense:
            if id(s) in keep or s.mask == bl.mask or s.is_whole():
                contexts.append(RemoteContext(f, s))
    squares = gen_squares(frames, budget=SQUARE_BUDGET, seed=spec.seed)
    chains = gen_chains(squares, budget=CHAIN_BUDGET)
    triangles = gen_triangles(frames, budget=TRIANGLE_BUDGET, seed=spec.seed)
    return {"frame": frames, "context": contexts, "square": squares,
            "chain": chains, "triangle": triangles}


def _run_shard(args: tuple) -> tuple[list[dict], dict[str, int]]:
    """Worker: regenerate the corpus and run its slice of the instances."""
    spec_json, pattern, shard, nshards = args
    spec = GenSpec.from_json(spec_json)
    corpus = build_corpus(spec)
    counts = {scope: len(items) for scope, items in corpus.items()}
    rows = []
    idx = 0
    for scope in ("frame", "context", "square", "chain", "triangle"):
        checks = [c for c in checks_in_scope(scope) if fnmatch(c.id, pattern)]
        for inst in corpus[scope]:
            if checks and idx % nshards == shard:
                for c in checks:
                    rows.append(c.runner(inst).to_json())
            idx += 1
    return rows, counts


def run_suite(spec: GenSpec, pattern: str, jobs: int) -> dict:
    if jobs <= 1:
        shards = [_run_shard((spec.to_json(), pattern, 0, 1))]
    else:
        args = [(spec.to_json(), pattern, k, jobs) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shards = list(pool.map(_run_shard, args))
    rows = [r for part, _ in shards for r in part]
    counts = shards[0][1]
    rows.sort(key=lambda r: (r["statement_id"], r["subject"],
                             r["verdict"], r.get("witness", "")))
    tallies: dict[str, dict[str, int]] = {}
    failures = []
    for cid in sorted(c for c in REGISTRY if fnmatch(c, pattern)):
        tallies[cid] = {PASS: 0, HYPOTHESES_NOT_MET: 0, SKIPPED: 0, FAIL: 0}
    for r in rows:
        tallies[r["statement_id"]][r["verdict"]] += 1
        if r["verdict"] == FAIL:
            failures.append(r)
    return {
        "schema": 1,
        "genspec": spec.to_json(),
        "filter": pattern,
        "corpus": counts,
        "checks": tallies,
        "failures": failures,
        "input_hashes": {},
    }


def render_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Query subcommand
# ---------------------------------------------------------------------------

def _parse_subl(frame: FiniteFrame, token: str) -> Sublocale:
    if token == "L":
        return whole_subl(frame)
    if token == "BL":
        return booleanization(frame)
    labels = token.strip("{}").split(",")
    return Sublocale.of(frame, [frame.index_of(x) for x in labels if x])


def answer_query(frame: FiniteFrame, words: list[str]):
    question = words[0]
    s = None
    for w in words[1:]:
        if w.startswith("S="):
            s = _parse_subl(frame, w[2:])
    if question == "booleanization":
        return serialize_sublocale(booleanization(frame))
    if question == "sublocale-count":
        return len(enumerate_sublocales(frame))
    if s is None and question in ("remote-set", "rs", "star-rs", "nd",
                                  "rare?"):
        s = whole_subl(frame)
    if question == "remote-set":
        ctx = RemoteContext(frame, s)
        return sorted(serialize_sublocale(t) for t in ctx.remote_set())
    if question == "rs":
        return serialize_sublocale(RemoteContext(frame, s).rs())
    if question == "star-rs":
        return serialize_sublocale(RemoteContext(frame, s).star_rs())
    if question == "nd":
        return serialize_sublocale(nd_join(frame, s))
    if question == "rare?":
        return is_rare(frame, s)
    if question == "dense-in-itself?":
        return is_dense_in_itself(frame)
    raise LocalicError(f"unknown question {question!r}")


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="localic",
        description="finite-locale computations and theorem suite")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate a JSON document")
    v.add_argument("file")

    s = sub.add_parser("suite", help="run the theorem suite over a corpus")
    s.add_argument("--family", required=True,
                   choices=["all-posets-up-to", "random-poset", "chain",
                            "boolean-algebra", "finite-topology"])
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=0,
                   help="instances for the random families")
    s.add_argument("--filter", default="*", help="check-id glob")
    s.add_argument("--jobs", type=int, default=0,
                   help="parallel workers (default: available cores)")
    s.add_argument("--out", help="also write the report to this file")

    q = sub.add_parser("query", help="ask a question about a frame document")
    q.add_argument("file")
    q.add_argument("question", nargs="+")
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "validate":
        try:
            obj = load_document(args.file)
        except LocalicError as e:
            print(f"invalid: {type(e).__name__}: {e}", file=sys.stderr)
            return 2
        print(f"ok: {type(obj).__name__}")
        return 0

    if args.command == "suite":
        jobs = args.jobs
        env = os.environ.get("LOCALIC_JOBS")
        if env:
            jobs = int(env)
        if jobs <= 0:
            jobs = os.cpu_count() or 1
        try:
            spec = GenSpec(args.family, args.max_size, args.seed, args.count)
        except ValueError as e:
            print(str(e), file=sys.stderr)
            return 2
        started = time.monotonic()
        report = run_suite(spec, args.filter, jobs)
        elapsed = time.monotonic() - started
        text = render_report(report)
        sys.stdout.write(text)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        print(f"wall-time: {elapsed:.2f}s", file=sys.stderr)
        fails = sum(t[FAIL] for t in report["checks"].values())
        return 1 if fails else 0

    # query
    try:
        obj = load_document(args.file)
        if not isinstance(obj, FiniteFrame):
            raise LocalicError("query expects a frame document")
        answer = answer_query(obj, args.question)
    except LocalicError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(json.dumps(answer, sort_keys=True))
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
