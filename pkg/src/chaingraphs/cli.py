"""Command line interface.

Exit codes: 0 success, 1 property violation (witness printed), 2 usage or
precondition error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import ages, families, graphs, realizers, structure, verify, words
from .canon import canonical_form
from .embed import NODE_BUDGET, all_embeddings, embeds
from .errors import BudgetExceeded, UsageError
from .verdict import Verdict

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class Report:
    """Text lines plus a structured document; exactly one of them is printed."""

    def __init__(self, doc: dict, lines: list[str] | None = None, code: int = EXIT_OK):
        self.doc = doc
        self.lines = lines if lines is not None else []
        self.code = code


def _verdict_report(v: Verdict, extra: dict | None = None) -> Report:
    doc = {"status": v.status, "witness": _jsonable(v.witness), "detail": v.detail}
    if extra:
        doc.update(extra)
    if v.ok:
        code = EXIT_OK
    elif v.status == "precondition":
        code = EXIT_USAGE
    elif v.status in ("unknown", "no_within_window"):
        code = EXIT_OK
    else:
        code = EXIT_VIOLATION
    return Report(doc, [str(v)], code)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, graphs.Graph):
        return graphs.to_dict(x)
    return x


def _words_out(ws) -> list[str]:
    return [words.show(w) for w in ws]


# --------------------------------------------------------------------------
# inputs

def _graph_arg(args, word_attr: str = "word", file_attr: str = "file") -> graphs.Graph:
    w = getattr(args, word_attr, None)
    path = getattr(args, file_attr, None)
    if (w is None) == (path is None):
        raise UsageError(f"give exactly one of --{word_attr.replace('_', '-')} or --{file_attr.replace('_', '-')}")
    if w is not None:
        return graphs.graph_from_word(w)
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return graphs.from_json(text) if text.lstrip().startswith("{") else graphs.from_text(text)


def _stream(spec: str) -> words.WordStream:
    return words.parse_stream(spec)


def _finite(spec: str) -> str:
    """A plain bit string, or ``finite:<bits>``."""
    if ":" in spec:
        s = words.parse_stream(spec)
        if not s.is_finite:
            raise UsageError("a finite word is required here")
        return s.word
    return words.check_word("" if spec == "-" else spec)


def _window(args, stream: words.WordStream, order: int) -> int:
    return args.window if args.window is not None else ages.default_window(stream, order)


# --------------------------------------------------------------------------
# word

def _stream_or_bits(spec: str) -> words.WordStream:
    """A stream spec, or a bare bit string read as a finite word."""
    if ":" not in spec and set(spec) <= {"0", "1"}:
        return words.WordStream("finite", spec)
    return _stream(spec)


def word_factors(args) -> Report:
    s = _stream_or_bits(args.spec)
    window = args.window if args.window is not None else (len(s.word) if s.is_finite else 1000)
    if args.exact is not None:
        out = words.factors(s.prefix(window), args.exact)
    else:
        out = words.factor_set(s, args.max_len, window)
    return Report({"factors": out}, _words_out(out))


def word_bounds(args) -> Report:
    s = _stream(args.spec)
    out = words.word_bounds(s, args.max_len, args.window)
    return Report({"bounds": out}, _words_out(out))


def word_period(args) -> Report:
    p = words.detect_period(_finite(args.word))
    return Report({"period": p}, ["none" if p is None else str(p)])


def word_recur(args) -> Report:
    m = words.recurrence_function(_stream(args.spec), args.n, args.horizon)
    return Report({"n": args.n, "m": m}, ["none" if m is None else str(m)])


def word_inexhaustible(args) -> Report:
    return _verdict_report(words.is_inexhaustible_window(_stream(args.spec), args.max_len, args.window))


def word_runs(args) -> Report:
    st = words.run_stats(_finite(args.word))
    doc = {"max_zero_run": st.max_zero_run, "max_one_run": st.max_one_run, "l_value": st.l_value}
    return Report(doc, [f"{st.max_zero_run} {st.max_one_run} {st.l_value}"])


def word_complement(args) -> Report:
    c = words.complement_word(_finite(args.word))
    return Report({"word": c}, [words.show(c)])


# --------------------------------------------------------------------------
# graph

def _graph_report(g: graphs.Graph) -> Report:
    return Report(graphs.to_dict(g), graphs.to_text(g).splitlines())


def graph_build(args) -> Report:
    return _graph_report(_graph_arg(args))


def graph_complement(args) -> Report:
    return _graph_report(graphs.complement(_graph_arg(args)))


def graph_modules(args) -> Report:
    if args.classify:
        if args.word is None:
            raise UsageError("--classify needs --word")
        found = structure.classify_modules_gw(args.word)
        doc = {"modules": [{"shape": m.shape, "pattern": m.word_pattern, "labels": list(m.witness)}
                           for m in found]}
        return Report(doc, [str(m) for m in found])
    mods = graphs.nontrivial_modules(_graph_arg(args), args.budget)
    return Report({"modules": [list(m) for m in mods]}, [" ".join(map(str, m)) for m in mods])


def graph_prime(args) -> Report:
    if args.deletions:
        if args.word is None:
            raise UsageError("--deletions needs --word")
        v = structure.deletion_confinement(args.word)
        table = v.data["deletions"]
        rep = _verdict_report(v, {"deletions": {str(k): b for k, b in table.items()}})
        rep.lines = [f"{x} {'prime' if b else 'not-prime'}" for x, b in table.items()] + rep.lines
        return rep
    if args.runs is not None:
        if args.word is None:
            raise UsageError("--runs needs --word")
        try:
            z, o = (int(x) for x in args.runs.split(","))
        except ValueError:
            raise UsageError("--runs takes ZERO,ONE") from None
        return _verdict_report(structure.check_length_threshold(words.RunStats(z, o), args.word))
    g = _graph_arg(args)
    prime = graphs.is_prime(g, args.budget)
    doc = {"prime": prime}
    if args.word is not None:
        doc["pattern_predicate"] = structure.prime_gw_predicate(args.word)
    return Report(doc, ["prime" if prime else "not prime"])


def graph_embed(args) -> Report:
    h = _graph_arg(args, "pattern_word", "pattern")
    g = _graph_arg(args, "host_word", "host")
    if args.all:
        maps = all_embeddings(h, g, args.budget)
        lines = [" ".join(f"{k}->{v}" for k, v in f.items()) for f in maps]
        return Report({"count": len(maps), "embeddings": [_jsonable(f) for f in maps]},
                      lines + [f"{len(maps)} embeddings"])
    f = embeds(h, g, args.budget)
    if f is None:
        return Report({"embedding": None}, ["absent"])
    return Report({"embedding": _jsonable(f)}, [" ".join(f"{k}->{v}" for k, v in f.items())])


def graph_canon(args) -> Report:
    key = canonical_form(_graph_arg(args))
    return Report({"key": key.hex()}, [key.hex()])


# --------------------------------------------------------------------------
# realizer

def _realizer_arg(args, w: str) -> realizers.Realizer:
    if args.realizer:
        return realizers.Realizer.from_text(Path(args.realizer).read_text())
    return realizers.build_realizer(w)


def realizer_build(args) -> Report:
    R = realizers.build_realizer(args.word)
    return Report({"L": list(R.L), "M": list(R.M)}, R.to_text().splitlines())


def realizer_verify(args) -> Report:
    g = graphs.graph_from_word(args.word)
    ok = realizers.verify_realizer(g, _realizer_arg(args, args.word))
    return Report({"verified": ok}, ["verified" if ok else "not a realizer"],
                  EXIT_OK if ok else EXIT_VIOLATION)


def realizer_perm(args) -> Report:
    g = graphs.graph_from_word(args.word)
    sigma = realizers.permutation_from_realizer(_realizer_arg(args, args.word), g)
    return Report({"permutation": list(sigma)}, [" ".join(map(str, sigma))])


def realizer_intervals(args) -> Report:
    return _verdict_report(realizers.interval_confinement_check(args.word, _realizer_arg(args, args.word)))


def realizer_certify(args) -> Report:
    g = _graph_arg(args)
    P = realizers.is_comparability(g, args.budget)
    perm = realizers.is_permutation_graph(g, args.budget)
    doc = {"comparability": P is not None, "permutation_graph": perm,
           "orientation": sorted(list(p) for p in P.less) if P else None}
    lines = [f"comparability {'yes' if P else 'no'}", f"permutation-graph {'yes' if perm else 'no'}"]
    return Report(doc, lines)


# --------------------------------------------------------------------------
# age

def age_members(args) -> Report:
    s = _stream(args.spec)
    window = _window(args, s, args.max_order)
    cat = ages.age_members(s, args.max_order, window)
    lines = cat.dump_lines()
    doc = {"window": window, "counts": {str(k): v for k, v in cat.counts().items()},
           "classes": [{"order": k[0], "key": k.hex(), "witness": list(cat.classes[k].witness)}
                       for k in cat.keys()]}
    return Report(doc, lines + [f"{len(cat)} classes"])


def age_contains(args) -> Report:
    s = _stream(args.spec)
    h = _graph_arg(args)
    return _verdict_report(ages.age_contains(s, h, args.window, args.budget))


def age_bounds(args) -> Report:
    s = _stream(args.spec)
    report = ages.age_bounds(s, args.max_order, args.window)
    lines = [" ".join(f"{a}-{b}" for a, b in g.edges()) or "-" for g in report.bounds]
    lines = [f"{g.order} {line}" for g, line in zip(report.bounds, lines)]
    done = "unknown" if report.complete_up_to is None else report.complete_up_to
    lines.append(f"{len(report.bounds)} bounds, window {report.window}, complete up to {done}")
    return Report(report.to_dict(), lines)


def age_transfer(args) -> Report:
    s = _stream(args.spec)
    g, v = ages.bound_from_word_bound(s, _finite(args.word), args.window)
    rep = _verdict_report(v, {"graph": graphs.to_dict(g)})
    rep.lines = graphs.to_text(g).splitlines() + rep.lines
    return rep


def age_saturate(args) -> Report:
    same = ages.saturation_check(_stream(args.spec), args.max_order, args.w1, args.w2)
    return Report({"saturated": same}, ["saturated" if same else "not saturated"])


def age_rigidity(args) -> Report:
    return _verdict_report(ages.embedding_rigidity_check(_stream(args.spec), _finite(args.word),
                                                         args.window, args.budget))


def age_necessity(args) -> Report:
    v = ages.prefix_embedding_necessity_check(_stream(args.spec), _finite(args.word), args.window, args.budget)
    return _verdict_report(v, {"checks": v.data})


def age_jonsson(args) -> Report:
    rep = ages.jonsson_levels(_stream(args.spec), args.max_height, args.window)
    lines = [f"{n} {size} {'unknown' if rep.witnesses[n] is None else rep.witnesses[n]}"
             for n, size in enumerate(rep.level_sizes, start=1)]
    return Report(rep.to_dict(), lines)


def age_inclusion(args) -> Report:
    v = ages.factor_inclusion_check(_stream(args.s1), _stream(args.s2), args.max_len, args.window)
    return _verdict_report(v, {"data": v.data})


# --------------------------------------------------------------------------
# family, verify

def family_gen(args) -> Report:
    return _graph_report(families.generate(args.name, args.n))


def family_sweep(args) -> Report:
    rows = families.family_primality_sweep(args.n_max)
    v = families.sweep_verdict(rows)
    rep = _verdict_report(v, {"rows": [{"family": r.family, "n": r.n, "order": r.order, "prime": r.prime}
                                       for r in rows]})
    rep.lines = [f"{r.family} {r.n} {'prime' if r.prime else 'not-prime'}" for r in rows] + rep.lines
    return rep


def verify_suite(args) -> Report:
    results = verify.run_suite(args.suite, args.max_len)
    lines = []
    for r in results:
        lines.append(r.summary())
        lines.extend("    " + line for line in r.lines)
    ok = all(r.passed for r in results)
    doc = {"suite": args.suite, "passed": ok,
           "criteria": [{"number": r.number, "title": r.title, "passed": r.passed, "lines": r.lines}
                        for r in results]}
    return Report(doc, lines, EXIT_OK if ok else EXIT_VIOLATION)


# --------------------------------------------------------------------------
# parser

def _graph_inputs(p, budget: int | None = None):
    p.add_argument("--word", help="build G_w from this 0-1 word")
    p.add_argument("--file", help="graph file in text or JSON format ('-' for stdin)")
    if budget is not None:
        p.add_argument("--budget", type=int, default=budget)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="chaingraphs", description="0-1 words, chain graphs G_w and their ages")
    top.add_argument("--json", action="store_true", help="print one JSON document instead of text")
    top.add_argument("--threads", type=int, default=1, help="worker cap (computation is single-threaded)")
    verbs = top.add_subparsers(dest="verb", required=True)

    # word
    word = verbs.add_parser("word").add_subparsers(dest="op", required=True)
    p = word.add_parser("factors", help="factor set of a stream, or factors of one length")
    p.add_argument("spec")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--window", type=int)
    p.add_argument("--exact", type=int, help="only factors of exactly this length")
    p.set_defaults(fn=word_factors)
    p = word.add_parser("bounds")
    p.add_argument("spec")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--window", type=int, default=1000)
    p.set_defaults(fn=word_bounds)
    p = word.add_parser("period")
    p.add_argument("word")
    p.set_defaults(fn=word_period)
    p = word.add_parser("recur")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--horizon", type=int, default=1000)
    p.set_defaults(fn=word_recur)
    p = word.add_parser("inexhaustible")
    p.add_argument("spec")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--window", type=int, default=1000)
    p.set_defaults(fn=word_inexhaustible)
    p = word.add_parser("runs")
    p.add_argument("word")
    p.set_defaults(fn=word_runs)
    p = word.add_parser("complement")
    p.add_argument("word")
    p.set_defaults(fn=word_complement)

    # graph
    graph = verbs.add_parser("graph").add_subparsers(dest="op", required=True)
    p = graph.add_parser("build")
    _graph_inputs(p)
    p.set_defaults(fn=graph_build)
    p = graph.add_parser("complement")
    _graph_inputs(p)
    p.set_defaults(fn=graph_complement)
    p = graph.add_parser("modules")
    _graph_inputs(p, graphs.MODULE_BUDGET)
    p.add_argument("--classify", action="store_true", help="report the word pattern of each module")
    p.set_defaults(fn=graph_modules)
    p = graph.add_parser("prime")
    _graph_inputs(p, graphs.MODULE_BUDGET)
    p.add_argument("--deletions", action="store_true", help="primality after each vertex deletion")
    p.add_argument("--runs", help="ZERO,ONE run bounds of the ambient word set: check the length threshold")
    p.set_defaults(fn=graph_prime)
    p = graph.add_parser("embed")
    p.add_argument("--pattern-word")
    p.add_argument("--pattern")
    p.add_argument("--host-word")
    p.add_argument("--host")
    p.add_argument("--all", action="store_true")
    p.add_argument("--budget", type=int, default=NODE_BUDGET)
    p.set_defaults(fn=graph_embed)
    p = graph.add_parser("canon")
    _graph_inputs(p)
    p.set_defaults(fn=graph_canon)

    # realizer
    real = verbs.add_parser("realizer").add_subparsers(dest="op", required=True)
    for name, fn in (("build", realizer_build), ("verify", realizer_verify),
                     ("perm", realizer_perm), ("intervals", realizer_intervals)):
        p = real.add_parser(name)
        p.add_argument("--word", required=True)
        if name != "build":
            p.add_argument("--realizer", help="realizer file with 'L:' and 'M:' lines (default: built)")
        p.set_defaults(fn=fn)
    p = real.add_parser("certify", help="comparability and permutation-graph tests")
    _graph_inputs(p, realizers.ORIENT_BUDGET)
    p.set_defaults(fn=realizer_certify)

    # age
    age = verbs.add_parser("age").add_subparsers(dest="op", required=True)
    p = age.add_parser("members")
    p.add_argument("spec")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--window", type=int)
    p.set_defaults(fn=age_members)
    p = age.add_parser("contains")
    p.add_argument("spec")
    _graph_inputs(p, NODE_BUDGET)
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(fn=age_contains)
    p = age.add_parser("bounds")
    p.add_argument("spec")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--window", type=int)
    p.set_defaults(fn=age_bounds)
    p = age.add_parser("transfer")
    p.add_argument("spec")
    p.add_argument("word")
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(fn=age_transfer)
    p = age.add_parser("saturate")
    p.add_argument("spec")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--w1", type=int, required=True)
    p.add_argument("--w2", type=int, required=True)
    p.set_defaults(fn=age_saturate)
    for name, fn in (("rigidity", age_rigidity), ("necessity", age_necessity)):
        p = age.add_parser(name)
        p.add_argument("spec")
        p.add_argument("word")
        p.add_argument("--window", type=int, required=True)
        p.add_argument("--budget", type=int, default=NODE_BUDGET)
        p.set_defaults(fn=fn)
    p = age.add_parser("jonsson")
    p.add_argument("spec")
    p.add_argument("--max-height", type=int, required=True)
    p.add_argument("--window", type=int, default=1000)
    p.set_defaults(fn=age_jonsson)
    p = age.add_parser("inclusion")
    p.add_argument("s1")
    p.add_argument("s2")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--window", type=int, default=200)
    p.set_defaults(fn=age_inclusion)

    # family
    fam = verbs.add_parser("family").add_subparsers(dest="op", required=True)
    p = fam.add_parser("gen")
    p.add_argument("name", choices=families.FAMILIES)
    p.add_argument("n", type=int)
    p.set_defaults(fn=family_gen)
    p = fam.add_parser("sweep")
    p.add_argument("--n-max", type=int, default=families.SWEEP_BUDGET)
    p.set_defaults(fn=family_sweep)

    # verify
    p = verbs.add_parser("verify")
    p.add_argument("suite", choices=list(verify.SUITES))
    p.add_argument("--max-len", type=int, help="word length for the module and realizer sweeps")
    p.set_defaults(fn=verify_suite)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report.doc))
    else:
        for line in report.lines:
            print(line)
    return report.code


if __name__ == "__main__":
    sys.exit(main())
