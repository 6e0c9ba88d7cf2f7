"""Command-line front end.

Subcommands: analyze, count, set, enumerate, congruent, construct,
bounds, verify.  Global flags (--json, --guard, --seed, --alphabet) are
accepted before or after the subcommand.  Exit codes: 0 for success /
PASS / true, 1 for a negative result (FAIL / false), 2 for usage or
parse errors.  In JSON mode every number that can exceed 2^63 is a
decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .arch import arch_factorize
from .extremal import (
    DEFAULT_GENERATOR_GUARD,
    ExtremalParams,
    arch_structure_summary,
    count_shortest_min_absent_words,
    enumerate_shortest_min_absent_words,
    max_scatfact_count,
    min_absent_count,
    min_absent_word,
    min_scatfact_word,
    shortest_min_absent_length,
)
from .factors import (
    DEFAULT_SET_GUARD,
    count_scatfact_all_lengths,
    enumerate_scatfact,
    scatfact_set,
    simon_congruent,
)
from .oracle import (
    DEFAULT_SEED,
    verify_always_absent,
    verify_injection,
    verify_max_absent_extremality,
    verify_min_absent_extremality,
)
from .words import Alphabet, GuardExceeded, Word, parse_word

USAGE_ERROR = 2


@dataclass(frozen=True)
class CliConfig:
    as_json: bool = False
    guard: int | None = None
    seed: int = DEFAULT_SEED
    alphabet: str | None = None


def _config(ns: argparse.Namespace) -> CliConfig:
    return CliConfig(
        as_json=getattr(ns, "json", False) or False,
        guard=getattr(ns, "guard", None),
        seed=getattr(ns, "seed", None) or DEFAULT_SEED,
        alphabet=getattr(ns, "alphabet", None),
    )


def _parse(text: str, cfg: CliConfig) -> Word:
    if cfg.alphabet is not None:
        return parse_word(text, Alphabet(cfg.alphabet))
    if text == "":
        # empty input with no explicit alphabet: any one-letter alphabet works
        return parse_word(text, Alphabet("a"))
    return parse_word(text)


def _gather_words(ns: argparse.Namespace) -> list[str]:
    texts = list(getattr(ns, "words", []) or [])
    path = getattr(ns, "file", None)
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            texts.extend(line.rstrip("\n") for line in fh)
    return texts


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _analyze_report(w: Word) -> dict:
    f = arch_factorize(w)
    counts = count_scatfact_all_lengths(w)
    return {
        "word": w.text,
        "alphabet": w.alphabet.letters,
        "factorization": f.render(),
        "iota": f.iota,
        "modus": f.modus.text,
        "inners": [f.inner(i).text for i in range(1, f.iota + 1)],
        "rest": f.rest.text,
        "counts": [str(c) for c in counts.counts],
    }


def cmd_analyze(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    texts = _gather_words(ns)
    if not texts:
        raise ValueError("no input words (pass them as arguments or via --file)")
    first = True
    for text in texts:
        report = _analyze_report(_parse(text, cfg))
        if cfg.as_json:
            _emit(report)
            continue
        if not first:
            print()
        first = False
        print(f"word: {report['word']}")
        print(f"alphabet: {report['alphabet']}")
        print(f"factorization: {report['factorization']}")
        print(f"iota: {report['iota']}")
        print(f"modus: {report['modus']}")
        print(f"inners: {' '.join(report['inners'])}")
        print(f"rest: {report['rest']}")
        print(f"counts: {' '.join(report['counts'])}")
    return 0


def cmd_count(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    texts = _gather_words(ns)
    if not texts:
        raise ValueError("no input words (pass them as arguments or via --file)")
    for text in texts:
        w = _parse(text, cfg)
        table = count_scatfact_all_lengths(w)
        if cfg.as_json:
            _emit(table.to_json_dict())
        else:
            print(f"{w.text}\t{' '.join(str(c) for c in table.counts)}")
    return 0


def cmd_set(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    texts = _gather_words(ns)
    if len(texts) != 1:
        raise ValueError("set expects exactly one word")
    w = _parse(texts[0], cfg)
    guard = cfg.guard if cfg.guard is not None else DEFAULT_SET_GUARD
    factors = scatfact_set(w, ns.k, guard=guard)
    if cfg.as_json:
        _emit({"word": w.text, "k": ns.k, "factors": [u.text for u in factors]})
    else:
        for u in factors:
            print(u.text)
    return 0


def cmd_enumerate(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    texts = _gather_words(ns)
    if len(texts) != 1:
        raise ValueError("enumerate expects exactly one word")
    w = _parse(texts[0], cfg)
    factors = [u.text for u in enumerate_scatfact(w, ns.k, limit=ns.limit)]
    if cfg.as_json:
        _emit({"word": w.text, "k": ns.k, "limit": ns.limit, "factors": factors})
    else:
        for text in factors:
            print(text)
    return 0


def cmd_congruent(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    texts = _gather_words(ns)
    if len(texts) != 2:
        raise ValueError("congruent expects exactly two words")
    if cfg.alphabet is not None:
        alphabet = Alphabet(cfg.alphabet)
    else:
        union = "".join(sorted(set(texts[0]) | set(texts[1])))
        alphabet = Alphabet(union if union else "a")
    w = parse_word(texts[0], alphabet)
    v = parse_word(texts[1], alphabet)
    result = simon_congruent(w, v, ns.k)
    if cfg.as_json:
        _emit({"w": w.text, "v": v.text, "k": ns.k, "congruent": result})
    else:
        print("true" if result else "false")
    return 0 if result else 1


def cmd_construct(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    alphabet = Alphabet(cfg.alphabet) if cfg.alphabet is not None else None
    if ns.kind == "w-min":
        w = min_scatfact_word(ns.sigma, ns.iota, alphabet, ns.permutation)
        if cfg.as_json:
            _emit(arch_structure_summary(w))
        else:
            print(w.text)
        return 0
    if ns.k is None:
        raise ValueError("construct min-absent requires --k")
    p = ExtremalParams(ns.sigma, ns.iota, ns.k)
    if ns.all:
        guard = cfg.guard if cfg.guard is not None else DEFAULT_GENERATOR_GUARD
        words = enumerate_shortest_min_absent_words(p, alphabet, guard=guard)
        if cfg.as_json:
            _emit(
                {
                    "sigma": p.sigma,
                    "iota": p.iota,
                    "k": p.k,
                    "count": str(count_shortest_min_absent_words(p)),
                    "words": [w.text for w in words],
                }
            )
        else:
            for w in words:
                print(w.text)
        return 0
    resolved = alphabet if alphabet is not None else None
    modus = ns.modus_letter
    if modus is None:
        from .extremal import default_alphabet

        modus = (resolved or default_alphabet(p.sigma)).letters[0]
    w = min_absent_word(p, modus, None, resolved)
    if cfg.as_json:
        report = arch_structure_summary(w)
        report["max_scatfact_count"] = str(max_scatfact_count(p))
        report["k"] = p.k
        _emit(report)
    else:
        print(w.text)
    return 0


def cmd_bounds(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    p = ExtremalParams(ns.sigma, ns.iota, ns.k)
    values = {
        "sigma": p.sigma,
        "iota": p.iota,
        "k": p.k,
        "max_scatfact_count": str(max_scatfact_count(p)),
        "min_absent_count": str(min_absent_count(p)),
        "shortest_min_absent_length": shortest_min_absent_length(p),
        "count_shortest_min_absent_words": str(count_shortest_min_absent_words(p)),
    }
    if cfg.as_json:
        _emit(values)
    else:
        for key in (
            "max_scatfact_count",
            "min_absent_count",
            "shortest_min_absent_length",
            "count_shortest_min_absent_words",
        ):
            print(f"{key}: {values[key]}")
    return 0


def cmd_verify(ns: argparse.Namespace) -> int:
    cfg = _config(ns)
    claim = ns.claim
    if claim == "min-absent":
        if ns.k is None:
            raise ValueError("verify min-absent requires --k")
        p = ExtremalParams(ns.sigma, ns.iota, ns.k)
        max_len = ns.max_len if ns.max_len is not None else shortest_min_absent_length(p) + 2
        kwargs = {}
        if cfg.guard is not None:
            kwargs["guard"] = cfg.guard
        report = verify_min_absent_extremality(p, max_len, **kwargs)
    elif claim == "max-absent":
        max_len = ns.max_len if ns.max_len is not None else ns.iota * ns.sigma + 2
        report = verify_max_absent_extremality(ns.sigma, ns.iota, max_len)
    elif claim == "injection":
        if ns.k is None:
            raise ValueError("verify injection requires --k")
        report = verify_injection(
            ns.sigma, ns.iota, ns.k, max_targets=ns.max_targets, seed=cfg.seed
        )
    elif claim == "always-absent":
        if ns.k is None:
            raise ValueError("verify always-absent requires --k")
        p = ExtremalParams(ns.sigma, ns.iota, ns.k)
        max_len = ns.max_len if ns.max_len is not None else p.iota * p.sigma + 2
        kwargs = {}
        if cfg.guard is not None:
            kwargs["guard"] = cfg.guard
        report = verify_always_absent(p, max_len, **kwargs)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown claim {claim!r}")
    if cfg.as_json:
        _emit(report.to_json_dict())
    else:
        print(f"claim: {report.claim_id}")
        print(f"params: {json.dumps(report.params, sort_keys=True)}")
        print(f"instances_checked: {report.instances_checked}")
        print(f"witnesses: {len(report.witnesses)}")
        for witness in report.witnesses[:10]:
            print(f"  witness: {json.dumps(witness, sort_keys=True)}")
        print(f"status: {report.status}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit machine-parseable JSON (big integers as decimal strings)",
    )
    common.add_argument(
        "--guard", type=int, default=argparse.SUPPRESS, metavar="N",
        help="override enumeration/set-size guards",
    )
    common.add_argument(
        "--seed", type=int, default=argparse.SUPPRESS, metavar="S",
        help="seed for sampled verification sweeps",
    )
    common.add_argument(
        "--alphabet", type=str, default=argparse.SUPPRESS, metavar="CHARS",
        help="explicit alphabet (distinct characters, in order)",
    )
    parser = argparse.ArgumentParser(
        prog="scatfact",
        parents=[common],
        description="Scattered-factor analysis, counting, enumeration, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser(
        "analyze", parents=[common],
        help="arch factorization, universality index, and full count table",
    )
    p_analyze.add_argument("words", nargs="*", help="input words")
    p_analyze.add_argument("--file", help="read words from a file, one per line")
    p_analyze.set_defaults(func=cmd_analyze)

    p_count = sub.add_parser(
        "count", parents=[common], help="exact |ScatFact_k| for every k"
    )
    p_count.add_argument("words", nargs="*")
    p_count.add_argument("--file", help="read words from a file, one per line")
    p_count.set_defaults(func=cmd_count)

    p_set = sub.add_parser(
        "set", parents=[common], help="the full length-k factor set (guarded)"
    )
    p_set.add_argument("words", nargs="*")
    p_set.add_argument("--file", help="read the word from a file")
    p_set.add_argument("--k", type=int, required=True)
    p_set.set_defaults(func=cmd_set)

    p_enum = sub.add_parser(
        "enumerate", parents=[common],
        help="stream length-k factors lexicographically, one per line",
    )
    p_enum.add_argument("words", nargs="*")
    p_enum.add_argument("--file", help="read the word from a file")
    p_enum.add_argument("--k", type=int, required=True)
    p_enum.add_argument("--limit", type=int, default=None)
    p_enum.set_defaults(func=cmd_enumerate)

    p_cong = sub.add_parser(
        "congruent", parents=[common],
        help="Simon k-congruence of two words (exit 0 true, 1 false)",
    )
    p_cong.add_argument("words", nargs="*")
    p_cong.add_argument("--file", help="read the two words from a file")
    p_cong.add_argument("--k", type=int, required=True)
    p_cong.set_defaults(func=cmd_congruent)

    p_con = sub.add_parser(
        "construct", parents=[common], help="build an extremal word family member"
    )
    p_con.add_argument("kind", choices=["min-absent", "w-min"])
    p_con.add_argument("--sigma", type=int, required=True)
    p_con.add_argument("--iota", type=int, required=True)
    p_con.add_argument("--k", type=int, default=None)
    p_con.add_argument("--modus-letter", dest="modus_letter", default=None)
    p_con.add_argument("--permutation", default=None, help="first arch of w-min")
    p_con.add_argument(
        "--all", action="store_true",
        help="stream the whole shortest min-absent family (guarded)",
    )
    p_con.set_defaults(func=cmd_construct)

    p_bounds = sub.add_parser(
        "bounds", parents=[common], help="closed-form extremal values for (sigma, iota, k)"
    )
    p_bounds.add_argument("sigma", type=int)
    p_bounds.add_argument("iota", type=int)
    p_bounds.add_argument("k", type=int)
    p_bounds.set_defaults(func=cmd_bounds)

    p_verify = sub.add_parser(
        "verify", parents=[common],
        help="exhaustive small-instance claim verification (exit 0 PASS, 1 FAIL)",
    )
    p_verify.add_argument(
        "claim", choices=["min-absent", "max-absent", "injection", "always-absent"]
    )
    p_verify.add_argument("--sigma", type=int, required=True)
    p_verify.add_argument("--iota", type=int, required=True)
    p_verify.add_argument("--k", type=int, default=None)
    p_verify.add_argument("--max-len", dest="max_len", type=int, default=None)
    p_verify.add_argument("--max-targets", dest="max_targets", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already exits 0 for --help and 2 for usage errors
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return ns.func(ns)
    except (ValueError, GuardExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
