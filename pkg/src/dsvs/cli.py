"""Command line front end.

    dsvs lexicon build --corpus DIR --targets FILE --contexts FILE --out FILE
    dsvs parse [--lexicon FILE] [--strategy S] [--trace] [--format F] "words"
    dsvs disambiguate [--lexicon FILE] [--strategy S] "words"
    dsvs expect [--lexicon FILE] [--strategy S] --after "words" --candidates w1,w2

The lexicon file may also come from the DSVS_LEXICON environment variable.
Strategies: unit, sum (default), direct_sum.  The targets file for lexicon
build lists one entry per line, "word kind" with kind e (entity vector from
co-occurrence counts) or et (one-place verb matrix); the contexts file
lists the property words, one per line.  Lines starting with # are skipped
in both.

Exit status: 0 on success, 1 when the input cannot be analysed (unknown
word, no surviving parse), 2 for bad usage or malformed files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import DeadEnd, DsvsError, LexiconMiss, ParseError, ValidationError
from .interpret import (
    STRATEGIES,
    compile_root,
    disambiguate,
    expect,
    score_candidate,
)
from .lexicon import (
    BOTTOM,
    TOP,
    Lexicon,
    Sense,
    build_cooccurrence,
    build_verb_matrix,
    load_lexicon,
    read_corpus,
    save_lexicon,
    tokenize,
)
from .parser import canonical_view, initial_state, parse_word
from .parser import render as render_tree
from .semtypes import SpaceMap, parse_type
from .tensor import Signature, Space, Tensor, TensorTuple

ENV_LEXICON = "DSVS_LEXICON"


def _build_argparser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="dsvs",
        description="incremental semantic parsing with tensor plausibility",
    )
    sub = top.add_subparsers(dest="command", required=True)

    lex = sub.add_parser("lexicon", help="lexicon file utilities")
    lex_sub = lex.add_subparsers(dest="subcommand", required=True)
    build = lex_sub.add_parser("build", help="count a lexicon out of a corpus")
    build.add_argument("--corpus", required=True, help="directory of *.txt files")
    build.add_argument("--targets", required=True,
                       help="file of 'word kind' lines, kind e or et")
    build.add_argument("--contexts", required=True,
                       help="file of property words, one per line")
    build.add_argument("--out", required=True, help="lexicon file to write")

    def common(p):
        p.add_argument("--lexicon", default=None,
                       help=f"lexicon file (default: ${ENV_LEXICON})")
        p.add_argument("--strategy", choices=STRATEGIES, default="sum",
                       help="stand-in for unheard material (default: sum)")

    parse = sub.add_parser("parse", help="parse a word sequence")
    common(parse)
    parse.add_argument("--trace", action="store_true",
                       help="show the tree after every word")
    parse.add_argument("--format", choices=("text", "json"), default="text")
    parse.add_argument("words", help="the words, in one quoted argument")

    dis = sub.add_parser("disambiguate", help="rank a sequence's live parses")
    common(dis)
    dis.add_argument("words", help="the words, in one quoted argument")

    exp = sub.add_parser("expect", help="rank candidate next words")
    common(exp)
    exp.add_argument("--after", required=True,
                     help="the words already heard, in one quoted argument")
    exp.add_argument("--candidates", required=True,
                     help="comma-separated candidate next words")
    return top


def _need_lexicon(arg) -> Lexicon:
    path = arg or os.environ.get(ENV_LEXICON)
    if not path:
        raise ParseError(
            f"no lexicon given: pass --lexicon or set ${ENV_LEXICON}"
        )
    return load_lexicon(path)


def _fmt_vector(tensor: Tensor) -> str:
    return "(" + ", ".join(str(x) for x in tensor.tolist()) + ")"


def _root_line(candidate, lexicon, strategy) -> str:
    value = compile_root(candidate.tree, lexicon, strategy)
    if isinstance(value, TensorTuple):
        value = value.collapse()
    score = score_candidate(candidate, lexicon, strategy)
    name = lexicon.space_map.sentence.name
    return f"root {name} = {_fmt_vector(value)}  ratio = {score.ratio:.4f}"


def _tree_json(tree) -> dict:
    def node_obj(i: int) -> dict:
        n = tree.nodes[i]
        o: dict = {
            "type": n.sem_type.compact(),
            "requirement": n.requirement,
        }
        if n.formula is not None:
            o["formula"] = n.formula.tolist()
        if i == tree.pointer:
            o["pointer"] = True
        if n.argument is not None:
            o["argument"] = node_obj(n.argument)
        if n.functor is not None:
            o["functor"] = node_obj(n.functor)
        if n.link is not None:
            o["link"] = node_obj(n.link)
        return o

    return node_obj(tree.root)


def _candidate_json(rank, candidate, score, lexicon, strategy) -> dict:
    value = compile_root(candidate.tree, lexicon, strategy)
    if isinstance(value, TensorTuple):
        value = value.collapse()
    return {
        "rank": rank,
        "senses": list(candidate.senses),
        "complete": candidate.tree.is_complete(),
        "root": value.tolist(),
        "score": {"top": score.top, "bottom": score.bottom, "ratio": score.ratio},
        "tree": _tree_json(canonical_view(candidate.tree)),
    }


def _cmd_parse(args) -> int:
    lexicon = _need_lexicon(args.lexicon)
    words = tokenize(args.words)
    state = initial_state()
    trace = []
    for word in words:
        state = parse_word(state, word, lexicon)
        ranked = disambiguate(state, lexicon, args.strategy)
        trace.append((word, len(state.consumed), ranked))

    if not words:
        ranked = disambiguate(state, lexicon, args.strategy)
        trace.append(("", 0, ranked))

    final_ranked = trace[-1][2]

    if args.format == "json":
        doc = {
            "schema": "dsvs/1",
            "words": list(words),
            "strategy": args.strategy,
            "candidates": [
                _candidate_json(k + 1, c, s, lexicon, args.strategy)
                for k, (c, s) in enumerate(final_ranked)
            ],
        }
        if args.trace:
            doc["trace"] = [
                {
                    "word": word,
                    "position": pos,
                    "candidates": len(ranked),
                    "tree": _tree_json(canonical_view(ranked[0][0].tree)),
                }
                for word, pos, ranked in trace
                if word
            ]
        print(json.dumps(doc, ensure_ascii=False, indent=2))
        return 0

    if args.trace:
        for word, pos, ranked in trace:
            if not word:
                continue
            n = len(ranked)
            plural = "candidate" if n == 1 else "candidates"
            print(f"word {pos}: {word}  ({n} {plural})")
            print(render_tree(canonical_view(ranked[0][0].tree)))
            print()

    best, _ = final_ranked[0]
    if not args.trace:
        print(render_tree(canonical_view(best.tree)))
    print(_root_line(best, lexicon, args.strategy))
    return 0


def _cmd_disambiguate(args) -> int:
    lexicon = _need_lexicon(args.lexicon)
    words = tokenize(args.words)
    state = initial_state()
    for word in words:
        state = parse_word(state, word, lexicon)
    ranked = disambiguate(state, lexicon, args.strategy)
    name = lexicon.space_map.sentence.name
    for k, (cand, score) in enumerate(ranked, start=1):
        value = compile_root(cand.tree, lexicon, args.strategy)
        if isinstance(value, TensorTuple):
            value = value.collapse()
        senses = " ".join(cand.senses)
        print(f"{k}. {senses}  root {name} = {_fmt_vector(value)}  "
              f"ratio = {score.ratio:.4f}")
    return 0


def _cmd_expect(args) -> int:
    lexicon = _need_lexicon(args.lexicon)
    state = initial_state()
    for word in tokenize(args.after):
        state = parse_word(state, word, lexicon)
    words = [w for w in (t.strip() for t in args.candidates.split(",")) if w]
    entries = expect(state, words, lexicon, args.strategy)
    rank = 0
    for e in entries:
        if e.score is None:
            label = e.sense_id or "?"
            print(f"-. {e.word} ({label})  no parse")
        else:
            rank += 1
            print(f"{rank}. {e.word} ({e.sense_id})  ratio = {e.score.ratio:.4f}")
    return 0


def _read_word_lines(path):
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            out.append((lineno, line.split()))
    return out


def _cmd_lexicon_build(args) -> int:
    excerpts = read_corpus(args.corpus)
    contexts = []
    for lineno, fields in _read_word_lines(args.contexts):
        if len(fields) != 1:
            raise ParseError(
                f"{args.contexts}:{lineno}: expected one word per line"
            )
        contexts.append(fields[0].lower())

    targets = []
    for lineno, fields in _read_word_lines(args.targets):
        if len(fields) != 2:
            raise ParseError(
                f"{args.targets}:{lineno}: expected 'word kind' per line"
            )
        word, kind = fields[0].lower(), fields[1]
        if kind not in ("e", "et"):
            raise ParseError(
                f"{args.targets}:{lineno}: kind must be e or et, got {kind!r}"
                + (": two-place tensors cannot be counted from a plain corpus"
                   if kind == "eet" else "")
            )
        targets.append((word, kind))

    w_space = Space("W", tuple(contexts))
    s_space = Space("S", (TOP, BOTTOM))
    smap = SpaceMap(entity=w_space, sentence=s_space)

    noun_words = [w for w, kind in targets if kind == "e"]
    noun_rows = {}
    if noun_words:
        counts = build_cooccurrence(excerpts, noun_words, contexts)
        for i, w in enumerate(noun_words):
            noun_rows[w] = counts.array[i]

    senses = []
    for word, kind in targets:
        if kind == "e":
            tensor = Tensor(Signature((w_space,)), noun_rows[word])
            senses.append(Sense(f"{word}#n", word, parse_type("e"), tensor))
        else:
            matrix = build_verb_matrix(excerpts, word, contexts)
            senses.append(Sense(f"{word}#v", word, parse_type("et"), matrix))

    lexicon = Lexicon((w_space, s_space), smap, tuple(senses))
    save_lexicon(lexicon, args.out)
    print(f"wrote {args.out}: {len(senses)} senses over {len(excerpts)} excerpts")
    return 0


def main(argv=None) -> int:
    parser = _build_argparser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "lexicon":
            return _cmd_lexicon_build(args)
        if args.command == "parse":
            return _cmd_parse(args)
        if args.command == "disambiguate":
            return _cmd_disambiguate(args)
        if args.command == "expect":
            return _cmd_expect(args)
        parser.error(f"unknown command {args.command!r}")
    except (LexiconMiss, DeadEnd) as e:
        print(f"dsvs: {e}", file=sys.stderr)
        return 1
    except (ParseError, ValidationError) as e:
        print(f"dsvs: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"dsvs: {e}", file=sys.stderr)
        return 2
    except DsvsError as e:
        print(f"dsvs: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
