"""Batch command-line interface.

Subcommands: parse, treesim, weights, stats, eval, export-targets.  All
outputs are deterministic JSON (or JSON lines); ``--pretty`` indents and,
for eval, prints a human-readable summary table.  Every flag can also be
set through the environment with a RADTREE_ prefix (RADTREE_TABLE,
RADTREE_OUTPUT, ...).  Exit codes: 0 success, 2 domain or parse error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import EmptyCorpus, MalformedLine, RadtreeError
from .metrics import BucketSpec, EvalReport, evaluate, read_corpus_tsv
from .stats import count_occurrences, read_labels, rssl_distribution
from .table import DecompositionTable
from .targets import build_vocab, export_targets, radical_weights, write_targets_jsonl
from .tree import ArityTable, parse_sequence, rssl, to_preorder
from .treesim import char_sim


def _env(name: str, fallback=None):
    return os.environ.get(f"RADTREE_{name}", fallback)


def _env_flag(name: str) -> bool:
    return _env(name, "") not in ("", "0", "false", "no")


def _single_char(text: str, what: str) -> str:
    if len(text) != 1:
        raise RadtreeError(f"{what} must be a single character, got {text!r}")
    return text


def _load_table(args) -> DecompositionTable:
    arities = ArityTable.from_file(args.arities) if args.arities else ArityTable.default()
    if args.table:
        return DecompositionTable.load(args.table, arities)
    return DecompositionTable(arities=arities)


def _bucket_spec(args) -> BucketSpec:
    kwargs = {}
    rssl_spec = getattr(args, "rssl_buckets", None)
    if rssl_spec:
        simple_max, complex_min = (int(x) for x in rssl_spec.split(","))
        kwargs.update(rssl_simple_max=simple_max, rssl_complex_min=complex_min)
    occn_spec = getattr(args, "occn_buckets", None)
    if occn_spec:
        head, mid, low = (int(x) for x in occn_spec.split(","))
        kwargs.update(occn_head_min=head, occn_mid_min=mid, occn_low_min=low)
    return BucketSpec(**kwargs)


def _write_text(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload) -> None:
    indent = 2 if args.pretty else None
    _write_text(args, json.dumps(payload, ensure_ascii=False, indent=indent) + "\n")


def _tree_json(tree, arities: ArityTable) -> dict:
    node = {
        "symbol": tree.symbol,
        "kind": "structure" if arities.is_structure(tree.symbol) else "radical",
    }
    if tree.children:
        node["children"] = [_tree_json(child, arities) for child in tree.children]
    return node


def cmd_parse(args) -> int:
    table = _load_table(args)
    if bool(args.char) == bool(args.seq):
        raise RadtreeError("give exactly one of CHAR or --seq")
    if args.seq:
        tree = parse_sequence(args.seq.split(), table.arities)
        payload = {}
    else:
        tree = table.lookup(_single_char(args.char, "CHAR"))
        payload = {"char": args.char}
    payload.update(
        tokens=to_preorder(tree),
        rssl=rssl(tree),
        tree=_tree_json(tree, table.arities),
    )
    _emit_json(args, payload)
    return 0


def cmd_treesim(args) -> int:
    table = _load_table(args)
    score = char_sim(
        _single_char(args.char1, "CHAR1"),
        _single_char(args.char2, "CHAR2"),
        table,
    )
    _write_text(args, f"{float(score):.12f}\n")
    return 0


def cmd_weights(args) -> int:
    table = _load_table(args)
    weights = radical_weights(_single_char(args.char, "--char"), table,
                              mode=args.mode, lam=args.lam)
    _emit_json(args, [float(w) for w in weights])
    return 0


def cmd_stats(args) -> int:
    table = _load_table(args)
    labels = read_labels(args.input, args.input_format)
    counts = count_occurrences(labels)
    if not counts:
        raise EmptyCorpus(f"no characters in {args.input}")
    payload = {
        "line_count": len(labels),
        "char_total": sum(counts.values()),
        "distinct_chars": len(counts),
        "occn": {char: counts[char] for char in sorted(counts)},
        "rssl_distribution": rssl_distribution(counts, table, _bucket_spec(args)),
    }
    _emit_json(args, payload)
    return 0


def _print_summary(report: EvalReport) -> None:
    def fmt(value):
        return "-" if value is None else f"{value:.4f}"

    print(f"lines {report.line_count}  accuracy {fmt(report.line_accuracy)}  "
          f"1-NED {fmt(report.mean_one_minus_ned)}")
    print(f"chars {report.char_count}  accuracy {fmt(report.char_accuracy)}  "
          f"treesim {fmt(report.mean_treesim)}")
    sections = [("rssl", report.rssl_buckets)]
    if report.occn_buckets is not None:
        sections.append(("occn", report.occn_buckets))
    for label, section in sections:
        print(f"{label:<6} {'bucket':<12} {'count':>8} {'accuracy':>9} {'treesim':>8}")
        for name, row in section.items():
            print(f"{'':<6} {name:<12} {row['count']:>8} "
                  f"{fmt(row['accuracy']):>9} {fmt(row['mean_treesim']):>8}")


def cmd_eval(args) -> int:
    table = _load_table(args)
    gt = read_corpus_tsv(args.gt)
    pred = read_corpus_tsv(args.pred)
    occn = None
    if args.train:
        occn = count_occurrences(read_labels(args.train, args.train_format))
    report = evaluate(
        gt, pred, table,
        occn=occn,
        buckets=_bucket_spec(args),
        strict=args.strict,
        treesim_scope=args.treesim_scope,
    )
    _emit_json(args, report.to_dict())
    if args.pretty and args.output:
        _print_summary(report)
    return 0


def _read_charset(path) -> list[str]:
    chars = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line:
                continue
            if len(line) != 1:
                raise MalformedLine(f"{path}:{lineno}: expected one character per line, got {line!r}")
            chars.append(line)
    return chars


def cmd_export_targets(args) -> int:
    table = _load_table(args)
    if bool(args.charset) == bool(args.from_table):
        raise RadtreeError("give exactly one of --charset or --from-table")
    chars = table.chars() if args.from_table else _read_charset(args.charset)
    vocab = build_vocab(table, extra_tokens=(c for c in chars if c not in table))
    records = export_targets(chars, table, max_len=args.max_len,
                             mode=args.mode, lam=args.lam, vocab=vocab)
    if args.output:
        write_targets_jsonl(records, args.output)
    else:
        for record in records:
            sys.stdout.write(json.dumps(record.to_json_dict(), ensure_ascii=False) + "\n")
    if args.vocab_out:
        vocab.save(args.vocab_out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", default=_env("TABLE"),
                        help="decomposition table TSV (env RADTREE_TABLE)")
    common.add_argument("--arities", default=_env("ARITIES"),
                        help="arity table TSV overriding the built-in structure set")
    common.add_argument("--output", "-o", default=_env("OUTPUT"),
                        help="output path (default: stdout)")
    common.add_argument("--pretty", action="store_true", default=_env_flag("PRETTY"),
                        help="indent JSON; eval also prints a summary table")
    common.add_argument("--strict", action="store_true", default=_env_flag("STRICT"),
                        help="fail when a ground-truth id has no prediction")

    buckets = argparse.ArgumentParser(add_help=False)
    buckets.add_argument("--rssl-buckets", default=_env("RSSL_BUCKETS"),
                         metavar="SIMPLE_MAX,COMPLEX_MIN",
                         help="complexity bucket bounds, e.g. 4,7")
    buckets.add_argument("--occn-buckets", default=_env("OCCN_BUCKETS"),
                         metavar="HEAD,MID,LOW",
                         help="frequency bucket bounds, e.g. 100,50,20")

    parser = argparse.ArgumentParser(
        prog="radtree",
        description="Radical-tree decomposition, similarity, loss-weight, and evaluation toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common],
                       help="parse a character or preorder sequence into a tree")
    p.add_argument("char", nargs="?", help="character to look up in the table")
    p.add_argument("--seq", help="space-separated preorder token sequence")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("treesim", parents=[common],
                       help="similarity score between two characters")
    p.add_argument("char1")
    p.add_argument("char2")
    p.set_defaults(func=cmd_treesim)

    p = sub.add_parser("weights", parents=[common],
                       help="per-position loss weights for one character")
    p.add_argument("--char", required=True)
    p.add_argument("--mode", choices=("naive", "treesim"),
                   default=_env("MODE", "treesim"))
    p.add_argument("--lambda", dest="lam", type=float,
                   default=float(_env("LAMBDA", "1")))
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("stats", parents=[common, buckets],
                       help="occurrence counts and complexity distribution of a corpus")
    p.add_argument("--input", required=True, help="label file")
    p.add_argument("--input-format", choices=("plain", "tsv"),
                   default=_env("INPUT_FORMAT", "plain"))
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("eval", parents=[common, buckets],
                       help="score predictions against ground truth")
    p.add_argument("--gt", required=True, help="ground-truth TSV (<id><TAB><text>)")
    p.add_argument("--pred", required=True, help="prediction TSV (<id><TAB><text>)")
    p.add_argument("--train", default=_env("TRAIN"),
                   help="training label file; enables occn buckets")
    p.add_argument("--train-format", choices=("plain", "tsv"),
                   default=_env("TRAIN_FORMAT", "plain"))
    p.add_argument("--treesim-scope", choices=("all", "aligned"),
                   default=_env("TREESIM_SCOPE", "all"))
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("export-targets", parents=[common],
                       help="emit per-character index/weight records as JSON lines")
    p.add_argument("--charset", help="file with one character per line")
    p.add_argument("--from-table", action="store_true",
                   help="use every tabulated character, in table order")
    p.add_argument("--max-len", type=int, required=True,
                   help="padded sequence length including the EOS slot")
    p.add_argument("--mode", choices=("naive", "treesim"),
                   default=_env("MODE", "treesim"))
    p.add_argument("--lambda", dest="lam", type=float,
                   default=float(_env("LAMBDA", "1")))
    p.add_argument("--vocab-out", default=_env("VOCAB_OUT"),
                   help="also write the vocabulary as <token><TAB><index>")
    p.set_defaults(func=cmd_export_targets)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RadtreeError, ValueError) as exc:
        print(f"radtree: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"radtree: io error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
