"""Command-line entry point.

    pptcode gen-tree --depth 3
    pptcode gen-st --order column --max-s 15 --format csv
    pptcode classify 3 4 5
    pptcode w-seq --count 33 --digits
    pptcode encode --text "HELLO" | pptcode decode
    pptcode crypt --key 7 --mode enc --message 0123
    pptcode analyze --n 1000 --format json
    pptcode invert --gram ABCD --n 13
    pptcode theta 13

Data goes to stdout, diagnostics to stderr. Exit status is 0 on success, 1 on
a validation error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections.abc import Iterable, Sequence
from typing import TextIO

from . import analysis, coding
from .classes import ClassLabel, classify, profile
from .enumeration import Ordering, enumerate_st, theta, theta_bound
from .tree import DEFAULT_DEPTH_BOUND, generation, iter_depth_first, node_at
from .triples import ValidationError, canonical_ppt

TREE_FIELDS = ["generation", "path", "a", "b", "c", "class"]
ST_FIELDS = ["index", "s", "t", "a", "b", "c", "class"]
CLASSIFY_FIELDS = ["a", "b", "c", "class", "digit", "div3", "div4", "div5"]
WSEQ_FIELDS = ["position", "s", "t", "a", "b", "c", "class", "digit"]
WINDOW_FIELDS = ["k", "windows", "colliding_windows", "unique"]
GRAM_FIELDS = ["gram", "count", "positions"]
POSITION_FIELDS = ["position", "i"]


def emit(records: Iterable[dict], fields: list[str], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        json.dump(list(records), out)
        out.write("\n")
        return
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in records:
        writer.writerow(row)


def _classify_record(a: int, b: int, c: int) -> dict:
    x = canonical_ppt(a, b, c)
    prof = profile(x)
    label = classify(x)
    return {
        "a": x.a,
        "b": x.b,
        "c": x.c,
        "class": label.name,
        "digit": label.digit,
        "div3": prof.div3,
        "div4": prof.div4,
        "div5": prof.div5,
    }


def cmd_gen_tree(args, out: TextIO) -> None:
    if args.depth < 1:
        raise ValidationError(f"--depth must be >= 1, got {args.depth}")
    if args.path is not None:
        x = node_at(args.path.upper(), depth_bound=args.depth_bound)
        row = {"generation": len(args.path) + 1, "path": args.path.upper(), "a": x.a, "b": x.b, "c": x.c,
               "class": classify(x).name}
        emit([row], TREE_FIELDS, args.format, out)
        return
    if args.order == "dfs":
        rows = (
            {"generation": len(path) + 1, "path": path, "a": x.a, "b": x.b, "c": x.c, "class": classify(x).name}
            for path, x in iter_depth_first(args.depth - 1, depth_bound=args.depth_bound)
        )
    else:
        first = args.generation or 1
        last = args.generation or args.depth
        rows = (
            {"generation": k, "path": "", "a": x.a, "b": x.b, "c": x.c, "class": classify(x).name}
            for k in range(first, last + 1)
            for x in generation(k, depth_bound=args.depth_bound)
        )
        rows = _with_paths(rows)
    emit(rows, TREE_FIELDS, args.format, out)


def _with_paths(rows):
    # breadth-first order within a generation is path order, so the i-th node is i in base 3
    counter: dict[int, int] = {}
    for row in rows:
        k = row["generation"]
        i = counter.get(k, 0)
        counter[k] = i + 1
        steps = []
        for _ in range(k - 1):
            i, r = divmod(i, 3)
            steps.append("LMR"[r])
        row["path"] = "".join(reversed(steps))
        yield row


def cmd_gen_st(args, out: TextIO) -> None:
    stream = enumerate_st(args.order, max_s=args.max_s, max_c=args.max_c, count=args.count)
    rows = (
        {"index": i, "s": p.s, "t": p.t, "a": x.a, "b": x.b, "c": x.c, "class": classify(x).name}
        for i, (p, x) in enumerate(stream, 1)
    )
    emit(rows, ST_FIELDS, args.format, out)


def _read_triples(path: str) -> list[tuple[int, int, int]]:
    fh = sys.stdin if path == "-" else open(path, newline="", encoding="utf-8")
    try:
        triples = []
        for lineno, row in enumerate(csv.reader(fh), 1):
            if not row or not "".join(row).strip():
                continue
            cells = [cell.strip() for cell in row[:3]]
            if lineno == 1 and not cells[0].lstrip("-").isdigit():
                continue  # header
            try:
                a, b, c = (int(v) for v in cells)
            except ValueError:
                raise ValidationError(f"{path}:{lineno}: expected three integers, got {row}") from None
            triples.append((a, b, c))
        return triples
    finally:
        if fh is not sys.stdin:
            fh.close()


def cmd_classify(args, out: TextIO) -> None:
    if args.batch:
        triples = _read_triples(args.batch)
    elif len(args.triple) == 3:
        triples = [tuple(args.triple)]
    else:
        raise UsageError("pptcode classify: error: expected three integers a b c or --batch FILE")
    records = [_classify_record(*t) for t in triples]
    if args.format == "text":
        for r in records:
            out.write(r["class"] + "\n")
    else:
        emit(records, CLASSIFY_FIELDS, args.format, out)


def cmd_w_seq(args, out: TextIO) -> None:
    if args.count < 1:
        raise ValidationError(f"--count must be >= 1, got {args.count}")
    ordering = Ordering.parse(args.order)
    if args.format == "text":
        w = coding.w_stream(args.count, ordering)
        out.write((coding.digits(w) if args.digits else w.letters()) + "\n")
        return
    rows = []
    for i, (p, x) in enumerate(enumerate_st(ordering, count=args.count), 1):
        label = classify(x)
        rows.append(
            {"position": i, "s": p.s, "t": p.t, "a": x.a, "b": x.b, "c": x.c,
             "class": label.name, "digit": label.digit}
        )
    emit(rows, WSEQ_FIELDS, args.format, out)


def _alphabet(path: str | None) -> coding.Alphabet36:
    return coding.Alphabet36.from_file(path) if path else coding.DEFAULT_ALPHABET


def _input_text(value: str | None) -> str:
    if value is not None:
        return value
    return sys.stdin.read().rstrip("\r\n")


def cmd_encode(args, out: TextIO) -> None:
    labels = coding.encode_text(_input_text(args.text), _alphabet(args.alphabet))
    out.write("".join(label.name for label in labels) + "\n")


def cmd_decode(args, out: TextIO) -> None:
    raw = "".join(_input_text(args.labels).split())
    labels = analysis.parse_gram(raw)
    out.write(coding.decode_text(labels, _alphabet(args.alphabet)) + "\n")


def cmd_crypt(args, out: TextIO) -> None:
    msg = "".join(_input_text(args.message).split())
    fn = coding.keystream_encrypt if args.mode == "enc" else coding.keystream_decrypt
    out.write(fn(msg, args.key) + "\n")


def _analysis_labels(args) -> Sequence[ClassLabel] | None:
    if args.cache_dir:
        return analysis.cached_labels(args.n, args.cache_dir)
    return None


def cmd_analyze(args, out: TextIO) -> None:
    labels = _analysis_labels(args)
    if args.per_position:
        values = analysis.per_position_window(args.n, labels)
        # None becomes an empty CSV cell and a JSON null
        rows = [{"position": p, "i": v} for p, v in enumerate(values, 1)]
        emit(rows, POSITION_FIELDS, args.format, out)
        return
    if args.k is not None:
        index = analysis.build_index(args.n, args.k, labels)
        if args.format == "json":
            json.dump(
                {"n": index.n, "k": index.k, "windows": index.windows(),
                 "distinct": len(index.table), "unique": index.is_unique(),
                 "grams": index.table},
                out,
            )
            out.write("\n")
        else:
            rows = (
                {"gram": g, "count": len(pos), "positions": " ".join(map(str, pos))}
                for g, pos in sorted(index.table.items())
            )
            emit(rows, GRAM_FIELDS, "csv", out)
        return
    report = analysis.min_unique_window(args.n, labels)
    if args.format == "json":
        payload = report.to_dict()
        freqs = analysis.class_frequencies(args.n, labels)
        payload["frequencies"] = {label.name: v for label, v in freqs.items()}
        json.dump(payload, out)
        out.write("\n")
        return
    rows = [
        {"k": k, "windows": args.n - k + 1, "colliding_windows": report.collisions.get(k, 0),
         "unique": k == report.i_min}
        for k in range(1, report.i_min + 1)
    ]
    emit(rows, WINDOW_FIELDS, "csv", out)


def cmd_invert(args, out: TextIO) -> None:
    positions = analysis.invert(args.gram, args.n, _analysis_labels(args))
    if args.format == "json":
        json.dump({"gram": args.gram.upper(), "n": args.n, "positions": positions}, out)
        out.write("\n")
    elif args.format == "csv":
        emit(({"position": p} for p in positions), ["position"], "csv", out)
    else:
        for p in positions:
            out.write(f"{p}\n")


def cmd_theta(args, out: TextIO) -> None:
    value = theta(args.n)
    if args.format == "text":
        out.write(f"{value}\n")
    else:
        emit([{"n": args.n, "theta": value, "bound": theta_bound(args.n)}], ["n", "theta", "bound"], args.format, out)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _fmt_parent(default: str, choices=("text", "csv", "json")) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=choices, default=default)
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pptcode", description="Primitive Pythagorean triples and their class codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    table = _fmt_parent("csv", ("csv", "json"))
    scalar = _fmt_parent("text")

    p = sub.add_parser("gen-tree", parents=[table], help="tree of triples from (3,4,5)")
    p.add_argument("--depth", type=int, default=3, help="generations to emit (default 3)")
    p.add_argument("--generation", type=int, help="emit only this generation")
    p.add_argument("--path", help="emit the single node reached by L/M/R steps from the root")
    p.add_argument("--order", choices=("bfs", "dfs"), default="bfs")
    p.add_argument("--depth-bound", type=int, default=DEFAULT_DEPTH_BOUND)
    p.set_defaults(func=cmd_gen_tree)

    p = sub.add_parser("gen-st", parents=[table], help="triples from the (s,t) array")
    p.add_argument("--order", choices=("column", "row", "diagonal", "hypotenuse"), default="column")
    p.add_argument("--max-s", type=int)
    p.add_argument("--max-c", type=int)
    p.add_argument("--count", type=int)
    p.set_defaults(func=cmd_gen_st)

    p = sub.add_parser("classify", parents=[scalar], help="class letter of a triple")
    p.add_argument("triple", nargs="*", type=int, metavar="N")
    p.add_argument("--batch", metavar="FILE", help="CSV of a,b,c rows ('-' for stdin)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("w-seq", parents=[scalar], help="class sequence of ordered triples")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--digits", action="store_true", help="print digits 0-5 instead of letters")
    p.add_argument("--order", choices=("column", "row", "diagonal", "hypotenuse"), default="hypotenuse")
    p.set_defaults(func=cmd_w_seq)

    p = sub.add_parser("encode", help="text to class-letter pairs")
    p.add_argument("--text", help="message (default: stdin)")
    p.add_argument("--alphabet", metavar="FILE")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="class-letter pairs to text")
    p.add_argument("--labels", help="class letters (default: stdin)")
    p.add_argument("--alphabet", metavar="FILE")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("crypt", help="additive keystream over base-6 digits (not secure)")
    p.add_argument("--key", type=int, required=True)
    p.add_argument("--mode", choices=("enc", "dec"), required=True)
    p.add_argument("--message", help="base-6 digits (default: stdin)")
    p.set_defaults(func=cmd_crypt)

    p = sub.add_parser("analyze", parents=[table], help="window uniqueness over the class sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--per-position", action="store_true")
    p.add_argument("--cache-dir", metavar="DIR")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("invert", parents=[scalar], help="start positions of a class gram")
    p.add_argument("--gram", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cache-dir", metavar="DIR")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("theta", parents=[scalar], help="number of (s,t) pairs with s <= n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_theta)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except ValidationError as exc:
        err.write(f"pptcode: {exc}\n")
        return 1
    except BrokenPipeError:
        return 0
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
