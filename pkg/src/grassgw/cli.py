"""Command-line front end.

Commands: enumerate, dual, decompose, classify, count.  Exit codes:
0 success, 2 usage error, 3 domain precondition (frame violations, odd
frames, guards), 4 the open odd-by-odd case, 5 verification mismatch.
All JSON output is byte-stable for fixed flags.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import decomp, oracle
from .decomp import Theory, _computation_frame
from .errors import (
    FrameViolation,
    MalformedSequence,
    NotDominant,
    OddDimension,
    OddFrame,
    TooLarge,
    VerificationMismatch,
)
from .rootdata import classify_box, dual_weight
from .young import Frame, Partition, dual, embed, enumerate_partitions, is_symmetric


@dataclass(frozen=True)
class RenderedDiagram:
    """Text rows depicting a diagram inside its frame, one glyph per cell."""

    lines: tuple[str, ...]


def render_diagram(alpha: Partition, frame: Frame, filled: str, empty: str) -> RenderedDiagram:
    rows = embed(alpha, frame)
    return RenderedDiagram(tuple(filled * r + empty * (frame.e - r) for r in rows))


def _glyphs(ascii_mode: bool) -> tuple[str, str]:
    return ("#", ".") if ascii_mode else ("■", "·")


def _fmt_parts(parts) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _partition_flag(text: str) -> Partition:
    try:
        parts = [int(x) for x in text.split(",")] if text else []
        return Partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _decomposition_line(dec: decomp.SpectrumDecomposition) -> str:
    terms = []
    for s in dec.summands:
        if s.theory is Theory.GW:
            terms.append(f"{s.multiplicity}*GW^[{s.shift}](k)")
        elif s.theory is Theory.K:
            terms.append(f"{s.multiplicity}*K(k)")
        else:
            terms.append(f"{s.multiplicity}*middle^[{s.shift}]")
    return " + ".join(terms) if terms else "0"


def cmd_enumerate(args) -> int:
    frame = Frame(args.d, args.e)
    parts = enumerate_partitions(frame, degree_filter=args.degree)
    if args.symmetric_only:
        if frame.e % 2:
            raise OddFrame(f"--symmetric-only needs an even column count, got e={frame.e}")
        parts = (a for a in parts if is_symmetric(a, frame))
    if args.json:
        print(json.dumps([list(a.parts) for a in parts]))
    else:
        for a in parts:
            print(_fmt_parts(a.parts))
    return 0


def cmd_dual(args) -> int:
    frame = Frame(args.d, args.e)
    image = dual(args.partition, frame)
    if args.render:
        filled, empty = _glyphs(args.ascii)
        left = render_diagram(args.partition, frame, filled, empty)
        right = render_diagram(image, frame, filled, empty)
        for row_l, row_r in zip(left.lines, right.lines):
            print(f"{row_l}   {row_r}")
        print(f"alpha = {','.join(str(p) for p in embed(args.partition, frame))}")
        print(f"dual  = {','.join(str(p) for p in image.parts)}")
    else:
        print(",".join(str(p) for p in image.parts))
    return 0


def cmd_decompose(args) -> int:
    dec = decomp.gw_grassmannian(args.d, args.e, args.shift)
    if args.verify:
        fd, fe = _computation_frame(args.d, args.e)
        p_oracle = oracle.brute_symmetric_count(fd, fe)
        q_oracle = (len(oracle.brute_enumerate_partitions(fd, fe)) - p_oracle) // 2
        p, q = decomp.grassmannian_counts(args.d, args.e)
        if (p, q) != (p_oracle, q_oracle):
            raise VerificationMismatch(
                f"formulas gave p={p}, q={q}; oracle gave p={p_oracle}, q={q_oracle}"
            )
    if args.json:
        print(json.dumps(decomp.to_json_dict(dec, d=args.d, e=args.e, shift=args.shift), indent=2))
        return 0
    n = args.d + args.e
    print(f"GW^[{args.shift}](Gr({args.d},{n})) = {_decomposition_line(dec)}")
    for note in dec.notes:
        print(f"note: {note}")
    if args.verify:
        print("verified against brute-force oracle")
    print("provenance:")
    for label in dec.provenance:
        print(f"  {label}")
    return 0


def cmd_classify(args) -> int:
    classification = classify_box(args.rank, args.bound)
    dec = decomp.decomposition_from_classification(classification, args.shift)
    sym, antisym, pairs = classification
    if args.json:
        payload = {
            "rank": args.rank,
            "bound": args.bound,
            "shift": args.shift,
            "symmetric": [list(w.entries) for w in sym],
            "antisymmetric": [list(w.entries) for w in antisym],
            "pairs": [[list(w.entries), list(dual_weight(w).entries)] for w in pairs],
            "gw": [{"shift": s, "count": c} for s, c in dec.gw_counts()],
            "k": {"count": dec.multiplicity(Theory.K)},
            "provenance": list(dec.provenance),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"rank {args.rank}, bound {args.bound}, shift {args.shift}")
    print(f"symmetric ({len(sym)}):")
    for w in sym:
        print(f"  {_fmt_parts(w.entries)}")
    print(f"anti-symmetric ({len(antisym)}):")
    for w in antisym:
        print(f"  {_fmt_parts(w.entries)}")
    print(f"dual pairs ({len(pairs)}):")
    for w in pairs:
        print(f"  {{{_fmt_parts(w.entries)},{_fmt_parts(dual_weight(w).entries)}}}")
    print(f"decomposition: {_decomposition_line(dec)}")
    return 0


def cmd_count(args) -> int:
    method = args.method.replace("-", "_")
    if method != "all":
        print(decomp.count_half_partitions(args.d, args.e, method))
        return 0
    total_enum = decomp.count_half_partitions(args.d, args.e, "enumerate")
    total_rec = decomp.count_half_partitions(args.d, args.e, "recursive")
    sym_closed = decomp.count_half_partitions(args.d, args.e, "closed_symmetric")
    frame = Frame(args.d, args.e)
    sym_enum = sum(
        1 for a in enumerate_partitions(frame, degree_filter=frame.half_degree) if is_symmetric(a, frame)
    )
    print(f"total (enumerate): {total_enum}")
    print(f"total (recursive): {total_rec}")
    print(f"symmetric (closed form): {sym_closed}")
    print(f"symmetric (enumerated): {sym_enum}")
    if total_enum % 2:
        print("note: total half-partition count is odd for this frame")
    if total_enum != total_rec or sym_closed != sym_enum:
        print("agreement: MISMATCH", file=sys.stderr)
        raise VerificationMismatch("half-partition counting methods disagree")
    print("agreement: ok")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassgw",
        description="Grothendieck-Witt decompositions of even Grassmannians",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the partitions of a frame")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--symmetric-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dual", help="dual of a partition inside a frame")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--partition", type=_partition_flag, required=True)
    p.add_argument("--render", action="store_true")
    p.add_argument("--ascii", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("decompose", help="GW decomposition of Gr(d, d+e)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", help="sign census over a box of GL_n weights")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="half-partition counts by several methods")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["enumerate", "recursive", "closed-symmetric", "all"],
        default="all",
    )
    p.set_defaults(func=cmd_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FrameViolation, OddFrame, MalformedSequence, NotDominant, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OddDimension as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except VerificationMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
