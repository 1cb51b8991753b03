"""Command-line interface: ``legknots <command> ...``.

Every command writes one JSON document (or an SVG for ``render``) to
stdout.  Exit status is 0 on success, 1 on domain errors (bad words,
inapplicable moves, missing chain entries) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .convert import front_to_diagram
from .corpus import all_singular_words
from .invariants import dumps, report_json, rot_front, tb_front, v2, v3, whitney_rotation, writhe
from .model import (DiagramWord, FrontWord, SingularDiagramWord, WordError, parse_any, parse_diagram,
                    parse_front, parse_singular, read_words)
from .moves import MoveError, insert_cusp_pair, parse_trace, stabilize
from .render import render_svg
from .search import SearchBudget, result_json, search_equivalent
from .vassiliev import Resolution, all_resolutions, extend_chain, order_at_most, resolve

SCHEMA_VERSION = 1

INVARIANTS = {"rotation": whitney_rotation, "writhe": writhe, "v2": v2, "v3": v3}


class UsageError(Exception):
    pass


def _parse_text(text: str, hint: str = ""):
    if hint == "front":
        return parse_front(text)
    if hint == "diagram":
        return parse_any(text) if "Xd" in text else parse_diagram(text)
    return parse_any(text)


def _hint_for(path: str) -> str:
    if path.endswith(".front"):
        return "front"
    if path.endswith(".morse"):
        return "diagram"
    return ""


def _load(source: str):
    """A word from a ``.front``/``.morse`` file or a literal word."""
    p = Path(source)
    if p.is_file():
        words = read_words(p.read_text(encoding="utf-8"))
        if len(words) != 1:
            raise WordError(f"{source} holds {len(words)} words; use --batch for several")
        return _parse_text(words[0], _hint_for(source))
    return _parse_text(source)


def _inputs(args) -> list:
    if getattr(args, "batch", None):
        p = Path(args.batch)
        if not p.is_file():
            raise UsageError(f"no such batch file: {args.batch}")
        hint = _hint_for(args.batch)
        return [_parse_text(w, hint) for w in read_words(p.read_text(encoding="utf-8"))]
    if getattr(args, "front", None) is not None:
        return [parse_front(args.front)]
    if getattr(args, "diagram", None) is not None:
        return [_parse_text(args.diagram, "diagram")]
    if getattr(args, "input", None) is None:
        raise UsageError("a word is required: --front, --diagram, a file argument or --batch")
    return [_load(args.input)]


def _need(w, cls, what: str):
    if not isinstance(w, cls):
        raise WordError(f"{what} expected, got {type(w).__name__}: {w.serialize()}")
    return w


def _stamp(obj: dict) -> dict:
    return {"schema": SCHEMA_VERSION, **obj}


# ---------------------------------------------------------------- commands

def cmd_validate(w, args) -> dict:
    out = {"kind": report_json(w)["kind"], "word": w.serialize(), "valid": True,
           "events": len(w), "crossings": w.crossing_count}
    if isinstance(w, SingularDiagramWord):
        out["doublePoints"] = w.double_point_count
    return out


def cmd_invariants(w, args) -> dict:
    return report_json(w)


def cmd_stabilize(w, args) -> dict:
    d = _need(w, DiagramWord, "diagram word")
    out = stabilize(d, (args.i, args.j))
    before = {"rotation": whitney_rotation(d), "writhe": writhe(d)}
    after = {"rotation": whitney_rotation(out), "writhe": writhe(out)}
    return {"word": out.serialize(), "i": args.i, "j": args.j, "before": before, "after": after,
            "delta": {k: after[k] - before[k] for k in before}}


def cmd_cusp(w, args) -> dict:
    f = _need(w, FrontWord, "front word")
    slot = args.slot if args.slot is not None else f.events[0][1]
    out = insert_cusp_pair(f, args.type, args.column, slot)
    before = {"tb": tb_front(f), "maslov": rot_front(f)}
    after = {"tb": tb_front(out), "maslov": rot_front(out)}
    return {"word": out.serialize(), "type": args.type, "before": before, "after": after,
            "delta": {k: after[k] - before[k] for k in before}}


def cmd_front2diag(w, args) -> dict:
    f = _need(w, FrontWord, "front word")
    d = front_to_diagram(f)
    return {"front": f.serialize(), "diagram": d.serialize(), "tb": tb_front(f), "maslov": rot_front(f),
            "writhe": writhe(d), "rotation": whitney_rotation(d)}


def cmd_resolve(w, args) -> dict:
    sd = _need(w, SingularDiagramWord, "singular word")
    if args.choices:
        try:
            choices = tuple(int(c) for c in args.choices.split(","))
        except ValueError:
            raise UsageError(f"bad --choices {args.choices!r}") from None
        rs = [Resolution(choices)]
    else:
        rs = all_resolutions(sd.double_point_count)
    return {"word": sd.serialize(), "resolutions": [
        {"choices": list(r.choices), "sign": r.sign, "word": resolve(sd, r).serialize()} for r in rs]}


def cmd_apply(w, args) -> dict:
    from .moves import apply_move

    p = Path(args.trace)
    if not p.is_file():
        raise UsageError(f"no such trace file: {args.trace}")
    moves = parse_trace(p.read_text(encoding="utf-8"))
    cur = w
    for m in moves:
        cur = apply_move(cur, m)
    return {"start": w.serialize(), "moves": len(moves), "end": cur.serialize()}


def cmd_render(w, args) -> str:
    return render_svg(w)


def run_order_check(args) -> dict:
    f = INVARIANTS[args.invariant]
    if args.corpus:
        root = Path(args.corpus)
        if not root.is_dir():
            raise UsageError(f"no such corpus directory: {args.corpus}")
        corpus = []
        for p in sorted(root.glob("*.morse")):
            corpus += [parse_singular(t) for t in read_words(p.read_text(encoding="utf-8"))]
    elif args.exhaustive is not None:
        corpus = list(all_singular_words(args.exhaustive, args.order + 1))
    else:
        raise UsageError("order-check needs --corpus DIR or --exhaustive N")
    holds, witness, _ = order_at_most(f, args.order, corpus)
    out = {"invariant": args.invariant, "order": args.order, "corpusSize": len(corpus), "holds": holds}
    if witness is not None:
        out["witness"] = witness.serialize()
    return out


def run_psi_extend(args) -> dict:
    try:
        raw = json.loads(args.chain)
        chain = {int(k): int(v) for k, v in raw.items()}
    except (ValueError, AttributeError, TypeError):
        raise UsageError("--chain must be a JSON object mapping integers to integers") from None
    if not chain:
        raise UsageError("--chain is empty")
    values = extend_chain(chain, args.order, args.steps)
    return {"order": args.order, "chain": {str(q): values[q] for q in sorted(values)}}


def run_search(args) -> dict:
    a = _need(_load(args.a), DiagramWord, "diagram word")
    b = _need(_load(args.b), DiagramWord, "diagram word")
    try:
        budget = SearchBudget(args.max_crossings, args.max_depth, args.max_states)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"a": a.serialize(), "b": b.serialize(), **result_json(search_equivalent(a, b, budget))}


PER_WORD = {
    "validate": cmd_validate, "invariants": cmd_invariants, "stabilize": cmd_stabilize, "cusp": cmd_cusp,
    "front2diag": cmd_front2diag, "resolve": cmd_resolve, "render": cmd_render, "apply": cmd_apply,
}
GLOBAL = {"order-check": run_order_check, "psi-extend": run_psi_extend, "search": run_search}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="legknots", description="Legendrian and pseudo-Legendrian knot diagrams.")
    sub = ap.add_subparsers(dest="command", required=True)

    def word_command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", help="word file (.front/.morse) or literal word")
        p.add_argument("--front", help="literal front word")
        p.add_argument("--diagram", help="literal diagram word")
        p.add_argument("--batch", metavar="FILE", help="run on every word of FILE, in order")
        return p

    word_command("validate", "parse and validate a word")
    word_command("invariants", "invariant report")
    p = word_command("stabilize", "(i, j)-stabilization of a diagram")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p = word_command("cusp", "insert a cusp pair into a front")
    p.add_argument("--type", type=int, choices=(1, 2), required=True)
    p.add_argument("--column", type=int, default=1)
    p.add_argument("--slot", type=int)
    word_command("front2diag", "front to pseudo-Legendrian diagram")
    p = word_command("resolve", "resolutions of a singular word")
    p.add_argument("--choices", help="comma-separated +1/-1 per double point (default: all)")
    p = word_command("render", "draw a word")
    p.add_argument("--svg", action="store_true", required=True, help="emit SVG")
    p = word_command("apply", "replay a move trace")
    p.add_argument("--trace", required=True, help="trace file, one move per line")

    p = sub.add_parser("order-check", help="order <= n test for an invariant")
    p.add_argument("--invariant", choices=sorted(INVARIANTS), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--corpus", help="directory of .morse files of singular words")
    p.add_argument("--exhaustive", type=int, metavar="N", help="all singular words up to N crossings")

    p = sub.add_parser("psi-extend", help="binomial extension of a stabilization chain")
    p.add_argument("--chain", required=True, help='JSON object, e.g. {"-1": 3, "0": 5}')
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--steps", type=int, default=1)

    p = sub.add_parser("search", help="bounded Reidemeister search")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-crossings", type=int, default=8)
    p.add_argument("--max-depth", type=int, default=8)
    p.add_argument("--max-states", type=int, default=200000)
    return ap


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command in GLOBAL:
            stdout.write(dumps(_stamp(GLOBAL[args.command](args))))
            return 0
        words = _inputs(args)
        fn = PER_WORD[args.command]
        results = [fn(w, args) for w in words]
        if args.command == "render":
            stdout.write("".join(results))
        elif args.batch:
            stdout.write(dumps(_stamp({"results": results})))
        else:
            stdout.write(dumps(_stamp(results[0])))
        return 0
    except UsageError as exc:
        stderr.write(f"legknots: usage error: {exc}\n")
        return 2
    except (WordError, MoveError, ValueError, KeyError) as exc:
        stderr.write(f"legknots: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
