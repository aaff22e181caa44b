"""Command-line surface.

Subcommands mirror the library:

  graph    validate | orientations | toric-classes | tutte
  word     reduce | reduced-words | comm-classes | classify
  cyclic   rtor | ctor | decompose | elements
  heap     build | linexts | dot
  toric    heap | ltor | hasse | closure
  coxeter  elements | conjugacy

All reports are JSON (schemaVersion 1) on stdout with the input echoed;
``--format dot`` switches to DOT where a diagram makes sense.  Exit codes:
0 success, 1 domain error, 2 usage error, 3 resource cap exceeded.  Output
is byte-identical across runs on identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cyclic as CY
from . import heaps as H
from . import render
from . import toric as T
from . import words as W
from .classifier import (
    classify,
    coxeter_conjugacy_classes,
    coxeter_elements,
    coxeter_graph_skeleton,
)
from .coxgraph import CoxeterGraph, load_coxeter_graph
from .errors import CoxError, ResourceCapExceeded

SCHEMA_VERSION = 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxheaps", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="group", required=True)

    def add(group, name, word_arg=True, **extra):
        sp = group.add_parser(name)
        sp.add_argument("-g", "--graph", required=True, help="Coxeter graph JSON file")
        if word_arg:
            sp.add_argument("word", help='word, e.g. "s3 s1 s2 s1 s2" or "31212"')
        sp.add_argument("--format", choices=["json", "dot"], default="json")
        sp.add_argument("--max-orbit", type=int, default=W.DEFAULT_ORBIT_CAP)
        sp.add_argument("--max-class", type=int, default=T.DEFAULT_CLASS_CAP)
        sp.add_argument("--max-extensions", type=int, default=H.DEFAULT_EXTENSION_CAP)
        for flag, kw in extra.items():
            sp.add_argument(flag, **kw)
        return sp

    graph = sub.add_parser("graph").add_subparsers(dest="command", required=True)
    add(graph, "validate", word_arg=False)
    add(graph, "orientations", word_arg=False)
    add(graph, "toric-classes", word_arg=False)
    add(graph, "tutte", word_arg=False, **{"--x": dict(type=int, required=True), "--y": dict(type=int, required=True)})

    word = sub.add_parser("word").add_subparsers(dest="command", required=True)
    add(word, "reduce")
    add(word, "reduced-words")
    add(word, "comm-classes")
    add(word, "classify")

    cyc = sub.add_parser("cyclic").add_subparsers(dest="command", required=True)
    add(cyc, "rtor")
    add(cyc, "ctor")
    add(cyc, "decompose")
    add(cyc, "elements")

    heap = sub.add_parser("heap").add_subparsers(dest="command", required=True)
    add(heap, "build")
    add(heap, "linexts")
    add(heap, "dot")

    tor = sub.add_parser("toric").add_subparsers(dest="command", required=True)
    add(tor, "heap")
    add(tor, "ltor")
    add(tor, "hasse")
    add(tor, "closure")

    cox = sub.add_parser("coxeter").add_subparsers(dest="command", required=True)
    add(cox, "elements", word_arg=False)
    add(cox, "conjugacy", word_arg=False)
    return p


def _words(g: CoxeterGraph, items) -> list[str]:
    return sorted(g.format(w) for w in items)


def _cyclic_words(g: CoxeterGraph, items) -> list[str]:
    return sorted("[" + g.format(cw.canonical) + "]" for cw in items)


def _edge_list(graph: T.Graph) -> list[list[int]]:
    return [[a + 1, b + 1] for a, b in graph.edges]


def _run(args) -> tuple[dict | str, int]:
    g = load_coxeter_graph(args.graph)
    key = f"{args.group}.{args.command}"
    word = g.word(args.word) if getattr(args, "word", None) is not None else None
    cap = args.max_orbit
    result: dict | str

    if key == "graph.validate":
        result = {"generators": list(g.generators), "rank": g.rank, "graph": g.to_json()}
    elif key == "graph.orientations":
        skel = coxeter_graph_skeleton(g)
        orients = T.all_acyclic_orientations(skel)
        if args.format == "dot":
            return "".join(render.orientation_to_dot(o, g.generators) for o in orients), 0
        result = {"count": len(orients), "orientations": [o.bitstring() for o in orients],
                  "edgeOrder": [[g.name(a), g.name(b)] for a, b in skel.edges]}
    elif key == "graph.toric-classes":
        skel = coxeter_graph_skeleton(g)
        classes = T.toric_classes(skel, args.max_class)
        result = {
            "count": len(classes),
            "classes": [sorted(o.bitstring() for o in cls) for cls in classes],
            "edgeOrder": [[g.name(a), g.name(b)] for a, b in skel.edges],
        }
    elif key == "graph.tutte":
        skel = coxeter_graph_skeleton(g)
        result = {"x": args.x, "y": args.y, "value": T.tutte(skel, args.x, args.y)}
    elif key == "word.reduce":
        nf = W.normal_form(g, word, cap)
        result = {"word": g.format(nf.word), "length": nf.length}
    elif key == "word.reduced-words":
        result = {"words": _words(g, W.reduced_words(g, word, cap))}
    elif key == "word.comm-classes":
        classes = W.commutativity_classes(g, word, cap)
        result = {"count": len(classes), "classes": [_words(g, c) for c in classes]}
    elif key == "word.classify":
        result = classify(g, word, cap).to_json(g)
    elif key == "cyclic.rtor":
        result = {"cyclicWords": _cyclic_words(g, CY.rtor_cyclic_class(g, word, cap))}
    elif key == "cyclic.ctor":
        result = {"cyclicWords": _cyclic_words(g, CY.ctor_class(g, word, cap))}
    elif key == "cyclic.decompose":
        classes = CY.cyclic_decomposition(g, word, cap)
        result = {"count": len(classes), "classes": [_cyclic_words(g, c) for c in classes]}
    elif key == "cyclic.elements":
        els = CY.torically_equivalent_elements(g, word, cap)
        result = {
            "words": _words(g, CY.rtor_words(g, word, cap)),
            "elements": sorted(g.format(e.word) for e in els),
        }
    elif key == "heap.build":
        h = H.heap_of_word(g, word)
        result = {
            "size": h.size,
            "labels": [g.name(s) for s in h.word],
            "hasse": [[i + 1, j + 1] for i, j in sorted(H.hasse_edges(h))],
            "closure": [[i + 1, j + 1] for i, j in sorted(H.closure_edges(h))],
        }
    elif key == "heap.linexts":
        h = H.heap_of_word(g, word)
        result = {"words": _words(g, H.linear_extensions(h, args.max_extensions))}
    elif key == "heap.dot":
        return render.heap_to_dot(H.heap_of_word(g, word)), 0
    elif key == "toric.heap":
        th = CY.toric_heap_of_word(g, word, args.max_class)
        if args.format == "dot":
            return render.toric_heap_to_dot(th), 0
        hasse = T.toric_hasse(th.poset)
        result = {
            "size": th.size,
            "labels": [g.name(s) for s in th.word],
            "toricHasse": _edge_list(hasse),
            "representative": th.poset.representative.bitstring(),
        }
    elif key == "toric.ltor":
        th = CY.toric_heap_of_word(g, word, args.max_class)
        result = {"cyclicWords": _cyclic_words(g, CY.ltor(th))}
    elif key == "toric.hasse":
        th = CY.toric_heap_of_word(g, word, args.max_class)
        result = {"edges": _edge_list(T.toric_hasse(th.poset))}
    elif key == "toric.closure":
        th = CY.toric_heap_of_word(g, word, args.max_class)
        result = {"edges": _edge_list(T.toric_transitive_closure(th.poset))}
    elif key == "coxeter.elements":
        result = {"elements": [g.format(c) for c in coxeter_elements(g)]}
    elif key == "coxeter.conjugacy":
        classes = coxeter_conjugacy_classes(g, args.max_class)
        result = {"count": len(classes), "classes": [[g.format(c) for c in cls] for cls in classes]}
    else:  # pragma: no cover - argparse guards the command set
        raise AssertionError(key)

    report = {"schemaVersion": SCHEMA_VERSION, "command": key,
              "input": _echo(args), "result": result}
    return report, 0


def _echo(args) -> dict:
    echo = {"graph": args.graph}
    if getattr(args, "word", None) is not None:
        echo["word"] = args.word
    for name in ("x", "y"):
        if getattr(args, name, None) is not None:
            echo[name] = getattr(args, name)
    return echo


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        out, code = _run(args)
    except ResourceCapExceeded as exc:
        _emit_error(args, exc)
        return 3
    except CoxError as exc:
        _emit_error(args, exc)
        return 1
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        json.dump(out, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return code


def _emit_error(args, exc: CoxError) -> None:
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": f"{args.group}.{args.command}",
        "error": {"type": exc.type_name, "message": str(exc)},
    }
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    sys.exit(main())
