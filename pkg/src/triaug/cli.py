"""Command-line front end.

Subcommands: `bound`, `augment`, `verify`, `oracle`, `gen`.  Edge lists
are plain text, one edge per line as two whitespace-separated labels;
`#` starts a comment and blank lines are ignored.  Exit codes: 0 success,
1 invalid input, 2 verification failed, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import IO, Sequence

from .augment import augmented_graph, lower_bound, tri_augment
from .connectivity import is_k_connected
from .errors import BudgetError, ContractViolationError, GraphInputError, NotATreeError, TriaugError
from .gen import SHAPES, TreeGenSpec, generate
from .graph import Edge, Graph, Tree, graph_from_edges, validate_tree
from .oracle import min_augmentation_bruteforce

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFY_FAILED = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class EdgeListDocument:
    """Parsed edge list with the original labels and their id mapping."""

    labels: tuple[str, ...]  # index = vertex id
    edges: tuple[tuple[str, str], ...]
    mapping: dict[str, int]

    def to_graph(self) -> Graph:
        return graph_from_edges(
            len(self.labels),
            [(self.mapping[a], self.mapping[b]) for a, b in self.edges],
        )

    def label_edge(self, e: Edge) -> tuple[str, str]:
        a, b = self.labels[e[0]], self.labels[e[1]]
        return (a, b) if a <= b else (b, a)


def parse_edge_list(text: str) -> EdgeListDocument:
    """Parse the plain-text edge format; labels get ids in appearance order."""
    labels: list[str] = []
    mapping: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphInputError(
                f"line {lineno}: expected two labels, got {len(tokens)}"
            )
        for tok in tokens:
            if tok not in mapping:
                mapping[tok] = len(labels)
                labels.append(tok)
        edges.append((tokens[0], tokens[1]))
    if not edges:
        raise GraphInputError("edge list is empty")
    return EdgeListDocument(labels=tuple(labels), edges=tuple(edges), mapping=mapping)


def dot_export(doc: EdgeListDocument, tree: Graph, augmented: Sequence[Edge]) -> str:
    """DOT graph with every vertex listed and augmented edges dashed.

    Output is fully sorted so goldens are byte-stable.
    """
    def quote(label: str) -> str:
        return '"' + label.replace('"', '\\"') + '"'

    lines = ["graph {"]
    for label in sorted(doc.labels):
        lines.append(f"  {quote(label)};")
    for a, b in sorted(doc.label_edge(e) for e in tree.edges()):
        lines.append(f"  {quote(a)} -- {quote(b)};")
    for a, b in sorted(doc.label_edge(e) for e in augmented):
        lines.append(f"  {quote(a)} -- {quote(b)} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _read_document(path: str) -> EdgeListDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _tree_from_document(doc: EdgeListDocument) -> Tree:
    return validate_tree(doc.to_graph())


def _cmd_bound(args, out: IO[str], err: IO[str]) -> int:
    doc = _read_document(args.file)
    tree = _tree_from_document(doc)
    print(lower_bound(tree), file=out)
    return EXIT_OK


def _cmd_augment(args, out: IO[str], err: IO[str]) -> int:
    doc = _read_document(args.file)
    tree = _tree_from_document(doc)
    result = tri_augment(tree)
    labeled = sorted(doc.label_edge(e) for e in result.edges)

    verified = None
    if args.verify:
        verified = is_k_connected(augmented_graph(tree, result), 3)

    if args.json:
        report = {
            "n": tree.n,
            "l1": tree.l1,
            "l2": tree.l2,
            "bound": result.bound,
            "augmented": len(result.edges),
            "case": result.case_taken,
            "edges": [list(e) for e in labeled],
        }
        if verified is not None:
            report["verified"] = verified
        print(json.dumps(report), file=out)
    else:
        for a, b in labeled:
            print(f"{a} {b}", file=out)
        print(
            f"n={tree.n} l1={tree.l1} l2={tree.l2} bound={result.bound} "
            f"augmented={len(result.edges)} case={result.case_taken}",
            file=out,
        )

    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot_export(doc, tree.graph, result.edges))

    if verified is False:
        print("verification failed: result is not 3-connected", file=err)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_verify(args, out: IO[str], err: IO[str]) -> int:
    doc = _read_document(args.file)
    g = doc.to_graph()
    if is_k_connected(g, args.k):
        print(f"graph is {args.k}-connected", file=out)
        return EXIT_OK
    print(f"graph is not {args.k}-connected", file=err)
    return EXIT_VERIFY_FAILED


def _cmd_oracle(args, out: IO[str], err: IO[str]) -> int:
    doc = _read_document(args.file)
    tree = _tree_from_document(doc)
    result = min_augmentation_bruteforce(tree)
    labeled = sorted(doc.label_edge(e) for e in result.witness)
    if args.json:
        print(
            json.dumps(
                {
                    "minimum": result.minimum,
                    "explored": result.explored,
                    "witness": [list(e) for e in labeled],
                }
            ),
            file=out,
        )
    else:
        for a, b in labeled:
            print(f"{a} {b}", file=out)
        print(f"minimum={result.minimum} explored={result.explored}", file=out)
    return EXIT_OK


def _cmd_gen(args, out: IO[str], err: IO[str]) -> int:
    spec = TreeGenSpec(
        shape=args.shape, n=args.n, seed=args.seed, spine=args.spine, legs=args.legs
    )
    tree = generate(spec)
    for u, v in tree.graph.edges():
        print(f"{u} {v}", file=out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triaug",
        description="Minimum edge augmentation making a tree 3-vertex-connected.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="print the augmentation lower bound")
    p.add_argument("file")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("augment", help="compute a minimum augmentation set")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true", help="check 3-connectivity of the result")
    p.add_argument("--dot", metavar="OUT", help="write a DOT rendering to OUT")
    p.add_argument("--json", action="store_true", help="emit a single JSON report")
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("verify", help="check k-connectivity of any graph")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force minimum augmentation (small n)")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="emit a generated tree as an edge list")
    p.add_argument("shape", choices=SHAPES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spine", type=int, default=None, help="caterpillar spine length")
    p.add_argument("--legs", type=int, default=None, help="spider leg count")
    p.set_defaults(func=_cmd_gen)

    return parser


def run(argv: Sequence[str], out: IO[str] | None = None, err: IO[str] | None = None) -> int:
    """Run one CLI invocation; returns the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_INVALID_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, out, err)
    except BudgetError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    except (GraphInputError, NotATreeError, ContractViolationError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID_INPUT
    except TriaugError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_VERIFY_FAILED


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
