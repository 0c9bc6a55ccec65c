"""Command-line front end.

Exit codes: 0 success, 1 not Hamiltonian or failed verification, 2 bad
parameters or usage.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from collections import Counter
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, List, Optional

from .classgraph import build_sck, edge_records, format_edge, to_dot
from .core import Params, Vertex, format_gaps, format_vertex, make_params, parse_vertex
from .enumeration import count_vertices, enumerate_classes, enumerate_vertices
from .errors import InvalidParams, MalformedSet, NotHamiltonian
from .hamilton import align_indexing, assemble_hamiltonian, spanning_tree
from .verify import replay_claims, verify_cycle

COMMANDS = ("vertices", "classes", "sck", "tree", "cycle", "verify", "stats", "claims")
FORMATS = ("text", "jsonl", "dot")
DOT_COMMANDS = ("sck", "tree")


@dataclass
class CliConfig:
    command: str
    n: int
    k: int
    s: int
    format: str = "text"
    input_path: Optional[str] = None
    output_path: Optional[str] = None


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _vertices(p: Params, fmt: str) -> Iterator[str]:
    for v in enumerate_vertices(p):
        yield _dump({"v": list(v)}) if fmt == "jsonl" else format_vertex(v)


def _classes(p: Params, fmt: str) -> Iterator[str]:
    for c in enumerate_classes(p):
        if fmt == "jsonl":
            yield _dump({"necklace": list(c.necklace), "order": c.order, "base": list(c.base_vertex)})
        else:
            yield f"{format_gaps(c.necklace)} order={c.order} base={format_vertex(c.base_vertex)}"


def _sck(p: Params, fmt: str) -> Iterator[str]:
    g = build_sck(p)
    if fmt == "dot":
        yield to_dot(g).rstrip("\n")
    elif fmt == "jsonl":
        for rec in edge_records(g):
            yield _dump(rec)
    else:
        for fe in g.edges.values():
            yield format_edge(fe)


def _tree(p: Params, fmt: str) -> Iterator[str]:
    t = spanning_tree(build_sck(p))
    idx = align_indexing(t, p)
    if fmt == "dot":
        yield "digraph T {"
        for b, c, fe in t.edges():
            yield f'  "{format_gaps(b)}" -> "{format_gaps(c)}" [label="{fe.move_index}"];'
        yield "}"
        return
    for nk in t.bfs_order:
        parent = t.parent[nk][0] if nk in t.parent else None
        if fmt == "jsonl":
            yield _dump({
                "class": list(nk),
                "level": t.level[nk],
                "parent": list(parent) if parent else None,
                "children": [list(c) for c in t.children[nk]],
                "anchor": list(idx.anchors[nk]),
            })
        else:
            up = format_gaps(parent) if parent else "-"
            yield (f"{t.level[nk]} {format_gaps(nk)} parent={up} "
                   f"anchor={format_vertex(idx.anchors[nk])}")


def _cycle(p: Params, fmt: str) -> Iterator[str]:
    for v in assemble_hamiltonian(p):
        yield _dump({"v": list(v)}) if fmt == "jsonl" else format_vertex(v)


def _stats(p: Params, fmt: str) -> Iterator[str]:
    catalog = enumerate_classes(p)
    g = build_sck(p, catalog)
    orders = Counter(c.order for c in catalog)
    degrees = Counter(g.degree(c.necklace) for c in catalog)
    stats = {
        "n": p.n, "k": p.k, "s": p.s, "r": p.r,
        "vertices": count_vertices(p),
        "classes": len(catalog),
        "sck_edges": len(g.edges),
        "sck_connected": g.is_connected(),
        "order_histogram": {str(o): orders[o] for o in sorted(orders)},
        "degree_histogram": {str(d): degrees[d] for d in sorted(degrees)},
    }
    if fmt == "jsonl":
        yield _dump(stats)
        return
    for key, val in stats.items():
        if isinstance(val, dict):
            val = " ".join(f"{a}:{b}" for a, b in val.items())
        yield f"{key}: {val}"


def read_cycle(lines: Iterable[str]) -> List[Vertex]:
    """Parse a cycle file: one vertex per line, ``{1,3,5}`` or ``{"v":[1,3,5]}``."""
    out = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            if line.startswith('{"'):
                out.append(tuple(json.loads(line)["v"]))
            else:
                out.append(parse_vertex(line))
        except (ValueError, KeyError, TypeError, MalformedSet):
            out.append(())  # reported as a bad vertex
    return out


@contextlib.contextmanager
def _open_out(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _write(lines: Iterable[str], out: IO[str]) -> None:
    for line in lines:
        out.write(line)
        out.write("\n")


def run(config: CliConfig) -> int:
    if config.command not in COMMANDS:
        raise UsageError(f"unknown command {config.command!r}")
    if config.format not in FORMATS:
        raise UsageError(f"unknown format {config.format!r}")
    if config.format == "dot" and config.command not in DOT_COMMANDS:
        raise UsageError("--format dot is only valid for sck and tree")
    p = make_params(config.n, config.k, config.s)
    fmt = config.format

    if config.command == "verify":
        if config.input_path in (None, "-"):
            seq = read_cycle(sys.stdin)
        else:
            with open(config.input_path) as fh:
                seq = read_cycle(fh)
        report = verify_cycle(p, seq)
        with _open_out(config.output_path) as out:
            if fmt == "jsonl":
                out.write(report.to_json() + "\n")
            else:
                status = "ok" if report.ok else "FAILED"
                out.write(
                    f"{status}: {report.vertex_count} vertices (expected {report.expected_count}), "
                    f"missing={report.missing} duplicates={report.duplicates} "
                    f"bad_edges={len(report.bad_edges)} bad_vertices={len(report.bad_vertices)}\n"
                )
        return 0 if report.ok else 1

    if config.command == "claims":
        rep = replay_claims(p)
        with _open_out(config.output_path) as out:
            if fmt == "jsonl":
                out.write(_dump(rep.to_dict()) + "\n")
            else:
                for name, passed in rep.results.items():
                    note = f" ({rep.notes[name]})" if name in rep.notes else ""
                    out.write(f"{name}: {'pass' if passed else 'FAIL'}{note}\n")
        return 0 if rep.ok else 1

    producer = {
        "vertices": _vertices,
        "classes": _classes,
        "sck": _sck,
        "tree": _tree,
        "cycle": _cycle,
        "stats": _stats,
    }[config.command]
    # materialize before opening --out so a failed construction leaves no file
    lines = producer(p, fmt)
    if config.command in ("cycle", "tree"):
        lines = list(lines)
    with _open_out(config.output_path) as out:
        _write(lines, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stable-kneser",
        description="Vertices, classes and explicit Hamiltonian cycles of s-stable Kneser graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="ground set size")
    common.add_argument("--k", type=int, required=True, help="subset size")
    common.add_argument("--s", type=int, required=True, help="stability (>= 2)")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", dest="output_path", default=None, help="output file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "vertices": "stream every vertex in lexicographic order",
        "classes": "list rotation classes with their orders",
        "sck": "friend-class graph with witness pairs",
        "tree": "BFS spanning tree of the friend-class graph",
        "cycle": "construct a Hamiltonian cycle",
        "verify": "check a cycle read from --in or stdin",
        "stats": "counts and histograms",
        "claims": "replay the structural checks on one instance",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "verify":
            sp.add_argument("--in", dest="input_path", default=None, help="cycle file (default stdin)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = CliConfig(
        command=args.command,
        n=args.n,
        k=args.k,
        s=args.s,
        format=args.format,
        input_path=getattr(args, "input_path", None),
        output_path=args.output_path,
    )
    try:
        return run(config)
    except (InvalidParams, UsageError) as exc:
        print(f"stable-kneser: error: {exc}", file=sys.stderr)
        return 2
    except NotHamiltonian as exc:
        print(f"stable-kneser: not Hamiltonian: {exc.reason}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
