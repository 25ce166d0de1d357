"""Reading and writing the line-oriented ``.1pg`` drawing format.

::

    onePlane 1
    vertex 0
    edge 0 0 1
    rot 0 0 3 5
    cross 2 7 0

``#`` starts a comment.  Parsing is strict; every error carries its line
number.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import TextIO

from .core import CrossingPair, OnePlaneDrawing, OnePlaneError, RotationMultigraph

HEADER = "onePlane 1"


class ParseError(OnePlaneError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _ints(lineno: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def loads(text: str) -> OnePlaneDrawing:
    vertices: list[int] = []
    edges: dict[int, tuple[int, int]] = {}
    rotation: dict[int, tuple[int, ...]] = {}
    crossings: list[CrossingPair] = []
    header_seen = False
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not header_seen:
            if tokens != HEADER.split():
                raise ParseError(lineno, f"expected header {HEADER!r}")
            header_seen = True
            continue
        key, args = tokens[0], tokens[1:]
        if key == "vertex":
            (vid,) = _ints(lineno, args) if len(args) == 1 else _bad(lineno, "vertex takes one id")
            if vid in vertices:
                raise ParseError(lineno, f"duplicate vertex id {vid}")
            if vid != len(vertices):
                raise ParseError(lineno, f"vertex ids must be dense from 0; got {vid}")
            vertices.append(vid)
        elif key == "edge":
            if len(args) != 3:
                _bad(lineno, "edge takes <eid> <u> <v>")
            eid, u, v = _ints(lineno, args)
            if eid in edges:
                raise ParseError(lineno, f"duplicate edge id {eid}")
            if eid != len(edges):
                raise ParseError(lineno, f"edge ids must be dense from 0; got {eid}")
            for w in (u, v):
                if w not in vertices:
                    raise ParseError(lineno, f"edge {eid} uses undeclared vertex {w}")
            if u == v:
                raise ParseError(lineno, f"edge {eid} is a loop")
            edges[eid] = (u, v)
        elif key == "rot":
            if not args:
                _bad(lineno, "rot needs a vertex id")
            vid, *rot = _ints(lineno, args)
            if vid not in vertices:
                raise ParseError(lineno, f"rotation for undeclared vertex {vid}")
            if vid in rotation:
                raise ParseError(lineno, f"duplicate rotation for vertex {vid}")
            for e in rot:
                if e not in edges:
                    raise ParseError(lineno, f"rotation at {vid} names undeclared edge {e}")
            rotation[vid] = tuple(rot)
        elif key == "cross":
            if len(args) != 3:
                _bad(lineno, "cross takes <eidA> <eidB> <flag>")
            a, b, flag = _ints(lineno, args)
            for e in (a, b):
                if e not in edges:
                    raise ParseError(lineno, f"crossing names undeclared edge {e}")
            if flag not in (0, 1):
                raise ParseError(lineno, f"crossing flag must be 0 or 1, got {flag}")
            crossings.append(CrossingPair(a, b, flag))
        else:
            raise ParseError(lineno, f"unknown keyword {key!r}")
    if not header_seen:
        raise ParseError(max(last, 1), f"missing header {HEADER!r}")
    for vid in vertices:
        if vid not in rotation:
            incident = any(vid in e for e in edges.values())
            if incident:
                raise ParseError(last, f"missing rotation for vertex {vid}")
            rotation[vid] = ()
    graph = RotationMultigraph(
        len(vertices),
        tuple(edges[e] for e in range(len(edges))),
        tuple(rotation[v] for v in range(len(vertices))),
    )
    return OnePlaneDrawing(graph, tuple(crossings))


def _bad(lineno: int, message: str):
    raise ParseError(lineno, message)


def load(path: str | Path) -> OnePlaneDrawing:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(drawing: OnePlaneDrawing, fh: TextIO, comment: str | None = None) -> None:
    g = drawing.graph
    fh.write(HEADER + "\n")
    if comment:
        for line in comment.splitlines():
            fh.write(f"# {line}\n")
    for v in range(g.n):
        fh.write(f"vertex {v}\n")
    for e, (a, b) in enumerate(g.edges):
        fh.write(f"edge {e} {a} {b}\n")
    for v in range(g.n):
        fh.write(" ".join(["rot", str(v), *map(str, g.rotation[v])]) + "\n")
    for c in drawing.crossings:
        fh.write(f"cross {c.first} {c.second} {c.flag}\n")


def dumps(drawing: OnePlaneDrawing, comment: str | None = None) -> str:
    buf = io.StringIO()
    dump(drawing, buf, comment)
    return buf.getvalue()


def save(drawing: OnePlaneDrawing, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(drawing, comment), encoding="utf-8")
