"""Finite incidence structures: points, lines, planes and two incidence
relations, with a line-oriented text format.

File format (UTF-8, ``#`` starts a comment)::

    points: A B C D
    lines: a b c d e f
    planes: alpha beta gamma delta
    on_line: A a
    on_plane: A alpha

Each header may appear at most once and all headers precede incidence
lines.  A missing header declares no names of that sort.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable

__all__ = [
    "FiniteIncidenceStructure", "MalformedStructureError", "ModelParseError",
    "tetrahedron", "parse_model", "serialize_model", "load_model",
    "bundled_model_path",
]

HEADERS = ("points", "lines", "planes")


class MalformedStructureError(ValueError):
    """Structure references undeclared names or reuses names."""


class ModelParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


@dataclass(frozen=True)
class FiniteIncidenceStructure:
    points: tuple[str, ...] = ()
    lines: tuple[str, ...] = ()
    planes: tuple[str, ...] = ()
    on_line: frozenset[tuple[str, str]] = field(default_factory=frozenset)
    on_plane: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "planes", tuple(self.planes))
        object.__setattr__(self, "on_line", frozenset(tuple(p) for p in self.on_line))
        object.__setattr__(self, "on_plane", frozenset(tuple(p) for p in self.on_plane))
        self.validate()

    def validate(self) -> None:
        seen: set[str] = set()
        for sort in HEADERS:
            for name in getattr(self, sort):
                if not name or any(ch.isspace() for ch in name):
                    raise MalformedStructureError(f"invalid name {name!r}")
                if name in seen:
                    raise MalformedStructureError(f"duplicate name {name!r}")
                seen.add(name)
        pts, lns, pls = set(self.points), set(self.lines), set(self.planes)
        for p, l in self.on_line:
            if p not in pts:
                raise MalformedStructureError(f"on_line references undeclared point {p!r}")
            if l not in lns:
                raise MalformedStructureError(f"on_line references undeclared line {l!r}")
        for p, a in self.on_plane:
            if p not in pts:
                raise MalformedStructureError(f"on_plane references undeclared point {p!r}")
            if a not in pls:
                raise MalformedStructureError(f"on_plane references undeclared plane {a!r}")

    @property
    def size(self) -> int:
        return len(self.points) + len(self.lines) + len(self.planes)

    def points_on_line(self, line: str) -> frozenset[str]:
        return frozenset(p for p, l in self.on_line if l == line)

    def points_on_plane(self, plane: str) -> frozenset[str]:
        return frozenset(p for p, a in self.on_plane if a == plane)

    def line_in_plane(self, line: str, plane: str) -> bool:
        # derived relation: not stored
        on_l = self.points_on_line(line)
        on_a = self.points_on_plane(plane)
        return len(on_l & on_a) >= 2 and on_l <= on_a

    def without(self, on_line: Iterable[tuple[str, str]] = (),
                on_plane: Iterable[tuple[str, str]] = ()) -> FiniteIncidenceStructure:
        """Copy with the given incidence facts removed."""
        return FiniteIncidenceStructure(
            self.points, self.lines, self.planes,
            self.on_line - frozenset(on_line), self.on_plane - frozenset(on_plane))

    def renamed(self, mapping: dict[str, str]) -> FiniteIncidenceStructure:
        r = lambda n: mapping.get(n, n)
        return FiniteIncidenceStructure(
            tuple(map(r, self.points)), tuple(map(r, self.lines)), tuple(map(r, self.planes)),
            frozenset((r(p), r(l)) for p, l in self.on_line),
            frozenset((r(p), r(a)) for p, a in self.on_plane))


def tetrahedron() -> FiniteIncidenceStructure:
    """Four vertices, six edges and four faces of a tetrahedron."""
    edges = {"a": "AB", "b": "AC", "c": "BC", "d": "AD", "e": "BD", "f": "CD"}
    faces = {"alpha": "ABC", "beta": "ABD", "gamma": "ACD", "delta": "BCD"}
    return FiniteIncidenceStructure(
        points=("A", "B", "C", "D"),
        lines=tuple(edges),
        planes=tuple(faces),
        on_line=frozenset((p, l) for l, ps in edges.items() for p in ps),
        on_plane=frozenset((p, a) for a, ps in faces.items() for p in ps),
    )


def parse_model(text: str) -> FiniteIncidenceStructure:
    declared: dict[str, tuple[str, ...]] = {}
    sort_of: dict[str, str] = {}
    on_line: set[tuple[str, str]] = set()
    on_plane: set[tuple[str, str]] = set()
    seen_incidence = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ModelParseError(lineno, f"expected 'directive: ...', got {line!r}")
        names = rest.split()
        if key in HEADERS:
            if key in declared:
                raise ModelParseError(lineno, f"duplicate '{key}' header")
            if seen_incidence:
                raise ModelParseError(lineno, f"'{key}' header after incidence lines")
            for n in names:
                if n in sort_of:
                    raise ModelParseError(lineno, f"duplicate name {n!r}")
                sort_of[n] = key
            declared[key] = tuple(names)
        elif key in ("on_line", "on_plane"):
            seen_incidence = True
            if len(names) != 2:
                raise ModelParseError(lineno, f"'{key}' takes exactly two names")
            p, target = names
            want = "lines" if key == "on_line" else "planes"
            if sort_of.get(p) != "points":
                raise ModelParseError(lineno, f"dangling reference: {p!r} is not a declared point")
            if sort_of.get(target) != want:
                raise ModelParseError(lineno, f"dangling reference: {target!r} is not a declared {want[:-1]}")
            (on_line if key == "on_line" else on_plane).add((p, target))
        else:
            raise ModelParseError(lineno, f"unknown directive {key!r}")

    return FiniteIncidenceStructure(
        declared.get("points", ()), declared.get("lines", ()), declared.get("planes", ()),
        frozenset(on_line), frozenset(on_plane))


def serialize_model(s: FiniteIncidenceStructure) -> str:
    out = [f"{h}:" + "".join(" " + n for n in getattr(s, h)) for h in HEADERS]
    pidx = {p: i for i, p in enumerate(s.points)}
    lidx = {l: i for i, l in enumerate(s.lines)}
    aidx = {a: i for i, a in enumerate(s.planes)}
    for p, l in sorted(s.on_line, key=lambda pl: (lidx[pl[1]], pidx[pl[0]])):
        out.append(f"on_line: {p} {l}")
    for p, a in sorted(s.on_plane, key=lambda pa: (aidx[pa[1]], pidx[pa[0]])):
        out.append(f"on_plane: {p} {a}")
    return "\n".join(out) + "\n"


def bundled_model_path(name: str):
    """Path-like handle to a data file shipped with the package."""
    return resources.files("hilbertgeom") / "data" / name


def load_model(path) -> FiniteIncidenceStructure:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())
