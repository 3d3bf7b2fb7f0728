"""The grs1 text format for structures, plain universes and set-valued maps.

    format grs1
    structure M [unchecked]
    elements: a b c
    gammas: alpha
    table alpha:
    a b c
    b b b
    c b b

    universe U
    elements: 1 2 3 4

    map T from M to M
    a -> b c
    b -> {a, b, c}

Blocks end at a blank line or at the next block header. ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import Carrier, GammaSemigroup, Universe
from .errors import NotAssociativeError, ParseError, UnknownNameError
from .rough import SetValuedMap

HEADER = "format grs1"
_NAME = re.compile(r"[^\s{},#]+")


@dataclass
class Scenario:
    """Named structures, universes and maps, kept in declaration order."""

    structures: dict[str, GammaSemigroup] = field(default_factory=dict)
    universes: dict[str, Carrier] = field(default_factory=dict)
    maps: dict[str, SetValuedMap] = field(default_factory=dict)
    order: list[tuple[str, str]] = field(default_factory=list)

    def carrier(self, name: str) -> Carrier:
        if name in self.structures:
            return self.structures[name]
        if name in self.universes:
            return self.universes[name]
        raise UnknownNameError("structure or universe", name)

    def structure(self, name: str) -> GammaSemigroup:
        try:
            return self.structures[name]
        except KeyError:
            raise UnknownNameError("structure", name) from None

    def map(self, name: str) -> SetValuedMap:
        try:
            return self.maps[name]
        except KeyError:
            raise UnknownNameError("map", name) from None

    def add(self, item) -> None:
        """Append a structure, universe or map (names share one namespace)."""
        if item.name in self.structures or item.name in self.universes or item.name in self.maps:
            raise ValueError(f"duplicate name {item.name!r}")
        if isinstance(item, SetValuedMap):
            for c in (item.source, item.target):
                if self.carrier(c.name) != c:
                    raise ValueError(f"map {item.name} uses a different {c.name!r}")
            self.maps[item.name] = item
            self.order.append(("map", item.name))
        elif isinstance(item, GammaSemigroup):
            self.structures[item.name] = item
            self.order.append(("structure", item.name))
        else:
            self.universes[item.name] = item
            self.order.append(("universe", item.name))


def parse_set_literal(text: str) -> tuple[str, ...]:
    """``{a, b}`` or ``{}``; also accepts bare whitespace-separated names."""
    text = text.strip()
    if text.startswith("{"):
        if not text.endswith("}"):
            raise ValueError(f"unterminated set literal {text!r}")
        text = text[1:-1]
    elif text.endswith("}"):
        raise ValueError(f"malformed set literal {text!r}")
    names = [t for t in re.split(r"[,\s]+", text) if t]
    for n in names:
        if not _NAME.fullmatch(n):
            raise ValueError(f"bad element name {n!r}")
    return tuple(names)


def format_literal(names) -> str:
    return "{" + ", ".join(names) + "}"


@dataclass
class _Line:
    no: int
    text: str


def _clean(text: str) -> list[_Line]:
    out = []
    for i, raw in enumerate(text.splitlines(), 1):
        out.append(_Line(i, raw.split("#", 1)[0].strip()))
    return out


def _names(line: _Line, what: str) -> tuple[str, ...]:
    toks = line.text.split()
    if not toks:
        raise ParseError(f"{what} list is empty", line.no)
    for t in toks:
        if not _NAME.fullmatch(t):
            raise ParseError(f"bad name {t!r}", line.no)
    if len(set(toks)) != len(toks):
        dup = next(t for t in toks if toks.count(t) > 1)
        raise ParseError(f"duplicate {what} {dup!r}", line.no)
    return tuple(toks)


def _field(line: _Line | None, key: str, header: _Line) -> _Line:
    if line is None or not line.text.startswith(key + ":"):
        raise ParseError(f"expected '{key}:'", line.no if line else header.no)
    return _Line(line.no, line.text[len(key) + 1:].strip())


_HEADERS = ("structure", "universe", "map", "format")


def _is_header(line: _Line) -> bool:
    return line.text.split(" ", 1)[0] in _HEADERS


class _Parser:
    def __init__(self, text: str):
        self.lines = _clean(text)
        self.pos = 0

    def peek(self) -> _Line | None:
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def next(self) -> _Line | None:
        line = self.peek()
        if line is not None:
            self.pos += 1
        return line

    def skip_blank(self):
        while self.peek() is not None and not self.peek().text:
            self.pos += 1

    def row_line(self) -> _Line | None:
        """Next table row; only a blank line or EOF ends it, so elements may be named like headers."""
        line = self.peek()
        if line is None or not line.text:
            return None
        self.pos += 1
        return line

    def body_line(self) -> _Line | None:
        """Next line of the current block, or None at a blank line, header or EOF."""
        line = self.peek()
        if line is None or not line.text or _is_header(line):
            return None
        self.pos += 1
        return line


def _parse_structure(p: _Parser, header: _Line):
    parts = header.text.split()
    if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] not in ("unchecked", "[unchecked]")):
        raise ParseError("expected 'structure NAME [unchecked]'", header.no)
    name, unchecked = parts[1], len(parts) == 3
    elements = _names(_field(p.body_line(), "elements", header), "element")
    gammas = _names(_field(p.body_line(), "gammas", header), "gamma")
    idx = {e: i for i, e in enumerate(elements)}
    tables: dict[str, list[int]] = {}
    while True:
        line = p.body_line()
        if line is None:
            break
        m = re.fullmatch(r"table\s+(\S+?)\s*:", line.text)
        if not m:
            raise ParseError(f"expected 'table GAMMA:', got {line.text!r}", line.no)
        g = m.group(1)
        if g not in gammas:
            raise ParseError(f"table for undeclared gamma {g!r}", line.no)
        if g in tables:
            raise ParseError(f"duplicate table for gamma {g!r}", line.no)
        flat = []
        for r in range(len(elements)):
            row = p.row_line()
            if row is None:
                raise ParseError(
                    f"table {g!r} has {r} rows, expected {len(elements)}",
                    p.peek().no if p.peek() else line.no,
                )
            cells = row.text.split()
            if len(cells) != len(elements):
                raise ParseError(f"ragged row: {len(cells)} cells, expected {len(elements)}", row.no)
            for cell in cells:
                if cell not in idx:
                    raise ParseError(f"unknown element {cell!r} in table cell", row.no)
                flat.append(idx[cell])
        tables[g] = flat
    for g in gammas:
        if g not in tables:
            raise ParseError(f"missing table for gamma {g!r}", header.no)
    flat = [v for g in gammas for v in tables[g]]
    try:
        return GammaSemigroup(name, elements, gammas, tuple(flat), unchecked)
    except NotAssociativeError as exc:
        raise ParseError(f"{exc} (mark the block 'unchecked' to load it anyway)", header.no) from None
    except ValueError as exc:
        raise ParseError(str(exc), header.no) from None


def _parse_universe(p: _Parser, header: _Line):
    parts = header.text.split()
    if len(parts) != 2:
        raise ParseError("expected 'universe NAME'", header.no)
    elements = _names(_field(p.body_line(), "elements", header), "element")
    extra = p.body_line()
    if extra is not None:
        raise ParseError(f"unexpected line in universe block: {extra.text!r}", extra.no)
    try:
        return Universe(parts[1], elements)
    except ValueError as exc:
        raise ParseError(str(exc), header.no) from None


def _parse_map(p: _Parser, header: _Line):
    m = re.fullmatch(r"map\s+(\S+)\s+from\s+(\S+)\s+to\s+(\S+)", header.text)
    if not m:
        raise ParseError("expected 'map NAME from SOURCE to TARGET'", header.no)
    images: list[tuple[_Line, str, tuple[str, ...]]] = []
    while True:
        line = p.body_line()
        if line is None:
            break
        if "->" not in line.text:
            raise ParseError(f"expected 'x -> image', got {line.text!r}", line.no)
        x, rhs = (s.strip() for s in line.text.split("->", 1))
        try:
            names = parse_set_literal(rhs)
        except ValueError as exc:
            raise ParseError(str(exc), line.no) from None
        if not names:
            raise ParseError(f"empty image for {x!r}", line.no)
        images.append((line, x, names))
    return m.groups(), images


def _resolve_map(sc: Scenario, header: _Line, names, images) -> SetValuedMap:
    name, src_name, tgt_name = names
    ends = []
    for ref in (src_name, tgt_name):
        try:
            ends.append(sc.carrier(ref))
        except UnknownNameError:
            raise ParseError(f"map {name}: unknown structure or universe {ref!r}", header.no) from None
    src, tgt = ends
    masks: dict[str, int] = {}
    for line, x, img in images:
        if x not in src._index:
            raise ParseError(f"map {name}: {x!r} is not an element of {src.name}", line.no)
        if x in masks:
            raise ParseError(f"map {name}: duplicate image line for {x!r}", line.no)
        mask = 0
        for e in img:
            if e not in tgt._index:
                raise ParseError(f"map {name}: unknown element {e!r} of {tgt.name}", line.no)
            mask |= 1 << tgt.index(e)
        masks[x] = mask
    missing = [x for x in src.elements if x not in masks]
    if missing:
        raise ParseError(f"map {name}: no image for {missing[0]!r}", header.no)
    return SetValuedMap(name, src, tgt, tuple(masks[x] for x in src.elements))


def parse_scenario(text: str) -> Scenario:
    p = _Parser(text)
    p.skip_blank()
    first = p.next()
    if first is None or first.text != HEADER:
        raise ParseError(f"first line must be '{HEADER}'", first.no if first else 1)
    sc = Scenario()
    pending = []
    seen: dict[str, int] = {}
    while True:
        p.skip_blank()
        header = p.next()
        if header is None:
            break
        kind = header.text.split(" ", 1)[0]
        if kind == "structure":
            item = _parse_structure(p, header)
        elif kind == "universe":
            item = _parse_universe(p, header)
        elif kind == "map":
            item = _parse_map(p, header)
        elif kind == "format":
            raise ParseError("repeated format line", header.no)
        else:
            raise ParseError(f"unknown block {header.text!r}", header.no)
        name = item[0][0] if kind == "map" else item.name
        if name in seen:
            raise ParseError(f"duplicate name {name!r} (first declared on line {seen[name]})", header.no)
        seen[name] = header.no
        pending.append((kind, header, item))
    for kind, header, item in pending:
        if kind != "map":
            sc.add(item)
    maps = {}
    for kind, header, item in pending:
        if kind == "map":
            maps[item[0][0]] = _resolve_map(sc, header, *item)
    # restore declaration order across kinds
    sc.order = []
    for kind, header, item in pending:
        name = item[0][0] if kind == "map" else item.name
        sc.order.append((kind, name))
    sc.maps = maps
    return sc


def _serialize_structure(S: GammaSemigroup) -> list[str]:
    out = [f"structure {S.name}" + (" unchecked" if S.unchecked else "")]
    out.append("elements: " + " ".join(S.elements))
    out.append("gammas: " + " ".join(S.gammas))
    for g in S.gammas:
        out.append(f"table {g}:")
        out.extend(" ".join(row) for row in S.rows(g))
    return out


def _serialize_map(T: SetValuedMap) -> list[str]:
    out = [f"map {T.name} from {T.source.name} to {T.target.name}"]
    for x, img in zip(T.source.elements, T.images):
        out.append(f"{x} -> {format_literal(T.target.names_of(img))}")
    return out


def serialize_scenario(sc: Scenario) -> str:
    blocks = []
    for kind, name in sc.order:
        if kind == "structure":
            blocks.append(_serialize_structure(sc.structures[name]))
        elif kind == "universe":
            U = sc.universes[name]
            blocks.append([f"universe {U.name}", "elements: " + " ".join(U.elements)])
        else:
            blocks.append(_serialize_map(sc.maps[name]))
    parts = [HEADER] + ["\n".join(b) for b in blocks]
    return "\n\n".join(parts) + "\n"


def load(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())
