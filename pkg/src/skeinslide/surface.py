"""Gluing Temperley-Lieb diagrams into a punctured disc.

A `Scenario` is an exact-rational picture: an outer rectangle, labelled
punctures, a box carrying ``k`` marked points on each vertical edge, and a
fixed system of arcs (the outside curve system) pairing those marked points
outside the box.  Gluing a box diagram to the arcs closes everything up into
simple closed curves; each curve is recorded by the set of punctures it
encloses.  Curves enclosing nothing are contractible and become factors of
``DELTA``.

Scenario files are JSON documents::

    {"name": "h2h1", "outer_label": "a4",
     "punctures": [{"label": "a1", "x": 38, "y": "84/2"}, ...],
     "outer": {"x0": 0, "y0": 0, "x1": 100, "y1": 60},
     "box":   {"x0": 45, "y0": 0, "x1": 55, "y1": 60, "k": 4},
     "arcs":  [{"from": "L1", "to": "L2", "points": [[30, 48], [30, 36]]}, ...]}

Coordinates are integers or ``"p/q"`` strings.  ``points`` lists the
interior vertices of an arc; the marked endpoints are implied.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .coeff import DELTA, ONE, ZERO, LaurentPoly
from .expr import format_coeff
from .geometry import (
    Point,
    as_fraction,
    crossing_parity,
    on_segment,
    orient,
    segment_intersection,
    segment_meets_open_rect,
)
from .tl import TLDiagram, TLElement

__all__ = [
    "ScenarioError",
    "Rect",
    "Scenario",
    "Multicurve",
    "SkeinVector",
    "load_scenario",
    "shipped_scenarios",
    "embed_box_diagram",
    "glue",
    "rho_star",
    "print_multicurve",
    "parse_multicurve",
]


class ScenarioError(ValueError):
    """A scenario document failed schema or geometric validation."""


def _label_key(label: str):
    m = re.fullmatch(r"([A-Za-z_]*)(\d+)", label)
    return (m.group(1), int(m.group(2)), "") if m else (label, 0, label)


# ---------------------------------------------------------------------------
# multicurves and skein vectors
# ---------------------------------------------------------------------------


def _component_key(c: frozenset[str]):
    return (len(c), sorted(_label_key(x) for x in c))


class Multicurve:
    """Isotopy class of a multicurve: a laminar multiset of puncture sets.

    Each component is the set of punctures it encloses; contractible
    components are never stored.
    """

    __slots__ = ("components", "_hash")

    def __init__(self, components: Iterable[Iterable[str]] = ()):
        comps = [frozenset(c) for c in components]
        for c in comps:
            if not c:
                raise ValueError("contractible components belong in the coefficient")
        for i, a in enumerate(comps):
            for b in comps[i + 1:]:
                if not (a <= b or b <= a or not (a & b)):
                    raise ValueError(f"components {sorted(a)} and {sorted(b)} are not laminar")
        self.components = tuple(sorted(comps, key=_component_key))
        self._hash = hash(self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multicurve):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Multicurve) -> bool:
        return self.sort_key() < other.sort_key()

    def __len__(self) -> int:
        return len(self.components)

    def sort_key(self):
        return (len(self.components), [_component_key(c) for c in self.components])

    def intersection_number(self, left: Iterable[str], right: Iterable[str]) -> int:
        """Minimal intersection with the separating disc between ``left`` and ``right``.

        A component enclosing punctures from both sides meets the disc twice;
        any other component can be isotoped off it.
        """
        left, right = set(left), set(right)
        return sum(2 for c in self.components if c & left and c & right)

    def __repr__(self) -> str:
        return f"Multicurve({print_multicurve(self)!r})"

    def __str__(self) -> str:
        return print_multicurve(self)


def print_multicurve(mc: Multicurve, outer_label: str | None = None, universe: Iterable[str] | None = None) -> str:
    """``a1 a3 [a2a3]`` style; repeated components get an exponent.

    When ``outer_label`` and ``universe`` are given, a component enclosing
    every puncture is written as the curve parallel to the outer boundary,
    ``[<outer_label>]``.
    """
    if not mc.components:
        return "1"
    full = frozenset(universe) if universe is not None else None
    out = []
    i = 0
    comps = mc.components
    while i < len(comps):
        c = comps[i]
        j = i
        while j < len(comps) and comps[j] == c:
            j += 1
        labels = sorted(c, key=_label_key)
        if outer_label is not None and full is not None and c == full:
            body = f"[{outer_label}]"
        elif len(labels) == 1:
            body = labels[0]
        else:
            body = "[" + "".join(labels) + "]"
        if j - i > 1:
            body += f"^{j - i}"
        out.append(body)
        i = j
    return " ".join(out)


_TOKEN = re.compile(r"\[([^\]]*)\](?:\^(\d+))?|([A-Za-z_]+\d+)(?:\^(\d+))?|(\S+)")
_LABEL = re.compile(r"[A-Za-z_]+\d+")


def parse_multicurve(text: str, outer_label: str | None = None, universe: Iterable[str] | None = None) -> Multicurve:
    """Inverse of `print_multicurve`: ``"a1 a3 [a2a3]"``, ``"[a1a2]^2"``, ``"1"``."""
    text = text.strip()
    if text == "1":
        return Multicurve()
    comps = []
    for m in _TOKEN.finditer(text):
        inner, rep1, single, rep2, junk = m.groups()
        if junk is not None:
            raise ValueError(f"cannot read multicurve component {junk!r} in {text!r}")
        if inner is not None:
            labels = _LABEL.findall(inner)
            if "".join(labels) != inner.replace(" ", ""):
                raise ValueError(f"cannot read component [{inner}]")
            if outer_label is not None and labels == [outer_label]:
                if universe is None:
                    raise ValueError("the outer curve needs the puncture universe")
                labels = list(universe)
            comps += [frozenset(labels)] * int(rep1 or 1)
        else:
            comps += [frozenset([single])] * int(rep2 or 1)
    return Multicurve(comps)


class SkeinVector:
    """Finite ``LaurentPoly``-combination of multicurves."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Multicurve, LaurentPoly] | None = None):
        self._terms = {mc: LaurentPoly.coerce(c) for mc, c in (terms or {}).items() if c}

    @property
    def terms(self) -> dict[Multicurve, LaurentPoly]:
        return dict(self._terms)

    def coeff(self, mc: Multicurve) -> LaurentPoly:
        return self._terms.get(mc, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: SkeinVector) -> SkeinVector:
        t = dict(self._terms)
        for mc, c in other._terms.items():
            t[mc] = t.get(mc, ZERO) + c
        return SkeinVector(t)

    def __neg__(self) -> SkeinVector:
        return SkeinVector({mc: -c for mc, c in self._terms.items()})

    def __sub__(self, other: SkeinVector) -> SkeinVector:
        return self + (-other)

    def scale(self, c) -> SkeinVector:
        c = LaurentPoly.coerce(c)
        return SkeinVector({mc: v * c for mc, v in self._terms.items()})

    def __rmul__(self, c) -> SkeinVector:
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def format(self, outer_label: str | None = None, universe=None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, mc in enumerate(sorted(self._terms)):
            c = self._terms[mc]
            if not mc.components:
                parts.append(_format_scalar_term(c, i == 0))
            else:
                parts.append(format_coeff(c, print_multicurve(mc, outer_label, universe), i == 0))
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"SkeinVector({self.format()!r})"


def _format_scalar_term(c: LaurentPoly, first: bool) -> str:
    s = str(c)
    if not c.is_monomial():
        s = f"({s})"
        return s if first else "+ " + s
    if s.startswith("-"):
        return s if first else "- " + s[1:]
    return s if first else "+ " + s


# ---------------------------------------------------------------------------
# scenarios
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Rect:
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    @property
    def width(self) -> Fraction:
        return self.x1 - self.x0

    @property
    def height(self) -> Fraction:
        return self.y1 - self.y0


@dataclass(frozen=True)
class Scenario:
    """A validated gluing picture. Build with `load_scenario`."""

    name: str
    punctures: tuple[tuple[str, Point], ...]
    outer: Rect
    box: Rect
    k: int
    arcs: tuple[tuple[str, str, tuple[Point, ...]], ...]
    outer_label: str | None = None
    description: str = ""
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def marked_point(self, label: str) -> Point:
        side, j = label[0], int(label[1:])
        b = self.box
        y = b.y1 - j * b.height / (self.k + 1)
        return (b.x0 if side == "L" else b.x1, y)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lbl for lbl, _ in self.punctures)

    @property
    def midline(self) -> Fraction:
        return (self.box.x0 + self.box.x1) / 2

    @property
    def left_labels(self) -> frozenset[str]:
        return frozenset(lbl for lbl, p in self.punctures if p[0] < self.midline)

    @property
    def right_labels(self) -> frozenset[str]:
        return frozenset(lbl for lbl, p in self.punctures if p[0] > self.midline)

    def intersection_number(self, mc: Multicurve) -> int:
        return mc.intersection_number(self.left_labels, self.right_labels)

    def kappa_pairs(self) -> list[tuple[str, str]]:
        return [(a, b) for a, b, _ in self.arcs]

    def format(self, v: SkeinVector | Multicurve) -> str:
        if isinstance(v, Multicurve):
            return print_multicurve(v, self.outer_label, self.labels)
        return v.format(self.outer_label, self.labels)


_SHIPPED_DIR = "scenarios"


def shipped_scenarios() -> dict[str, str]:
    """Short name -> one-line description for every bundled scenario."""
    out = {}
    root = resources.files(__package__).joinpath(_SHIPPED_DIR)
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            doc = json.loads(entry.read_text())
            out[entry.name[:-5]] = doc.get("description", "")
    return out


def _read_document(document) -> dict:
    if isinstance(document, Mapping):
        return dict(document)
    if isinstance(document, str) and document.lstrip().startswith("{"):
        try:
            return json.loads(document)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"invalid JSON: {exc}") from exc
    if isinstance(document, Path) or (isinstance(document, str) and (document.endswith(".json") or "/" in document)):
        path = Path(document)
        if not path.is_file():
            raise ScenarioError(f"scenario file {str(path)!r} not found")
        try:
            return json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"{path}: invalid JSON: {exc}") from exc
    if isinstance(document, str):
        res = resources.files(__package__).joinpath(_SHIPPED_DIR).joinpath(f"{document.strip()}.json")
        if res.is_file():
            return json.loads(res.read_text())
        raise ScenarioError(f"unknown scenario {document!r}; shipped: {', '.join(shipped_scenarios())}")
    raise ScenarioError(f"cannot read a scenario from {type(document).__name__}")


def _coord(value, where: str) -> Fraction:
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ScenarioError(f"{where}: {exc}") from None


def _rect(doc, where: str) -> Rect:
    if not isinstance(doc, Mapping):
        raise ScenarioError(f"{where} must be an object with x0, y0, x1, y1")
    try:
        r = Rect(*(_coord(doc[key], f"{where}.{key}") for key in ("x0", "y0", "x1", "y1")))
    except KeyError as exc:
        raise ScenarioError(f"{where} is missing {exc.args[0]!r}") from None
    if not (r.x0 < r.x1 and r.y0 < r.y1):
        raise ScenarioError(f"{where} is degenerate: need x0 < x1 and y0 < y1")
    return r


def _fmt_point(p: Point) -> str:
    return f"({p[0]}, {p[1]})"


def load_scenario(document) -> Scenario:
    """Read and fully validate a scenario.

    ``document`` may be a mapping, a JSON string, a path to a JSON file, or
    the short name of a bundled scenario.  Raises `ScenarioError` with a
    precise diagnostic on any schema or geometry violation.
    """
    doc = _read_document(document)
    for key in ("punctures", "outer", "box", "arcs"):
        if key not in doc:
            raise ScenarioError(f"scenario is missing required field {key!r}")
    outer = _rect(doc["outer"], "outer")
    box = _rect(doc["box"], "box")
    k = doc["box"].get("k")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ScenarioError("box.k must be a positive integer")
    if not (outer.x0 <= box.x0 and box.x1 <= outer.x1 and outer.y0 <= box.y0 and box.y1 <= outer.y1):
        raise ScenarioError("box must lie inside the outer rectangle")
    if not (outer.x0 < box.x0 and box.x1 < outer.x1):
        raise ScenarioError("box must leave room on both sides inside the outer rectangle")

    # punctures
    punctures = []
    seen = set()
    if not isinstance(doc["punctures"], list):
        raise ScenarioError("punctures must be a list")
    for i, p in enumerate(doc["punctures"]):
        where = f"punctures[{i}]"
        if not isinstance(p, Mapping) or not {"label", "x", "y"} <= set(p):
            raise ScenarioError(f"{where} needs label, x and y")
        label = p["label"]
        if not isinstance(label, str) or not label or label in seen:
            raise ScenarioError(f"{where}: label {label!r} is empty or repeated")
        seen.add(label)
        pt = (_coord(p["x"], f"{where}.x"), _coord(p["y"], f"{where}.y"))
        if not (outer.x0 < pt[0] < outer.x1 and outer.y0 < pt[1] < outer.y1):
            raise ScenarioError(f"puncture {label} at {_fmt_point(pt)} is not strictly inside the outer rectangle")
        if box.x0 <= pt[0] <= box.x1 and box.y0 <= pt[1] <= box.y1:
            raise ScenarioError(f"puncture {label} at {_fmt_point(pt)} lies in the box")
        punctures.append((label, pt))
    outer_label = doc.get("outer_label")
    if outer_label is not None and outer_label in seen:
        raise ScenarioError(f"outer_label {outer_label!r} repeats a puncture label")

    scen = Scenario(
        name=str(doc.get("name", "unnamed")),
        punctures=tuple(punctures),
        outer=outer,
        box=box,
        k=k,
        arcs=(),
        outer_label=outer_label,
        description=str(doc.get("description", "")),
        metadata={key: v for key, v in doc.items() if key not in ("punctures", "outer", "box", "arcs")},
    )

    # arcs
    marks = [f"L{j}" for j in range(1, k + 1)] + [f"R{j}" for j in range(1, k + 1)]
    used: dict[str, int] = {}
    arcs = []
    if not isinstance(doc["arcs"], list):
        raise ScenarioError("arcs must be a list")
    for i, a in enumerate(doc["arcs"]):
        where = f"arcs[{i}]"
        if not isinstance(a, Mapping) or "from" not in a or "to" not in a:
            raise ScenarioError(f"{where} needs 'from' and 'to'")
        src, dst = a["from"], a["to"]
        for lbl in (src, dst):
            if lbl not in marks:
                raise ScenarioError(f"{where}: {lbl!r} is not a marked point (expected L1..L{k} or R1..R{k})")
            if lbl in used:
                raise ScenarioError(f"{where}: marked point {lbl} already used by arcs[{used[lbl]}]")
            used[lbl] = i
        if src == dst:
            raise ScenarioError(f"{where} joins {src} to itself")
        raw_pts = a.get("points", [])
        if not isinstance(raw_pts, list):
            raise ScenarioError(f"{where}.points must be a list of [x, y]")
        pts = [scen.marked_point(src)]
        for j, xy in enumerate(raw_pts):
            if not isinstance(xy, (list, tuple)) or len(xy) != 2:
                raise ScenarioError(f"{where}.points[{j}] must be [x, y]")
            pt = (_coord(xy[0], f"{where}.points[{j}]"), _coord(xy[1], f"{where}.points[{j}]"))
            if pt != pts[-1]:
                pts.append(pt)
        end = scen.marked_point(dst)
        if pts[-1] != end:
            pts.append(end)
        arcs.append((src, dst, tuple(pts)))
    missing = [lbl for lbl in marks if lbl not in used]
    if missing:
        raise ScenarioError(f"marked points {', '.join(missing)} are not joined by any arc")

    _validate_arcs(scen, arcs)
    return Scenario(
        name=scen.name,
        punctures=scen.punctures,
        outer=outer,
        box=box,
        k=k,
        arcs=tuple(arcs),
        outer_label=outer_label,
        description=scen.description,
        metadata=scen.metadata,
    )


def _validate_arcs(scen: Scenario, arcs) -> None:
    outer, box = scen.outer, scen.box
    segs = []  # (arc index, segment index, a, b)
    for i, (src, dst, pts) in enumerate(arcs):
        name = f"arc {src}-{dst}"
        for p in pts[1:-1]:
            if not (outer.x0 < p[0] < outer.x1 and outer.y0 < p[1] < outer.y1):
                raise ScenarioError(f"{name}: vertex {_fmt_point(p)} is not strictly inside the outer rectangle")
        for j in range(len(pts) - 1):
            a, b = pts[j], pts[j + 1]
            if segment_meets_open_rect(a, b, box.x0, box.y0, box.x1, box.y1):
                raise ScenarioError(f"{name}: segment {_fmt_point(a)}-{_fmt_point(b)} enters the box")
            # box boundary may only be touched at the arc's own endpoints
            for e0, e1 in _rect_edges(box):
                hit = segment_intersection(a, b, e0, e1)
                if hit is None:
                    continue
                allowed = (j == 0 and hit == pts[0]) or (j == len(pts) - 2 and hit == pts[-1])
                if not allowed or _overlaps(a, b, e0, e1):
                    raise ScenarioError(f"{name}: touches the box boundary at {_fmt_point(hit)}")
            for lbl, p in scen.punctures:
                if on_segment(p, a, b):
                    raise ScenarioError(f"{name}: passes through puncture {lbl} at {_fmt_point(p)}")
            segs.append((i, j, a, b))
        # simplicity within the arc
        n = len(pts) - 1
        for j in range(n):
            for l in range(j + 1, n):
                a, b, c, d = pts[j], pts[j + 1], pts[l], pts[l + 1]
                hit = segment_intersection(a, b, c, d)
                if hit is None:
                    continue
                if l == j + 1 and hit == b and not on_segment(d, a, b) and not on_segment(a, c, d):
                    continue
                raise ScenarioError(f"{name} is not simple: self-intersection at {_fmt_point(hit)}")
    # pairwise disjointness
    for x in range(len(segs)):
        i, _, a, b = segs[x]
        for y in range(x + 1, len(segs)):
            i2, _, c, d = segs[y]
            if i == i2:
                continue
            hit = segment_intersection(a, b, c, d)
            if hit is not None:
                s1, s2 = arcs[i][:2], arcs[i2][:2]
                raise ScenarioError(
                    f"arcs {s1[0]}-{s1[1]} and {s2[0]}-{s2[1]} cross at {_fmt_point(hit)}"
                )


def _rect_edges(r: Rect):
    p00, p10, p11, p01 = (r.x0, r.y0), (r.x1, r.y0), (r.x1, r.y1), (r.x0, r.y1)
    return ((p00, p10), (p10, p11), (p11, p01), (p01, p00))


def _overlaps(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Collinear segments sharing more than one point."""
    if orient(a, b, c) or orient(a, b, d):
        return False
    pts = [p for p in (a, b) if on_segment(p, c, d)] + [p for p in (c, d) if on_segment(p, a, b)]
    return len(set(pts)) > 1


# ---------------------------------------------------------------------------
# gluing
# ---------------------------------------------------------------------------


def _heights(d: TLDiagram, side: str) -> dict[tuple[int, int], int]:
    """Nesting height of each cap on one side (1 for innermost)."""
    m = d.m
    if side == "L":
        caps = [(i, d.partner[i]) for i in range(m) if d.partner[i] < m and i < d.partner[i]]
    else:
        caps = [(i - m, d.partner[i] - m) for i in range(m, m + d.n) if d.partner[i] >= m and i < d.partner[i]]
    caps.sort(key=lambda c: c[1] - c[0])
    h: dict[tuple[int, int], int] = {}
    for a, b in caps:
        inner = [h[c] for c in h if a < c[0] and c[1] < b]
        h[(a, b)] = 1 + max(inner, default=0)
    return h


def embed_box_diagram(d: TLDiagram, box: Rect) -> dict[tuple[str, str], tuple[Point, ...]]:
    """Draw ``d`` inside ``box`` as disjoint polylines between marked points.

    Caps are nested U-shapes hugging their edge, at a depth proportional to
    their nesting height; through strands run straight across the middle
    third of the box.
    """
    k = d.m
    if d.n != k:
        raise ValueError("only square diagrams are drawn in a box")
    step = box.height / (k + 1)

    def y(j: int) -> Fraction:  # 0-based
        return box.y1 - (j + 1) * step

    third = box.width / 3
    hl, hr = _heights(d, "L"), _heights(d, "R")
    dl = third / (max(hl.values(), default=0) + 1)
    dr = third / (max(hr.values(), default=0) + 1)
    out: dict[tuple[str, str], tuple[Point, ...]] = {}
    for (a, b), h in hl.items():
        x = box.x0 + dl * h
        out[(f"L{a + 1}", f"L{b + 1}")] = ((box.x0, y(a)), (x, y(a)), (x, y(b)), (box.x0, y(b)))
    for (a, b), h in hr.items():
        x = box.x1 - dr * h
        out[(f"R{a + 1}", f"R{b + 1}")] = ((box.x1, y(a)), (x, y(a)), (x, y(b)), (box.x1, y(b)))
    for i in range(k):
        j = d.partner[i]
        if j >= k:
            j -= k
            out[(f"L{i + 1}", f"R{j + 1}")] = (
                (box.x0, y(i)),
                (box.x0 + third, y(i)),
                (box.x1 - third, y(j)),
                (box.x1, y(j)),
            )
    return out


def closed_curves(s: Scenario, d: TLDiagram) -> list[tuple[Point, ...]]:
    """The closed polygons obtained by joining the arcs of ``s`` with ``d``."""
    if d.m != s.k or d.n != s.k:
        raise ValueError(f"diagram of TL({d.m},{d.n}) does not fit a box with k={s.k}")
    inner = embed_box_diagram(d, s.box)
    # adjacency: marked point -> (other end, polyline oriented from this end)
    outside: dict[str, tuple[str, tuple[Point, ...]]] = {}
    for a, b, pts in s.arcs:
        outside[a] = (b, pts)
        outside[b] = (a, tuple(reversed(pts)))
    inside: dict[str, tuple[str, tuple[Point, ...]]] = {}
    for (a, b), pts in inner.items():
        inside[a] = (b, pts)
        inside[b] = (a, tuple(reversed(pts)))
    curves = []
    done: set[str] = set()
    for start in sorted(outside, key=_label_key):
        if start in done:
            continue
        poly: list[Point] = []
        cur = start
        while True:
            done.add(cur)
            nxt, pts = outside[cur]
            poly.extend(pts[:-1])
            done.add(nxt)
            back, pts2 = inside[nxt]
            poly.extend(pts2[:-1])
            cur = back
            if cur == start:
                break
        curves.append(tuple(poly))
    return curves


def enclosed_labels(s: Scenario, polygon, direction: str = "+x") -> frozenset[str]:
    return frozenset(lbl for lbl, p in s.punctures if crossing_parity(p, polygon, direction))


def glue(s: Scenario, d: TLDiagram) -> tuple[LaurentPoly, Multicurve]:
    """Glue a basis diagram into ``s``: ``(DELTA^loops, multicurve)``."""
    loops = 0
    comps = []
    for poly in closed_curves(s, d):
        inside = enclosed_labels(s, poly, "+x")
        if inside != enclosed_labels(s, poly, "-y"):
            raise AssertionError("ray parity depends on direction; curve is not closed and simple")
        if inside:
            comps.append(inside)
        else:
            loops += 1
    return DELTA**loops if loops else ONE, Multicurve(comps)


def rho_star(s: Scenario, x) -> SkeinVector:
    """Linear extension of `glue` to a `TLElement`."""
    if isinstance(x, TLDiagram):
        x = TLElement.of(x)
    if x.m != s.k or x.n != s.k:
        raise ValueError(f"element of TL({x.m},{x.n}) does not fit a box with k={s.k}")
    t: dict[Multicurve, LaurentPoly] = {}
    for d, c in x.terms.items():
        g, mc = _glue_cached(s, d)
        t[mc] = t.get(mc, ZERO) + c * g
    return SkeinVector(t)


@lru_cache(maxsize=65536)
def _glue_cached(s: Scenario, d: TLDiagram):
    return glue(s, d)
