"""Temperley-Lieb diagrams and their formal combinations.

A diagram in ``TL(m, n)`` is a crossingless perfect matching of ``m`` left
boundary points ``L1..Lm`` and ``n`` right boundary points ``R1..Rn``, both
numbered top to bottom.  Point ``Li`` has index ``i-1`` and ``Rj`` has index
``m+j-1``; a diagram stores, for every index, the index of its partner.

Composition ``x * y`` glues the right boundary of ``x`` to the left boundary
of ``y`` (so the word ``e1 e2`` means ``compose(e1, e2)``) and replaces every
closed loop by the factor ``DELTA = -A^2 - A^-2``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .coeff import DELTA, ONE, ZERO, LaurentPoly

__all__ = [
    "TLDiagram",
    "TLElement",
    "enumerate_basis",
    "identity",
    "generator_e",
    "compose",
    "tensor",
    "mirror_bar",
    "flip_sigma",
    "through_structure",
    "reduced_word",
    "catalan",
]


def catalan(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


class TLDiagram:
    """A crossingless matching between ``m`` left and ``n`` right points."""

    __slots__ = ("m", "n", "partner", "_hash")

    def __init__(self, m: int, n: int, partner: Iterable[int], *, check: bool = True):
        self.m = m
        self.n = n
        self.partner = tuple(partner)
        self._hash = hash((m, n, self.partner))
        if check:
            self._validate()

    @classmethod
    def from_pairs(cls, m: int, n: int, pairs: Iterable[tuple[str, str]]) -> TLDiagram:
        """Build from label pairs such as ``[("L1", "R1"), ("L2", "L3")]``."""
        partner = [-1] * (m + n)
        for a, b in pairs:
            i, j = _label_index(a, m, n), _label_index(b, m, n)
            if partner[i] != -1 or partner[j] != -1 or i == j:
                raise ValueError(f"point used twice in pairing {pairs!r}")
            partner[i], partner[j] = j, i
        return cls(m, n, partner)

    def _validate(self) -> None:
        m, n, p = self.m, self.n, self.partner
        if m < 0 or n < 0 or len(p) != m + n:
            raise ValueError("pairing length does not match boundary counts")
        if (m + n) % 2:
            raise ValueError(f"TL({m},{n}) is empty: m+n must be even")
        for i, j in enumerate(p):
            if not 0 <= j < m + n or j == i or p[j] != i:
                raise ValueError(f"not a perfect matching: {p}")
        cyc = [self._cyclic(i) for i in range(m + n)]
        chords = sorted((min(cyc[i], cyc[j]), max(cyc[i], cyc[j])) for i, j in enumerate(p) if i < j)
        for a, b in chords:
            for c, d in chords:
                if a < c < b < d:
                    raise ValueError(f"pairing is not crossingless: {self.pairs()}")

    def _cyclic(self, i: int) -> int:
        # boundary cyclic order L1..Lm, Rn..R1
        return i if i < self.m else self.m + self.n - 1 - (i - self.m)

    # labels ------------------------------------------------------------
    def label(self, i: int) -> str:
        return f"L{i + 1}" if i < self.m else f"R{i - self.m + 1}"

    def pairs(self) -> list[tuple[str, str]]:
        return [(self.label(i), self.label(j)) for i, j in enumerate(self.partner) if i < j]

    def raw(self) -> str:
        return "[" + ",".join(f"({a},{b})" for a, b in self.pairs()) + "]"

    @property
    def through_degree(self) -> int:
        return sum(1 for i in range(self.m) if self.partner[i] >= self.m)

    # protocol ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, TLDiagram):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.partner == other.partner

    def __lt__(self, other: TLDiagram) -> bool:
        return (self.m, self.n, self.partner) < (other.m, other.n, other.partner)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"TLDiagram({self.m}, {self.n}, {self.raw()})"

    def __str__(self) -> str:
        if self.m == self.n:
            word = reduced_word(self)
            if not word:
                return f"Id{self.m}"
            return "".join(f"e{i}" for i in word)
        return self.raw()


def _label_index(label: str, m: int, n: int) -> int:
    side, num = label[0].upper(), int(label[1:])
    if side == "L" and 1 <= num <= m:
        return num - 1
    if side == "R" and 1 <= num <= n:
        return m + num - 1
    raise ValueError(f"boundary label {label!r} out of range for TL({m},{n})")


# ---------------------------------------------------------------------------
# basis
# ---------------------------------------------------------------------------


def _noncrossing_matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for a in _noncrossing_matchings(inside):
            for b in _noncrossing_matchings(outside):
                yield [(first, points[k])] + a + b


@lru_cache(maxsize=None)
def enumerate_basis(m: int, n: int) -> tuple[TLDiagram, ...]:
    """All crossingless matchings of ``TL(m, n)``, sorted by pairing.

    The count is the Catalan number ``C_{(m+n)/2}``.
    """
    if m < 0 or n < 0 or (m + n) % 2:
        raise ValueError(f"TL({m},{n}) has no diagrams: m+n must be even and nonnegative")
    # walk the boundary in cyclic order and translate back to point indices
    cyc_to_index = list(range(m)) + [2 * m + n - 1 - c for c in range(m, m + n)]
    out = []
    for matching in _noncrossing_matchings(tuple(range(m + n))):
        partner = [0] * (m + n)
        for a, b in matching:
            i, j = cyc_to_index[a], cyc_to_index[b]
            partner[i], partner[j] = j, i
        out.append(TLDiagram(m, n, partner, check=False))
    return tuple(sorted(out))


def identity(k: int) -> TLDiagram:
    """``Id_k``: every ``Lj`` joined to ``Rj``."""
    if k < 0:
        raise ValueError("strand count must be nonnegative")
    return TLDiagram(k, k, [k + j for j in range(k)] + list(range(k)), check=False)


def generator_e(k: int, i: int) -> TLDiagram:
    """``e_i`` in ``TL_k``: caps ``Li-Li+1`` and ``Ri-Ri+1``, other strands straight."""
    if not 1 <= i <= k - 1:
        raise ValueError(f"generator index e{i} out of range for TL_{k}")
    partner = [k + j for j in range(k)] + list(range(k))
    a, b = i - 1, i
    partner[a], partner[b] = b, a
    partner[k + a], partner[k + b] = k + b, k + a
    return TLDiagram(k, k, partner, check=False)


# ---------------------------------------------------------------------------
# diagram-level operations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _compose_diagrams(x: TLDiagram, y: TLDiagram) -> tuple[TLDiagram, int]:
    """Glue ``x``'s right side to ``y``'s left side; return (diagram, loops)."""
    m, n, p = x.m, x.n, y.n
    px, py = x.partner, y.partner
    # outer points: x's left side -> 0..m-1, y's right side -> m..m+p-1
    out = [-1] * (m + p)
    seen_mid = [False] * n

    def walk_from_x(i: int) -> int:
        # arrived at x-point i travelling into x
        while True:
            j = px[i]
            if j < m:
                return j
            mid = j - m
            seen_mid[mid] = True
            k = py[mid]
            if k >= n:
                return m + (k - n)
            seen_mid[k] = True
            i = m + k

    def walk_from_y(i: int) -> int:
        while True:
            j = py[i]
            if j >= n:
                return m + (j - n)
            seen_mid[j] = True
            k = px[m + j]
            if k < m:
                return k
            seen_mid[k - m] = True
            i = k - m

    for i in range(m):
        if out[i] == -1:
            j = walk_from_x(i)
            out[i], out[j] = j, i
    for r in range(p):
        if out[m + r] == -1:
            j = walk_from_y(n + r)
            out[m + r], out[j] = j, m + r
    loops = 0
    for s in range(n):
        if seen_mid[s]:
            continue
        loops += 1
        cur = s
        while not seen_mid[cur]:
            seen_mid[cur] = True
            nxt = py[cur]  # stays in the middle, otherwise s was seen
            seen_mid[nxt] = True
            cur = px[m + nxt] - m
    return TLDiagram(m, p, out, check=False), loops


def _tensor_diagrams(x: TLDiagram, y: TLDiagram) -> TLDiagram:
    m, n = x.m + y.m, x.n + y.n

    def mx(i: int) -> int:
        return i if i < x.m else m + (i - x.m)

    def my(i: int) -> int:
        return x.m + i if i < y.m else m + x.n + (i - y.m)

    partner = [0] * (m + n)
    for i, j in enumerate(x.partner):
        partner[mx(i)] = mx(j)
    for i, j in enumerate(y.partner):
        partner[my(i)] = my(j)
    return TLDiagram(m, n, partner, check=False)


def _transpose_diagram(d: TLDiagram) -> TLDiagram:
    m, n = d.m, d.n

    def sw(i: int) -> int:
        return n + i if i < m else i - m

    partner = [0] * (m + n)
    for i, j in enumerate(d.partner):
        partner[sw(i)] = sw(j)
    return TLDiagram(n, m, partner, check=False)


def _flip_diagram(d: TLDiagram) -> TLDiagram:
    m, n = d.m, d.n

    def fl(i: int) -> int:
        return m - 1 - i if i < m else m + (n - 1 - (i - m))

    partner = [0] * (m + n)
    for i, j in enumerate(d.partner):
        partner[fl(i)] = fl(j)
    return TLDiagram(m, n, partner, check=False)


def through_structure(d: TLDiagram) -> tuple[int, TLDiagram, TLDiagram]:
    """Factor ``d`` through its bundle of through strands.

    Returns ``(t, front, back)`` with ``front`` in ``TL(m, t)`` carrying the
    left caps of ``d`` and ``back`` in ``TL(t, n)`` carrying the right caps,
    such that ``compose(front, back) == d`` without closed loops.
    """
    if isinstance(d, TLElement):
        d = d.single_diagram()
    m, n, p = d.m, d.n, d.partner
    lefts = [i for i in range(m) if p[i] >= m]
    rights = [p[i] for i in lefts]
    t = len(lefts)
    fp = [0] * (m + t)
    for i in range(m):
        if p[i] < m:
            fp[i] = p[i]
    for s, i in enumerate(lefts):
        fp[i], fp[m + s] = m + s, i
    bp = [0] * (t + n)
    for j in range(m, m + n):
        if p[j] >= m:
            bp[t + (j - m)] = t + (p[j] - m)
    for s, j in enumerate(rights):
        bp[s], bp[t + (j - m)] = t + (j - m), s
    return t, TLDiagram(m, t, fp, check=False), TLDiagram(t, n, bp, check=False)


@lru_cache(maxsize=None)
def _words(k: int) -> dict[TLDiagram, tuple[int, ...]]:
    """Lexicographically least reduced word for every diagram of ``TL_k``."""
    start = identity(k)
    found: dict[TLDiagram, tuple[int, ...]] = {start: ()}
    layer = [start]
    gens = [generator_e(k, i) for i in range(1, k)]
    while layer:
        nxt = []
        for d in layer:  # layer is in lexicographic word order
            w = found[d]
            for i, g in enumerate(gens, start=1):
                e, loops = _compose_diagrams(d, g)
                if loops == 0 and e not in found:
                    found[e] = w + (i,)
                    nxt.append(e)
        layer = nxt
    return found


def reduced_word(d: TLDiagram) -> tuple[int, ...]:
    """Generator indices of the least reduced word spelling ``d`` in ``TL_k``."""
    if d.m != d.n:
        raise ValueError("reduced words exist only for square diagrams")
    return _words(d.m)[d]


def display_key(d: TLDiagram):
    """Sort key used for printing: graded by word length, then word."""
    if d.m == d.n:
        w = reduced_word(d)
        return (0, len(w), w)
    return (1, 0, d.partner)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


class TLElement:
    """A ``LaurentPoly``-combination of diagrams of one ``TL(m, n)``.

    ``x * y`` composes two elements, ``c * x`` scales by a Laurent
    polynomial or integer, and ``+``/``-`` act termwise.
    """

    __slots__ = ("m", "n", "_terms", "_hash")

    def __init__(self, m: int, n: int, terms: Mapping[TLDiagram, LaurentPoly] | None = None):
        self.m, self.n = m, n
        clean: dict[TLDiagram, LaurentPoly] = {}
        for d, c in (terms or {}).items():
            if (d.m, d.n) != (m, n):
                raise ValueError(f"diagram of TL({d.m},{d.n}) in an element of TL({m},{n})")
            c = LaurentPoly.coerce(c)
            if c:
                clean[d] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def of(cls, d: TLDiagram, coeff=ONE) -> TLElement:
        return cls(d.m, d.n, {d: LaurentPoly.coerce(coeff)})

    @classmethod
    def zero(cls, m: int, n: int) -> TLElement:
        return cls(m, n)

    @classmethod
    def _raw(cls, m: int, n: int, terms: dict) -> TLElement:
        out = cls.__new__(cls)
        out.m, out.n, out._terms, out._hash = m, n, terms, None
        return out

    # inspection --------------------------------------------------------
    @property
    def terms(self) -> dict[TLDiagram, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: display_key(kv[0]))

    def coeff(self, d: TLDiagram) -> LaurentPoly:
        return self._terms.get(d, ZERO)

    def diagrams(self) -> list[TLDiagram]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def single_diagram(self) -> TLDiagram:
        if len(self._terms) != 1:
            raise ValueError("element is not a single diagram")
        (d, c), = self._terms.items()
        if c != ONE:
            raise ValueError("element is not a bare diagram")
        return d

    # arithmetic --------------------------------------------------------
    def _check_shape(self, other: TLElement) -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError(f"cannot add TL({self.m},{self.n}) and TL({other.m},{other.n})")

    def __add__(self, other: TLElement) -> TLElement:
        if not isinstance(other, TLElement):
            return NotImplemented
        self._check_shape(other)
        t = dict(self._terms)
        for d, c in other._terms.items():
            s = t.get(d, ZERO) + c
            if s:
                t[d] = s
            else:
                t.pop(d, None)
        return TLElement._raw(self.m, self.n, t)

    def __neg__(self) -> TLElement:
        return TLElement._raw(self.m, self.n, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> TLElement:
        c = LaurentPoly.coerce(c)
        if not c:
            return TLElement.zero(self.m, self.n)
        return TLElement._raw(self.m, self.n, {d: v * c for d, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return compose(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def map_coeffs(self, f) -> TLElement:
        return TLElement(self.m, self.n, {d: f(c) for d, c in self._terms.items()})

    # comparison --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .expr import print_element

        return f"TLElement({print_element(self)!r})"

    def __str__(self) -> str:
        from .expr import print_element

        return print_element(self)


def _as_element(x) -> TLElement:
    if isinstance(x, TLDiagram):
        return TLElement.of(x)
    if isinstance(x, TLElement):
        return x
    raise TypeError(f"expected a TL diagram or element, got {type(x).__name__}")


_delta_powers = [ONE]


def _delta_pow(n: int) -> LaurentPoly:
    while len(_delta_powers) <= n:
        _delta_powers.append(_delta_powers[-1] * DELTA)
    return _delta_powers[n]


def compose(x, y) -> TLElement:
    """Bilinear composition ``x`` then ``y`` (``x``'s right side meets ``y``'s left)."""
    x, y = _as_element(x), _as_element(y)
    if x.n != y.m:
        raise ValueError(f"cannot compose TL({x.m},{x.n}) with TL({y.m},{y.n})")
    t: dict[TLDiagram, LaurentPoly] = {}
    for d1, c1 in x._terms.items():
        for d2, c2 in y._terms.items():
            d, loops = _compose_diagrams(d1, d2)
            c = c1 * c2
            if loops:
                c = c * _delta_pow(loops)
            t[d] = t.get(d, ZERO) + c
    return TLElement(x.m, y.n, t)


def tensor(x, y) -> TLElement:
    """Stack ``x`` above ``y``."""
    x, y = _as_element(x), _as_element(y)
    t: dict[TLDiagram, LaurentPoly] = {}
    for d1, c1 in x._terms.items():
        for d2, c2 in y._terms.items():
            d = _tensor_diagrams(d1, d2)
            t[d] = t.get(d, ZERO) + c1 * c2
    return TLElement(x.m + y.m, x.n + y.n, t)


def mirror_bar(x) -> TLElement:
    """Mirror image: reflect left/right and conjugate ``A -> A^-1``.

    Anti-multiplicative: ``mirror_bar(x * y) == mirror_bar(y) * mirror_bar(x)``.
    """
    x = _as_element(x)
    return TLElement._raw(x.n, x.m, {_transpose_diagram(d): c.conj() for d, c in x._terms.items()})


def flip_sigma(x) -> TLElement:
    """Top/bottom reflection; sends ``e_i`` to ``e_{k-i}``, coefficients fixed."""
    x = _as_element(x)
    return TLElement._raw(x.m, x.n, {_flip_diagram(d): c for d, c in x._terms.items()})


def transpose(x) -> TLElement:
    """Left/right reflection without conjugating coefficients."""
    x = _as_element(x)
    return TLElement._raw(x.n, x.m, {_transpose_diagram(d): c for d, c in x._terms.items()})


def brute_force_matchings(m: int, n: int) -> set[TLDiagram]:
    """Every perfect matching of ``m + n`` points filtered by the nesting test.

    Deliberately naive; used as an independent count of ``TL(m, n)``.
    """
    size = m + n
    out: set[TLDiagram] = set()

    def rec(partner: list[int]) -> None:
        try:
            i = partner.index(-1)
        except ValueError:
            try:
                out.add(TLDiagram(m, n, partner))
            except ValueError:
                pass
            return
        for j in range(i + 1, size):
            if partner[j] == -1:
                partner[i], partner[j] = j, i
                rec(partner)
                partner[i] = partner[j] = -1

    if size % 2 == 0:
        rec([-1] * size)
    return out


def word_element(k: int, word: Iterable[int]) -> TLElement:
    """Product ``e_{w1} e_{w2} ...`` in ``TL_k`` (identity for the empty word)."""
    out = TLElement.of(identity(k))
    for i in word:
        out = compose(out, generator_e(k, i))
    return out

