"""Exact coefficients: Laurent polynomials in ``A`` and their fraction field.

`LaurentPoly` models ``Z[A, A^-1]`` as a sparse map ``exponent -> int``.
`RationalFn` models ``Q(A)`` and is kept in a canonical reduced form so that
equality and the "is this actually a Laurent polynomial" question are plain
syntactic checks.

Internally the gcd and exact-division routines work on dense integer
coefficient lists (lowest degree first) of ordinary polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "A",
    "ONE",
    "ZERO",
    "DELTA",
    "principal_membership",
    "poly_gcd",
]

Scalar = Union[int, "LaurentPoly"]


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _content(p: list[int]) -> int:
    c = 0
    for a in p:
        c = _igcd(c, a)
        if c == 1:
            break
    return c


def _primitive(p: list[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    c = _content(p)
    if p[-1] < 0:
        c = -c
    if c == 1:
        return p
    return [a // c for a in p]


def _pmul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _exact_div(p: list[int], q: list[int]) -> list[int] | None:
    """Return ``p / q`` in ``Z[A]`` if the division is exact, else ``None``."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return []
    dq = len(q) - 1
    dp = len(p) - 1
    if dp < dq:
        return None
    r = list(p)
    lc = q[-1]
    quot = [0] * (dp - dq + 1)
    for i in range(dp - dq, -1, -1):
        a = r[i + dq]
        if a == 0:
            continue
        c, rem = divmod(a, lc)
        if rem:
            return None
        quot[i] = c
        for j, b in enumerate(q):
            r[i + j] -= c * b
    if any(r[:dq]):
        return None
    return quot


def _prem(p: list[int], q: list[int]) -> list[int]:
    """Pseudo-remainder of ``p`` by ``q``."""
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    while r and len(r) - 1 >= dq:
        a = r[-1]
        shift = len(r) - 1 - dq
        r = [lc * x for x in r]
        for j, b in enumerate(q):
            r[shift + j] -= a * b
        _trim(r)
    return r


def poly_gcd(p: list[int], q: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (positive leading coefficient).

    Uses the primitive polynomial remainder sequence, so intermediate
    coefficients stay bounded by the inputs' content-free growth.
    """
    if not p:
        return _primitive(list(q)) if q else []
    if not q:
        return _primitive(list(p))
    if len(p) < len(q):
        p, q = q, p
    if len(q) == 1:
        return [1]
    p = _primitive(list(p))
    q = _primitive(list(q))
    # common case in skein computations: one factor divides the other
    if _exact_div(p, q) is not None:
        return q
    while True:
        r = _prem(p, q)
        if not r:
            return q
        if len(r) == 1:
            return [1]
        p, q = q, _primitive(r)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Element of ``Z[A, A^-1]`` stored as ``{exponent: coefficient}``.

    Instances are immutable and hashable. Zero coefficients are never stored;
    the zero polynomial has no terms.

    >>> (A**2 + A**-2) * (A**2 - A**-2)
    LaurentPoly('A^4 - A^-4')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        clean: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                if c:
                    clean[int(e)] = clean.get(int(e), 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    # construction --------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")

    @classmethod
    def _from_dense(cls, shift: int, coeffs: list[int]) -> LaurentPoly:
        out = cls()
        out._terms = {shift + i: c for i, c in enumerate(coeffs) if c}
        return out

    def _to_dense(self) -> tuple[int, list[int]]:
        """``(v, p)`` with ``self = A^v * p`` and ``p(0) != 0``."""
        if not self._terms:
            return 0, []
        v = min(self._terms)
        d = max(self._terms)
        p = [0] * (d - v + 1)
        for e, c in self._terms.items():
            p[e - v] = c
        return v, p

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for ``±A^n``, the units of ``Z[A^±1]``."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, RationalFn):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        t = dict(self._terms)
        for e, c in other._terms.items():
            t[e] = t.get(e, 0) + c
        return LaurentPoly(t)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        out = LaurentPoly()
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, RationalFn):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            out = LaurentPoly()
            out._terms = {e: c * other for e, c in self._terms.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        t: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly(t)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have negative powers in Z[A^±1]")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError(f"{self} is not invertible in Z[A^±1]")
            return LaurentPoly({e * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> LaurentPoly:
        """Multiply by ``A^n``."""
        out = LaurentPoly()
        out._terms = {e + n: c for e, c in self._terms.items()}
        return out

    def conj(self) -> LaurentPoly:
        """Bar involution ``A -> A^-1``."""
        out = LaurentPoly()
        out._terms = {-e: c for e, c in self._terms.items()}
        return out

    def __call__(self, a) -> Fraction:
        """Evaluate at a nonzero rational value of ``A``."""
        a = Fraction(a)
        return sum((c * a**e for e, c in self._terms.items()), Fraction(0))

    def divide(self, g: LaurentPoly) -> LaurentPoly | None:
        """Exact quotient ``self / g`` in ``Z[A^±1]``, or ``None``."""
        g = LaurentPoly.coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        v1, p = self._to_dense()
        v2, q = g._to_dense()
        quot = _exact_div(p, q)
        if quot is None:
            return None
        return LaurentPoly._from_dense(v1 - v2, quot)

    # comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if isinstance(other, RationalFn):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # printing -----------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        items = sorted(self._terms.items(), reverse=True)
        # decreasing exponents, rotated to open on the first positive term
        for i, (_, c) in enumerate(items):
            if c > 0:
                items = items[i:] + items[:i]
                break
        out = []
        for i, (e, c) in enumerate(items):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "A" if e == 1 else f"A^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if i == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
A = LaurentPoly.monomial(1)
#: value of a contractible loop, ``-A^2 - A^-2``
DELTA = LaurentPoly({2: -1, -2: -1})


def principal_membership(x: Scalar, g: Scalar) -> LaurentPoly | None:
    """Decide whether ``x`` lies in the principal ideal ``g * Z[A^±1]``.

    Returns the quotient ``q`` with ``x == q * g`` or ``None`` when no such
    Laurent polynomial exists. Raises ``ZeroDivisionError`` for ``g == 0``.

    >>> principal_membership(A**8 - 1, A**4 - 1)
    LaurentPoly('A^4 + 1')
    >>> principal_membership(A**4 - 1, A**8 - 1) is None
    True
    """
    return LaurentPoly.coerce(x).divide(LaurentPoly.coerce(g))


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFn:
    """Element of ``Q(A)`` in canonical form ``A^v * p / q``.

    Canonical form: ``p`` and ``q`` are integer polynomials with nonzero
    constant terms, coprime over ``Q[A]``, with no common integer content,
    and ``q`` has a positive leading coefficient. The numerator is stored as
    the Laurent polynomial ``A^v * p``. A value is a Laurent polynomial
    exactly when ``q == 1``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Scalar, den: Scalar = 1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._hash = None
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        v1, p = num._to_dense()
        v2, q = den._to_dense()
        if len(q) > 1 and len(p) > 1:
            g = poly_gcd(p, q)
            if len(g) > 1:
                p = _exact_div(p, g)
                q = _exact_div(q, g)
        if q[-1] < 0:
            p = [-a for a in p]
            q = [-a for a in q]
        c = _igcd(_content(p), _content(q))
        if c != 1:
            p = [a // c for a in p]
            q = [a // c for a in q]
        self.num = LaurentPoly._from_dense(v1 - v2, p)
        self.den = LaurentPoly._from_dense(0, q)

    @classmethod
    def coerce(cls, x) -> RationalFn:
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, Fraction):
            return cls(x.numerator, x.denominator)
        return cls(x)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RationalFn:
        out = cls.__new__(cls)
        out.num, out.den, out._hash = num, den, None
        return out

    # inspection ---------------------------------------------------------
    @property
    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> RationalFn:
        other = RationalFn.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            if self.den == ONE:
                return RationalFn._raw(self.num + other.num, ONE) if self.num + other.num else RATIONAL_ZERO
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFn:
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other) -> RationalFn:
        return self + (-RationalFn.coerce(other))

    def __rsub__(self, other) -> RationalFn:
        return RationalFn.coerce(other) - self

    def __mul__(self, other) -> RationalFn:
        other = RationalFn.coerce(other)
        if self.is_zero() or other.is_zero():
            return RATIONAL_ZERO
        if self.den == ONE and other.den == ONE:
            return RationalFn._raw(self.num * other.num, ONE)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFn:
        other = RationalFn.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(A)")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFn:
        return RationalFn.coerce(other) / self

    def conj(self) -> RationalFn:
        return RationalFn(self.num.conj(), self.den.conj())

    def __call__(self, a) -> Fraction:
        return self.num(a) / self.den(a)

    # comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly, Fraction)):
            other = RationalFn.coerce(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        n = str(self.num)
        if len(self.num) > 1:
            n = f"({n})"
        d = str(self.den)
        if len(self.den) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        return f"RationalFn({str(self)!r})"


RATIONAL_ZERO = RationalFn._raw(ZERO, ONE)
RATIONAL_ONE = RationalFn._raw(ONE, ONE)
