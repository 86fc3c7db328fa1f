"""
Exact sparse polynomials in ``x_1..x_N, y_1..y_n`` with rational coefficients.

A polynomial is a dict from exponent tuples (``N`` x-slots followed by ``n``
y-slots) to nonzero coefficients.  Coefficients are ``int`` whenever they
are integral and :class:`fractions.Fraction` otherwise, so the common
integral case never pays for rational arithmetic.

>>> R = PolyRing(3, 1)
>>> p = R.parse("-2(x1+x2)(x2+x3)")
>>> divided_difference(p, 1)
2*x1 + 2*x2
>>> divided_difference(p, 2)
-2*x2 - 2*x3
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence, Union

if TYPE_CHECKING:  # pragma: no cover
    from .combinatorics import Permutation, SymmetricPairConfig

__all__ = [
    "PolyRing", "Polynomial", "LinearWeight", "DivisionError",
    "add", "multiply", "scale", "swap_x", "divided_difference",
    "substitute_x", "restrict_at_fixed_point", "is_symmetric_in", "equals",
]

Coeff = Union[int, Fraction]
Exp = tuple[int, ...]


class DivisionError(ArithmeticError):
    """An exact division left a nonzero remainder."""


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


@dataclass(frozen=True)
class LinearWeight:
    """An integer linear form ``sum c_k Y_k`` on the small torus."""

    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> LinearWeight:
        return cls((0,) * n)

    @classmethod
    def basis(cls, k: int, n: int, c: int = 1) -> LinearWeight:
        v = [0] * n
        v[k - 1] = c
        return cls(tuple(v))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: LinearWeight) -> LinearWeight:
        return LinearWeight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: LinearWeight) -> LinearWeight:
        return LinearWeight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> LinearWeight:
        return LinearWeight(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> LinearWeight:
        return LinearWeight(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def as_polynomial(self, ring: PolyRing) -> Polynomial:
        return sum((ring.y(k) * c for k, c in enumerate(self.coeffs, 1) if c), ring.zero)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs, 1):
            if not c:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, f"{mag}Y{k}"))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f"{s}{t}" for s, t in parts[1:])


@dataclass(frozen=True)
class PolyRing:
    """The ring ``Q[x_1..x_nx, y_1..y_ny]``."""

    nx: int
    ny: int

    @property
    def nvars(self) -> int:
        return self.nx + self.ny

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = _norm(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def _var(self, slot: int) -> Polynomial:
        e = [0] * self.nvars
        e[slot] = 1
        return Polynomial(self, {tuple(e): 1})

    def x(self, i: int) -> Polynomial:
        if not 1 <= i <= self.nx:
            raise IndexError(f"x{i} not in ring with {self.nx} x-variables")
        return self._var(i - 1)

    def y(self, i: int) -> Polynomial:
        if not 1 <= i <= self.ny:
            raise IndexError(f"y{i} not in ring with {self.ny} y-variables")
        return self._var(self.nx + i - 1)

    def from_terms(self, terms: Mapping[Sequence[int], Coeff]) -> Polynomial:
        out: dict[Exp, Coeff] = {}
        for e, c in terms.items():
            e = tuple(int(a) for a in e)
            if len(e) != self.nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e}")
            c = _norm(out.get(e, 0) + _norm(c))
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        return Polynomial(self, out)

    def parse(self, text: str) -> Polynomial:
        return _Parser(self, text).parse()

    def var_name(self, slot: int) -> str:
        return f"x{slot + 1}" if slot < self.nx else f"y{slot - self.nx + 1}"


def _as_poly(ring: PolyRing, other) -> Polynomial:
    if isinstance(other, Polynomial):
        if other.ring != ring:
            raise ValueError(f"ambient mismatch: {ring} vs {other.ring}")
        return other
    if isinstance(other, (int, Fraction)):
        return ring.const(other)
    return NotImplemented


def _term_key(item):
    e = item[0]
    return (sum(e), e)


class Polynomial:
    """Immutable sparse polynomial.  Use :class:`PolyRing` to build one."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict[Exp, Coeff]):
        self.ring = ring
        self._terms = terms
        self._hash = None

    # -- inspection -------------------------------------------------------
    def terms(self) -> list[tuple[Exp, Coeff]]:
        """Terms in canonical graded-lex order (largest first)."""
        return sorted(self._terms.items(), key=_term_key, reverse=True)

    def as_dict(self) -> dict[Exp, Coeff]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exp, Coeff]]:
        return iter(self.terms())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def coefficients(self) -> list[Coeff]:
        return [c for _, c in self.terms()]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def content(self) -> Coeff:
        """Positive gcd of the coefficients (rational when needed)."""
        if not self._terms:
            return 0
        cs = [Fraction(c) for c in self._terms.values()]
        num = reduce(math.gcd, (c.numerator for c in cs))
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in cs))
        return _norm(Fraction(num, den))

    def x_degree(self, i: int) -> int:
        return max((e[i - 1] for e in self._terms), default=-1)

    def uses_y(self) -> bool:
        nx = self.ring.nx
        return any(any(e[nx:]) for e in self._terms)

    def uses_x(self) -> bool:
        nx = self.ring.nx
        return any(any(e[:nx]) for e in self._terms)

    def constant_term(self) -> Coeff:
        return self._terms.get((0,) * self.ring.nvars, 0)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> Polynomial:
        other = _as_poly(self.ring, other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        res = dict(big)
        for e, c in small.items():
            s = res.get(e, 0) + c
            if s:
                res[e] = _norm(s)
            else:
                del res[e]
        return Polynomial(self.ring, res)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = _as_poly(self.ring, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            k = _norm(other)
            if not k:
                return self.ring.zero
            return Polynomial(self.ring, {e: _norm(c * k) for e, c in self._terms.items()})
        other = _as_poly(self.ring, other)
        if other is NotImplemented:
            return other
        res: dict[Exp, Coeff] = {}
        add = operator.add
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(map(add, ea, eb))
                res[e] = res.get(e, 0) + ca * cb
        return Polynomial(self.ring, {e: _norm(c) for e, c in res.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, k) -> Polynomial:
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        if not k:
            raise ZeroDivisionError("polynomial divided by zero")
        return self * (Fraction(1) / Fraction(k))

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out, base = self.ring.one, self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- operators specific to this package --------------------------------
    def swap_x(self, i: int) -> Polynomial:
        return swap_x(self, i)

    def divided_difference(self, i: int) -> Polynomial:
        return divided_difference(self, i)

    def mul_var(self, slot: int, k: int = 1) -> Polynomial:
        """Multiply by the ``slot``-th variable raised to ``k`` (0-based slot)."""
        res = {}
        for e, c in self._terms.items():
            l = list(e)
            l[slot] += k
            res[tuple(l)] = c
        return Polynomial(self.ring, res)

    def exact_divide(self, q: Polynomial) -> Polynomial:
        """Multivariate division by ``q``; raises :class:`DivisionError` on remainder."""
        q = _as_poly(self.ring, q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        (lq_e, lq_c), *_ = q.terms()
        rem = self
        quot: dict[Exp, Coeff] = {}
        while rem._terms:
            le, lc = max(rem._terms.items(), key=_term_key)
            shift = tuple(a - b for a, b in zip(le, lq_e))
            if min(shift) < 0:
                raise DivisionError(f"{q} does not divide {self}")
            c = _norm(Fraction(lc) / lq_c)
            quot[shift] = c
            rem = rem - Polynomial(self.ring, {shift: c}) * q
        return Polynomial(self.ring, quot)

    # -- display ----------------------------------------------------------
    def __repr__(self):
        return self.to_str()

    def __str__(self):
        return self.to_str()

    def to_str(self, style: str = "plain") -> str:
        return _format_terms(self.terms(), self.ring, style)

    def to_latex(self) -> str:
        return self.to_str("latex")

    def to_records(self) -> list[dict]:
        """Expanded canonical form as ``{coefficient, exponents}`` records."""
        return [{"coefficient": str(c), "exponents": list(e)} for e, c in self.terms()]


# --------------------------------------------------------------------------
# module-level operations

def add(p: Polynomial, q) -> Polynomial:
    return p + q


def multiply(p: Polynomial, q) -> Polynomial:
    return p * q


def scale(p: Polynomial, k) -> Polynomial:
    return p * k


def equals(p: Polynomial, q) -> bool:
    return p == q


def _check_index(p: Polynomial, i: int):
    if not 1 <= i <= p.ring.nx - 1:
        raise IndexError(f"simple root index {i} out of range 1..{p.ring.nx - 1}")


def swap_x(p: Polynomial, i: int) -> Polynomial:
    """Exchange ``x_i`` and ``x_{i+1}`` in every term."""
    _check_index(p, i)
    a, b = i - 1, i
    res = {}
    for e, c in p._terms.items():
        l = list(e)
        l[a], l[b] = l[b], l[a]
        res[tuple(l)] = c
    return Polynomial(p.ring, res)


def is_symmetric_in(p: Polynomial, i: int) -> bool:
    return swap_x(p, i) == p


def divided_difference(p: Polynomial, i: int) -> Polynomial:
    """``(p - s_i p) / (x_i - x_{i+1})`` computed by synthetic division.

    The numerator is viewed as a polynomial in ``x_i`` over the remaining
    variables and divided by ``x_i - r`` with ``r = x_{i+1}``; a nonzero
    remainder raises :class:`DivisionError`.
    """
    _check_index(p, i)
    num = p - swap_x(p, i)
    if num.is_zero():
        return p.ring.zero
    a, b = i - 1, i
    # coefficient of x_i^k, with x_i stripped from the exponent
    by_power: dict[int, dict[Exp, Coeff]] = {}
    for e, c in num._terms.items():
        k = e[a]
        l = list(e)
        l[a] = 0
        by_power.setdefault(k, {})[tuple(l)] = c
    top = max(by_power)
    ring = p.ring
    quotient: dict[Exp, Coeff] = {}
    carry = Polynomial(ring, {})
    for k in range(top, 0, -1):
        # q_{k-1} = c_k + r * q_k
        qk = Polynomial(ring, by_power.get(k, {})) + carry.mul_var(b)
        for e, c in qk._terms.items():
            l = list(e)
            l[a] = k - 1
            quotient[tuple(l)] = c
        carry = qk
    remainder = Polynomial(ring, by_power.get(0, {})) + carry.mul_var(b)
    if not remainder.is_zero():
        raise DivisionError(f"x{i} - x{i + 1} does not divide {num}; remainder {remainder}")
    return Polynomial(ring, quotient)


def substitute_x(p: Polynomial, images: Sequence[LinearWeight]) -> Polynomial:
    """Replace each ``x_i`` by the linear form ``images[i-1]`` in the y's.

    The result lives in the same ring with every x-exponent zero.
    """
    ring = p.ring
    nx, ny = ring.nx, ring.ny
    if len(images) != nx:
        raise ValueError(f"need {nx} images, got {len(images)}")
    # fast path: every image is 0 or ±Y_k
    simple = []
    for w in images:
        nz = [(k, c) for k, c in enumerate(w.coeffs) if c]
        if len(nz) > 1 or (nz and abs(nz[0][1]) != 1):
            simple = None
            break
        simple.append(nz[0] if nz else None)
    if simple is not None:
        res: dict[Exp, Coeff] = {}
        zero_x = (0,) * nx
        for e, c in p._terms.items():
            ys = list(e[nx:])
            sign = 1
            dead = False
            for i in range(nx):
                d = e[i]
                if not d:
                    continue
                img = simple[i]
                if img is None:
                    dead = True
                    break
                k, s = img
                ys[k] += d
                if s < 0 and d & 1:
                    sign = -sign
            if dead:
                continue
            key = zero_x + tuple(ys)
            res[key] = res.get(key, 0) + sign * c
        return Polynomial(ring, {e: _norm(c) for e, c in res.items() if c})
    # general path: expand powers of the linear forms
    forms = [w.as_polynomial(ring) for w in images]
    cache: dict[tuple[int, int], Polynomial] = {}

    def power(i, d):
        if (i, d) not in cache:
            cache[(i, d)] = forms[i] ** d
        return cache[(i, d)]

    out = ring.zero
    for e, c in p._terms.items():
        term = Polynomial(ring, {(0,) * nx + e[nx:]: c})
        for i in range(nx):
            if e[i]:
                term = term * power(i, e[i])
                if term.is_zero():
                    break
        out = out + term
    return out


def restrict_at_fixed_point(p: Polynomial, w: Permutation,
                            config: SymmetricPairConfig) -> Polynomial:
    """Restriction at the fixed point ``w``: ``x_i -> rho(X_{w(i)})``, ``y_i -> Y_i``."""
    from .localization import restriction_map

    if w.N != p.ring.nx or config.ambient != p.ring.nx or config.rank != p.ring.ny:
        raise ValueError(f"ambient mismatch between {p.ring}, {w} and {config}")
    rho = restriction_map(config)
    return substitute_x(p, [rho.images[w(i) - 1] for i in range(1, w.N + 1)])


# --------------------------------------------------------------------------
# formatting

def _format_coeff(c: Coeff, style: str) -> str:
    if isinstance(c, Fraction):
        if style == "latex":
            return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _format_monomial(e: Exp, ring: PolyRing, style: str) -> str:
    parts = []
    for slot, d in enumerate(e):
        if not d:
            continue
        name = ring.var_name(slot)
        if style == "latex":
            name = f"{name[0]}_{{{name[1:]}}}"
            parts.append(name if d == 1 else f"{name}^{{{d}}}")
        else:
            parts.append(name if d == 1 else f"{name}^{d}")
    joiner = "" if style in ("latex", "compact") else "*"
    return joiner.join(parts)


def _format_terms(terms: list[tuple[Exp, Coeff]], ring: PolyRing, style: str) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(terms):
        mono = _format_monomial(e, ring, style)
        neg = c < 0
        mag = -c if neg else c
        if mono:
            joiner = "" if style in ("latex", "compact") else "*"
            body = mono if mag == 1 else f"{_format_coeff(mag, style)}{joiner}{mono}"
        else:
            body = _format_coeff(mag, style)
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# --------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([xy])_?\{?(\d+)\}?|(\*\*|[-+*^()]))")


class _Parser:
    """Recursive-descent parser; juxtaposition means multiplication."""

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        text = text.replace("−", "-").replace("·", "*").replace("⋅", "*")
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            pos = m.end()
            if m.group(1):
                self.tokens.append(("num", Fraction(m.group(1))))
            elif m.group(2):
                self.tokens.append(("var", (m.group(2), int(m.group(3)))))
            else:
                tok = m.group(4)
                self.tokens.append(("op", "^" if tok == "**" else tok))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.power()
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> Polynomial:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, k = self.take()
            if kind != "num" or Fraction(k).denominator != 1:
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(k)
        return base

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "var":
            name, idx = val
            try:
                return self.ring.x(idx) if name == "x" else self.ring.y(idx)
            except IndexError as exc:
                raise ValueError(str(exc)) from None
        if kind == "op" and val == "(":
            p = self.expr()
            kind, val = self.take()
            if val != ")":
                raise ValueError("unbalanced parentheses")
            return p
        if kind == "op" and val == "-":
            return -self.power()
        raise ValueError(f"unexpected token {val!r}")
