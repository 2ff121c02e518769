"""Dense univariate polynomials with integer coefficients."""

from __future__ import annotations

import json
import math
import re
import threading
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "IntPoly",
    "X",
    "ONE",
    "ZERO",
    "cyclotomic",
    "interpolate",
    "reciprocal_check",
    "parse_poly",
]


class IntPoly:
    """Polynomial in one variable over the integers.

    Coefficients are stored in ascending degree order with no trailing
    zeros; the zero polynomial has an empty coefficient tuple and degree
    ``-inf``.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide by the (positive) content; sign of the leading term kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(c // g for c in self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(c * a for a in self.coeffs)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def substitute_square(self) -> "IntPoly":
        """Return p(x**2)."""
        out = [0] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return IntPoly(out)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod_exact_lead(self, d: "IntPoly"):
        """Long division when every step divides exactly over Z.

        Returns ``(quotient, remainder)`` or ``None`` when some leading
        coefficient step is not an integer division.
        """
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        dc = d.coeffs
        dd = len(dc) - 1
        lc = dc[-1]
        if len(r) - 1 < dd:
            return ZERO, self
        q = [0] * (len(r) - dd)
        for k in range(len(r) - 1 - dd, -1, -1):
            top = r[k + dd]
            if top == 0:
                continue
            c, rem = divmod(top, lc)
            if rem:
                return None
            q[k] = c
            for j, dj in enumerate(dc):
                r[k + j] -= c * dj
        return IntPoly(q), IntPoly(r)

    def divide_exact(self, d: "IntPoly"):
        """Return u with self == d*u over Z, or None if no such u exists."""
        res = self.divmod_exact_lead(d)
        if res is None:
            return None
        q, r = res
        return q if r.is_zero() else None

    # -- evaluation --------------------------------------------------------

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval(self, t):
        return self(t)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- text / JSON --------------------------------------------------------

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var: str = "x") -> str:
        """Descending-degree form, e.g. ``x^3+x^2-2*x+1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> "IntPoly":
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValueError(f"coefficient {c!r} is not an integer")
        return cls(coeffs)


def _coerce(value):
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly([value])
    return NotImplemented


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])


# -- cyclotomic polynomials -------------------------------------------------

_CYCLO_CACHE: dict[int, IntPoly] = {}
_CYCLO_LOCK = threading.Lock()


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, memoized process-wide."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    cached = _CYCLO_CACHE.get(n)
    if cached is not None:
        return cached
    num = IntPoly.monomial(n) - ONE
    for d in _divisors(n):
        if d < n:
            num = num.divide_exact(cyclotomic(d))
    with _CYCLO_LOCK:
        return _CYCLO_CACHE.setdefault(n, num)


# -- interpolation -----------------------------------------------------------


def interpolate(points: Sequence[tuple[int, int]], degree_bound: int) -> IntPoly:
    """Exact Newton interpolation through integer points.

    The first ``degree_bound + 1`` points determine the polynomial; any
    further points are checked against it.
    """
    m = degree_bound + 1
    if len(points) >= m and all(points[i][0] == i for i in range(m)):
        if len({a for a, _ in points}) != len(points):
            raise ValueError("interpolation abscissae must be pairwise distinct")
        poly = _interpolate_consecutive([int(b) for _, b in points[:m]])
        for a, b in points[m:]:
            if poly(a) != b:
                raise ValueError("points are not on a polynomial of the given degree bound")
        return poly
    pts = [(Fraction(a), Fraction(b)) for a, b in points]
    xs = [a for a, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be pairwise distinct")
    m = degree_bound + 1
    if len(pts) < m:
        raise ValueError(f"need at least {m} points, got {len(pts)}")
    base = pts[:m]
    xs = [a for a, _ in base]
    dd = [b for _, b in base]
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    # Horner-style expansion of the Newton form into monomial coefficients
    coeffs = [Fraction(0)] * m
    coeffs[0] = dd[m - 1]
    size = 1
    for i in range(m - 2, -1, -1):
        new = [Fraction(0)] * (size + 1)
        for k in range(size):
            new[k + 1] += coeffs[k]
            new[k] -= xs[i] * coeffs[k]
        new[0] += dd[i]
        coeffs[: size + 1] = new
        size += 1
    out = []
    for c in coeffs[:size]:
        if c.denominator != 1:
            raise ArithmeticError(f"interpolant has non-integer coefficient {c}")
        out.append(int(c))
    poly = IntPoly(out)
    for a, b in pts[m:]:
        if poly(a) != b:
            raise ValueError("points are not on a polynomial of the given degree bound")
    return poly


def _interpolate_consecutive(values: list[int]) -> IntPoly:
    """Interpolate values at 0, 1, ..., d in integers via forward differences.

    p(x) = sum_k diff_k * x(x-1)...(x-k+1) / k!, scaled by d! until the end.
    """
    d = len(values) - 1
    diffs, row = [], list(values)
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    total = [0] * (d + 1)
    falling = [1]  # coefficients of x(x-1)...(x-k+1)
    scale = math.factorial(d)
    for k, delta in enumerate(diffs):
        if delta:
            f = delta * (scale // math.factorial(k))
            for i, c in enumerate(falling):
                total[i] += f * c
        nxt = [0] * (len(falling) + 1)
        for i, c in enumerate(falling):
            nxt[i + 1] += c
            nxt[i] -= k * c
        falling = nxt
    out = []
    for c in total:
        q, r = divmod(c, scale)
        if r:
            raise ArithmeticError(f"interpolant has non-integer coefficient {Fraction(c, scale)}")
        out.append(q)
    return IntPoly(out)


def reciprocal_check(p: IntPoly, n: int) -> bool:
    """True iff p(x) == x**n * p(1/x)."""
    if p.degree > n:
        raise ValueError(f"degree {p.degree} exceeds {n}")
    return all(p.coeff(i) == p.coeff(n - i) for i in range(n + 1))


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\*\*|[-+*^()]))")


class _Parser:
    def __init__(self, text: str, var: str):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"unexpected character at column {pos + 1}: {text[pos:]!r}")
            num, name, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                if name not in (var, "x", "y"):
                    raise ValueError(f"unknown variable {name!r}")
                self.tokens.append(("var", name))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> IntPoly:
        if not self.tokens:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input near token {self.i + 1}")
        return p

    def expr(self) -> IntPoly:
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term().scale(sign)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> IntPoly:
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> IntPoly:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** e
        return base

    def atom(self) -> IntPoly:
        kind, val = self.take()
        if kind == "num":
            return IntPoly([val])
        if kind == "var":
            return X
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return inner
        if kind == "op" and val == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {val!r}")


def parse_poly(text: str, var: str = "x") -> IntPoly:
    """Parse ``"x^2-2*x+1"``-style text or a JSON coefficient list ``[1,-2,1]``.

    Products and powers of parenthesized factors are accepted, e.g.
    ``"(x-1)^4*(x+1)^4"``.
    """
    s = text.strip()
    if s.startswith("["):
        data = json.loads(s)
        if not isinstance(data, list):
            raise ValueError("coefficient list must be a JSON array")
        return IntPoly.from_list(data)
    return _Parser(s, var).parse()
