"""Exact dense univariate polynomials over the integers and rationals.

Also provides the polynomial families used throughout the package:
Chebyshev polynomials of both kinds, cyclotomic polynomials, the
polynomials ``psi(n)`` (minimal polynomials of ``2cos(2*pi*k/n)``) and a
factorizer for products of cyclotomic polynomials.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import InexactDivision, NotCyclotomicProduct

Number = Union[int, Fraction]

#: degree of the zero polynomial
NEG_INF = float("-inf")


def _norm_coeff(c) -> Number:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Poly:
    """Immutable polynomial with exact coefficients in ascending degree order.

    Coefficients are Python ints wherever possible; a coefficient that is a
    non-integral rational is kept as a :class:`fractions.Fraction`.  The zero
    polynomial has an empty coefficient tuple and degree ``-inf``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [_norm_coeff(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_c", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c: Number) -> Poly:
        return cls([c])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def lc(self) -> Number:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return self.lc == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    def is_palindromic(self) -> bool:
        return self._c == self._c[::-1]

    def __getitem__(self, k: int) -> Number:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    # ------------------------------------------------------------------
    # ring operations

    @staticmethod
    def _lift(other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self._c])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        d = other._c
        lc = d[-1]
        quo = [0] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(rem) - len(d), -1, -1):
            top = rem[k + len(d) - 1]
            if top == 0:
                continue
            if isinstance(top, int) and isinstance(lc, int) and top % lc == 0:
                t = top // lc
            else:
                t = Fraction(top) / lc
            quo[k] = t
            for i, y in enumerate(d):
                rem[k + i] -= t * y
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    # ------------------------------------------------------------------
    # evaluation and substitution

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or another :class:`Poly`."""
        acc = Poly() if isinstance(x, Poly) else 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def scale_argument(self, k: Number) -> Poly:
        """Return ``p(k*x)``: coefficient ``i`` multiplied by ``k**i``."""
        return Poly([c * k**i for i, c in enumerate(self._c)])

    def shift(self, s: Number) -> Poly:
        """Return ``p(x + s)``."""
        return self(Poly([s, 1]))

    def reflect(self, s: Number) -> Poly:
        """Return ``p(s - x)``."""
        return self(Poly([s, -1]))

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self._c)][1:])

    def content(self) -> int:
        if not self.is_integral():
            raise ValueError("content is defined for integer polynomials only")
        g = 0
        for c in self._c:
            g = math.gcd(g, c)
        return g

    # ------------------------------------------------------------------
    # rendering

    def __repr__(self):
        return f"Poly({list(self._c)!r})"

    def __str__(self):
        return format_poly(self)


X = Poly([0, 1])
ONE = Poly([1])


def format_poly(p: Poly, var: str = "x") -> str:
    """Render descending powers with explicit signs, e.g. ``x^5 - x^3 - x^2 + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_div_exact(num: Poly, den: Poly) -> Poly:
    """Quotient ``num / den``; raises :class:`InexactDivision` on a nonzero remainder."""
    q, r = divmod(num, den)
    if not r.is_zero():
        raise InexactDivision(f"({num}) is not divisible by ({den})")
    return q


def binomial_power(a: Number, b: Number, k: int) -> Poly:
    """``(a + b*x)**k`` expanded."""
    return Poly([math.comb(k, i) * a ** (k - i) * b**i for i in range(k + 1)])


# ----------------------------------------------------------------------
# Chebyshev polynomials


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> Poly:
    """Chebyshev polynomial of the first kind via ``F(n+1) = 2x F(n) - F(n-1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    if n == 1:
        return X
    return 2 * X * chebyshev_T(n - 1) - chebyshev_T(n - 2)


@lru_cache(maxsize=None)
def chebyshev_U(n: int) -> Poly:
    """Chebyshev polynomial of the second kind, seeds ``1`` and ``2x``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    if n == 1:
        return 2 * X
    return 2 * X * chebyshev_U(n - 1) - chebyshev_U(n - 2)


def chebyshev_T_explicit(n: int) -> Poly:
    """First-kind polynomial from its closed sum in powers of ``(1 - x)``.

    Independent of the recurrence; used as a cross-check.
    """
    if n == 0:
        return ONE
    total = Poly()
    for j in range(n + 1):
        c = Fraction(
            n * (-2) ** j * math.factorial(n + j - 1),
            math.factorial(n - j) * math.factorial(2 * j),
        )
        total = total + c * binomial_power(1, -1, j)
    return total


def chebyshev_U_explicit(n: int) -> Poly:
    """Second-kind polynomial from its binomial sum in powers of ``(1 - x)``."""
    total = Poly()
    for j in range(n + 1):
        total = total + (-2) ** j * math.comb(n + j + 1, 2 * j + 1) * binomial_power(1, -1, j)
    return total


# ----------------------------------------------------------------------
# cyclotomic polynomials and relatives


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient is defined for positive integers")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """``Phi_n``, obtained by dividing ``x^n - 1`` by ``Phi_d`` for proper divisors ``d``."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    result = Poly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        result = poly_div_exact(result, cyclotomic(d))
    return result


def _dickson(k: int) -> Poly:
    # x^k + x^-k written as a polynomial in y = x + 1/x
    prev, cur = Poly([2]), X
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, X * cur - prev
    return cur


# Minimal polynomials of 2cos(0) = 2 and 2cos(pi) = -2.  Tests swap these
# entries to exercise the failing path of the verification suites.
PSI_SMALL = {1: Poly([-2, 1]), 2: Poly([2, 1])}


def psi(n: int) -> Poly:
    """Minimal polynomial of ``2cos(2*pi*k/n)`` with ``gcd(k, n) = 1``.

    For ``n >= 3`` this is the unique ``Psi`` with
    ``Phi_n(x) = x^(phi(n)/2) * Psi(x + 1/x)``.  Indices 1 and 2 use the
    conventions ``x - 2`` and ``x + 2``.
    """
    if n < 1:
        raise ValueError("psi index must be positive")
    if n in PSI_SMALL:
        return PSI_SMALL[n]
    return _psi_from_cyclotomic(n)


@lru_cache(maxsize=None)
def _psi_from_cyclotomic(n: int) -> Poly:
    phi = cyclotomic(n)
    half = phi.degree // 2
    out = Poly([phi[half]])
    for j in range(1, half + 1):
        out = out + phi[half + j] * _dickson(j)
    return out


def symmetrized_lift(a: Poly) -> Poly:
    """``x^n * a(x + 1/x)`` for ``a`` of degree ``n``; always palindromic."""
    if a.is_zero():
        return Poly()
    n = a.degree
    sq = Poly([1, 0, 1])
    out = Poly()
    power = ONE
    for k in range(n + 1):
        if a[k]:
            out = out + a[k] * Poly.monomial(n - k) * power
        power = power * sq
    return out


@dataclass(frozen=True)
class CyclotomicFactorization:
    """``prod Phi_d ** m`` stored as sorted ``(d, m)`` pairs."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for d, m in self.factors:
            if d < 1 or m < 1:
                raise ValueError(f"invalid factor pair {(d, m)}")
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @classmethod
    def from_dict(cls, mapping) -> CyclotomicFactorization:
        return cls(tuple((int(d), int(m)) for d, m in mapping.items() if m))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def multiplicity(self, d: int) -> int:
        return self.as_dict().get(d, 0)

    def indices(self) -> list[int]:
        return [d for d, _ in self.factors]

    def expand(self) -> Poly:
        out = ONE
        for d, m in self.factors:
            out = out * cyclotomic(d) ** m
        return out

    @property
    def degree(self) -> int:
        return sum(totient(d) * m for d, m in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " ".join(f"Phi{d}" if m == 1 else f"Phi{d}^{m}" for d, m in self.factors)


def factor_cyclotomic(f: Poly) -> CyclotomicFactorization:
    """Write a monic ``f`` as a product of cyclotomic polynomials by trial division.

    Raises :class:`NotCyclotomicProduct` when ``f`` is not monic or a
    nontrivial cofactor survives every candidate index.
    """
    if f.is_zero() or not f.is_integral() or not f.is_monic():
        raise NotCyclotomicProduct(f"{f} is not a monic integer polynomial")
    rest = f
    found: dict[int, int] = {}
    # phi(d) >= sqrt(d/2), so no index beyond 2*deg^2 can contribute
    bound = 2 * rest.degree**2 + 2
    d = 1
    while rest.degree > 0 and d <= bound:
        if totient(d) <= rest.degree:
            phi_d = cyclotomic(d)
            while rest.degree >= phi_d.degree:
                q, r = divmod(rest, phi_d)
                if not r.is_zero():
                    break
                rest = q
                found[d] = found.get(d, 0) + 1
        d += 1
    if rest != ONE:
        raise NotCyclotomicProduct(f"{f} leaves the non-cyclotomic cofactor {rest}")
    return CyclotomicFactorization.from_dict(found)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(x(?:\^\{?(\d+)\}?)?)?")


def parse_poly(text: str) -> Poly:
    """Parse an expanded polynomial such as ``x^5-x^3-x^2+1`` or ``32x^5 - 40x^3 + 8x``."""
    if re.search(r"[\dx}]\s+[\dx]", text):
        raise ValueError(f"missing operator in {text!r}")
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if pos and not m.group(1):
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        mag = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * mag
        pos = m.end()
    top = max(coeffs)
    return Poly([coeffs.get(k, 0) for k in range(top + 1)])


_PHI = re.compile(r"\\?Phi_?\{?(\d+)\}?(?:\^\{?(\d+)\}?)?")


def parse_factorization(text: str) -> CyclotomicFactorization:
    """Parse ``Phi_1^2 Phi_2 Phi_3`` (LaTeX backslashes and braces allowed)."""
    found: dict[int, int] = {}
    rest = text
    for m in _PHI.finditer(text):
        d, k = int(m.group(1)), int(m.group(2) or 1)
        found[d] = found.get(d, 0) + k
        rest = rest.replace(m.group(0), "", 1)
    if rest.strip():
        raise ValueError(f"cannot parse factorization {text!r}")
    return CyclotomicFactorization.from_dict(found)
