"""Exact rational and polynomial quantities for rainbow multiplicity bounds.

Rationals are :class:`fractions.Fraction` (always reduced, denominator > 0).
Polynomials are in the palette size ``r`` with integer coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod

from .errors import DomainError, InvariantViolation

BigRational = Fraction


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 when ``n < 0``, ``k < 0`` or ``k > n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


class UniPoly:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``r**i``; trailing zeros are stripped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def var(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

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
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"


def baseline_proportion(r: int, e: int) -> Fraction:
    """Probability that ``e`` fixed edges are rainbow under a uniform ``r``-coloring."""
    return Fraction(binom(r, e) * factorial(e), r**e)


def expected_random_count(n: int, t: int, r: int) -> Fraction:
    """Expected number of rainbow ``K_t`` in a uniformly random coloring of ``K_n``."""
    if not 2 <= t <= n:
        raise DomainError(f"need 2 <= t <= n, got t={t} n={n}")
    copies = Fraction(binom(n, t) * factorial(t), factorial(t))  # |Aut(K_t)| = t!
    return copies * baseline_proportion(r, comb(t, 2))


def blowup_lower_bound(a: int, b: int, t: int, k: int) -> Fraction:
    """Closed-form lower bound ``a(b^{tk} - b^k)/(b^t - b)`` on rainbow ``K_t`` in ``K_{b^k}``."""
    if b**t == b:
        raise DomainError(f"b^t = b for b={b}, t={t}; bound undefined")
    if k < 0 or a < 0:
        raise DomainError("need k >= 0 and a >= 0")
    return Fraction(a * (b ** (t * k) - b**k), b**t - b)


def criterion_rhs(b: int, t: int, r: int) -> Fraction:
    """Threshold a base count of rainbow ``K_t`` in ``K_b`` must strictly exceed."""
    e = comb(t, 2)
    return Fraction(b * (b ** (t - 1) - 1), factorial(t)) * baseline_proportion(r, e)


def criterion_holds(a: int, b: int, t: int, r: int) -> bool:
    return a > criterion_rhs(b, t, r)


def mrb_lower_bound(a: int, b: int, t: int) -> Fraction:
    """Asymptotic rainbow proportion certified by a base coloring with ``a`` rainbow ``K_t``."""
    if b**t == b:
        raise DomainError(f"b^t = b for b={b}, t={t}")
    return Fraction(a * factorial(t), b**t - b)


def nonrainbow_bound_k4(r: int) -> int:
    if r < 6:
        raise DomainError(f"K_4 bound needs r >= 6, got {r}")
    return r * binom(r // 2, 2)


def nonrainbow_bound_kt(r: int, t: int) -> int:
    if t < 4 or r < comb(t, 2):
        raise DomainError(f"K_t bound needs t >= 4 and r >= C(t,2), got t={t} r={r}")
    return r * binom(r // 2, 2) * binom(r - 4, t - 4)


def _falling4_over_8(t: int) -> int:
    # t!/(8(t-4)!) = t(t-1)(t-2)(t-3)/8; four consecutive integers, so always integral
    num = t * (t - 1) * (t - 2) * (t - 3)
    assert num % 8 == 0
    return num // 8


def rainbow_count_lower_bound(t: int, r: int) -> Fraction:
    """``C(r,t)(1 - r t!/(8(t-4)!(r-1)(r-3)))``; returned unclamped, may be negative."""
    if t < 4 or r < comb(t, 2):
        raise DomainError(f"need t >= 4 and r >= C(t,2), got t={t} r={r}")
    return binom(r, t) * (1 - Fraction(r * factorial(t), 8 * factorial(t - 4) * (r - 1) * (r - 3)))


def complicated_holds(t: int, r: int) -> bool:
    """Whether the relaxed rainbow count of the parallel coloring passes the blow-up criterion."""
    return rainbow_count_lower_bound(t, r) > criterion_rhs(r, t, r)


def semifinal_value(t: int, r: int) -> int:
    """Integer left-hand side of the cleared uncommonness inequality at ``(t, r)``.

    Equals ``semifinal_polynomial(t)(r)``; positive iff :func:`complicated_holds`.
    """
    if t < 4 or r < comb(t, 2):
        raise DomainError(f"need t >= 4 and r >= C(t,2), got t={t} r={r}")
    e = comb(t, 2)
    q = (r - 1) * (r - 3)
    tail = prod(r - l for l in range(t, e))
    return (q - r * _falling4_over_8(t)) * r**e - q * tail * (r**t - r)


def semifinal_holds(t: int, r: int) -> bool:
    return semifinal_value(t, r) > 0


def semifinal_polynomial(t: int) -> UniPoly:
    """Symbolic expansion in ``r`` of :func:`semifinal_value`; no scaling is needed."""
    if t < 4:
        raise DomainError(f"need t >= 4, got {t}")
    e = comb(t, 2)
    x = UniPoly.var()
    q = (x - 1) * (x - 3)
    tail = UniPoly.const(1)
    for l in range(t, e):
        tail = tail * (x - l)
    return (q - _falling4_over_8(t) * x) * x**e - q * tail * (x**t - x)


def leading_gap_coefficient(t: int) -> int:
    """Coefficient of ``r^{e+1}``, after checking the ``r^{e+2}`` term cancels (``e = C(t,2)``)."""
    p = semifinal_polynomial(t)
    e = comb(t, 2)
    if p.coeff(e + 2) != 0 or p.degree > e + 1:
        raise InvariantViolation(f"top coefficient of r^{e + 2} is {p.coeff(e + 2)}, expected 0")
    return p.coeff(e + 1)
