"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(M)-1) reduced
modulo the M-th cyclotomic polynomial Phi_M, so equality is coefficient-wise
and zero testing is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Scalar = Union[int, Fraction]


class OrderMismatchError(ValueError):
    """Raised when two cyclotomic numbers of different orders are combined."""


class InvalidOrderError(ValueError):
    """Raised for a non-positive cyclotomic order."""


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Divide integer polynomials (ascending coefficients), den monic, exactly."""
    num = list(num)
    dn = len(den) - 1
    qn = len(num) - 1 - dn
    quot = [0] * (qn + 1)
    for i in range(qn, -1, -1):
        c = num[i + dn]
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[: dn]):
        raise ArithmeticError("cyclotomic polynomial division not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending, computed by the recursive
    division Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d."""
    if m < 1:
        raise InvalidOrderError(f"order must be positive, got {m}")
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    quot = num
    for d in _divisors(m)[:-1]:
        quot = _poly_div_exact(quot, list(cyclotomic_polynomial(d)))
    return tuple(quot)


@lru_cache(maxsize=None)
def phi_degree(m: int) -> int:
    """Euler totient phi(m) = deg Phi_m."""
    return len(cyclotomic_polynomial(m)) - 1


def _reduce(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    """Reduce an ascending coefficient list modulo Phi_m."""
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, d - 1, -1):
        c = work[i]
        if c:
            for j in range(d + 1):
                work[i - d + j] -= c * phi[j]
    work = work[:d]
    work.extend([Fraction(0)] * (d - len(work)))
    return tuple(work)


class CyclotomicNumber:
    """An element of Q(zeta_M) in canonical reduced form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise InvalidOrderError(f"order must be positive, got {order}")
        coeffs = [Fraction(c) for c in coeffs]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _reduce(coeffs, order))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(order: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(order, [])

    @staticmethod
    def one(order: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(order, [Fraction(1)])

    @staticmethod
    def from_rational(value: Scalar, order: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(order, [Fraction(value)])

    @staticmethod
    def root(order: int, power: int = 1) -> "CyclotomicNumber":
        """zeta_order^power in canonical form."""
        if order < 1:
            raise InvalidOrderError(f"order must be positive, got {order}")
        power %= order
        coeffs = [Fraction(0)] * power + [Fraction(1)]
        return CyclotomicNumber(order, coeffs)

    # -- helpers ------------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"orders {self.order} and {other.order} differ; "
                    "use embed() explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.order)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CyclotomicNumber(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm
        applied to (self, Phi_M) in Q[x]."""
        if self.is_zero:
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational:
            return CyclotomicNumber.from_rational(1 / self.coeffs[0], self.order)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                return CyclotomicNumber(self.order, [c * inv for c in s1])
            q, rem = _frac_poly_divmod(r0, r1)
            s_new = _frac_poly_sub(s0, _frac_poly_mul(q, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, s_new

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def embed(self, factor: int) -> "CyclotomicNumber":
        """Explicit embedding Q(zeta_M) -> Q(zeta_{kM}), zeta_M -> zeta_{kM}^k."""
        if factor < 1:
            raise InvalidOrderError(f"embedding factor must be positive, got {factor}")
        target = self.order * factor
        result = CyclotomicNumber.zero(target)
        for i, c in enumerate(self.coeffs):
            if c:
                result = result + c * CyclotomicNumber.root(target, i * factor)
        return result

    def as_order(self, target: int) -> "CyclotomicNumber":
        """Embed into Q(zeta_target); target must be a multiple of the order."""
        if target % self.order != 0:
            raise OrderMismatchError(
                f"cannot embed order {self.order} into order {target}"
            )
        return self.embed(target // self.order)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.coeffs[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational:
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        if self.is_rational:
            return f"CyclotomicNumber({self.order}, {self.coeffs[0]})"
        terms = [
            f"{c}*z^{i}" if i else f"{c}"
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return f"CyclotomicNumber({self.order}, {' + '.join(terms)})"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [
                f"{c.numerator}/{c.denominator}" for c in self.coeffs
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "CyclotomicNumber":
        order = int(data["order"])
        coeffs = [Fraction(s) for s in data["coeffs"]]
        if len(coeffs) != phi_degree(order):
            raise ValueError(
                f"expected {phi_degree(order)} coefficients for order {order}, "
                f"got {len(coeffs)}"
            )
        return CyclotomicNumber(order, coeffs)


def _frac_poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    dn = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dn:
        return [Fraction(0)], num
    quot = [Fraction(0)] * (len(num) - dn)
    for i in range(len(num) - 1 - dn, -1, -1):
        c = num[i + dn] / lead
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return quot, num[:dn] or [Fraction(0)]


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def zeta(order: int, power: int = 1) -> CyclotomicNumber:
    """Convenience alias for CyclotomicNumber.root."""
    return CyclotomicNumber.root(order, power)


def rational(value: Scalar, order: int = 1) -> CyclotomicNumber:
    """Convenience alias for CyclotomicNumber.from_rational."""
    return CyclotomicNumber.from_rational(value, order)
