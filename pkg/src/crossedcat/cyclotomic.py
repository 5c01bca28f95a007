"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Values are represented in the power basis 1, z, ..., z^(phi(N)-1) of
Q(zeta_N), with Fraction coefficients, reduced modulo the N-th cyclotomic
polynomial.  The representation is canonical for a fixed N: two values of
the same order are equal iff their coefficient tuples are equal.  Values of
different orders are compared (and combined) after lifting both to the lcm
of the orders.

Nothing here ever rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ZeroDivisionInField(ZeroDivisionError):
    """Raised on inversion of the zero element."""


class SquareRootUnavailable(ArithmeticError):
    """Raised when a requested square root does not lie in the working field."""


def euler_phi(n: int) -> int:
    """Euler's totient of a positive integer."""
    if n < 1:
        raise ValueError(f"euler_phi of non-positive {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials by a monic divisor
    # (coefficient lists, constant term first).
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        out[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                num[k + i] -= coeff * d
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


_CYCLO_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial (constant first).

    Computed by exact division: x^n - 1 = prod over d | n of Phi_d(x).
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial of non-positive {n}")
    cached = _CYCLO_CACHE.get(n)
    if cached is not None:
        return cached
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in _divisors(n):
        if d != n:
            poly = _int_poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    result = tuple(poly)
    assert len(result) == euler_phi(n) + 1 and result[-1] == 1
    _CYCLO_CACHE[n] = result
    return result


def _reduce(coeffs: list[Fraction], order: int) -> tuple[Fraction, ...]:
    # Remainder of a coefficient list modulo Phi_order; returns a tuple of
    # length phi(order), zero-padded.
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    work = list(coeffs)
    for k in range(len(work) - 1, deg - 1, -1):
        top = work[k]
        if top:
            work[k] = _ZERO
            for i in range(deg):
                work[k - deg + i] -= top * phi[i]
    work = work[:deg]
    if len(work) < deg:
        work.extend([_ZERO] * (deg - len(work)))
    return tuple(work)


class CycloNum:
    """An exact element of Q(zeta_N)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        if order < 1:
            raise ValueError(f"bad cyclotomic order {order}")
        self.order = order
        self.coeffs = _reduce([Fraction(c) for c in coeffs], order)

    @classmethod
    def _make(cls, order: int, reduced: tuple[Fraction, ...]) -> "CycloNum":
        # Trusted constructor: reduced must already be canonical for order.
        self = object.__new__(cls)
        self.order = order
        self.coeffs = reduced
        return self

    @classmethod
    def from_rational(cls, q) -> "CycloNum":
        return cls(1, [Fraction(q)])

    def lift(self, order: int) -> "CycloNum":
        """The same value expressed in Q(zeta_order); order must be a multiple."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} into {order}")
        step = order // self.order
        out = [_ZERO] * order
        for k, c in enumerate(self.coeffs):
            if c:
                out[k * step] += c
        return CycloNum(order, out)

    def _paired(self, other) -> tuple["CycloNum", "CycloNum"]:
        if isinstance(other, (int, Fraction)):
            other = CycloNum(1, [Fraction(other)])
        elif not isinstance(other, CycloNum):
            return NotImplemented, NotImplemented
        if self.order == other.order:
            return self, other
        common = self.order * other.order // math.gcd(self.order, other.order)
        return self.lift(common), other.lift(common)

    # -- field operations ------------------------------------------------

    def __add__(self, other):
        a, b = self._paired(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloNum._make(
            a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._make(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._paired(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloNum._make(
            a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._paired(other)
        if a is NotImplemented:
            return NotImplemented
        out = [_ZERO] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return CycloNum._make(a.order, _reduce(out, a.order))

    __rmul__ = __mul__

    def inv(self) -> "CycloNum":
        """Multiplicative inverse; raises ZeroDivisionInField on zero."""
        if self.is_zero():
            raise ZeroDivisionInField("inversion of zero in Q(zeta_N)")
        # Extended Euclid in Q[x] against Phi_N, which is irreducible, so the
        # gcd with any nonzero reduced element is a nonzero constant.
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return CycloNum(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        a, b = self._paired(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        result = CycloNum._make(base.order, _reduce([_ONE], base.order))
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        a, b = self._paired(other)
        if a is NotImplemented:
            return NotImplemented
        return a.coeffs == b.coeffs

    # CycloNum is unhashable on purpose: cheap canonical hashing across
    # orders would need conductor descent on every construction.
    __hash__ = None

    # -- predicates and conversions --------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def multiplicative_order(self, limit: int = 10_000) -> int:
        """Smallest k >= 1 with self^k = 1, or raises if none below limit."""
        power = self
        for k in range(1, limit + 1):
            if power.is_one():
                return k
            power = power * self
        raise ValueError("no multiplicative order found below limit")

    def __repr__(self):
        return f"CycloNum({self.order}, {self!s})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append((c, str(abs(c))))
                continue
            z = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
            mag = abs(c)
            parts.append((c, z if mag == 1 else f"{mag}*{z}"))
        out = []
        for i, (c, text) in enumerate(parts):
            if i == 0:
                out.append(f"-{text}" if c < 0 else text)
            else:
                out.append(f"- {text}" if c < 0 else f"+ {text}")
        return " ".join(out)


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    out = [_ZERO] * max(len(num) - len(den) + 1, 1)
    rem = list(num)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        if k + len(den) - 1 >= len(rem):
            continue
        coeff = rem[k + len(den) - 1] / lead
        out[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                rem[k + i] -= coeff * d
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return out, rem


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return out


def zeta(order: int, k: int = 1) -> CycloNum:
    """The root of unity zeta_order^k, canonically reduced."""
    if order < 1:
        raise ValueError(f"bad cyclotomic order {order}")
    k %= order
    mono = [_ZERO] * (k + 1)
    mono[k] = _ONE
    return CycloNum(order, mono)


def one(order: int = 1) -> CycloNum:
    return CycloNum(order, [_ONE])


def zero(order: int = 1) -> CycloNum:
    return CycloNum(order, [_ZERO])


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _gauss_sum(p: int) -> CycloNum:
    # sum over k of zeta_p^(k^2); equals sqrt(p) for p = 1 mod 4 and
    # i*sqrt(p) for p = 3 mod 4, under the principal embedding.
    acc = [_ZERO] * p
    for k in range(p):
        acc[(k * k) % p] += _ONE
    return CycloNum(p, acc)


def sqrt_rational(q, order: int) -> CycloNum:
    """The nonnegative square root of a rational q >= 0 inside Q(zeta_order).

    The root is assembled from quadratic Gauss sums; "nonnegative" refers to
    the principal embedding zeta_N -> exp(2*pi*i/N).  Raises
    SquareRootUnavailable (naming a sufficient order) when the root does not
    lie in Q(zeta_order).
    """
    q = Fraction(q)
    if q < 0:
        raise SquareRootUnavailable(f"sqrt of negative rational {q}")
    if q == 0:
        return zero(order)
    # sqrt(a/b) = sqrt(a*b)/b
    m = q.numerator * q.denominator
    rational_part = Fraction(1, q.denominator)
    odd_primes: list[int] = []
    for p, e in _factorize(m).items():
        rational_part *= Fraction(p) ** (e // 2)
        if e % 2:
            odd_primes.append(p)
    needed = 1
    count_3mod4 = 0
    for p in odd_primes:
        if p == 2:
            needed = _lcm(needed, 8)
        else:
            needed = _lcm(needed, p)
            if p % 4 == 3:
                count_3mod4 += 1
    if count_3mod4 % 2:
        needed = _lcm(needed, 4)
    if order % needed:
        raise SquareRootUnavailable(
            f"sqrt({q}) lies in Q(zeta_{needed}) but not in Q(zeta_{order}); "
            f"enlarge the cyclotomic order to a multiple of {needed} "
            f"(e.g. {_lcm(order, needed)})"
        )
    result = CycloNum(order, [rational_part])
    sign_fixes = 0
    for p in odd_primes:
        if p == 2:
            factor = (zeta(8) + zeta(8, -1)).lift(order)
        else:
            factor = _gauss_sum(p).lift(order)
            if p % 4 == 3:
                sign_fixes += 1
        result = result * factor
    # Each p = 3 mod 4 Gauss sum carries a factor i; divide them back out.
    # An even number of such factors only contributes a rational sign.
    if sign_fixes % 2:
        result = result * zeta(4, -(sign_fixes % 4)).lift(order)
    elif sign_fixes % 4 == 2:
        result = -result
    assert result * result == q, "square root construction failed"
    return result


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


# -- small exact linear algebra over Q(zeta_N) ---------------------------


def matrix_determinant(rows: list[list[CycloNum]]) -> CycloNum:
    """Determinant of a square CycloNum matrix by exact Gaussian elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        return one()
    work = [list(r) for r in rows]
    det = one(work[0][0].order)
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if not work[r][col].is_zero()), None
        )
        if pivot_row is None:
            return zero(det.order)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pivot = work[col][col]
        det = det * pivot
        inv_pivot = pivot.inv()
        for r in range(col + 1, n):
            factor = work[r][col] * inv_pivot
            if factor.is_zero():
                continue
            for c in range(col, n):
                work[r][c] = work[r][c] - factor * work[col][c]
    return det


def matrix_is_invertible(rows: list[list[CycloNum]]) -> bool:
    return not matrix_determinant(rows).is_zero()
