"""Exact arithmetic in the cyclotomic field Q(zeta_e).

A number is a rational-coefficient polynomial in zeta_e reduced modulo the
e-th cyclotomic polynomial, so the degree is phi(e) and equality is
decidable.  All scalars appearing in the Hecke presentation are powers of
zeta_e, so this field suffices.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ._rat import RAT

_SCALARS = (int, Fraction, type(RAT(0)))


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for j, d in enumerate(den):
            num[j + k] -= q * d
    assert all(v == 0 for v in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, ascending, monic with integer entries."""
    if e < 1:
        raise ValueError("e must be positive")
    if e == 1:
        return (-1, 1)
    poly = [0] * e + [1]
    poly[0] = -1  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(e: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    """x^m mod Phi_e for m = d .. max(2d-2, e-1), where d = deg Phi_e."""
    phi = cyclotomic_polynomial(e)
    d = len(phi) - 1
    top_power = max(2 * d - 2, e - 1, d)
    reps: list[tuple[int, ...]] = []
    current = [-c for c in phi[:d]]  # x^d
    reps.append(tuple(current))
    for _ in range(d, top_power):
        shifted = [0] + current[:-1]
        top = current[-1]
        current = [shifted[j] + top * reps[0][j] for j in range(d)]
        reps.append(tuple(current))
    return tuple(reps), d


class Cyc:
    """An element of Q(zeta_e), coefficients over 1, zeta, ..., zeta^(d-1).

    Instances are immutable by convention; slots keep the arithmetic cheap
    enough for exact matrix work.
    """

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs: tuple[Fraction, ...]):
        self.e = e
        self.coeffs = coeffs

    def __repr__(self) -> str:
        return f"Cyc({self.e}, {self.coeffs})"

    @staticmethod
    def degree(e: int) -> int:
        return len(cyclotomic_polynomial(e)) - 1

    @classmethod
    def from_rational(cls, value, e: int) -> "Cyc":
        d = cls.degree(e)
        return cls(e, (RAT(value),) + (RAT(0),) * (d - 1))

    @classmethod
    def zero(cls, e: int) -> "Cyc":
        return cls.from_rational(0, e)

    @classmethod
    def one(cls, e: int) -> "Cyc":
        return cls.from_rational(1, e)

    @classmethod
    def zeta(cls, e: int, power: int = 1) -> "Cyc":
        """zeta_e^power, reduced into the field basis."""
        d = cls.degree(e)
        power %= e
        coeffs = [RAT(0)] * max(d, power + 1)
        coeffs[power] = RAT(1)
        return cls(e, _reduce(coeffs, e, d))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def _coerce(self, other) -> "Cyc":
        if isinstance(other, Cyc):
            if other.e != self.e:
                raise ValueError(f"mixed cyclotomic fields e={self.e}, e={other.e}")
            return other
        if isinstance(other, _SCALARS):
            return Cyc.from_rational(other, self.e)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc(self.e, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.e, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc(self.e, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = len(self.coeffs)
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        conv[i + j] += a * b
        return Cyc(self.e, _reduce(conv, self.e, d))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = [RAT(c) for c in cyclotomic_polynomial(self.e)]
        g, u = _ext_gcd_mod([RAT(c) for c in self.coeffs], phi)
        inv = [c / g for c in u]
        d = len(self.coeffs)
        inv += [RAT(0)] * (2 * d - 1 - len(inv))
        return Cyc(self.e, _reduce(inv, self.e, d))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "Cyc":
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyc.one(self.e)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _SCALARS):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyc):
            if other.e == self.e:
                return self.coeffs == other.coeffs
            return (
                self.is_rational()
                and other.is_rational()
                and self.coeffs[0] == other.coeffs[0]
            )
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.e, self.coeffs))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z{self.e}" if k == 1 else f"z{self.e}^{k}"
                parts.append(z if c == 1 else f"{c}*{z}")
        return " + ".join(parts) if parts else "0"


def _reduce(conv: list, e: int, d: int) -> tuple:
    """Fold coefficients of degree >= d back via the reduction table."""
    out = list(conv[:d])
    if len(out) < d:
        out += [Fraction(0)] * (d - len(out))
    if len(conv) > d:
        reps, _ = _reduction_table(e)
        for m in range(d, len(conv)):
            c = conv[m]
            if c:
                rep = reps[m - d]
                for j in range(d):
                    if rep[j]:
                        out[j] += c * rep[j]
    return tuple(out)


def cyc_dot(xs, ys) -> Cyc:
    """Exact dot product of two Cyc sequences with one field reduction."""
    e = xs[0].e
    d = len(xs[0].coeffs)
    acc = [0] * (2 * d - 1)
    for x, y in zip(xs, ys):
        for i, a in enumerate(x.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    if b:
                        acc[i + j] += a * b
    return Cyc(e, _reduce(acc, e, d))


def mat_mul_cyc(a: list, b: list) -> list:
    """Matrix product over Q(zeta_e), specialised for speed."""
    cols = [[row[j] for row in b] for j in range(len(b[0]))]
    return [[cyc_dot(row, col) for col in cols] for row in a]


def matrix_rank_cyc(rows: list, ncols: int) -> int:
    """Rank over Q(zeta_e) via the rational regular-representation blowup.

    Each entry becomes the d x d matrix of multiplication on the power
    basis; the rational rank of the blowup is d times the cyclotomic rank.
    """
    from . import _linalg

    if not rows:
        return 0
    e = rows[0][0].e
    d = len(rows[0][0].coeffs)
    if d == 1:
        flat = [[entry.coeffs[0] for entry in row] for row in rows]
        return _linalg.matrix_rank(flat, ncols)
    blown = []
    for row in rows:
        blocks = []
        for entry in row:
            cols = []
            for s in range(d):
                shifted = [0] * s + list(entry.coeffs)
                cols.append(_reduce(shifted, e, d))
            blocks.append(cols)
        for r in range(d):
            blown.append([blocks[c][s][r] for c in range(ncols) for s in range(d)])
    return _linalg.matrix_rank(blown, ncols * d) // d


def _poly_mod(a: list, b: list) -> list:
    a = list(a)
    while len(a) > 0 and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    while len(a) - 1 >= db:
        f = a[-1] / b[-1]
        shift = len(a) - 1 - db
        for j in range(len(b)):
            a[shift + j] -= f * b[j]
        while a and a[-1] == 0:
            a.pop()
    return a


def _ext_gcd_mod(a: list, modulus: list) -> tuple:
    """Return (g, u) with u*a = g (a nonzero constant) modulo the modulus.

    The modulus is irreducible over Q, so the gcd of a nonzero element with
    it is always a constant.
    """
    r0, r1 = list(modulus), list(a)
    u0, u1 = [RAT(0)], [RAT(1)]
    while True:
        while r1 and r1[-1] == 0:
            r1.pop()
        if len(r1) == 1:
            return r1[0], u1
        assert r1, "gcd with an irreducible modulus cannot vanish"
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    q = [RAT(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        f = a[-1] / b[-1]
        shift = len(a) - 1 - db
        q[shift] += f
        for j in range(len(b)):
            a[shift + j] -= f * b[j]
    return q, a


def _poly_mul(a: list, b: list) -> list:
    out = [RAT(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [RAT(0)] * (n - len(a))
    b = b + [RAT(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
