"""Exact arithmetic in cyclotomic fields Q(zeta_n) and their rings of integers.

An element is stored in the power basis ``1, z, ..., z^(phi(n)-1)`` (z a fixed
primitive n-th root of unity) as a tuple of integer coordinates over a single
positive denominator.  Invariants kept by every constructor:

  * coordinates are the canonical representative modulo the n-th cyclotomic
    polynomial;
  * gcd(den, content of the coordinates) = 1, den >= 1;
  * den == 1 exactly when the element is an algebraic integer, because the
    power basis is an integral basis for Z[zeta_n].

On top of the field arithmetic this module provides the local data at the
ramified prime above p: the uniformizer pi (zeta_p - 1, or zeta_12^4 - 1 for
the p = 3 engine inside Q(zeta_12)), exact pi-adic valuations and the residue
map onto F_p resp. F_9.  Valuations are computed by repeated exact division
by pi, which is correct here because a single prime sits above p, so an
element is divisible by pi in the ring of integers iff its valuation is
positive.

Conductors outside {prime p, 12} are accepted by the field constructor on a
best-effort basis; the local (valuation/residue) machinery is only built for
the two cases above.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Optional, Sequence, Union

from .algebra import FiniteField, FqElement, is_prime


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _int_poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; division of integer polynomials, remainder must vanish
    num = list(num)
    d = len(den) - 1
    out = [0] * (len(num) - d)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + d]
        out[i] = c
        if c:
            for j, b in enumerate(den):
                num[i + j] -= c * b
    if any(num[:d]):
        raise ArithmeticError("inexact polynomial division")
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        poly = _int_poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> "CyclotomicField":
    if n < 2:
        raise ValueError(f"conductor {n} not supported (need n >= 2)")
    return CyclotomicField(n)


class CyclotomicField:
    """Q(zeta_n) with elements in the power basis; obtain via cyclotomic_field."""

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1  # phi(n)
        self.zero = CycloElement(self, (0,) * self.degree, 1)
        self.one = self.element([1])
        self.zeta = self.element([0, 1])

    def element(self, coords: Sequence[int], den: int = 1) -> "CycloElement":
        """Canonical element from raw integer coordinates over ``den``."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        reduced = self._reduce(coords)
        return CycloElement(self, tuple(reduced), den)

    def from_int(self, a: int) -> "CycloElement":
        return CycloElement(self, (a,) + (0,) * (self.degree - 1), 1)

    def coerce(self, x) -> "CycloElement":
        if isinstance(x, CycloElement):
            if x.field != self:
                raise ValueError("element belongs to a different cyclotomic field")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into Q(zeta_{self.n})")

    def _reduce(self, coords: Sequence[int]) -> list[int]:
        c = list(coords)
        d = self.degree
        mod = self.modulus
        for i in range(len(c) - 1, d - 1, -1):
            t = c[i]
            if t:
                c[i] = 0
                for j in range(d):
                    c[i - d + j] -= t * mod[j]
        if len(c) < d:
            c += [0] * (d - len(c))
        return c[:d]

    def _from_fractions(self, fracs: Sequence[Fraction]) -> "CycloElement":
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        coords = [int(f * den) for f in fracs]
        return CycloElement(self, tuple(coords), den)

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("CyclotomicField", self.n))

    def __repr__(self) -> str:
        return f"Q(zeta_{self.n})"


class CycloElement:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: CyclotomicField, num: tuple[int, ...], den: int):
        # num must already be reduced mod the cyclotomic polynomial
        if den < 0:
            num, den = tuple(-c for c in num), -den
        g = den
        for c in num:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        if not any(num):
            den = 1
        self.field = field
        self.num = num
        self.den = den

    # -- ring/field structure ------------------------------------------------

    def _co(self, other) -> "CycloElement":
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._co(other)
        da, db = self.den, o.den
        g = math.gcd(da, db)
        la, lb = db // g, da // g
        return CycloElement(
            self.field,
            tuple(a * la + b * lb for a, b in zip(self.num, o.num)),
            da * la,
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return self._co(other) - self

    def __neg__(self):
        return CycloElement(self.field, tuple(-c for c in self.num), self.den)

    def __mul__(self, other):
        o = self._co(other)
        n = self.field.degree
        out = [0] * (2 * n - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    out[i + j] += a * b
        return CycloElement(
            self.field, tuple(self.field._reduce(out)), self.den * o.den
        )

    __rmul__ = __mul__

    def inv(self) -> "CycloElement":
        """Field inverse via the extended Euclidean algorithm against Phi_n."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        a = [Fraction(c) for c in self.num]
        b = [Fraction(c) for c in self.field.modulus]
        # track s with s*num == r (mod Phi_n)
        s_a, s_b = [Fraction(1)], [Fraction(0)]
        while any(b):
            q, r = _frac_poly_divmod(a, b)
            s_a, s_b = s_b, _frac_poly_sub(s_a, _frac_poly_mul(q, s_b))
            a, b = b, r
        # a is now a nonzero constant gcd (Phi_n is irreducible over Q)
        lead = next(c for c in a if c)
        inv_coeffs = [c / lead * self.den for c in s_a]
        inv_coeffs += [Fraction(0)] * (self.field.degree - len(inv_coeffs))
        return self.field._from_fractions(inv_coeffs[: self.field.degree])

    def __truediv__(self, other):
        return self * self._co(other).inv()

    def __rtruediv__(self, other):
        return self._co(other) * self.inv()

    def __pow__(self, k: int) -> "CycloElement":
        if k < 0:
            return self.inv() ** (-k)
        acc = self.field.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- predicates ------------------------------------------------------------

    @property
    def is_integral(self) -> bool:
        """True iff the element lies in Z[zeta_n] (reduced denominator is 1)."""
        return self.den == 1

    def __bool__(self) -> bool:
        return any(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return (
            self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.field, self.num, self.den))

    def __repr__(self) -> str:
        return str(self)

    def __str__(self) -> str:
        if not any(self.num):
            return "0"
        parts = []
        for k, c in enumerate(self.num):
            if c == 0:
                continue
            mono = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                parts.append(str(c))
            elif abs(c) == 1:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(f"{c}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ")
        if self.den == 1:
            return body
        return f"({body})/{self.den}"


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = max(i for i, c in enumerate(b) if c)
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / b[db]
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return q, a[:db] if db else [Fraction(0)]


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


def canonicalize(raw: Sequence[int], n: int) -> CycloElement:
    """Unique power-basis representative of an integer polynomial in zeta_n."""
    return cyclotomic_field(n).element(list(raw))


def try_divide_exact(
    z: CycloElement, w: CycloElement, integral: bool = False
) -> Optional[CycloElement]:
    """z/w, or None when ``integral`` is set and the quotient leaves Z[zeta_n]."""
    if not w:
        raise ZeroDivisionError("division by zero")
    q = z * w.inv()
    if integral and not q.is_integral:
        return None
    return q


class PiSpec:
    """Local data at the unique ramified prime above p.

    ``pi`` generates the maximal ideal, ``e`` is its ramification index
    (the pi-valuation of p) and ``residue_field`` the quotient modulo pi.
    Built by :meth:`for_prime` (n = p, residue field F_p, zeta -> 1) or
    :meth:`p3` (n = 12, pi = omega - 1 with omega = zeta^4, residue field
    F_9 = F_3[t]/(t^2+1), the square root of -1 mapping to t).
    """

    def __init__(
        self,
        field: CyclotomicField,
        pi: CycloElement,
        p: int,
        e: int,
        residue_field: FiniteField,
        zeta_image: FqElement,
    ):
        self.field = field
        self.n = field.n
        self.pi = pi
        self.p = p
        self.e = e
        self.residue_field = residue_field
        self.zeta_image = zeta_image
        self.pi_inv = pi.inv()
        # the image of zeta must kill both Phi_n and pi
        mod_image = sum(
            (residue_field.from_int(c) * zeta_image**k for k, c in enumerate(field.modulus)),
            residue_field.zero,
        )
        if mod_image or self.residue(pi):
            raise ValueError("residue data inconsistent with the uniformizer")

    @classmethod
    @functools.lru_cache(maxsize=None)
    def for_prime(cls, p: int) -> "PiSpec":
        """The ring Z_p[zeta_p] with uniformizer zeta_p - 1, residue field F_p."""
        if not is_prime(p) or p < 3:
            raise ValueError(f"need an odd prime, got {p}")
        k = cyclotomic_field(p)
        pi = k.zeta - 1
        fp = FiniteField(p)
        return cls(k, pi, p, p - 1, fp, fp.one)

    @classmethod
    @functools.lru_cache(maxsize=None)
    def p3(cls) -> "PiSpec":
        """Z_3[omega, i] realized inside Q(zeta_12); pi = omega - 1, residue F_9."""
        k = cyclotomic_field(12)
        omega = k.zeta**4
        f9 = FiniteField(3, modulus=(1, 0))  # t^2 + 1
        t = f9.gen()
        # zeta_12 = omega * i^{-1} reduces to 1 * t^{-1} = -t
        return cls(k, omega - 1, 3, 2, f9, -t)

    # -- local arithmetic -----------------------------------------------------

    def valuation(self, z: CycloElement) -> Union[int, float]:
        """Exact pi-adic valuation; +inf for zero.

        Clears the denominator first (each factor p in it costs e), then
        divides the integral part by pi until the quotient leaves Z[zeta_n].
        """
        z = self.field.coerce(z)
        if not z:
            return math.inf
        v = 0
        den = z.den
        while den % self.p == 0:
            den //= self.p
            v -= self.e
        cur = self.field.element(z.num)
        while True:
            nxt = cur * self.pi_inv
            if not nxt.is_integral:
                return v
            v += 1
            cur = nxt

    def residue(self, z: CycloElement) -> FqElement:
        """Image in the residue field; defined on the valuation ring only."""
        z = self.field.coerce(z)
        if z.den % self.p == 0:
            raise ValueError("element has negative valuation at pi")
        fq = self.residue_field
        acc = fq.zero
        for c in reversed(z.num):
            acc = acc * self.zeta_image + fq.from_int(c)
        return acc * fq.from_int(z.den).inv()

    def __repr__(self) -> str:
        return f"PiSpec(n={self.n}, p={self.p}, e={self.e})"
