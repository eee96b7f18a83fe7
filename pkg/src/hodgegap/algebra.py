"""Shared exact-arithmetic kit: finite fields F_p and F_{p^2}, dense univariate
polynomials over an arbitrary coefficient field, and small exact matrix kernels.

Everything is immutable and pure; no floats appear anywhere in this module.
A "coefficient field" is any object exposing ``zero``, ``one`` and
``coerce(x)``, whose elements overload ``+ - *`` and provide ``inv()``.
Both :class:`FiniteField` here and the cyclotomic fields elsewhere qualify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(bound: int) -> list[int]:
    return [n for n in range(2, bound + 1) if is_prime(n)]


class FiniteField:
    """F_p for a prime p, or F_{p^2} presented as F_p[t]/(t^2 + c1*t + c0).

    Elements are :class:`FqElement` values with coordinates in the basis
    ``1, t``.  The field object doubles as the ring tag carried by
    polynomials and curve models.
    """

    def __init__(self, p: int, modulus: Optional[tuple[int, int]] = None):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = p
        if modulus is None:
            self.k = 1
            self.modulus: Optional[tuple[int, int]] = None
        else:
            c0, c1 = (c % p for c in modulus)
            if any((x * x + c1 * x + c0) % p == 0 for x in range(p)):
                raise ValueError(f"t^2 + {c1}t + {c0} is reducible mod {p}")
            self.k = 2
            self.modulus = (c0, c1)
        self.q = p**self.k
        self.zero = FqElement(self, (0,) * self.k)
        self.one = FqElement(self, (1,) + (0,) * (self.k - 1))

    def from_int(self, a: int) -> "FqElement":
        return FqElement(self, (a,) + (0,) * (self.k - 1))

    def coerce(self, x) -> "FqElement":
        if isinstance(x, FqElement):
            if x.field != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into GF({self.q})")

    def gen(self) -> "FqElement":
        """The generator t of the quadratic extension."""
        if self.k != 2:
            raise ValueError("prime field has no extension generator")
        return FqElement(self, (0, 1))

    def __iter__(self) -> Iterator["FqElement"]:
        # canonical enumeration: 0, 1, ..., p-1, t, 1+t, ...
        for m in range(self.q):
            if self.k == 1:
                yield FqElement(self, (m,))
            else:
                yield FqElement(self, (m % self.p, m // self.p))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("FiniteField", self.p, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        c0, c1 = self.modulus
        return f"GF({self.q})=GF({self.p})[t]/(t^2+{c1}t+{c0})"


class FqElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: FiniteField, coords: tuple[int, ...]):
        self.field = field
        self.coords = tuple(c % field.p for c in coords)

    def _co(self, other) -> "FqElement":
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._co(other)
        return FqElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        return FqElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return self._co(other) - self

    def __neg__(self):
        return FqElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._co(other)
        f = self.field
        if f.k == 1:
            return FqElement(f, (self.coords[0] * o.coords[0],))
        a0, a1 = self.coords
        b0, b1 = o.coords
        c0, c1 = f.modulus
        hi = a1 * b1
        return FqElement(f, (a0 * b0 - c0 * hi, a0 * b1 + a1 * b0 - c1 * hi))

    __rmul__ = __mul__

    def inv(self) -> "FqElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        if f.k == 1:
            return FqElement(f, (pow(self.coords[0], -1, f.p),))
        # conjugate over F_p divided by the norm, both exact
        a0, a1 = self.coords
        c0, c1 = f.modulus
        norm = (a0 * a0 - c1 * a0 * a1 + c0 * a1 * a1) % f.p
        ninv = pow(norm, -1, f.p)
        return FqElement(f, ((a0 - c1 * a1) * ninv, -a1 * ninv))

    def __truediv__(self, other):
        return self * self._co(other).inv()

    def __rtruediv__(self, other):
        return self._co(other) * self.inv()

    def __pow__(self, k: int) -> "FqElement":
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

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __repr__(self) -> str:
        return str(self)

    def __str__(self) -> str:
        if self.field.k == 1:
            return str(self.coords[0])
        a0, a1 = self.coords
        if a1 == 0:
            return str(a0)
        t = "t" if a1 == 1 else f"{a1}t"
        return t if a0 == 0 else f"{t}+{a0}"


def fq_sqrt(a: FqElement) -> Optional[FqElement]:
    """First element (in the field's canonical order) whose square is ``a``.

    Exhaustive search; the fields used here have at most a few hundred
    elements.  Returns None when ``a`` is not a square.
    """
    for r in a.field:
        if r * r == a:
            return r
    return None


# ---------------------------------------------------------------------------
# polynomials over a coefficient field


class Polynomial:
    """Dense univariate polynomial, coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=()):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.zero

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials over different coefficient rings")
            return other
        return Polynomial(self.ring, (other,))

    def __add__(self, other):
        o = self._check(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(
            self.ring, [self.coeff(i) + o.coeff(i) for i in range(n)]
        )

    def __sub__(self, other):
        o = self._check(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(
            self.ring, [self.coeff(i) - o.coeff(i) for i in range(n)]
        )

    def __neg__(self):
        return Polynomial(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        o = self._check(other)
        if self.is_zero() or o.is_zero():
            return Polynomial(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.ring, out)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        acc = Polynomial(self.ring, (self.ring.one,))
        for _ in range(k):
            acc = acc * self
        return acc

    def scale(self, c) -> "Polynomial":
        c = self.ring.coerce(c)
        return Polynomial(self.ring, [c * a for a in self.coeffs])

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(u)) by Horner's rule."""
        inner = self._check(inner)
        acc = Polynomial(self.ring)
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial(self.ring, (c,))
        return acc

    def __call__(self, x):
        x = self.ring.coerce(x)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(
            self.ring,
            [self.ring.coerce(k) * c for k, c in enumerate(self.coeffs)][1:],
        )

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        li = self.leading().inv()
        return self.scale(li)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial[{self.render()}]"

    def render(self, var: str = "u") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            mono = "1" if k == 0 else (var if k == 1 else f"{var}^{k}")
            cs = str(c)
            if k == 0:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)


def poly_divmod(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ring = num.ring
    if den.ring != ring:
        raise ValueError("polynomials over different coefficient rings")
    rem = list(num.coeffs)
    d = den.degree
    if num.degree < d:
        return Polynomial(ring), num
    lead_inv = den.leading().inv()
    quot = [ring.zero] * (num.degree - d + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + d] * lead_inv
        if not c:
            continue
        quot[i] = c
        for j, b in enumerate(den.coeffs):
            rem[i + j] = rem[i + j] - c * b
    return Polynomial(ring, quot), Polynomial(ring, rem[:d])


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (field coefficients)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def discriminant_squarefree(f: Polynomial) -> tuple[bool, Polynomial]:
    """Whether f is squarefree, together with gcd(f, f').

    Squarefree means the gcd is a nonzero constant. Constant input is an
    error since the question is vacuous there.
    """
    if f.degree < 1:
        raise ValueError("squarefreeness needs a nonconstant polynomial")
    g = poly_gcd(f, f.derivative())
    return g.degree == 0, g


# ---------------------------------------------------------------------------
# exact linear algebra


@dataclass(frozen=True)
class MatrixModP:
    """Dense matrix with entries reduced mod p, stored as row tuples."""

    p: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "entries",
            tuple(tuple(e % self.p for e in row) for row in self.entries),
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


def rank_mod_p(m: MatrixModP) -> int:
    p = m.p
    a = [list(row) for row in m.entries]
    rank = 0
    for col in range(m.cols):
        pivot = next((i for i in range(rank, m.rows) if a[i][col] % p), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(m.rows):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == m.rows:
            break
    return rank


def kernel_dim_mod_p(m: MatrixModP) -> int:
    """dim ker(m) over F_p, by Gaussian elimination."""
    return m.cols - rank_mod_p(m)


def kernel_dim_rational(entries) -> int:
    """dim over Q of the kernel of an integer matrix, via Fraction elimination."""
    a = [[Fraction(e) for e in row] for row in entries]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return cols - rank


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)
