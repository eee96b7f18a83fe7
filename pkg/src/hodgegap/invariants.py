"""Character bookkeeping for the order-p action on holomorphic forms.

The generator acts on the 1-forms x^(k-1) dx/y of a hyperelliptic curve
through the character exponent a*k mod p (when it scales x by zeta^a and
fixes y), and on the invariant 1-form of the elliptic factor with exponent 0.
Counting invariant wedge products of one form per factor is then pure
modular arithmetic on weight multisets, which is how the two quotient
threefolds get their h^{3,0}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import is_prime, primes_upto


@dataclass(frozen=True)
class WeightMultiset:
    """Multiset of character exponents mod p, one per basis 1-form."""

    p: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(sorted(w % self.p for w in self.weights)))

    @classmethod
    def elliptic_factor(cls, p: int) -> "WeightMultiset":
        # translation acts trivially on the invariant 1-form
        return cls(p, (0,))


@dataclass(frozen=True)
class DiagonalAction:
    """Exponents (a1, a2, a3): the generator acts on factor j through the
    a_j-th power of the base automorphism (a3 belongs to the translation
    factor, which has weight 0 on forms)."""

    p: int
    exponents: tuple[int, int, int]

    def __post_init__(self):
        a1 = self.exponents[0]
        if a1 != 0 and math.gcd(a1, self.p) != 1:
            raise ValueError("first exponent must be prime to p when nonzero")


def form_weights(p: int, multiplier: int, g: int) -> WeightMultiset:
    """Weights {a*k mod p : k = 1..g} of x^(k-1) dx/y under x -> zeta^a x."""
    if multiplier % p == 0:
        raise ValueError("multiplier must be prime to p")
    return WeightMultiset(p, tuple((multiplier * k) % p for k in range(1, g + 1)))


def kunneth_h30_invariant_dim(
    w1: WeightMultiset, w2: WeightMultiset, action: DiagonalAction
) -> int:
    """Number of pairs (with multiplicity) whose twisted weights cancel:
    a1*w1 + a2*w2 + 0 == 0 mod p.  This is the dimension of the invariant
    3-forms on curve x curve x elliptic under the diagonal generator."""
    if w1.p != w2.p or w1.p != action.p:
        raise ValueError("mismatched moduli")
    p = action.p
    a1, a2, _ = action.exponents
    left = [(a1 * w) % p for w in w1.weights]
    count = 0
    for w in w2.weights:
        count += left.count((-a2 * w) % p)
    return count


def invariant_pair_witnesses(
    w1: WeightMultiset, w2: WeightMultiset, action: DiagonalAction
) -> list[tuple[int, int]]:
    """The invariant pairs themselves, for report output."""
    p = action.p
    a1, a2, _ = action.exponents
    return [
        (x, y)
        for x in w1.weights
        for y in w2.weights
        if (a1 * x + a2 * y) % p == 0
    ]


def witness_form_check(p: int) -> bool:
    """Is x1 dx1/y1 ^ x2^((p-3)/2) dx2/y2 ^ omega invariant under the
    (1, 4, .) action?  The two wedge factors carry weights 2 and (p-1)/2,
    and both must be genuine members of the holomorphic basis, which needs
    p >= 5."""
    if p < 5:
        raise ValueError("the explicit invariant 3-form needs p >= 5")
    g = (p - 1) // 2
    k1, k2 = 2, (p - 3) // 2 + 1
    if not (1 <= k1 <= g and 1 <= k2 <= g):
        return False
    return (k1 + 4 * k2) % p == 0


def hodge30_pair(p: int) -> tuple[int, int]:
    """(h^{3,0} of the (sigma, sigma, tau_P) quotient, same for
    (sigma, sigma^4, tau_P)); the second exponent is 2 instead of 4 when
    p = 3."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    if p == 3:
        w = form_weights(3, 1, 4)  # genus-4 curve: weights {1, 1, 2, 0}
        twist = 2
    else:
        w = form_weights(p, 1, (p - 1) // 2)
        twist = 4
    h_x = kunneth_h30_invariant_dim(w, w, DiagonalAction(p, (1, 1, 1)))
    h_y = kunneth_h30_invariant_dim(w, w, DiagonalAction(p, (1, twist, 1)))
    if p >= 5:
        assert h_x == 0, "invariant 3-form appeared for the untwisted action (bug)"
    assert h_y > 0, "twisted action lost all invariant 3-forms (bug)"
    return h_x, h_y


def hy_interval_count(p: int) -> int:
    """Closed-form count of j in [1, (p-1)/2] with -4j mod p again in
    [1, (p-1)/2]: two integer intervals, independent of the pair
    enumeration above."""
    lo1, hi1 = -((p + 1) // -8), (p - 1) // 4  # ceil((p+1)/8) .. floor((p-1)/4)
    lo2, hi2 = -((3 * p + 1) // -8), (p - 1) // 2
    return max(hi1 - lo1 + 1, 0) + max(hi2 - lo2 + 1, 0)


@dataclass(frozen=True)
class DiscrepancyRow:
    p: int
    h_x: int
    h_y: int
    gap: int


def discrepancy_series(p_max: int) -> list[DiscrepancyRow]:
    """Rows (p, hX, hY, hY - hX) for every prime 5 <= p <= p_max, the hY of
    each cross-checked against the interval count."""
    if p_max < 5:
        raise ValueError("p_max must be at least 5")
    rows = []
    for p in primes_upto(p_max):
        if p < 5:
            continue
        h_x, h_y = hodge30_pair(p)
        if h_y != hy_interval_count(p):
            raise AssertionError(f"enumeration and interval count disagree at p = {p}")
        rows.append(DiscrepancyRow(p, h_x, h_y, h_y - h_x))
    return rows


def least_squares_slope(points: list[tuple[int, int]]) -> float:
    """Slope of the least-squares line through integer points, exact until
    the final float conversion."""
    n = len(points)
    if n < 2:
        raise ValueError("need at least two points to fit a line")
    sx = sum(x for x, _ in points)
    sy = sum(y for _, y in points)
    sxx = sum(x * x for x, _ in points)
    sxy = sum(x * y for x, y in points)
    return float(Fraction(n * sxy - sx * sy, n * sxx - sx * sx))


def general_invariant_dim(
    weight_sets: list[WeightMultiset], exponents: list[int], p: int
) -> int:
    """Number of tuples, one weight per factor, with sum a_i*w_i == 0 mod p.

    Computed by convolving the twisted weight histograms, so it stays cheap
    for many factors; the direct product enumeration is the test oracle.
    """
    if len(weight_sets) != len(exponents):
        raise ValueError("one exponent per factor is required")
    acc = [0] * p
    acc[0] = 1
    for ws, a in zip(weight_sets, exponents):
        if ws.p != p:
            raise ValueError("mismatched moduli")
        hist = [0] * p
        for w in ws.weights:
            hist[(a * w) % p] += 1
        nxt = [0] * p
        for r, c in enumerate(acc):
            if c:
                for s, d in enumerate(hist):
                    if d:
                        nxt[(r + s) % p] += c * d
        acc = nxt
    return acc[0]
