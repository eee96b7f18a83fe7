"""The ramified hyperelliptic family and its symmetries.

For an odd prime p >= 5 the family over Z_p[zeta_p] is

    v^2 = f(u),   f(u) = sum_{i=0}^{p-1} binom(p,i)/pi^i * u^(p-i),

with uniformizer pi = zeta_p - 1; its reduction mod pi is v^2 = u^p - u, and
after the substitution x = pi*u + 1, y = v the generic fibre becomes
pi^p y^2 = x^p - 1.  For p = 3 the analogous degree-9 family lives over
Z_3[omega, i] (inside Q(zeta_12)): v^2 = g(u)^3 + g(u) with
g = u^3 + (omega^2-1)u^2 - omega^2 u, reducing to v^2 = u^9 - u.

Curve automorphisms are restricted to the affine shape
(u, v) -> (alpha*u + beta, gamma*v), which covers the order-p action
sigma(u) = zeta*u + 1, sigma(v) = v and the conjugating maps used on the
special fibre.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    FiniteField,
    Polynomial,
    binomial,
    discriminant_squarefree,
    fq_sqrt,
    is_prime,
)
from .cyclotomic import CyclotomicField, PiSpec, try_divide_exact


@dataclass(frozen=True)
class HyperellipticModel:
    """A curve v^2 = f(u); only odd-degree f is produced here, so there is a
    single point at infinity."""

    f: Polynomial
    label: str = "generic-R"

    @property
    def ring(self):
        return self.f.ring


@dataclass(frozen=True)
class AffineCurveMap:
    """The map (u, v) -> (alpha*u + beta, gamma*v); alpha, gamma units."""

    alpha: object
    beta: object
    gamma: object

    def __post_init__(self):
        if not self.alpha or not self.gamma:
            raise ValueError("alpha and gamma must be invertible")

    @property
    def ring(self):
        return self.alpha.field

    def apply(self, u, v):
        return self.alpha * u + self.beta, self.gamma * v

    def is_identity(self) -> bool:
        return self.alpha == 1 and not self.beta and self.gamma == 1


def default_spec(p: int) -> PiSpec:
    """The arithmetic engine for prime p: n = 12 when p = 3, n = p otherwise."""
    return PiSpec.p3() if p == 3 else PiSpec.for_prime(p)


def hyperelliptic_family(p: int, spec: Optional[PiSpec] = None) -> HyperellipticModel:
    """The family v^2 = f(u) over the ramified base, coefficients verified
    integral one by one."""
    if p == 2:
        raise ValueError(
            "p = 2 is not supported: the construction needs odd characteristic, "
            "and no characteristic-2 analogue (it would start from a Suzuki-type "
            "curve) is known"
        )
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    spec = spec or default_spec(p)
    if spec.p != p:
        raise ValueError(f"engine is local at {spec.p}, not {p}")
    k = spec.field
    if p == 3:
        if spec.n != 12:
            raise ValueError("the p = 3 family needs the conductor-12 engine")
        omega = k.zeta**4
        u_poly = Polynomial(k, [k.zero, k.one])
        g = u_poly**3 + u_poly.scale(omega**2 - 1) * u_poly + u_poly.scale(-(omega**2))
        return HyperellipticModel(g**3 + g)
    coeffs = [k.zero] * (p + 1)
    pi_pow = k.one
    for i in range(p):
        c = try_divide_exact(k.from_int(binomial(p, i)), pi_pow, integral=True)
        if c is None:
            raise ArithmeticError(f"binom({p},{i})/pi^{i} is not integral")
        coeffs[p - i] = c
        pi_pow = pi_pow * spec.pi
    return HyperellipticModel(Polynomial(k, coeffs))


def genus(model: HyperellipticModel) -> int:
    """floor((deg f - 1)/2); demands squarefree f."""
    ok, _ = discriminant_squarefree(model.f)
    if not ok:
        raise ValueError("genus of a singular model")
    return (model.f.degree - 1) // 2


def reduce_model(model: HyperellipticModel, spec: PiSpec) -> HyperellipticModel:
    """Coefficient-wise reduction mod pi (every coefficient must be integral)."""
    fq = spec.residue_field
    return HyperellipticModel(
        Polynomial(fq, [spec.residue(c) for c in model.f.coeffs]),
        label="special-fibre",
    )


def reduction_target(p: int, spec: PiSpec) -> Polynomial:
    """u^p - u over F_p, or u^9 - u over F_9 when p = 3."""
    fq = spec.residue_field
    d = 9 if p == 3 else p
    coeffs = [fq.zero] * (d + 1)
    coeffs[d] = fq.one
    coeffs[1] = -fq.one
    return Polynomial(fq, coeffs)


def xy_model(p: int, spec: Optional[PiSpec] = None) -> HyperellipticModel:
    """The generic fibre in xy-coordinates: y^2 = (x^p - 1)/pi^p, and for
    p = 3 the sum (x^3-1)^3/pi^9 + (x^3-1)/pi^3."""
    spec = spec or default_spec(p)
    k = spec.field
    if p == 3:
        cubed = Polynomial(k, [-k.one, k.zero, k.zero, k.one])  # x^3 - 1
        return HyperellipticModel(
            (cubed**3).scale((spec.pi**9).inv()) + cubed.scale((spec.pi**3).inv()),
            label="xy-coordinates",
        )
    scale = (spec.pi**p).inv()
    coeffs = [k.zero] * (p + 1)
    coeffs[0] = -scale
    coeffs[p] = scale
    return HyperellipticModel(Polynomial(k, coeffs), label="xy-coordinates")


def substitution_check(
    p: int, spec: Optional[PiSpec] = None, model: Optional[HyperellipticModel] = None
) -> bool:
    """Does x = pi*u + 1 pull the xy-model back to v^2 = f(u)?  Exact
    polynomial identity ((pi*u + 1)^p - 1)/pi^p == f(u) over Q(zeta_p)."""
    if p < 5:
        raise ValueError("use substitution_check_p3 for the p = 3 family")
    spec = spec or default_spec(p)
    model = model or hyperelliptic_family(p, spec)
    k = spec.field
    x_of_u = Polynomial(k, [k.one, spec.pi])
    return xy_model(p, spec).f.compose(x_of_u) == model.f


def substitution_check_p3(
    spec: Optional[PiSpec] = None,
    model: Optional[HyperellipticModel] = None,
    offset: int = 1,
) -> bool:
    """p = 3 analogue with x = pi*u + offset (offset 1 is the real substitution)."""
    spec = spec or PiSpec.p3()
    model = model or hyperelliptic_family(3, spec)
    k = spec.field
    x_of_u = Polynomial(k, [k.from_int(offset), spec.pi])
    return xy_model(3, spec).f.compose(x_of_u) == model.f


def second_chart_closed_form(p: int, spec: PiSpec) -> Polynomial:
    """sum_{i=0}^{p-1} binom(p,i)/pi^i * s^(i+1), the other affine chart."""
    k = spec.field
    coeffs = [k.zero] * (p + 1)
    pi_pow = k.one
    for i in range(p):
        coeffs[i + 1] = k.from_int(binomial(p, i)) * pi_pow.inv()
        pi_pow = pi_pow * spec.pi
    return Polynomial(k, coeffs)


def second_chart_polynomial(model: HyperellipticModel, twist: Optional[int] = None):
    """s^(2*twist) * f(1/s) with v = t/s^twist; default twist (deg+1)/2.

    Returns None when the exponent choice produces a genuine Laurent term,
    i.e. the substitution does not land in a polynomial equation.
    """
    f = model.f
    d = f.degree
    if twist is None:
        twist = (d + 1) // 2
    ring = f.ring
    out = [ring.zero] * (2 * twist + 1)
    for k_deg, c in enumerate(f.coeffs):
        if not c:
            continue
        e = 2 * twist - k_deg
        if e < 0:
            return None
        out[e] = out[e] + c
    return Polynomial(ring, out)


def chart_transition_check(
    p: int,
    spec: Optional[PiSpec] = None,
    model: Optional[HyperellipticModel] = None,
    twist: Optional[int] = None,
) -> bool:
    """u = 1/s, v = t/s^((p+1)/2) must carry v^2 = f(u) onto the chart
    polynomial above, exactly."""
    if p < 5:
        raise ValueError("the explicit second-chart formula starts at p = 5")
    spec = spec or default_spec(p)
    model = model or hyperelliptic_family(p, spec)
    flipped = second_chart_polynomial(model, twist=twist)
    if flipped is None:
        return False
    return flipped == second_chart_closed_form(p, spec)


def is_relatively_smooth(model: HyperellipticModel, spec: Optional[PiSpec] = None) -> bool:
    """Smoothness of v^2 = f(u) on both charts and (over R) both fibres:
    odd degree, f squarefree, and f mod pi squarefree."""
    f = model.f
    if f.degree < 1:
        return False
    if f.degree % 2 == 0:
        return False
    if isinstance(f.ring, CyclotomicField):
        if spec is None:
            raise ValueError("a PiSpec is needed to check the special fibre")
        if not all(c.is_integral for c in f.coeffs):
            return False
        if not discriminant_squarefree(f)[0]:
            return False
        return discriminant_squarefree(reduce_model(model, spec).f)[0]
    return discriminant_squarefree(f)[0]


# ---------------------------------------------------------------------------
# curve maps


def sigma_generic(p: int, spec: Optional[PiSpec] = None) -> AffineCurveMap:
    """sigma(u) = zeta_p*u + 1, sigma(v) = v over the ramified base."""
    spec = spec or default_spec(p)
    k = spec.field
    zeta_p = k.zeta**4 if p == 3 else k.zeta
    return AffineCurveMap(zeta_p, k.one, k.one)


def sigma_special(spec: PiSpec) -> AffineCurveMap:
    """The special fibre of sigma: u -> u + 1, v -> v."""
    fq = spec.residue_field
    return AffineCurveMap(fq.one, fq.one, fq.one)


def tau_special(p: int, spec: Optional[PiSpec] = None) -> AffineCurveMap:
    """The conjugating automorphism of v^2 = u^p - u.

    For p >= 5 this is (4u, 2v).  For p = 3 we use (2u, i*v) over F_9,
    where i = sqrt(2) = sqrt(-1); squaring shows it preserves u^9 - u.
    """
    spec = spec or default_spec(p)
    fq = spec.residue_field
    if p == 3:
        root = fq_sqrt(fq.from_int(2))
        if root is None:
            raise ArithmeticError("2 must be a square in F_9")
        return AffineCurveMap(fq.from_int(2), fq.zero, root)
    return AffineCurveMap(fq.from_int(4), fq.zero, fq.from_int(2))


def identity_map(ring) -> AffineCurveMap:
    return AffineCurveMap(ring.one, ring.zero, ring.one)


def map_compose(outer: AffineCurveMap, inner: AffineCurveMap) -> AffineCurveMap:
    """outer after inner."""
    return AffineCurveMap(
        outer.alpha * inner.alpha,
        outer.alpha * inner.beta + outer.beta,
        outer.gamma * inner.gamma,
    )


def map_inverse(m: AffineCurveMap) -> AffineCurveMap:
    ai = m.alpha.inv()
    return AffineCurveMap(ai, -(ai * m.beta), m.gamma.inv())


def map_power(m: AffineCurveMap, k: int) -> AffineCurveMap:
    if k < 0:
        return map_power(map_inverse(m), -k)
    acc = identity_map(m.ring)
    for _ in range(k):
        acc = map_compose(m, acc)
    return acc


def map_order(m: AffineCurveMap, bound: int = 512) -> int:
    """Order in the affine-map group, by iterated composition."""
    acc = m
    for k in range(1, bound + 1):
        if acc.is_identity():
            return k
        acc = map_compose(m, acc)
    raise RuntimeError(f"order exceeds bound {bound}")


def map_preserves_curve(model: HyperellipticModel, m: AffineCurveMap) -> bool:
    """gamma^2 * f(u) == f(alpha*u + beta), the condition for (u,v) ->
    (alpha*u+beta, gamma*v) to be an automorphism of v^2 = f(u)."""
    f = model.f
    ring = f.ring
    moved = f.compose(Polynomial(ring, [m.beta, m.alpha]))
    return f.scale(m.gamma * m.gamma) == moved


def conjugacy_check(
    tau: AffineCurveMap, sigma: AffineCurveMap, k: int
) -> bool:
    """tau o sigma o tau^{-1} == sigma^k, as exact affine maps."""
    lhs = map_compose(tau, map_compose(sigma, map_inverse(tau)))
    return lhs == map_power(sigma, k)


def affine_fixed_points(
    m: AffineCurveMap, model: HyperellipticModel
) -> tuple[list[tuple], bool]:
    """All affine points of v^2 = f(u) fixed by the map, by exhaustion over
    the finite coefficient field.  The point at infinity is always fixed by
    maps of this shape, reported via the second component."""
    fq = m.ring
    if not isinstance(fq, FiniteField):
        raise ValueError("fixed-point search needs a finite coefficient field")
    fixed = []
    for u in fq:
        rhs = model.f(u)
        for v in fq:
            if v * v == rhs and m.apply(u, v) == (u, v):
                fixed.append((u, v))
    return fixed, True
