"""Degree-3 cyclic algebras over Q(sqrt(-3)) with involutions of the second kind.

The algebra is D = L + L*z + L*z^2 with z^3 = a and z*l = rho(l)*z.  Two
flavors are supported:

* kind "galois": L = Q(zeta_9), which is C6-Galois over Q; the involution is
  the tau-conjugate-transpose on the regular representation.
* kind "nongalois": L = E(theta) with theta^3 = b and a = tau(b); the
  involution swaps theta and z.

Elements are stored as L-triples; the 3x3 matrix image is derived.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .numberfield import (
    CubicExtElem,
    CycloElem,
    QuadElem,
    SQRT_M3,
    ZETA3_E,
    cubic_norm,
    cubic_rho,
    cubic_trace,
    embed_E_in_L,
    galois_rho,
    galois_tau,
    is_in_E,
    is_prime,
    local_norm_obstruction,
    norm_L_over_E,
    project_to_E,
    quad_from_sqrt3_basis,
    splitting_data,
    trace_L_over_E,
)

GALOIS = "galois"
NONGALOIS = "nongalois"


@dataclass(frozen=True)
class AlgebraParams:
    """Structure data (kind, a, and for the non-Galois kind the radicand b)."""

    kind: str
    a: QuadElem
    b: Optional[QuadElem] = None

    def __post_init__(self):
        if self.kind not in (GALOIS, NONGALOIS):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if not self.a:
            raise ValueError("structure constant a must be a unit of E")
        if self.kind == NONGALOIS:
            if self.b is None:
                raise ValueError("non-Galois kind needs the radicand b")
            if self.a != self.b.conj():
                raise ValueError("non-Galois kind requires a = tau(b)")
        else:
            # the two Galois actions of L must commute (checked on the basis)
            for i in range(6):
                zi = CycloElem.zeta9(i)
                if galois_tau(galois_rho(zi)) != galois_rho(galois_tau(zi)):
                    raise ValueError("Galois actions do not commute")

    # -- scalar embeddings into the coefficient field L ----------------------

    def l_zero(self):
        if self.kind == GALOIS:
            return CycloElem([])
        return CubicExtElem.scalar(QuadElem(0), self.b)

    def l_one(self):
        return self.l_scalar(QuadElem(1))

    def l_scalar(self, e: QuadElem):
        if self.kind == GALOIS:
            return embed_E_in_L(e)
        return CubicExtElem.scalar(e, self.b)

    # -- field operations on L, dispatched per kind ---------------------------

    def rho(self, l):
        return galois_rho(l) if self.kind == GALOIS else cubic_rho(l)

    def norm(self, l) -> QuadElem:
        return norm_L_over_E(l) if self.kind == GALOIS else cubic_norm(l)

    def trace(self, l) -> QuadElem:
        return trace_L_over_E(l) if self.kind == GALOIS else cubic_trace(l)


def example_galois_params() -> AlgebraParams:
    """Built-in Galois-kind data: a = (2 + sqrt(-3)) / (2 - sqrt(-3))."""
    a = quad_from_sqrt3_basis(2, 1) / quad_from_sqrt3_basis(2, -1)
    return AlgebraParams(GALOIS, a)


def example_nongalois_params() -> AlgebraParams:
    """Built-in non-Galois-kind data: b = 2*zeta_3, a = tau(b)."""
    b = QuadElem(2) * ZETA3_E
    return AlgebraParams(NONGALOIS, b.conj(), b)


class AlgebraElem:
    """Element l0 + l1*z + l2*z^2 of the cyclic algebra."""

    __slots__ = ("params", "l")

    def __init__(self, params: AlgebraParams, l0, l1=None, l2=None):
        self.params = params
        z = params.l_zero()
        self.l = (l0, l1 if l1 is not None else z, l2 if l2 is not None else z)

    @classmethod
    def scalar(cls, params: AlgebraParams, e) -> "AlgebraElem":
        if isinstance(e, (int, Fraction)):
            e = QuadElem(e)
        if isinstance(e, QuadElem):
            return cls(params, params.l_scalar(e))
        return cls(params, e)

    @classmethod
    def gen_z(cls, params: AlgebraParams) -> "AlgebraElem":
        return cls(params, params.l_zero(), params.l_one())

    def _check(self, other: "AlgebraElem"):
        if self.params != other.params:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: "AlgebraElem"):
        self._check(other)
        return AlgebraElem(self.params, *(a + b for a, b in zip(self.l, other.l)))

    def __sub__(self, other: "AlgebraElem"):
        self._check(other)
        return AlgebraElem(self.params, *(a - b for a, b in zip(self.l, other.l)))

    def __neg__(self):
        return AlgebraElem(self.params, *(-a for a in self.l))

    def __mul__(self, other: "AlgebraElem"):
        self._check(other)
        p = self.params
        rho = p.rho
        a = p.l_scalar(p.a)
        l0, l1, l2 = self.l
        m0, m1, m2 = other.l
        rm0, rm1, rm2 = rho(m0), rho(m1), rho(m2)
        rrm0, rrm1, rrm2 = rho(rm0), rho(rm1), rho(rm2)
        return AlgebraElem(
            p,
            l0 * m0 + a * (l1 * rm2 + l2 * rrm1),
            l0 * m1 + l1 * rm0 + a * (l2 * rrm2),
            l0 * m2 + l1 * rm1 + l2 * rrm0,
        )

    def __eq__(self, other):
        if isinstance(other, AlgebraElem):
            return self.params == other.params and self.l == other.l
        return NotImplemented

    def __hash__(self):
        return hash((self.params, self.l))

    def __bool__(self):
        return any(bool(c) for c in self.l)

    def __repr__(self):
        return f"AlgebraElem({self.l[0]!r}, {self.l[1]!r}, {self.l[2]!r})"


def to_matrix(d: AlgebraElem) -> List[list]:
    """Regular-representation image A(l0, l1, l2) in M_3(L)."""
    p = d.params
    rho = p.rho
    a = p.l_scalar(p.a)
    l0, l1, l2 = d.l
    r0, r1, r2 = rho(l0), rho(l1), rho(l2)
    rr0, rr1, rr2 = rho(r0), rho(r1), rho(r2)
    return [
        [l0, l1, l2],
        [a * r2, r0, r1],
        [a * rr1, a * rr2, rr0],
    ]


def matrix_mul(m1: Sequence, m2: Sequence) -> List[list]:
    return [
        [sum_l([m1[i][k] * m2[k][j] for k in range(3)]) for j in range(3)]
        for i in range(3)
    ]


def sum_l(items):
    out = items[0]
    for it in items[1:]:
        out = out + it
    return out


def matrix_det(m: Sequence):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def reduced_norm(d: AlgebraElem) -> QuadElem:
    """N(d) = N(l0) + a N(l1) + a^2 N(l2) - a Tr(l0 rho(l1) rho^2(l2))."""
    p = d.params
    a = p.a
    l0, l1, l2 = d.l
    cross = l0 * p.rho(l1) * p.rho(p.rho(l2))
    return (
        p.norm(l0)
        + a * p.norm(l1)
        + a * a * p.norm(l2)
        - a * p.trace(cross)
    )


def reduced_trace(d: AlgebraElem) -> QuadElem:
    return d.params.trace(d.l[0])


def involution(d: AlgebraElem) -> AlgebraElem:
    """The involution of the second kind, per the algebra kind."""
    p = d.params
    l0, l1, l2 = d.l
    if p.kind == GALOIS:
        ta = embed_E_in_L(p.a.conj())
        t, r = galois_tau, galois_rho
        return AlgebraElem(
            p,
            t(l0),
            ta * t(r(l2)),
            ta * t(r(r(l1))),
        )
    # non-Galois kind: transpose the theta/z coefficient grid and conjugate
    e = [list(lj.e) for lj in d.l]  # e[j][k]: theta^k coefficient of l_j
    tilde = [
        CubicExtElem(e[0][j].conj(), e[1][j].conj(), e[2][j].conj(), b=p.b)
        for j in range(3)
    ]
    return AlgebraElem(p, *tilde)


def inverse(d: AlgebraElem) -> AlgebraElem:
    """Inverse via the adjugate of the matrix image divided by the norm."""
    n = reduced_norm(d)
    if not n:
        raise ZeroDivisionError("element has reduced norm zero")
    m = to_matrix(d)
    inv_n = d.params.l_scalar(n.inverse())

    def cof(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        minor = (
            m[rows[0]][cols[0]] * m[rows[1]][cols[1]]
            - m[rows[0]][cols[1]] * m[rows[1]][cols[0]]
        )
        return minor if (i + j) % 2 == 0 else -minor

    # row 0 of A^{-1} carries the triple of d^{-1}
    return AlgebraElem(
        d.params,
        inv_n * cof(0, 0),
        inv_n * cof(1, 0),
        inv_n * cof(2, 0),
    )


def is_special_unitary(d: AlgebraElem) -> bool:
    """True iff alpha(d) * d = 1 and the reduced norm is 1, exactly."""
    one = AlgebraElem.scalar(d.params, 1)
    return involution(d) * d == one and reduced_norm(d) == QuadElem(1)


# --------------------------------------------------------------------------
# Condition report for the division-algebra-with-involution construction.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionReport:
    """Verdicts for the three construction conditions of the Galois kind.

    division_condition: a and a^2 both fail to be relative norms (None means
    no witness prime settled it either way).
    unit_norm_condition: a * tau(a) = 1, exactly.
    commuting_condition: the order-2 and order-3 Galois actions commute.
    """

    division_condition: Optional[bool]
    unit_norm_condition: bool
    commuting_condition: bool
    witness_prime_a: Optional[int] = None
    witness_prime_a2: Optional[int] = None
    residues_a: Optional[frozenset] = None
    residues_a2: Optional[frozenset] = None
    searched_below: Optional[int] = None

    @property
    def all_verified(self) -> bool:
        return bool(
            self.division_condition
            and self.unit_norm_condition
            and self.commuting_condition
        )


def _obvious_norm(a: QuadElem) -> bool:
    """Detect elements that are trivially relative norms from L."""
    # norms of the torsion units +-zeta_9^j are +-zeta_3^j
    zeta3_powers = [QuadElem(1), ZETA3_E, ZETA3_E * ZETA3_E]
    for u in zeta3_powers:
        if a == u or a == -u:
            return True
    if a.is_rational:
        # rational cubes are norms of rationals
        num, den = a.x.numerator, a.x.denominator
        r = round(abs(num) ** (1 / 3)) if num else 0
        s = round(den ** (1 / 3))
        for rr in (r - 1, r, r + 1):
            for ss in (s - 1, s, s + 1):
                if ss > 0 and Fraction((-rr if num < 0 else rr) ** 3, ss ** 3) == a.x:
                    return True
    return False


def witness_primes(limit: int):
    """Primes below limit at which the valuation obstruction test applies."""
    out = []
    for p in range(5, limit):
        if not is_prime(p):
            continue
        kind, f = splitting_data(p)
        if kind == "split" and f == 3:
            out.append(p)
    return out


def check_theorem_conditions(
    params: AlgebraParams, witness_limit: int = 200, precision: int = 8
) -> ConditionReport:
    """Verify the three conditions making (D, alpha) a division algebra with
    involution of the second kind and compact archimedean unitary group."""
    if params.kind != GALOIS:
        raise ValueError("condition report applies to the Galois kind only")
    a = params.a
    unit_norm = a * a.conj() == QuadElem(1)
    commuting = all(
        galois_tau(galois_rho(CycloElem.zeta9(i)))
        == galois_rho(galois_tau(CycloElem.zeta9(i)))
        for i in range(6)
    )
    a2 = a * a
    if _obvious_norm(a) or _obvious_norm(a2):
        return ConditionReport(False, unit_norm, commuting, searched_below=witness_limit)
    wp_a = wp_a2 = None
    res_a = res_a2 = None
    for p in witness_primes(witness_limit):
        if wp_a is None:
            rep = local_norm_obstruction(a, p, precision)
            if rep.obstructed:
                wp_a, res_a = p, rep.valuations_mod_3
        if wp_a2 is None:
            rep2 = local_norm_obstruction(a2, p, precision)
            if rep2.obstructed:
                wp_a2, res_a2 = p, rep2.valuations_mod_3
        if wp_a is not None and wp_a2 is not None:
            break
    division = True if (wp_a is not None and wp_a2 is not None) else None
    return ConditionReport(
        division_condition=division,
        unit_norm_condition=unit_norm,
        commuting_condition=commuting,
        witness_prime_a=wp_a,
        witness_prime_a2=wp_a2,
        residues_a=res_a,
        residues_a2=res_a2,
        searched_below=witness_limit,
    )


# --------------------------------------------------------------------------
# Random sampling: generic elements, and exactly special-unitary elements.
# --------------------------------------------------------------------------


def _random_fraction(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 2))


def random_l_element(params: AlgebraParams, rng: random.Random):
    if params.kind == GALOIS:
        return CycloElem([_random_fraction(rng) for _ in range(6)])
    return CubicExtElem(
        QuadElem(_random_fraction(rng), _random_fraction(rng)),
        QuadElem(_random_fraction(rng), _random_fraction(rng)),
        QuadElem(_random_fraction(rng), _random_fraction(rng)),
        b=params.b,
    )


def random_element(params: AlgebraParams, rng: random.Random) -> AlgebraElem:
    return AlgebraElem(params, *(random_l_element(params, rng) for _ in range(3)))


def _random_real_subfield_element(rng: random.Random) -> CycloElem:
    """Random element of the tau-fixed cubic subfield of Q(zeta_9)."""
    eta1 = CycloElem.zeta9(1) + CycloElem.zeta9(8)
    eta2 = CycloElem.zeta9(2) + CycloElem.zeta9(7)
    q0, q1, q2 = (_random_fraction(rng) for _ in range(3))
    return CycloElem([q0]) + CycloElem([q1]) * eta1 + CycloElem([q2]) * eta2


def random_hermitian(params: AlgebraParams, rng: random.Random) -> AlgebraElem:
    """Random alpha-fixed element of the Galois-kind algebra."""
    if params.kind != GALOIS:
        raise ValueError("hermitian sampling implemented for the Galois kind")
    l0 = _random_real_subfield_element(rng)
    l1 = CycloElem([_random_fraction(rng) for _ in range(6)])
    ta = embed_E_in_L(params.a.conj())
    l2 = ta * galois_tau(galois_rho(galois_rho(l1)))
    return AlgebraElem(params, l0, l1, l2)


def random_special_unitary(params: AlgebraParams, rng: random.Random) -> AlgebraElem:
    """Exact special-unitary element via a Cayley transform.

    For a skew element s (alpha(s) = -s) the Cayley transform
    x = (1 - s)(1 + s)^{-1} satisfies alpha(x) x = 1, and its reduced norm is
    tau(n)/n with n = N(1 + s).  Taking s = sqrt(-3) * (1 + mu*k) for a
    traceless hermitian k and mu = -S_k / N_k (S_k the middle coefficient of
    the characteristic polynomial of k) forces n rational, hence norm one.
    """
    if params.kind != GALOIS:
        raise ValueError("special-unitary sampling implemented for the Galois kind")
    one = AlgebraElem.scalar(params, 1)
    for _ in range(100):
        k = random_hermitian(params, rng)
        tr = reduced_trace(k)
        if not tr.is_rational:
            raise ArithmeticError("hermitian trace must be rational")
        k = k - AlgebraElem.scalar(params, QuadElem(tr.x / 3))
        if not k:
            continue
        n_k = reduced_norm(k)
        tr_k2 = reduced_trace(k * k)
        if not (n_k.is_rational and tr_k2.is_rational) or n_k.x == 0:
            continue
        mu = -(-tr_k2.x / 2) / n_k.x  # -S_k / N_k with S_k = -Tr(k^2)/2
        h = one + AlgebraElem.scalar(params, QuadElem(mu)) * k
        s = AlgebraElem.scalar(params, SQRT_M3) * h
        denom = one + s
        n = reduced_norm(denom)
        if not n:
            continue
        x = (one - s) * inverse(denom)
        if not is_special_unitary(x):
            raise ArithmeticError("Cayley transform failed the unitarity check")
        return x
    raise ArithmeticError("failed to sample a special unitary element")


# --------------------------------------------------------------------------
# Archimedean realization: L ⊗ R ≅ C^3, D ⊗ R ≅ M_3(C).
# --------------------------------------------------------------------------

_ZETA9_C = cmath.exp(2j * cmath.pi / 9)


def _embed_c(l: CycloElem) -> complex:
    """Fixed complex embedding zeta_9 -> exp(2*pi*i/9)."""
    return sum(float(c) * _ZETA9_C ** i for i, c in enumerate(l.coeffs))


def realize_at_infinity(l: CycloElem) -> Tuple[complex, complex, complex]:
    """Image of l in C^3 via the three embeddings ordered by rho-powers."""
    r = galois_rho(l)
    return (_embed_c(l), _embed_c(r), _embed_c(galois_rho(r)))


def matrix_at_infinity(d: AlgebraElem):
    """Complex 3x3 image of d under the fixed embedding (Galois kind)."""
    import numpy as np

    if d.params.kind != GALOIS:
        raise ValueError("archimedean matrix realization needs the Galois kind")
    m = to_matrix(d)
    return np.array([[_embed_c(e) for e in row] for row in m], dtype=complex)


def torus_point(t: complex) -> Tuple[complex, complex, complex]:
    """The archimedean torus point (conj(t)/t, t, 1/conj(t))."""
    if t == 0:
        raise ValueError("torus parameter must be nonzero")
    tc = t.conjugate()
    return (tc / t, t, 1 / tc)


def triple_is_unitary_norm_one(triple: Sequence[complex], tol: float = 1e-10) -> bool:
    """Check norm 1 and alpha(x) x = 1 for a point of C^3 under the split
    archimedean actions rho(t0,t1,t2) = (t1,t2,t0), tau(t0,t1,t2) = (conj t0,
    conj t2, conj t1)."""
    t0, t1, t2 = triple
    if t0 == 0 or t1 == 0 or t2 == 0:
        return False
    norm = t0 * t1 * t2
    tau = (t0.conjugate(), t2.conjugate(), t1.conjugate())
    prods = [tau[i] * triple[i] for i in range(3)]
    return abs(norm - 1) <= tol and all(abs(p - 1) <= tol for p in prods)


def verify_noncompact_torus(t: complex, tol: float = 1e-10) -> bool:
    """True iff the torus point of t is special unitary in the split sense."""
    return triple_is_unitary_norm_one(torus_point(t), tol)
