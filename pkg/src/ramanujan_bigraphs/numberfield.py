"""Exact arithmetic in Q(sqrt(-3)), Q(zeta_9), and cubic radical extensions.

Everything here is exact: elements carry Fraction coefficients and equality is
structural, never tolerance-based.  The quadratic field E = Q(sqrt(-3)) is
represented on the integral basis {1, w} with w^2 = w - 1 (w = (1+sqrt(-3))/2),
which keeps residue-ring reduction correct even at 2.  The degree-6 field
L = Q(zeta_9) is represented on the power basis of zeta_9 modulo
Phi_9(x) = x^6 + x^3 + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

Scalar = Union[int, Fraction]

# --------------------------------------------------------------------------
# E = Q(sqrt(-3)) on the basis {1, w}, w^2 = w - 1, sqrt(-3) = 2w - 1.
# --------------------------------------------------------------------------


class QuadElem:
    """Element x + y*w of Q(sqrt(-3)), with w = (1 + sqrt(-3)) / 2."""

    __slots__ = ("x", "y")

    def __init__(self, x: Scalar = 0, y: Scalar = 0):
        self.x = Fraction(x)
        self.y = Fraction(y)

    @classmethod
    def _coerce(cls, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return QuadElem(-self.x, -self.y)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # (x1 + y1 w)(x2 + y2 w) with w^2 = w - 1
        return QuadElem(
            self.x * o.x - self.y * o.y,
            self.x * o.y + self.y * o.x + self.y * o.y,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadElem(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __bool__(self):
        return self.x != 0 or self.y != 0

    def conj(self) -> "QuadElem":
        """Nontrivial automorphism of E/Q: w -> 1 - w (sqrt(-3) -> -sqrt(-3))."""
        return QuadElem(self.x + self.y, -self.y)

    def norm(self) -> Fraction:
        """N_{E/Q}: x^2 + xy + y^2."""
        return self.x * self.x + self.x * self.y + self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x + self.y

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inversion of zero in Q(sqrt(-3))")
        c = self.conj()
        return QuadElem(c.x / n, c.y / n)

    @property
    def is_rational(self) -> bool:
        return self.y == 0

    def __repr__(self):
        return f"QuadElem({self.x!r}, {self.y!r})"

    def __str__(self):
        if self.y == 0:
            return str(self.x)
        return f"({self.x} + {self.y}*w)"


SQRT_M3 = QuadElem(-1, 2)     # sqrt(-3) = 2w - 1
ZETA3_E = QuadElem(-1, 1)     # zeta_3 = w - 1 = (-1 + sqrt(-3)) / 2
QUAD_ONE = QuadElem(1)
QUAD_ZERO = QuadElem(0)


def quad_from_sqrt3_basis(x: Scalar, y: Scalar) -> QuadElem:
    """Build x + y*sqrt(-3) as a QuadElem."""
    return QuadElem(x, 0) + QuadElem(y, 0) * SQRT_M3


# --------------------------------------------------------------------------
# L = Q(zeta_9), power basis mod Phi_9 = x^6 + x^3 + 1.
# --------------------------------------------------------------------------

_PHI9 = (Fraction(1), Fraction(0), Fraction(0), Fraction(1), Fraction(0),
         Fraction(0), Fraction(1))  # 1 + x^3 + x^6, low to high


def _reduce_mod_phi9(coeffs: list) -> list:
    """Reduce a coefficient list (low to high) modulo x^6 = -x^3 - 1."""
    c = list(coeffs) + [Fraction(0)] * max(0, 6 - len(coeffs))
    for k in range(len(c) - 1, 5, -1):
        if c[k]:
            c[k - 3] -= c[k]
            c[k - 6] -= c[k]
            c[k] = Fraction(0)
    return [Fraction(v) for v in c[:6]]


def _poly_divmod(num: list, den: list):
    num = list(num)
    deg_d = max(i for i, v in enumerate(den) if v != 0)
    q = [Fraction(0)] * max(1, len(num))
    for k in range(len(num) - 1, deg_d - 1, -1):
        if num[k] == 0:
            continue
        f = num[k] / den[deg_d]
        q[k - deg_d] = f
        for i in range(deg_d + 1):
            num[k - deg_d + i] -= f * den[i]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


class CycloElem:
    """Element of Q(zeta_9) as c0 + c1 z + ... + c5 z^5, z = zeta_9."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(v) for v in coeffs]
        if len(c) > 6:
            c = _reduce_mod_phi9(c)
        c += [Fraction(0)] * (6 - len(c))
        self.coeffs = tuple(c)

    @classmethod
    def zeta9(cls, k: int = 1) -> "CycloElem":
        k %= 9
        c = [Fraction(0)] * (k + 1)
        c[k] = Fraction(1)
        return cls(_reduce_mod_phi9(c))

    @classmethod
    def _coerce(cls, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            return other
        if isinstance(other, QuadElem):
            return embed_E_in_L(other)
        if isinstance(other, (int, Fraction)):
            return cls([other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloElem([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloElem([a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CycloElem([-a for a in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prod = [Fraction(0)] * 11
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        return CycloElem(_reduce_mod_phi9(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloElem([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def inverse(self) -> "CycloElem":
        """Invert via extended Euclid against Phi_9."""
        if not self:
            raise ZeroDivisionError("inversion of zero in Q(zeta_9)")
        # extended gcd(self, Phi9) over Q[x]
        r0, r1 = list(_PHI9), list(self.coeffs)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        t0 = None  # coefficients against Phi9 are not needed
        while True:
            deg1 = max(i for i, v in enumerate(r1) if v != 0) if any(r1) else -1
            if deg1 <= 0:
                break
            q, r = _poly_divmod(r0, r1)
            # s_new = s0 - q * s1
            s_new = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - len(s0) - 1)
            for i, qi in enumerate(q):
                if qi == 0:
                    continue
                for j, sj in enumerate(s1):
                    if sj:
                        while i + j >= len(s_new):
                            s_new.append(Fraction(0))
                        s_new[i + j] -= qi * sj
            r0, r1 = r1, r
            s0, s1 = s1, s_new
        if not any(r1):
            raise ZeroDivisionError("element not invertible mod Phi_9")
        lead = r1[0]
        inv = [c / lead for c in s1]
        return CycloElem(_reduce_mod_phi9(inv))

    def __repr__(self):
        return f"CycloElem({list(self.coeffs)!r})"


ZETA9 = CycloElem.zeta9(1)
ZETA3_L = CycloElem.zeta9(3)
CYCLO_ONE = CycloElem([1])
CYCLO_ZERO = CycloElem([])


def _automorphism_table(exp_mult: int):
    """Images of the basis monomials zeta_9^i under zeta_9 -> zeta_9^exp_mult."""
    return tuple(CycloElem.zeta9(exp_mult * i % 9) for i in range(6))


_RHO_TABLE = _automorphism_table(4)   # rho(zeta_9) = zeta_3 * zeta_9 = zeta_9^4
_TAU_TABLE = _automorphism_table(8)   # tau(zeta_9) = zeta_9^8


def _apply_table(table, l: CycloElem) -> CycloElem:
    out = CYCLO_ZERO
    for c, img in zip(l.coeffs, table):
        if c:
            out = out + CycloElem([c]) * img
    return out


def galois_rho(l: CycloElem) -> CycloElem:
    """Order-3 automorphism of L/E: zeta_9 -> zeta_9^4. Fixes E pointwise."""
    return _apply_table(_RHO_TABLE, l)


def galois_tau(l: CycloElem) -> CycloElem:
    """Order-2 automorphism (complex conjugation): zeta_9 -> zeta_9^8."""
    return _apply_table(_TAU_TABLE, l)


def embed_E_in_L(e: QuadElem) -> CycloElem:
    """Embed x + y*w into L via w = 1 + zeta_3 = 1 + zeta_9^3."""
    return CycloElem([e.x + e.y, 0, 0, e.y, 0, 0])


def is_in_E(l: CycloElem) -> bool:
    c = l.coeffs
    return c[1] == 0 and c[2] == 0 and c[4] == 0 and c[5] == 0


def project_to_E(l: CycloElem) -> QuadElem:
    """Inverse of embed_E_in_L; raises if the element is not in E."""
    if not is_in_E(l):
        raise ValueError(f"element {l!r} does not lie in Q(sqrt(-3))")
    # l = c0 + c3 zeta_3 = (c0 - c3) + c3 w
    return QuadElem(l.coeffs[0] - l.coeffs[3], l.coeffs[3])


def norm_L_over_E(l: CycloElem) -> QuadElem:
    return project_to_E(l * galois_rho(l) * galois_rho(galois_rho(l)))


def trace_L_over_E(l: CycloElem) -> QuadElem:
    return project_to_E(l + galois_rho(l) + galois_rho(galois_rho(l)))


def norm_trace_L_over_E(l: CycloElem):
    """Relative norm and trace of L/E as a pair of QuadElems."""
    return norm_L_over_E(l), trace_L_over_E(l)


# --------------------------------------------------------------------------
# Cubic radical extensions E(theta), theta^3 = b (used for the non-Galois case).
# --------------------------------------------------------------------------


class CubicExtElem:
    """Element e0 + e1*theta + e2*theta^2 of E(theta) with theta^3 = b."""

    __slots__ = ("e", "b")

    def __init__(self, e0, e1=QUAD_ZERO, e2=QUAD_ZERO, *, b: QuadElem):
        def q(v):
            return v if isinstance(v, QuadElem) else QuadElem(v)
        self.e = (q(e0), q(e1), q(e2))
        self.b = b if isinstance(b, QuadElem) else QuadElem(b)

    def _check(self, other: "CubicExtElem"):
        if self.b != other.b:
            raise ValueError("mixing cubic extensions with different radicands")

    @classmethod
    def scalar(cls, v, b: QuadElem) -> "CubicExtElem":
        return cls(v, QUAD_ZERO, QUAD_ZERO, b=b)

    def __add__(self, other: "CubicExtElem"):
        self._check(other)
        return CubicExtElem(*(a + c for a, c in zip(self.e, other.e)), b=self.b)

    def __sub__(self, other: "CubicExtElem"):
        self._check(other)
        return CubicExtElem(*(a - c for a, c in zip(self.e, other.e)), b=self.b)

    def __neg__(self):
        return CubicExtElem(*(-a for a in self.e), b=self.b)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadElem)):
            q = other if isinstance(other, QuadElem) else QuadElem(other)
            return CubicExtElem(*(a * q for a in self.e), b=self.b)
        self._check(other)
        prod = [QUAD_ZERO] * 5
        for i, a in enumerate(self.e):
            for j, c in enumerate(other.e):
                prod[i + j] = prod[i + j] + a * c
        # theta^3 = b, theta^4 = b*theta
        return CubicExtElem(
            prod[0] + self.b * prod[3],
            prod[1] + self.b * prod[4],
            prod[2],
            b=self.b,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CubicExtElem):
            return self.b == other.b and self.e == other.e
        return NotImplemented

    def __hash__(self):
        return hash((self.e, self.b))

    def __bool__(self):
        return any(bool(a) for a in self.e)

    def __repr__(self):
        return f"CubicExtElem({self.e[0]!r}, {self.e[1]!r}, {self.e[2]!r}, b={self.b!r})"


def cubic_rho(x: CubicExtElem) -> CubicExtElem:
    """Generator of Gal(E(theta)/E): theta -> zeta_3 * theta."""
    z = ZETA3_E
    return CubicExtElem(x.e[0], x.e[1] * z, x.e[2] * z * z, b=x.b)


def cubic_norm(x: CubicExtElem) -> QuadElem:
    prod = x * cubic_rho(x) * cubic_rho(cubic_rho(x))
    if prod.e[1] or prod.e[2]:
        raise ValueError("relative norm did not land in the base field")
    return prod.e[0]


def cubic_trace(x: CubicExtElem) -> QuadElem:
    s = x + cubic_rho(x) + cubic_rho(cubic_rho(x))
    if s.e[1] or s.e[2]:
        raise ValueError("relative trace did not land in the base field")
    return s.e[0]


# --------------------------------------------------------------------------
# Prime splitting and the local norm obstruction.
# --------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the ranges used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def splitting_data(p: int):
    """Splitting type of p in E and residue degree of p in L = Q(zeta_9).

    Returns (kind, residue_degree) with kind in {"ramified", "split",
    "inert"}; the residue degree is None for p = 3.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        return "ramified", None
    # residue degree in L = multiplicative order of p mod 9
    f = 1
    x = p % 9
    while x != 1:
        x = x * p % 9
        f += 1
    if p == 2:
        # w^2 - w + 1 is irreducible mod 2, so 2 is inert
        return "inert", f
    kind = "split" if any(x * x % p == (-3) % p for x in range(p)) else "inert"
    return kind, f


def hensel_sqrt_minus3(p: int, precision: int) -> int:
    """Lift a square root of -3 mod p to a root mod p^precision by Newton steps."""
    if p == 2 or p == 3 or not is_prime(p):
        raise ValueError(f"no unramified square root of -3 at p={p}")
    r = next((x for x in range(p) if x * x % p == (-3) % p), None)
    if r is None:
        raise ValueError(f"-3 is not a square mod {p}")
    k = 1
    while k < precision:
        k = min(2 * k, precision)
        mod = p ** k
        # Newton: r <- r - (r^2 + 3) / (2r)
        inv2r = pow(2 * r % mod, -1, mod)
        r = (r - (r * r + 3) * inv2r) % mod
    mod = p ** precision
    if (r * r + 3) % mod != 0:
        raise ArithmeticError(f"Hensel lift failed at p={p}")
    return r % mod


@dataclass(frozen=True)
class ObstructionReport:
    """Valuation residues of both p-adic embeddings of an element of E."""

    element: QuadElem
    prime: int
    split_type_in_E: str
    residue_degree_in_L: int
    valuations: tuple
    valuations_mod_3: frozenset
    obstructed: bool


def _padic_valuation(n: int, p: int, cap: int) -> int:
    if n % (p ** cap) == 0:
        raise ArithmeticError(
            f"valuation at {p} reached the precision cap {cap}; raise precision"
        )
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def local_norm_obstruction(a: QuadElem, p: int, precision: int = 8) -> ObstructionReport:
    """Valuation-based witness that a is not a relative norm from L.

    Requires p split in E with residue degree 3 in L, so that the local cubic
    extension is unramified: units are automatically norms and an element is a
    local norm iff its valuation is divisible by 3.  The two embeddings of E
    into the p-adic field send sqrt(-3) to the two Hensel lifts +-r.
    """
    if precision < 2:
        raise ValueError("precision must be at least 2")
    kind, f = splitting_data(p)
    if kind != "split":
        raise ValueError(f"p={p} is not split in Q(sqrt(-3))")
    if f != 3:
        raise ValueError(f"p={p} has residue degree {f} != 3 in Q(zeta_9)")
    if not a:
        raise ValueError("zero has no valuation")
    mod = p ** precision
    r = hensel_sqrt_minus3(p, precision)
    inv2 = pow(2, -1, mod)
    # clear denominators: a = (u + v*w) / d with u, v, d integers
    d = a.x.denominator * a.y.denominator // math.gcd(
        a.x.denominator, a.y.denominator
    )
    u = int(a.x * d)
    v = int(a.y * d)
    vd = _padic_valuation(d, p, precision)
    vals = []
    for root in (r, (-r) % mod):
        w_img = (1 + root) * inv2 % mod  # w = (1 + sqrt(-3)) / 2
        num = (u + v * w_img) % mod
        vals.append(_padic_valuation(num if num else mod, p, precision) - vd)
    residues = frozenset(v % 3 for v in vals)
    return ObstructionReport(
        element=a,
        prime=p,
        split_type_in_E=kind,
        residue_degree_in_L=f,
        valuations=tuple(vals),
        valuations_mod_3=residues,
        obstructed=any(res != 0 for res in residues),
    )
