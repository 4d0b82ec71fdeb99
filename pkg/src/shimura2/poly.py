"""Univariate polynomials over the rationals, with exact root machinery.

A polynomial is a tuple of ``Fraction`` coefficients, index = degree of the
term, trailing zeros stripped; the zero polynomial has an empty tuple.  All
algorithms (Euclid, resultants, Sturm chains, root isolation) run in exact
rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import FactorizationError, divisors


class UniPoly:
    """Dense univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dn = len(rem) - 1, other.degree
        if dd < dn:
            return UniPoly(), self
        quot = [Fraction(0)] * (dd - dn + 1)
        inv_lc = 1 / other.lc
        for k in range(dd - dn, -1, -1):
            q = rem[k + dn] * inv_lc
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return UniPoly(quot), UniPoly(rem[:dn])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "UniPoly(" + " + ".join(terms).replace("+ -", "- ") + ")"

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return UniPoly(tuple(c * inv for c in self.coeffs))

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic polynomial gcd by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def primitive_integer(self) -> tuple[Fraction, tuple[int, ...]]:
        """Write p = k * P with P a primitive integer polynomial, lc(P) > 0.

        Returns (k, coefficients of P).  Requires p nonzero.
        """
        if self.is_zero():
            raise ValueError("zero polynomial")
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        content = 0
        for c in ints:
            content = gcd(content, c)
        if ints[-1] < 0:
            content = -content
        return Fraction(content, den), tuple(c // content for c in ints)

    def shift_scale_free_normal(self) -> "UniPoly":
        """Normalization to a primitive integer polynomial with lc > 0."""
        _, ints = self.primitive_integer()
        return UniPoly(ints)

    def positive_primitive(self) -> "UniPoly":
        """Primitive integer polynomial equal to a *positive* multiple of self.

        Sign-preserving, so sign variation arguments (Sturm) stay valid.
        """
        _, ints = self.primitive_integer()
        p = UniPoly(ints)
        return p if self.lc > 0 else -p

    # ------------------------------------------------------------------
    # resultants and discriminants

    def resultant(self, other: "UniPoly") -> Fraction:
        """Res(self, other) via the Euclidean remainder recursion."""
        f, g = self, other
        if f.is_zero() or g.is_zero():
            raise ValueError("resultant of the zero polynomial")
        sign = 1
        acc = Fraction(1)
        while True:
            m, n = f.degree, g.degree
            if n == 0:
                return sign * acc * g.lc**m
            if m < n:
                f, g = g, f
                if (m * n) % 2 == 1:
                    sign = -sign
                continue
            r = f % g
            if r.is_zero():
                return Fraction(0)
            if (m * n) % 2 == 1:
                sign = -sign
            acc *= g.lc ** (m - r.degree)
            f, g = g, r

    def discriminant(self) -> Fraction:
        """disc(p) = (-1)^(d(d-1)/2) * Res(p, p') / lc(p); zero iff repeated root."""
        d = self.degree
        if d < 1:
            raise ValueError("discriminant needs degree >= 1")
        if d == 1:
            return Fraction(1)
        res = self.resultant(self.derivative())
        sign = -1 if (d * (d - 1) // 2) % 2 else 1
        return sign * res / self.lc

    def is_squarefree(self) -> bool:
        if self.is_zero():
            return False
        if self.degree == 0:
            return True
        return self.gcd(self.derivative()).degree == 0

    def squarefree_part(self) -> "UniPoly":
        """p / gcd(p, p'), made monic-free via primitive normalization."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        if self.degree == 0:
            return UniPoly((1,))
        g = self.gcd(self.derivative())
        return (self // g).shift_scale_free_normal()

    # ------------------------------------------------------------------
    # real roots (Sturm)

    def sturm_chain(self) -> list["UniPoly"]:
        """Sturm chain p, p', -rem..., each normalized by a positive rational."""
        chain = [self.positive_primitive()]
        d = chain[0].derivative()
        if not d.is_zero():
            chain.append(d.positive_primitive() if d.degree > 0 else d)
        while chain[-1] and chain[-1].degree > 0:
            r = -(chain[-2] % chain[-1])
            if r.is_zero():
                break
            # positive scaling keeps all sign variations intact
            chain.append(r.positive_primitive())
        return chain

    def count_real_roots(self) -> int:
        """Number of distinct real roots (Sturm).  Input must be squarefree."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        if not self.is_squarefree():
            raise ValueError("count_real_roots requires a squarefree polynomial")
        if self.degree == 0:
            return 0
        chain = self.sturm_chain()
        # signs at -infinity and +infinity from leading terms
        at_pos = [1 if s.lc > 0 else -1 for s in chain]
        at_neg = [(1 if s.lc > 0 else -1) * (-1 if s.degree % 2 else 1) for s in chain]
        return _sign_variations(at_neg) - _sign_variations(at_pos)

    def count_real_roots_in(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in (lo, hi]; input must be squarefree."""
        chain = self.sturm_chain()
        vals_lo = [s(lo) for s in chain]
        vals_hi = [s(hi) for s in chain]
        return _sign_variations(vals_lo) - _sign_variations(vals_hi)

    def cauchy_bound(self) -> Fraction:
        """B with all real roots in [-B, B]."""
        if self.degree < 1:
            return Fraction(0)
        lc = abs(self.lc)
        return 1 + max(abs(c) / lc for c in self.coeffs[:-1])

    # ------------------------------------------------------------------
    # rational roots

    def rational_roots(self) -> set[Fraction]:
        """Exactly the rational roots of p (no multiplicity).

        Clears denominators and tests divisor pairs of the constant and
        leading integer coefficients; when those integers resist trial
        division, falls back to an exact Sturm-bisection search for the
        integer roots of the associated monic polynomial.
        """
        if self.is_zero():
            raise ValueError("zero polynomial has every rational as a root")
        roots: set[Fraction] = set()
        coeffs = list(self.coeffs)
        # strip powers of x
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        if k:
            roots.add(Fraction(0))
            coeffs = coeffs[k:]
        p = UniPoly(coeffs)
        if p.degree < 1:
            return roots
        _, ints = p.primitive_integer()
        try:
            roots |= _rational_roots_by_divisors(ints)
        except FactorizationError:
            roots |= _rational_roots_by_isolation(ints)
        return roots


def _coerce(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly((value,))


def _sign_variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _rational_roots_by_divisors(ints: tuple[int, ...]) -> set[Fraction]:
    """Root candidates r/s with r | constant, s | leading (classic test)."""
    p = UniPoly(ints)
    num_divs = divisors(ints[0])
    den_divs = divisors(ints[-1])
    if len(num_divs) * len(den_divs) > 200_000:
        raise FactorizationError("divisor search space too large")
    roots = set()
    for s in den_divs:
        for r in num_divs:
            cand = Fraction(r, s)
            if p(cand) == 0:
                roots.add(cand)
            if p(-cand) == 0:
                roots.add(-cand)
    return roots


def _rational_roots_by_isolation(ints: tuple[int, ...]) -> set[Fraction]:
    """Rational roots via integer roots of the monic substitution y = lc*x.

    Q(y) = lc^(d-1) * P(y/lc) is monic with integer coefficients; the
    rational roots of P are n/lc for the integer roots n of Q, and those
    are pinned down exactly by Sturm counts on bisected integer intervals.
    """
    d = len(ints) - 1
    lead = ints[-1]
    q = UniPoly([c * lead ** (d - 1 - i) for i, c in enumerate(ints)])
    q = q.squarefree_part()
    chain = q.sturm_chain()

    def variations_at(t: int) -> int:
        return _sign_variations([s(t) for s in chain])

    bound = int(q.cauchy_bound()) + 1
    roots: set[Fraction] = set()
    stack = [(-bound, bound, variations_at(-bound), variations_at(bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        if vlo == vhi:
            continue
        if hi - lo == 1:
            # only integer candidate in (lo, hi] is hi itself
            if q(hi) == 0:
                roots.add(Fraction(hi, lead))
            continue
        mid = (lo + hi) // 2
        vmid = variations_at(mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    return roots


def rational_roots(p: UniPoly) -> set[Fraction]:
    return p.rational_roots()


def discriminant(p: UniPoly) -> Fraction:
    return p.discriminant()


def count_real_roots(p: UniPoly) -> int:
    return p.count_real_roots()
