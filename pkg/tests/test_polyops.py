import functools
import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoquartic.errors import DegreeTooSmall, ModulusMismatch, NotSquarefree
from monoquartic.polyops import (
    IntPoly,
    ModPoly,
    discriminant_resultant,
    distinct_degree_pattern,
    mod_gcd,
    mod_reduce,
    radical_mod,
)


def quartic(a, d):
    return IntPoly([d, 0, 0, a, 1])


def monic_polys(q, deg):
    for tail in itertools.product(range(q), repeat=deg):
        yield ModPoly(q, tail + (1,))


@functools.cache
def irreducibles(q, deg):
    """Monic irreducibles of degree deg over GF(q): no monic factor of lower degree."""
    return [
        g
        for g in monic_polys(q, deg)
        if not any((g % h).is_zero() for k in range(1, deg // 2 + 1) for h in irreducibles(q, k))
    ]


def brute_factors(p: ModPoly) -> Counter:
    """Irreducible factors with multiplicity, by trial division over all of them."""
    found = Counter()
    rest = p.monic()
    for deg in range(1, rest.degree + 1):
        for g in irreducibles(p.q, deg):
            while rest.degree >= deg and (rest % g).is_zero():
                rest = rest // g
                found[g.coeffs] += 1
    assert rest.degree == 0
    return found


def brute_pattern(p: ModPoly) -> Counter:
    return Counter(len(c) - 1 for c in brute_factors(p).elements())


@pytest.mark.parametrize(
    "coeffs, expected",
    [([2, 0, 0, 2, 1], 320), ([1, 0, 1], -4), ([-1, -4, 0, 1], 229)],
)
def test_discriminant_examples(coeffs, expected):
    assert discriminant_resultant(IntPoly(coeffs)) == expected


def test_discriminant_degree_zero():
    with pytest.raises(DegreeTooSmall):
        discriminant_resultant(IntPoly([5]))


@given(st.integers(-50, 50).filter(bool), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_cubic_discriminant_textbook(a, b, c, d):
    expected = b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d
    assert discriminant_resultant(IntPoly([d, c, b, a])) == expected


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=4))
def test_discriminant_from_roots(roots):
    # disc of a monic polynomial = prod_{i<j} (r_i - r_j)^2
    p = IntPoly([1])
    for r in roots:
        p = p * IntPoly([-r, 1])
    expected = 1
    for x, y in itertools.combinations(roots, 2):
        expected *= (x - y) ** 2
    assert discriminant_resultant(p) == expected


def test_trinomial_discriminant_closed_form_random():
    rng = random.Random(7)
    for _ in range(1000):
        a = rng.randint(-(10**9), 10**9) or 1
        d = rng.randint(-(10**9), 10**9) or 1
        closed = d * d * (256 * d - 27 * a**4)
        assert discriminant_resultant(quartic(a, d)) == closed
        assert discriminant_resultant(IntPoly([-a * a * d, -4 * d, 0, 1])) == closed


@pytest.mark.parametrize(
    "coeffs, q, expected",
    [([-1, 0, 0, 4, 1], 2, (1, 0, 0, 0, 1)), ([2, 0, 0, 2, 1], 2, (0, 0, 0, 0, 1)), ([-8, -8, 0, 1], 5, (2, 2, 0, 1))],
)
def test_mod_reduce(coeffs, q, expected):
    r = mod_reduce(IntPoly(coeffs), q)
    assert r.coeffs == expected and r.q == q


def test_mod_gcd_examples():
    assert mod_gcd(ModPoly(5, [-1, 0, 1]), ModPoly(5, [-1, 1])).coeffs == (4, 1)
    assert mod_gcd(ModPoly(2, [0, 0, 0, 0, 1]), ModPoly(2, [0, 0, 0, 1])).coeffs == (0, 0, 0, 1)
    f = ModPoly(3, [27, 0, 0, 4, 1])
    assert mod_gcd(f, f.derivative()).degree >= 1


def test_mod_gcd_mismatch():
    with pytest.raises(ModulusMismatch):
        mod_gcd(ModPoly(3, [1, 1]), ModPoly(5, [1, 1]))


def test_mod_gcd_is_common_divisor():
    rng = random.Random(3)
    for q in (2, 3, 5, 7):
        for _ in range(50):
            a = ModPoly(q, [rng.randrange(q) for _ in range(5)] + [1])
            b = ModPoly(q, [rng.randrange(q) for _ in range(4)] + [1])
            g = mod_gcd(a, b)
            assert (a % g).is_zero() and (b % g).is_zero()
            assert g.lead == 1


def test_radical_examples():
    assert radical_mod(ModPoly(2, [0, 0, 0, 0, 1])).coeffs == (0, 1)
    assert radical_mod(ModPoly(2, [1, 0, 0, 0, 1])).coeffs == (1, 1)
    p = ModPoly(7, [1, 2, 3, 1])
    if mod_gcd(p, p.derivative()).is_one():
        assert radical_mod(p) == p


@pytest.mark.parametrize("q", [2, 3, 5])
def test_radical_exhaustive_quartics(q):
    for p in monic_polys(q, 4):
        r = radical_mod(p)
        assert (p % r).is_zero()
        assert r.degree == 0 or mod_gcd(r, r.derivative()).is_one()
        assert Counter(set(brute_factors(p))) == brute_factors(r)


def test_radical_qth_power_case():
    # (x^2 + 1)^3 over GF(3) has zero derivative
    p = ModPoly(3, [1, 0, 1])
    cube = p * p * p
    assert cube.derivative().is_zero()
    assert radical_mod(cube) == p


def test_pattern_examples():
    assert distinct_degree_pattern(ModPoly(2, [1, 0, 0, 1, 1])) == Counter({4: 1})
    f3 = ModPoly(3, [1, 0, 0, 1, 1])
    assert distinct_degree_pattern(f3) == brute_pattern(f3)
    lin = ModPoly(7, [1])
    for r in range(4):
        lin = lin * ModPoly(7, [-r, 1])
    assert distinct_degree_pattern(lin) == Counter({1: 4})


def test_pattern_x4_x3_1_mod_3_frozen():
    # brute force: x^4 + x^3 + 1 = (x + 2)(x^3 + 2x^2 + x + 2) mod 3
    assert brute_pattern(ModPoly(3, [1, 0, 0, 1, 1])) == Counter({1: 1, 3: 1})
    assert distinct_degree_pattern(ModPoly(3, [1, 0, 0, 1, 1])) == Counter({1: 1, 3: 1})


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_pattern_matches_brute_force(q):
    for p in monic_polys(q, 4):
        if not mod_gcd(p, p.derivative()).is_one():
            with pytest.raises(NotSquarefree):
                distinct_degree_pattern(p)
            continue
        pat = distinct_degree_pattern(p)
        assert pat == brute_pattern(p)
        assert sum(k * v for k, v in pat.items()) == 4


@settings(max_examples=50)
@given(st.sampled_from([101, 1009, 10007, 2**61 - 1]), st.lists(st.integers(0, 10**20), min_size=4, max_size=4))
def test_pattern_degrees_sum(q, tail):
    p = ModPoly(q, tail + [1])
    if mod_gcd(p, p.derivative()).is_one():
        pat = distinct_degree_pattern(p)
        assert sum(k * v for k, v in pat.items()) == 4
