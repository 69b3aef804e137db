"""Integer ideal arithmetic and canonical coset representatives."""

import random

from torsion_border.coeff_ring import (
    CoefIdeal,
    combine_to_gcd,
    coset_rep,
    extended_gcd,
    ideal_contains,
    ideal_from_generators,
    ideal_subset,
    ideal_sum,
)


def test_from_generators():
    assert ideal_from_generators([3, 4]) == CoefIdeal(1)
    assert ideal_from_generators([]) == CoefIdeal(0)
    assert ideal_from_generators([6, 10, -4]) == CoefIdeal(2)


def test_contains():
    assert ideal_contains(CoefIdeal(4), 8)
    assert not ideal_contains(CoefIdeal(0), 3)
    assert ideal_contains(CoefIdeal(0), 0)
    assert not ideal_contains(CoefIdeal(3), 4)


def test_sum():
    assert ideal_sum(CoefIdeal(3), CoefIdeal(4)) == CoefIdeal(1)
    assert ideal_sum(CoefIdeal(0), CoefIdeal(7)) == CoefIdeal(7)
    assert ideal_sum(CoefIdeal(6), CoefIdeal(10)) == CoefIdeal(2)


def test_coset_rep():
    assert coset_rep(CoefIdeal(4), 5).value == 1
    assert coset_rep(CoefIdeal(0), -7).value == -7
    assert coset_rep(CoefIdeal(3), -2).value == 1


def test_subset():
    assert ideal_subset(CoefIdeal(4), CoefIdeal(2))
    assert not ideal_subset(CoefIdeal(2), CoefIdeal(4))
    assert ideal_subset(CoefIdeal(0), CoefIdeal(17))
    assert not ideal_subset(CoefIdeal(17), CoefIdeal(0))
    assert ideal_subset(CoefIdeal(5), CoefIdeal(1))


def test_from_generators_permutation_and_sign_invariant(rng):
    for _ in range(200):
        gens = [rng.randint(-40, 40) for _ in range(rng.randint(0, 6))]
        base = ideal_from_generators(gens)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        flipped = [-g if rng.random() < 0.5 else g for g in shuffled]
        assert ideal_from_generators(flipped) == base


def test_contains_iff_zero_coset(rng):
    for _ in range(300):
        ideal = CoefIdeal(rng.randint(0, 12))
        a = rng.randint(-50, 50)
        assert ideal.contains(a) == (ideal.coset_rep_value(a) == 0)


def test_sum_algebra(rng):
    for _ in range(200):
        a, b, c = (CoefIdeal(rng.randint(0, 30)) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a + a == a
        assert a + CoefIdeal(1) == CoefIdeal(1)


def test_coset_rep_properties(rng):
    for _ in range(300):
        m = rng.randint(1, 20)
        ideal = CoefIdeal(m)
        a = rng.randint(-100, 100)
        r = ideal.coset_rep_value(a)
        assert 0 <= r < m
        assert ideal.contains(r - a)
        assert ideal.coset_rep_value(r) == r


def test_extended_gcd(rng):
    import math

    for _ in range(400):
        a = rng.randint(-60, 60)
        b = rng.randint(-60, 60)
        g, u, v = extended_gcd(a, b)
        assert g == math.gcd(a, b)
        assert u * a + v * b == g


def test_combine_to_gcd(rng):
    import math

    for _ in range(300):
        values = [rng.randint(-60, 60) for _ in range(rng.randint(1, 5))]
        g, coeffs = combine_to_gcd(values)
        expected = 0
        for v in values:
            expected = math.gcd(expected, v)
        assert g == expected
        assert sum(c * v for c, v in zip(coeffs, values)) == g
