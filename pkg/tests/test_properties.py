"""Algebraic properties of the n-way GCDs, checked with hypothesis and exhaustive grids."""
import itertools
import math

from hypothesis import given, settings, strategies as st

from ngcd.core import (
    ALGORITHMS,
    binary_gcd_n,
    binary_gcd_n_literal,
    gcd_n,
    gcd_n_literal,
    gcd_pair,
    halve_all_step,
    halve_one_step,
    least_nonzero_pivot,
    mod_reduce_step,
    subtract_step,
)
from ngcd.oracle import oracle_gcd_bruteforce, oracle_gcd_factorization

big = st.integers(min_value=0, max_value=2**256)
small = st.integers(min_value=0, max_value=10**5)
big_lists = st.lists(big, min_size=1, max_size=64)
small_lists = st.lists(small, min_size=1, max_size=8)


def all_results(xs):
    return {name: alg(xs).gcd for name, alg in ALGORITHMS.items()} | {
        "gcd-n-literal": gcd_n_literal(xs).gcd,
        "binary-gcd-n-literal": binary_gcd_n_literal(xs).gcd,
    }


@settings(max_examples=200, deadline=None)
@given(big_lists)
def test_equivalence_large(xs):
    results = all_results(xs)
    assert set(results.values()) == {math.gcd(*xs)}, results


@given(small_lists)
def test_equivalence_against_oracles(xs):
    expected = oracle_gcd_factorization(xs)
    assert oracle_gcd_bruteforce(xs) == expected
    assert set(all_results(xs).values()) == {expected}


@given(small_lists)
def test_divisibility(xs):
    g = gcd_n(xs).gcd
    assert all(x % g == 0 for x in xs) if g else not any(xs)
    nonzero = [x for x in xs if x]
    if nonzero:
        for m in range(1, min(nonzero) + 1):
            if all(x % m == 0 for x in xs):
                assert g % m == 0


def test_divisibility_exhaustive_small():
    for xs in itertools.product(range(10), repeat=3):
        g = binary_gcd_n(xs).gcd
        common = [m for m in range(1, 10) if all(x % m == 0 for x in xs)]
        if any(xs):
            assert all(x % g == 0 for x in xs)
            assert all(g % m == 0 for m in common)
        else:
            assert g == 0


def test_associativity_exhaustive():
    r = range(21)
    for a, b, c in itertools.product(r, r, r):
        assert gcd_pair(a, gcd_pair(b, c)) == gcd_pair(gcd_pair(a, b), c)


@given(st.lists(big, min_size=1, max_size=16), st.sampled_from([2, 3, 5]))
def test_scaling(xs, c):
    for alg in (gcd_n, binary_gcd_n):
        assert alg([c * x for x in xs]).gcd == c * alg(xs).gcd


@given(st.lists(small, min_size=1, max_size=8).filter(any))
def test_mod_reduce_step_sound(xs):
    pivot = least_nonzero_pivot(xs)
    assert oracle_gcd_factorization(mod_reduce_step(xs, pivot)) == oracle_gcd_factorization(xs)


@given(st.lists(small, min_size=1, max_size=8).filter(any))
def test_subtract_step_sound(xs):
    pivot = least_nonzero_pivot(xs)
    assert oracle_gcd_factorization(subtract_step(xs, pivot)) == oracle_gcd_factorization(xs)


@given(st.lists(small, min_size=1, max_size=8).filter(any))
def test_halve_all_step_sound(xs):
    evens = [2 * x for x in xs]
    halved, inc = halve_all_step(evens)
    assert oracle_gcd_factorization(evens) == 2**inc * oracle_gcd_factorization(halved)


@given(st.lists(small, min_size=2, max_size=8), st.data())
def test_halve_one_step_sound(xs, data):
    # halving one even element is sound when some element is odd
    xs = [2 * x + 1 if i == 0 else x for i, x in enumerate(xs)]
    candidates = [i for i, x in enumerate(xs) if x and x % 2 == 0]
    if not candidates:
        return
    i = data.draw(st.sampled_from(candidates))
    ys = list(xs)
    ys[i] = halve_one_step(ys[i])
    assert oracle_gcd_factorization(ys) == oracle_gcd_factorization(xs)


@given(st.integers(min_value=1, max_value=64))
def test_zero_laws(n):
    for alg in ALGORITHMS.values():
        assert alg([0] * n).gcd == 0
        assert alg([12345] + [0] * (n - 1)).gcd == 12345


@settings(max_examples=50)
@given(small_lists)
def test_deterministic(xs):
    assert gcd_n(xs, trace=True) == gcd_n(xs, trace=True)
    assert binary_gcd_n(xs, trace=True) == binary_gcd_n(xs, trace=True)
