"""Ground-truth GCDs that share no code with the algorithms under test.

Both oracles are deliberately naive and bounded:

* ``oracle_gcd_factorization`` factors every non-zero input by trial
  division and multiplies the primes raised to their minimum exponent.
* ``oracle_gcd_bruteforce`` scans candidate divisors downward from the
  smallest non-zero input.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

FACTOR_BOUND = 2**64
SCAN_BOUND = 10**6


class OracleBoundError(ValueError):
    """Input is too large for a desk-scale oracle."""


@dataclass(frozen=True)
class Factorization:
    factors: dict[int, int] = field(default_factory=dict)
    zero: bool = False

    @property
    def value(self) -> int:
        if self.zero:
            return 0
        out = 1
        for p, e in self.factors.items():
            out *= p**e
        return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(x: int, bound: int = FACTOR_BOUND) -> Factorization:
    """Prime factorization by trial division, primes in ascending order.

    Raises ValueError for 0 and OracleBoundError above ``bound``.
    """
    if x < 0:
        raise ValueError("negative input")
    if x == 0:
        raise ValueError("0 has no prime factorization")
    if x > bound:
        raise OracleBoundError(f"{x} exceeds the factorization oracle bound {bound}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= x:
        while x % d == 0:
            factors[d] = factors.get(d, 0) + 1
            x //= d
        d += 1 if d == 2 else 2
    if x > 1:
        factors[x] = factors.get(x, 0) + 1
    return Factorization(factors)


def oracle_gcd_factorization(xs: Sequence[int], bound: int = FACTOR_BOUND) -> int:
    nonzero = [x for x in xs if x]
    if not nonzero:
        return 0
    for x in nonzero:
        if x > bound:
            raise OracleBoundError(f"{x} exceeds the factorization oracle bound {bound}")
    facs = [factorize(x, bound).factors for x in nonzero]
    common = set(facs[0])
    for f in facs[1:]:
        common &= set(f)
    result = 1
    for p in sorted(common):
        result *= p ** min(f[p] for f in facs)
    return result


def oracle_gcd_bruteforce(xs: Sequence[int], bound: int = SCAN_BOUND) -> int:
    nonzero = [x for x in xs if x]
    if not nonzero:
        return 0
    smallest = min(nonzero)
    if smallest > bound:
        raise OracleBoundError(
            f"smallest non-zero input {smallest} exceeds the brute-force scan bound {bound}"
        )
    for m in range(smallest, 0, -1):
        if all(x % m == 0 for x in nonzero):
            return m
    raise AssertionError("unreachable: 1 divides everything")
