from dataclasses import dataclass
from functools import reduce
from math import comb, factorial, gcd, lcm

from sympy import nextprime, primefactors, primerange

from magma_forge.errors import DomainError, FormulaMismatch, NotDivisible


@dataclass(frozen=True)
class AdmissibilityVerdict:
    m: int
    n: int
    least_prime_divisor: int  # 0 for m = 1
    admissible: bool

    def __bool__(self):
        return self.admissible


def least_prime_divisor(m):
    if m < 2:
        raise DomainError(f"least prime divisor needs m >= 2, got {m}")
    return primefactors(m)[0]


def next_prime_after(n):
    """kappa(n): 가장 작은 n 초과 소수"""
    return int(nextprime(n))


def admissible(m, n):
    if m == 1:
        return AdmissibilityVerdict(m, n, 0, False)
    p = least_prime_divisor(m)
    return AdmissibilityVerdict(m, n, p, n < p)


def admissible_by_divisors(m, n):
    return m != 1 and all(m % k for k in range(2, n + 1))


def admissible_by_primes(m, n):
    return m != 1 and all(m % p for p in primerange(2, n + 1))


def binomial_gcd_closed_form(m, n):
    # k^{eps_k(m)} is k when k | m and 1 otherwise
    return m // lcm(*[k if m % k == 0 else 1 for k in range(1, n + 1)])


def gcd_of_binomials(m, n):
    if not m > n >= 1:
        raise DomainError(f"d(m, n) needs m > n >= 1, got m={m}, n={n}")
    d = reduce(gcd, (comb(m, k) for k in range(1, n + 1)))
    closed = binomial_gcd_closed_form(m, n)
    if d != closed:
        raise FormulaMismatch(f"gcd of binomials is {d} but the closed form gives {closed}", (m, n))
    return d


def count_regular_partitions(m, s):
    """P(m, s): partitions of an s-set into m blocks of equal size."""
    if m < 1 or s % m:
        raise NotDivisible(f"{m} does not divide {s}")
    block = s // m
    ordered = 1
    for ell in range(m):
        ordered *= comb(s - ell * block, block)
    assert ordered % factorial(m) == 0
    return ordered // factorial(m)


def count_kset_partitions(m, k):
    return count_regular_partitions(m, comb(m, k))
