from dataclasses import dataclass
from math import prod

from sympy import divisors as _divisors
from sympy import factorint, isprime


@dataclass(frozen=True)
class DivisorProfile:
    """A positive integer together with its prime factorization."""

    prime_factorization: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.prime_factorization]
        if primes != sorted(set(primes)):
            raise ValueError(f"primes must be strictly increasing, got {primes}")
        for p, e in self.prime_factorization:
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
            if e < 1:
                raise ValueError(f"exponent of {p} must be positive, got {e}")

    @property
    def N(self) -> int:
        return prod(p**e for p, e in self.prime_factorization)


def divisor_profile(N: int) -> DivisorProfile:
    # sigma functions are left undefined at 0
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    return DivisorProfile(tuple(sorted(factorint(N).items())))


def sigma0(profile: DivisorProfile) -> int:
    """Number of positive divisors."""
    return prod(e + 1 for _, e in profile.prime_factorization)


def sigma1(profile: DivisorProfile) -> int:
    """Sum of positive divisors."""
    return prod((p ** (e + 1) - 1) // (p - 1) for p, e in profile.prime_factorization)


def mobius(profile: DivisorProfile) -> int:
    if any(e >= 2 for _, e in profile.prime_factorization):
        return 0
    return (-1) ** len(profile.prime_factorization)


def divisors(profile: DivisorProfile) -> list[int]:
    return [int(d) for d in _divisors(profile.N)]


def mobius_sum(profile: DivisorProfile) -> int:
    """Sum of mu(d) over the divisors d of N; 1 for N = 1 and 0 otherwise."""
    return sum(mobius(divisor_profile(d)) for d in divisors(profile))
