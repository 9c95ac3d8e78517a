"""Integer number theory on Python's arbitrary-precision ints.

Factoring is trial division by the primes below ``TRIAL_BOUND`` followed by
Brent's variant of Pollard rho on whatever composite cofactor remains.
Primality is a Miller-Rabin test that is deterministic below 3.317e24.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cache
from itertools import product

from .errors import FactorizationTimeout, NegativeInput, ZeroInput

TRIAL_BOUND = 10**6
RHO_CAP = 2**24

# First 13 primes: a valid deterministic witness set for n < 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_ROUNDS = 40

# Below this many trial primes the cofactor is not yet worth a primality test.
_SMALL_PRIME_LIMIT = 1024


@dataclass(frozen=True)
class Factorization:
    """Signed prime-power decomposition ``sign * prod(p**e)`` of a nonzero int."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        primes = [p for p, _ in self.factors]
        if any(q <= p for p, q in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")

    @property
    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self):
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        if not body:
            return str(self.sign)
        return f"-{body}" if self.sign < 0 else body


@cache
def primes_below(bound: int) -> tuple[int, ...]:
    """All primes p < bound, by a bytearray sieve."""
    if bound < 3:
        return ()
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, bound, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _mr_composite_witness(a: int, n: int, u: int, t: int) -> bool:
    x = pow(a, u, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(t - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    u, t = n - 1, 0
    while u % 2 == 0:
        u //= 2
        t += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        bases = _MR_BASES
    else:
        # Seeded from n so the verdict is reproducible.
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(_MR_ROUNDS)]
    return not any(_mr_composite_witness(a, n, u, t) for a in bases)


def _brent_split(n: int, cap: int) -> int | None:
    """Return a nontrivial factor of the odd composite n, or None after cap steps."""
    steps = 0
    for c in range(1, 64):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            steps += r
            r *= 2
            if steps > cap:
                return None
        if g == n:
            # Batched gcd overshot; back up one step at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


def _split_completely(n: int, cap: int, out: dict[int, int], original: int) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split_completely(r, cap, out, original)
        _split_completely(r, cap, out, original)
        return
    g = _brent_split(n, cap)
    if g is None:
        raise FactorizationTimeout(original, n)
    _split_completely(g, cap, out, original)
    _split_completely(n // g, cap, out, original)


def factorize(n: int, trial_bound: int = TRIAL_BOUND, rho_cap: int = RHO_CAP) -> Factorization:
    """Factor a nonzero integer.

    >>> factorize(320)
    Factorization(sign=1, factors=((2, 6), (5, 1)))
    >>> factorize(-7168).factors
    ((2, 10), (7, 1))
    """
    if n == 0:
        raise ZeroInput("cannot factor 0")
    sign = 1 if n > 0 else -1
    m = abs(n)
    found: dict[int, int] = {}
    for i, p in enumerate(primes_below(trial_bound)):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
            if i >= _SMALL_PRIME_LIMIT and is_prime(m):
                break
        elif i == _SMALL_PRIME_LIMIT and is_prime(m):
            break
    if m > 1:
        _split_completely(m, rho_cap, found, n)
    return Factorization(sign, tuple(sorted(found.items())))


def isqrt(n: int) -> int:
    if n < 0:
        raise NegativeInput(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def squarefree_kernel(n: int) -> int:
    """Signed product of the primes dividing n to an odd power."""
    if n == 0:
        raise ZeroInput("squarefree kernel of 0")
    f = factorize(n)
    k = f.sign
    for p, e in f.factors:
        if e % 2:
            k *= p
    return k


def is_squarefree(n: int) -> bool:
    if n == 0:
        raise ZeroInput("squarefree test of 0")
    return all(e == 1 for _, e in factorize(n).factors)


def valuation(n: int, q: int) -> int:
    if n == 0:
        raise ZeroInput("valuation of 0")
    e = 0
    while n % q == 0:
        n //= q
        e += 1
    return e


def divisors(f: Factorization) -> list[int]:
    """Positive divisors of |f.value| in increasing order."""
    powers = [[p**i for i in range(e + 1)] for p, e in f.factors]
    return sorted(math.prod(combo) for combo in product(*powers))
