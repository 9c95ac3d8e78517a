"""Galois group of an irreducible x^4 + a*x^3 + d over Q.

The group is read off the cubic resolvent following Kappe and Warren.
``frobenius_sample`` gives an independent, probabilistic check: for primes p
not dividing the discriminant, the factor degrees of f mod p form the cycle
type of a Frobenius element.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from itertools import count

from .errors import NotIrreducible
from .exactint import is_perfect_square, is_prime, squarefree_kernel
from .polyops import distinct_degree_pattern, mod_reduce
from .quartic import ResolventKind, Trinomial, delta, disc, is_irreducible, resolvent_roots

CycleType = tuple[int, ...]

IDENTITY: CycleType = (1, 1, 1, 1)
TRANSPOSITION: CycleType = (2, 1, 1)
DOUBLE_TRANSPOSITION: CycleType = (2, 2)
THREE_CYCLE: CycleType = (3, 1)
FOUR_CYCLE: CycleType = (4,)


class GaloisGroup(str, Enum):
    C4 = "C4"
    V4 = "V4"
    D4 = "D4"
    A4 = "A4"
    S4 = "S4"

    @property
    def order(self) -> int:
        return _ORDERS[self]

    @property
    def cycle_types(self) -> frozenset[CycleType]:
        return _ADMISSIBLE[self]


_ORDERS = {GaloisGroup.C4: 4, GaloisGroup.V4: 4, GaloisGroup.D4: 8, GaloisGroup.A4: 12, GaloisGroup.S4: 24}

_ADMISSIBLE = {
    GaloisGroup.C4: frozenset({IDENTITY, DOUBLE_TRANSPOSITION, FOUR_CYCLE}),
    GaloisGroup.V4: frozenset({IDENTITY, DOUBLE_TRANSPOSITION}),
    GaloisGroup.D4: frozenset({IDENTITY, TRANSPOSITION, DOUBLE_TRANSPOSITION, FOUR_CYCLE}),
    GaloisGroup.A4: frozenset({IDENTITY, DOUBLE_TRANSPOSITION, THREE_CYCLE}),
    GaloisGroup.S4: frozenset({IDENTITY, TRANSPOSITION, DOUBLE_TRANSPOSITION, THREE_CYCLE, FOUR_CYCLE}),
}


def cycle_label(ct: CycleType) -> str:
    """Exponent notation: (2, 1, 1) -> '2.1^2'."""
    parts = []
    for size, mult in sorted(Counter(ct).items(), reverse=True):
        parts.append(str(size) if mult == 1 else f"{size}^{mult}")
    return ".".join(parts)


def square_in_quadratic_field(n: int, m: int) -> bool:
    """Whether n is a square in Q(sqrt(m)), m squarefree and nonzero."""
    if n == 0:
        return True
    k = squarefree_kernel(n)
    return k == 1 or k == m


def galois_group(t: Trinomial) -> GaloisGroup:
    if not is_irreducible(t):
        raise NotIrreducible(f"{t} is reducible over Q")
    res = resolvent_roots(t)
    if res.kind is ResolventKind.SPLITS_COMPLETELY:
        return GaloisGroup.V4
    if res.kind is ResolventKind.IRREDUCIBLE:
        return GaloisGroup.A4 if is_perfect_square(delta(t)) else GaloisGroup.S4
    root = res.t
    # L = Q(sqrt(m)) splits the resolvent's quadratic cofactor.
    m = squarefree_kernel(16 * t.d - 3 * root**2)
    # g(x) = (x^2 - t x + d)(x^2 + a x - t) splits over L iff both
    # quadratic discriminants are squares in L.
    if square_in_quadratic_field(root**2 - 4 * t.d, m) and square_in_quadratic_field(t.a**2 + 4 * root, m):
        return GaloisGroup.C4
    return GaloisGroup.D4


def frobenius_sample(t: Trinomial, prime_count: int, seed: int = 0) -> Counter:
    """Cycle-type counts over the first prime_count primes not dividing Delta(f).

    Primes are taken in ascending order, so the result is deterministic;
    ``seed`` is accepted for interface stability and does not alter the walk.
    """
    if prime_count < 1:
        raise ValueError("prime_count must be positive")
    if not is_irreducible(t):
        raise NotIrreducible(f"{t} is reducible over Q")
    big_delta = disc(t)
    observed: Counter = Counter()
    taken = 0
    for p in count(2):
        if taken == prime_count:
            break
        if not is_prime(p) or big_delta % p == 0:
            continue
        pattern = distinct_degree_pattern(mod_reduce(t.poly, p))
        ct = tuple(sorted(pattern.elements(), reverse=True))
        observed[ct] += 1
        taken += 1
    return observed


def group_consistent(g: GaloisGroup, observed) -> bool:
    return all(ct in g.cycle_types for ct in observed)
