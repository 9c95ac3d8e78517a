"""Monogenicity of x^4 + a*x^3 + d.

``jks_check`` applies the prime-by-prime trinomial criterion of Jakhar,
Khanduja and Sangwan specialised to this quartic shape. ``monogenic_oracle``
is an independent route through Dedekind's index criterion and is only used
to cross-check the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import NotIrreducible
from .exactint import Factorization, factorize
from .polyops import ModPoly, mod_gcd, mod_reduce, radical_mod
from .quartic import Trinomial, delta, disc, is_irreducible


class Branch(str, Enum):
    DIVIDES_D = "DividesD"
    DIVIDES_A_NOT_D = "DividesANotD"
    COPRIME_AD = "CoprimeAD"


@dataclass(frozen=True)
class PrimeVerdict:
    q: int
    branch: Branch
    passed: bool
    detail: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class MonogenicityReport:
    monogenic: bool
    trace: tuple[PrimeVerdict, ...]
    delta_factorization: Factorization

    @property
    def failing_primes(self) -> list[int]:
        return [v.q for v in self.trace if not v.passed]


def _highest_power_dividing_4(q: int) -> int:
    j = 0
    while 4 % q ** (j + 1) == 0:
        j += 1
    return j


def _verdict(t: Trinomial, q: int) -> PrimeVerdict:
    a, d = t.a, t.d
    if d % q == 0:
        return PrimeVerdict(q, Branch.DIVIDES_D, d % (q * q) != 0)
    if a % q == 0:
        a2 = a // q
        j = _highest_power_dividing_4(q)
        num = d + (-d) ** (q**j)
        # q | num always: by Fermat for q = 2, trivially (num = 0) for odd q.
        assert num % q == 0, f"d1 numerator {num} not divisible by {q}"
        d1 = num // q
        first = a2 % q == 0 and d1 % q != 0
        second = (a2 * (-(d**3) * a2**4 - d1**4)) % q != 0
        detail = {"a2": a2, "j": j, "d1": d1, "disjunct": "first" if first else "second" if second else None}
        return PrimeVerdict(q, Branch.DIVIDES_A_NOT_D, first or second, detail)
    return PrimeVerdict(q, Branch.COPRIME_AD, delta(t) % (q * q) != 0)


def jks_check(t: Trinomial) -> MonogenicityReport:
    if not is_irreducible(t):
        raise NotIrreducible(f"{t} is reducible over Q")
    fac = factorize(disc(t))
    trace = tuple(_verdict(t, q) for q in fac.primes)
    return MonogenicityReport(all(v.passed for v in trace), trace, fac)


def dedekind_check(t: Trinomial, q: int) -> bool:
    """True iff q does not divide the index [Z_K : Z[theta]]."""
    if not is_irreducible(t):
        raise NotIrreducible(f"{t} is reducible over Q")
    return _dedekind(t, q)


def _dedekind(t: Trinomial, q: int) -> bool:
    f = t.poly
    fbar = mod_reduce(f, q)
    g = radical_mod(fbar)
    h = fbar // g
    lifted = g.lift() * h.lift() - f
    assert all(c % q == 0 for c in lifted.coeffs)
    big_f = ModPoly(q, (c // q for c in lifted.coeffs))
    if big_f.is_zero():
        return mod_gcd(g, h).is_one()
    return mod_gcd(mod_gcd(big_f, g), h).is_one()


def monogenic_oracle(t: Trinomial) -> bool:
    """Dedekind's criterion at every prime whose square divides Delta(f)."""
    if not is_irreducible(t):
        raise NotIrreducible(f"{t} is reducible over Q")
    fac = factorize(disc(t))
    return all(_dedekind(t, q) for q, e in fac.factors if e >= 2)
