"""The trinomial f(x) = x^4 + a*x^3 + d and its cubic resolvent."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateDiscriminant, InvalidTrinomial
from .exactint import Factorization, divisors, factorize, is_perfect_square
from .polyops import IntPoly


@dataclass(frozen=True, order=True)
class Trinomial:
    a: int
    d: int

    def __post_init__(self):
        if self.a == 0 or self.d == 0:
            raise InvalidTrinomial("a and d must be nonzero")

    @property
    def poly(self) -> IntPoly:
        return IntPoly([self.d, 0, 0, self.a, 1])

    def __str__(self):
        return str(self.poly)


class ResolventKind(str, Enum):
    IRREDUCIBLE = "Irreducible"
    ONE_INTEGER_ROOT = "OneIntegerRoot"
    SPLITS_COMPLETELY = "SplitsCompletely"


@dataclass(frozen=True)
class ResolventAnalysis:
    kind: ResolventKind
    t: int | None = None
    roots: tuple[int, ...] | None = None

    @property
    def integer_roots(self) -> tuple[int, ...]:
        if self.kind is ResolventKind.ONE_INTEGER_ROOT:
            return (self.t,)
        return self.roots or ()


@dataclass(frozen=True)
class ReducibilityWitness:
    """Either an integer root or a pair of monic integer quadratics.

    ``repeated_root`` flags the Delta = 0 shortcut; the root or quadratic
    pair is still filled in whenever one exists.
    """

    root: int | None = None
    quadratics: tuple[IntPoly, IntPoly] | None = None
    repeated_root: bool = False

    def factors(self, f: IntPoly) -> list[IntPoly]:
        if self.root is not None:
            linear = IntPoly([-self.root, 1])
            return [linear, _exact_quotient(f, linear)]
        if self.quadratics is not None:
            return list(self.quadratics)
        return [f]

    def describe(self) -> str:
        if self.root is not None:
            return f"root {self.root}"
        if self.quadratics is not None:
            g, h = self.quadratics
            return f"({g})*({h})"
        return "repeated root"


def _exact_quotient(f: IntPoly, g: IntPoly) -> IntPoly:
    """f / g over Z for monic g dividing f."""
    rem = list(f.coeffs)
    dg = g.degree
    quo = [0] * (f.degree - dg + 1)
    for shift in range(f.degree - dg, -1, -1):
        c = rem[shift + dg]
        quo[shift] = c
        for i, y in enumerate(g.coeffs):
            rem[shift + i] -= c * y
    assert not any(rem), "divisor does not divide exactly"
    return IntPoly(quo)


def delta(t: Trinomial) -> int:
    return 256 * t.d - 27 * t.a**4


def disc(t: Trinomial) -> int:
    return t.d**2 * delta(t)


def resolvent(t: Trinomial) -> IntPoly:
    return IntPoly([-t.a**2 * t.d, -4 * t.d, 0, 1])


def _signed_divisors(f: Factorization) -> list[int]:
    pos = divisors(f)
    return sorted([-x for x in pos] + pos)


def _merge(*fs: Factorization) -> Factorization:
    exps: dict[int, int] = {}
    sign = 1
    for f in fs:
        sign *= f.sign
        for p, e in f.factors:
            exps[p] = exps.get(p, 0) + e
    return Factorization(sign, tuple(sorted(exps.items())))


def reducibility_witness(t: Trinomial) -> ReducibilityWitness | None:
    """A factorization of f over Z, or None when f is irreducible over Q."""
    f = t.poly
    d_divs = _signed_divisors(factorize(t.d))
    for r in d_divs:
        if f(r) == 0:
            return ReducibilityWitness(root=r, repeated_root=disc(t) == 0)
    # (x^2+Ax+B)(x^2+Cx+D) with C = a - A: AD + BC = 0 forces A(D - B) = -aB.
    # B = D would need aB = 0, which ad != 0 rules out.
    for b in d_divs:
        dd = t.d // b
        if dd == b:
            continue
        num, den = -t.a * b, dd - b
        if num % den:
            continue
        big_a = num // den
        big_c = t.a - big_a
        if big_a * big_c + b + dd == 0:
            pair = (IntPoly([b, big_a, 1]), IntPoly([dd, big_c, 1]))
            return ReducibilityWitness(quadratics=pair, repeated_root=disc(t) == 0)
    if disc(t) == 0:
        # Unreachable for monic quartics (a repeated root yields a root or a
        # square quadratic factor), kept as the stated short-circuit.
        return ReducibilityWitness(repeated_root=True)
    return None


def is_irreducible(t: Trinomial) -> bool:
    if disc(t) == 0:
        return False
    return reducibility_witness(t) is None


def resolvent_roots(t: Trinomial) -> ResolventAnalysis:
    if disc(t) == 0:
        raise DegenerateDiscriminant(f"{t} has zero discriminant")
    r = resolvent(t)
    # Rational roots of a monic integer cubic are integer divisors of a^2 d.
    fa = factorize(t.a)
    candidates = _signed_divisors(_merge(fa, fa, factorize(t.d)))
    roots = tuple(x for x in candidates if r(x) == 0)
    if not roots:
        return ResolventAnalysis(ResolventKind.IRREDUCIBLE)
    if len(roots) == 3:
        assert sum(roots) == 0
        return ResolventAnalysis(ResolventKind.SPLITS_COMPLETELY, roots=roots)
    if len(roots) == 1:
        (root,) = roots
        # The cofactor x^2 + t x + t^2 - 4d must not split over Z.
        assert not is_perfect_square(16 * t.d - 3 * root**2)
        return ResolventAnalysis(ResolventKind.ONE_INTEGER_ROOT, t=root)
    raise AssertionError(f"cubic with distinct roots has {len(roots)} integer roots")
