"""Dense univariate polynomials over Z and over GF(q).

Coefficient tuples are stored in ascending degree order and normalized so the
last entry is nonzero; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import DegreeTooSmall, ModulusMismatch, NotSquarefree


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _fmt(coeffs: tuple[int, ...], var: str = "x") -> str:
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not terms:
            terms.append(f"-{body}" if c < 0 else body)
        else:
            terms.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(terms)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPoly(out)

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __str__(self):
        return _fmt(self.coeffs)


@dataclass(frozen=True)
class ModPoly:
    q: int
    coeffs: tuple[int, ...]

    def __init__(self, q: int, coeffs):
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", _trim(int(c) % q for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def monic(self) -> ModPoly:
        if not self.coeffs:
            return self
        inv = pow(self.lead, -1, self.q)
        return ModPoly(self.q, (c * inv for c in self.coeffs))

    def _check(self, other: ModPoly) -> None:
        if self.q != other.q:
            raise ModulusMismatch(f"moduli {self.q} and {other.q} differ")

    def __add__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return ModPoly(self.q, (x + y for x, y in zip(a, b)))

    def __sub__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        return self + ModPoly(self.q, (-c for c in other.coeffs))

    def __mul__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return ModPoly(self.q, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return ModPoly(self.q, out)

    def __divmod__(self, other: ModPoly) -> tuple[ModPoly, ModPoly]:
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        q = self.q
        rem = list(self.coeffs)
        dv = other.coeffs
        inv = pow(dv[-1], -1, q)
        quo = [0] * max(len(rem) - len(dv) + 1, 0)
        for shift in range(len(rem) - len(dv), -1, -1):
            c = rem[shift + len(dv) - 1] * inv % q
            quo[shift] = c
            if c:
                for i, y in enumerate(dv):
                    rem[shift + i] = (rem[shift + i] - c * y) % q
        return ModPoly(q, quo), ModPoly(q, rem)

    def __floordiv__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[1]

    def derivative(self) -> ModPoly:
        return ModPoly(self.q, (i * c for i, c in enumerate(self.coeffs) if i))

    def lift(self) -> IntPoly:
        """Integer polynomial with the stored residues in [0, q)."""
        return IntPoly(self.coeffs)

    def __str__(self):
        return f"{_fmt(self.coeffs)} (mod {self.q})"


def _bareiss_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(p: IntPoly, s: IntPoly) -> list[list[int]]:
    m, n = p.degree, s.degree
    size = m + n
    top = list(reversed(p.coeffs))
    bottom = list(reversed(s.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + top + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + bottom + [0] * (size - n - 1 - i))
    return rows


def resultant(p: IntPoly, s: IntPoly) -> int:
    return _bareiss_det(sylvester_matrix(p, s))


def discriminant_resultant(p: IntPoly) -> int:
    """Discriminant as (-1)^(n(n-1)/2) * Res(p, p') / lc(p).

    >>> discriminant_resultant(IntPoly([2, 0, 0, 2, 1]))
    320
    """
    n = p.degree
    if n < 1:
        raise DegreeTooSmall(f"discriminant needs degree >= 1, got {n}")
    if n == 1:
        return 1
    res = resultant(p, p.derivative())
    quo, rem = divmod(res, p.lead)
    assert rem == 0, "Res(p, p') must be divisible by lc(p)"
    return -quo if (n * (n - 1) // 2) % 2 else quo


def mod_reduce(p: IntPoly, q: int) -> ModPoly:
    return ModPoly(q, p.coeffs)


def mod_gcd(p: ModPoly, s: ModPoly) -> ModPoly:
    """Monic gcd over GF(q)."""
    p._check(s)
    if p.is_zero() and s.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not s.is_zero():
        p, s = s, p % s
    return p.monic()


def _qth_root(p: ModPoly) -> ModPoly:
    # Valid only when p' = 0, i.e. every exponent is a multiple of q.
    # Over GF(q) each coefficient is its own q-th root.
    return ModPoly(p.q, p.coeffs[:: p.q])


def radical_mod(p: ModPoly) -> ModPoly:
    """Product of the distinct monic irreducible factors of p."""
    p = p.monic()
    if p.degree < 1:
        return ModPoly(p.q, (1,))
    dp = p.derivative()
    if dp.is_zero():
        return radical_mod(_qth_root(p))
    g = mod_gcd(p, dp)
    w = p // g  # factors whose multiplicity is prime to q, each once
    rest = g
    common = mod_gcd(rest, w)
    while common.degree > 0:
        rest = rest // common
        common = mod_gcd(rest, w)
    # rest now only holds factors with multiplicity divisible by q
    if rest.degree < 1:
        return w.monic()
    return (w * radical_mod(_qth_root(rest.monic()))).monic()


def _powmod(base: ModPoly, e: int, mod: ModPoly) -> ModPoly:
    result = ModPoly(base.q, (1,)) % mod
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def distinct_degree_pattern(p: ModPoly) -> Counter:
    """Degrees of the irreducible factors of a squarefree p over GF(q).

    Returned as a Counter mapping degree to multiplicity.
    """
    q = p.q
    p = p.monic()
    if p.degree > 0 and mod_gcd(p, p.derivative()).degree > 0:
        raise NotSquarefree(f"{p} is not squarefree")
    pattern: Counter = Counter()
    x = ModPoly(q, (0, 1))
    h = x % p if p.degree > 0 else x
    i = 0
    while p.degree >= 2 * (i + 1):
        i += 1
        h = _powmod(h, q, p)
        g = mod_gcd(p, h - x)
        if g.degree > 0:
            pattern[i] += g.degree // i
            p = p // g
            h = h % p
    if p.degree > 0:
        pattern[p.degree] += 1
    return pattern
