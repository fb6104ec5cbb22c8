"""Hypergeometric terms built from binomials, bases, signs and polynomials.

A term is the product

    (-1)^(sign) * prod base_i^(e_i) * prod binom(top_j, bottom_j)^(p_j)
        * numer_poly / denom_poly

where sign and every exponent e_i, top_j, bottom_j is an integer linear
form in n and k. Binomials are stored as binomials so evaluation can use
the zero convention; they are expanded into factorial triples only inside
the two quotient operations, which return formal RationalFunction values.
Formal identities are therefore only asserted on grids where no factorial
argument goes negative.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import binomial
from .polyalg import BivarPoly, RationalFunction

DEFAULT_MAX_SHIFT = 4


class TermEvalError(ValueError):
    """A term could not be evaluated at a point (zero denominator, 0^-p)."""


class NotProportionalError(ValueError):
    """Two terms whose quotient is not a rational function of n and k."""


@dataclass(frozen=True)
class LinearForm:
    """The integer linear form a*n + b*k + c."""

    a: int = 0
    b: int = 0
    c: int = 0

    def evaluate(self, n: int, k: int) -> int:
        return self.a * n + self.b * k + self.c

    def offset(self, dn: int, dk: int) -> int:
        """Change in value under n -> n+dn, k -> k+dk."""
        return self.a * dn + self.b * dk

    @property
    def slope(self) -> tuple[int, int]:
        return (self.a, self.b)

    def is_constant(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.a - other.a, self.b - other.b, self.c - other.c)

    def scale(self, m: int) -> "LinearForm":
        return LinearForm(self.a * m, self.b * m, self.c * m)

    def as_poly(self) -> BivarPoly:
        return BivarPoly.linear(self.a, self.b, self.c)

    def render(self) -> str:
        return self.as_poly().render()


ZERO_FORM = LinearForm(0, 0, 0)


@dataclass(frozen=True)
class BaseFactor:
    """base ** (integer linear form); |base| must be at least 2."""

    base: int
    exponent: LinearForm


@dataclass(frozen=True)
class BinomFactor:
    """binom(top, bottom) ** power with the zero convention at evaluation."""

    top: LinearForm
    bottom: LinearForm
    power: int = 1


@dataclass(frozen=True)
class HypergeometricTerm:
    sign_exponent: LinearForm = ZERO_FORM
    base_factors: tuple[BaseFactor, ...] = ()
    binom_factors: tuple[BinomFactor, ...] = ()
    numer_poly: BivarPoly = field(default_factory=lambda: BivarPoly.const(1))
    denom_poly: BivarPoly = field(default_factory=lambda: BivarPoly.const(1))

    def __post_init__(self) -> None:
        for bf in self.base_factors:
            if abs(bf.base) < 2:
                raise ValueError(f"base {bf.base} must have absolute value >= 2")
        if self.denom_poly.is_zero():
            raise ValueError("denominator polynomial is zero")


@dataclass(frozen=True)
class TermDocument:
    """A named term plus the free-text note carried by its DSL source."""

    name: str
    term: HypergeometricTerm
    note: str = ""

    def __post_init__(self) -> None:
        if not self.name or any(ch.isspace() for ch in self.name):
            raise ValueError(f"invalid term name {self.name!r}")


def eval_term(term: HypergeometricTerm, n: int, k: int) -> Fraction:
    """Exact value of the term at integer (n, k).

    A binomial factor that vanishes under the zero convention makes the
    whole term 0 when its power is positive; vanishing under a negative
    power raises TermEvalError, as does a zero denominator polynomial.
    """
    den = term.denom_poly.evaluate(n, k)
    if den == 0:
        raise TermEvalError(f"denominator polynomial vanishes at (n={n}, k={k})")
    vanishes = False
    binom_value = Fraction(1)
    for bf in term.binom_factors:
        v = binomial(bf.top.evaluate(n, k), bf.bottom.evaluate(n, k))
        if v == 0:
            if bf.power < 0:
                raise TermEvalError(
                    f"binom({bf.top.render()},{bf.bottom.render()}) is 0 at "
                    f"(n={n}, k={k}) but has power {bf.power}")
            vanishes = True
        elif not vanishes:
            binom_value *= Fraction(v) ** bf.power
    if vanishes:
        return Fraction(0)
    value = binom_value * term.numer_poly.evaluate(n, k) / den
    for bf in term.base_factors:
        value *= Fraction(bf.base) ** bf.exponent.evaluate(n, k)
    if term.sign_exponent.evaluate(n, k) % 2:
        value = -value
    return value


def _factorial_atoms(term: HypergeometricTerm) -> dict[LinearForm, int]:
    """Signed multiset of factorial arguments from the binomial factors.

    binom(t, b)^p contributes t! to the power p and b!, (t-b)! to the
    power -p. Exponents accumulate; zero entries are dropped.
    """
    atoms: Counter[LinearForm] = Counter()
    for bf in term.binom_factors:
        atoms[bf.top] += bf.power
        atoms[bf.bottom] -= bf.power
        atoms[bf.top - bf.bottom] -= bf.power
    return {L: e for L, e in atoms.items() if e}


def shift_quotient(term: HypergeometricTerm, dn: int, dk: int,
                   max_shift: int = DEFAULT_MAX_SHIFT) -> RationalFunction:
    """term(n+dn, k+dk) / term(n, k) as a formal rational function.

    Each factorial atom L! turns into the finite product (L+1)...(L+d)
    when its argument grows by d, and into the reciprocal of L(L-1)...
    when it shrinks; bases and signs contribute constants.
    """
    if abs(dn) > max_shift or abs(dk) > max_shift:
        raise ValueError(f"shift ({dn},{dk}) exceeds bound {max_shift}")
    factors: Counter[BivarPoly] = Counter()
    for L, e in _factorial_atoms(term).items():
        d = L.offset(dn, dk)
        if d > 0:
            for j in range(1, d + 1):
                factors[LinearForm(L.a, L.b, L.c + j).as_poly()] += e
        else:
            for j in range(0, -d):
                factors[LinearForm(L.a, L.b, L.c - j).as_poly()] -= e
    scalar = Fraction(1)
    for bf in term.base_factors:
        scalar *= Fraction(bf.base) ** bf.exponent.offset(dn, dk)
    if term.sign_exponent.offset(dn, dk) % 2:
        scalar = -scalar
    factors[term.numer_poly.shift(dn, dk)] += 1
    factors[term.numer_poly] -= 1
    factors[term.denom_poly] += 1
    factors[term.denom_poly.shift(dn, dk)] -= 1
    return RationalFunction.from_factors(factors, scalar)


def _prime_factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def term_quotient(t1: HypergeometricTerm,
                  t2: HypergeometricTerm) -> RationalFunction:
    """t1(n, k) / t2(n, k) as a formal rational function.

    Factorial atoms are grouped by slope (a, b); within a slope the
    exponents must sum to zero, and every atom is rewritten relative to
    the smallest constant offset so the shared factorial cancels and
    only finite products of linear forms remain. Bases are compared
    prime by prime (negative bases fold their sign into the sign form).
    Raises NotProportionalError when any of that fails.
    """
    atoms: Counter[LinearForm] = Counter(_factorial_atoms(t1))
    for L, e in _factorial_atoms(t2).items():
        atoms[L] -= e

    by_slope: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for L, e in atoms.items():
        if e:
            by_slope.setdefault(L.slope, []).append((L.c, e))

    factors: Counter[BivarPoly] = Counter()
    for (a, b), offsets in sorted(by_slope.items()):
        if sum(e for _, e in offsets):
            raise NotProportionalError(
                f"factorial atoms with slope ({a},{b}) do not cancel")
        c_min = min(c for c, _ in offsets)
        for c, e in offsets:
            for j in range(c_min + 1, c + 1):
                factors[LinearForm(a, b, j).as_poly()] += e

    sign = t1.sign_exponent - t2.sign_exponent
    prime_exps: dict[int, LinearForm] = {}
    for sgn, term in ((1, t1), (-1, t2)):
        for bf in term.base_factors:
            if bf.base < 0:
                sign = sign + bf.exponent.scale(sgn)
            for p, m in _prime_factorize(abs(bf.base)).items():
                cur = prime_exps.get(p, ZERO_FORM)
                prime_exps[p] = cur + bf.exponent.scale(sgn * m)

    scalar = Fraction(1)
    for p in sorted(prime_exps):
        L = prime_exps[p]
        if not L.is_constant():
            raise NotProportionalError(
                f"base {p} carries a non-constant exponent {L.render()}")
        scalar *= Fraction(p) ** L.c
    if sign.a % 2 or sign.b % 2:
        raise NotProportionalError(
            f"sign exponent {sign.render()} is not constant modulo 2")
    if sign.c % 2:
        scalar = -scalar

    factors[t1.numer_poly] += 1
    factors[t1.denom_poly] -= 1
    factors[t2.numer_poly] -= 1
    factors[t2.denom_poly] += 1
    return RationalFunction.from_factors(factors, scalar)
