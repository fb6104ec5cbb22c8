"""Grid, symbolic, and telescoping audits for certificate pairs.

A pair (F, G) is accepted when F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k).  The
grid check tests that equation pointwise over exact rationals; the symbolic
check proves it for all (n, k) at once by cancelling the common
hypergeometric part; the telescoping audit scales column sums of G to
integers and divides them by the target divisor.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hyperterm import TermEvalError, eval_term, shift_quotient, term_quotient
from .pairs import WZPairSpec
from .polyalg import RationalFunction
from .verify import divisor

GridPoint = tuple[int, int]


@dataclass(frozen=True)
class GridReport:
    """Outcome of a pointwise difference check over 1 <= k <= n <= n_max."""

    pair_name: str
    n_max: int
    points_checked: int
    violations: tuple[tuple[GridPoint, Fraction, Fraction], ...]
    skipped: tuple[tuple[GridPoint, str], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def wz_grid_row(pair: WZPairSpec, n: int) -> tuple[
        int,
        list[tuple[GridPoint, Fraction, Fraction]],
        list[tuple[GridPoint, str]]]:
    """Check one grid row 1 <= k <= n; returns (checked, violations, skipped).

    Points where some term is undefined (a denominator vanishes) are
    reported as skipped rather than failing the audit.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    f, g = pair.f.term, pair.g.term
    checked = 0
    violations: list[tuple[GridPoint, Fraction, Fraction]] = []
    skipped: list[tuple[GridPoint, str]] = []
    for k in range(1, n + 1):
        try:
            lhs = eval_term(f, n, k - 1) - eval_term(f, n, k)
            rhs = eval_term(g, n + 1, k) - eval_term(g, n, k)
        except TermEvalError as exc:
            skipped.append(((n, k), str(exc)))
            continue
        checked += 1
        if lhs != rhs:
            violations.append(((n, k), lhs, rhs))
    return checked, violations, skipped


def wz_grid_check(pair: WZPairSpec, n_max: int) -> GridReport:
    """Compare F(n,k-1)-F(n,k) with G(n+1,k)-G(n,k) over 1 <= k <= n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    checked = 0
    violations: list[tuple[GridPoint, Fraction, Fraction]] = []
    skipped: list[tuple[GridPoint, str]] = []
    for n in range(1, n_max + 1):
        row_checked, row_violations, row_skipped = wz_grid_row(pair, n)
        checked += row_checked
        violations.extend(row_violations)
        skipped.extend(row_skipped)
    return GridReport(pair.name, n_max, checked,
                      tuple(violations), tuple(skipped))


def wz_certificate(pair: WZPairSpec) -> RationalFunction:
    """The rational certificate r(n,k) = F(n,k) / G(n,k)."""
    return term_quotient(pair.f.term, pair.g.term)


def wz_symbolic_check(pair: WZPairSpec) -> tuple[bool, RationalFunction]:
    """Prove the pair identity for all (n, k) at once.

    Dividing the defining equation by G(n,k) leaves only rational
    functions: with r = F/G the identity reads

        (F(n,k-1)/F(n,k)) * r - r - G(n+1,k)/G(n,k) + 1 = 0.

    Returns the residual of that equation together with its vanishing flag;
    the residual is identically zero exactly when the pair telescopes.
    """
    cert = wz_certificate(pair)
    f_back = shift_quotient(pair.f.term, 0, -1)
    g_up = shift_quotient(pair.g.term, 1, 0)
    residual = f_back * cert - cert - g_up + RationalFunction.const(1)
    return residual.is_zero(), residual


@dataclass(frozen=True)
class ScaledDivisibility:
    """A scaled exact value checked for integrality and divisibility."""

    value: Fraction
    divisor: int
    integral: bool
    divisible: bool
    quotient: int | None
    remainder: int | None

    @property
    def ok(self) -> bool:
        return self.integral and self.divisible


def _scaled_check(value: Fraction, div: int) -> ScaledDivisibility:
    if value.denominator != 1:
        return ScaledDivisibility(value, div, False, False, None, None)
    q, r = divmod(value.numerator, div)
    if r:
        return ScaledDivisibility(value, div, True, False, None, r)
    return ScaledDivisibility(value, div, True, True, q, 0)


@dataclass(frozen=True)
class TelescopeAudit:
    """Scaled column audit of G at a fixed row N.

    Writing B for the scale base and s = B**scale_exp, the audit records
    s*G(N,k) for k = 1..N-1, their sum, the scaled corner s*F(N-1,N-1),
    and the telescoped conclusion s * sum(F(n,0) for n < N); each entry
    must be an integer divisible by the divisor P(N).
    """

    pair_name: str
    big_n: int
    divisor_kind: str
    divisor: int
    scale_exp: int
    g_terms: tuple[tuple[int, ScaledDivisibility], ...]
    g_sum: ScaledDivisibility
    corner: ScaledDivisibility
    conclusion: ScaledDivisibility

    @property
    def ok(self) -> bool:
        return (all(rec.ok for _, rec in self.g_terms)
                and self.g_sum.ok and self.corner.ok and self.conclusion.ok)


def telescope_audit(pair: WZPairSpec, big_n: int, *,
                    scale_exp: int | None = None,
                    divisor_kind: str | None = None) -> TelescopeAudit:
    """Audit row N of the telescoped identity for one pair.

    scale_exp defaults to N-1, which clears every denominator for the
    builtin pairs; pass a different exponent to probe how sharp that
    scaling is.  divisor_kind defaults to the pair's own convention.
    """
    if big_n < 2:
        raise ValueError("telescoping audit needs N >= 2")
    kind = pair.divisor_kind if divisor_kind is None else divisor_kind
    exp = big_n - 1 if scale_exp is None else scale_exp
    scale = Fraction(pair.scale_base) ** exp
    div = divisor(kind, big_n)
    f, g = pair.f.term, pair.g.term

    g_terms = []
    total = Fraction(0)
    for k in range(1, big_n):
        value = scale * eval_term(g, big_n, k)
        total += value
        g_terms.append((k, _scaled_check(value, div)))
    g_sum = _scaled_check(total, div)
    corner = _scaled_check(scale * eval_term(f, big_n - 1, big_n - 1), div)
    conclusion_value = scale * sum(eval_term(f, n, 0) for n in range(big_n))
    conclusion = _scaled_check(conclusion_value, div)
    return TelescopeAudit(pair.name, big_n, kind, div, exp,
                          tuple(g_terms), g_sum, corner, conclusion)
