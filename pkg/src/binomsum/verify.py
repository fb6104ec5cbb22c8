"""Binomial sums, divisors, divisibility checks, and proof-level audits.

Everything here is exact: sums and divisors are big integers, ratios are
`fractions.Fraction`, and every floor inequality is evaluated with true
floor division.  Where a fact can be established along two independent
routes (division with remainder vs. prime valuations, floor terms vs.
fractional parts, binomial products vs. factorial quotients), both routes
are implemented separately and compared rather than merged.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial, factorial, floor_div, int_valuation, \
    legendre_valuation, primes_upto, rat_valuation
from .hyperterm import eval_term
from .pairs import builtin_pair

DIVISOR_KINDS = ("weak", "strong")


# ---------------------------------------------------------------------------
# Sum specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SumSpec:
    """One sum of the shape sum((c2*k^2+c1*k+c0) * C(2k,k)**central_power
    * [C(4k,2k)] * base**(n-k-1) for k in range(n))."""

    name: str
    coeff: tuple[int, int, int]
    central_power: int
    base: int
    include_quad_central: bool = False
    divisor_kind: str = "weak"

    def __post_init__(self) -> None:
        if self.base == 0:
            raise ValueError("base must be nonzero")
        if self.central_power < 1:
            raise ValueError("central_power must be at least 1")
        if self.divisor_kind not in DIVISOR_KINDS:
            raise ValueError(f"divisor kind must be one of {DIVISOR_KINDS}")


SUM_SPECS: dict[str, SumSpec] = {s.name: s for s in (
    SumSpec("sun_a", (0, 3, 1), 3, -8),
    SumSpec("sun_b", (0, 3, 1), 3, 16),
    SumSpec("sun_c", (0, 6, 1), 3, 256),
    SumSpec("sun_d", (0, 6, 1), 3, -512),
    SumSpec("sun_e", (0, 42, 5), 3, 4096),
    SumSpec("guillera1", (20, 8, 1), 5, -4096, divisor_kind="strong"),
    SumSpec("guillera2", (120, 34, 3), 4, 65536,
            include_quad_central=True, divisor_kind="strong"),
)}


def sum_spec(name: str) -> SumSpec:
    try:
        return SUM_SPECS[name]
    except KeyError:
        raise ValueError(f"unknown sum {name!r}; "
                         f"available: {', '.join(sorted(SUM_SPECS))}") from None


def _summand(spec: SumSpec, k: int) -> int:
    c2, c1, c0 = spec.coeff
    t = (c2 * k * k + c1 * k + c0) * binomial(2 * k, k) ** spec.central_power
    if spec.include_quad_central:
        t *= binomial(4 * k, 2 * k)
    return t


def eval_sum(spec: SumSpec | str, n: int) -> int:
    """Direct evaluation of the length-n partial sum."""
    if isinstance(spec, str):
        spec = sum_spec(spec)
    if n < 1:
        raise ValueError("eval_sum needs n >= 1")
    return sum(_summand(spec, k) * spec.base ** (n - k - 1) for k in range(n))


def iter_sums(spec: SumSpec | str, n_max: int):
    """Yield (n, S(n)) for n = 1..n_max via S(n+1) = base*S(n) + t(n).

    A second route to the same values as eval_sum; the two are compared
    in the test suite rather than shared.
    """
    if isinstance(spec, str):
        spec = sum_spec(spec)
    if n_max < 1:
        raise ValueError("iter_sums needs n_max >= 1")
    total = 0
    for n in range(1, n_max + 1):
        total = spec.base * total + _summand(spec, n - 1)
        yield n, total


# ---------------------------------------------------------------------------
# Divisors and divisibility checks
# ---------------------------------------------------------------------------

def divisor(kind: str, n: int) -> int:
    """The target divisor: 2n*C(2n,n) (weak) or 2n^2*C(2n,n)^2 (strong)."""
    if kind not in DIVISOR_KINDS:
        raise ValueError(f"divisor kind must be one of {DIVISOR_KINDS}")
    if n < 1:
        raise ValueError("divisor needs n >= 1")
    central = binomial(2 * n, n)
    if kind == "weak":
        return 2 * n * central
    return 2 * n * n * central * central


@dataclass(frozen=True)
class DivisionCheck:
    """Exact division with remainder; quotient is set only on success."""

    value: int
    divisor: int
    quotient: int | None
    remainder: int

    @property
    def ok(self) -> bool:
        return self.remainder == 0


def _divide(value: int, div: int) -> DivisionCheck:
    q, r = divmod(value, div)
    return DivisionCheck(value, div, q if r == 0 else None, r)


def check_divisibility(spec: SumSpec | str, kind: str | None,
                       n: int) -> DivisionCheck:
    """Division-with-remainder test of divisor(kind, n) | eval_sum(spec, n).

    kind=None uses the divisor family the sum is stated with.
    """
    if isinstance(spec, str):
        spec = sum_spec(spec)
    if n < 2:
        raise ValueError("check_divisibility needs n >= 2")
    if kind is None:
        kind = spec.divisor_kind
    return _divide(eval_sum(spec, n), divisor(kind, n))


def check_divisibility_valuations(spec: SumSpec | str, kind: str | None,
                                  n: int) -> tuple[bool, tuple[tuple[int, int, int], ...]]:
    """Independent divisibility certificate via prime valuations.

    For every prime p up to 2n (the divisor's entire prime support),
    compares v_p(divisor) — computed from Legendre's formula, not from the
    divisor integer — with v_p of the sum.  Returns (ok, failures), each
    failure a triple (p, v_p(divisor), v_p(value)).
    """
    if isinstance(spec, str):
        spec = sum_spec(spec)
    if n < 2:
        raise ValueError("check_divisibility_valuations needs n >= 2")
    if kind is None:
        kind = spec.divisor_kind
    if kind not in DIVISOR_KINDS:
        raise ValueError(f"divisor kind must be one of {DIVISOR_KINDS}")
    value = eval_sum(spec, n)
    if value == 0:
        return True, ()
    e = 1 if kind == "weak" else 2
    failures = []
    for p in primes_upto(2 * n):
        v_div = e * (int_valuation(p, n)
                     + legendre_valuation(p, 2 * n)
                     - 2 * legendre_valuation(p, n))
        if p == 2:
            v_div += 1
        v_val = int_valuation(p, value)
        if v_div > v_val:
            failures.append((p, v_div, v_val))
    return not failures, tuple(failures)


# ---------------------------------------------------------------------------
# Audit plumbing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaAudit:
    """Outcome of an exhaustive scan: every violation is reproducible by
    re-running the corresponding single-point operation."""

    lemma: str
    params: tuple[tuple[str, int | str], ...]
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class MarginRecord:
    """LHS minus RHS of a floor inequality at one point."""

    m: int
    n: int
    k: int
    margin: int

    @property
    def violation(self) -> bool:
        return self.margin < 0


# ---------------------------------------------------------------------------
# Binomial-quotient audits (pointwise divisibility facts)
# ---------------------------------------------------------------------------

def lemma22_point(n: int, k: int) -> DivisionCheck:
    """(2n+2k-1)*C(2k,k) divides n*C(2n,n)*C(2n+2k,n+k)*C(n+k,2k)."""
    if n < 1 or k < 0 or k > n:
        raise ValueError("lemma22_point needs n >= 1 and 0 <= k <= n")
    value = (n * binomial(2 * n, n) * binomial(2 * n + 2 * k, n + k)
             * binomial(n + k, 2 * k))
    return _divide(value, (2 * n + 2 * k - 1) * binomial(2 * k, k))


@dataclass(frozen=True)
class QuotientIdentity:
    """A division check whose quotient must match a closed form."""

    division: DivisionCheck
    closed_form: int

    @property
    def ok(self) -> bool:
        return self.division.ok and self.division.quotient == self.closed_form


def lemma23_point(n: int) -> QuotientIdentity:
    """64*(2n+1) divides n^2*(n+1)*C(2n,n)*C(2n-2,n-1)*C(2n+2,n+1), with
    quotient (2n-1)^2 * C(2n-3,n-1)^3."""
    if n < 2:
        raise ValueError("lemma23_point needs n >= 2")
    value = (n * n * (n + 1) * binomial(2 * n, n)
             * binomial(2 * n - 2, n - 1) * binomial(2 * n + 2, n + 1))
    division = _divide(value, 64 * (2 * n + 1))
    closed = (2 * n - 1) ** 2 * binomial(2 * n - 3, n - 1) ** 3
    return QuotientIdentity(division, closed)


# ---------------------------------------------------------------------------
# Eight-floor inequality (and its fractional-part reformulation)
# ---------------------------------------------------------------------------

def _floor_terms(n: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The eight linear arguments: (positive side, negative side).

    Both sides have the same linear-form sum 6n+5k-2, which is what makes
    the margin a pure function of the residues of n and k.
    """
    pos = (4 * n + 2 * k - 2, k, k, k, 2 * n)
    neg = (2 * k, 2 * k, 2 * k, n, n - 1, n - k, n - k, 2 * n + k - 1)
    return pos, neg


def floor_margin(m: int, n: int, k: int) -> MarginRecord:
    """Margin of the eight-floor inequality, via floor division only."""
    if m < 2:
        raise ValueError("floor_margin needs m >= 2")
    if not 0 <= k <= n:
        raise ValueError("floor_margin needs n >= k >= 0")
    pos, neg = _floor_terms(n, k)
    margin = (sum(floor_div(a, m) for a in pos)
              - sum(floor_div(b, m) for b in neg))
    return MarginRecord(m, n, k, margin)


def floor_margin_fractional(m: int, n: int, k: int) -> Fraction:
    """The same margin computed from fractional parts only.

    Since both sides of the inequality have equal linear sums, the floor
    margin equals sum({b/m}) - sum({a/m}) over the negative/positive
    arguments; this never touches floor division.
    """
    if m < 2:
        raise ValueError("floor_margin_fractional needs m >= 2")
    if not 0 <= k <= n:
        raise ValueError("floor_margin_fractional needs n >= k >= 0")
    pos, neg = _floor_terms(n, k)
    return Fraction(sum(b % m for b in neg) - sum(a % m for a in pos), m)


LEMMA24_REGIONS = ("all", "k0", "case3a")


def lemma24_scan(m_max: int, *, region: str = "all",
                 full_range: int | None = None) -> LemmaAudit:
    """Scan the eight-floor inequality for 2 <= m <= m_max.

    By default n runs over the residues 0..m-1 plus the boundary row n=m
    (the margin only depends on n and k mod m, which the scan itself
    re-proves by comparing against the fractional-part form at every
    point); full_range=N instead scans all 0 <= n <= N directly.  region
    restricts the points audited: "k0" keeps the k=0 slice, "case3a"
    keeps points with 2n+k-1 >= 3m/2.
    """
    if m_max < 2:
        raise ValueError("lemma24_scan needs m_max >= 2")
    if region not in LEMMA24_REGIONS:
        raise ValueError(f"region must be one of {LEMMA24_REGIONS}")
    if full_range is not None and full_range < 0:
        raise ValueError("full_range must be nonnegative")
    checked = 0
    violations = []
    for m in range(2, m_max + 1):
        if full_range is None:
            rows = list(range(m)) + [m]
        else:
            rows = range(full_range + 1)
        for n in rows:
            for k in range(n + 1):
                if region == "k0" and k != 0:
                    continue
                if region == "case3a" and 2 * (2 * n + k - 1) < 3 * m:
                    continue
                rec = floor_margin(m, n, k)
                if rec.margin != floor_margin_fractional(m, n, k):
                    raise ArithmeticError(
                        f"floor/fractional margin mismatch at {(m, n, k)}")
                checked += 1
                if rec.violation:
                    violations.append(rec)
    params = (("m_max", m_max), ("region", region),
              ("full_range", "none" if full_range is None else full_range))
    return LemmaAudit("2.4", params, checked, tuple(violations))


# ---------------------------------------------------------------------------
# Integrality of W(n,k) and its valuation certificate
# ---------------------------------------------------------------------------

def lemma25_w(n: int, k: int) -> Fraction:
    """W(n,k) as a binomial product over C(2k,k)^2, cross-validated against
    its factorial form k!^3*(2n)!*(2k+4n-2)! / ((2k)!^3*n!*(n-1)!*(n-k)!^2
    *(k+2n-1)!) by cross-multiplication."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError("lemma25_w needs n >= 1 and 0 <= k <= n")
    num = (binomial(2 * n, n) * binomial(n, k) * binomial(k + n, 2 * k)
           * binomial(k + 2 * n - 1, n - 1)
           * binomial(2 * k + 4 * n - 2, k + 2 * n - 1))
    value = Fraction(num, binomial(2 * k, k) ** 2)
    fact_num = factorial(k) ** 3 * factorial(2 * n) * factorial(2 * k + 4 * n - 2)
    fact_den = (factorial(2 * k) ** 3 * factorial(n) * factorial(n - 1)
                * factorial(n - k) ** 2 * factorial(k + 2 * n - 1))
    if value.numerator * fact_den != value.denominator * fact_num:
        raise ArithmeticError(
            f"binomial and factorial forms of W disagree at {(n, k)}")
    return value


def _legendre_margin_sum(table: list[int], n: int, k: int) -> int:
    """Sum over i of the eight-floor margin at m = p**i, via a v_p(j!) table.

    Summing each floor term over all prime powers turns it into a factorial
    valuation, so the whole sum collapses to eight table lookups.
    """
    pos, neg = _floor_terms(n, k)
    return sum(table[a] for a in pos) - sum(table[b] for b in neg)


def lemma25_valuations(n: int, k: int) -> tuple[tuple[int, int, int], ...]:
    """Per-prime triples (p, margin-sum route, direct-valuation route).

    The first route sums the eight-floor margins over all powers of p
    (equivalently, combines Legendre factorial valuations); the second
    reduces W(n,k) to lowest terms and counts powers of p directly.
    """
    w = lemma25_w(n, k)
    out = []
    for p in primes_upto(4 * n + 2 * k - 2):
        pos, neg = _floor_terms(n, k)
        margin_sum = (sum(legendre_valuation(p, a) for a in pos)
                      - sum(legendre_valuation(p, b) for b in neg))
        out.append((p, margin_sum, rat_valuation(p, w)))
    return tuple(out)


def lemma25_scan(n_max: int) -> LemmaAudit:
    """Assert W(n,k) integral for 1 <= k <= n <= n_max, with a valuation
    certificate: for every prime p <= 4n+2k-2 the margin-sum valuation is
    nonnegative and the resulting prime factorization reconstructs W
    exactly (which forces agreement with the division-based value at every
    prime at once)."""
    if n_max < 1:
        raise ValueError("lemma25_scan needs n_max >= 1")
    bound = 6 * n_max - 2
    tables: list[tuple[int, list[int]]] = []
    for p in primes_upto(bound):
        table = [0] * (bound + 1)
        acc = 0
        for j in range(1, bound + 1):
            acc += int_valuation(p, j) if j % p == 0 else 0
            table[j] = acc
        tables.append((p, table))
    checked = 0
    violations = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            w = lemma25_w(n, k)
            checked += 1
            if w.denominator != 1:
                violations.append(("non-integral", n, k, w))
                continue
            point_bound = 4 * n + 2 * k - 2
            reconstructed = 1
            negative = []
            for p, table in tables:
                if p > point_bound:
                    break
                s = _legendre_margin_sum(table, n, k)
                if s < 0:
                    negative.append((p, s))
                elif s:
                    reconstructed *= p ** s
            if negative:
                violations.append(("negative-valuation", n, k, tuple(negative)))
            elif reconstructed != w.numerator:
                for p, margin_sum, direct in lemma25_valuations(n, k):
                    if margin_sum != direct:
                        violations.append(
                            ("valuation-mismatch", n, k, p, margin_sum, direct))
    params = (("n_max", n_max),)
    return LemmaAudit("2.5", params, checked, tuple(violations))


# ---------------------------------------------------------------------------
# Factorial divisibility and its five-floor inequality
# ---------------------------------------------------------------------------

def lemma26_point(n: int) -> DivisionCheck:
    """(2n-1)!*(2n-2)!*(3n-3)! divides (6n-5)!*(n-1)!."""
    if n < 1:
        raise ValueError("lemma26_point needs n >= 1")
    value = factorial(6 * n - 5) * factorial(n - 1)
    div = factorial(2 * n - 1) * factorial(2 * n - 2) * factorial(3 * n - 3)
    return _divide(value, div)


def lemma26_floor_margin(m: int, n: int) -> int:
    """Margin of floor((6n-5)/m) + floor((n-1)/m) against the three
    subtracted floors, via floor division only."""
    if m < 2:
        raise ValueError("lemma26_floor_margin needs m >= 2")
    if n < 1:
        raise ValueError("lemma26_floor_margin needs n >= 1")
    return (floor_div(6 * n - 5, m) + floor_div(n - 1, m)
            - floor_div(2 * n - 1, m) - floor_div(2 * n - 2, m)
            - floor_div(3 * n - 3, m))


def lemma26_ineq_scan(m_max: int) -> LemmaAudit:
    """Exhaustive five-floor margin scan over 2 <= m <= m_max, 1 <= n <= m.

    As with the eight-floor scan, both sides have equal linear sums
    (7n-6), so every margin is cross-checked against its fractional-part
    form."""
    if m_max < 2:
        raise ValueError("lemma26_ineq_scan needs m_max >= 2")
    checked = 0
    violations = []
    for m in range(2, m_max + 1):
        for n in range(1, m + 1):
            margin = lemma26_floor_margin(m, n)
            pos = (6 * n - 5, n - 1)
            neg = (2 * n - 1, 2 * n - 2, 3 * n - 3)
            frac = Fraction(sum(b % m for b in neg) - sum(a % m for a in pos), m)
            if margin != frac:
                raise ArithmeticError(
                    f"floor/fractional margin mismatch at {(m, n)}")
            checked += 1
            if margin < 0:
                violations.append(MarginRecord(m, n, 0, margin))
    params = (("m_max", m_max),)
    return LemmaAudit("2.6", params, checked, tuple(violations))


# ---------------------------------------------------------------------------
# Closed-form ratio identities for the scaled pair terms
# ---------------------------------------------------------------------------

RATIO_IDENTITIES = ("g1_col1", "g1_gen", "f1_corner", "catalan_split",
                    "g2_gen", "f2_corner", "telescoped_sum")


@dataclass(frozen=True)
class RatioCheck:
    """Both sides of one closed-form identity, evaluated independently.

    alt carries the intermediate closed form when the derivation states
    the same quantity twice; equality requires all recorded forms to
    agree."""

    identity: str
    big_n: int
    k: int | None
    lhs: Fraction
    rhs: Fraction
    alt: Fraction | None = None

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs and (self.alt is None or self.alt == self.lhs)


def ratio_k_values(identity: str, big_n: int):
    """Admissible k range for an identity (None when k is not a parameter)."""
    if identity not in RATIO_IDENTITIES:
        raise ValueError(f"unknown ratio identity {identity!r}")
    if identity == "g1_gen":
        return range(2, big_n + 1)
    if identity == "g2_gen":
        return range(0, big_n + 1)
    return None


def _scaled_g(pair_name: str, big_n: int, k: int) -> Fraction:
    pair = builtin_pair(pair_name)
    scale = Fraction(pair.scale_base) ** (big_n - 1)
    return scale * eval_term(pair.g.term, big_n, k) / divisor("strong", big_n)


def _scaled_corner(pair_name: str, big_n: int) -> Fraction:
    pair = builtin_pair(pair_name)
    scale = Fraction(pair.scale_base) ** (big_n - 1)
    return (scale * eval_term(pair.f.term, big_n - 1, big_n - 1)
            / divisor("strong", big_n))


def ratio_identity(identity: str, big_n: int, k: int | None = None) -> RatioCheck:
    """Evaluate both sides of one scaled-term closed form exactly.

    The left side always comes from evaluating the stored pair terms and
    scaling; the right side is computed from the independent closed form.
    """
    if identity not in RATIO_IDENTITIES:
        raise ValueError(f"unknown ratio identity {identity!r}")
    if big_n < 2:
        raise ValueError("ratio identities need N >= 2")
    k_range = ratio_k_values(identity, big_n)
    if k_range is None:
        if k is not None:
            raise ValueError(f"{identity} does not take a k parameter")
    else:
        if k is None:
            raise ValueError(f"{identity} needs k in {k_range}")
        if k not in k_range:
            raise ValueError(f"{identity} needs k in {k_range}, got {k}")
    n = big_n
    alt: Fraction | None = None

    if identity == "g1_col1":
        lhs = _scaled_g("guillera1", n, 1)
        rhs = Fraction(
            n * n * (n + 1) * binomial(2 * n, n) * binomial(2 * n - 2, n - 1)
            * binomial(2 * n + 2, n + 1),
            64 * (2 * n + 1))
    elif identity == "g1_gen":
        lhs = _scaled_g("guillera1", n, k)
        rhs = Fraction(
            2 ** (4 * k - 8) * n * binomial(2 * n, n) * (-1) ** (k + 1)
            * binomial(k + n, n - k) * binomial(2 * n - 2 * k, n - k)
            * binomial(2 * k + 2 * n, k + n),
            binomial(2 * k, k) * (2 * k + 2 * n - 1))
    elif identity == "f1_corner":
        lhs = _scaled_corner("guillera1", n)
        alt = Fraction(
            (-1) ** (n + 1) * 2 ** (4 * n - 5) * (8 * n * n - 10 * n + 3)
            * binomial(2 * n - 2, n - 1) ** 2 * binomial(4 * n - 4, 2 * n - 2),
            n * n * binomial(2 * n, n) ** 2)
        rhs = Fraction(
            (-1) ** (n + 1) * 2 ** (4 * n - 7) * (4 * n - 3)
            * binomial(4 * n - 4, 2 * n - 2),
            2 * n - 1)
    elif identity == "catalan_split":
        lhs = Fraction(binomial(4 * n - 4, 2 * n - 2), 2 * n - 1)
        rhs = Fraction(binomial(4 * n - 4, 2 * n - 2)
                       - binomial(4 * n - 4, 2 * n - 3))
    elif identity == "g2_gen":
        lhs = _scaled_g("guillera2", n, k)
        rhs = (Fraction(2) ** (4 * k - 7)
               * binomial(2 * n, n) * binomial(n, k) * binomial(k + n, n - k)
               * binomial(k + 2 * n - 1, n - 1)
               * binomial(2 * k + 4 * n - 2, k + 2 * n - 1)
               / binomial(2 * k, k) ** 2)
    elif identity == "f2_corner":
        lhs = _scaled_corner("guillera2", n)
        alt = Fraction(
            3 * 2 ** (4 * n - 5) * (12 * n * n - 16 * n + 5)
            * binomial(2 * n - 2, n - 1) * binomial(3 * n - 3, n - 1)
            * binomial(6 * n - 6, 3 * n - 3),
            n * n * binomial(2 * n, n) ** 2)
        rhs = Fraction(
            3 * 2 ** (4 * n - 7) * factorial(6 * n - 5) * factorial(n - 1),
            factorial(2 * n - 1) * factorial(2 * n - 2) * factorial(3 * n - 3))
    else:  # telescoped_sum
        pair = builtin_pair("guillera2")
        scale = Fraction(pair.scale_base) ** (n - 1)
        lhs = scale * sum((eval_term(pair.f.term, j, 0) for j in range(n)),
                          Fraction(0))
        rhs = Fraction(eval_sum(pair.sum_id, n))
    return RatioCheck(identity, n, k, lhs, rhs, alt)
