from dataclasses import replace
from fractions import Fraction

import pytest

from binomsum.hyperterm import NotProportionalError, TermDocument, eval_term
from binomsum.pairs import WZPairSpec, builtin_pair, builtin_pair_names
from binomsum.polyalg import BivarPoly
from binomsum.verify import eval_sum
from binomsum.wz import telescope_audit, wz_certificate, wz_grid_check, \
    wz_grid_row, wz_symbolic_check


def test_builtin_pair_names():
    assert builtin_pair_names() == ["guillera1", "guillera2"]


def test_grid_check_clean_small():
    for name in builtin_pair_names():
        report = wz_grid_check(builtin_pair(name), 20)
        assert report.ok
        assert report.violations == ()
        assert report.skipped == ()
        assert report.points_checked == sum(n for n in range(1, 21))


def test_grid_row_matches_difference_identity():
    pair = builtin_pair("guillera1")
    f, g = pair.f.term, pair.g.term
    checked, violations, skipped = wz_grid_row(pair, 4)
    assert (checked, violations, skipped) == (4, [], [])
    for k in range(1, 5):
        lhs = eval_term(f, 4, k - 1) - eval_term(f, 4, k)
        rhs = eval_term(g, 5, k) - eval_term(g, 4, k)
        assert lhs == rhs


def test_first_pair_point_value():
    pair = builtin_pair("guillera1")
    f, g = pair.f.term, pair.g.term
    lhs = eval_term(f, 1, 0) - eval_term(f, 1, 1)
    rhs = eval_term(g, 2, 1) - eval_term(g, 1, 1)
    assert lhs == rhs == Fraction(-209, 128)


def test_symbolic_check_both_pairs():
    for name in builtin_pair_names():
        ok, residual = wz_symbolic_check(builtin_pair(name))
        assert ok
        assert residual.is_zero()
        assert residual.render() == "0"


def test_certificates_render_canonically():
    cert1 = wz_certificate(builtin_pair("guillera1"))
    assert cert1.render() == (
        "(40*n^3+16*n^2*k-4*n^2-24*n*k^2+24*n*k-6*n-4*k^2+4*k-1)/(32*n^3)")
    assert cert1.evaluate(2, 1) == Fraction(355, 256)
    cert2 = wz_certificate(builtin_pair("guillera2"))
    assert cert2.render() == (
        "(480*n^3-96*n^2*k+16*n^2-168*n*k^2+112*n*k-22*n-20*k^2+16*k-3)"
        "/(512*n^3)")


def _perturb_g_poly(pair: WZPairSpec, poly: BivarPoly) -> WZPairSpec:
    g_term = replace(pair.g.term, numer_poly=poly)
    g_doc = TermDocument(name=pair.g.name, term=g_term, note=pair.g.note)
    return replace(pair, g=g_doc)


def test_single_factor_perturbation_flips_symbolic_result():
    pair = builtin_pair("guillera1")
    bad = _perturb_g_poly(pair, BivarPoly.monomial(3, 0, 3))  # 2n^3 -> 3n^3
    ok, residual = wz_symbolic_check(bad)
    assert not ok
    assert not residual.is_zero()


def test_perturbation_also_breaks_the_grid():
    pair = builtin_pair("guillera2")
    bad = _perturb_g_poly(pair, BivarPoly.monomial(2, 0, 3))  # n^2 -> 3n^2
    report = wz_grid_check(bad, 6)
    assert not report.ok
    assert report.violations


def test_non_proportional_pair_raises():
    f_doc = builtin_pair("guillera1").f
    g_doc = builtin_pair("guillera2").g
    mismatched = WZPairSpec(name="mixed", f=f_doc, g=g_doc,
                            scale_base=-4096, divisor_kind="strong",
                            sum_id="")
    with pytest.raises(NotProportionalError):
        wz_symbolic_check(mismatched)


def test_telescope_audit_first_pair_small():
    audit = telescope_audit(builtin_pair("guillera1"), 2)
    assert audit.ok
    assert audit.divisor == 288
    assert audit.scale_exp == 1
    assert audit.g_sum.quotient == 9
    assert audit.corner.quotient == -20
    assert audit.conclusion.quotient == -11

    audit3 = telescope_audit(builtin_pair("guillera1"), 3)
    assert audit3.ok
    assert audit3.divisor == 7200
    assert audit3.conclusion.quotient == 1907
    assert audit3.g_terms[0][1].value == 675 * 7200


def test_telescope_audit_second_pair_small():
    audit = telescope_audit(builtin_pair("guillera2"), 2)
    assert audit.ok
    assert audit.g_sum.quotient == 315
    assert audit.corner.quotient == 420
    assert audit.conclusion.quotient == 735


def test_telescope_conclusion_matches_sum_route():
    for name in builtin_pair_names():
        pair = builtin_pair(name)
        for big_n in range(2, 13):
            audit = telescope_audit(pair, big_n)
            assert audit.ok
            assert audit.conclusion.value == eval_sum(pair.sum_id, big_n)


def test_telescope_parts_are_g_values():
    pair = builtin_pair("guillera1")
    big_n = 5
    audit = telescope_audit(pair, big_n)
    scale = pair.scale_base ** (big_n - 1)
    assert [k for k, _ in audit.g_terms] == list(range(1, big_n))
    for k, part in audit.g_terms:
        assert part.value == scale * eval_term(pair.g.term, big_n, k)
    assert audit.corner.value == scale * eval_term(pair.f.term,
                                                   big_n - 1, big_n - 1)


def test_telescope_weak_divisor_override():
    audit = telescope_audit(builtin_pair("guillera1"), 3,
                            divisor_kind="weak")
    assert audit.divisor == 120
    assert audit.ok


def test_telescope_requires_n_at_least_two():
    with pytest.raises(ValueError):
        telescope_audit(builtin_pair("guillera1"), 1)
