import pytest

from qdc.calculus import (
    Ansatz,
    CoeffPoly,
    _ab_conditions,
    _ansatz_presentation,
    _condition_residual,
    ansatz_checks,
    ansatz_residuals,
    alternative_branch,
    d_on_relations_checks,
    d_squared_checks,
    exterior_d,
    localized_rule_checks,
    paper_branch,
    solve_ansatz,
    verify_family,
    verify_localized_rule,
    verify_structure_equations,
)
from qdc.errors import UnknownFamilyError
from qdc.kernel import Element, RewriteRule, normalize
from qdc.parser import parse_expression
from qdc.ring import ONE, ZERO, qp

W = Element.word


def test_d_squared_on_generator(cat):
    assert exterior_d(exterior_d(W(("a",)), cat), cat).is_zero()


def test_d_of_unit_product(cat):
    assert exterior_d(W(("a", "a_inv")), cat).is_zero()


def test_d_kills_coordinate_relation(cat):
    loc = cat.presentation("Omega_loc")
    rel = parse_expression("a*beta - q*beta*a", loc)
    assert exterior_d(rel, cat).is_zero()


def test_d_squared_suite(cat):
    checks = d_squared_checks(cat)
    assert len(checks) == 108
    assert all(c.passed for c in checks)


def test_d_on_relations_suite(cat):
    checks = d_on_relations_checks(cat)
    assert len(checks) == 8 + 16
    assert all(c.passed for c in checks)


def test_solve_ansatz_constraints():
    rep = solve_ansatz()
    texts = sorted(str(p) for p in rep.linear)
    assert texts == sorted(["1*F12 + q*F21 + 1", "1*F11 + q*F22 + -q", "1*B + -1"])
    assert len(rep.quadratic) == 2
    assert rep.selected == "F22 = 0 with A = q^2"


def test_paper_branch_residuals_vanish():
    assert all(r.is_zero() for r in ansatz_residuals(paper_branch()))


def test_alternative_branch_residuals_vanish():
    assert all(r.is_zero() for r in ansatz_residuals(alternative_branch(qp(3))))


def test_perturbed_control_fails():
    bad = Ansatz(A=ONE, B=ONE, F11=ONE, F12=ZERO, F21=ZERO, F22=ZERO)
    assert any(not r.is_zero() for r in ansatz_residuals(bad))


def test_symbolic_branch_with_free_parameters():
    # impose the linear constraints and F22 = 0, leaving A and F21 symbolic;
    # the residuals must vanish identically
    const = CoeffPoly.const
    q = const(qp(1))
    coeffs = {
        "A": CoeffPoly.var("A"),
        "B": const(ONE),
        "F11": q,
        "F12": const(-ONE) - q * CoeffPoly.var("F21"),
        "F21": CoeffPoly.var("F21"),
        "F22": const(ZERO),
    }
    p = _ansatz_presentation(coeffs, const)
    for name, kind, payload in _ab_conditions(const):
        assert _condition_residual(kind, payload, p).is_zero(), name


def test_ansatz_checks_all_pass(cat):
    checks = ansatz_checks(cat)
    assert all(c.passed for c in checks), [c.id for c in checks if not c.passed]


def test_family_counts(cat):
    for family, count in (("T_inverse", 16), ("inverse_differential", 16),
                          ("T_forms", 16), ("forms", 8), ("forms_to_dT", 4)):
        checks = verify_family(family, cat)
        assert len(checks) == count, family
        assert all(c.passed for c in checks), family


def test_family_examples(cat):
    loc = cat.presentation("Omega_loc")
    # inverse entry commutation with the unit tail
    e = parse_expression("a*iA - q^2*iA*a - 1 + q^2", loc)
    assert normalize(e, loc).is_zero()
    # coordinate with a one-form
    e = parse_expression("beta*u - q*u*beta", loc)
    assert normalize(e, loc).is_zero()
    # anticommutator of the two odd forms
    e = parse_expression("w1*w2 + w2*w1 - (1 - q^2)*v*u", loc)
    assert normalize(e, loc).is_zero()


def test_unknown_family(cat):
    with pytest.raises(UnknownFamilyError):
        verify_family("no_such_family", cat)


def test_structure_equations(cat):
    checks = verify_structure_equations(cat)
    assert len(checks) == 12
    assert all(c.passed for c in checks), [c.id for c in checks if not c.passed]


def test_structure_examples(cat):
    forms = cat.presentation("Forms")
    # dw1 + uv vanishes given the square of the odd form
    e = parse_expression("w1*w1 - u*v + u*v", forms)
    assert normalize(e, forms).is_zero()
    # du against its reduced form
    e = parse_expression("w1*u - u*w2 - q^2*(w1 - w2)*u", forms)
    assert normalize(e, forms).is_zero()
    # dw2 + uv via the w2 square and the u-v relation
    e = parse_expression("w2*w2 - v*u + u*v", forms)
    assert normalize(e, forms).is_zero()


def test_localized_rules_all_validate(cat):
    checks = localized_rule_checks(cat)
    assert len(checks) == 30
    assert all(c.passed for c in checks), [c.id for c in checks if not c.passed]


def test_localized_rule_examples(cat):
    loc = cat.presentation("Omega_loc")
    ok, why = verify_localized_rule(loc.rule_by_pair[("beta", "a_inv")], cat)
    assert ok, why
    ok, why = verify_localized_rule(loc.rule_by_pair[("Dgamma_inv", "Da")], cat)
    assert ok, why


def test_localized_rule_negative_control(cat):
    # beta*a_inv -> a_inv*beta without the q factor clears to a*beta = beta*a
    bad = RewriteRule(("beta", "a_inv"), W(("a_inv", "beta")), localized=True)
    ok, why = verify_localized_rule(bad, cat)
    assert not ok
    assert "differ" in why


def test_exterior_d_matches_differential_names(cat):
    # the identification of differentials with the one-form layer: d of the
    # coordinate matrix entries are the Da.. generators themselves
    for g, dg in (("a", "Da"), ("beta", "Dbeta"), ("gamma", "Dgamma"), ("d", "Dd")):
        assert exterior_d(W((g,)), cat) == W((dg,))
