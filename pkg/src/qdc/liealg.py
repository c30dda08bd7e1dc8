"""The q-deformed Lie superalgebra acting on the group parameters.

Verifies the bracket relations, the X/Y change of basis, the displayed
consistency identities, and the operational meaning of "the cross relations
are consistent": local confluence of the combined system and agreement of
the two reduction orders on every bracket-times-parameter word.
"""

from __future__ import annotations

from .catalog import get_catalog
from .kernel import (
    Element,
    check_local_confluence,
    format_element,
    graded_commutator,
    normalize,
)
from .report import timed_check
from .ring import lint

SUPER_GENS = ("T1", "T2", "nabla_p", "nabla_m")
BODY_GENS = ("a", "beta", "gamma", "d")

# ordered bracket patterns of the superalgebra rules
_BRACKET_PATTERNS = (
    ("T2", "T1"),
    ("nabla_p", "T1"), ("nabla_p", "T2"),
    ("nabla_m", "T1"), ("nabla_m", "T2"),
    ("nabla_p", "nabla_p"), ("nabla_m", "nabla_m"),
    ("nabla_m", "nabla_p"),
)


def super_only(cat=None):
    """The bracket relations alone, with the group parameters removed."""
    cat = cat or get_catalog()
    la = cat.presentation("LieAlg")
    return la.restricted_to(SUPER_GENS, "LieAlg_brackets")


def verify_superalgebra(cat=None, confluence_degree=4):
    """Bracket relations, the displayed consistency identities, and local
    confluence of the combined coordinate/bracket/cross-rule system."""
    cat = cat or get_catalog()
    la = cat.presentation("LieAlg")
    out = []
    from .calculus import verify_family

    out.extend(verify_family("superalg_43", cat))
    out.extend(verify_family("consistency_s5", cat))

    def fn_confluence():
        rep = check_local_confluence(la, confluence_degree)
        if rep.failures:
            w, p1, p2 = rep.failures[0]
            return (f"{len(rep.failures)} failing overlaps; first at "
                    f"{'*'.join(w)}: {format_element(p1, la)} vs "
                    f"{format_element(p2, la)}")
        return None

    out.append(timed_check(
        "superalgebra.confluence",
        f"combined bracket/cross-rule system locally confluent to degree "
        f"{confluence_degree}", "(2)(43)(45)", fn_confluence))
    return out


def verify_xy_basis(cat=None):
    """The relations in the X = T1 + T2, Y = T1 - T2 basis, reduced using
    only the bracket relations."""
    cat = cat or get_catalog()
    la = cat.presentation("LieAlg")
    brackets = super_only(cat)
    out = []
    from .parser import print_ast

    for ident in la.identities_in_family("xy_basis"):
        desc = f"{print_ast(ident.lhs_ast)} = {print_ast(ident.rhs_ast)}"

        def fn(ident=ident):
            res = normalize(ident.lhs - ident.rhs, brackets)
            return None if res.is_zero() else format_element(res, brackets)

        out.append(timed_check(f"xy_basis.{ident.name}", desc, ident.eq, fn))
    return out


def verify_cross_relations_consistency(cat=None):
    """For every bracket pattern (L, L') and every group parameter g, reduce
    L*L'*g bracket-first and cross-relation-first and compare."""
    cat = cat or get_catalog()
    la = cat.presentation("LieAlg")
    from .kernel import _one_step

    out = []
    rules = la.rule_by_pair
    for L, Lp in _BRACKET_PATTERNS:
        for g in BODY_GENS:
            word = (L, Lp, g)
            bracket_rule = rules[(L, Lp)]
            cross_rule = rules[(Lp, g)]

            def fn(word=word, bracket_rule=bracket_rule, cross_rule=cross_rule):
                via_bracket = normalize(_one_step(word, 0, bracket_rule), la)
                via_cross = normalize(_one_step(word, 1, cross_rule), la)
                diff = via_bracket - via_cross
                return None if diff.is_zero() else format_element(diff, la)

            out.append(timed_check(
                f"cross_consistency.{L}_{Lp}_{g}",
                f"{L}*{Lp}*{g}: bracket-first vs cross-first", "(43)(45)", fn))
    return out


def classical_limit_checks():
    """At q = 1 every deformation term of the brackets vanishes and the
    undeformed superalgebra remains."""
    cat1 = get_catalog(q0=1)
    la1 = cat1.presentation("LieAlg")
    E = Element.word
    one = la1.scalar_one
    minus = lint(-1)
    # undeformed brackets: [T1, np] = -np, [T2, np] = np, [T1, nm] = nm,
    # [T2, nm] = -nm, [T1, T2] = 0, np^2 = nm^2 = 0, {nm, np} = T1 + T2
    expected = {
        ("T1", "nabla_p"): E(("nabla_p",), minus),
        ("T2", "nabla_p"): E(("nabla_p",)),
        ("T1", "nabla_m"): E(("nabla_m",)),
        ("T2", "nabla_m"): E(("nabla_m",), minus),
        ("T1", "T2"): Element.zero(),
        ("nabla_p", "nabla_p"): Element.zero(),
        ("nabla_m", "nabla_m"): Element.zero(),
        ("nabla_m", "nabla_p"): E(("T1",)) + E(("T2",)),
    }
    out = []
    for (x, y), want in expected.items():
        def fn(x=x, y=y, want=want):
            got = graded_commutator(la1.el(x), la1.el(y), la1)
            if (x, y) in (("nabla_m", "nabla_p"),):
                pass  # anticommutator, handled by graded_commutator (both odd)
            diff = got - want
            return None if diff.is_zero() else format_element(diff, la1)
        out.append(timed_check(f"classical_limit.{x}_{y}",
                               f"bracket of {x}, {y} at q = 1 is undeformed",
                               "(43)", fn))
    return out
