"""The exterior differential, the consistency ansatz, and the one-form layer.

Everything here is verification-side: the operations reduce claimed identities
to residuals in the localized differential algebra and report exact zeros.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .catalog import get_catalog
from .errors import QdcError, UnknownFamilyError
from .kernel import (
    DerivationSpec,
    Element,
    Presentation,
    RewriteRule,
    apply_derivation,
    format_element,
    normalize,
)
from .parser import print_ast
from .report import timed_check
from .ring import ONE, ZERO, LaurentScalar, lint, qp

# -- exterior differential ----------------------------------------------------


def exterior_derivation(cat=None):
    """Images of the localized generators under the exterior differential.

    On formal inverses the image is forced by the Leibniz rule applied to
    g*g_inv = 1, giving d(g_inv) = -g_inv*(dg)*g_inv.
    """
    cat = cat or get_catalog()
    loc = cat.presentation("Omega_loc")
    E = Element.word
    images = {
        "a": E(("Da",)),
        "beta": E(("Dbeta",)),
        "gamma": E(("Dgamma",)),
        "d": E(("Dd",)),
        "Da": Element.zero(),
        "Dbeta": Element.zero(),
        "Dgamma": Element.zero(),
        "Dd": Element.zero(),
        "a_inv": -E(("a_inv", "Da", "a_inv")),
        "d_inv": -E(("d_inv", "Dd", "d_inv")),
        "Dgamma_inv": Element.zero(),
    }
    return DerivationSpec(images), loc


def exterior_d(e, cat=None, p=None, normalized=True):
    """Exterior differential of an element of the localized algebra."""
    d, loc = exterior_derivation(cat)
    return apply_derivation(d, e, p or loc, normalized=normalized)


def d_squared_checks(cat=None, n_random=100, max_degree=5, seed=20260809):
    """d^2 = 0 on every generator and on random words."""
    cat = cat or get_catalog()
    d, loc = exterior_derivation(cat)
    rng = random.Random(seed)
    names = [g.name for g in loc.generators]
    out = []

    def residual_for(word):
        def fn():
            once = apply_derivation(d, Element.word(word), loc, normalized=False)
            twice = apply_derivation(d, once, loc)
            return None if twice.is_zero() else format_element(twice, loc)
        return fn

    for g in ("a", "beta", "gamma", "d", "Da", "Dbeta", "Dgamma", "Dd"):
        out.append(timed_check(f"d_squared.gen_{g}", f"d(d({g})) = 0", "(12)",
                               residual_for((g,))))
    for i in range(n_random):
        k = rng.randint(1, max_degree)
        word = tuple(rng.choice(names) for _ in range(k))
        out.append(timed_check(f"d_squared.word_{i:03d}",
                               f"d(d({'*'.join(word)})) = 0", "(12)",
                               residual_for(word)))
    return out


def d_on_relations_checks(cat=None):
    """d applied to every coordinate relation and every mixed relation
    reduces to zero: the consistency statements behind the calculus."""
    cat = cat or get_catalog()
    d, loc = exterior_derivation(cat)
    out = []
    for pname, eqtag in (("A_glq11", "(2)"), ("Omega", "(24)")):
        p = cat.presentation(pname)
        for r in p.rules:
            if pname == "Omega" and not r.eq.startswith("(24"):
                continue
            rel = Element.word(r.pattern) - r.replacement

            def fn(rel=rel):
                res = apply_derivation(d, rel, loc)
                return None if res.is_zero() else format_element(res, loc)

            out.append(timed_check(
                f"d_consistency.{pname}.{'_'.join(r.pattern)}",
                f"d({'*'.join(r.pattern)} - ...) = 0", r.eq, fn))
    return out


# -- the consistency ansatz ---------------------------------------------------

_VARS = ("A", "B", "F11", "F12", "F21", "F22")
_ZEROS = (0, 0, 0, 0, 0, 0)


class CoeffPoly:
    """Polynomial in the six ansatz unknowns with Laurent-scalar coefficients.

    Small and special-purpose: just enough ring structure for the rewriting
    engine to reduce the consistency conditions with symbolic coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    data[mono] = c
        self.terms = data

    @classmethod
    def const(cls, scalar):
        return cls({_ZEROS: scalar})

    @classmethod
    def var(cls, name):
        mono = tuple(1 if v == name else 0 for v in _VARS)
        return cls({mono: ONE})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return CoeffPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CoeffPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = out.get(m, ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return CoeffPoly(out)

    def __eq__(self, other):
        return isinstance(other, CoeffPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, values):
        """Full substitution var -> LaurentScalar; returns a LaurentScalar."""
        total = ZERO
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(_VARS, mono):
                for _ in range(e):
                    term = term * values[v]
            total = total + term
        return total

    def unit_scaled(self):
        """Scaled so the lexicographically largest monomial has coefficient 1,
        when that coefficient is a unit; used to compare constraints up to
        an invertible factor."""
        if not self.terms:
            return self
        lead = max(self.terms)
        c = self.terms[lead]
        if not c.is_unit():
            return self
        inv = c.unit_inverse()
        return CoeffPoly({m: inv * cc for m, cc in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            names = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(_VARS, mono) if e
            )
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            bits.append(f"{cs}*{names}" if names else cs)
        return " + ".join(bits)

    __repr__ = __str__


@dataclass(frozen=True)
class Ansatz:
    """Candidate coefficients for the mixed relations on the a-beta block."""

    A: LaurentScalar
    B: LaurentScalar
    F11: LaurentScalar
    F12: LaurentScalar
    F21: LaurentScalar
    F22: LaurentScalar

    def as_dict(self):
        return {"A": self.A, "B": self.B, "F11": self.F11,
                "F12": self.F12, "F21": self.F21, "F22": self.F22}


def paper_branch():
    """The selected solution: F22 = 0, A = q^2, reproducing the mixed rules."""
    return Ansatz(A=qp(2), B=ONE, F11=qp(1), F12=qp(2) - ONE,
                  F21=-qp(1), F22=ZERO)


def alternative_branch(A):
    """The other root of the quadratic conditions: F12 = 0, F22 = 1 - A."""
    return Ansatz(A=A, B=ONE, F11=qp(1) * A, F12=ZERO,
                  F21=-qp(-1), F22=ONE - A)


_AB_GENS = ("Da", "Dbeta", "a", "beta")
_AB_PARITY = {"Da": 1, "Dbeta": 0, "a": 0, "beta": 1}


def _ansatz_presentation(coeffs, const):
    """Differentials-first presentation of the a-beta block; `coeffs` maps the
    six unknown names to scalar-like values and `const` lifts a LaurentScalar
    into the same scalar type."""
    from .kernel import Generator

    gens = [Generator(g, _AB_PARITY[g]) for g in _AB_GENS]
    E = Element.word

    def el(*pairs):
        acc = Element.zero()
        for coeff, word in pairs:
            acc = acc + E(word, coeff)
        return acc

    rules = [
        RewriteRule(("a", "Da"), el((coeffs["A"], ("Da", "a")))),
        RewriteRule(("a", "Dbeta"), el((coeffs["F11"], ("Dbeta", "a")),
                                       (coeffs["F12"], ("Da", "beta")))),
        RewriteRule(("beta", "Da"), el((coeffs["F21"], ("Da", "beta")),
                                       (coeffs["F22"], ("Dbeta", "a")))),
        RewriteRule(("beta", "Dbeta"), el((coeffs["B"], ("Dbeta", "beta")))),
        RewriteRule(("beta", "a"), el((const(qp(-1)), ("a", "beta")))),
        RewriteRule(("beta", "beta"), Element.zero()),
        RewriteRule(("Dbeta", "Da"), el((const(qp(1)), ("Da", "Dbeta")))),
        RewriteRule(("Da", "Da"), Element.zero()),
    ]
    return Presentation("Omega_ab", gens, rules, scalar_one=const(ONE))


def _ab_conditions(const):
    """The four consistency conditions over the a-beta block: d applied to
    both defining relations (as elements), and the two products of the
    relation with a differential (as overlap words whose two first reductions
    must agree; a single deterministic reduction collapses them trivially)."""
    E = Element.word
    one = const(ONE)
    q = const(qp(1))
    d_rel = (E(("Da", "beta"), one) + E(("a", "Dbeta"), one)
             - E(("Dbeta", "a"), q) + E(("beta", "Da"), q))
    d_beta_sq = E(("Dbeta", "beta"), one) - E(("beta", "Dbeta"), one)
    return [
        ("d_of_relation", "element", d_rel),
        ("d_of_beta_sq", "element", d_beta_sq),
        ("ideal_times_Da", "overlap", ("beta", "a", "Da")),
        ("ideal_times_Dbeta", "overlap", ("beta", "a", "Dbeta")),
    ]


def _condition_residual(kind, payload, p):
    if kind == "element":
        return normalize(payload, p)
    from .kernel import _one_step

    word = payload
    rules = p.rule_by_pair
    redexes = [
        (i, rules[(word[i], word[i + 1])])
        for i in range(len(word) - 1)
        if (word[i], word[i + 1]) in rules
    ]
    if len(redexes) < 2:
        raise QdcError(f"overlap condition on {word} has fewer than two redexes")
    i0, r0 = redexes[0]
    first = normalize(_one_step(word, i0, r0), p)
    residual = Element.zero()
    for i, r in redexes[1:]:
        residual = residual + (normalize(_one_step(word, i, r), p) - first)
    return residual


def ansatz_residuals(z):
    """Residuals of the four consistency conditions at concrete coefficients;
    all zero exactly when the candidate rules define a consistent calculus."""
    coeffs = z.as_dict()
    p = _ansatz_presentation(coeffs, lambda s: s)
    return [_condition_residual(kind, payload, p)
            for _, kind, payload in _ab_conditions(lambda s: s)]


@dataclass
class SolveReport:
    linear: list
    quadratic: list
    branch_f22_zero: Ansatz
    branch_alternative: Ansatz
    free_parameters: dict
    selected: str

    def constraints(self):
        return list(self.linear) + list(self.quadratic)


EXPECTED_LINEAR = ("F11 + q*F22 - q", "F12 + q*F21 + 1", "B - 1")
EXPECTED_QUADRATIC = ("F12*F22", "F11*F22 - q*A*F22")


def solve_ansatz():
    """Reduce the consistency conditions with fully symbolic coefficients and
    read off the constraint polynomials and the two solution branches."""
    coeffs = {v: CoeffPoly.var(v) for v in _VARS}
    const = CoeffPoly.const
    p = _ansatz_presentation(coeffs, const)
    linear, quadratic = [], []
    for name, kind, payload in _ab_conditions(const):
        res = _condition_residual(kind, payload, p)
        for word, poly in res.terms.items():
            poly = poly.unit_scaled()
            degree = max(sum(m) for m in poly.terms)
            bucket = linear if degree <= 1 else quadratic
            if poly not in bucket:
                bucket.append(poly)
    report = SolveReport(
        linear=linear,
        quadratic=quadratic,
        branch_f22_zero=paper_branch(),
        branch_alternative=alternative_branch(qp(2)),
        free_parameters={
            "F22 = 0 branch": "A free (q^2 selected), F21 free with "
                              "F12 = -1 - q*F21 (F21 = -q selected)",
            "alternative branch": "A free; F11 = q*A, F22 = 1 - A, F12 = 0",
        },
        selected="F22 = 0 with A = q^2",
    )
    return report


def ansatz_checks(cat=None):
    """Suite-facing wrapper: constraints match the stated ones, the selected
    branch reproduces the mixed relations, residuals behave."""
    cat = cat or get_catalog()
    out = []
    rep = solve_ansatz()

    def match(expected_texts, got):
        missing = []
        want = [_expected_poly(t) for t in expected_texts]
        for w, t in zip(want, expected_texts):
            if w not in got:
                missing.append(t)
        extra = len(got) - len([w for w in want if w in got])
        return missing, extra

    def fn_linear():
        missing, extra = match(EXPECTED_LINEAR, rep.linear)
        if missing or extra:
            return f"missing {missing}, {extra} unexpected of {[str(p) for p in rep.linear]}"
        return None

    def fn_quadratic():
        missing, extra = match(EXPECTED_QUADRATIC, rep.quadratic)
        if missing or extra:
            return f"missing {missing}, {extra} unexpected of {[str(p) for p in rep.quadratic]}"
        return None

    out.append(timed_check("ansatz.linear_constraints",
                           "linear consistency conditions as stated", "(22)",
                           fn_linear))
    out.append(timed_check("ansatz.quadratic_constraints",
                           "quadratic consistency conditions as stated", "(23)",
                           fn_quadratic))

    omega = cat.presentation("Omega")

    def fn_branch_rules():
        z = rep.branch_f22_zero
        sc = cat.scalar
        E = Element.word
        made = {
            "a_Da": E(("a", "Da"), sc(ONE)) - E(("Da", "a"), sc(z.A)),
            "a_Dbeta": E(("a", "Dbeta"), sc(ONE)) - E(("Dbeta", "a"), sc(z.F11))
                       - E(("Da", "beta"), sc(z.F12)),
            "beta_Da": E(("beta", "Da"), sc(ONE)) - E(("Da", "beta"), sc(z.F21))
                       - E(("Dbeta", "a"), sc(z.F22)),
            "beta_Dbeta": E(("beta", "Dbeta"), sc(ONE))
                       - E(("Dbeta", "beta"), sc(z.B)),
        }
        for ident in omega.identities_in_family("dT_relations"):
            if ident.name in made:
                if made[ident.name] != ident.lhs - ident.rhs:
                    return f"branch rule {ident.name} differs from the stated relation"
                del made[ident.name]
        return None if not made else f"unmatched {sorted(made)}"

    out.append(timed_check("ansatz.branch_reproduces_mixed_rules",
                           "F22 = 0, A = q^2 branch gives the four stated "
                           "mixed relations verbatim", "(24a)", fn_branch_rules))

    def residual_check(z, expect_zero):
        def fn():
            res = ansatz_residuals(z)
            bad = [r for r in res if not r.is_zero()]
            if expect_zero and bad:
                return f"{len(bad)} nonzero residuals"
            if not expect_zero and not bad:
                return "residuals vanished on the control"
            return None
        return fn

    out.append(timed_check("ansatz.residuals_selected_branch",
                           "all four residuals vanish on the selected branch",
                           "(20)-(21)", residual_check(rep.branch_f22_zero, True)))
    out.append(timed_check("ansatz.residuals_alternative_branch",
                           "all four residuals vanish on the alternative branch",
                           "(23)", residual_check(rep.branch_alternative, True)))
    control = Ansatz(A=ONE, B=ONE, F11=ONE, F12=ZERO, F21=ZERO, F22=ZERO)
    out.append(timed_check("ansatz.residuals_perturbed_control",
                           "perturbed coefficients leave a nonzero residual",
                           "(22)", residual_check(control, False)))
    return out


def _expected_poly(text):
    """Tiny builder for the expected constraint polynomials."""
    q = CoeffPoly.const(qp(1))
    one = CoeffPoly.const(ONE)
    v = {name: CoeffPoly.var(name) for name in _VARS}
    table = {
        "F11 + q*F22 - q": v["F11"] + q * v["F22"] - q,
        "F12 + q*F21 + 1": v["F12"] + q * v["F21"] + one,
        "B - 1": v["B"] - one,
        "F12*F22": v["F12"] * v["F22"],
        "F11*F22 - q*A*F22": v["F11"] * v["F22"] - q * v["A"] * v["F22"],
    }
    return table[text].unit_scaled()


# -- identity families ---------------------------------------------------------


def verify_family(family, cat=None):
    """Reduce every identity of the named family to its residual."""
    cat = cat or get_catalog()
    p, idents = cat.find_family(family)
    if p is None:
        raise UnknownFamilyError(
            f"unknown family {family!r}; have {sorted(cat.all_families())}"
        )
    out = []
    for ident in idents:
        desc = f"{print_ast(ident.lhs_ast)} = {print_ast(ident.rhs_ast)}" \
            if ident.lhs_ast is not None else ident.name

        def fn(ident=ident, p=p):
            res = normalize(ident.lhs - ident.rhs, p)
            return None if res.is_zero() else format_element(res, p)

        out.append(timed_check(f"{family}.{ident.name}", desc, ident.eq, fn))
    return out


# -- structure equations --------------------------------------------------------


def verify_structure_equations(cat=None):
    """Three layers: the two-form differentials of the one-form composites,
    the matrix form of the structure equation, and the reduced Cartan-Maurer
    matrix obtained from the one-form commutation relations."""
    cat = cat or get_catalog()
    loc = cat.presentation("Omega_loc")
    forms = cat.presentation("Forms")
    w1, u, w2, v = (loc.defined[k] for k in ("w1", "u", "w2", "v"))
    out = []

    # layer 1: d of each composite equals the stated two-form, in Omega_loc
    layer1 = {
        "dw1": (w1, w1 * w1 - u * v),
        "du": (u, w1 * u - u * w2),
        "dw2": (w2, w2 * w2 - v * u),
        "dv": (v, w2 * v - v * w1),
    }
    for name, (form, rhs) in layer1.items():
        def fn(form=form, rhs=rhs):
            res = exterior_d(form, cat, normalized=False) - rhs
            res = normalize(res, loc)
            return None if res.is_zero() else format_element(res, loc)
        out.append(timed_check(f"structure.leibniz_{name}",
                               f"{name} from the graded Leibniz rule", "(39)", fn))

    # layer 2: the matrix identity dW = s3*W*s3*W, entrywise over the forms
    E = forms.el
    W = [[E("w1"), E("u")], [E("v"), E("w2")]]
    s3 = [[Element.unit(), Element.zero()], [Element.zero(), Element.unit(lint(-1))]]

    def matmul(M, N):
        return [
            [M[i][0] * N[0][j] + M[i][1] * N[1][j] for j in range(2)]
            for i in range(2)
        ]

    rhs_matrix = matmul(matmul(matmul(s3, W), s3), W)
    stated = [
        [E("w1") * E("w1") - E("u") * E("v"), E("w1") * E("u") - E("u") * E("w2")],
        [E("w2") * E("v") - E("v") * E("w1"), E("w2") * E("w2") - E("v") * E("u")],
    ]
    for i in range(2):
        for j in range(2):
            def fn(i=i, j=j):
                res = normalize(stated[i][j] - rhs_matrix[i][j], forms)
                return None if res.is_zero() else format_element(res, forms)
            out.append(timed_check(f"structure.matrix_{i+1}{j+1}",
                                   "structure equation matrix entry", "(38)", fn))

    # layer 3: reduce the two-forms with the one-form relations
    out.extend(verify_family("cartan_maurer", cat))
    return out


# -- localized-rule validation ---------------------------------------------------


def _inverse_names(p):
    return {g.name: g.inverse_of for g in p.generators if g.inverse_of}


def _clearing_words(rule, inverses):
    pattern = rule.pattern
    lead = []
    for g in pattern:
        if g in inverses:
            lead.append(inverses[g])
        else:
            break
    trail = []
    for g in reversed(pattern):
        if g in inverses:
            trail.append(inverses[g])
        else:
            break
    # cancel the prefix right-to-left and the suffix left-to-right
    return tuple(reversed(lead)), tuple(trail)


def verify_localized_rule(rule, cat=None):
    """Validate a localized rule by clearing its inverses and reducing both
    sides in a system of already-established rules.

    Cancellation pairs g*g_inv -> 1 are definitional for the localization and
    always pass.  Every other rule is multiplied on the left/right by the
    inverted generators, then both sides are reduced using the inverse-free
    rules, the cancellations, and the localized rules listed before it in
    the catalog document; the rule passes exactly when the two normal forms
    agree.
    """
    cat = cat or get_catalog()
    loc = cat.presentation("Omega_loc")
    inverses = _inverse_names(loc)
    touched = [g for g in rule.pattern if g in inverses]
    touched += [g for w in rule.replacement.terms for g in w if g in inverses]
    if not touched:
        raise QdcError("verify_localized_rule needs a rule involving an inverse")

    if _is_cancellation(rule, inverses):
        return True, "definitional cancellation"

    try:
        idx = loc.rules.index(rule)
    except ValueError:
        idx = len(loc.rules)
    partial_rules = []
    for i, r in enumerate(loc.rules):
        uses_inverse = any(g in inverses for g in r.pattern) or any(
            g in inverses for w in r.replacement.terms for g in w
        )
        if not uses_inverse or _is_cancellation(r, inverses) or i < idx:
            if r.pattern != rule.pattern:
                partial_rules.append(r)
    partial = Presentation("Omega_loc_partial", loc.generators, partial_rules,
                           validate=False)

    left, right = _clearing_words(rule, inverses)
    lw = Element.word(left)
    rw = Element.word(right)
    lhs = normalize(lw * Element.word(rule.pattern) * rw, partial)
    rhs = normalize(lw * rule.replacement * rw, partial)
    if lhs == rhs:
        return True, "cleared and reduced to a common form"
    leftover = any(
        g in inverses for e in (lhs, rhs) for w in e.terms for g in w
    )
    if leftover:
        return False, "uncleared inverse after reduction; rule rejected"
    return False, (
        f"cleared forms differ: {format_element(lhs, partial)} vs "
        f"{format_element(rhs, partial)}"
    )


def _is_cancellation(rule, inverses):
    if len(rule.pattern) != 2:
        return False
    x, y = rule.pattern
    pair = inverses.get(x) == y or inverses.get(y) == x
    return pair and rule.replacement == Element.unit()


def localized_rule_checks(cat=None, only_dgamma=False):
    cat = cat or get_catalog()
    loc = cat.presentation("Omega_loc")
    inverses = _inverse_names(loc)
    out = []
    for r in loc.rules:
        involved = {g for g in r.pattern if g in inverses}
        involved |= {g for w in r.replacement.terms for g in w if g in inverses}
        if not involved:
            continue
        if only_dgamma and "Dgamma_inv" not in involved:
            continue

        def fn(r=r):
            ok, why = verify_localized_rule(r, cat)
            return None if ok else why

        out.append(timed_check(
            f"localized.{'_'.join(r.pattern)}",
            f"clearing check for {'*'.join(r.pattern)} -> ...", r.eq, fn))
    return out
