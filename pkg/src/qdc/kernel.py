"""Graded free-algebra engine: words, linear combinations, oriented rewriting.

Words are tuples of generator names; an Element maps words to scalars.  A
Presentation fixes the generator order (degree-lexicographic term order) and
the oriented rewrite rules; normalize() reduces an element to its unique
normal form under leftmost rule application, memoized per word.

The scalar type is duck-typed: anything with +, -, *, unary - and truthiness
(false iff zero) works.  The catalog uses LaurentScalar; the ansatz solver
reuses the same engine with symbolic-coefficient polynomials.
"""

from __future__ import annotations

import itertools
import os
import sys
from dataclasses import dataclass, field

from .errors import (
    MissingImageError,
    NonHomogeneousError,
    QdcError,
    ReductionBudgetError,
)
from .ring import ONE, LaurentScalar

DEFAULT_STEP_BUDGET = 10**6

# Reduction chains recurse one frame per rewrite step along a word.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int
    inverse_of: str | None = None


class Element:
    """Finite linear combination of words with scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _clean=False):
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            self.terms = {w: c for w, c in terms.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({}, _clean=True)

    @classmethod
    def unit(cls, coeff=ONE):
        return cls({(): coeff})

    @classmethod
    def word(cls, letters, coeff=ONE):
        return cls({tuple(letters): coeff})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, word):
        return self.terms.get(tuple(word))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return Element(out, _clean=True)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element({w: -c for w, c in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        """Concatenation product, extended bilinearly; unreduced."""
        if not isinstance(other, Element):
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return Element(out, _clean=True)

    def scaled(self, coeff):
        if not coeff:
            return Element.zero()
        return Element({w: coeff * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "Element(0)"
        bits = [f"{c!s} {'*'.join(w) if w else '1'}" for w, c in self.terms.items()]
        return "Element(" + " | ".join(bits) + ")"


@dataclass(frozen=True)
class RewriteRule:
    """Oriented relation: every occurrence of `pattern` rewrites to `replacement`.

    `localized` marks rules whose replacement grows the total degree; those are
    exempt from the load-time order check and are instead validated by
    clearing their formal inverses (calculus.verify_localized_rule).
    """

    pattern: tuple
    replacement: Element
    eq: str = ""
    localized: bool = False


@dataclass(frozen=True)
class Identity:
    family: str
    name: str
    lhs: Element
    rhs: Element
    eq: str = ""
    lhs_ast: object = field(default=None, compare=False)
    rhs_ast: object = field(default=None, compare=False)


class Presentation:
    """Ordered generators plus oriented rules; defines a normal form."""

    def __init__(self, name, generators, rules, defined=None, identities=None,
                 validate=True, scalar_one=ONE):
        self.name = name
        self.generators = list(generators)
        self.rules = list(rules)
        self.scalar_one = scalar_one
        self.defined = dict(defined or {})
        self.identities = list(identities or [])
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise QdcError(f"{name}: duplicate generator names")
        self.parity_of = {g.name: g.parity for g in self.generators}
        self.rule_by_pair = {}
        for r in self.rules:
            if len(r.pattern) != 2:
                raise QdcError(f"{name}: rule patterns must have length 2: {r.pattern}")
            if r.pattern in self.rule_by_pair:
                raise QdcError(f"{name}: duplicate rule pattern {r.pattern}")
            self.rule_by_pair[r.pattern] = r
        self._nf_cache = {}
        if validate:
            self.validate()

    # -- basic helpers -----------------------------------------------------

    def gen(self, name):
        return self.generators[self.index[name]]

    def el(self, name, coeff=ONE):
        """Single-generator element, or a defined composite."""
        if name in self.index:
            return Element({(name,): coeff})
        if name in self.defined:
            return self.defined[name].scaled(coeff)
        raise QdcError(f"{self.name}: unknown generator or composite {name!r}")

    def unit(self, coeff=ONE):
        return Element.unit(coeff)

    def word_key(self, word):
        idx = self.index
        return (len(word), tuple(idx[g] for g in word))

    def word_parity(self, word):
        par = self.parity_of
        return sum(par[g] for g in word) & 1

    def element_parity(self, e):
        """Common parity of all words of e; None for zero, error if mixed."""
        if e.is_zero():
            return None
        parities = {self.word_parity(w) for w in e.terms}
        if len(parities) > 1:
            raise NonHomogeneousError(
                f"{self.name}: element mixes parities {sorted(parities)}"
            )
        return parities.pop()

    def identities_in_family(self, family):
        return [ident for ident in self.identities if ident.family == family]

    def families(self):
        seen = []
        for ident in self.identities:
            if ident.family not in seen:
                seen.append(ident.family)
        return seen

    # -- validation --------------------------------------------------------

    def validate(self):
        for r in self.rules:
            for g in r.pattern:
                if g not in self.index:
                    raise QdcError(f"{self.name}: rule pattern uses unknown {g!r}")
            pat_parity = self.word_parity(r.pattern)
            pat_key = self.word_key(r.pattern)
            for w in r.replacement.terms:
                for g in w:
                    if g not in self.index:
                        raise QdcError(f"{self.name}: rule replacement uses unknown {g!r}")
                if self.word_parity(w) != pat_parity:
                    raise QdcError(
                        f"{self.name}: parity-unbalanced rule {r.pattern} -> ... {w}"
                    )
                if not r.localized and self.word_key(w) >= pat_key:
                    raise QdcError(
                        f"{self.name}: rule {r.pattern} does not decrease "
                        f"the term order at {w}"
                    )
        for g in self.generators:
            if g.parity == 1 and (g.name, g.name) not in self.rule_by_pair:
                raise QdcError(f"{self.name}: odd generator {g.name} has no square rule")

    def missing_pairs(self):
        """Out-of-order adjacent pairs with no rule (candidate normal-form pairs)."""
        missing = []
        for j, gj in enumerate(self.generators):
            for i, gi in enumerate(self.generators):
                if j > i and (gj.name, gi.name) not in self.rule_by_pair:
                    missing.append((gj.name, gi.name))
        return missing

    # -- derived presentations ---------------------------------------------

    def restricted_to(self, names, new_name=None):
        """Sub-presentation on a generator subset, keeping rules that fit."""
        keep = set(names)
        gens = [g for g in self.generators if g.name in keep]
        rules = [
            r
            for r in self.rules
            if set(r.pattern) <= keep
            and all(set(w) <= keep for w in r.replacement.terms)
        ]
        return Presentation(new_name or f"{self.name}_sub", gens, rules)


def graded_product(p1, p2, name=None):
    """Free graded product of two presentations with Koszul cross-commutation.

    Generators of p2 come after those of p1; every pair (g2, g1) commutes up
    to the sign (-1)^(parity(g1)*parity(g2)).
    """
    overlap = set(p1.index) & set(p2.index)
    if overlap:
        raise QdcError(f"graded_product: generator name clash {sorted(overlap)}")
    gens = list(p1.generators) + list(p2.generators)
    rules = list(p1.rules) + list(p2.rules)
    for g2 in p2.generators:
        for g1 in p1.generators:
            sign = -1 if (g1.parity and g2.parity) else 1
            repl = Element({(g1.name, g2.name): LaurentScalar({0: sign})})
            rules.append(RewriteRule((g2.name, g1.name), repl, eq="(10)"))
    return Presentation(name or f"{p1.name}*{p2.name}", gens, rules)


# -- normalization ----------------------------------------------------------


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, limit):
        self.remaining = limit

    def spend(self):
        self.remaining -= 1
        if self.remaining < 0:
            raise ReductionBudgetError(
                "rewrite-step budget exceeded; a rule is mis-oriented or the "
                "budget (QDC_STEP_BUDGET) is too small for this input"
            )


def step_budget():
    raw = os.environ.get("QDC_STEP_BUDGET")
    return int(raw) if raw else DEFAULT_STEP_BUDGET


def _leftmost_redex(word, rules):
    for i in range(len(word) - 1):
        r = rules.get((word[i], word[i + 1]))
        if r is not None:
            return i, r
    return None


def _nf_word(word, p, budget):
    cache = p._nf_cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    m = _leftmost_redex(word, p.rule_by_pair)
    if m is None:
        res = Element({word: p.scalar_one})
    else:
        i, rule = m
        budget.spend()
        head, tail = word[:i], word[i + 2 :]
        acc = {}
        for rep_word, c in rule.replacement.terms.items():
            sub = _nf_word(head + rep_word + tail, p, budget)
            for w, c2 in sub.terms.items():
                s = acc.get(w)
                s = c * c2 if s is None else s + c * c2
                if s:
                    acc[w] = s
                else:
                    acc.pop(w, None)
        res = Element(acc, _clean=True)
    cache[word] = res
    return res


def normalize(e, p, budget=None):
    """Fixed point of rule application; linear and idempotent."""
    b = _Budget(budget if budget is not None else step_budget())
    acc = {}
    for word, c in e.terms.items():
        nf = _nf_word(word, p, b)
        for w, c2 in nf.terms.items():
            s = acc.get(w)
            s = c * c2 if s is None else s + c * c2
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
    return Element(acc, _clean=True)


def multiply(e1, e2, p=None):
    """Unreduced bilinear concatenation product (presentation only checks names)."""
    if p is not None:
        for e in (e1, e2):
            for w in e.terms:
                for g in w:
                    if g not in p.index:
                        raise QdcError(f"{p.name}: unknown generator {g!r}")
    return e1 * e2


def reduces_to_zero(e, p):
    return normalize(e, p).is_zero()


# -- derivations -------------------------------------------------------------


@dataclass(frozen=True)
class DerivationSpec:
    """Images of generators under an odd graded derivation."""

    images: dict
    parity: int = 1

    def image(self, g):
        try:
            return self.images[g]
        except KeyError:
            raise MissingImageError(f"derivation has no image for {g!r}") from None


def apply_derivation(d, e, p, normalized=True):
    """Graded Leibniz extension of d over each word, left to right."""
    out = Element.zero()
    for word, c in e.terms.items():
        sign = 1
        for i, g in enumerate(word):
            img = d.image(g)
            if img:
                left = Element.word(word[:i], c if sign > 0 else -c)
                right = Element.word(word[i + 1 :])
                out = out + left * img * right
            if p.parity_of[g]:
                sign = -sign
    return normalize(out, p) if normalized else out


def graded_commutator(e1, e2, p):
    """e1*e2 - (-1)^(p1*p2) e2*e1, normalized.

    Anticommutator for two odd arguments, plain commutator otherwise.
    """
    p1 = p.element_parity(e1)
    p2 = p.element_parity(e2)
    if p1 is None or p2 is None:
        return Element.zero()
    second = e2 * e1
    if p1 and p2:
        return normalize(e1 * e2 + second, p)
    return normalize(e1 * e2 - second, p)


# -- local confluence --------------------------------------------------------


@dataclass
class ConfluenceReport:
    presentation: str
    max_degree: int
    words_checked: int
    ambiguous: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def _one_step(word, i, rule):
    head, tail = word[:i], word[i + 2 :]
    out = {}
    for rep_word, c in rule.replacement.terms.items():
        w = head + rep_word + tail
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return Element(out, _clean=True)


def check_local_confluence(p, max_degree, budget=None):
    """Brute-force diamond check: every word of length <= max_degree that
    admits two distinct first reductions must reach one normal form both ways.
    """
    if max_degree < 3:
        raise QdcError("confluence check needs max_degree >= 3")
    names = [g.name for g in p.generators]
    rules = p.rule_by_pair
    checked = ambiguous = 0
    failures = []
    for length in range(3, max_degree + 1):
        for word in itertools.product(names, repeat=length):
            checked += 1
            redexes = [
                (i, rules[(word[i], word[i + 1])])
                for i in range(length - 1)
                if (word[i], word[i + 1]) in rules
            ]
            if len(redexes) < 2:
                continue
            ambiguous += 1
            nfs = []
            for i, rule in redexes:
                nfs.append(normalize(_one_step(word, i, rule), p, budget=budget))
            first = nfs[0]
            for other in nfs[1:]:
                if other != first:
                    failures.append((word, first, other))
                    break
    return ConfluenceReport(p.name, max_degree, checked, ambiguous, failures)


# -- canonical text ----------------------------------------------------------


def format_scalar_factor(c):
    """Scalar as an expression factor: parenthesized when it has several terms."""
    s = str(c)
    return f"({s})" if (" " in s) else s


def format_element(e, p):
    """Canonical text: terms sorted by the presentation's term order."""
    if e.is_zero():
        return "0"
    parts = []
    for w in sorted(e.terms, key=p.word_key):
        c = e.terms[w]
        body, negative = _term_text(c, w)
        if not parts:
            parts.append("-" + body if negative else body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)


def _term_text(c, w):
    word_txt = "*".join(w)
    if not w:
        s = str(c)
        if s.startswith("-") and " " not in s:
            return s[1:], True
        return (f"({s})" if " " in s else s), False
    if isinstance(c, LaurentScalar) and c.is_unit():
        ((k, r),) = c.coeffs.items()
        negative = r < 0
        mag = LaurentScalar({k: abs(r)})
        if mag.coeffs == {0: 1}:
            return word_txt, negative
        return f"{mag}*{word_txt}", negative
    return f"{format_scalar_factor(c)}*{word_txt}", False
