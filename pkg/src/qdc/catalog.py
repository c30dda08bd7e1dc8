"""Loader for the presentation documents and the derived named elements.

The catalog documents live in catalog_data/ as plain text, one line per rule,
define, or expected identity, so the transcription can be reviewed line by
line against its source equations.  Loading validates orientation and parity
of every rule; the documents round-trip bit-exactly through the expression
parser (enforced in the test suite).
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .errors import CatalogFormatError, UnknownPresentationError
from .kernel import Element, Generator, Identity, Presentation, RewriteRule, normalize
from .parser import eval_ast, parse_ast
from .ring import LaurentScalar

_FILES = ("a_glq11.txt", "a_hat.txt", "omega.txt", "omega_loc.txt",
          "forms.txt", "lie_alg.txt", "planes.txt")

# How many oriented rules / expected identities each source equation family
# contributes; the coverage audit checks the loaded catalog against this.
_EXPECTED_COUNTS = {
    "(2)": 8, "(17)": 8, "(24a)": 4, "(24b)": 12,
    "(33)": 16, "(34)": 16, "(35)": 16, "(36)": 8, "(37)": 4,
    "(43)": 8, "(45)": 16, "(46)": 2, "(47)": 2, "(52)": 4,
}


def _data_text(fname):
    return resources.files("qdc").joinpath("catalog_data", fname).read_text()


class _Block:
    def __init__(self, name):
        self.name = name
        self.generators = []
        self.rule_lines = []   # (kind, lhs_text, rhs_text, eq)
        self.define_lines = []  # (name, expr_text, eq)
        self.identity_lines = []  # (family, ident, lhs_text, rhs_text, eq)


def _split_eq(text):
    if "@eq" in text:
        body, _, tag = text.partition("@eq")
        return body.strip(), tag.strip()
    return text.strip(), ""


def parse_document(text):
    """Parse one catalog document into raw blocks (no evaluation yet)."""
    blocks = []
    cur = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "presentation":
            cur = _Block(rest)
            blocks.append(cur)
            continue
        if cur is None:
            raise CatalogFormatError(f"line outside presentation block: {line!r}")
        if head == "generator":
            parts = rest.split()
            if len(parts) < 3 or parts[1] != "parity":
                raise CatalogFormatError(f"bad generator line: {line!r}")
            name, parity = parts[0], int(parts[2])
            inverse_of = None
            if len(parts) > 3:
                if len(parts) != 5 or parts[3] != "inverse_of":
                    raise CatalogFormatError(f"bad generator line: {line!r}")
                inverse_of = parts[4]
            cur.generators.append(Generator(name, parity, inverse_of))
        elif head in ("rule", "lrule"):
            body, eq = _split_eq(rest)
            lhs, arrow, rhs = body.partition("->")
            if not arrow:
                raise CatalogFormatError(f"rule line missing '->': {line!r}")
            cur.rule_lines.append((head, lhs.strip(), rhs.strip(), eq))
        elif head == "define":
            body, eq = _split_eq(rest)
            name, eqsign, expr = body.partition("=")
            if not eqsign:
                raise CatalogFormatError(f"define line missing '=': {line!r}")
            cur.define_lines.append((name.strip(), expr.strip(), eq))
        elif head == "identity":
            body, eq = _split_eq(rest)
            try:
                family, ident, rest2 = body.split(None, 2)
            except ValueError:
                raise CatalogFormatError(f"bad identity line: {line!r}") from None
            if not rest2.startswith(":"):
                raise CatalogFormatError(f"identity line missing ':': {line!r}")
            lhs, eqsign, rhs = rest2[1:].partition("=")
            if not eqsign:
                raise CatalogFormatError(f"identity line missing '=': {line!r}")
            cur.identity_lines.append((family, ident, lhs.strip(), rhs.strip(), eq))
        else:
            raise CatalogFormatError(f"unrecognized catalog line: {line!r}")
    return blocks


def _single_word(el, what):
    if len(el.terms) != 1:
        raise CatalogFormatError(f"{what} must be a single word")
    ((word, coeff),) = el.terms.items()
    if coeff != LaurentScalar.from_int(1):
        raise CatalogFormatError(f"{what} must have coefficient 1")
    return word


def _build(block, scalar_map=None):
    # a bare-rules presentation first, so defines/identities can be evaluated
    gens = block.generators
    stub = Presentation(block.name, gens, [], validate=False)

    def ev(text):
        el = eval_ast(parse_ast(text), stub)
        if scalar_map is not None:
            el = Element({w: scalar_map(c) for w, c in el.terms.items()})
        return el

    rules = []
    for kind, lhs_text, rhs_text, eq in block.rule_lines:
        pattern = _single_word(eval_ast(parse_ast(lhs_text), stub),
                               f"{block.name} rule pattern {lhs_text!r}")
        rules.append(RewriteRule(pattern, ev(rhs_text), eq=eq,
                                 localized=(kind == "lrule")))

    p = Presentation(block.name, gens, rules)

    for name, expr_text, eq in block.define_lines:
        el = eval_ast(parse_ast(expr_text), p)
        if scalar_map is not None:
            el = Element({w: scalar_map(c) for w, c in el.terms.items()})
        p.defined[name] = el

    for family, ident, lhs_text, rhs_text, eq in block.identity_lines:
        lhs_ast, rhs_ast = parse_ast(lhs_text), parse_ast(rhs_text)
        lhs = eval_ast(lhs_ast, p)
        rhs = eval_ast(rhs_ast, p)
        if scalar_map is not None:
            lhs = Element({w: scalar_map(c) for w, c in lhs.terms.items()})
            rhs = Element({w: scalar_map(c) for w, c in rhs.terms.items()})
        p.identities.append(Identity(family, ident, lhs, rhs, eq=eq,
                                     lhs_ast=lhs_ast, rhs_ast=rhs_ast))
    return p


class Catalog:
    """All presentations of the transcription, loaded and validated.

    `q0` substitutes an exact rational for q in every coefficient (the fast
    numeric shadow mode); None keeps full symbolic scalars.
    """

    def __init__(self, q0=None):
        self.q0 = Fraction(q0) if q0 is not None else None
        scalar_map = None
        if self.q0 is not None:
            q0v = self.q0
            scalar_map = lambda c: LaurentScalar.from_fraction(c.eval_at(q0v))
        self.presentations = {}
        for fname in _FILES:
            for block in parse_document(_data_text(fname)):
                if block.name in self.presentations:
                    raise CatalogFormatError(f"duplicate presentation {block.name}")
                self.presentations[block.name] = _build(block, scalar_map)

    def presentation(self, name):
        try:
            return self.presentations[name]
        except KeyError:
            raise UnknownPresentationError(
                f"unknown presentation {name!r}; have {sorted(self.presentations)}"
            ) from None

    def scalar(self, s):
        """Map a symbolic scalar into this catalog's coefficient mode."""
        if self.q0 is None:
            return s
        return LaurentScalar.from_fraction(s.eval_at(self.q0))

    def names(self):
        return sorted(self.presentations)

    # -- named composites ----------------------------------------------------

    def superinverse_entries(self):
        """The four entries of the inverse supermatrix, as named composites."""
        loc = self.presentation("Omega_loc")
        return {k: loc.defined[k] for k in ("iA", "iB", "iC", "iD")}

    def maurer_forms(self):
        """The four one-form composites, raw and in normal form."""
        loc = self.presentation("Omega_loc")
        out = {}
        for k in ("w1", "u", "w2", "v"):
            raw = loc.defined[k]
            out[k] = (raw, normalize(raw, loc))
        return out

    def find_family(self, family):
        """(presentation, identities) for a named identity family."""
        for p in self.presentations.values():
            idents = p.identities_in_family(family)
            if idents:
                return p, idents
        return None, []

    def all_families(self):
        out = {}
        for pname in sorted(self.presentations):
            for fam in self.presentations[pname].families():
                out[fam] = pname
        return out

    def coverage_audit(self):
        """Relation families whose rule/identity count disagrees with the
        transcription table; must come back empty."""
        counts = {}
        for p in self.presentations.values():
            seen_keys = set()
            for r in p.rules:
                key = ("rule", r.eq, r.pattern)
                if r.eq in _EXPECTED_COUNTS and key not in seen_keys:
                    seen_keys.add(key)
            for i in p.identities:
                if i.eq in _EXPECTED_COUNTS:
                    seen_keys.add(("ident", i.eq, i.family, i.name))
            for key in seen_keys:
                eq = key[1]
                counts.setdefault((p.name, eq, key[0]), 0)
                counts[(p.name, eq, key[0])] += 1
        problems = []
        # every equation family must be fully transcribed somewhere
        for eq, want in _EXPECTED_COUNTS.items():
            got = max(
                [n for (pname, tag, kind), n in counts.items() if tag == eq],
                default=0,
            )
            if got < want:
                problems.append(f"{eq}: expected {want} entries, best block has {got}")
        return problems


_CACHE = {}


def get_catalog(q0=None):
    key = Fraction(q0) if q0 is not None else None
    if key not in _CACHE:
        _CACHE[key] = Catalog(q0=key)
    return _CACHE[key]


def presentation(name, q0=None):
    return get_catalog(q0).presentation(name)


def superinverse_entries(q0=None):
    return get_catalog(q0).superinverse_entries()


def maurer_forms(q0=None):
    return get_catalog(q0).maurer_forms()


def roundtrip_lines():
    """(file, expression text) pairs for the parser round-trip check."""
    out = []
    for fname in _FILES:
        for block in parse_document(_data_text(fname)):
            for _, lhs, rhs, _eq in block.rule_lines:
                out.append((fname, lhs))
                out.append((fname, rhs))
            for _, expr, _eq in block.define_lines:
                out.append((fname, expr))
            for _, _, lhs, rhs, _eq in block.identity_lines:
                out.append((fname, lhs))
                out.append((fname, rhs))
    return out


def counit_value(gname):
    """Counit assignment on the localized generators; None when undefined."""
    if gname in ("a", "d", "a_inv", "d_inv"):
        return LaurentScalar.from_int(1)
    if gname in ("beta", "gamma", "Da", "Dbeta", "Dgamma", "Dd"):
        return LaurentScalar()
    return None


def counit_audit():
    """Rules on which the counit assignment fails to be a scalar identity."""
    bad = []
    for pname in ("A_glq11", "A_hat", "Omega", "Omega_loc"):
        p = get_catalog().presentation(pname)
        for r in p.rules:
            vals = [counit_value(g) for g in r.pattern]
            if any(v is None for v in vals):
                continue  # Dgamma_inv has no counit (0 is not invertible)
            lhs = vals[0] * vals[1]
            rhs = LaurentScalar()
            skip = False
            for w, c in r.replacement.terms.items():
                term = c
                for g in w:
                    v = counit_value(g)
                    if v is None:
                        skip = True
                        break
                    term = term * v
                if skip:
                    break
                rhs = rhs + term
            if not skip and lhs != rhs:
                bad.append((pname, r.pattern))
    return bad
