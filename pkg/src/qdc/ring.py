"""Exact arithmetic in Q[q, q^-1], the coefficient ring of every computation.

Scalars are Laurent polynomials in the deformation parameter q with rational
coefficients, stored sparsely as {exponent: Fraction}.  All identity checking
in this package bottoms out in equality of these scalars, so they are exact:
no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentScalar:
    """Immutable sparse Laurent polynomial in q over the rationals.

    The zero polynomial is the empty map; stored coefficients are never zero,
    which makes structural equality of the maps the same thing as equality in
    the ring.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for exp, c in coeffs.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c:
                    data[int(exp)] = c
        object.__setattr__(self, "coeffs", data)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n):
        return cls({0: Fraction(n)})

    @classmethod
    def from_fraction(cls, f):
        return cls({0: Fraction(f)})

    @classmethod
    def q_power(cls, k):
        return cls({k: Fraction(1)})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_unit(self):
        """True for monomials r*q^k with r != 0; exactly the invertible scalars."""
        return len(self.coeffs) == 1

    def unit_inverse(self):
        """Inverse of a unit scalar r*q^k, i.e. (1/r)*q^-k."""
        if not self.is_unit():
            raise ValueError(f"not a unit in Q[q, q^-1]: {self}")
        ((k, r),) = self.coeffs.items()
        return LaurentScalar({-k: 1 / r})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, _F0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _wrap(out)

    def __sub__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, _F0) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _wrap(out)

    def __neg__(self):
        return _wrap({k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                s = out.get(k, _F0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return _wrap(out)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers of a scalar")
        acc = ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- evaluation --------------------------------------------------------

    def eval_at(self, q0):
        """Substitute an exact nonzero rational for q."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ValueError("q = 0 is outside the ring: q^-1 undefined")
        total = _F0
        for k, c in self.coeffs.items():
            total += c * q0**k
        return total

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(tuple(sorted(self.coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- printing ----------------------------------------------------------

    def __str__(self):
        """Report form: terms by descending exponent, e.g. 'q^2 - 2 + q^-2'."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            mag = _term_str(abs(c), k)
            if not parts:
                parts.append(mag if c > 0 else "-" + mag)
            else:
                parts.append(("+ " if c > 0 else "- ") + mag)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentScalar({self})"

    def degree_range(self):
        """(min exponent, max exponent); (0, 0) for the zero scalar."""
        if not self.coeffs:
            return (0, 0)
        return (min(self.coeffs), max(self.coeffs))


def _term_str(c, k):
    if k == 0:
        return str(c)
    qpart = "q" if k == 1 else f"q^{k}"
    if c == 1:
        return qpart
    return f"{c}*{qpart}"


def _wrap(data):
    s = LaurentScalar.__new__(LaurentScalar)
    object.__setattr__(s, "coeffs", data)
    object.__setattr__(s, "_hash", None)
    return s


_F0 = Fraction(0)

ZERO = LaurentScalar()
ONE = LaurentScalar({0: 1})
Q = LaurentScalar({1: 1})
QINV = LaurentScalar({-1: 1})


def qp(k):
    """The scalar q^k."""
    return LaurentScalar.q_power(k)


def lint(n):
    """The constant scalar n."""
    return LaurentScalar.from_int(n)


def lfrac(num, den=1):
    return LaurentScalar.from_fraction(Fraction(num, den))
