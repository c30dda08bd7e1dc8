"""Graded Hopf structure: coproduct, counit, antipode, and the central element.

Run:  python demos/05_hopf_structure.py
"""

from qdc import Element, format_element, normalize
from qdc.catalog import get_catalog
from qdc.hopf import (
    antipode,
    coproduct,
    counit,
    verify_central_element,
    verify_hopf_axioms,
)

cat = get_catalog()
loc = cat.presentation("Omega_loc")
W = Element.word

print("coproduct of a:", repr(coproduct(W(("a",)), cat)))
print("coproduct of Da:", repr(coproduct(W(("Da",)), cat)))
print("coproduct of a_inv (geometric series):",
      repr(coproduct(W(("a_inv",)), cat)))

print("\ncounit: eps(a) =", counit(W(("a",)), cat),
      "| eps(Da) =", counit(W(("Da",)), cat))

print("\nantipode of a:", format_element(antipode(W(("a",)), cat), loc))
print("antipode of Da:", format_element(antipode(W(("Da",)), cat), loc))

# the antipode law on a: multiply the two tensor legs of the coproduct
t = coproduct(W(("a",)), cat)
acc = Element.zero()
for (w1, w2), c in t.terms.items():
    acc = acc + antipode(W(w1), cat) * W(w2, c)
print("m(S x id) delta(a) =", format_element(normalize(acc, loc), loc))

checks = verify_hopf_axioms(cat)
print(f"\nHopf axioms and homomorphism checks: "
      f"{sum(c.passed for c in checks)}/{len(checks)}")

# the central element: a quotient of differentials commuting with everything
Dhat = loc.defined["Dhat"]
print("\ncentral element:", format_element(normalize(Dhat, loc), loc))
for g in ("a", "Dgamma"):
    res = normalize(Dhat * loc.el(g) - loc.el(g) * Dhat, loc)
    print(f"[Dhat, {g}] =", format_element(res, loc))

checks = verify_central_element(cat)
print(f"centrality checks: {sum(c.passed for c in checks)}/{len(checks)}")
