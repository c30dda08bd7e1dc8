"""Tour of the rewriting kernel: exact scalars, words, normal forms.

Run:  python demos/01_normal_forms.py
"""

from qdc import Element, check_local_confluence, format_element, normalize, qp
from qdc.catalog import get_catalog
from qdc.parser import parse_expression

cat = get_catalog()

# Scalars live in Q[q, q^-1] and are exact: no floats anywhere.
s = (qp(1) - qp(-1)) * (qp(1) - qp(-1))
print("(q - q^-1)^2 =", s)
print("evaluated at q = 2:", s.eval_at(2))

# The coordinate algebra of the quantum supergroup has four generators and
# eight oriented rules; normal forms sort words toward a < beta < gamma < d.
glq = cat.presentation("A_glq11")
print("\npresentation A_glq11:", len(glq.generators), "generators,",
      len(glq.rules), "rules")

e = Element.word(("d", "a"))
print("d*a reduces to:", format_element(normalize(e, glq), glq))

# the odd coordinates square to zero and q-commute with the even ones
for text in ("beta*a", "beta*beta", "gamma*beta"):
    el = parse_expression(text, glq)
    print(f"{text} reduces to:", format_element(normalize(el, glq), glq))

# Identity checking is reduction to zero: take a relation, rearrange it,
# reduce the difference.
residual = parse_expression("a*d - d*a - (q - q^-1)*gamma*beta", glq)
print("\na*d - d*a - (q - q^-1)*gamma*beta reduces to:",
      format_element(normalize(residual, glq), glq))

# Normal forms are well defined because the rule system is locally confluent:
# every word admitting two different first reductions ends up in the same
# place.  The checker enumerates all such words up to a degree bound.
rep = check_local_confluence(glq, 4)
print(f"\nconfluence of A_glq11 to degree 4: {rep.ambiguous} ambiguous words,"
      f" {len(rep.failures)} failures")

# The full differential algebra (coordinates + differentials, 32 rules) is
# confluent as well; this is the machine form of "the calculus is consistent".
omega = cat.presentation("Omega")
rep = check_local_confluence(omega, 4)
print(f"confluence of Omega to degree 4: {rep.ambiguous} ambiguous words,"
      f" {len(rep.failures)} failures")

e = parse_expression("Dd*gamma*a", omega)
print("\nDd*gamma*a reduces to:", format_element(normalize(e, omega), omega))
