# Posets with vanishing phi0
#
# When the Hasse diagram is a cycle with at least two sources, phi0 is zero
# and phi factors as (x^p - 1)(x^q - 1).  Such a poset behaves like a
# "multiplicative" block: inserting it just multiplies Coxeter polynomials.

from refcox import classc, coxeter_poly, refined_pair
from refcox import poset as P
from refcox.polyspec import cyclotomic_profile

for runs in [(1, 1, 1, 1), (2, 1, 1, 1), (3, 1, 1, 2), (1, 1, 1, 1, 1, 1)]:
    S = P.a_tilde(runs)
    print(runs, P.is_a_tilde(S), coxeter_poly(S), "phi0 =", refined_pair(S).phi0)

# Extending by one element and then inserting such a cycle at it keeps phi0
# at zero.  Certificates record the steps.

for cert in classc.eight_element_certificates():
    S = classc.build(cert)
    rep = classc.verify_class_c(S)
    print(len(S), rep.phi, cyclotomic_profile(rep.phi).factors, "certified:", rep.certified)

members = classc.enumerate_class_c(8)
print("members with at most 8 elements:", len(members))
print(members[-1][1].to_json())
