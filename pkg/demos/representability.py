# Self-reciprocal polynomials through y = x + 1/x
#
# A self-reciprocal p of degree n can be written as x^n q(x + 1/x) after
# substituting x^2 for x.  Roots of p on the unit circle turn into real
# roots of q in [-2, 2], so Sturm sequences can count them exactly.

from refcox.coxeter import coxeter_poly
from refcox import cartan
from refcox.intpoly import parse_poly
from refcox.polyspec import count_real_roots, expand_represented, isolate_real_roots, represent, sturm_real_simple

p = parse_poly("x+1")
print(p, "->", represent(p).to_text("y"))

for weights in ([2, 3, 5], [2, 3, 6], [2, 3, 7]):
    phi = coxeter_poly(cartan.star(weights))
    q = represent(phi)
    print(weights, q.to_text("y"), "real simple:", sturm_real_simple(q),
          "real roots:", count_real_roots(q), "back:", expand_represented(q, phi.degree) == phi.substitute_square())

q = represent(coxeter_poly(cartan.star([2, 3, 5])))
print([(float(a), float(b)) for a, b in isolate_real_roots(q, 1e-6)])
