# Coxeter polynomials and insertion
#
# A finite poset gives a unitriangular Cartan matrix C, and its Coxeter
# polynomial is det(x*C + C^T).  Replacing one element by a whole poset
# changes that polynomial in a very controlled way.

from refcox import cartan, coxeter_poly
from refcox import poset as P

chain = P.chain(3)
fork = P.from_relations(["m", "a", "b"], [("m", "a"), ("m", "b")])
print("3-chain:", coxeter_poly(chain))
print("fork:   ", coxeter_poly(fork))

# Same polynomial, different posets.  Now put each of them on top of a
# 2-chain, replacing its upper element.

two = P.chain(2)
for name, S in [("3-chain", chain), ("fork", fork)]:
    X = P.poset_insert(two, "1", S)
    print(f"2-chain <- {name}: {coxeter_poly(X)}   hasse: {X.hasse_arrows()}")

# The results differ, so phi alone does not control insertion.  The pair
# (phi0, phi1) does, and that works for any triangular algebra, not only
# posets.  Here the algebra is a star quiver.

from refcox import refined_pair
from refcox.coxeter import predicted_insertion

star = cartan.star([2, 3, 5])
v = star.vertex(3, 2)
for name, S in [("3-chain", chain), ("fork", fork)]:
    direct = coxeter_poly(cartan.insert(star, v, S))
    pred = predicted_insertion(coxeter_poly(star), coxeter_poly(cartan.remove(star, v)), refined_pair(S))
    print(f"star <- {name} at {v}: {direct}  (predicted equal: {pred == direct})")
