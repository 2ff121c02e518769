# Two ways to get the refined pair
#
# The minor version reduces the pencil x*C + C^T against one pivot element
# and reads phi0 off a principal minor.  The other version only needs two
# ordinary Coxeter polynomials: of S and of S with a new maximum.

from refcox import poset as P
from refcox.coxeter import coxeter_poly, refined_pair_minor, refined_pair_recovery

fork = P.from_relations(["m", "a", "b"], [("m", "a"), ("m", "b")])
for name, S in [("empty", P.empty()), ("point", P.chain(1)), ("2-chain", P.chain(2)),
                ("2-antichain", P.antichain(2)), ("3-chain", P.chain(3)), ("fork", fork)]:
    a = refined_pair_minor(S)
    b = refined_pair_recovery(S)
    print(f"{name:12} phi={str(coxeter_poly(S)):14} phi0={str(a.phi0):10} phi1={str(a.phi1):12} same={a == b}")

# The pivot does not matter.

S = P.a_tilde([2, 1, 1, 2])
print({s: str(refined_pair_minor(S, s).phi1) for s in S.labels})

# Ordinal sums only depend on the pairs of the summands, so the order of
# stacking is irrelevant.

from itertools import permutations
from refcox.coxeter import ordinal_sum_poly

parts = [P.chain(2), fork, P.antichain(2)]
print({str(coxeter_poly(P.ordinal_sum([parts[i] for i in order]))) for order in permutations(range(3))})
print(ordinal_sum_poly([refined_pair_minor(p) for p in parts]))
