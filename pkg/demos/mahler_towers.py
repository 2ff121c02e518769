# Towers and Mahler measure
#
# Replacing a vertex v by chains of growing length gives algebras whose
# Coxeter polynomials obey phi_{i+1} = (x+1) phi_i - x phi_{i-1}.  The
# Mahler measure along such a tower need not move monotonically.

import numpy as np

from refcox import towers
from refcox.polyspec import mahler_measure

for name in towers.COUNTEREXAMPLES:
    rep = towers.counterexample(name)
    vals = np.array(rep.mahler_values())
    print(f"{name:18}", np.round(vals, 4), "recurrence:", rep.recurrence_ok)

# e8-star starts at measure 1 (cyclotomic), then Lehmer's number, then more.
rep = towers.counterexample("e8-star")
m, m1, m2 = rep.mahler_values()[1:4]
print("M'' > M * M':", m2 > m * m1)
print(rep.to_csv())

# Root locations for the Lehmer level.
lehmer = rep.levels[2].phi
res = mahler_measure(lehmer)
print(lehmer, res.measure, res.roots_outside_unit)
