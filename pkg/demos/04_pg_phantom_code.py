"""
The ((8, 16, 2)) phantom code from PG(3,2)
==========================================
"""

# %%
from __future__ import annotations

import numpy as np

from phantomcodes.pg_code import (
    build_pg_code,
    distance_report,
    gram_report,
    stabilizer_characterization,
    transversal_phase,
    verify_phantom,
    verify_s8_and_uc,
)

code = build_pg_code()
g = gram_report(code)
print("point-star Gram diagonal/off-diagonal:", set(np.diag(g.star_gram)), g.star_gram[0, 1], "<t|t> =", g.t_norm)
print("logical Gram error:", g.logical_gram_error)

# %%
# The six generator permutations act as logical CNOT circuits.
cert = verify_phantom(code)
print([(c.generator, c.permutation.cycle_string(), c.logical_matrix_error) for c in cert.checks])

# %%
# The odd permutation tau_c also preserves the code and acts as U_c.
uc, rep = verify_s8_and_uc(code)
print("U_c spectrum (+1, -1):", rep.multiplicities, "trace over nonzero logicals:", round(rep.nonzero_trace, 12))
print("U_c column 1000:", np.round(uc[:, 8].real, 4))

# %%
t = transversal_phase(code, np.pi / 4)
print("T on every qubit, logical diagonal:", np.round(np.diag(t.logical).real, 6))

# %%
d = distance_report(code)
print("weight-1 errors detected:", d.weight1_all_zero, " Z1Z2 values:", d.z1z2_zero.real, d.z1z2_t.real, " distance:", d.distance)
ch = stabilizer_characterization(code)
print("joint eigenspace dimension:", ch.dimension, " irrep dimensions:", ch.irrep_dims)
