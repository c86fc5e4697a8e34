"""
Punctured hypercube codes and permutation-implemented CNOT circuits
===================================================================
"""

# %%
from __future__ import annotations

import numpy as np

from phantomcodes.css import (
    css_distance,
    hypercube_code,
    permutation_for_circuit,
    permutation_logical_action,
    phantom_certificate,
)
from phantomcodes.gl import cnot_circuit_unitary, transvection
from phantomcodes.permgroup import Permutation
from phantomcodes.statevector import apply_permutation, css_codewords, knill_laflamme_check

code = hypercube_code(3)
print(code, code.to_dict())
print("d_x, d_z, d =", css_distance(code))

# %%
# Reflecting the face {100, 101, 110, 111} swaps qubits 4 <-> 6 and 5 <-> 7.
swap = Permutation.from_cycles("(4 6)(5 7)", 7)
print("logical action:\n", permutation_logical_action(code, swap).matrix.to_array())
print("the same permutation from the circuit:", permutation_for_circuit(transvection(1, 2, 3)).cycle_string())

# %%
# At the state level the permutation is exactly the CNOT unitary, with no extra phase.
q = css_codewords(code)
m = q.logical_matrix(lambda psi: apply_permutation(psi, swap))
print("matches CNOT unitary:", np.allclose(m, cnot_circuit_unitary(transvection(1, 2, 3))))
print("Knill-Laflamme distance:", knill_laflamme_check(q, 2).distance)

# %%
# Every elementary transvection is realised, so every CNOT circuit is.
for k in (3, 4, 5):
    cert = phantom_certificate(hypercube_code(k))
    print(k, cert.verified, cert.image_order, cert.image_order_method)
