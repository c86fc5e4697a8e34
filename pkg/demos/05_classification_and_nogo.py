"""
Invariant codes, CSS uniqueness and the stabiliser no-go
========================================================
"""

# %%
from __future__ import annotations

from phantomcodes.css import css_distance, stabilizer_nogo_8_4, uniqueness_classes, uniqueness_scan
from phantomcodes.permgroup import alternating_group_generators
from phantomcodes.reed_muller import classify_gl_invariant, invariant_codes, rm_parameters

# %%
# GL_3(F_2) acting on the seven points leaves exactly six codes invariant.
for c in classify_gl_invariant(3):
    print(c.dim, [format(r, "07b") for r in c.rows])
print("A_8 invariant dimensions:", [c.dim for c in invariant_codes(alternating_group_generators(8))])
print("punctured RM(1,4):", rm_parameters(1, 4, "punctured"))

# %%
# Pairs of invariant codes giving [[7, 3, d > 1]] CSS codes.
for c_x, c_z, code in uniqueness_scan(3):
    print("c_x dim", c_x.dim, "c_z dim", c_z.dim, "distances", css_distance(code))
print("classes up to exchanging X and Z:", len(uniqueness_classes(3)))

# %%
for line in stabilizer_nogo_8_4().lines():
    print(line)
