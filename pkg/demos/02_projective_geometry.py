"""
PG(3,2) lines, bipartitions of eight letters and the reference tables
=====================================================================
"""

# %%
from __future__ import annotations

from phantomcodes.gl import GlGroup, adjacent_transvections, phi_generators, tau_c
from phantomcodes.permgroup import PermGroup, orbit_and_stabilizer
from phantomcodes.pg32 import (
    B0,
    REFERENCE_LINE,
    Bipartition,
    all_lines,
    apply_to_subspace,
    bipartition_of_line,
    dual_line,
    isotropic_points,
    point_str,
    table1_csv,
    verify_tables,
)

lines = all_lines()
print(len(lines), "lines; isotropic points:", [point_str(x) for x in isotropic_points()])

# %%
# Lines and 4|4 bipartitions are both orbits of size 35 with stabilisers of order 576.
_, st_line = orbit_and_stabilizer(GlGroup(adjacent_transvections(), 4), REFERENCE_LINE, apply_to_subspace)
_, st_bip = orbit_and_stabilizer(PermGroup(phi_generators()), Bipartition(B0), lambda s, w: w.act(s))
print("stabiliser orders:", st_line, st_bip)

# %%
# Every line gets a bipartition; the duality l -> l^perp becomes the permutation tau_c.
for l in lines[:5]:
    print(l.id, l.point_strings(), bipartition_of_line(l.id), "dual line", dual_line(l).id)
print("duality is tau_c:", all(bipartition_of_line(dual_line(l).id) == bipartition_of_line(l.id).act(tau_c()) for l in lines))

# %%
# The embedded reference tables are recomputed column by column.
report = verify_tables()
print("mismatches:", report.mismatches, "rows checked:", report.rows_checked)
print(table1_csv().splitlines()[:4])
