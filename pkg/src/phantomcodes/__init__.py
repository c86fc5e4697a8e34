"""Phantom quantum codes: every logical CNOT circuit realised by a qubit permutation.

Submodules:

- :mod:`~phantomcodes.gf2` binary vectors, matrices and linear codes
- :mod:`~phantomcodes.permgroup` permutations and enumerated groups
- :mod:`~phantomcodes.gl` GL_k(F_2), transvections and phi: GL_4(F_2) -> A_8
- :mod:`~phantomcodes.pg32` the geometry PG(3,2) and its reference tables
- :mod:`~phantomcodes.reed_muller` Reed-Muller codes and invariant-code classification
- :mod:`~phantomcodes.css` CSS codes, hypercube codes and phantom certificates
- :mod:`~phantomcodes.statevector` dense states, Knill-Laflamme checks, collective spin
- :mod:`~phantomcodes.pg_code` the ((8, 16, 2)) code on PG(3,2)
"""

from .css import CssCode, css_distance, css_from_pair, hypercube_code, phantom_certificate
from .gf2 import BitVector, ClassicalCode, Gf2Matrix, dual_code, min_weight, rref
from .gl import GlElement, cnot_circuit_unitary, dual_element, gl_order, phi, transvection
from .permgroup import Permutation, PermGroup, act_on_bitvector, closure
from .reed_muller import invariant_codes, rm_code

__all__ = [
    "BitVector",
    "ClassicalCode",
    "CssCode",
    "Gf2Matrix",
    "GlElement",
    "PermGroup",
    "Permutation",
    "act_on_bitvector",
    "closure",
    "cnot_circuit_unitary",
    "css_distance",
    "css_from_pair",
    "dual_code",
    "dual_element",
    "gl_order",
    "hypercube_code",
    "invariant_codes",
    "min_weight",
    "phantom_certificate",
    "phi",
    "rm_code",
    "rref",
    "transvection",
]
