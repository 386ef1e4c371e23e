"""Exact torus-equivariant quantum Schubert calculus on type-A flag varieties.

Polynomial arithmetic runs on a compiled kernel when one was built and on a
pure-Python kernel otherwise; ``eqschubert.backend()`` says which.
"""
from ._backend import available as available_backends, current as backend, set_backend
from .typeweyl import FlagShape, Perm, build_root_system, build_type_a
from .polyring import EquivPoly, QuantumClass, poly_ring
from .partitions import Partition
from .kostant import classical_product_oracle, xi
from .chevalley import divisor_product_gp, quantum_chevalley_gb
from .pieri import eq_quantum_pieri, grassmann_pieri, grassmann_space
from .giambelli import giambelli_class, gr_full_product
from .tables import format_class, parse_table

__version__ = "0.1.0"

__all__ = [
    "backend", "available_backends", "set_backend", "FlagShape", "Perm", "build_root_system", "build_type_a",
    "EquivPoly", "QuantumClass", "poly_ring", "Partition", "classical_product_oracle", "xi",
    "divisor_product_gp", "quantum_chevalley_gb", "eq_quantum_pieri", "grassmann_pieri",
    "grassmann_space", "giambelli_class", "gr_full_product", "format_class", "parse_table",
]
