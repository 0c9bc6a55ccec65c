"""Explicit Hamiltonian cycles of s-stable Kneser graphs."""
from .core import (
    ClassInfo,
    Params,
    adjacent,
    canonical_class,
    class_order,
    gap_sequence,
    is_stable,
    make_params,
    rotate,
)
from .enumeration import count_vertices, enumerate_classes, enumerate_vertices
from .errors import InvalidParams, NotHamiltonian
from .hamilton import assemble_hamiltonian, hamiltonian_cycle
from .verify import verify_cycle

__all__ = [
    "ClassInfo",
    "InvalidParams",
    "NotHamiltonian",
    "Params",
    "adjacent",
    "assemble_hamiltonian",
    "canonical_class",
    "class_order",
    "count_vertices",
    "enumerate_classes",
    "enumerate_vertices",
    "gap_sequence",
    "hamiltonian_cycle",
    "is_stable",
    "make_params",
    "rotate",
    "verify_cycle",
]
