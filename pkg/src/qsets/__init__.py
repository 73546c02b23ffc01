"""Quantum sets, their q-subset ortholattices, exact continuous models, and
quantum topologies."""

from .core import DEFAULT_LIMIT, ElementMap, ElementSet, QuantumSet
from .errors import InputError, PreconditionError, QsetsError, ResourceLimitError
from .lattice import (OrthoLattice, Verdict, atom_completion, atom_quantum_set,
                      atoms, benzene_lattice, boolean_lattice, chain_lattice,
                      commutes, downset_completion, generated_subortholattice,
                      is_atomistic, is_distributive, is_orthomodular, mo_lattice,
                      orthomodular_witness, qcommutes, to_quantum_set,
                      verify_ortholattice)
from .projline import ArcSet, arc_commutes, arc_qcommutes, closure_points
from .qsubsets import (QSubsetLattice, enumerate_qsubsets, hereditary_witness,
                       induces_lattice_isomorphism, is_atomic, is_hereditary,
                       powerset_qsubset_masks, qcentral_elements)
from .realline import IntervalUnion
from .topology import (FiniteTopology, QuantumTopology, classical_gelfand,
                       generate_topology, is_strict_quantum_homeomorphism,
                       regular_open_lattice, verify_quantum_topology)

__version__ = "0.1.0"

__all__ = [
    "ArcSet", "DEFAULT_LIMIT", "ElementMap", "ElementSet", "FiniteTopology",
    "InputError", "IntervalUnion", "OrthoLattice", "PreconditionError",
    "QSubsetLattice", "QsetsError", "QuantumSet", "QuantumTopology",
    "ResourceLimitError", "Verdict", "arc_commutes", "arc_qcommutes",
    "atom_completion", "atom_quantum_set", "atoms", "benzene_lattice",
    "boolean_lattice", "chain_lattice", "classical_gelfand", "closure_points",
    "commutes", "downset_completion", "enumerate_qsubsets",
    "generate_topology", "generated_subortholattice", "hereditary_witness",
    "induces_lattice_isomorphism", "is_atomic", "is_atomistic",
    "is_distributive", "is_hereditary", "is_orthomodular",
    "is_strict_quantum_homeomorphism", "mo_lattice", "orthomodular_witness",
    "powerset_qsubset_masks", "qcentral_elements", "qcommutes",
    "regular_open_lattice", "to_quantum_set", "verify_ortholattice",
    "verify_quantum_topology",
]
