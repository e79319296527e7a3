"""B-orbits on Hermitian symmetric varieties G/L, their equivariant local systems,
and the Bruhat orders on both."""

from .locsys import (DElement, alpha_circ, count_local_systems_closed,
                     count_local_systems_lattice, enumerate_D, gorder_closed_ADE,
                     gorder_closed_B, gorder_components_C, gorder_fixpoint)
from .orbits import (AdmissiblePair, bruhat_leq_pairs, classify, closed_order, e_alpha,
                     enumerate_pairs, m_alpha, max_H, max_rank_pairs, minimal_max_rank,
                     sigma_of_pair, standard_order_oracle)
from .rootsys import (Root, RootSystem, build_system, cominuscule_nodes, parabolic,
                      property_unic, setting)

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePair", "DElement", "Root", "RootSystem", "alpha_circ", "bruhat_leq_pairs",
    "build_system", "classify", "closed_order", "cominuscule_nodes",
    "count_local_systems_closed", "count_local_systems_lattice", "e_alpha", "enumerate_D",
    "enumerate_pairs", "gorder_closed_ADE", "gorder_closed_B", "gorder_components_C",
    "gorder_fixpoint", "m_alpha", "max_H", "max_rank_pairs", "minimal_max_rank", "parabolic",
    "property_unic", "setting", "sigma_of_pair", "standard_order_oracle",
]
