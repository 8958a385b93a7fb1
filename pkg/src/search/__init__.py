from .annealer import FlipAnnealer, reduce_to_simplex, stacked_potential
from .explorer import FlipGraphExplorer, bfs_component, closure_certificate

__all__ = [
    "FlipAnnealer",
    "FlipGraphExplorer",
    "bfs_component",
    "closure_certificate",
    "reduce_to_simplex",
    "stacked_potential",
]
