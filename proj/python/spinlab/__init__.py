"""Coupled spin Hamiltonians: exact spectra, entanglement and symmetries."""

try:
    from ._spinlab import *  # noqa: F401,F403
    from ._spinlab import SpinlabError, HamiltonianSpec
except ImportError:  # in-tree build: extension sits next to, not inside, the package
    from _spinlab import *  # noqa: F401,F403
    from _spinlab import SpinlabError, HamiltonianSpec

__all__ = [
    "HamiltonianSpec",
    "SpinlabError",
    "charpoly",
    "charpoly_string",
    "commutant_dimension",
    "eigenvalues",
    "hamiltonian",
    "hamiltonian_exact",
    "is_symmetry",
    "reference_eigenvector",
    "row_sum_bound",
    "schmidt",
    "simple_eigenvector",
    "spectrum",
]
