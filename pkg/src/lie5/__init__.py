"""Exact computations for five-dimensional solvable Lie algebras and the
geometries they define: rational linear algebra, Lie algebra structure,
derivations, Chevalley-Eilenberg cohomology, lattice certificates and an
identifier for the catalog of solvable model geometries.
"""

from .catalog import emit, fingerprint, identify, list_geometries
from .liealg import LieAlgebra, Representation
from .qlinalg import Poly, QMat, Subspace

__version__ = "0.1.0"

__all__ = [
    "LieAlgebra",
    "Representation",
    "QMat",
    "Poly",
    "Subspace",
    "emit",
    "fingerprint",
    "identify",
    "list_geometries",
    "__version__",
]
