"""Exact computation of the Witten-Kontsevich tau-function.

The tau-function of 2D topological gravity is assembled as a truncated
Schur-function series whose coefficients are signed determinants over an
explicit two-index coefficient table, then transported between variable
families, logarithmed into the free energy and split by genus to extract
psi-class intersection numbers.  Four independent oracles (a recursion for
the table, Virasoro annihilation, a cut-and-join expansion, and a
fermionic Fock-space expansion) verify the result; all arithmetic is
exact over Q(sqrt(-2)).
"""

__version__ = "0.1.0"

from .amatrix import (
    BPoly,
    CoeffMatrix,
    a_block,
    a_closed,
    a_recursive,
    b_const,
    b_poly,
)
from .errors import (
    BudgetError,
    ConsistencyError,
    DegreeError,
    SelectionRuleError,
    UsageError,
)
from .exactnum import ExactScalar, Rational, SQRT_M2, double_factorial, factorial
from .fock import FockVector, fock_exp
from .partitions import Partition, partitions_of, z_order
from .schur import a_mu, character, det_exact, schur_to_p
from .series import FormalSeries
from .tau import (
    change_coords,
    correlator_genus,
    free_energy,
    genus_split,
    intersection,
    z_in_family,
    z_p,
    z_schur,
)
from .virasoro import (
    LadderOperator,
    build_L,
    build_W,
    cutjoin_step,
    gamma_apply,
    virasoro_check,
    z_cutjoin,
)

__all__ = [
    "__version__",
    "BPoly",
    "BudgetError",
    "CoeffMatrix",
    "ConsistencyError",
    "DegreeError",
    "ExactScalar",
    "FockVector",
    "FormalSeries",
    "LadderOperator",
    "Partition",
    "Rational",
    "SQRT_M2",
    "SelectionRuleError",
    "UsageError",
    "a_block",
    "a_closed",
    "a_mu",
    "a_recursive",
    "b_const",
    "b_poly",
    "build_L",
    "build_W",
    "change_coords",
    "character",
    "correlator_genus",
    "cutjoin_step",
    "det_exact",
    "double_factorial",
    "factorial",
    "fock_exp",
    "free_energy",
    "gamma_apply",
    "genus_split",
    "intersection",
    "partitions_of",
    "schur_to_p",
    "virasoro_check",
    "z_cutjoin",
    "z_in_family",
    "z_order",
    "z_p",
    "z_schur",
]
