"""Exact computer algebra for hook-partition combinatorics, super Jack
polynomials, the ring of even supersymmetric polynomials, and type BC
supersymmetric interpolation polynomials at the specialized parameters
k = -1, h = q - p + 1/2."""

from superbc.partitions import (
    HookParams,
    NotAHook,
    Partition,
    contains,
    enumerate_hooks,
    is_hook,
    lambda_natural,
    partitions_of,
    transpose,
)
from superbc.exactalg import (
    THETA,
    LinearSolveOutcome,
    PoleError,
    RatFunc,
    SparsePoly,
    VariableMismatch,
    poly_substitute,
    scalar_eval,
    solve_exact,
)
from superbc.symmfunc import (
    DegenerateParameter,
    SymFun,
    basis_convert,
    jack_P,
    jack_inner,
    monomial_expand,
)
from superbc.superpoly import (
    ZeroTheta,
    is_even_supersymmetric,
    is_supersymmetric,
    lambda0_basis,
    phi_theta,
    res_map,
    squared_substitution,
    super_jack,
)
from superbc.interpbc import (
    DegenerateNormalization,
    GridPoint,
    InconsistentSystem,
    InterpolationResult,
    VerifySpec,
    c_factor,
    constants_ledger,
    d_mu,
    derive_k,
    expansion_identity,
    grid_point,
    interpolation_J,
    k_mu,
    shimura_image,
    verify_properties,
    weyl_vectors,
)

__version__ = "0.1.0"
