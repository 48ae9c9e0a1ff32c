"""fiblat: exact semi-infinite Fibonacci bases of 1d lattice vertex superalgebras.

The package computes, entirely in exact arithmetic over Q(sqrt(D)):

* bigraded characters of the lattice algebra V on sqrt(D)*Z and of its
  basic subspaces W_j (``series``);
* infinite Fibonacci configurations of type (N, 2N-1) / (0, 2N), their
  tau sequences, enumeration and counting characters (``configs``);
* the Fock model and vertex-operator mode actions, defining relations,
  the affine sl2 bracket at D=2 and the Heisenberg commutators (``fock``,
  ``modes``);
* straightening of arbitrary mode monomials into the Fibonacci normal
  form, with rank checks behind the basis theorem (``straighten``);
* the residue-pairing functional realization of the restricted dual of
  W_0 and its annihilator ideal (``dual``).
"""

from .configs import (
    FibConfig,
    FibType,
    TailMismatch,
    TypeMismatch,
    UnboundedSupport,
    WindowViolation,
    charge_and_degree,
    config_to_monomial,
    enumerate_configs,
    fib_character,
    fib_type_for,
    monomial_to_config,
    tau_prefix,
    vacuum_config,
    vacuum_tau,
    validate_config,
)
from .dual import (
    ChargeMismatch,
    DualForm,
    IdealElement,
    dual_dim,
    form_basis,
    free_monomials,
    ideal_elements,
    ideal_generators,
    pair,
    verify_annihilator,
)
from .fock import (
    FockBasisState,
    FockVector,
    NonIntegralWeight,
    enumerate_basis,
    heisenberg_apply,
    standard_lambda,
    standard_weight,
    weight,
)
from .linalg import AmbiguousSolve, InconsistentSolve, exact_rank, solve_exact
from .modes import (
    CutoffExceeded,
    RelationSpec,
    VertexMode,
    annihilation_threshold,
    apply_mode,
    apply_monomial,
    evaluate_semiinfinite,
    heisenberg_vertex_commutator_check,
    mode_matrix,
    relation_apply,
    sl2_bracket_check,
    verify_relations,
)
from .monomials import FibMonomial, FibPolynomial, enumerate_fib_monomials
from .scalars import MixedRadicandError, QuadScalar, sqrt_of
from .series import (
    BiSeries,
    base_exponent,
    bounded_partition_count,
    char_basic_subspace,
    char_lattice,
    qpochhammer_inverse,
)
from .straighten import (
    NearPairRewrite,
    NonTermination,
    SingularMinor,
    evaluate_fib_polynomial,
    expand_in_fib_basis,
    independence_and_span_check,
    relation_matrix,
    rising_factorial,
    solve_near_pairs,
    straighten_monomial,
    vandermonde_det,
)

__version__ = "0.1.0"
