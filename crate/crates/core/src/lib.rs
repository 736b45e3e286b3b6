//! Positive finite-rank approximation operators on C[0, 1] and the
//! numerical certification of lower error estimates.
//!
//! The library builds the classical Bernstein, Kantorovic, Schoenberg
//! and integral Schoenberg operators, computes the spectra and iterate
//! decay of their collocation matrices, classifies total positivity and
//! oscillatory structure, and certifies the inequalities that bound
//! moduli of smoothness and K-functionals from above by the
//! approximation error.

pub mod bounds;
pub mod corpus;
pub mod error;
pub mod funcspace;
pub mod operators;
pub mod quad;
pub mod spectral;
pub mod splines;

pub use bounds::{
    compute_delta, verify_abstract_k_bound, verify_bernstein_corollary,
    verify_integral_schoenberg_corollary, verify_kantorovich_corollary, verify_main_theorem,
    verify_schoenberg_corollary, verify_seminorm_lemma, verify_uniform_corollary,
    BoundCertificate, BoundParameters, Intermediates, RangeNormChoice, VerifyOptions, SLACK,
};
pub use error::{Error, Result};
pub use funcspace::{
    check_mos_kfunc_inequality, forward_difference, k_functional_upper, modulus_of_smoothness,
    norm, norm_of_difference, seminorm, BoundCheck, DomainDescriptor, ExactFn, Grid, PNorm,
    SampledFunction, SeminormValue,
};
pub use operators::{
    bernstein_eigenvalues_exact, check_kantorovich_commutation, check_schoenberg_commutation,
    make_bernstein, make_integral_schoenberg, make_kantorovich, make_schoenberg,
    range_derivative_norm, Basis, FiniteRankOperator, Functional, OperatorKind, RangeElement,
    RangeNorm,
};
pub use spectral::{
    check_schoenberg_eigen_pattern, eigendecompose, fixed_point_projection, is_oscillatory,
    is_oscillatory_with_tol, is_totally_positive, is_totally_positive_by_elimination,
    iterate_decay, spectral_location_check,
    DecayTrace, EigenPatternReport,
    MinorMethod, ProjectionMatrix, Spectrum, TPReport, TPVerdict,
};
pub use splines::{KnotSequence, SplineCoefficients};
