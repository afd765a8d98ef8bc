//! Calculus of 3-dimensional (cubic) matrices and cubic supermatrices:
//! direction-relative products, traces and supertraces, triple products,
//! ternary commutation brackets, and the n-ary brackets a cochain induces
//! on a structure-constant Lie (super)algebra — together with the
//! machinery to *verify* every identity the calculus asserts, exactly
//! over Gaussian integers or within tolerance over complex doubles.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`] — the two scalar regimes and the operations shared by both;
//! * [`grading`] — even/odd degree bookkeeping;
//! * [`cubic`] — cubic matrices: storage, sections, rows, transversals,
//!   diagonals, traces, adjoints;
//! * [`algebra`] — direction products, triple products, ternary brackets,
//!   and their laws as residual computations;
//! * [`supercubic`] — the graded refinement: supermatrices, supertraces,
//!   graded brackets and their laws;
//! * [`liealg`] — structure-constant Lie (super)algebras and their axioms
//!   as residual computations;
//! * [`cochain`] — alternating cochains, coboundaries, wedge products,
//!   induced n-ary brackets, and the sufficiency reports for their
//!   fundamental identities;
//! * [`rng`] — the pinned deterministic generator behind every random
//!   trial;
//! * [`report`] — residual bookkeeping and canonical (byte-stable) JSON
//!   reports;
//! * [`io`] — JSON interchange for matrices, algebras, and cochains;
//! * [`error`] — the error type: errors are for malformed requests, never
//!   for failed identities (those are reported residuals).

pub mod algebra;
pub mod cochain;
pub mod cubic;
pub mod error;
pub mod grading;
pub mod io;
pub mod liealg;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod supercubic;

pub use algebra::{
    associativity_residuals, commutator, fi_residual_cubic, mul_dir, prop1_residuals,
    quantum_nambu, ternary_commutator, triple_product,
};
pub use cochain::{
    fi_residual_element, gfi_residual_element, graded_ternary_bracket_from_cochain,
    nary_bracket_from_cochain, theorem1_report, theorem2_report, Cochain, SampleOptions, Sampling,
    MAX_EXHAUSTIVE_TUPLES,
};
pub use cubic::{Direction, Matrix2, Matrix3};
pub use error::{Error, Result};
pub use grading::Degree;
pub use liealg::{build_gl, build_gl_super, gl_basis_index, Element, StructureAlgebra};
pub use report::{MaxTracker, ResidualReport, VerificationReport};
pub use rng::{
    gen_random_cubic, gen_random_element, gen_random_homogeneous_element, gen_random_super,
    DrawScalar, Stream,
};
pub use scalar::{ExactScalar, FloatScalar, Scalar, DEFAULT_FLOAT_TOL};
pub use supercubic::{
    gfi_residual_cubic, graded_commutator, graded_triple_commutator, prop2_residuals,
    quantum_super_nambu, super_triple_product, SuperCubic, SuperStructure,
};
