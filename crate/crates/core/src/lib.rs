//! Exact decision procedure for Mathieu-Zhao spaces of the form
//! `V = I + k*v_1 + ... + k*v_h` in `k[x_1, ..., x_n]`, where the ideal `I`
//! has finite codimension.
//!
//! The pipeline runs over the rationals: Gröbner basis and eliminants
//! ([`groebner`]), rational roots and the point grid ([`spectrum`]), the
//! orthogonal idempotents of `k[x]/I` ([`idempotents`]), the functionals
//! cutting out `V` ([`dualspace`]) and finally the two-condition test
//! ([`mzdecide`]). [`oracle`] is an independent brute-force check.
//!
//! The algebra is generic over [`polycore::Field`]; the aliases below fix the
//! exact rational instantiation used by the decision procedure.

pub mod cli;
pub mod dualspace;
pub mod error;
pub mod groebner;
pub mod idempotents;
pub mod linalg;
pub mod mzdecide;
pub mod oracle;
pub mod polycore;
pub mod spectrum;

pub use error::{MzError, Result};

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;
/// Polynomial over the rationals.
pub type Poly = polycore::Polynomial<Rational>;
/// Univariate polynomial over the rationals.
pub type UniPolyQ = polycore::UniPoly<Rational>;
pub type GroebnerBasisQ = groebner::GroebnerBasis<Rational>;
pub type QuotientDataQ = groebner::QuotientData<Rational>;
pub type PointSpectrumQ = spectrum::PointSpectrum<Rational>;
pub type IdempotentFamilyQ = idempotents::IdempotentFamily<Rational>;
pub type FunctionalSystemQ = dualspace::FunctionalSystem<Rational>;
