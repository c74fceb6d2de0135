use thiserror::Error;

use crate::{Poly, Rational};

#[derive(Debug, Error)]
pub enum MzError {
    /// No pure power of `x_variable` lies among the Gröbner leading
    /// monomials, so `k[x]/I` is infinite dimensional.
    #[error("ideal has infinite codimension: no power of x{} is a leading monomial", .variable + 1)]
    InfiniteCodimension { variable: usize },

    /// The eliminant in `x_variable` has a factor without rational roots.
    /// `factor` is the part left after dividing out every rational root.
    #[error("eliminant in x{} does not split over the rationals: {factor}", .variable + 1)]
    NonSplitting { variable: usize, factor: Poly },

    #[error("refusing to enumerate 2^{size} subsets (cap is {cap})")]
    SubsetBudgetExceeded { size: usize, cap: usize },

    #[error("shift {value} for x{} puts a root at the origin", .variable + 1)]
    InvalidShift { variable: usize, value: Rational },

    #[error("elementary functional matrix is singular")]
    SingularMatrix,

    #[error("invalid problem: {0}")]
    InvalidProblem(String),
}

pub type Result<T, E = MzError> = std::result::Result<T, E>;
