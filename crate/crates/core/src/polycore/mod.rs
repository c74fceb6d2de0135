//! Exact scalars, multivariate polynomials and the Euler operators `x_j d/dx_j`.

mod monomial;
mod polynomial;
pub mod univariate;

use std::fmt;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{Polynomial, PolynomialDisplay};
pub use univariate::UniPoly;

/// Coefficient field of the polynomial ring.
///
/// Every algorithm in this crate only needs field operations and an exact
/// zero test. The decision pipeline instantiates this with
/// [`BigRational`](num_rational::BigRational); `f64` satisfies the bound as
/// well but its zero tests are of course not exact.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Field for T where T: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = T> + FromPrimitive {}

/// `n` as a field element.
pub fn from_usize<F: Field>(n: usize) -> F {
    F::from_usize(n).expect("field has characteristic zero")
}

/// `base^exp` with `0^0 = 1`.
pub fn pow<F: Field>(base: &F, exp: u32) -> F {
    let mut acc = F::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}
