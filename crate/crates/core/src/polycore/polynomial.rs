use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{from_usize, pow, Field, Monomial, MonomialOrder};

/// Multivariate polynomial in a fixed number of variables.
///
/// Stored as a sparse map from exponent vectors to non-zero coefficients, so
/// two polynomials are equal exactly when their term maps are equal.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    /// The variable `x_var` (zero-based index).
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::term(Monomial::var_power(nvars, var, 1), F::one())
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Collects `(monomial, coefficient)` pairs, summing repeats and
    /// dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// `deg_{x_var}`, or `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    /// `Deg f = (deg_{x_1} f, ..., deg_{x_n} f)`.
    pub fn multidegree(&self) -> Option<Vec<u32>> {
        if self.is_zero() {
            return None;
        }
        Some((0..self.nvars).map(|i| self.degree_in(i).unwrap_or(0)).collect())
    }

    /// True when every term only involves `x_var`.
    pub fn is_univariate_in(&self, var: usize) -> bool {
        self.terms.keys().all(|m| m.exponents().iter().enumerate().all(|(i, &e)| i == var || e == 0))
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    /// `c * x^m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &F)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Divides by the leading coefficient under `order`.
    pub fn make_monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = F::one() / c.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// The substitution map `S_p: f -> f(p)`.
    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = t * pow(x, e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// `D_j f = x_j * df/dx_j`; every monomial `x^m` is an eigenvector with
    /// eigenvalue `m_j`.
    pub fn apply_d(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(var) > 0)
                .map(|(m, c)| (m.clone(), c.clone() * from_usize::<F>(m.exponent(var) as usize)))
                .collect(),
        }
    }

    /// `P(D)(self)` where `D = (D_1, ..., D_n)` is substituted into `op`.
    ///
    /// Since `D^i x^m = m_1^{i_1} ... m_n^{i_n} x^m` (with `0^0 = 1`), the
    /// action is diagonal on monomials and computed termwise.
    pub fn apply_p_of_d(&self, op: &Polynomial<F>) -> Self {
        assert_eq!(op.nvars, self.nvars, "operator arity mismatch");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let eig = Self::eigenvalue(op, m);
            out.add_term(m.clone(), c.clone() * eig);
        }
        out
    }

    /// `P(m) = sum_i p_i m^i`, the eigenvalue of `P(D)` on `x^m`.
    pub fn eigenvalue(op: &Polynomial<F>, m: &Monomial) -> F {
        let mut acc = F::zero();
        for (i, p) in &op.terms {
            let mut t = p.clone();
            for (&mi, &ii) in m.exponents().iter().zip(i.exponents()) {
                t = t * pow(&from_usize::<F>(mi as usize), ii);
            }
            acc = acc + t;
        }
        acc
    }

    /// Translates coordinates: returns `f(x_1 + a_1, ..., x_n + a_n)`.
    pub fn translate(&self, offsets: &[F]) -> Self {
        assert_eq!(offsets.len(), self.nvars, "offset has wrong dimension");
        // (x_i + a_i)^k expanded once per (variable, exponent)
        let mut cache: Vec<Vec<Polynomial<F>>> = vec![vec![Self::one(self.nvars)]; self.nvars];
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while cache[i].len() <= e as usize {
                    let lin = &Self::var(self.nvars, i) + &Self::constant(self.nvars, offsets[i].clone());
                    let next = cache[i].last().unwrap() * &lin;
                    cache[i].push(next);
                }
                if e > 0 {
                    t = &t * &cache[i][e as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolynomialDisplay<'a, F> {
        PolynomialDisplay { poly: self, names: Some(names) }
    }
}

/// Pretty printer with user-chosen variable names.
pub struct PolynomialDisplay<'a, F> {
    poly: &'a Polynomial<F>,
    names: Option<&'a [String]>,
}

impl<F: Field + Signed> fmt::Display for PolynomialDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut factors = Vec::new();
            if m.is_one() || !a.is_one() {
                factors.push(a.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                let name = match self.names {
                    Some(names) => names[i].clone(),
                    None => format!("x{}", i + 1),
                };
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<F: Field + Signed> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolynomialDisplay { poly: self, names: None }.fmt(f)
    }
}

impl<F: fmt::Debug> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().rev()).finish()
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x.clone() * y.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
        impl<F: Field> $tr<&Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    type P = Polynomial<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    fn c(n: usize, v: i64) -> P {
        P::constant(n, q(v))
    }

    #[test]
    fn difference_of_squares() {
        let p = (&x(1, 0) + &c(1, 1)) * (&x(1, 0) - &c(1, 1));
        assert_eq!(p, &x(1, 0).pow(2) - &c(1, 1));
    }

    #[test]
    fn adding_zero_is_identity() {
        let f = &x(2, 0) * &x(2, 1) + c(2, 7);
        assert_eq!(&f + &P::zero(2), f);
    }

    #[test]
    fn monomial_product() {
        let m = &x(2, 0) * &x(2, 1);
        assert_eq!(&m * &m, P::term(Monomial::new(vec![2, 2]), q(1)));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let f = &x(2, 0) + &x(2, 1);
        let g = &f - &x(2, 1);
        assert_eq!(g.num_terms(), 1);
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let f = &x(2, 0).pow(2) + &x(2, 1);
        assert_eq!(f.evaluate(&[q(2), q(3)]), q(7));
        assert_eq!(c(2, 1).evaluate(&[q(-4), q(9)]), q(1));
        let g = (&x(2, 0) - &c(2, 1)) * (&x(2, 1) - &c(2, 2));
        assert_eq!(g.evaluate(&[q(1), q(5)]), q(0));
    }

    #[test]
    fn euler_operator_examples() {
        let f = &x(2, 0).pow(2) * &x(2, 1);
        assert_eq!(f.apply_d(0), f.scale(&q(2)));
        assert!(c(2, 1).apply_d(0).is_zero());
        assert!(c(2, 1).apply_d(1).is_zero());
        let g = &x(2, 0).scale(&q(3)) + &x(2, 1);
        assert_eq!(g.apply_d(0), x(2, 0).scale(&q(3)));
    }

    #[test]
    fn p_of_d_examples() {
        let t3 = x(1, 0).pow(3);
        assert_eq!(t3.apply_p_of_d(&x(1, 0)), t3.scale(&q(3)));
        let f = &x(2, 0) + &c(2, 5);
        assert_eq!(f.apply_p_of_d(&P::one(2)), f);
        // P = x1*x2 acting on x1^2 x2^5: compare with D_1 then D_2
        let g = &x(2, 0).pow(2) * &x(2, 1).pow(5);
        let op = &x(2, 0) * &x(2, 1);
        let composed = g.apply_d(0).apply_d(1);
        assert_eq!(g.apply_p_of_d(&op), composed);
        assert_eq!(composed, g.scale(&q(10)));
    }

    #[test]
    fn translate_round_trip() {
        let f = &x(2, 0).pow(2) * &x(2, 1) - &c(2, 3);
        let g = f.translate(&[q(1), q(-2)]);
        assert_eq!(g.translate(&[q(-1), q(2)]), f);
        let t2 = x(1, 0).pow(2).translate(&[q(-1)]);
        assert_eq!(t2, &(&x(1, 0).pow(2) - &x(1, 0).scale(&q(2))) + &c(1, 1));
    }

    #[test]
    fn display_is_canonical() {
        let f = &(&x(2, 0).pow(2) - &x(2, 0).scale(&q(3))) + &c(2, 2);
        assert_eq!(f.to_string(), "x1^2 - 3*x1 + 2");
        let g = &x(2, 1).scale(&Q::new(1.into(), 2.into())).neg() + &x(2, 0);
        assert_eq!(g.to_string(), "x1 - 1/2*x2");
        let names = vec!["s".to_string(), "t".to_string()];
        assert_eq!(g.display_with(&names).to_string(), "s - 1/2*t");
        assert_eq!(P::zero(2).to_string(), "0");
        assert_eq!(c(1, -4).to_string(), "-4");
    }

    #[test]
    fn generic_over_f64() {
        let f = Polynomial::<f64>::var(2, 0).pow(2) + Polynomial::<f64>::var(2, 1);
        assert_eq!(f.evaluate(&[2.0, 3.0]), 7.0);
        assert_eq!(f.apply_d(0).evaluate(&[1.0, 1.0]), 2.0);
    }
}
