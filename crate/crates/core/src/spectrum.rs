//! Roots of the eliminants, the point grid `Λ = Λ_1 × ... × Λ_n`, and the
//! coordinate shift that keeps every root away from zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{MzError, Result};
use crate::polycore::{Field, Polynomial, UniPoly};
use crate::Rational;

/// Distinct roots of one eliminant `f_i(x_i)` with their multiplicities,
/// sorted by root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootList<F> {
    pub var: usize,
    pub roots: Vec<(F, u32)>,
}

impl<F: Field> RootList<F> {
    pub fn degree(&self) -> u32 {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    /// `prod (t - λ)^{m(λ)}`.
    pub fn reconstruct(&self) -> UniPoly<F> {
        self.roots.iter().fold(UniPoly::one(), |acc, (r, m)| acc.mul(&UniPoly::linear_power(r.clone(), *m)))
    }

    /// Roots after `x_i -> x_i - c`, i.e. each root moves to `λ + c`.
    pub fn shifted(&self, c: &F) -> Self {
        RootList { var: self.var, roots: self.roots.iter().map(|(r, m)| (r.clone() + c.clone(), *m)).collect() }
    }
}

/// Yun's square-free decomposition of a monic polynomial over a field of
/// characteristic zero: pairwise coprime monic square-free `h_j` with
/// `f = prod h_j^j`. Only factors of positive degree are returned, in
/// increasing multiplicity.
pub fn squarefree_decomposition<F: Field>(f: &UniPoly<F>) -> Vec<(UniPoly<F>, u32)> {
    let f = f.monic();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let b = f.gcd(&df);
    let mut c = f.exact_div(&b).expect("gcd divides");
    let mut d = df.exact_div(&b).expect("gcd divides").sub(&c.derivative());
    let mut out = Vec::new();
    let mut mult = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = c.gcd(&d);
        c = c.exact_div(&a).expect("gcd divides");
        d = d.exact_div(&a).expect("gcd divides").sub(&c.derivative());
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, mult));
        }
        mult += 1;
    }
    out
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            let other = &n / &k;
            if other != k {
                large.push(other);
            }
            small.push(k.clone());
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots of a square-free polynomial; the second component is the
/// monic cofactor without rational roots (constant `1` when `h` splits).
fn rational_roots_squarefree(h: &UniPoly<Rational>) -> (Vec<Rational>, UniPoly<Rational>) {
    let mut rest = h.monic();
    let mut roots = Vec::new();
    if rest.coeff(0).is_zero() && rest.degree().unwrap_or(0) > 0 {
        roots.push(Rational::zero());
        rest = rest.exact_div(&UniPoly::linear(Rational::zero())).expect("root at zero");
    }
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest);
    }
    // integer-cleared coefficients
    let lcm = rest.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        rest.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let nums = positive_divisors(&ints[0]);
    let dens = positive_divisors(ints.last().unwrap());
    let mut candidates: Vec<Rational> = Vec::new();
    for p in &nums {
        for q in &dens {
            let r = Rational::new(p.clone(), q.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        if rest.eval(&r).is_zero() {
            rest = rest.exact_div(&UniPoly::linear(r.clone())).expect("root divides");
            roots.push(r);
        }
    }
    (roots, rest)
}

/// All roots of the monic eliminant of `x_var` with multiplicities,
/// provided it splits into linear factors over the rationals.
///
/// `nvars` is only used to report a non-splitting factor as a polynomial of
/// the ambient ring.
pub fn rational_roots(f: &UniPoly<Rational>, var: usize, nvars: usize) -> Result<RootList<Rational>> {
    let mut roots = Vec::new();
    for (h, mult) in squarefree_decomposition(f) {
        let (rs, rest) = rational_roots_squarefree(&h);
        if rest.degree().unwrap_or(0) > 0 {
            return Err(MzError::NonSplitting { variable: var, factor: rest.to_multivariate(nvars, var) });
        }
        roots.extend(rs.into_iter().map(|r| (r, mult)));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let list = RootList { var, roots };
    debug_assert!(list.reconstruct() == f.monic());
    Ok(list)
}

/// Smallest non-negative integers `c_i` with `λ + c_i ≠ 0` for every root
/// `λ` of `f_i`.
pub fn choose_shift(rootlists: &[RootList<Rational>]) -> Vec<Rational> {
    rootlists
        .iter()
        .map(|rl| {
            let mut c = 0i64;
            while rl.roots.iter().any(|(r, _)| (r + Rational::from_integer(c.into())).is_zero()) {
                c += 1;
            }
            Rational::from_integer(c.into())
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftDirection {
    /// `x_i -> x_i - c_i`
    Forward,
    /// `x_i -> x_i + c_i`
    Inverse,
}

/// Transports a polynomial along the automorphism `x_i -> x_i ∓ c_i`.
pub fn apply_shift<F: Field>(f: &Polynomial<F>, shift: &[F], dir: ShiftDirection) -> Polynomial<F> {
    let offsets: Vec<F> = match dir {
        ShiftDirection::Forward => shift.iter().map(|c| -c.clone()).collect(),
        ShiftDirection::Inverse => shift.to_vec(),
    };
    f.translate(&offsets)
}

/// One point `λ` of the grid together with `m(λ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumPoint<F> {
    pub coords: Vec<F>,
    pub multiplicity: Vec<u32>,
}

impl<F: Field> SpectrumPoint<F> {
    /// `m(λ_1) * ... * m(λ_n)`, the dimension of the local factor at `λ`.
    pub fn local_dimension(&self) -> usize {
        self.multiplicity.iter().map(|&m| m as usize).product()
    }
}

/// `Λ = Λ_1 × ... × Λ_n` in shifted coordinates.
///
/// Points are enumerated lexicographically by root index, the first
/// variable varying slowest.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSpectrum<F> {
    rootlists: Vec<RootList<F>>,
    shift: Vec<F>,
    points: Vec<SpectrumPoint<F>>,
}

impl<F: Field> PointSpectrum<F> {
    /// Builds the grid from root lists of the *unshifted* eliminants.
    pub fn new(original: &[RootList<F>], shift: Vec<F>) -> Self {
        assert_eq!(original.len(), shift.len(), "one shift per variable");
        let rootlists: Vec<RootList<F>> = original.iter().zip(&shift).map(|(rl, c)| rl.shifted(c)).collect();
        let mut points = vec![SpectrumPoint { coords: Vec::new(), multiplicity: Vec::new() }];
        for rl in &rootlists {
            let mut next = Vec::with_capacity(points.len() * rl.roots.len());
            for p in &points {
                for (r, m) in &rl.roots {
                    let mut q = p.clone();
                    q.coords.push(r.clone());
                    q.multiplicity.push(*m);
                    next.push(q);
                }
            }
            points = next;
        }
        PointSpectrum { rootlists, shift, points }
    }

    pub fn nvars(&self) -> usize {
        self.rootlists.len()
    }

    pub fn rootlists(&self) -> &[RootList<F>] {
        &self.rootlists
    }

    pub fn shift(&self) -> &[F] {
        &self.shift
    }

    pub fn points(&self) -> &[SpectrumPoint<F>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Index of each coordinate of point `idx` within its root list.
    pub fn root_indices(&self, idx: usize) -> Vec<usize> {
        let mut rest = idx;
        let mut out = vec![0; self.rootlists.len()];
        for (i, rl) in self.rootlists.iter().enumerate().rev() {
            out[i] = rest % rl.roots.len();
            rest /= rl.roots.len();
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `λ` in the caller's original coordinates.
    pub fn original_coords(&self, idx: usize) -> Vec<F> {
        self.points[idx].coords.iter().zip(&self.shift).map(|(x, c)| x.clone() - c.clone()).collect()
    }

    /// The shifted eliminants `f_i(x_i - c_i)`.
    pub fn eliminants(&self) -> Vec<UniPoly<F>> {
        self.rootlists.iter().map(RootList::reconstruct).collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.rootlists.iter().map(RootList::degree).collect()
    }
}

impl PointSpectrum<Rational> {
    /// True when no shifted root is zero.
    pub fn avoids_origin(&self) -> bool {
        self.rootlists.iter().all(|rl| rl.roots.iter().all(|(r, _)| !r.is_zero()))
    }
}

/// Checks a caller-supplied integer shift.
pub fn validate_shift(original: &[RootList<Rational>], shift: &[i64]) -> Result<Vec<Rational>> {
    if shift.len() != original.len() {
        return Err(MzError::InvalidProblem(format!(
            "shift has {} entries but there are {} variables",
            shift.len(),
            original.len()
        )));
    }
    let shift: Vec<Rational> = shift.iter().map(|&c| Rational::from_integer(c.into())).collect();
    for (rl, c) in original.iter().zip(&shift) {
        if rl.roots.iter().any(|(r, _)| (r + c).is_zero()) {
            return Err(MzError::InvalidShift { variable: rl.var, value: c.clone() });
        }
    }
    Ok(shift)
}

/// `c` as an `i64`, for reporting integer shifts.
pub fn shift_as_integer(c: &Rational) -> Option<i64> {
    c.is_integer().then(|| c.to_integer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Q = Rational;
    type U = UniPoly<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qq(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn u(c: &[i64]) -> U {
        U::new(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn squarefree_examples() {
        let f = U::linear_power(q(1), 2).mul(&U::linear(q(2)));
        assert_eq!(squarefree_decomposition(&f), vec![(U::linear(q(2)), 1), (U::linear(q(1)), 2)]);
        assert_eq!(squarefree_decomposition(&U::linear(q(5))), vec![(U::linear(q(5)), 1)]);
        let t2m2 = u(&[-2, 0, 1]);
        assert_eq!(squarefree_decomposition(&t2m2.pow(2)), vec![(t2m2, 2)]);
    }

    #[test]
    fn rational_roots_examples() {
        let f = u(&[-2, 5, -4, 1]);
        let rl = rational_roots(&f, 0, 1).unwrap();
        assert_eq!(rl.roots, vec![(q(1), 2), (q(2), 1)]);

        match rational_roots(&u(&[1, 0, 1]), 0, 1) {
            Err(MzError::NonSplitting { variable: 0, factor }) => {
                assert_eq!(factor.to_string(), "x1^2 + 1")
            }
            other => panic!("expected NonSplitting, got {other:?}"),
        }

        let f = U::new(vec![qq(-3, 2), qq(5, 2), q(1)]);
        let rl = rational_roots(&f, 0, 1).unwrap();
        assert_eq!(rl.roots, vec![(q(-3), 1), (qq(1, 2), 1)]);
    }

    #[test]
    fn zero_root_is_found() {
        let f = U::linear_power(q(0), 2).mul(&U::linear(q(-1)));
        let rl = rational_roots(&f, 0, 1).unwrap();
        assert_eq!(rl.roots, vec![(q(-1), 1), (q(0), 2)]);
    }

    #[test]
    fn shift_examples() {
        let rl = |roots: &[i64]| RootList { var: 0, roots: roots.iter().map(|&r| (q(r), 1)).collect() };
        assert_eq!(choose_shift(&[rl(&[1, 2])]), vec![q(0)]);
        assert_eq!(choose_shift(&[rl(&[0])]), vec![q(1)]);
        assert_eq!(choose_shift(&[rl(&[0, -1])]), vec![q(2)]);
        assert!(validate_shift(&[rl(&[0, -1])], &[1]).is_err());
        assert!(validate_shift(&[rl(&[0, -1])], &[3]).is_ok());
    }

    #[test]
    fn apply_shift_examples() {
        let t = Polynomial::<Q>::var(1, 0);
        let c = [q(1)];
        assert_eq!(apply_shift(&t, &c, ShiftDirection::Forward), &t - &Polynomial::one(1));
        let t2 = t.pow(2);
        let fwd = apply_shift(&t2, &c, ShiftDirection::Forward);
        assert_eq!(fwd, &(&t2 - &t.scale(&q(2))) + &Polynomial::one(1));
        assert_eq!(apply_shift(&fwd, &c, ShiftDirection::Inverse), t2);
    }

    #[test]
    fn spectrum_grid() {
        let a = RootList { var: 0, roots: vec![(q(0), 2), (q(3), 1)] };
        let b = RootList { var: 1, roots: vec![(q(1), 1)] };
        let shift = choose_shift(&[a.clone(), b.clone()]);
        let sp = PointSpectrum::new(&[a, b], shift);
        assert_eq!(sp.len(), 2);
        assert!(sp.avoids_origin());
        assert_eq!(sp.points()[0].coords, vec![q(1), q(1)]);
        assert_eq!(sp.points()[0].multiplicity, vec![2, 1]);
        assert_eq!(sp.original_coords(0), vec![q(0), q(1)]);
        assert_eq!(sp.degrees(), vec![3, 1]);
        assert_eq!(sp.root_indices(1), vec![1, 0]);
    }

    proptest! {
        #[test]
        fn roots_reconstruct_the_eliminant(
            roots in proptest::collection::vec((-6i64..=6, 1i64..=3, 1u32..=3), 1..4)
        ) {
            let f = roots.iter().fold(U::one(), |acc, &(n, d, m)| acc.mul(&U::linear_power(qq(n, d), m)));
            let rl = rational_roots(&f, 0, 1).unwrap();
            prop_assert_eq!(rl.reconstruct(), f.clone());
            prop_assert_eq!(rl.degree() as usize, f.degree().unwrap());
            for w in rl.roots.windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
            let shift = choose_shift(std::slice::from_ref(&rl));
            let sp = PointSpectrum::new(&[rl], shift.clone());
            prop_assert!(sp.avoids_origin());
            let shifted = apply_shift(&f.to_multivariate(1, 0), &shift, ShiftDirection::Forward);
            prop_assert!(!shifted.evaluate(&[q(0)]).is_zero());
        }
    }
}
