//! The orthogonal basis of idempotents `g_λ + I` of `A = k[x]/I`.
//!
//! With `I = (f_1(x_1), ..., f_n(x_n))` the algebra is a tensor product of
//! the univariate algebras `k[x_i]/(f_i)`, so each `g_λ` is built as a
//! product of univariate CRT idempotents `h_{i,λ_i}(x_i)` and reduced to
//! normal form. [`build_g_lambda_pairwise`] implements the alternative
//! product over comaximal pairs; both must agree modulo `I`.

use std::fmt;

use crate::groebner::QuotientData;
use crate::polycore::{Field, Polynomial, UniPoly};
use crate::spectrum::{PointSpectrum, RootList};

/// `g_λ` for every point of the spectrum, stored in normal form and indexed
/// like [`PointSpectrum::points`].
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentFamily<F> {
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> IdempotentFamily<F> {
    pub fn new(elements: Vec<Polynomial<F>>) -> Self {
        IdempotentFamily { elements }
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn get(&self, idx: usize) -> &Polynomial<F> {
        &self.elements[idx]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `I(Λ') = sum_{λ ∈ Λ'} g_λ`.
    pub fn subset_sum(&self, subset: &[usize]) -> Polynomial<F> {
        let nvars = self.elements.first().map_or(0, Polynomial::nvars);
        subset.iter().fold(Polynomial::zero(nvars), |acc, &i| &acc + &self.elements[i])
    }
}

/// For every root `λ_i` of `f_i`, the polynomial `h` of degree `< deg f_i`
/// with `h ≡ 1 mod (t - λ_i)^{m(λ_i)}` and `h ≡ 0 mod (t - μ)^{m(μ)}` for
/// the other roots `μ`. Obtained from the Bézout identity for the coprime
/// pair `((t - λ_i)^{m}, f_i / (t - λ_i)^{m})`.
pub fn univariate_crt_factors<F: Field>(rootlist: &RootList<F>) -> Vec<UniPoly<F>> {
    let f = rootlist.reconstruct();
    rootlist
        .roots
        .iter()
        .map(|(r, m)| {
            let local = UniPoly::linear_power(r.clone(), *m);
            let cofactor = f.exact_div(&local).expect("local factor divides f");
            let (g, _, t) = UniPoly::ext_gcd(&local, &cofactor);
            debug_assert!(g.degree() == Some(0), "distinct roots give coprime factors");
            t.mul(&cofactor).rem(&f)
        })
        .collect()
}

/// `g_λ = NF(prod_i h_{i,λ_i}(x_i))`.
pub fn build_g_lambda<F: Field>(spectrum: &PointSpectrum<F>, quotient: &QuotientData<F>) -> IdempotentFamily<F> {
    let n = spectrum.nvars();
    let factors: Vec<Vec<Polynomial<F>>> = spectrum
        .rootlists()
        .iter()
        .enumerate()
        .map(|(i, rl)| univariate_crt_factors(rl).iter().map(|h| h.to_multivariate(n, i)).collect())
        .collect();
    let elements = (0..spectrum.len())
        .map(|idx| {
            let prod = spectrum
                .root_indices(idx)
                .iter()
                .enumerate()
                .fold(Polynomial::one(n), |acc, (i, &r)| quotient.normal_form(&(&acc * &factors[i][r])));
            quotient.normal_form(&prod)
        })
        .collect();
    IdempotentFamily { elements }
}

/// `g_λ = prod_{μ ≠ λ} i_μ` where `i_λ + i_μ = 1`, `i_λ ∈ [(x-λ)]^{m(λ)}`
/// and `i_μ ∈ [(x-μ)]^{m(μ)}`. The pair is split along the first
/// coordinate in which `λ` and `μ` differ.
pub fn build_g_lambda_pairwise<F: Field>(
    spectrum: &PointSpectrum<F>,
    quotient: &QuotientData<F>,
) -> IdempotentFamily<F> {
    let n = spectrum.nvars();
    let pts = spectrum.points();
    let elements = (0..pts.len())
        .map(|l| {
            let mut g = Polynomial::one(n);
            for (mu, p) in pts.iter().enumerate() {
                if mu == l {
                    continue;
                }
                let k = (0..n).find(|&k| pts[l].coords[k] != p.coords[k]).expect("distinct points");
                let a = UniPoly::linear_power(pts[l].coords[k].clone(), pts[l].multiplicity[k]);
                let b = UniPoly::linear_power(p.coords[k].clone(), p.multiplicity[k]);
                let (_, _, t) = UniPoly::ext_gcd(&a, &b);
                let i_mu = t.mul(&b).to_multivariate(n, k);
                g = quotient.normal_form(&(&g * &i_mu));
            }
            g
        })
        .collect();
    IdempotentFamily { elements }
}

/// `f ∈ [(x - λ)]^{m(λ)}`: after moving `λ` to the origin every term must
/// have some exponent `e_i ≥ m_i`.
pub fn in_local_ideal<F: Field>(f: &Polynomial<F>, point: &[F], mult: &[u32]) -> bool {
    f.translate(point).terms().all(|(m, _)| m.exponents().iter().zip(mult).any(|(e, k)| e >= k))
}

/// First violated property of a candidate idempotent family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyViolation {
    WrongSize {
        expected: usize,
        found: usize,
    },
    Zero {
        point: usize,
    },
    NotIdempotent {
        point: usize,
    },
    NotOrthogonal {
        a: usize,
        b: usize,
    },
    SumNotOne,
    /// `g_point` is not `≡ 1` (if `at == point`) or `≡ 0` (otherwise)
    /// modulo the local ideal at `at`.
    LocalCongruence {
        point: usize,
        at: usize,
    },
}

impl fmt::Display for FamilyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyViolation::WrongSize { expected, found } => {
                write!(f, "expected {expected} idempotents, found {found}")
            }
            FamilyViolation::Zero { point } => write!(f, "g_{point} is zero mod I (non-zero idempotent)"),
            FamilyViolation::NotIdempotent { point } => write!(f, "g_{point}^2 != g_{point} mod I"),
            FamilyViolation::NotOrthogonal { a, b } => write!(f, "g_{a} * g_{b} != 0 mod I"),
            FamilyViolation::SumNotOne => write!(f, "sum of the g_λ is not 1 mod I"),
            FamilyViolation::LocalCongruence { point, at } => {
                write!(f, "g_{point} has the wrong residue at the local factor of point {at}")
            }
        }
    }
}

/// Re-checks every defining property by exact normal-form computation.
pub fn verify_family<F: Field>(
    fam: &IdempotentFamily<F>,
    spectrum: &PointSpectrum<F>,
    quotient: &QuotientData<F>,
) -> Result<(), FamilyViolation> {
    let n = quotient.nvars();
    let g = fam.elements();
    if g.len() != spectrum.len() {
        return Err(FamilyViolation::WrongSize { expected: spectrum.len(), found: g.len() });
    }
    for (i, gi) in g.iter().enumerate() {
        let nf = quotient.normal_form(gi);
        if nf.is_zero() {
            return Err(FamilyViolation::Zero { point: i });
        }
        if quotient.normal_form(&(gi * gi)) != nf {
            return Err(FamilyViolation::NotIdempotent { point: i });
        }
    }
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if !quotient.normal_form(&(&g[i] * &g[j])).is_zero() {
                return Err(FamilyViolation::NotOrthogonal { a: i, b: j });
            }
        }
    }
    let total = fam.subset_sum(&(0..g.len()).collect::<Vec<_>>());
    if quotient.normal_form(&(&total - &Polynomial::one(n))) != Polynomial::zero(n) {
        return Err(FamilyViolation::SumNotOne);
    }
    for (i, gi) in g.iter().enumerate() {
        for (j, p) in spectrum.points().iter().enumerate() {
            let target = if i == j { gi - &Polynomial::one(n) } else { gi.clone() };
            if !in_local_ideal(&target, &p.coords, &p.multiplicity) {
                return Err(FamilyViolation::LocalCongruence { point: i, at: j });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::MonomialOrder;
    use crate::Rational;
    use proptest::prelude::*;

    type Q = Rational;
    type P = Polynomial<Q>;
    type U = UniPoly<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn rl(var: usize, roots: &[(i64, u32)]) -> RootList<Q> {
        RootList { var, roots: roots.iter().map(|&(r, m)| (q(r), m)).collect() }
    }

    fn setup(lists: &[RootList<Q>]) -> (PointSpectrum<Q>, QuotientData<Q>) {
        let sp = PointSpectrum::new(lists, vec![q(0); lists.len()]);
        let quot = QuotientData::from_eliminants(&sp.eliminants(), MonomialOrder::Grevlex);
        (sp, quot)
    }

    fn t(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    fn c(n: usize, v: i64) -> P {
        P::constant(n, q(v))
    }

    #[test]
    fn crt_factors_two_simple_roots() {
        let h = univariate_crt_factors(&rl(0, &[(1, 1), (2, 1)]));
        assert_eq!(h, vec![U::new(vec![q(2), q(-1)]), U::new(vec![q(-1), q(1)])]);
        assert_eq!(h[0].add(&h[1]), U::one());
    }

    #[test]
    fn crt_factor_single_root_is_one() {
        assert_eq!(univariate_crt_factors(&rl(0, &[(1, 1)])), vec![U::one()]);
        assert_eq!(univariate_crt_factors(&rl(0, &[(4, 3)])), vec![U::one()]);
    }

    #[test]
    fn crt_factors_with_multiplicity() {
        let h = univariate_crt_factors(&rl(0, &[(1, 2), (2, 1)]));
        // root 2: (t-1)^2; root 1: 1 - (t-1)^2 = 2t - t^2
        assert_eq!(h[1], U::linear_power(q(1), 2));
        assert_eq!(h[0], U::new(vec![q(0), q(2), q(-1)]));
    }

    #[test]
    fn family_examples() {
        let (sp, quot) = setup(&[rl(0, &[(1, 1), (2, 1)])]);
        let fam = build_g_lambda(&sp, &quot);
        assert_eq!(fam.elements(), &[&c(1, 2) - &t(1, 0), &t(1, 0) - &c(1, 1)]);

        let (sp, quot) = setup(&[rl(0, &[(3, 2)]), rl(1, &[(-1, 1)])]);
        let fam = build_g_lambda(&sp, &quot);
        assert_eq!(fam.elements(), &[P::one(2)]);

        let (sp, quot) = setup(&[rl(0, &[(1, 1), (2, 1)]), rl(1, &[(1, 1)])]);
        let fam = build_g_lambda(&sp, &quot);
        assert_eq!(fam.elements(), &[&c(2, 2) - &t(2, 0), &t(2, 0) - &c(2, 1)]);
        assert_eq!(verify_family(&fam, &sp, &quot), Ok(()));
    }

    #[test]
    fn verify_rejects_corrupted_families() {
        let (sp, quot) = setup(&[rl(0, &[(1, 1), (2, 1)]), rl(1, &[(3, 1), (5, 2)])]);
        let fam = build_g_lambda(&sp, &quot);
        assert_eq!(verify_family(&fam, &sp, &quot), Ok(()));

        let mut zeroed = fam.elements().to_vec();
        zeroed[1] = P::zero(2);
        assert_eq!(verify_family(&IdempotentFamily::new(zeroed), &sp, &quot), Err(FamilyViolation::Zero { point: 1 }));

        // g_0 + g_2 is still idempotent, but meets g_2
        let mut merged = fam.elements().to_vec();
        merged[0] = &fam.elements()[0] + &fam.elements()[2];
        assert_eq!(
            verify_family(&IdempotentFamily::new(merged), &sp, &quot),
            Err(FamilyViolation::NotOrthogonal { a: 0, b: 2 })
        );
    }

    #[test]
    fn local_ideal_membership() {
        let f = (&t(2, 0) - &c(2, 1)).pow(2);
        assert!(in_local_ideal(&f, &[q(1), q(7)], &[2, 1]));
        assert!(!in_local_ideal(&f, &[q(1), q(7)], &[3, 1]));
        assert!(in_local_ideal(&(&t(2, 1) - &c(2, 7)), &[q(1), q(7)], &[3, 1]));
    }

    fn root_lists(n: usize) -> impl Strategy<Value = Vec<RootList<Q>>> {
        proptest::collection::vec(proptest::collection::btree_map(-4i64..=4, 1u32..=2, 1..=2), n).prop_map(|vs| {
            vs.into_iter()
                .enumerate()
                .map(|(i, m)| RootList { var: i, roots: m.into_iter().map(|(r, k)| (q(r), k)).collect() })
                .collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn tensor_and_pairwise_constructions_agree(lists in root_lists(2)) {
            let (sp, quot) = setup(&lists);
            prop_assume!(sp.len() <= 4);
            let tensor = build_g_lambda(&sp, &quot);
            let pairwise = build_g_lambda_pairwise(&sp, &quot);
            prop_assert_eq!(verify_family(&tensor, &sp, &quot), Ok(()));
            prop_assert_eq!(verify_family(&pairwise, &sp, &quot), Ok(()));
            prop_assert_eq!(tensor, pairwise);
        }
    }
}
