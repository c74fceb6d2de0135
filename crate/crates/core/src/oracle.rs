//! Brute-force decision on the finite-dimensional algebra `A = k[x]/J`.
//!
//! `V` is a Mathieu-Zhao space iff `A*e ⊆ V/J` for every idempotent `e` in
//! `V/J`, and the idempotents of `A` are exactly the sums of the `g_λ`. This
//! module checks that directly with linear algebra in `A` and never uses
//! the functional system, so it can cross-check [`crate::mzdecide`].

use crate::dualspace::ReducedSubspace;
use crate::error::{MzError, Result};
use crate::groebner::QuotientData;
use crate::idempotents::IdempotentFamily;
use crate::linalg::SpanBasis;
use crate::mzdecide::{for_each_subset, prepare, DecideOptions, Problem};
use crate::polycore::{Field, Monomial, Polynomial};
use crate::Rational;

/// Structure constants of `A` on its staircase basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraTable<F> {
    staircase: Vec<Monomial>,
    /// `products[a][b]`: coordinates of `NF(x^a x^b)`.
    products: Vec<Vec<Vec<F>>>,
}

pub fn multiplication_table<F: Field>(quotient: &QuotientData<F>) -> AlgebraTable<F> {
    let stair = quotient.staircase().to_vec();
    let one = F::one();
    let products = stair
        .iter()
        .map(|a| stair.iter().map(|b| quotient.coords(&Polynomial::term(a.mul(b), one.clone()))).collect())
        .collect();
    AlgebraTable { staircase: stair, products }
}

impl<F: Field> AlgebraTable<F> {
    pub fn dim(&self) -> usize {
        self.staircase.len()
    }

    pub fn staircase(&self) -> &[Monomial] {
        &self.staircase
    }

    pub fn product(&self, a: usize, b: usize) -> &[F] {
        &self.products[a][b]
    }

    /// Coordinates of the unit; empty when `A = 0`.
    pub fn one(&self) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        if let Some(i) = self.staircase.iter().position(Monomial::is_one) {
            v[i] = F::one();
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn multiply(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = ai.clone() * bj.clone();
                for (o, p) in out.iter_mut().zip(&self.products[i][j]) {
                    *o = o.clone() + c.clone() * p.clone();
                }
            }
        }
        out
    }
}

/// An idempotent `e = sum_{λ ∈ subset} g_λ` in `V/J` with
/// `x^monomial * e ∉ V/J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleWitness {
    pub subset: Vec<usize>,
    pub monomial: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub is_mz: bool,
    /// First failing idempotent in subset order.
    pub witness: Option<OracleWitness>,
    /// Every `Λ'` whose idempotent lies in `V/J`.
    pub members: Vec<Vec<usize>>,
    pub subsets_checked: u64,
}

/// Tests every non-empty `Λ' ⊆ Λ` for membership of its idempotent and, if
/// it is a member, for closure of the ideal it generates.
pub fn brute_force_decide<F: Field>(
    fam: &IdempotentFamily<F>,
    subspace: &ReducedSubspace<F>,
    quotient: &QuotientData<F>,
    table: &AlgebraTable<F>,
    cap: usize,
) -> Result<OracleVerdict> {
    if fam.len() > cap {
        return Err(MzError::SubsetBudgetExceeded { size: fam.len(), cap });
    }
    let span: SpanBasis<F> = subspace.span();
    let coords: Vec<Vec<F>> = fam.elements().iter().map(|g| quotient.coords(g)).collect();
    let all: Vec<usize> = (0..fam.len()).collect();
    let mut members = Vec::new();
    let mut witness = None;
    let mut checked = 0u64;
    for_each_subset(&all, |s| {
        checked += 1;
        let mut e = vec![F::zero(); table.dim()];
        for &l in s {
            for (a, b) in e.iter_mut().zip(&coords[l]) {
                *a = a.clone() + b.clone();
            }
        }
        if span.contains(&e) {
            members.push(s.to_vec());
            if witness.is_none() {
                let bad = (0..table.dim()).find(|&m| !span.contains(&table.multiply(&table.basis_vector(m), &e)));
                if let Some(m) = bad {
                    witness = Some(OracleWitness { subset: s.to_vec(), monomial: table.staircase()[m].clone() });
                }
            }
        }
        true
    });
    Ok(OracleVerdict { is_mz: witness.is_none(), witness, members, subsets_checked: checked })
}

/// Runs the shared preparation and then [`brute_force_decide`].
pub fn oracle_decide(problem: &Problem, opts: &DecideOptions) -> Result<OracleVerdict> {
    let prep = prepare(problem, opts)?;
    let table = multiplication_table(&prep.quotient);
    brute_force_decide::<Rational>(&prep.family, &prep.subspace, &prep.quotient, &table, opts.subset_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mzdecide::{decide, IdealInput};
    use crate::polycore::{MonomialOrder, UniPoly};
    use crate::Poly;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn t() -> Poly {
        Polynomial::var(1, 0)
    }

    fn c(v: i64) -> Poly {
        Polynomial::constant(1, q(v))
    }

    fn quotient_of(coeffs: &[i64]) -> QuotientData<Rational> {
        let f = UniPoly::new(coeffs.iter().map(|&v| q(v)).collect());
        QuotientData::from_eliminants(&[f], MonomialOrder::Grevlex)
    }

    fn problem(gen: Poly, vectors: Vec<Poly>) -> Problem {
        Problem { nvars: 1, ideal: IdealInput::Generators(vec![gen]), vectors }
    }

    fn two_points() -> Poly {
        &(&t() - &c(1)) * &(&t() - &c(2))
    }

    #[test]
    fn table_products() {
        let a = multiplication_table(&quotient_of(&[2, -3, 1]));
        assert_eq!(a.product(1, 1), &[q(-2), q(3)]);
        let b = multiplication_table(&quotient_of(&[1, -2, 1]));
        assert_eq!(b.product(1, 1), &[q(-1), q(2)]);
        for i in 0..2 {
            assert_eq!(a.multiply(&a.one(), &a.basis_vector(i)), a.basis_vector(i));
        }
    }

    #[test]
    fn known_oracle_verdicts() {
        let opts = DecideOptions::default();
        let ideal = oracle_decide(&problem(two_points(), vec![]), &opts).unwrap();
        assert!(ideal.is_mz);
        assert!(ideal.members.is_empty());

        let ones = oracle_decide(&problem(two_points(), vec![c(1)]), &opts).unwrap();
        assert!(!ones.is_mz);
        assert_eq!(ones.witness.as_ref().unwrap().subset, vec![0, 1]);

        let g1 = oracle_decide(&problem(two_points(), vec![&c(2) - &t()]), &opts).unwrap();
        assert!(g1.is_mz);
        assert_eq!(g1.members, vec![vec![0]]);

        let sum = oracle_decide(&problem(two_points(), vec![&c(3) - &t().scale(&q(2))]), &opts).unwrap();
        assert!(sum.is_mz);

        let deriv = oracle_decide(&problem((&t() - &c(1)).pow(2), vec![c(1)]), &opts).unwrap();
        assert!(!deriv.is_mz);
        assert_eq!(deriv.witness.unwrap().monomial.exponents(), &[1]);
    }

    proptest! {
        #[test]
        fn table_is_commutative_and_associative(
            roots in proptest::collection::vec(-3i64..4, 1..4),
            a in proptest::collection::vec(-3i64..4, 3),
            b in proptest::collection::vec(-3i64..4, 3),
            cc in proptest::collection::vec(-3i64..4, 3),
        ) {
            let f = roots.iter().fold(UniPoly::one(), |acc, &r| acc.mul(&UniPoly::linear(q(r))));
            let g = UniPoly::linear(q(5)).mul(&UniPoly::linear(q(-5)));
            let quot = QuotientData::from_eliminants(&[f, g], MonomialOrder::Grevlex);
            let tab = multiplication_table(&quot);
            let d = tab.dim();
            let pick = |v: &[i64]| (0..d).map(|i| q(v[i % v.len()] + i as i64)).collect::<Vec<_>>();
            let (x, y, z) = (pick(&a), pick(&b), pick(&cc));
            prop_assert_eq!(tab.multiply(&x, &y), tab.multiply(&y, &x));
            prop_assert_eq!(
                tab.multiply(&tab.multiply(&x, &y), &z),
                tab.multiply(&x, &tab.multiply(&y, &z))
            );
        }

        #[test]
        fn oracle_matches_decide_on_small_univariate(
            roots in proptest::collection::vec(-2i64..3, 1..4),
            vecs in proptest::collection::vec(proptest::collection::vec(-2i64..3, 3), 0..3),
        ) {
            let f = roots.iter().fold(Polynomial::one(1), |acc, &r| &acc * &(&t() - &c(r)));
            let vectors: Vec<Poly> = vecs
                .iter()
                .map(|cs| cs.iter().enumerate().fold(Polynomial::zero(1), |acc, (i, &k)| &acc + &t().pow(i as u32).scale(&q(k))))
                .collect();
            let p = problem(f, vectors);
            let opts = DecideOptions::default();
            prop_assert_eq!(decide(&p, &opts).unwrap().is_mz, oracle_decide(&p, &opts).unwrap().is_mz);
        }
    }
}
