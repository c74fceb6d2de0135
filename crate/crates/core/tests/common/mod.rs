//! Seeded random instances shared by the integration tests.
#![allow(dead_code)]

use mz_core::mzdecide::{prepare, DecideOptions, IdealInput, Problem};
use mz_core::polycore::{Monomial, Polynomial};
use mz_core::spectrum::{apply_shift, ShiftDirection};
use mz_core::{Poly, Rational};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Root pool; includes 0 so that shifting is exercised.
pub fn root_pool() -> Vec<Rational> {
    vec![q(-2), q(-1), q(0), q(1), q(2), qq(1, 2), qq(-1, 3)]
}

pub fn linear(n: usize, var: usize, root: &Rational) -> Poly {
    &Polynomial::var(n, var) - &Polynomial::constant(n, root.clone())
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub problem: Problem,
    /// Roots of each eliminant, with repetition.
    pub roots: Vec<Vec<Rational>>,
}

impl Instance {
    pub fn degrees(&self) -> Vec<u32> {
        self.roots.iter().map(|r| r.len() as u32).collect()
    }

    pub fn eliminants(&self) -> Vec<Poly> {
        let n = self.problem.nvars;
        self.roots
            .iter()
            .enumerate()
            .map(|(v, rs)| rs.iter().fold(Polynomial::one(n), |acc, r| &acc * &linear(n, v, r)))
            .collect()
    }
}

/// Random polynomial supported on the box `x^m`, `m < degs`.
pub fn random_box_poly(rng: &mut TestRng, degs: &[u32]) -> Poly {
    let n = degs.len();
    let mut p = Polynomial::zero(n);
    for m in Monomial::box_below(degs) {
        if rng.gen_bool(0.6) {
            p.add_term(m, q(rng.gen_range(-2..=2)));
        }
    }
    p
}

/// Primitive idempotents of `k[x]/(f_1, ..., f_n)` in the original
/// coordinates.
pub fn idempotents_of(n: usize, eliminants: &[Poly]) -> Vec<Poly> {
    let p = Problem { nvars: n, ideal: IdealInput::Eliminants(eliminants.to_vec()), vectors: vec![] };
    let prep = prepare(&p, &DecideOptions::default()).expect("split eliminants");
    prep.family.elements().iter().map(|g| apply_shift(g, prep.spectrum.shift(), ShiftDirection::Inverse)).collect()
}

pub struct GenConfig {
    pub max_vars: usize,
    pub max_degree: usize,
    /// Weight of exact idempotent vectors, so that `Λ_0` is often non-empty.
    pub idempotent_weight: u32,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { max_vars: 2, max_degree: 3, idempotent_weight: 2 }
    }
}

pub fn random_instance(rng: &mut TestRng, cfg: &GenConfig) -> Instance {
    let n = rng.gen_range(1..=cfg.max_vars);
    let pool = root_pool();
    let roots: Vec<Vec<Rational>> = (0..n)
        .map(|_| {
            let d = rng.gen_range(1..=cfg.max_degree);
            let mut rs: Vec<Rational> = (0..d).map(|_| pool.choose(rng).unwrap().clone()).collect();
            rs.sort();
            rs
        })
        .collect();
    let mut inst =
        Instance { problem: Problem { nvars: n, ideal: IdealInput::Eliminants(vec![]), vectors: vec![] }, roots };
    let elim = inst.eliminants();
    let degs = inst.degrees();

    inst.problem.ideal = if rng.gen_bool(0.5) {
        IdealInput::Eliminants(elim.clone())
    } else {
        let mut gens = elim.clone();
        if rng.gen_bool(0.6) {
            // an extra generator vanishing on part of the grid
            let mut extra = Polynomial::one(n);
            for _ in 0..rng.gen_range(1..=2) {
                let v = rng.gen_range(0..n);
                extra = &extra * &linear(n, v, inst.roots[v].choose(rng).unwrap());
            }
            gens.push(extra);
        }
        IdealInput::Generators(gens)
    };

    let d: u32 = degs.iter().product();
    let h = rng.gen_range(0..=d as usize);
    let idems = idempotents_of(n, &elim);
    let total = 3 + cfg.idempotent_weight;
    for _ in 0..h {
        let pick = rng.gen_range(0..total);
        let v = match pick {
            0 => random_box_poly(rng, &degs),
            1 => {
                let mut p = Polynomial::constant(n, q(rng.gen_range(1..=3)));
                for v in 0..n {
                    for r in &inst.roots[v] {
                        if rng.gen_bool(0.4) {
                            p = &p * &linear(n, v, r);
                        }
                    }
                }
                p
            }
            2 => {
                let v = rng.gen_range(0..n);
                let e = rng.gen_range(0..degs[v]);
                Polynomial::var(n, v).pow(e)
            }
            _ => {
                let mut p = idems.choose(rng).unwrap().clone();
                if rng.gen_bool(0.3) {
                    p = &p + idems.choose(rng).unwrap();
                }
                if rng.gen_bool(0.3) {
                    let v = rng.gen_range(0..n);
                    p = &p * &Polynomial::var(n, v);
                }
                p
            }
        };
        inst.problem.vectors.push(v);
    }
    inst
}

/// Random invertible integer matrix: a product of unit triangular factors
/// and a row permutation.
pub fn random_invertible(rng: &mut TestRng, k: usize) -> Vec<Vec<Rational>> {
    let mut lower = vec![vec![q(0); k]; k];
    let mut upper = vec![vec![q(0); k]; k];
    for i in 0..k {
        lower[i][i] = q(1);
        upper[i][i] = q(*[1, -1, 2].choose(rng).unwrap());
        for j in 0..i {
            lower[i][j] = q(rng.gen_range(-2..=2));
            upper[j][i] = q(rng.gen_range(-2..=2));
        }
    }
    let mut m: Vec<Vec<Rational>> = (0..k)
        .map(|i| (0..k).map(|j| (0..k).fold(q(0), |acc, t| acc + &lower[i][t] * &upper[t][j])).collect())
        .collect();
    m.shuffle(rng);
    m
}
