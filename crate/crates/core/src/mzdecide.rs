//! The decision procedure.
//!
//! With `𝔏 = (L_1, ..., L_r)`, `ker 𝔏 = V`, and `Λ_0 = { λ : 𝔏(g_λ) = 0 }`,
//! `V` is a Mathieu-Zhao space iff
//!
//! * (i) for every non-empty `S ⊆ Λ \ Λ_0` some `i` has
//!   `sum_{λ ∈ S} P_λ^{(i)}(0) ≠ 0`, and
//! * (ii) `L_i(x^m g_λ) = 0` for every `λ ∈ Λ_0`, every staircase monomial
//!   `x^m` and every `i`.
//!
//! Condition (i) only depends on `Λ' \ Λ_0`, so enumerating the subsets of
//! `Λ \ Λ_0` covers every `Λ' ⊆ Λ`. Condition (ii) is stated for the sums
//! `sum_{λ ∈ Λ' ∩ Λ_0} g_λ`; since `g_λ * sum = g_λ` for `λ` in the sum, the
//! ideal generated by the sum contains each of its `g_λ`, so requiring it
//! for all `Λ'` is the same as requiring it for singletons.
//! [`check_condition_ii_all_subsets`] keeps the literal form for testing.

use num_traits::Zero;

use crate::dualspace::{
    annihilator_functionals, elementary_matrix, reduce_subspace, FunctionalSystem, ReducedSubspace,
};
use crate::error::{MzError, Result};
use crate::groebner::{buchberger, represent_over_eliminants, univariate_eliminant, Dimension, QuotientData};
use crate::idempotents::{build_g_lambda, IdempotentFamily};
use crate::polycore::{Monomial, MonomialOrder, UniPoly};
use crate::spectrum::{apply_shift, choose_shift, rational_roots, validate_shift, PointSpectrum, ShiftDirection};
use crate::{GroebnerBasisQ, Poly, QuotientDataQ, Rational, UniPolyQ};

pub const DEFAULT_SUBSET_CAP: usize = 20;

/// How the finite-codimension ideal is given.
#[derive(Clone, Debug, PartialEq)]
pub enum IdealInput {
    /// Arbitrary generators; eliminants are computed from a Gröbner basis.
    Generators(Vec<Poly>),
    /// One univariate polynomial per variable, `f_i(x_i)`.
    Eliminants(Vec<Poly>),
}

/// `V = I + k*v_1 + ... + k*v_h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub nvars: usize,
    pub ideal: IdealInput,
    pub vectors: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    /// Largest `|Λ \ Λ_0|` (or `|Λ|` for the oracle) whose subsets are
    /// enumerated.
    pub subset_cap: usize,
    /// Integer shift to use instead of the smallest admissible one.
    pub shift_override: Option<Vec<i64>>,
    pub order: MonomialOrder,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { subset_cap: DEFAULT_SUBSET_CAP, shift_override: None, order: MonomialOrder::Grevlex }
    }
}

/// Everything the two checks (and the oracle) need, in shifted
/// coordinates.
#[derive(Clone, Debug)]
pub struct Prepared {
    pub nvars: usize,
    /// Reduced Gröbner basis of the input ideal, when given by generators.
    pub input_basis: Option<GroebnerBasisQ>,
    /// `dim k[x]/I` of the input ideal.
    pub input_dimension: usize,
    /// `f_i(x_i)` in the original coordinates.
    pub eliminants: Vec<UniPolyQ>,
    /// Spanning set of `I / J` appended to the user's vectors.
    pub extra_vectors: Vec<Poly>,
    pub input_vectors: usize,
    pub spectrum: PointSpectrum<Rational>,
    /// `A = k[x]/J` for the shifted eliminants.
    pub quotient: QuotientDataQ,
    pub family: IdempotentFamily<Rational>,
    pub subspace: ReducedSubspace<Rational>,
}

fn infinite_variable(gb: &GroebnerBasisQ) -> usize {
    (0..gb.nvars()).find(|&v| !gb.leading_monomials().iter().any(|m| m.pure_power_var() == Some(v))).unwrap_or(0)
}

/// Input basis (if any), `dim k[x]/I`, eliminants, and the extra vectors.
type IdealData = (Option<GroebnerBasisQ>, usize, Vec<UniPolyQ>, Vec<Poly>);

fn eliminants_from_input(problem: &Problem, opts: &DecideOptions) -> Result<IdealData> {
    let n = problem.nvars;
    match &problem.ideal {
        IdealInput::Generators(gens) => {
            let gb = buchberger(n, gens, opts.order);
            if gb.quotient_dimension() == Dimension::Infinite {
                return Err(MzError::InfiniteCodimension { variable: infinite_variable(&gb) });
            }
            let quotient = QuotientData::new(gb.clone()).expect("finite quotient");
            let eliminants: Vec<UniPolyQ> = (0..n).map(|v| univariate_eliminant(&quotient, v)).collect();
            let extra = if quotient.dimension() == 0 {
                Vec::new()
            } else {
                represent_over_eliminants(gens, &eliminants, opts.order)
            };
            Ok((Some(gb), quotient.dimension(), eliminants, extra))
        }
        IdealInput::Eliminants(fs) => {
            if fs.len() != n {
                return Err(MzError::InvalidProblem(format!("expected {n} eliminants, got {}", fs.len())));
            }
            let eliminants = fs
                .iter()
                .enumerate()
                .map(|(v, f)| {
                    let u = UniPoly::from_multivariate(f, v).ok_or_else(|| {
                        MzError::InvalidProblem(format!("eliminant {} is not univariate in x{}", v + 1, v + 1))
                    })?;
                    if u.degree().unwrap_or(0) == 0 {
                        return Err(MzError::InvalidProblem(format!("eliminant {} must have positive degree", v + 1)));
                    }
                    Ok(u.monic())
                })
                .collect::<Result<Vec<_>>>()?;
            let dim = eliminants.iter().map(|f| f.degree().unwrap()).product();
            Ok((None, dim, eliminants, Vec::new()))
        }
    }
}

/// Runs the pipeline up to the reduced subspace: Gröbner basis,
/// eliminants, re-presentation over `J`, roots, shift, idempotents.
pub fn prepare(problem: &Problem, opts: &DecideOptions) -> Result<Prepared> {
    let n = problem.nvars;
    if n == 0 {
        return Err(MzError::InvalidProblem("at least one variable is required".into()));
    }
    for p in problem.vectors.iter().chain(match &problem.ideal {
        IdealInput::Generators(g) | IdealInput::Eliminants(g) => g.iter(),
    }) {
        if p.nvars() != n {
            return Err(MzError::InvalidProblem("polynomial over the wrong number of variables".into()));
        }
    }

    let (input_basis, input_dimension, eliminants, extra_vectors) = eliminants_from_input(problem, opts)?;
    let rootlists = eliminants.iter().enumerate().map(|(v, f)| rational_roots(f, v, n)).collect::<Result<Vec<_>>>()?;
    let shift = match &opts.shift_override {
        Some(s) => validate_shift(&rootlists, s)?,
        None => choose_shift(&rootlists),
    };
    let spectrum = PointSpectrum::new(&rootlists, shift);
    let quotient = QuotientData::from_eliminants(&spectrum.eliminants(), opts.order);
    let family = build_g_lambda(&spectrum, &quotient);

    let shifted: Vec<Poly> = problem
        .vectors
        .iter()
        .chain(&extra_vectors)
        .map(|v| apply_shift(v, spectrum.shift(), ShiftDirection::Forward))
        .collect();
    let subspace = reduce_subspace(&shifted, &quotient);

    Ok(Prepared {
        nvars: n,
        input_basis,
        input_dimension,
        eliminants,
        extra_vectors,
        input_vectors: problem.vectors.len(),
        spectrum,
        quotient,
        family,
        subspace,
    })
}

impl Prepared {
    /// Builds `𝔏` with `ker 𝔏 = V`.
    pub fn functional_system(&self) -> Result<FunctionalSystem<Rational>> {
        let m = elementary_matrix(&self.spectrum, &self.quotient)?;
        annihilator_functionals(&self.subspace, &m, &self.quotient, &self.spectrum)
    }
}

/// `Λ_0`: points whose idempotent every functional kills, read off the
/// constant coefficients `P_λ^{(i)}(0)`.
pub fn compute_lambda0(sys: &FunctionalSystem<Rational>) -> Vec<usize> {
    (0..sys.spectrum().len()).filter(|&l| (0..sys.len()).all(|i| sys.at_idempotent(i, l).is_zero())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionI {
    Pass {
        subsets_checked: u64,
    },
    /// Every functional's constant coefficients sum to zero over `subset`.
    Fail {
        subset: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionII {
    Pass {
        triples_checked: u64,
    },
    /// `L_functional(x^monomial * g_point) = value ≠ 0`.
    Fail {
        point: usize,
        monomial: Monomial,
        functional: usize,
        value: Rational,
    },
}

/// Calls `visit` on every non-empty subset of `items`, by size and then
/// lexicographically, until it returns `false`.
pub fn for_each_subset(items: &[usize], mut visit: impl FnMut(&[usize]) -> bool) {
    let n = items.len();
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let subset: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
            if !visit(&subset) {
                return;
            }
            // next k-combination
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
                break;
            };
            idx[pos] += 1;
            for p in pos + 1..k {
                idx[p] = idx[p - 1] + 1;
            }
        }
    }
}

/// Condition (i) over every non-empty subset of `Λ \ Λ_0`.
pub fn check_condition_i(sys: &FunctionalSystem<Rational>, lambda0: &[usize], cap: usize) -> Result<ConditionI> {
    let outside: Vec<usize> = (0..sys.spectrum().len()).filter(|l| !lambda0.contains(l)).collect();
    if outside.len() > cap {
        return Err(MzError::SubsetBudgetExceeded { size: outside.len(), cap });
    }
    let consts: Vec<Vec<Rational>> =
        (0..sys.len()).map(|i| (0..sys.spectrum().len()).map(|l| sys.at_idempotent(i, l)).collect()).collect();
    let mut checked = 0u64;
    let mut failure = None;
    for_each_subset(&outside, |s| {
        checked += 1;
        let separated = consts.iter().any(|row| !s.iter().fold(Rational::zero(), |acc, &l| acc + &row[l]).is_zero());
        if !separated {
            failure = Some(s.to_vec());
        }
        separated
    });
    Ok(match failure {
        Some(subset) => ConditionI::Fail { subset },
        None => ConditionI::Pass { subsets_checked: checked },
    })
}

/// Condition (ii), checked on singletons `λ ∈ Λ_0`.
pub fn check_condition_ii(
    sys: &FunctionalSystem<Rational>,
    lambda0: &[usize],
    family: &IdempotentFamily<Rational>,
    quotient: &QuotientDataQ,
) -> ConditionII {
    let mut checked = 0u64;
    for &l in lambda0 {
        for m in quotient.staircase() {
            let f = family.get(l).mul_term(m, &Rational::from_integer(1.into()));
            for i in 0..sys.len() {
                checked += 1;
                let value = sys.evaluate(i, &f);
                if !value.is_zero() {
                    return ConditionII::Fail { point: l, monomial: m.clone(), functional: i, value };
                }
            }
        }
    }
    ConditionII::Pass { triples_checked: checked }
}

/// Condition (ii) in its literal form: for every non-empty `Λ' ⊆ Λ`,
/// `L_i(x^m * sum_{λ ∈ Λ' ∩ Λ_0} g_λ) = 0` for all `i` and staircase `m`.
pub fn check_condition_ii_all_subsets(
    sys: &FunctionalSystem<Rational>,
    lambda0: &[usize],
    family: &IdempotentFamily<Rational>,
    quotient: &QuotientDataQ,
    cap: usize,
) -> Result<bool> {
    let all: Vec<usize> = (0..sys.spectrum().len()).collect();
    if all.len() > cap {
        return Err(MzError::SubsetBudgetExceeded { size: all.len(), cap });
    }
    let mut ok = true;
    for_each_subset(&all, |sub| {
        let inter: Vec<usize> = sub.iter().copied().filter(|l| lambda0.contains(l)).collect();
        let e = family.subset_sum(&inter);
        let one = Rational::from_integer(1.into());
        ok = quotient
            .staircase()
            .iter()
            .all(|m| (0..sys.len()).all(|i| sys.evaluate(i, &e.mul_term(m, &one)).is_zero()));
        ok
    });
    Ok(ok)
}

/// Machine-checkable reason for a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Mz { lambda0_size: usize, subsets_checked: u64, triples_checked: u64 },
    FailI { subset: Vec<usize> },
    FailII { point: usize, monomial: Monomial, functional: usize, value: Rational },
}

impl Certificate {
    /// Recomputes the defining sums or evaluations from scratch.
    pub fn reverify(
        &self,
        sys: &FunctionalSystem<Rational>,
        family: &IdempotentFamily<Rational>,
        quotient: &QuotientDataQ,
        cap: usize,
    ) -> bool {
        let lambda0 = compute_lambda0(sys);
        match self {
            Certificate::FailI { subset } => {
                !subset.is_empty()
                    && subset.iter().all(|l| !lambda0.contains(l) && *l < sys.spectrum().len())
                    && (0..sys.len()).all(|i| {
                        subset.iter().fold(Rational::zero(), |acc, &l| acc + sys.evaluate(i, family.get(l))).is_zero()
                    })
            }
            Certificate::FailII { point, monomial, functional, value } => {
                let f = family.get(*point).mul_term(monomial, &Rational::from_integer(1.into()));
                lambda0.contains(point) && !value.is_zero() && sys.evaluate(*functional, &f) == *value
            }
            Certificate::Mz { .. } => {
                matches!(check_condition_i(sys, &lambda0, cap), Ok(ConditionI::Pass { .. }))
                    && matches!(check_condition_ii(sys, &lambda0, family, quotient), ConditionII::Pass { .. })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Audit {
    pub input_basis_size: Option<usize>,
    pub input_dimension: usize,
    /// `d = dim k[x]/J`.
    pub dimension: usize,
    pub input_vectors: usize,
    pub extra_vectors: usize,
    /// `dim V/J`.
    pub subspace_dimension: usize,
    pub dropped_vectors: usize,
    /// `r = d - dim V/J`.
    pub functionals: usize,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub is_mz: bool,
    pub spectrum: PointSpectrum<Rational>,
    pub lambda0: Vec<usize>,
    pub condition_i: ConditionI,
    pub condition_ii: ConditionII,
    pub certificate: Certificate,
    pub audit: Audit,
}

/// Runs both conditions for a given functional system.
pub fn decide_with_system(prep: &Prepared, sys: &FunctionalSystem<Rational>, cap: usize) -> Result<Verdict> {
    let lambda0 = compute_lambda0(sys);
    let condition_i = check_condition_i(sys, &lambda0, cap)?;
    let condition_ii = check_condition_ii(sys, &lambda0, &prep.family, &prep.quotient);
    let certificate = match (&condition_i, &condition_ii) {
        (ConditionI::Fail { subset }, _) => Certificate::FailI { subset: subset.clone() },
        (_, ConditionII::Fail { point, monomial, functional, value }) => Certificate::FailII {
            point: *point,
            monomial: monomial.clone(),
            functional: *functional,
            value: value.clone(),
        },
        (ConditionI::Pass { subsets_checked }, ConditionII::Pass { triples_checked }) => Certificate::Mz {
            lambda0_size: lambda0.len(),
            subsets_checked: *subsets_checked,
            triples_checked: *triples_checked,
        },
    };
    let audit = Audit {
        input_basis_size: prep.input_basis.as_ref().map(|g| g.len()),
        input_dimension: prep.input_dimension,
        dimension: prep.quotient.dimension(),
        input_vectors: prep.input_vectors,
        extra_vectors: prep.extra_vectors.len(),
        subspace_dimension: prep.subspace.dim(),
        dropped_vectors: prep.subspace.dropped,
        functionals: sys.len(),
    };
    Ok(Verdict {
        is_mz: matches!(certificate, Certificate::Mz { .. }),
        spectrum: prep.spectrum.clone(),
        lambda0,
        condition_i,
        condition_ii,
        certificate,
        audit,
    })
}

/// Full pipeline: decides whether `V = I + span(v)` is a Mathieu-Zhao space.
pub fn decide(problem: &Problem, opts: &DecideOptions) -> Result<Verdict> {
    let prep = prepare(problem, opts)?;
    let sys = prep.functional_system()?;
    decide_with_system(&prep, &sys, opts.subset_cap)
}
