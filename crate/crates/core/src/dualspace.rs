//! Linear functionals vanishing on `I`, written as
//! `L = sum_λ S_λ ∘ P_λ(D)` with `Deg P_λ < m(λ)`, and the system
//! `(L_1, ..., L_r)` whose common kernel is `V`.
//!
//! A functional is stored as its coefficient table `p_{λ,j}`, one entry per
//! *elementary functional* `S_λ ∘ D^j` (`j < m(λ)` componentwise). There
//! are exactly `d = dim A` elementary functionals, and the matrix of their
//! values on the staircase monomials is invertible because the sequences
//! `m -> m^j λ^m` are linearly independent for non-zero `λ`. So a functional
//! can be specified by its values on the staircase and converted to a
//! coefficient table by one linear solve.

use crate::error::{MzError, Result};
use crate::groebner::QuotientData;
use crate::linalg::{self, Matrix, SpanBasis};
use crate::polycore::{from_usize, pow, Field, Monomial, Polynomial};
use crate::spectrum::PointSpectrum;

/// `V/I` as an echelon basis in staircase coordinates.
#[derive(Clone, Debug)]
pub struct ReducedSubspace<F> {
    /// Reduced echelon rows (staircase coordinates).
    pub coords: Vec<Vec<F>>,
    /// The same rows as polynomials.
    pub basis: Vec<Polynomial<F>>,
    /// Input vectors that lay in `I` or in the span of earlier ones.
    pub dropped: usize,
    /// `dim A`.
    pub ambient: usize,
}

impl<F: Field> ReducedSubspace<F> {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn span(&self) -> SpanBasis<F> {
        let mut sb = SpanBasis::new(self.ambient);
        for v in &self.coords {
            sb.insert(v);
        }
        sb
    }
}

/// Normal forms of the `v_j`, row-reduced to a basis of `V/I`.
pub fn reduce_subspace<F: Field>(vectors: &[Polynomial<F>], quotient: &QuotientData<F>) -> ReducedSubspace<F> {
    let mut span = SpanBasis::new(quotient.dimension());
    let mut dropped = 0;
    for v in vectors {
        if !span.insert(&quotient.coords(v)) {
            dropped += 1;
        }
    }
    let coords = span.echelon_rows();
    let basis = coords.iter().map(|c| quotient.from_coords(c)).collect();
    ReducedSubspace { coords, basis, dropped, ambient: quotient.dimension() }
}

/// `(λ, j)` labels of the elementary functionals `S_λ ∘ D^j`, grouped by
/// point, `j` ascending in graded-lex order.
pub fn elementary_labels<F: Field>(spectrum: &PointSpectrum<F>) -> Vec<(usize, Monomial)> {
    spectrum
        .points()
        .iter()
        .enumerate()
        .flat_map(|(idx, p)| Monomial::box_below(&p.multiplicity).into_iter().map(move |j| (idx, j)))
        .collect()
}

/// `S_λ(D^j x^m) = m^j λ^m`, with `0^0 = 1`.
fn elementary_value<F: Field>(lambda: &[F], j: &Monomial, m: &Monomial) -> F {
    let mut v = F::one();
    for ((&mi, &ji), l) in m.exponents().iter().zip(j.exponents()).zip(lambda) {
        v = v * pow(&from_usize::<F>(mi as usize), ji) * pow(l, mi);
    }
    v
}

/// Rows: elementary functionals (see [`elementary_labels`]); columns:
/// staircase monomials. Fails if the matrix is not square and invertible,
/// which cannot happen when no root is zero.
pub fn elementary_matrix<F: Field>(spectrum: &PointSpectrum<F>, quotient: &QuotientData<F>) -> Result<Matrix<F>> {
    let labels = elementary_labels(spectrum);
    let stair = quotient.staircase();
    if labels.len() != stair.len() {
        return Err(MzError::SingularMatrix);
    }
    let m: Matrix<F> = labels
        .iter()
        .map(|(p, j)| {
            let lambda = &spectrum.points()[*p].coords;
            stair.iter().map(|mono| elementary_value(lambda, j, mono)).collect()
        })
        .collect();
    if linalg::determinant(&m).is_zero() {
        return Err(MzError::SingularMatrix);
    }
    Ok(m)
}

/// One functional `L = sum_λ S_λ ∘ P_λ(D)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Functional<F> {
    /// `p_{λ,j}`, aligned with [`FunctionalSystem::labels`].
    pub coeffs: Vec<F>,
    /// `L(x^m)` for the staircase monomials, the vector `coeffs` was solved
    /// from.
    pub values: Vec<F>,
}

/// `𝔏 = (L_1, ..., L_r)` with `ker 𝔏 = V`.
#[derive(Clone, Debug)]
pub struct FunctionalSystem<F> {
    spectrum: PointSpectrum<F>,
    labels: Vec<(usize, Monomial)>,
    functionals: Vec<Functional<F>>,
    subspace: ReducedSubspace<F>,
}

/// Computes a basis of the annihilator of `V/I` in the dual of `A` and
/// expresses each element in elementary-functional coordinates.
///
/// The value vectors form the reduced-echelon nullspace basis of the
/// subspace coordinates, so the system is deterministic.
pub fn annihilator_functionals<F: Field>(
    subspace: &ReducedSubspace<F>,
    elementary: &Matrix<F>,
    quotient: &QuotientData<F>,
    spectrum: &PointSpectrum<F>,
) -> Result<FunctionalSystem<F>> {
    let d = quotient.dimension();
    let mt = linalg::transpose(elementary, d);
    let functionals = linalg::nullspace(&subspace.coords, d)
        .into_iter()
        .map(|values| {
            let coeffs = linalg::solve(&mt, &values).ok_or(MzError::SingularMatrix)?;
            Ok(Functional { coeffs, values })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FunctionalSystem {
        spectrum: spectrum.clone(),
        labels: elementary_labels(spectrum),
        functionals,
        subspace: subspace.clone(),
    })
}

impl<F: Field> FunctionalSystem<F> {
    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    pub fn functionals(&self) -> &[Functional<F>] {
        &self.functionals
    }

    pub fn labels(&self) -> &[(usize, Monomial)] {
        &self.labels
    }

    pub fn spectrum(&self) -> &PointSpectrum<F> {
        &self.spectrum
    }

    pub fn subspace(&self) -> &ReducedSubspace<F> {
        &self.subspace
    }

    /// `P_λ^{(i)} = sum_j p_{λ,j} x^j`.
    pub fn operator(&self, i: usize, point: usize) -> Polynomial<F> {
        let n = self.spectrum.nvars();
        Polynomial::from_terms(
            n,
            self.labels
                .iter()
                .zip(&self.functionals[i].coeffs)
                .filter(|((p, _), _)| *p == point)
                .map(|((_, j), c)| (j.clone(), c.clone())),
        )
    }

    /// `L_i(f) = sum_λ (P_λ(D) f)(λ)`, evaluated on `f` as given (no
    /// reduction modulo `I`).
    pub fn evaluate(&self, i: usize, f: &Polynomial<F>) -> F {
        (0..self.spectrum.len()).fold(F::zero(), |acc, p| {
            let op = self.operator(i, p);
            if op.is_zero() {
                return acc;
            }
            acc + f.apply_p_of_d(&op).evaluate(&self.spectrum.points()[p].coords)
        })
    }

    /// Evaluates on both `f` and its normal form; `Err` carries the two
    /// values if they differ, which would mean `L_i` does not kill `I`.
    pub fn evaluate_checked(&self, i: usize, f: &Polynomial<F>, quotient: &QuotientData<F>) -> Result<F, (F, F)> {
        let raw = self.evaluate(i, f);
        let reduced = self.evaluate(i, &quotient.normal_form(f));
        if raw == reduced {
            Ok(raw)
        } else {
            Err((raw, reduced))
        }
    }

    /// `L_i(g_λ) = P_λ^{(i)}(0) = p_{λ,0}`: a table lookup.
    pub fn at_idempotent(&self, i: usize, point: usize) -> F {
        self.labels
            .iter()
            .position(|(p, j)| *p == point && j.is_one())
            .map(|k| self.functionals[i].coeffs[k].clone())
            .expect("every point has a constant label")
    }

    /// The system obtained by replacing `L_i` with `sum_k a_{ik} L_k`.
    pub fn recombined(&self, a: &Matrix<F>) -> Self {
        let combine = |pick: fn(&Functional<F>) -> &Vec<F>, row: &[F]| -> Vec<F> {
            let len = self.functionals.first().map_or(0, |f| pick(f).len());
            (0..len)
                .map(|c| {
                    row.iter()
                        .zip(&self.functionals)
                        .fold(F::zero(), |acc, (a, f)| acc + a.clone() * pick(f)[c].clone())
                })
                .collect()
        };
        let functionals = a
            .iter()
            .map(|row| Functional { coeffs: combine(|f| &f.coeffs, row), values: combine(|f| &f.values, row) })
            .collect();
        FunctionalSystem { functionals, ..self.clone() }
    }
}

/// Free-function form of [`FunctionalSystem::evaluate`].
pub fn evaluate_functional<F: Field>(sys: &FunctionalSystem<F>, i: usize, f: &Polynomial<F>) -> F {
    sys.evaluate(i, f)
}

/// Free-function form of [`FunctionalSystem::at_idempotent`].
pub fn functional_at_idempotent<F: Field>(sys: &FunctionalSystem<F>, i: usize, point: usize) -> F {
    sys.at_idempotent(i, point)
}
