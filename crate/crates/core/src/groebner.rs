//! Buchberger's algorithm, normal forms and zero-dimensional quotients.
//!
//! Everything here works for any [`Field`] and any [`MonomialOrder`]; the
//! decision pipeline uses graded reverse lexicographic order.

use std::collections::{BTreeSet, HashMap};

use crate::linalg::SpanBasis;
use crate::polycore::{Field, Monomial, MonomialOrder, Polynomial, UniPoly};

/// Reduced Gröbner basis: monic, inter-reduced, sorted by descending
/// leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F> {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial<F>>,
    leads: Vec<Monomial>,
}

/// `dim_k k[x]/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

/// Multivariate division of `f` by `divisors` (with precomputed monic
/// leading monomials). Picks the first divisor whose leading monomial
/// divides the current leading term.
fn reduce_by<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    leads: &[Monomial],
    order: MonomialOrder,
) -> Polynomial<F> {
    let nvars = f.nvars();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(nvars);
    while let Some((lm, lc)) = p.leading_term(order) {
        let (lm, lc) = (lm.clone(), lc.clone());
        match leads.iter().position(|g| g.divides(&lm)) {
            Some(k) => {
                let q = leads[k].quotient_of(&lm).expect("divides");
                let lcg = divisors[k].leading_term(order).expect("non-zero divisor").1.clone();
                p = &p - &divisors[k].mul_term(&q, &(lc / lcg));
            }
            None => {
                rem.add_term(lm.clone(), lc.clone());
                p.add_term(lm, -lc);
            }
        }
    }
    rem
}

fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, order: MonomialOrder) -> Polynomial<F> {
    let (lf, cf) = f.leading_term(order).expect("non-zero");
    let (lg, cg) = g.leading_term(order).expect("non-zero");
    let l = lf.lcm(lg);
    let a = f.mul_term(&lf.quotient_of(&l).unwrap(), &(F::one() / cf.clone()));
    let b = g.mul_term(&lg.quotient_of(&l).unwrap(), &(F::one() / cg.clone()));
    &a - &b
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed by the normal strategy (smallest lcm first, ties by
/// generator index) and skipped by the coprime-leading-monomial and chain
/// criteria. Zero generators are ignored; if nothing remains the result is
/// the empty basis of the zero ideal.
pub fn buchberger<F: Field>(nvars: usize, gens: &[Polynomial<F>], order: MonomialOrder) -> GroebnerBasis<F> {
    let mut basis: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            assert_eq!(g.nvars(), nvars, "generator arity mismatch");
            g.make_monic(order)
        })
        .collect();
    let mut leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).unwrap().clone()).collect();

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = leads[a.0].lcm(&leads[a.1]);
                let lb = leads[b.0].lcm(&leads[b.1]);
                order.cmp(&la, &lb).then_with(|| a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));

        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let l = leads[i].lcm(&leads[j]);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && leads[k].divides(&l) && !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce_by(&s, &basis, &leads, order);
        if !r.is_zero() {
            let r = r.make_monic(order);
            let new = basis.len();
            leads.push(r.leading_monomial(order).unwrap().clone());
            basis.push(r);
            for k in 0..new {
                pending.insert((k, new));
            }
        }
    }

    GroebnerBasis::from_groebner(nvars, basis, order)
}

impl<F: Field> GroebnerBasis<F> {
    /// Minimalizes and inter-reduces a (not necessarily reduced) Gröbner
    /// basis.
    fn from_groebner(nvars: usize, basis: Vec<Polynomial<F>>, order: MonomialOrder) -> Self {
        let leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).unwrap().clone()).collect();
        let keep: Vec<usize> = (0..basis.len())
            .filter(|&i| {
                !(0..basis.len()).any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i))
            })
            .collect();
        let minimal: Vec<Polynomial<F>> = keep.iter().map(|&i| basis[i].clone()).collect();
        let min_leads: Vec<Monomial> = keep.iter().map(|&i| leads[i].clone()).collect();

        let mut reduced: Vec<(Monomial, Polynomial<F>)> = Vec::with_capacity(minimal.len());
        for (k, g) in minimal.iter().enumerate() {
            let lm = &min_leads[k];
            let tail = g - &Polynomial::term(lm.clone(), F::one());
            let others: Vec<Polynomial<F>> =
                minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p.clone()).collect();
            let other_leads: Vec<Monomial> =
                min_leads.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, m)| m.clone()).collect();
            let t = reduce_by(&tail, &others, &other_leads, order);
            reduced.push((lm.clone(), &Polynomial::term(lm.clone(), F::one()) + &t));
        }
        reduced.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let (leads, generators) = reduced.into_iter().unzip();
        GroebnerBasis { nvars, order, generators, leads }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The unique remainder of `f` supported on the staircase.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        reduce_by(f, &self.generators, &self.leads, self.order)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// `dim_k k[x]/I`: finite iff every variable has a pure power among the
    /// leading monomials.
    pub fn quotient_dimension(&self) -> Dimension {
        match self.staircase() {
            Some(s) => Dimension::Finite(s.len()),
            None => Dimension::Infinite,
        }
    }

    /// Monomials not divisible by any leading monomial, ascending in
    /// graded-lex order; `None` if there are infinitely many.
    pub fn staircase(&self) -> Option<Vec<Monomial>> {
        if self.leads.iter().any(Monomial::is_one) {
            return Some(Vec::new());
        }
        let mut bounds = vec![None::<u32>; self.nvars];
        for m in &self.leads {
            if let Some(v) = m.pure_power_var() {
                let e = m.exponent(v);
                bounds[v] = Some(bounds[v].map_or(e, |b: u32| b.min(e)));
            }
        }
        let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>()?;
        Some(Monomial::box_below(&bounds).into_iter().filter(|m| !self.leads.iter().any(|l| l.divides(m))).collect())
    }
}

/// Staircase basis of a zero-dimensional quotient `A = k[x]/I`, with
/// coordinate maps between polynomials and `F^d`.
#[derive(Clone, Debug)]
pub struct QuotientData<F> {
    gb: GroebnerBasis<F>,
    staircase: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    degrees: Option<Vec<u32>>,
}

impl<F: Field> QuotientData<F> {
    /// `None` when the quotient is infinite dimensional.
    pub fn new(gb: GroebnerBasis<F>) -> Option<Self> {
        let staircase = gb.staircase()?;
        let index = staircase.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = gb.nvars();
        // I = (f_1(x_1), ..., f_n(x_n)) exactly when the reduced basis is one
        // univariate polynomial per variable
        let degrees = if gb.len() == n {
            let mut d = vec![0u32; n];
            let ok = gb.generators().iter().zip(gb.leading_monomials()).all(|(g, l)| match l.pure_power_var() {
                Some(v) if g.is_univariate_in(v) && d[v] == 0 => {
                    d[v] = l.exponent(v);
                    true
                }
                _ => false,
            });
            ok.then_some(d)
        } else {
            None
        };
        Some(QuotientData { gb, staircase, index, degrees })
    }

    /// Quotient by `J = (f_1(x_1), ..., f_n(x_n))`.
    pub fn from_eliminants(eliminants: &[UniPoly<F>], order: MonomialOrder) -> Self {
        let n = eliminants.len();
        let gens: Vec<Polynomial<F>> = eliminants.iter().enumerate().map(|(i, f)| f.to_multivariate(n, i)).collect();
        Self::new(buchberger(n, &gens, order)).expect("eliminants give a finite quotient")
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    pub fn nvars(&self) -> usize {
        self.gb.nvars()
    }

    pub fn staircase(&self) -> &[Monomial] {
        &self.staircase
    }

    pub fn dimension(&self) -> usize {
        self.staircase.len()
    }

    /// `(d_1, ..., d_n)` when the ideal is generated by one univariate
    /// polynomial per variable.
    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        self.gb.normal_form(f)
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `f mod I` on the staircase basis.
    pub fn coords(&self, f: &Polynomial<F>) -> Vec<F> {
        let nf = self.normal_form(f);
        let mut v = vec![F::zero(); self.dimension()];
        for (m, c) in nf.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn from_coords(&self, v: &[F]) -> Polynomial<F> {
        Polynomial::from_terms(self.nvars(), self.staircase.iter().cloned().zip(v.iter().cloned()))
    }
}

/// The monic generator of `I ∩ k[x_var]`, found as the first linear
/// dependence among the normal forms of `1, x_var, x_var^2, ...`.
///
/// For the unit ideal this is the constant `1`.
pub fn univariate_eliminant<F: Field>(quotient: &QuotientData<F>, var: usize) -> UniPoly<F> {
    let n = quotient.nvars();
    let mut span = SpanBasis::new(quotient.dimension());
    let mut k = 0u32;
    loop {
        let v = quotient.coords(&Polynomial::term(Monomial::var_power(n, var, k), F::one()));
        if let Some(c) = span.express(&v) {
            // x^k = sum_j c_j x^j
            let mut coeffs: Vec<F> = c.into_iter().map(|x| -x).collect();
            coeffs.push(F::one());
            return UniPoly::new(coeffs);
        }
        span.insert(&v);
        k += 1;
    }
}

/// Spanning set of `I / J` where `J = (f_1(x_1), ..., f_n(x_n)) ⊆ I`.
///
/// Returns the `J`-normal forms of `x^m * q` (`q` a generator of `I`,
/// `m < (d_1, ..., d_n)`) that are linearly independent, in enumeration
/// order. Appending these to the subspace vectors lets the rest of the
/// pipeline work with `J` in place of `I`.
pub fn represent_over_eliminants<F: Field>(
    gens: &[Polynomial<F>],
    eliminants: &[UniPoly<F>],
    order: MonomialOrder,
) -> Vec<Polynomial<F>> {
    let quotient = QuotientData::from_eliminants(eliminants, order);
    let degs: Vec<u32> = eliminants.iter().map(|f| f.degree().unwrap_or(0) as u32).collect();
    let mut span = SpanBasis::new(quotient.dimension());
    let mut out = Vec::new();
    for q in gens {
        for m in Monomial::box_below(&degs) {
            let p = q.mul_term(&m, &F::one());
            let v = quotient.coords(&p);
            if span.insert(&v) {
                out.push(quotient.from_coords(&v));
            }
        }
    }
    out
}
