//! Exact dense linear algebra over a [`Field`].

use crate::polycore::Field;

/// Row-major dense matrix.
pub type Matrix<F> = Vec<Vec<F>>;

/// Brings `rows` to reduced row echelon form in place and returns the pivot
/// columns. Pivots are normalized to one.
pub fn rref<F: Field>(rows: &mut Matrix<F>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                    *x = x.clone() - p.clone() * factor.clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &Matrix<F>, ncols: usize) -> usize {
    let mut m = rows.clone();
    rref(&mut m, ncols).len()
}

/// Basis of `{ x : rows * x = 0 }`.
///
/// One vector per free column of the reduced echelon form, carrying a one in
/// that column and zeros in the other free columns; vectors are ordered by
/// their free column.
pub fn nullspace<F: Field>(rows: &Matrix<F>, ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.clone();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); ncols];
            v[fc] = F::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[fc].clone();
            }
            v
        })
        .collect()
}

pub fn determinant<F: Field>(square: &Matrix<F>) -> F {
    let n = square.len();
    let mut m = square.clone();
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return F::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        let (top, below) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in below.iter_mut() {
            if !row[col].is_zero() {
                let factor = row[col].clone() / pivot.clone();
                for (x, p) in row[col..n].iter_mut().zip(&pivot_row[col..n]) {
                    *x = x.clone() - p.clone() * factor.clone();
                }
            }
        }
    }
    det
}

pub fn transpose<F: Field>(m: &Matrix<F>, ncols: usize) -> Matrix<F> {
    (0..ncols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_vec<F: Field>(m: &Matrix<F>, v: &[F]) -> Vec<F> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Solves the square system `a * x = b`; `None` when `a` is singular.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let n = a.len();
    let mut aug: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, n + 1);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// Incrementally maintained echelon basis of a subspace of `F^dim`.
///
/// Besides membership tests it records, for every stored row, which linear
/// combination of the accepted input vectors produced it, so a dependent
/// vector can be expressed in terms of the accepted ones.
#[derive(Clone, Debug)]
pub struct SpanBasis<F> {
    dim: usize,
    rows: Vec<(usize, Vec<F>, Vec<F>)>,
    accepted: usize,
}

impl<F: Field> SpanBasis<F> {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, rows: Vec::new(), accepted: 0 }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the stored rows; returns the residual and the
    /// combination of accepted vectors that was subtracted.
    fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.dim, "vector has wrong dimension");
        let mut res = v.to_vec();
        let mut combo = vec![F::zero(); self.accepted];
        for (pc, row, rc) in &self.rows {
            let f = res[*pc].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in res.iter_mut().zip(row) {
                *x = x.clone() - f.clone() * y.clone();
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                *x = x.clone() + f.clone() * y.clone();
            }
        }
        (res, combo)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    /// Coefficients `c` with `v = sum_k c_k * accepted_k`, if `v` is in the span.
    pub fn express(&self, v: &[F]) -> Option<Vec<F>> {
        let (res, combo) = self.reduce(v);
        res.iter().all(|x| x.is_zero()).then_some(combo)
    }

    /// Adds `v`; returns `false` (and stores nothing) when `v` is dependent.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let (mut res, combo) = self.reduce(v);
        let Some(pc) = res.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // residual = v - sum combo_k accepted_k
        let mut rc: Vec<F> = combo.into_iter().map(|c| -c).collect();
        rc.push(F::one());
        for (_, _, other) in self.rows.iter_mut() {
            other.push(F::zero());
        }
        let inv = F::one() / res[pc].clone();
        for x in res.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for x in rc.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        // keep the stored rows fully reduced in the new pivot column
        for (_, row, other) in self.rows.iter_mut() {
            let f = row[pc].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&res) {
                *x = x.clone() - f.clone() * y.clone();
            }
            for (x, y) in other.iter_mut().zip(&rc) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
        self.rows.push((pc, res, rc));
        self.rows.sort_by_key(|(p, _, _)| *p);
        self.accepted += 1;
        true
    }

    /// The reduced echelon rows, ordered by pivot column.
    pub fn echelon_rows(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|(_, r, _)| r.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(ns[0], vec![q(-2), q(1), q(0)]);
    }

    #[test]
    fn nullspace_of_empty_system_is_everything() {
        let ns = nullspace::<Q>(&Vec::new(), 3);
        assert_eq!(ns.len(), 3);
    }

    #[test]
    fn determinant_and_solve() {
        let a = m(&[&[1, 1], &[1, 2]]);
        assert_eq!(determinant(&a), q(1));
        assert_eq!(solve(&a, &[q(3), q(5)]), Some(vec![q(1), q(2)]));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(&s), q(0));
        assert_eq!(solve(&s, &[q(1), q(1)]), None);
    }

    #[test]
    fn span_basis_expresses_dependents() {
        let mut sb = SpanBasis::new(3);
        assert!(sb.insert(&[q(1), q(1), q(0)]));
        assert!(sb.insert(&[q(0), q(1), q(1)]));
        assert!(!sb.insert(&[q(1), q(2), q(1)]));
        assert_eq!(sb.express(&[q(2), q(3), q(1)]), Some(vec![q(2), q(1)]));
        assert!(!sb.contains(&[q(0), q(0), q(1)]));
    }

    proptest! {
        #[test]
        fn span_basis_combination_reconstructs(
            vs in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..6),
            coeffs in proptest::collection::vec(-3i64..=3, 6),
        ) {
            let vecs: Vec<Vec<Q>> = vs.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect();
            let mut sb = SpanBasis::new(4);
            let mut accepted = Vec::new();
            for v in &vecs {
                if sb.insert(v) {
                    accepted.push(v.clone());
                }
            }
            prop_assert_eq!(sb.dim(), rank(&vecs, 4));
            let mut target = vec![q(0); 4];
            for (v, c) in vecs.iter().zip(&coeffs) {
                for (t, x) in target.iter_mut().zip(v) {
                    *t = t.clone() + q(*c) * x.clone();
                }
            }
            let combo = sb.express(&target).expect("in span");
            let mut rebuilt = vec![q(0); 4];
            for (v, c) in accepted.iter().zip(&combo) {
                for (t, x) in rebuilt.iter_mut().zip(v) {
                    *t = t.clone() + c.clone() * x.clone();
                }
            }
            prop_assert_eq!(rebuilt, target);
        }
    }
}
