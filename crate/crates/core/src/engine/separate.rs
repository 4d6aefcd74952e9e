//! Exact strict/weak linear separation of finite point sets.
//!
//! `S` can be put strictly above a hyperplane with `T` weakly below it iff
//! `conv(S) ∩ conv(T) = ∅`. Hull intersection is the feasibility of
//!
//! ```text
//! Σ λᵢ = 1,  Σ μⱼ = 1,  Σ λᵢ sᵢ − Σ μⱼ tⱼ = 0,  λ, μ >= 0
//! ```
//!
//! which we decide with a phase-one simplex over rationals, using Bland's
//! rule so degenerate pivots cannot cycle.

use num_traits::{One, Signed, Zero};

use super::{Rational, Vector};

/// Whether some functional `f` and threshold `t` satisfy `f·s > t` on `S`
/// and `f·u <= t` on `T`.
pub fn separable(s: &[&Vector], t: &[&Vector]) -> bool {
    if s.is_empty() || t.is_empty() {
        return true;
    }
    !hulls_intersect(s, t)
}

pub fn hulls_intersect(s: &[&Vector], t: &[&Vector]) -> bool {
    if s.is_empty() || t.is_empty() {
        return false;
    }
    let dim = s[0].dim();
    let rows = dim + 2;
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(s.len() + t.len());
    for p in s {
        let mut col = vec![Rational::one(), Rational::zero()];
        col.extend(p.coords().iter().cloned());
        columns.push(col);
    }
    for p in t {
        let mut col = vec![Rational::zero(), Rational::one()];
        col.extend(p.coords().iter().map(|c| -c));
        columns.push(col);
    }
    let mut rhs = vec![Rational::zero(); rows];
    rhs[0] = Rational::one();
    rhs[1] = Rational::one();
    Tableau::phase_one(&columns, rhs).feasible()
}

/// Dense tableau for `A x = b, x >= 0` with an artificial identity basis.
struct Tableau {
    /// `rows × (n + rows)`; the last `rows` columns are artificial.
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs of the phase-one objective `Σ artificials`.
    cost: Vec<Rational>,
    objective: Rational,
}

impl Tableau {
    fn phase_one(columns: &[Vec<Rational>], b: Vec<Rational>) -> Self {
        let rows = b.len();
        let n = columns.len();
        let mut a = vec![vec![Rational::zero(); n + rows]; rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                a[i][j] = v.clone();
            }
        }
        for (i, row) in a.iter_mut().enumerate() {
            row[n + i] = Rational::one();
        }
        debug_assert!(b.iter().all(|v| !v.is_negative()));
        let mut cost = vec![Rational::zero(); n + rows];
        for (j, c) in cost.iter_mut().enumerate().take(n) {
            *c = -a.iter().fold(Rational::zero(), |acc, row| acc + &row[j]);
        }
        let objective = b.iter().fold(Rational::zero(), |acc, v| acc + v);
        Tableau {
            a,
            b,
            basis: (n..n + rows).collect(),
            cost,
            objective,
        }
    }

    fn feasible(mut self) -> bool {
        while let Some(col) = self.cost.iter().position(Signed::is_negative) {
            let Some(row) = self.leaving_row(col) else {
                // phase one is bounded below by zero
                unreachable!("phase-one objective unbounded");
            };
            self.pivot(row, col);
        }
        self.objective.is_zero()
    }

    fn leaving_row(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for (i, row) in self.a.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &self.b[i] / &row[col];
            let better = match &best {
                None => true,
                Some((j, r)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*j]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.a[row][col].clone();
        for v in self.a[row].iter_mut() {
            *v /= &p;
        }
        self.b[row] /= &p;
        let pivot_row = self.a[row].clone();
        let pivot_b = self.b[row].clone();
        for i in 0..self.a.len() {
            if i == row || self.a[i][col].is_zero() {
                continue;
            }
            let factor = self.a[i][col].clone();
            for (v, pv) in self.a[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
            self.b[i] -= &factor * &pivot_b;
        }
        let factor = self.cost[col].clone();
        for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
        self.objective += &factor * &pivot_b;
        self.basis[row] = col;
    }
}
