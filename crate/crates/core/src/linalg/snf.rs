//! Smith normal form over the integers with explicit unimodular factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;

/// `a = u · d · v` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next and zeros last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: Matrix<BigInt>,
    pub d: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
    pub invariant_factors: Vec<BigInt>,
}

/// Working state: `original = u · a · v` holds after every elementary step.
struct Reducer {
    a: Matrix<BigInt>,
    u: Matrix<BigInt>,
    v: Matrix<BigInt>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.a.cols() {
            let t = self.a[(i, c)].clone();
            self.a[(i, c)] = self.a[(j, c)].clone();
            self.a[(j, c)] = t;
        }
        for r in 0..self.u.rows() {
            let t = self.u[(r, i)].clone();
            self.u[(r, i)] = self.u[(r, j)].clone();
            self.u[(r, j)] = t;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.a.rows() {
            let t = self.a[(r, i)].clone();
            self.a[(r, i)] = self.a[(r, j)].clone();
            self.a[(r, j)] = t;
        }
        for c in 0..self.v.cols() {
            let t = self.v[(i, c)].clone();
            self.v[(i, c)] = self.v[(j, c)].clone();
            self.v[(j, c)] = t;
        }
    }

    /// row_i += k · row_j
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        for c in 0..self.a.cols() {
            let t = &self.a[(j, c)] * k;
            self.a[(i, c)] += t;
        }
        // u <- u · (I - k e_ij)
        for r in 0..self.u.rows() {
            let t = &self.u[(r, i)] * k;
            self.u[(r, j)] -= t;
        }
    }

    /// col_i += k · col_j
    fn add_col(&mut self, i: usize, j: usize, k: &BigInt) {
        for r in 0..self.a.rows() {
            let t = &self.a[(r, j)] * k;
            self.a[(r, i)] += t;
        }
        // v <- (I - k e_ji) · v
        for c in 0..self.v.cols() {
            let t = &self.v[(i, c)] * k;
            self.v[(j, c)] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.a.cols() {
            self.a[(i, c)] = -self.a[(i, c)].clone();
        }
        for r in 0..self.u.rows() {
            self.u[(r, i)] = -self.u[(r, i)].clone();
        }
    }

    /// Position of the smallest nonzero entry in the trailing block.
    fn smallest_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a[(i, j)].abs();
                if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| &x < b) {
                    best = Some(((i, j), x));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    /// Clears row and column `t` outside the pivot. Returns false if a
    /// remainder appeared and the pivot must be re-chosen.
    fn clear_cross(&mut self, t: usize) -> bool {
        let p = self.a[(t, t)].clone();
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&p);
            self.add_row(i, t, &-q);
            if !self.a[(i, t)].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&p);
            self.add_col(j, t, &-q);
            if !self.a[(t, j)].is_zero() {
                clean = false;
            }
        }
        clean
    }
}

pub fn smith_normal_form(a: &Matrix<BigInt>) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = Reducer {
        a: a.clone(),
        u: Matrix::identity(rows),
        v: Matrix::identity(cols),
    };
    let steps = rows.min(cols);
    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = r.smallest_from(t) else {
            break;
        };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        if !r.clear_cross(t) {
            continue;
        }
        // Divisibility: fold any offending row into row t and redo the pivot.
        let p = r.a[(t, t)].clone();
        let offender =
            (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&r.a[(i, j)] % &p).is_zero()));
        if let Some(i) = offender {
            r.add_row(t, i, &BigInt::one());
            continue;
        }
        if r.a[(t, t)].is_negative() {
            r.negate_row(t);
        }
        t += 1;
    }
    let invariant_factors = (0..steps).map(|i| r.a[(i, i)].clone()).collect();
    SnfResult {
        u: r.u,
        d: r.a,
        v: r.v,
        invariant_factors,
    }
}
