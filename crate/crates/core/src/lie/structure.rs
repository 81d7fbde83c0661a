//! Structural computations: series, centers, derivations, ideals, and
//! quotients.

use super::algebra::{unit, LieAlgebra};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::linalg::{BaseField, Matrix};

/// Quotient `g / h` with the maps relating it to `g`.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub algebra: LieAlgebra<F>,
    /// `q × n` matrix sending `g`-coordinates to quotient coordinates.
    pub projection: Matrix<F>,
    /// The ideal that was factored out.
    pub ideal: Subspace<F>,
}

impl<F: BaseField> LieAlgebra<F> {
    pub fn whole(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    /// `[a, b]` as a subspace.
    pub fn bracket_subspace(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut vectors = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                let z = self.bracket(x, y);
                if z.iter().any(|c| !c.is_zero()) {
                    vectors.push(z);
                }
            }
        }
        Subspace::span(self.dim(), &vectors)
    }

    /// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …`, ending at the first repeated term.
    pub fn derived_series(&self) -> Vec<Subspace<F>> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspace(last, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`, ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace<F>> {
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspace(&whole, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn derived_algebra(&self) -> Subspace<F> {
        self.bracket_subspace(&self.whole(), &self.whole())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn require_solvable(&self) -> Result<()> {
        if self.is_solvable() {
            Ok(())
        } else {
            Err(Error::NotSolvable)
        }
    }

    /// Elements commuting with all of `s`.
    pub fn centralizer(&self, s: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        if s.is_zero() {
            return self.whole();
        }
        // Stack the matrices of ad(v), v in a basis of s, on top of each
        // other and take the kernel.
        let mut rows = Vec::with_capacity(n * s.dim());
        for v in s.basis() {
            rows.extend(self.ad_matrix(v).expect("vector in the algebra").to_rows());
        }
        let stacked = Matrix::from_rows(rows).expect("rectangular");
        Subspace::span(n, &stacked.kernel_basis())
    }

    pub fn center(&self) -> Subspace<F> {
        self.centralizer(&self.whole())
    }

    pub fn is_ideal(&self, s: &Subspace<F>) -> bool {
        s.contains_subspace(&self.bracket_subspace(&self.whole(), s))
    }

    pub fn is_subalgebra(&self, s: &Subspace<F>) -> bool {
        s.contains_subspace(&self.bracket_subspace(s, s))
    }

    /// Basis of `Der(g)`: all `D` with `D[x,y] = [Dx,y] + [x,Dy]`, found as
    /// the kernel of a single linear system in the `n²` entries of `D`.
    pub fn derivations(&self) -> Vec<Matrix<F>> {
        let n = self.dim();
        let var = |k: usize, m: usize| k * n + m; // entry D[k][m]
        let mut rows: Vec<Vec<F>> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let cij = self.bracket_basis(i, j);
                let brackets_j: Vec<Vec<F>> = (0..n).map(|l| self.bracket_basis(l, j)).collect();
                let brackets_i: Vec<Vec<F>> = (0..n).map(|l| self.bracket_basis(i, l)).collect();
                for k in 0..n {
                    let mut row = vec![F::zero(); n * n];
                    // (D[e_i,e_j])_k = Σ_m c_ij^m D[k][m]
                    for (m, c) in cij.iter().enumerate() {
                        if !c.is_zero() {
                            row[var(k, m)] = row[var(k, m)].clone() + c.clone();
                        }
                    }
                    // ([De_i, e_j])_k = Σ_l D[l][i] c_lj^k
                    for (l, b) in brackets_j.iter().enumerate() {
                        if !b[k].is_zero() {
                            row[var(l, i)] = row[var(l, i)].clone() - b[k].clone();
                        }
                    }
                    // ([e_i, De_j])_k = Σ_l D[l][j] c_il^k
                    for (l, b) in brackets_i.iter().enumerate() {
                        if !b[k].is_zero() {
                            row[var(l, j)] = row[var(l, j)].clone() - b[k].clone();
                        }
                    }
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let solutions = if rows.is_empty() {
            (0..n * n).map(|k| unit(n * n, k)).collect()
        } else {
            Matrix::from_rows(rows).expect("rectangular").kernel_basis()
        };
        solutions
            .into_iter()
            .map(|s| Matrix::new(n, n, s).expect("n² entries"))
            .collect()
    }

    /// Whether `d` satisfies the Leibniz rule on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix<F>) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let lhs = d.mul_vec(&self.bracket_basis(i, j));
                let a = self.bracket(&d.column(i), &unit(n, j));
                let b = self.bracket(&unit(n, i), &d.column(j));
                lhs.iter()
                    .zip(a.iter().zip(&b))
                    .all(|(l, (x, y))| (l.clone() - x.clone() - y.clone()).is_zero())
            })
        })
    }

    /// Quotient by an ideal, on the complement basis of standard vectors at
    /// the ideal's non-pivot columns.
    pub fn quotient_algebra(&self, ideal: &Subspace<F>) -> Result<Quotient<F>> {
        if ideal.ambient() != self.dim() {
            return Err(Error::DimensionMismatch(
                "ideal lives in another space".into(),
            ));
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let comp = ideal.complement_indices();
        let (q, n) = (comp.len(), self.dim());
        if q == 0 {
            return Err(Error::DimensionMismatch(
                "quotient by the whole algebra is zero".into(),
            ));
        }
        let projection = Matrix::from_columns(
            q,
            &(0..n)
                .map(|l| ideal.quotient_coordinates(&unit(n, l)))
                .collect::<Vec<_>>(),
        );
        let mut brackets = Vec::new();
        for a in 0..q {
            for b in a + 1..q {
                let v = ideal.quotient_coordinates(&self.bracket_basis(comp[a], comp[b]));
                if v.iter().any(|c| !c.is_zero()) {
                    brackets.push((a, b, v));
                }
            }
        }
        let names = comp
            .iter()
            .map(|&c| self.basis_names()[c].clone())
            .collect();
        let algebra = LieAlgebra::new(q, brackets)?
            .with_name(format!("{}/h", self.name()))
            .with_basis_names(names)?;
        Ok(Quotient {
            algebra,
            projection,
            ideal: ideal.clone(),
        })
    }

    /// A subalgebra as a Lie algebra in its own right, using the echelon
    /// basis of `s` and coordinates read at the pivot columns.
    pub fn subalgebra(&self, s: &Subspace<F>) -> Result<LieAlgebra<F>> {
        if s.ambient() != self.dim() {
            return Err(Error::DimensionMismatch(
                "subspace lives in another space".into(),
            ));
        }
        if s.is_zero() {
            return Err(Error::DimensionMismatch("zero subalgebra".into()));
        }
        let basis = s.basis();
        let d = basis.len();
        let mut brackets = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let v = s
                    .coordinates(&self.bracket(&basis[a], &basis[b]))
                    .ok_or(Error::NotAnIdeal)?;
                if v.iter().any(|c| !c.is_zero()) {
                    brackets.push((a, b, v));
                }
            }
        }
        let names = basis.iter().map(|v| self.format_element(v)).collect();
        LieAlgebra::new(d, brackets)?
            .with_name(format!("{} subalgebra", self.name()))
            .with_basis_names(names)
    }
}
