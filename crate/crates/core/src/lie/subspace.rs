use crate::linalg::{Field, Matrix};

/// Linear subspace of `F^n`, stored as the nonzero rows of a reduced row
/// echelon basis. The representation is canonical, so structural equality is
/// equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = Matrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
        assert_eq!(m.cols(), ambient, "vector length mismatch");
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|k| {
                (0..ambient)
                    .map(|j| if j == k { F::one() } else { F::zero() })
                    .collect()
            })
            .collect();
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Echelon basis vectors.
    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; the standard vectors there span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// `v` minus its component along the echelon basis: zero at every pivot
    /// column, and zero altogether iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = o.clone() - f.clone() * r.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of the class of `v` in the quotient by this subspace,
    /// relative to the complement basis of [`Self::complement_indices`].
    pub fn quotient_coordinates(&self, v: &[F]) -> Vec<F> {
        let r = self.reduce(v);
        self.complement_indices()
            .into_iter()
            .map(|c| r[c].clone())
            .collect()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Vectors `w` with `Σ v_k w_k = 0` for every `v` in the subspace.
    pub fn annihilator(&self) -> Self {
        if self.rows.is_empty() {
            return Subspace::full(self.ambient);
        }
        let m = Matrix::from_rows(self.rows.clone()).expect("rectangular basis");
        Subspace::span(self.ambient, &m.kernel_basis())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Image under a square matrix.
    pub fn image(&self, m: &Matrix<F>) -> Self {
        let imgs: Vec<Vec<F>> = self.rows.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.ambient, &imgs)
    }

    pub fn is_invariant(&self, m: &Matrix<F>) -> bool {
        self.rows.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Matrix of `m` restricted to the subspace, in echelon-basis
    /// coordinates; `None` unless the subspace is `m`-invariant.
    pub fn restrict(&self, m: &Matrix<F>) -> Option<Matrix<F>> {
        let columns = self
            .rows
            .iter()
            .map(|v| self.coordinates(&m.mul_vec(v)))
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(self.dim(), &columns))
    }

    /// Matrix of the map induced by `m` on the quotient, in complement
    /// coordinates. Only meaningful when the subspace is `m`-invariant.
    pub fn induce(&self, m: &Matrix<F>) -> Matrix<F> {
        let comp = self.complement_indices();
        let columns: Vec<Vec<F>> = comp
            .iter()
            .map(|&c| self.quotient_coordinates(&m.column(c)))
            .collect();
        Matrix::from_columns(comp.len(), &columns)
    }

    /// Lifts complement coordinates back to the ambient space.
    pub fn lift(&self, coords: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient];
        for (c, x) in self.complement_indices().into_iter().zip(coords) {
            v[c] = x.clone();
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, Rational};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_form() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(&[1, 0, -1])));
        assert!(!a.contains(&v(&[0, 0, 1])));
        assert_eq!(a.coordinates(&v(&[2, 3, 1])), Some(v(&[2, 3])));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
        assert!(a.sum(&b).is_full());
        assert_eq!(a.intersect(&Subspace::zero(3)), Subspace::zero(3));
    }

    #[test]
    fn restriction_and_quotient() {
        // Upper triangular map: span(e1) is invariant.
        let m = Matrix::<Rational>::from_ints(&[&[2, 1], &[0, 3]]);
        let line = Subspace::span(2, &[v(&[1, 0])]);
        assert_eq!(line.restrict(&m), Some(Matrix::from_ints(&[&[2]])));
        assert_eq!(line.induce(&m), Matrix::from_ints(&[&[3]]));
        assert_eq!(Subspace::span(2, &[v(&[0, 1])]).restrict(&m), None);
        assert_eq!(line.lift(&v(&[5])), v(&[0, 5]));
    }
}
