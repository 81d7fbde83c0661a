use super::algebra::{format_vector, LieAlgebra};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::linalg::{BaseField, Matrix};

/// Invertible matrix preserving the bracket of a specific algebra. Columns
/// are the images of the basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct AutomorphismMatrix<F> {
    algebra: LieAlgebra<F>,
    m: Matrix<F>,
}

impl<F: BaseField> AutomorphismMatrix<F> {
    /// Validates invertibility and `m[e_i, e_j] = [m e_i, m e_j]` on every
    /// basis pair.
    pub fn new(algebra: &LieAlgebra<F>, m: Matrix<F>) -> Result<Self> {
        let n = algebra.dim();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected a {n}x{n} matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if m.det()?.is_zero() {
            return Err(Error::NotInvertible);
        }
        let images: Vec<Vec<F>> = (0..n).map(|j| m.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = m.mul_vec(&algebra.bracket_basis(i, j));
                let rhs = algebra.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    let residual: Vec<F> = lhs.into_iter().zip(rhs).map(|(a, b)| a - b).collect();
                    return Err(Error::NotAutomorphism {
                        i: i + 1,
                        j: j + 1,
                        residual: format_vector(&residual),
                    });
                }
            }
        }
        Ok(AutomorphismMatrix {
            algebra: algebra.clone(),
            m,
        })
    }

    pub fn identity(algebra: &LieAlgebra<F>) -> Self {
        AutomorphismMatrix {
            algebra: algebra.clone(),
            m: Matrix::identity(algebra.dim()),
        }
    }

    /// `exp(ad x)` for `x` with nilpotent `ad x`: an inner automorphism.
    pub fn inner(algebra: &LieAlgebra<F>, x: &[F]) -> Result<Self> {
        let m = algebra.ad_matrix(x)?.exp_nilpotent()?;
        AutomorphismMatrix::new(algebra, m)
    }

    pub fn algebra(&self) -> &LieAlgebra<F> {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.m
    }

    /// `self ∘ other`; both must act on the same algebra.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::DimensionMismatch(
                "automorphisms of different algebras".into(),
            ));
        }
        Ok(AutomorphismMatrix {
            algebra: self.algebra.clone(),
            m: &self.m * &other.m,
        })
    }

    pub fn inverse(&self) -> Self {
        AutomorphismMatrix {
            algebra: self.algebra.clone(),
            m: self.m.inverse().expect("automorphisms are invertible"),
        }
    }

    /// Subspace of fixed vectors, `ker(m − I)`.
    pub fn fixed_subspace(&self) -> Subspace<F> {
        let n = self.algebra.dim();
        Subspace::span(n, &self.m.minus_scalar(&F::one()).kernel_basis())
    }

    /// Restriction to an invariant ideal, as an automorphism of the ideal in
    /// its echelon basis.
    pub fn restrict_automorphism(&self, ideal: &Subspace<F>) -> Result<Self> {
        let r = ideal.restrict(&self.m).ok_or(Error::NotInvariant)?;
        let sub = self.algebra.subalgebra(ideal)?;
        AutomorphismMatrix::new(&sub, r)
    }

    /// Induced automorphism of `g / ideal` on the quotient's complement basis.
    pub fn induced_automorphism(&self, ideal: &Subspace<F>) -> Result<Self> {
        if !ideal.is_invariant(&self.m) {
            return Err(Error::NotInvariant);
        }
        let q = self.algebra.quotient_algebra(ideal)?;
        AutomorphismMatrix::new(&q.algebra, ideal.induce(&self.m))
    }
}

/// Validates `m` as an automorphism of `g`.
pub fn is_automorphism<F: BaseField>(
    g: &LieAlgebra<F>,
    m: &Matrix<F>,
) -> Result<AutomorphismMatrix<F>> {
    AutomorphismMatrix::new(g, m.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::unit;
    use crate::linalg::{int, Rational};

    type G = LieAlgebra<Rational>;

    fn heisenberg() -> G {
        G::from_int_brackets(3, &[(0, 1, &[(2, 1)])]).unwrap()
    }

    fn t2() -> G {
        G::from_int_brackets(3, &[(0, 2, &[(2, 1)]), (1, 2, &[(2, -1)])]).unwrap()
    }

    #[test]
    fn validation_examples() {
        let h = heisenberg();
        assert!(AutomorphismMatrix::new(&h, Matrix::diagonal(&[int(2), int(3), int(6)])).is_ok());
        assert!(matches!(
            AutomorphismMatrix::new(&h, Matrix::diagonal(&[int(2), int(3), int(5)])),
            Err(Error::NotAutomorphism { i: 1, j: 2, .. })
        ));
        assert_eq!(
            AutomorphismMatrix::new(&h, Matrix::zeros(3, 3)),
            Err(Error::NotInvertible)
        );
        let rot = G::from_int_brackets(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)])]).unwrap();
        assert!(
            AutomorphismMatrix::new(&rot, Matrix::diagonal(&[int(-1), int(2), int(-2)])).is_ok()
        );
    }

    #[test]
    fn inner_automorphisms() {
        let h = heisenberg();
        let a = AutomorphismMatrix::inner(&h, &unit(3, 0)).unwrap();
        assert_eq!(
            a.matrix(),
            &Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, 1]])
        );
        assert!(AutomorphismMatrix::inner(&h, &vec![int(0); 3])
            .unwrap()
            .matrix()
            .is_one());
        let t = t2();
        assert_eq!(
            AutomorphismMatrix::inner(&t, &unit(3, 0)),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn restriction_and_induced() {
        let t = t2();
        let a = AutomorphismMatrix::inner(&t, &unit(3, 2)).unwrap();
        let line = Subspace::span(3, &[unit(3, 2)]);
        assert!(a.restrict_automorphism(&line).unwrap().matrix().is_one());
        let induced = a.induced_automorphism(&Subspace::zero(3)).unwrap();
        assert_eq!(induced.matrix(), a.matrix());
        let chi = a.matrix().char_poly().unwrap();
        let r = a
            .restrict_automorphism(&line)
            .unwrap()
            .matrix()
            .char_poly()
            .unwrap();
        let q = a
            .induced_automorphism(&line)
            .unwrap()
            .matrix()
            .char_poly()
            .unwrap();
        assert_eq!(chi, &r * &q);
        assert_eq!(
            a.restrict_automorphism(&Subspace::span(3, &[unit(3, 0)])),
            Err(Error::NotInvariant)
        );
    }
}
