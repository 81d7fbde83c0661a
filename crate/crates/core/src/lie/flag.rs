//! Constructive Lie theorem: an ad-invariant full flag with weight
//! functionals, and the nilradical read off from those weights.

use super::algebra::LieAlgebra;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::linalg::{BaseField, FieldKind, GaussRational, Matrix, UniPoly};

/// Full flag `0 ⊂ V_1 ⊂ … ⊂ V_n = g` of ideals with `ad(x)` acting on
/// `V_i / V_{i-1}` as the scalar `λ_i(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagData<F> {
    /// Adapted basis: `V_i` is spanned by the first `i` vectors.
    pub basis: Vec<Vec<F>>,
    pub flag: Vec<Subspace<F>>,
    /// `weights[i]` is the row vector of `λ_{i+1}`, so
    /// `λ_{i+1}(x) = Σ_k weights[i][k]·x_k`.
    pub weights: Vec<Vec<F>>,
}

impl<F: BaseField> FlagData<F> {
    /// True when every weight takes real values on the defining basis.
    pub fn weights_real(&self) -> bool {
        self.weights
            .iter()
            .all(|w| w.iter().all(|c| c.as_rational().is_some()))
    }

    /// Distinct weights in order of first appearance.
    pub fn distinct_weights(&self) -> Vec<Vec<F>> {
        let mut out: Vec<Vec<F>> = Vec::new();
        for w in &self.weights {
            if !out.contains(w) {
                out.push(w.clone());
            }
        }
        out
    }
}

/// An eigenvalue of `m` in the base field, or the obstruction: a factor of
/// the characteristic polynomial with no root in the field.
fn eigenvalue_in_field<F: BaseField>(m: &Matrix<F>) -> Result<std::result::Result<F, UniPoly<F>>> {
    let d = m.rows();
    if d == 1 {
        return Ok(Ok(m[(0, 0)].clone()));
    }
    // Minimal polynomial of e_1 under m: its roots are eigenvalues.
    let krylov = krylov_polynomial(m, 0);
    if let Some(root) = F::roots_in_field(&krylov)?.into_iter().next() {
        return Ok(Ok(root));
    }
    let chi = m.char_poly()?;
    if let Some(root) = F::roots_in_field(&chi)?.into_iter().next() {
        return Ok(Ok(root));
    }
    Ok(Err(krylov))
}

/// Monic polynomial `p` of least degree with `p(m)·e_k = 0`.
fn krylov_polynomial<F: BaseField>(m: &Matrix<F>, k: usize) -> UniPoly<F> {
    let d = m.rows();
    let mut v = vec![F::zero(); d];
    v[k] = F::one();
    let mut seq = vec![v];
    loop {
        let next = m.mul_vec(seq.last().unwrap());
        // Solve Σ c_i seq_i = next; the augmented column is the last one.
        let mut cols = seq.clone();
        cols.push(next.clone());
        let aug = Matrix::from_columns(d, &cols);
        let (r, pivots) = aug.rref();
        let s = seq.len();
        if !pivots.contains(&s) {
            // Dependent: pivots are exactly 0..s, read c from column s.
            let mut coeffs: Vec<F> = (0..s).map(|i| -r[(i, s)].clone()).collect();
            coeffs.push(F::one());
            return UniPoly::new(coeffs);
        }
        seq.push(next);
    }
}

impl<F: BaseField> LieAlgebra<F> {
    /// A chain `z_1, …, z_n` with each `S_k = span(z_1..z_k)` an ideal of
    /// codimension one in `S_{k+1}`, obtained by refining the derived series.
    fn solvable_chain(&self) -> Result<Vec<Vec<F>>> {
        let series = self.derived_series();
        if !series.last().unwrap().is_zero() {
            return Err(Error::NotSolvable);
        }
        let mut span = Subspace::zero(self.dim());
        let mut chain = Vec::with_capacity(self.dim());
        for step in series.windows(2).rev() {
            for v in step[0].basis() {
                if !span.contains(v) {
                    span = span.sum(&Subspace::span(self.dim(), std::slice::from_ref(v)));
                    chain.push(v.clone());
                }
            }
        }
        Ok(chain)
    }

    /// Triangularizes the adjoint action over the base field.
    ///
    /// Works one quotient `g / V` at a time: intersecting eigenspaces of
    /// `ad(z_1), ad(z_2), …` along the solvable chain yields the joint
    /// weight space of the first weight found, which is appended to the flag
    /// in one go. Fails with `NotSplitOverField` when some `ad(z_k)` has no
    /// eigenvalue in the field on the current weight space.
    pub fn triangularize_flag(&self) -> Result<FlagData<F>> {
        let n = self.dim();
        let chain = self.solvable_chain()?;
        if self.is_abelian() {
            let basis: Vec<Vec<F>> = (0..n).map(|k| super::algebra::unit(n, k)).collect();
            let flag = (1..=n).map(|k| Subspace::span(n, &basis[..k])).collect();
            return Ok(FlagData {
                basis,
                flag,
                weights: vec![vec![F::zero(); n]; n],
            });
        }
        let ad_chain: Vec<Matrix<F>> = chain
            .iter()
            .map(|z| self.ad_matrix(z).expect("vector in the algebra"))
            .collect();
        let ad_basis: Vec<Matrix<F>> = (0..n).map(|j| self.ad_basis(j)).collect();

        let mut current = Subspace::zero(n);
        let mut out = FlagData {
            basis: Vec::with_capacity(n),
            flag: Vec::with_capacity(n),
            weights: Vec::with_capacity(n),
        };
        while current.dim() < n {
            let q = n - current.dim();
            let mut weight_space = Subspace::<F>::full(q);
            for (z, ad_z) in chain.iter().zip(&ad_chain) {
                let rho = current.induce(ad_z);
                let r = weight_space
                    .restrict(&rho)
                    .expect("weight spaces of an ideal are invariant (Lie's lemma)");
                let mu = match eigenvalue_in_field(&r)? {
                    Ok(mu) => mu,
                    Err(factor) => {
                        return Err(Error::NotSplitOverField {
                            field: F::KIND.to_string(),
                            element: self.format_element(z),
                            factor: factor.to_string(),
                        })
                    }
                };
                let shifted = r.minus_scalar(&mu);
                if shifted.is_zero() {
                    continue;
                }
                let kernel: Vec<Vec<F>> = shifted
                    .kernel_basis()
                    .into_iter()
                    .map(|c| combine(weight_space.basis(), &c, q))
                    .collect();
                weight_space = Subspace::span(q, &kernel);
            }
            let u = &weight_space.basis()[0];
            let p = u
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero basis vector");
            let weight: Vec<F> = ad_basis
                .iter()
                .map(|ad| current.induce(ad).mul_vec(u)[p].clone() / u[p].clone())
                .collect();
            let lifted: Vec<Vec<F>> = weight_space
                .basis()
                .iter()
                .map(|u| current.lift(u))
                .collect();
            for lifted in lifted {
                current = current.sum(&Subspace::span(n, std::slice::from_ref(&lifted)));
                out.basis.push(lifted);
                out.flag.push(current.clone());
                out.weights.push(weight.clone());
            }
        }
        Ok(out)
    }

    /// Whether `ad(x)` is nilpotent.
    pub fn is_ad_nilpotent(&self, x: &[F]) -> Result<bool> {
        Ok(self.ad_matrix(x)?.pow(self.dim() as u32).is_zero())
    }

    /// Nilradical of a solvable algebra as the common kernel of the weight
    /// functionals. Over Q, an algebra that only splits over Q(i) is
    /// complexified and the complex nilradical intersected with the real
    /// form by taking real and imaginary parts of the weights.
    pub fn nilradical(&self) -> Result<Subspace<F>> {
        let n = self.dim();
        match self.triangularize_flag() {
            Ok(flag) => Ok(common_kernel(n, &flag.distinct_weights())),
            Err(Error::NotSplitOverField { .. }) if F::KIND == FieldKind::Q => {
                let flag = self.complexify().triangularize_flag()?;
                let rows: Vec<Vec<F>> = flag
                    .distinct_weights()
                    .iter()
                    .flat_map(|w: &Vec<GaussRational>| {
                        [
                            w.iter().map(|c| F::from_rational(c.re.clone())).collect(),
                            w.iter().map(|c| F::from_rational(c.im.clone())).collect(),
                        ]
                    })
                    .collect();
                Ok(common_kernel(n, &rows))
            }
            Err(e) => Err(e),
        }
    }
}

/// `Σ c_i basis_i`
fn combine<F: BaseField>(basis: &[Vec<F>], c: &[F], len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (b, x) in basis.iter().zip(c) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(b) {
            *o = o.clone() + x.clone() * y.clone();
        }
    }
    out
}

/// `{x : Σ_k row_k x_k = 0 for every row}`
fn common_kernel<F: BaseField>(n: usize, rows: &[Vec<F>]) -> Subspace<F> {
    let rows: Vec<Vec<F>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .cloned()
        .collect();
    if rows.is_empty() {
        return Subspace::full(n);
    }
    let m = Matrix::from_rows(rows).expect("rectangular");
    Subspace::span(n, &m.kernel_basis())
}
