use crate::error::{Error, Result};
use crate::linalg::{BaseField, GaussRational, Matrix};

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// basis `e_1, …, e_n`.
///
/// Only the brackets `[e_i, e_j]` with `i < j` are stored; the others follow
/// from antisymmetry. Construction checks the Jacobi identity on every basis
/// triple, so every value of this type is a genuine Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra<F> {
    name: String,
    basis_names: Vec<String>,
    /// `brackets[pair_index(i, j)]` holds the coordinates of `[e_i, e_j]`.
    brackets: Vec<Vec<F>>,
}

/// Position of the pair `i < j` in the packed upper-triangular layout.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl<F: BaseField> LieAlgebra<F> {
    /// Builds and validates an algebra from brackets `(i, j, [e_i, e_j])`
    /// with 0-based indices. Pairs with `i > j` are accepted and stored via
    /// antisymmetry; unlisted brackets are zero.
    pub fn new(
        dim: usize,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<F>)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch(
                "Lie algebra must have dim ≥ 1".into(),
            ));
        }
        let mut table = vec![vec![F::zero(); dim]; dim * (dim - 1) / 2];
        let mut seen = vec![false; table.len()];
        for (i, j, v) in brackets {
            let invalid = |message: &str| Error::InvalidBracket {
                i: i + 1,
                j: j + 1,
                message: message.to_string(),
            };
            if i >= dim || j >= dim {
                return Err(invalid("basis index out of range"));
            }
            if v.len() != dim {
                return Err(invalid(&format!(
                    "expected {dim} coordinates, got {}",
                    v.len()
                )));
            }
            if i == j {
                if v.iter().all(|c| c.is_zero()) {
                    continue;
                }
                return Err(invalid("[x, x] must vanish"));
            }
            let (a, b, v) = if i < j {
                (i, j, v)
            } else {
                (j, i, v.into_iter().map(|c| -c).collect())
            };
            let k = pair_index(dim, a, b);
            if seen[k] {
                return Err(invalid("bracket given twice"));
            }
            seen[k] = true;
            table[k] = v;
        }
        let g = LieAlgebra {
            name: String::from("g"),
            basis_names: (1..=dim).map(|k| format!("e{k}")).collect(),
            brackets: table,
        };
        g.check_jacobi()?;
        Ok(g)
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Result<Self> {
        LieAlgebra::new(dim, std::iter::empty())
    }

    /// Builds from integer structure constants: `(i, j, [(k, c), …])` means
    /// `[e_i, e_j] = Σ c·e_k`, all indices 0-based.
    pub fn from_int_brackets(
        dim: usize,
        brackets: &[(usize, usize, &[(usize, i64)])],
    ) -> Result<Self> {
        LieAlgebra::new(
            dim,
            brackets.iter().map(|&(i, j, terms)| {
                let mut v = vec![F::zero(); dim];
                for &(k, c) in terms {
                    if k < dim {
                        v[k] = v[k].clone() + F::from_int(c);
                    }
                }
                (i, j, v)
            }),
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replaces the basis labels; the count must equal the dimension.
    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for a {}-dimensional algebra",
                names.len(),
                self.dim()
            )));
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<F> {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.brackets[pair_index(n, j, i)]
                .iter()
                .map(|c| -c.clone())
                .collect(),
            std::cmp::Ordering::Equal => vec![F::zero(); n],
        }
    }

    /// Stored bracket for `i < j` without copying.
    fn packed(&self, i: usize, j: usize) -> &[F] {
        &self.brackets[pair_index(self.dim(), i, j)]
    }

    /// Bilinear extension of the bracket to arbitrary vectors. Zero
    /// coordinates are skipped, so sparse inputs are cheap.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        assert_eq!((x.len(), y.len()), (n, n), "vector length mismatch");
        let mut out = vec![F::zero(); n];
        for a in (0..n).filter(|&a| !x[a].is_zero()) {
            for b in (0..n).filter(|&b| b != a && !y[b].is_zero()) {
                let (lo, hi, sign) = if a < b { (a, b, true) } else { (b, a, false) };
                let coeff = x[a].clone() * y[b].clone();
                for (k, c) in self.packed(lo, hi).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let term = coeff.clone() * c.clone();
                    out[k] = if sign {
                        out[k].clone() + term
                    } else {
                        out[k].clone() - term
                    };
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ [x, y]` in the defining basis.
    pub fn ad_matrix(&self, x: &[F]) -> Result<Matrix<F>> {
        let n = self.dim();
        if x.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a {n}-dimensional algebra",
                x.len()
            )));
        }
        let columns: Vec<Vec<F>> = (0..n).map(|j| self.bracket(x, &unit(n, j))).collect();
        Ok(Matrix::from_columns(n, &columns))
    }

    /// `ad(e_i)`.
    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_columns(
            n,
            &(0..n).map(|j| self.bracket_basis(i, j)).collect::<Vec<_>>(),
        )
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|v| v.iter().all(|c| c.is_zero()))
    }

    /// Jacobi residual `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<F> {
        let n = self.dim();
        let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
        let t1 = self.bracket(&ei, &self.bracket_basis(j, k));
        let t2 = self.bracket(&ej, &self.bracket_basis(k, i));
        let t3 = self.bracket(&ek, &self.bracket_basis(i, j));
        (0..n)
            .map(|m| t1[m].clone() + t2[m].clone() + t3[m].clone())
            .collect()
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobi_residual(i, j, k);
                    if r.iter().any(|c| !c.is_zero()) {
                        return Err(Error::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            residual: format_vector(&r),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The same structure constants read over Q(i).
    pub fn complexify(&self) -> LieAlgebra<GaussRational> {
        LieAlgebra {
            name: self.name.clone(),
            basis_names: self.basis_names.clone(),
            brackets: self
                .brackets
                .iter()
                .map(|v| v.iter().map(BaseField::to_gauss).collect())
                .collect(),
        }
    }

    /// Human-readable linear combination of basis labels, e.g. `2*x - y`.
    pub fn format_element(&self, v: &[F]) -> String {
        format_combination(v, &self.basis_names)
    }
}

/// `k`-th standard basis vector of length `n`.
pub fn unit<F: BaseField>(n: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[k] = F::one();
    v
}

pub fn format_vector<F: BaseField>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Renders `Σ v_k·names_k` with signs folded and unit coefficients dropped;
/// compound Gaussian coefficients are parenthesized.
pub fn format_combination<F: BaseField>(v: &[F], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
            _ => (false, text),
        };
        let body = if body.contains(['+', '-']) {
            format!("({body})")
        } else {
            body
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if body != "1" {
            out.push_str(&body);
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
