//! Builders for the catalog's Lie algebras, all over Q.

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Subspace};
use crate::linalg::{Matrix, Rational, Scalar};

/// Matrix units `E_ab` of `gl(n)` spanning the upper triangular algebra:
/// diagonal units first, then `E_ab` with `a < b` ordered by `(b − a, a)`.
/// With `strict`, only the off-diagonal units. Indices are 0-based.
pub fn upper_units(n: usize, strict: bool) -> Vec<(usize, usize)> {
    let mut units: Vec<(usize, usize)> = if strict {
        Vec::new()
    } else {
        (0..n).map(|i| (i, i)).collect()
    };
    for k in 1..n {
        units.extend((0..n - k).map(|a| (a, a + k)));
    }
    units
}

fn unit_name((a, b): (usize, usize)) -> String {
    format!("E{}{}", a + 1, b + 1)
}

/// Lie algebra spanned by the given matrix units with the commutator
/// bracket `[E_ab, E_cd] = δ_bc E_ad − δ_da E_cb`.
fn matrix_unit_algebra(units: &[(usize, usize)]) -> Result<LieAlgebra<Rational>> {
    let dim = units.len();
    let index = |u: (usize, usize)| units.iter().position(|&v| v == u);
    let mut brackets = Vec::new();
    for (i, &(a, b)) in units.iter().enumerate() {
        for (j, &(c, d)) in units.iter().enumerate().skip(i + 1) {
            let mut v = vec![Rational::from_int(0); dim];
            let mut nonzero = false;
            if b == c {
                let k =
                    index((a, d)).ok_or_else(|| Error::BadParameter("units not closed".into()))?;
                v[k] = v[k].clone() + Rational::from_int(1);
                nonzero = true;
            }
            if d == a {
                let k =
                    index((c, b)).ok_or_else(|| Error::BadParameter("units not closed".into()))?;
                v[k] = v[k].clone() - Rational::from_int(1);
                nonzero = true;
            }
            if nonzero {
                brackets.push((i, j, v));
            }
        }
    }
    LieAlgebra::new(dim, brackets)?.with_basis_names(units.iter().map(|&u| unit_name(u)).collect())
}

/// `t(n)`: upper triangular `n × n` matrices, dimension `n(n+1)/2`.
pub fn upper_triangular(n: usize) -> Result<LieAlgebra<Rational>> {
    if n == 0 {
        return Err(Error::BadParameter("t(n) needs n ≥ 1".into()));
    }
    Ok(matrix_unit_algebra(&upper_units(n, false))?.with_name(format!("t({n})")))
}

/// `u(n)`: strictly upper triangular matrices, dimension `n(n−1)/2`.
pub fn strictly_upper_triangular(n: usize) -> Result<LieAlgebra<Rational>> {
    if n < 2 {
        return Err(Error::BadParameter("u(n) needs n ≥ 2".into()));
    }
    Ok(matrix_unit_algebra(&upper_units(n, true))?.with_name(format!("u({n})")))
}

/// The line of scalar matrices inside `t(n)`.
pub fn scalar_line(n: usize) -> Subspace<Rational> {
    let dim = n * (n + 1) / 2;
    let v: Vec<Rational> = (0..dim)
        .map(|k| Rational::from_int(i64::from(k < n)))
        .collect();
    Subspace::span(dim, &[v])
}

/// `t(n)/z`: the quotient of `t(n)` by its center, the scalar matrices.
pub fn upper_triangular_mod_center(n: usize) -> Result<LieAlgebra<Rational>> {
    if n < 2 {
        return Err(Error::BadParameter("t(n)/z needs n ≥ 2".into()));
    }
    let t = upper_triangular(n)?;
    Ok(t.quotient_algebra(&scalar_line(n))?
        .algebra
        .with_name(format!("t({n})/z")))
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Heisenberg algebra on `(x, y, z)` with `[x, y] = z`.
pub fn heisenberg() -> Result<LieAlgebra<Rational>> {
    LieAlgebra::from_int_brackets(3, &[(0, 1, &[(2, 1)])])?
        .with_name("heisenberg")
        .with_basis_names(names(&["x", "y", "z"]))
}

/// Lie algebra of the `ax+b` group on `(t, x)` with `[t, x] = x`.
pub fn axb() -> Result<LieAlgebra<Rational>> {
    LieAlgebra::from_int_brackets(2, &[(0, 1, &[(1, 1)])])?
        .with_name("axb")
        .with_basis_names(names(&["t", "x"]))
}

/// `R ⋉ R^n` with `t` acting by the identity: `[t, x_i] = x_i`.
pub fn scalar_extension(n: usize) -> Result<LieAlgebra<Rational>> {
    if n == 0 {
        return Err(Error::BadParameter("H(n) needs n ≥ 1".into()));
    }
    let terms: Vec<[(usize, i64); 1]> = (1..=n).map(|k| [(k, 1)]).collect();
    let brackets: Vec<(usize, usize, &[(usize, i64)])> =
        (1..=n).map(|k| (0, k, &terms[k - 1][..])).collect();
    let mut basis = vec!["t".to_string()];
    basis.extend((1..=n).map(|k| format!("x{k}")));
    LieAlgebra::from_int_brackets(n + 1, &brackets)?
        .with_name(format!("H({n})"))
        .with_basis_names(basis)
}

/// Rotations acting on the plane: `(t, x, y)` with `[t, x] = y`,
/// `[t, y] = −x`.
pub fn rotation_extension() -> Result<LieAlgebra<Rational>> {
    LieAlgebra::from_int_brackets(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)])])?
        .with_name("so2_r2")
        .with_basis_names(names(&["t", "x", "y"]))
}

/// Rotations acting on the Heisenberg algebra: `(t, x, y, z)` with
/// `[t, x] = y`, `[t, y] = −x`, `[x, y] = z`.
pub fn walnut() -> Result<LieAlgebra<Rational>> {
    LieAlgebra::from_int_brackets(
        4,
        &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)]), (1, 2, &[(3, 1)])],
    )?
    .with_name("walnut")
    .with_basis_names(names(&["t", "x", "y", "z"]))
}

/// `sl(2)` on `(h, e, f)`: `[h, e] = 2e`, `[h, f] = −2f`, `[e, f] = h`.
pub fn sl2() -> Result<LieAlgebra<Rational>> {
    LieAlgebra::from_int_brackets(
        3,
        &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
    )?
    .with_name("sl2")
    .with_basis_names(names(&["h", "e", "f"]))
}

/// Coordinates of an upper triangular `n × n` matrix in the basis of
/// [`upper_units`].
pub fn upper_coordinates(m: &Matrix<Rational>, strict: bool) -> Vec<Rational> {
    upper_units(m.rows(), strict)
        .into_iter()
        .map(|(a, b)| m[(a, b)].clone())
        .collect()
}

/// The matrix unit for a basis index of [`upper_units`].
pub fn unit_matrix(n: usize, (a, b): (usize, usize)) -> Matrix<Rational> {
    let mut m = Matrix::zeros(n, n);
    m[(a, b)] = Rational::from_int(1);
    m
}
