//! Random automorphisms of the catalog algebras, each drawn from an explicit
//! family whose Reidemeister verdict is known in closed form.

use rand::Rng;

use super::algebras::{scalar_line, unit_matrix, upper_coordinates, upper_units};
use super::{Family, SampleAutomorphism};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational, Scalar};
use crate::reidemeister::VerdictKind;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Small rational, possibly zero: `p / d` with `|p| ≤ 3`, `d ∈ {1, 2}`.
fn small<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(
        rng.gen_range(-3i64..=3).into(),
        rng.gen_range(1i64..=2).into(),
    )
}

fn nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = small(rng);
        if !num_traits::Zero::is_zero(&x) {
            return x;
        }
    }
}

/// Random invertible matrix with small entries.
fn invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix<Rational> {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| small(rng));
        if !num_traits::Zero::is_zero(&m.det().expect("square")) {
            return m;
        }
    }
}

/// Upper triangular with nonzero diagonal drawn from `diag`.
fn upper_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => nonzero(rng),
        std::cmp::Ordering::Less => small(rng),
        std::cmp::Ordering::Greater => q(0),
    })
}

/// Matrix of `X ↦ g X g⁻¹` on the span of upper triangular matrix units.
fn conjugation(g: &Matrix<Rational>, strict: bool) -> Matrix<Rational> {
    let n = g.rows();
    let g_inv = g.inverse().expect("invertible");
    let columns: Vec<Vec<Rational>> = upper_units(n, strict)
        .into_iter()
        .map(|u| upper_coordinates(&(&(g * &unit_matrix(n, u)) * &g_inv), strict))
        .collect();
    Matrix::from_columns(columns[0].len(), &columns)
}

/// Matrix of `X ↦ −J Xᵀ J` with `J` the antidiagonal permutation.
fn antitranspose(n: usize, strict: bool) -> Matrix<Rational> {
    let j = Matrix::from_fn(n, n, |a, b| q(i64::from(a + b == n - 1)));
    let columns: Vec<Vec<Rational>> = upper_units(n, strict)
        .into_iter()
        .map(|u| upper_coordinates(&-&(&(&j * &unit_matrix(n, u).transpose()) * &j), strict))
        .collect();
    Matrix::from_columns(columns[0].len(), &columns)
}

/// Matrix of `X ↦ X + f(X)·I` where `f` reads only the diagonal.
fn central_twist<R: Rng>(rng: &mut R, n: usize) -> Matrix<Rational> {
    let dim = n * (n + 1) / 2;
    loop {
        let f: Vec<Rational> = (0..n).map(|_| small(rng)).collect();
        let trace = f.iter().fold(q(0), |acc, x| acc + x);
        if num_traits::Zero::is_zero(&(trace + q(1))) {
            continue;
        }
        let mut m = Matrix::<Rational>::identity(dim);
        for (col, fc) in f.iter().enumerate() {
            for row in 0..n {
                m[(row, col)] = m[(row, col)].clone() + fc.clone();
            }
        }
        return m;
    }
}

fn t_family<R: Rng>(rng: &mut R, n: usize) -> (Matrix<Rational>, String) {
    let mut m = conjugation(&upper_invertible(rng, n), false);
    let mut label = "conjugation".to_string();
    if rng.gen_bool(0.5) {
        m = &m * &antitranspose(n, false);
        label.push_str(" ∘ antitranspose");
    }
    if rng.gen_bool(0.5) {
        m = &m * &central_twist(rng, n);
        label.push_str(" ∘ central twist");
    }
    (m, label)
}

/// 2×2 block commuting (`ε = 1`) or anticommuting (`ε = −1`) with the
/// rotation generator, returned with `a² + b²`.
fn rotation_block<R: Rng>(rng: &mut R, epsilon: i64) -> (Matrix<Rational>, Rational) {
    loop {
        let (a, b) = (small(rng), small(rng));
        let norm = &a * &a + &b * &b;
        if num_traits::Zero::is_zero(&norm) {
            continue;
        }
        let m = if epsilon == 1 {
            Matrix::from_rows(vec![vec![a.clone(), -b.clone()], vec![b, a]])
        } else {
            Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![b, -a]])
        };
        return (m.expect("2x2"), norm);
    }
}

/// Rational point of O(2) commuting (`ε = 1`) or anticommuting (`ε = −1`)
/// with the rotation generator.
fn orthogonal_block<R: Rng>(rng: &mut R, epsilon: i64) -> Matrix<Rational> {
    const POINTS: [(i64, i64, i64); 4] = [(1, 0, 1), (3, 4, 5), (5, 12, 13), (8, 15, 17)];
    let (x, y, z) = POINTS[rng.gen_range(0..POINTS.len())];
    let sign = |r: &mut R| if r.gen_bool(0.5) { 1 } else { -1 };
    let (sa, sb) = (sign(rng), sign(rng));
    let (a, b) = if rng.gen_bool(0.5) { (x, y) } else { (y, x) };
    let a = Rational::new((sa * a).into(), z.into());
    let b = Rational::new((sb * b).into(), z.into());
    let rows = if epsilon == 1 {
        vec![vec![a.clone(), -b.clone()], vec![b, a]]
    } else {
        vec![vec![a.clone(), b.clone()], vec![b, -a]]
    };
    Matrix::from_rows(rows).expect("2x2")
}

/// Samples one automorphism of the family's algebra `g`, with its expected
/// verdict derived from the family's closed-form eigenvalues.
pub fn sample<R: Rng>(family: Family, g: &LieAlgebra<Rational>, rng: &mut R) -> SampleAutomorphism {
    let (matrix, label, expected) = match family {
        // Every automorphism of these has eigenvalue 1 (R∞ groups).
        Family::UpperTriangular(n) => {
            let (m, label) = t_family(rng, n);
            (m, label, Some(VerdictKind::Infinite))
        }
        Family::UpperTriangularModCenter(n) => {
            let (m, label) = t_family(rng, n);
            (
                scalar_line(n).induce(&m),
                format!("induced {label}"),
                Some(VerdictKind::Infinite),
            )
        }
        // Eigenvalues g_ii / g_jj for i < j.
        Family::StrictlyUpper(n) => {
            let g = upper_invertible(rng, n);
            let repeated = (0..n).any(|i| (i + 1..n).any(|j| g[(i, i)] == g[(j, j)]));
            let expected = if repeated {
                VerdictKind::Infinite
            } else {
                VerdictKind::One
            };
            (
                conjugation(&g, true),
                "conjugation".to_string(),
                Some(expected),
            )
        }
        // Eigenvalues: those of M, and det M on the center.
        Family::Heisenberg => {
            let m = invertible(rng, 2);
            let det = m.det().expect("square");
            let char_at_one = q(1) - m.trace() + det.clone();
            let infinite = det == q(1) || num_traits::Zero::is_zero(&char_at_one);
            let mut out = Matrix::zeros(3, 3);
            for i in 0..2 {
                for j in 0..2 {
                    out[(i, j)] = m[(i, j)].clone();
                }
            }
            out[(2, 0)] = small(rng);
            out[(2, 1)] = small(rng);
            out[(2, 2)] = det;
            let expected = if infinite {
                VerdictKind::Infinite
            } else {
                VerdictKind::One
            };
            (out, "GL2 action".to_string(), Some(expected))
        }
        // t ↦ t + c·x is forced, so 1 is always an eigenvalue.
        Family::Axb => {
            let m = Matrix::from_rows(vec![vec![q(1), q(0)], vec![small(rng), nonzero(rng)]])
                .expect("2x2");
            (m, "affine".to_string(), Some(VerdictKind::Infinite))
        }
        Family::ScalarExtension(n) => {
            let m = invertible(rng, n);
            let out = Matrix::from_fn(n + 1, n + 1, |i, j| match (i, j) {
                (0, 0) => q(1),
                (0, _) => q(0),
                (_, 0) => small(rng),
                _ => m[(i - 1, j - 1)].clone(),
            });
            (
                out,
                "translation ∘ GL(n)".to_string(),
                Some(VerdictKind::Infinite),
            )
        }
        // ε on t; eigenvalues of M are ±√(a²+b²) when ε = −1.
        Family::RotationExtension => {
            let epsilon = if rng.gen_bool(0.5) { 1 } else { -1 };
            let (m, norm) = rotation_block(rng, epsilon);
            let out = Matrix::from_fn(3, 3, |i, j| match (i, j) {
                (0, 0) => q(epsilon),
                (0, _) => q(0),
                (_, 0) => small(rng),
                _ => m[(i - 1, j - 1)].clone(),
            });
            let infinite = epsilon == 1 || norm == q(1);
            let expected = if infinite {
                VerdictKind::Infinite
            } else {
                VerdictKind::One
            };
            (out, format!("normalizer, ε = {epsilon}"), Some(expected))
        }
        // Orthogonal M (so the compact center is preserved): 1 is always an
        // eigenvalue, from t when ε = 1 and from M when ε = −1.
        Family::Walnut => {
            let epsilon = if rng.gen_bool(0.5) { 1 } else { -1 };
            let m = orthogonal_block(rng, epsilon);
            let (p, qq, s) = (small(rng), small(rng), small(rng));
            let det = m.det().expect("square");
            let alpha = -(&p * &m[(1, 1)] - &qq * &m[(0, 1)]);
            let beta = &p * &m[(1, 0)] - &qq * &m[(0, 0)];
            let out = Matrix::from_rows(vec![
                vec![q(epsilon), q(0), q(0), q(0)],
                vec![p, m[(0, 0)].clone(), m[(0, 1)].clone(), q(0)],
                vec![qq, m[(1, 0)].clone(), m[(1, 1)].clone(), q(0)],
                vec![s, alpha, beta, det],
            ])
            .expect("4x4");
            (
                out,
                format!("orthogonal normalizer, ε = {epsilon}"),
                Some(VerdictKind::Infinite),
            )
        }
        // Inner automorphisms only; the classifier must refuse them.
        Family::Sl2 => {
            let e = g
                .ad_basis(1)
                .scale(&small(rng))
                .exp_nilpotent()
                .expect("nilpotent");
            let f = g
                .ad_basis(2)
                .scale(&small(rng))
                .exp_nilpotent()
                .expect("nilpotent");
            (&e * &f, "exp(ad e) ∘ exp(ad f)".to_string(), None)
        }
    };
    SampleAutomorphism {
        label,
        matrix,
        expected,
    }
}

/// Normalizer elements `r·diag(1, −1)` and `r·[[0, 1], [1, 0]]` acting on
/// the plane, with `t ↦ −t`; for `r ∉ {0, ±1}` no eigenvalue equals 1.
pub fn rotation_normalizer(r: &Rational, reflection_xi: bool) -> Matrix<Rational> {
    let zero = q(0);
    let (m11, m12, m21, m22) = if reflection_xi {
        (zero.clone(), r.clone(), r.clone(), zero.clone())
    } else {
        (r.clone(), zero.clone(), zero.clone(), -r.clone())
    };
    Matrix::from_rows(vec![
        vec![q(-1), zero.clone(), zero.clone()],
        vec![zero.clone(), m11, m12],
        vec![zero, m21, m22],
    ])
    .expect("3x3")
}

/// Composes with `exp(ad x)` for a random `x` in the given nilpotent ideal.
pub fn with_inner<R: Rng>(
    g: &LieAlgebra<Rational>,
    nilradical_basis: &[Vec<Rational>],
    m: &Matrix<Rational>,
    rng: &mut R,
) -> Matrix<Rational> {
    let n = g.dim();
    let mut x = vec![q(0); n];
    for b in nilradical_basis {
        let c = small(rng);
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi = xi.clone() + c.clone() * bi.clone();
        }
    }
    let inner = g
        .ad_matrix(&x)
        .expect("vector in the algebra")
        .exp_nilpotent()
        .expect("nilradical elements are ad-nilpotent");
    &inner * m
}
