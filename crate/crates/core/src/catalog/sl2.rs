//! Symbolic twisted conjugation in `SL(2)` against the unipotent subgroup.
//!
//! With `g = [[a, b], [c, d]]`, `d = (1 + bc)/a`, `x_r = [[1, r], [0, 1]]`
//! and `φ` conjugation by `ξ = [[0, 1], [1, 0]]`, the twisted conjugate
//! `g x_r φ(g⁻¹)` has off-diagonal sum `r(ad − bc) = r`. So if it lies in the
//! unipotent group (lower-left entry 0), its upper-right entry is `r`: the
//! twisted class of `x_r` meets the unipotent group only in `x_r`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::{Rational, RationalFunction, Scalar};

/// 2×2 matrix over `Q(a, b, c, r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicMatrix2 {
    pub entries: [[RationalFunction; 2]; 2],
}

impl SymbolicMatrix2 {
    pub fn new(entries: [[RationalFunction; 2]; 2]) -> Self {
        SymbolicMatrix2 { entries }
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i - 1][j - 1]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.entries[i][0].clone() * other.entries[0][j].clone()
                + self.entries[i][1].clone() * other.entries[1][j].clone()
        };
        SymbolicMatrix2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> RationalFunction {
        self.entries[0][0].clone() * self.entries[1][1].clone()
            - self.entries[0][1].clone() * self.entries[1][0].clone()
    }

    /// Numeric value at a point; `None` if a denominator vanishes or a
    /// variable is unbound.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Option<[[Rational; 2]; 2]> {
        let e = |i: usize, j: usize| self.entries[i][j].eval(point);
        Some([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
    }

    /// Every denominator is a single monomial `c·a^k`.
    pub fn denominators_are_powers_of_a(&self) -> bool {
        self.entries.iter().flatten().all(|f| {
            let terms: Vec<_> = f.denominator().terms().collect();
            terms.len() == 1 && terms[0].0.variables().all(|v| v == "a")
        })
    }
}

fn var(name: &str) -> RationalFunction {
    RationalFunction::var(name)
}

fn konst(n: i64) -> RationalFunction {
    RationalFunction::constant(Rational::from_int(n))
}

/// `d = (1 + bc)/a`, so that `ad − bc = 1`.
pub fn eliminated_d() -> RationalFunction {
    (konst(1) + var("b") * var("c")) / var("a")
}

/// The generic element `g` of `SL(2)`.
pub fn generic_element() -> SymbolicMatrix2 {
    SymbolicMatrix2::new([[var("a"), var("b")], [var("c"), eliminated_d()]])
}

/// `x_r = [[1, r], [0, 1]]`.
pub fn unipotent(r: RationalFunction) -> SymbolicMatrix2 {
    SymbolicMatrix2::new([[konst(1), r], [konst(0), konst(1)]])
}

/// `φ(m) = ξ m ξ⁻¹` with `ξ = [[0, 1], [1, 0]]`: swaps both rows and
/// columns.
pub fn twist(m: &SymbolicMatrix2) -> SymbolicMatrix2 {
    let e = &m.entries;
    SymbolicMatrix2::new([
        [e[1][1].clone(), e[1][0].clone()],
        [e[0][1].clone(), e[0][0].clone()],
    ])
}

/// Inverse of a determinant-one matrix.
fn inverse_unimodular(m: &SymbolicMatrix2) -> SymbolicMatrix2 {
    let e = &m.entries;
    SymbolicMatrix2::new([
        [e[1][1].clone(), -e[0][1].clone()],
        [-e[1][0].clone(), e[0][0].clone()],
    ])
}

/// `g x_r φ(g⁻¹)`, computed by matrix multiplication.
pub fn sl2_twisted_product() -> SymbolicMatrix2 {
    let g = generic_element();
    g.mul(&unipotent(var("r")))
        .mul(&twist(&inverse_unimodular(&g)))
}

/// Closed form `[[a² − b² − abr, bd − ac + adr], [ac − bd − bcr,
/// d² − c² + cdr]]` with the same substitution for `d`.
pub fn expected_twisted_product() -> SymbolicMatrix2 {
    let (a, b, c, d, r) = (var("a"), var("b"), var("c"), eliminated_d(), var("r"));
    SymbolicMatrix2::new([
        [
            a.clone() * a.clone() - b.clone() * b.clone() - a.clone() * b.clone() * r.clone(),
            b.clone() * d.clone() - a.clone() * c.clone() + a.clone() * d.clone() * r.clone(),
        ],
        [
            a.clone() * c.clone() - b.clone() * d.clone() - b.clone() * c.clone() * r.clone(),
            d.clone() * d.clone() - c.clone() * c.clone() + c * d * r,
        ],
    ])
}

/// Outcome of the symbolic check, one flag per identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Report {
    /// The product equals the closed form.
    pub matches_closed_form: bool,
    /// `entry(1,2) + entry(2,1) = r` identically.
    pub off_diagonal_sum_is_r: bool,
    /// The product has determinant 1.
    pub determinant_one: bool,
}

impl Sl2Report {
    pub fn holds(&self) -> bool {
        self.matches_closed_form && self.off_diagonal_sum_is_r && self.determinant_one
    }
}

pub fn sl2_report() -> Sl2Report {
    let p = sl2_twisted_product();
    Sl2Report {
        matches_closed_form: p == expected_twisted_product(),
        off_diagonal_sum_is_r: p.entry(1, 2).clone() + p.entry(2, 1).clone() == var("r"),
        determinant_one: p.det() == RationalFunction::one(),
    }
}

/// True iff, identically in `a, b, c, r`, a twisted conjugate of `x_r`
/// that is unipotent (lower-left entry 0, determinant 1) has upper-right
/// entry `r`; this follows from the off-diagonal sum identity.
pub fn verify_sl2_intersection() -> bool {
    sl2_report().holds()
}

/// Numeric evaluation of the twisted product at `(a, b, c, r)`, computed
/// directly with rational 2×2 arithmetic (independent of the symbolic
/// layer). Requires `a ≠ 0`.
pub fn numeric_twisted_product(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    r: &Rational,
) -> [[Rational; 2]; 2] {
    assert!(!a.is_zero(), "a must be nonzero");
    let d = (Rational::from_int(1) + b * c) / a;
    let mul = |x: &[[Rational; 2]; 2], y: &[[Rational; 2]; 2]| {
        let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    };
    let g = [[a.clone(), b.clone()], [c.clone(), d.clone()]];
    let x = [
        [Rational::from_int(1), r.clone()],
        [Rational::from_int(0), Rational::from_int(1)],
    ];
    let xi = [
        [Rational::from_int(0), Rational::from_int(1)],
        [Rational::from_int(1), Rational::from_int(0)],
    ];
    let g_inv = [[d, -b.clone()], [-c.clone(), a.clone()]];
    // ξ⁻¹ = ξ
    mul(&mul(&g, &x), &mul(&mul(&xi, &g_inv), &xi))
}

pub fn point(a: &Rational, b: &Rational, c: &Rational, r: &Rational) -> BTreeMap<String, Rational> {
    [("a", a), ("b", b), ("c", c), ("r", r)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}
