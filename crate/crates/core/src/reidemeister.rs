//! Decision procedures for Reidemeister numbers.
//!
//! * [`classify_solvable`]: for an automorphism `φ` of a connected solvable
//!   Lie group, `R(φ)` is `1` or `∞`, and it is `∞` exactly when `1` is an
//!   eigenvalue of `dφ`.
//! * [`torus_classify`]: for `φ_A` on the torus `T^n`, `R = 1` iff
//!   `det(A − I) ≠ 0` iff `Fix(φ_A)` is finite; the Smith normal form of
//!   `A − I` gives the structure of `Fix(φ_A)`.
//! * [`rinfty_oddsolv`]: a split solvable algebra whose nilradical has odd
//!   codimension has the topological R∞ property. This is a sufficient
//!   condition only; anything else is reported as inconclusive.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::{AutomorphismMatrix, FlagData, LieAlgebra, Subspace};
use crate::linalg::{smith_normal_form, BaseField, Matrix};

pub const CITE_SOLVABLE: &str =
    "solvable dichotomy: R(φ) = ∞ iff 1 is an eigenvalue of dφ, else R(φ) = 1";
pub const CITE_FIX: &str = "fixed-subalgebra criterion: R(φ) = ∞ iff Fix(dφ) ≠ 0";
pub const CITE_TORUS: &str = "torus criterion: R(φ_A) = 1 iff det(A − I) ≠ 0 iff Fix(φ_A) finite";
pub const CITE_SNF: &str =
    "Fix(φ_A) ≅ ker(A − I) on R^n/Z^n, read off the Smith normal form of A − I";
pub const CITE_ODD: &str =
    "odd-codimension criterion: real split solvable with dim(G/N) odd ⇒ topological R∞";
pub const CITE_SUFFICIENT: &str = "odd-codimension criterion is sufficient, not necessary";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    One,
    Infinite,
    Inconclusive,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::One => "One",
            VerdictKind::Infinite => "Infinite",
            VerdictKind::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    EigenvalueOneFound,
    NoEigenvalueOne,
    DetNonzero,
    DetZero,
    OddCodimSplit,
    EvenCodim,
    NotSplit,
    NotSolvable,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::EigenvalueOneFound => "EigenvalueOneFound",
            Reason::NoEigenvalueOne => "NoEigenvalueOne",
            Reason::DetNonzero => "DetNonzero",
            Reason::DetZero => "DetZero",
            Reason::OddCodimSplit => "OddCodimSplit",
            Reason::EvenCodim => "EvenCodim",
            Reason::NotSplit => "NotSplit",
            Reason::NotSolvable => "NotSolvable",
        })
    }
}

/// Everything a reader needs to re-check a verdict by hand. Fields that do
/// not apply to a given procedure are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Evidence {
    /// Characteristic polynomial of `dφ` (or of `A` for tori).
    pub char_poly: Option<String>,
    /// `dim ker(dφ − I)`, or `n − rank(A − I)` for tori.
    pub fix_dim: Option<usize>,
    /// `det(dφ − I)` or `det(A − I)`.
    pub det: Option<String>,
    pub invariant_factors: Option<Vec<BigInt>>,
    pub nilradical_dim: Option<usize>,
    pub codim: Option<usize>,
    /// Free-form supporting detail, e.g. the non-split witness.
    pub detail: Option<String>,
    pub citations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReidemeisterVerdict {
    pub kind: VerdictKind,
    pub reason: Reason,
    pub evidence: Evidence,
}

impl ReidemeisterVerdict {
    /// One-line human summary.
    pub fn headline(&self) -> String {
        let e = &self.evidence;
        let fix = e.fix_dim.unwrap_or(0);
        match self.reason {
            Reason::EigenvalueOneFound => {
                format!("R = ∞ (eigenvalue 1 of dφ; fix-subalgebra dim {fix})")
            }
            Reason::NoEigenvalueOne => {
                "R = 1 (1 is not an eigenvalue of dφ; fix-subalgebra trivial)".to_string()
            }
            Reason::DetNonzero => {
                let det = e.det.as_deref().unwrap_or("?").trim_start_matches('-');
                if det == "1" {
                    "R = 1; Fix trivial (|det(A−I)| = 1)".to_string()
                } else {
                    format!("R = 1; Fix finite of order {det} (|det(A−I)| = {det})")
                }
            }
            Reason::DetZero => {
                format!("R = ∞; Fix infinite, torus rank {fix} (det(A−I) = 0)")
            }
            Reason::OddCodimSplit => format!(
                "topological R∞ certified: split solvable, dim(G/N) = {} odd",
                e.codim.unwrap_or(0)
            ),
            Reason::EvenCodim => format!(
                "sufficient condition not established: dim(G/N) = {} even",
                e.codim.unwrap_or(0)
            ),
            Reason::NotSplit => format!(
                "sufficient condition not established: {}",
                e.detail
                    .as_deref()
                    .unwrap_or("not split over the base field")
            ),
            Reason::NotSolvable => {
                "sufficient condition not established: algebra is not solvable".to_string()
            }
        }
    }
}

/// The eigenvalue-one criterion applied to a bare matrix. A `0 × 0` matrix
/// (the zero algebra) has no eigenvalues and classifies as `One`.
pub fn classify_linear<F: BaseField>(m: &Matrix<F>) -> Result<ReidemeisterVerdict> {
    let chi = m.char_poly()?;
    let det = m.minus_scalar(&F::one()).det()?;
    let fix_dim = m.minus_scalar(&F::one()).kernel_basis().len();
    let infinite = det.is_zero();
    debug_assert_eq!(infinite, fix_dim > 0);
    Ok(ReidemeisterVerdict {
        kind: if infinite {
            VerdictKind::Infinite
        } else {
            VerdictKind::One
        },
        reason: if infinite {
            Reason::EigenvalueOneFound
        } else {
            Reason::NoEigenvalueOne
        },
        evidence: Evidence {
            char_poly: Some(chi.to_string()),
            fix_dim: Some(fix_dim),
            det: Some(det.to_string()),
            citations: vec![CITE_SOLVABLE.to_string(), CITE_FIX.to_string()],
            ..Evidence::default()
        },
    })
}

/// Reidemeister number of the automorphism of the connected, simply
/// connected solvable group with Lie algebra `g` whose differential is `a`.
/// Never inconclusive.
pub fn classify_solvable<F: BaseField>(
    g: &LieAlgebra<F>,
    a: &AutomorphismMatrix<F>,
) -> Result<ReidemeisterVerdict> {
    if a.algebra() != g {
        return Err(Error::DimensionMismatch(
            "automorphism belongs to a different algebra".into(),
        ));
    }
    g.require_solvable()?;
    classify_linear(a.matrix())
}

/// `exp(ad x)` as a validated automorphism.
pub fn inner_automorphism<F: BaseField>(
    g: &LieAlgebra<F>,
    x: &[F],
) -> Result<AutomorphismMatrix<F>> {
    AutomorphismMatrix::inner(g, x)
}

/// Structure of `Fix(φ_A) ≅ F × T^r` on the torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusFixGroup {
    /// Invariant factors of `A − I` that exceed 1: `F ≅ ⊕ Z/d`.
    pub finite_part: Vec<BigInt>,
    /// Number of zero invariant factors: the dimension `r` of the identity
    /// component.
    pub torus_rank: usize,
    /// `|F|`, the product of the nonzero invariant factors; equals
    /// `|det(A − I)|` when `torus_rank = 0`.
    pub order: BigInt,
}

impl TorusFixGroup {
    pub fn is_finite(&self) -> bool {
        self.torus_rank == 0
    }
}

/// Classifies the torus automorphism induced by a unimodular integer matrix.
pub fn torus_classify(a: &Matrix<BigInt>) -> Result<(ReidemeisterVerdict, TorusFixGroup)> {
    let det_a = a.det()?;
    if det_a.abs() != BigInt::one() {
        return Err(Error::NotUnimodular {
            det: det_a.abs().to_string(),
        });
    }
    let b = a.minus_scalar(&BigInt::one());
    let det = b.det()?;
    let snf = smith_normal_form(&b);
    let factors = snf.invariant_factors;
    let torus_rank = factors.iter().filter(|d| d.is_zero()).count();
    let finite_part: Vec<BigInt> = factors
        .iter()
        .filter(|d| **d > BigInt::one())
        .cloned()
        .collect();
    let order = factors
        .iter()
        .filter(|d| !d.is_zero())
        .fold(BigInt::one(), |acc, d| acc * d);
    let fix = TorusFixGroup {
        finite_part,
        torus_rank,
        order,
    };
    let finite = !det.is_zero();
    debug_assert_eq!(finite, fix.is_finite());
    let verdict = ReidemeisterVerdict {
        kind: if finite {
            VerdictKind::One
        } else {
            VerdictKind::Infinite
        },
        reason: if finite {
            Reason::DetNonzero
        } else {
            Reason::DetZero
        },
        evidence: Evidence {
            char_poly: Some(a.char_poly()?.to_string()),
            fix_dim: Some(torus_rank),
            det: Some(det.to_string()),
            invariant_factors: Some(factors),
            citations: vec![CITE_TORUS.to_string(), CITE_SNF.to_string()],
            ..Evidence::default()
        },
    };
    Ok((verdict, fix))
}

fn inconclusive(reason: Reason, evidence: Evidence) -> ReidemeisterVerdict {
    ReidemeisterVerdict {
        kind: VerdictKind::Inconclusive,
        reason,
        evidence,
    }
}

/// Nilradical from a flag: the common kernel of its weights.
pub fn nilradical_from_flag<F: BaseField>(n: usize, flag: &FlagData<F>) -> Subspace<F> {
    let rows: Vec<Vec<F>> = flag
        .distinct_weights()
        .into_iter()
        .filter(|w| w.iter().any(|c| !c.is_zero()))
        .collect();
    if rows.is_empty() {
        return Subspace::full(n);
    }
    let m = Matrix::from_rows(rows).expect("rectangular");
    Subspace::span(n, &m.kernel_basis())
}

/// Checks the odd-codimension sufficient condition for the topological R∞
/// property. Every failure mode is an `Inconclusive` verdict.
pub fn rinfty_oddsolv<F: BaseField>(g: &LieAlgebra<F>) -> ReidemeisterVerdict {
    let mut evidence = Evidence {
        citations: vec![CITE_ODD.to_string(), CITE_SUFFICIENT.to_string()],
        ..Evidence::default()
    };
    if !g.is_solvable() {
        evidence.detail = Some("algebra is not solvable".into());
        return inconclusive(Reason::NotSolvable, evidence);
    }
    let flag = match g.triangularize_flag() {
        Ok(flag) => flag,
        Err(e) => {
            // The nilradical may still be computable after complexification;
            // report it for reference.
            if let Ok(n) = g.nilradical() {
                evidence.nilradical_dim = Some(n.dim());
                evidence.codim = Some(n.codim());
            }
            evidence.detail = Some(match e {
                Error::NotSplitOverField {
                    field,
                    element,
                    factor,
                } => format!(
                    "not split over {field}: ad({element}) has factor {factor} without roots"
                ),
                other => other.to_string(),
            });
            return inconclusive(Reason::NotSplit, evidence);
        }
    };
    let n = nilradical_from_flag(g.dim(), &flag);
    evidence.nilradical_dim = Some(n.dim());
    evidence.codim = Some(n.codim());
    if !flag.weights_real() {
        evidence.detail = Some("weights are not real".into());
        return inconclusive(Reason::NotSplit, evidence);
    }
    if n.codim() % 2 == 1 {
        ReidemeisterVerdict {
            kind: VerdictKind::Infinite,
            reason: Reason::OddCodimSplit,
            evidence,
        }
    } else {
        inconclusive(Reason::EvenCodim, evidence)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::unit;
    use crate::linalg::{int, Rational};

    type G = LieAlgebra<Rational>;

    fn axb() -> G {
        G::from_int_brackets(2, &[(0, 1, &[(1, 1)])]).unwrap()
    }

    fn heisenberg() -> G {
        G::from_int_brackets(3, &[(0, 1, &[(2, 1)])]).unwrap()
    }

    fn rotation() -> G {
        G::from_int_brackets(3, &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)])]).unwrap()
    }

    fn t(n: usize) -> G {
        crate::catalog::upper_triangular(n).unwrap()
    }

    fn aut(g: &G, rows: &[&[i64]]) -> AutomorphismMatrix<Rational> {
        AutomorphismMatrix::new(g, Matrix::from_ints(rows)).unwrap()
    }

    #[test]
    fn solvable_examples() {
        let g = axb();
        let v = classify_solvable(&g, &aut(&g, &[&[1, 0], &[3, 2]])).unwrap();
        assert_eq!(
            (v.kind, v.reason),
            (VerdictKind::Infinite, Reason::EigenvalueOneFound)
        );
        assert_eq!(v.evidence.fix_dim, Some(1));
        assert_eq!(
            v.headline(),
            "R = ∞ (eigenvalue 1 of dφ; fix-subalgebra dim 1)"
        );

        let h = heisenberg();
        let v = classify_solvable(&h, &aut(&h, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 6]])).unwrap();
        assert_eq!(v.kind, VerdictKind::One);
        assert_eq!(v.evidence.det.as_deref(), Some("10"));
        assert_eq!(v.evidence.fix_dim, Some(0));

        let r = rotation();
        let v = classify_solvable(&r, &aut(&r, &[&[-1, 0, 0], &[0, 2, 0], &[0, 0, -2]])).unwrap();
        assert_eq!(v.kind, VerdictKind::One);

        let v = classify_solvable(&h, &AutomorphismMatrix::identity(&h)).unwrap();
        assert_eq!(v.kind, VerdictKind::Infinite);
        assert_eq!(v.evidence.fix_dim, Some(3));
    }

    #[test]
    fn rejects_non_solvable() {
        let sl2 = G::from_int_brackets(
            3,
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
        .unwrap();
        assert_eq!(
            classify_solvable(&sl2, &AutomorphismMatrix::identity(&sl2)),
            Err(Error::NotSolvable)
        );
        assert_eq!(rinfty_oddsolv(&sl2).reason, Reason::NotSolvable);
    }

    #[test]
    fn inner_examples() {
        let h = heisenberg();
        let a = inner_automorphism(&h, &unit(3, 0)).unwrap();
        assert_eq!(
            classify_solvable(&h, &a).unwrap().kind,
            VerdictKind::Infinite
        );
        let g = t(2);
        let a = inner_automorphism(&g, &unit(3, 2)).unwrap();
        assert_eq!(
            classify_solvable(&g, &a).unwrap().kind,
            VerdictKind::Infinite
        );
        assert!(inner_automorphism(&h, &vec![int(0); 3])
            .unwrap()
            .matrix()
            .is_one());
    }

    #[test]
    fn torus_examples() {
        let (v, fix) = torus_classify(&Matrix::from_ints(&[&[2, 1], &[1, 1]])).unwrap();
        assert_eq!(v.kind, VerdictKind::One);
        assert_eq!(fix.order, BigInt::one());
        assert_eq!(v.headline(), "R = 1; Fix trivial (|det(A−I)| = 1)");

        let (v, fix) = torus_classify(&Matrix::from_ints(&[&[1]])).unwrap();
        assert_eq!(v.kind, VerdictKind::Infinite);
        assert_eq!(fix.torus_rank, 1);

        let (v, fix) = torus_classify(&Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(v.kind, VerdictKind::Infinite);
        assert_eq!(
            v.evidence.invariant_factors,
            Some(vec![BigInt::one(), BigInt::zero()])
        );
        assert_eq!((fix.torus_rank, fix.order.clone()), (1, BigInt::one()));

        let (v, fix) = torus_classify(&Matrix::from_ints(&[&[-1, 0], &[0, -1]])).unwrap();
        assert_eq!(v.kind, VerdictKind::One);
        assert_eq!(fix.order, BigInt::from(4));
        assert_eq!(fix.finite_part, vec![BigInt::from(2), BigInt::from(2)]);

        assert!(matches!(
            torus_classify(&Matrix::from_ints(&[&[2, 0], &[0, 1]])),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn odd_codimension_examples() {
        let v = rinfty_oddsolv(&t(2));
        assert_eq!(
            (v.kind, v.reason),
            (VerdictKind::Infinite, Reason::OddCodimSplit)
        );
        assert_eq!(v.evidence.codim, Some(1));

        let v = rinfty_oddsolv(&axb());
        assert_eq!(v.kind, VerdictKind::Infinite);

        let v = rinfty_oddsolv(&rotation());
        assert_eq!(
            (v.kind, v.reason),
            (VerdictKind::Inconclusive, Reason::NotSplit)
        );
        assert_eq!(v.evidence.nilradical_dim, Some(2));

        let v = rinfty_oddsolv(&t(3));
        assert_eq!(
            (v.kind, v.reason),
            (VerdictKind::Inconclusive, Reason::EvenCodim)
        );
        assert_eq!(
            (v.evidence.nilradical_dim, v.evidence.codim),
            (Some(4), Some(2))
        );

        // Over Q(i) the rotation algebra splits, but with imaginary weights.
        let v = rinfty_oddsolv(&rotation().complexify());
        assert_eq!(v.reason, Reason::NotSplit);
    }
}
