//! Named Lie algebras with their known Reidemeister behavior, used as
//! regression fixtures, plus the symbolic `SL(2)` twisted-conjugacy check.

mod algebras;
mod families;
pub mod sl2;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub use algebras::{
    axb, heisenberg, rotation_extension, scalar_extension, scalar_line, sl2 as sl2_algebra,
    strictly_upper_triangular, upper_triangular, upper_triangular_mod_center, walnut,
};
pub use families::rotation_normalizer;
pub use sl2::{sl2_twisted_product, verify_sl2_intersection, SymbolicMatrix2};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational, Scalar};
use crate::reidemeister::{Reason, VerdictKind};

/// Catalog keys, in listing order. Keys marked by [`takes_parameter`] need
/// an `n`.
pub const NAMES: &[&str] = &[
    "t",
    "t/z",
    "u",
    "heisenberg",
    "axb",
    "H",
    "so2_r2",
    "walnut",
    "sl2",
];

/// Number of pseudo-random sample automorphisms stored per entry.
pub const SAMPLES_PER_ENTRY: usize = 6;

/// Which family an entry belongs to, with its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    UpperTriangular(usize),
    UpperTriangularModCenter(usize),
    StrictlyUpper(usize),
    Heisenberg,
    Axb,
    ScalarExtension(usize),
    RotationExtension,
    Walnut,
    Sl2,
}

/// An automorphism matrix with the verdict its family predicts; `None`
/// when the algebra is not solvable and the classifier must refuse.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleAutomorphism {
    pub label: String,
    pub matrix: Matrix<Rational>,
    pub expected: Option<VerdictKind>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Display name, such as `t(4)`.
    pub name: String,
    pub key: &'static str,
    pub param: Option<usize>,
    pub family: Family,
    pub algebra: LieAlgebra<Rational>,
    pub expected_solvable: bool,
    pub expected_nilpotent: bool,
    /// Closed-form nilradical dimension; `None` for non-solvable entries.
    pub expected_nilradical_dim: Option<usize>,
    pub odd_codim_expected: (VerdictKind, Reason),
    /// Known group-level answer with its source result.
    pub known_verdict: &'static str,
    pub sample_automorphisms: Vec<SampleAutomorphism>,
}

pub fn takes_parameter(key: &str) -> bool {
    matches!(key, "t" | "t/z" | "u" | "H")
}

/// Admissible parameter range for a key.
pub fn parameter_range(key: &str) -> Option<std::ops::RangeInclusive<usize>> {
    match key {
        "t" | "t/z" | "u" => Some(2..=6),
        "H" => Some(1..=6),
        _ => None,
    }
}

/// Splits `t(4)` into `("t", Some(4))`; plain keys pass through.
pub fn parse_name(spec: &str) -> Result<(String, Option<usize>)> {
    let spec = spec.trim();
    match spec.strip_suffix(')').and_then(|s| s.split_once('(')) {
        Some((key, n)) => {
            let n = n.trim().parse().map_err(|_| {
                Error::BadParameter(format!("parameter in `{spec}` is not a number"))
            })?;
            Ok((key.trim().to_string(), Some(n)))
        }
        // `t(4)/z` is the conventional spelling of `t/z` with n = 4.
        None => match spec.split_once('(') {
            Some((key, rest)) if rest.ends_with(")/z") => {
                let n = rest.trim_end_matches(")/z").trim().parse().map_err(|_| {
                    Error::BadParameter(format!("parameter in `{spec}` is not a number"))
                })?;
                if key.trim() != "t" {
                    return Err(Error::UnknownEntry(spec.to_string()));
                }
                Ok(("t/z".to_string(), Some(n)))
            }
            _ => Ok((spec.to_string(), None)),
        },
    }
}

/// Builds a catalog entry. `name` is a key from [`NAMES`] or a
/// parameterized spelling such as `t(4)`; an inline parameter and `n`
/// must agree if both are given.
pub fn build(name: &str, n: Option<usize>) -> Result<CatalogEntry> {
    let (key, inline) = parse_name(name)?;
    let key = NAMES
        .iter()
        .copied()
        .find(|k| *k == key)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    let n = match (inline, n) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::BadParameter(format!(
                "`{name}` conflicts with n = {b}"
            )));
        }
        (a, b) => a.or(b),
    };
    let n = match (parameter_range(key), n) {
        (Some(range), Some(n)) if range.contains(&n) => Some(n),
        (Some(range), Some(n)) => {
            return Err(Error::BadParameter(format!(
                "{key} needs n in {}..={}, got {n}",
                range.start(),
                range.end()
            )));
        }
        (Some(range), None) => {
            return Err(Error::BadParameter(format!(
                "{key} needs a parameter n in {}..={}",
                range.start(),
                range.end()
            )));
        }
        (None, Some(_)) => return Err(Error::BadParameter(format!("{key} takes no parameter"))),
        (None, None) => None,
    };
    let p = n.unwrap_or(0);
    let even = p % 2 == 0;
    let split_odd = |odd: bool| {
        if odd {
            (VerdictKind::Infinite, Reason::OddCodimSplit)
        } else {
            (VerdictKind::Inconclusive, Reason::EvenCodim)
        }
    };
    // (family, algebra, solvable, nilpotent, nilradical dim, odd-codimension verdict, known verdict)
    let (family, algebra, solvable, nilpotent, nil_dim, odd_codim, verdict) = match key {
        "t" => (
            Family::UpperTriangular(p),
            upper_triangular(p)?,
            true,
            false,
            Some(1 + p * (p - 1) / 2),
            split_odd(even),
            "R∞ for every n ≥ 2 (upper triangular group)",
        ),
        "t/z" => (
            Family::UpperTriangularModCenter(p),
            upper_triangular_mod_center(p)?,
            true,
            false,
            Some(p * (p - 1) / 2),
            split_odd(even),
            "R∞ (upper triangular group modulo its center)",
        ),
        "u" => (
            Family::StrictlyUpper(p),
            strictly_upper_triangular(p)?,
            true,
            true,
            Some(p * (p - 1) / 2),
            split_odd(false),
            "no R∞ (unipotent group; automorphisms with R = 1 exist)",
        ),
        "heisenberg" => (
            Family::Heisenberg,
            heisenberg()?,
            true,
            true,
            Some(3),
            split_odd(false),
            "no R∞ (nilpotent; automorphisms with R = 1 exist)",
        ),
        "axb" => (
            Family::Axb,
            axb()?,
            true,
            false,
            Some(1),
            split_odd(true),
            "R∞ (ax+b group)",
        ),
        "H" => (
            Family::ScalarExtension(p),
            scalar_extension(p)?,
            true,
            false,
            Some(p),
            split_odd(true),
            "R∞ for every n (R ⋉ R^n with scalar action)",
        ),
        "so2_r2" => (
            Family::RotationExtension,
            rotation_extension()?,
            true,
            false,
            Some(2),
            (VerdictKind::Inconclusive, Reason::NotSplit),
            "no R∞ (normalizer automorphisms without eigenvalue 1 have R = 1)",
        ),
        "walnut" => (
            Family::Walnut,
            walnut()?,
            true,
            false,
            Some(3),
            (VerdictKind::Inconclusive, Reason::NotSplit),
            "R∞ (walnut group; global argument via its compact center)",
        ),
        "sl2" => (
            Family::Sl2,
            sl2_algebra()?,
            false,
            false,
            None,
            (VerdictKind::Inconclusive, Reason::NotSolvable),
            "R∞ for SL(2, R) (twisted classes of unipotents are distinct)",
        ),
        _ => unreachable!("key drawn from NAMES"),
    };
    let display = match (key, n) {
        ("t/z", Some(n)) => format!("t({n})/z"),
        (_, Some(n)) => format!("{key}({n})"),
        _ => key.to_string(),
    };
    let mut entry = CatalogEntry {
        name: display,
        key,
        param: n,
        family,
        algebra,
        expected_solvable: solvable,
        expected_nilpotent: nilpotent,
        expected_nilradical_dim: nil_dim,
        odd_codim_expected: odd_codim,
        known_verdict: verdict,
        sample_automorphisms: Vec::new(),
    };
    let mut rng = StdRng::seed_from_u64(seed_for(&entry.name));
    let mut samples = fixed_samples(family);
    samples.extend((0..SAMPLES_PER_ENTRY).map(|_| random_automorphism(&entry, &mut rng)));
    entry.sample_automorphisms = samples;
    Ok(entry)
}

/// Every entry with every admissible parameter.
pub fn all_entries() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for key in NAMES {
        match parameter_range(key) {
            Some(range) => {
                for n in range {
                    out.push(build(key, Some(n))?);
                }
            }
            None => out.push(build(key, None)?),
        }
    }
    Ok(out)
}

/// FNV-1a of the display name, so samples are reproducible per entry.
fn seed_for(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Hand-picked automorphisms with known verdicts.
fn fixed_samples(family: Family) -> Vec<SampleAutomorphism> {
    let sample = |label: &str, matrix, expected| SampleAutomorphism {
        label: label.to_string(),
        matrix,
        expected: Some(expected),
    };
    match family {
        Family::Heisenberg => vec![
            sample(
                "diag(2, 3, 6)",
                Matrix::diagonal(&[q(2), q(3), q(6)]),
                VerdictKind::One,
            ),
            sample(
                "x ↦ 2y, y ↦ x, z ↦ −2z",
                Matrix::from_ints(&[&[0, 1, 0], &[2, 0, 0], &[0, 0, -2]]),
                VerdictKind::One,
            ),
            sample(
                "swap, z ↦ −z",
                Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]),
                VerdictKind::Infinite,
            ),
        ],
        Family::RotationExtension => vec![
            sample(
                "2·diag(1, −1), t ↦ −t",
                rotation_normalizer(&q(2), false),
                VerdictKind::One,
            ),
            sample(
                "(3/2)·antidiagonal, t ↦ −t",
                rotation_normalizer(&Rational::new(3.into(), 2.into()), true),
                VerdictKind::One,
            ),
            sample(
                "−1·antidiagonal, t ↦ −t",
                rotation_normalizer(&q(-1), true),
                VerdictKind::Infinite,
            ),
        ],
        Family::Axb => vec![sample(
            "[[1, 0], [3, 2]]",
            Matrix::from_ints(&[&[1, 0], &[3, 2]]),
            VerdictKind::Infinite,
        )],
        _ => Vec::new(),
    }
}

/// Draws one automorphism of the entry's algebra from its family, composed
/// half the time with `exp(ad x)` for a random nilradical element `x`
/// (which does not change the verdict).
pub fn random_automorphism<R: Rng>(entry: &CatalogEntry, rng: &mut R) -> SampleAutomorphism {
    let mut s = families::sample(entry.family, &entry.algebra, rng);
    if entry.expected_solvable && rng.gen_bool(0.5) {
        let nil = entry
            .algebra
            .nilradical()
            .expect("solvable entries have a nilradical");
        s.matrix = families::with_inner(&entry.algebra, nil.basis(), &s.matrix, rng);
        s.label.push_str(" ∘ inner");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::AutomorphismMatrix;
    use crate::reidemeister::{classify_solvable, rinfty_oddsolv};
    use crate::Error;

    #[test]
    fn parse_names() {
        assert_eq!(parse_name("t(4)").unwrap(), ("t".to_string(), Some(4)));
        assert_eq!(parse_name("t(3)/z").unwrap(), ("t/z".to_string(), Some(3)));
        assert_eq!(parse_name("walnut").unwrap(), ("walnut".to_string(), None));
        assert!(parse_name("t(x)").is_err());
    }

    #[test]
    fn build_errors() {
        assert!(matches!(build("nope", None), Err(Error::UnknownEntry(_))));
        assert!(matches!(build("t", None), Err(Error::BadParameter(_))));
        assert!(matches!(build("t", Some(7)), Err(Error::BadParameter(_))));
        assert!(matches!(build("t", Some(1)), Err(Error::BadParameter(_))));
        assert!(matches!(build("axb", Some(2)), Err(Error::BadParameter(_))));
        assert!(matches!(
            build("t(3)", Some(4)),
            Err(Error::BadParameter(_))
        ));
        assert_eq!(build("t(3)", Some(3)).unwrap().name, "t(3)");
    }

    #[test]
    fn t2_entry() {
        let e = build("t", Some(2)).unwrap();
        assert_eq!(e.algebra.dim(), 3);
        assert!(e.algebra.is_solvable() && !e.algebra.is_nilpotent());
        assert_eq!(e.expected_nilradical_dim, Some(2));
        assert_eq!(e.odd_codim_expected.0, VerdictKind::Infinite);
    }

    #[test]
    fn structure_matches_closed_forms() {
        for e in all_entries().unwrap() {
            assert_eq!(e.algebra.is_solvable(), e.expected_solvable, "{}", e.name);
            assert_eq!(e.algebra.is_nilpotent(), e.expected_nilpotent, "{}", e.name);
            let nil = e.algebra.nilradical().ok().map(|s| s.dim());
            assert_eq!(nil, e.expected_nilradical_dim, "{}", e.name);
            let v = rinfty_oddsolv(&e.algebra);
            assert_eq!((v.kind, v.reason), e.odd_codim_expected, "{}", e.name);
        }
    }

    #[test]
    fn samples_validate_and_match() {
        for e in all_entries().unwrap() {
            if e.algebra.dim() > 10 {
                continue;
            }
            for s in &e.sample_automorphisms {
                let a = AutomorphismMatrix::new(&e.algebra, s.matrix.clone())
                    .unwrap_or_else(|err| panic!("{} {}: {err}", e.name, s.label));
                match s.expected {
                    Some(kind) => {
                        let v = classify_solvable(&e.algebra, &a).unwrap();
                        assert_eq!(v.kind, kind, "{} {}", e.name, s.label);
                    }
                    None => assert!(matches!(
                        classify_solvable(&e.algebra, &a),
                        Err(Error::NotSolvable)
                    )),
                }
            }
        }
    }

    #[test]
    fn samples_are_deterministic() {
        let a = build("u", Some(4)).unwrap();
        let b = build("u", Some(4)).unwrap();
        assert_eq!(a.sample_automorphisms, b.sample_automorphisms);
    }
}
