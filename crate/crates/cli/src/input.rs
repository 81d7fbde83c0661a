//! Resolving command-line arguments into library values. Every argument
//! that names a file is read before any computation starts.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use reidemeister::catalog;
use reidemeister::finite::{self, FiniteAutomorphism, FiniteGroup};
use reidemeister::lie::{declared_field, format_algebra, parse_algebra, LieAlgebra};
use reidemeister::linalg::{parse_int_matrix, parse_matrix, BaseField, FieldKind, Matrix};

/// Prefix selecting a builtin algebra instead of a file.
pub const CATALOG_PREFIX: &str = "catalog:";

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: unreadable path or conflicting arguments. Exit 2.
    Usage(String),
    /// Input that was read but failed validation. Exit 1.
    Invalid(reidemeister::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl From<reidemeister::Error> for CliError {
    fn from(e: reidemeister::Error) -> Self {
        CliError::Invalid(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn read_file(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))
}

/// Text of an argument that is either a file path or inline content. An
/// existing file wins.
fn file_or_inline(arg: &str) -> CliResult<String> {
    if Path::new(arg).is_file() {
        read_file(arg)
    } else {
        Ok(arg.to_string())
    }
}

/// An algebra argument resolved to its text form plus its declared field.
pub struct AlgebraSource {
    pub text: String,
    pub declared: FieldKind,
}

/// `catalog:NAME` (with `n` for parameterized entries) or a file path.
pub fn algebra_source(arg: &str, n: Option<usize>) -> CliResult<AlgebraSource> {
    match arg.strip_prefix(CATALOG_PREFIX) {
        Some(name) => {
            let entry = catalog::build(name, n)?;
            Ok(AlgebraSource {
                text: format_algebra(&entry.algebra),
                declared: FieldKind::Q,
            })
        }
        None => {
            if n.is_some() {
                return Err(CliError::Usage(
                    "--n applies only to catalog: algebras".into(),
                ));
            }
            if !Path::new(arg).is_file() {
                return Err(CliError::Usage(format!(
                    "`{arg}` is not a file; builtin algebras are named {CATALOG_PREFIX}NAME"
                )));
            }
            let text = read_file(arg)?;
            let declared = declared_field(&text)?;
            Ok(AlgebraSource { text, declared })
        }
    }
}

impl AlgebraSource {
    /// The field to work over: the flag if given, else the declared one.
    pub fn field(&self, flag: Option<FieldKind>) -> FieldKind {
        flag.unwrap_or(self.declared)
    }

    pub fn parse<F: BaseField>(&self) -> CliResult<LieAlgebra<F>> {
        Ok(parse_algebra(&self.text)?)
    }
}

/// Matrix text from a file (one row per line, or `;`-separated) or inline.
fn matrix_text(arg: &str) -> CliResult<String> {
    let text = file_or_inline(arg)?;
    let rows: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(';'))
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .collect();
    Ok(rows.join("; "))
}

pub fn field_matrix<F: BaseField>(arg: &str) -> CliResult<Matrix<F>> {
    Ok(parse_matrix(&matrix_text(arg)?)?)
}

pub fn integer_matrix(arg: &str) -> CliResult<Matrix<BigInt>> {
    Ok(parse_int_matrix(&matrix_text(arg)?)?)
}

/// A builtin spec such as `cyclic(4)`, or a table file.
pub fn group(arg: &str) -> CliResult<FiniteGroup> {
    if Path::new(arg).is_file() {
        Ok(finite::parse_group(&read_file(arg)?)?.with_name(arg))
    } else {
        Ok(finite::parse_builtin(arg)?)
    }
}

fn one_based(g: &FiniteGroup, text: &str) -> CliResult<usize> {
    match text.trim().parse::<usize>() {
        Ok(k) if (1..=g.order()).contains(&k) => Ok(k - 1),
        _ => Err(CliError::Invalid(reidemeister::Error::Parse {
            line: 0,
            message: format!("`{text}` is not an element index in 1..={}", g.order()),
        })),
    }
}

/// `identity`, `inverse` (x ↦ x⁻¹, valid on abelian groups), `inner:K`
/// (conjugation by element `K`), a file, or an inline line of images.
pub fn group_automorphism(g: &FiniteGroup, arg: &str) -> CliResult<FiniteAutomorphism> {
    match arg.trim() {
        "identity" => Ok(FiniteAutomorphism::identity(g)),
        "inverse" => Ok(FiniteAutomorphism::new(
            g,
            (0..g.order()).map(|x| g.inv(x)).collect(),
        )?),
        s => match s.strip_prefix("inner:") {
            Some(k) => Ok(FiniteAutomorphism::inner(g, one_based(g, k)?)),
            None => Ok(finite::parse_automorphism(&file_or_inline(arg)?, g)?),
        },
    }
}

/// `center`, a file, or an inline line of element indices.
pub fn subgroup(g: &FiniteGroup, arg: &str) -> CliResult<Vec<usize>> {
    match arg.trim() {
        "center" => Ok(g.center()),
        _ => Ok(finite::parse_subgroup(&file_or_inline(arg)?, g)?),
    }
}
