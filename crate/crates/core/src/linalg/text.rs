//! Matrix text format: rows separated by `;`, entries by whitespace, e.g.
//! `2 1; 1 1` or `1/2 i; -i 3`.

use num_bigint::BigInt;

use super::matrix::Matrix;
use super::scalar::{BaseField, Scalar};
use crate::error::{Error, Result};

pub fn format_matrix<T: Scalar>(m: &Matrix<T>) -> String {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn parse_matrix_with<T: Scalar>(
    text: &str,
    mut entry: impl FnMut(&str) -> Result<T>,
) -> Result<Matrix<T>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "empty matrix".into(),
        });
    }
    let rows = text
        .split(';')
        .map(|row| {
            row.split_whitespace()
                .map(&mut entry)
                .collect::<Result<Vec<T>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.iter().any(Vec::is_empty) {
        return Err(Error::Parse {
            line: 0,
            message: "empty matrix row".into(),
        });
    }
    Matrix::from_rows(rows).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })
}

/// Matrix over Q or Q(i).
pub fn parse_matrix<F: BaseField>(text: &str) -> Result<Matrix<F>> {
    parse_matrix_with(text, F::parse_scalar)
}

pub fn parse_int_matrix(text: &str) -> Result<Matrix<BigInt>> {
    parse_matrix_with(text, |s| {
        s.parse::<BigInt>().map_err(|_| Error::Parse {
            line: 0,
            message: format!("invalid integer `{s}`"),
        })
    })
}
