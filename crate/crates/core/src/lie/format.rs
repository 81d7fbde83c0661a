//! Line-based algebra file format.
//!
//! ```text
//! # the ax+b algebra
//! algebra axb
//! field Q
//! dim 2
//! basis t x
//! [1,2] = e2
//! ```
//!
//! Bracket right-hand sides are sums of `c*eK`, `eK`, or `c*name` terms,
//! where `name` is a basis label. Gaussian coefficients with both parts are
//! parenthesized: `(1+i)*e2`. Unlisted brackets are zero.

use super::algebra::{format_combination, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{BaseField, FieldKind};

/// Raw, unvalidated contents of an algebra file.
#[derive(Clone, Debug, PartialEq)]
struct Header {
    name: Option<String>,
    field: Option<FieldKind>,
    dim: Option<usize>,
    basis: Option<Vec<String>>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with 1-based line numbers, comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

/// The field declared by a file (`Q` if absent).
pub fn declared_field(text: &str) -> Result<FieldKind> {
    for (line, content) in content_lines(text) {
        if let Some(rest) = content.strip_prefix("field ") {
            return rest
                .trim()
                .parse()
                .map_err(|e: Error| parse_error(line, strip_line(&e)));
        }
    }
    Ok(FieldKind::Q)
}

fn strip_line(e: &Error) -> String {
    match e {
        Error::Parse { message, .. } => message.clone(),
        other => other.to_string(),
    }
}

/// Parses an algebra over `F`. A file declaring `Q` may be read over
/// `Q(i)`; a file declaring `Qi` cannot be read over `Q`.
pub fn parse_algebra<F: BaseField>(text: &str) -> Result<LieAlgebra<F>> {
    let mut header = Header {
        name: None,
        field: None,
        dim: None,
        basis: None,
    };
    let mut brackets: Vec<(usize, usize, usize, Vec<F>)> = Vec::new();
    for (line, content) in content_lines(text) {
        if content.starts_with('[') {
            let dim = header
                .dim
                .ok_or_else(|| parse_error(line, "bracket before `dim`"))?;
            let (i, j, v) = parse_bracket_line::<F>(line, content, dim, header.basis.as_deref())?;
            brackets.push((line, i, j, v));
            continue;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((content, ""));
        match keyword {
            "algebra" if !rest.is_empty() => header.name = Some(rest.to_string()),
            "field" => {
                let kind: FieldKind = rest
                    .parse()
                    .map_err(|e: Error| parse_error(line, strip_line(&e)))?;
                if kind == FieldKind::Qi && F::KIND == FieldKind::Q {
                    return Err(parse_error(line, "algebra over Qi cannot be read over Q"));
                }
                header.field = Some(kind);
            }
            "dim" => {
                if header.dim.is_some() {
                    return Err(parse_error(line, "`dim` given twice"));
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| parse_error(line, format!("invalid dimension `{rest}`")))?;
                if n == 0 {
                    return Err(parse_error(line, "dimension must be at least 1"));
                }
                header.dim = Some(n);
            }
            "basis" => {
                let dim = header
                    .dim
                    .ok_or_else(|| parse_error(line, "`basis` before `dim`"))?;
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.len() != dim {
                    return Err(parse_error(
                        line,
                        format!("{} basis names for dimension {dim}", names.len()),
                    ));
                }
                if let Some(bad) = names.iter().find(|s| !valid_name(s)) {
                    return Err(parse_error(line, format!("invalid basis name `{bad}`")));
                }
                if let Some((k, bad)) = names
                    .iter()
                    .enumerate()
                    .find(|(k, s)| !standard_name_in_place(s, *k))
                {
                    return Err(parse_error(
                        line,
                        format!(
                            "basis name `{bad}` clashes with the standard name of basis vector {}",
                            k + 1
                        ),
                    ));
                }
                header.basis = Some(names);
            }
            _ => return Err(parse_error(line, format!("unrecognized line `{content}`"))),
        }
    }
    let dim = header.dim.ok_or_else(|| parse_error(0, "missing `dim`"))?;
    let mut seen = std::collections::HashMap::new();
    for (line, i, j, _) in &brackets {
        let key = (*i.min(j), *i.max(j));
        if let Some(prev) = seen.insert(key, *line) {
            return Err(parse_error(
                *line,
                format!(
                    "bracket [{},{}] already given on line {prev}",
                    key.0 + 1,
                    key.1 + 1
                ),
            ));
        }
    }
    let mut g = LieAlgebra::new(dim, brackets.into_iter().map(|(_, i, j, v)| (i, j, v)))?;
    if let Some(name) = header.name {
        g = g.with_name(name);
    }
    if let Some(names) = header.basis {
        g = g.with_basis_names(names)?;
    }
    Ok(g)
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && s.chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
        && s != "i"
}

/// A name of the form `eK` must sit at position `K`, since bracket lines
/// may refer to basis vectors either by name or as `eK`.
fn standard_name_in_place(s: &str, position: usize) -> bool {
    match s.strip_prefix('e') {
        Some(d) if !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()) => {
            d == (position + 1).to_string()
        }
        _ => true,
    }
}

fn usable_names(names: &[String]) -> bool {
    names
        .iter()
        .enumerate()
        .all(|(k, s)| valid_name(s) && standard_name_in_place(s, k))
}

fn parse_bracket_line<F: BaseField>(
    line: usize,
    content: &str,
    dim: usize,
    names: Option<&[String]>,
) -> Result<(usize, usize, Vec<F>)> {
    let (lhs, rhs) = content
        .split_once('=')
        .ok_or_else(|| parse_error(line, "expected `[i,j] = ...`"))?;
    let inner = lhs
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| parse_error(line, "malformed bracket `[i,j]`"))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| parse_error(line, "malformed bracket `[i,j]`"))?;
    let index = |s: &str| -> Result<usize> {
        let s = s.trim();
        if let Ok(k) = s.parse::<usize>() {
            if (1..=dim).contains(&k) {
                return Ok(k - 1);
            }
            return Err(parse_error(line, format!("index {k} outside 1..={dim}")));
        }
        resolve_basis(s, dim, names)
            .ok_or_else(|| parse_error(line, format!("unknown basis element `{s}`")))
    };
    let (i, j) = (index(a)?, index(b)?);
    if i == j {
        return Err(parse_error(line, "bracket of an element with itself"));
    }
    let v = parse_combination::<F>(line, rhs, dim, names)?;
    Ok((i, j, v))
}

/// `eK` (1-based) or a declared basis label.
fn resolve_basis(s: &str, dim: usize, names: Option<&[String]>) -> Option<usize> {
    if let Some(k) = names.and_then(|ns| ns.iter().position(|n| n == s)) {
        return Some(k);
    }
    let k: usize = s.strip_prefix('e')?.parse().ok()?;
    (1..=dim).contains(&k).then(|| k - 1)
}

fn parse_combination<F: BaseField>(
    line: usize,
    rhs: &str,
    dim: usize,
    names: Option<&[String]>,
) -> Result<Vec<F>> {
    let text: String = rhs.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(parse_error(line, "empty right-hand side"));
    }
    let mut v = vec![F::zero(); dim];
    if text == "0" {
        return Ok(v);
    }
    // Split into signed terms at top-level + and -.
    let mut terms: Vec<&str> = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && k > start => {
                terms.push(&text[start..k]);
                start = k;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(parse_error(line, "unbalanced parentheses"));
        }
    }
    if depth != 0 {
        return Err(parse_error(line, "unbalanced parentheses"));
    }
    terms.push(&text[start..]);
    for term in terms {
        let (negative, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        let (coeff, element) = match body.rsplit_once('*') {
            Some((c, e)) => {
                let c = c
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .unwrap_or(c);
                let value = F::parse_scalar(c)
                    .map_err(|_| parse_error(line, format!("invalid coefficient `{c}`")))?;
                (value, e)
            }
            None => (F::one(), body),
        };
        let k = resolve_basis(element, dim, names)
            .ok_or_else(|| parse_error(line, format!("unknown basis element `{element}`")))?;
        let coeff = if negative { -coeff } else { coeff };
        v[k] = v[k].clone() + coeff;
    }
    Ok(v)
}

/// Canonical text form; [`parse_algebra`] reads it back exactly.
pub fn format_algebra<F: BaseField>(g: &LieAlgebra<F>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "algebra {}\n",
        g.name().replace(char::is_whitespace, "_")
    ));
    out.push_str(&format!("field {}\n", F::KIND));
    out.push_str(&format!("dim {}\n", g.dim()));
    let standard: Vec<String> = (1..=g.dim()).map(|k| format!("e{k}")).collect();
    let custom = g.basis_names() != standard.as_slice()
        && usable_names(g.basis_names())
        && distinct(g.basis_names());
    if custom {
        out.push_str(&format!("basis {}\n", g.basis_names().join(" ")));
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let v = g.bracket_basis(i, j);
            if v.iter().all(|c| c.is_zero()) {
                continue;
            }
            out.push_str(&format!(
                "[{},{}] = {}\n",
                i + 1,
                j + 1,
                format_combination(&v, &standard)
            ));
        }
    }
    out
}

fn distinct(names: &[String]) -> bool {
    let set: std::collections::HashSet<&String> = names.iter().collect();
    set.len() == names.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, GaussRational, Rational};

    #[test]
    fn parses_with_names_and_comments() {
        let text = "# walnut\nalgebra walnut\nfield Q\ndim 4\nbasis t x y z\n\
                    [t,x] = y\n[1,3] = -x   # rotation\n[x,y] = z\n";
        let g: LieAlgebra<Rational> = parse_algebra(text).unwrap();
        assert_eq!(g.name(), "walnut");
        assert_eq!(g.bracket_basis(0, 2), vec![int(0), int(-1), int(0), int(0)]);
        assert_eq!(g.bracket_basis(1, 2), vec![int(0), int(0), int(0), int(1)]);
        let back: LieAlgebra<Rational> = parse_algebra(&format_algebra(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn gaussian_coefficients() {
        let text = "field Qi\ndim 2\n[1,2] = (1+i)*e2";
        let g: LieAlgebra<GaussRational> = parse_algebra(text).unwrap();
        assert_eq!(g.bracket_basis(0, 1)[1], GaussRational::new(int(1), int(1)));
        assert!(parse_algebra::<Rational>(text).is_err());
        let back: LieAlgebra<GaussRational> = parse_algebra(&format_algebra(&g)).unwrap();
        assert_eq!(back, g);
        let g: LieAlgebra<GaussRational> =
            parse_algebra("field Qi\ndim 2\n[1,2] = 2i*e2 - i*e1").unwrap();
        assert_eq!(
            g.bracket_basis(0, 1),
            vec![
                GaussRational::new(int(0), int(-1)),
                GaussRational::new(int(0), int(2))
            ]
        );
        assert_eq!(declared_field(text).unwrap(), FieldKind::Qi);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("dim 2\n[1,3] = e1", 2),
            ("dim 2\n\n[1,2] = 3*q", 3),
            ("[1,2] = e1\ndim 2", 1),
            ("dim 2\nbasis a", 2),
            ("dim x", 1),
            ("dim 2\n[1,2] = e2\n[2,1] = e2", 3),
            ("dim 2\nfoo", 2),
            ("dim 2\n[1,2] = (1/2*e2", 2),
            ("field R", 1),
            ("dim 2\nbasis e2 e1", 2),
        ];
        for (text, line) in cases {
            match parse_algebra::<Rational>(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(parse_algebra::<Rational>("dim 2\nbasis e1 x\n[e1,x] = x").is_ok());
        assert!(matches!(
            parse_algebra::<Rational>("dim 3\n[1,2] = e3\n[1,3] = e1"),
            Err(Error::JacobiViolation { .. })
        ));
    }
}
