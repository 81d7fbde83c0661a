//! Text formats: a group is `order N` followed by `N` rows of `N` 1-based
//! indices (row `x` lists the products `x·y`); an automorphism or subgroup
//! is one line of 1-based indices. Blank lines and `#` comments are ignored.

use super::automorphism::FiniteAutomorphism;
use super::group::FiniteGroup;
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((k + 1, l))
    })
}

fn parse_indices(line: usize, content: &str, n: Option<usize>) -> Result<Vec<usize>> {
    content
        .split_whitespace()
        .map(|tok| {
            let k: usize = tok
                .parse()
                .map_err(|_| parse_error(line, format!("`{tok}` is not a positive integer")))?;
            match n {
                _ if k == 0 => Err(parse_error(line, "indices are 1-based")),
                Some(n) if k > n => Err(parse_error(line, format!("index {k} exceeds order {n}"))),
                _ => Ok(k - 1),
            }
        })
        .collect()
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_error(0, "empty input"))?;
    let n: usize = header
        .strip_prefix("order")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_error(line, "expected `order N`"))?;
    if n == 0 || n > super::group::MAX_ORDER {
        return Err(parse_error(
            line,
            format!("order must be in 1..={}", super::group::MAX_ORDER),
        ));
    }
    let mut table = Vec::with_capacity(n);
    let mut last = line;
    for (line, content) in lines {
        if table.len() == n {
            return Err(parse_error(line, "more table rows than the order"));
        }
        let row = parse_indices(line, content, Some(n))?;
        if row.len() != n {
            return Err(parse_error(
                line,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        table.push(row);
        last = line;
    }
    if table.len() < n {
        return Err(parse_error(
            last,
            format!("{} table rows, expected {n}", table.len()),
        ));
    }
    FiniteGroup::from_table(table)
}

pub fn format_group(g: &FiniteGroup) -> String {
    let mut out = format!("order {}\n", g.order());
    for row in g.table() {
        let cells: Vec<String> = row.iter().map(|x| (x + 1).to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// One line of `N` images.
pub fn parse_automorphism(text: &str, g: &FiniteGroup) -> Result<FiniteAutomorphism> {
    let mut lines = content_lines(text);
    let (line, content) = lines
        .next()
        .ok_or_else(|| parse_error(0, "empty automorphism"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_error(extra, "automorphism must be a single line"));
    }
    FiniteAutomorphism::new(g, parse_indices(line, content, Some(g.order()))?)
}

pub fn format_automorphism(a: &FiniteAutomorphism) -> String {
    let cells: Vec<String> = a.perm().iter().map(|x| (x + 1).to_string()).collect();
    format!("{}\n", cells.join(" "))
}

/// One line of element indices forming a subgroup; returned sorted.
pub fn parse_subgroup(text: &str, g: &FiniteGroup) -> Result<Vec<usize>> {
    let mut lines = content_lines(text);
    let (line, content) = lines
        .next()
        .ok_or_else(|| parse_error(0, "empty subgroup"))?;
    g.subgroup(&parse_indices(line, content, Some(g.order()))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::builtins::{cyclic, s3};

    #[test]
    fn round_trip() {
        for g in [s3(), cyclic(5).unwrap()] {
            let back = parse_group(&format_group(&g)).unwrap();
            assert_eq!(back.table(), g.table());
        }
        let g = s3();
        let a = FiniteAutomorphism::inner(&g, 1);
        assert_eq!(parse_automorphism(&format_automorphism(&a), &g).unwrap(), a);
    }

    #[test]
    fn z2_from_text() {
        let g = parse_group("# Z2\norder 2\n1 2\n2 1\n").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(parse_subgroup("1", &g).unwrap(), vec![0]);
        assert!(matches!(parse_subgroup("2", &g), Err(Error::NotSubgroup)));
    }

    #[test]
    fn errors() {
        let cases = [
            ("order x", 1),
            ("order 2\n1 2", 2),
            ("order 2\n1 2\n2", 3),
            ("order 2\n1 2\n2 3", 3),
            ("order 2\n1 2\n2 0", 3),
            ("order 2\n1 2\n2 1\n1 2", 4),
            ("", 0),
        ];
        for (text, line) in cases {
            match parse_group(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_group("order 2\n1 2\n2 2"),
            Err(Error::InvalidGroup(_))
        ));
        let g = cyclic(3).unwrap();
        assert!(matches!(
            parse_automorphism("1 1 2", &g),
            Err(Error::InvalidAutomorphism(_))
        ));
        assert!(matches!(
            parse_automorphism("1 2 3\n1 2 3", &g),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
