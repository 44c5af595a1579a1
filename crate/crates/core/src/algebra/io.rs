//! Plain-text code files.
//!
//! ```text
//! # comment
//! 6 2 F4
//! 1 0 w W 0 1
//! 0 1 1 w w 0
//! ```
//!
//! The header is `n k field`; each of the following `k` lines holds `n`
//! symbols from `0 1 w W` (`W` is w²). Whitespace between symbols is
//! ignored and `#` starts a comment line.

use crate::algebra::code::LinearCode;
use crate::algebra::field::{Field, F4};
use crate::algebra::vector::{Vector, MAX_LEN};
use crate::error::{Error, Result};

/// Parses a code file. The declared `k` must match the number of rows; the
/// resulting code is their row space.
pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(Error::Parse { line: hline, msg: "header must be `n k field`".into() });
    }
    let n: usize =
        parts[0].parse().map_err(|_| Error::Parse { line: hline, msg: format!("bad length {:?}", parts[0]) })?;
    let k: usize =
        parts[1].parse().map_err(|_| Error::Parse { line: hline, msg: format!("bad dimension {:?}", parts[1]) })?;
    let field: Field = parts[2].parse().map_err(|msg| Error::Parse { line: hline, msg })?;
    if n > MAX_LEN {
        return Err(Error::Parse { line: hline, msg: format!("length {n} exceeds {MAX_LEN}") });
    }
    if k > n {
        return Err(Error::Parse { line: hline, msg: format!("dimension {k} exceeds length {n}") });
    }

    let mut rows = Vec::with_capacity(k);
    for (line, body) in lines {
        if rows.len() == k {
            return Err(Error::Parse { line, msg: format!("more than {k} generator rows") });
        }
        let mut v = Vector::zeros(n);
        let mut count = 0;
        for c in body.chars().filter(|c| !c.is_whitespace()) {
            let x = F4::from_char(c).ok_or_else(|| Error::Parse { line, msg: format!("invalid symbol {c:?}") })?;
            if field == Field::F2 && !x.in_f2() {
                return Err(Error::Parse { line, msg: format!("symbol {c:?} is not in F2") });
            }
            if count == n {
                return Err(Error::Parse { line, msg: format!("row longer than {n}") });
            }
            v.set(count, x);
            count += 1;
        }
        if count != n {
            return Err(Error::Parse { line, msg: format!("row has {count} symbols, expected {n}") });
        }
        rows.push(v);
    }
    if rows.len() != k {
        return Err(Error::Parse { line: 0, msg: format!("expected {k} rows, found {}", rows.len()) });
    }
    LinearCode::new(field, n, rows)
}

/// Writes a code in the format read by [`parse_code`].
pub fn write_code(code: &LinearCode) -> String {
    let mut out = format!("{} {} {}\n", code.len(), code.dim(), code.field());
    for g in code.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_spaces() {
        let text = "# example\n3 2 F4\n1 w 0\n\n0 1 W\n";
        let c = parse_code(text).unwrap();
        assert_eq!((c.len(), c.dim(), c.field()), (3, 2, Field::F4));
        assert_eq!(parse_code(&write_code(&c)).unwrap(), c);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_code("2 1 F2\n1w\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, msg: "symbol 'w' is not in F2".into() });
        let err = parse_code("3 1 F4\n10\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_code("3 1 F5\n").is_err());
    }

    #[test]
    fn zero_dimension() {
        let c = parse_code("4 0 F4\n").unwrap();
        assert_eq!(c.dim(), 0);
    }
}
