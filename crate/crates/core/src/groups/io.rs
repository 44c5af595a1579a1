//! Text format for Cayley tables: an `order n` header followed by `n` rows of
//! `n` space-separated element indices. Blank lines and `#` comments are
//! ignored.

use crate::error::{Error, Result};
use crate::groups::group::FiniteGroup;

pub fn parse_group(name: &str, text: &str) -> Result<FiniteGroup> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing `order n` header".into() })?;
    let order: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["order", n] => n.parse().map_err(|_| Error::Parse { line: hline, msg: format!("bad order `{n}`") })?,
        _ => return Err(Error::Parse { line: hline, msg: "expected `order n`".into() }),
    };
    let mut table = Vec::with_capacity(order * order);
    let mut rows = 0;
    for (line, l) in lines {
        if rows == order {
            return Err(Error::Parse { line, msg: format!("more than {order} rows") });
        }
        let row = l
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        if row.len() != order {
            return Err(Error::Parse { line, msg: format!("expected {order} entries, found {}", row.len()) });
        }
        table.extend(row);
        rows += 1;
    }
    if rows != order {
        return Err(Error::Parse { line: hline, msg: format!("expected {order} rows, found {rows}") });
    }
    FiniteGroup::from_table(name, order, table)
}

pub fn write_group(g: &FiniteGroup) -> String {
    let n = g.order();
    let table = g.table();
    let mut out = format!("# {}\norder {n}\n", g.name());
    for row in table.chunks(n) {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
