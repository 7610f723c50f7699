//! Line-oriented text formats shared by the library and the CLI.
//!
//! * Grid (quasigroups, row-Latin squares): a line `n`, then `n` lines of
//!   `n` space-separated symbols. Lines after the grid are trailers, e.g. the
//!   leader line of a stream key.
//! * N-ary table: a line `n k`, then `n^(k-1)` lines of `n` symbols; the last
//!   argument varies along a line.
//! * Partial Latin square: a line `n`, then one `r c s` triple per line.
//! * Permutations and messages: one line of whitespace-separated integers.
//! * Isotopy: three permutation lines (rows, columns, symbols).
//!
//! Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::qcore::{Isotopy, NAryOperation, NAryQuasigroup, Permutation, Quasigroup};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_symbols(line: &str) -> Result<Vec<usize>> {
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("not a symbol: {t:?}")))
        })
        .collect()
}

pub fn format_symbols(symbols: &[usize]) -> String {
    symbols
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a grid and returns it with the remaining trailer lines.
pub fn parse_grid_with_trailer(text: &str) -> Result<(Vec<Vec<usize>>, Vec<String>)> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty grid".into()))?;
    let n: usize = header.parse().map_err(|_| {
        Error::Parse(format!(
            "expected the order on the first line, found {header:?}"
        ))
    })?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {i}")))?;
        rows.push(parse_symbols(line)?);
    }
    Ok((rows, lines.map(str::to_owned).collect()))
}

pub fn parse_grid(text: &str) -> Result<Vec<Vec<usize>>> {
    let (rows, trailer) = parse_grid_with_trailer(text)?;
    if let Some(extra) = trailer.first() {
        return Err(Error::Parse(format!(
            "unexpected line after grid: {extra:?}"
        )));
    }
    Ok(rows)
}

pub fn format_grid(rows: &[Vec<usize>]) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        out.push_str(&format_symbols(row));
        out.push('\n');
    }
    out
}

pub fn parse_quasigroup(text: &str) -> Result<Quasigroup> {
    Quasigroup::from_rows(&parse_grid(text)?)
}

/// A quasigroup followed by an optional leader line.
pub fn parse_stream_key(text: &str) -> Result<(Quasigroup, Option<usize>)> {
    let (rows, trailer) = parse_grid_with_trailer(text)?;
    let q = Quasigroup::from_rows(&rows)?;
    let leader = match trailer.as_slice() {
        [] => None,
        [line] => match parse_symbols(line)?.as_slice() {
            [l] => Some(*l),
            _ => {
                return Err(Error::Parse(format!(
                    "leader line must hold one symbol: {line:?}"
                )))
            }
        },
        _ => return Err(Error::Parse("more than one line after the grid".into())),
    };
    Ok((q, leader))
}

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    Permutation::new(parse_symbols(text)?)
}

/// An n-ary operation table; no quasigroup property is required.
pub fn parse_nary_operation(text: &str) -> Result<NAryOperation> {
    let mut lines = content_lines(text);
    let header = parse_symbols(
        lines
            .next()
            .ok_or_else(|| Error::Parse("empty table".into()))?,
    )?;
    let [n, k] = header[..] else {
        return Err(Error::Parse("expected `n k` on the first line".into()));
    };
    if k < 2 {
        return Err(Error::Parse("arity must be at least 2".into()));
    }
    let mut values = Vec::new();
    for line in lines {
        values.extend(parse_symbols(line)?);
    }
    NAryOperation::new(k, n, values)
}

pub fn parse_nary(text: &str) -> Result<NAryQuasigroup> {
    NAryQuasigroup::new(parse_nary_operation(text)?)
}

/// Three permutation lines: rows, columns, symbols.
pub fn parse_isotopy(text: &str) -> Result<Isotopy> {
    let perms = content_lines(text)
        .map(parse_permutation)
        .collect::<Result<Vec<_>>>()?;
    match <[Permutation; 3]>::try_from(perms) {
        Ok([rows, cols, syms]) => Isotopy::new(rows, cols, syms),
        Err(v) => Err(Error::Parse(format!(
            "an isotopy needs 3 permutation lines, found {}",
            v.len()
        ))),
    }
}

pub fn format_isotopy(iso: &Isotopy) -> String {
    [iso.rows(), iso.cols(), iso.syms()]
        .iter()
        .map(|p| format_symbols(p.images()) + "\n")
        .collect()
}

pub fn format_nary(q: &NAryQuasigroup) -> String {
    use crate::qcore::OperationTable;
    let n = q.order();
    let mut out = format!("{} {}\n", n, q.arity());
    for chunk in q.values().chunks(n) {
        out.push_str(&format_symbols(chunk));
        out.push('\n');
    }
    out
}

/// Parses the partial-square format into its order and `(row, col, symbol)` triples.
pub fn parse_partial(text: &str) -> Result<(usize, Vec<(usize, usize, usize)>)> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty partial square".into()))?;
    let n = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad order line {header:?}")))?;
    let entries = lines
        .map(|line| match parse_symbols(line)?.as_slice() {
            [r, c, s] => Ok((*r, *c, *s)),
            _ => Err(Error::Parse(format!("expected `r c s`, found {line:?}"))),
        })
        .collect::<Result<_>>()?;
    Ok((n, entries))
}

pub fn format_partial(n: usize, entries: &[(usize, usize, usize)]) -> String {
    let mut out = format!("{n}\n");
    for (r, c, s) in entries {
        out.push_str(&format!("{r} {c} {s}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grid_round_trip_and_trailer() {
        let text = "3\n1 2 0\n2 0 1\n0 1 2\n";
        let q = parse_quasigroup(text).unwrap();
        assert_eq!(q.to_string(), text);
        let (k, leader) = parse_stream_key(&format!("# key\n{text}\n0\n")).unwrap();
        assert_eq!((k, leader), (q, Some(0)));
        assert!(parse_grid(&format!("{text}0\n")).is_err());
        assert!(parse_grid("3\n1 2 0\n").is_err());
    }

    #[test]
    fn partial_format() {
        let (n, e) = parse_partial("3\n0 0 0\n1 1 2\n").unwrap();
        assert_eq!((n, e.clone()), (3, vec![(0, 0, 0), (1, 1, 2)]));
        assert_eq!(format_partial(n, &e), "3\n0 0 0\n1 1 2\n");
        assert!(parse_partial("3\n0 0\n").is_err());
    }

    #[test]
    fn nary_format() {
        let b = NAryQuasigroup::from_fn(3, 2, |a| (a[0] + a[1] + a[2]) % 2).unwrap();
        assert_eq!(parse_nary(&format_nary(&b)).unwrap(), b);
        // not a quasigroup, still an operation
        let op = parse_nary_operation("2 2\n0 0\n0 1\n").unwrap();
        assert_eq!(op.get(&[1, 1]), 1);
        assert!(parse_nary("2 2\n0 0\n0 1\n").is_err());
    }

    #[test]
    fn isotopy_format() {
        let iso = Isotopy::new(
            Permutation::new(vec![1, 0, 2]).unwrap(),
            Permutation::identity(3),
            Permutation::new(vec![2, 0, 1]).unwrap(),
        )
        .unwrap();
        let text = format_isotopy(&iso);
        assert_eq!(text, "1 0 2\n0 1 2\n2 0 1\n");
        assert_eq!(parse_isotopy(&text).unwrap(), iso);
        assert!(parse_isotopy("0 1\n1 0\n").is_err());
    }

    proptest! {
        #[test]
        fn symbols_round_trip(v in proptest::collection::vec(0usize..1000, 0..50)) {
            prop_assert_eq!(parse_symbols(&format_symbols(&v)).unwrap(), v);
        }
    }
}
