//! Plain-text matrix files: a header line `m n`, then `m` rows of `n` integers.

use std::fmt::Write as _;

use crate::error::{LatticeError, Result};
use crate::matrix::IntMatrix;
use crate::moves::{Move, MoveSet};

fn parse_err(line: usize, msg: impl Into<String>) -> LatticeError {
    LatticeError::Parse { line, msg: msg.into() }
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|e| parse_err(hline, e.to_string())))
        .collect::<Result<_>>()?;
    if dims.len() != 2 {
        return Err(parse_err(hline, "header must be `m n`"));
    }
    let (m, n) = (dims[0], dims[1]);
    let mut rows = Vec::with_capacity(m);
    for (lno, line) in lines {
        let row: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|e| parse_err(lno, e.to_string())))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(parse_err(lno, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(parse_err(hline, format!("expected {m} rows, found {}", rows.len())));
    }
    IntMatrix::from_rows(n, &rows)
}

pub fn format_matrix(m: &IntMatrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

pub fn parse_moves(text: &str) -> Result<MoveSet> {
    let m = parse_matrix(text)?;
    let moves = (0..m.rows())
        .map(|r| Move::from_i64(m.row(r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MoveSet::from_moves(moves))
}

pub fn format_moves(moves: &MoveSet, n: usize) -> String {
    let mut s = format!("{} {}\n", moves.len(), n);
    for mv in moves {
        let row: Vec<String> = mv.as_slice().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "2 3\n1 0 -2\n4 5 6\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(format_matrix(&m), text);
    }

    #[test]
    fn rejects_short_rows() {
        assert!(matches!(parse_matrix("1 3\n1 2\n"), Err(LatticeError::Parse { line: 2, .. })));
    }

    #[test]
    fn moves_file() {
        let s = parse_moves("2 2\n-1 1\n1 -1\n").unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(format_moves(&s, 2), "1 2\n1 -1\n");
    }
}
