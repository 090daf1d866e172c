//! The on-disk matrix format.
//!
//! Header line `q k n` (space-separated integers), then `k` lines of `n`
//! integers in `[0, q)` using the canonical field-element encoding. Lines
//! starting with `#` are comments and may appear anywhere.

use cohyper::code::LinearCode;
use cohyper::construct::field_of_order;
use cohyper::matrix::Matrix;

#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn parse_matrix_file(text: &str) -> Result<(u64, Matrix), ParseError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| ParseError("empty file".into()))?;
    let head: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| ParseError(format!("bad header token: {t}"))))
        .collect::<Result<_, _>>()?;
    let [q, k, n] = head[..] else {
        return Err(ParseError(format!("header must be `q k n`, got: {header}")));
    };
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let line = lines.next().ok_or_else(|| ParseError("missing matrix row".into()))?;
        let row: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| ParseError(format!("bad entry: {t}"))))
            .collect::<Result<_, _>>()?;
        if row.len() != n as usize {
            return Err(ParseError(format!(
                "row has {} entries, header says {n}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= q) {
            return Err(ParseError(format!("entry {bad} is not below q = {q}")));
        }
        rows.push(row);
    }
    if lines.next().is_some() {
        return Err(ParseError("trailing content after the matrix".into()));
    }
    let ctx = field_of_order(q).map_err(|e| ParseError(e.to_string()))?;
    let m = Matrix::from_rows(ctx, &rows).map_err(|e| ParseError(e.to_string()))?;
    Ok((q, m))
}

pub fn render_matrix_file(q: u64, code: &LinearCode, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("{q} {} {}\n", code.k(), code.n()));
    for r in 0..code.k() {
        let row: Vec<String> =
            code.generator().row(r).iter().map(|e| e.0.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
