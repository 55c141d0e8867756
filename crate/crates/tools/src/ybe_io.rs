//! The `YBE v1` text format: a header line `YBE v1 N=<N>`, `N` rows of
//! sigma, a blank line, `N` rows of gamma. Entries are decimal and
//! space-separated; the file ends with a newline.

use std::fmt::Write as _;
use std::io::Write;

use brace_core::ybe::SolutionTable;

use crate::error::{Result, YbeParseError};

const HEADER: &str = "YBE v1 N=";

fn push_table<'a>(out: &mut String, rows: impl Iterator<Item = &'a [u32]>) {
    for row in rows {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
}

pub fn render_solution(t: &SolutionTable) -> String {
    let n = t.size();
    let mut out = String::with_capacity(8 * n * n + 32);
    let _ = writeln!(out, "{HEADER}{n}");
    push_table(&mut out, (0..n).map(|x| t.sigma_row(x)));
    out.push('\n');
    push_table(&mut out, (0..n).map(|x| t.gamma_row(x)));
    out
}

/// Writes `t` and returns the number of bytes written.
pub fn export_solution<W: Write>(t: &SolutionTable, mut dest: W) -> Result<usize> {
    let text = render_solution(t);
    dest.write_all(text.as_bytes())?;
    dest.flush()?;
    Ok(text.len())
}

fn err(line: usize, message: impl Into<String>) -> YbeParseError {
    YbeParseError {
        line,
        message: message.into(),
    }
}

fn parse_rows<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    out: &mut Vec<u32>,
) -> std::result::Result<(), YbeParseError> {
    for _ in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| err(0, "unexpected end of file"))?;
        let before = out.len();
        for tok in line.split(' ') {
            let v: u32 = tok
                .parse()
                .map_err(|_| err(no, format!("bad entry {tok:?}")))?;
            if v as usize >= n {
                return Err(err(no, format!("entry {v} out of range for N = {n}")));
            }
            out.push(v);
        }
        if out.len() - before != n {
            return Err(err(
                no,
                format!("expected {n} entries, found {}", out.len() - before),
            ));
        }
    }
    Ok(())
}

pub fn import_solution(text: &str) -> Result<SolutionTable> {
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| err(0, "missing trailing newline"))?;
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let n: usize = header
        .strip_prefix(HEADER)
        .and_then(|s| s.parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| err(1, format!("bad header {header:?}")))?;
    let mut sigma = Vec::with_capacity(n * n);
    let mut gamma = Vec::with_capacity(n * n);
    parse_rows(&mut lines, n, &mut sigma)?;
    match lines.next() {
        Some((_, "")) => {}
        Some((no, _)) => return Err(err(no, "expected a blank line between the tables").into()),
        None => return Err(err(0, "unexpected end of file").into()),
    }
    parse_rows(&mut lines, n, &mut gamma)?;
    if let Some((no, _)) = lines.next() {
        return Err(err(no, "trailing content").into());
    }
    Ok(SolutionTable::new(n, sigma, gamma)?)
}
