//! Plain-text instances: a header line `m n`, then `m` lines of exactly `n`
//! characters from `{0,1}`. LF or CRLF on read, LF on write.

use setcover_core::{BitRow, Instance, InstanceError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: bad header: {reason}")]
    BadHeader { line: usize, reason: &'static str },
    #[error("line {line}: expected {expected} characters, found {found}")]
    BadRowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, position {position}: expected '0' or '1', found {found:?}")]
    BadChar {
        line: usize,
        position: usize,
        found: char,
    },
    #[error("line {line}: expected {expected} rows, found {found}")]
    RowCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("column {column} has no ones and cannot be covered")]
    ZeroColumn { column: usize },
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    let (m, n) = parse_header(header)?;

    let mut rows = Vec::with_capacity(m);
    let mut line_no = 1;
    for line in lines {
        line_no += 1;
        if rows.len() == m {
            if line.is_empty() {
                continue;
            }
            return Err(ParseError::RowCount {
                line: line_no,
                expected: m,
                found: rows.len() + 1,
            });
        }
        rows.push(parse_row(line, line_no, n)?);
    }
    if rows.len() < m {
        return Err(ParseError::RowCount {
            line: line_no + 1,
            expected: m,
            found: rows.len(),
        });
    }
    Instance::new(rows).map_err(|e| match e {
        InstanceError::ZeroColumn { column } => ParseError::ZeroColumn { column: column + 1 },
        other => unreachable!("rows already validated: {other}"),
    })
}

fn parse_header(line: &str) -> Result<(usize, usize), ParseError> {
    let bad = |reason| ParseError::BadHeader { line: 1, reason };
    let mut fields = line.split(' ');
    let (Some(m), Some(n), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(bad("expected \"m n\""));
    };
    let m: usize = m.parse().map_err(|_| bad("m is not a decimal integer"))?;
    let n: usize = n.parse().map_err(|_| bad("n is not a decimal integer"))?;
    if m == 0 || n == 0 {
        return Err(bad("m and n must be positive"));
    }
    Ok((m, n))
}

fn parse_row(line: &str, line_no: usize, n: usize) -> Result<BitRow, ParseError> {
    let found = line.chars().count();
    if found != n {
        return Err(ParseError::BadRowLength {
            line: line_no,
            expected: n,
            found,
        });
    }
    let mut row = BitRow::zeros(n);
    for (j, ch) in line.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => row.set(j, true),
            found => {
                return Err(ParseError::BadChar {
                    line: line_no,
                    position: j + 1,
                    found,
                })
            }
        }
    }
    Ok(row)
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::with_capacity((inst.n() + 1) * (inst.m() + 1));
    out.push_str(&format!("{} {}\n", inst.m(), inst.n()));
    for row in inst.rows() {
        out.extend(row.iter().map(|b| if b { '1' } else { '0' }));
        out.push('\n');
    }
    out
}
