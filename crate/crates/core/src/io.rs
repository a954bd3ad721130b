//! Text format for matrices and instances.
//!
//! ```text
//! # comment lines start with '#'
//! dense 2
//! 0 0.5
//! 0 0.5
//! c: -0.5 0.5
//! ```
//!
//! Tridiagonal storage keeps the three bands on three lines (sub, diag,
//! sup); the `c:` block is optional and turns a matrix file into an
//! instance file. Parsing is token-based, so line breaks inside a block are
//! not significant. Scalars are written with shortest round-trip decimal
//! formatting, so write-then-parse reproduces every value bit for bit.

use crate::error::{AveError, Result};
use crate::instance::AveInstance;
use crate::matrix::{DenseMatrix, Matrix, TriDiagMatrix};

/// Parse a matrix followed by an optional `c:` right-hand side.
pub fn parse_matrix_and_rhs(text: &str) -> Result<(Matrix, Option<Vec<f64>>)> {
    let mut tokens = tokenize(text);
    let kind = next_token(&mut tokens, "matrix kind")?;
    let n: usize = next_token(&mut tokens, "dimension")?
        .parse()
        .map_err(|_| AveError::ParseError("dimension is not an integer".into()))?;
    if n == 0 {
        return Err(AveError::ParseError("dimension must be >= 1".into()));
    }
    let matrix = match kind.as_str() {
        "dense" => {
            let entries = take_scalars(&mut tokens, n * n, "dense entries")?;
            Matrix::Dense(DenseMatrix::new(n, entries).map_err(to_parse_error)?)
        }
        "tridiag" => {
            let sub = take_scalars(&mut tokens, n - 1, "sub-diagonal")?;
            let diag = take_scalars(&mut tokens, n, "diagonal")?;
            let sup = take_scalars(&mut tokens, n - 1, "super-diagonal")?;
            Matrix::Tridiag(TriDiagMatrix::new(sub, diag, sup).map_err(to_parse_error)?)
        }
        other => {
            return Err(AveError::ParseError(format!(
                "unknown matrix kind `{other}` (expected `dense` or `tridiag`)"
            )))
        }
    };
    let rhs = match tokens.next() {
        None => None,
        Some(t) if t == "c:" => Some(take_scalars(&mut tokens, n, "rhs")?),
        Some(t) => {
            return Err(AveError::ParseError(format!(
                "unexpected token `{t}` after matrix block"
            )))
        }
    };
    if let Some(t) = tokens.next() {
        return Err(AveError::ParseError(format!("trailing token `{t}`")));
    }
    Ok((matrix, rhs))
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let (m, rhs) = parse_matrix_and_rhs(text)?;
    if rhs.is_some() {
        return Err(AveError::ParseError(
            "expected a matrix file, found an instance (`c:` block present)".into(),
        ));
    }
    Ok(m)
}

pub fn parse_instance(text: &str) -> Result<AveInstance> {
    let (m, rhs) = parse_matrix_and_rhs(text)?;
    let rhs = rhs.ok_or_else(|| {
        AveError::ParseError("instance file needs a `c:` block with the right-hand side".into())
    })?;
    AveInstance::new(m, rhs).map_err(to_parse_error)
}

pub fn write_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    match m {
        Matrix::Dense(d) => {
            out.push_str(&format!("dense {}\n", d.n()));
            for i in 0..d.n() {
                out.push_str(&join(d.row(i)));
                out.push('\n');
            }
        }
        Matrix::Tridiag(t) => {
            out.push_str(&format!("tridiag {}\n", t.n()));
            out.push_str(&join(t.sub()));
            out.push('\n');
            out.push_str(&join(t.diag()));
            out.push('\n');
            out.push_str(&join(t.sup()));
            out.push('\n');
        }
    }
    out
}

pub fn write_instance(inst: &AveInstance) -> String {
    let mut out = write_matrix(inst.matrix());
    out.push_str("c: ");
    out.push_str(&join(inst.rhs()));
    out.push('\n');
    out
}

/// Shortest decimal form that parses back to the same bits.
pub fn format_scalar(x: f64) -> String {
    format!("{x}")
}

fn join(v: &[f64]) -> String {
    v.iter()
        .map(|&x| format_scalar(x))
        .collect::<Vec<_>>()
        .join(" ")
}

fn tokenize(text: &str) -> impl Iterator<Item = String> + '_ {
    text.lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .flat_map(|line| line.split_whitespace())
        .map(str::to_string)
}

fn next_token(tokens: &mut impl Iterator<Item = String>, what: &str) -> Result<String> {
    tokens
        .next()
        .ok_or_else(|| AveError::ParseError(format!("unexpected end of input, expected {what}")))
}

fn take_scalars(
    tokens: &mut impl Iterator<Item = String>,
    count: usize,
    what: &str,
) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let t = next_token(tokens, what)?;
        let x: f64 = t
            .parse()
            .map_err(|_| AveError::ParseError(format!("bad scalar `{t}` in {what}")))?;
        if !x.is_finite() {
            return Err(AveError::ParseError(format!(
                "non-finite scalar `{t}` in {what}"
            )));
        }
        out.push(x);
    }
    Ok(out)
}

fn to_parse_error(e: AveError) -> AveError {
    AveError::ParseError(e.to_string())
}
