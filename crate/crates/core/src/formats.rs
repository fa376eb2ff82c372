//! Plain-text file formats for algebras, matrices and closure systems.
//!
//! ```text
//! # the algebra A3
//! size 3
//! neg 1 0 2
//! designated 0        # matrices only
//! set                 # closure systems: one member per line, may be empty
//! set 0
//! ```
//!
//! Tokens are whitespace separated and `#` starts a comment. A closure
//! system file may leave out the carrier; it is added.

use thiserror::Error;

use crate::algebra::{AlgebraError, UnaryAlgebra};
use crate::gmatrix::{ClosureSystem, GMatrixError};
use crate::matrix::{Matrix, ModelError};
use crate::subset::{Subset, MAX_CARRIER};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    GMatrix(#[from] GMatrixError),
}

struct Record<'a> {
    line: usize,
    keyword: &'a str,
    values: Vec<usize>,
}

fn records<'a>(text: &'a str, allowed: &[&str]) -> Result<Vec<Record<'a>>, FormatError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut words = content.split_whitespace();
        let Some(keyword) = words.next() else { continue };
        if !allowed.contains(&keyword) {
            return Err(FormatError::Syntax { line, message: format!("unknown keyword {keyword:?}") });
        }
        let values = words
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| FormatError::Syntax { line, message: format!("expected a number, found {w:?}") })
            })
            .collect::<Result<_, _>>()?;
        out.push(Record { line, keyword, values });
    }
    Ok(out)
}

fn single<'r, 'a>(recs: &'r [Record<'a>], keyword: &'static str) -> Result<&'r Record<'a>, FormatError> {
    let mut found = recs.iter().filter(|r| r.keyword == keyword);
    let first = found.next().ok_or(FormatError::Missing(keyword))?;
    if let Some(dup) = found.next() {
        return Err(FormatError::Syntax { line: dup.line, message: format!("duplicate `{keyword}` line") });
    }
    Ok(first)
}

fn algebra_from(recs: &[Record]) -> Result<UnaryAlgebra, FormatError> {
    let size = single(recs, "size")?;
    let m = match size.values.as_slice() {
        [m] => *m,
        _ => return Err(FormatError::Syntax { line: size.line, message: "expected `size <m>`".into() }),
    };
    let neg = single(recs, "neg")?;
    if neg.values.len() != m {
        return Err(FormatError::Syntax {
            line: neg.line,
            message: format!("`neg` lists {} images for size {m}", neg.values.len()),
        });
    }
    Ok(UnaryAlgebra::new(neg.values.clone())?)
}

fn subset_from(rec: &Record, size: usize) -> Result<Subset, FormatError> {
    if let Some(&bad) = rec.values.iter().find(|&&a| a >= size || a >= MAX_CARRIER) {
        return Err(FormatError::Syntax {
            line: rec.line,
            message: format!("element {bad} is outside the carrier of size {size}"),
        });
    }
    Ok(rec.values.iter().copied().collect())
}

pub fn parse_algebra(text: &str) -> Result<UnaryAlgebra, FormatError> {
    algebra_from(&records(text, &["size", "neg"])?)
}

pub fn parse_matrix(text: &str) -> Result<Matrix, FormatError> {
    let recs = records(text, &["size", "neg", "designated"])?;
    let algebra = algebra_from(&recs)?;
    let designated = subset_from(single(&recs, "designated")?, algebra.size())?;
    Ok(Matrix::new(algebra, designated)?)
}

pub fn parse_closure_system(text: &str) -> Result<ClosureSystem, FormatError> {
    let recs = records(text, &["size", "neg", "set"])?;
    let algebra = algebra_from(&recs)?;
    let mut family = vec![Subset::full(algebra.size())];
    for rec in recs.iter().filter(|r| r.keyword == "set") {
        family.push(subset_from(rec, algebra.size())?);
    }
    Ok(ClosureSystem::new(algebra, family)?)
}

fn list(values: impl Iterator<Item = usize>) -> String {
    values.map(|v| format!(" {v}")).collect()
}

pub fn render_algebra(alg: &UnaryAlgebra) -> String {
    format!("size {}\nneg{}\n", alg.size(), list(alg.table().iter().copied()))
}

pub fn render_matrix(m: &Matrix) -> String {
    format!("{}designated{}\n", render_algebra(&m.algebra), list(m.designated.iter()))
}

pub fn render_closure_system(s: &ClosureSystem) -> String {
    let mut out = render_algebra(s.algebra());
    for member in s.family() {
        out.push_str(&format!("set{}\n", list(member.iter())));
    }
    out
}
