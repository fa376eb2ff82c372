//! Formulas of the language `{¬}`.
//!
//! Every formula over a single unary connective is a variable under some
//! number of negations, so a formula is stored as that pair rather than as a
//! tree.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

/// `¬ⁿx`: variable index plus negation depth.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Formula {
    pub var: usize,
    pub depth: usize,
}

impl Formula {
    pub const fn new(var: usize, depth: usize) -> Self {
        Formula { var, depth }
    }

    /// The bare variable.
    pub const fn var(var: usize) -> Self {
        Formula { var, depth: 0 }
    }

    pub const fn negate(self) -> Self {
        Formula { var: self.var, depth: self.depth + 1 }
    }

    /// Adds `n` leading negations.
    pub const fn negate_n(self, n: usize) -> Self {
        Formula { var: self.var, depth: self.depth + n }
    }

    /// Replaces the variable by `image`; depths add.
    pub const fn substitute(self, image: Formula) -> Self {
        Formula { var: image.var, depth: self.depth + image.depth }
    }

    pub const fn is_even(self) -> bool {
        self.depth.is_multiple_of(2)
    }

    /// Same variable and same depth parity. This is mutual derivability, and
    /// for single formulas one-way derivability already implies it.
    pub const fn interderivable(self, other: Formula) -> bool {
        self.var == other.var && self.depth % 2 == other.depth % 2
    }
}

/// Canonical rendering with `~` and `x<index>` names.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.depth {
            f.write_str("~")?;
        }
        write!(f, "x{}", self.var)
    }
}

pub fn render(f: Formula) -> String {
    f.to_string()
}

pub fn negate(f: Formula) -> Formula {
    f.negate()
}

pub fn interderivable(a: Formula, b: Formula) -> bool {
    a.interderivable(b)
}

pub fn substitute(f: Formula, image: Formula) -> Formula {
    f.substitute(image)
}

/// A finite, duplicate-free set of formulas.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct FormulaSet(BTreeSet<Formula>);

impl FormulaSet {
    pub fn new() -> Self {
        FormulaSet(BTreeSet::new())
    }

    pub fn insert(&mut self, f: Formula) -> bool {
        self.0.insert(f)
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.contains(f)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Iterates in (var, depth) order.
    pub fn iter(&self) -> impl Iterator<Item = &Formula> + '_ {
        self.0.iter()
    }

    pub fn vars(&self) -> BTreeSet<usize> {
        self.0.iter().map(|f| f.var).collect()
    }

    pub fn max_depth(&self) -> usize {
        self.0.iter().map(|f| f.depth).max().unwrap_or(0)
    }

    /// Applies a variable substitution to every member.
    pub fn substitute<F: Fn(usize) -> Formula>(&self, map: F) -> FormulaSet {
        self.0.iter().map(|f| f.substitute(map(f.var))).collect()
    }
}

impl FromIterator<Formula> for FormulaSet {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        FormulaSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a FormulaSet {
    type Item = &'a Formula;
    type IntoIter = std::collections::btree_set::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty formula")]
    Empty,
    #[error("unexpected character {0:?}")]
    Unexpected(char),
    #[error("expected a variable")]
    MissingVariable,
    #[error("trailing input after variable")]
    Trailing,
    #[error("index {index} is already bound to variable {name:?}")]
    IndexClash { index: usize, name: String },
}

/// A syntax error. `position` counts characters from the start of the
/// offending text; `line` is set when the text came from a multi-line source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
    pub line: Option<usize>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}, position {}: {}", self.position, self.kind),
            None => write!(f, "position {}: {}", self.position, self.kind),
        }
    }
}

impl ParseError {
    fn at(kind: ParseErrorKind, position: usize) -> Self {
        ParseError { kind, position, line: None }
    }

    fn on_line(mut self, line: usize) -> Self {
        self.line = Some(line);
        self
    }

    fn shifted(mut self, offset: usize) -> Self {
        self.position += offset;
        self
    }
}

/// Variable name table for one parsing session.
///
/// Names of the form `x<digits>` denote that index directly, which makes
/// `parse(render(f)) = f` hold. Any other identifier is bound, on first
/// sight, to the smallest index not yet in use. Using `x<n>` after `n` was
/// handed to another name is an error.
#[derive(Clone, Debug, Default)]
pub struct Session {
    by_name: HashMap<String, usize>,
    by_index: HashMap<usize, String>,
    next_free: usize,
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    /// Name shown for a variable: its bound name, else `x<index>`.
    pub fn name(&self, var: usize) -> String {
        self.by_index.get(&var).cloned().unwrap_or_else(|| format!("x{var}"))
    }

    pub fn render(&self, f: Formula) -> String {
        let mut s = "~".repeat(f.depth);
        s.push_str(&self.name(f.var));
        s
    }

    /// The index `name` resolves to, binding it if new.
    pub fn resolve(&mut self, name: &str) -> Result<usize, ParseErrorKind> {
        if let Some(&i) = self.by_name.get(name) {
            return Ok(i);
        }
        let index = match explicit_index(name) {
            Some(i) => {
                if let Some(other) = self.by_index.get(&i) {
                    return Err(ParseErrorKind::IndexClash { index: i, name: other.clone() });
                }
                i
            }
            None => {
                while self.by_index.contains_key(&self.next_free) {
                    self.next_free += 1;
                }
                self.next_free
            }
        };
        self.by_name.insert(name.to_string(), index);
        self.by_index.insert(index, name.to_string());
        Ok(index)
    }

    /// Parses `negation* variable`, with `~` or `¬` as negation.
    pub fn parse(&mut self, text: &str) -> Result<Formula, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let mut depth = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == chars.len() {
            return Err(ParseError::at(ParseErrorKind::Empty, pos));
        }
        while pos < chars.len() && matches!(chars[pos], '~' | '¬') {
            depth += 1;
            pos += 1;
            skip_ws(&mut pos);
        }
        if pos == chars.len() {
            return Err(ParseError::at(ParseErrorKind::MissingVariable, pos));
        }
        if !chars[pos].is_ascii_alphabetic() {
            return Err(ParseError::at(ParseErrorKind::Unexpected(chars[pos]), pos));
        }
        let start = pos;
        while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_') {
            pos += 1;
        }
        let name: String = chars[start..pos].iter().collect();
        skip_ws(&mut pos);
        if pos < chars.len() {
            let kind = if chars[pos].is_alphanumeric() || matches!(chars[pos], '~' | '¬') {
                ParseErrorKind::Trailing
            } else {
                ParseErrorKind::Unexpected(chars[pos])
            };
            return Err(ParseError::at(kind, pos));
        }
        let var = self.resolve(&name).map_err(|k| ParseError::at(k, start))?;
        Ok(Formula { var, depth })
    }

    /// Comma-separated inline list; blank input is the empty set.
    pub fn parse_list(&mut self, text: &str) -> Result<FormulaSet, ParseError> {
        let mut out = FormulaSet::new();
        if text.trim().is_empty() {
            return Ok(out);
        }
        let mut offset = 0;
        for piece in text.split(',') {
            out.insert(self.parse(piece).map_err(|e| e.shifted(offset))?);
            offset += piece.chars().count() + 1;
        }
        Ok(out)
    }

    /// One formula per line; blank lines and `#` comments are skipped.
    pub fn parse_lines(&mut self, text: &str) -> Result<FormulaSet, ParseError> {
        let mut out = FormulaSet::new();
        for (n, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            out.insert(self.parse(line).map_err(|e| e.on_line(n + 1))?);
        }
        Ok(out)
    }
}

fn explicit_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Parses with a throwaway session.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    Session::new().parse(text)
}
