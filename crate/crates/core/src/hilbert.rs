//! The Hilbert calculus with rules
//!
//! * R1: `x, ¬x ⊢ y`
//! * R2: `x ⊢ ¬¬x`
//! * R3: `¬¬x ⊢ x`
//!
//! together with a checker for proof objects, two independent entailment
//! deciders (parity criterion and truth tables over the two-element negation
//! algebra) and a proof synthesizer.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, FormulaSet, ParseError, Session};

/// Why a step is in the proof. Indices are 0-based step positions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Justification {
    Hypothesis,
    /// `i` holds `β`, `j` holds `¬β`; the conclusion is arbitrary.
    R1(usize, usize),
    /// Adds two negations to step `i`.
    R2(usize),
    /// Removes two negations from step `i`.
    R3(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProofStep {
    pub formula: Formula,
    pub justification: Justification,
}

impl ProofStep {
    pub fn new(formula: Formula, justification: Justification) -> Self {
        ProofStep { formula, justification }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Proof {
    pub steps: Vec<ProofStep>,
}

impl Proof {
    pub fn new(steps: Vec<ProofStep>) -> Self {
        Proof { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn conclusion(&self) -> Option<Formula> {
        self.steps.last().map(|s| s.formula)
    }

    /// Text form, one step per line: `<index>. <formula>  [rule]`.
    pub fn render(&self, session: &Session) -> String {
        let mut out = String::new();
        for (k, step) in self.steps.iter().enumerate() {
            let rule = match step.justification {
                Justification::Hypothesis => "hyp".to_string(),
                Justification::R1(i, j) => format!("r1 {i} {j}"),
                Justification::R2(i) => format!("r2 {i}"),
                Justification::R3(i) => format!("r3 {i}"),
            };
            out.push_str(&format!("{k}. {}  [{rule}]\n", session.render(step.formula)));
        }
        out
    }
}

/// The first thing wrong with a proof.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ProofDefect {
    #[error("proof has no steps")]
    Empty,
    #[error("step {step}: {reason}")]
    Step { step: usize, reason: StepFault },
    #[error("last step proves {found}, expected {expected}")]
    WrongConclusion { found: Formula, expected: Formula },
}

impl ProofDefect {
    pub fn step(&self) -> Option<usize> {
        match self {
            ProofDefect::Step { step, .. } => Some(*step),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum StepFault {
    #[error("{0} is not a premise")]
    NotPremise(Formula),
    #[error("refers to step {0}, which does not precede it")]
    ForwardReference(usize),
    #[error("r1 needs step {j} to be the negation of step {i}")]
    NotContradictory { i: usize, j: usize },
    #[error("r2 must add exactly two negations to step {0}")]
    BadDoubleNegationIntro(usize),
    #[error("r3 must remove exactly two negations from step {0}")]
    BadDoubleNegationElim(usize),
}

/// Checks every step and the final conclusion, stopping at the first defect.
pub fn check_proof(premises: &FormulaSet, proof: &Proof, goal: Formula) -> Result<(), ProofDefect> {
    if proof.is_empty() {
        return Err(ProofDefect::Empty);
    }
    let steps = &proof.steps;
    for (k, step) in steps.iter().enumerate() {
        let fault = |reason| Err(ProofDefect::Step { step: k, reason });
        let earlier = |i: usize| if i < k { Ok(steps[i].formula) } else { Err(i) };
        match step.justification {
            Justification::Hypothesis => {
                if !premises.contains(&step.formula) {
                    return fault(StepFault::NotPremise(step.formula));
                }
            }
            Justification::R1(i, j) => {
                let (pos, neg) = match (earlier(i), earlier(j)) {
                    (Ok(p), Ok(n)) => (p, n),
                    (Err(bad), _) | (_, Err(bad)) => return fault(StepFault::ForwardReference(bad)),
                };
                if neg != pos.negate() {
                    return fault(StepFault::NotContradictory { i, j });
                }
            }
            Justification::R2(i) => match earlier(i) {
                Err(bad) => return fault(StepFault::ForwardReference(bad)),
                Ok(src) if step.formula != src.negate_n(2) => return fault(StepFault::BadDoubleNegationIntro(i)),
                Ok(_) => {}
            },
            Justification::R3(i) => match earlier(i) {
                Err(bad) => return fault(StepFault::ForwardReference(bad)),
                Ok(src) if src != step.formula.negate_n(2) => return fault(StepFault::BadDoubleNegationElim(i)),
                Ok(_) => {}
            },
        }
    }
    let found = steps[steps.len() - 1].formula;
    if found != goal {
        return Err(ProofDefect::WrongConclusion { found, expected: goal });
    }
    Ok(())
}

pub fn is_valid_proof(premises: &FormulaSet, proof: &Proof, goal: Formula) -> bool {
    check_proof(premises, proof, goal).is_ok()
}

/// Value of `¬ⁿx` in the two-element negation algebra given the value of `x`.
fn eval(f: Formula, value_of_var: bool) -> bool {
    value_of_var ^ (f.depth % 2 == 1)
}

/// Truth-table entailment: every assignment of the occurring variables that
/// makes all premises true makes the goal true.
pub fn entails_semantic(premises: &FormulaSet, goal: Formula) -> bool {
    let mut vars = premises.vars();
    vars.insert(goal.var);
    let vars: Vec<usize> = vars.into_iter().collect();
    assert!(vars.len() < 32, "truth table over {} variables", vars.len());
    let slot: BTreeMap<usize, usize> = vars.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    (0u32..1 << vars.len()).all(|assignment| {
        let value = |f: Formula| eval(f, assignment >> slot[&f.var] & 1 == 1);
        !premises.iter().all(|&p| value(p)) || value(goal)
    })
}

/// For each variable, the shallowest even-depth and odd-depth premise.
fn parity_witnesses(premises: &FormulaSet) -> BTreeMap<usize, [Option<Formula>; 2]> {
    let mut out: BTreeMap<usize, [Option<Formula>; 2]> = BTreeMap::new();
    for &f in premises {
        let slot = &mut out.entry(f.var).or_default()[f.depth % 2];
        if slot.is_none_or(|g| f.depth < g.depth) {
            *slot = Some(f);
        }
    }
    out
}

/// The first clashing pair `(¬ⁿx, ¬ᵏx)` with `n` even and `k` odd, taking the
/// least such variable and the shallowest premises on it.
pub fn clash(premises: &FormulaSet) -> Option<(Formula, Formula)> {
    parity_witnesses(premises).into_values().find_map(|[even, odd]| Some((even?, odd?)))
}

/// No variable occurs in premises of both parities.
pub fn consistency(premises: &FormulaSet) -> bool {
    clash(premises).is_none()
}

/// Syntactic entailment: the premises explode, or one premise is
/// interderivable with the goal.
pub fn entails(premises: &FormulaSet, goal: Formula) -> bool {
    !consistency(premises) || premises.iter().any(|g| g.interderivable(goal))
}

/// Builds a proof of `goal` from `premises`, or `None` when there is none.
///
/// A premise interderivable with the goal (least depth, then least variable)
/// is walked to the goal with R2 or R3. Otherwise the shallower member of a
/// clashing pair is raised with R2 to sit directly under the deeper one, and
/// R1 concludes the goal.
pub fn synthesize_proof(premises: &FormulaSet, goal: Formula) -> Option<Proof> {
    let witness = premises.iter().filter(|g| g.interderivable(goal)).min_by_key(|g| (g.depth, g.var));
    if let Some(&start) = witness {
        let mut steps = vec![ProofStep::new(start, Justification::Hypothesis)];
        let mut current = start;
        while current.depth != goal.depth {
            let last = steps.len() - 1;
            if current.depth < goal.depth {
                current = current.negate_n(2);
                steps.push(ProofStep::new(current, Justification::R2(last)));
            } else {
                current = Formula::new(current.var, current.depth - 2);
                steps.push(ProofStep::new(current, Justification::R3(last)));
            }
        }
        return Some(Proof::new(steps));
    }

    let (even, odd) = clash(premises)?;
    let (shallow, deep) = if even.depth < odd.depth { (even, odd) } else { (odd, even) };
    let mut steps =
        vec![ProofStep::new(shallow, Justification::Hypothesis), ProofStep::new(deep, Justification::Hypothesis)];
    let mut current = shallow;
    let mut at = 0;
    while current.depth + 1 < deep.depth {
        current = current.negate_n(2);
        steps.push(ProofStep::new(current, Justification::R2(at)));
        at = steps.len() - 1;
    }
    steps.push(ProofStep::new(goal, Justification::R1(at, 1)));
    Some(Proof::new(steps))
}

#[derive(Debug, Error)]
pub enum ProofParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: formula {source}")]
    Formula {
        line: usize,
        #[source]
        source: ParseError,
    },
}

/// Reads the text form written by [`Proof::render`]. Blank lines and `#`
/// comments are skipped; step numbers must count up from 0.
pub fn parse_proof(session: &mut Session, text: &str) -> Result<Proof, ProofParseError> {
    let mut steps = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let syntax = |message: String| ProofParseError::Syntax { line, message };
        let (index, rest) = trimmed.split_once('.').ok_or_else(|| syntax("expected `<index>.`".into()))?;
        let index: usize = index.trim().parse().map_err(|_| syntax(format!("bad step index {:?}", index.trim())))?;
        if index != steps.len() {
            return Err(syntax(format!("step numbered {index}, expected {}", steps.len())));
        }
        let open = rest.rfind('[').ok_or_else(|| syntax("missing `[rule]`".into()))?;
        let close = rest[open..].find(']').map(|c| open + c).ok_or_else(|| syntax("unterminated `[rule]`".into()))?;
        if !rest[close + 1..].trim().is_empty() {
            return Err(syntax("text after `]`".into()));
        }
        let formula = session.parse(&rest[..open]).map_err(|source| ProofParseError::Formula { line, source })?;
        let words: Vec<&str> = rest[open + 1..close].split_whitespace().collect();
        let num = |w: &str| w.parse::<usize>().map_err(|_| syntax(format!("bad step reference {w:?}")));
        let justification = match words.as_slice() {
            ["hyp"] => Justification::Hypothesis,
            ["r1", i, j] => Justification::R1(num(i)?, num(j)?),
            ["r2", i] => Justification::R2(num(i)?),
            ["r3", i] => Justification::R3(num(i)?),
            _ => return Err(syntax(format!("unknown rule {:?}", words.join(" ")))),
        };
        steps.push(ProofStep::new(formula, justification));
    }
    Ok(Proof::new(steps))
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Session::new()))
    }
}
