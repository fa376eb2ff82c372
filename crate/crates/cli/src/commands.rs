use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use neglogic::algebra::UnaryAlgebra;
use neglogic::census::{classes, row};
use neglogic::formats::{parse_algebra, parse_closure_system};
use neglogic::formula::{Formula, FormulaSet, Session};
use neglogic::gmatrix::{in_alg, in_alg_by_frege};
use neglogic::hilbert::{check_proof, entails, parse_proof, synthesize_proof};
use neglogic::matrix::{all_filters, is_reduced_model, leibniz_congruence, reduced_model_witness};

pub const DERIVABLE: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const DISAGREEMENT: u8 = 3;

/// What a command produced: the exit code and everything meant for stdout.
#[derive(Debug)]
pub struct Report {
    pub code: u8,
    pub out: String,
}

/// A failure reported on stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn input(message: impl ToString) -> Failure {
    Failure { code: INPUT_ERROR, message: message.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

pub enum Premises<'a> {
    Inline(&'a str),
    File(&'a Path),
}

fn load_problem(session: &mut Session, premises: Premises, goal: &str) -> Result<(FormulaSet, Formula), Failure> {
    let gamma = match premises {
        Premises::Inline(text) => session.parse_list(text).map_err(|e| input(format!("premises: {e}")))?,
        Premises::File(path) => {
            let text = read(path)?;
            session.parse_lines(&text).map_err(|e| input(format!("{}: {e}", path.display())))?
        }
    };
    let goal = session.parse(goal).map_err(|e| input(format!("goal: {e}")))?;
    Ok((gamma, goal))
}

pub fn entail(premises: Premises, goal: &str, with_proof: bool) -> Result<Report, Failure> {
    let mut session = Session::new();
    let (gamma, goal) = load_problem(&mut session, premises, goal)?;
    if !entails(&gamma, goal) {
        return Ok(Report { code: NEGATIVE, out: "not derivable\n".into() });
    }
    let mut out = String::from("derivable\n");
    if with_proof {
        out.push_str(&proof_text(&session, &gamma, goal)?);
    }
    Ok(Report { code: DERIVABLE, out })
}

pub fn prove(premises: Premises, goal: &str) -> Result<Report, Failure> {
    let mut session = Session::new();
    let (gamma, goal) = load_problem(&mut session, premises, goal)?;
    if !entails(&gamma, goal) {
        return Ok(Report { code: NEGATIVE, out: "not derivable\n".into() });
    }
    Ok(Report { code: DERIVABLE, out: proof_text(&session, &gamma, goal)? })
}

fn proof_text(session: &Session, gamma: &FormulaSet, goal: Formula) -> Result<String, Failure> {
    let proof = synthesize_proof(gamma, goal).ok_or_else(|| Failure {
        code: DISAGREEMENT,
        message: "entailment holds but no proof was synthesized".into(),
    })?;
    if let Err(defect) = check_proof(gamma, &proof, goal) {
        return Err(Failure { code: DISAGREEMENT, message: format!("synthesized proof rejected: {defect}") });
    }
    Ok(proof.render(session))
}

pub fn check_proof_file(premises: Premises, proof_path: &Path, goal: &str) -> Result<Report, Failure> {
    let mut session = Session::new();
    let (gamma, goal) = load_problem(&mut session, premises, goal)?;
    let text = read(proof_path)?;
    let proof = parse_proof(&mut session, &text).map_err(|e| input(format!("{}: {e}", proof_path.display())))?;
    Ok(match check_proof(&gamma, &proof, goal) {
        Ok(()) => Report { code: DERIVABLE, out: "valid\n".into() },
        Err(defect) => Report { code: NEGATIVE, out: format!("invalid\n{defect}\n") },
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn algebra(path: &Path, cap: usize) -> Result<Report, Failure> {
    let alg = parse_algebra(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let filters = all_filters(&alg, cap).map_err(input)?;
    let mut out = String::new();
    let table: Vec<String> = alg.table().iter().map(usize::to_string).collect();
    writeln!(out, "size {}", alg.size()).unwrap();
    writeln!(out, "neg {}", table.join(" ")).unwrap();
    writeln!(out, "code {}", alg.canonical_form()).unwrap();
    writeln!(out, "orbits").unwrap();
    for a in alg.elements() {
        let o = alg.orbit(a).expect("element in range");
        let even = alg.even_orbit(a).expect("element in range");
        writeln!(
            out,
            "  {a}: neg {} pre-period {} cycle {} trace ({}) even {}",
            alg.neg(a),
            o.pre_period,
            o.cycle_length,
            o.trace.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
            list(&even)
        )
        .unwrap();
    }
    writeln!(out, "filters {}", filters.len()).unwrap();
    for &f in &filters {
        let omega = leibniz_congruence(&alg, f).expect("filter in range");
        let reduced = is_reduced_model(&alg, f).expect("filter in range");
        writeln!(out, "  {f}: leibniz {omega} reduced {}", yes(reduced)).unwrap();
    }
    writeln!(out, "in_V {}", membership_v(&alg)).unwrap();
    writeln!(out, "in_alg {}", membership_alg(&alg)).unwrap();
    let by_frege = in_alg_by_frege(&alg, cap).map_err(input)?;
    if by_frege != in_alg(&alg) {
        return Err(Failure {
            code: DISAGREEMENT,
            message: format!("Alg membership: equations say {}, Frege relation says {}", in_alg(&alg), by_frege),
        });
    }
    writeln!(out, "in_alg_star {}", membership_alg_star(&alg, cap)?).unwrap();
    Ok(Report { code: DERIVABLE, out })
}

fn membership_v(alg: &UnaryAlgebra) -> String {
    match alg.double_negation_violation() {
        None => "yes".into(),
        Some(a) => format!("no (neg neg {a} = {} != {a})", alg.neg(alg.neg(a))),
    }
}

fn membership_alg(alg: &UnaryAlgebra) -> String {
    if in_alg(alg) {
        return "yes".into();
    }
    if let Some(a) = alg.double_negation_violation() {
        return format!("no (neg neg {a} = {} != {a})", alg.neg(alg.neg(a)));
    }
    let fix = alg.fixpoints();
    format!("no (fixpoints ({},{}))", fix[0], fix[1])
}

fn membership_alg_star(alg: &UnaryAlgebra, cap: usize) -> Result<String, Failure> {
    let named = [("A1", UnaryAlgebra::a1()), ("A2", UnaryAlgebra::a2()), ("A3", UnaryAlgebra::a3())];
    let iso = named.iter().find(|(_, b)| alg.is_isomorphic(b)).map(|(name, _)| *name);
    let witness = reduced_model_witness(alg, cap).map_err(input)?;
    if iso.is_some() != witness.is_some() {
        return Err(Failure {
            code: DISAGREEMENT,
            message: format!(
                "Alg* membership: isomorphism says {}, reduced-model search says {}",
                iso.is_some(),
                witness.is_some()
            ),
        });
    }
    Ok(match (iso, witness) {
        (Some(name), Some(f)) => format!("yes (isomorphic to {name}, reduced model F={f})"),
        _ => "no (no reduced model on this algebra)".into(),
    })
}

pub fn gmatrix(path: &Path, cap: usize) -> Result<Report, Failure> {
    let sys = parse_closure_system(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let report = sys.check_full(cap).map_err(input)?;
    let reduction = sys.reduction(cap).map_err(input)?;
    let mut out = String::new();
    let family: Vec<String> = sys.family().iter().map(ToString::to_string).collect();
    writeln!(out, "family {}", family.join(" ")).unwrap();
    match sys.non_filter_member() {
        None => writeln!(out, "g-model yes").unwrap(),
        Some(s) => writeln!(out, "g-model no ({s} is not a filter)").unwrap(),
    }
    for (k, flag) in report.flags.iter().enumerate() {
        match flag.witness {
            None => writeln!(out, "F{} holds", k + 1).unwrap(),
            Some(w) => writeln!(out, "F{} fails {w}", k + 1).unwrap(),
        }
    }
    writeln!(out, "tarski {}", report.tarski).unwrap();
    writeln!(out, "frege {}", report.frege).unwrap();
    writeln!(out, "reduced {}", yes(report.reduced)).unwrap();
    let quotient: Vec<String> = reduction.quotient.table().iter().map(usize::to_string).collect();
    writeln!(out, "quotient neg {}", quotient.join(" ")).unwrap();
    let sets = |xs: &[neglogic::Subset]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    writeln!(out, "missing filters [{}]", sets(&reduction.missing)).unwrap();
    writeln!(out, "extra members [{}]", sets(&reduction.extra)).unwrap();
    writeln!(out, "full by conditions {}", yes(report.full)).unwrap();
    writeln!(out, "full by reduction {}", yes(reduction.is_full())).unwrap();
    if report.full != reduction.is_full() {
        return Err(Failure { code: DISAGREEMENT, message: format!("{out}the two fullness verdicts disagree") });
    }
    Ok(Report { code: if report.full { DERIVABLE } else { NEGATIVE }, out })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Plain,
    Csv,
}

pub fn census(max_size: usize, cap: usize, format: Format, per_class: bool) -> Result<Report, Failure> {
    if max_size == 0 || max_size > cap {
        return Err(input(format!("--max-size must be between 1 and the cap {cap}")));
    }
    let per_size =
        (1..=max_size).map(|m| classes(m, cap).map(|c| (m, c))).collect::<Result<Vec<_>, _>>().map_err(input)?;
    let mut out = String::new();
    let flag = |b: bool| b as u8;
    match (format, per_class) {
        (Format::Plain, false) => {
            writeln!(out, "{:>4} {:>7} {:>4} {:>4} {:>5} {:>7}", "size", "classes", "V", "Alg", "Alg*", "reduced")
                .unwrap();
            for (m, cs) in &per_size {
                let r = row(*m, cs);
                writeln!(
                    out,
                    "{:>4} {:>7} {:>4} {:>4} {:>5} {:>7}",
                    r.size, r.total_classes, r.in_v, r.in_alg, r.in_alg_star, r.reduced_matrix_count
                )
                .unwrap();
            }
        }
        (Format::Csv, false) => {
            writeln!(out, "size,total_classes,in_v,in_alg,in_alg_star,reduced_matrix_count").unwrap();
            for (m, cs) in &per_size {
                let r = row(*m, cs);
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.size, r.total_classes, r.in_v, r.in_alg, r.in_alg_star, r.reduced_matrix_count
                )
                .unwrap();
            }
        }
        (Format::Plain, true) => {
            for (m, cs) in &per_size {
                writeln!(out, "size {m}").unwrap();
                for c in cs {
                    writeln!(
                        out,
                        "  {} V {} Alg {} Alg* {} reduced {}",
                        c.code.to_hex(),
                        flag(c.in_v),
                        flag(c.in_alg),
                        flag(c.in_alg_star),
                        c.reduced_models
                    )
                    .unwrap();
                }
            }
        }
        (Format::Csv, true) => {
            writeln!(out, "size,code,in_v,in_alg,in_alg_star,reduced_models").unwrap();
            for (m, cs) in &per_size {
                for c in cs {
                    writeln!(
                        out,
                        "{m},{},{},{},{},{}",
                        c.code.to_hex(),
                        flag(c.in_v),
                        flag(c.in_alg),
                        flag(c.in_alg_star),
                        c.reduced_models
                    )
                    .unwrap();
                }
            }
        }
    }
    Ok(Report { code: DERIVABLE, out })
}
