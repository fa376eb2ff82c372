//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{matrix_isomorphic, premise_sets, set, truth_table_entails, RandomSystems};
use neglogic::algebra::{all_tables, enumerate_algebras, DEFAULT_ENUMERATION_CAP};
use neglogic::census::{census, CensusRow};
use neglogic::gmatrix::{
    enumerate_closure_systems, fully_fregean_probe, in_alg, in_alg_by_frege, in_v, suszko_like_relation,
    DEFAULT_FULL_CAP,
};
use neglogic::hilbert::{check_proof, entails, entails_semantic, synthesize_proof};
use neglogic::matrix::{
    all_filters, generate_filter, generate_filter_fixpoint, in_alg_star, is_reduced_model, leibniz_congruence,
    DEFAULT_FILTER_CAP,
};
use neglogic::{ClosureSystem, Formula, Subset, UnaryAlgebra};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn entailment_agreement() -> Outcome {
    let pool: Vec<Formula> = (0..2).flat_map(|v| (0..=6).map(move |d| Formula::new(v, d))).collect();
    let goals: Vec<Formula> = (0..3).flat_map(|v| (0..=6).map(move |d| Formula::new(v, d))).collect();
    let (mut checked, mut disagreements, mut bad_proofs, mut missing_proofs) = (0, 0, 0, 0);
    let mut first = None;
    for gamma in premise_sets(&pool, 3) {
        for &goal in &goals {
            checked += 1;
            let syntactic = entails(&gamma, goal);
            let semantic = entails_semantic(&gamma, goal);
            let table = truth_table_entails(&gamma, goal);
            if syntactic != semantic || semantic != table {
                disagreements += 1;
                first.get_or_insert_with(|| format!("first disagreement: {gamma:?} |- {goal}"));
            }
            match synthesize_proof(&gamma, goal) {
                Some(proof) if check_proof(&gamma, &proof, goal).is_err() => bad_proofs += 1,
                None if syntactic => missing_proofs += 1,
                Some(_) if !syntactic => bad_proofs += 1,
                _ => {}
            }
        }
    }
    let pass = disagreements == 0 && bad_proofs == 0 && missing_proofs == 0;
    outcome(
        pass,
        format!(
            "{checked} pairs, {disagreements} disagreements, {bad_proofs} invalid proofs, {missing_proofs} missing proofs{}",
            first.map(|s| format!("; {s}")).unwrap_or_default()
        ),
    )
}

fn reduced_model_census() -> Outcome {
    let expected =
        [(UnaryAlgebra::a1(), Subset::EMPTY), (UnaryAlgebra::a2(), set(&[0])), (UnaryAlgebra::a3(), set(&[0]))];
    let mut found = [false; 3];
    let mut unexpected = Vec::new();
    let mut total = 0;
    for m in 1..=5 {
        for alg in enumerate_algebras(m, DEFAULT_ENUMERATION_CAP).unwrap() {
            for f in Subset::all(m) {
                if !is_reduced_model(&alg, f).unwrap() {
                    continue;
                }
                total += 1;
                match expected.iter().position(|(b, g)| matrix_isomorphic(&alg, f, b, *g)) {
                    Some(k) => found[k] = true,
                    None => unexpected.push((alg.clone(), f)),
                }
            }
        }
    }
    let absent: Vec<String> = expected
        .iter()
        .zip(found)
        .filter(|(_, hit)| !hit)
        .map(|((a, f), _)| format!("neg {:?} F={f}", a.table()))
        .collect();
    let extra: Vec<String> = unexpected.iter().map(|(a, f)| format!("neg {:?} F={f}", a.table())).collect();
    let larger_extra = unexpected.iter().filter(|(a, _)| a.size() >= 2).count();
    outcome(
        absent.is_empty() && unexpected.is_empty(),
        format!(
            "{total} reduced models found; missing: [{}]; outside the expected list: [{}]; extras on carriers of size >= 2: {larger_extra}",
            absent.join(", "),
            extra.join(", ")
        ),
    )
}

fn filter_generation_oracles() -> Outcome {
    let (mut checked, mut mismatches) = (0u64, 0u64);
    let mut first = None;
    for m in 1..=4 {
        for alg in all_tables(m) {
            for b in Subset::all(m) {
                checked += 1;
                let closed = generate_filter(&alg, b).unwrap();
                let fixpoint = generate_filter_fixpoint(&alg, b).unwrap();
                if closed != fixpoint {
                    mismatches += 1;
                    first
                        .get_or_insert_with(|| format!("; first: neg {:?} B={b}: {closed} vs {fixpoint}", alg.table()));
                }
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{checked} (table, B) pairs, {mismatches} mismatches{}", first.unwrap_or_default()),
    )
}

fn full_gmodel_equivalence() -> Outcome {
    let (mut checked, mut full, mut mismatches) = (0, 0, 0);
    let mut first = None;
    for m in 1..=3 {
        for alg in all_tables(m) {
            for sys in enumerate_closure_systems(&alg).unwrap() {
                checked += 1;
                let by_flags = sys.check_full(DEFAULT_FULL_CAP).unwrap().full;
                let by_reduction = sys.is_full_by_reduction(DEFAULT_FILTER_CAP).unwrap();
                full += by_flags as usize;
                if by_flags != by_reduction {
                    mismatches += 1;
                    first.get_or_insert_with(|| format!("; first: neg {:?} {:?}", alg.table(), sys.family()));
                }
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{checked} closure systems, {full} full, {mismatches} mismatches{}", first.unwrap_or_default()),
    )
}

fn class_witnesses() -> Outcome {
    let two_fix = UnaryAlgebra::two_fix();
    let bool4 = UnaryAlgebra::bool4_neg();
    let frege = |a: &UnaryAlgebra| in_alg_by_frege(a, DEFAULT_FILTER_CAP).unwrap();
    let checks = [
        ("TWO_FIX in V", in_v(&two_fix)),
        ("TWO_FIX not in Alg", !in_alg(&two_fix)),
        ("TWO_FIX not in Alg by Frege", !frege(&two_fix)),
        ("BOOL4_NEG in Alg", in_alg(&bool4)),
        ("BOOL4_NEG in Alg by Frege", frege(&bool4)),
        ("BOOL4_NEG not in Alg*", !in_alg_star(&bool4)),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    outcome(
        failed.is_empty(),
        if failed.is_empty() { "all six checks hold".into() } else { format!("failed: {}", failed.join(", ")) },
    )
}

fn hierarchy_counterexample() -> Outcome {
    let a3 = UnaryAlgebra::a3();
    let f = set(&[0]);
    let lambda = suszko_like_relation(&a3, f).unwrap();
    let omega = leibniz_congruence(&a3, f).unwrap();
    let probe = fully_fregean_probe(&a3, f).unwrap();
    let pass = lambda.related(1, 2) && !omega.related(1, 2) && !probe.holds && probe.witness == Some((1, 2));
    outcome(
        pass,
        format!("Lambda = {lambda}, Omega = {omega}, probe holds = {}, witness = {:?}", probe.holds, probe.witness),
    )
}

fn frege_violation(sys: &ClosureSystem) -> Option<bool> {
    let report = sys.check_full(DEFAULT_FULL_CAP).unwrap();
    if !(report.flags[4].holds && report.flags[6].holds) {
        return None;
    }
    let frege = &report.frege;
    let alg = sys.algebra();
    let violated = frege.pairs().any(|(a, b)| !frege.related(alg.neg(a), alg.neg(b)));
    Some(violated)
}

fn frege_congruence() -> Outcome {
    let (mut exhaustive, mut exhaustive_hyp, mut violations) = (0, 0, 0);
    for m in 1..=3 {
        for alg in all_tables(m) {
            for sys in enumerate_closure_systems(&alg).unwrap() {
                exhaustive += 1;
                if let Some(bad) = frege_violation(&sys) {
                    exhaustive_hyp += 1;
                    violations += bad as usize;
                }
            }
        }
    }
    let mut random = RandomSystems::new(0x5eed_0004);
    let mut random_hyp = 0;
    for k in 0..1000 {
        let alg = random.algebra(4);
        // Every other sample draws its members among the filters, which
        // makes the F5/F7 hypothesis far more likely to hold.
        let sys = if k % 2 == 0 {
            random.system(&alg)
        } else {
            let filters = all_filters(&alg, DEFAULT_FILTER_CAP).unwrap();
            let pick = random.system(&alg);
            let members = filters.iter().copied().filter(|f| pick.family().contains(f) || f.len() % 2 == k % 4 / 2);
            ClosureSystem::generated_by(alg.clone(), members).unwrap()
        };
        if let Some(bad) = frege_violation(&sys) {
            random_hyp += 1;
            violations += bad as usize;
        }
    }
    outcome(
        violations == 0,
        format!(
            "{exhaustive} systems on carriers <= 3 ({exhaustive_hyp} satisfy F5 and F7), 1000 random at size 4 ({random_hyp} satisfy F5 and F7), {violations} violations"
        ),
    )
}

fn v_filter_triviality() -> Outcome {
    let (mut checked, mut violations) = (0, 0);
    for m in 1..=5 {
        for alg in all_tables(m).filter(|a| a.satisfies_double_negation()) {
            for b in Subset::all(m) {
                checked += 1;
                let g = generate_filter(&alg, b).unwrap();
                if g != b && g != Subset::full(m) {
                    violations += 1;
                }
            }
        }
    }
    outcome(violations == 0, format!("{checked} (involution, B) pairs, {violations} violations"))
}

const GOLDEN: [CensusRow; 6] = [
    CensusRow { size: 1, total_classes: 1, in_v: 1, in_alg: 1, in_alg_star: 1, reduced_matrix_count: 2 },
    CensusRow { size: 2, total_classes: 3, in_v: 2, in_alg: 1, in_alg_star: 1, reduced_matrix_count: 2 },
    CensusRow { size: 3, total_classes: 7, in_v: 2, in_alg: 1, in_alg_star: 1, reduced_matrix_count: 2 },
    CensusRow { size: 4, total_classes: 19, in_v: 3, in_alg: 1, in_alg_star: 0, reduced_matrix_count: 0 },
    CensusRow { size: 5, total_classes: 47, in_v: 3, in_alg: 1, in_alg_star: 0, reduced_matrix_count: 0 },
    CensusRow { size: 6, total_classes: 130, in_v: 4, in_alg: 1, in_alg_star: 0, reduced_matrix_count: 0 },
];

fn census_monotonicity() -> Outcome {
    let rows = census(6, DEFAULT_ENUMERATION_CAP).unwrap();
    let monotone = rows.iter().all(CensusRow::is_monotone);
    let strict2 = rows[1].in_v > rows[1].in_alg;
    let strict4 = rows[3].in_alg > rows[3].in_alg_star;
    let golden = rows == GOLDEN;
    let table: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "{}:{}/{}/{}/{}/{}",
                r.size, r.total_classes, r.in_v, r.in_alg, r.in_alg_star, r.reduced_matrix_count
            )
        })
        .collect();
    outcome(
        monotone && strict2 && strict4 && golden,
        format!(
            "monotone {monotone}, strict at 2 {strict2}, strict at 4 {strict4}, golden {golden}; size:total/V/Alg/Alg*/reduced = {}",
            table.join(" ")
        ),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("entailment agreement", Duration::from_secs(10), entailment_agreement),
        ("reduced-model census", Duration::from_secs(60), reduced_model_census),
        ("filter-generation oracles", Duration::from_secs(60), filter_generation_oracles),
        ("full g-model equivalence", Duration::from_secs(120), full_gmodel_equivalence),
        ("class witnesses", Duration::from_secs(60), class_witnesses),
        ("hierarchy counterexample", Duration::from_secs(60), hierarchy_counterexample),
        ("Frege congruence", Duration::from_secs(120), frege_congruence),
        ("V-filter triviality", Duration::from_secs(60), v_filter_triviality),
        ("census monotonicity", Duration::from_secs(300), census_monotonicity),
    ];
    let mut failures = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *budget;
        let pass = out.pass && in_time;
        failures += !pass as usize;
        println!(
            "{} criterion {} ({name}): {} [{:.2}s, budget {}s]",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            out.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
