//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the library's own decision procedures for the
//! property being checked.

#![allow(dead_code)]

use neglogic::{ClosureSystem, Formula, FormulaSet, Partition, Subset, UnaryAlgebra};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn set(xs: &[usize]) -> Subset {
    xs.iter().copied().collect()
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

fn is_iso_map(a: &UnaryAlgebra, b: &UnaryAlgebra, p: &[usize]) -> bool {
    a.elements().all(|x| p[a.neg(x)] == b.neg(p[x]))
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &UnaryAlgebra, b: &UnaryAlgebra) -> bool {
    a.size() == b.size() && permutations(a.size()).iter().any(|p| is_iso_map(a, b, p))
}

/// Matrix isomorphism by trying every bijection.
pub fn matrix_isomorphic(a: &UnaryAlgebra, fa: Subset, b: &UnaryAlgebra, fb: Subset) -> bool {
    a.size() == b.size()
        && permutations(a.size())
            .iter()
            .any(|p| is_iso_map(a, b, p) && a.elements().all(|x| fa.contains(x) == fb.contains(p[x])))
}

fn power(alg: &UnaryAlgebra, a: usize, n: usize) -> usize {
    (0..n).fold(a, |x, _| alg.neg(x))
}

/// Length long enough to decide equality of eventually periodic traces.
pub fn trace_len(m: usize) -> usize {
    m + m * m
}

/// `a ≡ b` iff `¬ⁿa ∈ F ⟺ ¬ⁿb ∈ F` for every `n`.
pub fn trace_leibniz(alg: &UnaryAlgebra, f: Subset) -> Partition {
    let len = trace_len(alg.size());
    Partition::from_key(alg.size(), |a| (0..len).map(|n| f.contains(power(alg, a, n))).collect::<Vec<_>>())
}

/// `a ≡ b` iff `¬ⁿa ∈ S ⟺ ¬ⁿb ∈ S` for every member `S` and every `n`.
pub fn trace_tarski(sys: &ClosureSystem) -> Partition {
    let alg = sys.algebra();
    let len = trace_len(alg.size());
    Partition::from_key(alg.size(), |a| {
        sys.family().iter().flat_map(|s| (0..len).map(move |n| s.contains(power(alg, a, n)))).collect::<Vec<_>>()
    })
}

/// Closure computed straight from the family.
pub fn brute_closure(sys: &ClosureSystem, x: Subset) -> Subset {
    let mut out = Subset::full(sys.algebra().size());
    for &s in sys.family() {
        if x.is_subset_of(s) {
            out = out.intersection(s);
        }
    }
    out
}

/// The largest congruence below the Frege relation: `a ≡ b` iff
/// `C(¬ⁿa) = C(¬ⁿb)` for every `n`.
pub fn tarski_via_closures(sys: &ClosureSystem) -> Partition {
    let alg = sys.algebra();
    let len = trace_len(alg.size());
    Partition::from_key(alg.size(), |a| {
        (0..len).map(|n| brute_closure(sys, Subset::singleton(power(alg, a, n)))).collect::<Vec<_>>()
    })
}

/// Two-valued truth table over `{0 = false, 1 = true}` with `¬` swapping.
pub fn truth_table_entails(premises: &FormulaSet, goal: Formula) -> bool {
    let mut vars: Vec<usize> = premises.vars().into_iter().collect();
    if !vars.contains(&goal.var) {
        vars.push(goal.var);
    }
    let value = |f: &Formula, row: u64| {
        let k = vars.iter().position(|&v| v == f.var).unwrap();
        (row >> k & 1 == 1) ^ (f.depth % 2 == 1)
    };
    (0..1u64 << vars.len()).all(|row| !premises.iter().all(|p| value(p, row)) || value(&goal, row))
}

/// Premise sets of at most `max_len` formulas drawn from `pool`.
pub fn premise_sets(pool: &[Formula], max_len: usize) -> Vec<FormulaSet> {
    let mut out = vec![FormulaSet::new()];
    let mut frontier: Vec<(usize, Vec<Formula>)> = vec![(0, Vec::new())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (start, chosen) in &frontier {
            for (i, f) in pool.iter().enumerate().skip(*start) {
                let mut c = chosen.clone();
                c.push(*f);
                out.push(c.iter().copied().collect());
                next.push((i + 1, c));
            }
        }
        frontier = next;
    }
    out
}

/// Whether `F` is a model of the logic, checked against every valid
/// entailment with at most two premises over two variables and depth ≤ 3,
/// under every assignment of the variables into the algebra.
pub fn model_by_assignments(alg: &UnaryAlgebra, f: Subset) -> bool {
    let pool: Vec<Formula> = (0..2).flat_map(|v| (0..4).map(move |d| Formula::new(v, d))).collect();
    let valid: Vec<(FormulaSet, Formula)> = premise_sets(&pool, 2)
        .into_iter()
        .flat_map(|g| pool.iter().map(move |&phi| (g.clone(), phi)))
        .filter(|(g, phi)| truth_table_entails(g, *phi))
        .collect();
    let eval = |phi: &Formula, x: usize, y: usize| power(alg, if phi.var == 0 { x } else { y }, phi.depth);
    alg.elements().all(|x| {
        alg.elements().all(|y| {
            valid.iter().all(|(g, phi)| !g.iter().all(|p| f.contains(eval(p, x, y))) || f.contains(eval(phi, x, y)))
        })
    })
}

/// Every member is a model, checked by assignments.
pub fn gmodel_by_assignments(sys: &ClosureSystem) -> bool {
    sys.family().iter().all(|&s| model_by_assignments(sys.algebra(), s))
}

/// Subsets closed under the two filter conditions, found by sweeping.
pub fn brute_filters(alg: &UnaryAlgebra) -> Vec<Subset> {
    Subset::all(alg.size()).filter(|&f| model_by_assignments(alg, f)).collect()
}

/// A congruence is a partition whose classes `¬` maps into classes.
pub fn brute_is_congruence(alg: &UnaryAlgebra, p: &Partition) -> bool {
    p.pairs().all(|(a, b)| p.related(alg.neg(a), alg.neg(b)))
}

/// Random intersection-closed families, reproducible from `seed`.
pub struct RandomSystems {
    rng: StdRng,
}

impl RandomSystems {
    pub fn new(seed: u64) -> Self {
        RandomSystems { rng: StdRng::seed_from_u64(seed) }
    }

    pub fn algebra(&mut self, m: usize) -> UnaryAlgebra {
        UnaryAlgebra::new((0..m).map(|_| self.rng.gen_range(0..m)).collect()).unwrap()
    }

    pub fn system(&mut self, alg: &UnaryAlgebra) -> ClosureSystem {
        let m = alg.size();
        let count = self.rng.gen_range(0..=2 * m);
        let members: Vec<Subset> = (0..count).map(|_| Subset::from_bits(self.rng.gen_range(0..1u64 << m))).collect();
        ClosureSystem::generated_by(alg.clone(), members).unwrap()
    }
}
