#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use strongrat::rational::rat;
use strongrat::sat::{Clause, Formula, Literal, SatMode};
use strongrat::solvers::{Instance, ProblemKind};
use strongrat::Rational;

/// Nondecreasing index tuples of length `len` over `0..pool` (multisets).
pub fn multisets(pool: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(pool: usize, len: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in from..pool {
            cur.push(i);
            go(pool, len, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, len, 0, &mut Vec::new(), &mut out);
    out
}

fn literal(code: usize) -> Literal {
    // code 2(i-1) is x_i, 2(i-1)+1 is !x_i
    let var = code / 2 + 1;
    if code.is_multiple_of(2) {
        Literal::pos(var)
    } else {
        Literal::neg(var)
    }
}

/// Every formula with `1 <= n <= max_n` variables and `1 <= m <= max_m`
/// clauses, clauses taken as literal multisets and formulas as clause
/// multisets (reordering symmetry removed), keeping only those where each
/// variable occurs at most four times.
pub fn structured_family(max_n: usize, max_m: usize) -> Vec<Formula> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let clauses: Vec<Clause> = multisets(2 * n, 3)
            .into_iter()
            .map(|c| Clause::new(literal(c[0]), literal(c[1]), literal(c[2])))
            .collect();
        for m in 1..=max_m {
            for pick in multisets(clauses.len(), m) {
                let f = Formula::new(n, pick.iter().map(|&k| clauses[k]).collect()).unwrap();
                if f.is_3cnf_le4() {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// A random formula with each variable occurring at most four times.
pub fn random_le4_formula(rng: &mut StdRng, max_n: usize, max_m: usize) -> Formula {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m).min(4 * n / 3).max(1);
    let mut budget = vec![4usize; n];
    let mut clauses = Vec::with_capacity(m);
    for _ in 0..m {
        let mut lits = [Literal::pos(1); 3];
        for slot in &mut lits {
            let open: Vec<usize> = (0..n).filter(|&i| budget[i] > 0).collect();
            let i = *open.choose(rng).expect("capacity 4n >= 3m");
            budget[i] -= 1;
            *slot = if rng.gen_bool(0.5) {
                Literal::pos(i + 1)
            } else {
                Literal::neg(i + 1)
            };
        }
        clauses.push(Clause(lits));
    }
    Formula::new(n, clauses).unwrap()
}

/// Exhaustive decider with early pruning, used where `2^n` enumeration is too
/// slow. Assigns variables in index order and rejects a partial valuation as
/// soon as some clause can no longer meet the mode's requirement. For
/// all-the-same the common count is fixed up front and each value tried.
pub fn backtracking_decide(f: &Formula, mode: SatMode) -> bool {
    let n = f.num_vars();
    let mut by_var: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut last_var = vec![0usize; f.num_clauses()];
    for (j, c) in f.clauses().iter().enumerate() {
        for l in c.literals() {
            if !by_var[l.var].contains(&j) {
                by_var[l.var].push(j);
            }
            last_var[j] = last_var[j].max(l.var);
        }
    }
    let targets: Vec<Option<u8>> = match mode {
        SatMode::AllSame => (0..=3).map(Some).collect(),
        _ => vec![None],
    };
    targets.into_iter().any(|target| {
        let mut values = vec![None; n + 1];
        assign(f, mode, target, &by_var, 1, &mut values)
    })
}

fn clause_ok(c: &Clause, values: &[Option<bool>], mode: SatMode, target: Option<u8>) -> bool {
    let mut t = 0u8;
    let mut open = 0u8;
    for l in c.literals() {
        match values[l.var] {
            Some(v) if v == l.positive => t += 1,
            Some(_) => {}
            None => open += 1,
        }
    }
    match mode {
        SatMode::Sat => t + open >= 1,
        SatMode::OneInThree => t <= 1 && t + open >= 1,
        SatMode::AllSame => {
            let k = target.expect("target count");
            t <= k && t + open >= k
        }
    }
}

fn assign(
    f: &Formula,
    mode: SatMode,
    target: Option<u8>,
    by_var: &[Vec<usize>],
    var: usize,
    values: &mut Vec<Option<bool>>,
) -> bool {
    if var > f.num_vars() {
        return true;
    }
    for choice in [false, true] {
        values[var] = Some(choice);
        let ok = by_var[var]
            .iter()
            .all(|&j| clause_ok(&f.clauses()[j], values, mode, target));
        if ok && assign(f, mode, target, by_var, var + 1, values) {
            values[var] = None;
            return true;
        }
    }
    values[var] = None;
    false
}

pub fn random_rational(rng: &mut StdRng, max_num: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(0..=max_num), rng.gen_range(1..=max_den))
}

/// Random instance of the given kind with `1..=max_items` items; the target is
/// built from a random sub-multiset half of the time so yes-answers are common.
pub fn random_instance(
    rng: &mut StdRng,
    kind: ProblemKind,
    max_items: usize,
    max_den: i64,
) -> Instance {
    let len = rng.gen_range(1..=max_items);
    let weights: Vec<Rational> = (0..len)
        .map(|_| random_rational(rng, 10, max_den))
        .collect();
    let planted = |rng: &mut StdRng, xs: &[Rational], reuse: bool| -> Rational {
        xs.iter()
            .map(|x| {
                let q = if reuse {
                    rng.gen_range(0..=2)
                } else {
                    rng.gen_range(0..=1)
                };
                x * &Rational::from_integer(q)
            })
            .sum()
    };
    let reuse = !kind.is_zero_one();
    match kind {
        ProblemKind::Partition => Instance::partition(weights).unwrap(),
        ProblemKind::SubsetSum01 | ProblemKind::UnboundedSubsetSum => {
            let target = if rng.gen_bool(0.5) {
                planted(rng, &weights, reuse)
            } else {
                random_rational(rng, 20, max_den)
            };
            Instance::new(kind, weights, None, Some(target), None).unwrap()
        }
        ProblemKind::Knapsack01 | ProblemKind::UnboundedKnapsack => {
            let profits: Vec<Rational> = (0..len)
                .map(|_| random_rational(rng, 10, max_den))
                .collect();
            let capacity = random_rational(rng, 20, max_den);
            let threshold = if rng.gen_bool(0.5) {
                planted(rng, &profits, reuse)
            } else {
                random_rational(rng, 20, max_den)
            };
            Instance::new(
                kind,
                weights,
                Some(profits),
                Some(capacity),
                Some(threshold),
            )
            .unwrap()
        }
    }
}

/// Exhaustive small instances for every kind over fixed pools of rationals
/// with denominators at most 10: up to 5 items for partition and subset sum,
/// up to 4 for the knapsack kinds.
pub fn exhaustive_instances() -> Vec<Instance> {
    let weight_pool = [
        rat(0, 1),
        rat(1, 10),
        rat(1, 3),
        rat(1, 2),
        rat(2, 3),
        rat(1, 1),
        rat(7, 5),
    ];
    let targets = [rat(0, 1), rat(1, 2), rat(1, 1), rat(3, 2), rat(7, 3)];
    let pair_w = [rat(1, 3), rat(1, 2), rat(1, 1)];
    let pair_v = [rat(1, 4), rat(2, 3), rat(1, 1)];
    let pairs: Vec<(Rational, Rational)> = pair_w
        .iter()
        .flat_map(|w| pair_v.iter().map(move |v| (w.clone(), v.clone())))
        .chain([(rat(0, 1), rat(1, 5)), (rat(3, 4), rat(0, 1))])
        .collect();
    let caps = [rat(0, 1), rat(1, 2), rat(6, 5)];
    let thresholds = [rat(0, 1), rat(1, 2), rat(5, 3)];

    let mut out = Vec::new();
    for len in 0..=5 {
        for pick in multisets(weight_pool.len(), len) {
            let ws: Vec<Rational> = pick.iter().map(|&k| weight_pool[k].clone()).collect();
            out.push(Instance::partition(ws.clone()).unwrap());
            for t in &targets {
                out.push(Instance::subset_sum_01(ws.clone(), t.clone()).unwrap());
                out.push(Instance::unbounded_subset_sum(ws.clone(), t.clone()).unwrap());
            }
        }
    }
    for len in 0..=4 {
        for pick in multisets(pairs.len(), len) {
            let items: Vec<(Rational, Rational)> = pick.iter().map(|&k| pairs[k].clone()).collect();
            for c in &caps {
                for v in &thresholds {
                    out.push(
                        Instance::knapsack_01(items.clone(), c.clone(), Some(v.clone())).unwrap(),
                    );
                    out.push(
                        Instance::unbounded_knapsack(items.clone(), c.clone(), Some(v.clone()))
                            .unwrap(),
                    );
                }
            }
        }
    }
    out
}

/// Random 0-1 knapsack instance without threshold.
pub fn random_knapsack(rng: &mut StdRng, max_items: usize, max_den: i64) -> Instance {
    let len = rng.gen_range(1..=max_items);
    let items: Vec<(Rational, Rational)> = (0..len)
        .map(|_| {
            (
                rat(rng.gen_range(1..=30), rng.gen_range(1..=max_den)),
                rat(rng.gen_range(0..=30), rng.gen_range(1..=max_den)),
            )
        })
        .collect();
    let total: Rational = items.iter().map(|(w, _)| w).sum();
    // capacity somewhere between 0 and the total weight
    let frac = rat(rng.gen_range(1..=9), 10);
    Instance::knapsack_01(items, total * frac, None).unwrap()
}
