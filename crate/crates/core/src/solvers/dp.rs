//! Exact decision by scaling to integers and running pseudo-polynomial DP.
//!
//! Every number is multiplied by the LCM of all denominators. The DP tables
//! are indexed by scaled weight, so their size is `items x (alpha * W + 1)`;
//! instances whose table exceeds the cell budget are refused rather than
//! attempted.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{DecideStats, Decision, Instance, ProblemKind, Witness};
use crate::error::{Error, Result};
use crate::rational::{lcm_denominators, Rational};

/// Default DP budget in table cells.
pub const DEFAULT_DP_BUDGET: u64 = 100_000_000;

/// Multiplies every number by the LCM `alpha` of all denominators.
/// An instance with no numbers scales by 1.
pub fn scale_to_integers(inst: &Instance) -> (Instance, BigInt) {
    let alpha = lcm_denominators(inst.values()).unwrap_or_else(|_| BigInt::one());
    (inst.map_values(|x| x.scale(&alpha)), alpha)
}

pub fn decide(inst: &Instance) -> Result<Decision> {
    decide_with_budget(inst, DEFAULT_DP_BUDGET)
}

pub fn decide_with_budget(inst: &Instance, budget: u64) -> Result<Decision> {
    let start = Instant::now();
    if inst.kind().is_knapsack() {
        inst.require_threshold()?;
    }
    let (scaled, alpha) = scale_to_integers(inst);
    let int = |x: &Rational| x.to_integer().expect("scaled values are integers");
    let weights: Vec<BigInt> = scaled.weights().iter().map(int).collect();

    let target = match inst.kind() {
        ProblemKind::Partition => {
            let total: BigInt = weights.iter().sum();
            if total.is_odd() {
                return Ok(Decision::no(DecideStats::dp(alpha, (0, 0), start)));
            }
            total / 2
        }
        _ => int(scaled.capacity().expect("capacity present")),
    };

    let rows = weights.len() as u64 + 1;
    let cols = target.to_u64().and_then(|c| c.checked_add(1));
    let cells = cols.and_then(|c| c.checked_mul(rows));
    let cap = match (cells, cols) {
        (Some(cells), Some(cols)) if cells <= budget => (cols - 1) as usize,
        _ => return Err(Error::ResourceLimit(format!(
            "DP table of {rows} x ({target} + 1) cells exceeds budget {budget} (alpha = {alpha})"
        ))),
    };
    let dims = (rows as usize, cap + 1);

    // Items heavier than the capacity can never be used.
    let small: Vec<Option<usize>> = weights
        .iter()
        .map(|w| w.to_usize().filter(|&w| w <= cap))
        .collect();

    let witness = match inst.kind() {
        ProblemKind::Partition | ProblemKind::SubsetSum01 => subset_sum_01(&small, cap),
        ProblemKind::UnboundedSubsetSum => unbounded_subset_sum(&small, cap),
        ProblemKind::Knapsack01 | ProblemKind::UnboundedKnapsack => {
            let profits: Vec<BigInt> = scaled.profits().expect("profits").iter().map(int).collect();
            let threshold = int(scaled.threshold().expect("threshold"));
            if inst.kind() == ProblemKind::Knapsack01 {
                knapsack_01(&small, &profits, cap, &threshold)
            } else {
                unbounded_knapsack(&small, &profits, cap, &threshold)?
            }
        }
    };
    let stats = DecideStats::dp(alpha, dims, start);
    Ok(match witness {
        Some(w) => Decision::yes(w, stats),
        None => Decision::no(stats),
    })
}

/// Zero-weight items are left out (quantity 0); they cannot change a sum.
fn subset_sum_01(weights: &[Option<usize>], cap: usize) -> Option<Witness> {
    // from[c] = item that first reached weight c; items are added in index order,
    // so following from[] back visits strictly decreasing item indices.
    let mut from: Vec<Option<u32>> = vec![None; cap + 1];
    let mut reach = vec![false; cap + 1];
    reach[0] = true;
    for (i, w) in weights.iter().enumerate() {
        let Some(w) = w.filter(|&w| w > 0) else {
            continue;
        };
        for c in (w..=cap).rev() {
            if !reach[c] && reach[c - w] {
                reach[c] = true;
                from[c] = Some(i as u32);
            }
        }
    }
    if !reach[cap] {
        return None;
    }
    let mut q = vec![0u64; weights.len()];
    let mut c = cap;
    while c > 0 {
        let i = from[c].expect("reachable weight has a parent") as usize;
        q[i] = 1;
        c -= weights[i].expect("used item fits");
    }
    Some(Witness::new(q))
}

fn unbounded_subset_sum(weights: &[Option<usize>], cap: usize) -> Option<Witness> {
    let items: Vec<(usize, usize)> = weights
        .iter()
        .enumerate()
        .filter_map(|(i, w)| w.filter(|&w| w > 0).map(|w| (i, w)))
        .collect();
    let mut from: Vec<Option<u32>> = vec![None; cap + 1];
    let mut reach = vec![false; cap + 1];
    reach[0] = true;
    for c in 1..=cap {
        // lowest item index wins
        if let Some(&(i, _)) = items.iter().find(|&&(_, w)| w <= c && reach[c - w]) {
            reach[c] = true;
            from[c] = Some(i as u32);
        }
    }
    if !reach[cap] {
        return None;
    }
    let mut q = vec![0u64; weights.len()];
    let mut c = cap;
    while c > 0 {
        let i = from[c].expect("reachable weight has a parent") as usize;
        q[i] += 1;
        c -= weights[i].expect("used item fits");
    }
    Some(Witness::new(q))
}

/// Row-major bit table for 0-1 knapsack choices.
struct BitTable {
    cols: usize,
    bits: Vec<u64>,
}

impl BitTable {
    fn new(rows: usize, cols: usize) -> Self {
        BitTable {
            cols,
            bits: vec![0; (rows * cols).div_ceil(64)],
        }
    }

    fn set(&mut self, r: usize, c: usize) {
        let k = r * self.cols + c;
        self.bits[k / 64] |= 1 << (k % 64);
    }

    fn get(&self, r: usize, c: usize) -> bool {
        let k = r * self.cols + c;
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }
}

/// `best[c]` is the largest profit with total weight at most `c`.
fn knapsack_01(
    weights: &[Option<usize>],
    profits: &[BigInt],
    cap: usize,
    threshold: &BigInt,
) -> Option<Witness> {
    let mut best = vec![BigInt::zero(); cap + 1];
    let mut take = BitTable::new(weights.len(), cap + 1);
    for (i, (w, v)) in weights.iter().zip(profits).enumerate() {
        let Some(w) = *w else { continue };
        if v.is_zero() {
            continue;
        }
        for c in (w..=cap).rev() {
            let cand = &best[c - w] + v;
            if cand > best[c] {
                best[c] = cand;
                take.set(i, c);
            }
        }
    }
    if &best[cap] < threshold {
        return None;
    }
    let mut q = vec![0u64; weights.len()];
    let mut c = cap;
    for i in (0..weights.len()).rev() {
        if take.get(i, c) {
            q[i] = 1;
            c -= weights[i].expect("taken item fits");
        }
    }
    Some(Witness::new(q))
}

fn unbounded_knapsack(
    weights: &[Option<usize>],
    profits: &[BigInt],
    cap: usize,
    threshold: &BigInt,
) -> Result<Option<Witness>> {
    let n = weights.len();
    // A free item with positive profit reaches any threshold on its own.
    if let Some(i) = (0..n).find(|&i| weights[i] == Some(0) && !profits[i].is_zero()) {
        let copies = threshold.div_ceil(&profits[i]);
        let copies = copies.to_u64().ok_or_else(|| {
            Error::ResourceLimit(format!("{copies} copies do not fit a 64-bit quantity"))
        })?;
        let mut q = vec![0u64; n];
        q[i] = copies;
        return Ok(Some(Witness::new(q)));
    }
    let items: Vec<(usize, usize)> = weights
        .iter()
        .enumerate()
        .filter_map(|(i, w)| {
            w.filter(|&w| w > 0 && !profits[i].is_zero())
                .map(|w| (i, w))
        })
        .collect();

    const INHERIT: u32 = u32::MAX;
    let mut best = vec![BigInt::zero(); cap + 1];
    let mut choice = vec![INHERIT; cap + 1];
    for c in 1..=cap {
        let mut top = best[c - 1].clone();
        let mut pick = INHERIT;
        for &(i, w) in &items {
            if w <= c {
                let cand = &best[c - w] + &profits[i];
                if cand > top {
                    top = cand;
                    pick = i as u32;
                }
            }
        }
        best[c] = top;
        choice[c] = pick;
    }
    if &best[cap] < threshold {
        return Ok(None);
    }
    let mut q = vec![0u64; n];
    let mut c = cap;
    while c > 0 {
        match choice[c] {
            INHERIT => c -= 1,
            i => {
                q[i as usize] += 1;
                c -= weights[i as usize].expect("chosen item fits");
            }
        }
    }
    Ok(Some(Witness::new(q)))
}
