//! Exhaustive search over quantity vectors in exact rational arithmetic.
//! Shares no code with the DP path; used to cross-check it.

use std::time::Instant;

use num_traits::{Signed, ToPrimitive};

use super::{DecideStats, Decision, Instance, ProblemKind, Witness};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default cap on visited search nodes.
pub const DEFAULT_NODE_LIMIT: u64 = 1 << 25;

pub fn oracle_decide(inst: &Instance) -> Result<Decision> {
    oracle_decide_with_limit(inst, DEFAULT_NODE_LIMIT)
}

/// Enumerates quantity vectors item by item, smallest quantity first, with
/// `q_i <= floor(remaining / w_i)` for unbounded kinds and `q_i <= 1` for 0-1
/// kinds. The first accepted vector in this order is returned.
///
/// Zero-weight items get quantity 0 in subset-sum kinds. In unbounded
/// knapsack a zero-weight item with positive profit answers yes immediately.
pub fn oracle_decide_with_limit(inst: &Instance, node_limit: u64) -> Result<Decision> {
    let start = Instant::now();
    let threshold = if inst.kind().is_knapsack() {
        Some(inst.require_threshold()?.clone())
    } else {
        None
    };
    let profits = inst.profits().unwrap_or(&[]);

    if inst.kind() == ProblemKind::UnboundedKnapsack {
        let free =
            (0..inst.len()).find(|&i| inst.weights()[i].is_zero() && profits[i].is_positive());
        if let Some(i) = free {
            let need = threshold
                .as_ref()
                .expect("knapsack threshold")
                .checked_div(&profits[i])?
                .ceil();
            let copies = need.to_u64().ok_or_else(|| {
                Error::ResourceLimit(format!("{need} copies do not fit a 64-bit quantity"))
            })?;
            let mut q = vec![0; inst.len()];
            q[i] = copies;
            return Ok(Decision::yes(
                Witness::new(q),
                DecideStats::search(0, start),
            ));
        }
    }

    let mut search = Search {
        inst,
        capacity: inst.target(),
        threshold,
        q: vec![0; inst.len()],
        nodes: 0,
        node_limit,
    };
    let found = search.visit(0, &Rational::zero(), &Rational::zero())?;
    let stats = DecideStats::search(search.nodes, start);
    Ok(if found {
        Decision::yes(Witness::new(search.q), stats)
    } else {
        Decision::no(stats)
    })
}

struct Search<'a> {
    inst: &'a Instance,
    /// W for subset-sum and knapsack kinds, half the total for partition.
    capacity: Rational,
    threshold: Option<Rational>,
    q: Vec<u64>,
    nodes: u64,
    node_limit: u64,
}

impl Search<'_> {
    /// Returns true with `self.q` holding an accepted vector.
    fn visit(&mut self, k: usize, weight: &Rational, profit: &Rational) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::ResourceLimit(format!(
                "exhaustive search exceeded {} nodes",
                self.node_limit
            )));
        }
        let kind = self.inst.kind();
        if let Some(v) = &self.threshold {
            // Remaining quantities at zero already give a feasible vector.
            if profit >= v {
                return Ok(true);
            }
        }
        if k == self.inst.len() {
            return Ok(!kind.is_knapsack() && weight == &self.capacity);
        }

        let w = &self.inst.weights()[k];
        let remaining = &self.capacity - weight;
        let max_q: u64 = if w.is_zero() {
            if kind.is_knapsack() && kind.is_zero_one() {
                1
            } else {
                0
            }
        } else {
            let fit = remaining.checked_div(w)?.floor();
            let fit = if fit.is_positive() {
                fit.to_u64().unwrap_or(u64::MAX)
            } else {
                0
            };
            if kind.is_zero_one() {
                fit.min(1)
            } else {
                fit
            }
        };

        let v = self.inst.profits().map(|p| p[k].clone());
        let mut weight = weight.clone();
        let mut profit = profit.clone();
        for count in 0..=max_q {
            self.q[k] = count;
            if self.visit(k + 1, &weight, &profit)? {
                return Ok(true);
            }
            weight += w;
            if let Some(v) = &v {
                profit += v;
            }
        }
        self.q[k] = 0;
        Ok(false)
    }
}
