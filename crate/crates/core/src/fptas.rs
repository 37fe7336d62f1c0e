//! Approximation scheme for 0-1 knapsack with rational weights and profits.
//!
//! The instance is first scaled to integers by the LCM of its denominators,
//! which multiplies every subset's profit by the same factor and so keeps
//! relative performance. The integer instance is then solved with the
//! profit-scaling scheme: profits are rounded down to multiples of
//! `K = rho * v_max / n` and a minimum-weight table over rounded profit picks
//! the best subset that fits. The result is within `(1 - rho)` of optimal.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::solvers::{scale_to_integers, Instance, ProblemKind, Witness};

/// Subset enumeration limit for [`knapsack_opt_exact`].
pub const MAX_ENUMERATION_ITEMS: usize = 20;

/// Cell budget for the exact profit DP fallback.
pub const DEFAULT_OPT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxParams {
    rho: Rational,
}

impl ApproxParams {
    pub fn new(rho: Rational) -> Result<Self> {
        if !rho.is_positive() || rho >= Rational::one() {
            return Err(Error::Parameter(format!(
                "rho must lie in (0, 1), got {rho}"
            )));
        }
        Ok(ApproxParams { rho })
    }

    pub fn rho(&self) -> &Rational {
        &self.rho
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub subset: Witness,
    pub achieved_profit: Rational,
    pub alpha: BigInt,
    /// Size of the rounded-profit table that was filled.
    pub dp_cells: u64,
}

fn require_knapsack_01(inst: &Instance) -> Result<()> {
    if inst.kind() != ProblemKind::Knapsack01 {
        return Err(Error::Shape(format!(
            "approximation needs a knapsack-01 instance, got {}",
            inst.kind()
        )));
    }
    Ok(())
}

/// Returns a feasible subset with profit at least `(1 - rho) * OPT`.
/// A threshold on the instance, if any, is ignored.
pub fn knapsack_fptas(inst: &Instance, params: &ApproxParams) -> Result<ApproxResult> {
    require_knapsack_01(inst)?;
    let (scaled, alpha) = scale_to_integers(inst);
    let int = |x: &Rational| x.to_integer().expect("scaled values are integers");
    let capacity = int(scaled.capacity().expect("capacity"));
    let profits = scaled.profits().expect("profits");

    // Items heavier than the capacity are never feasible.
    let items: Vec<(usize, BigInt, BigInt)> = scaled
        .weights()
        .iter()
        .zip(profits)
        .enumerate()
        .map(|(i, (w, v))| (i, int(w), int(v)))
        .filter(|(_, w, _)| w <= &capacity)
        .collect();

    let empty = |cells| ApproxResult {
        subset: Witness::zeros(inst.len()),
        achieved_profit: Rational::zero(),
        alpha: alpha.clone(),
        dp_cells: cells,
    };
    let Some(v_max) = items.iter().map(|(_, _, v)| v).max().cloned() else {
        return Ok(empty(0));
    };
    if v_max.is_zero() {
        return Ok(empty(0));
    }

    // rounded_i = floor(v_i * n / (rho * v_max)) with rho = a/b
    let n = BigInt::from(items.len());
    let (rho_num, rho_den) = (params.rho.numer(), params.rho.denom());
    let divisor = rho_num * &v_max;
    let rounded: Vec<usize> = items
        .iter()
        .map(|(_, _, v)| {
            (v * &n * rho_den / &divisor)
                .to_usize()
                .ok_or_else(|| Error::ResourceLimit("rounded profit overflow".into()))
        })
        .collect::<Result<_>>()?;
    let total: usize = rounded.iter().sum();
    let cols = total + 1;
    let dp_cells = (items.len() as u64) * cols as u64;

    // min_weight[p] = least weight reaching rounded profit exactly p
    let mut min_weight: Vec<Option<BigInt>> = vec![None; cols];
    min_weight[0] = Some(BigInt::zero());
    let mut take = vec![false; items.len() * cols];
    for (k, ((_, w, _), &r)) in items.iter().zip(&rounded).enumerate() {
        for p in (r..cols).rev() {
            let Some(base) = &min_weight[p - r] else {
                continue;
            };
            let cand = base + w;
            if min_weight[p].as_ref().is_none_or(|cur| &cand < cur) {
                min_weight[p] = Some(cand);
                take[k * cols + p] = true;
            }
        }
    }
    let best = (0..cols)
        .rev()
        .find(|&p| min_weight[p].as_ref().is_some_and(|w| w <= &capacity))
        .expect("profit 0 has weight 0");

    let mut q = vec![0u64; inst.len()];
    let mut p = best;
    for k in (0..items.len()).rev() {
        if take[k * cols + p] {
            q[items[k].0] = 1;
            p -= rounded[k];
        }
    }
    let subset = Witness::new(q);
    let achieved_profit = subset.dot(inst.profits().expect("profits"));
    Ok(ApproxResult {
        subset,
        achieved_profit,
        alpha,
        dp_cells,
    })
}

/// Exact optimum by subset enumeration (up to [`MAX_ENUMERATION_ITEMS`]
/// items) or, beyond that, a DP over scaled integer profits.
pub fn knapsack_opt_exact(inst: &Instance) -> Result<Rational> {
    require_knapsack_01(inst)?;
    if inst.len() <= MAX_ENUMERATION_ITEMS {
        let profits = inst.profits().expect("profits");
        let capacity = inst.capacity().expect("capacity");
        let mut best = Rational::zero();
        enumerate(
            inst.weights(),
            profits,
            capacity,
            0,
            Rational::zero(),
            Rational::zero(),
            &mut best,
        );
        Ok(best)
    } else {
        opt_by_profit_dp(inst, DEFAULT_OPT_BUDGET)
    }
}

fn enumerate(
    weights: &[Rational],
    profits: &[Rational],
    capacity: &Rational,
    k: usize,
    weight: Rational,
    profit: Rational,
    best: &mut Rational,
) {
    if k == weights.len() {
        if &profit > best {
            *best = profit;
        }
        return;
    }
    let with = &weight + &weights[k];
    if &with <= capacity {
        enumerate(
            weights,
            profits,
            capacity,
            k + 1,
            with,
            &profit + &profits[k],
            best,
        );
    }
    enumerate(weights, profits, capacity, k + 1, weight, profit, best);
}

fn opt_by_profit_dp(inst: &Instance, budget: u64) -> Result<Rational> {
    let (scaled, alpha) = scale_to_integers(inst);
    let int = |x: &Rational| x.to_integer().expect("scaled values are integers");
    let capacity = int(scaled.capacity().expect("capacity"));
    let weights: Vec<BigInt> = scaled.weights().iter().map(int).collect();
    let profits: Vec<BigInt> = scaled.profits().expect("profits").iter().map(int).collect();
    let total: BigInt = profits.iter().sum();
    let cols = total
        .to_u64()
        .and_then(|t| t.checked_add(1))
        .filter(|&c| c.saturating_mul(weights.len() as u64) <= budget)
        .ok_or_else(|| {
            Error::ResourceLimit(format!("profit table over {total} exceeds budget {budget}"))
        })? as usize;
    let mut min_weight: Vec<Option<BigInt>> = vec![None; cols];
    min_weight[0] = Some(BigInt::zero());
    for (w, v) in weights.iter().zip(&profits) {
        let v = v.to_usize().expect("bounded by total");
        for p in (v..cols).rev() {
            if let Some(base) = &min_weight[p - v] {
                let cand = base + w;
                if min_weight[p].as_ref().is_none_or(|cur| &cand < cur) {
                    min_weight[p] = Some(cand);
                }
            }
        }
    }
    let best = (0..cols)
        .rev()
        .find(|&p| min_weight[p].as_ref().is_some_and(|w| w <= &capacity))
        .expect("profit 0 has weight 0");
    Ok(Rational::new(BigInt::from(best), alpha).expect("alpha is positive"))
}
