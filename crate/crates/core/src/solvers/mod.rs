//! Exact decision procedures for partition, subset sum and knapsack over
//! rational data, plus witness checking and size measurement.

mod dp;
mod instance;
mod oracle;
mod sizes;

use std::time::{Duration, Instant};

use num_bigint::BigInt;

pub use dp::{decide, decide_with_budget, scale_to_integers, DEFAULT_DP_BUDGET};
pub use instance::{verify_witness, Instance, ProblemKind, Witness};
pub use oracle::{oracle_decide, oracle_decide_with_limit, DEFAULT_NODE_LIMIT};
pub use sizes::{measure_sizes, SizeReport};

/// Diagnostics attached to a decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecideStats {
    /// Scaling factor, for the DP path.
    pub alpha: Option<BigInt>,
    /// `(rows, columns)` of the DP table; `(0, 0)` when decided before building it.
    pub table_dims: Option<(usize, usize)>,
    /// Nodes visited, for the exhaustive path.
    pub nodes_visited: Option<u64>,
    pub elapsed: Duration,
}

impl DecideStats {
    fn dp(alpha: BigInt, dims: (usize, usize), start: Instant) -> Self {
        DecideStats {
            alpha: Some(alpha),
            table_dims: Some(dims),
            nodes_visited: None,
            elapsed: start.elapsed(),
        }
    }

    fn search(nodes: u64, start: Instant) -> Self {
        DecideStats {
            alpha: None,
            table_dims: None,
            nodes_visited: Some(nodes),
            elapsed: start.elapsed(),
        }
    }
}

/// Outcome of a decision procedure; a witness is present exactly on yes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    pub witness: Option<Witness>,
    pub stats: DecideStats,
}

impl Decision {
    fn yes(witness: Witness, stats: DecideStats) -> Self {
        Decision {
            answer: true,
            witness: Some(witness),
            stats,
        }
    }

    fn no(stats: DecideStats) -> Self {
        Decision {
            answer: false,
            witness: None,
            stats,
        }
    }
}
