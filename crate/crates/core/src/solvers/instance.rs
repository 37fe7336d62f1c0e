use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Partition,
    SubsetSum01,
    UnboundedSubsetSum,
    Knapsack01,
    UnboundedKnapsack,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 5] = [
        ProblemKind::Partition,
        ProblemKind::SubsetSum01,
        ProblemKind::UnboundedSubsetSum,
        ProblemKind::Knapsack01,
        ProblemKind::UnboundedKnapsack,
    ];

    pub fn is_knapsack(self) -> bool {
        matches!(
            self,
            ProblemKind::Knapsack01 | ProblemKind::UnboundedKnapsack
        )
    }

    /// Quantities restricted to {0, 1}.
    pub fn is_zero_one(self) -> bool {
        !matches!(
            self,
            ProblemKind::UnboundedSubsetSum | ProblemKind::UnboundedKnapsack
        )
    }

    pub fn has_capacity(self) -> bool {
        self != ProblemKind::Partition
    }

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Partition => "partition",
            ProblemKind::SubsetSum01 => "subset-sum-01",
            ProblemKind::UnboundedSubsetSum => "subset-sum-unbounded",
            ProblemKind::Knapsack01 => "knapsack-01",
            ProblemKind::UnboundedKnapsack => "knapsack-unbounded",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(1, format!("unknown problem kind {s:?}")))
    }
}

/// A decision instance with non-negative rational data.
///
/// Knapsack kinds carry profits; their threshold may be left out, which
/// makes the instance usable for approximation but not for decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    kind: ProblemKind,
    weights: Vec<Rational>,
    profits: Option<Vec<Rational>>,
    capacity: Option<Rational>,
    threshold: Option<Rational>,
}

impl Instance {
    pub fn new(
        kind: ProblemKind,
        weights: Vec<Rational>,
        profits: Option<Vec<Rational>>,
        capacity: Option<Rational>,
        threshold: Option<Rational>,
    ) -> Result<Self> {
        if kind.is_knapsack() != profits.is_some() {
            return Err(Error::Shape(format!(
                "{kind} {} profits",
                if kind.is_knapsack() {
                    "requires"
                } else {
                    "takes no"
                }
            )));
        }
        if kind.has_capacity() != capacity.is_some() {
            return Err(Error::Shape(format!(
                "{kind} {} a capacity",
                if kind.has_capacity() {
                    "requires"
                } else {
                    "takes no"
                }
            )));
        }
        if !kind.is_knapsack() && threshold.is_some() {
            return Err(Error::Shape(format!("{kind} takes no threshold")));
        }
        if let Some(p) = &profits {
            if p.len() != weights.len() {
                return Err(Error::Shape(format!(
                    "{} weights but {} profits",
                    weights.len(),
                    p.len()
                )));
            }
        }
        let all = weights
            .iter()
            .chain(profits.iter().flatten())
            .chain(capacity.iter())
            .chain(threshold.iter());
        if let Some(bad) = all.into_iter().find(|x| x.is_negative()) {
            return Err(Error::OutOfRange(format!("negative value {bad}")));
        }
        Ok(Instance {
            kind,
            weights,
            profits,
            capacity,
            threshold,
        })
    }

    pub fn partition(weights: Vec<Rational>) -> Result<Self> {
        Self::new(ProblemKind::Partition, weights, None, None, None)
    }

    pub fn subset_sum_01(weights: Vec<Rational>, target: Rational) -> Result<Self> {
        Self::new(ProblemKind::SubsetSum01, weights, None, Some(target), None)
    }

    pub fn unbounded_subset_sum(weights: Vec<Rational>, target: Rational) -> Result<Self> {
        Self::new(
            ProblemKind::UnboundedSubsetSum,
            weights,
            None,
            Some(target),
            None,
        )
    }

    /// Items are `(weight, profit)` pairs.
    pub fn knapsack_01(
        items: Vec<(Rational, Rational)>,
        capacity: Rational,
        threshold: Option<Rational>,
    ) -> Result<Self> {
        let (w, v) = items.into_iter().unzip();
        Self::new(
            ProblemKind::Knapsack01,
            w,
            Some(v),
            Some(capacity),
            threshold,
        )
    }

    pub fn unbounded_knapsack(
        items: Vec<(Rational, Rational)>,
        capacity: Rational,
        threshold: Option<Rational>,
    ) -> Result<Self> {
        let (w, v) = items.into_iter().unzip();
        Self::new(
            ProblemKind::UnboundedKnapsack,
            w,
            Some(v),
            Some(capacity),
            threshold,
        )
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn profits(&self) -> Option<&[Rational]> {
        self.profits.as_deref()
    }

    pub fn capacity(&self) -> Option<&Rational> {
        self.capacity.as_ref()
    }

    pub fn threshold(&self) -> Option<&Rational> {
        self.threshold.as_ref()
    }

    pub fn total_weight(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Every number in the instance, in file order.
    pub fn values(&self) -> impl Iterator<Item = &Rational> {
        self.capacity
            .iter()
            .chain(self.threshold.iter())
            .chain(self.weights.iter())
            .chain(self.profits.iter().flatten())
    }

    /// The capacity for subset-sum and knapsack kinds, half the total for partition.
    pub fn target(&self) -> Rational {
        match &self.capacity {
            Some(c) => c.clone(),
            None => self.total_weight() * Rational::new(1, 2).expect("nonzero"),
        }
    }

    pub(crate) fn require_threshold(&self) -> Result<&Rational> {
        self.threshold
            .as_ref()
            .ok_or_else(|| Error::Shape(format!("{} decision needs a threshold", self.kind)))
    }

    /// Applies `f` to every number; used for scaling.
    pub(crate) fn map_values(&self, f: impl Fn(&Rational) -> Rational) -> Instance {
        Instance {
            kind: self.kind,
            weights: self.weights.iter().map(&f).collect(),
            profits: self.profits.as_ref().map(|p| p.iter().map(&f).collect()),
            capacity: self.capacity.as_ref().map(&f),
            threshold: self.threshold.as_ref().map(&f),
        }
    }

    /// Knapsack instance with profits equal to weights and threshold equal to
    /// capacity; it has the same answer as this subset-sum instance.
    pub fn knapsack_embedding(&self) -> Result<Instance> {
        let kind = match self.kind {
            ProblemKind::SubsetSum01 => ProblemKind::Knapsack01,
            ProblemKind::UnboundedSubsetSum => ProblemKind::UnboundedKnapsack,
            other => {
                return Err(Error::Shape(format!(
                    "knapsack embedding applies to subset-sum kinds, not {other}"
                )))
            }
        };
        Instance::new(
            kind,
            self.weights.clone(),
            Some(self.weights.clone()),
            self.capacity.clone(),
            self.capacity.clone(),
        )
    }

    /// Parses the instance text format.
    ///
    /// ```text
    /// problem: knapsack-01
    /// capacity: 5/6
    /// threshold: 13/12
    /// 1/2 3/4
    /// 1/3 1/3   # comment
    /// ```
    pub fn parse(text: &str) -> Result<Instance> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        });

        let (ln, first) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `problem:` line"))?;
        let kind: ProblemKind = header_value(ln, first, "problem")?
            .parse()
            .map_err(|_| Error::parse(ln, format!("unknown problem kind in {first:?}")))?;

        let mut lines = lines.peekable();
        let mut capacity = None;
        let mut threshold = None;
        if kind.has_capacity() {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| Error::parse(ln + 1, "missing `capacity:` line"))?;
            capacity = Some(parse_rational(ln, header_value(ln, line, "capacity")?)?);
        }
        if kind.is_knapsack() {
            if let Some(&(ln, line)) = lines.peek() {
                if line.starts_with("threshold") {
                    threshold = Some(parse_rational(ln, header_value(ln, line, "threshold")?)?);
                    lines.next();
                }
            }
        }

        let mut weights = Vec::new();
        let mut profits = kind.is_knapsack().then(Vec::new);
        for (ln, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (&mut profits, fields.as_slice()) {
                (None, [w]) => weights.push(parse_rational(ln, w)?),
                (Some(ps), [w, v]) => {
                    weights.push(parse_rational(ln, w)?);
                    ps.push(parse_rational(ln, v)?);
                }
                _ => {
                    return Err(Error::parse(
                        ln,
                        format!(
                            "expected {} per item line, got {line:?}",
                            if kind.is_knapsack() {
                                "`<weight> <profit>`"
                            } else {
                                "`<weight>`"
                            }
                        ),
                    ))
                }
            }
        }
        Instance::new(kind, weights, profits, capacity, threshold)
    }

    /// Canonical text form; `comments` become leading `# ` lines after the header.
    pub fn to_text_with_comments(&self, comments: &[String]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "problem: {}", self.kind);
        for c in comments {
            let _ = writeln!(out, "# {c}");
        }
        if let Some(c) = &self.capacity {
            let _ = writeln!(out, "capacity: {c}");
        }
        if let Some(t) = &self.threshold {
            let _ = writeln!(out, "threshold: {t}");
        }
        match &self.profits {
            Some(ps) => {
                for (w, v) in self.weights.iter().zip(ps) {
                    let _ = writeln!(out, "{w} {v}");
                }
            }
            None => {
                for w in &self.weights {
                    let _ = writeln!(out, "{w}");
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.to_text_with_comments(&[])
    }
}

fn header_value<'a>(ln: usize, line: &'a str, key: &str) -> Result<&'a str> {
    line.strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| Error::parse(ln, format!("expected `{key}: ...`, got {line:?}")))
}

fn parse_rational(ln: usize, s: &str) -> Result<Rational> {
    s.parse().map_err(|e| match e {
        Error::InvalidDenominator => Error::parse(ln, format!("zero denominator in {s:?}")),
        _ => Error::parse(ln, format!("malformed rational {s:?}")),
    })
}

/// How many copies of each item are chosen.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness(Vec<u64>);

impl Witness {
    pub fn new(quantities: Vec<u64>) -> Self {
        Witness(quantities)
    }

    pub fn zeros(len: usize) -> Self {
        Witness(vec![0; len])
    }

    pub fn quantities(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_items(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `sum q_i * x_i`, exactly.
    pub fn dot(&self, xs: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(xs)
            .filter(|(&q, _)| q > 0)
            .map(|(&q, x)| x.scale(&BigInt::from(q)))
            .sum()
    }

    /// Single line of space-separated integers.
    pub fn parse(text: &str) -> Result<Witness> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let Some((i, line)) = lines.next() else {
            return Ok(Witness(Vec::new()));
        };
        if let Some((j, _)) = lines.next() {
            return Err(Error::parse(j + 1, "witness must be a single line"));
        }
        line.split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::parse(i + 1, format!("bad quantity {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Witness)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl From<Vec<u64>> for Witness {
    fn from(v: Vec<u64>) -> Self {
        Witness(v)
    }
}

/// Checks the defining condition of the instance's problem exactly.
pub fn verify_witness(inst: &Instance, witness: &Witness) -> Result<bool> {
    if witness.len() != inst.len() {
        return Err(Error::Shape(format!(
            "witness has {} entries for {} items",
            witness.len(),
            inst.len()
        )));
    }
    if inst.kind().is_zero_one() {
        if let Some(i) = witness.quantities().iter().position(|&q| q > 1) {
            return Err(Error::InvalidWitness(format!(
                "{} allows quantities 0 or 1, item {} has {}",
                inst.kind(),
                i + 1,
                witness.quantities()[i]
            )));
        }
    }
    let weight = witness.dot(inst.weights());
    Ok(match inst.kind() {
        ProblemKind::Partition => weight.scale(&BigInt::from(2)) == inst.total_weight(),
        ProblemKind::SubsetSum01 | ProblemKind::UnboundedSubsetSum => {
            Some(&weight) == inst.capacity()
        }
        ProblemKind::Knapsack01 | ProblemKind::UnboundedKnapsack => {
            let threshold = inst.require_threshold()?;
            let profit = witness.dot(inst.profits().expect("knapsack has profits"));
            Some(&weight) <= inst.capacity() && &profit >= threshold
        }
    })
}
