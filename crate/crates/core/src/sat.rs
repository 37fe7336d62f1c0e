//! 3-CNF formulas with per-variable occurrence bookkeeping, DIMACS I/O, and
//! exhaustive deciders for satisfiability, one-in-three and all-the-same.
//!
//! Counts are per literal occurrence: in `(x | x | !x)` a true `x` makes two
//! occurrences true.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Default cap on the number of variables for exhaustive enumeration.
pub const DEFAULT_MAX_VARS: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    /// DIMACS encoding: `var` or `-var`.
    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn from_dimacs(code: i64) -> Option<Self> {
        if code == 0 {
            return None;
        }
        Some(Literal {
            var: code.unsigned_abs() as usize,
            positive: code > 0,
        })
    }

    pub fn is_true_under(self, valuation: &Valuation) -> bool {
        valuation.get(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "!x{}", self.var)
        }
    }
}

/// Exactly three literal occurrences; repeats are allowed and order is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause(pub [Literal; 3]);

impl Clause {
    pub fn new(a: Literal, b: Literal, c: Literal) -> Self {
        Clause([a, b, c])
    }

    /// Builds a clause from DIMACS codes; panics on a zero code.
    pub fn from_dimacs(codes: [i64; 3]) -> Self {
        Clause(codes.map(|c| Literal::from_dimacs(c).expect("nonzero literal")))
    }

    pub fn literals(&self) -> &[Literal; 3] {
        &self.0
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a} | {b} | {c})")
    }
}

/// A 3-CNF formula over variables `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    n: usize,
    clauses: Vec<Clause>,
    occurrences: Vec<usize>,
}

impl Formula {
    pub fn new(n: usize, clauses: Vec<Clause>) -> Result<Self> {
        let mut occurrences = vec![0; n];
        for (j, clause) in clauses.iter().enumerate() {
            for lit in clause.literals() {
                if lit.var == 0 || lit.var > n {
                    return Err(Error::OutOfRange(format!(
                        "clause {} mentions variable {} outside 1..={n}",
                        j + 1,
                        lit.var
                    )));
                }
                occurrences[lit.var - 1] += 1;
            }
        }
        Ok(Formula {
            n,
            clauses,
            occurrences,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Occurrences of variable `var` (both polarities).
    pub fn occurrences(&self, var: usize) -> usize {
        self.occurrences[var - 1]
    }

    pub fn occurrence_table(&self) -> &[usize] {
        &self.occurrences
    }

    /// True when every variable occurs at most four times.
    pub fn is_3cnf_le4(&self) -> bool {
        self.occurrences.iter().all(|&c| c <= 4)
    }

    /// Fails with the first variable that occurs more than four times.
    pub fn require_le4(&self) -> Result<()> {
        match self.occurrences.iter().position(|&c| c > 4) {
            Some(i) => Err(Error::OccurrenceBound {
                variable: i + 1,
                count: self.occurrences[i],
            }),
            None => Ok(()),
        }
    }

    pub fn to_dimacs(&self) -> String {
        self.to_dimacs_with_comments(&[])
    }

    /// DIMACS text with `c ` comment lines placed before the header.
    pub fn to_dimacs_with_comments(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            let _ = writeln!(out, "c {c}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.n, self.clauses.len());
        for clause in &self.clauses {
            let [a, b, c] = clause.0;
            let _ = writeln!(
                out,
                "{} {} {} 0",
                a.to_dimacs(),
                b.to_dimacs(),
                c.to_dimacs()
            );
        }
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.clauses.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" & "))
    }
}

/// Parses DIMACS CNF where every clause has exactly three literals.
///
/// Clauses may span lines. A `%` line ends the clause section (SATLIB style).
pub fn parse_dimacs(text: &str) -> Result<Formula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate problem line"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(Error::parse(line_no, "expected `p cnf <vars> <clauses>`"));
            }
            let n = fields[2]
                .parse()
                .map_err(|_| Error::parse(line_no, "bad variable count"))?;
            let m = fields[3]
                .parse()
                .map_err(|_| Error::parse(line_no, "bad clause count"))?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or_else(|| Error::parse(line_no, "clause before problem line"))?;
        for tok in line.split_whitespace() {
            let code: i64 = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad literal {tok:?}")))?;
            if code == 0 {
                if pending.len() != 3 {
                    return Err(Error::Arity {
                        clause: clauses.len() + 1,
                        len: pending.len(),
                    });
                }
                clauses.push(Clause([pending[0], pending[1], pending[2]]));
                pending.clear();
                continue;
            }
            let lit = Literal::from_dimacs(code).expect("nonzero");
            if lit.var > n {
                return Err(Error::parse(
                    line_no,
                    format!("variable {} exceeds declared count {n}", lit.var),
                ));
            }
            pending.push(lit);
        }
    }

    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if !pending.is_empty() {
        return Err(Error::Arity {
            clause: clauses.len() + 1,
            len: pending.len(),
        });
    }
    if clauses.is_empty() {
        return Err(Error::parse(0, "formula has no clauses"));
    }
    if clauses.len() != m {
        return Err(Error::parse(
            0,
            format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    Formula::new(n, clauses)
}

/// Truth values for variables `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Valuation(Vec<bool>);

impl Valuation {
    pub fn new(values: Vec<bool>) -> Self {
        Valuation(values)
    }

    /// Variable `i` takes bit `i - 1` of `bits`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        Valuation((0..n).map(|i| bits >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of the 1-based variable `var`.
    pub fn get(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn flipped(&self) -> Self {
        Valuation(self.0.iter().map(|b| !b).collect())
    }

    pub fn extended(&self, extra: impl IntoIterator<Item = bool>) -> Self {
        let mut v = self.0.clone();
        v.extend(extra);
        Valuation(v)
    }
}

/// Number of true literal occurrences in each clause.
pub fn true_literal_counts(f: &Formula, v: &Valuation) -> Result<Vec<u8>> {
    if v.len() != f.num_vars() {
        return Err(Error::Shape(format!(
            "valuation has {} values for {} variables",
            v.len(),
            f.num_vars()
        )));
    }
    Ok(f.clauses
        .iter()
        .map(|c| c.literals().iter().filter(|l| l.is_true_under(v)).count() as u8)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SatMode {
    /// Every clause has at least one true occurrence.
    Sat,
    /// Every clause has exactly one true occurrence.
    OneInThree,
    /// Every clause has the same number of true occurrences (possibly zero).
    AllSame,
}

impl SatMode {
    pub fn accepts(self, counts: &[u8]) -> bool {
        match self {
            SatMode::Sat => counts.iter().all(|&c| c >= 1),
            SatMode::OneInThree => counts.iter().all(|&c| c == 1),
            SatMode::AllSame => counts.windows(2).all(|w| w[0] == w[1]),
        }
    }
}

/// First accepting valuation in binary counting order, or `None`.
pub fn brute_force_decide(f: &Formula, mode: SatMode) -> Result<Option<Valuation>> {
    brute_force_decide_with_limit(f, mode, DEFAULT_MAX_VARS)
}

pub fn brute_force_decide_with_limit(
    f: &Formula,
    mode: SatMode,
    max_vars: usize,
) -> Result<Option<Valuation>> {
    let n = f.num_vars();
    if n > max_vars || n >= 64 {
        return Err(Error::ResourceLimit(format!(
            "{n} variables exceed the enumeration limit of {max_vars}"
        )));
    }
    // Per clause: (variable bit, polarity) for each occurrence.
    let masks: Vec<[(u64, bool); 3]> = f
        .clauses
        .iter()
        .map(|c| c.0.map(|l| (1u64 << (l.var - 1), l.positive)))
        .collect();
    let mut counts = vec![0u8; masks.len()];
    for bits in 0..(1u64 << n) {
        for (slot, occ) in counts.iter_mut().zip(&masks) {
            *slot = occ
                .iter()
                .filter(|&&(mask, pos)| (bits & mask != 0) == pos)
                .count() as u8;
        }
        if mode.accepts(&counts) {
            return Ok(Some(Valuation::from_bits(n, bits)));
        }
    }
    Ok(None)
}
