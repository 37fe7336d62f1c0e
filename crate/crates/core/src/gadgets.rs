//! Formula transformations that carry satisfiability to one-in-three and
//! one-in-three to all-the-same, without breaking the four-occurrence bound.

use crate::error::Result;
use crate::sat::{Clause, Formula, Literal};

/// Where the clauses and fresh variables for one source clause ended up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetProvenance {
    /// 1-based index of the source clause.
    pub source_clause: usize,
    /// 1-based index of the first of the three output clauses.
    pub first_clause: usize,
    /// Fresh variables `a, b, c, d` introduced for this clause.
    pub fresh: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneInThreeGadget {
    pub formula: Formula,
    pub provenance: Vec<GadgetProvenance>,
}

impl OneInThreeGadget {
    pub fn comment_lines(&self) -> Vec<String> {
        self.provenance
            .iter()
            .map(|p| {
                let [a, b, c, d] = p.fresh;
                format!(
                    "gadget {} -> clauses {}..{} vars {a} {b} {c} {d}",
                    p.source_clause,
                    p.first_clause,
                    p.first_clause + 2
                )
            })
            .collect()
    }

    pub fn to_dimacs(&self) -> String {
        self.formula.to_dimacs_with_comments(&self.comment_lines())
    }
}

/// Replaces each clause `x | y | z` with
/// `(!x | a | b) & (b | y | c) & (c | d | !z)` over four fresh variables.
///
/// Fresh variables for clause `j` are `n+4(j-1)+1 ..= n+4j`. The output has
/// `3m` clauses over `n + 4m` variables. When `require_le4` is set the input
/// must satisfy the four-occurrence bound.
pub fn one_in_three_gadget(f: &Formula, require_le4: bool) -> Result<OneInThreeGadget> {
    if require_le4 {
        f.require_le4()?;
    }
    let n = f.num_vars();
    let mut clauses = Vec::with_capacity(3 * f.num_clauses());
    let mut provenance = Vec::with_capacity(f.num_clauses());
    for (j, clause) in f.clauses().iter().enumerate() {
        let [x, y, z] = *clause.literals();
        let base = n + 4 * j;
        let [a, b, c, d] = [base + 1, base + 2, base + 3, base + 4].map(Literal::pos);
        provenance.push(GadgetProvenance {
            source_clause: j + 1,
            first_clause: clauses.len() + 1,
            fresh: [a.var, b.var, c.var, d.var],
        });
        clauses.push(Clause::new(x.negated(), a, b));
        clauses.push(Clause::new(b, y, c));
        clauses.push(Clause::new(c, d, z.negated()));
    }
    let formula = Formula::new(n + 4 * f.num_clauses(), clauses)?;
    Ok(OneInThreeGadget {
        formula,
        provenance,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllSameGadget {
    pub formula: Formula,
    pub fresh_var: usize,
}

impl AllSameGadget {
    pub fn comment_lines(&self) -> Vec<String> {
        vec![format!(
            "fresh variable {} -> clause {}",
            self.fresh_var,
            self.formula.num_clauses()
        )]
    }

    pub fn to_dimacs(&self) -> String {
        self.formula.to_dimacs_with_comments(&self.comment_lines())
    }
}

/// Appends `(x | x | !x)` over a fresh variable `x = n + 1`. Under any
/// valuation that clause has one or two true occurrences, never zero or three.
pub fn all_same_gadget(f: &Formula) -> AllSameGadget {
    let x = f.num_vars() + 1;
    let mut clauses = f.clauses().to_vec();
    clauses.push(Clause::new(
        Literal::pos(x),
        Literal::pos(x),
        Literal::neg(x),
    ));
    let formula = Formula::new(x, clauses).expect("fresh variable is in range");
    AllSameGadget {
        formula,
        fresh_var: x,
    }
}
