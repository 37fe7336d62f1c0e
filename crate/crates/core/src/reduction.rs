//! Reduction from all-the-same 3-CNF (each variable at most four times) to
//! unbounded subset sum with prime-denominator weights and target `n`.
//!
//! With `p_i` the `(i+n+5)`-th prime for `i = 1..n+m`, the item for literal
//! `x_i` (and likewise `!x_i`) weighs
//!
//! ```text
//! 1 + 1/p_i - 1/p_{i (+)n 1} + sum over occurrences C_j of the literal (1/p_{n+j} - 1/p_{n + (j (+)m 1)})
//! ```
//!
//! where `(+)k` is addition modulo `k` on `1..=k`. Occurrences are counted
//! with multiplicity: a literal repeated in a clause contributes that
//! clause's term once per occurrence. All weights sum to `2n`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::primes::first_n_primes;
use crate::rational::Rational;
use crate::sat::{Formula, Literal, Valuation};
use crate::solvers::{Instance, Witness};

/// `a (+)n b = ((a + b - 1) mod n) + 1` for `a, b` in `1..=n`.
pub fn mod_add(a: usize, b: usize, n: usize) -> Result<usize> {
    check_index(a, b, n)?;
    Ok((a + b - 1) % n + 1)
}

/// `a (-)n b = ((n + a - b - 1) mod n) + 1` for `a, b` in `1..=n`.
pub fn mod_sub(a: usize, b: usize, n: usize) -> Result<usize> {
    check_index(a, b, n)?;
    Ok((n + a - b - 1) % n + 1)
}

fn check_index(a: usize, b: usize, n: usize) -> Result<()> {
    if n == 0 || !(1..=n).contains(&a) || !(1..=n).contains(&b) {
        return Err(Error::OutOfRange(format!(
            "modular indices need 1 <= a, b <= n, got a={a}, b={b}, n={n}"
        )));
    }
    Ok(())
}

/// Item `2(i-1)` is the literal `x_i`, item `2(i-1)+1` is `!x_i`.
pub fn item_index(lit: Literal) -> usize {
    2 * (lit.var - 1) + usize::from(!lit.positive)
}

/// What is needed to map between formula valuations and item quantities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    n: usize,
    m: usize,
    primes: Vec<u64>,
    item_map: Vec<Literal>,
    /// Per item, the 1-based clauses it occurs in, with multiplicity.
    occurrences: Vec<Vec<usize>>,
}

impl ReductionCertificate {
    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_clauses(&self) -> usize {
        self.m
    }

    /// `p_1 ..= p_{n+m}`.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// 1-based `p_i`.
    pub fn prime(&self, i: usize) -> u64 {
        self.primes[i - 1]
    }

    pub fn item_map(&self) -> &[Literal] {
        &self.item_map
    }

    pub fn occurrences(&self, item: usize) -> &[usize] {
        &self.occurrences[item]
    }

    pub fn num_items(&self) -> usize {
        self.item_map.len()
    }

    pub fn comment_lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("reduction n={} m={}", self.n, self.m),
            format!(
                "primes {}",
                self.primes
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
        ];
        for (k, lit) in self.item_map.iter().enumerate() {
            let occ: Vec<String> = self.occurrences[k].iter().map(usize::to_string).collect();
            out.push(format!(
                "item {} = {} clauses [{}]",
                k + 1,
                lit.to_dimacs(),
                occ.join(" ")
            ));
        }
        out
    }
}

/// Weights, target and certificate produced by [`build_instance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub weights: Vec<Rational>,
    pub target: Rational,
    pub certificate: ReductionCertificate,
}

impl ReducedInstance {
    pub fn as_subset_sum_instance(&self) -> Instance {
        Instance::unbounded_subset_sum(self.weights.clone(), self.target.clone())
            .expect("reduced weights are positive")
    }

    /// The same weights as a partition instance: the target is half the total.
    pub fn as_partition_instance(&self) -> Instance {
        Instance::partition(self.weights.clone()).expect("reduced weights are positive")
    }
}

pub fn as_partition_instance(ri: &ReducedInstance) -> Instance {
    ri.as_partition_instance()
}

fn unit_fraction(p: u64) -> Rational {
    Rational::new(1, BigInt::from(p)).expect("primes are nonzero")
}

/// Builds the reduced instance; the formula must satisfy the four-occurrence
/// bound and have at least one clause.
pub fn build_instance(f: &Formula) -> Result<ReducedInstance> {
    f.require_le4()?;
    let (n, m) = (f.num_vars(), f.num_clauses());
    if m == 0 {
        return Err(Error::EmptyInput("formula has no clauses"));
    }
    if n == 0 {
        return Err(Error::EmptyInput("formula has no variables"));
    }
    let all = first_n_primes(2 * n + m + 5)?.into_vec();
    let primes = all[n + 5..].to_vec();
    debug_assert_eq!(primes.len(), n + m);

    let item_map: Vec<Literal> = (1..=n)
        .flat_map(|i| [Literal::pos(i), Literal::neg(i)])
        .collect();
    let mut occurrences = vec![Vec::new(); 2 * n];
    for (j, clause) in f.clauses().iter().enumerate() {
        for &lit in clause.literals() {
            occurrences[item_index(lit)].push(j + 1);
        }
    }
    let certificate = ReductionCertificate {
        n,
        m,
        primes,
        item_map,
        occurrences,
    };

    let p = |i: usize| unit_fraction(certificate.prime(i));
    let mut weights = Vec::with_capacity(2 * n);
    for (k, lit) in certificate.item_map.iter().enumerate() {
        let i = lit.var;
        let mut w = Rational::one() + p(i) - p(mod_add(i, 1, n)?);
        for &j in &certificate.occurrences[k] {
            w += &p(n + j);
            w -= &p(n + mod_add(j, 1, m)?);
        }
        weights.push(w);
    }
    Ok(ReducedInstance {
        weights,
        target: Rational::from_integer(n as i64),
        certificate,
    })
}

/// `t_1..t_n` count chosen items per variable, `t_{n+1}..t_{n+m}` count
/// chosen literal occurrences per clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TVector {
    pub t: Vec<u64>,
}

impl TVector {
    pub fn new(t: Vec<u64>) -> Self {
        TVector { t }
    }

    /// Total items chosen, `t_1 + ... + t_n`.
    pub fn total(&self, n: usize) -> u64 {
        self.t[..n.min(self.t.len())].iter().sum()
    }

    /// The counts induced by a quantity vector over the `2n` items.
    pub fn from_witness(cert: &ReductionCertificate, q: &Witness) -> Result<TVector> {
        check_items(cert, q)?;
        let (n, m) = (cert.n, cert.m);
        let qs = q.quantities();
        let mut t = vec![0u64; n + m];
        for (k, lit) in cert.item_map.iter().enumerate() {
            t[lit.var - 1] += qs[k];
            for &j in &cert.occurrences[k] {
                t[n + j - 1] += qs[k];
            }
        }
        Ok(TVector { t })
    }
}

fn check_items(cert: &ReductionCertificate, q: &Witness) -> Result<()> {
    if q.len() != cert.num_items() {
        return Err(Error::Shape(format!(
            "witness has {} entries for {} items",
            q.len(),
            cert.num_items()
        )));
    }
    Ok(())
}

/// Total weight expressed through the t-vector:
///
/// ```text
/// sum_i t_i + sum_i (t_i - t_{i (-)n 1}) / p_i + sum_j (t_{n+j} - t_{n + (j (-)m 1)}) / p_{n+j}
/// ```
pub fn star_weight(tv: &TVector, cert: &ReductionCertificate) -> Result<Rational> {
    let (n, m) = (cert.n, cert.m);
    if tv.t.len() != n + m {
        return Err(Error::Shape(format!(
            "t-vector has {} entries, expected {}",
            tv.t.len(),
            n + m
        )));
    }
    let t = |k: usize| BigInt::from(tv.t[k - 1]);
    let frac = |num: BigInt, p: u64| Rational::new(num, BigInt::from(p)).expect("nonzero");
    let mut total = Rational::from_integer(tv.total(n));
    for i in 1..=n {
        total += &frac(t(i) - t(mod_sub(i, 1, n)?), cert.prime(i));
    }
    for j in 1..=m {
        total += &frac(t(n + j) - t(n + mod_sub(j, 1, m)?), cert.prime(n + j));
    }
    Ok(total)
}

/// Picks the item of each true literal once.
pub fn valuation_to_witness(cert: &ReductionCertificate, v: &Valuation) -> Result<Witness> {
    if v.len() != cert.n {
        return Err(Error::Shape(format!(
            "valuation has {} values for {} variables",
            v.len(),
            cert.n
        )));
    }
    let mut q = vec![0u64; cert.num_items()];
    for i in 1..=cert.n {
        let lit = if v.get(i) {
            Literal::pos(i)
        } else {
            Literal::neg(i)
        };
        q[item_index(lit)] = 1;
    }
    Ok(Witness::new(q))
}

/// `x_i` is true iff its item is chosen once and `!x_i` not at all; `None`
/// when some variable does not have exactly one of its two items chosen once.
pub fn witness_to_valuation(cert: &ReductionCertificate, q: &Witness) -> Result<Option<Valuation>> {
    check_items(cert, q)?;
    let qs = q.quantities();
    let mut values = Vec::with_capacity(cert.n);
    for i in 1..=cert.n {
        match (
            qs[item_index(Literal::pos(i))],
            qs[item_index(Literal::neg(i))],
        ) {
            (1, 0) => values.push(true),
            (0, 1) => values.push(false),
            _ => return Ok(None),
        }
    }
    Ok(Some(Valuation::new(values)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::sat::Clause;

    fn formula(n: usize, clauses: &[[i64; 3]]) -> Formula {
        Formula::new(n, clauses.iter().map(|&c| Clause::from_dimacs(c)).collect()).unwrap()
    }

    #[test]
    fn modular_index_examples() {
        assert_eq!(mod_add(3, 2, 4).unwrap(), 1);
        assert_eq!(mod_add(5, 1, 5).unwrap(), 1);
        assert_eq!(mod_sub(1, 1, 5).unwrap(), 5);
        assert_eq!(mod_add(1, 1, 1).unwrap(), 1);
        assert_eq!(mod_sub(1, 1, 1).unwrap(), 1);
        assert!(mod_add(0, 1, 3).is_err());
        assert!(mod_sub(1, 4, 3).is_err());
        assert!(mod_add(1, 1, 0).is_err());
    }

    #[test]
    fn degenerate_single_variable() {
        let ri = build_instance(&formula(1, &[[1, 1, -1]])).unwrap();
        assert_eq!(ri.certificate.primes(), &[17, 19]);
        assert_eq!(ri.weights, vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(ri.target, rat(1, 1));
        assert_eq!(ri.certificate.occurrences(0), &[1, 1]);
        assert_eq!(ri.certificate.occurrences(1), &[1]);
    }

    #[test]
    fn two_variable_example() {
        let ri = build_instance(&formula(2, &[[1, 2, -1]])).unwrap();
        assert_eq!(ri.certificate.primes(), &[19, 23, 29]);
        assert_eq!(
            ri.weights,
            vec![rat(441, 437), rat(441, 437), rat(433, 437), rat(433, 437)]
        );
        assert_eq!(ri.target, rat(2, 1));
        assert_eq!(ri.weights.iter().sum::<Rational>(), rat(4, 1));
        assert_eq!(
            ri.as_partition_instance().weights(),
            &[rat(441, 437), rat(441, 437), rat(433, 437), rat(433, 437)]
        );
    }

    #[test]
    fn rejects_bad_formulas() {
        let five = formula(2, &[[1, 1, 1], [1, 1, 2]]);
        assert!(matches!(
            build_instance(&five),
            Err(Error::OccurrenceBound {
                variable: 1,
                count: 5
            })
        ));
        let empty = Formula::new(2, vec![]).unwrap();
        assert!(matches!(build_instance(&empty), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn star_weight_examples() {
        let ri = build_instance(&formula(2, &[[1, 2, -1]])).unwrap();
        let cert = &ri.certificate;
        assert_eq!(
            star_weight(&TVector::new(vec![0, 0, 0]), cert).unwrap(),
            rat(0, 1)
        );
        assert_eq!(
            star_weight(&TVector::new(vec![1, 1, 1]), cert).unwrap(),
            rat(2, 1)
        );
        assert_eq!(
            star_weight(&TVector::new(vec![3, 3, 5]), cert).unwrap(),
            rat(6, 1)
        );
        assert!(matches!(
            star_weight(&TVector::new(vec![1, 1]), cert),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn witness_conversions() {
        let ri = build_instance(&formula(2, &[[1, 2, -1]])).unwrap();
        let cert = &ri.certificate;
        let v = Valuation::new(vec![true, false]);
        let q = valuation_to_witness(cert, &v).unwrap();
        assert_eq!(q, Witness::new(vec![1, 0, 0, 1]));
        assert_eq!(witness_to_valuation(cert, &q).unwrap(), Some(v));
        assert_eq!(
            witness_to_valuation(cert, &Witness::new(vec![2, 0, 0, 0])).unwrap(),
            None
        );
        // 2 * 441/437 is not the target
        assert_eq!(
            Witness::new(vec![2, 0, 0, 0]).dot(&ri.weights),
            rat(882, 437)
        );

        let one = build_instance(&formula(1, &[[1, 1, -1]])).unwrap();
        let q = valuation_to_witness(&one.certificate, &Valuation::new(vec![true])).unwrap();
        assert_eq!(q, Witness::new(vec![1, 0]));
    }

    #[test]
    fn t_vector_counts_occurrences() {
        let ri = build_instance(&formula(2, &[[1, 1, 2]])).unwrap();
        let tv = TVector::from_witness(&ri.certificate, &Witness::new(vec![1, 0, 0, 1])).unwrap();
        assert_eq!(tv.t, vec![1, 1, 2]);
        assert_eq!(tv.total(2), 2);
    }
}
