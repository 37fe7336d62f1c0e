use proptest::prelude::*;

use strongrat::primes::{
    first_n_primes, is_prime, lemma1_equal_iff_componentwise, prime_upper_bound, sieve,
    unary_size_of_first_primes, LemmaInstance,
};
use strongrat::Error;

const FIRST_50: usize = 50;

fn lemma_instance() -> impl Strategy<Value = LemmaInstance> {
    let primes = first_n_primes(FIRST_50).unwrap().into_vec();
    prop::sample::subsequence(primes, 1..=8)
        .prop_shuffle()
        .prop_flat_map(|ps| {
            let k = ps.len();
            let gaps: Vec<_> = ps
                .iter()
                .map(|&p| -(p as i64 - 1)..=(p as i64 - 1))
                .collect();
            (
                Just(ps),
                prop::collection::vec(-100i64..100, k + 1),
                gaps,
                -3i64..=3,
                prop::collection::vec(any::<bool>(), k),
            )
        })
        .prop_map(|(ps, a, gaps, d0, keep)| {
            // keep[i] leaves coordinate i equal so equal sums are reachable
            let mut b = a.clone();
            b[0] += d0;
            for i in 0..ps.len() {
                if !keep[i] {
                    b[i + 1] += gaps[i];
                }
            }
            LemmaInstance::new(ps, a, b).unwrap()
        })
}

proptest! {
    #[test]
    fn lemma_biconditional_inside_hypothesis(inst in lemma_instance()) {
        let out = lemma1_equal_iff_componentwise(&inst);
        prop_assert_eq!(out.equal_sums, out.componentwise_equal);
    }

    #[test]
    fn identical_lists_are_equal(ps in prop::sample::subsequence(first_n_primes(FIRST_50).unwrap().into_vec(), 1..=8),
                                 seed in prop::collection::vec(-50i64..50, 9)) {
        let a = seed[..=ps.len()].to_vec();
        let inst = LemmaInstance::new(ps, a.clone(), a).unwrap();
        let out = lemma1_equal_iff_componentwise(&inst);
        prop_assert!(out.equal_sums && out.componentwise_equal);
    }

    #[test]
    fn prefix_consistency(n in 1usize..400) {
        let longer = first_n_primes(n + 7).unwrap();
        let shorter = first_n_primes(n).unwrap();
        prop_assert_eq!(shorter.as_slice(), &longer.as_slice()[..n]);
    }
}

#[test]
fn sieve_is_complete_and_sound() {
    let limit = 20_000;
    let listed = sieve(limit);
    let expected: Vec<u64> = (0..=limit as u64).filter(|&k| is_prime(k)).collect();
    assert_eq!(listed, expected);
}

#[test]
fn first_primes_table() {
    assert_eq!(first_n_primes(1).unwrap().as_slice(), &[2]);
    assert_eq!(first_n_primes(6).unwrap().as_slice(), &[2, 3, 5, 7, 11, 13]);
    assert_eq!(first_n_primes(10).unwrap().last(), 29);
    assert_eq!(first_n_primes(1000).unwrap().last(), 7919);
    assert!(matches!(first_n_primes(0), Err(Error::EmptyInput(_))));
}

#[test]
fn unary_size_examples() {
    assert_eq!(unary_size_of_first_primes(1).unwrap(), 2);
    assert_eq!(unary_size_of_first_primes(6).unwrap(), 41);
    assert_eq!(unary_size_of_first_primes(10).unwrap(), 129);
}

#[test]
fn bound_examples() {
    assert!((prime_upper_bound(6).unwrap() - 14.249_745).abs() < 1e-5);
    assert!(prime_upper_bound(5).is_err());
}

#[test]
fn lemma_errors_and_counterexample() {
    assert!(matches!(
        LemmaInstance::new(vec![3, 5], vec![0, 1], vec![0, 1, 1]),
        Err(Error::Shape(_))
    ));
    assert!(matches!(
        LemmaInstance::new(vec![3, 3], vec![0, 1, 1], vec![0, 1, 1]),
        Err(Error::InvalidPrimes(_))
    ));
    assert!(matches!(
        LemmaInstance::new(vec![3, 5], vec![1, -2, 0], vec![0, 1, 0]),
        Err(Error::OutOfRange(_))
    ));
    let inst = LemmaInstance::new_unchecked(vec![3, 5], vec![1, -2, 0], vec![0, 1, 0]).unwrap();
    let out = lemma1_equal_iff_componentwise(&inst);
    assert!(out.equal_sums);
    assert!(!out.componentwise_equal);
}
