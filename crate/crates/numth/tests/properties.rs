use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;
use transgen_numth::{big_k, binom, factorize, is_prime, lpp, p_part, ws, Factorization, Rational};

fn pascal_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

#[test]
fn binomials_match_pascal_recurrence() {
    for n in 0..=60usize {
        let row = pascal_row(n);
        for k in 0..=n + 2 {
            let expected = row.get(k).cloned().unwrap_or_default();
            assert_eq!(binom(n as u64, k as u64), expected, "C({n},{k})");
        }
    }
}

#[test]
fn factorization_round_trips_to_a_million() {
    for n in 1..=1_000_000u64 {
        let f = factorize(n).unwrap();
        assert_eq!(f.value_u64(), Some(n));
        assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
        assert!(f.pairs().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
    }
}

#[test]
fn rank_dominates_log_to_one_hundred_thousand() {
    for n in 2..=100_000u64 {
        let k = big_k(n);
        assert!(k >= 64 || (1u64 << k) >= n, "n = {n}");
    }
}

#[test]
fn lpp_prime_count_bound_to_one_hundred_thousand() {
    // n <= k^pi(k) with k = lpp(n) and pi the prime-counting function.
    const LIMIT: usize = 100_000;
    let mut composite = vec![false; LIMIT + 1];
    let mut prime_count = vec![0u32; LIMIT + 1];
    for i in 2..=LIMIT {
        prime_count[i] = prime_count[i - 1];
        if !composite[i] {
            prime_count[i] += 1;
            (i * i..=LIMIT).step_by(i).for_each(|j| composite[j] = true);
        }
    }
    for n in 2..=LIMIT as u64 {
        let k = lpp(n);
        let primes = prime_count[k as usize];
        assert!(BigUint::from(k).pow(primes) >= BigUint::from(n), "n = {n}");
    }
}

// ws(n) involves C(K, K/2) with K = sum of e*(p-1), so keep the prime factors small.
fn smooth() -> impl Strategy<Value = u64> {
    (0u32..30, 0u32..12, 0u32..6, 0u32..4, 0u32..3, 0u32..3, 1u64..50)
        .prop_map(|(a, b, c, d, e, f, g)| {
            [(2u64, a), (3, b), (5, c), (7, d), (11, e), (13, f)]
                .iter()
                .try_fold(g, |acc, &(p, k)| acc.checked_mul(p.pow(k)))
                .unwrap_or(1)
        })
        .prop_filter("n >= 2", |&n| n >= 2)
}

proptest! {
    #[test]
    fn p_part_splits_n(n in 1u64..5_000_000_000, pi in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let part = p_part(n, p).unwrap();
        prop_assert_eq!(n % part, 0);
        prop_assert_ne!((n / part) % p, 0);
    }

    #[test]
    fn ws_is_at_least_one(n in smooth()) {
        prop_assert!(ws(n).unwrap() >= Rational::one());
    }

    #[test]
    fn ws_agrees_between_entry_points(n in smooth()) {
        prop_assert_eq!(ws(n).unwrap(), factorize(n).unwrap().ws().unwrap());
    }

    #[test]
    fn pairs_round_trip(e2 in 0u32..80, e3 in 0u32..40, e5 in 0u32..3) {
        let f = Factorization::from_pairs([(2, e2), (3, e3), (5, e5)]).unwrap();
        let expected = (BigUint::from(2u32).pow(e2)) * BigUint::from(3u32).pow(e3) * BigUint::from(5u32).pow(e5);
        prop_assert_eq!(f.value(), expected);
        prop_assert_eq!(f.big_k(), u64::from(e2) + 2 * u64::from(e3) + 4 * u64::from(e5));
    }
}
