use num_bigint::BigUint;
use num_traits::One;
use transgen_mersenne::{check_orbit_identity, enumerate_triples, is_mersenne_exponent, MersenneTriple};
use transgen_numth::is_prime;

#[test]
fn lucas_lehmer_matches_primality_test() {
    // 2^e - 1 < 2^64 lies in the deterministic Miller-Rabin range.
    for e in 1..=63u32 {
        assert_eq!(is_mersenne_exponent(e), is_prime((1u64 << e) - 1), "e = {e}");
    }
}

#[test]
fn enumeration_is_complete_and_exact() {
    for m in 1..=40u32 {
        let triples = enumerate_triples(m).unwrap();
        let mut brute = Vec::new();
        for e in 5..=m {
            if !is_prime((1u64 << e) - 1) {
                continue;
            }
            for r in 1..=m {
                if e * r <= m {
                    brute.push(MersenneTriple { e, r, t: m - e * r });
                }
            }
        }
        assert_eq!(triples, brute, "m = {m}");
    }
}

#[test]
fn orbit_totals() {
    for m in 5..=40u32 {
        for triple in enumerate_triples(m).unwrap() {
            for t1 in 0..=triple.t {
                let profile = triple.orbit_profile(t1).unwrap();
                let points: BigUint = profile.iter().map(|(size, mult)| size * mult).sum();
                let orbits: BigUint = profile.iter().map(|(_, mult)| mult.clone()).sum();
                assert_eq!(points, (BigUint::one() << triple.m()) * 3u32, "{triple} t1={t1}");
                assert_eq!(orbits, BigUint::one() << (triple.r + t1), "{triple} t1={t1}");
            }
        }
    }
}

#[test]
fn orbit_identity_for_small_exponents() {
    for e in [5u32, 7, 13, 17, 19] {
        for r in 1..=6 {
            assert!(check_orbit_identity(e, r), "e = {e}, r = {r}");
        }
    }
}
