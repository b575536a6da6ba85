use primebias::{stream_prime_powers, stream_primes, PrimePowerEvent, SieveConfig};
use primebias_testkit::{prime_powers_upto, primes_upto};
use proptest::prelude::*;

fn cfg(x_max: u64) -> SieveConfig {
    SieveConfig::new(x_max).unwrap()
}

#[test]
fn primes_match_trial_division_to_ten_thousand() {
    let expected = primes_upto(10_000);
    let got: Vec<u64> = stream_primes(&cfg(10_000)).unwrap().collect();
    assert_eq!(got, expected);
    for n in 2..=300 {
        let got: Vec<u64> = stream_primes(&cfg(n)).unwrap().collect();
        assert_eq!(got, primes_upto(n), "x_max = {n}");
    }
}

#[test]
fn pi_of_a_million() {
    assert_eq!(stream_primes(&cfg(1_000_000)).unwrap().count(), 78_498);
    assert_eq!(stream_primes(&cfg(10_000_000)).unwrap().count(), 664_579);
}

#[test]
fn prime_powers_match_reference() {
    let expected: Vec<PrimePowerEvent> = prime_powers_upto(10_000)
        .into_iter()
        .map(|(n, p, m)| PrimePowerEvent { n, p, m })
        .collect();
    let got: Vec<_> = stream_prime_powers(&cfg(10_000)).unwrap().collect();
    assert_eq!(got, expected);
}

#[test]
fn output_independent_of_workers_and_segments() {
    let x_max = 2_000_000;
    let reference: Vec<_> = stream_prime_powers(&cfg(x_max)).unwrap().collect();
    for workers in [1, 2, 8] {
        for segment in [1 << 12, 1 << 15, 1 << 20] {
            let c = cfg(x_max)
                .with_workers(workers)
                .unwrap()
                .with_segment_size(segment)
                .unwrap();
            let got: Vec<_> = stream_prime_powers(&c).unwrap().collect();
            assert!(got == reference, "workers={workers} segment={segment}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn events_sorted_and_consistent(x_max in 2u64..50_000, segment in 64usize..4096) {
        let c = cfg(x_max).with_segment_size(segment).unwrap();
        let events: Vec<_> = stream_prime_powers(&c).unwrap().collect();
        prop_assert!(events.windows(2).all(|w| w[0].n < w[1].n));
        for e in &events {
            prop_assert!(e.n <= x_max);
            prop_assert_eq!(Some(e.n), e.p.checked_pow(e.m));
            prop_assert!(primebias_testkit::is_prime(e.p));
        }
    }
}
