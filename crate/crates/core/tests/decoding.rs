use std::collections::HashSet;

use qrm_core::decode::{
    build_decoder_table, correctability_check, find_uncorrectable, random_error, simulate, simulate_with,
    syndrome, trial_rng,
};
use qrm_core::{build_generator, puncture, six04, Execution};

#[test]
fn table_sizes_and_distinct_syndromes() {
    let small = build_generator(3, 1).unwrap();
    let t = build_decoder_table(&small, 1).unwrap();
    assert_eq!(t.coverage(), 1 + 8 * 3);
    assert!(t.all_distinct());

    let big = build_generator(5, 2).unwrap();
    let t = build_decoder_table(&big, 2).unwrap();
    assert_eq!(t.coverage(), 1 + 32 * 3 + 496 * 9);
    assert_eq!(t.coverage(), 4561);
    assert!(t.all_distinct());

    let five = puncture(&six04(), 0).unwrap();
    let t = build_decoder_table(&five, 1).unwrap();
    assert_eq!(five.stabilizer().n_rows(), 4);
    assert_eq!(t.coverage(), 16);
}

#[test]
fn leaders_reproduce_their_syndromes() {
    let code = build_generator(5, 2).unwrap();
    let t = build_decoder_table(&code, 2).unwrap();
    let mut seen = HashSet::new();
    for (s, e) in t.leaders() {
        assert!(e.weight() <= 2);
        assert_eq!(&syndrome(&code, e).unwrap(), s);
        assert!(seen.insert(s.clone()));
    }
}

#[test]
fn correctability() {
    assert!(correctability_check(&build_generator(3, 1).unwrap(), 1));
    assert!(correctability_check(&build_generator(5, 2).unwrap(), 2));
    assert!(correctability_check(&puncture(&six04(), 4).unwrap(), 1));
    // Past the radius a weight-6 logical shows up.
    let w = find_uncorrectable(&build_generator(5, 2).unwrap(), 3).unwrap().unwrap();
    assert_eq!(w.weight(), 6);
}

#[test]
fn monte_carlo_within_radius() {
    for (r, t, e) in [(3, 1, 1), (5, 2, 2), (5, 2, 1)] {
        let code = build_generator(r, t).unwrap();
        let table = build_decoder_table(&code, e).unwrap();
        let stats = simulate(&code, &table, e, 10_000, 99).unwrap();
        assert_eq!(stats.failures, 0, "({r},{t}) e={e}");
        assert_eq!(stats.trials, 10_000);
    }
}

#[test]
fn simulation_reproducible_across_pools() {
    let code = build_generator(3, 1).unwrap();
    let table = build_decoder_table(&code, 2).unwrap();
    let serial = simulate_with(&code, &table, 2, 10_000, 5, Execution::Serial).unwrap();
    for threads in [1, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let par = pool.install(|| simulate_with(&code, &table, 2, 10_000, 5, Execution::Parallel).unwrap());
        assert_eq!(par, serial);
    }
    assert!(serial.failures > 0);
    assert_eq!(simulate(&code, &table, 2, 10_000, 5).unwrap(), serial);
}

#[test]
fn trial_streams_are_fixed() {
    let a = random_error(&mut trial_rng(1, 17), 32, 3);
    let b = random_error(&mut trial_rng(1, 17), 32, 3);
    assert_eq!(a, b);
    assert_eq!(a.weight(), 3);
    let c = random_error(&mut trial_rng(1, 18), 32, 3);
    let d = random_error(&mut trial_rng(2, 17), 32, 3);
    assert!(a != c || a != d);
}
