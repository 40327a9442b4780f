//! Q4 as the second prism power of Q2: seeded random pairings extended by the
//! recursive construction, each re-validated.

use pairing_prism::config::split_seed;
use pairing_prism::extension::{extend, MemoizedBaseOracle};
use pairing_prism::graph::generators::hypercube;
use pairing_prism::graph::prism_power;
use pairing_prism::matching::{is_hamiltonian_extension, Pairing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let count: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);
    let base = hypercube(2).unwrap();
    let tower = prism_power(&base, 2).unwrap();
    let oracle = MemoizedBaseOracle::new(base).unwrap();
    let (mut case1, mut case2) = (0, 0);
    for i in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(split_seed(42, i));
        let p = Pairing::random(16, &mut rng).unwrap();
        let ext = extend(&p, &tower, &oracle).unwrap();
        assert!(is_hamiltonian_extension(&p, &ext.matching));
        let s = ext.trace.summary();
        case1 += s.case1;
        case2 += s.case2;
    }
    println!("{count} pairings of Q4 extended; case 1 steps {case1}, case 2 steps {case2}");
    println!("distinct base pairings cached: {}", oracle.cached());
}
