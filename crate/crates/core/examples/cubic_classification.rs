//! Exhaustive Pairing-Hamiltonian check of every connected cubic graph on at
//! most 8 vertices.

use pairing_prism::config::Budget;
use pairing_prism::graph::census::connected_regular_graphs;
use pairing_prism::graph::graph6::encode_graph6;
use pairing_prism::matching::verify_ph;

fn main() {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    for n in [4, 6, 8] {
        for g in connected_regular_graphs(n, 3) {
            let v = verify_ph(&g, &Budget::UNLIMITED, workers).unwrap();
            let witness = v.witness.map(|w| format!(" witness {:?}", w.pairs())).unwrap_or_default();
            println!(
                "n={n} {:<10} PH={:<5} checked={}{witness}",
                encode_graph6(&g),
                v.is_ph,
                v.stats.pairings_checked
            );
        }
    }
}
