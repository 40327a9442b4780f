//! The strong product of a Hamiltonian graph with K2 checked for the
//! Pairing-Hamiltonian property.

use pairing_prism::config::Budget;
use pairing_prism::graph::generators::{complete_graph, cycle};
use pairing_prism::graph::strong_product;
use pairing_prism::matching::verify_ph;

fn main() {
    let k2 = complete_graph(2).unwrap();
    for (name, g) in [
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("K4", complete_graph(4).unwrap()),
    ] {
        let h = strong_product(&g, &k2).unwrap();
        let v = verify_ph(&h, &Budget::UNLIMITED, 4).unwrap();
        println!("{name} strong K2: n={} PH={} ({} pairings)", h.order(), v.is_ph, v.stats.pairings_checked);
    }
}
