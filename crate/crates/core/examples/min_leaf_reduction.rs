//! Minimum leaf numbers, the prism leaf reduction, and the traceability and
//! PH-power thresholds derived from them.

use pairing_prism::config::Budget;
use pairing_prism::graph::generators::{spider, star};
use pairing_prism::graph::path::is_traceable;
use pairing_prism::graph::prism_power;
use pairing_prism::tree::{lemma1_reduce, min_leaf_number, ph_power_upper_bound, traceable_threshold};

fn main() {
    let b = Budget::UNLIMITED;
    for (name, g) in [
        ("K1,3", star(4).unwrap()),
        ("K1,4", star(5).unwrap()),
        ("spider(3,2)", spider(3, 2).unwrap()),
        ("spider(4,1)", spider(4, 1).unwrap()),
    ] {
        let ml = min_leaf_number(&g, &b).unwrap();
        let red = lemma1_reduce(&g, &ml.witness).unwrap();
        let k = traceable_threshold(&g, &b).unwrap();
        let tower = prism_power(&g, k).unwrap();
        let path = is_traceable(tower.top()).unwrap().expect("traceable");
        println!(
            "{name:<12} ml={} prism tree leaves={} history={:?} P^{k} traceable (path of {}), PH bound P^{}",
            ml.value,
            red.tree.leaf_count(),
            red.history,
            path.len(),
            ph_power_upper_bound(&g, &b).unwrap()
        );
    }
}
