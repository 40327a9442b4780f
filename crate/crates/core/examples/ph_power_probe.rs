//! Smallest prism power found to be Pairing-Hamiltonian, within the
//! verification cap.

use pairing_prism::config::{Budget, Caps};
use pairing_prism::graph::generators::named;
use pairing_prism::tree::{ph_power_exact, ph_power_upper_bound};

fn main() {
    let caps = Caps::default();
    for name in ["Q2", "K4", "C6", "P4", "K1,3"] {
        let g = named(name).unwrap();
        let probe = ph_power_exact(&g, 2, &Budget::UNLIMITED, &caps, 4).unwrap();
        let bound = ph_power_upper_bound(&g, &Budget::UNLIMITED).unwrap();
        let checked: Vec<String> = probe.levels.iter().map(|l| format!("k={} PH={}", l.k, l.is_ph)).collect();
        println!("{name:<5} {:?} [{}] upper bound {bound}", probe.outcome, checked.join(", "));
    }
}
