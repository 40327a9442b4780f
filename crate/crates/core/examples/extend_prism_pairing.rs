//! Extends one pairing of the prism over K4 and prints the certificate and
//! the recursion trace.

use pairing_prism::extension::{extend, partition_pairing, MemoizedBaseOracle};
use pairing_prism::graph::generators::complete_graph;
use pairing_prism::graph::prism_power;
use pairing_prism::matching::{hamiltonian_cycle, Pairing};

fn main() {
    let base = complete_graph(4).unwrap();
    let tower = prism_power(&base, 1).unwrap();
    let oracle = MemoizedBaseOracle::new(base).unwrap();

    for pairs in [
        vec![(0, 1), (2, 3), (4, 6), (5, 7)],
        vec![(0, 5), (1, 4), (2, 3), (6, 7)],
    ] {
        let p = Pairing::new(8, pairs).unwrap();
        let part = partition_pairing(&p, tower.structure(1)).unwrap();
        let ext = extend(&p, &tower, &oracle).unwrap();
        println!("pairing   {:?}", p.pairs());
        println!("  layer 0 {:?}, layer 1 {:?}, across {:?}", part.p1, part.p2, part.x);
        println!("  matching {:?}", ext.matching.pairs());
        println!("  cycle    {:?}", hamiltonian_cycle(&p, &ext.matching).unwrap());
        println!("  trace    {}", serde_json::to_string(&ext.trace).unwrap());
    }
}
