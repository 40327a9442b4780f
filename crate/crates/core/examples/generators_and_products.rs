//! Standard families, Cartesian and strong products, and prism towers.

use pairing_prism::graph::generators::{complete_graph, cycle, hypercube, named};
use pairing_prism::graph::graph6::encode_graph6;
use pairing_prism::graph::iso::are_isomorphic;
use pairing_prism::graph::{cartesian_product, prism_power, strong_product};

fn main() {
    let k2 = complete_graph(2).unwrap();
    for name in ["K4", "K3,3", "C6", "Q3", "P5"] {
        let g = named(name).unwrap();
        println!("{name:>5}: n={:<2} m={:<2} graph6={}", g.order(), g.size(), encode_graph6(&g));
    }

    let c4k2 = cartesian_product(&cycle(4).unwrap(), &k2).unwrap();
    println!("C4 x K2 is Q3: {}", are_isomorphic(&c4k2, &hypercube(3).unwrap()));

    let strong = strong_product(&cycle(4).unwrap(), &k2).unwrap();
    println!("C4 strong K2: n={} m={}", strong.order(), strong.size());

    let tower = prism_power(&hypercube(2).unwrap(), 2).unwrap();
    println!(
        "P^2(Q2): n={} m={}, same labels as Q4: {}",
        tower.top().order(),
        tower.top().size(),
        tower.top() == &hypercube(4).unwrap()
    );
    let v = tower.encode(3, 2);
    println!("base vertex 3 in layer 2 has label {v}, decoded back to {:?}", tower.decode(v));
}
