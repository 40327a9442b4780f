//! Graphviz drawing of an extension: pairing bold, matching dashed, splice
//! edges dotted. Pipe into `dot -Tsvg`.

use pairing_prism::extension::{extend, figure_highlights, MemoizedBaseOracle};
use pairing_prism::graph::dot::export_dot;
use pairing_prism::graph::generators::hypercube;
use pairing_prism::graph::prism_power;
use pairing_prism::matching::Pairing;

fn main() {
    let base = hypercube(2).unwrap();
    let tower = prism_power(&base, 1).unwrap();
    let oracle = MemoizedBaseOracle::new(base).unwrap();
    let p = Pairing::new(8, [(0, 5), (1, 2), (3, 6), (4, 7)]).unwrap();
    let ext = extend(&p, &tower, &oracle).unwrap();
    print!("{}", export_dot(tower.top(), &figure_highlights(&p, &ext, tower.structure(1))));
}
