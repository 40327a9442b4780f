//! Writes the graph6 fixture files used by the test suite.
//!
//!     cargo run --example census_fixtures -- crates/core/tests/fixtures

use std::fs;
use std::path::PathBuf;

use pairing_prism::graph::census::{connected_graphs, connected_regular_graphs};
use pairing_prism::graph::graph6::encode_graph6;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    fs::create_dir_all(&dir)?;

    let mut cubic = String::from("# connected cubic graphs on 4, 6 and 8 vertices\n");
    for n in [4, 6, 8] {
        for g in connected_regular_graphs(n, 3) {
            cubic += &encode_graph6(&g);
            cubic.push('\n');
        }
    }
    fs::write(dir.join("cubic_le8.g6"), &cubic)?;

    let mut connected = String::from("# connected graphs on 2 to 6 vertices\n");
    for n in 2..=6 {
        for g in connected_graphs(n) {
            connected += &encode_graph6(&g);
            connected.push('\n');
        }
    }
    fs::write(dir.join("connected_le6.g6"), &connected)?;

    println!("wrote {}", dir.display());
    Ok(())
}
