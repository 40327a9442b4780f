//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex to every
//! graph on `n - 1` vertices in every possible way and keeping one
//! representative per canonical form.

use std::collections::BTreeSet;

use super::graph6::{decode_graph6, encode_graph6};
use super::iso::{canonical_form, CANONICAL_MAX_N};
use super::Graph;

/// Every graph on `n` vertices, one per isomorphism class, in canonical form
/// and sorted by graph6 string.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "census enumeration is limited to 9 vertices");
    let mut layer: BTreeSet<String> = BTreeSet::from([encode_graph6(&Graph::empty(0))]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for code in &layer {
            let g = decode_graph6(code).expect("census strings are valid");
            for mask in 0u32..(1 << (k - 1)) {
                let extra = (0..k - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k - 1));
                let h = Graph::from_edges_dedup(k, g.edges().iter().copied().chain(extra));
                next.insert(encode_graph6(&canonical_form(&h)));
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|c| decode_graph6(c).expect("census strings are valid"))
        .collect()
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected `d`-regular graphs on `n` vertices up to isomorphism.
///
/// Uses a degree-bounded search, so it reaches beyond [`all_graphs`].
pub fn connected_regular_graphs(n: usize, d: usize) -> Vec<Graph> {
    assert!(n <= CANONICAL_MAX_N, "regular census is limited to {CANONICAL_MAX_N} vertices");
    if !(n * d).is_multiple_of(2) || d >= n {
        return Vec::new();
    }
    let mut found = BTreeSet::new();
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    regular_fill(n, d, 0, &mut deg, &mut edges, &mut found);
    found
        .iter()
        .map(|c| decode_graph6(c).expect("census strings are valid"))
        .collect()
}

/// Fills the neighborhoods of vertices in label order. Vertex `v` always
/// joins the lowest-labeled vertices it can, up to the symmetry of unused
/// vertices: among untouched vertices only the first is tried.
fn regular_fill(
    n: usize,
    d: usize,
    v: usize,
    deg: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    found: &mut BTreeSet<String>,
) {
    if v == n {
        let g = Graph::from_edges_dedup(n, edges.iter().copied());
        if g.is_connected() {
            found.insert(encode_graph6(&canonical_form(&g)));
        }
        return;
    }
    if deg[v] == d {
        regular_fill(n, d, v + 1, deg, edges, found);
        return;
    }
    let last = edges.iter().rev().find(|e| e.0 == v).map_or(v, |e| e.1);
    let mut fresh_tried = false;
    for w in last + 1..n {
        if deg[w] == d {
            continue;
        }
        if deg[w] == 0 {
            if fresh_tried {
                continue;
            }
            fresh_tried = true;
        }
        deg[v] += 1;
        deg[w] += 1;
        edges.push((v, w));
        regular_fill(n, d, v, deg, edges, found);
        edges.pop();
        deg[v] -= 1;
        deg[w] -= 1;
    }
}

/// Parses a fixture file: one graph6 string per line, `#` comments allowed.
pub fn parse_fixture(text: &str) -> Result<Vec<Graph>, super::GraphError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(decode_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequences() {
        // Graphs and connected graphs on n vertices (OEIS A000088, A001349).
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 1, 2, 6, 21, 112];
        for n in 0..=6 {
            let gs = all_graphs(n);
            assert_eq!(gs.len(), all[n], "all graphs on {n}");
            assert_eq!(gs.iter().filter(|g| g.is_connected()).count(), connected[n]);
        }
    }

    #[test]
    fn cubic_counts() {
        // Connected cubic graphs (OEIS A002851): 1, 2, 5 on 4, 6, 8 vertices.
        assert_eq!(connected_regular_graphs(4, 3).len(), 1);
        assert_eq!(connected_regular_graphs(6, 3).len(), 2);
        assert_eq!(connected_regular_graphs(8, 3).len(), 5);
        assert_eq!(connected_regular_graphs(7, 3).len(), 0);
        // Connected 2-regular graphs are the cycles.
        for n in 3..=9 {
            assert_eq!(connected_regular_graphs(n, 2).len(), 1);
        }
    }
}
