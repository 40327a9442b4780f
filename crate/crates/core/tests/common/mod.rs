//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's search code; only plain data types are borrowed.

#![allow(dead_code)]

use std::path::PathBuf;

use pairing_prism::graph::census::parse_fixture;
use pairing_prism::graph::Graph;
use pairing_prism::matching::Pairing;

pub fn fixture(name: &str) -> Vec<Graph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_fixture(&text).expect("fixture parses")
}

/// Every perfect matching of `g`, as partner arrays.
pub fn all_perfect_matchings(g: &Graph) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(u) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for v in 0..g.order() {
            if v != u && partner[v] == usize::MAX && g.has_edge(u, v) {
                partner[u] = v;
                partner[v] = u;
                rec(g, partner, out);
                partner[u] = usize::MAX;
                partner[v] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(g, &mut vec![usize::MAX; g.order()], &mut out);
    out
}

/// Every pairing of `0..n`, as partner arrays.
pub fn all_pairings(n: usize) -> Vec<Vec<usize>> {
    all_perfect_matchings(&Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap())
}

pub fn partners(p: &Pairing) -> Vec<usize> {
    let mut out = vec![usize::MAX; p.n()];
    for &(u, v) in p.pairs() {
        out[u] = v;
        out[v] = u;
    }
    out
}

/// Alternately following `a` and `b` from vertex 0 visits all `n` vertices
/// before returning, and the two share no pair.
pub fn closes_hamiltonian_cycle(a: &[usize], b: &[usize]) -> bool {
    let n = a.len();
    if n < 4 || (0..n).any(|v| a[v] == b[v]) {
        return false;
    }
    let (mut v, mut steps) = (0, 0);
    loop {
        v = b[a[v]];
        steps += 2;
        if v == 0 {
            return steps == n;
        }
    }
}

pub fn has_extension(g: &Graph, p: &[usize]) -> bool {
    all_perfect_matchings(g).iter().any(|m| closes_hamiltonian_cycle(p, m))
}

/// Independent exhaustive Pairing-Hamiltonian check.
pub fn is_ph(g: &Graph) -> bool {
    let ms = all_perfect_matchings(g);
    all_pairings(g.order()).iter().all(|p| ms.iter().any(|m| closes_hamiltonian_cycle(p, m)))
}

/// Whether `seq` visits every vertex once along edges of `g`.
pub fn is_hamiltonian_path(g: &Graph, seq: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    seq.len() == g.order()
        && seq.iter().all(|&v| v < g.order() && !std::mem::replace(&mut seen[v], true))
        && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Minimum leaf count over all spanning trees, by trying every edge subset
/// of size n-1. Only for graphs with few edges.
pub fn brute_force_ml(g: &Graph) -> usize {
    let (n, m) = (g.order(), g.size());
    assert!(m <= 24, "too many edges for subset enumeration");
    let mut best = usize::MAX;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let edges: Vec<_> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| g.edges()[i]).collect();
        if let Some(leaves) = tree_leaves(n, &edges) {
            best = best.min(leaves);
        }
    }
    best
}

/// Leaf count if `edges` span a tree on `0..n`.
pub fn tree_leaves(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    if edges.len() + 1 != n {
        return None;
    }
    let mut root: Vec<usize> = (0..n).collect();
    fn find(r: &mut [usize], x: usize) -> usize {
        if r[x] != x {
            let top = find(r, r[x]);
            r[x] = top;
        }
        r[x]
    }
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        let (a, b) = (find(&mut root, u), find(&mut root, v));
        if a == b {
            return None;
        }
        root[a] = b;
        deg[u] += 1;
        deg[v] += 1;
    }
    Some(deg.iter().filter(|&&d| d == 1).count())
}
