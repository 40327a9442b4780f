//! Isomorphism testing and canonical forms for test-scale graphs.
//!
//! Both routines start from colour refinement (iterated degree refinement)
//! and then search over the remaining freedom, so they are exact but
//! exponential in the worst case.

use std::collections::BTreeMap;

use super::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_N: usize = 16;

/// Stable colour refinement. Colours are numbered by the sorted order of
/// their signatures, so the result does not depend on vertex labels.
fn refine(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = adj[v].iter().map(|&w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let ids: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut sorted: Vec<_> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted.into_iter().enumerate().map(|(i, s)| (s, i)).collect()
        };
        let next: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return next;
        }
        classes = ids.len();
        colour = next;
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// Decides whether `g` and `h` are isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Returns `map` with `map[v]` the image in `h` of vertex `v` of `g`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return None;
    }
    let mut joint = adjacency(g);
    joint.extend(
        adjacency(h)
            .into_iter()
            .map(|a| a.into_iter().map(|w| w + n).collect()),
    );
    let colour = refine(&joint);
    let (cg, ch) = colour.split_at(n);
    let mut hist_g = cg.to_vec();
    let mut hist_h = ch.to_vec();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    // Map vertices in BFS order so each new vertex has mapped neighbours.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (cg[v], v))
            .expect("unplaced vertex exists");
        placed[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        i: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for x in 0..h.order() {
            if used[x] || ch[x] != cg[v] {
                continue;
            }
            let consistent = order[..i]
                .iter()
                .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], x));
            if !consistent {
                continue;
            }
            map[v] = x;
            used[x] = true;
            if assign(i + 1, order, g, h, cg, ch, map, used) {
                return true;
            }
            used[x] = false;
        }
        map[v] = usize::MAX;
        false
    }
    assign(0, &order, g, h, cg, ch, &mut map, &mut used).then_some(map)
}

/// A relabeling of `g` that is identical for all graphs isomorphic to `g`.
///
/// Panics if `g` has more than [`CANONICAL_MAX_N`] vertices.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    assert!(n <= CANONICAL_MAX_N, "canonical_form supports at most {CANONICAL_MAX_N} vertices");
    let colour = refine(&adjacency(g));
    // Position p of the canonical order must hold a vertex of colour slot[p].
    let mut slot = colour.clone();
    slot.sort_unstable();
    let mut search = Canon {
        g,
        colour: &colour,
        slot: &slot,
        pos: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0);
    let (_, best) = search.best.expect("at least one ordering exists");
    let mut perm = vec![0; n];
    for (p, &v) in best.iter().enumerate() {
        perm[v] = p;
    }
    g.relabel(&perm)
}

struct Canon<'a> {
    g: &'a Graph,
    colour: &'a [usize],
    slot: &'a [usize],
    pos: Vec<usize>,
    used: Vec<bool>,
    /// Best code so far and the vertex order that produced it.
    best: Option<(u128, Vec<usize>)>,
}

impl Canon<'_> {
    /// `code` holds the adjacency bits of the first `pos.len()` positions,
    /// column by column, as in graph6.
    fn run(&mut self, code: u128) {
        let p = self.pos.len();
        let n = self.g.order();
        if p == n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.pos.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colour[v] != self.slot[p] {
                continue;
            }
            let mut next = code;
            for &u in &self.pos {
                next = (next << 1) | u128::from(self.g.has_edge(u, v));
            }
            if let Some((best, _)) = &self.best {
                let done_bits = (p + 1) * p / 2;
                let total_bits = n * (n - 1) / 2;
                if next > best >> (total_bits - done_bits) {
                    continue;
                }
            }
            self.used[v] = true;
            self.pos.push(v);
            self.run(next);
            self.pos.pop();
            self.used[v] = false;
        }
    }
}
