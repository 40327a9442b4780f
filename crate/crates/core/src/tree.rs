//! Spanning trees with few leaves, traceability of iterated prisms and the
//! prism power needed to reach the Pairing-Hamiltonian property.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{Budget, Caps};
use crate::graph::path::{hamiltonian_path, SearchError};
use crate::graph::{prism, prism_power_with_cap, Graph, GraphError};
use crate::matching::{verify_ph, Pairing, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("graph has {n} vertices, above the cap of {cap}")]
    Cap { n: usize, cap: usize },
    #[error("edge set is not a spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("the tree has {0} leaves; the reduction needs more than 2")]
    TooFewLeaves(usize),
    #[error("minimum leaf search ran out of budget (best known: {best})")]
    Inexact { best: usize },
    #[error("no cycle edge keeps the leaf bound at step {step}")]
    NoValidSwap { step: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A spanning tree of some host graph together with its leaf count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafTree {
    n: usize,
    edges: Vec<(usize, usize)>,
    leaf_count: usize,
}

impl LeafTree {
    /// Checks that `edges` form a spanning tree of `host`.
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, TreeError> {
        let n = host.order();
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        let bad = |s: &str| TreeError::NotSpanningTree(s.to_string());
        if n == 0 || list.len() != n - 1 {
            return Err(bad("wrong number of edges"));
        }
        if let Some(&(u, v)) = list.iter().find(|&&(u, v)| !host.has_edge(u, v)) {
            return Err(TreeError::NotSpanningTree(format!("({u}, {v}) is not a host edge")));
        }
        let tree = Graph::new(n, list.iter().copied()).map_err(|_| bad("invalid edge"))?;
        if !tree.is_connected() {
            return Err(bad("edges do not connect every vertex"));
        }
        let leaf_count = (0..n).filter(|&v| tree.degree(v) == 1).count();
        Ok(Self { n, edges: list, leaf_count })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Leaves in ascending label order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        (0..self.n).filter(|&v| deg[v] == 1).collect()
    }
}

/// The minimum leaf number with a witness tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlResult {
    pub value: usize,
    pub witness: LeafTree,
    /// `false` when the search ran out of budget and `value` is only an
    /// upper bound.
    pub exact: bool,
}

#[derive(Serialize)]
struct MlJson {
    ml: usize,
    exact: bool,
    witness_edges: Vec<[usize; 2]>,
}

impl MlResult {
    /// `{"ml": .., "exact": .., "witness_edges": [[u, v], ..]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MlJson {
            ml: self.value,
            exact: self.exact,
            witness_edges: self.witness.edges.iter().map(|&(u, v)| [u, v]).collect(),
        })
        .expect("serialization cannot fail")
    }
}

/// Minimum number of leaves over all spanning trees of `g`, under the
/// default caps.
pub fn min_leaf_number(g: &Graph, budget: &Budget) -> Result<MlResult, TreeError> {
    min_leaf_number_with_cap(g, budget, Caps::default().ml_vertices)
}

/// Tries a Hamiltonian path first (two leaves is optimal), then a
/// branch-and-bound over spanning trees grown from vertex 0.
pub fn min_leaf_number_with_cap(g: &Graph, budget: &Budget, cap: usize) -> Result<MlResult, TreeError> {
    let n = g.order();
    if n < 2 {
        return Err(TreeError::TooSmall(n));
    }
    if n > cap.min(64) {
        return Err(TreeError::Cap { n, cap: cap.min(64) });
    }
    if !g.is_connected() {
        return Err(TreeError::Disconnected);
    }
    match hamiltonian_path(g, budget.max_nodes) {
        Ok(Some(path)) => {
            let witness = LeafTree::new(g, path.windows(2).map(|w| (w[0], w[1])))?;
            return Ok(MlResult { value: 2, witness, exact: true });
        }
        Ok(None) | Err(SearchError::BudgetExceeded { .. }) => {}
        Err(SearchError::TooLarge { n }) => return Err(TreeError::Cap { n, cap: 64 }),
    }
    let adj = g.adjacency_masks().expect("order checked against 64");
    let mut bb = LeafSearch {
        n,
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        pendant: (0..n).filter(|&v| g.degree(v) == 1).fold(0, |m, v| m | 1 << v),
        adj,
        tdeg: vec![0; n],
        excluded: vec![0; n],
        edges: Vec::with_capacity(n - 1),
        best: None,
        nodes: 0,
        max_nodes: budget.max_nodes,
        exhausted: false,
    };
    bb.search(1);
    let (value, edges) = bb.best.expect("a connected graph has a spanning tree");
    let witness = LeafTree::new(g, edges)?;
    debug_assert_eq!(witness.leaf_count(), value);
    Ok(MlResult {
        value,
        witness,
        exact: !bb.exhausted,
    })
}

struct LeafSearch {
    n: usize,
    full: u64,
    adj: Vec<u64>,
    /// Vertices of degree 1 in the host; they are leaves of every tree.
    pendant: u64,
    tdeg: Vec<u32>,
    /// `excluded[u]` holds outside vertices `u` may no longer attach.
    excluded: Vec<u64>,
    edges: Vec<(usize, usize)>,
    best: Option<(usize, Vec<(usize, usize)>)>,
    nodes: u64,
    max_nodes: Option<u64>,
    exhausted: bool,
}

impl LeafSearch {
    fn best_value(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |b| b.0)
    }

    fn search(&mut self, tree: u64) {
        if self.exhausted {
            return;
        }
        if tree == self.full {
            let leaves = self.tdeg.iter().filter(|&&d| d == 1).count();
            if leaves < self.best_value() {
                self.best = Some((leaves, self.edges.clone()));
            }
            return;
        }
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) && self.best.is_some() {
            self.exhausted = true;
            return;
        }
        let outside = self.full & !tree;
        // Leaves that can no longer grow, plus host pendants still outside.
        let mut settled = (self.pendant & outside).count_ones() as usize;
        let mut frontier_leaf = None;
        let mut frontier_any = None;
        for u in 0..self.n {
            if tree >> u & 1 == 0 {
                continue;
            }
            let open = self.adj[u] & outside & !self.excluded[u];
            if self.tdeg[u] == 1 && open == 0 {
                settled += 1;
            }
            if open != 0 {
                let v = open.trailing_zeros() as usize;
                if self.tdeg[u] == 1 && frontier_leaf.is_none() {
                    frontier_leaf = Some((u, v));
                }
                if frontier_any.is_none() {
                    frontier_any = Some((u, v));
                }
            }
        }
        if settled.max(2) >= self.best_value() {
            return;
        }
        if !self.reachable(tree) {
            return;
        }
        let Some((u, v)) = frontier_leaf.or(frontier_any) else {
            return;
        };
        // Attach v through u.
        self.tdeg[u] += 1;
        self.tdeg[v] = 1;
        self.edges.push((u, v));
        self.search(tree | 1 << v);
        self.edges.pop();
        self.tdeg[v] = 0;
        self.tdeg[u] -= 1;
        // Or never use the edge u-v.
        self.excluded[u] |= 1 << v;
        self.search(tree);
        self.excluded[u] &= !(1 << v);
    }

    /// Whether every outside vertex can still be attached.
    fn reachable(&self, tree: u64) -> bool {
        let outside = self.full & !tree;
        let mut reached = 0u64;
        for u in 0..self.n {
            if tree >> u & 1 == 1 {
                reached |= self.adj[u] & outside & !self.excluded[u];
            }
        }
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & outside & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached == outside
    }
}

/// Result of the leaf-reduction construction on the prism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafReduction {
    /// Spanning tree of `P(G)` with at most `t - 1` leaves.
    pub tree: LeafTree,
    /// Leaf counts of `T_0, T_1, .., T_{t-1}`.
    pub history: Vec<usize>,
    /// Edges added (`vertical`) and removed (`removed`) at each step `j >= 1`.
    pub swaps: Vec<((usize, usize), (usize, usize))>,
    /// Steps where the first-choice removal broke the bound and a scan of
    /// the whole cycle was needed.
    pub fallbacks: usize,
}

/// Builds a spanning tree of `P(G)` from a spanning tree `r` of `G` with
/// `t > 2` leaves: two copies of `r` joined at the first leaf, then for each
/// further leaf its vertical edge is added and one cycle edge at a vertex of
/// degree at least 3 is removed. Every step keeps at most `2t - 2 - j` leaves.
pub fn lemma1_reduce(g: &Graph, r: &LeafTree) -> Result<LeafReduction, TreeError> {
    let n = g.order();
    let r = LeafTree::new(g, r.edges().iter().copied())?;
    let t = r.leaf_count();
    if t <= 2 {
        return Err(TreeError::TooFewLeaves(t));
    }
    let host = prism(g).into_host();
    let leaves = r.leaves();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let link = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
    };
    for &(u, v) in r.edges() {
        link(&mut adj, u, v);
        link(&mut adj, u + n, v + n);
    }
    link(&mut adj, leaves[0], leaves[0] + n);
    let leaf_count = |adj: &Vec<Vec<usize>>| adj.iter().filter(|a| a.len() == 1).count();
    let mut history = vec![leaf_count(&adj)];
    let mut swaps = Vec::new();
    let mut fallbacks = 0;
    for (j, &leaf) in leaves.iter().enumerate().skip(1) {
        let (a, b) = (leaf, leaf + n);
        let cycle = tree_path(&adj, a, b);
        link(&mut adj, a, b);
        let bound = 2 * t - 2 - j;
        let mut cycle_edges: Vec<(usize, usize)> = cycle.windows(2).map(|w| (w[0], w[1])).collect();
        cycle_edges.push((b, a));
        let removal_leaves = |adj: &Vec<Vec<usize>>, (x, y): (usize, usize)| {
            let base = leaf_count(adj);
            base + usize::from(adj[x].len() == 2) + usize::from(adj[y].len() == 2)
        };
        let mut on_cycle: Vec<usize> = cycle.clone();
        on_cycle.sort_unstable();
        let first_choice = on_cycle.iter().find(|&&v| adj[v].len() >= 3).and_then(|&v| {
            let mut incident: Vec<(usize, usize)> = cycle_edges
                .iter()
                .copied()
                .filter(|&(x, y)| x == v || y == v)
                .collect();
            incident.sort_by_key(|&(x, y)| if x == v { y } else { x });
            incident.into_iter().find(|&e| removal_leaves(&adj, e) <= bound)
        });
        let removed = match first_choice {
            Some(e) => e,
            None => {
                fallbacks += 1;
                let mut all = cycle_edges.clone();
                all.sort_by_key(|&(x, y)| (x.min(y), x.max(y)));
                all.into_iter()
                    .find(|&e| removal_leaves(&adj, e) <= bound)
                    .ok_or(TreeError::NoValidSwap { step: j })?
            }
        };
        let (x, y) = removed;
        adj[x].retain(|&w| w != y);
        adj[y].retain(|&w| w != x);
        let now = leaf_count(&adj);
        debug_assert!(now <= bound);
        history.push(now);
        swaps.push(((a, b), (x.min(y), x.max(y))));
    }
    let edges = (0..2 * n).flat_map(|u| adj[u].iter().filter(move |&&w| u < w).map(move |&w| (u, w)));
    let tree = LeafTree::new(&host, edges.collect::<Vec<_>>())?;
    Ok(LeafReduction {
        tree,
        history,
        swaps,
        fallbacks,
    })
}

/// The tree path from `a` to `b`, inclusive.
fn tree_path(adj: &[Vec<usize>], a: usize, b: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        if v == b {
            break;
        }
        for &w in &adj[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![b];
    let mut v = b;
    while v != a {
        v = prev[v];
        path.push(v);
    }
    path.reverse();
    path
}

fn exact_ml(g: &Graph, budget: &Budget) -> Result<usize, TreeError> {
    let ml = min_leaf_number(g, budget)?;
    if !ml.exact {
        return Err(TreeError::Inexact { best: ml.value });
    }
    Ok(ml.value)
}

/// Number of prism applications after which `G` becomes traceable:
/// `ml(G) - 2`.
pub fn traceable_threshold(g: &Graph, budget: &Budget) -> Result<usize, TreeError> {
    Ok(exact_ml(g, budget)? - 2)
}

/// A prism power that is guaranteed to have the Pairing-Hamiltonian
/// property: `ml(G) + 3`. This relies on prisms of traceable graphs
/// becoming PH after five applications, which is only known, not checked
/// here; it is far out of reach of exhaustive verification.
pub fn ph_power_upper_bound(g: &Graph, budget: &Budget) -> Result<usize, TreeError> {
    Ok(exact_ml(g, budget)? + 3)
}

/// Verdict for one level of the prism-power probe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCheck {
    pub k: usize,
    pub order: usize,
    pub is_ph: bool,
    pub witness: Option<Pairing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PhPowerOutcome {
    /// `P^k(G)` is PH and no smaller checked power is.
    Found { k: usize },
    /// Every power up to `max_k` was verified and none is PH.
    NotFound { max_k: usize },
    /// The probe stopped at power `k` without a verdict.
    Exhausted { k: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhPowerProbe {
    pub outcome: PhPowerOutcome,
    pub levels: Vec<LevelCheck>,
}

impl PhPowerProbe {
    pub fn value(&self) -> Option<usize> {
        match self.outcome {
            PhPowerOutcome::Found { k } => Some(k),
            _ => None,
        }
    }
}

/// Smallest `k <= max_k` with `P^k(G)` PH, by exhaustive verification of
/// each power in turn. Powers with odd order are skipped; powers above
/// `caps.verify_vertices` vertices end the probe.
pub fn ph_power_exact(
    g: &Graph,
    max_k: usize,
    budget: &Budget,
    caps: &Caps,
    workers: usize,
) -> Result<PhPowerProbe, TreeError> {
    if !g.is_connected() {
        return Err(TreeError::Disconnected);
    }
    let mut levels = Vec::new();
    for k in 0..=max_k {
        let order = g.order().checked_shl(k as u32).unwrap_or(usize::MAX);
        if order % 2 == 1 || order < 4 {
            continue;
        }
        if order > caps.verify_vertices {
            return Ok(PhPowerProbe {
                outcome: PhPowerOutcome::Exhausted {
                    k,
                    reason: format!(
                        "P^{k}(G) has {order} vertices, above the verification cap of {}",
                        caps.verify_vertices
                    ),
                },
                levels,
            });
        }
        let tower = prism_power_with_cap(g, k, caps.tower_vertices)?;
        match verify_ph(tower.top(), budget, workers) {
            Ok(v) => {
                levels.push(LevelCheck {
                    k,
                    order,
                    is_ph: v.is_ph,
                    witness: v.witness,
                });
                if v.is_ph {
                    return Ok(PhPowerProbe {
                        outcome: PhPowerOutcome::Found { k },
                        levels,
                    });
                }
            }
            Err(e @ (VerifyError::BudgetExceeded { .. } | VerifyError::Search(_))) => {
                return Ok(PhPowerProbe {
                    outcome: PhPowerOutcome::Exhausted {
                        k,
                        reason: e.to_string(),
                    },
                    levels,
                });
            }
            Err(VerifyError::Domain(e)) => unreachable!("order is even and at least 4: {e}"),
        }
    }
    Ok(PhPowerProbe {
        outcome: PhPowerOutcome::NotFound { max_k },
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_graph, cycle, hypercube, path, spider, star};
    use crate::graph::path::is_traceable;

    /// Independent oracle: every (n-1)-edge subset, keep the spanning trees.
    fn brute_force_ml(g: &Graph) -> usize {
        let m = g.size();
        let n = g.order();
        let mut best = usize::MAX;
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != n - 1 {
                continue;
            }
            let edges = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| g.edges()[i]);
            if let Ok(t) = LeafTree::new(g, edges) {
                best = best.min(t.leaf_count());
            }
        }
        best
    }

    #[test]
    fn ml_examples() {
        let b = Budget::UNLIMITED;
        assert_eq!(min_leaf_number(&path(5).unwrap(), &b).unwrap().value, 2);
        let k13 = star(4).unwrap();
        assert_eq!(brute_force_ml(&k13), 3);
        let r = min_leaf_number(&k13, &b).unwrap();
        assert_eq!((r.value, r.exact), (3, true));
        assert_eq!(r.witness.leaf_count(), 3);
        for n in 3..8 {
            assert_eq!(min_leaf_number(&cycle(n).unwrap(), &b).unwrap().value, 2);
        }
        assert_eq!(
            r.to_json(),
            r#"{"ml":3,"exact":true,"witness_edges":[[0,1],[0,2],[0,3]]}"#
        );
    }

    #[test]
    fn ml_agrees_with_edge_subset_enumeration() {
        let graphs = [
            star(6).unwrap(),
            spider(3, 2).unwrap(),
            spider(4, 1).unwrap(),
            Graph::new(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (1, 2)]).unwrap(),
            Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)]).unwrap(),
            Graph::new(8, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (5, 6), (5, 7), (1, 2)]).unwrap(),
        ];
        for g in &graphs {
            let r = min_leaf_number(g, &Budget::UNLIMITED).unwrap();
            assert!(r.exact);
            assert_eq!(r.value, brute_force_ml(g), "{g:?}");
            assert_eq!(r.witness.leaf_count(), r.value);
        }
    }

    #[test]
    fn ml_errors() {
        let b = Budget::UNLIMITED;
        assert_eq!(min_leaf_number(&Graph::empty(3), &b), Err(TreeError::Disconnected));
        assert_eq!(min_leaf_number(&Graph::empty(1), &b), Err(TreeError::TooSmall(1)));
        assert!(matches!(
            min_leaf_number(&hypercube(4).unwrap(), &b),
            Err(TreeError::Cap { n: 16, cap: 14 })
        ));
    }

    #[test]
    fn ml_budget_downgrades_to_bound() {
        let g = spider(5, 2).unwrap();
        let r = min_leaf_number(&g, &Budget::UNLIMITED.with_max_nodes(3)).unwrap();
        assert!(!r.exact);
        assert!(r.value >= 5);
        assert_eq!(r.witness.leaf_count(), r.value);
        assert_eq!(min_leaf_number(&g, &Budget::UNLIMITED).unwrap().value, 5);
    }

    #[test]
    fn reduction_on_the_claw() {
        let k13 = star(4).unwrap();
        let r = LeafTree::new(&k13, k13.edges().iter().copied()).unwrap();
        let red = lemma1_reduce(&k13, &r).unwrap();
        assert!(red.tree.leaf_count() <= 2);
        assert_eq!(red.history[0], 4);
        for (j, &leaves) in red.history.iter().enumerate() {
            assert!(leaves <= 2 * 3 - 2 - j);
        }
        let host = prism(&k13).into_host();
        assert!(LeafTree::new(&host, red.tree.edges().iter().copied()).is_ok());
    }

    #[test]
    fn reduction_on_four_leg_spider() {
        let g = spider(4, 2).unwrap();
        let r = min_leaf_number(&g, &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value, 4);
        let red = lemma1_reduce(&g, &r.witness).unwrap();
        assert!(red.tree.leaf_count() <= 3);
        let prism_ml = min_leaf_number_with_cap(prism(&g).host(), &Budget::UNLIMITED, 18).unwrap();
        assert!(prism_ml.value <= red.tree.leaf_count());
    }

    #[test]
    fn reduction_rejects_paths() {
        let p = path(4).unwrap();
        let r = LeafTree::new(&p, p.edges().iter().copied()).unwrap();
        assert_eq!(lemma1_reduce(&p, &r), Err(TreeError::TooFewLeaves(2)));
    }

    #[test]
    fn leaf_tree_validation() {
        let c4 = cycle(4).unwrap();
        assert!(LeafTree::new(&c4, [(0, 1), (1, 2)]).is_err());
        assert!(LeafTree::new(&c4, [(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(LeafTree::new(&c4, [(0, 1), (1, 2), (2, 3)]).is_ok());
    }

    #[test]
    fn thresholds() {
        let b = Budget::UNLIMITED;
        assert_eq!(traceable_threshold(&path(4).unwrap(), &b).unwrap(), 0);
        assert_eq!(traceable_threshold(&star(4).unwrap(), &b).unwrap(), 1);
        assert_eq!(traceable_threshold(&star(6).unwrap(), &b).unwrap(), 3);
        assert_eq!(ph_power_upper_bound(&path(4).unwrap(), &b).unwrap(), 5);
        assert_eq!(ph_power_upper_bound(&star(4).unwrap(), &b).unwrap(), 6);
        assert_eq!(ph_power_upper_bound(&cycle(4).unwrap(), &b).unwrap(), 5);
        assert!(is_traceable(prism(&star(4).unwrap()).host()).unwrap().is_some());
    }

    #[test]
    fn power_probe_small_cases() {
        let caps = Caps::default();
        let b = Budget::UNLIMITED;
        let q2 = ph_power_exact(&hypercube(2).unwrap(), 3, &b, &caps, 1).unwrap();
        assert_eq!(q2.value(), Some(0));
        let k4 = ph_power_exact(&complete_graph(4).unwrap(), 3, &b, &caps, 1).unwrap();
        assert_eq!(k4.value(), Some(0));
        let capped = Caps { verify_vertices: 8, ..caps };
        let c6 = ph_power_exact(&cycle(6).unwrap(), 2, &b, &capped, 1).unwrap();
        assert_eq!(c6.levels.len(), 1);
        assert!(!c6.levels[0].is_ph);
        assert!(matches!(c6.outcome, PhPowerOutcome::Exhausted { k: 1, .. }));
        assert!(ph_power_exact(&Graph::empty(2), 1, &b, &caps, 1).is_err());
    }
}
