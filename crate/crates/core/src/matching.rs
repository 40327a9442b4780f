//! Pairings, perfect matchings, alternating cycle structure and the
//! exhaustive Pairing-Hamiltonian check.
//!
//! A *pairing* of a vertex set is any partition into unordered pairs; a
//! *perfect matching* of a graph is a pairing whose pairs are all edges. A
//! pairing `P` *extends* through a perfect matching `N` when `P ∪ N` is a
//! single cycle through every vertex.

use std::fmt;
use std::ops::Deref;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::Budget;
use crate::graph::path::SearchError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("a pairing needs an even number of vertices, got {0}")]
    OddOrder(usize),
    #[error("Pairing-Hamiltonian queries need an even order of at least 4, got {0}")]
    TooFewVertices(usize),
    #[error("not a pairing of 0..{n}: {reason}")]
    NotAPairing { n: usize, reason: String },
    #[error("pair ({0}, {1}) is not an edge of the host graph")]
    NotAnEdge(usize, usize),
    #[error("vertex counts differ: {0} versus {1}")]
    SizeMismatch(usize, usize),
    #[error("{0} vertices give too many pairings to index")]
    TooManyPairings(usize),
}

/// A partition of `0..n` into unordered pairs, stored canonically: each pair
/// as `(u, v)` with `u < v`, pairs sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn new<I>(n: usize, pairs: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n % 2 == 1 {
            return Err(MatchingError::OddOrder(n));
        }
        let bad = |reason: String| MatchingError::NotAPairing { n, reason };
        let mut seen = vec![false; n];
        let mut list = Vec::with_capacity(n / 2);
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(bad(format!("pair ({u}, {v}) leaves the vertex range")));
            }
            if u == v {
                return Err(bad(format!("vertex {u} is paired with itself")));
            }
            for x in [u, v] {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(bad(format!("vertex {x} appears twice")));
                }
            }
            list.push((u.min(v), u.max(v)));
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(bad(format!("vertex {x} is not covered")));
        }
        list.sort_unstable();
        Ok(Self { n, pairs: list })
    }

    /// Builds a pairing from a partner table (`partner[v]` is paired with `v`).
    pub fn from_partners(partner: &[usize]) -> Result<Self, MatchingError> {
        let n = partner.len();
        for (v, &w) in partner.iter().enumerate() {
            if w >= n || partner[w] != v {
                return Err(MatchingError::NotAPairing {
                    n,
                    reason: format!("partner table is not an involution at {v}"),
                });
            }
        }
        Self::new(n, (0..n).filter(|&v| v < partner[v]).map(|v| (v, partner[v])))
    }

    pub(crate) fn from_canonical(n: usize, pairs: Vec<(usize, usize)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        Self { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// `partners()[v]` is the vertex paired with `v`.
    pub fn partners(&self) -> Vec<usize> {
        let mut p = vec![0; self.n];
        for &(u, v) in &self.pairs {
            p[u] = v;
            p[v] = u;
        }
        p
    }

    /// Number of pairs shared with `other`.
    pub fn common_pairs(&self, other: &Pairing) -> usize {
        self.pairs.iter().filter(|&&(u, v)| other.contains(u, v)).count()
    }

    /// `(n - 1)!!`, the number of pairings of `n` vertices, if it fits in a `u64`.
    pub fn count(n: usize) -> Option<u64> {
        if n % 2 == 1 {
            return Some(0);
        }
        (1..n).step_by(2).try_fold(1u64, |acc, f| acc.checked_mul(f as u64))
    }

    /// Position of this pairing in the canonical enumeration order.
    pub fn rank(&self) -> Result<u64, MatchingError> {
        let total = Self::count(self.n).ok_or(MatchingError::TooManyPairings(self.n))?;
        let partner = self.partners();
        let mut free: Vec<usize> = (0..self.n).collect();
        let mut index = 0u64;
        let mut block = total;
        while let Some(&u) = free.first() {
            let digit = free[1..]
                .iter()
                .position(|&w| w == partner[u])
                .expect("partner is unpaired");
            block /= (free.len() - 1) as u64;
            index += digit as u64 * block;
            let w = partner[u];
            free.retain(|&x| x != u && x != w);
        }
        Ok(index)
    }

    /// The `index`-th pairing of `0..n` in canonical order.
    pub fn unrank(n: usize, index: u64) -> Result<Self, MatchingError> {
        if n % 2 == 1 {
            return Err(MatchingError::OddOrder(n));
        }
        let total = Self::count(n).ok_or(MatchingError::TooManyPairings(n))?;
        if index >= total {
            return Err(MatchingError::NotAPairing {
                n,
                reason: format!("index {index} is beyond the {total} pairings"),
            });
        }
        let mut free: Vec<usize> = (0..n).collect();
        let mut rest = index;
        let mut block = total;
        let mut pairs = Vec::with_capacity(n / 2);
        while free.len() >= 2 {
            block /= (free.len() - 1) as u64;
            let digit = (rest / block) as usize;
            rest %= block;
            let u = free.remove(0);
            let w = free.remove(digit);
            pairs.push((u, w));
        }
        Ok(Self::from_canonical(n, pairs))
    }

    /// A uniformly random pairing of `0..n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self, MatchingError> {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        Self::new(n, order.chunks(2).map(|c| (c[0], c[1])))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pairing serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Debug for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pairing(n={}, {:?})", self.n, self.pairs)
    }
}

#[derive(Serialize, Deserialize)]
struct PairingJson {
    n: usize,
    pairs: Vec<[usize; 2]>,
}

impl Serialize for Pairing {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PairingJson {
            n: self.n,
            pairs: self.pairs.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Pairing {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PairingJson::deserialize(deserializer)?;
        Pairing::new(raw.n, raw.pairs.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}

/// A pairing whose pairs are all edges of a host graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfectMatching(Pairing);

impl PerfectMatching {
    pub fn new(host: &Graph, pairing: Pairing) -> Result<Self, MatchingError> {
        if host.order() != pairing.n() {
            return Err(MatchingError::SizeMismatch(host.order(), pairing.n()));
        }
        if let Some(&(u, v)) = pairing.pairs().iter().find(|&&(u, v)| !host.has_edge(u, v)) {
            return Err(MatchingError::NotAnEdge(u, v));
        }
        Ok(Self(pairing))
    }

    pub(crate) fn new_unchecked(pairing: Pairing) -> Self {
        Self(pairing)
    }

    pub fn as_pairing(&self) -> &Pairing {
        &self.0
    }

    pub fn into_pairing(self) -> Pairing {
        self.0
    }
}

impl Deref for PerfectMatching {
    type Target = Pairing;

    fn deref(&self) -> &Pairing {
        &self.0
    }
}

impl fmt::Debug for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PerfectMatching(n={}, {:?})", self.0.n, self.0.pairs)
    }
}

/// Depth-first enumeration of perfect matchings: the smallest unmatched
/// vertex is always matched next, to candidates in ascending order.
pub struct MatchingIter {
    candidates: Vec<Vec<usize>>,
    partner: Vec<Option<usize>>,
    /// `(vertex, index of the next candidate to try)`
    stack: Vec<(usize, usize)>,
    descend: bool,
    done: bool,
}

impl MatchingIter {
    fn new(candidates: Vec<Vec<usize>>) -> Self {
        let n = candidates.len();
        Self {
            candidates,
            partner: vec![None; n],
            stack: Vec::new(),
            descend: true,
            done: n % 2 == 1,
        }
    }

    fn current(&self) -> Pairing {
        let n = self.partner.len();
        let pairs = (0..n)
            .filter_map(|v| self.partner[v].filter(|&w| v < w).map(|w| (v, w)))
            .collect();
        Pairing::from_canonical(n, pairs)
    }
}

impl Iterator for MatchingIter {
    type Item = Pairing;

    fn next(&mut self) -> Option<Pairing> {
        loop {
            if self.done {
                return None;
            }
            if self.descend {
                match self.partner.iter().position(Option::is_none) {
                    None => {
                        self.descend = false;
                        if self.stack.is_empty() {
                            self.done = true;
                        }
                        return Some(self.current());
                    }
                    Some(u) => self.stack.push((u, 0)),
                }
            }
            let Some(&mut (u, ref mut idx)) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            if let Some(w) = self.partner[u].take() {
                self.partner[w] = None;
            }
            let cands = &self.candidates[u];
            match (*idx..cands.len()).find(|&i| self.partner[cands[i]].is_none() && cands[i] != u) {
                Some(i) => {
                    *idx = i + 1;
                    let w = cands[i];
                    self.partner[u] = Some(w);
                    self.partner[w] = Some(u);
                    self.descend = true;
                }
                None => {
                    self.stack.pop();
                    self.descend = false;
                }
            }
        }
    }
}

/// Every pairing of `0..n` in canonical order ("pair the smallest unpaired
/// vertex next, partners ascending").
pub fn enumerate_pairings(n: usize) -> Result<MatchingIter, MatchingError> {
    if n % 2 == 1 {
        return Err(MatchingError::OddOrder(n));
    }
    if n < 4 {
        return Err(MatchingError::TooFewVertices(n));
    }
    Ok(MatchingIter::new((0..n).map(|_| (0..n).collect()).collect()))
}

/// Every perfect matching of `g`, in the same canonical order.
pub fn enumerate_perfect_matchings(g: &Graph) -> impl Iterator<Item = PerfectMatching> {
    let candidates = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    MatchingIter::new(candidates).map(PerfectMatching::new_unchecked)
}

/// Which of the two input pairings contributed a cycle step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// One alternating cycle. Step `i` goes from `vertices[i]` to
/// `vertices[(i + 1) % len]` along a pair of `sources[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub sources: Vec<Side>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Steps as `(from, to, side)`.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize, Side)> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| (self.vertices[i], self.vertices[(i + 1) % len], self.sources[i]))
    }
}

/// The multiset union of two pairings as vertex-disjoint alternating cycles.
/// Each cycle starts at its smallest vertex and leaves it along side `A`;
/// cycles are listed by starting vertex. A pair shared by both pairings
/// forms a cycle of length 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Cycle::len).collect()
    }

    pub fn is_single_cycle(&self) -> bool {
        self.cycles.len() == 1
    }
}

pub fn union_cycle_decomposition(a: &Pairing, b: &Pairing) -> Result<CycleDecomposition, MatchingError> {
    if a.n() != b.n() {
        return Err(MatchingError::SizeMismatch(a.n(), b.n()));
    }
    let (pa, pb) = (a.partners(), b.partners());
    let mut seen = vec![false; a.n()];
    let mut cycles = Vec::new();
    for start in 0..a.n() {
        if seen[start] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut sources = Vec::new();
        let mut v = start;
        loop {
            seen[v] = true;
            vertices.push(v);
            sources.push(Side::A);
            let w = pa[v];
            seen[w] = true;
            vertices.push(w);
            sources.push(Side::B);
            v = pb[w];
            if v == start {
                break;
            }
        }
        cycles.push(Cycle { vertices, sources });
    }
    Ok(CycleDecomposition { cycles })
}

/// Whether `p ∪ n` is a Hamiltonian cycle of the complete graph: the two
/// pairings are disjoint and their union is one cycle through all vertices.
pub fn is_hamiltonian_extension(p: &Pairing, n: &Pairing) -> bool {
    p.n() == n.n()
        && p.n() >= 4
        && p.common_pairs(n) == 0
        && union_cycle_decomposition(p, n).is_ok_and(|d| d.is_single_cycle())
}

/// The Hamiltonian cycle `p ∪ n` as a vertex sequence starting at 0, or
/// `None` if the union is not a single cycle.
pub fn hamiltonian_cycle(p: &Pairing, n: &Pairing) -> Option<Vec<usize>> {
    if !is_hamiltonian_extension(p, n) {
        return None;
    }
    let d = union_cycle_decomposition(p, n).ok()?;
    d.cycles.into_iter().next().map(|c| c.vertices)
}

/// Searches for a perfect matching `N` of `g` such that `p ∪ N` is a
/// Hamiltonian cycle, with no work limit.
pub fn find_extension_bruteforce(g: &Graph, p: &Pairing) -> Result<Option<PerfectMatching>, SearchError> {
    find_extension_budgeted(g, p, None)
}

/// The extension search behind [`find_extension_bruteforce`].
///
/// Grows an alternating closed walk from vertex 0: follow the pairing to the
/// partner, then branch over edges of `g` (ascending neighbor order) to
/// unvisited vertices, and close back to 0 once every vertex is visited. The
/// first walk found is returned, so the answer is deterministic.
pub fn find_extension_budgeted(
    g: &Graph,
    p: &Pairing,
    max_nodes: Option<u64>,
) -> Result<Option<PerfectMatching>, SearchError> {
    let n = g.order();
    assert_eq!(n, p.n(), "pairing and graph must have the same vertex set");
    if n < 4 {
        return Ok(None);
    }
    let adj = g.adjacency_masks().ok_or(SearchError::TooLarge { n })?;
    let partner = p.partners();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = ExtensionSearch {
        adj,
        partner,
        full,
        chosen: Vec::with_capacity(n / 2),
        nodes: 0,
        max_nodes,
    };
    let first = search.partner[0];
    if !search.grow(1 | (1 << first), first)? {
        return Ok(None);
    }
    let pairing = Pairing::new(n, search.chosen).expect("search builds a pairing");
    debug_assert!(is_hamiltonian_extension(p, &pairing));
    Ok(Some(PerfectMatching::new_unchecked(pairing)))
}

struct ExtensionSearch {
    adj: Vec<u64>,
    partner: Vec<usize>,
    full: u64,
    chosen: Vec<(usize, usize)>,
    nodes: u64,
    max_nodes: Option<u64>,
}

impl ExtensionSearch {
    /// `cur` was just reached along its pairing edge.
    fn grow(&mut self, visited: u64, cur: usize) -> Result<bool, SearchError> {
        if visited == self.full {
            if self.adj[cur] & 1 == 1 {
                self.chosen.push((cur, 0));
                return Ok(true);
            }
            return Ok(false);
        }
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            return Err(SearchError::BudgetExceeded { nodes: self.nodes - 1 });
        }
        let unvisited = self.full & !visited;
        // The closing edge reaches 0 from a vertex not yet on the walk.
        if self.adj[0] & (unvisited | (1 << cur)) == 0 {
            return Ok(false);
        }
        // Each unvisited vertex needs a matching edge to a vertex that can
        // still be its cycle neighbor.
        let avail = unvisited | (1 << cur) | 1;
        let mut rest = unvisited;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[x] & avail & !(1 << self.partner[x]) == 0 {
                return Ok(false);
            }
        }
        let mut cand = self.adj[cur] & unvisited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let w2 = self.partner[w];
            self.chosen.push((cur, w));
            if self.grow(visited | (1 << w) | (1 << w2), w2)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

/// Counters reported with a verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyStats {
    pub pairings_checked: u64,
    pub extensions_found: u64,
}

/// Outcome of an exhaustive Pairing-Hamiltonian check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhVerdict {
    pub is_ph: bool,
    /// The first pairing (canonical order) with no extension, when not PH.
    pub witness: Option<Pairing>,
    pub stats: VerifyStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Domain(#[from] MatchingError),
    #[error(transparent)]
    Search(SearchError),
    #[error("budget exhausted after {} pairings: {reason}", stats.pairings_checked)]
    BudgetExceeded { stats: VerifyStats, reason: String },
}

/// Pairings are checked in fixed-size batches in canonical order, so the
/// reported witness and counters do not depend on the worker count.
const VERIFY_BATCH: u64 = 2048;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Check {
    Extends,
    Stuck,
    OutOfBudget,
}

/// Checks every pairing of `V(g)` for an extension. With `workers > 1` each
/// batch is spread over a thread pool; results are reduced by canonical index.
pub fn verify_ph(g: &Graph, budget: &Budget, workers: usize) -> Result<PhVerdict, VerifyError> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(MatchingError::OddOrder(n).into());
    }
    if n < 4 {
        return Err(MatchingError::TooFewVertices(n).into());
    }
    if n > 64 {
        return Err(VerifyError::Search(SearchError::TooLarge { n }));
    }
    let total = Pairing::count(n).ok_or(MatchingError::TooManyPairings(n))?;
    let check = |index: u64| -> Check {
        let p = Pairing::unrank(n, index).expect("index is in range");
        match find_extension_budgeted(g, &p, budget.max_nodes) {
            Ok(Some(_)) => Check::Extends,
            Ok(None) => Check::Stuck,
            Err(_) => Check::OutOfBudget,
        }
    };
    let pool = if workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool construction"),
        )
    } else {
        None
    };
    let mut stats = VerifyStats::default();
    let mut start = 0u64;
    while start < total {
        if budget.max_pairings.is_some_and(|m| start >= m) {
            return Err(VerifyError::BudgetExceeded {
                stats,
                reason: format!("pairing limit reached before all {total} pairings were checked"),
            });
        }
        let mut end = (start + VERIFY_BATCH).min(total);
        if let Some(m) = budget.max_pairings {
            end = end.min(m.max(start + 1));
        }
        let results: Vec<Check> = match &pool {
            Some(pool) => pool.install(|| (start..end).into_par_iter().map(check).collect()),
            None => (start..end).map(check).collect(),
        };
        stats.pairings_checked += end - start;
        stats.extensions_found += results.iter().filter(|&&c| c == Check::Extends).count() as u64;
        if let Some(i) = results.iter().position(|&c| c == Check::Stuck) {
            let witness = Pairing::unrank(n, start + i as u64)?;
            return Ok(PhVerdict {
                is_ph: false,
                witness: Some(witness),
                stats,
            });
        }
        if results.contains(&Check::OutOfBudget) {
            return Err(VerifyError::BudgetExceeded {
                stats,
                reason: "node limit reached while searching for an extension".into(),
            });
        }
        start = end;
    }
    Ok(PhVerdict {
        is_ph: true,
        witness: None,
        stats,
    })
}
