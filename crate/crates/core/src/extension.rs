//! Constructive extension of pairings of iterated prisms.
//!
//! Given a pairing `P` of `P(H)` and an oracle that extends pairings of `H`,
//! split `P` into the pairs inside layer 0 (`P1`), inside layer 1 (`P2`) and
//! across (`X`).
//!
//! * With no cross pairs, extend `P1` to a Hamiltonian cycle of layer 0 with
//!   matching `M`, copy `M` into layer 1 as `M'`, and decompose `P2 ∪ M'`
//!   into alternating cycles. Each cycle is spliced into the layer-0 cycle
//!   by swapping one `M'` edge and its copy in `M` for two vertical edges.
//! * With `2r` cross pairs, close `P1` with a pairing `L` of the `2r` layer-0
//!   vertices touched by `X`, extend to get `M`, and read off the `r` paths of
//!   `P1 ∪ M`. Their endpoints, carried across `X`, give a pairing `R` that
//!   closes `P2`; extending `P2 ∪ R` gives `M'`, and `M ∪ M'` is the answer.
//!
//! Towers are handled by recursing on the last prism bit down to a base
//! oracle on `G`.

use std::collections::{HashMap, VecDeque};
use std::sync::{Mutex, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::dot::{EdgeStyle, Highlight};
use crate::graph::path::SearchError;
use crate::graph::{Graph, PrismStructure, PrismTower};
use crate::matching::{
    find_extension_budgeted, is_hamiltonian_extension, union_cycle_decomposition, MatchingError,
    Pairing, PerfectMatching, Side,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    /// The base graph has no extension for this pairing, so it is not PH.
    #[error("base pairing {pairing:?} has no Hamiltonian extension")]
    BaseNotExtendable { pairing: Pairing },
    #[error("base graph must have even order of at least 4, got {0}")]
    BadBase(usize),
    #[error(transparent)]
    Domain(#[from] MatchingError),
    #[error("base search failed: {0}")]
    Search(#[from] SearchError),
    #[error("level {level} produced a matching that is not a Hamiltonian extension")]
    InvalidOutput { level: usize },
    #[error("replay diverged: {0}")]
    ReplayMismatch(String),
}

/// A pairing of a prism split by layer. Pairs keep host labels; cross pairs
/// are written `(layer-0 vertex, layer-1 vertex)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingPartition {
    pub p1: Vec<(usize, usize)>,
    pub p2: Vec<(usize, usize)>,
    pub x: Vec<(usize, usize)>,
}

pub fn partition_pairing(p: &Pairing, s: &PrismStructure) -> Result<PairingPartition, MatchingError> {
    if p.n() != s.host().order() {
        return Err(MatchingError::SizeMismatch(s.host().order(), p.n()));
    }
    let mut part = PairingPartition {
        p1: Vec::new(),
        p2: Vec::new(),
        x: Vec::new(),
    };
    for &(u, v) in p.pairs() {
        match (s.layer_of(u), s.layer_of(v)) {
            (0, 0) => part.p1.push((u, v)),
            (1, 1) => part.p2.push((u, v)),
            _ => part.x.push((u, v)),
        }
    }
    Ok(part)
}

/// One recursion step of an extension, with the choices it made.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceStep {
    /// A base oracle answer.
    Base { pairing: Pairing, matching: Pairing },
    /// No cross pairs. `splices` are the chosen layer-1 matching edges, one
    /// per alternating cycle, in host labels.
    Case1 { cycles: usize, splices: Vec<(usize, usize)> },
    /// Cross pairs present. `l` closes layer 0, `r` closes layer 1 (host
    /// labels), `paths` are the layer-0 paths left after removing `l`.
    Case2 {
        l: Vec<(usize, usize)>,
        r: Vec<(usize, usize)>,
        paths: Vec<Vec<usize>>,
    },
}

/// Tree of recursion steps; children appear in oracle call order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionTrace {
    pub level: usize,
    pub step: TraceStep,
    pub children: Vec<ExtensionTrace>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub case1: usize,
    pub case2: usize,
    pub base_calls: usize,
}

impl ExtensionTrace {
    pub fn summary(&self) -> TraceSummary {
        let mut s = TraceSummary::default();
        self.walk(&mut |t| match t.step {
            TraceStep::Base { .. } => s.base_calls += 1,
            TraceStep::Case1 { .. } => s.case1 += 1,
            TraceStep::Case2 { .. } => s.case2 += 1,
        });
        s
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a ExtensionTrace)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    /// Base oracle answers in call order.
    pub fn base_answers(&self) -> Vec<(Pairing, Pairing)> {
        let mut out = Vec::new();
        self.walk(&mut |t| {
            if let TraceStep::Base { pairing, matching } = &t.step {
                out.push((pairing.clone(), matching.clone()));
            }
        });
        out
    }

    /// Re-runs the construction on `tower`, answering base queries from this
    /// trace instead of searching. Fails if any query differs from the record.
    pub fn replay(&self, tower: &PrismTower, pairing: &Pairing) -> Result<Extension, ExtendError> {
        let oracle = ReplayOracle {
            graph: tower.base().clone(),
            answers: Mutex::new(self.base_answers().into()),
        };
        let ext = extend(pairing, tower, &oracle)?;
        if &ext.trace != self {
            return Err(ExtendError::ReplayMismatch("trace differs".into()));
        }
        Ok(ext)
    }
}

/// A perfect matching extending some pairing, with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub matching: PerfectMatching,
    pub trace: ExtensionTrace,
}

/// Extends pairings of one fixed graph.
pub trait ExtensionOracle {
    /// The graph whose pairings this oracle extends.
    fn graph(&self) -> &Graph;

    /// Number of prism applications between the base graph and
    /// [`ExtensionOracle::graph`].
    fn level(&self) -> usize {
        0
    }

    fn extend(&self, pairing: &Pairing) -> Result<Extension, ExtendError>;
}

/// Brute-force oracle with a cache keyed by pairing. Safe to share between
/// threads; concurrent misses on the same key store identical answers.
pub struct MemoizedBaseOracle {
    graph: Graph,
    max_nodes: Option<u64>,
    cache: RwLock<HashMap<Pairing, Option<Pairing>>>,
}

impl MemoizedBaseOracle {
    pub fn new(graph: Graph) -> Result<Self, ExtendError> {
        Self::with_node_budget(graph, None)
    }

    pub fn with_node_budget(graph: Graph, max_nodes: Option<u64>) -> Result<Self, ExtendError> {
        let n = graph.order();
        if n % 2 == 1 || n < 4 {
            return Err(ExtendError::BadBase(n));
        }
        if n > 64 {
            return Err(SearchError::TooLarge { n }.into());
        }
        Ok(Self {
            graph,
            max_nodes,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn cached(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }
}

impl ExtensionOracle for MemoizedBaseOracle {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn extend(&self, pairing: &Pairing) -> Result<Extension, ExtendError> {
        if pairing.n() != self.graph.order() {
            return Err(MatchingError::SizeMismatch(self.graph.order(), pairing.n()).into());
        }
        let hit = self.cache.read().expect("cache lock").get(pairing).cloned();
        let answer = match hit {
            Some(a) => a,
            None => {
                let found = find_extension_budgeted(&self.graph, pairing, self.max_nodes)?
                    .map(PerfectMatching::into_pairing);
                self.cache
                    .write()
                    .expect("cache lock")
                    .insert(pairing.clone(), found.clone());
                found
            }
        };
        match answer {
            Some(matching) => Ok(Extension {
                matching: PerfectMatching::new_unchecked(matching.clone()),
                trace: ExtensionTrace {
                    level: 0,
                    step: TraceStep::Base {
                        pairing: pairing.clone(),
                        matching,
                    },
                    children: Vec::new(),
                },
            }),
            None => Err(ExtendError::BaseNotExtendable {
                pairing: pairing.clone(),
            }),
        }
    }
}

/// Serves recorded base answers in order.
struct ReplayOracle {
    graph: Graph,
    answers: Mutex<VecDeque<(Pairing, Pairing)>>,
}

impl ExtensionOracle for ReplayOracle {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn extend(&self, pairing: &Pairing) -> Result<Extension, ExtendError> {
        let (recorded, matching) = self
            .answers
            .lock()
            .expect("replay lock")
            .pop_front()
            .ok_or_else(|| ExtendError::ReplayMismatch("more base queries than recorded".into()))?;
        if &recorded != pairing {
            return Err(ExtendError::ReplayMismatch(format!(
                "expected base query {recorded:?}, got {pairing:?}"
            )));
        }
        Ok(Extension {
            matching: PerfectMatching::new(&self.graph, matching.clone())?,
            trace: ExtensionTrace {
                level: 0,
                step: TraceStep::Base {
                    pairing: recorded,
                    matching,
                },
                children: Vec::new(),
            },
        })
    }
}

fn shift(pairs: &[(usize, usize)], by: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    pairs.iter().map(move |&(u, v)| (u - by, v - by))
}

/// Checks the assembled matching and wraps it up.
fn finish(
    s: &PrismStructure,
    part: &PairingPartition,
    level: usize,
    pairs: Vec<(usize, usize)>,
    step: TraceStep,
    children: Vec<ExtensionTrace>,
) -> Result<Extension, ExtendError> {
    let n = s.host().order();
    let invalid = || ExtendError::InvalidOutput { level };
    let pairing = Pairing::new(n, pairs).map_err(|_| invalid())?;
    let matching = PerfectMatching::new(s.host(), pairing).map_err(|_| invalid())?;
    let input = Pairing::new(n, part.p1.iter().chain(&part.p2).chain(&part.x).copied())?;
    if !is_hamiltonian_extension(&input, &matching) {
        return Err(invalid());
    }
    Ok(Extension {
        matching,
        trace: ExtensionTrace {
            level,
            step,
            children,
        },
    })
}

/// The case without cross pairs. `oracle` extends pairings of the layer graph.
pub fn extend_case1<O: ExtensionOracle + ?Sized>(
    part: &PairingPartition,
    s: &PrismStructure,
    oracle: &O,
) -> Result<Extension, ExtendError> {
    assert!(part.x.is_empty(), "case 1 requires no cross pairs");
    let b = s.base_n();
    let level = oracle.level() + 1;
    let inner = oracle.extend(&Pairing::new(b, part.p1.iter().copied())?)?;
    let m = inner.matching.as_pairing();
    // In layer-local labels the mirrored matching is `m` itself.
    let p2 = Pairing::new(b, shift(&part.p2, b))?;
    let cycles = union_cycle_decomposition(&p2, m)?;
    let mut splices = Vec::with_capacity(cycles.cycles.len());
    for c in &cycles.cycles {
        let least = c
            .steps()
            .filter(|&(_, _, side)| side == Side::B)
            .map(|(u, v, _)| (u.min(v), u.max(v)))
            .min()
            .expect("every alternating cycle has a matching edge");
        splices.push(least);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(b);
    for &(u, v) in m.pairs() {
        if splices.binary_search(&(u, v)).is_err() {
            pairs.push((u, v));
            pairs.push((u + b, v + b));
        }
    }
    splices.sort_unstable();
    for &(x, y) in &splices {
        pairs.push((x, x + b));
        pairs.push((y, y + b));
    }
    let step = TraceStep::Case1 {
        cycles: cycles.cycles.len(),
        splices: splices.iter().map(|&(x, y)| (x + b, y + b)).collect(),
    };
    finish(s, part, level, pairs, step, vec![inner.trace])
}

/// The case with cross pairs. `oracle` extends pairings of the layer graph.
pub fn extend_case2<O: ExtensionOracle + ?Sized>(
    part: &PairingPartition,
    s: &PrismStructure,
    oracle: &O,
) -> Result<Extension, ExtendError> {
    assert!(!part.x.is_empty(), "case 2 requires cross pairs");
    let b = s.base_n();
    let level = oracle.level() + 1;
    let mut across = vec![usize::MAX; b];
    for &(u, v) in &part.x {
        across[u] = v;
    }
    let mut touched: Vec<usize> = part.x.iter().map(|&(u, _)| u).collect();
    touched.sort_unstable();
    if touched.len() % 2 == 1 {
        return Err(MatchingError::OddOrder(touched.len()).into());
    }
    let l: Vec<(usize, usize)> = touched.chunks(2).map(|c| (c[0], c[1])).collect();
    let closed = Pairing::new(b, part.p1.iter().chain(&l).copied())?;
    let first = oracle.extend(&closed)?;
    let m = first.matching.partners();
    let inner_pairing = closed.partners();

    // Walk the cycle with the `l` edges removed: from a touched vertex, take
    // the matching edge, then pairing edges inside layer 0, until the next
    // touched vertex.
    let mut used = vec![false; b];
    let mut paths = Vec::with_capacity(l.len());
    let mut r = Vec::with_capacity(l.len());
    for &start in &touched {
        if used[start] {
            continue;
        }
        let mut path = vec![start];
        let mut v = start;
        let end = loop {
            let w = m[v];
            path.push(w);
            if across[w] != usize::MAX {
                break w;
            }
            v = inner_pairing[w];
            path.push(v);
        };
        used[start] = true;
        used[end] = true;
        r.push((across[start].min(across[end]), across[start].max(across[end])));
        paths.push(path);
    }
    r.sort_unstable();
    let second = oracle.extend(&Pairing::new(b, shift(&part.p2, b).chain(shift(&r, b)))?)?;
    let pairs = first
        .matching
        .pairs()
        .iter()
        .copied()
        .chain(second.matching.pairs().iter().map(|&(u, v)| (u + b, v + b)))
        .collect();
    let step = TraceStep::Case2 { l, r, paths };
    finish(s, part, level, pairs, step, vec![first.trace, second.trace])
}

/// Extends pairings of `P^level(G)` by recursion on the tower.
struct TowerOracle<'a, B: ?Sized> {
    tower: &'a PrismTower,
    level: usize,
    base: &'a B,
}

impl<B: ExtensionOracle + ?Sized> ExtensionOracle for TowerOracle<'_, B> {
    fn graph(&self) -> &Graph {
        self.tower.level_graph(self.level)
    }

    fn level(&self) -> usize {
        self.level
    }

    fn extend(&self, pairing: &Pairing) -> Result<Extension, ExtendError> {
        if self.level == 0 {
            let ext = self.base.extend(pairing)?;
            if !is_hamiltonian_extension(pairing, &ext.matching)
                || PerfectMatching::new(self.tower.base(), ext.matching.as_pairing().clone()).is_err()
            {
                return Err(ExtendError::InvalidOutput { level: 0 });
            }
            return Ok(ext);
        }
        let s = self.tower.structure(self.level);
        let part = partition_pairing(pairing, s)?;
        let below = TowerOracle {
            tower: self.tower,
            level: self.level - 1,
            base: self.base,
        };
        if part.x.is_empty() {
            extend_case1(&part, s, &below)
        } else {
            extend_case2(&part, s, &below)
        }
    }
}

/// Extends a pairing of the top of `tower` to a Hamiltonian cycle, using
/// `base` for pairings of the base graph.
pub fn extend<B: ExtensionOracle + ?Sized>(
    pairing: &Pairing,
    tower: &PrismTower,
    base: &B,
) -> Result<Extension, ExtendError> {
    let n0 = tower.base().order();
    if n0 % 2 == 1 || n0 < 4 {
        return Err(ExtendError::BadBase(n0));
    }
    if base.graph() != tower.base() {
        return Err(MatchingError::SizeMismatch(tower.base().order(), base.graph().order()).into());
    }
    if pairing.n() != tower.top().order() {
        return Err(MatchingError::SizeMismatch(tower.top().order(), pairing.n()).into());
    }
    TowerOracle {
        tower,
        level: tower.k(),
        base,
    }
    .extend(pairing)
}

/// Edge sets for drawing an extension: the pairing in bold, the matching
/// dashed, and the top-level splice edges (case 1: the swapped matching
/// edges; case 2: `L` and `R`) dotted.
pub fn figure_highlights(pairing: &Pairing, ext: &Extension, s: &PrismStructure) -> Vec<Highlight> {
    let dotted: Vec<(usize, usize)> = match &ext.trace.step {
        TraceStep::Case1 { splices, .. } => splices
            .iter()
            .flat_map(|&(x, y)| [(x, y), (s.mirror(x), s.mirror(y))])
            .collect(),
        TraceStep::Case2 { l, r, .. } => l.iter().chain(r).copied().collect(),
        TraceStep::Base { .. } => Vec::new(),
    };
    let mut out = vec![
        Highlight::new("pairing", pairing.pairs().iter().copied(), EdgeStyle::Bold),
        Highlight::new("matching", ext.matching.pairs().iter().copied(), EdgeStyle::Dashed),
    ];
    if !dotted.is_empty() {
        out.push(Highlight::new("splice", dotted, EdgeStyle::Dotted));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_graph, cycle, hypercube};
    use crate::graph::{prism, prism_power};
    use crate::matching::enumerate_pairings;

    fn pairing(n: usize, pairs: &[(usize, usize)]) -> Pairing {
        Pairing::new(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn partition_examples() {
        let s = prism(&complete_graph(4).unwrap());
        let verticals = pairing(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]);
        let part = partition_pairing(&verticals, &s).unwrap();
        assert!(part.p1.is_empty() && part.p2.is_empty());
        assert_eq!(part.x.len(), 4);
        let layered = pairing(8, &[(0, 1), (2, 3), (4, 6), (5, 7)]);
        let part = partition_pairing(&layered, &s).unwrap();
        assert_eq!(part.p1, vec![(0, 1), (2, 3)]);
        assert_eq!(part.p2, vec![(4, 6), (5, 7)]);
        assert!(part.x.is_empty());
        assert!(partition_pairing(&pairing(4, &[(0, 1), (2, 3)]), &s).is_err());
    }

    #[test]
    fn case1_on_q3() {
        let q2 = hypercube(2).unwrap();
        let s = prism(&q2);
        let oracle = MemoizedBaseOracle::new(q2).unwrap();
        let p = pairing(8, &[(0, 3), (1, 2), (4, 5), (6, 7)]);
        let part = partition_pairing(&p, &s).unwrap();
        let ext = extend_case1(&part, &s, &oracle).unwrap();
        assert!(is_hamiltonian_extension(&p, &ext.matching));
        let TraceStep::Case1 { cycles, splices } = &ext.trace.step else { panic!() };
        assert_eq!(*cycles, splices.len());
        let verticals = ext.matching.pairs().iter().filter(|&&(u, v)| s.is_vertical(u, v)).count();
        assert_eq!(verticals, 2 * cycles);
    }

    #[test]
    fn case1_all_two_cycles_when_p2_copies_m() {
        let k4 = complete_graph(4).unwrap();
        let s = prism(&k4);
        let oracle = MemoizedBaseOracle::new(k4).unwrap();
        let p1 = pairing(4, &[(0, 1), (2, 3)]);
        let m = oracle.extend(&p1).unwrap().matching;
        let p = Pairing::new(
            8,
            p1.pairs().iter().copied().chain(m.pairs().iter().map(|&(u, v)| (u + 4, v + 4))),
        )
        .unwrap();
        let ext = extend_case1(&partition_pairing(&p, &s).unwrap(), &s, &oracle).unwrap();
        let TraceStep::Case1 { cycles, .. } = ext.trace.step else { panic!() };
        assert_eq!(cycles, 2);
        assert!(ext.matching.pairs().iter().all(|&(u, v)| s.is_vertical(u, v)));
    }

    #[test]
    fn case1_single_cycle_uses_two_verticals() {
        let k4 = complete_graph(4).unwrap();
        let s = prism(&k4);
        let oracle = MemoizedBaseOracle::new(k4).unwrap();
        // P1 = {01, 23} extends through {12, 03} (first found); P2 = {4 6, 5 7}
        // mirrored is {02, 13}, whose union with {12, 03} is one 4-cycle.
        let p = pairing(8, &[(0, 1), (2, 3), (4, 6), (5, 7)]);
        let ext = extend_case1(&partition_pairing(&p, &s).unwrap(), &s, &oracle).unwrap();
        let TraceStep::Case1 { cycles, .. } = ext.trace.step else { panic!() };
        assert_eq!(cycles, 1);
        let verticals = ext.matching.pairs().iter().filter(|&&(u, v)| s.is_vertical(u, v)).count();
        assert_eq!(verticals, 2);
    }

    #[test]
    fn case2_all_verticals() {
        let c4 = cycle(4).unwrap();
        let s = prism(&c4);
        let oracle = MemoizedBaseOracle::new(c4).unwrap();
        let p = pairing(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]);
        let ext = extend_case2(&partition_pairing(&p, &s).unwrap(), &s, &oracle).unwrap();
        assert!(is_hamiltonian_extension(&p, &ext.matching));
        let TraceStep::Case2 { l, r, paths } = &ext.trace.step else { panic!() };
        assert_eq!(l, &vec![(0, 1), (2, 3)]);
        assert_eq!(r.len(), 2);
        assert!(paths.iter().all(|p| p.len() >= 2));
        assert_eq!(paths.iter().map(Vec::len).sum::<usize>(), 4);
    }

    #[test]
    fn tower_extension_is_exhaustively_sound_on_q3() {
        let q2 = hypercube(2).unwrap();
        let t = prism_power(&q2, 1).unwrap();
        let oracle = MemoizedBaseOracle::new(q2).unwrap();
        for p in enumerate_pairings(8).unwrap() {
            let ext = extend(&p, &t, &oracle).unwrap();
            assert!(is_hamiltonian_extension(&p, &ext.matching));
            assert!(ext.matching.pairs().iter().all(|&(u, v)| t.top().has_edge(u, v)));
        }
        assert_eq!(oracle.cached(), 3);
    }

    #[test]
    fn trace_levels_and_replay() {
        let q2 = hypercube(2).unwrap();
        let t = prism_power(&q2, 2).unwrap();
        let oracle = MemoizedBaseOracle::new(q2).unwrap();
        let p = Pairing::unrank(16, 123_457).unwrap();
        let ext = extend(&p, &t, &oracle).unwrap();
        assert_eq!(ext.trace.level, 2);
        for child in &ext.trace.children {
            assert_eq!(child.level, 1);
        }
        let again = ext.trace.replay(&t, &p).unwrap();
        assert_eq!(again, ext);
        let other = Pairing::unrank(16, 99).unwrap();
        assert!(matches!(ext.trace.replay(&t, &other), Err(ExtendError::ReplayMismatch(_))));
    }

    #[test]
    fn non_ph_base_never_returns_invalid_output() {
        let c6 = cycle(6).unwrap();
        let t = prism_power(&c6, 1).unwrap();
        let oracle = MemoizedBaseOracle::new(c6.clone()).unwrap();
        let mut stuck = 0;
        for i in (0..10_395).step_by(7) {
            let p = Pairing::unrank(12, i).unwrap();
            match extend(&p, &t, &oracle) {
                Ok(ext) => assert!(is_hamiltonian_extension(&p, &ext.matching)),
                Err(ExtendError::BaseNotExtendable { pairing }) => {
                    assert_eq!(find_extension_budgeted(&c6, &pairing, None).unwrap(), None);
                    stuck += 1;
                }
                Err(e) => panic!("unexpected error {e}"),
            }
        }
        assert!(stuck > 0);
        let c6_stuck = pairing(6, &[(0, 1), (2, 5), (3, 4)]);
        assert!(matches!(
            extend(&c6_stuck, &prism_power(&cycle(6).unwrap(), 0).unwrap(), &oracle),
            Err(ExtendError::BaseNotExtendable { .. })
        ));
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(MemoizedBaseOracle::new(cycle(5).unwrap()).err(), Some(ExtendError::BadBase(5)));
        let t = prism_power(&Graph::empty(1), 3).unwrap();
        let oracle = MemoizedBaseOracle::new(hypercube(2).unwrap()).unwrap();
        assert_eq!(
            extend(&pairing(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]), &t, &oracle).err(),
            Some(ExtendError::BadBase(1))
        );
        let t = prism_power(&hypercube(2).unwrap(), 1).unwrap();
        assert!(extend(&pairing(4, &[(0, 1), (2, 3)]), &t, &oracle).is_err());
    }

    #[test]
    fn figure_has_three_styles() {
        let k4 = complete_graph(4).unwrap();
        let t = prism_power(&k4, 1).unwrap();
        let oracle = MemoizedBaseOracle::new(k4).unwrap();
        let p = pairing(8, &[(0, 1), (2, 3), (4, 6), (5, 7)]);
        let ext = extend(&p, &t, &oracle).unwrap();
        let hl = figure_highlights(&p, &ext, t.structure(1));
        let styles: Vec<_> = hl.iter().map(|h| h.style).collect();
        assert_eq!(styles, vec![EdgeStyle::Bold, EdgeStyle::Dashed, EdgeStyle::Dotted]);
    }
}
