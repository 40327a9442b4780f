//! The prism operator and iterated prisms.
//!
//! A prism over a graph on `b` vertices places layer 0 on labels `0..b` and
//! layer 1 on `b..2b`; vertex `v` of layer 0 is joined to its copy `v + b`.
//! Iterating gives the tower labeling: vertex `(x, w)` of `P^k(G)`, with `x`
//! a vertex of `G` and `w` a `k`-bit word, is labeled `x + |V(G)| * w`, and the
//! last prism applied corresponds to the highest bit of `w`.

use super::products::cartesian_edges;
use super::{Graph, GraphError};
use crate::config::Caps;

/// A graph presented as `P(H)`: two identically labeled layers joined by a
/// perfect matching of vertical edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismStructure {
    host: Graph,
    base_n: usize,
}

impl PrismStructure {
    /// Checks that `host` on `2 * base_n` vertices is a prism over its first
    /// layer under the low/high-half layer map.
    pub fn from_host(host: Graph, base_n: usize) -> Result<Self, GraphError> {
        let bad = |reason: &str| GraphError::InvalidParameter {
            family: "prism",
            reason: reason.to_string(),
        };
        if base_n == 0 || host.order() != 2 * base_n {
            return Err(bad("host order must be twice a positive base order"));
        }
        for v in 0..base_n {
            if !host.has_edge(v, v + base_n) {
                return Err(bad("a vertical edge is missing"));
            }
        }
        for &(u, v) in host.edges() {
            let (lu, lv) = (u / base_n, v / base_n);
            if lu != lv {
                if v != u + base_n {
                    return Err(bad("an edge joins the layers off the vertical matching"));
                }
            } else {
                let (a, b) = (u % base_n, v % base_n);
                if !host.has_edge(a + base_n * (1 - lu), b + base_n * (1 - lu)) {
                    return Err(bad("the two layers are not identically labeled copies"));
                }
            }
        }
        Ok(Self { host, base_n })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Order of the graph the prism was built over.
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    /// 0 for the low half of the labels, 1 for the high half.
    pub fn layer_of(&self, v: usize) -> usize {
        v / self.base_n
    }

    /// The copy of `v` in the other layer.
    pub fn mirror(&self, v: usize) -> usize {
        if v < self.base_n {
            v + self.base_n
        } else {
            v - self.base_n
        }
    }

    pub fn is_vertical(&self, u: usize, v: usize) -> bool {
        u.abs_diff(v) == self.base_n
    }

    /// The graph each layer induces, on labels `0..base_n`.
    pub fn layer_graph(&self) -> Graph {
        self.host.induced_prefix(self.base_n)
    }

    pub fn vertical_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.base_n).map(|v| (v, v + self.base_n))
    }

    pub fn into_host(self) -> Graph {
        self.host
    }
}

/// The prism `P(G) = G □ K_2`.
pub fn prism(g: &Graph) -> PrismStructure {
    let k2 = Graph::from_sorted_edges(2, vec![(0, 1)]);
    let host = Graph::from_edges_dedup(2 * g.order(), cartesian_edges(g, &k2));
    PrismStructure {
        host,
        base_n: g.order(),
    }
}

/// `P^k(G)` together with every intermediate level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismTower {
    base: Graph,
    levels: Vec<PrismStructure>,
}

impl PrismTower {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Number of prism applications.
    pub fn k(&self) -> usize {
        self.levels.len()
    }

    /// `P^k(G)`.
    pub fn top(&self) -> &Graph {
        self.level_graph(self.k())
    }

    /// `P^j(G)` for `j <= k`.
    pub fn level_graph(&self, j: usize) -> &Graph {
        match j {
            0 => &self.base,
            _ => self.levels[j - 1].host(),
        }
    }

    /// `P^j(G)` viewed as a prism over `P^{j-1}(G)`, for `1 <= j <= k`.
    pub fn structure(&self, j: usize) -> &PrismStructure {
        &self.levels[j - 1]
    }

    /// Tower label of base vertex `b` with layer word `w`.
    pub fn encode(&self, b: usize, w: usize) -> usize {
        b + self.base.order() * w
    }

    /// Inverse of [`PrismTower::encode`].
    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v % self.base.order(), v / self.base.order())
    }
}

/// `P^k(G)` under the default tower cap.
pub fn prism_power(g: &Graph, k: usize) -> Result<PrismTower, GraphError> {
    prism_power_with_cap(g, k, Caps::default().tower_vertices)
}

pub fn prism_power_with_cap(g: &Graph, k: usize, cap: usize) -> Result<PrismTower, GraphError> {
    let requested = u32::try_from(k)
        .ok()
        .and_then(|k| 1usize.checked_shl(k))
        .and_then(|p| p.checked_mul(g.order()))
        .unwrap_or(usize::MAX);
    if requested > cap {
        return Err(GraphError::SizeCap { requested, cap });
    }
    let mut levels: Vec<PrismStructure> = Vec::with_capacity(k);
    for _ in 0..k {
        let below = levels.last().map_or(g, PrismStructure::host);
        levels.push(prism(below));
    }
    Ok(PrismTower {
        base: g.clone(),
        levels,
    })
}
