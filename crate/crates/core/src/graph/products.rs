//! Cartesian and strong products. The pair `(u, v)` with `u` in the first
//! factor and `v` in the second is labeled `u + |V(G)| * v`.

use super::{Graph, GraphError};
use crate::config::Caps;

/// `G □ H` under the default product cap.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    cartesian_product_with_cap(g, h, Caps::default().product_vertices)
}

/// `G ⊠ H` under the default product cap.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    strong_product_with_cap(g, h, Caps::default().product_vertices)
}

pub fn cartesian_product_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Graph, GraphError> {
    let n = product_order(g, h, cap)?;
    Ok(Graph::from_edges_dedup(n, cartesian_edges(g, h)))
}

pub fn strong_product_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Graph, GraphError> {
    let n = product_order(g, h, cap)?;
    let gn = g.order();
    let diagonal = g.edges().iter().flat_map(move |&(u, u2)| {
        h.edges().iter().flat_map(move |&(v, v2)| {
            [(u + gn * v, u2 + gn * v2), (u + gn * v2, u2 + gn * v)]
        })
    });
    Ok(Graph::from_edges_dedup(n, cartesian_edges(g, h).chain(diagonal)))
}

/// Every `(u, v)` pair of vertex labels, in label order.
pub fn coordinates(g: &Graph, h: &Graph) -> impl Iterator<Item = (usize, usize)> {
    let gn = g.order();
    (0..gn * h.order()).map(move |x| (x % gn, x / gn))
}

pub(crate) fn cartesian_edges<'a>(
    g: &'a Graph,
    h: &'a Graph,
) -> impl Iterator<Item = (usize, usize)> + 'a {
    let gn = g.order();
    let along_g = (0..h.order())
        .flat_map(move |v| g.edges().iter().map(move |&(u, u2)| (u + gn * v, u2 + gn * v)));
    let along_h = h
        .edges()
        .iter()
        .flat_map(move |&(v, v2)| (0..gn).map(move |u| (u + gn * v, u + gn * v2)));
    along_g.chain(along_h)
}

fn product_order(g: &Graph, h: &Graph, cap: usize) -> Result<usize, GraphError> {
    let requested = g.order().saturating_mul(h.order());
    if requested > cap {
        return Err(GraphError::SizeCap { requested, cap });
    }
    Ok(requested)
}
