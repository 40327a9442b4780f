//! Standard graph families with canonical labelings.

use super::{Graph, GraphError};

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("complete", "n must be at least 1"));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// The cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle", "n must be at least 3"));
    }
    Ok(Graph::from_edges_dedup(n, (0..n).map(|v| (v, (v + 1) % n))))
}

/// The path on `n` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("path", "n must be at least 1"));
    }
    Ok(Graph::from_sorted_edges(n, (1..n).map(|v| (v - 1, v)).collect()))
}

/// The star `K_{1,n-1}` on `n` vertices with center 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("star", "n must be at least 1"));
    }
    Ok(Graph::from_sorted_edges(n, (1..n).map(|v| (0, v)).collect()))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(invalid("complete_bipartite", "both parts must be nonempty"));
    }
    let edges = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_sorted_edges(a + b, edges))
}

/// The hypercube `Q_d`: vertices are `d`-bit words, adjacent when they differ
/// in exactly one bit. This labeling coincides with `prism_power(Q_2, d-2)`.
pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    if d > 20 {
        return Err(invalid("hypercube", "dimension above 20 is not supported"));
    }
    let n = 1usize << d;
    let edges = (0..n)
        .flat_map(|v| (0..d).map(move |bit| (v, v ^ (1 << bit))))
        .filter(|&(u, v)| u < v);
    Ok(Graph::from_edges_dedup(n, edges))
}

/// A spider: center 0 with `legs` paths of `leg_len` vertices each.
pub fn spider(legs: usize, leg_len: usize) -> Result<Graph, GraphError> {
    if legs == 0 || leg_len == 0 {
        return Err(invalid("spider", "legs and leg length must be positive"));
    }
    let mut edges = Vec::new();
    for leg in 0..legs {
        let first = 1 + leg * leg_len;
        edges.push((0, first));
        for i in 1..leg_len {
            edges.push((first + i - 1, first + i));
        }
    }
    Ok(Graph::from_edges_dedup(1 + legs * leg_len, edges))
}

/// Families accepted by [`standard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Star,
    CompleteBipartite,
    Hypercube,
    Spider,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        Some(match name {
            "complete" => Family::Complete,
            "cycle" => Family::Cycle,
            "path" => Family::Path,
            "star" => Family::Star,
            "complete-bipartite" | "complete_bipartite" | "bipartite" => {
                Family::CompleteBipartite
            }
            "hypercube" => Family::Hypercube,
            "spider" => Family::Spider,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite | Family::Spider => 2,
            _ => 1,
        }
    }
}

/// Builds a member of `family` from its integer parameters.
pub fn standard(family: Family, params: &[usize]) -> Result<Graph, GraphError> {
    if params.len() != family.arity() {
        return Err(GraphError::InvalidParameter {
            family: "standard",
            reason: format!("{family:?} takes {} parameter(s)", family.arity()),
        });
    }
    match family {
        Family::Complete => complete_graph(params[0]),
        Family::Cycle => cycle(params[0]),
        Family::Path => path(params[0]),
        Family::Star => star(params[0]),
        Family::CompleteBipartite => complete_bipartite(params[0], params[1]),
        Family::Hypercube => hypercube(params[0]),
        Family::Spider => spider(params[0], params[1]),
    }
}

/// Parses short names such as `K4`, `K3,3`, `C6`, `P5`, `Q3`, `star5` and
/// `spider3x2`.
pub fn named(name: &str) -> Result<Graph, GraphError> {
    let unknown = || GraphError::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    if let Some(rest) = name.strip_prefix("spider") {
        let (legs, len) = rest.split_once('x').ok_or_else(unknown)?;
        return spider(num(legs)?, num(len)?);
    }
    if let Some(rest) = name.strip_prefix("star") {
        return star(num(rest)?);
    }
    let mut chars = name.chars();
    let head = chars.next().ok_or_else(unknown)?;
    let rest = chars.as_str();
    match head {
        'K' => match rest.split_once(',') {
            Some((a, b)) => complete_bipartite(num(a)?, num(b)?),
            None => complete_graph(num(rest)?),
        },
        'C' => cycle(num(rest)?),
        'P' => path(num(rest)?),
        'Q' => hypercube(num(rest)?),
        _ => Err(unknown()),
    }
}

fn invalid(family: &'static str, reason: &str) -> GraphError {
    GraphError::InvalidParameter {
        family,
        reason: reason.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(complete_graph(1).unwrap().size(), 0);
        assert_eq!(complete_graph(4).unwrap().size(), 6);
        assert_eq!(complete_graph(6).unwrap().size(), 15);
        assert!(complete_graph(0).is_err());
    }

    #[test]
    fn family_sizes() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!((k33.order(), k33.size()), (6, 9));
        let k13 = star(4).unwrap();
        assert_eq!((k13.order(), k13.size()), (4, 3));
        assert_eq!(k13.degrees(), vec![3, 1, 1, 1]);
        for d in 0..6 {
            let q = hypercube(d).unwrap();
            assert_eq!(q.size(), d * (1 << d) / 2);
            assert_eq!(q.regular_degree(), Some(d));
        }
        let s = spider(3, 2).unwrap();
        assert_eq!((s.order(), s.size()), (7, 6));
        assert_eq!(s.degree(0), 3);
    }

    #[test]
    fn invalid_parameters() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(standard(Family::CompleteBipartite, &[3]).is_err());
        assert!(named("X3").is_err());
        assert!(named("Cfoo").is_err());
    }

    #[test]
    fn names_resolve() {
        assert_eq!(named("K4").unwrap(), complete_graph(4).unwrap());
        assert_eq!(named("K1,3").unwrap(), star(4).unwrap());
        assert_eq!(named("C6").unwrap(), cycle(6).unwrap());
        assert_eq!(named("Q3").unwrap(), hypercube(3).unwrap());
        assert_eq!(named("spider3x2").unwrap(), spider(3, 2).unwrap());
        assert_eq!(
            standard(Family::parse("hypercube").unwrap(), &[2]).unwrap(),
            cycle(4).unwrap().relabel(&[0, 1, 3, 2])
        );
    }
}
