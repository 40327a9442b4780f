//! Hamiltonian path search.

use thiserror::Error;

use super::Graph;

/// Why an exhaustive search gave up without an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExceeded { nodes: u64 },
    #[error("graph has {n} vertices; bitset searches support at most 64")]
    TooLarge { n: usize },
}

/// Finds a Hamiltonian path (a witness of traceability) if one exists.
pub fn is_traceable(g: &Graph) -> Result<Option<Vec<usize>>, SearchError> {
    hamiltonian_path(g, None)
}

/// Depth-first search for a Hamiltonian path, visiting neighbors in
/// ascending order. `max_nodes` bounds the number of extension steps.
pub fn hamiltonian_path(g: &Graph, max_nodes: Option<u64>) -> Result<Option<Vec<usize>>, SearchError> {
    let n = g.order();
    if n <= 1 {
        return Ok(Some((0..n).collect()));
    }
    let adj = g.adjacency_masks().ok_or(SearchError::TooLarge { n })?;
    if !g.is_connected() {
        return Ok(None);
    }
    let pendant: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if pendant.len() > 2 {
        return Ok(None);
    }
    let starts: Vec<usize> = if pendant.is_empty() {
        (0..n).collect()
    } else {
        vec![pendant[0]]
    };
    let mut search = PathSearch {
        adj,
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        path: Vec::with_capacity(n),
        nodes: 0,
        max_nodes,
    };
    for s in starts {
        search.path.clear();
        search.path.push(s);
        if search.extend(1u64 << s)? {
            return Ok(Some(search.path));
        }
    }
    Ok(None)
}

struct PathSearch {
    adj: Vec<u64>,
    full: u64,
    path: Vec<usize>,
    nodes: u64,
    max_nodes: Option<u64>,
}

impl PathSearch {
    fn extend(&mut self, visited: u64) -> Result<bool, SearchError> {
        if visited == self.full {
            return Ok(true);
        }
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            return Err(SearchError::BudgetExceeded { nodes: self.nodes - 1 });
        }
        let cur = *self.path.last().expect("path is never empty");
        let unvisited = self.full & !visited;
        // Every unvisited vertex but the last needs two neighbors among the
        // unvisited vertices and the current endpoint.
        let avail = unvisited | (1 << cur);
        let mut thin = 0;
        let mut rest = unvisited;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            match (self.adj[v] & avail).count_ones() {
                0 => return Ok(false),
                1 => thin += 1,
                _ => {}
            }
        }
        if thin > 1 {
            return Ok(false);
        }
        let mut cand = self.adj[cur] & unvisited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.path.push(w);
            if self.extend(visited | (1 << w))? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }
}

/// Whether `seq` visits every vertex of `g` exactly once along edges of `g`.
pub fn is_hamiltonian_path(g: &Graph, seq: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    seq.len() == g.order()
        && seq.iter().all(|&v| v < g.order() && !std::mem::replace(&mut seen[v], true))
        && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete_bipartite, cycle, hypercube, path, star};
    use crate::graph::prism;

    fn brute_force_traceable(g: &Graph) -> bool {
        fn perms(prefix: &mut Vec<usize>, n: usize, g: &Graph) -> bool {
            if prefix.len() == n {
                return is_hamiltonian_path(g, prefix);
            }
            for v in 0..n {
                if !prefix.contains(&v) {
                    prefix.push(v);
                    if perms(prefix, n, g) {
                        return true;
                    }
                    prefix.pop();
                }
            }
            false
        }
        perms(&mut Vec::new(), g.order(), g)
    }

    #[test]
    fn small_examples() {
        let p4 = path(4).unwrap();
        assert_eq!(is_traceable(&p4).unwrap(), Some(vec![0, 1, 2, 3]));
        let k13 = star(4).unwrap();
        assert!(!brute_force_traceable(&k13));
        assert_eq!(is_traceable(&k13).unwrap(), None);
        let pk13 = prism(&k13);
        let w = is_traceable(pk13.host()).unwrap().expect("prism of the claw is traceable");
        assert!(is_hamiltonian_path(pk13.host(), &w));
        assert_eq!(is_traceable(&Graph::empty(2)).unwrap(), None);
    }

    #[test]
    fn agrees_with_permutation_search() {
        let graphs = [
            cycle(6).unwrap(),
            complete_bipartite(2, 4).unwrap(),
            complete_bipartite(3, 4).unwrap(),
            star(5).unwrap(),
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
            Graph::new(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap(),
        ];
        for g in &graphs {
            let found = is_traceable(g).unwrap();
            assert_eq!(found.is_some(), brute_force_traceable(g), "{g:?}");
            if let Some(w) = found {
                assert!(is_hamiltonian_path(g, &w));
            }
        }
    }

    #[test]
    fn budget_and_size_limits() {
        let k35 = complete_bipartite(3, 6).unwrap();
        assert!(matches!(
            hamiltonian_path(&k35, Some(5)),
            Err(SearchError::BudgetExceeded { .. })
        ));
        let q7 = hypercube(7).unwrap();
        assert_eq!(is_traceable(&q7), Err(SearchError::TooLarge { n: 128 }));
    }
}
