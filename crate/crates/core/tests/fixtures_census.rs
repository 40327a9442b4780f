//! The stored graph6 fixtures match a fresh census run.

mod common;

use pairing_prism::graph::census::{connected_graphs, connected_regular_graphs};
use pairing_prism::graph::iso::canonical_form;

#[test]
fn cubic_fixture_is_current() {
    let stored = common::fixture("cubic_le8.g6");
    let fresh: Vec<_> = [4, 6, 8].into_iter().flat_map(|n| connected_regular_graphs(n, 3)).collect();
    assert_eq!(stored, fresh);
    assert!(stored.iter().all(|g| g.regular_degree() == Some(3) && g.is_connected()));
}

#[test]
fn connected_fixture_is_current_and_complete() {
    let stored = common::fixture("connected_le6.g6");
    let fresh: Vec<_> = (2..=6).flat_map(connected_graphs).collect();
    assert_eq!(stored, fresh);
    let mut forms: Vec<_> = stored.iter().map(canonical_form).collect();
    forms.sort_by_key(|g| (g.order(), g.edges().to_vec()));
    forms.dedup();
    assert_eq!(forms.len(), stored.len(), "fixture graphs are pairwise non-isomorphic");
    for (n, count) in [(2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
        assert_eq!(stored.iter().filter(|g| g.order() == n).count(), count);
    }
}
