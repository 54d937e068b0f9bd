use std::ops::ControlFlow;

use super::{Matcher, PerfectMatching, UNMATCHED};
use crate::graph::{EdgeId, Graph, GraphView};

pub const DEFAULT_MATCHING_LIMIT: usize = 1_000_000;

/// All perfect matchings of a graph, possibly cut off at a limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingEnumeration {
    /// Distinct matchings in branching order.
    pub matchings: Vec<PerfectMatching>,
    /// Set iff the limit was reached before the search finished.
    pub truncated: bool,
}

impl MatchingEnumeration {
    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        !self.truncated
    }
}

/// Enumerates perfect matchings by branching on the lowest uncovered vertex
/// and trying its edges in ascending id order. Branches whose residual graph
/// is not matchable are pruned, so every leaf is a matching. `limit` defaults
/// to [`DEFAULT_MATCHING_LIMIT`].
pub fn enumerate_perfect_matchings(g: &Graph, limit: Option<usize>) -> MatchingEnumeration {
    enumerate_view(&g.view(), limit)
}

pub fn enumerate_view(view: &GraphView<'_>, limit: Option<usize>) -> MatchingEnumeration {
    let limit = limit.unwrap_or(DEFAULT_MATCHING_LIMIT);
    let g = view.graph();
    let mut matchings = Vec::new();
    let mut truncated = false;
    visit_perfect_matchings(view, |edges| {
        if matchings.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        let mut set = g.empty_edge_set();
        for &e in edges {
            set.insert(e);
        }
        matchings.push(PerfectMatching::new_unchecked(set));
        ControlFlow::Continue(())
    });
    MatchingEnumeration {
        matchings,
        truncated,
    }
}

/// Calls `visit` with the edge ids of every perfect matching of the view
/// (in branching order). Returns false if the visitor stopped the search.
pub(crate) fn visit_perfect_matchings<F>(view: &GraphView<'_>, mut visit: F) -> bool
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let matcher = Matcher::new(view.graph());
    let Some(mut mate) = matcher.perfect(view) else {
        return true;
    };
    let mut work = view.clone();
    let mut chosen = Vec::new();
    branch(&matcher, &mut work, &mut mate, &mut chosen, &mut visit).is_continue()
}

fn branch<F>(
    matcher: &Matcher,
    view: &mut GraphView<'_>,
    mate: &mut [usize],
    chosen: &mut Vec<EdgeId>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let Some(v) = view.vertices().next() else {
        return visit(chosen);
    };
    let options: Vec<(usize, EdgeId)> = view.incident(v).collect();
    for (w, e) in options {
        let mut residual = mate.to_vec();
        let direct = residual[v] == w;
        for x in [v, w] {
            let y = residual[x];
            if y != UNMATCHED {
                residual[y] = UNMATCHED;
                residual[x] = UNMATCHED;
            }
        }
        view.remove_vertex(v);
        view.remove_vertex(w);
        let ok = direct || {
            matcher.maximize(view, &mut residual);
            Matcher::is_perfect(view, &residual)
        };
        let flow = if ok {
            chosen.push(e);
            let flow = branch(matcher, view, &mut residual, chosen, visit);
            chosen.pop();
            flow
        } else {
            ControlFlow::Continue(())
        };
        view.restore_vertex(v);
        view.restore_vertex(w);
        flow?;
    }
    ControlFlow::Continue(())
}

/// Exponential backtracking existence test; the oracle for the augmenting
/// searches.
pub fn has_perfect_matching_backtrack(g: &Graph) -> bool {
    backtrack_exists(&g.view())
}

pub(crate) fn backtrack_exists(view: &GraphView<'_>) -> bool {
    if view.vertex_count() % 2 == 1 {
        return false;
    }
    let mut work = view.clone();
    backtrack(&mut work)
}

fn backtrack(view: &mut GraphView<'_>) -> bool {
    // Branch on the live vertex with fewest live neighbours.
    let mut pick = None;
    let mut fewest = usize::MAX;
    for v in view.vertices() {
        let d = view.degree(v);
        if d < fewest {
            fewest = d;
            pick = Some(v);
            if d <= 1 {
                break;
            }
        }
    }
    let Some(v) = pick else {
        return true;
    };
    let options: Vec<usize> = view.incident(v).map(|(w, _)| w).collect();
    for w in options {
        view.remove_vertex(v);
        view.remove_vertex(w);
        let found = backtrack(view);
        view.restore_vertex(v);
        view.restore_vertex(w);
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use std::collections::HashSet;

    // Independent oracle: all pairings of the vertex set, filtered to edges.
    fn brute_force_count(g: &Graph) -> usize {
        fn go(g: &Graph, free: &mut Vec<usize>) -> usize {
            if free.is_empty() {
                return 1;
            }
            let v = free.remove(0);
            let mut total = 0;
            for i in 0..free.len() {
                let w = free[i];
                if g.has_edge(v, w) {
                    free.remove(i);
                    total += go(g, free);
                    free.insert(i, w);
                }
            }
            free.insert(0, v);
            total
        }
        let mut free: Vec<usize> = g.vertices().collect();
        if free.len() % 2 == 1 {
            return 0;
        }
        go(g, &mut free)
    }

    #[test]
    fn counts_match_brute_force() {
        for (g, expected) in [
            (cycle(4), 2),
            (cycle(6), 2),
            (complete(4), 3),
            (complete_bipartite(3, 3), 6),
            (petersen(), 6),
            (complete(6), 15),
        ] {
            assert_eq!(brute_force_count(&g), expected);
            let all = enumerate_perfect_matchings(&g, None);
            assert_eq!(all.len(), expected);
            assert!(all.is_complete());
            let distinct: HashSet<_> = all.matchings.iter().collect();
            assert_eq!(distinct.len(), expected);
            for m in &all.matchings {
                assert!(m.validate(&g));
                assert_eq!(m.len(), g.vertex_count() / 2);
            }
        }
    }

    #[test]
    fn limit_sets_truncated_flag() {
        let all = enumerate_perfect_matchings(&complete(6), Some(4));
        assert_eq!(all.len(), 4);
        assert!(all.truncated);
        let exact = enumerate_perfect_matchings(&complete(6), Some(15));
        assert!(!exact.truncated);
    }

    #[test]
    fn order_is_branching_order() {
        // K4 edges: 0:01 1:02 2:03 3:12 4:13 5:23. Vertex 0 tries 01, 02, 03.
        let all = enumerate_perfect_matchings(&complete(4), None);
        let seqs: Vec<Vec<usize>> = all.matchings.iter().map(|m| m.edges().to_vec()).collect();
        assert_eq!(seqs, vec![vec![0, 5], vec![1, 4], vec![2, 3]]);
    }
}
