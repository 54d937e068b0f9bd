//! Hopcroft-Karp maximum matching on a bipartite view.

use std::collections::VecDeque;

use super::UNMATCHED;
use crate::graph::{GraphView, Side};

const INF: usize = usize::MAX;

/// Grows `mate` to a maximum matching; `side` must properly 2-color every
/// edge of the view.
pub(crate) fn maximize(view: &GraphView<'_>, side: &[Side], mate: &mut [usize]) {
    let left: Vec<usize> = view.vertices().filter(|&v| side[v] == Side::A).collect();
    let adj: Vec<Vec<usize>> = (0..side.len())
        .map(|v| {
            if side[v] == Side::A && view.has_vertex(v) {
                view.incident(v).map(|(w, _)| w).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let mut dist = vec![INF; side.len()];
    loop {
        if !bfs(&left, &adj, mate, &mut dist) {
            break;
        }
        let mut next = vec![0usize; side.len()];
        let mut grew = false;
        for &u in &left {
            if mate[u] == UNMATCHED && dfs(u, &adj, mate, &mut dist, &mut next) {
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
}

// Layers the free left vertices; true if some free right vertex is reachable.
fn bfs(left: &[usize], adj: &[Vec<usize>], mate: &[usize], dist: &mut [usize]) -> bool {
    let mut queue = VecDeque::new();
    for &u in left {
        if mate[u] == UNMATCHED {
            dist[u] = 0;
            queue.push_back(u);
        } else {
            dist[u] = INF;
        }
    }
    let mut found = false;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            let m = mate[w];
            if m == UNMATCHED {
                found = true;
            } else if dist[m] == INF {
                dist[m] = dist[u] + 1;
                queue.push_back(m);
            }
        }
    }
    found
}

fn dfs(
    u: usize,
    adj: &[Vec<usize>],
    mate: &mut [usize],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[u] < adj[u].len() {
        let w = adj[u][next[u]];
        next[u] += 1;
        let m = mate[w];
        if m == UNMATCHED || (dist[m] == dist[u] + 1 && dfs(m, adj, mate, dist, next)) {
            mate[u] = w;
            mate[w] = u;
            return true;
        }
    }
    dist[u] = INF;
    false
}
