//! Edmonds' blossom algorithm for maximum cardinality matching.
//!
//! Breadth-first search for augmenting paths from each exposed vertex. Odd
//! cycles found during the search are shrunk by redirecting the `base` of
//! every vertex in the blossom to the blossom's base, which keeps the search
//! O(V) per phase and O(V^3) overall.

use std::collections::VecDeque;

use super::UNMATCHED;
use crate::graph::GraphView;

/// Grows `mate` (indexed by host vertex id) to a maximum matching of `view`.
pub(crate) fn maximize(view: &GraphView<'_>, mate: &mut [usize]) {
    let n = view.graph().vertex_count();
    let mut search = Search {
        view,
        p: vec![UNMATCHED; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    let roots: Vec<usize> = view.vertices().collect();
    for root in roots {
        if mate[root] != UNMATCHED {
            continue;
        }
        if let Some(end) = search.find_augmenting_path(root, mate) {
            let mut v = end;
            while v != UNMATCHED {
                let pv = search.p[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
}

struct Search<'a, 'g> {
    view: &'a GraphView<'g>,
    p: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Search<'_, '_> {
    fn find_augmenting_path(&mut self, root: usize, mate: &[usize]) -> Option<usize> {
        let n = self.base.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.p.iter_mut().for_each(|p| *p = UNMATCHED);
        for i in 0..n {
            self.base[i] = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let incident: Vec<usize> = self.view.incident(v).map(|(w, _)| w).collect();
            for to in incident {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (mate[to] != UNMATCHED && self.p[mate[to]] != UNMATCHED);
                if to_is_outer {
                    let cur = self.lca(v, to, mate);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to, mate);
                    self.mark_path(to, cur, v, mate);
                    for i in self.view.vertices() {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.p[to] == UNMATCHED {
                    self.p[to] = v;
                    if mate[to] == UNMATCHED {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn lca(&self, a: usize, b: usize, mate: &[usize]) -> usize {
        let mut on_path = vec![false; self.base.len()];
        let mut a = a;
        loop {
            a = self.base[a];
            on_path[a] = true;
            if mate[a] == UNMATCHED {
                break;
            }
            a = self.p[mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.p[mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, mate: &[usize]) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.p[v] = child;
            child = mate[v];
            v = self.p[mate[v]];
        }
    }
}
