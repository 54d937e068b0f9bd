use std::collections::VecDeque;

use super::Graph;
use crate::error::GraphError;

/// Graphs up to this order use the exhaustive separator search.
pub const EXHAUSTIVE_CONNECTIVITY_LIMIT: usize = 12;

/// Vertex connectivity: the fewest vertices whose removal disconnects the
/// graph or leaves a single vertex.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    if g.vertex_count() <= EXHAUSTIVE_CONNECTIVITY_LIMIT {
        vertex_connectivity_exhaustive(g)
    } else {
        vertex_connectivity_flow(g)
    }
}

/// Menger: the minimum over non-adjacent pairs of the number of internally
/// disjoint paths, computed by unit-capacity max flow on the split graph.
pub fn vertex_connectivity_flow(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::TooFewVertices { needed: 2, got: n });
    }
    let mut best = n - 1;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            best = best.min(local_connectivity(g, u, v, best));
            if best == 0 {
                return Ok(0);
            }
        }
    }
    Ok(best)
}

/// Tries separators in increasing size. Exponential; intended for small graphs
/// and as a cross-check of the flow computation.
pub fn vertex_connectivity_exhaustive(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::TooFewVertices { needed: 2, got: n });
    }
    if n > 20 {
        return Err(GraphError::TooLarge { limit: 20, got: n });
    }
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for size in 0..n - 1 {
        for &mask in &by_size[size] {
            let mut view = g.view();
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    view.remove_vertex(v);
                }
            }
            if !view.is_connected() {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: i64) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    // Edmonds-Karp, stopping once `bound` units have been pushed.
    fn max_flow(&mut self, s: usize, t: usize, bound: usize) -> usize {
        let mut flow = 0;
        while flow < bound {
            let mut via = vec![usize::MAX; self.head.len()];
            let mut queue = VecDeque::from([s]);
            via[s] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for &a in &self.head[x] {
                    let y = self.to[a];
                    if self.cap[a] > 0 && via[y] == usize::MAX {
                        via[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if via[t] == usize::MAX {
                break;
            }
            let mut x = t;
            while x != s {
                let a = via[x];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                x = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

fn local_connectivity(g: &Graph, u: usize, v: usize, bound: usize) -> usize {
    let n = g.vertex_count();
    let big = n as i64;
    let mut net = FlowNet::new(2 * n);
    for x in 0..n {
        net.arc(2 * x, 2 * x + 1, 1);
    }
    for &(a, b) in g.edges() {
        net.arc(2 * a + 1, 2 * b, big);
        net.arc(2 * b + 1, 2 * a, big);
    }
    net.max_flow(2 * u + 1, 2 * v, bound)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connectivity_examples() {
        for f in [vertex_connectivity_exhaustive, vertex_connectivity_flow] {
            assert_eq!(f(&complete(4)).unwrap(), 3);
            assert_eq!(f(&cycle(6)).unwrap(), 2);
            assert_eq!(f(&complete_bipartite(3, 3)).unwrap(), 3);
            assert_eq!(f(&petersen()).unwrap(), 3);
            assert_eq!(f(&Graph::new(3)).unwrap(), 0);
        }
        assert!(matches!(
            vertex_connectivity(&Graph::new(1)),
            Err(GraphError::TooFewVertices { .. })
        ));
    }

    #[test]
    fn flow_agrees_with_exhaustive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(2..=10);
            let p: f64 = rng.gen_range(0.2..0.9);
            let mut g = Graph::new(n);
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            assert_eq!(
                vertex_connectivity_flow(&g).unwrap(),
                vertex_connectivity_exhaustive(&g).unwrap()
            );
        }
    }
}
