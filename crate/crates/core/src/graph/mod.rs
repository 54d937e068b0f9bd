//! Simple undirected graphs with stable vertex and edge ids.
//!
//! Vertices are dense integers `0..n` with a label side table; edges are
//! numbered in insertion order and never renumbered. Subgraphs used by the
//! matching algorithms are expressed as [`GraphView`] masks over a host graph
//! so that edge ids keep meaning the same thing.

mod connectivity;
mod io;

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::GraphError;

pub use connectivity::{
    vertex_connectivity, vertex_connectivity_exhaustive, vertex_connectivity_flow,
    EXHAUSTIVE_CONNECTIVITY_LIMIT,
};
pub use io::{parse_graph, serialize_graph};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A fixed two-sided vertex partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn new(side: Vec<Side>) -> Self {
        Bipartition { side }
    }

    pub fn side(&self, v: VertexId) -> Side {
        self.side[v]
    }

    pub fn side_a(&self) -> Vec<VertexId> {
        self.members(Side::A)
    }

    pub fn side_b(&self) -> Vec<VertexId> {
        self.members(Side::B)
    }

    pub fn members(&self, s: Side) -> Vec<VertexId> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == s)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    label_index: HashMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    edge_lookup: HashMap<(VertexId, VertexId), EdgeId>,
    bipartition: Option<Bipartition>,
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new(0)
    }
}

impl Graph {
    /// A graph on `n` isolated vertices labelled `0..n`.
    pub fn new(n: usize) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Graph::with_labels(labels).expect("numeric labels are distinct")
    }

    pub fn with_labels<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph {
            labels: Vec::new(),
            label_index: HashMap::new(),
            edges: Vec::new(),
            adjacency: Vec::new(),
            edge_lookup: HashMap::new(),
            bipartition: None,
        };
        for label in labels {
            g.add_vertex(label)?;
        }
        Ok(g)
    }

    /// Builds a graph on `n` numerically labelled vertices from an edge list.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex<S: Into<String>>(&mut self, label: S) -> Result<VertexId, GraphError> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(GraphError::InvalidLabel(label));
        }
        if self.label_index.contains_key(&label) {
            return Err(GraphError::DuplicateLabel(label));
        }
        let id = self.labels.len();
        self.label_index.insert(label.clone(), id);
        self.labels.push(label);
        self.adjacency.push(Vec::new());
        if let Some(bp) = &mut self.bipartition {
            // A fresh isolated vertex cannot violate anything; park it on side A.
            bp.side.push(Side::A);
        }
        Ok(id)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::UnknownVertex(u));
        }
        if v >= n {
            return Err(GraphError::UnknownVertex(v));
        }
        if u == v {
            return Err(GraphError::Loop(self.labels[u].clone()));
        }
        let key = (u.min(v), u.max(v));
        if self.edge_lookup.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(
                self.labels[u].clone(),
                self.labels[v].clone(),
            ));
        }
        if let Some(bp) = &self.bipartition {
            if bp.side(u) == bp.side(v) {
                return Err(GraphError::BipartitionViolation(
                    self.labels[u].clone(),
                    self.labels[v].clone(),
                ));
            }
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.edge_lookup.insert(key, id);
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(id)
    }

    /// Attaches a bipartition, validating every existing edge against it.
    pub fn set_bipartition(&mut self, bp: Bipartition) -> Result<(), GraphError> {
        if bp.len() != self.vertex_count() {
            return Err(GraphError::BipartitionSize {
                expected: self.vertex_count(),
                got: bp.len(),
            });
        }
        for &(u, v) in &self.edges {
            if bp.side(u) == bp.side(v) {
                return Err(GraphError::BipartitionViolation(
                    self.labels[u].clone(),
                    self.labels[v].clone(),
                ));
            }
        }
        self.bipartition = Some(bp);
        Ok(())
    }

    pub fn clear_bipartition(&mut self) {
        self.bipartition = None;
    }

    /// Infers a bipartition from a 2-coloring and attaches it. Returns false
    /// (leaving the graph untouched) if the graph is not bipartite.
    pub fn infer_bipartition(&mut self) -> bool {
        match is_bipartite(self) {
            BipartiteWitness::Coloring(sides) => {
                self.bipartition = Some(Bipartition::new(sides));
                true
            }
            BipartiteWitness::OddCycle(_) => false,
        }
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.label_index.get(label).copied()
    }

    /// Endpoints of an edge, smaller id first.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// `(neighbour, edge id)` pairs in ascending edge id order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// E(v): all edges at `v`.
    pub fn edges_at(&self, v: VertexId) -> EdgeSet {
        EdgeSet::from_ids(self.edge_count(), self.adjacency[v].iter().map(|&(_, e)| e))
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::empty(self.edge_count())
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    pub fn edge_label(&self, e: EdgeId) -> String {
        let (u, v) = self.edges[e];
        format!("{}-{}", self.labels[u], self.labels[v])
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn view(&self) -> GraphView<'_> {
        GraphView::full(self)
    }

    /// A copy of the graph without the given edges. Vertex ids and labels are
    /// preserved; the remaining edges are renumbered in their original order.
    pub fn without_edges(&self, removed: &EdgeSet) -> Graph {
        let mut g = Graph::with_labels(self.labels.iter().cloned()).expect("labels already valid");
        g.bipartition = self.bipartition.clone();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if !removed.contains(e) {
                g.add_edge(u, v).expect("subgraph of a simple graph");
            }
        }
        g
    }

    /// The subgraph induced by `vertices` (in the given order), with the
    /// bipartition inherited. Returns the graph and the new-to-old vertex map.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::with_labels(vertices.iter().map(|&v| self.labels[v].clone()))
            .expect("labels already valid");
        if let Some(bp) = &self.bipartition {
            g.bipartition = Some(Bipartition::new(
                vertices.iter().map(|&v| bp.side(v)).collect(),
            ));
        }
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v])
                    .expect("subgraph of a simple graph");
            }
        }
        (g, vertices.to_vec())
    }

    /// Resolves a `u-v` edge spec against the vertex labels.
    pub fn edge_by_labels(&self, u: &str, v: &str) -> Result<EdgeId, GraphError> {
        let a = self
            .vertex_by_label(u)
            .ok_or_else(|| GraphError::UnknownLabel(u.to_string()))?;
        let b = self
            .vertex_by_label(v)
            .ok_or_else(|| GraphError::UnknownLabel(v.to_string()))?;
        self.edge_between(a, b)
            .ok_or_else(|| GraphError::UnknownEdge(format!("{u}-{v}")))
    }

    pub fn describe_edges(&self, set: &EdgeSet) -> Vec<String> {
        set.iter().map(|e| self.edge_label(e)).collect()
    }

    pub fn describe_vertices(&self, vs: &[VertexId]) -> Vec<String> {
        vs.iter().map(|&v| self.labels[v].clone()).collect()
    }
}

/// A vertex- and edge-masked view of a host graph.
#[derive(Clone, Debug)]
pub struct GraphView<'g> {
    graph: &'g Graph,
    vertices: FixedBitSet,
    edges: FixedBitSet,
}

impl<'g> GraphView<'g> {
    pub fn full(graph: &'g Graph) -> Self {
        let mut vertices = FixedBitSet::with_capacity(graph.vertex_count());
        vertices.insert_range(..);
        let mut edges = FixedBitSet::with_capacity(graph.edge_count());
        edges.insert_range(..);
        GraphView {
            graph,
            vertices,
            edges,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        self.vertices.set(v, false);
    }

    pub fn remove_edge(&mut self, e: EdgeId) {
        self.edges.set(e, false);
    }

    pub fn remove_edges(&mut self, set: &EdgeSet) {
        self.edges.difference_with(set.bits());
    }

    pub fn restore_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    pub fn restore_edge(&mut self, e: EdgeId) {
        self.edges.insert(e);
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(v)
    }

    /// True iff the edge is unmasked and both its endpoints are present.
    pub fn has_edge(&self, e: EdgeId) -> bool {
        if !self.edges.contains(e) {
            return false;
        }
        let (u, v) = self.graph.endpoints(e);
        self.vertices.contains(u) && self.vertices.contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones(..)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.ones()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.ones().filter(move |&e| self.has_edge(e))
    }

    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.graph.adjacency[v]
            .iter()
            .copied()
            .filter(move |&(w, e)| self.edges.contains(e) && self.vertices.contains(w))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).count()
    }

    /// Connected components of the view, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.graph.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for (w, _) in self.incident(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Evidence for a bipartiteness verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteWitness {
    /// A proper 2-coloring, indexed by vertex.
    Coloring(Vec<Side>),
    /// A closed walk of odd length, listed without repeating the start vertex.
    OddCycle(Vec<VertexId>),
}

impl BipartiteWitness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteWitness::Coloring(_))
    }

    /// Checks the witness against the graph.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            BipartiteWitness::Coloring(sides) => {
                sides.len() == g.vertex_count()
                    && g.edges().iter().all(|&(u, v)| sides[u] != sides[v])
            }
            BipartiteWitness::OddCycle(walk) => {
                walk.len() % 2 == 1
                    && (0..walk.len()).all(|i| g.has_edge(walk[i], walk[(i + 1) % walk.len()]))
            }
        }
    }
}

/// ∇U: edges with exactly one endpoint in `u`.
pub fn nabla(g: &Graph, u: &[VertexId]) -> Result<EdgeSet, GraphError> {
    let mut inside = vec![false; g.vertex_count()];
    for &v in u {
        if v >= g.vertex_count() {
            return Err(GraphError::UnknownVertex(v));
        }
        inside[v] = true;
    }
    Ok(EdgeSet::from_ids(
        g.edge_count(),
        g.edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| inside[a] != inside[b])
            .map(|(e, _)| e),
    ))
}

pub fn cut_sides(g: &Graph, u: &[VertexId]) -> VertexCutSides {
    let mut inside = vec![false; g.vertex_count()];
    for &v in u {
        inside[v] = true;
    }
    VertexCutSides {
        side_u: g.vertices().filter(|&v| inside[v]).collect(),
        complement: g.vertices().filter(|&v| !inside[v]).collect(),
    }
}

/// The two sides of a vertex cut `(U, V \ U)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCutSides {
    pub side_u: Vec<VertexId>,
    pub complement: Vec<VertexId>,
}

pub fn components(g: &Graph) -> Vec<Vec<VertexId>> {
    g.view().components()
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// 2-colors each component by BFS, starting every component on side A.
pub fn is_bipartite(g: &Graph) -> BipartiteWitness {
    let n = g.vertex_count();
    let mut color: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(Side::A);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &(w, _) in g.incident(u) {
                match color[w] {
                    None => {
                        color[w] = Some(cu.other());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return BipartiteWitness::OddCycle(odd_cycle(u, w, &parent, &depth));
                    }
                    _ => {}
                }
            }
        }
    }
    BipartiteWitness::Coloring(color.into_iter().map(Option::unwrap).collect())
}

// u and w have equal BFS parity and are adjacent; walk both up the BFS tree
// to their common ancestor.
fn odd_cycle(u: VertexId, w: VertexId, parent: &[VertexId], depth: &[usize]) -> Vec<VertexId> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// If removing `s` leaves exactly two components, returns them ordered by
/// smallest vertex.
pub fn edge_cut_sides(g: &Graph, s: &EdgeSet) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let mut view = g.view();
    view.remove_edges(s);
    let mut comps = view.components();
    if comps.len() != 2 {
        return None;
    }
    let second = comps.pop().unwrap();
    let first = comps.pop().unwrap();
    Some((first, second))
}

#[cfg(test)]
pub(crate) mod fixtures {
    pub use crate::corpus::named::*;
}
