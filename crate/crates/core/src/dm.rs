//! Dulmage–Mendelsohn decomposition of matchable bipartite graphs, the
//! condensed digraph on its parts, directed cuts, path families hitting
//! every directed cut, and augmentation to a matching-covered supergraph.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Side, VertexId};
use crate::matching::enumerate::visit_perfect_matchings;
use crate::matching::{
    allowed_edges, find_perfect_matching, host_sides, is_matching_covered, mate_to_edges,
    view_is_matching_covered, Matcher, PerfectMatching,
};
use crate::EdgeSet;

/// Largest digraph for which directed cuts are enumerated.
pub const CUT_ENUMERATION_LIMIT: usize = 20;
/// Largest digraph for which the minimum path family is searched exactly.
pub const EXACT_PATH_FAMILY_LIMIT: usize = 12;

pub(crate) fn bipartite_sides(g: &Graph) -> Result<Vec<Side>> {
    host_sides(g).ok_or(Error::NotBipartite)
}

/// An M-alternating path from `x` (side A) to `y` (side B) whose first and
/// last edges lie in `matching`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingPath {
    pub vertices: Vec<VertexId>,
    pub matching: PerfectMatching,
}

/// Finds a perfect matching `M` and an `M`-alternating `x`–`y` path that
/// starts and ends with `M`-edges. Exists in every matching-covered
/// bipartite graph. Adjacent `x`, `y` give the single edge `xy`.
pub fn alternating_path(g: &Graph, x: VertexId, y: VertexId) -> Result<AlternatingPath> {
    let sides = bipartite_sides(g)?;
    if x >= g.vertex_count() || y >= g.vertex_count() {
        return Err(Error::InvalidParameter("vertex out of range".into()));
    }
    if sides[x] != Side::A || sides[y] != Side::B {
        return Err(Error::Precondition("x must lie in A and y in B".into()));
    }
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    if let Some(e) = g.edge_between(x, y) {
        let matcher = Matcher::new(g);
        let mut view = g.view();
        view.remove_vertex(x);
        view.remove_vertex(y);
        let mut mate = matcher.perfect(&view).ok_or(Error::NotMatchingCovered)?;
        mate[x] = y;
        mate[y] = x;
        let matching = PerfectMatching::new_unchecked(mate_to_edges(g, &mate));
        debug_assert!(matching.contains(e));
        return Ok(AlternatingPath {
            vertices: vec![x, y],
            matching,
        });
    }
    let m = find_perfect_matching(g).ok_or(Error::NotMatchable)?;
    let mate = m.mate(g);
    // Search over A-vertices: a -> a' when mate(a) is adjacent to a'.
    // Reaching mate(y) from x gives x, mate(x), a1, mate(a1), ..., mate(y), y.
    let target = mate[y];
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(a) = queue.pop_front() {
        if a == target {
            break;
        }
        for w in g.neighbors(mate[a]) {
            if !seen[w] {
                seen[w] = true;
                prev[w] = a;
                queue.push_back(w);
            }
        }
    }
    if !seen[target] {
        return Err(Error::Internal(
            "no alternating path in a matching-covered graph".into(),
        ));
    }
    let mut chain = vec![target];
    while *chain.last().unwrap() != x {
        chain.push(prev[*chain.last().unwrap()]);
    }
    chain.reverse();
    let mut vertices = Vec::with_capacity(2 * chain.len());
    for a in chain {
        vertices.push(a);
        vertices.push(mate[a]);
    }
    Ok(AlternatingPath {
        vertices,
        matching: m,
    })
}

/// One part of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DmPart {
    pub vertices: Vec<VertexId>,
    pub side_a: Vec<VertexId>,
    pub side_b: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DmDecomposition {
    /// Parts ordered by smallest vertex.
    pub parts: Vec<DmPart>,
    pub part_of: Vec<usize>,
    #[serde(skip)]
    sides: Vec<Side>,
}

impl DmDecomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The subgraph induced by part `i`, with the inherited bipartition.
    pub fn part_graph(&self, g: &Graph, i: usize) -> Graph {
        let (mut h, map) = g.induced_subgraph(&self.parts[i].vertices);
        if h.bipartition().is_none() {
            let sides = map.iter().map(|&v| self.sides[v]).collect();
            h.set_bipartition(crate::graph::Bipartition::new(sides))
                .expect("parts inherit a proper 2-coloring");
        }
        h
    }

    /// Re-checks the defining properties: the parts partition V, each part
    /// is matching-covered, and no edge between parts is allowed.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        if self.part_of.len() != n {
            return Err(Error::HostMismatch);
        }
        let mut count = vec![0usize; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in &part.vertices {
                count[v] += 1;
                if self.part_of[v] != i {
                    return Err(Error::Internal(format!("vertex {v} misfiled")));
                }
            }
            if !is_matching_covered(&self.part_graph(g, i)) {
                return Err(Error::Internal(format!("part {i} is not matching-covered")));
            }
        }
        if count.iter().any(|&c| c != 1) {
            return Err(Error::Internal(
                "parts do not partition the vertices".into(),
            ));
        }
        let allowed = allowed_edges(g)?;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if self.part_of[u] != self.part_of[v] && allowed.contains(e) {
                return Err(Error::Internal(format!(
                    "edge {} between parts is allowed",
                    g.edge_label(e)
                )));
            }
        }
        Ok(())
    }
}

fn first_matching(g: &Graph) -> Option<PerfectMatching> {
    let mut found = None;
    visit_perfect_matchings(&g.view(), |edges| {
        found = Some(PerfectMatching::new_unchecked(EdgeSet::from_ids(
            g.edge_count(),
            edges.iter().copied(),
        )));
        ControlFlow::Break(())
    });
    found
}

/// The decomposition seeded with the first enumerated perfect matching.
pub fn dm_decomposition(g: &Graph) -> Result<DmDecomposition> {
    bipartite_sides(g)?;
    let seed = first_matching(g).ok_or(Error::NotMatchable)?;
    dm_decomposition_with(g, &seed)
}

/// The decomposition computed from a caller-supplied perfect matching. The
/// result does not depend on the choice.
pub fn dm_decomposition_with(g: &Graph, m: &PerfectMatching) -> Result<DmDecomposition> {
    let sides = bipartite_sides(g)?;
    if !m.validate(g) {
        return Err(Error::InvalidParameter(
            "seed is not a perfect matching of the graph".into(),
        ));
    }
    let mate = m.mate(g);
    let n = g.vertex_count();
    // Nodes are matched pairs, named by their A-vertex. An edge a-b with
    // b matched to a' gives the arc a -> a'.
    let pairs: Vec<VertexId> = (0..n).filter(|&v| sides[v] == Side::A).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &a) in pairs.iter().enumerate() {
        index[a] = i;
    }
    let succ: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&a| {
            g.neighbors(a)
                .filter(|&b| b != mate[a])
                .map(|b| index[mate[b]])
                .collect()
        })
        .collect();
    let comp = strongly_connected_components(&succ);

    let mut by_comp: Vec<Vec<VertexId>> = vec![Vec::new(); comp.iter().max().map_or(0, |c| c + 1)];
    for (i, &a) in pairs.iter().enumerate() {
        by_comp[comp[i]].push(a);
        by_comp[comp[i]].push(mate[a]);
    }
    for c in &mut by_comp {
        c.sort_unstable();
    }
    by_comp.sort_by_key(|c| c[0]);
    let mut part_of = vec![usize::MAX; n];
    let parts: Vec<DmPart> = by_comp
        .into_iter()
        .enumerate()
        .map(|(i, vertices)| {
            for &v in &vertices {
                part_of[v] = i;
            }
            let side_a = vertices
                .iter()
                .copied()
                .filter(|&v| sides[v] == Side::A)
                .collect();
            let side_b = vertices
                .iter()
                .copied()
                .filter(|&v| sides[v] == Side::B)
                .collect();
            DmPart {
                vertices,
                side_a,
                side_b,
            }
        })
        .collect();
    let d = DmDecomposition {
        parts,
        part_of,
        sides,
    };
    if cfg!(debug_assertions) && n <= 40 {
        debug_assert_eq!(d.validate(g), Ok(()));
    }
    Ok(d)
}

/// Component index per node; components are numbered in an arbitrary order.
fn strongly_connected_components(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut pred = vec![Vec::new(); n];
    for (u, outs) in succ.iter().enumerate() {
        for &v in outs {
            pred[v].push(u);
        }
    }
    // Kosaraju: finishing order on succ, then sweep pred in reverse.
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some((u, i)) = stack.pop() {
            if i < succ[u].len() {
                stack.push((u, i + 1));
                let w = succ[u][i];
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(u);
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for &root in order.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = next;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in &pred[u] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// A simple digraph on nodes `0..nodes`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DmDigraph {
    pub nodes: usize,
    /// Sorted, without duplicates or loops.
    pub arcs: Vec<(usize, usize)>,
}

impl DmDigraph {
    pub fn from_arcs(nodes: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in arcs {
            if u >= nodes || v >= nodes || u == v {
                return Err(Error::InvalidParameter(format!("bad arc ({u}, {v})")));
            }
            set.insert((u, v));
        }
        Ok(DmDigraph {
            nodes,
            arcs: set.into_iter().collect(),
        })
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.nodes];
        for &(u, v) in &self.arcs {
            out[u].push(v);
        }
        out
    }

    /// A topological order, or `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let succ = self.successors();
        let mut indeg = vec![0usize; self.nodes];
        for &(_, v) in &self.arcs {
            indeg[v] += 1;
        }
        let mut ready: Vec<usize> = (0..self.nodes).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.nodes);
        while let Some(u) = ready.pop() {
            order.push(u);
            for &w in succ[u].iter().rev() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == self.nodes).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    fn weakly_connected_within(&self, members: u64) -> bool {
        let Some(start) = (0..self.nodes).find(|&v| members >> v & 1 == 1) else {
            return true;
        };
        let mut reached = 1u64 << start;
        loop {
            let before = reached;
            for &(u, v) in &self.arcs {
                let (bu, bv) = (1u64 << u, 1u64 << v);
                if members & bu != 0 && members & bv != 0 && (reached & (bu | bv)) != 0 {
                    reached |= bu | bv;
                }
            }
            if reached == before {
                return reached == members;
            }
        }
    }
}

/// The digraph on the parts: `q_i -> q_j` iff an edge joins `B ∩ Q_i` to
/// `A ∩ Q_j`. A directed cycle is reported as [`Error::Cyclic`], which would
/// mean the decomposition is wrong.
pub fn dm_digraph(g: &Graph, d: &DmDecomposition) -> Result<DmDigraph> {
    if d.part_of.len() != g.vertex_count() {
        return Err(Error::HostMismatch);
    }
    let mut arcs = Vec::new();
    for &(u, v) in g.edges() {
        let (a, b) = if d.sides[u] == Side::A {
            (u, v)
        } else {
            (v, u)
        };
        let (pa, pb) = (d.part_of[a], d.part_of[b]);
        if pa != pb {
            arcs.push((pb, pa));
        }
    }
    let dig = DmDigraph::from_arcs(d.len(), &arcs)?;
    if !dig.is_acyclic() {
        return Err(Error::Cyclic);
    }
    Ok(dig)
}

/// Nodes without in-arcs and nodes without out-arcs.
pub fn sources_and_sinks(d: &DmDigraph) -> (Vec<usize>, Vec<usize>) {
    let mut has_in = vec![false; d.nodes];
    let mut has_out = vec![false; d.nodes];
    for &(u, v) in &d.arcs {
        has_out[u] = true;
        has_in[v] = true;
    }
    (
        (0..d.nodes).filter(|&v| !has_in[v]).collect(),
        (0..d.nodes).filter(|&v| !has_out[v]).collect(),
    )
}

/// Which bipartitions count as directed cuts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum CutMode {
    /// Any node bipartition whose crossing arcs all point one way.
    #[default]
    Partition,
    /// Additionally both sides must be weakly connected.
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedCut {
    pub side_one: Vec<usize>,
    pub side_two: Vec<usize>,
    /// Crossing arcs, all from `side_one` to `side_two`.
    pub arcs: Vec<(usize, usize)>,
}

/// All directed cuts, ordered by the bitmask of `side_one`.
pub fn directed_cuts(d: &DmDigraph, mode: CutMode) -> Result<Vec<DirectedCut>> {
    if !d.is_acyclic() {
        return Err(Error::Cyclic);
    }
    if d.nodes > CUT_ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            limit: CUT_ENUMERATION_LIMIT,
            got: d.nodes,
        });
    }
    let full = (1u64 << d.nodes) - 1;
    let mut cuts = Vec::new();
    for mask in 1..full {
        let inside = |v: usize| mask >> v & 1 == 1;
        let mut forward = Vec::new();
        let mut backward = false;
        for &(u, v) in &d.arcs {
            match (inside(u), inside(v)) {
                (true, false) => forward.push((u, v)),
                (false, true) => {
                    backward = true;
                    break;
                }
                _ => {}
            }
        }
        if backward || forward.is_empty() {
            continue;
        }
        if mode == CutMode::Strict
            && !(d.weakly_connected_within(mask) && d.weakly_connected_within(full & !mask))
        {
            continue;
        }
        cuts.push(DirectedCut {
            side_one: (0..d.nodes).filter(|&v| inside(v)).collect(),
            side_two: (0..d.nodes).filter(|&v| !inside(v)).collect(),
            arcs: forward,
        });
    }
    Ok(cuts)
}

/// Directed paths (as node sequences) meeting every directed cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathFamily {
    pub paths: Vec<Vec<usize>>,
    /// True if the family is known to be minimum; otherwise its size is
    /// only an upper bound.
    pub exact: bool,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// The minimum size, when known.
    pub fn ell(&self) -> Option<usize> {
        self.exact.then_some(self.paths.len())
    }
}

fn source_to_sink_paths(d: &DmDigraph) -> Vec<Vec<usize>> {
    fn walk(succ: &[Vec<usize>], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if succ[u].is_empty() {
            out.push(path.clone());
            return;
        }
        for &w in &succ[u] {
            path.push(w);
            walk(succ, path, out);
            path.pop();
        }
    }
    let succ = d.successors();
    let (sources, _) = sources_and_sinks(d);
    let mut out = Vec::new();
    for s in sources {
        if !succ[s].is_empty() {
            walk(&succ, &mut vec![s], &mut out);
        }
    }
    out
}

fn hits(path: &[usize], cut: &DirectedCut) -> bool {
    path.windows(2).any(|w| cut.arcs.contains(&(w[0], w[1])))
}

/// Minimum family of directed paths meeting every directed cut, searched
/// exactly up to [`EXACT_PATH_FAMILY_LIMIT`] nodes. Larger digraphs get the
/// heuristic family, flagged as inexact.
pub fn min_path_family(d: &DmDigraph) -> Result<PathFamily> {
    if !d.is_acyclic() {
        return Err(Error::Cyclic);
    }
    if d.nodes > EXACT_PATH_FAMILY_LIMIT {
        return heuristic_path_family(d);
    }
    let cuts = directed_cuts(d, CutMode::Partition)?;
    if cuts.is_empty() {
        return Ok(PathFamily {
            paths: Vec::new(),
            exact: true,
        });
    }
    // Every path extends to a source-to-sink path meeting a superset of
    // cuts, so those are the only candidates needed.
    let candidates = source_to_sink_paths(d);
    let cover: Vec<FixedBitSet> = candidates
        .iter()
        .map(|p| {
            let mut bits = FixedBitSet::with_capacity(cuts.len());
            for (i, c) in cuts.iter().enumerate() {
                bits.set(i, hits(p, c));
            }
            bits
        })
        .collect();
    let mut chosen = Vec::new();
    for budget in 1..=candidates.len() {
        let uncovered = {
            let mut b = FixedBitSet::with_capacity(cuts.len());
            b.insert_range(..);
            b
        };
        if cover_search(&cover, &uncovered, budget, &mut chosen) {
            let paths = chosen.iter().map(|&i| candidates[i].clone()).collect();
            return Ok(PathFamily { paths, exact: true });
        }
    }
    Err(Error::Internal(
        "source-to-sink paths fail to meet every cut".into(),
    ))
}

fn cover_search(
    cover: &[FixedBitSet],
    uncovered: &FixedBitSet,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    // Branch on the uncovered cut met by the fewest candidates.
    let mut best: Option<(usize, usize)> = None;
    for c in uncovered.ones() {
        let options = cover.iter().filter(|b| b.contains(c)).count();
        if best.map_or(true, |(_, o)| options < o) {
            best = Some((c, options));
        }
    }
    let Some((cut, _)) = best else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for (i, bits) in cover.iter().enumerate() {
        if !bits.contains(cut) {
            continue;
        }
        let mut rest = uncovered.clone();
        rest.difference_with(bits);
        chosen.push(i);
        if cover_search(cover, &rest, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Greedy upper bound: repeatedly take the source-to-sink path through the
/// most uncovered arcs until every arc is covered (which meets every cut),
/// then drop paths that are redundant when cuts can be enumerated.
pub fn heuristic_path_family(d: &DmDigraph) -> Result<PathFamily> {
    let order = d.topological_order().ok_or(Error::Cyclic)?;
    let succ = d.successors();
    let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    while covered.len() < d.arcs.len() {
        // Longest path by uncovered-arc weight, by DP in reverse topological order.
        let mut best = vec![(0usize, usize::MAX); d.nodes];
        for &u in order.iter().rev() {
            for &w in &succ[u] {
                let gain = usize::from(!covered.contains(&(u, w))) + best[w].0;
                if gain > best[u].0 || (gain == best[u].0 && best[u].1 == usize::MAX) {
                    best[u] = (gain, w);
                }
            }
        }
        let start = order
            .iter()
            .copied()
            .max_by_key(|&u| (best[u].0, std::cmp::Reverse(u)))
            .expect("arcs imply nodes");
        let mut path = vec![start];
        let mut u = start;
        while best[u].1 != usize::MAX {
            u = best[u].1;
            path.push(u);
        }
        // Extend to a source and a sink so the path is maximal.
        let mut head = path[0];
        while let Some(&(p, _)) = d.arcs.iter().find(|&&(_, v)| v == head) {
            path.insert(0, p);
            head = p;
        }
        for w in path.windows(2) {
            covered.insert((w[0], w[1]));
        }
        paths.push(path);
    }
    if d.nodes <= CUT_ENUMERATION_LIMIT {
        let cuts = directed_cuts(d, CutMode::Partition)?;
        let mut i = 0;
        while i < paths.len() {
            let redundant = cuts
                .iter()
                .all(|c| paths.iter().enumerate().any(|(j, p)| j != i && hits(p, c)));
            if redundant {
                paths.remove(i);
            } else {
                i += 1;
            }
        }
    }
    Ok(PathFamily {
        paths,
        exact: false,
    })
}

/// The edges added to reach a matching-covered supergraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentationPlan {
    pub parts: Vec<Vec<VertexId>>,
    pub arcs: Vec<(usize, usize)>,
    pub paths: Vec<Vec<usize>>,
    /// (B-vertex of the terminal part, A-vertex of the initial part).
    pub new_edges: Vec<(VertexId, VertexId)>,
    pub ell: usize,
    /// Whether `ell` is the proven minimum path family size.
    pub exact: bool,
}

/// Adds one edge per path of a minimum path family, closing each path into
/// a cycle of the part digraph. The result is checked to be matching-covered.
pub fn augment_to_matching_covered(g: &Graph) -> Result<(Graph, AugmentationPlan)> {
    bipartite_sides(g)?;
    if !crate::graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let d = dm_decomposition(g)?;
    let dig = dm_digraph(g, &d)?;
    let family = min_path_family(&dig)?;
    let mut h = g.clone();
    let mut new_edges = Vec::new();
    for path in &family.paths {
        let (first, last) = (path[0], *path.last().unwrap());
        let pick = d.parts[last]
            .side_b
            .iter()
            .flat_map(|&b| d.parts[first].side_a.iter().map(move |&a| (b, a)))
            .find(|&(b, a)| !h.has_edge(a, b));
        let Some((b, a)) = pick else {
            return Err(Error::Precondition(format!(
                "parts {first} and {last} are already completely joined"
            )));
        };
        h.add_edge(b, a)?;
        new_edges.push((b, a));
    }
    if !view_is_matching_covered(&h.view()) {
        return Err(Error::Internal(
            "augmented graph is not matching-covered".into(),
        ));
    }
    let plan = AugmentationPlan {
        parts: d.parts.iter().map(|p| p.vertices.clone()).collect(),
        arcs: dig.arcs.clone(),
        ell: family.len(),
        exact: family.exact,
        paths: family.paths,
        new_edges,
    };
    Ok((h, plan))
}

/// Largest number of candidate non-edges the brute-force search accepts.
pub const BRUTE_FORCE_CANDIDATE_LIMIT: usize = 64;

/// Fewest edges (between A and B) whose addition makes `g` matching-covered,
/// searching subsets of size at most `max_added`. `None` if no subset that
/// small works.
pub fn min_supergraph_increment(g: &Graph, max_added: usize) -> Result<Option<usize>> {
    let sides = &bipartite_sides(g)?;
    let candidates: Vec<(VertexId, VertexId)> = g
        .vertices()
        .filter(|&a| sides[a] == Side::A)
        .flat_map(|a| {
            g.vertices()
                .filter(move |&b| sides[b] == Side::B)
                .map(move |b| (a, b))
        })
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();
    if candidates.len() > BRUTE_FORCE_CANDIDATE_LIMIT {
        return Err(Error::TooLarge {
            limit: BRUTE_FORCE_CANDIDATE_LIMIT,
            got: candidates.len(),
        });
    }
    for size in 0..=max_added.min(candidates.len()) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let mut h = g.clone();
            for &i in &pick {
                h.add_edge(candidates[i].0, candidates[i].1)?;
            }
            if view_is_matching_covered(&h.view()) {
                return Ok(Some(size));
            }
            if !next_combination(&mut pick, candidates.len()) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
