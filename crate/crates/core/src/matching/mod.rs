//! Perfect matchings: existence, enumeration, allowed edges, matching-covered
//! and k-extendability tests.

mod bipartite;
mod blossom;
pub(crate) mod enumerate;

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, BipartiteWitness, EdgeId, Graph, GraphView, Side, VertexId};

pub use enumerate::{
    enumerate_perfect_matchings, enumerate_view, has_perfect_matching_backtrack,
    MatchingEnumeration, DEFAULT_MATCHING_LIMIT,
};

pub(crate) const UNMATCHED: usize = usize::MAX;

/// Graphs up to this many (live) vertices are cross-checked against the
/// backtracking oracle in debug builds.
pub const ORACLE_VERTEX_LIMIT: usize = 14;

/// A set of independent edges covering every vertex of its host.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PerfectMatching {
    edges: EdgeSet,
}

impl PerfectMatching {
    /// Wraps an edge set after checking both matching invariants.
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self> {
        let pm = PerfectMatching { edges };
        if pm.validate(g) {
            Ok(pm)
        } else {
            Err(Error::Precondition(
                "edge set is not a perfect matching".into(),
            ))
        }
    }

    pub(crate) fn new_unchecked(edges: EdgeSet) -> Self {
        PerfectMatching { edges }
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(e)
    }

    /// Partner of each vertex.
    pub fn mate(&self, g: &Graph) -> Vec<VertexId> {
        let mut mate = vec![UNMATCHED; g.vertex_count()];
        for e in self.edges.iter() {
            let (u, v) = g.endpoints(e);
            mate[u] = v;
            mate[v] = u;
        }
        mate
    }

    /// Independent and spanning.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.edges.universe() != g.edge_count() {
            return false;
        }
        let mut covered = vec![0u8; g.vertex_count()];
        for e in self.edges.iter() {
            let (u, v) = g.endpoints(e);
            covered[u] += 1;
            covered[v] += 1;
        }
        covered.iter().all(|&c| c == 1)
    }
}

/// The 2-coloring to use for Hopcroft-Karp, if the host is bipartite.
pub(crate) fn host_sides(g: &Graph) -> Option<Vec<Side>> {
    if let Some(bp) = g.bipartition() {
        return Some((0..g.vertex_count()).map(|v| bp.side(v)).collect());
    }
    match is_bipartite(g) {
        BipartiteWitness::Coloring(c) => Some(c),
        BipartiteWitness::OddCycle(_) => None,
    }
}

/// Reusable matcher over views of one host graph.
pub(crate) struct Matcher {
    sides: Option<Vec<Side>>,
}

impl Matcher {
    pub(crate) fn new(g: &Graph) -> Self {
        Matcher {
            sides: host_sides(g),
        }
    }

    /// Extends a partial matching (which must only use live vertices and
    /// edges of the view) to a maximum matching.
    pub(crate) fn maximize(&self, view: &GraphView<'_>, mate: &mut [usize]) {
        match &self.sides {
            Some(sides) => bipartite::maximize(view, sides, mate),
            None => blossom::maximize(view, mate),
        }
    }

    pub(crate) fn is_perfect(view: &GraphView<'_>, mate: &[usize]) -> bool {
        view.vertices().all(|v| mate[v] != UNMATCHED)
    }

    /// A perfect matching of the view as a mate array, if one exists.
    pub(crate) fn perfect(&self, view: &GraphView<'_>) -> Option<Vec<usize>> {
        let mut mate = vec![UNMATCHED; view.graph().vertex_count()];
        self.perfect_from(view, &mut mate).then_some(mate)
    }

    pub(crate) fn perfect_from(&self, view: &GraphView<'_>, mate: &mut [usize]) -> bool {
        if view.vertex_count() % 2 == 1 {
            return false;
        }
        self.maximize(view, mate);
        let ok = Self::is_perfect(view, mate);
        if cfg!(debug_assertions) && view.vertex_count() <= ORACLE_VERTEX_LIMIT {
            debug_assert_eq!(
                ok,
                enumerate::backtrack_exists(view),
                "augmenting search disagrees with the backtracking oracle"
            );
        }
        ok
    }
}

pub(crate) fn mate_to_edges(g: &Graph, mate: &[usize]) -> EdgeSet {
    let mut set = g.empty_edge_set();
    for (u, &w) in mate.iter().enumerate() {
        if w != UNMATCHED && u < w {
            set.insert(g.edge_between(u, w).expect("matched pairs are edges"));
        }
    }
    set
}

/// Whether the view has a perfect matching.
pub fn view_is_matchable(view: &GraphView<'_>) -> bool {
    Matcher::new(view.graph()).perfect(view).is_some()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    view_is_matchable(&g.view())
}

pub fn find_perfect_matching(g: &Graph) -> Option<PerfectMatching> {
    Matcher::new(g)
        .perfect(&g.view())
        .map(|mate| PerfectMatching::new_unchecked(mate_to_edges(g, &mate)))
}

/// Edges lying in at least one perfect matching.
pub fn allowed_edges(g: &Graph) -> Result<EdgeSet> {
    view_allowed_edges(&g.view()).ok_or(Error::NotMatchable)
}

/// Allowed edges of a view, or `None` if the view is not matchable. An edge
/// `uv` is allowed iff the view minus `u` and `v` is matchable; each test
/// restarts from a known perfect matching with `u`, `v` and their partners
/// unmatched, so it costs a single augmentation.
pub(crate) fn view_allowed_edges(view: &GraphView<'_>) -> Option<EdgeSet> {
    let g = view.graph();
    let matcher = Matcher::new(g);
    let base = matcher.perfect(view)?;
    let mut allowed = g.empty_edge_set();
    let mut scratch = view.clone();
    for e in view.edge_ids().collect::<Vec<_>>() {
        let (u, v) = g.endpoints(e);
        if base[u] == v {
            allowed.insert(e);
            continue;
        }
        if forced_edge_extends(&matcher, &mut scratch, &base, u, v) {
            allowed.insert(e);
        }
    }
    Some(allowed)
}

/// Is `view - u - v` matchable? `base` is a perfect matching of the view and
/// `scratch` must equal the view; it is restored before returning.
pub(crate) fn forced_edge_extends(
    matcher: &Matcher,
    scratch: &mut GraphView<'_>,
    base: &[usize],
    u: VertexId,
    v: VertexId,
) -> bool {
    let mut mate = base.to_vec();
    for x in [u, v] {
        let y = mate[x];
        if y != UNMATCHED {
            mate[y] = UNMATCHED;
            mate[x] = UNMATCHED;
        }
    }
    scratch.remove_vertex(u);
    scratch.remove_vertex(v);
    let ok = matcher.perfect_from(scratch, &mut mate);
    scratch.restore_vertex(u);
    scratch.restore_vertex(v);
    ok
}

/// Connected, at least two vertices, matchable, every edge allowed.
pub fn is_matching_covered(g: &Graph) -> bool {
    let verdict = view_is_matching_covered(&g.view());
    if cfg!(debug_assertions) {
        if let Ok(hall) = is_matching_covered_hall(g) {
            debug_assert_eq!(
                verdict, hall,
                "allowed-edge and Hall-surplus tests disagree"
            );
        }
    }
    verdict
}

pub(crate) fn view_is_matching_covered(view: &GraphView<'_>) -> bool {
    if view.vertex_count() < 2 || !view.is_connected() {
        return false;
    }
    match view_allowed_edges(view) {
        Some(allowed) => view.edge_ids().all(|e| allowed.contains(e)),
        None => false,
    }
}

/// Largest side accepted by [`is_matching_covered_hall`].
pub const HALL_SIDE_LIMIT: usize = 12;

/// Matching-covered test for bipartite graphs via Hall surplus: |A| = |B|,
/// the graph has an edge, and every proper non-empty U ⊂ A has
/// |N(U)| ≥ |U| + 1.
pub fn is_matching_covered_hall(g: &Graph) -> Result<bool> {
    let sides = match g.bipartition() {
        Some(bp) => (0..g.vertex_count()).map(|v| bp.side(v)).collect(),
        None => host_sides(g).ok_or(Error::NotBipartite)?,
    };
    let a: Vec<VertexId> = g.vertices().filter(|&v| sides[v] == Side::A).collect();
    let b: Vec<VertexId> = g.vertices().filter(|&v| sides[v] == Side::B).collect();
    if a.len() > HALL_SIDE_LIMIT {
        return Err(Error::TooLarge {
            limit: HALL_SIDE_LIMIT,
            got: a.len(),
        });
    }
    if a.len() != b.len() || g.edge_count() == 0 {
        return Ok(false);
    }
    let mut b_index = vec![0usize; g.vertex_count()];
    for (i, &v) in b.iter().enumerate() {
        b_index[v] = i;
    }
    let nbr: Vec<u32> = a
        .iter()
        .map(|&v| g.neighbors(v).fold(0u32, |m, w| m | 1 << b_index[w]))
        .collect();
    let k = a.len();
    let full = (1u32 << k) - 1;
    for mask in 1..full {
        let mut n = 0u32;
        for (i, &m) in nbr.iter().enumerate() {
            if mask >> i & 1 == 1 {
                n |= m;
            }
        }
        if n.count_ones() < mask.count_ones() + 1 {
            return Ok(false);
        }
    }
    // U = A itself: Hall's condition for a perfect matching.
    Ok(nbr.iter().fold(0, |m, &x| m | x).count_ones() as usize >= k)
}

/// Connected, matchable, at least 2k+2 vertices, and every set of k
/// pairwise independent edges extends to a perfect matching.
pub fn is_k_extendable(g: &Graph, k: usize) -> Result<bool> {
    Ok(non_extendable_set(g, k)?.is_none())
}

/// Why a graph fails k-extendability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ExtendabilityFailure {
    TooFewVertices,
    Disconnected,
    NotMatchable,
    /// Independent edges contained in no perfect matching.
    Independent(Vec<EdgeId>),
}

/// `None` when the graph is k-extendable, otherwise the first failure found
/// (independent sets are scanned in lexicographic edge id order).
pub fn non_extendable_set(g: &Graph, k: usize) -> Result<Option<ExtendabilityFailure>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if g.vertex_count() < 2 * k + 2 {
        return Ok(Some(ExtendabilityFailure::TooFewVertices));
    }
    if !g.view().is_connected() {
        return Ok(Some(ExtendabilityFailure::Disconnected));
    }
    let matcher = Matcher::new(g);
    let base = match matcher.perfect(&g.view()) {
        Some(m) => m,
        None => return Ok(Some(ExtendabilityFailure::NotMatchable)),
    };
    let mut chosen = Vec::with_capacity(k);
    let mut used = vec![false; g.vertex_count()];
    let mut view = g.view();
    Ok(
        extend_search(g, &matcher, &base, k, 0, &mut chosen, &mut used, &mut view)
            .map(ExtendabilityFailure::Independent),
    )
}

#[allow(clippy::too_many_arguments)]
fn extend_search(
    g: &Graph,
    matcher: &Matcher,
    base: &[usize],
    k: usize,
    start: EdgeId,
    chosen: &mut Vec<EdgeId>,
    used: &mut [bool],
    view: &mut GraphView<'_>,
) -> Option<Vec<EdgeId>> {
    if chosen.len() == k {
        let mut mate = base.to_vec();
        for &e in chosen.iter() {
            let (u, v) = g.endpoints(e);
            for x in [u, v] {
                let y = mate[x];
                if y != UNMATCHED {
                    mate[y] = UNMATCHED;
                    mate[x] = UNMATCHED;
                }
            }
        }
        return (!matcher.perfect_from(view, &mut mate)).then(|| chosen.clone());
    }
    for e in start..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        view.remove_vertex(u);
        view.remove_vertex(v);
        chosen.push(e);
        let found = extend_search(g, matcher, base, k, e + 1, chosen, used, view);
        chosen.pop();
        view.restore_vertex(u);
        view.restore_vertex(v);
        used[u] = false;
        used[v] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}
