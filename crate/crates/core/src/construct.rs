//! The G(k,m) family: m copies of K_{k,k} minus two same-colored edges,
//! chained by link edges into a k-regular non-bipartite class-1 graph whose
//! link edges form one equivalent class. Includes the generalization to any
//! k-regular bipartite base and a verification harness.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::dm::bipartite_sides;
use crate::edgeset::EdgeSet;
use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::feasibility::{MatchingTable, SeparationOracle};
use crate::graph::{
    edge_cut_sides, is_bipartite, parse_graph, serialize_graph, BipartiteWitness, EdgeId, Graph,
    Side, VertexId,
};
use crate::matching::view_is_matchable;
use crate::switching::{equivalent_to_empty, equivalent_to_full};

/// Colors `1..=k` per edge id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    pub color_of: Vec<usize>,
}

impl EdgeColoring {
    pub fn colors(&self) -> usize {
        self.color_of.iter().copied().max().unwrap_or(0)
    }

    pub fn class(&self, color: usize) -> EdgeSet {
        EdgeSet::from_ids(
            self.color_of.len(),
            (0..self.color_of.len()).filter(|&e| self.color_of[e] == color),
        )
    }

    /// The first pair of adjacent edges sharing a color, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(EdgeId, EdgeId)> {
        for v in g.vertices() {
            let mut seen: HashMap<usize, EdgeId> = HashMap::new();
            for &(_, e) in g.incident(v) {
                if let Some(&f) = seen.get(&self.color_of[e]) {
                    return Some((f.min(e), f.max(e)));
                }
                seen.insert(self.color_of[e], e);
            }
        }
        None
    }
}

/// `K_{k,k}` on `a0..a{k-1}`, `b0..b{k-1}` (edge `a_i b_j` has id `i*k + j`)
/// with the coloring `c(a_i b_j) = ((i + j) mod k) + 1`.
pub fn color_complete_bipartite(k: usize) -> Result<(Graph, EdgeColoring)> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let labels = (0..k)
        .map(|i| format!("a{i}"))
        .chain((0..k).map(|j| format!("b{j}")));
    let mut g = Graph::with_labels(labels)?;
    let mut color_of = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            g.add_edge(i, k + j)?;
            color_of.push((i + j) % k + 1);
        }
    }
    let sides = (0..2 * k)
        .map(|v| if v < k { Side::A } else { Side::B })
        .collect();
    g.set_bipartition(crate::graph::Bipartition::new(sides))?;
    Ok((g, EdgeColoring { color_of }))
}

/// A Hamilton cycle as a vertex sequence starting at vertex 0, found by
/// backtracking.
pub fn hamilton_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    fn extend(g: &Graph, path: &mut Vec<VertexId>, on: &mut [bool]) -> bool {
        let n = g.vertex_count();
        let last = *path.last().unwrap();
        if path.len() == n {
            return g.has_edge(last, path[0]);
        }
        for w in g.neighbors(last).collect::<Vec<_>>() {
            if on[w] {
                continue;
            }
            on[w] = true;
            path.push(w);
            if extend(g, path, on) {
                return true;
            }
            path.pop();
            on[w] = false;
        }
        false
    }
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let mut on = vec![false; n];
    on[0] = true;
    let mut path = vec![0];
    extend(g, &mut path, &mut on).then_some(path)
}

/// `G_k`: `K_{k,k}` without its color-1 edges at `a0` and `a1`.
#[derive(Clone, Debug)]
pub struct GkBase {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub u1: VertexId,
    pub u2: VertexId,
    pub v1: VertexId,
    pub v2: VertexId,
    pub hamilton_cycle: Vec<VertexId>,
}

pub fn build_gk(k: usize) -> Result<GkBase> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let (full, coloring) = color_complete_bipartite(k)?;
    let (u1, v1, u2, v2) = (0, k, 1, 2 * k - 1);
    let e1 = full.edge_between(u1, v1).unwrap();
    let e2 = full.edge_between(u2, v2).unwrap();
    debug_assert_eq!((coloring.color_of[e1], coloring.color_of[e2]), (1, 1));
    let removed = EdgeSet::from_ids(full.edge_count(), [e1, e2]);
    let graph = full.without_edges(&removed);
    let color_of = (0..full.edge_count())
        .filter(|e| !removed.contains(*e))
        .map(|e| coloring.color_of[e])
        .collect();
    let hamilton_cycle = hamilton_cycle(&graph)
        .ok_or_else(|| Error::Precondition(format!("G_{k} has no Hamilton cycle")))?;
    Ok(GkBase {
        graph,
        coloring: EdgeColoring { color_of },
        u1,
        u2,
        v1,
        v2,
        hamilton_cycle,
    })
}

/// The part a vertex plays in a copy of the base graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    U1,
    U2,
    V1,
    V2,
    /// Any other base vertex, by its base label.
    Other(String),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::U1 => f.write_str("u1"),
            Role::U2 => f.write_str("u2"),
            Role::V1 => f.write_str("v1"),
            Role::V2 => f.write_str("v2"),
            Role::Other(s) => f.write_str(s),
        }
    }
}

/// Copy index (from 1) and role; vertices are labelled `role^copy`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexRole {
    pub copy: usize,
    pub role: Role,
}

impl VertexRole {
    fn parse(label: &str) -> Option<Self> {
        let (role, copy) = label.rsplit_once('^')?;
        let copy = copy.parse().ok()?;
        let role = match role {
            "u1" => Role::U1,
            "u2" => Role::U2,
            "v1" => Role::V1,
            "v2" => Role::V2,
            other => Role::Other(other.to_string()),
        };
        Some(VertexRole { copy, role })
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub k: usize,
    pub m: usize,
    /// The link edges `K`, of size 2m.
    pub link_edges: EdgeSet,
    /// `X = {u1^1 u2^1} ∪ {v1^i u1^(i+1)}`, of size m.
    pub test_set: EdgeSet,
    pub coloring: EdgeColoring,
    pub roles: Vec<VertexRole>,
}

impl ConstructionResult {
    pub fn vertex(&self, copy: usize, role: Role) -> Option<VertexId> {
        let want = VertexRole { copy, role };
        self.roles.iter().position(|r| *r == want)
    }

    fn link(&self, a: (usize, Role), b: (usize, Role)) -> Option<EdgeId> {
        let u = self.vertex(a.0, a.1)?;
        let v = self.vertex(b.0, b.1)?;
        self.graph.edge_between(u, v)
    }
}

/// `G(k,m)` over `K_{k,k}`.
pub fn build_gkm(k: usize, m: usize) -> Result<ConstructionResult> {
    let base = build_gk(k)?;
    let (full, coloring) = color_complete_bipartite(k)?;
    let e1 = full.edge_between(base.u1, base.v1).unwrap();
    let e2 = full.edge_between(base.u2, base.v2).unwrap();
    build_generalized(&full, &coloring, e1, e2, m)
}

/// The construction over any k-regular bipartite `base` with a proper
/// k-edge-coloring. `e1` and `e2` must share a color, be disjoint, and
/// `base - e1 - e2` must be Hamiltonian (equivalently, some Hamilton cycle
/// of the base avoids both).
pub fn build_generalized(
    base: &Graph,
    coloring: &EdgeColoring,
    e1: EdgeId,
    e2: EdgeId,
    m: usize,
) -> Result<ConstructionResult> {
    let sides = bipartite_sides(base)?;
    let k = base
        .is_regular()
        .ok_or_else(|| Error::Precondition("base graph is not regular".into()))?;
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 3, got {k}"
        )));
    }
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "m must be at least 2, got {m}"
        )));
    }
    if coloring.color_of.len() != base.edge_count() {
        return Err(Error::HostMismatch);
    }
    if coloring.color_of.iter().any(|&c| c == 0 || c > k) {
        return Err(Error::Precondition(format!(
            "coloring uses colors outside 1..={k}"
        )));
    }
    if let Some((f, h)) = coloring.conflict(base) {
        return Err(Error::Precondition(format!(
            "coloring is not proper at {} and {}",
            base.edge_label(f),
            base.edge_label(h)
        )));
    }
    for e in [e1, e2] {
        if e >= base.edge_count() {
            return Err(Error::InvalidParameter(format!("edge id {e} out of range")));
        }
    }
    if coloring.color_of[e1] != coloring.color_of[e2] {
        return Err(Error::Precondition(
            "e1 and e2 have different colors".into(),
        ));
    }
    let orient = |e: EdgeId| {
        let (x, y) = base.endpoints(e);
        if sides[x] == Side::A {
            (x, y)
        } else {
            (y, x)
        }
    };
    let (u1, v1) = orient(e1);
    let (u2, v2) = orient(e2);
    if e1 == e2 || u1 == u2 || v1 == v2 {
        return Err(Error::Precondition("e1 and e2 share a vertex".into()));
    }
    let removed = EdgeSet::from_ids(base.edge_count(), [e1, e2]);
    let reduced = base.without_edges(&removed);
    if hamilton_cycle(&reduced).is_none() {
        return Err(Error::Precondition(
            "base minus e1 and e2 has no Hamilton cycle".into(),
        ));
    }
    let link_color = coloring.color_of[e1];

    let n = base.vertex_count();
    let role_of = |v: VertexId| match v {
        _ if v == u1 => Role::U1,
        _ if v == u2 => Role::U2,
        _ if v == v1 => Role::V1,
        _ if v == v2 => Role::V2,
        _ => Role::Other(base.label(v).to_string()),
    };
    let mut roles = Vec::with_capacity(n * m);
    for copy in 1..=m {
        for v in 0..n {
            roles.push(VertexRole {
                copy,
                role: role_of(v),
            });
        }
    }
    let mut g = Graph::with_labels(roles.iter().map(|r| format!("{}^{}", r.role, r.copy)))?;
    let mut color_of = Vec::new();
    for copy in 0..m {
        for e in (0..base.edge_count()).filter(|&e| !removed.contains(e)) {
            let (x, y) = base.endpoints(e);
            g.add_edge(copy * n + x, copy * n + y)?;
            color_of.push(coloring.color_of[e]);
        }
    }
    let at = |copy: usize, v: VertexId| (copy - 1) * n + v;
    let mut links = vec![g.add_edge(at(1, u1), at(1, u2))?];
    let mut test = vec![links[0]];
    for i in 1..m {
        let a = g.add_edge(at(i, v1), at(i + 1, u1))?;
        let b = g.add_edge(at(i, v2), at(i + 1, u2))?;
        links.extend([a, b]);
        test.push(a);
    }
    links.push(g.add_edge(at(m, v1), at(m, v2))?);
    color_of.resize(g.edge_count(), link_color);
    let e = g.edge_count();
    Ok(ConstructionResult {
        graph: g,
        k,
        m,
        link_edges: EdgeSet::from_ids(e, links),
        test_set: EdgeSet::from_ids(e, test),
        coloring: EdgeColoring { color_of },
        roles,
    })
}

/// How check (4) and check (5) are decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum VerifyMode {
    /// Enumeration up to [`ENUMERATION_VERTEX_LIMIT`] vertices, structural above.
    #[default]
    Auto,
    /// From the full list of perfect matchings.
    Enumeration,
    /// From cut and forcing arguments on the link edges, with matchability
    /// queries only.
    Structural,
}

pub const ENUMERATION_VERTEX_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: VerifyMode,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_NAMES: [&str; 7] = [
    "regular",
    "proper_coloring",
    "non_bipartite",
    "equivalent_class",
    "test_set_non_feasible",
    "not_equivalent_to_empty",
    "not_equivalent_to_full",
];

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

/// Runs the seven checks. Failures are report entries, never errors.
pub fn verify_construction(r: &ConstructionResult, mode: VerifyMode) -> VerificationReport {
    let g = &r.graph;
    let mode = match mode {
        VerifyMode::Auto if g.vertex_count() <= ENUMERATION_VERTEX_LIMIT => VerifyMode::Enumeration,
        VerifyMode::Auto => VerifyMode::Structural,
        other => other,
    };
    let mut checks = Vec::with_capacity(7);

    checks.push(match g.is_regular() {
        Some(d) if d == r.k => check("regular", true, format!("every vertex has degree {d}")),
        Some(d) => check(
            "regular",
            false,
            format!("regular of degree {d}, expected {}", r.k),
        ),
        None => {
            let v = g.vertices().find(|&v| g.degree(v) != r.k).unwrap_or(0);
            check(
                "regular",
                false,
                format!("{} has degree {}", g.label(v), g.degree(v)),
            )
        }
    });

    checks.push(coloring_check(r));

    checks.push(match is_bipartite(g) {
        BipartiteWitness::OddCycle(c) => check(
            "non_bipartite",
            true,
            format!("odd cycle {}", g.describe_vertices(&c).join(" ")),
        ),
        BipartiteWitness::Coloring(_) => check("non_bipartite", false, "graph is bipartite"),
    });

    let class_check = match mode {
        VerifyMode::Structural => structural_class_check(r),
        _ => enumerated_class_check(r),
    };
    let class_ok = class_check.passed;
    checks.push(class_check);

    checks.push(match mode {
        VerifyMode::Structural => structural_parity_check(r, class_ok),
        _ => enumerated_parity_check(r),
    });

    let to_empty = equivalent_to_empty(g, &r.test_set).expect("test set lives on the graph");
    let rest = g.without_edges(&r.test_set);
    let rest_connected = crate::graph::is_connected(&rest);
    checks.push(match (to_empty, rest_connected) {
        (None, true) => check(
            "not_equivalent_to_empty",
            true,
            "G - X is connected, so X is no vertex cut ∇U",
        ),
        (Some(w), _) => check(
            "not_equivalent_to_empty",
            false,
            format!(
                "X = ∇U for U = {{{}}}",
                g.describe_vertices(&w.u).join(", ")
            ),
        ),
        (None, false) => check(
            "not_equivalent_to_empty",
            false,
            "switching test and connectivity argument disagree",
        ),
    });

    let to_full = equivalent_to_full(g, &r.test_set).expect("test set lives on the graph");
    checks.push(match (to_full, is_bipartite(&rest)) {
        (None, BipartiteWitness::OddCycle(c)) => check(
            "not_equivalent_to_full",
            true,
            format!(
                "G - X has odd cycle {}",
                rest.describe_vertices(&c).join(" ")
            ),
        ),
        (Some(w), _) => check(
            "not_equivalent_to_full",
            false,
            format!(
                "E - X = ∇U for U = {{{}}}",
                g.describe_vertices(&w.u).join(", ")
            ),
        ),
        (None, BipartiteWitness::Coloring(_)) => check(
            "not_equivalent_to_full",
            false,
            "switching test and bipartiteness argument disagree",
        ),
    });

    VerificationReport { mode, checks }
}

fn coloring_check(r: &ConstructionResult) -> Check {
    let g = &r.graph;
    let c = &r.coloring;
    if c.color_of.len() != g.edge_count() {
        return check(
            "proper_coloring",
            false,
            "coloring does not match the edge count",
        );
    }
    if let Some(&bad) = c.color_of.iter().find(|&&x| x == 0 || x > r.k) {
        return check(
            "proper_coloring",
            false,
            format!("color {bad} outside 1..={}", r.k),
        );
    }
    if let Some((e, f)) = c.conflict(g) {
        return check(
            "proper_coloring",
            false,
            format!(
                "{} and {} share color {}",
                g.edge_label(e),
                g.edge_label(f),
                c.color_of[e]
            ),
        );
    }
    let n = g.vertex_count();
    for color in 1..=r.k {
        if 2 * c.class(color).len() != n {
            return check(
                "proper_coloring",
                false,
                format!("color class {color} is not a perfect matching"),
            );
        }
    }
    let link_colors: Vec<usize> = r.link_edges.iter().map(|e| c.color_of[e]).collect();
    if link_colors.windows(2).any(|w| w[0] != w[1]) {
        return check(
            "proper_coloring",
            false,
            "link edges use more than one color",
        );
    }
    check(
        "proper_coloring",
        true,
        format!("{} colors, each class a perfect matching", r.k),
    )
}

fn class_description(r: &ConstructionResult) -> String {
    r.graph.describe_edges(&r.link_edges).join(", ")
}

fn enumerated_class_check(r: &ConstructionResult) -> Check {
    let table = match MatchingTable::new(&r.graph, None) {
        Ok(t) => t,
        Err(e) => {
            return check(
                "equivalent_class",
                false,
                format!("enumeration failed: {e}"),
            )
        }
    };
    let classes = table.equivalent_classes();
    let k = r.link_edges.to_vec();
    if classes.classes.contains(&k) {
        check(
            "equivalent_class",
            true,
            format!(
                "{} perfect matchings; K = {{{}}} is a class of size {}",
                table.len(),
                class_description(r),
                k.len()
            ),
        )
    } else {
        let first = k[0];
        let holder = classes.classes.iter().find(|c| c.contains(&first)).unwrap();
        check(
            "equivalent_class",
            false,
            format!(
                "the class of {} is {{{}}}",
                r.graph.edge_label(first),
                holder
                    .iter()
                    .map(|&e| r.graph.edge_label(e))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        )
    }
}

/// Does every perfect matching through all of `forced` also contain every
/// edge of `implied`? Equivalently: with the ends of `forced` removed, the
/// graph has no perfect matching avoiding some edge of `implied`.
fn forces(g: &Graph, forced: &[EdgeId], implied: &[EdgeId]) -> bool {
    let mut view = g.view();
    for &e in forced {
        let (u, v) = g.endpoints(e);
        view.remove_vertex(u);
        view.remove_vertex(v);
    }
    if !view_is_matchable(&view) {
        // No perfect matching uses `forced` at all.
        return false;
    }
    implied.iter().all(|&f| {
        view.remove_edge(f);
        let avoidable = view_is_matchable(&view);
        view.restore_edge(f);
        !avoidable
    })
}

fn structural_class_check(r: &ConstructionResult) -> Check {
    let g = &r.graph;
    let m = r.m;
    let fail = |msg: String| check("equivalent_class", false, msg);
    let (Some(top), Some(bottom)) = (
        r.link((1, Role::U1), (1, Role::U2)),
        r.link((m, Role::V1), (m, Role::V2)),
    ) else {
        return fail("end link edges missing".into());
    };
    let mut pairs = Vec::new();
    for i in 1..m {
        match (
            r.link((i, Role::V1), (i + 1, Role::U1)),
            r.link((i, Role::V2), (i + 1, Role::U2)),
        ) {
            (Some(a), Some(b)) => pairs.push([a, b]),
            _ => return fail(format!("link pair {i} missing")),
        }
    }
    // Each middle pair is a 2-edge-cut with two even sides, so a perfect
    // matching uses both edges or neither.
    for (i, pair) in pairs.iter().enumerate() {
        let cut = EdgeSet::from_ids(g.edge_count(), *pair);
        match edge_cut_sides(g, &cut) {
            Some((s, t)) if s.len() % 2 == 0 && t.len() % 2 == 0 => {}
            _ => {
                return fail(format!(
                    "link pair {} is not a 2-edge-cut with even sides",
                    i + 1
                ))
            }
        }
    }
    // Forcing along the chain in both directions.
    let mut chain: Vec<Vec<EdgeId>> = vec![vec![top]];
    chain.extend(pairs.iter().map(|p| p.to_vec()));
    chain.push(vec![bottom]);
    for w in chain.windows(2) {
        if !forces(g, &w[0], &w[1]) || !forces(g, &w[1], &w[0]) {
            return fail(format!(
                "forcing fails between {} and {}",
                g.edge_label(w[0][0]),
                g.edge_label(w[1][0])
            ));
        }
    }
    // Maximality: every other edge is separable from the top link edge.
    let mut oracle = match SeparationOracle::new(g) {
        Ok(o) => o,
        Err(e) => return fail(format!("{e}")),
    };
    if let Some(f) =
        (0..g.edge_count()).find(|&f| !r.link_edges.contains(f) && oracle.equivalent(top, f))
    {
        return fail(format!(
            "{} is also equivalent to the link edges",
            g.edge_label(f)
        ));
    }
    check(
        "equivalent_class",
        true,
        format!(
            "K = {{{}}}: link pairs are even 2-edge-cuts, forcing holds along the chain, no other edge joins",
            class_description(r)
        ),
    )
}

fn enumerated_parity_check(r: &ConstructionResult) -> Check {
    let table = match MatchingTable::new(&r.graph, None) {
        Ok(t) => t,
        Err(e) => {
            return check(
                "test_set_non_feasible",
                false,
                format!("enumeration failed: {e}"),
            )
        }
    };
    let mut witness = [None, None];
    for pm in table.matchings() {
        let hits = pm.edges().intersection_count(&r.test_set);
        witness[hits % 2].get_or_insert(hits);
    }
    match witness {
        [Some(even), Some(odd)] => check(
            "test_set_non_feasible",
            false,
            format!("X is feasible: perfect matchings meet X in {even} and in {odd} edges"),
        ),
        [Some(h), None] | [None, Some(h)] => check(
            "test_set_non_feasible",
            true,
            format!(
                "all {} perfect matchings meet X with the parity of {h}",
                table.len()
            ),
        ),
        [None, None] => check("test_set_non_feasible", false, "no perfect matchings"),
    }
}

/// With K a class and X ⊆ K, each perfect matching meets X in 0 or |X|
/// edges. The link color class is a perfect matching containing K and any
/// other color class avoids K, so both values occur.
fn structural_parity_check(r: &ConstructionResult, class_ok: bool) -> Check {
    if !class_ok {
        return check(
            "test_set_non_feasible",
            false,
            "depends on K being an equivalent class",
        );
    }
    if !r.test_set.is_subset(&r.link_edges) {
        return check("test_set_non_feasible", false, "X is not contained in K");
    }
    let link_color = r.coloring.color_of[r.link_edges.iter().next().unwrap()];
    let with_k = r.coloring.class(link_color);
    let Some(other) = (1..=r.k).find(|&c| c != link_color) else {
        return check("test_set_non_feasible", false, "only one color");
    };
    let without_k = r.coloring.class(other);
    let n = r.graph.vertex_count();
    if 2 * with_k.len() != n || 2 * without_k.len() != n || !r.link_edges.is_subset(&with_k) {
        return check(
            "test_set_non_feasible",
            false,
            "color classes do not witness both cases",
        );
    }
    let x = r.test_set.len();
    if x % 2 == 0 {
        check(
            "test_set_non_feasible",
            true,
            format!("every perfect matching meets X in 0 or {x} edges, both even"),
        )
    } else {
        check(
            "test_set_non_feasible",
            false,
            format!("X is feasible: color class {other} meets X in 0 edges, color class {link_color} in {x}"),
        )
    }
}

/// The graph file followed by `link-edge`, `test-edge` and `color` lines.
pub fn serialize_construction(r: &ConstructionResult) -> String {
    let g = &r.graph;
    let mut out = serialize_graph(g);
    let pair = |e: EdgeId| {
        let (u, v) = g.endpoints(e);
        format!("{} {}", g.label(u), g.label(v))
    };
    for e in r.link_edges.iter() {
        out.push_str(&format!("link-edge {}\n", pair(e)));
    }
    for e in r.test_set.iter() {
        out.push_str(&format!("test-edge {}\n", pair(e)));
    }
    for e in 0..g.edge_count() {
        out.push_str(&format!("color {} {}\n", r.coloring.color_of[e], pair(e)));
    }
    out
}

fn is_annotation(toks: &[&str]) -> bool {
    matches!(toks.first(), Some(&("link-edge" | "test-edge" | "color")))
}

/// Replaces annotation lines by comments, leaving a plain graph file with
/// the same line numbering.
pub fn strip_annotations(text: &str) -> String {
    let mut plain = String::with_capacity(text.len());
    for line in text.lines() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        plain.push_str(if is_annotation(&toks) { "#" } else { line });
        plain.push('\n');
    }
    plain
}

/// Reads the annotated format back. Roles come from the `role^copy` labels,
/// `k` from the regular degree and `m` from the largest copy index.
pub fn parse_construction(text: &str) -> Result<ConstructionResult> {
    let notes: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| is_annotation(toks))
        .collect();
    let g = parse_graph(&strip_annotations(text))?;
    let malformed = |line: usize, msg: &str| -> Error {
        ParseError {
            line,
            kind: ParseErrorKind::Malformed(msg.to_string()),
        }
        .into()
    };
    let mut link = g.empty_edge_set();
    let mut test = g.empty_edge_set();
    let mut color_of = vec![0usize; g.edge_count()];
    for (line, toks) in notes {
        let (kind, rest) = (toks[0], &toks[1..]);
        let (c, ends) = if kind == "color" {
            let c = rest
                .first()
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| malformed(line, "expected `color <c> <u> <v>`"))?;
            (c, &rest[1..])
        } else {
            (0, rest)
        };
        if ends.len() != 2 {
            return Err(malformed(line, "expected two vertex labels"));
        }
        let e = g
            .edge_by_labels(ends[0], ends[1])
            .map_err(|err| malformed(line, &err.to_string()))?;
        match kind {
            "link-edge" => {
                link.insert(e);
            }
            "test-edge" => {
                test.insert(e);
            }
            _ => color_of[e] = c,
        }
    }
    if color_of.contains(&0) {
        return Err(Error::Precondition("some edge has no color line".into()));
    }
    let roles: Vec<VertexRole> = g
        .labels()
        .iter()
        .map(|l| {
            VertexRole::parse(l).unwrap_or(VertexRole {
                copy: 0,
                role: Role::Other(l.clone()),
            })
        })
        .collect();
    let k = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    let m = roles.iter().map(|r| r.copy).max().unwrap_or(0);
    Ok(ConstructionResult {
        graph: g,
        k,
        m,
        link_edges: link,
        test_set: test,
        coloring: EdgeColoring { color_of },
        roles,
    })
}
