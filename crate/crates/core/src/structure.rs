//! Removable edges, strong coverability, balanced edge cuts of bipartite
//! graphs, bricks and braces, and classification into the nested families
//! matching-covered ⊇ no equivalent class ⊇ strongly coverable ⊇ 2-extendable.

use serde::Serialize;

use crate::dm::bipartite_sides;
use crate::edgeset::EdgeSet;
use crate::error::{Error, GraphError, Result};
use crate::feasibility::equivalent_classes;
use crate::graph::{vertex_connectivity, BipartiteWitness, EdgeId, Graph, Side, VertexId};
use crate::matching::{
    non_extendable_set, view_allowed_edges, view_is_matchable, view_is_matching_covered,
    ExtendabilityFailure,
};

/// Largest graph for which [`strongly_coverable_by_cuts`] enumerates cuts.
pub const CUT_VERTEX_LIMIT: usize = 20;

/// An edge cut splitting a bipartite graph into two connected balanced sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedCut {
    pub cut_edges: Vec<EdgeId>,
    pub side_one: Vec<VertexId>,
    pub side_two: Vec<VertexId>,
    /// Edges from `A ∩ side_one` to `B ∩ side_two`.
    pub a1b2_count: usize,
    /// Edges from `B ∩ side_one` to `A ∩ side_two`.
    pub b1a2_count: usize,
}

fn require_matching_covered(g: &Graph) -> Result<()> {
    if view_is_matching_covered(&g.view()) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

/// Edges whose deletion leaves the graph matching-covered.
pub fn removable_edges(g: &Graph) -> Result<EdgeSet> {
    require_matching_covered(g)?;
    let mut out = g.empty_edge_set();
    let mut view = g.view();
    for e in 0..g.edge_count() {
        view.remove_edge(e);
        if view_is_matching_covered(&view) {
            out.insert(e);
        }
        view.restore_edge(e);
    }
    Ok(out)
}

pub fn is_strongly_coverable(g: &Graph) -> Result<bool> {
    Ok(removable_edges(g)?.len() == g.edge_count())
}

fn balanced_cut(
    g: &Graph,
    sides: &[Side],
    cut_edges: Vec<EdgeId>,
    side_one: Vec<VertexId>,
) -> BalancedCut {
    let mut inside = vec![false; g.vertex_count()];
    for &v in &side_one {
        inside[v] = true;
    }
    let side_two = g.vertices().filter(|&v| !inside[v]).collect();
    let (mut a1b2, mut b1a2) = (0, 0);
    for &e in &cut_edges {
        let (u, v) = g.endpoints(e);
        let one = if inside[u] { u } else { v };
        match sides[one] {
            Side::A => a1b2 += 1,
            Side::B => b1a2 += 1,
        }
    }
    BalancedCut {
        cut_edges,
        side_one,
        side_two,
        a1b2_count: a1b2,
        b1a2_count: b1a2,
    }
}

fn is_balanced(sides: &[Side], vs: &[VertexId]) -> bool {
    let a = vs.iter().filter(|&&v| sides[v] == Side::A).count();
    2 * a == vs.len()
}

/// Every pair of edges whose removal leaves exactly two components, both
/// balanced. Ordered by edge pair.
pub fn balanced_two_cuts(g: &Graph) -> Result<Vec<BalancedCut>> {
    let sides = bipartite_sides(g)?;
    let mut view = g.view();
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        view.remove_edge(e);
        for f in e + 1..g.edge_count() {
            view.remove_edge(f);
            let comps = view.components();
            if comps.len() == 2 && comps.iter().all(|c| is_balanced(&sides, c)) {
                out.push(balanced_cut(g, &sides, vec![e, f], comps[0].clone()));
            }
            view.restore_edge(f);
        }
        view.restore_edge(e);
    }
    Ok(out)
}

/// Structural test for an equivalent class in a matching-covered bipartite
/// graph: a balanced 2-edge-cut exists. Returns the first such cut.
pub fn has_equivalent_class_bipartite(g: &Graph) -> Result<(bool, Option<BalancedCut>)> {
    bipartite_sides(g)?;
    require_matching_covered(g)?;
    let first = balanced_two_cuts(g)?.into_iter().next();
    Ok((first.is_some(), first))
}

/// Cut test for strong coverability of a matching-covered bipartite graph:
/// every edge cut with two connected balanced sides has at least two edges
/// in each direction. Returns the first violating cut, scanning the side
/// containing vertex 0 in increasing bitmask order.
pub fn strongly_coverable_by_cuts(g: &Graph) -> Result<(bool, Option<BalancedCut>)> {
    let sides = bipartite_sides(g)?;
    require_matching_covered(g)?;
    let n = g.vertex_count();
    if n > CUT_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            limit: CUT_VERTEX_LIMIT,
            got: n,
        });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    let a_mask: u32 = g
        .vertices()
        .filter(|&v| sides[v] == Side::A)
        .fold(0, |m, v| m | 1 << v);
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let connected = |set: u32| {
        let mut reached = set & set.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & set & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached == set
    };
    let balanced = |set: u32| 2 * (set & a_mask).count_ones() == set.count_ones();
    // Side one always holds vertex 0; iterate over the other n-1 bits.
    for rest in 0..(1u32 << (n - 1)) - 1 {
        let one = 1 | rest << 1;
        let two = full & !one;
        if !balanced(one) || !connected(one) || !connected(two) {
            continue;
        }
        let (mut a1b2, mut b1a2) = (0, 0);
        for &(u, v) in g.edges() {
            let (x, y) = if one >> u & 1 == 1 { (u, v) } else { (v, u) };
            if one >> x & 1 == 1 && two >> y & 1 == 1 {
                if sides[x] == Side::A {
                    a1b2 += 1;
                } else {
                    b1a2 += 1;
                }
            }
        }
        if a1b2 < 2 || b1a2 < 2 {
            let side_one: Vec<VertexId> = (0..n).filter(|&v| one >> v & 1 == 1).collect();
            let cut: Vec<EdgeId> = (0..g.edge_count())
                .filter(|&e| {
                    let (u, v) = g.endpoints(e);
                    (one >> u & 1) != (one >> v & 1)
                })
                .collect();
            return Ok((false, Some(balanced_cut(g, &sides, cut, side_one))));
        }
    }
    Ok((true, None))
}

/// 3-connected, and removing any two vertices leaves a matchable graph.
pub fn is_brick(g: &Graph) -> Result<bool> {
    Ok(brick_failure(g)?.is_none())
}

/// Why a graph is not a brick.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BrickFailure {
    Connectivity(usize),
    UnmatchablePair(VertexId, VertexId),
}

pub fn brick_failure(g: &Graph) -> Result<Option<BrickFailure>> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(GraphError::TooFewVertices { needed: 4, got: n }.into());
    }
    let kappa = vertex_connectivity(g)?;
    if kappa < 3 {
        return Ok(Some(BrickFailure::Connectivity(kappa)));
    }
    let mut view = g.view();
    for u in 0..n {
        view.remove_vertex(u);
        for v in u + 1..n {
            view.remove_vertex(v);
            let ok = view_is_matchable(&view);
            view.restore_vertex(v);
            if !ok {
                return Ok(Some(BrickFailure::UnmatchablePair(u, v)));
            }
        }
        view.restore_vertex(u);
    }
    Ok(None)
}

/// A 2-extendable bipartite graph.
pub fn is_brace(g: &Graph) -> bool {
    crate::graph::is_bipartite(g).is_bipartite() && matches!(non_extendable_set(g, 2), Ok(None))
}

/// Named evidence behind the verdicts of a [`ClassificationReport`]. Edges
/// are given as `u-v` label pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_matching_covered: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalent_class: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_removable_edge: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_extendable: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_brick: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_cycle: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub bipartite: bool,
    pub matching_covered: bool,
    /// Matching-covered without an equivalent class.
    pub no_equivalent_class: bool,
    pub strongly_coverable: bool,
    pub two_extendable: bool,
    pub brick: bool,
    pub brace: bool,
    pub witnesses: Witnesses,
}

/// Evaluates every family predicate with a witness for each failure. Panics
/// if the implication chain 2-ext ⇒ sc ⇒ nec ⇒ mc is broken, which can only
/// be a bug.
pub fn classify(g: &Graph) -> ClassificationReport {
    let mut w = Witnesses::default();
    let bip = crate::graph::is_bipartite(g);
    if let BipartiteWitness::OddCycle(cycle) = &bip {
        w.odd_cycle = Some(g.describe_vertices(cycle));
    }

    let view = g.view();
    let matching_covered = view_is_matching_covered(&view);
    if !matching_covered {
        w.not_matching_covered = Some(if g.vertex_count() < 2 {
            "fewer than two vertices".into()
        } else if !view.is_connected() {
            "disconnected".into()
        } else {
            match view_allowed_edges(&view) {
                None => "no perfect matching".into(),
                Some(allowed) => {
                    let e = (0..g.edge_count())
                        .find(|&e| !allowed.contains(e))
                        .expect("some edge forbidden");
                    format!("edge {} lies in no perfect matching", g.edge_label(e))
                }
            }
        });
    }

    let mut no_equivalent_class = false;
    let mut strongly_coverable = false;
    if matching_covered {
        let classes = equivalent_classes(g).expect("graph is matching-covered");
        match classes.nontrivial.first() {
            Some(class) => {
                w.equivalent_class = Some(class.iter().map(|&e| g.edge_label(e)).collect());
            }
            None => no_equivalent_class = true,
        }
        let removable = removable_edges(g).expect("graph is matching-covered");
        match (0..g.edge_count()).find(|&e| !removable.contains(e)) {
            Some(e) => w.non_removable_edge = Some(g.edge_label(e)),
            None => strongly_coverable = true,
        }
    }

    let failure = non_extendable_set(g, 2).expect("k = 2 is valid");
    let two_extendable = failure.is_none();
    if let Some(f) = failure {
        w.non_extendable = Some(match f {
            ExtendabilityFailure::TooFewVertices => "fewer than 6 vertices".into(),
            ExtendabilityFailure::Disconnected => "disconnected".into(),
            ExtendabilityFailure::NotMatchable => "no perfect matching".into(),
            ExtendabilityFailure::Independent(es) => format!(
                "edges {} lie in no common perfect matching",
                es.iter()
                    .map(|&e| g.edge_label(e))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        });
    }

    let brick = match brick_failure(g) {
        Ok(None) => true,
        Ok(Some(BrickFailure::Connectivity(k))) => {
            w.not_brick = Some(format!("vertex connectivity {k}"));
            false
        }
        Ok(Some(BrickFailure::UnmatchablePair(u, v))) => {
            w.not_brick = Some(format!(
                "removing {} and {} leaves no perfect matching",
                g.label(u),
                g.label(v)
            ));
            false
        }
        Err(_) => {
            w.not_brick = Some("fewer than 4 vertices".into());
            false
        }
    };
    let brace = bip.is_bipartite() && two_extendable;

    assert!(
        !two_extendable || strongly_coverable,
        "2-extendable but not strongly coverable"
    );
    assert!(
        !strongly_coverable || no_equivalent_class,
        "strongly coverable with an equivalent class"
    );
    assert!(
        !no_equivalent_class || matching_covered,
        "family chain broken at matching-covered"
    );

    ClassificationReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        bipartite: bip.is_bipartite(),
        matching_covered,
        no_equivalent_class,
        strongly_coverable,
        two_extendable,
        brick,
        brace,
        witnesses: w,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::{edges_equivalent, MatchingTable};
    use crate::graph::fixtures::*;
    use crate::graph::Bipartition;
    use crate::matching::is_matching_covered;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn removable_examples() {
        assert!(removable_edges(&cycle(4)).unwrap().is_empty());
        assert!(removable_edges(&cycle(6)).unwrap().is_empty());
        assert_eq!(removable_edges(&complete_bipartite(3, 3)).unwrap().len(), 9);
        assert!(is_strongly_coverable(&complete_bipartite(3, 3)).unwrap());
        assert!(!is_strongly_coverable(&cycle(4)).unwrap());
        assert_eq!(removable_edges(&path4()), Err(Error::NotMatchingCovered));
    }

    #[test]
    fn balanced_cut_examples() {
        let c4 = balanced_two_cuts(&cycle(4)).unwrap();
        let pairs: Vec<_> = c4.iter().map(|c| c.cut_edges.clone()).collect();
        assert_eq!(pairs, vec![vec![0, 2], vec![1, 3]]);
        // In C6 a pair splits the cycle into even paths exactly when the
        // edges are two apart, i.e. lie in the same class.
        let c6 = balanced_two_cuts(&cycle(6)).unwrap();
        let pairs: Vec<_> = c6.iter().map(|c| c.cut_edges.clone()).collect();
        assert_eq!(
            pairs,
            vec![
                vec![0, 2],
                vec![0, 4],
                vec![1, 3],
                vec![1, 5],
                vec![2, 4],
                vec![3, 5]
            ]
        );
        assert!(balanced_two_cuts(&complete_bipartite(3, 3))
            .unwrap()
            .is_empty());
        assert_eq!(balanced_two_cuts(&complete(4)), Err(Error::NotBipartite));
        for cut in c6 {
            assert_eq!(cut.a1b2_count + cut.b1a2_count, 2);
        }
    }

    #[test]
    fn equivalent_class_examples() {
        let (yes, cut) = has_equivalent_class_bipartite(&cycle(4)).unwrap();
        assert!(yes);
        assert_eq!(cut.unwrap().cut_edges, vec![0, 2]);
        assert!(has_equivalent_class_bipartite(&cycle(6)).unwrap().0);
        assert!(
            !has_equivalent_class_bipartite(&complete_bipartite(3, 3))
                .unwrap()
                .0
        );
    }

    #[test]
    fn cut_characterization_examples() {
        let (ok, cut) = strongly_coverable_by_cuts(&cycle(4)).unwrap();
        assert!(!ok);
        let cut = cut.unwrap();
        assert!(cut.a1b2_count == 1 || cut.b1a2_count == 1);
        assert_eq!(
            strongly_coverable_by_cuts(&complete_bipartite(3, 3)).unwrap(),
            (true, None)
        );
        assert!(!strongly_coverable_by_cuts(&cycle(6)).unwrap().0);
    }

    #[test]
    fn brick_and_brace_examples() {
        assert!(is_brick(&complete(4)).unwrap());
        assert!(is_brick(&petersen()).unwrap());
        assert!(is_brick(&prism()).unwrap());
        assert!(!is_brick(&complete_bipartite(3, 3)).unwrap());
        assert!(is_brick(&complete(3)).is_err());
        assert!(is_brace(&complete_bipartite(3, 3)));
        assert!(!is_brace(&cycle(6)));
        assert!(!is_brace(&complete(4)));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&complete_bipartite(3, 3));
        assert!(
            r.matching_covered
                && r.no_equivalent_class
                && r.strongly_coverable
                && r.two_extendable
                && r.brace
        );
        let r = classify(&cycle(4));
        assert!(
            r.matching_covered
                && !r.no_equivalent_class
                && !r.strongly_coverable
                && !r.two_extendable
        );
        assert_eq!(
            r.witnesses.equivalent_class,
            Some(vec!["0-1".to_string(), "2-3".to_string()])
        );
        let r = classify(&path4());
        assert!(!r.matching_covered);
        assert!(r.witnesses.not_matching_covered.unwrap().contains("1-2"));
    }

    fn random_mc_bipartite(rng: &mut ChaCha8Rng) -> Option<Graph> {
        let half = rng.gen_range(2..=6);
        let p = rng.gen_range(0.3..0.8);
        let mut g = Graph::new(2 * half);
        for a in 0..half {
            for b in half..2 * half {
                if rng.gen_bool(p) {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        let sides = (0..2 * half)
            .map(|v| if v < half { Side::A } else { Side::B })
            .collect();
        g.set_bipartition(Bipartition::new(sides)).unwrap();
        is_matching_covered(&g).then_some(g)
    }

    fn has_bridge(g: &Graph) -> bool {
        let mut view = g.view();
        (0..g.edge_count()).any(|e| {
            view.remove_edge(e);
            let split = !view.is_connected();
            view.restore_edge(e);
            split
        })
    }

    #[test]
    fn characterizations_agree_on_random_bipartite_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut checked = 0;
        while checked < 300 {
            let Some(g) = random_mc_bipartite(&mut rng) else {
                continue;
            };
            checked += 1;
            let classes = equivalent_classes(&g).unwrap();
            let (structural, cut) = has_equivalent_class_bipartite(&g).unwrap();
            assert_eq!(structural, classes.has_nontrivial());
            if let Some(cut) = cut {
                assert!(edges_equivalent(&g, cut.cut_edges[0], cut.cut_edges[1]).unwrap());
                assert!(!has_bridge(&g));
            }
            assert_eq!(
                is_strongly_coverable(&g).unwrap(),
                strongly_coverable_by_cuts(&g).unwrap().0
            );
            if g.vertex_count() <= 10 {
                let table = MatchingTable::new(&g, None).unwrap();
                assert_eq!(table.equivalent_classes(), classes);
            }
            let r = classify(&g);
            assert!(r.matching_covered);
            assert_eq!(r.no_equivalent_class, !classes.has_nontrivial());
        }
    }

    #[test]
    fn class_edges_are_not_removable() {
        for g in [cycle(4), cycle(6), cycle(8)] {
            let removable = removable_edges(&g).unwrap();
            for class in equivalent_classes(&g).unwrap().nontrivial {
                assert!(class.iter().all(|&e| !removable.contains(e)));
            }
        }
    }
}
