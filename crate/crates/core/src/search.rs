//! Exhaustive and sampled searches: non-feasible edge sets outside the
//! switching classes of the empty and full sets, strictness witnesses for
//! the family chain, and an exploratory hunt for large equivalent classes
//! in well-connected graphs.

use rand::Rng;
use serde::Serialize;

use crate::corpus::{all_graphs, for_each_row_multiset, random_matching_covered};
use crate::error::{Error, Result};
use crate::feasibility::equivalent_classes;
use crate::graph::{is_connected, vertex_connectivity, Bipartition, EdgeId, Graph, Side};
use crate::matching::{enumerate_perfect_matchings, is_k_extendable, is_matching_covered};
use crate::structure::{has_equivalent_class_bipartite, is_strongly_coverable};
use crate::switching::{equivalent_to_empty, equivalent_to_full};
use crate::EdgeSet;

/// Largest edge count accepted by [`scan_edge_subsets`].
pub const SUBSET_SCAN_EDGE_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetScan {
    pub edge_count: usize,
    pub matchings: usize,
    pub subsets: u64,
    pub non_feasible: u64,
    /// Non-feasible and switching-equivalent to neither `∅` nor `E(G)`.
    pub exceptional: u64,
    /// The exceptional set with the smallest bitmask.
    pub first_exceptional: Option<Vec<EdgeId>>,
}

/// Classifies every edge subset of `g` by feasibility and by switching
/// class. Feasibility is decided by the parities of `|M ∩ X|` over all
/// perfect matchings, held as bitmasks.
pub fn scan_edge_subsets(g: &Graph) -> Result<SubsetScan> {
    let m = g.edge_count();
    if m > SUBSET_SCAN_EDGE_LIMIT {
        return Err(Error::TooLarge {
            limit: SUBSET_SCAN_EDGE_LIMIT,
            got: m,
        });
    }
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let all = enumerate_perfect_matchings(g, None);
    let masks: Vec<u32> = all
        .matchings
        .iter()
        .map(|pm| pm.edges().iter().fold(0u32, |acc, e| acc | 1 << e))
        .collect();
    let mut scan = SubsetScan {
        edge_count: m,
        matchings: masks.len(),
        subsets: 1 << m,
        non_feasible: 0,
        exceptional: 0,
        first_exceptional: None,
    };
    for x in 0u32..(1u32 << m) {
        let parity = (masks[0] & x).count_ones() & 1;
        if masks.iter().any(|&pm| (pm & x).count_ones() & 1 != parity) {
            continue;
        }
        scan.non_feasible += 1;
        let set = EdgeSet::from_ids(m, (0..m).filter(|&e| x >> e & 1 == 1));
        if equivalent_to_empty(g, &set)?.is_none() && equivalent_to_full(g, &set)?.is_none() {
            scan.exceptional += 1;
            if scan.first_exceptional.is_none() {
                scan.first_exceptional = Some(set.to_vec());
            }
        }
    }
    Ok(scan)
}

fn bipartite_from_rows(rows: &[u32]) -> Graph {
    let h = rows.len();
    let mut g = Graph::new(2 * h);
    for (a, &row) in rows.iter().enumerate() {
        for b in 0..h {
            if row >> b & 1 == 1 {
                g.add_edge(a, h + b).expect("simple biadjacency");
            }
        }
    }
    let sides = (0..2 * h)
        .map(|v| if v < h { Side::A } else { Side::B })
        .collect();
    g.set_bipartition(Bipartition::new(sides))
        .expect("edges cross");
    g
}

/// Searches bipartite graphs with `h = 3..=max_side` vertices per side for a
/// 3-connected matching-covered graph that has no equivalent class but is
/// not strongly coverable. Returns the first hit and the number of
/// candidates examined.
pub fn find_nec_not_sc(max_side: usize) -> Result<(Option<Graph>, u64)> {
    if max_side > 8 {
        return Err(Error::TooLarge {
            limit: 8,
            got: max_side,
        });
    }
    let mut examined = 0u64;
    for h in 3..=max_side {
        let values: Vec<u32> = (1u32..1 << h).filter(|r| r.count_ones() >= 3).collect();
        let mut found = None;
        let mut failure = None;
        for_each_row_multiset(h, &values, |rows| {
            let columns_ok = (0..h).all(|b| rows.iter().filter(|&&r| r >> b & 1 == 1).count() >= 3);
            if !columns_ok {
                return true;
            }
            examined += 1;
            let g = bipartite_from_rows(rows);
            match nec_not_sc(&g) {
                Ok(true) => {
                    found = Some(g);
                    false
                }
                Ok(false) => true,
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if found.is_some() {
            return Ok((found, examined));
        }
    }
    Ok((None, examined))
}

fn nec_not_sc(g: &Graph) -> Result<bool> {
    if !is_matching_covered(g) || is_strongly_coverable(g)? {
        return Ok(false);
    }
    if vertex_connectivity(g)? < 3 {
        return Ok(false);
    }
    Ok(!has_equivalent_class_bipartite(g)?.0)
}

/// Smallest graph (by order, then canonical order) that is matching-covered
/// but has an equivalent class.
pub fn find_mc_not_nec(max_order: usize) -> Result<Option<Graph>> {
    for n in (2..=max_order).step_by(2) {
        for g in all_graphs(n)? {
            if is_matching_covered(&g) && equivalent_classes(&g)?.has_nontrivial() {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// Smallest graph on at least six vertices that is strongly coverable but
/// not 2-extendable. Smaller graphs fail 2-extendability by the order bound
/// alone, which would make the witness vacuous.
pub fn find_sc_not_two_ext(max_order: usize) -> Result<Option<Graph>> {
    for n in (6..=max_order).step_by(2) {
        for g in all_graphs(n)? {
            if is_connected(&g)
                && is_matching_covered(&g)
                && is_strongly_coverable(&g)?
                && !is_k_extendable(&g, 2)?
            {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct LargeClassSearch {
    pub samples: usize,
    pub qualifying: usize,
    pub best_class_size: usize,
    pub best_graph: Option<String>,
    pub best_class: Vec<EdgeId>,
}

/// Samples unions of `r` random perfect matchings on `n` vertices, keeps
/// those with vertex connectivity at least `min_connectivity`, and records
/// the largest equivalent class seen. Exploratory, with no expected answer.
pub fn large_class_search<R: Rng>(
    rng: &mut R,
    n: usize,
    r: usize,
    min_connectivity: usize,
    samples: usize,
) -> Result<LargeClassSearch> {
    if n % 2 == 1 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "order {n} must be even and at least 2"
        )));
    }
    let mut out = LargeClassSearch {
        samples,
        qualifying: 0,
        best_class_size: 1,
        best_graph: None,
        best_class: Vec::new(),
    };
    for _ in 0..samples {
        let g = random_matching_covered(rng, n, r);
        if vertex_connectivity(&g)? < min_connectivity {
            continue;
        }
        out.qualifying += 1;
        let classes = equivalent_classes(&g)?;
        if let Some(c) = classes.nontrivial.iter().max_by_key(|c| c.len()) {
            if c.len() > out.best_class_size {
                out.best_class_size = c.len();
                out.best_graph = Some(crate::graph::serialize_graph(&g));
                out.best_class = c.clone();
            }
        }
    }
    Ok(out)
}
