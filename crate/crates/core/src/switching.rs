//! Switching operations on edge sets and switching-equivalence decisions.
//!
//! `X` is switching-equivalent to `Y` iff `X ⊕ Y = ∇U` for some vertex set
//! `U`, which is decided by 2-coloring: look for parities `s(v)` with
//! `s(u) ⊕ s(v) = [uv ∈ X ⊕ Y]` on every edge.

use std::collections::VecDeque;

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, GraphError, Result};
use crate::graph::{nabla, Graph, VertexId};

/// A vertex set `U` with `∇U` equal to the set in question.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwitchWitness {
    pub u: Vec<VertexId>,
}

impl SwitchWitness {
    pub fn validate(&self, g: &Graph, claimed: &EdgeSet) -> bool {
        nabla(g, &self.u)
            .map(|cut| &cut == claimed)
            .unwrap_or(false)
    }
}

/// A signature on `host` given by its negative edges.
#[derive(Clone, Debug)]
pub struct SignedEdgeSet<'g> {
    pub host: &'g Graph,
    pub negative: EdgeSet,
}

impl<'g> SignedEdgeSet<'g> {
    pub fn new(host: &'g Graph, negative: EdgeSet) -> Result<Self> {
        check_host(host, &negative)?;
        Ok(SignedEdgeSet { host, negative })
    }
}

fn check_host(g: &Graph, x: &EdgeSet) -> Result<()> {
    if x.universe() != g.edge_count() {
        return Err(Error::HostMismatch);
    }
    Ok(())
}

/// `E(v) ⊕ x`.
pub fn switch_at(g: &Graph, x: &EdgeSet, v: VertexId) -> Result<EdgeSet> {
    check_host(g, x)?;
    if v >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(v).into());
    }
    Ok(g.edges_at(v).symmetric_difference(x))
}

/// Some(U) with `x = ∇U` if `x` is switching-equivalent to the empty set.
/// Within each component `U` takes the smaller side, and the side without
/// the lowest vertex on a tie.
pub fn equivalent_to_empty(g: &Graph, x: &EdgeSet) -> Result<Option<SwitchWitness>> {
    check_host(g, x)?;
    let n = g.vertex_count();
    let mut parity: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if parity[root].is_some() {
            continue;
        }
        parity[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let pu = parity[u].unwrap();
            for &(w, e) in g.incident(u) {
                let want = pu ^ x.contains(e);
                match parity[w] {
                    None => {
                        parity[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(pw) if pw != want => return Ok(None),
                    _ => {}
                }
            }
        }
    }
    // ∇U = ∇(C \ U) inside each component C; keep the smaller side.
    let mut u = Vec::new();
    for comp in crate::graph::components(g) {
        let inside: Vec<VertexId> = comp
            .iter()
            .copied()
            .filter(|&v| parity[v] == Some(true))
            .collect();
        if 2 * inside.len() <= comp.len() {
            u.extend(inside);
        } else {
            u.extend(comp.iter().copied().filter(|&v| parity[v] == Some(false)));
        }
    }
    u.sort_unstable();
    Ok(Some(SwitchWitness { u }))
}

/// Some(U) with `E \ x = ∇U` if `x` is switching-equivalent to `E(G)`.
pub fn equivalent_to_full(g: &Graph, x: &EdgeSet) -> Result<Option<SwitchWitness>> {
    check_host(g, x)?;
    equivalent_to_empty(g, &x.complement())
}

/// Some(U) with `x ⊕ y = ∇U` if the two sets are switching-equivalent.
pub fn are_switching_equivalent(
    g: &Graph,
    x: &EdgeSet,
    y: &EdgeSet,
) -> Result<Option<SwitchWitness>> {
    check_host(g, x)?;
    check_host(g, y)?;
    equivalent_to_empty(g, &x.symmetric_difference(y))
}

/// Balanced iff every cycle has an even number of negative edges.
pub fn is_balanced(s: &SignedEdgeSet<'_>) -> bool {
    equivalent_to_empty(s.host, &s.negative)
        .expect("SignedEdgeSet checks its host")
        .is_some()
}
