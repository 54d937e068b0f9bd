//! Feasible edge sets, edge equivalence and equivalent classes.
//!
//! `X` is feasible when two perfect matchings meet it with different
//! parities. Parity spectra come from exact enumeration; a truncated
//! enumeration is reported as an error rather than a verdict. Edge
//! equivalence is decided with matchability queries instead.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, GraphView};
use crate::matching::enumerate::visit_perfect_matchings;
use crate::matching::{
    enumerate_perfect_matchings, view_is_matching_covered, Matcher, PerfectMatching,
    DEFAULT_MATCHING_LIMIT, UNMATCHED,
};

/// Parities of `|M ∩ X|` over the perfect matchings seen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParitySpectrum {
    pub even: bool,
    pub odd: bool,
    /// False if the enumeration stopped at its limit with only one parity
    /// seen; the spectrum is then a lower bound.
    pub complete: bool,
}

impl ParitySpectrum {
    pub fn is_feasible(&self) -> Result<bool> {
        if self.even && self.odd {
            return Ok(true);
        }
        if !self.complete {
            return Err(Error::Truncated {
                limit: DEFAULT_MATCHING_LIMIT,
            });
        }
        Ok(false)
    }
}

/// Spectrum of `|M ∩ x| mod 2`, stopping as soon as both parities occur.
pub fn parity_spectrum(g: &Graph, x: &EdgeSet, limit: Option<usize>) -> Result<ParitySpectrum> {
    if x.universe() != g.edge_count() {
        return Err(Error::HostMismatch);
    }
    let limit = limit.unwrap_or(DEFAULT_MATCHING_LIMIT);
    let mut spectrum = ParitySpectrum {
        even: false,
        odd: false,
        complete: true,
    };
    let mut seen = 0usize;
    visit_perfect_matchings(&g.view(), |edges| {
        if seen == limit {
            spectrum.complete = false;
            return ControlFlow::Break(());
        }
        seen += 1;
        let hits = edges.iter().filter(|&&e| x.contains(e)).count();
        if hits % 2 == 0 {
            spectrum.even = true;
        } else {
            spectrum.odd = true;
        }
        if spectrum.even && spectrum.odd {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if seen == 0 {
        return Err(Error::NotMatchable);
    }
    Ok(spectrum)
}

/// Feasibility of `x` in a matching-covered graph.
pub fn is_feasible(g: &Graph, x: &EdgeSet) -> Result<bool> {
    require_matching_covered(g)?;
    let spectrum = parity_spectrum(g, x, None)?;
    spectrum.is_feasible()
}

fn require_matching_covered(g: &Graph) -> Result<()> {
    if view_is_matching_covered(&g.view()) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

/// Answers "is there a perfect matching containing `e` but not `f`?" with
/// one augmentation per query, starting from a fixed perfect matching.
pub(crate) struct SeparationOracle<'g> {
    graph: &'g Graph,
    matcher: Matcher,
    base: Vec<usize>,
    scratch: GraphView<'g>,
}

impl<'g> SeparationOracle<'g> {
    pub(crate) fn new(g: &'g Graph) -> Result<Self> {
        let matcher = Matcher::new(g);
        let base = matcher.perfect(&g.view()).ok_or(Error::NotMatchable)?;
        Ok(SeparationOracle {
            graph: g,
            matcher,
            base,
            scratch: g.view(),
        })
    }

    pub(crate) fn contains_avoiding(&mut self, e: EdgeId, f: EdgeId) -> bool {
        let (u, v) = self.graph.endpoints(e);
        let (a, b) = self.graph.endpoints(f);
        if e == f {
            return false;
        }
        if [u, v].contains(&a) || [u, v].contains(&b) {
            // f shares an endpoint with e: any matching through e avoids f.
            let mut mate = self.base.clone();
            return self.force(&mut mate, u, v);
        }
        let mut mate = self.base.clone();
        if mate[a] == b {
            mate[a] = UNMATCHED;
            mate[b] = UNMATCHED;
        }
        self.scratch.remove_edge(f);
        let ok = self.force(&mut mate, u, v);
        self.scratch.restore_edge(f);
        ok
    }

    fn force(&mut self, mate: &mut [usize], u: usize, v: usize) -> bool {
        for x in [u, v] {
            let y = mate[x];
            if y != UNMATCHED {
                mate[y] = UNMATCHED;
                mate[x] = UNMATCHED;
            }
        }
        self.scratch.remove_vertex(u);
        self.scratch.remove_vertex(v);
        let ok = self.matcher.perfect_from(&self.scratch, mate);
        self.scratch.restore_vertex(u);
        self.scratch.restore_vertex(v);
        ok
    }

    pub(crate) fn equivalent(&mut self, e: EdgeId, f: EdgeId) -> bool {
        e == f || (!self.contains_avoiding(e, f) && !self.contains_avoiding(f, e))
    }
}

/// True iff every perfect matching contains both or neither of `e`, `f`.
pub fn edges_equivalent(g: &Graph, e: EdgeId, f: EdgeId) -> Result<bool> {
    require_matching_covered(g)?;
    for id in [e, f] {
        if id >= g.edge_count() {
            return Err(Error::InvalidParameter(format!(
                "edge id {id} out of range"
            )));
        }
    }
    Ok(SeparationOracle::new(g)?.equivalent(e, f))
}

/// The partition of E(G) into maximal classes of mutually equivalent edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceClasses {
    /// All classes, ordered by smallest edge id, each sorted.
    pub classes: Vec<Vec<EdgeId>>,
    /// The classes with at least two edges.
    pub nontrivial: Vec<Vec<EdgeId>>,
}

impl EquivalenceClasses {
    fn from_classes(classes: Vec<Vec<EdgeId>>) -> Self {
        let nontrivial = classes.iter().filter(|c| c.len() >= 2).cloned().collect();
        EquivalenceClasses {
            classes,
            nontrivial,
        }
    }

    pub fn has_nontrivial(&self) -> bool {
        !self.nontrivial.is_empty()
    }
}

pub fn equivalent_classes(g: &Graph) -> Result<EquivalenceClasses> {
    require_matching_covered(g)?;
    let mut oracle = SeparationOracle::new(g)?;
    let mut classes: Vec<Vec<EdgeId>> = Vec::new();
    for e in 0..g.edge_count() {
        match classes.iter_mut().find(|c| oracle.equivalent(c[0], e)) {
            Some(class) => class.push(e),
            None => classes.push(vec![e]),
        }
    }
    Ok(EquivalenceClasses::from_classes(classes))
}

/// Every perfect matching of a graph held in memory, for answering many
/// parity and equivalence questions about the same graph.
#[derive(Clone, Debug)]
pub struct MatchingTable {
    matchings: Vec<PerfectMatching>,
    edge_count: usize,
}

impl MatchingTable {
    /// Fails with [`Error::Truncated`] if the graph has more than `limit`
    /// perfect matchings.
    pub fn new(g: &Graph, limit: Option<usize>) -> Result<Self> {
        let all = enumerate_perfect_matchings(g, limit);
        if all.truncated {
            return Err(Error::Truncated {
                limit: limit.unwrap_or(DEFAULT_MATCHING_LIMIT),
            });
        }
        Ok(MatchingTable {
            matchings: all.matchings,
            edge_count: g.edge_count(),
        })
    }

    pub fn matchings(&self) -> &[PerfectMatching] {
        &self.matchings
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn parity_spectrum(&self, x: &EdgeSet) -> ParitySpectrum {
        let mut s = ParitySpectrum {
            even: false,
            odd: false,
            complete: true,
        };
        for m in &self.matchings {
            if m.edges().intersection_count(x) % 2 == 0 {
                s.even = true;
            } else {
                s.odd = true;
            }
        }
        s
    }

    pub fn is_feasible(&self, x: &EdgeSet) -> bool {
        let s = self.parity_spectrum(x);
        s.even && s.odd
    }

    pub fn edges_equivalent(&self, e: EdgeId, f: EdgeId) -> bool {
        self.matchings
            .iter()
            .all(|m| m.contains(e) == m.contains(f))
    }

    /// Classes by grouping edges with identical membership vectors.
    pub fn equivalent_classes(&self) -> EquivalenceClasses {
        let mut classes: Vec<Vec<EdgeId>> = Vec::new();
        for e in 0..self.edge_count {
            match classes.iter_mut().find(|c| self.edges_equivalent(c[0], e)) {
                Some(c) => c.push(e),
                None => classes.push(vec![e]),
            }
        }
        EquivalenceClasses::from_classes(classes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::nabla;
    use crate::matching::is_matching_covered;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spectrum_examples() {
        let c4 = cycle(4);
        let s = parity_spectrum(&c4, &c4.empty_edge_set(), None).unwrap();
        assert!(s.even && !s.odd && s.complete);
        let s = parity_spectrum(&c4, &EdgeSet::from_ids(4, [0]), None).unwrap();
        assert!(s.even && s.odd);
        let s = parity_spectrum(&c4, &c4.edges_at(1), None).unwrap();
        assert!(!s.even && s.odd);
        assert_eq!(
            parity_spectrum(&cycle(5), &EdgeSet::empty(5), None),
            Err(Error::NotMatchable)
        );
    }

    #[test]
    fn truncated_spectrum_is_an_error() {
        let k6 = complete(6);
        let s = parity_spectrum(&k6, &k6.empty_edge_set(), Some(3)).unwrap();
        assert!(!s.complete);
        assert!(matches!(s.is_feasible(), Err(Error::Truncated { .. })));
    }

    #[test]
    fn feasibility_examples() {
        let pet = petersen();
        for e in 0..pet.edge_count() {
            assert!(is_feasible(&pet, &EdgeSet::from_ids(15, [e])).unwrap());
        }
        // Edge cuts are never feasible.
        let cut = nabla(&pet, &[0, 1, 2]).unwrap();
        assert!(!is_feasible(&pet, &cut).unwrap());
        assert_eq!(
            is_feasible(&path4(), &EdgeSet::empty(3)),
            Err(Error::NotMatchingCovered)
        );
    }

    #[test]
    fn equivalence_examples() {
        let c4 = cycle(4);
        assert!(edges_equivalent(&c4, 0, 2).unwrap());
        assert!(!edges_equivalent(&c4, 0, 1).unwrap());
        let k4 = complete(4);
        // K4 edge 0 is {0,1}, edge 5 is {2,3}.
        assert!(edges_equivalent(&k4, 0, 5).unwrap());
        assert!(!edges_equivalent(&k4, 0, 1).unwrap());
    }

    #[test]
    fn class_examples() {
        let k33 = complete_bipartite(3, 3);
        assert!(!equivalent_classes(&k33).unwrap().has_nontrivial());
        let c6 = equivalent_classes(&cycle(6)).unwrap();
        assert_eq!(c6.nontrivial, vec![vec![0, 2, 4], vec![1, 3, 5]]);
        let c4 = equivalent_classes(&cycle(4)).unwrap();
        assert_eq!(c4.classes, vec![vec![0, 2], vec![1, 3]]);
    }

    fn random_matching_covered(rng: &mut ChaCha8Rng) -> Option<Graph> {
        let n = 2 * rng.gen_range(2..=6);
        let p = rng.gen_range(0.25..0.7);
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        is_matching_covered(&g).then_some(g)
    }

    #[test]
    fn classes_agree_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut checked = 0;
        while checked < 150 {
            let Some(g) = random_matching_covered(&mut rng) else {
                continue;
            };
            checked += 1;
            let table = MatchingTable::new(&g, None).unwrap();
            let classes = equivalent_classes(&g).unwrap();
            assert_eq!(classes, table.equivalent_classes());
            for e in 0..g.edge_count() {
                for f in 0..g.edge_count() {
                    assert_eq!(
                        edges_equivalent(&g, e, f).unwrap(),
                        table.edges_equivalent(e, f)
                    );
                }
            }
        }
    }

    #[test]
    fn spectrum_matches_table() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..100 {
            let Some(g) = random_matching_covered(&mut rng) else {
                continue;
            };
            let table = MatchingTable::new(&g, None).unwrap();
            for _ in 0..20 {
                let x = EdgeSet::from_ids(
                    g.edge_count(),
                    (0..g.edge_count()).filter(|_| rng.gen_bool(0.4)),
                );
                assert_eq!(is_feasible(&g, &x).unwrap(), table.is_feasible(&x));
            }
        }
    }

    #[test]
    fn class_feasibility_follows_class_size_parity() {
        // A class K meets each matching in 0 or |K| edges, so it is
        // non-feasible exactly when |K| is even.
        for g in [cycle(4), cycle(6), cycle(8), complete_bipartite(2, 2)] {
            for class in equivalent_classes(&g).unwrap().nontrivial {
                let x = EdgeSet::from_ids(g.edge_count(), class.iter().copied());
                assert_eq!(
                    is_feasible(&g, &x).unwrap(),
                    class.len() % 2 == 1,
                    "{class:?}"
                );
            }
        }
    }
}
