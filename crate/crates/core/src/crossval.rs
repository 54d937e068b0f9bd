//! Cross-validation suites: each runs two independent procedures that
//! should agree over an exhaustive or seeded corpus and reports every
//! disagreement with the offending graph serialized.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corpus::{
    brick_corpus, matching_covered_bipartite, random_bipartite_matching_covered,
    random_matchable_bipartite, random_regular_bipartite,
};
use crate::dm::{
    augment_to_matching_covered, dm_decomposition, dm_digraph, min_supergraph_increment,
    sources_and_sinks,
};
use crate::error::{Error, Result};
use crate::feasibility::{equivalent_classes, MatchingTable};
use crate::graph::{is_bipartite, is_connected, serialize_graph, BipartiteWitness, Graph};
use crate::matching::{is_matching_covered, DEFAULT_MATCHING_LIMIT};
use crate::structure::{
    has_equivalent_class_bipartite, is_strongly_coverable, strongly_coverable_by_cuts,
};
use crate::switching::equivalent_to_empty;
use crate::EdgeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Equivalent class exists iff a balanced 2-edge-cut exists (bipartite).
    Main2,
    /// Strong coverability by definition iff by the cut characterization.
    Main3,
    /// Non-feasible iff switching-equivalent to the empty set (regular
    /// bipartite graphs).
    Lr,
    /// Nontrivial classes of bricks have two edges and bipartite complement.
    Lovasz,
    /// Augmentation reaches a matching-covered graph with `ell` new edges.
    Augmentation,
    /// The part digraph of every bipartite corpus graph is acyclic.
    Acyclic,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Main2,
        Suite::Main3,
        Suite::Lr,
        Suite::Lovasz,
        Suite::Augmentation,
        Suite::Acyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main2 => "main2",
            Suite::Main3 => "main3",
            Suite::Lr => "lr",
            Suite::Lovasz => "lovasz",
            Suite::Augmentation => "augmentation",
            Suite::Acyclic => "acyclic",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossvalConfig {
    /// Largest order of exhaustively generated graphs.
    pub bound: usize,
    /// Number of seeded random instances.
    pub samples: usize,
    /// Largest order of random instances.
    pub random_bound: usize,
    /// Edge subsets per graph in the `lr` suite.
    pub subsets: usize,
    pub seed: u64,
}

impl Default for CrossvalConfig {
    fn default() -> Self {
        CrossvalConfig {
            bound: 10,
            samples: 500,
            random_bound: 14,
            subsets: 100,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub instance: String,
    pub detail: String,
    pub graph: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossvalReport {
    pub suite: Suite,
    pub instances: usize,
    /// Individual comparisons (one per instance, or per subset for `lr`).
    pub comparisons: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    /// Observations that are logged but not checked.
    pub notes: Vec<String>,
}

impl CrossvalReport {
    fn new(suite: Suite) -> Self {
        CrossvalReport {
            suite,
            instances: 0,
            comparisons: 0,
            agreements: 0,
            disagreements: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty() && self.agreements == self.comparisons
    }

    fn record(&mut self, ok: bool, instance: &str, g: &Graph, detail: impl FnOnce() -> String) {
        self.comparisons += 1;
        if ok {
            self.agreements += 1;
        } else {
            self.disagreements.push(Disagreement {
                instance: instance.to_string(),
                detail: detail(),
                graph: serialize_graph(g),
            });
        }
    }
}

/// Exhaustive matching-covered bipartite graphs up to `bound` vertices
/// followed by `samples` random ones with at most `random_bound` vertices.
pub fn bipartite_corpus(cfg: &CrossvalConfig) -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> = matching_covered_bipartite(cfg.bound)?
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("exhaustive#{i}"), g))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let max_h = (cfg.random_bound / 2).max(2);
    for i in 0..cfg.samples {
        let h = rng.gen_range(2..=max_h);
        let r = rng.gen_range(2..=3.min(h));
        out.push((
            format!("random#{i}"),
            random_bipartite_matching_covered(&mut rng, h, r),
        ));
    }
    Ok(out)
}

/// Seeded connected matchable bipartite graphs that are not
/// matching-covered, with at most `random_bound` vertices.
pub fn non_covered_corpus(cfg: &CrossvalConfig) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let max_h = (cfg.random_bound / 2).max(2);
    let mut out = Vec::new();
    while out.len() < cfg.samples {
        let h = rng.gen_range(2..=max_h);
        let p = rng.gen_range(0.15..0.5);
        let g = random_matchable_bipartite(&mut rng, h, p);
        if !is_matching_covered(&g) {
            out.push((format!("random#{}", out.len()), g));
        }
    }
    out
}

pub fn run(suite: Suite, cfg: &CrossvalConfig) -> Result<CrossvalReport> {
    match suite {
        Suite::Main2 => run_main2(cfg),
        Suite::Main3 => run_main3(cfg),
        Suite::Lr => run_lr(cfg),
        Suite::Lovasz => run_lovasz(cfg),
        Suite::Augmentation => run_augmentation(cfg),
        Suite::Acyclic => run_acyclic(cfg),
    }
}

fn run_main2(cfg: &CrossvalConfig) -> Result<CrossvalReport> {
    let mut rep = CrossvalReport::new(Suite::Main2);
    let mut with_class = 0;
    for (name, g) in bipartite_corpus(cfg)? {
        rep.instances += 1;
        let table = MatchingTable::new(&g, Some(DEFAULT_MATCHING_LIMIT))?;
        let by_matchings = table.equivalent_classes().has_nontrivial();
        let (by_cuts, cut) = has_equivalent_class_bipartite(&g)?;
        with_class += usize::from(by_matchings);
        rep.record(by_matchings == by_cuts, &name, &g, || {
            format!("enumeration says {by_matchings}, balanced cuts say {by_cuts} ({cut:?})")
        });
    }
    rep.notes
        .push(format!("{with_class} instances have an equivalent class"));
    Ok(rep)
}

fn run_main3(cfg: &CrossvalConfig) -> Result<CrossvalReport> {
    let mut rep = CrossvalReport::new(Suite::Main3);
    let mut coverable = 0;
    for (name, g) in bipartite_corpus(cfg)? {
        rep.instances += 1;
        let by_definition = is_strongly_coverable(&g)?;
        let (by_cuts, cut) = strongly_coverable_by_cuts(&g)?;
        coverable += usize::from(by_definition);
        rep.record(by_definition == by_cuts, &name, &g, || {
            format!("definition says {by_definition}, cuts say {by_cuts} ({cut:?})")
        });
    }
    rep.notes
        .push(format!("{coverable} instances are strongly coverable"));
    Ok(rep)
}

/// `lr` uses `samples` regular bipartite graphs of degree 3 or 4 and
/// `subsets` uniformly random edge subsets of each.
fn run_lr(cfg: &CrossvalConfig) -> Result<CrossvalReport> {
    let mut rep = CrossvalReport::new(Suite::Lr);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x1a);
    let max_h = cfg.random_bound / 2;
    if max_h < 3 {
        return Err(Error::InvalidParameter(
            "lr needs a random bound of at least 6".into(),
        ));
    }
    let mut non_feasible = 0;
    for i in 0..cfg.samples {
        let d = if max_h >= 4 { rng.gen_range(3..=4) } else { 3 };
        let h = rng.gen_range(d..=max_h);
        let g = random_regular_bipartite(&mut rng, h, d);
        rep.instances += 1;
        let table = MatchingTable::new(&g, Some(DEFAULT_MATCHING_LIMIT))?;
        for j in 0..cfg.subsets {
            let x = EdgeSet::from_ids(
                g.edge_count(),
                (0..g.edge_count()).filter(|_| rng.gen_bool(0.5)),
            );
            let feasible = table.is_feasible(&x);
            let trivial = equivalent_to_empty(&g, &x)?.is_some();
            non_feasible += usize::from(!feasible);
            rep.record(
                feasible != trivial,
                &format!("regular#{i}/subset#{j}"),
                &g,
                || {
                    format!(
                        "X = {:?}: feasible {feasible}, equivalent to empty {trivial}",
                        x.to_vec()
                    )
                },
            );
        }
    }
    rep.notes
        .push(format!("{non_feasible} sampled subsets are non-feasible"));
    Ok(rep)
}

/// `lovasz` uses the brick corpus with `samples` extra random bricks on 10
/// vertices when `bound` is at least 10.
fn run_lovasz(cfg: &CrossvalConfig) -> Result<CrossvalReport> {
    let mut rep = CrossvalReport::new(Suite::Lovasz);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xb1c);
    let extra = if cfg.bound >= 10 { cfg.samples } else { 0 };
    let mut classes_seen = 0;
    for (name, g) in brick_corpus(&mut rng, extra)? {
        if g.vertex_count() > cfg.bound.max(4)
            && !matches!(name.as_str(), "K4" | "prism" | "petersen")
        {
            continue;
        }
        rep.instances += 1;
        let classes = equivalent_classes(&g)?;
        let mut bad = Vec::new();
        for class in &classes.nontrivial {
            classes_seen += 1;
            let rest = g.without_edges(&EdgeSet::from_ids(g.edge_count(), class.iter().copied()));
            let bipartite = matches!(is_bipartite(&rest), BipartiteWitness::Coloring(_));
            if class.len() != 2 || !bipartite {
                bad.push(format!(
                    "class {class:?}: size {}, complement bipartite {bipartite}",
                    class.len()
                ));
            }
        }
        rep.record(bad.is_empty(), &name, &g, || bad.join("; "));
    }
    rep.notes
        .push(format!("{classes_seen} nontrivial classes examined"));
    Ok(rep)
}

/// `augmentation` uses `samples` seeded matchable bipartite graphs that are
/// not matching-covered, with at most `random_bound` vertices.
fn run_augmentation(cfg: &CrossvalConfig) -> Result<CrossvalReport> {
    let mut rep = CrossvalReport::new(Suite::Augmentation);
    let mut gaps = 0;
    let mut source_sink_bound_misses = 0;
    for (name, g) in non_covered_corpus(cfg) {
        rep.instances += 1;
        let (h, plan) = augment_to_matching_covered(&g)?;
        let added = h.edge_count() - g.edge_count();
        let best = min_supergraph_increment(&g, plan.ell)?;
        let ok = plan.exact
            && is_matching_covered(&h)
            && added == plan.ell
            && best.is_some_and(|b| b <= plan.ell);
        rep.record(ok, &name, &g, || {
            format!(
                "exact {}, added {added}, ell {}, brute-force minimum {best:?}",
                plan.exact, plan.ell
            )
        });
        if let Some(b) = best {
            if b < plan.ell {
                gaps += 1;
                rep.notes.push(format!(
                    "{name}: brute force adds {b} edges, ell = {}",
                    plan.ell
                ));
            }
        }
        let d = dm_digraph(&g, &dm_decomposition(&g)?)?;
        let (sources, sinks) = sources_and_sinks(&d);
        if plan.ell != sources.len().max(sinks.len()) {
            source_sink_bound_misses += 1;
        }
    }
    rep.notes
        .push(format!("{gaps} instances where brute force beats ell"));
    rep.notes.push(format!(
        "{source_sink_bound_misses} instances where ell differs from max(sources, sinks)"
    ));
    Ok(rep)
}

/// `acyclic` builds the part digraph for the main2 corpus and the
/// augmentation corpus.
fn run_acyclic(cfg: &CrossvalConfig) -> Result<CrossvalReport> {
    let corpus = bipartite_corpus(cfg)?.into_iter().chain(
        non_covered_corpus(cfg)
            .into_iter()
            .map(|(n, g)| (format!("non-covered/{n}"), g)),
    );
    acyclic_report(corpus)
}

/// Checks that the part digraph of every connected matchable bipartite
/// graph in `corpus` is acyclic.
pub fn acyclic_report(corpus: impl IntoIterator<Item = (String, Graph)>) -> Result<CrossvalReport> {
    let mut rep = CrossvalReport::new(Suite::Acyclic);
    let mut max_parts = 0;
    for (name, g) in corpus {
        if !is_connected(&g) {
            continue;
        }
        rep.instances += 1;
        let d = dm_decomposition(&g)?;
        max_parts = max_parts.max(d.len());
        let verdict = dm_digraph(&g, &d);
        let ok = match &verdict {
            Ok(dig) => dig.is_acyclic(),
            Err(Error::Cyclic) => false,
            Err(e) => return Err(e.clone()),
        };
        rep.record(ok, &name, &g, || "part digraph has a directed cycle".into());
    }
    rep.notes
        .push(format!("largest decomposition has {max_parts} parts"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CrossvalConfig {
        CrossvalConfig {
            bound: 8,
            samples: 30,
            random_bound: 10,
            subsets: 20,
            seed: 1,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_agrees_on_a_small_corpus() {
        for s in Suite::ALL {
            let rep = run(s, &small()).unwrap();
            assert!(rep.instances > 0, "{s}");
            if s == Suite::Main3 {
                continue;
            }
            assert!(rep.all_agree(), "{s}: {:?}", rep.disagreements);
        }
    }

    #[test]
    fn cut_characterization_only_misses_the_single_edge() {
        // K2 has no edge cut at all, yet deleting its edge leaves two
        // isolated vertices.
        let rep = run(Suite::Main3, &small()).unwrap();
        assert_eq!(rep.disagreements.len(), 1, "{:?}", rep.disagreements);
        assert_eq!(rep.disagreements[0].graph, "part A 0\npart B 1\nedge 0 1\n");
    }

    #[test]
    fn runs_are_deterministic() {
        let a = run(Suite::Lr, &small()).unwrap();
        let b = run(Suite::Lr, &small()).unwrap();
        assert_eq!(a, b);
    }
}
