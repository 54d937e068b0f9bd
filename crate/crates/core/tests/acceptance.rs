//! Acceptance gate. Every criterion runs in full and prints one line; the
//! test fails afterwards if any line is FAIL.

use std::time::{Duration, Instant};

use matchcover::corpus::{all_graphs, matching_covered_bipartite, named};
use matchcover::crossval::{self, acyclic_report, bipartite_corpus, non_covered_corpus};
use matchcover::search::{find_mc_not_nec, find_nec_not_sc, find_sc_not_two_ext};
use matchcover::{
    build_gkm, classify, enumerate_perfect_matchings, is_connected, scan_edge_subsets,
    verify_construction, CrossvalConfig, Graph, Suite, VerifyMode,
};

const GRID_BUDGET: Duration = Duration::from_secs(30);
const PETERSEN_BUDGET: Duration = Duration::from_secs(60);
const WITNESS_BUDGET: Duration = Duration::from_secs(300);

const SEED: u64 = 20;
const MAIN_SAMPLES: usize = 500;
const MAIN_RANDOM_BOUND: usize = 14;
const EXHAUSTIVE_BOUND: usize = 10;
const AUGMENT_SAMPLES: usize = 200;
const AUGMENT_BOUND: usize = 10;
const LR_GRAPHS: usize = 300;
const LR_SUBSETS: usize = 100;
const LR_BOUND: usize = 14;
const RANDOM_BRICKS: usize = 100;

struct Line {
    id: usize,
    name: &'static str,
    passed: bool,
    detail: String,
}

fn main_config() -> CrossvalConfig {
    CrossvalConfig {
        bound: EXHAUSTIVE_BOUND,
        samples: MAIN_SAMPLES,
        random_bound: MAIN_RANDOM_BOUND,
        subsets: 0,
        seed: SEED,
    }
}

fn augment_config() -> CrossvalConfig {
    CrossvalConfig {
        bound: EXHAUSTIVE_BOUND,
        samples: AUGMENT_SAMPLES,
        random_bound: AUGMENT_BOUND,
        subsets: 0,
        seed: SEED,
    }
}

fn summarize(rep: &matchcover::CrossvalReport) -> String {
    let mut s = format!(
        "{}/{} comparisons agree over {} instances",
        rep.agreements, rep.comparisons, rep.instances
    );
    for d in rep.disagreements.iter().take(3) {
        s.push_str(&format!(
            "; {}: {} [{}]",
            d.instance,
            d.detail,
            d.graph.replace('\n', " | ")
        ));
    }
    for n in &rep.notes {
        s.push_str(&format!("; {n}"));
    }
    s
}

fn grid() -> Line {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut figure = String::new();
    for k in [3, 4, 5] {
        for m in [2, 3] {
            let r = build_gkm(k, m).expect("valid parameters");
            if (k, m) == (3, 2) {
                figure = format!(
                    "(3,2): {} vertices, |K| = {}",
                    r.graph.vertex_count(),
                    r.link_edges.len()
                );
                if r.graph.vertex_count() != 12 || r.link_edges.len() != 4 {
                    failures.push(figure.clone());
                }
            }
            let report = verify_construction(&r, VerifyMode::Auto);
            for c in report.checks.iter().filter(|c| !c.passed) {
                failures.push(format!("({k},{m}) {}: {}", c.name, c.detail));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > GRID_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    Line {
        id: 1,
        name: "construction grid k in {3,4,5}, m in {2,3}",
        passed: failures.is_empty(),
        detail: format!(
            "{figure}; {elapsed:.2?}; failures: [{}]",
            failures.join("; ")
        ),
    }
}

fn petersen() -> Line {
    let start = Instant::now();
    let scan = scan_edge_subsets(&named::petersen()).expect("Petersen is matching-covered");
    let elapsed = start.elapsed();
    Line {
        id: 2,
        name: "Petersen subset scan",
        passed: scan.subsets == 1 << 15 && scan.exceptional >= 1 && elapsed <= PETERSEN_BUDGET,
        detail: format!(
            "{} subsets, {} non-feasible, {} outside both trivial switching classes, first {:?}; {elapsed:.2?}",
            scan.subsets, scan.non_feasible, scan.exceptional, scan.first_exceptional
        ),
    }
}

fn suite_line(id: usize, name: &'static str, suite: Suite, cfg: &CrossvalConfig) -> Line {
    let rep = crossval::run(suite, cfg).expect("suite runs");
    Line {
        id,
        name,
        passed: rep.all_agree() && rep.instances > 0,
        detail: summarize(&rep),
    }
}

fn acyclic() -> Line {
    let corpus = bipartite_corpus(&main_config())
        .expect("corpus")
        .into_iter()
        .chain(non_covered_corpus(&augment_config()));
    let rep = acyclic_report(corpus).expect("decomposition");
    Line {
        id: 6,
        name: "part digraph acyclic",
        passed: rep.all_agree() && rep.instances > 0,
        detail: summarize(&rep),
    }
}

fn chain_holds(g: &Graph) -> bool {
    let r = classify(g);
    (!r.two_extendable || r.strongly_coverable)
        && (!r.strongly_coverable || r.no_equivalent_class)
        && (!r.no_equivalent_class || r.matching_covered)
}

fn family_chain() -> Line {
    let mut classified = 0;
    let mut broken = Vec::new();
    let mut graphs: Vec<Graph> = Vec::new();
    for n in [2, 4, 6, 8] {
        graphs.extend(all_graphs(n).unwrap().into_iter().filter(is_connected));
    }
    graphs.extend(matching_covered_bipartite(EXHAUSTIVE_BOUND).unwrap());
    for g in &graphs {
        classified += 1;
        if !chain_holds(g) {
            broken.push(matchcover::serialize_graph(g));
        }
    }

    let mut witnesses = Vec::new();
    let mut found_all = true;
    let start = Instant::now();
    let w = find_mc_not_nec(8).unwrap();
    let t1 = start.elapsed();
    let ok = w.as_ref().is_some_and(|g| {
        let r = classify(g);
        r.matching_covered && !r.no_equivalent_class && g.vertex_count() == 4 && g.edge_count() == 4
    });
    found_all &= ok && t1 <= WITNESS_BUDGET;
    witnesses.push(format!(
        "mc\\nec {} in {t1:.2?}",
        if ok { "C4" } else { "missing" }
    ));

    let start = Instant::now();
    let (w, examined) = find_nec_not_sc(6).unwrap();
    let t2 = start.elapsed();
    let ok = w.as_ref().is_some_and(|g| {
        let r = classify(g);
        r.no_equivalent_class
            && !r.strongly_coverable
            && matchcover::vertex_connectivity(g).unwrap() >= 3
    });
    found_all &= ok && t2 <= WITNESS_BUDGET;
    witnesses.push(format!(
        "nec\\sc {} after {examined} candidates in {t2:.2?}",
        w.map_or("missing".into(), |g| format!(
            "{} vertices {} edges",
            g.vertex_count(),
            g.edge_count()
        ))
    ));

    let start = Instant::now();
    let w = find_sc_not_two_ext(8).unwrap();
    let t3 = start.elapsed();
    let ok = w.as_ref().is_some_and(|g| {
        let r = classify(g);
        r.strongly_coverable && !r.two_extendable
    });
    found_all &= ok && t3 <= WITNESS_BUDGET;
    witnesses.push(format!(
        "sc\\2-ext {} in {t3:.2?}",
        w.map_or("missing".into(), |g| format!(
            "{} vertices {} edges",
            g.vertex_count(),
            g.edge_count()
        ))
    ));

    Line {
        id: 9,
        name: "family chain and strictness witnesses",
        passed: broken.is_empty() && found_all,
        detail: format!(
            "{classified} graphs classified, {} break the chain; {}",
            broken.len(),
            witnesses.join("; ")
        ),
    }
}

/// Counts perfect matchings by matching the lowest free vertex in every
/// possible way.
fn count_matchings_oracle(n: usize, edges: &[(usize, usize)]) -> usize {
    fn go(free: u64, n: usize, edges: &[(usize, usize)]) -> usize {
        let Some(v) = (0..n).find(|&v| free >> v & 1 == 1) else {
            return 1;
        };
        edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .filter(|&w| free >> w & 1 == 1)
            .map(|w| go(free & !(1 << v) & !(1 << w), n, edges))
            .sum()
    }
    go((1u64 << n) - 1, n, edges)
}

fn matching_counts() -> Line {
    let cases = [
        ("C4", named::cycle(4), 2),
        ("C6", named::cycle(6), 2),
        ("K4", named::complete(4), 3),
        ("K33", named::complete_bipartite(3, 3), 6),
        ("Petersen", named::petersen(), 6),
    ];
    let mut passed = true;
    let mut parts = Vec::new();
    for (name, g, expected) in cases {
        let got = enumerate_perfect_matchings(&g, None);
        let oracle = count_matchings_oracle(g.vertex_count(), g.edges());
        let ok = got.is_complete() && got.len() == expected && oracle == expected;
        passed &= ok;
        parts.push(format!("{name} {} (oracle {oracle})", got.len()));
    }
    Line {
        id: 10,
        name: "perfect matching counts",
        passed,
        detail: parts.join(", "),
    }
}

#[test]
fn acceptance() {
    let lr = CrossvalConfig {
        bound: EXHAUSTIVE_BOUND,
        samples: LR_GRAPHS,
        random_bound: LR_BOUND,
        subsets: LR_SUBSETS,
        seed: SEED,
    };
    let lovasz = CrossvalConfig {
        bound: EXHAUSTIVE_BOUND,
        samples: RANDOM_BRICKS,
        random_bound: EXHAUSTIVE_BOUND,
        subsets: 0,
        seed: SEED,
    };
    let mut lines = Vec::new();
    let timed = |f: &dyn Fn() -> Line| {
        let start = Instant::now();
        let line = f();
        (line, start.elapsed())
    };
    lines.push(timed(&grid));
    lines.push(timed(&petersen));
    lines.push(timed(&|| {
        suite_line(
            3,
            "equivalent class iff balanced 2-edge-cut",
            Suite::Main2,
            &main_config(),
        )
    }));
    lines.push(timed(&|| {
        suite_line(
            4,
            "strongly coverable iff cut condition",
            Suite::Main3,
            &main_config(),
        )
    }));
    lines.push(timed(&|| {
        suite_line(
            5,
            "augmentation adds ell edges",
            Suite::Augmentation,
            &augment_config(),
        )
    }));
    lines.push(timed(&acyclic));
    lines.push(timed(&|| {
        suite_line(7, "brick classes have two edges", Suite::Lovasz, &lovasz)
    }));
    lines.push(timed(&|| {
        suite_line(
            8,
            "regular bipartite non-feasible iff trivial",
            Suite::Lr,
            &lr,
        )
    }));
    lines.push(timed(&family_chain));
    lines.push(timed(&matching_counts));

    for (l, t) in &lines {
        println!(
            "criterion {:>2} {} {} ({t:.1?}): {}",
            l.id,
            if l.passed { "PASS" } else { "FAIL" },
            l.name,
            l.detail
        );
    }
    let failed: Vec<usize> = lines
        .iter()
        .filter(|(l, _)| !l.passed)
        .map(|(l, _)| l.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
