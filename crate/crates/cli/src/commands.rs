use std::fs;
use std::path::Path;

use matchcover::dm::CUT_ENUMERATION_LIMIT;
use matchcover::search::{
    find_mc_not_nec, find_nec_not_sc, find_sc_not_two_ext, large_class_search,
};
use matchcover::{
    are_switching_equivalent, augment_to_matching_covered, build_gkm, classify, crossval,
    directed_cuts, dm_decomposition, dm_digraph, enumerate_perfect_matchings, equivalent_classes,
    equivalent_to_empty, equivalent_to_full, is_strongly_coverable, min_path_family,
    parity_spectrum, parse_construction, parse_graph, removable_edges, scan_edge_subsets,
    serialize_construction, serialize_graph, sources_and_sinks, strip_annotations,
    verify_construction, CrossvalConfig, CutMode, EdgeSet, Graph, Suite, VerifyMode,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::outcome::CliError;

pub type CmdResult = Result<(Value, Vec<String>), CliError>;

/// Reads a graph file; construction annotations are ignored.
pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    parse_graph(&strip_annotations(&text))
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::precondition(format!("{}: {e}", path.display())))
}

/// Resolves `u-v` tokens to edge ids. Labels may themselves contain `-`,
/// so every split point is tried and exactly one must name an edge.
pub fn parse_edges(g: &Graph, spec: &str) -> Result<EdgeSet, CliError> {
    let mut set = g.empty_edge_set();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let hits: Vec<_> = token
            .match_indices('-')
            .filter_map(|(i, _)| g.edge_by_labels(&token[..i], &token[i + 1..]).ok())
            .collect();
        match hits.as_slice() {
            [e] => {
                set.insert(*e);
            }
            [] => return Err(CliError::usage(format!("unknown edge `{token}`"))),
            _ => return Err(CliError::usage(format!("ambiguous edge `{token}`"))),
        }
    }
    Ok(set)
}

fn labels(g: &Graph, set: &EdgeSet) -> Value {
    json!(g.describe_edges(set))
}

fn edge_list(g: &Graph, ids: &[usize]) -> Value {
    json!(ids.iter().map(|&e| g.edge_label(e)).collect::<Vec<_>>())
}

pub fn classify_cmd(g: &Graph) -> CmdResult {
    let report = classify(g);
    Ok((
        serde_json::to_value(report).expect("report serializes"),
        vec![],
    ))
}

pub fn feasible_cmd(g: &Graph, edges: &str, limit: Option<usize>) -> CmdResult {
    let x = parse_edges(g, edges)?;
    let spectrum = parity_spectrum(g, &x, limit)?;
    let feasible = matchcover::is_feasible(g, &x)?;
    let all = enumerate_perfect_matchings(g, limit);
    let mut diagnostics = Vec::new();
    if all.truncated {
        diagnostics.push(format!(
            "matching count is a lower bound: enumeration stopped at {}",
            all.len()
        ));
    }
    Ok((
        json!({
            "edges": labels(g, &x),
            "feasible": feasible,
            "spectrum": spectrum,
            "matching_count": all.len(),
            "matching_count_complete": !all.truncated,
        }),
        diagnostics,
    ))
}

pub fn switch_equiv_cmd(g: &Graph, edges: &str, target: &str) -> CmdResult {
    let x = parse_edges(g, edges)?;
    let witness = match target {
        "empty" => equivalent_to_empty(g, &x)?,
        "full" => equivalent_to_full(g, &x)?,
        other => are_switching_equivalent(g, &x, &parse_edges(g, other)?)?,
    };
    Ok((
        json!({
            "edges": labels(g, &x),
            "target": target,
            "equivalent": witness.is_some(),
            "witness": witness.map(|w| g.describe_vertices(&w.u)),
        }),
        vec![],
    ))
}

pub fn equiv_classes_cmd(g: &Graph) -> CmdResult {
    let classes = equivalent_classes(g)?;
    Ok((
        json!({
            "classes": classes.classes.iter().map(|c| edge_list(g, c)).collect::<Vec<_>>(),
            "nontrivial": classes.nontrivial.iter().map(|c| edge_list(g, c)).collect::<Vec<_>>(),
        }),
        vec![],
    ))
}

pub fn removable_cmd(g: &Graph) -> CmdResult {
    let removable = removable_edges(g)?;
    Ok((
        json!({
            "removable": labels(g, &removable),
            "non_removable": labels(g, &removable.complement()),
            "strongly_coverable": is_strongly_coverable(g)?,
        }),
        vec![],
    ))
}

pub fn dm_cmd(g: &Graph, strict: bool) -> CmdResult {
    let d = dm_decomposition(g)?;
    let dig = dm_digraph(g, &d)?;
    let (sources, sinks) = sources_and_sinks(&dig);
    let mut diagnostics = Vec::new();
    let mode = if strict {
        CutMode::Strict
    } else {
        CutMode::Partition
    };
    let cuts = if dig.nodes <= CUT_ENUMERATION_LIMIT {
        Some(directed_cuts(&dig, mode)?)
    } else {
        diagnostics.push(format!(
            "directed cuts not listed above {CUT_ENUMERATION_LIMIT} parts"
        ));
        None
    };
    let family = min_path_family(&dig)?;
    if !family.exact {
        diagnostics.push("path family from the greedy heuristic; ell is an upper bound".into());
    }
    let parts: Vec<Value> = d
        .parts
        .iter()
        .map(|p| json!({"a": g.describe_vertices(&p.side_a), "b": g.describe_vertices(&p.side_b)}))
        .collect();
    let plan = if matchcover::is_connected(g) {
        let (_, plan) = augment_to_matching_covered(g)?;
        Some(json!({
            "new_edges": plan.new_edges.iter().map(|&(b, a)| format!("{}-{}", g.label(b), g.label(a))).collect::<Vec<_>>(),
            "paths": plan.paths,
        }))
    } else {
        diagnostics.push("graph is disconnected; no augmentation plan".into());
        None
    };
    Ok((
        json!({
            "parts": parts,
            "arcs": dig.arcs,
            "sources": sources,
            "sinks": sinks,
            "cut_mode": mode,
            "directed_cuts": cuts,
            "ell": family.len(),
            "exact": family.exact,
            "paths": family.paths,
            "augmentation": plan,
        }),
        diagnostics,
    ))
}

pub fn augment_cmd(g: &Graph, out: Option<&Path>) -> CmdResult {
    let (h, plan) = augment_to_matching_covered(g)?;
    let text = serialize_graph(&h);
    if let Some(path) = out {
        write_file(path, &text)?;
    }
    Ok((
        json!({
            "ell": plan.ell,
            "exact": plan.exact,
            "new_edges": plan.new_edges.iter().map(|&(b, a)| format!("{}-{}", h.label(b), h.label(a))).collect::<Vec<_>>(),
            "plan": plan,
            "written": out.map(|p| p.display().to_string()),
            "graph": if out.is_none() { Some(text) } else { None },
        }),
        vec![],
    ))
}

fn verification_outcome(
    r: &matchcover::ConstructionResult,
    mode: VerifyMode,
    mut payload: Value,
) -> CmdResult {
    let report = verify_construction(r, mode);
    payload["verification"] = serde_json::to_value(&report).expect("report serializes");
    if report.all_passed() {
        return Ok((payload, vec![]));
    }
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    Err(CliError::disagreement(
        format!("verification failed: {}", failed.join(", ")),
        payload,
    ))
}

pub fn generate_cmd(k: usize, m: usize, out: Option<&Path>, mode: VerifyMode) -> CmdResult {
    let r = build_gkm(k, m)?;
    let text = serialize_construction(&r);
    if let Some(path) = out {
        write_file(path, &text)?;
    }
    let payload = json!({
        "k": k,
        "m": m,
        "vertices": r.graph.vertex_count(),
        "edges": r.graph.edge_count(),
        "link_edges": labels(&r.graph, &r.link_edges),
        "test_set": labels(&r.graph, &r.test_set),
        "written": out.map(|p| p.display().to_string()),
        "file": if out.is_none() { Some(text) } else { None },
    });
    verification_outcome(&r, mode, payload)
}

pub fn verify_cmd(path: &Path, mode: VerifyMode) -> CmdResult {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let r = parse_construction(&text)?;
    let payload = json!({
        "k": r.k,
        "m": r.m,
        "vertices": r.graph.vertex_count(),
        "edges": r.graph.edge_count(),
    });
    verification_outcome(&r, mode, payload)
}

pub fn crossvalidate_cmd(suite: Suite, cfg: &CrossvalConfig) -> CmdResult {
    let report = crossval::run(suite, cfg)?;
    let payload = json!({ "config": cfg, "report": report });
    if report.all_agree() {
        Ok((payload, report.notes.clone()))
    } else {
        Err(CliError::disagreement(
            format!(
                "{suite}: {} of {} comparisons disagree",
                report.comparisons - report.agreements,
                report.comparisons
            ),
            payload,
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SearchMode {
    /// Every edge subset against every perfect matching (Petersen by default).
    Subsets,
    /// Matching-covered with an equivalent class.
    McNec,
    /// 3-connected bipartite without an equivalent class, not strongly coverable.
    NecSc,
    /// Strongly coverable but not 2-extendable.
    Sc2ext,
    /// Random well-connected graphs, tracking the largest equivalent class.
    LargeClass,
}

pub struct SearchArgs<'a> {
    pub graph: Option<&'a Graph>,
    pub bound: Option<usize>,
    pub samples: usize,
    pub seed: Option<u64>,
    pub connectivity: usize,
}

fn witness(g: Option<Graph>) -> Value {
    g.map_or(Value::Null, |g| {
        json!({"vertices": g.vertex_count(), "edges": g.edge_count(), "graph": serialize_graph(&g)})
    })
}

pub fn search_cmd(mode: SearchMode, args: SearchArgs<'_>) -> CmdResult {
    let payload = match mode {
        SearchMode::Subsets => {
            let petersen = matchcover::corpus::named::petersen();
            let g = args.graph.unwrap_or(&petersen);
            let scan = scan_edge_subsets(g)?;
            let first = scan.first_exceptional.as_ref().map(|ids| edge_list(g, ids));
            json!({"scan": scan, "first_exceptional_edges": first})
        }
        SearchMode::McNec => json!({"witness": witness(find_mc_not_nec(args.bound.unwrap_or(8))?)}),
        SearchMode::NecSc => {
            let (g, examined) = find_nec_not_sc(args.bound.unwrap_or(12) / 2)?;
            json!({"examined": examined, "witness": witness(g)})
        }
        SearchMode::Sc2ext => {
            json!({"witness": witness(find_sc_not_two_ext(args.bound.unwrap_or(8))?)})
        }
        SearchMode::LargeClass => {
            let seed = args
                .seed
                .ok_or_else(|| CliError::usage("--seed is required for random searches"))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = args.bound.unwrap_or(12);
            json!({"search": large_class_search(&mut rng, n, 3, args.connectivity, args.samples)?})
        }
    };
    Ok((payload, vec![]))
}
