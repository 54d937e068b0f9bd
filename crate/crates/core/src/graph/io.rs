use std::collections::HashMap;

use super::{Bipartition, Graph, Side, VertexId};
use crate::error::{ParseError, ParseErrorKind};

/// Parses the line-based graph format:
///
/// ```text
/// # comment
/// part A a1 a2
/// part B b1 b2
/// vertex lonely
/// edge a1 b1
/// ```
///
/// Vertex ids are assigned in order of first appearance. When any `part`
/// line is present, every vertex must be placed in a part and every edge
/// must cross the bipartition.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty() && !toks[0].starts_with('#'))
        .collect();

    let mut part_of: HashMap<&str, Side> = HashMap::new();
    let mut has_parts = false;
    for (line, toks) in &lines {
        if toks[0] != "part" {
            continue;
        }
        has_parts = true;
        let side = match toks.get(1) {
            Some(&"A") => Side::A,
            Some(&"B") => Side::B,
            _ => {
                return Err(err(
                    *line,
                    ParseErrorKind::Malformed("expected `part A|B <label>...`".into()),
                ))
            }
        };
        for &label in &toks[2..] {
            if part_of.insert(label, side).is_some() {
                return Err(err(
                    *line,
                    ParseErrorKind::DuplicatePartLabel(label.to_string()),
                ));
            }
        }
    }

    let mut g = Graph::default();
    let intern = |g: &mut Graph, label: &str, line: usize| -> Result<VertexId, ParseError> {
        if let Some(v) = g.vertex_by_label(label) {
            return Ok(v);
        }
        if has_parts && !part_of.contains_key(label) {
            return Err(err(line, ParseErrorKind::UnknownVertex(label.to_string())));
        }
        g.add_vertex(label)
            .map_err(|e| err(line, ParseErrorKind::Malformed(e.to_string())))
    };

    for (line, toks) in &lines {
        let line = *line;
        match toks[0] {
            "part" => {
                for &label in &toks[2..] {
                    intern(&mut g, label, line)?;
                }
            }
            "vertex" => {
                if toks.len() != 2 {
                    return Err(err(
                        line,
                        ParseErrorKind::Malformed("expected `vertex <label>`".into()),
                    ));
                }
                intern(&mut g, toks[1], line)?;
            }
            "edge" => {
                if toks.len() != 3 {
                    return Err(err(
                        line,
                        ParseErrorKind::Malformed("expected `edge <label> <label>`".into()),
                    ));
                }
                if toks[1] == toks[2] {
                    return Err(err(line, ParseErrorKind::Loop(toks[1].to_string())));
                }
                let u = intern(&mut g, toks[1], line)?;
                let v = intern(&mut g, toks[2], line)?;
                if has_parts && part_of[toks[1]] == part_of[toks[2]] {
                    return Err(err(
                        line,
                        ParseErrorKind::BipartitionViolation(
                            toks[1].to_string(),
                            toks[2].to_string(),
                        ),
                    ));
                }
                if g.has_edge(u, v) {
                    return Err(err(
                        line,
                        ParseErrorKind::DuplicateEdge(toks[1].to_string(), toks[2].to_string()),
                    ));
                }
                g.add_edge(u, v).expect("validated above");
            }
            other => {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed(format!("unknown directive `{other}`")),
                ));
            }
        }
    }

    if has_parts {
        let sides = g.labels().iter().map(|l| part_of[l.as_str()]).collect();
        g.set_bipartition(Bipartition::new(sides))
            .expect("edges validated against parts while parsing");
    }
    Ok(g)
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Emits `part` lines (when a bipartition is attached) and then `edge` lines
/// in edge id order. Explicit `vertex` lines are prepended only when the
/// part and edge lines alone would not reproduce the vertex numbering.
pub fn serialize_graph(g: &Graph) -> String {
    let mut body = String::new();
    let mut first_seen: Vec<VertexId> = Vec::new();
    let mut seen = vec![false; g.vertex_count()];
    let mut note = |v: VertexId, first_seen: &mut Vec<VertexId>| {
        if !seen[v] {
            seen[v] = true;
            first_seen.push(v);
        }
    };
    if let Some(bp) = g.bipartition() {
        for side in [Side::A, Side::B] {
            let members = bp.members(side);
            body.push_str(if side == Side::A { "part A" } else { "part B" });
            for &v in &members {
                body.push(' ');
                body.push_str(g.label(v));
                note(v, &mut first_seen);
            }
            body.push('\n');
        }
    }
    for &(u, v) in g.edges() {
        body.push_str(&format!("edge {} {}\n", g.label(u), g.label(v)));
        note(u, &mut first_seen);
        note(v, &mut first_seen);
    }
    let natural =
        first_seen.len() == g.vertex_count() && first_seen.iter().enumerate().all(|(i, &v)| i == v);
    if natural {
        return body;
    }
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&format!("vertex {}\n", g.label(v)));
    }
    out.push_str(&body);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_bipartite_input() {
        let g = parse_graph("part A a\npart B b\nedge a b").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        let bp = g.bipartition().unwrap();
        assert_eq!(bp.side_a(), vec![0]);
        assert_eq!(bp.side_b(), vec![1]);
    }

    #[test]
    fn loop_is_rejected_with_line() {
        let e = parse_graph("# header\nedge a a").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::Loop(_)));
    }

    #[test]
    fn four_cycle_file() {
        let g = parse_graph("edge 1 2\nedge 2 3\nedge 3 4\nedge 4 1\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert!(g.bipartition().is_none());
    }

    #[test]
    fn error_kinds() {
        let dup = parse_graph("edge a b\nedge b a").unwrap_err();
        assert_eq!(dup.line, 2);
        assert!(matches!(dup.kind, ParseErrorKind::DuplicateEdge(..)));
        let viol = parse_graph("part A a c\npart B b\nedge a c").unwrap_err();
        assert!(matches!(
            viol.kind,
            ParseErrorKind::BipartitionViolation(..)
        ));
        let unknown = parse_graph("part A a\npart B b\nedge a z").unwrap_err();
        assert_eq!(unknown.line, 3);
        assert!(matches!(unknown.kind, ParseErrorKind::UnknownVertex(_)));
        let bad = parse_graph("edge a").unwrap_err();
        assert!(matches!(bad.kind, ParseErrorKind::Malformed(_)));
        let twice = parse_graph("part A a\npart B a").unwrap_err();
        assert!(matches!(twice.kind, ParseErrorKind::DuplicatePartLabel(_)));
    }

    #[test]
    fn isolated_vertices_survive() {
        let g = parse_graph("vertex x\nedge a b\nvertex y").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }
}
