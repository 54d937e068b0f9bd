//! Test corpora: named graphs, exhaustive isomorphism-free generation of
//! small graphs, and seeded random families.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{is_connected, Bipartition, Graph, Side};
use crate::matching::is_matching_covered;
use crate::structure::is_brick;

pub mod named {
    use crate::graph::{Bipartition, Graph, Side};

    /// `C_n` with edge `i` joining `i` and `i+1`; even cycles carry their
    /// bipartition.
    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let mut g = Graph::from_edges(n, &edges).unwrap();
        if n % 2 == 0 {
            g.infer_bipartition();
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// `K_{a,b}` with A = 0..a and B = a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        let mut g = Graph::from_edges(a + b, &edges).unwrap();
        let sides = (0..a + b)
            .map(|v| if v < a { Side::A } else { Side::B })
            .collect();
        g.set_bipartition(Bipartition::new(sides)).unwrap();
        g
    }

    /// Outer 5-cycle 0..5, spokes `i -> i+5`, inner pentagram.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Two triangles 012 and 345 joined by 0-3, 1-4, 2-5.
    pub fn prism() -> Graph {
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

    /// The path a1 b1 a2 b2 on vertices 0..4 with sides A, B, A, B.
    pub fn path4() -> Graph {
        let mut g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        g.set_bipartition(Bipartition::new(vec![Side::A, Side::B, Side::A, Side::B]))
            .unwrap();
        g
    }
}

/// Largest order accepted by the exhaustive generators.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 10;

type Adjacency = Vec<u32>;

fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'outer: loop {
        for s in 0..cells.len() {
            let mask = cells[s].iter().fold(0u32, |m, &v| m | 1 << v);
            for x in 0..cells.len() {
                if cells[x].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[x]
                    .iter()
                    .map(|&v| ((adj[v] & mask).count_ones(), v))
                    .collect();
                if keyed.iter().all(|k| k.0 == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = u32::MAX;
                for (c, v) in keyed {
                    if c != last {
                        parts.push(Vec::new());
                        last = c;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(x..=x, parts);
                continue 'outer;
            }
        }
        return cells;
    }
}

fn relabel(adj: &[u32], order: &[usize]) -> Adjacency {
    let mut pos = vec![0usize; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = 0u32;
            let mut bits = adj[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1 << pos[w];
            }
            row
        })
        .collect()
}

fn canonical_search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut Option<Adjacency>) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let form = relabel(adj, &order);
        if best.as_ref().map_or(true, |b| form < *b) {
            *best = Some(form);
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        canonical_search(adj, next, best);
    }
}

/// Canonical relabelled adjacency rows: equal for isomorphic graphs.
fn canonical_form(adj: &[u32]) -> Adjacency {
    let mut best = None;
    canonical_search(adj, vec![(0..adj.len()).collect()], &mut best);
    best.unwrap_or_default()
}

fn to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                g.add_edge(u, v).expect("simple adjacency");
            }
        }
    }
    g
}

fn check_order(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_ORDER_LIMIT {
        return Err(Error::TooLarge {
            limit: EXHAUSTIVE_ORDER_LIMIT,
            got: n,
        });
    }
    Ok(())
}

/// Graphs by adding one vertex at a time; `max_degree` bounds every degree
/// and `deficit_ok` may prune intermediate graphs.
fn augment_levels(
    n: usize,
    max_degree: usize,
    keep: impl Fn(&[u32], usize) -> bool,
) -> Vec<Adjacency> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut level: BTreeSet<Adjacency> = BTreeSet::from([vec![0u32]]);
    for size in 1..n {
        let mut next = BTreeSet::new();
        for adj in &level {
            let open: Vec<usize> = (0..size)
                .filter(|&v| (adj[v].count_ones() as usize) < max_degree)
                .collect();
            for subset in 0u32..(1 << open.len()) {
                if subset.count_ones() as usize > max_degree {
                    continue;
                }
                let mut grown = adj.clone();
                let mut row = 0u32;
                for (i, &v) in open.iter().enumerate() {
                    if subset >> i & 1 == 1 {
                        grown[v] |= 1 << size;
                        row |= 1 << v;
                    }
                }
                grown.push(row);
                if keep(&grown, n) {
                    next.insert(canonical_form(&grown));
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Every graph on `n` vertices up to isomorphism, in canonical order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    Ok(augment_levels(n, usize::MAX, |_, _| true)
        .iter()
        .map(|a| to_graph(a))
        .collect())
}

/// Every graph on `n` vertices with maximum degree at most `d`.
pub fn graphs_with_max_degree(n: usize, d: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    Ok(augment_levels(n, d, |_, _| true)
        .iter()
        .map(|a| to_graph(a))
        .collect())
}

/// Every cubic graph on `n` vertices (connected or not).
pub fn cubic_graphs(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    // The vertices still to come supply at most 3 edges each to the
    // current ones, so a larger total deficit can never be filled.
    let keep = |adj: &[u32], n: usize| {
        let deficit: usize = adj.iter().map(|r| 3 - r.count_ones() as usize).sum();
        deficit <= 3 * (n - adj.len())
    };
    Ok(augment_levels(n, 3, keep)
        .iter()
        .filter(|a| a.iter().all(|r| r.count_ones() == 3))
        .map(|a| to_graph(a))
        .collect())
}

fn bipartite_graph(rows: &[u32]) -> Graph {
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

fn permutations(h: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; h], &mut out);
    out
}

fn transpose(rows: &[u32]) -> Vec<u32> {
    let h = rows.len();
    (0..h)
        .map(|b| (0..h).fold(0u32, |m, a| m | ((rows[a] >> b & 1) << a)))
        .collect()
}

fn bipartite_canonical(rows: &[u32], perms: &[Vec<usize>]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for m in [rows.to_vec(), transpose(rows)] {
        for p in perms {
            let mut mapped: Vec<u32> = m
                .iter()
                .map(|&r| {
                    p.iter()
                        .enumerate()
                        .fold(0u32, |acc, (i, &j)| acc | ((r >> i & 1) << j))
                })
                .collect();
            mapped.sort_unstable();
            if best.as_ref().map_or(true, |b| mapped < *b) {
                best = Some(mapped);
            }
        }
    }
    best.unwrap_or_default()
}

/// Calls `visit` on every nondecreasing sequence of `h` rows drawn from
/// `values`; stops early when it returns false.
pub(crate) fn for_each_row_multiset(
    h: usize,
    values: &[u32],
    mut visit: impl FnMut(&[u32]) -> bool,
) {
    fn go(
        values: &[u32],
        start: usize,
        rows: &mut Vec<u32>,
        h: usize,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if rows.len() == h {
            return visit(rows);
        }
        for i in start..values.len() {
            rows.push(values[i]);
            let go_on = go(values, i, rows, h, visit);
            rows.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    go(values, 0, &mut Vec::with_capacity(h), h, &mut visit);
}

/// Connected bipartite graphs with `h` vertices per side and every degree
/// at least `min_degree`, up to isomorphism (sides may be swapped).
pub fn balanced_bipartite_graphs(h: usize, min_degree: usize) -> Result<Vec<Graph>> {
    if h == 0 {
        return Ok(Vec::new());
    }
    if 2 * h > EXHAUSTIVE_ORDER_LIMIT {
        return Err(Error::TooLarge {
            limit: EXHAUSTIVE_ORDER_LIMIT,
            got: 2 * h,
        });
    }
    let min_degree = min_degree.max(1) as u32;
    let values: Vec<u32> = (1u32..1 << h)
        .filter(|r| r.count_ones() >= min_degree)
        .collect();
    let perms = permutations(h);
    let mut seen = BTreeSet::new();
    for_each_row_multiset(h, &values, |rows| {
        let cols = transpose(rows);
        if cols.iter().all(|c| c.count_ones() >= min_degree) {
            seen.insert(bipartite_canonical(rows, &perms));
        }
        true
    });
    Ok(seen
        .into_iter()
        .map(|rows| bipartite_graph(&rows))
        .filter(is_connected)
        .collect())
}

/// All matching-covered bipartite graphs on at most `max_vertices`
/// vertices, up to isomorphism.
pub fn matching_covered_bipartite(max_vertices: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for h in 1..=max_vertices / 2 {
        out.extend(
            balanced_bipartite_graphs(h, 1)?
                .into_iter()
                .filter(is_matching_covered),
        );
    }
    Ok(out)
}

/// Union of `r` random perfect matchings between A = 0..h and B = h..2h,
/// retried until connected. Such a union is always matching-covered.
pub fn random_bipartite_matching_covered<R: Rng>(rng: &mut R, h: usize, r: usize) -> Graph {
    assert!(h >= 1 && r >= 1);
    loop {
        let mut rows = vec![0u32; h];
        for _ in 0..r {
            let mut p: Vec<usize> = (0..h).collect();
            p.shuffle(rng);
            for (a, &b) in p.iter().enumerate() {
                rows[a] |= 1 << b;
            }
        }
        let g = bipartite_graph(&rows);
        if is_connected(&g) {
            return g;
        }
    }
}

/// Union of `r` random perfect matchings of `K_n` (`n` even), retried until
/// connected.
pub fn random_matching_covered<R: Rng>(rng: &mut R, n: usize, r: usize) -> Graph {
    assert!(n >= 2 && n % 2 == 0 && r >= 1);
    loop {
        let mut adj = vec![0u32; n];
        for _ in 0..r {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(rng);
            for pair in p.chunks(2) {
                adj[pair[0]] |= 1 << pair[1];
                adj[pair[1]] |= 1 << pair[0];
            }
        }
        let g = to_graph(&adj);
        if is_connected(&g) {
            return g;
        }
    }
}

/// A connected `d`-regular bipartite graph with `h` vertices per side, as a
/// union of `d` edge-disjoint random perfect matchings.
pub fn random_regular_bipartite<R: Rng>(rng: &mut R, h: usize, d: usize) -> Graph {
    assert!(d >= 1 && d <= h);
    'retry: loop {
        let mut rows = vec![0u32; h];
        for _ in 0..d {
            let mut placed = false;
            for _ in 0..200 {
                let mut p: Vec<usize> = (0..h).collect();
                p.shuffle(rng);
                if p.iter().enumerate().all(|(a, &b)| rows[a] >> b & 1 == 0) {
                    for (a, &b) in p.iter().enumerate() {
                        rows[a] |= 1 << b;
                    }
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'retry;
            }
        }
        let g = bipartite_graph(&rows);
        if is_connected(&g) {
            return g;
        }
    }
}

/// A connected bipartite graph on `2h` vertices with the planted perfect
/// matching `a_i b_i` and other edges with probability `p`.
pub fn random_matchable_bipartite<R: Rng>(rng: &mut R, h: usize, p: f64) -> Graph {
    loop {
        let mut rows = vec![0u32; h];
        for (a, row) in rows.iter_mut().enumerate() {
            *row |= 1 << a;
            for b in 0..h {
                if rng.gen_bool(p) {
                    *row |= 1 << b;
                }
            }
        }
        let g = bipartite_graph(&rows);
        if is_connected(&g) {
            return g;
        }
    }
}

/// `G(n, p)` without any connectivity guarantee.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Named bricks, every brick on at most 8 vertices, every cubic brick on
/// 10 vertices, and `random` seeded bricks on 10 vertices.
pub fn brick_corpus<R: Rng>(rng: &mut R, random: usize) -> Result<Vec<(String, Graph)>> {
    let mut out = vec![
        ("K4".to_string(), named::complete(4)),
        ("prism".to_string(), named::prism()),
        ("petersen".to_string(), named::petersen()),
    ];
    for n in [4, 6, 8] {
        for (i, g) in all_graphs(n)?.into_iter().enumerate() {
            if is_brick(&g)? {
                out.push((format!("order{n}#{i}"), g));
            }
        }
    }
    for (i, g) in cubic_graphs(10)?.into_iter().enumerate() {
        if is_connected(&g) && is_brick(&g)? {
            out.push((format!("cubic10#{i}"), g));
        }
    }
    let mut found = 0;
    while found < random {
        let p = rng.gen_range(0.35..0.75);
        let g = random_graph(rng, 10, p);
        if is_brick(&g)? {
            out.push((format!("random10#{found}"), g));
            found += 1;
        }
    }
    Ok(out)
}
