//! Simple undirected graphs over `0..n` with dense adjacency rows, plus the
//! edge-list format, deterministic family generators and the two vertex-level
//! transforms the reduction builders rely on.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Simple undirected graph. Vertices are `0..n`; each adjacency row is a
/// [`VertexSet`] over the same universe. Labels are optional human-readable
/// names attached by gadget builders.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: (0..n).map(|_| VertexSet::empty(n)).collect(),
            labels: BTreeMap::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Adds the undirected edge `{u, v}`. Duplicates collapse silently;
    /// self-loops and out-of-range endpoints are errors.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::usage(format!(
                "edge ({u}, {v}) names a vertex outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::usage(format!("self-loop at vertex {u}")));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Subgraph induced by `keep`, together with the map from new indices to
    /// original ones (ascending). Labels of kept vertices carry over.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let origin: Vec<usize> = keep.iter().collect();
        let mut back = vec![usize::MAX; self.n()];
        for (new, &old) in origin.iter().enumerate() {
            back[old] = new;
        }
        let mut g = Graph::empty(origin.len());
        for (new, &old) in origin.iter().enumerate() {
            for w in self.rows[old].intersection(keep).iter() {
                if w > old {
                    g.add_edge(new, back[w]).expect("induced edge in range");
                }
            }
            if let Some(l) = self.labels.get(&old) {
                g.labels.insert(new, l.clone());
            }
        }
        (g, origin)
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let n = self.n();
        let mut dist = vec![None; n];
        dist[src] = Some(0);
        let mut frontier = vec![src];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.rows[u].iter() {
                    if dist[v].is_none() {
                        dist[v] = Some(d);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        dist
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.edge_count(), self.edges())
    }
}

/// Deterministic graph families. The same `(family, parameters, seed)` always
/// yields the identical graph.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Wheel { n: usize },
    Star { n: usize },
    RandomTree { n: usize, seed: u64 },
    Gnp { n: usize, p: f64, seed: u64 },
    RandomTriangleFree { n: usize, p: f64, seed: u64 },
}

impl GraphFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            GraphFamily::Complete { .. } => "complete",
            GraphFamily::Cycle { .. } => "cycle",
            GraphFamily::Path { .. } => "path",
            GraphFamily::Wheel { .. } => "wheel",
            GraphFamily::Star { .. } => "star",
            GraphFamily::RandomTree { .. } => "random-tree",
            GraphFamily::Gnp { .. } => "gnp",
            GraphFamily::RandomTriangleFree { .. } => "random-triangle-free",
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            GraphFamily::Complete { n }
            | GraphFamily::Cycle { n }
            | GraphFamily::Path { n }
            | GraphFamily::Wheel { n }
            | GraphFamily::Star { n }
            | GraphFamily::RandomTree { n, .. }
            | GraphFamily::Gnp { n, .. }
            | GraphFamily::RandomTriangleFree { n, .. } => n,
        }
    }
}

/// Builds the named family graph.
pub fn generate(family: &GraphFamily) -> Result<Graph> {
    let check_min = |n: usize, min: usize, what: &str| -> Result<()> {
        if n < min {
            Err(Error::usage(format!("{what} requires n >= {min}, got {n}")))
        } else {
            Ok(())
        }
    };
    match *family {
        GraphFamily::Complete { n } => {
            check_min(n, 1, "complete graph")?;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        GraphFamily::Cycle { n } => {
            check_min(n, 3, "cycle")?;
            let mut g = Graph::empty(n);
            for u in 0..n {
                g.add_edge(u, (u + 1) % n)?;
            }
            Ok(g)
        }
        GraphFamily::Path { n } => {
            check_min(n, 1, "path")?;
            let mut g = Graph::empty(n);
            for u in 0..n.saturating_sub(1) {
                g.add_edge(u, u + 1)?;
            }
            Ok(g)
        }
        GraphFamily::Wheel { n } => {
            // C_{n-1} plus a universal hub at the last index.
            check_min(n, 4, "wheel")?;
            let mut g = Graph::empty(n);
            let rim = n - 1;
            for u in 0..rim {
                g.add_edge(u, (u + 1) % rim)?;
                g.add_edge(u, rim)?;
            }
            Ok(g)
        }
        GraphFamily::Star { n } => {
            check_min(n, 1, "star")?;
            let mut g = Graph::empty(n);
            for v in 1..n {
                g.add_edge(0, v)?;
            }
            Ok(g)
        }
        GraphFamily::RandomTree { n, seed } => {
            check_min(n, 1, "random tree")?;
            Ok(random_tree(n, seed))
        }
        GraphFamily::Gnp { n, p, seed } => {
            check_min(n, 1, "gnp")?;
            check_probability(p)?;
            Ok(gnp(n, p, seed))
        }
        GraphFamily::RandomTriangleFree { n, p, seed } => {
            check_min(n, 1, "random triangle-free graph")?;
            check_probability(p)?;
            let mut g = gnp(n, p, seed);
            delete_triangles(&mut g);
            Ok(g)
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::usage(format!("edge probability {p} outside [0, 1]")));
    }
    Ok(())
}

fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("generated edge in range");
            }
        }
    }
    g
}

/// Uniform random labelled tree via a seeded Pruefer sequence.
fn random_tree(n: usize, seed: u64) -> Graph {
    let mut g = Graph::empty(n);
    if n <= 1 {
        return g;
    }
    if n == 2 {
        g.add_edge(0, 1).unwrap();
        return g;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut leaf_cursor = 0;
    let mut leaf = usize::MAX;
    for &v in &seq {
        if leaf == usize::MAX {
            while degree[leaf_cursor] != 1 {
                leaf_cursor += 1;
            }
            leaf = leaf_cursor;
            leaf_cursor += 1;
        }
        g.add_edge(leaf, v).unwrap();
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 && v < leaf_cursor {
            leaf = v;
        } else {
            leaf = usize::MAX;
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

/// Removes one edge of each triangle until none remain: scan vertex triples
/// in lexicographic order and delete the lexicographically largest edge of
/// the first triangle found.
fn delete_triangles(g: &mut Graph) {
    loop {
        let Some((i, j, k)) = first_triangle(g) else {
            return;
        };
        // (j, k) is the lexicographically largest of the three edges.
        g.remove_edge(j, k);
        let _ = (i, j, k);
    }
}

fn first_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                continue;
            }
            let common = g.neighbors(i).intersection(g.neighbors(j));
            if let Some(k) = common.iter().find(|&k| k > j) {
                return Some((i, j, k));
            }
        }
    }
    None
}

/// Returns `G` plus one new vertex (index `n`, label `"u"`) adjacent to every
/// original vertex.
pub fn add_universal_vertex(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v).unwrap();
    }
    for v in 0..n {
        out.add_edge(v, n).unwrap();
    }
    out.labels = g.labels.clone();
    out.set_label(n, "u");
    out
}

/// Returns `H` plus every missing edge inside `N_H(x)` and inside `N_H(y)`,
/// so that both vertices become simplicial. The vertex set is unchanged.
pub fn simplicial_closure(h: &Graph, x: usize, y: usize) -> Result<Graph> {
    let n = h.n();
    if x >= n || y >= n {
        return Err(Error::usage(format!(
            "simplicial closure at ({x}, {y}) outside 0..{n}"
        )));
    }
    if x == y {
        return Err(Error::usage("simplicial closure needs two distinct vertices"));
    }
    let mut g = h.clone();
    for center in [x, y] {
        let nb: Vec<usize> = h.neighbors(center).iter().collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// Structural facts computed by breadth-first search per source.
#[derive(Clone, Debug)]
pub struct GraphFacts {
    pub is_bipartite: bool,
    pub is_triangle_free: bool,
    /// `None` when some pair of vertices is unreachable.
    pub diameter: Option<usize>,
    pub degrees: Vec<usize>,
    pub components: usize,
    pub distances: Vec<Vec<Option<usize>>>,
}

pub fn graph_facts(g: &Graph) -> GraphFacts {
    let n = g.n();
    let distances: Vec<Vec<Option<usize>>> = (0..n).map(|v| g.distances_from(v)).collect();

    let mut components = 0;
    let mut color = vec![None::<bool>; n];
    let mut is_bipartite = true;
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        components += 1;
        color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let cu = color[u].unwrap();
            for v in g.neighbors(u).iter() {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => is_bipartite = false,
                    _ => {}
                }
            }
        }
    }

    let is_triangle_free = first_triangle(g).is_none();

    let mut diameter = Some(0usize);
    'outer: for (u, row) in distances.iter().enumerate() {
        for entry in row.iter().skip(u + 1) {
            match entry {
                None => {
                    diameter = None;
                    break 'outer;
                }
                Some(d) => diameter = diameter.map(|cur| cur.max(*d)),
            }
        }
    }

    GraphFacts {
        is_bipartite,
        is_triangle_free,
        diameter,
        degrees: (0..n).map(|v| g.degree(v)).collect(),
        components,
        distances,
    }
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v`. Lines starting with `#` and blank lines are comments. Duplicate
/// edges collapse silently; self-loops and out-of-range endpoints are errors
/// naming the offending line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = significant
        .next()
        .ok_or_else(|| Error::parse(0, "missing header line `n m`"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(header_line, "expected header `n m`"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(header_line, "expected header `n m`"))?;
    if parts.next().is_some() {
        return Err(Error::parse(header_line, "trailing tokens after header `n m`"));
    }

    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line_no, line) in significant {
        if seen == m {
            return Err(Error::parse(line_no, format!("more than {m} edge lines")));
        }
        let mut it = line.split_whitespace();
        let parse_endpoint = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(line_no, "expected edge line `u v`"))
        };
        let u = parse_endpoint(it.next())?;
        let v = parse_endpoint(it.next())?;
        if it.next().is_some() {
            return Err(Error::parse(line_no, "trailing tokens after edge `u v`"));
        }
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex index {} out of range 0..{n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u, v).expect("validated edge");
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(0, format!("header promised {m} edges, found {seen}")));
    }
    Ok(g)
}

/// Emits the edge-list format accepted by [`parse_edge_list`]; labels go out
/// as `# label <vertex> <name>` comment lines after the edges.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    for (v, label) in g.labels() {
        out.push_str(&format!("# label {v} {label}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic_path() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.labels().is_empty());
    }

    #[test]
    fn parse_single_vertex() {
        let g = parse_edge_list("1 0").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let err = parse_edge_list("3 1\n0 3").unwrap_err();
        assert_eq!(err, Error::parse(2, "vertex index 3 out of range 0..3"));
    }

    #[test]
    fn parse_rejects_self_loop_and_bad_header() {
        assert!(matches!(
            parse_edge_list("3 1\n1 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list("x y"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_collapses_duplicates_and_skips_comments() {
        let g = parse_edge_list("# a comment\n3 3\n0 1\n1 0\n\n1 2").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn roundtrip_generated_families() {
        for family in [
            GraphFamily::Complete { n: 6 },
            GraphFamily::Cycle { n: 5 },
            GraphFamily::Path { n: 4 },
            GraphFamily::Wheel { n: 7 },
            GraphFamily::Star { n: 5 },
            GraphFamily::RandomTree { n: 9, seed: 3 },
            GraphFamily::Gnp { n: 8, p: 0.4, seed: 11 },
            GraphFamily::RandomTriangleFree { n: 8, p: 0.5, seed: 5 },
        ] {
            let g = generate(&family).unwrap();
            let back = parse_edge_list(&to_edge_list(&g)).unwrap();
            assert_eq!(g, back, "roundtrip failed for {family:?}");
        }
    }

    #[test]
    fn family_values() {
        assert_eq!(generate(&GraphFamily::Complete { n: 6 }).unwrap().edge_count(), 15);
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        assert_eq!(c5.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        // W_4 is K_4.
        let w4 = generate(&GraphFamily::Wheel { n: 4 }).unwrap();
        let k4 = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        assert_eq!(w4.edges(), k4.edges());
    }

    #[test]
    fn family_parameter_checks() {
        assert!(generate(&GraphFamily::Wheel { n: 3 }).is_err());
        assert!(generate(&GraphFamily::Cycle { n: 2 }).is_err());
        assert!(generate(&GraphFamily::Gnp { n: 4, p: 1.5, seed: 0 }).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        for family in [
            GraphFamily::RandomTree { n: 12, seed: 99 },
            GraphFamily::Gnp { n: 10, p: 0.33, seed: 7 },
            GraphFamily::RandomTriangleFree { n: 10, p: 0.6, seed: 7 },
        ] {
            assert_eq!(generate(&family).unwrap(), generate(&family).unwrap());
        }
    }

    #[test]
    fn random_tree_is_tree() {
        for seed in 0..20 {
            for n in 1..12 {
                let t = generate(&GraphFamily::RandomTree { n, seed }).unwrap();
                assert_eq!(t.edge_count(), n.saturating_sub(1));
                assert_eq!(graph_facts(&t).components, if n == 0 { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn triangle_free_generator_kills_all_triangles() {
        for seed in 0..10 {
            let g = generate(&GraphFamily::RandomTriangleFree { n: 10, p: 0.7, seed }).unwrap();
            assert!(graph_facts(&g).is_triangle_free, "seed {seed}");
        }
    }

    #[test]
    fn universal_vertex_examples() {
        // C_5 lifts to W_6.
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        let lifted = add_universal_vertex(&c5);
        let w6 = generate(&GraphFamily::Wheel { n: 6 }).unwrap();
        assert_eq!(lifted.edges(), w6.edges());
        assert_eq!(lifted.label(5), Some("u"));

        let k1 = generate(&GraphFamily::Complete { n: 1 }).unwrap();
        assert_eq!(add_universal_vertex(&k1).edges(), vec![(0, 1)]);

        let e3 = Graph::empty(3);
        let star = add_universal_vertex(&e3);
        assert_eq!(star.edges(), vec![(0, 3), (1, 3), (2, 3)]);
        // diameter <= 2 after the lift
        assert!(graph_facts(&star).diameter.unwrap() <= 2);
    }

    #[test]
    fn simplicial_closure_examples() {
        // P_4 endpoints have single neighbors: unchanged.
        let p4 = generate(&GraphFamily::Path { n: 4 }).unwrap();
        assert_eq!(simplicial_closure(&p4, 0, 3).unwrap(), p4);

        // Star with center 0: closing at two leaves changes nothing.
        let star = generate(&GraphFamily::Star { n: 4 }).unwrap();
        assert_eq!(simplicial_closure(&star, 1, 3).unwrap(), star);

        // C_4 at antipodal vertices adds exactly the one chord {1, 3}.
        let c4 = generate(&GraphFamily::Cycle { n: 4 }).unwrap();
        let closed = simplicial_closure(&c4, 0, 2).unwrap();
        let mut expect = c4.clone();
        expect.add_edge(1, 3).unwrap();
        assert_eq!(closed, expect);

        // Every pair of neighbors of x is now adjacent, same for y.
        for center in [0usize, 2] {
            let nb: Vec<usize> = closed.neighbors(center).iter().collect();
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    assert!(closed.has_edge(a, b));
                }
            }
        }

        assert!(simplicial_closure(&c4, 1, 1).is_err());
        assert!(simplicial_closure(&c4, 0, 9).is_err());
    }

    #[test]
    fn facts_examples() {
        let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
        let f = graph_facts(&c6);
        assert!(f.is_bipartite);
        assert!(f.is_triangle_free);
        assert_eq!(f.diameter, Some(3));
        assert_eq!(f.components, 1);

        let k4 = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        let f = graph_facts(&k4);
        assert!(!f.is_triangle_free);
        assert_eq!(f.diameter, Some(1));

        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let f = graph_facts(&two_edges);
        assert_eq!(f.components, 2);
        assert_eq!(f.diameter, None);
        assert_eq!(f.distances[0][2], None);
        assert_eq!(f.degrees, vec![1, 1, 1, 1]);
    }

    #[test]
    fn universal_vertex_forces_diameter_two() {
        for seed in 0..10 {
            let g = generate(&GraphFamily::Gnp { n: 7, p: 0.3, seed }).unwrap();
            let lifted = add_universal_vertex(&g);
            assert!(graph_facts(&lifted).diameter.unwrap() <= 2);
        }
    }

    #[test]
    fn wheel_equals_lifted_cycle() {
        for n in 4..10 {
            let wheel = generate(&GraphFamily::Wheel { n }).unwrap();
            let lifted = add_universal_vertex(&generate(&GraphFamily::Cycle { n: n - 1 }).unwrap());
            assert_eq!(wheel.edges(), lifted.edges());
        }
    }
}
