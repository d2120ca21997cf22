//! The four interval functions, convex-hull fixpoint, iteration traces and
//! the general-position predicate.
//!
//! An [`Engine`] binds one convexity to one graph. Geodesic engines hold the
//! all-pairs distance table computed once up front; geodesic and monophonic
//! pair intervals are memoized so hull iteration and the exact solvers never
//! answer the same pair query twice. The caches behave as if computed
//! eagerly: concurrent queries cannot change any result.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Selects the path family behind the interval function: shortest paths,
/// induced paths, paths on three vertices, or induced paths on three
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConvexityKind {
    Geodesic,
    Monophonic,
    P3,
    P3Star,
}

impl ConvexityKind {
    pub const ALL: [ConvexityKind; 4] = [
        ConvexityKind::Geodesic,
        ConvexityKind::Monophonic,
        ConvexityKind::P3,
        ConvexityKind::P3Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConvexityKind::Geodesic => "geodesic",
            ConvexityKind::Monophonic => "monophonic",
            ConvexityKind::P3 => "p3",
            ConvexityKind::P3Star => "p3star",
        }
    }
}

impl fmt::Display for ConvexityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConvexityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geodesic" => Ok(ConvexityKind::Geodesic),
            "monophonic" => Ok(ConvexityKind::Monophonic),
            "p3" => Ok(ConvexityKind::P3),
            "p3star" => Ok(ConvexityKind::P3Star),
            other => Err(Error::usage(format!(
                "unknown convexity `{other}` (expected geodesic, monophonic, p3 or p3star)"
            ))),
        }
    }
}

/// Per-vertex first-appearance times of the hull fixpoint iteration.
///
/// `time[v] == Some(0)` exactly for seed vertices, `Some(k)` when `v` first
/// appears in the k-th interval iterate, and `None` when `v` never enters
/// the hull. `steps` is the number of strictly growing iterations, i.e. the
/// iteration time of the seed.
#[derive(Clone, Debug)]
pub struct IterationTrace {
    pub seed: VertexSet,
    pub time: Vec<Option<usize>>,
    pub hull: VertexSet,
    pub steps: usize,
}

const INF: usize = usize::MAX;

/// Interval oracle for one `(kind, graph)` pair.
pub struct Engine<'g> {
    kind: ConvexityKind,
    graph: &'g Graph,
    dist: Option<Vec<Vec<usize>>>,
    pair_cache: Mutex<HashMap<(usize, usize), VertexSet>>,
}

impl<'g> Engine<'g> {
    pub fn new(kind: ConvexityKind, graph: &'g Graph) -> Self {
        let dist = (kind == ConvexityKind::Geodesic).then(|| {
            (0..graph.n())
                .map(|v| {
                    graph
                        .distances_from(v)
                        .into_iter()
                        .map(|d| d.unwrap_or(INF))
                        .collect()
                })
                .collect()
        });
        Engine {
            kind,
            graph,
            dist,
            pair_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn kind(&self) -> ConvexityKind {
        self.kind
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.graph.n() {
            return Err(Error::usage(format!(
                "vertex set over universe {} does not match graph on {} vertices",
                s.universe(),
                self.graph.n()
            )));
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.graph.n() {
            return Err(Error::usage(format!(
                "vertex {v} out of range 0..{}",
                self.graph.n()
            )));
        }
        Ok(())
    }

    /// One application of the interval function.
    pub fn interval(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let n = self.graph.n();
        let mut out = s.clone();
        match self.kind {
            ConvexityKind::P3 => {
                for z in 0..n {
                    if !s.contains(z) && self.graph.neighbors(z).intersection_len(s) >= 2 {
                        out.insert(z);
                    }
                }
            }
            ConvexityKind::P3Star => {
                for z in 0..n {
                    if !s.contains(z) && self.has_nonadjacent_pair(&self.graph.neighbors(z).intersection(s)) {
                        out.insert(z);
                    }
                }
            }
            ConvexityKind::Geodesic | ConvexityKind::Monophonic => {
                let members: Vec<usize> = s.iter().collect();
                for (i, &x) in members.iter().enumerate() {
                    for &y in &members[i + 1..] {
                        out.union_with(&self.pair_interval_cached(x, y));
                    }
                }
            }
        }
        Ok(out)
    }

    /// True when `t` contains two non-adjacent vertices.
    fn has_nonadjacent_pair(&self, t: &VertexSet) -> bool {
        for x in t.iter() {
            let mut rest = t.difference(self.graph.neighbors(x));
            rest.remove(x);
            if !rest.is_empty() {
                return true;
            }
        }
        false
    }

    /// Interval of the two-element set `{x, y}`.
    pub fn pair_interval(&self, x: usize, y: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::usage(format!("pair interval needs two distinct vertices, got {x} twice")));
        }
        Ok(self.pair_interval_cached(x, y))
    }

    /// Membership test `z in I({x, y})`; cheaper than materializing the set
    /// for the two local convexities.
    pub fn in_pair_interval(&self, x: usize, y: usize, z: usize) -> Result<bool> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        self.check_vertex(z)?;
        if x == y {
            return Err(Error::usage("pair interval needs two distinct vertices"));
        }
        if z == x || z == y {
            return Ok(true);
        }
        Ok(match self.kind {
            ConvexityKind::P3 => self.graph.has_edge(z, x) && self.graph.has_edge(z, y),
            ConvexityKind::P3Star => {
                self.graph.has_edge(z, x) && self.graph.has_edge(z, y) && !self.graph.has_edge(x, y)
            }
            ConvexityKind::Geodesic => {
                let d = self.dist.as_ref().expect("geodesic engine has distances");
                d[x][y] != INF && d[x][z] != INF && d[z][y] != INF && d[x][z] + d[z][y] == d[x][y]
            }
            ConvexityKind::Monophonic => self.pair_interval_cached(x, y).contains(z),
        })
    }

    fn pair_interval_cached(&self, x: usize, y: usize) -> VertexSet {
        let key = (x.min(y), x.max(y));
        match self.kind {
            ConvexityKind::P3 => {
                let mut out = self.graph.neighbors(x).intersection(self.graph.neighbors(y));
                out.insert(x);
                out.insert(y);
                out
            }
            ConvexityKind::P3Star => {
                let mut out = if self.graph.has_edge(x, y) {
                    VertexSet::empty(self.graph.n())
                } else {
                    self.graph.neighbors(x).intersection(self.graph.neighbors(y))
                };
                out.insert(x);
                out.insert(y);
                out
            }
            ConvexityKind::Geodesic => {
                if let Some(hit) = self.pair_cache.lock().unwrap().get(&key) {
                    return hit.clone();
                }
                let d = self.dist.as_ref().expect("geodesic engine has distances");
                let n = self.graph.n();
                let mut out = VertexSet::empty(n);
                out.insert(x);
                out.insert(y);
                if d[x][y] != INF {
                    for z in 0..n {
                        if d[x][z] != INF && d[z][y] != INF && d[x][z] + d[z][y] == d[x][y] {
                            out.insert(z);
                        }
                    }
                }
                self.pair_cache.lock().unwrap().insert(key, out.clone());
                out
            }
            ConvexityKind::Monophonic => {
                if let Some(hit) = self.pair_cache.lock().unwrap().get(&key) {
                    return hit.clone();
                }
                let n = self.graph.n();
                let mut out = VertexSet::empty(n);
                out.insert(x);
                out.insert(y);
                for z in 0..n {
                    if z != x && z != y && induced_path_search(self.graph, x, y, z) {
                        out.insert(z);
                    }
                }
                self.pair_cache.lock().unwrap().insert(key, out.clone());
                out
            }
        }
    }

    /// Least fixpoint of the interval function containing `s`.
    pub fn hull(&self, s: &VertexSet) -> Result<VertexSet> {
        Ok(self.iteration_trace(s)?.hull)
    }

    /// Iterates the interval function from `s` until it stops growing,
    /// recording when each vertex first appears.
    pub fn iteration_trace(&self, s: &VertexSet) -> Result<IterationTrace> {
        self.check_set(s)?;
        let n = self.graph.n();
        let mut time = vec![None; n];
        for v in s.iter() {
            time[v] = Some(0);
        }
        let mut current = s.clone();
        let mut steps = 0;
        loop {
            let next = self.interval(&current)?;
            if next == current {
                break;
            }
            steps += 1;
            for v in next.difference(&current).iter() {
                time[v] = Some(steps);
            }
            current = next;
        }
        Ok(IterationTrace {
            seed: s.clone(),
            time,
            hull: current,
            steps,
        })
    }

    pub fn is_convex(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.interval(s)? == *s)
    }

    /// Returns the first violating triple `(x, y, z)` with `z` strictly
    /// inside `I({x, y})`, scanning pairs in ascending order, or `None` when
    /// `s` is in general position.
    pub fn general_position_violation(&self, s: &VertexSet) -> Result<Option<(usize, usize, usize)>> {
        self.check_set(s)?;
        if s.len() <= 2 {
            return Ok(None);
        }
        let members: Vec<usize> = s.iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                let mut inside = self.pair_interval_cached(x, y).intersection(s);
                inside.remove(x);
                inside.remove(y);
                if let Some(z) = inside.min() {
                    return Ok(Some((x, y, z)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_general_position(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.general_position_violation(s)?.is_none())
    }
}

/// Decides whether some chordless path from `x` to `y` passes through `z`.
///
/// Exhaustive backtracking: a partial path extends only to vertices adjacent
/// to the current endpoint and non-adjacent to every earlier path vertex,
/// and a branch is pruned as soon as `y` (or `z`, while still off the path)
/// becomes unreachable from the endpoint once the closed neighborhoods of
/// the interior path vertices are deleted. Neighbors are visited in
/// ascending index order, so witnesses are reproducible.
pub fn exists_induced_path_through(g: &Graph, x: usize, y: usize, z: usize) -> Result<bool> {
    let n = g.n();
    for v in [x, y, z] {
        if v >= n {
            return Err(Error::usage(format!("vertex {v} out of range 0..{n}")));
        }
    }
    if x == y || x == z || y == z {
        return Err(Error::usage("induced path query needs three distinct vertices"));
    }
    Ok(induced_path_search(g, x, y, z))
}

fn induced_path_search(g: &Graph, x: usize, y: usize, z: usize) -> bool {
    let n = g.n();
    let mut on_path = VertexSet::empty(n);
    on_path.insert(x);
    // blocked = closed neighborhoods of interior path vertices (all but the
    // current endpoint): future vertices must avoid it.
    let blocked = VertexSet::empty(n);
    extend_path(g, x, y, z, &mut on_path, &blocked)
}

fn extend_path(
    g: &Graph,
    last: usize,
    y: usize,
    z: usize,
    on_path: &mut VertexSet,
    blocked: &VertexSet,
) -> bool {
    let n = g.n();
    // Candidates for any future vertex on this branch.
    let mut open = blocked.complement();
    open.difference_with(on_path);

    // Reachability pruning in the graph induced on the open vertices.
    let mut reached = VertexSet::empty(n);
    reached.insert(last);
    let mut frontier = vec![last];
    while let Some(u) = frontier.pop() {
        for w in g.neighbors(u).intersection(&open).iter() {
            if reached.insert(w) {
                frontier.push(w);
            }
        }
    }
    if !reached.contains(y) || (!on_path.contains(z) && !reached.contains(z)) {
        return false;
    }

    for w in g.neighbors(last).intersection(&open).iter() {
        if w == y {
            if on_path.contains(z) {
                return true;
            }
            continue;
        }
        // `last` becomes interior: its closed neighborhood now blocks.
        let mut next_blocked = blocked.clone();
        next_blocked.union_with(g.neighbors(last));
        next_blocked.insert(last);
        on_path.insert(w);
        let found = extend_path(g, w, y, z, on_path, &next_blocked);
        on_path.remove(w);
        if found {
            return true;
        }
    }
    false
}

/// Convenience wrappers constructing a transient [`Engine`].
pub fn interval(kind: ConvexityKind, g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    Engine::new(kind, g).interval(s)
}

pub fn pair_interval(kind: ConvexityKind, g: &Graph, x: usize, y: usize) -> Result<VertexSet> {
    Engine::new(kind, g).pair_interval(x, y)
}

pub fn hull(kind: ConvexityKind, g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    Engine::new(kind, g).hull(s)
}

pub fn iteration_trace(kind: ConvexityKind, g: &Graph, s: &VertexSet) -> Result<IterationTrace> {
    Engine::new(kind, g).iteration_trace(s)
}

pub fn is_convex(kind: ConvexityKind, g: &Graph, s: &VertexSet) -> Result<bool> {
    Engine::new(kind, g).is_convex(s)
}

pub fn is_general_position(kind: ConvexityKind, g: &Graph, s: &VertexSet) -> Result<bool> {
    Engine::new(kind, g).is_general_position(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphFamily};

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    #[test]
    fn monophonic_interval_spans_cycle() {
        // Two non-adjacent vertices of C_5 already generate all of it.
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        let iv = interval(ConvexityKind::Monophonic, &c5, &set(5, &[0, 2])).unwrap();
        assert_eq!(iv, VertexSet::full(5));
    }

    #[test]
    fn interval_of_empty_set_is_empty() {
        let g = generate(&GraphFamily::Wheel { n: 6 }).unwrap();
        for kind in ConvexityKind::ALL {
            assert!(interval(kind, &g, &VertexSet::empty(6)).unwrap().is_empty());
        }
    }

    #[test]
    fn p3_interval_on_star() {
        let star = generate(&GraphFamily::Star { n: 4 }).unwrap();
        let iv = interval(ConvexityKind::P3, &star, &set(4, &[1, 2])).unwrap();
        assert_eq!(iv, set(4, &[0, 1, 2]));
    }

    #[test]
    fn geodesic_interval_on_path() {
        // Unique shortest path between the endpoints of P_4.
        let p4 = generate(&GraphFamily::Path { n: 4 }).unwrap();
        let iv = interval(ConvexityKind::Geodesic, &p4, &set(4, &[0, 3])).unwrap();
        assert_eq!(iv, VertexSet::full(4));
    }

    #[test]
    fn pair_interval_examples() {
        let k5 = generate(&GraphFamily::Complete { n: 5 }).unwrap();
        assert_eq!(
            pair_interval(ConvexityKind::Monophonic, &k5, 1, 3).unwrap(),
            set(5, &[1, 3])
        );

        let c4 = generate(&GraphFamily::Cycle { n: 4 }).unwrap();
        assert_eq!(
            pair_interval(ConvexityKind::Geodesic, &c4, 0, 2).unwrap(),
            VertexSet::full(4)
        );

        let k3 = generate(&GraphFamily::Complete { n: 3 }).unwrap();
        assert_eq!(
            pair_interval(ConvexityKind::P3Star, &k3, 0, 1).unwrap(),
            set(3, &[0, 1])
        );

        assert!(pair_interval(ConvexityKind::P3, &k3, 1, 1).is_err());
    }

    #[test]
    fn induced_path_examples() {
        let p3 = generate(&GraphFamily::Path { n: 3 }).unwrap();
        assert!(exists_induced_path_through(&p3, 0, 2, 1).unwrap());

        let k3 = generate(&GraphFamily::Complete { n: 3 }).unwrap();
        assert!(!exists_induced_path_through(&k3, 0, 2, 1).unwrap());

        // C_4 as x-a-y-z-x: the path x-z-y is chordless.
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(exists_induced_path_through(&c4, 0, 2, 3).unwrap());

        assert!(exists_induced_path_through(&c4, 0, 0, 3).is_err());
    }

    #[test]
    fn mismatched_arguments_are_usage_errors() {
        let g = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        let engine = Engine::new(ConvexityKind::P3, &g);
        // Set built over the wrong universe.
        assert!(engine.interval(&VertexSet::empty(7)).is_err());
        assert!(engine.pair_interval(0, 9).is_err());
        assert!(engine.in_pair_interval(0, 1, 9).is_err());
        assert!(exists_induced_path_through(&g, 0, 1, 7).is_err());
    }

    #[test]
    fn disconnected_pairs_generate_nothing() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        for kind in ConvexityKind::ALL {
            assert_eq!(pair_interval(kind, &g, 0, 4).unwrap(), set(5, &[0, 4]));
        }
    }

    #[test]
    fn hull_examples() {
        let k5 = generate(&GraphFamily::Complete { n: 5 }).unwrap();
        assert_eq!(
            hull(ConvexityKind::P3, &k5, &set(5, &[0, 1])).unwrap(),
            VertexSet::full(5)
        );

        let g = generate(&GraphFamily::Wheel { n: 5 }).unwrap();
        for kind in ConvexityKind::ALL {
            assert_eq!(hull(kind, &g, &VertexSet::full(5)).unwrap(), VertexSet::full(5));
        }

        let p5 = generate(&GraphFamily::Path { n: 5 }).unwrap();
        assert_eq!(
            hull(ConvexityKind::Geodesic, &p5, &set(5, &[0, 4])).unwrap(),
            VertexSet::full(5)
        );
    }

    #[test]
    fn trace_examples() {
        let k5 = generate(&GraphFamily::Complete { n: 5 }).unwrap();
        let t = iteration_trace(ConvexityKind::P3, &k5, &set(5, &[0, 1])).unwrap();
        assert_eq!(t.steps, 1);
        assert_eq!(t.time[0], Some(0));
        assert_eq!(t.time[4], Some(1));

        // A convex seed has iteration time 0.
        let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
        let t = iteration_trace(ConvexityKind::Geodesic, &c6, &set(6, &[1])).unwrap();
        assert_eq!(t.steps, 0);

        // Two antipodal vertices of C_6 close in one step.
        let t = iteration_trace(ConvexityKind::Geodesic, &c6, &set(6, &[0, 3])).unwrap();
        assert_eq!(t.steps, 1);
        assert_eq!(t.hull, VertexSet::full(6));

        // Never-infected vertices report no time.
        let star = generate(&GraphFamily::Star { n: 4 }).unwrap();
        let t = iteration_trace(ConvexityKind::P3, &star, &set(4, &[1, 2])).unwrap();
        assert_eq!(t.time[3], None);
        assert_eq!(t.time[0], Some(1));
    }

    #[test]
    fn concurrent_queries_agree_with_sequential() {
        // The pair-interval cache must behave as if computed eagerly.
        let g = generate(&GraphFamily::Gnp { n: 9, p: 0.5, seed: 6 }).unwrap();
        for kind in [ConvexityKind::Geodesic, ConvexityKind::Monophonic] {
            let sequential: Vec<VertexSet> = {
                let e = Engine::new(kind, &g);
                (0..9)
                    .flat_map(|x| (x + 1..9).map(move |y| (x, y)))
                    .map(|(x, y)| e.pair_interval(x, y).unwrap())
                    .collect()
            };
            let shared = Engine::new(kind, &g);
            std::thread::scope(|scope| {
                let handles: Vec<_> = (0..4)
                    .map(|t| {
                        let shared = &shared;
                        scope.spawn(move || {
                            let mut idx = 0;
                            let mut out = Vec::new();
                            for x in 0..9 {
                                for y in x + 1..9 {
                                    if idx % 4 == t {
                                        out.push((idx, shared.pair_interval(x, y).unwrap()));
                                    }
                                    idx += 1;
                                }
                            }
                            out
                        })
                    })
                    .collect();
                for h in handles {
                    for (idx, iv) in h.join().unwrap() {
                        assert_eq!(iv, sequential[idx]);
                    }
                }
            });
        }
    }

    #[test]
    fn convexity_checks() {
        let g = generate(&GraphFamily::Gnp { n: 7, p: 0.4, seed: 2 }).unwrap();
        assert!(is_convex(ConvexityKind::P3, &g, &VertexSet::empty(7)).unwrap());

        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        assert!(!is_convex(ConvexityKind::Monophonic, &c5, &set(5, &[0, 2])).unwrap());

        // Every subset of a complete graph is geodesically convex.
        let k4 = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        for bits in 0..16u32 {
            let s = VertexSet::from_members(4, (0..4).filter(|&v| bits >> v & 1 == 1));
            assert!(is_convex(ConvexityKind::Geodesic, &k4, &s).unwrap());
        }
    }

    #[test]
    fn general_position_examples() {
        // Singletons are vacuously in general position.
        let g = generate(&GraphFamily::Gnp { n: 6, p: 0.5, seed: 3 }).unwrap();
        for kind in ConvexityKind::ALL {
            assert!(is_general_position(kind, &g, &set(6, &[2])).unwrap());
        }

        // Hub plus two adjacent rim vertices of W_6.
        let w6 = generate(&GraphFamily::Wheel { n: 6 }).unwrap();
        assert!(is_general_position(ConvexityKind::Monophonic, &w6, &set(6, &[0, 1, 5])).unwrap());

        // A set inducing max degree <= 1 is in P3 general position.
        let p4 = generate(&GraphFamily::Path { n: 4 }).unwrap();
        assert!(is_general_position(ConvexityKind::P3, &p4, &set(4, &[0, 1, 3])).unwrap());

        // Violation comes back with a witness triple.
        let e = Engine::new(ConvexityKind::Geodesic, &p4);
        let witness = e.general_position_violation(&set(4, &[0, 1, 3])).unwrap();
        assert_eq!(witness, Some((0, 3, 1)));
    }
}
