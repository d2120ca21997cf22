//! Exact graph-level solvers: iteration time of a graph, general position
//! number, the dissociation specialization, the XP decision procedure, the
//! tree formula and the closed-form family oracles.
//!
//! Everything here enumerates deterministically, so witnesses are the first
//! maximizer in enumeration order and repeated runs agree bit for bit.

use std::time::{Duration, Instant};

use crate::engine::{ConvexityKind, Engine};
use crate::error::{Error, Result};
use crate::graph::{graph_facts, Graph, GraphFamily};
use crate::set::VertexSet;

/// Result of an exact search: the optimum, one witness attaining it, how
/// many candidates the search visited and how long it took.
#[derive(Clone, Debug)]
pub struct SolverReport {
    pub value: usize,
    pub witness: VertexSet,
    pub explored: u64,
    pub elapsed: Duration,
}

/// Exact-solver size caps. Exceeding a cap is a typed error, never a silent
/// truncation; callers may raise caps when they know what they are paying.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub ti: usize,
    pub ti_monophonic: usize,
    pub gp: usize,
    pub gp_monophonic: usize,
    pub dissociation: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ti: 16,
            ti_monophonic: 10,
            gp: 16,
            gp_monophonic: 12,
            dissociation: 24,
        }
    }
}

impl Caps {
    /// The same cap for every solver.
    pub fn uniform(cap: usize) -> Self {
        Caps {
            ti: cap,
            ti_monophonic: cap,
            gp: cap,
            gp_monophonic: cap,
            dissociation: cap,
        }
    }

    pub fn ti_cap(&self, kind: ConvexityKind) -> usize {
        match kind {
            ConvexityKind::Monophonic => self.ti_monophonic,
            _ => self.ti,
        }
    }

    pub fn gp_cap(&self, kind: ConvexityKind) -> usize {
        match kind {
            ConvexityKind::Monophonic => self.gp_monophonic,
            _ => self.gp,
        }
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::Infeasible { what, size: n, cap })
    } else {
        Ok(())
    }
}

/// Maximum iteration time over all `2^n` seed sets, found by exhausting the
/// seed space in reflected Gray-code order (successive seeds differ in one
/// vertex). The witness is the first maximizing seed in that order.
pub fn iteration_time_graph(kind: ConvexityKind, g: &Graph, caps: &Caps) -> Result<SolverReport> {
    let n = g.n();
    // The seed counter is a u64, so even a raised cap stops at 63 bits.
    check_cap("exact iteration-time solver", n, caps.ti_cap(kind).min(63))?;
    let start = Instant::now();
    let engine = Engine::new(kind, g);
    let mut best = 0usize;
    let mut witness = VertexSet::empty(n);
    let total: u64 = 1u64 << n;
    for i in 0..total {
        let gray = i ^ (i >> 1);
        let seed = VertexSet::from_members(n, (0..n).filter(|&v| gray >> v & 1 == 1));
        let steps = engine.iteration_trace(&seed)?.steps;
        if steps > best {
            best = steps;
            witness = seed;
        }
    }
    Ok(SolverReport {
        value: best,
        witness,
        explored: total,
        elapsed: start.elapsed(),
    })
}

/// Violating triples as sorted 3-sets, in lexicographic order. A vertex set
/// is in general position exactly when it contains none of them.
fn conflict_triples(engine: &Engine<'_>) -> Result<Vec<[usize; 3]>> {
    let n = engine.graph().n();
    let mut triples = std::collections::BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            let mut inside = engine.pair_interval(x, y)?;
            inside.remove(x);
            inside.remove(y);
            for z in inside.iter() {
                let mut t = [x, y, z];
                t.sort_unstable();
                triples.insert(t);
            }
        }
    }
    Ok(triples.into_iter().collect())
}

struct GpSearch<'a> {
    n: usize,
    triples: &'a [[usize; 3]],
    best: usize,
    best_set: VertexSet,
    explored: u64,
}

impl GpSearch<'_> {
    /// Branch and bound over the conflict triples: pick the first triple not
    /// yet hit by an excluded vertex and branch on which member to exclude.
    /// A greedy packing of disjoint unhit triples bounds how many exclusions
    /// are still owed.
    fn run(&mut self, excluded: &mut VertexSet, forced: &mut VertexSet, start: usize) {
        self.explored += 1;
        let available = self.n - excluded.len();
        if available <= self.best {
            return;
        }

        let mut first_unhit = None;
        let mut packing_marks = VertexSet::empty(self.n);
        let mut packing = 0usize;
        for (idx, t) in self.triples.iter().enumerate().skip(start) {
            if t.iter().any(|&v| excluded.contains(v)) {
                continue;
            }
            if t.iter().all(|&v| forced.contains(v)) {
                // Every member is pinned inside the solution: dead branch.
                return;
            }
            if first_unhit.is_none() {
                first_unhit = Some(idx);
            }
            if t.iter().all(|&v| !packing_marks.contains(v)) {
                packing += 1;
                for &v in t {
                    packing_marks.insert(v);
                }
            }
        }

        let Some(idx) = first_unhit else {
            // Feasible leaf: everything not excluded is in general position.
            if available > self.best {
                self.best = available;
                self.best_set = excluded.complement();
            }
            return;
        };
        if available - packing <= self.best {
            return;
        }

        let triple = self.triples[idx];
        let mut forced_here = Vec::new();
        for &v in &triple {
            if forced.contains(v) {
                continue;
            }
            excluded.insert(v);
            self.run(excluded, forced, idx);
            excluded.remove(v);
            forced.insert(v);
            forced_here.push(v);
        }
        for v in forced_here {
            forced.remove(v);
        }
    }
}

/// Largest general-position set, by branch and bound over the violating
/// triples with a greedy feasible solution as the initial lower bound.
pub fn gp_number(kind: ConvexityKind, g: &Graph, caps: &Caps) -> Result<SolverReport> {
    let n = g.n();
    check_cap("exact general-position solver", n, caps.gp_cap(kind))?;
    let start = Instant::now();
    let engine = Engine::new(kind, g);
    let triples = conflict_triples(&engine)?;

    // Greedy: take vertices in ascending order while no triple completes.
    let mut greedy = VertexSet::empty(n);
    for v in 0..n {
        greedy.insert(v);
        let bad = triples
            .iter()
            .any(|t| t.contains(&v) && t.iter().all(|&u| greedy.contains(u)));
        if bad {
            greedy.remove(v);
        }
    }

    let mut search = GpSearch {
        n,
        triples: &triples,
        best: greedy.len(),
        best_set: greedy,
        explored: 0,
    };
    let mut excluded = VertexSet::empty(n);
    let mut forced = VertexSet::empty(n);
    search.run(&mut excluded, &mut forced, 0);

    Ok(SolverReport {
        value: search.best,
        witness: search.best_set,
        explored: search.explored,
        elapsed: start.elapsed(),
    })
}

/// Dissociation number: the largest set inducing maximum degree at most 1.
/// Specialized branching: pick a residual vertex of degree >= 2 and branch
/// on excluding it, taking it alone, or taking it with one kept neighbor.
pub fn dissociation_number(g: &Graph, caps: &Caps) -> Result<SolverReport> {
    let n = g.n();
    check_cap("dissociation solver", n, caps.dissociation)?;
    let start = Instant::now();

    struct DissSearch<'a> {
        g: &'a Graph,
        best: usize,
        best_set: VertexSet,
        explored: u64,
    }

    impl DissSearch<'_> {
        fn run(&mut self, avail: &VertexSet, chosen: &mut VertexSet) {
            self.explored += 1;
            if chosen.len() + avail.len() <= self.best {
                return;
            }
            // Highest residual degree, ties to the lowest index.
            let mut pick = None;
            let mut pick_deg = 1usize;
            for v in avail.iter() {
                let d = self.g.neighbors(v).intersection_len(avail);
                if d > pick_deg {
                    pick = Some(v);
                    pick_deg = d;
                }
            }
            let Some(v) = pick else {
                // Residual graph has max degree <= 1: take everything.
                let total = chosen.len() + avail.len();
                if total > self.best {
                    self.best = total;
                    self.best_set = chosen.union(avail);
                }
                return;
            };

            // Branch 1: v excluded.
            let mut rest = avail.clone();
            rest.remove(v);
            self.run(&rest, chosen);

            // Branch 2: v chosen with no chosen neighbor.
            let mut without_nv = avail.clone();
            without_nv.difference_with(self.g.neighbors(v));
            without_nv.remove(v);
            chosen.insert(v);
            self.run(&without_nv, chosen);

            // Branch 3: v chosen together with one neighbor u.
            for u in self.g.neighbors(v).intersection(avail).iter() {
                let mut residual = without_nv.clone();
                residual.difference_with(self.g.neighbors(u));
                residual.remove(u);
                chosen.insert(u);
                self.run(&residual, chosen);
                chosen.remove(u);
            }
            chosen.remove(v);
        }
    }

    let mut search = DissSearch {
        g,
        best: 0,
        best_set: VertexSet::empty(n),
        explored: 0,
    };
    let mut chosen = VertexSet::empty(n);
    search.run(&VertexSet::full(n), &mut chosen);

    Ok(SolverReport {
        value: search.best,
        witness: search.best_set,
        explored: search.explored,
        elapsed: start.elapsed(),
    })
}

/// XP decision procedure: is there a k-subset in general position?
/// Enumerates k-subsets in lexicographic order, pruning a partial set as
/// soon as it completes a violating triple. Returns a witness on success.
pub fn gp_decision_xp(
    kind: ConvexityKind,
    g: &Graph,
    k: usize,
) -> Result<Option<VertexSet>> {
    let n = g.n();
    if k > n {
        return Ok(None);
    }
    let engine = Engine::new(kind, g);
    let mut partial: Vec<usize> = Vec::with_capacity(k);
    if extend_xp(&engine, k, 0, &mut partial)? {
        Ok(Some(VertexSet::from_members(n, partial.iter().copied())))
    } else {
        Ok(None)
    }
}

fn extend_xp(engine: &Engine<'_>, k: usize, from: usize, partial: &mut Vec<usize>) -> Result<bool> {
    if partial.len() == k {
        return Ok(true);
    }
    let n = engine.graph().n();
    // Not enough vertices left to finish.
    for v in from..n {
        if n - v < k - partial.len() {
            break;
        }
        if triple_compatible(engine, partial, v)? {
            partial.push(v);
            if extend_xp(engine, k, v + 1, partial)? {
                return Ok(true);
            }
            partial.pop();
        }
    }
    Ok(false)
}

/// True when adding `v` to `partial` completes no violating triple.
fn triple_compatible(engine: &Engine<'_>, partial: &[usize], v: usize) -> Result<bool> {
    for (i, &a) in partial.iter().enumerate() {
        for &b in &partial[i + 1..] {
            if engine.in_pair_interval(a, b, v)? {
                return Ok(false);
            }
        }
        for &b in partial {
            if b != a && engine.in_pair_interval(a, v, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Iteration time of a tree in the P3 convexity, read off the degree
/// structure: the longest path `v_1, ..., v_k` whose first k-1 vertices have
/// degree at least 3 and whose last vertex has degree at least 2. Checks
/// every one of the O(n^2) simple paths of the tree.
pub fn tree_iteration_time_p3(t: &Graph) -> Result<usize> {
    let n = t.n();
    if n < 3 {
        return Err(Error::usage(format!("tree formula needs n >= 3, got {n}")));
    }
    let facts = graph_facts(t);
    if facts.components != 1 || t.edge_count() != n - 1 {
        return Err(Error::usage("input graph is not a tree"));
    }

    let mut best = 0usize;
    for u in 0..n {
        // BFS parents rooted at u give the unique tree path to any w.
        let mut parent = vec![usize::MAX; n];
        parent[u] = u;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            for b in t.neighbors(a).iter() {
                if parent[b] == usize::MAX {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        for w in 0..n {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse(); // now u .. w
            let k = path.len();
            let ok = path[..k - 1].iter().all(|&v| t.degree(v) >= 3) && t.degree(path[k - 1]) >= 2;
            if ok && k > best {
                best = k;
            }
        }
    }
    Ok(best)
}

/// Which closed-form family value is requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormParam {
    /// Iteration time of the whole graph.
    IterationTime,
    /// Monophonic general-position number.
    GpMonophonic,
}

/// Exact family values used as independent oracles; `None` when the family,
/// range, or convexity is not covered.
pub fn closed_form(
    kind: ConvexityKind,
    family: &GraphFamily,
    param: ClosedFormParam,
) -> Option<usize> {
    let n = family.n();
    if n < 4 {
        return None;
    }
    match param {
        ClosedFormParam::IterationTime => match (family, kind) {
            (GraphFamily::Complete { .. }, ConvexityKind::P3) => Some(1),
            (GraphFamily::Complete { .. }, ConvexityKind::Geodesic)
            | (GraphFamily::Complete { .. }, ConvexityKind::Monophonic) => Some(0),
            (GraphFamily::Cycle { .. }, ConvexityKind::P3)
            | (GraphFamily::Cycle { .. }, ConvexityKind::Geodesic)
            | (GraphFamily::Cycle { .. }, ConvexityKind::Monophonic) => Some(1),
            _ => None,
        },
        ClosedFormParam::GpMonophonic => {
            if kind != ConvexityKind::Monophonic {
                return None;
            }
            match family {
                GraphFamily::Complete { .. } => Some(n),
                GraphFamily::Cycle { .. } | GraphFamily::Path { .. } => Some(2),
                GraphFamily::Wheel { .. } => Some(if n == 4 { 4 } else { 3 }),
                _ => None,
            }
        }
    }
}

/// Necessary condition for deep P3 iteration: when `ti(S) >= k`, the hull
/// subgraph contains a path of k vertices outside `S` whose first vertex
/// sees two seed vertices, whose first k-1 vertices have hull-degree >= 3
/// and whose last vertex has hull-degree >= 2.
pub fn growth_path_exists(g: &Graph, s: &VertexSet, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::usage("growth path length k must be at least 1"));
    }
    let engine = Engine::new(ConvexityKind::P3, g);
    let hull = engine.hull(s)?;
    let candidates = hull.difference(s);
    let hull_degree = |v: usize| g.neighbors(v).intersection_len(&hull);

    let degree_ok = |v: usize, pos: usize| {
        if pos < k {
            hull_degree(v) >= 3
        } else {
            hull_degree(v) >= 2
        }
    };

    fn dfs(
        g: &Graph,
        candidates: &VertexSet,
        degree_ok: &dyn Fn(usize, usize) -> bool,
        path: &mut VertexSet,
        last: usize,
        len: usize,
        k: usize,
    ) -> bool {
        if len == k {
            return true;
        }
        for w in g.neighbors(last).intersection(candidates).iter() {
            if path.contains(w) || !degree_ok(w, len + 1) {
                continue;
            }
            path.insert(w);
            if dfs(g, candidates, degree_ok, path, w, len + 1, k) {
                return true;
            }
            path.remove(w);
        }
        false
    }

    for v1 in candidates.iter() {
        if g.neighbors(v1).intersection_len(s) < 2 || !degree_ok(v1, 1) {
            continue;
        }
        if k == 1 {
            return Ok(true);
        }
        let mut path = VertexSet::empty(g.n());
        path.insert(v1);
        if dfs(g, &candidates, &degree_ok, &mut path, v1, 1, k) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Clique number by plain branch and bound; the brute-force side of the
/// gadget equivalence checks.
pub fn clique_number(g: &Graph) -> usize {
    fn extend(g: &Graph, cand: &VertexSet, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        if size + cand.len() <= *best {
            return;
        }
        let mut cand = cand.clone();
        while let Some(v) = cand.min() {
            cand.remove(v);
            if size + 1 + cand.len() <= *best {
                return;
            }
            extend(g, &cand.intersection(g.neighbors(v)), size + 1, best);
        }
    }
    let mut best = 0;
    extend(g, &VertexSet::full(g.n()), 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    /// The spider tree: v1 adjacent to {a, b, v2}, v2 adjacent to {c}.
    /// Vertices: 0=v1, 1=v2, 2=a, 3=b, 4=c.
    fn spider() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 1), (1, 4)]).unwrap()
    }

    #[test]
    fn iteration_time_examples() {
        let caps = Caps::default();
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        assert_eq!(iteration_time_graph(ConvexityKind::P3, &c5, &caps).unwrap().value, 1);

        let k1 = generate(&GraphFamily::Complete { n: 1 }).unwrap();
        assert_eq!(iteration_time_graph(ConvexityKind::P3, &k1, &caps).unwrap().value, 0);

        let spider = spider();
        let report = iteration_time_graph(ConvexityKind::P3, &spider, &caps).unwrap();
        assert_eq!(report.value, 2);
        assert_eq!(report.explored, 32);
        // The witness attains the value.
        let engine = Engine::new(ConvexityKind::P3, &spider);
        assert_eq!(engine.iteration_trace(&report.witness).unwrap().steps, 2);
    }

    #[test]
    fn iteration_time_respects_cap() {
        let g = generate(&GraphFamily::Cycle { n: 12 }).unwrap();
        let err = iteration_time_graph(ConvexityKind::Monophonic, &g, &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::Infeasible { cap: 10, size: 12, .. }));
    }

    #[test]
    fn gp_examples() {
        let caps = Caps::default();
        let w4 = generate(&GraphFamily::Wheel { n: 4 }).unwrap();
        assert_eq!(gp_number(ConvexityKind::Monophonic, &w4, &caps).unwrap().value, 4);
        let w7 = generate(&GraphFamily::Wheel { n: 7 }).unwrap();
        assert_eq!(gp_number(ConvexityKind::Monophonic, &w7, &caps).unwrap().value, 3);

        let k6 = generate(&GraphFamily::Complete { n: 6 }).unwrap();
        assert_eq!(gp_number(ConvexityKind::Monophonic, &k6, &caps).unwrap().value, 6);

        let p7 = generate(&GraphFamily::Path { n: 7 }).unwrap();
        assert_eq!(gp_number(ConvexityKind::Monophonic, &p7, &caps).unwrap().value, 2);
        let c8 = generate(&GraphFamily::Cycle { n: 8 }).unwrap();
        assert_eq!(gp_number(ConvexityKind::Monophonic, &c8, &caps).unwrap().value, 2);

        // n <= 2 is vacuous for every kind.
        let k2 = generate(&GraphFamily::Complete { n: 2 }).unwrap();
        for kind in ConvexityKind::ALL {
            assert_eq!(gp_number(kind, &k2, &caps).unwrap().value, 2);
        }
    }

    #[test]
    fn gp_witness_is_feasible() {
        let caps = Caps::default();
        for seed in 0..8 {
            let g = generate(&GraphFamily::Gnp { n: 8, p: 0.45, seed }).unwrap();
            for kind in ConvexityKind::ALL {
                let report = gp_number(kind, &g, &caps).unwrap();
                let engine = Engine::new(kind, &g);
                assert_eq!(report.witness.len(), report.value);
                assert!(engine.is_general_position(&report.witness).unwrap());
            }
        }
    }

    #[test]
    fn dissociation_examples() {
        let caps = Caps::default();
        let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
        let report = dissociation_number(&c6, &caps).unwrap();
        assert_eq!(report.value, 4);

        let empty5 = Graph::empty(5);
        assert_eq!(dissociation_number(&empty5, &caps).unwrap().value, 5);

        let k4 = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        assert_eq!(dissociation_number(&k4, &caps).unwrap().value, 2);
    }

    #[test]
    fn dissociation_matches_brute_force() {
        // Independent oracle: scan all subsets for max |S| with deg <= 1.
        let brute = |g: &Graph| -> usize {
            let n = g.n();
            (0u32..1 << n)
                .filter_map(|bits| {
                    let s = VertexSet::from_members(n, (0..n).filter(|&v| bits >> v & 1 == 1));
                    s.iter()
                        .all(|v| g.neighbors(v).intersection_len(&s) <= 1)
                        .then(|| s.len())
                })
                .max()
                .unwrap()
        };
        let caps = Caps::default();
        for seed in 0..12 {
            let g = generate(&GraphFamily::Gnp { n: 9, p: 0.35, seed }).unwrap();
            let report = dissociation_number(&g, &caps).unwrap();
            assert_eq!(report.value, brute(&g), "seed {seed}");
            // Witness induces max degree <= 1.
            assert!(report
                .witness
                .iter()
                .all(|v| g.neighbors(v).intersection_len(&report.witness) <= 1));
        }
    }

    #[test]
    fn dissociation_equals_p3_gp() {
        let caps = Caps::default();
        for seed in 0..10 {
            let g = generate(&GraphFamily::Gnp { n: 8, p: 0.4, seed }).unwrap();
            assert_eq!(
                dissociation_number(&g, &caps).unwrap().value,
                gp_number(ConvexityKind::P3, &g, &caps).unwrap().value
            );
        }
    }

    #[test]
    fn xp_examples() {
        let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
        let witness = gp_decision_xp(ConvexityKind::P3, &c6, 4).unwrap();
        assert!(witness.is_some());
        assert_eq!(witness.unwrap().len(), 4);

        let g = generate(&GraphFamily::Gnp { n: 5, p: 0.5, seed: 1 }).unwrap();
        for kind in ConvexityKind::ALL {
            assert!(gp_decision_xp(kind, &g, 0).unwrap().is_some());
        }

        let c8 = generate(&GraphFamily::Cycle { n: 8 }).unwrap();
        assert!(gp_decision_xp(ConvexityKind::Monophonic, &c8, 3).unwrap().is_none());

        assert!(gp_decision_xp(ConvexityKind::P3, &c8, 9).unwrap().is_none());
    }

    #[test]
    fn tree_formula_examples() {
        let star = generate(&GraphFamily::Star { n: 4 }).unwrap();
        assert_eq!(tree_iteration_time_p3(&star).unwrap(), 1);

        let p5 = generate(&GraphFamily::Path { n: 5 }).unwrap();
        assert_eq!(tree_iteration_time_p3(&p5).unwrap(), 1);

        assert_eq!(tree_iteration_time_p3(&spider()).unwrap(), 2);

        let c4 = generate(&GraphFamily::Cycle { n: 4 }).unwrap();
        assert!(tree_iteration_time_p3(&c4).is_err());
        assert!(tree_iteration_time_p3(&Graph::empty(4)).is_err());
    }

    #[test]
    fn tree_formula_matches_exact_solver() {
        let caps = Caps::default();
        for seed in 0..15 {
            let t = generate(&GraphFamily::RandomTree { n: 3 + (seed as usize % 8), seed }).unwrap();
            assert_eq!(
                tree_iteration_time_p3(&t).unwrap(),
                iteration_time_graph(ConvexityKind::P3, &t, &caps).unwrap().value,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn closed_form_examples() {
        use ClosedFormParam::*;
        assert_eq!(
            closed_form(ConvexityKind::Geodesic, &GraphFamily::Complete { n: 9 }, IterationTime),
            Some(0)
        );
        assert_eq!(
            closed_form(ConvexityKind::Monophonic, &GraphFamily::Wheel { n: 4 }, GpMonophonic),
            Some(4)
        );
        assert_eq!(
            closed_form(ConvexityKind::P3, &GraphFamily::Cycle { n: 4 }, IterationTime),
            Some(1)
        );
        // Out of covered range or kind.
        assert_eq!(
            closed_form(ConvexityKind::P3, &GraphFamily::Cycle { n: 3 }, IterationTime),
            None
        );
        assert_eq!(
            closed_form(ConvexityKind::P3Star, &GraphFamily::Complete { n: 5 }, IterationTime),
            None
        );
        assert_eq!(
            closed_form(ConvexityKind::P3, &GraphFamily::Path { n: 6 }, GpMonophonic),
            None
        );
    }

    #[test]
    fn growth_path_examples() {
        let sp = spider();
        // S = {a, b, c}
        assert!(growth_path_exists(&sp, &set(5, &[2, 3, 4]), 2).unwrap());

        // Convex seeds leave nothing outside S.
        let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
        assert!(!growth_path_exists(&c6, &set(6, &[0, 1]), 1).unwrap());

        let k4 = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        assert!(growth_path_exists(&k4, &set(4, &[0, 1]), 1).unwrap());

        assert!(growth_path_exists(&k4, &set(4, &[0, 1]), 0).is_err());
    }

    #[test]
    fn growth_path_is_necessary_for_deep_iteration() {
        for seed in 0..20 {
            let g = generate(&GraphFamily::Gnp { n: 8, p: 0.3, seed }).unwrap();
            let engine = Engine::new(ConvexityKind::P3, &g);
            for bits in (0..256u32).step_by(7) {
                let s = VertexSet::from_members(8, (0..8).filter(|&v| bits >> v & 1 == 1));
                let steps = engine.iteration_trace(&s).unwrap().steps;
                for k in 1..=steps {
                    assert!(growth_path_exists(&g, &s, k).unwrap(), "seed {seed} bits {bits} k {k}");
                }
            }
        }
    }

    #[test]
    fn clique_number_on_families() {
        assert_eq!(clique_number(&generate(&GraphFamily::Complete { n: 7 }).unwrap()), 7);
        assert_eq!(clique_number(&generate(&GraphFamily::Cycle { n: 6 }).unwrap()), 2);
        assert_eq!(clique_number(&generate(&GraphFamily::Wheel { n: 5 }).unwrap()), 3);
        assert_eq!(clique_number(&Graph::empty(4)), 1);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
    }
}
