//! Kernelization for the P3 general-position decision problem: the
//! neighborhood-diversity kernel (shrink big clique twin classes, answer YES
//! on a big independent class) and the vertex-cover kernel built on a greedy
//! 2-approximate cover.

use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Clique,
    Independent,
}

/// A maximal twin class: identical open neighborhoods (independent class) or
/// identical closed neighborhoods (clique class). Singletons count as
/// independent.
#[derive(Clone, Debug)]
pub struct TwinClass {
    pub members: Vec<usize>,
    pub kind: ClassKind,
}

/// Canonical minimum twin partition, realized by grouping on open and closed
/// neighborhood keys. Classes come back sorted by their smallest member;
/// the class count is the neighborhood diversity of the graph.
pub fn twin_partition(g: &Graph) -> Vec<TwinClass> {
    let n = g.n();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();

    // False twins: identical open neighborhoods (necessarily non-adjacent).
    let mut open_groups: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
    for v in 0..n {
        open_groups.entry(g.neighbors(v).to_vec()).or_default().push(v);
    }
    for (_, group) in open_groups {
        if group.len() >= 2 {
            for &v in &group {
                assigned[v] = true;
            }
            classes.push(TwinClass {
                members: group,
                kind: ClassKind::Independent,
            });
        }
    }

    // True twins among the rest: identical closed neighborhoods.
    let mut closed_groups: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
    for v in (0..n).filter(|&v| !assigned[v]) {
        let mut key = g.neighbors(v).clone();
        key.insert(v);
        closed_groups.entry(key.to_vec()).or_default().push(v);
    }
    for (_, group) in closed_groups {
        let kind = if group.len() >= 2 {
            ClassKind::Clique
        } else {
            ClassKind::Independent
        };
        classes.push(TwinClass { members: group, kind });
    }

    classes.sort_by_key(|c| c.members[0]);
    classes
}

/// Outcome of a kernelization pass: either the answer is already decided, or
/// an equivalent reduced instance with a map back to original vertices.
#[derive(Clone, Debug)]
pub enum KernelOutcome {
    Decided { answer: bool, reason: String },
    Reduced { graph: Graph, origin: Vec<usize>, k: usize },
}

impl KernelOutcome {
    pub fn decided(&self) -> Option<bool> {
        match self {
            KernelOutcome::Decided { answer, .. } => Some(*answer),
            KernelOutcome::Reduced { .. } => None,
        }
    }
}

/// Neighborhood-diversity kernel for "is there a P3 general-position set of
/// size k". Any two vertices are in general position, so k <= 2 is decided
/// directly; an independent twin class of size >= k is an immediate YES; and
/// every clique class keeps only its two lowest-indexed vertices, bounding
/// the kernel by (class count) * (k-1) vertices.
pub fn nd_kernel(g: &Graph, k: usize) -> KernelOutcome {
    let n = g.n();
    if k <= 2 {
        return KernelOutcome::Decided {
            answer: n >= k,
            reason: format!("any {k} vertices are in general position; graph has {n}"),
        };
    }
    if k > n {
        return KernelOutcome::Decided {
            answer: false,
            reason: format!("graph has only {n} vertices"),
        };
    }
    let classes = twin_partition(g);
    for class in &classes {
        if class.kind == ClassKind::Independent && class.members.len() >= k {
            return KernelOutcome::Decided {
                answer: true,
                reason: format!(
                    "independent twin class of size {} >= k = {k}",
                    class.members.len()
                ),
            };
        }
    }
    let mut keep = VertexSet::empty(n);
    for class in &classes {
        match class.kind {
            ClassKind::Independent => {
                for &v in &class.members {
                    keep.insert(v);
                }
            }
            ClassKind::Clique => {
                for &v in class.members.iter().take(2) {
                    keep.insert(v);
                }
            }
        }
    }
    let (graph, origin) = g.induced_subgraph(&keep);
    KernelOutcome::Reduced { graph, origin, k }
}

/// Both endpoints of a greedily built maximal matching, scanning edges in
/// lexicographic order. Covers every edge and has size at most twice the
/// minimum vertex cover.
pub fn vertex_cover_2approx(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut cover = VertexSet::empty(n);
    for u in 0..n {
        if cover.contains(u) {
            continue;
        }
        if let Some(v) = g.neighbors(u).difference(&cover).iter().find(|&v| v > u) {
            cover.insert(u);
            cover.insert(v);
        }
    }
    cover
}

/// Vertex-cover kernel: with a 2-approximate cover S, any k vertices of the
/// independent complement are a YES witness; otherwise the instance already
/// satisfies |V| <= |S| + k - 1 and is returned unchanged.
pub fn vc_kernel(g: &Graph, k: usize) -> KernelOutcome {
    let n = g.n();
    if k <= 2 {
        return KernelOutcome::Decided {
            answer: n >= k,
            reason: format!("any {k} vertices are in general position; graph has {n}"),
        };
    }
    if k > n {
        return KernelOutcome::Decided {
            answer: false,
            reason: format!("graph has only {n} vertices"),
        };
    }
    let cover = vertex_cover_2approx(g);
    let outside = n - cover.len();
    if outside >= k {
        return KernelOutcome::Decided {
            answer: true,
            reason: format!("{outside} vertices outside the cover form an independent set"),
        };
    }
    KernelOutcome::Reduced {
        graph: g.clone(),
        origin: (0..n).collect(),
        k,
    }
}

/// Checks that a twin partition is internally consistent: every class is
/// complete or edgeless as tagged, and classes are pairwise uniformly
/// adjacent. Used by the verification suite.
pub fn twin_partition_is_valid(g: &Graph, classes: &[TwinClass]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    for class in classes {
        for &v in &class.members {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for (i, &a) in class.members.iter().enumerate() {
            for &b in class.members[i + 1..].iter() {
                let want = class.kind == ClassKind::Clique;
                if g.has_edge(a, b) != want {
                    return false;
                }
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    for (i, ca) in classes.iter().enumerate() {
        for cb in classes[i + 1..].iter() {
            let first = g.has_edge(ca.members[0], cb.members[0]);
            for &a in &ca.members {
                for &b in &cb.members {
                    if g.has_edge(a, b) != first {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphFamily};
    use crate::params::{dissociation_number, gp_decision_xp, Caps};
    use crate::ConvexityKind;

    #[test]
    fn twin_partition_examples() {
        let k5 = generate(&GraphFamily::Complete { n: 5 }).unwrap();
        let classes = twin_partition(&k5);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].kind, ClassKind::Clique);
        assert_eq!(classes[0].members, vec![0, 1, 2, 3, 4]);

        // Antipodal pairs of C_4 are false twins.
        let c4 = generate(&GraphFamily::Cycle { n: 4 }).unwrap();
        let classes = twin_partition(&c4);
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.kind == ClassKind::Independent));
        assert_eq!(classes[0].members, vec![0, 2]);
        assert_eq!(classes[1].members, vec![1, 3]);

        // All P_4 neighborhoods differ.
        let p4 = generate(&GraphFamily::Path { n: 4 }).unwrap();
        let classes = twin_partition(&p4);
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn twin_partition_validates_on_random_graphs() {
        for seed in 0..20 {
            let g = generate(&GraphFamily::Gnp { n: 10, p: 0.4, seed }).unwrap();
            let classes = twin_partition(&g);
            assert!(twin_partition_is_valid(&g, &classes), "seed {seed}");
        }
    }

    #[test]
    fn nd_kernel_examples() {
        // Empty graph on 5 vertices is one big independent class.
        let e5 = Graph::empty(5);
        assert_eq!(nd_kernel(&e5, 4).decided(), Some(true));

        // K_7 shrinks to K_2 and the NO answer is preserved.
        let k7 = generate(&GraphFamily::Complete { n: 7 }).unwrap();
        match nd_kernel(&k7, 3) {
            KernelOutcome::Reduced { graph, origin, k } => {
                assert_eq!(graph.n(), 2);
                assert_eq!(origin, vec![0, 1]);
                assert_eq!(k, 3);
                assert!(gp_decision_xp(ConvexityKind::P3, &graph, k).unwrap().is_none());
            }
            other => panic!("expected reduction, got {other:?}"),
        }
        assert!(gp_decision_xp(ConvexityKind::P3, &k7, 3).unwrap().is_none());

        // C_4 has no clique class above two vertices: unchanged, and the
        // answer for k=3 is NO on both sides (diss(C_4) = 2).
        let c4 = generate(&GraphFamily::Cycle { n: 4 }).unwrap();
        assert_eq!(dissociation_number(&c4, &Caps::default()).unwrap().value, 2);
        match nd_kernel(&c4, 3) {
            KernelOutcome::Reduced { graph, origin, .. } => {
                assert_eq!(graph.n(), 4);
                assert_eq!(origin, vec![0, 1, 2, 3]);
                assert!(gp_decision_xp(ConvexityKind::P3, &graph, 3).unwrap().is_none());
            }
            other => panic!("expected reduction, got {other:?}"),
        }
    }

    #[test]
    fn nd_kernel_small_k_short_circuit() {
        let g = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        assert_eq!(nd_kernel(&g, 0).decided(), Some(true));
        assert_eq!(nd_kernel(&g, 2).decided(), Some(true));
        assert_eq!(nd_kernel(&Graph::empty(1), 2).decided(), Some(false));
        assert_eq!(nd_kernel(&g, 9).decided(), Some(false));
    }

    #[test]
    fn nd_kernel_size_bound() {
        for seed in 0..20 {
            let g = generate(&GraphFamily::Gnp { n: 11, p: 0.5, seed }).unwrap();
            for k in 3..=5 {
                if let KernelOutcome::Reduced { graph, .. } = nd_kernel(&g, k) {
                    let nd = twin_partition(&g).len();
                    assert!(
                        graph.n() <= nd * (k - 1),
                        "seed {seed} k {k}: {} > {nd} * {}",
                        graph.n(),
                        k - 1
                    );
                }
            }
        }
    }

    #[test]
    fn cover_examples() {
        assert!(vertex_cover_2approx(&Graph::empty(4)).is_empty());

        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(vertex_cover_2approx(&edge).to_vec(), vec![0, 1]);

        // Star with center 0: the first matching edge takes the center and
        // one leaf.
        let star = generate(&GraphFamily::Star { n: 5 }).unwrap();
        assert_eq!(vertex_cover_2approx(&star).to_vec(), vec![0, 1]);
    }

    #[test]
    fn cover_covers_every_edge() {
        for seed in 0..20 {
            let g = generate(&GraphFamily::Gnp { n: 10, p: 0.3, seed }).unwrap();
            let cover = vertex_cover_2approx(&g);
            for (u, v) in g.edges() {
                assert!(cover.contains(u) || cover.contains(v));
            }
        }
    }

    #[test]
    fn vc_kernel_examples() {
        // K_{1,5}: four leaves survive outside the cover.
        let star = generate(&GraphFamily::Star { n: 6 }).unwrap();
        assert_eq!(vc_kernel(&star, 4).decided(), Some(true));

        // K_4 with k = 4: not decided; the certified bound holds.
        let k4 = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        match vc_kernel(&k4, 4) {
            KernelOutcome::Reduced { graph, k, .. } => {
                let cover = vertex_cover_2approx(&k4);
                assert!(graph.n() < cover.len() + k);
            }
            other => panic!("expected reduction, got {other:?}"),
        }

        // k beyond n is an immediate NO.
        let matching = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(vc_kernel(&matching, 7).decided(), Some(false));
    }
}
