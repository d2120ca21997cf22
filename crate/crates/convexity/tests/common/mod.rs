//! Shared test oracles, kept independent of the library's search paths.

use convexity::Graph;

/// Every simple path from `x` to `y`, by plain DFS enumeration.
pub fn all_simple_paths(g: &Graph, x: usize, y: usize) -> Vec<Vec<usize>> {
    fn dfs(g: &Graph, y: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == y {
            out.push(path.clone());
            return;
        }
        for w in g.neighbors(last).iter() {
            if !path.contains(&w) {
                path.push(w);
                dfs(g, y, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    dfs(g, y, &mut vec![x], &mut out);
    out
}

/// True when the path has no chord: the only adjacent path vertices are
/// consecutive ones.
pub fn is_chordless(g: &Graph, path: &[usize]) -> bool {
    for (i, &a) in path.iter().enumerate() {
        for (j, &b) in path.iter().enumerate().skip(i + 2) {
            let _ = j;
            if g.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}

/// Independent oracle for the chordless-path membership question: does some
/// induced x-y path contain z as an internal vertex?
pub fn induced_path_through_oracle(g: &Graph, x: usize, y: usize, z: usize) -> bool {
    all_simple_paths(g, x, y)
        .iter()
        .any(|p| p.len() >= 3 && p[1..p.len() - 1].contains(&z) && is_chordless(g, p))
}
