//! Iteration times: per-seed traces, the exact whole-graph maximum, the
//! closed-form family values, and the tree formula.
//!
//! ```bash
//! cargo run -p convexity --example iteration_time
//! ```

use convexity::engine::Engine;
use convexity::graph::{generate, Graph, GraphFamily};
use convexity::params::{
    closed_form, iteration_time_graph, tree_iteration_time_p3, Caps, ClosedFormParam,
};
use convexity::{ConvexityKind, VertexSet};

fn main() {
    let caps = Caps::default();

    // Per-seed trace on K_5: one round infects everything.
    let k5 = generate(&GraphFamily::Complete { n: 5 }).unwrap();
    let engine = Engine::new(ConvexityKind::P3, &k5);
    let trace = engine
        .iteration_trace(&VertexSet::from_members(5, [0, 1]))
        .unwrap();
    println!("K_5, P3 convexity, seed {{0, 1}}:");
    for v in 0..5 {
        println!("  vertex {v}: time {:?}", trace.time[v]);
    }
    println!("  steps = {}\n", trace.steps);

    // Whole-graph maxima vs the closed forms.
    println!("{:<10} {:<10} solver  table", "family", "convexity");
    for n in [5usize, 7] {
        for (family, g) in [
            (GraphFamily::Complete { n }, generate(&GraphFamily::Complete { n }).unwrap()),
            (GraphFamily::Cycle { n }, generate(&GraphFamily::Cycle { n }).unwrap()),
        ] {
            for kind in [ConvexityKind::P3, ConvexityKind::Geodesic, ConvexityKind::Monophonic] {
                let solved = iteration_time_graph(kind, &g, &caps).unwrap();
                let table = closed_form(kind, &family, ClosedFormParam::IterationTime).unwrap();
                println!(
                    "{:<10} {:<10} {:<7} {}",
                    format!("{}_{n}", family.tag()),
                    kind.to_string(),
                    solved.value,
                    table
                );
            }
        }
    }

    // The spider tree needs two rounds; the degree formula sees it without
    // enumerating seeds.
    let spider = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 1), (1, 4)]).unwrap();
    let report = iteration_time_graph(ConvexityKind::P3, &spider, &caps).unwrap();
    println!(
        "\nspider tree: exact ti = {} (witness seed {:?}, {} seeds explored)",
        report.value, report.witness, report.explored
    );
    println!("tree formula: {}", tree_iteration_time_p3(&spider).unwrap());
}
