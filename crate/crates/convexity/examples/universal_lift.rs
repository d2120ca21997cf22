//! The universal-vertex lift: on triangle-free graphs it carries the P3
//! iteration time and general-position number into the geodesic convexity
//! of a diameter-two graph.
//!
//! ```bash
//! cargo run -p convexity --example universal_lift
//! ```

use convexity::graph::{add_universal_vertex, generate, graph_facts, GraphFamily};
use convexity::params::{clique_number, gp_number, iteration_time_graph, Caps};
use convexity::reductions::verify_universal_lift;
use convexity::ConvexityKind;

fn main() {
    let caps = Caps::default();

    // C_5 lifts to the wheel W_6.
    let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
    let lifted = add_universal_vertex(&c5);
    println!(
        "C_5 + universal vertex: {} vertices, diameter {:?}, hub label {:?}",
        lifted.n(),
        graph_facts(&lifted).diameter,
        lifted.label(5)
    );

    let ti_p3 = iteration_time_graph(ConvexityKind::P3, &c5, &caps).unwrap().value;
    let ti_geo = iteration_time_graph(ConvexityKind::Geodesic, &lifted, &caps).unwrap().value;
    let gp_p3 = gp_number(ConvexityKind::P3, &c5, &caps).unwrap().value;
    let gp_geo = gp_number(ConvexityKind::Geodesic, &lifted, &caps).unwrap().value;
    println!("ti_p3(C_5) = {ti_p3}, ti_gc(C_5 + u) = {ti_geo}");
    println!(
        "gp_p3(C_5) = {gp_p3}, omega(C_5) = {}, gp_gc(C_5 + u) = {gp_geo}",
        clique_number(&c5)
    );

    // The harness checks both identities on any triangle-free input.
    for seed in [1u64, 2, 3] {
        let g = generate(&GraphFamily::RandomTriangleFree { n: 8, p: 0.5, seed }).unwrap();
        let report = verify_universal_lift(&g, &caps).unwrap();
        println!(
            "random triangle-free (seed {seed}): holds = {} [{} | {}]",
            report.holds, report.left, report.right
        );
    }
}
