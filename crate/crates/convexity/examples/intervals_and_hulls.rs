//! The four interval functions side by side on one seed set, plus the hull
//! fixpoint they close into.
//!
//! ```bash
//! cargo run -p convexity --example intervals_and_hulls
//! ```

use convexity::engine::Engine;
use convexity::graph::{generate, GraphFamily};
use convexity::{ConvexityKind, VertexSet};

fn main() {
    // W_6: a 5-cycle 0..4 with hub 5.
    let wheel = generate(&GraphFamily::Wheel { n: 6 }).unwrap();
    let seed = VertexSet::from_members(6, [0, 2]);

    println!("graph: wheel on 6 vertices (hub = 5), seed S = {seed:?}\n");
    println!("{:<12} {:<22} {:<22} steps", "convexity", "I(S)", "hull(S)");
    for kind in ConvexityKind::ALL {
        let engine = Engine::new(kind, &wheel);
        let interval = engine.interval(&seed).unwrap();
        let trace = engine.iteration_trace(&seed).unwrap();
        println!(
            "{:<12} {:<22} {:<22} {}",
            kind.to_string(),
            format!("{interval:?}"),
            format!("{:?}", trace.hull),
            trace.steps
        );
    }

    // Convexity tests: the hull is always convex, the seed rarely is.
    let geo = Engine::new(ConvexityKind::Geodesic, &wheel);
    let hull = geo.hull(&seed).unwrap();
    println!("\nis_convex(S) = {}", geo.is_convex(&seed).unwrap());
    println!("is_convex(hull(S)) = {}", geo.is_convex(&hull).unwrap());

    // The monophonic engine answers chordless-path membership queries.
    let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
    let mono = Engine::new(ConvexityKind::Monophonic, &c6);
    println!(
        "\nC_6: I_mc({{0, 3}}) = {:?} (both arcs are induced paths)",
        mono.pair_interval(0, 3).unwrap()
    );
}
