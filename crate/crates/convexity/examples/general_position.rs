//! General-position numbers across the convexities, the dissociation
//! specialization, and the XP decision procedure.
//!
//! ```bash
//! cargo run -p convexity --example general_position
//! ```

use convexity::engine::Engine;
use convexity::graph::{generate, GraphFamily};
use convexity::params::{dissociation_number, gp_decision_xp, gp_number, Caps};
use convexity::{ConvexityKind, VertexSet};

fn main() {
    let caps = Caps::default();

    println!("{:<10} {:>8} {:>10} {:>8} {:>8}", "graph", "geodesic", "monophonic", "p3", "p3star");
    for (name, family) in [
        ("K_6", GraphFamily::Complete { n: 6 }),
        ("C_8", GraphFamily::Cycle { n: 8 }),
        ("P_7", GraphFamily::Path { n: 7 }),
        ("W_4", GraphFamily::Wheel { n: 4 }),
        ("W_7", GraphFamily::Wheel { n: 7 }),
    ] {
        let g = generate(&family).unwrap();
        let value = |kind| gp_number(kind, &g, &caps).unwrap().value;
        println!(
            "{:<10} {:>8} {:>10} {:>8} {:>8}",
            name,
            value(ConvexityKind::Geodesic),
            value(ConvexityKind::Monophonic),
            value(ConvexityKind::P3),
            value(ConvexityKind::P3Star),
        );
    }

    // P3 general position is exactly the dissociation number.
    let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
    let diss = dissociation_number(&c6, &caps).unwrap();
    println!(
        "\ndiss(C_6) = {} with witness {:?} ({} branch nodes)",
        diss.value, diss.witness, diss.explored
    );

    // Decision form: is there a 4-set in general position? Witness included.
    match gp_decision_xp(ConvexityKind::P3, &c6, 4).unwrap() {
        Some(witness) => println!("gp_p3(C_6) >= 4 via {witness:?}"),
        None => println!("gp_p3(C_6) < 4"),
    }

    // A failed check names the violating triple.
    let w6 = generate(&GraphFamily::Wheel { n: 6 }).unwrap();
    let engine = Engine::new(ConvexityKind::Geodesic, &w6);
    let set = VertexSet::from_members(6, [0, 2, 5]);
    match engine.general_position_violation(&set).unwrap() {
        Some((x, y, z)) => println!("{set:?} fails in W_6: {z} lies in I({{{x}, {y}}})"),
        None => println!("{set:?} is in geodesic general position in W_6"),
    }
}
