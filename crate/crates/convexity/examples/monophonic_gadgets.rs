//! The two monophonic constructions: the simplicial closure that turns an
//! induced-path query into a three-vertex general-position check, and the
//! anti-twin clique gadget whose value tracks the clique number.
//!
//! ```bash
//! cargo run -p convexity --example monophonic_gadgets
//! ```

use convexity::engine::{exists_induced_path_through, Engine};
use convexity::graph::{generate, simplicial_closure, Graph, GraphFamily};
use convexity::params::{clique_number, gp_number, Caps};
use convexity::reductions::{build_clique_gp_gadget, verify_simplicial_triple};
use convexity::{ConvexityKind, VertexSet};

fn main() {
    // C_4 with the query (x, y, z) = (0, 2, 3): the path 0-3-2 is chordless.
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    println!(
        "C_4, induced 0-2 path through 3 exists: {}",
        exists_induced_path_through(&c4, 0, 2, 3).unwrap()
    );

    let closed = simplicial_closure(&c4, 0, 2).unwrap();
    println!(
        "simplicial closure at (0, 2) adds {} edge(s): now {:?}",
        closed.edge_count() - c4.edge_count(),
        closed.edges()
    );
    let engine = Engine::new(ConvexityKind::Monophonic, &closed);
    let triple = VertexSet::from_members(4, [0, 2, 3]);
    println!(
        "{{0, 2, 3}} in general position after closure: {}",
        engine.is_general_position(&triple).unwrap()
    );
    let report = verify_simplicial_triple(&c4, 0, 2, 3).unwrap();
    println!("biconditional holds: {} [{} | {}]\n", report.holds, report.left, report.right);

    // Clique gadget: anti-twins u_i plus the apex u.
    for (name, h) in [
        ("P_3", generate(&GraphFamily::Path { n: 3 }).unwrap()),
        ("C_5", generate(&GraphFamily::Cycle { n: 5 }).unwrap()),
        ("W_5", generate(&GraphFamily::Wheel { n: 5 }).unwrap()),
    ] {
        let gadget = build_clique_gp_gadget(&h).unwrap();
        let gp = gp_number(ConvexityKind::Monophonic, &gadget.graph, &Caps::uniform(16))
            .unwrap()
            .value;
        println!(
            "{name}: omega = {}, gadget has {} vertices, gp_mc(gadget) = {gp}",
            clique_number(&h),
            gadget.graph.n()
        );
    }
}
