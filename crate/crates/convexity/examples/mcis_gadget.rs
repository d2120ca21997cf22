//! The multicolored-independent-set gadget: color classes become cliques,
//! one pendant u_i hangs off each class, and a multicolored independent set
//! exists exactly when some 2k vertices sit in P3 general position.
//!
//! ```bash
//! cargo run -p convexity --example mcis_gadget
//! ```

use convexity::graph::Graph;
use convexity::params::gp_decision_xp;
use convexity::reductions::{
    build_mcis_gp_gadget, multicolored_is_exists, verify_mcis_gadget, MulticoloredInstance,
};
use convexity::ConvexityKind;

fn main() {
    // Colors: {a=0, b=1} are color 1, {c=2} is color 2; one cross edge a-c.
    let g = Graph::from_edges(3, &[(0, 2)]).unwrap();
    let inst = MulticoloredInstance::new(g, vec![1, 1, 2], 2).unwrap();
    let gadget = build_mcis_gp_gadget(&inst);

    println!(
        "instance: 3 vertices, k = {}; gadget: {} vertices, target {}",
        inst.k(),
        gadget.graph.n(),
        gadget.target
    );
    println!("gadget edges: {:?}", gadget.graph.edges());

    match multicolored_is_exists(&inst) {
        Some(mis) => println!("multicolored independent set: {mis:?}"),
        None => println!("no multicolored independent set"),
    }
    match gp_decision_xp(ConvexityKind::P3, &gadget.graph, gadget.target).unwrap() {
        Some(w) => println!("general-position witness of size {}: {w:?}", gadget.target),
        None => println!("no general-position set of size {}", gadget.target),
    }

    // A negative instance: two singleton classes joined by an edge.
    let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let neg = MulticoloredInstance::new(g, vec![1, 2], 2).unwrap();
    let report = verify_mcis_gadget(&neg).unwrap();
    println!(
        "\nnegative instance: holds = {} [{} | {}]",
        report.holds, report.left, report.right
    );
}
