//! The 3-SAT iteration-time gadget: build it from a DIMACS formula, derive
//! the witness seed from a satisfying assignment, and watch the clause
//! chain light up at times 1, 2, ..., 2m while the guard vertices stay out.
//!
//! ```bash
//! cargo run -p convexity --example sat_gadget
//! ```

use convexity::engine::Engine;
use convexity::graph::graph_facts;
use convexity::reductions::{
    build_sat_iteration_gadget, sat_witness_seed, verify_sat_forward, CnfFormula,
};
use convexity::ConvexityKind;

fn main() {
    let dimacs = "c (x1 | ~x2 | x3) & (~x1 | x2 | x4) & (~x3 | ~x4 | x2)\n\
                  p cnf 4 3\n1 -2 3 0\n-1 2 4 0\n-3 -4 2 0\n";
    let formula = CnfFormula::parse_dimacs(dimacs).unwrap();
    let gadget = build_sat_iteration_gadget(&formula);
    let g = &gadget.out.graph;

    println!(
        "formula: {} variables, {} clauses -> gadget with {} vertices, {} edges",
        formula.num_vars(),
        formula.num_clauses(),
        g.n(),
        g.edge_count()
    );
    println!(
        "bipartite: {}, target threshold: {}",
        graph_facts(g).is_bipartite,
        gadget.out.target
    );

    let assignment = vec![true, true, false, false];
    assert!(formula.satisfied(&assignment));
    let seed = sat_witness_seed(&gadget, &assignment).unwrap();
    println!("\nwitness seed (x = TTFF): {seed:?}");
    for v in seed.iter() {
        println!("  {v} = {}", g.label(v).unwrap_or("?"));
    }

    let trace = Engine::new(ConvexityKind::P3, g).iteration_trace(&seed).unwrap();
    println!("\nclause chain times:");
    for i in 1..=formula.num_clauses() {
        let cp = gadget.out.role(&format!("c'_{i}")).unwrap();
        let c = gadget.out.role(&format!("c_{i}")).unwrap();
        println!(
            "  c'_{i} at {:?}, c_{i} at {:?}",
            trace.time[cp], trace.time[c]
        );
    }
    println!("steps = {} (threshold {})", trace.steps, gadget.out.target);

    let report = verify_sat_forward(&gadget, &assignment).unwrap();
    println!(
        "forward check: {}",
        if report.pass() { "pass".into() } else { format!("fail: {:?}", report.failure) }
    );
}
