//! Preprocessing for "is there a P3 general-position set of size k": the
//! twin-class kernel and the vertex-cover kernel.
//!
//! ```bash
//! cargo run -p convexity --example kernelization
//! ```

use convexity::graph::{generate, GraphFamily};
use convexity::kernels::{
    nd_kernel, twin_partition, vc_kernel, vertex_cover_2approx, KernelOutcome,
};
use convexity::params::gp_decision_xp;
use convexity::ConvexityKind;

fn describe(outcome: &KernelOutcome) -> String {
    match outcome {
        KernelOutcome::Decided { answer, reason } => {
            format!("decided {}: {reason}", if *answer { "YES" } else { "NO" })
        }
        KernelOutcome::Reduced { graph, k, .. } => {
            format!("reduced to {} vertices (k = {k})", graph.n())
        }
    }
}

fn main() {
    // K_7: one clique twin class, shrunk to two vertices.
    let k7 = generate(&GraphFamily::Complete { n: 7 }).unwrap();
    let classes = twin_partition(&k7);
    println!("K_7 twin classes: {} (neighborhood diversity)", classes.len());
    println!("nd kernel at k=3: {}", describe(&nd_kernel(&k7, 3)));

    // Answer preservation, spelled out.
    if let KernelOutcome::Reduced { graph, k, .. } = nd_kernel(&k7, 3) {
        let before = gp_decision_xp(ConvexityKind::P3, &k7, 3).unwrap().is_some();
        let after = gp_decision_xp(ConvexityKind::P3, &graph, k).unwrap().is_some();
        println!("answer before = {before}, after = {after}");
    }

    // A star is decided by either kernel without any search.
    let star = generate(&GraphFamily::Star { n: 6 }).unwrap();
    println!("\nK_1,5 nd kernel at k=4: {}", describe(&nd_kernel(&star, 4)));
    println!("K_1,5 vc kernel at k=4: {}", describe(&vc_kernel(&star, 4)));
    println!(
        "greedy cover of K_1,5: {:?}",
        vertex_cover_2approx(&star)
    );

    // A denser random graph survives to the bounded instance.
    let g = generate(&GraphFamily::Gnp { n: 12, p: 0.5, seed: 5 }).unwrap();
    let nd = twin_partition(&g).len();
    println!("\nrandom G(12, .5): nd = {nd}");
    for k in [3usize, 4, 5] {
        println!("  nd kernel at k={k}: {}", describe(&nd_kernel(&g, k)));
        println!("  vc kernel at k={k}: {}", describe(&vc_kernel(&g, k)));
    }
}
