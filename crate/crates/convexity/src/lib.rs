//! Exact, desk-scale toolkit for graph convexity parameters.
//!
//! Four path convexities are supported end to end — geodesic (shortest
//! paths), monophonic (induced paths), P3 (paths on three vertices) and P3*
//! (induced paths on three vertices):
//!
//! - [`engine`]: interval functions, convex-hull fixpoints, per-vertex
//!   iteration traces, convexity and general-position predicates, and the
//!   chordless-path membership oracle.
//! - [`params`]: exact solvers for the iteration time of a graph and the
//!   general position number, a specialized dissociation-number branch and
//!   bound, the XP subset-enumeration decision, the tree formula for P3
//!   iteration time, and closed-form family oracles.
//! - [`reductions`]: executable hardness gadgets (3-SAT to P3 iteration
//!   time, Clique to monophonic general position, Multicolored Independent
//!   Set to P3 general position, and the simplicial closure), with
//!   brute-force equivalence harnesses.
//! - [`kernels`]: twin-class and vertex-cover kernelization for the P3
//!   general-position decision problem.
//! - [`suites`]: seeded verification suites tying everything together.
//! - [`cli`]: the `convexity` binary (`compute`, `reduce`, `verify`,
//!   `generate`, `kernel`).
//!
//! ## Runnable examples
//!
//! One example per capability lives in `examples/`:
//!
//! ```text
//! cargo run -p convexity --example intervals_and_hulls
//! cargo run -p convexity --example iteration_time
//! cargo run -p convexity --example general_position
//! cargo run -p convexity --example universal_lift
//! cargo run -p convexity --example sat_gadget
//! cargo run -p convexity --example monophonic_gadgets
//! cargo run -p convexity --example mcis_gadget
//! cargo run -p convexity --example kernelization
//! ```
//!
//! Everything is deterministic: generators and suites are seeded, solvers
//! enumerate in fixed orders, and witnesses are the first maximizer in
//! enumeration order.

pub mod cli;
pub mod engine;
pub mod error;
pub mod graph;
pub mod kernels;
pub mod params;
pub mod reductions;
pub mod set;
pub mod suites;

pub use engine::{ConvexityKind, Engine, IterationTrace};
pub use error::{Error, Result};
pub use graph::{Graph, GraphFacts, GraphFamily};
pub use params::{Caps, ClosedFormParam, SolverReport};
pub use set::VertexSet;
