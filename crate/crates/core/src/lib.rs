//! Strong colouring numbers, cop-width and flip-width on small graphs.
//!
//! The crate computes `scol_r` and `wcol_r` exactly, solves the radius-`r`
//! cop-width and flip-width games exactly on tiny graphs, synthesises the
//! order-guided cop strategy that wins with `max_v |R(v, 4r)|` cops, lifts it
//! to a flipper strategy via isolating flips, and checks the inequalities
//! between all of these on a corpus of graphs.
//!
//! Every graph has at most 64 vertices and vertex sets are bitmasks
//! ([`VertexSet`]). The exact solvers carry explicit size guards.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```bash
//! cargo run -p copflip --example colouring_numbers
//! cargo run -p copflip --example cop_width_game
//! cargo run -p copflip --example order_guided_strategy
//! cargo run -p copflip --example flip_width_lift
//! cargo run -p copflip --example bound_formulas
//! cargo run -p copflip --example corpus_verification
//! cargo run -p copflip --example generate_families
//! ```

pub mod bounds;
pub mod cli;
pub mod colouring;
pub mod cop_game;
pub mod error;
pub mod flip;
pub mod generators;
pub mod graph;
pub mod ordering;
pub mod report;
pub mod strategy;
pub mod vertex_set;

pub use colouring::{degeneracy, scol_bruteforce, scol_exact, scol_greedy, wcol_exact, OrderValue};
pub use cop_game::{copwidth_decide, copwidth_exact, copwidth_minimax, robber_moves, simulate};
pub use error::{Error, Result};
pub use flip::{
    apply_flip, enumerate_kflips, flipwidth_decide, flipwidth_exact, isolating_flip, lift_cop_strategy,
    neighbourhood_diversity, pi_k, FlipSpec, Partition,
};
pub use generators::{generate, Family, FamilySpec};
pub use graph::{enumerate_labeled_graphs, labeled_corpus, Graph};
pub use ordering::{order_cost_scol, order_cost_wcol, reach_m, reach_m_inclusive, reach_q, reach_r, VertexOrder};
pub use report::{run_verification, BoundReport, VerifyConfig};
pub use strategy::{check_invariants, next_cop_positions, play_strategy, verify_all_robbers};
pub use vertex_set::VertexSet;
