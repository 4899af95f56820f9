//! The cop strategy driven by a vertex order: in round i the cops sit on the
//! M-set of the i-th vertex and the robber's last position. Plays it against
//! one robber with a full trace, then against every robber.
//!
//! ```bash
//! cargo run -p copflip --example order_guided_strategy
//! ```

use copflip::cop_game::FleeingRobber;
use copflip::{check_invariants, generate, play_strategy, scol_exact, verify_all_robbers, Family, FamilySpec};

fn main() -> copflip::Result<()> {
    let g = generate(&FamilySpec::new(Family::Grid { rows: 3, cols: 3 }))?;
    let r = 1;
    let witness = scol_exact(&g, 4 * r)?;
    println!("3x3 grid, r = {r}; scol_4 = {}, order {}", witness.value, witness.order.to_line());

    let trace = play_strategy(&g, &witness.order, r, &mut FleeingRobber::new(&g, 8))?;
    for round in &trace {
        println!(
            "  round {}: threshold {}, cops {:?} (grounded {:?}), robber {} via {:?}",
            round.round, round.threshold, round.cops, round.grounded, round.robber, round.path
        );
    }
    let report = check_invariants(&g, &witness.order, r, &trace)?;
    println!("invariants hold: {}, captured in round {:?}", report.passed(), report.captured_at);

    for r in [1, 2] {
        let w = scol_exact(&g, 4 * r)?;
        let v = verify_all_robbers(&g, &w.order, r)?;
        println!(
            "every robber, r = {r}: ok = {}, max cops {} (budget {}), worst capture round {}",
            v.ok, v.max_cops, v.cop_budget, v.rounds_worst_case
        );
    }
    Ok(())
}
