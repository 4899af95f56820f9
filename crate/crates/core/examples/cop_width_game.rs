//! Solves the cop-width game exactly and replays the winning certificate
//! against a robber that runs away from the announced cops.
//!
//! ```bash
//! cargo run -p copflip --example cop_width_game
//! ```

use copflip::cop_game::{FleeingRobber, Outcome, Rules};
use copflip::{copwidth_decide, copwidth_exact, generate, simulate, Family, FamilySpec};

fn main() -> copflip::Result<()> {
    for family in [Family::Cycle { n: 6 }, Family::Grid { rows: 2, cols: 4 }, Family::Path { n: 7 }] {
        let g = generate(&FamilySpec::new(family.clone()))?;
        for r in [1, 2] {
            let cw = copwidth_exact(&g, r)?;
            println!("{family}: cw_{r} = {} ({} states)", cw.copwidth, cw.states_explored);
        }
    }

    let g = generate(&FamilySpec::new(Family::Cycle { n: 6 }))?;
    let r = 1;
    let k = copwidth_exact(&g, r)?.copwidth;
    let losing = copwidth_decide(&g, r, k - 1)?;
    assert!(!losing.cops_win);

    let win = copwidth_decide(&g, r, k)?;
    println!("\nC6, r = {r}: {k} cops win, {} certificate entries", win.certificate.len());
    println!("certificate captures within {} rounds", win.certificate.worst_case_rounds(&g, r)?);

    let mut cops = win.certificate.clone();
    let mut robber = FleeingRobber::new(&g, 3);
    let trace = simulate(&g, Rules { radius: r, width: k }, &mut cops, &mut robber, 20)?;
    for round in &trace.rounds {
        println!(
            "  round {}: cops announce {:?}, grounded {:?}, robber runs {:?}",
            round.round, round.announced, round.grounded, round.path
        );
    }
    match trace.outcome {
        Outcome::Captured { round } => println!("robber caught in round {round}"),
        Outcome::Survived => println!("robber survived"),
    }
    Ok(())
}
