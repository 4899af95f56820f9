//! Flip-width: exact values on tiny graphs, the isolating flip of a vertex
//! set, and the flipper strategy obtained by isolating the cops' positions.
//!
//! ```bash
//! cargo run -p copflip --example flip_width_lift
//! ```

use copflip::{
    apply_flip, flipwidth_exact, generate, isolating_flip, lift_cop_strategy, neighbourhood_diversity, pi_k,
    scol_exact, Family, FamilySpec, VertexSet,
};

fn main() -> copflip::Result<()> {
    for family in [Family::Complete { n: 5 }, Family::Path { n: 4 }, Family::Cycle { n: 5 }, Family::Path { n: 5 }] {
        let g = generate(&FamilySpec::new(family.clone()))?;
        match flipwidth_exact(&g, 1) {
            Ok(fw) => println!("{family}: fw_1 = {fw}"),
            Err(e) => println!("{family}: {e}"),
        }
    }

    let g = generate(&FamilySpec::new(Family::Grid { rows: 2, cols: 3 }))?;
    let s: VertexSet = [1, 4].into_iter().collect();
    let spec = isolating_flip(&g, s)?;
    let h = apply_flip(&g, &spec)?;
    println!(
        "\n2x3 grid: isolating {s:?} uses {} blocks (diversity {}), isolated now {:?}",
        spec.width(),
        neighbourhood_diversity(&g, s)?,
        h.isolated()
    );

    for r in [1, 2] {
        let ord = scol_exact(&g, 4 * r)?.order;
        let lift = lift_cop_strategy(&g, &ord, r)?;
        let k = lift.max_cops;
        println!(
            "lifted flipper, r = {r}: ok = {}, widest flip {}, cops {k}, pi({k}) + {k} = {}",
            lift.ok,
            lift.max_width,
            pi_k(&g, k)? + k
        );
    }
    Ok(())
}
