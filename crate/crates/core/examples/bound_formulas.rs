//! The closed-form bounds for minor-free and (g, k)-planar graphs next to
//! measured values on a planar example.
//!
//! ```bash
//! cargo run -p copflip --example bound_formulas
//! ```

use copflip::bounds::{
    bound_cw_from_wcol, bound_cw_gkplanar, bound_cw_ktminor, bound_fw_from_cw_kttfree, bound_scol_gkplanar,
    bound_scol_ktminor,
};
use copflip::{copwidth_exact, generate, scol_exact, wcol_exact, Family, FamilySpec};

fn main() -> copflip::Result<()> {
    println!("{:>3} {:>3} {:>12} {:>12}", "t", "r", "scol bound", "cw bound");
    for t in 3..=6 {
        for r in [1, 2, 4] {
            println!("{t:>3} {r:>3} {:>12} {:>12}", bound_scol_ktminor(t, r)?, bound_cw_ktminor(t, r)?);
        }
    }
    println!(
        "\n(g, k)-planar, r = 1: scol <= {}, cw <= {}",
        bound_scol_gkplanar(0, 1, 1)?,
        bound_cw_gkplanar(0, 1, 1)?
    );
    println!("K_t minor bound at t = 2 is {}, reported as degenerate", bound_cw_ktminor(2, 1)?);

    let spec = FamilySpec::new(Family::Apollonian { n: 8 }).with_seed(7);
    let g = generate(&spec)?;
    let r = 1;
    let cw = copwidth_exact(&g, r)?.copwidth as u64;
    let scol = scol_exact(&g, 4 * r)?.value as u64;
    let wcol = wcol_exact(&g, 2 * r)?.value as u64;
    println!("\n{} (planar, so K_5-minor-free), r = {r}:", spec.id());
    println!("  cw = {cw} <= scol_4 = {scol} <= {}", bound_scol_ktminor(5, 4 * r as u64)?);
    println!("  cw <= wcol_2 + 1 = {}", bound_cw_from_wcol(wcol)?);
    println!("  cw <= K_5 bound {}", bound_cw_ktminor(5, r as u64)?);
    println!("  no K_{{3,3}} subgraph, so fw <= cw^3 = {}", bound_fw_from_cw_kttfree(cw, 3)?);
    Ok(())
}
