//! Strong and weak colouring numbers of a few small graphs, exact and greedy.
//!
//! ```bash
//! cargo run -p copflip --example colouring_numbers
//! ```

use copflip::{
    degeneracy, generate, order_cost_scol, reach_q, reach_r, scol_exact, scol_greedy, wcol_exact, Family, FamilySpec,
};

fn main() -> copflip::Result<()> {
    let graphs = [
        Family::Path { n: 6 },
        Family::Cycle { n: 7 },
        Family::Grid { rows: 2, cols: 4 },
        Family::Complete { n: 5 },
        Family::Hypercube { dim: 3 },
    ];
    println!("{:<10} {:>4} {:>7} {:>7} {:>7} {:>7} {:>9}", "graph", "r", "scol", "greedy", "wcol", "degen", "scol_1");
    for family in graphs {
        let g = generate(&FamilySpec::new(family.clone()))?;
        for r in [1, 2, 4] {
            let exact = scol_exact(&g, r)?;
            let greedy = scol_greedy(&g, r)?;
            let weak = wcol_exact(&g, r)?;
            println!(
                "{:<10} {:>4} {:>7} {:>7} {:>7} {:>7} {:>9}",
                family.to_string(),
                r,
                exact.value,
                greedy.value,
                weak.value,
                degeneracy(&g).value,
                scol_exact(&g, 1)?.value,
            );
        }
    }

    // What the witness order looks like on the 3x3 grid.
    let g = generate(&FamilySpec::new(Family::Grid { rows: 3, cols: 3 }))?;
    let w = scol_exact(&g, 2)?;
    println!("\n3x3 grid, r = 2, optimal order: {}", w.order.to_line());
    for v in w.order.as_slice() {
        let strong = reach_r(&g, &w.order, *v, 2)?;
        let weak = reach_q(&g, &w.order, *v, 2)?;
        println!("  vertex {v}: R = {strong:?}, Q = {weak:?}");
    }
    assert_eq!(order_cost_scol(&g, &w.order, 2)?, w.value);
    Ok(())
}
