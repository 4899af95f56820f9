//! Builds one member of every family and prints its size and edge list;
//! seeded families reproduce exactly.
//!
//! ```bash
//! cargo run -p copflip --example generate_families
//! ```

use copflip::{generate, Family, FamilySpec};

fn main() -> copflip::Result<()> {
    let specs = [
        "path:5",
        "cycle:5",
        "complete:4",
        "complete-bipartite:2,3",
        "grid:2,3",
        "hypercube:3",
        "apollonian:6",
        "erdos-renyi:6,0.4",
    ];
    for text in specs {
        let spec = FamilySpec::new(text.parse::<Family>()?).with_seed(42);
        let g = generate(&spec)?;
        println!("{:<24} n = {:>2}, m = {:>2}, planar: {}", spec.id(), g.n(), g.edge_count(), spec.is_planar());
        assert_eq!(generate(&spec)?, g);
    }

    let g = generate(&FamilySpec::new("erdos-renyi:5,0.5".parse()?).with_seed(1))?;
    print!("\nerdos-renyi:5,0.5 with seed 1:\n{}", g.to_edge_list());
    Ok(())
}
