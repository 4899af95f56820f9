//! Checks every inequality on all labeled graphs with up to four vertices and
//! a few family members, then prints a summary and one report as JSON.
//!
//! ```bash
//! cargo run -p copflip --example corpus_verification
//! ```

use std::collections::BTreeMap;

use copflip::report::{to_json_lines, Status};
use copflip::{run_verification, Family, FamilySpec, VerifyConfig};

fn main() -> copflip::Result<()> {
    let config = VerifyConfig {
        labeled_max_n: Some(4),
        families: vec![
            FamilySpec::new(Family::Grid { rows: 2, cols: 3 }),
            FamilySpec::new(Family::Complete { n: 4 }),
            FamilySpec::new(Family::Apollonian { n: 7 }).with_seed(3),
        ],
        radii: vec![1, 2],
    };
    let reports = run_verification(&config)?;

    let mut tally: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for rep in &reports {
        for row in &rep.rows {
            let slot = match row.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::FormulaDegenerate => 2,
            };
            tally.entry(row.source).or_default()[slot] += 1;
        }
    }
    println!("{} reports", reports.len());
    println!("{:<48} {:>6} {:>6} {:>10}", "source", "pass", "fail", "degenerate");
    for (source, [pass, fail, degenerate]) in &tally {
        println!("{source:<48} {pass:>6} {fail:>6} {degenerate:>10}");
    }

    let grid = reports.iter().find(|r| r.graph_id.starts_with("grid")).expect("grid report");
    print!("\n{}", to_json_lines(std::slice::from_ref(grid)));
    Ok(())
}
