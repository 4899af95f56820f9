//! Command-line front end. Exit codes: 0 success, 1 a checked inequality or
//! strategy failed, 2 usage or input error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds;
use crate::colouring::{scol_exact, scol_greedy, wcol_exact};
use crate::cop_game::{copwidth_decide, copwidth_exact};
use crate::error::{Error, Result};
use crate::flip::{flipwidth_decide, flipwidth_exact, lift_cop_strategy};
use crate::generators::{generate, Family, FamilySpec};
use crate::graph::Graph;
use crate::ordering::VertexOrder;
use crate::report::{run_verification, to_csv, to_json_lines, VerifyConfig};
use crate::strategy::verify_all_robbers;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "copflip", version, about = "Colouring numbers, cop-width and flip-width on small graphs")]
struct Cli {
    /// Edge-list input file, or `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// Emit JSON where a command has a plain-text form.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random families.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph family member, e.g. `grid:3,3` or `erdos-renyi:6,0.5`.
    Gen { family: String },
    /// Strong colouring number.
    #[command(group(ArgGroup::new("mode").args(["exact", "greedy"])))]
    Scol {
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        greedy: bool,
        #[arg(short = 'r', long = "radius")]
        r: usize,
    },
    /// Weak colouring number (exact).
    Wcol {
        #[arg(long)]
        exact: bool,
        #[arg(short = 'r', long = "radius")]
        r: usize,
    },
    /// Cop-width: the exact value, or the winner for a given number of cops.
    Copwidth {
        #[arg(long)]
        exact: bool,
        #[arg(short = 'r', long = "radius")]
        r: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Flip-width: the exact value, or the winner for a given width.
    Flipwidth {
        #[arg(long)]
        exact: bool,
        #[arg(short = 'r', long = "radius")]
        r: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Verify the order-guided cop strategy against every robber.
    Strategy {
        #[arg(short = 'r', long = "radius")]
        r: usize,
        /// Order file; defaults to an optimal order for scol_{4r}.
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// Verify the flipper strategy lifted from the cop strategy.
    Lift {
        #[arg(short = 'r', long = "radius")]
        r: usize,
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// Evaluate a closed-form bound.
    Bounds {
        #[arg(long, value_enum)]
        formula: Formula,
        #[arg(long)]
        t: Option<u64>,
        #[arg(short = 'r', long = "radius")]
        r: Option<u64>,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        wcol: Option<u64>,
        #[arg(long)]
        cw: Option<u64>,
        #[arg(long)]
        pi: Option<u64>,
    },
    /// Check every inequality on a corpus; writes JSON lines (or CSV).
    Verify {
        /// JSON config file with `labeled_max_n`, `families` and `radii`.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Include all labeled graphs up to this many vertices.
        #[arg(long)]
        labeled: Option<usize>,
        /// Family to include (repeatable); uses the global seed.
        #[arg(long = "family")]
        families: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        radii: Vec<usize>,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Formula {
    ScolKtminor,
    CwKtminor,
    ScolGkplanar,
    CwGkplanar,
    CwFromWcol,
    FwKttfree,
    FwLift,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match execute(&cli, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_graph(cli: &Cli, stdin: &mut dyn Read) -> Result<Graph> {
    let mut text = String::new();
    if cli.input == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(&cli.input)?;
    }
    Graph::parse(&text)
}

fn read_order(path: &Option<PathBuf>, g: &Graph, r: usize) -> Result<VertexOrder> {
    match path {
        Some(p) => {
            let ord = VertexOrder::parse(&std::fs::read_to_string(p)?)?;
            ord.check_for(g)?;
            Ok(ord)
        }
        None => Ok(scol_exact(g, 4 * r)?.order),
    }
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value).expect("json value serializes"))?;
    Ok(())
}

fn required(v: Option<u64>, name: &str) -> Result<u64> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for this formula")))
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Gen { family } => {
            let fam: Family = family.parse()?;
            let g = generate(&FamilySpec::new(fam).with_seed(cli.seed))?;
            if cli.json {
                emit(out, &serde_json::to_value(&g).expect("graph serializes"))?;
            } else {
                write!(out, "{}", g.to_edge_list())?;
            }
        }
        Command::Scol { greedy, r, .. } => {
            let g = read_graph(cli, stdin)?;
            let res = if *greedy { scol_greedy(&g, *r)? } else { scol_exact(&g, *r)? };
            emit(out, &json!({ "value": res.value, "order": res.order }))?;
        }
        Command::Wcol { r, .. } => {
            let g = read_graph(cli, stdin)?;
            let res = wcol_exact(&g, *r)?;
            emit(out, &json!({ "value": res.value, "order": res.order }))?;
        }
        Command::Copwidth { r, k, .. } => {
            let g = read_graph(cli, stdin)?;
            match k {
                Some(k) => {
                    let d = copwidth_decide(&g, *r, *k)?;
                    emit(out, &json!({ "cops_win": d.cops_win, "states_explored": d.states_explored }))?;
                }
                None => {
                    let c = copwidth_exact(&g, *r)?;
                    emit(out, &json!({ "copwidth": c.copwidth, "states_explored": c.states_explored }))?;
                }
            }
        }
        Command::Flipwidth { r, k, .. } => {
            let g = read_graph(cli, stdin)?;
            match k {
                Some(k) => {
                    let d = flipwidth_decide(&g, *r, *k)?;
                    emit(out, &json!({ "flipper_wins": d.flipper_wins }))?;
                }
                None => emit(out, &json!({ "flipwidth": flipwidth_exact(&g, *r)? }))?,
            }
        }
        Command::Strategy { r, order } => {
            let g = read_graph(cli, stdin)?;
            let ord = read_order(order, &g, *r)?;
            let v = verify_all_robbers(&g, &ord, *r)?;
            emit(
                out,
                &json!({
                    "max_cops": v.max_cops,
                    "rounds_worst_case": v.rounds_worst_case,
                    "cop_budget": v.cop_budget,
                    "order": ord,
                    "invariants": v.invariants,
                    "ok": v.ok,
                }),
            )?;
            return Ok(if v.ok { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::Lift { r, order } => {
            let g = read_graph(cli, stdin)?;
            let ord = read_order(order, &g, *r)?;
            let rep = lift_cop_strategy(&g, &ord, *r)?;
            emit(out, &serde_json::to_value(&rep).expect("report serializes"))?;
            return Ok(if rep.ok { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::Bounds { formula, t, r, g, k, wcol, cw, pi } => {
            let value = match formula {
                Formula::ScolKtminor => bounds::bound_scol_ktminor(required(*t, "t")?, required(*r, "radius")?)?,
                Formula::CwKtminor => bounds::bound_cw_ktminor(required(*t, "t")?, required(*r, "radius")?)?,
                Formula::ScolGkplanar => {
                    bounds::bound_scol_gkplanar(required(*g, "g")?, required(*k, "k")?, required(*r, "radius")?)?
                }
                Formula::CwGkplanar => {
                    bounds::bound_cw_gkplanar(required(*g, "g")?, required(*k, "k")?, required(*r, "radius")?)?
                }
                Formula::CwFromWcol => bounds::bound_cw_from_wcol(required(*wcol, "wcol")?)?,
                Formula::FwKttfree => {
                    let t = u32::try_from(required(*t, "t")?).map_err(|_| Error::Overflow("t"))?;
                    bounds::bound_fw_from_cw_kttfree(required(*cw, "cw")?, t)?
                }
                Formula::FwLift => bounds::bound_fw_lift(required(*pi, "pi")?, required(*k, "k")?)?,
            };
            let name = formula.to_possible_value().expect("no skipped variants").get_name().to_string();
            emit(out, &json!({ "formula": name, "value": value, "degenerate": value == 0 }))?;
        }
        Command::Verify { config, labeled, families, radii, csv } => {
            let mut cfg = match config {
                Some(p) => serde_json::from_str::<VerifyConfig>(&std::fs::read_to_string(p)?)
                    .map_err(|e| Error::InvalidParameter(format!("config: {e}")))?,
                None => VerifyConfig { radii: radii.clone(), ..Default::default() },
            };
            if labeled.is_some() {
                cfg.labeled_max_n = *labeled;
            }
            for f in families {
                cfg.families.push(FamilySpec::new(f.parse()?).with_seed(cli.seed));
            }
            let reports = run_verification(&cfg)?;
            if *csv {
                write!(out, "{}", to_csv(&reports)?)?;
            } else {
                write!(out, "{}", to_json_lines(&reports))?;
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}
