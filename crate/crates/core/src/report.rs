//! Corpus verification: measure every computable quantity on each graph and
//! check the inequalities between them.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::colouring::{scol_exact, wcol_exact, SCOL_EXACT_MAX_N};
use crate::cop_game::{copwidth_exact, MAX_SOLVER_N};
use crate::error::{Error, Result};
use crate::flip::{flipwidth_exact, lift_cop_strategy, pi_k, MAX_FLIPWIDTH_N, MAX_LIFT_N};
use crate::generators::{generate, Family, FamilySpec};
use crate::graph::{enumerate_labeled_graphs, Graph};
use crate::strategy::{verify_all_robbers, MAX_VERIFY_N};

/// Which graphs and radii to verify.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Include every labeled graph on `1..=labeled_max_n` vertices.
    #[serde(default)]
    pub labeled_max_n: Option<usize>,
    #[serde(default)]
    pub families: Vec<FamilySpec>,
    pub radii: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The bound evaluates to 0 for these parameters; nothing is claimed.
    FormulaDegenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityRow {
    pub inequality: String,
    pub source: &'static str,
    pub lhs: u64,
    pub rhs: u64,
    pub status: Status,
}

/// Everything measured and checked for one graph at one radius.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub family: Option<FamilySpec>,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub measured: BTreeMap<&'static str, u64>,
    /// `π_G(cw) / cw`, recorded without any assertion.
    pub pi_ratio: Option<f64>,
    pub rows: Vec<InequalityRow>,
    /// Quantities skipped because a solver guard was exceeded.
    pub skipped: Vec<String>,
}

impl BoundReport {
    pub fn failures(&self) -> impl Iterator<Item = &InequalityRow> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    fn check(&mut self, inequality: impl Into<String>, source: &'static str, lhs: u64, rhs: u64) {
        self.push(inequality, source, lhs, rhs, false);
    }

    /// Like `check`, but a zero right-hand side is a degenerate formula.
    fn check_formula(&mut self, inequality: impl Into<String>, source: &'static str, lhs: u64, rhs: u64) {
        self.push(inequality, source, lhs, rhs, true);
    }

    fn push(&mut self, inequality: impl Into<String>, source: &'static str, lhs: u64, rhs: u64, formula: bool) {
        let status = if formula && rhs == 0 {
            Status::FormulaDegenerate
        } else if lhs <= rhs {
            Status::Pass
        } else {
            Status::Fail
        };
        self.rows.push(InequalityRow { inequality: inequality.into(), source, lhs, rhs, status });
    }
}

pub const SRC_MAIN: &str = "theorem: cw_r <= scol_4r";
pub const SRC_STRATEGY: &str = "theorem: order-guided strategy";
pub const SRC_WCOL: &str = "cited: cw_r <= wcol_2r + 1";
pub const SRC_LIFT: &str = "lemma: fw_r <= pi(k) + k";
pub const SRC_KT_SCOL: &str = "cited: K_t-minor-free scol bound";
pub const SRC_KT_CW: &str = "theorem: K_t-minor-free cw bound";
pub const SRC_GK_SCOL: &str = "cited: (g,k)-planar scol bound";
pub const SRC_GK_CW: &str = "theorem: (g,k)-planar cw bound";
pub const SRC_TW: &str = "cited: scol_r <= tw + 1";
pub const SRC_COMPLETE_FW: &str = "observation: complete graphs have fw_r = 1";

fn treewidth_of(family: &Family) -> Option<u64> {
    match *family {
        Family::Path { n } => Some(if n >= 2 { 1 } else { 0 }),
        Family::Cycle { .. } => Some(2),
        Family::Complete { n } => Some(n as u64 - 1),
        _ => None,
    }
}

/// Measures one graph at radius `r`. Solvers whose guards are exceeded are
/// listed in `skipped`.
pub fn verify_graph(id: &str, family: Option<&FamilySpec>, g: &Graph, r: usize) -> Result<BoundReport> {
    if r == 0 {
        return Err(Error::InvalidParameter("radius must be at least 1".into()));
    }
    let n = g.n();
    let r64 = r as u64;
    let mut rep = BoundReport {
        graph_id: id.to_string(),
        family: family.cloned(),
        n,
        m: g.edge_count(),
        r,
        measured: BTreeMap::new(),
        pi_ratio: None,
        rows: Vec::new(),
        skipped: Vec::new(),
    };
    let skip = |rep: &mut BoundReport, what: &str, e: Error| rep.skipped.push(format!("{what}: {e}"));

    let scol = if n <= SCOL_EXACT_MAX_N {
        match scol_exact(g, 4 * r) {
            Ok(s) => Some(s),
            Err(e) => {
                skip(&mut rep, "scol_4r", e);
                None
            }
        }
    } else {
        skip(&mut rep, "scol_4r", Error::Guard { what: "scol_exact vertex count", limit: SCOL_EXACT_MAX_N, got: n });
        None
    };
    let wcol = match wcol_exact(g, 2 * r) {
        Ok(w) => Some(w.value as u64),
        Err(e) => {
            skip(&mut rep, "wcol_2r", e);
            None
        }
    };
    let cw = if n <= MAX_SOLVER_N {
        match copwidth_exact(g, r) {
            Ok(c) => Some(c.copwidth as u64),
            Err(e) => {
                skip(&mut rep, "cw_r", e);
                None
            }
        }
    } else {
        skip(&mut rep, "cw_r", Error::Guard { what: "cop game vertex count", limit: MAX_SOLVER_N, got: n });
        None
    };
    let fw = if n <= MAX_FLIPWIDTH_N {
        match flipwidth_exact(g, r) {
            Ok(f) => Some(f as u64),
            Err(e) => {
                skip(&mut rep, "fw_r", e);
                None
            }
        }
    } else {
        skip(&mut rep, "fw_r", Error::Guard { what: "flip-width solver vertex count", limit: MAX_FLIPWIDTH_N, got: n });
        None
    };

    if let Some(s) = &scol {
        rep.measured.insert("scol_4r", s.value as u64);
    }
    if let Some(w) = wcol {
        rep.measured.insert("wcol_2r", w);
    }
    if let Some(c) = cw {
        rep.measured.insert("cw_r", c);
    }
    if let Some(f) = fw {
        rep.measured.insert("fw_r", f);
    }

    if let (Some(c), Some(s)) = (cw, &scol) {
        rep.check("cw_r <= scol_4r", SRC_MAIN, c, s.value as u64);
    }
    if let (Some(c), Some(w)) = (cw, wcol) {
        rep.check("cw_r <= wcol_2r + 1", SRC_WCOL, c, bounds::bound_cw_from_wcol(w)?);
    }

    let mut strategy_cops = None;
    if let Some(s) = &scol {
        if n <= MAX_VERIFY_N {
            let v = verify_all_robbers(g, &s.order, r)?;
            rep.measured.insert("strategy_max_cops", v.max_cops as u64);
            rep.measured.insert("strategy_rounds", v.rounds_worst_case as u64);
            rep.check("strategy_max_cops <= scol_4r", SRC_STRATEGY, v.max_cops as u64, s.value as u64);
            rep.check("strategy_rounds <= n - 1", SRC_STRATEGY, v.rounds_worst_case as u64, n.saturating_sub(1) as u64);
            rep.check("strategy_failed_checks <= 0", SRC_STRATEGY, u64::from(!v.ok), 0);
            strategy_cops = Some(v.max_cops as u64);
        } else {
            skip(
                &mut rep,
                "strategy",
                Error::Guard { what: "strategy verification vertex count", limit: MAX_VERIFY_N, got: n },
            );
        }
        if n <= MAX_LIFT_N {
            let lift = lift_cop_strategy(g, &s.order, r)?;
            let k = lift.max_cops;
            let bound = bounds::bound_fw_lift(pi_k(g, k)? as u64, k as u64)?;
            rep.measured.insert("lift_max_width", lift.max_width as u64);
            rep.check("lift_max_width <= pi(k) + k", SRC_LIFT, lift.max_width as u64, bound);
            rep.check("lift_escapes <= 0", SRC_LIFT, u64::from(!lift.ok), 0);
        } else {
            skip(&mut rep, "lift", Error::Guard { what: "lift vertex count", limit: MAX_LIFT_N, got: n });
        }
    }

    if let Some(c) = cw {
        let pi = pi_k(g, c as usize)? as u64;
        rep.measured.insert("pi_cw", pi);
        rep.pi_ratio = Some(pi as f64 / c as f64);
        if let Some(f) = fw {
            rep.check("fw_r <= pi(cw) + cw", SRC_LIFT, f, bounds::bound_fw_lift(pi, c)?);
        }
    }

    if let Some(spec) = family {
        if let Some(t) = spec.excluded_clique_minor() {
            let t = t as u64;
            if let Some(s) = &scol {
                rep.check_formula(
                    format!("scol_4r <= C({},2)(2*{}+1)", t - 1, 4 * r),
                    SRC_KT_SCOL,
                    s.value as u64,
                    bounds::bound_scol_ktminor(t, 4 * r64)?,
                );
            }
            let cw_bound = bounds::bound_cw_ktminor(t, r64)?;
            if let Some(c) = cw {
                rep.check_formula(format!("cw_r <= C({},2)(8r+1)", t - 1), SRC_KT_CW, c, cw_bound);
            }
            if let Some(k) = strategy_cops {
                rep.check_formula(format!("strategy_max_cops <= C({},2)(8r+1)", t - 1), SRC_KT_CW, k, cw_bound);
            }
        }
        if spec.is_planar() {
            if let Some(s) = &scol {
                rep.check_formula(
                    "scol_4r <= (4g+6)(k+1)(2*4r+1) at g=k=0",
                    SRC_GK_SCOL,
                    s.value as u64,
                    bounds::bound_scol_gkplanar(0, 0, 4 * r64)?,
                );
            }
            let cw_bound = bounds::bound_cw_gkplanar(0, 0, r64)?;
            if let Some(c) = cw {
                rep.check_formula("cw_r <= (4g+6)(k+1)(8r+1) at g=k=0", SRC_GK_CW, c, cw_bound);
            }
            if let Some(k) = strategy_cops {
                rep.check_formula("strategy_max_cops <= (4g+6)(k+1)(8r+1) at g=k=0", SRC_GK_CW, k, cw_bound);
            }
        }
        if let Some(tw) = treewidth_of(&spec.family) {
            if let Some(s) = &scol {
                rep.check("scol_4r <= tw + 1", SRC_TW, s.value as u64, tw + 1);
            }
        }
        if let (Family::Complete { .. }, Some(f)) = (&spec.family, fw) {
            rep.check("fw_r <= 1", SRC_COMPLETE_FW, f, 1);
        }
    }
    Ok(rep)
}

struct Instance {
    id: String,
    family: Option<FamilySpec>,
    graph: Graph,
}

/// Runs every instance of the config at every radius. Rows come back in
/// config order (labeled graphs first, then families), radius ascending,
/// regardless of the parallel evaluation order.
pub fn run_verification(config: &VerifyConfig) -> Result<Vec<BoundReport>> {
    if config.radii.is_empty() {
        return Err(Error::InvalidParameter("no radii given".into()));
    }
    if config.radii.contains(&0) {
        return Err(Error::InvalidParameter("radius must be at least 1".into()));
    }
    let mut instances = Vec::new();
    if let Some(max_n) = config.labeled_max_n {
        for n in 1..=max_n {
            for (i, g) in enumerate_labeled_graphs(n)?.enumerate() {
                instances.push(Instance { id: format!("labeled:{n}:{i}"), family: None, graph: g });
            }
        }
    }
    for spec in &config.families {
        instances.push(Instance { id: spec.id(), family: Some(spec.clone()), graph: generate(spec)? });
    }
    let jobs: Vec<(usize, usize, usize)> = instances
        .iter()
        .enumerate()
        .flat_map(|(i, _)| config.radii.iter().enumerate().map(move |(j, &r)| (i, j, r)))
        .collect();
    let mut reports = jobs
        .par_iter()
        .map(|&(i, j, r)| {
            let inst = &instances[i];
            verify_graph(&inst.id, inst.family.as_ref(), &inst.graph, r).map(|rep| ((i, j), rep))
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|(key, _)| *key);
    Ok(reports.into_iter().map(|(_, r)| r).collect())
}

/// One JSON object per line.
pub fn to_json_lines(reports: &[BoundReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("report serializes"));
        out.push('\n');
    }
    out
}

/// One CSV row per inequality.
pub fn to_csv(reports: &[BoundReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["graph_id", "family", "n", "m", "r", "inequality", "source", "lhs", "rhs", "status"])
        .map_err(io)?;
    for rep in reports {
        let family = rep.family.as_ref().map(|f| f.family.to_string()).unwrap_or_default();
        for row in &rep.rows {
            let status = match row.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::FormulaDegenerate => "formula_degenerate",
            };
            w.write_record([
                rep.graph_id.as_str(),
                family.as_str(),
                &rep.n.to_string(),
                &rep.m.to_string(),
                &rep.r.to_string(),
                row.inequality.as_str(),
                row.source,
                &row.lhs.to_string(),
                &row.rhs.to_string(),
                status,
            ])
            .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
