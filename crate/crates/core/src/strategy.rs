//! The order-guided cop strategy: with a fixed order `v_0 ≺ ... ≺ v_{n-1}`,
//! the cops in round `i` occupy `M(v_i, x_{i-1}, 2r)`, where `x_{i-1}` is the
//! robber's position at the end of the previous round.
//!
//! Each round the threshold `v_i` moves one step along the order. The robber
//! can never run back to an already processed vertex, so he is caught at the
//! latest when the threshold reaches him, and no round needs more cops than
//! the largest `|R(v, 4r)|` under the order.

use std::collections::HashMap;

use serde::Serialize;

use crate::cop_game::{CopPolicy, RobberPolicy};
use crate::error::{guard, Error, Result};
use crate::graph::Graph;
use crate::ordering::{order_cost_scol, reach_m_inclusive, VertexOrder};
use crate::vertex_set::VertexSet;

pub const MAX_VERIFY_N: usize = 9;

/// Everything the strategy tracks for one round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrategyRound {
    pub round: usize,
    /// Threshold vertex `v_i`.
    pub threshold: usize,
    /// Robber position at the end of the round.
    pub robber: usize,
    /// Cop positions at the end of the round.
    pub cops: VertexSet,
    /// Cops that stayed on the ground during the round.
    pub grounded: VertexSet,
    /// `{v_0, ..., v_i}`.
    pub processed: VertexSet,
    /// The robber's run during the round (empty in round 0).
    pub path: Vec<usize>,
}

/// Cop positions for round `i ≥ 1`: `M(v_i, x_prev, 2r)`, with internal
/// vertices allowed at `v_i` (see [`reach_m_inclusive`]).
pub fn next_cop_positions(g: &Graph, ord: &VertexOrder, i: usize, x_prev: usize, r: usize) -> Result<VertexSet> {
    ord.check_for(g)?;
    if i == 0 || i >= g.n() {
        return Err(Error::Precondition(format!("round {i} outside 1..{}", g.n())));
    }
    let v = ord.at(i);
    g.check_vertex(x_prev)?;
    if ord.position(x_prev) < i {
        return Err(Error::Precondition(format!("robber at {x_prev} precedes threshold {v} in round {i}")));
    }
    reach_m_inclusive(g, ord, v, x_prev, 2 * r)
}

/// The strategy as a [`CopPolicy`] under the cop-game rules, where the
/// board starts empty: game round 1 places the single cop on `v_0`, and game
/// round `j ≥ 2` plays strategy round `j - 1`.
#[derive(Clone, Debug)]
pub struct OrderGuidedCops {
    g: Graph,
    ord: VertexOrder,
    r: usize,
}

impl OrderGuidedCops {
    pub fn new(g: &Graph, ord: &VertexOrder, r: usize) -> Result<Self> {
        ord.check_for(g)?;
        Ok(OrderGuidedCops { g: g.clone(), ord: ord.clone(), r })
    }
}

impl CopPolicy for OrderGuidedCops {
    fn announce(&mut self, round: usize, cops: VertexSet, robber: usize) -> VertexSet {
        if round <= 1 {
            return VertexSet::singleton(self.ord.at(0));
        }
        next_cop_positions(&self.g, &self.ord, round - 1, robber, self.r).unwrap_or(cops)
    }
}

/// Plays the strategy against `robber` until capture or the order runs out.
pub fn play_strategy(
    g: &Graph,
    ord: &VertexOrder,
    r: usize,
    robber: &mut dyn RobberPolicy,
) -> Result<Vec<StrategyRound>> {
    ord.check_for(g)?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let v0 = ord.at(0);
    let x0 = robber.start(g);
    g.check_vertex(x0)?;
    let mut rounds = vec![StrategyRound {
        round: 0,
        threshold: v0,
        robber: x0,
        cops: VertexSet::singleton(v0),
        grounded: VertexSet::EMPTY,
        processed: VertexSet::singleton(v0),
        path: Vec::new(),
    }];
    for i in 1..g.n() {
        let prev = rounds.last().expect("round 0 exists");
        if prev.cops.contains(prev.robber) {
            break;
        }
        let x = prev.robber;
        let cops = next_cop_positions(g, ord, i, x, r)?;
        let grounded = prev.cops.intersection(cops);
        let moves = g.reach_avoiding(x, r, grounded)?;
        let y = robber.respond(i, x, grounded, cops, moves);
        if !moves.contains(y) {
            return Err(Error::IllegalMove {
                round: i,
                player: "robber",
                msg: format!("cannot reach {y} from {x} avoiding {grounded:?}"),
            });
        }
        let path =
            g.shortest_path_within(x, y, g.vertices().difference(grounded)).expect("legal destination is reachable");
        rounds.push(StrategyRound {
            round: i,
            threshold: ord.at(i),
            robber: y,
            cops,
            grounded,
            processed: ord.up_to(i),
            path,
        });
    }
    Ok(rounds)
}

/// The five per-round properties the strategy maintains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    /// `v_i ⪯ x_i`.
    RobberNotBeforeThreshold,
    /// Every path of length `≤ r` from `x_{i-1}` into `{v_0..v_{i-1}}` meets
    /// a grounded cop.
    GroundedCopsBlockBacktrack,
    /// `M(v_i, x_i, r) ⊆ C_i`.
    CopsCoverMSet,
    /// The robber's run misses `{v_0..v_{i-1}}`.
    RunAvoidsProcessed,
    /// `v_i = x_i` implies capture.
    ThresholdCaptures,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::RobberNotBeforeThreshold,
        Invariant::GroundedCopsBlockBacktrack,
        Invariant::CopsCoverMSet,
        Invariant::RunAvoidsProcessed,
        Invariant::ThresholdCaptures,
    ];
}

/// Pass/fail per invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantFlags {
    pub robber_not_before_threshold: bool,
    pub grounded_cops_block_backtrack: bool,
    pub cops_cover_m_set: bool,
    pub run_avoids_processed: bool,
    pub threshold_captures: bool,
}

impl Default for InvariantFlags {
    fn default() -> Self {
        InvariantFlags {
            robber_not_before_threshold: true,
            grounded_cops_block_backtrack: true,
            cops_cover_m_set: true,
            run_avoids_processed: true,
            threshold_captures: true,
        }
    }
}

impl InvariantFlags {
    fn fail(&mut self, inv: Invariant) {
        match inv {
            Invariant::RobberNotBeforeThreshold => self.robber_not_before_threshold = false,
            Invariant::GroundedCopsBlockBacktrack => self.grounded_cops_block_backtrack = false,
            Invariant::CopsCoverMSet => self.cops_cover_m_set = false,
            Invariant::RunAvoidsProcessed => self.run_avoids_processed = false,
            Invariant::ThresholdCaptures => self.threshold_captures = false,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.robber_not_before_threshold
            && self.grounded_cops_block_backtrack
            && self.cops_cover_m_set
            && self.run_avoids_processed
            && self.threshold_captures
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub round: usize,
    pub invariant: Invariant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub first_violation: Option<Violation>,
    pub captured_at: Option<usize>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// The invariants violated by the transition into round `i`, in order.
///
/// `prev` is `(x_{i-1}, processed before round i)`; it is `None` for round 0.
fn round_violations(
    g: &Graph,
    ord: &VertexOrder,
    r: usize,
    prev: Option<(usize, VertexSet)>,
    cur: &StrategyRound,
) -> Vec<Invariant> {
    let mut out = Vec::new();
    let v = cur.threshold;
    let x = cur.robber;
    let order_ok = ord.position(v) <= ord.position(x);
    if !order_ok {
        out.push(Invariant::RobberNotBeforeThreshold);
    }
    if let Some((x_prev, processed_prev)) = prev {
        let blocked = match g.reach_avoiding(x_prev, r, cur.grounded) {
            Ok(reach) => reach.is_disjoint(processed_prev),
            Err(_) => false,
        };
        if !blocked {
            out.push(Invariant::GroundedCopsBlockBacktrack);
        }
    }
    let covered = order_ok && reach_m_inclusive(g, ord, v, x, r).map(|m| m.is_subset(cur.cops)).unwrap_or(false);
    if !covered {
        out.push(Invariant::CopsCoverMSet);
    }
    if let Some((_, processed_prev)) = prev {
        if cur.path.iter().any(|&u| processed_prev.contains(u)) {
            out.push(Invariant::RunAvoidsProcessed);
        }
    }
    if v == x && !cur.cops.contains(x) {
        out.push(Invariant::ThresholdCaptures);
    }
    out
}

/// Checks every round of a strategy trace and reports the first broken
/// invariant together with the capture round, if any.
pub fn check_invariants(g: &Graph, ord: &VertexOrder, r: usize, trace: &[StrategyRound]) -> Result<InvariantReport> {
    ord.check_for(g)?;
    let mut report = InvariantReport { first_violation: None, captured_at: None };
    for (i, cur) in trace.iter().enumerate() {
        if cur.round != i || i >= g.n() || cur.threshold != ord.at(i) {
            return Err(Error::InvalidParameter(format!("trace entry {i} does not follow the order")));
        }
        g.check_vertex(cur.robber)?;
        let prev = (i > 0).then(|| (trace[i - 1].robber, trace[i - 1].processed));
        if let Some(&inv) = round_violations(g, ord, r, prev, cur).first() {
            if report.first_violation.is_none() {
                report.first_violation = Some(Violation { round: i, invariant: inv });
            }
        }
        if report.captured_at.is_none() && cur.cops.contains(cur.robber) {
            report.captured_at = Some(i);
        }
    }
    Ok(report)
}

/// Result of playing the strategy against every robber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrategyVerification {
    /// Largest cop set used in any round of any branch.
    pub max_cops: usize,
    /// Latest capture round over all branches (round 0 is the placement).
    pub rounds_worst_case: usize,
    /// `max_v |R(v, 4r)|` under the order; the promised cop budget.
    pub cop_budget: usize,
    pub invariants: InvariantFlags,
    pub all_captured: bool,
    pub ok: bool,
}

/// Plays the strategy against every legal robber behaviour.
pub fn verify_all_robbers(g: &Graph, ord: &VertexOrder, r: usize) -> Result<StrategyVerification> {
    ord.check_for(g)?;
    if r == 0 {
        return Err(Error::InvalidParameter("radius must be at least 1".into()));
    }
    guard("strategy verification vertex count", MAX_VERIFY_N, g.n())?;
    let cop_budget = order_cost_scol(g, ord, 4 * r)?;
    if g.n() == 0 {
        return Ok(StrategyVerification {
            max_cops: 0,
            rounds_worst_case: 0,
            cop_budget,
            invariants: InvariantFlags::default(),
            all_captured: true,
            ok: true,
        });
    }
    let mut v =
        Verifier { g, ord, r, memo: HashMap::new(), flags: InvariantFlags::default(), max_cops: 1, all_captured: true };
    let v0 = ord.at(0);
    let c0 = VertexSet::singleton(v0);
    let mut worst = 0;
    for x0 in 0..g.n() {
        let round0 = StrategyRound {
            round: 0,
            threshold: v0,
            robber: x0,
            cops: c0,
            grounded: VertexSet::EMPTY,
            processed: c0,
            path: Vec::new(),
        };
        for inv in round_violations(g, ord, r, None, &round0) {
            v.flags.fail(inv);
        }
        if x0 != v0 {
            worst = worst.max(v.explore(0, x0, c0));
        }
    }
    let ok = v.flags.all_pass() && v.all_captured && worst < g.n() && v.max_cops <= cop_budget;
    Ok(StrategyVerification {
        max_cops: v.max_cops,
        rounds_worst_case: worst,
        cop_budget,
        invariants: v.flags,
        all_captured: v.all_captured,
        ok,
    })
}

struct Verifier<'a> {
    g: &'a Graph,
    ord: &'a VertexOrder,
    r: usize,
    memo: HashMap<(usize, usize, VertexSet), usize>,
    flags: InvariantFlags,
    max_cops: usize,
    all_captured: bool,
}

impl Verifier<'_> {
    /// Worst-case capture round from the end of round `i` with the robber
    /// free at `x` and cops on `cops`.
    fn explore(&mut self, i: usize, x: usize, cops: VertexSet) -> usize {
        if let Some(&w) = self.memo.get(&(i, x, cops)) {
            return w;
        }
        let (g, ord, r) = (self.g, self.ord, self.r);
        let next = i + 1;
        if next >= g.n() {
            self.all_captured = false;
            self.memo.insert((i, x, cops), i);
            return i;
        }
        let c = match next_cop_positions(g, ord, next, x, r) {
            Ok(c) => c,
            Err(_) => {
                self.flags.fail(Invariant::RobberNotBeforeThreshold);
                self.all_captured = false;
                self.memo.insert((i, x, cops), i);
                return i;
            }
        };
        self.max_cops = self.max_cops.max(c.len());
        let grounded = cops.intersection(c);
        let processed_prev = ord.up_to(i);
        let moves = g.reach_avoiding(x, r, grounded).expect("robber is not on a cop");
        let mut worst = next;
        for y in moves {
            let path = g
                .shortest_path_within(x, y, g.vertices().difference(grounded))
                .expect("legal destination is reachable");
            let round = StrategyRound {
                round: next,
                threshold: ord.at(next),
                robber: y,
                cops: c,
                grounded,
                processed: ord.up_to(next),
                path,
            };
            for inv in round_violations(g, ord, r, Some((x, processed_prev)), &round) {
                self.flags.fail(inv);
            }
            if !c.contains(y) {
                worst = worst.max(self.explore(next, y, c));
            }
        }
        self.memo.insert((i, x, cops), worst);
        worst
    }
}
