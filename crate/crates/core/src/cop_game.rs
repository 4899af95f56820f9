//! The radius-`r` cop-width game and an exact solver for small graphs.
//!
//! Rules: at round 0 there are no cops on the graph and the robber picks a
//! start vertex. In each round `i ≥ 1` the cops announce a set `C_i` of at
//! most `k` vertices; the robber, seeing `C_i`, runs along a path of length
//! at most `r` that avoids every vertex of `C_{i-1} ∩ C_i` (the cops that stay
//! on the ground); then the cops land and the robber is caught iff he stands
//! on a vertex of `C_i`. The cops win iff they can force a capture in finitely
//! many rounds.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{subsets_up_to, VertexSet};

pub const MAX_SOLVER_N: usize = 12;
pub const MAX_SOLVER_K: usize = 6;

/// Vertices the robber can end on when the cops move from `c_prev` to `c_next`.
pub fn robber_moves(g: &Graph, x: usize, c_prev: VertexSet, c_next: VertexSet, r: usize) -> Result<VertexSet> {
    g.check_vertex(x)?;
    if c_prev.contains(x) {
        return Err(Error::Precondition(format!("robber at {x} stands on a cop")));
    }
    g.reach_avoiding(x, r, c_prev.intersection(c_next))
}

/// A position after the cops have landed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CopGameState {
    pub cops: VertexSet,
    pub robber: usize,
}

/// Winning cop moves: for each winning state, the set to announce next.
///
/// Every recorded move leads only to captures or to states with a strictly
/// smaller rank, so following it always ends the game.
#[derive(Clone, Debug, Default)]
pub struct Certificate {
    moves: HashMap<CopGameState, (VertexSet, usize)>,
}

impl Certificate {
    /// The cop set to announce from `state`, if it is winning.
    pub fn next(&self, state: CopGameState) -> Option<VertexSet> {
        self.moves.get(&state).map(|&(c, _)| c)
    }

    /// Upper bound on the rounds needed to capture from `state`.
    pub fn rank(&self, state: CopGameState) -> Option<usize> {
        self.moves.get(&state).map(|&(_, rank)| rank)
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays the certificate against every robber behaviour and returns the
    /// worst-case capture round. Fails if some branch leaves the certificate.
    pub fn worst_case_rounds(&self, g: &Graph, r: usize) -> Result<usize> {
        let mut memo: HashMap<CopGameState, usize> = HashMap::new();
        let mut worst = 0;
        for x in 0..g.n() {
            let s = CopGameState { cops: VertexSet::EMPTY, robber: x };
            worst = worst.max(self.replay(g, r, s, &mut memo)?);
        }
        Ok(worst)
    }

    fn replay(&self, g: &Graph, r: usize, s: CopGameState, memo: &mut HashMap<CopGameState, usize>) -> Result<usize> {
        if let Some(&d) = memo.get(&s) {
            return Ok(d);
        }
        let next = self.next(s).ok_or_else(|| Error::Precondition(format!("robber reached uncovered state {s:?}")))?;
        let moves = robber_moves(g, s.robber, s.cops, next, r)?;
        let mut worst = 1;
        for y in moves.difference(next) {
            let t = CopGameState { cops: next, robber: y };
            worst = worst.max(1 + self.replay(g, r, t, memo)?);
        }
        memo.insert(s, worst);
        Ok(worst)
    }
}

/// Outcome of [`copwidth_decide`].
#[derive(Clone, Debug)]
pub struct CopWidthDecision {
    pub cops_win: bool,
    pub certificate: Certificate,
    pub states_explored: usize,
}

struct MoveCache<'a> {
    g: &'a Graph,
    r: usize,
    cache: HashMap<(usize, VertexSet), VertexSet>,
}

impl<'a> MoveCache<'a> {
    fn new(g: &'a Graph, r: usize) -> Self {
        MoveCache { g, r, cache: HashMap::new() }
    }

    fn get(&mut self, x: usize, grounded: VertexSet) -> VertexSet {
        let (g, r) = (self.g, self.r);
        *self.cache.entry((x, grounded)).or_insert_with(|| g.reach_within(x, r, g.vertices().difference(grounded)))
    }
}

fn check_game_params(g: &Graph, r: usize, k: usize) -> Result<()> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidParameter("radius and width must be at least 1".into()));
    }
    guard("cop game vertex count", MAX_SOLVER_N, g.n())?;
    guard("cop game width", MAX_SOLVER_K, k)
}

/// Decides the cop-width game with radius `r` and `k` cops.
///
/// Backward attractor: a state `(C, x)` joins the cops' winning region in
/// sweep `t` if some announcement `C'` leaves the robber only moves that are
/// captures or states already winning before sweep `t`.
pub fn copwidth_decide(g: &Graph, r: usize, k: usize) -> Result<CopWidthDecision> {
    check_game_params(g, r, k)?;
    let all = g.vertices();
    let cop_sets = subsets_up_to(all, k);
    let index: HashMap<VertexSet, usize> = cop_sets.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let states_explored = cop_sets.iter().map(|c| g.n() - c.len()).sum();

    let mut moves = MoveCache::new(g, r);
    let mut win = vec![VertexSet::EMPTY; cop_sets.len()];
    let mut certificate = Certificate::default();
    let mut rank = 0;
    loop {
        rank += 1;
        let snapshot = win.clone();
        let mut changed = false;
        for (ci, &c) in cop_sets.iter().enumerate() {
            for x in all.difference(c).difference(snapshot[ci]) {
                let choice = cop_sets.iter().enumerate().find(|&(cj, &next)| {
                    let m = moves.get(x, c.intersection(next));
                    m.is_subset(next.union(snapshot[cj]))
                });
                if let Some((_, &next)) = choice {
                    win[ci].insert(x);
                    certificate.moves.insert(CopGameState { cops: c, robber: x }, (next, rank));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let cops_win = win[index[&VertexSet::EMPTY]] == all;
    Ok(CopWidthDecision { cops_win, certificate, states_explored })
}

/// Independent check of [`copwidth_decide`]: top-down minimax with a depth
/// bound of one more than the number of states, memoised on
/// `(state, remaining depth)`.
pub fn copwidth_minimax(g: &Graph, r: usize, k: usize) -> Result<bool> {
    check_game_params(g, r, k)?;
    let cop_sets = subsets_up_to(g.vertices(), k);
    let states: usize = cop_sets.iter().map(|c| g.n() - c.len()).sum();
    let mut search = Minimax { moves: MoveCache::new(g, r), cop_sets, memo: HashMap::new() };
    let depth = states + 1;
    Ok((0..g.n()).all(|x| search.cops_force(VertexSet::EMPTY, x, depth)))
}

struct Minimax<'a> {
    moves: MoveCache<'a>,
    cop_sets: Vec<VertexSet>,
    memo: HashMap<(VertexSet, usize, usize), bool>,
}

impl Minimax<'_> {
    /// Can the cops capture from `(cops, x)` within `depth` rounds?
    fn cops_force(&mut self, cops: VertexSet, x: usize, depth: usize) -> bool {
        if depth == 0 {
            return false;
        }
        if let Some(&v) = self.memo.get(&(cops, x, depth)) {
            return v;
        }
        let mut result = false;
        for i in 0..self.cop_sets.len() {
            let next = self.cop_sets[i];
            let m = self.moves.get(x, cops.intersection(next));
            if m.difference(next).iter().all(|y| self.cops_force(next, y, depth - 1)) {
                result = true;
                break;
            }
        }
        self.memo.insert((cops, x, depth), result);
        result
    }
}

/// Result of [`copwidth_exact`].
#[derive(Clone, Debug, Serialize)]
pub struct CopWidth {
    pub copwidth: usize,
    pub states_explored: usize,
}

/// The least `k` for which the cops win.
pub fn copwidth_exact(g: &Graph, r: usize) -> Result<CopWidth> {
    guard("cop game vertex count", MAX_SOLVER_N, g.n())?;
    let mut states_explored = 0;
    for k in 1..=g.n().max(1) {
        let d = copwidth_decide(g, r, k)?;
        states_explored += d.states_explored;
        if d.cops_win {
            return Ok(CopWidth { copwidth: k, states_explored });
        }
    }
    unreachable!("n cops always win")
}

/// Game parameters for [`simulate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rules {
    pub radius: usize,
    pub width: usize,
}

/// Chooses the next cop announcement from the visible position.
pub trait CopPolicy {
    fn announce(&mut self, round: usize, cops: VertexSet, robber: usize) -> VertexSet;
}

/// Chooses the robber's start and his replies to announcements.
pub trait RobberPolicy {
    fn start(&mut self, g: &Graph) -> usize;
    /// `moves` is the set of legal destinations.
    fn respond(
        &mut self,
        round: usize,
        robber: usize,
        grounded: VertexSet,
        announced: VertexSet,
        moves: VertexSet,
    ) -> usize;
}

impl CopPolicy for Certificate {
    fn announce(&mut self, _round: usize, cops: VertexSet, robber: usize) -> VertexSet {
        self.next(CopGameState { cops, robber }).unwrap_or(cops)
    }
}

/// Robber that starts at a fixed vertex and never moves.
#[derive(Clone, Copy, Debug)]
pub struct StationaryRobber(pub usize);

impl RobberPolicy for StationaryRobber {
    fn start(&mut self, _g: &Graph) -> usize {
        self.0
    }

    fn respond(&mut self, _: usize, robber: usize, _: VertexSet, _: VertexSet, _: VertexSet) -> usize {
        robber
    }
}

/// Robber that prefers legal destinations outside the announced set,
/// furthest from it; ties go to the smallest id.
#[derive(Clone, Debug)]
pub struct FleeingRobber {
    g: Graph,
    start: usize,
}

impl FleeingRobber {
    pub fn new(g: &Graph, start: usize) -> Self {
        FleeingRobber { g: g.clone(), start }
    }

    fn distance_to(&self, y: usize, target: VertexSet) -> usize {
        if target.is_empty() {
            return usize::MAX;
        }
        let mut r = 0;
        loop {
            if !self.g.ball(y, r).is_disjoint(target) {
                return r;
            }
            if r > self.g.n() {
                return usize::MAX;
            }
            r += 1;
        }
    }
}

impl RobberPolicy for FleeingRobber {
    fn start(&mut self, _g: &Graph) -> usize {
        self.start
    }

    fn respond(&mut self, _: usize, _: usize, _: VertexSet, announced: VertexSet, moves: VertexSet) -> usize {
        moves
            .iter()
            .max_by_key(|&y| (!announced.contains(y), self.distance_to(y, announced), std::cmp::Reverse(y)))
            .expect("staying is always legal")
    }
}

/// One played round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundRecord {
    pub round: usize,
    pub announced: VertexSet,
    /// Cops that stayed on the ground during the robber's run.
    pub grounded: VertexSet,
    /// The robber's run, from his previous vertex to his new one.
    pub path: Vec<usize>,
    pub landed: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum Outcome {
    Captured { round: usize },
    Survived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GameTrace {
    pub start: usize,
    pub rounds: Vec<RoundRecord>,
    pub outcome: Outcome,
}

/// Plays at most `horizon` rounds. Illegal moves are reported with the round
/// in which they happened.
pub fn simulate(
    g: &Graph,
    rules: Rules,
    cops: &mut dyn CopPolicy,
    robber: &mut dyn RobberPolicy,
    horizon: usize,
) -> Result<GameTrace> {
    let start = robber.start(g);
    if start >= g.n() {
        return Err(Error::IllegalMove {
            round: 0,
            player: "robber",
            msg: format!("start vertex {start} does not exist"),
        });
    }
    let mut trace = GameTrace { start, rounds: Vec::new(), outcome: Outcome::Survived };
    let mut c = VertexSet::EMPTY;
    let mut x = start;
    for round in 1..=horizon {
        let next = cops.announce(round, c, x);
        if next.len() > rules.width || !next.is_subset(g.vertices()) {
            return Err(Error::IllegalMove {
                round,
                player: "cops",
                msg: format!("announced {next:?} with width {}", rules.width),
            });
        }
        let grounded = c.intersection(next);
        let moves = g.reach_avoiding(x, rules.radius, grounded)?;
        let y = robber.respond(round, x, grounded, next, moves);
        if !moves.contains(y) {
            return Err(Error::IllegalMove {
                round,
                player: "robber",
                msg: format!("cannot reach {y} from {x} avoiding {grounded:?}"),
            });
        }
        let path = g.shortest_path_within(x, y, g.vertices().difference(grounded)).expect("destination is reachable");
        trace.rounds.push(RoundRecord { round, announced: next, grounded, path, landed: next });
        c = next;
        x = y;
        if c.contains(x) {
            trace.outcome = Outcome::Captured { round };
            break;
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family, FamilySpec};

    fn gen(f: Family) -> Graph {
        generate(&FamilySpec::new(f)).unwrap()
    }

    #[test]
    fn robber_moves_examples() {
        let p3 = gen(Family::Path { n: 3 });
        let one = VertexSet::singleton(1);
        assert_eq!(robber_moves(&p3, 2, one, one, 2).unwrap().to_vec(), vec![2]);
        assert_eq!(robber_moves(&p3, 0, VertexSet::EMPTY, one, 2).unwrap(), p3.ball(0, 2));
        assert!(robber_moves(&p3, 1, one, one, 1).is_err());
        let c4 = gen(Family::Cycle { n: 4 });
        let moves = robber_moves(&c4, 0, one, VertexSet(0b1010), 2).unwrap();
        // only 1 is grounded; 0-3-2 is a legal run
        assert_eq!(moves.to_vec(), vec![0, 2, 3]);
    }

    #[test]
    fn small_decisions() {
        let k1 = Graph::empty(1).unwrap();
        assert!(copwidth_decide(&k1, 1, 1).unwrap().cops_win);
        let k4 = gen(Family::Complete { n: 4 });
        assert!(copwidth_decide(&k4, 3, 4).unwrap().cops_win);
        let c4 = gen(Family::Cycle { n: 4 });
        assert!(!copwidth_decide(&c4, 1, 1).unwrap().cops_win);
        assert!(!copwidth_minimax(&c4, 1, 1).unwrap());
    }

    #[test]
    fn exact_values() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(copwidth_exact(&k1, 3).unwrap().copwidth, 1);
        let e = Graph::empty(4).unwrap();
        assert_eq!(copwidth_exact(&e, 2).unwrap().copwidth, 1);
        for n in 2..=6 {
            let p = gen(Family::Path { n });
            for r in 1..=3 {
                assert!(copwidth_exact(&p, r).unwrap().copwidth <= 2);
            }
        }
    }

    #[test]
    fn guards() {
        let big = gen(Family::Path { n: 13 });
        assert!(copwidth_decide(&big, 1, 1).is_err());
        let p = gen(Family::Path { n: 3 });
        assert!(copwidth_decide(&p, 1, 7).is_err());
        assert!(copwidth_decide(&p, 0, 1).is_err());
    }

    #[test]
    fn certificate_replay_captures() {
        let c5 = gen(Family::Cycle { n: 5 });
        let d = copwidth_decide(&c5, 1, 3).unwrap();
        assert!(d.cops_win);
        let worst = d.certificate.worst_case_rounds(&c5, 1).unwrap();
        assert!(worst >= 1);
        for start in 0..5 {
            let mut cops = d.certificate.clone();
            let mut robber = FleeingRobber::new(&c5, start);
            let t = simulate(&c5, Rules { radius: 1, width: 3 }, &mut cops, &mut robber, 50).unwrap();
            assert!(matches!(t.outcome, Outcome::Captured { round } if round <= worst));
        }
    }

    #[test]
    fn simulate_edge_cases() {
        let k1 = Graph::empty(1).unwrap();
        struct Land;
        impl CopPolicy for Land {
            fn announce(&mut self, _: usize, _: VertexSet, _: usize) -> VertexSet {
                VertexSet::singleton(0)
            }
        }
        let rules = Rules { radius: 1, width: 1 };
        let t = simulate(&k1, rules, &mut Land, &mut StationaryRobber(0), 5).unwrap();
        assert_eq!(t.outcome, Outcome::Captured { round: 1 });
        let t = simulate(&k1, rules, &mut Land, &mut StationaryRobber(0), 0).unwrap();
        assert!(t.rounds.is_empty());
        assert_eq!(t.outcome, Outcome::Survived);

        struct TooMany;
        impl CopPolicy for TooMany {
            fn announce(&mut self, _: usize, _: VertexSet, _: usize) -> VertexSet {
                VertexSet(0b11)
            }
        }
        let p = gen(Family::Path { n: 3 });
        let err = simulate(&p, rules, &mut TooMany, &mut StationaryRobber(2), 3).unwrap_err();
        assert!(matches!(err, Error::IllegalMove { round: 1, player: "cops", .. }));

        struct Teleport;
        impl RobberPolicy for Teleport {
            fn start(&mut self, _: &Graph) -> usize {
                0
            }
            fn respond(&mut self, _: usize, _: usize, _: VertexSet, _: VertexSet, _: VertexSet) -> usize {
                2
            }
        }
        let err = simulate(&p, rules, &mut Land, &mut Teleport, 3).unwrap_err();
        assert!(matches!(err, Error::IllegalMove { round: 1, player: "robber", .. }));
    }
}
