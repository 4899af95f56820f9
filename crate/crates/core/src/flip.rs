//! Flips, neighbourhood diversity, the flip-width game, and the lift of the
//! order-guided cop strategy to a flipper strategy.
//!
//! In the flip-width game the flipper announces a `k`-flip `G_i` of `G` each
//! round; the runner, knowing `G_i`, moves along a path of length at most `r`
//! in the previous graph `G_{i-1}` (with `G_0 = G`). The flipper wins once the
//! runner stands on a vertex isolated in the current graph.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::graph::Graph;
use crate::ordering::VertexOrder;
use crate::strategy::next_cop_positions;
use crate::vertex_set::{subsets_up_to, VertexSet};

pub const MAX_KFLIP_N: usize = 6;
pub const MAX_KFLIP_K: usize = 3;
pub const MAX_FLIPWIDTH_N: usize = 5;
pub const MAX_FLIPWIDTH_K: usize = 2;
pub const MAX_LIFT_N: usize = 8;

/// A partition of `V(G)` into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidFlip("empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidFlip(format!("block {b:?} overlaps an earlier block")));
            }
            seen = seen.union(b);
        }
        if seen != VertexSet::full(n) {
            return Err(Error::InvalidFlip(format!("blocks cover {seen:?}, not all of 0..{n}")));
        }
        Ok(Partition { blocks })
    }

    /// The single-block partition `{V}` (empty for `n = 0`).
    pub fn trivial(n: usize) -> Self {
        let blocks = if n == 0 { Vec::new() } else { vec![VertexSet::full(n)] };
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// A partition plus the unordered block pairs whose adjacency is inverted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FlipSpec {
    pub partition: Partition,
    pairs: BTreeSet<(usize, usize)>,
}

impl FlipSpec {
    /// Pairs are normalised to `(min, max)`; repeats collapse.
    pub fn new<I>(partition: Partition, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let k = partition.len();
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a >= k || b >= k {
                return Err(Error::InvalidFlip(format!("pair ({a}, {b}) names a missing block")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(FlipSpec { partition, pairs: set })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn width(&self) -> usize {
        self.partition.len()
    }
}

/// Inverts adjacency between the blocks of every listed pair. A pair `(A, A)`
/// inverts adjacency inside `A`; no loops are created.
pub fn apply_flip(g: &Graph, spec: &FlipSpec) -> Result<Graph> {
    let covered = spec.partition.blocks().iter().fold(VertexSet::EMPTY, |acc, &b| acc.union(b));
    if covered != g.vertices() {
        return Err(Error::InvalidFlip("partition does not match the graph's vertices".into()));
    }
    let mut out = g.clone();
    let rows = out.rows_mut();
    let blocks = spec.partition.blocks();
    for (i, j) in spec.pairs() {
        let (a, b) = (blocks[i], blocks[j]);
        if i == j {
            for u in a {
                rows[u].0 ^= a.without(u).bits();
            }
        } else {
            for u in a {
                rows[u].0 ^= b.bits();
            }
            for u in b {
                rows[u].0 ^= a.bits();
            }
        }
    }
    Ok(out)
}

/// Set partitions of `0..n` into at most `k` blocks (restricted growth
/// strings, blocks in order of their smallest member).
fn set_partitions(n: usize, k: usize) -> Vec<Partition> {
    fn rec(v: usize, n: usize, k: usize, blocks: &mut Vec<VertexSet>, out: &mut Vec<Partition>) {
        if v == n {
            out.push(Partition { blocks: blocks.clone() });
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].insert(v);
            rec(v + 1, n, k, blocks, out);
            blocks[i].remove(v);
        }
        if blocks.len() < k {
            blocks.push(VertexSet::singleton(v));
            rec(v + 1, n, k, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every distinct `k`-flip of `g`, each with one spec producing it.
pub fn enumerate_kflips_with_specs(g: &Graph, k: usize) -> Result<BTreeMap<Graph, FlipSpec>> {
    if k == 0 {
        return Err(Error::InvalidParameter("flip width must be at least 1".into()));
    }
    guard("k-flip enumeration vertex count", MAX_KFLIP_N, g.n())?;
    guard("k-flip enumeration width", MAX_KFLIP_K, k)?;
    let mut out = BTreeMap::new();
    for partition in set_partitions(g.n(), k) {
        let b = partition.len();
        let all_pairs: Vec<(usize, usize)> = (0..b).flat_map(|i| (i..b).map(move |j| (i, j))).collect();
        for mask in 0u64..(1u64 << all_pairs.len()) {
            let pairs = all_pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            let spec = FlipSpec::new(partition.clone(), pairs)?;
            let h = apply_flip(g, &spec)?;
            out.entry(h).or_insert(spec);
        }
    }
    Ok(out)
}

/// Every distinct `k`-flip of `g`.
pub fn enumerate_kflips(g: &Graph, k: usize) -> Result<BTreeSet<Graph>> {
    Ok(enumerate_kflips_with_specs(g, k)?.into_keys().collect())
}

/// `π_G(S)`: the number of distinct traces `N(v) ∩ S` over `v ∉ S`.
pub fn neighbourhood_diversity(g: &Graph, s: VertexSet) -> Result<usize> {
    if !s.is_subset(g.vertices()) {
        return Err(Error::InvalidParameter(format!("{s:?} is not a vertex subset")));
    }
    let traces: BTreeSet<VertexSet> =
        g.vertices().difference(s).iter().map(|v| g.neighbours(v).intersection(s)).collect();
    Ok(traces.len())
}

/// `π_G(k)`: the largest `π_G(S)` over `|S| ≤ k`.
pub fn pi_k(g: &Graph, k: usize) -> Result<usize> {
    if g.n() > 16 && k > 3 {
        return Err(Error::Guard { what: "pi_k enumeration (n > 16 needs k <= 3)", limit: 3, got: k });
    }
    subsets_up_to(g.vertices(), k)
        .into_iter()
        .map(|s| neighbourhood_diversity(g, s))
        .try_fold(0, |acc, x| x.map(|x| acc.max(x)))
}

/// A flip that isolates `S` and leaves `G - S` unchanged.
///
/// Blocks: one singleton per member of `S` (ascending), then the vertices
/// outside `S` grouped by their trace on `S` (ordered by smallest member).
/// Each `{s}` is paired with every block whose vertices are all adjacent to
/// `s`. Outside blocks share one trace, so they are either complete or
/// anticomplete to each `s`.
pub fn isolating_flip(g: &Graph, s: VertexSet) -> Result<FlipSpec> {
    if s.is_empty() {
        return Err(Error::InvalidParameter("cannot isolate an empty set".into()));
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::InvalidParameter(format!("{s:?} is not a vertex subset")));
    }
    let mut blocks: Vec<VertexSet> = s.iter().map(VertexSet::singleton).collect();
    let mut by_trace: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for v in g.vertices().difference(s) {
        by_trace.entry(g.neighbours(v).intersection(s)).or_default().insert(v);
    }
    let mut classes: Vec<VertexSet> = by_trace.into_values().collect();
    classes.sort_by_key(|b| b.first());
    blocks.extend(classes);

    let mut pairs = Vec::new();
    for (i, sv) in s.iter().enumerate() {
        for (j, &b) in blocks.iter().enumerate() {
            if b.is_subset(g.neighbours(sv)) {
                pairs.push((i, j));
            }
        }
    }
    FlipSpec::new(Partition::new(g.n(), blocks)?, pairs)
}

/// Flipper's winning moves: for each state `(announced graph, runner)`, the
/// next graph to announce and its spec.
#[derive(Clone, Debug, Default)]
pub struct FlipCertificate {
    moves: HashMap<(Graph, usize), (Graph, FlipSpec)>,
}

impl FlipCertificate {
    pub fn next(&self, current: &Graph, runner: usize) -> Option<(&Graph, &FlipSpec)> {
        self.moves.get(&(current.clone(), runner)).map(|(h, s)| (h, s))
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct FlipWidthDecision {
    pub flipper_wins: bool,
    pub certificate: FlipCertificate,
}

/// Decides the flip-width game with radius `r` and width `k`.
pub fn flipwidth_decide(g: &Graph, r: usize, k: usize) -> Result<FlipWidthDecision> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidParameter("radius and width must be at least 1".into()));
    }
    guard("flip-width solver vertex count", MAX_FLIPWIDTH_N, g.n())?;
    guard("flip-width solver width", MAX_FLIPWIDTH_K, k)?;
    let flips: Vec<(Graph, FlipSpec)> = enumerate_kflips_with_specs(g, k)?.into_iter().collect();
    Ok(solve_flip_game(g, r, &flips))
}

fn solve_flip_game(g: &Graph, r: usize, flips: &[(Graph, FlipSpec)]) -> FlipWidthDecision {
    // state graphs: every k-flip (G itself is the empty flip) plus G
    let mut graphs: Vec<Graph> = flips.iter().map(|(h, _)| h.clone()).collect();
    if !graphs.contains(g) {
        graphs.push(g.clone());
    }
    let isolated: Vec<VertexSet> = flips.iter().map(|(h, _)| h.isolated()).collect();
    let balls: Vec<Vec<VertexSet>> = graphs.iter().map(|h| (0..h.n()).map(|x| h.ball(x, r)).collect()).collect();
    let flip_index: HashMap<&Graph, usize> = graphs.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let flip_targets: Vec<usize> = flips.iter().map(|(h, _)| flip_index[h]).collect();

    // win[i]: runner positions in graphs[i] from which the flipper wins,
    // counting positions already isolated in graphs[i]
    let mut win: Vec<VertexSet> = graphs.iter().map(|h| h.isolated()).collect();
    let mut certificate = FlipCertificate::default();
    loop {
        let snapshot = win.clone();
        let mut changed = false;
        for (gi, h) in graphs.iter().enumerate() {
            for x in h.vertices().difference(snapshot[gi]) {
                let ball = balls[gi][x];
                let choice =
                    (0..flips.len()).find(|&fi| ball.is_subset(isolated[fi].union(snapshot[flip_targets[fi]])));
                if let Some(fi) = choice {
                    win[gi].insert(x);
                    certificate.moves.insert((h.clone(), x), flips[fi].clone());
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let flipper_wins = win[flip_index[g]] == g.vertices();
    FlipWidthDecision { flipper_wins, certificate }
}

/// The least `k` for which the flipper wins.
///
/// Widths `1` and `2` are solved exactly. From `k = n` on the flipper wins
/// at once by announcing the edgeless graph (all singleton blocks, every
/// edge flipped), so for `n ≤ 3` the value is always determined; for larger
/// graphs with flip-width above 2 this returns a guard error.
pub fn flipwidth_exact(g: &Graph, r: usize) -> Result<usize> {
    guard("flip-width solver vertex count", MAX_FLIPWIDTH_N, g.n())?;
    if r == 0 {
        return Err(Error::InvalidParameter("radius must be at least 1".into()));
    }
    for k in 1..=MAX_FLIPWIDTH_K {
        if k >= g.n() || flipwidth_decide(g, r, k)?.flipper_wins {
            return Ok(k);
        }
    }
    if MAX_FLIPWIDTH_K + 1 >= g.n() {
        return Ok(MAX_FLIPWIDTH_K + 1);
    }
    Err(Error::Guard { what: "flip-width above exact solver width", limit: MAX_FLIPWIDTH_K, got: MAX_FLIPWIDTH_K + 1 })
}

/// Result of [`lift_cop_strategy`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    /// Most blocks used by any announced flip (at least 1).
    pub max_width: usize,
    /// Largest cop set isolated in any round.
    pub max_cops: usize,
    /// Largest `π_G(C_i) + |C_i|` over announced cop sets.
    pub max_diversity_bound: usize,
    /// Latest round at which the runner ends on an isolated vertex.
    pub rounds_worst_case: usize,
    pub ok: bool,
}

/// Plays the flip-width game where round `j ≥ 1` announces
/// `apply_flip(G, isolating_flip(G, C_{j-1}))` for the cop set `C_{j-1}` of
/// the order-guided strategy, against every runner.
///
/// Isolating the cop set removes every edge at it, so a runner moving in the
/// previous graph can never pass a cop of the previous round; his options are
/// a subset of the robber's, and landing on a cop means landing on an
/// isolated vertex.
pub fn lift_cop_strategy(g: &Graph, ord: &VertexOrder, r: usize) -> Result<LiftReport> {
    ord.check_for(g)?;
    if r == 0 {
        return Err(Error::InvalidParameter("radius must be at least 1".into()));
    }
    guard("lift vertex count", MAX_LIFT_N, g.n())?;
    let mut lift = Lift { g, ord, r, memo: HashMap::new(), max_width: 1, max_cops: 0, max_bound: 0, escaped: false };
    let mut worst = 0;
    for x0 in 0..g.n() {
        if g.is_isolated(x0) {
            continue;
        }
        // round 1 isolates {v_0}; the runner moves in G_0 = G
        let c0 = VertexSet::singleton(ord.at(0));
        let flipped = lift.announce(c0)?;
        for y in g.ball(x0, r) {
            if flipped.is_isolated(y) {
                worst = worst.max(1);
            } else {
                worst = worst.max(lift.explore(1, y, c0, &flipped)?);
            }
        }
    }
    Ok(LiftReport {
        max_width: lift.max_width,
        max_cops: lift.max_cops,
        max_diversity_bound: lift.max_bound,
        rounds_worst_case: worst,
        ok: !lift.escaped && lift.max_width <= lift.max_bound.max(1),
    })
}

struct Lift<'a> {
    g: &'a Graph,
    ord: &'a VertexOrder,
    r: usize,
    memo: HashMap<(usize, usize, VertexSet), usize>,
    max_width: usize,
    max_cops: usize,
    max_bound: usize,
    escaped: bool,
}

impl Lift<'_> {
    fn announce(&mut self, cops: VertexSet) -> Result<Graph> {
        // No cops this round: announce `G` itself.
        let spec = if cops.is_empty() {
            FlipSpec::new(Partition::trivial(self.g.n()), [])?
        } else {
            isolating_flip(self.g, cops)?
        };
        self.max_width = self.max_width.max(spec.width());
        self.max_cops = self.max_cops.max(cops.len());
        self.max_bound = self.max_bound.max(neighbourhood_diversity(self.g, cops)? + cops.len());
        apply_flip(self.g, &spec)
    }

    /// Worst-case finishing round after game round `j`, where the runner is
    /// at `x` in the announced graph `current` that isolates strategy cop
    /// set `cops` (strategy round `j - 1`).
    fn explore(&mut self, j: usize, x: usize, cops: VertexSet, current: &Graph) -> Result<usize> {
        if let Some(&w) = self.memo.get(&(j, x, cops)) {
            return Ok(w);
        }
        let strategy_round = j;
        if strategy_round >= self.g.n() {
            self.escaped = true;
            return Ok(j);
        }
        let next_cops = match next_cop_positions(self.g, self.ord, strategy_round, x, self.r) {
            Ok(c) => c,
            Err(_) => {
                self.escaped = true;
                return Ok(j);
            }
        };
        let flipped = self.announce(next_cops)?;
        let mut worst = j + 1;
        for y in current.ball(x, self.r) {
            if !flipped.is_isolated(y) {
                worst = worst.max(self.explore(j + 1, y, next_cops, &flipped)?);
            }
        }
        self.memo.insert((j, x, cops), worst);
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family, FamilySpec};

    fn gen(f: Family) -> Graph {
        generate(&FamilySpec::new(f)).unwrap()
    }

    #[test]
    fn complete_graph_single_flip() {
        let k4 = gen(Family::Complete { n: 4 });
        let spec = FlipSpec::new(Partition::trivial(4), [(0, 0)]).unwrap();
        assert_eq!(apply_flip(&k4, &spec).unwrap().edge_count(), 0);
        let id = FlipSpec::new(Partition::trivial(4), []).unwrap();
        assert_eq!(apply_flip(&k4, &id).unwrap(), k4);
    }

    #[test]
    fn flip_is_involution() {
        let g = gen(Family::Grid { rows: 2, cols: 3 });
        let p = Partition::new(6, vec![VertexSet(0b000111), VertexSet(0b011000), VertexSet(0b100000)]).unwrap();
        let spec = FlipSpec::new(p, [(0, 1), (1, 1), (2, 0), (0, 2)]).unwrap();
        let once = apply_flip(&g, &spec).unwrap();
        assert_ne!(once, g);
        assert_eq!(apply_flip(&once, &spec).unwrap(), g);
    }

    #[test]
    fn spec_validation() {
        assert!(Partition::new(3, vec![VertexSet(0b011), VertexSet(0b010)]).is_err());
        assert!(Partition::new(3, vec![VertexSet(0b011)]).is_err());
        assert!(Partition::new(3, vec![VertexSet(0b111), VertexSet::EMPTY]).is_err());
        assert!(FlipSpec::new(Partition::trivial(3), [(0, 1)]).is_err());
        let spec = FlipSpec::new(Partition::trivial(3), [(0, 0)]).unwrap();
        assert!(apply_flip(&Graph::empty(4).unwrap(), &spec).is_err());
    }

    #[test]
    fn kflip_examples() {
        let p3 = gen(Family::Path { n: 3 });
        let one = enumerate_kflips(&p3, 1).unwrap();
        assert_eq!(one, [p3.clone(), p3.complement()].into_iter().collect());
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(enumerate_kflips(&k1, 3).unwrap().len(), 1);
        assert!(enumerate_kflips(&gen(Family::Path { n: 7 }), 1).is_err());
        assert!(enumerate_kflips(&p3, 4).is_err());
    }

    #[test]
    fn diversity_examples() {
        let k5 = gen(Family::Complete { n: 5 });
        assert_eq!(neighbourhood_diversity(&k5, VertexSet(0b110)).unwrap(), 1);
        let star = gen(Family::CompleteBipartite { a: 1, b: 4 });
        assert_eq!(neighbourhood_diversity(&star, VertexSet::singleton(0)).unwrap(), 1);
        let p4 = gen(Family::Path { n: 4 });
        assert_eq!(neighbourhood_diversity(&p4, VertexSet(0b0110)).unwrap(), 2);
        assert_eq!(neighbourhood_diversity(&p4, p4.vertices()).unwrap(), 0);
        assert_eq!(pi_k(&k5, 3).unwrap(), 1);
        assert_eq!(pi_k(&Graph::empty(4).unwrap(), 2).unwrap(), 1);
    }

    #[test]
    fn isolating_flip_examples() {
        let k4 = gen(Family::Complete { n: 4 });
        let spec = isolating_flip(&k4, VertexSet::singleton(0)).unwrap();
        assert_eq!(spec.partition.blocks(), &[VertexSet(0b0001), VertexSet(0b1110)]);
        assert_eq!(spec.pairs().collect::<Vec<_>>(), vec![(0, 1)]);
        let h = apply_flip(&k4, &spec).unwrap();
        assert!(h.is_isolated(0));
        assert_eq!(h.edge_count(), 3);

        let p4 = gen(Family::Path { n: 4 });
        let s = VertexSet(0b0110);
        let spec = isolating_flip(&p4, s).unwrap();
        assert_eq!(spec.width(), 4);
        assert!(spec.width() <= neighbourhood_diversity(&p4, s).unwrap() + 2);
        let h = apply_flip(&p4, &spec).unwrap();
        assert_eq!(h.edge_count(), 0);

        assert!(isolating_flip(&p4, VertexSet::EMPTY).is_err());
    }

    #[test]
    fn complete_graphs_have_flipwidth_one() {
        for n in 2..=5 {
            let k = gen(Family::Complete { n });
            for r in 1..=2 {
                assert_eq!(flipwidth_exact(&k, r).unwrap(), 1);
            }
        }
        assert_eq!(flipwidth_exact(&Graph::empty(4).unwrap(), 3).unwrap(), 1);
    }

    #[test]
    fn lift_k1() {
        let k1 = Graph::empty(1).unwrap();
        let rep = lift_cop_strategy(&k1, &VertexOrder::identity(1), 1).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.max_width, 1);
        assert_eq!(rep.rounds_worst_case, 0);
    }

    #[test]
    fn lift_c5() {
        let c5 = gen(Family::Cycle { n: 5 });
        let ord = crate::colouring::scol_exact(&c5, 4).unwrap().order;
        let rep = lift_cop_strategy(&c5, &ord, 1).unwrap();
        assert!(rep.ok, "{rep:?}");
        assert!(rep.max_width <= rep.max_diversity_bound);
    }
}
