//! Exact and heuristic strong/weak colouring numbers.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::graph::Graph;
use crate::ordering::{order_cost_scol, threshold_reach, VertexOrder};
use crate::vertex_set::VertexSet;

/// Vertex limit for the subset dynamic program.
pub const SCOL_EXACT_MAX_N: usize = 24;
/// Vertex limit for permutation search.
pub const PERMUTATION_MAX_N: usize = 8;

/// A colouring-number value with an order that achieves it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderValue {
    pub value: usize,
    pub order: VertexOrder,
}

fn check_radius(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidParameter("radius must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `|R(v)|` for a vertex `v` whose set of later vertices is `after`.
#[inline]
fn suffix_cost(g: &Graph, v: usize, after: VertexSet, r: usize) -> usize {
    let before = g.vertices().difference(after);
    threshold_reach(g, v, r, after, before).len()
}

/// Exact `scol_r` by dynamic programming over suffix sets.
///
/// The size of `R(v)` depends only on `v` and the set `A` of vertices placed
/// after it, so with `f(∅) = 0` and
/// `f(A) = min_{v ∈ A} max(cost(v, A \ {v}), f(A \ {v}))` we get
/// `scol_r = f(V)`. The witness takes the smallest optimal `v` at each step.
pub fn scol_exact(g: &Graph, r: usize) -> Result<OrderValue> {
    check_radius(r)?;
    guard("scol_exact vertex count", SCOL_EXACT_MAX_N, g.n())?;
    let n = g.n();
    let full = 1usize << n;
    let mut best = vec![u8::MAX; full];
    best[0] = 0;
    for a in 1..full {
        let set = VertexSet(a as u64);
        let mut f = u8::MAX;
        for v in set {
            let rest = set.without(v);
            let sub = best[rest.bits() as usize];
            if sub >= f {
                continue;
            }
            let c = suffix_cost(g, v, rest, r) as u8;
            f = f.min(c.max(sub));
        }
        best[a] = f;
    }

    let mut seq = Vec::with_capacity(n);
    let mut set = g.vertices();
    while !set.is_empty() {
        let target = best[set.bits() as usize];
        let v = set
            .iter()
            .find(|&v| {
                let rest = set.without(v);
                suffix_cost(g, v, rest, r).max(best[rest.bits() as usize] as usize) == target as usize
            })
            .expect("some vertex realises the optimum");
        seq.push(v);
        set.remove(v);
    }
    Ok(OrderValue { value: best[full - 1] as usize, order: VertexOrder::new(seq)? })
}

/// `scol_r` as the minimum order cost over all `n!` permutations.
pub fn scol_bruteforce(g: &Graph, r: usize) -> Result<usize> {
    check_radius(r)?;
    guard("scol_bruteforce vertex count", PERMUTATION_MAX_N, g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    for perm in (0..n).permutations(n) {
        let ord = VertexOrder::new(perm)?;
        best = best.min(order_cost_scol(g, &ord, r)?);
    }
    Ok(best)
}

/// Exact `wcol_r` by branch and bound over order prefixes.
///
/// Once `v` is placed after a prefix, `Q(v)` is fixed: every candidate `w`
/// in the prefix only needs to know which vertices come after `w`. The search
/// visits prefixes lexicographically and only accepts strict improvements, so
/// the witness is the lexicographically smallest optimal order.
pub fn wcol_exact(g: &Graph, r: usize) -> Result<OrderValue> {
    check_radius(r)?;
    guard("wcol_exact vertex count", PERMUTATION_MAX_N, g.n())?;
    let n = g.n();
    let mut search = WcolSearch { g, r, prefix: Vec::with_capacity(n), best: n + 1, best_order: (0..n).collect() };
    search.dfs(VertexSet::EMPTY, 0);
    Ok(OrderValue { value: search.best.min(n), order: VertexOrder::new(search.best_order)? })
}

struct WcolSearch<'a> {
    g: &'a Graph,
    r: usize,
    prefix: Vec<usize>,
    best: usize,
    best_order: Vec<usize>,
}

impl WcolSearch<'_> {
    fn weak_cost(&self, v: usize) -> usize {
        let all = self.g.vertices();
        let mut upto = VertexSet::EMPTY;
        let mut count = 1;
        for &w in &self.prefix {
            upto.insert(w);
            let through = all.difference(upto);
            if threshold_reach(self.g, v, self.r, through, VertexSet::singleton(w)).contains(w) {
                count += 1;
            }
        }
        count
    }

    fn dfs(&mut self, placed: VertexSet, running: usize) {
        if self.prefix.len() == self.g.n() {
            if running < self.best {
                self.best = running;
                self.best_order = self.prefix.clone();
            }
            return;
        }
        for v in self.g.vertices().difference(placed) {
            let cost = running.max(self.weak_cost(v));
            if cost >= self.best {
                continue;
            }
            self.prefix.push(v);
            self.dfs(placed.with(v), cost);
            self.prefix.pop();
        }
    }
}

/// Greedy upper bound for `scol_r`.
///
/// Builds the order from the end: the next vertex placed (in front of those
/// already placed) is one minimising `|R|` given the already placed vertices
/// as its after-set, smallest id first. At `r = 1` this is the smallest-last
/// degeneracy order.
pub fn scol_greedy(g: &Graph, r: usize) -> Result<OrderValue> {
    check_radius(r)?;
    let mut placed = VertexSet::EMPTY;
    let mut rev = Vec::with_capacity(g.n());
    while placed.len() < g.n() {
        let v = g
            .vertices()
            .difference(placed)
            .iter()
            .min_by_key(|&v| (suffix_cost(g, v, placed, r), v))
            .expect("unplaced vertex exists");
        rev.push(v);
        placed.insert(v);
    }
    rev.reverse();
    let order = VertexOrder::new(rev)?;
    Ok(OrderValue { value: order_cost_scol(g, &order, r)?, order })
}

/// Degeneracy with a smallest-last witness order: every vertex has at most
/// `value` neighbours before it.
pub fn degeneracy(g: &Graph) -> OrderValue {
    let mut remaining = g.vertices();
    let mut rev = Vec::with_capacity(g.n());
    let mut value = 0;
    while let Some(v) = remaining.iter().min_by_key(|&v| (g.neighbours(v).intersection(remaining).len(), v)) {
        value = value.max(g.neighbours(v).intersection(remaining).len());
        rev.push(v);
        remaining.remove(v);
    }
    rev.reverse();
    OrderValue { value, order: VertexOrder::new(rev).expect("removal order is a permutation") }
}
