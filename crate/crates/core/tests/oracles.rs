//! Brute-force oracles for the reach sets, reachability and k-flips.
//!
//! The oracles enumerate simple paths literally and share no code with the
//! library's breadth-first implementations.

use std::collections::BTreeSet;

use copflip::{
    apply_flip, enumerate_kflips, labeled_corpus, next_cop_positions, order_cost_wcol, reach_m, reach_m_inclusive,
    reach_q, reach_r, robber_moves, wcol_exact, FlipSpec, Graph, Partition, VertexOrder, VertexSet,
};
use itertools::Itertools;

/// Every simple path starting at `start` with at most `max_len` edges.
fn simple_paths(g: &Graph, start: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, path: &mut Vec<usize>, max_len: usize, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        if path.len() > max_len {
            return;
        }
        let last = *path.last().unwrap();
        for u in 0..g.n() {
            if g.has_edge(last, u) && !path.contains(&u) {
                path.push(u);
                rec(g, path, max_len, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, &mut vec![start], max_len, &mut out);
    out.retain(|p| p.len() <= max_len + 1);
    out
}

fn internal(p: &[usize]) -> &[usize] {
    if p.len() <= 2 {
        &[]
    } else {
        &p[1..p.len() - 1]
    }
}

fn oracle_r(g: &Graph, ord: &VertexOrder, v: usize, r: usize) -> VertexSet {
    let pv = ord.position(v);
    simple_paths(g, v, r)
        .into_iter()
        .filter(|p| {
            let w = *p.last().unwrap();
            ord.position(w) <= pv && internal(p).iter().all(|&u| ord.position(u) > pv)
        })
        .map(|p| *p.last().unwrap())
        .collect()
}

fn oracle_q(g: &Graph, ord: &VertexOrder, v: usize, r: usize) -> VertexSet {
    let pv = ord.position(v);
    simple_paths(g, v, r)
        .into_iter()
        .filter(|p| {
            let w = *p.last().unwrap();
            let pw = ord.position(w);
            pw <= pv && internal(p).iter().all(|&u| ord.position(u) > pw)
        })
        .map(|p| *p.last().unwrap())
        .collect()
}

fn oracle_m(g: &Graph, ord: &VertexOrder, vi: usize, vj: usize, s: usize) -> VertexSet {
    let pi = ord.position(vi);
    simple_paths(g, vj, s)
        .into_iter()
        .filter(|p| {
            let w = *p.last().unwrap();
            ord.position(w) <= pi && internal(p).iter().all(|&u| ord.position(u) > pi)
        })
        .map(|p| *p.last().unwrap())
        .collect()
}

fn oracle_m_inclusive(g: &Graph, ord: &VertexOrder, vi: usize, vj: usize, s: usize) -> VertexSet {
    let pi = ord.position(vi);
    simple_paths(g, vj, s)
        .into_iter()
        .filter(|p| {
            let w = *p.last().unwrap();
            ord.position(w) <= pi && internal(p).iter().all(|&u| ord.position(u) >= pi)
        })
        .map(|p| *p.last().unwrap())
        .collect()
}

fn oracle_avoiding(g: &Graph, x: usize, r: usize, blocked: VertexSet) -> VertexSet {
    simple_paths(g, x, r)
        .into_iter()
        .filter(|p| p.iter().all(|&u| !blocked.contains(u)))
        .map(|p| *p.last().unwrap())
        .collect()
}

fn orders(n: usize) -> Vec<VertexOrder> {
    (0..n).permutations(n).map(|p| VertexOrder::new(p).unwrap()).collect()
}

#[test]
fn reach_sets_match_path_enumeration() {
    for g in labeled_corpus(4).unwrap() {
        for ord in orders(g.n()) {
            for v in 0..g.n() {
                for r in [1, 2, 3] {
                    assert_eq!(reach_r(&g, &ord, v, r).unwrap(), oracle_r(&g, &ord, v, r), "R {g:?} {ord:?} {v} {r}");
                    assert_eq!(reach_q(&g, &ord, v, r).unwrap(), oracle_q(&g, &ord, v, r), "Q {g:?} {ord:?} {v} {r}");
                }
                for vj in 0..g.n() {
                    if ord.position(v) > ord.position(vj) {
                        assert!(reach_m(&g, &ord, v, vj, 2).is_err());
                        continue;
                    }
                    for s in [1, 2, 4] {
                        assert_eq!(
                            reach_m(&g, &ord, v, vj, s).unwrap(),
                            oracle_m(&g, &ord, v, vj, s),
                            "M {g:?} {ord:?} {v} {vj} {s}"
                        );
                        assert_eq!(
                            reach_m_inclusive(&g, &ord, v, vj, s).unwrap(),
                            oracle_m_inclusive(&g, &ord, v, vj, s),
                            "inclusive M {g:?} {ord:?} {v} {vj} {s}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn reach_sets_on_five_vertices() {
    // The identity order and its reverse on every 5-vertex graph.
    for g in copflip::enumerate_labeled_graphs(5).unwrap() {
        for ord in [VertexOrder::identity(5), VertexOrder::new(vec![4, 3, 2, 1, 0]).unwrap()] {
            for v in 0..5 {
                assert_eq!(reach_r(&g, &ord, v, 4).unwrap(), oracle_r(&g, &ord, v, 4));
                assert_eq!(reach_q(&g, &ord, v, 4).unwrap(), oracle_q(&g, &ord, v, 4));
            }
        }
    }
}

#[test]
fn avoiding_matches_path_enumeration() {
    for g in labeled_corpus(4).unwrap() {
        for blocked in 0u64..(1 << g.n()) {
            let blocked = VertexSet(blocked);
            for x in 0..g.n() {
                if blocked.contains(x) {
                    assert!(g.reach_avoiding(x, 1, blocked).is_err());
                    continue;
                }
                for r in 0..4 {
                    assert_eq!(g.reach_avoiding(x, r, blocked).unwrap(), oracle_avoiding(&g, x, r, blocked));
                }
            }
        }
    }
}

#[test]
fn robber_moves_small_examples() {
    let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let one = VertexSet::singleton(1);
    assert_eq!(robber_moves(&p3, 2, one, one, 2).unwrap(), VertexSet::singleton(2));
    assert_eq!(robber_moves(&p3, 2, one, VertexSet::EMPTY, 2).unwrap(), VertexSet::full(3));
    assert!(robber_moves(&p3, 1, one, one, 2).is_err());

    // Only the cop on 1 stays grounded, so the robber escapes through 3.
    let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let got = robber_moves(&c4, 0, one, [1, 3].into_iter().collect(), 2).unwrap();
    assert_eq!(got, oracle_avoiding(&c4, 0, 2, one));
    assert_eq!(got.to_vec(), vec![0, 2, 3]);

    let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let blocked = VertexSet::singleton(2);
    assert_eq!(robber_moves(&c5, 0, blocked, blocked, 2).unwrap().to_vec(), vec![0, 1, 3, 4]);
}

#[test]
fn wcol_matches_permutations() {
    for g in labeled_corpus(4).unwrap() {
        for r in [1, 2, 3] {
            let best = orders(g.n()).iter().map(|o| order_cost_wcol(&g, o, r).unwrap()).min().unwrap();
            let got = wcol_exact(&g, r).unwrap();
            assert_eq!(got.value, best);
            assert_eq!(order_cost_wcol(&g, &got.order, r).unwrap(), best);
        }
    }
}

/// Every k-flip spelled out directly: assign each vertex a block label, then
/// flip each unordered label pair (including a label with itself) or not.
fn kflips_direct(g: &Graph, k: usize) -> BTreeSet<Graph> {
    let n = g.n();
    let mut out = BTreeSet::new();
    for labels in (0..n).map(|_| 0..k).multi_cartesian_product() {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
        for mask in 0u64..(1 << pairs.len()) {
            let mut h = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    let (a, b) = (labels[u].min(labels[v]), labels[u].max(labels[v]));
                    let idx = pairs.iter().position(|&p| p == (a, b)).unwrap();
                    if g.has_edge(u, v) ^ (mask >> idx & 1 == 1) {
                        h.add_edge(u, v).unwrap();
                    }
                }
            }
            out.insert(h);
        }
    }
    out
}

#[test]
fn kflips_match_direct_enumeration() {
    let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let direct = kflips_direct(&p3, 2);
    assert_eq!(enumerate_kflips(&p3, 2).unwrap(), direct);
    for g in labeled_corpus(4).unwrap() {
        for k in 1..=3 {
            assert_eq!(enumerate_kflips(&g, k).unwrap(), kflips_direct(&g, k), "{g:?} k={k}");
        }
    }
}

#[test]
fn flip_of_single_block() {
    let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let spec = FlipSpec::new(Partition::trivial(3), [(0, 0)]).unwrap();
    let h = apply_flip(&p3, &spec).unwrap();
    assert_eq!(h, p3.complement());
    let flips = enumerate_kflips(&p3, 1).unwrap();
    assert_eq!(flips.len(), 2);
}

#[test]
fn strict_m_set_lets_the_robber_back() {
    // P3 with the identity order at radius 2: the robber starts on 2. The
    // strict set puts the only cop on 1, which is airborne, so the robber
    // runs 2, 1, 0 behind the threshold. The inclusive set also covers 0.
    let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let ord = VertexOrder::identity(3);
    let strict = reach_m(&p3, &ord, 1, 2, 4).unwrap();
    assert_eq!(strict.to_vec(), vec![1]);
    let grounded = VertexSet::singleton(0).intersection(strict);
    assert!(robber_moves(&p3, 2, VertexSet::singleton(0), strict, 2).unwrap().contains(0));
    assert!(grounded.is_empty());

    let cops = next_cop_positions(&p3, &ord, 1, 2, 2).unwrap();
    assert_eq!(cops.to_vec(), vec![0, 1]);
    let moves = robber_moves(&p3, 2, VertexSet::singleton(0), cops, 2).unwrap();
    assert_eq!(moves.to_vec(), vec![1, 2]);
}
