//! Simple undirected graphs on at most 64 vertices with bitmask adjacency.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Largest `n` accepted by [`enumerate_labeled_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 5;

/// A simple, finite, undirected graph on vertices `0..n`.
///
/// Adjacency is kept symmetric and irreflexive by every constructor, so a
/// `Graph` can be compared and hashed by its adjacency rows directly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        let g = Graph::empty(n).map(|mut g| {
            g.adj = adj;
            g
        })?;
        let all = VertexSet::full(n);
        for v in 0..n {
            if !g.adj[v].is_subset(all) {
                let bad = g.adj[v].difference(all).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if g.adj[v].contains(v) {
                return Err(Error::SelfLoop(v));
            }
            for u in g.adj[v] {
                if !g.adj[u].contains(v) {
                    return Err(Error::InvalidParameter(format!("adjacency not symmetric at edge {v}-{u}")));
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    /// Union of the neighbourhoods of every vertex in `set`.
    #[inline]
    pub fn neighbourhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    /// All isolated vertices.
    pub fn isolated(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Edge set restricted to both endpoints in `keep`.
    pub fn induced_rows(&self, keep: VertexSet) -> Vec<VertexSet> {
        (0..self.n).map(|v| if keep.contains(v) { self.adj[v].intersection(keep) } else { VertexSet::EMPTY }).collect()
    }

    pub(crate) fn rows_mut(&mut self) -> &mut [VertexSet] {
        &mut self.adj
    }

    /// Closed ball of radius `r` around `x`.
    pub fn ball(&self, x: usize, r: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(x);
        let mut frontier = seen;
        for _ in 0..r {
            let next = self.neighbourhood_of(frontier).difference(seen);
            if next.is_empty() {
                break;
            }
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Endpoints of paths of length at most `r` from `x` whose every vertex
    /// avoids `blocked`.
    ///
    /// The result always contains `x`. Fails if `x` itself is blocked.
    pub fn reach_avoiding(&self, x: usize, r: usize, blocked: VertexSet) -> Result<VertexSet> {
        self.check_vertex(x)?;
        if blocked.contains(x) {
            return Err(Error::Precondition(format!("start vertex {x} is in the blocked set")));
        }
        Ok(self.reach_within(x, r, self.vertices().difference(blocked)))
    }

    /// Breadth-first search from `x` that only enters vertices of `allowed`.
    pub(crate) fn reach_within(&self, x: usize, r: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(x);
        let mut frontier = seen;
        for _ in 0..r {
            let next = self.neighbourhood_of(frontier).intersection(allowed).difference(seen);
            if next.is_empty() {
                break;
            }
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// A shortest path from `x` to `y` using only vertices in `allowed`
    /// (both endpoints included), or `None`.
    pub fn shortest_path_within(&self, x: usize, y: usize, allowed: VertexSet) -> Option<Vec<usize>> {
        if !allowed.contains(x) || !allowed.contains(y) {
            return None;
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = VertexSet::singleton(x);
        let mut queue = std::collections::VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            if u == y {
                let mut path = vec![y];
                let mut cur = y;
                while cur != x {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[u].intersection(allowed).difference(seen) {
                seen.insert(w);
                parent[w] = u;
                queue.push_back(w);
            }
        }
        None
    }

    /// Complement graph (no loops).
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph { n: self.n, adj: (0..self.n).map(|v| all.difference(self.adj[v]).without(v)).collect() }
    }

    /// Parses the edge-list format: a header `n m` followed by `m` lines
    /// `u v`. Blank trailing lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut g = Graph::empty(n)?;
        let mut listed = 0;
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l)?;
            g.add_edge(u, v)?;
            listed += 1;
        }
        let found = g.edge_count();
        if found != m || listed != m {
            return Err(Error::EdgeCountMismatch { declared: m, found });
        }
        Ok(g)
    }

    /// Serializes into the edge-list format with edges sorted
    /// lexicographically.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize)> {
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse { line, msg: format!("expected two integers, got {l:?}") })?;
        tok.parse().map_err(|_| Error::Parse { line, msg: format!("not a non-negative integer: {tok:?}") })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse { line, msg: format!("trailing tokens in {l:?}") });
    }
    Ok((a, b))
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson { n: self.n, edges: self.edges() }.serialize(s)
    }
}

/// Every labeled graph on `n` vertices, exactly once.
///
/// Vertex pairs `(u, v)`, `u < v`, are indexed lexicographically and graph
/// number `mask` contains pair `i` iff bit `i` of `mask` is set; graphs are
/// produced for `mask = 0, 1, 2, ...`.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::Guard {
            what: "labeled graph enumeration vertex count",
            limit: MAX_ENUMERATION_VERTICES,
            got: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are in range")
    }))
}

/// The labeled corpus for all vertex counts `1..=max_n`.
pub fn labeled_corpus(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_labeled_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn parse_examples() {
        let g = Graph::parse("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g, path3());
        let k1 = Graph::parse("1 0").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert!(matches!(Graph::parse("3 2\n0 1\n0 1"), Err(Error::EdgeCountMismatch { declared: 2, found: 1 })));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Graph::parse("3 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("3 1\n0 3"), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
        assert!(matches!(Graph::parse("3 1\n1 1"), Err(Error::SelfLoop(1))));
        assert!(matches!(Graph::parse("3 2\n0 1"), Err(Error::EdgeCountMismatch { .. })));
        assert!(matches!(Graph::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("65 0"), Err(Error::TooLarge { .. })));
        assert!(matches!(Graph::parse("3 1\n0 1 2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn serialize_sorted() {
        let g = Graph::from_edges(4, [(2, 3), (1, 0), (3, 0)]).unwrap();
        assert_eq!(g.to_edge_list(), "4 3\n0 1\n0 3\n2 3\n");
    }

    #[test]
    fn reach_avoiding_examples() {
        let p3 = path3();
        assert_eq!(p3.reach_avoiding(0, 2, VertexSet::EMPTY).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(p3.reach_avoiding(0, 2, VertexSet::singleton(1)).unwrap().to_vec(), vec![0]);
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.reach_avoiding(0, 1, VertexSet::singleton(4)).unwrap().to_vec(), vec![0, 1]);
        assert!(p3.reach_avoiding(1, 1, VertexSet::singleton(1)).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert!(enumerate_labeled_graphs(6).is_err());
        let all: std::collections::HashSet<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(all.len(), 64);
    }

    #[test]
    fn complement_of_path() {
        let c = path3().complement();
        assert_eq!(c.edges(), vec![(0, 2)]);
    }

    #[test]
    fn shortest_path() {
        let p3 = path3();
        assert_eq!(p3.shortest_path_within(0, 2, p3.vertices()), Some(vec![0, 1, 2]));
        assert_eq!(p3.shortest_path_within(0, 2, VertexSet(0b101)), None);
    }
}
