//! Deterministic generators for the graph families used in the verification
//! corpus.
//!
//! Random choices come from SplitMix64 (Steele, Lea and Flood) seeded with
//! the family's 64-bit seed. Every draw is one raw `next_u64` output:
//!
//! * Erdős–Rényi `G(n, p)`: pairs `(u, v)`, `u < v`, are visited in
//!   lexicographic order and the edge is kept iff `(x >> 11) * 2^-53 < p`
//!   for the next output `x`.
//! * Apollonian: the face list starts as `[(0, 1, 2)]`; vertex `v = 3, 4, ...`
//!   goes into face `x % faces.len()`, which is replaced in place by
//!   `(a, b, v)` and followed by `(a, v, c)` and `(v, b, c)` appended at the end.
//!
//! These rules are fixed so that corpora reproduce bit-exactly.

use std::fmt;
use std::str::FromStr;

use rand::RngCore;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A graph family together with its size parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Grid {
        rows: usize,
        cols: usize,
    },
    /// Planar stacked triangulation on `n ≥ 3` vertices.
    Apollonian {
        n: usize,
    },
    ErdosRenyi {
        n: usize,
        p: f64,
    },
    Hypercube {
        dim: usize,
    },
}

/// A family plus the seed used by its random choices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, seed: 0 }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Short identifier such as `grid:3,3` (random families append `@seed`).
    pub fn id(&self) -> String {
        match self.family {
            Family::ErdosRenyi { .. } | Family::Apollonian { .. } => {
                format!("{}@{}", self.family, self.seed)
            }
            _ => self.family.to_string(),
        }
    }

    /// Largest `t` for which members of this family are guaranteed
    /// `K_t`-minor-free by construction, if known.
    pub fn excluded_clique_minor(&self) -> Option<usize> {
        match self.family {
            Family::Path { .. } => Some(3),
            Family::Cycle { .. } => Some(4),
            Family::Complete { n } => Some(n + 1),
            Family::Grid { .. } | Family::Apollonian { .. } => Some(5),
            Family::CompleteBipartite { a, b } if a.min(b) <= 2 => Some(5),
            _ => None,
        }
    }

    /// Whether members are planar by construction.
    pub fn is_planar(&self) -> bool {
        match self.family {
            Family::Path { .. } | Family::Cycle { .. } => true,
            Family::Complete { n } => n <= 4,
            Family::Grid { .. } | Family::Apollonian { .. } => true,
            Family::CompleteBipartite { a, b } => a.min(b) <= 2,
            Family::Hypercube { dim } => dim <= 3,
            Family::ErdosRenyi { .. } => false,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "path:{n}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
            Family::Complete { n } => write!(f, "complete:{n}"),
            Family::CompleteBipartite { a, b } => write!(f, "complete-bipartite:{a},{b}"),
            Family::Grid { rows, cols } => write!(f, "grid:{rows},{cols}"),
            Family::Apollonian { n } => write!(f, "apollonian:{n}"),
            Family::ErdosRenyi { n, p } => write!(f, "erdos-renyi:{n},{p}"),
            Family::Hypercube { dim } => write!(f, "hypercube:{dim}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name:arg[,arg]`, e.g. `grid:3,3` or `erdos-renyi:6,0.5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse family {s:?}"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize> { args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad) };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad())
            }
        };
        let fam = match name {
            "path" => Family::Path { n: int(0)? },
            "cycle" => Family::Cycle { n: int(0)? },
            "complete" => Family::Complete { n: int(0)? },
            "complete-bipartite" => {
                arity(2)?;
                Family::CompleteBipartite { a: int(0)?, b: int(1)? }
            }
            "grid" => {
                arity(2)?;
                Family::Grid { rows: int(0)?, cols: int(1)? }
            }
            "apollonian" => Family::Apollonian { n: int(0)? },
            "erdos-renyi" => {
                arity(2)?;
                let p: f64 = args[1].parse().map_err(|_| bad())?;
                Family::ErdosRenyi { n: int(0)?, p }
            }
            "hypercube" => Family::Hypercube { dim: int(0)? },
            _ => return Err(bad()),
        };
        if !matches!(fam, Family::CompleteBipartite { .. } | Family::Grid { .. } | Family::ErdosRenyi { .. }) {
            arity(1)?;
        }
        Ok(fam)
    }
}

fn check_n(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!("{what} needs at least {min} vertices, got {n}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_VERTICES });
    }
    Ok(())
}

/// Builds the graph described by `spec`. Same spec, same graph.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec.family {
        Family::Path { n } => {
            check_n(n, 1, "path")?;
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        Family::Cycle { n } => {
            check_n(n, 3, "cycle")?;
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Complete { n } => {
            check_n(n, 1, "complete graph")?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(Error::InvalidParameter("complete bipartite sides must be nonempty".into()));
            }
            check_n(a + b, 2, "complete bipartite graph")?;
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(Error::InvalidParameter(format!("grid {rows}x{cols} has an empty side")));
            }
            check_n(rows * cols, 1, "grid")?;
            let id = |i: usize, j: usize| i * cols + j;
            let mut edges = Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    if j + 1 < cols {
                        edges.push((id(i, j), id(i, j + 1)));
                    }
                    if i + 1 < rows {
                        edges.push((id(i, j), id(i + 1, j)));
                    }
                }
            }
            Graph::from_edges(rows * cols, edges)
        }
        Family::Apollonian { n } => {
            check_n(n, 3, "apollonian network")?;
            let mut rng = SplitMix64::seed_from_u64(spec.seed);
            let mut g = Graph::from_edges(n, [(0, 1), (1, 2), (0, 2)])?;
            let mut faces = vec![(0usize, 1usize, 2usize)];
            for v in 3..n {
                let idx = (rng.next_u64() % faces.len() as u64) as usize;
                let (a, b, c) = faces[idx];
                g.add_edge(v, a)?;
                g.add_edge(v, b)?;
                g.add_edge(v, c)?;
                faces[idx] = (a, b, v);
                faces.push((a, v, c));
                faces.push((v, b, c));
            }
            Ok(g)
        }
        Family::ErdosRenyi { n, p } => {
            check_n(n, 1, "erdos-renyi graph")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
            }
            let mut rng = SplitMix64::seed_from_u64(spec.seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                    if x < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
        Family::Hypercube { dim } => {
            if dim > 6 {
                return Err(Error::TooLarge { n: 1 << dim.min(32), max: MAX_VERTICES });
            }
            let n = 1usize << dim;
            let edges = (0..n).flat_map(|u| (0..dim).map(move |b| (u, u ^ (1 << b)))).filter(|(u, v)| u < v);
            Graph::from_edges(n, edges)
        }
    }
}
