//! Snake graphs `H_n` of the annulus and their perfect matchings.
//!
//! `H_n` is a ladder of `n` square tiles with vertices `A_0..A_n` and
//! `B_0..B_n`. Rungs `A_iB_i` carry `x3` (even `i`) or `x4` (odd `i`); the
//! rails `A_iA_{i+1}`, `B_iB_{i+1}` carry `x2` (even `i`) or `x1` (odd `i`).
//! Tile `t` (1-based, between rungs `t-1` and `t`) carries `y1` when `t` is
//! odd and `y2` when `t` is even.
//!
//! `H_{2n+1}` is the snake graph of the arc `gamma_{n+3}`; `H_{2n}` drops its
//! top tile.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{ExponentVector, LaurentPolynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnakeError {
    #[error("a snake graph needs at least one tile, got {0}")]
    NoTiles(usize),
    #[error("cluster variable index must be at least 3, got {0}")]
    ClusterIndex(usize),
    #[error("edge {edge} does not exist in H_{tiles}")]
    EdgeOutOfRange { edge: Edge, tiles: usize },
    #[error("vertex {vertex} is covered {count} times")]
    NotPerfect { vertex: Vertex, count: usize },
    #[error("cannot parse edge {0:?}")]
    BadEdge(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A(usize),
    B(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::A(i) => write!(f, "A{i}"),
            Vertex::B(i) => write!(f, "B{i}"),
        }
    }
}

/// An edge of `H_n`, identified by kind and position.
///
/// Edges sort by position along the ladder, then rung before rails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    /// `A_i B_i`
    Rung(usize),
    /// `A_i A_{i+1}`
    SideA(usize),
    /// `B_i B_{i+1}`
    SideB(usize),
}

impl Edge {
    pub fn position(self) -> usize {
        match self {
            Edge::Rung(i) | Edge::SideA(i) | Edge::SideB(i) => i,
        }
    }

    fn kind_rank(self) -> u8 {
        match self {
            Edge::Rung(_) => 0,
            Edge::SideA(_) => 1,
            Edge::SideB(_) => 2,
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        match self {
            Edge::Rung(i) => (Vertex::A(i), Vertex::B(i)),
            Edge::SideA(i) => (Vertex::A(i), Vertex::A(i + 1)),
            Edge::SideB(i) => (Vertex::B(i), Vertex::B(i + 1)),
        }
    }

    /// Edge weight variable.
    pub fn weight(self) -> Var {
        match self {
            Edge::Rung(i) if i % 2 == 0 => Var::X3,
            Edge::Rung(_) => Var::X4,
            Edge::SideA(i) | Edge::SideB(i) if i % 2 == 0 => Var::X2,
            _ => Var::X1,
        }
    }
}

impl Ord for Edge {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.position(), self.kind_rank()).cmp(&(other.position(), other.kind_rank()))
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::Rung(i) => write!(f, "rung:{i}"),
            Edge::SideA(i) => write!(f, "sideA:{i}"),
            Edge::SideB(i) => write!(f, "sideB:{i}"),
        }
    }
}

impl FromStr for Edge {
    type Err = SnakeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SnakeError::BadEdge(s.to_string());
        let (kind, index) = s.split_once(':').ok_or_else(bad)?;
        let i: usize = index.parse().map_err(|_| bad())?;
        match kind {
            "rung" => Ok(Edge::Rung(i)),
            "sideA" => Ok(Edge::SideA(i)),
            "sideB" => Ok(Edge::SideB(i)),
            _ => Err(bad()),
        }
    }
}

/// The ladder graph `H_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SnakeGraph {
    tiles: usize,
}

impl SnakeGraph {
    pub fn new(tiles: usize) -> Result<Self, SnakeError> {
        if tiles == 0 {
            return Err(SnakeError::NoTiles(tiles));
        }
        Ok(SnakeGraph { tiles })
    }

    pub fn tiles(&self) -> usize {
        self.tiles
    }

    pub fn vertex_count(&self) -> usize {
        2 * (self.tiles + 1)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (0..=self.tiles)
            .flat_map(|i| [Vertex::A(i), Vertex::B(i)])
            .collect()
    }

    /// All `3n + 1` edges in sorted order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(3 * self.tiles + 1);
        for i in 0..=self.tiles {
            edges.push(Edge::Rung(i));
            if i < self.tiles {
                edges.push(Edge::SideA(i));
                edges.push(Edge::SideB(i));
            }
        }
        edges
    }

    pub fn contains(&self, edge: Edge) -> bool {
        match edge {
            Edge::Rung(i) => i <= self.tiles,
            Edge::SideA(i) | Edge::SideB(i) => i < self.tiles,
        }
    }

    /// Coefficient variable of tile `t` (1-based).
    pub fn tile_coefficient(&self, t: usize) -> Var {
        debug_assert!((1..=self.tiles).contains(&t));
        if t % 2 == 1 {
            Var::Y1
        } else {
            Var::Y2
        }
    }

    /// The four boundary edges of tile `t` (1-based).
    pub fn tile_boundary(&self, t: usize) -> [Edge; 4] {
        [
            Edge::Rung(t - 1),
            Edge::SideA(t - 1),
            Edge::SideB(t - 1),
            Edge::Rung(t),
        ]
    }

    /// Edges on the outer boundary of the ladder: everything except the
    /// interior rungs `1..n-1`.
    pub fn is_boundary_edge(&self, edge: Edge) -> bool {
        match edge {
            Edge::Rung(i) => i == 0 || i == self.tiles,
            _ => true,
        }
    }

    /// Denominator monomial `x1^ceil(n/2) * x2^floor(n/2)` of `z_n`.
    pub fn denominator(&self) -> ExponentVector {
        let n = self.tiles as i32;
        ExponentVector::new([(n + 1) / 2, n / 2, 0, 0, 0, 0]).expect("positive exponents")
    }

    /// All perfect matchings, in a fixed order.
    ///
    /// Walks positions left to right; at each position either the rung is
    /// used or both rails to the next position are (rung first).
    pub fn enumerate_matchings(&self) -> Vec<PerfectMatching> {
        fn walk(pos: usize, tiles: usize, current: &mut Vec<Edge>, out: &mut Vec<PerfectMatching>) {
            if pos > tiles {
                out.push(PerfectMatching {
                    tiles,
                    edges: current.iter().copied().collect(),
                });
                return;
            }
            current.push(Edge::Rung(pos));
            walk(pos + 1, tiles, current, out);
            current.pop();
            if pos < tiles {
                current.push(Edge::SideA(pos));
                current.push(Edge::SideB(pos));
                walk(pos + 2, tiles, current, out);
                current.pop();
                current.pop();
            }
        }

        let mut out = Vec::new();
        walk(0, self.tiles, &mut Vec::new(), &mut out);
        out
    }

    /// Number of perfect matchings, by the transfer recurrence only.
    pub fn count_matchings(&self) -> u128 {
        // ways[pos] = matchings of the ladder suffix starting at `pos`
        let (mut next, mut after) = (1u128, 1u128); // positions n and n + 1
        for _ in 0..self.tiles {
            let here = next.checked_add(after).expect("count overflows u128");
            after = next;
            next = here;
        }
        next
    }

    /// The boundary matching containing the western rail `A_0A_1`.
    pub fn p_minus(&self) -> PerfectMatching {
        let mut edges = BTreeSet::new();
        let mut i = 0;
        while i < self.tiles {
            edges.insert(Edge::SideA(i));
            edges.insert(Edge::SideB(i));
            i += 2;
        }
        if self.tiles % 2 == 0 {
            edges.insert(Edge::Rung(self.tiles));
        }
        PerfectMatching {
            tiles: self.tiles,
            edges,
        }
    }

    /// The boundary matching containing the southern rung `A_0B_0`.
    pub fn p_plus(&self) -> PerfectMatching {
        let mut edges = BTreeSet::from([Edge::Rung(0)]);
        let mut i = 1;
        while i < self.tiles {
            edges.insert(Edge::SideA(i));
            edges.insert(Edge::SideB(i));
            i += 2;
        }
        if self.tiles % 2 == 1 {
            edges.insert(Edge::Rung(self.tiles));
        }
        PerfectMatching {
            tiles: self.tiles,
            edges,
        }
    }

    /// `P_- xor P` as an edge set.
    pub fn symmetric_difference(&self, p: &PerfectMatching) -> BTreeSet<Edge> {
        let minus = self.p_minus();
        minus
            .edges
            .symmetric_difference(&p.edges)
            .copied()
            .collect()
    }

    /// Tiles whose union has `P_- xor P` as its boundary.
    ///
    /// Rung `i` borders tiles `i` and `i + 1`, so it lies in the symmetric
    /// difference exactly when one of them is enclosed; walking left to right
    /// and toggling on each such rung recovers the enclosed set.
    pub fn symmetric_difference_tiles(&self, p: &PerfectMatching) -> BTreeSet<usize> {
        let diff = self.symmetric_difference(p);
        let mut inside = false;
        let mut tiles = BTreeSet::new();
        for t in 1..=self.tiles {
            if diff.contains(&Edge::Rung(t - 1)) {
                inside = !inside;
            }
            if inside {
                tiles.insert(t);
            }
        }
        tiles
    }

    /// Product of the edge weights of `p`.
    pub fn weight(&self, p: &PerfectMatching) -> LaurentPolynomial {
        let mut exps = [0i32; 6];
        for e in &p.edges {
            exps[e.weight().index()] += 1;
        }
        LaurentPolynomial::from_exponents(exps).expect("nonnegative weights")
    }

    /// `y(P)`: product of the coefficient variables of the enclosed tiles.
    pub fn y_monomial(&self, p: &PerfectMatching) -> LaurentPolynomial {
        let mut exps = [0i32; 6];
        for t in self.symmetric_difference_tiles(p) {
            exps[self.tile_coefficient(t).index()] += 1;
        }
        LaurentPolynomial::from_exponents(exps).expect("nonnegative weights")
    }
}

/// A perfect matching of some `H_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "MatchingRecord", try_from = "MatchingRecord")]
pub struct PerfectMatching {
    tiles: usize,
    edges: BTreeSet<Edge>,
}

impl PerfectMatching {
    /// Validates that `edges` covers every vertex of `H_tiles` exactly once.
    pub fn new(tiles: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, SnakeError> {
        let graph = SnakeGraph::new(tiles)?;
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let mut cover = vec![0usize; graph.vertex_count()];
        let slot = |v: Vertex| match v {
            Vertex::A(i) => 2 * i,
            Vertex::B(i) => 2 * i + 1,
        };
        for &e in &edges {
            if !graph.contains(e) {
                return Err(SnakeError::EdgeOutOfRange { edge: e, tiles });
            }
            let (u, v) = e.endpoints();
            cover[slot(u)] += 1;
            cover[slot(v)] += 1;
        }
        for v in graph.vertices() {
            let count = cover[slot(v)];
            if count != 1 {
                return Err(SnakeError::NotPerfect { vertex: v, count });
            }
        }
        Ok(PerfectMatching { tiles, edges })
    }

    pub fn tiles(&self) -> usize {
        self.tiles
    }

    pub fn graph(&self) -> SnakeGraph {
        SnakeGraph { tiles: self.tiles }
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, edge: Edge) -> bool {
        self.edges.contains(&edge)
    }

    /// Whether both rails `A_iA_{i+1}` and `B_iB_{i+1}` are used.
    pub fn has_rails(&self, i: usize) -> bool {
        self.contains(Edge::SideA(i)) && self.contains(Edge::SideB(i))
    }
}

/// Wire form `{"n": tiles, "edges": ["rung:0", "sideA:1", ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatchingRecord {
    pub n: usize,
    pub edges: Vec<String>,
}

impl From<PerfectMatching> for MatchingRecord {
    fn from(p: PerfectMatching) -> Self {
        MatchingRecord {
            n: p.tiles,
            edges: p.edges.iter().map(Edge::to_string).collect(),
        }
    }
}

impl TryFrom<MatchingRecord> for PerfectMatching {
    type Error = SnakeError;

    fn try_from(r: MatchingRecord) -> Result<Self, Self::Error> {
        let edges = r
            .edges
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Edge>, _>>()?;
        PerfectMatching::new(r.n, edges)
    }
}

/// `z_n` as the sum of `w(P) y(P)` over all perfect matchings of `H_n`,
/// divided by `x1^ceil(n/2) x2^floor(n/2)`.
pub fn z_direct(n: usize) -> Result<LaurentPolynomial, SnakeError> {
    let g = SnakeGraph::new(n)?;
    let numerator: LaurentPolynomial = g
        .enumerate_matchings()
        .iter()
        .map(|p| &g.weight(p) * &g.y_monomial(p))
        .sum();
    let d = g.denominator().exponents();
    let inverse = LaurentPolynomial::from_exponents([-d[0], -d[1], 0, 0, 0, 0])
        .expect("x1, x2 are Laurent");
    Ok(&numerator * &inverse)
}

/// `z_n` by the two-step recurrences, seeded with `z_1` and `z_2`:
///
/// ```text
/// z_{2k+1} = x1^-1 x4 y1 z_{2k} + x1^-1 x2 z_{2k-1}
/// z_{2k+2} = x2^-1 x3 z_{2k+1} + x1 x2^-1 y1 y2 z_{2k}
/// ```
pub fn z_recur(n: usize) -> Result<LaurentPolynomial, SnakeError> {
    Ok(z_sequence(n)?.pop().expect("n >= 1"))
}

/// `[z_1, ..., z_n]` by the recurrences.
pub fn z_sequence(n: usize) -> Result<Vec<LaurentPolynomial>, SnakeError> {
    if n == 0 {
        return Err(SnakeError::NoTiles(0));
    }
    let m = |e: [i32; 6]| LaurentPolynomial::from_exponents(e).expect("valid monomial");
    let odd_prev = m([-1, 0, 0, 1, 1, 0]);
    let odd_prev2 = m([-1, 1, 0, 0, 0, 0]);
    let even_prev = m([0, -1, 1, 0, 0, 0]);
    let even_prev2 = m([1, -1, 0, 0, 1, 1]);

    let mut zs = vec![z_direct(1)?];
    if n >= 2 {
        zs.push(z_direct(2)?);
    }
    for idx in 3..=n {
        let (a, b) = if idx % 2 == 1 {
            (&odd_prev, &odd_prev2)
        } else {
            (&even_prev, &even_prev2)
        };
        let next = &(a * &zs[idx - 2]) + &(b * &zs[idx - 3]);
        zs.push(next);
    }
    Ok(zs)
}

/// The cluster variable `x_{gamma_k} = z_{2k-5}` with boundary arcs `x3 = x4 = 1`.
pub fn cluster_variable_via_snake(k: usize) -> Result<LaurentPolynomial, SnakeError> {
    if k < 3 {
        return Err(SnakeError::ClusterIndex(k));
    }
    Ok(z_direct(2 * k - 5)?.specialize_ones(&[Var::X3, Var::X4]))
}
