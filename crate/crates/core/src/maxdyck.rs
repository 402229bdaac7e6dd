//! Maximal Dyck paths `D^{a1 x a2}`, compatible pairs and greedy elements.
//!
//! A path is stored as its cyclic edge word. Lattice points are addressed by
//! their position along the word, so position 0 is both `(0,0)` and
//! `(a1,a2)` and subpaths wrap around naturally.
//!
//! Two labelling conventions are in use. A general path names its edges
//! `u_1..u_{a1}` and `v_1..v_{a2}`. The family `D^{(n+1) x n}` that carries
//! the bijections names horizontal edges `u_0..u_n` instead (vertical edges
//! keep `v_1..v_n`). Internally every edge is an ordinal counted from 0.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{ExponentVector, LaurentPolynomial};

/// Largest `a1 + a2` accepted by [`greedy_element`]; the sum runs over
/// `2^(a1 + a2)` subset pairs.
pub const GREEDY_MAX_EDGES: u64 = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("maximal paths need a1 >= a2 (got {a1} x {a2})")]
    Shape { a1: usize, a2: usize },
    #[error("expected a path of shape (n+1) x n, got {a1} x {a2}")]
    NotFamily { a1: usize, a2: usize },
    #[error("{kind} edge label {label} is out of range")]
    EdgeOutOfRange { kind: EdgeKind, label: usize },
    #[error("greedy element x[{a1},{a2}] needs 2^{edges} subset pairs, limit is 2^{limit}")]
    TooLarge { a1: i64, a2: i64, edges: u64, limit: u64 },
    #[error("exponent overflow in x[{0},{1}]")]
    Overflow(i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Horizontal => "horizontal",
            EdgeKind::Vertical => "vertical",
        })
    }
}

/// An edge of a path: its kind and its 0-based ordinal among edges of that kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckEdge {
    pub kind: EdgeKind,
    pub ordinal: usize,
}

/// A lattice point on a path, given by how many edges precede it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPoint(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaxDyckPath {
    a1: usize,
    a2: usize,
    word: Vec<EdgeKind>,
    ordinals: Vec<usize>,
    horizontal_at: Vec<usize>,
    vertical_at: Vec<usize>,
}

impl MaxDyckPath {
    /// The maximal Dyck path in an `a1 x a2` box. Requires `a1 >= a2`,
    /// except that the all-vertical `0 x a2` path is allowed.
    pub fn build_maximal(a1: usize, a2: usize) -> Result<Self, DyckError> {
        if a2 > a1 && a1 > 0 {
            return Err(DyckError::Shape { a1, a2 });
        }
        Ok(Self::construct(a1, a2))
    }

    /// `D^{(n+1) x n}`.
    pub fn family(n: usize) -> Self {
        Self::construct(n + 1, n)
    }

    /// Horizontal edge `i + 1` sits at height `floor(i * a2 / a1)`, the
    /// highest lattice height not above the diagonal at its left end.
    fn construct(a1: usize, a2: usize) -> Self {
        let mut word = Vec::with_capacity(a1 + a2);
        let mut height = 0;
        for i in 0..a1 {
            let target = i * a2 / a1;
            while height < target {
                word.push(EdgeKind::Vertical);
                height += 1;
            }
            word.push(EdgeKind::Horizontal);
        }
        while height < a2 {
            word.push(EdgeKind::Vertical);
            height += 1;
        }

        let mut ordinals = Vec::with_capacity(word.len());
        let (mut horizontal_at, mut vertical_at) = (Vec::new(), Vec::new());
        for (pos, kind) in word.iter().enumerate() {
            let list = match kind {
                EdgeKind::Horizontal => &mut horizontal_at,
                EdgeKind::Vertical => &mut vertical_at,
            };
            ordinals.push(list.len());
            list.push(pos);
        }
        MaxDyckPath {
            a1,
            a2,
            word,
            ordinals,
            horizontal_at,
            vertical_at,
        }
    }

    pub fn a1(&self) -> usize {
        self.a1
    }

    pub fn a2(&self) -> usize {
        self.a2
    }

    /// Number of edges, which is also the number of distinct points.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `Some(n)` when this is `D^{(n+1) x n}`.
    pub fn family_index(&self) -> Option<usize> {
        (self.a1 == self.a2 + 1).then_some(self.a2)
    }

    pub fn word(&self) -> &[EdgeKind] {
        &self.word
    }

    pub fn edge_at(&self, pos: usize) -> DyckEdge {
        DyckEdge {
            kind: self.word[pos],
            ordinal: self.ordinals[pos],
        }
    }

    pub fn position_of(&self, edge: DyckEdge) -> usize {
        match edge.kind {
            EdgeKind::Horizontal => self.horizontal_at[edge.ordinal],
            EdgeKind::Vertical => self.vertical_at[edge.ordinal],
        }
    }

    /// Lattice coordinates; position 0 is reported as `(0,0)`.
    pub fn coordinates(&self, p: PathPoint) -> (usize, usize) {
        let h = self.word[..p.0]
            .iter()
            .filter(|k| **k == EdgeKind::Horizontal)
            .count();
        (h, p.0 - h)
    }

    /// The path point at `(x, y)`, with `(a1, a2)` identified with the origin.
    pub fn point_at(&self, x: usize, y: usize) -> Option<PathPoint> {
        if (x, y) == (self.a1, self.a2) {
            return Some(PathPoint(0));
        }
        let pos = x + y;
        (pos < self.len() && self.coordinates(PathPoint(pos)) == (x, y)).then_some(PathPoint(pos))
    }

    /// Left endpoint of a horizontal edge.
    pub fn left_endpoint(&self, ordinal: usize) -> PathPoint {
        PathPoint(self.horizontal_at[ordinal])
    }

    /// Upper endpoint of a vertical edge.
    pub fn upper_endpoint(&self, ordinal: usize) -> PathPoint {
        PathPoint((self.vertical_at[ordinal] + 1) % self.len())
    }

    /// Number of edges from `a` to `b` going northeast; a full loop when `a == b`.
    fn span(&self, a: PathPoint, b: PathPoint) -> usize {
        let len = self.len();
        match (b.0 + len - a.0) % len {
            0 => len,
            d => d,
        }
    }

    /// The subpath from `a` to `b`, wrapping through the origin.
    pub fn subpath(&self, a: PathPoint, b: PathPoint) -> Subpath {
        let len = self.len();
        if len == 0 {
            return Subpath {
                start: a,
                end: b,
                edges: Vec::new(),
                interior: Vec::new(),
            };
        }
        let span = self.span(a, b);
        Subpath {
            start: a,
            end: b,
            edges: (0..span).map(|k| self.edge_at((a.0 + k) % len)).collect(),
            interior: (1..span).map(|k| PathPoint((a.0 + k) % len)).collect(),
        }
    }

    /// Edge labels in the convention used for this shape (see [`Indexing`]).
    pub fn default_indexing(&self) -> Indexing {
        if self.family_index().is_some() {
            Indexing::Zero
        } else {
            Indexing::One
        }
    }
}

/// Edges of a subpath in order, together with its interior points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subpath {
    pub start: PathPoint,
    pub end: PathPoint,
    pub edges: Vec<DyckEdge>,
    pub interior: Vec<PathPoint>,
}

impl Subpath {
    /// `(AB)_1`
    pub fn horizontal(&self) -> impl Iterator<Item = usize> + '_ {
        self.of_kind(EdgeKind::Horizontal)
    }

    /// `(AB)_2`
    pub fn vertical(&self) -> impl Iterator<Item = usize> + '_ {
        self.of_kind(EdgeKind::Vertical)
    }

    fn of_kind(&self, kind: EdgeKind) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .filter(move |e| e.kind == kind)
            .map(|e| e.ordinal)
    }

    /// Index of `c` along the subpath (0 at the start), if it lies on it.
    pub fn offset_of(&self, c: PathPoint) -> Option<usize> {
        if c == self.start {
            return Some(0);
        }
        self.interior.iter().position(|&p| p == c).map(|i| i + 1)
    }
}

/// Which labels a serialized selection uses for horizontal edges.
///
/// `Zero` is the `u_0..u_n` convention of the `(n+1) x n` family, `One` the
/// general `u_1..u_{a1}`. Vertical edges are 1-based either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Indexing {
    Zero,
    One,
}

/// A pair `(S1, S2)` of horizontal and vertical edge sets on a path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SelectionRecord", try_from = "SelectionRecord")]
pub struct CompatibleSelection {
    path: MaxDyckPath,
    s1: BTreeSet<usize>,
    s2: BTreeSet<usize>,
}

impl CompatibleSelection {
    /// From ordinals (0-based for both kinds).
    pub fn from_ordinals(
        path: MaxDyckPath,
        s1: impl IntoIterator<Item = usize>,
        s2: impl IntoIterator<Item = usize>,
    ) -> Result<Self, DyckError> {
        let s1: BTreeSet<usize> = s1.into_iter().collect();
        let s2: BTreeSet<usize> = s2.into_iter().collect();
        if let Some(&o) = s1.iter().find(|&&o| o >= path.a1) {
            return Err(DyckError::EdgeOutOfRange {
                kind: EdgeKind::Horizontal,
                label: o,
            });
        }
        if let Some(&o) = s2.iter().find(|&&o| o >= path.a2) {
            return Err(DyckError::EdgeOutOfRange {
                kind: EdgeKind::Vertical,
                label: o + 1,
            });
        }
        Ok(CompatibleSelection { path, s1, s2 })
    }

    /// On `D^{(n+1) x n}` with labels `u_i` (`0..=n`) and `v_j` (`1..=n`).
    pub fn family(
        n: usize,
        u: impl IntoIterator<Item = usize>,
        v: impl IntoIterator<Item = usize>,
    ) -> Result<Self, DyckError> {
        Self::with_labels(MaxDyckPath::family(n), Indexing::Zero, u, v)
    }

    /// With labels in the given convention.
    pub fn with_labels(
        path: MaxDyckPath,
        indexing: Indexing,
        u: impl IntoIterator<Item = usize>,
        v: impl IntoIterator<Item = usize>,
    ) -> Result<Self, DyckError> {
        let shift = match indexing {
            Indexing::Zero => 0,
            Indexing::One => 1,
        };
        let s1 = u
            .into_iter()
            .map(|l| {
                l.checked_sub(shift).ok_or(DyckError::EdgeOutOfRange {
                    kind: EdgeKind::Horizontal,
                    label: l,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let s2 = v
            .into_iter()
            .map(|l| {
                l.checked_sub(1).ok_or(DyckError::EdgeOutOfRange {
                    kind: EdgeKind::Vertical,
                    label: l,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_ordinals(path, s1, s2)
    }

    pub fn path(&self) -> &MaxDyckPath {
        &self.path
    }

    /// Horizontal ordinals (0-based).
    pub fn s1(&self) -> &BTreeSet<usize> {
        &self.s1
    }

    /// Vertical ordinals (0-based; `v_j` has ordinal `j - 1`).
    pub fn s2(&self) -> &BTreeSet<usize> {
        &self.s2
    }

    /// `S1` as labels `u_i` in the given convention.
    pub fn u_labels(&self, indexing: Indexing) -> Vec<usize> {
        let shift = if indexing == Indexing::Zero { 0 } else { 1 };
        self.s1.iter().map(|o| o + shift).collect()
    }

    /// `S2` as labels `v_j`.
    pub fn v_labels(&self) -> Vec<usize> {
        self.s2.iter().map(|o| o + 1).collect()
    }

    /// `f(C, AB) = |(AC)_2| - c |(AC)_1 ∩ S1|`, or `None` when `C` is not on `AB`.
    pub fn f_step(&self, point: PathPoint, sub: &Subpath, c: i64) -> Option<i64> {
        let k = sub.offset_of(point)?;
        Some(self.f_prefix(&sub.edges[..k], c))
    }

    /// `g(C, AB) = |(CB)_1| - b |(CB)_2 ∩ S2|`, or `None` when `C` is not on `AB`.
    pub fn g_step(&self, point: PathPoint, sub: &Subpath, b: i64) -> Option<i64> {
        let k = sub.offset_of(point)?;
        Some(self.g_suffix(&sub.edges[k..], b))
    }

    fn f_prefix(&self, edges: &[DyckEdge], c: i64) -> i64 {
        edges
            .iter()
            .map(|e| match e.kind {
                EdgeKind::Vertical => 1,
                EdgeKind::Horizontal if self.s1.contains(&e.ordinal) => -c,
                EdgeKind::Horizontal => 0,
            })
            .sum()
    }

    fn g_suffix(&self, edges: &[DyckEdge], b: i64) -> i64 {
        edges
            .iter()
            .map(|e| match e.kind {
                EdgeKind::Horizontal => 1,
                EdgeKind::Vertical if self.s2.contains(&e.ordinal) => -b,
                EdgeKind::Vertical => 0,
            })
            .sum()
    }

    /// `(f, g)` at every interior point of the subpath from the left end of
    /// `u` to the upper end of `v`.
    pub fn step_values(&self, u: usize, v: usize, b: i64, c: i64) -> Vec<(i64, i64)> {
        let sub = self
            .path
            .subpath(self.path.left_endpoint(u), self.path.upper_endpoint(v));
        let total_g = self.g_suffix(&sub.edges, b);
        let (mut f, mut g) = (0, total_g);
        let mut out = Vec::with_capacity(sub.interior.len());
        for e in &sub.edges[..sub.edges.len() - 1] {
            let (df, dg) = (self.f_prefix(&[*e], c), self.g_suffix(&[*e], b));
            f += df;
            g -= dg;
            out.push((f, g));
        }
        out
    }

    /// Whether the pair is compatible in `A(b, c)`: every `u` in `S1` and `v`
    /// in `S2` admit an interior point where `f` or `g` vanishes.
    pub fn is_compatible_definition(&self, b: u32, c: u32) -> bool {
        let (b, c) = (i64::from(b), i64::from(c));
        self.s1.iter().all(|&u| {
            self.s2.iter().all(|&v| {
                self.step_values(u, v, b, c)
                    .iter()
                    .any(|&(f, g)| f == 0 || g == 0)
            })
        })
    }

    /// The max criterion on `D^{(n+1) x n}` (`b = c = 2`): for every pair the
    /// largest of `f` and `g` over the interior is nonnegative.
    pub fn is_compatible_max(&self) -> Result<bool, DyckError> {
        self.require_family()?;
        Ok(self.s1.iter().all(|&u| {
            self.s2.iter().all(|&v| {
                self.step_values(u, v, 2, 2)
                    .iter()
                    .map(|&(f, g)| f.max(g))
                    .max()
                    .is_some_and(|m| m >= 0)
            })
        }))
    }

    /// On `D^{(n+1) x n}`: no `u_i in S1`, `v_j in S2` with `j - i` in `{0, 1}`.
    pub fn is_compatible_fast(&self) -> Result<bool, DyckError> {
        self.require_family()?;
        // u_i has ordinal i, v_j has ordinal j - 1.
        Ok(!self
            .s2
            .iter()
            .any(|&vo| self.s1.contains(&(vo + 1)) || self.s1.contains(&vo)))
    }

    fn require_family(&self) -> Result<usize, DyckError> {
        self.path.family_index().ok_or(DyckError::NotFamily {
            a1: self.path.a1,
            a2: self.path.a2,
        })
    }

    /// `x1^{b|S2|} x2^{c|S1|}` exponents.
    pub fn weight_exponents(&self, b: u32, c: u32) -> (u64, u64) {
        (
            u64::from(b) * self.s2.len() as u64,
            u64::from(c) * self.s1.len() as u64,
        )
    }
}

impl PartialOrd for CompatibleSelection {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CompatibleSelection {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.path.a1, self.path.a2, &self.s1, &self.s2).cmp(&(
            other.path.a1,
            other.path.a2,
            &other.s1,
            &other.s2,
        ))
    }
}

impl std::hash::Hash for CompatibleSelection {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.path.a1, self.path.a2, &self.s1, &self.s2).hash(state);
    }
}

/// Wire form `{"a1", "a2", "S1", "S2", "indexing"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SelectionRecord {
    pub a1: usize,
    pub a2: usize,
    #[serde(rename = "S1")]
    pub s1: Vec<usize>,
    #[serde(rename = "S2")]
    pub s2: Vec<usize>,
    #[serde(default)]
    pub indexing: Option<Indexing>,
}

impl From<CompatibleSelection> for SelectionRecord {
    fn from(sel: CompatibleSelection) -> Self {
        let indexing = sel.path.default_indexing();
        SelectionRecord {
            a1: sel.path.a1,
            a2: sel.path.a2,
            s1: sel.u_labels(indexing),
            s2: sel.v_labels(),
            indexing: Some(indexing),
        }
    }
}

impl TryFrom<SelectionRecord> for CompatibleSelection {
    type Error = DyckError;

    fn try_from(r: SelectionRecord) -> Result<Self, Self::Error> {
        let path = MaxDyckPath::build_maximal(r.a1, r.a2)?;
        let indexing = r.indexing.unwrap_or_else(|| path.default_indexing());
        CompatibleSelection::with_labels(path, indexing, r.s1, r.s2)
    }
}

/// All compatible pairs on `D^{(n+1) x n}`.
///
/// Uses the gap characterization: position `i` holds at most one of `u_i`,
/// `v_i`, and `u_i` is never followed by `v_{i+1}`. Pairs are listed in
/// lexicographic order of the per-position choice (none, `u_i`, `v_i`).
pub fn enumerate_compatible(n: usize) -> Vec<CompatibleSelection> {
    #[derive(Clone, Copy, PartialEq)]
    enum Pick {
        None,
        U,
        V,
    }

    fn walk(i: usize, n: usize, prev: Pick, picks: &mut Vec<Pick>, out: &mut Vec<CompatibleSelection>) {
        if i > n {
            let s1 = picks.iter().enumerate().filter(|(_, p)| **p == Pick::U).map(|(i, _)| i);
            let s2 = picks.iter().enumerate().filter(|(_, p)| **p == Pick::V).map(|(i, _)| i - 1);
            out.push(
                CompatibleSelection::from_ordinals(MaxDyckPath::family(n), s1, s2)
                    .expect("labels in range"),
            );
            return;
        }
        for pick in [Pick::None, Pick::U, Pick::V] {
            if pick == Pick::V && (i == 0 || prev == Pick::U) {
                continue;
            }
            picks.push(pick);
            walk(i + 1, n, pick, picks, out);
            picks.pop();
        }
    }

    let mut out = Vec::new();
    walk(0, n, Pick::None, &mut Vec::new(), &mut out);
    out
}

/// All subset pairs on a path that pass the compatibility definition.
pub fn compatible_pairs_by_definition(path: &MaxDyckPath, b: u32, c: u32) -> Vec<CompatibleSelection> {
    let (a1, a2) = (path.a1, path.a2);
    let mut out = Vec::new();
    for m1 in 0u64..1 << a1 {
        let s1: Vec<usize> = (0..a1).filter(|i| m1 >> i & 1 == 1).collect();
        for m2 in 0u64..1 << a2 {
            let s2 = (0..a2).filter(|j| m2 >> j & 1 == 1);
            let sel = CompatibleSelection::from_ordinals(path.clone(), s1.iter().copied(), s2)
                .expect("ordinals in range");
            if sel.is_compatible_definition(b, c) {
                out.push(sel);
            }
        }
    }
    out
}

/// The greedy element `x[a1, a2]` of `A(b, c)`:
/// `x1^-a1 x2^-a2` times the sum of `x1^{b|S2|} x2^{c|S1|}` over compatible
/// pairs on the maximal path in the `[a1]_+ x [a2]_+` box.
///
/// Boxes taller than wide are handled by the same height rule.
pub fn greedy_element(a1: i64, a2: i64, b: u32, c: u32) -> Result<LaurentPolynomial, DyckError> {
    let overflow = || DyckError::Overflow(a1, a2);
    let (w, h) = (a1.max(0) as u64, a2.max(0) as u64);
    let edges = w + h;
    if edges > GREEDY_MAX_EDGES {
        return Err(DyckError::TooLarge {
            a1,
            a2,
            edges,
            limit: GREEDY_MAX_EDGES,
        });
    }
    let path = MaxDyckPath::construct(w as usize, h as usize);
    let mut sum = LaurentPolynomial::zero();
    for sel in compatible_pairs_by_definition(&path, b, c) {
        let (e1, e2) = sel.weight_exponents(b, c);
        let e1 = i32::try_from(e1 as i64 - a1).map_err(|_| overflow())?;
        let e2 = i32::try_from(e2 as i64 - a2).map_err(|_| overflow())?;
        let exp = ExponentVector::new([e1, e2, 0, 0, 0, 0]).expect("only x1, x2 are set");
        sum.add_term(exp, 1.into());
    }
    Ok(sum)
}

/// `sigma1(x[a1, a2]) = x[a1, c[a1]_+ - a2]`.
pub fn sigma1(a1: i64, a2: i64, _b: u32, c: u32) -> (i64, i64) {
    (a1, i64::from(c) * a1.max(0) - a2)
}

/// `sigma2(x[a1, a2]) = x[b[a2]_+ - a1, a2]`.
pub fn sigma2(a1: i64, a2: i64, b: u32, _c: u32) -> (i64, i64) {
    (i64::from(b) * a2.max(0) - a1, a2)
}
