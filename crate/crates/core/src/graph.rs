//! The circular-distance colored complete graph `K•_n`.
//!
//! The graph itself is never materialized: `n` alone determines the vertex
//! set `0..n` and the color of every edge. Matchings carry their ambient `n`
//! so rotation, reversal and coloring always refer to the right graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Index `k` of the color class `c_k`, in `1..=n/2`.
pub type Color = usize;

/// An undirected edge stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[Vertex; 2]", into = "[Vertex; 2]")]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::Loop { vertex: a }),
        }
    }

    /// Caller guarantees `a != b`.
    pub(crate) fn ordered(a: Vertex, b: Vertex) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    /// `|u - v|`, the distance along the vertex labels (not around the circle).
    pub fn span(&self) -> usize {
        self.v - self.u
    }

    /// Color in `K•_n`; the edge must already be known to fit in `0..n`.
    pub(crate) fn color_in(&self, n: usize) -> Color {
        let d = self.span();
        d.min(n - d)
    }
}

impl TryFrom<[Vertex; 2]> for Edge {
    type Error = Error;

    fn try_from([a, b]: [Vertex; 2]) -> Result<Self> {
        Edge::new(a, b)
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Color of `e` under the circular-distance coloring of `K•_n`:
/// `min(|u - v|, n - |u - v|)`.
pub fn color_index(n: usize, e: Edge) -> Result<Color> {
    if e.v >= n {
        return Err(Error::VertexOutOfRange { vertex: e.v, n });
    }
    Ok(e.color_in(n))
}

/// Why a valid matching fails to be a rainbow (near-)perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RpmDefect {
    WrongSize {
        expected: usize,
        found: usize,
    },
    RepeatedColor {
        color: Color,
        first: Edge,
        second: Edge,
    },
}

impl fmt::Display for RpmDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RpmDefect::WrongSize { expected, found } => {
                write!(f, "has {found} edges, needs {expected}")
            }
            RpmDefect::RepeatedColor {
                color,
                first,
                second,
            } => {
                write!(f, "edges {first} and {second} both have color c_{color}")
            }
        }
    }
}

/// A set of vertex-disjoint edges of `K•_n`, kept in lexicographic order.
///
/// Two matchings are equal exactly when they share `n` and the edge set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatchingRepr", into = "MatchingRepr")]
pub struct Matching {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct MatchingRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<MatchingRepr> for Matching {
    type Error = Error;

    fn try_from(repr: MatchingRepr) -> Result<Self> {
        Matching::from_edges(repr.n, repr.edges)
    }
}

impl From<Matching> for MatchingRepr {
    fn from(m: Matching) -> Self {
        MatchingRepr {
            n: m.n,
            edges: m.edges,
        }
    }
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds a matching from unordered vertex pairs, rejecting loops,
    /// out-of-range endpoints and shared vertices.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let edges = pairs
            .into_iter()
            .map(|(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(n, edges)
    }

    pub fn from_edges(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        let mut seen = vec![false; n];
        for e in &edges {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::DuplicateVertex { vertex: x });
                }
            }
        }
        edges.sort_unstable();
        Ok(Matching { n, edges })
    }

    /// For edge lists produced by construction code that already guarantees
    /// validity. Checked in debug builds.
    pub(crate) fn from_edges_unchecked(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        let m = Matching { n, edges };
        debug_assert!(
            Matching::from_edges(n, m.edges.clone()).is_ok(),
            "invalid matching {m}"
        );
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Number of color classes of `K•_n`.
    pub fn color_count(&self) -> usize {
        self.n / 2
    }

    pub fn color_of(&self, e: Edge) -> Color {
        e.color_in(self.n)
    }

    /// Vertices of `0..n` that no edge touches, ascending.
    pub fn uncovered(&self) -> Vec<Vertex> {
        let mut covered = vec![false; self.n];
        for e in &self.edges {
            covered[e.u] = true;
            covered[e.v] = true;
        }
        (0..self.n).filter(|&x| !covered[x]).collect()
    }

    fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Matching {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::ordered(f(e.u), f(e.v)))
            .collect();
        Matching::from_edges_unchecked(self.n, edges)
    }

    /// Adds `alpha` to every vertex modulo `n`. Negative and oversized
    /// offsets are reduced first.
    pub fn rotate(&self, alpha: i64) -> Matching {
        if self.n == 0 {
            return self.clone();
        }
        let n = self.n as i64;
        let shift = alpha.rem_euclid(n) as usize;
        if shift == 0 {
            return self.clone();
        }
        self.map_vertices(|x| (x + shift) % self.n)
    }

    /// Maps every vertex `x` to `n - 1 - x`.
    pub fn reverse(&self) -> Matching {
        self.map_vertices(|x| self.n - 1 - x)
    }

    /// The edge of each color `c_1..=c_{n/2}` in color order, or `None` when
    /// some color is missing or repeated.
    pub(crate) fn edges_by_color(&self) -> Option<Vec<Edge>> {
        let mut slots: Vec<Option<Edge>> = vec![None; self.color_count()];
        for &e in &self.edges {
            if slots[self.color_of(e) - 1].replace(e).is_some() {
                return None;
            }
        }
        slots.into_iter().collect()
    }

    /// First reason this matching is not an RPM, if any.
    pub fn rpm_defect(&self) -> Option<RpmDefect> {
        let expected = self.color_count();
        if self.edges.len() != expected {
            return Some(RpmDefect::WrongSize {
                expected,
                found: self.edges.len(),
            });
        }
        let mut owner: Vec<Option<Edge>> = vec![None; expected + 1];
        for &e in &self.edges {
            let color = self.color_of(e);
            if let Some(first) = owner[color] {
                return Some(RpmDefect::RepeatedColor {
                    color,
                    first,
                    second: e,
                });
            }
            owner[color] = Some(e);
        }
        None
    }

    /// Rainbow perfect (even `n`) or near-perfect (odd `n`) matching:
    /// `n/2` edges, pairwise distinct colors.
    pub fn is_rpm(&self) -> bool {
        self.rpm_defect().is_none()
    }

    pub(crate) fn require_rpm(&self) -> Result<()> {
        match self.rpm_defect() {
            None => Ok(()),
            Some(defect) => Err(Error::NotRpm { n: self.n, defect }),
        }
    }

    /// First edge with `|u - v| > n/2`, i.e. one that wraps the short way round.
    fn long_edge(&self) -> Option<Edge> {
        self.edges.iter().copied().find(|e| 2 * e.span() > self.n)
    }

    /// An RPM is cuttable when every edge satisfies `|u - v| <= n/2`.
    pub fn is_cuttable(&self) -> Result<bool> {
        self.require_rpm()?;
        Ok(self.long_edge().is_none())
    }

    pub(crate) fn require_cuttable(&self) -> Result<()> {
        self.require_rpm()?;
        match self.long_edge() {
            None => Ok(()),
            Some(e) => Err(Error::NotCuttable {
                n: self.n,
                u: e.u,
                v: e.v,
            }),
        }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
