//! Closed-form and recursive RPM constructions.
//!
//! Index families such as `i = 0..=2k-3` are empty whenever the upper bound
//! is negative; the `inclusive` helper encodes that convention.

use crate::error::{Error, Result};
use crate::graph::{Edge, Matching};

/// `0..=last` when `last >= 0`, otherwise empty.
fn inclusive(last: i64) -> impl Iterator<Item = usize> {
    0..(last + 1).max(0) as usize
}

/// `{{i, n-1-i} : i < n/2}`. Rainbow only for `n = 2` and odd `n`
/// (and vacuously for `n = 0`).
pub fn kirkman(n: usize) -> Matching {
    let edges = (0..n / 2).map(|i| Edge::ordered(i, n - 1 - i)).collect();
    Matching::from_edges_unchecked(n, edges)
}

/// The two cuttable rotations of the Kirkman matching, shifted by
/// `+floor((n+1)/4)` and `-floor((n+1)/4)`.
pub fn cuttable_kirkman_rotations(n: usize) -> Result<(Matching, Matching)> {
    let kir = kirkman(n);
    if !kir.is_rpm() {
        return Err(Error::Parity {
            what: "cuttable Kirkman rotations",
            expected: "odd (or 2)",
            n,
        });
    }
    let shift = ((n + 1) / 4) as i64;
    Ok((kir.rotate(shift), kir.rotate(-shift)))
}

/// The even-order RPM `T_n` for `n ≡ 0, 2 (mod 8)`.
pub fn t_matching(n: usize) -> Result<Matching> {
    if n % 2 == 1 {
        return Err(Error::Parity {
            what: "T_n",
            expected: "even",
            n,
        });
    }
    match n {
        0 => return Ok(Matching::empty(0)),
        2 => return Ok(kirkman(2)),
        _ => {}
    }
    let k = (n / 8) as i64;
    let pair = |a: i64, b: i64| Edge::ordered(a as usize, b as usize);
    let mut edges = Vec::with_capacity(n / 2);
    match n % 8 {
        0 => {
            // T'
            edges.extend(inclusive(2 * k - 3).map(|i| pair(1 + i as i64, 8 * k - 2 - i as i64)));
            // T''
            edges.extend(inclusive(k - 1).map(|i| pair(2 * k + i as i64, 6 * k - i as i64)));
            // T'''
            edges.extend(inclusive(k - 2).map(|i| pair(3 * k + i as i64, 5 * k - 2 - i as i64)));
            edges.extend([
                pair(0, 4 * k - 1),
                pair(2 * k - 1, 8 * k - 1),
                pair(5 * k - 1, 5 * k),
            ]);
        }
        2 => {
            edges.extend(inclusive(2 * k - 2).map(|i| pair(1 + i as i64, 8 * k - i as i64)));
            edges
                .extend(inclusive(k - 1).map(|i| pair(2 * k + 1 + i as i64, 6 * k + 1 - i as i64)));
            edges
                .extend(inclusive(k - 2).map(|i| pair(3 * k + 1 + i as i64, 5 * k - 1 - i as i64)));
            edges.extend([
                pair(0, 2 * k),
                pair(4 * k, 8 * k + 1),
                pair(5 * k, 5 * k + 1),
            ]);
        }
        _ => return Err(Error::NoRpmExists { n }),
    }
    Ok(Matching::from_edges_unchecked(n, edges))
}

/// Residue class of an odd `n` split as `8k + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct OddSplit {
    pub k: usize,
    pub r: usize,
}

impl OddSplit {
    pub fn of(n: usize, what: &'static str) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::Parity {
                what,
                expected: "odd",
                n,
            });
        }
        Ok(OddSplit { k: n / 8, r: n % 8 })
    }

    /// Order `2k + 1` of the graph embedded on the even offsets.
    pub fn sub_order(self) -> usize {
        2 * self.k + 1
    }

    /// First vertex of the embedded copy.
    pub fn embed_base(self) -> usize {
        let k = self.k;
        match self.r {
            1 => 4 * k,
            3 => 4 * k + 2,
            5 => 4 * k + 3,
            _ => 4 * k + 5,
        }
    }

    /// Rotation used by `f` (negated) and `g`.
    pub fn shift(self) -> i64 {
        match self.r {
            1 | 3 => 2 * self.k as i64,
            _ => 2 * self.k as i64 + 2,
        }
    }
}

/// The arch and slide parts shared by every member built on `n`.
pub(crate) fn ars_fixed_edges(split: OddSplit) -> Vec<Edge> {
    let k = split.k;
    let mut edges = Vec::new();
    match split.r {
        1 | 3 => {
            edges.extend((0..k).map(|i| Edge::ordered(i, 2 * k - 1 - i)));
            let slide = if split.r == 1 { 2 * k } else { 2 * k + 1 };
            edges.extend((0..slide).map(|i| Edge::ordered(2 * k + i, 4 * k + 1 + 2 * i)));
        }
        _ => {
            edges.extend((0..=k).map(|i| Edge::ordered(i, 2 * k + 1 - i)));
            let slide = if split.r == 5 { 2 * k + 1 } else { 2 * k + 2 };
            edges.extend((0..slide).map(|i| Edge::ordered(2 * k + 2 + i, 4 * k + 4 + 2 * i)));
        }
    }
    edges
}

/// Spreads a matching of the sub-graph onto every other vertex from `base`.
pub(crate) fn embed_edges(base: usize, sub: &Matching) -> impl Iterator<Item = Edge> + '_ {
    sub.edges()
        .iter()
        .map(move |e| Edge::ordered(base + 2 * e.u(), base + 2 * e.v()))
}

/// The arch-recursive-slide matching for odd `n`; always a cuttable RPM.
pub fn ars(n: usize) -> Result<Matching> {
    let split = OddSplit::of(n, "the ARS matching")?;
    if n == 1 {
        return Ok(Matching::empty(1));
    }
    let sub = ars(split.sub_order())?;
    let mut edges = ars_fixed_edges(split);
    edges.extend(embed_edges(split.embed_base(), &sub));
    Ok(Matching::from_edges_unchecked(n, edges))
}
