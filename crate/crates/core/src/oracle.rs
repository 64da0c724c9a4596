//! Brute-force ground truth for small `n`.
//!
//! `enumerate_rpms` lists every RPM of `K•_n` by picking one free edge per
//! color class, largest color first. Nothing here uses `normalize` during the
//! search; equivalence classes are formed afterwards so the canonical form is
//! checked independently.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::normalize;
use crate::constructions::kirkman;
use crate::error::{Error, Result};
use crate::graph::{Edge, Matching};

/// Largest `n` enumerated without `force`.
pub const DEFAULT_BOUND: usize = 16;

/// Vertex sets are `u64` bitmasks.
pub const HARD_BOUND: usize = 64;

#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    /// Stop after this many matchings have been found (in search order).
    pub limit: Option<usize>,
    /// Allow `n` above [`DEFAULT_BOUND`].
    pub force: bool,
    /// Split the top-level branches across the rayon pool. Ignored when a
    /// limit is set.
    pub parallel: bool,
}

struct Search {
    n: usize,
    /// Candidate edges per search level, as `(edge, vertex mask)`.
    levels: Vec<Vec<(Edge, u64)>>,
}

impl Search {
    fn new(n: usize) -> Self {
        let levels = (1..=n / 2)
            .rev()
            .map(|color| {
                // {a, a+color}; for the antipodal color each edge would appear twice.
                let starts = if 2 * color == n { color } else { n };
                (0..starts)
                    .map(|a| {
                        let b = (a + color) % n;
                        (Edge::ordered(a, b), (1u64 << a) | (1u64 << b))
                    })
                    .collect()
            })
            .collect();
        Search { n, levels }
    }

    fn run(
        &self,
        level: usize,
        used: u64,
        picked: &mut Vec<Edge>,
        out: &mut Vec<Matching>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if level == self.levels.len() {
            out.push(Matching::from_edges_unchecked(self.n, picked.clone()));
            return;
        }
        for &(edge, mask) in &self.levels[level] {
            if used & mask == 0 {
                picked.push(edge);
                self.run(level + 1, used | mask, picked, out, limit);
                picked.pop();
                if out.len() >= limit {
                    return;
                }
            }
        }
    }
}

fn check_bound(n: usize, force: bool) -> Result<()> {
    if n > HARD_BOUND {
        return Err(Error::TooLarge {
            n,
            bound: HARD_BOUND,
        });
    }
    if n > DEFAULT_BOUND && !force {
        return Err(Error::TooLarge {
            n,
            bound: DEFAULT_BOUND,
        });
    }
    Ok(())
}

pub fn enumerate_with(n: usize, opts: &EnumerateOptions) -> Result<Vec<Matching>> {
    check_bound(n, opts.force)?;
    let search = Search::new(n);
    let mut found = match (opts.limit, search.levels.first()) {
        (None, Some(top)) if opts.parallel => top
            .par_iter()
            .map(|&(edge, mask)| {
                let mut out = Vec::new();
                search.run(1, mask, &mut vec![edge], &mut out, usize::MAX);
                out
            })
            .flatten()
            .collect(),
        (limit, _) => {
            let mut out = Vec::new();
            search.run(0, 0, &mut Vec::new(), &mut out, limit.unwrap_or(usize::MAX));
            out
        }
    };
    found.sort_unstable();
    Ok(found)
}

/// Every RPM of `K•_n`, in canonical order.
pub fn enumerate_rpms(n: usize, limit: Option<usize>) -> Result<Vec<Matching>> {
    enumerate_with(
        n,
        &EnumerateOptions {
            limit,
            ..Default::default()
        },
    )
}

/// All images of `m` under the `2n` rotations and reflections.
pub fn orbit(m: &Matching) -> BTreeSet<Matching> {
    let n = m.n().max(1) as i64;
    let rev = m.reverse();
    (0..n).flat_map(|a| [m.rotate(a), rev.rotate(a)]).collect()
}

/// RPM and N-RPM class counts for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub rpm_count: usize,
    pub class_count: usize,
    #[serde(rename = "representatives")]
    pub class_representatives: Vec<Matching>,
    /// Number of enumerated RPMs normalizing to each representative.
    #[serde(skip)]
    pub class_sizes: Vec<usize>,
}

impl EnumerationReport {
    pub fn from_rpms(n: usize, rpms: &[Matching]) -> Result<Self> {
        let mut classes: BTreeMap<Matching, usize> = BTreeMap::new();
        for m in rpms {
            *classes.entry(normalize(m)?).or_default() += 1;
        }
        let (class_representatives, class_sizes): (Vec<_>, Vec<_>) = classes.into_iter().unzip();
        Ok(EnumerationReport {
            n,
            rpm_count: rpms.len(),
            class_count: class_representatives.len(),
            class_representatives,
            class_sizes,
        })
    }

    /// Whether the RPM count equals the summed orbit sizes of the
    /// representatives, and each class holds exactly its orbit.
    pub fn orbits_consistent(&self) -> bool {
        let orbit_sizes: Vec<usize> = self
            .class_representatives
            .iter()
            .map(|r| orbit(r).len())
            .collect();
        orbit_sizes == self.class_sizes && orbit_sizes.iter().sum::<usize>() == self.rpm_count
    }
}

pub fn census_with(n: usize, opts: &EnumerateOptions) -> Result<EnumerationReport> {
    let opts = EnumerateOptions {
        limit: None,
        ..opts.clone()
    };
    EnumerationReport::from_rpms(n, &enumerate_with(n, &opts)?)
}

pub fn census(n: usize) -> Result<EnumerationReport> {
    census_with(n, &EnumerateOptions::default())
}

/// Checks, over every RPM of `K•_n`, that a matching whose reversal is one
/// of its own rotations is a rotation of the Kirkman matching.
pub fn verify_property9(n: usize) -> Result<bool> {
    if n.is_multiple_of(2) {
        return Err(Error::Parity {
            what: "the Kirkman self-reversal check",
            expected: "odd",
            n,
        });
    }
    let rpms = enumerate_rpms(n, None)?;
    let kir = kirkman(n);
    let kirkman_rotations: BTreeSet<Matching> = (0..n as i64).map(|b| kir.rotate(b)).collect();
    Ok(rpms.iter().all(|m| {
        let rev = m.reverse();
        let self_reversing = (0..n as i64).any(|a| m.rotate(a) == rev);
        !self_reversing || kirkman_rotations.contains(m)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_examples() {
        assert!(enumerate_rpms(4, None).unwrap().is_empty());
        assert!(enumerate_rpms(6, None).unwrap().is_empty());
        assert_eq!(
            enumerate_rpms(2, None).unwrap(),
            vec![Matching::new(2, [(0, 1)]).unwrap()]
        );
        assert_eq!(enumerate_rpms(1, None).unwrap(), vec![Matching::empty(1)]);
        assert_eq!(enumerate_rpms(0, None).unwrap(), vec![Matching::empty(0)]);
    }

    #[test]
    fn bound_guard() {
        assert_eq!(
            enumerate_rpms(17, None),
            Err(Error::TooLarge {
                n: 17,
                bound: DEFAULT_BOUND
            })
        );
        let forced = EnumerateOptions {
            force: true,
            limit: Some(1),
            ..Default::default()
        };
        assert_eq!(enumerate_with(17, &forced).unwrap().len(), 1);
        assert!(matches!(
            enumerate_with(65, &forced),
            Err(Error::TooLarge {
                bound: HARD_BOUND,
                ..
            })
        ));
    }

    #[test]
    fn limit_truncates() {
        let all = enumerate_rpms(9, None).unwrap();
        let some = enumerate_rpms(9, Some(3)).unwrap();
        assert_eq!(some.len(), 3);
        assert!(some.iter().all(|m| all.contains(m)));
    }

    #[test]
    fn parallel_matches_sequential() {
        let parallel = EnumerateOptions {
            parallel: true,
            ..Default::default()
        };
        for n in [7, 8, 10, 11] {
            assert_eq!(
                enumerate_with(n, &parallel).unwrap(),
                enumerate_rpms(n, None).unwrap()
            );
        }
    }

    /// Plain oracle: every perfect/near-perfect matching of K_n, filtered
    /// for distinct colors. Independent of the color-class search.
    fn all_rpms_naive(n: usize) -> Vec<Matching> {
        fn go(
            n: usize,
            free: Vec<usize>,
            skip_left: bool,
            acc: &mut Vec<(usize, usize)>,
            out: &mut Vec<Matching>,
        ) {
            let Some((&first, rest)) = free.split_first() else {
                let m = Matching::new(n, acc.iter().copied()).unwrap();
                if m.is_rpm() {
                    out.push(m);
                }
                return;
            };
            if skip_left {
                go(n, rest.to_vec(), false, acc, out);
            }
            for (idx, &partner) in rest.iter().enumerate() {
                let mut remaining = rest.to_vec();
                remaining.remove(idx);
                acc.push((first, partner));
                go(n, remaining, skip_left, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, (0..n).collect(), n % 2 == 1, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        for n in 0..=11 {
            assert_eq!(
                enumerate_rpms(n, None).unwrap(),
                all_rpms_naive(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn census_examples() {
        assert_eq!(census(3).unwrap().class_count, 1);
        assert_eq!(census(5).unwrap().class_count, 1);
        let seven = census(7).unwrap();
        assert!(seven.class_count >= 2);
        assert!(seven.class_representatives.contains(&kirkman(7)));
        assert!(seven
            .class_representatives
            .contains(&normalize(&crate::constructions::ars(7).unwrap()).unwrap()));
        assert!(seven.orbits_consistent());
    }

    #[test]
    fn census_of_empty_graph() {
        let r = census(4).unwrap();
        assert_eq!((r.rpm_count, r.class_count), (0, 0));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"n":4,"rpm_count":0,"class_count":0,"representatives":[]}"#
        );
    }

    #[test]
    fn property9_small() {
        for n in [1, 3, 5, 7] {
            assert_eq!(verify_property9(n), Ok(true), "n = {n}");
        }
        assert!(verify_property9(8).is_err());
    }
}
