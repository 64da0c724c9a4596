//! Families of pairwise non-equivalent cuttable RPMs for odd `n`.
//!
//! Every member of `family(n)` shares the arch and slide parts of the ARS
//! matching and differs only in the cuttable RPM of `K•_{2k+1}` embedded on
//! the even offsets. Feeding each sub-member through `f`, `rev` and `g`
//! multiplies the number of classes at every level of the recursion.

use serde::{Deserialize, Serialize};

use crate::constructions::{ars_fixed_edges, embed_edges, OddSplit};
use crate::error::{Error, Result};
use crate::graph::{Edge, Matching};

/// Rotates by `-2k` (`n ≡ 1, 3 mod 8`) or `-2k-2` (`n ≡ 5, 7 mod 8`),
/// where `n` is the order of `m`'s own graph.
pub fn f_op(m: &Matching) -> Result<Matching> {
    let split = OddSplit::of(m.n(), "f")?;
    Ok(m.rotate(-split.shift()))
}

/// Reverses, then rotates by `+2k` or `+2k+2` with the same case split as `f`.
pub fn g_op(m: &Matching) -> Result<Matching> {
    let split = OddSplit::of(m.n(), "g")?;
    Ok(m.reverse().rotate(split.shift()))
}

/// The embedded part for `n` built from an arbitrary cuttable RPM `m` on
/// `K•_{2k+1}`, `k = n div 8`.
pub fn xi3_embed(n: usize, m: &Matching) -> Result<Vec<Edge>> {
    let split = OddSplit::of(n, "the embedded part")?;
    if m.n() != split.sub_order() {
        return Err(Error::WrongSubgraph {
            expected: split.sub_order(),
            found: m.n(),
        });
    }
    m.require_cuttable()?;
    Ok(embed_edges(split.embed_base(), m).collect())
}

/// Deduplicated members of the recursive family for one odd `n`, in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RpmFamily {
    pub n: usize,
    pub count: usize,
    pub members: Vec<Matching>,
}

impl RpmFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Matching) -> bool {
        self.members.binary_search(m).is_ok()
    }
}

/// Variants of a sub-member fed into the embedding, in generation order.
fn variants(m: &Matching) -> Result<[Matching; 4]> {
    Ok([m.clone(), f_op(m)?, m.reverse(), g_op(m)?])
}

fn members(n: usize) -> Result<Vec<Matching>> {
    let split = OddSplit::of(n, "the RPM family")?;
    if n == 1 {
        return Ok(vec![Matching::empty(1)]);
    }
    let fixed = ars_fixed_edges(split);
    let mut out = Vec::new();
    for sub in members(split.sub_order())? {
        for variant in variants(&sub)? {
            let mut edges = fixed.clone();
            edges.extend(xi3_embed(n, &variant)?);
            out.push(Matching::from_edges_unchecked(n, edges));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn family(n: usize) -> Result<RpmFamily> {
    let members = members(n)?;
    Ok(RpmFamily {
        n,
        count: members.len(),
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ars;

    fn m(n: usize, pairs: &[(usize, usize)]) -> Matching {
        Matching::new(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn f_examples() {
        let xi5 = ars(5).unwrap();
        assert_eq!(f_op(&xi5).unwrap(), m(5, &[(3, 4), (0, 2)]));
        assert_eq!(f_op(&xi5).unwrap(), xi5.reverse());
        let xi3 = ars(3).unwrap();
        assert_eq!(f_op(&xi3).unwrap(), xi3);
        assert_eq!(f_op(&Matching::empty(1)).unwrap(), Matching::empty(1));
        assert!(matches!(
            f_op(&Matching::empty(4)),
            Err(Error::Parity { .. })
        ));
    }

    #[test]
    fn g_examples() {
        let xi5 = ars(5).unwrap();
        assert_eq!(g_op(&xi5).unwrap(), xi5);
        assert_eq!(g_op(&ars(3).unwrap()).unwrap(), m(3, &[(1, 2)]));
        assert_eq!(g_op(&Matching::empty(1)).unwrap(), Matching::empty(1));
        assert!(g_op(&Matching::empty(2)).is_err());
    }

    #[test]
    fn embed_examples() {
        let expected: Vec<Edge> = [(16, 18), (20, 26), (22, 30), (24, 28)]
            .iter()
            .map(|&(a, b)| Edge::new(a, b).unwrap())
            .collect();
        let mut got = xi3_embed(33, &ars(9).unwrap()).unwrap();
        got.sort_unstable();
        assert_eq!(got, expected);
        assert_eq!(
            xi3_embed(9, &ars(3).unwrap()).unwrap(),
            vec![Edge::new(4, 6).unwrap()]
        );
        assert!(xi3_embed(3, &Matching::empty(1)).unwrap().is_empty());
    }

    #[test]
    fn embed_errors() {
        assert_eq!(
            xi3_embed(33, &ars(7).unwrap()),
            Err(Error::WrongSubgraph {
                expected: 9,
                found: 7
            })
        );
        let kir9 = crate::constructions::kirkman(9);
        assert!(matches!(
            xi3_embed(33, &kir9),
            Err(Error::NotCuttable { .. })
        ));
        assert!(matches!(xi3_embed(34, &kir9), Err(Error::Parity { .. })));
    }

    #[test]
    fn small_families() {
        assert_eq!(family(1).unwrap().members, vec![Matching::empty(1)]);
        for n in [3, 5, 7] {
            assert_eq!(family(n).unwrap().members, vec![ars(n).unwrap()]);
        }
        assert_eq!(family(9).unwrap().count, 2);
        let f33 = family(33).unwrap();
        assert_eq!(f33.count, 8);
        assert!(f33.contains(&ars(33).unwrap()));
        assert!(family(8).is_err());
    }

    #[test]
    fn json_shape() {
        let text = serde_json::to_string(&family(3).unwrap()).unwrap();
        assert_eq!(
            text,
            r#"{"n":3,"count":1,"members":[{"n":3,"edges":[[0,1]]}]}"#
        );
    }
}
