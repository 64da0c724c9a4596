//! Canonical representatives of RPMs under rotation and reversal.
//!
//! `normalize` rotates the `c_1` edge onto `{0, n-1}`, then walks the colors
//! upward and settles the orientation at the first edge `{i, j}` whose
//! endpoints do not sum to `n - 1`. A matching equal to its own normalization
//! is an N-RPM.

use crate::error::{Error, Result};
use crate::graph::Matching;

pub fn normalize(m: &Matching) -> Result<Matching> {
    m.require_rpm()?;
    let n = m.n();
    if n < 2 {
        return Ok(m.clone());
    }

    let c1 = m.edges_by_color().expect("rpm has one edge per color")[0];
    let mut current = if (c1.u(), c1.v()) == (0, n - 1) {
        m.clone()
    } else {
        m.rotate(-(c1.v() as i64))
    };

    let by_color = current.edges_by_color().expect("rotation keeps rpm");
    for e in &by_color[1..] {
        let sum = e.u() + e.v();
        if sum < n - 1 {
            return Ok(current);
        }
        if sum > n - 1 {
            current = current.reverse();
            return Ok(current);
        }
    }
    Ok(current)
}

pub fn is_normalized(m: &Matching) -> Result<bool> {
    Ok(normalize(m)? == *m)
}

/// Whether two RPMs on the same graph normalize to the same N-RPM.
pub fn same_class(a: &Matching, b: &Matching) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(normalize(a)? == normalize(b)?)
}
