//! Partitions of `n` and the Levi subgroup attached to a nilpotent orbit of `GL(n)`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `n`, stored with parts in weakly decreasing order.
///
/// Indexes the nilpotent orbit of `gl(n)` whose Jordan blocks have these sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts decreasingly; rejects an empty list and zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `[1^n]`, the zero orbit.
    pub fn ones(n: usize) -> Self {
        assert!(n > 0, "partition of zero");
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// Distinct part values in decreasing order, each with its multiplicity.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &part in &self.parts {
            match out.last_mut() {
                Some((value, mult)) if *value == part => *mult += 1,
                _ => out.push((part, 1)),
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// Transpose of the Young diagram.
pub fn dual_partition(d: &Partition) -> Partition {
    let parts = (0..d.largest())
        .map(|row| d.parts.iter().take_while(|&&part| part > row).count())
        .collect();
    Partition { parts }
}

/// `c`, the gcd of the parts; `π₁(O_d) ≅ Z/cZ`.
pub fn gcd_parts(d: &Partition) -> usize {
    d.parts.iter().fold(0, |acc, &part| acc.gcd(&part))
}

/// `μ_k`: multiplicity of `k` as a part of the dual partition. Only nonzero entries are stored.
pub fn multiplicities(d: &Partition) -> BTreeMap<usize, usize> {
    let mut mu = BTreeMap::new();
    for part in dual_partition(d).parts {
        *mu.entry(part).or_insert(0) += 1;
    }
    mu
}

/// The Levi subgroup `L_d = GL(j_1)^{b_1} × … × GL(j_s)^{b_s}` read off the dual partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDatum {
    /// Sizes of the `GL(j)` factors, one entry per factor, decreasing.
    pub dual_parts: Vec<usize>,
    /// `2ρ_d`, concatenated per factor as `(j-1, j-3, …, 1-j)`; not sorted.
    pub two_rho: Vec<i64>,
}

impl LeviDatum {
    /// Coordinate range occupied by each factor, in factor order.
    pub fn segments(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.dual_parts
            .iter()
            .map(|&j| {
                let range = start..start + j;
                start += j;
                range
            })
            .collect()
    }
}

pub fn levi_data(d: &Partition) -> LeviDatum {
    let dual_parts = dual_partition(d).parts;
    let two_rho = dual_parts
        .iter()
        .flat_map(|&j| {
            let j = j as i64;
            (0..j).map(move |t| j - 1 - 2 * t)
        })
        .collect();
    LeviDatum {
        dual_parts,
        two_rho,
    }
}

/// All partitions of `n` in reverse lexicographic order (`[n]` first, `[1^n]` last).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn extend(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=rest.min(max_part)).rev() {
            prefix.push(part);
            extend(rest - part, part, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if n > 0 {
        extend(n, n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}
