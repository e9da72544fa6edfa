//! The weights `ω_p = γ(O_d, det^{p/c})` and the Levi weights they come from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{dual_partition, gcd_parts, multiplicities, Partition};

/// A weakly decreasing integer vector: a dominant weight of `GL(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "weight {coords:?} is not weakly decreasing"
            )));
        }
        Ok(DominantWeight(coords))
    }

    /// Sorts arbitrary coordinates into the dominant chamber.
    pub fn dominant_of(mut coords: Vec<i64>) -> Self {
        coords.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight(coords)
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(coords: Vec<i64>) -> Result<Self> {
        DominantWeight::new(coords)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Block structure of `ω_0`: block `B_a` holds the coordinates equal to `a`.
///
/// Its length is `m_a·c`, with `m_a·c = Σ_{i≥0} μ_{a+2i+1}`. The partial sums
/// `s_i = Σ_{j≥i} m_j·c` give the block boundaries: `B_a` occupies positions
/// `s_{a+1}+1 ..= s_a` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// One less than the largest part of the dual partition.
    pub k: usize,
    pub c: usize,
    pub n: usize,
    /// `m_0, m_1, …, m_k`; `m_{-a} = m_a`.
    m_nonneg: Vec<usize>,
}

impl BlockDecomposition {
    pub fn m(&self, a: i64) -> usize {
        self.m_nonneg
            .get(a.unsigned_abs() as usize)
            .copied()
            .unwrap_or(0)
    }

    /// `s_i`; equals `n` for `i ≤ -k` and `0` for `i > k`.
    pub fn s(&self, i: i64) -> usize {
        let k = self.k as i64;
        (i.max(-k)..=k).map(|j| self.m(j) * self.c).sum()
    }

    /// Length of block `B_a`.
    pub fn block_len(&self, a: i64) -> usize {
        self.m(a) * self.c
    }

    /// Block labels from `k` down to `-k`.
    pub fn labels(&self) -> impl DoubleEndedIterator<Item = i64> {
        let k = self.k as i64;
        (-k..=k).rev()
    }
}

pub fn block_decomposition(d: &Partition) -> BlockDecomposition {
    let c = gcd_parts(d);
    let mu = multiplicities(d);
    let largest_dual = d.len();
    let k = largest_dual - 1;
    let m_nonneg = (0..=k)
        .map(|a| {
            let len: usize = (a + 1..=largest_dual)
                .step_by(2)
                .map(|part| mu.get(&part).copied().unwrap_or(0))
                .sum();
            debug_assert_eq!(len % c, 0);
            len / c
        })
        .collect();
    BlockDecomposition {
        k,
        c,
        n: d.size(),
        m_nonneg,
    }
}

pub(crate) fn check_p(d: &Partition, p: i64) -> Result<usize> {
    let c = gcd_parts(d);
    if p < 0 || p as usize >= c {
        return Err(Error::POutOfRange { p, c });
    }
    Ok(p as usize)
}

/// `ω_p`: start from `ω_0` (block `B_a` constant `a`, blocks in decreasing `a`) and
/// raise the first `m_a·p` entries of each block to `a+1`.
pub fn omega(d: &Partition, p: i64) -> Result<DominantWeight> {
    let p = check_p(d, p)?;
    let blocks = block_decomposition(d);
    let mut coords = Vec::with_capacity(blocks.n);
    for a in blocks.labels() {
        let raised = blocks.m(a) * p;
        coords.extend(std::iter::repeat_n(a + 1, raised));
        coords.extend(std::iter::repeat_n(a, blocks.block_len(a) - raised));
    }
    DominantWeight::new(coords)
}

/// A weight of the Levi subgroup `L_d`, laid out factor by factor as in [`levi_data`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviWeight(pub Vec<i64>);

/// `λ_p`: the determinant character on `p·b_i/c` of the `b_i` factors `GL(j_i)`, trivial
/// on the rest. The factors receiving `det` are the first ones of each size.
pub fn lambda_p(d: &Partition, p: i64) -> Result<LeviWeight> {
    let p = check_p(d, p)?;
    let c = gcd_parts(d);
    let mut coords = Vec::with_capacity(d.size());
    for (j, b) in dual_partition(d).grouped() {
        for factor in 0..b {
            let value = i64::from(factor < p * b / c);
            coords.extend(std::iter::repeat_n(value, j));
        }
    }
    Ok(LeviWeight(coords))
}

/// Dynkin weight of the orbit `O_q` in type A: the sorted concatenation of
/// `(q_i-1, q_i-3, …, 1-q_i)` over the parts of `q`.
pub fn dynkin_weight_a(q: &Partition) -> DominantWeight {
    DominantWeight::dominant_of(
        q.parts()
            .iter()
            .flat_map(|&part| {
                let part = part as i64;
                (0..part).map(move |t| part - 1 - 2 * t)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, levi_data};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn golden_omegas() {
        let d = p(&[6, 3, 3]);
        assert_eq!(
            omega(&d, 0).unwrap().coords(),
            &[2, 2, 2, 0, 0, 0, 0, 0, 0, -2, -2, -2]
        );
        assert_eq!(
            omega(&d, 1).unwrap().coords(),
            &[3, 2, 2, 1, 1, 0, 0, 0, 0, -1, -2, -2]
        );
        assert_eq!(
            omega(&d, 2).unwrap().coords(),
            &[3, 3, 2, 1, 1, 1, 1, 0, 0, -1, -1, -2]
        );
    }

    #[test]
    fn omega_rejects_bad_p() {
        let d = p(&[6, 3, 3]);
        assert_eq!(omega(&d, 3), Err(Error::POutOfRange { p: 3, c: 3 }));
        assert_eq!(omega(&d, -1), Err(Error::POutOfRange { p: -1, c: 3 }));
        assert!(lambda_p(&d, 5).is_err());
    }

    #[test]
    fn block_examples() {
        let b = block_decomposition(&p(&[6, 3, 3]));
        assert_eq!((b.k, b.c), (2, 3));
        let ms: Vec<_> = (-2..=2).rev().map(|a| b.m(a)).collect();
        assert_eq!(ms, vec![1, 0, 2, 0, 1]);
        let ss: Vec<_> = (-2..=3).rev().map(|i| b.s(i)).collect();
        assert_eq!(ss, vec![0, 3, 3, 9, 9, 12]);

        let b = block_decomposition(&p(&[1, 1]));
        assert_eq!((b.k, b.c), (1, 1));
        assert_eq!((b.m(1), b.m(0), b.m(-1)), (1, 0, 1));
        let ss: Vec<_> = (-1..=2).rev().map(|i| b.s(i)).collect();
        assert_eq!(ss, vec![0, 1, 1, 2]);

        let b = block_decomposition(&p(&[5]));
        assert_eq!((b.k, b.c, b.m(0)), (0, 5, 1));
        assert_eq!((b.s(1), b.s(0)), (0, 5));
    }

    #[test]
    fn lambda_examples() {
        let d = p(&[6, 3, 3]);
        assert_eq!(lambda_p(&d, 0).unwrap().0, vec![0; 12]);
        assert_eq!(
            lambda_p(&d, 1).unwrap().0,
            vec![1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0]
        );
        assert_eq!(
            lambda_p(&d, 2).unwrap().0,
            vec![1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0]
        );
    }

    #[test]
    fn dynkin_examples() {
        assert_eq!(
            dynkin_weight_a(&p(&[3, 3, 3, 1, 1, 1])).coords(),
            &[2, 2, 2, 0, 0, 0, 0, 0, 0, -2, -2, -2]
        );
        assert_eq!(
            dynkin_weight_a(&Partition::ones(4)),
            DominantWeight::zero(4)
        );
        assert_eq!(dynkin_weight_a(&p(&[2])).coords(), &[1, -1]);
    }

    #[test]
    fn sweep_invariants() {
        for n in 1..=10 {
            for d in enumerate_partitions(n) {
                let c = gcd_parts(&d);
                let blocks = block_decomposition(&d);
                let two_rho = levi_data(&d).two_rho;
                assert_eq!(blocks.s(-(blocks.k as i64)), n);
                assert_eq!(blocks.s(blocks.k as i64 + 1), 0);
                for a in 0..=blocks.k as i64 {
                    assert_eq!(blocks.block_len(a), blocks.block_len(-a));
                }
                assert_eq!(omega(&d, 0).unwrap(), dynkin_weight_a(&dual_partition(&d)));
                for p in 0..c as i64 {
                    let w = omega(&d, p).unwrap();
                    assert_eq!(w.coords().iter().sum::<i64>(), p * (n / c) as i64);
                    let lam = lambda_p(&d, p).unwrap().0;
                    assert_eq!(lam.iter().filter(|&&x| x == 1).count(), p as usize * n / c);
                    let dot: i64 = lam.iter().zip(&two_rho).map(|(x, y)| x * y).sum();
                    assert_eq!(dot, 0);
                    let sum = lam.iter().zip(&two_rho).map(|(x, y)| x + y).collect();
                    assert_eq!(DominantWeight::dominant_of(sum), w, "{d} p={p}");
                }
            }
        }
    }
}
