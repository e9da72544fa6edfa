//! Euler characteristics of `S^j(U*)` over `G/B` for `G = GL(n)`, computed
//! combinatorially: every weight of `S^j` contributes the Weyl–Bott dot-action class of
//! its line bundle.
//!
//! Convention: we sum [`euler_line`] over the *sums of roots* of `j`-element multisets of
//! roots of `U`. It is pinned down by the identity `chi(n_{GL(2)}, j) = +[(j, −j)]`, checked
//! in the tests below.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::AddAssign;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intervals::{roots_of, IntervalSet};
use crate::weights::DominantWeight;

/// Default ceiling on the number of monomials [`sym_weights`] will enumerate.
pub const MONOMIAL_LIMIT: u128 = 1_000_000;

/// A formal integer combination of irreducible highest weights. Zero coefficients are
/// never stored, so equality is exact term-map equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VirtualCharacter {
    terms: BTreeMap<DominantWeight, i64>,
}

impl VirtualCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn irreducible(weight: DominantWeight) -> Self {
        let mut out = Self::zero();
        out.add_term(weight, 1);
        out
    }

    pub fn add_term(&mut self, weight: DominantWeight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(weight).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            // Re-find by value: the entry borrow ends above.
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn terms(&self) -> &BTreeMap<DominantWeight, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ coeff · dim V_λ`.
    pub fn dimension(&self) -> Result<i128> {
        self.terms.iter().try_fold(0i128, |acc, (w, &c)| {
            let d = i128::try_from(weyl_dimension(w)?)
                .map_err(|_| Error::Overflow("virtual dimension"))?;
            d.checked_mul(c as i128)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("virtual dimension"))
        })
    }

    /// Serializable term list, highest weight first.
    pub fn to_terms(&self) -> Vec<CharacterTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(w, &c)| CharacterTerm {
                weight: w.coords().to_vec(),
                coeff: c,
            })
            .collect()
    }
}

impl AddAssign<&VirtualCharacter> for VirtualCharacter {
    fn add_assign(&mut self, rhs: &VirtualCharacter) {
        for (w, &c) in &rhs.terms {
            self.add_term(w.clone(), c);
        }
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, &c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c < 0 { '-' } else { '+' };
            match c.abs() {
                1 => write!(f, "{sign}[{w}]")?,
                a => write!(f, "{sign}{a}[{w}]")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTerm {
    pub weight: Vec<i64>,
    pub coeff: i64,
}

/// Integer vectors with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    pub entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightMultiset {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// The Euler characteristic of the line bundle of weight `ν` on `G/B`:
/// `0` if `ν + ρ'` has a repeated entry, else `sign(w)·[w(ν + ρ') − ρ']` with `w` sorting
/// decreasingly. Here `ρ' = (n−1, …, 1, 0)`.
pub fn euler_line(nu: &[i64]) -> VirtualCharacter {
    let n = nu.len();
    let mut shifted: Vec<i64> = nu
        .iter()
        .enumerate()
        .map(|(i, &x)| x + (n - 1 - i) as i64)
        .collect();
    // insertion sort, counting transpositions
    let mut sign = 1i64;
    for i in 1..n {
        let mut k = i;
        while k > 0 && shifted[k - 1] < shifted[k] {
            shifted.swap(k - 1, k);
            sign = -sign;
            k -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return VirtualCharacter::zero();
    }
    let coords = shifted
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (n - 1 - i) as i64)
        .collect();
    let mut out = VirtualCharacter::zero();
    out.add_term(DominantWeight::dominant_of(coords), sign);
    out
}

/// `C(d + j − 1, j)`, saturating.
fn multichoose(d: usize, j: usize) -> u128 {
    if j == 0 {
        return 1;
    }
    if d == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..j as u128 {
        // acc * (d + i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul(d as u128 + i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Sums of all `j`-element multisets of roots of `U`, with multiplicity. Refuses when
/// there are more than [`MONOMIAL_LIMIT`] multisets.
pub fn sym_weights(u: &IntervalSet, j: usize) -> Result<WeightMultiset> {
    sym_weights_with_limit(u, j, MONOMIAL_LIMIT)
}

pub fn sym_weights_with_limit(u: &IntervalSet, j: usize, limit: u128) -> Result<WeightMultiset> {
    let n = u.n();
    let roots: Vec<Vec<i64>> = roots_of(u).iter().map(|r| r.root_vector(n)).collect();
    let count = multichoose(roots.len(), j);
    if count > limit {
        return Err(Error::TooManyMonomials { count, limit });
    }
    let mut out = WeightMultiset::default();
    let mut acc = vec![0i64; n];
    fn walk(
        roots: &[Vec<i64>],
        from: usize,
        left: usize,
        acc: &mut Vec<i64>,
        out: &mut WeightMultiset,
    ) {
        if left == 0 {
            *out.entries.entry(acc.clone()).or_insert(0) += 1;
            return;
        }
        for (idx, r) in roots.iter().enumerate().skip(from) {
            acc.iter_mut().zip(r).for_each(|(a, x)| *a += x);
            walk(roots, idx, left - 1, acc, out);
            acc.iter_mut().zip(r).for_each(|(a, x)| *a -= x);
        }
    }
    walk(&roots, 0, j, &mut acc, &mut out);
    Ok(out)
}

/// `χ(G/B, S^j(U*))` as a virtual character.
pub fn chi(u: &IntervalSet, j: usize) -> Result<VirtualCharacter> {
    let weights = sym_weights(u, j)?;
    let mut out = VirtualCharacter::zero();
    for (nu, &mult) in &weights.entries {
        for (w, c) in euler_line(nu).terms {
            out.add_term(w, c * mult as i64);
        }
    }
    Ok(out)
}

/// Weyl dimension formula `Π_{i<j} (λ_i − λ_j + j − i) / (j − i)`, in exact arithmetic.
pub fn weyl_dimension(lambda: &DominantWeight) -> Result<u128> {
    let w = lambda.coords();
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let top = (w[i] - w[j] + (j - i) as i64) as u128;
            let bottom = (j - i) as u128;
            num = num
                .checked_mul(top)
                .ok_or(Error::Overflow("weyl dimension"))?;
            den *= bottom;
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}

/// Degree-`j` coefficient of `Π_{i=1..n} (1 − t^i) / (1 − t)^{n²}`: the graded dimension
/// of functions on the nilpotent cone of `gl(n)`.
pub fn nilcone_graded_dim(n: usize, j: usize) -> u128 {
    // numerator truncated at degree j
    let mut num = vec![0i128; j + 1];
    num[0] = 1;
    for i in 1..=n {
        for deg in (i..=j).rev() {
            num[deg] -= num[deg - i];
        }
    }
    // (1 − t)^{−N} has coefficients C(N + k − 1, k)
    let big_n = n * n;
    let total: i128 = (0..=j)
        .map(|k| num[j - k] * multichoose(big_n, k) as i128)
        .sum();
    u128::try_from(total).expect("Hilbert series coefficients are nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::normalize;

    fn w(c: &[i64]) -> DominantWeight {
        DominantWeight::new(c.to_vec()).unwrap()
    }

    fn set(n: usize, ivs: &[(i64, i64)]) -> IntervalSet {
        normalize(ivs.iter().copied(), n)
    }

    #[test]
    fn euler_line_examples() {
        assert!(euler_line(&[1, 0, -1, 0]).is_zero());
        assert_eq!(
            euler_line(&[3, 1, 1, -2]),
            VirtualCharacter::irreducible(w(&[3, 1, 1, -2]))
        );
        let mut minus = VirtualCharacter::zero();
        minus.add_term(w(&[2, 0, -1, -1]), -1);
        assert_eq!(euler_line(&[2, 0, -2, 0]), minus);
        assert_eq!(minus.to_string(), "-[(2,0,-1,-1)]");
    }

    #[test]
    fn euler_line_alternates() {
        // s_i ∘ (ν + ρ') − ρ' swaps entries i, i+1 of ν + ρ'.
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                for c in -3..=3i64 {
                    let nu = [a, b, c];
                    for i in 0..2 {
                        let mut dotted = nu;
                        dotted[i] = nu[i + 1] - 1;
                        dotted[i + 1] = nu[i] + 1;
                        let mut sum = euler_line(&nu);
                        sum += &euler_line(&dotted);
                        assert!(sum.is_zero(), "{nu:?}");
                    }
                    let shifted = [a + 2, b + 1, c];
                    let singular = shifted[0] == shifted[1]
                        || shifted[1] == shifted[2]
                        || shifted[0] == shifted[2];
                    assert_eq!(euler_line(&nu).is_zero(), singular);
                }
            }
        }
    }

    #[test]
    fn sym_weight_examples() {
        let u = set(2, &[(1, 1)]);
        for j in 0..4 {
            let ws = sym_weights(&u, j).unwrap();
            assert_eq!(ws.entries.len(), 1);
            assert_eq!(ws.entries[&vec![j as i64, -(j as i64)]], 1);
        }
        let two = set(4, &[(1, 2)]);
        assert_eq!(two.dimension(), 2);
        let ws = sym_weights(&two, 2).unwrap();
        let expected: BTreeMap<Vec<i64>, u64> = [
            (vec![2, 0, -2, 0], 1),
            (vec![2, 0, -1, -1], 1),
            (vec![2, 0, 0, -2], 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(ws.entries, expected);
        assert_eq!(ws.total(), 3);
    }

    #[test]
    fn blow_up_guard() {
        let full = IntervalSet::full(8); // 28 roots
        assert!(matches!(
            sym_weights_with_limit(&full, 4, 10_000),
            Err(Error::TooManyMonomials { count: 31_465, .. })
        ));
        assert!(sym_weights(&IntervalSet::full(12), 6).is_err());
    }

    #[test]
    fn calibration_gl2() {
        let full = IntervalSet::full(2);
        for j in 0..6i64 {
            assert_eq!(
                chi(&full, j as usize).unwrap(),
                VirtualCharacter::irreducible(w(&[j, -j]))
            );
        }
    }

    #[test]
    fn chi_examples() {
        let u = set(4, &[(1, 2)]);
        let v = set(4, &[(1, 3)]);
        assert_eq!(chi(&u, 1).unwrap(), chi(&v, 1).unwrap());
        assert_eq!(
            chi(&u, 0).unwrap(),
            VirtualCharacter::irreducible(DominantWeight::zero(4))
        );
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(weyl_dimension(&w(&[1, 0, 0])).unwrap(), 3);
        assert_eq!(weyl_dimension(&w(&[1, 0, -1])).unwrap(), 8);
        assert_eq!(weyl_dimension(&w(&[2, 0, -2])).unwrap(), 27);
        assert_eq!(weyl_dimension(&w(&[4, -4])).unwrap(), 9);
        assert_eq!(weyl_dimension(&DominantWeight::zero(12)).unwrap(), 1);
        // Sym^k of the standard representation of GL(n): C(n + k − 1, k)
        assert_eq!(weyl_dimension(&w(&[5, 0, 0, 0])).unwrap(), 56);
    }

    /// `Π [i]_t · (1 − t)^{−(n² − n)}`, expanded by repeated partial sums.
    fn hilbert_oracle(n: usize, j: usize) -> u128 {
        let mut poly = vec![0u128; j + 1];
        poly[0] = 1;
        for i in 1..=n {
            // multiply by 1 + t + … + t^{i−1}
            let old = poly.clone();
            for deg in 0..=j {
                poly[deg] = (0..i.min(deg + 1)).map(|s| old[deg - s]).sum();
            }
        }
        for _ in 0..n * n - n {
            for deg in 1..=j {
                poly[deg] += poly[deg - 1];
            }
        }
        poly[j]
    }

    #[test]
    fn nilcone_dims() {
        for j in 0..10 {
            assert_eq!(nilcone_graded_dim(2, j), 2 * j as u128 + 1);
        }
        for n in 1..=6 {
            assert_eq!(nilcone_graded_dim(n, 0), 1);
            for j in 0..6 {
                assert_eq!(
                    nilcone_graded_dim(n, j),
                    hilbert_oracle(n, j),
                    "n={n} j={j}"
                );
            }
        }
        assert_eq!(hilbert_oracle(3, 2), 35);
        assert_eq!(nilcone_graded_dim(3, 2), 35);
    }

    #[test]
    fn virtual_character_cancels() {
        let mut v = VirtualCharacter::irreducible(w(&[1, 0]));
        v.add_term(w(&[1, 0]), -1);
        assert!(v.is_zero());
        assert_eq!(v, VirtualCharacter::zero());
        assert_eq!(v.to_string(), "0");
    }
}
