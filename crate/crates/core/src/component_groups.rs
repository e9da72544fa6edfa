//! Lusztig's canonical quotient `Ā(O)` for nilpotent orbits of classical groups.
//!
//! In types B, C and D the quotient is elementary abelian of exponent 2. Its elements
//! are subsets of a set `M` of part values, multiplied by symmetric difference, and it
//! is presented as a Coxeter group of type `A_1 × … × A_1` through a fixed choice of
//! simple reflections.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{gcd_parts, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassicalType {
    B,
    C,
    D,
}

impl ClassicalType {
    pub fn letter(self) -> char {
        match self {
            ClassicalType::B => 'B',
            ClassicalType::C => 'C',
            ClassicalType::D => 'D',
        }
    }

    /// Elements are all subsets of `M` (type C) or only those of even size (B, D).
    fn even_only(self) -> bool {
        !matches!(self, ClassicalType::C)
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for ClassicalType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "B" | "b" => Ok(ClassicalType::B),
            "C" | "c" => Ok(ClassicalType::C),
            "D" | "d" => Ok(ClassicalType::D),
            other => Err(format!(
                "unknown classical type {other:?}, expected B, C or D"
            )),
        }
    }
}

/// A nilpotent orbit of `so(2n+1)`, `sp(2n)` or `so(2n)` given by its Jordan type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalOrbit {
    kind: ClassicalType,
    partition: Partition,
}

impl ClassicalOrbit {
    /// Checks the parity of the size and that every part of the restricted parity
    /// (even for B and D, odd for C) occurs with even multiplicity.
    pub fn new(kind: ClassicalType, partition: Partition) -> Result<Self> {
        let size = partition.size();
        let fail = |reason: String| Error::InvalidOrbit {
            kind: kind.letter(),
            parts: partition.parts().to_vec(),
            reason,
        };
        let size_odd = size % 2 == 1;
        if size_odd != matches!(kind, ClassicalType::B) {
            return Err(fail(format!(
                "size {size} has the wrong parity for type {kind}"
            )));
        }
        let restricted_parity = match kind {
            ClassicalType::B | ClassicalType::D => 0,
            ClassicalType::C => 1,
        };
        for (value, mult) in partition.grouped() {
            if value % 2 == restricted_parity && mult % 2 == 1 {
                return Err(fail(format!(
                    "part {value} occurs an odd number of times ({mult})"
                )));
            }
        }
        Ok(ClassicalOrbit { kind, partition })
    }

    pub fn kind(&self) -> ClassicalType {
        self.kind
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Rank of the ambient group.
    pub fn rank(&self) -> usize {
        self.partition.size() / 2
    }
}

/// Every valid orbit of the given type whose partition has size `size`.
pub fn enumerate_orbits(kind: ClassicalType, size: usize) -> Vec<ClassicalOrbit> {
    crate::partitions::enumerate_partitions(size)
        .into_iter()
        .filter_map(|d| ClassicalOrbit::new(kind, d).ok())
        .collect()
}

/// The set `M`, stored as distinct values in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MSet(pub Vec<usize>);

/// An element of `Ā(O)`: a subset of `M`, stored in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbarElement(pub Vec<usize>);

impl AbarElement {
    pub fn identity() -> Self {
        AbarElement(Vec::new())
    }

    fn from_set(set: BTreeSet<usize>) -> Self {
        AbarElement(set.into_iter().rev().collect())
    }

    /// Group product: symmetric difference.
    pub fn mul(&self, other: &AbarElement) -> AbarElement {
        let a: BTreeSet<_> = self.0.iter().copied().collect();
        let b: BTreeSet<_> = other.0.iter().copied().collect();
        AbarElement::from_set(a.symmetric_difference(&b).copied().collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for AbarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// The subgroup `H_C` generated by the simple reflections in the reduced expression of `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HSubgroup {
    pub generators: Vec<AbarElement>,
}

impl HSubgroup {
    /// All elements of the subgroup, identity first.
    pub fn elements(&self) -> Vec<AbarElement> {
        let mut out = vec![AbarElement::identity()];
        for g in &self.generators {
            let extra: Vec<_> = out.iter().map(|x| x.mul(g)).collect();
            out.extend(extra);
        }
        out
    }

    pub fn order(&self) -> usize {
        1 << self.generators.len()
    }
}

/// `M`: values `λ_i` whose parity and cumulative multiplicity `ν_i = a_1 + … + a_i`
/// match the type (B: both odd; C: both even; D: `λ_i` odd and `ν_i` even).
/// Parts are taken in decreasing order.
pub fn m_set(o: &ClassicalOrbit) -> MSet {
    let (part_parity, nu_parity) = match o.kind {
        ClassicalType::B => (1, 1),
        ClassicalType::C => (0, 0),
        ClassicalType::D => (1, 0),
    };
    let mut nu = 0;
    let mut values = Vec::new();
    for (value, mult) in o.partition.grouped() {
        nu += mult;
        if value % 2 == part_parity && nu % 2 == nu_parity {
            values.push(value);
        }
    }
    MSet(values)
}

/// All elements of `Ā(O)`, ordered by the binary counter over `M` (identity first).
pub fn abar_elements(o: &ClassicalOrbit) -> Vec<AbarElement> {
    let m = m_set(o).0;
    let even_only = o.kind.even_only();
    (0u64..1 << m.len())
        .filter(|mask| !even_only || mask.count_ones() % 2 == 0)
        .map(|mask| {
            AbarElement(
                m.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
        .collect()
}

/// Type C: the singletons of `M`. Types B and D: pairs `{a, b}`, `a > b`, adjacent in `M`.
pub fn simple_reflections(o: &ClassicalOrbit) -> Vec<AbarElement> {
    let m = m_set(o).0;
    match o.kind {
        ClassicalType::C => m.iter().map(|&v| AbarElement(vec![v])).collect(),
        ClassicalType::B | ClassicalType::D => m
            .windows(2)
            .map(|pair| AbarElement(pair.to_vec()))
            .collect(),
    }
}

/// `H_C` for the class of `w`: the simple reflections occurring in the (unique) reduced
/// expression of `w`.
pub fn h_c(o: &ClassicalOrbit, w: &AbarElement) -> Result<HSubgroup> {
    let m = m_set(o).0;
    let in_w: Vec<bool> = m.iter().map(|v| w.0.contains(v)).collect();
    let not_element = || Error::NotAnElement(format!("{w} in type {} with M = {m:?}", o.kind));
    if w.0.iter().any(|v| !m.contains(v)) || w.0.len() != in_w.iter().filter(|&&b| b).count() {
        return Err(not_element());
    }
    let generators = match o.kind {
        ClassicalType::C => w.0.iter().map(|&v| AbarElement(vec![v])).collect(),
        ClassicalType::B | ClassicalType::D => {
            if w.0.len() % 2 == 1 {
                return Err(not_element());
            }
            // Generator {m_i, m_{i+1}} is used iff an odd number of m_1..=m_i lie in w.
            let mut used = false;
            let mut gens = Vec::new();
            for (i, pair) in m.windows(2).enumerate() {
                used ^= in_w[i];
                if used {
                    gens.push(AbarElement(pair.to_vec()));
                }
            }
            gens
        }
    };
    Ok(HSubgroup { generators })
}

/// Exponents `p` of the local systems `det^{p/c}` on `O_d` in `GL(n)`.
pub fn local_systems_gl(d: &Partition) -> Vec<usize> {
    (0..gcd_parts(d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit(kind: ClassicalType, parts: &[usize]) -> ClassicalOrbit {
        ClassicalOrbit::new(kind, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    fn el(values: &[usize]) -> AbarElement {
        AbarElement(values.to_vec())
    }

    #[test]
    fn validation() {
        use ClassicalType::*;
        let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
        assert!(ClassicalOrbit::new(C, p(&[2, 2])).is_ok());
        assert!(ClassicalOrbit::new(C, p(&[3, 1])).is_err());
        assert!(ClassicalOrbit::new(C, p(&[3])).is_err());
        assert!(ClassicalOrbit::new(B, p(&[2, 1])).is_err());
        assert!(ClassicalOrbit::new(B, p(&[2, 2, 1])).is_ok());
        assert!(ClassicalOrbit::new(D, p(&[3, 1])).is_ok());
        assert!(ClassicalOrbit::new(D, p(&[2, 1, 1])).is_err());
    }

    #[test]
    fn m_set_examples() {
        assert_eq!(m_set(&orbit(ClassicalType::C, &[2, 2])).0, vec![2]);
        assert!(m_set(&orbit(ClassicalType::C, &[4])).0.is_empty());
        assert_eq!(m_set(&orbit(ClassicalType::B, &[1, 1, 1])).0, vec![1]);
        assert_eq!(m_set(&orbit(ClassicalType::B, &[3, 1, 1])).0, vec![3, 1]);
        assert_eq!(m_set(&orbit(ClassicalType::B, &[5])).0, vec![5]);
    }

    #[test]
    fn elements_examples() {
        assert_eq!(
            abar_elements(&orbit(ClassicalType::C, &[2, 2])),
            vec![el(&[]), el(&[2])]
        );
        assert_eq!(abar_elements(&orbit(ClassicalType::C, &[4])), vec![el(&[])]);
        // ν = 1, 2, 4
        let d = orbit(ClassicalType::D, &[7, 3, 1, 1]);
        assert_eq!(m_set(&d).0, vec![3, 1]);
        assert_eq!(abar_elements(&d).len(), 2);
    }

    #[test]
    fn d_type_with_four_values() {
        let d = orbit(ClassicalType::D, &[7, 7, 5, 5, 3, 3, 1, 1]);
        assert_eq!(m_set(&d).0, vec![7, 5, 3, 1]);
        assert_eq!(abar_elements(&d).len(), 8);
    }

    #[test]
    fn simple_reflection_examples() {
        let c = orbit(ClassicalType::C, &[4, 4, 2, 2]);
        assert_eq!(m_set(&c).0, vec![4, 2]);
        assert_eq!(simple_reflections(&c), vec![el(&[4]), el(&[2])]);

        let b = orbit(ClassicalType::B, &[5, 3, 3, 1, 1]);
        assert_eq!(m_set(&b).0, vec![5, 3, 1]);
        assert_eq!(simple_reflections(&b), vec![el(&[5, 3]), el(&[3, 1])]);

        let b0 = orbit(ClassicalType::B, &[2, 2, 1]);
        assert_eq!(m_set(&b0).0, vec![1]);
        assert!(simple_reflections(&b0).is_empty());
        assert_eq!(abar_elements(&b0), vec![AbarElement::identity()]);
    }

    #[test]
    fn regular_and_subregular() {
        for n in 2..=6 {
            // regular orbits: trivial quotient
            for (kind, parts) in [
                (ClassicalType::B, vec![2 * n + 1]),
                (ClassicalType::C, vec![2 * n]),
                (ClassicalType::D, vec![2 * n - 1, 1]),
            ] {
                assert_eq!(abar_elements(&orbit(kind, &parts)).len(), 1, "{kind} {parts:?}");
            }
            // subregular B_n and C_n: Z/2
            let b = orbit(ClassicalType::B, &[2 * n - 1, 1, 1]);
            assert_eq!(abar_elements(&b).len(), 2);
            let c = orbit(ClassicalType::C, &[2 * n - 2, 2]);
            assert_eq!(abar_elements(&c).len(), 2);
        }
    }

    #[test]
    fn h_c_examples() {
        let b = orbit(ClassicalType::B, &[5, 3, 3, 1, 1]);
        assert!(h_c(&b, &el(&[])).unwrap().generators.is_empty());
        assert_eq!(
            h_c(&b, &el(&[5, 1])).unwrap().generators,
            vec![el(&[5, 3]), el(&[3, 1])]
        );
        assert_eq!(h_c(&b, &el(&[3, 1])).unwrap().generators, vec![el(&[3, 1])]);
        assert!(h_c(&b, &el(&[5])).is_err());
        assert!(h_c(&b, &el(&[4])).is_err());

        let c = orbit(ClassicalType::C, &[2, 2]);
        let h = h_c(&c, &el(&[2])).unwrap();
        assert_eq!(h.generators, vec![el(&[2])]);
        assert_eq!(h.elements(), vec![el(&[]), el(&[2])]);
    }

    #[test]
    fn gl_local_systems() {
        let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
        assert_eq!(local_systems_gl(&p(&[6, 3, 3])), vec![0, 1, 2]);
        assert_eq!(local_systems_gl(&p(&[2, 1])), vec![0]);
        assert_eq!(local_systems_gl(&p(&[4, 2])), vec![0, 1]);
    }
}
