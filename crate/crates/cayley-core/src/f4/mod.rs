//! The F₄ root system and the 26-dimensional weight model.
//!
//! Roots are stored as integer coordinate vectors in the simple-root basis
//! α₁..α₄ (α₁, α₂ long; α₃, α₄ short). The weights of the fundamental
//! representation are exactly the 24 short roots together with the
//! two-dimensional zero weight space W₀; the weight spaces multiply
//! according to the support-level table in [`table`], and [`wsub`] builds
//! the subspace calculus (stabilizers, annihilators, perps) and the three
//! twistor projections on top of it.

pub mod table;
pub mod wsub;

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum F4Error {
    #[error("invalid canonical element: {0}")]
    BadCanonicalElement(String),
    #[error("invalid weight index {0}")]
    BadWeightIndex(i32),
    #[error("W0 line cannot be resolved at support level: {0}")]
    UnresolvableLine(String),
    #[error("not a twistor point: {0}")]
    NotTwistorPoint(String),
    #[error("malformed table csv: {0}")]
    BadCsv(String),
}

/// A vector in the root lattice, coordinates in the simple-root basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub [i32; 4]);

impl RootVector {
    pub fn zero() -> Self {
        RootVector([0; 4])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RootVector(std::array::from_fn(|k| self.0[k] + rhs.0[k]))
    }

    pub fn neg(&self) -> Self {
        RootVector(std::array::from_fn(|k| -self.0[k]))
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// Coefficient of α_k, 1-indexed.
    pub fn coeff(&self, k: usize) -> i32 {
        self.0[k - 1]
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.0[0], self.0[1], self.0[2], self.0[3]
        )
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["a1", "a2", "a3", "a4"];
        let mut first = true;
        for (c, name) in self.0.iter().zip(names) {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if *c == 1 {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}{}", c, name)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn simple_root(k: usize) -> RootVector {
    assert!((1..=4).contains(&k));
    RootVector(std::array::from_fn(|i| if i == k - 1 { 1 } else { 0 }))
}

/// The 24 positive roots of 𝔣₄, the four simple ones first.
pub const POSITIVE_ROOTS: [RootVector; 24] = [
    RootVector([1, 0, 0, 0]),
    RootVector([0, 1, 0, 0]),
    RootVector([0, 0, 1, 0]),
    RootVector([0, 0, 0, 1]),
    RootVector([1, 1, 0, 0]),
    RootVector([0, 1, 1, 0]),
    RootVector([0, 0, 1, 1]),
    RootVector([0, 1, 2, 0]),
    RootVector([1, 1, 1, 0]),
    RootVector([0, 1, 1, 1]),
    RootVector([1, 1, 2, 0]),
    RootVector([1, 1, 1, 1]),
    RootVector([0, 1, 2, 1]),
    RootVector([1, 2, 2, 0]),
    RootVector([0, 1, 2, 2]),
    RootVector([1, 1, 2, 1]),
    RootVector([1, 1, 2, 2]),
    RootVector([1, 2, 2, 1]),
    RootVector([1, 2, 2, 2]),
    RootVector([1, 2, 3, 1]),
    RootVector([1, 2, 3, 2]),
    RootVector([1, 2, 4, 2]),
    RootVector([1, 3, 4, 2]),
    RootVector([2, 3, 4, 2]),
];

/// The highest root 2α₁+3α₂+4α₃+2α₄.
pub fn highest_root() -> RootVector {
    RootVector([2, 3, 4, 2])
}

/// All 48 roots: the positive ones and their negatives.
pub fn all_roots() -> Vec<RootVector> {
    POSITIVE_ROOTS
        .iter()
        .copied()
        .chain(POSITIVE_ROOTS.iter().map(RootVector::neg))
        .collect()
}

pub fn is_root(v: &RootVector) -> bool {
    POSITIVE_ROOTS.contains(v) || POSITIVE_ROOTS.contains(&v.neg())
}

/// Weights w₁..w₁₂ of the fundamental representation (the positive short
/// roots), indexed 1..=12.
pub const WEIGHTS: [RootVector; 12] = [
    RootVector([0, 0, 1, 0]),  // w1  = a3
    RootVector([0, 1, 1, 0]),  // w2  = a2+a3
    RootVector([1, 1, 1, 0]),  // w3  = a1+a2+a3
    RootVector([0, 0, 0, 1]),  // w4  = a4
    RootVector([0, 0, 1, 1]),  // w5  = a3+a4
    RootVector([0, 1, 1, 1]),  // w6  = a2+a3+a4
    RootVector([1, 1, 1, 1]),  // w7  = a1+a2+a3+a4
    RootVector([0, 1, 2, 1]),  // w8  = a2+2a3+a4
    RootVector([1, 1, 2, 1]),  // w9  = a1+a2+2a3+a4
    RootVector([1, 2, 2, 1]),  // w10 = a1+2a2+2a3+a4
    RootVector([1, 2, 3, 1]),  // w11 = a1+2a2+3a3+a4
    RootVector([1, 2, 3, 2]),  // w12 = a1+2a2+3a3+2a4
];

/// Weight vector for an index in −12..=12; index 0 is the zero weight.
pub fn weight(i: i8) -> RootVector {
    match i {
        0 => RootVector::zero(),
        1..=12 => WEIGHTS[(i - 1) as usize],
        -12..=-1 => WEIGHTS[(-i - 1) as usize].neg(),
        _ => panic!("weight index {i} out of range"),
    }
}

/// Index of a weight vector, if it is one (0 for the zero vector).
pub fn weight_index_of(v: &RootVector) -> Option<i8> {
    if v.is_zero() {
        return Some(0);
    }
    for (k, w) in WEIGHTS.iter().enumerate() {
        if v == w {
            return Some((k + 1) as i8);
        }
    }
    let nv = v.neg();
    for (k, w) in WEIGHTS.iter().enumerate() {
        if nv == *w {
            return Some(-((k + 1) as i8));
        }
    }
    None
}

/// Short roots are exactly the weights; the classification is stored, not
/// derived from a normalization of the Killing form.
pub fn is_short(v: &RootVector) -> bool {
    weight_index_of(v).map(|i| i != 0).unwrap_or(false)
}

pub fn is_long(v: &RootVector) -> bool {
    is_root(v) && !is_short(v)
}

/// The canonical element ξ_I = Σ_{i∈I} H_i for a nonempty I ⊆ {1,2,3,4}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalElement {
    indices: BTreeSet<u8>,
}

impl CanonicalElement {
    pub fn new(indices: &[u8]) -> Result<Self, F4Error> {
        let set: BTreeSet<u8> = indices.iter().copied().collect();
        if set.is_empty() || set.iter().any(|&k| !(1..=4).contains(&k)) {
            return Err(F4Error::BadCanonicalElement(format!("{indices:?}")));
        }
        Ok(CanonicalElement { indices: set })
    }

    pub fn indices(&self) -> impl Iterator<Item = u8> + '_ {
        self.indices.iter().copied()
    }

    /// Grading of a root-lattice vector: the sum of its coefficients over I.
    pub fn grading(&self, v: &RootVector) -> i32 {
        self.indices.iter().map(|&k| v.coeff(k as usize)).sum()
    }
}

impl fmt::Display for CanonicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Eigenvalue of ρ(ξ_I)/i on the weight space W_j.
pub fn rep_grading(i: i8, xi: &CanonicalElement) -> i32 {
    xi.grading(&weight(i))
}

/// Eigenvalue of ad(ξ_I)/i on the root space of α.
pub fn adjoint_grading(alpha: &RootVector, xi: &CanonicalElement) -> i32 {
    xi.grading(alpha)
}

/// Flag-manifold data attached to ξ_I.
///
/// `k_order_adjoint` is `max{α(ξ_I)/i : α ∈ Φ⁺} + 1`; `k_order_rep` is the
/// analogous value over the weights of the fundamental representation.
/// For I = {3} and I = {3,4} the two differ (5 vs 4, and 7 vs 6); both are
/// reported and the discrepancy flagged rather than silently resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagInvariants {
    pub real_dimension: usize,
    pub k_order_adjoint: usize,
    pub k_order_rep: usize,
    pub discrepancy: bool,
}

pub fn flag_invariants(xi: &CanonicalElement) -> FlagInvariants {
    let nonzero = POSITIVE_ROOTS
        .iter()
        .filter(|a| xi.grading(a) != 0)
        .count();
    let k_adj = POSITIVE_ROOTS
        .iter()
        .map(|a| xi.grading(a))
        .max()
        .unwrap_or(0) as usize
        + 1;
    let k_rep = (1..=12)
        .map(|i| rep_grading(i, xi))
        .max()
        .unwrap_or(0) as usize
        + 1;
    FlagInvariants {
        real_dimension: 2 * nonzero,
        k_order_adjoint: k_adj,
        k_order_rep: k_rep,
        discrepancy: k_adj != k_rep,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(POSITIVE_ROOTS.len(), 24);
        assert_eq!(all_roots().len(), 48);
        let set: BTreeSet<RootVector> = all_roots().into_iter().collect();
        assert_eq!(set.len(), 48, "roots are distinct");
    }

    #[test]
    fn highest_root_is_listed_and_maximal() {
        assert!(POSITIVE_ROOTS.contains(&highest_root()));
        assert_eq!(highest_root(), RootVector([2, 3, 4, 2]));
        for a in POSITIVE_ROOTS.iter() {
            for k in 1..=4 {
                assert!(a.coeff(k) <= highest_root().coeff(k));
            }
        }
    }

    // positive roots supported on {α₁, α₂} alone
    #[test]
    fn roots_avoiding_short_simple_roots() {
        let filtered: Vec<&RootVector> = POSITIVE_ROOTS
            .iter()
            .filter(|a| a.coeff(3) == 0 && a.coeff(4) == 0)
            .collect();
        assert_eq!(filtered.len(), 3);
        assert!(filtered.contains(&&simple_root(1)));
        assert!(filtered.contains(&&simple_root(2)));
        assert!(filtered.contains(&&RootVector([1, 1, 0, 0])));
    }

    #[test]
    fn short_long_split() {
        let shorts = POSITIVE_ROOTS.iter().filter(|a| is_short(a)).count();
        let longs = POSITIVE_ROOTS.iter().filter(|a| is_long(a)).count();
        assert_eq!((shorts, longs), (12, 12));
        // every weight is a short root; w12 has the stated coefficients
        assert_eq!(weight(12), RootVector([1, 2, 3, 2]));
        for i in 1..=12 {
            assert!(is_root(&weight(i)));
        }
    }

    #[test]
    fn weight_index_lookup_is_inverse() {
        for i in -12..=12 {
            assert_eq!(weight_index_of(&weight(i)), Some(i));
        }
        assert_eq!(weight_index_of(&RootVector([0, 1, 2, 0])), None);
    }

    fn xi(ks: &[u8]) -> CanonicalElement {
        CanonicalElement::new(ks).unwrap()
    }

    // the three displayed case tables for ρ(H₄), ρ(H₃), ρ(H₃+H₄),
    // entry-for-entry over all 26 weight-model summands
    #[test]
    fn rep_grading_reproduces_case_tables() {
        let h4 = xi(&[4]);
        for i in -12..=12i8 {
            let expected = match i.abs() {
                0..=3 => 0,
                4..=11 => 1,
                12 => 2,
                _ => unreachable!(),
            } * (i.signum() as i32);
            assert_eq!(rep_grading(i, &h4), expected, "H4 on W{i}");
        }
        let h3 = xi(&[3]);
        for i in -12..=12i8 {
            let expected = match i.abs() {
                0 | 4 => 0,
                1..=3 | 5..=7 => 1,
                8..=10 => 2,
                11 | 12 => 3,
                _ => unreachable!(),
            } * (i.signum() as i32);
            assert_eq!(rep_grading(i, &h3), expected, "H3 on W{i}");
        }
        let h34 = xi(&[3, 4]);
        for i in -12..=12i8 {
            let expected = match i.abs() {
                0 => 0,
                1..=4 => 1,
                5..=7 => 2,
                8..=10 => 3,
                11 => 4,
                12 => 5,
                _ => unreachable!(),
            } * (i.signum() as i32);
            assert_eq!(rep_grading(i, &h34), expected, "H3+H4 on W{i}");
        }
    }

    #[test]
    fn rep_grading_named_cases() {
        assert_eq!(rep_grading(12, &xi(&[4])), 2);
        assert_eq!(rep_grading(4, &xi(&[3])), 0);
        assert_eq!(rep_grading(8, &xi(&[3, 4])), 3);
    }

    #[test]
    fn flag_dimensions_and_orders() {
        let t4 = flag_invariants(&xi(&[4]));
        assert_eq!(t4.real_dimension, 30);
        assert_eq!(t4.k_order_adjoint, 3);
        assert_eq!(t4.k_order_rep, 3);
        assert!(!t4.discrepancy);

        let t3 = flag_invariants(&xi(&[3]));
        assert_eq!(t3.real_dimension, 40);
        assert_eq!(t3.k_order_adjoint, 5);
        assert_eq!(t3.k_order_rep, 4);
        assert!(t3.discrepancy);

        let t34 = flag_invariants(&xi(&[3, 4]));
        assert_eq!(t34.real_dimension, 42);
        assert_eq!(t34.k_order_adjoint, 7);
        assert_eq!(t34.k_order_rep, 6);
        assert!(t34.discrepancy);
    }

    #[test]
    fn canonical_element_validation() {
        assert!(CanonicalElement::new(&[]).is_err());
        assert!(CanonicalElement::new(&[5]).is_err());
        assert!(CanonicalElement::new(&[3, 4]).is_ok());
    }
}
