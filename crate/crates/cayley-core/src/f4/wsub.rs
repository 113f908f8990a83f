//! Support-level subspace calculus on the weight model.
//!
//! A subspace is described by the set of nonzero weight indices it
//! contains together with a slot recording how much of the 2-dimensional
//! W₀ it holds. The product of weight spaces is known only at the support
//! level (the table records which products are nonzero, not their
//! structure constants), so:
//!
//! * products are upper bounds, flagged `overapprox` whenever a W₀ *line*
//!   enters a product;
//! * the only lines ever certified are annihilator lines: for a single
//!   constraint index j, the kernel of W₀ → W_j is exactly one line, and
//!   by the trilinear support symmetry it coincides with the kernel of
//!   W₀ → W_{−j}, hence is self-conjugate;
//! * the hermitian form pairs each W_i with itself and is definite, so a
//!   line and its hermitian complement inside W₀ always intersect
//!   trivially.
//!
//! All perps in the twistor projections and lattice constructions are
//! hermitian; the bilinear perp is kept as an explicitly separate
//! operation (it is the control case under which the canonical lattices
//! lose multiplicativity).

use super::table::table_product;
use super::{rep_grading, CanonicalElement, F4Error};
use std::collections::BTreeSet;
use std::fmt;

/// Contents of the W₀ slot of a weight subspace.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum W0Slot {
    Empty,
    /// The annihilator line of W_{±anchor} inside W₀ (`perped = false`),
    /// or its hermitian complement within W₀ (`perped = true`). The
    /// un-perped line is self-conjugate.
    Line { anchor: u8, perped: bool },
    Full,
}

impl W0Slot {
    pub fn dim(&self) -> usize {
        match self {
            W0Slot::Empty => 0,
            W0Slot::Line { .. } => 1,
            W0Slot::Full => 2,
        }
    }
}

/// A subspace of the 26-dimensional weight model given by its support.
#[derive(Clone)]
pub struct WeightSubspace {
    support: BTreeSet<i8>,
    w0: W0Slot,
    overapprox: bool,
}

// the overapprox flag is provenance, not part of the subspace value
impl PartialEq for WeightSubspace {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support && self.w0 == other.w0
    }
}

impl Eq for WeightSubspace {}

impl fmt::Debug for WeightSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.support.iter().map(|i| format!("{i}")).collect();
        write!(f, "{{{}}}", idx.join(","))?;
        match self.w0 {
            W0Slot::Empty => {}
            W0Slot::Line { anchor, perped } => write!(
                f,
                " + line(W0; anchor {anchor}{})",
                if perped { ", perped" } else { "" }
            )?,
            W0Slot::Full => write!(f, " + W0")?,
        }
        if self.overapprox {
            write!(f, " (upper bound)")?;
        }
        Ok(())
    }
}

impl WeightSubspace {
    pub fn empty() -> Self {
        WeightSubspace {
            support: BTreeSet::new(),
            w0: W0Slot::Empty,
            overapprox: false,
        }
    }

    pub fn full() -> Self {
        WeightSubspace {
            support: (-12..=12).filter(|&i| i != 0).collect(),
            w0: W0Slot::Full,
            overapprox: false,
        }
    }

    /// Subspace from a list of indices; index 0 requests the full W₀.
    pub fn from_indices(indices: &[i8]) -> Result<Self, F4Error> {
        let mut support = BTreeSet::new();
        let mut w0 = W0Slot::Empty;
        for &i in indices {
            if !(-12..=12).contains(&i) {
                return Err(F4Error::BadWeightIndex(i as i32));
            }
            if i == 0 {
                w0 = W0Slot::Full;
            } else {
                support.insert(i);
            }
        }
        Ok(WeightSubspace {
            support,
            w0,
            overapprox: false,
        })
    }

    pub fn with_w0(mut self, w0: W0Slot) -> Self {
        self.w0 = w0;
        self
    }

    pub fn support(&self) -> &BTreeSet<i8> {
        &self.support
    }

    pub fn w0(&self) -> W0Slot {
        self.w0
    }

    pub fn dim(&self) -> usize {
        self.support.len() + self.w0.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty() && self.w0 == W0Slot::Empty
    }

    /// Whether some product along the way passed through a W₀ line, making
    /// this support set an upper bound rather than an exact description.
    pub fn is_overapprox(&self) -> bool {
        self.overapprox
    }

    /// Effective index list for products: the support plus an entry for a
    /// nonempty W₀ slot (tagged when it is only a line).
    fn effective(&self) -> Vec<(i8, bool)> {
        let mut v: Vec<(i8, bool)> = self.support.iter().map(|&i| (i, false)).collect();
        match self.w0 {
            W0Slot::Empty => {}
            W0Slot::Line { .. } => v.push((0, true)),
            W0Slot::Full => v.push((0, false)),
        }
        v
    }

    /// Support-level product under the weight-space table.
    pub fn product(&self, rhs: &Self) -> Self {
        let mut support = BTreeSet::new();
        let mut w0_hit = false;
        let mut overapprox = self.overapprox || rhs.overapprox;
        for (i, i_line) in self.effective() {
            for (j, j_line) in rhs.effective() {
                let line_involved = i_line || j_line;
                match table_product(i, j) {
                    None => {}
                    Some(0) => {
                        w0_hit = true;
                        overapprox |= line_involved;
                    }
                    Some(k) => {
                        support.insert(k);
                        overapprox |= line_involved;
                    }
                }
            }
        }
        WeightSubspace {
            support,
            w0: if w0_hit { W0Slot::Full } else { W0Slot::Empty },
            overapprox,
        }
    }

    /// k-th support power, k ≥ 1.
    pub fn power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Hermitian complement: each W_i pairs only with itself.
    pub fn herm_perp(&self) -> Self {
        let support = (-12..=12)
            .filter(|&i| i != 0 && !self.support.contains(&i))
            .collect();
        let w0 = match self.w0 {
            W0Slot::Empty => W0Slot::Full,
            W0Slot::Full => W0Slot::Empty,
            W0Slot::Line { anchor, perped } => W0Slot::Line {
                anchor,
                perped: !perped,
            },
        };
        WeightSubspace {
            support,
            w0,
            overapprox: self.overapprox,
        }
    }

    /// Bilinear complement: W_i pairs with W_{−i}.
    pub fn bilin_perp(&self) -> Result<Self, F4Error> {
        let support = (-12..=12)
            .filter(|&i| i != 0 && !self.support.contains(&(-i)))
            .collect();
        let w0 = match self.w0 {
            W0Slot::Empty => W0Slot::Full,
            W0Slot::Full => W0Slot::Empty,
            W0Slot::Line { .. } => {
                return Err(F4Error::UnresolvableLine(
                    "bilinear complement of a W0 line".into(),
                ))
            }
        };
        Ok(WeightSubspace {
            support,
            w0,
            overapprox: self.overapprox,
        })
    }

    /// Conjugation negates the support and fixes the certified
    /// (self-conjugate) annihilator lines.
    pub fn conj(&self) -> Result<Self, F4Error> {
        let w0 = match self.w0 {
            W0Slot::Line { perped: true, .. } => {
                return Err(F4Error::UnresolvableLine(
                    "conjugate of a perped W0 line".into(),
                ))
            }
            other => other,
        };
        Ok(WeightSubspace {
            support: self.support.iter().map(|&i| -i).collect(),
            w0,
            overapprox: self.overapprox,
        })
    }

    pub fn sum(&self, rhs: &Self) -> Result<Self, F4Error> {
        let w0 = match (self.w0, rhs.w0) {
            (W0Slot::Full, _) | (_, W0Slot::Full) => W0Slot::Full,
            (W0Slot::Empty, x) | (x, W0Slot::Empty) => x,
            (
                W0Slot::Line {
                    anchor: a,
                    perped: p,
                },
                W0Slot::Line {
                    anchor: b,
                    perped: q,
                },
            ) => {
                if a == b && p == q {
                    W0Slot::Line {
                        anchor: a,
                        perped: p,
                    }
                } else if a == b {
                    // a line and its hermitian complement span W₀
                    W0Slot::Full
                } else {
                    return Err(F4Error::UnresolvableLine(format!(
                        "sum of lines anchored at {a} and {b}"
                    )));
                }
            }
        };
        Ok(WeightSubspace {
            support: self.support.union(&rhs.support).copied().collect(),
            w0,
            overapprox: self.overapprox || rhs.overapprox,
        })
    }

    pub fn intersect(&self, rhs: &Self) -> Result<Self, F4Error> {
        let w0 = match (self.w0, rhs.w0) {
            (W0Slot::Empty, _) | (_, W0Slot::Empty) => W0Slot::Empty,
            (W0Slot::Full, x) | (x, W0Slot::Full) => x,
            (
                W0Slot::Line {
                    anchor: a,
                    perped: p,
                },
                W0Slot::Line {
                    anchor: b,
                    perped: q,
                },
            ) => {
                if a == b && p == q {
                    W0Slot::Line {
                        anchor: a,
                        perped: p,
                    }
                } else if a == b {
                    // definite hermitian form: a line meets its complement
                    // trivially
                    W0Slot::Empty
                } else {
                    return Err(F4Error::UnresolvableLine(format!(
                        "intersection of lines anchored at {a} and {b}"
                    )));
                }
            }
        };
        Ok(WeightSubspace {
            support: self.support.intersection(&rhs.support).copied().collect(),
            w0,
            overapprox: self.overapprox || rhs.overapprox,
        })
    }

    pub fn is_subspace_of(&self, rhs: &Self) -> bool {
        if !self.support.is_subset(&rhs.support) {
            return false;
        }
        match (self.w0, rhs.w0) {
            (W0Slot::Empty, _) => true,
            (_, W0Slot::Full) => true,
            (
                W0Slot::Line {
                    anchor: a,
                    perped: p,
                },
                W0Slot::Line {
                    anchor: b,
                    perped: q,
                },
            ) => a == b && p == q,
            _ => false,
        }
    }

    pub fn is_conj_stable(&self) -> bool {
        let sym = self.support.iter().all(|&i| self.support.contains(&-i));
        let w0_ok = !matches!(self.w0, W0Slot::Line { perped: true, .. });
        sym && w0_ok
    }

    /// Isotropy for the bilinear form: no index pairs with its negative
    /// and no W₀ component (the form is nondegenerate on W₀).
    pub fn is_bilin_isotropic(&self) -> bool {
        self.w0 == W0Slot::Empty && self.support.iter().all(|&i| !self.support.contains(&-i))
    }

    /// Support-level product closure: S·S ⊆ S.
    pub fn is_product_closed(&self) -> bool {
        self.product(self).is_subspace_of(self)
    }

    /// Stabilizer: the largest T with T·S ⊆ S.
    pub fn stabilizer(&self) -> Self {
        max_mapping(self, self)
    }

    /// Annihilator: the largest T with T·S = 0.
    pub fn annihilator(&self) -> Self {
        max_mapping(self, &WeightSubspace::empty())
    }
}

/// The largest subspace T with T·a ⊆ target, certified at support level.
///
/// The W₀ slot of the result is `Full` when every constraint allows it, an
/// annihilator `Line` when exactly one index family {j, −j} obstructs it,
/// and `Empty` otherwise.
pub fn max_mapping(a: &WeightSubspace, target: &WeightSubspace) -> WeightSubspace {
    let a_has_w0 = a.w0 != W0Slot::Empty;
    let mut support = BTreeSet::new();
    for i in (-12..=12i8).filter(|&i| i != 0) {
        let mut ok = true;
        for &j in &a.support {
            match table_product(i, j) {
                None => {}
                Some(0) if target.w0 != W0Slot::Full => {
                    ok = false;
                    break;
                }
                Some(k) if k != 0 && !target.support.contains(&k) => {
                    ok = false;
                    break;
                }
                Some(_) => {}
            }
        }
        // W_i·W₀ = W_i whenever a touches W₀
        if ok && a_has_w0 && !target.support.contains(&i) {
            ok = false;
        }
        if ok {
            support.insert(i);
        }
    }
    // W₀ slot: every j in the support of a imposes W₀·W_j = W_j ⊆ target
    let mut failing: BTreeSet<u8> = BTreeSet::new();
    let mut full_ok = true;
    for &j in &a.support {
        if !target.support.contains(&j) {
            full_ok = false;
            failing.insert(j.unsigned_abs());
        }
    }
    let mut line_possible = true;
    if a_has_w0 && target.w0 != W0Slot::Full {
        // W₀·W₀ ⊆ W₀ cannot be certified inside a smaller slot
        full_ok = false;
        line_possible = false;
    }
    // The line is certified for annihilators only: with a single
    // constraint family {j, −j} the kernel of W₀ → W_j is exactly one
    // line, self-conjugate by the trilinear support symmetry. Relative
    // stabilizers with a nonzero target stay weight-space sums, matching
    // the displayed spaces (ℓ_s, 𝒞_s, 𝒞_ℓ).
    let w0 = if full_ok {
        W0Slot::Full
    } else if line_possible && target.is_empty() && failing.len() == 1 {
        W0Slot::Line {
            anchor: *failing.iter().next().unwrap(),
            perped: false,
        }
    } else {
        W0Slot::Empty
    };
    WeightSubspace {
        support,
        w0,
        overapprox: a.overapprox || target.overapprox,
    }
}

// --- base configurations and twistor projections ---------------------------

/// The base isotropic line W₁₂ (highest weight).
pub fn base_line() -> WeightSubspace {
    WeightSubspace::from_indices(&[12]).unwrap()
}

/// The base isotropic two-plane W₁₁ ⊕ W₁₂.
pub fn base_two_plane() -> WeightSubspace {
    WeightSubspace::from_indices(&[11, 12]).unwrap()
}

/// The base point of the Grassmannian in weight coordinates:
/// V₀ = W₁₁ + W₇ + W₆ + W₅ + W₀ + W₋₅ + W₋₆ + W₋₇ + W₋₁₁.
pub fn base_point_v0() -> WeightSubspace {
    WeightSubspace::from_indices(&[11, 7, 6, 5, 0, -5, -6, -7, -11]).unwrap()
}

fn require(b: bool, msg: &str) -> Result<(), F4Error> {
    if b {
        Ok(())
    } else {
        Err(F4Error::NotTwistorPoint(msg.into()))
    }
}

/// A line ℓ with ℓ·ℓ = 0, the pointwise data of the 3-symmetric twistor
/// space.
pub fn check_t4_line(ell: &WeightSubspace) -> Result<(), F4Error> {
    require(
        ell.w0 == W0Slot::Empty && ell.support.len() == 1,
        "expected a single-index line",
    )?;
    require(ell.product(ell).is_empty(), "line does not square to zero")?;
    require(ell.is_bilin_isotropic(), "line is not isotropic")
}

/// A 2-dimensional isotropic 𝒞 with 𝒞² = 0.
pub fn check_t3_plane(c: &WeightSubspace) -> Result<(), F4Error> {
    require(
        c.w0 == W0Slot::Empty && c.support.len() == 2,
        "expected a two-index plane",
    )?;
    require(c.product(c).is_empty(), "plane does not square to zero")?;
    require(c.is_bilin_isotropic(), "plane is not isotropic")
}

/// p₄(ℓ) = ℓ ⊕ ℓ̄ ⊕ (ℓ_s ∩ ℓ̄_s).
pub fn p4(ell: &WeightSubspace) -> Result<WeightSubspace, F4Error> {
    check_t4_line(ell)?;
    let ls = ell.stabilizer();
    let mid = ls.intersect(&ls.conj()?)?;
    ell.sum(&ell.conj()?)?.sum(&mid)
}

/// p₃(𝒞) = (𝒞_a² ∩ 𝒞^⊥) ⊕ (𝒞_s ∩ 𝒞̄_s) ⊕ conj(𝒞_a² ∩ 𝒞^⊥).
pub fn p3(c: &WeightSubspace) -> Result<WeightSubspace, F4Error> {
    check_t3_plane(c)?;
    let ca2 = c.annihilator().power(2);
    let outer = ca2.intersect(&c.herm_perp())?;
    let cs = c.stabilizer();
    let mid = cs.intersect(&cs.conj()?)?;
    outer.sum(&mid)?.sum(&outer.conj()?)
}

/// p₃₄(ℓ, 𝒞) = (𝒞 ∩ ℓ^⊥) ⊕ (𝒞_ℓ² ∩ (𝒞_ℓ³)^⊥) ⊕ (𝒞̄_ℓ^⊥ ∩ 𝒞_ℓ^⊥)
///            ⊕ conj((𝒞 ∩ ℓ^⊥) ⊕ (𝒞_ℓ² ∩ (𝒞_ℓ³)^⊥)).
pub fn p34(ell: &WeightSubspace, c: &WeightSubspace) -> Result<WeightSubspace, F4Error> {
    check_t4_line(ell)?;
    check_t3_plane(c)?;
    require(ell.is_subspace_of(c), "line is not contained in the plane")?;
    let cl = max_mapping(c, ell);
    let cl2 = cl.product(&cl);
    let cl3 = cl2.product(&cl);
    let first = c.intersect(&ell.herm_perp())?;
    let second = cl2.intersect(&cl3.herm_perp())?;
    let third = cl.conj()?.herm_perp().intersect(&cl.herm_perp())?;
    let outer = first.sum(&second)?;
    outer.sum(&third)?.sum(&outer.conj()?)
}

/// Piece of the γ_I-orbit lattice at exponent `e`: the sum of all weight
/// spaces of ξ_I-grading ≤ e.
pub fn grading_piece(xi: &CanonicalElement, e: i32) -> WeightSubspace {
    let support = (-12..=12i8)
        .filter(|&i| i != 0 && rep_grading(i, xi) <= e)
        .collect();
    let w0 = if e >= 0 { W0Slot::Full } else { W0Slot::Empty };
    WeightSubspace {
        support,
        w0,
        overapprox: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(indices: &[i8]) -> WeightSubspace {
        WeightSubspace::from_indices(indices).unwrap()
    }

    #[test]
    fn stabilizer_of_base_line() {
        let ls = base_line().stabilizer();
        let expected: Vec<i8> = (-3..=12).collect();
        assert_eq!(ls, ws(&expected));
        assert_eq!(ls.dim(), 17);
    }

    #[test]
    fn annihilator_of_base_plane_and_its_square() {
        let ca = base_two_plane().annihilator();
        let expected: Vec<i8> = (1..=12).filter(|&i| i != 4).collect();
        assert_eq!(ca, ws(&expected));
        assert_eq!(ca.w0(), W0Slot::Empty);

        let ca2 = ca.power(2);
        let expected2: Vec<i8> = (8..=12).collect();
        assert_eq!(ca2, ws(&expected2));
    }

    #[test]
    fn stabilizer_of_base_plane() {
        let cs = base_two_plane().stabilizer();
        let mut expected: Vec<i8> = (1..=12).collect();
        expected.push(-4);
        expected.push(0);
        assert_eq!(cs, ws(&expected));
        assert_eq!(cs.dim(), 15);
    }

    // annihilator of W₄ is 16-dimensional including a self-conjugate line
    #[test]
    fn annihilator_of_w4_has_a_line() {
        let wa = ws(&[4]).annihilator();
        let expected_support: BTreeSet<i8> = [-11, -10, -9, -8, -3, -2, -1, 4, 5, 6, 7, 8, 9, 10, 12]
            .into_iter()
            .collect();
        assert_eq!(wa.support(), &expected_support);
        assert_eq!(
            wa.w0(),
            W0Slot::Line {
                anchor: 4,
                perped: false
            }
        );
        assert_eq!(wa.dim(), 16);
    }

    #[test]
    fn relative_stabilizer_c_ell() {
        let cl = max_mapping(&base_two_plane(), &base_line());
        let expected: Vec<i8> = (1..=12).collect();
        assert_eq!(cl, ws(&expected));
        // its powers
        let cl2 = cl.power(2);
        assert_eq!(cl2, ws(&(5..=12).collect::<Vec<_>>()));
        let cl3 = cl.power(3);
        assert_eq!(cl3, ws(&(8..=12).collect::<Vec<_>>()));
    }

    #[test]
    fn perp_and_conj_behave() {
        let s = ws(&[1, 2, 3]);
        let p = s.herm_perp();
        assert_eq!(p.dim(), 26 - 3);
        assert_eq!(p.herm_perp(), s);
        assert_eq!(s.conj().unwrap(), ws(&[-1, -2, -3]));
        assert_eq!(s.conj().unwrap().conj().unwrap(), s);

        // bilinear and hermitian perps differ by conjugating the support
        assert_eq!(s.bilin_perp().unwrap(), s.conj().unwrap().herm_perp());
    }

    #[test]
    fn sum_intersect_idempotence() {
        let s = ws(&[5, -5, 0]);
        assert_eq!(s.sum(&s).unwrap(), s);
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn line_slot_lattice_rules() {
        let line = W0Slot::Line {
            anchor: 4,
            perped: false,
        };
        let a = WeightSubspace::empty().with_w0(line);
        let b = a.herm_perp(); // full support + perped line
        let meet = a.intersect(&b).unwrap();
        assert_eq!(meet.w0(), W0Slot::Empty);
        let join = a.sum(&WeightSubspace::empty().with_w0(b.w0())).unwrap();
        assert_eq!(join.w0(), W0Slot::Full);
    }

    #[test]
    fn products_with_lines_are_flagged() {
        let wa = ws(&[4]).annihilator();
        assert!(!wa.is_overapprox());
        let sq = wa.power(2);
        assert!(sq.is_overapprox());
    }

    #[test]
    fn p4_at_base_line() {
        let out = p4(&base_line()).unwrap();
        let expected = ws(&[12, -12, 1, 2, 3, -1, -2, -3, 0]);
        assert_eq!(out, expected);
        assert_eq!(out.dim(), 10);
        assert!(out.is_conj_stable());
        assert!(out.is_product_closed());
    }

    #[test]
    fn p3_at_base_plane() {
        let out = p3(&base_two_plane()).unwrap();
        assert_eq!(out.dim(), 10);
        assert!(out.is_conj_stable());
        assert!(out.is_product_closed());
        // parts of dimensions 3 + 4 + 3
        let outer = ws(&[8, 9, 10]);
        let mid = ws(&[4, -4, 0]);
        assert!(outer.is_subspace_of(&out));
        assert!(mid.is_subspace_of(&out));
        assert!(outer.conj().unwrap().is_subspace_of(&out));
    }

    #[test]
    fn p34_at_base_flag_is_v0() {
        let out = p34(&base_line(), &base_two_plane()).unwrap();
        assert_eq!(out, base_point_v0());
        assert_eq!(out.dim(), 10);
        assert!(out.is_conj_stable());
        assert!(out.is_product_closed());
    }

    #[test]
    fn invalid_twistor_inputs_are_rejected() {
        // not isotropic: contains both 5 and −5
        assert!(p4(&ws(&[5]).sum(&ws(&[-5])).unwrap()).is_err());
        // plane that does not square to zero: W₄·W₁₁ = W₁₂
        assert!(p3(&ws(&[4, 11])).is_err());
        // line not inside the plane
        assert!(p34(&ws(&[10]), &base_two_plane()).is_err());
    }

    #[test]
    fn v0_is_a_valid_grassmann_support() {
        let v0 = base_point_v0();
        assert_eq!(v0.dim(), 10);
        assert!(v0.is_conj_stable());
        assert!(v0.is_product_closed());
    }

    #[test]
    fn grading_pieces_are_monotone() {
        let xi = CanonicalElement::new(&[4]).unwrap();
        let mut prev = grading_piece(&xi, -3);
        assert!(prev.is_empty());
        for e in -2..=2 {
            let cur = grading_piece(&xi, e);
            assert!(prev.is_subspace_of(&cur));
            prev = cur;
        }
        assert_eq!(prev, WeightSubspace::full());
    }
}
