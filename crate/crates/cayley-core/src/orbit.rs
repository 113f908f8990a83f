//! The two nontrivial nilpotent orbit representatives acting on the
//! 26-dimensional weight model, their twistor-lift certificates, and the
//! Jacobson–Morozov / distinguished-parabolic bookkeeping in small root
//! systems.
//!
//! The weight basis is ordered w₋₁₂..w₋₁, w₀ᵃ, w₀ᵇ, w₁..w₁₂. The first
//! representative is a root vector for α₄ and acts by ten unit
//! transitions; the second is a sum of root vectors for α₃ and α₄ whose
//! middle chain is realized through the adjoint representation of the
//! 𝔰𝔩₃ spanned by the α₃, α₄ and α₃+α₄ root spaces, with the pinned
//! dictionary
//!
//! ```text
//! w₅ ↔ E₁₃   w₁ ↔ E₁₂   w₄ ↔ E₂₃   w₀ᵃ ↔ H₁   w₀ᵇ ↔ H₂
//! w₋₁ ↔ E₂₁  w₋₄ ↔ E₃₂  w₋₅ ↔ E₃₁
//! ```
//!
//! Different dictionaries yield conjugate operators; only
//! conjugation-invariant outputs (nilorders, image and kernel supports)
//! are asserted.

use crate::f4::wsub::{base_point_v0, WeightSubspace, W0Slot};
use crate::f4::{simple_root, weight, F4Error, RootVector};
use crate::linalg::{nilorder, Matrix, SpanBuilder, Subspace};
use crate::scalar::{gauss, GaussRational, Rational, Ring};

/// Coordinate of a nonzero weight index in the 26-dimensional weight basis.
pub fn coord_of_weight(i: i8) -> usize {
    assert!((-12..=12).contains(&i) && i != 0);
    if i < 0 {
        (i + 12) as usize
    } else {
        (i + 13) as usize
    }
}

/// Coordinates of the two-dimensional zero weight space.
pub const W0A: usize = 12;
pub const W0B: usize = 13;

/// Weight attached to a coordinate (0 for the two W₀ slots).
pub fn weight_of_coord(c: usize) -> RootVector {
    assert!(c < 26);
    match c {
        0..=11 => weight(c as i8 - 12),
        12 | 13 => RootVector::zero(),
        _ => weight(c as i8 - 13),
    }
}

/// Realize a support-level subspace as coordinates; W₀ lines have no
/// coordinate realization and are rejected.
pub fn subspace_of_support(ws: &WeightSubspace) -> Result<Subspace<GaussRational>, F4Error> {
    let mut vecs = Vec::new();
    let e = |c: usize| {
        let mut v = vec![gauss(0, 0); 26];
        v[c] = gauss(1, 0);
        v
    };
    for &i in ws.support() {
        vecs.push(e(coord_of_weight(i)));
    }
    match ws.w0() {
        W0Slot::Empty => {}
        W0Slot::Full => {
            vecs.push(e(W0A));
            vecs.push(e(W0B));
        }
        W0Slot::Line { .. } => {
            return Err(F4Error::UnresolvableLine(
                "a W0 line has no fixed coordinate realization".into(),
            ))
        }
    }
    Ok(Subspace::from_spanning(26, vecs))
}

/// A nilpotent operator on the weight model, weight-shift homogeneous for
/// its declared roots.
#[derive(Clone)]
pub struct WeightOperator {
    name: &'static str,
    matrix: Matrix<GaussRational>,
    shifts: Vec<RootVector>,
}

impl WeightOperator {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn matrix(&self) -> &Matrix<GaussRational> {
        &self.matrix
    }

    pub fn shifts(&self) -> &[RootVector] {
        &self.shifts
    }

    pub fn nilorder(&self) -> usize {
        nilorder(&self.matrix, 26).expect("weight operators are nilpotent")
    }

    /// Every nonzero entry must shift the source weight by one of the
    /// declared roots.
    pub fn is_weight_homogeneous(&self) -> bool {
        for r in 0..26 {
            for c in 0..26 {
                if self.matrix.get(r, c).is_zero() {
                    continue;
                }
                let shift = weight_of_coord(r).add(&weight_of_coord(c).neg());
                if !self.shifts.contains(&shift) {
                    return false;
                }
            }
        }
        true
    }

    /// The operator kills every coordinate in the support of `ws`.
    pub fn annihilates(&self, ws: &WeightSubspace) -> bool {
        ws.support().iter().all(|&i| {
            let c = coord_of_weight(i);
            (0..26).all(|r| self.matrix.get(r, c).is_zero())
        })
    }

    /// Image of the k-th power restricted to a coordinate-realizable
    /// subspace.
    pub fn power_image_on(
        &self,
        k: usize,
        domain: &WeightSubspace,
    ) -> Result<Subspace<GaussRational>, F4Error> {
        let dom = subspace_of_support(domain)?;
        let m = self.matrix.pow(k);
        let mut span = SpanBuilder::new(26);
        for b in dom.basis() {
            span.insert(m.apply(b));
        }
        Ok(span.into_subspace())
    }
}

fn unit() -> GaussRational {
    gauss(1, 0)
}

/// ρ(X₄): ten unit transitions
/// W₋₁₂↦W₋₁₁, W₋₇↦W₋₃, W₋₆↦W₋₂, W₋₅↦W₋₁, W₋₄↦W₀, W₀↦W₄,
/// W₁↦W₅, W₂↦W₆, W₃↦W₇, W₁₁↦W₁₂; all other columns vanish.
/// The W₀ leg runs through the w₀ᵃ slot, so the image of the 2-dim W₀ is
/// the single line W₄.
pub fn rho_x4() -> WeightOperator {
    let mut m = Matrix::zero(26, 26);
    let pairs: [(i8, i8); 8] = [
        (-12, -11),
        (-7, -3),
        (-6, -2),
        (-5, -1),
        (1, 5),
        (2, 6),
        (3, 7),
        (11, 12),
    ];
    for &(src, dst) in pairs.iter() {
        m.set(coord_of_weight(dst), coord_of_weight(src), unit());
    }
    m.set(W0A, coord_of_weight(-4), unit()); // W₋₄ ↦ w₀ᵃ
    m.set(coord_of_weight(4), W0A, unit()); // w₀ᵃ ↦ W₄
    WeightOperator {
        name: "X4",
        matrix: m,
        shifts: vec![simple_root(4)],
    }
}

/// ρ(X₃+X₄): six length-three chains with unit coefficients
/// (W₋₁₂↦W₋₁₁↦W₋₁₀, W₁₀↦W₁₁↦W₁₂, W₋₉↦W₋₇↦W₋₃, W₃↦W₇↦W₉,
/// W₋₈↦W₋₆↦W₋₂, W₂↦W₆↦W₈) and the middle length-five chain
/// W₋₅ ↦ W₋₁+W₋₄ ↦ W₀ ↦ W₁+W₄ ↦ W₅ realized by ad(E₁₂+E₂₃) on the
/// 𝔰𝔩₃ dictionary above.
pub fn rho_x34() -> WeightOperator {
    let mut m = Matrix::zero(26, 26);
    let chains: [[i8; 3]; 6] = [
        [-12, -11, -10],
        [10, 11, 12],
        [-9, -7, -3],
        [3, 7, 9],
        [-8, -6, -2],
        [2, 6, 8],
    ];
    for chain in chains {
        for w in chain.windows(2) {
            m.set(coord_of_weight(w[1]), coord_of_weight(w[0]), unit());
        }
    }
    // middle chain from the 𝔰𝔩₃ brackets:
    // ad(X)E₃₁ = E₂₁ − E₃₂, ad(X)E₂₁ = H₁, ad(X)E₃₂ = H₂,
    // ad(X)H₁ = −2E₁₂ + E₂₃, ad(X)H₂ = E₁₂ − 2E₂₃,
    // ad(X)E₁₂ = −E₁₃, ad(X)E₂₃ = E₁₃, ad(X)E₁₃ = 0.
    let c = coord_of_weight;
    m.set(c(-1), c(-5), unit());
    m.set(c(-4), c(-5), unit().neg());
    m.set(W0A, c(-1), unit());
    m.set(W0B, c(-4), unit());
    m.set(c(1), W0A, gauss(-2, 0));
    m.set(c(4), W0A, unit());
    m.set(c(1), W0B, unit());
    m.set(c(4), W0B, gauss(-2, 0));
    m.set(c(5), c(1), unit().neg());
    m.set(c(5), c(4), unit());
    WeightOperator {
        name: "X3+X4",
        matrix: m,
        shifts: vec![simple_root(3), simple_root(4)],
    }
}

/// Certificate data attached to a twistor-lift computation.
#[derive(Clone, Debug)]
pub struct LiftCertificate {
    /// The support squares to zero under the weight-space table.
    pub square_zero: bool,
    /// Every supported index is killed by the orbit operator.
    pub in_kernel: bool,
    /// The support lies inside φ = V₀.
    pub inside_phi: bool,
}

impl LiftCertificate {
    pub fn holds(&self) -> bool {
        self.square_zero && self.in_kernel && self.inside_phi
    }
}

/// Lift data for the α₄-orbit at the base configuration φ = V₀:
/// V = (W₄)ₐ ∩ (W₄)ₐ² ∩ φ and the isotropic piece V ∩ V̄^⊥.
pub fn lift_x4() -> Result<(WeightSubspace, WeightSubspace, LiftCertificate), F4Error> {
    let w4 = WeightSubspace::from_indices(&[4])?;
    let wa = w4.annihilator();
    let wa2 = wa.power(2);
    let phi = base_point_v0();
    let v = wa.intersect(&wa2)?.intersect(&phi)?;
    let d = v.intersect(&v.conj()?.herm_perp())?;
    let cert = LiftCertificate {
        square_zero: d.product(&d).is_empty(),
        in_kernel: rho_x4().annihilates(&d),
        inside_phi: d.is_subspace_of(&phi),
    };
    Ok((v, d, cert))
}

/// Lift data for the (α₃, α₄)-orbit at the base configuration: the line
/// im X³|_{φ^⊥}, expected W₅ ⊂ φ ∩ ker X with zero square.
pub fn lift_x34() -> Result<(WeightSubspace, LiftCertificate), F4Error> {
    let op = rho_x34();
    let phi = base_point_v0();
    let image = op.power_image_on(3, &phi.herm_perp())?;
    // the image must be spanned by single weight coordinates
    let mut indices = Vec::new();
    for b in image.basis() {
        let nonzero: Vec<usize> = (0..26).filter(|&c| !b[c].is_zero()).collect();
        if nonzero.len() != 1 || nonzero[0] == W0A || nonzero[0] == W0B {
            return Err(F4Error::NotTwistorPoint(
                "third-power image is not a sum of weight lines".into(),
            ));
        }
        let c = nonzero[0];
        let i = if c < 12 { c as i8 - 12 } else { c as i8 - 13 };
        indices.push(i);
    }
    let line = WeightSubspace::from_indices(&indices)?;
    let cert = LiftCertificate {
        square_zero: line.product(&line).is_empty(),
        in_kernel: op.annihilates(&line),
        inside_phi: line.is_subspace_of(&phi),
    };
    Ok((line, cert))
}

// --- graded root systems and the distinguished criterion --------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootSystemType {
    A1,
    A2,
    B2,
    F4,
}

impl RootSystemType {
    pub fn rank(&self) -> usize {
        match self {
            RootSystemType::A1 => 1,
            RootSystemType::A2 => 2,
            RootSystemType::B2 => 2,
            RootSystemType::F4 => 4,
        }
    }

    fn positive_roots(&self) -> Vec<Vec<i32>> {
        match self {
            RootSystemType::A1 => vec![vec![1]],
            RootSystemType::A2 => vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            // α₁ long, α₂ short
            RootSystemType::B2 => vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]],
            RootSystemType::F4 => crate::f4::POSITIVE_ROOTS
                .iter()
                .map(|r| r.0.to_vec())
                .collect(),
        }
    }
}

/// A root system with an integer grading induced by a grading element H,
/// specified through the values of the simple roots on H.
#[derive(Clone, Debug)]
pub struct GradedRootSystem {
    rtype: RootSystemType,
    simple_values: Vec<i32>,
}

impl GradedRootSystem {
    pub fn new(rtype: RootSystemType, simple_values: &[i32]) -> Result<Self, F4Error> {
        if simple_values.len() != rtype.rank() {
            return Err(F4Error::BadCanonicalElement(format!(
                "expected {} grading values, got {}",
                rtype.rank(),
                simple_values.len()
            )));
        }
        Ok(GradedRootSystem {
            rtype,
            simple_values: simple_values.to_vec(),
        })
    }

    /// The Jacobson–Morozov principal grading: every simple root has
    /// value 2.
    pub fn principal(rtype: RootSystemType) -> Self {
        GradedRootSystem {
            simple_values: vec![2; rtype.rank()],
            rtype,
        }
    }

    pub fn rtype(&self) -> RootSystemType {
        self.rtype
    }

    fn grading(&self, root: &[i32]) -> i32 {
        root.iter()
            .zip(&self.simple_values)
            .map(|(c, v)| c * v)
            .sum()
    }

    /// All roots (positives and negatives) with their gradings.
    fn graded_roots(&self) -> Vec<(Vec<i32>, i32)> {
        let pos = self.rtype.positive_roots();
        let mut out = Vec::with_capacity(2 * pos.len());
        for r in pos {
            let g = self.grading(&r);
            out.push((r.iter().map(|c| -c).collect(), -g));
            out.push((r, g));
        }
        out
    }
}

/// The distinguished-parabolic data for a graded root system:
/// 𝔩 = 𝔤₀, 𝔲 = Σ_{i>0} 𝔤_i, and 𝔲/\[𝔲,𝔲\] counted through roots that are
/// not sums of two positively-graded roots. The parabolic is
/// distinguished exactly when dim 𝔩 = dim 𝔲/\[𝔲,𝔲\].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistinguishedCheck {
    pub dim_l: usize,
    pub dim_u: usize,
    pub dim_u_ab: usize,
    pub is_distinguished: bool,
}

pub fn distinguished_check(rs: &GradedRootSystem) -> DistinguishedCheck {
    let graded = rs.graded_roots();
    let zero = graded.iter().filter(|(_, g)| *g == 0).count();
    let u: Vec<&Vec<i32>> = graded
        .iter()
        .filter(|(_, g)| *g > 0)
        .map(|(r, _)| r)
        .collect();
    let dim_l = rs.rtype.rank() + zero;
    let dim_u = u.len();
    let is_u_root = |candidate: &Vec<i32>| u.contains(&candidate);
    let mut decomposable = 0;
    for beta in &u {
        'outer: for g1 in &u {
            for g2 in &u {
                let s: Vec<i32> = g1.iter().zip(g2.iter()).map(|(a, b)| a + b).collect();
                if s == **beta && is_u_root(g1) && is_u_root(g2) {
                    decomposable += 1;
                    break 'outer;
                }
            }
        }
    }
    let dim_u_ab = dim_u - decomposable;
    DistinguishedCheck {
        dim_l,
        dim_u,
        dim_u_ab,
        is_distinguished: dim_l == dim_u_ab,
    }
}

/// Verify the bracket relations \[H,X\] = 2X, \[H,Y\] = −2Y, \[X,Y\] = H.
pub fn standard_triple_check(
    x: &Matrix<Rational>,
    y: &Matrix<Rational>,
    h: &Matrix<Rational>,
) -> bool {
    let comm = |a: &Matrix<Rational>, b: &Matrix<Rational>| a.mul(b).sub(&b.mul(a));
    let two = crate::scalar::rat(2, 1);
    comm(h, x) == x.scale(&two) && comm(h, y) == y.scale(&two).map(|v| v.neg()) && comm(x, y) == *h
}
