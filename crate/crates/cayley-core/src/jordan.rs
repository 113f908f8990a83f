//! The Albert algebra h₃(𝕆) and the Cayley plane.
//!
//! Elements are hermitian 3×3 octonionic matrices stored as three diagonal
//! scalars (ξ₁, ξ₂, ξ₃) and three octonions (x₁, x₂, x₃) placed cyclically:
//!
//! ```text
//! ⎡ ξ₁    x₃    x₂* ⎤
//! ⎢ x₃*   ξ₂    x₁  ⎥
//! ⎣ x₂    x₁*   ξ₃  ⎦
//! ```
//!
//! so the (1,2)-entry is x₃, the (2,3)-entry is x₁ and the (3,1)-entry is
//! x₂. Conjugate entries are derived, never stored; hermiticity holds by
//! construction.
//!
//! The Cayley plane is realized as the trace-one idempotents P (P∘P = P,
//! tr P = 1); the left multiplication L_P splits h₃(𝕆) into eigenspaces
//! with eigenvalues 0, ½, 1 of dimensions 10, 16, 1, and the ½-eigenspace
//! is the tangent space at P. The map [`chi`] identifies the Cayley plane
//! with the Grassmannian of 10-dimensional product-closed subspaces of the
//! traceless part h₃⁰(𝕆).

use crate::linalg::{kernel, solve_unique, LinalgError, Matrix, SpanBuilder, Subspace};
use crate::octonion::Octonion;
use crate::scalar::{complexify, gauss_i, rat, GaussRational, QAlgebra, Rational, Ring};
use once_cell::sync::Lazy;
use rand::Rng;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum JordanError {
    /// The chart formula produced a non-idempotent; unreachable for valid
    /// inputs because the two-generator subalgebra is associative.
    #[error("chart construction broken")]
    ChartBroken,
    #[error("not a Cayley point")]
    NotCayleyPoint,
    #[error("not a tangent vector")]
    NotTangent,
    #[error("not a Gr^a point: {0}")]
    NotGrassPoint(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Hermitian 3×3 octonionic matrix over the ring `R`.
#[derive(Clone, PartialEq)]
pub struct JordanElement<R: Ring> {
    pub diag: [R; 3],
    pub off: [Octonion<R>; 3],
}

impl<R: Ring> JordanElement<R> {
    pub fn zero() -> Self {
        JordanElement {
            diag: std::array::from_fn(|_| R::zero()),
            off: std::array::from_fn(|_| Octonion::zero()),
        }
    }

    pub fn identity() -> Self {
        JordanElement {
            diag: std::array::from_fn(|_| R::one()),
            off: std::array::from_fn(|_| Octonion::zero()),
        }
    }

    pub fn from_parts(diag: [R; 3], off: [Octonion<R>; 3]) -> Self {
        JordanElement { diag, off }
    }

    pub fn diagonal(d1: R, d2: R, d3: R) -> Self {
        JordanElement {
            diag: [d1, d2, d3],
            off: std::array::from_fn(|_| Octonion::zero()),
        }
    }

    /// The element with x_k = `x` and all other entries zero.
    pub fn off_diagonal(k: usize, x: Octonion<R>) -> Self {
        assert!(k < 3);
        let mut el = JordanElement::zero();
        el.off[k] = x;
        el
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(Ring::is_zero) && self.off.iter().all(Octonion::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        JordanElement {
            diag: std::array::from_fn(|i| self.diag[i].add(&rhs.diag[i])),
            off: std::array::from_fn(|i| self.off[i].add(&rhs.off[i])),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        JordanElement {
            diag: std::array::from_fn(|i| self.diag[i].sub(&rhs.diag[i])),
            off: std::array::from_fn(|i| self.off[i].sub(&rhs.off[i])),
        }
    }

    pub fn neg(&self) -> Self {
        JordanElement {
            diag: std::array::from_fn(|i| self.diag[i].neg()),
            off: std::array::from_fn(|i| self.off[i].neg()),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        JordanElement {
            diag: std::array::from_fn(|i| self.diag[i].mul(c)),
            off: std::array::from_fn(|i| self.off[i].scale(c)),
        }
    }

    pub fn trace(&self) -> R {
        self.diag[0].add(&self.diag[1]).add(&self.diag[2])
    }

    pub fn is_traceless(&self) -> bool {
        self.trace().is_zero()
    }

    /// Expand to the full 3×3 octonionic matrix.
    fn full_matrix(&self) -> [[Octonion<R>; 3]; 3] {
        let s = |k: usize| Octonion::one().scale(&self.diag[k]);
        [
            [s(0), self.off[2].clone(), self.off[1].conj()],
            [self.off[2].conj(), s(1), self.off[0].clone()],
            [self.off[1].clone(), self.off[0].conj(), s(2)],
        ]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> JordanElement<S> {
        JordanElement {
            diag: std::array::from_fn(|i| f(&self.diag[i])),
            off: std::array::from_fn(|i| {
                Octonion::from_coords(std::array::from_fn(|j| f(self.off[i].coord(j))))
            }),
        }
    }
}

impl<R: QAlgebra> JordanElement<R> {
    /// Jordan product a∘b = ½(ab + ba).
    pub fn circ(&self, rhs: &Self) -> Self {
        let a = self.full_matrix();
        let b = rhs.full_matrix();
        // symmetrized matrix product: entry (i,j) of ab + ba
        let mut sym: [[Octonion<R>; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| Octonion::zero()));
        for (i, sym_row) in sym.iter_mut().enumerate() {
            for (j, entry) in sym_row.iter_mut().enumerate() {
                let mut acc = Octonion::zero();
                for k in 0..3 {
                    acc = acc
                        .add(&a[i][k].mul(&b[k][j]))
                        .add(&b[i][k].mul(&a[k][j]));
                }
                *entry = acc;
            }
        }
        let half = R::from_fraction(1, 2);
        let diag = std::array::from_fn(|k| {
            debug_assert!(
                sym[k][k].coords()[1..].iter().all(Ring::is_zero),
                "diagonal of a symmetrized hermitian product is real"
            );
            sym[k][k].real_part().mul(&half)
        });
        let off = [sym[1][2].clone(), sym[2][0].clone(), sym[0][1].clone()]
            .map(|x| x.scale(&half));
        JordanElement { diag, off }
    }

    /// ⟨a, b⟩ = ½ tr(a∘b), the invariant inner product.
    pub fn inner(&self, rhs: &Self) -> R {
        self.circ(rhs).trace().mul(&R::from_fraction(1, 2))
    }

    /// Traceless part of a∘b.
    pub fn dot(&self, rhs: &Self) -> Self {
        let c = self.circ(rhs);
        let shift = c.trace().mul(&R::from_fraction(1, 3));
        JordanElement {
            diag: std::array::from_fn(|i| c.diag[i].sub(&shift)),
            off: c.off.clone(),
        }
    }
}

impl<R: Ring> fmt::Debug for JordanElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "diag({}, {}, {}) off(x1 = {}, x2 = {}, x3 = {})",
            self.diag[0], self.diag[1], self.diag[2], self.off[0], self.off[1], self.off[2]
        )
    }
}

// --- fixed bases -----------------------------------------------------------

/// Basis of h₃(𝕆): E₁, E₂, E₃ then F₁(e₀..e₇), F₂(e₀..e₇), F₃(e₀..e₇),
/// where F_k(x) has x_k = x and all other entries zero.
pub fn basis27<R: Ring>(idx: usize) -> JordanElement<R> {
    assert!(idx < 27);
    if idx < 3 {
        let mut el = JordanElement::zero();
        el.diag[idx] = R::one();
        el
    } else {
        let k = (idx - 3) / 8;
        let i = (idx - 3) % 8;
        JordanElement::off_diagonal(k, Octonion::basis(i))
    }
}

/// Basis of the traceless part h₃⁰(𝕆): D₁ = E₁−E₂, D₂ = E₂−E₃, then the
/// 24 off-diagonal elements in the same order as [`basis27`].
pub fn basis26<R: Ring>(idx: usize) -> JordanElement<R> {
    assert!(idx < 26);
    match idx {
        0 => JordanElement::diagonal(R::one(), R::one().neg(), R::zero()),
        1 => JordanElement::diagonal(R::zero(), R::one(), R::one().neg()),
        _ => basis27(idx + 1),
    }
}

pub fn to_vec27<R: Ring>(a: &JordanElement<R>) -> Vec<R> {
    let mut v = Vec::with_capacity(27);
    v.extend(a.diag.iter().cloned());
    for k in 0..3 {
        v.extend(a.off[k].coords().iter().cloned());
    }
    v
}

pub fn from_vec27<R: Ring>(v: &[R]) -> JordanElement<R> {
    assert_eq!(v.len(), 27);
    JordanElement {
        diag: [v[0].clone(), v[1].clone(), v[2].clone()],
        off: std::array::from_fn(|k| {
            Octonion::from_coords(std::array::from_fn(|i| v[3 + 8 * k + i].clone()))
        }),
    }
}

/// Coordinates in the traceless basis; requires `a` traceless.
pub fn to_vec26<R: Ring>(a: &JordanElement<R>) -> Vec<R> {
    debug_assert!(a.is_traceless());
    let mut v = Vec::with_capacity(26);
    v.push(a.diag[0].clone()); // coefficient of D₁
    v.push(a.diag[2].neg()); // coefficient of D₂
    for k in 0..3 {
        v.extend(a.off[k].coords().iter().cloned());
    }
    v
}

pub fn from_vec26<R: Ring>(v: &[R]) -> JordanElement<R> {
    assert_eq!(v.len(), 26);
    let d1 = v[0].clone();
    let d2 = v[1].clone();
    JordanElement {
        diag: [d1.clone(), d2.sub(&d1), d2.neg()],
        off: std::array::from_fn(|k| {
            Octonion::from_coords(std::array::from_fn(|i| v[2 + 8 * k + i].clone()))
        }),
    }
}

/// Gram matrix of ⟨·,·⟩ on the [`basis27`] basis.
pub fn gram27() -> &'static Matrix<Rational> {
    static GRAM: Lazy<Matrix<Rational>> = Lazy::new(|| {
        let basis: Vec<JordanElement<Rational>> = (0..27).map(basis27).collect();
        Matrix::from_fn(27, 27, |i, j| basis[i].inner(&basis[j]))
    });
    &GRAM
}

/// 27×27 matrix of left Jordan multiplication L_a on the [`basis27`] basis.
pub fn l_operator<R: QAlgebra>(a: &JordanElement<R>) -> Matrix<R> {
    let cols: Vec<Vec<R>> = (0..27).map(|j| to_vec27(&a.circ(&basis27(j)))).collect();
    Matrix::from_fn(27, 27, |i, j| cols[j][i].clone())
}

/// [L_a, L_b], computed columnwise through Jordan products.
pub fn l_commutator(a: &JordanElement<Rational>, b: &JordanElement<Rational>) -> Matrix<Rational> {
    let cols: Vec<Vec<Rational>> = (0..27)
        .map(|j| {
            let e = basis27::<Rational>(j);
            let v = a.circ(&b.circ(&e)).sub(&b.circ(&a.circ(&e)));
            to_vec27(&v)
        })
        .collect();
    Matrix::from_fn(27, 27, |i, j| cols[j][i].clone())
}

// --- the Cayley plane ------------------------------------------------------

/// A point of the Cayley plane: P∘P = P and tr P = 1, over ℚ.
#[derive(Clone, PartialEq, Debug)]
pub struct CayleyPoint {
    element: JordanElement<Rational>,
}

impl CayleyPoint {
    pub fn new(element: JordanElement<Rational>) -> Result<Self, JordanError> {
        if element.circ(&element) != element || element.trace() != rat(1, 1) {
            return Err(JordanError::NotCayleyPoint);
        }
        Ok(CayleyPoint { element })
    }

    pub fn element(&self) -> &JordanElement<Rational> {
        &self.element
    }

    pub fn base() -> Self {
        CayleyPoint {
            element: JordanElement::diagonal(rat(1, 1), rat(0, 1), rat(0, 1)),
        }
    }
}

/// Rational chart of the Cayley plane:
///
/// P = (1 + N(x) + N(y))⁻¹ ⎡ 1    x     y   ⎤
///                          ⎢ x*   x*x   x*y ⎥
///                          ⎣ y*  (x*y)* y*y ⎦
///
/// Idempotency is verified before returning; the two-generator subalgebra
/// of an alternative algebra is associative, so the check can only fail on
/// an implementation bug.
pub fn chart_point(
    x: &Octonion<Rational>,
    y: &Octonion<Rational>,
) -> Result<CayleyPoint, JordanError> {
    let s = rat(1, 1)
        .add(&x.norm())
        .add(&y.norm())
        .recip();
    let el = JordanElement {
        diag: [
            s.clone(),
            x.norm().mul(&s),
            y.norm().mul(&s),
        ],
        // (2,3) = x*y, (3,1) = y*, (1,2) = x
        off: [
            x.conj().mul(y).scale(&s),
            y.conj().scale(&s),
            x.scale(&s),
        ],
    };
    CayleyPoint::new(el).map_err(|_| JordanError::ChartBroken)
}

/// Sample a chart point with small-integer octonion coordinates.
pub fn sample_chart_point(rng: &mut impl Rng) -> CayleyPoint {
    let mut sample_oct = || {
        Octonion::<Rational>::from_coords(std::array::from_fn(|_| rat(rng.gen_range(-3..=3), 1)))
    };
    let x = sample_oct();
    let y = sample_oct();
    chart_point(&x, &y).expect("chart formula yields idempotents")
}

/// The L_P-eigenspaces for the eigenvalues 0, ½, 1, in that order.
pub type Eigenspaces = (Subspace<Rational>, Subspace<Rational>, Subspace<Rational>);

/// Eigenspace decomposition of L_P into the eigenvalues 0, ½, 1, as
/// subspaces of h₃(𝕆) in [`basis27`] coordinates. Dimensions are
/// (10, 16, 1) for every Cayley point.
pub fn eigenspace_decomposition(p: &CayleyPoint) -> Result<Eigenspaces, JordanError> {
    let l = l_operator(p.element());
    let id = Matrix::<Rational>::identity(27);
    let a0 = kernel(&l);
    let ahalf = kernel(&l.sub(&id.scale(&rat(1, 2))));
    let a1 = kernel(&l.sub(&id));
    if (a0.dim(), ahalf.dim(), a1.dim()) != (10, 16, 1) {
        return Err(JordanError::NotCayleyPoint);
    }
    Ok((a0, ahalf, a1))
}

/// Tangent-space membership: Z ∈ A_½(P), i.e. 2 P∘Z = Z.
pub fn is_tangent<R: QAlgebra>(p: &JordanElement<R>, z: &JordanElement<R>) -> bool {
    let two = R::one().add(&R::one());
    p.circ(z).scale(&two) == *z
}

/// The tangent element with block structure [[0, x, y], [x*, 0, 0], [y*, 0, 0]]
/// at the base point diag(1,0,0).
pub fn tangent_from_xy<R: Ring>(x: &Octonion<R>, y: &Octonion<R>) -> JordanElement<R> {
    JordanElement {
        diag: std::array::from_fn(|_| R::zero()),
        off: [Octonion::zero(), y.conj(), x.clone()],
    }
}

/// Isotropic tangent vector at the base point built from the pair
/// (x, y = i·x); then tr(Z∘Z) = x x* + y y* = 0 automatically.
pub fn isotropic_tangent(x: &Octonion<GaussRational>) -> JordanElement<GaussRational> {
    let y = x.scale(&gauss_i());
    let z = tangent_from_xy(x, &y);
    debug_assert!(z.circ(&z).trace().is_zero());
    z
}

/// The operator Ẑ(X) = −4 Z∘X + 4 Z∘(P∘X) + 4 P∘(Z∘X) on the complexified
/// traceless space, as a 26×26 matrix in [`basis26`] coordinates.
///
/// In a basis adapted to χ(P) ⊕ A_½(P) the matrix is block-antidiagonal:
/// it exchanges the two summands.
pub fn hat_operator(
    p: &CayleyPoint,
    z: &JordanElement<GaussRational>,
) -> Result<Matrix<GaussRational>, JordanError> {
    let pc = p.element().map(complexify);
    if !is_tangent(&pc, z) {
        return Err(JordanError::NotTangent);
    }
    let four: GaussRational = Ring::from_i64(4);
    let cols: Vec<Vec<GaussRational>> = (0..26)
        .map(|j| {
            let x = basis26::<GaussRational>(j);
            let t1 = z.circ(&x).neg();
            let t2 = z.circ(&pc.circ(&x));
            let t3 = pc.circ(&z.circ(&x));
            let out = t1.add(&t2).add(&t3).scale(&four);
            to_vec26(&out)
        })
        .collect();
    Ok(Matrix::from_fn(26, 26, |i, j| cols[j][i].clone()))
}

/// Orthogonal projection of h₃⁰(𝕆) onto χ(P):
/// X ↦ X − 4 P∘X + 4 P∘(P∘X), in [`basis26`] coordinates.
pub fn ortho_projector(p: &CayleyPoint) -> Matrix<Rational> {
    let four = rat(4, 1);
    let cols: Vec<Vec<Rational>> = (0..26)
        .map(|j| {
            let x = basis26::<Rational>(j);
            let px = p.element().circ(&x);
            let ppx = p.element().circ(&px);
            let out = x.sub(&px.scale(&four)).add(&ppx.scale(&four));
            to_vec26(&out)
        })
        .collect();
    Matrix::from_fn(26, 26, |i, j| cols[j][i].clone())
}

// --- the Grassmannian model ------------------------------------------------

/// A point of the Grassmannian Gr^a: a 10-dimensional subspace V of
/// h₃⁰(𝕆) (in [`basis26`] coordinates) with V·V = V.
#[derive(Clone, PartialEq, Debug)]
pub struct GrassPoint {
    subspace: Subspace<Rational>,
}

impl GrassPoint {
    pub fn new(subspace: Subspace<Rational>) -> Result<Self, JordanError> {
        if subspace.ambient_dim() != 26 {
            return Err(JordanError::NotGrassPoint("ambient dimension".into()));
        }
        if subspace.dim() != 10 {
            return Err(JordanError::NotGrassPoint(format!(
                "dimension {} != 10",
                subspace.dim()
            )));
        }
        if product_span(&subspace) != subspace {
            return Err(JordanError::NotGrassPoint("V·V != V".into()));
        }
        Ok(GrassPoint { subspace })
    }

    pub fn subspace(&self) -> &Subspace<Rational> {
        &self.subspace
    }
}

/// Span of all pairwise traceless products of basis elements of `s`.
pub fn product_span(s: &Subspace<Rational>) -> Subspace<Rational> {
    let elems: Vec<JordanElement<Rational>> = s.basis().iter().map(|v| from_vec26(v)).collect();
    let mut span = SpanBuilder::new(26);
    for i in 0..elems.len() {
        for j in i..elems.len() {
            span.insert(to_vec26(&elems[i].dot(&elems[j])));
        }
    }
    span.into_subspace()
}

/// χ: Cayley plane → Gr^a, via the maximal subalgebra A₀(P) ⊕ A₁(P)
/// intersected with the traceless space.
pub fn chi(p: &CayleyPoint) -> Result<GrassPoint, JordanError> {
    let (a0, _ahalf, a1) = eigenspace_decomposition(p)?;
    let hat_v = a0.sum(&a1)?;
    // (ℝI)^⊥ inside h₃ is exactly the traceless subspace
    let trace_row = Matrix::from_fn(1, 27, |_i, j| {
        if j < 3 {
            rat(1, 1)
        } else {
            rat(0, 1)
        }
    });
    let traceless = kernel(&trace_row);
    let v27 = hat_v.intersect(&traceless)?;
    let basis26_vecs: Vec<Vec<Rational>> = v27
        .basis()
        .iter()
        .map(|v| to_vec26(&from_vec27(v)))
        .collect();
    GrassPoint::new(Subspace::from_spanning(26, basis26_vecs))
}

/// χ⁻¹: recover P from V by solving the linear system
/// { 2 X∘w = w for all w ⊥ (ℝI ⊕ V), tr X = 1 } and verifying X∘X = X.
pub fn chi_inv(v: &GrassPoint) -> Result<CayleyPoint, JordanError> {
    // lift V to 27 coordinates and adjoin the identity
    let mut vecs: Vec<Vec<Rational>> = v
        .subspace()
        .basis()
        .iter()
        .map(|b| to_vec27(&from_vec26(b)))
        .collect();
    vecs.push(to_vec27(&JordanElement::identity()));
    let ri_plus_v = Subspace::from_spanning(27, vecs);
    let complement = ri_plus_v.perp_bilinear(gram27())?;
    if complement.dim() != 16 {
        return Err(JordanError::NotGrassPoint(format!(
            "complement of RI ⊕ V has dimension {} != 16",
            complement.dim()
        )));
    }
    // unknowns: X in basis27 coordinates; rows: 2 L_w X = w, plus tr X = 1
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(16 * 27 + 1);
    let mut rhs: Vec<Rational> = Vec::with_capacity(16 * 27 + 1);
    for wv in complement.basis() {
        let w = from_vec27(wv);
        let lw = l_operator(&w); // X∘w = L_w X by commutativity
        for (i, wi) in wv.iter().enumerate() {
            let row: Vec<Rational> = (0..27).map(|j| lw.get(i, j).mul(&rat(2, 1))).collect();
            rows.push(row);
            rhs.push(wi.clone());
        }
    }
    let mut trace_row = vec![rat(0, 1); 27];
    for item in trace_row.iter_mut().take(3) {
        *item = rat(1, 1);
    }
    rows.push(trace_row);
    rhs.push(rat(1, 1));
    let a = Matrix::from_rows(rows);
    let x = solve_unique(&a, &rhs)
        .map_err(|e| JordanError::NotGrassPoint(format!("linear system: {e}")))?;
    let el = from_vec27(&x);
    CayleyPoint::new(el).map_err(|_| JordanError::NotGrassPoint("idempotency failed".into()))
}

// --- derivations -----------------------------------------------------------

/// Dimension of the span of all commutators [L_a, L_b] over the traceless
/// basis (325 operators on h₃(𝕆), flattened to 729 coordinates).
///
/// This span is the derivation algebra of h₃(𝕆), the Lie algebra of F₄;
/// its dimension is the classical dim F₄ = 52.
pub fn derivation_dimension() -> usize {
    let basis: Vec<JordanElement<Rational>> = (0..26).map(basis26).collect();
    let mut span = SpanBuilder::new(729);
    for i in 0..26 {
        for j in (i + 1)..26 {
            let d = l_commutator(&basis[i], &basis[j]);
            let mut flat = Vec::with_capacity(729);
            for r in 0..27 {
                flat.extend(d.row(r).iter().cloned());
            }
            span.insert(flat);
        }
    }
    span.dim()
}

/// Apply a 27×27 operator to a Jordan element.
pub fn apply_op(op: &Matrix<Rational>, a: &JordanElement<Rational>) -> JordanElement<Rational> {
    from_vec27(&op.apply(&to_vec27(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::nilorder;
    use crate::octonion::{complexify_oct, sample_gauss_octonion};
    use crate::scalar::gauss;
    use rand::SeedableRng;

    type OctQ = Octonion<Rational>;

    fn p0() -> CayleyPoint {
        CayleyPoint::base()
    }

    #[test]
    fn identity_products() {
        let i = JordanElement::<Rational>::identity();
        assert_eq!(i.circ(&i), i);
        assert_eq!(i.inner(&i), rat(3, 2));
    }

    #[test]
    fn base_point_inner() {
        let p = p0();
        assert_eq!(p.element().inner(p.element()), rat(1, 2));
    }

    #[test]
    fn circ_is_commutative() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            assert_eq!(a.circ(&b), b.circ(&a));
            assert_eq!(a.inner(&b), b.inner(&a));
        }
    }

    fn random_element(rng: &mut impl Rng) -> JordanElement<Rational> {
        fn oct(rng: &mut impl Rng) -> OctQ {
            OctQ::from_coords(std::array::from_fn(|_| rat(rng.gen_range(-2..=2), 1)))
        }
        let diag = [
            rat(rng.gen_range(-2..=2), 1),
            rat(rng.gen_range(-2..=2), 1),
            rat(rng.gen_range(-2..=2), 1),
        ];
        JordanElement {
            diag,
            off: [oct(rng), oct(rng), oct(rng)],
        }
    }

    #[test]
    fn chart_point_trivial_cases() {
        let zero = OctQ::zero();
        let p = chart_point(&zero, &zero).unwrap();
        assert_eq!(p, p0());

        // chart_point(e0, 0) = ½·[[1,1,0],[1,1,0],[0,0,0]]
        let p = chart_point(&OctQ::one(), &zero).unwrap();
        let expected = JordanElement {
            diag: [rat(1, 2), rat(1, 2), rat(0, 1)],
            off: [
                OctQ::zero(),
                OctQ::zero(),
                OctQ::one().scale(&rat(1, 2)),
            ],
        };
        assert_eq!(p.element(), &expected);
    }

    #[test]
    fn chart_point_nontrivial_is_idempotent() {
        let p = chart_point(&OctQ::basis(1), &OctQ::basis(2)).unwrap();
        assert_eq!(p.element().trace(), rat(1, 1));
        assert_eq!(p.element().circ(p.element()), *p.element());
    }

    #[test]
    fn eigenspaces_at_base_point_match_display() {
        let (a0, ahalf, a1) = eigenspace_decomposition(&p0()).unwrap();
        // A₀ = {β, γ in the (2,2)/(3,3) slots, z in the (2,3) slot}
        let a0_expected = Subspace::from_spanning(
            27,
            (0..10)
                .map(|t| {
                    let idx = if t == 0 {
                        1 // E₂
                    } else if t == 1 {
                        2 // E₃
                    } else {
                        3 + (t - 2) // F₁(e₀..e₇) block starts at 3
                    };
                    to_vec27(&basis27::<Rational>(idx))
                })
                .collect(),
        );
        assert_eq!(a0, a0_expected);
        // A_½ = {x in the (1,2) slot, y in the (1,3) slot}
        let ahalf_expected = Subspace::from_spanning(
            27,
            (0..16)
                .map(|t| {
                    let idx = 3 + 8 + t; // F₂ then F₃ blocks
                    to_vec27(&basis27::<Rational>(idx))
                })
                .collect(),
        );
        assert_eq!(ahalf, ahalf_expected);
        assert_eq!(a1.dim(), 1);
        assert!(a1.contains(&to_vec27(p0().element())));
    }

    #[test]
    fn eigenspace_dims_and_orthogonality_for_random_points() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let p = sample_chart_point(&mut rng);
            let (a0, ahalf, a1) = eigenspace_decomposition(&p).unwrap();
            assert_eq!((a0.dim(), ahalf.dim(), a1.dim()), (10, 16, 1));
            for u in a0.basis() {
                let eu = from_vec27(u);
                for v in ahalf.basis() {
                    assert!(eu.inner(&from_vec27(v)).is_zero());
                }
                for v in a1.basis() {
                    assert!(eu.inner(&from_vec27(v)).is_zero());
                }
            }
            // A_½ is the tangent space: 2 P∘Z = Z
            for v in ahalf.basis() {
                assert!(is_tangent(p.element(), &from_vec27(v)));
            }
        }
    }

    // products of tangent vectors land back in A₀ ⊕ A₁
    #[test]
    fn tangent_products_avoid_the_half_eigenspace() {
        let (a0, ahalf, a1) = eigenspace_decomposition(&p0()).unwrap();
        let a01 = a0.sum(&a1).unwrap();
        for u in ahalf.basis() {
            for v in ahalf.basis() {
                let prod = from_vec27(u).circ(&from_vec27(v));
                assert!(a01.contains(&to_vec27(&prod)));
            }
        }
    }

    #[test]
    fn isotropic_tangent_cases() {
        assert!(isotropic_tangent(&Octonion::zero()).is_zero());

        // x = e0: x x* + y y* = 1 + i² = 0
        let z = isotropic_tangent(&Octonion::one());
        assert!(z.circ(&z).trace().is_zero());
        assert!(!z.is_zero());

        // x = e1 + 2 e3
        let x = Octonion::<GaussRational>::basis(1)
            .add(&Octonion::basis(3).scale(&gauss(2, 0)));
        let z = isotropic_tangent(&x);
        assert!(z.circ(&z).trace().is_zero());
    }

    #[test]
    fn hat_operator_rejects_non_tangent() {
        let z = JordanElement::<GaussRational>::identity();
        assert_eq!(hat_operator(&p0(), &z), Err(JordanError::NotTangent));
    }

    #[test]
    fn hat_of_zero_is_zero() {
        let z = JordanElement::<GaussRational>::zero();
        assert!(hat_operator(&p0(), &z).unwrap().is_zero());
    }

    #[test]
    fn hat_exchanges_grassmannian_point_and_tangent_space() {
        // real (non-isotropic) tangent vector x = e0, y = 0
        let z = tangent_from_xy(&Octonion::<GaussRational>::one(), &Octonion::zero());
        let hat = hat_operator(&p0(), &z).unwrap();
        let v = chi(&p0()).unwrap();
        let vc = Subspace::from_spanning(
            26,
            v.subspace()
                .basis()
                .iter()
                .map(|b| b.iter().map(complexify).collect())
                .collect(),
        );
        let (_a0, ahalf, _a1) = eigenspace_decomposition(&p0()).unwrap();
        let tc = Subspace::from_spanning(
            26,
            ahalf
                .basis()
                .iter()
                .map(|b| to_vec26(&from_vec27(b)).iter().map(complexify).collect())
                .collect(),
        );
        for b in vc.basis() {
            assert!(tc.contains(&hat.apply(b)));
        }
        for b in tc.basis() {
            assert!(vc.contains(&hat.apply(b)));
        }
    }

    #[test]
    fn hat_of_isotropic_tangent_is_nilpotent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..5 {
            let x = sample_gauss_octonion(&mut rng);
            let z = isotropic_tangent(&x);
            let hat = hat_operator(&p0(), &z).unwrap();
            assert!(hat.pow(5).is_zero());
            let ord = nilorder(&hat, 27).expect("nilpotent");
            assert!(ord <= 5, "nilorder {ord} > 5");
        }
    }

    // L_Z⁴ kills the tangent element with a single off-diagonal unit entry
    #[test]
    fn l_z_fourth_power_kills_unit_tangent() {
        let x0 = JordanElement::<GaussRational>::off_diagonal(2, Octonion::one());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..10 {
            let z = isotropic_tangent(&sample_gauss_octonion(&mut rng));
            let mut acc = x0.clone();
            for _ in 0..4 {
                acc = z.circ(&acc);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn nilorder_of_zero_operator() {
        let z = Matrix::<Rational>::zero(4, 4);
        assert_eq!(nilorder(&z, 27), Some(1));
    }

    // χ(P₀) is the traceless part of A₀(P₀) ⊕ ℝP₀: all traceless
    // diagonals plus the full (2,3) off-diagonal block
    #[test]
    fn chi_at_base_point() {
        let v = chi(&p0()).unwrap();
        assert_eq!(v.subspace().dim(), 10);
        let mut expected: Vec<Vec<Rational>> = (0..8)
            .map(|t| to_vec26(&basis26::<Rational>(2 + t)))
            .collect();
        expected.push(to_vec26(&basis26::<Rational>(0))); // diag(1,-1,0)
        expected.push(to_vec26(&basis26::<Rational>(1))); // diag(0,1,-1)
        assert_eq!(
            *v.subspace(),
            Subspace::from_spanning(26, expected)
        );
    }

    #[test]
    fn chi_round_trip() {
        let p = chart_point(&OctQ::one(), &OctQ::zero()).unwrap();
        let v = chi(&p).unwrap();
        assert_eq!(chi_inv(&v).unwrap(), p);

        let p = chart_point(&OctQ::basis(1), &OctQ::basis(2)).unwrap();
        let v = chi(&p).unwrap();
        assert_eq!(chi_inv(&v).unwrap(), p);
    }

    #[test]
    fn chi_closure_for_random_points() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..3 {
            let p = sample_chart_point(&mut rng);
            let v = chi(&p).unwrap();
            assert_eq!(product_span(v.subspace()), *v.subspace());
            assert_eq!(chi_inv(&v).unwrap(), p);
        }
    }

    #[test]
    fn ortho_projector_is_idempotent_and_fixes_chi() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for _ in 0..10 {
            let p = sample_chart_point(&mut rng);
            let proj = ortho_projector(&p);
            assert_eq!(proj.mul(&proj), proj);
            let v = chi(&p).unwrap();
            for b in v.subspace().basis() {
                assert_eq!(proj.apply(b), *b);
            }
        }
    }

    #[test]
    fn single_commutator_is_nonzero() {
        let d = l_commutator(&basis26(0), &basis26(2 + 16)); // [L_{E₁−E₂}, L_{F₃(e₀)}]
        assert!(!d.is_zero());
        assert!(crate::linalg::rank(&d) >= 1);
    }

    #[test]
    fn commutators_are_derivations_and_skew() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let d = l_commutator(&basis26(0), &basis26(5));
        for _ in 0..20 {
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let da = apply_op(&d, &a);
            let db = apply_op(&d, &b);
            // Leibniz rule
            assert_eq!(apply_op(&d, &a.circ(&b)), da.circ(&b).add(&a.circ(&db)));
            // skew-symmetry for the trace form
            assert!(da.inner(&b).add(&a.inner(&db)).is_zero());
        }
    }

    #[test]
    fn complexified_tangent_check() {
        // complexified chart tangent: x = e0 over Q(i) at P0 is tangent
        let z = tangent_from_xy(
            &complexify_oct(&OctQ::one()),
            &complexify_oct(&OctQ::zero()),
        );
        let pc = p0().element().map(complexify);
        assert!(is_tangent(&pc, &z));
    }
}
