//! Exact dense linear algebra over the scalar rings.
//!
//! Elimination is fraction-free (one-step Bareiss) with leftmost-nonzero
//! pivoting: pivots are chosen as the first unused row with a nonzero entry
//! in the leftmost remaining column, so every echelon form, rank, kernel and
//! image computed here is reproducible bit for bit. Over a field the echelon
//! form is normalized to reduced row-echelon form, which makes equality of
//! subspaces a literal comparison of bases.

use crate::scalar::{Conj, ExactDiv, Field, Ring};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("degenerate form")]
    DegenerateForm,
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("linear system with non-unique solution")]
    NonUnique,
}

/// Dense matrix with entries in an exact ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out: Matrix<R> = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn pow(&self, k: usize) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{}", x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free row echelon form in place over an integral domain.
///
/// Returns the pivot columns. Rows below the last pivot are zero on exit.
pub fn bareiss_echelon<R: ExactDiv>(m: &mut Matrix<R>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = R::one();
    let mut pr = 0; // next pivot row
    for pc in 0..m.cols {
        // leftmost-nonzero pivoting: first unused row with a nonzero entry
        let Some(found) = (pr..m.rows).find(|&i| !m.get(i, pc).is_zero()) else {
            continue;
        };
        if found != pr {
            for j in 0..m.cols {
                let a = m.get(pr, j).clone();
                let b = m.get(found, j).clone();
                m.set(pr, j, b);
                m.set(found, j, a);
            }
        }
        let pivot = m.get(pr, pc).clone();
        for i in (pr + 1)..m.rows {
            let head = m.get(i, pc).clone();
            for j in 0..m.cols {
                let v = if j <= pc {
                    R::zero()
                } else {
                    // one-step Bareiss update: exact division by the
                    // previous pivot is guaranteed over an integral domain
                    let t = pivot.mul(m.get(i, j)).sub(&head.mul(m.get(pr, j)));
                    t.exact_div(&prev).expect("Bareiss divisibility")
                };
                m.set(i, j, v);
            }
        }
        prev = pivot;
        pivots.push(pc);
        pr += 1;
        if pr == m.rows {
            break;
        }
    }
    pivots
}

/// Rank over any integral domain (in particular the polynomial ring).
pub fn rank<R: ExactDiv>(m: &Matrix<R>) -> usize {
    let mut w = m.clone();
    bareiss_echelon(&mut w).len()
}

/// Reduced row echelon form over a field. Returns pivot columns.
pub fn rref<K: Field>(m: &mut Matrix<K>) -> Vec<usize> {
    let pivots = bareiss_echelon(m);
    for (r, &pc) in pivots.iter().enumerate() {
        let inv = m.get(r, pc).inv().expect("pivot invertible");
        for j in pc..m.cols {
            let v = m.get(r, j).mul(&inv);
            m.set(r, j, v);
        }
    }
    // eliminate above pivots, bottom-up
    for (r, &pc) in pivots.iter().enumerate().rev() {
        for i in 0..r {
            let factor = m.get(i, pc).clone();
            if factor.is_zero() {
                continue;
            }
            for j in pc..m.cols {
                let v = m.get(i, j).sub(&factor.mul(m.get(r, j)));
                m.set(i, j, v);
            }
        }
    }
    pivots
}

/// A subspace of `K^ambient`, stored as a reduced row-echelon basis.
///
/// Two `Subspace` values are equal as subspaces if and only if they are
/// equal as values.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<K: Field> {
    ambient: usize,
    basis: Vec<Vec<K>>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_spanning(ambient, Matrix::<K>::identity(ambient).row_vecs())
    }

    /// Span of the given vectors, echelonized to the canonical basis.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<K>>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        let mut b = SpanBuilder::new(ambient);
        for v in vectors {
            b.insert(v);
        }
        b.into_subspace()
    }

    pub fn line(v: Vec<K>) -> Self {
        let ambient = v.len();
        Subspace::from_spanning(ambient, vec![v])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<K>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix<K> {
        Matrix::from_rows(self.basis.clone())
    }

    pub fn contains(&self, v: &[K]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for row in &self.basis {
            let pc = row.iter().position(|x| !x.is_zero()).unwrap();
            let c = w[pc].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                w[j] = w[j].sub(&c.mul(&row[j]));
            }
        }
        w.iter().all(Ring::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace<K>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<K>) -> Result<Subspace<K>, LinalgError> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Ok(Subspace::from_spanning(self.ambient, vs))
    }

    /// Zassenhaus: echelonize `[S|S ; T|0]`; rows whose left half vanishes
    /// carry an intersection basis in the right half.
    pub fn intersect(&self, other: &Subspace<K>) -> Result<Subspace<K>, LinalgError> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut r = v.clone();
            r.extend(v.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat_with(K::zero).take(n));
            rows.push(r);
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(n));
        }
        let mut m = Matrix::from_rows(rows);
        let _ = rref(&mut m);
        let mut inter = Vec::new();
        for i in 0..m.rows() {
            let left_zero = (0..n).all(|j| m.get(i, j).is_zero());
            let right = (n..2 * n).map(|j| m.get(i, j).clone()).collect::<Vec<_>>();
            if left_zero && right.iter().any(|x| !x.is_zero()) {
                inter.push(right);
            }
        }
        Ok(Subspace::from_spanning(n, inter))
    }

    /// Orthogonal complement with respect to a bilinear form with Gram
    /// matrix `g`.
    pub fn perp_bilinear(&self, g: &Matrix<K>) -> Result<Subspace<K>, LinalgError> {
        self.check_form(g)?;
        if self.dim() == 0 {
            return Ok(Subspace::full(self.ambient));
        }
        let eqs = self.basis_matrix().mul(g);
        Ok(kernel(&eqs))
    }

    fn check_ambient(&self, other: &Subspace<K>) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    fn check_form(&self, g: &Matrix<K>) -> Result<(), LinalgError> {
        if g.rows() != self.ambient || g.cols() != self.ambient {
            return Err(LinalgError::DimMismatch(format!(
                "form is {}x{}, ambient {}",
                g.rows(),
                g.cols(),
                self.ambient
            )));
        }
        if rank(g) < self.ambient {
            return Err(LinalgError::DegenerateForm);
        }
        Ok(())
    }
}

impl<K: Field + Conj> Subspace<K> {
    /// Image of the subspace under coefficientwise conjugation.
    pub fn conj(&self) -> Subspace<K> {
        // conjugation of an RREF basis is again an RREF basis
        Subspace {
            ambient: self.ambient,
            basis: self
                .basis
                .iter()
                .map(|v| v.iter().map(Conj::conj).collect())
                .collect(),
        }
    }

    /// Orthogonal complement for the hermitian form `⟨x, y⟩ = xᵀ·g·ȳ`.
    pub fn perp_hermitian(&self, g: &Matrix<K>) -> Result<Subspace<K>, LinalgError> {
        self.check_form(g)?;
        if self.dim() == 0 {
            return Ok(Subspace::full(self.ambient));
        }
        let eqs = Matrix::from_rows(
            self.basis
                .iter()
                .map(|v| v.iter().map(Conj::conj).collect())
                .collect(),
        )
        .mul(g);
        Ok(kernel(&eqs))
    }
}

/// Kernel of a matrix acting on column vectors, as a canonical subspace of
/// the domain.
pub fn kernel<K: Field>(m: &Matrix<K>) -> Subspace<K> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fj in &free {
        let mut v = vec![K::zero(); n];
        v[fj] = K::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = w.get(r, fj).neg();
        }
        basis.push(v);
    }
    Subspace::from_spanning(n, basis)
}

/// Column space of a matrix, as a canonical subspace of the codomain.
pub fn image<K: Field>(m: &Matrix<K>) -> Subspace<K> {
    Subspace::from_spanning(m.rows(), m.transpose().row_vecs())
}

/// Kernel and image together; `dim ker + dim im = cols` always holds.
pub fn kernel_image<K: Field>(m: &Matrix<K>) -> (Subspace<K>, Subspace<K>) {
    (kernel(m), image(m))
}

/// Least r ≤ cap with `m^r = 0`, or `None` if no power up to `cap`
/// vanishes. Any nilpotent operator on an n-dimensional space has
/// nilorder at most n, so `cap = ambient dimension` is always safe.
pub fn nilorder<R: Ring>(m: &Matrix<R>, cap: usize) -> Option<usize> {
    assert!(cap >= 1);
    assert_eq!(m.rows(), m.cols());
    let mut acc = m.clone();
    for r in 1..=cap {
        if acc.is_zero() {
            return Some(r);
        }
        if r < cap {
            acc = acc.mul(m);
        }
    }
    None
}

/// Solve `A·x = b` insisting on a unique solution.
pub fn solve_unique<K: Field>(a: &Matrix<K>, b: &[K]) -> Result<Vec<K>, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimMismatch(format!(
            "{} rows vs {} rhs entries",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut aug = Matrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return Err(LinalgError::Inconsistent);
    }
    if pivots.len() < n {
        return Err(LinalgError::NonUnique);
    }
    let mut x = vec![K::zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(r, n).clone();
    }
    Ok(x)
}

/// Incremental reduced-echelon accumulator: feed vectors one at a time and
/// read off the span. Cheaper than re-echelonizing when ranks are small
/// relative to the number of spanning vectors.
pub struct SpanBuilder<K: Field> {
    ambient: usize,
    rows: Vec<Vec<K>>, // RREF at all times, sorted by pivot column
}

impl<K: Field> SpanBuilder<K> {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder {
            ambient,
            rows: vec![],
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Insert a vector; returns `true` if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<K>) -> bool {
        assert_eq!(v.len(), self.ambient);
        for row in &self.rows {
            let pc = row.iter().position(|x| !x.is_zero()).unwrap();
            let c = v[pc].clone();
            if c.is_zero() {
                continue;
            }
            for j in pc..self.ambient {
                v[j] = v[j].sub(&c.mul(&row[j]));
            }
        }
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pc].inv().expect("nonzero leading entry");
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
        // back-reduce existing rows against the new pivot
        for row in self.rows.iter_mut() {
            let c = row[pc].clone();
            if c.is_zero() {
                continue;
            }
            for j in pc..self.ambient {
                row[j] = row[j].sub(&c.mul(&v[j]));
            }
        }
        let at = self
            .rows
            .iter()
            .position(|row| row.iter().position(|x| !x.is_zero()).unwrap() > pc)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[K]) -> bool {
        let mut w = v.to_vec();
        for row in &self.rows {
            let pc = row.iter().position(|x| !x.is_zero()).unwrap();
            let c = w[pc].clone();
            if c.is_zero() {
                continue;
            }
            for j in pc..self.ambient {
                w[j] = w[j].sub(&c.mul(&row[j]));
            }
        }
        w.iter().all(Ring::is_zero)
    }

    pub fn into_subspace(self) -> Subspace<K> {
        Subspace {
            ambient: self.ambient,
            basis: self.rows,
        }
    }
}
