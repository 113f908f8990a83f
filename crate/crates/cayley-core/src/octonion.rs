//! The octonion algebra 𝕆 over an exact coefficient ring.
//!
//! The basis multiplication table is generated by Cayley–Dickson doubling
//! from the quaternions with the convention
//!
//! ```text
//! (a, b)·(c, d) = (a·c − d*·b,  d·a + b·c*)
//! ```
//!
//! Any fixed doubling convention yields an alternative, nicely normed
//! *-algebra; this one is pinned so the e_i table is reproducible bit for
//! bit. The six defining identities are machine-checked by
//! [`identity_suite`], not assumed.

use crate::scalar::{GaussRational, Rational, Ring};
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::fmt;

/// Signed basis multiplication table: `e_i·e_j = sign[i][j]·e_{idx[i][j]}`.
#[derive(Clone, PartialEq, Eq)]
pub struct MulTable {
    pub sign: [[i8; 8]; 8],
    pub idx: [[usize; 8]; 8],
}

/// Basis product in the 2^k-dimensional Cayley–Dickson algebra.
fn cd_entry(dim: usize, i: usize, j: usize) -> (usize, i8) {
    if dim == 1 {
        return (0, 1);
    }
    let h = dim / 2;
    match (i < h, j < h) {
        // (a,0)(c,0) = (ac, 0)
        (true, true) => cd_entry(h, i, j),
        // (a,0)(0,d) = (0, d·a)
        (true, false) => {
            let (k, s) = cd_entry(h, j - h, i);
            (k + h, s)
        }
        // (0,b)(c,0) = (0, b·c*)
        (false, true) => {
            let conj_sign = if j == 0 { 1 } else { -1 };
            let (k, s) = cd_entry(h, i - h, j);
            (k + h, conj_sign * s)
        }
        // (0,b)(0,d) = (−d*·b, 0)
        (false, false) => {
            let conj_sign = if j - h == 0 { 1 } else { -1 };
            let (k, s) = cd_entry(h, j - h, i - h);
            (k, -conj_sign * s)
        }
    }
}

impl MulTable {
    fn build() -> MulTable {
        let mut sign = [[0i8; 8]; 8];
        let mut idx = [[0usize; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let (k, s) = cd_entry(8, i, j);
                idx[i][j] = k;
                sign[i][j] = s;
            }
        }
        MulTable { sign, idx }
    }

    pub fn canonical() -> &'static MulTable {
        static TABLE: Lazy<MulTable> = Lazy::new(MulTable::build);
        &TABLE
    }

    /// The 8×8 basis table as CSV, entries `e3` / `-e3`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(",e0,e1,e2,e3,e4,e5,e6,e7\n");
        for i in 0..8 {
            out.push_str(&format!("e{}", i));
            for j in 0..8 {
                let s = if self.sign[i][j] < 0 { "-" } else { "" };
                out.push_str(&format!(",{}e{}", s, self.idx[i][j]));
            }
            out.push('\n');
        }
        out
    }
}

/// An octonion with coordinates over the ring `R` on the basis e₀..e₇,
/// e₀ the unit. Mixed coefficient rings are unrepresentable: both factors
/// of a product carry the same `R`.
#[derive(Clone, PartialEq)]
pub struct Octonion<R: Ring> {
    coords: [R; 8],
}

impl<R: Ring> Octonion<R> {
    pub fn zero() -> Self {
        Octonion {
            coords: std::array::from_fn(|_| R::zero()),
        }
    }

    pub fn one() -> Self {
        Octonion::basis(0)
    }

    pub fn basis(k: usize) -> Self {
        assert!(k < 8);
        Octonion {
            coords: std::array::from_fn(|i| if i == k { R::one() } else { R::zero() }),
        }
    }

    pub fn from_coords(coords: [R; 8]) -> Self {
        Octonion { coords }
    }

    pub fn coords(&self) -> &[R; 8] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &R {
        &self.coords[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Ring::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Octonion {
            coords: std::array::from_fn(|i| self.coords[i].add(&rhs.coords[i])),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Octonion {
            coords: std::array::from_fn(|i| self.coords[i].sub(&rhs.coords[i])),
        }
    }

    pub fn neg(&self) -> Self {
        Octonion {
            coords: std::array::from_fn(|i| self.coords[i].neg()),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Octonion {
            coords: std::array::from_fn(|i| self.coords[i].mul(c)),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.mul_with(MulTable::canonical(), rhs)
    }

    /// Product against an explicit table; lets tests run the identity
    /// suite on deliberately corrupted tables.
    pub fn mul_with(&self, table: &MulTable, rhs: &Self) -> Self {
        let mut coords: [R; 8] = std::array::from_fn(|_| R::zero());
        for i in 0..8 {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.coords[j].is_zero() {
                    continue;
                }
                let k = table.idx[i][j];
                let term = self.coords[i].mul(&rhs.coords[j]);
                coords[k] = if table.sign[i][j] > 0 {
                    coords[k].add(&term)
                } else {
                    coords[k].sub(&term)
                };
            }
        }
        Octonion { coords }
    }

    /// Octonionic conjugation: fixes e₀, negates e₁..e₇.
    pub fn conj(&self) -> Self {
        Octonion {
            coords: std::array::from_fn(|i| {
                if i == 0 {
                    self.coords[0].clone()
                } else {
                    self.coords[i].neg()
                }
            }),
        }
    }

    /// The norm form N(x) = Σ xₖ², so that x·x* = N(x)·e₀.
    ///
    /// On complexified coordinates this is the bilinear extension of the
    /// real norm, hence can vanish on nonzero (isotropic) octonions.
    pub fn norm(&self) -> R {
        let mut n = R::zero();
        for c in &self.coords {
            n = n.add(&c.mul(c));
        }
        n
    }

    /// Coefficient of e₀.
    pub fn real_part(&self) -> R {
        self.coords[0].clone()
    }

    /// The associator (ab)c − a(bc).
    pub fn associator(a: &Self, b: &Self, c: &Self) -> Self {
        a.mul(b).mul(c).sub(&a.mul(&b.mul(c)))
    }
}

impl<R: Ring> fmt::Debug for Octonion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<R: Ring> fmt::Display for Octonion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})e{}", c, k)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Complexify a rational octonion.
pub fn complexify_oct(x: &Octonion<Rational>) -> Octonion<GaussRational> {
    Octonion::from_coords(std::array::from_fn(|i| {
        crate::scalar::complexify(x.coord(i))
    }))
}

/// The six identities of an alternative, nicely normed *-algebra.
pub const IDENTITY_NAMES: [&str; 6] = [
    "(uu)v = u(uv)",
    "(uv)u = u(vu)",
    "(vu)u = v(uu)",
    "(uu*)v = u(u*v)",
    "(uv)u* = u(vu*)",
    "(vu*)u = v(u*u)",
];

fn identity_holds<R: Ring>(
    table: &MulTable,
    which: usize,
    u: &Octonion<R>,
    v: &Octonion<R>,
) -> bool {
    let m = |a: &Octonion<R>, b: &Octonion<R>| a.mul_with(table, b);
    let (lhs, rhs) = match which {
        0 => (m(&m(u, u), v), m(u, &m(u, v))),
        1 => (m(&m(u, v), u), m(u, &m(v, u))),
        2 => (m(&m(v, u), u), m(v, &m(u, u))),
        3 => (m(&m(u, &u.conj()), v), m(u, &m(&u.conj(), v))),
        4 => (m(&m(u, v), &u.conj()), m(u, &m(v, &u.conj()))),
        5 => (m(&m(v, &u.conj()), u), m(v, &m(&u.conj(), u))),
        _ => unreachable!(),
    };
    lhs == rhs
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub name: &'static str,
    pub pass: bool,
    /// Formatted `(u, v)` witnessing the failure, if any.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentitySuiteReport {
    pub ring: String,
    pub samples: usize,
    pub results: Vec<IdentityResult>,
}

impl IdentitySuiteReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

/// Evaluate all six identities on the given pairs.
pub fn run_identities<R: Ring>(
    table: &MulTable,
    ring: &str,
    pairs: &[(Octonion<R>, Octonion<R>)],
) -> IdentitySuiteReport {
    let results = (0..6)
        .map(|which| {
            let mut counterexample = None;
            for (u, v) in pairs {
                if !identity_holds(table, which, u, v) {
                    counterexample = Some(format!("u = {}, v = {}", u, v));
                    break;
                }
            }
            IdentityResult {
                name: IDENTITY_NAMES[which],
                pass: counterexample.is_none(),
                counterexample,
            }
        })
        .collect();
    IdentitySuiteReport {
        ring: ring.to_string(),
        samples: pairs.len(),
        results,
    }
}

/// Pseudo-random rational octonion with numerators in [-3, 3] and
/// denominators in {1, 2}.
pub fn sample_rational_octonion(rng: &mut impl Rng) -> Octonion<Rational> {
    Octonion::from_coords(std::array::from_fn(|_| {
        crate::scalar::rat(rng.gen_range(-3..=3), rng.gen_range(1..=2))
    }))
}

pub fn sample_gauss_octonion(rng: &mut impl Rng) -> Octonion<GaussRational> {
    Octonion::from_coords(std::array::from_fn(|_| {
        crate::scalar::gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
    }))
}

/// Run the six-identity suite over ℚ and over ℚ(i) on pseudo-random pairs.
pub fn identity_suite(samples: usize, seed: u64) -> Vec<IdentitySuiteReport> {
    assert!(samples >= 1);
    let table = MulTable::canonical();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let rational_pairs: Vec<_> = (0..samples)
        .map(|_| {
            (
                sample_rational_octonion(&mut rng),
                sample_rational_octonion(&mut rng),
            )
        })
        .collect();
    let gauss_pairs: Vec<_> = (0..samples)
        .map(|_| {
            (
                sample_gauss_octonion(&mut rng),
                sample_gauss_octonion(&mut rng),
            )
        })
        .collect();
    vec![
        run_identities(table, "Q", &rational_pairs),
        run_identities(table, "Q(i)", &gauss_pairs),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, rat};

    type OctQ = Octonion<Rational>;

    #[test]
    fn unit_is_two_sided_identity() {
        let e0 = OctQ::one();
        for k in 0..8 {
            let x = OctQ::basis(k);
            assert_eq!(e0.mul(&x), x);
            assert_eq!(x.mul(&e0), x);
        }
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for k in 1..8 {
            let e = OctQ::basis(k);
            assert_eq!(e.mul(&e), OctQ::one().neg());
        }
    }

    #[test]
    fn conj_properties() {
        let e0 = OctQ::one();
        assert_eq!(e0.conj(), e0);
        assert_eq!(e0.norm(), rat(1, 1));
        for k in 1..8 {
            let e = OctQ::basis(k);
            assert_eq!(e.conj(), e.neg());
            assert_eq!(e.conj().conj(), e);
        }
        // x·x* = N(x)·e0
        let x = OctQ::basis(1).add(&OctQ::basis(2));
        assert_eq!(x.norm(), rat(2, 1));
        assert_eq!(x.mul(&x.conj()), OctQ::one().scale(&rat(2, 1)));
    }

    // (e1 e2) e4 and e1 (e2 e4) differ exactly by a sign
    #[test]
    fn non_associativity_witness() {
        let e1 = OctQ::basis(1);
        let e2 = OctQ::basis(2);
        let e4 = OctQ::basis(4);
        let lhs = e1.mul(&e2).mul(&e4);
        let rhs = e1.mul(&e2.mul(&e4));
        assert!(!lhs.is_zero());
        assert_eq!(lhs, rhs.neg());
    }

    // complexified isotropic octonion: x = e1 + i·e2 has N(x) = 0
    #[test]
    fn isotropic_complexified_norm() {
        let u = Octonion::<GaussRational>::basis(1);
        let v = Octonion::<GaussRational>::basis(2);
        let x = u.add(&v.scale(&gauss(0, 1)));
        assert!(x.norm().is_zero());
        assert!(!x.is_zero());
    }

    #[test]
    fn identity_suite_passes_over_both_rings() {
        for report in identity_suite(100, 0) {
            assert!(report.all_pass(), "{:?}", report);
        }
    }

    #[test]
    fn trivial_pair_passes() {
        let table = MulTable::canonical();
        let pairs = vec![(OctQ::one(), OctQ::one())];
        assert!(run_identities(table, "Q", &pairs).all_pass());
    }

    // mutation testing: a corrupted table entry must produce a counterexample
    #[test]
    fn corrupted_table_reports_counterexample() {
        let mut table = MulTable::canonical().clone();
        table.sign[3][5] = -table.sign[3][5];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let pairs: Vec<_> = (0..50)
            .map(|_| {
                (
                    sample_rational_octonion(&mut rng),
                    sample_rational_octonion(&mut rng),
                )
            })
            .collect();
        let report = run_identities(&table, "Q", &pairs);
        assert!(!report.all_pass());
        assert!(report
            .results
            .iter()
            .any(|r| !r.pass && r.counterexample.is_some()));
    }

    #[test]
    fn norm_is_multiplicative_over_q() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let a = sample_rational_octonion(&mut rng);
            let b = sample_rational_octonion(&mut rng);
            assert_eq!(a.mul(&b).norm(), a.norm().mul(&b.norm()));
        }
    }

    #[test]
    fn conj_is_an_antiautomorphism() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let a = sample_rational_octonion(&mut rng);
            let b = sample_rational_octonion(&mut rng);
            assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
        }
    }

    // the associator is alternating: it vanishes when two arguments agree
    #[test]
    fn associator_is_alternating() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = sample_rational_octonion(&mut rng);
            let b = sample_rational_octonion(&mut rng);
            assert!(Octonion::associator(&a, &a, &b).is_zero());
            assert!(Octonion::associator(&a, &b, &a).is_zero());
            assert!(Octonion::associator(&b, &a, &a).is_zero());
        }
    }

    #[test]
    fn csv_table_shape() {
        let csv = MulTable::canonical().to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 9);
        assert!(lines[1].starts_with("e0,e0,e1,e2"));
    }
}
