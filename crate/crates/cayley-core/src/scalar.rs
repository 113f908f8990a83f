//! Exact scalar rings.
//!
//! Every computation in this crate happens over one of three coefficient
//! rings, all with decidable equality and no rounding:
//!
//! * [`Rational`] — arbitrary-precision rationals, always in lowest terms
//!   with positive denominator (enforced by `num`).
//! * [`GaussRational`] — complexified rationals ℚ(i), the base field for
//!   complexified representations.
//! * [`Poly`] — dense univariate polynomials over ℚ(i), used for
//!   polynomial curves of subspaces.
//!
//! The traits below are deliberately method-based rather than `std::ops`
//! bounds: generic linear algebra over `&self` references stays readable
//! and avoids higher-ranked bounds on every signature.

use num::{BigInt, BigRational, Complex, One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Element of ℚ(i): a complex number with rational real and imaginary parts.
pub type GaussRational = Complex<BigRational>;

/// A commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
}

/// An integral domain where divisibility is decidable.
///
/// `exact_div` returns `None` unless `rhs` divides `self` exactly; this is
/// what fraction-free elimination needs from its coefficients.
pub trait ExactDiv: Ring {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// A field: every nonzero element is invertible.
pub trait Field: ExactDiv {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero"))
    }
}

/// Rings carrying a conjugation involution (identity on `Rational`).
pub trait Conj: Ring {
    fn conj(&self) -> Self;
}

/// Rings containing ℚ; supplies exact division by nonzero integers, which
/// the Jordan product (the ½ in a∘b) needs over every coefficient ring.
pub trait QAlgebra: Ring {
    fn from_fraction(num: i64, den: i64) -> Self;
}

impl QAlgebra for Rational {
    fn from_fraction(num: i64, den: i64) -> Self {
        rat(num, den)
    }
}

impl QAlgebra for GaussRational {
    fn from_fraction(num: i64, den: i64) -> Self {
        complexify(&rat(num, den))
    }
}

impl QAlgebra for Poly {
    fn from_fraction(num: i64, den: i64) -> Self {
        Poly::constant(complexify(&rat(num, den)))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl ExactDiv for Rational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Ring::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Conj for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl Ring for GaussRational {
    fn zero() -> Self {
        <GaussRational as Zero>::zero()
    }
    fn one() -> Self {
        <GaussRational as One>::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        <GaussRational as Zero>::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(Ring::from_i64(n), <Rational as Ring>::zero())
    }
}

impl ExactDiv for GaussRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Ring::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Field for GaussRational {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }
}

impl Conj for GaussRational {
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
}

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the Gaussian rational `re + im·i` with integer parts.
pub fn gauss(re: i64, im: i64) -> GaussRational {
    Complex::new(Ring::from_i64(re), Ring::from_i64(im))
}

/// The imaginary unit of ℚ(i).
pub fn gauss_i() -> GaussRational {
    gauss(0, 1)
}

/// Embed a rational into ℚ(i).
pub fn complexify(r: &Rational) -> GaussRational {
    Complex::new(r.clone(), <Rational as Ring>::zero())
}

/// Canonical string form: `"3/2"`, `"-2"`, `"i"`, `"1/2+1/2i"`, `"1-2i"`.
pub fn format_gauss(z: &GaussRational) -> String {
    let re_zero = <Rational as Zero>::is_zero(&z.re);
    let im_zero = <Rational as Zero>::is_zero(&z.im);
    let im_term = |im: &Rational| -> String {
        if im == &rat(1, 1) {
            "i".to_string()
        } else if im == &rat(-1, 1) {
            "-i".to_string()
        } else {
            format!("{}i", im)
        }
    };
    match (re_zero, im_zero) {
        (_, true) => format!("{}", z.re),
        (true, false) => im_term(&z.im),
        (false, false) => {
            if z.im.is_negative() {
                format!("{}{}", z.re, im_term(&z.im))
            } else {
                format!("{}+{}", z.re, im_term(&z.im))
            }
        }
    }
}

/// Parse the forms produced by [`format_gauss`].
pub fn parse_gauss(s: &str) -> Result<GaussRational, String> {
    let s = s.trim().replace(' ', "");
    if s.is_empty() {
        return Err("empty scalar".into());
    }
    // Split into a real and an imaginary part at the last sign that is not
    // a leading sign and not part of a fraction.
    let body = |t: &str| -> Result<Rational, String> {
        Rational::from_str(t).map_err(|e| format!("bad rational {t:?}: {e}"))
    };
    let imag_body = |t: &str| -> Result<Rational, String> {
        match t {
            "" | "+" => Ok(rat(1, 1)),
            "-" => Ok(rat(-1, 1)),
            _ => body(t),
        }
    };
    if let Some(t) = s.strip_suffix('i') {
        // Look for an interior split point between real and imaginary parts.
        for (pos, ch) in t.char_indices().rev() {
            if (ch == '+' || ch == '-') && pos != 0 {
                let (re_s, im_s) = t.split_at(pos);
                let re = body(re_s)?;
                let im = imag_body(im_s)?;
                return Ok(Complex::new(re, im));
            }
        }
        Ok(Complex::new(<Rational as Ring>::zero(), imag_body(t)?))
    } else {
        Ok(Complex::new(body(&s)?, <Rational as Ring>::zero()))
    }
}

/// Dense univariate polynomial over ℚ(i), coefficients in ascending degree,
/// trailing zeros trimmed.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly {
    coeffs: Vec<GaussRational>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().map(Ring::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: GaussRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c·z^k`.
    pub fn monomial(c: GaussRational, k: usize) -> Self {
        let mut coeffs = vec![<GaussRational as Ring>::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// The variable `z`.
    pub fn var() -> Self {
        Poly::monomial(<GaussRational as Ring>::one(), 1)
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(<GaussRational as Ring>::zero)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return <Poly as Ring>::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&Ring::from_i64(k as i64)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Evaluation at `z0` is a ring homomorphism ℚ(i)\[z\] → ℚ(i).
    pub fn evaluate(&self, z0: &GaussRational) -> GaussRational {
        let mut acc = <GaussRational as Ring>::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z0).add(c);
        }
        acc
    }

    fn leading(&self) -> Option<&GaussRational> {
        self.coeffs.last()
    }

    /// Euclidean division; `rhs` must be nonzero.
    pub fn div_rem(&self, rhs: &Poly) -> Option<(Poly, Poly)> {
        let d = rhs.degree()?;
        let lead_inv = Field::inv(rhs.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            <GaussRational as Ring>::zero();
            self.coeffs.len().saturating_sub(d)
        ];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = rem.last().unwrap().mul(&lead_inv);
            if !Ring::is_zero(&factor) {
                quot[k] = factor.clone();
                for (j, c) in rhs.coeffs.iter().enumerate() {
                    let t = factor.mul(c);
                    rem[k + j] = rem[k + j].sub(&t);
                }
            }
            debug_assert!(Ring::is_zero(rem.last().unwrap()));
            rem.pop();
        }
        Some((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn one() -> Self {
        Poly::constant(<GaussRational as Ring>::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect();
        Poly::from_coeffs(coeffs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if Ring::is_zero(self) || Ring::is_zero(rhs) {
            return <Poly as Ring>::zero();
        }
        let mut coeffs =
            vec![<GaussRational as Ring>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(coeffs)
    }
    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(Ring::from_i64(n))
    }
}

impl ExactDiv for Poly {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        if Ring::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

impl Conj for Poly {
    fn conj(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Conj::conj).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            let cs = format_gauss(c);
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", cs)?,
                _ => {
                    let var = if k == 1 {
                        "z".to_string()
                    } else {
                        format!("z^{}", k)
                    };
                    if cs == "1" {
                        write!(f, "{}", var)?;
                    } else if cs == "-1" {
                        write!(f, "-{}", var)?;
                    } else if cs.contains('+') || (cs.contains('-') && !cs.starts_with('-')) {
                        write!(f, "({}){}", cs, var)?;
                    } else {
                        write!(f, "{}{}", cs, var)?;
                    }
                }
            }
        }
        Ok(())
    }
}
