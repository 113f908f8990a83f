//! Exact-arithmetic models of the Cayley plane 𝕆P² and its twistor theory.
//!
//! The crate is organized around the chain of structures the computations
//! live in:
//!
//! * [`scalar`], [`linalg`] — exact coefficient rings (ℚ, ℚ(i), ℚ(i)\[z\])
//!   and deterministic fraction-free linear algebra over them.
//! * [`octonion`] — the octonions over any exact ring, with machine checks
//!   of the alternative and nicely-normed identities.
//! * [`jordan`] — the Albert algebra h₃(𝕆), the Cayley plane as trace-one
//!   idempotents, its Grassmannian model, and the nilpotency estimates for
//!   isotropic tangent operators.
//! * [`f4`] — the F₄ root system, the 26-dimensional weight model with its
//!   support-level multiplication table, canonical gradings, and the three
//!   twistor projections.
//! * [`orbit`] — the two nontrivial nilpotent orbit representatives acting
//!   on the weight model, their twistor-lift certificates, and the
//!   Jacobson–Morozov / distinguished-parabolic bookkeeping.
//! * [`uniton`] — Laurent-lattice models of S¹-invariant extended
//!   solutions: canonical lattice builders, real-form/multiplicativity
//!   checks, superhorizontality, and a worked polynomial curve.
//! * [`report`], [`verify`] — machine-readable reports and the one-shot
//!   verification suite used by the CLI and the acceptance tests.

pub mod f4;
pub mod jordan;
pub mod linalg;
pub mod octonion;
pub mod orbit;
pub mod report;
pub mod scalar;
pub mod uniton;
pub mod verify;

pub use linalg::{kernel, kernel_image, solve_unique, Matrix, Subspace};
pub use scalar::{GaussRational, Poly, Rational};
