//! Bohr radii for symmetric analytic functions and bounded harmonic
//! mappings.
//!
//! For an analytic `f(z) = Σ a_k z^k` with `|f| <= 1` on the unit disk, the
//! classical Bohr inequality says the majorant series `Σ |a_k| r^k` stays at
//! most 1 for `r <= 1/3`. This crate computes the generalized radius
//! `r_{p,m}` for functions supported on indices `pk + m`, the p-Bohr radii
//! and coefficient-sum bounds for bounded harmonic mappings `h + conj(g)`,
//! and the explicit extremal families behind every sharpness statement — and
//! it certifies each inequality numerically with seeded random oracles.
//!
//! # Modules
//!
//! * [`series`] — truncated power series with rigorous tail bounds, majorant
//!   evaluation, and DFT coefficient extraction from boundary samples.
//! * [`radii`] — the `r_{p,m}` equation solver, its closed-form families,
//!   and the harmonic radii/threshold formulas.
//! * [`extremal`] — the explicit functions attaining (or breaking) each
//!   bound.
//! * [`harmonic`] — p-combined coefficient sums, the subordination kernel,
//!   and the harmonic bound formulas.
//! * [`verify`] — the randomized certification harness.
//! * [`cli`] — the `bohr` command-line front end.
//!
//! # Example
//!
//! ```
//! use bohr::radii::{bohr_radius, SymmetryClass};
//! use bohr::extremal::analytic_extremal;
//!
//! // Bohr radius for odd unit-bounded functions (p = 2, m = 1)
//! let class = SymmetryClass::new(2, 1).unwrap();
//! let r = bohr_radius(class).unwrap().value;
//! assert!((r - 0.789991).abs() < 1e-5);
//!
//! // the extremal's majorant reaches 1 exactly there
//! let f = analytic_extremal(class, 512, 0.9).unwrap();
//! assert!((f.majorant_sum(r).unwrap() - 1.0).abs() < 1e-8);
//! ```

pub mod cli;
pub mod error;
pub mod extremal;
pub mod harmonic;
pub mod radii;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use harmonic::HarmonicCoeffs;
pub use radii::{bohr_radius, RadiusResult, SolveMethod, SymmetryClass};
pub use series::{AnalyticFn, PowerSeries, SamplingConfig};
pub use verify::{HarnessConfig, VerificationReport};
