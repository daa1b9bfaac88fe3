//! Explicit Baker-type lower bounds for linear forms in exponential values
//! over the rationals or an imaginary quadratic field.
//!
//! The crate is organized around the pipeline that produces the bounds:
//!
//! * [`field`] — exact arithmetic in the ring of integers of `Q` or
//!   `Q(sqrt(-D))`, and reduced points `alpha = x/y`;
//! * [`invariants`] — the size invariants `g1..g4` of a point vector and all
//!   derived constants (`b0, b1, e0, e1`, `A..E`, `gamma`, `H0`);
//! * [`nested_log`] — the inverse `z(y)` of `y = z log z` and the error
//!   exponent `eps(H)` built from it;
//! * [`siegel`] — small nonzero integer solutions of underdetermined linear
//!   systems, with the explicit field-dependent bound;
//! * [`pade`] — type-II Hermite-Pade approximants for `(1, e^{a_1 t}, ...,
//!   e^{a_m t})`, the differentiated family and nonsingular index selection;
//! * [`forms`] — the numerical linear forms `B_{k,0} e^{a_j} + B_{k,j}` with
//!   rigorously enclosed remainders and their size checks;
//! * [`bounds`] — the lower-bound theorem, its corollaries, prior-work
//!   comparison figures and the worked example presets.
//!
//! All inexact real quantities are [`real::Real`] enclosures (directed-rounded
//! intervals at user-chosen precision); astronomically large thresholds are
//! handled on the logarithmic scale throughout.

pub mod bounds;
pub mod complex;
pub mod corpus;
pub mod elem;
pub mod error;
pub mod field;
pub mod forms;
pub mod invariants;
pub mod lattice;
pub mod nested_log;
pub mod pade;
pub mod poly;
pub mod real;
pub mod siegel;

pub use error::Error;
pub use real::{Real, Tern, DEFAULT_PRECISION, MAX_PRECISION};

/// Schema tag embedded in every machine-readable report.
pub const SCHEMA: &str = "baker-forge/1";

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
