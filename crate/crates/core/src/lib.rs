//! Exact-arithmetic engine showing that a `d`-dimensional abelian variety in a
//! smooth quadric of dimension `2d` must be an elliptic curve of bidegree
//! `(2,2)`.
//!
//! * [`series`]: truncated integer polynomials in the hyperplane class.
//! * [`chow`]: Chern classes of quadrics, `F_d`, and the middle-dimensional
//!   intersection pairing.
//! * [`sequences`]: factorials, exponential bounds, Fine numbers.
//! * [`feasibility`]: lattice points, degree bounds, polarization types, the
//!   rule base and per-dimension verdicts.
//! * [`cli`]: the `abelquad` command-line front end.

pub mod bigint_serde;
pub mod chow;
pub mod cli;
pub mod error;
pub mod feasibility;
pub mod par;
pub mod sequences;
pub mod series;

pub use error::{Error, Result};
