//! Exact polynomial arithmetic over the crate's finite fields.
//!
//! Three shapes cover everything the curve needs:
//!
//! * [`UniPoly`] - dense univariate polynomials (parameter-side algebra,
//!   vanishing orders, synthetic division);
//! * [`BinForm`] - homogeneous binary forms in `(s, t)`, the natural home of
//!   the parametrization and of pullbacks of plane curves to `P^1`;
//! * [`MPoly`] / [`HomogForm`] / [`RationalExpr`] - sparse multivariate
//!   polynomials with optional weighted-homogeneity, and fractions thereof
//!   verified by cross-multiplication.

mod bin;
mod multi;
mod uni;

pub use bin::{BinForm, P1Point};
pub use multi::{HomogForm, MPoly, RationalExpr};
pub use uni::UniPoly;
