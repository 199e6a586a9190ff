//! Exact arithmetic for the Ballico-Hefez curve and its cyclic covers.
//!
//! The Ballico-Hefez curve of degree `q + 1` in characteristic `p` (with
//! `q` a power of `p`) is the image of the morphism
//!
//! ```text
//! phi : P^1 -> P^2,   [s : t] |-> [s^(q+1) : t^(q+1) : s t^q + s^q t].
//! ```
//!
//! It is a rational curve whose only singularities are `(q^2 - q)/2`
//! ordinary nodes, and it is extremal in several senses: every point of
//! `P^2(F_q)` lies on it, its dual curve is a conic traversed by Frobenius,
//! and the cyclic covers of `P^2` branched along it are unirational; for
//! `(q, d) = (3, 4)` and `(5, 2)` those covers are supersingular K3 surfaces
//! with Artin invariant 1.
//!
//! Everything here is computed exactly over explicit finite fields; there is
//! no floating point anywhere. The crate is organised as a library with one
//! module per topic:
//!
//! * [`field`] - small prime-power fields `F_{p^n}` with explicit moduli,
//!   deterministic enumeration and subfield tests;
//! * [`poly`] - dense univariate polynomials, homogeneous binary forms, and
//!   sparse multivariate polynomials / rational expressions;
//! * [`curve`] - the parametrization, defining forms, nodes, tangent lines,
//!   inflection points, the dual conic, and the Coxeter plane model;
//! * [`aut`] - the `PGL_2(F_q)` symmetry group and its explicit lift to
//!   `PGL_3`, with exhaustive group audits;
//! * [`cover`] - the cyclic covers `w^d = F`, their singular points, the
//!   degree-2 projection structure, unirationality and fiber splitting;
//! * [`lattice`] - Neron-Severi Gram matrices of the two supersingular K3
//!   covers, with exact determinant, inertia and Artin invariant;
//! * [`report`] - the structured check/report types shared with the CLI;
//! * [`cli`] - implementation of the `bh` binary's subcommands.
//!
//! Each major capability has a runnable demonstration under `examples/`;
//! start with `cargo run --example curve_identities`.

pub mod aut;
pub mod cli;
pub mod cover;
pub mod curve;
pub mod field;
pub mod lattice;
pub mod poly;
pub mod report;

use thiserror::Error;

/// Crate-wide error type. Variants follow the failure modes of the public
/// operations; anything not representable here is a programmer error and
/// panics instead.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("q = {0} exceeds the supported range (q <= 32, or 49/81 with `slow` enabled)")]
    UnsupportedQ(u32),
    #[error("modulus is not monic of positive degree")]
    BadModulus,
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u32),
    #[error("element does not belong to the field (expected {expected} coordinates, got {got})")]
    WrongField { expected: usize, got: usize },
    #[error("{0}^{1} does not divide the ambient field order")]
    NotASubfield(u32, u32),
    #[error("division by zero in a finite field")]
    DivisionByZero,
    #[error("cannot parse field element: {0}")]
    ParseElem(String),
    #[error("vanishing order of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("zero denominator in a rational expression")]
    ZeroDenominator,
    #[error("arity mismatch: expected {expected} substituents, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("form is not homogeneous for the given weights")]
    NotHomogeneous,
    #[error("substituent degrees are incompatible with the weights")]
    WeightMismatch,
    #[error("zero vector does not define a projective point")]
    ZeroVector,
    #[error("the three coefficients of a line cannot all vanish")]
    ZeroLine,
    #[error("pullback of the line does not split completely over the search field")]
    SearchFieldTooSmall,
    #[error("d = {d} does not divide q + 1 = {qp1}")]
    NotADivisor { d: u32, qp1: u32 },
    #[error("matrix in PGL must be invertible")]
    SingularMatrix,
    #[error("expected the field F_{0}")]
    WrongFieldOrder(u64),
    #[error("no element with square {0} exists in this field")]
    NoSuchSquareRoot(i64),
    #[error("node-local intersection is not resolved by one blow-up; configuration needs manual analysis")]
    UnresolvedNodeIntersection,
    #[error("curves coincide; self-intersection is handled by the assembly rule, not by `meet`")]
    IdenticalCurves,
    #[error("Gram determinant {0} is not -p^(2*sigma) for any sigma >= 1")]
    NotMinusPPower(i64),
    #[error("determinant exceeds i64 range")]
    DetOverflow,
    #[error("a custom modulus requires prime q (for prime powers the extension uses the default modulus)")]
    ModulusRequiresPrimeQ,
    #[error("scanning P^1 over a field of size {0} exceeds the command-line gate; use the library API for larger sweeps")]
    ScanTooLarge(u64),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
