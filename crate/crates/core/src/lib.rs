//! Intersecting linear codes over finite fields, studied through their
//! geometric counterparts: point sets of `PG(k-1, q)` that are not contained
//! in the union of two hyperplanes.
//!
//! The crate provides:
//!
//! * exact arithmetic in `GF(p^h)` with reproducible (Conway) moduli,
//! * linear codes over `GF(q)`: rank, duals, minimum distance, projective
//!   codeword enumeration,
//! * projective systems with hyperplane-cover tests, minimality and the
//!   line-set avoidance property,
//! * the intersecting / minimal / outer-minimal verifiers, each with an
//!   independent cross-validating algorithm,
//! * explicit constructions (arcs, sparse tetrahedra, concatenation, and a
//!   frozen catalogue of short intersecting codes),
//! * closed-form and numeric bounds on the minimal length `i(k, q)` of an
//!   intersecting code of dimension `k`,
//! * graph spectra, integrity, and the expander-graph line-set pipeline,
//! * exhaustive search certificates for exact `i(k, q)` values,
//! * 2-wise scalar-weighted Davenport constants of elementary abelian
//!   groups via the reduction to `i(k, q)`.

pub mod bounds;
pub mod catalogue;
pub mod checks;
pub mod code;
pub mod construct;
pub mod davenport;
pub mod error;
pub mod field;
pub mod geometry;
pub mod graph;
pub mod matrix;
pub mod search;

pub use error::{Error, Result};
pub use field::{make_field, FieldCtx, FieldElem};
pub use matrix::Matrix;
