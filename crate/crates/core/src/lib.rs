//! Exact-arithmetic kernel for the intersection curve of a ring torus and an
//! irreducible quadric.
//!
//! The torus is centered at the origin with the z-axis as revolution axis;
//! the quadric is given by its ten coefficients. Everything downstream —
//! the resultant and subresultant polynomials, the projected cutcurve, the
//! admissible region, lifting, and the singularity classification — is
//! computed in exact rational arithmetic; algebraic points are handled with
//! certified isolating boxes, never floating point.

pub mod num;
pub mod poly;
pub mod gcd;
pub mod matrix;
pub mod unipoly;
pub mod roots1d;
pub mod alg2d;
pub mod scene;
pub mod subres;
pub mod cutcurve;
pub mod lift;
pub mod classify;

pub use crate::num::{Rat, Sign};
pub use crate::poly::{MultiPoly, PolyError, Var};
