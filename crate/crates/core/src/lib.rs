//! Exact invariants of torus knots in lens spaces `L(p,q)`.
//!
//! A torus knot `K(a,b)` sits on the Heegaard torus as the curve `a μ1 + b μ2`.
//! The crate computes its homological data, decides isotopy, and classifies its
//! Legendrian and transverse representatives in the universally tight contact
//! structures. All arithmetic is exact.
#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod error;
pub mod farey;
pub mod legendrian;
pub mod tightcount;
pub mod topology;

pub use arith::{Int, Rational};
pub use error::Error;
pub use legendrian::{RotationMode, Sign, SlopeCase, UtStructure};
pub use topology::{LensSpace, TorusKnot};
