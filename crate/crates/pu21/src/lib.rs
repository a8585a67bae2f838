//! Certified computations for a discrete subgroup of PU(2,1) acting on the
//! complex hyperbolic plane.
//!
//! All trusted-path arithmetic is exact over the field K = Q(√2,√3,√5)(i).
//! Floating point appears only in figure emission.

pub mod bisectors;
pub mod chgeom;
pub mod cutdisk;
pub mod numfield;
pub mod poly;
pub mod reps;

pub use numfield::{AlgebraicNumber, Interval, Rat, RealAlgebraic};
