//! Arbitrary-precision evaluation of hyperbolic-function series, Eisenstein
//! series and lattice sums, Jacobi theta kernels, and the special constants
//! they produce (lemniscate constants, Hurwitz numbers), together with a
//! declarative catalog of closed-form identities and a verification engine
//! that checks every identity by computing both sides independently.

pub mod catalog;
pub mod error;
pub mod hurwitz;
pub mod hyper;
pub mod lattice;
pub mod mpcore;
pub mod polys;
pub mod thetafn;

pub use error::{Error, Result};
pub use mpcore::{BigComplex, BigReal, PrecCtx, Rational};
