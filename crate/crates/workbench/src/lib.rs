//! An exact-arithmetic workbench for deformation theory via differential
//! graded Lie algebras: validation of DGLA data, mapping-cone cohomology,
//! Maurer-Cartan equations with explicit obstruction classes, deformation
//! functors on Artinian and dg coefficients, and structural cross-checks
//! on finite examples. All arithmetic is over the rationals; every
//! equality check is exact.

pub mod error;
pub mod rational;
pub mod matrix;
pub mod graded;
pub mod complex;
pub mod dgla;
pub mod corpus;
pub mod coeff;
pub mod cone;
pub mod mc;
pub mod path;
pub mod cohdef;
pub mod whitehead;
pub mod htp;
pub mod doc;
pub mod run;

pub use error::{Error, Result};
pub use rational::Rat;
