//! Exact coadjoint-orbit computations over the rationals.

pub mod catalog;
pub mod error;
pub mod exactla;
pub mod file;
pub mod homogeneous;
pub mod liealg;
pub mod mackey;
pub mod polarization;
pub mod poly;
pub mod records;
pub mod reductive;
pub mod sample;

pub use error::{Error, Result};
pub use exactla::{Matrix, Scalar, Subspace};
pub use liealg::{Covector, LieAlgebra, OrbitRecord};
