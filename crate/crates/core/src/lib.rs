//! The Frobenius manifold attached to the ℓ-Kronecker quiver.
//!
//! The crate is layered bottom-up:
//!
//! * [`root_lattice`]: exact arithmetic in the rank-2 root lattice.
//! * [`spectral_frame`]: constants `ν, ρ, h` and the basis change `P`.
//! * [`charts`]: x, y, s and t coordinates and the maps between them.
//! * [`frobenius`]: metric, product, potential, periods, monodromy.
//! * [`verification`]: finite differences and the numerical checks.
//! * [`cli`]: the `kronecker` command-line tool.

#![allow(clippy::needless_range_loop)]

pub mod charts;
pub mod cli;
pub mod error;
pub mod frobenius;
pub mod json;
pub mod linalg;
pub mod root_lattice;
pub mod spectral_frame;
pub mod verification;

pub use charts::{Chart, ChartPoint};
pub use error::{Error, Result};
pub use frobenius::{FrobeniusData, Tensor2, VectorField2};
pub use linalg::{ComplexMatrix2, C64};
pub use root_lattice::{IntegerMatrix2, QuiverParams, RootVector, SimpleIndex};
pub use spectral_frame::SpectralFrame;
pub use verification::fd::FdConfig;
pub use verification::VerificationReport;
