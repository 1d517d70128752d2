//! Weight-lattice discretization of Weyl-orbit functions.
//!
//! For a simple Lie algebra and one of its sign homomorphisms `sigma`, the
//! orbit functions
//!
//! ```text
//! phi^sigma_lambda(a) = sum_{w in W} sigma(w) exp(2 pi i <w lambda, a>)
//! ```
//!
//! are sampled on the grid `F^sigma_{P,M} = (1/M) P  ∩  F^sigma` and labelled
//! by `Lambda^sigma_{P,M} = P ∩ M F^sigma`. The two sets have the same size
//! and the functions are orthogonal for the `epsilon`-weighted scalar
//! product, which gives an invertible discrete transform and a family of
//! unitary symmetric S-matrices.
//!
//! ```
//! use weyl_discrete::{RootSystemData, SignHom, WeylGroup, grids};
//!
//! let group = WeylGroup::new(RootSystemData::build("C2".parse().unwrap())).unwrap();
//! let grid = grids::enumerate_grid(&group, SignHom::Identity, 3).unwrap();
//! assert_eq!(grid.len(), 10);
//! ```

pub mod error;
pub mod grids;
pub mod io;
pub mod rational;
pub mod rootdata;
pub mod sign;
pub mod smatrix;
pub mod transforms;
pub mod verify;
pub mod weylgroup;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use grids::{CountReport, GridPoint, WeightLabel};
pub use rational::Rational;
pub use rootdata::{LieType, RootSystemData, Series};
pub use sign::{q_sigma, SignHom};
pub use smatrix::{build_s_matrix, SMatrix};
pub use transforms::{Discretization, SampleVector, SpectrumCoefficients};
pub use weylgroup::{AffineElement, FundamentalPoint, WeylElement, WeylGroup};
