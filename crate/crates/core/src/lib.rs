//! Arithmetic for a class of non-commutative 4-dimensional hypercomplex
//! number systems generated by doubling 2-dimensional base systems.
//!
//! The class contains six named systems, obtained by doubling the complex
//! (C), double (W) and dual (D) numbers over each other: quaternions
//! `H = D(C,C,4)`, antiquaternions `AH = D(C,W,4)`, `CD = D(C,D,4)`,
//! `WW = D(W,W,4)`, `DD = D(D,D,4)` and `WD = D(W,D,4)`. Arbitrary square
//! pairs are supported as generic systems.
//!
//! Provided operations: Cayley-table generation from a square pair,
//! addition, multiplication, conjugation, norm and pseudonorm, zero-divisor
//! detection, left and right division, and the exponential function in a
//! closed form checked against an independent matrix-exponential oracle.
//!
//! ```
//! use hns4_core::{exp_closed, System, SystemKind};
//!
//! let h = System::builtin(SystemKind::H).unwrap();
//! let product = h.basis(2).mul(&h.basis(3)).unwrap();
//! assert_eq!(product.coeffs(), [0.0, 0.0, 0.0, 1.0]);
//!
//! let e = exp_closed(&h.num([0.0, std::f64::consts::PI, 0.0, 0.0]).unwrap());
//! assert!((e.coeff(1) + 1.0).abs() < 1e-15);
//! ```

mod error;
pub mod exp;
mod matrix;
mod num;
mod system;
mod table;

pub use error::Error;
pub use exp::{exp_closed, exp_series, radicand, Branch, Radicand, RADICAND_EPS};
pub use matrix::Matrix4;
pub use num::{HNum, ZERO_DIVISOR_EPS};
pub use system::{verify_reference_table, CellDiff, System, SystemKind, TableComparison};
pub use table::{gc_double, CayleyTable4, SignedBasis, SquareSign};
