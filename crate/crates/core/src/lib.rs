//! Numerical kernels for the fractional maximal operator on n-dimensional
//! hyperbolic space, together with the weight conditions and weighted-norm
//! experiments that surround it.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypgeo`] — exact geometry and measure on the hyperboloid model:
//!   distances, ball volumes, spherical-cap fractions, annuli.
//! * [`integrate`] — deterministic seeded Monte Carlo on balls and adaptive
//!   Gauss–Kronrod quadrature shared by everything above it.
//! * [`funcops`] — function representations (radial profiles, scalar fields)
//!   and the averaging/maximal operators built from them.
//! * [`weights`] — weight families and every weight condition used by the
//!   experiments: local and global Muckenhoupt-type products, annulus
//!   conditions, the set-pair testing condition, and admissibility windows.
//! * [`norms`] — weighted strong and weak norms on truncated domains, the
//!   divergence scan, and the distributional diagnostic.
//! * [`harness`] — experiment configs, report emission, and verdicts; the
//!   `hypmax` binary is a thin CLI over this module.
//!
//! All operations are pure functions of their inputs. Monte Carlo results are
//! bit-identical for a fixed seed regardless of worker count; see
//! [`integrate::McConfig`] for the contract.

pub mod error;
pub mod funcops;
pub mod harness;
pub mod hypgeo;
pub mod integrate;
pub mod norms;
pub mod tolerances;
pub mod weights;

pub use error::{Error, Result};
