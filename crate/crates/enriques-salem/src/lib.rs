//! Exact-arithmetic toolkit for hyperbolic isometries of the rank-10
//! Enriques lattice and the Salem numbers they realize.
//!
//! The library builds integer matrices for three families of involutions on
//! the numerical lattice of an Enriques or Coble surface, composes them into
//! words, factors the characteristic polynomials into cyclotomic and Salem
//! parts, and computes certified rational enclosures of the resulting
//! dynamical degrees. Everything runs in exact integer/rational arithmetic.
//!
//! Entry points:
//! - [`lattice`]: the isotropic-sequence and Petersen coordinate models.
//! - [`involutions`]: double-plane, nodal and projection involutions.
//! - [`dynamics`]: word analysis, Salem search and orbit growth counting.
//! - [`salem`]: cyclotomic stripping and certified spectral radii.
//!
//! Runnable demonstrations live under `examples/`; the `enriques-salem`
//! binary exposes the same capabilities as subcommands.

#![allow(clippy::manual_is_multiple_of)]
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod dynamics;
mod error;
pub mod involutions;
pub mod lattice;
pub mod numeric;
pub mod salem;

pub use error::{Error, Result};
