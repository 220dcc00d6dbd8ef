//! Validated-numerics toolkit for verifying covering relations of Poincaré
//! maps, with the Rössler system as the shipped application.
//!
//! The crate is organised bottom-up:
//!
//! - [`interval`] — outward-rounded interval scalars, boxes and matrices;
//! - [`system`] — vector fields with interval extensions and Taylor
//!   coefficient recurrences;
//! - [`sim`] — non-rigorous floating-point integration used by pilots,
//!   shooting and test oracles;
//! - [`integrator`] — rigorous flow enclosures (interval Taylor with
//!   mean-value and QR set representations), including differential
//!   inclusions `x' ∈ v(x) + [-δ,δ]ⁿ`;
//! - [`poincare`] — rigorous first-return maps to a section;
//! - [`covering`] — h-sets and verification of covering relations;
//! - [`degree`] — planar Brouwer-degree oracles used to cross-check the
//!   covering checker;
//! - [`robustness`] — certified perturbation bounds δ under which all
//!   covering relations survive;
//! - [`symbolic`] — the subshift layer, periodic-orbit certification and
//!   witness trajectories.
//!
//! Everything outside [`sim`], the explorer and the witness generator is
//! rigorous: results are set enclosures valid in exact real arithmetic.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `covrel-cli` crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod covering;
pub mod degree;
pub mod integrator;
pub mod interval;
pub mod poincare;
pub mod robustness;
pub mod sim;
pub mod symbolic;
pub mod system;

pub use interval::{IMat, IVec, Interval};
