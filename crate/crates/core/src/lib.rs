//! Guided modes of a vacuum-clad optical nanofiber, the electric-quadrupole
//! Rabi frequency of a nearby two-level atom driven by those modes, and the
//! azimuthal force and axial orbital torque that the guided light exerts on it.
//!
//! The crate is organized bottom-up:
//!
//! * [`angular`] – half-integer quantum numbers, Wigner 3j/6j symbols, the
//!   spherical quadrupole tensor matrices and reduced matrix elements.
//! * [`fibermodes`] – Bessel functions, the step-index eigenvalue problem,
//!   mode profiles, power normalization and the guided field amplitude.
//! * [`quadcoupling`] – field-gradient factors and the quadrupole Rabi frequency.
//! * [`dynamics`] – two-level optical Bloch equations and the axial torque.
//! * [`scenario`] – configuration files, radial sweeps and CSV output.

// `!(x > 0.0)` is used on purpose: it rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod constants;
pub mod dynamics;
mod error;
pub mod exec;
pub mod fibermodes;
pub mod quadcoupling;
pub mod quadrature;
pub mod scenario;
pub mod units;

pub use error::{Error, Result};
