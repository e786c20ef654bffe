//! Casimir-Polder free energy of a polarizable atom near a hollow-core
//! cylindrical shell (dielectric, ohmic conductor, or superconductor), at
//! zero and finite temperature.
//!
//! The library is organized around the scattering formulation of the
//! interaction: exact cylindrical scattering coefficients feed a
//! dimensionless free-energy integral that is evaluated with fixed-point
//! Gaussian rules (Gauss-Jacobi in the frequency angle, Gauss-Laguerre in
//! the radial wave number, and a Gaussian summation rule for the azimuthal
//! and Matsubara series). Closed-form asymptotic limits for the thin-wire
//! and thermal regimes live in [`asymptotics`] and double as validation
//! oracles for the numerical engine.
//!
//! All lengths are in nanometers, energies and frequencies in eV, and
//! temperatures in Kelvin.

pub mod asymptotics;
pub mod bessel;
pub mod constants;
mod dd;
pub mod free_energy;
pub mod lambert;
pub mod materials;
pub mod quadrature;
pub mod scattering;
mod uniform_tables;

mod error;

pub use error::CoreError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CoreError>;
