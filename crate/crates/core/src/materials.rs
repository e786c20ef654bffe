//! Permittivity models along the imaginary frequency axis, the relative
//! penetration depth, derived low-frequency scales, and the atomic
//! polarizability.

use crate::constants::HBAR_C;
use crate::{CoreError, Result};

/// Material class: single-oscillator dielectric, Drude (ohmic) conductor,
/// or the dissipationless (superconductor / plasma) limit of the latter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaterialKind {
    Dielectric,
    OhmicConductor,
    Superconductor,
}

/// Permittivity model parameters; frequencies in eV.
#[derive(Debug, Clone, Copy)]
pub struct PermittivityModel {
    pub kind: MaterialKind,
    pub eps_inf: f64,
    pub omega_p: f64,
    /// Oscillator frequency, dielectrics only.
    pub omega_0: f64,
    /// Damping rate; ignored by the superconductor model.
    pub gamma: f64,
}

/// Low-frequency material scales; only the fields matching `kind` are set.
#[derive(Debug, Clone, Copy)]
pub struct MaterialScales {
    /// Crossover frequency xi_0 in eV; infinite for a superconductor with
    /// eps_inf = 1 (flagged by `xi0_infinite`).
    pub xi0: f64,
    pub xi0_infinite: bool,
    /// Static relative penetration depth (dielectrics).
    pub delta0: Option<f64>,
    /// Diffusion length c gamma / omega_p^2 in nm (ohmic conductors).
    pub lambda_diff: Option<f64>,
    /// Plasma wavelength c / omega_p in nm (superconductors).
    pub lambda_plasma: Option<f64>,
}

/// Atom: dominant transition frequency and static polarizability volume.
#[derive(Debug, Clone, Copy)]
pub struct AtomModel {
    /// Dominant transition frequency in eV.
    pub omega_a: f64,
    /// alpha_0 / (4 pi eps_0) in nm^3; absent when only normalized energies
    /// are requested.
    pub alpha0_volume: Option<f64>,
}

impl AtomModel {
    pub fn new(omega_a: f64, alpha0_volume: Option<f64>) -> Self {
        AtomModel { omega_a, alpha0_volume }
    }

    /// Reduced transition wavelength hbar c / omega_a in nm.
    pub fn lambda_a(&self) -> f64 {
        HBAR_C / self.omega_a
    }

    /// alpha_0 / eps_0 in nm^3 (i.e. 4 pi times the polarizability volume).
    pub fn alpha0_over_eps0(&self) -> Option<f64> {
        self.alpha0_volume.map(|v| 4.0 * std::f64::consts::PI * v)
    }
}

impl PermittivityModel {
    pub fn dielectric(eps_inf: f64, omega_p: f64, omega_0: f64, gamma: f64) -> Self {
        PermittivityModel { kind: MaterialKind::Dielectric, eps_inf, omega_p, omega_0, gamma }
    }

    pub fn ohmic(eps_inf: f64, omega_p: f64, gamma: f64) -> Self {
        PermittivityModel { kind: MaterialKind::OhmicConductor, eps_inf, omega_p, omega_0: 0.0, gamma }
    }

    pub fn superconductor(eps_inf: f64, omega_p: f64) -> Self {
        PermittivityModel {
            kind: MaterialKind::Superconductor,
            eps_inf,
            omega_p,
            omega_0: 0.0,
            gamma: 0.0,
        }
    }

    /// The dissipationless variant with the same remaining parameters.
    pub fn dissipationless(&self) -> Self {
        PermittivityModel::superconductor(self.eps_inf, self.omega_p)
    }

    pub fn is_conductor(&self) -> bool {
        self.kind != MaterialKind::Dielectric
    }
}

/// eps(i xi); conductors diverge at xi = 0, flagged as +infinity.
pub fn epsilon(model: &PermittivityModel, xi: f64) -> Result<f64> {
    if !(xi >= 0.0) {
        return Err(CoreError::domain("epsilon", format!("xi = {xi} must be >= 0")));
    }
    let m = model;
    let value = match m.kind {
        MaterialKind::Dielectric => {
            m.eps_inf + m.omega_p * m.omega_p / (xi * xi + m.gamma * xi + m.omega_0 * m.omega_0)
        }
        MaterialKind::OhmicConductor => {
            if xi == 0.0 {
                f64::INFINITY
            } else {
                m.eps_inf + m.omega_p * m.omega_p / (xi * xi + m.gamma * xi)
            }
        }
        MaterialKind::Superconductor => {
            if xi == 0.0 {
                f64::INFINITY
            } else {
                m.eps_inf + m.omega_p * m.omega_p / (xi * xi)
            }
        }
    };
    Ok(value)
}

/// Relative penetration depth Delta(i xi) = 1 / sqrt(eps - 1); exactly 0 at
/// xi = 0 for both conductor kinds, Delta_0 for dielectrics.
pub fn delta(model: &PermittivityModel, xi: f64) -> Result<f64> {
    Ok(delta_squared(model, xi)?.sqrt())
}

/// Delta^2 = 1/(eps - 1); the engine mostly consumes the square.
pub fn delta_squared(model: &PermittivityModel, xi: f64) -> Result<f64> {
    if !(xi >= 0.0) {
        return Err(CoreError::domain("delta", format!("xi = {xi} must be >= 0")));
    }
    if xi == 0.0 {
        return Ok(match model.kind {
            MaterialKind::Dielectric => {
                1.0 / (model.eps_inf - 1.0 + model.omega_p * model.omega_p
                    / (model.omega_0 * model.omega_0))
            }
            _ => 0.0,
        });
    }
    let e = epsilon(model, xi)?;
    Ok(1.0 / (e - 1.0))
}

/// Low-frequency scales of the model.
pub fn scales(model: &PermittivityModel) -> MaterialScales {
    let m = model;
    match m.kind {
        MaterialKind::Dielectric => MaterialScales {
            xi0: m.omega_0,
            xi0_infinite: false,
            delta0: Some(
                1.0 / (m.eps_inf - 1.0 + m.omega_p * m.omega_p / (m.omega_0 * m.omega_0)).sqrt(),
            ),
            lambda_diff: None,
            lambda_plasma: None,
        },
        MaterialKind::OhmicConductor => MaterialScales {
            xi0: m.gamma,
            xi0_infinite: false,
            delta0: None,
            lambda_diff: Some(HBAR_C * m.gamma / (m.omega_p * m.omega_p)),
            lambda_plasma: None,
        },
        MaterialKind::Superconductor => {
            let infinite = m.eps_inf <= 1.0;
            MaterialScales {
                xi0: if infinite { f64::INFINITY } else { m.omega_p / (m.eps_inf - 1.0).sqrt() },
                xi0_infinite: infinite,
                delta0: None,
                lambda_diff: None,
                lambda_plasma: Some(HBAR_C / m.omega_p),
            }
        }
    }
}

/// alpha(i xi) in units of alpha_0: omega_a^2 / (omega_a^2 + xi^2).
pub fn polarizability(atom: &AtomModel, xi: f64) -> f64 {
    let w2 = atom.omega_a * atom.omega_a;
    w2 / (w2 + xi * xi)
}

/// Built-in material presets used throughout the test suites; parameters in
/// eV match the published optical-constant fits for each material class.
pub fn material_preset(name: &str) -> Option<PermittivityModel> {
    match name {
        "silica" => Some(PermittivityModel::dielectric(1.49, 7.8, 10.0, 0.9)),
        "good-conductor" => Some(PermittivityModel::ohmic(1.0, 9.0, 0.01)),
        "poor-conductor" => Some(PermittivityModel::ohmic(3.7, 0.75, 0.118)),
        "good-superconductor" => Some(PermittivityModel::superconductor(1.0, 9.0)),
        "poor-superconductor" => Some(PermittivityModel::superconductor(3.7, 0.75)),
        _ => None,
    }
}

/// Built-in atom presets.
pub fn atom_preset(name: &str) -> Option<AtomModel> {
    match name {
        // Rb ground state: 1.6 eV dominant line, 47.4 A^3 static volume
        "rubidium" => Some(AtomModel::new(1.6, Some(0.0474))),
        _ => None,
    }
}
