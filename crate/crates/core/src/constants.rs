//! Physical constants and unit conversions (CODATA 2018).

/// hbar * c in eV nm.
pub const HBAR_C: f64 = 197.326_980_4;

/// Boltzmann constant in eV / K.
pub const K_B: f64 = 8.617_333_262e-5;

/// One eV in Joules.
pub const EV_TO_JOULE: f64 = 1.602_176_634e-19;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// gamma-tilde = e^gamma_E / 2, the constant entering the small-argument
/// form K_0(x) ~ -ln(x * GAMMA_TILDE).
pub const GAMMA_TILDE: f64 = 0.890_536_208_995_099_0;

/// Reduced Wien wavelength hbar c / (2 pi k_B T) in nm.
pub fn thermal_wavelength(temperature_k: f64) -> f64 {
    HBAR_C / (2.0 * std::f64::consts::PI * K_B * temperature_k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_tilde_value() {
        assert!((GAMMA_TILDE - (EULER_GAMMA.exp() / 2.0)).abs() < 1e-15);
    }

    #[test]
    fn wien_wavelength_reference_points() {
        // 91.1 um at 4 K, 1.21 um at room temperature
        assert!((thermal_wavelength(4.0) / 91_111.6 - 1.0).abs() < 1e-3);
        assert!((thermal_wavelength(300.0) / 1214.8 - 1.0).abs() < 1e-3);
    }
}
