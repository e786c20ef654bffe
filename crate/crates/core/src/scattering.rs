//! Exact scattering coefficients of the hollow-core cylinder in
//! dimensionless variables, their shell auxiliary functions, and the
//! thin-wire closed forms used as oracles.
//!
//! All Bessel content enters through ratios of exponentially scaled
//! functions with the exponents cancelled analytically (log-space
//! differences), so the assembly cannot over- or underflow even at extreme
//! orders. Divisions are arranged so that every denominator is a
//! "k-type" bracket bounded away from zero; the raw form degenerates at
//! zeta = 0 where the wave numbers inside and outside coincide.

use crate::bessel::ik_log;
use crate::constants::HBAR_C;
use crate::materials::{delta_squared, scales, MaterialKind, MaterialScales, PermittivityModel};
use crate::{CoreError, Result};

/// Hollow cylinder: outer radius, inner radius (nm).
#[derive(Debug, Clone, Copy)]
pub struct ShellGeometry {
    r0: f64,
    ri: f64,
}

impl ShellGeometry {
    pub fn new(r0: f64, ri: f64) -> Result<Self> {
        if !(r0 > 0.0) || !(ri >= 0.0) || ri >= r0 {
            return Err(CoreError::domain(
                "geometry",
                format!("need 0 <= Ri < R0, got Ri = {ri}, R0 = {r0}"),
            ));
        }
        Ok(ShellGeometry { r0, ri })
    }

    pub fn from_chi(r0: f64, chi: f64) -> Result<Self> {
        Self::new(r0, chi * r0)
    }

    pub fn from_thickness(r0: f64, d: f64) -> Result<Self> {
        Self::new(r0, r0 - d)
    }

    pub fn full_cylinder(r0: f64) -> Result<Self> {
        Self::new(r0, 0.0)
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn ri(&self) -> f64 {
        self.ri
    }

    /// Radius ratio chi = Ri / R0 in [0, 1).
    pub fn chi(&self) -> f64 {
        self.ri / self.r0
    }

    /// Shell thickness d = R0 - Ri.
    pub fn thickness(&self) -> f64 {
        self.r0 - self.ri
    }
}

/// One evaluation point of the dimensionless integrand: eta = kappa L,
/// zeta in [0, 1] with xi L / c = zeta eta, aspect ratio s = R0 / L, and
/// (possibly non-integer) azimuthal order m.
#[derive(Debug, Clone, Copy)]
pub struct ScatterPoint {
    pub eta: f64,
    pub zeta: f64,
    pub s: f64,
    pub m: f64,
}

impl ScatterPoint {
    pub fn new(eta: f64, zeta: f64, s: f64, m: f64) -> Self {
        ScatterPoint { eta, zeta, s, m }
    }

    /// Imaginary frequency xi in eV for separation `l` in nm.
    pub fn xi(&self, l: f64) -> f64 {
        self.zeta * self.eta * HBAR_C / l
    }
}

/// The three scattering amplitudes at one point.
#[derive(Debug, Clone, Copy)]
pub struct ScatterCoeffs {
    pub r_nn: f64,
    pub r_mm: f64,
    pub r_mn: f64,
}

/// Shell auxiliary functions; they all tend to one as Ri -> 0.
#[derive(Debug, Clone, Copy)]
pub struct AuxiliaryFunctions {
    pub phi_eps: f64,
    pub phi_1: f64,
    pub beta: f64,
    pub beta_tilde: f64,
    pub mu: f64,
    pub pi_21: f64,
    pub pi_22: f64,
    pub pi_12: f64,
    pub pi_0: f64,
}

/// zeta^2 / Delta^2 with the analytic zeta -> 0 limit per material class
/// (0 for dielectrics and ohmic conductors, (L / (lambda_p eta))^2 for the
/// dissipationless conductor whose Delta is linear in frequency).
fn zeta2_over_delta2(model: &PermittivityModel, eta: f64, zeta: f64, l: f64) -> Result<f64> {
    if zeta > 0.0 {
        let xi = zeta * eta * HBAR_C / l;
        return Ok(zeta * zeta / delta_squared(model, xi)?);
    }
    Ok(match model.kind {
        MaterialKind::Superconductor => {
            let lp = HBAR_C / model.omega_p;
            (l / (lp * eta)).powi(2)
        }
        _ => 0.0,
    })
}

/// Everything the coefficient assembly needs at one point; shared by the
/// coefficient and auxiliary-function entry points.
struct Workspace {
    inv_eps: f64, // 1/eps = Delta^2/(1+Delta^2)
    ai: f64,      // (eta_e/eta) i_m(eta s)/i_m(eta_e s)
    ak: f64,      // (eta_e/eta) k_m(eta s)/i_m(eta_e s)
    x2e: f64,     // X^2/eps at the outer radius
    xe: f64,      // X/eps at the outer radius
    beta: f64,
    beta_tilde: f64,
    mu: f64,
    phi_1: f64,
    phi_eps: f64,
    h_xin2: f64, // X_in^2/(D1 D2)
    g_hat: f64,  // G/(D1 D2)
    num_pi: f64, // shared numerator of all Pi functions
}

const DEGENERACY_FLOOR: f64 = 1e-300;

fn check_denominator(op: &'static str, v: f64) -> Result<f64> {
    if !v.is_finite() || v.abs() < DEGENERACY_FLOOR {
        return Err(CoreError::Degenerate { op, value: v });
    }
    Ok(v)
}

fn build_workspace(
    geom: &ShellGeometry,
    model: &PermittivityModel,
    pt: &ScatterPoint,
    l: f64,
) -> Result<Workspace> {
    let (eta, zeta, s, m) = (pt.eta, pt.zeta, pt.s, pt.m);
    if !(eta > 0.0) || !(0.0..=1.0).contains(&zeta) || !(s > 0.0) || !(m >= 0.0) {
        return Err(CoreError::domain(
            "scattering",
            format!("invalid point eta={eta} zeta={zeta} s={s} m={m}"),
        ));
    }
    let d2 = delta_squared(model, pt.xi(l))?;
    let z = zeta2_over_delta2(model, eta, zeta, l)?;
    let inv_eps = d2 / (1.0 + d2);
    let eta_e = eta * (1.0 + z).sqrt();
    let ratio = eta_e / eta;
    let xo = eta * s;
    let xoe = eta_e * s;

    let out = ik_log(m, xo)?;
    let out_e = ik_log(m, xoe)?;
    let ai = ratio * out.di / out_e.di;
    let ak = ratio * out.dk / out_e.di;
    let m_out = if m > 0.0 { (m / xoe) / out_e.di } else { 0.0 };
    let one_minus_z2 = (1.0 - zeta * zeta).max(0.0);
    let x2e = z * one_minus_z2 * m_out * m_out / (1.0 + d2);
    let xe = zeta * one_minus_z2.sqrt() * m_out / (1.0 + d2);

    let chi = geom.chi();
    if chi == 0.0 {
        return Ok(Workspace {
            inv_eps,
            ai,
            ak,
            x2e,
            xe,
            beta: 1.0,
            beta_tilde: 1.0,
            mu: 1.0,
            phi_1: 1.0,
            phi_eps: 1.0,
            h_xin2: 0.0,
            g_hat: 0.0,
            num_pi: 1.0,
        });
    }

    let xi_in = eta * s * chi;
    let xie = eta_e * s * chi;
    let in_e = ik_log(m, xie)?;
    let inn = ik_log(m, xi_in)?;
    // T = [I(in_e)/I(out_e)] / [K(in_e)/K(out_e)], in (0, 1)
    let t = (in_e.ln_i - out_e.ln_i - in_e.ln_k + out_e.ln_k).exp();
    let one_minus_t = check_denominator("scattering aux (1 - T)", 1.0 - t)?;
    let b_out = out_e.dk / out_e.di;
    let a_in = in_e.di / in_e.dk;
    let beta = (1.0 - b_out * t) / one_minus_t;
    let beta_tilde = (1.0 - a_in * t) / one_minus_t;
    // mu - beta_tilde beta collapses analytically; the direct difference
    // cancels catastrophically for thick shells (T -> 0)
    let mu_excess = -t * (1.0 - a_in) * (1.0 - b_out) / (one_minus_t * one_minus_t);
    let mu = beta_tilde * beta + mu_excess;

    let w_in = ratio * inn.di / in_e.dk;
    let d1 = check_denominator("scattering aux D1", beta_tilde - w_in)?;
    let d2e = check_denominator("scattering aux D2", beta_tilde - w_in * inv_eps)?;
    let phi_1 = (mu - beta * w_in) / d1;
    let phi_eps = (mu - beta * w_in * inv_eps) / d2e;

    let m_in = if m > 0.0 { (m / xie) / in_e.dk } else { 0.0 };
    let h_xin2 = z * one_minus_z2 * m_in * m_in / ((1.0 + d2) * d1 * d2e);
    let g_hat = (1.0 / chi) * (out_e.di / in_e.dk) * mu_excess / (d1 * d2e);
    let num_pi = 1.0 + h_xin2 - 2.0 * g_hat;

    Ok(Workspace {
        inv_eps,
        ai,
        ak,
        x2e,
        xe,
        beta,
        beta_tilde,
        mu,
        phi_1,
        phi_eps,
        h_xin2,
        g_hat,
        num_pi,
    })
}

/// The nine shell auxiliary functions at one point.
pub fn auxiliary_functions(
    geom: &ShellGeometry,
    model: &PermittivityModel,
    pt: &ScatterPoint,
    l: f64,
) -> Result<AuxiliaryFunctions> {
    let w = build_workspace(geom, model, pt, l)?;
    let bk1 = w.phi_1 - w.ak;
    let bke = w.phi_eps - w.ak * w.inv_eps;
    let r_of = |bi: f64, bj_scaled: f64, den_i: f64, den_j: f64| {
        (w.beta - bi) * (w.beta - bj_scaled) / (den_i * den_j)
    };
    // Pi^{ij}: x^{(i)} pairs with the Phi^(1) bracket, x^{(j)} with Phi^(eps)
    let pi_21 = w.num_pi / (1.0 + w.h_xin2 * r_of(w.ak, w.ai * w.inv_eps, bk1, w.phi_eps - w.ai * w.inv_eps));
    let pi_22 = w.num_pi / (1.0 + w.h_xin2 * r_of(w.ak, w.ak * w.inv_eps, bk1, bke));
    let pi_12 = w.num_pi / (1.0 + w.h_xin2 * r_of(w.ai, w.ak * w.inv_eps, w.phi_1 - w.ai, bke));
    let pi_0 = w.num_pi / (1.0 + w.h_xin2 - w.g_hat);
    Ok(AuxiliaryFunctions {
        phi_eps: w.phi_eps,
        phi_1: w.phi_1,
        beta: w.beta,
        beta_tilde: w.beta_tilde,
        mu: w.mu,
        pi_21,
        pi_22,
        pi_12,
        pi_0,
    })
}

/// Exact scattering coefficients at one point. `m = 0` decouples the
/// polarizations and the cross coefficient vanishes identically.
pub fn coefficients(
    geom: &ShellGeometry,
    model: &PermittivityModel,
    pt: &ScatterPoint,
    l: f64,
) -> Result<ScatterCoeffs> {
    let w = build_workspace(geom, model, pt, l)?;
    let bk1 = check_denominator("scattering bracket (phi1 - Ak)", w.phi_1 - w.ak)?;
    let bke = check_denominator("scattering bracket (phi_eps - Ak/eps)", w.phi_eps - w.ak * w.inv_eps)?;

    // NN channel: every Pi division is expanded so the near-degenerate
    // i-type brackets cancel analytically.
    let nn_num = (w.phi_eps - w.ai * w.inv_eps)
        + w.h_xin2 * (w.beta - w.ak) * (w.beta - w.ai * w.inv_eps) / bk1
        + w.num_pi * w.x2e / bk1;
    let nn_den = (w.phi_eps - w.ak * w.inv_eps)
        + w.h_xin2 * (w.beta - w.ak) * (w.beta - w.ak * w.inv_eps) / bk1
        + w.num_pi * w.x2e / bk1;
    let r_nn = nn_num / check_denominator("scattering NN denominator", nn_den)?;

    let mm_num = (w.phi_1 - w.ai)
        + w.h_xin2 * (w.beta - w.ai) * (w.beta - w.ak * w.inv_eps) / bke
        + w.num_pi * w.x2e / bke;
    let mm_den = (w.phi_1 - w.ak)
        + w.h_xin2 * (w.beta - w.ak) * (w.beta - w.ak * w.inv_eps) / bke
        + w.num_pi * w.x2e / bke;
    let r_mm = mm_num / check_denominator("scattering MM denominator", mm_den)?;

    let r_mn = if pt.m > 0.0 && w.xe != 0.0 {
        let inv_pi0_num = 1.0 + w.h_xin2 - w.g_hat; // num_pi / Pi^0
        let mn_num = w.xe * (w.ai - w.ak) * inv_pi0_num / (bke * bk1);
        let r22 = (w.beta - w.ak) * (w.beta - w.ak * w.inv_eps) / (bk1 * bke);
        let mn_den = (1.0 + w.h_xin2 * r22) + w.num_pi * w.x2e / (bke * bk1);
        -mn_num / check_denominator("scattering MN denominator", mn_den)?
    } else {
        0.0
    };
    Ok(ScatterCoeffs { r_nn, r_mm, r_mn })
}

/// Thin-wire closed forms: the m = 0 coefficient keeps only its logarithmic
/// structure, the m >= 1 coefficients share one shell prefactor. Intended
/// for s << 1; no gate is enforced.
pub fn thin_wire_coefficients(
    geom: &ShellGeometry,
    model: &PermittivityModel,
    pt: &ScatterPoint,
    l: f64,
) -> Result<ScatterCoeffs> {
    let chi = geom.chi();
    let d2 = delta_squared(model, pt.xi(l))?;
    let (eta, zeta, s) = (pt.eta, pt.zeta, pt.s);
    if pt.m == 0.0 {
        let lg = (eta * s * crate::constants::GAMMA_TILDE).ln();
        let es2 = (eta * s) * (eta * s);
        let r_nn = es2 * lg / (es2 * lg - 2.0 * d2 / (1.0 - chi * chi));
        return Ok(ScatterCoeffs { r_nn, r_mm: 0.0, r_mn: 0.0 });
    }
    let chi2m = chi.powf(2.0 * pt.m);
    let opd = 1.0 + 2.0 * d2;
    let pref = (1.0 - chi2m) / (1.0 - chi2m / (opd * opd)) / opd;
    let one_minus_z2 = 1.0 - zeta * zeta;
    Ok(ScatterCoeffs {
        r_nn: pref * one_minus_z2,
        r_mm: -pref * zeta * zeta,
        r_mn: -pref * zeta * one_minus_z2.max(0.0).sqrt(),
    })
}

/// The shell renormalization of the low-frequency scales:
/// Delta_0 and lambda_p grow by 1/sqrt(1 - chi^2), lambda_D by 1/(1 - chi^2).
pub fn renormalized_scales(geom: &ShellGeometry, sc: &MaterialScales) -> MaterialScales {
    let f = 1.0 - geom.chi() * geom.chi();
    MaterialScales {
        xi0: sc.xi0,
        xi0_infinite: sc.xi0_infinite,
        delta0: sc.delta0.map(|d| d / f.sqrt()),
        lambda_diff: sc.lambda_diff.map(|l| l / f),
        lambda_plasma: sc.lambda_plasma.map(|l| l / f.sqrt()),
    }
}

/// Convenience: renormalized scales straight from the model.
pub fn renormalized_model_scales(geom: &ShellGeometry, model: &PermittivityModel) -> MaterialScales {
    renormalized_scales(geom, &scales(model))
}
