//! Lambert W on the secondary branch and the derived regime function
//! W[x] = -x / W_{-1}(-x), the smallest solution of y ln y = -x.

use crate::{CoreError, Result};

const INV_E: f64 = 1.0 / std::f64::consts::E;

/// W_{-1}(x) for x in [-1/e, 0): Halley iteration from a branch-point or
/// logarithmic initial guess, polished to residual |w e^w - x| <= 1e-13 |x|.
pub fn lambert_w_minus1(x: f64) -> Result<f64> {
    if !(x >= -INV_E && x < 0.0) {
        return Err(CoreError::domain(
            "lambert_w_minus1",
            format!("x = {x} outside [-1/e, 0)"),
        ));
    }
    if (x + INV_E).abs() < 1e-16 {
        return Ok(-1.0);
    }
    let mut w = if x > -0.25 {
        // deep branch: w ~ ln(-x) - ln(-ln(-x))
        let l1 = (-x).ln();
        let l2 = (-l1).ln();
        l1 - l2 + l2 / l1
    } else {
        // near the branch point: series in p = -sqrt(2(1 + e x))
        let p = -(2.0 * (1.0 + std::f64::consts::E * x)).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    };
    for _ in 0..50 {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            break;
        }
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let dw = f / denom;
        w -= dw;
        if dw.abs() < 1e-15 * w.abs() {
            break;
        }
    }
    // final residual check
    let resid = (w * w.exp() - x).abs();
    debug_assert!(resid <= 1e-13 * x.abs(), "residual {resid} for x = {x}");
    Ok(w)
}

/// The regime function: smallest y in (0, 1/e] with y ln y = -x, i.e.
/// -x / W_{-1}(-x). Monotonically increasing on (0, 1/e]; no solution
/// exists for ln x > -1 and `NoSolution` is returned there. Values within
/// 1e-14 above 1/e are clamped to the boundary.
pub fn script_w(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(CoreError::domain("script_w", format!("x = {x} must be > 0")));
    }
    let x = if x > INV_E && x <= INV_E * (1.0 + 1e-14) { INV_E } else { x };
    if x > INV_E {
        return Err(CoreError::NoSolution { x });
    }
    let w = lambert_w_minus1(-x)?;
    Ok(-x / w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn branch_point() {
        assert_eq!(lambert_w_minus1(-INV_E).unwrap(), -1.0);
    }

    #[test]
    fn frozen_bisection_values() {
        // bisection oracle on w e^w over w in [-50, -1], 50-digit arithmetic
        assert_relative_eq!(lambert_w_minus1(-0.1).unwrap(), -3.577152063957297218, max_relative = 1e-13);
        assert_relative_eq!(lambert_w_minus1(-1e-8).unwrap(), -21.48818394400979656, max_relative = 1e-13);
        assert_relative_eq!(lambert_w_minus1(-0.35).unwrap(), -1.349717252192248833, max_relative = 1e-13);
    }

    #[test]
    fn deep_branch_asymptote() {
        // w ~ ln(-x) - ln(-ln(-x)) far down the branch
        let x = -1e-8;
        let w = lambert_w_minus1(x).unwrap();
        let l1 = (-x_f(x)).ln();
        let approx = l1 - (-l1).ln();
        assert!((w - approx).abs() / w.abs() < 0.01);
        fn x_f(x: f64) -> f64 {
            x
        }
    }

    #[test]
    fn residual_contract() {
        for &x in &[-0.3678, -0.2, -0.05, -1e-3, -1e-6, -1e-12, -1e-100] {
            let w = lambert_w_minus1(x).unwrap();
            assert!((w * w.exp() - x).abs() <= 1e-13 * x.abs(), "x = {x}");
        }
    }

    #[test]
    fn script_w_boundary_and_values() {
        assert_relative_eq!(script_w(INV_E).unwrap(), INV_E, max_relative = 1e-14);
        // y ln y = -1e-4 has smallest root 8.5711e-6 (bisection oracle)
        assert_relative_eq!(script_w(1e-4).unwrap(), 8.571099539725142376e-6, max_relative = 1e-12);
        assert!(matches!(script_w(0.5), Err(CoreError::NoSolution { .. })));
        // clamping just above the boundary
        assert!(script_w(INV_E * (1.0 + 5e-15)).is_ok());
    }

    #[test]
    fn script_w_monotone_and_consistent() {
        let mut prev = 0.0;
        for i in 1..=200 {
            let x = INV_E * i as f64 / 200.0;
            let y = script_w(x).unwrap();
            assert!(y > prev, "not increasing at x = {x}");
            prev = y;
            assert!((y * y.ln() + x).abs() < 1e-12, "y ln y != -x at x = {x}");
        }
    }
}
