//! Fixed-point Gaussian rules (Laguerre, Jacobi, Legendre and the discrete
//! summation rule for exponentially decaying series) built through the
//! Golub-Welsch algorithm, plus an adaptive two-dimensional cubature.

use crate::dd::Dd;
use crate::{CoreError, Result};

/// Which family a rule belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Laguerre,
    Jacobi,
    Legendre,
    Mdl,
}

/// Nodes and weights of one fixed-point rule.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub kind: RuleKind,
    /// (n, alpha, beta) for Jacobi / generalized Laguerre, (n, mu, h) for MDL.
    pub params: RuleParams,
}

#[derive(Debug, Clone, Copy)]
pub enum RuleParams {
    Plain { n: usize },
    Jacobi { n: usize, alpha: f64, beta: f64 },
    GenLaguerre { n: usize, alpha: f64 },
    Mdl { n: usize, mu: f64, h: f64 },
}

impl QuadratureRule {
    /// Weighted sum of `f` over the rule.
    pub fn apply(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Gaussian rule from the three-term recurrence of an orthogonal polynomial
/// family: nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix,
/// weights are mu0 times the squared first eigenvector components.
pub fn golub_welsch(
    alpha_coeffs: &[f64],
    beta_coeffs: &[f64],
    mu0: f64,
    n: usize,
) -> Result<QuadratureRule> {
    if n == 0 || alpha_coeffs.len() < n || beta_coeffs.len() < n {
        return Err(CoreError::InvalidRule(format!(
            "need {n} recurrence pairs, got {}/{}",
            alpha_coeffs.len(),
            beta_coeffs.len()
        )));
    }
    if !(mu0 > 0.0) {
        return Err(CoreError::InvalidRule(format!("total measure mu0 = {mu0} must be > 0")));
    }
    // beta_coeffs[0] is unused by convention; the rest must be positive
    if beta_coeffs[1..n].iter().any(|&b| !(b > 0.0)) {
        return Err(CoreError::InvalidRule("non-positive recurrence beta".into()));
    }
    let mut d: Vec<f64> = alpha_coeffs[..n].to_vec();
    let mut e: Vec<f64> = (1..n).map(|j| beta_coeffs[j].sqrt()).collect();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    tql_first_row(&mut d, &mut e, &mut z)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap());
    let nodes: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let weights: Vec<f64> = order.iter().map(|&i| mu0 * z[i] * z[i]).collect();
    if weights.iter().any(|&w| !(w > 0.0)) {
        return Err(CoreError::InvalidRule("constructed rule has non-positive weight".into()));
    }
    Ok(QuadratureRule { nodes, weights, kind: RuleKind::Legendre, params: RuleParams::Plain { n } })
}

/// Symmetric tridiagonal QL with implicit shifts, accumulating only the
/// first row of the eigenvector matrix.
fn tql_first_row(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(CoreError::InvalidRule("eigensolver failed to converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if r == 0.0 && m > l + 1 {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// N-point Gauss-Laguerre rule (weight e^{-x} on [0, inf)).
pub fn gauss_laguerre(n: usize) -> Result<QuadratureRule> {
    gauss_laguerre_general(n, 0.0)
}

/// Generalized Gauss-Laguerre (weight x^a e^{-x}); `a = -1/2` handles an
/// inverse-square-root endpoint factor exactly.
pub fn gauss_laguerre_general(n: usize, a: f64) -> Result<QuadratureRule> {
    if a <= -1.0 {
        return Err(CoreError::InvalidRule(format!("Laguerre alpha = {a} must be > -1")));
    }
    let alpha: Vec<f64> = (0..n).map(|j| 2.0 * j as f64 + a + 1.0).collect();
    let mut beta: Vec<f64> = (0..n).map(|j| (j as f64) * (j as f64 + a)).collect();
    if n > 0 {
        beta[0] = 0.0;
    }
    let mu0 = libm::tgamma(1.0 + a);
    let mut rule = golub_welsch(&alpha, &beta, mu0, n)?;
    rule.kind = RuleKind::Laguerre;
    rule.params = RuleParams::GenLaguerre { n, alpha: a };
    Ok(rule)
}

/// N-point Gauss-Jacobi rule on [-1, 1] for weight (1-x)^a (1+x)^b.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<QuadratureRule> {
    if a <= -1.0 || b <= -1.0 {
        return Err(CoreError::InvalidRule("Jacobi exponents must be > -1".into()));
    }
    let ab = a + b;
    let mut alpha = vec![0.0; n];
    let mut beta = vec![0.0; n];
    for j in 0..n {
        let jf = j as f64;
        if j == 0 {
            alpha[0] = (b - a) / (ab + 2.0);
        } else {
            let den = (2.0 * jf + ab) * (2.0 * jf + ab + 2.0);
            alpha[j] = (b * b - a * a) / den;
            let den2 = (2.0 * jf + ab).powi(2) * (2.0 * jf + ab + 1.0) * (2.0 * jf + ab - 1.0);
            beta[j] = 4.0 * jf * (jf + a) * (jf + b) * (jf + ab) / den2;
        }
    }
    let mu0 = f64::powf(2.0, ab + 1.0)
        * (libm::lgamma(a + 1.0) + libm::lgamma(b + 1.0) - libm::lgamma(ab + 2.0)).exp();
    let mut rule = golub_welsch(&alpha, &beta, mu0, n)?;
    rule.kind = RuleKind::Jacobi;
    rule.params = RuleParams::Jacobi { n, alpha: a, beta: b };
    Ok(rule)
}

/// Jacobi rule with alpha = -1/2, beta = 0, the weight absorbing the
/// square-root endpoint singularity of the frequency-angle integral.
pub fn gauss_jacobi_half(n: usize) -> Result<QuadratureRule> {
    gauss_jacobi(n, -0.5, 0.0)
}

/// Plain Gauss-Legendre on [-1, 1].
pub fn gauss_legendre(n: usize) -> Result<QuadratureRule> {
    let mut rule = gauss_jacobi(n, 0.0, 0.0)?;
    rule.kind = RuleKind::Legendre;
    Ok(rule)
}

/// Gaussian summation rule for primed exponentially decaying series:
///
///   sum'_{k>=0} h f(kh) e^{-mu k h}  ~=  sum_i w_i f(x_i)
///
/// (prime: the k = 0 term carries half weight), exact for f a polynomial of
/// degree <= 2N-1. The recurrence coefficients come from the geometric
/// discrete measure (whose Jacobi matrix is known in closed form) with the
/// half-weight point modification applied by a discretized Stieltjes pass
/// in double-double arithmetic; the discrete-measure Gram matrix is badly
/// conditioned in plain doubles for larger N.
pub fn mdl_rule(n: usize, mu: f64, h: f64) -> Result<QuadratureRule> {
    if !(mu > 0.0) {
        return Err(CoreError::InvalidRule(format!("decay rate mu = {mu} must be > 0")));
    }
    if !(h > 0.0) {
        return Err(CoreError::InvalidRule(format!("grid spacing h = {h} must be > 0")));
    }
    if n == 0 {
        return Err(CoreError::InvalidRule("n must be >= 1".into()));
    }
    let c = (-mu * h).exp();
    let one_minus_c = -f64::exp_m1(-mu * h);

    // Geometric measure sum_{k>=0} c^k delta_k: closed-form Jacobi matrix.
    let m = n + 2;
    let alpha: Vec<f64> = (0..m).map(|k| (k as f64 * (1.0 + c) + c) / one_minus_c).collect();
    let beta: Vec<f64> =
        (0..m).map(|k| (k as f64 * k as f64) * c / (one_minus_c * one_minus_c)).collect();
    let base = golub_welsch(&alpha, &beta, 1.0 / one_minus_c, m)?;

    // Signed compressed support: the base rule reproduces all required
    // moments of the geometric measure exactly; removing half the k = 0
    // mass gives the primed sum.
    let mut pts: Vec<f64> = base.nodes.clone();
    let mut wts: Vec<f64> = base.weights.clone();
    pts.push(0.0);
    wts.push(-0.5);

    let (a_mod, b_mod) = stieltjes_dd(&pts, &wts, n)?;
    let mut rule = golub_welsch(&a_mod, &b_mod, b_mod[0], n)?;
    for x in &mut rule.nodes {
        *x *= h;
    }
    for w in &mut rule.weights {
        *w *= h;
    }
    if rule.nodes.iter().any(|&x| x < 0.0) {
        return Err(CoreError::InvalidRule("summation rule produced a negative node".into()));
    }
    rule.kind = RuleKind::Mdl;
    rule.params = RuleParams::Mdl { n, mu, h };
    Ok(rule)
}

/// Stieltjes recurrence coefficients of a (possibly signed) discrete
/// measure, accumulated in double-double. Returns (alpha, beta) with
/// beta[0] holding the total mass.
fn stieltjes_dd(pts: &[f64], wts: &[f64], n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let k = pts.len();
    let mut p_prev = vec![Dd::ZERO; k];
    let mut p = vec![Dd::ONE; k];
    let mut a = vec![0.0; n];
    let mut b = vec![0.0; n];
    let mut nrm = Dd::ZERO;
    for i in 0..k {
        nrm = nrm.add(Dd::from(wts[i]));
    }
    b[0] = nrm.to_f64();
    if !(b[0] > 0.0) {
        return Err(CoreError::InvalidRule("modified measure has non-positive mass".into()));
    }
    for j in 0..n {
        let mut xpp = Dd::ZERO;
        for i in 0..k {
            xpp = xpp.add(Dd::from(wts[i]).mul(Dd::from(pts[i])).mul(p[i]).mul(p[i]));
        }
        a[j] = xpp.div(nrm).to_f64();
        if j == n - 1 {
            break;
        }
        let bj = if j == 0 { 0.0 } else { b[j] };
        let mut nrm_next = Dd::ZERO;
        for i in 0..k {
            let next = Dd::from(pts[i] - a[j]).mul(p[i]).sub(Dd::from(bj).mul(p_prev[i]));
            p_prev[i] = p[i];
            p[i] = next;
            nrm_next = nrm_next.add(Dd::from(wts[i]).mul(next).mul(next));
        }
        let ratio = nrm_next.div(nrm).to_f64();
        if !(ratio > 0.0) {
            return Err(CoreError::InvalidRule(format!(
                "Stieltjes breakdown at step {j}: beta = {ratio}"
            )));
        }
        b[j + 1] = ratio;
        nrm = nrm_next;
    }
    Ok((a, b))
}

// ---------------------------------------------------------------------------
// adaptive 2D cubature
// ---------------------------------------------------------------------------

/// Result of the adaptive cubature.
#[derive(Debug, Clone, Copy)]
pub struct CubatureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
struct Region {
    center: [f64; 2],
    half: [f64; 2],
    value: f64,
    error: f64,
    split_axis: usize,
}

/// Degree-7 rule with embedded degree-5 error estimate on one rectangle.
fn gm_rule(f: &mut impl FnMut(f64, f64) -> f64, c: [f64; 2], h: [f64; 2]) -> (Region, usize) {
    const L2: f64 = 0.358_568_582_800_318_1; // sqrt(9/70)
    const L3: f64 = 0.948_683_298_050_513_8; // sqrt(9/10)
    const L4: f64 = L3;
    const L5: f64 = 0.688_247_201_611_685_3; // sqrt(9/19)
    const W1: f64 = 4.0 * -3816.0 / 19683.0;
    const W2: f64 = 4.0 * 980.0 / 6561.0;
    const W3: f64 = 4.0 * 1020.0 / 19683.0;
    const W4: f64 = 4.0 * 200.0 / 19683.0;
    const W5: f64 = 6859.0 / 19683.0;
    const E1: f64 = 4.0 * -971.0 / 729.0;
    const E2: f64 = 4.0 * 245.0 / 486.0;
    const E3: f64 = 4.0 * 65.0 / 1458.0;
    const E4: f64 = 4.0 * 25.0 / 729.0;

    let fc = f(c[0], c[1]);
    let mut s2 = [0.0; 2];
    let mut s3 = [0.0; 2];
    for ax in 0..2 {
        let mut p = c;
        p[ax] = c[ax] + L2 * h[ax];
        let a = f(p[0], p[1]);
        p[ax] = c[ax] - L2 * h[ax];
        let b = f(p[0], p[1]);
        s2[ax] = a + b;
        p[ax] = c[ax] + L3 * h[ax];
        let a3 = f(p[0], p[1]);
        p[ax] = c[ax] - L3 * h[ax];
        let b3 = f(p[0], p[1]);
        s3[ax] = a3 + b3;
    }
    let mut s4 = 0.0;
    let mut s5 = 0.0;
    for &sx in &[-1.0, 1.0] {
        for &sy in &[-1.0, 1.0] {
            s4 += f(c[0] + sx * L4 * h[0], c[1] + sy * L4 * h[1]);
            s5 += f(c[0] + sx * L5 * h[0], c[1] + sy * L5 * h[1]);
        }
    }
    let scale = h[0] * h[1]; // V / 2^n
    let sum2 = s2[0] + s2[1];
    let sum3 = s3[0] + s3[1];
    let res7 = scale * (W1 * fc + W2 * sum2 + W3 * sum3 + W4 * s4 + W5 * s5);
    let res5 = scale * (E1 * fc + E2 * sum2 + E3 * sum3 + E4 * s4);

    // fourth-difference indicator decides the split direction
    let ratio = (L2 * L2) / (L3 * L3);
    let d0 = (s2[0] - 2.0 * fc - ratio * (s3[0] - 2.0 * fc)).abs();
    let d1 = (s2[1] - 2.0 * fc - ratio * (s3[1] - 2.0 * fc)).abs();
    let split_axis = if d0 >= d1 { 0 } else { 1 };

    (
        Region { center: c, half: h, value: res7, error: (res7 - res5).abs(), split_axis },
        17,
    )
}

/// Adaptive Genz-Malik cubature over `[x0,x1] x [y0,y1]`; subdivides the
/// region with the largest error contribution until the requested relative
/// tolerance or the evaluation budget is reached.
pub fn genz_malik_2d(
    mut f: impl FnMut(f64, f64) -> f64,
    region: ((f64, f64), (f64, f64)),
    rel_tol: f64,
    max_evals: usize,
) -> CubatureResult {
    let ((x0, x1), (y0, y1)) = region;
    let c = [(x0 + x1) / 2.0, (y0 + y1) / 2.0];
    let h = [(x1 - x0) / 2.0, (y1 - y0) / 2.0];
    let (first, mut evals) = gm_rule(&mut f, c, h);

    // binary heap keyed on absolute error
    let mut heap: Vec<Region> = vec![first];
    let key = |r: &Region| r.error;
    loop {
        let total_value: f64 = heap.iter().map(|r| r.value).sum();
        let total_error: f64 = heap.iter().map(|r| r.error).sum();
        if total_error <= rel_tol * total_value.abs() {
            return CubatureResult {
                value: total_value,
                error_estimate: total_error,
                evaluations: evals,
                converged: true,
            };
        }
        if evals + 34 > max_evals {
            return CubatureResult {
                value: total_value,
                error_estimate: total_error,
                evaluations: evals,
                converged: false,
            };
        }
        // pop the worst region
        let (worst_idx, _) = heap
            .iter()
            .enumerate()
            .max_by(|a, b| key(a.1).partial_cmp(&key(b.1)).unwrap())
            .unwrap();
        let worst = heap.swap_remove(worst_idx);
        let ax = worst.split_axis;
        let mut h2 = worst.half;
        h2[ax] *= 0.5;
        for &side in &[-1.0, 1.0] {
            let mut c2 = worst.center;
            c2[ax] += side * h2[ax];
            let (r, n) = gm_rule(&mut f, c2, h2);
            evals += n;
            heap.push(r);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn one_point_laguerre() {
        let r = gauss_laguerre(1).unwrap();
        assert_relative_eq!(r.nodes[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(r.weights[0], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn two_point_legendre() {
        let r = gauss_legendre(2).unwrap();
        let x = 1.0 / 3.0_f64.sqrt();
        assert_relative_eq!(r.nodes[0], -x, max_relative = 1e-14);
        assert_relative_eq!(r.nodes[1], x, max_relative = 1e-14);
        assert_relative_eq!(r.weights[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(r.weights[1], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn two_point_laguerre_nodes() {
        let r = gauss_laguerre(2).unwrap();
        assert_relative_eq!(r.nodes[0], 2.0 - 2.0_f64.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(r.nodes[1], 2.0 + 2.0_f64.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn laguerre_polynomial_exactness() {
        // degree 3 at N = 2 (exactness bound), factorial moments at N = 10
        let r = gauss_laguerre(2).unwrap();
        assert_relative_eq!(r.apply(|x| x * x * x), 6.0, max_relative = 1e-12);
        let r = gauss_laguerre(10).unwrap();
        let fact19 = (2..=19).map(|k| k as f64).product::<f64>();
        assert_relative_eq!(r.apply(|x| x.powi(19)), fact19, max_relative = 1e-12);
        // non-polynomial convergence: int e^-x cos x = 1/2
        assert!((r.apply(f64::cos) - 0.5).abs() < 1e-6);
    }

    #[test]
    fn jacobi_half_measure() {
        // int (1-x)^{-1/2} dx = 2 sqrt(2); first moment = -2 sqrt(2)/3
        let r = gauss_jacobi_half(4).unwrap();
        assert_relative_eq!(r.apply(|_| 1.0), 2.0 * 2.0_f64.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(r.apply(|x| x), 2.0 * 2.0_f64.sqrt() / 3.0, max_relative = 1e-12);
        // degree-7 monomial at N = 4
        let m7 = r.apply(|x| x.powi(7));
        let exact = exact_half_moment(7);
        assert_relative_eq!(m7, exact, max_relative = 1e-12);
    }

    /// int_{-1}^{1} (1-x)^{-1/2} x^k dx by substitution u = 1-x, binomial sum.
    fn exact_half_moment(k: u32) -> f64 {
        let mut total = 0.0;
        for j in 0..=k {
            let binom = (0..j).fold(1.0, |acc, i| acc * (k - i) as f64 / (i + 1) as f64);
            let term = binom * (-1.0_f64).powi(j as i32) * 2.0_f64.powf(j as f64 + 0.5)
                / (j as f64 + 0.5);
            total += term;
        }
        total
    }

    #[test]
    fn mdl_geometric_series() {
        // f = 1, mu = 0.4: 1/2 + e^-mu/(1-e^-mu) = coth(mu/2)/2
        let r = mdl_rule(10, 0.4, 1.0).unwrap();
        let exact = 0.5 / (0.2_f64.tanh());
        assert_relative_eq!(r.apply(|_| 1.0), exact, max_relative = 1e-12);
        // f = x, mu = 1: e^-1/(1-e^-1)^2
        let r = mdl_rule(10, 1.0, 1.0).unwrap();
        let e = (-1.0_f64).exp();
        assert_relative_eq!(r.apply(|x| x), e / (1.0 - e).powi(2), max_relative = 1e-12);
    }

    #[test]
    fn mdl_against_direct_summation() {
        // smooth decaying summand, brute-force partial sum as oracle
        let mu = 0.25;
        let f = |x: f64| 1.0 / (1.0 + 0.1 * x * x);
        let direct: f64 = (0..20_000)
            .map(|k| {
                let w = if k == 0 { 0.5 } else { 1.0 };
                w * f(k as f64) * (-mu * k as f64).exp()
            })
            .sum();
        let r = mdl_rule(10, mu, 1.0).unwrap();
        assert_relative_eq!(r.apply(f), direct, max_relative = 1e-8);
    }

    #[test]
    fn mdl_h_scaling() {
        // sum' h f(kh) e^{-mu k h} with h = 0.5: nodes/weights absorb h
        let mu = 0.8;
        let h = 0.5;
        let f = |x: f64| x * x;
        let direct: f64 = (0..10_000)
            .map(|k| {
                let w = if k == 0 { 0.5 } else { 1.0 };
                w * h * f(k as f64 * h) * (-mu * k as f64 * h).exp()
            })
            .sum();
        let r = mdl_rule(8, mu, h).unwrap();
        assert_relative_eq!(r.apply(f), direct, max_relative = 1e-11);
    }

    #[test]
    fn mdl_exactness_sweep() {
        for &(n, mu) in &[(5usize, 0.7), (12, 0.05), (20, 0.4), (40, 0.9), (20, 0.001)] {
            let r = mdl_rule(n, mu, 1.0).unwrap();
            assert!(r.weights.iter().all(|&w| w > 0.0));
            // spot-check the top exactness degree against direct summation
            let p = (2 * n - 1) as i32;
            let kmax = ((800.0 + 2.0 * n as f64 * (700.0 / mu).ln()) / mu).ceil() as usize;
            let direct: f64 = (0..kmax.min(40_000_000))
                .map(|k| {
                    let w = if k == 0 { 0.5 } else { 1.0 };
                    w * (k as f64).powi(p) * (-mu * k as f64).exp()
                })
                .sum();
            let got = r.apply(|x| x.powi(p));
            assert_relative_eq!(got, direct, max_relative = 1e-10);
        }
    }

    #[test]
    fn mdl_rejects_bad_parameters() {
        assert!(mdl_rule(8, 0.0, 1.0).is_err());
        assert!(mdl_rule(8, -1.0, 1.0).is_err());
        assert!(mdl_rule(0, 1.0, 1.0).is_err());
    }

    #[test]
    fn genz_malik_polynomials() {
        let r = genz_malik_2d(|_, _| 1.0, ((0.0, 1.0), (0.0, 1.0)), 1e-10, 10_000);
        assert_relative_eq!(r.value, 1.0, max_relative = 1e-13);
        let r = genz_malik_2d(|x, y| x * x * y * y, ((0.0, 1.0), (0.0, 1.0)), 1e-12, 10_000);
        assert_relative_eq!(r.value, 1.0 / 9.0, max_relative = 1e-12);
    }

    #[test]
    fn genz_malik_against_tensor_oracle() {
        // int over [0,6]^2 of exp(-x-y) cos(xy); 200x200 tensor Gauss-Legendre
        // gives 0.62134594094116126
        let r = genz_malik_2d(
            |x, y| (-x - y).exp() * (x * y).cos(),
            ((0.0, 6.0), (0.0, 6.0)),
            1e-9,
            200_000,
        );
        assert!(r.converged);
        assert_relative_eq!(r.value, 0.621_345_940_941_161_3, max_relative = 1e-8);
    }

    #[test]
    fn genz_malik_budget_signal() {
        let r = genz_malik_2d(
            |x, y| ((50.0 * x).sin() * (50.0 * y).cos()).abs(),
            ((0.0, 1.0), (0.0, 1.0)),
            1e-14,
            500,
        );
        assert!(!r.converged);
        assert!(r.evaluations <= 500);
        assert!(r.error_estimate > 0.0);
    }
}
