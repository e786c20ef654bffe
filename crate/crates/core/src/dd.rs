//! Minimal double-double arithmetic (~31 significant digits).
//!
//! Used for the extended-precision Bessel backend and for the
//! recurrence-coefficient build of the discrete summation rules, where
//! plain doubles would lose the last few digits. Only the operations the
//! crate actually needs are implemented.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, other: f64) -> Dd {
        let (s, e) = two_sum(self.hi, other);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p, e) = two_prod(self.hi, other);
        let e = e + self.lo * other;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q2));
        let q3 = r2.hi / other.hi;
        Dd::new(q1, q2).add_f64(q3)
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    /// exp for |x| up to ~700; argument reduction by powers of two around
    /// exp(hi) would lose accuracy, so reduce with ln 2 and a short Taylor
    /// series.
    pub fn exp(self) -> Dd {
        const LN2_HI: f64 = std::f64::consts::LN_2;
        const LN2_LO: f64 = 2.319_046_813_846_299_6e-17;
        if self.hi > 709.0 {
            return Dd::from(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2_HI).round();
        let r = self
            .sub(Dd::new(LN2_HI, LN2_LO).mul_f64(k));
        // Taylor on |r| <= ln2/2
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for n in 1..30 {
            term = term.mul(r).div(Dd::from(n as f64));
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        // scale by 2^k exactly
        let scale = f64::powi(2.0, k as i32);
        sum.mul_f64(scale)
    }

    /// Natural log via a double seed plus one Newton refinement.
    pub fn ln(self) -> Dd {
        let a = self.hi.ln();
        let a_dd = Dd::from(a);
        // a' = a + x*exp(-a) - 1
        let corr = self.mul(a_dd.neg().exp()).add_f64(-1.0);
        a_dd.add(corr)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// ln Gamma(x) for x > 0 in double-double precision: shift x above 25 with
/// the recurrence, then a Stirling series with Bernoulli coefficients.
pub(crate) fn lngamma(x: Dd) -> Dd {
    // Bernoulli(2n) / (2n (2n-1)) for the Stirling tail
    const STIRLING: [f64; 13] = [
        8.333333333333333e-2,
        -2.777777777777778e-3,
        7.936507936507937e-4,
        -5.952380952380953e-4,
        8.417508417508418e-4,
        -1.917526917526918e-3,
        6.410256410256410e-3,
        -2.955065359477124e-2,
        1.796443723688306e-1,
        -1.392432216905901,
        13.40286404416839,
        -156.8482846260020,
        2193.103333333333,
    ];
    let mut shift = Dd::ZERO;
    let mut z = x;
    while z.hi < 25.0 {
        shift = shift.add(z.ln());
        z = z.add_f64(1.0);
    }
    let half_ln_2pi = Dd::new(0.918_938_533_204_672_7, 3.907_116_928_386_936e-17);
    let zinv2 = z.recip().mul(z.recip());
    let mut tail = Dd::ZERO;
    let mut pw = z.recip();
    for c in STIRLING {
        tail = tail.add(pw.mul_f64(c));
        pw = pw.mul(zinv2);
    }
    // (z - 1/2) ln z - z + ln sqrt(2 pi) + tail - shift
    z.add_f64(-0.5)
        .mul(z.ln())
        .sub(z)
        .add(half_ln_2pi)
        .add(tail)
        .sub(shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_div_roundtrip() {
        let a = Dd::new(std::f64::consts::PI, 1.2246467991473532e-16);
        let b = Dd::from(7.0).recip();
        let c = a.mul(b).div(b);
        assert!((c.sub(a)).to_f64().abs() < 1e-30);
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &x in &[0.1, 1.0, 10.5, -3.25, 300.0, -600.0] {
            let d = Dd::from(x);
            let r = d.exp().ln();
            assert!(
                r.sub(d).to_f64().abs() < 1e-28 * (1.0 + x.abs()),
                "x = {x}, err = {}",
                r.sub(d).to_f64()
            );
        }
    }

    #[test]
    fn lngamma_known_values() {
        // Gamma(5) = 24, Gamma(0.5) = sqrt(pi)
        let g5 = lngamma(Dd::from(5.0)).to_f64();
        assert!((g5 - 24f64.ln()).abs() < 1e-28);
        let gh = lngamma(Dd::from(0.5)).to_f64();
        assert!((gh - (std::f64::consts::PI.sqrt()).ln()).abs() < 1e-15);
    }
}
