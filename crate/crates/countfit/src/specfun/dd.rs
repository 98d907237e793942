//! Double-double arithmetic: an unevaluated sum `hi + lo` carrying about 31
//! significant digits. Used for series whose terms cancel heavily.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub(crate) const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
pub(crate) const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub(crate) const LN_SQRT_2PI: Dd = Dd { hi: 0.9189385332046728, lo: -3.8782941580672414e-17 };
pub(crate) const LN_PI: Dd = Dd { hi: 1.1447298858494002, lo: 1.0265951162707826e-17 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    /// Multiplication by an exact power of two.
    #[inline]
    pub fn ldexp(self, k: i32) -> Dd {
        let f = 2f64.powi(k);
        Dd { hi: self.hi * f, lo: self.lo * f }
    }

    /// Nearest integer (ties away from zero on the leading part).
    pub fn round(self) -> Dd {
        let hi = self.hi.round();
        if hi == self.hi {
            let lo = self.lo.round();
            let (hi, lo) = quick_two_sum(hi, lo);
            Dd { hi, lo }
        } else {
            if (hi - self.hi).abs() == 0.5 && self.lo != 0.0 {
                // exact tie broken by the low word
                let h = if self.lo > 0.0 { self.hi.ceil() } else { self.hi.floor() };
                return Dd { hi: h, lo: 0.0 };
            }
            Dd { hi, lo: 0.0 }
        }
    }

    pub fn is_integer(self) -> bool {
        self.hi.fract() == 0.0 && self.lo.fract() == 0.0
    }

    pub fn exp(self) -> Dd {
        if self.hi > 709.7 {
            return Dd { hi: f64::INFINITY, lo: 0.0 };
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = (self - LN2.mul_f64(k)).ldexp(-10);
        // expm1 of the reduced argument
        let mut term = r;
        let mut s = r;
        for n in 2..=12 {
            term = term * r;
            term = term / Dd::new(n as f64);
            s = s + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..10 {
            s = s.mul_f64(2.0) + s.sqr();
        }
        let e = s.add_f64(1.0);
        // split the scaling to stay finite near the overflow edge
        let k = k as i32;
        let half = k / 2;
        e.ldexp(half).ldexp(k - half)
    }

    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut y = Dd::new(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Dd::ONE;
        }
        y
    }

    /// sin(πx) for x in double-double.
    pub fn sin_pi(self) -> Dd {
        let n = self.round();
        let r = self - n;
        let odd = {
            let m = n.hi % 2.0 + n.lo % 2.0;
            m.rem_euclid(2.0) == 1.0
        };
        let neg = r.hi < 0.0;
        let ra = r.abs();
        let v = if ra.hi <= 0.25 {
            sin_taylor(PI * ra)
        } else {
            cos_taylor(PI * (Dd::new(0.5) - ra))
        };
        let mut v = if neg { -v } else { v };
        if odd {
            v = -v;
        }
        v
    }
}

fn sin_taylor(t: Dd) -> Dd {
    let t2 = t.sqr();
    let mut term = t;
    let mut s = t;
    let mut k = 1.0;
    loop {
        term = -(term * t2) / Dd::new((k + 1.0) * (k + 2.0));
        s = s + term;
        k += 2.0;
        if term.hi.abs() < 1e-34 * s.hi.abs().max(1e-300) || k > 60.0 {
            break;
        }
    }
    s
}

fn cos_taylor(t: Dd) -> Dd {
    let t2 = t.sqr();
    let mut term = Dd::ONE;
    let mut s = Dd::ONE;
    let mut k = 0.0;
    loop {
        term = -(term * t2) / Dd::new((k + 1.0) * (k + 2.0));
        s = s + term;
        k += 2.0;
        if term.hi.abs() < 1e-34 || k > 60.0 {
            break;
        }
    }
    s
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }
}

// B_{2k} / (2k(2k-1)) as exact rationals
const STIRLING: [(f64, f64); 12] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360360.0),
    (1.0, 156.0),
    (-3617.0, 122400.0),
    (43867.0, 244188.0),
    (-174611.0, 125400.0),
    (77683.0, 5796.0),
    (-236364091.0, 1506960.0),
];

/// ln Γ(x) for x > 0.
pub(crate) fn ln_gamma(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0);
    const SHIFT: f64 = 40.0;
    if x.hi < SHIFT {
        let n = (SHIFT - x.hi).ceil() as usize;
        let mut prod = x;
        let mut z = x;
        for _ in 1..n {
            z = z.add_f64(1.0);
            prod = prod * z;
        }
        return ln_gamma(z.add_f64(1.0)) - prod.ln();
    }
    let lz = x.ln();
    let zinv = Dd::ONE / x;
    let z2 = zinv.sqr();
    let mut acc = Dd::ZERO;
    for &(num, den) in STIRLING.iter().rev() {
        acc = acc * z2 + Dd::new(num) / Dd::new(den);
    }
    (x - Dd::new(0.5)) * lz - x + LN_SQRT_2PI + acc * zinv
}

/// ln|1/Γ(x)| and its sign; `None` at the poles x = 0, −1, −2, …
pub(crate) fn ln_rgamma_signed(x: Dd) -> Option<(Dd, f64)> {
    if x.hi > 0.0 {
        return Some((-ln_gamma(x), 1.0));
    }
    if x.is_integer() {
        return None;
    }
    // 1/Γ(x) = sin(πx) Γ(1−x) / π
    let s = x.sin_pi();
    let sign = if s.hi < 0.0 { -1.0 } else { 1.0 };
    let lg = ln_gamma(Dd::ONE - x);
    Some((s.abs().ln() + lg - LN_PI, sign))
}
