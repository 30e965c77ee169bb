//! Double-double arithmetic: a value is the unevaluated sum `hi + lo` of two
//! `f64`s with non-overlapping mantissas, giving roughly 106 bits (about 31
//! significant decimal digits) of working precision.
//!
//! The algorithms are the classical error-free transformations (Dekker split,
//! Knuth two-sum) as used in the QD library. Every arithmetic op here has
//! relative error at most `4 * EPS`; `ln` returns an explicit absolute error
//! bound alongside its value.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Unit roundoff of the format: 2^-104.
pub const EPS: f64 = 4.93e-32;

/// Per-operation relative error bound for `+ - * /` on normalized values.
pub const OP_REL_ERR: f64 = 2.0e-31;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b| or a == 0
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    // Veltkamp split into two 26-bit halves; rescale to dodge overflow.
    if a.abs() > 6.69692879491417e299 {
        let a = a * (1.0 / 268435456.0); // 2^-28, exact
        let t = 134217729.0 * a;
        let hi = t - (t - a);
        let lo = a - hi;
        (hi * 268435456.0, lo * 268435456.0) // 2^28
    } else {
        let t = 134217729.0 * a; // 2^27 + 1
        let hi = t - (t - a);
        (hi, a - hi)
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };
    /// ln 2 to full working precision.
    pub const LN_2: Self = Self {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };
    /// ln(2 pi) to full working precision.
    pub const LN_2PI: Self = Self {
        hi: 1.837_877_066_409_345_6,
        lo: -7.756_588_316_134_483e-17,
    };
    /// pi to full working precision.
    pub const PI: Self = Self {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    pub fn from_u64(x: u64) -> Self {
        let hi = x as f64;
        let lo = (x as i128 - hi as i128) as f64;
        Self::new(hi, lo)
    }

    pub fn from_i64(x: i64) -> Self {
        let hi = x as f64;
        let lo = (x as i128 - hi as i128) as f64;
        Self::new(hi, lo)
    }

    /// Exact conversion of an integer with at most 106 significant bits.
    fn from_u128_exact(x: u128) -> Self {
        let hi = x as f64;
        debug_assert!(hi < 2.0f64.powi(127));
        let rem = if hi >= x as f64 && hi as u128 >= x {
            -((hi as u128 - x) as f64)
        } else {
            (x - hi as u128) as f64
        };
        Self::new(hi, rem)
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    /// Multiply by 2^k exactly.
    pub fn scale_pow2(self, k: i32) -> Self {
        let mut v = self;
        let mut k = k;
        while k > 511 {
            v = Self {
                hi: v.hi * 2.0f64.powi(511),
                lo: v.lo * 2.0f64.powi(511),
            };
            k -= 511;
        }
        while k < -511 {
            v = Self {
                hi: v.hi * 2.0f64.powi(-511),
                lo: v.lo * 2.0f64.powi(-511),
            };
            k += 511;
        }
        Self {
            hi: v.hi * 2.0f64.powi(k),
            lo: v.lo * 2.0f64.powi(k),
        }
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    /// Integer power by binary exponentiation.
    pub fn powi(self, n: u64) -> Self {
        let mut base = self;
        let mut n = n;
        let mut acc = Self::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    /// Natural logarithm with a proven absolute error bound.
    ///
    /// Reduction: x = f * 2^e with f in [2/3, 4/3), then the atanh series
    /// ln f = 2 * sum t^(2j+1)/(2j+1) with t = (f-1)/(f+1), |t| <= 0.2.
    /// 25 terms leave a tail below 0.2^53/(1-t^2) < 1e-36; the returned bound
    /// covers the tail, the rounding of ~130 ops, and the error in LN_2.
    pub fn ln(self) -> (Self, f64) {
        assert!(
            self.hi > 0.0 && self.hi.is_normal(),
            "ln requires a positive normal value"
        );
        let bits = self.hi.to_bits();
        let mut e = ((bits >> 52) & 0x7ff) as i32 - 1023;
        let mut f = self.scale_pow2(-e);
        if f.hi >= 4.0 / 3.0 {
            f = f.scale_pow2(-1);
            e += 1;
        }
        let t = (f - Self::ONE) / (f + Self::ONE);
        let t2 = t * t;
        let mut acc = Self::ZERO;
        let mut tp = t;
        for j in 0..25u64 {
            acc = acc + tp / Self::from_u64(2 * j + 1);
            tp = tp * t2;
        }
        let res = acc.scale_pow2(1) + Self::LN_2 * Self::from_i64(e as i64);
        let err = 1e-36 + (e.unsigned_abs() as f64) * 1.5e-31 + (1.0 + res.hi.abs()) * 1.5e-29;
        (res, err)
    }

    /// Natural logarithm of a positive big integer, with error bound.
    pub fn ln_big(x: &BigUint) -> (Self, f64) {
        assert!(!x.is_zero(), "ln_big requires a positive integer");
        let bits = x.bits();
        if bits <= 106 {
            return Self::from_u128_exact(x.to_u128().expect("fits in u128")).ln();
        }
        let shift = bits - 106;
        let top = (x >> shift).to_u128().expect("106 bits fit in u128");
        let (ln_top, e1) = Self::from_u128_exact(top).ln();
        let res = ln_top + Self::LN_2 * Self::from_u64(shift);
        // truncation of the low bits contributes at most 2^-105 to ln
        let err = e1 + 2.5e-32 + (shift as f64) * 1.5e-31 + (1.0 + res.hi.abs()) * 5e-31;
        (res, err)
    }

    /// Exact decimal rendering with `sig` significant digits (round half up).
    pub fn to_decimal_string(self, sig: usize) -> String {
        assert!((1..=40).contains(&sig));
        if self.hi == 0.0 && self.lo == 0.0 {
            return "0".to_string();
        }
        let neg = self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0);
        let v = self.abs();
        let (num, e2) = v.to_dyadic();
        debug_assert!(num.is_positive());

        // first guess at floor(log10(v)), then correct by checking digit count
        let mut d10 = v.hi.abs().log10().floor() as i64;
        loop {
            let s = sig as i64 - 1 - d10;
            let digits = round_scaled(&num, e2, s);
            let ds = digits.to_string();
            let len = ds.len() as i64;
            if len == sig as i64 {
                return format_digits(&ds, d10, neg);
            }
            if len > sig as i64 {
                d10 += len - sig as i64;
            } else {
                d10 -= sig as i64 - len;
            }
        }
    }

    /// Exact value as (integer numerator, base-2 exponent): self = num * 2^e2.
    fn to_dyadic(self) -> (BigInt, i64) {
        let (m1, e1) = dyadic_f64(self.hi);
        if self.lo == 0.0 {
            return (m1, e1);
        }
        let (m2, e2) = dyadic_f64(self.lo);
        let e = e1.min(e2);
        (
            (m1 << (e1 - e) as u32) + (m2 << (e2 - e) as u32),
            e,
        )
    }
}

/// f64 as exact integer times power of two.
fn dyadic_f64(x: f64) -> (BigInt, i64) {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, e) = if exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp - 1075)
    };
    (BigInt::from(sign) * BigInt::from(mant), e)
}

/// round(num * 2^e2 * 10^s) with round-half-up, all exact.
fn round_scaled(num: &BigInt, e2: i64, s: i64) -> BigInt {
    let ten = BigInt::from(10u32);
    let mut n = num.clone();
    let mut d = BigInt::one();
    if s >= 0 {
        n *= ten.pow(s as u32);
    } else {
        d *= ten.pow((-s) as u32);
    }
    if e2 >= 0 {
        n <<= e2 as u32;
    } else {
        d <<= (-e2) as u32;
    }
    (n * 2 + &d) / (d * 2)
}

fn format_digits(ds: &str, d10: i64, neg: bool) -> String {
    let sign = if neg { "-" } else { "" };
    let sig = ds.len() as i64;
    if d10 >= 0 && d10 < sig {
        let (int_part, frac) = ds.split_at((d10 + 1) as usize);
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    } else if (-4..0).contains(&d10) {
        let zeros = "0".repeat((-d10 - 1) as usize);
        format!("{sign}0.{zeros}{ds}")
    } else {
        let (first, rest) = ds.split_at(1);
        format!("{sign}{first}.{rest}e{d10}")
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(32))
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }
}

impl From<u32> for DoubleDouble {
    fn from(x: u32) -> Self {
        Self {
            hi: x as f64,
            lo: 0.0,
        }
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        // normalized components compare lexicographically
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Self { hi, lo }
    }
}

impl Add<f64> for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Sub<f64> for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: f64) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, rhs);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * rhs);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * q1;
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * q2;
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Self { hi: s, lo: e } + q3
    }
}

impl Div<f64> for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self / Self::from(rhs)
    }
}

/// Sum of natural logs of 2..=n (that is, ln n!) for exact big factorials.
pub fn ln_factorial_big(n: u64) -> (DoubleDouble, f64) {
    let mut f = BigUint::one();
    for k in 2..=n {
        f *= k;
    }
    DoubleDouble::ln_big(&f)
}

/// ln of a signed big integer magnitude.
pub fn ln_big_abs(x: &BigInt) -> (DoubleDouble, f64) {
    assert!(!x.is_zero());
    let mag = match x.sign() {
        Sign::Minus => (-x).to_biguint().unwrap(),
        _ => x.to_biguint().unwrap(),
    };
    DoubleDouble::ln_big(&mag)
}
