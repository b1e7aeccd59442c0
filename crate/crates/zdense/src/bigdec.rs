//! Fixed-point decimal arithmetic with an explicit digit budget.
//!
//! Root refinement and embedding certification need more precision than
//! `f64` offers (the default certification tolerance is 1e-30). `Dec`
//! stores `mant * 10^-scale` with a `BigInt` mantissa; every operation
//! states the scale of its result so precision tracking stays explicit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Euclid, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Decimal fixed-point number: `mant * 10^-scale`.
#[derive(Clone, Debug)]
pub struct Dec {
    mant: BigInt,
    scale: u32,
}

fn pow10(n: u32) -> BigInt {
    BigInt::from(10u32).pow(n)
}

impl Dec {
    pub fn zero(scale: u32) -> Self {
        Dec {
            mant: BigInt::zero(),
            scale,
        }
    }

    pub fn from_i64(v: i64, scale: u32) -> Self {
        Dec {
            mant: BigInt::from(v) * pow10(scale),
            scale,
        }
    }

    pub fn from_bigint(v: &BigInt, scale: u32) -> Self {
        Dec {
            mant: v * pow10(scale),
            scale,
        }
    }

    /// Round a rational to the given scale (truncation toward zero).
    pub fn from_ratio(r: &BigRational, scale: u32) -> Self {
        let mant = (r.numer() * pow10(scale)).div_euclid(&r.denom().clone());
        Dec { mant, scale }
    }

    pub fn from_f64(v: f64, scale: u32) -> Self {
        // Route through a rational so no binary noise beyond f64's own.
        let r = BigRational::from_float(v).unwrap_or_else(BigRational::zero);
        Dec::from_ratio(&r, scale)
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Rescale, truncating extra digits.
    pub fn with_scale(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Dec {
                mant: &self.mant * pow10(scale - self.scale),
                scale,
            },
            Ordering::Less => Dec {
                mant: self.mant.div_euclid(&pow10(self.scale - scale)),
                scale,
            },
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        (
            self.with_scale(scale).mant,
            other.with_scale(scale).mant,
            scale,
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, scale) = self.aligned(other);
        Dec { mant: a + b, scale }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, scale) = self.aligned(other);
        Dec { mant: a - b, scale }
    }

    pub fn neg(&self) -> Self {
        Dec {
            mant: -&self.mant,
            scale: self.scale,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let scale = self.scale.max(other.scale);
        let wide = Dec {
            mant: &self.mant * &other.mant,
            scale: self.scale + other.scale,
        };
        wide.with_scale(scale)
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.mant.is_zero(), "division by zero Dec");
        let scale = self.scale.max(other.scale);
        let num = self.with_scale(scale).mant * pow10(scale);
        let den = other.with_scale(scale).mant;
        Dec {
            mant: num.div_euclid(&den),
            scale,
        }
    }

    pub fn abs(&self) -> Self {
        Dec {
            mant: self.mant.abs(),
            scale: self.scale,
        }
    }

    /// Integer-sqrt based square root at the operand's scale. Panics on
    /// negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.mant.is_negative(), "sqrt of negative Dec");
        let wide = &self.mant * pow10(self.scale);
        Dec {
            mant: wide.sqrt(),
            scale: self.scale,
        }
    }

    pub fn cmp_dec(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }

    pub fn to_f64(&self) -> f64 {
        let r = BigRational::new(self.mant.clone(), pow10(self.scale));
        r.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_ratio(&self) -> BigRational {
        BigRational::new(self.mant.clone(), pow10(self.scale))
    }

    /// 10^-k at this scale, handy for tolerance thresholds.
    pub fn eps(k: u32, scale: u32) -> Self {
        assert!(k <= scale);
        Dec {
            mant: pow10(scale - k),
            scale,
        }
    }

    /// Full-precision decimal string, e.g. "-1.41421356...".
    pub fn to_decimal_string(&self) -> String {
        let neg = self.mant.is_negative();
        let abs = self.mant.abs();
        let (int, frac) = abs.div_rem(&pow10(self.scale));
        let frac_str = format!("{:0width$}", frac, width = self.scale as usize);
        let frac_trimmed = frac_str.trim_end_matches('0');
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push_str(&int.to_string());
        if !frac_trimmed.is_empty() {
            s.push('.');
            s.push_str(frac_trimmed);
        }
        s
    }
}

impl fmt::Display for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

/// Complex number with `Dec` real and imaginary parts.
#[derive(Clone, Debug)]
pub struct CDec {
    pub re: Dec,
    pub im: Dec,
}

impl CDec {
    pub fn new(re: Dec, im: Dec) -> Self {
        CDec { re, im }
    }

    pub fn zero(scale: u32) -> Self {
        CDec {
            re: Dec::zero(scale),
            im: Dec::zero(scale),
        }
    }

    pub fn one(scale: u32) -> Self {
        CDec {
            re: Dec::from_i64(1, scale),
            im: Dec::zero(scale),
        }
    }

    pub fn from_real(re: Dec) -> Self {
        let scale = re.scale();
        CDec {
            re,
            im: Dec::zero(scale),
        }
    }

    pub fn from_f64(re: f64, im: f64, scale: u32) -> Self {
        CDec {
            re: Dec::from_f64(re, scale),
            im: Dec::from_f64(im, scale),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        CDec {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CDec {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        CDec {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        let num = self.mul(&o.conj());
        CDec {
            re: num.re.div(&d),
            im: num.im.div(&d),
        }
    }

    pub fn conj(&self) -> Self {
        CDec {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> Self {
        CDec {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn norm_sqr(&self) -> Dec {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> Dec {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn powi(&self, n: i64) -> Self {
        let scale = self.re.scale();
        if n == 0 {
            return CDec::one(scale);
        }
        let base = if n < 0 {
            CDec::one(scale).div(self)
        } else {
            self.clone()
        };
        let mut acc = CDec::one(scale);
        let mut b = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_two() {
        let two = Dec::from_i64(2, 40);
        let r = two.sqrt();
        let back = r.mul(&r);
        let err = back.sub(&two).abs();
        assert!(err.cmp_dec(&Dec::eps(38, 40)) == Ordering::Less);
    }

    #[test]
    fn decimal_string_roundtrip() {
        let x = Dec::from_ratio(&BigRational::new(BigInt::from(-1), BigInt::from(8)), 10);
        assert_eq!(x.to_decimal_string(), "-0.125");
    }

    #[test]
    fn complex_powers() {
        let i = CDec::from_f64(0.0, 1.0, 30);
        let m1 = i.powi(2);
        assert!((m1.re.to_f64() + 1.0).abs() < 1e-25);
        assert!(m1.im.to_f64().abs() < 1e-25);
        let inv = i.powi(-1);
        assert!((inv.im.to_f64() + 1.0).abs() < 1e-25);
    }

    #[test]
    fn division() {
        let a = Dec::from_i64(1, 30);
        let b = Dec::from_i64(3, 30);
        let q = a.div(&b);
        let prod = q.mul(&b);
        assert!(prod.sub(&a).abs().cmp_dec(&Dec::eps(28, 30)) == Ordering::Less);
    }
}
