//! Golden-ratio arithmetic: exact in `Z[tau]` and fixed-point over big integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b*tau` with `tau^2 = tau + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Golden {
    pub a: BigInt,
    pub b: BigInt,
}

impl Golden {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Golden { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn from_int(a: BigInt) -> Self {
        Golden { a, b: BigInt::zero() }
    }

    pub fn tau() -> Self {
        Self::new(0, 1)
    }

    /// `tau^2 = 1 + tau`.
    pub fn tau_sq() -> Self {
        Self::new(1, 1)
    }

    /// `tau * sqrt5 = tau + 2`.
    pub fn tau_sqrt5() -> Self {
        Self::new(2, 1)
    }

    /// `sqrt5 = 2 tau - 1`.
    pub fn sqrt5() -> Self {
        Self::new(-1, 2)
    }

    /// `1/tau = tau - 1`.
    pub fn inv_tau() -> Self {
        Self::new(-1, 1)
    }

    /// `tau^e` for any integer exponent.
    pub fn tau_pow(e: i64) -> Self {
        let base = if e >= 0 { Self::tau() } else { Self::inv_tau() };
        let mut acc = Self::new(1, 0);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign of `a + b*tau`.
    pub fn signum(&self) -> Ordering {
        // 2(a + b tau) = (2a + b) + b sqrt5; compare p = 2a+b against -b sqrt5
        let p: BigInt = &self.a * 2 + &self.b;
        let q = &self.b;
        match (p.sign(), q.sign()) {
            (num_bigint::Sign::NoSign, _) => q.sign().cmp(&num_bigint::Sign::NoSign),
            (_, num_bigint::Sign::NoSign) => p.sign().cmp(&num_bigint::Sign::NoSign),
            (ps, qs) if ps == qs => ps.cmp(&num_bigint::Sign::NoSign),
            _ => {
                // opposite signs: magnitude decides, p^2 vs 5 q^2
                let lhs = &p * &p;
                let rhs = q * q * 5;
                let p_wins = lhs.cmp(&rhs);
                let ps = if p.is_positive() { Ordering::Greater } else { Ordering::Less };
                match p_wins {
                    Ordering::Greater => ps,
                    Ordering::Less => ps.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    /// `|self| <= |other|`, exactly.
    pub fn abs_le(&self, other: &Golden) -> bool {
        let s = if self.signum() == Ordering::Less { -self } else { self.clone() };
        let o = if other.signum() == Ordering::Less { -other } else { other.clone() };
        (&o - &s).signum() != Ordering::Less
    }

    pub fn to_real(&self, bits: u32) -> Real {
        let t = Real::tau(bits);
        &Real::from_bigint(self.a.clone(), bits) + &(&Real::from_bigint(self.b.clone(), bits) * &t)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_real(128).to_f64()
    }
}

impl Add for &Golden {
    type Output = Golden;
    fn add(self, o: &Golden) -> Golden {
        Golden { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &Golden {
    type Output = Golden;
    fn sub(self, o: &Golden) -> Golden {
        Golden { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &Golden {
    type Output = Golden;
    fn mul(self, o: &Golden) -> Golden {
        let bd = &self.b * &o.b;
        Golden { a: &self.a * &o.a + &bd, b: &self.a * &o.b + &self.b * &o.a + bd }
    }
}

impl Neg for &Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden { a: -&self.a, b: -&self.b }
    }
}

/// Fixed-point real `m / 2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Real {
    m: BigInt,
    bits: u32,
}

impl Real {
    pub fn from_bigint(x: BigInt, bits: u32) -> Self {
        Real { m: x << bits, bits }
    }

    pub fn from_int(x: i64, bits: u32) -> Self {
        Self::from_bigint(BigInt::from(x), bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `sqrt(5)` rounded down at this precision.
    pub fn sqrt5(bits: u32) -> Self {
        let m = (BigInt::from(5) << (2 * bits)).sqrt();
        Real { m, bits }
    }

    pub fn tau(bits: u32) -> Self {
        let s = Self::sqrt5(bits);
        Real { m: (s.m + (BigInt::one() << bits)) >> 1, bits }
    }

    pub fn div(&self, o: &Real) -> Real {
        Real { m: (&self.m << self.bits) / &o.m, bits: self.bits }
    }

    pub fn abs(&self) -> Real {
        Real { m: self.m.abs(), bits: self.bits }
    }

    pub fn signum(&self) -> Ordering {
        self.m.sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn to_f64(&self) -> f64 {
        // keep 64 significant bits before converting
        let len = self.m.bits();
        if len > 64 {
            let sh = len - 64;
            (&self.m >> sh).to_f64().unwrap_or(f64::NAN) * 2f64.powi(sh as i32 - self.bits as i32)
        } else {
            self.m.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(self.bits as i32))
        }
    }
}

impl Add for &Real {
    type Output = Real;
    fn add(self, o: &Real) -> Real {
        debug_assert_eq!(self.bits, o.bits);
        Real { m: &self.m + &o.m, bits: self.bits }
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, o: &Real) -> Real {
        debug_assert_eq!(self.bits, o.bits);
        Real { m: &self.m - &o.m, bits: self.bits }
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, o: &Real) -> Real {
        debug_assert_eq!(self.bits, o.bits);
        Real { m: (&self.m * &o.m) >> self.bits, bits: self.bits }
    }
}

/// `tau`, `tau^2` and `tau*sqrt5` at a chosen binary precision.
#[derive(Clone, Debug)]
pub struct GoldenConstants {
    pub bits: u32,
    pub tau: Real,
    pub tau_sq: Real,
    pub tau_sqrt5: Real,
}

pub const DEFAULT_BITS: u32 = 128;

impl GoldenConstants {
    pub fn new(bits: u32) -> Self {
        let tau = Real::tau(bits);
        let sqrt5 = Real::sqrt5(bits);
        GoldenConstants { bits, tau_sq: &tau * &tau, tau_sqrt5: &tau * &sqrt5, tau }
    }

    /// Largest of `|tau^2 - tau - 1|` and `|tau*sqrt5 - tau - 2|`.
    pub fn defect(&self) -> f64 {
        let one = Real::from_int(1, self.bits);
        let two = Real::from_int(2, self.bits);
        let a = &(&self.tau_sq - &self.tau) - &one;
        let b = &(&self.tau_sqrt5 - &self.tau) - &two;
        a.to_f64().abs().max(b.to_f64().abs())
    }
}

impl Default for GoldenConstants {
    fn default() -> Self {
        Self::new(DEFAULT_BITS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities() {
        assert_eq!(&Golden::tau() * &Golden::tau(), Golden::tau_sq());
        assert_eq!(&Golden::tau() * &Golden::sqrt5(), Golden::tau_sqrt5());
        assert_eq!(&Golden::tau() * &Golden::inv_tau(), Golden::new(1, 0));
        assert_eq!(&Golden::tau_pow(3) * &Golden::tau_pow(-3), Golden::new(1, 0));
        let c = GoldenConstants::default();
        assert!(c.defect() < 1e-30);
        assert!((c.tau.to_f64() - 1.618_033_988_749_895).abs() < 1e-15);
    }

    #[test]
    fn exact_sign() {
        assert_eq!(Golden::sqrt5().signum(), Ordering::Greater);
        assert_eq!(Golden::new(-2, 1).signum(), Ordering::Less); // tau - 2
        assert_eq!(Golden::new(2, -1).signum(), Ordering::Greater);
        assert_eq!(Golden::new(-1, 1).signum(), Ordering::Greater);
        assert_eq!(Golden::zero().signum(), Ordering::Equal);
        // Fibonacci-neighbour pairs sit very close to zero
        assert_eq!(Golden::new(-987, 610).signum(), Ordering::Greater);
        assert_eq!(Golden::new(-1597, 987).signum(), Ordering::Less);
        assert!(Golden::new(1, 0).abs_le(&Golden::tau()));
    }
}
