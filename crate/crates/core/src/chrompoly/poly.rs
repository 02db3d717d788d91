//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use super::golden::{Golden, Real};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![BigInt::one()] }
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Polynomial { coeffs: c }
    }

    /// `t - c`.
    pub fn linear(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    /// `t (t-1) ... (t-k+1)`, the chromatic polynomial of `K_k`.
    pub fn falling_factorial(k: usize) -> Self {
        (0..k).fold(Self::one(), |p, i| p.mul_linear(i as i64))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiply by `(t - c)`.
    pub fn mul_linear(&self, c: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = BigInt::from(c);
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] -= a * &c;
        }
        Self::from_coeffs(out)
    }

    /// Exact division by `(t - c)`; `None` when the remainder is nonzero.
    pub fn div_linear(&self, c: i64) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let c = BigInt::from(c);
        let d = self.coeffs.len() - 1;
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let cur = &self.coeffs[i] + &carry;
            if i == 0 {
                return if cur.is_zero() { Some(Self::from_coeffs(q)) } else { None };
            }
            carry = &cur * &c;
            q[i - 1] = cur;
        }
        unreachable!()
    }

    /// Exact division by `t (t-1) ... (t-k+1)`.
    pub fn div_falling(&self, k: usize) -> Option<Self> {
        let mut p = self.clone();
        for i in 0..k {
            p = p.div_linear(i as i64)?;
        }
        Some(p)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval_int(&BigInt::from(x))
    }

    /// Exact evaluation in `Z[tau]`.
    pub fn eval_golden(&self, x: &Golden) -> Golden {
        let mut acc = Golden::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Golden::from_int(c.clone());
        }
        acc
    }

    /// Fixed-point evaluation at the precision carried by `x`.
    pub fn eval_real(&self, x: &Real) -> Real {
        let mut acc = Real::from_int(0, x.bits());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Real::from_bigint(c.clone(), x.bits());
        }
        acc
    }

    /// True when the nonzero coefficients alternate in sign starting positive at the top.
    pub fn signs_alternate(&self) -> bool {
        let d = match self.degree() {
            Some(d) => d,
            None => return true,
        };
        self.coeffs.iter().enumerate().all(|(i, c)| {
            c.is_zero() || (c.is_positive() == ((d - i) % 2 == 0))
        })
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigInt::zero();
        Polynomial::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigInt::zero();
        Polynomial::from_coeffs(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let c = v
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_and_division() {
        let k4 = Polynomial::falling_factorial(4);
        assert_eq!(k4, Polynomial::from_i64(&[0, -6, 11, -6, 1]));
        assert_eq!(k4.div_falling(3).unwrap(), Polynomial::linear(3));
        assert_eq!(k4.div_linear(7), None);
        assert_eq!(k4.eval_i64(4), BigInt::from(24));
        assert!(k4.signs_alternate());
    }

    #[test]
    fn display_and_json() {
        let p = Polynomial::from_i64(&[0, -2, 3, -1]);
        assert_eq!(p.to_string(), "-t^3 + 3t^2 - 2t");
        let s = serde_json::to_string(&Polynomial::falling_factorial(3)).unwrap();
        assert_eq!(s, r#"["0","2","-3","1"]"#);
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, Polynomial::falling_factorial(3));
    }
}
