//! Laurent polynomials in one variable with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::json;

/// `Σ coeffs[k] t^(lowest + k)`, kept trimmed so the first and last stored
/// coefficients are nonzero. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lowest: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(lowest: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { lowest, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(lowest: i64, coeffs: &[i64]) -> Self {
        Self::new(lowest, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly {
            lowest: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c t^k`
    pub fn monomial(c: i64, k: i64) -> Self {
        Self::new(k, vec![BigInt::from(c)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.lowest = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.lowest += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn highest(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        let i = k - self.lowest;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            lowest: self.lowest + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `p(1/t)`
    pub fn invert_variable(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        LaurentPoly::new(-self.highest(), c)
    }

    pub fn eval_rational(&self, t: &BigRational) -> Result<BigRational> {
        if t.is_zero() && self.lowest < 0 {
            return Err(Error::EvaluateAtZero);
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        let base = if self.lowest >= 0 {
            num_traits::pow(t.clone(), self.lowest as usize)
        } else {
            num_traits::pow(t.recip(), (-self.lowest) as usize)
        };
        Ok(acc * base)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let acc = self
            .coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN));
        acc * t.powi(self.lowest as i32)
    }

    /// Quotient in the Laurent ring; errors when `q` does not divide `self`.
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        if q.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let dq = q.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dq {
            return Err(Error::InexactDivision);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dq];
        let lead = &q.coeffs[dq];
        for s in (0..quot.len()).rev() {
            let (c, r) = rem[s + dq].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (k, qk) in q.coeffs.iter().enumerate() {
                rem[s + k] -= &c * qk;
            }
            quot[s] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(LaurentPoly::new(self.lowest - q.lowest, quot))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// `{"lowest": int, "coeffs": [int, ...]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "lowest": self.lowest, "coeffs": json::ints(&self.coeffs) })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let lowest = v["lowest"]
            .as_i64()
            .ok_or_else(|| Error::Parse("missing integer \"lowest\"".into()))?;
        Ok(LaurentPoly::new(lowest, json::parse_ints(&v["coeffs"])?))
    }

    /// Writes the polynomial in the variable `var`, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for k in (self.lowest..=self.highest()).rev() {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let term = if k == 0 {
                mag.to_string()
            } else {
                let power = format!("{var}^({k:+})");
                if mag.is_one() {
                    power
                } else {
                    format!("{mag}*{power}")
                }
            };
            terms.push(format!("{sign} {term}"));
        }
        terms.join(" ")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lowest.min(o.lowest);
        let hi = self.highest().max(o.highest());
        let coeffs = (lo..=hi).map(|k| self.coeff(k) + o.coeff(k)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.lowest + o.lowest, coeffs)
    }
}
