//! Essential simple closed multiloops on the punctured disk, stored as
//! Dynnikov coordinates `(a_1..a_m, b_1..b_m)` with `m = N - 2` for `N`
//! punctures.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::json;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Loop {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
    basepoint: bool,
}

/// Minimal intersection counts with the vertical reference lines.
///
/// `mu[2i-2]`, `mu[2i-1]` are the crossings above and below puncture `i+1`;
/// `nu[i-1]` the crossings of the line between punctures `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionNumbers {
    pub mu: Vec<BigInt>,
    pub nu: Vec<BigInt>,
}

impl Loop {
    /// Splits `coords` into `a` (first half) and `b` (second half).
    pub fn new(coords: Vec<BigInt>, basepoint: bool) -> Result<Self> {
        if coords.is_empty() || !coords.len().is_multiple_of(2) {
            return Err(Error::BadLoopLength(coords.len()));
        }
        let mut a = coords;
        let b = a.split_off(a.len() / 2);
        Ok(Loop { a, b, basepoint })
    }

    pub fn from_i64(coords: &[i64], basepoint: bool) -> Result<Self> {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect(), basepoint)
    }

    pub fn from_ab(a: Vec<BigInt>, b: Vec<BigInt>, basepoint: bool) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::BadLoopLength(a.len() + b.len()));
        }
        Ok(Loop { a, b, basepoint })
    }

    /// Canonical multiloop `a = 0, b = -1` on `n` punctures.
    ///
    /// With a basepoint the loops live on `n + 1` punctures and generate the
    /// fundamental group of the `n`-punctured disk.
    pub fn canonical(n: usize, basepoint: bool) -> Result<Self> {
        let (min, m) = if basepoint { (2, n.saturating_sub(1)) } else { (3, n.saturating_sub(2)) };
        if n < min {
            return Err(Error::TooFewStrands { min, got: n });
        }
        Ok(Loop {
            a: vec![BigInt::zero(); m],
            b: vec![BigInt::from(-1); m],
            basepoint,
        })
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn ab(&self) -> (&[BigInt], &[BigInt]) {
        (&self.a, &self.b)
    }

    pub(crate) fn ab_mut(&mut self) -> (&mut [BigInt], &mut [BigInt]) {
        (&mut self.a, &mut self.b)
    }

    pub fn has_basepoint(&self) -> bool {
        self.basepoint
    }

    /// Punctures including the basepoint.
    pub fn totaln(&self) -> usize {
        self.a.len() + 2
    }

    /// Punctures excluding the basepoint.
    pub fn n(&self) -> usize {
        if self.basepoint {
            self.totaln() - 1
        } else {
            self.totaln()
        }
    }

    pub fn coords(&self) -> Vec<BigInt> {
        self.a.iter().chain(self.b.iter()).cloned().collect()
    }

    /// Left and right extensions `b_0`, `b_{m+1}` of the `b` vector: the
    /// half-counts of crossings of the outermost vertical lines.
    fn b_ends(&self) -> (BigInt, BigInt) {
        let mut run = BigInt::zero();
        let mut best: Option<BigInt> = None;
        for (ai, bi) in self.a.iter().zip(&self.b) {
            let v = ai.abs() + bi.max(&BigInt::zero()) + &run;
            if best.as_ref().is_none_or(|b| v > *b) {
                best = Some(v);
            }
            run += bi;
        }
        let b0 = -best.unwrap_or_default();
        let bn = -&b0 - run;
        (b0, bn)
    }

    pub fn intersec(&self) -> IntersectionNumbers {
        let (b0, _) = self.b_ends();
        let m = self.a.len();
        let mut nu: Vec<BigInt> = Vec::with_capacity(m + 1);
        nu.push(-2 * &b0);
        for i in 0..m {
            let next = &nu[i] - 2 * &self.b[i];
            nu.push(next);
        }
        let mut mu = Vec::with_capacity(2 * m);
        for i in 0..m {
            // crossings of the line through puncture i+2 (1-based)
            let half = (&nu[i]).max(&nu[i + 1]) / 2;
            mu.push(&half - &self.a[i]);
            mu.push(&half + &self.a[i]);
        }
        IntersectionNumbers { mu, nu }
    }

    /// Length of the taut loop when punctures are unit-spaced points.
    pub fn minlength(&self) -> BigInt {
        self.intersec().nu.iter().sum()
    }

    /// Minimal number of intersections with the real axis. With a basepoint,
    /// the axis stops at the basepoint puncture.
    pub fn intaxis(&self) -> BigInt {
        let m = self.a.len();
        let (b0, bn) = self.b_ends();
        let mut total = self.a[0].abs() + self.a[m - 1].abs() + b0.abs();
        if !self.basepoint {
            total += bn.abs();
        }
        for w in self.a.windows(2) {
            total += (&w[1] - &w[0]).abs();
        }
        for bi in &self.b {
            total += bi.abs();
        }
        total
    }

    /// `{"coords": [...], "basepoint": bool}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "coords": json::ints(&self.coords()), "basepoint": self.basepoint })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let coords = json::parse_ints(&v["coords"])?;
        let basepoint = v["basepoint"].as_bool().unwrap_or(false);
        Loop::new(coords, basepoint)
    }
}

/// `intaxis` on floating-point coordinates, used by the entropy estimator.
pub(crate) fn intaxis_f64(a: &[f64], b: &[f64], basepoint: bool) -> f64 {
    let m = a.len();
    let mut run = 0.0;
    let mut best = f64::NEG_INFINITY;
    for (ai, bi) in a.iter().zip(b) {
        best = best.max(ai.abs() + bi.max(0.0) + run);
        run += bi;
    }
    let b0 = -best;
    let bn = -b0 - run;
    let mut total = a[0].abs() + a[m - 1].abs() + b0.abs();
    if !basepoint {
        total += bn.abs();
    }
    for w in a.windows(2) {
        total += (w[1] - w[0]).abs();
    }
    total + b.iter().map(|x| x.abs()).sum::<f64>()
}

impl fmt::Display for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("((")?;
        for c in self.a.iter().chain(&self.b) {
            write!(f, " {c}")?;
        }
        f.write_str(" ))")?;
        if self.basepoint {
            f.write_str("*")?;
        }
        Ok(())
    }
}

/// A collection of loops on the same number of punctures; operations map
/// over the elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopBatch {
    loops: Vec<Loop>,
}

impl LoopBatch {
    pub fn new(loops: Vec<Loop>) -> Result<Self> {
        if let Some(first) = loops.first() {
            if loops
                .iter()
                .any(|l| l.totaln() != first.totaln() || l.basepoint != first.basepoint)
            {
                return Err(Error::RaggedLoops);
            }
        }
        Ok(LoopBatch { loops })
    }

    /// One loop per row.
    pub fn from_rows(rows: &[Vec<i64>], basepoint: bool) -> Result<Self> {
        let loops = rows
            .iter()
            .map(|r| Loop::from_i64(r, basepoint))
            .collect::<Result<Vec<_>>>()?;
        Self::new(loops)
    }

    pub fn loops(&self) -> &[Loop] {
        &self.loops
    }

    pub fn len(&self) -> usize {
        self.loops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.loops.is_empty()
    }

    pub fn minlength(&self) -> Vec<BigInt> {
        self.loops.iter().map(Loop::minlength).collect()
    }

    pub fn intaxis(&self) -> Vec<BigInt> {
        self.loops.iter().map(Loop::intaxis).collect()
    }
}

impl fmt::Display for LoopBatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.loops.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
