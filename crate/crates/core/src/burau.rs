//! Reduced Burau matrices and the Alexander polynomial of a braid closure.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::braid::Braid;
use crate::error::{Error, Result};
use crate::json;
use crate::laurent::LaurentPoly;

/// Ring in which Burau matrices can be multiplied.
pub trait BurauEntry: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn to_json(&self) -> serde_json::Value;
    fn render(&self) -> String {
        self.to_string()
    }
}

impl BurauEntry for LaurentPoly {
    fn render(&self) -> String {
        self.display_in("t")
    }
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_json(&self) -> serde_json::Value {
        LaurentPoly::to_json(self)
    }
}

impl BurauEntry for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_json(&self) -> serde_json::Value {
        if self.is_integer() {
            json::int(&self.to_integer())
        } else {
            serde_json::Value::String(self.to_string())
        }
    }
}

impl BurauEntry for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self)
    }
}

/// Square matrix of dimension `n - 1`, stored by rows.
#[derive(Debug, Clone, PartialEq)]
pub struct BurauMatrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: BurauEntry> BurauMatrix<T> {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        BurauMatrix { rows }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        BurauMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn matmul(&self, o: &Self) -> Self {
        let d = self.dim();
        let rows = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        (0..d).fold(T::zero(), |acc, k| acc.add(&self.rows[i][k].mul(&o.rows[k][j])))
                    })
                    .collect()
            })
            .collect();
        BurauMatrix { rows }
    }

    /// Right-multiplies by a generator matrix, which differs from the
    /// identity only in column `c`: `(up, diag, down)` on rows `c-1, c, c+1`.
    fn apply_column(&mut self, c: usize, up: &T, diag: &T, down: &T) {
        let d = self.dim();
        for row in self.rows.iter_mut() {
            let mut v = row[c].mul(diag);
            if c > 0 {
                v = v.add(&row[c - 1].mul(up));
            }
            if c + 1 < d {
                v = v.add(&row[c + 1].mul(down));
            }
            row[c] = v;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| serde_json::Value::Array(r.iter().map(BurauEntry::to_json).collect()))
            .collect();
        serde_json::json!({ "dim": self.dim(), "rows": rows })
    }
}

impl<T: BurauEntry> fmt::Display for BurauMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(BurauEntry::render).collect())
            .collect();
        let d = self.dim();
        let widths: Vec<usize> = (0..d)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        for (i, r) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            f.write_str(&line.join("  "))?;
        }
        Ok(())
    }
}

fn burau_with<T: BurauEntry>(b: &Braid, t: &T, tinv: &T) -> BurauMatrix<T> {
    let d = b.n().saturating_sub(1);
    let mut m = BurauMatrix::identity(d);
    let minus_one = T::one().neg();
    let minus_t = t.neg();
    let minus_tinv = tinv.neg();
    for &g in b.word() {
        let c = g.unsigned_abs() as usize - 1;
        if g > 0 {
            m.apply_column(c, &minus_t, &minus_t, &minus_one);
        } else {
            m.apply_column(c, &minus_one, &minus_tinv, &minus_tinv);
        }
    }
    m
}

/// Reduced Burau matrix with Laurent polynomial entries.
pub fn burau(b: &Braid) -> BurauMatrix<LaurentPoly> {
    burau_with(b, &LaurentPoly::monomial(1, 1), &LaurentPoly::monomial(1, -1))
}

/// Reduced Burau matrix evaluated at a nonzero rational `t`.
pub fn burau_at(b: &Braid, t: &BigRational) -> Result<BurauMatrix<BigRational>> {
    if t.is_zero() {
        return Err(Error::EvaluateAtZero);
    }
    Ok(burau_with(b, t, &t.recip()))
}

pub fn burau_at_f64(b: &Braid, t: f64) -> Result<BurauMatrix<f64>> {
    if t == 0.0 {
        return Err(Error::EvaluateAtZero);
    }
    Ok(burau_with(b, &t, &t.recip()))
}

impl BurauMatrix<LaurentPoly> {
    pub fn eval(&self, t: &BigRational) -> Result<BurauMatrix<BigRational>> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.eval_rational(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(BurauMatrix { rows })
    }

    /// Determinant by fraction-free elimination in the Laurent ring.
    pub fn det(&self) -> LaurentPoly {
        det_laurent(self.rows.clone())
    }
}

fn det_laurent(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.exact_div(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// Alexander polynomial of the closure of `b`; when `centered`, shifted so
/// that `p(z) = ±p(1/z)`.
pub fn alexander(b: &Braid, centered: bool) -> Result<LaurentPoly> {
    let n = b.n() as i64;
    let bm = burau(b);
    let d = bm.dim();
    let rows: Vec<Vec<LaurentPoly>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let id = if i == j { LaurentPoly::one() } else { LaurentPoly::zero() };
                    &id - bm.get(i, j)
                })
                .collect()
        })
        .collect();
    let one_minus_t = LaurentPoly::new(0, vec![BigInt::one(), -BigInt::one()]);
    let one_minus_tn = &LaurentPoly::one() - &LaurentPoly::monomial(1, n);
    let p = (&det_laurent(rows) * &one_minus_t).exact_div(&one_minus_tn)?;
    if !centered || p.is_zero() {
        return Ok(p);
    }
    let span = p.highest() + p.lowest();
    if span % 2 != 0 {
        return Err(Error::FractionalPowers);
    }
    Ok(p.shift(-span / 2))
}
