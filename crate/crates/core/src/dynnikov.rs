//! Piecewise-linear action of braid generators on Dynnikov coordinates.
//!
//! The update rules are written once, generically over [`PlScalar`], and run
//! on exact integers, on floats (entropy estimation) and on [`Tracked`]
//! values that carry the linear form of the resolved branch so the effective
//! linear action falls out of the same computation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::braid::Braid;
use crate::error::{Error, Result};
use crate::json;
use crate::loops::Loop;
use crate::props::{self, LoopActDir};

/// Scalar on which the update rules can run.
pub(crate) trait PlScalar: Clone {
    fn zero_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;

    /// `max(x, 0)`; at zero the zero branch is taken.
    fn pos(&self) -> Self {
        if self.is_positive() {
            self.clone()
        } else {
            self.zero_like()
        }
    }

    /// `min(x, 0)`; at zero the zero branch is taken.
    fn neg(&self) -> Self {
        if self.is_negative() {
            self.clone()
        } else {
            self.zero_like()
        }
    }
}

impl PlScalar for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl PlScalar for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_positive(&self) -> bool {
        *self > 0.0
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
}

/// A value together with its expression as an integer linear form in the
/// coordinates of the loop the braid started from. Zero values take the zero
/// branch of `max(·, 0)` and `min(·, 0)`.
#[derive(Clone, Debug)]
pub(crate) struct Tracked {
    val: BigInt,
    row: Vec<BigInt>,
}

impl PlScalar for Tracked {
    fn zero_like(&self) -> Self {
        Tracked {
            val: BigInt::zero(),
            row: vec![BigInt::zero(); self.row.len()],
        }
    }
    fn add(&self, o: &Self) -> Self {
        Tracked {
            val: &self.val + &o.val,
            row: self.row.iter().zip(&o.row).map(|(x, y)| x + y).collect(),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Tracked {
            val: &self.val - &o.val,
            row: self.row.iter().zip(&o.row).map(|(x, y)| x - y).collect(),
        }
    }
    fn negate(&self) -> Self {
        Tracked {
            val: -&self.val,
            row: self.row.iter().map(|x| -x).collect(),
        }
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(&self.val)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(&self.val)
    }
}

/// Applies `σ_i^{sign}` in place. `a.len() == b.len() == N - 2` and
/// `1 <= i <= N - 1`; callers validate the range.
pub(crate) fn update<T: PlScalar>(a: &mut [T], b: &mut [T], i: usize, positive: bool) {
    let m = a.len();
    let k = i - 1;
    if k == 0 {
        let (a0, b0) = (a[0].clone(), b[0].clone());
        if positive {
            let bn = a0.add(&b0.pos());
            a[0] = b0.negate().add(&bn.pos());
            b[0] = bn;
        } else {
            let bn = a0.negate().add(&b0.pos());
            a[0] = b0.sub(&bn.pos());
            b[0] = bn;
        }
    } else if k == m {
        let (al, bl) = (a[m - 1].clone(), b[m - 1].clone());
        if positive {
            let bn = al.add(&bl.neg());
            a[m - 1] = bl.negate().add(&bn.neg());
            b[m - 1] = bn;
        } else {
            let bn = al.negate().add(&bl.neg());
            a[m - 1] = bl.sub(&bn.neg());
            b[m - 1] = bn;
        }
    } else {
        let (ap, ac) = (a[k - 1].clone(), a[k].clone());
        let (bp, bc) = (b[k - 1].clone(), b[k].clone());
        if positive {
            let c = ap.sub(&ac).sub(&bc.pos()).add(&bp.neg());
            a[k - 1] = ap.sub(&bp.pos()).sub(&bc.pos().add(&c).pos());
            b[k - 1] = bc.add(&c.neg());
            a[k] = ac.sub(&bc.neg()).sub(&bp.neg().sub(&c).neg());
            b[k] = bp.sub(&c.neg());
        } else {
            let d = ap.sub(&ac).add(&bc.pos()).sub(&bp.neg());
            a[k - 1] = ap.add(&bp.pos()).add(&bc.pos().sub(&d).pos());
            b[k - 1] = bc.sub(&d.pos());
            a[k] = ac.add(&bc.neg()).add(&bp.neg().add(&d).neg());
            b[k] = bp.add(&d.pos());
        }
    }
}

/// Generators of `b` in the order they act, per the given convention.
fn acting_order(b: &Braid, dir: LoopActDir) -> Box<dyn Iterator<Item = i32> + '_> {
    match dir {
        LoopActDir::LeftToRight => Box::new(b.word().iter().copied()),
        LoopActDir::RightToLeft => Box::new(b.word().iter().rev().copied()),
    }
}

pub(crate) fn act_slices<T: PlScalar>(b: &Braid, a: &mut [T], bb: &mut [T], dir: LoopActDir) {
    for g in acting_order(b, dir) {
        update(a, bb, g.unsigned_abs() as usize, g > 0);
    }
}

fn check_compatible(b: &Braid, l: &Loop) -> Result<()> {
    if b.n() > l.n() {
        return Err(Error::PunctureMismatch {
            braid: b.n(),
            lp: l.n(),
        });
    }
    Ok(())
}

/// Image of `l` under `b`, using the global word-order convention.
pub fn act(b: &Braid, l: &Loop) -> Result<Loop> {
    act_dir(b, l, props::current().gen_loop_act_dir)
}

pub fn act_dir(b: &Braid, l: &Loop, dir: LoopActDir) -> Result<Loop> {
    check_compatible(b, l)?;
    let mut out = l.clone();
    let (a, bb) = out.ab_mut();
    act_slices(b, a, bb, dir);
    Ok(out)
}

/// Applies a single generator `σ_i^{±1}` to a loop.
pub fn apply_generator(l: &Loop, i: usize, positive: bool) -> Result<Loop> {
    if i == 0 || i >= l.totaln() {
        return Err(Error::GeneratorOutOfRange {
            index: i as i32,
            n: l.totaln(),
        });
    }
    let mut out = l.clone();
    let (a, b) = out.ab_mut();
    update(a, b, i, positive);
    Ok(out)
}

/// Acts on every loop of a batch, in parallel, preserving order.
pub fn act_batch(b: &Braid, loops: &crate::loops::LoopBatch) -> Result<crate::loops::LoopBatch> {
    use rayon::prelude::*;
    let dir = props::current().gen_loop_act_dir;
    let out = loops
        .loops()
        .par_iter()
        .map(|l| act_dir(b, l, dir))
        .collect::<Result<Vec<_>>>()?;
    crate::loops::LoopBatch::new(out)
}

/// Square integer matrix of the resolved linear branch of an action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearAction {
    dim: usize,
    /// Row-major entries.
    entries: Vec<BigInt>,
}

impl LinearAction {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        LinearAction { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Ok(LinearAction {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.dim, k % self.dim, v))
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.entries
            .chunks(self.dim)
            .map(|row| row.iter().zip(x).map(|(m, v)| m * v).sum())
            .collect()
    }

    /// Matrix product `self · other`.
    pub fn matmul(&self, other: &LinearAction) -> Result<LinearAction> {
        if self.dim != other.dim {
            return Err(Error::NotSquare);
        }
        let n = self.dim;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let s = self.get(i, k);
                if s.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += s * other.get(k, j);
                }
            }
        }
        Ok(LinearAction { dim: n, entries })
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> BigInt {
        crate::linalg::det_bareiss(&self.rows())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self.rows().iter().map(|r| json::ints(r)).collect();
        serde_json::json!({ "dim": self.dim, "rows": rows })
    }
}

impl fmt::Display for LinearAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let w = cells.iter().map(String::len).max().unwrap_or(1);
        for (r, row) in cells.chunks(self.dim).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

/// Image of `l` under `b` together with the effective linear action: the
/// matrix `M` with `M · coords(l) == coords(b l)` on the branch selected by
/// `l`.
pub fn act_with_matrix(b: &Braid, l: &Loop) -> Result<(Loop, LinearAction)> {
    act_with_matrix_dir(b, l, props::current().gen_loop_act_dir)
}

pub fn act_with_matrix_dir(b: &Braid, l: &Loop, dir: LoopActDir) -> Result<(Loop, LinearAction)> {
    check_compatible(b, l)?;
    let coords = l.coords();
    let dim = coords.len();
    let m = dim / 2;
    let mut tracked: Vec<Tracked> = coords
        .into_iter()
        .enumerate()
        .map(|(k, val)| {
            let mut row = vec![BigInt::zero(); dim];
            row[k] = BigInt::one();
            Tracked { val, row }
        })
        .collect();
    let (ta, tb) = tracked.split_at_mut(m);
    act_slices(b, ta, tb, dir);
    let vals: Vec<BigInt> = tracked.iter().map(|t| t.val.clone()).collect();
    let entries = tracked.into_iter().flat_map(|t| t.row).collect();
    Ok((
        Loop::new(vals, l.has_basepoint())?,
        LinearAction { dim, entries },
    ))
}

/// Normal form of a braid: its action on the canonical basepoint multiloop.
pub fn loopcoords(b: &Braid) -> Loop {
    loopcoords_dir(b, props::current().gen_loop_act_dir)
}

pub fn loopcoords_dir(b: &Braid, dir: LoopActDir) -> Loop {
    let l = Loop::canonical(b.n().max(2), true).expect("n >= 2");
    let b = if b.n() < 2 {
        Braid::identity(2)
    } else {
        b.clone()
    };
    act_dir(&b, &l, dir).expect("canonical loop matches strand count")
}

/// How a detected cycle is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleMode {
    /// Ordered product of the matrices over one period.
    Product,
    /// One matrix per iterate of the period.
    PerIterate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleResult {
    /// Number of iterates before the cycle starts.
    pub preperiod: usize,
    pub period: usize,
    /// `period` matrices (per-iterate mode) or their product, latest applied
    /// leftmost (product mode).
    pub matrices: Vec<LinearAction>,
}

impl CycleResult {
    pub fn product(&self) -> LinearAction {
        self.matrices
            .iter()
            .skip(1)
            .fold(self.matrices[0].clone(), |acc, m| {
                m.matmul(&acc).expect("equal dimensions")
            })
    }
}

/// Iterates `l ← b·l` until the sequence of effective linear actions becomes
/// periodic.
///
/// A period `p` is accepted once the last `3p` matrices consist of three
/// identical blocks; the reported start is then moved back to the earliest
/// index from which the sequence stays periodic.
pub fn cycle(b: &Braid, l0: Option<&Loop>, maxit: usize, mode: CycleMode) -> Result<CycleResult> {
    let dir = props::current().gen_loop_act_dir;
    let mut l = match l0 {
        Some(l) => l.clone(),
        None => Loop::canonical(b.n().max(2), true)?,
    };
    check_compatible(b, &l)?;
    let mut seq: Vec<LinearAction> = Vec::new();
    for _ in 0..maxit {
        let (next, m) = act_with_matrix_dir(b, &l, dir)?;
        seq.push(m);
        l = next;
        let t = seq.len();
        for p in 1..=t / 3 {
            let repeats = (t - p..t).all(|j| seq[j] == seq[j - p] && seq[j - p] == seq[j - 2 * p]);
            if repeats {
                let mut start = t - 3 * p;
                while start > 0 && seq[start - 1] == seq[start - 1 + p] {
                    start -= 1;
                }
                let block = seq[start..start + p].to_vec();
                let matrices = match mode {
                    CycleMode::PerIterate => block,
                    CycleMode::Product => {
                        let r = CycleResult {
                            preperiod: start,
                            period: p,
                            matrices: block,
                        };
                        vec![r.product()]
                    }
                };
                return Ok(CycleResult {
                    preperiod: start,
                    period: p,
                    matrices,
                });
            }
        }
    }
    Err(Error::NoCycle(maxit))
}
