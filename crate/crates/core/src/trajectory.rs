//! Braids from sampled planar particle trajectories.
//!
//! Positions are projected onto a line at a chosen angle; every sign change
//! of a projected pair difference between consecutive samples is a crossing,
//! timed by linear interpolation. The sign of a crossing comes from the
//! orthogonal coordinate: the particle on the left passing on the positive
//! side gives a positive generator (times `GenRotDir`).

use std::io::Read;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Deserialize;

use crate::assignment::min_cost_assignment;
use crate::braid::Braid;
use crate::compact::cancellable_pair;
use crate::dynnikov::act_dir;
use crate::error::{Error, Result};
use crate::linalg::ln_big;
use crate::loops::Loop;
use crate::props;

/// Particle positions on a common, strictly increasing time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySet {
    times: Vec<f64>,
    /// `positions[k][p]` is particle `p` at sample `k`.
    positions: Vec<Vec<[f64; 2]>>,
}

#[derive(Deserialize)]
struct CsvRow {
    t: f64,
    id: usize,
    x: f64,
    y: f64,
}

impl TrajectorySet {
    pub fn new(times: Vec<f64>, positions: Vec<Vec<[f64; 2]>>) -> Result<Self> {
        let bad = |m: &str| Err(Error::Trajectory(m.to_string()));
        if times.is_empty() {
            return bad("no samples");
        }
        if times.len() != positions.len() {
            return bad("number of times and position rows differ");
        }
        if times.iter().any(|t| !t.is_finite()) {
            return bad("times must be finite");
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return bad("times must be strictly increasing");
        }
        let p = positions[0].len();
        if p == 0 {
            return bad("no particles");
        }
        if positions.iter().any(|row| row.len() != p) {
            return bad("ragged particle data");
        }
        if positions.iter().flatten().flatten().any(|v| !v.is_finite()) {
            return bad("positions must be finite");
        }
        Ok(TrajectorySet { times, positions })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn positions(&self) -> &[Vec<[f64; 2]>] {
        &self.positions
    }

    pub fn nparticles(&self) -> usize {
        self.positions[0].len()
    }

    pub fn nsamples(&self) -> usize {
        self.times.len()
    }

    /// Long-format CSV with header `t,id,x,y` and 1-based particle ids.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rows: Vec<CsvRow> = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader)
            .deserialize()
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Trajectory(e.to_string()))?;
        if rows.is_empty() {
            return Err(Error::Trajectory("no samples".into()));
        }
        rows.sort_by(|a, b| a.t.total_cmp(&b.t).then(a.id.cmp(&b.id)));
        let np = rows.iter().map(|r| r.id).max().unwrap_or(0);
        if rows.iter().any(|r| r.id == 0) {
            return Err(Error::Trajectory("particle ids are 1-based".into()));
        }
        let mut times = Vec::new();
        let mut positions: Vec<Vec<[f64; 2]>> = Vec::new();
        for chunk in rows.chunk_by(|a, b| a.t == b.t) {
            let ids: Vec<usize> = chunk.iter().map(|r| r.id).collect();
            if ids != (1..=np).collect::<Vec<_>>() {
                return Err(Error::Trajectory(format!(
                    "at t = {} expected one row per particle 1..{np}",
                    chunk[0].t
                )));
            }
            times.push(chunk[0].t);
            positions.push(chunk.iter().map(|r| [r.x, r.y]).collect());
        }
        TrajectorySet::new(times, positions)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,id,x,y\n");
        for (t, row) in self.times.iter().zip(&self.positions) {
            for (p, [x, y]) in row.iter().enumerate() {
                out.push_str(&format!("{t},{},{x},{y}\n", p + 1));
            }
        }
        out
    }

    /// `{"times": [...], "positions": [[[x, y], ...], ...]}`
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            times: Vec<f64>,
            positions: Vec<Vec<[f64; 2]>>,
        }
        let d: Doc =
            serde_json::from_value(v.clone()).map_err(|e| Error::Trajectory(e.to_string()))?;
        TrajectorySet::new(d.times, d.positions)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "times": self.times, "positions": self.positions })
    }

    fn project(&self, k: usize, p: usize, (c, s): (f64, f64)) -> (f64, f64) {
        let [x, y] = self.positions[k][p];
        (x * c + y * s, -x * s + y * c)
    }

    /// Appends one sample, one mean time step after the last, returning every
    /// particle to an initial position.
    pub fn closure(&self, method: ClosureMethod) -> TrajectorySet {
        let np = self.nparticles();
        let first = &self.positions[0];
        let last = &self.positions[self.nsamples() - 1];
        let target: Vec<usize> = match method {
            ClosureMethod::Rank => {
                let by_x = |row: &[[f64; 2]]| {
                    let mut idx: Vec<usize> = (0..np).collect();
                    idx.sort_by(|&a, &b| row[a][0].total_cmp(&row[b][0]));
                    idx
                };
                let (fin, ini) = (by_x(last), by_x(first));
                let mut t = vec![0; np];
                for r in 0..np {
                    t[fin[r]] = ini[r];
                }
                t
            }
            ClosureMethod::MinDistance => {
                let cost: Vec<Vec<f64>> = last
                    .iter()
                    .map(|a| first.iter().map(|b| (a[0] - b[0]).hypot(a[1] - b[1])).collect())
                    .collect();
                min_cost_assignment(&cost)
            }
        };
        let span = self.times[self.nsamples() - 1] - self.times[0];
        let step = if self.nsamples() > 1 {
            span / (self.nsamples() - 1) as f64
        } else {
            1.0
        };
        let mut out = self.clone();
        out.times.push(self.times[self.nsamples() - 1] + step);
        out.positions.push(target.iter().map(|&j| first[j]).collect());
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMethod {
    /// Match final to initial points by rank along the x axis.
    Rank,
    /// Match final to initial points minimizing total travel distance.
    MinDistance,
}

/// A braid word together with the time of each crossing.
#[derive(Debug, Clone, PartialEq)]
pub struct DataBraid {
    braid: Braid,
    tcross: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
struct PairCrossing {
    t: f64,
    a: usize,
    b: usize,
    sign: i32,
}

fn pair_crossings(
    ts: &TrajectorySet,
    a: usize,
    b: usize,
    dir: (f64, f64),
    tol: f64,
    rot: i32,
) -> Result<Vec<PairCrossing>> {
    let coincident = || Error::CoincidentProjection(a + 1, b + 1);
    let diff = |k: usize| {
        let (pa, qa) = ts.project(k, a, dir);
        let (pb, qb) = ts.project(k, b, dir);
        (pa - pb, qa - qb)
    };
    let last = ts.nsamples() - 1;
    let (d0, _) = diff(0);
    if d0.abs() <= tol || diff(last).0.abs() <= tol {
        return Err(coincident());
    }
    let mut out = Vec::new();
    let mut prev = 0usize;
    let mut prev_d = d0;
    let mut touch: Option<usize> = None;
    for k in 1..=last {
        let (d, q) = diff(k);
        if d.abs() <= tol {
            if q.abs() <= tol {
                return Err(coincident());
            }
            touch.get_or_insert(k);
            continue;
        }
        if (d > 0.0) != (prev_d > 0.0) {
            let (t, qc) = match touch {
                Some(z) => (ts.times[z], diff(z).1),
                None => {
                    let s = prev_d / (prev_d - d);
                    let t = ts.times[prev] + s * (ts.times[k] - ts.times[prev]);
                    let q0 = diff(prev).1;
                    (t, q0 + s * (q - q0))
                }
            };
            if qc.abs() <= tol {
                return Err(coincident());
            }
            // `a` starts on the left when prev_d < 0; the left particle on
            // the positive side gives a positive crossing.
            let left_higher = if prev_d < 0.0 { qc > 0.0 } else { qc < 0.0 };
            let sign = if left_higher { rot } else { -rot };
            out.push(PairCrossing { t, a, b, sign });
        }
        prev = k;
        prev_d = d;
        touch = None;
    }
    Ok(out)
}

/// Crossing data of `ts` viewed along the axis at `angle` (radians from x).
pub fn databraid_from_data(ts: &TrajectorySet, angle: f64) -> Result<DataBraid> {
    let p = props::current();
    databraid_with(ts, angle, p.braid_abs_tol, p.gen_rot_dir)
}

pub fn databraid_with(ts: &TrajectorySet, angle: f64, tol: f64, rot_dir: i32) -> Result<DataBraid> {
    let np = ts.nparticles();
    let dir = (angle.cos(), angle.sin());
    let pairs: Vec<(usize, usize)> = (0..np)
        .flat_map(|a| (a + 1..np).map(move |b| (a, b)))
        .collect();
    let found = pairs
        .par_iter()
        .map(|&(a, b)| pair_crossings(ts, a, b, dir, tol, rot_dir))
        .collect::<Result<Vec<_>>>()?;
    let mut crossings: Vec<PairCrossing> = found.into_iter().flatten().collect();
    crossings.sort_by(|x, y| x.t.total_cmp(&y.t));

    // order[pos] = particle at that position; slot[particle] = its position
    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by(|&x, &y| ts.project(0, x, dir).0.total_cmp(&ts.project(0, y, dir).0));
    let mut slot = vec![0usize; np];
    for (pos, &part) in order.iter().enumerate() {
        slot[part] = pos;
    }

    let mut word = Vec::with_capacity(crossings.len());
    let mut tcross = Vec::with_capacity(crossings.len());
    for group in crossings.chunk_by(|x, y| x.t == y.t) {
        let mut seen = vec![false; np];
        for c in group {
            for part in [c.a, c.b] {
                if seen[part] {
                    return Err(Error::SimultaneousCrossings(part + 1));
                }
                seen[part] = true;
            }
        }
        let mut group = group.to_vec();
        group.sort_by_key(|c| slot[c.a].min(slot[c.b]));
        for c in group {
            let (pa, pb) = (slot[c.a], slot[c.b]);
            if pa.abs_diff(pb) != 1 {
                return Err(Error::NonAdjacentCrossing(c.a + 1, c.b + 1));
            }
            let low = pa.min(pb);
            word.push(c.sign * (low as i32 + 1));
            tcross.push(c.t);
            order.swap(pa, pb);
            slot[c.a] = pb;
            slot[c.b] = pa;
        }
    }
    Ok(DataBraid {
        braid: Braid::from_parts_unchecked(word, np.max(1)),
        tcross,
    })
}

/// Braid of `ts` viewed along the axis at `angle`.
pub fn braid_from_data(ts: &TrajectorySet, angle: f64) -> Result<Braid> {
    Ok(databraid_from_data(ts, angle)?.braid)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LoopNorm {
    MinLength,
    #[default]
    IntAxis,
}

/// One generator of a databraid: strands at positions `pos`, `pos + 1`
/// (1-based) exchange at time `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub t: f64,
    pub pos: usize,
    pub sign: i32,
}

impl DataBraid {
    pub fn new(braid: Braid, tcross: Vec<f64>) -> Result<Self> {
        if tcross.len() != braid.len() {
            return Err(Error::Trajectory(
                "need exactly one crossing time per generator".into(),
            ));
        }
        if tcross.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Trajectory("crossing times must be nondecreasing".into()));
        }
        Ok(DataBraid { braid, tcross })
    }

    pub fn braid(&self) -> &Braid {
        &self.braid
    }

    pub fn tcross(&self) -> &[f64] {
        &self.tcross
    }

    pub fn len(&self) -> usize {
        self.tcross.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tcross.is_empty()
    }

    pub fn crossings(&self) -> impl Iterator<Item = Crossing> + '_ {
        self.braid.word().iter().zip(&self.tcross).map(|(&g, &t)| Crossing {
            t,
            pos: g.unsigned_abs() as usize,
            sign: g.signum(),
        })
    }

    pub fn to_braid(&self) -> Braid {
        self.braid.clone()
    }

    /// Generators whose crossing time lies in `[t0, t1]`.
    pub fn trunc(&self, t0: f64, t1: f64) -> DataBraid {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&k| self.tcross[k] >= t0 && self.tcross[k] <= t1)
            .collect();
        DataBraid {
            braid: Braid::from_parts_unchecked(
                keep.iter().map(|&k| self.braid.word()[k]).collect(),
                self.braid.n(),
            ),
            tcross: keep.iter().map(|&k| self.tcross[k]).collect(),
        }
    }

    /// Concatenation; every crossing of `self` must precede those of `other`.
    pub fn mul(&self, other: &DataBraid) -> Result<DataBraid> {
        if self.braid.n() != other.braid.n() {
            return Err(Error::StrandMismatch(self.braid.n(), other.braid.n()));
        }
        if let (Some(a), Some(b)) = (self.tcross.last(), other.tcross.first()) {
            if a > b {
                return Err(Error::CrossingTimeOrder);
            }
        }
        Ok(DataBraid {
            braid: self.braid.mul(&other.braid)?,
            tcross: self.tcross.iter().chain(&other.tcross).copied().collect(),
        })
    }

    /// Same word, same strand count and identical crossing times.
    pub fn equals(&self, other: &DataBraid) -> bool {
        self.braid.lexeq(&other.braid) && self.tcross == other.tcross
    }

    /// Removes cancelling pairs only; surviving generators keep their times
    /// and order.
    pub fn compact(&self) -> DataBraid {
        let mut word = self.braid.word().to_vec();
        let mut tcross = self.tcross.clone();
        while let Some((i, j)) = cancellable_pair(&word) {
            for k in [j, i] {
                word.remove(k);
                tcross.remove(k);
            }
        }
        DataBraid {
            braid: Braid::from_parts_unchecked(word, self.braid.n()),
            tcross,
        }
    }

    /// Finite-time braiding exponent: log growth rate of the canonical loop
    /// per unit time, over `t` or the span of crossing times.
    pub fn ftbe(&self, t: Option<f64>, norm: LoopNorm) -> Result<f64> {
        let span = match t {
            Some(t) if t > 0.0 => t,
            Some(_) => return Err(Error::FtbeNeedsTime),
            None => {
                if self.len() < 2 {
                    return Err(Error::FtbeNeedsTime);
                }
                self.tcross[self.len() - 1] - self.tcross[0]
            }
        };
        if span <= 0.0 {
            return Err(Error::FtbeNeedsTime);
        }
        let l = Loop::canonical(self.braid.n().max(2), true)?;
        let dir = props::current().gen_loop_act_dir;
        let image = act_dir(&self.braid, &l, dir)?;
        let measure = |x: &Loop| -> BigInt {
            match norm {
                LoopNorm::MinLength => x.minlength(),
                LoopNorm::IntAxis => x.intaxis(),
            }
        };
        let (num, den) = (measure(&image), measure(&l));
        if num.is_zero() || den.is_zero() {
            return Ok(0.0);
        }
        Ok((ln_big(&num) - ln_big(&den)) / span)
    }

    /// Braid JSON plus `"tcross": [...]`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.braid.to_json();
        v["tcross"] = serde_json::json!(self.tcross);
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let braid = Braid::from_json(v)?;
        let tcross: Vec<f64> = serde_json::from_value(v["tcross"].clone())
            .map_err(|e| Error::Parse(e.to_string()))?;
        DataBraid::new(braid, tcross)
    }
}

/// Trajectories that trace the braid diagram of `b`: strands rest at
/// `x = 1..n` and each generator swaps a neighbouring pair along two
/// half-ellipses over one time unit, sampled `steps` times.
pub fn trajectories_from_braid(b: &Braid, steps: usize, baseline: &[f64]) -> TrajectorySet {
    let n = b.n();
    let steps = steps.max(2);
    let mut at: Vec<[f64; 2]> = (0..n).map(|i| [i as f64 + 1.0, baseline.get(i).copied().unwrap_or(0.0)]).collect();
    let mut slot_particle: Vec<usize> = (0..n).collect();
    let mut times = vec![0.0];
    let mut positions = vec![at.clone()];
    let height = 0.5;
    for (k, &g) in b.word().iter().enumerate() {
        let lo = g.unsigned_abs() as usize - 1;
        let (left, right) = (slot_particle[lo], slot_particle[lo + 1]);
        let (xl, xr) = (at[left][0], at[right][0]);
        let (yl, yr) = (at[left][1], at[right][1]);
        let side = if g > 0 { 1.0 } else { -1.0 };
        for s in 1..=steps {
            let u = s as f64 / steps as f64;
            let bump = height * (std::f64::consts::PI * u).sin();
            at[left] = [xl + (xr - xl) * u, yl + side * bump];
            at[right] = [xr + (xl - xr) * u, yr - side * bump];
            times.push(k as f64 + u);
            positions.push(at.clone());
        }
        at[left][1] = yl;
        at[right][1] = yr;
        slot_particle.swap(lo, lo + 1);
    }
    TrajectorySet { times, positions }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(w: &[i32]) -> Braid {
        Braid::new(w.to_vec(), None).unwrap()
    }

    fn jitter(n: usize) -> Vec<f64> {
        (0..n).map(|i| 0.01 * i as f64).collect()
    }

    #[test]
    fn synthetic_round_trip() {
        for w in [&[1, -2, 3][..], &[1, 1, -2, -1, 2, 3, -3], &[2, 1, -2]] {
            let b = br(w);
            let ts = trajectories_from_braid(&b, 8, &jitter(b.n()));
            let db = databraid_with(&ts, 0.0, 1e-10, 1).unwrap();
            assert_eq!(db.braid().word(), w);
            assert_eq!(db.len(), w.len());
            for (k, t) in db.tcross().iter().enumerate() {
                assert!((t - (k as f64 + 0.5)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn rotation_direction_flips_signs() {
        let b = br(&[1, -2]);
        let ts = trajectories_from_braid(&b, 6, &jitter(3));
        let db = databraid_with(&ts, 0.0, 1e-10, -1).unwrap();
        assert_eq!(db.braid().word(), &[-1, 2]);
    }

    #[test]
    fn coincident_projection_is_reported() {
        let ts = trajectories_from_braid(&br(&[1, 2]), 4, &[]);
        let err = databraid_with(&ts, std::f64::consts::FRAC_PI_2, 1e-10, 1).unwrap_err();
        assert!(err.to_string().contains("coincident projection"));
    }

    #[test]
    fn undersampling_is_detected() {
        // particles 1 and 3 swap in one step past particle 2
        let times = vec![0.0, 1.0];
        let positions = vec![
            vec![[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]],
            vec![[2.0, 0.5], [1.0, 1.0], [0.0, 2.5]],
        ];
        let ts = TrajectorySet::new(times, positions).unwrap();
        assert!(databraid_with(&ts, 0.0, 1e-10, 1).is_err());
    }

    #[test]
    fn validation() {
        assert!(TrajectorySet::new(vec![0.0, 0.0], vec![vec![[0.0, 0.0]]; 2]).is_err());
        assert!(TrajectorySet::new(vec![0.0, 1.0], vec![vec![[0.0, 0.0]], vec![]]).is_err());
        assert!(TrajectorySet::new(vec![0.0], vec![vec![[f64::NAN, 0.0]]]).is_err());
    }

    #[test]
    fn csv_and_json_round_trip() {
        let ts = trajectories_from_braid(&br(&[1, -2]), 3, &jitter(3));
        let back = TrajectorySet::from_csv(ts.to_csv().as_bytes()).unwrap();
        assert_eq!(back.nsamples(), ts.nsamples());
        for (r, s) in back.positions().iter().zip(ts.positions()) {
            for (p, q) in r.iter().zip(s) {
                assert!((p[0] - q[0]).abs() < 1e-12 && (p[1] - q[1]).abs() < 1e-12);
            }
        }
        assert_eq!(TrajectorySet::from_json(&ts.to_json()).unwrap(), ts);
        let dup = "t,id,x,y\n0,1,0,0\n0,1,1,0\n";
        assert!(TrajectorySet::from_csv(dup.as_bytes()).is_err());
    }

    #[test]
    fn closure_returns_to_start() {
        let ts = trajectories_from_braid(&br(&[1]), 4, &[0.0, 0.2]);
        for m in [ClosureMethod::Rank, ClosureMethod::MinDistance] {
            let c = ts.closure(m);
            assert_eq!(c.nsamples(), ts.nsamples() + 1);
            let last = &c.positions()[c.nsamples() - 1];
            let mut xs: Vec<f64> = last.iter().map(|p| p[0]).collect();
            xs.sort_by(f64::total_cmp);
            assert_eq!(xs, vec![1.0, 2.0]);
            assert!((c.times()[c.nsamples() - 1] - 1.25).abs() < 1e-12);
        }
    }

    #[test]
    fn databraid_operations() {
        let db = DataBraid::new(br(&[1, -1, 2, -3, 3]), vec![0.5, 1.0, 1.5, 2.0, 2.5]).unwrap();
        let c = db.compact();
        assert_eq!(c.braid().word(), &[2]);
        assert_eq!(c.tcross(), &[1.5]);
        let tr = db.trunc(1.0, 2.0);
        assert_eq!(tr.braid().word(), &[-1, 2, -3]);
        let late = DataBraid::new(br(&[1]).with_strands(4).unwrap(), vec![3.0]).unwrap();
        assert_eq!(db.mul(&late).unwrap().len(), 6);
        assert!(matches!(late.mul(&db), Err(Error::CrossingTimeOrder)));
        assert!(db.equals(&db.clone()));
        assert!(!db.equals(&c));
        let back = DataBraid::from_json(&db.to_json()).unwrap();
        assert!(back.equals(&db));
    }

    #[test]
    fn double_swap_without_exchange_cancels() {
        // particle 1 overtakes particle 2 and falls back, staying above it
        let times: Vec<f64> = (0..5).map(f64::from).collect();
        let xs = [0.0, 1.5, 2.5, 1.5, 0.0];
        let positions = xs.iter().map(|&x| vec![[x, 1.0], [2.0, 0.0]]).collect();
        let ts = TrajectorySet::new(times, positions).unwrap();
        let db = databraid_with(&ts, 0.0, 1e-10, 1).unwrap();
        assert_eq!(db.braid().word(), &[1, -1]);
        assert!(db.compact().is_empty());
        let c: Vec<Crossing> = db.crossings().collect();
        assert_eq!((c[0].pos, c[0].sign), (1, 1));
        assert!(c[0].t > 0.0 && c[0].t < 2.0);
    }

    #[test]
    fn mindist_differs_from_rank() {
        // particle 2 ends leftmost but far above; particle 1 stays near home
        let times = vec![0.0, 1.0];
        let positions = vec![
            vec![[0.0, 0.0], [1.0, 0.0]],
            vec![[0.1, 0.0], [0.0, 3.0]],
        ];
        let ts = TrajectorySet::new(times, positions).unwrap();
        let rank = ts.closure(ClosureMethod::Rank);
        let near = ts.closure(ClosureMethod::MinDistance);
        assert_eq!(rank.positions()[2], vec![[1.0, 0.0], [0.0, 0.0]]);
        assert_eq!(near.positions()[2], vec![[0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(rank.times()[2], 2.0);
    }

    #[test]
    fn trunc_windows_and_products() {
        let b = trajectories_from_braid(&br(&[1, 2, -3]), 4, &jitter(4));
        let db = databraid_with(&b, 0.0, 1e-10, 1).unwrap();
        assert!(db.tcross().windows(2).all(|w| w[0] <= w[1]));
        assert!(db.trunc(f64::NEG_INFINITY, f64::INFINITY).equals(&db));
        assert!(db.trunc(10.0, 20.0).is_empty());
        assert_eq!(db.trunc(1.0, 2.0).braid().word(), &[2]);
        let later = DataBraid::new(br(&[1]).with_strands(4).unwrap(), vec![9.0]).unwrap();
        let prod = db.mul(&later).unwrap();
        assert!(prod.to_braid().lexeq(&db.to_braid().mul(&later.to_braid()).unwrap()));
        let shifted = DataBraid::new(db.to_braid(), db.tcross().iter().map(|t| t + 1.0).collect()).unwrap();
        assert!(!shifted.equals(&db));
        let pair = DataBraid::new(br(&[1, -1]), vec![0.1, 0.2]).unwrap();
        assert!(pair.compact().is_empty());
    }

    #[test]
    fn ftbe_values() {
        let db = DataBraid::new(br(&[1, -2]), vec![0.0, 1.0]).unwrap();
        assert!((db.ftbe(None, LoopNorm::default()).unwrap() - 4f64.ln()).abs() < 1e-15);
        assert_eq!(DataBraid::new(Braid::identity(3), vec![]).unwrap().ftbe(Some(2.0), LoopNorm::IntAxis).unwrap(), 0.0);
        let b = br(&[1, -2]).pow(10);
        let times: Vec<f64> = (0..20).map(|k| k as f64).collect();
        let db = DataBraid::new(b.clone(), times).unwrap();
        let v = db.ftbe(Some(20.0), LoopNorm::MinLength).unwrap();
        assert!(v > 0.3 && v < 0.5, "{v}");
        assert!(db.ftbe(None, LoopNorm::IntAxis).unwrap() > 0.0);
        let one = DataBraid::new(br(&[1]), vec![0.0]).unwrap();
        assert!(matches!(one.ftbe(None, LoopNorm::MinLength), Err(Error::FtbeNeedsTime)));
        assert!(matches!(db.ftbe(Some(0.0), LoopNorm::MinLength), Err(Error::FtbeNeedsTime)));
    }
}
