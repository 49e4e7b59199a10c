//! Topological entropy estimates and one-step complexity.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::Braid;
use crate::dynnikov::{act_dir, act_slices, cycle, CycleMode};
use crate::error::Result;
use crate::linalg::{ln_big, spectral_radius};
use crate::loops::{intaxis_f64, Loop};
use crate::props::{self, LoopActDir};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyResult {
    pub value: f64,
    pub converged: bool,
    pub iterations: usize,
}

pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_MAXIT: usize = 1000;
const WINDOW: usize = 5;

pub fn entropy(b: &Braid, tol: f64, maxit: usize) -> EntropyResult {
    entropy_dir(b, tol, maxit, props::current().gen_loop_act_dir)
}

/// Iterates `b` on the canonical loop in floating point, tracking the
/// per-application growth of the axis-intersection count.
pub fn entropy_dir(b: &Braid, tol: f64, maxit: usize, dir: LoopActDir) -> EntropyResult {
    let l = Loop::canonical(b.n().max(2), true).expect("n >= 2");
    let mut a: Vec<f64> = l.a().iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let mut bb: Vec<f64> = l.b().iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let mut len = intaxis_f64(&a, &bb, true);
    let mut recent: Vec<f64> = Vec::with_capacity(WINDOW);
    for it in 1..=maxit {
        act_slices(b, &mut a, &mut bb, dir);
        let next = intaxis_f64(&a, &bb, true);
        let est = (next / len).ln();
        if recent.len() == WINDOW {
            recent.remove(0);
        }
        recent.push(est);
        let scale = a.iter().chain(&bb).fold(0.0f64, |m, x| m.max(x.abs()));
        if scale > 0.0 {
            a.iter_mut().chain(bb.iter_mut()).for_each(|x| *x /= scale);
        }
        len = next / scale;
        if recent.len() == WINDOW
            && recent.windows(2).all(|w| (w[1] - w[0]).abs() <= tol * w[1].abs())
        {
            return EntropyResult {
                value: est.max(0.0),
                converged: true,
                iterations: it,
            };
        }
    }
    EntropyResult {
        value: 0.0,
        converged: false,
        iterations: maxit,
    }
}

/// `(1/k) ln(minlength(b^k l) / minlength(l))`, with exact integers up to the
/// final logarithm.
pub fn entropy_fixed_iterates(b: &Braid, l: &Loop, k: usize) -> Result<f64> {
    let dir = props::current().gen_loop_act_dir;
    let image = act_dir(&b.pow(k as i64), l, dir)?;
    let (num, den) = (image.minlength(), l.minlength());
    if den.is_zero() || num.is_zero() {
        return Ok(0.0);
    }
    Ok((ln_big(&num) - ln_big(&den)) / k.max(1) as f64)
}

/// Base-2 log of how much one application of `b` multiplies the
/// axis-intersection count of the canonical loop.
pub fn complexity(b: &Braid) -> f64 {
    complexity_dir(b, props::current().gen_loop_act_dir)
}

pub fn complexity_dir(b: &Braid, dir: LoopActDir) -> f64 {
    let e = Loop::canonical(b.n().max(2), true).expect("n >= 2");
    let image = act_dir(b, &e, dir).expect("strand counts agree");
    (ln_big(&image.intaxis()) - ln_big(&e.intaxis())) / std::f64::consts::LN_2
}

/// Entropy read off the limit cycle of the effective linear action.
pub fn entropy_from_cycle(b: &Braid, maxit: usize) -> Result<f64> {
    let r = cycle(b, None, maxit, CycleMode::Product)?;
    Ok(spectral_radius(&r.matrices[0]).ln() / r.period as f64)
}
