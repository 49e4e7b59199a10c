use std::time::Instant;

use braidkit::burau::{alexander, burau, burau_at};
use braidkit::dynnikov::{act_batch, act_dir, act_with_matrix_dir, cycle, loopcoords_dir, CycleMode};
use braidkit::laurent::LaurentPoly;
use braidkit::linalg::spectral_radius;
use braidkit::props::LoopActDir;
use braidkit::spectra::{complexity_dir, entropy_dir, entropy_fixed_iterates, DEFAULT_MAXIT, DEFAULT_TOL};
use braidkit::trajectory::{databraid_with, trajectories_from_braid};
use braidkit::{
    AnnularBraid, Braid, ClosureMethod, DataBraid, Error, LinearAction, Loop, LoopBatch, LoopNorm,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LR: LoopActDir = LoopActDir::LeftToRight;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn br(w: &[i32]) -> Braid {
    Braid::new(w.to_vec(), None).unwrap()
}

fn brn(w: &[i32], n: usize) -> Braid {
    Braid::new(w.to_vec(), Some(n)).unwrap()
}

fn lp(c: &[i64]) -> Loop {
    Loop::from_i64(c, false).unwrap()
}

fn mat(rows: &[&[i64]]) -> LinearAction {
    LinearAction::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn close(x: f64, want: f64, tol: f64, what: &str) -> Check {
    ensure!((x - want).abs() <= tol, "{what}: got {x:.6}, want {want} ± {tol}");
    Ok(())
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

fn random_loop(rng: &mut ChaCha8Rng, n: usize) -> Loop {
    loop {
        let c: Vec<i64> = (0..2 * n - 4).map(|_| rng.gen_range(-6..=6)).collect();
        if c.iter().any(|&x| x != 0) {
            return lp(&c);
        }
    }
}

fn action_fixtures() -> Check {
    let l = lp(&[-1, 1, -2, 0, -1, 0]);
    let got = act_dir(&br(&[-1]), &l, LR).map_err(|e| e.to_string())?;
    ensure!(got == lp(&[-1, 1, -2, 1, -1, 0]), "σ1^-1 action gave {got}");
    let b = br(&[1, -2]);
    let (img, m) = act_with_matrix_dir(&b, &lp(&[0, -1]), LR).unwrap();
    ensure!(img == lp(&[1, -1]), "action on (0,-1) gave {img}");
    ensure!(m == mat(&[&[1, -1], &[0, 1]]), "matrix on (0,-1) was\n{m}");
    let batch = LoopBatch::from_rows(&[vec![-1, 1, -2, 0], vec![1, -2, 3, 4]], false).unwrap();
    let out = act_batch(&b, &batch).unwrap();
    ensure!(
        out.loops() == [lp(&[2, 1, -2, 1]), lp(&[5, -2, -3, 11])],
        "batch action gave {out}"
    );
    let (_, m) = act_with_matrix_dir(&b, &Loop::canonical(3, true).unwrap(), LR).unwrap();
    let want = mat(&[&[0, 0, -1, 0], &[0, 1, 0, 1], &[0, 1, 1, 1], &[1, -1, -1, 0]]);
    ensure!(m == want, "canonical matrix was\n{m}");
    Ok(())
}

fn normal_form() -> Check {
    let l = loopcoords_dir(&br(&[1, 2, 3, -4]), LR);
    let want = Loop::from_i64(&[0, 0, 3, -1, -1, -1, -4, 3], true).unwrap();
    ensure!(l == want, "loopcoords gave {l}");
    ensure!(
        br(&[1, -2]).equals(&br(&[1, -2, 2, 1, 2, -1, -2, -1])).unwrap(),
        "equality example returned false"
    );
    let a = br(&[1, -2]);
    ensure!(a.mul(&a.inverse()).unwrap().is_trivial(), "a·a^-1 is not trivial");
    Ok(())
}

fn entropy_values() -> Check {
    let a = br(&[1, 2, -3]);
    let cases: Vec<(&str, Braid, f64)> = vec![
        ("[1 2 -3]", a.clone(), 0.8314),
        ("[1 -2]", br(&[1, -2]), 0.9624),
        ("[1 2 3 -4]", br(&[1, 2, 3, -4]), 0.7672),
        ("taffy3", br(&[-2, 1, 1, -2]), 1.7627),
        ("taffy4", br(&[1, 3, 2, 2, 1, 3]), 1.7627),
        ("taffy6", br(&[3, 2, 1, 2, 4, 5, 4, 3, 3, 2, 1, 2, 5, 4, 5, 3]), 2.6339),
        ("annular [1 -2]", AnnularBraid::new(vec![1, -2], None).unwrap().to_braid(), 1.7627),
        ("a^4", a.pow(4), 3.3258),
    ];
    for (name, b, want) in cases {
        let r = entropy_dir(&b, DEFAULT_TOL, DEFAULT_MAXIT, LR);
        ensure!(r.converged, "{name} did not converge");
        close(r.value, want, 1e-3, name)?;
    }
    let b2 = a.pow(4).subbraid(&[1, 2, 4]).unwrap();
    ensure!(b2.word() == [1, -2, 1, -2, 1, 2], "subbraid gave {b2}");
    for (name, b) in [("[1 2]", br(&[1, 2])), ("b2", b2)] {
        let r = entropy_dir(&b, DEFAULT_TOL, DEFAULT_MAXIT, LR);
        ensure!(!r.converged && r.value == 0.0, "{name} gave {r:?}");
    }
    Ok(())
}

fn fixed_iterates() -> Check {
    let v = entropy_fixed_iterates(&br(&[1, 2, 3, -4]), &lp(&[-1, 1, -2, 0, -1, 0]), 100)
        .map_err(|e| e.to_string())?;
    close(v, 0.7637, 1e-4, "100 iterates")
}

fn complexity_values() -> Check {
    close(complexity_dir(&br(&[1, -2]), LR), 2.0, 1e-4, "[1 -2]")?;
    close(complexity_dir(&br(&[1, 2]), LR), 1.5850, 1e-4, "[1 2]")
}

fn cycles() -> Check {
    let r = cycle(&br(&[1, 2, 3]), None, 1000, CycleMode::Product).map_err(|e| e.to_string())?;
    ensure!(r.period == 4, "[1 2 3] period {}", r.period);
    let r = cycle(&br(&[1, -2]), Some(&lp(&[1, 1])), 1000, CycleMode::PerIterate).unwrap();
    ensure!(r.period == 1, "[1 -2] on (1,1) period {}", r.period);
    ensure!(r.matrices[0] == mat(&[&[2, -1], &[-1, 1]]), "matrix\n{}", r.matrices[0]);
    let l = Loop::canonical(5, false).unwrap();
    let r = cycle(&br(&[-1, -2, -3, 4]), Some(&l), 1000, CycleMode::PerIterate).unwrap();
    ensure!(r.period == 2, "[-1 -2 -3 4] period {}", r.period);
    let first = mat(&[
        &[-1, 1, 0, 0, 0, 0],
        &[0, 0, 0, 1, 1, 0],
        &[0, 0, 2, -1, -1, 1],
        &[0, 0, 0, 0, 1, 0],
        &[-1, 0, 1, -1, -1, 1],
        &[0, 0, 1, 0, 0, 1],
    ]);
    let second = mat(&[
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 1, 1, 0],
        &[0, 0, 2, -1, -1, 1],
        &[-1, 1, 0, -1, 1, 0],
        &[0, -1, 1, 0, -1, 1],
        &[0, 0, 1, 0, 0, 1],
    ]);
    ensure!(r.matrices == vec![first, second], "6×6 cycle matrices differ");
    for w in [&[1, -2][..], &[1, 2, -3], &[1, 2, 3, -4], &[-2, 1, 1, -2]] {
        let b = br(w);
        let r = cycle(&b, None, 1000, CycleMode::Product).unwrap();
        let from_cycle = spectral_radius(&r.matrices[0]).ln() / r.period as f64;
        let h = entropy_dir(&b, DEFAULT_TOL, DEFAULT_MAXIT, LR).value;
        close(from_cycle, h, 1e-4, &format!("cycle entropy of {b}"))?;
    }
    Ok(())
}

fn loop_functionals() -> Check {
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let l = lp(&[-1, 1, -2, 0, -1, 0]);
    let i = l.intersec();
    ensure!(i.mu == ints(&[2, 0, 1, 3, 4, 0]), "mu {:?}", i.mu);
    ensure!(i.nu == ints(&[2, 2, 4, 4]), "nu {:?}", i.nu);
    for (c, want) in [(&[-1, 1, -2, 0, -1, 0][..], 12), (&[-1, 1, -2, 0], 14), (&[1, -2, 3, 4], 34)] {
        let m = lp(c).minlength();
        ensure!(m == BigInt::from(want), "minlength {c:?} = {m}");
    }
    ensure!(l.intaxis() == BigInt::from(12), "intaxis {}", l.intaxis());
    Ok(())
}

fn polynomials(rng: &mut ChaCha8Rng) -> Check {
    let q = |x: i64| BigRational::from_integer(x.into());
    let b = br(&[1, -2]);
    let at = burau_at(&b, &q(-1)).unwrap();
    ensure!(at.rows() == [vec![q(1), q(-1)], vec![q(-1), q(2)]], "Burau at -1\n{at}");
    let sym = burau(&b);
    let want = [
        [LaurentPoly::monomial(-1, 1), LaurentPoly::monomial(1, 1)],
        [LaurentPoly::monomial(-1, 0), LaurentPoly::from_i64(-1, &[-1, 1])],
    ];
    ensure!(sym.rows().iter().zip(&want).all(|(r, w)| r[..] == w[..]), "symbolic Burau\n{sym}");
    let show = |w: &[i32], c: bool| alexander(&br(w), c).map(|p| p.to_string());
    ensure!(show(&[1, 1, 1], false).unwrap() == "+ z^(+2) - z^(+1) + 1", "trefoil");
    ensure!(show(&[1, -2, 1, -2], false).unwrap() == "- 1 + 3*z^(-1) - z^(-2)", "figure-eight");
    ensure!(show(&[1, -2, 1, -2], true).unwrap() == "- z^(+1) + 3 - z^(-1)", "centered figure-eight");
    let hopf = alexander(&br(&[1, 1]), false).unwrap();
    ensure!(hopf == LaurentPoly::from_i64(0, &[1, -1]), "Hopf gave {hopf}");
    match show(&[1, 1], true) {
        Err(e) => ensure!(e.to_string() == "Polynomial with fractional powers.", "Hopf error {e}"),
        Ok(p) => return Err(format!("centered Hopf gave {p}")),
    }
    for _ in 0..100 {
        let n = rng.gen_range(2..=6);
        let len = rng.gen_range(0..=16);
        let b = brn(&random_word(rng, n, len), n);
        let w = b.writhe();
        let want = LaurentPoly::monomial(if w % 2 == 0 { 1 } else { -1 }, w);
        ensure!(burau(&b).det() == want, "det Burau of {b}");
    }
    Ok(())
}

fn structure_ops() -> Check {
    let a = brn(&[1, 2, -3], 4);
    ensure!(a.subbraid(&[1, 2, 4]).unwrap().word() == [1, -2], "subbraid");
    let t = a.tensor(&br(&[1, -2]));
    ensure!(t.word() == [1, 2, -3, 5, -6] && t.n() == 7, "tensor gave {t}");
    ensure!(a.perm() == [2, 3, 4, 1], "perm {:?}", a.perm());
    ensure!(a.pow(4).perm() == [1, 2, 3, 4], "perm of a^4");
    ensure!(a.writhe() == 1, "writhe {}", a.writhe());
    let h = Braid::half_twist(5).unwrap();
    ensure!(h.word() == [4, 3, 2, 1, 4, 3, 2, 4, 3, 4], "halftwist gave {h}");
    let b2 = brn(&[1, -2, 1, -2, 1, 2], 3);
    let c = brn(&[2, -1], 3);
    let conj = c.mul(&b2).unwrap().mul(&c.inverse()).unwrap();
    ensure!(conj.equals(&brn(&[1, 1], 3)).unwrap(), "c·b2·c^-1 != [1 1]");
    Ok(())
}

fn property_suites(rng: &mut ChaCha8Rng) -> Check {
    let mut singular = 0usize;
    let mut first_singular = None;
    for _ in 0..1000 {
        let n = rng.gen_range(3..=8);
        let l = random_loop(rng, n);
        let i = rng.gen_range(1..n as i32 - 1);
        let j = rng.gen_range(1..n as i32);
        let w = |v: Vec<i32>| brn(&v, n);
        let act = |b: &Braid, l: &Loop| act_dir(b, l, LR).unwrap();
        ensure!(act(&w(vec![i, i + 1, i]), &l) == act(&w(vec![i + 1, i, i + 1]), &l), "braid relation {i} on {l}");
        ensure!(act(&w(vec![-i, -i - 1, -i]), &l) == act(&w(vec![-i - 1, -i, -i - 1]), &l), "inverse braid relation");
        if (i - j).abs() >= 2 {
            ensure!(act(&w(vec![i, j]), &l) == act(&w(vec![j, i]), &l), "commutation {i} {j} on {l}");
        }
        ensure!(act(&w(vec![j, -j]), &l) == l && act(&w(vec![-j, j]), &l) == l, "σσ^-1 on {l}");
        let len = rng.gen_range(0..=12);
        let b = w(random_word(rng, n, len));
        ensure!(act(&b.mul(&b.inverse()).unwrap(), &l) == l, "b·b^-1 on {l}");
        let (img, m) = act_with_matrix_dir(&b, &l, LR).unwrap();
        ensure!(m.apply(&l.coords()) == img.coords(), "matrix of {b} on {l}");
        if !m.det().abs().eq(&BigInt::from(1)) {
            singular += 1;
            first_singular.get_or_insert(format!("{b} on {l}: det {}", m.det()));
        }
        let c = w(random_word(rng, n, 8));
        let bc = b.mul(&c).unwrap();
        ensure!(bc.writhe() == b.writhe() + c.writhe(), "writhe homomorphism");
        let (pb, pc) = (b.perm(), c.perm());
        ensure!(bc.perm() == (0..n).map(|k| pb[pc[k] - 1]).collect::<Vec<_>>(), "perm homomorphism");
    }
    let pa = [br(&[1, -2]), br(&[1, 2, -3]), br(&[-2, 1, 1, -2])];
    for b in &pa {
        let h = |x: &Braid| entropy_dir(x, 1e-8, 2000, LR).value;
        let e = h(b);
        close(h(&b.inverse()), e, 1e-3, "inverse invariance")?;
        close(h(&b.pow(3)), 3.0 * e, 3e-3, "power law")?;
        let c = brn(&random_word(rng, b.n(), 6), b.n());
        close(h(&c.mul(b).unwrap().mul(&c.inverse()).unwrap()), e, 1e-3, "conjugation invariance")?;
    }
    ensure!(
        singular == 0,
        "|det M| != 1 for {singular} of 1000 random actions (first: {})",
        first_singular.unwrap_or_default()
    );
    Ok(())
}

fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for s in 0..perm.len() {
        let (mut k, mut len) = (s, 0);
        while !seen[k] {
            seen[k] = true;
            k = perm[k] - 1;
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable();
    lens
}

fn trajectory_pipeline(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let len = rng.gen_range(0..=20);
        let b = brn(&random_word(rng, n, len), n);
        let base: Vec<f64> = (0..n).map(|i| 0.013 * i as f64).collect();
        let ts = trajectories_from_braid(&b, 10, &base);
        let db = databraid_with(&ts, 0.0, 1e-10, 1).map_err(|e| e.to_string())?;
        ensure!(db.braid().word() == b.word(), "round trip of {b} gave {}", db.braid());
        let closed = ts.closure(ClosureMethod::Rank);
        let at_zero = databraid_with(&closed, 0.0, 1e-10, 1).map_err(|e| e.to_string())?;
        ensure!(at_zero.braid().word() == b.word(), "closure changed {b}");
        let angle = rng.gen_range(0.05..0.6);
        let tilted = databraid_with(&closed, angle, 1e-10, 1).map_err(|e| e.to_string())?;
        ensure!(tilted.braid().writhe() == b.writhe(), "writhe of {b} at angle {angle}");
        ensure!(cycle_type(&tilted.braid().perm()) == cycle_type(&b.perm()), "cycle type of {b}");
        if b.len() >= 2 {
            let times: Vec<f64> = db.tcross().iter().map(|t| 0.25 * t).collect();
            let scaled = DataBraid::new(b.clone(), times).unwrap();
            for norm in [LoopNorm::MinLength, LoopNorm::IntAxis] {
                let (x, y) = (scaled.ftbe(None, norm).unwrap(), db.ftbe(None, norm).unwrap());
                ensure!(x == 4.0 * y, "FTBE scaling {x} vs {y}");
            }
        }
    }
    let ts = trajectories_from_braid(&br(&[1, -2, 1]), 8, &[0.0; 3]);
    match databraid_with(&ts, std::f64::consts::FRAC_PI_2, 1e-10, 1) {
        Err(e) => ensure!(e.to_string().contains("have a coincident projection"), "error was {e}"),
        Ok(db) => return Err(format!("aligned start gave {}", db.braid())),
    }
    Ok(())
}

fn databraid_laws(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(0..=16);
        let b = brn(&random_word(rng, n, len), n);
        let db = DataBraid::new(b.clone(), (0..len).map(|k| k as f64).collect()).unwrap();
        let c = db.compact();
        ensure!(c.tcross().len() == c.braid().len(), "compact lengths");
        ensure!(c.braid().equals(&b).unwrap(), "compact changed {b}");
        let mut rest = db.tcross().iter().zip(db.braid().word());
        for (t, g) in c.tcross().iter().zip(c.braid().word()) {
            ensure!(rest.any(|(t0, g0)| t0 == t && g0 == g), "compact moved generator {g} at {t}");
        }
        let tr = db.trunc(1.0, 5.0);
        ensure!(tr.tcross().len() == tr.braid().len(), "trunc lengths");
        let later = DataBraid::new(brn(&[1], n), vec![len as f64 + 1.0]).unwrap();
        let prod = db.mul(&later).map_err(|e| e.to_string())?;
        ensure!(prod.tcross().len() == prod.braid().len(), "mul lengths");
        if len > 0 {
            ensure!(matches!(later.mul(&db), Err(Error::CrossingTimeOrder)), "time order not enforced");
        }
    }
    Ok(())
}

fn main() {
    let rng = ChaCha8Rng::seed_from_u64(20240617);
    let mut failed = 0;
    let mut run = |id: usize, name: &str, check: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {id:>2} PASS  {name} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} ({secs:.2}s): {why}");
            }
        }
    };
    run(1, "action fixtures", &mut action_fixtures);
    run(2, "normal form", &mut normal_form);
    run(3, "entropy", &mut entropy_values);
    run(4, "fixed-iterate estimate", &mut fixed_iterates);
    run(5, "complexity", &mut complexity_values);
    run(6, "cycles", &mut cycles);
    run(7, "loop functionals", &mut loop_functionals);
    run(8, "polynomials", &mut || polynomials(&mut rng.clone()));
    run(9, "structure ops", &mut structure_ops);
    run(10, "property suites", &mut || property_suites(&mut rng.clone()));
    run(11, "trajectory pipeline", &mut || trajectory_pipeline(&mut rng.clone()));
    run(12, "databraid laws", &mut || databraid_laws(&mut rng.clone()));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
