use braidkit::trajectory::{databraid_with, trajectories_from_braid};
use braidkit::{Braid, ClosureMethod, DataBraid, Error, LoopNorm};
use proptest::prelude::*;

fn braid(max_n: usize, max_len: usize) -> impl Strategy<Value = Braid> {
    (2..=max_n).prop_flat_map(move |n| {
        let g = (n - 1) as i32;
        prop::collection::vec((1..=g, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..=max_len)
            .prop_map(move |w| Braid::new(w, Some(n)).unwrap())
    })
}

fn baseline(n: usize) -> Vec<f64> {
    (0..n).map(|i| 0.013 * i as f64).collect()
}

fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut k = s;
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn synthetic_round_trip(b in braid(6, 20)) {
        let ts = trajectories_from_braid(&b, 10, &baseline(b.n()));
        let db = databraid_with(&ts, 0.0, 1e-10, 1).unwrap();
        prop_assert_eq!(db.braid().word(), b.word());
        prop_assert_eq!(db.tcross().len(), db.braid().len());
    }

    #[test]
    fn closure_and_projection_angle(b in braid(5, 12), angle in 0.05f64..0.6) {
        let ts = trajectories_from_braid(&b, 12, &baseline(b.n()));
        let closed = ts.closure(ClosureMethod::Rank);
        let at_zero = databraid_with(&closed, 0.0, 1e-10, 1).unwrap();
        prop_assert_eq!(at_zero.braid().word(), b.word());
        let tilted = databraid_with(&closed, angle, 1e-10, 1).unwrap();
        prop_assert_eq!(tilted.braid().writhe(), b.writhe());
        prop_assert_eq!(cycle_type(&tilted.braid().perm()), cycle_type(&b.perm()));
    }

    #[test]
    fn ftbe_scales_with_time(b in braid(5, 12), shift in -3.0f64..3.0, e in -3i32..=3) {
        prop_assume!(b.len() >= 2);
        let times: Vec<f64> = (0..b.len()).map(|k| shift + 0.75 * k as f64).collect();
        let scale = 2f64.powi(e);
        let db = DataBraid::new(b.clone(), times.clone()).unwrap();
        let scaled = DataBraid::new(b, times.iter().map(|t| t * scale).collect()).unwrap();
        for norm in [LoopNorm::MinLength, LoopNorm::IntAxis] {
            prop_assert_eq!(scaled.ftbe(None, norm).unwrap(), db.ftbe(None, norm).unwrap() / scale);
            prop_assert_eq!(db.ftbe(Some(4.0), norm).unwrap(), db.ftbe(Some(1.0), norm).unwrap() / 4.0);
        }
    }

    #[test]
    fn databraid_laws(b in braid(5, 16), c in braid(5, 6)) {
        prop_assume!(b.n() == c.n());
        let t: Vec<f64> = (0..b.len()).map(|k| k as f64).collect();
        let db = DataBraid::new(b.clone(), t).unwrap();
        let compact = db.compact();
        prop_assert_eq!(compact.tcross().len(), compact.braid().len());
        prop_assert!(compact.len() <= db.len());
        prop_assert!(compact.braid().equals(db.braid()).unwrap());
        // surviving crossings keep their original times, in order
        let mut rest = db.tcross().iter().zip(db.braid().word());
        for (t, g) in compact.tcross().iter().zip(compact.braid().word()) {
            prop_assert!(rest.any(|(t0, g0)| t0 == t && g0 == g));
        }
        let later: Vec<f64> = (0..c.len()).map(|k| 100.0 + k as f64).collect();
        let dc = DataBraid::new(c, later).unwrap();
        let prod = db.mul(&dc).unwrap();
        prop_assert_eq!(prod.tcross().len(), prod.braid().len());
        if !db.is_empty() && !dc.is_empty() {
            prop_assert!(matches!(dc.mul(&db), Err(Error::CrossingTimeOrder)));
        }
        let tr = prod.trunc(0.0, 99.0);
        prop_assert_eq!(tr.tcross().len(), tr.braid().len());
        prop_assert!(tr.equals(&db));
    }
}

#[test]
fn aligned_start_is_coincident() {
    let b = Braid::new(vec![1, -2, 1], None).unwrap();
    let ts = trajectories_from_braid(&b, 8, &[0.0; 3]);
    let err = databraid_with(&ts, std::f64::consts::FRAC_PI_2, 1e-10, 1).unwrap_err();
    assert!(err.to_string().contains("have a coincident projection"));
}

#[test]
fn mindist_closure_is_a_braid_closure() {
    let b = Braid::new(vec![1, 2, -1, 3], None).unwrap();
    let ts = trajectories_from_braid(&b, 8, &baseline(4));
    let closed = ts.closure(ClosureMethod::MinDistance);
    let db = databraid_with(&closed, 0.0, 1e-10, 1).unwrap();
    assert_eq!(db.braid().word(), b.word());
}
