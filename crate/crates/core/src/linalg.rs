//! Exact integer linear algebra: determinants, characteristic polynomials,
//! and the spectral radius derived from them.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dynnikov::LinearAction;

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn det_bareiss(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Coefficients of `det(xI - M)`, highest degree first, by the
/// division-free Berkowitz algorithm.
pub fn charpoly(m: &LinearAction) -> Vec<BigInt> {
    charpoly_rows(&m.rows())
}

pub fn charpoly_rows(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut v = vec![BigInt::one()];
    for r in 0..n {
        // Toeplitz column: 1, -a_rr, -R·C, -R·A·C, ..., -R·A^{r-1}·C
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-&a[r][r]);
        let mut col: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc: BigInt = (0..r).map(|j| &a[r][j] * &col[j]).sum();
            t.push(-rc);
            col = (0..r)
                .map(|i| (0..r).map(|j| &a[i][j] * &col[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                if i >= j {
                    *out += &t[i - j] * vj;
                }
            }
        }
        v = next;
    }
    v
}

// Polynomials below are stored lowest degree first.

fn trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut p);
    let mut g = content(&p);
    if g.is_zero() {
        return p;
    }
    if p.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

fn is_zero_poly(p: &[BigInt]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    if p.len() <= 1 {
        return vec![BigInt::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    trim(&mut r);
    while !is_zero_poly(&r) && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] -= &lr * bk;
        }
        trim(&mut r);
        r = primitive(r);
    }
    r
}

fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a.to_vec());
    let mut y = primitive(b.to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !is_zero_poly(&y) {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if is_zero_poly(&r) { vec![BigInt::zero()] } else { primitive(r) };
    }
    primitive(x)
}

/// Exact quotient of `p` by a primitive divisor `g`.
fn poly_div_exact(p: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut r = p.to_vec();
    trim(&mut r);
    let dg = g.len() - 1;
    if r.len() <= dg {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); r.len() - dg];
    for s in (0..q.len()).rev() {
        let (coef, rem) = r[s + dg].div_rem(&g[dg]);
        debug_assert!(rem.is_zero());
        for (k, gk) in g.iter().enumerate() {
            r[s + k] -= &coef * gk;
        }
        q[s] = coef;
    }
    q
}

/// Natural logarithm of a positive big integer.
pub fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        x.to_f64().map(f64::ln).unwrap_or(f64::NAN)
    } else {
        let shift = bits - 64;
        let top: BigInt = x >> shift;
        top.to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

fn horner(p: &[f64], z: Complex64) -> (Complex64, Complex64) {
    // p lowest first; returns p(z), p'(z)
    let mut val = Complex64::new(0.0, 0.0);
    let mut der = Complex64::new(0.0, 0.0);
    for &c in p.iter().rev() {
        der = der * z + val;
        val = val * z + c;
    }
    (val, der)
}

/// All complex roots of a square-free polynomial (lowest degree first) by
/// the Aberth–Ehrlich iteration, polished with Newton steps.
fn aberth(p: &[f64]) -> Vec<Complex64> {
    let d = p.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = p[d];
    let monic: Vec<f64> = p.iter().map(|c| c / lead).collect();
    let radius = (0..d)
        .map(|k| monic[k].abs().powf(1.0 / (d - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius, th)
        })
        .collect();
    for _ in 0..2000 {
        let mut worst = 0.0f64;
        for k in 0..d {
            let (v, dv) = horner(&monic, z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let s: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[k] -= step;
            worst = worst.max(step.norm() / z[k].norm().max(1e-300));
        }
        if worst < 1e-15 {
            break;
        }
    }
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (v, dv) = horner(&monic, *zk);
            if dv.norm() == 0.0 {
                break;
            }
            *zk -= v / dv;
        }
    }
    z
}

/// Complex eigenvalues of an integer matrix (each distinct value once).
pub fn eigenvalues(m: &LinearAction) -> Vec<Complex64> {
    let mut p: Vec<BigInt> = charpoly(m);
    p.reverse();
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    let p: Vec<BigInt> = p[zeros..].to_vec();
    let mut roots = Vec::new();
    if zeros > 0 {
        roots.push(Complex64::new(0.0, 0.0));
    }
    if p.len() <= 1 {
        return roots;
    }
    let g = poly_gcd(&p, &derivative(&p));
    let sf = primitive(poly_div_exact(&primitive(p.clone()), &g));
    let scale = sf.iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = scale.saturating_sub(900);
    let f: Vec<f64> = sf
        .iter()
        .map(|c| {
            let c: BigInt = if shift > 0 { c >> shift } else { c.clone() };
            c.to_f64().unwrap_or(0.0)
        })
        .collect();
    roots.extend(aberth(&f));
    roots
}

/// Largest modulus among the eigenvalues.
pub fn spectral_radius(m: &LinearAction) -> f64 {
    eigenvalues(m).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
