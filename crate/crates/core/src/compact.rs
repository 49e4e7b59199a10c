//! Word shortening and equality through loop coordinates.

use crate::braid::Braid;
use crate::dynnikov::loopcoords_dir;
use crate::error::{Error, Result};
use crate::props::LoopActDir;

impl Braid {
    /// Equality as elements of the braid group.
    pub fn equals(&self, other: &Braid) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::StrandMismatch(self.n(), other.n()));
        }
        let dir = LoopActDir::LeftToRight;
        Ok(loopcoords_dir(self, dir) == loopcoords_dir(other, dir))
    }

    pub fn is_trivial(&self) -> bool {
        let dir = LoopActDir::LeftToRight;
        loopcoords_dir(self, dir) == loopcoords_dir(&Braid::identity(self.n()), dir)
    }

    /// A shorter word for the same braid. Not guaranteed to be minimal.
    pub fn compact(&self) -> Braid {
        Braid::from_parts_unchecked(compact_word(self.word()), self.n())
    }
}

fn commutes(x: i32, y: i32) -> bool {
    x == y || (x.abs() - y.abs()).abs() > 1
}

fn cancel_free(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &g in w {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// First pair `(i, j)` where `w[j]` inverts `w[i]` and every letter between
/// them commutes with `w[i]`.
pub(crate) fn cancellable_pair(w: &[i32]) -> Option<(usize, usize)> {
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[j] == -w[i] {
                return Some((i, j));
            }
            if !commutes(w[i], w[j]) {
                break;
            }
        }
    }
    None
}

fn cancel_commuting(w: &mut Vec<i32>) -> bool {
    match cancellable_pair(w) {
        Some((i, j)) => {
            w.remove(j);
            w.remove(i);
            true
        }
        None => false,
    }
}

fn reduce(w: &[i32]) -> Vec<i32> {
    let mut w = cancel_free(w);
    while cancel_commuting(&mut w) {
        w = cancel_free(&w);
    }
    w
}

/// Replacement for the three letters starting at `p`, if a braid relation
/// applies there.
fn rewrite_at(w: &[i32], p: usize) -> Option<[i32; 3]> {
    let (x, y, z) = (w[p], w[p + 1], w[p + 2]);
    let (i, j) = (x.abs(), y.abs());
    if (i - j).abs() != 1 {
        return None;
    }
    let e = x.signum();
    if y.signum() == e && z == x {
        Some([j * e, i * e, j * e])
    } else if z == -x {
        Some([-j * e, i * y.signum(), j * e])
    } else {
        None
    }
}

fn rewritten(w: &[i32], p: usize, r: [i32; 3]) -> Vec<i32> {
    let mut v = w.to_vec();
    v[p..p + 3].copy_from_slice(&r);
    v
}

fn shorter_by_relation(w: &[i32]) -> Option<Vec<i32>> {
    if w.len() < 3 {
        return None;
    }
    for p in 0..w.len() - 2 {
        let Some(r) = rewrite_at(w, p) else { continue };
        let w1 = rewritten(w, p, r);
        let red = reduce(&w1);
        if red.len() < w.len() {
            return Some(red);
        }
        let lo = p.saturating_sub(2);
        let hi = (p + 2).min(w1.len() - 3);
        for q in lo..=hi {
            if q == p {
                continue;
            }
            let Some(r2) = rewrite_at(&w1, q) else { continue };
            let red = reduce(&rewritten(&w1, q, r2));
            if red.len() < w.len() {
                return Some(red);
            }
        }
    }
    None
}

pub(crate) fn compact_word(w: &[i32]) -> Vec<i32> {
    let mut w = reduce(w);
    while let Some(next) = shorter_by_relation(&w) {
        w = next;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(w: &[i32], n: Option<usize>) -> Braid {
        Braid::new(w.to_vec(), n).unwrap()
    }

    #[test]
    fn equality_examples() {
        let a = br(&[1, -2], None);
        let b = br(&[1, -2, 2, 1, 2, -1, -2, -1], None);
        assert!(a.equals(&b).unwrap());
        assert!(!br(&[1], Some(2)).equals(&br(&[-1], Some(2))).unwrap());
        assert!(a.equals(&br(&[1], Some(2))).is_err());
    }

    #[test]
    fn conjugation_example() {
        let c = br(&[2, -1], Some(3));
        let b2 = br(&[1, -2, 1, -2, 1, 2], None);
        let lhs = c.mul(&b2).unwrap().mul(&c.inverse()).unwrap();
        assert!(lhs.equals(&br(&[1, 1], Some(3))).unwrap());
    }

    #[test]
    fn triviality() {
        let a = br(&[1, -2], None);
        assert!(a.mul(&a.inverse()).unwrap().is_trivial());
        assert!(Braid::identity(4).is_trivial());
        assert!(!br(&[1, 1], None).is_trivial());
    }

    #[test]
    fn compaction() {
        assert_eq!(br(&[1, -2, 2, -1], None).compact().to_string(), "< e >");
        assert_eq!(Braid::identity(3).compact(), Braid::identity(3));
        let c = br(&[1, 3, -1], None).compact();
        assert_eq!(c.word(), &[3]);
        assert_eq!(c.n(), 4);
        // needs a braid relation: 1 2 1 -2 -1 -2 is trivial
        assert!(br(&[1, 2, 1, -2, -1, -2], None).compact().is_empty());
    }
}
