//! Braids whose last strand winds around a fixed central puncture.

use std::fmt;

use crate::braid::{fmt_word, parse_json_word, Braid};
use crate::error::{Error, Result};

/// A word in the annular generators `1..=nann`; generator `nann` carries the
/// last moving puncture past the central one back to the first position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnularBraid {
    word: Vec<i32>,
    nann: usize,
}

impl AnnularBraid {
    pub fn new(word: Vec<i32>, nann: Option<usize>) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let top = word.iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(1);
        let nann = nann.unwrap_or(top).max(1);
        if top > nann {
            return Err(Error::GeneratorOutOfRange { index: top as i32, n: nann });
        }
        Ok(AnnularBraid { word, nann })
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// Number of moving punctures.
    pub fn nann(&self) -> usize {
        self.nann
    }

    /// Strand count of the equivalent ordinary braid.
    pub fn n(&self) -> usize {
        self.nann + 1
    }

    /// `{"n": nann + 1, "word": [...], "annular": true}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n(), "word": self.word, "annular": true })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let (word, n) = parse_json_word(v)?;
        AnnularBraid::new(word, n.map(|n| n.saturating_sub(1)))
    }

    pub fn to_braid(&self) -> Braid {
        let wrap = wrap_word(self.nann);
        let mut out = Vec::new();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize;
            if i < self.nann {
                out.push(g);
            } else if g > 0 {
                out.extend_from_slice(&wrap);
            } else {
                out.extend(wrap.iter().rev().map(|x| -x));
            }
        }
        Braid::from_parts_unchecked(out, self.n())
    }
}

fn wrap_word(nann: usize) -> Vec<i32> {
    let m = nann as i32;
    if m == 1 {
        return vec![1, 1];
    }
    let mut w = vec![m, m];
    w.extend((1..m).rev());
    w.extend((2..m).map(|i| -i));
    w.extend([-m, -m]);
    w
}

impl fmt::Display for AnnularBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.word, f)?;
        f.write_str("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_display() {
        let ab = AnnularBraid::new(vec![1, 2, -3], None).unwrap();
        assert_eq!(ab.n(), 4);
        assert_eq!(ab.nann(), 3);
        assert_eq!(ab.to_string(), "< 1 2 -3 >*");
    }

    #[test]
    fn json_round_trip() {
        let ab = AnnularBraid::new(vec![1, -2], Some(3)).unwrap();
        let v = ab.to_json();
        assert_eq!(v["n"], 4);
        assert_eq!(AnnularBraid::from_json(&v).unwrap(), ab);
        assert!(Braid::from_json(&v).is_err());
    }

    #[test]
    fn conversion() {
        let ab = AnnularBraid::new(vec![1, -2], None).unwrap();
        assert_eq!(ab.to_braid().word(), &[1, 2, 2, -1, -2, -2]);
        let ab = AnnularBraid::new(vec![3], None).unwrap();
        assert_eq!(ab.to_braid().word(), &[3, 3, 2, 1, -2, -3, -3]);
        let ab = AnnularBraid::new(vec![1, 2], Some(3)).unwrap();
        assert_eq!(ab.to_braid().word(), &[1, 2]);
        assert_eq!(AnnularBraid::new(vec![1], None).unwrap().to_braid().word(), &[1, 1]);
    }

    #[test]
    fn wrap_inverse_is_group_inverse() {
        let ab = AnnularBraid::new(vec![4, -4], None).unwrap();
        assert!(ab.to_braid().is_trivial());
    }
}
