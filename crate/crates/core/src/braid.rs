//! Braid words on `n` strands and their purely combinatorial operations.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A braid word in the standard generators.
///
/// Entry `i > 0` is `σ_i` (strand `i` passes over strand `i+1`), entry `-i`
/// its inverse. The empty word is the identity on any number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Braid {
    word: Vec<i32>,
    n: usize,
}

fn min_strands(word: &[i32]) -> usize {
    word.iter().map(|w| w.unsigned_abs() as usize).max().unwrap_or(1) + 1
}

impl Braid {
    /// Builds a braid, defaulting the strand count to `1 + max|w|` (2 for
    /// the empty word).
    pub fn new(word: Vec<i32>, n: Option<usize>) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let need = min_strands(&word);
        let n = match n {
            None => need,
            Some(n) => {
                if let Some(&bad) = word.iter().find(|w| w.unsigned_abs() as usize >= n) {
                    return Err(Error::GeneratorOutOfRange { index: bad, n });
                }
                n.max(1)
            }
        };
        Ok(Braid { word, n })
    }

    pub fn identity(n: usize) -> Self {
        Braid { word: Vec::new(), n }
    }

    pub(crate) fn from_parts_unchecked(word: Vec<i32>, n: usize) -> Self {
        debug_assert!(word.iter().all(|&w| w != 0 && (w.unsigned_abs() as usize) < n));
        Braid { word, n }
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Same braid word on `n` strands; fails if a generator does not fit.
    pub fn with_strands(&self, n: usize) -> Result<Self> {
        Braid::new(self.word.clone(), Some(n))
    }

    pub fn mul(&self, other: &Braid) -> Result<Braid> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut word = Vec::with_capacity(self.len() + other.len());
        word.extend_from_slice(&self.word);
        word.extend_from_slice(&other.word);
        Ok(Braid { word, n: self.n })
    }

    pub fn inverse(&self) -> Braid {
        Braid {
            word: self.word.iter().rev().map(|w| -w).collect(),
            n: self.n,
        }
    }

    pub fn pow(&self, k: i64) -> Braid {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut word = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            word.extend_from_slice(&base.word);
        }
        Braid { word, n: self.n }
    }

    /// Generator-by-generator equality, strand counts included.
    pub fn lexeq(&self, other: &Braid) -> bool {
        self == other
    }

    /// Sum of the generator exponents.
    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|&w| w.signum() as i64).sum()
    }

    /// Final arrangement of the strands: entry `k` (0-based) is the 1-based
    /// label of the strand that ends at position `k + 1`.
    ///
    /// For a product, `perm(a*b)[k] == perm(a)[perm(b)[k] - 1]`.
    pub fn perm(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..=self.n).collect();
        for &w in &self.word {
            let i = w.unsigned_abs() as usize;
            order.swap(i - 1, i);
        }
        order
    }

    pub fn is_pure(&self) -> bool {
        self.perm().iter().enumerate().all(|(k, &s)| s == k + 1)
    }

    /// Keeps only the strands listed in `keep` (1-based, strictly increasing).
    pub fn subbraid(&self, keep: &[usize]) -> Result<Braid> {
        if keep.is_empty() {
            return Err(Error::BadSubbraid("no strands selected".into()));
        }
        if keep.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadSubbraid("indices must be strictly increasing".into()));
        }
        if keep[0] == 0 || *keep.last().unwrap() > self.n {
            return Err(Error::BadSubbraid(format!("indices must lie in 1..={}", self.n)));
        }
        let mut kept = vec![false; self.n + 1];
        for &s in keep {
            kept[s] = true;
        }
        // order[p] = strand label currently at position p (0-based)
        let mut order: Vec<usize> = (1..=self.n).collect();
        let mut word = Vec::new();
        for &w in &self.word {
            let i = w.unsigned_abs() as usize;
            let (left, right) = (order[i - 1], order[i]);
            if kept[left] && kept[right] {
                let rank = order[..i].iter().filter(|&&s| kept[s]).count();
                word.push(rank as i32 * w.signum());
            }
            order.swap(i - 1, i);
        }
        Ok(Braid {
            word,
            n: keep.len(),
        })
    }

    /// Lays `other` to the right of `self`.
    pub fn tensor(&self, other: &Braid) -> Braid {
        let shift = self.n as i32;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&w| w + shift * w.signum()));
        Braid {
            word,
            n: self.n + other.n,
        }
    }

    /// `k` generators drawn uniformly from `±1..±(n-1)`.
    pub fn random(n: usize, k: usize, seed: Option<u64>) -> Result<Braid> {
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        let mut rng = match seed {
            Some(s) => ChaCha8Rng::seed_from_u64(s),
            None => ChaCha8Rng::from_entropy(),
        };
        Ok(Self::random_with(&mut rng, n, k))
    }

    pub fn random_with<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Braid {
        let g = (n - 1) as i32;
        let word = (0..k)
            .map(|_| {
                let i = rng.gen_range(1..=g);
                if rng.gen::<bool>() {
                    i
                } else {
                    -i
                }
            })
            .collect();
        Braid { word, n }
    }

    /// `(n-1 … 1)(n-1 … 2)…(n-1)`.
    pub fn half_twist(n: usize) -> Result<Braid> {
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        let top = (n - 1) as i32;
        let mut word = Vec::with_capacity(n * (n - 1) / 2);
        for low in 1..=top {
            word.extend((low..=top).rev());
        }
        Ok(Braid { word, n })
    }

    pub fn full_twist(n: usize) -> Result<Braid> {
        Ok(Self::half_twist(n)?.pow(2))
    }

    /// Parses a whitespace/comma separated word such as `"1 -2"`.
    pub fn parse_word(s: &str) -> Result<Vec<i32>> {
        let t = s.trim().trim_start_matches('<').trim_end_matches('>');
        let t = t.trim().trim_start_matches('[').trim_end_matches(']');
        t.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty() && *tok != "e")
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad generator '{tok}'")))
            })
            .collect()
    }
}

impl Braid {
    /// `{"n": int, "word": [int, ...], "annular": false}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "word": self.word, "annular": false })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        if v["annular"].as_bool() == Some(true) {
            return Err(Error::Parse("expected an ordinary braid, got an annular one".into()));
        }
        let (word, n) = parse_json_word(v)?;
        Braid::new(word, n)
    }
}

pub(crate) fn parse_json_word(v: &serde_json::Value) -> Result<(Vec<i32>, Option<usize>)> {
    let word = v["word"]
        .as_array()
        .ok_or_else(|| Error::Parse("missing \"word\" array".into()))?
        .iter()
        .map(|x| {
            x.as_i64()
                .and_then(|g| i32::try_from(g).ok())
                .ok_or_else(|| Error::Parse(format!("bad generator {x}")))
        })
        .collect::<Result<Vec<i32>>>()?;
    let n = v["n"].as_u64().map(|n| n as usize);
    Ok((word, n))
}

pub(crate) fn fmt_word(word: &[i32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if word.is_empty() {
        return f.write_str("< e >");
    }
    f.write_str("<")?;
    for w in word {
        write!(f, " {w}")?;
    }
    f.write_str(" >")
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.word, f)
    }
}
