//! Necklace configurations and their interchangeable models.
//!
//! A configuration is a circular arrangement of `a` red and `b` black beads,
//! considered up to rotation. It is stored as its characteristic sequence
//! `{x_0, ..., x_{b-1}}`, where `x_i` counts the red beads between
//! consecutive black beads. The word model encodes the same necklace as a
//! binary word with `1` for red and `0` for black.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A necklace class with `a` red beads and `b` black beads.
///
/// Stored as the characteristic sequence of red-run lengths between
/// consecutive black beads; `b == 0` keeps the red count explicitly since
/// the sequence is then empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    a: u64,
    chars: Vec<u64>,
}

impl Configuration {
    /// Builds a configuration from its characteristic sequence.
    ///
    /// `b` is the sequence length and `a` its sum; the sum is checked for
    /// 64-bit overflow. The empty sequence yields the empty necklace.
    pub fn from_characteristic(xs: &[u64]) -> Result<Self> {
        let mut a: u64 = 0;
        for &x in xs {
            a = a.checked_add(x).ok_or(Error::Overflow)?;
        }
        Ok(Configuration {
            a,
            chars: xs.to_vec(),
        })
    }

    /// The all-red necklace in CONF(a, 0).
    pub fn all_red(a: u64) -> Self {
        Configuration { a, chars: Vec::new() }
    }

    /// Reads a configuration off a binary word: red-run lengths after each
    /// black bead, cyclically, starting at the first `0`. A word with no
    /// zeros maps to the all-red necklace.
    pub fn from_word(w: &BinaryWord) -> Self {
        let bits = w.bits();
        let n = bits.len();
        let Some(first_zero) = bits.iter().position(|&bit| !bit) else {
            return Configuration::all_red(n as u64);
        };
        let mut chars = Vec::new();
        let mut run = 0u64;
        for i in 1..=n {
            let bit = bits[(first_zero + i) % n];
            if bit {
                run += 1;
            } else {
                chars.push(run);
                run = 0;
            }
        }
        debug_assert_eq!(run, 0); // the scan ends on the starting zero
        let a = chars.iter().sum();
        Configuration { a, chars }
    }

    /// Number of red beads.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Number of black beads.
    pub fn b(&self) -> u64 {
        self.chars.len() as u64
    }

    /// Total bead count `n = a + b`.
    pub fn n(&self) -> u64 {
        self.a + self.b()
    }

    /// The characteristic sequence `{x_0, ..., x_{b-1}}`.
    pub fn chars(&self) -> &[u64] {
        &self.chars
    }

    /// True when the necklace is single-colored (`a == 0` or `b == 0`).
    pub fn is_degenerate(&self) -> bool {
        self.a == 0 || self.chars.is_empty()
    }

    /// True for the necklace with no beads at all.
    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    /// Word model of the necklace: `0 1^{x_0} 0 1^{x_1} ... 0 1^{x_{b-1}}`,
    /// starting with black bead B_0; `1^a` when there are no black beads.
    pub fn to_word(&self) -> Result<BinaryWord> {
        if self.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        let mut bits = Vec::with_capacity(self.n() as usize);
        if self.chars.is_empty() {
            bits.resize(self.a as usize, true);
        } else {
            for &x in &self.chars {
                bits.push(false);
                bits.resize(bits.len() + x as usize, true);
            }
        }
        BinaryWord::new(bits)
    }

    /// The configuration rotated by `sigma^t`.
    pub fn rotated(&self, t: usize) -> Self {
        Configuration {
            a: self.a,
            chars: rotate(&self.chars, t),
        }
    }

    /// True when both configurations describe the same necklace class.
    pub fn equivalent_to(&self, other: &Configuration) -> bool {
        self.a == other.a && equivalent(&self.chars, &other.chars)
    }

    /// Canonical class representative: the lexicographically least rotation
    /// of the characteristic sequence.
    pub fn canonical(&self) -> Self {
        let t = least_rotation(&self.chars);
        self.rotated(t)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CONF({},{})[", self.a, self.b())?;
        for (i, x) in self.chars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A non-empty word over {0, 1}; `true` is a `1` (red bead).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(BinaryWord { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Word length `n`.
    pub fn len(&self) -> u64 {
        self.bits.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    /// Number of 1s, written `|w|_1`.
    pub fn weight(&self) -> u64 {
        self.bits.iter().filter(|&&b| b).count() as u64
    }

    /// Number of 0s, written `|w|_0`.
    pub fn zeros(&self) -> u64 {
        self.len() - self.weight()
    }

    /// The word shifted by `sigma^t`.
    pub fn rotated(&self, t: usize) -> Self {
        BinaryWord {
            bits: rotate(&self.bits, t),
        }
    }

    /// The color-swapped word.
    pub fn flipped(&self) -> Self {
        BinaryWord {
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidBit(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        BinaryWord::new(bits)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Applies the shift operator `sigma^t`: `sigma{x_0,...,x_{b-1}} =
/// {x_1,...,x_{b-1},x_0}`, with `t` taken mod the length.
pub fn rotate<T: Clone>(xs: &[T], t: usize) -> Vec<T> {
    let n = xs.len();
    if n == 0 {
        return Vec::new();
    }
    let t = t % n;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&xs[t..]);
    out.extend_from_slice(&xs[..t]);
    out
}

/// True iff `ys = sigma^t(xs)` for some shift `t`.
pub fn equivalent<T: PartialEq>(xs: &[T], ys: &[T]) -> bool {
    let n = xs.len();
    if n != ys.len() {
        return false;
    }
    if n == 0 {
        return true;
    }
    (0..n).any(|t| (0..n).all(|i| ys[i] == xs[(i + t) % n]))
}

/// Index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation<T: Ord>(xs: &[T]) -> usize {
    let n = xs.len();
    if n <= 1 {
        return 0;
    }
    let at = |i: usize| &xs[i % n];
    let mut failure = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = failure[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k % n
}
