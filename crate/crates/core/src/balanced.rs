//! Balanced words and their bridge to regular configurations.
//!
//! A word is balanced when any two equal-length cyclic subwords carry
//! weights differing by at most one. A configuration is regular exactly when
//! its associated words are balanced.

use crate::error::{Error, Result};
use crate::necklace::{BinaryWord, Configuration};
use crate::regularity::is_regular;

/// Default length cap for the brute-force word enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 24;

/// The `n` cyclic subwords of length `q`: the length-`q` prefixes of every
/// rotation, with multiplicity, in rotation order.
pub fn cyclic_subwords(w: &BinaryWord, q: u64) -> Result<Vec<BinaryWord>> {
    let n = w.len();
    if q == 0 || q > n {
        return Err(Error::SubwordLength { q, n });
    }
    let bits = w.bits();
    let subwords = (0..n as usize)
        .map(|start| {
            let piece = (0..q as usize).map(|i| bits[(start + i) % n as usize]).collect();
            BinaryWord::new(piece).expect("q >= 1")
        })
        .collect();
    Ok(subwords)
}

/// Balance test: for every subword length, the weights of the cyclic
/// subwords spread by at most one.
pub fn is_balanced(w: &BinaryWord) -> bool {
    let bits = w.bits();
    let n = bits.len();
    // prefix[i] = weight of the first i letters of the doubled word
    let mut prefix = vec![0u64; 2 * n + 1];
    for i in 0..2 * n {
        prefix[i + 1] = prefix[i] + u64::from(bits[i % n]);
    }
    for q in 1..=n {
        let mut min = u64::MAX;
        let mut max = 0u64;
        for start in 0..n {
            let weight = prefix[start + q] - prefix[start];
            min = min.min(weight);
            max = max.max(weight);
        }
        if max - min > 1 {
            return false;
        }
    }
    true
}

/// All balanced words of length `n` and weight `k`, in lexicographic order,
/// guarded by [`DEFAULT_ENUMERATION_LIMIT`].
pub fn enumerate_balanced(n: u64, k: u64) -> Result<Vec<BinaryWord>> {
    enumerate_balanced_guarded(n, k, DEFAULT_ENUMERATION_LIMIT)
}

/// As [`enumerate_balanced`], with an explicit length guard.
pub fn enumerate_balanced_guarded(n: u64, k: u64, limit: u64) -> Result<Vec<BinaryWord>> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    if k > n {
        return Err(Error::WeightOutOfRange { k, n });
    }
    if n > limit {
        return Err(Error::GuardExceeded {
            guard: "balanced enumeration length",
            limit,
            value: n,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n as usize);
    collect_balanced(&mut prefix, n as usize, k, &mut out);
    Ok(out)
}

// Extends the prefix with 0 before 1, so the output arrives in lex order.
fn collect_balanced(prefix: &mut Vec<bool>, n: usize, ones_left: u64, out: &mut Vec<BinaryWord>) {
    let slots_left = (n - prefix.len()) as u64;
    if ones_left > slots_left {
        return;
    }
    if prefix.len() == n {
        let word = BinaryWord::new(prefix.clone()).expect("n >= 1");
        if is_balanced(&word) {
            out.push(word);
        }
        return;
    }
    if slots_left > ones_left {
        prefix.push(false);
        collect_balanced(prefix, n, ones_left, out);
        prefix.pop();
    }
    if ones_left > 0 {
        prefix.push(true);
        collect_balanced(prefix, n, ones_left - 1, out);
        prefix.pop();
    }
}

/// Whether the configuration read off the word is regular. Agrees with
/// [`is_balanced`] on every word.
pub fn word_is_regular_config(w: &BinaryWord) -> bool {
    is_regular(&Configuration::from_word(w))
}
