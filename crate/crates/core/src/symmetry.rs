//! Rotation symmetry of labelled necklaces.
//!
//! The rotations of Z_n fixing a colored necklace form a group whose order
//! divides gcd(a, b); a configuration is symmetric when the order reaches
//! that bound.

use crate::error::Result;
use crate::necklace::Configuration;

/// Greatest common divisor, with `gcd(x, 0) = gcd(0, x) = x`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The group of rotations fixing a colored necklace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationGroup {
    order: u64,
    generator_shift: u64,
    member_shifts: Vec<u64>,
}

impl RotationGroup {
    /// Number of rotations fixing the necklace, `|Rot|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Smallest positive shift fixing the necklace; equals `n / order`.
    pub fn generator_shift(&self) -> u64 {
        self.generator_shift
    }

    /// All fixing shifts below `n`: the multiples of the generator.
    pub fn member_shifts(&self) -> &[u64] {
        &self.member_shifts
    }
}

/// Computes Rot of a non-empty configuration from its word model.
///
/// Fixing shifts form a subgroup of Z_n, so only divisors of n need to be
/// scanned; the first fixing divisor is the generator.
pub fn rotation_group(cfg: &Configuration) -> Result<RotationGroup> {
    let word = cfg.to_word()?;
    let bits = word.bits();
    let n = bits.len();
    let fixes = |shift: usize| (0..n).all(|i| bits[i] == bits[(i + shift) % n]);
    let generator = (1..=n)
        .find(|&p| n % p == 0 && fixes(p))
        .expect("shift by n always fixes the word");
    let order = (n / generator) as u64;
    let member_shifts = (0..order).map(|i| i * generator as u64).collect();
    Ok(RotationGroup {
        order,
        generator_shift: generator as u64,
        member_shifts,
    })
}

/// Number of distinct labelled necklaces over the class: `(a+b) / |Rot|`.
pub fn orbit_size(cfg: &Configuration) -> Result<u64> {
    Ok(cfg.n() / rotation_group(cfg)?.order())
}

/// True when the symmetry group reaches its upper bound gcd(a, b).
pub fn is_symmetric(cfg: &Configuration) -> Result<bool> {
    Ok(rotation_group(cfg)?.order() == gcd(cfg.a(), cfg.b()))
}
