//! The color-swap dual: CONF(a, b) -> CONF(b, a).
//!
//! Swapping the colors of every bead turns the gaps between black beads
//! into gaps between red ones; the dual of the dual is the original
//! necklace, and regularity is preserved in both directions.

use crate::error::Result;
use crate::necklace::Configuration;

/// Color-swapped configuration: flip every bit of the word model and read
/// the gaps back. Rejects only the empty necklace.
pub fn dual(cfg: &Configuration) -> Result<Configuration> {
    let word = cfg.to_word()?;
    Ok(Configuration::from_word(&word.flipped()))
}
