//! Regular necklace configurations and their applications.
//!
//! A configuration is a necklace of `a` red and `b` black beads up to
//! rotation. This crate constructs the unique *regular* configuration of
//! each CONF(a, b) — the one whose colors are as evenly spread as possible —
//! and exposes the structure around it:
//!
//! - exact integer window inequalities deciding regularity ([`regularity`]);
//! - the color-swap dual between CONF(a, b) and CONF(b, a) ([`duality`]);
//! - rotation symmetry groups and orbit counts ([`symmetry`]);
//! - balanced binary words, which are exactly the words of regular
//!   configurations ([`balanced`]);
//! - vertex-disjoint cycle packings in the directed shift graphs
//!   `Shift(n, m)`, built by translating the generic cycle of a regular
//!   configuration ([`shift`]);
//! - independent brute-force verifiers for all of the above ([`oracle`]).
//!
//! All arithmetic is exact; comparisons against rational bounds are done in
//! cross-multiplied integer form.
//!
//! ```
//! use regneck_core::{build_packing, find_regular, is_regular, verify_disjoint};
//!
//! let delta = find_regular(6, 4)?;
//! assert_eq!(delta.chars(), &[1, 2, 1, 2]);
//! assert!(is_regular(&delta));
//!
//! let packing = build_packing(9, 3)?;
//! assert_eq!(packing.len(), 3);
//! assert!(verify_disjoint(&packing));
//! # Ok::<(), regneck_core::Error>(())
//! ```

pub mod balanced;
pub mod dot;
pub mod duality;
pub mod error;
pub mod necklace;
pub mod oracle;
pub mod regularity;
pub mod shift;
pub mod symmetry;

pub use balanced::{
    cyclic_subwords, enumerate_balanced, enumerate_balanced_guarded, is_balanced,
    word_is_regular_config,
};
pub use duality::dual;
pub use error::{Error, Result};
pub use necklace::{equivalent, least_rotation, rotate, BinaryWord, Configuration};
pub use oracle::{
    count_regular, enumerate_configurations, enumerate_cycles, exact_nu0, Guards,
    PackingSearchReport,
};
pub use regularity::{find_regular, is_regular, is_regular_via_mu, reduce, window_stats, WindowStats};
pub use shift::{
    build_packing, config_of_cycle, decompose, differential_sequence, differential_set,
    differential_set_closed_form, generic_cycle, verify_disjoint, Certificate, CycleSeq,
    Decomposition, Packing, ShiftGraph,
};
pub use symmetry::{gcd, is_symmetric, orbit_size, rotation_group, RotationGroup};
