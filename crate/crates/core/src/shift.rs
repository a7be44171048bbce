//! Directed shift graphs and vertex-disjoint cycle packings.
//!
//! `Shift(n, m)` is the directed Cayley graph of Z_n with generators
//! `{1, m}`. Every simple cycle walks unit edges and stride edges; reading
//! strides as red beads and unit steps as black beads ties each cycle to a
//! necklace configuration. Translating the generic cycle of the regular
//! configuration by multiples of `m - 1` yields a provably disjoint packing.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::necklace::{BinaryWord, Configuration};
use crate::regularity::{find_regular, window_stats};

/// The directed Cayley graph of Z_n with generators {1, m}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftGraph {
    n: u64,
    m: u64,
}

/// Parameters of the packing construction: `n = a*m + b`, cycle length
/// `d = a + b`, packing size `k = floor(n / d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub a: u64,
    pub b: u64,
    pub d: u64,
    pub k: u64,
}

impl ShiftGraph {
    /// Requires `2 <= m < n`: `m = 1` would duplicate the unit generator
    /// and `m >= n` aliases mod n.
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if m < 2 || m >= n {
            return Err(Error::StrideOutOfRange { n, m });
        }
        Ok(ShiftGraph { n, m })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Target of the unit edge out of `v`.
    pub fn unit_successor(&self, v: u64) -> u64 {
        (v + 1) % self.n
    }

    /// Target of the stride edge out of `v`.
    pub fn stride_successor(&self, v: u64) -> u64 {
        (v + self.m) % self.n
    }

    /// Writes `n = a*m + b` with `0 <= b < m` and derives `d` and `k`.
    pub fn decompose(&self) -> Decomposition {
        let a = self.n / self.m;
        let b = self.n % self.m;
        let d = a + b;
        Decomposition {
            a,
            b,
            d,
            k: self.n / d,
        }
    }
}

/// Convenience form of [`ShiftGraph::decompose`] validating `(n, m)` first.
pub fn decompose(n: u64, m: u64) -> Result<Decomposition> {
    Ok(ShiftGraph::new(n, m)?.decompose())
}

/// Cyclic consecutive differences of a vertex sequence, mod n. The sum of
/// the entries is always a multiple of n.
pub fn differential_sequence(vertices: &[u64], n: u64) -> Vec<u64> {
    let d = vertices.len();
    (0..d)
        .map(|i| (vertices[(i + 1) % d] % n + n - vertices[i] % n) % n)
        .collect()
}

/// A simple directed cycle in a shift graph, as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycleSeq {
    vertices: Vec<u64>,
}

impl CycleSeq {
    /// Validates distinctness and that every cyclic difference is a unit
    /// step or a stride of `g`.
    pub fn new(vertices: Vec<u64>, g: &ShiftGraph) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v % g.n()) {
                return Err(Error::TheoremViolation(format!(
                    "cycle revisits vertex {v}"
                )));
            }
        }
        for step in differential_sequence(&vertices, g.n()) {
            if step != 1 && step != g.m() {
                return Err(Error::NotAShiftStep {
                    value: step,
                    m: g.m(),
                });
            }
        }
        Ok(CycleSeq { vertices })
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The same cycle rotated to start at its least vertex.
    pub fn canonical(&self) -> Self {
        let least = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        CycleSeq {
            vertices: crate::necklace::rotate(&self.vertices, least),
        }
    }

    pub fn vertex_set(&self) -> BTreeSet<u64> {
        self.vertices.iter().copied().collect()
    }
}

/// Steps of the closed walk a configuration describes: each gap contributes
/// its red beads as strides of `m` followed by one unit step; the all-red
/// necklace walks strides only.
pub fn step_sequence(cfg: &Configuration, m: u64) -> Vec<u64> {
    if cfg.b() == 0 {
        return vec![m; cfg.a() as usize];
    }
    let mut steps = Vec::with_capacity(cfg.n() as usize);
    for &x in cfg.chars() {
        steps.resize(steps.len() + x as usize, m);
        steps.push(1);
    }
    steps
}

/// Reads the configuration of a cycle off its differential sequence:
/// strides become red beads, unit steps black beads.
pub fn config_of_cycle(cycle: &CycleSeq, g: &ShiftGraph) -> Result<Configuration> {
    let bits = differential_sequence(cycle.vertices(), g.n())
        .into_iter()
        .map(|step| {
            if step == g.m() {
                Ok(true)
            } else if step == 1 {
                Ok(false)
            } else {
                Err(Error::NotAShiftStep { value: step, m: g.m() })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Configuration::from_word(&BinaryWord::new(bits)?))
}

/// The cycle through `v` following the configuration's step sequence.
///
/// Requires `a*m + b = n` so the walk closes; the partial sums then increase
/// strictly through 1..=n, so the `d` vertices are distinct.
pub fn generic_cycle(v: u64, cfg: &Configuration, g: &ShiftGraph) -> Result<CycleSeq> {
    let span = cfg.a() as u128 * g.m() as u128 + cfg.b() as u128;
    if span != g.n() as u128 {
        return Err(Error::WalkDoesNotClose {
            a: cfg.a(),
            b: cfg.b(),
            span: span.min(u64::MAX as u128) as u64,
            n: g.n(),
        });
    }
    let steps = step_sequence(cfg, g.m());
    let mut vertices = Vec::with_capacity(steps.len());
    let mut current = v % g.n();
    vertices.push(current);
    for &step in &steps[..steps.len() - 1] {
        current = (current + step) % g.n();
        vertices.push(current);
    }
    CycleSeq::new(vertices, g)
}

/// All pairwise differences of a vertex set, mod n (0 included for any
/// non-empty set).
pub fn differential_set(vertices: &[u64], n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for &x in vertices {
        for &y in vertices {
            out.insert((x % n + n - y % n) % n);
        }
    }
    out
}

/// The differential set of the generic cycle computed from the window
/// statistics instead of the vertex set.
///
/// An element with `j` unit steps and `p` strides has value `p*m + j`; for
/// each `j` the achievable stride counts fill `mu_{j-1}..=xi_j`, where the
/// boundary cases are `xi` itself at `j = 0` and `a - 1` at `j = b` (the
/// full walk, value n = 0, is already contributed by `j = 0, p = 0`).
pub fn differential_set_closed_form(cfg: &Configuration, g: &ShiftGraph) -> Result<BTreeSet<u64>> {
    let span = cfg.a() as u128 * g.m() as u128 + cfg.b() as u128;
    if span != g.n() as u128 {
        return Err(Error::WalkDoesNotClose {
            a: cfg.a(),
            b: cfg.b(),
            span: span.min(u64::MAX as u128) as u64,
            n: g.n(),
        });
    }
    let (n, m) = (g.n(), g.m());
    let mut out = BTreeSet::new();
    if cfg.b() == 0 {
        for p in 0..cfg.a() {
            out.insert(p * m % n);
        }
        return Ok(out);
    }
    let stats = window_stats(cfg)?;
    for j in 0..=cfg.b() {
        let lower = stats.mu(j as i64 - 1) as i128;
        let upper = if j < cfg.b() {
            stats.xi(j) as i128
        } else {
            cfg.a() as i128 - 1
        };
        let mut p = lower;
        while p <= upper {
            out.insert((p as u64 * m + j) % n);
            p += 1;
        }
    }
    Ok(out)
}

/// Whether a pair of cycles flags a packing as overlapping, and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Disjoint,
    Overlap {
        first: usize,
        second: usize,
        vertex: u64,
    },
}

impl Certificate {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, Certificate::Disjoint)
    }
}

/// Checks every pair of cycles for a shared vertex, reporting the first
/// offending pair.
pub fn disjointness_certificate(cycles: &[CycleSeq]) -> Certificate {
    let mut seen: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for (index, cycle) in cycles.iter().enumerate() {
        for &v in cycle.vertices() {
            if let Some(&first) = seen.get(&v) {
                if first != index {
                    return Certificate::Overlap {
                        first,
                        second: index,
                        vertex: v,
                    };
                }
            } else {
                seen.insert(v, index);
            }
        }
    }
    Certificate::Disjoint
}

/// A collection of cycles in one shift graph with its disjointness
/// certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    graph: ShiftGraph,
    configuration: Configuration,
    cycles: Vec<CycleSeq>,
    certificate: Certificate,
}

impl Packing {
    pub fn new(graph: ShiftGraph, configuration: Configuration, cycles: Vec<CycleSeq>) -> Self {
        let certificate = disjointness_certificate(&cycles);
        Packing {
            graph,
            configuration,
            cycles,
            certificate,
        }
    }

    pub fn graph(&self) -> &ShiftGraph {
        &self.graph
    }

    /// The configuration whose generic cycle the packing translates.
    pub fn configuration(&self) -> &Configuration {
        &self.configuration
    }

    pub fn cycles(&self) -> &[CycleSeq] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }
}

/// Re-runs the pairwise disjointness check on a packing.
pub fn verify_disjoint(packing: &Packing) -> bool {
    disjointness_certificate(packing.cycles()).is_disjoint()
}

/// Builds the guaranteed packing of `Shift(n, m)`: the generic cycle of the
/// regular configuration of the decomposition, translated by multiples of
/// `m - 1`. The disjointness certificate is always verified; a failure would
/// contradict the construction and is reported as a theorem violation.
pub fn build_packing(n: u64, m: u64) -> Result<Packing> {
    let g = ShiftGraph::new(n, m)?;
    let dec = g.decompose();
    let delta = find_regular(dec.a, dec.b)?;
    let mut cycles = Vec::with_capacity(dec.k as usize);
    for i in 0..dec.k {
        let offset = (i as u128 * (m as u128 - 1) % n as u128) as u64;
        cycles.push(generic_cycle(offset, &delta, &g)?);
    }
    let packing = Packing::new(g, delta, cycles);
    if !packing.certificate().is_disjoint() {
        return Err(Error::TheoremViolation(format!(
            "packing of Shift({n},{m}) failed disjointness: {:?}",
            packing.certificate()
        )));
    }
    Ok(packing)
}
