//! Brute-force verifiers: exhaustive class enumeration, regular-class
//! counting, simple-cycle enumeration, and the exact packing number on
//! small shift graphs.
//!
//! Everything here is independent of the constructive code paths it checks,
//! and guarded so that a runaway search fails cleanly instead of hanging.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::necklace::Configuration;
use crate::regularity::is_regular;
use crate::shift::{CycleSeq, ShiftGraph};

/// Limits for the exponential searches. Exceeding a guard is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest `a + b` accepted by configuration enumeration.
    pub max_configuration_beads: u64,
    /// Largest vertex count accepted by cycle enumeration.
    pub max_cycle_vertices: u64,
    /// Largest vertex count accepted by the exact packing search.
    pub max_packing_vertices: u64,
    /// Hard cap on the number of simple cycles collected.
    pub max_cycles: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_configuration_beads: 24,
            max_cycle_vertices: 16,
            max_packing_vertices: 14,
            max_cycles: 1_000_000,
        }
    }
}

impl Guards {
    /// Raises every vertex/bead guard to at least `n`, keeping the cycle cap.
    pub fn with_scale(n: u64) -> Self {
        let d = Guards::default();
        Guards {
            max_configuration_beads: d.max_configuration_beads.max(n),
            max_cycle_vertices: d.max_cycle_vertices.max(n),
            max_packing_vertices: d.max_packing_vertices.max(n),
            max_cycles: d.max_cycles,
        }
    }
}

/// All canonical necklace classes in CONF(a, b), lexicographically sorted.
///
/// Enumerates every composition of `a` into `b` non-negative parts and
/// deduplicates by canonical rotation.
pub fn enumerate_configurations(a: u64, b: u64, guards: &Guards) -> Result<Vec<Configuration>> {
    if a == 0 && b == 0 {
        return Err(Error::EmptyConfiguration);
    }
    let total = a.checked_add(b).ok_or(Error::Overflow)?;
    if total > guards.max_configuration_beads {
        return Err(Error::GuardExceeded {
            guard: "configuration beads",
            limit: guards.max_configuration_beads,
            value: total,
        });
    }
    if b == 0 {
        return Ok(vec![Configuration::all_red(a)]);
    }
    let mut classes = std::collections::BTreeSet::new();
    let mut parts = vec![0u64; b as usize];
    fill_compositions(&mut parts, 0, a, &mut classes);
    Ok(classes.into_iter().collect())
}

fn fill_compositions(
    parts: &mut Vec<u64>,
    index: usize,
    remaining: u64,
    classes: &mut std::collections::BTreeSet<Configuration>,
) {
    if index + 1 == parts.len() {
        parts[index] = remaining;
        let c = Configuration::from_characteristic(parts).expect("sum fits u64");
        classes.insert(c.canonical());
        return;
    }
    for value in 0..=remaining {
        parts[index] = value;
        fill_compositions(parts, index + 1, remaining - value, classes);
    }
}

/// Number of regular classes in CONF(a, b); the uniqueness theorem predicts
/// exactly one.
pub fn count_regular(a: u64, b: u64, guards: &Guards) -> Result<usize> {
    Ok(enumerate_configurations(a, b, guards)?
        .iter()
        .filter(|c| is_regular(c))
        .count())
}

/// All simple directed cycles of the graph, each rotated to start at its
/// least vertex.
///
/// Depth-first walk over the two out-edges per vertex; paths never descend
/// below their start vertex, so each cycle is discovered exactly once.
pub fn enumerate_cycles(g: &ShiftGraph, guards: &Guards) -> Result<Vec<CycleSeq>> {
    let n = g.n();
    if n > guards.max_cycle_vertices {
        return Err(Error::GuardExceeded {
            guard: "cycle enumeration vertices",
            limit: guards.max_cycle_vertices,
            value: n,
        });
    }
    if n > 64 {
        return Err(Error::GuardExceeded {
            guard: "cycle enumeration bitmask width",
            limit: 64,
            value: n,
        });
    }
    let mut cycles = Vec::new();
    let mut path = Vec::new();
    for start in 0..n {
        path.clear();
        path.push(start);
        walk(g, start, start, 1 << start, &mut path, &mut cycles, guards)?;
    }
    Ok(cycles)
}

fn walk(
    g: &ShiftGraph,
    start: u64,
    current: u64,
    visited: u64,
    path: &mut Vec<u64>,
    cycles: &mut Vec<CycleSeq>,
    guards: &Guards,
) -> Result<()> {
    for next in [g.unit_successor(current), g.stride_successor(current)] {
        if next == start {
            if cycles.len() as u64 >= guards.max_cycles {
                return Err(Error::GuardExceeded {
                    guard: "enumerated cycles",
                    limit: guards.max_cycles,
                    value: cycles.len() as u64 + 1,
                });
            }
            cycles.push(CycleSeq::new(path.clone(), g).expect("walk steps are shift steps"));
        } else if next > start && visited & (1 << next) == 0 {
            path.push(next);
            walk(g, start, next, visited | (1 << next), path, cycles, guards)?;
            path.pop();
        }
    }
    Ok(())
}

/// Outcome of the exact maximum-packing search.
#[derive(Debug, Clone)]
pub struct PackingSearchReport {
    pub n: u64,
    pub m: u64,
    /// Simple cycles enumerated before deduplication by vertex set.
    pub cycle_count_enumerated: usize,
    /// The exact cycles packing number.
    pub nu0_exact: usize,
    /// One optimal collection of pairwise disjoint cycles.
    pub witness: Vec<CycleSeq>,
    pub elapsed: Duration,
    pub search_nodes: u64,
}

/// Exact maximum number of pairwise vertex-disjoint cycles, by
/// branch-and-bound over the enumerated cycles.
///
/// Candidates are deduplicated by vertex set and visited in (length,
/// sequence) order; the bound prunes with `count + free_vertices / girth`.
/// The result and witness are deterministic.
pub fn exact_nu0(g: &ShiftGraph, guards: &Guards) -> Result<PackingSearchReport> {
    let n = g.n();
    if n > guards.max_packing_vertices {
        return Err(Error::GuardExceeded {
            guard: "exact packing vertices",
            limit: guards.max_packing_vertices,
            value: n,
        });
    }
    let started = Instant::now();
    let cycles = enumerate_cycles(g, guards)?;
    let cycle_count_enumerated = cycles.len();

    // one representative per vertex set, the least sequence winning
    let mut by_set: BTreeMap<u64, CycleSeq> = BTreeMap::new();
    for cycle in cycles {
        let mask = cycle.vertices().iter().fold(0u64, |acc, &v| acc | 1 << v);
        match by_set.get(&mask) {
            Some(existing) if existing.vertices() <= cycle.vertices() => {}
            _ => {
                by_set.insert(mask, cycle);
            }
        }
    }
    let mut candidates: Vec<(u64, CycleSeq)> = by_set.into_iter().collect();
    candidates.sort_by(|(_, c1), (_, c2)| {
        c1.len().cmp(&c2.len()).then_with(|| c1.vertices().cmp(c2.vertices()))
    });

    let girth = candidates.iter().map(|(_, c)| c.len()).min().unwrap_or(1);
    let mut search = Search {
        candidates: &candidates,
        n: n as usize,
        girth,
        best: 0,
        witness: Vec::new(),
        nodes: 0,
    };
    search.descend(0, 0, &mut Vec::new());

    let witness = search
        .witness
        .iter()
        .map(|&i| candidates[i].1.clone())
        .collect();
    Ok(PackingSearchReport {
        n,
        m: g.m(),
        cycle_count_enumerated,
        nu0_exact: search.best,
        witness,
        elapsed: started.elapsed(),
        search_nodes: search.nodes,
    })
}

struct Search<'a> {
    candidates: &'a [(u64, CycleSeq)],
    n: usize,
    girth: usize,
    best: usize,
    witness: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn descend(&mut self, from: usize, used: u64, chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if chosen.len() > self.best {
            self.best = chosen.len();
            self.witness = chosen.clone();
        }
        let free = self.n - used.count_ones() as usize;
        if chosen.len() + free / self.girth <= self.best {
            return;
        }
        for index in from..self.candidates.len() {
            let (mask, _) = self.candidates[index];
            if mask & used == 0 {
                chosen.push(index);
                self.descend(index + 1, used | mask, chosen);
                chosen.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::equivalent;
    use crate::regularity::find_regular;
    use crate::shift::build_packing;

    fn guards() -> Guards {
        Guards::default()
    }

    #[test]
    fn enumerate_configurations_examples() {
        let classes = enumerate_configurations(2, 2, &guards()).unwrap();
        let chars: Vec<&[u64]> = classes.iter().map(|c| c.chars()).collect();
        assert_eq!(chars, vec![&[0, 2][..], &[1, 1][..]]);

        let classes = enumerate_configurations(1, 1, &guards()).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].chars(), &[1]);

        // independent count: orbits of all weight-6 words of length 10
        let classes = enumerate_configurations(6, 4, &guards()).unwrap();
        let mut orbit_classes = std::collections::BTreeSet::new();
        for mask in 0u32..1 << 10 {
            if mask.count_ones() == 6 {
                let bits: Vec<bool> = (0..10).map(|i| mask >> i & 1 == 1).collect();
                let word = crate::necklace::BinaryWord::new(bits).unwrap();
                orbit_classes.insert(Configuration::from_word(&word).canonical());
            }
        }
        assert_eq!(classes.len(), orbit_classes.len());
        assert_eq!(classes.len(), 22);
        assert_eq!(classes, orbit_classes.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn enumerate_configurations_guards() {
        assert_eq!(
            enumerate_configurations(0, 0, &guards()),
            Err(Error::EmptyConfiguration)
        );
        assert!(matches!(
            enumerate_configurations(20, 10, &guards()),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(enumerate_configurations(20, 10, &Guards::with_scale(30)).is_ok());
    }

    #[test]
    fn count_regular_examples() {
        assert_eq!(count_regular(6, 4, &guards()).unwrap(), 1);
        assert_eq!(count_regular(5, 5, &guards()).unwrap(), 1);
        assert_eq!(count_regular(0, 3, &guards()).unwrap(), 1);
        // and the (5,5) witness is the all-ones sequence
        let witness: Vec<_> = enumerate_configurations(5, 5, &guards())
            .unwrap()
            .into_iter()
            .filter(is_regular)
            .collect();
        assert!(equivalent(witness[0].chars(), &[1, 1, 1, 1, 1]));
    }

    #[test]
    fn enumerate_cycles_finds_known_cycles() {
        let g = ShiftGraph::new(9, 3).unwrap();
        let cycles = enumerate_cycles(&g, &guards()).unwrap();
        let has = |vs: &[u64]| cycles.iter().any(|c| c.vertices() == vs);
        assert!(has(&[0, 3, 6]));
        assert!(has(&[0, 1, 2, 3, 4, 5, 6, 7, 8]));

        let g = ShiftGraph::new(10, 3).unwrap();
        let cycles = enumerate_cycles(&g, &guards()).unwrap();
        assert!(cycles.iter().any(|c| c.vertices() == [0, 3, 6, 9]));
    }

    #[test]
    fn enumerated_cycles_satisfy_invariants() {
        for (n, m) in [(8, 3), (9, 3), (10, 3), (11, 4), (12, 5)] {
            let g = ShiftGraph::new(n, m).unwrap();
            for cycle in enumerate_cycles(&g, &guards()).unwrap() {
                // distinct vertices, steps in {1, m}: re-validate from scratch
                assert!(CycleSeq::new(cycle.vertices().to_vec(), &g).is_ok());
                assert_eq!(
                    cycle.vertices()[0],
                    *cycle.vertices().iter().min().unwrap(),
                    "not canonical: {:?}",
                    cycle.vertices()
                );
            }
        }
    }

    #[test]
    fn cycle_guard_is_clean() {
        let g = ShiftGraph::new(20, 3).unwrap();
        assert!(matches!(
            enumerate_cycles(&g, &guards()),
            Err(Error::GuardExceeded { .. })
        ));
        let tight = Guards {
            max_cycles: 2,
            ..Guards::default()
        };
        let g = ShiftGraph::new(9, 3).unwrap();
        assert!(matches!(
            enumerate_cycles(&g, &tight),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn exact_nu0_examples() {
        let g = ShiftGraph::new(9, 3).unwrap();
        let report = exact_nu0(&g, &guards()).unwrap();
        assert_eq!(report.nu0_exact, 3);
        assert_eq!(report.witness.len(), 3);

        let g = ShiftGraph::new(10, 3).unwrap();
        let report = exact_nu0(&g, &guards()).unwrap();
        assert_eq!(report.nu0_exact, 2);

        let g = ShiftGraph::new(4, 2).unwrap();
        let report = exact_nu0(&g, &guards()).unwrap();
        assert_eq!(report.nu0_exact, 2);
    }

    #[test]
    fn witness_is_disjoint_and_deterministic() {
        let g = ShiftGraph::new(12, 5).unwrap();
        let first = exact_nu0(&g, &guards()).unwrap();
        let second = exact_nu0(&g, &guards()).unwrap();
        let vs = |r: &PackingSearchReport| {
            r.witness.iter().map(|c| c.vertices().to_vec()).collect::<Vec<_>>()
        };
        assert_eq!(vs(&first), vs(&second));
        let mut seen = std::collections::BTreeSet::new();
        for cycle in &first.witness {
            for &v in cycle.vertices() {
                assert!(seen.insert(v), "witness overlaps at {v}");
            }
        }
    }

    #[test]
    fn exact_bound_dominates_construction() {
        for n in 4..=12u64 {
            for m in 2..n {
                let g = ShiftGraph::new(n, m).unwrap();
                let report = exact_nu0(&g, &guards()).unwrap();
                let constructed = build_packing(n, m).unwrap();
                assert!(
                    report.nu0_exact >= constructed.len(),
                    "Shift({n},{m}): exact {} < constructed {}",
                    report.nu0_exact,
                    constructed.len()
                );
            }
        }
    }

    #[test]
    fn packing_realizes_disjoint_sequences() {
        // the packed vertex sequences are k disjoint d-sequences whose
        // differences are only 1 and m, with exactly a strides each
        for (n, m) in [(9u64, 3u64), (10, 3), (13, 4), (17, 5)] {
            let p = build_packing(n, m).unwrap();
            let dec = p.graph().decompose();
            let delta = find_regular(dec.a, dec.b).unwrap();
            assert_eq!(p.len() as u64, dec.k);
            for cycle in p.cycles() {
                let steps = crate::shift::differential_sequence(cycle.vertices(), n);
                assert_eq!(steps.iter().filter(|&&s| s == m).count() as u64, delta.a());
                assert!(steps.iter().all(|&s| s == 1 || s == m));
            }
        }
    }
}
