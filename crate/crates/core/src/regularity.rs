//! Regular configurations: the exact window-inequality test and the
//! fragment-recursion construction.
//!
//! A configuration is regular when every cyclic window of `k` gaps carries
//! strictly between `(a/b)k - 1` and `(a/b)k + 1` red beads. All comparisons
//! here are done in cross-multiplied integer form; no division is performed.

use crate::error::{Error, Result};
use crate::necklace::{BinaryWord, Configuration};

/// Minimum and maximum red-bead counts over cyclic gap windows.
///
/// `mu_j` is the least red count among `j` consecutive gaps (so among `j+1`
/// consecutive black beads), with `mu_{-1} = mu_0 = 0`; `xi_j` is the largest
/// red count among `j+1` consecutive gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowStats {
    a: u64,
    b: u64,
    mu: Vec<u64>, // mu[j + 1] = mu_j for j in -1..=b
    xi: Vec<u64>, // xi[j] = xi_j for j in 0..b
}

impl WindowStats {
    /// Red count of the window statistic's configuration.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Black count of the window statistic's configuration.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// `mu_j` for `-1 <= j <= b`.
    pub fn mu(&self, j: i64) -> u64 {
        assert!((-1..=self.b as i64).contains(&j), "mu index {j} out of range");
        self.mu[(j + 1) as usize]
    }

    /// `xi_j` for `0 <= j <= b-1`.
    pub fn xi(&self, j: u64) -> u64 {
        assert!(j < self.b, "xi index {j} out of range");
        self.xi[j as usize]
    }
}

/// Sum of the cyclic window `x_i + x_{i+1} + ... + x_{i+k-1}`.
pub fn cyclic_window_sum(xs: &[u64], i: usize, k: usize) -> u64 {
    let b = xs.len();
    (0..k).map(|t| xs[(i + t) % b]).sum()
}

/// Computes all `mu_j` and `xi_j` window statistics; requires `b >= 1`.
pub fn window_stats(cfg: &Configuration) -> Result<WindowStats> {
    let xs = cfg.chars();
    let b = xs.len();
    if b == 0 {
        return Err(Error::NoGaps);
    }
    let mut mu = Vec::with_capacity(b + 2);
    mu.push(0); // mu_{-1}
    mu.push(0); // mu_0
    let mut xi = Vec::with_capacity(b);
    // sums[i] holds the window of the current length starting at gap i;
    // each pass grows every window by one gap.
    let mut sums = vec![0u64; b];
    for j in 1..=b {
        for (i, s) in sums.iter_mut().enumerate() {
            *s += xs[(i + j - 1) % b];
        }
        mu.push(*sums.iter().min().expect("b >= 1"));
        if j < b {
            // xi_{j-1} covers j gaps, so it is ready one pass early
            xi.push(*sums.iter().max().expect("b >= 1"));
        }
    }
    // xi_{b-1} covers all b gaps and always equals a
    xi.push(cfg.a());
    let stats = WindowStats {
        a: cfg.a(),
        b: b as u64,
        mu,
        xi,
    };
    debug_assert!(stats.mu.windows(2).all(|w| w[0] <= w[1]));
    debug_assert_eq!(stats.mu(b as i64), cfg.a());
    Ok(stats)
}

/// Window-inequality regularity test.
///
/// True iff `a*k - b < S*b < a*k + b` for every window sum `S` over `k`
/// consecutive gaps, `0 <= i <= b-1` and `1 <= k <= 1 + b/2`. Single-colored
/// necklaces are regular by convention.
pub fn is_regular(cfg: &Configuration) -> bool {
    if cfg.is_degenerate() {
        return true;
    }
    let xs = cfg.chars();
    let a = cfg.a() as u128;
    let b = xs.len() as u128;
    let k_max = 1 + xs.len() / 2;
    for i in 0..xs.len() {
        let mut sum: u128 = 0;
        for k in 1..=k_max {
            sum += xs[(i + k - 1) % xs.len()] as u128;
            let target = a * k as u128;
            let scaled = sum * b;
            if scaled + b <= target || target + b <= scaled {
                return false;
            }
        }
    }
    true
}

/// Regularity via the minimum statistic: true iff `b*(1 + mu_j) > a*j` for
/// all `-1 <= j <= b`. Agrees with [`is_regular`] on every configuration
/// with `b >= 1`.
pub fn is_regular_via_mu(cfg: &Configuration) -> Result<bool> {
    let stats = window_stats(cfg)?;
    let a = cfg.a() as i128;
    let b = cfg.b() as i128;
    for j in -1..=cfg.b() as i64 {
        let lhs = b * (1 + stats.mu(j) as i128);
        if lhs <= a * j as i128 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Subtracts `t` red beads from every gap, moving CONF(a, b) to
/// CONF(a - t*b, b). Regularity is preserved in both directions.
pub fn reduce(cfg: &Configuration, t: u64) -> Result<Configuration> {
    let mut xs = Vec::with_capacity(cfg.chars().len());
    for (index, &x) in cfg.chars().iter().enumerate() {
        if x < t {
            return Err(Error::ReductionTooLarge {
                index,
                value: x,
                amount: t,
            });
        }
        xs.push(x - t);
    }
    Configuration::from_characteristic(&xs)
}

/// Constructs the unique regular configuration in CONF(a, b) by the
/// Euclidean fragment recursion and returns its canonical form.
///
/// Fragments are bead strings; each level glues one copy of the rarer
/// fragment to `t = floor(cx/cy)` copies of the common one, recursing on the
/// remainder until the necklace splits into equal fragments.
pub fn find_regular(a: u64, b: u64) -> Result<Configuration> {
    if a == 0 && b == 0 {
        return Err(Error::EmptyConfiguration);
    }
    if b == 0 {
        return Ok(Configuration::all_red(a));
    }
    if a == 0 {
        return Configuration::from_characteristic(&vec![0; b as usize]);
    }
    let bits = fragment_word(a, vec![true], b, vec![false]);
    let word = BinaryWord::new(bits).expect("a + b >= 1");
    Ok(Configuration::from_word(&word).canonical())
}

fn fragment_word(cx: u64, fx: Vec<bool>, cy: u64, fy: Vec<bool>) -> Vec<bool> {
    if cx < cy {
        return fragment_word(cy, fy, cx, fx);
    }
    let t = cx / cy;
    let k = cx % cy;
    let mut z = fy;
    for _ in 0..t {
        z.extend_from_slice(&fx);
    }
    if k != 0 {
        fragment_word(cy, z, k, fx)
    } else {
        let mut word = Vec::with_capacity(z.len() * cy as usize);
        for _ in 0..cy {
            word.extend_from_slice(&z);
        }
        word
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::rotate;

    fn cfg(xs: &[u64]) -> Configuration {
        Configuration::from_characteristic(xs).unwrap()
    }

    /// Oracle: regularity checked over every window length 1..=b-1 straight
    /// from the definition, without the k-range reduction.
    fn is_regular_all_window_lengths(c: &Configuration) -> bool {
        if c.is_degenerate() {
            return true;
        }
        let xs = c.chars();
        let (a, b) = (c.a() as i128, xs.len() as i128);
        for i in 0..xs.len() {
            for k in 1..xs.len() {
                let s = cyclic_window_sum(xs, i, k) as i128;
                if !(a * k as i128 - b < s * b && s * b < a * k as i128 + b) {
                    return false;
                }
            }
        }
        true
    }

    /// All compositions of `a` into `b` non-negative parts.
    fn compositions(a: u64, b: usize) -> Vec<Vec<u64>> {
        if b == 0 {
            return if a == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=a {
            for mut rest in compositions(a - first, b - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn window_stats_examples() {
        let stats = window_stats(&cfg(&[1, 2, 1, 2])).unwrap();
        let mu: Vec<u64> = (-1..=4).map(|j| stats.mu(j)).collect();
        assert_eq!(mu, vec![0, 0, 1, 3, 4, 6]);
        assert_eq!(stats.xi(0), 2);
        assert_eq!(stats.xi(1), 3);

        let stats = window_stats(&cfg(&[5, 5, 5])).unwrap();
        for j in 1..=3i64 {
            assert_eq!(stats.mu(j), 5 * j as u64);
        }

        assert_eq!(window_stats(&Configuration::all_red(4)), Err(Error::NoGaps));
    }

    #[test]
    fn window_stats_min_average_max() {
        // mu_j * b <= j * a <= xi_{j-1} * b for 1 <= j <= b-1.
        for xs in compositions(7, 4) {
            let c = cfg(&xs);
            let stats = window_stats(&c).unwrap();
            for j in 1..c.b() {
                assert!(stats.mu(j as i64) * c.b() <= j * c.a());
                assert!(j * c.a() <= stats.xi(j - 1) * c.b());
            }
        }
    }

    #[test]
    fn is_regular_examples() {
        assert!(is_regular(&cfg(&[1, 2, 1, 2])));
        assert!(!is_regular(&cfg(&[2, 2, 1, 1])));
        assert!(is_regular(&cfg(&[3, 3, 3, 3, 3])));
        assert!(is_regular(&cfg(&[0, 0, 0]))); // degenerate all-black
        assert!(is_regular(&Configuration::all_red(5)));
        assert!(is_regular(&cfg(&[]))); // empty necklace is trivially regular
    }

    #[test]
    fn is_regular_via_mu_examples() {
        assert_eq!(is_regular_via_mu(&cfg(&[1, 2, 1, 2])), Ok(true));
        assert_eq!(is_regular_via_mu(&cfg(&[0, 3, 0, 3])), Ok(false));
        assert_eq!(is_regular_via_mu(&cfg(&[2, 2, 2])), Ok(true));
        assert_eq!(is_regular_via_mu(&Configuration::all_red(2)), Err(Error::NoGaps));
    }

    #[test]
    fn mu_route_agrees_with_window_route() {
        for a in 0..=8u64 {
            for b in 1..=5usize {
                for xs in compositions(a, b) {
                    let c = cfg(&xs);
                    assert_eq!(
                        is_regular(&c),
                        is_regular_via_mu(&c).unwrap(),
                        "route disagreement on {xs:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn reduced_k_range_matches_full_range() {
        for a in 0..=8u64 {
            for b in 1..=5usize {
                for xs in compositions(a, b) {
                    let c = cfg(&xs);
                    assert_eq!(
                        is_regular(&c),
                        is_regular_all_window_lengths(&c),
                        "k-range reduction broke on {xs:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn regularity_is_rotation_invariant() {
        for xs in compositions(7, 4) {
            let c = cfg(&xs);
            let reg = is_regular(&c);
            for t in 0..4 {
                assert_eq!(is_regular(&c.rotated(t)), reg);
            }
            assert_eq!(is_regular(&cfg(&rotate(&xs, 2))), reg);
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&cfg(&[1, 2, 1, 2]), 1).unwrap(), cfg(&[0, 1, 0, 1]));
        assert!(is_regular(&reduce(&cfg(&[1, 2, 1, 2]), 1).unwrap()));
        assert_eq!(reduce(&cfg(&[2, 2, 2]), 2).unwrap(), cfg(&[0, 0, 0]));
        assert_eq!(
            reduce(&cfg(&[1, 2, 1, 2]), 2),
            Err(Error::ReductionTooLarge {
                index: 0,
                value: 1,
                amount: 2
            })
        );
    }

    #[test]
    fn reduce_preserves_regularity_both_ways() {
        for a in 0..=8u64 {
            for b in 1..=4usize {
                for xs in compositions(a, b) {
                    let c = cfg(&xs);
                    let t = *xs.iter().min().unwrap();
                    let reduced = reduce(&c, t).unwrap();
                    assert_eq!(is_regular(&c), is_regular(&reduced), "reduction by {t} on {xs:?}");
                }
            }
        }
    }

    #[test]
    fn find_regular_examples() {
        assert_eq!(find_regular(8, 4).unwrap(), cfg(&[2, 2, 2, 2]));
        assert_eq!(find_regular(9, 4).unwrap(), cfg(&[2, 2, 2, 3]));
        assert_eq!(find_regular(6, 4).unwrap(), cfg(&[1, 2, 1, 2]));
        assert_eq!(find_regular(0, 0), Err(Error::EmptyConfiguration));
        assert_eq!(find_regular(0, 3).unwrap(), cfg(&[0, 0, 0]));
        assert_eq!(find_regular(3, 0).unwrap(), Configuration::all_red(3));
    }

    #[test]
    fn find_regular_output_is_regular_and_unique() {
        for a in 1..=9u64 {
            for b in 1..=5u64 {
                let found = find_regular(a, b).unwrap();
                assert!(is_regular(&found), "find_regular({a},{b}) not regular");
                assert_eq!((found.a(), found.b()), (a, b));

                let mut regular_classes = std::collections::BTreeSet::new();
                for xs in compositions(a, b as usize) {
                    let c = cfg(&xs);
                    if is_regular(&c) {
                        regular_classes.insert(c.canonical());
                    }
                }
                assert_eq!(regular_classes.len(), 1, "CONF({a},{b})");
                assert!(regular_classes.contains(&found));
            }
        }
    }
}
