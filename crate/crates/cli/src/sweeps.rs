//! Exhaustive theorem sweeps, one instance per parameter tuple.
//!
//! Each suite walks every in-range instance, records a pass/fail entry, and
//! the command exits 1 if any instance fails, with the first counterexample
//! in the envelope.

use serde_json::{json, Value};

use regneck_core::regularity::cyclic_window_sum;
use regneck_core::{
    build_packing, decompose, differential_set, differential_set_closed_form, dual,
    enumerate_balanced_guarded, enumerate_configurations, find_regular, gcd, generic_cycle,
    is_balanced, is_regular, is_regular_via_mu, orbit_size, reduce, rotation_group,
    word_is_regular_config, BinaryWord, Configuration, Guards, ShiftGraph,
};

use crate::{envelope, Failure, Outcome, Suite, EXIT_VIOLATION};

struct Instance {
    key: String,
    pass: bool,
    detail: String,
}

impl Instance {
    fn pass(key: String) -> Self {
        Instance {
            key,
            pass: true,
            detail: String::new(),
        }
    }

    fn fail(key: String, detail: String) -> Self {
        Instance {
            key,
            pass: false,
            detail,
        }
    }
}

pub fn run(suite: Suite, max_n: u64, guards: &Guards) -> Result<Outcome, Failure> {
    let (name, provenance, instances) = match suite {
        Suite::Regularity => (
            "regularity",
            "window test, minimum-statistic test, full window range, rotation invariance, reduction, and uniqueness agree on every class",
            sweep_regularity(max_n, guards)?,
        ),
        Suite::Duality => (
            "duality",
            "the dual swaps parameters, preserves regularity, is an involution, and maps class sets bijectively",
            sweep_duality(max_n, guards)?,
        ),
        Suite::Symmetry => (
            "symmetry",
            "rotation orders divide gcd(a,b), regular classes are symmetric, and orbit times order is n",
            sweep_symmetry(max_n, guards)?,
        ),
        Suite::Balance => (
            "balance",
            "a word is balanced iff its configuration is regular; balanced words number n/gcd(k,n-k) in one orbit",
            sweep_balance(max_n, guards)?,
        ),
        Suite::Shift => (
            "shift",
            "translated generic cycles of the regular configuration pack Shift(n,m) disjointly",
            sweep_shift(max_n)?,
        ),
    };
    let violations: Vec<&Instance> = instances.iter().filter(|i| !i.pass).collect();
    let first_violation = violations.first().map(|i| {
        json!({
            "detail": i.detail,
            "key": i.key,
        })
    });
    let results: Vec<Value> = instances
        .iter()
        .map(|i| {
            json!({
                "detail": i.detail,
                "key": i.key,
                "pass": i.pass,
            })
        })
        .collect();
    let result = json!({
        "first_violation": first_violation,
        "instances": instances.len(),
        "results": results,
        "violations": violations.len(),
    });
    let mut text = format!(
        "sweep {name} (max_n={max_n}): {} instances, {} violations\n",
        instances.len(),
        violations.len()
    );
    for v in &violations {
        text.push_str(&format!("  FAIL {}: {}\n", v.key, v.detail));
    }
    let code = if violations.is_empty() { 0 } else { EXIT_VIOLATION };
    Ok(Outcome {
        envelope: envelope(
            "sweep",
            json!({"max_n": max_n, "suite": name}),
            provenance,
            result,
        ),
        text,
        code,
    })
}

/// Regularity straight from the definition over every window length.
fn regular_by_all_windows(c: &Configuration) -> bool {
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

fn sweep_regularity(max_n: u64, guards: &Guards) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    for total in 2..=max_n {
        for a in 1..total {
            let b = total - a;
            let key = format!("a={a},b={b}");
            let constructed = find_regular(a, b)?;
            let mut regular_classes = 0u64;
            let mut failure = None;
            for c in enumerate_configurations(a, b, guards)? {
                let reg = is_regular(&c);
                if reg {
                    regular_classes += 1;
                    if c != constructed {
                        failure = Some(format!("regular class {c} differs from construction"));
                    }
                }
                if reg != is_regular_via_mu(&c)? {
                    failure = Some(format!("mu route disagrees on {c}"));
                }
                if reg != regular_by_all_windows(&c) {
                    failure = Some(format!("k-range reduction disagrees on {c}"));
                }
                if (1..c.b() as usize).any(|t| is_regular(&c.rotated(t)) != reg) {
                    failure = Some(format!("rotation changes regularity of {c}"));
                }
                let t = c.chars().iter().copied().min().unwrap_or(0);
                if is_regular(&reduce(&c, t)?) != reg {
                    failure = Some(format!("reduction by {t} changes regularity of {c}"));
                }
            }
            if regular_classes != 1 {
                failure = Some(format!("{regular_classes} regular classes"));
            }
            out.push(match failure {
                None => Instance::pass(key),
                Some(detail) => Instance::fail(key, detail),
            });
        }
    }
    Ok(out)
}

fn sweep_duality(max_n: u64, guards: &Guards) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    for total in 1..=max_n {
        for a in 0..=total {
            let b = total - a;
            if a == 0 && b == 0 {
                continue;
            }
            let key = format!("a={a},b={b}");
            let classes = enumerate_configurations(a, b, guards)?;
            let mut mapped = std::collections::BTreeSet::new();
            let mut failure = None;
            for c in &classes {
                let d = dual(c)?;
                if (d.a(), d.b()) != (b, a) {
                    failure = Some(format!("dual of {c} has wrong parameters"));
                }
                if is_regular(c) != is_regular(&d) {
                    failure = Some(format!("dual changes regularity of {c}"));
                }
                if !dual(&d)?.equivalent_to(c) {
                    failure = Some(format!("double dual of {c} differs"));
                }
                mapped.insert(d.canonical());
            }
            let target = enumerate_configurations(b, a, guards)?;
            if mapped.len() != classes.len() || mapped != target.into_iter().collect() {
                failure = Some("dual is not a class bijection".to_string());
            }
            out.push(match failure {
                None => Instance::pass(key),
                Some(detail) => Instance::fail(key, detail),
            });
        }
    }
    Ok(out)
}

fn sweep_symmetry(max_n: u64, guards: &Guards) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    for total in 1..=max_n {
        for a in 0..=total {
            let b = total - a;
            if a == 0 && b == 0 {
                continue;
            }
            let key = format!("a={a},b={b}");
            let mut failure = None;
            for c in enumerate_configurations(a, b, guards)? {
                let order = rotation_group(&c)?.order();
                if gcd(a, b) % order != 0 {
                    failure = Some(format!("|Rot({c})| = {order} does not divide gcd"));
                }
                if orbit_size(&c)? * order != c.n() {
                    failure = Some(format!("orbit-stabilizer fails on {c}"));
                }
                if is_regular(&c) && order != gcd(a, b) {
                    failure = Some(format!("regular {c} is not symmetric"));
                }
                let t = c.chars().iter().copied().min().unwrap_or(0);
                let reduced = reduce(&c, t)?;
                if reduced.n() > 0 && rotation_group(&reduced)?.order() != order {
                    failure = Some(format!("reduction changes |Rot| of {c}"));
                }
            }
            out.push(match failure {
                None => Instance::pass(key),
                Some(detail) => Instance::fail(key, detail),
            });
        }
    }
    Ok(out)
}

fn sweep_balance(max_n: u64, guards: &Guards) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(24) {
        let key = format!("bridge,n={n}");
        let mut failure = None;
        for mask in 0..(1u64 << n) {
            let bits = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
            let w = BinaryWord::new(bits).expect("n >= 1");
            if is_balanced(&w) != word_is_regular_config(&w) {
                failure = Some(format!("bridge fails on {w}"));
                break;
            }
        }
        out.push(match failure {
            None => Instance::pass(key),
            Some(detail) => Instance::fail(key, detail),
        });
    }
    for n in 2..=max_n {
        for k in 1..n {
            let key = format!("count,n={n},k={k}");
            let words = enumerate_balanced_guarded(n, k, guards.max_configuration_beads)?;
            let expected = n / gcd(k, n - k);
            let one_orbit = words
                .iter()
                .all(|w| (0..n as usize).any(|t| words[0].rotated(t) == *w));
            out.push(if words.len() as u64 == expected && one_orbit {
                Instance::pass(key)
            } else {
                Instance::fail(
                    key,
                    format!("{} balanced words, expected {expected}", words.len()),
                )
            });
        }
    }
    Ok(out)
}

fn sweep_shift(max_n: u64) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        for m in 2..n {
            let key = format!("n={n},m={m}");
            let mut failure = None;
            let g = ShiftGraph::new(n, m)?;
            let dec = decompose(n, m)?;
            let delta = find_regular(dec.a, dec.b)?;

            let packing = build_packing(n, m)?;
            if packing.len() as u64 != dec.k || !packing.certificate().is_disjoint() {
                failure = Some("packing size or disjointness failed".to_string());
            }
            if packing.cycles().iter().any(|c| c.len() as u64 != dec.d) {
                failure = Some("cycle length differs from d".to_string());
            }

            let base = generic_cycle(0, &delta, &g)?;
            let base_set = base.vertex_set();
            for q in 1..dec.k {
                let translate = generic_cycle(q * (m - 1) % n, &delta, &g)?.vertex_set();
                if !base_set.is_disjoint(&translate) {
                    failure = Some(format!("base cycle meets translate q={q}"));
                }
            }

            if differential_set_closed_form(&delta, &g)? != differential_set(base.vertices(), n) {
                failure = Some("closed-form differential set mismatch".to_string());
            }

            for q in 1..dec.k {
                let r = q * (m - 1) / n;
                for j in 0..=dec.b {
                    if q + r * dec.b + j >= 2 * m {
                        failure = Some(format!("offset budget fails at q={q}, j={j}"));
                    }
                }
            }

            if n <= 30 {
                let sets: Vec<_> = (0..n)
                    .map(|v| generic_cycle(v, &delta, &g).map(|c| c.vertex_set()))
                    .collect::<Result<Vec<_>, _>>()?;
                let diff = differential_set(base.vertices(), n);
                'outer: for i in 0..n as usize {
                    for j in 0..n as usize {
                        let meets = !sets[i].is_disjoint(&sets[j]);
                        let predicted = diff.contains(&((j as u64 + n - i as u64) % n));
                        if meets != predicted {
                            failure = Some(format!("translation criterion fails at i={i}, j={j}"));
                            break 'outer;
                        }
                    }
                }
            }

            out.push(match failure {
                None => Instance::pass(key),
                Some(detail) => Instance::fail(key, detail),
            });
        }
    }
    Ok(out)
}
