//! `regneck`: regular necklaces, balanced words, and shift-graph packings.
//!
//! Every command prints a single result envelope (text by default, JSON with
//! `--format json`) and uses a fixed exit-code contract:
//! 0 success, 1 property violation, 2 bad input, 3 internal theorem
//! violation, 4 guard exceeded.

mod sweeps;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use regneck_core::{
    build_packing, dot::render_dot, dual, enumerate_balanced_guarded, enumerate_configurations,
    exact_nu0, find_regular, gcd, is_balanced, is_regular, is_symmetric, rotation_group,
    verify_disjoint, BinaryWord, Configuration, Error as CoreError, Guards, ShiftGraph,
};

pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_BAD_INPUT: u8 = 2;
pub const EXIT_THEOREM: u8 = 3;
pub const EXIT_GUARD: u8 = 4;

#[derive(Parser)]
#[command(
    name = "regneck",
    version,
    about = "Regular necklace configurations, balanced words, and vertex-disjoint cycle packings in shift graphs"
)]
struct Cli {
    /// Output format of the result envelope.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the unique regular configuration of CONF(a, b).
    Regular { a: u64, b: u64 },

    /// Report the predicates of one configuration.
    Check {
        /// Characteristic sequence, e.g. 1,2,1,2
        #[arg(long, value_delimiter = ',', required_unless_present = "word", conflicts_with = "word")]
        chars: Option<Vec<u64>>,
        /// Binary word, e.g. 0101101011
        #[arg(long)]
        word: Option<String>,
    },

    /// Build the guaranteed vertex-disjoint cycle packing of Shift(n, m).
    Pack {
        n: u64,
        m: u64,
        /// Write a Graphviz view of the packed graph to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Re-run the disjointness verification and report it.
        #[arg(long)]
        verify: bool,
    },

    /// Brute-force verifiers.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },

    /// Exhaustive property sweeps; exit 1 on any violation.
    Sweep {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest bead total (or vertex count) per instance.
        #[arg(long, default_value_t = 12)]
        max_n: u64,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Count regular classes per (a, b); expected exactly one each.
    Unique {
        #[arg(long, default_value_t = 10)]
        max_a: u64,
        #[arg(long, default_value_t = 10)]
        max_b: u64,
    },
    /// Exact packing number of Shift(n, m) against the constructive bound.
    Nu0 { n: u64, m: u64 },
    /// Balanced-word counts against n / gcd(k, n - k).
    BalancedCount {
        #[arg(long, default_value_t = 14)]
        max_n: u64,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Regularity,
    Duality,
    Symmetry,
    Balance,
    Shift,
}

/// A command failure carrying its exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn bad_input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_BAD_INPUT,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(err: CoreError) -> Self {
        let code = match err {
            CoreError::GuardExceeded { .. } => EXIT_GUARD,
            CoreError::TheoremViolation(_) => EXIT_THEOREM,
            _ => EXIT_BAD_INPUT,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// The envelope plus its rendered text form and the process exit code.
pub struct Outcome {
    pub envelope: Value,
    pub text: String,
    pub code: u8,
}

pub fn envelope(command: &str, params: Value, provenance: &str, result: Value) -> Value {
    json!({
        "command": command,
        "params": params,
        "provenance": provenance,
        "result": result,
    })
}

fn chars_value(c: &Configuration) -> Value {
    Value::Array(c.chars().iter().map(|&x| json!(x)).collect())
}

fn chars_text(c: &Configuration) -> String {
    let inner: Vec<String> = c.chars().iter().map(u64::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let guards = match guards_from_env() {
        Ok(guards) => guards,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            return ExitCode::from(failure.code);
        }
    };
    match run(cli.command, &guards) {
        Ok(outcome) => {
            match cli.format {
                Format::Json => println!("{}", outcome.envelope),
                Format::Text => print!("{}", outcome.text),
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// `REGNECK_GUARD_N=<n>` raises every bead/vertex guard to at least `n`.
fn guards_from_env() -> Result<Guards, Failure> {
    match std::env::var("REGNECK_GUARD_N") {
        Ok(raw) => {
            let n: u64 = raw
                .parse()
                .map_err(|_| Failure::bad_input(format!("REGNECK_GUARD_N={raw:?} is not a number")))?;
            Ok(Guards::with_scale(n))
        }
        Err(_) => Ok(Guards::default()),
    }
}

fn run(command: Command, guards: &Guards) -> Result<Outcome, Failure> {
    match command {
        Command::Regular { a, b } => cmd_regular(a, b),
        Command::Check { chars, word } => cmd_check(chars, word),
        Command::Pack { n, m, dot, verify } => cmd_pack(n, m, dot, verify),
        Command::Oracle { oracle } => match oracle {
            OracleCommand::Unique { max_a, max_b } => cmd_oracle_unique(max_a, max_b, guards),
            OracleCommand::Nu0 { n, m } => cmd_oracle_nu0(n, m, guards),
            OracleCommand::BalancedCount { max_n } => cmd_oracle_balanced_count(max_n, guards),
        },
        Command::Sweep { suite, max_n } => sweeps::run(suite, max_n, guards),
    }
}

fn cmd_regular(a: u64, b: u64) -> Result<Outcome, Failure> {
    let cfg = find_regular(a, b)?;
    let word = cfg.to_word()?;
    let result = json!({
        "a": a,
        "b": b,
        "chars": chars_value(&cfg),
        "degenerate": cfg.is_degenerate(),
        "n": cfg.n(),
        "word": word.to_string(),
    });
    let text = format!(
        "regular configuration of CONF({a},{b})\n  chars: {}\n  word:  {}\n",
        chars_text(&cfg),
        word
    );
    Ok(Outcome {
        envelope: envelope(
            "regular",
            json!({"a": a, "b": b}),
            "unique regular configuration of CONF(a,b), built by the fragment recursion",
            result,
        ),
        text,
        code: 0,
    })
}

fn cmd_check(chars: Option<Vec<u64>>, word: Option<String>) -> Result<Outcome, Failure> {
    let (cfg, word, params) = match (chars, word) {
        (Some(xs), None) => {
            let cfg = Configuration::from_characteristic(&xs)?;
            let word = cfg.to_word()?;
            let given: Vec<String> = xs.iter().map(u64::to_string).collect();
            (cfg, word, json!({"chars": given.join(",")}))
        }
        (None, Some(s)) => {
            let word = BinaryWord::from_str(&s)?;
            (Configuration::from_word(&word), word, json!({"word": s}))
        }
        _ => unreachable!("clap enforces exactly one input"),
    };
    let rot = rotation_group(&cfg)?;
    let dual_cfg = dual(&cfg)?.canonical();
    let regular = is_regular(&cfg);
    let balanced = is_balanced(&word);
    let symmetric = is_symmetric(&cfg)?;
    let result = json!({
        "a": cfg.a(),
        "b": cfg.b(),
        "balanced": balanced,
        "chars": chars_value(&cfg),
        "dual_chars": chars_value(&dual_cfg),
        "gcd": gcd(cfg.a(), cfg.b()),
        "regular": regular,
        "rot_order": rot.order(),
        "symmetric": symmetric,
        "word": word.to_string(),
    });
    let text = format!(
        "configuration CONF({},{}) {}\n  word:      {}\n  regular:   {}\n  balanced:  {}\n  |Rot|:     {}\n  gcd(a,b):  {}\n  symmetric: {}\n  dual:      {}\n",
        cfg.a(),
        cfg.b(),
        chars_text(&cfg),
        word,
        regular,
        balanced,
        rot.order(),
        gcd(cfg.a(), cfg.b()),
        symmetric,
        chars_text(&dual_cfg),
    );
    Ok(Outcome {
        envelope: envelope(
            "check",
            params,
            "regularity, balance, symmetry, and duality predicates of one configuration",
            result,
        ),
        text,
        code: 0,
    })
}

fn cmd_pack(n: u64, m: u64, dot: Option<PathBuf>, verify: bool) -> Result<Outcome, Failure> {
    let packing = build_packing(n, m)?;
    let dec = packing.graph().decompose();
    let cycles: Vec<Value> = packing
        .cycles()
        .iter()
        .map(|c| Value::Array(c.vertices().iter().map(|&v| json!(v)).collect()))
        .collect();
    let reverified = if verify {
        Some(verify_disjoint(&packing))
    } else {
        None
    };
    if reverified == Some(false) {
        return Err(Failure {
            code: EXIT_THEOREM,
            message: format!("packing of Shift({n},{m}) failed re-verification"),
        });
    }
    let mut dot_path = None;
    if let Some(path) = dot {
        let rendered = render_dot(packing.graph(), Some(&packing));
        std::fs::write(&path, rendered)
            .map_err(|e| Failure::bad_input(format!("cannot write {}: {e}", path.display())))?;
        dot_path = Some(path.display().to_string());
    }
    let result = json!({
        "a": dec.a,
        "b": dec.b,
        "chars": chars_value(packing.configuration()),
        "cycles": cycles,
        "d": dec.d,
        "disjoint": packing.certificate().is_disjoint(),
        "dot": dot_path,
        "k": dec.k,
        "m": m,
        "n": n,
        "reverified": reverified,
    });
    let mut text = format!(
        "packing of Shift({n},{m}): k={} cycles of length d={} (a={}, b={})\n  configuration: {}\n",
        dec.k,
        dec.d,
        dec.a,
        dec.b,
        chars_text(packing.configuration()),
    );
    for (i, cycle) in packing.cycles().iter().enumerate() {
        let verts: Vec<String> = cycle.vertices().iter().map(u64::to_string).collect();
        text.push_str(&format!("  cycle {i}: <{}>\n", verts.join(",")));
    }
    text.push_str(&format!(
        "  disjoint: {}\n",
        packing.certificate().is_disjoint()
    ));
    if let Some(path) = result["dot"].as_str() {
        text.push_str(&format!("  dot written to {path}\n"));
    }
    Ok(Outcome {
        envelope: envelope(
            "pack",
            json!({"m": m, "n": n}),
            "nu0(Shift(n,m)) >= floor(n/(a+b)), realized by translated generic cycles",
            result,
        ),
        text,
        code: 0,
    })
}

fn cmd_oracle_unique(max_a: u64, max_b: u64, guards: &Guards) -> Result<Outcome, Failure> {
    let mut instances = 0u64;
    let mut violations = Vec::new();
    for a in 1..=max_a {
        for b in 1..=max_b {
            instances += 1;
            let regular: Vec<Configuration> = enumerate_configurations(a, b, guards)?
                .into_iter()
                .filter(is_regular)
                .collect();
            let constructed = find_regular(a, b)?;
            if regular.len() != 1 || regular[0] != constructed {
                violations.push(json!({
                    "a": a,
                    "b": b,
                    "count": regular.len(),
                }));
            }
        }
    }
    let ok = violations.is_empty();
    let result = json!({
        "all_unique": ok,
        "instances": instances,
        "violations": violations,
    });
    let text = format!(
        "uniqueness oracle over 1..={max_a} x 1..={max_b}: {instances} instances, {}\n",
        if ok { "all count=1".to_string() } else { format!("{} violations", violations.len()) }
    );
    Ok(Outcome {
        envelope: envelope(
            "oracle-unique",
            json!({"max_a": max_a, "max_b": max_b}),
            "exhaustive enumeration finds exactly one regular class per CONF(a,b)",
            result,
        ),
        text,
        code: if ok { 0 } else { EXIT_VIOLATION },
    })
}

fn cmd_oracle_nu0(n: u64, m: u64, guards: &Guards) -> Result<Outcome, Failure> {
    let graph = ShiftGraph::new(n, m)?;
    let report = exact_nu0(&graph, guards)?;
    let packing = build_packing(n, m)?;
    let constructive = packing.len();
    if report.nu0_exact < constructive {
        return Err(Failure {
            code: EXIT_THEOREM,
            message: format!(
                "Shift({n},{m}): exact nu0 {} below the certified packing {}",
                report.nu0_exact, constructive
            ),
        });
    }
    let witness: Vec<Value> = report
        .witness
        .iter()
        .map(|c| Value::Array(c.vertices().iter().map(|&v| json!(v)).collect()))
        .collect();
    let result = json!({
        "constructive": constructive,
        "cycles_enumerated": report.cycle_count_enumerated,
        "elapsed_ms": report.elapsed.as_millis() as u64,
        "exact": report.nu0_exact,
        "m": m,
        "n": n,
        "search_nodes": report.search_nodes,
        "tight": report.nu0_exact == constructive,
        "witness": witness,
    });
    let text = format!(
        "exact nu0(Shift({n},{m})) = {} (constructive bound {}, tight: {})\n  cycles enumerated: {}, search nodes: {}\n",
        report.nu0_exact,
        constructive,
        report.nu0_exact == constructive,
        report.cycle_count_enumerated,
        report.search_nodes,
    );
    Ok(Outcome {
        envelope: envelope(
            "oracle-nu0",
            json!({"m": m, "n": n}),
            "exact maximum vertex-disjoint cycle count against the constructive lower bound",
            result,
        ),
        text,
        code: 0,
    })
}

fn cmd_oracle_balanced_count(max_n: u64, guards: &Guards) -> Result<Outcome, Failure> {
    let mut instances = 0u64;
    let mut violations = Vec::new();
    for n in 2..=max_n {
        for k in 1..n {
            instances += 1;
            let words = enumerate_balanced_guarded(n, k, guards.max_configuration_beads)?;
            let expected = n / gcd(k, n - k);
            let one_orbit = words
                .iter()
                .all(|w| (0..n as usize).any(|t| words[0].rotated(t) == *w));
            if words.len() as u64 != expected || !one_orbit {
                violations.push(json!({
                    "expected": expected,
                    "found": words.len(),
                    "k": k,
                    "n": n,
                    "one_orbit": one_orbit,
                }));
            }
        }
    }
    let ok = violations.is_empty();
    let result = json!({
        "all_match": ok,
        "instances": instances,
        "violations": violations,
    });
    let text = format!(
        "balanced-count oracle over n <= {max_n}: {instances} instances, {}\n",
        if ok {
            "all counts equal n/gcd(k,n-k)".to_string()
        } else {
            format!("{} violations", violations.len())
        }
    );
    Ok(Outcome {
        envelope: envelope(
            "oracle-balanced-count",
            json!({"max_n": max_n}),
            "exactly n/gcd(k,n-k) balanced words per (n,k), forming one rotation orbit",
            result,
        ),
        text,
        code: if ok { 0 } else { EXIT_VIOLATION },
    })
}
