//! Command-line front end: membership checks, both directions of the
//! bijection, class enumeration, exhaustive verification, and counting.
//!
//! Exit codes: 0 success, 1 semantic failure (membership check failed,
//! verification failed), 2 usage or input errors.

use std::fs;
use std::io::{self, Read as _, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use genocchi::{
    all_pairs, dumont_violation, enumerate_dumont_derangements,
    enumerate_dumont_derangements_prefixed, enumerate_terrain, enumerate_terrain_prefixed,
    graph_to_permutation, graph_to_permutation_ordered, parse_graph, parse_permutation,
    permutation_to_graph, permutation_to_graph_ordered, permutation_to_graph_traced,
    random_valid_order, sequence_record, serialize_graph, verify_with, x_violation, CountMethod,
    Graph, GraphRecord, PairedRecord, PermRecord, Permutation, UnmapTrace, ValidOrder,
    VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "genocchi",
    version,
    about = "Terrain-like graphs, Dumont derangements of the second kind, and the bijection between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of a graph or permutation in its class
    Check {
        kind: Kind,
        /// Input file; '-' or absent reads stdin
        input: Option<String>,
    },
    /// Map graph text to its permutation word
    Map {
        /// Input file; '-' or absent reads stdin
        input: Option<String>,
        /// Apply the edge transpositions in a seeded random valid order
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Map a permutation word back to graph text
    Unmap {
        /// Input file; '-' or absent reads stdin
        input: Option<String>,
        /// Sweep the vertex pairs in a seeded random valid order
        #[arg(long)]
        seed: Option<u64>,
        /// Emit one comment line per sweep step
        #[arg(long)]
        trace: bool,
        /// Re-check internal invariants at every sweep step
        #[arg(long)]
        paranoid: bool,
    },
    /// Stream one side of the bijection exhaustively
    Enumerate {
        /// What to enumerate: graphs (edge-bitmask order) or perms (word order)
        what: Option<What>,
        /// Alternative spelling of the positional argument
        #[arg(long = "what", value_name = "WHAT")]
        what_flag: Option<What>,
        /// Number of vertices
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
        format: StreamFormat,
        /// Pair every row with its image under the bijection
        #[arg(long)]
        paired: bool,
        /// Split the stream across threads; rows may interleave
        #[arg(long)]
        unordered: bool,
    },
    /// Enumerate both sides and check the bijection plus its invariants
    Verify {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Re-check internal invariants during every unmap
        #[arg(long)]
        paranoid: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Seed for the random-order spot checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Median Genocchi number for n, counted from both sides
    Count {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Also print count / 2^(n-1)
        #[arg(long)]
        normalized: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Graph,
    Perm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Graphs,
    Perms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StreamFormat {
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

const USAGE: u8 = 2;
const FAILURE: u8 = 1;

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Check { kind, input } => check(kind, input.as_deref()),
        Command::Map { input, seed } => map(input.as_deref(), seed),
        Command::Unmap {
            input,
            seed,
            trace,
            paranoid,
        } => unmap(input.as_deref(), seed, trace, paranoid),
        Command::Enumerate {
            what,
            what_flag,
            n,
            format,
            paired,
            unordered,
        } => enumerate(what, what_flag, n, format, paired, unordered),
        Command::Verify {
            n,
            paranoid,
            format,
            seed,
        } => verify(n, paranoid, format, seed),
        Command::Count { n, normalized } => count(n, normalized),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn failure(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(FAILURE)
}

fn read_input(path: Option<&str>) -> Result<String, ExitCode> {
    let result = match path {
        None | Some("-") => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map(|_| buf)
        }
        Some(p) => fs::read_to_string(p),
    };
    result.map_err(|e| {
        let name = path.unwrap_or("-");
        usage_error(format_args!("cannot read '{name}': {e}"))
    })
}

fn read_graph(path: Option<&str>) -> Result<Graph, ExitCode> {
    parse_graph(&read_input(path)?).map_err(usage_error)
}

fn read_permutation(path: Option<&str>) -> Result<Permutation, ExitCode> {
    parse_permutation(&read_input(path)?).map_err(usage_error)
}

fn check(kind: Kind, input: Option<&str>) -> ExitCode {
    match kind {
        Kind::Graph => {
            let g = match read_graph(input) {
                Ok(g) => g,
                Err(code) => return code,
            };
            match x_violation(&g) {
                None => {
                    outln("terrain-like");
                    ExitCode::SUCCESS
                }
                Some(w) => {
                    outln(format_args!("not terrain-like (witness: {w})"));
                    ExitCode::from(FAILURE)
                }
            }
        }
        Kind::Perm => {
            let p = match read_permutation(input) {
                Ok(p) => p,
                Err(code) => return code,
            };
            match dumont_violation(&p) {
                None => {
                    outln("dumont-derangement");
                    ExitCode::SUCCESS
                }
                Some(v) => {
                    outln(format_args!("not a Dumont derangement: {v}"));
                    ExitCode::from(FAILURE)
                }
            }
        }
    }
}

fn map(input: Option<&str>, seed: Option<u64>) -> ExitCode {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let p = match seed {
        None => graph_to_permutation(&g),
        Some(s) => {
            let order = random_valid_order(&g.edges(), s);
            match graph_to_permutation_ordered(&g, &order) {
                Ok(p) => p,
                Err(e) => return failure(e),
            }
        }
    };
    outln(p);
    ExitCode::SUCCESS
}

fn unmap(input: Option<&str>, seed: Option<u64>, trace: bool, paranoid: bool) -> ExitCode {
    let p = match read_permutation(input) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let order: Option<ValidOrder> = seed.map(|s| random_valid_order(&all_pairs(p.half_size()), s));
    let result: Result<(Graph, Option<UnmapTrace>), genocchi::Error> = if trace || paranoid {
        permutation_to_graph_traced(&p, order.as_ref(), paranoid).map(|(g, t)| (g, Some(t)))
    } else {
        match order {
            Some(o) => permutation_to_graph_ordered(&p, &o),
            None => permutation_to_graph(&p),
        }
        .map(|g| (g, None))
    };
    match result {
        Ok((g, tr)) => {
            if trace {
                for step in tr.as_ref().map(|t| t.steps.as_slice()).unwrap_or(&[]) {
                    if step.inserted {
                        outln(format_args!(
                            "# {} inserted, working word {}",
                            step.pair, step.after
                        ));
                    } else {
                        outln(format_args!("# {} skipped", step.pair));
                    }
                }
            }
            out(serialize_graph(&g));
            ExitCode::SUCCESS
        }
        Err(e) => failure(e),
    }
}

fn graph_line(g: &Graph, format: StreamFormat, paired: bool) -> String {
    match (format, paired) {
        (StreamFormat::Text, false) => g.to_string(),
        (StreamFormat::Text, true) => {
            format!("{g} | {}", graph_to_permutation(g))
        }
        (StreamFormat::Jsonl, false) => {
            serde_json::to_string(&GraphRecord::from_graph(g)).expect("graph record serializes")
        }
        (StreamFormat::Jsonl, true) => {
            let p = graph_to_permutation(g);
            serde_json::to_string(&PairedRecord::new(g, &p)).expect("paired record serializes")
        }
    }
}

fn perm_line(q: &Permutation, format: StreamFormat, paired: bool) -> String {
    if !paired {
        return match format {
            StreamFormat::Text => q.to_string(),
            StreamFormat::Jsonl => serde_json::to_string(&PermRecord::from_permutation(q))
                .expect("permutation record serializes"),
        };
    }
    let g = permutation_to_graph(q).expect("enumerated member unmaps");
    match format {
        StreamFormat::Text => format!("{g} | {q}"),
        StreamFormat::Jsonl => {
            serde_json::to_string(&PairedRecord::new(&g, q)).expect("paired record serializes")
        }
    }
}

/// A closed pipe downstream (e.g. `| head`) ends the program successfully;
/// any other stdout failure is a hard error.
fn handle_write_error(e: io::Error) -> ! {
    if e.kind() == io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    eprintln!("error: {e}");
    std::process::exit(i32::from(FAILURE));
}

fn out(text: impl std::fmt::Display) {
    let mut out = io::stdout().lock();
    if let Err(e) = write!(out, "{text}") {
        handle_write_error(e);
    }
}

fn outln(text: impl std::fmt::Display) {
    let mut out = io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}") {
        handle_write_error(e);
    }
}

fn emit(out: &mut impl io::Write, line: &str) {
    if let Err(e) = writeln!(out, "{line}") {
        handle_write_error(e);
    }
}

fn enumerate(
    what: Option<What>,
    what_flag: Option<What>,
    n: usize,
    format: StreamFormat,
    paired: bool,
    unordered: bool,
) -> ExitCode {
    let what = match (what, what_flag) {
        (Some(w), None) | (None, Some(w)) => w,
        (None, None) => return usage_error("specify what to enumerate: graphs or perms"),
        (Some(_), Some(_)) => {
            return usage_error("'what' was given both positionally and as a flag")
        }
    };
    match (what, unordered) {
        (What::Graphs, false) => {
            let stream = match enumerate_terrain(n) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let mut out = io::stdout().lock();
            for g in stream {
                emit(&mut out, &graph_line(&g, format, paired));
            }
        }
        (What::Perms, false) => {
            let stream = match enumerate_dumont_derangements(n) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let mut out = io::stdout().lock();
            for q in stream {
                emit(&mut out, &perm_line(&q, format, paired));
            }
        }
        (What::Graphs, true) => {
            let bits = all_pairs(n).len().min(4);
            let mut parts = Vec::new();
            for prefix in 0..1u128 << bits {
                match enumerate_terrain_prefixed(n, bits, prefix) {
                    Ok(s) => parts.push(s),
                    Err(e) => return usage_error(e),
                }
            }
            std::thread::scope(|scope| {
                for part in parts {
                    scope.spawn(move || {
                        for g in part {
                            let line = graph_line(&g, format, paired);
                            emit(&mut io::stdout().lock(), &line);
                        }
                    });
                }
            });
        }
        (What::Perms, true) => {
            let mut parts = Vec::new();
            for first in 2..=2 * n {
                match enumerate_dumont_derangements_prefixed(n, &[first]) {
                    Ok(s) => parts.push(s),
                    Err(e) => return usage_error(e),
                }
            }
            std::thread::scope(|scope| {
                for part in parts {
                    scope.spawn(move || {
                        for q in part {
                            let line = perm_line(&q, format, paired);
                            emit(&mut io::stdout().lock(), &line);
                        }
                    });
                }
            });
        }
    }
    ExitCode::SUCCESS
}

fn verify(n: usize, paranoid: bool, format: ReportFormat, seed: u64) -> ExitCode {
    let opts = VerifyOptions {
        seed,
        paranoid,
        ..VerifyOptions::default()
    };
    let report = match verify_with(n, opts) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    match format {
        ReportFormat::Json => {
            outln(serde_json::to_string_pretty(&report).expect("report serializes"));
        }
        ReportFormat::Text => {
            let status = |name: &str| {
                let passed = report
                    .checks
                    .iter()
                    .find(|c| c.name == name)
                    .is_none_or(|c| c.passed);
                if passed {
                    "✓"
                } else {
                    "✗"
                }
            };
            let relation = if report.terrain_count == report.dumont_count {
                "="
            } else {
                "≠"
            };
            outln(format_args!(
                "n={}: {} {} {}, Γ∘Π {}, Π∘Γ {}",
                report.n,
                report.terrain_count,
                relation,
                report.dumont_count,
                status("unmap_after_map"),
                status("map_after_unmap"),
            ));
            for c in &report.checks {
                match &c.counterexample {
                    None if c.passed => outln(format_args!("✓ {}", c.name)),
                    None => outln(format_args!("✗ {}", c.name)),
                    Some(cx) => outln(format_args!("✗ {}: {cx}", c.name)),
                }
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            if failed == 0 {
                outln("all checks passed");
            } else {
                outln(format_args!("{failed} check(s) failed"));
            }
        }
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAILURE)
    }
}

fn count(n: usize, normalized: bool) -> ExitCode {
    let record = match sequence_record(n, CountMethod::Both) {
        Ok(r) => r,
        Err(e @ genocchi::Error::Bound { .. }) => return usage_error(e),
        Err(e) => return failure(e),
    };
    if !normalized {
        outln(record.count());
        return ExitCode::SUCCESS;
    }
    match record.normalized {
        Some(h) => {
            outln(format_args!("{} {h}", record.count()));
            ExitCode::SUCCESS
        }
        None => failure(format_args!(
            "count {} is not divisible by 2^{}",
            record.count(),
            n - 1
        )),
    }
}
