//! Command-line surface. Single-object output is JSON, tables are CSV.
//! Exit codes: 0 pass, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::enumeration::{
    catalan, crossing_distribution, factorial, iterate_permutations, joint_distribution,
    max_crossing_count, max_nesting_closed_form, max_nesting_count, verify_symmetry,
};
use crate::involution::psi;
use crate::perm::{
    arc_diagram, degree_class_string, degree_classes, degree_sequence, parse_permutation,
    vertex_types, Permutation,
};
use crate::render::{render, RenderFormat};
use crate::stats::{crossing_number, nesting_number, ChainKind};

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        CommandResult {
            exit_code: 0,
            payload,
        }
    }

    fn failed(payload: String) -> Self {
        CommandResult {
            exit_code: 1,
            payload,
        }
    }

    fn usage(payload: String) -> Self {
        CommandResult {
            exit_code: 2,
            payload,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "crossnest",
    version,
    about = "Arc-diagram crossing/nesting statistics for permutations"
)]
struct Cli {
    /// Worker threads for exhaustive enumeration (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print statistics of one permutation as JSON
    Stats { perm: String },
    /// Apply the crossing-nesting involution
    Psi { perm: String },
    /// CSV table of crossing (or nesting) number counts for n = 1..max-n
    Table {
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV table of joint (crossing, nesting) counts for one n
    Joint {
        #[arg(long)]
        n: usize,
        /// Refine by degree-class string
        #[arg(long = "by-degree")]
        by_degree: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 on any failed check
    Verify {
        #[arg(long, value_enum)]
        check: CheckArg,
        #[arg(long)]
        n: usize,
    },
    /// Draw the arc diagram
    Render {
        perm: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum StatArg {
    Crossing,
    Nesting,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CheckArg {
    Symmetry,
    Maxnesting,
    Catalan,
    Involution,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return CommandResult {
                exit_code: code,
                payload: e.to_string(),
            };
        }
    };
    if let Some(jobs) = cli.jobs {
        // best effort; the global pool can only be configured once
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match cli.command {
        Command::Stats { perm } => with_perm(&perm, cmd_stats),
        Command::Psi { perm } => with_perm(&perm, cmd_psi),
        Command::Table { stat, max_n, out } => write_out(cmd_table(stat, max_n), out),
        Command::Joint { n, by_degree, out } => write_out(cmd_joint(n, by_degree), out),
        Command::Verify { check, n } => cmd_verify(check, n),
        Command::Render { perm, format, out } => {
            with_perm(&perm, |p| write_out(cmd_render(p, format), out.clone()))
        }
    }
}

fn with_perm(text: &str, f: impl FnOnce(Permutation) -> CommandResult) -> CommandResult {
    match parse_permutation(text) {
        Ok(p) => f(p),
        Err(e) => CommandResult::usage(format!("invalid permutation: {e}")),
    }
}

fn write_out(result: CommandResult, out: Option<PathBuf>) -> CommandResult {
    match (result.exit_code, out) {
        (0, Some(path)) => match std::fs::write(&path, &result.payload) {
            Ok(()) => CommandResult::ok(format!("wrote {}", path.display())),
            Err(e) => CommandResult::usage(format!("cannot write {}: {e}", path.display())),
        },
        _ => result,
    }
}

fn cmd_stats(p: Permutation) -> CommandResult {
    let d = arc_diagram(&p);
    let ds = degree_sequence(&p);
    let types: Vec<&str> = vertex_types(&p).into_iter().map(|t| t.name()).collect();
    let value = serde_json::json!({
        "n": p.n(),
        "perm": p.image(),
        "cr": crossing_number(&p),
        "ne": nesting_number(&p),
        "degree_upper": ds.upper,
        "degree_lower": ds.lower,
        "degree_class": degree_class_string(&degree_classes(&p)),
        "vertex_types": types,
        "upper_arcs": d.upper_pairs(),
        "lower_arcs": d.lower_pairs(),
    });
    CommandResult::ok(format!("{:#}\n", value))
}

fn cmd_psi(p: Permutation) -> CommandResult {
    match psi(&p) {
        Ok(tau) => CommandResult::ok(format!("{tau}\n")),
        Err(e) => CommandResult::failed(format!("involution failed: {e}")),
    }
}

fn cmd_table(stat: StatArg, max_n: usize) -> CommandResult {
    let kind = match stat {
        StatArg::Crossing => ChainKind::Crossing,
        StatArg::Nesting => ChainKind::Nesting,
    };
    let mut csv = String::from("n,k,count\n");
    for n in 1..=max_n {
        match crossing_distribution(n, kind) {
            Ok(table) => {
                for (k, count) in &table.entries {
                    let _ = writeln!(csv, "{n},{k},{count}");
                }
            }
            Err(e) => return CommandResult::usage(e.to_string()),
        }
    }
    CommandResult::ok(csv)
}

fn cmd_joint(n: usize, by_degree: bool) -> CommandResult {
    let table = match joint_distribution(n, by_degree) {
        Ok(t) => t,
        Err(e) => return CommandResult::usage(e.to_string()),
    };
    let mut csv = String::new();
    if by_degree {
        csv.push_str("n,cr,ne,degree_class,count\n");
        for ((cr, ne, cls), count) in &table.entries {
            let _ = writeln!(csv, "{n},{cr},{ne},{},{count}", cls.as_deref().unwrap_or(""));
        }
    } else {
        csv.push_str("n,cr,ne,count\n");
        for ((cr, ne, _), count) in &table.entries {
            let _ = writeln!(csv, "{n},{cr},{ne},{count}");
        }
    }
    CommandResult::ok(csv)
}

fn cmd_render(p: Permutation, format: FormatArg) -> CommandResult {
    let fmt = match format {
        FormatArg::Ascii => RenderFormat::Ascii,
        FormatArg::Svg => RenderFormat::Svg,
    };
    match render(&p, fmt) {
        Ok(text) => CommandResult::ok(text),
        Err(e) => CommandResult::usage(e.to_string()),
    }
}

fn cmd_verify(check: CheckArg, n: usize) -> CommandResult {
    let mut lines = String::new();
    let mut failures = 0usize;
    let mut record = |label: String, ok: bool, out: &mut String| {
        let _ = writeln!(out, "{label}: {}", if ok { "ok" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };
    match check {
        CheckArg::Symmetry => {
            for m in 1..=n {
                let refined = m <= 7;
                match verify_symmetry(m, refined) {
                    Ok(report) => {
                        let label = format!(
                            "n={m} joint distribution symmetric ({})",
                            if refined { "refined by degree class" } else { "unrefined" }
                        );
                        if !report.passed() {
                            for v in &report.violations {
                                let _ = writeln!(lines, "  {v}");
                            }
                        }
                        record(label, report.passed(), &mut lines);
                    }
                    Err(e) => return CommandResult::usage(e.to_string()),
                }
            }
        }
        CheckArg::Maxnesting => {
            for m in 2..=n {
                let (brute, closed, cross) = match (
                    max_nesting_count(m),
                    max_nesting_closed_form(m),
                    max_crossing_count(m),
                ) {
                    (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                    (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                        return CommandResult::usage(e.to_string())
                    }
                };
                record(
                    format!("n={m} max-nesting count {brute} = closed form {closed} = max-crossing count {cross}"),
                    brute == closed && brute == cross,
                    &mut lines,
                );
            }
        }
        CheckArg::Catalan => {
            for m in 1..=n {
                match crossing_distribution(m, ChainKind::Crossing) {
                    Ok(table) => {
                        let col = table.entries.get(&1).copied().unwrap_or(0);
                        let cat = catalan(m);
                        let sums = table.total() == factorial(m);
                        record(
                            format!("n={m} non-crossing count {col} = catalan {cat}, row sums to {m}!"),
                            col == cat && sums,
                            &mut lines,
                        );
                    }
                    Err(e) => return CommandResult::usage(e.to_string()),
                }
            }
        }
        CheckArg::Involution => {
            for m in 1..=n {
                let perms = match iterate_permutations(m) {
                    Ok(it) => it,
                    Err(e) => return CommandResult::usage(e.to_string()),
                };
                let mut ok = true;
                for perm in perms {
                    let Ok(tau) = psi(&perm) else {
                        ok = false;
                        break;
                    };
                    if psi(&tau).ok().as_ref() != Some(&perm)
                        || crossing_number(&tau) != nesting_number(&perm)
                        || nesting_number(&tau) != crossing_number(&perm)
                        || degree_classes(&tau) != degree_classes(&perm)
                    {
                        ok = false;
                        let _ = writeln!(lines, "  counterexample: {perm}");
                        break;
                    }
                }
                record(
                    format!("n={m} involution, swap, and degree preservation over all {m}!"),
                    ok,
                    &mut lines,
                );
            }
        }
    }
    if failures == 0 {
        CommandResult::ok(lines)
    } else {
        CommandResult::failed(lines)
    }
}
