//! `necklaces`: exact counting, enumeration and verification of binary
//! necklaces under the Pauli exclusion split.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or range error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pauli_necklaces::counting::{self, CountTable, TableKind};
use pauli_necklaces::exactmath::catalan;
use pauli_necklaces::golden;
use pauli_necklaces::indices;
use pauli_necklaces::lfsr;
use pauli_necklaces::necklace::BinaryWord;
use pauli_necklaces::sieve::{self, Method};
use pauli_necklaces::BigInt;

use pauli_necklaces_cli::formats;
use pauli_necklaces_cli::verify::{run_sweep, CaseOutcome};

#[derive(Parser)]
#[command(
    name = "necklaces",
    version,
    about = "Exact counts, enumeration and verification of Pauli-allowed and Pauli-forbidden binary necklaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        /// Total bead number (totals); mutually exclusive with --b/--f
        #[arg(long)]
        n: Option<usize>,
        /// Bosonic bead count (per-cell counts)
        #[arg(long)]
        b: Option<usize>,
        /// Fermionic bead count (per-cell counts)
        #[arg(long)]
        f: Option<usize>,
    },
    /// Emit a table of per-cell counts
    Table {
        #[arg(value_enum)]
        kind: TableArg,
        /// Emit all cells with B + F <= MAX_SUM
        #[arg(long)]
        max_sum: Option<usize>,
        /// Emit the rectangle B <= MAX_B, F <= MAX_F (with --max-f)
        #[arg(long)]
        max_b: Option<usize>,
        #[arg(long)]
        max_f: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Paper)]
        format: FormatArg,
    },
    /// Enumerate all classes of length n by brute force and tally them
    Sieve {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Also list one canonical word per class with its flags
        #[arg(long)]
        list: bool,
    },
    /// Run the feedback shift register of cell length n
    Lfsr {
        #[arg(long)]
        n: usize,
        /// An (n-1)-bit seed: print the generated sequence to 3 full periods
        #[arg(long)]
        seed: Option<String>,
        /// Without a seed: also list the distinct canonical cycles
        #[arg(long)]
        list: bool,
    },
    /// Run a verification sweep and exit 0 only if every case passes
    Verify {
        #[arg(long, value_enum)]
        check: CheckArg,
        /// Sweep bound; each check has a documented default
        #[arg(long)]
        n_max: Option<usize>,
        /// Worker threads (default: NECKLACES_THREADS or machine parallelism)
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    /// All necklaces with n beads
    Total,
    /// Necklaces with B bosonic, F fermionic beads
    Polya,
    /// Pauli-allowed: by n (total) or by (B, F)
    Allowed,
    /// Pauli-forbidden: by n (total) or by (B, F)
    Forbidden,
    /// Necklaces with odd F (= shift register cycles)
    Fermionic,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Allowed,
    Forbidden,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    /// Aligned text, B down and F across
    Paper,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Scan when n allows it, fixed-density otherwise
    Auto,
    Scan,
    FixedDensity,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    /// W(n; m) >= 0 and W(n; n) = 0 (default n-max 1000)
    Witten,
    /// W~(n; m) >= 0 (default n-max 1000)
    StrongWitten,
    /// Alternating diagonal sum = mod-6 indicator (default n-max 2000)
    Strsc,
    /// Generating polynomial reproduces the allowed counts (default n-max 300)
    Zagier,
    /// Row sum of forbidden cells = even-divisor total = telescoped
    /// fermionic counts (default n-max 2000)
    Appendix,
    /// Odd-F and even-F allowed halves both equal the fermionic count
    /// (default n-max 2000)
    Balance,
    /// Sieve tallies equal the closed forms cell by cell (default n-max 26)
    Oracle,
    /// Computed values reproduce the bundled golden tables exactly
    Tables,
    /// Staircase cells carry Catalan numbers (default n-max 40)
    Catalan,
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (e.g. `necklaces table | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn usage<T>(message: impl Into<String>) -> Result<T, String> {
    Err(message.into())
}

fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Count { kind, n, b, f } => {
            let value = count_value(kind, n, b, f)?;
            println!("{value}");
            Ok(true)
        }
        Command::Table {
            kind,
            max_sum,
            max_b,
            max_f,
            format,
        } => {
            let kind = match kind {
                TableArg::Allowed => TableKind::Allowed,
                TableArg::Forbidden => TableKind::Forbidden,
            };
            let table = match (max_sum, max_b, max_f) {
                (Some(s), None, None) => CountTable::triangle(kind, s),
                (None, Some(b), Some(f)) => CountTable::rectangle(kind, b, f),
                _ => return usage("pass either --max-sum, or both --max-b and --max-f"),
            };
            match format {
                FormatArg::Paper => print!("{}", formats::render_text(&table)),
                FormatArg::Csv => print!("{}", formats::to_csv(&table)),
                FormatArg::Json => print!("{}", formats::to_json(&table)),
            }
            Ok(true)
        }
        Command::Sieve { n, method, list } => {
            let method = match method {
                MethodArg::Scan => Method::Scan,
                MethodArg::FixedDensity => Method::FixedDensity,
                MethodArg::Auto => {
                    if n <= sieve::MAX_SCAN_LEN {
                        Method::Scan
                    } else {
                        Method::FixedDensity
                    }
                }
            };
            if list {
                for class in sieve::enumerate_necklaces(n, method).map_err(|e| e.to_string())? {
                    println!(
                        "{} B={} F={} period={} symmetry={} {} {}",
                        class.canonical,
                        class.bosonic_beads(),
                        class.fermionic_beads(),
                        class.minimal_period,
                        class.symmetry_order,
                        class.statistics,
                        class.status,
                    );
                }
            }
            let report = sieve::sieve_counts(n, method).map_err(|e| e.to_string())?;
            println!("n = {n} method = {method}");
            println!(
                "{:>5} {:>5} {:>14} {:>14} {:>14}",
                "B", "F", "total", "allowed", "forbidden"
            );
            for cell in report.cells() {
                println!(
                    "{:>5} {:>5} {:>14} {:>14} {:>14}",
                    cell.b,
                    cell.f,
                    cell.total.to_string(),
                    cell.allowed.to_string(),
                    cell.forbidden.to_string()
                );
            }
            println!(
                "classes: {} (allowed {}, forbidden {})",
                report.grand_total(),
                report.allowed_total(),
                report.forbidden_total()
            );
            Ok(true)
        }
        Command::Lfsr { n, seed, list } => {
            if n < 2 {
                return usage("the register needs a cell length of at least 2");
            }
            match seed {
                Some(text) => {
                    let seed: BinaryWord = text.parse().map_err(|e| format!("{e}"))?;
                    if seed.len() != n - 1 {
                        return usage(format!(
                            "seed must have n - 1 = {} bits, got {}",
                            n - 1,
                            seed.len()
                        ));
                    }
                    let bits = lfsr::lfsr_sequence(&seed, 3 * n).map_err(|e| e.to_string())?;
                    let text: String = bits.iter().map(|b| char::from(b'0' + b)).collect();
                    println!("{text}");
                }
                None => {
                    let cycles = lfsr::lfsr_cycles(n).map_err(|e| e.to_string())?;
                    if list {
                        for cycle in &cycles {
                            println!("{cycle}");
                        }
                    }
                    println!("cycles: {}", cycles.len());
                }
            }
            Ok(true)
        }
        Command::Verify {
            check,
            n_max,
            threads,
        } => run_verify(check, n_max, threads),
    }
}

fn count_value(
    kind: CountKind,
    n: Option<usize>,
    b: Option<usize>,
    f: Option<usize>,
) -> Result<BigInt, String> {
    let only_n = |n: Option<usize>| -> Result<usize, String> {
        match (n, b, f) {
            (Some(n), None, None) => Ok(n),
            _ => usage("this count takes --n (and no --b/--f)"),
        }
    };
    let only_bf = |b: Option<usize>, f: Option<usize>| -> Result<(usize, usize), String> {
        match (n, b, f) {
            (None, Some(b), Some(f)) => Ok((b, f)),
            _ => usage("this count takes --b and --f (and no --n)"),
        }
    };
    match kind {
        CountKind::Total => Ok(counting::total_necklaces(only_n(n)?)),
        CountKind::Fermionic => counting::fermionic_count(only_n(n)?).map_err(|e| e.to_string()),
        CountKind::Polya => {
            let (b, f) = only_bf(b, f)?;
            Ok(counting::polya(b, f))
        }
        CountKind::Allowed => match (n, b, f) {
            (Some(n), None, None) => counting::allowed_total(n).map_err(|e| e.to_string()),
            (None, Some(b), Some(f)) => Ok(counting::allowed(b, f)),
            _ => usage("allowed takes either --n (total) or --b and --f (one cell)"),
        },
        CountKind::Forbidden => match (n, b, f) {
            (Some(n), None, None) => counting::forbidden_total(n).map_err(|e| e.to_string()),
            (None, Some(b), Some(f)) => counting::forbidden(b, f).map_err(|e| e.to_string()),
            _ => usage("forbidden takes either --n (total) or --b and --f (one cell)"),
        },
    }
}

fn resolve_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("NECKLACES_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    })
    .max(1)
}

fn run_verify(
    check: CheckArg,
    n_max: Option<usize>,
    threads: Option<usize>,
) -> Result<bool, String> {
    let threads = resolve_threads(threads);
    let default_max: usize = match check {
        CheckArg::Witten | CheckArg::StrongWitten => 1000,
        CheckArg::Strsc | CheckArg::Appendix | CheckArg::Balance => 2000,
        CheckArg::Zagier => 300,
        CheckArg::Oracle => 26,
        CheckArg::Catalan => 40,
        CheckArg::Tables => 0, // unused
    };
    let n_max = n_max.unwrap_or(default_max);
    if !matches!(check, CheckArg::Tables) && n_max == 0 {
        return usage("--n-max must be at least 1");
    }

    let report = match check {
        CheckArg::Witten => run_sweep(
            "witten",
            format!("n = 1..={n_max}"),
            (1..=n_max).collect(),
            threads,
            |n| {
                let profile = indices::witten_profile(n).expect("n >= 1");
                let min = profile.iter().min().expect("nonempty profile").clone();
                let last = profile.last().expect("nonempty profile").clone();
                CaseOutcome {
                    label: format!("n={n}"),
                    pass: last == BigInt::from(0u8) && min >= BigInt::from(0u8),
                    detail: format!("W(n;n)={last} min={min}"),
                }
            },
        ),
        CheckArg::StrongWitten => run_sweep(
            "strong-witten",
            format!("n = 1..={n_max}"),
            (1..=n_max).collect(),
            threads,
            |n| {
                let profile = indices::strong_witten_profile(n).expect("n >= 1");
                let min = profile.iter().min().expect("nonempty profile").clone();
                CaseOutcome {
                    label: format!("n={n}"),
                    pass: min >= BigInt::from(0u8),
                    detail: format!("min={min}"),
                }
            },
        ),
        CheckArg::Strsc => run_sweep(
            "strsc",
            format!("n = 1..={n_max}"),
            (1..=n_max).collect(),
            threads,
            |n| {
                let c = indices::strsc_check(n).expect("n >= 1");
                CaseOutcome {
                    label: format!("n={n}"),
                    pass: c.holds,
                    detail: format!("lhs={} rhs={}", c.lhs, c.rhs),
                }
            },
        ),
        CheckArg::Zagier => run_sweep(
            "zagier",
            format!("n = 1..={n_max}"),
            (1..=n_max).collect(),
            threads,
            |n| {
                let c = indices::zagier_check(n).expect("n >= 1");
                CaseOutcome {
                    label: format!("n={n}"),
                    pass: c.holds(),
                    detail: format!(
                        "coefficients={} substitution={}",
                        c.coefficients_match, c.substitution_matches
                    ),
                }
            },
        ),
        CheckArg::Appendix => run_sweep(
            "appendix",
            format!("n = 1..={n_max}"),
            (1..=n_max).collect(),
            threads,
            |n| {
                let c = counting::consistency_check(n).expect("n >= 1");
                CaseOutcome {
                    label: format!("n={n}"),
                    pass: c.holds,
                    detail: format!(
                        "cell-sum={} closed-form={} telescoped={}",
                        c.cell_sum, c.closed_form, c.telescoped
                    ),
                }
            },
        ),
        CheckArg::Balance => run_sweep(
            "balance",
            format!("n = 1..={n_max}"),
            (1..=n_max).collect(),
            threads,
            |n| {
                let row = counting::allowed_row(n);
                let even: BigInt = row.iter().step_by(2).sum();
                let odd: BigInt = row.iter().skip(1).step_by(2).sum();
                let fermionic = counting::fermionic_count(n).expect("n >= 1");
                CaseOutcome {
                    label: format!("n={n}"),
                    pass: even == fermionic && odd == fermionic,
                    detail: format!("even-F={even} odd-F={odd} fermionic={fermionic}"),
                }
            },
        ),
        CheckArg::Oracle => {
            if n_max > sieve::MAX_FIXED_DENSITY_LEN {
                return usage(format!(
                    "oracle sweeps support n-max <= {}",
                    sieve::MAX_FIXED_DENSITY_LEN
                ));
            }
            run_sweep(
                "oracle",
                format!("n = 1..={n_max}"),
                (1..=n_max).collect(),
                threads,
                oracle_case,
            )
        }
        CheckArg::Catalan => run_sweep(
            "catalan",
            format!("F = 0..={n_max}"),
            (0..=n_max).collect(),
            threads,
            |f| {
                let (upper, lower) = indices::staircase(f);
                let upper_ok = upper == catalan(f);
                let lower_ok = f == 0 || lower.as_ref() == Some(&catalan(f - 1));
                CaseOutcome {
                    label: format!("F={f}"),
                    pass: upper_ok && lower_ok,
                    detail: format!("allowed(F+1,F)={upper} lower={lower:?}"),
                }
            },
        ),
        CheckArg::Tables => run_sweep(
            "tables",
            "bundled golden tables".to_string(),
            vec![0, 1],
            threads,
            |which| {
                let kind = if which == 0 {
                    TableKind::Allowed
                } else {
                    TableKind::Forbidden
                };
                let diffs = golden::diff(kind);
                let unexplained: Vec<_> = diffs.iter().filter(|m| !m.allowlisted).collect();
                let detail = if diffs.is_empty() {
                    "all cells match".to_string()
                } else {
                    diffs
                        .iter()
                        .map(|m| {
                            format!(
                                "({},{}) printed={} computed={}{}",
                                m.b,
                                m.f,
                                m.printed,
                                m.computed,
                                if m.allowlisted { " [allowlisted]" } else { "" }
                            )
                        })
                        .collect::<Vec<_>>()
                        .join("; ")
                };
                CaseOutcome {
                    label: format!("golden {kind}"),
                    pass: unexplained.is_empty(),
                    detail,
                }
            },
        ),
    };
    Ok(report.print())
}

fn oracle_case(n: usize) -> CaseOutcome {
    let polya_row = counting::polya_row(n);
    let allowed_row = counting::allowed_row(n);
    let forbidden_row = counting::forbidden_row(n);
    let mut methods = Vec::new();
    if n <= sieve::MAX_SCAN_LEN {
        methods.push(Method::Scan);
    }
    if n <= sieve::MAX_FIXED_DENSITY_LEN {
        methods.push(Method::FixedDensity);
    }
    let mut pass = true;
    let mut notes: Vec<String> = Vec::new();
    let mut reports = Vec::new();
    for method in methods {
        let report = sieve::sieve_counts(n, method).expect("n within method range");
        for cell in report.cells() {
            let f = cell.f;
            if cell.total != polya_row[f]
                || cell.allowed != allowed_row[f]
                || cell.forbidden != forbidden_row[f]
            {
                pass = false;
                notes.push(format!(
                    "{method} ({},{f}): sieve {}/{}/{} vs closed {}/{}/{}",
                    cell.b,
                    cell.total,
                    cell.allowed,
                    cell.forbidden,
                    polya_row[f],
                    allowed_row[f],
                    forbidden_row[f]
                ));
            }
        }
        if report.grand_total() != counting::total_necklaces(n) {
            pass = false;
            notes.push(format!("{method}: class count != MacMahon total"));
        }
        reports.push(report);
    }
    if reports.len() == 2 && reports[0].cells() != reports[1].cells() {
        pass = false;
        notes.push("scan and fixed-density reports differ".to_string());
    }
    let classes = reports
        .first()
        .map(|r| r.grand_total().to_string())
        .unwrap_or_default();
    CaseOutcome {
        label: format!("n={n}"),
        pass,
        detail: if notes.is_empty() {
            format!("classes={classes} methods={}", reports.len())
        } else {
            notes.join("; ")
        },
    }
}
