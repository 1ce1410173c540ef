//! `gotzmann` CLI entry point.
//!
//! Exit status: 0 for success (for `classify`, a Gotzmann verdict), 1 for
//! a NOT-Gotzmann verdict or a failed verification sweep, 2 for usage and
//! runtime errors. Data goes to stdout, progress and timing to stderr.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gotzmann_cli::range::InclusiveRange;
use gotzmann_cli::render::{self, OutputFormat, ReportView, VerdictView};
use gotzmann_cli::sweep::{self, Mode, SweepConfig};
use gotzmann_cli::table::{self, TableConfig};
use gotzmann_core::{classify, gaps, lex, Error, Monomial, Verdict};

#[derive(Parser)]
#[command(
    name = "gotzmann",
    about = "Classify Gotzmann monomials and machine-verify the closed-form thresholds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Closed form for up to four variables, oracle beyond.
    Auto,
    /// Exact threshold formulas; errors for five or more variables.
    Closed,
    /// Enumeration-backed maxgen comparison; works in any dimension.
    Oracle,
}

#[derive(Args)]
struct Common {
    /// Number of variables of the ambient ring
    #[arg(short = 'n', long = "vars")]
    vars: usize,

    /// Cap on materialized set sizes
    #[arg(long, default_value_t = gotzmann_core::DEFAULT_ENUM_CAP)]
    cap: usize,

    /// Worker threads for grid sweeps
    #[arg(long, default_value_t = 4)]
    workers: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a monomial is Gotzmann
    Classify {
        #[command(flatten)]
        common: Common,
        /// Decision method
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// The monomial, e.g. "x2^2*x3" or "0,2,1,0"
        monomial: String,
    },
    /// Print gaps, cogaps, u~, and the maxgen witnesses of a monomial
    Report {
        #[command(flatten)]
        common: Common,
        /// The monomial, e.g. "x2^2*x3" or "0,2,1,0"
        monomial: String,
    },
    /// Sweep a grid, checking closed forms against the brute-force oracle
    Verify {
        #[command(flatten)]
        common: Common,
        /// What to verify
        #[arg(long, value_enum)]
        mode: Mode,
        /// Range of x2 exponents, inclusive
        #[arg(long, default_value = "0..3")]
        b: InclusiveRange,
        /// Range of x3 exponents, inclusive
        #[arg(long, default_value = "0..3")]
        c: InclusiveRange,
        /// Range of last-variable exponents; adapts to the threshold when
        /// omitted
        #[arg(long)]
        t: Option<InclusiveRange>,
        /// Degree range for verify-formulas
        #[arg(long, default_value = "0..7")]
        deg: InclusiveRange,
    },
    /// Tabulate Gotzmann thresholds
    Table {
        #[command(flatten)]
        common: Common,
        /// Range of x2 exponents, inclusive
        #[arg(long, default_value = "0..3")]
        b: InclusiveRange,
        /// Range of x3 exponents, inclusive
        #[arg(long, default_value = "0..3")]
        c: InclusiveRange,
        /// Search budget for the oracle route (five or more variables)
        #[arg(long, default_value_t = 4096)]
        pad_cap: u64,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Classify {
            common,
            method,
            monomial,
        } => cmd_classify(&common, method, &monomial),
        Command::Report { common, monomial } => cmd_report(&common, &monomial),
        Command::Verify {
            common,
            mode,
            b,
            c,
            t,
            deg,
        } => cmd_verify(&common, mode, b, c, t, deg),
        Command::Table {
            common,
            b,
            c,
            pad_cap,
        } => cmd_table(&common, b, c, pad_cap),
    }
}

fn parse_monomial(text: &str, nvars: usize) -> anyhow::Result<Monomial> {
    Monomial::parse(text, nvars).map_err(|e| anyhow::anyhow!("cannot parse {text:?}: {e}"))
}

/// Threshold on the last variable for rings where a closed form exists.
fn known_threshold(u: &Monomial) -> anyhow::Result<Option<u64>> {
    let exps = u.exponents();
    Ok(match u.nvars() {
        1 | 2 => Some(0),
        3 => Some(classify::threshold_n3(exps[1])?),
        4 => Some(classify::threshold_n4(exps[1], exps[2])?.threshold),
        _ => None,
    })
}

fn cmd_classify(common: &Common, method: MethodArg, text: &str) -> anyhow::Result<ExitCode> {
    let u = parse_monomial(text, common.vars)?;
    let use_closed = match method {
        MethodArg::Auto => u.nvars() <= 4,
        MethodArg::Closed => true,
        MethodArg::Oracle => false,
    };
    let verdict = if use_closed {
        let mut verdict = classify::is_gotzmann_closed_form(&u)?;
        fill_cogaps_witness(&mut verdict, common.cap);
        verdict
    } else {
        match classify::is_gotzmann_monomial_oracle(&u, common.cap) {
            Ok(v) => v,
            Err(e @ Error::EnumerationCapExceeded { .. }) if u.nvars() <= 4 => {
                anyhow::bail!("{e}; rerun with --method closed or raise --cap")
            }
            Err(e) => return Err(e.into()),
        }
    };
    let view = VerdictView::new(&verdict, known_threshold(&u)?);
    println!("{}", view.render(common.format));
    Ok(ExitCode::from(u8::from(!verdict.is_gotzmann)))
}

/// Closed-form rejections know `maxgen(gaps)` but not the cogaps side;
/// a predecessor walk of `g` steps supplies it when `g` fits the cap.
fn fill_cogaps_witness(verdict: &mut Verdict, cap: usize) {
    if verdict.witness_cogaps.is_some() {
        return;
    }
    let Some(gaps_witness) = &verdict.witness_gaps else {
        return;
    };
    let g = gaps_witness.degree();
    if let Ok((cogaps, _)) = lex::pred_iter(&verdict.monomial, g, cap) {
        if let Ok(witness) = gotzmann_core::borel::maxgen(&cogaps) {
            verdict.witness_cogaps = Some(witness);
        }
    }
}

fn cmd_report(common: &Common, text: &str) -> anyhow::Result<ExitCode> {
    let u = parse_monomial(text, common.vars)?;
    let report = match gaps::gap_report(&u, common.cap) {
        Ok(r) => r,
        Err(e @ Error::EnumerationCapExceeded { .. }) => {
            anyhow::bail!("{e}; raise --cap, or use classify --method closed for the verdict only")
        }
        Err(e) => return Err(e.into()),
    };
    let closed_form = gaps::maxgen_gaps_formula(&u)?;
    let view = ReportView::new(&u, &report, &closed_form.to_string());
    println!("{}", view.render(common.format));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    common: &Common,
    mode: Mode,
    b: InclusiveRange,
    c: InclusiveRange,
    t: Option<InclusiveRange>,
    deg: InclusiveRange,
) -> anyhow::Result<ExitCode> {
    let config = SweepConfig {
        mode,
        nvars: common.vars,
        b,
        c,
        t,
        deg,
        cap: common.cap,
        workers: common.workers,
        format: common.format,
    };
    eprintln!(
        "verify: mode={mode:?} n={} b={b} c={c} workers={}",
        common.vars, common.workers
    );
    let result = sweep::run(&config)?;
    eprintln!(
        "verify: {} cells in {:?} ({} mismatches, {} skips)",
        result.cells_checked,
        result.elapsed,
        result.mismatches.len(),
        result.skips.len()
    );
    println!("{}", sweep::render(&result, common.format));
    Ok(ExitCode::from(u8::from(!result.mismatches.is_empty())))
}

fn cmd_table(
    common: &Common,
    b: InclusiveRange,
    c: InclusiveRange,
    pad_cap: u64,
) -> anyhow::Result<ExitCode> {
    let config = TableConfig {
        nvars: common.vars,
        b,
        c,
        cap: common.cap,
        workers: common.workers,
        pad_cap,
    };
    let rows = table::run(&config)?;
    println!(
        "{}",
        render::render_table(&rows, common.vars, common.format)
    );
    Ok(ExitCode::SUCCESS)
}
