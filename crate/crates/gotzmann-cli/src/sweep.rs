//! Verification sweeps: grids of independent cells checked in parallel,
//! with results merged back in deterministic cell order.

use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use rayon::prelude::*;
use serde::Serialize;

use gotzmann_core::{borel, classify, gaps, lex, Error, Monomial, VarIndex};

use crate::range::InclusiveRange;
use crate::render::OutputFormat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Oracle verdicts against the closed-form thresholds (n = 2, 3, 4).
    VerifyThreshold,
    /// Structural gap decomposition, gap counts, maxgen formulas, Borel
    /// sizes, and mu closed forms against enumeration.
    VerifyFormulas,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub mode: Mode,
    pub nvars: usize,
    pub b: InclusiveRange,
    pub c: InclusiveRange,
    pub t: Option<InclusiveRange>,
    pub deg: InclusiveRange,
    pub cap: usize,
    pub workers: usize,
    pub format: OutputFormat,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub monomial: String,
    pub expected: String,
    pub actual: String,
    pub criterion: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Skip {
    pub cell: String,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct SweepResult {
    pub mode: String,
    pub nvars: usize,
    pub cells_checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub skips: Vec<Skip>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// What checking one cell produced.
#[derive(Default)]
struct CellOutcome {
    mismatches: Vec<Mismatch>,
    skips: Vec<Skip>,
}

impl CellOutcome {
    fn mismatch(
        monomial: String,
        expected: impl ToString,
        actual: impl ToString,
        criterion: &str,
    ) -> Self {
        CellOutcome {
            mismatches: vec![Mismatch {
                monomial,
                expected: expected.to_string(),
                actual: actual.to_string(),
                criterion: criterion.to_string(),
            }],
            skips: Vec::new(),
        }
    }

    fn skip(cell: String, reason: impl ToString) -> Self {
        CellOutcome {
            mismatches: Vec::new(),
            skips: vec![Skip {
                cell,
                reason: reason.to_string(),
            }],
        }
    }

    fn merge(&mut self, other: CellOutcome) {
        self.mismatches.extend(other.mismatches);
        self.skips.extend(other.skips);
    }
}

pub fn run(config: &SweepConfig) -> anyhow::Result<SweepResult> {
    if config.workers == 0 {
        bail!("--workers must be at least 1");
    }
    if config.cap == 0 {
        bail!("--cap must be at least 1");
    }
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .context("building the worker pool")?;
    let (cells_checked, outcomes) = match config.mode {
        Mode::VerifyThreshold => threshold_sweep(config, &pool)?,
        Mode::VerifyFormulas => formulas_sweep(config, &pool)?,
    };
    let mut merged = CellOutcome::default();
    for outcome in outcomes {
        merged.merge(outcome);
    }
    Ok(SweepResult {
        mode: match config.mode {
            Mode::VerifyThreshold => "verify-threshold".to_string(),
            Mode::VerifyFormulas => "verify-formulas".to_string(),
        },
        nvars: config.nvars,
        cells_checked,
        mismatches: merged.mismatches,
        skips: merged.skips,
        elapsed: started.elapsed(),
    })
}

/// Oracle verdict vs closed-form threshold over the (a, b, c, t) grid.
fn threshold_sweep(
    config: &SweepConfig,
    pool: &rayon::ThreadPool,
) -> anyhow::Result<(u64, Vec<CellOutcome>)> {
    let n = config.nvars;
    // Cells in lex order on (a, b, c, t).
    let mut cells: Vec<(u64, u64, u64, u64)> = Vec::new();
    match n {
        2 => {
            for b in config.b.iter() {
                cells.push((0, b, 0, 0));
            }
        }
        3 => {
            for a in 0..=1u64 {
                for b in config.b.iter() {
                    let threshold = classify::threshold_n3(b)?;
                    let t_range = config.t.unwrap_or(InclusiveRange {
                        lo: 0,
                        hi: threshold + 3,
                    });
                    for t in t_range.iter() {
                        cells.push((a, b, 0, t));
                    }
                }
            }
        }
        4 => {
            for b in config.b.iter() {
                for c in config.c.iter() {
                    let threshold = classify::threshold_n4(b, c)?.threshold;
                    let t_range = config.t.unwrap_or(InclusiveRange {
                        lo: 0,
                        hi: threshold + 2,
                    });
                    for t in t_range.iter() {
                        cells.push((0, b, c, t));
                    }
                }
            }
        }
        _ => bail!("verify-threshold supports -n 2, 3, or 4 (got {n})"),
    }

    let cap = config.cap;
    let outcomes: Vec<CellOutcome> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(a, b, c, t)| threshold_cell(n, a, b, c, t, cap))
            .collect()
    });
    Ok((cells.len() as u64, outcomes))
}

fn threshold_cell(n: usize, a: u64, b: u64, c: u64, t: u64, cap: usize) -> CellOutcome {
    let exps = match n {
        2 => vec![a, b],
        3 => vec![a, b, t],
        _ => vec![a, b, c, t],
    };
    let u = match Monomial::new(exps) {
        Ok(u) => u,
        Err(e) => return CellOutcome::skip(format!("a={a} b={b} c={c} t={t}"), e),
    };
    let expected = match n {
        2 => true,
        3 => t >= classify::threshold_n3(b).expect("threshold_n3"),
        _ => {
            t >= classify::threshold_n4(b, c)
                .expect("threshold_n4")
                .threshold
        }
    };
    match classify::is_gotzmann_monomial_oracle(&u, cap) {
        Ok(verdict) if verdict.is_gotzmann == expected => CellOutcome::default(),
        Ok(verdict) => CellOutcome::mismatch(
            u.to_string(),
            format!("gotzmann={expected}"),
            format!("gotzmann={}", verdict.is_gotzmann),
            &format!("threshold-n{n}"),
        ),
        Err(Error::EnumerationCapExceeded { cap, .. }) => {
            CellOutcome::skip(u.to_string(), format!("enumeration cap {cap} exceeded"))
        }
        Err(e) => CellOutcome::mismatch(
            u.to_string(),
            "a verdict",
            format!("error: {e}"),
            &format!("threshold-n{n}"),
        ),
    }
}

/// Enumeration-vs-formula identities over every monomial of the degree
/// range, plus the mu closed forms.
fn formulas_sweep(
    config: &SweepConfig,
    pool: &rayon::ThreadPool,
) -> anyhow::Result<(u64, Vec<CellOutcome>)> {
    let n = config.nvars;
    if n == 0 {
        bail!("verify-formulas needs -n >= 1");
    }

    enum Cell {
        PerMonomial(u64, u64),       // (degree, rank)
        SndMaxgen(u64),              // degree
        SlndMaxgen(usize, u64),      // (l, degree)
        MuPowerDrop(usize, u64, u8), // (m, k, prefix kind)
    }

    let mut cells: Vec<Cell> = Vec::new();
    for d in config.deg.iter() {
        let total = lex::count(n, d)?;
        for r in 0..total {
            cells.push(Cell::PerMonomial(d, r));
        }
        if d >= 1 {
            cells.push(Cell::SndMaxgen(d));
            for l in 1..=n {
                cells.push(Cell::SlndMaxgen(l, d));
            }
        }
    }
    let k_hi = config.deg.hi.clamp(1, 6);
    if n >= 2 {
        for m in 2..=n {
            for k in 1..=k_hi {
                for kind in 0..3u8 {
                    cells.push(Cell::MuPowerDrop(m, k, kind));
                }
            }
        }
    }

    let cap = config.cap;
    let outcomes: Vec<CellOutcome> = pool.install(|| {
        cells
            .par_iter()
            .map(|cell| match *cell {
                Cell::PerMonomial(d, r) => formulas_cell(n, d, r, cap),
                Cell::SndMaxgen(d) => snd_cell(n, d, cap),
                Cell::SlndMaxgen(l, d) => slnd_cell(l, n, d, cap),
                Cell::MuPowerDrop(m, k, kind) => mu_cell(n, m, k, kind, cap),
            })
            .collect()
    });
    Ok((cells.len() as u64, outcomes))
}

fn formulas_cell(n: usize, d: u64, r: u64, cap: usize) -> CellOutcome {
    let u = lex::unrank(n, d, r).expect("rank in range");
    let name = u.to_string();
    let enumerated = match gaps::gaps_enumerated(&u, cap) {
        Ok(set) => set,
        Err(Error::EnumerationCapExceeded { cap, .. }) => {
            return CellOutcome::skip(name, format!("enumeration cap {cap} exceeded"))
        }
        Err(e) => {
            return CellOutcome::mismatch(
                name,
                "a gap set",
                format!("error: {e}"),
                "gaps-enumerated",
            )
        }
    };
    let mut outcome = CellOutcome::default();
    match gaps::gaps_structural(&u, cap) {
        Ok(structural) if structural == enumerated => {}
        Ok(structural) => outcome.merge(CellOutcome::mismatch(
            name.clone(),
            format!("{enumerated:?}"),
            format!("{structural:?}"),
            "gaps-structural",
        )),
        Err(e) => outcome.merge(CellOutcome::skip(name.clone(), e)),
    }
    match gaps::gap_count(&u) {
        Ok(count) if count == enumerated.len() as u64 => {}
        Ok(count) => outcome.merge(CellOutcome::mismatch(
            name.clone(),
            enumerated.len(),
            count,
            "gap-count",
        )),
        Err(e) => outcome.merge(CellOutcome::skip(name.clone(), e)),
    }
    let maxgen_enumerated = borel::maxgen(&enumerated).expect("gap sets have no unit");
    match gaps::maxgen_gaps_formula(&u) {
        Ok(formula) if formula == maxgen_enumerated => {}
        Ok(formula) => outcome.merge(CellOutcome::mismatch(
            name.clone(),
            maxgen_enumerated.to_string(),
            formula.to_string(),
            "maxgen-gaps-formula",
        )),
        Err(e) => outcome.merge(CellOutcome::skip(name.clone(), e)),
    }
    match (borel::borel_size(&u), borel::borel_closure(&u, cap)) {
        (Ok(size), Ok(closure)) if size == closure.len() as u64 => {}
        (Ok(size), Ok(closure)) => outcome.merge(CellOutcome::mismatch(
            name,
            closure.len(),
            size,
            "borel-size",
        )),
        (Err(e), _) | (_, Err(e)) => outcome.merge(CellOutcome::skip(name, e)),
    }
    outcome
}

fn snd_cell(n: usize, d: u64, cap: usize) -> CellOutcome {
    let name = format!("maxgen(S_{{{n},{d}}})");
    let full = match materialize_window(1, n, d, cap) {
        Ok(set) => set,
        Err(reason) => return CellOutcome::skip(name, reason),
    };
    let enumerated = borel::maxgen(&full).expect("degree >= 1");
    match borel::maxgen_snd(n, d) {
        Ok(formula) if formula == enumerated => CellOutcome::default(),
        Ok(formula) => CellOutcome::mismatch(
            name,
            enumerated.to_string(),
            formula.to_string(),
            "maxgen-snd",
        ),
        Err(e) => CellOutcome::skip(name, e),
    }
}

fn slnd_cell(l: usize, n: usize, d: u64, cap: usize) -> CellOutcome {
    let name = format!("maxgen(S_{{{l},{n},{d}}})");
    let windowed = match materialize_window(l, n, d, cap) {
        Ok(set) => set,
        Err(reason) => return CellOutcome::skip(name, reason),
    };
    let enumerated = borel::maxgen(&windowed).expect("degree >= 1");
    match borel::maxgen_slnd(l, n, d) {
        Ok(formula) if formula == enumerated => CellOutcome::default(),
        Ok(formula) => CellOutcome::mismatch(
            name,
            enumerated.to_string(),
            formula.to_string(),
            "maxgen-slnd",
        ),
        Err(e) => CellOutcome::skip(name, e),
    }
}

/// All of `S_{l..n, d}`: `x_l^d` is its lex-largest member and `x_n^d` its
/// smallest, and every monomial in between is supported on `x_l..x_n`, so
/// the window is exactly the closed lexinterval between the two powers.
fn materialize_window(
    l: usize,
    n: usize,
    d: u64,
    cap: usize,
) -> Result<gotzmann_core::MonomialSet, String> {
    let top = Monomial::power(n, l, d).map_err(|e| e.to_string())?;
    let bottom = Monomial::power(n, n, d).map_err(|e| e.to_string())?;
    let interval =
        gotzmann_core::LexInterval::new(top.clone(), bottom).map_err(|e| e.to_string())?;
    let mut members = interval
        .materialize(cap)
        .map_err(|e| e.to_string())?
        .members()
        .to_vec();
    members.push(top);
    gotzmann_core::MonomialSet::from_monomials(n, d, members).map_err(|e| e.to_string())
}

fn mu_cell(n: usize, m: usize, k: u64, kind: u8, cap: usize) -> CellOutcome {
    let v = match kind {
        0 => Monomial::unit(n),
        1 => Monomial::variable(n, 1),
        _ => Monomial::power(n, m - 1, 2),
    }
    .expect("prefix construction");
    let name = format!("mu(v*x{m}^{k}, v*x{}^{k}) with v={v}", m - 1);
    let upper = v
        .mul(&Monomial::power(n, m - 1, k).expect("power"))
        .expect("mul");
    let lower = v
        .mul(&Monomial::power(n, m, k).expect("power"))
        .expect("mul");
    let walked = match gaps::mu_enumerated(&lower, &upper, cap) {
        Ok(w) => w,
        Err(Error::EnumerationCapExceeded { cap, .. }) => {
            return CellOutcome::skip(name, format!("enumeration cap {cap} exceeded"))
        }
        Err(e) => {
            return CellOutcome::mismatch(
                name,
                "a mu value",
                format!("error: {e}"),
                "mu-power-drop",
            )
        }
    };
    let var = VarIndex::new(m, n).expect("2 <= m <= n");
    match gaps::mu_power_drop(&v, var, k, n) {
        Ok(formula) if formula == walked => CellOutcome::default(),
        Ok(formula) => CellOutcome::mismatch(
            name,
            walked.to_string(),
            formula.to_string(),
            "mu-power-drop",
        ),
        Err(e) => CellOutcome::skip(name, e),
    }
}

pub fn render(result: &SweepResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(result).expect("serializable"),
        OutputFormat::Csv => {
            let mut out = String::from("monomial,expected,actual,criterion");
            for m in &result.mismatches {
                out.push('\n');
                out.push_str(&format!(
                    "{},{},{},{}",
                    m.monomial, m.expected, m.actual, m.criterion
                ));
            }
            out
        }
        OutputFormat::Plain => {
            let mut lines: Vec<String> = Vec::new();
            for m in &result.mismatches {
                lines.push(format!(
                    "mismatch at {} [{}]: expected {}, got {}",
                    m.monomial, m.criterion, m.expected, m.actual
                ));
            }
            for s in &result.skips {
                lines.push(format!("skipped {}: {}", s.cell, s.reason));
            }
            lines.push(format!("cells checked: {}", result.cells_checked));
            lines.push(format!("mismatches: {}", result.mismatches.len()));
            lines.push(format!("skips: {}", result.skips.len()));
            lines.join("\n")
        }
    }
}
