//! Output views and their plain/JSON/CSV renderings.
//!
//! Data goes to standard output and is byte-deterministic for a fixed
//! configuration; anything timing-related belongs on standard error.

use clap::ValueEnum;
use serde::Serialize;

use gotzmann_core::{GapReport, Monomial, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

/// A classification verdict ready for rendering.
#[derive(Debug, Serialize)]
pub struct VerdictView {
    pub monomial: String,
    pub gotzmann: bool,
    pub method: String,
    pub gaps_maxgen: Option<String>,
    pub cogaps_maxgen: Option<String>,
    pub threshold: Option<u64>,
    #[serde(skip)]
    pub last_exponent: u64,
}

impl VerdictView {
    pub fn new(verdict: &Verdict, threshold: Option<u64>) -> Self {
        let u = &verdict.monomial;
        VerdictView {
            monomial: u.to_string(),
            gotzmann: verdict.is_gotzmann,
            method: verdict.method.as_str().to_string(),
            gaps_maxgen: verdict.witness_gaps.as_ref().map(|w| w.to_string()),
            cogaps_maxgen: verdict.witness_cogaps.as_ref().map(|w| w.to_string()),
            threshold,
            last_exponent: u.exponents()[u.nvars() - 1],
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Plain => self.render_plain(),
            OutputFormat::Json => serde_json::to_string(self).expect("serializable"),
            OutputFormat::Csv => {
                let mut out =
                    String::from("monomial,gotzmann,method,gaps_maxgen,cogaps_maxgen,threshold\n");
                out.push_str(&format!(
                    "{},{},{},{},{},{}",
                    self.monomial,
                    self.gotzmann,
                    self.method,
                    self.gaps_maxgen.as_deref().unwrap_or(""),
                    self.cogaps_maxgen.as_deref().unwrap_or(""),
                    self.threshold.map(|t| t.to_string()).unwrap_or_default(),
                ));
                out
            }
        }
    }

    fn render_plain(&self) -> String {
        let no_gaps = self.gaps_maxgen.as_deref() == Some("1");
        if self.gotzmann && no_gaps {
            return "Gotzmann (trivially; no gaps)".to_string();
        }
        let witnesses = format!(
            "gaps maxgen {}, cogaps maxgen {}",
            self.gaps_maxgen.as_deref().unwrap_or("n/a"),
            self.cogaps_maxgen.as_deref().unwrap_or("n/a"),
        );
        match (self.gotzmann, self.threshold) {
            (true, Some(threshold)) => format!(
                "Gotzmann; t={} meets threshold {}",
                self.last_exponent, threshold
            ),
            (true, None) => format!("Gotzmann; {witnesses}"),
            (false, Some(threshold)) => format!(
                "NOT Gotzmann; {witnesses}; threshold t>={} (t={})",
                threshold, self.last_exponent
            ),
            (false, None) => format!("NOT Gotzmann; {witnesses}"),
        }
    }
}

/// A gap/cogap report ready for rendering.
#[derive(Debug, Serialize)]
pub struct ReportView {
    pub monomial: String,
    pub nvars: usize,
    pub degree: u64,
    pub gap_count: u64,
    pub u_tilde: String,
    pub gaps: Vec<String>,
    pub cogaps: Vec<String>,
    pub gaps_maxgen: String,
    pub cogaps_maxgen: String,
    pub gaps_maxgen_closed_form: String,
    pub gotzmann: bool,
}

impl ReportView {
    pub fn new(u: &Monomial, report: &GapReport, closed_form_maxgen: &str) -> Self {
        ReportView {
            monomial: u.to_string(),
            nvars: u.nvars(),
            degree: u.degree(),
            gap_count: report.gap_count,
            u_tilde: report.u_tilde.to_string(),
            gaps: report
                .gaps
                .members()
                .iter()
                .map(|m| m.to_string())
                .collect(),
            cogaps: report
                .cogaps
                .members()
                .iter()
                .map(|m| m.to_string())
                .collect(),
            gaps_maxgen: report.maxgen_gaps.to_string(),
            cogaps_maxgen: report.maxgen_cogaps.to_string(),
            gaps_maxgen_closed_form: closed_form_maxgen.to_string(),
            gotzmann: report.maxgen_gaps == report.maxgen_cogaps,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => serde_json::to_string(self).expect("serializable"),
            OutputFormat::Csv => {
                let mut out = String::from(
                    "monomial,gap_count,u_tilde,gaps,cogaps,gaps_maxgen,cogaps_maxgen,gaps_maxgen_closed_form,gotzmann\n",
                );
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}",
                    self.monomial,
                    self.gap_count,
                    self.u_tilde,
                    self.gaps.join(" "),
                    self.cogaps.join(" "),
                    self.gaps_maxgen,
                    self.cogaps_maxgen,
                    self.gaps_maxgen_closed_form,
                    self.gotzmann,
                ));
                out
            }
            OutputFormat::Plain => {
                let braced = |items: &[String]| format!("{{{}}}", items.join(", "));
                let verdict = if self.gotzmann {
                    "Gotzmann (maxgen witnesses agree)".to_string()
                } else {
                    format!(
                        "NOT Gotzmann (maxgen mismatch: {} vs {})",
                        self.gaps_maxgen, self.cogaps_maxgen
                    )
                };
                format!(
                    "monomial: {} (n={}, degree {})\n\
                     g = {}\n\
                     u~ = {}\n\
                     gaps = {}\n\
                     cogaps = {}\n\
                     gaps maxgen = {}\n\
                     cogaps maxgen = {}\n\
                     gaps maxgen (closed form) = {}\n\
                     verdict: {}",
                    self.monomial,
                    self.nvars,
                    self.degree,
                    self.gap_count,
                    self.u_tilde,
                    braced(&self.gaps),
                    braced(&self.cogaps),
                    self.gaps_maxgen,
                    self.cogaps_maxgen,
                    self.gaps_maxgen_closed_form,
                    verdict,
                )
            }
        }
    }
}

/// One row of a threshold table. Which key columns are present depends on
/// the number of variables.
#[derive(Debug, Serialize)]
pub struct TableRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
    pub threshold: Option<u64>,
}

pub fn render_table(rows: &[TableRow], nvars: usize, format: OutputFormat) -> String {
    let cell = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    match format {
        OutputFormat::Json => serde_json::to_string(rows).expect("serializable"),
        OutputFormat::Csv => {
            let header = match nvars {
                2 => "threshold",
                3 => "b,threshold",
                _ => "b,c,threshold",
            };
            let mut out = String::from(header);
            for row in rows {
                out.push('\n');
                let mut fields: Vec<String> = Vec::new();
                if nvars >= 3 {
                    fields.push(cell(row.b));
                }
                if nvars >= 4 {
                    fields.push(cell(row.c));
                }
                fields.push(cell(row.threshold));
                out.push_str(&fields.join(","));
            }
            out
        }
        OutputFormat::Plain => {
            let mut lines: Vec<String> = Vec::new();
            for row in rows {
                let mut parts: Vec<String> = Vec::new();
                if let Some(b) = row.b {
                    parts.push(format!("b={b}"));
                }
                if let Some(c) = row.c {
                    parts.push(format!("c={c}"));
                }
                match row.threshold {
                    Some(t) => parts.push(format!("threshold={t}")),
                    None => parts.push("threshold=not-found-within-cap".to_string()),
                }
                lines.push(parts.join(" "));
            }
            lines.join("\n")
        }
    }
}
