//! Threshold tables: closed forms for up to four variables, oracle-backed
//! padding search beyond that.

use anyhow::bail;
use rayon::prelude::*;

use gotzmann_core::{classify, Error, Monomial};

use crate::range::InclusiveRange;
use crate::render::TableRow;

pub struct TableConfig {
    pub nvars: usize,
    pub b: InclusiveRange,
    pub c: InclusiveRange,
    pub cap: usize,
    pub workers: usize,
    /// Search budget for the oracle route (nvars >= 5).
    pub pad_cap: u64,
}

pub fn run(config: &TableConfig) -> anyhow::Result<Vec<TableRow>> {
    if config.workers == 0 {
        bail!("--workers must be at least 1");
    }
    match config.nvars {
        0 | 1 => bail!("table needs -n >= 2"),
        2 => Ok(vec![TableRow {
            b: None,
            c: None,
            threshold: Some(0),
        }]),
        3 => config
            .b
            .iter()
            .map(|b| {
                Ok(TableRow {
                    b: Some(b),
                    c: None,
                    threshold: Some(classify::threshold_n3(b)?),
                })
            })
            .collect(),
        4 => {
            let mut rows = Vec::new();
            for b in config.b.iter() {
                for c in config.c.iter() {
                    rows.push(TableRow {
                        b: Some(b),
                        c: Some(c),
                        threshold: Some(classify::threshold_n4(b, c)?.threshold),
                    });
                }
            }
            Ok(rows)
        }
        n => {
            // No closed form here: the minimal x_n padding of x2^b*x3^c is
            // found by the oracle, cell by cell.
            let cells: Vec<(u64, u64)> = config
                .b
                .iter()
                .flat_map(|b| config.c.iter().map(move |c| (b, c)))
                .collect();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.workers)
                .build()?;
            let cap = config.cap;
            let pad_cap = config.pad_cap;
            let rows: Vec<anyhow::Result<TableRow>> = pool.install(|| {
                cells
                    .par_iter()
                    .map(|&(b, c)| {
                        let mut exps = vec![0u64; n];
                        exps[1] = b;
                        exps[2] = c;
                        let u = Monomial::new(exps)?;
                        let threshold = match classify::minimal_padding(&u, pad_cap, cap) {
                            Ok(k) => Some(k),
                            // Budget exhaustion of either kind leaves the
                            // cell empty; partial tables beat no table.
                            Err(Error::NotFoundWithinCap { .. }) => None,
                            Err(Error::EnumerationCapExceeded { .. }) => {
                                eprintln!(
                                    "table: cell b={b} c={c} skipped (enumeration cap)"
                                );
                                None
                            }
                            Err(e) => return Err(e.into()),
                        };
                        Ok(TableRow {
                            b: Some(b),
                            c: Some(c),
                            threshold,
                        })
                    })
                    .collect()
            });
            rows.into_iter().collect()
        }
    }
}
