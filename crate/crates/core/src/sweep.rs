//! Formula-versus-oracle sweeps over whole parameter ranges.

use rayon::prelude::*;
use serde::Serialize;

use crate::classics::{transfer_formula_survey, SurveyRow};
use crate::error::{Error, Result};
use crate::pigeonhole::{guarantee_draws_formula, guarantee_draws_oracle, PigeonholeInstance};
use crate::weighing::{min_weighings_formula, MinimaxTable, WeighingInstance};

pub const THREADS_ENV: &str = "RIDDLE_FORGE_THREADS";

pub const MAX_WEIGHING_OBJECTS: u64 = 6561;
pub const MAX_PIGEONHOLE_COLORS: u64 = 4;
pub const MAX_PIGEONHOLE_COUNT: u64 = 6;
pub const MAX_PIGEONHOLE_REQUIRED: u64 = 4;
pub const MAX_TRANSFER_N: u64 = 8;
pub const MAX_TRANSFER_D: u64 = 8;

/// Thread pool sized by `RIDDLE_FORGE_THREADS` when set, else rayon's
/// default.
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| {
            Error::InvalidBounds(format!(
                "{THREADS_ENV} must be a positive integer, got `{raw}`"
            ))
        })?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Error::InvalidBounds(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub kind: &'static str,
    pub compared: u64,
    pub matches: u64,
    pub mismatches: u64,
    /// Instances outside the range where the formula claims to hold.
    pub skipped: u64,
    pub first_mismatch: Option<String>,
}

impl SweepSummary {
    pub fn all_match(&self) -> bool {
        self.mismatches == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} compared, {} matches, {} mismatches",
            self.kind, self.compared, self.matches, self.mismatches
        );
        if self.skipped > 0 {
            out.push_str(&format!(", {} outside formula range", self.skipped));
        }
        out.push('\n');
        if let Some(m) = &self.first_mismatch {
            out.push_str(&format!("first mismatch: {m}\n"));
        }
        out
    }

    fn from_results(kind: &'static str, results: Vec<Option<(bool, String)>>) -> Self {
        let mut s = SweepSummary {
            kind,
            compared: 0,
            matches: 0,
            mismatches: 0,
            skipped: 0,
            first_mismatch: None,
        };
        for r in results {
            match r {
                None => s.skipped += 1,
                Some((true, _)) => {
                    s.compared += 1;
                    s.matches += 1;
                }
                Some((false, detail)) => {
                    s.compared += 1;
                    s.mismatches += 1;
                    s.first_mismatch.get_or_insert(detail);
                }
            }
        }
        s
    }
}

/// Formula against minimax oracle for every `N` in `2..=max_objects`.
pub fn sweep_weighing(max_objects: u64) -> Result<SweepSummary> {
    if max_objects > MAX_WEIGHING_OBJECTS {
        return Err(Error::InvalidBounds(format!(
            "weighing sweep is limited to N <= {MAX_WEIGHING_OBJECTS}, got {max_objects}"
        )));
    }
    let table = MinimaxTable::up_to(max_objects.max(1));
    let results = (2..=max_objects)
        .into_par_iter()
        .map(|n| {
            let formula =
                min_weighings_formula(&WeighingInstance::new(n).expect("n >= 2")).weighings;
            let oracle = table.get(n).expect("table covers range");
            Some((
                formula == oracle,
                format!("N={n}: formula {formula}, oracle {oracle}"),
            ))
        })
        .collect();
    Ok(SweepSummary::from_results("weighing", results))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PigeonholeBounds {
    pub max_colors: u64,
    pub max_count: u64,
    pub max_required: u64,
}

impl Default for PigeonholeBounds {
    fn default() -> Self {
        PigeonholeBounds {
            max_colors: MAX_PIGEONHOLE_COLORS,
            max_count: MAX_PIGEONHOLE_COUNT,
            max_required: MAX_PIGEONHOLE_REQUIRED,
        }
    }
}

/// Every instance with `1..=max_colors` colors, each count in
/// `0..=max_count`, and `required` in `1..=max_required`, in lexicographic
/// order.
pub fn pigeonhole_instances(bounds: PigeonholeBounds) -> Vec<PigeonholeInstance> {
    let base = bounds.max_count + 1;
    let mut out = Vec::new();
    for n in 1..=bounds.max_colors as u32 {
        for code in 0..base.pow(n) {
            // most significant digit first, so codes enumerate lexicographically
            let colors: Vec<(String, u64)> = (0..n)
                .map(|i| (format!("c{i}"), code / base.pow(n - 1 - i) % base))
                .collect();
            for r in 1..=bounds.max_required {
                out.push(
                    PigeonholeInstance::new(colors.clone(), r).expect("valid by construction"),
                );
            }
        }
    }
    out
}

/// Formula against the finite-count oracle on every instance where the
/// formula applies; the rest are counted as skipped.
pub fn sweep_pigeonhole(bounds: PigeonholeBounds) -> Result<SweepSummary> {
    if bounds.max_colors == 0 || bounds.max_required == 0 {
        return Err(Error::InvalidBounds(
            "colors and required must be at least 1".into(),
        ));
    }
    if bounds.max_colors > MAX_PIGEONHOLE_COLORS
        || bounds.max_count > MAX_PIGEONHOLE_COUNT
        || bounds.max_required > MAX_PIGEONHOLE_REQUIRED
    {
        return Err(Error::InvalidBounds(format!(
            "pigeonhole sweep is limited to {MAX_PIGEONHOLE_COLORS} colors, counts <= {MAX_PIGEONHOLE_COUNT}, required <= {MAX_PIGEONHOLE_REQUIRED}"
        )));
    }
    let results = pigeonhole_instances(bounds)
        .into_par_iter()
        .map(|inst| {
            if !inst.formula_applies() {
                return None;
            }
            let formula =
                guarantee_draws_formula(inst.n_colors(), inst.required()).expect("positive");
            let oracle = guarantee_draws_oracle(&inst).expect("applicable implies feasible");
            Some((
                formula == oracle,
                format!("{inst:?}: formula {formula}, oracle {oracle}"),
            ))
        })
        .collect();
    Ok(SweepSummary::from_results("pigeonhole", results))
}

/// Runs the container survey and summarizes agreement. Disagreement is
/// expected here and is not an error.
pub fn sweep_transfer(max_n: u64, max_d: u64) -> Result<(SweepSummary, Vec<SurveyRow>)> {
    if max_n > MAX_TRANSFER_N || max_d > MAX_TRANSFER_D {
        return Err(Error::InvalidBounds(format!(
            "transfer survey is limited to n <= {MAX_TRANSFER_N}, d <= {MAX_TRANSFER_D}"
        )));
    }
    let rows = transfer_formula_survey(max_n, max_d)?;
    let results = rows
        .iter()
        .map(|r| {
            Some((
                r.matches,
                format!(
                    "{}: enumerated {}, formula {}",
                    r.key, r.enumerated, r.formula
                ),
            ))
        })
        .collect();
    Ok((SweepSummary::from_results("transfer", results), rows))
}
