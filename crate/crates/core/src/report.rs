//! Solving parsed puzzles into printable reports.

use serde::Serialize;

use crate::classics::{
    formula_arguments, station_walk_formula, station_walk_oracle, transfer_probability_enumerate,
    transfer_probability_formula, StationInstance, TransferInstance, TransferQuery,
};
use crate::error::Result;
use crate::model::{Puzzle, PuzzleKind, PuzzleSpec};
use crate::pigeonhole::{
    adversarial_sequence, guarantee_draws_formula, guarantee_draws_oracle, PigeonholeInstance,
};
use crate::rate::{
    ceil_subjects, rate_constant, solve_rate, solve_rate_by_scaling, RateField, RateQuery,
};
use crate::rational::Rational;
use crate::weighing::{
    build_strategy, min_weighings_formula, simulate_strategy, MinimaxTable, WeighingInstance,
};

/// Largest object count the minimax oracle is run on from `solve`.
pub const WEIGHING_ORACLE_LIMIT: u64 = 6561;
/// Largest object count whose strategy tree is simulated from `solve`.
pub const WEIGHING_STRATEGY_LIMIT: u64 = 729;
/// Station identity tolerance, in minutes.
pub const STATION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub check: bool,
    pub explain: bool,
    pub ceil_subjects: bool,
}

/// One solved puzzle. `oracle_answer` and `agreement` are only serialized
/// when oracles were run; inside that, `None` means no oracle applies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub label: Option<String>,
    pub kind: PuzzleKind,
    pub formula_answer: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_answer: Option<Option<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Option<bool>>,
    pub explanation: Vec<String>,
}

impl SolveReport {
    pub fn disagrees(&self) -> bool {
        matches!(self.agreement, Some(Some(false)))
    }

    pub fn to_text(&self, fallback_label: &str) -> String {
        let label = self.label.as_deref().unwrap_or(fallback_label);
        let mut out = format!("{label} [{}]: {}\n", self.kind, self.formula_answer);
        if let Some(oracle) = &self.oracle_answer {
            let verdict = match self.agreement.flatten() {
                Some(true) => "agree",
                Some(false) => "DISAGREE",
                None => "no oracle",
            };
            let value = oracle.as_deref().unwrap_or("-");
            out.push_str(&format!("  oracle: {value} ({verdict})\n"));
        }
        for line in &self.explanation {
            out.push_str(&format!("  | {line}\n"));
        }
        out
    }
}

struct Outcome {
    answer: String,
    oracle: Option<String>,
    agreement: Option<bool>,
    explanation: Vec<String>,
}

pub fn solve(spec: &PuzzleSpec, opts: &SolveOptions) -> Result<SolveReport> {
    let out = match &spec.puzzle {
        Puzzle::Rate(q) => solve_rate_puzzle(q, opts)?,
        Puzzle::Weighing(w) => solve_weighing(w, opts),
        Puzzle::Pigeonhole(p) => solve_pigeonhole(p, opts)?,
        Puzzle::Transfer(t) => solve_transfer(t, opts),
        Puzzle::Station(s) => solve_station(s, opts),
    };
    Ok(SolveReport {
        label: spec.label.clone(),
        kind: spec.kind(),
        formula_answer: out.answer,
        oracle_answer: opts.check.then_some(out.oracle),
        agreement: opts.check.then_some(out.agreement),
        explanation: if opts.explain {
            out.explanation
        } else {
            Vec::new()
        },
    })
}

fn solve_rate_puzzle(q: &RateQuery, opts: &SolveOptions) -> Result<Outcome> {
    let x = solve_rate(q)?;
    let k = q.known();
    let (w, s, t) = (
        &k.work().magnitude,
        &k.subjects().magnitude,
        &k.time().magnitude,
    );
    let g = |f| q.given_value(f).expect("given").to_string();
    let rhs = match q.target() {
        RateField::Subjects => format!("{}/({}*x)", g(RateField::Work), g(RateField::Time)),
        RateField::Time => format!("{}/({}*x)", g(RateField::Work), g(RateField::Subjects)),
        RateField::Work => format!("x/({}*{})", g(RateField::Subjects), g(RateField::Time)),
    };
    let mut explanation = vec![
        format!("W = {}, S = {}, t = {}", k.work(), k.subjects(), k.time()),
        format!("k = W/(S t) = {w}/({s}*{t}) = {}", rate_constant(k)),
        format!("{w}/({s}*{t}) = {rhs}"),
        format!("x = {x}"),
    ];
    let answer = if opts.ceil_subjects && q.target() == RateField::Subjects {
        let whole = ceil_subjects(&x)?;
        if !x.is_integer() {
            explanation.push(format!("rounded up to {whole} whole subjects"));
        }
        whole.to_string()
    } else {
        x.to_string()
    };

    let (oracle, agreement) = if opts.check {
        let scaled = solve_rate_by_scaling(q)?;
        let completed = q.completed(x.clone())?;
        let consistent = rate_constant(&completed) == rate_constant(k);
        (Some(scaled.to_string()), Some(scaled == x && consistent))
    } else {
        (None, None)
    };
    Ok(Outcome {
        answer,
        oracle,
        agreement,
        explanation,
    })
}

fn solve_weighing(w: &WeighingInstance, opts: &SolveOptions) -> Outcome {
    let n = w.n_objects();
    let ans = min_weighings_formula(w);
    let explanation = match ans.exponent {
        Some(i) => vec![
            format!("N = {n}"),
            format!("3^{i} < {n} <= 3^{}", i + 1),
            format!("P = i+1 = {}", ans.weighings),
        ],
        None => vec![
            "N = 1, the only object is the heavy one".into(),
            "P = 0".into(),
        ],
    };
    let (oracle, agreement) = if opts.check && n <= WEIGHING_ORACLE_LIMIT {
        let worst = MinimaxTable::up_to(n).get(n).expect("table covers n");
        let mut ok = worst == ans.weighings;
        if n <= WEIGHING_STRATEGY_LIMIT {
            let tree = build_strategy(w);
            ok &= (0..n as usize).all(|heavy| {
                matches!(simulate_strategy(&tree, heavy), Ok((id, used)) if id == heavy && used <= ans.weighings)
            });
        }
        (Some(worst.to_string()), Some(ok))
    } else {
        (None, None)
    };
    Outcome {
        answer: ans.weighings.to_string(),
        oracle,
        agreement,
        explanation,
    }
}

fn solve_pigeonhole(p: &PigeonholeInstance, opts: &SolveOptions) -> Result<Outcome> {
    let exact = guarantee_draws_oracle(p)?;
    let formula = guarantee_draws_formula(p.n_colors(), p.required())?;
    let (nc, nr) = (p.n_colors(), p.required());
    let mut explanation = vec![
        format!("n_C = {nc}, n_R = {nr}"),
        format!("[{nc}({nr}-1)]+1 = {formula}"),
    ];
    let seq = adversarial_sequence(p)?;
    if seq.len() <= 32 {
        let mut shown = seq.clone();
        shown.push("any".into());
        explanation.push(format!("worst case: {}", shown.join(" - ")));
    }
    if !p.formula_applies() {
        explanation.push(format!(
            "some color has fewer than {} objects, so the counts allow only {exact}",
            nr - 1
        ));
    }
    let (oracle, agreement) = if opts.check {
        (Some(exact.to_string()), Some(exact == formula))
    } else {
        (None, None)
    };
    Ok(Outcome {
        answer: formula.to_string(),
        oracle,
        agreement,
        explanation,
    })
}

fn solve_transfer(t: &TransferInstance, opts: &SolveOptions) -> Outcome {
    let (n, d) = formula_arguments(t);
    let formula = transfer_probability_formula(n, d).ok();
    let mut explanation = vec![format!("n = {n}, d = {d}")];
    match &formula {
        Some(f) => explanation.push(format!("2n/(n+d) = 2*{n}/({n}+{d}) = {f}")),
        None => explanation.push("2n/(n+d) is undefined when n or d is zero".into()),
    }
    if let TransferQuery::DrawnHasColor(c) = t.query() {
        explanation.push(format!("event: the object drawn is {c}"));
    } else {
        explanation.push("event: the object drawn is one of those moved".into());
    }
    let (oracle, agreement) = if opts.check {
        let exact: Rational = transfer_probability_enumerate(t);
        let agree = formula.as_ref() == Some(&exact);
        (Some(exact.to_string()), Some(agree))
    } else {
        (None, None)
    };
    let answer = formula.map_or_else(|| "undefined".to_string(), |f| f.to_string());
    Outcome {
        answer,
        oracle,
        agreement,
        explanation,
    }
}

fn solve_station(s: &StationInstance, opts: &SolveOptions) -> Outcome {
    let walked = station_walk_formula(s);
    let explanation = vec![
        format!("X = {} min, Y = {} min", s.early(), s.saved()),
        format!("X-(Y/2) = {}-({}/2) = {walked}", s.early(), s.saved()),
    ];
    let (oracle, agreement) = if opts.check {
        match station_walk_oracle(s) {
            Some(sim) => {
                let agree = (sim.walked_minutes - walked.to_f64()).abs() <= STATION_TOLERANCE;
                (Some(format!("{:.9}", sim.walked_minutes)), Some(agree))
            }
            None => (None, None),
        }
    } else {
        (None, None)
    };
    Outcome {
        answer: walked.to_string(),
        oracle,
        agreement,
        explanation,
    }
}
