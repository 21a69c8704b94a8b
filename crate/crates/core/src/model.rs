//! Shared puzzle types.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classics::{StationInstance, TransferInstance};
use crate::pigeonhole::PigeonholeInstance;
use crate::rate::RateQuery;
use crate::rational::Rational;
use crate::weighing::WeighingInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Count,
    /// Time is always stored in minutes.
    Minutes,
}

/// A magnitude with its unit. Count quantities may carry a free-form noun
/// (`mice`, `cats`) that has no effect on any computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quantity {
    pub magnitude: Rational,
    pub unit: Unit,
    pub label: Option<String>,
}

impl Quantity {
    pub fn count(magnitude: impl Into<Rational>) -> Self {
        Quantity {
            magnitude: magnitude.into(),
            unit: Unit::Count,
            label: None,
        }
    }

    pub fn labeled(magnitude: impl Into<Rational>, label: impl Into<String>) -> Self {
        Quantity {
            magnitude: magnitude.into(),
            unit: Unit::Count,
            label: Some(label.into()),
        }
    }

    pub fn minutes(magnitude: impl Into<Rational>) -> Self {
        Quantity {
            magnitude: magnitude.into(),
            unit: Unit::Minutes,
            label: None,
        }
    }

    pub fn hours(magnitude: impl Into<Rational>) -> Self {
        Quantity::minutes(magnitude.into() * Rational::from(60i64))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.unit, &self.label) {
            (Unit::Minutes, _) => write!(f, "{} min", self.magnitude),
            (Unit::Count, Some(label)) => write!(f, "{} {}", self.magnitude, label),
            (Unit::Count, None) => write!(f, "{}", self.magnitude),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PuzzleKind {
    Rate,
    Weighing,
    Pigeonhole,
    Transfer,
    Station,
}

impl PuzzleKind {
    pub const ALL: [PuzzleKind; 5] = [
        PuzzleKind::Rate,
        PuzzleKind::Weighing,
        PuzzleKind::Pigeonhole,
        PuzzleKind::Transfer,
        PuzzleKind::Station,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PuzzleKind::Rate => "rate",
            PuzzleKind::Weighing => "weighing",
            PuzzleKind::Pigeonhole => "pigeonhole",
            PuzzleKind::Transfer => "transfer",
            PuzzleKind::Station => "station",
        }
    }
}

impl fmt::Display for PuzzleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PuzzleKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        PuzzleKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or(())
    }
}

/// The instance carried by a puzzle; the variant is the puzzle's kind.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Puzzle {
    Rate(RateQuery),
    Weighing(WeighingInstance),
    Pigeonhole(PigeonholeInstance),
    Transfer(TransferInstance),
    Station(StationInstance),
}

impl Puzzle {
    pub fn kind(&self) -> PuzzleKind {
        match self {
            Puzzle::Rate(_) => PuzzleKind::Rate,
            Puzzle::Weighing(_) => PuzzleKind::Weighing,
            Puzzle::Pigeonhole(_) => PuzzleKind::Pigeonhole,
            Puzzle::Transfer(_) => PuzzleKind::Transfer,
            Puzzle::Station(_) => PuzzleKind::Station,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuzzleSpec {
    pub label: Option<String>,
    pub puzzle: Puzzle,
}

impl PuzzleSpec {
    pub fn new(puzzle: Puzzle) -> Self {
        PuzzleSpec {
            label: None,
            puzzle,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn kind(&self) -> PuzzleKind {
        self.puzzle.kind()
    }
}
