//! Shared proptest generators for puzzle specs.
#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use riddle_forge::classics::{StationInstance, TransferInstance, TransferQuery};
use riddle_forge::model::{Puzzle, PuzzleSpec, Quantity};
use riddle_forge::pigeonhole::PigeonholeInstance;
use riddle_forge::rate::{RateField, RateQuery, RateScenario};
use riddle_forge::weighing::WeighingInstance;
use riddle_forge::Rational;

const RESERVED: &[&str] = &["min", "h", "puzzle", "find", "where"];

pub fn ident() -> impl Strategy<Value = String> {
    "[a-z_][a-z0-9_]{0,7}".prop_filter("reserved word", |s| !RESERVED.contains(&s.as_str()))
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..100_000, 1i64..500).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn count_quantity() -> impl Strategy<Value = Quantity> {
    (positive_rational(), proptest::option::of(ident())).prop_map(|(m, label)| Quantity {
        label,
        ..Quantity::count(m)
    })
}

pub fn time_quantity() -> impl Strategy<Value = Quantity> {
    positive_rational().prop_map(Quantity::minutes)
}

pub fn scenario() -> impl Strategy<Value = RateScenario> {
    (count_quantity(), count_quantity(), time_quantity())
        .prop_map(|(w, s, t)| RateScenario::new(w, s, t).unwrap())
}

pub fn rate_query() -> impl Strategy<Value = RateQuery> {
    (
        scenario(),
        0usize..3,
        count_quantity(),
        count_quantity(),
        time_quantity(),
    )
        .prop_map(|(known, target, w, s, t)| {
            let target = RateField::ALL[target];
            let given = [
                (RateField::Work, w),
                (RateField::Subjects, s),
                (RateField::Time, t),
            ]
            .into_iter()
            .filter(|(f, _)| *f != target);
            RateQuery::new(known, target, given).unwrap()
        })
}

pub fn color_map(min: usize, max_count: u64) -> impl Strategy<Value = Vec<(String, u64)>> {
    proptest::collection::btree_map(ident(), 0..=max_count, min..6)
        .prop_map(|m: BTreeMap<String, u64>| m.into_iter().collect())
        .prop_shuffle()
}

fn transfer() -> impl Strategy<Value = TransferInstance> {
    (color_map(1, 20), color_map(0, 20))
        .prop_filter("first container holds something", |(a, _)| {
            a.iter().any(|(_, c)| *c > 0)
        })
        .prop_flat_map(|(a, b)| {
            let total: u64 = a.iter().map(|(_, c)| c).sum();
            let names: Vec<String> = a.iter().chain(&b).map(|(n, _)| n.clone()).collect();
            let query = prop_oneof![
                Just(TransferQuery::DrawnIsMoved),
                proptest::sample::select(names).prop_map(TransferQuery::DrawnHasColor),
            ];
            (Just(a), Just(b), 1..=total, query)
        })
        .prop_map(|(a, b, moved, q)| TransferInstance::new(a, b, moved, q).unwrap())
}

fn station() -> impl Strategy<Value = StationInstance> {
    (positive_rational(), 1i64..=200, 1i64..=100).prop_map(|(x, num, den)| {
        // any saving in (0, 2X]
        let frac = Rational::new(num.min(2 * den), den).unwrap();
        let y = &x * &frac;
        StationInstance::new(x, y).unwrap()
    })
}

pub fn puzzle() -> impl Strategy<Value = Puzzle> {
    prop_oneof![
        rate_query().prop_map(Puzzle::Rate),
        (1u64..=u64::MAX).prop_map(|n| Puzzle::Weighing(WeighingInstance::new(n).unwrap())),
        (color_map(1, 1000), 1u64..50)
            .prop_map(|(c, r)| Puzzle::Pigeonhole(PigeonholeInstance::new(c, r).unwrap())),
        transfer().prop_map(Puzzle::Transfer),
        station().prop_map(Puzzle::Station),
    ]
}

pub fn label() -> impl Strategy<Value = Option<String>> {
    proptest::option::of("[ -~]{0,16}")
}

pub fn puzzle_spec() -> impl Strategy<Value = PuzzleSpec> {
    (label(), puzzle()).prop_map(|(label, puzzle)| PuzzleSpec { label, puzzle })
}

pub fn bin() -> std::process::Command {
    std::process::Command::new(env!("CARGO_BIN_EXE_riddle-forge"))
}

pub fn corpus(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("puzzles")
        .join(name)
}
