//! Two older puzzles: moving objects between containers and then drawing
//! one (`2n/(n+d)`), and the early train passenger who walks toward the
//! car sent to fetch them (`X − Y/2`).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransferQuery {
    /// The object drawn from the second container is one of the moved ones.
    DrawnIsMoved,
    /// The object drawn from the second container has this color.
    DrawnHasColor(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransferInstance {
    container_a: Vec<(String, u64)>,
    container_b: Vec<(String, u64)>,
    moved: u64,
    query: TransferQuery,
}

fn check_colors(which: &str, colors: &[(String, u64)]) -> Result<()> {
    for (i, (name, _)) in colors.iter().enumerate() {
        if colors[..i].iter().any(|(other, _)| other == name) {
            return Err(Error::invalid(format!(
                "color `{name}` listed twice in {which}"
            )));
        }
    }
    Ok(())
}

impl TransferInstance {
    pub fn new(
        container_a: Vec<(String, u64)>,
        container_b: Vec<(String, u64)>,
        moved: u64,
        query: TransferQuery,
    ) -> Result<Self> {
        check_colors("container_a", &container_a)?;
        check_colors("container_b", &container_b)?;
        let total_a: u64 = container_a.iter().map(|(_, c)| c).sum();
        if moved == 0 {
            return Err(Error::invalid("must move at least one object"));
        }
        if moved > total_a {
            return Err(Error::invalid(format!(
                "cannot move {moved} objects out of a container holding {total_a}"
            )));
        }
        Ok(TransferInstance {
            container_a,
            container_b,
            moved,
            query,
        })
    }

    pub fn container_a(&self) -> &[(String, u64)] {
        &self.container_a
    }

    pub fn container_b(&self) -> &[(String, u64)] {
        &self.container_b
    }

    pub fn moved(&self) -> u64 {
        self.moved
    }

    pub fn query(&self) -> &TransferQuery {
        &self.query
    }

    pub fn total_a(&self) -> u64 {
        self.container_a.iter().map(|(_, c)| c).sum()
    }

    pub fn total_b(&self) -> u64 {
        self.container_b.iter().map(|(_, c)| c).sum()
    }
}

/// `2n / (n + d)`.
pub fn transfer_probability_formula(n: u64, d: u64) -> Result<Rational> {
    if n == 0 || d == 0 {
        return Err(Error::invalid("n and d must both be positive"));
    }
    Rational::new(
        BigInt::from(2 * u128::from(n)),
        BigInt::from(u128::from(n) + u128::from(d)),
    )
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Every `(color, was_moved)` outcome of the final draw with its exact
/// probability. The transfer is hypergeometric over the colors of the first
/// container; the draw is uniform over the enlarged second container.
pub fn transfer_outcomes(inst: &TransferInstance) -> BTreeMap<(String, bool), Rational> {
    let counts: Vec<u64> = inst.container_a.iter().map(|(_, c)| *c).collect();
    let all = binomial(inst.total_a(), inst.moved);
    let pool = BigInt::from(inst.total_b() + inst.moved);
    let mut out = BTreeMap::new();

    let mut split = vec![0u64; counts.len()];
    for_each_split(&counts, inst.moved, 0, &mut split, &mut |split| {
        let ways: BigInt = counts
            .iter()
            .zip(split)
            .map(|(&c, &x)| binomial(c, x))
            .product();
        let weight = Rational::new(ways, all.clone()).expect("C(total, moved) > 0");
        for ((name, _), &x) in inst.container_a.iter().zip(split.iter()) {
            if x > 0 {
                let p = &weight * &Rational::new(x, pool.clone()).expect("pool > 0");
                add(&mut out, (name.clone(), true), p);
            }
        }
        for (name, b) in &inst.container_b {
            if *b > 0 {
                let p = &weight * &Rational::new(*b, pool.clone()).expect("pool > 0");
                add(&mut out, (name.clone(), false), p);
            }
        }
    });
    out
}

fn add(map: &mut BTreeMap<(String, bool), Rational>, key: (String, bool), p: Rational) {
    let slot = map.entry(key).or_default();
    *slot = &*slot + &p;
}

fn for_each_split(
    counts: &[u64],
    left: u64,
    at: usize,
    split: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]),
) {
    if at == counts.len() {
        if left == 0 {
            visit(split);
        }
        return;
    }
    let rest: u64 = counts[at + 1..].iter().sum();
    let lo = left.saturating_sub(rest);
    for x in lo..=counts[at].min(left) {
        split[at] = x;
        for_each_split(counts, left - x, at + 1, split, visit);
    }
    split[at] = 0;
}

pub fn transfer_probability_enumerate(inst: &TransferInstance) -> Rational {
    transfer_outcomes(inst)
        .into_iter()
        .filter(|((color, moved), _)| match &inst.query {
            TransferQuery::DrawnIsMoved => *moved,
            TransferQuery::DrawnHasColor(c) => color == c,
        })
        .map(|(_, p)| p)
        .sum()
}

/// The `(n, d)` the container formula is applied to for an arbitrary
/// instance: `n` is the number of moved objects (or, for a color query,
/// the first container's count of that color) and `d` is the second
/// container's size before the transfer.
pub fn formula_arguments(inst: &TransferInstance) -> (u64, u64) {
    let n = match &inst.query {
        TransferQuery::DrawnIsMoved => inst.moved,
        TransferQuery::DrawnHasColor(c) => inst
            .container_a
            .iter()
            .find(|(n, _)| n == c)
            .map_or(0, |(_, x)| *x),
    };
    (n, inst.total_b())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub key: String,
    #[serde(skip)]
    pub instance: TransferInstance,
    pub enumerated: Rational,
    pub formula: Rational,
    pub matches: bool,
}

pub const SURVEY_HEADER: &str = "instance,enumerated,formula,match";

impl SurveyRow {
    pub fn to_line(&self) -> String {
        format!(
            "{},{},{},{}",
            self.key, self.enumerated, self.formula, self.matches
        )
    }
}

/// Compares `2n/(n+d)` against exact enumeration over one fixed family:
/// the first container holds `n` objects of color `x`; the second holds
/// `d` objects, `same` of them colored `x` and the rest `y`; `moved`
/// ranges over `1..=n`; both query types are asked. Rows come back sorted
/// by `(n, d, same, moved, query)`.
pub fn transfer_formula_survey(max_n: u64, max_d: u64) -> Result<Vec<SurveyRow>> {
    if max_n == 0 || max_d == 0 {
        return Err(Error::InvalidBounds(
            "survey bounds must be at least 1".into(),
        ));
    }
    let mut keys = Vec::new();
    for n in 1..=max_n {
        for d in 1..=max_d {
            for same in 0..=d {
                for moved in 1..=n {
                    for q in 0..2 {
                        keys.push((n, d, same, moved, q));
                    }
                }
            }
        }
    }
    let mut rows: Vec<_> = keys
        .into_par_iter()
        .map(|(n, d, same, moved, q)| {
            let query = if q == 0 {
                TransferQuery::DrawnIsMoved
            } else {
                TransferQuery::DrawnHasColor("x".into())
            };
            let inst = TransferInstance::new(
                vec![("x".into(), n)],
                vec![("x".into(), same), ("y".into(), d - same)],
                moved,
                query,
            )
            .expect("family members are valid");
            let enumerated = transfer_probability_enumerate(&inst);
            let formula = transfer_probability_formula(n, d).expect("n, d >= 1");
            let qname = if q == 0 { "moved" } else { "has_x" };
            let row = SurveyRow {
                key: format!("n={n};d={d};same={same};moved={moved};query={qname}"),
                matches: enumerated == formula,
                instance: inst,
                enumerated,
                formula,
            };
            ((n, d, same, moved, q), row)
        })
        .collect();
    rows.sort_by_key(|(k, _)| *k);
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StationInstance {
    early: Rational,
    saved: Rational,
}

impl StationInstance {
    /// `early` is `X`, how long before the usual time the passenger
    /// arrived; `saved` is `Y`, how much earlier they got home.
    pub fn new(early: Rational, saved: Rational) -> Result<Self> {
        if !early.is_positive() || !saved.is_positive() {
            return Err(Error::invalid("early and saved minutes must be positive"));
        }
        if saved > &early * &Rational::from(2i64) {
            return Err(Error::invalid(format!(
                "saving {saved} minutes is impossible after arriving only {early} minutes early"
            )));
        }
        Ok(StationInstance { early, saved })
    }

    pub fn early(&self) -> &Rational {
        &self.early
    }

    pub fn saved(&self) -> &Rational {
        &self.saved
    }
}

/// Minutes walked: `X − Y/2`.
pub fn station_walk_formula(inst: &StationInstance) -> Rational {
    let half = inst
        .saved
        .checked_div(&Rational::from(2i64))
        .expect("nonzero divisor");
    &inst.early - &half
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationWalk {
    pub walked_minutes: f64,
    pub saved_minutes: f64,
}

/// Continuous-time simulation of the station pickup.
///
/// Home is at position 0 and the station at `distance`. On an ordinary day
/// the car leaves home so as to reach the station exactly when the
/// passenger's usual train arrives (time 0) and drives straight back. Today
/// the passenger arrives `early_minutes` before that and walks toward home;
/// the car leaves at its usual time. The meeting time is located by
/// bisection on the gap between the two positions.
pub fn station_walk_simulate(
    distance: f64,
    car_speed: f64,
    walk_speed: f64,
    early_minutes: f64,
) -> Result<StationWalk> {
    let params = [distance, car_speed, walk_speed, early_minutes];
    if params.iter().any(|x| !x.is_finite() || *x <= 0.0) {
        return Err(Error::NoMeeting(
            "all parameters must be positive and finite".into(),
        ));
    }
    if walk_speed >= car_speed {
        return Err(Error::NoMeeting(
            "walker must be slower than the car".into(),
        ));
    }
    let depart = -distance / car_speed;
    let walker = |t: f64| (distance - walk_speed * (t + early_minutes).max(0.0)).max(0.0);
    let car = |t: f64| car_speed * (t - depart);
    let gap = |t: f64| walker(t) - car(t);

    if gap(depart) <= 0.0 {
        return Err(Error::NoMeeting(
            "walker reaches home before the car sets out".into(),
        ));
    }
    let (mut lo, mut hi) = (depart, 0.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let meet = 0.5 * (lo + hi);
    let position = car(meet);
    if position <= 0.0 || position >= distance {
        return Err(Error::NoMeeting(
            "meeting point is not between home and station".into(),
        ));
    }
    let home = meet + position / car_speed;
    let usual_home = distance / car_speed;
    Ok(StationWalk {
        walked_minutes: meet + early_minutes,
        saved_minutes: usual_home - home,
    })
}

/// Simulated walk time for a station instance, when a physically valid
/// configuration exists: car speed 1, a walker speed chosen so that the
/// simulated saving equals `Y`. Requires `Y < X` (otherwise the walker
/// would have to outpace the car).
pub fn station_walk_oracle(inst: &StationInstance) -> Option<StationWalk> {
    if inst.saved >= inst.early {
        return None;
    }
    let x = inst.early.to_f64();
    let y = inst.saved.to_f64();
    let walk = y / (2.0 * x - y);
    station_walk_simulate(4.0 * x + 1.0, 1.0, walk, x).ok()
}
