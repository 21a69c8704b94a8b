//! Work-rate proportions: `W / (S·t)` is constant across scenarios of the
//! same task, so any one of work, subjects or time can be recovered from
//! the other two.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Quantity, Unit};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RateField {
    Work,
    Subjects,
    Time,
}

impl RateField {
    pub const ALL: [RateField; 3] = [RateField::Work, RateField::Subjects, RateField::Time];

    pub fn as_str(self) -> &'static str {
        match self {
            RateField::Work => "work",
            RateField::Subjects => "subjects",
            RateField::Time => "time",
        }
    }

    fn unit(self) -> Unit {
        match self {
            RateField::Time => Unit::Minutes,
            _ => Unit::Count,
        }
    }
}

impl fmt::Display for RateField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RateField {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        RateField::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or(())
    }
}

fn check_field(field: RateField, q: &Quantity) -> Result<()> {
    if q.unit != field.unit() {
        return Err(Error::invalid(format!(
            "{field} must be measured in {}",
            if field == RateField::Time {
                "minutes"
            } else {
                "counts"
            }
        )));
    }
    if !q.magnitude.is_positive() {
        return Err(Error::invalid(format!(
            "{field} must be positive, got {}",
            q.magnitude
        )));
    }
    Ok(())
}

/// A fully known (work, subjects, time) triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateScenario {
    work: Quantity,
    subjects: Quantity,
    time: Quantity,
}

impl RateScenario {
    pub fn new(work: Quantity, subjects: Quantity, time: Quantity) -> Result<Self> {
        check_field(RateField::Work, &work)?;
        check_field(RateField::Subjects, &subjects)?;
        check_field(RateField::Time, &time)?;
        Ok(RateScenario {
            work,
            subjects,
            time,
        })
    }

    pub fn work(&self) -> &Quantity {
        &self.work
    }

    pub fn subjects(&self) -> &Quantity {
        &self.subjects
    }

    pub fn time(&self) -> &Quantity {
        &self.time
    }

    pub fn get(&self, field: RateField) -> &Quantity {
        match field {
            RateField::Work => &self.work,
            RateField::Subjects => &self.subjects,
            RateField::Time => &self.time,
        }
    }
}

/// A known scenario plus a second scenario with exactly one unknown field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateQuery {
    known: RateScenario,
    target: RateField,
    // Sorted by field, never contains `target`.
    given: [(RateField, Quantity); 2],
}

impl RateQuery {
    pub fn new(
        known: RateScenario,
        target: RateField,
        given: impl IntoIterator<Item = (RateField, Quantity)>,
    ) -> Result<Self> {
        let mut given: Vec<_> = given.into_iter().collect();
        given.sort_by_key(|(f, _)| *f);
        let expected: Vec<_> = RateField::ALL
            .into_iter()
            .filter(|f| *f != target)
            .collect();
        let fields: Vec<_> = given.iter().map(|(f, _)| *f).collect();
        if fields != expected {
            return Err(Error::invalid(format!(
                "solving for {target} needs exactly {} and {}",
                expected[0], expected[1]
            )));
        }
        for (field, q) in &given {
            check_field(*field, q)?;
        }
        let mut it = given.into_iter();
        let given = [it.next().unwrap(), it.next().unwrap()];
        Ok(RateQuery {
            known,
            target,
            given,
        })
    }

    pub fn known(&self) -> &RateScenario {
        &self.known
    }

    pub fn target(&self) -> RateField {
        self.target
    }

    pub fn given(&self) -> &[(RateField, Quantity); 2] {
        &self.given
    }

    pub fn given_value(&self, field: RateField) -> Option<&Rational> {
        self.given
            .iter()
            .find(|(f, _)| *f == field)
            .map(|(_, q)| &q.magnitude)
    }

    /// The unknown scenario completed with `value` in the target slot.
    pub fn completed(&self, value: Rational) -> Result<RateScenario> {
        let slot = |field: RateField| match self.given.iter().find(|(f, _)| *f == field) {
            Some((_, q)) => q.clone(),
            None => Quantity {
                magnitude: value.clone(),
                unit: field.unit(),
                label: None,
            },
        };
        RateScenario::new(
            slot(RateField::Work),
            slot(RateField::Subjects),
            slot(RateField::Time),
        )
    }
}

/// `k = W / (S·t)`.
pub fn rate_constant(s: &RateScenario) -> Rational {
    let denom = &s.subjects.magnitude * &s.time.magnitude;
    // Construction guarantees positive subjects and time.
    s.work
        .magnitude
        .checked_div(&denom)
        .expect("positive by construction")
}

/// The unknown value `x` with `W₂/(S₂·t₂) = k` of the known scenario.
pub fn solve_rate(q: &RateQuery) -> Result<Rational> {
    let k = rate_constant(&q.known);
    let g = |f| q.given_value(f).expect("given by construction");
    match q.target {
        RateField::Subjects => g(RateField::Work).checked_div(&(&k * g(RateField::Time))),
        RateField::Time => g(RateField::Work).checked_div(&(&k * g(RateField::Subjects))),
        RateField::Work => Ok(&(&k * g(RateField::Subjects)) * g(RateField::Time)),
    }
}

/// Same answer by direct proportional scaling of the known scenario, with
/// no rate constant: subjects scale with work and inversely with time, and
/// so on. Used as an independent cross-check of [`solve_rate`].
pub fn solve_rate_by_scaling(q: &RateQuery) -> Result<Rational> {
    let k = &q.known;
    let g = |f| q.given_value(f).expect("given by construction");
    let ratio = |a: &Rational, b: &Rational| a.checked_div(b);
    match q.target {
        RateField::Subjects => {
            let by_work = ratio(g(RateField::Work), &k.work.magnitude)?;
            let by_time = ratio(&k.time.magnitude, g(RateField::Time))?;
            Ok(&(&k.subjects.magnitude * &by_work) * &by_time)
        }
        RateField::Time => {
            let by_work = ratio(g(RateField::Work), &k.work.magnitude)?;
            let by_subjects = ratio(&k.subjects.magnitude, g(RateField::Subjects))?;
            Ok(&(&k.time.magnitude * &by_work) * &by_subjects)
        }
        RateField::Work => {
            let by_subjects = ratio(g(RateField::Subjects), &k.subjects.magnitude)?;
            let by_time = ratio(g(RateField::Time), &k.time.magnitude)?;
            Ok(&(&k.work.magnitude * &by_subjects) * &by_time)
        }
    }
}

/// Whole number of subjects needed to meet the target: the ceiling of `x`.
pub fn ceil_subjects(x: &Rational) -> Result<BigInt> {
    if !x.is_positive() {
        return Err(Error::invalid(format!(
            "subject count must be positive, got {x}"
        )));
    }
    Ok(x.ceil())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn scenario(w: i64, s: i64, t: i64) -> RateScenario {
        RateScenario::new(Quantity::count(w), Quantity::count(s), Quantity::minutes(t)).unwrap()
    }

    fn subjects_query(known: RateScenario, w: i64, t: i64) -> RateQuery {
        RateQuery::new(
            known,
            RateField::Subjects,
            [
                (RateField::Time, Quantity::minutes(t)),
                (RateField::Work, Quantity::count(w)),
            ],
        )
        .unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn rate_constant_examples() {
        assert_eq!(rate_constant(&scenario(6, 6, 6)), rat(1, 6));
        assert_eq!(rate_constant(&scenario(150, 100, 60)), rat(1, 40));
        assert_eq!(rate_constant(&scenario(1, 1, 1)), Rational::one());
    }

    #[test]
    fn worked_problems() {
        assert_eq!(
            solve_rate(&subjects_query(scenario(6, 6, 6), 100, 50)).unwrap(),
            12
        );
        assert_eq!(
            solve_rate(&subjects_query(scenario(150, 100, 60), 60, 30)).unwrap(),
            80
        );
        assert_eq!(
            solve_rate(&subjects_query(scenario(40, 3, 120), 100, 30)).unwrap(),
            30
        );
    }

    #[test]
    fn known_scenario_reproduces_itself() {
        let q = RateQuery::new(
            scenario(5, 2, 7),
            RateField::Work,
            [
                (RateField::Subjects, Quantity::count(2)),
                (RateField::Time, Quantity::minutes(7)),
            ],
        )
        .unwrap();
        assert_eq!(solve_rate(&q).unwrap(), 5);
    }

    #[test]
    fn ceiling() {
        assert_eq!(ceil_subjects(&rat(12, 1)).unwrap(), 12.into());
        assert_eq!(ceil_subjects(&rat(10, 3)).unwrap(), 4.into());
        assert_eq!(ceil_subjects(&rat(80, 1)).unwrap(), 80.into());
        assert!(ceil_subjects(&Rational::zero()).is_err());
        assert!(ceil_subjects(&rat(-1, 2)).is_err());
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(
            RateScenario::new(Quantity::count(0), Quantity::count(1), Quantity::minutes(1))
                .is_err()
        );
        assert!(RateScenario::new(
            Quantity::count(1),
            Quantity::count(-2),
            Quantity::minutes(1)
        )
        .is_err());
        assert!(
            RateScenario::new(Quantity::count(1), Quantity::count(1), Quantity::count(1)).is_err()
        );
        let known = scenario(1, 1, 1);
        // target listed among the givens
        assert!(RateQuery::new(
            known.clone(),
            RateField::Work,
            [
                (RateField::Work, Quantity::count(1)),
                (RateField::Time, Quantity::minutes(1))
            ],
        )
        .is_err());
        // missing one given
        assert!(RateQuery::new(
            known.clone(),
            RateField::Work,
            [(RateField::Time, Quantity::minutes(1))]
        )
        .is_err());
        assert!(RateQuery::new(
            known,
            RateField::Time,
            [
                (RateField::Work, Quantity::count(1)),
                (RateField::Subjects, Quantity::count(0))
            ],
        )
        .is_err());
    }

    fn pos() -> impl Strategy<Value = Rational> {
        (1i64..500, 1i64..50).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn solving_then_resolving_time_returns_given_time(
            w in pos(), s in pos(), t in pos(), w2 in pos(), t2 in pos(),
        ) {
            let known = RateScenario::new(Quantity::count(w), Quantity::count(s), Quantity::minutes(t)).unwrap();
            let q = RateQuery::new(
                known.clone(),
                RateField::Subjects,
                [(RateField::Work, Quantity::count(w2.clone())), (RateField::Time, Quantity::minutes(t2.clone()))],
            ).unwrap();
            let s2 = solve_rate(&q).unwrap();
            let back = RateQuery::new(
                known,
                RateField::Time,
                [(RateField::Work, Quantity::count(w2)), (RateField::Subjects, Quantity::count(s2))],
            ).unwrap();
            prop_assert_eq!(solve_rate(&back).unwrap(), t2);
        }

        #[test]
        fn scaling_route_agrees(w in pos(), s in pos(), t in pos(), a in pos(), b in pos(), target in 0usize..3) {
            let known = RateScenario::new(Quantity::count(w), Quantity::count(s), Quantity::minutes(t)).unwrap();
            let target = RateField::ALL[target];
            let mut vals = vec![a, b].into_iter();
            let given: Vec<_> = RateField::ALL
                .into_iter()
                .filter(|f| *f != target)
                .map(|f| {
                    let v = vals.next().unwrap();
                    (f, if f == RateField::Time { Quantity::minutes(v) } else { Quantity::count(v) })
                })
                .collect();
            let q = RateQuery::new(known, target, given).unwrap();
            prop_assert_eq!(solve_rate(&q).unwrap(), solve_rate_by_scaling(&q).unwrap());
        }
    }
}
