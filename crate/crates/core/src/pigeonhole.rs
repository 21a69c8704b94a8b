//! Worst-case blind draws until some color has been drawn `required` times.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PigeonholeInstance {
    colors: Vec<(String, u64)>,
    required: u64,
}

impl PigeonholeInstance {
    pub fn new(colors: Vec<(String, u64)>, required: u64) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::invalid("need at least one color"));
        }
        if required == 0 {
            return Err(Error::invalid("required run must be at least 1"));
        }
        for (i, (name, _)) in colors.iter().enumerate() {
            if colors[..i].iter().any(|(other, _)| other == name) {
                return Err(Error::invalid(format!("color `{name}` listed twice")));
            }
        }
        Ok(PigeonholeInstance { colors, required })
    }

    pub fn colors(&self) -> &[(String, u64)] {
        &self.colors
    }

    pub fn required(&self) -> u64 {
        self.required
    }

    pub fn n_colors(&self) -> u64 {
        self.colors.len() as u64
    }

    pub fn total(&self) -> u64 {
        self.colors.iter().map(|(_, c)| c).sum()
    }

    /// Whether the closed formula is exact for this instance: every color
    /// can supply `required − 1` objects and at least one can supply
    /// `required`.
    pub fn formula_applies(&self) -> bool {
        let r = self.required;
        self.colors.iter().all(|(_, c)| *c + 1 >= r) && self.colors.iter().any(|(_, c)| *c >= r)
    }

    fn check_feasible(&self) -> Result<()> {
        let max = self.colors.iter().map(|(_, c)| *c).max().unwrap_or(0);
        if max < self.required {
            return Err(Error::Infeasible(format!(
                "no color has {} objects (largest count is {max})",
                self.required
            )));
        }
        Ok(())
    }
}

/// `n_C·(n_R − 1) + 1`.
pub fn guarantee_draws_formula(n_colors: u64, required: u64) -> Result<u64> {
    if n_colors == 0 || required == 0 {
        return Err(Error::invalid(
            "color count and required run must both be positive",
        ));
    }
    n_colors
        .checked_mul(required - 1)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| Error::invalid("draw count overflows u64"))
}

/// Exact guarantee for finite per-color counts: the adversary can hand out
/// at most `min(c, required − 1)` of each color before being forced.
pub fn guarantee_draws_oracle(inst: &PigeonholeInstance) -> Result<u64> {
    inst.check_feasible()?;
    let r = inst.required - 1;
    Ok(1 + inst.colors.iter().map(|(_, c)| (*c).min(r)).sum::<u64>())
}

/// A longest draw sequence that never reaches `required` of one color,
/// dealing colors round-robin in declared order.
pub fn adversarial_sequence(inst: &PigeonholeInstance) -> Result<Vec<String>> {
    inst.check_feasible()?;
    let mut seq = Vec::new();
    for round in 0..inst.required - 1 {
        for (name, count) in &inst.colors {
            if *count > round {
                seq.push(name.clone());
            }
        }
    }
    Ok(seq)
}

/// Longest goal-avoiding draw sequence found by exhaustive search over every
/// order in which the objects can come out of the drawer. Orders that reach
/// the same per-color tally share a memoized result. Exponential in the
/// number of colors; meant for small instances only.
pub fn longest_avoiding_exhaustive(inst: &PigeonholeInstance) -> Result<u64> {
    type Memo = HashMap<Vec<u64>, (u64, bool)>;

    // (longest avoiding extension, drawer emptied while still avoiding)
    fn search(counts: &[u64], drawn: &mut Vec<u64>, required: u64, memo: &mut Memo) -> (u64, bool) {
        if let Some(hit) = memo.get(drawn.as_slice()) {
            return *hit;
        }
        let mut best = 0;
        let mut exhausted = true;
        let mut emptied = false;
        for i in 0..counts.len() {
            if drawn[i] == counts[i] {
                continue;
            }
            exhausted = false;
            if drawn[i] + 1 >= required {
                continue;
            }
            drawn[i] += 1;
            let (len, empty) = search(counts, drawn, required, memo);
            drawn[i] -= 1;
            best = best.max(len + 1);
            emptied |= empty;
        }
        let result = (best, exhausted || emptied);
        memo.insert(drawn.clone(), result);
        result
    }

    let counts: Vec<u64> = inst.colors.iter().map(|(_, c)| *c).collect();
    let mut drawn = vec![0; counts.len()];
    let (len, emptied) = search(&counts, &mut drawn, inst.required, &mut Memo::new());
    if emptied {
        return Err(Error::Infeasible(
            "every object can be drawn without reaching the goal".into(),
        ));
    }
    Ok(len)
}

/// True when no color occurs `required` times in `seq`.
pub fn avoids(seq: &[String], required: u64) -> bool {
    let mut counts = HashMap::<&str, u64>::new();
    seq.iter().all(|c| {
        let n = counts.entry(c).or_default();
        *n += 1;
        *n < required
    })
}
