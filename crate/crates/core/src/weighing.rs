//! Finding the single heavier object among `N` with a two-pan balance.
//!
//! Every weighing has three outcomes, so `P` weighings separate at most
//! `3^P` suspects: the answer is the `P = i + 1` with `3^i < N ≤ 3^(i+1)`.
//! [`MinimaxTable`] recomputes the same number by exhaustive game-tree
//! search without using powers of three, and [`build_strategy`] produces an
//! explicit decision tree that [`simulate_strategy`] can check leaf by leaf.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeighingInstance {
    n_objects: u64,
}

impl WeighingInstance {
    pub fn new(n_objects: u64) -> Result<Self> {
        if n_objects == 0 {
            return Err(Error::invalid("need at least one object"));
        }
        Ok(WeighingInstance { n_objects })
    }

    pub fn n_objects(&self) -> u64 {
        self.n_objects
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeighingAnswer {
    /// `i` with `3^i < N ≤ 3^(i+1)`; absent for a single object.
    pub exponent: Option<u32>,
    /// `P`, the worst-case number of weighings.
    pub weighings: u32,
}

pub fn min_weighings_formula(inst: &WeighingInstance) -> WeighingAnswer {
    let n = u128::from(inst.n_objects);
    if n == 1 {
        return WeighingAnswer {
            exponent: None,
            weighings: 0,
        };
    }
    let mut i = 0u32;
    let mut lower = 1u128; // 3^i
    while !(lower < n && n <= lower * 3) {
        i += 1;
        lower *= 3;
    }
    WeighingAnswer {
        exponent: Some(i),
        weighings: i + 1,
    }
}

/// Exact worst-case weighing counts by minimax over pan sizes.
///
/// All suspects are interchangeable, so a position is fully described by
/// the suspect count `m`: `f(0) = f(1) = 0` and
/// `f(m) = 1 + min over 1 ≤ a ≤ m/2 of max(f(a), f(m − 2a))`.
/// Entries are filled bottom-up and never change once written.
#[derive(Debug, Clone)]
pub struct MinimaxTable {
    worst: Vec<u32>,
}

impl MinimaxTable {
    pub fn up_to(max_objects: u64) -> Self {
        let mut table = MinimaxTable { worst: vec![0, 0] };
        table.extend_to(max_objects);
        table
    }

    pub fn extend_to(&mut self, max_objects: u64) {
        let max = max_objects as usize;
        while self.worst.len() <= max {
            let m = self.worst.len();
            let best = (1..=m / 2)
                .map(|a| self.worst[a].max(self.worst[m - 2 * a]))
                .min()
                .expect("m >= 2 has at least one pan size");
            self.worst.push(best + 1);
        }
    }

    pub fn len(&self) -> u64 {
        self.worst.len() as u64 - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, n_objects: u64) -> Option<u32> {
        if n_objects == 0 {
            return None;
        }
        self.worst.get(n_objects as usize).copied()
    }
}

pub fn min_weighings_oracle(inst: &WeighingInstance) -> u32 {
    MinimaxTable::up_to(inst.n_objects)
        .get(inst.n_objects)
        .expect("table covers the instance")
}

/// Pan size used by [`build_strategy`] for `m` suspects: minimizes the
/// largest of the three outcome groups, preferring the smaller pan on ties.
pub fn pan_size(m: usize) -> usize {
    (1..=m / 2)
        .min_by_key(|&a| (a.max(m - 2 * a), a))
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategyNode {
    pub suspects: Vec<usize>,
    pub action: Action,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    Leaf(usize),
    Weigh {
        left: Vec<usize>,
        right: Vec<usize>,
        on_left_heavy: Box<StrategyNode>,
        on_right_heavy: Box<StrategyNode>,
        /// `None` when nothing was set aside, so balance cannot happen.
        on_balance: Option<Box<StrategyNode>>,
    },
}

impl StrategyNode {
    pub fn depth(&self) -> u32 {
        match &self.action {
            Action::Leaf(_) => 0,
            Action::Weigh {
                on_left_heavy,
                on_right_heavy,
                on_balance,
                ..
            } => {
                let aside = on_balance.as_ref().map_or(0, |n| n.depth());
                1 + on_left_heavy.depth().max(on_right_heavy.depth()).max(aside)
            }
        }
    }

    /// Checks the structural invariants of the whole tree.
    pub fn validate(&self) -> Result<()> {
        self.check_node()?;
        if let Action::Weigh {
            on_left_heavy,
            on_right_heavy,
            on_balance,
            ..
        } = &self.action
        {
            on_left_heavy.validate()?;
            on_right_heavy.validate()?;
            if let Some(b) = on_balance {
                b.validate()?;
            }
        }
        Ok(())
    }

    fn check_node(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedTree(msg));
        match &self.action {
            Action::Leaf(id) => {
                if self.suspects != [*id] {
                    return bad(format!(
                        "leaf {id} has suspects {}",
                        format_set(&self.suspects)
                    ));
                }
            }
            Action::Weigh {
                left,
                right,
                on_left_heavy,
                on_right_heavy,
                on_balance,
            } => {
                if left.is_empty() || left.len() != right.len() {
                    return bad(format!(
                        "pans must be nonempty and equal: {} vs {}",
                        format_set(left),
                        format_set(right)
                    ));
                }
                let suspects: BTreeSet<usize> = self.suspects.iter().copied().collect();
                let left_set: BTreeSet<usize> = left.iter().copied().collect();
                let right_set: BTreeSet<usize> = right.iter().copied().collect();
                if suspects.len() != self.suspects.len()
                    || left_set.len() != left.len()
                    || right_set.len() != right.len()
                {
                    return bad("repeated object in a weighing".into());
                }
                if !left_set.is_disjoint(&right_set) {
                    return bad("pans overlap".into());
                }
                if !left_set.is_subset(&suspects) || !right_set.is_subset(&suspects) {
                    return bad("pan holds an object that is not a suspect".into());
                }
                let aside: Vec<usize> = suspects
                    .iter()
                    .copied()
                    .filter(|x| !left_set.contains(x) && !right_set.contains(x))
                    .collect();
                if sorted(&on_left_heavy.suspects) != sorted(left) {
                    return bad("left-heavy branch does not keep exactly the left pan".into());
                }
                if sorted(&on_right_heavy.suspects) != sorted(right) {
                    return bad("right-heavy branch does not keep exactly the right pan".into());
                }
                match on_balance {
                    Some(b) if sorted(&b.suspects) != aside => {
                        return bad(
                            "balance branch does not keep exactly the set-aside objects".into()
                        )
                    }
                    None if !aside.is_empty() => {
                        return bad("objects set aside but no balance branch".into())
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0, "");
        out
    }

    fn write_text(&self, out: &mut String, indent: usize, prefix: &str) {
        let pad = "  ".repeat(indent);
        match &self.action {
            Action::Leaf(id) => {
                let _ = writeln!(out, "{pad}{prefix}object {id}");
            }
            Action::Weigh {
                left,
                right,
                on_left_heavy,
                on_right_heavy,
                on_balance,
            } => {
                let _ = writeln!(
                    out,
                    "{pad}{prefix}weigh {} vs {}",
                    format_set(left),
                    format_set(right)
                );
                on_left_heavy.write_text(out, indent + 1, "left heavy: ");
                on_right_heavy.write_text(out, indent + 1, "right heavy: ");
                if let Some(b) = on_balance {
                    b.write_text(out, indent + 1, "balance: ");
                }
            }
        }
    }
}

impl fmt::Display for StrategyNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// `{0-3,7}` style set notation.
pub fn format_set(items: &[usize]) -> String {
    let items = sorted(items);
    let mut parts = Vec::new();
    let mut i = 0;
    while i < items.len() {
        let start = items[i];
        let mut end = start;
        while i + 1 < items.len() && items[i + 1] == end + 1 {
            i += 1;
            end = items[i];
        }
        parts.push(if start == end {
            start.to_string()
        } else {
            format!("{start}-{end}")
        });
        i += 1;
    }
    format!("{{{}}}", parts.join(","))
}

pub fn build_strategy(inst: &WeighingInstance) -> StrategyNode {
    let suspects: Vec<usize> = (0..inst.n_objects as usize).collect();
    build_node(suspects)
}

fn build_node(suspects: Vec<usize>) -> StrategyNode {
    if suspects.len() == 1 {
        return StrategyNode {
            action: Action::Leaf(suspects[0]),
            suspects,
        };
    }
    let a = pan_size(suspects.len());
    let left = suspects[..a].to_vec();
    let right = suspects[a..2 * a].to_vec();
    let aside = suspects[2 * a..].to_vec();
    let action = Action::Weigh {
        on_left_heavy: Box::new(build_node(left.clone())),
        on_right_heavy: Box::new(build_node(right.clone())),
        on_balance: (!aside.is_empty()).then(|| Box::new(build_node(aside))),
        left,
        right,
    };
    StrategyNode { suspects, action }
}

/// Follows the outcomes the scale would show if `heavy` were the odd
/// object. Returns the identified object and the number of weighings.
/// Only the nodes on the path are checked, and only locally; use
/// [`StrategyNode::validate`] for the whole tree.
pub fn simulate_strategy(tree: &StrategyNode, heavy: usize) -> Result<(usize, u32)> {
    if !tree.suspects.contains(&heavy) {
        return Err(Error::invalid(format!(
            "object {heavy} is not among the suspects"
        )));
    }
    let mut node = tree;
    let mut used = 0;
    loop {
        match &node.action {
            Action::Leaf(id) if node.suspects == [*id] => return Ok((*id, used)),
            Action::Leaf(id) => {
                return Err(Error::MalformedTree(format!(
                    "leaf {id} has suspects {}",
                    format_set(&node.suspects)
                )))
            }
            Action::Weigh {
                left,
                right,
                on_left_heavy,
                on_right_heavy,
                on_balance,
            } => {
                if left.is_empty() || left.len() != right.len() {
                    return Err(Error::MalformedTree(
                        "pans must be nonempty and equal".into(),
                    ));
                }
                used += 1;
                node = if left.contains(&heavy) {
                    on_left_heavy
                } else if right.contains(&heavy) {
                    on_right_heavy
                } else {
                    on_balance.as_deref().ok_or_else(|| {
                        Error::MalformedTree("scale balanced but nothing was set aside".into())
                    })?
                };
            }
        }
    }
}
