use std::fmt::Write as _;

use crate::classics::TransferQuery;
use crate::model::{Puzzle, PuzzleSpec, Quantity};

fn colors(list: &[(String, u64)]) -> String {
    let inner: Vec<String> = list.iter().map(|(n, c)| format!("{n}: {c}")).collect();
    format!("({})", inner.join(", "))
}

fn quantity(q: &Quantity) -> String {
    q.to_string()
}

fn quote(label: &str) -> String {
    let mut out = String::from("\"");
    for c in label.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Canonical one-line text for a puzzle. Labels and color names are
/// written verbatim, so they must be identifiers for the text to parse back.
pub fn serialize_puzzle(spec: &PuzzleSpec) -> String {
    let mut out = format!("puzzle {}", spec.kind());
    if let Some(label) = &spec.label {
        let _ = write!(out, " {}", quote(label));
    }
    let stmts: Vec<String> = match &spec.puzzle {
        Puzzle::Rate(q) => {
            let k = q.known();
            let given: Vec<String> = q
                .given()
                .iter()
                .map(|(f, v)| format!("{f} = {}", quantity(v)))
                .collect();
            vec![
                format!("work = {}", quantity(k.work())),
                format!("subjects = {}", quantity(k.subjects())),
                format!("time = {}", quantity(k.time())),
                format!("find {} where {}", q.target(), given.join(", ")),
            ]
        }
        Puzzle::Weighing(w) => vec![format!("objects = {}", w.n_objects())],
        Puzzle::Pigeonhole(p) => vec![
            format!("counts = {}", colors(p.colors())),
            format!("required = {}", p.required()),
        ],
        Puzzle::Transfer(t) => vec![
            format!("container_a = {}", colors(t.container_a())),
            format!("container_b = {}", colors(t.container_b())),
            format!("moved = {}", t.moved()),
            match t.query() {
                TransferQuery::DrawnIsMoved => "query = moved".to_string(),
                TransferQuery::DrawnHasColor(c) => format!("query = color {c}"),
            },
        ],
        Puzzle::Station(s) => vec![
            format!("early = {} min", s.early()),
            format!("saved = {} min", s.saved()),
        ],
    };
    let _ = write!(out, " {{ {} }}", stmts.join("; "));
    out
}
