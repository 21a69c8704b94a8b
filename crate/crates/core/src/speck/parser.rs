use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::lexer::{tokenize, Token, TokenKind};
use super::{ParseError, ParseErrorKind, SourceSpan};
use crate::classics::{StationInstance, TransferInstance, TransferQuery};
use crate::model::{Puzzle, PuzzleKind, PuzzleSpec, Quantity};
use crate::pigeonhole::PigeonholeInstance;
use crate::rate::{RateField, RateQuery, RateScenario};
use crate::rational::Rational;
use crate::weighing::WeighingInstance;

/// Parses every puzzle block in `source`.
///
/// On failure returns every error found; parsing resumes after the closing
/// brace of a broken block, so one typo does not hide problems further down.
pub fn parse_puzzles(source: &str) -> Result<Vec<PuzzleSpec>, Vec<ParseError>> {
    let mut parser = Parser {
        tokens: tokenize(source),
        pos: 0,
        errors: Vec::new(),
    };
    let mut specs = Vec::new();
    loop {
        parser.skip_newlines();
        if parser.at(&TokenKind::Eof) {
            break;
        }
        if let Some(spec) = parser.block() {
            specs.push(spec);
        }
    }
    if parser.errors.is_empty() {
        Ok(specs)
    } else {
        Err(parser.errors)
    }
}

fn error(span: SourceSpan, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
    ParseError {
        span,
        kind,
        message: message.into(),
    }
}

#[derive(Debug, Clone)]
struct Number {
    numer: BigInt,
    denom: BigInt,
    span: SourceSpan,
}

#[derive(Debug, Clone)]
enum Value {
    Number(Number, Option<(String, SourceSpan)>),
    Colors(Vec<(String, SourceSpan, Number)>),
    Words(Vec<(String, SourceSpan)>),
}

#[derive(Debug, Clone)]
struct Assign {
    key: String,
    key_span: SourceSpan,
    value: Value,
    value_span: SourceSpan,
}

#[derive(Debug, Clone)]
enum Stmt {
    Assign(Assign),
    Find {
        span: SourceSpan,
        target: String,
        target_span: SourceSpan,
        assigns: Vec<Assign>,
    },
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    errors: Vec<ParseError>,
}

fn join(a: SourceSpan, b: SourceSpan) -> SourceSpan {
    if a.line != b.line {
        return a;
    }
    SourceSpan {
        line: a.line,
        column: a.column,
        length: b.column + b.length - a.column,
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn at(&self, kind: &TokenKind) -> bool {
        &self.peek().kind == kind
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.pos].clone();
        if tok.kind != TokenKind::Eof {
            self.pos += 1;
        }
        tok
    }

    fn skip_newlines(&mut self) {
        while self.at(&TokenKind::Newline) {
            self.pos += 1;
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let tok = self.peek();
        error(
            tok.span,
            ParseErrorKind::Syntax,
            format!("unexpected {}, expected {expected}", tok.kind.describe()),
        )
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<Token, ParseError> {
        if self.at(&kind) {
            Ok(self.bump())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn ident(&mut self, expected: &str) -> Result<(String, SourceSpan), ParseError> {
        match &self.peek().kind {
            TokenKind::Ident(s) => {
                let s = s.clone();
                Ok((s, self.bump().span))
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    /// Skips to just past the next `}`, or to the next `puzzle` that starts
    /// a line.
    fn recover(&mut self) {
        loop {
            match &self.peek().kind {
                TokenKind::Eof => return,
                TokenKind::RBrace => {
                    self.bump();
                    return;
                }
                TokenKind::Ident(s)
                    if s == "puzzle"
                        && self.pos > 0
                        && self.tokens[self.pos - 1].kind == TokenKind::Newline =>
                {
                    return
                }
                _ => {
                    self.bump();
                }
            }
        }
    }

    fn block(&mut self) -> Option<PuzzleSpec> {
        let start = self.pos;
        match self.block_inner() {
            Ok(spec) => spec,
            Err(e) => {
                self.errors.push(e);
                if self.pos == start {
                    self.bump();
                }
                self.recover();
                None
            }
        }
    }

    fn block_inner(&mut self) -> Result<Option<PuzzleSpec>, ParseError> {
        match &self.peek().kind {
            TokenKind::Ident(s) if s == "puzzle" => {
                self.bump();
            }
            _ => return Err(self.unexpected("`puzzle`")),
        }
        let (kind_name, kind_span) = self.ident("a puzzle kind")?;
        let kind = kind_name.parse::<PuzzleKind>().map_err(|()| {
            error(
                kind_span,
                ParseErrorKind::UnknownKind,
                format!(
                    "unknown puzzle kind `{kind_name}`, expected one of rate, weighing, pigeonhole, transfer, station"
                ),
            )
        })?;
        let label = match &self.peek().kind {
            TokenKind::Str(s) => {
                let s = s.clone();
                self.bump();
                Some(s)
            }
            _ => None,
        };
        self.skip_newlines();
        self.expect(TokenKind::LBrace, "`{`")?;
        let mut stmts = Vec::new();
        loop {
            while matches!(self.peek().kind, TokenKind::Newline | TokenKind::Semi) {
                self.bump();
            }
            if self.at(&TokenKind::RBrace) {
                self.bump();
                break;
            }
            if matches!(&self.peek().kind, TokenKind::Ident(s) if s == "puzzle") {
                return Err(self.unexpected("`}` before the next puzzle"));
            }
            stmts.push(self.stmt()?);
            match self.peek().kind {
                TokenKind::Semi | TokenKind::Newline | TokenKind::RBrace => {}
                _ => return Err(self.unexpected("`;`, end of line or `}`")),
            }
        }
        match build(kind, kind_span, stmts) {
            Ok(puzzle) => Ok(Some(PuzzleSpec { label, puzzle })),
            Err(errs) => {
                self.errors.extend(errs);
                Ok(None)
            }
        }
    }

    fn stmt(&mut self) -> Result<Stmt, ParseError> {
        let (word, span) = self.ident("a key or `find`")?;
        if word == "find" {
            let (target, target_span) = self.ident("the unknown to solve for")?;
            match &self.peek().kind {
                TokenKind::Ident(w) if w == "where" => {
                    self.bump();
                }
                _ => return Err(self.unexpected("`where`")),
            }
            let mut assigns = Vec::new();
            loop {
                let (key, key_span) = self.ident("a key")?;
                assigns.push(self.assign(key, key_span)?);
                if !self.at(&TokenKind::Comma) {
                    break;
                }
                self.bump();
                self.skip_newlines();
            }
            return Ok(Stmt::Find {
                span,
                target,
                target_span,
                assigns,
            });
        }
        Ok(Stmt::Assign(self.assign(word, span)?))
    }

    fn assign(&mut self, key: String, key_span: SourceSpan) -> Result<Assign, ParseError> {
        self.expect(TokenKind::Eq, "`=`")?;
        let (value, value_span) = self.value()?;
        Ok(Assign {
            key,
            key_span,
            value,
            value_span,
        })
    }

    fn number(&mut self) -> Result<Number, ParseError> {
        let first = self.peek().clone();
        let TokenKind::Int(numer) = first.kind else {
            return Err(self.unexpected("a number"));
        };
        self.bump();
        if !self.at(&TokenKind::Slash) {
            return Ok(Number {
                numer,
                denom: BigInt::from(1),
                span: first.span,
            });
        }
        self.bump();
        let last = self.peek().clone();
        let TokenKind::Int(denom) = last.kind else {
            return Err(self.unexpected("a denominator"));
        };
        self.bump();
        let span = join(first.span, last.span);
        if denom.is_zero() {
            return Err(error(
                span,
                ParseErrorKind::InvalidValue,
                "zero denominator",
            ));
        }
        Ok(Number { numer, denom, span })
    }

    fn value(&mut self) -> Result<(Value, SourceSpan), ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Int(_) => {
                let n = self.number()?;
                let mut span = n.span;
                let unit = match &self.peek().kind {
                    TokenKind::Ident(w) => {
                        let w = w.clone();
                        let s = self.bump().span;
                        span = join(span, s);
                        Some((w, s))
                    }
                    _ => None,
                };
                Ok((Value::Number(n, unit), span))
            }
            TokenKind::LParen => {
                let open = self.bump().span;
                let mut entries = Vec::new();
                self.skip_newlines();
                if !self.at(&TokenKind::RParen) {
                    loop {
                        self.skip_newlines();
                        let (name, name_span) = self.ident("a color name")?;
                        self.expect(TokenKind::Colon, "`:`")?;
                        let n = self.number()?;
                        entries.push((name, name_span, n));
                        self.skip_newlines();
                        if !self.at(&TokenKind::Comma) {
                            break;
                        }
                        self.bump();
                    }
                }
                let close = self.expect(TokenKind::RParen, "`,` or `)`")?.span;
                Ok((Value::Colors(entries), join(open, close)))
            }
            TokenKind::Ident(_) => {
                let mut words = Vec::new();
                while let TokenKind::Ident(w) = &self.peek().kind {
                    let w = w.clone();
                    words.push((w, self.bump().span));
                }
                let span = join(words[0].1, words[words.len() - 1].1);
                Ok((Value::Words(words), span))
            }
            _ => Err(self.unexpected("a number, a color list or a word")),
        }
    }
}

fn allowed_keys(kind: PuzzleKind) -> &'static [&'static str] {
    match kind {
        PuzzleKind::Rate => &["work", "subjects", "time"],
        PuzzleKind::Weighing => &["objects"],
        PuzzleKind::Pigeonhole => &["counts", "required"],
        PuzzleKind::Transfer => &["container_a", "container_b", "moved", "query"],
        PuzzleKind::Station => &["early", "saved"],
    }
}

fn is_time_unit(w: &str) -> bool {
    w == "min" || w == "h"
}

struct Block {
    kind_span: SourceSpan,
    assigns: Vec<Assign>,
    errors: Vec<ParseError>,
}

impl Block {
    fn get(&self, key: &str) -> &Assign {
        self.assigns
            .iter()
            .find(|a| a.key == key)
            .expect("presence checked")
    }

    fn record<T>(&mut self, r: Result<T, ParseError>) -> Option<T> {
        r.map_err(|e| self.errors.push(e)).ok()
    }
}

/// Checks keys against the kind's key set, recording unknown, duplicate
/// and missing keys.
fn check_keys(
    kind: PuzzleKind,
    kind_span: SourceSpan,
    assigns: &[Assign],
    errors: &mut Vec<ParseError>,
) {
    let allowed = allowed_keys(kind);
    for (i, a) in assigns.iter().enumerate() {
        if !allowed.contains(&a.key.as_str()) {
            errors.push(error(
                a.key_span,
                ParseErrorKind::UnknownKey,
                format!(
                    "unknown key `{}` for a {kind} puzzle, expected one of {}",
                    a.key,
                    allowed.join(", ")
                ),
            ));
        } else if assigns[..i].iter().any(|b| b.key == a.key) {
            errors.push(error(
                a.key_span,
                ParseErrorKind::DuplicateKey,
                format!("key `{}` given twice", a.key),
            ));
        }
    }
    for key in allowed {
        if !assigns.iter().any(|a| a.key == *key) {
            errors.push(error(
                kind_span,
                ParseErrorKind::MissingKey,
                format!("{kind} puzzle is missing key `{key}`"),
            ));
        }
    }
}

fn build(
    kind: PuzzleKind,
    kind_span: SourceSpan,
    stmts: Vec<Stmt>,
) -> Result<Puzzle, Vec<ParseError>> {
    let mut errors = Vec::new();
    let mut assigns = Vec::new();
    let mut find = None;
    for stmt in stmts {
        match stmt {
            Stmt::Assign(a) => assigns.push(a),
            Stmt::Find { span, .. } if kind != PuzzleKind::Rate => errors.push(error(
                span,
                ParseErrorKind::UnknownKey,
                format!("`find` is only valid in rate puzzles, not {kind}"),
            )),
            Stmt::Find { span, .. } if find.is_some() => errors.push(error(
                span,
                ParseErrorKind::DuplicateKey,
                "only one `find` clause is allowed",
            )),
            Stmt::Find {
                span,
                target,
                target_span,
                assigns,
            } => {
                find = Some((span, target, target_span, assigns));
            }
        }
    }
    check_keys(kind, kind_span, &assigns, &mut errors);
    if kind == PuzzleKind::Rate && find.is_none() {
        errors.push(error(
            kind_span,
            ParseErrorKind::MissingKey,
            "rate puzzle is missing a `find` clause",
        ));
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let mut block = Block {
        kind_span,
        assigns,
        errors,
    };
    let puzzle = match kind {
        PuzzleKind::Rate => build_rate(&mut block, find.expect("checked above")),
        PuzzleKind::Weighing => build_weighing(&mut block),
        PuzzleKind::Pigeonhole => build_pigeonhole(&mut block),
        PuzzleKind::Transfer => build_transfer(&mut block),
        PuzzleKind::Station => build_station(&mut block),
    };
    match puzzle {
        Some(p) if block.errors.is_empty() => Ok(p),
        _ => Err(block.errors),
    }
}

fn reject_negative(n: &Number) -> Result<(), ParseError> {
    if n.numer.is_negative() || n.denom.is_negative() {
        return Err(error(
            n.span,
            ParseErrorKind::NegativeCount,
            "values must not be negative",
        ));
    }
    Ok(())
}

type Word = (String, SourceSpan);

fn as_number<'a>(a: &'a Assign, what: &str) -> Result<(&'a Number, Option<&'a Word>), ParseError> {
    match &a.value {
        Value::Number(n, unit) => Ok((n, unit.as_ref())),
        _ => Err(error(
            a.value_span,
            ParseErrorKind::TypeMismatch,
            format!("`{}` expects {what}", a.key),
        )),
    }
}

fn integer(n: &Number, key: &str) -> Result<u64, ParseError> {
    reject_negative(n)?;
    if n.denom != BigInt::from(1) {
        return Err(error(
            n.span,
            ParseErrorKind::TypeMismatch,
            format!("`{key}` expects a whole number"),
        ));
    }
    n.numer.to_u64().ok_or_else(|| {
        error(
            n.span,
            ParseErrorKind::InvalidValue,
            format!("`{key}` is too large"),
        )
    })
}

fn rational(n: &Number) -> Result<Rational, ParseError> {
    reject_negative(n)?;
    Ok(Rational::new(n.numer.clone(), n.denom.clone()).expect("denominator checked nonzero"))
}

/// Whole-number count; any trailing word is a label, except a time unit.
fn take_count(a: &Assign) -> Result<u64, ParseError> {
    let (n, unit) = as_number(a, "a whole number")?;
    if let Some((u, span)) = unit.filter(|(u, _)| is_time_unit(u)) {
        return Err(error(
            *span,
            ParseErrorKind::BadUnit,
            format!("`{}` is a count, not a time (got `{u}`)", a.key),
        ));
    }
    integer(n, &a.key)
}

fn take_positive_count(a: &Assign) -> Result<u64, ParseError> {
    let n = take_count(a)?;
    if n == 0 {
        return Err(error(
            a.value_span,
            ParseErrorKind::InvalidValue,
            format!("`{}` must be at least 1", a.key),
        ));
    }
    Ok(n)
}

fn take_time(a: &Assign) -> Result<Quantity, ParseError> {
    let (n, unit) = as_number(a, "a time such as `30 min` or `1 h`")?;
    let q = match unit {
        Some((u, _)) if u == "min" => Quantity::minutes(rational(n)?),
        Some((u, _)) if u == "h" => Quantity::hours(rational(n)?),
        Some((u, span)) => {
            return Err(error(
                *span,
                ParseErrorKind::BadUnit,
                format!("unknown time unit `{u}`, expected `min` or `h`"),
            ))
        }
        None => {
            return Err(error(
                n.span,
                ParseErrorKind::BadUnit,
                format!("`{}` needs a time unit, `min` or `h`", a.key),
            ))
        }
    };
    Ok(q)
}

fn take_count_quantity(a: &Assign) -> Result<Quantity, ParseError> {
    let (n, unit) = as_number(a, "a number")?;
    let magnitude = rational(n)?;
    match unit {
        Some((u, span)) if is_time_unit(u) => Err(error(
            *span,
            ParseErrorKind::BadUnit,
            format!("`{}` is a count, not a time (got `{u}`)", a.key),
        )),
        Some((u, _)) => Ok(Quantity::labeled(magnitude, u.clone())),
        None => Ok(Quantity::count(magnitude)),
    }
}

fn require_positive(a: &Assign, q: &Quantity) -> Result<(), ParseError> {
    if !q.magnitude.is_positive() {
        return Err(error(
            a.value_span,
            ParseErrorKind::InvalidValue,
            format!("`{}` must be positive", a.key),
        ));
    }
    Ok(())
}

fn take_colors(a: &Assign) -> Result<Vec<(String, u64)>, ParseError> {
    let Value::Colors(entries) = &a.value else {
        return Err(error(
            a.value_span,
            ParseErrorKind::TypeMismatch,
            format!(
                "`{}` expects a color list such as `(red: 2, blue: 3)`",
                a.key
            ),
        ));
    };
    let mut out: Vec<(String, u64)> = Vec::new();
    for (name, span, n) in entries {
        if out.iter().any(|(other, _)| other == name) {
            return Err(error(
                *span,
                ParseErrorKind::DuplicateKey,
                format!("color `{name}` listed twice"),
            ));
        }
        out.push((name.clone(), integer(n, name)?));
    }
    Ok(out)
}

fn take_query(a: &Assign) -> Result<TransferQuery, ParseError> {
    let mismatch = || {
        error(
            a.value_span,
            ParseErrorKind::TypeMismatch,
            "`query` expects `moved` or `color <name>`",
        )
    };
    let Value::Words(words) = &a.value else {
        return Err(mismatch());
    };
    let words: Vec<&str> = words.iter().map(|(w, _)| w.as_str()).collect();
    match words.as_slice() {
        ["moved"] => Ok(TransferQuery::DrawnIsMoved),
        ["color", c] => Ok(TransferQuery::DrawnHasColor(c.to_string())),
        _ => Err(mismatch()),
    }
}

fn instance_error(span: SourceSpan, e: crate::Error) -> ParseError {
    let msg = match e {
        crate::Error::InvalidInstance(m) => m,
        other => other.to_string(),
    };
    error(span, ParseErrorKind::InvalidValue, msg)
}

type FindClause = (SourceSpan, String, SourceSpan, Vec<Assign>);

fn build_rate(
    b: &mut Block,
    (find_span, target, target_span, given): FindClause,
) -> Option<Puzzle> {
    let quantity = |a: &Assign| -> Result<Quantity, ParseError> {
        let q = if a.key == "time" {
            take_time(a)?
        } else {
            take_count_quantity(a)?
        };
        require_positive(a, &q)?;
        Ok(q)
    };
    let work = b.record(quantity(b.get("work")));
    let subjects = b.record(quantity(b.get("subjects")));
    let time = b.record(quantity(b.get("time")));

    let target = match target.parse::<RateField>() {
        Ok(t) => Some(t),
        Err(()) => {
            b.errors.push(error(
                target_span,
                ParseErrorKind::UnknownKey,
                format!("cannot solve for `{target}`, expected work, subjects or time"),
            ));
            None
        }
    };
    let mut values = Vec::new();
    if let Some(target) = target {
        let expected: Vec<&str> = RateField::ALL
            .iter()
            .filter(|f| **f != target)
            .map(|f| f.as_str())
            .collect();
        let mut errs = Vec::new();
        for (i, a) in given.iter().enumerate() {
            if !expected.contains(&a.key.as_str()) {
                errs.push(error(
                    a.key_span,
                    ParseErrorKind::UnknownKey,
                    format!(
                        "unexpected `{}` when solving for {target}, expected {}",
                        a.key,
                        expected.join(" and ")
                    ),
                ));
            } else if given[..i].iter().any(|x| x.key == a.key) {
                errs.push(error(
                    a.key_span,
                    ParseErrorKind::DuplicateKey,
                    format!("key `{}` given twice", a.key),
                ));
            } else if let Some(q) = b.record(quantity(a)) {
                values.push((a.key.parse::<RateField>().expect("checked"), q));
            }
        }
        for key in &expected {
            if !given.iter().any(|a| a.key == *key) {
                errs.push(error(
                    find_span,
                    ParseErrorKind::MissingKey,
                    format!("`find` clause is missing `{key}`"),
                ));
            }
        }
        b.errors.extend(errs);
    }
    let (work, subjects, time, target) = (work?, subjects?, time?, target?);
    if !b.errors.is_empty() {
        return None;
    }
    let kind_span = b.kind_span;
    let scenario = b.record(
        RateScenario::new(work, subjects, time).map_err(|e| instance_error(kind_span, e)),
    )?;
    let query = b.record(
        RateQuery::new(scenario, target, values).map_err(|e| instance_error(find_span, e)),
    )?;
    Some(Puzzle::Rate(query))
}

fn build_weighing(b: &mut Block) -> Option<Puzzle> {
    let a = b.get("objects").clone();
    let n = b.record(take_positive_count(&a))?;
    let inst = b.record(WeighingInstance::new(n).map_err(|e| instance_error(a.value_span, e)))?;
    Some(Puzzle::Weighing(inst))
}

fn build_pigeonhole(b: &mut Block) -> Option<Puzzle> {
    let counts = b.get("counts").clone();
    let required = b.get("required").clone();
    let colors = b.record(take_colors(&counts));
    let r = b.record(take_positive_count(&required));
    let (colors, r) = (colors?, r?);
    if colors.is_empty() {
        b.errors.push(error(
            counts.value_span,
            ParseErrorKind::InvalidValue,
            "need at least one color",
        ));
        return None;
    }
    let inst = b.record(
        PigeonholeInstance::new(colors, r).map_err(|e| instance_error(counts.value_span, e)),
    )?;
    Some(Puzzle::Pigeonhole(inst))
}

fn build_transfer(b: &mut Block) -> Option<Puzzle> {
    let moved = b.get("moved").clone();
    let ca = b.record(take_colors(b.get("container_a")));
    let cb = b.record(take_colors(b.get("container_b")));
    let m = b.record(take_positive_count(&moved));
    let q = b.record(take_query(b.get("query")));
    let (ca, cb, m, q) = (ca?, cb?, m?, q?);
    let inst = b.record(
        TransferInstance::new(ca, cb, m, q).map_err(|e| instance_error(moved.value_span, e)),
    )?;
    Some(Puzzle::Transfer(inst))
}

fn build_station(b: &mut Block) -> Option<Puzzle> {
    let time = |a: &Assign| -> Result<Rational, ParseError> {
        let q = take_time(a)?;
        require_positive(a, &q)?;
        Ok(q.magnitude)
    };
    let saved_span = b.get("saved").value_span;
    let early = b.record(time(b.get("early")));
    let saved = b.record(time(b.get("saved")));
    let (early, saved) = (early?, saved?);
    let inst =
        b.record(StationInstance::new(early, saved).map_err(|e| instance_error(saved_span, e)))?;
    Some(Puzzle::Station(inst))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_error(src: &str) -> ParseError {
        let errs = parse_puzzles(src).unwrap_err();
        assert_eq!(errs.len(), 1, "{errs:?}");
        errs.into_iter().next().unwrap()
    }

    #[test]
    fn empty_input_is_empty_list() {
        assert_eq!(parse_puzzles("").unwrap(), vec![]);
        assert_eq!(parse_puzzles("\n# nothing here\n\n").unwrap(), vec![]);
    }

    #[test]
    fn problem_one_block() {
        let specs = parse_puzzles(
            "puzzle rate { work = 6 mice; subjects = 6 cats; time = 6 min; find subjects where work = 100, time = 50 min }",
        )
        .unwrap();
        assert_eq!(specs.len(), 1);
        let Puzzle::Rate(q) = &specs[0].puzzle else {
            panic!("expected rate")
        };
        assert_eq!(q.target(), RateField::Subjects);
        assert_eq!(q.known().work(), &Quantity::labeled(6u64, "mice"));
        assert_eq!(q.known().time(), &Quantity::minutes(6u64));
        assert_eq!(
            q.given_value(RateField::Work),
            Some(&Rational::from(100i64))
        );
        assert_eq!(q.given_value(RateField::Time), Some(&Rational::from(50i64)));
    }

    #[test]
    fn hours_become_minutes() {
        let specs = parse_puzzles(
            "puzzle rate {\n  work = 150 mice\n  subjects = 100 cats\n  time = 1 h\n  find subjects where work = 60, time = 30 min\n}",
        )
        .unwrap();
        let Puzzle::Rate(q) = &specs[0].puzzle else {
            panic!("expected rate")
        };
        assert_eq!(q.known().time().magnitude, Rational::from(60i64));
    }

    #[test]
    fn negative_count_points_at_literal() {
        let e = one_error("puzzle weighing { objects = -3 }");
        assert_eq!(e.kind, ParseErrorKind::NegativeCount);
        assert_eq!(
            e.span,
            SourceSpan {
                line: 1,
                column: 29,
                length: 2
            }
        );
    }

    #[test]
    fn unknown_kind() {
        let e = one_error("puzzle socks { pairs = 3 }");
        assert_eq!(e.kind, ParseErrorKind::UnknownKind);
        assert_eq!(
            e.span,
            SourceSpan {
                line: 1,
                column: 8,
                length: 5
            }
        );
        assert!(e.message.contains("socks") && e.message.contains("pigeonhole"));
    }

    #[test]
    fn missing_and_duplicate_keys() {
        let e = one_error("puzzle pigeonhole { counts = (a: 3) }");
        assert_eq!(e.kind, ParseErrorKind::MissingKey);
        assert!(e.message.contains("required"));

        let e = one_error("puzzle weighing { objects = 3; objects = 4 }");
        assert_eq!(e.kind, ParseErrorKind::DuplicateKey);
        assert_eq!(e.span.column, 32);

        let e = one_error("puzzle weighing { objects = 3; coins = 4 }");
        assert_eq!(e.kind, ParseErrorKind::UnknownKey);
        assert!(e.message.contains("objects"));

        let e = one_error("puzzle rate { work = 1; subjects = 1; time = 1 min }");
        assert_eq!(e.kind, ParseErrorKind::MissingKey);

        let e = one_error(
            "puzzle rate { work = 1; subjects = 1; time = 1 min; find subjects where work = 3 }",
        );
        assert_eq!(e.kind, ParseErrorKind::MissingKey);
        assert!(e.message.contains("time"));
    }

    #[test]
    fn units_and_types() {
        let e = one_error("puzzle rate { work = 1; subjects = 1; time = 6; find work where subjects = 1, time = 1 min }");
        assert_eq!(e.kind, ParseErrorKind::BadUnit);
        let e = one_error("puzzle weighing { objects = 3 min }");
        assert_eq!(e.kind, ParseErrorKind::BadUnit);
        assert_eq!(e.span.column, 31);
        let e = one_error("puzzle station { early = 3 days; saved = 1 min }");
        assert_eq!(e.kind, ParseErrorKind::BadUnit);
        let e = one_error("puzzle weighing { objects = 7/2 }");
        assert_eq!(e.kind, ParseErrorKind::TypeMismatch);
        let e = one_error("puzzle weighing { objects = (a: 1) }");
        assert_eq!(e.kind, ParseErrorKind::TypeMismatch);
        let e = one_error(
            "puzzle transfer { container_a = (a: 1); container_b = (); moved = 1; query = 3 }",
        );
        assert_eq!(e.kind, ParseErrorKind::TypeMismatch);
    }

    #[test]
    fn invalid_values() {
        assert_eq!(
            one_error("puzzle weighing { objects = 0 }").kind,
            ParseErrorKind::InvalidValue
        );
        assert_eq!(
            one_error("puzzle station { early = 5 min; saved = 11 min }").kind,
            ParseErrorKind::InvalidValue
        );
        assert_eq!(
            one_error("puzzle transfer { container_a = (a: 1); container_b = (); moved = 2; query = moved }").kind,
            ParseErrorKind::InvalidValue
        );
        assert_eq!(
            one_error("puzzle rate { work = 0; subjects = 1; time = 1 min; find work where subjects = 1, time = 1 min }")
                .kind,
            ParseErrorKind::InvalidValue
        );
        assert_eq!(
            one_error("puzzle weighing { objects = 1/0 }").kind,
            ParseErrorKind::InvalidValue
        );
    }

    #[test]
    fn recovers_at_block_boundaries() {
        let src = "puzzle weighing { objects = -1 }\npuzzle weighing { objects = 9 }\npuzzle nope { }\npuzzle weighing { objects 4 }\npuzzle weighing { objects = 2 }\n";
        let errs = parse_puzzles(src).unwrap_err();
        let kinds: Vec<_> = errs.iter().map(|e| (e.kind, e.span.line)).collect();
        assert_eq!(
            kinds,
            vec![
                (ParseErrorKind::NegativeCount, 1),
                (ParseErrorKind::UnknownKind, 3),
                (ParseErrorKind::Syntax, 4)
            ]
        );
    }

    #[test]
    fn missing_closing_brace_does_not_swallow_next_block() {
        let errs = parse_puzzles("puzzle weighing { objects = 3\npuzzle weighing { objects = -2 }")
            .unwrap_err();
        assert_eq!(errs.len(), 2);
        assert_eq!(errs[0].kind, ParseErrorKind::Syntax);
        assert_eq!(errs[1].kind, ParseErrorKind::NegativeCount);
    }

    #[test]
    fn labels_and_queries() {
        let specs = parse_puzzles(
            "puzzle transfer \"urns\" {\n container_a = (red: 2,\n   blue: 2)\n container_b = (blue: 2)\n moved = 1\n query = color red\n}",
        )
        .unwrap();
        assert_eq!(specs[0].label.as_deref(), Some("urns"));
        let Puzzle::Transfer(t) = &specs[0].puzzle else {
            panic!("expected transfer")
        };
        assert_eq!(t.query(), &TransferQuery::DrawnHasColor("red".into()));
        assert_eq!(t.container_a().len(), 2);
    }

    #[test]
    fn errors_are_deterministic() {
        let src = "puzzle rate { work = -1; subjects = x; time = 3 h; time = 2 min; find speed where a = 1 }";
        assert_eq!(parse_puzzles(src), parse_puzzles(src));
    }
}
