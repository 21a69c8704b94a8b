use num_bigint::BigInt;

use super::SourceSpan;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    /// Unsigned digits, or digits with a leading `-`.
    Int(BigInt),
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Comma,
    Colon,
    Eq,
    Slash,
    Newline,
    /// Anything the lexer could not make sense of, with a description.
    Invalid(String),
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("`{s}`"),
            TokenKind::Int(n) => format!("`{n}`"),
            TokenKind::Str(s) => format!("string {s:?}"),
            TokenKind::LBrace => "`{`".into(),
            TokenKind::RBrace => "`}`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Semi => "`;`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Colon => "`:`".into(),
            TokenKind::Eq => "`=`".into(),
            TokenKind::Slash => "`/`".into(),
            TokenKind::Newline => "end of line".into(),
            TokenKind::Invalid(s) => s.clone(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: SourceSpan,
}

pub fn tokenize(source: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    for (line_idx, line) in source.split('\n').enumerate() {
        let line_no = line_idx + 1;
        let chars: Vec<char> = line.trim_end_matches('\r').chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let start = i;
            let span = |len: usize| SourceSpan {
                line: line_no,
                column: start + 1,
                length: len,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '{' => Some(TokenKind::LBrace),
                '}' => Some(TokenKind::RBrace),
                '(' => Some(TokenKind::LParen),
                ')' => Some(TokenKind::RParen),
                ';' => Some(TokenKind::Semi),
                ',' => Some(TokenKind::Comma),
                ':' => Some(TokenKind::Colon),
                '=' => Some(TokenKind::Eq),
                '/' => Some(TokenKind::Slash),
                _ => None,
            };
            if let Some(kind) = single {
                tokens.push(Token {
                    kind,
                    span: span(1),
                });
                i += 1;
                continue;
            }
            if c.is_ascii_digit()
                || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
            {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text.parse().expect("digits with optional sign");
                tokens.push(Token {
                    kind: TokenKind::Int(n),
                    span: span(i - start),
                });
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                tokens.push(Token {
                    kind: TokenKind::Ident(text),
                    span: span(i - start),
                });
                continue;
            }
            if c == '"' {
                i += 1;
                let mut text = String::new();
                let mut closed = false;
                while i < chars.len() {
                    match chars[i] {
                        '"' => {
                            closed = true;
                            i += 1;
                            break;
                        }
                        '\\' if i + 1 < chars.len() && matches!(chars[i + 1], '"' | '\\') => {
                            text.push(chars[i + 1]);
                            i += 2;
                        }
                        ch => {
                            text.push(ch);
                            i += 1;
                        }
                    }
                }
                let kind = if closed {
                    TokenKind::Str(text)
                } else {
                    TokenKind::Invalid("unterminated string".into())
                };
                tokens.push(Token {
                    kind,
                    span: span(i - start),
                });
                continue;
            }
            tokens.push(Token {
                kind: TokenKind::Invalid(format!("unexpected character `{c}`")),
                span: span(1),
            });
            i += 1;
        }
        tokens.push(Token {
            kind: TokenKind::Newline,
            span: SourceSpan {
                line: line_no,
                column: chars.len() + 1,
                length: 0,
            },
        });
    }
    let last = tokens.last().map(|t| t.span).unwrap_or(SourceSpan {
        line: 1,
        column: 1,
        length: 0,
    });
    tokens.push(Token {
        kind: TokenKind::Eof,
        span: last,
    });
    tokens
}
