//! Text syntax for building Hilbert functions.
//!
//! ```text
//! expr  := "table(" pairs ")" | "poly(" INT ")" | "free(" INT ";" ints ")"
//!        | "ci(" INT ";" ints? ")" | "shift(" expr "," INT ")"
//!        | "sum(" expr ("," expr)+ ")" | "scale(" expr "," INT ")"
//!        | "extend(" expr ")"
//! pairs := INT ":" INT ("," INT ":" INT)*
//! ints  := INT ("," INT)*
//! ```
//!
//! Whitespace is ignored. Constructor argument ranges are checked while
//! parsing so that every error carries a byte offset into the input.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{HilbertFunction, SeriesError};
use crate::numbers::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("parse error at offset {position}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        position: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("invalid arguments at offset {position}: {source}")]
    Elaboration {
        position: usize,
        #[source]
        source: SeriesError,
    },
}

/// Parsed function description. Elaborating a spec that came out of
/// [`parse_spec`] always succeeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionSpec {
    Table(Vec<(i64, Integer)>),
    Poly(i64),
    Free { n: i64, shifts: Vec<i64> },
    Ci { n: i64, degrees: Vec<i64> },
    Shift(Box<FunctionSpec>, i64),
    Sum(Vec<FunctionSpec>),
    Scale(Box<FunctionSpec>, i64),
    Extend(Box<FunctionSpec>),
}

impl FunctionSpec {
    pub fn elaborate(&self) -> Result<HilbertFunction, SeriesError> {
        match self {
            FunctionSpec::Table(pairs) => {
                let mut values = BTreeMap::new();
                for (k, v) in pairs {
                    *values.entry(*k).or_insert_with(Integer::zero) += v;
                }
                HilbertFunction::from_table(&values)
            }
            FunctionSpec::Poly(n) => HilbertFunction::polynomial_ring(arity(*n)?),
            FunctionSpec::Free { n, shifts } => HilbertFunction::free_module(arity(*n)?, shifts),
            FunctionSpec::Ci { n, degrees } => {
                HilbertFunction::complete_intersection(arity(*n)?, degrees)
            }
            FunctionSpec::Shift(inner, m) => Ok(inner.elaborate()?.shift(*m)),
            FunctionSpec::Sum(parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| {
                        SeriesError::InvalidArity("sum needs at least two terms".into())
                    })?
                    .elaborate()?;
                iter.try_fold(first, |acc, p| Ok(acc.add(&p.elaborate()?)))
            }
            FunctionSpec::Scale(inner, r) => {
                let r = u64::try_from(*r).map_err(|_| {
                    SeriesError::InvalidArity("scale factor must be at least 1".into())
                })?;
                inner.elaborate()?.scale(r)
            }
            FunctionSpec::Extend(inner) => Ok(inner.elaborate()?.extend()),
        }
    }

    /// Checks the constraints that belong to this node alone.
    fn check_local(&self) -> Result<(), SeriesError> {
        match self {
            FunctionSpec::Table(pairs) => {
                if let Some((k, v)) = pairs.iter().find(|(_, v)| v.is_negative()) {
                    return Err(SeriesError::NegativeValue {
                        degree: *k,
                        value: v.clone(),
                    });
                }
                let mut seen = std::collections::BTreeSet::new();
                if let Some((k, _)) = pairs.iter().find(|(k, _)| !seen.insert(*k)) {
                    return Err(SeriesError::InvalidArity(format!(
                        "degree {k} listed twice"
                    )));
                }
                if pairs.iter().all(|(_, v)| v.is_zero()) {
                    return Err(SeriesError::EmptyFunction);
                }
                Ok(())
            }
            FunctionSpec::Sum(parts) if parts.len() < 2 => Err(SeriesError::InvalidArity(
                "sum needs at least two terms".into(),
            )),
            FunctionSpec::Shift(..) | FunctionSpec::Sum(_) | FunctionSpec::Extend(_) => Ok(()),
            // Leaf constructors and scale: elaborating them is cheap and checks everything.
            FunctionSpec::Poly(_) | FunctionSpec::Free { .. } | FunctionSpec::Ci { .. } => {
                self.elaborate().map(|_| ())
            }
            FunctionSpec::Scale(_, r) => {
                if *r < 1 {
                    Err(SeriesError::InvalidArity(
                        "scale factor must be at least 1".into(),
                    ))
                } else {
                    Ok(())
                }
            }
        }
    }
}

fn arity(n: i64) -> Result<u32, SeriesError> {
    u32::try_from(n)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| SeriesError::InvalidArity(format!("variable count {n} must be positive")))
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSpec::Table(pairs) => {
                let body: Vec<String> = pairs.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                write!(f, "table({})", body.join(", "))
            }
            FunctionSpec::Poly(n) => write!(f, "poly({n})"),
            FunctionSpec::Free { n, shifts } => write!(f, "free({n}; {})", join(shifts)),
            FunctionSpec::Ci { n, degrees } if degrees.is_empty() => write!(f, "ci({n};)"),
            FunctionSpec::Ci { n, degrees } => write!(f, "ci({n}; {})", join(degrees)),
            FunctionSpec::Shift(inner, m) => write!(f, "shift({inner}, {m})"),
            FunctionSpec::Sum(parts) => write!(f, "sum({})", join(parts)),
            FunctionSpec::Scale(inner, r) => write!(f, "scale({inner}, {r})"),
            FunctionSpec::Extend(inner) => write!(f, "extend({inner})"),
        }
    }
}

pub fn parse_spec(text: &str) -> Result<FunctionSpec, SpecError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let spec = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(SpecError::Parse {
            position: tok.offset,
            expected: vec!["end of input".into()],
            found: tok.kind.to_string(),
        });
    }
    Ok(spec)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Int(Integer),
    Open,
    Close,
    Comma,
    Semicolon,
    Colon,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "`{s}`"),
            TokenKind::Int(v) => write!(f, "integer {v}"),
            TokenKind::Open => write!(f, "`(`"),
            TokenKind::Close => write!(f, "`)`"),
            TokenKind::Comma => write!(f, "`,`"),
            TokenKind::Semicolon => write!(f, "`;`"),
            TokenKind::Colon => write!(f, "`:`"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, SpecError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let punct = match c {
            b'(' => Some(TokenKind::Open),
            b')' => Some(TokenKind::Close),
            b',' => Some(TokenKind::Comma),
            b';' => Some(TokenKind::Semicolon),
            b':' => Some(TokenKind::Colon),
            _ => None,
        };
        if let Some(kind) = punct {
            tokens.push(Token {
                kind,
                offset: start,
            });
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == b'-' || c == b'+' {
            let negative = c == b'-';
            if !c.is_ascii_digit() {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                    i += 1;
                }
            }
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == digits_start {
                return Err(SpecError::Parse {
                    position: i,
                    expected: vec!["digit".into()],
                    found: describe_char(text, i),
                });
            }
            let mut value: Integer = text[digits_start..i]
                .parse()
                .expect("lexer only admits digits");
            if negative {
                value = -value;
            }
            tokens.push(Token {
                kind: TokenKind::Int(value),
                offset: start,
            });
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            tokens.push(Token {
                kind: TokenKind::Ident(text[start..i].to_string()),
                offset: start,
            });
        } else {
            return Err(SpecError::Parse {
                position: start,
                expected: vec!["constructor, integer or punctuation".into()],
                found: describe_char(text, start),
            });
        }
    }
    Ok(tokens)
}

fn describe_char(text: &str, offset: usize) -> String {
    match text.get(offset..).and_then(|s| s.chars().next()) {
        Some(ch) => format!("`{ch}`"),
        None => "end of input".into(),
    }
}

const CONSTRUCTORS: [&str; 8] = [
    "table", "poly", "free", "ci", "shift", "sum", "scale", "extend",
];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |t| t.offset)
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, SpecError> {
        Err(SpecError::Parse {
            position: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self
                .peek()
                .map_or_else(|| "end of input".into(), |t| t.kind.to_string()),
        })
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), SpecError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            self.error(&[&kind.to_string()])
        }
    }

    fn big_int(&mut self) -> Result<Integer, SpecError> {
        match self.peek() {
            Some(Token {
                kind: TokenKind::Int(v),
                ..
            }) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => self.error(&["integer"]),
        }
    }

    fn int(&mut self) -> Result<i64, SpecError> {
        let at = self.offset();
        let v = self.big_int()?;
        i64::try_from(&v).map_err(|_| SpecError::Parse {
            position: at,
            expected: vec!["integer within 64-bit range".into()],
            found: format!("integer {v}"),
        })
    }

    fn int_list(&mut self) -> Result<Vec<i64>, SpecError> {
        let mut out = vec![self.int()?];
        while self.eat(&TokenKind::Comma) {
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<FunctionSpec, SpecError> {
        let at = self.offset();
        let name = match self.peek() {
            Some(Token {
                kind: TokenKind::Ident(name),
                ..
            }) if CONSTRUCTORS.contains(&name.as_str()) => name.clone(),
            _ => {
                let names = CONSTRUCTORS.map(|c| format!("`{c}`"));
                return self.error(&names.iter().map(String::as_str).collect::<Vec<_>>());
            }
        };
        self.pos += 1;
        self.expect(TokenKind::Open)?;
        let spec = match name.as_str() {
            "table" => {
                let mut pairs = Vec::new();
                loop {
                    let k = self.int()?;
                    self.expect(TokenKind::Colon)?;
                    let v = self.big_int()?;
                    pairs.push((k, v));
                    if !self.eat(&TokenKind::Comma) {
                        break;
                    }
                }
                FunctionSpec::Table(pairs)
            }
            "poly" => FunctionSpec::Poly(self.int()?),
            "free" => {
                let n = self.int()?;
                self.expect(TokenKind::Semicolon)?;
                FunctionSpec::Free {
                    n,
                    shifts: self.int_list()?,
                }
            }
            "ci" => {
                let n = self.int()?;
                let mut degrees = Vec::new();
                if self.eat(&TokenKind::Semicolon)
                    && !matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Close))
                {
                    degrees = self.int_list()?;
                }
                FunctionSpec::Ci { n, degrees }
            }
            "shift" | "scale" => {
                let inner = Box::new(self.expr()?);
                self.expect(TokenKind::Comma)?;
                let m = self.int()?;
                if name == "shift" {
                    FunctionSpec::Shift(inner, m)
                } else {
                    FunctionSpec::Scale(inner, m)
                }
            }
            "sum" => {
                let mut parts = vec![self.expr()?];
                while self.eat(&TokenKind::Comma) {
                    parts.push(self.expr()?);
                }
                if parts.len() < 2 {
                    return self.error(&["`,`"]);
                }
                FunctionSpec::Sum(parts)
            }
            "extend" => FunctionSpec::Extend(Box::new(self.expr()?)),
            _ => unreachable!("constructor list checked above"),
        };
        self.expect(TokenKind::Close)?;
        spec.check_local()
            .map_err(|source| SpecError::Elaboration {
                position: at,
                source,
            })?;
        Ok(spec)
    }
}
