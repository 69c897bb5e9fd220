//! Line-oriented insertion/query traces.
//!
//! ```text
//! # comment
//! H 4
//! I 0 1
//! Q
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StreamOp {
    Insert(usize, usize),
    Query,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub n: usize,
    pub ops: Vec<StreamOp>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected header `H <n>` before any operation")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("unknown record `{0}`")]
    UnknownRecord(String),
    #[error("wrong number of fields")]
    Arity,
    #[error("`{0}` is not a non-negative integer")]
    BadNumber(String),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty trace")]
    Empty,
}

fn number(field: &str) -> Result<usize, ParseErrorKind> {
    field
        .parse()
        .map_err(|_| ParseErrorKind::BadNumber(field.to_string()))
}

impl Trace {
    pub fn parse(text: &str) -> Result<Trace, ParseError> {
        let mut n = None;
        let mut ops = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = content.split_whitespace().collect();
            let Some((&tag, args)) = fields.split_first() else {
                continue;
            };
            let fail = |kind| ParseError { line, kind };
            match (tag, n) {
                ("H", None) => match args {
                    [count] => n = Some(number(count).map_err(fail)?),
                    _ => return Err(fail(ParseErrorKind::Arity)),
                },
                ("H", Some(_)) => return Err(fail(ParseErrorKind::DuplicateHeader)),
                ("I" | "Q", None) => return Err(fail(ParseErrorKind::MissingHeader)),
                ("I", Some(n)) => {
                    let [u, v] = args else {
                        return Err(fail(ParseErrorKind::Arity));
                    };
                    let (u, v) = (number(u).map_err(fail)?, number(v).map_err(fail)?);
                    for vertex in [u, v] {
                        if vertex >= n {
                            return Err(fail(ParseErrorKind::VertexOutOfRange { vertex, n }));
                        }
                    }
                    if u == v {
                        return Err(fail(ParseErrorKind::SelfLoop(u)));
                    }
                    ops.push(StreamOp::Insert(u, v));
                }
                ("Q", Some(_)) => {
                    if !args.is_empty() {
                        return Err(fail(ParseErrorKind::Arity));
                    }
                    ops.push(StreamOp::Query);
                }
                (other, _) => return Err(fail(ParseErrorKind::UnknownRecord(other.to_string()))),
            }
        }
        match n {
            Some(n) => Ok(Trace { n, ops }),
            None => Err(ParseError {
                line: text.lines().count(),
                kind: ParseErrorKind::Empty,
            }),
        }
    }

    pub fn insertions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ops.iter().filter_map(|op| match *op {
            StreamOp::Insert(u, v) => Some((u, v)),
            StreamOp::Query => None,
        })
    }
}

impl FromStr for Trace {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Trace::parse(s)
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "H {}", self.n)?;
        for op in &self.ops {
            match op {
                StreamOp::Insert(u, v) => writeln!(f, "I {u} {v}")?,
                StreamOp::Query => writeln!(f, "Q")?,
            }
        }
        Ok(())
    }
}
