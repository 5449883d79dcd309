//! Prefix construction expressions: `K n`, `I n`, `union A B`, `join A B`.
//!
//! `join union K 3 K 1 union K 3 K 1` is `G^(2)`. Parentheses and commas
//! are ignored, so `join(union(K 3, K 1), union(K 3, K 1))` also parses.

use extcrit::{BasicKind, Graph, GraphError};

#[derive(Debug)]
pub enum ExprError {
    UnexpectedEnd,
    UnknownToken(String),
    BadCount(String),
    Trailing(String),
    Graph(GraphError),
}

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExprError::UnexpectedEnd => f.write_str("expression ends early"),
            ExprError::UnknownToken(t) => {
                write!(f, "unknown token {t:?}; expected K, I, union or join")
            }
            ExprError::BadCount(t) => write!(f, "expected a vertex count, got {t:?}"),
            ExprError::Trailing(t) => write!(f, "unexpected trailing input starting at {t:?}"),
            ExprError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ExprError {}

fn tokens(src: &str) -> Vec<String> {
    src.replace(['(', ')', ','], " ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn parse<'a>(toks: &mut impl Iterator<Item = &'a String>) -> Result<Graph, ExprError> {
    let head = toks.next().ok_or(ExprError::UnexpectedEnd)?;
    let basic = |kind, toks: &mut dyn Iterator<Item = &'a String>| {
        let n = toks.next().ok_or(ExprError::UnexpectedEnd)?;
        let n: usize = n.parse().map_err(|_| ExprError::BadCount(n.clone()))?;
        Graph::basic(kind, n).map_err(ExprError::Graph)
    };
    match head.as_str() {
        "K" | "k" => basic(BasicKind::Complete, toks),
        "I" | "i" => basic(BasicKind::Edgeless, toks),
        "union" | "join" => {
            let a = parse(toks)?;
            let b = parse(toks)?;
            let g = if head == "union" {
                Graph::union(&a, &b)
            } else {
                Graph::join(&a, &b)
            };
            g.map_err(ExprError::Graph)
        }
        other => Err(ExprError::UnknownToken(other.to_string())),
    }
}

pub fn evaluate(src: &str) -> Result<Graph, ExprError> {
    let toks = tokens(src);
    let mut it = toks.iter();
    let g = parse(&mut it)?;
    match it.next() {
        Some(t) => Err(ExprError::Trailing(t.clone())),
        None => Ok(g),
    }
}
