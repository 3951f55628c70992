//! Resolution of command-line graph arguments.
//!
//! An argument containing `(` is a construction expression, a path to an
//! existing file is an edge list, and anything else is a graph6 string.
//! Without arguments, graph6 lines are read from standard input.

use std::io::BufRead;
use std::path::Path;

use amoeba_core::Graph;
use thiserror::Error;

use crate::{edgelist, expr, graph6};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("expression `{text}`: {source}")]
    Expr { text: String, source: expr::ParseError },
    #[error("expression `{text}`: {source}")]
    Eval { text: String, source: amoeba_core::Error },
    #[error("edge list {path}: {source}")]
    EdgeList { path: String, source: edgelist::EdgeListError },
    #[error("graph6 `{text}`: {source}")]
    Graph6 { text: String, source: graph6::Graph6Error },
    #[error("reading {what}: {source}")]
    Io { what: String, source: std::io::Error },
}

/// A graph together with the text it came from.
#[derive(Clone, Debug)]
pub struct Named {
    pub source: String,
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn resolve(arg: &str) -> Result<Named, InputError> {
    let text = arg.trim();
    if text.contains('(') {
        let spec = expr::parse(text).map_err(|source| InputError::Expr {
            text: text.to_string(),
            source,
        })?;
        let graph = spec.eval().map_err(|source| InputError::Eval {
            text: text.to_string(),
            source,
        })?;
        return Ok(Named {
            source: text.to_string(),
            graph,
            warnings: spec.warnings(),
        });
    }
    if Path::new(text).is_file() {
        let content = std::fs::read_to_string(text).map_err(|source| InputError::Io {
            what: text.to_string(),
            source,
        })?;
        let graph = edgelist::parse(&content).map_err(|source| InputError::EdgeList {
            path: text.to_string(),
            source,
        })?;
        return Ok(Named {
            source: text.to_string(),
            graph,
            warnings: Vec::new(),
        });
    }
    let graph = graph6::decode(text).map_err(|source| InputError::Graph6 {
        text: text.to_string(),
        source,
    })?;
    Ok(Named {
        source: text.to_string(),
        graph,
        warnings: Vec::new(),
    })
}

/// Non-empty graph6 lines from a reader.
pub fn read_graph6_lines(reader: impl BufRead) -> Result<Vec<Named>, InputError> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line.map_err(|source| InputError::Io {
            what: "standard input".into(),
            source,
        })?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let graph = graph6::decode(text).map_err(|source| InputError::Graph6 {
            text: text.to_string(),
            source,
        })?;
        out.push(Named {
            source: text.to_string(),
            graph,
            warnings: Vec::new(),
        });
    }
    Ok(out)
}

/// Resolves each argument, or reads standard input when there are none.
pub fn resolve_all(args: &[String]) -> Result<Vec<Named>, InputError> {
    if args.is_empty() || args == ["-"] {
        return read_graph6_lines(std::io::stdin().lock());
    }
    args.iter().map(|a| resolve(a)).collect()
}
