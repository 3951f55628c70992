//! Plain edge lists: a line `n m`, then `m` lines `i j` with 1-based
//! vertices. Blank lines and `#` comments are ignored.

use amoeba_core::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} edges, found {found}")]
    Count { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] amoeba_core::Error),
}

fn numbers(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let syntax = |msg: &str| EdgeListError::Syntax {
        line,
        msg: msg.to_string(),
    };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(|| syntax("expected two integers"))?;
    let b = it.next().ok_or_else(|| syntax("expected two integers"))?;
    if it.next().is_some() {
        return Err(syntax("trailing tokens"));
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|_| syntax(&format!("`{s}` is not a non-negative integer")));
    Ok((parse(a)?, parse(b)?))
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(EdgeListError::Syntax {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m) = numbers(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(numbers(line, l)?);
    }
    if edges.len() != m {
        return Err(EdgeListError::Count {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_one_based(n, &edges)?)
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}
