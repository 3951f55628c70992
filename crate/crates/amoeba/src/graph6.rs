//! The graph6 format: a printable header byte (or escape sequence) giving
//! the order, then the upper triangle column by column, six bits per byte.

use amoeba_core::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#04x} at position {1} is outside the graph6 range")]
    BadByte(u8, usize),
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    Padding,
    #[error("sparse6 and digraph6 are not supported")]
    Unsupported,
}

const HEADER: &str = ">>graph6<<";

fn push_six(out: &mut String, value: u64, groups: usize) {
    for k in (0..groups).rev() {
        out.push(char::from(((value >> (6 * k)) & 63) as u8 + 63));
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push(char::from(n as u8 + 63));
    } else if n <= 258_047 {
        out.push('~');
        push_six(&mut out, n as u64, 3);
    } else {
        out.push_str("~~");
        push_six(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(char::from((acc << (6 - bits)) + 63));
    }
    out
}

fn six(bytes: &[u8], offset: usize) -> Result<Vec<u8>, Graph6Error> {
    bytes
        .iter()
        .enumerate()
        .map(|(k, &b)| match b {
            63..=126 => Ok(b - 63),
            _ => Err(Graph6Error::BadByte(b, offset + k)),
        })
        .collect()
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    match bytes.first() {
        None => return Err(Graph6Error::Empty),
        Some(b':') | Some(b'&') => return Err(Graph6Error::Unsupported),
        _ => {}
    }
    let (n, start) = if bytes[0] != b'~' {
        (six(&bytes[..1], 0)?[0] as usize, 1)
    } else if bytes.get(1) != Some(&b'~') {
        let v = six(bytes.get(1..4).ok_or(Graph6Error::Length { expected: 3, found: bytes.len() - 1 })?, 1)?;
        (v.iter().fold(0usize, |a, &x| a << 6 | x as usize), 4)
    } else {
        let v = six(bytes.get(2..8).ok_or(Graph6Error::Length { expected: 6, found: bytes.len() - 2 })?, 2)?;
        (v.iter().fold(0usize, |a, &x| a << 6 | x as usize), 8)
    };
    let total = n * n.saturating_sub(1) / 2;
    let data = six(&bytes[start..], start)?;
    let expected = total.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: data.len(),
        });
    }
    let bit = |t: usize| data[t / 6] >> (5 - t % 6) & 1 == 1;
    if (total..expected * 6).any(bit) {
        return Err(Graph6Error::Padding);
    }
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(t) {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded pairs are valid"))
}
