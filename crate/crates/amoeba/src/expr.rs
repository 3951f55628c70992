//! Parser for construction expressions such as
//! `union(path(4), plus_edge(copy(path(4)), 1, 4))`.
//!
//! ```text
//! expr  = name "(" [ arg { "," arg } ] ")"
//! arg   = expr | int | list
//! list  = "[" [ int { "," int } ] "]"
//! name  = letter { letter | digit | "_" }
//! ```
//!
//! Vertex arguments are 1-based.

use amoeba_core::constructions::ConstructionSpec;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{msg} at offset {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug)]
enum Arg {
    Expr(ConstructionSpec),
    Int(usize),
    List(Vec<usize>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("integer too large"))
    }

    fn name(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos || self.src[start].is_ascii_digit() {
            self.pos = start;
            return self.err("expected a construction name");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn arg(&mut self) -> Result<Arg, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Arg::Int(self.int()?)),
            Some(b'[') => {
                self.pos += 1;
                let mut xs = Vec::new();
                if self.peek() == Some(b']') {
                    self.pos += 1;
                    return Ok(Arg::List(xs));
                }
                loop {
                    xs.push(self.int()?);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(Arg::List(xs));
                        }
                        _ => return self.err("expected `,` or `]`"),
                    }
                }
            }
            _ => Ok(Arg::Expr(self.expr()?)),
        }
    }

    fn expr(&mut self) -> Result<ConstructionSpec, ParseError> {
        let at = self.pos;
        let name = self.name()?;
        self.expect(b'(')?;
        let mut args = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
        } else {
            loop {
                args.push(self.arg()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.err("expected `,` or `)`"),
                }
            }
        }
        build(name, args).map_err(|msg| ParseError { pos: at, msg })
    }
}

fn build(name: &str, args: Vec<Arg>) -> Result<ConstructionSpec, String> {
    use ConstructionSpec::*;
    let shape: Vec<char> = args
        .iter()
        .map(|a| match a {
            Arg::Expr(_) => 'e',
            Arg::Int(_) => 'i',
            Arg::List(_) => 'l',
        })
        .collect();
    let shape: String = shape.into_iter().collect();
    let mut it = args.into_iter();
    let mut int = || match it.next() {
        Some(Arg::Int(x)) => x,
        _ => unreachable!(),
    };
    let bad = |want: &str| Err(format!("`{name}` expects ({want}), got ({shape})"));
    macro_rules! unary_int {
        ($variant:ident) => {
            if shape == "i" {
                Ok($variant(int()))
            } else {
                bad("int")
            }
        };
    }
    match name {
        "path" => unary_int!(Path),
        "cycle" => unary_int!(Cycle),
        "tadpole" => unary_int!(Tadpole),
        "star" => unary_int!(Star),
        "complete" => unary_int!(Complete),
        "h" | "h_graph" => unary_int!(HGraph),
        "g" | "g_graph" => unary_int!(GGraph),
        "fib" | "fib_tree" => unary_int!(FibTree),
        "star_forest" => unary_int!(StarForest),
        "empty" => unary_int!(Empty),
        "kminus" | "complete_minus_matching" => {
            if shape == "ii" {
                let n = int();
                Ok(CompleteMinusMatching(n, int()))
            } else {
                bad("int, int")
            }
        }
        "c5plus" | "c5_plus" => {
            if shape.is_empty() {
                Ok(C5Plus)
            } else {
                bad("")
            }
        }
        _ => build_combinator(name, &shape, it.collect()),
    }
}

fn build_combinator(name: &str, shape: &str, args: Vec<Arg>) -> Result<ConstructionSpec, String> {
    use ConstructionSpec::*;
    let bad = |want: &str| Err(format!("`{name}` expects ({want}), got ({shape})"));
    let mut exprs = Vec::new();
    let mut ints = Vec::new();
    let mut lists = Vec::new();
    for a in args {
        match a {
            Arg::Expr(e) => exprs.push(e),
            Arg::Int(x) => ints.push(x),
            Arg::List(l) => lists.push(l),
        }
    }
    let mut exprs = exprs.into_iter();
    let mut one = || Box::new(exprs.next().unwrap());
    match (name, shape) {
        ("union", s) if !s.is_empty() && s.chars().all(|c| c == 'e') => Ok(Union(exprs.collect())),
        ("union", _) => bad("expr, .."),
        ("complement", "e") => Ok(Complement(one())),
        ("copy", "e") => Ok(*one()),
        ("embed_component", "e") => Ok(EmbedComponent(one())),
        ("isolates" | "add_isolates", "ei") => Ok(AddIsolates(one(), ints[0])),
        ("copies", "ei") => Ok(Copies(one(), ints[0])),
        ("plus_edge", "eii") => Ok(PlusEdge(one(), ints[0], ints[1])),
        ("minus_edge", "eii") => Ok(MinusEdge(one(), ints[0], ints[1])),
        ("expand", "ele" | "elei") => {
            let base = one();
            let h = one();
            Ok(Expand {
                base,
                indices: lists.remove(0),
                h,
                root: ints.first().copied(),
            })
        }
        ("union_copy_plus_edge", "elii") => Ok(UnionCopyPlusEdge {
            base: one(),
            part: lists.remove(0),
            edge: (ints[0], ints[1]),
        }),
        ("union_copy_minus_edge", "elii") => Ok(UnionCopyMinusEdge {
            base: one(),
            part: lists.remove(0),
            edge: (ints[0], ints[1]),
        }),
        ("complement" | "copy" | "embed_component", _) => bad("expr"),
        ("isolates" | "add_isolates" | "copies", _) => bad("expr, int"),
        ("plus_edge" | "minus_edge", _) => bad("expr, int, int"),
        ("expand", _) => bad("expr, [ints], expr[, root]"),
        ("union_copy_plus_edge" | "union_copy_minus_edge", _) => bad("expr, [ints], int, int"),
        _ => Err(format!("unknown construction `{name}`")),
    }
}

pub fn parse(text: &str) -> Result<ConstructionSpec, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use amoeba_core::constructions::ConstructionSpec::*;

    #[test]
    fn parses_nested_expressions() {
        let e = parse("union(path(4), plus_edge(copy(path(4)), 1, 4))").unwrap();
        assert_eq!(e, Union(vec![Path(4), PlusEdge(Box::new(Path(4)), 1, 4)]));
        assert_eq!(parse(" h( 8 ) ").unwrap(), HGraph(8));
        assert_eq!(parse("kminus(5,2)").unwrap(), CompleteMinusMatching(5, 2));
        assert_eq!(parse("c5plus()").unwrap(), C5Plus);
        let x = parse("expand(path(5), [2, 3], plus_edge(star(4), 2, 3), 2)").unwrap();
        assert_eq!(x.eval().unwrap().order(), 11);
        let u = parse("union_copy_plus_edge(path(3), [1,2,3], 1, 3)").unwrap();
        assert_eq!(u.eval().unwrap().size(), 5);
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "union(path(4), plus_edge(path(4), 1, 4))",
            "complement(isolates(g(9), 1))",
            "expand(path(5), [2, 3], fib(4))",
            "union_copy_minus_edge(tadpole(3), [1, 2, 3, 4], 1, 4)",
            "embed_component(complete(4))",
            "copies(path(3), 2)",
        ] {
            assert_eq!(parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn reports_errors() {
        assert!(parse("path(4").is_err());
        assert!(parse("path(4))").is_err());
        assert!(parse("nosuch(3)").unwrap_err().msg.contains("unknown"));
        assert!(parse("path(path(3))").unwrap_err().msg.contains("expects"));
        assert!(parse("union()").is_err());
        assert!(parse("3").is_err());
    }
}
