//! Permutations of `{0, .., n-1}`.
//!
//! Composition is right to left: `a.compose(&b)` is the map `x -> a(b(x))`.
//! The textual form is 1-based cycle notation, `(1 4)(2 3)`, with `()` for
//! the identity.

use alloc::{format, string::String, vec, vec::Vec};
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image vector, `images[i] = σ(i)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotBijective(format!("{:?}", images)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// The transposition swapping `a` and `b` (0-based).
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(degree, &[&[a, b]])
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::VertexOutOfRange {
                        index: x + 1,
                        order: degree,
                    });
                }
                if touched[x] {
                    return Err(Error::NotBijective(format!("point {} repeated", x + 1)));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation for a permutation of the given degree.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        if max > degree {
            return Err(Error::VertexOutOfRange {
                index: max,
                order: degree,
            });
        }
        let zero_based: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|&x| x - 1).collect())
            .collect();
        let refs: Vec<&[usize]> = zero_based.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.images[x] == x
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i != x)
            .map(|(i, _)| i)
    }

    /// Extends the permutation to `degree` points, acting on
    /// `offset..offset + self.degree()` and fixing everything else.
    pub fn shifted(&self, offset: usize, degree: usize) -> Result<Self> {
        if offset + self.degree() > degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: offset + self.degree(),
            });
        }
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset + x;
        }
        Ok(Permutation { images })
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_odd(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let err = || Error::PermutationSyntax(String::from(text));
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() || rest == "id" {
        return Ok(cycles);
    }
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(err)?;
        let close = rest.find(')').ok_or_else(err)?;
        let body = &rest[..close];
        let mut cycle = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let x: usize = tok.parse().map_err(|_| err())?;
            if x == 0 {
                return Err(err());
            }
            cycle.push(x);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation; the degree is the largest point mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
        Permutation::parse(s, degree)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
