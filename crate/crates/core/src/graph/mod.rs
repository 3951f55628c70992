//! Simple undirected graphs on `{0, .., n-1}`.
//!
//! Edges are kept as a sorted list of pairs `(i, j)` with `i < j`, and in a
//! packed adjacency matrix for constant-time membership tests.

use alloc::{vec, vec::Vec};

use crate::error::{Error, Result};
use crate::perm::Permutation;

mod params;

pub use params::{chromatic_number, clique_number, welsh_powell_bound, DEFAULT_EXACT_CAP};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", i + 1, j + 1)?;
            if self.n > 9 {
                f.write_str(",")?;
            }
        }
        f.write_str("])")
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            adj: vec![0; n * stride],
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                g.set(i, j);
            }
        }
        g.sort_edges();
        g
    }

    /// Builds a graph from 0-based pairs. Pairs may be given in either
    /// orientation; loops, duplicates and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        index: x + 1,
                        order: n,
                    });
                }
            }
            if a == b {
                return Err(Error::Loop(a + 1));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if g.has_edge(i, j) {
                return Err(Error::DuplicateEdge(i + 1, j + 1));
            }
            g.set(i, j);
        }
        g.sort_edges();
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] with 1-based pairs.
    pub fn from_one_based(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut zero = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { index: x, order: n });
                }
            }
            zero.push((a - 1, b - 1));
        }
        Self::from_edges(n, &zero)
    }

    fn set(&mut self, i: usize, j: usize) {
        self.adj[i * self.stride + j / 64] |= 1 << (j % 64);
        self.adj[j * self.stride + i / 64] |= 1 << (i % 64);
        self.edges.push((i, j));
    }

    fn sort_edges(&mut self) {
        self.edges.sort_unstable();
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted 0-based edges `(i, j)`, `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    /// Packed neighbourhood of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    pub(crate) fn words(&self) -> usize {
        self.stride
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        (0..n).filter(move |&u| self.has_edge(v, u))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted non-increasingly.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for j in 1..self.n {
            for i in 0..j {
                if !self.has_edge(i, j) {
                    g.set(i, j);
                }
            }
        }
        g.sort_edges();
        g
    }

    /// `self ∪ other`, with `other` re-indexed after the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(n + other.n);
        for &(i, j) in &self.edges {
            g.set(i, j);
        }
        for &(i, j) in &other.edges {
            g.set(i + n, j + n);
        }
        g.sort_edges();
        g
    }

    /// `self ∪ t K1`.
    pub fn with_isolates(&self, t: usize) -> Graph {
        self.disjoint_union(&Graph::empty(t))
    }

    /// Relabels by a vertex map: edge `{i, j}` becomes `{map(i), map(j)}`.
    pub fn relabel(&self, map: &Permutation) -> Result<Graph> {
        if map.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: map.degree(),
            });
        }
        let mut g = Graph::empty(self.n);
        for &(i, j) in &self.edges {
            let (a, b) = (map.apply(i), map.apply(j));
            g.set(a.min(b), a.max(b));
        }
        g.sort_edges();
        Ok(g)
    }

    /// The labelled copy `G_σ`: edge `{i, j}` maps to `{σ⁻¹(i), σ⁻¹(j)}`.
    ///
    /// With this convention `apply_permutation(apply_permutation(G, ρ), σ)`
    /// equals `apply_permutation(G, ρ ∘ σ)`.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Graph> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: sigma.degree(),
            });
        }
        self.relabel(&sigma.inverse())
    }

    /// `G - e + e'` for an edge `e` and a non-edge (or `e` itself) `e'`.
    pub fn replace_edge(&self, remove: (usize, usize), add: (usize, usize)) -> Result<Graph> {
        let (r, s) = ordered(remove);
        let (k, l) = ordered(add);
        if !self.has_edge(r, s) {
            return Err(Error::InvalidParameter(alloc::format!(
                "{} {} is not an edge",
                r + 1,
                s + 1
            )));
        }
        if (r, s) != (k, l) && (k == l || self.has_edge(k, l)) {
            return Err(Error::InvalidParameter(alloc::format!(
                "{} {} is not a non-edge",
                k + 1,
                l + 1
            )));
        }
        let mut pairs: Vec<(usize, usize)> =
            self.edges.iter().copied().filter(|&e| e != (r, s)).collect();
        pairs.push((k, l));
        Graph::from_edges(self.n, &pairs)
    }

    pub fn add_edge(&self, a: usize, b: usize) -> Result<Graph> {
        let mut pairs = self.edges.clone();
        pairs.push((a, b));
        Graph::from_edges(self.n, &pairs)
    }

    pub fn remove_edge(&self, a: usize, b: usize) -> Result<Graph> {
        let e = ordered((a, b));
        if a >= self.n || b >= self.n || !self.has_edge(e.0, e.1) {
            return Err(Error::InvalidParameter(alloc::format!(
                "{} {} is not an edge",
                a + 1,
                b + 1
            )));
        }
        let pairs: Vec<_> = self.edges.iter().copied().filter(|&x| x != e).collect();
        Graph::from_edges(self.n, &pairs)
    }

    /// Subgraph induced on `vertices`, re-indexed in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set(a, b);
                }
            }
        }
        g.sort_edges();
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }
}

#[inline]
pub(crate) fn ordered((a, b): (usize, usize)) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
