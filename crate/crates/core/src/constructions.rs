//! Named graph families and the combinators used to build larger amoebas.
//!
//! Vertex layouts are fixed so that results can be compared with drawings:
//!
//! * `path(k)`: `1 - 2 - .. - k`; `cycle(k)` adds `k - 1`.
//! * `tadpole(k)`, the cycle `1 .. k` with a pendant `k+1` at vertex `1`.
//! * `star(k)`: centre `1`, leaves `2 .. k`.
//! * `h_graph(n)`: `A = 1 .. q` independent, `B = q+1 .. n` a clique, with
//!   `i ~ q + j` iff `j <= i`, where `q = ⌊n/2⌋`.
//! * `g_graph(n)`: `h_graph(n-1)` plus the pendant `n` at `n - 1`.
//! * `fib_tree(i)`: the `T_{i-2}` block followed by the `T_{i-1}` block.
//!
//! Parameters of the public functions are counts; vertex arguments are
//! 0-based, except inside [`ConstructionSpec`], which is 1-based.

use alloc::{boxed::Box, format, string::String, vec, vec::Vec};
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn from_pairs(n: usize, pairs: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, &pairs).expect("family edges are valid")
}

pub fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid(String::from("path needs k >= 1")));
    }
    Ok(from_pairs(k, (1..k).map(|i| (i - 1, i)).collect()))
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(String::from("cycle needs k >= 3")));
    }
    Ok(from_pairs(k, (0..k).map(|i| (i, (i + 1) % k)).map(crate::graph::ordered).collect()))
}

/// `C(k, 1)`: a `k`-cycle with a pendant vertex, `k + 1` vertices.
pub fn tadpole(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(String::from("tadpole needs k >= 3")));
    }
    cycle(k)?.with_isolates(1).add_edge(0, k)
}

/// `K_{1,k-1}` on `k` vertices.
pub fn star(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid(String::from("star needs k >= 2")));
    }
    Ok(from_pairs(k, (1..k).map(|i| (0, i)).collect()))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid(String::from("complete needs n >= 1")));
    }
    Ok(Graph::complete(n))
}

/// Whether `K_n - tK_2` lies in the parameter range covered by the
/// amoeba examples (`t = 1, n >= 4` or `t >= 2, n >= 2t + 1`).
pub fn complete_minus_matching_in_range(n: usize, t: usize) -> bool {
    (t == 1 && n >= 4) || (t >= 2 && n > 2 * t)
}

/// `K_n` minus the matching `12, 34, .., (2t-1)(2t)`.
pub fn complete_minus_matching(n: usize, t: usize) -> Result<Graph> {
    if n == 0 || 2 * t > n {
        return Err(invalid(format!("complete_minus_matching needs 2t <= n (n = {n}, t = {t})")));
    }
    Ok(from_pairs(
        n,
        (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&(i, j)| !(j == i + 1 && i % 2 == 0 && i < 2 * t))
            .collect(),
    ))
}

/// `C_5^+`: the cycle `1 2 3 4 5` plus the chord `14`.
///
/// The closing edge `15` is part of the graph: the replacements `15 -> 35`
/// and `12 -> 25` that make it local need it, and without it the graph is
/// the tadpole `C(4, 1)`, which is global.
pub fn c5_plus() -> Graph {
    Graph::from_one_based(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 4)]).expect("valid")
}

pub fn h_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(String::from("h_graph needs n >= 2")));
    }
    let q = n / 2;
    let mut pairs = Vec::new();
    for a in q..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    for i in 1..=q {
        for j in 1..=(n - q).min(i) {
            pairs.push((i - 1, q + j - 1));
        }
    }
    Ok(from_pairs(n, pairs))
}

pub fn g_graph(n: usize) -> Result<Graph> {
    if n.is_multiple_of(2) || n < 9 {
        return Err(invalid(format!("g_graph needs odd n >= 9, got {n}")));
    }
    h_graph(n - 1)?.with_isolates(1).add_edge(n - 2, n - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if root >= graph.order() {
            return Err(Error::VertexOutOfRange {
                index: root + 1,
                order: graph.order(),
            });
        }
        Ok(RootedGraph { graph, root })
    }
}

fn first_max_degree(g: &Graph) -> usize {
    let d = g.max_degree();
    (0..g.order()).find(|&v| g.degree(v) == d).unwrap_or(0)
}

/// The Fibonacci tree `T_i` with its root.
///
/// `T_1 = T_2 = K_2`; `T_{i+1}` joins the root of a `T_{i-1}` block to the
/// root of a following `T_i` block. From `T_4` on the maximum degree vertex
/// is unique; below that the first one is used.
pub fn fib_tree(i: usize) -> Result<RootedGraph> {
    if i == 0 {
        return Err(invalid(String::from("fib_tree needs i >= 1")));
    }
    let k2 = RootedGraph {
        graph: path(2)?,
        root: 0,
    };
    let (mut older, mut newer) = (k2.clone(), k2);
    for _ in 2..i {
        let offset = older.graph.order();
        let graph = older
            .graph
            .disjoint_union(&newer.graph)
            .add_edge(older.root, offset + newer.root)?;
        let root = first_max_degree(&graph);
        older = newer;
        newer = RootedGraph { graph, root };
    }
    Ok(newer)
}

/// `K_{1,2} ∪ K_{1,3} ∪ .. ∪ K_{1,Δ}`, each star centre first.
pub fn star_forest(max_degree: usize) -> Result<Graph> {
    if max_degree < 2 {
        return Err(invalid(String::from("star_forest needs Δ >= 2")));
    }
    let mut g = Graph::empty(0);
    for d in 2..=max_degree {
        g = g.disjoint_union(&star(d + 1)?);
    }
    Ok(g)
}

/// `G *_I H` together with its index layout.
///
/// Vertices of `G` keep their indices. The copy glued at `indices[ℓ]`
/// occupies `block_start(ℓ) ..` and lists the non-root vertices of `H` in
/// increasing order.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub graph: Graph,
    pub base_order: usize,
    pub indices: Vec<usize>,
    pub h: RootedGraph,
}

impl Expansion {
    fn block_len(&self) -> usize {
        self.h.graph.order() - 1
    }

    pub fn block_start(&self, l: usize) -> usize {
        self.base_order + l * self.block_len()
    }

    /// Where vertex `x` of `H` lands in the copy glued at `indices[l]`.
    pub fn copy_map(&self, l: usize) -> Vec<usize> {
        let root = self.h.root;
        let start = self.block_start(l);
        (0..self.h.graph.order())
            .map(|x| match x.cmp(&root) {
                core::cmp::Ordering::Equal => self.indices[l],
                core::cmp::Ordering::Less => start + x,
                core::cmp::Ordering::Greater => start + x - 1,
            })
            .collect()
    }
}

pub fn expand(g: &Graph, indices: &[usize], h: &RootedGraph) -> Result<Expansion> {
    let mut indices = indices.to_vec();
    indices.sort_unstable();
    indices.dedup();
    if let Some(&bad) = indices.iter().find(|&&i| i >= g.order()) {
        return Err(Error::VertexOutOfRange {
            index: bad + 1,
            order: g.order(),
        });
    }
    let m = h.graph.order();
    let mut out = Expansion {
        graph: g.clone(),
        base_order: g.order(),
        indices,
        h: h.clone(),
    };
    let mut pairs = g.edges().to_vec();
    for l in 0..out.indices.len() {
        let map = out.copy_map(l);
        for &(a, b) in h.graph.edges() {
            pairs.push(crate::graph::ordered((map[a], map[b])));
        }
    }
    out.graph = Graph::from_edges(g.order() + out.indices.len() * (m - 1), &pairs)?;
    Ok(out)
}

/// Extends `σ` (on the base graph) to `G *_I H` by moving each glued copy
/// along with its attachment vertex.
pub fn lift_expansion_perm(sigma: &Permutation, exp: &Expansion) -> Result<Permutation> {
    if sigma.degree() != exp.base_order {
        return Err(Error::DegreeMismatch {
            expected: exp.base_order,
            found: sigma.degree(),
        });
    }
    let total = exp.graph.order();
    let mut images: Vec<usize> = (0..total).collect();
    images[..exp.base_order].copy_from_slice(sigma.images());
    for (l, &i) in exp.indices.iter().enumerate() {
        let target = exp.indices.binary_search(&sigma.apply(i)).map_err(|_| Error::NotStabilizing)?;
        let (from, to) = (exp.block_start(l), exp.block_start(target));
        for k in 0..exp.block_len() {
            images[from + k] = to + k;
        }
    }
    Permutation::from_images(images)
}

/// Lifts `σ`, acting on `j1` through its sorted local indices, to a
/// permutation of `0 ..= max(j1 ∪ j2)`; `σ` must fix `j1 ∩ j2`.
pub fn lift_subgraph_perm(sigma: &Permutation, j1: &[usize], j2: &[usize]) -> Result<Permutation> {
    let mut local = j1.to_vec();
    local.sort_unstable();
    local.dedup();
    if sigma.degree() != local.len() {
        return Err(Error::DegreeMismatch {
            expected: local.len(),
            found: sigma.degree(),
        });
    }
    let degree = local.iter().chain(j2).max().map_or(0, |&x| x + 1);
    let mut images: Vec<usize> = (0..degree).collect();
    for (a, &x) in local.iter().enumerate() {
        let y = local[sigma.apply(a)];
        if x != y && j2.contains(&x) {
            return Err(Error::MovesSharedIndex(x + 1));
        }
        images[x] = y;
    }
    Permutation::from_images(images)
}

/// Checks that `part` is closed under adjacency, i.e. a union of whole
/// components, and returns it sorted.
fn whole_components(g: &Graph, part: &[usize]) -> Result<Vec<usize>> {
    let mut part = part.to_vec();
    part.sort_unstable();
    part.dedup();
    if part.is_empty() {
        return Err(invalid(String::from("empty component selection")));
    }
    for &v in &part {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                index: v + 1,
                order: g.order(),
            });
        }
        if let Some(u) = g.neighbors(v).find(|u| part.binary_search(u).is_err()) {
            return Err(invalid(format!(
                "selection splits a component (edge {} {})",
                v + 1,
                u + 1
            )));
        }
    }
    Ok(part)
}

/// `G ∪ (H + e)` where `H` is a copy of the components `part` of `G` and
/// `e` is a non-edge of `H` in its local (sorted) indices.
pub fn union_copy_plus_edge(g: &Graph, part: &[usize], e: (usize, usize)) -> Result<Graph> {
    let h = g.induced(&whole_components(g, part)?);
    check_pair(&h, e)?;
    if h.has_edge(e.0, e.1) {
        return Err(invalid(format!("{} {} is already an edge of the copy", e.0 + 1, e.1 + 1)));
    }
    Ok(g.disjoint_union(&h.add_edge(e.0, e.1)?))
}

/// `G ∪ (H - e)` for an edge `e` of the copy `H` of `part`.
pub fn union_copy_minus_edge(g: &Graph, part: &[usize], e: (usize, usize)) -> Result<Graph> {
    let h = g.induced(&whole_components(g, part)?);
    check_pair(&h, e)?;
    Ok(g.disjoint_union(&h.remove_edge(e.0, e.1)?))
}

fn check_pair(h: &Graph, (a, b): (usize, usize)) -> Result<()> {
    for x in [a, b] {
        if x >= h.order() {
            return Err(Error::VertexOutOfRange {
                index: x + 1,
                order: h.order(),
            });
        }
    }
    if a == b {
        return Err(Error::Loop(a + 1));
    }
    Ok(())
}

/// Edges of a connected graph in breadth-first order from vertex `0`: each
/// scanned vertex contributes its edges to not yet scanned vertices.
fn bfs_edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut scanned = vec![false; n];
    let mut queue = alloc::collections::VecDeque::from([0]);
    seen[0] = true;
    let mut out = Vec::new();
    while let Some(u) = queue.pop_front() {
        scanned[u] = true;
        for v in g.neighbors(u) {
            if !scanned[v] {
                out.push((u, v));
            }
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    out
}

/// A global amoeba having `G` as a component: `H_0 ∪ H_1 ∪ .. ∪ H_m` where
/// `H_0 = K_1` and `H_i` consists of the first `i` edges of `G` in
/// breadth-first order.
pub fn embed_as_component(g: &Graph) -> Result<Graph> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let order = bfs_edge_order(g);
    let mut out = Graph::empty(1);
    for i in 1..=order.len() {
        let mut vertices: Vec<usize> = order[..i].iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let local = |x: usize| vertices.binary_search(&x).unwrap();
        let pairs: Vec<_> = order[..i]
            .iter()
            .map(|&(a, b)| crate::graph::ordered((local(a), local(b))))
            .collect();
        out = out.disjoint_union(&Graph::from_edges(vertices.len(), &pairs)?);
    }
    Ok(out)
}

/// Expression tree over the families and combinators. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    Path(usize),
    Cycle(usize),
    Tadpole(usize),
    Star(usize),
    Complete(usize),
    CompleteMinusMatching(usize, usize),
    C5Plus,
    HGraph(usize),
    GGraph(usize),
    FibTree(usize),
    StarForest(usize),
    Empty(usize),
    Union(Vec<ConstructionSpec>),
    Complement(Box<ConstructionSpec>),
    AddIsolates(Box<ConstructionSpec>, usize),
    Copies(Box<ConstructionSpec>, usize),
    PlusEdge(Box<ConstructionSpec>, usize, usize),
    MinusEdge(Box<ConstructionSpec>, usize, usize),
    /// `expand(G, [i, ..], H, root)`; the root defaults to the natural root
    /// of `H` (a Fibonacci tree's root, otherwise vertex 1).
    Expand {
        base: Box<ConstructionSpec>,
        indices: Vec<usize>,
        h: Box<ConstructionSpec>,
        root: Option<usize>,
    },
    UnionCopyPlusEdge {
        base: Box<ConstructionSpec>,
        part: Vec<usize>,
        edge: (usize, usize),
    },
    UnionCopyMinusEdge {
        base: Box<ConstructionSpec>,
        part: Vec<usize>,
        edge: (usize, usize),
    },
    EmbedComponent(Box<ConstructionSpec>),
}

fn one_based(x: usize, order: usize) -> Result<usize> {
    if x == 0 || x > order {
        return Err(Error::VertexOutOfRange { index: x, order });
    }
    Ok(x - 1)
}

impl ConstructionSpec {
    pub fn eval(&self) -> Result<Graph> {
        Ok(self.eval_rooted()?.graph)
    }

    /// Evaluates, keeping the natural root (vertex 1 unless the expression
    /// is a Fibonacci tree).
    pub fn eval_rooted(&self) -> Result<RootedGraph> {
        use ConstructionSpec::*;
        let plain = |g: Graph| RootedGraph { graph: g, root: 0 };
        Ok(match self {
            Path(k) => plain(path(*k)?),
            Cycle(k) => plain(cycle(*k)?),
            Tadpole(k) => plain(tadpole(*k)?),
            Star(k) => plain(star(*k)?),
            Complete(n) => plain(complete(*n)?),
            CompleteMinusMatching(n, t) => plain(complete_minus_matching(*n, *t)?),
            C5Plus => plain(c5_plus()),
            HGraph(n) => plain(h_graph(*n)?),
            GGraph(n) => plain(g_graph(*n)?),
            FibTree(i) => fib_tree(*i)?,
            StarForest(d) => plain(star_forest(*d)?),
            Empty(n) => plain(Graph::empty(*n)),
            Union(parts) => {
                let mut g = Graph::empty(0);
                for p in parts {
                    g = g.disjoint_union(&p.eval()?);
                }
                plain(g)
            }
            Complement(a) => plain(a.eval()?.complement()),
            AddIsolates(a, t) => plain(a.eval()?.with_isolates(*t)),
            Copies(a, t) => {
                let one = a.eval()?;
                let mut g = Graph::empty(0);
                for _ in 0..*t {
                    g = g.disjoint_union(&one);
                }
                plain(g)
            }
            PlusEdge(a, i, j) => {
                let g = a.eval()?;
                let (i, j) = (one_based(*i, g.order())?, one_based(*j, g.order())?);
                plain(g.add_edge(i, j)?)
            }
            MinusEdge(a, i, j) => {
                let g = a.eval()?;
                let (i, j) = (one_based(*i, g.order())?, one_based(*j, g.order())?);
                plain(g.remove_edge(i, j)?)
            }
            Expand { base, indices, h, root } => {
                let g = base.eval()?;
                let mut rh = h.eval_rooted()?;
                if let Some(r) = root {
                    rh = RootedGraph::new(rh.graph, one_based(*r, usize::MAX)?)?;
                }
                let idx = indices
                    .iter()
                    .map(|&i| one_based(i, g.order()))
                    .collect::<Result<Vec<_>>>()?;
                plain(expand(&g, &idx, &rh)?.graph)
            }
            UnionCopyPlusEdge { base, part, edge } | UnionCopyMinusEdge { base, part, edge } => {
                let g = base.eval()?;
                let part = part
                    .iter()
                    .map(|&i| one_based(i, g.order()))
                    .collect::<Result<Vec<_>>>()?;
                let e = (
                    one_based(edge.0, part.len())?,
                    one_based(edge.1, part.len())?,
                );
                if matches!(self, UnionCopyPlusEdge { .. }) {
                    plain(union_copy_plus_edge(&g, &part, e)?)
                } else {
                    plain(union_copy_minus_edge(&g, &part, e)?)
                }
            }
            EmbedComponent(a) => plain(embed_as_component(&a.eval()?)?),
        })
    }

    /// Non-fatal notes about parameters outside the documented ranges.
    pub fn warnings(&self) -> Vec<String> {
        use ConstructionSpec::*;
        let mut out = Vec::new();
        self.visit(&mut |s| {
            if let CompleteMinusMatching(n, t) = s {
                if !complete_minus_matching_in_range(*n, *t) {
                    out.push(format!(
                        "kminus({n}, {t}) is outside the range t = 1, n >= 4 or t >= 2, n >= 2t + 1"
                    ));
                }
            }
        });
        out
    }

    fn visit(&self, f: &mut dyn FnMut(&ConstructionSpec)) {
        use ConstructionSpec::*;
        f(self);
        match self {
            Union(parts) => parts.iter().for_each(|p| p.visit(f)),
            Complement(a) | AddIsolates(a, _) | Copies(a, _) | PlusEdge(a, ..) | MinusEdge(a, ..) | EmbedComponent(a) => {
                a.visit(f)
            }
            Expand { base, h, .. } => {
                base.visit(f);
                h.visit(f);
            }
            UnionCopyPlusEdge { base, .. } | UnionCopyMinusEdge { base, .. } => base.visit(f),
            _ => {}
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

impl fmt::Display for ConstructionSpec {
    /// The expression in the text grammar accepted by the command line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionSpec::*;
        match self {
            Path(k) => write!(f, "path({k})"),
            Cycle(k) => write!(f, "cycle({k})"),
            Tadpole(k) => write!(f, "tadpole({k})"),
            Star(k) => write!(f, "star({k})"),
            Complete(n) => write!(f, "complete({n})"),
            CompleteMinusMatching(n, t) => write!(f, "kminus({n}, {t})"),
            C5Plus => f.write_str("c5plus()"),
            HGraph(n) => write!(f, "h({n})"),
            GGraph(n) => write!(f, "g({n})"),
            FibTree(i) => write!(f, "fib({i})"),
            StarForest(d) => write!(f, "star_forest({d})"),
            Empty(n) => write!(f, "empty({n})"),
            Union(parts) => {
                f.write_str("union(")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Complement(a) => write!(f, "complement({a})"),
            AddIsolates(a, t) => write!(f, "isolates({a}, {t})"),
            Copies(a, t) => write!(f, "copies({a}, {t})"),
            PlusEdge(a, i, j) => write!(f, "plus_edge({a}, {i}, {j})"),
            MinusEdge(a, i, j) => write!(f, "minus_edge({a}, {i}, {j})"),
            Expand { base, indices, h, root } => {
                write!(f, "expand({base}, ")?;
                write_list(f, indices)?;
                write!(f, ", {h}")?;
                if let Some(r) = root {
                    write!(f, ", {r}")?;
                }
                f.write_str(")")
            }
            UnionCopyPlusEdge { base, part, edge } | UnionCopyMinusEdge { base, part, edge } => {
                let name = if matches!(self, UnionCopyPlusEdge { .. }) {
                    "union_copy_plus_edge"
                } else {
                    "union_copy_minus_edge"
                };
                write!(f, "{name}({base}, ")?;
                write_list(f, part)?;
                write!(f, ", {}, {})", edge.0, edge.1)
            }
            EmbedComponent(a) => write!(f, "embed_component({a})"),
        }
    }
}
