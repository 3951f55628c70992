//! Isomorphism machinery: equitable partition refinement, an
//! individualise-and-refine search tree, automorphism group generators and
//! canonical forms.
//!
//! The search tree is the usual one: a node is an ordered partition of the
//! vertices made equitable by [`refine`]; its children individualise each
//! vertex of the first non-singleton cell. Leaves are discrete partitions,
//! i.e. vertex orderings. Everything that decides the shape of the tree is
//! computed from structure only, so the tree of `φ(G)` is the image of the
//! tree of `G` under `φ`.
//!
//! The canonical form is the lexicographically smallest row-major upper
//! triangle over all leaves. Children that lie in one orbit of the
//! automorphisms fixing the node's individualised vertices have equal
//! subtrees up to an automorphism, so only one of them is explored.

use alloc::{vec, vec::Vec};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A total-order key identifying the isomorphism class of a graph.
///
/// Keys compare first by order, then by the packed adjacency bits of the
/// canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Big-endian order followed by the packed bit string.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + self.bits.len() * 8);
        out.extend_from_slice(&(self.n as u32).to_be_bytes());
        for w in &self.bits {
            out.extend_from_slice(&w.to_be_bytes());
        }
        out
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        let mut t = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[t / 64] >> (63 - t % 64) & 1 == 1 {
                    pairs.push((i, j));
                }
                t += 1;
            }
        }
        Graph::from_edges(self.n, &pairs).expect("valid canonical bits")
    }
}

type Cells = Vec<Vec<usize>>;

fn cell_mask(words: usize, cell: &[usize]) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for &v in cell {
        mask[v / 64] |= 1 << (v % 64);
    }
    mask
}

#[inline]
fn count_in(g: &Graph, v: usize, mask: &[u64]) -> u32 {
    g.row(v).iter().zip(mask).map(|(a, b)| (a & b).count_ones()).sum()
}

/// Refines an ordered partition until it is equitable: every vertex of a
/// cell has the same number of neighbours in every cell. Split cells are
/// replaced in place by their parts ordered by neighbour count.
pub fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let words = g.words();
    let n = g.order();
    let mut counts = vec![0u32; n];
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let mask = cell_mask(words, &cells[w]);
            for v in 0..n {
                counts[v] = count_in(g, v, &mask);
            }
            let mut x = 0;
            while x < cells.len() {
                let cell = &cells[x];
                if cell.len() > 1 && cell.iter().any(|&v| counts[v] != counts[cell[0]]) {
                    let mut keyed: Vec<(u32, usize)> = cell.iter().map(|&v| (counts[v], v)).collect();
                    keyed.sort_unstable();
                    let mut parts: Cells = Vec::new();
                    let mut last = None;
                    for (c, v) in keyed {
                        if last != Some(c) {
                            parts.push(Vec::new());
                            last = Some(c);
                        }
                        parts.last_mut().unwrap().push(v);
                    }
                    let k = parts.len();
                    cells.splice(x..x + 1, parts);
                    if x < w {
                        w += k - 1;
                    }
                    x += k;
                    changed = true;
                } else {
                    x += 1;
                }
            }
            w += 1;
        }
        if !changed {
            return cells;
        }
    }
}

/// Cell sizes followed by the quotient matrix of an equitable partition.
fn signature(g: &Graph, cells: &Cells) -> Vec<u32> {
    let words = g.words();
    let mut sig: Vec<u32> = cells.iter().map(|c| c.len() as u32).collect();
    let masks: Vec<Vec<u64>> = cells.iter().map(|c| cell_mask(words, c)).collect();
    for cell in cells {
        for mask in &masks {
            sig.push(count_in(g, cell[0], mask));
        }
    }
    sig
}

fn individualize(cells: &Cells, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for cell in cells {
        if cell.contains(&v) && cell.len() > 1 {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&u| u != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

fn target_cell(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

fn root(g: &Graph) -> Cells {
    if g.order() == 0 {
        return Vec::new();
    }
    refine(g, vec![(0..g.order()).collect()])
}

/// Row-major upper-triangle bits of `g` relabelled so that `order[p]`
/// becomes vertex `p`; bit `t` is stored most-significant first.
fn leaf_bits(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bits[t / 64] |= 1 << (63 - t % 64);
            }
            t += 1;
        }
    }
    bits
}

fn leaf_order(cells: &Cells) -> Vec<usize> {
    cells.iter().map(|c| c[0]).collect()
}

/// The first path of the search tree: the node partitions, the
/// individualised vertex at each level and the node signatures.
struct FirstPath {
    nodes: Vec<Cells>,
    chosen: Vec<usize>,
    sigs: Vec<Vec<u32>>,
    leaf: Vec<usize>,
    leaf_bits: Vec<u64>,
}

fn first_path(g: &Graph) -> FirstPath {
    let mut cells = root(g);
    let mut nodes = Vec::new();
    let mut chosen = Vec::new();
    let mut sigs = vec![signature(g, &cells)];
    while let Some(t) = target_cell(&cells) {
        let v = cells[t][0];
        let next = refine(g, individualize(&cells, v));
        nodes.push(cells);
        chosen.push(v);
        sigs.push(signature(g, &next));
        cells = next;
    }
    let leaf = leaf_order(&cells);
    let leaf_bits = leaf_bits(g, &leaf);
    FirstPath {
        nodes,
        chosen,
        sigs,
        leaf,
        leaf_bits,
    }
}

/// Searches the subtree under `cells` (at `depth`) for a leaf whose
/// relabelled graph equals `target`, pruning nodes whose signature differs
/// from the reference path.
fn find_matching_leaf(
    g: &Graph,
    cells: Cells,
    depth: usize,
    sigs: &[Vec<u32>],
    target: &[u64],
) -> Option<Vec<usize>> {
    if signature(g, &cells) != sigs[depth] {
        return None;
    }
    match target_cell(&cells) {
        None => {
            let order = leaf_order(&cells);
            (leaf_bits(g, &order) == target).then_some(order)
        }
        Some(t) => {
            for &v in &cells[t] {
                let child = refine(g, individualize(&cells, v));
                if let Some(found) = find_matching_leaf(g, child, depth + 1, sigs, target) {
                    return Some(found);
                }
            }
            None
        }
    }
}

/// Vertex map sending `from[p]` to `to[p]`.
fn map_between(from: &[usize], to: &[usize]) -> Permutation {
    let mut images = vec![0; from.len()];
    for (a, b) in from.iter().zip(to) {
        images[*a] = *b;
    }
    Permutation::from_images_unchecked(images)
}

fn orbit_closure(gens: &[Permutation], start: usize, n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Generators of `Aut(G)` (as vertex maps, which coincide with the set
/// `A_G = {σ : G_σ = G}` since both are the same group).
///
/// Levels of the first path are processed bottom up; at level `i` every
/// vertex of the target cell that is not yet known to share an orbit with
/// the path vertex is tried, and a matching leaf gives a new generator.
pub fn automorphism_generators(g: &Graph) -> Vec<Permutation> {
    let path = first_path(g);
    let n = g.order();
    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..path.nodes.len()).rev() {
        let cells = &path.nodes[level];
        let x = path.chosen[level];
        let cell = &cells[target_cell(cells).unwrap()];
        let mut in_orbit = orbit_closure(&gens, x, n);
        for &y in cell {
            if in_orbit[y] {
                continue;
            }
            let child = refine(g, individualize(cells, y));
            if let Some(leaf) = find_matching_leaf(g, child, level + 1, &path.sigs, &path.leaf_bits) {
                gens.push(map_between(&path.leaf, &leaf));
                in_orbit = orbit_closure(&gens, x, n);
            }
        }
    }
    gens
}

/// A canonical labelling: `order[p]` is the vertex placed at position `p`.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    pub order: Vec<usize>,
    pub automorphism_generators: Vec<Permutation>,
}

pub fn canonical(g: &Graph) -> Canonical {
    let gens = automorphism_generators(g);
    let n = g.order();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let aut = (!gens.is_empty())
        .then(|| PermGroup::new(n, &gens).expect("automorphisms have the graph's degree"));
    let mut prefix = Vec::new();
    canonical_search(g, root(g), aut.as_ref(), &mut prefix, &mut best);
    let (bits, order) = best.unwrap_or_else(|| (vec![0], Vec::new()));
    Canonical {
        form: CanonicalForm { n, bits },
        order,
        automorphism_generators: gens,
    }
}

fn canonical_search(
    g: &Graph,
    cells: Cells,
    aut: Option<&PermGroup>,
    prefix: &mut Vec<usize>,
    best: &mut Option<(Vec<u64>, Vec<usize>)>,
) {
    let Some(t) = target_cell(&cells) else {
        let order = leaf_order(&cells);
        let bits = leaf_bits(g, &order);
        if best.as_ref().is_none_or(|(b, _)| bits < *b) {
            *best = Some((bits, order));
        }
        return;
    };
    let candidates: Vec<usize> = if let Some(aut) = aut {
        let stab = aut.pointwise_stabilizer(prefix).expect("prefix in range");
        let mut reps = Vec::new();
        let mut covered = vec![false; g.order()];
        for &v in &cells[t] {
            if covered[v] {
                continue;
            }
            reps.push(v);
            for u in stab.orbit(v).expect("vertex in range") {
                covered[u] = true;
            }
        }
        reps
    } else {
        cells[t].clone()
    };
    for v in candidates {
        prefix.push(v);
        canonical_search(g, refine(g, individualize(&cells, v)), aut, prefix, best);
        prefix.pop();
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical(g).form
}

/// Cheap isomorphism invariant: the root equitable partition's signature.
pub fn root_signature(g: &Graph) -> Vec<u32> {
    signature(g, &root(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

/// One `σ` with `G_σ = H`, if the graphs are isomorphic.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let cg = canonical(g);
    let ch = canonical(h);
    relabelling_between(&cg, &ch)
}

/// `σ` with `G_σ = H` from two canonical labellings, when the forms agree.
pub(crate) fn relabelling_between(cg: &Canonical, ch: &Canonical) -> Option<Permutation> {
    if cg.form != ch.form {
        return None;
    }
    // vertex isomorphism φ: G -> H, and G_σ = H for σ = φ⁻¹
    Some(map_between(&ch.order, &cg.order))
}

/// Default limit on enumerated group elements.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// The set `A_G = {σ : G_σ = G}`, refusing groups larger than `cap`.
pub fn automorphisms(g: &Graph, cap: usize) -> Result<Vec<Permutation>> {
    let group = automorphism_group(g);
    let mut all = group.elements(cap)?;
    all.sort();
    Ok(all)
}

pub fn automorphism_group(g: &Graph) -> PermGroup {
    PermGroup::new(g.order(), &automorphism_generators(g)).expect("generators have the graph's degree")
}

/// All `σ` with `G_σ = H`; empty or of size `|Aut(G)|`.
pub fn enumerate_isomorphisms(g: &Graph, h: &Graph, cap: usize) -> Result<Vec<Permutation>> {
    if g.order() != h.order() {
        return Err(Error::DegreeMismatch {
            expected: g.order(),
            found: h.order(),
        });
    }
    let Some(sigma0) = find_isomorphism(g, h) else {
        return Ok(Vec::new());
    };
    let mut all: Vec<Permutation> = automorphisms(g, cap)?
        .iter()
        .map(|a| a.compose(&sigma0))
        .collect();
    all.sort();
    Ok(all)
}
