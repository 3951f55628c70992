//! Brute-force check of the group criterion.
//!
//! Every copy of `G` inside `K_N` is enumerated as an edge set, two copies
//! are joined when one feasible edge-replacement turns one into the other,
//! and the components are counted. `G` is local exactly when the copies in
//! `K_n` form one component and global when those in `K_{n+1}` do.
//!
//! Since the copy list is complete, "the result of removing `e` and adding
//! `e'` is isomorphic to `G`" is the same as "it is in the list", so no
//! isomorphism test is needed while walking. The relation is symmetric:
//! undoing a replacement is a replacement back to a listed copy.

use alloc::{collections::VecDeque, format, vec, vec::Vec};

use num_bigint::BigUint;

use crate::canon::{self, CanonicalForm};
use crate::classifier::{self, Limits};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::factorial;

/// Largest host order; edge sets of `K_16` fit in 120 bits.
pub const MAX_HOST: usize = 16;
pub const DEFAULT_BUDGET: usize = 5_000_000;

/// An edge set of `K_N`, bit `pair_index(i, j)` for each edge.
pub type CopyState = u128;

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    // i < j, column-major
    j * (j - 1) / 2 + i
}

/// Decodes a state into sorted 0-based pairs.
pub fn state_edges(state: CopyState, host: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..host {
        for i in 0..j {
            if state >> pair_index(i, j) & 1 == 1 {
                out.push((i, j));
            }
        }
    }
    out.sort_unstable();
    out
}

/// `N! / ((N - n')! |Aut(G')|)`, with `G'` the graph without its isolates.
pub fn expected_copy_count(g: &Graph, host: usize) -> Result<BigUint> {
    let core = core_graph(g);
    if host < g.order() {
        return Err(Error::InvalidParameter(format!(
            "host order {host} is smaller than the graph order {}",
            g.order()
        )));
    }
    let aut = canon::automorphism_group(&core).order();
    Ok(factorial(host) / factorial(host - core.order()) / aut)
}

fn core_graph(g: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    g.induced(&keep)
}

fn check_host(g: &Graph, host: usize) -> Result<()> {
    if host > MAX_HOST {
        return Err(Error::CapExceeded {
            what: "oracle host order",
            size: host,
            cap: MAX_HOST,
        });
    }
    if host < g.order() {
        return Err(Error::InvalidParameter(format!(
            "host order {host} is smaller than the graph order {}",
            g.order()
        )));
    }
    Ok(())
}

/// All distinct copies of `G` in `K_host`, sorted.
pub fn enumerate_copies(g: &Graph, host: usize, budget: usize) -> Result<Vec<CopyState>> {
    check_host(g, host)?;
    let expected = expected_copy_count(g, host)?;
    if expected > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: format!("{expected}"),
            budget,
        });
    }
    let core = core_graph(g);
    let k = core.order();
    // injections V(G') -> [host]; each copy arises |Aut(G')| times
    let maps = factorial(host) / factorial(host - k);
    let map_budget = BigUint::from(budget) * 64u32;
    if maps > map_budget {
        return Err(Error::BudgetExceeded {
            needed: format!("{maps} placements"),
            budget,
        });
    }
    let mut out = Vec::new();
    let mut image = vec![0usize; k];
    let mut used = vec![false; host];
    place(&core, 0, &mut image, &mut used, &mut out);
    out.sort_unstable();
    out.dedup();
    if BigUint::from(out.len()) != expected {
        return Err(Error::Inconsistent(format!(
            "enumerated {} copies, expected {expected}",
            out.len()
        )));
    }
    Ok(out)
}

fn place(g: &Graph, v: usize, image: &mut [usize], used: &mut [bool], out: &mut Vec<CopyState>) {
    if v == image.len() {
        let mut state: CopyState = 0;
        for &(a, b) in g.edges() {
            let (x, y) = (image[a].min(image[b]), image[a].max(image[b]));
            state |= 1 << pair_index(x, y);
        }
        out.push(state);
        return;
    }
    for x in 0..used.len() {
        if !used[x] {
            used[x] = true;
            image[v] = x;
            place(g, v + 1, image, used, out);
            used[x] = false;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reachability {
    pub host: usize,
    pub copies: Vec<CopyState>,
    /// Component index of each copy, numbered in order of first copy.
    pub component_of: Vec<usize>,
    pub component_sizes: Vec<usize>,
}

impl Reachability {
    pub fn components(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn connected(&self) -> bool {
        self.component_sizes.len() <= 1
    }
}

/// Components of the copy-replacement graph inside `K_host`.
pub fn replacement_reachability(g: &Graph, host: usize, budget: usize) -> Result<Reachability> {
    let copies = enumerate_copies(g, host, budget)?;
    let pairs = host * host.saturating_sub(1) / 2;
    let mut component_of = vec![usize::MAX; copies.len()];
    let mut component_sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..copies.len() {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = component_sizes.len();
        component_of[start] = id;
        queue.push_back(start);
        let mut size = 0;
        while let Some(s) = queue.pop_front() {
            size += 1;
            let state = copies[s];
            for e in (0..pairs).filter(|&e| state >> e & 1 == 1) {
                let without = state & !(1 << e);
                for f in (0..pairs).filter(|&f| state >> f & 1 == 0) {
                    if let Ok(t) = copies.binary_search(&(without | 1 << f)) {
                        if component_of[t] == usize::MAX {
                            component_of[t] = id;
                            queue.push_back(t);
                        }
                    }
                }
            }
        }
        component_sizes.push(size);
    }
    Ok(Reachability {
        host,
        copies,
        component_of,
        component_sizes,
    })
}

pub fn oracle_is_local(g: &Graph, budget: usize) -> Result<bool> {
    Ok(replacement_reachability(g, g.order(), budget)?.connected())
}

pub fn oracle_is_global(g: &Graph, budget: usize) -> Result<bool> {
    Ok(replacement_reachability(g, g.order() + 1, budget)?.connected())
}

/// One representative per isomorphism class on `n` vertices (the canonical
/// graph), ordered by canonical form.
pub fn graph_classes(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::CapExceeded {
            what: "census order",
            size: n,
            cap: 7,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut forms: Vec<CanonicalForm> = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        forms.push(canon::canonical_form(&Graph::from_edges(n, &edges)?));
    }
    forms.sort();
    forms.dedup();
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub local: bool,
    pub global: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepEntry {
    pub graph: Graph,
    pub classifier: Verdicts,
    pub oracle: Verdicts,
    /// Copy counts in both hosts agree with the closed formula.
    pub counts_match: bool,
}

impl SweepEntry {
    pub fn matches(&self) -> bool {
        self.classifier == self.oracle && self.counts_match
    }
}

/// Classifier and oracle verdicts for one graph.
pub fn compare(g: &Graph, limits: &Limits, budget: usize) -> Result<SweepEntry> {
    let classifier = Verdicts {
        local: classifier::is_local_amoeba(g, limits)?,
        global: classifier::is_global_amoeba(g, limits)?,
    };
    let local = replacement_reachability(g, g.order(), budget)?;
    let global = replacement_reachability(g, g.order() + 1, budget)?;
    let counts_match = BigUint::from(local.copies.len()) == expected_copy_count(g, g.order())?
        && BigUint::from(global.copies.len()) == expected_copy_count(g, g.order() + 1)?;
    Ok(SweepEntry {
        graph: g.clone(),
        classifier,
        oracle: Verdicts {
            local: local.connected(),
            global: global.connected(),
        },
        counts_match,
    })
}

pub fn sweep(n: usize, limits: &Limits, budget: usize) -> Result<Vec<SweepEntry>> {
    graph_classes(n)?
        .iter()
        .map(|g| compare(g, limits, budget))
        .collect()
}
