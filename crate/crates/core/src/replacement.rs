//! Feasible edge-replacements and the group they generate.
//!
//! A replacement `rs → kl` removes the edge `rs` and adds `kl` (a non-edge,
//! or `rs` itself for the trivial replacement); it is feasible when the
//! result is isomorphic to `G`. The permutations realising it,
//! `{σ : G_σ = G − rs + kl}`, form a left coset `A_G ∘ σ0`, so the group
//! they generate is generated by `A_G` together with one representative
//! per nontrivial replacement.

use alloc::{format, vec::Vec};
use core::fmt;

use crate::canon::{self, Canonical};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeReplacement {
    /// Removed edge, 0-based, smaller endpoint first.
    pub source: (usize, usize),
    /// Added pair; equal to `source` for a trivial replacement.
    pub target: (usize, usize),
    /// One `σ` with `G_σ = G − source + target`.
    pub representative: Permutation,
    pub trivial: bool,
}

impl EdgeReplacement {
    /// The graph `G − source + target`.
    pub fn result(&self, g: &Graph) -> Result<Graph> {
        g.replace_edge(self.source, self.target)
    }
}

impl fmt::Display for EdgeReplacement {
    /// 1-based, e.g. `1-2 -> 1-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, s) = self.source;
        let (k, l) = self.target;
        write!(f, "{}-{} -> {}-{}", r + 1, s + 1, k + 1, l + 1)
    }
}

/// Whether swapping `rs` for `kl` leaves the degree multiset unchanged.
fn same_degree_multiset(deg: &[usize], (r, s): (usize, usize), (k, l): (usize, usize)) -> bool {
    let mut lost: Vec<usize> = [r, s].iter().filter(|v| ![k, l].contains(v)).map(|&v| deg[v]).collect();
    let mut gained: Vec<usize> = [k, l]
        .iter()
        .filter(|v| ![r, s].contains(v))
        .map(|&v| deg[v])
        .collect();
    // a vertex of degree d that loses an edge looks like one of degree d-1
    // that gains one
    lost.sort_unstable();
    gained.sort_unstable();
    let before: Vec<usize> = {
        let mut all: Vec<usize> = lost.iter().copied().chain(gained.iter().copied()).collect();
        all.sort_unstable();
        all
    };
    let mut after: Vec<usize> = lost
        .iter()
        .map(|d| d - 1)
        .chain(gained.iter().map(|d| d + 1))
        .collect();
    after.sort_unstable();
    before == after
}

/// `R_G`, trivial replacements included, sorted by `(r, s, k, l)`.
pub fn feasible_replacements(g: &Graph) -> Vec<EdgeReplacement> {
    let base = canon::canonical(g);
    feasible_with(g, &base)
}

fn feasible_with(g: &Graph, base: &Canonical) -> Vec<EdgeReplacement> {
    let n = g.order();
    let deg = g.degrees();
    let sig = canon::root_signature(g);
    let mut out = Vec::new();
    for &e in g.edges() {
        out.push(EdgeReplacement {
            source: e,
            target: e,
            representative: Permutation::identity(n),
            trivial: true,
        });
        for k in 0..n {
            for l in k + 1..n {
                if g.has_edge(k, l) || !same_degree_multiset(&deg, e, (k, l)) {
                    continue;
                }
                let h = g.replace_edge(e, (k, l)).expect("edge and non-edge");
                if canon::root_signature(&h) != sig {
                    continue;
                }
                let ch = canon::canonical(&h);
                if let Some(sigma) = canon::relabelling_between(base, &ch) {
                    out.push(EdgeReplacement {
                        source: e,
                        target: (k, l),
                        representative: sigma,
                        trivial: false,
                    });
                }
            }
        }
    }
    out.sort_by_key(|r| (r.source, r.target));
    out
}

fn check_feasible(g: &Graph, rep: &EdgeReplacement) -> Result<Graph> {
    let bad = || Error::NotFeasible(format!("{rep}"));
    let (r, s) = rep.source;
    let (k, l) = rep.target;
    if r >= g.order() || s >= g.order() || k >= g.order() || l >= g.order() || !g.has_edge(r, s) {
        return Err(bad());
    }
    if rep.trivial != (rep.source == rep.target) {
        return Err(bad());
    }
    let h = g.replace_edge(rep.source, rep.target).map_err(|_| bad())?;
    if g.apply_permutation(&rep.representative)? != h {
        return Err(bad());
    }
    Ok(h)
}

/// The full coset `S_G(rs → kl)`, sorted; its size is `|Aut(G)|`.
pub fn replacement_coset(g: &Graph, rep: &EdgeReplacement, cap: usize) -> Result<Vec<Permutation>> {
    check_feasible(g, rep)?;
    let mut all: Vec<Permutation> = canon::automorphisms(g, cap)?
        .iter()
        .map(|a| a.compose(&rep.representative))
        .collect();
    all.sort();
    Ok(all)
}

/// Generators of `A_G` plus one representative per nontrivial replacement.
pub fn generator_set(g: &Graph) -> Vec<Permutation> {
    let base = canon::canonical(g);
    let mut gens = base.automorphism_generators.clone();
    for rep in feasible_with(g, &base) {
        if !rep.trivial && !gens.contains(&rep.representative) {
            gens.push(rep.representative);
        }
    }
    gens
}

/// The whole set `E_G`, the union of all replacement cosets, together
/// with `A_G` (already contained in it unless `G` is edgeless).
pub fn full_generator_set(g: &Graph, cap: usize) -> Result<Vec<Permutation>> {
    let mut all = canon::automorphisms(g, cap)?;
    for rep in feasible_replacements(g) {
        all.extend(replacement_coset(g, &rep, cap)?);
    }
    all.sort();
    all.dedup();
    Ok(all)
}

/// `S_G`.
pub fn amoeba_group(g: &Graph) -> PermGroup {
    PermGroup::new(g.order(), &generator_set(g)).expect("generators have the graph's degree")
}
