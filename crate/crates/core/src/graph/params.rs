//! Exact clique and chromatic numbers for small graphs, and the
//! Welsh–Powell upper bound on the chromatic number.

use alloc::{vec, vec::Vec};

use super::Graph;
use crate::error::{Error, Result};

/// Default order limit for the exact solvers.
pub const DEFAULT_EXACT_CAP: usize = 16;

/// `max_i min(d_i + 1, i)` over the non-increasing degree sequence
/// (1-based `i`).
pub fn welsh_powell_bound(g: &Graph) -> usize {
    g.degree_sequence()
        .iter()
        .enumerate()
        .map(|(i, &d)| (d + 1).min(i + 1))
        .max()
        .unwrap_or(0)
}

fn masks(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    let n = g.order();
    if n > cap.min(64) {
        return Err(Error::CapExceeded {
            what: "exact solver order",
            size: n,
            cap: cap.min(64),
        });
    }
    Ok((0..n).map(|v| g.row(v)[0]).collect())
}

/// Order of a largest clique, by Bron–Kerbosch with pivoting.
pub fn clique_number(g: &Graph, cap: usize) -> Result<usize> {
    let adj = masks(g, cap)?;
    let n = g.order();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    expand_clique(&adj, 0, all, 0, &mut best);
    Ok(best)
}

fn expand_clique(adj: &[u64], size: usize, mut cand: u64, mut excluded: u64, best: &mut usize) {
    if cand == 0 {
        if excluded == 0 && size > *best {
            *best = size;
        }
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let pivot_pool = cand | excluded;
    let pivot = (0..64)
        .filter(|&u| pivot_pool >> u & 1 == 1)
        .max_by_key(|&u| (adj[u] & cand).count_ones())
        .unwrap();
    let mut branch = cand & !adj[pivot];
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        expand_clique(adj, size + 1, cand & adj[v], excluded & adj[v], best);
        cand &= !(1 << v);
        excluded |= 1 << v;
    }
}

/// Chromatic number by backtracking colouring in saturation order,
/// trying `k = ω, ω + 1, ..` until a proper `k`-colouring exists.
pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize> {
    let adj = masks(g, cap)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let lower = clique_number(g, cap)?.max(1);
    let upper = welsh_powell_bound(g).max(lower);
    for k in lower..upper {
        let mut colour = vec![usize::MAX; n];
        if colourable(&adj, &mut colour, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn colourable(adj: &[u64], colour: &mut [usize], k: usize) -> bool {
    let n = adj.len();
    // uncoloured vertex with the most distinct neighbour colours
    let mut pick = None;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut used = 0u64;
        let mut nb = adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colour[u] != usize::MAX {
                used |= 1 << colour[u];
            }
        }
        let key = (used.count_ones() as usize, adj[v].count_ones() as usize);
        if pick.is_none() || key > pick_key {
            pick = Some((v, used));
            pick_key = key;
        }
    }
    let Some((v, used)) = pick else {
        return true;
    };
    let highest = colour.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
    // colours above the highest one in use are interchangeable
    for c in 0..k.min(highest + 1) {
        if used >> c & 1 == 0 {
            colour[v] = c;
            if colourable(adj, colour, k) {
                return true;
            }
            colour[v] = usize::MAX;
        }
    }
    false
}
