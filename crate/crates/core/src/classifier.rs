//! Local and global amoeba decisions.
//!
//! `G` is local when `S_G` is the full symmetric group and global when
//! `G ∪ K1` is local. Both verdicts come from the group order. The degree
//! prefilters are necessary conditions that let a failing graph skip group
//! construction; the decrement and orbit criteria are independent
//! characterisations of globality, evaluated as consistency checks.

use alloc::{format, string::String, vec::Vec};
use core::time::Duration;

use num_bigint::BigUint;

use crate::canon::{self, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::group::{factorial, PermGroup};
use crate::replacement::{self, EdgeReplacement};

/// Size limits. `max_n` bounds the degree of any group built (so a global
/// decision needs `n + 1 <= max_n`); `exact_cap` bounds the order for exact
/// clique and chromatic numbers; `element_cap` bounds explicit element lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub exact_cap: usize,
    pub element_cap: usize,
}

pub const DEFAULT_MAX_N: usize = 14;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
            exact_cap: graph::DEFAULT_EXACT_CAP,
            element_cap: canon::DEFAULT_ELEMENT_CAP,
        }
    }
}

impl Limits {
    pub fn with_max_n(max_n: usize) -> Self {
        Limits {
            max_n,
            ..Limits::default()
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded {
                what: "group degree",
                size: n,
                cap: self.max_n,
            });
        }
        Ok(())
    }
}

/// `S_G`, refusing graphs above the cap.
pub fn amoeba_group_capped(g: &Graph, limits: &Limits) -> Result<PermGroup> {
    limits.check(g.order())?;
    Ok(replacement::amoeba_group(g))
}

fn degree_values(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d.dedup();
    d
}

/// Every value in `[δ, Δ]` occurs as a degree.
pub fn local_degree_prefilter(g: &Graph) -> bool {
    let d = degree_values(g);
    d.is_empty() || d.len() == d[d.len() - 1] - d[0] + 1
}

/// The degree values are `{0} ∪ [Δ]` or `[Δ]`, and `d_i <= n + 1 - i` for
/// the non-increasing degree sequence.
pub fn global_degree_prefilter(g: &Graph) -> bool {
    let mut d = degree_values(g);
    if d.first() == Some(&0) {
        d.remove(0);
    }
    let values_ok = d.iter().enumerate().all(|(k, &x)| x == k + 1);
    let n = g.order();
    let seq_ok = g
        .degree_sequence()
        .iter()
        .enumerate()
        .all(|(i, &x)| x + i <= n);
    values_ok && seq_ok
}

pub fn is_local_amoeba(g: &Graph, limits: &Limits) -> Result<bool> {
    if !local_degree_prefilter(g) {
        return Ok(false);
    }
    Ok(amoeba_group_capped(g, limits)?.is_symmetric())
}

pub fn is_global_amoeba(g: &Graph, limits: &Limits) -> Result<bool> {
    if !global_degree_prefilter(g) {
        return Ok(false);
    }
    is_local_amoeba(&g.with_isolates(1), limits)
}

/// Outcome of the degree-decrement criterion, with one witness per vertex
/// of degree at least two: a vertex of one less degree in its `S_G`-orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecrementCheck {
    pub holds: bool,
    pub witnesses: Vec<(usize, Option<usize>)>,
}

fn decrement_from_orbits(g: &Graph, orbits: &[Vec<usize>]) -> DecrementCheck {
    let mut witnesses = Vec::new();
    for orbit in orbits {
        for &x in orbit {
            let d = g.degree(x);
            if d >= 2 {
                let y = orbit.iter().copied().find(|&y| g.degree(y) == d - 1);
                witnesses.push((x, y));
            }
        }
    }
    witnesses.sort_unstable();
    DecrementCheck {
        holds: witnesses.iter().all(|(_, y)| y.is_some()),
        witnesses,
    }
}

/// Every vertex of degree `d >= 2` can be moved by `S_G` to a vertex of
/// degree `d - 1`; equivalent to being a global amoeba.
pub fn degree_decrement_check(g: &Graph, limits: &Limits) -> Result<DecrementCheck> {
    let group = amoeba_group_capped(g, limits)?;
    Ok(decrement_from_orbits(g, &group.orbits()))
}

/// Every `S_G`-orbit contains a vertex of degree one; for graphs with at
/// least one edge this is equivalent to being a global amoeba.
pub fn orbit_condition(g: &Graph, orbits: &[Vec<usize>]) -> bool {
    orbits.iter().all(|o| o.iter().any(|&y| g.degree(y) == 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub value: usize,
    /// Integer part of the bound.
    pub bound: usize,
    pub satisfied: bool,
    /// Equality with the exact (possibly irrational) bound.
    pub tight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouringCheck {
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub bound: usize,
    /// `ω <= χ <= bound`.
    pub satisfied: bool,
    pub tight: bool,
}

/// The extremal bounds for global amoebas of minimum degree one. They are
/// evaluated for every graph; `applicable` says whether the hypotheses hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub applicable: bool,
    /// `e <= ⌊n²/4⌋`.
    pub edges: Check,
    /// `None` above the exact solver cap.
    pub colouring: Option<ColouringCheck>,
    /// `Δ <= ⌊(1 + √(1 - 8n + 16m)) / 2⌋`; `None` when the radicand is
    /// negative.
    pub max_degree: Option<Check>,
    pub welsh_powell: usize,
}

impl BoundReport {
    /// All bounds that could be evaluated hold.
    pub fn all_satisfied(&self) -> bool {
        self.edges.satisfied
            && self.colouring.as_ref().is_none_or(|c| c.satisfied)
            && self.max_degree.as_ref().is_some_and(|c| c.satisfied)
    }
}

pub fn bounds_for(g: &Graph, is_global: bool, exact_cap: usize) -> Result<BoundReport> {
    let n = g.order();
    let m = g.size();
    let e_bound = n * n / 4;
    let edges = Check {
        value: m,
        bound: e_bound,
        satisfied: m <= e_bound,
        tight: m == e_bound,
    };
    let colouring = if n <= exact_cap.min(64) {
        let omega = graph::clique_number(g, exact_cap)?;
        let chi = graph::chromatic_number(g, exact_cap)?;
        let bound = n / 2 + 1;
        Some(ColouringCheck {
            clique_number: omega,
            chromatic_number: chi,
            bound,
            satisfied: omega <= chi && chi <= bound,
            tight: chi == bound,
        })
    } else {
        None
    };
    let radicand = 1 - 8 * n as i64 + 16 * m as i64;
    let max_degree = (radicand >= 0).then(|| {
        let bound = (radicand as u64).isqrt().div_ceil(2) as usize;
        let delta = g.max_degree();
        let twice = 2 * delta as i64 - 1;
        Check {
            value: delta,
            bound,
            satisfied: delta <= bound,
            tight: twice * twice == radicand,
        }
    });
    Ok(BoundReport {
        applicable: is_global && n > 0 && g.min_degree() == 1,
        edges,
        colouring,
        max_degree,
        welsh_powell: graph::welsh_powell_bound(g),
    })
}

/// Classifies `G` and evaluates the extremal bounds.
pub fn verify_extremal_bounds(g: &Graph, limits: &Limits) -> Result<BoundReport> {
    let global = is_global_amoeba(g, limits)?;
    bounds_for(g, global, limits.exact_cap)
}

#[derive(Clone, Debug)]
pub struct AmoebaReport {
    pub canonical_form: CanonicalForm,
    pub n: usize,
    pub m: usize,
    pub degree_sequence: Vec<usize>,
    pub is_local: bool,
    pub is_global: bool,
    /// `|S_G|`.
    pub group_order: BigUint,
    /// Orbits of `S_G`, each sorted, ordered by smallest point.
    pub orbits: Vec<Vec<usize>>,
    pub trivial_replacements: usize,
    pub nontrivial_replacements: usize,
    /// Named checks in a fixed order: the two degree prefilters, then the
    /// decrement and orbit criteria for globality.
    pub prefilters: Vec<(&'static str, bool)>,
    pub decrement: DecrementCheck,
    pub bounds: BoundReport,
    /// Filled in by callers that measure time.
    pub elapsed: Option<Duration>,
}

fn inconsistent(what: String) -> Error {
    Error::Inconsistent(what)
}

pub fn classify(g: &Graph, limits: &Limits) -> Result<AmoebaReport> {
    let n = g.order();
    limits.check(n + 1)?;
    let reps: Vec<EdgeReplacement> = replacement::feasible_replacements(g);
    let trivial = reps.iter().filter(|r| r.trivial).count();
    let group = replacement::amoeba_group(g);
    let group_order = group.order();
    let is_local = group_order == factorial(n);
    let orbits = group.orbits();

    let local_pre = local_degree_prefilter(g);
    let global_pre = global_degree_prefilter(g);
    let is_global = global_pre && replacement::amoeba_group(&g.with_isolates(1)).is_symmetric();

    let decrement = decrement_from_orbits(g, &orbits);
    let orbit_ok = orbit_condition(g, &orbits);
    if is_local && !local_pre {
        return Err(inconsistent(format!("local graph fails the local degree prefilter: {g:?}")));
    }
    if decrement.holds != is_global {
        return Err(inconsistent(format!("decrement criterion disagrees with S_(G+K1): {g:?}")));
    }
    if g.size() > 0 && orbit_ok != is_global {
        return Err(inconsistent(format!("orbit criterion disagrees with S_(G+K1): {g:?}")));
    }
    if g.min_degree() == 0 && is_local != is_global {
        return Err(inconsistent(format!("local and global differ with an isolated vertex: {g:?}")));
    }

    Ok(AmoebaReport {
        canonical_form: canon::canonical_form(g),
        n,
        m: g.size(),
        degree_sequence: g.degree_sequence(),
        is_local,
        is_global,
        group_order,
        orbits,
        trivial_replacements: trivial,
        nontrivial_replacements: reps.len() - trivial,
        prefilters: alloc::vec![
            ("local_degrees", local_pre),
            ("global_degrees", global_pre),
            ("degree_decrement", decrement.holds),
            ("orbit_degree_one", orbit_ok),
        ],
        decrement,
        bounds: bounds_for(g, is_global, limits.exact_cap)?,
        elapsed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn prefilters() {
        assert!(!local_degree_prefilter(&star(4).unwrap()));
        assert!(local_degree_prefilter(&path(5).unwrap()));
        assert!(local_degree_prefilter(&h_graph(7).unwrap()));
        assert!(!global_degree_prefilter(&cycle(4).unwrap()));
        assert!(!global_degree_prefilter(&complete_minus_matching(4, 1).unwrap()));
        assert!(global_degree_prefilter(&path(4).unwrap()));
        assert!(global_degree_prefilter(&Graph::empty(3)));
    }

    #[test]
    fn small_verdicts() {
        for k in 2..=6 {
            assert!(is_local_amoeba(&path(k).unwrap(), &lim()).unwrap());
            assert!(is_global_amoeba(&path(k).unwrap(), &lim()).unwrap());
        }
        assert!(!is_local_amoeba(&cycle(5).unwrap(), &lim()).unwrap());
        assert!(is_local_amoeba(&c5_plus(), &lim()).unwrap());
        assert!(!is_global_amoeba(&c5_plus(), &lim()).unwrap());
        assert!(is_global_amoeba(&Graph::empty(1), &lim()).unwrap());
        assert!(is_global_amoeba(&Graph::empty(4), &lim()).unwrap());
        let pc = path(3).unwrap().disjoint_union(&cycle(3).unwrap());
        assert!(is_global_amoeba(&pc, &lim()).unwrap());
    }

    #[test]
    fn classify_examples() {
        let h6 = classify(&h_graph(6).unwrap(), &lim()).unwrap();
        assert!(h6.is_local && h6.is_global);
        assert_eq!(h6.group_order, BigUint::from(720u32));
        let two_p3 = classify(&path(3).unwrap().disjoint_union(&path(3).unwrap()), &lim()).unwrap();
        assert!(!two_p3.is_local && two_p3.is_global);
        let star = classify(&star(4).unwrap(), &lim()).unwrap();
        assert!(!star.is_local && !star.is_global);
    }

    #[test]
    fn cap_is_enforced() {
        let g = path(14).unwrap();
        assert!(matches!(classify(&g, &lim()), Err(Error::CapExceeded { .. })));
        assert!(is_local_amoeba(&g, &lim()).is_ok());
        assert!(is_local_amoeba(&path(15).unwrap(), &lim()).is_err());
        // a failing prefilter needs no group
        assert_eq!(is_local_amoeba(&star(20).unwrap(), &lim()), Ok(false));
    }

    #[test]
    fn g9_decrement_witnesses() {
        let g9 = g_graph(9).unwrap();
        let check = degree_decrement_check(&g9, &lim()).unwrap();
        assert!(check.holds);
        for (x, y) in check.witnesses {
            assert_eq!(g9.degree(y.unwrap()) + 1, g9.degree(x));
        }
        assert!(!degree_decrement_check(&cycle(4).unwrap(), &lim()).unwrap().holds);
    }

    #[test]
    fn extremal_bounds() {
        for n in 2..=10 {
            let r = verify_extremal_bounds(&h_graph(n).unwrap(), &lim()).unwrap();
            assert!(r.applicable && r.edges.tight && r.all_satisfied(), "n = {n}");
            let c = r.colouring.unwrap();
            assert_eq!((c.clique_number, c.chromatic_number), (n / 2 + 1, n / 2 + 1));
        }
        let sf = star_forest(3).unwrap();
        let r = verify_extremal_bounds(&sf, &lim()).unwrap();
        assert!(r.applicable);
        let d = r.max_degree.unwrap();
        assert_eq!((d.value, d.bound, d.tight), (3, 3, true));
        let r = verify_extremal_bounds(&g_graph(9).unwrap(), &lim()).unwrap();
        assert!(r.applicable && !r.edges.tight && r.edges.satisfied);
        assert_eq!(r.colouring.unwrap().chromatic_number, 5);
        assert!(!verify_extremal_bounds(&cycle(5).unwrap(), &lim()).unwrap().applicable);
    }
}
