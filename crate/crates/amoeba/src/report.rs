//! JSON shapes emitted by the command line. Vertices are 1-based and large
//! integers are decimal strings.

use std::collections::BTreeMap;
use std::time::Duration;

use amoeba_core::classifier::{AmoebaReport, BoundReport, Check, ColouringCheck};
use amoeba_core::oracle::SweepEntry;
use amoeba_core::{EdgeReplacement, Graph, PermGroup};
use serde::Serialize;

use crate::graph6;

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|x| x + 1).collect()).collect()
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplacementCounts {
    pub trivial: usize,
    pub nontrivial: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckJson {
    pub value: usize,
    pub bound: usize,
    pub satisfied: bool,
    pub tight: bool,
}

impl From<&Check> for CheckJson {
    fn from(c: &Check) -> Self {
        CheckJson {
            value: c.value,
            bound: c.bound,
            satisfied: c.satisfied,
            tight: c.tight,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ColouringJson {
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub bound: usize,
    pub satisfied: bool,
    pub tight: bool,
}

impl From<&ColouringCheck> for ColouringJson {
    fn from(c: &ColouringCheck) -> Self {
        ColouringJson {
            clique_number: c.clique_number,
            chromatic_number: c.chromatic_number,
            bound: c.bound,
            satisfied: c.satisfied,
            tight: c.tight,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct BoundsJson {
    pub applicable: bool,
    pub edges: CheckJson,
    pub colouring: Option<ColouringJson>,
    pub max_degree: Option<CheckJson>,
    pub welsh_powell: usize,
}

impl From<&BoundReport> for BoundsJson {
    fn from(b: &BoundReport) -> Self {
        BoundsJson {
            applicable: b.applicable,
            edges: (&b.edges).into(),
            colouring: b.colouring.as_ref().map(Into::into),
            max_degree: b.max_degree.as_ref().map(Into::into),
            welsh_powell: b.welsh_powell,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ReportJson {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub degree_sequence: Vec<usize>,
    pub is_local: bool,
    pub is_global: bool,
    pub group_order: String,
    pub orbits: Vec<Vec<usize>>,
    pub replacements: ReplacementCounts,
    pub prefilters: BTreeMap<String, bool>,
    pub bounds: BoundsJson,
    pub elapsed_ms: u128,
    /// Vertex of degree `d >= 2` mapped to a vertex of degree `d - 1` in
    /// its orbit, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<usize, Option<usize>>>,
}

impl ReportJson {
    pub fn new(g: &Graph, r: &AmoebaReport, elapsed: Duration, witnesses: bool) -> Self {
        ReportJson {
            graph6: graph6::encode(g),
            n: r.n,
            m: r.m,
            degree_sequence: r.degree_sequence.clone(),
            is_local: r.is_local,
            is_global: r.is_global,
            group_order: r.group_order.to_string(),
            orbits: one_based(&r.orbits),
            replacements: ReplacementCounts {
                trivial: r.trivial_replacements,
                nontrivial: r.nontrivial_replacements,
            },
            prefilters: r.prefilters.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            bounds: (&r.bounds).into(),
            elapsed_ms: elapsed.as_millis(),
            witnesses: witnesses.then(|| {
                r.decrement
                    .witnesses
                    .iter()
                    .map(|(x, y)| (x + 1, y.map(|y| y + 1)))
                    .collect()
            }),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ReplacementJson {
    pub source: [usize; 2],
    pub target: [usize; 2],
    pub representative: String,
    pub trivial: bool,
}

impl From<&EdgeReplacement> for ReplacementJson {
    fn from(r: &EdgeReplacement) -> Self {
        ReplacementJson {
            source: [r.source.0 + 1, r.source.1 + 1],
            target: [r.target.0 + 1, r.target.1 + 1],
            representative: r.representative.to_string(),
            trivial: r.trivial,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct GroupJson {
    pub graph6: String,
    pub degree: usize,
    pub order: String,
    pub is_symmetric: bool,
    pub generators: Vec<String>,
    pub base: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub automorphisms: Option<Vec<String>>,
}

impl GroupJson {
    pub fn new(g: &Graph, group: &PermGroup) -> Self {
        GroupJson {
            graph6: graph6::encode(g),
            degree: group.degree(),
            order: group.order().to_string(),
            is_symmetric: group.is_symmetric(),
            generators: group.generators().iter().map(|p| p.to_string()).collect(),
            base: group.base().iter().map(|b| b + 1).collect(),
            orbits: one_based(&group.orbits()),
            automorphisms: None,
        }
    }
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    pub local: bool,
    pub global: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SweepLine {
    pub graph6: String,
    pub classifier: Verdicts,
    pub oracle: Verdicts,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl From<&SweepEntry> for SweepLine {
    fn from(e: &SweepEntry) -> Self {
        SweepLine {
            graph6: graph6::encode(&e.graph),
            classifier: Verdicts {
                local: e.classifier.local,
                global: e.classifier.global,
            },
            oracle: Verdicts {
                local: e.oracle.local,
                global: e.oracle.global,
            },
            matches: e.matches(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct OracleJson {
    pub graph6: String,
    pub host_order: usize,
    pub copies: usize,
    pub expected_copies: String,
    pub components: usize,
    pub component_sizes: Vec<usize>,
    pub connected: bool,
    /// The classifier verdict this host corresponds to (`local` for `N = n`,
    /// `global` for `N = n + 1`), if any.
    pub classifier: Option<bool>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}
