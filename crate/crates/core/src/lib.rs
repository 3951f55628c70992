//! Feasible edge-replacement groups and amoeba decisions.
//!
//! A graph `G` on `n` vertices is a *local amoeba* when the permutations
//! realising its feasible edge-replacements (remove one edge, add one
//! pair, obtain an isomorphic graph) generate the full symmetric group, and
//! a *global amoeba* when `G ∪ K1` is a local amoeba.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is a pure
//! function over immutable values:
//!
//! * [`graph`]: the [`Graph`] type, relabelling and standard parameters.
//! * [`canon`]: partition refinement, automorphism generators, canonical
//!   forms and isomorphisms.
//! * [`perm`] and [`group`]: permutations and a deterministic Schreier–Sims
//!   engine ([`PermGroup`]).
//! * [`replacement`]: feasible replacements, their cosets and the group `S_G`.
//! * [`classifier`]: prefilters, local/global decisions, reports and the
//!   extremal bound checks.
//! * [`constructions`]: the named graph families and combinators.
//! * [`oracle`]: brute-force copy reachability inside `K_N`.
//!
//! Vertices are 0-based internally. Everything user facing (cycle notation,
//! error messages, reports) is 1-based.
#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod canon;
pub mod classifier;
pub mod constructions;
mod error;
pub mod graph;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod replacement;

pub use canon::CanonicalForm;
pub use classifier::{AmoebaReport, Limits};
pub use error::{Error, Result};
pub use graph::Graph;
pub use group::PermGroup;
pub use perm::Permutation;
pub use replacement::EdgeReplacement;
