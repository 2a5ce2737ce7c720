//! Regular subgroups of the holomorph of a finite cyclic `p`-group.
//!
//! For `G = C_{p^n}`, the holomorph `Hol(G) = G . Aut(G)` sits inside the
//! symmetric group on `G` as the affine maps `x -> a*x + b`. Each regular
//! subgroup `N <= Hol(G)` is encoded by a single *gamma function*
//! `gamma : G -> Aut(G)` satisfying the functional equation
//! `gamma(gamma(h)(g) + h) = gamma(g) . gamma(h)`; the subgroup is recovered
//! as `{ gamma(g) rho(g) : g in G }` and carries a second group operation
//! `g o h = gamma(h)(g) + h` (the circle group) turning `(G, +, o)` into a
//! skew brace.
//!
//! This crate builds the complete catalog of those subgroups for a given
//! `p^n`, classifies each circle group up to isomorphism, decides which pairs
//! *mutually normalize* one another inside `Sym(G)` — by three independent
//! engines (closed-form label rules, a congruence criterion, and the defining
//! table-level criterion) — and assembles the result into the *local
//! normalizing graph*, exportable as DOT or JSON. A brute-force permutation
//! [`oracle`] re-derives everything from raw affine maps at small sizes and
//! cross-checks counts, vertices, and edges.
//!
//! Modules, bottom-up:
//! - [`modring`]: arithmetic in `Z/p^n`, unit automorphisms, geometric sums,
//!   and the power-sum lemmas behind the closed-form edge rules;
//! - [`gamma`]: gamma functions proper — validation, circle operation,
//!   conjugation action, structural predicates;
//! - [`group_id`]: isomorphism classification of circle groups;
//! - [`catalog`]: the named subgroup families and the full labeled catalog;
//! - [`normgraph`]: the three edge engines, clique families, graph assembly,
//!   and export;
//! - [`oracle`]: independent brute-force enumeration and cross-verification.

pub mod catalog;
pub mod error;
pub mod gamma;
pub mod group_id;
pub mod modring;
pub mod normgraph;
pub mod oracle;

pub use error::{Error, Result};
pub use modring::{Modulus, Residue, UnitAut};
