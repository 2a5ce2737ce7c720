//! Brute-force permutation oracle.
//!
//! Everything in this module works directly with subgroups of the holomorph
//! as explicit sorted element lists — no gamma functions, no label
//! arithmetic, no closed forms. Regular subgroups are found by closing
//! singletons and pairs of candidate elements under composition; edges are
//! decided by literal conjugation. The only shared ingredient with the
//! analytic side is affine-map composition itself, so an agreement between
//! the two is evidence, not circularity.
//!
//! The oracle is a desk-scale instrument: it refuses holomorphs larger than
//! [`HOL_BOUND`].

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::catalog::full_catalog;
use crate::error::{Error, Result};
use crate::gamma::{GammaFunction, HolomorphElement};
use crate::group_id::{classify, IsoClass};
use crate::modring::{geometric_sum, Modulus, Residue, UnitAut};
use crate::normgraph::{build_graph, Edge, EdgeProvenance, Engine, NormalizingGraph};

/// Largest holomorph order the oracle accepts (`m * phi(m) <= 4096`).
pub const HOL_BOUND: u64 = 4096;

/// A subgroup of the holomorph as a sorted, duplicate-free element list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PermSubgroup {
    modulus: Modulus,
    elements: Vec<HolomorphElement>,
}

impl PermSubgroup {
    fn from_sorted(modulus: Modulus, elements: Vec<HolomorphElement>) -> Self {
        debug_assert!(
            elements.windows(2).all(|w| w[0] < w[1]),
            "elements must be sorted unique"
        );
        PermSubgroup { modulus, elements }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[HolomorphElement] {
        &self.elements
    }

    pub fn contains(&self, e: HolomorphElement) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// Regularity on the underlying set: order `m` and pairwise distinct
    /// translation parts (equivalently, the orbit map `n -> n(0)` is a
    /// bijection onto `G`).
    pub fn is_regular(&self) -> bool {
        let mm = self.modulus.m();
        if self.order() != mm {
            return false;
        }
        let mut seen = vec![false; mm as usize];
        for e in &self.elements {
            let b = e.trans().value() as usize;
            if seen[b] {
                return false;
            }
            seen[b] = true;
        }
        true
    }
}

/// Whether `(a, b)^t` is the identity, via `(a, b)^t = (a^t, b * (1 + a + ... + a^(t-1)))`.
fn power_is_identity(e: HolomorphElement, t: u64) -> bool {
    let m = e.modulus();
    e.aut().pow(t) == UnitAut::identity(m)
        && m.mul(e.trans().value(), geometric_sum(e.aut(), t).value()) == 0
}

/// Closure of `gens` under composition, as sorted element keys `a*m + b`.
/// Returns `None` as soon as the closure exceeds `cap` elements.
fn closure_bounded(
    modulus: Modulus,
    gens: &[HolomorphElement],
    cap: usize,
) -> Option<Vec<HolomorphElement>> {
    let mm = modulus.m();
    let key = |e: HolomorphElement| e.aut().multiplier() * mm + e.trans().value();
    let identity = HolomorphElement::identity(modulus);
    let mut seen: HashSet<u64> = HashSet::with_capacity(cap + 1);
    seen.insert(key(identity));
    let mut frontier = vec![identity];
    let mut all = vec![identity];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x.compose(g);
            if seen.insert(key(y)) {
                if seen.len() > cap {
                    return None;
                }
                frontier.push(y);
                all.push(y);
            }
        }
    }
    all.sort_unstable();
    Some(all)
}

/// Every element of the holomorph whose order divides `m` — the only
/// possible members of a subgroup of order `m = p^n`.
fn candidate_elements(modulus: Modulus) -> Vec<HolomorphElement> {
    let mm = modulus.m();
    let mut out = Vec::new();
    for a in modulus.units() {
        let aut = UnitAut::new(modulus, a).expect("units(m) yields units");
        for b in 0..mm {
            let e = HolomorphElement::new(aut, Residue::new(modulus, b));
            if power_is_identity(e, mm) {
                out.push(e);
            }
        }
    }
    out
}

fn ensure_within_bound(modulus: Modulus) -> Result<()> {
    let hol_order = modulus.m().saturating_mul(modulus.phi());
    if hol_order > HOL_BOUND {
        return Err(Error::OracleBound {
            order: hol_order,
            bound: HOL_BOUND,
        });
    }
    Ok(())
}

/// All regular subgroups of `Hol(C_{p^n})`, found by brute force: close
/// every singleton and every pair of candidate elements, keep the closures
/// of order `m` that act regularly, and deduplicate by element list.
///
/// Every circle group arising here is generated by at most two elements,
/// so pair closures are exhaustive (`closures_of_triples_add_nothing`
/// re-checks that claim at desk scale without assuming it).
pub fn enumerate_regular_subgroups(modulus: Modulus) -> Result<Vec<PermSubgroup>> {
    ensure_within_bound(modulus)?;
    let mm = modulus.m();
    let cap = mm as usize;
    let candidates = candidate_elements(modulus);
    let found: BTreeSet<Vec<HolomorphElement>> = (0..candidates.len())
        .into_par_iter()
        .map(|i| {
            let mut local: Vec<Vec<HolomorphElement>> = Vec::new();
            let mut push = |els: Vec<HolomorphElement>| {
                let sub = PermSubgroup::from_sorted(modulus, els);
                if sub.is_regular() {
                    local.push(sub.elements);
                }
            };
            if let Some(els) = closure_bounded(modulus, &[candidates[i]], cap) {
                push(els);
            }
            for j in (i + 1)..candidates.len() {
                if let Some(els) = closure_bounded(modulus, &[candidates[i], candidates[j]], cap) {
                    push(els);
                }
            }
            local
        })
        .flatten()
        .collect();
    Ok(found
        .into_iter()
        .map(|els| PermSubgroup::from_sorted(modulus, els))
        .collect())
}

/// Whether every `n`-conjugate of `target` stays inside `target`.
fn normalizes(n: &PermSubgroup, target: &PermSubgroup) -> bool {
    for &x in n.elements() {
        let xi = x.inverse();
        for &g in target.elements() {
            if !target.contains(xi.compose(g).compose(x)) {
                return false;
            }
        }
    }
    true
}

/// Mutual normalization by explicit conjugation of full element lists.
pub fn mutually_normalize_perm(a: &PermSubgroup, b: &PermSubgroup) -> bool {
    normalizes(a, b) && normalizes(b, a)
}

/// Reads the gamma function back off a regular subgroup: the unique element
/// with translation part `b` contributes `table[b] = a`. Panics when the
/// subgroup is not regular; the table is re-validated on construction.
pub fn reconstruct_gamma(sub: &PermSubgroup) -> Result<GammaFunction> {
    assert!(
        sub.is_regular(),
        "gamma reconstruction requires a regular subgroup"
    );
    let mm = sub.modulus().m();
    let mut table = vec![0u64; mm as usize];
    for e in sub.elements() {
        table[e.trans().value() as usize] = e.aut().multiplier();
    }
    GammaFunction::new(sub.modulus(), table)
}

/// Classifies every subgroup by reconstructing its gamma function and
/// running the structural classifier; returns counts in [`IsoClass::all`]
/// order (zero entries included).
pub fn count_by_iso(subs: &[PermSubgroup]) -> Result<Vec<(IsoClass, u64)>> {
    let mut counts: Vec<(IsoClass, u64)> = IsoClass::all().into_iter().map(|c| (c, 0)).collect();
    for sub in subs {
        let class = classify(&reconstruct_gamma(sub)?)?;
        let slot = counts
            .iter_mut()
            .find(|(c, _)| *c == class)
            .expect("all() covers every class");
        slot.1 += 1;
    }
    Ok(counts)
}

/// Matches each enumerated subgroup to its catalog vertex (by reconstructed
/// gamma table) — `Err(UnmatchedSubgroup)` when the two sides do not pair up
/// exactly.
fn match_to_catalog(modulus: Modulus, subs: &[PermSubgroup]) -> Result<Vec<PermSubgroup>> {
    let catalog = full_catalog(modulus)?;
    let mut by_vertex: Vec<Option<&PermSubgroup>> = vec![None; catalog.len()];
    for sub in subs {
        let gamma = reconstruct_gamma(sub)?;
        let Some(ci) = catalog.iter().position(|e| e.gamma == gamma) else {
            return Err(Error::UnmatchedSubgroup(gamma.table().to_vec()));
        };
        if by_vertex[ci].is_some() {
            // Two distinct subgroups cannot share a gamma table; defensive.
            return Err(Error::UnmatchedSubgroup(gamma.table().to_vec()));
        }
        by_vertex[ci] = Some(sub);
    }
    let mut ordered = Vec::with_capacity(catalog.len());
    for (ci, slot) in by_vertex.into_iter().enumerate() {
        match slot {
            Some(sub) => ordered.push(sub.clone()),
            None => {
                return Err(Error::UnmatchedSubgroup(catalog[ci].gamma.table().to_vec()));
            }
        }
    }
    Ok(ordered)
}

/// The normalizing graph computed entirely by brute force: enumerated
/// subgroups as vertices (matched to catalog order) and conjugation-decided
/// edges.
pub fn oracle_graph(modulus: Modulus) -> Result<NormalizingGraph> {
    let subs = enumerate_regular_subgroups(modulus)?;
    let ordered = match_to_catalog(modulus, &subs)?;
    let vertices = full_catalog(modulus)?;
    let mut pairs = Vec::new();
    for i in 0..ordered.len() {
        for j in (i + 1)..ordered.len() {
            pairs.push((i, j));
        }
    }
    let edges: Vec<Edge> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            mutually_normalize_perm(&ordered[i], &ordered[j]).then_some(Edge {
                a: i,
                b: j,
                provenance: EdgeProvenance::Oracle,
            })
        })
        .collect();
    Ok(NormalizingGraph::from_parts(modulus, vertices, edges))
}

/// Outcome of one engine-versus-oracle comparison.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub modulus: Modulus,
    pub engine: Engine,
    pub catalog_total: u64,
    pub oracle_total: u64,
    pub catalog_by_class: Vec<(IsoClass, u64)>,
    pub oracle_by_class: Vec<(IsoClass, u64)>,
    /// Every enumerated subgroup paired with exactly one catalog vertex.
    pub vertices_match: bool,
    /// A reconstructed table with no catalog mate (or an unmatched catalog
    /// table), when `vertices_match` is false.
    pub unmatched_table: Option<Vec<u64>>,
    pub engine_edges: usize,
    pub oracle_edges: usize,
    pub edges_match: bool,
    /// First vertex pair on which the engine and the oracle disagree:
    /// `(label_a, label_b, engine_says, oracle_says)`.
    pub first_divergence: Option<(String, String, bool, bool)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.catalog_total == self.oracle_total
            && self.catalog_by_class == self.oracle_by_class
            && self.vertices_match
            && self.edges_match
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "verification at {} (engine {} vs permutation oracle)",
            self.modulus, self.engine
        )?;
        writeln!(
            f,
            "  vertices: catalog {} oracle {} [{}]",
            self.catalog_total,
            self.oracle_total,
            if self.catalog_total == self.oracle_total {
                "match"
            } else {
                "MISMATCH"
            }
        )?;
        for (class, want) in &self.catalog_by_class {
            let got = self
                .oracle_by_class
                .iter()
                .find(|(c, _)| c == class)
                .map(|(_, k)| *k)
                .unwrap_or(0);
            if *want != 0 || got != 0 {
                writeln!(
                    f,
                    "    {class}: catalog {want} oracle {got} [{}]",
                    if *want == got { "match" } else { "MISMATCH" }
                )?;
            }
        }
        if let Some(table) = &self.unmatched_table {
            writeln!(f, "  unmatched gamma table: {table:?}")?;
        }
        writeln!(
            f,
            "  edges: engine {} oracle {} [{}]",
            self.engine_edges,
            self.oracle_edges,
            if self.edges_match {
                "match"
            } else {
                "MISMATCH"
            }
        )?;
        if let Some((a, b, engine_says, oracle_says)) = &self.first_divergence {
            writeln!(
                f,
                "  first divergence: ({a}, {b}) engine {engine_says} oracle {oracle_says}"
            )?;
        }
        write!(
            f,
            "verdict: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Runs the full cross-check at one modulus: vertex counts, per-class
/// counts, vertex pairing and the complete edge set, engine versus oracle.
///
/// `Err` is reserved for infrastructure failures (feasibility bound,
/// invalid modulus); a mathematical disagreement comes back as a report
/// whose `passed()` is false.
pub fn verify(modulus: Modulus, engine: Engine) -> Result<VerifyReport> {
    let graph = build_graph(modulus, engine)?;
    let subs = enumerate_regular_subgroups(modulus)?;
    let catalog_by_class: Vec<(IsoClass, u64)> = IsoClass::all()
        .into_iter()
        .map(|c| {
            (
                c,
                graph.vertices().iter().filter(|v| v.class == c).count() as u64,
            )
        })
        .collect();
    let oracle_by_class = count_by_iso(&subs)?;
    let mut report = VerifyReport {
        modulus,
        engine,
        catalog_total: graph.vertices().len() as u64,
        oracle_total: subs.len() as u64,
        catalog_by_class,
        oracle_by_class,
        vertices_match: false,
        unmatched_table: None,
        engine_edges: graph.edge_count(),
        oracle_edges: 0,
        edges_match: false,
        first_divergence: None,
    };
    let ordered = match match_to_catalog(modulus, &subs) {
        Ok(ordered) => ordered,
        Err(Error::UnmatchedSubgroup(table)) => {
            report.unmatched_table = Some(table);
            return Ok(report);
        }
        Err(other) => return Err(other),
    };
    report.vertices_match = true;
    let mut oracle_edges = 0usize;
    for i in 0..ordered.len() {
        for j in (i + 1)..ordered.len() {
            let oracle_says = mutually_normalize_perm(&ordered[i], &ordered[j]);
            if oracle_says {
                oracle_edges += 1;
            }
            let engine_says =
                graph.contains_edge(graph.vertices()[i].label, graph.vertices()[j].label);
            if engine_says != oracle_says && report.first_divergence.is_none() {
                report.first_divergence = Some((
                    graph.vertices()[i].label.to_string(),
                    graph.vertices()[j].label.to_string(),
                    engine_says,
                    oracle_says,
                ));
            }
        }
    }
    report.oracle_edges = oracle_edges;
    report.edges_match = report.first_divergence.is_none();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::expected_counts;

    fn modulus(p: u64, n: u32) -> Modulus {
        Modulus::new(p, n).expect("valid test modulus")
    }

    /// Closes every triple as well, confirming pairs were enough.
    fn closures_of_triples_add_nothing(m: Modulus) {
        let cap = m.m() as usize;
        let candidates = candidate_elements(m);
        let from_pairs: BTreeSet<Vec<HolomorphElement>> = enumerate_regular_subgroups(m)
            .unwrap()
            .into_iter()
            .map(|s| s.elements)
            .collect();
        let mut triples: Vec<(usize, usize, usize)> = Vec::new();
        for i in 0..candidates.len() {
            for j in (i + 1)..candidates.len() {
                for k in (j + 1)..candidates.len() {
                    triples.push((i, j, k));
                }
            }
        }
        let extra: Vec<Vec<HolomorphElement>> = triples
            .par_iter()
            .filter_map(|&(i, j, k)| {
                let gens = [candidates[i], candidates[j], candidates[k]];
                let els = closure_bounded(m, &gens, cap)?;
                let sub = PermSubgroup::from_sorted(m, els);
                (sub.is_regular() && !from_pairs.contains(&sub.elements)).then_some(sub.elements)
            })
            .collect();
        assert!(
            extra.is_empty(),
            "triple closures found {} subgroups beyond pairs at {m}",
            extra.len()
        );
    }

    #[test]
    fn regular_subgroup_counts_are_frozen() {
        for (p, n, count) in [
            (2u64, 3u32, 6usize),
            (2, 4, 16),
            (2, 5, 28),
            (3, 2, 3),
            (3, 3, 9),
            (5, 2, 5),
        ] {
            let subs = enumerate_regular_subgroups(modulus(p, n)).unwrap();
            assert_eq!(subs.len(), count, "regular subgroup count at {p}^{n}");
            assert_eq!(
                subs.len() as u64,
                expected_counts(modulus(p, n)).unwrap().total,
                "oracle total equals the catalog prediction at {p}^{n}"
            );
        }
    }

    #[test]
    fn oracle_class_census_matches_catalog_at_2_4() {
        let m = modulus(2, 4);
        let subs = enumerate_regular_subgroups(m).unwrap();
        let got = count_by_iso(&subs).unwrap();
        let expected = expected_counts(m).unwrap();
        for (class, count) in got {
            assert_eq!(
                count,
                expected.class_count(class),
                "count for {class} at 2^4"
            );
        }
    }

    #[test]
    fn every_subgroup_reconstructs_to_a_validated_gamma() {
        for m in [modulus(2, 4), modulus(3, 2)] {
            for sub in enumerate_regular_subgroups(m).unwrap() {
                let gamma = reconstruct_gamma(&sub).expect("regular subgroups yield gamma tables");
                assert!(
                    gamma.validate(),
                    "reconstructed table satisfies the functional equation"
                );
                assert_eq!(
                    gamma.nu_image(),
                    sub.elements,
                    "nu embeds the circle group back onto the subgroup"
                );
            }
        }
    }

    #[test]
    fn pair_generation_is_exhaustive_at_desk_scale() {
        closures_of_triples_add_nothing(modulus(2, 3));
        closures_of_triples_add_nothing(modulus(3, 2));
        closures_of_triples_add_nothing(modulus(2, 4));
    }

    #[test]
    fn oracle_graph_agrees_with_every_engine_at_small_scale() {
        for m in [modulus(2, 3), modulus(3, 2)] {
            let oracle = oracle_graph(m).unwrap();
            for engine in [Engine::ClosedForm, Engine::Modular, Engine::General] {
                let analytic = build_graph(m, engine).unwrap();
                assert_eq!(
                    oracle.edge_pairs(),
                    analytic.edge_pairs(),
                    "oracle vs {engine} at {m}"
                );
            }
            assert!(
                oracle
                    .edges()
                    .iter()
                    .all(|e| e.provenance == EdgeProvenance::Oracle),
                "oracle edges carry oracle provenance"
            );
        }
    }

    #[test]
    fn conjugation_predicate_is_symmetric_with_true_diagonal() {
        let subs = enumerate_regular_subgroups(modulus(2, 3)).unwrap();
        for a in &subs {
            assert!(
                mutually_normalize_perm(a, a),
                "subgroups normalize themselves"
            );
            for b in &subs {
                assert_eq!(
                    mutually_normalize_perm(a, b),
                    mutually_normalize_perm(b, a),
                    "conjugation test is symmetric"
                );
            }
        }
    }

    #[test]
    fn oversized_holomorph_is_refused() {
        let m = modulus(2, 7);
        match enumerate_regular_subgroups(m) {
            Err(Error::OracleBound { order, bound }) => {
                assert_eq!(order, 128 * 64);
                assert_eq!(bound, HOL_BOUND);
            }
            other => panic!("expected the feasibility bound, got {other:?}"),
        }
        assert!(matches!(
            verify(m, Engine::ClosedForm),
            Err(Error::OracleBound { .. })
        ));
    }

    #[test]
    fn verify_reports_pass_at_desk_scale() {
        for m in [modulus(2, 3), modulus(3, 2)] {
            let report = verify(m, Engine::Modular).unwrap();
            assert!(report.passed(), "verification passes at {m}");
            assert!(report.vertices_match);
            assert!(report.edges_match);
            assert_eq!(report.engine_edges, report.oracle_edges);
            let text = report.to_string();
            assert!(text.contains("verdict: PASS"), "report text: {text}");
            assert!(text.ends_with("PASS"));
        }
    }
}
