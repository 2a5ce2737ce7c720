//! The local normalizing graph over the regular subgroups of `Hol(C_{p^n})`.
//!
//! Vertices are the catalog entries; two vertices are joined when their
//! regular subgroups normalize each other inside `Sym(G)`. Three independent
//! decision engines are kept side by side:
//!
//! * **general** — the ground-truth criterion, an exhaustive check over all
//!   pairs `(g, h)` of the two conjugation conditions expressed through the
//!   circle operations of the two tables;
//! * **modular** — an `O(1)`-per-pair congruence test using only the
//!   multiplier tables and the two periods `q` and `r`;
//! * **closed form** — constant-time arithmetic in the label parameters (no
//!   tables at all), available for `p = 2, n >= 4` and all odd `p`.
//!
//! Their agreement — and the agreement with the brute-force permutation
//! oracle — is the central claim this crate verifies. The module also emits
//! the clique families (`Normals4`, `SD4`, `H`, `A`, `S`) that cover every
//! edge, and serializes graphs to DOT and JSON.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{full_catalog, CatalogEntry, Family, SubgroupLabel};
use crate::error::{Error, Result};
use crate::gamma::GammaFunction;
use crate::modring::Modulus;

/// Which decision procedure builds the edge set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Label arithmetic only; falls back to the modular criterion for the
    /// pairs it does not cover (`p = 2, n = 3`).
    ClosedForm,
    /// The period-congruence criterion.
    Modular,
    /// The exhaustive conjugation criterion.
    General,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::ClosedForm => "closed",
            Engine::Modular => "modular",
            Engine::General => "general",
        })
    }
}

/// How an edge was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeProvenance {
    ClosedForm,
    ModularCriterion,
    GeneralCriterion,
    /// Decided by explicit conjugation of permutation subgroups.
    Oracle,
}

impl fmt::Display for EdgeProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeProvenance::ClosedForm => "closed_form",
            EdgeProvenance::ModularCriterion => "modular_criterion",
            EdgeProvenance::GeneralCriterion => "general_criterion",
            EdgeProvenance::Oracle => "oracle",
        })
    }
}

/// First pair `(g, h)` violating the general mutual-normalization criterion,
/// or `None` when the two regular subgroups normalize each other.
///
/// The criterion checks, for all `g, h` (with `o` the circle of `gamma` and
/// `*` the circle of `delta`):
///
/// ```text
/// gamma(h) = gamma(h - (g o h) + (h * g))   and
/// delta(h) = delta(h - (g * h) + (h o g)).
/// ```
///
/// Panics when the tables live over different moduli.
pub fn mutually_normalize_general_witness(
    gamma: &GammaFunction,
    delta: &GammaFunction,
) -> Option<(u64, u64)> {
    let m = gamma.modulus();
    assert_eq!(m, delta.modulus(), "tables from different moduli");
    let mm = m.m();
    for g in 0..mm {
        for h in 0..mm {
            let arg1 = m.add(m.sub(h, gamma.circle_raw(g, h)), delta.circle_raw(h, g));
            if gamma.multiplier(h) != gamma.multiplier(arg1) {
                return Some((g, h));
            }
            let arg2 = m.add(m.sub(h, delta.circle_raw(g, h)), gamma.circle_raw(h, g));
            if delta.multiplier(h) != delta.multiplier(arg2) {
                return Some((g, h));
            }
        }
    }
    None
}

/// Whether the regular subgroups of two validated tables mutually normalize
/// in `Sym(G)` — the exhaustive ground-truth engine.
pub fn mutually_normalize_general(gamma: &GammaFunction, delta: &GammaFunction) -> bool {
    mutually_normalize_general_witness(gamma, delta).is_none()
}

/// First pair `(x, y)` violating the modular criterion, or `None`.
///
/// With `q` and `r` the periods of `gamma` and `delta`, the criterion is,
/// for all `x, y`:
///
/// ```text
/// x = delta(y)(x) + y - gamma(x)(y)   (mod q)   and
/// x = gamma(y)(x) + y - delta(x)(y)   (mod r).
/// ```
pub fn mutually_normalize_mod_witness(
    gamma: &GammaFunction,
    delta: &GammaFunction,
) -> Option<(u64, u64)> {
    let m = gamma.modulus();
    assert_eq!(m, delta.modulus(), "tables from different moduli");
    let mm = m.m();
    let q = gamma.period();
    let r = delta.period();
    for x in 0..mm {
        let gx = gamma.multiplier(x);
        let dx = delta.multiplier(x);
        for y in 0..mm {
            let lhs1 = m.add(m.mul(delta.multiplier(y), x), m.sub(y, m.mul(gx, y)));
            if !m.sub(lhs1, x).is_multiple_of(q) {
                return Some((x, y));
            }
            let lhs2 = m.add(m.mul(gamma.multiplier(y), x), m.sub(y, m.mul(dx, y)));
            if !m.sub(lhs2, x).is_multiple_of(r) {
                return Some((x, y));
            }
        }
    }
    None
}

/// The modular mutual-normalization criterion (agrees with the general
/// engine on validated tables; `O(m^2)` with constant work per pair).
pub fn mutually_normalize_mod(gamma: &GammaFunction, delta: &GammaFunction) -> bool {
    mutually_normalize_mod_witness(gamma, delta).is_none()
}

/// The label's parameters as a "cyclic family" member: `(u, s)` with table
/// `x -> sigma_{s x + 1}` and `s = p^u * w`. Covers `C(u, k)` together with
/// `G1 = C(n, 0)` and `G2 = C(n-1, 0)`, and `U(u, k, c)` for odd `p`.
fn cyclic_parameters(label: SubgroupLabel) -> Option<(u32, u64)> {
    let m = label.modulus();
    let n = m.n();
    let (u, w) = match label.family() {
        Family::G1 => (n, 1),
        Family::G2 => (n - 1, 1),
        Family::C { u, k } => (u, 2 * k + 1),
        Family::U { u, k, c } => (u, m.p() * k + c),
        _ => return None,
    };
    Some((u, m.divisors()[u as usize] * w))
}

/// Closed-form edge decision from label arithmetic alone.
///
/// Returns `None` when no closed-form rule applies — exactly the
/// `p = 2, n = 3` case, where the caller falls back to the modular
/// criterion. Everywhere else the rule system is total:
///
/// * named pairs: edges inside `{G1..G4}` and inside `{G3..G6}`, nothing
///   else among the six;
/// * cyclic pairs (`C`/`G1`/`G2`, or `U`): with `s = p^u(wp-ish twist)` the
///   table parameters, edge iff `s_a = s_b` both `mod p^(n-u_a)` and
///   `mod p^(n-u_b)`;
/// * `P(k)-P(h)` and `M(k)-M(h)`: `k = h (mod 2^(n-3))`;
/// * `P(k)-M(h)`: `k - h = 2^(n-4) (mod 2^(n-3))`;
/// * every other cross-family pair: no edge.
pub fn predicted_edge(a: SubgroupLabel, b: SubgroupLabel) -> Option<bool> {
    let m = a.modulus();
    assert_eq!(m, b.modulus(), "labels from different moduli");
    if a == b {
        return Some(true);
    }
    let n = m.n();
    if m.p() == 2 && n < 4 {
        return None;
    }
    let named_rank = |f: Family| match f {
        Family::G1 => Some(1u8),
        Family::G2 => Some(2),
        Family::G3 => Some(3),
        Family::G4 => Some(4),
        Family::G5 => Some(5),
        Family::G6 => Some(6),
        _ => None,
    };
    if let (Some(ra), Some(rb)) = (named_rank(a.family()), named_rank(b.family())) {
        return Some((ra <= 4 && rb <= 4) || (ra >= 3 && rb >= 3));
    }
    if let (Some((ua, sa)), Some((ub, sb))) = (cyclic_parameters(a), cyclic_parameters(b)) {
        let d = sa.abs_diff(sb);
        let div_a = m.divisors()[(n - ua) as usize];
        let div_b = m.divisors()[(n - ub) as usize];
        return Some(d % div_a == 0 && d % div_b == 0);
    }
    let pm = |f: Family| match f {
        Family::P { k } => Some((false, k)),
        Family::M { k } => Some((true, k)),
        _ => None,
    };
    if let (Some((ma, ka)), Some((mb, kb))) = (pm(a.family()), pm(b.family())) {
        let eighth = 1u64 << (n - 3);
        let diff = (ka + 2 * eighth - kb) % eighth;
        return Some(if ma == mb {
            diff == 0
        } else {
            diff == (1u64 << (n - 4)) % eighth
        });
    }
    // Remaining combinations (named vs P/M/C, C vs P/M) never normalize
    // each other.
    Some(false)
}

/// One undirected edge, endpoints as vertex indices with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub provenance: EdgeProvenance,
}

/// The local normalizing graph: catalog vertices plus a sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizingGraph {
    modulus: Modulus,
    vertices: Vec<CatalogEntry>,
    edges: Vec<Edge>,
}

impl NormalizingGraph {
    /// Assembles a graph, normalizing edge orientation (`a < b`), sorting
    /// and deduplicating. Panics on out-of-range indices or self-loops.
    pub fn from_parts(modulus: Modulus, vertices: Vec<CatalogEntry>, edges: Vec<Edge>) -> Self {
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|e| {
                assert!(e.a != e.b, "self-loops are excluded by construction");
                assert!(
                    e.a < vertices.len() && e.b < vertices.len(),
                    "edge index out of range"
                );
                if e.a < e.b {
                    e
                } else {
                    Edge {
                        a: e.b,
                        b: e.a,
                        provenance: e.provenance,
                    }
                }
            })
            .collect();
        edges.sort_unstable();
        edges.dedup_by_key(|e| (e.a, e.b));
        NormalizingGraph {
            modulus,
            vertices,
            edges,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn vertices(&self) -> &[CatalogEntry] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The edge set as index pairs (for cross-engine equality checks).
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.a, e.b)).collect()
    }

    /// Index of a label in the vertex list.
    pub fn vertex_index(&self, label: SubgroupLabel) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    /// Whether the two labels are joined.
    pub fn contains_edge(&self, a: SubgroupLabel, b: SubgroupLabel) -> bool {
        let (Some(i), Some(j)) = (self.vertex_index(a), self.vertex_index(b)) else {
            return false;
        };
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.edges
            .binary_search_by_key(&(i, j), |e| (e.a, e.b))
            .is_ok()
    }
}

/// Decides one vertex pair under the chosen engine, reporting how.
pub fn decide_pair(a: &CatalogEntry, b: &CatalogEntry, engine: Engine) -> (bool, EdgeProvenance) {
    match engine {
        Engine::General => (
            mutually_normalize_general(&a.gamma, &b.gamma),
            EdgeProvenance::GeneralCriterion,
        ),
        Engine::Modular => (
            mutually_normalize_mod(&a.gamma, &b.gamma),
            EdgeProvenance::ModularCriterion,
        ),
        Engine::ClosedForm => match predicted_edge(a.label, b.label) {
            Some(v) => (v, EdgeProvenance::ClosedForm),
            None => (
                mutually_normalize_mod(&a.gamma, &b.gamma),
                EdgeProvenance::ModularCriterion,
            ),
        },
    }
}

/// Builds the local normalizing graph over `full_catalog(modulus)` with the
/// chosen engine. Pair decisions run in parallel; the result is
/// deterministic (sorted edges over the catalog order).
pub fn build_graph(modulus: Modulus, engine: Engine) -> Result<NormalizingGraph> {
    let vertices = full_catalog(modulus)?;
    let mut pairs = Vec::with_capacity(vertices.len() * (vertices.len().saturating_sub(1)) / 2);
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            pairs.push((i, j));
        }
    }
    let edges: Vec<Edge> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let (connected, provenance) = decide_pair(&vertices[i], &vertices[j], engine);
            connected.then_some(Edge {
                a: i,
                b: j,
                provenance,
            })
        })
        .collect();
    Ok(NormalizingGraph::from_parts(modulus, vertices, edges))
}

/// The kind of a clique family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliqueKind {
    /// The four normal subgroups `{G1, G2, G3, G4}`.
    Normals4,
    /// `{G3, G4, G5, G6}` (at `n = 3`: `{G3, G4, P(0), P(1)}`).
    SD4,
    /// All cyclic-family vertices with `u >= ceil(n/2)`, including `G1`, `G2`.
    H,
    /// Same-`u` cyclic vertices with `k = t (mod p^(n-2u-1))` (and fixed `c`
    /// for odd `p`); `u < ceil(n/2)`.
    A { u: u32, t: u64, c: Option<u64> },
    /// The `P`/`M` squares `{P(k), M(k+2^(n-4)), P(k+2^(n-3)), M(k+2^(n-3)+2^(n-4))}`.
    S { k: u64 },
}

impl fmt::Display for CliqueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CliqueKind::Normals4 => f.write_str("Normals4"),
            CliqueKind::SD4 => f.write_str("SD4"),
            CliqueKind::H => f.write_str("H"),
            CliqueKind::A { u, t, c: None } => write!(f, "A({u},{t})"),
            CliqueKind::A { u, t, c: Some(c) } => write!(f, "A({u},{t},{c})"),
            CliqueKind::S { k } => write!(f, "S({k})"),
        }
    }
}

/// A named complete subgraph; the emitted families jointly cover every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamily {
    pub kind: CliqueKind,
    pub members: Vec<SubgroupLabel>,
}

/// The clique families of the graph at `modulus`, in a deterministic order:
/// `Normals4`, `SD4`, `H`, then the `A` families by `(u, t, c)`, then the
/// `S` families by `k` (for `p = 2`); `H` then `A` families for odd `p`.
pub fn clique_families(modulus: Modulus) -> Result<Vec<CliqueFamily>> {
    let p = modulus.p();
    let n = modulus.n();
    let label =
        |family| SubgroupLabel::new(modulus, family).expect("emitted family members are canonical");
    let mut out = Vec::new();
    if p == 2 {
        if n < 3 {
            return Err(Error::UnsupportedParameters { p, n });
        }
        out.push(CliqueFamily {
            kind: CliqueKind::Normals4,
            members: vec![
                label(Family::G1),
                label(Family::G2),
                label(Family::G3),
                label(Family::G4),
            ],
        });
        if n == 3 {
            // gamma_5 and gamma_6 do not exist at n = 3; the tables playing
            // their role in the second 4-clique are P(0) and P(1).
            out.push(CliqueFamily {
                kind: CliqueKind::SD4,
                members: vec![
                    label(Family::G3),
                    label(Family::G4),
                    label(Family::P { k: 0 }),
                    label(Family::P { k: 1 }),
                ],
            });
            out.push(CliqueFamily {
                kind: CliqueKind::H,
                members: vec![label(Family::G1), label(Family::G2)],
            });
            return Ok(out);
        }
        out.push(CliqueFamily {
            kind: CliqueKind::SD4,
            members: vec![
                label(Family::G5),
                label(Family::G6),
                label(Family::G3),
                label(Family::G4),
            ],
        });
        let lo = n.div_ceil(2);
        let mut h_members = Vec::new();
        for u in lo..=(n - 2) {
            for k in 0..1u64 << (n - u - 1) {
                h_members.push(label(Family::C { u, k }));
            }
        }
        h_members.push(label(Family::G2));
        h_members.push(label(Family::G1));
        out.push(CliqueFamily {
            kind: CliqueKind::H,
            members: h_members,
        });
        for u in 2..lo {
            let step = 1u64 << (n - 2 * u - 1);
            for t in 0..step {
                let members = (0..1u64 << (n - u - 1))
                    .filter(|k| k % step == t)
                    .map(|k| label(Family::C { u, k }))
                    .collect();
                out.push(CliqueFamily {
                    kind: CliqueKind::A { u, t, c: None },
                    members,
                });
            }
        }
        let quarter = 1u64 << (n - 2);
        let eighth = 1u64 << (n - 3);
        let sixteenth = 1u64 << (n - 4);
        for k in 0..eighth {
            out.push(CliqueFamily {
                kind: CliqueKind::S { k },
                members: vec![
                    label(Family::P { k }),
                    label(Family::M {
                        k: (k + sixteenth) % quarter,
                    }),
                    label(Family::P {
                        k: (k + eighth) % quarter,
                    }),
                    label(Family::M {
                        k: (k + eighth + sixteenth) % quarter,
                    }),
                ],
            });
        }
    } else {
        let lo = n.div_ceil(2);
        let mut h_members = Vec::new();
        for u in lo..n {
            for k in 0..modulus.divisors()[(n - u - 1) as usize] {
                for c in 1..p {
                    h_members.push(label(Family::U { u, k, c }));
                }
            }
        }
        h_members.push(label(Family::U { u: n, k: 0, c: 1 }));
        out.push(CliqueFamily {
            kind: CliqueKind::H,
            members: h_members,
        });
        for u in 1..lo {
            let step = modulus.divisors()[(n - 2 * u - 1) as usize];
            for t in 0..step {
                for c in 1..p {
                    let members = (0..modulus.divisors()[(n - u - 1) as usize])
                        .filter(|k| k % step == t)
                        .map(|k| label(Family::U { u, k, c }))
                        .collect();
                    out.push(CliqueFamily {
                        kind: CliqueKind::A { u, t, c: Some(c) },
                        members,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// JSON document for a graph (the `export` schema).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub p: u64,
    pub n: u32,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<(String, String)>,
    pub cliques: Vec<CliqueDoc>,
    pub counts: CountsDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub label: String,
    pub iso: String,
    pub period: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueDoc {
    pub kind: String,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsDoc {
    pub total: u64,
    pub by_class: BTreeMap<String, u64>,
}

/// Builds the JSON document for a graph and its clique families.
pub fn graph_doc(graph: &NormalizingGraph, cliques: &[CliqueFamily]) -> GraphDoc {
    let m = graph.modulus();
    let mut by_class: BTreeMap<String, u64> = BTreeMap::new();
    for v in graph.vertices() {
        *by_class.entry(v.class.to_string()).or_insert(0) += 1;
    }
    GraphDoc {
        p: m.p(),
        n: m.n(),
        vertices: graph
            .vertices()
            .iter()
            .map(|v| VertexDoc {
                label: v.label.to_string(),
                iso: v.class.to_string(),
                period: v.gamma.period(),
            })
            .collect(),
        edges: graph
            .edges()
            .iter()
            .map(|e| {
                (
                    graph.vertices()[e.a].label.to_string(),
                    graph.vertices()[e.b].label.to_string(),
                )
            })
            .collect(),
        cliques: cliques
            .iter()
            .map(|c| CliqueDoc {
                kind: c.kind.to_string(),
                members: c.members.iter().map(|l| l.to_string()).collect(),
            })
            .collect(),
        counts: CountsDoc {
            total: graph.vertices().len() as u64,
            by_class,
        },
    }
}

/// Serializes the graph to pretty JSON (byte-stable for fixed input).
pub fn export_json(graph: &NormalizingGraph, cliques: &[CliqueFamily]) -> String {
    let mut s = serde_json::to_string_pretty(&graph_doc(graph, cliques))
        .expect("graph documents serialize");
    s.push('\n');
    s
}

const DOT_PALETTE: [&str; 8] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
];

/// Serializes the graph to DOT. Nodes appear in catalog order; each edge is
/// colored by the first clique family containing both endpoints, so the
/// families read as same-color groups.
pub fn export_dot(graph: &NormalizingGraph, cliques: &[CliqueFamily]) -> String {
    let m = graph.modulus();
    let mut out = String::new();
    out.push_str(&format!("graph \"holonorm {}^{}\" {{\n", m.p(), m.n()));
    out.push_str(&format!(
        "  // vertices: {}, edges: {}\n",
        graph.vertices().len(),
        graph.edge_count()
    ));
    for (idx, c) in cliques.iter().enumerate() {
        let members: Vec<String> = c.members.iter().map(|l| l.to_string()).collect();
        out.push_str(&format!(
            "  // clique {} [{}]: {}\n",
            c.kind,
            DOT_PALETTE[idx % DOT_PALETTE.len()],
            members.join(" ")
        ));
    }
    out.push_str("  node [shape=box, style=filled, fillcolor=white];\n");
    for v in graph.vertices() {
        out.push_str(&format!("  \"{}\";\n", v.label));
    }
    for e in graph.edges() {
        let la = graph.vertices()[e.a].label;
        let lb = graph.vertices()[e.b].label;
        let color = cliques
            .iter()
            .position(|c| c.members.contains(&la) && c.members.contains(&lb))
            .map(|idx| DOT_PALETTE[idx % DOT_PALETTE.len()])
            .unwrap_or("#000000");
        out.push_str(&format!("  \"{la}\" -- \"{lb}\" [color=\"{color}\"];\n"));
    }
    out.push_str("}\n");
    out
}
