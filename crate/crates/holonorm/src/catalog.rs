//! The complete labeled catalog of regular subgroups of `Hol(C_{p^n})`.
//!
//! Every regular subgroup corresponds to a gamma function, and every gamma
//! function on `C_{p^n}` is a conjugate (by a power automorphism) of one of a
//! short list of base tables:
//!
//! * `p = 2`: six named tables `G1..G6`, the direct-product family `P(k)`,
//!   the modular family `M(k)` (both defined modulo `2^(n-1)`), and the
//!   cyclic families `C(u, k)` with table `x -> sigma_{2^u x + 1}` twisted by
//!   `x -> (2k+1) x`;
//! * odd `p`: the cyclic families `U(u, k, c)` with base `x -> sigma_{p^u x + 1}`
//!   twisted by `x -> (kp+c) x`.
//!
//! Canonical parameter ranges make the listing duplicate-free: `k` runs below
//! the orbit size of its family, and the table identities `C(n, 0) = G1`,
//! `C(n-1, 0) = G2` mean `full_catalog` emits `C(u, .)` only for
//! `2 <= u <= n-2`. At `(p, n) = (2, 3)` the families `G5`, `G6` and `M`
//! do not exist (their tables either collide with `P(0)`, `P(1)` or fail the
//! functional equation), leaving exactly six subgroups — a fact this crate
//! pins against the brute-force permutation oracle.

use std::fmt;

use crate::error::{Error, Result};
use crate::gamma::GammaFunction;
use crate::group_id::IsoClass;
use crate::modring::Modulus;

/// The family (plus in-orbit parameters) of a catalog vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `gamma_1 = sigma_1` (the image of the right regular representation).
    G1,
    /// `gamma_2(x) = sigma_{2^(n-1)+1}^x`.
    G2,
    /// `gamma_3(x) = sigma_{2^(n-1)-1}^x` (quaternion circle).
    G3,
    /// `gamma_4(x) = sigma_{2^n-1}^x` (dihedral circle).
    G4,
    /// First semidihedral table, period 4, `n >= 4`.
    G5,
    /// Second semidihedral table, period 4, `n >= 4`.
    G6,
    /// `gamma_p^k`, direct-product circle, `0 <= k < 2^(n-2)`.
    P { k: u64 },
    /// `gamma_m^k`, modular circle, `0 <= k < 2^(n-2)`, `n >= 4`.
    M { k: u64 },
    /// `gamma_{c,u}^k(x) = sigma_{2^u (2k+1) x + 1}`, cyclic circle,
    /// `2 <= u <= n`, `0 <= k < 2^(n-u-1)` (`k = 0` when `u >= n-1`).
    C { u: u32, k: u64 },
    /// Odd `p`: `gamma_u^{k,c}(x) = sigma_{p^u (kp+c) x + 1}`, cyclic circle,
    /// `1 <= u <= n`, `0 <= k < p^(n-u-1)`, `1 <= c < p` (`(k, c) = (0, 1)`
    /// when `u = n`).
    U { u: u32, k: u64, c: u64 },
}

impl Family {
    /// The single-word token used in the text serialization.
    pub fn token(self) -> &'static str {
        match self {
            Family::G1 => "G1",
            Family::G2 => "G2",
            Family::G3 => "G3",
            Family::G4 => "G4",
            Family::G5 => "G5",
            Family::G6 => "G6",
            Family::P { .. } => "P",
            Family::M { .. } => "M",
            Family::C { .. } => "C",
            Family::U { .. } => "U",
        }
    }

    /// The `(u, k, c)` columns of the text serialization, absent fields `None`.
    pub fn columns(self) -> (Option<u32>, Option<u64>, Option<u64>) {
        match self {
            Family::G1 | Family::G2 | Family::G3 | Family::G4 | Family::G5 | Family::G6 => {
                (None, None, None)
            }
            Family::P { k } | Family::M { k } => (None, Some(k), None),
            Family::C { u, k } => (Some(u), Some(k), None),
            Family::U { u, k, c } => (Some(u), Some(k), Some(c)),
        }
    }
}

/// A canonical vertex label: modulus plus family parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupLabel {
    modulus: Modulus,
    family: Family,
}

impl SubgroupLabel {
    /// Validates parameter ranges and returns the canonical label.
    pub fn new(modulus: Modulus, family: Family) -> Result<Self> {
        let p = modulus.p();
        let n = modulus.n();
        let reject = |msg: String| Err(Error::NonCanonicalLabel(msg));
        match family {
            Family::G1 | Family::G2 | Family::G3 | Family::G4 => {
                if p != 2 || n < 3 {
                    return reject(format!("{} requires p = 2, n >= 3", family.token()));
                }
            }
            Family::G5 | Family::G6 => {
                if p != 2 || n < 4 {
                    return reject(format!("{} requires p = 2, n >= 4", family.token()));
                }
            }
            Family::P { k } => {
                if p != 2 || n < 3 {
                    return reject("P(k) requires p = 2, n >= 3".into());
                }
                let bound = 1u64 << (n - 2);
                if k >= bound {
                    return reject(format!("P({k}) exceeds the canonical range k < {bound}"));
                }
            }
            Family::M { k } => {
                if p != 2 || n < 4 {
                    return reject("M(k) requires p = 2, n >= 4".into());
                }
                let bound = 1u64 << (n - 2);
                if k >= bound {
                    return reject(format!("M({k}) exceeds the canonical range k < {bound}"));
                }
            }
            Family::C { u, k } => {
                if p != 2 || n < 3 {
                    return reject("C(u, k) requires p = 2, n >= 3".into());
                }
                if u < 2 || u > n {
                    return reject(format!("C({u}, {k}) needs 2 <= u <= {n}"));
                }
                let bound = if u + 1 >= n { 1 } else { 1u64 << (n - u - 1) };
                if k >= bound {
                    return reject(format!(
                        "C({u}, {k}) exceeds the canonical range k < {bound}"
                    ));
                }
            }
            Family::U { u, k, c } => {
                if p == 2 {
                    return reject("U(u, k, c) requires an odd prime".into());
                }
                if u < 1 || u > n {
                    return reject(format!("U({u}, {k}, {c}) needs 1 <= u <= {n}"));
                }
                if u == n {
                    if (k, c) != (0, 1) {
                        return reject(format!("U({n}, {k}, {c}) must be U({n}, 0, 1)"));
                    }
                } else {
                    let bound = modulus.divisors()[(n - u - 1) as usize];
                    if k >= bound || c < 1 || c >= p {
                        return reject(format!(
                            "U({u}, {k}, {c}) exceeds the canonical ranges k < {bound}, 1 <= c < {p}"
                        ));
                    }
                }
            }
        }
        Ok(SubgroupLabel { modulus, family })
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn family(self) -> Family {
        self.family
    }

    /// The gamma function of this label: the family's base table composed
    /// with `x -> w x`, where `w = 2k+1` (p = 2) or `w = kp+c` (odd p).
    pub fn gamma(self) -> GammaFunction {
        let m = self.modulus;
        let mm = m.m();
        let half = mm / 2; // p = 2 families only use this.
        match self.family {
            Family::G1 => GammaFunction::constant(m),
            Family::G2 => power_table(m, half + 1),
            Family::G3 => power_table(m, half - 1),
            Family::G4 => power_table(m, mm - 1),
            Family::G5 => four_case_table(m, [1, half - 1, half + 1, mm - 1]),
            Family::G6 => four_case_table(m, [1, mm - 1, half + 1, half - 1]),
            Family::P { k } => {
                let w = m.add(m.mul(2, k), 1);
                GammaFunction::from_fn(m, |x| m.add(m.mul(2, m.mul(w, x)), 1))
                    .expect("P tables are unit-valued")
            }
            Family::M { k } => {
                let w = m.add(m.mul(2, k), 1);
                let shift = mm / 4 + 1;
                GammaFunction::from_fn(m, |x| {
                    let wx = m.mul(w, x);
                    // w is odd, so wx has the parity of x.
                    if x % 2 == 0 {
                        m.add(m.mul(2, wx), 1)
                    } else {
                        m.add(m.mul(2, wx), shift)
                    }
                })
                .expect("M tables are unit-valued")
            }
            Family::C { u, k } => {
                let w = m.add(m.mul(2, k), 1);
                let step = m.mul(m.divisors()[u as usize] % mm, w);
                GammaFunction::from_fn(m, |x| m.add(m.mul(step, x), 1))
                    .expect("C tables are unit-valued")
            }
            Family::U { u, k, c } => {
                let w = m.add(m.mul(m.p(), k), c);
                let step = m.mul(m.divisors()[u as usize] % mm, w);
                GammaFunction::from_fn(m, |x| m.add(m.mul(step, x), 1))
                    .expect("U tables are unit-valued")
            }
        }
    }

    /// The isomorphism class of this label's circle group (the catalog
    /// column; tests confirm it equals `classify` of the table).
    pub fn iso_class(self) -> IsoClass {
        match self.family {
            Family::G1 | Family::G2 | Family::C { .. } | Family::U { .. } => IsoClass::Cyclic,
            Family::G3 => IsoClass::Quaternion,
            Family::G4 => IsoClass::Dihedral,
            Family::G5 | Family::G6 => IsoClass::Semidihedral,
            Family::P { .. } => IsoClass::DirectProduct,
            Family::M { .. } => IsoClass::Modular,
        }
    }
}

impl fmt::Display for SubgroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::P { k } => write!(f, "P({k})"),
            Family::M { k } => write!(f, "M({k})"),
            Family::C { u, k } => write!(f, "C({u},{k})"),
            Family::U { u, k, c } => write!(f, "U({u},{k},{c})"),
            named => f.write_str(named.token()),
        }
    }
}

fn power_table(m: Modulus, a: u64) -> GammaFunction {
    GammaFunction::from_fn(m, |x| m.pow(a, x)).expect("powers of a unit are units")
}

fn four_case_table(m: Modulus, values: [u64; 4]) -> GammaFunction {
    GammaFunction::from_fn(m, |x| values[(x % 4) as usize]).expect("unit-valued by construction")
}

/// One catalog vertex: label, gamma table and isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: SubgroupLabel,
    pub gamma: GammaFunction,
    pub class: IsoClass,
}

impl CatalogEntry {
    fn of(label: SubgroupLabel) -> CatalogEntry {
        CatalogEntry {
            gamma: label.gamma(),
            class: label.iso_class(),
            label,
        }
    }
}

/// The complete, duplicate-free vertex set of the normalizing graph over
/// `C_{p^n}`, in a deterministic order (named families, then `P`, `M`, `C`
/// by `(u, k)` for `p = 2`; `U` by `(u, k, c)` for odd `p`).
///
/// Supported parameters: `p = 2` with `n >= 3`, or odd `p` with `n >= 1`.
pub fn full_catalog(modulus: Modulus) -> Result<Vec<CatalogEntry>> {
    let p = modulus.p();
    let n = modulus.n();
    let mut out = Vec::new();
    let mut push = |family| -> Result<()> {
        out.push(CatalogEntry::of(SubgroupLabel::new(modulus, family)?));
        Ok(())
    };
    if p == 2 {
        if n < 3 {
            return Err(Error::UnsupportedParameters { p, n });
        }
        push(Family::G1)?;
        push(Family::G2)?;
        push(Family::G3)?;
        push(Family::G4)?;
        if n >= 4 {
            push(Family::G5)?;
            push(Family::G6)?;
        }
        for k in 0..1u64 << (n - 2) {
            push(Family::P { k })?;
        }
        if n >= 4 {
            for k in 0..1u64 << (n - 2) {
                push(Family::M { k })?;
            }
        }
        // u = n-1 and u = n collapse onto G2 and G1; stop at n-2.
        for u in 2..=n.saturating_sub(2) {
            for k in 0..1u64 << (n - u - 1) {
                push(Family::C { u, k })?;
            }
        }
    } else {
        for u in 1..n {
            for k in 0..modulus.divisors()[(n - u - 1) as usize] {
                for c in 1..p {
                    push(Family::U { u, k, c })?;
                }
            }
        }
        push(Family::U { u: n, k: 0, c: 1 })?;
    }
    Ok(out)
}

/// Closed-form expected shape of the catalog (and of the oracle's
/// enumeration): total size, per-class counts, and the multiset of
/// conjugation-orbit sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedCounts {
    pub total: u64,
    /// Nonzero per-class counts in [`IsoClass::all`] order.
    pub by_class: Vec<(IsoClass, u64)>,
    /// Orbit sizes, ascending; they sum to `total`.
    pub orbit_sizes: Vec<u64>,
}

impl ExpectedCounts {
    /// The expected count for one class (0 when absent).
    pub fn class_count(&self, class: IsoClass) -> u64 {
        self.by_class
            .iter()
            .find(|(c, _)| *c == class)
            .map_or(0, |&(_, k)| k)
    }
}

/// The closed-form count table for supported `(p, n)`.
///
/// For `p = 2, n >= 4`: `2^(n-2)` each of cyclic, direct-product and modular
/// circles, two semidihedral, one quaternion, one dihedral — `3*2^(n-2) + 4`
/// in total. At `(2, 3)` the counts are pinned to the brute-force oracle's
/// enumeration of the 32-element holomorph: 2 cyclic, 2 direct-product,
/// 1 quaternion, 1 dihedral — 6 in total. For odd `p`: `p^(n-1)`, all cyclic.
pub fn expected_counts(modulus: Modulus) -> Result<ExpectedCounts> {
    let p = modulus.p();
    let n = modulus.n();
    if p == 2 {
        if n < 3 {
            return Err(Error::UnsupportedParameters { p, n });
        }
        if n == 3 {
            return Ok(ExpectedCounts {
                total: 6,
                by_class: vec![
                    (IsoClass::Cyclic, 2),
                    (IsoClass::DirectProduct, 2),
                    (IsoClass::Quaternion, 1),
                    (IsoClass::Dihedral, 1),
                ],
                orbit_sizes: vec![1, 1, 1, 1, 2],
            });
        }
        let quarter = 1u64 << (n - 2);
        let mut orbit_sizes = vec![1, 1, 1, 1, 2];
        for u in 2..=(n - 2) {
            orbit_sizes.push(1u64 << (n - u - 1));
        }
        orbit_sizes.push(quarter); // P orbit
        orbit_sizes.push(quarter); // M orbit
        orbit_sizes.sort_unstable();
        Ok(ExpectedCounts {
            total: 3 * quarter + 4,
            by_class: vec![
                (IsoClass::Cyclic, quarter),
                (IsoClass::DirectProduct, quarter),
                (IsoClass::Quaternion, 1),
                (IsoClass::Dihedral, 1),
                (IsoClass::Semidihedral, 2),
                (IsoClass::Modular, quarter),
            ],
            orbit_sizes,
        })
    } else {
        let total = modulus.divisors()[(n - 1) as usize];
        let mut orbit_sizes: Vec<u64> = (1..n)
            .map(|u| modulus.divisors()[(n - u - 1) as usize] * (p - 1))
            .collect();
        orbit_sizes.push(1);
        orbit_sizes.sort_unstable();
        Ok(ExpectedCounts {
            total,
            by_class: vec![(IsoClass::Cyclic, total)],
            orbit_sizes,
        })
    }
}

/// Renders a catalog as the line-oriented text format
/// `p n family u k c period isoclass`, absent fields `-`.
pub fn format_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let m = e.label.modulus();
        let (u, k, c) = e.label.family().columns();
        let col = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        out.push_str(&format!(
            "{} {} {} {} {} {} {} {}\n",
            m.p(),
            m.n(),
            e.label.family().token(),
            col(u.map(u64::from)),
            col(k),
            col(c),
            e.gamma.period(),
            e.class
        ));
    }
    out
}

/// Parses one line of the text format back into `(label, period, class)`.
pub fn parse_catalog_line(line: &str) -> Result<(SubgroupLabel, u64, IsoClass)> {
    let bad = || Error::NonCanonicalLabel(line.to_string());
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 8 {
        return Err(bad());
    }
    let int = |s: &str| s.parse::<u64>().map_err(|_| bad());
    let opt = |s: &str| -> Result<Option<u64>> {
        if s == "-" {
            Ok(None)
        } else {
            int(s).map(Some)
        }
    };
    let p = int(fields[0])?;
    let n = u32::try_from(int(fields[1])?).map_err(|_| bad())?;
    let modulus = Modulus::new(p, n)?;
    let (u, k, c) = (opt(fields[3])?, opt(fields[4])?, opt(fields[5])?);
    let u32_of = |v: u64| u32::try_from(v).map_err(|_| bad());
    let family = match (fields[2], u, k, c) {
        ("G1", None, None, None) => Family::G1,
        ("G2", None, None, None) => Family::G2,
        ("G3", None, None, None) => Family::G3,
        ("G4", None, None, None) => Family::G4,
        ("G5", None, None, None) => Family::G5,
        ("G6", None, None, None) => Family::G6,
        ("P", None, Some(k), None) => Family::P { k },
        ("M", None, Some(k), None) => Family::M { k },
        ("C", Some(u), Some(k), None) => Family::C { u: u32_of(u)?, k },
        ("U", Some(u), Some(k), Some(c)) => Family::U {
            u: u32_of(u)?,
            k,
            c,
        },
        _ => return Err(bad()),
    };
    let label = SubgroupLabel::new(modulus, family)?;
    let period = int(fields[6])?;
    let class: IsoClass = fields[7].parse()?;
    Ok((label, period, class))
}
