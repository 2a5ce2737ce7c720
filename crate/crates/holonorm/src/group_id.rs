//! Isomorphism classification of circle groups.
//!
//! A validated gamma function on `C_{p^n}` makes `(G, o)` a group of order
//! `p^n`. For `p = 2` six isomorphism types occur: the cyclic group, the
//! direct product `C_2 x C_{2^(n-1)}`, and the four families with a cyclic
//! subgroup of index 2 — generalized quaternion, dihedral, semidihedral and
//! modular. For odd `p` every circle group is cyclic. The classifier works
//! from invariants of the circle operation alone (commutativity, element
//! orders, involution counts), so the independent permutation oracle can be
//! checked against it; the involution-count constants are themselves
//! cross-checked in tests against groups built from presentations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gamma::GammaFunction;

/// Isomorphism type of a circle group of order `p^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoClass {
    /// `C_{p^n}`.
    Cyclic,
    /// `C_p x C_{p^(n-1)}`.
    DirectProduct,
    /// Generalized quaternion `Q_{2^n}`.
    Quaternion,
    /// Dihedral `D_{2^n}` (of order `2^n`).
    Dihedral,
    /// Semidihedral `SD_{2^n}`, for `n >= 4`.
    Semidihedral,
    /// Modular `M_{2^n}` (`yxy^-1 = x^(2^(n-2)+1)`), for `n >= 4`.
    Modular,
    /// Nonabelian semidirect product for odd `p` (defensive; does not occur
    /// for gamma functions on cyclic `p`-groups).
    OddSemidirect,
}

impl IsoClass {
    /// Stable single-token name, the inverse of [`FromStr`].
    pub fn token(self) -> &'static str {
        match self {
            IsoClass::Cyclic => "cyclic",
            IsoClass::DirectProduct => "direct_product",
            IsoClass::Quaternion => "quaternion",
            IsoClass::Dihedral => "dihedral",
            IsoClass::Semidihedral => "semidihedral",
            IsoClass::Modular => "modular",
            IsoClass::OddSemidirect => "odd_semidirect",
        }
    }

    /// All classes, in the order used for count reports.
    pub fn all() -> [IsoClass; 7] {
        [
            IsoClass::Cyclic,
            IsoClass::DirectProduct,
            IsoClass::Quaternion,
            IsoClass::Dihedral,
            IsoClass::Semidihedral,
            IsoClass::Modular,
            IsoClass::OddSemidirect,
        ]
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for IsoClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IsoClass::all()
            .into_iter()
            .find(|c| c.token() == s)
            .ok_or_else(|| Error::NonCanonicalLabel(s.to_string()))
    }
}

/// Classifies the circle group of a **validated** gamma function.
///
/// Abelian circles are told apart by their exponent (`p^n` for cyclic,
/// `p^(n-1)` for the direct product — an abelian `p`-group of order `p^n`
/// and exponent `p^(n-1)` is `C_p x C_{p^(n-1)}`). Nonabelian `2`-groups
/// here always have a cyclic subgroup of index 2; given that, the number of
/// involutions separates the four types: 1 for quaternion, `2^(n-1)+1` for
/// dihedral, `2^(n-2)+1` for semidihedral and 3 for modular (`n >= 4`).
/// Anything outside this scheme is reported as [`Error::Unclassifiable`]
/// rather than guessed.
pub fn classify(gamma: &GammaFunction) -> Result<IsoClass> {
    let m = gamma.modulus();
    let mm = m.m();
    let abelian =
        (0..mm).all(|g| (g..mm).all(|h| gamma.circle_raw(g, h) == gamma.circle_raw(h, g)));
    let max_order = (0..mm).map(|g| gamma.circle_order(g)).max().unwrap_or(1);
    if abelian {
        if max_order == mm {
            return Ok(IsoClass::Cyclic);
        }
        if mm > 1 && max_order == mm / m.p() {
            return Ok(IsoClass::DirectProduct);
        }
        return Err(Error::Unclassifiable);
    }
    if m.p() != 2 {
        return Ok(IsoClass::OddSemidirect);
    }
    if max_order != mm / 2 {
        // No cyclic subgroup of index 2: not a circle group of C_{2^n}.
        return Err(Error::Unclassifiable);
    }
    let involutions = (1..mm).filter(|&g| gamma.circle_raw(g, g) == 0).count() as u64;
    if involutions == 1 {
        return Ok(IsoClass::Quaternion);
    }
    if involutions == mm / 2 + 1 {
        return Ok(IsoClass::Dihedral);
    }
    if m.n() >= 4 {
        if involutions == 3 {
            return Ok(IsoClass::Modular);
        }
        if involutions == mm / 4 + 1 {
            return Ok(IsoClass::Semidihedral);
        }
    }
    Err(Error::Unclassifiable)
}

/// Size of the closure of `gens` under the circle operation (the subgroup
/// they generate, for a validated gamma function: positive words suffice in
/// a finite group).
pub fn circle_closure_size(gamma: &GammaFunction, gens: &[u64]) -> u64 {
    let mm = gamma.modulus().m();
    let mut in_set = vec![false; mm as usize];
    in_set[0] = true;
    let mut frontier = vec![0u64];
    let mut size = 1u64;
    while let Some(s) = frontier.pop() {
        for &g in gens {
            let t = gamma.circle_raw(s, g);
            if !in_set[t as usize] {
                in_set[t as usize] = true;
                size += 1;
                frontier.push(t);
            }
        }
    }
    size
}

/// Whether `gens` generates the whole circle group.
pub fn circle_generates(gamma: &GammaFunction, gens: &[u64]) -> bool {
    circle_closure_size(gamma, gens) == gamma.modulus().m()
}

/// A smallest generating set of the circle group, deterministically chosen:
/// the least single generator if the circle is cyclic, otherwise the
/// lexicographically first pair `[g1, g2]` with `g1 < g2` that generates.
///
/// Every circle group of `Hol(C_{p^n})` is 2-generated, so the search always
/// succeeds on validated tables; it panics if exhausted (i.e. if handed a
/// table that is not a gamma function).
pub fn generators_witness(gamma: &GammaFunction) -> Vec<u64> {
    let mm = gamma.modulus().m();
    if mm == 1 {
        return Vec::new();
    }
    if let Some(g) = (1..mm).find(|&g| gamma.circle_order(g) == mm) {
        return vec![g];
    }
    for g1 in 1..mm {
        for g2 in (g1 + 1)..mm {
            if circle_generates(gamma, &[g1, g2]) {
                return vec![g1, g2];
            }
        }
    }
    panic!("circle groups on C_{{p^n}} are 2-generated; table is not a gamma function");
}
