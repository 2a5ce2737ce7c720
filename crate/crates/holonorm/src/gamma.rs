//! Gamma functions on `C_{p^n}` and the holomorph elements they generate.
//!
//! A *gamma function* is a map `gamma : G -> Aut(G)` satisfying the
//! functional equation
//!
//! ```text
//! gamma(gamma(h)(g) + h) = gamma(g) . gamma(h)      for all g, h in G.
//! ```
//!
//! Such maps are in bijection with the regular subgroups of `Hol(G)`: the
//! subgroup is `N = { nu(g) = gamma(g) rho(g) : g in G }`, an affine map for
//! each point, and `N` in turn induces the *circle operation*
//! `g o h = gamma(h)(g) + h` making `(G, o)` a group isomorphic to `N` (via
//! `nu`) and `(G, +, o)` a skew brace. Because `Aut(C_{p^n})` is abelian,
//! conjugating `N` by an automorphism `alpha` acts on tables simply as
//! `gamma^alpha(x) = gamma(alpha^{-1} x)`, and the table of a gamma function
//! depends only on `x` modulo its image size (the *period*).
//!
//! Tables live in plain `Vec<u64>` of unit multipliers; everything here is
//! exhaustive at desk scales (`p^n` up to a few thousand) with a
//! deterministic sampled fallback for larger tables.

use std::fmt;

use crate::error::{Error, Result};
use crate::modring::{Modulus, Residue, UnitAut};

/// Largest modulus for which [`GammaFunction::validate`] checks all `m^2`
/// pairs; above it, a fixed-seed sample of pairs is used.
pub const EXHAUSTIVE_VALIDATION_BOUND: u64 = 4096;

/// Number of sampled pairs used beyond the exhaustive bound.
const SAMPLED_PAIRS: u32 = 10_000;

/// An element `x -> a*x + b` of `Hol(C_{p^n})`.
///
/// Composition applies the left factor first, matching the convention that
/// permutations act on the right: `(e1.compose(e2)).act(x) = e2.act(e1.act(x))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HolomorphElement {
    aut: UnitAut,
    trans: Residue,
}

impl HolomorphElement {
    /// Builds `x -> a*x + b` from its two components.
    pub fn new(aut: UnitAut, trans: Residue) -> Self {
        assert_eq!(
            aut.modulus(),
            trans.modulus(),
            "holomorph components from different moduli"
        );
        HolomorphElement { aut, trans }
    }

    /// The identity permutation.
    pub fn identity(modulus: Modulus) -> Self {
        HolomorphElement {
            aut: UnitAut::identity(modulus),
            trans: Residue::new(modulus, 0),
        }
    }

    /// The automorphism component `sigma_a`.
    pub fn aut(self) -> UnitAut {
        self.aut
    }

    /// The translation component `b`.
    pub fn trans(self) -> Residue {
        self.trans
    }

    /// The modulus this element acts on.
    pub fn modulus(self) -> Modulus {
        self.aut.modulus()
    }

    /// Applies the affine map: `x -> a*x + b`.
    pub fn act(self, x: Residue) -> Residue {
        self.aut.apply(x) + self.trans
    }

    /// Composition, left factor applied first:
    /// `(a1, b1) . (a2, b2) = (a1 a2, a2 b1 + b2)`.
    pub fn compose(self, other: HolomorphElement) -> HolomorphElement {
        HolomorphElement {
            aut: self.aut.compose(other.aut),
            trans: other.aut.apply(self.trans) + other.trans,
        }
    }

    /// The inverse affine map `(a^-1, -a^-1 b)`.
    pub fn inverse(self) -> HolomorphElement {
        let inv = self.aut.inverse();
        HolomorphElement {
            aut: inv,
            trans: -inv.apply(self.trans),
        }
    }
}

impl fmt::Display for HolomorphElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.aut, self.trans)
    }
}

/// A (candidate) gamma function on `C_{p^n}`, stored as the table of unit
/// multipliers `gamma(x) = sigma_{table[x]}`.
///
/// Construction checks shape (length `p^n`, all entries units) and caches the
/// *period*: the smallest divisor `q` of `p^n` with `table[x] = table[x mod q]`.
/// It does **not** check the functional equation — call [`validate`] for
/// that. For a validated gamma function the period equals the image size
/// `|gamma(G)|`, and distinct residues mod `q` carry distinct values.
///
/// [`validate`]: GammaFunction::validate
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaFunction {
    modulus: Modulus,
    table: Vec<u64>,
    period: u64,
}

impl GammaFunction {
    /// Builds a gamma table, canonicalizing entries and computing the period.
    pub fn new(modulus: Modulus, table: Vec<u64>) -> Result<Self> {
        if table.len() as u64 != modulus.m() {
            return Err(Error::TableLength {
                len: table.len(),
                m: modulus.m(),
            });
        }
        let table: Vec<u64> = table.into_iter().map(|a| modulus.reduce(a)).collect();
        if let Some(&a) = table.iter().find(|&&a| !modulus.is_unit(a)) {
            return Err(Error::NotAUnit { a, m: modulus.m() });
        }
        let period = compute_period(modulus, &table);
        Ok(GammaFunction {
            modulus,
            table,
            period,
        })
    }

    /// Builds a table by evaluating `f` on every canonical residue.
    pub fn from_fn(modulus: Modulus, f: impl Fn(u64) -> u64) -> Result<Self> {
        Self::new(modulus, (0..modulus.m()).map(f).collect())
    }

    /// The constant gamma function `x -> sigma_1`, encoding `rho(G)` itself.
    pub fn constant(modulus: Modulus) -> Self {
        GammaFunction {
            modulus,
            table: vec![1; modulus.m() as usize],
            period: 1,
        }
    }

    /// The modulus this function lives over.
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// The full multiplier table, indexed by canonical residue.
    pub fn table(&self) -> &[u64] {
        &self.table
    }

    /// The unit multiplier of `gamma(x)`.
    pub fn multiplier(&self, x: u64) -> u64 {
        self.table[(x % self.modulus.m()) as usize]
    }

    /// `gamma(x)` as an automorphism.
    pub fn aut(&self, x: u64) -> UnitAut {
        UnitAut::new(self.modulus, self.multiplier(x)).expect("table entries are units")
    }

    /// The cached period: smallest `q | p^n` with `table[x] = table[x mod q]`.
    pub fn period(&self) -> u64 {
        self.period
    }

    /// Number of distinct automorphisms in the image.
    pub fn image_size(&self) -> u64 {
        let mut values: Vec<u64> = self.table.clone();
        values.sort_unstable();
        values.dedup();
        values.len() as u64
    }

    /// Whether the functional equation holds at the single pair `(g, h)`.
    fn gfe_holds_at(&self, g: u64, h: u64) -> bool {
        let m = self.modulus;
        let lhs = self.multiplier(m.add(m.mul(self.multiplier(h), g), h));
        lhs == m.mul(self.multiplier(g), self.multiplier(h))
    }

    /// First pair violating the functional equation, scanning all `m^2`
    /// pairs in row order; `None` means the table is a gamma function.
    pub fn first_violation(&self) -> Option<(u64, u64)> {
        let m = self.modulus.m();
        for g in 0..m {
            for h in 0..m {
                if !self.gfe_holds_at(g, h) {
                    return Some((g, h));
                }
            }
        }
        None
    }

    /// Checks the functional equation: exhaustively over all pairs for
    /// `p^n <= 4096`, otherwise over a fixed-seed pseudorandom sample of
    /// 10000 pairs (deterministic across runs).
    pub fn validate(&self) -> bool {
        let m = self.modulus.m();
        if m <= EXHAUSTIVE_VALIDATION_BOUND {
            return self.first_violation().is_none();
        }
        let mut state = 0x9E37_79B9_7F4A_7C15u64;
        for _ in 0..SAMPLED_PAIRS {
            let g = xorshift64(&mut state) % m;
            let h = xorshift64(&mut state) % m;
            if !self.gfe_holds_at(g, h) {
                return false;
            }
        }
        true
    }

    /// The circle operation `g o h = gamma(h)(g) + h` on raw residues.
    pub fn circle_raw(&self, g: u64, h: u64) -> u64 {
        let m = self.modulus;
        m.add(m.mul(self.multiplier(h), g % m.m()), h % m.m())
    }

    /// The circle operation on [`Residue`]s.
    pub fn circle(&self, g: Residue, h: Residue) -> Residue {
        assert_eq!(
            self.modulus,
            g.modulus(),
            "residue from a different modulus"
        );
        assert_eq!(
            self.modulus,
            h.modulus(),
            "residue from a different modulus"
        );
        Residue::new(self.modulus, self.circle_raw(g.value(), h.value()))
    }

    /// Order of `g` in the circle group. On a validated table this is a
    /// divisor of `p^n`; on an arbitrary table the forward orbit of `g` may
    /// never reach `0`, in which case `p^n + 1` is returned as a sentinel
    /// (never a valid order) instead of looping.
    pub fn circle_order(&self, g: u64) -> u64 {
        let m = self.modulus.m();
        let g = g % m;
        let mut t = g;
        let mut k = 1;
        while t != 0 {
            if k > m {
                return m + 1;
            }
            t = self.circle_raw(t, g);
            k += 1;
        }
        k
    }

    /// The conjugate table `gamma^alpha(x) = gamma(alpha^{-1} x)`.
    ///
    /// Conjugating the regular subgroup `N` by `alpha` inside `Sym(G)` yields
    /// the regular subgroup of this table; the circle groups are isomorphic.
    pub fn conjugate(&self, alpha: UnitAut) -> GammaFunction {
        assert_eq!(
            self.modulus,
            alpha.modulus(),
            "automorphism from a different modulus"
        );
        let inv = alpha.inverse().multiplier();
        let m = self.modulus;
        let table = (0..m.m())
            .map(|x| self.table[m.mul(inv, x) as usize])
            .collect();
        GammaFunction::new(self.modulus, table).expect("permuted table stays well-formed")
    }

    /// The inversion conjugate `gamma^inv(x) = gamma(-x)` (conjugation by the
    /// inversion permutation of `G`; for abelian `G` the inner-automorphism
    /// correction is trivial). Also a gamma function, with isomorphic circle
    /// group.
    pub fn inversion_conjugate(&self) -> GammaFunction {
        let m = self.modulus;
        let table = (0..m.m())
            .map(|x| self.table[m.sub(0, x) as usize])
            .collect();
        GammaFunction::new(self.modulus, table).expect("permuted table stays well-formed")
    }

    /// Size of `{ units w : gamma(w x) = gamma(x) for all x }`: the number of
    /// automorphisms normalizing `N` inside `Sym(G)`, hence the stabilizer of
    /// this table under the conjugation action.
    pub fn stabilizer_size(&self) -> u64 {
        let m = self.modulus;
        m.units()
            .into_iter()
            .filter(|&w| {
                (0..m.m()).all(|x| self.table[m.mul(w, x) as usize] == self.table[x as usize])
            })
            .count() as u64
    }

    /// Conjugation-orbit size: `phi(p^n) / stabilizer_size` (the action of
    /// `Aut(G)` on each orbit is regular after quotienting by the stabilizer).
    pub fn orbit_size(&self) -> u64 {
        self.modulus.phi() / self.stabilizer_size()
    }

    /// Whether `gamma(x + y) = gamma(x) . gamma(y)` for all pairs.
    pub fn is_homomorphism(&self) -> bool {
        let m = self.modulus;
        (0..m.m()).all(|x| {
            (0..m.m()).all(|y| {
                self.table[m.add(x, y) as usize]
                    == m.mul(self.table[x as usize], self.table[y as usize])
            })
        })
    }

    /// Whether `gamma(x + y) = gamma(y) . gamma(x)` for all pairs.
    ///
    /// This is the bi-skew condition: it holds exactly when the regular
    /// subgroup of this table is normalized by `rho(G)`. Over an abelian
    /// automorphism group it coincides with [`is_homomorphism`], but it is
    /// checked in its own right.
    ///
    /// [`is_homomorphism`]: GammaFunction::is_homomorphism
    pub fn is_antihomomorphism(&self) -> bool {
        let m = self.modulus;
        (0..m.m()).all(|x| {
            (0..m.m()).all(|y| {
                self.table[m.add(x, y) as usize]
                    == m.mul(self.table[y as usize], self.table[x as usize])
            })
        })
    }

    /// Whether `gamma(alpha(x)) = gamma(x)` for every automorphism `alpha`:
    /// the condition for the regular subgroup to be normal in `Hol(G)`
    /// (given that it already satisfies the functional equation).
    pub fn is_aut_equivariant(&self) -> bool {
        self.stabilizer_size() == self.modulus.phi()
    }

    /// Exhaustive skew-brace check for the circle operation: `0` is a
    /// two-sided identity, `o` is associative with solvable right
    /// translations (so `(G, o)` is a group), and the compatibility axiom
    /// `(x + y) o z = (x o z) - z + (y o z)` holds on every triple.
    ///
    /// True for every validated gamma function; exposed as a property-test
    /// hook rather than used as a filter. Cost `O(m^3)` — desk scales only.
    pub fn verify_skew_brace(&self) -> bool {
        let m = self.modulus;
        let mm = m.m();
        if self.table[0] != 1 {
            return false;
        }
        // Right translations y -> g o y must be bijective for (G, o) to be a
        // group (left translations are affine, hence always bijective).
        let mut seen = vec![false; mm as usize];
        for g in 0..mm {
            seen.iter_mut().for_each(|s| *s = false);
            for y in 0..mm {
                seen[self.circle_raw(g, y) as usize] = true;
            }
            if seen.iter().any(|&s| !s) {
                return false;
            }
        }
        for x in 0..mm {
            for y in 0..mm {
                let xy = self.circle_raw(x, y);
                for z in 0..mm {
                    if self.circle_raw(xy, z) != self.circle_raw(x, self.circle_raw(y, z)) {
                        return false;
                    }
                    let lhs = self.circle_raw(m.add(x, y), z);
                    let rhs = m.add(m.sub(self.circle_raw(x, z), z), self.circle_raw(y, z));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The holomorph element `nu(g) = gamma(g) rho(g) : x -> gamma(g)(x) + g`.
    ///
    /// For a validated gamma function, `nu : (G, o) -> Hol(G)` is an injective
    /// homomorphism whose image is the regular subgroup encoded by the table.
    pub fn nu(&self, g: Residue) -> HolomorphElement {
        assert_eq!(
            self.modulus,
            g.modulus(),
            "residue from a different modulus"
        );
        HolomorphElement::new(self.aut(g.value()), g)
    }

    /// The image `{ nu(g) : g in G }`, sorted: the regular subgroup itself.
    pub fn nu_image(&self) -> Vec<HolomorphElement> {
        let mut elems: Vec<HolomorphElement> = (0..self.modulus.m())
            .map(|g| self.nu(Residue::new(self.modulus, g)))
            .collect();
        elems.sort_unstable();
        elems
    }
}

/// Smallest divisor `q` of `p^n` such that the table is constant on residue
/// classes mod `q`.
fn compute_period(modulus: Modulus, table: &[u64]) -> u64 {
    for q in modulus.divisors() {
        if (0..modulus.m()).all(|x| table[x as usize] == table[(x % q) as usize]) {
            return q;
        }
    }
    modulus.m()
}

fn xorshift64(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modulus(p: u64, n: u32) -> Modulus {
        Modulus::new(p, n).expect("valid test modulus")
    }

    /// `gamma_2(x) = sigma_{(2^(n-1)+1)^x}`: alternates 1 and 2^(n-1)+1.
    fn gamma_2(m: Modulus) -> GammaFunction {
        let half = m.m() / 2 + 1;
        GammaFunction::from_fn(m, |x| if x % 2 == 0 { 1 } else { half }).unwrap()
    }

    /// `gamma_p(x) = sigma_{2x+1}` on `C_{2^n}`.
    fn gamma_p(m: Modulus) -> GammaFunction {
        GammaFunction::from_fn(m, |x| m.add(m.mul(2, x), 1)).unwrap()
    }

    /// `gamma_5`: period-4 table `1, 2^(n-1)-1, 2^(n-1)+1, 2^n-1`.
    fn gamma_5(m: Modulus) -> GammaFunction {
        let half = m.m() / 2;
        GammaFunction::from_fn(m, |x| match x % 4 {
            0 => 1,
            1 => half - 1,
            2 => half + 1,
            _ => m.m() - 1,
        })
        .unwrap()
    }

    #[test]
    fn holomorph_composition_applies_left_factor_first() {
        let m = modulus(2, 3);
        for (a1, b1) in [(1u64, 3u64), (3, 1), (5, 7), (7, 2)] {
            for (a2, b2) in [(3u64, 4u64), (5, 0), (7, 7)] {
                let e1 = HolomorphElement::new(UnitAut::new(m, a1).unwrap(), Residue::new(m, b1));
                let e2 = HolomorphElement::new(UnitAut::new(m, a2).unwrap(), Residue::new(m, b2));
                for x in 0..m.m() {
                    let r = Residue::new(m, x);
                    assert_eq!(
                        e1.compose(e2).act(r),
                        e2.act(e1.act(r)),
                        "({a1},{b1}) then ({a2},{b2}) at {x}"
                    );
                }
                assert_eq!(
                    e1.compose(e1.inverse()),
                    HolomorphElement::identity(m),
                    "inverse must cancel"
                );
            }
        }
    }

    #[test]
    fn table_construction_checks_shape_and_units() {
        let m = modulus(2, 3);
        assert_eq!(
            GammaFunction::new(m, vec![1, 3]),
            Err(Error::TableLength { len: 2, m: 8 })
        );
        assert_eq!(
            GammaFunction::new(m, vec![1, 2, 1, 1, 1, 1, 1, 1]),
            Err(Error::NotAUnit { a: 2, m: 8 })
        );
    }

    #[test]
    fn known_tables_validate_and_an_arbitrary_one_fails() {
        // gamma_2 on C_16 is a gamma function.
        assert!(gamma_2(modulus(2, 4)).validate());
        // The constant table always is.
        assert!(GammaFunction::constant(modulus(3, 3)).validate());
        // gamma(0) = 1, gamma(x) = sigma_3 otherwise is not: e.g. at
        // g = 7, h = 1 the left side is gamma(22 mod 8) = sigma_3 but the
        // right side is sigma_9 = sigma_1.
        let bad = GammaFunction::from_fn(modulus(2, 3), |x| if x == 0 { 1 } else { 3 }).unwrap();
        assert!(!bad.validate());
        assert!(bad.first_violation().is_some());
    }

    #[test]
    fn periods_match_the_defining_congruences() {
        assert_eq!(GammaFunction::constant(modulus(2, 4)).period(), 1);
        assert_eq!(gamma_2(modulus(2, 4)).period(), 2);
        assert_eq!(gamma_5(modulus(2, 4)).period(), 4);
        assert_eq!(gamma_p(modulus(2, 4)).period(), 8);
        // Validated tables have image size equal to period.
        for g in [
            GammaFunction::constant(modulus(2, 5)),
            gamma_2(modulus(2, 5)),
            gamma_5(modulus(2, 5)),
            gamma_p(modulus(2, 5)),
        ] {
            assert!(g.validate());
            assert_eq!(g.image_size(), g.period(), "image size vs period");
        }
    }

    #[test]
    fn circle_examples_on_c8() {
        // gamma_2 on C_8: 1 o 1 = sigma_5(1) + 1 = 6.
        let g2 = gamma_2(modulus(2, 3));
        assert_eq!(g2.circle_raw(1, 1), 6);
        // gamma_p on C_8: 3 o 3 = sigma_7(3) + 3 = 0, so 3 has circle order 2.
        let gp = gamma_p(modulus(2, 3));
        assert_eq!(gp.circle_raw(3, 3), 0);
        assert_eq!(gp.circle_order(3), 2);
        assert_eq!(gp.circle_order(0), 1);
        // The constant table's circle group is (G, +): 1 generates.
        assert_eq!(GammaFunction::constant(modulus(2, 3)).circle_order(1), 8);
    }

    #[test]
    fn nu_is_a_homomorphism_from_the_circle_group() {
        let m = modulus(2, 3);
        let g2 = gamma_2(m);
        // nu(1) = (sigma_5, 1); composed with itself it lands on (sigma_1, 6).
        let n1 = g2.nu(Residue::new(m, 1));
        assert_eq!(n1.aut().multiplier(), 5);
        let sq = n1.compose(n1);
        assert_eq!((sq.aut().multiplier(), sq.trans().value()), (1, 6));
        // nu(g o h) = nu(g) . nu(h) on all pairs, for a few validated tables.
        for gf in [GammaFunction::constant(m), g2, gamma_p(m), gamma_5(m)] {
            assert!(gf.validate());
            for g in 0..m.m() {
                for h in 0..m.m() {
                    let lhs = gf.nu(Residue::new(m, gf.circle_raw(g, h)));
                    let rhs = gf.nu(Residue::new(m, g)).compose(gf.nu(Residue::new(m, h)));
                    assert_eq!(lhs, rhs, "nu must turn circle into composition");
                }
            }
        }
    }

    #[test]
    fn conjugate_permutes_the_table_by_the_inverse_multiplier() {
        // gamma(x) = sigma_{4x+1} on C_32, conjugated by sigma_3, becomes
        // x -> sigma_{4 * (3^-1 x) + 1} = sigma_{12x+1} (3^-1 = 11 mod 32).
        let m = modulus(2, 5);
        let g = GammaFunction::from_fn(m, |x| m.add(m.mul(4, x), 1)).unwrap();
        let conj = g.conjugate(UnitAut::new(m, 3).unwrap());
        for x in 0..m.m() {
            assert_eq!(conj.multiplier(x), m.add(m.mul(12, x), 1));
        }
        assert!(
            g.validate() && conj.validate(),
            "conjugation preserves validity"
        );
        assert_eq!(g.period(), conj.period(), "conjugation preserves period");
    }

    #[test]
    fn conjugation_is_a_right_action() {
        let m = modulus(2, 4);
        for gf in [gamma_2(m), gamma_5(m), gamma_p(m)] {
            for a in m.units() {
                for b in m.units() {
                    let alpha = UnitAut::new(m, a).unwrap();
                    let beta = UnitAut::new(m, b).unwrap();
                    assert_eq!(
                        gf.conjugate(alpha).conjugate(beta),
                        gf.conjugate(alpha.compose(beta)),
                        "(gamma^a)^b = gamma^(ab) at a = {a}, b = {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn inversion_conjugate_is_an_involution_preserving_validity() {
        let m = modulus(2, 4);
        for gf in [gamma_2(m), gamma_5(m), gamma_p(m)] {
            let bar = gf.inversion_conjugate();
            assert!(bar.validate(), "inversion conjugate stays a gamma function");
            assert_eq!(bar.inversion_conjugate(), gf, "applying twice returns");
        }
    }

    #[test]
    fn stabilizers_and_orbits_multiply_to_phi() {
        // gamma_5 on C_16: stabilizer {w = 1 mod 4} has size 2^(n-2) = 4, so
        // its orbit is {gamma_5, gamma_6}, size 2.
        let g5 = gamma_5(modulus(2, 4));
        assert_eq!(g5.stabilizer_size(), 4);
        assert_eq!(g5.orbit_size(), 2);
        // gamma_p on C_16: stabilizer {1, 9}, orbit size 2^(n-2) = 4.
        let gp = gamma_p(modulus(2, 4));
        assert_eq!(gp.stabilizer_size(), 2);
        assert_eq!(gp.orbit_size(), 4);
        // Constant table is fixed by everything.
        let g1 = GammaFunction::constant(modulus(2, 4));
        assert_eq!(g1.orbit_size(), 1);
        assert!(g1.is_aut_equivariant());
    }

    #[test]
    fn structural_predicates_on_the_named_tables() {
        let m = modulus(2, 4);
        let g1 = GammaFunction::constant(m);
        let g2 = gamma_2(m);
        let g5 = gamma_5(m);
        let gp = gamma_p(m);
        // Involution powers are homomorphisms in both orders.
        assert!(g1.is_homomorphism() && g1.is_antihomomorphism());
        assert!(g2.is_homomorphism() && g2.is_antihomomorphism());
        // gamma_5 and gamma_p are neither.
        assert!(!g5.is_antihomomorphism() && !gp.is_antihomomorphism());
        // Period <= 2 tables are invariant under every unit multiplier;
        // gamma_5 (period 4) and gamma_p (period 2^(n-1)) are not.
        assert!(g2.is_aut_equivariant());
        assert!(!g5.is_aut_equivariant() && !gp.is_aut_equivariant());
    }

    #[test]
    fn involution_powers_are_gamma_functions() {
        // For every alpha with alpha^2 = 1, the table x -> alpha^x is a gamma
        // function of period dividing 2, and a homomorphism both ways.
        for n in 3..=6 {
            let m = modulus(2, n);
            for a in m.units() {
                if m.mul(a, a) == 1 {
                    let gf = GammaFunction::from_fn(m, |x| if x % 2 == 0 { 1 } else { a }).unwrap();
                    assert!(gf.validate(), "alpha = {a}, n = {n}");
                    assert!(gf.period() <= 2);
                    assert!(gf.is_homomorphism() && gf.is_antihomomorphism());
                }
            }
        }
    }

    #[test]
    fn skew_brace_verifier_accepts_valid_tables_and_rejects_non_groups() {
        let m = modulus(2, 4);
        for gf in [
            GammaFunction::constant(m),
            gamma_2(m),
            gamma_5(m),
            gamma_p(m),
        ] {
            assert!(
                gf.verify_skew_brace(),
                "validated tables induce skew braces"
            );
        }
        // A non-gamma table whose circle fails associativity:
        // (1 o 1) o 1 = 5 but 1 o (1 o 1) = 7.
        let bad = GammaFunction::from_fn(modulus(2, 3), |x| if x == 0 { 1 } else { 3 }).unwrap();
        assert!(!bad.verify_skew_brace());
    }

    #[test]
    fn any_two_of_the_three_morphism_conditions_imply_the_third() {
        // Exhaustive over all 4^8 = 65536 unit tables on C_8: writing
        //   C1: gamma kills every (a-1)x for a in the image,
        //   C2: gamma is a homomorphism for +,
        //   C3: the functional equation,
        // any two of the three force the remaining one.
        let m = modulus(2, 3);
        let units = [1u64, 3, 5, 7];
        let mm = m.m() as usize;
        let mut table = vec![1u64; mm];
        let mut counts = [0u32; 4];
        for code in 0..4u64.pow(8) {
            let mut c = code;
            for slot in table.iter_mut() {
                *slot = units[(c % 4) as usize];
                c /= 4;
            }
            let gf = GammaFunction::new(m, table.clone()).unwrap();
            let c1 = (0..m.m()).all(|x| {
                (0..m.m()).all(|y| {
                    let commutator = m.mul(m.sub(gf.multiplier(y), 1), x);
                    gf.multiplier(commutator) == 1
                })
            });
            let c2 = gf.is_homomorphism();
            let c3 = gf.first_violation().is_none();
            let held = [c1, c2, c3].iter().filter(|&&b| b).count();
            assert!(
                held != 2,
                "exactly two of (kernel, homomorphism, functional equation) held for {table:?}"
            );
            counts[held] += 1;
        }
        assert!(counts[3] > 0, "some tables satisfy all three");
        assert!(
            counts[1] > 0 && counts[0] > 0,
            "sweep covers non-degenerate cases"
        );
    }

    #[test]
    fn sampled_validation_handles_large_moduli_deterministically() {
        // 2^13 = 8192 is above the exhaustive bound; parity tables stay valid
        // and a near-constant corruption is caught by the fixed sample.
        let m = modulus(2, 13);
        let good = gamma_2(m);
        assert!(good.validate());
        let bad = GammaFunction::from_fn(m, |x| if x == 0 { 1 } else { 3 }).unwrap();
        assert!(!bad.validate());
    }
}
