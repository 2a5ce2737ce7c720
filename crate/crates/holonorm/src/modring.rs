//! Arithmetic in `Z/p^n` and its unit group.
//!
//! Everything downstream works over a fixed prime-power modulus: group
//! elements are residues, automorphisms of the cyclic group `C_{p^n}` are
//! multiplications by units, and the number-theoretic lemmas that drive the
//! closed-form edge rules are statements about geometric sums of units.
//!
//! Values are kept canonical (in `[0, p^n)`) and all products go through
//! 128-bit intermediates, so any modulus up to `2^62` is safe.

use std::fmt;

use crate::error::{Error, Result};

/// Largest allowed modulus: `p^n <= 2^62`.
pub const MODULUS_BOUND: u64 = 1 << 62;

/// A prime-power modulus `p^n`, validated at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus {
    p: u64,
    n: u32,
    m: u64,
}

impl Modulus {
    /// Builds `p^n`, checking that `p` is prime (trial division), `n >= 1`,
    /// and `p^n <= 2^62`.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut m: u64 = 1;
        for _ in 0..n {
            m = m
                .checked_mul(p)
                .filter(|&m| m <= MODULUS_BOUND)
                .ok_or(Error::ModulusTooLarge { p, n })?;
        }
        Ok(Modulus { p, n, m })
    }

    /// The prime base.
    pub fn p(self) -> u64 {
        self.p
    }

    /// The exponent.
    pub fn n(self) -> u32 {
        self.n
    }

    /// The modulus value `p^n`.
    pub fn m(self) -> u64 {
        self.m
    }

    /// Euler's totient `phi(p^n) = p^n - p^(n-1)`: the order of `Aut(C_{p^n})`.
    pub fn phi(self) -> u64 {
        self.m - self.m / self.p
    }

    /// All units modulo `p^n`, ascending.
    pub fn units(self) -> Vec<u64> {
        (1..self.m).filter(|&a| !a.is_multiple_of(self.p)).collect()
    }

    /// Whether `a` (not necessarily canonical) is a unit.
    pub fn is_unit(self, a: u64) -> bool {
        !a.is_multiple_of(self.p)
    }

    /// Canonical representative of `v`.
    pub fn reduce(self, v: u64) -> u64 {
        v % self.m
    }

    /// `(a + b) mod p^n` for canonical inputs.
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }

    /// `(a - b) mod p^n` for canonical inputs.
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.m - b
        }
    }

    /// `(a * b) mod p^n` for canonical inputs, via a 128-bit intermediate.
    pub fn mul(self, a: u64, b: u64) -> u64 {
        (u128::from(a) * u128::from(b) % u128::from(self.m)) as u64
    }

    /// `a^e mod p^n` by square-and-multiply.
    pub fn pow(self, a: u64, mut e: u64) -> u64 {
        let mut base = self.reduce(a);
        let mut acc = 1 % self.m;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a unit, by extended Euclid; `None` for non-units.
    pub fn inv(self, a: u64) -> Option<u64> {
        if !self.is_unit(a % self.m) {
            return None;
        }
        let (mut r0, mut r1) = (i128::from(self.m), i128::from(a % self.m));
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "unit test above guarantees gcd 1");
        Some(t0.rem_euclid(i128::from(self.m)) as u64)
    }

    /// The divisors of `p^n`, ascending: `1, p, p^2, ..., p^n`.
    pub fn divisors(self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize + 1);
        let mut q: u64 = 1;
        for _ in 0..=self.n {
            out.push(q);
            q = q.saturating_mul(self.p);
        }
        out
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.n)
    }
}

/// Trial-division primality test; sufficient for the prime bases in play.
fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `Z/p^n` in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    /// Reduces `v` into `[0, p^n)`.
    pub fn new(modulus: Modulus, v: u64) -> Self {
        Residue {
            value: modulus.reduce(v),
            modulus,
        }
    }

    /// The canonical value.
    pub fn value(self) -> u64 {
        self.value
    }

    /// The modulus this residue lives in.
    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

impl std::ops::Neg for Residue {
    type Output = Residue;

    /// Additive inverse.
    fn neg(self) -> Residue {
        Residue {
            value: self.modulus.sub(0, self.value),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Add for Residue {
    type Output = Residue;

    fn add(self, rhs: Residue) -> Residue {
        assert_eq!(self.modulus, rhs.modulus, "residues from different moduli");
        Residue {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for Residue {
    type Output = Residue;

    fn sub(self, rhs: Residue) -> Residue {
        assert_eq!(self.modulus, rhs.modulus, "residues from different moduli");
        Residue {
            value: self.modulus.sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// An automorphism `sigma_a : x -> a*x` of `C_{p^n}`, with `a` a unit.
///
/// `Aut(C_{p^n})` is abelian, so composition of these is commutative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitAut {
    a: u64,
    modulus: Modulus,
}

impl UnitAut {
    /// Builds `sigma_a`, rejecting non-units.
    pub fn new(modulus: Modulus, a: u64) -> Result<Self> {
        let a = modulus.reduce(a);
        if !modulus.is_unit(a) {
            return Err(Error::NotAUnit { a, m: modulus.m() });
        }
        Ok(UnitAut { a, modulus })
    }

    /// The identity automorphism `sigma_1`.
    pub fn identity(modulus: Modulus) -> Self {
        UnitAut { a: 1, modulus }
    }

    /// The multiplier `a`.
    pub fn multiplier(self) -> u64 {
        self.a
    }

    /// The modulus this automorphism acts on.
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    /// Applies the automorphism: `x -> a*x`.
    pub fn apply(self, x: Residue) -> Residue {
        assert_eq!(
            self.modulus,
            x.modulus(),
            "automorphism and residue from different moduli"
        );
        Residue::new(self.modulus, self.modulus.mul(self.a, x.value()))
    }

    /// Composition `sigma_a . sigma_b = sigma_{ab}` (commutative).
    pub fn compose(self, other: UnitAut) -> UnitAut {
        assert_eq!(
            self.modulus, other.modulus,
            "automorphisms from different moduli"
        );
        UnitAut {
            a: self.modulus.mul(self.a, other.a),
            modulus: self.modulus,
        }
    }

    /// The inverse automorphism `sigma_{a^-1}`.
    pub fn inverse(self) -> UnitAut {
        UnitAut {
            a: self
                .modulus
                .inv(self.a)
                .expect("constructor guarantees a unit"),
            modulus: self.modulus,
        }
    }

    /// `sigma_a^e = sigma_{a^e}`.
    pub fn pow(self, e: u64) -> UnitAut {
        UnitAut {
            a: self.modulus.pow(self.a, e),
            modulus: self.modulus,
        }
    }

    /// Multiplicative order of `a` modulo `p^n` (divides `phi(p^n)`).
    pub fn order(self) -> u64 {
        let mut t = self.a;
        let mut k = 1;
        while t != 1 {
            t = self.modulus.mul(t, self.a);
            k += 1;
        }
        k
    }
}

impl fmt::Display for UnitAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.a)
    }
}

/// `1 + a + a^2 + ... + a^(t-1) mod p^n` in `O(log t)` time.
///
/// Uses the splitting law `S(a, t1 + t2) = S(a, t1) + a^t1 * S(a, t2)`
/// specialized to binary doubling. These sums are the translation parts of
/// powers of affine maps, and the arithmetic lemmas below are statements
/// about when they vanish.
pub fn geometric_sum(a: UnitAut, t: u64) -> Residue {
    let modulus = a.modulus();
    let base = a.multiplier();
    let mut sum: u64 = 0; // S(a, prefix)
    let mut power: u64 = 1 % modulus.m(); // a^prefix
    for i in (0..64 - t.leading_zeros()).rev() {
        // prefix -> 2*prefix (+1): S(2k) = S(k) + a^k S(k), then S(2k+1) adds a^2k.
        sum = modulus.add(sum, modulus.mul(power, sum));
        power = modulus.mul(power, power);
        if (t >> i) & 1 == 1 {
            sum = modulus.add(sum, power);
            power = modulus.mul(power, base);
        }
    }
    Residue::new(modulus, sum)
}

/// Outcome of one arithmetic-lemma check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    /// Which statement was checked.
    pub name: String,
    /// Whether the biconditional held over the whole stated range.
    pub holds: bool,
    /// Description of the first counterexample, if any.
    pub counterexample: Option<String>,
}

/// Results of [`verify_arith_lemmas`] for one modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// The modulus the lemmas were instantiated at.
    pub modulus: Modulus,
    /// One entry per lemma.
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    /// True when every check passed.
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let verdict = if check.holds { "ok" } else { "FAIL" };
            write!(f, "p^n = {}: {}: {}", self.modulus, check.name, verdict)?;
            if let Some(ce) = &check.counterexample {
                write!(f, " ({ce})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Exhaustively verifies the unit-power sum lemmas at one modulus.
///
/// For `p = 2` (requires `n >= 4`):
/// 1. `(5^k - 1)/2 == 0 mod 2^n` exactly at `k = 2^(n-1)`, for `1 <= k <= 2^(n-1)`;
/// 2. `(5^(2^(n-2)+1) - 1)/2 == 2^(n-1) + 2 mod 2^n`;
/// 3. for `2 <= u < n`: `((2^u+1)^k - 1)/2^u == 0 mod 2^n` exactly at `k = 2^n`,
///    for `1 <= k <= 2^n`.
///
/// For odd `p` (requires `n >= 2`): for `1 <= u < n`,
/// `((p^u+1)^k - 1)/p^u == 0 mod p^n` exactly at `k = p^n`, for `1 <= k <= p^n`.
///
/// Every biconditional is checked over its whole `k` range; a failure reports
/// the first offending `(u, k)`.
pub fn verify_arith_lemmas(modulus: Modulus) -> Result<LemmaReport> {
    let (p, n, m) = (modulus.p(), modulus.n(), modulus.m());
    let mut checks = Vec::new();

    if p == 2 {
        if n < 4 {
            return Err(Error::LemmaPrecondition("n >= 4 when p = 2"));
        }
        // Halves of 5^k - 1 are computed mod 2^(n+1) so that division by 2 is
        // exact before reducing mod 2^n.
        let double = Modulus::new(2, n + 1)?;
        let target = 1u64 << (n - 1);
        let mut pow5 = 1u64;
        let mut check1 = LemmaCheck {
            name: "(5^k - 1)/2 == 0 mod 2^n iff k = 2^(n-1)".into(),
            holds: true,
            counterexample: None,
        };
        for k in 1..=target {
            pow5 = double.mul(pow5, 5);
            let half = modulus.reduce((pow5 - 1) / 2);
            if (half == 0) != (k == target) && check1.holds {
                check1.holds = false;
                check1.counterexample = Some(format!("k = {k}: value {half}"));
            }
        }
        checks.push(check1);

        let k0 = (1u64 << (n - 2)) + 1;
        let value = modulus.reduce((double.pow(5, k0) - 1) / 2);
        let expected = (1u64 << (n - 1)) + 2;
        checks.push(LemmaCheck {
            name: "(5^(2^(n-2)+1) - 1)/2 == 2^(n-1) + 2 mod 2^n".into(),
            holds: value == expected,
            counterexample: (value != expected)
                .then(|| format!("value {value}, expected {expected}")),
        });

        let mut check3 = LemmaCheck {
            name: "((2^u+1)^k - 1)/2^u == 0 mod 2^n iff k = 2^n, for 2 <= u < n".into(),
            holds: true,
            counterexample: None,
        };
        // ((2^u+1)^k - 1)/2^u is the geometric sum 1 + a + ... + a^(k-1) with
        // a = 2^u + 1, accumulated incrementally.
        'outer2: for u in 2..n {
            let a = modulus.reduce((1u64 << u) + 1);
            let (mut sum, mut power) = (0u64, 1u64);
            for k in 1..=m {
                sum = modulus.add(sum, power);
                power = modulus.mul(power, a);
                if (sum == 0) != (k == m) {
                    check3.holds = false;
                    check3.counterexample = Some(format!("u = {u}, k = {k}: sum {sum}"));
                    break 'outer2;
                }
            }
        }
        checks.push(check3);
    } else {
        if n < 2 {
            return Err(Error::LemmaPrecondition("n >= 2 when p is odd"));
        }
        let mut check = LemmaCheck {
            name: "((p^u+1)^k - 1)/p^u == 0 mod p^n iff k = p^n, for 1 <= u < n".into(),
            holds: true,
            counterexample: None,
        };
        'outer: for u in 1..n {
            let a = modulus.add(modulus.pow(p, u as u64), 1);
            let (mut sum, mut power) = (0u64, 1u64);
            for k in 1..=m {
                sum = modulus.add(sum, power);
                power = modulus.mul(power, a);
                if (sum == 0) != (k == m) {
                    check.holds = false;
                    check.counterexample = Some(format!("u = {u}, k = {k}: sum {sum}"));
                    break 'outer;
                }
            }
        }
        checks.push(check);
    }

    Ok(LemmaReport { modulus, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn modulus(p: u64, n: u32) -> Modulus {
        Modulus::new(p, n).expect("valid test modulus")
    }

    /// Plain `O(t)` accumulation, kept as the oracle for the doubling version.
    fn geometric_sum_slow(a: UnitAut, t: u64) -> u64 {
        let m = a.modulus();
        let (mut sum, mut power) = (0u64, 1u64);
        for _ in 0..t {
            sum = m.add(sum, power);
            power = m.mul(power, a.multiplier());
        }
        sum
    }

    #[test]
    fn modulus_construction_validates_parameters() {
        assert_eq!(Modulus::new(6, 2), Err(Error::NotPrime(6)));
        assert_eq!(Modulus::new(1, 2), Err(Error::NotPrime(1)));
        assert_eq!(Modulus::new(5, 0), Err(Error::ZeroExponent));
        assert_eq!(
            Modulus::new(2, 63),
            Err(Error::ModulusTooLarge { p: 2, n: 63 })
        );
        assert_eq!(
            Modulus::new(3, 40),
            Err(Error::ModulusTooLarge { p: 3, n: 40 })
        );
        let m = modulus(2, 62);
        assert_eq!(m.m(), 1 << 62, "2^62 itself is allowed");
        assert_eq!(modulus(7919, 2).m(), 7919 * 7919);
    }

    #[test]
    fn phi_and_units_agree() {
        for (p, n) in [(2, 5), (3, 3), (5, 2), (7, 1)] {
            let m = modulus(p, n);
            assert_eq!(m.units().len() as u64, m.phi(), "unit count vs phi at {m}");
        }
        assert_eq!(modulus(2, 4).phi(), 8);
        assert_eq!(modulus(3, 3).phi(), 18);
    }

    #[test]
    fn unit_rejects_multiples_of_p() {
        let m = modulus(2, 3);
        assert_eq!(UnitAut::new(m, 4), Err(Error::NotAUnit { a: 4, m: 8 }));
        assert_eq!(UnitAut::new(m, 0), Err(Error::NotAUnit { a: 0, m: 8 }));
        assert!(UnitAut::new(m, 11).is_ok(), "11 reduces to the unit 3");
    }

    #[test]
    fn apply_and_compose_match_arithmetic() {
        // sigma_5 applied to 3 in Z/8 is 15 = 7.
        let m = modulus(2, 3);
        let s5 = UnitAut::new(m, 5).unwrap();
        let s3 = UnitAut::new(m, 3).unwrap();
        assert_eq!(s5.apply(Residue::new(m, 3)).value(), 7);
        // sigma_5 . sigma_3 = sigma_15 = sigma_7, and composition commutes.
        assert_eq!(s5.compose(s3).multiplier(), 7);
        assert_eq!(s3.compose(s5), s5.compose(s3));
    }

    #[test]
    fn compose_is_ring_multiplication_pointwise() {
        let m = modulus(3, 3);
        for a in m.units() {
            for b in [1u64, 2, 4, 26] {
                let sa = UnitAut::new(m, a).unwrap();
                let sb = UnitAut::new(m, b).unwrap();
                for x in 0..m.m() {
                    let r = Residue::new(m, x);
                    assert_eq!(
                        sa.compose(sb).apply(r),
                        sb.apply(sa.apply(r)),
                        "composition must act as apply-after-apply"
                    );
                }
            }
        }
    }

    #[test]
    fn inverse_and_order_are_consistent() {
        let m = modulus(2, 4);
        let s5 = UnitAut::new(m, 5).unwrap();
        assert_eq!(s5.inverse().multiplier(), 13, "5 * 13 = 65 = 1 mod 16");
        assert_eq!(s5.compose(s5.inverse()), UnitAut::identity(m));
        assert_eq!(s5.order(), 4, "5 has order 4 mod 16");
        for a in m.units() {
            let s = UnitAut::new(m, a).unwrap();
            assert_eq!(s.pow(s.order()).multiplier(), 1);
            assert!(m.phi().is_multiple_of(s.order()), "order divides phi");
        }
    }

    #[test]
    fn residue_operators_wrap() {
        let m = modulus(5, 2);
        let a = Residue::new(m, 23);
        let b = Residue::new(m, 4);
        assert_eq!((a + b).value(), 2);
        assert_eq!((b - a).value(), 6);
        assert_eq!((-a).value(), 2);
        assert_eq!(Residue::new(m, 25).value(), 0, "construction canonicalizes");
    }

    #[test]
    fn divisors_are_prime_powers() {
        assert_eq!(modulus(2, 4).divisors(), vec![1, 2, 4, 8, 16]);
        assert_eq!(modulus(3, 2).divisors(), vec![1, 3, 9]);
    }

    #[test]
    fn geometric_sum_matches_slow_oracle_exhaustively() {
        for (p, n) in [(2, 4), (3, 2), (5, 2)] {
            let m = modulus(p, n);
            for a in m.units() {
                let s = UnitAut::new(m, a).unwrap();
                for t in 0..=2 * m.m() {
                    assert_eq!(
                        geometric_sum(s, t).value(),
                        geometric_sum_slow(s, t),
                        "geometric sum of s{a} to {t} terms mod {}",
                        m.m()
                    );
                }
            }
        }
    }

    #[test]
    fn geometric_sum_known_values() {
        let m16 = modulus(2, 4);
        let s5 = UnitAut::new(m16, 5).unwrap();
        // 1 + 5 + 25 + 125 = 156 = 12 mod 16.
        assert_eq!(geometric_sum(s5, 4).value(), 12);
        // Eight terms leave 8 mod 16; the full unit-group sweep of 16 terms
        // is the first time the sum vanishes (u = 2 case of the third lemma).
        assert_eq!(geometric_sum(s5, 8).value(), 8);
        assert_eq!(geometric_sum(s5, 16).value(), 0);
        assert_eq!(geometric_sum(s5, 0).value(), 0);
        assert_eq!(geometric_sum(s5, 1).value(), 1);
    }

    #[test]
    fn five_power_halves_hit_their_stated_values() {
        // (5^(2^(n-2)+1) - 1)/2 mod 2^n at n = 4: (5^5 - 1)/2 = 1562 = 10 mod 16,
        // which is 2^(n-1) + 2.
        assert_eq!(((5u64.pow(5) - 1) / 2) % 16, 10);
        let report = verify_arith_lemmas(modulus(2, 4)).unwrap();
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn arith_lemmas_hold_at_desk_scales() {
        for n in 4..=8 {
            let report = verify_arith_lemmas(modulus(2, n)).unwrap();
            assert!(report.all_hold(), "p = 2, n = {n}:\n{report}");
        }
        for (p, ns) in [(3u64, 2..=5u32), (5, 2..=3), (7, 2..=2)] {
            for n in ns {
                let report = verify_arith_lemmas(modulus(p, n)).unwrap();
                assert!(report.all_hold(), "p = {p}, n = {n}:\n{report}");
            }
        }
    }

    #[test]
    fn arith_lemmas_reject_out_of_range_parameters() {
        assert_eq!(
            verify_arith_lemmas(modulus(2, 3)),
            Err(Error::LemmaPrecondition("n >= 4 when p = 2"))
        );
        assert_eq!(
            verify_arith_lemmas(modulus(7, 1)),
            Err(Error::LemmaPrecondition("n >= 2 when p is odd"))
        );
    }

    #[test]
    fn smallest_vanishing_index_at_p3_n3_is_27() {
        // ((3+1)^k - 1)/3 mod 27 first vanishes at k = 27, found by brute force.
        let m = modulus(3, 3);
        let a = UnitAut::new(m, 4).unwrap();
        let first = (1..=m.m())
            .find(|&k| geometric_sum(a, k).value() == 0)
            .expect("sum must vanish within one full period");
        assert_eq!(first, 27);
    }

    proptest! {
        #[test]
        fn geometric_sum_splitting_law(
            seed in 0u64..10_000,
            t1 in 0u64..5_000,
            t2 in 0u64..5_000,
        ) {
            // S(a, t1 + t2) = S(a, t1) + a^t1 * S(a, t2) for random units a.
            let m = modulus(2, 10);
            let units = m.units();
            let a = UnitAut::new(m, units[(seed as usize) % units.len()]).unwrap();
            let whole = geometric_sum(a, t1 + t2);
            let split = geometric_sum(a, t1) + a.pow(t1).apply(geometric_sum(a, t2));
            prop_assert_eq!(whole, split);
        }

        #[test]
        fn geometric_sum_matches_slow_oracle_randomly(
            seed in 0u64..10_000,
            t in 0u64..8_000,
        ) {
            let m = modulus(3, 5);
            let units = m.units();
            let a = UnitAut::new(m, units[(seed as usize) % units.len()]).unwrap();
            prop_assert_eq!(geometric_sum(a, t).value(), geometric_sum_slow(a, t));
        }

        #[test]
        fn pow_matches_repeated_composition(a in 1u64..128, e in 0u64..64) {
            let m = modulus(2, 7);
            prop_assume!(m.is_unit(a));
            let s = UnitAut::new(m, a).unwrap();
            let mut acc = UnitAut::identity(m);
            for _ in 0..e {
                acc = acc.compose(s);
            }
            prop_assert_eq!(s.pow(e), acc);
        }
    }
}
