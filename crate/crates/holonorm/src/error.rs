//! Crate-wide error type.
//!
//! Data errors (bad construction parameters, infeasible requests, failed
//! cross-checks) are reported through [`Error`]; mixing values that belong to
//! different moduli is a programming error and panics at the call site
//! instead.

use thiserror::Error;

/// Everything that can go wrong while building catalogs, graphs, or oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The base of a modulus must be prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The exponent of a modulus must be at least 1.
    #[error("modulus exponent must be at least 1")]
    ZeroExponent,

    /// `p^n` must fit comfortably in 64 bits (capped at `2^62`).
    #[error("{p}^{n} exceeds the 2^62 modulus bound")]
    ModulusTooLarge { p: u64, n: u32 },

    /// A multiplier that is supposed to define an automorphism shares a
    /// factor with the modulus.
    #[error("{a} is not a unit modulo {m}")]
    NotAUnit { a: u64, m: u64 },

    /// A gamma table must assign one automorphism to every group element.
    #[error("table length {len} does not match modulus {m}")]
    TableLength { len: usize, m: u64 },

    /// The named catalog families exist only for `p = 2, n >= 3` or odd `p`
    /// with `n >= 1`.
    #[error("catalog is defined for p = 2 with n >= 3 or odd p with n >= 1; got p = {p}, n = {n}")]
    UnsupportedParameters { p: u64, n: u32 },

    /// A label whose parameters are outside the canonical ranges.
    #[error("label {0} is not canonical for its modulus")]
    NonCanonicalLabel(String),

    /// The arithmetic-lemma verifier was invoked outside the lemmas' stated
    /// parameter ranges.
    #[error("arithmetic lemmas require {0}")]
    LemmaPrecondition(&'static str),

    /// Brute-force enumeration is limited to holomorphs of a few thousand
    /// elements.
    #[error("holomorph order {order} exceeds the oracle bound {bound}")]
    OracleBound { order: u64, bound: u64 },

    /// The oracle found a regular subgroup whose gamma table matches no
    /// catalog entry; the catalog would be incomplete.
    #[error("oracle found a regular subgroup matching no catalog label (gamma table {0:?})")]
    UnmatchedSubgroup(Vec<u64>),

    /// A circle group that fits none of the order-`p^n` classes with a
    /// cyclic maximal subgroup.
    #[error("circle group matches no known isomorphism class")]
    Unclassifiable,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
