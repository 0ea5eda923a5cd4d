//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational literal {0:?}")]
    BadRational(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("map is not multiplicative: α(e_{i}·e_{j}) ≠ α(e_{i})·α(e_{j})")]
    NotMultiplicative { i: usize, j: usize },

    #[error("algebra has no two-sided unit")]
    NoUnit,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("map is not a derivation")]
    NotDerivation,

    #[error("map is not nilpotent within {bound} powers")]
    NotNilpotent { bound: usize },

    #[error("parameter λ_{0} must be nonzero")]
    ZeroParameter(usize),

    #[error("not a group table: {0}")]
    NotAGroup(String),

    #[error("index map is not a group morphism: endo({g}·{h}) ≠ endo({g})·endo({h})")]
    NotAGroupMorphism { g: usize, h: usize },

    #[error("substitution polynomial must have zero constant term")]
    NonzeroConstantTerm,

    #[error("basis index {0} below the line-algebra domain (n ≥ -1)")]
    IndexBelowDomain(i64),

    #[error("Hom-module axiom {axiom} fails at {witness}")]
    ModuleAxiom { axiom: u8, witness: String },

    #[error("algebra is not Hom-Lie: {0}")]
    NotHomLie(String),

    #[error("boundary matrices do not compose to zero (d_{p} ∘ d_{} ≠ 0)", p + 1)]
    NotAComplex { p: usize },

    #[error("operator has {0} strands, expected {1}")]
    WrongStrandCount(usize, usize),

    #[error("operator does not satisfy the Hom-Yang-Baxter equation")]
    HybeFailed,

    #[error("refusing to build operators on {rows} rows (cap {cap})")]
    OperatorTooLarge { rows: usize, cap: usize },

    #[error("document error: {0}")]
    Document(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
