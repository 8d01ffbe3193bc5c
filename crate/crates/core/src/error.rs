//! Error and diagnostic types shared across the crate.

use serde::Serialize;
use thiserror::Error;

/// A semiring or semimodule axiom that validation can report against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AddAssociativity,
    AddCommutativity,
    AddIdentity,
    MulAssociativity,
    MulCommutativity,
    MulIdentity,
    Distributivity,
    AbsorbingZero,
    OneEqualsZero,
    ScalarAddDistributivity,
    ScalarMulDistributivity,
    ScalarAssociativity,
    ScalarIdentity,
    ScalarZero,
}

/// A violated axiom together with the element labels that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} violated at ({})", self.axiom, self.witness.join(", "))
    }
}

/// Unified error type for table validation, lattice enumeration and sweeps.
#[derive(Debug, Error)]
pub enum Error {
    #[error("axiom violations: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<AxiomViolation>),

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("product of an empty list of semirings")]
    EmptyProduct,

    #[error("operands belong to different semirings")]
    MixedSemirings,

    #[error("truncated series have different truncation orders")]
    MixedOrders,

    #[error("enumeration cap exceeded: size {size} > cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("sweep budget exceeded: {pairs} pairs > budget {budget}")]
    BudgetExceeded { pairs: u64, budget: u64 },

    #[error("fold multiplier {multiplier} not above target degree {degree}")]
    FoldTooSmall { multiplier: i64, degree: i64 },

    #[error("negative exponent on non-Laurent indeterminate {0}")]
    NegativeExponent(String),

    #[error("semiring is not weak Gaussian; zero-divisor degree is undefined")]
    NotWeakGaussian,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Short machine-readable tag used when a report field is skipped.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Axioms(_) => "axiom_violation",
            Error::BadParams(_) => "bad_params",
            Error::EmptyProduct => "empty_product",
            Error::MixedSemirings => "mixed_semirings",
            Error::MixedOrders => "mixed_orders",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::FoldTooSmall { .. } => "fold_too_small",
            Error::NegativeExponent(_) => "negative_exponent",
            Error::NotWeakGaussian => "not_weak_gaussian",
            Error::Precondition(_) => "precondition",
        }
    }
}
