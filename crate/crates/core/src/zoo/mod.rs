//! Named group families and structural classifiers for free products,
//! splittings and Seifert fibered spaces.

mod classify;
mod families;

use thiserror::Error;

pub use classify::{
    classify_seifert, free_product_verdict, splitting_verdict, FactorSummary, FreeProductBranch,
    FreeProductVerdict, NontrivialityCertificate, SeifertBranch, SeifertClassification, SeifertData,
    SplittingBranch, SplittingDecl, SplittingKind, SplittingVerdict, RANK_NOTE,
};
pub use families::{
    braid, cyclic, direct_product_of, free_product_of, fuchsian, make, sl3z, symmetric, Family, FAMILIES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` takes {expected} parameters, got {found}")]
    Arity { family: String, expected: usize, found: usize },
    #[error("family `{family}`: {detail}")]
    InvalidParameter { family: String, detail: String },
    #[error("could not certify that {0} is non-trivial")]
    CannotCertifyFactorTriviality(String),
    #[error("factor {0} is the trivial group")]
    TrivialFactor(String),
    #[error("splitting declared without a solvability step")]
    UnknownSolvabilityStep,
    #[error("unsupported orbifold: {0}")]
    UnsupportedOrbifold(String),
    #[error("cone index {0} is below 2")]
    InvalidConeIndex(usize),
}
