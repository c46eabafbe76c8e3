use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("vertex {0} is not in the diagram")]
    NotAVertex(i32),
    #[error("cannot parse diagram {0:?}")]
    ParseDiagram(String),
    #[error("rank out of range: {0}")]
    RankOutOfRange(String),
    #[error("{0} requires the E8 opt-in (--enable-e8)")]
    FeatureDisabled(String),
    #[error("rank {rank} exceeds the oracle limit {limit}")]
    RankTooLarge { rank: usize, limit: usize },
    #[error("malformed lattice path: {0}")]
    MalformedPath(String),
    #[error("vertex is a shifted projective, not a module")]
    NotAModule,
    #[error("bad orientation string {0:?}")]
    BadOrientation(String),
    #[error("quiver is not a disjoint union of type A paths")]
    NotTypeA,
    #[error("maximal face of size {size} in a rank {rank} complex")]
    Impure { size: usize, rank: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
