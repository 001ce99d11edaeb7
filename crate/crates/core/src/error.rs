use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("expected 1 < e < m, got e = {e}, m = {m}")]
    InvalidRange { e: u64, m: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("empty generator list")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("not a numerical monoid: gcd of generators is {0}")]
    NotCofinite(u64),
    #[error("invalid Apéry data: {0}")]
    InvalidApery(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("hypothesis violated: Apéry element {element} has {count} factorizations")]
    NonUniqueAperyFactorization { element: u64, count: usize },
    #[error("not a down-set: {0}")]
    NotDownSet(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("quotient is not artinian")]
    NotArtinian,
    #[error("inadmissible Hilbert function: {0}")]
    InadmissibleHilbertFunction(&'static str),
    #[error("ideal is not stable")]
    NotStable,
    #[error("ideal is not a lexsegment ideal")]
    NotLexsegment,
    #[error("no lex-plus-powers ideal with this Hilbert function")]
    NoLexPlusPowers,
    #[error("truncation not certified: colength {found}, expected {expected}")]
    TruncationNotCertified { found: usize, expected: usize },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(&'static str),
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("binomial with unequal degrees")]
    Inhomogeneous,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("m = {m} is below the 2^t = {threshold} threshold")]
    BelowThreshold { m: u64, threshold: u64 },
    #[error("delta = {0} is too small for the large-m family")]
    DeltaTooSmall(u64),
    #[error("delta = {0} out of range [1, 6]")]
    DeltaOutOfRange(u64),
    #[error("e = {0} too small for this family")]
    EmbeddingTooSmall(u64),
    #[error("construction produced edim {found}, expected {expected}")]
    WrongEmbeddingDimension { expected: usize, found: usize },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}
