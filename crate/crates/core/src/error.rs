use thiserror::Error;

/// Errors raised by the geometric and extremal routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a polytope needs at least one vertex")]
    EmptyPolytope,

    #[error("vertex {vertex} has a negative coordinate at index {coordinate}")]
    NegativeCoordinate { vertex: usize, coordinate: usize },

    #[error("the origin is not a member of the polytope")]
    OriginNotInPolytope,

    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("non-finite number {0} where an exact value is required")]
    NonFinite(f64),

    #[error("scaling factor must be at least 1")]
    ZeroScaling,

    #[error("enumeration needs {candidates} candidate points, budget is {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },

    #[error("the polytope has empty interior (affine dimension {affine_dim} < {dim})")]
    EmptyInterior { affine_dim: usize, dim: usize },

    #[error("polytope vertices are not all lattice points")]
    NotIntegral,

    #[error("extreme rays of the dual cone are only computed for n <= 3 (n = {dim})")]
    RaysUnavailable { dim: usize },

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("the two points are identical")]
    IdenticalPoints,

    #[error("point has a vanishing coordinate at index {0}")]
    ZeroCoordinate(usize),

    #[error("no monomial separates the points beyond the numerical threshold {threshold:e}")]
    Inseparable { threshold: f64 },

    #[error("the orthogonal lattice is trivial: span of S is the whole space")]
    EmptyKernel,

    #[error("radii must satisfy 0 < inner < outer (got inner = {inner}, outer = {outer})")]
    InvalidRadii { inner: f64, outer: f64 },

    #[error("exponent vectors are linearly dependent")]
    SingularExponents,

    #[error("the body has no piece on the full torus C^{{*n}}; use the axis recursion")]
    NoFullSupportPiece,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid Reinhardt body: {0}")]
    InvalidBody(String),

    #[error("exponent {0:?} lies outside the cone generated by S")]
    ExponentOutsideCone(Vec<i64>),

    #[error("series diverges at sample {index} (term modulus {modulus:e})")]
    DivergentOnSample { index: usize, modulus: f64 },

    #[error("exponent {0:?} lies in the cone; monomial is bounded on every hull")]
    BetaInCone(Vec<i64>),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("linear program failed: {0}")]
    Solver(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for failures of a mathematical hypothesis on the inputs, as
    /// opposed to budget or internal failures.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::BudgetExceeded { .. } | Error::Overflow(_) | Error::Solver(_)
        )
    }
}
