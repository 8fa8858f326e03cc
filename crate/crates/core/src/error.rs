use thiserror::Error;

/// Errors raised by field arithmetic, matrix algebra, code analysis and the
/// constructions built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("defining polynomial is not irreducible over GF({0})")]
    NotIrreducible(u32),
    #[error("invalid defining polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("field of order {0} is too large (elements are stored in 32 bits)")]
    FieldTooLarge(u128),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("generator matrix is not in standard form [I | A]")]
    NotStandardForm,
    #[error("search space too large: {0}")]
    TooLarge(String),
    #[error("r = {r} is outside 1..={k}")]
    RankOutOfRange { r: usize, k: usize },
    #[error("degree {d} is outside 0..={n}")]
    DegreeOutOfRange { d: usize, n: usize },
    #[error("invalid generalized Vandermonde spec: {0}")]
    InvalidSpec(String),
    #[error("pool elements {0} and {1} coincide")]
    NotDistinct(usize, usize),
    #[error("construction condition violated: {reason}")]
    ConditionViolated {
        reason: String,
        /// Zero-based pool indices evidencing the violation, when one exists.
        witness: Option<Vec<usize>>,
    },
    #[error("self-check failed: {0}")]
    SelfCheckFailed(String),
    #[error("involutory construction needs even order, got {0}")]
    OddOrder(usize),
    #[error("involutory construction needs characteristic 2, got {0}")]
    NotCharTwo(u32),
    #[error("factor V{0} is singular")]
    SingularFactor(u8),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("root mismatch: {0}")]
    RootMismatch(String),
    #[error("repeated root at positions {0} and {1}")]
    RepeatedRoot(usize, usize),
    #[error("exponent m = {m} is smaller than the order n = {n}")]
    ExponentTooSmall { m: u64, n: usize },
    #[error("theta^{0} = theta^{1}: exponents collide modulo ord(theta) = {2}")]
    ExponentCollision(usize, usize, u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
