use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is reducible over the prime field")]
    ReducibleModulus(String),
    #[error("modulus has degree {got}, expected a monic polynomial of degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("no primitive {k}-th root of unity in a field of order {order}")]
    NoSuchRoot { k: u64, order: u64 },
    #[error("no embedding of the field of order {from} into the field of order {into}")]
    NoEmbedding { from: u64, into: u64 },
    #[error("value is not a p-th power")]
    NotAPthPower,
    #[error("k = {k} must be coprime to the characteristic p = {p}")]
    KNotCoprimeToP { k: u32, p: u32 },
    #[error("invalid branch parameters: {0}")]
    LambdaDegenerate(String),
    #[error("genus too small: need (k-1)(n-1) >= {needed}, got (k,n) = ({k},{n})")]
    GenusTooSmall { k: u32, n: u32, needed: u32 },
    #[error("operands live on different curves")]
    CurveMismatch,
    #[error("moduli transformation hits a zero denominator")]
    DegenerateTransform,
    #[error("{0} out of range")]
    OutOfRange(String),
    #[error("form is not in the span of the standard basis: {0}")]
    NotInSpan(String),
    #[error("operation requires characteristic {expected}, curve has characteristic {got}")]
    WrongCharacteristic { expected: u32, got: u32 },
    #[error("value is not an integer: {0}")]
    NonInteger(String),
    #[error("element is not invertible as a single monomial")]
    NotMonomial,
    #[error("parse error: {0}")]
    Parse(String),
}
