use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{0} is not an odd prime below 2^31")]
    NotAnOddPrime(u64),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{name}` has degree 0")]
    ZeroDegree { name: String },
    #[error("exterior generator `{name}` has even degree {degree}")]
    ExteriorEvenDegree { name: String, degree: u32 },
    #[error("polynomial generator `{name}` has odd degree {degree}")]
    PolynomialOddDegree { name: String, degree: u32 },
    #[error("too many exterior generators ({0}, at most 64)")]
    TooManyExterior(usize),
    #[error("elements belong to different algebras")]
    DescriptorMismatch,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element is not homogeneous of degree {0}")]
    WrongDegree(u32),
    #[error("matrix is not invertible over F_p")]
    NonInvertible,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid Steenrod action: {0}")]
    InvalidAction(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
