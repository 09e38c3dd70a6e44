use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no facets given")]
    EmptyInput,
    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(usize),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("empty facet")]
    EmptyFacet,
    #[error("vertex count {0} outside the supported range 1..=64")]
    UnsupportedVertexCount(usize),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("{count} facets exceed the search bound {limit}")]
    TooLarge { count: usize, limit: usize },
    #[error("complex is not pure")]
    NotPure,
    #[error("complex is not a tree complex")]
    NotTreeComplex,
    #[error("clique tree violates the induced-subtree property at vertex {0}")]
    CliqueTreePropertyViolated(usize),
    #[error("invalid edge {0:?}")]
    InvalidEdge((usize, usize)),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge((usize, usize)),

    #[error("variable counts differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("the unit monomial is not a valid generator")]
    UnitGenerator,
    #[error("ideal is not square-free")]
    NotSquareFree,
    #[error("x{0} is a generator, so vertex {0} cannot be a face")]
    VariableGenerator(usize),
    #[error("ideal is not generic")]
    NotGeneric,
    #[error("the zero ideal has no such structure")]
    ZeroIdeal,
    #[error("{count} generators exceed the bound {limit}")]
    TooManyGenerators { count: usize, limit: usize },
    #[error("artinian power {power} must exceed the largest exponent {max_exponent}")]
    InvalidArtinianPower { power: u32, max_exponent: u32 },
    #[error("irreducible components are not irredundant")]
    NonMinimalDecomposition,
    #[error("empty component list")]
    EmptyList,

    #[error("complex is not a matroid")]
    NotMatroid,
    #[error("complex is not shifted")]
    NotShifted,
    #[error("input complex is a simplex; its Stanley-Reisner ideal is zero")]
    SimplexInput,
    #[error("no construction applies: complex is neither matroid, pure shifted, nor tree")]
    NoApplicableMethod,
    #[error("construction invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::UncoveredVertex(_) => "UncoveredVertex",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::EmptyFacet => "EmptyFacet",
            Error::UnsupportedVertexCount(_) => "UnsupportedVertexCount",
            Error::EmptyVertexSet => "EmptyVertexSet",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotPure => "NotPure",
            Error::NotTreeComplex => "NotTreeComplex",
            Error::CliqueTreePropertyViolated(_) => "CliqueTreePropertyViolated",
            Error::InvalidEdge(_) => "InvalidEdge",
            Error::DuplicateEdge(_) => "DuplicateEdge",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::UnitGenerator => "UnitGenerator",
            Error::NotSquareFree => "NotSquareFree",
            Error::VariableGenerator(_) => "VariableGenerator",
            Error::NotGeneric => "NotGeneric",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::TooManyGenerators { .. } => "TooManyGenerators",
            Error::InvalidArtinianPower { .. } => "InvalidArtinianPower",
            Error::NonMinimalDecomposition => "NonMinimalDecomposition",
            Error::EmptyList => "EmptyList",
            Error::NotMatroid => "NotMatroid",
            Error::NotShifted => "NotShifted",
            Error::SimplexInput => "SimplexInput",
            Error::NoApplicableMethod => "NoApplicableMethod",
            Error::Internal(_) => "Internal",
        }
    }
}
