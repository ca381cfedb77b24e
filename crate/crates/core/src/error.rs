use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong before a mathematical check gets to run.
///
/// Failed checks (a non-coisotropic subalgebra, a nontrivial cocycle, ...) are
/// report content, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("not an ideal: {0}")]
    NotIdeal(String),

    #[error("not an abelian ideal: {0}")]
    NotAbelianIdeal(String),

    #[error("ideal is not abelian modulo the annihilator of the orbit: {0}")]
    NotOrbitAbelian(String),

    #[error("ad is not nilpotent for {0}")]
    NotNilpotent(String),

    #[error("algebra is not solvable")]
    NotSolvable,

    #[error("algebra is not exponential: ad({witness}) has a nonzero purely imaginary eigenvalue")]
    NotExponential { witness: String },

    #[error("no admissible ideal at step {step}; rejected: {}", rejected.join("; "))]
    StrategyExhausted { step: usize, rejected: Vec<String> },

    #[error("extension covector does not restrict to c on the ideal")]
    InconsistentExtension,

    #[error("invalid section: {0}")]
    InvalidSection(String),

    #[error("orbit of c under the ideal is not a point")]
    NotPointOrbit,

    #[error("chain inclusion violated: {0}")]
    ChainInclusion(String),

    #[error("matrix is not semisimple: minimal polynomial is not squarefree")]
    NotSemisimple,

    #[error("unsupported spectrum: factor {factor} ({reason})")]
    UnsupportedSpectrum { factor: String, reason: String },

    #[error("ad of the hyperbolic part is not diagonalizable over the rationals")]
    NonRationalGrading,

    #[error("algebra has no matrix representation")]
    NoMatrixRepresentation,

    #[error("matrix representation does not match the structure constants: {0}")]
    RepresentationMismatch(String),

    #[error("matrix is not in the span of the representation")]
    NotInAlgebra,

    #[error("trace form is degenerate")]
    DegenerateTraceForm,

    #[error("io error: {0}")]
    Io(String),
}
