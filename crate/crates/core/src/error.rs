use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("generator index cannot be zero")]
    ZeroGenerator,
    #[error("generator index {index} out of range for {n} strands")]
    GeneratorOutOfRange { index: i32, n: usize },
    #[error("strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("braid on {braid} strands cannot act on a loop with {lp} punctures")]
    PunctureMismatch { braid: usize, lp: usize },
    #[error("need at least {min} strands, got {got}")]
    TooFewStrands { min: usize, got: usize },
    #[error("invalid subbraid strand selection: {0}")]
    BadSubbraid(String),
    #[error("loop coordinates must have positive even length, got {0}")]
    BadLoopLength(usize),
    #[error("loops in a batch must have the same number of punctures")]
    RaggedLoops,
    #[error("no cycle found within {0} iterations")]
    NoCycle(usize),
    #[error("matrix must be square and nonempty")]
    NotSquare,
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("Polynomial with fractional powers.")]
    FractionalPowers,
    #[error("cannot evaluate at t = 0")]
    EvaluateAtZero,
    #[error("Paths of particles {0} and {1} have a coincident projection.")]
    CoincidentProjection(usize, usize),
    #[error("particles {0} and {1} swap while not adjacent; trajectories are undersampled")]
    NonAdjacentCrossing(usize, usize),
    #[error("simultaneous crossings share particle {0}; trajectories are undersampled")]
    SimultaneousCrossings(usize),
    #[error("invalid trajectory data: {0}")]
    Trajectory(String),
    #[error("crossing times of the first databraid must precede those of the second")]
    CrossingTimeOrder,
    #[error("FTBE needs an explicit time or at least two crossings")]
    FtbeNeedsTime,
    #[error("unknown property '{0}'")]
    UnknownProperty(String),
    #[error("invalid value '{value}' for property {key}")]
    BadPropertyValue { key: String, value: String },
    #[error("{0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
