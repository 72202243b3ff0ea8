use crate::model::Letter;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground set is empty")]
    EmptyGround,
    #[error("ground set must hold positive integers, got {0}")]
    NonPositive(Letter),
    #[error("ground set is not strictly increasing at {0}")]
    UnsortedGround(Letter),

    #[error("letter {0} occurs more than once")]
    DuplicateLetter(Letter),
    #[error("letter {0} is not in the ground set")]
    UnknownLetter(Letter),
    #[error("letter {0} of the ground set is missing")]
    MissingLetter(Letter),

    #[error("interval [{open}, {close}] is out of range for a word of length {len}")]
    OutOfRange {
        open: usize,
        close: usize,
        len: usize,
    },
    #[error("openers are not strictly increasing at interval {index}")]
    OpenerOrder { index: usize },
    #[error("closers are not strictly increasing at interval {index}")]
    CloserOrder { index: usize },
    #[error("interval [{open}, {close}] does not open on a descent (w_o <= w_c)")]
    DescentViolated { open: usize, close: usize },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("value {value} of element {element} is outside [1, {max}]")]
    ValueOutOfRange {
        element: Letter,
        value: u32,
        max: usize,
    },
    #[error("not a parking function: fewer than {0} values in [1, {0}]")]
    NotParking(usize),
    #[error("not central: f({element}) = {value} exceeds its rank {rank}")]
    NotCentral {
        element: Letter,
        value: u32,
        rank: usize,
    },
    #[error("function is already central; nothing to peel")]
    AlreadyCentral,
    #[error("internal mismatch: {0}")]
    InternalMismatch(&'static str),

    #[error("point lies on the hyperplane x_{i} - x_{j} = {offset}")]
    OnHyperplane { i: usize, j: usize, offset: u8 },
    #[error("constraint system is infeasible (negative cycle)")]
    Infeasible,
    #[error("geometry needs the full ground set [1, {0}]")]
    NotFullGround(usize),

    #[error("cannot parse {what}: {input}")]
    Parse {
        what: &'static str,
        input: alloc::string::String,
    },
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyGround => "EmptyGround",
            Error::NonPositive(_) => "NonPositive",
            Error::UnsortedGround(_) => "UnsortedGround",
            Error::DuplicateLetter(_) => "DuplicateLetter",
            Error::UnknownLetter(_) => "UnknownLetter",
            Error::MissingLetter(_) => "MissingLetter",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::OpenerOrder { .. } => "OpenerOrder",
            Error::CloserOrder { .. } => "CloserOrder",
            Error::DescentViolated { .. } => "DescentViolated",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::ValueOutOfRange { .. } => "ValueOutOfRange",
            Error::NotParking(_) => "NotParking",
            Error::NotCentral { .. } => "NotCentral",
            Error::AlreadyCentral => "AlreadyCentral",
            Error::InternalMismatch(_) => "InternalMismatch",
            Error::OnHyperplane { .. } => "OnHyperplane",
            Error::Infeasible => "Infeasible",
            Error::NotFullGround(_) => "NotFullGround",
            Error::Parse { .. } => "Parse",
        }
    }
}
