use thiserror::Error;

/// Errors raised by constructors, builders and parsers.
///
/// Law violations found by the checkers are not errors; they are reported
/// through [`crate::Check::Fail`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a semigroup carrier must be nonempty")]
    EmptyCarrier,
    #[error("labels must be nonempty")]
    EmptyLabel,
    #[error("label `{0}` is already used in this carrier")]
    LabelCollision(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("table has {rows} rows of widths {widths:?} but the carrier has {size} elements")]
    Shape {
        rows: usize,
        widths: Vec<usize>,
        size: usize,
    },
    #[error("table entry ({row},{col}) = {value} is out of range for a carrier of size {size}")]
    Closure {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("carrier of {requested} elements exceeds the limit of {limit}")]
    SizeLimit { requested: u128, limit: usize },
    #[error("relabeling map is not a bijection: {0}")]
    NotBijection(String),
    #[error("corrupted table: `{0}` and `{1}` are both identities")]
    MultipleIdentities(String, String),
    #[error("corrupted table: `{0}` and `{1}` are both zeros")]
    MultipleZeros(String, String),
    #[error("rank vector is not a permutation of 0..{0}")]
    BadRanks(usize),
    #[error("semigroup does not induce a total order: {0}")]
    NotTotalOrderSemigroup(String),
    #[error("ordered family is invalid: {0}")]
    BadFamily(String),
    #[error("tuple arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("cannot mix signed and unsigned tuples")]
    SignednessMismatch,
    #[error("tuples must have at least one coordinate")]
    ZeroArity,
    #[error("negative coordinate {0} in an unsigned tuple")]
    NegativeCoordinate(i64),
    #[error("signed tuple {0} where only nonnegative tuples are accepted")]
    SignedInput(String),
    #[error("coordinate overflow while adding {0} and {1}")]
    Overflow(String, String),
    #[error("cannot parse tuple `{0}`")]
    ParseTuple(String),
    #[error("cannot parse index label `{0}`")]
    ParseLabel(String),
    #[error("index metadata invalid: {0}")]
    IndexMetadata(String),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
