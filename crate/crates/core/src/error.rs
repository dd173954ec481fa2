use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("substitution is not prolongable on seed '{seed}': its image '{image}' must start with it and be longer")]
    NonProlongable { seed: char, image: String },
    #[error("image of letter '{0}' is empty")]
    EmptyImage(char),
    #[error("letter '{0}' has no image")]
    MissingRule(char),
    #[error("letter '{0}' is not reachable from the seed")]
    UnreachableLetter(char),
    #[error("step {step}: u_n is not a proper prefix of u_(n+1)")]
    NotNested { step: usize },
    #[error("orbit point {step} lies within {guard:e} of an interval endpoint")]
    BoundaryAmbiguity { step: usize, guard: f64 },
    #[error("period must be non-empty")]
    EmptyPeriod,
    #[error("invalid interval exchange: {0}")]
    InvalidIet(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid spec field `{field}`: {message}")]
    InvalidSpec { field: String, message: String },
    #[error("n_max {n_max} exceeds a quarter of the prefix length {length}")]
    HorizonTooDeep { n_max: usize, length: usize },
    #[error("'{0}' is not a factor at the observed horizon")]
    UnknownFactor(String),
    #[error("'{0}' is not a palindrome")]
    NotAPalindrome(String),
    #[error("factor '{factor}' has {occurrences} occurrence(s); return words need at least two")]
    TooFewOccurrences { factor: String, occurrences: usize },
    #[error("complexities did not stabilise below the prefix cap {cap} (stable up to n = {stable_upto:?})")]
    NoSaturation { cap: usize, stable_upto: Option<usize> },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("missing fixture '{0}'")]
    MissingFixture(String),
    #[error("generation failed for '{name}': {source}")]
    GenerationFailed {
        name: String,
        #[source]
        source: Box<Error>,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn spec(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidSpec {
            field: field.into(),
            message: message.into(),
        }
    }
}
