use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at s = {0}")]
    Pole(f64),

    #[error("argument outside supported domain: {0}")]
    Domain(String),

    #[error("non-finite argument")]
    NonFinite,

    #[error("unknown identity `{0}`")]
    UnknownKey(String),

    #[error("parameter {param:?} outside the domain of `{id}`")]
    Parameter { id: String, param: Option<u32> },

    #[error("index {n} below start index {start} of `{id}`")]
    Index { id: String, n: u64, start: u64 },

    #[error("inconclusive: `{id}` needs more than {cap} terms to reach {target:e}")]
    Inconclusive { id: String, cap: u64, target: f64 },

    #[error("unknown integrand `{0}`")]
    UnknownIntegrand(String),

    #[error("unknown target `{0}`")]
    UnknownTarget(String),

    #[error("unknown method `{0}`")]
    UnknownMethod(String),

    #[error("unsupported format `{0}`")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
