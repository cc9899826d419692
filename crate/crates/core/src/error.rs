use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("singular matrix")]
    Singular,
    #[error("grade mismatch: {0}")]
    GradeMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("parse error at line {line}, field `{field}`: {msg}")]
    Parse { line: usize, field: String, msg: String },
    #[error("unknown demo `{0}`")]
    UnknownDemo(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, field: impl Into<String>, msg: impl Into<String>) -> Error {
        Error::Parse { line, field: field.into(), msg: msg.into() }
    }

    pub fn shape(msg: impl Into<String>) -> Error {
        Error::ShapeMismatch(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
