use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("polynomial parse error at position {pos}: {msg}")]
    PolynomialSyntax { pos: usize, msg: String },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("metric has parameter-dependent entries; only rational metrics are supported")]
    UnsupportedMetric,

    #[error("metric is degenerate")]
    DegenerateMetric,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{condition} fails at {}", format_index(.index))]
    Validation { condition: String, index: Vec<usize> },

    #[error("internal consistency violated ({what}) at {}", format_index(.index))]
    Consistency { what: String, index: Vec<usize> },

    #[error("class mismatch: expected {expected}, found {found}")]
    ClassMismatch { expected: String, found: String },

    #[error("spec file: {0}")]
    SpecFile(String),
}

/// Formats a zero-based index tuple with 1-based frame subscripts.
pub fn format_index(index: &[usize]) -> String {
    let parts: Vec<String> = index.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(","))
}
