use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("not expandable at origin")]
    NotExpandable,
    #[error("singular matrix: determinant {det}")]
    SingularMatrix { det: String },
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("root of unity not representable: order {0} does not divide 120")]
    RootNotRepresentable(u32),
    #[error("element order not supported")]
    ElementOrderNotSupported,
    #[error("group closure for {group} produced {found} elements, expected {expected}")]
    GroupClosure {
        group: String,
        expected: usize,
        found: usize,
    },
    #[error("presentation relation failed for {group}: {relation}")]
    Presentation { group: String, relation: String },
    #[error("character {chi} is not defined for group {group}")]
    CharacterUndefined { group: String, chi: String },
    #[error("extension not representable: no square root of the character value in Q(zeta_120)")]
    ExtensionNotRepresentable,
    #[error("transvectant order {p} exceeds form degrees {deg_f} and {deg_g}")]
    TransvectantOrder {
        p: usize,
        deg_f: usize,
        deg_g: usize,
    },
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
