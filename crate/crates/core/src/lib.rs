//! Exact ordinal invariants of `C(K)` spaces.
//!
//! * [`ordinal`]: Cantor normal form arithmetic below ε₀, with a parser.
//! * [`scattered`]: Cantor–Bendixson derivatives and heights of `[0, α]`.
//! * [`index`]: Szlenk and weak*-dentability indices in closed form.
//! * [`engine`]: finite slice-derivation lab over exact rationals.
//! * [`cli`]: the `ckindex` command-line front end.

pub mod cli;
pub mod engine;
pub mod index;
pub mod ordinal;
pub mod scattered;

use thiserror::Error;

pub use engine::{EngineError, PointSet, Rational, Vector};
pub use index::{IndexError, IndexReport, SpaceDescriptor};
pub use ordinal::{Ordinal, OrdinalError};
pub use scattered::{CompactOrdinalSpace, Derived};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// 1 for domain errors, 2 for syntax and usage errors, 3 for the
    /// enumeration capacity guardrail.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Ordinal(OrdinalError::Syntax { .. }) => 2,
            Error::Index(IndexError::Ordinal(OrdinalError::Syntax { .. })) => 2,
            Error::Engine(EngineError::Capacity { .. }) => 3,
            Error::Engine(EngineError::Format(_)) => 2,
            Error::Usage(_) => 2,
            _ => 1,
        }
    }
}
