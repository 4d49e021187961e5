//! Reading JSON inputs and the errors that end a run with exit code 2.

use std::io::Read;
use std::path::Path;

use linenet_core::cube::CubeError;
use linenet_core::game::GameError;
use linenet_core::higher::HigherError;
use linenet_core::planar::RaysError;
use linenet_core::ruling::RulingError;
use linenet_core::Scalar;
use serde::de::DeserializeOwned;

/// Anything wrong with the input rather than with the mathematics.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON in {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Ruling(#[from] RulingError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Higher(#[from] HigherError),
    #[error(transparent)]
    Rays(#[from] RaysError),
}

/// Parse JSON from `path`, or from standard input when `path` is `-`.
/// Numbers that must be exact are rational strings; JSON floats are
/// rejected by the `Scalar` deserializer.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io {
                path: name.clone(),
                source,
            })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: name.clone(),
            source,
        })?
    };
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: name, source })
}

pub fn parse_scalar(s: &str) -> Result<Scalar, String> {
    s.parse::<Scalar>().map_err(|e| e.to_string())
}
