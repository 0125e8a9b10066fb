use thiserror::Error;

use crate::scenario::ConfigError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("selection rule violated: {0}")]
    SelectionRule(String),

    #[error("integration accuracy lost at t = {t:e} s: {reason}")]
    Integration { t: f64, reason: String },

    #[error("mode {mode} is not guided (V = {v_number:.4})")]
    ModeNotGuided { mode: String, v_number: f64 },

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
