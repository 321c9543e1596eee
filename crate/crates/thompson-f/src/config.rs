//! Runtime configuration: coefficient field, resource guards, and output
//! mode, loaded from a TOML file named on the command line or through the
//! `THF_CONFIG` environment variable.

use crate::error::{Error, Result};
use crate::field::FieldTag;
use crate::solve::Limits;
use serde::Deserialize;
use std::path::{Path, PathBuf};

/// Environment variable holding the default config file path.
pub const CONFIG_ENV: &str = "THF_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub field: FieldTag,
    pub limits: Limits,
    pub output: OutputMode,
    /// Prepend the identity to the acting set in growth-ratio computations.
    pub include_identity: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            field: FieldTag::Rational,
            limits: Limits::default(),
            output: OutputMode::Text,
            include_identity: false,
        }
    }
}

/// Raw TOML shape; every key is optional and overlays the defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    field: Option<String>,
    prime: Option<u32>,
    max_terms: Option<usize>,
    max_degree: Option<usize>,
    max_index: Option<u32>,
    output: Option<String>,
    include_identity: Option<bool>,
}

/// Resolves a field name (`q` or `fp`) and optional modulus into a tag.
pub fn parse_field(name: &str, prime: Option<u32>) -> Result<FieldTag> {
    match name.to_ascii_lowercase().as_str() {
        "q" => {
            if prime.is_some() {
                return Err(Error::InvalidConfig(
                    "a prime modulus makes no sense for the rational field".into(),
                ));
            }
            Ok(FieldTag::Rational)
        }
        "fp" => {
            let p = prime.ok_or_else(|| {
                Error::InvalidConfig("field \"fp\" needs a prime modulus".into())
            })?;
            FieldTag::prime(p)
        }
        other => Err(Error::InvalidConfig(format!(
            "unknown field {other:?} (expected \"q\" or \"fp\")"
        ))),
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Config> {
        let raw: RawConfig =
            toml::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        let mut config = Config::default();
        if let Some(name) = &raw.field {
            config.field = parse_field(name, raw.prime)?;
        } else if raw.prime.is_some() {
            return Err(Error::InvalidConfig(
                "a prime modulus requires field = \"fp\"".into(),
            ));
        }
        if let Some(n) = raw.max_terms {
            config.limits.max_terms = n;
        }
        if let Some(n) = raw.max_degree {
            config.limits.max_degree = n;
        }
        if let Some(n) = raw.max_index {
            config.limits.max_index = n;
        }
        if config.limits.max_terms == 0
            || config.limits.max_degree == 0
            || config.limits.max_index == 0
        {
            return Err(Error::InvalidConfig(
                "resource guards must be positive".into(),
            ));
        }
        match raw.output.as_deref() {
            None => {}
            Some("text") => config.output = OutputMode::Text,
            Some("json") => config.output = OutputMode::Json,
            Some(other) => {
                return Err(Error::InvalidConfig(format!(
                    "unknown output mode {other:?} (expected \"text\" or \"json\")"
                )))
            }
        }
        if let Some(flag) = raw.include_identity {
            config.include_identity = flag;
        }
        Ok(config)
    }

    /// Loads from `explicit` when given, otherwise from the file named by
    /// `THF_CONFIG`, otherwise the defaults.
    pub fn load(explicit: Option<&Path>) -> Result<Config> {
        let path: Option<PathBuf> = explicit
            .map(PathBuf::from)
            .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
        match path {
            None => Ok(Config::default()),
            Some(p) => {
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                Config::from_toml(&text)
            }
        }
    }
}
