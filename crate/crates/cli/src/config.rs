//! Laboratory configuration: defaults, TOML files, and flag overrides.
//! With a fixed seed every command produces byte-identical reports.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use lab_core::verify::VerifyConfig;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read configuration file: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed configuration: {0}")]
    Malformed(#[from] toml::de::Error),

    #[error("configuration key '{key}' is out of range: {message}")]
    OutOfRange { key: &'static str, message: String },
}

/// Static experiment configuration shared by every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LabConfig {
    pub dimension: usize,
    pub truncation: u32,
    pub working_radius: f64,
    pub circle_grid: usize,
    pub sphere_grid: usize,
    pub tol_boundary: f64,
    pub tol_quadrature: f64,
    pub cluster_epsilon: f64,
    pub seed: u64,
}

impl Default for LabConfig {
    fn default() -> Self {
        Self {
            dimension: 2,
            truncation: 48,
            working_radius: 0.9,
            circle_grid: 4096,
            sphere_grid: 16384,
            tol_boundary: 1e-9,
            tol_quadrature: 1e-8,
            cluster_epsilon: 1e-3,
            seed: 42,
        }
    }
}

/// Flag-level overrides; any `Some` wins over file and defaults.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub dimension: Option<usize>,
    pub truncation: Option<u32>,
    pub working_radius: Option<f64>,
    pub circle_grid: Option<usize>,
    pub seed: Option<u64>,
}

impl LabConfig {
    /// Defaults, overlaid by an optional TOML file, overlaid by flags.
    pub fn load(path: Option<&Path>, overrides: &Overrides) -> Result<Self, ConfigError> {
        let mut cfg = match path {
            Some(p) => toml::from_str(&std::fs::read_to_string(p)?)?,
            None => Self::default(),
        };
        if let Some(n) = overrides.dimension {
            cfg.dimension = n;
        }
        if let Some(t) = overrides.truncation {
            cfg.truncation = t;
        }
        if let Some(r) = overrides.working_radius {
            cfg.working_radius = r;
        }
        if let Some(g) = overrides.circle_grid {
            cfg.circle_grid = g;
        }
        if let Some(s) = overrides.seed {
            cfg.seed = s;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        fn bad(key: &'static str, message: String) -> ConfigError {
            ConfigError::OutOfRange { key, message }
        }
        if self.dimension < 1 {
            return Err(bad("dimension", format!("{} < 1", self.dimension)));
        }
        if !(1..=4096).contains(&self.truncation) {
            return Err(bad(
                "truncation",
                format!("{} outside 1..=4096", self.truncation),
            ));
        }
        if !(self.working_radius > 0.0 && self.working_radius <= 0.99) {
            return Err(bad(
                "working_radius",
                format!("{} outside (0, 0.99]", self.working_radius),
            ));
        }
        if self.circle_grid < 256 {
            return Err(bad(
                "circle_grid",
                format!("{} below the minimum 256", self.circle_grid),
            ));
        }
        if self.sphere_grid < 1024 {
            return Err(bad(
                "sphere_grid",
                format!("{} below the minimum 1024", self.sphere_grid),
            ));
        }
        for (key, value) in [
            ("tol_boundary", self.tol_boundary),
            ("tol_quadrature", self.tol_quadrature),
            ("cluster_epsilon", self.cluster_epsilon),
        ] {
            if !(value > 0.0) {
                return Err(bad(key, format!("{value} is not positive")));
            }
        }
        Ok(())
    }

    pub fn to_verify_config(&self) -> VerifyConfig {
        VerifyConfig {
            dimension: self.dimension,
            truncation: self.truncation,
            working_radius: self.working_radius,
            circle_grid: self.circle_grid,
            sphere_grid: self.sphere_grid,
            cluster_epsilon: self.cluster_epsilon,
            seed: self.seed,
        }
    }
}
