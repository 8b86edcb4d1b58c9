//! Batch configuration: one flat TOML document.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SHIPPED_CORPUS: [&str; 8] = [
    "x*y",
    "x^2 - y^3",
    "x^2 - y^4",
    "x^3 - y^4",
    "x^3 - y^5",
    "x^2 - y^5",
    "y^2 - 2*x^2",
    "(x^2 - y^3)*(x + y)",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    /// Plane germs checked by the multiplicity and Milnor suites.
    pub corpus: Vec<String>,
    /// Factor pairs whose products are checked for δ additivity.
    pub additivity_pairs: Vec<[String; 2]>,
    /// Largest `q` in the `x^p - y^q` family for the δ / gap-count check.
    pub delta_family_max: u64,
    /// Largest `p + q` for the three-way Jacobian count.
    pub pq_max_sum: u64,
    /// Number of series coefficients beyond the constant term.
    pub yz_gmax: usize,
    pub eps: f64,
    pub tau: f64,
    pub trials: usize,
    pub seed: u64,
    pub step_cap: u64,
    pub workers: usize,
    pub suites: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpus: SHIPPED_CORPUS.iter().map(|s| s.to_string()).collect(),
            additivity_pairs: vec![
                ["x".into(), "y".into()],
                ["x^2 - y^3".into(), "x + y".into()],
                ["x - y^2".into(), "x + y^2".into()],
            ],
            delta_family_max: 7,
            pq_max_sum: 13,
            yz_gmax: 20,
            eps: 1e-3,
            tau: 1e-6,
            trials: 8,
            seed: 20_240_917,
            step_cap: 1_000_000,
            workers: 4,
            suites: vec!["all".into()],
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Config(m.to_string()));
        if !(self.tau > 0.0 && self.eps > self.tau) {
            return bad("need eps > tau > 0");
        }
        if self.trials == 0 {
            return bad("trials must be positive");
        }
        if self.corpus.is_empty() {
            return bad("corpus is empty");
        }
        if self.delta_family_max < 3 {
            return bad("delta_family_max must be at least 3");
        }
        if self.pq_max_sum < 5 {
            return bad("pq_max_sum must be at least 5");
        }
        if self.yz_gmax < 4 {
            return bad("yz_gmax must be at least 4");
        }
        if self.step_cap == 0 || self.workers == 0 {
            return bad("step_cap and workers must be positive");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_example_matches_defaults() {
        let text = include_str!("../config/example.toml");
        assert_eq!(RunConfig::from_toml(text).unwrap(), RunConfig::default());
    }

    #[test]
    fn rejects_bad_values() {
        assert!(RunConfig::from_toml("eps = 1e-7").is_err());
        assert!(RunConfig::from_toml("corpus = []").is_err());
        assert!(RunConfig::from_toml("colour = 3").is_err());
        assert_eq!(RunConfig::from_toml("seed = 5").unwrap().seed, 5);
    }
}
