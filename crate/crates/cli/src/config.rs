use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use gstar::dims::DIM_DEGREE_CAP;
use gstar::AlgebraKind;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

pub const DEFAULT_MAX: usize = 3;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraSelector {
    M11e,
    Ut11e,
    Ut3e010,
    All,
}

impl AlgebraSelector {
    pub fn kinds(self) -> Vec<AlgebraKind> {
        match self {
            AlgebraSelector::M11e => vec![AlgebraKind::M11E],
            AlgebraSelector::Ut11e => vec![AlgebraKind::UT11E],
            AlgebraSelector::Ut3e010 => vec![AlgebraKind::UT3E010],
            AlgebraSelector::All => vec![AlgebraKind::M11E, AlgebraKind::UT11E, AlgebraKind::UT3E010],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// Flags shared by every subcommand. Unset flags fall back to the config file, then to defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct RunFlags {
    #[arg(long, value_enum)]
    pub algebra: Option<AlgebraSelector>,
    /// Maximum total degree.
    #[arg(long)]
    pub max: Option<usize>,
    /// Extra Grassmann generators beyond the generic rank.
    #[arg(long)]
    pub rank_slack: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Dimension cache file (JSON), created if missing.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// JSON file with any of the fields algebra, max, rank_slack, format, cache, seed.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    algebra: Option<AlgebraSelector>,
    max: Option<usize>,
    rank_slack: Option<usize>,
    format: Option<Format>,
    cache: Option<PathBuf>,
    seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub algebra: AlgebraSelector,
    pub max: usize,
    pub rank_slack: usize,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub seed: u64,
}

fn read_file_config(path: &Path) -> CliResult<FileConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

impl RunConfig {
    pub fn resolve(flags: &RunFlags) -> CliResult<Self> {
        let file = match &flags.config {
            Some(path) => read_file_config(path)?,
            None => FileConfig::default(),
        };
        Ok(RunConfig {
            algebra: flags.algebra.or(file.algebra).unwrap_or(AlgebraSelector::All),
            max: flags.max.or(file.max).unwrap_or(DEFAULT_MAX),
            rank_slack: flags.rank_slack.or(file.rank_slack).unwrap_or(0),
            format: flags.format.or(file.format).unwrap_or(Format::Json),
            cache: flags.cache.clone().or(file.cache),
            seed: flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        })
    }

    /// Dimension-based commands refuse degrees beyond the rank computation cap.
    pub fn check_degree_cap(&self) -> CliResult<()> {
        if self.max > DIM_DEGREE_CAP {
            return Err(CliError::Capacity(format!("--max {} exceeds the degree cap {DIM_DEGREE_CAP}", self.max)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_and_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.json");
        std::fs::write(&path, r#"{"algebra": "ut11e", "max": 2, "format": "csv"}"#).unwrap();
        let flags = RunFlags {
            max: Some(4),
            config: Some(path),
            ..RunFlags::default()
        };
        let cfg = RunConfig::resolve(&flags).unwrap();
        assert_eq!(cfg.algebra, AlgebraSelector::Ut11e);
        assert_eq!(cfg.max, 4);
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(cfg.seed, DEFAULT_SEED);
        assert_eq!(cfg.rank_slack, 0);
    }

    #[test]
    fn unknown_fields_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.json");
        std::fs::write(&path, r#"{"maximum": 2}"#).unwrap();
        let flags = RunFlags {
            config: Some(path),
            ..RunFlags::default()
        };
        assert!(matches!(RunConfig::resolve(&flags), Err(CliError::Config(_))));
    }

    #[test]
    fn cap_enforced() {
        let mut cfg = RunConfig::resolve(&RunFlags::default()).unwrap();
        cfg.max = DIM_DEGREE_CAP + 1;
        assert!(matches!(cfg.check_degree_cap(), Err(CliError::Capacity(_))));
    }
}
