//! Context flags merged with an optional JSON config file.

use std::fs;

use gt_braid::DkFamily;
use gt_surface::{Framing, SurfaceContext};
use serde::Deserialize;

use crate::args::{Format, GlobalOpts};
use crate::error::{CliError, Result};

pub const DEFAULT_MAX_DEGREE: u32 = 4;

/// Keys accepted in a config file, spelled like the long flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct ConfigFile {
    pub genus: Option<usize>,
    pub boundaries: Option<usize>,
    #[serde(alias = "max_degree")]
    pub max_degree: Option<u32>,
    pub framing: Option<String>,
    pub format: Option<Format>,
    #[serde(alias = "check_degree")]
    pub check_degree: Option<u32>,
    pub family: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub genus: Option<usize>,
    pub boundaries: Option<usize>,
    pub max_degree: u32,
    pub framing: Framing,
    pub format: Format,
    pub check_degree: Option<u32>,
    pub family: Option<DkFamily>,
}

impl Settings {
    pub fn resolve(flags: &GlobalOpts) -> Result<Settings> {
        let file = match &flags.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
                serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };
        let framing = match flags.framing.clone().or(file.framing) {
            Some(s) => s.parse::<Framing>().map_err(|e| CliError::Usage(e.to_string()))?,
            None => Framing::Adapted,
        };
        let family = match flags.family.clone().or(file.family) {
            Some(s) => Some(s.parse::<DkFamily>().map_err(|e| CliError::Usage(e.to_string()))?),
            None => None,
        };
        Ok(Settings {
            genus: flags.genus.or(file.genus),
            boundaries: flags.boundaries.or(file.boundaries),
            max_degree: flags.max_degree.or(file.max_degree).unwrap_or(DEFAULT_MAX_DEGREE),
            framing,
            format: flags.format.or(file.format).unwrap_or_default(),
            check_degree: flags.check_degree.or(file.check_degree),
            family,
        })
    }

    pub fn genus(&self) -> Result<usize> {
        self.genus.ok_or_else(|| CliError::Usage("missing --genus".into()))
    }

    pub fn boundaries(&self) -> Result<usize> {
        self.boundaries.ok_or_else(|| CliError::Usage("missing --boundaries".into()))
    }

    /// `-D`, falling back to the truncation degree.
    pub fn check_degree(&self) -> u32 {
        self.check_degree.unwrap_or(self.max_degree)
    }

    pub fn surface(&self) -> Result<SurfaceContext> {
        Ok(SurfaceContext::new(self.genus()?, self.boundaries()?, self.max_degree)?)
    }

    /// `--family`, or else `framed` in genus 0 and `genus:g` otherwise.
    pub fn dk_family(&self) -> Result<DkFamily> {
        if let Some(f) = self.family {
            return Ok(f);
        }
        Ok(match self.genus()? {
            0 => DkFamily::Framed,
            g => DkFamily::Genus(g),
        })
    }
}
