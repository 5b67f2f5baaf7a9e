use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::darboux::{DarbouxChain, TransformationFunction};
use crate::error::{Error, Result};
use crate::exp_algebra::Hyperbolic;
use crate::oracle::UniformGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Wavenumbers as `kmin:kmax:count` or an explicit list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KGrid {
    Text(String),
    Values(Vec<f64>),
}

impl KGrid {
    pub fn values(&self) -> Result<Vec<f64>> {
        let values = match self {
            KGrid::Values(v) => v.clone(),
            KGrid::Text(s) => parse_kgrid(s)?,
        };
        if values.is_empty() {
            return Err(Error::InvalidParameter("k-grid is empty".into()));
        }
        Ok(values)
    }
}

fn parse_number(s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("not a number: {s:?}")))
}

fn parse_kgrid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [lo, hi, count] => {
            let (lo, hi) = (parse_number(lo)?, parse_number(hi)?);
            let count: usize = count
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad k-grid count in {s:?}")))?;
            match count {
                0 => Ok(Vec::new()),
                1 => Ok(vec![lo]),
                _ => Ok((0..count)
                    .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
                    .collect()),
            }
        }
        [_] => s.split(',').map(parse_number).collect(),
        _ => Err(Error::InvalidParameter(format!(
            "k-grid must be kmin:kmax:count or a comma list, got {s:?}"
        ))),
    }
}

/// Job parameters as read from a config file or the command line; every
/// field is optional so that flags can override a file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub n: Option<usize>,
    pub a: Option<Vec<f64>>,
    pub b: Option<Vec<f64>>,
    pub kinds: Option<Vec<Hyperbolic>>,
    pub xmin: Option<f64>,
    pub xmax: Option<f64>,
    pub points: Option<usize>,
    pub kgrid: Option<KGrid>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    /// Skip the finite-difference spectrum cross-check in `spectrum`.
    pub no_oracle: Option<bool>,
}

impl JobConfig {
    /// Reads a JSON or TOML file, chosen by extension.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::InvalidParameter(format!("cannot read config {}: {e}", path.display()))
        })?;
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        match ext {
            "json" => serde_json::from_str(&text)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display()))),
            "toml" => toml::from_str(&text)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display()))),
            _ => Err(Error::InvalidParameter(format!(
                "config file must end in .json or .toml: {}",
                path.display()
            ))),
        }
    }

    /// Fields set in `over` replace those in `self`.
    pub fn overlay(self, over: JobConfig) -> JobConfig {
        JobConfig {
            n: over.n.or(self.n),
            a: over.a.or(self.a),
            b: over.b.or(self.b),
            kinds: over.kinds.or(self.kinds),
            xmin: over.xmin.or(self.xmin),
            xmax: over.xmax.or(self.xmax),
            points: over.points.or(self.points),
            kgrid: over.kgrid.or(self.kgrid),
            format: over.format.or(self.format),
            out: over.out.or(self.out),
            no_oracle: over.no_oracle.or(self.no_oracle),
        }
    }

    pub fn resolve(self, command: &str) -> Result<Job> {
        let a = self.a.unwrap_or_default();
        let n = self.n.unwrap_or(a.len());
        if n != a.len() {
            return Err(Error::InvalidParameter(format!(
                "N = {n} but {} rates given",
                a.len()
            )));
        }
        let b = self.b.unwrap_or_else(|| vec![0.0; n]);
        if b.len() != n {
            return Err(Error::InvalidParameter(format!(
                "{} shifts given for N = {n}",
                b.len()
            )));
        }
        if let Some(kinds) = &self.kinds {
            if kinds.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "{} kinds given for N = {n}",
                    kinds.len()
                )));
            }
        }
        let xmin = self.xmin.unwrap_or(0.0);
        let xmax = self.xmax.unwrap_or(10.0);
        let points = self.points.unwrap_or(501);
        let x_grid = UniformGrid::spanning(xmin, xmax, points)?;
        let format = self.format.unwrap_or_default();
        let kgrid = self
            .kgrid
            .unwrap_or_else(|| KGrid::Text("0.1:10:100".into()))
            .values()?;
        let out = self
            .out
            .unwrap_or_else(|| PathBuf::from(format!("{command}.{}", format.extension())));
        Ok(Job {
            a,
            b,
            kinds: self.kinds,
            x_grid,
            kgrid,
            format,
            out,
            oracle: !self.no_oracle.unwrap_or(false),
        })
    }
}

/// A validated job.
#[derive(Debug, Clone, PartialEq)]
pub struct Job {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub kinds: Option<Vec<Hyperbolic>>,
    pub x_grid: UniformGrid,
    pub kgrid: Vec<f64>,
    pub format: Format,
    pub out: PathBuf,
    pub oracle: bool,
}

impl Job {
    pub fn chain(&self) -> Result<DarbouxChain> {
        match &self.kinds {
            None => DarbouxChain::alternating(&self.a, &self.b),
            Some(kinds) => {
                let funcs = kinds
                    .iter()
                    .zip(self.a.iter().zip(&self.b))
                    .map(|(&kind, (&a, &b))| TransformationFunction::new(kind, a, b))
                    .collect::<Result<Vec<_>>>()?;
                DarbouxChain::new(funcs)
            }
        }
    }
}
