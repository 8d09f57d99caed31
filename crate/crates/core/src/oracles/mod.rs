//! Brute-force oracles and convergence tables.
//!
//! The oracles live in [`discrete`] and mirror the polygon / frustum / slice
//! constructions directly. [`convergence_table`] pairs them with a single
//! reference value from the quadrature path.

pub mod discrete;

pub use discrete::{
    disk_volume_oracle, disk_volume_oracle_with, frustum_surface_oracle, frustum_surface_oracle_with,
    polyline_arclength_oracle, polyline_arclength_oracle_with, OracleOptions,
};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functions::ProfileFunction;
use crate::geometry::Interval;
use crate::measures::{arclength_functional, surface_of_revolution, volume_of_revolution};
use crate::quadrature::QuadratureConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    Arclength,
    Surface,
    Volume,
}

impl MeasureKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MeasureKind::Arclength => "arclength",
            MeasureKind::Surface => "surface",
            MeasureKind::Volume => "volume",
        }
    }

    /// The quadrature value of this measure.
    pub fn reference(&self, f: &ProfileFunction, domain: Interval, cfg: &QuadratureConfig) -> Result<f64> {
        match self {
            MeasureKind::Arclength => arclength_functional(f, domain, cfg),
            MeasureKind::Surface => surface_of_revolution(f, domain, cfg),
            MeasureKind::Volume => volume_of_revolution(f, domain, cfg),
        }
    }

    /// The brute-force value of this measure with `n` uniform cells.
    pub fn oracle(&self, f: &ProfileFunction, domain: Interval, n: usize, opts: OracleOptions) -> Result<f64> {
        match self {
            MeasureKind::Arclength => polyline_arclength_oracle_with(f, domain, n, opts),
            MeasureKind::Surface => frustum_surface_oracle_with(f, domain, n, opts),
            MeasureKind::Volume => disk_volume_oracle_with(f, domain, n, opts),
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "arclength" => Ok(MeasureKind::Arclength),
            "surface" => Ok(MeasureKind::Surface),
            "volume" => Ok(MeasureKind::Volume),
            other => Err(Error::Spec(format!("unknown measure {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub oracle_value: f64,
    pub reference_value: f64,
    pub abs_error: f64,
}

pub fn convergence_table(
    kind: MeasureKind,
    f: &ProfileFunction,
    domain: Interval,
    ns: &[usize],
    cfg: &QuadratureConfig,
) -> Result<Vec<ConvergenceRow>> {
    convergence_table_with(kind, f, domain, ns, cfg, OracleOptions::default())
}

pub fn convergence_table_with(
    kind: MeasureKind,
    f: &ProfileFunction,
    domain: Interval,
    ns: &[usize],
    cfg: &QuadratureConfig,
    opts: OracleOptions,
) -> Result<Vec<ConvergenceRow>> {
    if ns.is_empty() {
        return Err(Error::domain("convergence table needs at least one n"));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("convergence table sizes must be strictly ascending"));
    }
    let reference = kind.reference(f, domain, cfg)?;
    ns.iter()
        .map(|&n| {
            let oracle_value = kind.oracle(f, domain, n, opts)?;
            Ok(ConvergenceRow { n, oracle_value, reference_value: reference, abs_error: (oracle_value - reference).abs() })
        })
        .collect()
}
