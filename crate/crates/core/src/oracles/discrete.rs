//! Uniform-partition discretisations of the taxicab measures.
//!
//! Nothing here may depend on the quadrature or measures modules; the
//! cross-checks are only meaningful while the two paths share no code.

use crate::error::{Error, Result};
use crate::functions::ProfileFunction;
use crate::geometry::Interval;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Insert the profile's breakpoints into the uniform partition.
    pub augment_breakpoints: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self { augment_breakpoints: true }
    }
}

/// `n` uniform cells over `domain`, optionally refined at the profile's
/// breakpoints.
pub fn partition(f: &ProfileFunction, domain: &Interval, n: usize, opts: OracleOptions) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::domain("oracle needs n >= 1"));
    }
    let mut pts: Vec<f64> = domain.uniform_grid(n).collect();
    if opts.augment_breakpoints {
        pts.extend(f.breakpoints().iter().copied().filter(|&b| domain.contains_interior(b)));
        pts.sort_by(f64::total_cmp);
        pts.dedup();
    }
    Ok(pts)
}

fn radius(f: &ProfileFunction, x: f64) -> Result<f64> {
    let v = f.eval(x);
    if v < 0.0 {
        Err(Error::NegativeProfile { x, value: v })
    } else {
        Ok(v)
    }
}

/// Taxicab length of the inscribed polygon: `Σ Δx + |Δf|`.
pub fn polyline_arclength_oracle(f: &ProfileFunction, domain: Interval, n: usize) -> Result<f64> {
    polyline_arclength_oracle_with(f, domain, n, OracleOptions::default())
}

pub fn polyline_arclength_oracle_with(
    f: &ProfileFunction,
    domain: Interval,
    n: usize,
    opts: OracleOptions,
) -> Result<f64> {
    let xs = partition(f, &domain, n, opts)?;
    let ys: Vec<f64> = xs.iter().map(|&x| f.eval(x)).collect();
    Ok(xs.windows(2).zip(ys.windows(2)).map(|(x, y)| (x[1] - x[0]) + (y[1] - y[0]).abs()).sum())
}

/// Sum of taxicab frustum areas, each a frustum of a right square pyramid
/// scaled by its two tilt factors.
pub fn frustum_surface_oracle(f: &ProfileFunction, domain: Interval, n: usize) -> Result<f64> {
    frustum_surface_oracle_with(f, domain, n, OracleOptions::default())
}

pub fn frustum_surface_oracle_with(
    f: &ProfileFunction,
    domain: Interval,
    n: usize,
    opts: OracleOptions,
) -> Result<f64> {
    let xs = partition(f, &domain, n, opts)?;
    let ys = xs.iter().map(|&x| radius(f, x)).collect::<Result<Vec<_>>>()?;
    let mut total = 0.0;
    for (x, y) in xs.windows(2).zip(ys.windows(2)) {
        let dx = x[1] - x[0];
        let df = y[1] - y[0];
        if dx == 0.0 {
            continue;
        }
        let slant = (dx * dx + 0.5 * df * df).sqrt();
        let chord = (dx * dx + df * df).sqrt();
        total += 4.0 * (y[0] + y[1]) * (dx + df.abs()) * slant / chord;
    }
    Ok(total)
}

/// Midpoint sum of taxicab disk slices, `Σ 2 f(m_k)² Δx_k`.
pub fn disk_volume_oracle(f: &ProfileFunction, domain: Interval, n: usize) -> Result<f64> {
    disk_volume_oracle_with(f, domain, n, OracleOptions::default())
}

pub fn disk_volume_oracle_with(f: &ProfileFunction, domain: Interval, n: usize, opts: OracleOptions) -> Result<f64> {
    let xs = partition(f, &domain, n, opts)?;
    let mut total = 0.0;
    for x in xs.windows(2) {
        let r = radius(f, 0.5 * (x[0] + x[1]))?;
        total += 2.0 * r * r * (x[1] - x[0]);
    }
    Ok(total)
}
