//! Points, intervals, angles and the taxicab metric.

use std::f64::consts::{FRAC_PI_2, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ratio of circumference to diameter of a taxicab circle.
pub const PI_T: f64 = 4.0;

fn finite(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain(format!("{name} must be finite, got {v}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    fn check(&self) -> Result<()> {
        finite("x", self.x)?;
        finite("y", self.y)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    fn check(&self) -> Result<()> {
        finite("x", self.x)?;
        finite("y", self.y)?;
        finite("z", self.z)?;
        Ok(())
    }
}

/// Closed interval `[lo, hi]` with finite bounds and `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        finite("interval bound", lo)?;
        finite("interval bound", hi)?;
        if lo > hi {
            return Err(Error::domain(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Strictly inside, excluding both bounds.
    pub fn contains_interior(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// `n + 1` evenly spaced points from `lo` to `hi` inclusive.
    pub fn uniform_grid(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        let n = n.max(1);
        (0..=n).map(move |i| {
            if i == n {
                self.hi
            } else {
                self.lo + self.width() * (i as f64) / (n as f64)
            }
        })
    }
}

impl TryFrom<(f64, f64)> for Interval {
    type Error = Error;

    fn try_from((lo, hi): (f64, f64)) -> Result<Self> {
        Interval::new(lo, hi)
    }
}

impl From<Interval> for (f64, f64) {
    fn from(i: Interval) -> Self {
        (i.lo, i.hi)
    }
}

/// Euclidean angle in radians, normalised to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleRad(f64);

impl AngleRad {
    pub fn new(value: f64) -> Result<Self> {
        finite("angle", value)?;
        let mut v = value.rem_euclid(TAU);
        // rem_euclid can round up to exactly TAU for tiny negative inputs
        if v >= TAU {
            v = 0.0;
        }
        Ok(Self(v))
    }

    pub fn from_degrees(deg: f64) -> Result<Self> {
        Self::new(deg.to_radians())
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn cos(&self) -> f64 {
        self.0.cos()
    }

    pub fn sin(&self) -> f64 {
        self.0.sin()
    }

    /// `|cos θ| + |sin θ|`, the taxicab length of a unit Euclidean segment at this angle.
    pub fn taxicab_scale(&self) -> f64 {
        self.cos().abs() + self.sin().abs()
    }

    /// True when the angle is a multiple of π/2 (up to `tol` radians).
    pub fn is_axis_aligned(&self, tol: f64) -> bool {
        let r = self.0.rem_euclid(FRAC_PI_2);
        r <= tol || FRAC_PI_2 - r <= tol
    }
}

pub fn taxicab_dist_1d(a: f64, b: f64) -> Result<f64> {
    finite("a", a)?;
    finite("b", b)?;
    Ok((b - a).abs())
}

pub fn taxicab_dist_2d(p: Point2, q: Point2) -> Result<f64> {
    p.check()?;
    q.check()?;
    Ok((q.x - p.x).abs() + (q.y - p.y).abs())
}

pub fn taxicab_dist_3d(p: Point3, q: Point3) -> Result<f64> {
    p.check()?;
    q.check()?;
    Ok((q.x - p.x).abs() + (q.y - p.y).abs() + (q.z - p.z).abs())
}

pub fn euclidean_dist_2d(p: Point2, q: Point2) -> Result<f64> {
    p.check()?;
    q.check()?;
    Ok((q.x - p.x).hypot(q.y - p.y))
}

pub fn euclidean_dist_3d(p: Point3, q: Point3) -> Result<f64> {
    p.check()?;
    q.check()?;
    let (dx, dy, dz) = (q.x - p.x, q.y - p.y, q.z - p.z);
    Ok((dx * dx + dy * dy + dz * dz).sqrt())
}

/// Direction of the segment `p -> q` measured from the positive x-axis.
///
/// A zero-length segment has angle 0.
pub fn direction_angle(p: Point2, q: Point2) -> Result<AngleRad> {
    p.check()?;
    q.check()?;
    AngleRad::new((q.y - p.y).atan2(q.x - p.x))
}

/// Taxicab length of a segment of Euclidean length `d_e` inclined at `theta`.
pub fn taxicab_length_from_angle(d_e: f64, theta: AngleRad) -> Result<f64> {
    finite("Euclidean length", d_e)?;
    if d_e < 0.0 {
        return Err(Error::domain(format!("Euclidean length must be >= 0, got {d_e}")));
    }
    Ok(d_e * theta.taxicab_scale())
}
