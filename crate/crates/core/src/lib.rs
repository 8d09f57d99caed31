//! Taxicab (L1) measures of curves, surfaces and solids of revolution.
//!
//! The crate is organised bottom-up:
//!
//! - [`geometry`]: points, intervals, angles and the L1 metric.
//! - [`functions`]: profile curves with exact derivatives and declared breakpoints.
//! - [`quadrature`]: adaptive Simpson integration that tolerates `|f'|` kinks and
//!   integrable endpoint singularities.
//! - [`measures`]: arc length, area scaling, and surface area / volume of revolution.
//! - [`shapes`]: closed forms for the taxicab circle, sphere, cylinder, paraboloid
//!   and ellipsoid.
//! - [`oracles`]: brute-force discretisations used to cross-check the integrals.

pub mod error;
pub mod functions;
pub mod geometry;
pub mod measures;
pub mod oracles;
pub mod quadrature;
pub mod shapes;

pub use error::{Error, Result};
pub use functions::{ParametricCurve2, ParametricCurve3, PiecewiseLinearProfile, ProfileFunction};
pub use geometry::{AngleRad, Interval, Point2, Point3, PI_T};

pub use measures::RotationAngles;
pub use quadrature::{QuadratureConfig, QuadratureResult};
pub use shapes::{CircleSpec, CylinderSpec, EllipsoidSpec, ParaboloidSpec, ShapeSpec, SphereSpec};

