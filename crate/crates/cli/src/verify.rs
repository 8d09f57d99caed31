//! Built-in cross-checks of closed forms, quadrature and oracles.

use std::thread;

use clap::ValueEnum;
use taxicab_core::functions::{
    profile_euclidean_circle_quadrant, profile_euclidean_parabola_quadrant, profile_linear,
    profile_taxicab_circle_upper, ProfileFunction,
};
use taxicab_core::oracles::{disk_volume_oracle, frustum_surface_oracle, polyline_arclength_oracle};
use taxicab_core::{measures, CylinderSpec, EllipsoidSpec, Interval, ParaboloidSpec, QuadratureConfig};
use taxicab_core::{ShapeSpec, SphereSpec};

use crate::error::CliResult;
use crate::format;

/// Default bound on `|analytic - quadrature|`.
pub const DEFAULT_QUAD_TOL: f64 = 1e-8;

/// Polygonal lengths of monotone pieces telescope, so only rounding remains.
pub const ARCLENGTH_ORACLE_TOL: f64 = 1e-9;
/// Frustum sums are exact for the piecewise-linear catalog profiles.
pub const SURFACE_ORACLE_TOL: f64 = 1e-9;
/// Midpoint disk sums at n = 1e5 are second order: error `~ 4r³ / (3n²)`.
pub const VOLUME_ORACLE_TOL: f64 = 1e-6;
/// Ellipsoid volumes use n = 1e6 disks; surfaces use exact frustum sums.
pub const ELLIPSOID_VOLUME_ORACLE_TOL: f64 = 1e-5;
pub const ELLIPSOID_SURFACE_ORACLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Arclength,
    Surface,
    Volume,
    Ellipsoid,
}

impl Suite {
    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Arclength => "arclength",
            Suite::Surface => "surface",
            Suite::Volume => "volume",
            Suite::Ellipsoid => "ellipsoid",
        }
    }

    pub const ALL: [Suite; 4] = [Suite::Arclength, Suite::Surface, Suite::Volume, Suite::Ellipsoid];
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyRow {
    pub suite: Suite,
    pub case: String,
    pub analytic: f64,
    pub quadrature: f64,
    pub oracle_n: usize,
    pub oracle: f64,
    pub abs_err_quad: f64,
    pub abs_err_oracle: f64,
    pub pass: bool,
}

impl VerifyRow {
    pub const CSV_HEADER: &'static str =
        "suite,case,analytic,quadrature,oracle_n,oracle,abs_err_quad,abs_err_oracle,pass";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.suite.as_str(),
            self.case,
            format::value(self.analytic),
            format::value(self.quadrature),
            self.oracle_n,
            format::value(self.oracle),
            format::error(self.abs_err_quad),
            format::error(self.abs_err_oracle),
            self.pass
        )
    }
}

type Measure = Box<dyn Fn(&QuadratureConfig) -> taxicab_core::Result<f64> + Send + Sync>;
type Oracle = Box<dyn Fn(usize) -> taxicab_core::Result<f64> + Send + Sync>;

struct Case {
    suite: Suite,
    name: String,
    analytic: f64,
    quadrature: Measure,
    oracle_n: usize,
    oracle: Oracle,
    oracle_tol: f64,
}

fn iv(lo: f64, hi: f64) -> Interval {
    Interval::new(lo, hi).expect("static interval")
}

fn arclength_case(name: String, analytic: f64, f: ProfileFunction, n: usize) -> Case {
    let (fq, fo) = (f.clone(), f);
    Case {
        suite: Suite::Arclength,
        name,
        analytic,
        quadrature: Box::new(move |cfg| measures::arclength_functional(&fq, fq.domain(), cfg)),
        oracle_n: n,
        oracle: Box::new(move |n| polyline_arclength_oracle(&fo, fo.domain(), n)),
        oracle_tol: ARCLENGTH_ORACLE_TOL,
    }
}

fn surface_case(suite: Suite, name: String, shape: ShapeSpec, n: usize, oracle_tol: f64) -> Case {
    let analytic = shape.surface().expect("solid");
    Case {
        suite,
        name,
        analytic,
        quadrature: Box::new(move |cfg| Ok(shape.surface_by_quadrature(cfg)?.expect("solid"))),
        oracle_n: n,
        oracle: Box::new(move |n| {
            let f = shape.profile()?;
            Ok(frustum_surface_oracle(&f, f.domain(), n)? + shape.cap_area())
        }),
        oracle_tol,
    }
}

fn volume_case(suite: Suite, name: String, shape: ShapeSpec, n: usize, oracle_tol: f64) -> Case {
    let analytic = shape.volume().expect("solid");
    Case {
        suite,
        name,
        analytic,
        quadrature: Box::new(move |cfg| Ok(shape.volume_by_quadrature(cfg)?.expect("solid"))),
        oracle_n: n,
        oracle: Box::new(move |n| {
            let f = shape.profile()?;
            disk_volume_oracle(&f, f.domain(), n)
        }),
        oracle_tol,
    }
}

fn label(x: f64) -> String {
    format!("{x}")
}

fn cases(suite: Suite) -> CliResult<Vec<Case>> {
    let mut out = Vec::new();
    match suite {
        Suite::Arclength => {
            for r in [1.0, 2.5] {
                let tq = profile_linear(-1.0, r, iv(0.0, r))?;
                out.push(arclength_case(format!("taxicab_quadrant_r{}", label(r)), 2.0 * r, tq, 1000));
                let eq = profile_euclidean_circle_quadrant(r)?;
                out.push(arclength_case(format!("euclidean_quadrant_r{}", label(r)), 2.0 * r, eq, 10_000));
                let pq = profile_euclidean_parabola_quadrant(r)?;
                out.push(arclength_case(format!("parabola_quadrant_r{}", label(r)), 2.0 * r, pq, 10_000));
            }
            // odd n: the apex is only in the partition through augmentation
            let half = profile_taxicab_circle_upper(1.0)?;
            out.push(arclength_case("taxicab_half_circle_r1".into(), 4.0, half, 1001));
        }
        Suite::Surface => {
            for r in [0.5, 1.0, 2.0] {
                let s = ShapeSpec::Sphere(SphereSpec::new(r)?);
                out.push(surface_case(suite, format!("sphere_r{}", label(r)), s, 2, SURFACE_ORACLE_TOL));
            }
            let cyl = ShapeSpec::Cylinder(CylinderSpec::new(1.0, 2.0)?);
            out.push(surface_case(suite, "cylinder_r1_h2".into(), cyl, 5, SURFACE_ORACLE_TOL));
            for (a, h) in [(1.0, 3.0), (1.0, 1.0), (2.0, 5.0)] {
                let p = ShapeSpec::Paraboloid(ParaboloidSpec::new(a, h)?);
                let name = format!("paraboloid_a{}_h{}", label(a), label(h));
                out.push(surface_case(suite, name, p, 64, SURFACE_ORACLE_TOL));
            }
        }
        Suite::Volume => {
            for r in [0.5, 1.0, 2.0] {
                let s = ShapeSpec::Sphere(SphereSpec::new(r)?);
                out.push(volume_case(suite, format!("sphere_r{}", label(r)), s, 100_000, VOLUME_ORACLE_TOL));
            }
            for (r, h) in [(1.0, 1.0), (1.0, 2.0), (2.0, 3.0), (0.5, 4.0)] {
                let c = ShapeSpec::Cylinder(CylinderSpec::new(r, h)?);
                let name = format!("cylinder_r{}_h{}", label(r), label(h));
                out.push(volume_case(suite, name, c, 1000, VOLUME_ORACLE_TOL));
            }
            for (a, h) in [(1.0, 3.0), (1.0, 1.0), (2.0, 5.0)] {
                let p = ShapeSpec::Paraboloid(ParaboloidSpec::new(a, h)?);
                let name = format!("paraboloid_a{}_h{}", label(a), label(h));
                out.push(volume_case(suite, name, p, 100_000, VOLUME_ORACLE_TOL));
            }
        }
        Suite::Ellipsoid => {
            for (kind, a, b, s) in [("circle", 1.0, 1.0, 2.0), ("hexagon", 2.0, 1.0, 4.0), ("octagon", 2.0, 1.5, 5.0)] {
                let e = ShapeSpec::Ellipsoid(EllipsoidSpec::new(a, b, s)?);
                let stem = format!("{kind}_a{}_b{}_s{}", label(a), label(b), label(s));
                out.push(volume_case(suite, format!("{stem}_volume"), e, 1_000_000, ELLIPSOID_VOLUME_ORACLE_TOL));
                out.push(surface_case(suite, format!("{stem}_surface"), e, 1000, ELLIPSOID_SURFACE_ORACLE_TOL));
            }
        }
    }
    Ok(out)
}

fn run_case(case: &Case, cfg: &QuadratureConfig, quad_tol: f64) -> CliResult<VerifyRow> {
    let quadrature = (case.quadrature)(cfg)?;
    let oracle = (case.oracle)(case.oracle_n)?;
    let abs_err_quad = (case.analytic - quadrature).abs();
    let abs_err_oracle = (case.analytic - oracle).abs();
    Ok(VerifyRow {
        suite: case.suite,
        case: case.name.clone(),
        analytic: case.analytic,
        quadrature,
        oracle_n: case.oracle_n,
        oracle,
        abs_err_quad,
        abs_err_oracle,
        pass: abs_err_quad <= quad_tol && abs_err_oracle <= case.oracle_tol,
    })
}

/// Runs the selected suites (all when `suite` is `None`), evaluating cases
/// on separate threads. Rows come back sorted by suite, then case name.
pub fn run(suite: Option<Suite>, quad_tol: f64, cfg: &QuadratureConfig) -> CliResult<Vec<VerifyRow>> {
    let suites: Vec<Suite> = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
    let mut all = Vec::new();
    for s in suites {
        all.extend(cases(s)?);
    }
    let results: Vec<CliResult<VerifyRow>> = thread::scope(|scope| {
        let handles: Vec<_> = all.iter().map(|c| scope.spawn(move || run_case(c, cfg, quad_tol))).collect();
        handles.into_iter().map(|h| h.join().expect("verify worker panicked")).collect()
    });
    let mut rows = results.into_iter().collect::<CliResult<Vec<_>>>()?;
    rows.sort_by(|a, b| a.suite.cmp(&b.suite).then_with(|| a.case.cmp(&b.case)));
    Ok(rows)
}
