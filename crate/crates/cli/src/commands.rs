//! The `measure` and `table` subcommands.

use serde_json::{json, Value};
use taxicab_core::measures::area_scaling_factor;
use taxicab_core::oracles::{
    convergence_table, disk_volume_oracle, frustum_surface_oracle, polyline_arclength_oracle, ConvergenceRow,
    MeasureKind,
};
use taxicab_core::{functions, shapes, ProfileFunction, QuadratureConfig, RotationAngles, ShapeSpec};

use crate::error::{CliError, CliResult};
use crate::format;
use crate::report::{MeasureReport, Quantity};

/// Environment variable overriding the default quadrature `abs_tol`.
pub const QUAD_TOL_ENV: &str = "TAXI_QUAD_TOL";

/// Default quadrature settings, with `abs_tol` taken from `TAXI_QUAD_TOL`
/// when it is set.
pub fn quadrature_config() -> CliResult<QuadratureConfig> {
    quadrature_config_from(std::env::var(QUAD_TOL_ENV).ok().as_deref())
}

pub fn quadrature_config_from(raw: Option<&str>) -> CliResult<QuadratureConfig> {
    let mut cfg = QuadratureConfig::default();
    if let Some(raw) = raw {
        let tol: f64 = raw
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("{QUAD_TOL_ENV}: not a number: {raw:?}")))?;
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Parse(format!("{QUAD_TOL_ENV} must be a positive number, got {raw:?}")));
        }
        cfg.abs_tol = tol;
    }
    Ok(cfg)
}

/// What a measurement is taken of.
#[derive(Debug, Clone)]
pub enum Subject {
    Shape(ShapeSpec),
    Profile(ProfileFunction),
    Angles { alpha: f64, beta: f64, degrees: bool },
}

fn parse_json(text: &str, what: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: invalid JSON: {e}")))
}

/// Parses a `--shape` argument, returning the shape and its echoed JSON.
pub fn parse_shape(text: &str) -> CliResult<(ShapeSpec, Value)> {
    let v = parse_json(text, "--shape")?;
    Ok((shapes::shape_from_json(&v)?, v))
}

/// Parses a `--profile` argument, returning the profile and its echoed JSON.
pub fn parse_profile(text: &str) -> CliResult<(ProfileFunction, Value)> {
    let v = parse_json(text, "--profile")?;
    Ok((functions::profile_from_json(&v)?, v))
}

fn not_applicable(q: Quantity, what: &str) -> CliError {
    CliError::Parse(format!("quantity {} does not apply to {what}", q.as_str()))
}

fn check_oracle_n(n: usize) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Parse("--oracle must be at least 1".into()));
    }
    Ok(())
}

pub fn measure(
    quantity: Quantity,
    subject: &Subject,
    params: Value,
    oracle_n: Option<usize>,
    cfg: &QuadratureConfig,
) -> CliResult<MeasureReport> {
    if let Some(n) = oracle_n {
        check_oracle_n(n)?;
    }
    match subject {
        Subject::Angles { alpha, beta, degrees } => {
            if quantity != Quantity::AreaScale {
                return Err(not_applicable(quantity, "a pair of angles"));
            }
            if oracle_n.is_some() {
                return Err(CliError::Parse("area_scale has no oracle".into()));
            }
            let (a, b) = if *degrees { (alpha.to_radians(), beta.to_radians()) } else { (*alpha, *beta) };
            let factor = area_scaling_factor(&RotationAngles::new(a, b)?);
            Ok(MeasureReport::new(quantity, Some(factor), None, None, params))
        }
        Subject::Shape(shape) => measure_shape(quantity, shape, params, oracle_n, cfg),
        Subject::Profile(f) => {
            let kind = match quantity {
                Quantity::Arclength => MeasureKind::Arclength,
                Quantity::Surface => MeasureKind::Surface,
                Quantity::Volume => MeasureKind::Volume,
                _ => return Err(not_applicable(quantity, "a profile")),
            };
            let quad = kind.reference(f, f.domain(), cfg)?;
            let oracle = oracle_n.map(|n| kind.oracle(f, f.domain(), n, Default::default())).transpose()?;
            Ok(MeasureReport::new(quantity, None, Some(quad), oracle, params))
        }
    }
}

fn measure_shape(
    quantity: Quantity,
    shape: &ShapeSpec,
    params: Value,
    oracle_n: Option<usize>,
    cfg: &QuadratureConfig,
) -> CliResult<MeasureReport> {
    let (analytic, quad) = match quantity {
        Quantity::Circumference => (shape.circumference(), shape.circumference_by_quadrature(cfg)?),
        Quantity::Area => (shape.area(), shape.area_by_quadrature(cfg)?),
        Quantity::Surface => (shape.surface(), shape.surface_by_quadrature(cfg)?),
        Quantity::Volume => (shape.volume(), shape.volume_by_quadrature(cfg)?),
        Quantity::Arclength | Quantity::AreaScale => (None, None),
    };
    let Some(analytic) = analytic else {
        return Err(not_applicable(quantity, &format!("a {}", shape.name())));
    };
    let oracle = match oracle_n {
        None => None,
        Some(n) => {
            let f = shape.profile()?;
            let d = f.domain();
            Some(match quantity {
                Quantity::Circumference => 2.0 * polyline_arclength_oracle(&f, d, n)?,
                Quantity::Surface => frustum_surface_oracle(&f, d, n)? + shape.cap_area(),
                Quantity::Volume => disk_volume_oracle(&f, d, n)?,
                _ => return Err(CliError::Parse(format!("{} has no oracle", quantity.as_str()))),
            })
        }
    };
    Ok(MeasureReport::new(quantity, Some(analytic), quad, oracle, params))
}

/// Params echo for an `area_scale` measurement.
pub fn angle_params(alpha: f64, beta: f64, degrees: bool) -> Value {
    json!({ "alpha": alpha, "beta": beta, "degrees": degrees })
}

/// Parses a comma-separated list of positive cell counts.
pub fn parse_ns(text: &str) -> CliResult<Vec<usize>> {
    let ns = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| CliError::Parse(format!("--ns: not a positive integer: {s:?}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Parse("--ns must be strictly ascending".into()));
    }
    Ok(ns)
}

pub const TABLE_HEADER: &str = "n,oracle,reference,abs_error";

pub fn table(quantity: Quantity, f: &ProfileFunction, ns: &[usize], cfg: &QuadratureConfig) -> CliResult<Vec<ConvergenceRow>> {
    let kind = match quantity {
        Quantity::Arclength => MeasureKind::Arclength,
        Quantity::Surface => MeasureKind::Surface,
        Quantity::Volume => MeasureKind::Volume,
        _ => return Err(not_applicable(quantity, "a convergence table")),
    };
    Ok(convergence_table(kind, f, f.domain(), ns, cfg)?)
}

pub fn table_csv_row(row: &ConvergenceRow) -> String {
    format!(
        "{},{},{},{}",
        row.n,
        format::value(row.oracle_value),
        format::value(row.reference_value),
        format::error(row.abs_error)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn sphere_volume_report() {
        let (s, v) = parse_shape(r#"{"shape":"sphere","params":{"r":1}}"#).unwrap();
        let rep = measure(Quantity::Volume, &Subject::Shape(s), v, Some(100_000), &cfg()).unwrap();
        assert_eq!(format::value(rep.analytic.unwrap()), "1.3333333333");
        assert!(rep.abs_err_quad.unwrap() < 1e-8);
        assert!(rep.abs_err_oracle.unwrap() < 1e-4);
    }

    #[test]
    fn quarter_circle_profile_report() {
        let (f, v) = parse_profile(r#"{"catalog":"euclidean_circle_quadrant","params":{"r":1}}"#).unwrap();
        let rep = measure(Quantity::Arclength, &Subject::Profile(f), v, None, &cfg()).unwrap();
        assert!(rep.analytic.is_none());
        assert!((rep.quadrature.unwrap() - 2.0).abs() < 1e-8);
        assert!(rep.abs_err_quad.is_none() && rep.abs_err_oracle.is_none());
    }

    #[test]
    fn area_scale_in_degrees() {
        let s = Subject::Angles { alpha: 45.0, beta: 45.0, degrees: true };
        let rep = measure(Quantity::AreaScale, &s, angle_params(45.0, 45.0, true), None, &cfg()).unwrap();
        assert!((rep.analytic.unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn mismatched_quantity_is_a_parse_error() {
        let (s, v) = parse_shape(r#"{"shape":"circle","params":{"r":1}}"#).unwrap();
        let e = measure(Quantity::Volume, &Subject::Shape(s), v, None, &cfg()).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn circle_circumference_oracle() {
        let (s, v) = parse_shape(r#"{"shape":"circle","params":{"r":2}}"#).unwrap();
        let rep = measure(Quantity::Circumference, &Subject::Shape(s), v, Some(7), &cfg()).unwrap();
        assert!((rep.oracle.unwrap() - 16.0).abs() < 1e-12);
    }

    #[test]
    fn error_classes() {
        assert_eq!(parse_shape("{").unwrap_err().exit_code(), 2);
        assert_eq!(parse_shape(r#"{"shape":"sphere","params":{"r":-1}}"#).unwrap_err().exit_code(), 3);
        assert_eq!(quadrature_config_from(Some("abc")).unwrap_err().exit_code(), 2);
        assert_eq!(quadrature_config_from(Some("1e-12")).unwrap().abs_tol, 1e-12);
        assert_eq!(parse_ns("10,5").unwrap_err().exit_code(), 2);
        assert_eq!(parse_ns("10, 100,1000").unwrap(), vec![10, 100, 1000]);
    }

    #[test]
    fn volume_table_is_second_order() {
        let f = functions::profile_taxicab_circle_upper(1.0).unwrap();
        let rows = table(Quantity::Volume, &f, &[4, 16, 64], &cfg()).unwrap();
        for w in rows.windows(2) {
            let ratio = w[0].abs_error / w[1].abs_error;
            assert!((ratio - 16.0).abs() < 0.5, "ratio {ratio}");
        }
    }
}
