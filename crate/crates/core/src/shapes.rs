//! Closed-form taxicab measures of named figures and solids.
//!
//! Every formula here has `π_t = 4` substituted. Each shape also knows its
//! generating profile so the closed forms can be checked against the
//! revolution integrals.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::functions::{
    profile_constant, profile_taxicab_circle_upper, profile_taxicab_ellipse_upper, profile_taxicab_parabola, Params,
    ProfileFunction,
};
use crate::geometry::{Interval, PI_T};
use crate::measures::{arclength_functional, surface_of_revolution, volume_of_revolution};
use crate::quadrature::{integrate, QuadratureConfig};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

fn positive(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::domain(format!("{name} must be finite and > 0, got {v}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleSpec {
    r: f64,
}

impl CircleSpec {
    pub fn new(r: f64) -> Result<Self> {
        Ok(Self { r: positive("r", r)? })
    }

    pub fn r(&self) -> f64 {
        self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereSpec {
    r: f64,
}

impl SphereSpec {
    pub fn new(r: f64) -> Result<Self> {
        Ok(Self { r: positive("r", r)? })
    }

    pub fn r(&self) -> f64 {
        self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderSpec {
    r: f64,
    h: f64,
}

impl CylinderSpec {
    pub fn new(r: f64, h: f64) -> Result<Self> {
        Ok(Self { r: positive("r", r)?, h: positive("h", h)? })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn h(&self) -> f64 {
        self.h
    }
}

/// Open-top paraboloid: focus parameter `a`, truncated at height `h >= a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParaboloidSpec {
    a: f64,
    h: f64,
}

impl ParaboloidSpec {
    pub fn new(a: f64, h: f64) -> Result<Self> {
        let a = positive("a", a)?;
        if !h.is_finite() || h < a {
            return Err(Error::domain(format!("paraboloid requires h >= a, got a = {a}, h = {h}")));
        }
        Ok(Self { a, h })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn h(&self) -> f64 {
        self.h
    }
}

/// Solid of revolution of the upper half of a two-foci taxicab ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipsoidSpec {
    a: f64,
    b: f64,
    s: f64,
}

impl EllipsoidSpec {
    pub fn new(a: f64, b: f64, s: f64) -> Result<Self> {
        // the profile constructor owns the parameter rules
        profile_taxicab_ellipse_upper(a, b, s)?;
        Ok(Self { a, b, s })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Radius `s/2 - a` of the flat end caps (zero unless octagonal).
    pub fn cap_radius(&self) -> f64 {
        0.5 * self.s - self.a
    }
}

/// `2 π_t r = 8r`.
pub fn circle_circumference(c: &CircleSpec) -> f64 {
    2.0 * PI_T * c.r
}

/// `π_t r² / 2 = 2r²`: four right isosceles triangles of legs `r`.
pub fn circle_area(c: &CircleSpec) -> f64 {
    0.5 * PI_T * c.r * c.r
}

/// `2 π_t sqrt(3) r²`.
pub fn sphere_surface(sp: &SphereSpec) -> f64 {
    2.0 * PI_T * SQRT_3 * sp.r * sp.r
}

/// `π_t r³ / 3`.
pub fn sphere_volume(sp: &SphereSpec) -> f64 {
    PI_T * sp.r.powi(3) / 3.0
}

/// `π_t r² h / 2 = 2r²h`.
pub fn cylinder_volume(cy: &CylinderSpec) -> f64 {
    0.5 * PI_T * cy.r * cy.r * cy.h
}

/// `2 π_t r h`, side wall only.
pub fn cylinder_lateral_surface(cy: &CylinderSpec) -> f64 {
    2.0 * PI_T * cy.r * cy.h
}

/// `π_t sqrt(3) a² + 2 π_t a (h - a)`: half sphere plus cylinder wall, open top.
pub fn paraboloid_surface(p: &ParaboloidSpec) -> f64 {
    PI_T * SQRT_3 * p.a * p.a + 2.0 * PI_T * p.a * (p.h - p.a)
}

/// `π_t a³ / 6 + π_t a² (h - a) / 2`.
pub fn paraboloid_volume(p: &ParaboloidSpec) -> f64 {
    PI_T * p.a.powi(3) / 6.0 + 0.5 * PI_T * p.a * p.a * (p.h - p.a)
}

/// `π_t b³ / 3 - (s - 2a)³ / 6 + π_t b² (s - 2b) / 2`.
///
/// The middle coefficient is the printed `1/6` without a `π_t`; it equals the
/// exact `(π_t / 24)(s - 2a)³` only because `π_t = 4`.
pub fn ellipsoid_volume(e: &EllipsoidSpec) -> f64 {
    let (a, b, s) = (e.a, e.b, e.s);
    PI_T * b.powi(3) / 3.0 - (s - 2.0 * a).powi(3) / 6.0 + 0.5 * PI_T * b * b * (s - 2.0 * b)
}

/// Full surface including the two flat end caps of radius `s/2 - a`:
/// `2π_t√3 b² - 2π_t√3 (s/2 - a)² + 2π_t b (s - 2b) + π_t (s/2 - a)²`.
pub fn ellipsoid_surface(e: &EllipsoidSpec) -> f64 {
    let (b, s) = (e.b, e.s);
    let c = e.cap_radius();
    2.0 * PI_T * SQRT_3 * b * b - 2.0 * PI_T * SQRT_3 * c * c + 2.0 * PI_T * b * (s - 2.0 * b) + PI_T * c * c
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShapeSpec {
    Circle(CircleSpec),
    Sphere(SphereSpec),
    Cylinder(CylinderSpec),
    Paraboloid(ParaboloidSpec),
    Ellipsoid(EllipsoidSpec),
}

impl ShapeSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ShapeSpec::Circle(_) => "circle",
            ShapeSpec::Sphere(_) => "sphere",
            ShapeSpec::Cylinder(_) => "cylinder",
            ShapeSpec::Paraboloid(_) => "paraboloid",
            ShapeSpec::Ellipsoid(_) => "ellipsoid",
        }
    }

    /// Profile whose revolution (or, for the circle, whose mirror image)
    /// generates the shape.
    pub fn profile(&self) -> Result<ProfileFunction> {
        match *self {
            ShapeSpec::Circle(CircleSpec { r }) | ShapeSpec::Sphere(SphereSpec { r }) => {
                profile_taxicab_circle_upper(r)
            }
            ShapeSpec::Cylinder(cy) => profile_constant(cy.r, Interval::new(0.0, cy.h)?),
            ShapeSpec::Paraboloid(p) => profile_taxicab_parabola(p.a, p.h),
            ShapeSpec::Ellipsoid(e) => profile_taxicab_ellipse_upper(e.a, e.b, e.s),
        }
    }

    /// Area of the flat discs closing the solid, not swept by the profile.
    pub fn cap_area(&self) -> f64 {
        match *self {
            ShapeSpec::Ellipsoid(e) => {
                let c = e.cap_radius();
                2.0 * 0.5 * PI_T * c * c
            }
            _ => 0.0,
        }
    }

    pub fn circumference(&self) -> Option<f64> {
        match self {
            ShapeSpec::Circle(c) => Some(circle_circumference(c)),
            _ => None,
        }
    }

    pub fn area(&self) -> Option<f64> {
        match self {
            ShapeSpec::Circle(c) => Some(circle_area(c)),
            _ => None,
        }
    }

    pub fn surface(&self) -> Option<f64> {
        match self {
            ShapeSpec::Circle(_) => None,
            ShapeSpec::Sphere(s) => Some(sphere_surface(s)),
            ShapeSpec::Cylinder(c) => Some(cylinder_lateral_surface(c)),
            ShapeSpec::Paraboloid(p) => Some(paraboloid_surface(p)),
            ShapeSpec::Ellipsoid(e) => Some(ellipsoid_surface(e)),
        }
    }

    pub fn volume(&self) -> Option<f64> {
        match self {
            ShapeSpec::Circle(_) => None,
            ShapeSpec::Sphere(s) => Some(sphere_volume(s)),
            ShapeSpec::Cylinder(c) => Some(cylinder_volume(c)),
            ShapeSpec::Paraboloid(p) => Some(paraboloid_volume(p)),
            ShapeSpec::Ellipsoid(e) => Some(ellipsoid_volume(e)),
        }
    }

    /// Circumference as twice the arc length of the upper half.
    pub fn circumference_by_quadrature(&self, cfg: &QuadratureConfig) -> Result<Option<f64>> {
        match self {
            ShapeSpec::Circle(_) => {
                let f = self.profile()?;
                Ok(Some(2.0 * arclength_functional(&f, f.domain(), cfg)?))
            }
            _ => Ok(None),
        }
    }

    /// Area as twice the area under the upper half.
    pub fn area_by_quadrature(&self, cfg: &QuadratureConfig) -> Result<Option<f64>> {
        match self {
            ShapeSpec::Circle(_) => {
                let f = self.profile()?;
                let half = integrate(|x| f.eval(x), f.domain(), f.breakpoints(), cfg)?.value;
                Ok(Some(2.0 * half))
            }
            _ => Ok(None),
        }
    }

    pub fn surface_by_quadrature(&self, cfg: &QuadratureConfig) -> Result<Option<f64>> {
        if let ShapeSpec::Circle(_) = self {
            return Ok(None);
        }
        let f = self.profile()?;
        Ok(Some(surface_of_revolution(&f, f.domain(), cfg)? + self.cap_area()))
    }

    pub fn volume_by_quadrature(&self, cfg: &QuadratureConfig) -> Result<Option<f64>> {
        if let ShapeSpec::Circle(_) = self {
            return Ok(None);
        }
        let f = self.profile()?;
        Ok(Some(volume_of_revolution(&f, f.domain(), cfg)?))
    }
}

/// Parses `{"shape": <name>, "params": {...}}`.
pub fn parse_shape_spec(text: &str) -> Result<ShapeSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Spec(format!("shape JSON: {e}")))?;
    shape_from_json(&value)
}

pub fn shape_from_json(value: &Value) -> Result<ShapeSpec> {
    let obj = value.as_object().ok_or_else(|| Error::Spec("shape spec must be a JSON object".into()))?;
    if let Some(k) = obj.keys().find(|k| *k != "shape" && *k != "params") {
        return Err(Error::Spec(format!("unknown key {k:?} in shape spec")));
    }
    let name = obj
        .get("shape")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Spec("shape spec needs a \"shape\" name".into()))?;
    let empty = Map::new();
    let map = match obj.get("params") {
        None => &empty,
        Some(p) => p.as_object().ok_or_else(|| Error::Spec("\"params\" must be an object".into()))?,
    };
    let p = Params { name, map };
    Ok(match name {
        "circle" => {
            p.only(&["r"])?;
            ShapeSpec::Circle(CircleSpec::new(p.get("r")?)?)
        }
        "sphere" => {
            p.only(&["r"])?;
            ShapeSpec::Sphere(SphereSpec::new(p.get("r")?)?)
        }
        "cylinder" => {
            p.only(&["r", "h"])?;
            ShapeSpec::Cylinder(CylinderSpec::new(p.get("r")?, p.get("h")?)?)
        }
        "paraboloid" => {
            p.only(&["a", "h"])?;
            ShapeSpec::Paraboloid(ParaboloidSpec::new(p.get("a")?, p.get("h")?)?)
        }
        "ellipsoid" => {
            p.only(&["a", "b", "s"])?;
            ShapeSpec::Ellipsoid(EllipsoidSpec::new(p.get("a")?, p.get("b")?, p.get("s")?)?)
        }
        other => return Err(Error::Spec(format!("unknown shape {other:?}"))),
    })
}
