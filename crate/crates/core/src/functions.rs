//! Profile curves `f(x)` with exact derivatives and declared breakpoints.
//!
//! A profile is the curve whose arc length is measured, or the radius function
//! revolved about the integration axis. Breakpoints mark where `f` changes
//! formula or loses differentiability; integrators and oracles split there.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::geometry::{Interval, Point2};

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

fn validate_breakpoints(domain: &Interval, mut breakpoints: Vec<f64>) -> Result<Vec<f64>> {
    breakpoints.sort_by(f64::total_cmp);
    for w in breakpoints.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::domain(format!("duplicate breakpoint {}", w[1])));
        }
    }
    if let Some(&bad) = breakpoints.iter().find(|&&b| !domain.contains_interior(b)) {
        return Err(Error::domain(format!(
            "breakpoint {bad} is not strictly inside [{}, {}]",
            domain.lo(),
            domain.hi()
        )));
    }
    Ok(breakpoints)
}

/// Keeps only the candidates strictly inside `domain`, sorted and de-duplicated.
fn interior_points(domain: &Interval, candidates: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut v: Vec<f64> = candidates.into_iter().filter(|&x| domain.contains_interior(x)).collect();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

#[derive(Clone)]
pub struct ProfileFunction {
    label: String,
    domain: Interval,
    breakpoints: Vec<f64>,
    singular_endpoints: Vec<f64>,
    value: RealFn,
    derivative: RealFn,
}

impl fmt::Debug for ProfileFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProfileFunction")
            .field("label", &self.label)
            .field("domain", &self.domain)
            .field("breakpoints", &self.breakpoints)
            .field("singular_endpoints", &self.singular_endpoints)
            .finish_non_exhaustive()
    }
}

impl ProfileFunction {
    pub fn new<F, D>(
        label: impl Into<String>,
        domain: Interval,
        breakpoints: Vec<f64>,
        value: F,
        derivative: D,
    ) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let breakpoints = validate_breakpoints(&domain, breakpoints)?;
        Ok(Self {
            label: label.into(),
            domain,
            breakpoints,
            singular_endpoints: Vec::new(),
            value: Arc::new(value),
            derivative: Arc::new(derivative),
        })
    }

    /// Marks a domain endpoint where `f'` is unbounded but `|f'|` stays integrable.
    pub fn with_singular_endpoint(mut self, x: f64) -> Result<Self> {
        if x != self.domain.lo() && x != self.domain.hi() {
            return Err(Error::domain(format!("{x} is not an endpoint of the profile domain")));
        }
        self.singular_endpoints.push(x);
        Ok(self)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn singular_endpoints(&self) -> &[f64] {
        &self.singular_endpoints
    }

    /// Breakpoints falling strictly inside `within`.
    pub fn breakpoints_in(&self, within: &Interval) -> Vec<f64> {
        interior_points(within, self.breakpoints.iter().copied())
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.value)(x)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        (self.derivative)(x)
    }

    pub(crate) fn check_subdomain(&self, domain: &Interval) -> Result<()> {
        if self.domain.contains_interval(domain) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "[{}, {}] is not inside the domain [{}, {}] of {}",
                domain.lo(),
                domain.hi(),
                self.domain.lo(),
                self.domain.hi(),
                self.label
            )))
        }
    }

    /// Compares `f'` with a central difference of `f` at `samples` random
    /// points away from endpoints and breakpoints.
    ///
    /// The step shrinks with the distance to the nearest special point so the
    /// check stays meaningful next to an endpoint singularity.
    pub fn check_derivative(&self, samples: usize, seed: u64) -> Result<()> {
        let width = self.domain.width();
        if width == 0.0 {
            return Ok(());
        }
        let specials: Vec<f64> = std::iter::once(self.domain.lo())
            .chain(self.breakpoints.iter().copied())
            .chain(std::iter::once(self.domain.hi()))
            .collect();
        let guard = 1e-3 * width;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checked = 0;
        let mut attempts = 0;
        while checked < samples && attempts < samples * 100 {
            attempts += 1;
            let x = rng.gen_range(self.domain.lo()..self.domain.hi());
            let dist = specials.iter().map(|s| (x - s).abs()).fold(f64::INFINITY, f64::min);
            if dist < guard {
                continue;
            }
            checked += 1;
            let h = 1e-3 * dist;
            let fd = (self.eval(x + h) - self.eval(x - h)) / (2.0 * h);
            let exact = self.derivative(x);
            let tol = f64::max(1e-6, 1e-6 * exact.abs());
            if !exact.is_finite() || (fd - exact).abs() > tol {
                return Err(Error::domain(format!(
                    "{}: derivative {exact} disagrees with finite difference {fd} at x = {x}",
                    self.label
                )));
            }
        }
        Ok(())
    }

    /// Checks `f` is finite on an `n`-point grid plus the breakpoints.
    pub fn check_finite(&self, n: usize) -> Result<()> {
        let grid = self.domain.uniform_grid(n).chain(self.breakpoints.iter().copied());
        for x in grid {
            let v = self.eval(x);
            if !v.is_finite() {
                return Err(Error::domain(format!("{}: f({x}) = {v} is not finite", self.label)));
            }
        }
        Ok(())
    }
}

/// `f(x) = slope * x + intercept` on `domain`.
pub fn profile_linear(slope: f64, intercept: f64, domain: Interval) -> Result<ProfileFunction> {
    if !slope.is_finite() || !intercept.is_finite() {
        return Err(Error::domain("linear profile coefficients must be finite"));
    }
    ProfileFunction::new(
        format!("linear({slope}, {intercept})"),
        domain,
        Vec::new(),
        move |x| slope * x + intercept,
        move |_| slope,
    )
}

pub fn profile_constant(c: f64, domain: Interval) -> Result<ProfileFunction> {
    profile_linear(0.0, c, domain)
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::domain(format!("{name} must be finite and > 0, got {v}")))
    }
}

/// Upper-right quarter of the Euclidean circle, `sqrt(r² - x²)` on `[0, r]`.
///
/// `f'` is unbounded at `x = r`; that endpoint is flagged as singular.
pub fn profile_euclidean_circle_quadrant(r: f64) -> Result<ProfileFunction> {
    let r = positive("r", r)?;
    ProfileFunction::new(
        format!("euclidean_circle_quadrant(r={r})"),
        Interval::new(0.0, r)?,
        Vec::new(),
        move |x| ((r - x) * (r + x)).max(0.0).sqrt(),
        move |x| -x / ((r - x) * (r + x)).sqrt(),
    )?
    .with_singular_endpoint(r)
}

/// `-x²/r + r` on `[0, r]`.
pub fn profile_euclidean_parabola_quadrant(r: f64) -> Result<ProfileFunction> {
    let r = positive("r", r)?;
    ProfileFunction::new(
        format!("euclidean_parabola_quadrant(r={r})"),
        Interval::new(0.0, r)?,
        Vec::new(),
        move |x| r - x * x / r,
        move |x| -2.0 * x / r,
    )
}

/// Upper half of the taxicab circle of radius `r` about the origin.
pub fn profile_taxicab_circle_upper(r: f64) -> Result<ProfileFunction> {
    let r = positive("r", r)?;
    ProfileFunction::new(
        format!("taxicab_circle_upper(r={r})"),
        Interval::new(-r, r)?,
        vec![0.0],
        move |x| if x <= 0.0 { x + r } else { -x + r },
        move |x| if x <= 0.0 { 1.0 } else { -1.0 },
    )
}

/// Half of the horizontally parallel taxicab parabola with focus `(0, a)`,
/// truncated at height `h`. The independent variable is the height `y`.
pub fn profile_taxicab_parabola(a: f64, h: f64) -> Result<ProfileFunction> {
    let a = positive("a", a)?;
    if !h.is_finite() || a > h {
        return Err(Error::domain(format!("taxicab parabola requires 0 < a <= h, got a = {a}, h = {h}")));
    }
    let domain = Interval::new(0.0, h)?;
    ProfileFunction::new(
        format!("taxicab_parabola(a={a}, h={h})"),
        domain,
        interior_points(&domain, [a]),
        move |y| if y <= a { y } else { a },
        move |y| if y <= a { 1.0 } else { 0.0 },
    )
}

/// Upper half of the two-foci taxicab ellipse with semi-axes `a >= b` and
/// focal distance sum `s`.
///
/// Covers the circle (`s = 2a`, `a = b`), hexagon (`s = 2a`, `a > b`) and
/// octagon (`s > 2a`) cases. Requires `2a <= s <= 2(a + b)` so the three
/// branches stay ordered and `f >= 0`.
pub fn profile_taxicab_ellipse_upper(a: f64, b: f64, s: f64) -> Result<ProfileFunction> {
    let b = positive("b", b)?;
    let a = positive("a", a)?;
    if !s.is_finite() {
        return Err(Error::domain(format!("s must be finite, got {s}")));
    }
    if a < b {
        return Err(Error::domain(format!("ellipse requires a >= b, got a = {a}, b = {b}")));
    }
    if s < 2.0 * a {
        return Err(Error::domain(format!("ellipse requires 2a <= s, got a = {a}, s = {s}")));
    }
    if s > 2.0 * (a + b) {
        return Err(Error::domain(format!(
            "ellipse requires s <= 2(a + b), got a = {a}, b = {b}, s = {s}"
        )));
    }
    let half = 0.5 * s;
    let left = b - half;
    let right = half - b;
    let domain = Interval::new(-a, a)?;
    ProfileFunction::new(
        format!("taxicab_ellipse_upper(a={a}, b={b}, s={s})"),
        domain,
        interior_points(&domain, [left, right]),
        move |x| {
            if x < left {
                x + half
            } else if x < right {
                b
            } else {
                half - x
            }
        },
        move |x| {
            if x < left {
                1.0
            } else if x < right {
                0.0
            } else {
                -1.0
            }
        },
    )
}

/// Polygonal profile through vertices with strictly increasing x.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinearProfile {
    vertices: Vec<Point2>,
}

impl PiecewiseLinearProfile {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::domain("piecewise-linear profile needs at least 2 vertices"));
        }
        if let Some(p) = vertices.iter().find(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::domain(format!("vertex ({}, {}) is not finite", p.x, p.y)));
        }
        if let Some(w) = vertices.windows(2).find(|w| w[0].x >= w[1].x) {
            return Err(Error::domain(format!(
                "vertex x-coordinates must increase strictly ({} then {})",
                w[0].x, w[1].x
            )));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn to_profile(&self) -> Result<ProfileFunction> {
        let first = self.vertices[0].x;
        let last = self.vertices[self.vertices.len() - 1].x;
        let breakpoints: Vec<f64> = self.vertices[1..self.vertices.len() - 1].iter().map(|p| p.x).collect();
        let verts: Arc<[Point2]> = self.vertices.clone().into();
        let verts_d = Arc::clone(&verts);
        ProfileFunction::new(
            format!("piecewise_linear({} vertices)", verts.len()),
            Interval::new(first, last)?,
            breakpoints,
            move |x| {
                let (p, q) = segment(&verts, x);
                if x == q.x {
                    q.y
                } else {
                    p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x)
                }
            },
            move |x| {
                let (p, q) = segment(&verts_d, x);
                (q.y - p.y) / (q.x - p.x)
            },
        )
    }
}

/// Segment whose half-open x-range `[p.x, q.x)` holds `x`; the last segment is closed.
fn segment(v: &[Point2], x: f64) -> (Point2, Point2) {
    let i = v.partition_point(|p| p.x <= x).clamp(1, v.len() - 1);
    (v[i - 1], v[i])
}

/// One coordinate of a parametric curve with its exact derivative.
#[derive(Clone)]
pub struct Component {
    pub value: RealFn,
    pub derivative: RealFn,
}

impl Component {
    pub fn new<F, D>(value: F, derivative: D) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self { value: Arc::new(value), derivative: Arc::new(derivative) }
    }
}

#[derive(Clone)]
pub struct ParametricCurve<const N: usize> {
    label: String,
    domain: Interval,
    breakpoints: Vec<f64>,
    components: [Component; N],
}

pub type ParametricCurve2 = ParametricCurve<2>;
pub type ParametricCurve3 = ParametricCurve<3>;

impl<const N: usize> fmt::Debug for ParametricCurve<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParametricCurve")
            .field("label", &self.label)
            .field("dim", &N)
            .field("domain", &self.domain)
            .field("breakpoints", &self.breakpoints)
            .finish_non_exhaustive()
    }
}

impl<const N: usize> ParametricCurve<N> {
    pub fn new(
        label: impl Into<String>,
        domain: Interval,
        breakpoints: Vec<f64>,
        components: [Component; N],
    ) -> Result<Self> {
        let breakpoints = validate_breakpoints(&domain, breakpoints)?;
        Ok(Self { label: label.into(), domain, breakpoints, components })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn components(&self) -> &[Component; N] {
        &self.components
    }

    pub fn point(&self, t: f64) -> [f64; N] {
        std::array::from_fn(|i| (self.components[i].value)(t))
    }

    pub fn velocity(&self, t: f64) -> [f64; N] {
        std::array::from_fn(|i| (self.components[i].derivative)(t))
    }
}

impl ParametricCurve2 {
    /// The graph `t -> (t, f(t))` of a profile.
    pub fn graph_of(f: &ProfileFunction) -> Result<Self> {
        let (fv, fd) = (f.clone(), f.clone());
        Self::new(
            format!("graph of {}", f.label()),
            f.domain(),
            f.breakpoints().to_vec(),
            [Component::new(|t| t, |_| 1.0), Component::new(move |t| fv.eval(t), move |t| fd.derivative(t))],
        )
    }
}

/// Parses the profile mini-format used by the CLI.
///
/// Accepts `{"catalog": <name>, "params": {...}}` or
/// `{"piecewise_linear": [[x, y], ...]}`. Malformed documents yield
/// [`Error::Spec`]; well-formed documents with out-of-range values yield
/// [`Error::Domain`].
pub fn parse_profile_spec(text: &str) -> Result<ProfileFunction> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Spec(format!("profile JSON: {e}")))?;
    profile_from_json(&value)
}

pub fn profile_from_json(value: &Value) -> Result<ProfileFunction> {
    let obj = value.as_object().ok_or_else(|| Error::Spec("profile spec must be a JSON object".into()))?;
    if let Some(verts) = obj.get("piecewise_linear") {
        if obj.len() != 1 {
            return Err(Error::Spec("piecewise_linear spec takes no other keys".into()));
        }
        let verts = verts
            .as_array()
            .ok_or_else(|| Error::Spec("piecewise_linear must be an array of [x, y] pairs".into()))?
            .iter()
            .map(|p| match p.as_array().map(|a| a.as_slice()) {
                Some([x, y]) => match (x.as_f64(), y.as_f64()) {
                    (Some(x), Some(y)) => Ok(Point2::new(x, y)),
                    _ => Err(Error::Spec(format!("vertex {p} is not numeric"))),
                },
                _ => Err(Error::Spec(format!("vertex {p} is not an [x, y] pair"))),
            })
            .collect::<Result<Vec<_>>>()?;
        return PiecewiseLinearProfile::new(verts)?.to_profile();
    }

    let name = obj
        .get("catalog")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Spec("profile spec needs \"catalog\" or \"piecewise_linear\"".into()))?;
    if let Some(k) = obj.keys().find(|k| *k != "catalog" && *k != "params") {
        return Err(Error::Spec(format!("unknown key {k:?} in profile spec")));
    }
    let empty = Map::new();
    let params = match obj.get("params") {
        None => &empty,
        Some(p) => p.as_object().ok_or_else(|| Error::Spec("\"params\" must be an object".into()))?,
    };
    let p = Params { name, map: params };
    match name {
        "linear" => {
            p.only(&["slope", "intercept", "lo", "hi"])?;
            profile_linear(p.get("slope")?, p.get("intercept")?, Interval::new(p.get("lo")?, p.get("hi")?)?)
        }
        "euclidean_circle_quadrant" => {
            p.only(&["r"])?;
            profile_euclidean_circle_quadrant(p.get("r")?)
        }
        "euclidean_parabola_quadrant" => {
            p.only(&["r"])?;
            profile_euclidean_parabola_quadrant(p.get("r")?)
        }
        "taxicab_circle_upper" => {
            p.only(&["r"])?;
            profile_taxicab_circle_upper(p.get("r")?)
        }
        "taxicab_parabola" => {
            p.only(&["a", "h"])?;
            profile_taxicab_parabola(p.get("a")?, p.get("h")?)
        }
        "taxicab_ellipse_upper" => {
            p.only(&["a", "b", "s"])?;
            profile_taxicab_ellipse_upper(p.get("a")?, p.get("b")?, p.get("s")?)
        }
        other => Err(Error::Spec(format!("unknown catalog profile {other:?}"))),
    }
}

pub(crate) struct Params<'a> {
    pub name: &'a str,
    pub map: &'a Map<String, Value>,
}

impl Params<'_> {
    pub fn get(&self, key: &str) -> Result<f64> {
        match self.map.get(key) {
            None => Err(Error::Spec(format!("{} needs parameter {key:?}", self.name))),
            Some(v) => v
                .as_f64()
                .ok_or_else(|| Error::Spec(format!("{}: parameter {key:?} must be a number", self.name))),
        }
    }

    pub fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.map.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::Spec(format!("{}: unknown parameter {k:?}", self.name))),
            None => Ok(()),
        }
    }
}
