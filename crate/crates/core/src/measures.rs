//! Taxicab arc length, area scaling and measures of solids of revolution.
//!
//! Revolution is always about the integration axis: the cross-section at `x`
//! is a taxicab circle of radius `f(x)`.

use crate::error::{Error, Result};
use crate::functions::{ParametricCurve, ParametricCurve2, ParametricCurve3, ProfileFunction};
use crate::geometry::{AngleRad, Interval, PI_T};
use crate::quadrature::{detect_sign_changes, integrate, QuadratureConfig};

/// Grid size used for monotonicity and sign checks on a profile.
pub const PROFILE_CHECK_POINTS: usize = 1024;

/// Inclinations of a plane measured in cross-sections parallel to the
/// xz- and yz-planes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationAngles {
    pub alpha: AngleRad,
    pub beta: AngleRad,
}

impl RotationAngles {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        Ok(Self { alpha: AngleRad::new(alpha)?, beta: AngleRad::new(beta)? })
    }
}

/// Mandatory cuts for integrands containing `|f'|`: declared breakpoints
/// plus detected sign changes of `f'`.
pub fn kink_splits(f: &ProfileFunction, domain: &Interval, cfg: &QuadratureConfig) -> Vec<f64> {
    let mut splits = f.breakpoints_in(domain);
    let roots = detect_sign_changes(|x| f.derivative(x), *domain, cfg.kink_scan_points);
    splits.extend(roots);
    dedupe_near(splits, domain, 1e-12 * domain.width())
}

/// Sorts, drops points within `eps` of an endpoint or an earlier point.
fn dedupe_near(mut pts: Vec<f64>, domain: &Interval, eps: f64) -> Vec<f64> {
    pts.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(pts.len());
    for p in pts {
        if p - domain.lo() <= eps || domain.hi() - p <= eps {
            continue;
        }
        if out.last().is_some_and(|&q| p - q <= eps) {
            continue;
        }
        out.push(p);
    }
    out
}

/// Taxicab arc length of the graph of `f`: the integral of `1 + |f'(x)|`.
pub fn arclength_functional(f: &ProfileFunction, domain: Interval, cfg: &QuadratureConfig) -> Result<f64> {
    f.check_subdomain(&domain)?;
    let splits = kink_splits(f, &domain, cfg);
    Ok(integrate(|x| 1.0 + f.derivative(x).abs(), domain, &splits, cfg)?.value)
}

/// Euclidean arc length, the integral of `sqrt(1 + f'(x)²)`. Comparison only.
pub fn euclidean_arclength(f: &ProfileFunction, domain: Interval, cfg: &QuadratureConfig) -> Result<f64> {
    f.check_subdomain(&domain)?;
    let splits = f.breakpoints_in(&domain);
    Ok(integrate(|x| f.derivative(x).hypot(1.0), domain, &splits, cfg)?.value)
}

/// Sample points for profile checks: a uniform grid plus both one-sided
/// neighbourhoods of every breakpoint, never the breakpoints themselves.
fn check_points(f: &ProfileFunction, domain: &Interval) -> Vec<f64> {
    let bps = f.breakpoints_in(domain);
    let nudge = 1e-9 * domain.width();
    let mut pts: Vec<f64> = domain.uniform_grid(PROFILE_CHECK_POINTS - 1).filter(|x| !bps.contains(x)).collect();
    for &b in &bps {
        pts.push((b - nudge).max(domain.lo()));
        pts.push((b + nudge).min(domain.hi()));
    }
    pts
}

/// Ensures `f'` does not take both strictly positive and strictly negative
/// values on `domain`.
pub fn check_monotone(f: &ProfileFunction, domain: &Interval) -> Result<()> {
    let mut rising: Option<(f64, f64)> = None;
    let mut falling: Option<(f64, f64)> = None;
    for x in check_points(f, domain) {
        let d = f.derivative(x);
        if d.is_nan() {
            continue;
        }
        if d > 0.0 && rising.is_none() {
            rising = Some((x, d));
        } else if d < 0.0 && falling.is_none() {
            falling = Some((x, d));
        }
        if let (Some((x0, d0)), Some((x1, d1))) = (rising, falling) {
            let ((x0, d0), (x1, d1)) = if x0 <= x1 { ((x0, d0), (x1, d1)) } else { ((x1, d1), (x0, d0)) };
            return Err(Error::NotMonotone { x0, d0, x1, d1 });
        }
    }
    Ok(())
}

/// Arc length of a monotone profile from its endpoints alone:
/// `(b - a) + |f(b) - f(a)|`.
pub fn arclength_monotone_closed(f: &ProfileFunction, domain: Interval) -> Result<f64> {
    f.check_subdomain(&domain)?;
    check_monotone(f, &domain)?;
    Ok(domain.width() + (f.eval(domain.hi()) - f.eval(domain.lo())).abs())
}

/// Integral of `Σ |x_i'(t)|` with cuts at the breakpoints and at sign changes
/// of every component derivative.
pub fn arclength_parametric<const N: usize>(
    c: &ParametricCurve<N>,
    domain: Interval,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if !c.domain().contains_interval(&domain) {
        return Err(Error::domain(format!(
            "[{}, {}] is not inside the parameter domain of {}",
            domain.lo(),
            domain.hi(),
            c.label()
        )));
    }
    let mut splits: Vec<f64> = c.breakpoints().iter().copied().filter(|&t| domain.contains_interior(t)).collect();
    for comp in c.components() {
        splits.extend(detect_sign_changes(|t| (comp.derivative)(t), domain, cfg.kink_scan_points));
    }
    let splits = dedupe_near(splits, &domain, 1e-12 * domain.width());
    let speed = |t: f64| c.velocity(t).iter().map(|v| v.abs()).sum::<f64>();
    Ok(integrate(speed, domain, &splits, cfg)?.value)
}

pub fn arclength_parametric_2d(c: &ParametricCurve2, domain: Interval, cfg: &QuadratureConfig) -> Result<f64> {
    arclength_parametric(c, domain, cfg)
}

pub fn arclength_parametric_3d(c: &ParametricCurve3, domain: Interval, cfg: &QuadratureConfig) -> Result<f64> {
    arclength_parametric(c, domain, cfg)
}

/// `(|cos α| + |sin α|)(|cos β| + |sin β|)`, in `[1, 2]`.
pub fn area_scaling_factor(angles: &RotationAngles) -> f64 {
    angles.alpha.taxicab_scale() * angles.beta.taxicab_scale()
}

/// Taxicab area of a flat figure of Euclidean area `area_e` lying in a plane
/// tilted by `angles`.
pub fn taxicab_area_rotated(area_e: f64, angles: &RotationAngles) -> Result<f64> {
    if !(area_e >= 0.0 && area_e.is_finite()) {
        return Err(Error::domain(format!("Euclidean area must be finite and >= 0, got {area_e}")));
    }
    Ok(area_e * area_scaling_factor(angles))
}

/// Rejects profiles that dip below zero anywhere on the check grid.
pub fn check_nonnegative(f: &ProfileFunction, domain: &Interval) -> Result<()> {
    let bps = f.breakpoints_in(domain);
    for x in check_points(f, domain).into_iter().chain(bps) {
        let v = f.eval(x);
        if v < 0.0 {
            return Err(Error::NegativeProfile { x, value: v });
        }
    }
    Ok(())
}

/// Slant correction `sqrt(1 - d² / (2(1 + d²)))`, bounded in `[sqrt(1/2), 1]`.
pub fn slant_factor(d: f64) -> f64 {
    let d2 = d * d;
    let ratio = if d2.is_infinite() { 1.0 } else { d2 / (1.0 + d2) };
    (1.0 - 0.5 * ratio).sqrt()
}

/// Lateral taxicab surface area swept by revolving `f` about the axis.
pub fn surface_of_revolution(f: &ProfileFunction, domain: Interval, cfg: &QuadratureConfig) -> Result<f64> {
    f.check_subdomain(&domain)?;
    check_nonnegative(f, &domain)?;
    let splits = kink_splits(f, &domain, cfg);
    let integrand = |x: f64| {
        let d = f.derivative(x);
        2.0 * PI_T * f.eval(x) * (1.0 + d.abs()) * slant_factor(d)
    };
    Ok(integrate(integrand, domain, &splits, cfg)?.value)
}

/// Volume swept by revolving `f`; each slice is a taxicab disk of area `2 f²`.
pub fn volume_of_revolution(f: &ProfileFunction, domain: Interval, cfg: &QuadratureConfig) -> Result<f64> {
    f.check_subdomain(&domain)?;
    check_nonnegative(f, &domain)?;
    let splits = f.breakpoints_in(&domain);
    let integrand = |x: f64| {
        let r = f.eval(x);
        0.5 * PI_T * r * r
    };
    Ok(integrate(integrand, domain, &splits, cfg)?.value)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{E, FRAC_PI_2, FRAC_PI_4, PI, SQRT_2, TAU};

    use proptest::prelude::*;

    use super::*;
    use crate::functions::*;
    use crate::geometry::{taxicab_dist_3d, Point3};

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn exp_profile(scale: f64, rate: f64, domain: Interval) -> ProfileFunction {
        ProfileFunction::new(
            format!("{scale} exp({rate} x)"),
            domain,
            vec![],
            move |x| scale * (rate * x).exp(),
            move |x| scale * rate * (rate * x).exp(),
        )
        .unwrap()
    }

    #[test]
    fn functional_arclength_examples() {
        let lin = profile_linear(-1.0, 1.0, iv(0.0, 1.0)).unwrap();
        assert!(close(arclength_functional(&lin, iv(0.0, 1.0), &cfg()).unwrap(), 2.0, 1e-12));
        let circ = profile_euclidean_circle_quadrant(1.0).unwrap();
        assert!(close(arclength_functional(&circ, iv(0.0, 1.0), &cfg()).unwrap(), 2.0, 1e-8));
        let para = profile_euclidean_parabola_quadrant(1.0).unwrap();
        assert!(close(arclength_functional(&para, iv(0.0, 1.0), &cfg()).unwrap(), 2.0, 1e-12));
    }

    #[test]
    fn arclength_needs_subdomain() {
        let lin = profile_linear(-1.0, 1.0, iv(0.0, 1.0)).unwrap();
        assert!(matches!(arclength_functional(&lin, iv(0.0, 2.0), &cfg()), Err(Error::Domain(_))));
    }

    #[test]
    fn non_monotone_arclength_splits_at_turning_point() {
        // sin on [0, π]: up 1, down 1, plus width π
        let s = ProfileFunction::new("sin", iv(0.0, PI), vec![], f64::sin, f64::cos).unwrap();
        let l = arclength_functional(&s, iv(0.0, PI), &cfg()).unwrap();
        assert!(close(l, PI + 2.0, 1e-9), "{l}");
    }

    #[test]
    fn monotone_closed_form_examples() {
        let e = exp_profile(1.0, 1.0, iv(0.0, 1.0));
        assert!(close(arclength_monotone_closed(&e, iv(0.0, 1.0)).unwrap(), E, 1e-15));
        let c = profile_constant(5.0, iv(2.0, 7.0)).unwrap();
        assert_eq!(arclength_monotone_closed(&c, iv(2.0, 7.0)).unwrap(), 5.0);
        let circ = profile_euclidean_circle_quadrant(1.0).unwrap();
        assert_eq!(arclength_monotone_closed(&circ, iv(0.0, 1.0)).unwrap(), 2.0);
    }

    #[test]
    fn monotone_closed_form_rejects_turning_profiles() {
        let f = profile_taxicab_circle_upper(1.0).unwrap();
        match arclength_monotone_closed(&f, iv(-1.0, 1.0)) {
            Err(Error::NotMonotone { x0, d0, x1, d1 }) => {
                assert!(x0 < x1 && d0.signum() != d1.signum());
            }
            other => panic!("expected NotMonotone, got {other:?}"),
        }
        // but each half is monotone
        assert_eq!(arclength_monotone_closed(&f, iv(-1.0, 0.0)).unwrap(), 2.0);
    }

    fn unit_circle(r: f64) -> ParametricCurve2 {
        ParametricCurve2::new(
            "circle",
            iv(0.0, TAU),
            vec![],
            [
                Component::new(move |t: f64| r * t.cos(), move |t: f64| -r * t.sin()),
                Component::new(move |t: f64| r * t.sin(), move |t: f64| r * t.cos()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn parametric_2d_examples() {
        let c = unit_circle(1.0);
        assert!(close(arclength_parametric_2d(&c, iv(0.0, FRAC_PI_2), &cfg()).unwrap(), 2.0, 1e-10));
        assert!(close(arclength_parametric_2d(&c, iv(0.0, TAU), &cfg()).unwrap(), 8.0, 1e-9));
        let diag = ParametricCurve2::new(
            "diag",
            iv(0.0, 1.0),
            vec![],
            [Component::new(|t| t, |_| 1.0), Component::new(|t| t, |_| 1.0)],
        )
        .unwrap();
        assert!(close(arclength_parametric_2d(&diag, iv(0.0, 1.0), &cfg()).unwrap(), 2.0, 1e-14));
        assert!(arclength_parametric_2d(&diag, iv(0.0, 2.0), &cfg()).is_err());
    }

    fn helix() -> ParametricCurve3 {
        ParametricCurve3::new(
            "helix",
            iv(0.0, TAU),
            vec![],
            [
                Component::new(f64::cos, |t: f64| -t.sin()),
                Component::new(f64::sin, f64::cos),
                Component::new(|t| t, |_| 1.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn parametric_3d_examples() {
        let seg = ParametricCurve3::new(
            "seg",
            iv(0.0, 1.0),
            vec![],
            [
                Component::new(|t| t, |_| 1.0),
                Component::new(|t| 2.0 * t, |_| 2.0),
                Component::new(|t| 3.0 * t, |_| 3.0),
            ],
        )
        .unwrap();
        let l = arclength_parametric_3d(&seg, iv(0.0, 1.0), &cfg()).unwrap();
        let d = taxicab_dist_3d(Point3::new(0.0, 0.0, 0.0), Point3::new(1.0, 2.0, 3.0)).unwrap();
        assert!(close(l, 6.0, 1e-14) && close(l, d, 1e-14));

        let axis = ParametricCurve3::new(
            "axis",
            iv(0.0, 4.0),
            vec![],
            [Component::new(|t| t, |_| 1.0), Component::new(|_| 0.0, |_| 0.0), Component::new(|_| 0.0, |_| 0.0)],
        )
        .unwrap();
        assert!(close(arclength_parametric_3d(&axis, iv(0.0, 4.0), &cfg()).unwrap(), 4.0, 1e-14));
    }

    #[test]
    fn helix_quarter_turn_matches_polyline() {
        let h = helix();
        let quad = arclength_parametric_3d(&h, iv(0.0, FRAC_PI_2), &cfg()).unwrap();
        // polyline through 1e5 + 1 points of the curve, taxicab metric per segment
        let n = 100_000;
        let mut prev = h.point(0.0);
        let mut poly = 0.0;
        for i in 1..=n {
            let p = h.point(FRAC_PI_2 * i as f64 / n as f64);
            poly += (0..3).map(|k| (p[k] - prev[k]).abs()).sum::<f64>();
            prev = p;
        }
        let expected = 2.0 + FRAC_PI_2;
        assert!(close(quad, expected, 1e-9), "{quad}");
        assert!(close(poly, expected, 1e-9), "{poly}");
    }

    #[test]
    fn area_scaling_examples() {
        let f = |a, b| area_scaling_factor(&RotationAngles::new(a, b).unwrap());
        assert_eq!(f(0.0, 0.0), 1.0);
        assert!(close(f(FRAC_PI_4, 0.0), SQRT_2, 1e-12));
        assert!(close(f(FRAC_PI_4, FRAC_PI_4), 2.0, 1e-12));

        let ang = RotationAngles::new(FRAC_PI_4, 0.0).unwrap();
        assert!(close(taxicab_area_rotated(1.0, &ang).unwrap(), SQRT_2, 1e-12));
        let both = RotationAngles::new(FRAC_PI_4, FRAC_PI_4).unwrap();
        let sphere_e = 4.0 * 3f64.sqrt();
        assert!(close(taxicab_area_rotated(sphere_e, &both).unwrap(), 8.0 * 3f64.sqrt(), 1e-12));
        assert_eq!(taxicab_area_rotated(7.0, &RotationAngles::new(0.0, 0.0).unwrap()).unwrap(), 7.0);
        assert!(taxicab_area_rotated(-1.0, &ang).is_err());
    }

    #[test]
    fn surface_examples() {
        let half_sphere = profile_linear(-1.0, 1.0, iv(0.0, 1.0)).unwrap();
        let s = surface_of_revolution(&half_sphere, iv(0.0, 1.0), &cfg()).unwrap();
        assert!(close(s, 4.0 * 3f64.sqrt(), 1e-12));
        let cyl = profile_constant(1.0, iv(0.0, 2.0)).unwrap();
        assert!(close(surface_of_revolution(&cyl, iv(0.0, 2.0), &cfg()).unwrap(), 16.0, 1e-12));
        let zero = profile_constant(0.0, iv(0.0, 1.0)).unwrap();
        assert_eq!(surface_of_revolution(&zero, iv(0.0, 1.0), &cfg()).unwrap(), 0.0);
    }

    #[test]
    fn volume_examples() {
        let sphere = profile_taxicab_circle_upper(1.0).unwrap();
        assert!(close(volume_of_revolution(&sphere, iv(-1.0, 1.0), &cfg()).unwrap(), 4.0 / 3.0, 1e-12));
        let cyl = profile_constant(1.0, iv(0.0, 2.0)).unwrap();
        assert!(close(volume_of_revolution(&cyl, iv(0.0, 2.0), &cfg()).unwrap(), 4.0, 1e-12));
        let zero = profile_constant(0.0, iv(0.0, 5.0)).unwrap();
        assert_eq!(volume_of_revolution(&zero, iv(0.0, 5.0), &cfg()).unwrap(), 0.0);
    }

    #[test]
    fn negative_profiles_are_rejected() {
        let neg = profile_linear(1.0, -0.5, iv(0.0, 1.0)).unwrap();
        match surface_of_revolution(&neg, iv(0.0, 1.0), &cfg()) {
            Err(Error::NegativeProfile { x, value }) => assert!(x < 0.5 && value < 0.0),
            other => panic!("{other:?}"),
        }
        assert!(matches!(volume_of_revolution(&neg, iv(0.0, 1.0), &cfg()), Err(Error::NegativeProfile { .. })));
    }

    #[test]
    fn slant_factor_bounds() {
        assert_eq!(slant_factor(0.0), 1.0);
        assert!(close(slant_factor(1.0), 0.75f64.sqrt(), 1e-15));
        assert!(close(slant_factor(f64::INFINITY), 0.5f64.sqrt(), 1e-15));
        assert!(close(slant_factor(1e200), 0.5f64.sqrt(), 1e-15));
    }

    #[test]
    fn half_taxicab_circle_doubled_is_sphere_surface() {
        for r in [0.5, 1.0, 2.0, 3.7] {
            let f = profile_taxicab_circle_upper(r).unwrap();
            let s = surface_of_revolution(&f, iv(-r, r), &cfg()).unwrap();
            assert!(close(s, 8.0 * 3f64.sqrt() * r * r, 1e-8), "r = {r}: {s}");
        }
    }

    #[test]
    fn euclidean_quadrant_revolution_is_finite() {
        let f = profile_euclidean_circle_quadrant(1.0).unwrap();
        let s = surface_of_revolution(&f, iv(0.0, 1.0), &cfg()).unwrap();
        let v = volume_of_revolution(&f, iv(0.0, 1.0), &cfg()).unwrap();
        // ∫ 2 (1 - x²) dx = 4/3
        assert!(close(v, 4.0 / 3.0, 1e-12));
        assert!(s.is_finite() && s > 0.0);
    }

    fn monotone_profile() -> impl Strategy<Value = (ProfileFunction, Interval)> {
        let cubic = (prop::array::uniform4(0.0..3.0f64), 0.0..2.0f64, 0.1..3.0f64, any::<bool>()).prop_map(
            |(c, lo, w, flip)| {
                let s = if flip { -1.0 } else { 1.0 };
                let dom = Interval::new(lo, lo + w).unwrap();
                let f = ProfileFunction::new(
                    "cubic",
                    dom,
                    vec![],
                    move |x| s * (((c[3] * x + c[2]) * x + c[1]) * x + c[0]),
                    move |x| s * ((3.0 * c[3] * x + 2.0 * c[2]) * x + c[1]),
                )
                .unwrap();
                (f, dom)
            },
        );
        let exp = (0.1..5.0f64, -3.0..3.0f64, -1.0..1.0f64, 0.1..2.0f64).prop_map(|(scale, rate, lo, w)| {
            let dom = Interval::new(lo, lo + w).unwrap();
            (exp_profile(scale, rate, dom), dom)
        });
        prop_oneof![cubic, exp]
    }

    proptest! {
        #[test]
        fn path_independence((f, dom) in monotone_profile()) {
            let quad = arclength_functional(&f, dom, &cfg()).unwrap();
            let closed = arclength_monotone_closed(&f, dom).unwrap();
            prop_assert!(close(quad, closed, 1e-8), "{} vs {}", quad, closed);
        }

        #[test]
        fn parametric_graph_matches_functional((f, dom) in monotone_profile()) {
            let graph = ParametricCurve2::graph_of(&f).unwrap();
            let p = arclength_parametric_2d(&graph, dom, &cfg()).unwrap();
            let q = arclength_functional(&f, dom, &cfg()).unwrap();
            prop_assert!(close(p, q, 1e-9));
        }

        #[test]
        fn taxicab_arclength_dominates_euclidean(c in prop::array::uniform3(-2.0..2.0f64)) {
            let dom = Interval::new(-1.0, 1.5).unwrap();
            let f = ProfileFunction::new("q", dom, vec![], move |x| (c[2] * x + c[1]) * x + c[0], move |x| 2.0 * c[2] * x + c[1]).unwrap();
            let t = arclength_functional(&f, dom, &cfg()).unwrap();
            let e = euclidean_arclength(&f, dom, &cfg()).unwrap();
            prop_assert!(t >= e - 1e-9);
        }

        #[test]
        fn area_factor_range(a in -10.0..10.0f64, b in -10.0..10.0f64) {
            let ang = RotationAngles::new(a, b).unwrap();
            let k = area_scaling_factor(&ang);
            prop_assert!((1.0 - 1e-12..=2.0 + 1e-12).contains(&k));
            let aligned = ang.alpha.is_axis_aligned(1e-12) && ang.beta.is_axis_aligned(1e-12);
            prop_assert_eq!(aligned, (k - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn area_factor_one_on_axes(i in 0..4i32, j in 0..4i32) {
            let ang = RotationAngles::new(i as f64 * FRAC_PI_2, j as f64 * FRAC_PI_2).unwrap();
            prop_assert!((area_scaling_factor(&ang) - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn revolution_additivity(which in 0..4usize, t in 0.01..0.99f64) {
            let (f, dom) = match which {
                0 => (profile_taxicab_circle_upper(1.3).unwrap(), iv(-1.3, 1.3)),
                1 => (profile_euclidean_parabola_quadrant(2.0).unwrap(), iv(0.0, 2.0)),
                2 => (profile_taxicab_ellipse_upper(2.0, 1.5, 5.0).unwrap(), iv(-2.0, 2.0)),
                _ => (profile_taxicab_parabola(1.0, 3.0).unwrap(), iv(0.0, 3.0)),
            };
            let m = dom.lo() + t * dom.width();
            for measure in [surface_of_revolution, volume_of_revolution] {
                let whole = measure(&f, dom, &cfg()).unwrap();
                let parts = measure(&f, iv(dom.lo(), m), &cfg()).unwrap() + measure(&f, iv(m, dom.hi()), &cfg()).unwrap();
                let tol = 10.0 * f64::max(cfg().abs_tol, cfg().rel_tol * whole.abs());
                prop_assert!((whole - parts).abs() <= tol, "{} vs {}", whole, parts);
            }
        }
    }

    #[test]
    fn area_factor_peaks_at_diagonal() {
        let peak = area_scaling_factor(&RotationAngles::new(FRAC_PI_4, FRAC_PI_4).unwrap());
        let n = 200;
        for i in 0..=n {
            for j in 0..=n {
                let a = FRAC_PI_2 * i as f64 / n as f64;
                let b = FRAC_PI_2 * j as f64 / n as f64;
                assert!(area_scaling_factor(&RotationAngles::new(a, b).unwrap()) <= peak + 1e-15);
            }
        }
    }
}
