//! Adaptive Simpson quadrature for integrands with `|f'|` kinks and
//! integrable endpoint singularities.
//!
//! The domain is first cut at every mandatory split. Each resulting piece is
//! integrated with both ends treated as open: panels touching a piece boundary
//! use Milne's open rule, so the integrand is never sampled at a domain
//! endpoint or at a split. Interior panels use closed Simpson with Richardson
//! error estimates. Refinement toward an open end proceeds geometrically, and
//! when the local error there refuses to shrink (an unbounded integrand such
//! as `x / sqrt(1 - x²)` at `x = 1`) the partial sums are Aitken-accelerated.

use crate::error::{Error, Result};
use crate::geometry::Interval;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
    pub kink_scan_points: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { abs_tol: 1e-10, rel_tol: 1e-9, max_depth: 40, kink_scan_points: 257 }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::domain(format!("abs_tol must be > 0, got {}", self.abs_tol)));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::domain(format!("rel_tol must be > 0, got {}", self.rel_tol)));
        }
        if self.max_depth < 1 {
            return Err(Error::domain("max_depth must be >= 1"));
        }
        if self.kink_scan_points < 3 {
            return Err(Error::domain("kink_scan_points must be >= 3"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    /// Number of accepted panels.
    pub subdivisions: usize,
    /// Interior points where the domain was cut before refinement.
    pub split_points: Vec<f64>,
}

/// Integrates `g` over `domain`, cutting first at `mandatory_splits`.
///
/// Splits on the domain boundary are ignored; splits outside it are an error.
pub fn integrate<G>(
    g: G,
    domain: Interval,
    mandatory_splits: &[f64],
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult>
where
    G: Fn(f64) -> f64,
{
    cfg.validate()?;
    if let Some(&s) = mandatory_splits.iter().find(|&&s| !domain.contains(s)) {
        return Err(Error::domain(format!(
            "split {s} lies outside [{}, {}]",
            domain.lo(),
            domain.hi()
        )));
    }
    let mut splits: Vec<f64> = mandatory_splits.iter().copied().filter(|&s| domain.contains_interior(s)).collect();
    splits.sort_by(f64::total_cmp);
    splits.dedup();

    if domain.width() == 0.0 {
        return Ok(QuadratureResult { value: 0.0, error_estimate: 0.0, subdivisions: 0, split_points: splits });
    }

    let mut nodes = Vec::with_capacity(splits.len() + 2);
    nodes.push(domain.lo());
    nodes.extend_from_slice(&splits);
    nodes.push(domain.hi());

    let mut run = Integrator { g: &g, cfg, panels: 0, error: 0.0, converged: true };

    let mut rough = Vec::with_capacity(nodes.len() - 1);
    for w in nodes.windows(2) {
        rough.push(run.milne(w[0], w[1])?);
    }
    let rough_total: f64 = rough.iter().sum();
    let tol = f64::max(cfg.abs_tol, cfg.rel_tol * rough_total.abs());

    let mut value = 0.0;
    for (w, whole) in nodes.windows(2).zip(rough) {
        let share = tol * (w[1] - w[0]) / domain.width();
        value += run.piece(w[0], w[1], whole, share)?;
    }

    if !run.converged {
        return Err(Error::Convergence { estimate: value, error_estimate: run.error });
    }
    Ok(QuadratureResult { value, error_estimate: run.error, subdivisions: run.panels, split_points: splits })
}

#[derive(Clone, Copy, PartialEq)]
enum OpenEnd {
    Lo,
    Hi,
}

struct Integrator<'a, G> {
    g: &'a G,
    cfg: &'a QuadratureConfig,
    panels: usize,
    error: f64,
    converged: bool,
}

impl<G: Fn(f64) -> f64> Integrator<'_, G> {
    fn eval(&self, x: f64) -> Result<f64> {
        let v = (self.g)(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteIntegrand { x })
        }
    }

    /// Milne's open Newton-Cotes rule; exact for cubics.
    fn milne(&self, a: f64, b: f64) -> Result<f64> {
        let h = b - a;
        let q1 = self.eval(a + 0.25 * h)?;
        let q2 = self.eval(a + 0.5 * h)?;
        let q3 = self.eval(a + 0.75 * h)?;
        Ok(h / 3.0 * (2.0 * q1 - q2 + 2.0 * q3))
    }

    fn give_up(&mut self, err: f64) {
        self.converged = false;
        self.error += err;
        self.panels += 1;
    }

    /// A piece between two mandatory cuts, open at both ends.
    fn piece(&mut self, a: f64, b: f64, whole: f64, tol: f64) -> Result<f64> {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            self.panels += 1;
            return Ok(whole);
        }
        let left = self.milne(a, m)?;
        let right = self.milne(m, b)?;
        let diff = left + right - whole;
        if diff.abs() <= 15.0 * tol {
            self.panels += 2;
            self.error += diff.abs() / 15.0;
            return Ok(left + right + diff / 15.0);
        }
        let lv = self.chain(a, m, OpenEnd::Lo, left, 0.5 * tol, 1)?;
        let rv = self.chain(m, b, OpenEnd::Hi, right, 0.5 * tol, 1)?;
        Ok(lv + rv)
    }

    /// Refines `[a, b]` toward its open end. Each step peels the half away
    /// from the open end off as a closed Simpson panel.
    fn chain(&mut self, a: f64, b: f64, open: OpenEnd, estimate: f64, tol: f64, depth: u32) -> Result<f64> {
        let width = b - a;
        let (mut c, mut e) = (a, b);
        let mut open_est = estimate;
        let mut closed_sum = 0.0;
        let mut partial: Vec<f64> = Vec::new();
        let mut accel: Vec<f64> = Vec::new();
        let mut depth = depth;
        let mut last_diff = f64::INFINITY;

        loop {
            let mid = 0.5 * (c + e);
            if depth >= self.cfg.max_depth || mid <= c || mid >= e {
                let best = accel.last().copied().unwrap_or(closed_sum + open_est);
                self.give_up(last_diff.abs().min(open_est.abs().max(tol)));
                return Ok(best);
            }
            let ((pa, pb), (qa, qb)) = match open {
                OpenEnd::Hi => ((c, mid), (mid, e)),
                OpenEnd::Lo => ((mid, e), (c, mid)),
            };
            let fa = self.eval(pa)?;
            let pm = 0.5 * (pa + pb);
            let fm = self.eval(pm)?;
            let fb = self.eval(pb)?;
            let closed = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
            let open_part = self.milne(qa, qb)?;
            let diff = closed + open_part - open_est;
            last_diff = diff;

            let local_tol = tol * (e - c) / width;
            if diff.abs() <= local_tol {
                self.panels += 2;
                self.error += diff.abs();
                return Ok(closed_sum + closed + open_part);
            }

            closed_sum += self.simpson(pa, fa, pm, fm, pb, fb, closed, 0.5 * local_tol, depth + 1)?;
            open_est = open_part;
            (c, e) = (qa, qb);
            depth += 1;

            partial.push(closed_sum + open_est);
            if let [.., s0, s1, s2] = partial[..] {
                accel.push(aitken(s0, s1, s2));
            }
            if let [.., a0, a1, a2] = accel[..] {
                let d1 = (a2 - a1).abs();
                let d0 = (a1 - a0).abs();
                if d1 <= 0.5 * tol && d0 <= tol {
                    self.panels += 1;
                    self.error += d1;
                    return Ok(a2);
                }
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn simpson(
        &mut self,
        a: f64,
        fa: f64,
        m: f64,
        fm: f64,
        b: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        if lm <= a || rm >= b || depth >= self.cfg.max_depth {
            self.give_up(tol);
            return Ok(whole);
        }
        let flm = self.eval(lm)?;
        let frm = self.eval(rm)?;
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let diff = left + right - whole;
        if diff.abs() <= 15.0 * tol {
            self.panels += 2;
            self.error += diff.abs() / 15.0;
            return Ok(left + right + diff / 15.0);
        }
        Ok(self.simpson(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1)?
            + self.simpson(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1)?)
    }
}

/// Aitken's delta-squared extrapolation of three successive partial sums.
fn aitken(s0: f64, s1: f64, s2: f64) -> f64 {
    let d1 = s2 - s1;
    let denom = d1 - (s1 - s0);
    let a = s2 - d1 * d1 / denom;
    if denom == 0.0 || !a.is_finite() {
        s2
    } else {
        a
    }
}

/// Locates sign changes of `g` on `domain`.
///
/// `g` is sampled on `n_scan` evenly spaced points (endpoints included,
/// non-finite samples skipped). Each bracketed change is bisected down to
/// `1e-13` of the domain width.
pub fn detect_sign_changes<G>(g: G, domain: Interval, n_scan: usize) -> Vec<f64>
where
    G: Fn(f64) -> f64,
{
    let n_scan = n_scan.max(3);
    let width = domain.width();
    if width == 0.0 {
        return Vec::new();
    }
    let resolution = 1e-13 * width;
    let mut roots = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for x in domain.uniform_grid(n_scan - 1) {
        let v = g(x);
        if !v.is_finite() || v == 0.0 {
            continue;
        }
        if let Some((px, pv)) = prev {
            if pv.signum() != v.signum() {
                roots.push(bisect(&g, px, pv, x, resolution));
            }
        }
        prev = Some((x, v));
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup();
    roots
}

fn bisect<G: Fn(f64) -> f64>(g: &G, mut lo: f64, lo_val: f64, mut hi: f64, resolution: f64) -> f64 {
    let lo_sign = lo_val.signum();
    while hi - lo > resolution {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = g(mid);
        if v == 0.0 {
            return mid;
        }
        if v.is_finite() && v.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
