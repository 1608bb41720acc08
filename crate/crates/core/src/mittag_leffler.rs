//! The one-parameter Mittag-Leffler function `E_α(z) = Σ z^k / Γ(αk + 1)`
//! for complex `z`: power series, Hankel-contour quadrature and a series
//! whose reciprocal Gammas come from the truncated Weierstrass product.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bicomplex::principal_arg;
use crate::dd::DdComplex;
use crate::error::{Error, Result};
use crate::gamma::{ln_gamma, EULER_GAMMA};
use crate::quadrature::gauss_legendre;

const CZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const CONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Consecutive negligible terms required before the series stops.
const QUIET_RUN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLEvalOptions {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub contour_nodes: usize,
    pub contour_radius_factor: f64,
    /// Largest tolerated ratio of estimated rounding error to
    /// `max(|value|, 1)`. `f64::INFINITY` turns the check off.
    pub cancellation_limit: f64,
    /// Product length used by the Weierstrass algorithm.
    pub weierstrass_factors: usize,
}

impl Default for MLEvalOptions {
    fn default() -> Self {
        MLEvalOptions {
            rel_tol: 1e-13,
            max_terms: 400,
            contour_nodes: 200,
            contour_radius_factor: 2.0,
            cancellation_limit: 1e-11,
            weierstrass_factors: 100_000,
        }
    }
}

impl MLEvalOptions {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(m.to_string()));
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-6) {
            return bad("rel_tol must lie in (0, 1e-6]");
        }
        if self.max_terms < 8 {
            return bad("max_terms must be at least 8");
        }
        if self.contour_nodes < 32 || !self.contour_nodes.is_multiple_of(2) {
            return bad("contour_nodes must be even and at least 32");
        }
        if !(self.contour_radius_factor > 1.0 && self.contour_radius_factor.is_finite()) {
            return bad("contour_radius_factor must be finite and greater than 1");
        }
        if !(self.cancellation_limit > 0.0) {
            return bad("cancellation_limit must be positive");
        }
        if self.weierstrass_factors == 0 {
            return bad("weierstrass_factors must be positive");
        }
        Ok(())
    }
}

/// A series evaluation with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlValue {
    pub value: Complex64,
    /// Estimated magnitude of the omitted tail.
    pub tail: f64,
    /// Number of terms summed.
    pub terms: usize,
}

fn check_alpha(alpha: Complex64) -> Result<()> {
    if !(alpha.re.is_finite() && alpha.im.is_finite()) {
        return Err(Error::DomainAlpha {
            reason: "alpha is not finite".into(),
        });
    }
    if alpha.re <= 0.0 {
        return Err(Error::DomainAlpha {
            reason: format!("Re(alpha) = {} must be positive", alpha.re),
        });
    }
    Ok(())
}

fn small_integer(alpha: Complex64) -> Option<u32> {
    (alpha.im == 0.0 && alpha.re == alpha.re.round() && (1.0..=64.0).contains(&alpha.re))
        .then_some(alpha.re as u32)
}

/// Kahan-compensated complex sum.
#[derive(Default)]
struct Kahan {
    sum: Complex64,
    c: Complex64,
}

impl Kahan {
    fn add(&mut self, x: Complex64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Stopping rule shared by the summation loops.
struct Stopper {
    quiet: usize,
    peak: f64,
    abs_sum: f64,
    last: f64,
    prev: f64,
}

impl Stopper {
    fn new() -> Self {
        Stopper {
            quiet: 0,
            peak: 1.0,
            abs_sum: 1.0,
            last: 1.0,
            prev: f64::NAN,
        }
    }

    /// Record `|t_k|`; true once enough consecutive terms are negligible.
    fn push(&mut self, mag: f64, partial: f64) -> bool {
        self.prev = self.last;
        self.last = mag;
        self.peak = self.peak.max(mag);
        self.abs_sum += mag;
        let negligible = mag <= 1e-17 * partial || mag <= 1e-33 * self.peak;
        self.quiet = if negligible { self.quiet + 1 } else { 0 };
        self.quiet >= QUIET_RUN
    }

    fn tail(&self) -> f64 {
        if self.last == 0.0 {
            return 0.0;
        }
        let r = self.last / self.prev;
        if r < 1.0 {
            self.last * r / (1.0 - r)
        } else {
            f64::INFINITY
        }
    }
}

fn finish(
    value: Complex64,
    stop: &Stopper,
    terms: usize,
    converged: bool,
    rounding: f64,
    opts: &MLEvalOptions,
) -> Result<MlValue> {
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Overflow);
    }
    let tail = stop.tail();
    let mag = value.norm();
    if !converged && !(tail <= opts.rel_tol * mag || tail <= f64::EPSILON * stop.abs_sum) {
        return Err(Error::NotConverged { terms, tail });
    }
    let limit = opts.cancellation_limit * mag.max(1.0);
    if rounding > limit {
        return Err(Error::PrecisionLoss {
            estimate: rounding / mag.max(1.0),
            limit: opts.cancellation_limit,
        });
    }
    Ok(MlValue { value, tail, terms })
}

/// `Σ z^k / Γ(αk + 1)` with diagnostics.
///
/// `α = 0` is accepted and gives the geometric series, valid for `|z| < 1`.
/// Positive integer `α` is summed in double-double with the exact term
/// ratio `z / ((αk - α + 1) ⋯ (αk))`; other `α` use `exp(k ln z - ln Γ(αk+1))`.
pub fn ml_series_detailed(alpha: Complex64, z: Complex64, opts: &MLEvalOptions) -> Result<MlValue> {
    opts.validate()?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument("argument is not finite".into()));
    }
    if alpha == CZERO {
        return geometric(z, opts);
    }
    check_alpha(alpha)?;
    if z == CZERO {
        return Ok(MlValue {
            value: CONE,
            tail: 0.0,
            terms: 1,
        });
    }
    match small_integer(alpha) {
        Some(n) => series_integer(n, z, opts),
        None => series_general(alpha, z, opts),
    }
}

/// `E_α(z)` by its power series.
pub fn ml_series(alpha: Complex64, z: Complex64, opts: &MLEvalOptions) -> Result<Complex64> {
    ml_series_detailed(alpha, z, opts).map(|v| v.value)
}

fn geometric(z: Complex64, opts: &MLEvalOptions) -> Result<MlValue> {
    let r = z.norm();
    if r >= 1.0 {
        return Err(Error::OutsideDisk { n_xi: r, radius: 1.0 });
    }
    let mut acc = Kahan::default();
    acc.add(CONE);
    let mut stop = Stopper::new();
    let mut t = CONE;
    for k in 1..opts.max_terms {
        t *= z;
        acc.add(t);
        if stop.push(t.norm(), acc.sum.norm()) {
            return finish(acc.sum, &stop, k + 1, true, 0.0, opts);
        }
    }
    finish(acc.sum, &stop, opts.max_terms, false, 0.0, opts)
}

fn series_integer(n: u32, z: Complex64, opts: &MLEvalOptions) -> Result<MlValue> {
    let nf = n as f64;
    let mut sum = DdComplex::from_c64(CONE);
    let mut t = DdComplex::from_c64(CONE);
    let mut stop = Stopper::new();
    for k in 1..opts.max_terms {
        t = t.mul_c64(z);
        let base = nf * (k - 1) as f64;
        for j in 1..=n {
            t = t.div_f64(base + j as f64);
        }
        sum = sum + t;
        if stop.push(t.norm(), sum.norm()) {
            let rounding = 1e-32 * stop.abs_sum * k as f64;
            return finish(sum.to_c64(), &stop, k + 1, true, rounding, opts);
        }
    }
    let rounding = 1e-32 * stop.abs_sum * opts.max_terms as f64;
    finish(sum.to_c64(), &stop, opts.max_terms, false, rounding, opts)
}

fn series_general(alpha: Complex64, z: Complex64, opts: &MLEvalOptions) -> Result<MlValue> {
    let ln_z = z.ln();
    let mut acc = Kahan::default();
    acc.add(CONE);
    let mut stop = Stopper::new();
    let mut rounding = 0.0;
    for k in 1..opts.max_terms {
        let kf = k as f64;
        let lg = ln_gamma(alpha * kf + 1.0);
        let e = ln_z * kf - lg;
        let t = e.exp();
        let mag = t.norm();
        rounding += f64::EPSILON * mag * (4.0 + (ln_z * kf).norm() + lg.norm());
        acc.add(t);
        if stop.push(mag, acc.sum.norm()) {
            return finish(acc.sum, &stop, k + 1, true, rounding, opts);
        }
    }
    finish(acc.sum, &stop, opts.max_terms, false, rounding, opts)
}

/// `ln(1/Γ_N(w))` from the Weierstrass product truncated at `N` factors:
/// `1/Γ(w) ≈ w e^{γw} Π_{n≤N} (1 + w/n) e^{-w/n}`.
pub fn ln_rgamma_weierstrass(w: Complex64, n_factors: usize) -> Complex64 {
    let mut acc = Kahan::default();
    acc.add(w.ln());
    acc.add(w * EULER_GAMMA);
    for n in 1..=n_factors {
        let u = w / n as f64;
        acc.add(log1p_minus_x(u));
    }
    acc.sum
}

/// `ln(1 + u) - u`, accurate for small `u`.
fn log1p_minus_x(u: Complex64) -> Complex64 {
    if u.norm() < 0.05 {
        // -u²/2 + u³/3 - u⁴/4 + ...
        let mut term = u * u;
        let mut sum = CZERO;
        let mut sign = -1.0;
        for k in 2..40 {
            sum += term * (sign / k as f64);
            term *= u;
            sign = -sign;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (1.0 + u).ln() - u
    }
}

/// Reciprocal Gamma via the truncated Weierstrass product. Returns the
/// value and an estimate `|w|²/(2N)` of its relative truncation error.
pub fn rgamma_weierstrass(w: Complex64, n_factors: usize) -> (Complex64, f64) {
    if w == CZERO {
        return (CZERO, 0.0);
    }
    let v = ln_rgamma_weierstrass(w, n_factors).exp();
    (v, w.norm_sqr() / (2.0 * n_factors as f64))
}

/// Result of [`ml_weierstrass`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeierstrassValue {
    pub value: Complex64,
    /// Estimated error from truncating the product, `O(1/n_factors)`.
    pub product_error: f64,
    pub terms: usize,
}

/// `E_α(z)` with each `1/Γ(αk+1)` taken from the truncated Weierstrass
/// product with `n_factors` factors.
pub fn ml_weierstrass(
    alpha: Complex64,
    z: Complex64,
    n_factors: usize,
    opts: &MLEvalOptions,
) -> Result<WeierstrassValue> {
    opts.validate()?;
    check_alpha(alpha)?;
    if n_factors == 0 {
        return Err(Error::InvalidArgument("n_factors must be positive".into()));
    }
    if z == CZERO {
        return Ok(WeierstrassValue {
            value: CONE,
            product_error: 0.0,
            terms: 1,
        });
    }
    let ln_z = z.ln();
    let mut acc = Kahan::default();
    let mut err = 0.0;
    let mut stop = Stopper::new();
    let mut terms = opts.max_terms;
    let mut converged = false;
    for k in 0..opts.max_terms {
        let w = alpha * k as f64 + 1.0;
        let ln_r = ln_rgamma_weierstrass(w, n_factors);
        let t = (ln_z * k as f64 + ln_r).exp();
        let mag = t.norm();
        err += mag * w.norm_sqr() / (2.0 * n_factors as f64);
        acc.add(t);
        if k > 0 && stop.push(mag, acc.sum.norm()) {
            terms = k + 1;
            converged = true;
            break;
        }
    }
    let v = finish(acc.sum, &stop, terms, converged, 0.0, opts)?;
    Ok(WeierstrassValue {
        value: v.value,
        product_error: err,
        terms: v.terms,
    })
}

/// Contour geometry for [`ml_contour`].
#[derive(Debug, Clone, PartialEq)]
pub struct HankelContour {
    /// Radius of the circular arc.
    pub radius: f64,
    /// Ray angle; the rays run from `radius·e^{±iφ}` to infinity.
    pub phi: f64,
    /// Poles outside the enclosed region, whose residues are added.
    pub residue_poles: Vec<Complex64>,
}

/// Arguments `(arg z + 2πk)/α` of the solutions of `t^α = z` with
/// `|arg t| < π + margin`.
fn pole_args(alpha: f64, z: Complex64, margin: f64) -> Vec<f64> {
    if z == CZERO {
        return Vec::new();
    }
    let th = principal_arg(z);
    let kmax = ((PI + margin) * alpha / (2.0 * PI)).ceil() as i64 + 1;
    (-kmax..=kmax)
        .map(|k| (th + 2.0 * PI * k as f64) / alpha)
        .filter(|a| a.abs() < PI + margin)
        .collect()
}

/// Solutions `t` of `t^α = z` on the principal sheet, `arg t ∈ (-π, π]`.
fn principal_poles(alpha: f64, z: Complex64) -> Vec<Complex64> {
    let rho = z.norm().powf(1.0 / alpha);
    pole_args(alpha, z, 1e-12)
        .into_iter()
        .filter(|a| *a > -PI && *a <= PI)
        .map(|a| Complex64::from_polar(rho, a))
        .collect()
}

const MIN_RAY_SEPARATION: f64 = 0.35;

/// Pick the loop: an arc of radius `r` over `|arg t| ≤ φ` joined to rays at
/// `±φ`. When the poles lie inside the unit-scale disk the arc of radius
/// `factor` encloses them. Otherwise the arc shrinks to `ρ/factor` (or back
/// to `factor` when no residue is needed) and the poles left outside are
/// picked up as residues, which keeps the integrand far smaller than the
/// result. `φ` is lowered from `π - 0.1` when a pole sits close to a ray.
pub fn hankel_contour(alpha: f64, z: Complex64, factor: f64) -> HankelContour {
    let poles = principal_poles(alpha, z);
    let rho = if z == CZERO { 0.0 } else { z.norm().powf(1.0 / alpha) };
    if rho <= 1.0 {
        return HankelContour {
            radius: factor,
            phi: PI - 0.1,
            residue_poles: Vec::new(),
        };
    }
    // Solutions just past the cut are not singular on the principal sheet,
    // but they still make the integrand peak near a ray.
    let near = pole_args(alpha, z, MIN_RAY_SEPARATION);
    let separation = |phi: f64| {
        near.iter()
            .map(|a| (a - phi).abs().min((a + phi).abs()))
            .fold(f64::INFINITY, f64::min)
    };
    let mut best = (PI - 0.1, separation(PI - 0.1));
    let mut phi = PI - 0.1;
    while phi >= 0.6 * PI - 1e-12 {
        let s = separation(phi);
        if s >= MIN_RAY_SEPARATION {
            best = (phi, s);
            break;
        }
        if s > best.1 {
            best = (phi, s);
        }
        phi -= 0.05;
    }
    let phi = best.0;
    let residue_poles: Vec<Complex64> = poles
        .into_iter()
        .filter(|t| principal_arg(*t).abs() < phi)
        .collect();
    let mut radius = rho / factor;
    if residue_poles.is_empty() && radius > 2.0 * factor {
        radius = factor;
    }
    HankelContour {
        radius,
        phi,
        residue_poles,
    }
}

/// `t^{α-1} e^t / (t^α - z)` and `|t^α - z|`.
fn hankel_integrand(alpha: f64, z: Complex64, t: Complex64) -> (Complex64, f64) {
    let ln_t = t.ln();
    let denom = (ln_t * alpha).exp() - z;
    (((alpha - 1.0) * ln_t + t).exp() / denom, denom.norm())
}

/// `E_α(z)` for real `α > 0` from
/// `(1/2πi) ∫ t^{α-1} e^t / (t^α - z) dt` over a Hankel loop.
///
/// The arc uses a Gauss–Legendre rule with `contour_nodes/2` points and each
/// ray an exp-sinh rule with `contour_nodes/4` points.
pub fn ml_contour(alpha: f64, z: Complex64, opts: &MLEvalOptions) -> Result<Complex64> {
    opts.validate()?;
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::DomainAlpha {
            reason: format!("contour algorithm needs real alpha > 0, got {alpha}"),
        });
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument("argument is not finite".into()));
    }
    let geom = hankel_contour(alpha, z, opts.contour_radius_factor);
    let (r, phi) = (geom.radius, geom.phi);
    let pole_floor = 1e-10 * r.powf(alpha);
    let mut min_dist = f64::INFINITY;

    // arc: (1/2π) ∫_{-φ}^{φ} g(t) t dθ, t = r e^{iθ}
    let rule = gauss_legendre(opts.contour_nodes / 2)?;
    let mut arc = Kahan::default();
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let t = Complex64::from_polar(r, phi * x);
        let (g, d) = hankel_integrand(alpha, z, t);
        min_dist = min_dist.min(d);
        arc.add(g * t * (phi * w));
    }

    // rays: s = r + L e^{(π/2) sinh u}, u ∈ [-4, 2]
    let m_ray = opts.contour_nodes / 4;
    let (ua, ub) = (-4.0, 2.0);
    let h = (ub - ua) / (m_ray - 1) as f64;
    let scale = 1.0 / phi.cos().abs().max(0.05);
    let up = Complex64::from_polar(1.0, phi);
    let down = up.conj();
    let mut rays = Kahan::default();
    for j in 0..m_ray {
        let u = ua + j as f64 * h;
        let e = (0.5 * PI * u.sinh()).exp();
        let s = r + scale * e;
        let ds = scale * 0.5 * PI * u.cosh() * e * h;
        let (g_up, d_up) = hankel_integrand(alpha, z, up * s);
        let (g_dn, d_dn) = hankel_integrand(alpha, z, down * s);
        min_dist = min_dist.min(d_up).min(d_dn);
        rays.add((g_up * up - g_dn * down) * ds);
    }
    if min_dist < pole_floor {
        return Err(Error::PoleOnContour { distance: min_dist });
    }

    let i = Complex64::new(0.0, 1.0);
    let mut total = arc.sum / (2.0 * PI) + rays.sum / (2.0 * PI * i);
    for t in &geom.residue_poles {
        total += t.exp() / alpha;
    }
    if !(total.re.is_finite() && total.im.is_finite()) {
        return Err(Error::Overflow);
    }
    Ok(total)
}
