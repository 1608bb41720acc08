//! Numerical checks of the identities satisfied by the bicomplex
//! Mittag-Leffler and Gamma functions. Each check evaluates both sides
//! independently and returns a [`ResidualReport`].

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::bicomplex::{unit_root, Bicomplex};
use crate::error::{Component, Error, Result};
use crate::mittag_leffler::{ml_contour, ml_series, MLEvalOptions};
use crate::quadrature::gauss_laguerre_generalized;
use crate::series::FracPowerSeries;
use crate::special::{
    bc_gamma, bc_gamma_integral, bc_gamma_weierstrass, bc_ml, order_and_type, order_cartesian,
    MLParameter, SpecialCase,
};

/// Default tolerances of the asserted checks.
pub mod tol {
    pub const ALGEBRA: f64 = 1e-13;
    pub const RADICAL: f64 = 1e-12;
    pub const ROUNDTRIP: f64 = 1e-10;
    pub const SPECIAL_CASE: f64 = 1e-10;
    pub const DUPLICATION: f64 = 1e-10;
    pub const DUPLICATION_ANCHOR: f64 = 1e-12;
    pub const MULTIPLICATION: f64 = 1e-9;
    pub const LAPLACE: f64 = 1e-6;
    pub const LAPLACE_ANCHOR: f64 = 1e-10;
    pub const CONTOUR: f64 = 1e-7;
    pub const CR: f64 = 1e-7;
    pub const COEFFICIENT: f64 = 1e-13;
    pub const ODE_FD: f64 = 1e-5;
    pub const ORDER: f64 = 1e-13;
    pub const GROWTH: f64 = 0.2;
    pub const GAMMA_INTEGRAL: f64 = 1e-9;
    pub const GAMMA_WEIERSTRASS: f64 = 1e-3;
    pub const GAMMA_FUNCTIONAL: f64 = 1e-11;
    pub const DECOMPOSITION: f64 = 1e-12;
}

/// How `pass` is decided from the residuals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    /// Relative residual, or absolute when both sides have norm below 1.
    Mixed,
    Relative,
    Absolute,
}

/// One identity check: both sides, their residuals and the verdict.
/// `tolerance` and `pass` are `None` for checks that are only reported.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub identity: String,
    pub point: Vec<Bicomplex>,
    pub lhs: Bicomplex,
    pub rhs: Bicomplex,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub tolerance: Option<f64>,
    pub pass: Option<bool>,
}

impl ResidualReport {
    pub fn new(
        identity: impl Into<String>,
        point: Vec<Bicomplex>,
        lhs: Bicomplex,
        rhs: Bicomplex,
        tolerance: Option<f64>,
    ) -> Self {
        ResidualReport::with_criterion(identity, point, lhs, rhs, tolerance, Criterion::Mixed)
    }

    pub fn with_criterion(
        identity: impl Into<String>,
        point: Vec<Bicomplex>,
        lhs: Bicomplex,
        rhs: Bicomplex,
        tolerance: Option<f64>,
        criterion: Criterion,
    ) -> Self {
        let (nl, nr) = (lhs.norm(), rhs.norm());
        let abs_residual = (lhs - rhs).norm();
        let rel_residual = abs_residual / nl.max(nr).max(1e-300);
        let pass = tolerance.map(|t| {
            let r = match criterion {
                Criterion::Mixed if nl < 1.0 && nr < 1.0 => abs_residual,
                Criterion::Mixed | Criterion::Relative => rel_residual,
                Criterion::Absolute => abs_residual,
            };
            r <= t
        });
        ResidualReport {
            identity: identity.into(),
            point,
            lhs,
            rhs,
            abs_residual,
            rel_residual,
            tolerance,
            pass,
        }
    }

    /// The residual the verdict was based on, for ranking failures.
    pub fn score(&self) -> f64 {
        match self.tolerance {
            Some(t) if t > 0.0 => self.abs_residual.min(self.rel_residual) / t,
            _ => self.rel_residual,
        }
    }

    pub fn passed(&self) -> bool {
        self.pass == Some(true)
    }
}

fn alpha_point(alpha: &MLParameter) -> Bicomplex {
    alpha.alpha()
}

/// `E_{mα}(ξ^m)` against `(1/m) Σ_{h<m} E_α(ξ e^{2πh i1/m})`.
pub fn multiplication_residual(
    alpha: &MLParameter,
    m: u32,
    xi: &Bicomplex,
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let m_alpha = alpha.times(m as f64)?;
    let lhs = bc_ml(&m_alpha, &xi.pow_int(m as i64)?, opts)?;
    let mut sum = Bicomplex::ZERO;
    for h in 0..m {
        let w = unit_root(h as i64, m);
        let arg = if h == 0 { *xi } else { xi.map_idempotent(|z| z * w) };
        sum += bc_ml(alpha, &arg, opts)?;
    }
    let rhs = if m == 1 { sum } else { sum.scale(1.0 / m as f64) };
    Ok(ResidualReport::new(
        format!("multiplication m={m}"),
        vec![alpha_point(alpha), *xi],
        lhs,
        rhs,
        Some(tolerance),
    ))
}

/// `E_{2α}(ξ²)` against `½(E_α(ξ) + E_α(-ξ))`.
pub fn duplication_residual(
    alpha: &MLParameter,
    xi: &Bicomplex,
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let mut r = multiplication_residual(alpha, 2, xi, tolerance, opts)?;
    r.identity = "duplication".into();
    Ok(r)
}

fn rational_alpha(p: u32, q: u32) -> Result<MLParameter> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::InvalidArgument(format!("need coprime positive p, q, got {p}, {q}")));
    }
    MLParameter::real(p as f64 / q as f64)
}

/// The recurrence `E_{p/q}(ξ) = (1/q) Σ_{l<q} E_{1/p}(ξ^{1/q} e^{2πl i1/q})`
/// evaluated as written. Never asserted: the two sides differ in general
/// (for `q = 1` it claims `E_p = E_{1/p}`).
pub fn paper_recurrence_residual(
    p: u32,
    q: u32,
    xi: &Bicomplex,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let lhs = bc_ml(&rational_alpha(p, q)?, xi, opts)?;
    let inner = rational_alpha(1, p)?;
    let mut sum = Bicomplex::ZERO;
    for l in 0..q {
        sum += bc_ml(&inner, &xi.root_q(q, l as i64)?, opts)?;
    }
    let rhs = sum.scale(1.0 / q as f64);
    Ok(ResidualReport::new(
        format!("paper-recurrence p={p} q={q}"),
        vec![Bicomplex::real(p as f64 / q as f64), *xi],
        lhs,
        rhs,
        None,
    ))
}

/// The same `(p, q, ξ)` through the multiplication formula:
/// `E_{p/q}(ξ) = (1/q) Σ_{l<q} E_{p/q²}(ξ^{1/q} e^{2πl i1/q})`.
pub fn recurrence_multiplication_residual(
    p: u32,
    q: u32,
    xi: &Bicomplex,
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let lhs = bc_ml(&rational_alpha(p, q)?, xi, opts)?;
    let inner = MLParameter::real(p as f64 / (q as f64 * q as f64))?;
    let mut sum = Bicomplex::ZERO;
    for l in 0..q {
        sum += bc_ml(&inner, &xi.root_q(q, l as i64)?, opts)?;
    }
    let rhs = sum.scale(1.0 / q as f64);
    Ok(ResidualReport::new(
        format!("recurrence-as-multiplication p={p} q={q}"),
        vec![Bicomplex::real(p as f64 / q as f64), *xi],
        lhs,
        rhs,
        Some(tolerance),
    ))
}

/// `p/q` with `q ≤ 12` when `α` is such a fraction to rounding accuracy.
fn small_fraction(alpha: f64) -> Option<(u32, u32)> {
    (1..=12u32).find_map(|q| {
        let p = (alpha * q as f64).round();
        ((alpha * q as f64 - p).abs() <= 1e-12 * q as f64 && p >= 1.0 && p < u32::MAX as f64)
            .then_some((p as u32, q))
    })
}

/// `∫_0^∞ e^{-t} E_α(t^α z) dt` for complex `z`, `|z| < 1`.
///
/// For `α = p/q` the integrand splits by a root-of-unity filter into
/// `Σ_r t^{rp/q} h_r(t)` with each `h_r` smooth at `t = 0`, and each piece
/// gets a Gauss–Laguerre rule with weight `t^{frac(rp/q)} e^{-t}`. Other
/// `α` use the plain rule, which converges slowly. Nodes whose weight times
/// the growth bound `exp(|z|^{1/α} t)` is below `e^{-45}` are skipped.
pub fn laplace_integral(alpha: f64, z: Complex64, nodes: usize) -> Result<Complex64> {
    let (p, q) = small_fraction(alpha).unwrap_or((1, 1));
    let opts = MLEvalOptions {
        max_terms: 5000,
        cancellation_limit: f64::INFINITY,
        ..MLEvalOptions::default()
    };
    let a = Complex64::new(alpha, 0.0);
    let growth = z.norm().powf(1.0 / alpha);
    let roots: Vec<Complex64> = (0..q).map(|l| unit_root(l as i64, q)).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for r in 0..q {
        let shift = (r * p) % q;
        let beta = shift as f64 / q as f64;
        let rule = gauss_laguerre_generalized(nodes, beta)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, lw) in rule.nodes.iter().zip(&rule.ln_weights) {
            if lw + growth * t < -45.0 {
                continue;
            }
            let s = z * t.powf(alpha);
            let mut piece = Complex64::new(0.0, 0.0);
            for (l, w) in roots.iter().enumerate() {
                let e = ml_series(a, s * w, &opts)?;
                piece += e * roots[(l * (q as usize - r as usize)) % q as usize];
            }
            piece /= q as f64;
            acc += piece * (lw - beta * t.ln()).exp();
        }
        total += acc;
    }
    Ok(total)
}

/// `∫_0^∞ e^{-t} E_α(t^α ξ) dt` against `1/(1 - ξ)`, componentwise by
/// Gauss–Laguerre quadrature. Needs `N(ξ) ≤ 0.8`.
pub fn laplace_residual(
    alpha: f64,
    xi: &Bicomplex,
    nodes: usize,
    tolerance: f64,
) -> Result<ResidualReport> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::DomainAlpha {
            reason: format!("the Laplace integral needs real alpha > 0, got {alpha}"),
        });
    }
    let n = xi.n_xi();
    if n > 0.8 {
        return Err(Error::OutsideDisk { n_xi: n, radius: 0.8 });
    }
    let (x1, x2) = xi.to_idempotent();
    let i1 = laplace_integral(alpha, x1, nodes).map_err(|e| e.in_component(Component::First))?;
    let i2 = laplace_integral(alpha, x2, nodes).map_err(|e| e.in_component(Component::Second))?;
    let lhs = Bicomplex::from_idempotent(i1, i2);
    let rhs = Bicomplex::ONE.try_div(&(Bicomplex::ONE - *xi))?;
    Ok(ResidualReport::new(
        "laplace",
        vec![Bicomplex::real(alpha), *xi],
        lhs,
        rhs,
        Some(tolerance),
    ))
}

/// Contour algorithm against the series, componentwise.
pub fn contour_residual(
    alpha: f64,
    xi: &Bicomplex,
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let param = MLParameter::real(alpha)?;
    if param.is_zero() {
        return Err(Error::DomainAlpha {
            reason: "the contour algorithm needs real alpha > 0".into(),
        });
    }
    let lhs = xi.try_map_idempotent(|z| ml_contour(alpha, z, opts))?;
    let rhs = bc_ml(&param, xi, opts)?;
    Ok(ResidualReport::new(
        "contour",
        vec![Bicomplex::real(alpha), *xi],
        lhs,
        rhs,
        Some(tolerance),
    ))
}

struct CrDerivatives {
    df1_dz1: Complex64,
    df1_dz2: Complex64,
    df2_dz1: Complex64,
    df2_dz2: Complex64,
}

fn cr_derivatives(
    alpha: &MLParameter,
    z1: Complex64,
    z2: Complex64,
    h: f64,
    opts: &MLEvalOptions,
) -> Result<CrDerivatives> {
    if !(1e-7..=1e-3).contains(&h) {
        return Err(Error::InvalidArgument(format!("step {h} outside [1e-7, 1e-3]")));
    }
    let f = |a: Complex64, b: Complex64| bc_ml(alpha, &Bicomplex::from_complex_pair(a, b), opts);
    let d1 = (f(z1 + h, z2)? - f(z1 - h, z2)?).scale(0.5 / h);
    let d2 = (f(z1, z2 + h)? - f(z1, z2 - h)?).scale(0.5 / h);
    Ok(CrDerivatives {
        df1_dz1: d1.z1(),
        df2_dz1: d1.z2(),
        df1_dz2: d2.z1(),
        df2_dz2: d2.z2(),
    })
}

/// Largest residual of the Cauchy–Riemann system
/// `∂f1/∂z1 = ∂f2/∂z2`, `∂f1/∂z2 = -∂f2/∂z1` for `E_α(z1 + i2 z2) = f1 + i2 f2`,
/// by central differences with step `h ∈ [1e-7, 1e-3]`.
pub fn cr_residual(
    alpha: &MLParameter,
    z1: Complex64,
    z2: Complex64,
    h: f64,
    opts: &MLEvalOptions,
) -> Result<f64> {
    let d = cr_derivatives(alpha, z1, z2, h, opts)?;
    Ok((d.df1_dz1 - d.df2_dz2).norm().max((d.df1_dz2 + d.df2_dz1).norm()))
}

/// [`cr_residual`] as a report: `lhs = (∂f1/∂z1, ∂f1/∂z2)` and
/// `rhs = (∂f2/∂z2, -∂f2/∂z1)` as complex pairs, judged on the absolute
/// residual.
pub fn cr_report(
    alpha: &MLParameter,
    z1: Complex64,
    z2: Complex64,
    h: f64,
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let d = cr_derivatives(alpha, z1, z2, h, opts)?;
    Ok(ResidualReport::with_criterion(
        "cr",
        vec![alpha_point(alpha), Bicomplex::from_complex_pair(z1, z2)],
        Bicomplex::from_complex_pair(d.df1_dz1, d.df1_dz2),
        Bicomplex::from_complex_pair(d.df2_dz2, -d.df2_dz1),
        Some(tolerance),
        Criterion::Absolute,
    ))
}

/// Coefficient-level check that `d^p/dξ^p E_{p/q}(ξ^{p/q})` equals
/// `E_{p/q}(ξ^{p/q})` plus `Σ_{k=1}^{q-1} ξ^{-kp/q}/Γ(1-kp/q)` (no extra
/// terms when `q = 1`). The sides shown are the worst-matching coefficient.
pub fn differential_relation_report(
    p: u32,
    q: u32,
    n_terms: usize,
    tolerance: f64,
) -> Result<ResidualReport> {
    if n_terms < q as usize {
        return Err(Error::InvalidArgument("need at least q terms".into()));
    }
    let d = FracPowerSeries::ml(p, q, n_terms)?.differentiate(p);
    let base = FracPowerSeries::ml(p, q, n_terms - q as usize)?;
    let rhs = if q == 1 {
        base
    } else {
        base.axpy(Complex64::new(1.0, 0.0), &FracPowerSeries::ml_derivative_remainder(p, q)?)?
    };
    let (_, e, a, b) = d.coefficient_mismatch(&rhs)?;
    let exponent = *e.numer() as f64 / *e.denom() as f64;
    Ok(ResidualReport::with_criterion(
        format!("differential p={p} q={q}"),
        vec![Bicomplex::real(p as f64 / q as f64), Bicomplex::real(exponent)],
        Bicomplex::from_complex_pair(a, Complex64::new(0.0, 0.0)),
        Bicomplex::from_complex_pair(b, Complex64::new(0.0, 0.0)),
        Some(tolerance),
        Criterion::Relative,
    ))
}

/// The two checks of `d^n/dξ^n E_n(ξ^n) = E_n(ξ^n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OdeResidual {
    /// Termwise differentiation of the series, exact up to rounding.
    pub coefficient: ResidualReport,
    /// Central `n`-th difference with step `h` against the function.
    pub finite_difference: ResidualReport,
}

/// `n ∈ 1..=4`. The difference quotient uses the `n+1` points
/// `ξ + (n/2 - k) h`, so it is second-order accurate.
pub fn ode_residual(
    n: u32,
    xi: &Bicomplex,
    h: f64,
    coefficient_tol: f64,
    fd_tol: Option<f64>,
    opts: &MLEvalOptions,
) -> Result<OdeResidual> {
    if !(1..=4).contains(&n) {
        return Err(Error::InvalidArgument(format!("ode order {n} outside 1..=4")));
    }
    let mut coefficient = differential_relation_report(n, 1, 40, coefficient_tol)?;
    coefficient.identity = format!("ode-coefficient n={n}");
    let alpha = MLParameter::real(n as f64)?;
    let g = |x: &Bicomplex| -> Result<Bicomplex> { bc_ml(&alpha, &x.pow_int(n as i64)?, opts) };
    let mut acc = Bicomplex::ZERO;
    let mut binom = 1.0;
    for k in 0..=n {
        let offset = (n as f64 / 2.0 - k as f64) * h;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc += g(&(*xi + Bicomplex::real(offset)))?.scale(sign * binom);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    let lhs = acc.scale(1.0 / h.powi(n as i32));
    let rhs = g(xi)?;
    let finite_difference = ResidualReport::new(
        format!("ode-fd n={n}"),
        vec![*xi, Bicomplex::real(h)],
        lhs,
        rhs,
        fd_tol,
    );
    Ok(OdeResidual {
        coefficient,
        finite_difference,
    })
}

/// Closed form against `E_{α_tag}` at the mapped argument.
pub fn special_case_residual(
    tag: SpecialCase,
    xi: &Bicomplex,
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let lhs = tag.closed_form(xi)?;
    let rhs = bc_ml(&MLParameter::real(tag.alpha())?, &tag.ml_argument(xi), opts)?;
    Ok(ResidualReport::new(
        format!("special-case {}", tag.tag()),
        vec![*xi],
        lhs,
        rhs,
        Some(tolerance),
    ))
}

/// `E_α(ξ)` against the two complex evaluations `E_{α1}(ξ1)`, `E_{α2}(ξ2)`
/// recombined.
pub fn decomposition_residual(
    alpha: &MLParameter,
    xi: &Bicomplex,
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let lhs = bc_ml(alpha, xi, opts)?;
    let (a1, a2) = alpha.components();
    let (x1, x2) = xi.to_idempotent();
    let rhs = Bicomplex::from_idempotent(ml_series(a1, x1, opts)?, ml_series(a2, x2, opts)?);
    Ok(ResidualReport::new(
        "decomposition",
        vec![alpha_point(alpha), *xi],
        lhs,
        rhs,
        Some(tolerance),
    ))
}

/// `E_α(c e1)` against `E_{α1}(c) e1 + e2`.
pub fn null_cone_residual(
    alpha: &MLParameter,
    c: Complex64,
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let xi = Bicomplex::from_idempotent(c, Complex64::new(0.0, 0.0));
    let lhs = bc_ml(alpha, &xi, opts)?;
    let rhs = Bicomplex::from_idempotent(ml_series(alpha.components().0, c, opts)?, Complex64::new(1.0, 0.0));
    Ok(ResidualReport::new(
        "null-cone",
        vec![alpha_point(alpha), xi],
        lhs,
        rhs,
        Some(tolerance),
    ))
}

/// Cartesian order formula against `(1/Re α1) e1 + (1/Re α2) e2`.
pub fn order_residual(alpha: &MLParameter, tolerance: f64) -> Result<ResidualReport> {
    let (rho, _) = order_and_type(alpha)?;
    Ok(ResidualReport::new(
        "order",
        vec![alpha_point(alpha)],
        order_cartesian(alpha)?,
        rho.to_bicomplex(),
        Some(tolerance),
    ))
}

/// `Γ(ξ)` against the Gauss–Laguerre integral.
pub fn gamma_integral_residual(xi: &Bicomplex, nodes: usize, tolerance: f64) -> Result<ResidualReport> {
    Ok(ResidualReport::new(
        "gamma-integral",
        vec![*xi],
        bc_gamma(xi)?,
        bc_gamma_integral(xi, nodes)?,
        Some(tolerance),
    ))
}

/// `Γ(ξ)` against the inverted Weierstrass product.
pub fn gamma_weierstrass_residual(
    xi: &Bicomplex,
    n_factors: usize,
    tolerance: f64,
) -> Result<ResidualReport> {
    Ok(ResidualReport::new(
        "gamma-weierstrass",
        vec![*xi],
        bc_gamma(xi)?,
        bc_gamma_weierstrass(xi, n_factors)?,
        Some(tolerance),
    ))
}

/// `Γ(ξ + 1)` against `ξ Γ(ξ)`.
pub fn gamma_functional_residual(xi: &Bicomplex, tolerance: f64) -> Result<ResidualReport> {
    Ok(ResidualReport::new(
        "gamma-functional",
        vec![*xi],
        bc_gamma(&(*xi + Bicomplex::ONE))?,
        *xi * bc_gamma(xi)?,
        Some(tolerance),
    ))
}

/// `M(r) = max_θ |E_α(r e^{iθ})|` over a set of radii.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthEstimate {
    pub alpha: f64,
    pub radii: Vec<f64>,
    /// `M(r)`, or `None` where some angle could not be evaluated.
    pub max_abs: Vec<Option<f64>>,
    /// Secant slope of `ln ln M(r)` against `ln r` through the two largest
    /// usable radii.
    pub slope: Option<f64>,
}

/// Sample `|E_α|` on `angles` equally spaced rays at each radius. Rounding
/// in the series only perturbs the small values, so the cancellation guard
/// is switched off here.
pub fn growth_estimate(
    alpha: f64,
    radii: &[f64],
    angles: usize,
    opts: &MLEvalOptions,
) -> Result<GrowthEstimate> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::DomainAlpha {
            reason: format!("growth estimate needs real alpha > 0, got {alpha}"),
        });
    }
    if angles == 0 {
        return Err(Error::InvalidArgument("need at least one angle".into()));
    }
    let opts = MLEvalOptions {
        cancellation_limit: f64::INFINITY,
        ..*opts
    };
    let a = Complex64::new(alpha, 0.0);
    let max_abs: Vec<Option<f64>> = radii
        .iter()
        .map(|&r| {
            let mut m = 0.0f64;
            for j in 0..angles {
                let th = 2.0 * std::f64::consts::PI * j as f64 / angles as f64;
                match ml_series(a, Complex64::from_polar(r, th), &opts) {
                    Ok(v) => m = m.max(v.norm()),
                    Err(_) => return None,
                }
            }
            Some(m)
        })
        .collect();
    let usable: Vec<(f64, f64)> = radii
        .iter()
        .zip(&max_abs)
        .filter_map(|(&r, m)| match m {
            Some(m) if *m > std::f64::consts::E && r > 1.0 => Some((r.ln(), m.ln().ln())),
            _ => None,
        })
        .collect();
    let slope = match usable.as_slice() {
        [.., (x0, y0), (x1, y1)] if x1 != x0 => Some((y1 - y0) / (x1 - x0)),
        _ => None,
    };
    Ok(GrowthEstimate {
        alpha,
        radii: radii.to_vec(),
        max_abs,
        slope,
    })
}

/// Empirical growth slope against the order `1/α`, relative criterion.
pub fn growth_report(
    alpha: f64,
    radii: &[f64],
    tolerance: f64,
    opts: &MLEvalOptions,
) -> Result<ResidualReport> {
    let g = growth_estimate(alpha, radii, 64, opts)?;
    let slope = g.slope.unwrap_or(f64::NAN);
    let mut r = ResidualReport::with_criterion(
        "growth",
        vec![Bicomplex::real(alpha)],
        Bicomplex::real(slope),
        Bicomplex::real(1.0 / alpha),
        Some(tolerance),
        Criterion::Relative,
    );
    if g.slope.is_none() {
        r.pass = Some(false);
    }
    Ok(r)
}
