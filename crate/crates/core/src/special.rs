//! Bicomplex Gamma and Mittag-Leffler functions, evaluated componentwise
//! on the idempotent decomposition.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::bicomplex::{Bicomplex, Hyperbolic};
use crate::error::{Component, Error, Result};
use crate::gamma::cgamma;
use crate::mittag_leffler::{
    ml_contour, ml_series_detailed, ml_weierstrass, rgamma_weierstrass, MLEvalOptions,
};
use crate::quadrature::gauss_laguerre;

/// Bicomplex Mittag-Leffler parameter `α = a0 + a1 i1 + a2 i2 + a3 j`
/// with `|a3| < a0`, i.e. both idempotent components have positive real
/// part. The single value `α = 0` is also admitted; it selects the
/// geometric series `1/(1 - ξ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParameter {
    alpha: Bicomplex,
}

impl MLParameter {
    pub fn new(alpha: Bicomplex) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::DomainAlpha {
                reason: "alpha is not finite".into(),
            });
        }
        if alpha == Bicomplex::ZERO || alpha.x3.abs() < alpha.x0 {
            return Ok(MLParameter { alpha });
        }
        Err(Error::DomainAlpha {
            reason: format!(
                "need |Im_j(alpha)| < Re(alpha), got a0 = {}, a3 = {}",
                alpha.x0, alpha.x3
            ),
        })
    }

    pub fn real(a: f64) -> Result<Self> {
        MLParameter::new(Bicomplex::real(a))
    }

    pub fn alpha(&self) -> Bicomplex {
        self.alpha
    }

    /// Idempotent components `(α1, α2)`.
    pub fn components(&self) -> (Complex64, Complex64) {
        self.alpha.to_idempotent()
    }

    pub fn a0(&self) -> f64 {
        self.alpha.x0
    }

    pub fn a3(&self) -> f64 {
        self.alpha.x3
    }

    pub fn is_zero(&self) -> bool {
        self.alpha == Bicomplex::ZERO
    }

    /// `Some(a)` when `α` is the real number `a`.
    pub fn as_real(&self) -> Option<f64> {
        let a = self.alpha;
        (a.x1 == 0.0 && a.x2 == 0.0 && a.x3 == 0.0).then_some(a.x0)
    }

    /// `m α`, which satisfies the constraint whenever `α` does.
    pub fn times(&self, m: f64) -> Result<Self> {
        MLParameter::new(self.alpha.scale(m))
    }
}

impl fmt::Display for MLParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.alpha.fmt(f)
    }
}

/// Evaluation algorithm for [`bc_ml`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    #[default]
    Series,
    Weierstrass,
    Contour,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Series => "series",
            Algorithm::Weierstrass => "weierstrass",
            Algorithm::Contour => "contour",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series" => Ok(Algorithm::Series),
            "weierstrass" => Ok(Algorithm::Weierstrass),
            "contour" => Ok(Algorithm::Contour),
            _ => Err(Error::Parse(format!("unknown algorithm `{s}`"))),
        }
    }
}

/// A bicomplex value with the larger of the two component error estimates
/// (series tail, or product truncation for the Weierstrass algorithm; zero
/// for the contour algorithm, which has no cheap estimate).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcValue {
    pub value: Bicomplex,
    pub error_estimate: f64,
}

/// `E_α(ξ) = E_{α1}(ξ1) e1 + E_{α2}(ξ2) e2`.
pub fn bc_ml(alpha: &MLParameter, xi: &Bicomplex, opts: &MLEvalOptions) -> Result<Bicomplex> {
    bc_ml_with(alpha, xi, Algorithm::Series, opts).map(|v| v.value)
}

/// [`bc_ml`] with a selectable algorithm and an error estimate.
pub fn bc_ml_with(
    alpha: &MLParameter,
    xi: &Bicomplex,
    algorithm: Algorithm,
    opts: &MLEvalOptions,
) -> Result<BcValue> {
    let contour_alpha = match (algorithm, alpha.as_real()) {
        (Algorithm::Contour, Some(r)) if r > 0.0 => r,
        (Algorithm::Contour, _) => {
            return Err(Error::DomainAlpha {
                reason: "the contour algorithm needs real alpha > 0".into(),
            })
        }
        (Algorithm::Weierstrass, _) if alpha.is_zero() => {
            return Err(Error::DomainAlpha {
                reason: "the Weierstrass algorithm needs Re(alpha) > 0".into(),
            })
        }
        _ => 0.0,
    };
    let (a1, a2) = alpha.components();
    let (x1, x2) = xi.to_idempotent();
    let mut est = 0.0f64;
    let mut eval = |a: Complex64, x: Complex64| -> Result<Complex64> {
        match algorithm {
            Algorithm::Series => {
                let v = ml_series_detailed(a, x, opts)?;
                est = est.max(v.tail);
                Ok(v.value)
            }
            Algorithm::Weierstrass => {
                let v = ml_weierstrass(a, x, opts.weierstrass_factors, opts)?;
                est = est.max(v.product_error);
                Ok(v.value)
            }
            Algorithm::Contour => ml_contour(contour_alpha, x, opts),
        }
    };
    let v1 = eval(a1, x1).map_err(|e| e.in_component(Component::First))?;
    let v2 = eval(a2, x2).map_err(|e| e.in_component(Component::Second))?;
    Ok(BcValue {
        value: Bicomplex::from_idempotent(v1, v2),
        error_estimate: est,
    })
}

/// Distance from `z` to the nearest non-positive integer, and that integer
/// negated (so `z ≈ -m`).
fn nearest_pole(z: Complex64) -> (f64, u64) {
    let n = z.re.round().min(0.0);
    ((z - n).norm(), (-n) as u64)
}

fn check_gamma_poles(xi: &Bicomplex) -> Result<()> {
    let (a, b) = xi.to_idempotent();
    let ((da, m), (db, l)) = (nearest_pole(a), nearest_pole(b));
    let component = match (da <= 1e-10, db <= 1e-10) {
        (true, true) => Component::Both,
        (true, false) => Component::First,
        (false, true) => Component::Second,
        (false, false) => return Ok(()),
    };
    Err(Error::BcGammaPole { component, m, l })
}

/// `Γ(ξ) = Γ(ξ1) e1 + Γ(ξ2) e2`.
///
/// Fails with `BCGammaPole` within `1e-10` of a pole, i.e. of
/// `ξ1 = -m`, `ξ2 = -l` (`z1 = -(m+l)/2`, `z2 = i1 (l-m)/2`) for some
/// non-negative integers `m`, `l`; `m`, `l` are the nearest such pair.
pub fn bc_gamma(xi: &Bicomplex) -> Result<Bicomplex> {
    check_gamma_poles(xi)?;
    xi.try_map_idempotent(cgamma)
}

/// Gamma from the reciprocal Weierstrass product
/// `1/Γ(ξ) = ξ e^{γξ} Π_{n≤N} (1 + ξ/n) e^{-ξ/n}`, componentwise. The
/// truncation error is `O(|ξ|²/N)`.
pub fn bc_gamma_weierstrass(xi: &Bicomplex, n_factors: usize) -> Result<Bicomplex> {
    if n_factors == 0 {
        return Err(Error::InvalidArgument("n_factors must be positive".into()));
    }
    check_gamma_poles(xi)?;
    let (a, b) = xi.to_idempotent();
    let inv = |z: Complex64| 1.0 / rgamma_weierstrass(z, n_factors).0;
    Ok(Bicomplex::from_idempotent(inv(a), inv(b)))
}

/// Gamma from `∫_0^∞ e^{-p} p^{ξ-1} dp` by Gauss–Laguerre quadrature,
/// componentwise. The integrand is shifted to `p^{ξ+m-1}` with
/// `Re(ξ) + m ≥ 10` so that it is smooth at the origin, and the result is
/// divided by the Pochhammer symbol `(ξ)_m`.
pub fn bc_gamma_integral(xi: &Bicomplex, nodes: usize) -> Result<Bicomplex> {
    let rule = gauss_laguerre(nodes)?;
    let eval = |z: Complex64| -> Result<Complex64> {
        if !(z.re > 0.0) {
            return Err(Error::IntegralDomain {
                component: Component::Both,
            });
        }
        let m = (10.0 - z.re).ceil().max(0.0) as u32;
        let s = z + m as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, lw) in rule.nodes.iter().zip(&rule.ln_weights) {
            acc += ((s - 1.0) * x.ln() + lw).exp();
        }
        let poch = (0..m).fold(Complex64::new(1.0, 0.0), |p, j| p * (z + j as f64));
        Ok(acc / poch)
    };
    let (a, b) = xi.to_idempotent();
    let ga = eval(a).map_err(|_| Error::IntegralDomain {
        component: Component::First,
    })?;
    let gb = eval(b).map_err(|_| Error::IntegralDomain {
        component: Component::Second,
    })?;
    Ok(Bicomplex::from_idempotent(ga, gb))
}

/// The closed-form special cases of the bicomplex Mittag-Leffler function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialCase {
    /// `E_0(ξ) = 1/(1 - ξ)` for `N(ξ) < 1`.
    Zero,
    /// `E_1(ξ) = e^ξ`.
    One,
    /// `E_2(-ξ²) = cos ξ`.
    TwoCos,
    /// `E_2(ξ²) = cosh ξ`.
    TwoCosh,
    /// `E_3(ξ) = (1/3)(e^w + 2 e^{-w/2} cos(√3 w / 2))`, `w = ξ^{1/3}`.
    Three,
    /// `E_4(ξ) = (cos w + cosh w)/2`, `w = ξ^{1/4}`.
    Four,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 6] = [
        SpecialCase::Zero,
        SpecialCase::One,
        SpecialCase::TwoCos,
        SpecialCase::TwoCosh,
        SpecialCase::Three,
        SpecialCase::Four,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            SpecialCase::Zero => "0",
            SpecialCase::One => "1",
            SpecialCase::TwoCos => "2cos",
            SpecialCase::TwoCosh => "2cosh",
            SpecialCase::Three => "3",
            SpecialCase::Four => "4",
        }
    }

    pub fn alpha(&self) -> f64 {
        match self {
            SpecialCase::Zero => 0.0,
            SpecialCase::One => 1.0,
            SpecialCase::TwoCos | SpecialCase::TwoCosh => 2.0,
            SpecialCase::Three => 3.0,
            SpecialCase::Four => 4.0,
        }
    }

    /// The argument at which `E_α` reproduces the closed form at `ξ`.
    pub fn ml_argument(&self, xi: &Bicomplex) -> Bicomplex {
        match self {
            SpecialCase::TwoCos => -(*xi * *xi),
            SpecialCase::TwoCosh => *xi * *xi,
            _ => *xi,
        }
    }

    /// Evaluate the closed form at `ξ`.
    pub fn closed_form(&self, xi: &Bicomplex) -> Result<Bicomplex> {
        match self {
            SpecialCase::Zero => {
                let n = xi.n_xi();
                if n >= 1.0 {
                    return Err(Error::OutsideDisk { n_xi: n, radius: 1.0 });
                }
                Bicomplex::ONE.try_div(&(Bicomplex::ONE - *xi))
            }
            SpecialCase::One => Ok(xi.exp()),
            SpecialCase::TwoCos => Ok(xi.map_idempotent(|z| z.cos())),
            SpecialCase::TwoCosh => Ok(xi.map_idempotent(|z| z.cosh())),
            SpecialCase::Three => {
                let w = xi.root_q(3, 0)?;
                let s = 3f64.sqrt() / 2.0;
                Ok(w.map_idempotent(|w| {
                    ((w.exp()) + 2.0 * (-0.5 * w).exp() * (s * w).cos()) / 3.0
                }))
            }
            SpecialCase::Four => {
                let w = xi.root_q(4, 0)?;
                Ok(w.map_idempotent(|w| 0.5 * (w.cos() + w.cosh())))
            }
        }
    }
}

impl FromStr for SpecialCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SpecialCase::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown special case `{s}`")))
    }
}

/// Closed form of a special case at `ξ`.
pub fn special_case(tag: SpecialCase, xi: &Bicomplex) -> Result<Bicomplex> {
    tag.closed_form(xi)
}

/// Order `ρ = (1/Re α1) e1 + (1/Re α2) e2` and type `σ = 1` of `E_α`.
pub fn order_and_type(alpha: &MLParameter) -> Result<(Hyperbolic, f64)> {
    if alpha.is_zero() {
        return Err(Error::DomainAlpha {
            reason: "E_0 is not entire; order and type need Re(alpha) > 0".into(),
        });
    }
    let (a1, a2) = alpha.components();
    Ok((Hyperbolic::new(1.0 / a1.re, 1.0 / a2.re), 1.0))
}

/// The order in cartesian form, `(a0 - a3 j) / (a0² - a3²)`.
pub fn order_cartesian(alpha: &MLParameter) -> Result<Bicomplex> {
    if alpha.is_zero() {
        return Err(Error::DomainAlpha {
            reason: "E_0 is not entire; order and type need Re(alpha) > 0".into(),
        });
    }
    let (a0, a3) = (alpha.a0(), alpha.a3());
    let d = a0 * a0 - a3 * a3;
    Ok(Bicomplex::new(a0 / d, 0.0, 0.0, -a3 / d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn opts() -> MLEvalOptions {
        MLEvalOptions::default()
    }

    #[test]
    fn parameter_domain() {
        assert!(MLParameter::new(Bicomplex::new(2.0, 0.3, -0.2, 1.0)).is_ok());
        assert!(MLParameter::real(0.0).is_ok());
        assert!(matches!(MLParameter::real(-1.0), Err(Error::DomainAlpha { .. })));
        assert!(MLParameter::new(Bicomplex::new(1.0, 0.0, 0.0, 1.0)).is_err());
        assert!(MLParameter::new(Bicomplex::new(0.0, 1.0, 0.0, 0.0)).is_err());
        let a = MLParameter::new(Bicomplex::new(2.0, 0.0, 0.0, 1.0)).unwrap();
        assert_eq!(a.components(), (Complex64::new(3.0, 0.0), Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(bc_gamma(&Bicomplex::real(3.0)).unwrap(), Bicomplex::real(2.0));
        let xi = Bicomplex::E1 * 2.0 + Bicomplex::E2 * 3.0;
        let g = bc_gamma(&xi).unwrap();
        assert!((g - Bicomplex::new(1.5, 0.0, 0.0, -0.5)).norm() < 1e-15);
        assert_eq!(
            bc_gamma(&Bicomplex::real(-1.0)),
            Err(Error::BcGammaPole {
                component: Component::Both,
                m: 1,
                l: 1
            })
        );
        // ξ1 = -2 only: z1 = -(2+0)/2... with ξ2 = 0.5
        let xi = Bicomplex::from_idempotent(Complex64::new(-2.0, 0.0), Complex64::new(0.5, 0.0));
        assert_eq!(
            bc_gamma(&xi),
            Err(Error::BcGammaPole {
                component: Component::First,
                m: 2,
                l: 0
            })
        );
    }

    #[test]
    fn gamma_alternative_forms() {
        let g = bc_gamma_integral(&Bicomplex::real(3.0), 64).unwrap();
        assert!((g.x0 / 2.0 - 1.0).abs() < 1e-10 && g.x3.abs() < 1e-12);
        let g = bc_gamma_integral(&Bicomplex::ONE, 64).unwrap();
        assert!((g.x0 - 1.0).abs() < 1e-12);
        let g = bc_gamma_weierstrass(&Bicomplex::real(1.5), 100_000).unwrap();
        assert!((g.x0 / (PI.sqrt() / 2.0) - 1.0).abs() < 1e-4);
        assert!(matches!(
            bc_gamma_integral(&Bicomplex::J, 64),
            Err(Error::IntegralDomain { component: Component::Second })
        ));
        let xi = Bicomplex::new(2.5, 0.3, -0.7, 1.1);
        let a = bc_gamma(&xi).unwrap();
        let b = bc_gamma_integral(&xi, 64).unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm());
    }

    #[test]
    fn ml_examples() {
        let one = MLParameter::real(1.0).unwrap();
        let v = bc_ml(&one, &Bicomplex::J, &opts()).unwrap();
        assert!((v - Bicomplex::new(1f64.cosh(), 0.0, 0.0, 1f64.sinh())).norm() < 1e-15);
        let two = MLParameter::real(2.0).unwrap();
        let v = bc_ml(&two, &Bicomplex::ONE, &opts()).unwrap();
        assert!((v.x0 - 1.543_080_634_815_243_7).abs() < 1e-15);
        let zero = MLParameter::real(0.0).unwrap();
        let xi = Bicomplex::E1 * 0.3 + Bicomplex::E2 * 0.2;
        let v = bc_ml(&zero, &xi, &opts()).unwrap();
        let expect = Bicomplex::E1 * (1.0 / 0.7) + Bicomplex::E2 * (1.0 / 0.8);
        assert!((v - expect).norm() < 1e-14);
    }

    #[test]
    fn ml_algorithms_agree() {
        let a = MLParameter::real(1.5).unwrap();
        let xi = Bicomplex::new(0.4, -0.3, 0.8, 0.2);
        let s = bc_ml_with(&a, &xi, Algorithm::Series, &opts()).unwrap().value;
        let c = bc_ml_with(&a, &xi, Algorithm::Contour, &opts()).unwrap().value;
        assert!((s - c).norm() < 1e-8 * s.norm());
        let w = bc_ml_with(&a, &xi, Algorithm::Weierstrass, &opts()).unwrap();
        assert!((s - w.value).norm() < 1e-4 * s.norm());
        let complex_alpha = MLParameter::new(Bicomplex::new(1.5, 0.0, 0.0, 0.2)).unwrap();
        assert!(matches!(
            bc_ml_with(&complex_alpha, &xi, Algorithm::Contour, &opts()),
            Err(Error::DomainAlpha { .. })
        ));
    }

    #[test]
    fn errors_carry_the_component() {
        let a = MLParameter::real(0.2).unwrap();
        let xi = Bicomplex::from_idempotent(Complex64::new(0.5, 0.0), Complex64::new(60.0, 0.0));
        match bc_ml(&a, &xi, &opts()) {
            Err(Error::InComponent { component, source }) => {
                assert_eq!(component, Component::Second);
                assert!(source.is_unevaluable());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn special_cases() {
        assert_eq!(special_case(SpecialCase::Zero, &Bicomplex::ZERO).unwrap(), Bicomplex::ONE);
        let v = special_case(SpecialCase::Four, &Bicomplex::real(16.0)).unwrap();
        assert!((v.x0 - 1.673_024_427_268_244_5).abs() < 1e-14);
        let v = special_case(SpecialCase::Three, &Bicomplex::ONE).unwrap();
        assert!((v.x0 - 1.168_058_313_375_918_5).abs() < 1e-14);
        let e3 = bc_ml(&MLParameter::real(3.0).unwrap(), &Bicomplex::ONE, &opts()).unwrap();
        assert!((v - e3).norm() < 1e-10);
        assert!(matches!(
            special_case(SpecialCase::Zero, &Bicomplex::real(1.5)),
            Err(Error::OutsideDisk { .. })
        ));
        assert!(matches!(
            special_case(SpecialCase::Four, &Bicomplex::E1),
            Err(Error::NullConeRoot { .. })
        ));
        let v = special_case(SpecialCase::One, &Bicomplex::ONE).unwrap();
        assert!((v.x0 - E).abs() < 1e-15);
        assert_eq!("2cosh".parse::<SpecialCase>().unwrap(), SpecialCase::TwoCosh);
    }

    #[test]
    fn order_examples() {
        let (rho, sigma) = order_and_type(&MLParameter::real(2.0).unwrap()).unwrap();
        assert_eq!((rho, sigma), (Hyperbolic::new(0.5, 0.5), 1.0));
        assert_eq!(order_and_type(&MLParameter::real(1.0).unwrap()).unwrap().0.to_bicomplex(), Bicomplex::ONE);
        let a = MLParameter::new(Bicomplex::new(2.0, 0.0, 0.0, 1.0)).unwrap();
        let (rho, _) = order_and_type(&a).unwrap();
        assert!((rho.a - 1.0 / 3.0).abs() < 1e-16 && rho.b == 1.0);
        let cart = order_cartesian(&a).unwrap();
        assert!((cart - Bicomplex::new(2.0 / 3.0, 0.0, 0.0, -1.0 / 3.0)).norm() < 1e-16);
        assert!((cart - rho.to_bicomplex()).norm() < 1e-15);
    }
}
