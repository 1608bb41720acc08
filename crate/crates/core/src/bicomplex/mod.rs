//! Bicomplex (tessarine) numbers `x0 + i1 x1 + i2 x2 + j x3`, with
//! `i1² = i2² = -1` and `j = i1 i2`, `j² = 1`.
//!
//! Values are stored as the cartesian quadruple. The complex-pair view
//! `z1 + i2 z2` and the idempotent view `ξ1 e1 + ξ2 e2`, with
//! `e1 = (1 + j)/2`, `e2 = (1 - j)/2`, are computed on demand. In the
//! idempotent view multiplication, division and every analytic function
//! act componentwise, which is how the rest of the crate evaluates things.

mod parse;

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dd::Dd;
use crate::error::{Component, Error, Result};

pub use parse::{format_cartesian, format_idempotent, parse_bicomplex};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Bicomplex {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl From<[f64; 4]> for Bicomplex {
    fn from(c: [f64; 4]) -> Self {
        Bicomplex::new(c[0], c[1], c[2], c[3])
    }
}

impl From<Bicomplex> for [f64; 4] {
    fn from(b: Bicomplex) -> Self {
        [b.x0, b.x1, b.x2, b.x3]
    }
}

impl From<f64> for Bicomplex {
    fn from(x: f64) -> Self {
        Bicomplex::real(x)
    }
}

/// Which radicand to use for the i2-modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum I2ModulusRadicand {
    /// `(|z1|² - |z2|²) + 2 Re(z1 conj(z2)) i2`.
    #[default]
    Literature,
    /// `(|z1|² - |z2|²) + 2 Re(z1 conj(z1)) i2`, taken literally.
    Strict,
}

impl Bicomplex {
    pub const ZERO: Bicomplex = Bicomplex::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Bicomplex = Bicomplex::new(1.0, 0.0, 0.0, 0.0);
    pub const I1: Bicomplex = Bicomplex::new(0.0, 1.0, 0.0, 0.0);
    pub const I2: Bicomplex = Bicomplex::new(0.0, 0.0, 1.0, 0.0);
    pub const J: Bicomplex = Bicomplex::new(0.0, 0.0, 0.0, 1.0);
    pub const E1: Bicomplex = Bicomplex::new(0.5, 0.0, 0.0, 0.5);
    pub const E2: Bicomplex = Bicomplex::new(0.5, 0.0, 0.0, -0.5);

    /// Unchecked constructor. Prefer [`Bicomplex::from_cartesian`] for
    /// untrusted input.
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Bicomplex { x0, x1, x2, x3 }
    }

    pub fn from_cartesian(x0: f64, x1: f64, x2: f64, x3: f64) -> Result<Self> {
        for (index, x) in [x0, x1, x2, x3].into_iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(Bicomplex::new(x0, x1, x2, x3))
    }

    pub const fn real(x: f64) -> Self {
        Bicomplex::new(x, 0.0, 0.0, 0.0)
    }

    /// `z1 + i2 z2` with `z1 = x0 + i1 x1`, `z2 = x2 + i1 x3`.
    pub fn from_complex_pair(z1: Complex64, z2: Complex64) -> Self {
        Bicomplex::new(z1.re, z1.im, z2.re, z2.im)
    }

    pub fn z1(&self) -> Complex64 {
        Complex64::new(self.x0, self.x1)
    }

    pub fn z2(&self) -> Complex64 {
        Complex64::new(self.x2, self.x3)
    }

    /// Idempotent coefficients `(ξ1, ξ2) = (z1 - i1 z2, z1 + i1 z2)`.
    pub fn to_idempotent(&self) -> (Complex64, Complex64) {
        (
            Complex64::new(self.x0 + self.x3, self.x1 - self.x2),
            Complex64::new(self.x0 - self.x3, self.x1 + self.x2),
        )
    }

    pub fn from_idempotent(xi1: Complex64, xi2: Complex64) -> Self {
        // z1 = (ξ1 + ξ2)/2, z2 = i1 (ξ1 - ξ2)/2
        Bicomplex::new(
            0.5 * (xi1.re + xi2.re),
            0.5 * (xi1.im + xi2.im),
            0.5 * (xi2.im - xi1.im),
            0.5 * (xi1.re - xi2.re),
        )
    }

    /// Apply a complex function to both idempotent components.
    pub fn map_idempotent(&self, mut f: impl FnMut(Complex64) -> Complex64) -> Self {
        let (a, b) = self.to_idempotent();
        Bicomplex::from_idempotent(f(a), f(b))
    }

    /// Fallible componentwise map; errors are tagged with the component.
    pub fn try_map_idempotent(
        &self,
        mut f: impl FnMut(Complex64) -> Result<Complex64>,
    ) -> Result<Self> {
        let (a, b) = self.to_idempotent();
        let fa = f(a).map_err(|e| e.in_component(Component::First))?;
        let fb = f(b).map_err(|e| e.in_component(Component::Second))?;
        Ok(Bicomplex::from_idempotent(fa, fb))
    }

    pub fn scale(&self, s: f64) -> Self {
        Bicomplex::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }

    pub fn is_finite(&self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// Scale-relative zero threshold used for null-cone tests.
    pub fn null_tol(&self) -> f64 {
        1e-13 * self.norm().max(1.0)
    }

    fn vanishing_component(&self) -> Option<Component> {
        let (a, b) = self.to_idempotent();
        let tol = self.null_tol();
        match (a.norm() <= tol, b.norm() <= tol) {
            (true, true) => Some(Component::Both),
            (true, false) => Some(Component::First),
            (false, true) => Some(Component::Second),
            (false, false) => None,
        }
    }

    /// True when `ξ` is a zero divisor (to within [`Bicomplex::null_tol`]).
    pub fn is_null_cone(&self) -> bool {
        self.vanishing_component().is_some()
    }

    pub fn try_div(&self, rhs: &Bicomplex) -> Result<Bicomplex> {
        if let Some(component) = rhs.vanishing_component() {
            return Err(Error::NullConeDivisor { component });
        }
        let (a1, a2) = self.to_idempotent();
        let (b1, b2) = rhs.to_idempotent();
        Ok(Bicomplex::from_idempotent(a1 / b1, a2 / b2))
    }

    pub fn recip(&self) -> Result<Bicomplex> {
        Bicomplex::ONE.try_div(self)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        (self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// Principal square root of `z1² + z2²`.
    pub fn i1_modulus(&self) -> Complex64 {
        let (z1, z2) = (self.z1(), self.z2());
        (z1 * z1 + z2 * z2).sqrt()
    }

    pub fn i2_modulus(&self, radicand: I2ModulusRadicand) -> Bicomplex {
        let (z1, z2) = (self.z1(), self.z2());
        let w = match radicand {
            I2ModulusRadicand::Literature => z2,
            I2ModulusRadicand::Strict => z1,
        };
        let r = Bicomplex::new(z1.norm_sqr() - z2.norm_sqr(), 0.0, 2.0 * (z1 * w.conj()).re, 0.0);
        r.map_idempotent(|c| c.sqrt())
    }

    pub fn j_modulus(&self) -> Hyperbolic {
        let (a, b) = self.to_idempotent();
        Hyperbolic::new(a.norm(), b.norm())
    }

    /// `sqrt(|ξ1| |ξ2|)`; zero exactly on the null cone.
    pub fn abs_value(&self) -> f64 {
        let (a, b) = self.to_idempotent();
        (a.norm() * b.norm()).sqrt()
    }

    /// `N(ξ) = max(|ξ1|, |ξ2|)`, the norm that governs convergence of
    /// bicomplex power series.
    pub fn n_xi(&self) -> f64 {
        let (a, b) = self.to_idempotent();
        a.norm().max(b.norm())
    }

    /// `N(ξ)` through its radical form `sqrt(‖ξ‖² + sqrt(‖ξ‖⁴ - |ξ|abs⁴))`.
    ///
    /// The inner difference cancels badly when `|ξ1| ≈ |ξ2|`, so both
    /// fourth powers are formed in double-double arithmetic.
    pub fn n_xi_radical(&self) -> f64 {
        let sq = |x: f64| Dd::from_f64(x).sqr();
        let norm2 = sq(self.x0) + sq(self.x1) + sq(self.x2) + sq(self.x3);
        // z1² + z2² = (x0² - x1² + x2² - x3²) + i1 (2 x0 x1 + 2 x2 x3)
        let re = sq(self.x0) - sq(self.x1) + sq(self.x2) - sq(self.x3);
        let im = (Dd::from_f64(self.x0) * Dd::from_f64(self.x1)
            + Dd::from_f64(self.x2) * Dd::from_f64(self.x3))
        .mul_f64(2.0);
        let abs4 = re.sqr() + im.sqr();
        let diff = (norm2.sqr() - abs4).to_f64().max(0.0);
        (norm2.to_f64() + diff.sqrt()).sqrt()
    }

    /// Hyperbolic argument `arg(ξ1) e1 + arg(ξ2) e2`, each in `(-π, π]`.
    pub fn arg_j(&self) -> Result<Hyperbolic> {
        if let Some(component) = self.vanishing_component() {
            return Err(Error::NullConeArgument { component });
        }
        let (a, b) = self.to_idempotent();
        Ok(Hyperbolic::new(principal_arg(a), principal_arg(b)))
    }

    pub fn exp(&self) -> Bicomplex {
        self.map_idempotent(|c| c.exp())
    }

    /// Integer power. Negative exponents need `ξ` off the null cone.
    pub fn pow_int(&self, n: i64) -> Result<Bicomplex> {
        match n {
            0 => Ok(Bicomplex::ONE),
            1 => Ok(*self),
            n if n > 0 => {
                let (a, b) = self.to_idempotent();
                Ok(Bicomplex::from_idempotent(powu(a, n as u64), powu(b, n as u64)))
            }
            n => {
                if let Some(component) = self.vanishing_component() {
                    return Err(Error::NullConeDivisor { component });
                }
                let (a, b) = self.to_idempotent();
                let m = n.unsigned_abs();
                Ok(Bicomplex::from_idempotent(
                    powu(a, m).inv(),
                    powu(b, m).inv(),
                ))
            }
        }
    }

    /// Branch `l` of the `q`-th root: the principal root of each idempotent
    /// component times `exp(2π l i1 / q)`. Branches `0..q` are distinct.
    pub fn root_q(&self, q: u32, l: i64) -> Result<Bicomplex> {
        if q == 0 {
            return Err(Error::InvalidArgument("root order q must be positive".into()));
        }
        if let Some(component) = self.vanishing_component() {
            return Err(Error::NullConeRoot { component });
        }
        let w = unit_root(l, q);
        let (a, b) = self.to_idempotent();
        Ok(Bicomplex::from_idempotent(
            principal_root(a, q) * w,
            principal_root(b, q) * w,
        ))
    }
}

/// `exp(2π i l / q)`, exact at quarter turns.
pub fn unit_root(l: i64, q: u32) -> Complex64 {
    let q = q as i64;
    let r = l.rem_euclid(q);
    if (4 * r) % q == 0 {
        return match 4 * r / q {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * r as f64 / q as f64)
}

/// Principal `q`-th root of a complex number.
pub(crate) fn principal_root(z: Complex64, q: u32) -> Complex64 {
    match q {
        1 => z,
        2 => z.sqrt(),
        _ => {
            if z == Complex64::new(0.0, 0.0) {
                return z;
            }
            Complex64::from_polar(z.norm().powf(1.0 / q as f64), principal_arg(z) / q as f64)
        }
    }
}

/// `arg z` in `(-π, π]`.
pub(crate) fn principal_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a == -PI {
        PI
    } else {
        a
    }
}

fn powu(mut base: Complex64, mut n: u64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        n >>= 1;
        if n > 0 {
            base = base * base;
        }
    }
    acc
}

impl Add for Bicomplex {
    type Output = Bicomplex;
    fn add(self, o: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, o: Bicomplex) {
        *self = *self + o;
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, o: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, o: Bicomplex) -> Bicomplex {
        // (z1 + i2 z2)(w1 + i2 w2) = (z1 w1 - z2 w2) + i2 (z1 w2 + z2 w1)
        let (z1, z2) = (self.z1(), self.z2());
        let (w1, w2) = (o.z1(), o.z2());
        Bicomplex::from_complex_pair(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1)
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, s: f64) -> Bicomplex {
        self.scale(s)
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cartesian(self))
    }
}

impl std::str::FromStr for Bicomplex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_bicomplex(s)
    }
}

/// Hyperbolic number `a e1 + b e2` with real `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Hyperbolic {
    pub a: f64,
    pub b: f64,
}

impl Hyperbolic {
    pub const fn new(a: f64, b: f64) -> Self {
        Hyperbolic { a, b }
    }

    /// From the cartesian form `u + j v`.
    pub fn from_cartesian(u: f64, v: f64) -> Self {
        Hyperbolic::new(u + v, u - v)
    }

    /// Cartesian form `(u, v)` of `u + j v`.
    pub fn to_cartesian(&self) -> (f64, f64) {
        (0.5 * (self.a + self.b), 0.5 * (self.a - self.b))
    }

    pub fn to_bicomplex(&self) -> Bicomplex {
        let (u, v) = self.to_cartesian();
        Bicomplex::new(u, 0.0, 0.0, v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a >= 0.0 && self.b >= 0.0
    }
}

impl fmt::Display for Hyperbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} e1 + {} e2", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn construction_and_views() {
        assert_eq!(Bicomplex::from_cartesian(0.0, 0.0, 0.0, 0.0).unwrap(), Bicomplex::ZERO);
        let e1 = Bicomplex::from_cartesian(0.5, 0.0, 0.0, 0.5).unwrap();
        assert_eq!(e1.to_idempotent(), (c(1.0, 0.0), c(0.0, 0.0)));
        let x = Bicomplex::from_cartesian(1.0, 2.0, 3.0, 4.0).unwrap();
        assert_eq!((x.z1(), x.z2()), (c(1.0, 2.0), c(3.0, 4.0)));
        assert_eq!(
            Bicomplex::from_cartesian(1.0, f64::NAN, 0.0, 0.0),
            Err(Error::NonFinite { index: 1 })
        );
        assert!(Bicomplex::from_cartesian(0.0, 0.0, 0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn idempotent_views() {
        assert_eq!(Bicomplex::J.to_idempotent(), (c(1.0, 0.0), c(-1.0, 0.0)));
        let x = Bicomplex::new(1.0, 0.0, 1.0, 0.0);
        assert_eq!(x.to_idempotent(), (c(1.0, -1.0), c(1.0, 1.0)));
        assert_eq!(Bicomplex::from_idempotent(c(1.0, 0.0), c(1.0, 0.0)), Bicomplex::ONE);
        assert_eq!(Bicomplex::from_idempotent(c(1.0, 0.0), c(-1.0, 0.0)), Bicomplex::J);
        let y = Bicomplex::from_idempotent(c(2.0, 1.0), c(0.0, 0.0));
        assert_eq!((y.z1(), y.z2()), (c(1.0, 0.5), c(-0.5, 1.0)));
        assert!(y.is_null_cone());
    }

    #[test]
    fn zero_divisors_and_products() {
        assert_eq!(Bicomplex::E1 * Bicomplex::E2, Bicomplex::ZERO);
        assert_eq!(Bicomplex::E1 * Bicomplex::E1, Bicomplex::E1);
        let a = Bicomplex::new(1.0, 0.0, 1.0, 0.0);
        let b = Bicomplex::new(1.0, 0.0, -1.0, 0.0);
        assert_eq!(a * b, Bicomplex::real(2.0));
        let (a1, a2) = a.to_idempotent();
        let (b1, b2) = b.to_idempotent();
        assert_eq!(a * b, Bicomplex::from_idempotent(a1 * b1, a2 * b2));
        assert_eq!(Bicomplex::I1 * Bicomplex::I2, Bicomplex::J);
        assert_eq!(Bicomplex::J * Bicomplex::J, Bicomplex::ONE);
    }

    #[test]
    fn division() {
        let x = Bicomplex::new(1.0, -2.0, 0.5, 3.0);
        assert_eq!(x.try_div(&Bicomplex::ONE).unwrap(), x);
        assert_eq!(Bicomplex::ONE.try_div(&Bicomplex::J).unwrap(), Bicomplex::J);
        assert_eq!(
            Bicomplex::ONE.try_div(&Bicomplex::E1),
            Err(Error::NullConeDivisor { component: Component::Second })
        );
        assert_eq!(
            Bicomplex::ONE.try_div(&Bicomplex::ZERO),
            Err(Error::NullConeDivisor { component: Component::Both })
        );
    }

    #[test]
    fn moduli() {
        assert_eq!(Bicomplex::new(1.0, 1.0, 1.0, 1.0).norm(), 2.0);
        assert_eq!(Bicomplex::J.j_modulus(), Hyperbolic::new(1.0, 1.0));
        assert_eq!(Bicomplex::J.j_modulus().to_bicomplex(), Bicomplex::ONE);
        assert_eq!(Bicomplex::E1.abs_value(), 0.0);
        // i2: z1 = 0, z2 = 1, so z1² + z2² = 1
        assert_eq!(Bicomplex::I2.i1_modulus(), c(1.0, 0.0));
        assert_eq!(Bicomplex::I1.i1_modulus(), c(0.0, 1.0));
        // 1 + i2: z1 = 1, z2 = 1, z1² + z2² = 2
        assert!((Bicomplex::new(1.0, 0.0, 1.0, 0.0).i1_modulus() - c(2f64.sqrt(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn i2_modulus_variants_differ_only_in_the_i2_radicand() {
        let x = Bicomplex::new(1.0, 2.0, 3.0, -1.0);
        let lit = x.i2_modulus(I2ModulusRadicand::Literature);
        let strict = x.i2_modulus(I2ModulusRadicand::Strict);
        // Re(z1 conj z2) = 1*3 + 2*(-1) = 1 ; Re(z1 conj z1) = 5
        let sq_lit = lit * lit;
        let sq_strict = strict * strict;
        assert!((sq_lit - Bicomplex::new(-5.0, 0.0, 2.0, 0.0)).norm() < 1e-13);
        assert!((sq_strict - Bicomplex::new(-5.0, 0.0, 10.0, 0.0)).norm() < 1e-13);
        // z2 = 0: the literature radicand is just |z1|²
        let r = Bicomplex::real(3.0).i2_modulus(I2ModulusRadicand::Literature);
        assert!((r - Bicomplex::real(3.0)).norm() < 1e-15);
    }

    #[test]
    fn n_xi_examples() {
        assert_eq!(Bicomplex::ONE.n_xi(), 1.0);
        assert_eq!(Bicomplex::J.n_xi(), 1.0);
        assert_eq!(Bicomplex::E1.n_xi(), 1.0);
        for x in [Bicomplex::ONE, Bicomplex::J, Bicomplex::E1] {
            assert!((x.n_xi_radical() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn hyperbolic_argument() {
        assert_eq!(Bicomplex::ONE.arg_j().unwrap(), Hyperbolic::new(0.0, 0.0));
        assert_eq!(Bicomplex::J.arg_j().unwrap(), Hyperbolic::new(0.0, PI));
        assert_eq!(Bicomplex::I1.arg_j().unwrap(), Hyperbolic::new(PI / 2.0, PI / 2.0));
        // -1 approached from below still maps to +π
        let x = Bicomplex::from_idempotent(c(-1.0, -0.0), c(1.0, 0.0));
        assert_eq!(x.arg_j().unwrap().a, PI);
        assert!(matches!(Bicomplex::E2.arg_j(), Err(Error::NullConeArgument { .. })));
    }

    #[test]
    fn exponential_powers_and_roots() {
        assert_eq!(Bicomplex::ZERO.exp(), Bicomplex::ONE);
        let ej = Bicomplex::J.exp();
        assert!((ej - Bicomplex::new(1f64.cosh(), 0.0, 0.0, 1f64.sinh())).norm() < 1e-15);
        assert_eq!(Bicomplex::ONE.root_q(2, 0).unwrap(), Bicomplex::ONE);
        assert_eq!(Bicomplex::ONE.root_q(2, 1).unwrap(), -Bicomplex::ONE);
        assert!(matches!(Bicomplex::E1.root_q(3, 0), Err(Error::NullConeRoot { .. })));
        let x = Bicomplex::new(0.3, -1.2, 0.7, 0.1);
        assert_eq!(x.pow_int(1).unwrap(), x);
        assert!((x.pow_int(3).unwrap() - x * x * x).norm() < 1e-14);
        assert!((x.pow_int(-2).unwrap() * x * x - Bicomplex::ONE).norm() < 1e-13);
        assert!(Bicomplex::E1.pow_int(-1).is_err());
        assert_eq!(Bicomplex::E1.pow_int(5).unwrap(), Bicomplex::E1);
    }

    #[test]
    fn roots_enumerate_exactly_q_branches() {
        let x = Bicomplex::new(0.4, 1.1, -0.3, 0.8);
        let q = 5;
        let roots: Vec<_> = (0..q).map(|l| x.root_q(q as u32, l).unwrap()).collect();
        for r in &roots {
            assert!((r.pow_int(q).unwrap() - x).norm() < 1e-13);
        }
        for i in 0..roots.len() {
            for j in 0..i {
                assert!((roots[i] - roots[j]).norm() > 1e-3);
            }
        }
        assert_eq!(x.root_q(5, 7).unwrap(), roots[2]);
    }

    #[test]
    fn hyperbolic_cartesian_roundtrip() {
        let h = Hyperbolic::from_cartesian(2.0 / 3.0, -1.0 / 3.0);
        assert!((h.a - 1.0 / 3.0).abs() < 1e-16 && (h.b - 1.0).abs() < 1e-16);
        let (u, v) = h.to_cartesian();
        assert!((u - 2.0 / 3.0).abs() < 1e-16 && (v + 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn json_is_a_coefficient_array() {
        let x = Bicomplex::new(1.0, -0.5, 2.0, 0.25);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[1.0,-0.5,2.0,0.25]");
        assert_eq!(serde_json::from_str::<Bicomplex>(&s).unwrap(), x);
    }
}
