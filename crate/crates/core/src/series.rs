//! Truncated fractional power series `Σ_k c_k ξ^{μ0 + k p/q}`.
//!
//! Exponents are exact rationals, so the zeros of Gamma ratios produced by
//! differentiation are exact. Reciprocal Gammas at rational arguments are
//! reduced to `Γ` on `(0, 1]` times a product carried in double-double, so
//! series that are mathematically equal agree to a few ulps coefficient by
//! coefficient.

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bicomplex::Bicomplex;
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::gamma::rgamma_real;

pub type Rational = Ratio<i64>;

const HARD_CAP: usize = 400;
const DIVERGENCE_RUN: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct FracPowerSeries {
    p: u32,
    q: u32,
    mu0: Rational,
    coeffs: Vec<Complex64>,
}

/// Value of a series at a point with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Bicomplex,
    /// Norm estimate of the first omitted term.
    pub tail: f64,
    pub terms: usize,
}

/// `1/Γ(x)` for rational `x`: `Γ(x0) · Π (x0 + j)` with `x0 ∈ (0, 1]`,
/// exactly zero at non-positive integers.
pub fn rgamma_rational(x: Rational) -> f64 {
    if x.is_integer() && *x.numer() <= 0 {
        return 0.0;
    }
    let shift = (x - Rational::from_integer(1)).ceil();
    let x0 = x - shift;
    let g0 = match (*x0.numer(), *x0.denom()) {
        (1, 1) => 1.0,
        (1, 2) => std::f64::consts::FRAC_2_SQRT_PI / 2.0,
        (n, d) => rgamma_real(n as f64 / d as f64),
    };
    let steps = *shift.numer();
    let mut prod = Dd::from_f64(1.0);
    if steps >= 0 {
        // Γ(x) = Γ(x0) (x0)(x0+1)⋯(x-1)
        for j in 0..steps {
            prod = prod * rat_dd(x0 + Rational::from_integer(j));
        }
        g0 / prod.to_f64()
    } else {
        // Γ(x) = Γ(x0) / ((x)(x+1)⋯(x0-1))
        for j in 0..-steps {
            prod = prod * rat_dd(x + Rational::from_integer(j));
        }
        g0 * prod.to_f64()
    }
}

fn rat_dd(r: Rational) -> Dd {
    Dd::from_f64(*r.numer() as f64).div_f64(*r.denom() as f64)
}

/// Falling factorial `μ (μ-1) ⋯ (μ-n+1)` in double-double.
fn falling_factorial(mu: Rational, n: u32) -> Dd {
    let mut prod = Dd::from_f64(1.0);
    for j in 0..n {
        let f = mu - Rational::from_integer(j as i64);
        if *f.numer() == 0 {
            return Dd::ZERO;
        }
        prod = prod * rat_dd(f);
    }
    prod
}

/// Componentwise Kahan sum of bicomplex values.
#[derive(Default)]
struct KahanBc {
    sum: [f64; 4],
    c: [f64; 4],
}

impl KahanBc {
    #[allow(clippy::needless_range_loop)]
    fn add(&mut self, x: Bicomplex) {
        let x: [f64; 4] = x.into();
        for i in 0..4 {
            let y = x[i] - self.c[i];
            let t = self.sum[i] + y;
            self.c[i] = (t - self.sum[i]) - y;
            self.sum[i] = t;
        }
    }

    fn value(&self) -> Bicomplex {
        Bicomplex::from(self.sum)
    }
}

fn complex_bc(c: Complex64) -> Bicomplex {
    Bicomplex::new(c.re, c.im, 0.0, 0.0)
}

impl FracPowerSeries {
    pub fn new(p: u32, q: u32, mu0: Rational, coeffs: Vec<Complex64>) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidArgument("step p/q needs p, q >= 1".into()));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidArgument(format!("gcd({p}, {q}) != 1")));
        }
        Ok(FracPowerSeries { p, q, mu0, coeffs })
    }

    /// Coefficients `1/Γ(k p/q + 1)` for `k = 0..=n`: the series of
    /// `E_{p/q}(ξ^{p/q})` in powers of `ξ`.
    pub fn ml(p: u32, q: u32, n: usize) -> Result<Self> {
        let s = FracPowerSeries::new(p, q, Rational::from_integer(0), Vec::new())?;
        let coeffs = (0..=n)
            .map(|k| Complex64::new(rgamma_rational(s.exponent(k) + 1), 0.0))
            .collect();
        Ok(FracPowerSeries { coeffs, ..s })
    }

    /// As [`FracPowerSeries::ml`], with the length chosen for the point
    /// `ξ`: stop once `|c_k| N(ξ)^{kp/q}` drops below `1e-17` of the running
    /// majorant for three consecutive `k`, or at 400 terms.
    pub fn ml_adaptive(p: u32, q: u32, xi: &Bicomplex) -> Result<Self> {
        let r = xi.n_xi();
        let step = p as f64 / q as f64;
        let mut majorant = 0.0;
        let mut quiet = 0;
        let mut n = HARD_CAP - 1;
        for k in 0..HARD_CAP {
            let x = k as f64 * step;
            let c = rgamma_rational(Rational::new((k as i64) * p as i64, q as i64) + 1).abs();
            let t = if x == 0.0 { c } else { c * r.powf(x) };
            majorant += t;
            quiet = if t < 1e-17 * majorant { quiet + 1 } else { 0 };
            if quiet >= 3 {
                n = k;
                break;
            }
        }
        FracPowerSeries::ml(p, q, n)
    }

    /// `Σ_{k=1}^{q-1} ξ^{-kp/q} / Γ(1 - kp/q)`: the terms left over when
    /// `E_{p/q}(ξ^{p/q})` is differentiated `p` times.
    pub fn ml_derivative_remainder(p: u32, q: u32) -> Result<Self> {
        let mu0 = Rational::new(-((q as i64 - 1) * p as i64), q as i64);
        let coeffs = (1..q)
            .rev()
            .map(|k| {
                let e = Rational::new(-(k as i64 * p as i64), q as i64);
                Complex64::new(rgamma_rational(e + 1), 0.0)
            })
            .collect();
        FracPowerSeries::new(p, q, mu0, coeffs)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn mu0(&self) -> Rational {
        self.mu0
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Truncation order `N` (index of the last stored coefficient), or
    /// `None` for a series with no terms.
    pub fn truncation(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `μ0 + k p/q`.
    pub fn exponent(&self, k: usize) -> Rational {
        self.mu0 + Rational::new(k as i64 * self.p as i64, self.q as i64)
    }

    /// True when every coefficient is zero.
    pub fn is_empty(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Complex64::new(0.0, 0.0))
    }

    /// Drop leading and trailing zero coefficients.
    pub fn trimmed(&self) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let Some(first) = self.coeffs.iter().position(|c| *c != zero) else {
            return FracPowerSeries {
                coeffs: Vec::new(),
                ..self.clone()
            };
        };
        let last = self.coeffs.iter().rposition(|c| *c != zero).unwrap_or(first);
        FracPowerSeries {
            mu0: self.exponent(first),
            coeffs: self.coeffs[first..=last].to_vec(),
            ..self.clone()
        }
    }

    /// Termwise `d^n/dξ^n`: `c ξ^μ ↦ c μ(μ-1)⋯(μ-n+1) ξ^{μ-n}`. Terms whose
    /// Gamma ratio vanishes become exact zeros and stay in place.
    pub fn differentiate(&self, n: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let ff = falling_factorial(self.exponent(k), n);
                if ff.hi == 0.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(
                        (Dd::from_f64(c.re) * ff).to_f64(),
                        (Dd::from_f64(c.im) * ff).to_f64(),
                    )
                }
            })
            .collect();
        FracPowerSeries {
            p: self.p,
            q: self.q,
            mu0: self.mu0 - Rational::from_integer(n as i64),
            coeffs,
        }
    }

    pub fn scaled(&self, a: Complex64) -> Self {
        FracPowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * a).collect(),
            ..self.clone()
        }
    }

    /// Index of exponent `e` in this series' lattice, which may be negative.
    fn lattice_index(&self, e: Rational) -> Option<i64> {
        let k = (e - self.mu0) * Rational::new(self.q as i64, self.p as i64);
        k.is_integer().then(|| *k.numer())
    }

    /// `self + a · other`, with terms matched by exponent. Both series must
    /// share the step and lie on the same exponent lattice.
    pub fn axpy(&self, a: Complex64, other: &Self) -> Result<Self> {
        if (self.p, self.q) != (other.p, other.q) {
            return Err(Error::InvalidArgument("series steps differ".into()));
        }
        if self.coeffs.is_empty() {
            return Ok(other.scaled(a));
        }
        if other.coeffs.is_empty() {
            return Ok(self.clone());
        }
        let shift = self
            .lattice_index(other.mu0)
            .ok_or_else(|| Error::InvalidArgument("exponent lattices differ".into()))?;
        let lo = shift.min(0);
        let hi = (self.coeffs.len() as i64 - 1).max(shift + other.coeffs.len() as i64 - 1);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(k as i64 - lo) as usize] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(k as i64 + shift - lo) as usize] += a * c;
        }
        Ok(FracPowerSeries {
            p: self.p,
            q: self.q,
            mu0: self.exponent(0) + Rational::new(lo * self.p as i64, self.q as i64),
            coeffs,
        })
    }

    /// Largest coefficient mismatch between two series matched by exponent,
    /// relative to the larger of the two coefficients (0 when both vanish).
    /// Returns `(mismatch, exponent, self coefficient, other coefficient)`.
    pub fn coefficient_mismatch(&self, other: &Self) -> Result<(f64, Rational, Complex64, Complex64)> {
        let zero = Complex64::new(0.0, 0.0);
        let diff = self.axpy(Complex64::new(-1.0, 0.0), other)?;
        let mut worst = (0.0, diff.mu0, zero, zero);
        for k in 0..diff.coeffs.len() {
            let e = diff.exponent(k);
            let fetch = |s: &Self| {
                s.lattice_index(e)
                    .and_then(|i| usize::try_from(i).ok())
                    .and_then(|i| s.coeffs.get(i).copied())
                    .unwrap_or(zero)
            };
            let (a, b) = (fetch(self), fetch(other));
            let scale = a.norm().max(b.norm());
            let m = if scale == 0.0 { 0.0 } else { (a - b).norm() / scale };
            if m > worst.0 {
                worst = (m, e, a, b);
            }
        }
        Ok(worst)
    }

    /// Sum the series at `ξ`. Non-integer exponents need `ξ` off the null
    /// cone; powers use the principal branch componentwise.
    pub fn eval(&self, xi: &Bicomplex) -> Result<SeriesValue> {
        let zero = Complex64::new(0.0, 0.0);
        let den = self.coeffs.iter().enumerate().fold(1i64, |d, (k, _)| {
            d.lcm(self.exponent(k).denom())
        });
        let root = if den == 1 { *xi } else { xi.root_q(den as u32, 0)? };
        let mut acc = KahanBc::default();
        let mut norms: Vec<f64> = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == zero {
                continue;
            }
            let e = self.exponent(k) * den;
            let term = complex_bc(*c) * root.pow_int(*e.numer())?;
            norms.push(term.norm());
            acc.add(term);
        }
        let value = acc.value();
        if norms.len() > DIVERGENCE_RUN
            && norms[norms.len() - DIVERGENCE_RUN - 1..]
                .windows(2)
                .all(|w| w[1] > w[0])
        {
            return Err(Error::Divergent { run: DIVERGENCE_RUN });
        }
        let tail = match norms.as_slice() {
            [.., a, b] if *a > 0.0 => b * (b / a).min(1.0),
            [.., b] => *b,
            [] => 0.0,
        };
        Ok(SeriesValue {
            value,
            tail,
            terms: norms.len(),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    p: u32,
    q: u32,
    mu0: [i64; 2],
    coeffs: Vec<[f64; 2]>,
}

impl Serialize for FracPowerSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            p: self.p,
            q: self.q,
            mu0: [*self.mu0.numer(), *self.mu0.denom()],
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FracPowerSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SeriesJson::deserialize(d)?;
        if j.mu0[1] == 0 {
            return Err(serde::de::Error::custom("mu0 denominator is zero"));
        }
        FracPowerSeries::new(
            j.p,
            j.q,
            Rational::new(j.mu0[0], j.mu0[1]),
            j.coeffs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}
