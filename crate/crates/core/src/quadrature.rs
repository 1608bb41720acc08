//! Gauss–Laguerre rules for `∫_0^∞ x^β e^{-x} f(x) dx` and Gauss–Legendre
//! rules for `∫_{-1}^{1} f(x) dx`.
//!
//! Nodes are the eigenvalues of the Laguerre Jacobi matrix (Golub–Welsch),
//! found with an implicit QL sweep and then polished by Newton steps on
//! `L_n^{(β)}`. Weights for large nodes underflow long before the nodes stop
//! mattering for growing integrands, so they are kept as logarithms,
//! from `w_i = Γ(n+β+1) / (n! x_i L_n'(x_i)²)`.
//!
//! Rules are built once per node count and shared through a global cache.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;

#[derive(Debug, Clone, PartialEq)]
pub struct GaussLaguerre {
    /// Exponent of the `x^β` weight factor.
    pub beta: f64,
    pub nodes: Vec<f64>,
    /// Natural logarithm of each weight.
    pub ln_weights: Vec<f64>,
}

impl GaussLaguerre {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Weights as plain numbers; the tail ones may be zero.
    pub fn weights(&self) -> impl Iterator<Item = f64> + '_ {
        self.ln_weights.iter().map(|l| l.exp())
    }
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e` (`e[i]` couples rows `i` and `i+1`), ascending.
fn tridiagonal_eigenvalues(mut d: Vec<f64>, e: &[f64]) -> Vec<f64> {
    let n = d.len();
    let mut e: Vec<f64> = e.iter().copied().chain(std::iter::once(0.0)).collect();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter < 60, "QL iteration failed to converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    d
}

/// `(L_n(x), L_{n-1}(x), ln scale)` for the generalized polynomials
/// `L^{(β)}`, with the true values equal to the returned pair times
/// `exp(ln scale)`.
fn laguerre_pair(n: usize, beta: f64, x: f64) -> (f64, f64, f64) {
    let (mut prev, mut cur) = (0.0, 1.0);
    let mut ln_scale = 0.0;
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + beta - x) * cur - (kf + beta) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        let a = cur.abs();
        if a > 1e150 || (a < 1e-150 && a > 0.0) {
            let s = a.ln();
            cur /= a;
            prev /= a;
            ln_scale += s;
        }
    }
    (cur, prev, ln_scale)
}

fn build(n: usize, beta: f64) -> GaussLaguerre {
    let diag: Vec<f64> = (0..n).map(|i| (2 * i + 1) as f64 + beta).collect();
    let off: Vec<f64> = (1..n).map(|i| (i as f64 * (i as f64 + beta)).sqrt()).collect();
    let mut nodes = tridiagonal_eigenvalues(diag, &off);
    let nf = n as f64;
    let ln_norm = ln_gamma(Complex64::new(nf + beta + 1.0, 0.0)).re
        - ln_gamma(Complex64::new(nf + 1.0, 0.0)).re;
    let mut ln_weights = Vec::with_capacity(n);
    for x in nodes.iter_mut() {
        for _ in 0..4 {
            let (ln, lm1, _) = laguerre_pair(n, beta, *x);
            let deriv = (nf * ln - (nf + beta) * lm1) / *x;
            if deriv == 0.0 {
                break;
            }
            let step = ln / deriv;
            *x -= step;
            if step.abs() <= 4.0 * f64::EPSILON * *x {
                break;
            }
        }
        // w = Γ(n+β+1) x / (n! (x L_n'(x))²); keeping the residual L_n(x)
        // cancels the first-order effect of the remaining node error.
        let (ln, lm1, ln_scale) = laguerre_pair(n, beta, *x);
        let xd = (nf * ln - (nf + beta) * lm1).abs();
        ln_weights.push(ln_norm + x.ln() - 2.0 * (xd.ln() + ln_scale));
    }
    GaussLaguerre {
        beta,
        nodes,
        ln_weights,
    }
}

/// `(P_n(x), P_{n-1}(x))`.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = ((2 * k + 1) as f64 * x * cur - k as f64 * prev) / (k + 1) as f64;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

fn build_legendre(n: usize) -> GaussLegendre {
    let off: Vec<f64> = (1..n)
        .map(|k| {
            let k = k as f64;
            k / (4.0 * k * k - 1.0).sqrt()
        })
        .collect();
    let mut nodes = tridiagonal_eigenvalues(vec![0.0; n], &off);
    let nf = n as f64;
    let mut weights = Vec::with_capacity(n);
    for x in nodes.iter_mut() {
        for _ in 0..4 {
            let (p, pm1) = legendre_pair(n, *x);
            let step = p / (nf * (*x * p - pm1) / (*x * *x - 1.0));
            *x -= step;
            if step.abs() <= f64::EPSILON {
                break;
            }
        }
        let (p, pm1) = legendre_pair(n, *x);
        let deriv = nf * (*x * p - pm1) / (*x * *x - 1.0);
        weights.push(2.0 / ((1.0 - *x * *x) * deriv * deriv));
    }
    GaussLegendre { nodes, weights }
}

type Cache<K, T> = RwLock<HashMap<K, Arc<T>>>;

fn cached<K, T>(
    cache: &'static OnceLock<Cache<K, T>>,
    n: usize,
    key: K,
    make: impl FnOnce() -> T,
) -> Result<Arc<T>>
where
    K: std::hash::Hash + Eq,
{
    if n == 0 || n > 2000 {
        return Err(Error::InvalidArgument(format!("node count {n} outside 1..=2000")));
    }
    let cache = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(rule) = cache.read().expect("quadrature cache poisoned").get(&key) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(make());
    let mut w = cache.write().expect("quadrature cache poisoned");
    Ok(Arc::clone(w.entry(key).or_insert(rule)))
}

/// The `n`-point Gauss–Laguerre rule, built on first use and cached.
pub fn gauss_laguerre(n: usize) -> Result<Arc<GaussLaguerre>> {
    gauss_laguerre_generalized(n, 0.0)
}

/// The `n`-point rule for the weight `x^β e^{-x}`, `β > -1`.
pub fn gauss_laguerre_generalized(n: usize, beta: f64) -> Result<Arc<GaussLaguerre>> {
    static CACHE: OnceLock<Cache<(usize, u64), GaussLaguerre>> = OnceLock::new();
    if !(beta > -1.0 && beta.is_finite()) {
        return Err(Error::InvalidArgument(format!("Laguerre exponent {beta} must exceed -1")));
    }
    // normalize -0.0 so it shares the β = 0 entry
    let beta = beta + 0.0;
    cached(&CACHE, n, (n, beta.to_bits()), || build(n, beta))
}

/// The `n`-point Gauss–Legendre rule, built on first use and cached.
pub fn gauss_legendre(n: usize) -> Result<Arc<GaussLegendre>> {
    static CACHE: OnceLock<Cache<usize, GaussLegendre>> = OnceLock::new();
    cached(&CACHE, n, n, || build_legendre(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule_is_exact() {
        let r = gauss_laguerre(2).unwrap();
        let s = 2f64.sqrt();
        assert!((r.nodes[0] - (2.0 - s)).abs() < 1e-15);
        assert!((r.nodes[1] - (2.0 + s)).abs() < 1e-14);
        let w: Vec<f64> = r.weights().collect();
        assert!((w[0] - (2.0 + s) / 4.0).abs() < 1e-15);
        assert!((w[1] - (2.0 - s) / 4.0).abs() < 1e-15);
    }

    #[test]
    fn integrates_moments() {
        for n in [8, 64, 200] {
            let r = gauss_laguerre(n).unwrap();
            let total: f64 = r.weights().sum();
            assert!((total - 1.0).abs() < 1e-13, "n={n}: {total}");
            // ∫ e^{-x} x^5 dx = 120
            let m5: f64 = r.nodes.iter().zip(r.weights()).map(|(x, w)| w * x.powi(5)).sum();
            assert!((m5 / 120.0 - 1.0).abs() < 1e-12, "n={n}: {m5}");
        }
    }

    #[test]
    fn nodes_are_sorted_and_positive() {
        let r = gauss_laguerre(200).unwrap();
        assert!(r.nodes[0] > 0.0);
        assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        // largest zero of L_200 is about 7.4e2
        assert!(r.nodes[199] > 700.0 && r.nodes[199] < 800.0);
        assert!(r.ln_weights.iter().all(|l| l.is_finite()));
    }

    #[test]
    fn exponential_integrand() {
        // ∫ e^{-x} e^{0.8x} dx = 5
        let r = gauss_laguerre(200).unwrap();
        let s: f64 = r
            .nodes
            .iter()
            .zip(&r.ln_weights)
            .map(|(x, lw)| (lw + 0.8 * x).exp())
            .sum();
        assert!((s / 5.0 - 1.0).abs() < 1e-12, "{s}");
    }

    #[test]
    fn generalized_rules() {
        // weight x^{1/2} e^{-x}: ∫ = Γ(3/2), ∫ x² = Γ(7/2)
        let r = gauss_laguerre_generalized(100, 0.5).unwrap();
        let g32 = std::f64::consts::PI.sqrt() / 2.0;
        let total: f64 = r.weights().sum();
        assert!((total / g32 - 1.0).abs() < 1e-13, "{total}");
        let m2: f64 = r.nodes.iter().zip(r.weights()).map(|(x, w)| w * x * x).sum();
        assert!((m2 / (g32 * 3.75) - 1.0).abs() < 1e-12, "{m2}");
        let r = gauss_laguerre_generalized(1, 2.0 / 3.0).unwrap();
        assert!((r.nodes[0] - 5.0 / 3.0).abs() < 1e-15);
        assert!(gauss_laguerre_generalized(10, -1.0).is_err());
        assert!(Arc::ptr_eq(
            &gauss_laguerre_generalized(7, -0.0).unwrap(),
            &gauss_laguerre(7).unwrap()
        ));
    }

    #[test]
    fn legendre_rules() {
        let r = gauss_legendre(3).unwrap();
        let x = (0.6f64).sqrt();
        assert!((r.nodes[0] + x).abs() < 1e-15 && r.nodes[1].abs() < 1e-15);
        assert!((r.weights[0] - 5.0 / 9.0).abs() < 1e-15 && (r.weights[1] - 8.0 / 9.0).abs() < 1e-15);
        let r = gauss_legendre(100).unwrap();
        let total: f64 = r.weights.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
        // ∫ e^x dx over [-1, 1]
        let s: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * x.exp()).sum();
        assert!((s - (1f64.exp() - (-1f64).exp())).abs() < 1e-14);
    }

    #[test]
    fn cache_returns_the_same_rule() {
        let a = gauss_laguerre(33).unwrap();
        let b = gauss_laguerre(33).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert!(gauss_laguerre(0).is_err());
    }
}
