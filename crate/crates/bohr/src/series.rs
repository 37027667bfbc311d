//! Truncated power series with explicit tail accounting.
//!
//! A [`PowerSeries`] stores the first `N+1` Taylor coefficients of an
//! analytic function together with `r_max`, the largest radius at which the
//! series may be evaluated, and `tail_bound`, a proven upper bound on
//! `Σ_{k>N} |c_k| r^k` for every `r ≤ r_max`. Majorant sums computed here are
//! therefore rigorous upper bounds for the true majorant series, which is
//! what the certification harness needs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default truncation order used by convenience constructors.
pub const DEFAULT_TRUNC: usize = 256;

/// Anything that can be evaluated as an analytic function on the disk.
pub trait AnalyticFn {
    fn eval(&self, z: Complex64) -> Complex64;
}

impl<F> AnalyticFn for F
where
    F: Fn(Complex64) -> Complex64,
{
    fn eval(&self, z: Complex64) -> Complex64 {
        self(z)
    }
}

/// Truncated complex power series `Σ_{k=0}^{N} c_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
    r_max: f64,
    tail_bound: f64,
}

#[derive(Serialize, Deserialize)]
struct PowerSeriesRepr {
    coeffs: Vec<[f64; 2]>,
    trunc_order: usize,
    r_max: f64,
    tail_bound: f64,
}

impl Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PowerSeriesRepr {
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            trunc_order: self.trunc_order(),
            r_max: self.r_max,
            tail_bound: self.tail_bound,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = PowerSeriesRepr::deserialize(de)?;
        if repr.trunc_order + 1 != repr.coeffs.len() {
            return Err(serde::de::Error::custom(format!(
                "trunc_order {} does not match {} coefficients",
                repr.trunc_order,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr.coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect();
        PowerSeries::new(coeffs, repr.r_max, repr.tail_bound).map_err(serde::de::Error::custom)
    }
}

impl PowerSeries {
    /// Builds a series from explicit coefficients and tail metadata.
    pub fn new(coeffs: Vec<Complex64>, r_max: f64, tail_bound: f64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::config("power series needs at least the constant term"));
        }
        if !(r_max > 0.0 && r_max <= 1.0) {
            return Err(Error::domain(format!("r_max {r_max} outside (0, 1]")));
        }
        if !(tail_bound >= 0.0 && tail_bound.is_finite()) {
            return Err(Error::domain(format!("tail_bound {tail_bound} must be finite and >= 0")));
        }
        Ok(PowerSeries { coeffs, r_max, tail_bound })
    }

    /// A constant series with zero tail, evaluable on the whole disk.
    pub fn constant(c: Complex64) -> Self {
        PowerSeries { coeffs: vec![c], r_max: 1.0, tail_bound: 0.0 }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient at index `k` (zero beyond the truncation order).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// Majorant series `Σ |c_k| r^k` plus the declared tail bound.
    ///
    /// The result is an upper bound for the true (untruncated) majorant at
    /// `r`, valid because `tail_bound` covers every `r ≤ r_max`.
    pub fn majorant_sum(&self, r: f64) -> Result<f64> {
        if !(0.0..self.r_max).contains(&r) {
            return Err(Error::domain(format!(
                "evaluation radius {r} outside [0, {})",
                self.r_max
            )));
        }
        Ok(self.truncated_majorant(r) + self.tail_bound)
    }

    /// Truncated majorant `Σ_{k<=N} |c_k| r^k` without the tail bound.
    ///
    /// This is a lower bound for the true majorant; sharpness probes use it
    /// so that "exceeds 1" conclusions do not lean on the tail estimate.
    pub fn truncated_majorant(&self, r: f64) -> f64 {
        let mut sum = 0.0;
        let mut rk = 1.0;
        for c in &self.coeffs {
            sum += c.norm() * rk;
            rk *= r;
        }
        sum
    }

    /// Weighted coefficient square sum `Σ_{k=1}^{N} |c_k|^2 R^{pk}`.
    ///
    /// For a unit-bounded `g` this is the left side of the sharp inequality
    /// whose right side is [`weighted_l2_upper_bound`].
    pub fn weighted_coeff_l2(&self, big_r: f64, p: u32) -> Result<f64> {
        if !(big_r > 0.0 && big_r <= 1.0) {
            return Err(Error::domain(format!("R {big_r} outside (0, 1]")));
        }
        if p == 0 {
            return Err(Error::domain("symmetry order p must be >= 1".to_string()));
        }
        let w = big_r.powi(p as i32);
        let mut sum = 0.0;
        let mut wk = 1.0;
        for c in self.coeffs.iter().skip(1) {
            wk *= w;
            sum += c.norm_sqr() * wk;
        }
        Ok(sum)
    }

    /// Horner evaluation of the truncated series.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Series multiplied by a real scalar.
    pub fn scaled(&self, t: f64) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * t).collect(),
            r_max: self.r_max,
            tail_bound: self.tail_bound * t.abs(),
        }
    }

    /// Series multiplied by `z^k` (coefficients shifted up by `k`).
    ///
    /// The stored tail bound remains valid: the shifted tail at radius `r`
    /// is `r^k` times the original one.
    pub fn shifted_up(&self, k: usize) -> PowerSeries {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs, r_max: self.r_max, tail_bound: self.tail_bound }
    }
}

impl AnalyticFn for PowerSeries {
    fn eval(&self, z: Complex64) -> Complex64 {
        PowerSeries::eval(self, z)
    }
}

/// Right side of the sharp weighted coefficient inequality:
/// `R^p (1 - b0^2)^2 / (1 - b0^2 R^p)` with `b0 = |g(0)|`.
pub fn weighted_l2_upper_bound(b0_abs: f64, big_r: f64, p: u32) -> Result<f64> {
    if !(big_r > 0.0 && big_r <= 1.0) {
        return Err(Error::domain(format!("R {big_r} outside (0, 1]")));
    }
    if !(0.0..=1.0).contains(&b0_abs) {
        return Err(Error::domain(format!("|b0| {b0_abs} outside [0, 1]")));
    }
    let b2 = b0_abs * b0_abs;
    let w = big_r.powi(p as i32);
    if b2 * w >= 1.0 {
        // only reachable at |b0| = R = 1, where the bound degenerates to 0/0;
        // the limit along |b0| -> 1 is 0
        return Ok(0.0);
    }
    Ok(w * (1.0 - b2) * (1.0 - b2) / (1.0 - b2 * w))
}

/// Expansion of the symmetric disk automorphism `z^m (z^p - a)/(1 - a z^p)`.
///
/// Coefficient layout: `-a` at index `m`, then `(1 - a^2) a^{k-1}` at index
/// `pk + m` for `k >= 1`; everything else is zero. The tail bound is the
/// exact geometric remainder of this expansion evaluated at `r_max`.
///
/// The boundary value `a = 1` degenerates to the unimodular constant carried
/// at index `m`, which is the limit the classical (no-extremal) case needs.
pub fn mobius_symmetric_expand(
    a: f64,
    p: u32,
    m: u32,
    n: usize,
    r_max: f64,
) -> Result<PowerSeries> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::domain(format!("mobius parameter a = {a} outside [0, 1]")));
    }
    if p == 0 {
        return Err(Error::domain("symmetry order p must be >= 1".to_string()));
    }
    if m > p {
        return Err(Error::domain(format!("index shift m = {m} exceeds p = {p}")));
    }
    if n < m as usize {
        return Err(Error::config(format!("truncation order {n} below m = {m}")));
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[m as usize] = Complex64::new(-a, 0.0);
    let one_minus_a2 = 1.0 - a * a;
    let mut biggest_k = 0u32;
    let mut k = 1u32;
    loop {
        let idx = (p as usize) * (k as usize) + m as usize;
        if idx > n {
            break;
        }
        coeffs[idx] = Complex64::new(one_minus_a2 * a.powi(k as i32 - 1), 0.0);
        biggest_k = k;
        k += 1;
    }
    let rp = r_max.powi(p as i32);
    let tail = one_minus_a2 * a.powi(biggest_k as i32) * r_max.powi((p * biggest_k + p + m) as i32)
        / (1.0 - a * rp);
    PowerSeries::new(coeffs, r_max, tail.max(0.0))
}

/// How boundary sampling for coefficient extraction is performed.
#[derive(Debug, Clone, Copy)]
pub struct SamplingConfig {
    /// Number of Taylor coefficients to keep (truncation order).
    pub n_terms: usize,
    /// Sample count as a multiple of `n_terms`; must be at least 4.
    pub oversample: usize,
    /// Radius of the sampling circle.
    pub rho: f64,
    /// Declared evaluation limit for the extracted series.
    pub r_max: f64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        // rho = 0.7 with 8x oversampling balances aliasing decay rho^(M-k)
        // against the rho^(-k) amplification of sampling noise.
        SamplingConfig { n_terms: DEFAULT_TRUNC, oversample: 8, rho: 0.7, r_max: 0.9 }
    }
}

impl SamplingConfig {
    pub fn sample_count(&self) -> usize {
        self.n_terms * self.oversample
    }
}

/// Recovers Taylor coefficients from equally spaced samples on `|z| = rho`.
///
/// `values[j]` must be `f(rho e^{2 pi i j / M})` for `M = values.len()`, with
/// `f` analytic and bounded by 1 on the unit disk. Coefficient `k` is the
/// discrete Fourier average of `values * e^{-ik theta} / rho^k`; its aliasing
/// error is at most `rho^{M-k} / (1 - rho^M)`, and that bookkeeping plus the
/// class tail `r_max^{N+1} / (1 - r_max)` goes into the tail bound.
pub fn coeffs_from_boundary_samples(
    values: &[Complex64],
    rho: f64,
    n: usize,
    r_max: f64,
) -> Result<PowerSeries> {
    let m = values.len();
    if m < 4 * n || m == 0 {
        return Err(Error::config(format!(
            "{m} boundary samples cannot resolve {n} coefficients (need >= {})",
            4 * n
        )));
    }
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::config(format!("sampling radius rho = {rho} outside (0, 1)")));
    }
    if !(r_max > 0.0 && r_max < 1.0) {
        return Err(Error::config(format!("extraction r_max = {r_max} outside (0, 1)")));
    }

    let mut buf: Vec<Complex64> = values.to_vec();
    rustfft::FftPlanner::new().plan_fft_forward(m).process(&mut buf);

    let inv_m = 1.0 / m as f64;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut rho_k = 1.0;
    for item in buf.iter().take(n + 1) {
        coeffs.push(item * (inv_m / rho_k));
        rho_k *= rho;
    }

    // class tail from |c_k| <= 1 plus per-coefficient aliasing, both at r_max
    let rho_m = rho.powi(m as i32);
    let mut alias = 0.0;
    let mut rk = 1.0;
    for k in 0..=n {
        alias += rho.powi((m - k) as i32) / (1.0 - rho_m) * rk;
        rk *= r_max;
    }
    let class_tail = r_max.powi(n as i32 + 1) / (1.0 - r_max);
    PowerSeries::new(coeffs, r_max, class_tail + alias)
}

/// Samples `f` on the circle `|z| = cfg.rho` and extracts its coefficients.
pub fn extract_series(f: &impl AnalyticFn, cfg: &SamplingConfig) -> Result<PowerSeries> {
    let m = cfg.sample_count();
    let step = std::f64::consts::TAU / m as f64;
    let values: Vec<Complex64> = (0..m)
        .map(|j| f.eval(Complex64::from_polar(cfg.rho, step * j as f64)))
        .collect();
    coeffs_from_boundary_samples(&values, cfg.rho, cfg.n_terms, cfg.r_max)
}
