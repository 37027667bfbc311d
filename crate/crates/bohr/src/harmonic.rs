//! Coefficient machinery for bounded harmonic mappings `f = h + conj(g)`.
//!
//! [`HarmonicCoeffs`] stores the analytic-part coefficients `a_k` and the
//! co-analytic-part coefficients `b_k`. Two conventions share the type,
//! switched by `pair_mode`:
//!
//! * `pair_mode = false`: a harmonic map `h + conj(g)` with the normalization
//!   `g(0) = 0` (so `b_0 = 0`);
//! * `pair_mode = true`: a pair `(h, g)` constrained by `|h| + |g| <= 1`,
//!   where `b_0` may be nonzero.
//!
//! The p-combined sum `Σ (|a_k|^p + |b_k|^p)^{1/p} r^k` is the quantity the
//! p-Bohr radius is about; `p = infinity` is accepted as a sentinel for the
//! `max(|a_k|, |b_k|)` combination.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radii::{RadiusResult, SolveMethod};
use crate::series::PowerSeries;

/// Coefficient pair of a harmonic map (or of an `|h| + |g| <= 1` pair).
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoeffs {
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    pair_mode: bool,
    r_max: f64,
    tail_bound: f64,
}

#[derive(Serialize, Deserialize)]
struct HarmonicRepr {
    a: Vec<[f64; 2]>,
    b: Vec<[f64; 2]>,
    pair_mode: bool,
    trunc_order: usize,
}

impl Serialize for HarmonicCoeffs {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        HarmonicRepr {
            a: self.a.iter().map(|c| [c.re, c.im]).collect(),
            b: self.b.iter().map(|c| [c.re, c.im]).collect(),
            pair_mode: self.pair_mode,
            trunc_order: self.trunc_order(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for HarmonicCoeffs {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = HarmonicRepr::deserialize(de)?;
        if repr.trunc_order + 1 != repr.a.len().max(repr.b.len()) {
            return Err(serde::de::Error::custom("trunc_order does not match coefficient count"));
        }
        let a = repr.a.iter().map(|c| Complex64::new(c[0], c[1])).collect();
        let b = repr.b.iter().map(|c| Complex64::new(c[0], c[1])).collect();
        // The wire format carries no tail metadata; reconstruct the
        // conservative budget valid for any unit-bounded source at r <= 0.9.
        let r_max = 0.9;
        let tail = parseval_style_tail(repr.trunc_order, r_max);
        HarmonicCoeffs::new(a, b, repr.pair_mode, r_max, tail).map_err(serde::de::Error::custom)
    }
}

/// Tail envelope `sqrt 2 * r^{N+1} / sqrt(1 - r^2)`, valid for the p-combined
/// sum of any coefficient pair inside the unit Parseval budget.
pub fn parseval_style_tail(n: usize, r_max: f64) -> f64 {
    std::f64::consts::SQRT_2 * r_max.powi(n as i32 + 1) / (1.0 - r_max * r_max).sqrt()
}

fn validate_exponent(p: f64) -> Result<()> {
    if p >= 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("exponent p = {p} must be >= 1 (or infinity)")))
    }
}

/// `(x^p + y^p)^{1/p}` for nonnegative `x`, `y`, with `p = inf` meaning max.
fn p_combined(x: f64, y: f64, p: f64) -> f64 {
    if p.is_infinite() {
        return x.max(y);
    }
    if p == 1.0 {
        return x + y;
    }
    if p == 2.0 {
        return x.hypot(y);
    }
    let (mx, mn) = if x >= y { (x, y) } else { (y, x) };
    if mx == 0.0 {
        return 0.0;
    }
    mx * (1.0 + (mn / mx).powf(p)).powf(1.0 / p)
}

impl HarmonicCoeffs {
    /// Builds a coefficient pair; sequences are padded to a common length.
    pub fn new(
        mut a: Vec<Complex64>,
        mut b: Vec<Complex64>,
        pair_mode: bool,
        r_max: f64,
        tail_bound: f64,
    ) -> Result<Self> {
        if a.is_empty() && b.is_empty() {
            return Err(Error::config("harmonic coefficients need at least the constant term"));
        }
        let len = a.len().max(b.len());
        a.resize(len, Complex64::new(0.0, 0.0));
        b.resize(len, Complex64::new(0.0, 0.0));
        if !(r_max > 0.0 && r_max <= 1.0) {
            return Err(Error::domain(format!("r_max {r_max} outside (0, 1]")));
        }
        if !(tail_bound >= 0.0 && tail_bound.is_finite()) {
            return Err(Error::domain(format!("tail_bound {tail_bound} must be finite and >= 0")));
        }
        if !pair_mode && b[0].norm() != 0.0 {
            return Err(Error::precondition(
                "harmonic maps are normalized with g(0) = 0; set pair_mode for pairs".to_string(),
            ));
        }
        Ok(HarmonicCoeffs { a, b, pair_mode, r_max, tail_bound })
    }

    /// Embeds an analytic function as a harmonic map with `g = 0`.
    pub fn from_analytic(h: &PowerSeries) -> Self {
        HarmonicCoeffs {
            a: h.coeffs().to_vec(),
            b: vec![Complex64::new(0.0, 0.0); h.coeffs().len()],
            pair_mode: false,
            r_max: h.r_max(),
            tail_bound: h.tail_bound(),
        }
    }

    /// Builds a pair `(h, g)` with the `|h| + |g| <= 1` interpretation.
    pub fn from_pair(h: &PowerSeries, g: &PowerSeries) -> Self {
        let len = h.coeffs().len().max(g.coeffs().len());
        let mut a = h.coeffs().to_vec();
        let mut b = g.coeffs().to_vec();
        a.resize(len, Complex64::new(0.0, 0.0));
        b.resize(len, Complex64::new(0.0, 0.0));
        HarmonicCoeffs {
            a,
            b,
            pair_mode: true,
            r_max: h.r_max().min(g.r_max()),
            tail_bound: h.tail_bound() + g.tail_bound(),
        }
    }

    pub fn a(&self) -> &[Complex64] {
        &self.a
    }

    pub fn b(&self) -> &[Complex64] {
        &self.b
    }

    pub fn a_coeff(&self, k: usize) -> Complex64 {
        self.a.get(k).copied().unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn b_coeff(&self, k: usize) -> Complex64 {
        self.b.get(k).copied().unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn pair_mode(&self) -> bool {
        self.pair_mode
    }

    pub fn trunc_order(&self) -> usize {
        self.a.len() - 1
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// `|a_0|^2 + Σ_{k>=1} (|a_k|^2 + |b_k|^2)`; at most 1 for coefficients
    /// of a unit-bounded harmonic map.
    pub fn parseval_budget(&self) -> f64 {
        let mut sum = self.a[0].norm_sqr();
        for k in 1..self.a.len() {
            sum += self.a[k].norm_sqr() + self.b[k].norm_sqr();
        }
        sum
    }

    fn check_radius(&self, r: f64) -> Result<()> {
        if !(0.0..=self.r_max).contains(&r) {
            return Err(Error::domain(format!(
                "evaluation radius {r} outside [0, {}]",
                self.r_max
            )));
        }
        Ok(())
    }

    fn combined_partial(&self, start: usize, p: f64, r: f64) -> f64 {
        let mut sum = 0.0;
        let mut rk = r.powi(start as i32);
        for k in start..self.a.len() {
            sum += p_combined(self.a[k].norm(), self.b[k].norm(), p) * rk;
            rk *= r;
        }
        sum
    }

    /// p-combined coefficient sum `Σ_{k>=0} (|a_k|^p + |b_k|^p)^{1/p} r^k`
    /// plus the declared tail bound.
    pub fn p_bohr_sum(&self, p: f64, r: f64) -> Result<f64> {
        validate_exponent(p)?;
        self.check_radius(r)?;
        Ok(self.combined_partial(0, p, r) + self.tail_bound)
    }

    /// Same sum restricted to `k >= 1` (the constant term is excluded).
    pub fn p_bohr_sum_without_constant(&self, p: f64, r: f64) -> Result<f64> {
        validate_exponent(p)?;
        self.check_radius(r)?;
        Ok(self.combined_partial(1, p, r) + self.tail_bound)
    }

    /// Euclidean combined sum
    /// `sqrt(|a_0|^2 + |b_0|^2) + Σ_{k>=1} sqrt(|a_k|^2 + |b_k|^2) r^k`.
    ///
    /// Valid in pair mode (the constant term of `g` participates).
    pub fn l2_combined_sum(&self, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        Ok(self.combined_partial(0, 2.0, r) + self.tail_bound)
    }

    /// Variant of [`l2_combined_sum`](Self::l2_combined_sum) with the
    /// constant term squared: `|a_0|^2 + |b_0|^2 + Σ_{k>=1} sqrt(...) r^k`.
    /// Trading the square root for the square stretches the guaranteed
    /// radius from 1/3 to 1/2.
    pub fn l2_combined_sum_squared_constant(&self, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        let c0 = self.a[0].norm_sqr() + self.b[0].norm_sqr();
        Ok(c0 + self.combined_partial(1, 2.0, r) + self.tail_bound)
    }

    /// Pair sum `|a_0| + Σ_{k>=1} (|a_k| + |b_k|) r^k`.
    ///
    /// Requires pair mode with `g(0) = 0`: without that hypothesis the `1/3`
    /// radius claim is false (see the pair counterexample family), so the
    /// violation is reported as an error rather than silently summed.
    pub fn pair_l1_sum(&self, r: f64) -> Result<f64> {
        if !self.pair_mode {
            return Err(Error::precondition("pair_l1_sum needs a pair, not a harmonic map".to_string()));
        }
        if self.b[0].norm() != 0.0 {
            return Err(Error::precondition(
                "pair_l1_sum requires g(0) = 0; the claim fails otherwise".to_string(),
            ));
        }
        self.check_radius(r)?;
        Ok(self.a[0].norm() + self.combined_partial(1, 1.0, r) + self.tail_bound)
    }

    /// Mixed sum `Σ_{k>=1} |a_k - e^{-2 i theta} b_k| r^k` plus tail bound.
    pub fn theta_mix_l1_sum(&self, theta: f64, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        let w = Complex64::from_polar(1.0, -2.0 * theta);
        let mut sum = 0.0;
        let mut rk = r;
        for k in 1..self.a.len() {
            sum += (self.a[k] - w * self.b[k]).norm() * rk;
            rk *= r;
        }
        Ok(sum + self.tail_bound)
    }

    /// Largest `r <= r_max` with `p_bohr_sum(p, r) <= 1`, found by bisection
    /// (the sum is nondecreasing in `r`).
    ///
    /// Degenerate outcomes: if the constant term alone exceeds 1 the radius
    /// is reported as 0; if the sum never reaches 1 the result clamps to
    /// `r_max` with method `bound_formula`.
    pub fn p_bohr_radius_search(&self, p: f64) -> Result<RadiusResult> {
        validate_exponent(p)?;
        let at_zero = self.p_bohr_sum(p, 0.0)?;
        if at_zero > 1.0 {
            return Ok(RadiusResult {
                value: 0.0,
                bracket: [0.0, 0.0],
                residual: at_zero - 1.0,
                method: SolveMethod::BoundFormula,
            });
        }
        let at_max = self.p_bohr_sum(p, self.r_max)?;
        if at_max <= 1.0 {
            return Ok(RadiusResult {
                value: self.r_max,
                bracket: [self.r_max, self.r_max],
                residual: at_max - 1.0,
                method: SolveMethod::BoundFormula,
            });
        }
        let mut lo = 0.0;
        let mut hi = self.r_max;
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            if self.p_bohr_sum(p, mid)? <= 1.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let value = 0.5 * (lo + hi);
        Ok(RadiusResult {
            value,
            bracket: [lo, hi],
            residual: self.p_bohr_sum(p, value)? - 1.0,
            method: SolveMethod::RootSolve,
        })
    }
}

/// Coefficients of the convex subordination kernel
/// `K(z) = lambda + (2/pi) log((1 + xi z)/(1 - z))` with
/// `xi = e^{-i pi Im(lambda)}`: `c_0 = lambda`,
/// `c_k = (2/pi)(1 - (-xi)^k)/k`.
pub fn subordination_kernel_coeffs(lambda: Complex64, n: usize, r_max: f64) -> Result<PowerSeries> {
    if lambda.norm() >= 1.0 {
        return Err(Error::domain(format!("kernel offset |lambda| = {} outside [0, 1)", lambda.norm())));
    }
    let xi = Complex64::from_polar(1.0, -std::f64::consts::PI * lambda.im);
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(lambda);
    let mut neg_xi_pow = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        neg_xi_pow *= -xi;
        coeffs.push((1.0 - neg_xi_pow) * (2.0 / (std::f64::consts::PI * k as f64)));
    }
    // |c_k| <= (4/pi)/k
    let tail = 4.0 / (std::f64::consts::PI * (n + 1) as f64) * r_max.powi(n as i32 + 1)
        / (1.0 - r_max);
    PowerSeries::new(coeffs, r_max, tail)
}

/// `max(2^{(1/p) - 1/2}, 1)`, the exponent-dependent prefactor of the
/// harmonic sum bounds; equals 1 for `p >= 2`.
pub fn p_prefactor(p: f64) -> f64 {
    2f64.powf(1.0 / p - 0.5).max(1.0)
}

/// Bound for the non-constant part of the p-combined sum of a unit-bounded
/// harmonic map: `max(2^{(1/p)-1/2}, 1) * sqrt(1 - |a_0|^2) * r / sqrt(1 - r^2)`.
pub fn harmonic_sum_bound(p: f64, a0_abs: f64, r: f64) -> Result<f64> {
    validate_exponent(p)?;
    if !(0.0..=1.0).contains(&a0_abs) {
        return Err(Error::domain(format!("|a0| = {a0_abs} outside [0, 1]")));
    }
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain(format!("radius {r} outside [0, 1)")));
    }
    Ok(p_prefactor(p) * (1.0 - a0_abs * a0_abs).sqrt() * r / (1.0 - r * r).sqrt())
}

/// Bound for the p-combined sum of an odd unit-bounded harmonic map:
/// `max(2^{(1/p)-1/2}, 1) * r / sqrt(1 - r^4)`.
pub fn odd_harmonic_sum_bound(p: f64, r: f64) -> Result<f64> {
    validate_exponent(p)?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain(format!("radius {r} outside [0, 1)")));
    }
    Ok(p_prefactor(p) * r / (1.0 - r.powi(4)).sqrt())
}

/// Bound `sqrt 2 * r / sqrt(1 - r^2)` for the mixed sum
/// `Σ |a_k - e^{-2 i theta} b_k| r^k` of a harmonic map with `f(0) = 0`.
pub fn subordination_l1_bound(r: f64) -> f64 {
    std::f64::consts::SQRT_2 * r / (1.0 - r * r).sqrt()
}
