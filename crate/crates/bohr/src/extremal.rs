//! Explicit function families attaining (or breaking) the radius bounds.
//!
//! Every sharpness claim in the crate is certified by evaluating one of the
//! closed-form families below just at, and just beyond, the radius in
//! question. All families are stored as exact coefficient formulas; sampled
//! extraction is reserved for the random oracles in [`crate::verify`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::harmonic::HarmonicCoeffs;
use crate::radii::{extremal_parameter, SymmetryClass};
use crate::series::{mobius_symmetric_expand, PowerSeries};

/// Extremal function `z^m (z^p - a)/(1 - a z^p)` for the class `(p, m)`,
/// expanded with the solved parameter `a = extremal_parameter(class)`.
pub fn analytic_extremal(class: SymmetryClass, n: usize, r_max: f64) -> Result<PowerSeries> {
    let a = extremal_parameter(class)?;
    mobius_symmetric_expand(a, class.p(), class.m(), n, r_max)
}

/// Majorant profile `psi(x) = x + alpha (1 - x^2)/(1 - alpha x)`:
/// the majorant of a symmetric automorphism with constant-coefficient
/// modulus `x`, as a function of `alpha = r^p`.
pub fn majorant_profile(x: f64, alpha: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&x) && (0.0..1.0).contains(&alpha));
    x + alpha * (1.0 - x * x) / (1.0 - alpha * x)
}

/// Maximizer of the majorant profile on `[0, 1]`.
///
/// For `alpha >= 1/3` this is `x_1 = (1 - sqrt(1 - alpha^2)/sqrt 2)/alpha`;
/// for `alpha < 1/3` the profile is maximal at the right endpoint `x = 1`
/// (confirmed by brute-force scan, matching the classical limit).
pub fn majorant_profile_argmax(alpha: f64) -> f64 {
    if alpha < 1.0 / 3.0 {
        return 1.0;
    }
    ((1.0 - (1.0 - alpha * alpha).sqrt() / std::f64::consts::SQRT_2) / alpha).min(1.0)
}

/// Closed-form majorant `r^m (a + r^p (1 - a^2)/(1 - r^p a))` of the
/// symmetric automorphism family; agrees with the expanded series'
/// majorant up to truncation slack.
pub fn closed_form_majorant(class: SymmetryClass, a: f64, r: f64) -> f64 {
    let rp = r.powi(class.p() as i32);
    debug_assert!(a * rp < 1.0);
    r.powi(class.m() as i32) * majorant_profile(a, rp)
}

/// Harmonic map `(2/pi) Im(log((1+z)/(1-z))) sin(mu) + i cos(mu)`:
/// `a_0 = i cos mu`, `a_k = 2 sin(mu)/(pi k) = -b_k` at odd `k`.
pub fn abu_example(mu: f64, n: usize, r_max: f64) -> Result<HarmonicCoeffs> {
    let mut a = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut b = vec![Complex64::new(0.0, 0.0); n + 1];
    a[0] = Complex64::new(0.0, mu.cos());
    let s = mu.sin();
    for k in (1..=n).step_by(2) {
        let c = 2.0 * s / (std::f64::consts::PI * k as f64);
        a[k] = Complex64::new(c, 0.0);
        b[k] = Complex64::new(-c, 0.0);
    }
    let tail = 4.0 * s.abs() / (std::f64::consts::PI * (n + 1) as f64) * r_max.powi(n as i32 + 1)
        / (1.0 - r_max);
    HarmonicCoeffs::new(a, b, false, r_max, tail)
}

/// Pointwise value of the [`abu_example`] map.
pub fn abu_value(mu: f64, z: Complex64) -> Complex64 {
    let im_log = ((1.0 + z) / (1.0 - z)).ln().im;
    Complex64::new(2.0 / std::f64::consts::PI * im_log * mu.sin(), mu.cos())
}

/// Sharpness family for the `tanh(pi/4)` radius:
/// `f_0(z) = (2 e^{i alpha}/pi) Im(log((1 + e^{i beta} z)/(1 - e^{i beta} z)))`.
///
/// Coefficient moduli are `|a_k| = |b_k| = 2/(pi k)` at odd `k`,
/// independent of the rotations `alpha`, `beta`.
pub fn harmonic_r0_extremal(alpha: f64, beta: f64, n: usize, r_max: f64) -> Result<HarmonicCoeffs> {
    let mut a = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut b = vec![Complex64::new(0.0, 0.0); n + 1];
    let i = Complex64::new(0.0, 1.0);
    let scale = Complex64::from_polar(1.0, alpha) / (i * std::f64::consts::PI);
    for k in (1..=n).step_by(2) {
        let rot = Complex64::from_polar(2.0 / k as f64, beta * k as f64);
        a[k] = scale * rot;
        b[k] = (-scale * rot.conj()).conj();
    }
    let tail = 4.0 / (std::f64::consts::PI * (n + 1) as f64) * r_max.powi(n as i32 + 1)
        / (1.0 - r_max);
    HarmonicCoeffs::new(a, b, false, r_max, tail)
}

/// Pointwise value of the [`harmonic_r0_extremal`] map.
pub fn harmonic_r0_extremal_value(alpha: f64, beta: f64, z: Complex64) -> Complex64 {
    let w = Complex64::from_polar(1.0, beta) * z;
    let im_log = ((1.0 + w) / (1.0 - w)).ln().im;
    Complex64::from_polar(1.0, alpha) * (2.0 / std::f64::consts::PI * im_log)
}

/// The pair `h = (z + a)/(2 sqrt(1+a^2))`, `g = (z - a)/(2 sqrt(1+a^2))`.
///
/// Satisfies `|h| + |g| < 1` on the disk, yet its full combined coefficient
/// sum `(a + r)/sqrt(1 + a^2)` exceeds 1 for `r > sqrt(1+a^2) - a`; this is
/// why the pair inequality needs `g(0) = 0`.
pub fn pair_counterexample(a: f64) -> Result<(PowerSeries, PowerSeries)> {
    if a <= 0.0 || a.is_nan() {
        return Err(Error::domain(format!("pair parameter a = {a} must be > 0")));
    }
    let s = 2.0 * (1.0 + a * a).sqrt();
    let h = PowerSeries::new(
        vec![Complex64::new(a / s, 0.0), Complex64::new(1.0 / s, 0.0)],
        1.0,
        0.0,
    )?;
    let g = PowerSeries::new(
        vec![Complex64::new(-a / s, 0.0), Complex64::new(1.0 / s, 0.0)],
        1.0,
        0.0,
    )?;
    Ok((h, g))
}

/// Expansion of the disk automorphism `(z + a0)/(1 + a0 z)` for real
/// `a0 in [0, 1)`: coefficients `a0`, then `(1 - a0^2)(-a0)^{k-1}`.
pub fn mobius_a0_series(a0: f64, n: usize, r_max: f64) -> Result<PowerSeries> {
    if !(0.0..1.0).contains(&a0) {
        return Err(Error::domain(format!("a0 = {a0} outside [0, 1)")));
    }
    let mut coeffs = vec![Complex64::new(a0, 0.0)];
    let scale = 1.0 - a0 * a0;
    for k in 1..=n {
        coeffs.push(Complex64::new(scale * (-a0).powi(k as i32 - 1), 0.0));
    }
    let tail = scale * a0.powi(n as i32) * r_max.powi(n as i32 + 1) / (1.0 - a0 * r_max);
    PowerSeries::new(coeffs, r_max, tail)
}

/// Sharpness family for the vanishing-constant-term subclass
/// (`m = 0`, `a_0 = 0`): the expansion of `z^p (c - z^p)/(1 - c z^p)` with
/// `c = 1/sqrt 2`, whose majorant reaches 1 exactly at `r = 2^{-1/(2p)}`.
pub fn vanishing_a0_extremal(p: u32, n: usize, r_max: f64) -> Result<PowerSeries> {
    let series = mobius_symmetric_expand(std::f64::consts::FRAC_1_SQRT_2, p, p, n, r_max)?;
    Ok(series.scaled(-1.0))
}
