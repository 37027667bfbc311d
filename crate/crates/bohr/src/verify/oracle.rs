//! Random unit-bounded test functions.
//!
//! Analytic samples are finite Blaschke products (unit-bounded by the
//! modulus identity of their factors); harmonic samples are convex
//! combinations `t B1 + conj((1-t) z B2)`, bounded by `t + (1-t) = 1`.
//! Everything is driven by [`SplitMix64`](super::rng::SplitMix64) streams,
//! so a `(seed, index)` pair fully serializes any sample.

use num_complex::Complex64;

use super::rng::SplitMix64;
use crate::error::{Error, Result};
use crate::harmonic::{parseval_style_tail, HarmonicCoeffs};
use crate::series::{extract_series, AnalyticFn, PowerSeries, SamplingConfig};

/// Largest admissible degree for random Blaschke samples.
pub const MAX_BLASCHKE_DEGREE: usize = 8;

/// Zeros are confined to `|z| <= ZERO_RADIUS` so that coefficient
/// extraction keeps well-conditioned aliasing bounds.
pub const ZERO_RADIUS: f64 = 0.95;

/// Finite Blaschke product `rot * prod (z - z_j)/(1 - conj(z_j) z)`.
#[derive(Debug, Clone)]
pub struct BlaschkeProduct {
    zeros: Vec<Complex64>,
    rotation: Complex64,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<Complex64>, rotation: Complex64) -> Result<Self> {
        if zeros.iter().any(|z| z.norm() >= 1.0) {
            return Err(Error::domain("Blaschke zeros must lie inside the unit disk".to_string()));
        }
        if rotation.norm() == 0.0 {
            return Err(Error::domain("rotation factor must be nonzero".to_string()));
        }
        Ok(BlaschkeProduct { zeros, rotation: rotation / rotation.norm() })
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }
}

impl AnalyticFn for BlaschkeProduct {
    fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = self.rotation;
        for zj in &self.zeros {
            acc *= (z - zj) / (1.0 - zj.conj() * z);
        }
        acc
    }
}

/// `z^m g(z^p)`: pushes a unit-bounded `g` into the `(p, m)` symmetry class.
#[derive(Debug, Clone)]
pub struct Symmetrized<F> {
    inner: F,
    p: u32,
    m: u32,
}

impl<F: AnalyticFn> AnalyticFn for Symmetrized<F> {
    fn eval(&self, z: Complex64) -> Complex64 {
        z.powu(self.m) * self.inner.eval(z.powu(self.p))
    }
}

pub fn symmetrize<F: AnalyticFn>(f: F, p: u32, m: u32) -> Result<Symmetrized<F>> {
    if p == 0 || m > p {
        return Err(Error::domain(format!("invalid symmetry class ({p},{m})")));
    }
    Ok(Symmetrized { inner: f, p, m })
}

/// Disk automorphism `(z + a0)/(1 + a0 z)` as a degree-1 Blaschke product.
pub fn mobius_shift(a0: f64) -> Result<BlaschkeProduct> {
    BlaschkeProduct::new(vec![Complex64::new(-a0, 0.0)], Complex64::new(1.0, 0.0))
}

/// Random Blaschke product: `degree` zeros uniform in `|z| < 0.95` and a
/// uniform rotation.
pub fn random_blaschke(degree: usize, seed: u64) -> Result<BlaschkeProduct> {
    if degree > MAX_BLASCHKE_DEGREE {
        return Err(Error::config(format!(
            "degree {degree} exceeds the oracle limit {MAX_BLASCHKE_DEGREE}"
        )));
    }
    let mut rng = SplitMix64::stream(seed, 0);
    let rotation = Complex64::from_polar(1.0, rng.next_angle());
    let zeros = (0..degree).map(|_| rng.next_in_disk(ZERO_RADIUS)).collect();
    BlaschkeProduct::new(zeros, rotation)
}

fn harmonic_parts(seed: u64, cfg: &SamplingConfig) -> Result<(f64, PowerSeries, PowerSeries)> {
    let mut rng = SplitMix64::stream(seed, 1);
    let t = rng.next_f64();
    let d1 = rng.next_index(7);
    let d2 = rng.next_index(7);
    let b1 = random_blaschke(d1, rng.next_u64())?;
    let b2 = random_blaschke(d2, rng.next_u64())?;
    Ok((t, extract_series(&b1, cfg)?, extract_series(&b2, cfg)?))
}

/// Random unit-bounded harmonic map `t B1 + conj((1-t) z B2)`.
///
/// The `z` factor enforces the normalization `g(0) = 0`; the tail bound is
/// the Parseval/Cauchy-Schwarz envelope valid for any unit-bounded source.
pub fn random_bounded_harmonic(seed: u64, cfg: &SamplingConfig) -> Result<HarmonicCoeffs> {
    Ok(random_bounded_harmonic_variants(seed, cfg)?.0)
}

/// Same draw in two layouts: as-is, and with the analytic part also
/// multiplied by `z` so that `a_0 = 0` (still unit-bounded).
pub(crate) fn random_bounded_harmonic_variants(
    seed: u64,
    cfg: &SamplingConfig,
) -> Result<(HarmonicCoeffs, HarmonicCoeffs)> {
    let (t, c1, c2) = harmonic_parts(seed, cfg)?;
    let a = c1.scaled(t);
    let b = c2.scaled(1.0 - t).shifted_up(1);
    let tail = parseval_style_tail(b.trunc_order(), cfg.r_max);
    let plain = HarmonicCoeffs::new(a.coeffs().to_vec(), b.coeffs().to_vec(), false, cfg.r_max, tail)?;
    let a0_zero = HarmonicCoeffs::new(
        a.shifted_up(1).coeffs().to_vec(),
        b.coeffs().to_vec(),
        false,
        cfg.r_max,
        tail,
    )?;
    Ok((plain, a0_zero))
}

/// Random pair `(h, g) = (t B1, (1-t) B2)` with `|h| + |g| <= 1`;
/// `force_g0_zero` multiplies `g` by `z`.
pub fn random_pair(seed: u64, force_g0_zero: bool, cfg: &SamplingConfig) -> Result<HarmonicCoeffs> {
    let (t, c1, c2) = harmonic_parts(seed, cfg)?;
    let h = c1.scaled(t);
    let mut g = c2.scaled(1.0 - t);
    if force_g0_zero {
        g = g.shifted_up(1);
    }
    let tail = parseval_style_tail(g.trunc_order().max(h.trunc_order()), cfg.r_max);
    HarmonicCoeffs::new(h.coeffs().to_vec(), g.coeffs().to_vec(), true, cfg.r_max, tail)
}

/// Random odd unit-bounded harmonic map: both parts of a bounded sample are
/// index-doubled (`z -> z^2`) and multiplied by `z`, giving
/// `t z B1(z^2) + conj((1-t) z B2(z^2))`.
pub fn random_odd_harmonic(seed: u64, cfg: &SamplingConfig) -> Result<HarmonicCoeffs> {
    let (t, c1, c2) = harmonic_parts(seed, cfg)?;
    let n_odd = 2 * cfg.n_terms + 1;
    let mut a = vec![Complex64::new(0.0, 0.0); n_odd + 1];
    let mut b = vec![Complex64::new(0.0, 0.0); n_odd + 1];
    for k in 0..=cfg.n_terms {
        a[2 * k + 1] = c1.coeff(k) * t;
        b[2 * k + 1] = c2.coeff(k) * (1.0 - t);
    }
    let r_max_odd = cfg.r_max.sqrt().min(0.995);
    let tail = parseval_style_tail(n_odd, r_max_odd);
    HarmonicCoeffs::new(a, b, false, r_max_odd, tail)
}
