//! Radius and threshold formulas.
//!
//! The central object is the Bohr radius `r_{p,m}` for the class of
//! unit-bounded analytic functions supported on indices `pk + m`: the maximal
//! positive root of
//!
//! ```text
//! -6 r^{p-m} + r^{2(p-m)} + 8 r^{2p} + 1 = 0
//! ```
//!
//! solved here by grid bracketing plus bisection. The module also carries the
//! closed-form special families and all the harmonic-side radii and
//! thresholds used by the certification harness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair `(p, m)` describing functions supported on indices `pk + m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryClass {
    p: u32,
    m: u32,
}

impl SymmetryClass {
    /// Requires `p >= 1` and `0 <= m <= p`.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::domain("symmetry order p must be >= 1".to_string()));
        }
        if m > p {
            return Err(Error::domain(format!("m = {m} exceeds p = {p}")));
        }
        Ok(SymmetryClass { p, m })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

impl std::fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.m)
    }
}

/// How a radius value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    RootSolve,
    ClosedForm,
    BoundFormula,
}

/// A computed radius with bracketing and residual metadata.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub value: f64,
    pub bracket: [f64; 2],
    /// Value of the defining equation (or of `sum - 1` for searches) at `value`.
    pub residual: f64,
    pub method: SolveMethod,
}

impl RadiusResult {
    fn closed(value: f64, residual: f64) -> Self {
        RadiusResult { value, bracket: [value, value], residual, method: SolveMethod::ClosedForm }
    }
}

/// Left side of the defining equation for `r_{p,m}`.
pub fn radius_equation(class: SymmetryClass, r: f64) -> f64 {
    let d = (class.p - class.m) as i32;
    -6.0 * r.powi(d) + r.powi(2 * d) + 8.0 * r.powi(2 * class.p as i32) + 1.0
}

fn radius_equation_d1(class: SymmetryClass, r: f64) -> f64 {
    let d = (class.p - class.m) as i32;
    let p = class.p as i32;
    let mut v = 16.0 * p as f64 * r.powi(2 * p - 1);
    if d > 0 {
        v += -6.0 * d as f64 * r.powi(d - 1) + 2.0 * d as f64 * r.powi(2 * d - 1);
    }
    v
}

fn radius_equation_d2(class: SymmetryClass, r: f64) -> f64 {
    let d = (class.p - class.m) as i32;
    let p = class.p as i32;
    let mut v = 16.0 * p as f64 * (2 * p - 1) as f64 * r.powi(2 * p - 2);
    if d > 0 {
        v += -6.0 * (d * (d - 1)) as f64 * r.powi((d - 2).max(0))
            + 2.0 * (d * (2 * d - 1)) as f64 * r.powi(2 * d - 2);
    }
    v
}

const SCAN_GRID: usize = 4096;
const BRACKET_WIDTH: f64 = 1e-13;

/// Rightmost sign change of the radius equation on (0, 1], refined by
/// bisection; falls back to a double-root search (grid minima of the
/// equation polished on its derivative) when no sign change exists.
fn solve_rightmost_root(class: SymmetryClass) -> Result<RadiusResult> {
    let f = |r: f64| radius_equation(class, r);
    let grid: Vec<f64> = (0..=SCAN_GRID).map(|i| f(i as f64 / SCAN_GRID as f64)).collect();

    for i in (1..=SCAN_GRID).rev() {
        let (f_lo, f_hi) = (grid[i - 1], grid[i]);
        if f_lo == 0.0 {
            let v = (i - 1) as f64 / SCAN_GRID as f64;
            return Ok(RadiusResult {
                value: v,
                bracket: [v, v],
                residual: 0.0,
                method: SolveMethod::RootSolve,
            });
        }
        if f_lo * f_hi < 0.0 {
            let mut lo = (i - 1) as f64 / SCAN_GRID as f64;
            let mut hi = i as f64 / SCAN_GRID as f64;
            let lo_sign = f_lo.is_sign_positive();
            while hi - lo > BRACKET_WIDTH {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if fm.is_sign_positive() == lo_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let value = 0.5 * (lo + hi);
            return Ok(RadiusResult {
                value,
                bracket: [lo, hi],
                residual: f(value),
                method: SolveMethod::RootSolve,
            });
        }
    }

    // No sign change: the root, if any, is a grid-local minimum touching zero
    // (the m = 0 equation factors as a perfect square, reaching ~1e-7 at the
    // nearest grid point). Polish the rightmost such minimum with Newton
    // steps on the derivative.
    for i in (1..SCAN_GRID).rev() {
        let touches = grid[i].abs() < 1e-5 && grid[i] <= grid[i - 1] && grid[i] <= grid[i + 1];
        if !touches {
            continue;
        }
        let mut r = i as f64 / SCAN_GRID as f64;
        for _ in 0..64 {
            let d1 = radius_equation_d1(class, r);
            let d2 = radius_equation_d2(class, r);
            if d2 == 0.0 {
                break;
            }
            let step = d1 / d2;
            r -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        return Ok(RadiusResult {
            value: r,
            bracket: [r - 5e-13, r + 5e-13],
            residual: f(r),
            method: SolveMethod::RootSolve,
        });
    }

    Err(Error::Solver(format!(
        "no root of the radius equation found for class {class}; this is a bug"
    )))
}

/// Bohr radius `r_{p,m}`: maximal positive root of the defining equation.
///
/// For `m = 0` the equation is a perfect square with the double root
/// `3^{-1/p}`, which is returned in closed form.
pub fn bohr_radius(class: SymmetryClass) -> Result<RadiusResult> {
    if class.m == 0 {
        let v = 3f64.powf(-1.0 / class.p as f64);
        return Ok(RadiusResult::closed(v, radius_equation(class, v)));
    }
    solve_rightmost_root(class)
}

/// Closed-form Bohr radius for the four special families
/// `m = 0`, `p = m`, `p = 2m`, `p = 3m`; `None` otherwise.
pub fn closed_form_bohr_radius(class: SymmetryClass) -> Result<Option<RadiusResult>> {
    let (p, m) = (class.p, class.m);
    let value = if m == 0 {
        3f64.powf(-1.0 / p as f64)
    } else if p == m {
        2f64.powf(-1.0 / (2.0 * m as f64))
    } else if p == 2 * m {
        let r2 = bohr_radius(SymmetryClass::new(2, 1)?)?.value;
        r2.powf(1.0 / m as f64)
    } else if p == 3 * m {
        ((7.0 + 17f64.sqrt()) / 16.0).powf(1.0 / (2.0 * m as f64))
    } else {
        return Ok(None);
    };
    Ok(Some(RadiusResult::closed(value, radius_equation(class, value))))
}

/// Parameter `a` of the extremal function `z^m (z^p - a)/(1 - a z^p)`:
/// `a = (1 - sqrt(1 - r^{2p}) / sqrt 2) / r^p` at `r = r_{p,m}`.
///
/// Degenerates to `a = 1` exactly when `m = 0` (the classical case, where no
/// strict extremal exists and the formula yields a unimodular constant).
pub fn extremal_parameter(class: SymmetryClass) -> Result<f64> {
    let r = bohr_radius(class)?.value;
    let rp = r.powi(class.p as i32);
    let a = (1.0 - (1.0 - rp * rp).sqrt() / std::f64::consts::SQRT_2) / rp;
    Ok(a.clamp(0.0, 1.0))
}

/// Radius below which `|h| + |g| <= 1` holds for every unit-bounded harmonic
/// map `h + conj(g)` with `f(0) = 0`: `tanh(pi/4) = 0.6557942...`.
pub fn harmonic_r0() -> RadiusResult {
    RadiusResult::closed((std::f64::consts::PI / 4.0).tanh(), 0.0)
}

/// Radius guaranteeing `|a_0| + Σ (|a_k|^p + |b_k|^p)^{1/p} r^k <= 1` for a
/// unit-bounded harmonic map with `|h(0)| = a0_abs`.
///
/// For `p in [1,2]` this is
/// `sqrt((1 - a0)/(2^{(2/p)-1} + 1 + (2^{(2/p)-1} - 1) a0))`; for `p >= 2`
/// it is `sqrt((1 - a0)/2)`.
pub fn harmonic_rp_a0(p: f64, a0_abs: f64) -> Result<RadiusResult> {
    if p < 1.0 || p.is_nan() {
        return Err(Error::domain(format!("exponent p = {p} must be >= 1")));
    }
    if !(0.0..1.0).contains(&a0_abs) {
        return Err(Error::domain(format!("|a0| = {a0_abs} outside [0, 1)")));
    }
    let value = if p <= 2.0 {
        let q = 2f64.powf(2.0 / p - 1.0);
        ((1.0 - a0_abs) / (q + 1.0 + (q - 1.0) * a0_abs)).sqrt()
    } else {
        ((1.0 - a0_abs) / 2.0).sqrt()
    };
    Ok(RadiusResult { value, bracket: [value, value], residual: 0.0, method: SolveMethod::BoundFormula })
}

/// Largest `|a_0|` for which the harmonic p-Bohr sum stays `<= 1` up to
/// `r = 1/3`: `A(p) = (8 - 2^{(2/p)-1}) / (8 + 2^{(2/p)-1})`, `p in [1,2]`.
pub fn threshold_a(p: f64) -> Result<f64> {
    if !(1.0..=2.0).contains(&p) {
        return Err(Error::domain(format!("exponent p = {p} outside [1, 2]")));
    }
    let q = 2f64.powf(2.0 / p - 1.0);
    Ok((8.0 - q) / (8.0 + q))
}

/// Upper bound for the sharp threshold:
/// `A(p) <= (pi^2 - 2^{2/p} log^2 2) / (pi^2 + 2^{2/p} log^2 2)`.
pub fn threshold_a_upper(p: f64) -> Result<f64> {
    if !(1.0..=2.0).contains(&p) {
        return Err(Error::domain(format!("exponent p = {p} outside [1, 2]")));
    }
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    let t = 2f64.powf(2.0 / p) * std::f64::consts::LN_2 * std::f64::consts::LN_2;
    Ok((pi2 - t) / (pi2 + t))
}

/// Odd-harmonic p-Bohr radius guarantee
/// `rho_p = sqrt(sqrt(4^{(2/p)-2} + 1) - 2^{(2/p)-2})` for `p in [1,2]`,
/// saturating at `rho_2 = sqrt((sqrt 5 - 1)/2)` for `p >= 2`.
pub fn odd_harmonic_rho(p: f64) -> Result<RadiusResult> {
    if p < 1.0 || p.is_nan() {
        return Err(Error::domain(format!("exponent p = {p} must be >= 1")));
    }
    let e = 2.0 / p.min(2.0) - 2.0;
    let q = 2f64.powf(e);
    let value = ((q * q + 1.0).sqrt() - q).sqrt();
    Ok(RadiusResult::closed(value, 0.0))
}

/// Bohr radius of the disk automorphism `(z + a0)/(1 + a0 z)`:
/// `1/(1 + 2 a0)`.
pub fn mobius_self_radius(a0_abs: f64) -> f64 {
    1.0 / (1.0 + 2.0 * a0_abs)
}

/// Radius above which the pair `h = (z+a)/(2 sqrt(1+a^2))`,
/// `g = (z-a)/(2 sqrt(1+a^2))` pushes its combined coefficient sum past 1:
/// `r_0(a) = sqrt(1 + a^2) - a`, computed in the cancellation-free form
/// `1/(sqrt(1 + a^2) + a)`.
pub fn pair_counterexample_radius(a: f64) -> Result<f64> {
    if a <= 0.0 || a.is_nan() {
        return Err(Error::domain(format!("pair parameter a = {a} must be > 0")));
    }
    Ok(1.0 / ((1.0 + a * a).sqrt() + a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(p: u32, m: u32) -> SymmetryClass {
        SymmetryClass::new(p, m).unwrap()
    }

    #[test]
    fn class_validation() {
        assert!(SymmetryClass::new(0, 0).is_err());
        assert!(SymmetryClass::new(2, 3).is_err());
        assert!(SymmetryClass::new(3, 3).is_ok());
    }

    #[test]
    fn classical_radius_is_one_third() {
        let r = bohr_radius(class(1, 0)).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() <= 1e-12);
        assert_eq!(r.method, SolveMethod::ClosedForm);
    }

    #[test]
    fn odd_radius_matches_reported_value() {
        let r = bohr_radius(class(2, 1)).unwrap();
        assert!((r.value - 0.789991).abs() <= 1e-5);
        assert_eq!(r.method, SolveMethod::RootSolve);
        assert!(r.bracket[1] - r.bracket[0] <= 1e-12);
        assert!(r.residual.abs() <= 1e-10);
    }

    #[test]
    fn diagonal_radius_is_inverse_sqrt_two() {
        let r = bohr_radius(class(1, 1)).unwrap();
        assert!((r.value - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-9);
    }

    #[test]
    fn three_one_radius_matches_surd() {
        let r = bohr_radius(class(3, 1)).unwrap();
        let expect = (7.0 + 17f64.sqrt()).sqrt() / 4.0;
        assert!((r.value - expect).abs() <= 1e-9);
        assert!((r.value - 0.833784).abs() <= 1e-5);
    }

    #[test]
    fn double_root_fallback_finds_the_classical_radius() {
        // bypass the m = 0 closed-form shortcut to exercise the minima scan
        let r = solve_rightmost_root(class(1, 0)).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() <= 1e-8, "got {}", r.value);
        let r = solve_rightmost_root(class(3, 0)).unwrap();
        assert!((r.value - 3f64.powf(-1.0 / 3.0)).abs() <= 1e-8);
    }

    #[test]
    fn maximality_of_the_root() {
        for (p, m) in [(2, 1), (3, 2), (5, 4)] {
            let c = class(p, m);
            let v = bohr_radius(c).unwrap().value;
            assert!(radius_equation(c, v + 1e-6) > 0.0);
            let mut r = v + 1e-4;
            while r < 1.0 {
                assert!(radius_equation(c, r) > 0.0, "({p},{m}) at {r}");
                r += 1e-3;
            }
        }
    }

    #[test]
    fn closed_forms_match_reported_values() {
        let r40 = closed_form_bohr_radius(class(4, 0)).unwrap().unwrap();
        assert!((r40.value - 0.7598357).abs() <= 1e-6);
        let r62 = closed_form_bohr_radius(class(6, 2)).unwrap().unwrap();
        assert!((r62.value - 0.913118).abs() <= 1e-5);
        assert!(closed_form_bohr_radius(class(5, 2)).unwrap().is_none());
    }

    #[test]
    fn closed_forms_agree_with_solver() {
        for (p, m) in [(1, 1), (2, 2), (4, 2), (6, 3), (3, 1), (6, 2), (2, 0), (5, 0)] {
            let c = class(p, m);
            if let Some(cf) = closed_form_bohr_radius(c).unwrap() {
                let solved = bohr_radius(c).unwrap();
                assert!(
                    (cf.value - solved.value).abs() <= 1e-9,
                    "({p},{m}): {} vs {}",
                    cf.value,
                    solved.value
                );
            }
        }
    }

    #[test]
    fn extremal_parameter_values() {
        assert!((extremal_parameter(class(2, 1)).unwrap() - 0.717045).abs() <= 1e-5);
        assert!((extremal_parameter(class(1, 0)).unwrap() - 1.0).abs() <= 1e-9);
        assert!(
            (extremal_parameter(class(1, 1)).unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs()
                <= 1e-6
        );
    }

    #[test]
    fn harmonic_r0_value_and_identity() {
        let r = harmonic_r0();
        assert!((r.value - 0.655794).abs() <= 1e-6);
        let e = (std::f64::consts::PI / 2.0).exp();
        assert!((r.value - (e - 1.0) / (e + 1.0)).abs() <= 1e-12);
    }

    #[test]
    fn harmonic_rp_a0_values() {
        assert!((harmonic_rp_a0(1.0, 0.0).unwrap().value - (1f64 / 3.0).sqrt()).abs() <= 1e-12);
        assert!(
            (harmonic_rp_a0(2.0, 0.0).unwrap().value - std::f64::consts::FRAC_1_SQRT_2).abs()
                <= 1e-12
        );
        assert!(harmonic_rp_a0(1.0, 1.0 - 1e-12).unwrap().value < 1e-5);
        assert!(harmonic_rp_a0(0.5, 0.0).is_err());
        assert!(harmonic_rp_a0(1.0, 1.0).is_err());
    }

    #[test]
    fn threshold_endpoints_are_exact() {
        assert_eq!(threshold_a(1.0).unwrap(), 0.6);
        assert_eq!(threshold_a(2.0).unwrap(), 7.0 / 9.0);
        assert!((threshold_a(4.0 / 3.0).unwrap() - 0.6996).abs() <= 1e-4);
        assert!(threshold_a(2.5).is_err());
    }

    #[test]
    fn threshold_upper_bounds() {
        assert!((threshold_a_upper(1.0).unwrap() - 0.67404).abs() <= 5e-5);
        assert!((threshold_a_upper(2.0).unwrap() - 0.82256).abs() <= 5e-5);
        for i in 0..50 {
            let p = 1.0 + i as f64 / 49.0;
            assert!(threshold_a(p).unwrap() < threshold_a_upper(p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn odd_harmonic_rho_values() {
        let r1 = odd_harmonic_rho(1.0).unwrap().value;
        assert!((r1 - (std::f64::consts::SQRT_2 - 1.0).sqrt()).abs() <= 1e-12);
        assert!((r1 - 0.643594).abs() <= 1e-6);
        let r2 = odd_harmonic_rho(2.0).unwrap().value;
        assert!((r2 - 0.786151).abs() <= 1e-6);
        assert!((r2 - ((5f64.sqrt() - 1.0) / 2.0).sqrt()).abs() <= 1e-12);
        assert_eq!(odd_harmonic_rho(5.0).unwrap().value, r2);
        assert!(r1 < harmonic_r0().value);
        assert!(r2 < 0.789991);
    }

    #[test]
    fn mobius_self_radius_values() {
        assert_eq!(mobius_self_radius(0.5), 0.5);
        assert!((mobius_self_radius(0.25) - 2.0 / 3.0).abs() <= 1e-15);
        assert!((mobius_self_radius(1e-12) - 1.0).abs() <= 1e-11);
        // shows the p >= 2 radius formula is not tight at |a0| = 1/4
        assert!(mobius_self_radius(0.25) > harmonic_rp_a0(2.0, 0.25).unwrap().value);
        // but is sharp at |a0| = 1/2
        assert!((mobius_self_radius(0.5) - harmonic_rp_a0(2.0, 0.5).unwrap().value).abs() <= 1e-15);
    }

    #[test]
    fn pair_counterexample_radius_values() {
        assert!((pair_counterexample_radius(1.0).unwrap() - (std::f64::consts::SQRT_2 - 1.0)).abs() <= 1e-12);
        assert!((pair_counterexample_radius(10.0).unwrap() - 0.0498756).abs() <= 1e-6);
        assert!((pair_counterexample_radius(1e-9).unwrap() - 1.0).abs() <= 1e-8);
        assert!(pair_counterexample_radius(100.0).unwrap() < 0.005);
        assert!(pair_counterexample_radius(0.0).is_err());
    }

    #[test]
    fn radius_result_json_shape() {
        let r = bohr_radius(class(2, 1)).unwrap();
        let json = serde_json::to_value(r).unwrap();
        assert!(json["bracket"].as_array().unwrap().len() == 2);
        assert_eq!(json["method"], "root_solve");
        let back: RadiusResult = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
