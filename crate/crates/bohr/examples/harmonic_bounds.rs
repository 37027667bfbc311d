//! Harmonic p-Bohr machinery on the log-lens family: coefficient sums for
//! several exponents, the tail-bound envelope, and the radius search that
//! recovers tanh(pi/4).
//!
//! ```bash
//! cargo run --example harmonic_bounds
//! ```

use bohr::extremal::abu_example;
use bohr::harmonic::harmonic_sum_bound;
use bohr::radii::{harmonic_r0, harmonic_rp_a0, threshold_a};

fn main() -> bohr::Result<()> {
    let mu = std::f64::consts::FRAC_PI_2;
    let hc = abu_example(mu, 4096, 0.9)?;
    println!("log-lens harmonic map, mu = pi/2: a_k = 2/(pi k) = -b_k at odd k\n");

    println!("p-combined sums (|a_k|^p + |b_k|^p)^(1/p) r^k:");
    println!("      r      p=1        p=2        p=inf      bound(p=1, a0=0)");
    for r in [0.2, 0.4, 0.6, harmonic_r0().value] {
        println!(
            "  {r:.4}  {:.6}   {:.6}   {:.6}   {:.6}",
            hc.p_bohr_sum(1.0, r)?,
            hc.p_bohr_sum(2.0, r)?,
            hc.p_bohr_sum(f64::INFINITY, r)?,
            harmonic_sum_bound(1.0, 0.0, r)?,
        );
    }

    let search = hc.p_bohr_radius_search(1.0)?;
    println!(
        "\np = 1 radius search: {:.9}   (tanh(pi/4) = {:.9})",
        search.value,
        harmonic_r0().value
    );

    println!("\nradius guarantees r_p(|a0|) for a unit-bounded harmonic map:");
    for (p, a0) in [(1.0, 0.0), (1.0, 0.5), (2.0, 0.0), (2.0, 0.5), (3.0, 0.25)] {
        println!("  p = {p}, |a0| = {a0}: r <= {:.9}", harmonic_rp_a0(p, a0)?.value);
    }

    println!("\n|a0| thresholds keeping the 1/3 radius: A(1) = {:.6}, A(2) = {:.6}",
        threshold_a(1.0)?, threshold_a(2.0)?);
    Ok(())
}
