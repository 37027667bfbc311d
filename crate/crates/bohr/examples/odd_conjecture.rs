//! Numeric exploration of the odd-harmonic Bohr radius.
//!
//! Proven: the odd p = 1 sum stays below 1 up to rho_1 = sqrt(sqrt 2 - 1),
//! and the log-lens family caps the radius at tanh(pi/4). Whether the sharp
//! value equals tanh(pi/4) is open; this example measures per-sample radii
//! to show where random odd maps sit. No claim is certified here.
//!
//! ```bash
//! cargo run --release --example odd_conjecture -- 200 42
//! ```

use bohr::extremal::abu_example;
use bohr::radii::{harmonic_r0, odd_harmonic_rho};
use bohr::verify::{odd_radius_search, HarnessConfig};

fn main() -> bohr::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cfg = HarnessConfig {
        samples: args.first().copied().unwrap_or(200) as usize,
        seed: args.get(1).copied().unwrap_or(42),
        ..HarnessConfig::default()
    };

    let rho_1 = odd_harmonic_rho(1.0)?.value;
    let r0 = harmonic_r0().value;
    println!("proven lower bound   rho_1 = {rho_1:.9}");
    println!("proven upper cap     r0    = {r0:.9}  (attained by the log-lens family)");

    let lens = abu_example(std::f64::consts::FRAC_PI_2, 4096, 0.9)?;
    println!("log-lens p=1 radius        = {:.9}\n", lens.p_bohr_radius_search(1.0)?.value);

    let report = odd_radius_search(1.0, &cfg)?;
    println!("{}", report.note.as_deref().unwrap_or(""));
    println!(
        "\ngap between the conjectured value and the empirical minimum: {:.3e}",
        report.worst_slack
    );
    Ok(())
}
