//! Runs the full certification battery and prints one line per claim.
//!
//! Every claim is a proven statement, so failures signal implementation
//! defects; a negative control demonstrating that the harness *can* fail is
//! shown at the end.
//!
//! ```bash
//! cargo run --release --example certify_all            # 150 samples/claim
//! cargo run --release --example certify_all -- 500 7   # samples, seed
//! ```

use bohr::radii::{bohr_radius, SymmetryClass};
use bohr::verify::{certify_analytic_class, run_all, HarnessConfig};

fn main() -> bohr::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cfg = HarnessConfig {
        samples: args.first().copied().unwrap_or(150) as usize,
        seed: args.get(1).copied().unwrap_or(42),
        ..HarnessConfig::default()
    };
    println!("certifying with {} samples per claim, seed {}\n", cfg.samples, cfg.seed);

    let reports = run_all(&cfg)?;
    let mut failed = 0;
    for r in &reports {
        println!(
            "[{}] {:<36} worst_slack {:>12.3e}  ({} samples, {:.2}s)",
            if r.passed { "PASS" } else { "FAIL" },
            r.claim_id,
            r.worst_slack,
            r.samples,
            r.elapsed_secs
        );
        if !r.passed {
            failed += 1;
        }
    }
    println!("\n{} claims, {} failed", reports.len(), failed);

    // negative control: above the radius the harness must find the extremal
    let class = SymmetryClass::new(2, 1)?;
    let r = bohr_radius(class)?.value;
    let control = certify_analytic_class(class, Some(r + 0.02), &cfg)?;
    println!(
        "\nnegative control at r + 0.02: {} (slack {:.3e})",
        if control.passed { "unexpectedly passed" } else { "counterexample found, as it must be" },
        control.worst_slack
    );
    if let Some(cex) = control.counterexample {
        println!("  {cex}");
    }
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
