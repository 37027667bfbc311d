//! Builds the extremal function of a symmetry class and walks its majorant
//! across the Bohr radius: at most 1 below, exactly 1 at the radius,
//! strictly above 1 beyond it.
//!
//! ```bash
//! cargo run --example extremal_majorant            # the odd class (2,1)
//! cargo run --example extremal_majorant -- 3 2     # any (p, m)
//! ```

use bohr::extremal::analytic_extremal;
use bohr::radii::{bohr_radius, extremal_parameter, SymmetryClass};

fn main() -> bohr::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, m) = match args.as_slice() {
        [p, m, ..] => (*p, *m),
        _ => (2, 1),
    };
    let class = SymmetryClass::new(p, m)?;
    let radius = bohr_radius(class)?;
    let a = extremal_parameter(class)?;
    println!("class {class}: r = {:.9} (residual {:.2e})", radius.value, radius.residual);
    println!("extremal z^{m} (z^{p} - a)/(1 - a z^{p}) with a = {a:.9}\n");

    let series = analytic_extremal(class, 2048, 0.995)?;
    println!("      r     majorant");
    for i in (-5i32..=5).map(|d| d as f64 * 0.01) {
        let r = radius.value + i;
        if !(0.0..0.995).contains(&r) {
            continue;
        }
        let maj = series.majorant_sum(r)?;
        let marker = if (maj - 1.0).abs() < 1e-6 {
            "  <- equals 1 at the Bohr radius"
        } else if maj > 1.0 {
            "  (exceeds 1)"
        } else {
            ""
        };
        println!("  {r:.4}  {maj:.9}{marker}");
    }
    Ok(())
}
