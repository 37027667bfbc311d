//! Reproduces the radius table: solved vs closed-form Bohr radii for every
//! symmetry class with p <= 6, plus the named constants.
//!
//! ```bash
//! cargo run --example radius_table
//! ```

use bohr::radii::{
    bohr_radius, closed_form_bohr_radius, harmonic_r0, odd_harmonic_rho, threshold_a,
    threshold_a_upper, SymmetryClass,
};

fn main() -> bohr::Result<()> {
    println!("Bohr radii r_(p,m) for unit-bounded functions supported on pk + m\n");
    println!("  p  m      solved      closed form   method");
    for p in 1..=6 {
        for m in 0..=p {
            let class = SymmetryClass::new(p, m)?;
            let solved = bohr_radius(class)?;
            let closed = closed_form_bohr_radius(class)?;
            let closed_str = match closed {
                Some(c) => format!("{:.9}", c.value),
                None => "-".to_string(),
            };
            println!(
                "{p:>3} {m:>2}  {:.9}  {closed_str:>12}   {:?}",
                solved.value, solved.method
            );
        }
    }

    println!("\nconstants:");
    println!("  classical Bohr radius        {:.9}", 1.0 / 3.0);
    println!("  harmonic r0 = tanh(pi/4)     {:.9}", harmonic_r0().value);
    println!("  odd-harmonic rho_1           {:.9}", odd_harmonic_rho(1.0)?.value);
    println!("  odd-harmonic rho_2           {:.9}", odd_harmonic_rho(2.0)?.value);
    println!("  A(1)                         {:.9}", threshold_a(1.0)?);
    println!("  A(2)                         {:.9}", threshold_a(2.0)?);
    println!("  A(1) upper bound             {:.9}", threshold_a_upper(1.0)?);
    println!("  A(2) upper bound             {:.9}", threshold_a_upper(2.0)?);
    Ok(())
}
