//! Command-line front end.
//!
//! Subcommands: `radius` (single radius/threshold values), `table` (the
//! radius grid and constants block), `extremal` (family coefficients plus a
//! majorant curve), `harmonic` (p-Bohr sums, searches, bounds), and `verify`
//! (the certification battery).
//!
//! Exit codes are a stable contract: 0 success, 1 claim failure,
//! 2 usage/configuration error.

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::extremal;
use crate::harmonic::HarmonicCoeffs;
use crate::radii::{
    self, bohr_radius, closed_form_bohr_radius, harmonic_r0, harmonic_rp_a0, odd_harmonic_rho,
    threshold_a, threshold_a_upper, RadiusResult, SymmetryClass,
};
use crate::series::PowerSeries;
use crate::verify::{self, HarnessConfig, VerificationReport};

#[derive(Parser)]
#[command(name = "bohr", version, about = "Bohr radii for symmetric analytic and harmonic functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = ["json", "csv", "text"])]
    format: String,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct HarnessOpts {
    /// Base seed for the sample streams.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random samples per claim.
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Absolute slack tolerance for inequality claims.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

impl HarnessOpts {
    fn config(&self) -> Result<HarnessConfig> {
        if self.tol <= 0.0 || self.tol.is_nan() {
            return Err(Error::config(format!("tolerance {} must be > 0", self.tol)));
        }
        Ok(HarnessConfig {
            seed: self.seed,
            samples: self.samples,
            ineq_tol: self.tol,
            ident_tol: self.tol.max(1e-8),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single radius or threshold.
    ///
    /// Targets: rpm (--p --m), harmonic-r0, rp-a0 (--exponent-p --a0),
    /// rho (--exponent-p), A (--exponent-p), A-upper (--exponent-p).
    Radius {
        target: String,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        exponent_p: Option<f64>,
        #[arg(long)]
        a0: Option<f64>,
    },
    /// Emit the radius reproduction table and the constants block.
    Table,
    /// Expand an extremal family and emit its majorant curve.
    ///
    /// Targets: analytic (--p --m), abu (--mu), pair (--a), mobius (--a0),
    /// f0 (--alpha --beta), vanishing (--p).
    Extremal {
        target: String,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        mu: Option<f64>,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        a0: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        /// Truncation order for the expansion.
        #[arg(long, default_value_t = 512)]
        n: usize,
        /// Points on the majorant curve.
        #[arg(long, default_value_t = 49)]
        points: usize,
    },
    /// Harmonic p-Bohr sums, radius searches, and bound values.
    ///
    /// Targets: sum (--mu --exponent-p --r), search (--mu --exponent-p),
    /// bound (--exponent-p --a0 --r), odd-search (--exponent-p).
    Harmonic {
        target: String,
        #[arg(long)]
        mu: Option<f64>,
        #[arg(long)]
        exponent_p: Option<f64>,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long)]
        a0: Option<f64>,
        #[command(flatten)]
        harness: HarnessOpts,
    },
    /// Run certification suites; exits 1 if any claim fails.
    ///
    /// Suites: all, analytic (--p --m [--r-override]), sharpness (--p --m),
    /// lemmas (--p-max), wiener, pairs, harmonic, odd.
    Verify {
        suite: String,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        p_max: Option<u32>,
        #[arg(long)]
        r_override: Option<f64>,
        #[arg(long)]
        exponent_p: Option<f64>,
        #[command(flatten)]
        harness: HarnessOpts,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with exit 0; usage errors exit 2
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(Outcome { rendered, failed }) => {
            if let Err(e) = emit(&cli, &rendered) {
                eprintln!("error: {e}");
                return 2;
            }
            if failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

struct Outcome {
    rendered: String,
    failed: bool,
}

fn emit(cli: &Cli, rendered: &str) -> Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, rendered.as_bytes())?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout();
            if let Err(e) = writeln!(out, "{rendered}").and_then(|()| out.flush()) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    // downstream closed the pipe (`bohr table | head`);
                    // exit quietly like other unix filters
                    std::process::exit(0);
                }
                return Err(e.into());
            }
        }
    }
    Ok(())
}

/// Formats with 9 significant digits in plain decimal notation.
fn sig9(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i64;
    let decimals = (8 - mag).max(0) as usize;
    format!("{v:.decimals$}")
}

fn require<T: Copy>(opt: Option<T>, what: &str) -> Result<T> {
    opt.ok_or_else(|| Error::config(format!("missing required option --{what}")))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Radius { target, p, m, exponent_p, a0 } => {
            let result = radius_target(target, *p, *m, *exponent_p, *a0)?;
            Ok(Outcome { rendered: render_radius(&cli.format, target, &result)?, failed: false })
        }
        Command::Table => Ok(Outcome { rendered: render_table(&cli.format)?, failed: false }),
        Command::Extremal { target, p, m, mu, a, a0, alpha, beta, n, points } => {
            let rendered = extremal_target(
                &cli.format,
                target,
                ExtremalOpts {
                    p: *p,
                    m: *m,
                    mu: *mu,
                    a: *a,
                    a0: *a0,
                    alpha: *alpha,
                    beta: *beta,
                    n: *n,
                    points: *points,
                },
            )?;
            Ok(Outcome { rendered, failed: false })
        }
        Command::Harmonic { target, mu, exponent_p, r, a0, harness } => {
            let rendered = harmonic_target(&cli.format, target, *mu, *exponent_p, *r, *a0, harness)?;
            Ok(Outcome { rendered, failed: false })
        }
        Command::Verify { suite, p, m, p_max, r_override, exponent_p, harness } => {
            let reports =
                verify_suite(suite, *p, *m, *p_max, *r_override, *exponent_p, &harness.config()?)?;
            let failed = reports.iter().any(|r| !r.passed);
            Ok(Outcome { rendered: render_reports(&cli.format, &reports)?, failed })
        }
    }
}

fn radius_target(
    target: &str,
    p: Option<u32>,
    m: Option<u32>,
    exponent_p: Option<f64>,
    a0: Option<f64>,
) -> Result<RadiusResult> {
    match target {
        "rpm" => {
            let class = SymmetryClass::new(require(p, "p")?, require(m, "m")?)?;
            bohr_radius(class)
        }
        "harmonic-r0" => Ok(harmonic_r0()),
        "rp-a0" => harmonic_rp_a0(require(exponent_p, "exponent-p")?, require(a0, "a0")?),
        "rho" => odd_harmonic_rho(require(exponent_p, "exponent-p")?),
        "A" => {
            let v = threshold_a(require(exponent_p, "exponent-p")?)?;
            Ok(RadiusResult {
                value: v,
                bracket: [v, v],
                residual: 0.0,
                method: crate::radii::SolveMethod::ClosedForm,
            })
        }
        "A-upper" => {
            let v = threshold_a_upper(require(exponent_p, "exponent-p")?)?;
            Ok(RadiusResult {
                value: v,
                bracket: [v, v],
                residual: 0.0,
                method: crate::radii::SolveMethod::BoundFormula,
            })
        }
        other => Err(Error::config(format!(
            "unknown radius target '{other}' (expected rpm, harmonic-r0, rp-a0, rho, A, A-upper)"
        ))),
    }
}

fn render_radius(format: &str, target: &str, r: &RadiusResult) -> Result<String> {
    Ok(match format {
        "json" => serde_json::to_string_pretty(&json!({ "target": target, "result": r }))?,
        "csv" => format!(
            "target,value,bracket_lo,bracket_hi,residual,method\n{target},{},{},{},{:e},{}\n",
            sig9(r.value),
            sig9(r.bracket[0]),
            sig9(r.bracket[1]),
            r.residual,
            method_name(r.method)
        ),
        _ => format!(
            "{target} = {}\n  bracket  [{}, {}]\n  residual {:e}\n  method   {}",
            sig9(r.value),
            sig9(r.bracket[0]),
            sig9(r.bracket[1]),
            r.residual,
            method_name(r.method)
        ),
    })
}

fn method_name(m: crate::radii::SolveMethod) -> &'static str {
    match m {
        crate::radii::SolveMethod::RootSolve => "root_solve",
        crate::radii::SolveMethod::ClosedForm => "closed_form",
        crate::radii::SolveMethod::BoundFormula => "bound_formula",
    }
}

fn table_constants() -> Result<Vec<(&'static str, f64)>> {
    Ok(vec![
        ("classical_bohr", 1.0 / 3.0),
        ("harmonic_r0", harmonic_r0().value),
        ("rho_1", odd_harmonic_rho(1.0)?.value),
        ("rho_2", odd_harmonic_rho(2.0)?.value),
        ("A_1", threshold_a(1.0)?),
        ("A_2", threshold_a(2.0)?),
        ("A_1_upper", threshold_a_upper(1.0)?),
        ("A_2_upper", threshold_a_upper(2.0)?),
    ])
}

fn render_table(format: &str) -> Result<String> {
    let mut rows = Vec::new();
    for p in 1..=6u32 {
        for m in 0..=p {
            let class = SymmetryClass::new(p, m)?;
            let solved = bohr_radius(class)?;
            let closed = closed_form_bohr_radius(class)?;
            rows.push((p, m, solved.value, closed.map(|c| c.value)));
        }
    }
    let constants = table_constants()?;

    Ok(match format {
        "json" => {
            let rows_json: Vec<_> = rows
                .iter()
                .map(|(p, m, solved, closed)| {
                    json!({ "p": p, "m": m, "solved": solved, "closed_form": closed })
                })
                .collect();
            let consts_json: serde_json::Map<String, serde_json::Value> =
                constants.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            serde_json::to_string_pretty(&json!({ "radii": rows_json, "constants": consts_json }))?
        }
        "csv" => {
            let mut out = String::from("p,m,solved,closed_form\n");
            for (p, m, solved, closed) in &rows {
                let closed = closed.map(sig9).unwrap_or_default();
                out.push_str(&format!("{p},{m},{},{closed}\n", sig9(*solved)));
            }
            out.push_str("constant,value\n");
            for (name, v) in &constants {
                out.push_str(&format!("{name},{}\n", sig9(*v)));
            }
            out
        }
        _ => {
            let mut out = String::from("  p  m     solved        closed form\n");
            for (p, m, solved, closed) in &rows {
                let closed = closed.map(sig9).unwrap_or_else(|| "-".to_string());
                out.push_str(&format!("{p:>3} {m:>2}  {:>12}  {closed:>12}\n", sig9(*solved)));
            }
            out.push_str("\nconstants:\n");
            for (name, v) in &constants {
                out.push_str(&format!("  {name:<12} {}\n", sig9(*v)));
            }
            out
        }
    })
}

struct ExtremalOpts {
    p: Option<u32>,
    m: Option<u32>,
    mu: Option<f64>,
    a: Option<f64>,
    a0: Option<f64>,
    alpha: Option<f64>,
    beta: Option<f64>,
    n: usize,
    points: usize,
}

fn majorant_curve(s: &PowerSeries, points: usize) -> Vec<(f64, f64)> {
    let top = (s.r_max() - 1e-6).min(0.98);
    (1..=points)
        .map(|i| {
            let r = top * i as f64 / points as f64;
            (r, s.truncated_majorant(r) + s.tail_bound())
        })
        .collect()
}

fn p_bohr_curve(hc: &HarmonicCoeffs, p: f64, points: usize) -> Result<Vec<(f64, f64)>> {
    let top = (hc.r_max() - 1e-6).min(0.98);
    (1..=points)
        .map(|i| {
            let r = top * i as f64 / points as f64;
            Ok((r, hc.p_bohr_sum(p, r)?))
        })
        .collect()
}

type FamilyDump = (serde_json::Value, Option<PowerSeries>, Option<HarmonicCoeffs>, Vec<(f64, f64)>);

fn extremal_target(format: &str, target: &str, opts: ExtremalOpts) -> Result<String> {
    let n = opts.n;
    let (params, series, harmonic, curve): FamilyDump = match target {
        "analytic" => {
            let class = SymmetryClass::new(require(opts.p, "p")?, require(opts.m, "m")?)?;
            let r = bohr_radius(class)?.value;
            let a = radii::extremal_parameter(class)?;
            let s = extremal::analytic_extremal(class, n, 0.985)?;
            let curve = majorant_curve(&s, opts.points);
            (json!({ "p": class.p(), "m": class.m(), "a": a, "radius": r }), Some(s), None, curve)
        }
        "vanishing" => {
            let p = require(opts.p, "p")?;
            let r = 2f64.powf(-1.0 / (2.0 * p as f64));
            let s = extremal::vanishing_a0_extremal(p, n, 0.985)?;
            let curve = majorant_curve(&s, opts.points);
            (json!({ "p": p, "radius": r }), Some(s), None, curve)
        }
        "mobius" => {
            let a0 = require(opts.a0, "a0")?;
            let s = extremal::mobius_a0_series(a0, n, 0.985)?;
            let curve = majorant_curve(&s, opts.points);
            (json!({ "a0": a0, "radius": radii::mobius_self_radius(a0) }), Some(s), None, curve)
        }
        "abu" => {
            let mu = require(opts.mu, "mu")?;
            let hc = extremal::abu_example(mu, n, 0.95)?;
            let curve = p_bohr_curve(&hc, 1.0, opts.points)?;
            (json!({ "mu": mu }), None, Some(hc), curve)
        }
        "f0" => {
            let alpha = opts.alpha.unwrap_or(0.0);
            let beta = opts.beta.unwrap_or(0.0);
            let hc = extremal::harmonic_r0_extremal(alpha, beta, n, 0.95)?;
            let curve = p_bohr_curve(&hc, 1.0, opts.points)?;
            (json!({ "alpha": alpha, "beta": beta, "radius": harmonic_r0().value }), None, Some(hc), curve)
        }
        "pair" => {
            let a = require(opts.a, "a")?;
            let (h, g) = extremal::pair_counterexample(a)?;
            let hc = HarmonicCoeffs::from_pair(&h, &g);
            let r0 = radii::pair_counterexample_radius(a)?;
            let curve = p_bohr_curve(&hc, 1.0, opts.points)?;
            (json!({ "a": a, "r0": r0 }), None, Some(hc), curve)
        }
        other => {
            return Err(Error::config(format!(
                "unknown extremal target '{other}' (expected analytic, vanishing, mobius, abu, f0, pair)"
            )))
        }
    };

    Ok(match format {
        "json" => {
            let mut doc = json!({ "target": target, "params": params, "majorant_curve": curve });
            if let Some(s) = &series {
                doc["series"] = serde_json::to_value(s)?;
            }
            if let Some(h) = &harmonic {
                doc["coeffs"] = serde_json::to_value(h)?;
            }
            serde_json::to_string_pretty(&doc)?
        }
        "csv" => {
            let mut out = String::from("r,majorant\n");
            for (r, v) in &curve {
                out.push_str(&format!("{},{}\n", sig9(*r), sig9(*v)));
            }
            out
        }
        _ => {
            let mut out = format!("target: {target}\nparams: {params}\n");
            if let Some(s) = &series {
                out.push_str("leading |coefficients|: ");
                for k in 0..8.min(s.trunc_order() + 1) {
                    out.push_str(&format!("{} ", sig9(s.coeff(k).norm())));
                }
                out.push('\n');
            }
            if let Some(h) = &harmonic {
                out.push_str("leading (|a_k|, |b_k|): ");
                for k in 0..6.min(h.trunc_order() + 1) {
                    out.push_str(&format!(
                        "({}, {}) ",
                        sig9(h.a_coeff(k).norm()),
                        sig9(h.b_coeff(k).norm())
                    ));
                }
                out.push('\n');
            }
            out.push_str("majorant curve (r, M):\n");
            for (r, v) in &curve {
                out.push_str(&format!("  {:<12} {}\n", sig9(*r), sig9(*v)));
            }
            out
        }
    })
}

fn harmonic_target(
    format: &str,
    target: &str,
    mu: Option<f64>,
    exponent_p: Option<f64>,
    r: Option<f64>,
    a0: Option<f64>,
    harness: &HarnessOpts,
) -> Result<String> {
    let doc = match target {
        "sum" => {
            let mu = require(mu, "mu")?;
            let p = exponent_p.unwrap_or(1.0);
            let r = require(r, "r")?;
            let hc = extremal::abu_example(mu, 1024, 0.95)?;
            json!({ "target": "sum", "mu": mu, "exponent_p": p, "r": r,
                    "p_bohr_sum": hc.p_bohr_sum(p, r)? })
        }
        "search" => {
            let mu = require(mu, "mu")?;
            let p = exponent_p.unwrap_or(1.0);
            let hc = extremal::abu_example(mu, 4096, 0.9)?;
            let res = hc.p_bohr_radius_search(p)?;
            json!({ "target": "search", "mu": mu, "exponent_p": p, "result": res })
        }
        "bound" => {
            let p = require(exponent_p, "exponent-p")?;
            let r = require(r, "r")?;
            let a0 = a0.unwrap_or(0.0);
            json!({ "target": "bound", "exponent_p": p, "a0": a0, "r": r,
                    "harmonic_sum_bound": crate::harmonic::harmonic_sum_bound(p, a0, r)?,
                    "odd_harmonic_sum_bound": crate::harmonic::odd_harmonic_sum_bound(p, r)? })
        }
        "odd-search" => {
            let p = exponent_p.unwrap_or(1.0);
            let report = verify::odd_radius_search(p, &harness.config()?)?;
            json!({ "target": "odd-search", "exponent_p": p, "report": report })
        }
        other => {
            return Err(Error::config(format!(
                "unknown harmonic target '{other}' (expected sum, search, bound, odd-search)"
            )))
        }
    };
    Ok(match format {
        "json" => serde_json::to_string_pretty(&doc)?,
        _ => doc
            .as_object()
            .unwrap()
            .iter()
            .map(|(k, v)| format!("{k}: {v}"))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn verify_suite(
    suite: &str,
    p: Option<u32>,
    m: Option<u32>,
    p_max: Option<u32>,
    r_override: Option<f64>,
    exponent_p: Option<f64>,
    cfg: &HarnessConfig,
) -> Result<Vec<VerificationReport>> {
    match suite {
        "all" => verify::run_all(cfg),
        "analytic" => {
            let class = SymmetryClass::new(require(p, "p")?, require(m, "m")?)?;
            Ok(vec![verify::certify_analytic_class(class, r_override, cfg)?])
        }
        "sharpness" => {
            let class = SymmetryClass::new(require(p, "p")?, require(m, "m")?)?;
            Ok(vec![verify::sharpness_probe(class, 0.01, cfg)?])
        }
        "lemmas" => {
            let p_max = p_max.unwrap_or(8);
            Ok(vec![verify::radius_identities_check(p_max, cfg)?, verify::weighted_l2_suite(cfg)?])
        }
        "wiener" => Ok(vec![verify::wiener_suite(cfg)?]),
        "pairs" => Ok(vec![
            verify::certify_pair_l1(cfg)?,
            verify::certify_pair_l2(cfg)?,
            verify::certify_pair_l2_squared(cfg)?,
        ]),
        "harmonic" => {
            let ps = match exponent_p {
                Some(p) => vec![p],
                None => vec![1.0, 1.5, 2.0, 3.0, f64::INFINITY],
            };
            ps.into_iter().map(|p| verify::certify_harmonic(p, false, cfg)).collect()
        }
        "odd" => {
            let ps = match exponent_p {
                Some(p) => vec![p],
                None => vec![1.0, 2.0],
            };
            ps.into_iter().map(|p| verify::certify_harmonic(p, true, cfg)).collect()
        }
        other => Err(Error::config(format!(
            "unknown verify suite '{other}' (expected all, analytic, sharpness, lemmas, wiener, pairs, harmonic, odd)"
        ))),
    }
}

fn render_reports(format: &str, reports: &[VerificationReport]) -> Result<String> {
    let pass = reports.iter().filter(|r| r.passed).count();
    let fail = reports.len() - pass;
    Ok(match format {
        "json" => serde_json::to_string_pretty(&json!({
            "reports": reports,
            "summary": { "passed": pass, "failed": fail }
        }))?,
        "csv" => {
            let mut out =
                String::from("claim_id,samples,worst_slack,tolerance,passed,counterexample\n");
            for r in reports {
                out.push_str(&format!(
                    "{},{},{:e},{:e},{},{}\n",
                    r.claim_id,
                    r.samples,
                    r.worst_slack,
                    r.tolerance,
                    r.passed,
                    r.counterexample.as_deref().unwrap_or("").replace(',', ";")
                ));
            }
            out.push_str(&format!("summary,,,,{pass} passed / {fail} failed,\n"));
            out
        }
        _ => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "[{}] {:<34} worst_slack {:>13.3e} (tol {:.1e}, {} samples, {:.2}s)\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.claim_id,
                    r.worst_slack,
                    r.tolerance,
                    r.samples,
                    r.elapsed_secs,
                ));
                if let Some(cex) = &r.counterexample {
                    out.push_str(&format!("       counterexample: {cex}\n"));
                }
                if let Some(note) = &r.note {
                    out.push_str(&format!("       note: {note}\n"));
                }
            }
            out.push_str(&format!("summary: {pass} passed, {fail} failed\n"));
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig9_formats_nine_significant_digits() {
        assert_eq!(sig9(0.655794202), "0.655794202");
        assert_eq!(sig9(1.0 / 3.0), "0.333333333");
        assert_eq!(sig9(12.3456789123), "12.3456789");
        assert_eq!(sig9(0.0), "0");
    }

    #[test]
    fn radius_targets_dispatch() {
        let r = radius_target("rpm", Some(2), Some(1), None, None).unwrap();
        assert!((r.value - 0.789991).abs() <= 1e-5);
        let r = radius_target("harmonic-r0", None, None, None, None).unwrap();
        assert!((r.value - 0.655794).abs() <= 1e-6);
        let r = radius_target("rho", None, None, Some(2.0), None).unwrap();
        assert!((r.value - 0.786151).abs() <= 1e-6);
        assert!(radius_target("nope", None, None, None, None).is_err());
        assert!(radius_target("rpm", Some(2), None, None, None).is_err());
    }

    #[test]
    fn table_contains_constants_block() {
        let csv = render_table("csv").unwrap();
        assert!(csv.contains("1,0,0.333333333,0.333333333"));
        assert!(csv.contains("A_1,0.6"));
        assert!(csv.contains("A_1_upper,0.674"));
        assert!(csv.contains("A_2_upper,0.822"));
    }

    #[test]
    fn extremal_analytic_curve_crosses_one_at_the_radius() {
        let out = extremal_target(
            "json",
            "analytic",
            ExtremalOpts {
                p: Some(2),
                m: Some(1),
                mu: None,
                a: None,
                a0: None,
                alpha: None,
                beta: None,
                n: 512,
                points: 30,
            },
        )
        .unwrap();
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((doc["params"]["a"].as_f64().unwrap() - 0.717045).abs() <= 1e-5);
        let curve = doc["majorant_curve"].as_array().unwrap();
        let radius = doc["params"]["radius"].as_f64().unwrap();
        for pt in curve {
            let (r, v) = (pt[0].as_f64().unwrap(), pt[1].as_f64().unwrap());
            if r < radius - 0.01 {
                assert!(v < 1.0);
            }
            if r > radius + 0.01 {
                assert!(v > 1.0);
            }
        }
    }

    #[test]
    fn extremal_pair_reports_r0() {
        let out = extremal_target(
            "json",
            "pair",
            ExtremalOpts {
                p: None,
                m: None,
                mu: None,
                a: Some(10.0),
                a0: None,
                alpha: None,
                beta: None,
                n: 8,
                points: 5,
            },
        )
        .unwrap();
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((doc["params"]["r0"].as_f64().unwrap() - 0.049876).abs() <= 1e-6);
    }

    #[test]
    #[allow(clippy::approx_constant)] // 0.63662 is the reported 5-digit decimal
    fn abu_leading_coefficient() {
        let out = extremal_target(
            "json",
            "abu",
            ExtremalOpts {
                p: None,
                m: None,
                mu: Some(std::f64::consts::FRAC_PI_2),
                a: None,
                a0: None,
                alpha: None,
                beta: None,
                n: 64,
                points: 5,
            },
        )
        .unwrap();
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        let a1 = doc["coeffs"]["a"][1][0].as_f64().unwrap();
        assert!((a1 - 0.63662).abs() <= 1e-5);
    }
}
