//! rverify: list, run and explore the identity-verification catalog.

use clap::{Args, Parser, Subcommand};
use rverify_core::registry::{self, RunConfig, Tier};
use rverify_core::Complex64;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rverify", version, about = "Numerical verification of a catalog of classical integral identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the registered checks.
    List(ListArgs),
    /// Run checks and report outcomes.
    Run(RunArgs),
    /// Evaluate a library function at the given arguments.
    Eval(EvalArgs),
}

#[derive(Args)]
struct ListArgs {
    /// Only this tier (strict, standard, loose, experimental).
    #[arg(long)]
    tier: Option<String>,
    /// Only this source section (2..7; 0 = plumbing).
    #[arg(long)]
    section: Option<u8>,
}

#[derive(Args)]
struct RunArgs {
    /// Glob over check ids (e.g. "q783-*").
    #[arg(long)]
    filter: Option<String>,
    /// Only this tier.
    #[arg(long)]
    tier: Option<String>,
    /// Tolerance loosening factor (>= 1).
    #[arg(long, default_value_t = 1.0)]
    tol_scale: f64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
    /// Write the markdown report here.
    #[arg(long)]
    md: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Function name (run `rverify eval help` for the inventory).
    function: String,
    /// Numeric arguments.
    #[arg(allow_negative_numbers = true)]
    args: Vec<f64>,
}

fn parse_tier(s: &str) -> Result<Tier, String> {
    Tier::parse(s).ok_or_else(|| format!("unknown tier '{s}' (strict|standard|loose|experimental)"))
}

fn cmd_list(args: &ListArgs) -> Result<ExitCode, String> {
    let tier = args.tier.as_deref().map(parse_tier).transpose()?;
    let catalog = registry::catalog();
    println!("{:<32} {:>7} {:<13} {:>6}  anchor", "id", "section", "tier", "points");
    for c in &catalog {
        if let Some(t) = tier {
            if c.tier != t {
                continue;
            }
        }
        if let Some(s) = args.section {
            if c.section != s {
                continue;
            }
        }
        let anchor = if c.anchor.len() > 60 {
            format!("{}...", &c.anchor[..57])
        } else {
            c.anchor.to_string()
        };
        println!(
            "{:<32} {:>7} {:<13} {:>6}  {}",
            c.id,
            c.section,
            c.tier.name(),
            c.grid.len(),
            anchor
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_run(args: &RunArgs) -> Result<ExitCode, String> {
    let tiers = match args.tier.as_deref() {
        Some(s) => Some(vec![parse_tier(s)?]),
        None => None,
    };
    let catalog = registry::catalog();
    let config = RunConfig {
        filter: args.filter.clone(),
        tiers,
        tol_scale: args.tol_scale,
        jobs: args.jobs.max(1),
    };
    let report = registry::run(&catalog, &config).map_err(|e| e.to_string())?;

    for o in &report.outcomes {
        let params = o
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let status = match o.status {
            rverify_core::report::CheckStatus::Pass => "pass",
            rverify_core::report::CheckStatus::Fail => "FAIL",
            rverify_core::report::CheckStatus::Skipped => "skip",
            rverify_core::report::CheckStatus::Experimental => "expr",
        };
        println!(
            "[{status}] {:<28} {params:<40} residual {:.3e}",
            o.check_id, o.abs_residual
        );
        if let Some(m) = &o.message {
            println!("       note: {m}");
        }
    }
    println!(
        "pass {} fail {} skipped {} experimental {}",
        report.summary.pass, report.summary.fail, report.summary.skipped,
        report.summary.experimental
    );

    if let Some(path) = &args.json {
        std::fs::write(path, registry::to_json(&report)).map_err(|e| e.to_string())?;
    }
    if let Some(path) = &args.md {
        let sections: Vec<(String, u8)> =
            catalog.iter().map(|c| (c.id.to_string(), c.section)).collect();
        std::fs::write(path, registry::to_markdown(&report, &sections))
            .map_err(|e| e.to_string())?;
    }
    Ok(if report.exit_code() == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

struct EvalFn {
    name: &'static str,
    arity: usize,
    help: &'static str,
    call: fn(&[f64]) -> Result<String, String>,
}

fn fmt_res<E: std::fmt::Display>(r: Result<f64, E>) -> Result<String, String> {
    r.map(|v| format!("{v:.15e}")).map_err(|e| e.to_string())
}

fn fmt_complex<E: std::fmt::Display>(r: Result<Complex64, E>) -> Result<String, String> {
    r.map(|v| format!("{:.15e} {:+.15e}i", v.re, v.im)).map_err(|e| e.to_string())
}

fn nome(q: f64) -> Result<rverify_core::qseries::Nome, String> {
    rverify_core::qseries::Nome::new(q).map_err(|e| e.to_string())
}

fn eval_inventory() -> Vec<EvalFn> {
    use rverify_core::identities::{analytic, classic, elliptic as ell, lostnb};
    use rverify_core::{qseries, specfun};
    vec![
        EvalFn { name: "q783_phi", arity: 1, help: "q783_phi n", call: |a| fmt_res(classic::q783_phi(a[0])) },
        EvalFn { name: "ram_phi", arity: 1, help: "ram_phi n", call: |a| fmt_res(classic::ram_phi(a[0])) },
        EvalFn {
            name: "ram_phi_gauss",
            arity: 2,
            help: "ram_phi_gauss a b (odd integers)",
            call: |a| {
                let p = classic::GaussSumParams::new(a[0] as u64, a[1] as u64)
                    .map_err(|e| e.to_string())?;
                Ok(format!("{:.15e}", classic::ram_phi_gauss(p)))
            },
        },
        EvalFn { name: "q295_side", arity: 1, help: "q295_side alpha", call: |a| fmt_res(classic::q295_side(a[0])) },
        EvalFn { name: "ln_gamma", arity: 2, help: "ln_gamma re im", call: |a| fmt_complex(specfun::ln_gamma(Complex64::new(a[0], a[1]))) },
        EvalFn { name: "gamma", arity: 1, help: "gamma x", call: |a| fmt_res(specfun::gamma_real(a[0])) },
        EvalFn { name: "recip_gamma", arity: 1, help: "recip_gamma x", call: |a| Ok(format!("{:.15e}", specfun::recip_gamma(a[0]))) },
        EvalFn { name: "digamma", arity: 1, help: "digamma x", call: |a| fmt_res(specfun::digamma(a[0])) },
        EvalFn { name: "bessel_j", arity: 2, help: "bessel_j nu x", call: |a| fmt_res(specfun::bessel_j(a[0], a[1])) },
        EvalFn { name: "li2", arity: 1, help: "li2 x", call: |a| fmt_res(specfun::li2(a[0])) },
        EvalFn { name: "elliptic_k", arity: 1, help: "elliptic_k m", call: |a| fmt_res(specfun::elliptic_k(a[0])) },
        EvalFn { name: "elliptic_f", arity: 2, help: "elliptic_f phi m", call: |a| fmt_res(specfun::elliptic_f(a[0], a[1])) },
        EvalFn { name: "zeta", arity: 2, help: "zeta re im", call: |a| fmt_complex(specfun::zeta(Complex64::new(a[0], a[1]))) },
        EvalFn { name: "xi", arity: 1, help: "xi t (capital Xi on the real axis)", call: |a| fmt_complex(specfun::xi_big(Complex64::new(a[0], 0.0))) },
        EvalFn { name: "pochhammer", arity: 2, help: "pochhammer a n", call: |a| Ok(format!("{:.15e}", specfun::pochhammer(a[0], a[1] as u32))) },
        EvalFn { name: "qpochhammer", arity: 2, help: "qpochhammer a q", call: |a| Ok(format!("{:.15e}", qseries::qpochhammer_inf(a[0], nome(a[1])?))) },
        EvalFn { name: "euler_f", arity: 1, help: "euler_f q (f(-q))", call: |a| Ok(format!("{:.15e}", qseries::euler_f_neg(nome(a[0])?))) },
        EvalFn { name: "rr_cf", arity: 1, help: "rr_cf q (Rogers-Ramanujan u(q))", call: |a| Ok(format!("{:.15e}", qseries::rr_cf_product(nome(a[0])?))) },
        EvalFn { name: "lambda5", arity: 1, help: "lambda5 q", call: |a| Ok(format!("{:.15e}", qseries::lambda5(nome(a[0])?))) },
        EvalFn { name: "v14", arity: 1, help: "v14 q", call: |a| Ok(format!("{:.15e}", qseries::v14(nome(a[0])?))) },
        EvalFn { name: "v35", arity: 1, help: "v35 q", call: |a| Ok(format!("{:.15e}", qseries::v35(nome(a[0])?))) },
        EvalFn { name: "phi_w", arity: 2, help: "phi_w t w", call: |a| fmt_complex(analytic::phi_w(Complex64::new(a[0], 0.0), a[1])) },
        EvalFn { name: "psi_w", arity: 2, help: "psi_w t w", call: |a| fmt_complex(analytic::psi_w(Complex64::new(a[0], 0.0), a[1])) },
        EvalFn { name: "quartic_g", arity: 1, help: "quartic_g v", call: |a| fmt_res(ell::quartic_g(a[0])) },
        EvalFn { name: "lemniscate_f", arity: 1, help: "lemniscate_f v", call: |a| fmt_res(ell::lemniscate_f(a[0])) },
        EvalFn { name: "entry5_constant_c", arity: 1, help: "entry5_constant_c q", call: |a| fmt_res(lostnb::entry5_constant_c(a[0])) },
    ]
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode, String> {
    let inventory = eval_inventory();
    if args.function == "help" {
        println!("available functions:");
        for f in &inventory {
            println!("  {}", f.help);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let Some(f) = inventory.iter().find(|f| f.name == args.function) else {
        return Err(format!(
            "unknown function '{}'; run `rverify eval help` for the inventory",
            args.function
        ));
    };
    if args.args.len() != f.arity {
        return Err(format!("{} takes {} argument(s)", f.name, f.arity));
    }
    match (f.call)(&args.args) {
        Ok(s) => {
            println!("{s}");
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => Err(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::List(a) => cmd_list(a),
        Command::Run(a) => cmd_run(a),
        Command::Eval(a) => cmd_eval(a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            // configuration errors exit with 2
            ExitCode::from(2)
        }
    }
}
