//! Command-line front end: verification suites, free-field solutions,
//! bilinear tables, and the Zeeman/g-factor check.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cl23::dirac::{EnergySign, HBar, OnShellState, Spin};
use cl23::spinor::parse_spinor;
use cl23::verify::{self, Config};

#[derive(Parser)]
#[command(name = "cl23", version, about = "Cl(2,3) Dirac equation verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run property suites and report pass/fail per check.
    Verify(VerifyArgs),
    /// Solve the free momentum-space equation and print the spinor.
    SolveFree(SolveFreeArgs),
    /// Print all 16 bilinears of a state along both computation paths.
    Bilinears(BilinearArgs),
    /// Print the Zeeman splitting of the Pauli Hamiltonian and the g-factor.
    PauliCheck(PauliArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    All,
    Algebra,
    Lorentz,
    Spinor,
    Dirac,
    Bilinears,
    Symmetries,
    Pauli,
}

impl Target {
    fn name(&self) -> Option<&'static str> {
        match self {
            Target::All => None,
            Target::Algebra => Some("algebra"),
            Target::Lorentz => Some("lorentz"),
            Target::Spinor => Some("spinor"),
            Target::Dirac => Some("dirac"),
            Target::Bilinears => Some("bilinears"),
            Target::Symmetries => Some("symmetries"),
            Target::Pauli => Some("pauli"),
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum, default_value_t = Target::All)]
    target: Target,
    /// Emit the report as a single JSON document.
    #[arg(long)]
    json: bool,
    /// Seed for randomized instances.
    #[arg(long, default_value_t = 2023)]
    seed: u64,
    /// Override every non-exact tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct SolveFreeArgs {
    /// Rest mass (non-negative; 0 requires nonzero momentum).
    #[arg(long)]
    m: f64,
    /// Momentum components `p1,p2,p3` pairing with the frame vectors.
    #[arg(long, value_delimiter = ',')]
    p: Vec<f64>,
    /// Spin label.
    #[arg(long, value_enum, default_value_t = SpinArg::Up)]
    spin: SpinArg,
    /// Energy sign: `+` or `-` (the energy itself is derived).
    #[arg(long, default_value = "+")]
    energy: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpinArg {
    Up,
    Down,
}

#[derive(Args)]
struct BilinearArgs {
    /// Spinor literal `(re,im);(re,im);(re,im);(re,im)`.
    #[arg(long)]
    state: String,
    /// Emit machine-readable JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PauliArgs {
    /// Magnetic field strength along the third axis.
    #[arg(long = "B")]
    b: f64,
    /// Particle mass.
    #[arg(long, default_value_t = 1.0)]
    m: f64,
    /// Charge.
    #[arg(long, default_value_t = 1.0)]
    e: f64,
    /// Planck constant.
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    let cfg = Config { seed: args.seed, tol_override: args.tol };
    let reports = match args.target.name() {
        None => verify::run_all(&cfg),
        Some(name) => vec![verify::run_suite(name, &cfg).unwrap()],
    };
    let passed = reports.iter().all(|r| r.passed);
    if args.json {
        let doc = serde_json::json!({
            "seed": args.seed,
            "passed": passed,
            "reports": reports,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        for r in &reports {
            print!("{}", r.render_text());
        }
        println!("overall: {}", if passed { "PASS" } else { "FAIL" });
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_solve_free(args: &SolveFreeArgs) -> ExitCode {
    if args.m < 0.0 {
        eprintln!("error: mass must be non-negative, got {}", args.m);
        return ExitCode::from(2);
    }
    if args.p.len() != 3 {
        eprintln!("error: --p needs exactly three components, got {}", args.p.len());
        return ExitCode::from(2);
    }
    let sign = match args.energy.as_str() {
        "+" | "pos" | "positive" => EnergySign::Positive,
        "-" | "neg" | "negative" => EnergySign::Negative,
        other => {
            eprintln!("error: energy sign must be + or -, got {other:?}");
            return ExitCode::from(2);
        }
    };
    let spin = match args.spin {
        SpinArg::Up => Spin::Up,
        SpinArg::Down => Spin::Down,
    };
    let p = [args.p[0], args.p[1], args.p[2]];
    let state = match OnShellState::new(args.m, p, sign, spin) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (u, residual, current) = verify::solve_free_report(&state);
    println!("mass     : {}", state.mass());
    println!("energy   : {}", state.energy());
    println!("momentum : [{}, {}, {}]", p[0], p[1], p[2]);
    println!("spinor   : {u}");
    println!("  phi_u = {:+.9} {:+.9} I", u.phi_u.re, u.phi_u.im);
    println!("  phi_d = {:+.9} {:+.9} I", u.phi_d.re, u.phi_d.im);
    println!("  chi_u = {:+.9} {:+.9} I", u.chi_u.re, u.chi_u.im);
    println!("  chi_d = {:+.9} {:+.9} I", u.chi_d.re, u.chi_d.im);
    println!("dirac residual : {residual:.3e}");
    println!(
        "current j^mu   : [{:.9}, {:.9}, {:.9}, {:.9}]",
        current[0], current[1], current[2], current[3]
    );
    println!("plane-wave derivative check : {:.3e}", verify::plane_wave_consistency(&state));
    ExitCode::SUCCESS
}

fn cmd_bilinears(args: &BilinearArgs) -> ExitCode {
    let psi = match parse_spinor(&args.state) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rows = verify::bilinear_table(&psi);
    if args.json {
        let doc = serde_json::json!({
            "state": psi.to_string(),
            "rows": rows.iter().map(|(kind, direct, expanded)| serde_json::json!({
                "kind": kind.label(),
                "direct": [direct.re, direct.im],
                "expanded": [expanded.re, expanded.im],
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("state: {psi}");
        println!("{:<14} {:>26} {:>26}", "kind", "direct", "expanded");
        for (kind, direct, expanded) in &rows {
            println!(
                "{:<14} {:>12.6} {:+.6} I {:>12.6} {:+.6} I",
                kind.label(),
                direct.re,
                direct.im,
                expanded.re,
                expanded.im
            );
        }
    }
    ExitCode::SUCCESS
}

fn cmd_pauli(args: &PauliArgs) -> ExitCode {
    if args.m <= 0.0 || args.b == 0.0 {
        eprintln!("error: need positive mass and nonzero field");
        return ExitCode::from(2);
    }
    match cl23::em::zeeman(args.b, args.m, args.e, HBar(args.hbar)) {
        Ok(z) => {
            println!("field B        : {}", args.b);
            println!("spin-up shift  : {:+.12}", z.shift_up);
            println!("spin-down shift: {:+.12}", z.shift_down);
            println!(
                "splitting      : {:.12}  (hbar e B / m = {:.12})",
                z.splitting,
                args.hbar * args.e * args.b / args.m
            );
            println!("g = {:.6}", z.g_factor);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::SolveFree(args) => cmd_solve_free(args),
        Command::Bilinears(args) => cmd_bilinears(args),
        Command::PauliCheck(args) => cmd_pauli(args),
    }
}
