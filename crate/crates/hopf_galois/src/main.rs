//! Thin command-line front end over the library pipeline.
//!
//! Exit codes: 0 all assertions passed, 1 the action is not Galois,
//! 2 an assertion failed, 3 input error.

use clap::{Parser, Subcommand, ValueEnum};
use hopf_galois::input::LieSpecFile;
use hopf_galois::lie::LinearForm;
use hopf_galois::report::{
    self, BuildOptions, PipelineError, ScanMode, VerifyLevel,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hopf-galois",
    about = "Reduced enveloping algebras over prime fields: the Galois / central-simplicity \
             decision and the transformed Hopf algebra of equivariant endomorphisms",
    version
)]
struct Cli {
    /// Output format of reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Verification depth: `full` runs every identity suite, `fast` only the
    /// core construction checks.
    #[arg(long, global = true, value_enum, default_value_t = Verify::Full)]
    verify: Verify,
    /// Include wall-clock timings in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Verify {
    Full,
    Fast,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the restricted Lie axioms of a description file.
    Check { file: PathBuf },
    /// Run the full construction and verification pipeline.
    Build {
        file: PathBuf,
        /// Override the linear form, e.g. --xi 0,1
        #[arg(long, value_delimiter = ',')]
        xi: Option<Vec<i64>>,
    },
    /// Scan the space of linear forms for the Galois / simplicity locus.
    Scan {
        file: PathBuf,
        /// Enumerate every form (gated by p^dim <= 65536).
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Sample this many forms instead.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Emit a built-in fixture description.
    Fixture {
        /// One of: example1, example2, abelian, zero.
        name: String,
        #[arg(long, default_value_t = 3)]
        p: u16,
        #[arg(long)]
        a: Option<u8>,
        #[arg(long)]
        b: Option<u8>,
        #[arg(long)]
        dim: Option<usize>,
    },
}

fn read_spec(path: &PathBuf) -> Result<LieSpecFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    LieSpecFile::parse(&text).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Check { file } => {
            let spec = read_spec(file)?;
            let (g, _) = spec.build().map_err(|e| e.to_string())?;
            let out = report::run_check(&g);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
                Format::Text => {
                    println!("antisymmetry:          {}", pass(out.antisymmetry));
                    println!("jacobi identity:       {}", pass(out.jacobi));
                    println!("power map compatible:  {}", pass(out.power_map_compatible));
                    println!(
                        "additivity:            {} ({})",
                        pass(out.additivity),
                        if out.additivity_exhaustive { "exhaustive" } else { "sampled" }
                    );
                }
            }
            Ok(if out.pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Build { file, xi } => {
            let spec = read_spec(file)?;
            let (g, file_xi) = spec.build().map_err(|e| e.to_string())?;
            let form = match xi {
                Some(v) => {
                    if v.len() != g.n {
                        return Err(format!("--xi needs {} coefficients", g.n));
                    }
                    let f = hopf_galois::fp::Fp::new(g.p).map_err(|e| e.to_string())?;
                    LinearForm { xi: v.iter().map(|&c| f.reduce_i64(c)).collect() }
                }
                None => file_xi.ok_or("no linear form: give xi in the file or pass --xi")?,
            };
            let opts = BuildOptions {
                verify: match cli.verify {
                    Verify::Full => VerifyLevel::Full,
                    Verify::Fast => VerifyLevel::Fast,
                },
                timings: cli.timings,
            };
            match report::run_build(&g, &form, spec.basis_names(), &opts) {
                Ok(rep) => {
                    match cli.format {
                        Format::Json => println!("{}", rep.to_json()),
                        Format::Text => print_report_text(&rep),
                    }
                    if !rep.galois {
                        Ok(ExitCode::from(1))
                    } else if rep.all_checks_pass() {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        Ok(ExitCode::from(2))
                    }
                }
                Err(PipelineError::Input(e)) => Err(e),
                Err(PipelineError::Assertion(e)) => {
                    eprintln!("assertion failed: {e}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Scan { file, exhaustive, samples, seed, jobs } => {
            let spec = read_spec(file)?;
            let (g, _) = spec.build().map_err(|e| e.to_string())?;
            let mode = if *exhaustive || samples.is_none() {
                ScanMode::Exhaustive
            } else {
                ScanMode::Sample(samples.unwrap())
            };
            match report::run_scan(&g, mode, *seed, *jobs) {
                Ok(rep) => {
                    match cli.format {
                        Format::Json => {
                            println!("{}", serde_json::to_string_pretty(&rep).unwrap())
                        }
                        Format::Text => {
                            println!(
                                "{} forms: {} central simple, {} Galois, {} nondegenerate",
                                rep.total_forms,
                                rep.central_simple_count,
                                rep.galois_count,
                                rep.beta_nondegenerate_count
                            );
                            println!(
                                "Galois <=> central simple: {} (asserted)",
                                pass(rep.galois_iff_central_simple)
                            );
                            println!(
                                "form criterion agreement: {:.1}% (observed)",
                                rep.beta_agreement_percent
                            );
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(PipelineError::Input(e)) => Err(e),
                Err(PipelineError::Assertion(e)) => {
                    eprintln!("assertion failed: {e}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Fixture { name, p, a, b, dim } => {
            let spec = report::fixture_file(name, *p, *a, *b, *dim).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&spec).unwrap()),
                Format::Text => print!("{}", spec.to_toml()),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn print_report_text(rep: &hopf_galois::report::Report) {
    println!("p = {}, dim g = {}, dim algebra = {}", rep.p, rep.dim_lie, rep.dim_algebra);
    println!("xi = {:?}", rep.xi);
    println!("lie axioms:        {}", pass(rep.lie_axioms.pass));
    println!("form nondegenerate: {}", rep.beta_nondegenerate);
    println!("unimodular:        {}", rep.unimodular);
    println!("central simple:    {}", rep.central_simple);
    println!("Galois:            {}", rep.galois);
    println!("map ranks:         {:?}", rep.canonical_map_ranks);
    match &rep.transform {
        None => println!("(not Galois: no transformed structure)"),
        Some(t) => {
            println!("dim End:           {}", t.dim_endomorphisms);
            println!("antipode order:    {}", t.antipode_order);
            println!("structure rank:    {} (triangular: {})", t.rtilde_rank, t.triangular);
            println!("theta order:       {}", t.theta_order);
            if let Some(gh) = t.grouplike_count_h {
                println!("grouplikes in H:   {gh}");
            }
            if let Some(ge) = t.grouplike_count_e {
                println!("grouplikes in E:   {ge}");
            }
            if !t.tables.bracket.is_empty() {
                println!("bracket table:");
                for (a, row) in t.tables.bracket.iter().enumerate() {
                    for (b, v) in row.iter().enumerate() {
                        println!("  [tau_{a}, tau_{b}] = {v}");
                    }
                }
                println!("action table:");
                for (i, row) in t.tables.action.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        println!("  phi_{i} . tau_{j} = {v}");
                    }
                }
                println!("braiding:");
                for line in &t.tables.braiding {
                    println!("  {line}");
                }
            }
        }
    }
    println!("checks:");
    for (name, ok) in &rep.checks {
        println!("  {name}: {}", pass(*ok));
    }
    for (name, ok) in &rep.observed {
        println!("  {name}: {} (observed)", ok);
    }
    if let Some(t) = &rep.timings_ms {
        println!("timings (ms):");
        for (name, ms) in t {
            println!("  {name}: {ms}");
        }
    }
}
