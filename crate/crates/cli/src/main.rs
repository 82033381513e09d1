mod stream;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use annulus_core::budget::ExtNuFloor;
use annulus_core::export::{branch_report, graph_to_dot, to_sorted_json, GraphDocument};
use annulus_core::oracle::check_genus_formula;
use annulus_core::profile::ProfileInvariants;
use annulus_core::rational;
use annulus_core::resolution::resolve_branch;
use annulus_core::verifier::{
    symbolic_case_bound, verify_profile, CensusOptions, NormalForm, OptimizerOptions, Verdict,
};
use annulus_core::{AnnulusProfile, BranchTopology};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "annulus", version, about = "Invariants of cuspidal singularities and a census of singular annuli")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct ProfileArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    #[arg(long, allow_hyphen_values = true)]
    q: i64,
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
}

impl ProfileArgs {
    fn profile(&self) -> Result<AnnulusProfile, Failure> {
        Ok(AnnulusProfile::new(self.p, self.q, self.r, self.s)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one branch given by its characteristic pairs.
    Invariants {
        /// Pairs as "m1,n1;m2,n2;…".
        #[arg(long)]
        pairs: String,
    },
    /// Resolution graph of a branch.
    Resolve {
        #[arg(long)]
        pairs: String,
    },
    /// Type, invariants and certificate of one profile.
    Profile(ProfileArgs),
    /// Census of all normal-form profiles up to a bound.
    Verify {
        #[arg(long, default_value_t = 20)]
        max_exponent: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Continue from the partial file left next to --out.
        #[arg(long, requires = "out")]
        resume: bool,
        /// Lower every stratum floor to extν ≥ 1.
        #[arg(long)]
        relax_extnu_floor: bool,
        #[arg(long, default_value_t = 4)]
        n_points: usize,
        #[arg(long, value_enum, default_value_t = FormArg::Reduced)]
        normal_form: FormArg,
    },
    /// Counts double points of sampled curves and compares with the genus formula.
    Oracle {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Symmetry orbit, canonical and reduced forms of a profile.
    Normalize(ProfileArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Literal,
    Reduced,
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<annulus_core::Error> for Failure {
    fn from(e: annulus_core::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

/// Emitted document and whether the run counts as a pass.
struct Outcome {
    text: String,
    pass: bool,
}

fn topology(pairs: &str) -> Result<BranchTopology, Failure> {
    Ok(pairs.parse::<BranchTopology>()?)
}

fn no_dot(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(format!("--format dot is only available for resolve, not {command}")));
    }
    Ok(())
}

fn invariants(pairs: &str, format: Format) -> Result<Outcome, Failure> {
    no_dot(format, "invariants")?;
    let report = branch_report(&topology(pairs)?)?;
    let text = match format {
        Format::Json => to_sorted_json(&report)?,
        _ => report.to_text(),
    };
    Ok(Outcome { text, pass: true })
}

fn resolve(pairs: &str, format: Format) -> Result<Outcome, Failure> {
    let graph = resolve_branch(&topology(pairs)?)?;
    let text = match format {
        Format::Dot => graph_to_dot(&graph),
        Format::Json => to_sorted_json(&GraphDocument::of(&graph)?)?,
        Format::Text => {
            let mut out = String::new();
            for (i, w) in graph.weights().iter().enumerate() {
                let neighbors: Vec<String> = graph.neighbors(i).iter().map(|j| format!("E{}", j + 1)).collect();
                let arrows = graph.arrow_count(i);
                let _ = write!(out, "E{} ({w})", i + 1);
                if !neighbors.is_empty() {
                    let _ = write!(out, " -- {}", neighbors.join(" "));
                }
                if arrows > 0 {
                    let _ = write!(out, " [{arrows} arrow{}]", if arrows == 1 { "" } else { "s" });
                }
                out.push('\n');
            }
            out
        }
    };
    Ok(Outcome { text, pass: true })
}

fn profile(args: &ProfileArgs, format: Format) -> Result<Outcome, Failure> {
    no_dot(format, "profile")?;
    let x = args.profile()?;
    let inv = ProfileInvariants::of(&x)?;
    let cert = verify_profile(&x, OptimizerOptions::default())?;
    let symbolic = symbolic_case_bound(&x)?;
    let pass = cert.verdict != Verdict::Counterexample;
    let text = match format {
        Format::Json => to_sorted_json(&json!({
            "invariants": inv,
            "certificate": cert,
            "symbolic": symbolic,
        }))?,
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "profile {x}");
            let _ = writeln!(out, "type {}", inv.type_tag);
            let _ = writeln!(out, "{}", if inv.handsome { "handsome" } else { "ugly" });
            let _ = writeln!(out, "2delta_max = {}", inv.two_delta_max);
            let _ = writeln!(out, "S <= {}", inv.s_bound);
            if let Some(d) = inv.det_prime {
                let _ = writeln!(out, "det' = {d}");
            }
            match (&cert.max_capacity, &cert.min_reserve) {
                (Some(c), Some(r)) => {
                    let _ = writeln!(out, "max capacity = {c}");
                    let _ = writeln!(out, "min reserve = {r}");
                }
                _ => {
                    let _ = writeln!(out, "no admissible budget");
                }
            }
            for chain in &symbolic.chains {
                let _ = writeln!(out, "chain {} = {}", chain.chain, rational::display(&chain.value));
            }
            let _ = writeln!(out, "verdict {:?}", cert.verdict);
            out
        }
    };
    Ok(Outcome { text, pass })
}

fn verify(options: &CensusOptions, format: Format, out: Option<&std::path::Path>, resume: bool) -> Result<Outcome, Failure> {
    no_dot(format, "verify")?;
    if options.n_points == 0 {
        return Err(Failure::Usage("--n-points must be at least 1".into()));
    }
    let report = stream::run(options, out, resume).map_err(Failure::Run)?;
    let s = &report.summary;
    let text = match format {
        Format::Json => to_sorted_json(s)?,
        _ => {
            let mut text = String::new();
            let _ = writeln!(text, "profiles {}", s.profiles);
            for (verdict, count) in &s.verdicts {
                let _ = writeln!(text, "{verdict:?} {count}");
            }
            for b in &s.boundary_profiles {
                let _ = writeln!(text, "boundary {b}");
            }
            let _ = writeln!(text, "{}", if s.pass { "PASS" } else { "FAIL" });
            text
        }
    };
    Ok(Outcome { text, pass: s.pass })
}

fn oracle(args: &ProfileArgs, trials: usize, seed: u64, format: Format) -> Result<Outcome, Failure> {
    no_dot(format, "oracle")?;
    let report = check_genus_formula(&args.profile()?, trials, seed)?;
    let pass = report.all_agree();
    let text = match format {
        Format::Json => to_sorted_json(&report)?,
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "profile {}", report.profile);
            let _ = writeln!(out, "2delta_max = {}", report.two_delta_max);
            for t in &report.samples {
                match (&t.count, &t.degenerate) {
                    (Some(c), _) => {
                        let _ = writeln!(
                            out,
                            "seed {} count {} resultant degree {} {}",
                            t.seed,
                            c.count,
                            c.relevant_degree,
                            if t.agrees { "agrees" } else { "MISMATCH" }
                        );
                    }
                    (None, Some(reason)) => {
                        let _ = writeln!(out, "seed {} degenerate: {reason}", t.seed);
                    }
                    (None, None) => {}
                }
            }
            let _ = writeln!(out, "agreement {}", report.agreement);
            out
        }
    };
    Ok(Outcome { text, pass })
}

fn normalize(args: &ProfileArgs, format: Format) -> Result<Outcome, Failure> {
    no_dot(format, "normalize")?;
    let x = args.profile()?;
    let (canonical, orbit_size) = x.canonical()?;
    let handsome = x.normalize_to_handsome()?;
    let reduced = x.reduce()?;
    let orbit = x.orbit();
    let text = match format {
        Format::Json => to_sorted_json(&json!({
            "profile": x,
            "orbit": orbit,
            "canonical": canonical,
            "orbit_size": orbit_size,
            "handsome_form": handsome,
            "reduced_form": reduced,
            "is_reduced": x.is_reduced(),
        }))?,
        _ => {
            let orbit: Vec<String> = orbit.iter().map(|y| format!("({y})")).collect();
            format!(
                "profile {x}\norbit {}\ncanonical {canonical}\nhandsome form {handsome}\nreduced form {reduced}\n",
                orbit.join(" ")
            )
        }
    };
    Ok(Outcome { text, pass: true })
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Invariants { pairs } => invariants(pairs, cli.format),
        Command::Resolve { pairs } => resolve(pairs, cli.format),
        Command::Profile(args) => profile(args, cli.format),
        Command::Verify {
            max_exponent,
            jobs,
            resume,
            relax_extnu_floor,
            n_points,
            normal_form,
        } => {
            let options = CensusOptions {
                max_exponent: *max_exponent,
                workers: *jobs,
                n_points: *n_points,
                floor: if *relax_extnu_floor { ExtNuFloor::Relaxed } else { ExtNuFloor::Standard },
                normal_form: match normal_form {
                    FormArg::Literal => NormalForm::Literal,
                    FormArg::Reduced => NormalForm::Reduced,
                },
            };
            verify(&options, cli.format, cli.out.as_deref(), *resume)
        }
        Command::Oracle { profile, trials, seed } => oracle(profile, *trials, *seed, cli.format),
        Command::Normalize(args) => normalize(args, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            let streamed = matches!(cli.command, Command::Verify { .. });
            match (&cli.out, streamed) {
                (Some(path), false) => {
                    if let Err(e) = std::fs::write(path, &outcome.text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                _ => print!("{}", outcome.text),
            }
            if outcome.pass { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
