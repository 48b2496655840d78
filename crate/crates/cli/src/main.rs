//! Command-line front end: solve instances, verify certificates, check
//! gainfreeness, and generate test instances.
//!
//! Standard output carries machine-readable data (certificate JSON, emitted
//! instances); human diagnostics go to standard error. Exit codes: 0 ok,
//! 2 invalid input, 3 not gainfree, 4 verification failure.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use leontief_lp::certify::{solve_with, CertError, Outcome, SolveError, SolveOptions};
use leontief_lp::dual::dual_feasibility;
use leontief_lp::gen::{gen_dc, gen_expfamily, gen_random_gainfree};
use leontief_lp::model::{
    build_hypergraph, check_gainfree, max_cycle_gain, normalize, validate, Instance,
};
use leontief_lp::num::format_rational;
use leontief_lp::textio::{emit_certificate, emit_instance, parse_certificate, parse_instance};

const EXIT_OK: u8 = 0;
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_NOT_GAINFREE: u8 = 3;
const EXIT_VERIFICATION: u8 = 4;

/// Vertex counts above this skip the max-cycle-gain report (the walk
/// dynamic program is quartic in the vertex count).
const GAIN_REPORT_LIMIT: usize = 48;

#[derive(Parser)]
#[command(name = "leontief-lp", version, about = "Certifying LP solver for gainfree Leontief substitution systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file and print the certificate JSON
    Solve(SolveArgs),
    /// Check a certificate file against an instance file
    Verify { instance: PathBuf, certificate: PathBuf },
    /// Report gainfreeness of an instance file
    Gainfree { file: PathBuf },
    /// Generate a random difference-constraint system
    GenDc {
        #[arg(long, default_value_t = 4)]
        vars: usize,
        #[arg(long, default_value_t = 8)]
        constraints: usize,
        #[arg(long, default_value_t = -5)]
        min_weight: i64,
        #[arg(long, default_value_t = 5)]
        max_weight: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate the two-variable family with gains (a+1)/a and a/(a+1)
    GenExpfamily {
        #[arg(long)]
        a: u64,
    },
    /// Generate a random gainfree Leontief instance
    GenRandom {
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 8)]
        cols: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
    },
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file (omit when using --batch)
    file: Option<PathBuf>,
    /// Solve every *.llp file in a directory, writing *.cert.json next to
    /// each input
    #[arg(long, conflicts_with = "file")]
    batch: Option<PathBuf>,
    /// Skip the up-front gainfreeness check
    #[arg(long)]
    no_gainfree_check: bool,
    /// Machine output only on standard output
    #[arg(long)]
    json: bool,
    /// Dump the value-iteration history to standard error
    #[arg(long)]
    trace: bool,
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Solve(args) => match (&args.file, &args.batch) {
            (Some(file), None) => cmd_solve(file, &args),
            (None, Some(dir)) => cmd_solve_batch(dir, &args),
            _ => {
                eprintln!("error: pass either an instance file or --batch <dir>");
                EXIT_INVALID_INPUT
            }
        },
        Command::Verify { instance, certificate } => cmd_verify(&instance, &certificate),
        Command::Gainfree { file } => cmd_gainfree(&file),
        Command::GenDc { vars, constraints, min_weight, max_weight, seed } => {
            if vars < 2 || constraints == 0 || min_weight > max_weight {
                eprintln!("error: need vars >= 2, constraints >= 1, min-weight <= max-weight");
                return EXIT_INVALID_INPUT;
            }
            print!("{}", emit_instance(&gen_dc(vars, constraints, min_weight, max_weight, seed)));
            EXIT_OK
        }
        Command::GenExpfamily { a } => {
            if a == 0 {
                eprintln!("error: the parameter must be at least 1");
                return EXIT_INVALID_INPUT;
            }
            print!("{}", emit_instance(&gen_expfamily(a)));
            EXIT_OK
        }
        Command::GenRandom { rows, cols, seed, density } => {
            if rows == 0 || cols == 0 || !(0.0..=1.0).contains(&density) {
                eprintln!("error: need rows >= 1, cols >= 1, density in [0, 1]");
                return EXIT_INVALID_INPUT;
            }
            print!("{}", emit_instance(&gen_random_gainfree(rows, cols, seed, density)));
            EXIT_OK
        }
    }
}

fn load_instance(path: &Path) -> Result<Instance, u8> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {}", path.display(), err);
            return Err(EXIT_INVALID_INPUT);
        }
    };
    match parse_instance(&text) {
        Ok(inst) => Ok(inst),
        Err(err) => {
            eprintln!("error: {}: {}", path.display(), err);
            Err(EXIT_INVALID_INPUT)
        }
    }
}

fn solve_instance(inst: &Instance, args: &SolveArgs) -> Result<Outcome, u8> {
    let violations = validate(inst);
    if !violations.is_empty() {
        for violation in &violations {
            eprintln!("error: {}", violation);
        }
        return Err(EXIT_INVALID_INPUT);
    }
    if args.trace {
        dump_trace(inst);
    }
    let options = SolveOptions { check_gainfree: !args.no_gainfree_check };
    match solve_with(inst, &options) {
        Ok(outcome) => Ok(outcome),
        Err(SolveError::NotGainfree(witness)) => {
            eprintln!("not gainfree: {}", witness);
            if args.json {
                let arcs: Vec<usize> = witness.arcs.iter().map(|a| a + 1).collect();
                let vertices: Vec<usize> = witness.vertices.iter().map(|v| v + 1).collect();
                println!(
                    "{}",
                    serde_json_object(&[
                        ("error", serde_str("not_gainfree")),
                        ("gain", serde_str(&format_rational(&witness.gain()))),
                        ("vertices", serde_list(&vertices)),
                        ("arcs", serde_list(&arcs)),
                    ])
                );
            }
            Err(EXIT_NOT_GAINFREE)
        }
        Err(err @ (SolveError::NotLeontief { .. } | SolveError::NegativeB { .. })) => {
            eprintln!("error: {}", err);
            Err(EXIT_INVALID_INPUT)
        }
        Err(err) => {
            eprintln!("error: {}", err);
            Err(EXIT_VERIFICATION)
        }
    }
}

fn cmd_solve(path: &Path, args: &SolveArgs) -> u8 {
    let inst = match load_instance(path) {
        Ok(inst) => inst,
        Err(code) => return code,
    };
    let outcome = match solve_instance(&inst, args) {
        Ok(outcome) => outcome,
        Err(code) => return code,
    };
    if !args.json {
        describe_outcome(&inst, &outcome);
    }
    println!("{}", emit_certificate(&outcome));
    EXIT_OK
}

fn describe_outcome(inst: &Instance, outcome: &Outcome) {
    match outcome {
        Outcome::Optimal { x, .. } => {
            eprintln!("optimal; objective {}", format_rational(&inst.objective(x)));
        }
        Outcome::PrimalInfeasible { .. } => {
            eprintln!("primal infeasible; dual feasible and unbounded");
        }
        Outcome::DualInfeasible { .. } => {
            eprintln!("dual infeasible; primal feasible and unbounded");
        }
        Outcome::BothInfeasible { .. } => eprintln!("both sides infeasible"),
    }
}

fn dump_trace(inst: &Instance) {
    let (normalized, _) = normalize(inst);
    let h = build_hypergraph(&normalized);
    let trace = dual_feasibility(&h);
    for k in 0..=trace.rounds {
        let bounds: Vec<String> = trace.y[k].iter().map(|y| y.to_string()).collect();
        eprintln!("round {}: y = [{}]", k, bounds.join(", "));
        if k == 0 {
            continue;
        }
        for v in 0..h.vertex_count {
            if trace.change[k][v] {
                let r: Vec<String> = trace.r[k][v].iter().map(format_rational).collect();
                eprintln!(
                    "round {}: v{} lowered through column {}; r = [{}]",
                    k,
                    v + 1,
                    trace.p[k][v].map(|e| e + 1).unwrap_or(0),
                    r.join(", ")
                );
            }
        }
    }
    eprintln!("value: {}", trace.value);
}

fn cmd_solve_batch(dir: &Path, args: &SolveArgs) -> u8 {
    let mut files: Vec<PathBuf> = match fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|ext| ext == "llp"))
            .collect(),
        Err(err) => {
            eprintln!("error: cannot read directory {}: {}", dir.display(), err);
            return EXIT_INVALID_INPUT;
        }
    };
    files.sort();
    if files.is_empty() {
        eprintln!("error: no .llp files in {}", dir.display());
        return EXIT_INVALID_INPUT;
    }

    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let results = std::sync::Mutex::new(Vec::new());
    let next = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if index >= files.len() {
                    break;
                }
                let file = &files[index];
                let code = solve_one_to_file(file, args);
                results.lock().unwrap().push((file.clone(), code));
            });
        }
    });

    let mut results = results.into_inner().unwrap();
    results.sort();
    let mut worst = EXIT_OK;
    for (file, code) in &results {
        let status = match *code {
            EXIT_OK => "ok",
            EXIT_NOT_GAINFREE => "not gainfree",
            EXIT_VERIFICATION => "verification failure",
            _ => "invalid input",
        };
        eprintln!("{}: {}", file.display(), status);
        if args.json {
            println!(
                "{}",
                serde_json_object(&[
                    ("file", serde_str(&file.display().to_string())),
                    ("exit", serde_raw(&code.to_string())),
                    ("status", serde_str(status)),
                ])
            );
        }
        worst = worst.max(*code);
    }
    worst
}

fn solve_one_to_file(path: &Path, args: &SolveArgs) -> u8 {
    let inst = match load_instance(path) {
        Ok(inst) => inst,
        Err(code) => return code,
    };
    let quiet = SolveArgs {
        file: None,
        batch: None,
        no_gainfree_check: args.no_gainfree_check,
        json: false,
        trace: false,
    };
    let outcome = match solve_instance(&inst, &quiet) {
        Ok(outcome) => outcome,
        Err(code) => return code,
    };
    let target = path.with_extension("cert.json");
    let tmp = path.with_extension("cert.json.tmp");
    let write = fs::File::create(&tmp).and_then(|mut f| {
        f.write_all(emit_certificate(&outcome).as_bytes())?;
        f.write_all(b"\n")
    });
    if let Err(err) = write.and_then(|_| fs::rename(&tmp, &target)) {
        eprintln!("error: cannot write {}: {}", target.display(), err);
        return EXIT_VERIFICATION;
    }
    EXIT_OK
}

fn cmd_verify(instance: &Path, certificate: &Path) -> u8 {
    let inst = match load_instance(instance) {
        Ok(inst) => inst,
        Err(code) => return code,
    };
    let text = match fs::read_to_string(certificate) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {}", certificate.display(), err);
            return EXIT_INVALID_INPUT;
        }
    };
    let outcome = match parse_certificate(&text) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {}: {}", certificate.display(), err);
            return EXIT_INVALID_INPUT;
        }
    };
    match leontief_lp::certify::verify_outcome(&inst, &outcome) {
        Ok(()) => {
            eprintln!("certificate valid: {}", outcome.case());
            EXIT_OK
        }
        Err(err @ CertError::Dimension { .. }) => {
            eprintln!("error: {}", err);
            EXIT_INVALID_INPUT
        }
        Err(err) => {
            eprintln!("certificate invalid: {}", err);
            EXIT_VERIFICATION
        }
    }
}

fn cmd_gainfree(path: &Path) -> u8 {
    let inst = match load_instance(path) {
        Ok(inst) => inst,
        Err(code) => return code,
    };
    let violations = validate(&inst);
    if !violations.is_empty() {
        for violation in &violations {
            eprintln!("error: {}", violation);
        }
        return EXIT_INVALID_INPUT;
    }
    let h = build_hypergraph(&normalize(&inst).0);
    match check_gainfree(&h) {
        Ok(()) => {
            if h.vertex_count <= GAIN_REPORT_LIMIT {
                match max_cycle_gain(&h) {
                    Some(gain) => {
                        println!("gainfree (max cycle gain: {})", format_rational(&gain))
                    }
                    None => println!("gainfree (acyclic)"),
                }
            } else {
                println!("gainfree");
            }
            EXIT_OK
        }
        Err(witness) => {
            println!("not gainfree: {}", witness);
            EXIT_NOT_GAINFREE
        }
    }
}

// Tiny JSON helpers for the ad-hoc machine messages (errors, batch lines);
// certificates themselves go through the typed serializer in the library.
fn serde_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn serde_raw(s: &str) -> String {
    s.to_string()
}

fn serde_list(values: &[usize]) -> String {
    serde_json::to_string(values).expect("lists serialize")
}

fn serde_json_object(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields
        .iter()
        .map(|(key, value)| format!("{}: {}", serde_str(key), value))
        .collect();
    format!("{{{}}}", body.join(", "))
}
