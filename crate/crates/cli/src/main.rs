//! `scsrc` — greedy and exact shortest-common-superstring tools for DNA
//! reads that may arrive reverse-complemented.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse/IO error,
//! 3 size limit exceeded.

mod fasta;
mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use scsrc_core::exact::exact_opt;
use scsrc_core::greedy::{greedy_rc_run, mgreedy_rc};
use scsrc_core::harness::{evaluate, generate_raw_reads, ALL_ALGORITHMS, PRNG_IDENTITY};
use scsrc_core::instance::{first_uncovered, preprocess_substring_free};
use scsrc_core::{Algorithm, Dna, Error, EvalInstance, GenConfig, Instance, MergeStep, Read};
use serde_json::{json, Value};

use fasta::FastaRecord;

#[derive(Parser)]
#[command(
    name = "scsrc",
    version,
    about = "Greedy and exact shortest-common-superstring solvers for DNA reads \
             that may arrive reverse-complemented"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Mgreedy,
    Greedy,
    Tgreedy,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(arg: AlgorithmArg) -> Algorithm {
        match arg {
            AlgorithmArg::Mgreedy => Algorithm::Mgreedy,
            AlgorithmArg::Greedy => Algorithm::Greedy,
            AlgorithmArg::Tgreedy => Algorithm::Tgreedy,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Approximate a shortest superstring of the reads in a FASTA file.
    Solve {
        /// Read set (FASTA).
        input: PathBuf,
        /// Solver to run.
        #[arg(long, value_enum)]
        algorithm: AlgorithmArg,
        /// Write the superstring FASTA here plus a `<output>.json` metadata
        /// sidecar; default is FASTA on stdout without a sidecar.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Solve a small instance optimally by branch and bound.
    Exact {
        /// Read set (FASTA).
        input: PathBuf,
        /// Write the superstring FASTA here plus a `<output>.json` metadata
        /// sidecar; default is FASTA on stdout without a sidecar.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample a random read set from a random genome.
    Gen {
        /// Genome length to sample from.
        #[arg(long)]
        genome_length: usize,
        /// Number of reads to sample.
        #[arg(long)]
        reads: usize,
        /// Length of every read.
        #[arg(long)]
        read_length: usize,
        /// Probability that a read is reverse-complemented.
        #[arg(long)]
        rc_prob: f64,
        /// Seed for the reproducible generator.
        #[arg(long)]
        seed: u64,
        /// Write FASTA here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run solvers over instances and report lengths, ratios, and audits.
    Eval {
        /// Instance files (FASTA); alternatively pass sweep flags.
        inputs: Vec<PathBuf>,
        /// Also compute the exact optimum per instance (fills opt/ratios).
        #[arg(long)]
        exact: bool,
        /// Also audit the proof-pipeline bounds per instance (appends slack
        /// columns).
        #[arg(long)]
        audit: bool,
        /// Report format.
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Include the full merge trace per row (JSON only).
        #[arg(long)]
        trace: bool,
        /// Report measured wall times instead of zeros (breaks byte-for-byte
        /// reproducibility).
        #[arg(long)]
        timings: bool,
        /// Solver to run (repeatable); default: all three.
        #[arg(long, value_enum)]
        algorithm: Vec<AlgorithmArg>,
        /// Sweep: seed of the first generated instance.
        #[arg(long)]
        seed: Option<u64>,
        /// Sweep: number of instances (seeds seed, seed+1, ...).
        #[arg(long)]
        count: Option<u64>,
        /// Sweep: genome length.
        #[arg(long)]
        genome_length: Option<usize>,
        /// Sweep: reads per instance.
        #[arg(long)]
        reads: Option<usize>,
        /// Sweep: read length.
        #[arg(long)]
        read_length: Option<usize>,
        /// Sweep: reverse-complement probability.
        #[arg(long)]
        rc_prob: Option<f64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that a superstring covers every read of an instance.
    Verify {
        /// Single-record FASTA holding the superstring.
        superstring: PathBuf,
        /// Read set (FASTA).
        instance: PathBuf,
    },
}

/// A command failure: exit code plus the message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn size_limit(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }
}

/// Maps a core error to an exit class: size limits are exit 3, everything
/// else is a usage/input error.
fn core_failure(error: Error) -> Failure {
    match error {
        Error::TooLarge { .. } | Error::Incomplete { .. } => Failure::size_limit(error.to_string()),
        other => Failure::usage(other.to_string()),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Solve { input, algorithm, output } => cmd_solve(&input, algorithm, output.as_deref()),
        Command::Exact { input, output } => cmd_exact(&input, output.as_deref()),
        Command::Gen { genome_length, reads, read_length, rc_prob, seed, output } => {
            cmd_gen(genome_length, reads, read_length, rc_prob, seed, output.as_deref())
        }
        Command::Eval {
            inputs,
            exact,
            audit,
            format,
            trace,
            timings,
            algorithm,
            seed,
            count,
            genome_length,
            reads,
            read_length,
            rc_prob,
            output,
        } => cmd_eval(EvalArgs {
            inputs,
            exact,
            audit,
            format,
            trace,
            timings,
            algorithm,
            seed,
            count,
            genome_length,
            reads,
            read_length,
            rc_prob,
            output,
        }),
        Command::Verify { superstring, instance } => cmd_verify(&superstring, &instance),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Loads a read-set FASTA and preprocesses it to a substring-free instance.
/// Returns the raw record count alongside.
fn load_instance(path: &Path) -> Result<(usize, Instance), Failure> {
    let text = read_text(path)?;
    let records = fasta::parse(&text).map_err(Failure::usage)?;
    let raw_count = records.len();
    let reads = records
        .into_iter()
        .map(|r| Dna::parse(&r.sequence).and_then(|seq| Read::new(r.header, seq)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(core_failure)?;
    let instance = preprocess_substring_free(reads).map_err(core_failure)?;
    Ok((raw_count, instance))
}

/// Writes the superstring FASTA to `output` (with a JSON sidecar) or stdout.
fn emit_superstring(
    superstring: &Dna,
    algorithm_name: &str,
    sidecar: Value,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let record = FastaRecord {
        header: format!("superstring algorithm={algorithm_name} length={}", superstring.len()),
        sequence: superstring.to_string(),
    };
    let text = fasta::render(std::slice::from_ref(&record));
    match output {
        Some(path) => {
            write_text(path, &text)?;
            let mut sidecar_path = path.as_os_str().to_owned();
            sidecar_path.push(".json");
            let mut body = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
            body.push('\n');
            write_text(Path::new(&sidecar_path), &body)?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_solve(input: &Path, algorithm: AlgorithmArg, output: Option<&Path>) -> Result<i32, Failure> {
    let (raw_count, instance) = load_instance(input)?;
    let name = Algorithm::from(algorithm).to_string();

    let (superstring, merges, cycles_closed, degenerate) = match algorithm {
        AlgorithmArg::Mgreedy => {
            let result = mgreedy_rc(&instance);
            let merges = result
                .trace
                .steps
                .iter()
                .filter(|s| matches!(s, MergeStep::Merge { .. }))
                .count();
            let cycles = result.trace.cover.cycles.len();
            (result.superstring, Some(merges), Some(cycles), None)
        }
        AlgorithmArg::Greedy => {
            let seqs: Vec<Dna> = instance.reads().iter().map(|r| r.seq.clone()).collect();
            let run = greedy_rc_run(&seqs);
            (run.superstring, None, None, Some(run.degenerate_concat))
        }
        AlgorithmArg::Tgreedy => {
            let stage_one = mgreedy_rc(&instance);
            let merges = stage_one
                .trace
                .steps
                .iter()
                .filter(|s| matches!(s, MergeStep::Merge { .. }))
                .count();
            let cycles = stage_one.trace.cover.cycles.len();
            let run = greedy_rc_run(&stage_one.t);
            (run.superstring, Some(merges), Some(cycles), Some(run.degenerate_concat))
        }
    };

    let sidecar = json!({
        "algorithm": name,
        "length": superstring.len(),
        "total_input_length": instance.total_length(),
        "reads_before": raw_count,
        "reads_after": instance.len(),
        "merges": merges,
        "cycles_closed": cycles_closed,
        "degenerate_concatenation": degenerate,
    });
    emit_superstring(&superstring, &name, sidecar, output)?;
    Ok(0)
}

fn cmd_exact(input: &Path, output: Option<&Path>) -> Result<i32, Failure> {
    let (raw_count, instance) = load_instance(input)?;
    let solution = exact_opt(&instance).map_err(core_failure)?;
    let sidecar = json!({
        "algorithm": "exact",
        "length": solution.length,
        "total_input_length": instance.total_length(),
        "reads_before": raw_count,
        "reads_after": instance.len(),
        "nodes_explored": solution.nodes_explored,
    });
    emit_superstring(&solution.superstring, "exact", sidecar, output)?;
    Ok(0)
}

fn cmd_gen(
    genome_length: usize,
    reads: usize,
    read_length: usize,
    rc_prob: f64,
    seed: u64,
    output: Option<&Path>,
) -> Result<i32, Failure> {
    let config = GenConfig {
        genome_length,
        read_count: reads,
        read_length,
        rc_probability: rc_prob,
        seed,
    };
    let raw_reads = generate_raw_reads(&config).map_err(core_failure)?;
    let mut text = format!(
        ";seed={seed} prng={PRNG_IDENTITY} genome_length={genome_length} reads={reads} \
         read_length={read_length} rc_prob={rc_prob}\n"
    );
    let records: Vec<FastaRecord> = raw_reads
        .iter()
        .map(|r| FastaRecord { header: r.id.clone(), sequence: r.seq.to_string() })
        .collect();
    text.push_str(&fasta::render(&records));
    match output {
        Some(path) => write_text(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

struct EvalArgs {
    inputs: Vec<PathBuf>,
    exact: bool,
    audit: bool,
    format: FormatArg,
    trace: bool,
    timings: bool,
    algorithm: Vec<AlgorithmArg>,
    seed: Option<u64>,
    count: Option<u64>,
    genome_length: Option<usize>,
    reads: Option<usize>,
    read_length: Option<usize>,
    rc_prob: Option<f64>,
    output: Option<PathBuf>,
}

fn cmd_eval(args: EvalArgs) -> Result<i32, Failure> {
    if args.trace && args.format != FormatArg::Json {
        return Err(Failure::usage("--trace requires --format json"));
    }
    let sweep_requested = args.seed.is_some()
        || args.count.is_some()
        || args.genome_length.is_some()
        || args.reads.is_some()
        || args.read_length.is_some()
        || args.rc_prob.is_some();
    if sweep_requested && !args.inputs.is_empty() {
        return Err(Failure::usage("pass FASTA inputs or sweep flags, not both"));
    }

    let instances: Vec<EvalInstance> = if sweep_requested {
        let need = |name: &str, ok: bool| {
            if ok {
                Ok(())
            } else {
                Err(Failure::usage(format!("sweep requires {name}")))
            }
        };
        need("--seed", args.seed.is_some())?;
        need("--genome-length", args.genome_length.is_some())?;
        need("--reads", args.reads.is_some())?;
        need("--read-length", args.read_length.is_some())?;
        need("--rc-prob", args.rc_prob.is_some())?;
        let base = args.seed.unwrap();
        let count = args.count.unwrap_or(1);
        (0..count)
            .map(|i| {
                let seed = base + i;
                let config = GenConfig {
                    genome_length: args.genome_length.unwrap(),
                    read_count: args.reads.unwrap(),
                    read_length: args.read_length.unwrap(),
                    rc_probability: args.rc_prob.unwrap(),
                    seed,
                };
                EvalInstance::generate(format!("s{seed}"), &config).map_err(core_failure)
            })
            .collect::<Result<_, _>>()?
    } else if args.inputs.is_empty() {
        return Err(Failure::usage(
            "no instances: pass FASTA files or sweep flags \
             (--seed --genome-length --reads --read-length --rc-prob [--count])",
        ));
    } else {
        args.inputs
            .iter()
            .map(|path| {
                let id = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "instance".to_string());
                let (raw_count, instance) = load_instance(path)?;
                Ok(EvalInstance::loaded(id, raw_count, instance))
            })
            .collect::<Result<_, _>>()?
    };

    let algorithms: Vec<Algorithm> = if args.algorithm.is_empty() {
        ALL_ALGORITHMS.to_vec()
    } else {
        args.algorithm.iter().map(|&a| Algorithm::from(a)).collect()
    };

    let evaluation = evaluate(&instances, &algorithms, args.exact, args.audit);
    let rendered = match args.format {
        FormatArg::Csv => report::csv_report(&evaluation, args.audit, args.timings),
        FormatArg::Json => {
            report::json_report(&evaluation, args.audit, args.trace, args.timings)
        }
    };
    match args.output.as_deref() {
        Some(path) => write_text(path, &rendered)?,
        None => print!("{rendered}"),
    }
    for warning in &evaluation.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(0)
}

fn cmd_verify(superstring: &Path, instance: &Path) -> Result<i32, Failure> {
    let text = read_text(superstring)?;
    let sequence = fasta::parse_single(&text).map_err(Failure::usage)?;
    let superstring = Dna::parse(&sequence).map_err(core_failure)?;
    let (_, inst) = load_instance(instance)?;
    match first_uncovered(&superstring, &inst) {
        None => {
            println!(
                "ok: superstring of length {} covers all {} reads",
                superstring.len(),
                inst.len()
            );
            Ok(0)
        }
        Some(read) => {
            println!("uncovered read: {}", read.id);
            Ok(1)
        }
    }
}
