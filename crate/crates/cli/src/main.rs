//! `twistfact`: classify partitions, verify factorization theorems at
//! sampled points, run batch scans and compare generating functions.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use twistfact::factorization::{scan, scan_cases, ScanSummary, VerificationReport};
use twistfact::partitions::{classify_core, partitions_of};
use twistfact::series::{enum_z_asymmetric, enum_z_cores, gf_z_asymmetric, gf_z_cores, SeriesZ};
use twistfact::{verify, Error, Partition, TheoremId};

const EXIT_MISMATCH: u8 = 2;
const EXIT_SAMPLING: u8 = 3;
const EXIT_USAGE: u8 = 1;

#[derive(Parser)]
#[command(name = "twistfact", version, about = "Twisted character factorization toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Core, quotient, Frobenius coordinates and residue profile of a partition.
    Classify {
        /// Comma-separated parts; the empty string is the empty partition.
        partition: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check one theorem for one partition at sampled points.
    Verify {
        /// schurfac, schur1, sympfact, eorthfact or oorthfact.
        theorem: TheoremId,
        partition: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify theorems over every partition up to a given size.
    Scan {
        /// Comma-separated theorem names, or "all".
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        t: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        n: Vec<usize>,
        #[arg(long)]
        max_size: usize,
        /// Skip (t, n) pairs with t·n above this bound.
        #[arg(long)]
        max_tn: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = 2)]
        trials: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Worker threads; defaults to all cores.
        #[arg(long, env = "TWISTFACT_THREADS")]
        jobs: Option<usize>,
        /// Also write the JSON record stream to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare brute-force counts with product formulas and the lattice
    /// parameterization.
    Series {
        #[arg(long, allow_hyphen_values = true)]
        z: i64,
        /// Count z-asymmetric t-cores; without it, all z-asymmetric partitions.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long = "N", alias = "order")]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    // clap exits with 2 on bad arguments, which is reserved for mismatches here.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Classify { partition, t, n, format } => cmd_classify(&partition, t, n, format),
        Command::Verify {
            theorem,
            partition,
            t,
            n,
            seed,
            trials,
            format,
        } => cmd_verify(theorem, &partition, t, n, seed, trials, format),
        Command::Scan {
            theorems,
            t,
            n,
            max_size,
            max_tn,
            seeds,
            trials,
            format,
            jobs,
            out,
        } => {
            let config = ScanConfig {
                theorems,
                ts: t,
                ns: n,
                max_size,
                max_tn,
                seeds,
                trials,
                format,
                jobs,
                out,
            };
            cmd_scan(&config)
        }
        Command::Series { z, t, order, format } => cmd_series(z, t, order, format),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Errors that abort a command.
#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(io::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(s) => write!(f, "{s}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Core(Error::SamplingExhausted(_)) => EXIT_SAMPLING,
        _ => EXIT_USAGE,
    }
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse::<Partition>()?)
}

fn fmt_tuple(parts: &[Partition]) -> String {
    let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(", "))
}

#[derive(Serialize)]
struct ClassifyRecord {
    partition: Partition,
    size: usize,
    length: usize,
    t: usize,
    n: usize,
    conjugate: Partition,
    frobenius: twistfact::FrobeniusCoords,
    residue_counts: Vec<usize>,
    core: Partition,
    quotient: Vec<Partition>,
    rank: usize,
    classes: Vec<String>,
}

fn cmd_classify(literal: &str, t: usize, n: usize, format: Format) -> Result<ExitCode, CliError> {
    let lambda = parse_partition(literal)?;
    let class = classify_core(&lambda, t, n)?;
    let m = t * n;
    let mut classes = Vec::new();
    if class.empty {
        classes.push("Empty".to_string());
    }
    if let Some(c) = class.single_row {
        classes.push(format!("SingleRow({c})"));
    }
    if class.symplectic {
        classes.push("Symplectic".into());
    }
    if class.orthogonal {
        classes.push("Orthogonal".into());
    }
    if class.self_conjugate {
        classes.push("SelfConjugate".into());
    }
    if classes.is_empty() {
        classes.push("None".into());
    }
    let record = ClassifyRecord {
        size: lambda.size(),
        length: lambda.len(),
        t,
        n,
        conjugate: lambda.conjugate(),
        frobenius: lambda.frobenius(),
        residue_counts: lambda.residue_counts(t, m)?.counts,
        core: class.core.clone(),
        quotient: lambda.t_quotient(t, m)?,
        rank: class.rank,
        classes,
        partition: lambda,
    };
    let mut out = io::stdout().lock();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&record)?)?,
        Format::Text => {
            writeln!(out, "partition       {}", record.partition)?;
            writeln!(out, "size, length    {}, {}", record.size, record.length)?;
            writeln!(out, "conjugate       {}", record.conjugate)?;
            writeln!(out, "frobenius       {}", record.frobenius)?;
            writeln!(out, "residues (m={m}) {:?}", record.residue_counts)?;
            writeln!(out, "{t}-core          {}", record.core)?;
            writeln!(out, "{t}-quotient      {}", fmt_tuple(&record.quotient))?;
            writeln!(out, "class           {}", record.classes.join(", "))?;
            writeln!(out, "rank            {}", record.rank)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    th: TheoremId,
    literal: &str,
    t: usize,
    n: usize,
    seed: u64,
    trials: usize,
    format: Format,
) -> Result<ExitCode, CliError> {
    let lambda = parse_partition(literal)?;
    let report = verify(th, &lambda, t, n, seed, trials)?;
    let mut out = io::stdout().lock();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Text => render_report(&mut out, &report)?,
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

fn render_report(out: &mut impl Write, r: &VerificationReport) -> io::Result<()> {
    writeln!(out, "theorem             {}", r.theorem)?;
    writeln!(out, "partition           {}  (t = {}, n = {}, seed = {})", r.lambda, r.t, r.n, r.seed)?;
    writeln!(out, "predicted vanishing {}", r.predicted_vanishing)?;
    if let (Some(e), Some(s)) = (r.sign_exponent, r.sigma_sign) {
        writeln!(out, "epsilon parity      {e}")?;
        writeln!(out, "sigma sign          {s}")?;
    }
    for (k, trial) in r.trials.iter().enumerate() {
        writeln!(out, "trial {k}: X = ({})", trial.points.join(", "))?;
        writeln!(out, "  lhs   {}", trial.lhs)?;
        writeln!(out, "  rhs   {}", trial.rhs)?;
        writeln!(out, "  match {}", trial.matched)?;
    }
    writeln!(out, "result              {}", if r.passed() { "MATCH" } else { "MISMATCH" })
}

struct ScanConfig {
    theorems: String,
    ts: Vec<usize>,
    ns: Vec<usize>,
    max_size: usize,
    max_tn: Option<usize>,
    seeds: Vec<u64>,
    trials: usize,
    format: Format,
    jobs: Option<usize>,
    out: Option<PathBuf>,
}

impl ScanConfig {
    fn theorem_list(&self) -> Result<Vec<TheoremId>, CliError> {
        if self.theorems.trim().eq_ignore_ascii_case("all") {
            return Ok(TheoremId::ALL.to_vec());
        }
        self.theorems
            .split(',')
            .map(|s| s.trim().parse::<TheoremId>().map_err(CliError::from))
            .collect()
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.trials == 0 {
            return Err(CliError::Usage("--trials must be at least 1".into()));
        }
        if self.ts.iter().any(|&t| t < 2) {
            return Err(CliError::Usage("every t must be at least 2".into()));
        }
        if self.ns.iter().any(|&n| n < 1) {
            return Err(CliError::Usage("every n must be at least 1".into()));
        }
        if self.seeds.is_empty() {
            return Err(CliError::Usage("at least one seed is required".into()));
        }
        if self.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    theorem: TheoremId,
    lambda: &'a Partition,
    t: usize,
    n: usize,
    seed: u64,
    #[serde(rename = "match")]
    matched: bool,
    error: String,
}

fn cmd_scan(config: &ScanConfig) -> Result<ExitCode, CliError> {
    config.validate()?;
    let theorems = config.theorem_list()?;
    let mut cases = Vec::new();
    for &th in &theorems {
        for &t in &config.ts {
            for &n in &config.ns {
                if config.max_tn.is_some_and(|cap| t * n > cap) {
                    continue;
                }
                cases.extend(scan_cases(&[th], &[t], &[n], config.max_size, &config.seeds));
            }
        }
    }

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    let results = pool.install(|| scan(&cases, config.trials));

    let mut file = match &config.out {
        Some(path) => Some(BufWriter::new(File::create(path)?)),
        None => None,
    };
    let mut out = io::stdout().lock();
    let mut sampling_failure = false;
    for (case, result) in cases.iter().zip(&results) {
        let json = match result {
            Ok(r) => serde_json::to_string(r)?,
            Err(e) => {
                sampling_failure |= matches!(e, Error::SamplingExhausted(_));
                serde_json::to_string(&ErrorRecord {
                    theorem: case.theorem,
                    lambda: &case.lambda,
                    t: case.t,
                    n: case.n,
                    seed: case.seed,
                    matched: false,
                    error: e.to_string(),
                })?
            }
        };
        if let Some(f) = file.as_mut() {
            writeln!(f, "{json}")?;
        }
        match config.format {
            Format::Json => writeln!(out, "{json}")?,
            Format::Text => {
                let status = match result {
                    Ok(r) if r.passed() && r.predicted_vanishing => "ok (vanishes)".to_string(),
                    Ok(r) if r.passed() => "ok".to_string(),
                    Ok(r) if !r.matched => "MISMATCH".to_string(),
                    Ok(_) => "VANISHING DISAGREES".to_string(),
                    Err(e) => format!("ERROR {e}"),
                };
                writeln!(
                    out,
                    "{:<9} t={} n={} seed={:<3} {:<18} {status}",
                    case.theorem.name(),
                    case.t,
                    case.n,
                    case.seed,
                    case.lambda.to_string()
                )?;
            }
        }
    }
    if let Some(mut f) = file {
        f.flush()?;
    }
    let summary = ScanSummary::tally(&results);
    if config.format == Format::Text {
        writeln!(
            out,
            "cases {}  match {}  mismatch {}  vanish-confirmed {}  vanish-disagree {}  errors {}",
            summary.cases,
            summary.matches,
            summary.mismatches,
            summary.vanish_confirmed,
            summary.vanish_disagreements,
            summary.errors
        )?;
    } else {
        eprintln!("{}", serde_json::to_string(&summary)?);
    }
    Ok(if summary.mismatches > 0 || summary.vanish_disagreements > 0 {
        ExitCode::from(EXIT_MISMATCH)
    } else if sampling_failure {
        ExitCode::from(EXIT_SAMPLING)
    } else if summary.errors > 0 {
        ExitCode::from(EXIT_USAGE)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct SeriesRow {
    m: usize,
    enumeration: i64,
    product: i64,
    third: i64,
}

fn cmd_series(z: i64, t: Option<usize>, order: usize, format: Format) -> Result<ExitCode, CliError> {
    if z < -1 {
        return Err(CliError::Usage(format!(
            "z = {z} is not supported: z-asymmetric partitions are defined here for z >= -1"
        )));
    }
    let (headers, enumeration, product, third) = match t {
        None => {
            // Third column: partitions into distinct parts z+1, z+3, … (parts ≥ 1).
            let image: Vec<i64> = (0..=order)
                .map(|m| {
                    partitions_of(m, m)
                        .iter()
                        .filter(|p| {
                            p.parts().windows(2).all(|w| w[0] > w[1])
                                && p.parts().iter().all(|&x| (x as i64 - z - 1).rem_euclid(2) == 0 && x as i64 >= z + 1)
                        })
                        .count() as i64
                })
                .collect();
            (
                ["enum", "product", "distinct"],
                enum_z_asymmetric(z, order),
                gf_z_asymmetric(z, order),
                SeriesZ::from_coeffs(image, order),
            )
        }
        Some(t) => {
            if t < 2 {
                return Err(CliError::Usage("t must be at least 2".into()));
            }
            let brute: Vec<i64> = (0..=order)
                .map(|m| {
                    partitions_of(m, m)
                        .iter()
                        .filter(|p| p.is_z_asymmetric(z) && p.is_t_core(t))
                        .count() as i64
                })
                .collect();
            // z = -1 cores are conjugates of z = 1 cores, so sizes agree; for
            // z > t - 2 the theta product is empty and only ∅ survives.
            let product = if z == -1 {
                if t < 3 {
                    SeriesZ::one(order)
                } else {
                    gf_z_cores(1, t, order)?
                }
            } else if z > t as i64 - 2 {
                SeriesZ::one(order)
            } else {
                gf_z_cores(z, t, order)?
            };
            let lattice = SeriesZ::counting(&enum_z_cores(z, t, order)?, order);
            (
                ["enum", "product", "lattice"],
                SeriesZ::from_coeffs(brute, order),
                product,
                lattice,
            )
        }
    };
    let mut out = io::stdout().lock();
    let mut agree = true;
    if format == Format::Text {
        writeln!(out, "{:>4} {:>10} {:>10} {:>10}", "m", headers[0], headers[1], headers[2])?;
    }
    for m in 0..=order {
        let row = SeriesRow {
            m,
            enumeration: enumeration.coeff(m),
            product: product.coeff(m),
            third: third.coeff(m),
        };
        let ok = row.enumeration == row.product && row.product == row.third;
        agree &= ok;
        match format {
            Format::Text => writeln!(
                out,
                "{:>4} {:>10} {:>10} {:>10}{}",
                m,
                row.enumeration,
                row.product,
                row.third,
                if ok { "" } else { "  <- differs" }
            )?,
            Format::Json => writeln!(out, "{}", serde_json::to_string(&row)?)?,
        }
    }
    let support = enumeration.support();
    if format == Format::Text {
        writeln!(out, "support {support:?}")?;
    }
    Ok(if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}
