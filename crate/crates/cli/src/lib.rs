//! The `rankembed` command-line tool.

pub mod codefile;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankembed::embedding::embed_code;
use rankembed::enumerate::DEFAULT_BUDGET;
use rankembed::hamming::{min_hamming_distance, min_weight_coset, random_code};
use rankembed::reduction::{
    certify, gap_transform, mc_decoding_experiment, mc_distance_experiment, trial_rng,
    witness_search_mdp, witness_search_sdp, ExactOracle, ExperimentOptions, GapCode, GapInstance,
    NoisyOracle, PromiseLabel,
};
use rankembed::{
    Alpha, Elem, Error, ExactRankSolver, FieldCtx, HammingSdpInstance, LinearCode, Matrix,
    RankSdpInstance, SearchMethod,
};
use serde::Serialize;

pub use codefile::{CodeFile, CodeFileError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    CodeFile {
        path: PathBuf,
        source: CodeFileError,
    },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bad input, 3 for an exhausted budget, 4 for anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::CodeFile { .. } => 2,
            CliError::Core(e) if e.is_budget() => 3,
            CliError::Core(
                Error::NotPrime(_)
                | Error::InvalidDegree
                | Error::FieldTooLarge { .. }
                | Error::InvalidModulus(_)
                | Error::InvalidElement { .. }
                | Error::FieldMismatch
                | Error::DimensionMismatch(_)
                | Error::RankDeficient
                | Error::ZeroCoordinate(_)
                | Error::InvalidParameter(_),
            ) => 2,
            _ => 4,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "rankembed",
    version,
    about = "Embed Hamming-metric codes into rank-metric codes and measure what survives"
)]
pub struct Cli {
    /// Maximum number of candidates any exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Enumerate,
    Support,
}

impl From<Method> for SearchMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Auto => SearchMethod::Auto,
            Method::Enumerate => SearchMethod::Enumerate,
            Method::Support => SearchMethod::Support,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Distance,
    Decoding,
    Witness,
    Gap,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random full-rank code over F_q and report its minimum distance.
    Gen {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Embed a code over F_q into F_{q^m}.
    Embed {
        file: PathBuf,
        #[arg(long)]
        m: u32,
        /// Required unless --alpha is given.
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated nonzero elements of F_{q^m}.
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<u64>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum distance: Hamming for m=1 files, rank otherwise.
    Mindist {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Minimum weight of a solution of H x = s.
    Decode {
        file: PathBuf,
        /// Comma-separated syndrome entries.
        #[arg(long, value_delimiter = ',', required = true)]
        syndrome: Vec<u64>,
        /// The file's rows are a parity-check matrix rather than a generator.
        #[arg(long)]
        parity_check: bool,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Run a seeded Monte Carlo experiment and write JSONL.
    Experiment(ExperimentArgs),
    /// Decide a Hamming problem through the rank oracle with column removal.
    Witness {
        file: PathBuf,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        seed: u64,
        /// Decide syndrome decoding for this syndrome instead of minimum distance.
        #[arg(long, value_delimiter = ',')]
        syndrome: Option<Vec<u64>>,
        #[arg(long)]
        parity_check: bool,
        /// Probability that the oracle loses a YES answer.
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        #[arg(long, default_value_t = 1)]
        retries: u32,
    },
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    /// Code dimension (distance, witness and gap experiments).
    #[arg(long)]
    pub k: Option<usize>,
    /// Number of parity checks (decoding experiments).
    #[arg(long)]
    pub r: Option<usize>,
    /// Extension degrees to sweep; defaults to the sufficient threshold for the kind.
    #[arg(long, value_delimiter = ',')]
    pub m_list: Option<Vec<u32>>,
    #[arg(long)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    /// Use this code instead of drawing one from the seed.
    #[arg(long)]
    pub code: Option<PathBuf>,
    /// Threshold for gap experiments; defaults to max(d_H - 1, 1).
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Record wall-clock time per trial (makes output nondeterministic).
    #[arg(long)]
    pub timing: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn read_code(path: &Path) -> Result<CodeFile> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    text.parse().map_err(|source| CliError::CodeFile {
        path: path.into(),
        source,
    })
}

fn code_err(path: &Path) -> impl Fn(CodeFileError) -> CliError + '_ {
    move |source| CliError::CodeFile {
        path: path.into(),
        source,
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn fmt_vec(v: &[Elem]) -> String {
    v.iter()
        .map(|e| e.0.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn elems(ctx: &FieldCtx, xs: &[u64]) -> Result<Vec<Elem>> {
    Ok(xs
        .iter()
        .map(|&x| ctx.check(Elem(x)))
        .collect::<rankembed::Result<_>>()?)
}

/// Parity-check matrix of a file, read directly or derived from its generator.
fn parity_check(file: &CodeFile, path: &Path, rows_are_h: bool) -> Result<Matrix> {
    if rows_are_h {
        return file.matrix().map_err(code_err(path));
    }
    Ok(if file.m == 1 {
        file.linear_code()
            .map_err(code_err(path))?
            .parity_check()
            .clone()
    } else {
        file.rank_code()
            .map_err(code_err(path))?
            .parity_check()
            .clone()
    })
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let budget = cli.budget;
    match cli.command {
        Command::Gen {
            q,
            n,
            k,
            seed,
            out: path,
        } => {
            let ctx = FieldCtx::prime(q)?;
            if k == 0 || k > n {
                return Err(CliError::Usage(format!(
                    "need 1 <= k <= n, got k={k} n={n}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let code = random_code(n, k, ctx, &mut rng)?;
            let d = min_hamming_distance(&code)?.weight;
            let text = CodeFile::from_linear_code(&code).to_string();
            match path {
                Some(p) => {
                    write_file(&p, &text)?;
                    writeln!(out, "d_H={d}")?;
                }
                None => {
                    write!(out, "{text}")?;
                    eprintln!("d_H={d}");
                }
            }
        }
        Command::Embed {
            file,
            m,
            seed,
            alpha,
            out: path,
        } => {
            let cf = read_code(&file)?;
            let code = cf.linear_code().map_err(code_err(&file))?;
            let ext = FieldCtx::new(cf.q, m)?;
            let alpha = match (alpha, seed) {
                (Some(a), _) => Alpha::new(ext, elems(&ext, &a)?)?,
                (None, Some(s)) => Alpha::sample(code.n(), ext, &mut ChaCha8Rng::seed_from_u64(s)),
                (None, None) => {
                    return Err(CliError::Usage("embed needs --seed or --alpha".into()))
                }
            };
            let e = embed_code(&code, &alpha)?;
            let text = CodeFile::from_embedded(&e).to_string();
            match path {
                Some(p) => write_file(&p, &text)?,
                None => write!(out, "{text}")?,
            }
        }
        Command::Mindist { file, method } => {
            let cf = read_code(&file)?;
            let (metric, best) = if cf.m == 1 {
                (
                    "hamming",
                    min_hamming_distance(&cf.linear_code().map_err(code_err(&file))?)?,
                )
            } else {
                let solver = ExactRankSolver::new(budget, method.into());
                (
                    "rank",
                    solver.min_distance(&cf.rank_code().map_err(code_err(&file))?)?,
                )
            };
            writeln!(out, "metric={metric} d={}", best.weight)?;
            writeln!(out, "witness={}", fmt_vec(&best.witness))?;
        }
        Command::Decode {
            file,
            syndrome,
            parity_check: rows_are_h,
            method,
        } => {
            let cf = read_code(&file)?;
            let h = parity_check(&cf, &file, rows_are_h)?;
            let s = elems(h.ctx(), &syndrome)?;
            let best = if cf.m == 1 {
                min_weight_coset(&HammingSdpInstance::new(h, s, 0)?)
            } else {
                ExactRankSolver::new(budget, method.into())
                    .min_coset_weight(&RankSdpInstance::new(h, s, 0)?)
            };
            match best {
                Ok(b) => {
                    writeln!(out, "weight={}", b.weight)?;
                    writeln!(out, "witness={}", fmt_vec(&b.witness))?;
                }
                Err(Error::InconsistentSystem) => writeln!(out, "weight=none")?,
                Err(e) => return Err(e.into()),
            }
        }
        Command::Experiment(args) => experiment(args, budget, out)?,
        Command::Witness {
            file,
            w,
            m,
            seed,
            syndrome,
            parity_check: rows_are_h,
            noise,
            retries,
        } => {
            let cf = read_code(&file)?;
            if cf.m != 1 {
                return Err(CliError::Usage(
                    "witness search needs a code over the base field (m=1)".into(),
                ));
            }
            if !(0.0..=1.0).contains(&noise) {
                return Err(CliError::Usage(format!(
                    "noise must lie in [0, 1], got {noise}"
                )));
            }
            let oracle = NoisyOracle {
                inner: ExactOracle {
                    solver: ExactRankSolver::new(budget, SearchMethod::Auto),
                },
                false_negative_rate: noise,
                retries,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let outcome = match syndrome {
                Some(s) => {
                    let h = parity_check(&cf, &file, rows_are_h)?;
                    let s = elems(h.ctx(), &s)?;
                    witness_search_sdp(&HammingSdpInstance::new(h, s, w)?, w, m, &oracle, &mut rng)?
                }
                None => witness_search_mdp(
                    &cf.linear_code().map_err(code_err(&file))?,
                    w,
                    m,
                    &oracle,
                    &mut rng,
                )?,
            };
            writeln!(
                out,
                "accepted={} queries={} remaining={}",
                outcome.accepted,
                outcome.queries,
                outcome
                    .remaining_columns
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct WitnessTrialRecord {
    q: u64,
    n: usize,
    k: usize,
    m: u32,
    seed: u64,
    trial_index: u64,
    d_h: usize,
    w: usize,
    accepted: bool,
    expected: bool,
    queries: usize,
}

#[derive(Serialize)]
struct GapTrialRecord {
    q: u64,
    n: usize,
    k: usize,
    m: u32,
    seed: u64,
    trial_index: u64,
    t: usize,
    gamma: f64,
    source_label: PromiseLabel,
    transported_label: PromiseLabel,
    certified_label: Option<PromiseLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct PerM {
    m: u32,
    trials: usize,
    failures: usize,
    errors: usize,
    failure_rate: Option<f64>,
}

#[derive(Serialize)]
struct Summary<'a> {
    kind: &'a str,
    q: u64,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    seed: u64,
    trials: usize,
    per_m: Vec<PerM>,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: Summary<'a>,
}

fn per_m(m: u32, trials: usize, failures: usize, errors: usize) -> PerM {
    let completed = trials - errors;
    PerM {
        m,
        trials,
        failures,
        errors,
        failure_rate: (completed > 0).then(|| failures as f64 / completed as f64),
    }
}

fn json_line<T: Serialize>(buf: &mut String, value: &T) {
    buf.push_str(&serde_json::to_string(value).expect("records serialize"));
    buf.push('\n');
}

fn experiment(args: ExperimentArgs, budget: u64, out: &mut dyn Write) -> Result<()> {
    let ctx = FieldCtx::prime(args.q)?;
    if args.n == 0 || args.trials == 0 {
        return Err(CliError::Usage("n and trials must be positive".into()));
    }
    let n = args.n;
    let need_k = || -> Result<usize> {
        match args.k {
            Some(k) if k >= 1 && k <= n => Ok(k),
            Some(k) => Err(CliError::Usage(format!("need 1 <= k <= n, got k={k}"))),
            None => Err(CliError::Usage("this experiment needs --k".into())),
        }
    };
    let default_m = match args.kind {
        Kind::Decoding => (n * n + 1) as u32,
        _ => (2 * args.q as usize * n + 1) as u32,
    };
    let m_list = args.m_list.clone().unwrap_or_else(|| vec![default_m]);
    if m_list.contains(&0) {
        return Err(CliError::Usage("extension degrees must be positive".into()));
    }
    let opts = ExperimentOptions {
        solver: ExactRankSolver::new(budget, SearchMethod::Auto),
        timing: args.timing,
        alpha: None,
    };
    let load_code = |k: usize| -> Result<LinearCode> {
        match &args.code {
            Some(p) => {
                let code = read_code(p)?.linear_code().map_err(code_err(p))?;
                if code.n() != n || code.k() != k || code.ctx().q() != args.q {
                    return Err(CliError::Usage(
                        "code file does not match --q/--n/--k".into(),
                    ));
                }
                Ok(code)
            }
            None => Ok(random_code(
                n,
                k,
                ctx,
                &mut ChaCha8Rng::seed_from_u64(args.seed),
            )?),
        }
    };

    let mut buf = String::new();
    let mut summary = Vec::new();
    let (kind, k, r) = match args.kind {
        Kind::Distance => {
            let k = need_k()?;
            let code = load_code(k)?;
            for &m in &m_list {
                let e = mc_distance_experiment(&code, m, args.trials, args.seed, &opts)?;
                e.records.iter().for_each(|r| json_line(&mut buf, r));
                summary.push(per_m(m, args.trials, e.failures, e.errors));
            }
            ("distance", Some(k), None)
        }
        Kind::Decoding => {
            let r = args
                .r
                .filter(|&r| r >= 1 && r <= n)
                .ok_or_else(|| CliError::Usage("decoding needs --r with 1 <= r <= n".into()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let h = Matrix::from_fn(ctx, r, n, |_, _| ctx.sample_uniform(&mut rng));
            let x: Vec<Elem> = (0..n).map(|_| ctx.sample_uniform(&mut rng)).collect();
            let s = h.mul_vec(&x)?;
            let inst = HammingSdpInstance::new(h, s, 0)?;
            for &m in &m_list {
                let e = mc_decoding_experiment(&inst, m, args.trials, args.seed, &opts)?;
                e.records.iter().for_each(|r| json_line(&mut buf, r));
                summary.push(per_m(m, args.trials, e.failures, e.errors));
            }
            ("decoding", None, Some(r))
        }
        Kind::Witness => {
            let k = need_k()?;
            let oracle = ExactOracle {
                solver: opts.solver,
            };
            for &m in &m_list {
                let (mut failures, mut errors) = (0, 0);
                for trial_index in 0..args.trials as u64 {
                    let mut rng = trial_rng(args.seed, trial_index);
                    let code = random_code(n, k, ctx, &mut rng)?;
                    let d_h = min_hamming_distance(&code)?.weight;
                    let mut trial_failed = false;
                    for w in 1..=n {
                        match witness_search_mdp(&code, w, m, &oracle, &mut rng) {
                            Ok(o) => {
                                trial_failed |= o.accepted != (d_h <= w);
                                json_line(
                                    &mut buf,
                                    &WitnessTrialRecord {
                                        q: args.q,
                                        n,
                                        k,
                                        m,
                                        seed: args.seed,
                                        trial_index,
                                        d_h,
                                        w,
                                        accepted: o.accepted,
                                        expected: d_h <= w,
                                        queries: o.queries,
                                    },
                                );
                            }
                            Err(e) if e.is_budget() => {
                                errors += 1;
                                break;
                            }
                            Err(e) => return Err(e.into()),
                        }
                    }
                    failures += trial_failed as usize;
                }
                summary.push(per_m(m, args.trials, failures, errors));
            }
            ("witness", Some(k), None)
        }
        Kind::Gap => {
            let k = need_k()?;
            let code = load_code(k)?;
            let d_h = min_hamming_distance(&code)?.weight;
            let t = args.t.unwrap_or(d_h.saturating_sub(1).max(1));
            let source = GapInstance::new(
                GapCode::Hamming(code.clone()),
                None,
                t,
                args.gamma,
                PromiseLabel::Unknown,
            )?;
            let source_label = certify(&source, &opts.solver)?;
            let source = GapInstance {
                label: source_label,
                ..source
            };
            for &m in &m_list {
                let ext = FieldCtx::new(args.q, m)?;
                let (mut failures, mut errors) = (0, 0);
                for trial_index in 0..args.trials as u64 {
                    let mut rng = trial_rng(args.seed, trial_index);
                    let alpha = Alpha::sample(n, ext, &mut rng);
                    let target = gap_transform(&source, &alpha)?;
                    let certified = certify(&target, &opts.solver);
                    let (certified_label, error) = match certified {
                        Ok(l) => (Some(l), None),
                        Err(e) if e.is_budget() => (None, Some(e.to_string())),
                        Err(e) => return Err(e.into()),
                    };
                    match certified_label {
                        None => errors += 1,
                        Some(l) if source_label != PromiseLabel::Unknown && l != source_label => {
                            failures += 1
                        }
                        _ => {}
                    }
                    json_line(
                        &mut buf,
                        &GapTrialRecord {
                            q: args.q,
                            n,
                            k,
                            m,
                            seed: args.seed,
                            trial_index,
                            t,
                            gamma: args.gamma,
                            source_label,
                            transported_label: target.label,
                            certified_label,
                            error,
                        },
                    );
                }
                summary.push(per_m(m, args.trials, failures, errors));
            }
            ("gap", Some(k), None)
        }
    };
    json_line(
        &mut buf,
        &SummaryLine {
            summary: Summary {
                kind,
                q: args.q,
                n,
                k,
                r,
                seed: args.seed,
                trials: args.trials,
                per_m: summary,
            },
        },
    );
    match &args.out {
        Some(p) => {
            write_file(p, &buf)?;
            let last = buf.lines().last().unwrap_or_default();
            writeln!(out, "{last}")?;
        }
        None => write!(out, "{buf}")?,
    }
    Ok(())
}
