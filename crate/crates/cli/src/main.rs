use clap::{Args, Parser, Subcommand, ValueEnum};
use qpfd::parse::{parse_poly, parse_scalar_list, rational_value, to_rational_poly};
use qpfd::pfd::{decompose_closed_form, decompose_oracle, random_instance, recombine, PoleSpec};
use qpfd::ratfunc::RatFuncX;
use qpfd::registry::{catalog, select, Env, Grid, IdentityReport, Mode, Status};
use qpfd::sweep::{self, Summary};
use qpfd::{Error, Field, Poly, Rational};
use serde_json::{json, Value};
use std::process::ExitCode;
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(name = "qpfd", version, about = "Exact partial fractions and q-identity certification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the identity catalog.
    List {
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Certify catalog identities over their parameter grids.
    Verify(VerifyArgs),
    /// Decompose Q(x) / prod (x - a_j)^m.
    Decompose(DecomposeArgs),
    /// Time the closed form against the linear-system oracle.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ModeArg {
    SymbolicQ,
    NumericQ,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name, `*` glob, or `all`.
    #[arg(long, default_value = "all")]
    identity: String,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    m_max: Option<u32>,
    /// Restrict entries indexed by `l` to this value.
    #[arg(long)]
    l: Option<u32>,
    /// Random trials per grid cell (entries with random numerators).
    #[arg(long)]
    trials: Option<u32>,
    /// Defaults to numeric-q when `--q` is given.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Rational value of q, e.g. `2` or `5/2`.
    #[arg(long)]
    q: Option<Rational>,
    #[arg(long, default_value_t = Grid::default().seed)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
    /// Worker threads (0 = all cores, 1 = sequential).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Perturb the right-hand sides of one identity (testing aid).
    #[arg(long, hide = true)]
    mutate: Option<String>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Numerator, e.g. `q*x^2 - (1+q)*x + 1`.
    #[arg(long = "q-poly", default_value = "1")]
    q_poly: String,
    /// Comma-separated distinct poles, e.g. `1, 2, 1/q`.
    #[arg(long)]
    poles: String,
    /// Common multiplicity.
    #[arg(short, long, default_value_t = 1)]
    m: u32,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 4)]
    s_max: u32,
    #[arg(long, default_value_t = 3)]
    m_max: u32,
    #[arg(long, default_value_t = 5)]
    trials: u32,
    #[arg(long, default_value_t = Grid::default().seed)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::List { output } => Ok(list(output)),
        Cmd::Verify(a) => verify(a),
        Cmd::Decompose(a) => decompose(a),
        Cmd::Bench(a) => bench(a),
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn list(output: Output) -> ExitCode {
    match output {
        Output::Text => {
            for d in catalog() {
                println!("{:24} {}", d.name, d.space);
                println!("{:24} {}", "", d.statement);
            }
        }
        Output::Json => {
            let v: Vec<Value> = catalog()
                .iter()
                .map(|d| json!({"name": d.name, "space": d.space, "statement": d.statement}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
    }
    ExitCode::SUCCESS
}

fn resolve_mode(a: &VerifyArgs) -> Result<Mode, Error> {
    match (a.mode, &a.q) {
        (Some(ModeArg::SymbolicQ), Some(_)) => Err(Error::InvalidConfig(
            "--q is only meaningful with --mode numeric-q".into(),
        )),
        (Some(ModeArg::NumericQ), None) => Err(Error::InvalidConfig(
            "--mode numeric-q needs --q".into(),
        )),
        (_, Some(q)) => Ok(Mode::NumericQ(q.clone())),
        _ => Ok(Mode::SymbolicQ),
    }
}

fn params_text(r: &IdentityReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn verify(a: VerifyArgs) -> Result<ExitCode, Error> {
    let mode = resolve_mode(&a)?;
    let env = Env::new(&mode)?;
    let entries = select(&a.identity)?;
    if let Some(name) = &a.mutate {
        if !entries.iter().any(|d| d.name == name) {
            return Err(Error::NotFound(name.clone()));
        }
    }
    let grid = Grid {
        n_max: a.n_max,
        m_max: a.m_max,
        l: a.l,
        trials: a.trials,
        seed: a.seed,
    };
    let tasks = sweep::plan(&entries, &grid);
    let start = Instant::now();
    let reports = sweep::run(&env, &grid, &tasks, a.mutate.as_deref(), a.jobs);
    let summary = Summary::new(&reports, start.elapsed());

    match a.output {
        Output::Text => {
            for r in &reports {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                println!("{tag} {:24} {} ({} claims)", r.name, params_text(r), r.claims);
                if let Some(note) = &r.note {
                    println!("     note: {note}");
                }
                if let Some(res) = &r.residual {
                    println!("     {res}");
                }
            }
            println!(
                "{} pass, {} fail, {} skipped in {} ms",
                summary.pass, summary.fail, summary.skipped, summary.elapsed_ms
            );
        }
        Output::Json => {
            let config = json!({
                "identity": a.identity,
                "n_max": a.n_max,
                "m_max": a.m_max,
                "l": a.l,
                "trials": a.trials,
                "mode": mode,
                "seed": a.seed,
            });
            let doc = sweep::json_report(config, &reports, &summary);
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    Ok(if summary.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

struct Outcome {
    text: String,
    recombines: bool,
    agrees: bool,
}

fn run_decompose<K: Field>(q: Poly<K>, poles: Vec<K>, m: u32) -> Result<Outcome, Error> {
    let spec = PoleSpec::new(poles, m)?;
    let closed = decompose_closed_form(&q, &spec)?;
    let oracle = decompose_oracle(&q, &spec)?;
    let (num, den) = recombine(&closed, &spec);
    let recombines = RatFuncX::new(num, den)?.equals(&RatFuncX::new(q, spec.denominator())?);
    Ok(Outcome {
        text: closed.to_text(&spec),
        recombines,
        agrees: closed == oracle,
    })
}

fn decompose(a: DecomposeArgs) -> Result<ExitCode, Error> {
    let q = parse_poly(&a.q_poly)?;
    let poles = parse_scalar_list(&a.poles)?;
    let rational_poles: Option<Vec<Rational>> = poles.iter().map(rational_value).collect();
    let out = match (to_rational_poly(&q), rational_poles) {
        (Some(q), Some(p)) => run_decompose(q, p, a.m)?,
        _ => run_decompose(q, poles, a.m)?,
    };
    println!("{}", out.text);
    println!("recombination: {}", if out.recombines { "exact" } else { "MISMATCH" });
    println!(
        "linear-system oracle: {}",
        if out.agrees { "agrees" } else { "DISAGREES" }
    );
    Ok(if out.recombines && out.agrees {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn median(mut v: Vec<Duration>) -> Duration {
    v.sort();
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2
    }
}

fn bench(a: BenchArgs) -> Result<ExitCode, Error> {
    let mut rows = Vec::new();
    if a.trials > 0 {
        for s in 1..=a.s_max {
            for m in 1..=a.m_max {
                let (mut tc, mut to) = (Vec::new(), Vec::new());
                for trial in 0..a.trials {
                    let (q, spec) = random_instance(a.seed, s, m, trial);
                    let t = Instant::now();
                    let closed = decompose_closed_form(&q, &spec)?;
                    tc.push(t.elapsed());
                    let t = Instant::now();
                    let oracle = decompose_oracle(&q, &spec)?;
                    to.push(t.elapsed());
                    if closed != oracle {
                        eprintln!("engines disagree at s={s} m={m} trial={trial}");
                        return Ok(ExitCode::from(1));
                    }
                }
                rows.push((s, m, median(tc), median(to)));
            }
        }
    }
    match a.output {
        Output::Text => {
            println!("{:>3} {:>3} {:>16} {:>16}", "s", "m", "closed_form_us", "oracle_us");
            for (s, m, c, o) in &rows {
                println!(
                    "{s:>3} {m:>3} {:>16.1} {:>16.1}",
                    c.as_secs_f64() * 1e6,
                    o.as_secs_f64() * 1e6
                );
            }
        }
        Output::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(s, m, c, o)| {
                    json!({
                        "s": s,
                        "m": m,
                        "trials": a.trials,
                        "closed_form_us": c.as_micros() as u64,
                        "oracle_us": o.as_micros() as u64,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
    }
    Ok(ExitCode::SUCCESS)
}
