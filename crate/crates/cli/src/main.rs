use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use ribbonrep::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "ribbonrep",
    version,
    about = "Ribbon peeling, r-quotients and wreath product characters"
)]
struct Cli {
    /// Output format.
    #[arg(long, short = 'f', global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Boundary word of a partition, `|` marking the anchor.
    Boundary {
        lambda: String,
        /// Pad to this many rows.
        #[arg(short)]
        k: Option<usize>,
    },
    /// The r-core.
    Core {
        #[arg(short)]
        r: usize,
        lambda: String,
    },
    /// The r-quotient of a partition with empty r-core.
    Quotient {
        #[arg(short)]
        r: usize,
        lambda: String,
    },
    /// The partition with the given r-quotient, e.g. `[4,3|2|1,1]`.
    Compose { quotient: String },
    /// Every route to the r-sign (JSON unless another format is asked for).
    Sign {
        #[arg(short)]
        r: usize,
        lambda: String,
        /// Count inversions with this many rows.
        #[arg(short)]
        k: Option<usize>,
    },
    /// Character of the symmetric group at a cycle type.
    Chi { lambda: String, mu: String },
    /// Wreath product character: `-r R λ μ` for a zero-colored class with λ
    /// in Par_r, or `-g G label class` with r-partite arguments.
    #[command(group(ArgGroup::new("kind").required(true).args(["r", "group"])))]
    Psi {
        #[arg(short)]
        r: Option<usize>,
        #[arg(short = 'g', long)]
        group: Option<String>,
        label: String,
        class: String,
    },
    /// Every successful boundary peeling of λ by the composition μ.
    Peel {
        #[arg(short)]
        r: usize,
        lambda: String,
        mu: String,
    },
    /// Full character table of G ≀ S_n.
    Table {
        #[arg(short = 'g', long)]
        group: String,
        #[arg(short)]
        n: usize,
    },
    /// Exhaustive check of ψ = sign_r · χ, or of the degree fact.
    #[command(group(ArgGroup::new("kind").required(true).args(["r", "group", "degree"])))]
    Verify {
        #[arg(short)]
        r: Option<usize>,
        #[arg(short = 'g', long)]
        group: Option<String>,
        /// Check B_n degrees against χ at (2^n).
        #[arg(long)]
        degree: bool,
        #[arg(short)]
        n: usize,
        /// Also check every reordering of each μ.
        #[arg(long)]
        compositions: bool,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Report the elapsed time.
        #[arg(long)]
        timing: bool,
    },
}

/// What a command produced: text for plain/tsv and the JSON twin.
struct Output {
    plain: String,
    tsv: Option<String>,
    json: Value,
    passed: bool,
}

impl Output {
    fn new(plain: impl Into<String>, json: Value) -> Self {
        Output {
            plain: plain.into(),
            tsv: None,
            json,
            passed: true,
        }
    }
}

fn parse<T: FromStr<Err = Error>>(token: &str) -> Result<T> {
    token.parse()
}

fn require_positive(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    Ok(())
}

fn sign_text(s: i8) -> &'static str {
    if s > 0 {
        "+1"
    } else {
        "-1"
    }
}

fn run(command: Command) -> Result<Output> {
    Ok(match command {
        Command::Boundary { lambda, k } => {
            let lambda: Partition = parse(&lambda)?;
            let word = boundary_sequence(&lambda, k)?;
            let anchor = if word.is_empty() {
                0
            } else {
                anchor_position(word.bits())?
            };
            Output::new(
                word.display_with_anchor(),
                json!({
                    "schema": "ribbonrep.boundary/1",
                    "lambda": lambda,
                    "word": word.to_string(),
                    "anchor": anchor,
                }),
            )
        }
        Command::Core { r, lambda } => {
            let lambda: Partition = parse(&lambda)?;
            let core = r_core(&lambda, r)?;
            Output::new(
                core.to_string(),
                json!({ "schema": "ribbonrep.core/1", "lambda": lambda, "r": r, "core": core }),
            )
        }
        Command::Quotient { r, lambda } => {
            let lambda: Partition = parse(&lambda)?;
            let t = r_quotient(&lambda, r)?;
            Output::new(
                t.to_string(),
                json!({ "schema": "ribbonrep.quotient/1", "lambda": lambda, "r": r, "quotient": t }),
            )
        }
        Command::Compose { quotient } => {
            let t: RPartitePartition = parse(&quotient)?;
            let lambda = phi_r(&t);
            Output::new(
                lambda.to_string(),
                json!({ "schema": "ribbonrep.compose/1", "quotient": t, "r": t.arity(), "lambda": lambda }),
            )
        }
        Command::Sign { r, lambda, k } => {
            let lambda: Partition = parse(&lambda)?;
            let report = match k {
                Some(k) => sign_report_at(&lambda, r, k)?,
                None => sign_report(&lambda, r)?,
            };
            let mut plain = format!(
                "k={} inv={} inv_empty={} d={} sign={}",
                report.k_used,
                report.inv_count,
                report.inv_count_empty,
                report.d_r,
                sign_text(report.sign)
            );
            if let Some(s) = report.sign2_closed {
                write!(plain, " sign2_closed={}", sign_text(s)).unwrap();
            }
            Output::new(
                plain,
                serde_json::to_value(&report).expect("report serializes"),
            )
        }
        Command::Chi { lambda, mu } => {
            let lambda: Partition = parse(&lambda)?;
            let mu: Composition = parse(&mu)?;
            let value = chi_sn(&lambda, &mu)?;
            Output::new(
                value.to_string(),
                json!({ "schema": "ribbonrep.chi/1", "lambda": lambda, "mu": mu, "value": value.to_string() }),
            )
        }
        Command::Psi {
            r: Some(r),
            label,
            class,
            ..
        } => {
            require_positive(r)?;
            let lambda: Partition = parse(&label)?;
            let mu: Composition = parse(&class)?;
            let value = psi_zero_colored(&lambda, &mu, r)?;
            Output::new(
                value.to_string(),
                json!({
                    "schema": "ribbonrep.psi/1",
                    "r": r,
                    "lambda": lambda,
                    "mu": mu,
                    "value": value.to_string(),
                }),
            )
        }
        Command::Psi {
            group,
            label,
            class,
            ..
        } => {
            let group: AbelianGroupSpec = parse(group.as_deref().unwrap_or_default())?;
            let label: RPartitePartition = parse(&label)?;
            let class: ColoredCycleType = parse(&class)?;
            let value = psi_wreath(&label, &class, &group)?;
            Output::new(
                value.to_string(),
                json!({
                    "schema": "ribbonrep.psi/1",
                    "group": group.to_string(),
                    "label": label,
                    "class": class.to_string(),
                    "value": value,
                    "order": value.order(),
                    "coeffs": value.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Peel { r, lambda, mu } => {
            let lambda: Partition = parse(&lambda)?;
            let mu: Composition = parse(&mu)?;
            let traces = enumerate_mu_peelings(&lambda, &mu, r)?;
            let total: i64 = traces.iter().map(|t| i64::from(t.sign)).sum();
            let mut plain = String::new();
            for t in &traces {
                writeln!(plain, "{t}\n").unwrap();
            }
            write!(plain, "traces={} total={total}", traces.len()).unwrap();
            Output::new(
                plain,
                json!({
                    "schema": "ribbonrep.peel/1",
                    "lambda": lambda,
                    "mu": mu,
                    "r": r,
                    "traces": traces,
                    "total": total,
                }),
            )
        }
        Command::Table { group, n } => {
            let group: AbelianGroupSpec = parse(&group)?;
            let table = character_table(&group, n);
            let tsv = table.to_tsv();
            let mut out = Output::new(aligned(&tsv), table.to_json());
            out.tsv = Some(tsv);
            out
        }
        Command::Verify {
            r,
            group,
            degree,
            n,
            compositions,
            jobs,
            timing,
        } => {
            let opts = VerifyOptions { compositions, jobs };
            let mut report = if degree {
                verify_degree_fact(n, &opts)?
            } else if let Some(r) = r {
                verify_identity(r, n, &opts)?
            } else {
                let group: AbelianGroupSpec = parse(group.as_deref().unwrap_or_default())?;
                verify_identity_abelian(&group, n, &opts)?
            };
            report.failures.sort();
            verify_output(&report, timing)
        }
    })
}

fn verify_output(report: &VerificationReport, timing: bool) -> Output {
    let mut plain = String::new();
    if let Some(g) = &report.group {
        write!(plain, "group={g} ").unwrap();
    } else if let Some(r) = report.r {
        write!(plain, "r={r} ").unwrap();
    }
    if let Some(check) = report.check {
        write!(plain, "check={check} ").unwrap();
    }
    write!(
        plain,
        "n={} pairs={} failures={}",
        report.n,
        report.pairs_checked,
        report.failures.len()
    )
    .unwrap();
    if let Some(m) = report.matches_cyclic {
        write!(plain, " matches_cyclic={m}").unwrap();
    }
    if timing {
        write!(plain, " elapsed_ms={}", report.elapsed.as_millis()).unwrap();
    }
    for f in &report.failures {
        write!(
            plain,
            "\nFAIL lambda={} mu={} psi={} chi={} sign={}",
            f.lambda,
            f.mu,
            f.psi,
            f.chi,
            sign_text(f.sign)
        )
        .unwrap();
    }
    let mut json = serde_json::to_value(report).expect("report serializes");
    if !timing {
        json.as_object_mut().unwrap().remove("elapsed_ms");
    }
    Output {
        plain,
        tsv: None,
        json,
        passed: report.passed(),
    }
}

/// Pads tab-separated columns to a common width.
fn aligned(tsv: &str) -> String {
    let rows: Vec<Vec<&str>> = tsv.lines().map(|l| l.split('\t').collect()).collect();
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    rows.iter()
        .map(|row| {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let is_sign = matches!(cli.command, Command::Sign { .. });
    let format = cli
        .format
        .unwrap_or(if is_sign { Format::Json } else { Format::Plain });
    let output = match run(cli.command) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("ribbonrep: {e}");
            return ExitCode::from(2);
        }
    };
    match format {
        Format::Plain => println!("{}", output.plain),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&output.json).expect("valid JSON")
        ),
        Format::Tsv => match &output.tsv {
            Some(tsv) => print!("{tsv}"),
            None => {
                eprintln!("ribbonrep: tsv output is only available for `table`");
                return ExitCode::from(2);
            }
        },
    }
    if output.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
