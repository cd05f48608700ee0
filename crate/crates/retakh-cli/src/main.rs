//! Command-line front end for the restricted-path library.
//!
//! Exposes counting, enumeration, height and leaf statistics, exact
//! series dumps, and the self-verification suite. Each invocation emits
//! one deterministic record on stdout — JSON by default, CSV or plain on
//! request (see the README for the schema). The brute-force budget and
//! the default series order come from `RETAKH_BUDGET` and `RETAKH_ORDER`;
//! explicit flags take precedence. Exit codes: 0 on success, 1 when a
//! requested check fails, 2 for usage or precondition errors.

mod output;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use output::{fmt_real, rat_str, render, Cell, Format, Meta, Payload, Record};
use retakh::asym::rat_to_f64;
use retakh::gf::height::{avg_height_exact, height_numerator_series};
use retakh::gf::leaves::{avg_leaves_exact, leaves_r_series};
use retakh::gf::{motzkin_numbers, motzkin_series, solve_fg, v_from_motzkin};
use retakh::paths::{count_restricted, enumerate_restricted};
use retakh::verify::{all_passed, run_suite, Fault, Level};
use retakh::{BigInt, Series};

#[derive(Parser)]
#[command(
    name = "retakh",
    version,
    about = "Exact counting, height, and leaf statistics for Dyck paths whose peaks sit on level 1 or an even level",
    propagate_version = true
)]
struct Cli {
    /// Output format (json is byte-stable; plain is human-oriented).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Append tool name and version outside the payload (json and plain
    /// only).
    #[arg(long, global = true)]
    meta: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the restricted paths of one semilength.
    Count {
        #[arg(long)]
        semilength: usize,
        /// brute walks every path; gf reads the series; both cross-checks.
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        /// Largest semilength the exhaustive walk will attempt.
        #[arg(long, env = "RETAKH_BUDGET", default_value_t = 14)]
        budget: usize,
    },
    /// List the restricted paths of one semilength in lexicographic
    /// order.
    Enumerate {
        #[arg(long)]
        semilength: usize,
        /// Append height, peak count, and leaf count to every path.
        #[arg(long)]
        stats: bool,
        /// Largest semilength the exhaustive walk will attempt.
        #[arg(long, env = "RETAKH_BUDGET", default_value_t = 14)]
        budget: usize,
    },
    /// Exact and asymptotic average height at one semilength (>= 1).
    Height {
        #[arg(long)]
        semilength: usize,
    },
    /// Exact and asymptotic average leaf count at one semilength (>= 1).
    Leaves {
        #[arg(long)]
        semilength: usize,
    },
    /// Dump the exact coefficients of one generating function.
    Series {
        /// M: path counts; v: the auxiliary root; F, G: the ladder pair;
        /// S: the total-height numerator; R: the total-leaves numerator.
        #[arg(long, value_enum)]
        which: Which,
        /// Highest coefficient index to include.
        #[arg(long, env = "RETAKH_ORDER", default_value_t = 10)]
        order: usize,
    },
    /// Run the self-verification suite; nonzero exit on any failure.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        /// Deliberately corrupt one closed form (testing hook; the run
        /// must then fail).
        #[arg(long, value_enum)]
        mutate: Option<MutateArg>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Gf,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Gf => "gf",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "v", alias = "V")]
    V,
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "R", alias = "r")]
    R,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::M => "M",
            Which::V => "v",
            Which::F => "F",
            Which::G => "G",
            Which::S => "S",
            Which::R => "R",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

impl LevelArg {
    fn name(self) -> &'static str {
        match self {
            LevelArg::Quick => "quick",
            LevelArg::Full => "full",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MutateArg {
    GkExponent,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let (record, code) = match cli.command {
        Command::Count {
            semilength,
            method,
            budget,
        } => cmd_count(semilength, method, budget)?,
        Command::Enumerate {
            semilength,
            stats,
            budget,
        } => cmd_enumerate(semilength, stats, budget)?,
        Command::Height { semilength } => cmd_height(semilength)?,
        Command::Leaves { semilength } => cmd_leaves(semilength)?,
        Command::Series { which, order } => cmd_series(which, order)?,
        Command::Verify { level, mutate } => cmd_verify(level, mutate),
    };
    let meta = cli.meta.then_some(Meta {
        tool: "retakh",
        version: env!("CARGO_PKG_VERSION"),
    });
    print!("{}", render(&record, cli.format, meta.as_ref()));
    Ok(code)
}

/// `M_n` through the convolution route; the series/enumeration agreement
/// behind it is what `verify` and the acceptance gates pin down.
fn gf_count(n: usize) -> BigInt {
    motzkin_numbers(n).pop().expect("nonempty table")
}

fn cmd_count(n: usize, method: Method, budget: usize) -> Result<(Record, i32)> {
    if method != Method::Gf && n > budget {
        bail!(
            "semilength {n} exceeds the brute-force budget {budget}; \
             raise --budget (or RETAKH_BUDGET) or use --method gf"
        );
    }
    let params = vec![
        ("semilength", Cell::Num(n as u64)),
        ("method", Cell::Text(method.name().into())),
        ("budget", Cell::Num(budget as u64)),
    ];
    let (fields, code) = match method {
        Method::Brute => (
            vec![("count", Cell::Text(count_restricted(n).to_string()))],
            0,
        ),
        Method::Gf => (vec![("count", Cell::Text(gf_count(n).to_string()))], 0),
        Method::Both => {
            let brute = BigInt::from(count_restricted(n));
            let gf = gf_count(n);
            let agree = brute == gf;
            if !agree {
                eprintln!("count mismatch at semilength {n}: brute {brute}, series {gf}");
            }
            (
                vec![
                    ("brute", Cell::Text(brute.to_string())),
                    ("gf", Cell::Text(gf.to_string())),
                    ("agree", Cell::Flag(agree)),
                ],
                i32::from(!agree),
            )
        }
    };
    let record = Record {
        command: "count",
        params,
        payload: Payload::Fields(fields),
    };
    Ok((record, code))
}

fn cmd_enumerate(n: usize, stats: bool, budget: usize) -> Result<(Record, i32)> {
    if n > budget {
        bail!(
            "semilength {n} exceeds the enumeration budget {budget}; \
             raise --budget (or RETAKH_BUDGET)"
        );
    }
    let paths = enumerate_restricted(n);
    let (header, rows) = if stats {
        let rows = paths
            .iter()
            .map(|p| {
                let s = p.stats();
                vec![
                    Cell::Text(p.to_string()),
                    Cell::Num(s.height as u64),
                    Cell::Num(s.peaks.len() as u64),
                    Cell::Num(s.leaf_count as u64),
                ]
            })
            .collect();
        (vec!["path", "height", "peaks", "leaves"], rows)
    } else {
        let rows = paths
            .iter()
            .map(|p| vec![Cell::Text(p.to_string())])
            .collect();
        (vec!["path"], rows)
    };
    let record = Record {
        command: "enumerate",
        params: vec![
            ("semilength", Cell::Num(n as u64)),
            ("stats", Cell::Flag(stats)),
            ("budget", Cell::Num(budget as u64)),
        ],
        payload: Payload::WithTable {
            fields: vec![("total", Cell::Num(paths.len() as u64))],
            table: "paths",
            header,
            rows,
        },
    };
    Ok((record, 0))
}

fn cmd_height(n: usize) -> Result<(Record, i32)> {
    if n == 0 {
        bail!("the average-height report needs --semilength >= 1");
    }
    let report = avg_height_exact(n);
    let ratio = rat_to_f64(&report.exact_average) / report.asymptotic_average;
    let record = Record {
        command: "height",
        params: vec![("semilength", Cell::Num(n as u64))],
        payload: Payload::Fields(vec![
            ("semilength", Cell::Num(report.n as u64)),
            (
                "total_even_height",
                Cell::Text(report.exact_total_even_height.to_string()),
            ),
            ("exact_average", Cell::Text(rat_str(&report.exact_average))),
            (
                "asymptotic_average",
                Cell::Text(fmt_real(report.asymptotic_average)),
            ),
            ("ratio", Cell::Text(fmt_real(ratio))),
        ]),
    };
    Ok((record, 0))
}

fn cmd_leaves(n: usize) -> Result<(Record, i32)> {
    if n == 0 {
        bail!("the average-leaves report needs --semilength >= 1");
    }
    let report = avg_leaves_exact(n);
    let ratio = rat_to_f64(&report.exact_average) / report.asymptotic_average;
    let record = Record {
        command: "leaves",
        params: vec![("semilength", Cell::Num(n as u64))],
        payload: Payload::Fields(vec![
            ("semilength", Cell::Num(n as u64)),
            ("nodes", Cell::Num(report.n as u64)),
            (
                "total_leaves",
                Cell::Text(report.exact_total_leaves.to_string()),
            ),
            ("exact_average", Cell::Text(rat_str(&report.exact_average))),
            (
                "asymptotic_average",
                Cell::Text(fmt_real(report.asymptotic_average)),
            ),
            ("ratio", Cell::Text(fmt_real(ratio))),
        ]),
    };
    Ok((record, 0))
}

fn cmd_series(which: Which, order: usize) -> Result<(Record, i32)> {
    let series: Series = match which {
        Which::M => motzkin_series(order),
        Which::V => v_from_motzkin(order),
        Which::F => solve_fg(order).context("solving the F/G system")?.0,
        Which::G => solve_fg(order).context("solving the F/G system")?.1,
        Which::S => {
            if order == 0 {
                bail!("the S series needs --order >= 1");
            }
            height_numerator_series(order)
        }
        Which::R => leaves_r_series(order),
    };
    let rows = (0..=order)
        .map(|k| vec![Cell::Text(rat_str(series.coeff(k)))])
        .collect();
    let record = Record {
        command: "series",
        params: vec![
            ("which", Cell::Text(which.name().into())),
            ("order", Cell::Num(order as u64)),
        ],
        payload: Payload::WithTable {
            fields: vec![("order", Cell::Num(order as u64))],
            table: "coefficients",
            header: vec!["coefficient"],
            rows,
        },
    };
    Ok((record, 0))
}

fn cmd_verify(level: LevelArg, mutate: Option<MutateArg>) -> (Record, i32) {
    let fault = mutate.map(|MutateArg::GkExponent| Fault::GkExponent);
    let checks = run_suite(
        match level {
            LevelArg::Quick => Level::Quick,
            LevelArg::Full => Level::Full,
        },
        fault,
    );
    let passed = all_passed(&checks);
    if !passed {
        let failing: Vec<&str> = checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        eprintln!("verification failed: {}", failing.join(", "));
    }
    let rows = checks
        .iter()
        .map(|c| {
            vec![
                Cell::Text(c.name.into()),
                Cell::Flag(c.passed),
                Cell::Text(c.detail.clone()),
            ]
        })
        .collect();
    let record = Record {
        command: "verify",
        params: vec![
            ("level", Cell::Text(level.name().into())),
            (
                "mutate",
                match mutate {
                    Some(MutateArg::GkExponent) => Cell::Text("gk-exponent".into()),
                    None => Cell::Null,
                },
            ),
        ],
        payload: Payload::WithTable {
            fields: vec![("passed", Cell::Flag(passed))],
            table: "checks",
            header: vec!["name", "passed", "detail"],
            rows,
        },
    };
    (record, i32::from(!passed))
}
