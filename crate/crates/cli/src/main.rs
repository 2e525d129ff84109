//! `hwv`: Hilbert series of highest weight varieties, Catalan/Narayana numbers,
//! and identity verification from the command line.

mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};

use hwv_core::combinatorics::{
    catalan_classic, catalan_ddim, catalan_weyl, Family, Letter, NarayanaRow, RootSystemType,
};
use hwv_core::hilbert::{hilbert_grassmannian, hilbert_highest_weight, hilbert_min_orbit};
use hwv_core::identities::{run_suite, Grid, Suite};
use hwv_core::weyl::weyl_dim;
use hwv_core::{DominantWeight, Error};

use output::{Format, OutputDocument, Payload};

/// Environment variable capping every verification grid bound.
const GRID_CAP_VAR: &str = "HWV_GRID_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "hwv",
    version,
    about = "Exact Hilbert series of highest weight varieties"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Catalan numbers: classic (--n), d-dimensional (--ddim, --n), or of a Weyl type.
    Catalan {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        ddim: Option<usize>,
        /// Root system letter (A-G).
        #[arg(long = "weyl-type")]
        weyl_type: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// A row of a Narayana triangle: classic, --type A|B, --ddim d, or --ddim d --type A.
    Narayana {
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        ddim: Option<usize>,
        #[arg(long)]
        row: usize,
    },
    /// Dimension of the irreducible sl_{m+1} module with the given Dynkin labels.
    Dim {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weight: Vec<i64>,
        #[arg(long, default_value_t = 1)]
        scale: u64,
    },
    /// Hilbert series of a highest weight variety.
    Hilbert(HilbertArgs),
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        #[arg(long = "m-max")]
        m_max: Option<usize>,
        #[arg(long = "d-max")]
        d_max: Option<usize>,
        #[arg(long = "k-max")]
        k_max: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Print passing reports too (plain format).
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Debug, Args)]
struct HilbertArgs {
    /// Expansion order (default: twice the pole order).
    #[arg(long, global = true)]
    expand: Option<usize>,

    #[command(subcommand)]
    variety: Variety,
}

#[derive(Debug, Subcommand)]
enum Variety {
    /// Affine cone over Gr(d, n+d+1).
    Grassmannian {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Closure of the minimal nilpotent orbit of sl_{n+1}.
    MinimalOrbit {
        #[arg(long)]
        n: usize,
    },
    /// Highest weight variety of an arbitrary nonzero dominant weight.
    Weight {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weight: Vec<i64>,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Range { .. }
            | Error::Domain(_)
            | Error::InvalidType { .. }
            | Error::UnknownSuite(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

struct Outcome {
    command: String,
    params: BTreeMap<String, String>,
    payload: Payload,
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn weight_from(rank: usize, labels: &[i64]) -> Result<DominantWeight, Failure> {
    if labels.len() != rank {
        return Err(Failure::Usage(format!(
            "--weight has {} labels but --rank is {rank}",
            labels.len()
        )));
    }
    Ok(DominantWeight::from_signed(labels)?)
}

fn labels_string(labels: &[i64]) -> String {
    labels
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Catalan {
            n,
            ddim,
            weyl_type,
            rank,
        } => {
            let (label, value, p) = match (weyl_type, rank, ddim, n) {
                (Some(letter), Some(rank), None, None) => {
                    let ty = RootSystemType::new(letter.parse::<Letter>()?, rank)?;
                    (
                        format!("weyl {ty}"),
                        catalan_weyl(ty)?,
                        params([
                            ("weyl-type", letter.to_ascii_uppercase()),
                            ("rank", rank.to_string()),
                        ]),
                    )
                }
                (None, None, Some(d), Some(n)) => (
                    format!("{d}-dimensional"),
                    catalan_ddim(d, n)?,
                    params([("ddim", d.to_string()), ("n", n.to_string())]),
                ),
                (None, None, None, Some(n)) => (
                    "classic".to_string(),
                    catalan_classic(n),
                    params([("n", n.to_string())]),
                ),
                _ => {
                    return Err(Failure::Usage(
                        "catalan takes --n, --ddim D --n N, or --weyl-type X --rank R".into(),
                    ))
                }
            };
            Ok(Outcome {
                command: "catalan".into(),
                params: p,
                payload: Payload::Value { label, value },
            })
        }
        Command::Narayana { ty, ddim, row } => {
            let ty = ty.map(|t| t.to_ascii_uppercase());
            let family = match (ty.as_deref(), ddim) {
                (None, None) => Family::Classic,
                (Some("A"), None) => Family::TypeA,
                (Some("B"), None) => Family::TypeB,
                (None, Some(d)) => Family::Dimensional { d },
                (Some("A"), Some(d)) => Family::DimensionalA { d },
                _ => {
                    return Err(Failure::Usage(
                        "narayana takes --type A|B, --ddim D, or --ddim D --type A".into(),
                    ))
                }
            };
            let r = NarayanaRow::new(family, row)?;
            let mut p = params([("row", row.to_string())]);
            if let Some(t) = ty {
                p.insert("type".into(), t);
            }
            if let Some(d) = ddim {
                p.insert("ddim".into(), d.to_string());
            }
            Ok(Outcome {
                command: "narayana".into(),
                params: p,
                payload: Payload::Row {
                    label: family.to_string(),
                    sum: r.sum(),
                    coefficients: r.coefficients,
                },
            })
        }
        Command::Dim {
            rank,
            weight,
            scale,
        } => {
            let w = weight_from(rank, &weight)?;
            let value = weyl_dim(&w.scaled(scale))?;
            Ok(Outcome {
                command: "dim".into(),
                params: params([
                    ("rank", rank.to_string()),
                    ("weight", labels_string(&weight)),
                    ("scale", scale.to_string()),
                ]),
                payload: Payload::Value {
                    label: "dimension".into(),
                    value,
                },
            })
        }
        Command::Hilbert(args) => {
            let (name, mut p, series) = match args.variety {
                Variety::Grassmannian { d, n } => (
                    "grassmannian",
                    params([("d", d.to_string()), ("n", n.to_string())]),
                    hilbert_grassmannian(d, n)?,
                ),
                Variety::MinimalOrbit { n } => (
                    "minimal-orbit",
                    params([("n", n.to_string())]),
                    hilbert_min_orbit(n)?,
                ),
                Variety::Weight { rank, weight } => {
                    let w = weight_from(rank, &weight)?;
                    (
                        "weight",
                        params([
                            ("rank", rank.to_string()),
                            ("weight", labels_string(&weight)),
                        ]),
                        hilbert_highest_weight(&w)?,
                    )
                }
            };
            let order = args.expand.unwrap_or(2 * series.pole_order());
            p.insert("expand".into(), order.to_string());
            Ok(Outcome {
                command: format!("hilbert {name}"),
                params: p,
                payload: Payload::Hilbert {
                    expansion: series.expand(order),
                    series,
                },
            })
        }
        Command::Verify {
            suite,
            n_max,
            m_max,
            d_max,
            k_max,
            order,
            verbose,
        } => {
            let parsed: Suite = suite.parse()?;
            let cap = match std::env::var(GRID_CAP_VAR) {
                Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| {
                    Failure::Usage(format!("{GRID_CAP_VAR} must be a nonnegative integer"))
                })?),
                Err(_) => None,
            };
            let grid = Grid {
                n_max,
                m_max,
                d_max,
                k_max,
                order,
                cap,
            };
            let mut p = params([("suite", suite.clone())]);
            for (k, v) in [
                ("n-max", n_max),
                ("m-max", m_max),
                ("d-max", d_max),
                ("k-max", k_max),
                ("order", order),
                ("cap", cap),
            ] {
                if let Some(v) = v {
                    p.insert(k.into(), v.to_string());
                }
            }
            Ok(Outcome {
                command: "verify".into(),
                params: p,
                payload: Payload::Verify {
                    suite,
                    reports: run_suite(parsed, &grid),
                    verbose,
                },
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command) {
        Ok(outcome) => {
            let doc =
                OutputDocument::new(&outcome.command, outcome.params, format, &outcome.payload);
            print!("{}", doc.render(&outcome.payload));
            let failed = matches!(&outcome.payload,
                Payload::Verify { reports, .. } if reports.iter().any(|r| !r.passed()));
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n");
            eprintln!("{}", Cli::command().render_usage());
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
