use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use vcubic::chow::{gamma_table, primed_transformation, restricted_chern_p5, segre_class_veronese, y_table};
use vcubic::cremona::{cremona_gram_image, involution_check, MarkedGram};
use vcubic::fm::fm_count;
use vcubic::lattice::{isometry_exists, parse_gram};
use vcubic::moduli::reports::DEFAULT_MAX_SEARCH;
use vcubic::moduli::{
    bigger_disc_report, c20_c14_survey, component_gram, identify_components, labelling_form, represented_discs,
    reproduce_new_rationals, veronese_frame,
};
use vcubic::verify::{run_verify, VerifyOptions, VerifyReport, GROUPS};
use vcubic::Error;

const MAX_SEARCH_VAR: &str = "VC_MAX_SEARCH";

#[derive(Parser)]
#[command(
    name = "vc",
    version,
    about = "Exact lattice computations for cubic fourfolds containing a Veronese surface"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-derive every tabulated constant and report pass/fail
    Verify {
        /// Machine-readable JSON (the default)
        #[arg(long, conflicts_with = "pretty")]
        json: bool,
        /// Human-readable table
        #[arg(long)]
        pretty: bool,
        /// Comma-separated check groups to run
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Largest d in the bigger-discriminant sweep
        #[arg(long, default_value_t = 80)]
        max_bigger_disc: i64,
    },
    /// Fourier-Mukai partner count for C_d
    FmCount { d: i64 },
    /// The component M_tau of C_{d1} cap C_{d2}
    Component {
        d1: i64,
        d2: i64,
        #[arg(allow_hyphen_values = true)]
        tau: i64,
    },
    /// The nine components of C20 cap C14 and their images
    #[command(name = "survey-c20-c14")]
    SurveyC20C14,
    /// The three families of new rational cubics
    NewRationals,
    /// Image component carrying a bigger admissible discriminant
    BiggerDisc {
        d: i64,
        /// Upper end of the search (default 500, or VC_MAX_SEARCH)
        #[arg(long)]
        max: Option<i64>,
    },
    /// Apply the Cremona image law to a marked Gram matrix
    CremonaImage {
        /// Marked Gram as a literal "3,4,1;4,12,1;1,1,9" or JSON
        gram: String,
        /// Re-frame the input first (its first basis vector must be h²)
        #[arg(long)]
        reframe: bool,
    },
    /// Labelling form, represented discriminants and components of a lattice
    Labellings {
        /// Gram matrix with h² first
        gram: String,
        /// Largest discriminant listed (default 200, or VC_MAX_SEARCH)
        #[arg(long)]
        max: Option<i64>,
    },
    /// Test two positive definite Gram matrices of rank at most 3 for isometry
    Isometric { first: String, second: String },
    /// Segre class of the Veronese surface in P5
    Segre,
    /// Check that the cofactor map composed with itself is det(N) N
    InvolutionCheck,
    /// Intersection tables on the blowups and the primed basis change
    ChowTables,
}

enum Failure {
    Usage(String),
    Computation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Asymmetric(..)
            | Error::NotSquare { .. }
            | Error::Ragged { .. }
            | Error::Degenerate
            | Error::Dimension(_)
            | Error::InvalidDiscriminant(_)
            | Error::OutsideCountingHypothesis(_)
            | Error::OutOfRange(_)
            | Error::NotVeroneseFrame => Failure::Usage(e.to_string()),
            _ => Failure::Computation(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

/// Writes to stdout; a closed pipe (e.g. `| head`) ends the process quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        std::process::exit(0);
    }
}

fn print<T: Serialize>(value: &T) -> Outcome {
    emit(&(serde_json::to_string(value).expect("reports serialize") + "\n"));
    Ok(ExitCode::SUCCESS)
}

fn env_bound(default: i64) -> Result<i64, Failure> {
    match std::env::var(MAX_SEARCH_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_SEARCH_VAR}={v} is not an integer"))),
        Err(_) => Ok(default),
    }
}

fn pretty_table(report: &VerifyReport) -> String {
    let mut out = String::new();
    let ids = report.checks.iter().map(|c| c.id.len()).chain(report.info.iter().map(|i| i.id.len()));
    let width = ids.max().unwrap_or(0);
    for c in &report.checks {
        let crit = c
            .criterion
            .map(|n| format!("[{n:>2}]"))
            .unwrap_or_else(|| "    ".into());
        out += &format!(
            "{} {crit} {:<width$}  {}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.id,
            c.reference
        );
        if !c.pass {
            out += &format!("          expected {}\n          computed {}\n", c.expected, c.computed);
        }
    }
    for i in &report.info {
        out += &format!("info      {:<width$}  {}\n", i.id, i.value);
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    out += &format!(
        "{} {passed}/{} checks in {} ms\n",
        if report.overall { "OVERALL PASS" } else { "OVERALL FAIL" },
        report.checks.len(),
        report.wall_time_ms
    );
    out
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify {
            json: _,
            pretty,
            only,
            max_bigger_disc,
        } => {
            if let Some(bad) = only.iter().flatten().find(|g| !GROUPS.contains(&g.as_str())) {
                return Err(Failure::Usage(format!(
                    "unknown check group '{bad}'; known: {}",
                    GROUPS.join(", ")
                )));
            }
            let opts = VerifyOptions {
                only,
                max_bigger_disc,
                max_search: env_bound(DEFAULT_MAX_SEARCH)?,
                ..VerifyOptions::default()
            };
            let report = run_verify(&opts);
            if pretty {
                emit(&pretty_table(&report));
            } else {
                emit(&(serde_json::to_string(&report).expect("report serializes") + "\n"));
            }
            Ok(if report.overall {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::FmCount { d } => print(&fm_count(d)?),
        Command::Component { d1, d2, tau } => print(&component_gram(d1, d2, tau)?),
        Command::SurveyC20C14 => print(&c20_c14_survey()?),
        Command::NewRationals => print(&reproduce_new_rationals()?),
        Command::BiggerDisc { d, max } => {
            let max = match max {
                Some(m) => m,
                None => env_bound(DEFAULT_MAX_SEARCH)?,
            };
            print(&bigger_disc_report(d, max)?)
        }
        Command::CremonaImage { gram, reframe } => {
            let source = if reframe {
                veronese_frame(&parse_gram(&gram)?)?
            } else {
                MarkedGram::parse(&gram)?
            };
            let image = cremona_gram_image(&source);
            print(&json!({
                "source": source,
                "image": image,
                "det": serde_json::to_value(vcubic::matrix::JsonInt(&image.det())).unwrap(),
                "labelling_form": labelling_form(image.gram())?,
            }))
        }
        Command::Labellings { gram, max } => {
            let g = parse_gram(&gram)?;
            let max = match max {
                Some(m) => m,
                None => env_bound(200)?,
            };
            let form = labelling_form(g.gram())?;
            let frame = veronese_frame(&g).ok();
            let components = match &frame {
                Some(f) => identify_components(f.gram(), 20, max)?,
                None => Vec::new(),
            };
            print(&json!({
                "form": form,
                "represented": represented_discs(&form, max)?,
                "veronese_frame": frame,
                "components_with_c20": components,
            }))
        }
        Command::Isometric { first, second } => {
            let (a, b) = (parse_gram(&first)?, parse_gram(&second)?);
            let witness = isometry_exists(&a, &b)?;
            print(&json!({ "isometric": witness.is_some(), "witness": witness }))
        }
        Command::Segre => print(&json!({
            "segre_class": segre_class_veronese(),
            "restricted_chern_p5": restricted_chern_p5(),
            "basis": ["1_V", "l", "pt"],
        })),
        Command::InvolutionCheck => {
            let r = involution_check()?;
            let code = if r.holds { ExitCode::SUCCESS } else { ExitCode::from(1) };
            print(&r)?;
            Ok(code)
        }
        Command::ChowTables => print(&json!({
            "gamma": gamma_table(),
            "y": y_table(),
            "basis_change": primed_transformation(),
        })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
