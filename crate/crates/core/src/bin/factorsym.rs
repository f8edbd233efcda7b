//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a sweep finds a counterexample or a
//! property check fails internally, 2 on usage or input errors.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use itertools::Itertools;
use serde_json::{json, Value};

use factorsym::attractor::{cut_attractor, is_attractor, is_circular_attractor, minimum_attractor, PositionSet};
use factorsym::bijection::bijection_table;
use factorsym::classify::{classify, is_christoffel};
use factorsym::geometry::{generate_lower, generate_upper, palindromic_factorization, path, predicted_support};
use factorsym::spectrum::{delta_fast, SupportSet};
use factorsym::verify::{scan_open_question, verify, Bounds, TheoremId};
use factorsym::{Error, Word};

const MAX_REPORT_LEN: usize = 5000;

#[derive(Parser)]
#[command(name = "factorsym", version, about = "Factor spectra and Christoffel word symmetries")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classification, factor array, profile and support of a word.
    Report { word: String },
    /// Lower (default) or upper Christoffel word with Parikh vector (P, Q).
    Generate {
        p: usize,
        q: usize,
        #[arg(long)]
        upper: bool,
        /// Also print the lattice path, one "x y" line per point.
        #[arg(long)]
        path: bool,
    },
    /// The factor spectrum as a grid (default) or JSON.
    Spectrum {
        word: String,
        #[arg(long, conflicts_with = "json")]
        grid: bool,
    },
    /// Palindromic-cut bijection table for factor length K.
    Bijection { word: String, k: usize },
    /// Attractors of a word.
    Attractor(AttractorArgs),
    /// Exhaustive check of one property up to a bound.
    Verify {
        theorem: String,
        #[arg(long)]
        bound: usize,
        /// Largest exponent for T3 and T6.
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
    /// Primitive, trapezoidal, unbalanced, strongly factor-symmetric words.
    Scan {
        #[arg(long)]
        max_length: usize,
    },
}

#[derive(Args)]
struct AttractorArgs {
    word: String,
    /// Search for a minimum attractor.
    #[arg(long, conflicts_with = "check")]
    min: bool,
    /// Check the given 1-based positions.
    #[arg(long, value_delimiter = ',')]
    check: Option<Vec<usize>>,
    /// With --check, test the circular attractor property.
    #[arg(long, requires = "check")]
    circular: bool,
}

enum Failure {
    Usage(String),
    Counterexample(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) => Failure::Counterexample(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Counterexample(out)) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_word(s: &str) -> std::result::Result<Word, Failure> {
    Ok(s.parse::<Word>()?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn show_support(s: &SupportSet) -> String {
    s.points().iter().join(" ")
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Report { word } => report(&parse_word(word)?, cli.json),
        Command::Generate { p, q, upper, path: with_path } => {
            let word = if *upper { generate_upper(*p, *q)? } else { generate_lower(*p, *q)? };
            let points = path(&word);
            if cli.json {
                let mut v = json!({ "word": word });
                if *with_path {
                    v["path"] = serde_json::to_value(&points).unwrap();
                }
                Ok(pretty(&v))
            } else if *with_path {
                Ok(format!("{word}\n{}", points.to_text()))
            } else {
                Ok(format!("{word}\n"))
            }
        }
        Command::Spectrum { word, grid: _ } => {
            let word = parse_word(word)?;
            let spectrum = delta_fast(&word);
            if cli.json {
                let mut s = serde_json::to_string(&spectrum.to_json(&word)).unwrap();
                s.push('\n');
                Ok(s)
            } else {
                Ok(spectrum.to_grid())
            }
        }
        Command::Bijection { word, k } => {
            let table = bijection_table(&parse_word(word)?, *k)?;
            if cli.json {
                Ok(pretty(&serde_json::to_value(&table).unwrap()))
            } else {
                Ok(table.to_text())
            }
        }
        Command::Attractor(args) => attractor(args, cli.json),
        Command::Verify { theorem, bound, max_k } => {
            let id: TheoremId = theorem.parse()?;
            let run = verify(id, Bounds { bound: *bound, max_k: *max_k })?;
            let out = if cli.json {
                pretty(&serde_json::to_value(&run).unwrap())
            } else {
                let mut s = format!(
                    "{} {} ({} {}): checked {}, counterexamples {}\n",
                    run.theorem,
                    if run.passed() { "PASS" } else { "FAIL" },
                    id.bound_kind(),
                    bound,
                    run.checked_count,
                    run.counterexamples.len()
                );
                for w in &run.counterexamples {
                    s.push_str(&format!("  {w}\n"));
                }
                s
            };
            if run.passed() {
                Ok(out)
            } else {
                Err(Failure::Counterexample(out))
            }
        }
        Command::Scan { max_length } => {
            let results = scan_open_question(*max_length)?;
            if cli.json {
                Ok(pretty(&serde_json::to_value(&results).unwrap()))
            } else {
                let mut s = String::new();
                for r in &results {
                    for w in &r.words {
                        s.push_str(&format!("{}\t{w}\n", r.length));
                    }
                }
                Ok(s)
            }
        }
    }
}

fn attractor(args: &AttractorArgs, as_json: bool) -> CmdResult {
    let word = parse_word(&args.word)?;
    if let Some(positions) = &args.check {
        let set = PositionSet::new(positions.iter().copied());
        let (kind, ok) = if args.circular {
            ("circular_attractor", is_circular_attractor(&word, &set)?)
        } else {
            ("attractor", is_attractor(&word, &set)?)
        };
        return Ok(if as_json {
            pretty(&json!({ "word": word, "positions": set, kind: ok }))
        } else {
            format!("{kind} {set}: {ok}\n")
        });
    }
    let use_cut = !args.min && !word.is_empty() && is_christoffel(&word)? && word.len() >= 2;
    let (kind, set) = if use_cut {
        ("cut_attractor", cut_attractor(&word)?)
    } else {
        ("minimum_attractor", minimum_attractor(&word)?)
    };
    Ok(if as_json {
        pretty(&json!({ "word": word, kind: set }))
    } else {
        format!("{kind}: {set}\n")
    })
}

fn report(word: &Word, as_json: bool) -> CmdResult {
    if word.is_empty() || word.len() > MAX_REPORT_LEN {
        return Err(Failure::Usage(format!("report needs 1 to {MAX_REPORT_LEN} letters")));
    }
    let class = classify(word)?;
    let spectrum = delta_fast(word);
    let profile = spectrum.profile();
    let support = spectrum.support();
    let strongly = spectrum.is_strongly_symmetric();
    let factor_symmetric = profile.is_symmetric();
    let support_symmetric = support.is_symmetric_in(word.parikh());

    let christoffel = if class.christoffel && word.len() >= 2 {
        let cut = palindromic_factorization(word)?;
        let attractor = cut_attractor(word)?;
        let predicted = predicted_support(word)?;
        Some((cut, attractor, predicted))
    } else {
        None
    };

    if as_json {
        let mut v = serde_json::to_value(&class).unwrap();
        v["parikh"] = serde_json::to_value(word.parikh()).unwrap();
        v["strongly_factor_symmetric"] = json!(strongly);
        v["factor_symmetric"] = json!(factor_symmetric);
        v["support_symmetric"] = json!(support_symmetric);
        v["spectrum"] = serde_json::to_value(spectrum.to_json(word)).unwrap();
        v["profile"] = serde_json::to_value(&profile).unwrap();
        v["support"] = serde_json::to_value(&support).unwrap();
        if let Some((cut, attractor, predicted)) = &christoffel {
            v["palindromic_cut"] = json!({ "cut": cut.cut, "left": cut.left, "right": cut.right });
            v["cut_attractor"] = serde_json::to_value(attractor).unwrap();
            v["predicted_support_matches"] = json!(*predicted == support);
            v["predicted_support"] = serde_json::to_value(predicted).unwrap();
        }
        return Ok(pretty(&v));
    }

    let mut s = String::new();
    s.push_str(&format!("word: {word}\nparikh: {}\n", word.parikh()));
    for (name, value) in [
        ("balanced", class.balanced),
        ("lyndon", class.lyndon),
        ("unbordered", class.unbordered),
        ("primitive", class.primitive),
        ("trapezoidal", class.trapezoidal),
        ("christoffel", class.christoffel),
        ("conjugate_of_christoffel", class.conjugate_of_christoffel),
        ("strongly_factor_symmetric", strongly),
        ("factor_symmetric", factor_symmetric),
        ("support_symmetric", support_symmetric),
    ] {
        s.push_str(&format!("{name}: {value}\n"));
    }
    s.push_str("factor array:\n");
    s.push_str(&spectrum.to_grid());
    s.push_str(&format!("profile: {}\n", profile.values().iter().join(" ")));
    s.push_str(&format!("support: {}\n", show_support(&support)));
    if let Some((cut, attractor, predicted)) = christoffel {
        s.push_str(&format!("palindromic cut: {} . {} (cut {})\n", cut.left, cut.right, cut.cut));
        s.push_str(&format!("cut attractor: {attractor}\n"));
        s.push_str(&format!(
            "predicted support: {} (matches: {})\n",
            show_support(&predicted),
            predicted == support
        ));
    }
    Ok(s)
}
