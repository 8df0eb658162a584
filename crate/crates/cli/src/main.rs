use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use freelie::lie;
use freelie::ncpoly::{NcPoly, Ring};
use freelie::partitions::{self, Tabloid};
use freelie::pascal;
use freelie::words::{Alphabet, Word};
use freelie::Error;
use freelie_cli::{golden, verify};

/// Exact computations around the adjoint of the left normed Lie bracketing:
/// support membership, twin classification, kernel tables and verification
/// suites.
#[derive(Parser)]
#[command(name = "freelie", version, about)]
struct Cli {
    /// Cap the number of worker threads for parallel enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the adjoint image l*(w) of a word.
    Lstar {
        word: String,
        /// Coefficient ring: 0 for the integers, m >= 2 for integers mod m.
        #[arg(long = "mod", default_value_t = 0)]
        modulus: u64,
        /// Algorithm: `recursive`, `factors:<r>`, or `oracle`.
        #[arg(long, default_value = "recursive")]
        algo: String,
        /// Override the alphabet (default: letters in first-occurrence order).
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the gcd invariant c(w) of a word.
    Cw {
        word: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Does the word appear in some Lie polynomial over the chosen ring?
    Support {
        word: String,
        #[arg(long = "mod", default_value_t = 0)]
        modulus: u64,
        /// Also print a Lie polynomial witnessing c(w).
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Classify a pair of words as twin / anti-twin / both / neither.
    Twin {
        u: String,
        v: String,
        #[arg(long = "mod", default_value_t = 0)]
        modulus: u64,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Enumerate kernel solutions: tabloids annihilated by the bracketing
    /// element mod m, or two-letter subset tables with `--two-letter`.
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long = "mod")]
        modulus: u64,
        /// Number of blocks (tabloid mode); all of 2..=ceil(n/2) if omitted.
        #[arg(long)]
        parts: Option<usize>,
        /// Emit only the generating antichain of solutions.
        #[arg(long)]
        minimal: bool,
        /// Two-letter mode: subsets I with p_n(I) = 0 mod m, grouped by |I|.
        #[arg(long)]
        two_letter: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite: `appendix`, `identities` or `conjectures`.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BudgetExceeded(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_word(text: &str, alphabet: &Option<String>) -> Result<(Alphabet, Word), Failure> {
    match alphabet {
        Some(letters) => {
            let alpha = Alphabet::from_str_letters(letters)?;
            let word = alpha.parse_word(text)?;
            Ok((alpha, word))
        }
        None => Ok(Alphabet::infer(text)?),
    }
}

fn poly_json(p: &NcPoly, alpha: &Alphabet) -> Result<serde_json::Value, Failure> {
    let terms = p
        .terms()
        .map(|(w, c)| {
            Ok(serde_json::json!({
                "word": alpha.format_word(w)?,
                "coeff": c.to_string(),
            }))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(serde_json::Value::Array(terms))
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Lstar {
            word,
            modulus,
            algo,
            alphabet,
            format,
        } => {
            let (alpha, w) = parse_word(&word, &alphabet)?;
            let ring = Ring::from_flag(modulus)?;
            let image = match algo.as_str() {
                "recursive" => lie::adjoint(&w, ring),
                "oracle" => lie::adjoint_oracle(&w, alpha.size(), ring)?,
                other => match other.strip_prefix("factors:") {
                    Some(r) => {
                        let r: usize = r.parse().map_err(|_| Failure {
                            code: 2,
                            message: format!("bad factor length in --algo {other:?}"),
                        })?;
                        lie::adjoint_via_factors(&w, r, ring)?
                    }
                    None => {
                        return Err(Failure {
                            code: 2,
                            message: format!(
                                "unknown --algo {other:?}: expected recursive, factors:<r> or oracle"
                            ),
                        })
                    }
                },
            };
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "word": word,
                        "mod": modulus,
                        "terms": poly_json(&image, &alpha)?,
                    })
                ),
                _ => println!("{}", image.to_text(&alpha)?),
            }
            Ok(0)
        }
        Command::Cw { word, alphabet } => {
            let (_, w) = parse_word(&word, &alphabet)?;
            println!("{}", lie::coefficient_gcd(&w));
            Ok(0)
        }
        Command::Support {
            word,
            modulus,
            witness,
            alphabet,
        } => {
            let (alpha, w) = parse_word(&word, &alphabet)?;
            let member = lie::in_support(&w, modulus)?;
            println!("{}", if member { "yes" } else { "no" });
            if witness {
                match lie::witness_polynomial(&w) {
                    Ok(q) => {
                        let value = q
                            .scalar_product(&NcPoly::word(w.clone(), Ring::Int))
                            .expect("same ring");
                        println!("witness: {}", q.to_text(&alpha)?);
                        println!("witness value: {value}");
                    }
                    Err(Error::ZeroAdjoint) => println!("witness: none (c(w) = 0)"),
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(0)
        }
        Command::Twin {
            u,
            v,
            modulus,
            alphabet,
        } => {
            // a shared alphabet keeps the letter indices of both words aligned
            let (alpha, wu) = match &alphabet {
                Some(letters) => {
                    let alpha = Alphabet::from_str_letters(letters)?;
                    let wu = alpha.parse_word(&u)?;
                    (alpha, wu)
                }
                None => {
                    let combined = format!("{u}{v}");
                    let (alpha, _) = Alphabet::infer(&combined)?;
                    let wu = alpha.parse_word(&u)?;
                    (alpha, wu)
                }
            };
            let wv = alpha.parse_word(&v)?;
            println!("{}", lie::twin_relation(&wu, &wv, modulus)?);
            Ok(0)
        }
        Command::Kernel {
            n,
            modulus,
            parts,
            minimal,
            two_letter,
            format,
        } => {
            if two_letter {
                let groups = pascal::kernel_subsets(n, modulus)?;
                match format {
                    Format::Text => {
                        for (s, masks) in &groups {
                            let row = masks
                                .iter()
                                .map(|&m| format!("{{{}}}", pascal::format_subset(m)))
                                .collect::<Vec<_>>()
                                .join(" ");
                            println!("n={n} s={s}: {row}");
                        }
                    }
                    Format::Csv => {
                        println!("n,s,subset");
                        for (s, masks) in &groups {
                            for &m in masks {
                                println!("{}", golden::csv_row(n, *s, m));
                            }
                        }
                    }
                    Format::Json => {
                        let groups_json: Vec<_> = groups
                            .iter()
                            .map(|(s, masks)| {
                                serde_json::json!({
                                    "s": s,
                                    "subsets": masks
                                        .iter()
                                        .map(|&m| pascal::format_subset(m))
                                        .collect::<Vec<_>>(),
                                })
                            })
                            .collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "n": n, "mod": modulus, "two_letter": true,
                                "groups": groups_json,
                            })
                        );
                    }
                }
                return Ok(0);
            }

            if n == 0 || n > 64 {
                return Err(Failure {
                    code: 2,
                    message: format!("n must be in 1..=64, got {n}"),
                });
            }
            let solutions: Vec<Tabloid> = if minimal {
                guard_tabloid_budget(n, n.div_ceil(2))?;
                partitions::minimal_solutions(n, modulus)?
            } else if let Some(r) = parts {
                guard_tabloid_budget(n, r)?;
                partitions::kernel_enumerate(n, modulus, r)?
            } else {
                guard_tabloid_budget(n, n.div_ceil(2))?;
                let mut all = Vec::new();
                for r in 2..=n.div_ceil(2).max(2).min(n) {
                    all.extend(partitions::kernel_enumerate(n, modulus, r)?);
                }
                all
            };
            match format {
                Format::Text => {
                    for t in &solutions {
                        println!("{t}");
                    }
                }
                Format::Csv => {
                    println!("n,parts,tabloid");
                    for t in &solutions {
                        println!("{n},{},\"{t}\"", t.parts());
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "n": n, "mod": modulus, "minimal": minimal,
                        "solutions": solutions.iter().map(Tabloid::to_string).collect::<Vec<_>>(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            max_n,
            format,
        } => {
            let report = verify::run_suite(&suite, max_n).ok_or_else(|| Failure {
                code: 2,
                message: format!(
                    "unknown suite {suite:?}: expected appendix, identities or conjectures"
                ),
            })?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                _ => print!("{}", report.render_text()),
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

/// Refuse kernel searches whose tabloid count times the bracketing support
/// would run unreasonably long.
fn guard_tabloid_budget(n: usize, max_parts: usize) -> Result<(), Failure> {
    let mut total = BigInt::from(0u32);
    for r in 1..=max_parts.min(n) {
        total += partitions::stirling2(n, r);
    }
    let cost = total * BigInt::from(1u128 << (n - 1).min(70));
    if cost > BigInt::from(300_000_000u64) {
        return Err(Failure {
            code: 3,
            message: format!("kernel search budget exceeded for n={n}"),
        });
    }
    Ok(())
}
