//! `sperner`: command-line front end for `sperner-core`.
//!
//! Exit status: 0 when every requested property holds, 1 when one fails
//! (a witness is printed), 2 on invalid input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use sperner_core::construction::{
    compare, parse_celement, the_antichain_a, truncate_with_capacity, verify_claim_three,
    verify_claim_two_with_capacity, TruncationSpec,
};
use sperner_core::order::text::{parse_poset, render_dot, render_poset};
use sperner_core::order::{FinitePoset, Limits, Splitting};
use sperner_core::sampler::{verify_aeg, SampleConfig};

#[derive(Parser)]
#[command(name = "sperner", version, about = "Antichains, splitting and strong density in posets")]
struct Cli {
    /// Override every capacity bound (brute-force poset and antichain size,
    /// truncation size).
    #[arg(long, global = true, value_name = "N")]
    max_bruteforce: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a finite poset file (`elem <name>` / `cover <a> <b>` lines).
    CheckFinite {
        file: PathBuf,
        /// Check that every maximal antichain splits.
        #[arg(long)]
        splitting: bool,
        /// Check that every non-empty open interval holds two incomparable elements.
        #[arg(long)]
        strongly_dense: bool,
        /// Print every maximal antichain.
        #[arg(long)]
        list_maximal_antichains: bool,
        /// Check one antichain (comma-separated names) for maximality and splitting.
        #[arg(long, value_delimiter = ',', value_name = "NAMES")]
        antichain: Option<Vec<String>>,
        /// Write the Hasse diagram as DOT; a split of `--antichain` is colored.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Compare two elements of C given as literals, e.g. `(1,(0,e),0)`.
    CLeq { x: String, y: String },
    /// Export a finite fragment of C.
    CTruncate {
        #[arg(long)]
        levels: u32,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that A is maximal on a fragment of C and that A does not split.
    CClaims {
        #[arg(long, default_value_t = 2)]
        levels: u32,
        #[arg(long, default_value_t = 2)]
        depth: u32,
    },
    /// Check the splitting property on random strongly dense posets.
    VerifyAeg {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
}

struct Bounds {
    limits: Limits,
    truncation: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bounds = match cli.max_bruteforce {
        Some(n) => Bounds {
            limits: Limits::uniform(n),
            truncation: n,
        },
        None => Bounds {
            limits: Limits::default(),
            truncation: TruncationSpec::DEFAULT_CAPACITY,
        },
    };
    match run(cli.command, &bounds) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, bounds: &Bounds) -> Result<bool> {
    match command {
        Command::CheckFinite {
            file,
            splitting,
            strongly_dense,
            list_maximal_antichains,
            antichain,
            dot,
        } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let p = parse_poset(&text).with_context(|| format!("parsing {}", file.display()))?;
            check_finite(
                &p,
                Checks {
                    splitting,
                    strongly_dense,
                    list_maximal_antichains,
                    antichain,
                    dot,
                },
                bounds.limits,
            )
        }
        Command::CLeq { x, y } => {
            let x = parse_celement(&x).context("first element")?;
            let y = parse_celement(&y).context("second element")?;
            println!("{}", compare(&x, &y).symbol());
            Ok(true)
        }
        Command::CTruncate {
            levels,
            depth,
            format,
            out,
        } => {
            let t = truncate_with_capacity(TruncationSpec::new(levels, depth), bounds.truncation)?;
            let rendered = match format {
                Format::Text => render_poset(t.poset()),
                Format::Dot => render_dot(t.poset(), None),
            };
            emit(out.as_deref(), &rendered)?;
            Ok(true)
        }
        Command::CClaims { levels, depth } => c_claims(TruncationSpec::new(levels, depth), bounds),
        Command::VerifyAeg {
            size,
            count,
            seed,
            density,
        } => {
            let config = SampleConfig {
                size,
                count,
                seed,
                edge_density: density,
            };
            let report = verify_aeg(&config, bounds.limits)?;
            print!("{report}");
            Ok(report.passed())
        }
    }
}

struct Checks {
    splitting: bool,
    strongly_dense: bool,
    list_maximal_antichains: bool,
    antichain: Option<Vec<String>>,
    dot: Option<PathBuf>,
}

fn braces(p: &FinitePoset, set: &[usize]) -> String {
    format!("{{{}}}", p.names_of(set).join(","))
}

fn check_finite(p: &FinitePoset, checks: Checks, limits: Limits) -> Result<bool> {
    println!("poset elements={} covers={}", p.len(), p.cover_pairs().len());
    let mut ok = true;

    if checks.strongly_dense {
        match p.strong_density_violation() {
            None => println!("strongly-dense: true"),
            Some((x, y)) => {
                ok = false;
                let between: Vec<usize> = p.open_interval(x, y)?.into_iter().collect();
                println!(
                    "strongly-dense: false interval=({},{}) between={}",
                    p.name(x),
                    p.name(y),
                    braces(p, &between)
                );
            }
        }
    }

    if checks.list_maximal_antichains {
        let all = p.enumerate_maximal_antichains(limits)?;
        println!("maximal-antichains: {}", all.len());
        for a in &all {
            println!("antichain {}", braces(p, a.members()));
        }
    }

    if checks.splitting {
        match p.has_splitting_property(limits)? {
            Splitting::Holds { antichains } => {
                println!("splitting: true maximal_antichains={antichains}")
            }
            Splitting::Fails { antichain } => {
                ok = false;
                println!("splitting: false antichain={}", braces(p, antichain.members()));
            }
        }
    }

    let mut split = None;
    if let Some(names) = &checks.antichain {
        let a = p.indices_of(names)?;
        if !p.is_maximal_antichain(&a)? {
            ok = false;
            let kind = if p.is_antichain(&a)? { "not maximal" } else { "not an antichain" };
            println!("antichain {}: {kind}", braces(p, &a));
        } else {
            match p.try_split(&a, limits)? {
                Some(s) => {
                    println!(
                        "antichain {}: splits D={} U={}",
                        braces(p, &a),
                        braces(p, &s.down),
                        braces(p, &s.up)
                    );
                    split = Some(s);
                }
                None => {
                    ok = false;
                    println!("antichain {}: does not split", braces(p, &a));
                }
            }
        }
    }

    if let Some(out) = &checks.dot {
        emit(Some(out), &render_dot(p, split.as_ref()))?;
    }
    Ok(ok)
}

fn c_claims(spec: TruncationSpec, bounds: &Bounds) -> Result<bool> {
    let two = verify_claim_two_with_capacity(spec, bounds.truncation)?;
    print!("{two}");
    let three = verify_claim_three();
    print!("{three}");

    let t = truncate_with_capacity(spec, bounds.truncation)?;
    let (x, y) = the_antichain_a();
    let a = [
        t.index_of(&x).context("x̂ missing from fragment")?,
        t.index_of(&y).context("ŷ missing from fragment")?,
    ];
    let independent = if two.maximal_in_truncation {
        let found = t.poset().try_split(&a, bounds.limits)?;
        println!(
            "try-split fragment={} result={}",
            t.len(),
            if found.is_some() { "split-found" } else { "none" }
        );
        found.is_none()
    } else {
        println!("try-split skipped: A is not maximal in the fragment");
        false
    };
    let ok = two.passed() && three.passed() && independent;
    println!("claims {}", if ok { "pass" } else { "FAIL" });
    Ok(ok)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            if path.as_os_str().is_empty() {
                bail!("empty output path");
            }
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
