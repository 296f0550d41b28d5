//! `schubert`: command-line access to Levi decompositions of Grassmannian
//! Schubert varieties.

mod render;

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_core::decompose::{check_monomials, decompose_degree};
use schubert_core::sphericity::{classify, empirical_multiplicity_check, scan, SphericityVerdict};
use schubert_core::straighten::oracle_agreements;
use schubert_core::{
    branching_of_rectangle, restrict_to_schubert, straighten, GrassmannWord, LeviContext, PluckerMonomial,
    SchubertContext,
};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Levi decompositions of Grassmannian Schubert varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Args, Clone)]
struct Grass {
    /// Ambient dimension N
    #[arg(long)]
    n: usize,
    /// Subspace dimension d
    #[arg(long)]
    d: usize,
}

#[derive(Args, Clone)]
struct Variety {
    #[command(flatten)]
    grass: Grass,
    /// Schubert word, e.g. 3,6,9 (defaults to the top word)
    #[arg(long)]
    w: Option<String>,
    /// Simple reflections of the Levi, e.g. 1,2,4 (defaults to the stabilizer set)
    #[arg(long = "r-q", value_delimiter = ',')]
    r_q: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum Command {
    /// Heads, their classes, and the Hasse partition
    Heads(Variety),
    /// Hasse diagram of the lower interval of w
    Hasse(Variety),
    /// Straighten a Plücker monomial such as "(1,4)(2,3)"
    Straighten {
        #[command(flatten)]
        grass: Grass,
        /// Drop terms vanishing on X(w)
        #[arg(long)]
        w: Option<String>,
        monomial: String,
        /// Compare against products of minors of random integer matrices
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Standard monomials of a given degree
    StdMonomials {
        #[command(flatten)]
        variety: Variety,
        #[arg(long)]
        degree: usize,
        /// Print only the number of monomials
        #[arg(long)]
        count: bool,
    },
    /// Decomposition of the degree-r component into irreducibles
    Decompose {
        #[command(flatten)]
        variety: Variety,
        #[arg(long)]
        degree: usize,
    },
    /// Check the dimension identity (and optionally characters) degree by degree
    Dimcheck {
        #[command(flatten)]
        grass: Grass,
        #[arg(long, conflicts_with = "all_w")]
        w: Option<String>,
        /// Every w in I_{d,N}
        #[arg(long)]
        all_w: bool,
        /// Every Levi inside the stabilizer, not just the largest
        #[arg(long)]
        all_levis: bool,
        /// Also compare characters and check the tableau bijection
        #[arg(long)]
        characters: bool,
        #[arg(long)]
        max_degree: usize,
    },
    /// Multiplicity-freeness verdicts
    Spherical {
        #[command(flatten)]
        grass: Grass,
        #[arg(long, conflicts_with = "scan")]
        w: Option<String>,
        /// Every w in I_{d,N}
        #[arg(long)]
        scan: bool,
        /// Degree bound of the empirical check (0 skips it)
        #[arg(long, default_value_t = 0)]
        max_degree: usize,
    },
    /// Branching of the dual of W^{(r^d)} to a block Levi
    Branch {
        /// Block sizes, e.g. 2,2
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        degree: usize,
    },
}

/// Failures mapped to exit codes 2 and 1.
enum Failure {
    Input(String),
    Check(String),
}

impl From<schubert_core::Error> for Failure {
    fn from(e: schubert_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(format!("{e:#}"))
    }
}

type Outcome = Result<String, Failure>;

fn parse_word(s: &str) -> Result<GrassmannWord, Failure> {
    Ok(s.parse()?)
}

fn context(g: &Grass, w: Option<&str>) -> Result<SchubertContext, Failure> {
    if g.d == 0 || g.d >= g.n {
        return Err(Failure::Input(format!("need 1 <= d < N, got d={} N={}", g.d, g.n)));
    }
    match w {
        None => Ok(SchubertContext::full(g.n, g.d)?),
        Some(w) => Ok(SchubertContext::new(g.n, g.d, parse_word(w)?)?),
    }
}

fn levi(v: &Variety) -> Result<LeviContext, Failure> {
    let ctx = context(&v.grass, v.w.as_deref())?;
    match &v.r_q {
        None => Ok(LeviContext::of_stabilizer(ctx)),
        Some(r_q) => Ok(LeviContext::new(ctx, r_q.iter().copied().collect())?),
    }
}

fn only(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Input("this command does not support the requested format".into()))
    }
}

fn subsets(set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let items: Vec<usize> = set.iter().copied().collect();
    (0..1u64 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x).collect())
        .collect()
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Heads(v) => Ok(render::heads(&levi(v)?, format)?),
        Command::Hasse(v) => Ok(render::hasse(&levi(v)?, format)?),
        Command::Straighten { grass, w, monomial, verify, seed, trials } => {
            only(format, &[Format::Text, Format::Json])?;
            let ctx = context(grass, w.as_deref())?;
            let m: PluckerMonomial = monomial.parse()?;
            for f in m.factors() {
                ctx.check(f)?;
            }
            let full = straighten(&m);
            let expansion = if w.is_some() { restrict_to_schubert(&full, ctx.w()) } else { full.clone() };
            let oracle = verify.then(|| oracle_agreements(&m, &full, ctx.n(), *seed, *trials));
            let out = render::straightened(&m, &expansion, oracle, *trials, format)?;
            match oracle {
                Some(k) if k != *trials => Err(Failure::Check(out)),
                _ => Ok(out),
            }
        }
        Command::StdMonomials { variety, degree, count } => {
            only(format, &[Format::Text, Format::Json, Format::Csv])?;
            let ctx = levi(variety)?.ctx().clone();
            if *count {
                return Ok(render::count(&ctx.count_std_monomials(*degree), format)?);
            }
            Ok(render::monomials(&ctx.std_monomials(*degree), format)?)
        }
        Command::Decompose { variety, degree } => {
            only(format, &[Format::Text, Format::Json])?;
            if *degree == 0 {
                return Err(Failure::Input("degree must be at least 1".into()));
            }
            let levi = levi(variety)?;
            let report = decompose_degree(&levi, *degree);
            let out = render::decomposition(&report, format)?;
            report.verify(&levi).map_err(|e| Failure::Check(format!("{out}\ncheck failed: {e}")))?;
            Ok(out)
        }
        Command::Dimcheck { grass, w, all_w, all_levis, characters, max_degree } => {
            only(format, &[Format::Text])?;
            let words = if *all_w {
                SchubertContext::all_words(grass.n, grass.d)
            } else {
                vec![context(grass, w.as_deref())?.w().clone()]
            };
            let mut cases = 0usize;
            let mut failures = Vec::new();
            for w in words {
                let ctx = context(grass, Some(&w.to_string()))?;
                let levis = if *all_levis { subsets(&ctx.stabilizer_set()) } else { vec![ctx.stabilizer_set()] };
                for r_q in levis {
                    let levi = LeviContext::new(ctx.clone(), r_q)?;
                    for r in 1..=*max_degree {
                        cases += 1;
                        let report = decompose_degree(&levi, r);
                        if let Err(e) = report.verify(&levi) {
                            failures.push(format!("w={} R_Q={:?} r={r}: {e}", ctx.w(), levi.r_q()));
                        }
                        if *characters {
                            let check = check_monomials(&levi, r);
                            if !(check.psi_bijective && check.character_matches) {
                                failures.push(format!(
                                    "w={} R_Q={:?} r={r}: {:?}",
                                    ctx.w(),
                                    levi.r_q(),
                                    check.failures
                                ));
                            }
                        }
                    }
                }
            }
            if failures.is_empty() {
                Ok(format!("{cases} cases checked: all pass\n"))
            } else {
                Err(Failure::Check(format!("{}\n{} of {cases} cases failed\n", failures.join("\n"), failures.len())))
            }
        }
        Command::Spherical { grass, w, scan: all, max_degree } => {
            only(format, &[Format::Text, Format::Json, Format::Csv])?;
            let verdicts: Vec<SphericityVerdict> = if *all {
                context(grass, None)?;
                scan(grass.n, grass.d, *max_degree)?
            } else {
                let ctx = context(grass, w.as_deref())?;
                let mut v = classify(&ctx);
                if *max_degree > 0 {
                    v.empirical = Some(empirical_multiplicity_check(&LeviContext::of_stabilizer(ctx), *max_degree));
                }
                vec![v]
            };
            let out = render::verdicts(&verdicts, format)?;
            let unsound = verdicts.iter().find(|v| {
                v.theorem_verdict == schubert_core::TheoremVerdict::MultiplicityFreeCertified
                    && v.empirical.as_ref().is_some_and(|e| !e.multiplicity_free_up_to_bound)
            });
            match unsound {
                Some(v) => Err(Failure::Check(format!("{out}\ncertified word {} has a repeated constituent\n", v.w))),
                None => Ok(out),
            }
        }
        Command::Branch { blocks, d, degree } => {
            only(format, &[Format::Text, Format::Json])?;
            if *degree == 0 {
                return Err(Failure::Input("degree must be at least 1".into()));
            }
            let n: usize = blocks.iter().sum();
            if *d == 0 || *d >= n {
                return Err(Failure::Input(format!("need 1 <= d < N, got d={d} N={n}")));
            }
            let report = branching_of_rectangle(blocks, *d, *degree)?;
            Ok(render::decomposition(&report, format)?)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, ExitCode::SUCCESS),
        Err(Failure::Check(text)) => (text, ExitCode::from(1)),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    code
}
