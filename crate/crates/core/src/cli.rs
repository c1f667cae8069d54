//! The `twistlab` command line. Exit codes: 0 when every requested check
//! passes, 1 when a check fails, 2 on usage or parse errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{self, suite::verify_braid_suite};
use crate::bracketing::{amove_path, enumerate_maximal, path_conjugator, Bracketing};
use crate::gt::{self, models, ActKind, Corpus, Env, GTWord, ProofScript};
use crate::report::{overall, CaseReport, Status, SuiteReport};
use crate::surface::suite::{verify_mcg_suite, Surface};
use crate::surface::{named_mcg, Mcg, McgWord};

#[derive(Parser, Debug)]
#[command(name = "twistlab", version, about = "Braid and mapping class group oracles with a GT rewriting checker")]
pub struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Braid group word problem.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Mapping class group word problem and suites.
    #[command(subcommand)]
    Mcg(McgCmd),
    /// Maximal bracketings and A-move paths.
    #[command(subcommand)]
    Bracketing(BracketingCmd),
    /// GT words, actions and proof scripts.
    #[command(subcommand)]
    Gt(GtCmd),
    /// Run every suite and the script corpus.
    Report {
        /// Directory of `.gts` scripts.
        #[arg(long, default_value = "scripts")]
        scripts: PathBuf,
        /// Largest genus for the presentation suites.
        #[arg(long, default_value_t = 3)]
        max_genus: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum BraidCmd {
    /// Garside normal form of `B<n>: <word>`.
    Nf { braid: String },
    /// Equality of two braids.
    Eq { lhs: String, rhs: String },
    /// The braid identity suite.
    Suite {
        /// Only cases whose id starts with this.
        #[arg(long)]
        case: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum McgCmd {
    /// Equality in Γ_{g,1} or Γ_{g,0}.
    Eq {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value = "g1")]
        surface: Surface,
        lhs: String,
        rhs: String,
    },
    /// Presentation, lantern, ι-kernel and named-element suites.
    Suite {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value = "g1")]
        surface: Surface,
        #[arg(long)]
        case: Option<String>,
    },
    /// A named element as a word in the generators.
    Expand {
        #[arg(long)]
        genus: usize,
        name: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum BracketingCmd {
    /// All maximal bracketings of `n` points.
    Enum { n: usize },
    /// The A-move path from `from` (default: standard) to `to`, and its conjugator.
    Path {
        #[arg(long)]
        from: Option<String>,
        to: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GtCmd {
    /// `F(target)` or `F_B(target)` in a context.
    Apply {
        /// `braid n=8`, `mcg g=4` or `mcg g=4 surface=g0`.
        #[arg(long)]
        context: String,
        /// Bracketing for `F_B`.
        #[arg(long)]
        bracketing: Option<String>,
        target: String,
    },
    /// Evaluate a GT word at `λ = ±1` with `f` trivial.
    Specialize {
        #[arg(long)]
        context: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Check a proof script; sibling scripts in its directory may be cited.
    Check {
        script: PathBuf,
        /// Print every intermediate word with atom positions.
        #[arg(long)]
        trace: bool,
    },
    /// Images of the defining relations under `(±1, trivial)`.
    Concrete {
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value = "g1")]
        surface: Surface,
    },
    /// Randomized model checks of the absorption identities.
    Haiku {
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

/// A usage or input error (exit 2).
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Usage {
        Usage(e.to_string())
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Text => print!("{}", text()),
    }
}

fn code(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn suite(format: Format, r: &SuiteReport) -> ExitCode {
    emit(format, r, || r.to_text());
    code(r.passed())
}

#[derive(Serialize)]
struct Answer<'a> {
    result: &'a str,
    value: String,
}

fn answer(format: Format, ok: bool, value: String) -> ExitCode {
    let a = Answer { result: if ok { "pass" } else { "fail" }, value };
    emit(format, &a, || format!("{}\n", a.value));
    code(ok)
}

fn load_corpus(script: &Path) -> Result<(Corpus, String), Usage> {
    let s = ProofScript::load(script)?;
    let dir = script.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut corpus = Corpus::load_dir(dir).unwrap_or_default();
    corpus.scripts.insert(s.id.clone(), s.clone());
    Ok((corpus, s.id))
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    let fmt = cli.format;
    Ok(match cli.command {
        Command::Braid(BraidCmd::Nf { braid: b }) => {
            let b = braid::parse_braid(&b)?;
            answer(fmt, true, braid::normal_form(&b).to_string())
        }
        Command::Braid(BraidCmd::Eq { lhs, rhs }) => {
            let (l, r) = (braid::parse_braid(&lhs)?, braid::parse_braid(&rhs)?);
            let eq = braid::braid_equal(&l, &r)?;
            answer(fmt, eq, if eq { "equal".into() } else { "not equal".into() })
        }
        Command::Braid(BraidCmd::Suite { case }) => suite(fmt, &verify_braid_suite(case.as_deref())),
        Command::Mcg(McgCmd::Eq { genus, surface, lhs, rhs }) => {
            let mcg = Mcg::new(genus)?;
            let (l, r) = (McgWord::parse(genus, &lhs)?, McgWord::parse(genus, &rhs)?);
            let eq = match surface {
                Surface::G1 => mcg.mcg_equal_g1(&l, &r)?,
                Surface::G0 => mcg.mcg_equal_g0(&l, &r)?,
            };
            answer(fmt, eq, if eq { "equal".into() } else { "not equal".into() })
        }
        Command::Mcg(McgCmd::Suite { genus, surface, case }) => suite(fmt, &verify_mcg_suite(genus, surface, case.as_deref())?),
        Command::Mcg(McgCmd::Expand { genus, name }) => {
            let spec = crate::surface::named::parse_named(&name).ok_or_else(|| Usage(format!("unknown element `{name}`")))?;
            answer(fmt, true, named_mcg(spec, genus)?.to_string())
        }
        Command::Bracketing(BracketingCmd::Enum { n }) => {
            let all: Vec<String> = enumerate_maximal(n)?.iter().map(|b| b.to_string()).collect();
            emit(fmt, &all, || all.iter().map(|b| format!("{b}\n")).collect::<String>() + &format!("{} bracketings\n", all.len()));
            ExitCode::SUCCESS
        }
        Command::Bracketing(BracketingCmd::Path { from, to }) => {
            let to: Bracketing = to.parse()?;
            let from = match from {
                Some(f) => f.parse()?,
                None => Bracketing::standard(to.n)?,
            };
            let path = amove_path(&from, &to)?;
            let moves: Vec<String> = path.iter().map(|m| m.to_string()).collect();
            let conj = path_conjugator(&path).to_string();
            #[derive(Serialize)]
            struct P {
                moves: Vec<String>,
                conjugator: String,
            }
            let p = P { moves, conjugator: conj };
            emit(fmt, &p, || p.moves.iter().map(|m| format!("{m}\n")).collect::<String>() + &format!("conjugator {}\n", p.conjugator));
            ExitCode::SUCCESS
        }
        Command::Gt(GtCmd::Apply { context, bracketing, target }) => {
            let mut env = Env::new(context.parse()?)?;
            let kind = match bracketing {
                Some(b) => {
                    env.bracketings.insert("B".into(), b.parse()?);
                    ActKind::Bracketed(Some("B".into()))
                }
                None => ActKind::Standard,
            };
            let w = env.parse_plain(&target)?;
            let out = env.act(&kind, &w, false)?;
            answer(fmt, true, out.to_string())
        }
        Command::Gt(GtCmd::Specialize { context, lambda, word }) => {
            let env = Env::new(context.parse()?)?;
            let w: GTWord = env.parse(&word)?;
            answer(fmt, true, env.specialize(&w, lambda)?.to_string())
        }
        Command::Gt(GtCmd::Check { script, trace }) => {
            let (corpus, id) = load_corpus(&script)?;
            let r = corpus.check(&id).expect("inserted");
            emit(fmt, &r, || {
                if trace {
                    let mut s = String::new();
                    for st in &r.steps {
                        s.push_str(&format!("{:>4} {} {} {}\n", st.line, st.status, st.rule, st.detail));
                        if let Some(x) = &st.result {
                            s.push_str(&format!("       {x}\n"));
                        }
                    }
                    s + &r.to_text()
                } else {
                    r.to_text()
                }
            });
            code(r.status == Status::Pass)
        }
        Command::Gt(GtCmd::Concrete { lambda, genus, surface }) => suite(fmt, &gt::verify_concrete_automorphism(lambda, genus, surface)?),
        Command::Gt(GtCmd::Haiku { trials }) => suite(fmt, &haiku_suite(cli.seed, trials)),
        Command::Report { scripts, max_genus } => {
            let mut suites = vec![verify_braid_suite(None)];
            for g in 2..=max_genus {
                suites.push(verify_mcg_suite(g, Surface::G1, None)?);
            }
            for g in 2..=max_genus.min(3) {
                for l in [1, -1] {
                    for s in [Surface::G1, Surface::G0] {
                        suites.push(gt::verify_concrete_automorphism(l, g, s)?);
                    }
                }
            }
            suites.push(haiku_suite(cli.seed, 100));
            if scripts.is_dir() {
                let corpus = Corpus::load_dir(&scripts)?;
                let cases = corpus
                    .check_all()
                    .into_iter()
                    .map(|r| CaseReport {
                        case: r.script.clone(),
                        genus: None,
                        strands: None,
                        status: r.status,
                        witness: Some(r.final_line()),
                        detail: format!("{} steps, {} unjustified", r.steps.len(), r.unjustified()),
                    })
                    .collect();
                suites.push(SuiteReport::new("scripts", cases));
            }
            let ok = overall(suites.iter().map(|s| s.status)) == Status::Pass;
            emit(fmt, &suites, || suites.iter().map(|s| s.to_text()).collect());
            code(ok)
        }
    })
}

/// The three model checks as one suite.
pub fn haiku_suite(seed: u64, trials: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reps = [
        models::haiku_i(&mut rng, trials),
        models::haiku_ii(&mut rng, trials, true),
        models::haiku_ii(&mut rng, trials, false),
        models::haiku_iii(&mut rng, trials),
    ];
    let cases = reps
        .iter()
        .enumerate()
        .map(|(i, r)| CaseReport {
            case: format!("{}{}", r.rule, if i == 2 { "-general" } else { "" }),
            genus: None,
            strands: None,
            status: if r.passed() { Status::Pass } else { Status::Fail },
            witness: None,
            detail: format!("{} trials, {} counterexamples {}", r.trials, r.counterexamples.len(), r.counterexamples.join("; ")),
        })
        .collect();
    SuiteReport::new("haiku", cases)
}

/// Parse `argv` and run; clap's own errors exit 2.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(c) => c,
        Err(Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
