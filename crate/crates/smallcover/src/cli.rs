//! Command-line surface: construct or ingest polytopes, run the analyses,
//! and emit JSON reports and homology tables.
//!
//! Exit codes: 0 on success (including negative verdicts), 1 on analysis
//! errors (guards, rank defects, invalid characteristic data), 2 on bad
//! input (unreadable files, malformed JSON, invalid incidence).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::charfunc::{self, CharFunc, SmallCoverSearch};
use crate::classify;
use crate::coxeter::{self, Pi1Target};
use crate::format;
use crate::polytope::SimplePolytope;
use crate::zhomology::{self, DEFAULT_CELL_GUARD};

/// Environment variable overriding the default cell guard of 2^20.
pub const CELL_GUARD_ENV: &str = "SMALLCOVER_CELL_GUARD";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    BadInput(String),
    #[error("{0}")]
    Analysis(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadInput(_) => 2,
            CliError::Analysis(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "smallcover",
    version,
    about = "Classify the manifolds glued over a simple polytope"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Simplex,
    Cube,
    Polygon,
    DualCyclic,
    Product,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MemberTarget {
    /// Fundamental group of the real moment-angle manifold.
    Rz,
    /// Fundamental group of the small cover of a characteristic function.
    Cover,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Family to construct.
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Dimension (simplex, cube, dual-cyclic).
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of edges (polygon).
    #[arg(long)]
    pub m: Option<usize>,
    /// Number of moment-curve points (dual-cyclic).
    #[arg(long)]
    pub k: Option<usize>,
    /// Left factor file (product).
    #[arg(long)]
    pub left: Option<PathBuf>,
    /// Right factor file (product).
    #[arg(long)]
    pub right: Option<PathBuf>,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a polytope and write its JSON file.
    Construct(ConstructArgs),
    /// Emit the full classification report.
    Analyze {
        input: PathBuf,
        /// Characteristic function file to use for the small cover.
        #[arg(long)]
        charfunc: Option<PathBuf>,
        /// Also compute Betti numbers of the glued manifolds.
        #[arg(long)]
        homology: bool,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Betti numbers of the quotient complex (the moment-angle manifold by
    /// default, or the small cover of the given characteristic function).
    Homology {
        input: PathBuf,
        #[arg(long)]
        charfunc: Option<PathBuf>,
        /// Write the full cell/boundary dump to this path.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Existence, enumeration, and validation of characteristic functions.
    Charfunc {
        input: PathBuf,
        /// Search for a small cover.
        #[arg(long, conflicts_with_all = ["enumerate", "validate"])]
        exists: bool,
        /// Enumerate all valid characteristic functions.
        #[arg(long, conflicts_with = "validate")]
        enumerate: bool,
        /// Count orbits under base change instead of raw functions.
        #[arg(long, requires = "enumerate")]
        modulo_gl: bool,
        /// Validate the given characteristic function file.
        #[arg(long)]
        validate: Option<PathBuf>,
    },
    /// Word reduction and fundamental-group membership.
    Word {
        input: PathBuf,
        /// Reduce the word file to its geodesic normal form.
        #[arg(long, conflicts_with = "member")]
        reduce: Option<PathBuf>,
        /// Membership test against the chosen kernel.
        #[arg(long, value_enum, requires = "word")]
        member: Option<MemberTarget>,
        /// Word file for --member.
        #[arg(long)]
        word: Option<PathBuf>,
        /// Characteristic function file (required for --member cover).
        #[arg(long)]
        charfunc: Option<PathBuf>,
    },
    /// Cross-check the equivalent real-Bott descriptions on one polytope.
    Audit { input: PathBuf },
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Analyze {
            input,
            charfunc,
            homology,
            output,
        } => {
            let p = read_polytope(&input)?;
            let lambda = charfunc.as_deref().map(read_charfunc).transpose()?;
            let report = classify::classify(&p, lambda.as_ref(), homology, cell_guard()?)
                .map_err(|e| CliError::Analysis(e.to_string()))?;
            write_or_return(output.as_deref(), report.to_json())
        }
        Command::Homology {
            input,
            charfunc,
            dump,
        } => {
            let p = read_polytope(&input)?;
            let lambda = match charfunc {
                Some(path) => read_charfunc(&path)?,
                None => charfunc::lambda0(&p).map_err(|e| CliError::Analysis(e.to_string()))?,
            };
            let complex = zhomology::build_complex(&p, &lambda, cell_guard()?)
                .map_err(|e| CliError::Analysis(e.to_string()))?;
            if let Some(path) = dump {
                let text = serde_json::to_string_pretty(&complex.dump_json())
                    .expect("dump serialization cannot fail");
                fs::write(&path, text + "\n")
                    .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))?;
            }
            let betti = zhomology::z2_betti(&complex);
            let mut out = serde_json::to_string(&betti).expect("betti serialization cannot fail");
            out.push('\n');
            Ok(out)
        }
        Command::Charfunc {
            input,
            exists,
            enumerate,
            modulo_gl,
            validate,
        } => {
            let p = read_polytope(&input)?;
            if exists {
                charfunc_exists(&p)
            } else if enumerate {
                charfunc_enumerate(&p, modulo_gl)
            } else if let Some(path) = validate {
                charfunc_validate(&p, &path)
            } else {
                Err(CliError::BadInput(
                    "charfunc needs one of --exists, --enumerate, --validate".into(),
                ))
            }
        }
        Command::Word {
            input,
            reduce,
            member,
            word,
            charfunc,
        } => {
            let p = read_polytope(&input)?;
            if let Some(path) = reduce {
                let w = read_word(&path)?;
                let nf = coxeter::normal_form(&p, &w)
                    .map_err(|e| CliError::Analysis(e.to_string()))?;
                Ok(format::word_to_json(&nf))
            } else if let Some(target) = member {
                let w = read_word(&word.expect("clap enforces --word with --member"))?;
                let lambda = charfunc.as_deref().map(read_charfunc).transpose()?;
                let answer = match target {
                    MemberTarget::Rz => coxeter::pi1_membership(&p, &w, Pi1Target::MomentAngle),
                    MemberTarget::Cover => {
                        let Some(l) = lambda.as_ref() else {
                            return Err(CliError::BadInput(
                                "--member cover needs --charfunc".into(),
                            ));
                        };
                        coxeter::pi1_membership(&p, &w, Pi1Target::SmallCover(l))
                    }
                }
                .map_err(|e| CliError::Analysis(e.to_string()))?;
                Ok(format!("{answer}\n"))
            } else {
                Err(CliError::BadInput(
                    "word needs --reduce or --member".into(),
                ))
            }
        }
        Command::Audit { input } => {
            let p = read_polytope(&input)?;
            let ok = classify::real_bott_equivalence_audit(&p, cell_guard()?);
            Ok(format!("{ok}\n"))
        }
    }
}

fn construct(args: ConstructArgs) -> Result<String, CliError> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| CliError::BadInput(format!("--kind {:?} needs --{name}", args.kind)))
    };
    let p = match args.kind {
        Kind::Simplex => SimplePolytope::simplex(need(args.n, "n")?),
        Kind::Cube => SimplePolytope::cube(need(args.n, "n")?),
        Kind::Polygon => SimplePolytope::polygon(need(args.m, "m")?),
        Kind::DualCyclic => SimplePolytope::dual_cyclic(need(args.k, "k")?, need(args.n, "n")?),
        Kind::Product => {
            let (Some(left), Some(right)) = (args.left.as_ref(), args.right.as_ref()) else {
                return Err(CliError::BadInput(
                    "--kind product needs --left and --right".into(),
                ));
            };
            let a = read_polytope(left)?;
            let b = read_polytope(right)?;
            a.product(&b)
        }
    }
    .map_err(|e| CliError::BadInput(e.to_string()))?;
    write_or_return(args.output.as_deref(), format::polytope_to_json(&p))
}

fn charfunc_exists(p: &SimplePolytope) -> Result<String, CliError> {
    match charfunc::exists_small_cover(p).map_err(|e| CliError::Analysis(e.to_string()))? {
        SmallCoverSearch::Exists(l) => Ok(format!("Exists\n{}", format::charfunc_to_json(&l))),
        SmallCoverSearch::NoneExists(reason) => Ok(format!("NoneExists: {reason}\n")),
    }
}

fn charfunc_enumerate(p: &SimplePolytope, modulo_gl: bool) -> Result<String, CliError> {
    let mode = if modulo_gl {
        charfunc::OrbitMode::Gl
    } else {
        charfunc::OrbitMode::Raw
    };
    let enumeration =
        charfunc::enumerate_charfuncs(p, mode).map_err(|e| CliError::Analysis(e.to_string()))?;
    let reps: Vec<format::CharFuncFile> = enumeration
        .representatives
        .iter()
        .map(format::CharFuncFile::from_charfunc)
        .collect();
    let payload = serde_json::json!({
        "count": enumeration.count,
        "representatives": reps,
    });
    let mut out =
        serde_json::to_string_pretty(&payload).expect("enumeration serialization cannot fail");
    out.push('\n');
    Ok(out)
}

fn charfunc_validate(p: &SimplePolytope, path: &Path) -> Result<String, CliError> {
    let lambda = read_charfunc(path)?;
    match charfunc::validate_charfunc(p, &lambda) {
        Ok(charfunc::CharFuncValidity::Valid) => Ok("Valid\n".into()),
        Ok(charfunc::CharFuncValidity::InvalidAt { vertex }) => Ok(format!(
            "InvalidAt: vertex {vertex} with facets {:?}\n",
            p.vertices()[vertex]
        )),
        Err(e) => Err(CliError::Analysis(e.to_string())),
    }
}

fn cell_guard() -> Result<usize, CliError> {
    match std::env::var(CELL_GUARD_ENV) {
        Ok(value) => value.parse().map_err(|_| {
            CliError::BadInput(format!("{CELL_GUARD_ENV} must be an integer, got {value:?}"))
        }),
        Err(_) => Ok(DEFAULT_CELL_GUARD),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

fn read_polytope(path: &Path) -> Result<SimplePolytope, CliError> {
    format::polytope_from_json(&read_file(path)?)
        .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

fn read_charfunc(path: &Path) -> Result<CharFunc, CliError> {
    format::charfunc_from_json(&read_file(path)?)
        .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

fn read_word(path: &Path) -> Result<Vec<usize>, CliError> {
    format::word_from_json(&read_file(path)?)
        .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))
}

/// Writes to the path when given, returning what went to stdout otherwise.
fn write_or_return(path: Option<&Path>, content: String) -> Result<String, CliError> {
    match path {
        Some(path) => {
            fs::write(path, &content)
                .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(content),
    }
}
