//! Command-line front end. [`run`] takes the argument vector and output
//! streams, which keeps the whole driver testable in-process.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ruspini::counting::{count_2overlap_weak_ruspini, count_leaves, count_weak_ruspini};
use ruspini::io::{
    classes_from_json, partition_from_json, partition_to_json, report_to_json, subforest_to_dot,
    subforest_to_json,
};
use ruspini::semantics::{grid_tautology_oracle, is_tautology, proves_equiv};
use ruspini::synthesis::{axiomatize_partition, overlap_axiom, ruspini_axiom, synthesize_partition};
use ruspini::{analyze, parse_formula, Assignment, AssignmentClass, Forest, Logic};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ruspini", version, about = "Goedel-logic analysis of fuzzy partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ForestKind {
    /// all assignment classes
    Fn,
    /// Ruspini forest
    Rn,
    /// classes with at most two positive variables
    Tn,
    /// classes relevant to the t-valued logic (needs --t)
    Fnt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ForestFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AxiomKind {
    Rho,
    Tau,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountKind {
    Leaves,
    WeakRuspini,
    Overlap2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Export the forest of assignment classes or one of its subforests
    Forest {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "fn")]
        kind: ForestKind,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum, default_value = "dot")]
        format: ForestFormat,
    },
    /// Print the assignment class of a vector of truth values
    Classify {
        #[arg(long)]
        values: String,
    },
    /// Analyze a partition file
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the axiom of a partition file
    Axiomatize { file: PathBuf },
    /// Print the Ruspini (rho) or 2-overlap (tau) axiom
    Axioms {
        #[arg(long, value_enum)]
        kind: AxiomKind,
        #[arg(long)]
        n: usize,
    },
    /// Decide whether a formula is a tautology
    Taut {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "ginf")]
        logic: String,
        formula: String,
        /// cross-check against brute-force evaluation on the truth-value grid
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether two formulas are provably equivalent
    Equiv {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "ginf")]
        logic: String,
        first: String,
        second: String,
    },
    /// Build an exact Ruspini partition realizing the downset of the given leaves
    Synthesize {
        leaves: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Print the closed-form counts
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: CountKind,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ruspini::Error> for Failure {
    fn from(e: ruspini::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn parse_logic(text: &str) -> Result<Logic, Failure> {
    text.parse().map_err(|e: ruspini::Error| Failure::Usage(e.to_string()))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Forest { n, kind, t, format } => {
            let forest = Forest::new(n)?;
            let sub = match (kind, t) {
                (ForestKind::Fn, _) => forest.full(),
                (ForestKind::Rn, _) => forest.ruspini(),
                (ForestKind::Tn, _) => forest.overlap2(),
                (ForestKind::Fnt, Some(t)) if t >= 2 => forest.truncated(t),
                (ForestKind::Fnt, _) => {
                    return Err(Failure::Usage("--kind fnt needs --t T with T >= 2".into()))
                }
            };
            match format {
                ForestFormat::Dot => write!(out, "{}", subforest_to_dot(&sub))?,
                ForestFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&subforest_to_json(&sub)).expect("json"))?
                }
            }
        }
        Command::Classify { values } => {
            let assignment: Assignment = values.parse()?;
            let class = AssignmentClass::of_assignment(&assignment)?;
            writeln!(out, "{}", class.label())?;
            writeln!(out, "zero: {:?}", class.zero_block())?;
            writeln!(out, "mid: {:?}", class.mid_blocks())?;
            writeln!(out, "one: {:?}", class.one_block())?;
            writeln!(out, "leaf: {}", class.is_leaf())?;
            writeln!(out, "in Ruspini forest: {}", class.is_in_ruspini_forest())?;
            writeln!(out, "in 2-overlap forest: {}", class.is_in_overlap_forest())?;
        }
        Command::Analyze { file, json } => {
            let partition = partition_from_json(&read(&file)?)?;
            let report = analyze(&partition)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report_to_json(&report)).expect("json"))?;
            } else {
                write!(out, "{report}")?;
            }
        }
        Command::Axiomatize { file } => {
            let partition = partition_from_json(&read(&file)?)?;
            writeln!(out, "{}", axiomatize_partition(&partition)?)?;
        }
        Command::Axioms { kind, n } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let f = match kind {
                AxiomKind::Rho => ruspini_axiom(n),
                AxiomKind::Tau => overlap_axiom(n),
            };
            writeln!(out, "{f}")?;
        }
        Command::Taut { n, logic, formula, oracle } => {
            let logic = parse_logic(&logic)?;
            let f = parse_formula(&formula)?;
            let verdict = is_tautology(&f, n, logic)?;
            if oracle {
                let Logic::Finite(t) = logic else {
                    return Err(Failure::Usage("--oracle needs a finite logic gT".into()));
                };
                let grid = grid_tautology_oracle(&f, n, t)?;
                if grid != verdict {
                    return Err(Failure::Domain(format!(
                        "forest verdict {verdict} disagrees with grid oracle {grid}"
                    )));
                }
            }
            writeln!(out, "{}", if verdict { "tautology" } else { "not a tautology" })?;
        }
        Command::Equiv { n, logic, first, second } => {
            let logic = parse_logic(&logic)?;
            let a = parse_formula(&first)?;
            let b = parse_formula(&second)?;
            let verdict = proves_equiv(&a, &b, n, logic)?;
            writeln!(out, "{}", if verdict { "equivalent" } else { "not equivalent" })?;
        }
        Command::Synthesize { leaves, n, output } => {
            let forest = Forest::new(n)?;
            let classes = classes_from_json(&read(&leaves)?, n)?;
            let sub = forest.downset(&classes)?;
            let text = partition_to_json(&synthesize_partition(&sub)?);
            match output {
                Some(path) => fs::write(&path, text + "\n")
                    .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?,
                None => writeln!(out, "{text}")?,
            }
        }
        Command::Count { n, kind } => {
            let value = match kind {
                CountKind::Leaves => count_leaves(n)?,
                CountKind::WeakRuspini => count_weak_ruspini(n)?,
                CountKind::Overlap2 => count_2overlap_weak_ruspini(n)?,
            };
            writeln!(out, "{value}")?;
        }
    }
    Ok(())
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}
