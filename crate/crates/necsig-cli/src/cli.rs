//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 validation failure (bad relators, intransitive
//! action, invalid signature), 2 parse or usage error, 3 internal
//! inconsistency (the analysis reached a state the theory forbids).

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use necsig::hoare::{subgroup_signature, PipelineError, PipelineOptions, SubgroupReport};
use necsig::lowindex::{index_two_subgroups, search_actions, SearchError};
use necsig::representation::CosetAction;
use necsig::signature::parse_signature;

use crate::input::parse_action_file;
use crate::render;

#[derive(Parser)]
#[command(
    name = "necsig",
    version,
    about = "Subgroup signatures of cocompact NEC groups from coset actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check an action file: every relator must act trivially and the
    /// action must be transitive.
    Validate { file: PathBuf },
    /// Compute the signature of the subgroup an action file describes.
    Signature {
        file: PathBuf,
        /// Print the full five-step derivation instead of just the result.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Proceed when the long relation, and only it, fails to hold.
        #[arg(long)]
        allow_invalid_relators: bool,
        /// Analyze the stabilizer of this point's orbit in place of a
        /// transitive action.
        #[arg(long, value_name = "POINT")]
        restrict_to_orbit: Option<usize>,
    },
    /// List the subgroups of the group with the given signature, either
    /// analytically at index 2 or by exhaustive search at a small index.
    #[command(group(ArgGroup::new("mode").required(true).args(["index", "degree"])))]
    Enumerate {
        signature: String,
        /// Sign-character enumeration; only index 2 is supported.
        #[arg(long)]
        index: Option<usize>,
        /// Exhaustive search over transitive coset actions of this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Stop the search after this many subgroups.
        #[arg(long, requires = "degree")]
        limit: Option<usize>,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Signature {
            file,
            trace,
            format,
            allow_invalid_relators,
            restrict_to_orbit,
        } => cmd_signature(
            &file,
            trace,
            format,
            allow_invalid_relators,
            restrict_to_orbit,
        ),
        Command::Enumerate {
            signature,
            index,
            degree,
            limit,
        } => cmd_enumerate(&signature, index, degree, limit),
    }
}

/// Reads and checks an action file far enough to build the coset action.
/// Parse-level problems exit 2; a well-formed file whose signature fails
/// validity exits 1.
fn load_action(path: &Path) -> Result<CosetAction, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", path.display());
            return Err(2);
        }
    };
    let file = match parse_action_file(&text) {
        Ok(file) => file,
        Err(err) => {
            eprintln!("error: {}: {err}", path.display());
            return Err(2);
        }
    };
    if let Err(invalid) = file.signature.validate() {
        eprintln!("error: invalid signature {}", file.signature);
        for v in &invalid.violations {
            eprintln!("  {v}");
        }
        return Err(1);
    }
    match CosetAction::new(&file.signature, file.degree, &file.generators) {
        Ok(action) => Ok(action),
        Err(err) => {
            eprintln!("error: {}: {err}", path.display());
            Err(2)
        }
    }
}

fn cmd_validate(file: &Path) -> i32 {
    let action = match load_action(file) {
        Ok(action) => action,
        Err(code) => return code,
    };
    let report = action.validate();
    let (text, ok) = render::render_validation(&report);
    print!("{text}");
    if ok {
        0
    } else {
        1
    }
}

fn cmd_signature(
    file: &Path,
    trace: bool,
    format: Format,
    allow_invalid_relators: bool,
    restrict_to_orbit: Option<usize>,
) -> i32 {
    let mut action = match load_action(file) {
        Ok(action) => action,
        Err(code) => return code,
    };
    if let Some(point) = restrict_to_orbit {
        action = match action.restrict_to_orbit(point) {
            Ok(restricted) => restricted,
            Err(err) => {
                eprintln!("error: --restrict-to-orbit: {err}");
                return 2;
            }
        };
    }
    let options = PipelineOptions {
        allow_invalid_relators,
    };
    let report = match subgroup_signature(&action, options) {
        Ok(report) => report,
        Err(PipelineError::InvalidAction { summary, report }) => {
            eprintln!("error: action rejected: {summary}");
            let (text, _) = render::render_validation(&report);
            eprint!("{text}");
            return 1;
        }
        Err(err @ PipelineError::Inconsistent(_)) => {
            eprintln!("error: {err}");
            return 3;
        }
    };
    for warning in &report.warnings {
        eprintln!("warning: {warning}");
    }
    let text = match format {
        Format::Text => render::render_text(&action, &report, trace),
        Format::Machine => render::render_machine(&action, &report),
    };
    print!("{text}");
    0
}

fn cmd_enumerate(
    signature: &str,
    index: Option<usize>,
    degree: Option<usize>,
    limit: Option<usize>,
) -> i32 {
    let sig = match parse_signature(signature) {
        Ok(sig) => sig,
        Err(err) => {
            eprintln!("error: bad signature: {err}");
            return 2;
        }
    };
    if let Err(invalid) = sig.validate() {
        eprintln!("error: invalid signature {sig}");
        for v in &invalid.violations {
            eprintln!("  {v}");
        }
        return 1;
    }

    if let Some(n) = index {
        if n != 2 {
            eprintln!(
                "error: only index 2 is supported analytically; use --degree {n} for a search"
            );
            return 2;
        }
        let subgroups = match index_two_subgroups(&sig) {
            Ok(subgroups) => subgroups,
            Err(err) => return report_search_error(err),
        };
        print!("{}", render::render_index_two(&sig, &subgroups));
        return 0;
    }

    let degree = degree.expect("clap requires exactly one of --index/--degree");
    let outcome = match search_actions(&sig, degree, limit) {
        Ok(outcome) => outcome,
        Err(err) => return report_search_error(err),
    };
    let mut entries: Vec<(CosetAction, SubgroupReport)> = Vec::new();
    for action in outcome.actions {
        match subgroup_signature(&action, PipelineOptions::default()) {
            Ok(report) => entries.push((action, report)),
            Err(err) => {
                // The search validated this action, so any failure here is
                // a bug, not bad input.
                eprintln!("error: {err}");
                return 3;
            }
        }
    }
    print!(
        "{}",
        render::render_search(&sig, degree, &entries, outcome.complete)
    );
    0
}

fn report_search_error(err: SearchError) -> i32 {
    eprintln!("error: {err}");
    match err {
        SearchError::Pipeline(PipelineError::InvalidAction { .. }) => 1,
        SearchError::Pipeline(PipelineError::Inconsistent(_)) => 3,
        _ => 2,
    }
}
