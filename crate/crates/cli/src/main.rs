//! `salvetti`: face posets, Salvetti complexes, reflection groups and Artin
//! presentations of real hyperplane arrangements.
//!
//! Exit codes: 0 success, 1 a check failed, 2 input error, 3 precondition
//! not met, 4 reflection symmetry failure.

mod commands;
mod source;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use salvetti_core::sampling::DEFAULT_SAMPLES;
use salvetti_core::{Error, DEFAULT_GROUP_CAP};

use commands::{Artifact, CheckOptions, Format};
use source::{InputError, PreconditionError, SourceArgs};

#[derive(Parser, Debug)]
#[command(name = "salvetti", version, about = "Exact combinatorial topology of real hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Write the artifact here instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GroupCap {
    /// Abort group generation beyond this many elements.
    #[arg(long = "group-cap", default_value_t = DEFAULT_GROUP_CAP)]
    group_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the face poset: covectors, covering relations, codimension counts.
    Faces {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the Salvetti poset and its complex-covector table.
    Salvetti {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Also compute integral homology of the order complex.
        #[arg(long)]
        homology: bool,
    },
    /// Verify the covector axioms and the structural checks; exit 1 on failure.
    Check {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cap: GroupCap,
        /// Check a face file (JSON covector list or `faces --format json` output) instead.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["builtin", "input"])]
        faces: Option<PathBuf>,
        /// Seed for the sampling oracle and the conjugation samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random points for the sampling oracle.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Artin presentation of the quotient by the reflection group.
    Presentation {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cap: GroupCap,
    },
    /// Elements of the reflection group as signed permutations.
    Group {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cap: GroupCap,
    },
    /// Orbits of Salvetti cells under the reflection group.
    Quotient {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cap: GroupCap,
    },
    /// Decode a complex sign vector over `+ - 0 i j` to a Salvetti cell.
    Decode {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
        covector: String,
    },
}

fn run(cli: Cli) -> Result<(Artifact, OutputArgs)> {
    Ok(match cli.command {
        Command::Faces { source, output } => (commands::faces(&source::load(&source)?, output.format)?, output),
        Command::Salvetti { source, output, homology } => {
            (commands::salvetti(&source::load(&source)?, output.format, homology)?, output)
        }
        Command::Check { source, output, cap, faces, seed, samples } => {
            let loaded = if faces.is_some() { None } else { Some(source::load(&source)?) };
            let opts = CheckOptions {
                face_file: faces.as_deref(),
                seed,
                samples,
                conjugation_samples: 100,
                group_cap: cap.group_cap,
            };
            (commands::check(loaded.as_ref(), output.format, &opts)?, output)
        }
        Command::Presentation { source, output, cap } => {
            (commands::presentation_cmd(&source::load(&source)?, output.format, cap.group_cap)?, output)
        }
        Command::Group { source, output, cap } => {
            (commands::group(&source::load(&source)?, output.format, cap.group_cap)?, output)
        }
        Command::Quotient { source, output, cap } => {
            (commands::quotient(&source::load(&source)?, output.format, cap.group_cap)?, output)
        }
        Command::Decode { source, output, covector } => {
            (commands::decode(&source::load(&source)?, &covector, output.format)?, output)
        }
    })
}

fn library_exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::DimensionMismatch { .. }
        | Error::ZeroNormal { .. }
        | Error::RepeatedHyperplane { .. }
        | Error::NotAFace(_)
        | Error::NotAChamber(_) => 2,
        Error::NotASymmetry { .. } | Error::NotTransitive | Error::ActionNotClosed => 4,
        _ => 3,
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<InputError>() || cause.is::<std::io::Error>() || cause.is::<serde_json::Error>() {
            return 2;
        }
        if cause.is::<PreconditionError>() {
            return 3;
        }
        if let Some(e) = cause.downcast_ref::<Error>() {
            return library_exit_code(e);
        }
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli).and_then(|(artifact, output)| {
        match &output.output {
            Some(path) => fs::write(path, &artifact.body)
                .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{}", artifact.body),
        }
        Ok(artifact.passed)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
