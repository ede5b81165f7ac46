use std::fmt;
use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use salvetti_core::{
    braid_arrangement, coordinate_lines, dihedral_arrangement, single_hyperplane, Arrangement,
    FacePoset, DEFAULT_CAP,
};

/// Malformed flags, files or builtin names. Exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// A valid input that the requested command cannot handle. Exit code 3.
#[derive(Debug)]
pub struct PreconditionError(pub String);

impl fmt::Display for PreconditionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for PreconditionError {}

#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Built-in arrangement: coords, line, braid:ℓ or dihedral:m.
    #[arg(long, value_name = "NAME", conflicts_with = "input")]
    pub builtin: Option<String>,

    /// Arrangement JSON file: {"dimension": d, "hyperplanes": [["p/q", ...], ...]}.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Project a braid arrangement onto the sum-zero subspace.
    #[arg(long)]
    pub essentialize: bool,

    /// Largest number of hyperplanes the face enumeration accepts.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Builtin {
    Coords,
    Line,
    Braid(usize),
    Dihedral(usize),
}

fn parse_builtin(name: &str) -> Result<Builtin, InputError> {
    let parameter = |text: &str, family: &str| -> Result<usize, InputError> {
        match text.parse::<usize>() {
            Ok(k) if k >= 2 => Ok(k),
            _ => Err(InputError(format!("{family} needs an integer parameter ≥ 2, got {text:?}"))),
        }
    };
    match name.split_once(':') {
        None if name == "coords" => Ok(Builtin::Coords),
        None if name == "line" => Ok(Builtin::Line),
        Some(("braid", k)) => parameter(k, "braid").map(Builtin::Braid),
        Some(("dihedral", m)) => parameter(m, "dihedral").map(Builtin::Dihedral),
        _ => Err(InputError(format!(
            "unknown builtin {name:?}; expected coords, line, braid:ℓ or dihedral:m"
        ))),
    }
}

pub struct Loaded {
    pub name: String,
    pub arrangement: Arrangement,
    pub dihedral: Option<usize>,
    cap: usize,
}

impl Loaded {
    pub fn faces(&self) -> Result<FacePoset> {
        if self.arrangement.len() > self.cap {
            return Err(PreconditionError(format!(
                "{} has {} hyperplanes but --cap is {}; raise --cap to enumerate it",
                self.name,
                self.arrangement.len(),
                self.cap
            ))
            .into());
        }
        Ok(self.arrangement.enumerate_faces(self.cap)?)
    }
}

pub fn load(args: &SourceArgs) -> Result<Loaded> {
    let (name, arrangement, builtin) = match (&args.builtin, &args.input) {
        (Some(name), None) => {
            let b = parse_builtin(name)?;
            let a = match b {
                Builtin::Coords => coordinate_lines(),
                Builtin::Line => single_hyperplane(),
                Builtin::Braid(ell) => braid_arrangement(ell, args.essentialize),
                Builtin::Dihedral(m) => dihedral_arrangement(m),
            };
            (name.clone(), a, Some(b))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
            let a = Arrangement::from_json(&text)
                .with_context(|| format!("invalid arrangement file {}", path.display()))?;
            (path.display().to_string(), a, None)
        }
        (None, None) => return Err(InputError("give an arrangement with --builtin or --input".into()).into()),
        (Some(_), Some(_)) => unreachable!("clap rejects --builtin with --input"),
    };
    let is_braid = matches!(builtin, Some(Builtin::Braid(_)));
    if args.essentialize && !is_braid && !arrangement.is_essential() {
        return Err(PreconditionError(format!(
            "--essentialize is only available for braid builtins; {name} is not essential"
        ))
        .into());
    }
    let name = if args.essentialize && is_braid { format!("{name} (essentialized)") } else { name };
    Ok(Loaded {
        name,
        arrangement,
        dihedral: match builtin {
            Some(Builtin::Dihedral(m)) => Some(m),
            _ => None,
        },
        cap: args.cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        assert_eq!(parse_builtin("coords").unwrap(), Builtin::Coords);
        assert_eq!(parse_builtin("braid:4").unwrap(), Builtin::Braid(4));
        assert_eq!(parse_builtin("dihedral:5").unwrap(), Builtin::Dihedral(5));
        assert!(parse_builtin("braid:1").is_err());
        assert!(parse_builtin("braid").is_err());
        assert!(parse_builtin("cube").is_err());
    }
}
