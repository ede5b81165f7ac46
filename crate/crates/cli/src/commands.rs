//! One function per subcommand. Each returns the rendered artifact and
//! whether every check it ran passed.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use salvetti_core::export::{face_poset_record, hasse_dot};
use salvetti_core::group::{check_conjugation_sampled, group_records};
use salvetti_core::orbit::{format_word, generator_name};
use salvetti_core::salvetti::{complex_covector_table, export_sal};
use salvetti_core::sampling::{sample_covectors, sample_dihedral_fan};
use salvetti_core::sign::AxiomReport;
use salvetti_core::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::source::{InputError, Loaded};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

pub struct Artifact {
    pub body: String,
    pub passed: bool,
}

impl Artifact {
    fn ok(body: String) -> Self {
        Artifact { body, passed: true }
    }
}

/// Canonical JSON: keys sorted, pretty printed, trailing newline.
fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let value = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

fn unsupported_format(command: &str, format: Format) -> anyhow::Error {
    InputError(format!("{command} does not support --format {format:?}").to_lowercase()).into()
}

fn line(out: &mut String, text: impl AsRef<str>) {
    writeln!(out, "{}", text.as_ref()).expect("string write");
}

fn joined(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn describe(loaded: &Loaded) -> String {
    let a = &loaded.arrangement;
    format!(
        "arrangement: {} ({} hyperplanes in dimension {}, rank {}{})",
        loaded.name,
        a.len(),
        a.dimension(),
        a.rank(),
        if a.is_rational() { "" } else { ", combinatorial" }
    )
}

pub fn faces(loaded: &Loaded, format: Format) -> Result<Artifact> {
    let faces = loaded.faces()?;
    let record = face_poset_record(&faces);
    let body = match format {
        Format::Json => canonical_json(&record)?,
        Format::Dot => {
            let labels: Vec<String> = record.faces.iter().map(|f| f.covector.to_string()).collect();
            hasse_dot("faces", &labels, &record.covers)
        }
        Format::Text => {
            let mut out = String::new();
            line(&mut out, describe(loaded));
            line(&mut out, format!("faces: {}", record.faces.len()));
            line(&mut out, format!("chambers: {}", record.chambers));
            line(&mut out, format!("faces by codimension: {}", joined(&record.codim_counts)));
            line(&mut out, "covector codim");
            for f in &record.faces {
                line(&mut out, format!("{} {}", f.covector, f.codim));
            }
            line(&mut out, format!("covering relations: {}", record.covers.len()));
            for (lo, hi) in &record.covers {
                line(&mut out, format!("{} < {}", record.faces[*lo].covector, record.faces[*hi].covector));
            }
            out
        }
    };
    Ok(Artifact::ok(body))
}

fn cell_label(cell: &SalCell) -> String {
    format!("({},{})", cell.face, cell.chamber)
}

pub fn salvetti(loaded: &Loaded, format: Format, with_homology: bool) -> Result<Artifact> {
    if !loaded.arrangement.is_essential() {
        return Err(Error::NotEssential).context(format!(
            "{} is not essential; pass --essentialize (braid builtins) or an essential arrangement",
            loaded.name
        ));
    }
    let faces = loaded.faces()?;
    let sal = build_salvetti(&loaded.arrangement, &faces);
    let homology = if with_homology { Some(sal_order_complex(&sal).homology()?) } else { None };
    let export = export_sal(&sal);
    let body = match format {
        Format::Json => {
            let mut value = json!({
                "cells": export.cells,
                "covers": export.covers,
                "dims": export.dims,
                "table": complex_covector_table(&sal),
            });
            if let Some(h) = &homology {
                value["homology"] = serde_json::to_value(h)?;
            }
            canonical_json(&value)?
        }
        Format::Dot => {
            let labels: Vec<String> = sal.cells().iter().map(cell_label).collect();
            hasse_dot("salvetti", &labels, &export.covers)
        }
        Format::Text => {
            let mut out = String::new();
            line(&mut out, describe(loaded));
            line(&mut out, format!("cells: {}", sal.len()));
            line(&mut out, format!("cells by dimension: {}", joined(&export.dims)));
            line(&mut out, "cell complex-covector");
            for row in complex_covector_table(&sal) {
                line(&mut out, format!("({},{}) {}", row.face, row.chamber, row.complex));
            }
            if let Some(h) = &homology {
                line(&mut out, format!("betti: {}", joined(&h.betti_numbers())));
                for (k, g) in h.degrees.iter().enumerate() {
                    if !g.torsion.is_empty() {
                        let t: Vec<String> = g.torsion.iter().map(|t| format!("Z/{t}")).collect();
                        line(&mut out, format!("torsion in degree {k}: {}", t.join(" + ")));
                    }
                }
                if h.is_torsion_free() {
                    line(&mut out, "torsion: none");
                }
            }
            out
        }
    };
    Ok(Artifact::ok(body))
}

#[derive(Serialize)]
struct CheckResult {
    name: String,
    status: &'static str,
    detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: if passed { "pass" } else { "fail" },
            detail: detail.into(),
        }
    }

    fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: "skip",
            detail: detail.into(),
        }
    }
}

fn axiom_results(report: &AxiomReport) -> Vec<CheckResult> {
    report
        .results
        .iter()
        .map(|(axiom, violation)| match violation {
            None => CheckResult::new(axiom.to_string(), true, ""),
            Some(v) => CheckResult::new(axiom.to_string(), false, v.to_string()),
        })
        .collect()
}

/// Covectors from a face file: either a bare array of sign-vector strings
/// or the JSON written by `faces --format json`.
fn read_face_file(path: &Path) -> Result<Vec<SignVector>> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("{} is not valid JSON: {e}", path.display())))?;
    let entries = match &value {
        Value::Array(items) => items,
        Value::Object(map) => match map.get("faces") {
            Some(Value::Array(items)) => items,
            _ => return Err(InputError(format!("{} has no \"faces\" array", path.display())).into()),
        },
        _ => return Err(InputError(format!("{} is neither a face list nor a face poset", path.display())).into()),
    };
    let mut covectors = Vec::with_capacity(entries.len());
    for entry in entries {
        let text = match entry {
            Value::String(s) => s.as_str(),
            Value::Object(face) => face.get("covector").and_then(Value::as_str).unwrap_or_default(),
            _ => "",
        };
        let x: SignVector = text
            .parse()
            .map_err(|_| InputError(format!("bad covector entry {entry} in {}", path.display())))?;
        covectors.push(x);
    }
    if let Some(first) = covectors.first() {
        if let Some(bad) = covectors.iter().find(|x| x.len() != first.len()) {
            return Err(InputError(format!("covector {bad} has length {}, expected {}", bad.len(), first.len())).into());
        }
    }
    Ok(covectors)
}

pub struct CheckOptions<'a> {
    pub face_file: Option<&'a Path>,
    pub seed: u64,
    pub samples: usize,
    pub conjugation_samples: usize,
    pub group_cap: usize,
}

fn arrangement_checks(loaded: &Loaded, opts: &CheckOptions) -> Result<Vec<CheckResult>> {
    let a = &loaded.arrangement;
    let faces = loaded.faces()?;
    let mut results = axiom_results(&check_covector_axioms(faces.covectors()));

    let enumerated: BTreeSet<SignVector> = faces.covectors().cloned().collect();
    let sampled = match (a.is_rational(), loaded.dihedral) {
        (true, _) => Some(sample_covectors(a, opts.samples, opts.seed)?),
        (false, Some(m)) => Some(sample_dihedral_fan(m, opts.samples, opts.seed)),
        (false, None) => None,
    };
    match sampled {
        Some(s) => {
            let extra = s.difference(&enumerated).count();
            let missed = enumerated.difference(&s).count();
            results.push(CheckResult::new(
                "sampling oracle",
                extra == 0 && missed == 0,
                format!("{} sampled, {} enumerated, {extra} not enumerated, {missed} not sampled", s.len(), enumerated.len()),
            ));
        }
        None => results.push(CheckResult::skipped("sampling oracle", "no oracle for this combinatorial arrangement")),
    }

    let sal = build_salvetti(a, &faces);
    let iso = check_sal_complex_order_iso(a, &faces, &sal);
    results.push(CheckResult::new("complex covector bijection", iso.passed(), format!("{iso:?}")));

    match reflection_group(a, &faces, None, opts.group_cap) {
        Ok(w) => {
            let report = check_transitive_free(&w, &faces);
            results.push(CheckResult::new("group acts simply transitively", report.passed(), format!("{report:?}")));
            let conj = check_conjugation_sampled(a, &w, opts.conjugation_samples, opts.seed)?;
            results.push(CheckResult::new(
                "conjugation identity",
                conj.is_ok(),
                match conj {
                    Ok(()) => format!("{} samples", opts.conjugation_samples),
                    Err((g, j)) => format!("fails for element {g} and hyperplane {}", j + 1),
                },
            ));
        }
        Err(e) => results.push(CheckResult::skipped("reflection group", e.to_string())),
    }
    Ok(results)
}

pub fn check(loaded: Option<&Loaded>, format: Format, opts: &CheckOptions) -> Result<Artifact> {
    let (subject, results) = match (opts.face_file, loaded) {
        (Some(path), _) => {
            let covectors = read_face_file(path)?;
            (format!("face file: {}", path.display()), axiom_results(&check_covector_axioms(&covectors)))
        }
        (None, Some(loaded)) => (describe(loaded), arrangement_checks(loaded, opts)?),
        (None, None) => return Err(InputError("give --faces, --builtin or --input".into()).into()),
    };
    let failed = results.iter().filter(|r| r.status == "fail").count();
    let body = match format {
        Format::Json => canonical_json(&json!({ "checks": results, "passed": failed == 0 }))?,
        Format::Text => {
            let mut out = String::new();
            line(&mut out, subject);
            for r in &results {
                let status = r.status.to_uppercase();
                if r.detail.is_empty() {
                    line(&mut out, format!("[{status}] {}", r.name));
                } else {
                    line(&mut out, format!("[{status}] {}: {}", r.name, r.detail));
                }
            }
            if failed == 0 {
                line(&mut out, "all checks passed");
            } else {
                line(&mut out, format!("{failed} checks failed"));
            }
            out
        }
        Format::Dot => return Err(unsupported_format("check", format)),
    };
    Ok(Artifact { body, passed: failed == 0 })
}

pub fn presentation_cmd(loaded: &Loaded, format: Format, group_cap: usize) -> Result<Artifact> {
    let a = &loaded.arrangement;
    let faces = loaded.faces()?;
    let w = reflection_group(a, &faces, None, group_cap)?;
    let p = presentation(a, &w)?;
    let word = if a.rank() == 2 && a.is_essential() {
        let sal = build_salvetti(a, &faces);
        let word = boundary_word(a, &faces, &sal, &w)?;
        let relation = relation_from_word(&word)?;
        Some((word, relation))
    } else {
        None
    };
    let body = match format {
        Format::Json => {
            let relations: Vec<Value> = p
                .relations
                .iter()
                .map(|r| {
                    json!({
                        "left": format_word(&r.relation.left),
                        "right": format_word(&r.relation.right),
                        "m": r.m,
                    })
                })
                .collect();
            let mut value = json!({
                "generators": p.generators,
                "walls": p.walls.iter().map(|h| h + 1).collect::<Vec<_>>(),
                "relations": relations,
            });
            if let Some((word, relation)) = &word {
                value["boundary_word"] = json!(format_word(word));
                value["boundary_relation"] = json!(relation.to_string());
            }
            canonical_json(&value)?
        }
        Format::Text => {
            let mut out = String::new();
            line(&mut out, describe(loaded));
            line(&mut out, p.to_string());
            for (g, h) in p.generators.iter().zip(&p.walls) {
                line(&mut out, format!("generator {g}: wall H{}", h + 1));
            }
            for r in &p.relations {
                line(&mut out, format!("{} (m = {})", r.relation, r.m));
            }
            if let Some((word, relation)) = &word {
                line(&mut out, format!("boundary word: {}", format_word(word)));
                line(&mut out, format!("boundary relation: {relation}"));
            }
            out
        }
        Format::Dot => return Err(unsupported_format("presentation", format)),
    };
    Ok(Artifact::ok(body))
}

pub fn group(loaded: &Loaded, format: Format, group_cap: usize) -> Result<Artifact> {
    let faces = loaded.faces()?;
    let w = reflection_group(&loaded.arrangement, &faces, None, group_cap)?;
    let records = group_records(&w);
    let walls: Vec<usize> = w.generator_walls.iter().map(|h| h + 1).collect();
    let body = match format {
        Format::Json => canonical_json(&json!({
            "order": w.order(),
            "base_chamber": w.base_chamber,
            "generator_walls": walls,
            "elements": records,
        }))?,
        Format::Text => {
            let mut out = String::new();
            line(&mut out, describe(loaded));
            line(&mut out, format!("order: {}", w.order()));
            line(&mut out, format!("base chamber: {}", w.base_chamber));
            for (i, h) in walls.iter().enumerate() {
                line(&mut out, format!("generator {}: reflection in H{h}", generator_name(i)));
            }
            line(&mut out, "word permutation flips");
            for r in &records {
                let word: String = r.word.iter().map(|&h| format!("s{h}")).collect::<Vec<_>>().join(" ");
                let flips: String = r.flips.iter().map(|&f| if f > 0 { '+' } else { '-' }).collect();
                line(&mut out, format!("[{word}] {:?} {flips}", r.perm));
            }
            out
        }
        Format::Dot => return Err(unsupported_format("group", format)),
    };
    Ok(Artifact::ok(body))
}

pub fn quotient(loaded: &Loaded, format: Format, group_cap: usize) -> Result<Artifact> {
    let faces = loaded.faces()?;
    let sal = build_salvetti(&loaded.arrangement, &faces);
    let w = reflection_group(&loaded.arrangement, &faces, None, group_cap)?;
    let q = quotient_sal(&sal, &w)?;
    let body = match format {
        Format::Json => canonical_json(&json!({
            "classes": q.classes,
            "incidence": q.incidence,
            "histogram": q.histogram(),
        }))?,
        Format::Text => {
            let mut out = String::new();
            line(&mut out, describe(loaded));
            line(&mut out, format!("orbits by dimension: {}", joined(&q.histogram())));
            for c in &q.classes {
                line(&mut out, format!("{} dim {} size {}", cell_label(&c.representative), c.dim, c.members.len()));
            }
            out
        }
        Format::Dot => return Err(unsupported_format("quotient", format)),
    };
    Ok(Artifact::ok(body))
}

/// Not-in-image is an answer, not an error.
pub fn decode(loaded: &Loaded, covector: &str, format: Format) -> Result<Artifact> {
    let z: ComplexSignVector = covector
        .parse()
        .map_err(|_| InputError(format!("{covector:?} is not a complex sign vector over + - 0 i j")))?;
    let n = loaded.arrangement.len();
    if z.len() != n {
        return Err(InputError(format!("{covector} has length {}, the arrangement has {n} hyperplanes", z.len())).into());
    }
    let faces = loaded.faces()?;
    let cell = from_complex_covector(&faces, &z);
    let body = match format {
        Format::Json => canonical_json(&json!({ "complex": z, "cell": cell }))?,
        Format::Text => match &cell {
            Some(c) => format!("{z} -> {} (dimension {})\n", cell_label(c), c.dim),
            None => format!("{z} is not the complex covector of a Salvetti cell\n"),
        },
        Format::Dot => return Err(unsupported_format("decode", format)),
    };
    Ok(Artifact::ok(body))
}
