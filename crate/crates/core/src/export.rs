//! Serializable records and DOT renderings. Hyperplane indices are 1-based
//! in every exported record; cell and face positions stay 0-based.

use std::fmt::Write;

use serde::Serialize;

use crate::arrangement::{ChamberGraph, FacePoset};
use crate::complex::{CellCounts, SimplicialComplex};
use crate::linalg::format_rational;
use crate::sign::SignVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceRecord {
    pub covector: SignVector,
    pub codim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacePosetRecord {
    pub hyperplanes: usize,
    pub faces: Vec<FaceRecord>,
    /// `[lower, upper]` positions in `faces`.
    pub covers: Vec<(usize, usize)>,
    pub codim_counts: Vec<usize>,
    pub chambers: usize,
}

pub fn face_poset_record(p: &FacePoset) -> FacePosetRecord {
    FacePosetRecord {
        hyperplanes: p.hyperplane_count(),
        faces: p
            .faces()
            .iter()
            .map(|f| FaceRecord {
                covector: f.covector.clone(),
                codim: f.codim,
                witness: f.witness.as_ref().map(|w| w.iter().map(format_rational).collect()),
            })
            .collect(),
        covers: p.covering_relations(),
        codim_counts: p.codim_histogram(),
        chambers: p.chambers().len(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexRecord {
    pub vertices: usize,
    /// Simplices as sorted vertex-ID arrays, all dimensions together.
    pub simplices: Vec<Vec<usize>>,
    pub counts: Vec<usize>,
    pub euler_characteristic: i64,
}

pub fn complex_record(k: &SimplicialComplex) -> ComplexRecord {
    ComplexRecord {
        vertices: k.vertex_count(),
        simplices: k.all_simplices().cloned().collect(),
        counts: k.cell_counts(),
        euler_characteristic: k.euler_characteristic(),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// Hasse diagram of a poset, edges pointing upward.
pub fn hasse_dot(name: &str, labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).expect("string write");
    }
    for (a, b) in covers {
        writeln!(out, "  n{a} -> n{b};").expect("string write");
    }
    out.push_str("}\n");
    out
}

/// 1-skeleton of a simplicial complex.
pub fn skeleton_dot(name: &str, k: &SimplicialComplex) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for v in k.simplices(0) {
        writeln!(out, "  v{};", v[0]).expect("string write");
    }
    for e in k.simplices(1) {
        writeln!(out, "  v{} -- v{};", e[0], e[1]).expect("string write");
    }
    out.push_str("}\n");
    out
}

/// Chamber graph with wall labels (1-based hyperplanes).
pub fn chamber_graph_dot(g: &ChamberGraph) -> String {
    let mut out = String::from("graph \"chambers\" {\n");
    for (i, c) in g.chambers.iter().enumerate() {
        writeln!(out, "  c{i} [label={}];", quote(&c.to_string())).expect("string write");
    }
    for (a, b, h) in &g.edges {
        writeln!(out, "  c{a} -- c{b} [label=\"H{}\"];", h + 1).expect("string write");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{coordinate_lines, DEFAULT_CAP};

    #[test]
    fn records_and_dot() {
        let p = coordinate_lines().enumerate_faces(DEFAULT_CAP).unwrap();
        let r = face_poset_record(&p);
        assert_eq!(r.faces.len(), 9);
        assert_eq!(r.codim_counts, vec![4, 4, 1]);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"covector\":\"++\""));
        let dot = chamber_graph_dot(&p.adjacency_graph());
        assert_eq!(dot.matches(" -- ").count(), 4);
        let k = SimplicialComplex::generated_by(3, &[vec![0, 1, 2]]);
        assert_eq!(skeleton_dot("k", &k).matches(" -- ").count(), 3);
        assert_eq!(complex_record(&k).euler_characteristic, 1);
    }
}
