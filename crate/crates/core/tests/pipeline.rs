//! Whole-pipeline runs: arrangement → faces → Salvetti → group → quotient →
//! presentation, on fixtures beyond the rank-2 acceptance cases.

use salvetti_core::group::{check_stabilizers, check_unique_base_representative, chamber_words};
use salvetti_core::orbit::format_word;
use salvetti_core::*;

#[test]
fn a3_end_to_end() {
    let a = braid_arrangement(4, true);
    let faces = a.enumerate_faces(DEFAULT_CAP).unwrap();
    assert_eq!(faces.len(), 75);
    assert_eq!(faces.chambers().len(), 24);

    let sal = build_salvetti(&a, &faces);
    assert_eq!(sal.len(), 192);
    assert_eq!(sal.dim_histogram(), vec![24, 72, 72, 24]);
    // Poincaré polynomial (1 + t)(1 + 2t)(1 + 3t)
    let h = sal_cell_complex(&sal).unwrap().homology().unwrap();
    assert_eq!(h.betti_numbers(), vec![1, 6, 11, 6]);
    assert!(h.is_torsion_free());

    let w = reflection_group(&a, &faces, None, DEFAULT_GROUP_CAP).unwrap();
    assert_eq!(w.order(), 24);
    assert!(check_transitive_free(&w, &faces).passed());
    check_unique_base_representative(&w, &faces).unwrap();
    check_stabilizers(&w, &faces).unwrap();
    let words = chamber_words(&w, &faces).unwrap();
    assert_eq!(words.len(), 24);
    // the longest element has length binom(4, 2)
    assert_eq!(words.values().map(Vec::len).max(), Some(6));

    assert_eq!(quotient_sal(&sal, &w).unwrap().histogram(), vec![1, 3, 3, 1]);
    assert_eq!(
        presentation(&a, &w).unwrap().to_string(),
        "⟨a, b, c | aba = bab, bcb = cbc, ac = ca⟩"
    );
}

#[test]
fn combinatorial_dihedral_fans() {
    for m in [5, 7] {
        let a = dihedral_arrangement(m);
        assert!(!a.is_rational());
        let faces = a.enumerate_faces(DEFAULT_CAP).unwrap();
        assert_eq!(faces.chambers().len(), 2 * m);
        let sal = build_salvetti(&a, &faces);
        assert_eq!(sal.dim_histogram(), vec![2 * m, 4 * m, 2 * m]);
        let h = sal_order_complex(&sal).homology().unwrap();
        assert_eq!(h.betti_numbers(), vec![1, m, m - 1]);

        let w = reflection_group(&a, &faces, None, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(w.order(), 2 * m);
        let quotient = quotient_sal(&sal, &w).unwrap();
        assert_eq!(quotient.histogram(), vec![1, 2, 1]);

        let word = boundary_word(&a, &faces, &sal, &w).unwrap();
        assert_eq!(word.len(), 2 * m);
        let relation = relation_from_word(&word).unwrap();
        assert_eq!(relation, Relation::artin(0, 1, m));
        // the one-vertex complex of the presentation has H_1 = Z (both
        // generators identified) when m is odd
        let qh = quotient_homology(&quotient, &word).unwrap();
        assert_eq!(qh.betti_numbers()[1], 1, "{}", format_word(&word));
    }
}

#[test]
fn dual_complex_of_the_hexagon() {
    let a = braid_arrangement(3, true);
    let faces = a.enumerate_faces(DEFAULT_CAP).unwrap();
    let w = reflection_group(&a, &faces, None, DEFAULT_GROUP_CAP).unwrap();
    let dual = dual_complex_2d(&a, &faces, &w).unwrap();
    assert_eq!(dual.vertices.len(), 6);
    assert_eq!(dual.edges.len(), 6);
    assert_eq!(dual.two_cell.len(), 6);
}

#[test]
fn non_reflection_arrangement_is_rejected() {
    let a = Arrangement::new(2, vec![linalg::point(&[1, 0]), linalg::point(&[0, 1]), linalg::point(&[1, 1])]).unwrap();
    let faces = a.enumerate_faces(DEFAULT_CAP).unwrap();
    assert!(matches!(
        reflection_group(&a, &faces, None, DEFAULT_GROUP_CAP),
        Err(Error::NotASymmetry { .. })
    ));
    // the Salvetti complex does not need a group
    let sal = build_salvetti(&a, &faces);
    assert_eq!(sal_order_complex(&sal).homology().unwrap().betti_numbers(), vec![1, 3, 2]);
}

#[test]
fn arrangement_json_round_trip() {
    let a = braid_arrangement(3, true);
    let text = serde_json::to_string(&a.to_file().unwrap()).unwrap();
    let b = Arrangement::from_json(&text).unwrap();
    assert_eq!(b.normals(), a.normals());
    assert_eq!(b.gram(), a.gram());
    assert!(Arrangement::from_json(r#"{"dimension": 2, "hyperplanes": [["1", "0"], ["2", "0"]]}"#).is_err());
    assert!(Arrangement::from_json(r#"{"dimension": 2, "hyperplanes": [["0", "0"]]}"#).is_err());
    assert!(Arrangement::from_json(r#"{"dimension": 2, "hyperplanes": [["1"]]}"#).is_err());
}
