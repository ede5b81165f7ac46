//! Invariants on random small rational arrangements. Chamber counts and
//! Betti numbers are checked against Whitney's subset formula, computed
//! here from integer minors without touching the library's linear algebra.

use std::collections::BTreeSet;

use proptest::prelude::*;
use salvetti_core::linalg::point;
use salvetti_core::salvetti::expected_cell_count;
use salvetti_core::sampling::sample_covectors;
use salvetti_core::*;

fn det2(a: &[i64], b: &[i64], i: usize, j: usize) -> i64 {
    a[i] * b[j] - a[j] * b[i]
}

fn det3(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    a[0] * det2(b, c, 1, 2) - a[1] * det2(b, c, 0, 2) + a[2] * det2(b, c, 0, 1)
}

/// Rank of at most three integer vectors of length at most three.
fn integer_rank(vectors: &[&Vec<i64>]) -> usize {
    let dim = vectors.first().map_or(0, |v| v.len());
    let any_nonzero = |v: &Vec<i64>| v.iter().any(|&x| x != 0);
    let independent_pair = |a: &Vec<i64>, b: &Vec<i64>| (0..dim).any(|i| (i + 1..dim).any(|j| det2(a, b, i, j) != 0));
    let has_triple = dim == 3
        && vectors.iter().enumerate().any(|(x, a)| {
            vectors[x + 1..]
                .iter()
                .enumerate()
                .any(|(y, b)| vectors[x + 1 + y + 1..].iter().any(|c| det3(a, b, c) != 0))
        });
    if has_triple {
        3
    } else if vectors
        .iter()
        .enumerate()
        .any(|(x, a)| vectors[x + 1..].iter().any(|b| independent_pair(a, b)))
    {
        2
    } else if vectors.iter().any(|v| any_nonzero(v)) {
        1
    } else {
        0
    }
}

/// Whitney: `π(t) = Σ_S (-1)^{|S|} (-t)^{rank S}`; its coefficients are the
/// Betti numbers of the complexified complement and `π(1)` counts chambers.
fn poincare_polynomial(normals: &[Vec<i64>]) -> Vec<i64> {
    let dim = normals[0].len();
    let mut coefficients = vec![0i64; dim + 1];
    for mask in 0u32..(1 << normals.len()) {
        let subset: Vec<&Vec<i64>> = (0..normals.len()).filter(|i| mask >> i & 1 == 1).map(|i| &normals[i]).collect();
        let r = if subset.len() <= 3 {
            integer_rank(&subset)
        } else {
            let subset = &subset;
            // rank is at most the dimension; any three independent members witness it
            (0..subset.len())
                .flat_map(|a| (a + 1..subset.len()).flat_map(move |b| (b + 1..subset.len()).map(move |c| (a, b, c))))
                .map(|(a, b, c)| integer_rank(&[subset[a], subset[b], subset[c]]))
                .max()
                .unwrap_or(0)
        };
        let sign = if (subset.len() + r).is_multiple_of(2) { 1 } else { -1 };
        coefficients[r] += sign;
    }
    while coefficients.len() > 1 && coefficients.last() == Some(&0) {
        coefficients.pop();
    }
    coefficients
}

fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| num_gcd(g, x.abs()));
    let lead = v.iter().find(|&&x| x != 0).copied().unwrap_or(1).signum();
    v.iter().map(|&x| lead * x / g).collect()
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// Distinct nonzero integer normals in dimension 2 or 3.
fn normals_strategy(dim: usize, max_len: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 1..=max_len).prop_filter_map("need distinct nonzero normals", |raw| {
        let mut seen = BTreeSet::new();
        let normals: Vec<Vec<i64>> = raw
            .into_iter()
            .filter(|v| v.iter().any(|&x| x != 0))
            .filter(|v| seen.insert(primitive(v)))
            .collect();
        (!normals.is_empty()).then_some(normals)
    })
}

fn arrangement(normals: &[Vec<i64>]) -> Arrangement {
    Arrangement::new(normals[0].len(), normals.iter().map(|v| point(v)).collect()).expect("distinct nonzero normals")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn covectors_form_an_oriented_matroid(normals in prop_oneof![normals_strategy(2, 5), normals_strategy(3, 4)]) {
        let faces = arrangement(&normals).enumerate_faces(DEFAULT_CAP).unwrap();
        let report = check_covector_axioms(faces.covectors());
        prop_assert!(report.passed(), "{report:?}");
        for x in faces.covectors() {
            prop_assert!(faces.contains(&opposite(x)));
            for c in faces.chamber_covectors() {
                prop_assert!(faces.is_chamber(&compose(x, &c)));
            }
        }
    }

    #[test]
    fn chamber_count_matches_whitney(normals in prop_oneof![normals_strategy(2, 6), normals_strategy(3, 5)]) {
        let faces = arrangement(&normals).enumerate_faces(DEFAULT_CAP).unwrap();
        let chambers: i64 = poincare_polynomial(&normals).iter().sum();
        prop_assert_eq!(faces.chambers().len() as i64, chambers);
    }

    #[test]
    fn oracle_never_invents_faces(normals in prop_oneof![normals_strategy(2, 5), normals_strategy(3, 4)], seed in any::<u64>()) {
        let a = arrangement(&normals);
        let enumerated: BTreeSet<SignVector> = a.enumerate_faces(DEFAULT_CAP).unwrap().covectors().cloned().collect();
        let sampled = sample_covectors(&a, 600, seed).unwrap();
        prop_assert!(sampled.is_subset(&enumerated));
        prop_assert!(sampled.contains(&SignVector::zero(a.len())));
    }

    #[test]
    fn salvetti_cells_and_complex_covectors(normals in prop_oneof![normals_strategy(2, 5), normals_strategy(3, 4)]) {
        let a = arrangement(&normals);
        let faces = a.enumerate_faces(DEFAULT_CAP).unwrap();
        let sal = build_salvetti(&a, &faces);
        prop_assert_eq!(sal.len(), expected_cell_count(&faces));
        let report = check_sal_complex_order_iso(&a, &faces, &sal);
        prop_assert!(report.passed(), "{report:?}");
        for cell in sal.cells() {
            let decoded = from_complex_covector(&faces, &to_complex_covector(cell));
            prop_assert_eq!(decoded.as_ref(), Some(cell));
        }
    }

    #[test]
    fn planar_salvetti_homology_matches_whitney(normals in normals_strategy(2, 4)) {
        let a = arrangement(&normals);
        let sal = build_salvetti(&a, &a.enumerate_faces(DEFAULT_CAP).unwrap());
        let h = sal_order_complex(&sal).homology().unwrap();
        prop_assert!(h.is_torsion_free());
        let betti: Vec<i64> = h.betti_numbers().iter().map(|&b| b as i64).collect();
        prop_assert_eq!(betti, poincare_polynomial(&normals));
    }
}

#[test]
fn whitney_oracle_on_known_cases() {
    assert_eq!(poincare_polynomial(&[vec![1, 0], vec![0, 1]]), vec![1, 2, 1]);
    let a2 = vec![vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]];
    assert_eq!(poincare_polynomial(&a2), vec![1, 3, 2]);
    let generic = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]];
    assert_eq!(poincare_polynomial(&generic), vec![1, 4, 6, 3]);
}
