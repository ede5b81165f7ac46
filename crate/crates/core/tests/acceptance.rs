//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Each criterion runs under its own time budget, which is part of the check.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use salvetti_core::group::{check_conjugation_sampled, DEFAULT_GROUP_CAP};
use salvetti_core::orbit::format_word;
use salvetti_core::sampling::{sample_covectors, sample_dihedral_fan, DEFAULT_SAMPLES};
use salvetti_core::*;
use std::result::Result;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn faces_of(a: &Arrangement) -> Result<FacePoset, String> {
    a.enumerate_faces(DEFAULT_CAP).map_err(|e| e.to_string())
}

fn named(name: &str, a: Arrangement) -> (String, Arrangement) {
    (name.to_string(), a)
}

fn axiom_fixtures() -> Vec<(String, Arrangement)> {
    let mut v = vec![named("coords", coordinate_lines())];
    for ell in 2..=4 {
        v.push(named(&format!("braid:{ell} (essentialized)"), braid_arrangement(ell, true)));
    }
    for m in 2..=6 {
        v.push(named(&format!("dihedral:{m}"), dihedral_arrangement(m)));
    }
    v
}

fn all_fixtures() -> Vec<(String, Arrangement)> {
    let mut v = axiom_fixtures();
    v.push(named("single hyperplane", single_hyperplane()));
    for ell in 2..=4 {
        v.push(named(&format!("braid:{ell}"), braid_arrangement(ell, false)));
    }
    v
}

fn rank_two_fixtures() -> Vec<(String, Arrangement)> {
    let mut v = vec![
        named("coords", coordinate_lines()),
        named("braid:3 (essentialized)", braid_arrangement(3, true)),
    ];
    for m in 2..=6 {
        v.push(named(&format!("dihedral:{m}"), dihedral_arrangement(m)));
    }
    v
}

fn sv(s: &str) -> SignVector {
    s.parse().expect("sign vector literal")
}

fn golden_pairs() -> BTreeSet<(SignVector, SignVector)> {
    [
        ("++", "++"), ("-+", "-+"), ("--", "--"), ("+-", "+-"),
        ("0+", "++"), ("0+", "-+"), ("-0", "--"), ("0-", "+-"),
        ("+0", "++"), ("-0", "-+"), ("0-", "--"), ("+0", "+-"),
        ("00", "++"), ("00", "-+"), ("00", "--"), ("00", "+-"),
    ]
    .into_iter()
    .map(|(f, c)| (sv(f), sv(c)))
    .collect()
}

fn two_lines_sal() -> Outcome {
    let a = coordinate_lines();
    let sal = build_salvetti(&a, &faces_of(&a)?);
    let got: BTreeSet<(SignVector, SignVector)> =
        sal.cells().iter().map(|c| (c.face.clone(), c.chamber.clone())).collect();
    ensure(sal.len() == 16 && got == golden_pairs(), || {
        format!("got {} pairs, differing from the table: {:?}", sal.len(), got.symmetric_difference(&golden_pairs()).collect::<Vec<_>>())
    })?;
    Ok("16 pairs equal the table".into())
}

fn torus() -> Outcome {
    let a = coordinate_lines();
    let sal = build_salvetti(&a, &faces_of(&a)?);
    let h = sal_order_complex(&sal).homology().map_err(|e| e.to_string())?;
    ensure(h.betti_numbers() == vec![1, 2, 1] && h.is_torsion_free(), || {
        format!("betti {:?}, torsion-free {}", h.betti_numbers(), h.is_torsion_free())
    })?;
    Ok("betti (1, 2, 1), no torsion".into())
}

fn braid_counts() -> Outcome {
    let mut parts = Vec::new();
    for (ell, factorial) in [(2usize, 2usize), (3, 6), (4, 24)] {
        let a = braid_arrangement(ell, false);
        let chambers = faces_of(&a)?.chambers().len();
        let binom = ell * (ell - 1) / 2;
        ensure(a.len() == binom && chambers == factorial, || {
            format!("ℓ = {ell}: {} hyperplanes, {chambers} chambers", a.len())
        })?;
        parts.push(format!("ℓ={ell}: {binom}/{factorial}"));
    }
    Ok(parts.join(", "))
}

fn braid_salvetti() -> Outcome {
    let a = braid_arrangement(3, true);
    let sal = build_salvetti(&a, &faces_of(&a)?);
    let model = sal_cell_complex(&sal).map_err(|e| e.to_string())?;
    let counts = model.cell_counts();
    ensure(sal.len() == 24 && counts == vec![6, 12, 6], || format!("{} cells, histogram {counts:?}", sal.len()))?;
    let k = sal_order_complex(&sal);
    let h = k.homology().map_err(|e| e.to_string())?;
    ensure(h.betti_numbers() == vec![1, 3, 2] && h.is_torsion_free(), || {
        format!("betti {:?}, torsion-free {}", h.betti_numbers(), h.is_torsion_free())
    })?;
    let chi_cells = model.euler_characteristic();
    ensure(chi_cells == 0 && h.euler_characteristic() == 0 && k.euler_characteristic() == 0, || {
        format!("Euler characteristics: cells {chi_cells}, betti {}, simplices {}", h.euler_characteristic(), k.euler_characteristic())
    })?;
    Ok(format!("24 cells (6, 12, 6), betti (1, 3, 2), χ = 0, order complex {:?}", k.cell_counts()))
}

fn axioms() -> Outcome {
    let fixtures = axiom_fixtures();
    for (name, a) in &fixtures {
        let faces = faces_of(a)?;
        let report = check_covector_axioms(faces.covectors());
        ensure(report.passed(), || format!("{name}: {report:?}"))?;
    }
    Ok(format!("L0–L3 hold on {} arrangements", fixtures.len()))
}

fn complex_bijection() -> Outcome {
    let mut fixtures = axiom_fixtures();
    fixtures.push(named("single hyperplane", single_hyperplane()));
    let mut total = 0;
    for (name, a) in &fixtures {
        let faces = faces_of(a)?;
        let sal = build_salvetti(a, &faces);
        let report = check_sal_complex_order_iso(a, &faces, &sal);
        ensure(report.passed() && report.surjective == Some(true), || format!("{name}: {report:?}"))?;
        total += sal.len();
    }
    Ok(format!("{} arrangements, {total} cells", fixtures.len()))
}

fn group_structure() -> Outcome {
    let mut fixtures = axiom_fixtures();
    fixtures.push(named("braid:3", braid_arrangement(3, false)));
    fixtures.push(named("braid:4", braid_arrangement(4, false)));
    for (seed, (name, a)) in fixtures.iter().enumerate() {
        let faces = faces_of(a)?;
        for j in 0..a.len() {
            reflection_of(a, j).map_err(|e| format!("{name}: {e}"))?;
        }
        let w = reflection_group(a, &faces, None, DEFAULT_GROUP_CAP).map_err(|e| format!("{name}: {e}"))?;
        let report = check_transitive_free(&w, &faces);
        ensure(report.passed(), || format!("{name}: {report:?}"))?;
        let conj = check_conjugation_sampled(a, &w, 100, seed as u64).map_err(|e| e.to_string())?;
        ensure(conj.is_ok(), || format!("{name}: conjugation fails at {conj:?}"))?;
    }
    Ok(format!("{} arrangements: |W| = #chambers, transitive, free, conjugation", fixtures.len()))
}

fn orbit_histogram() -> Outcome {
    let fixtures = rank_two_fixtures();
    for (name, a) in &fixtures {
        let faces = faces_of(a)?;
        let sal = build_salvetti(a, &faces);
        let w = reflection_group(a, &faces, None, DEFAULT_GROUP_CAP).map_err(|e| e.to_string())?;
        let h = quotient_sal(&sal, &w).map_err(|e| e.to_string())?.histogram();
        ensure(h == vec![1, 2, 1], || format!("{name}: {h:?}"))?;
    }
    Ok(format!("(1, 2, 1) on {} arrangements", fixtures.len()))
}

fn braid_relation() -> Outcome {
    let cases = [
        ("braid:3 (essentialized)", braid_arrangement(3, true), "aba = bab"),
        ("coords", coordinate_lines(), "ab = ba"),
        ("dihedral:4", dihedral_arrangement(4), "abab = baba"),
        ("dihedral:5", dihedral_arrangement(5), "ababa = babab"),
        ("dihedral:6", dihedral_arrangement(6), "ababab = bababa"),
    ];
    let mut words = Vec::new();
    for (name, a, expected) in cases {
        let faces = faces_of(&a)?;
        let sal = build_salvetti(&a, &faces);
        let w = reflection_group(&a, &faces, None, DEFAULT_GROUP_CAP).map_err(|e| e.to_string())?;
        let p = presentation(&a, &w).map_err(|e| e.to_string())?;
        let word = boundary_word(&a, &faces, &sal, &w).map_err(|e| e.to_string())?;
        let from_word = relation_from_word(&word).map_err(|e| e.to_string())?;
        let from_presentation: Vec<String> = p.relations.iter().map(|r| r.relation.to_string()).collect();
        ensure(from_presentation == vec![expected.to_string()] && from_word.to_string() == expected, || {
            format!("{name}: presentation {from_presentation:?}, boundary word {} gives {from_word}", format_word(&word))
        })?;
        words.push(format!("{name}: {expected}"));
    }
    Ok(words.join("; "))
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for (seed, (name, a)) in all_fixtures().into_iter().enumerate() {
        let enumerated: BTreeSet<SignVector> = faces_of(&a)?.covectors().cloned().collect();
        let sampled = if a.is_rational() {
            sample_covectors(&a, DEFAULT_SAMPLES, seed as u64).map_err(|e| e.to_string())?
        } else {
            sample_dihedral_fan(a.len(), DEFAULT_SAMPLES, seed as u64)
        };
        ensure(sampled.is_subset(&enumerated), || format!("{name}: oracle found non-enumerated covectors"))?;
        ensure(sampled == enumerated, || {
            format!("{name}: oracle {} vs enumerated {}", sampled.len(), enumerated.len())
        })?;
        count += 1;
    }
    Ok(format!("oracle = enumeration on {count} arrangements"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "Salvetti pairs of two lines", budget: secs(1), run: two_lines_sal },
        Criterion { name: "torus homology", budget: secs(1), run: torus },
        Criterion { name: "braid hyperplane and chamber counts", budget: secs(5), run: braid_counts },
        Criterion { name: "Salvetti complex of A2", budget: secs(5), run: braid_salvetti },
        Criterion { name: "covector axioms", budget: secs(10), run: axioms },
        Criterion { name: "complex covector bijection", budget: secs(5), run: complex_bijection },
        Criterion { name: "reflection group structure", budget: secs(5), run: group_structure },
        Criterion { name: "orbit histogram", budget: secs(2), run: orbit_histogram },
        Criterion { name: "braid relation", budget: secs(2), run: braid_relation },
        Criterion { name: "sampling oracle equivalence", budget: secs(10), run: oracle_equivalence },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if elapsed <= c.budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over time budget")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "[{status}] {:>2}. {} ({:.3} s / {} s): {detail}",
            i + 1,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
