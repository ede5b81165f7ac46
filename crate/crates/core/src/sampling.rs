//! Independent face oracle: covectors of seeded random points.
//!
//! Rational arrangements are sampled on every intersection of at most two
//! hyperplanes (the whole space, each hyperplane, each pairwise
//! intersection) plus the origin. Dihedral fans are sampled by angle.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::{int, nullspace, Point};
use crate::sign::{Sign, SignVector};

pub const DEFAULT_SAMPLES: usize = 10_000;
const COEFFICIENT_RANGE: i64 = 1_000;

/// Covectors observed at `samples` random points spread over the
/// intersections of up to two hyperplanes, plus the origin.
pub fn sample_covectors(a: &Arrangement, samples: usize, seed: u64) -> Result<BTreeSet<SignVector>> {
    let normals = a.normals().ok_or(Error::CombinatorialOnly)?;
    let dim = a.dimension();
    let n = normals.len();
    let mut subsets: Vec<Vec<usize>> = vec![vec![]];
    subsets.extend((0..n).map(|i| vec![i]));
    subsets.extend((0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])));
    let per_subset = samples.div_ceil(subsets.len()).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    seen.insert(a.covector_of_point(&vec![int(0); dim])?);
    for subset in subsets {
        let rows: Vec<Point> = subset.iter().map(|&i| normals[i].clone()).collect();
        let basis = nullspace(&rows, dim);
        for _ in 0..per_subset {
            let mut x = vec![int(0); dim];
            for b in &basis {
                let c = int(rng.gen_range(-COEFFICIENT_RANGE..=COEFFICIENT_RANGE));
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += &c * bi;
                }
            }
            seen.insert(a.covector_of_point(&x)?);
        }
    }
    Ok(seen)
}

/// Covectors of `m` lines at angles `kπ/m`, line `k` oriented by
/// `sin(θ - kπ/m)`, seen at random directions and at the direction of each
/// line (both senses), plus the origin.
pub fn sample_dihedral_fan(m: usize, samples: usize, seed: u64) -> BTreeSet<SignVector> {
    // angles are integers in units of π / resolution, taken mod 2·resolution
    let resolution = (m * 1_000) as i64;
    let step = resolution / m as i64;
    let full = 2 * resolution;
    let covector = |theta: i64| -> SignVector {
        SignVector::new(
            (0..m as i64)
                .map(|k| {
                    let d = (theta - k * step).rem_euclid(full);
                    if d == 0 || d == resolution {
                        Sign::Zero
                    } else if d < resolution {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect(),
        )
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    seen.insert(SignVector::zero(m));
    for k in 0..m as i64 {
        seen.insert(covector(k * step));
        seen.insert(covector(k * step + resolution));
    }
    for _ in 0..samples {
        seen.insert(covector(rng.gen_range(0..full)));
    }
    seen
}
