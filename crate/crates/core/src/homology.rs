//! Integer chain complexes and their homology via Smith normal form.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Sparse integer matrix stored by columns; each column lists `(row, value)`
/// with nonzero values and increasing rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for (r, v) in col {
                    assert!(r < rows, "row index out of range");
                    *acc.entry(r).or_insert(0) += v;
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { rows, columns }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[i][j] = v;
            }
        }
        m
    }

    /// `self · other`, both sparse.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows, "inner dimensions differ");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(k, b) in col {
                    for &(i, a) in &self.columns[k] {
                        *acc.entry(i).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Rank and invariant factors (the nonzero diagonal of the Smith normal
    /// form, each dividing the next).
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        smith_invariants(self)
    }
}

/// Chain groups `C_0 .. C_top` of the given ranks with `∂_k : C_k → C_{k-1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    /// `boundaries[k - 1]` is `∂_k`.
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// Shapes are checked and `∂_k ∘ ∂_{k+1} = 0` is verified.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        assert_eq!(
            boundaries.len() + 1,
            ranks.len().max(1),
            "one boundary map per positive degree"
        );
        for (k, b) in boundaries.iter().enumerate() {
            assert_eq!(b.rows(), ranks[k], "boundary {} has wrong row count", k + 1);
            assert_eq!(b.cols(), ranks[k + 1], "boundary {} has wrong column count", k + 1);
        }
        for k in 1..boundaries.len() {
            if !boundaries[k - 1].mul(&boundaries[k]).is_zero() {
                return Err(Error::NotAComplex { degree: k });
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `∂_k` for `k ≥ 1`.
    pub fn boundary(&self, k: usize) -> Option<&SparseMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn homology(&self) -> Result<Homology> {
        let invariants: Vec<Vec<BigInt>> = self.boundaries.iter().map(smith_invariants).collect();
        let rank_of = |k: usize| -> usize {
            k.checked_sub(1)
                .and_then(|i| invariants.get(i))
                .map_or(0, |v| v.len())
        };
        let degrees = (0..self.ranks.len())
            .map(|k| HomologyGroup {
                betti: self.ranks[k] - rank_of(k) - rank_of(k + 1),
                torsion: invariants
                    .get(k)
                    .map(|v| v.iter().filter(|d| !d.is_one()).cloned().collect())
                    .unwrap_or_default(),
            })
            .collect();
        Ok(Homology { degrees })
    }
}

/// `H_k ≅ Z^betti ⊕ ⨁ Z/t` for `t` in `torsion`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

fn serialize_bigints<S: Serializer>(values: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|v| v.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Homology {
    pub degrees: Vec<HomologyGroup>,
}

impl Homology {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees.iter().map(|g| g.betti).collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.degrees.iter().all(|g| g.torsion.is_empty())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// Homology of the `d`-sphere; `d = -1` (empty space) is not representable
    /// and `d = 0` means two points.
    pub fn is_sphere(&self, d: usize) -> bool {
        if !self.is_torsion_free() {
            return false;
        }
        let betti = self.betti_numbers();
        let expected: Vec<usize> = if d == 0 {
            vec![2]
        } else {
            (0..=d).map(|k| usize::from(k == 0 || k == d)).collect()
        };
        let trimmed: Vec<usize> = {
            let mut b = betti;
            while b.len() > expected.len() && b.last() == Some(&0) {
                b.pop();
            }
            b
        };
        trimmed == expected
    }
}

/// Simplicial boundary maps; a simplex `[v_0 < ⋯ < v_d]` has boundary
/// `Σ (-1)^i [.., v̂_i, ..]`.
pub fn boundary_matrices(k: &SimplicialComplex) -> ChainComplex {
    let top = k.dimension().map_or(0, |d| d + 1);
    let ranks: Vec<usize> = (0..top).map(|d| k.simplices(d).len()).collect();
    let mut boundaries = Vec::new();
    for d in 1..top {
        let index: HashMap<&[usize], usize> = k
            .simplices(d - 1)
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let columns = k
            .simplices(d)
            .iter()
            .map(|s| {
                (0..s.len())
                    .map(|i| {
                        let mut face = s.clone();
                        face.remove(i);
                        let row = *index.get(face.as_slice()).expect("complex is downward closed");
                        (row, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        boundaries.push(SparseMatrix::new(ranks[d - 1], columns));
    }
    ChainComplex::new(ranks, boundaries).expect("simplicial boundary squares to zero")
}

/// Invariant factors of an integer matrix. Unit pivots are eliminated
/// sparsely first; what remains is reduced densely.
fn smith_invariants(m: &SparseMatrix) -> Vec<BigInt> {
    // row-major sparse copy
    let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); m.rows()];
    let mut in_col: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, v) in col {
            rows[i].insert(j, BigInt::from(v));
            in_col[j].insert(i);
        }
    }
    let mut alive_row = vec![true; m.rows()];
    let mut units = 0usize;
    loop {
        let mut progress = false;
        for c in 0..m.cols() {
            let pivot = in_col[c]
                .iter()
                .copied()
                .filter(|&r| rows[r][&c].abs().is_one())
                .min_by_key(|&r| rows[r].len());
            let Some(p) = pivot else { continue };
            let pivot_row = std::mem::take(&mut rows[p]);
            let pivot_val = pivot_row[&c].clone();
            for &j in pivot_row.keys() {
                in_col[j].remove(&p);
            }
            let others: Vec<usize> = in_col[c].iter().copied().collect();
            for r in others {
                let factor = &rows[r][&c] * &pivot_val;
                for (&j, v) in &pivot_row {
                    let entry = rows[r].entry(j).or_insert_with(BigInt::zero);
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        rows[r].remove(&j);
                        in_col[j].remove(&r);
                    } else {
                        in_col[j].insert(r);
                    }
                }
            }
            alive_row[p] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let live_rows: Vec<usize> = (0..m.rows()).filter(|&r| alive_row[r] && !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols()).filter(|&c| !in_col[c].is_empty()).collect();
    let col_pos: HashMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|&r| {
            let mut row = vec![BigInt::zero(); live_cols.len()];
            for (j, v) in &rows[r] {
                row[col_pos[j]] = v.clone();
            }
            row
        })
        .collect();
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_diagonal(&mut dense));
    normalize_diagonal(&mut factors);
    factors
}

/// Diagonalize by unimodular row and column operations; returns the nonzero
/// diagonal entries (absolute values), not yet in divisibility order.
fn dense_diagonal(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            let (upper, lower) = a.split_at_mut(i);
            for (target, source) in lower[0][t..cols].iter_mut().zip(&upper[t][t..cols]) {
                *target -= &q * source;
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            for row in a.iter_mut().skip(t) {
                let delta = &q * &row[t];
                row[j] -= delta;
            }
            clean &= a[t][j].is_zero();
        }
        if clean {
            diag.push(a[t][t].abs());
            t += 1;
        }
    }
    diag
}

/// Turn a diagonal into invariant-factor order by gcd/lcm exchanges.
fn normalize_diagonal(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        SparseMatrix::new(
            r,
            (0..c)
                .map(|j| (0..r).map(|i| (i, rows[i][j])).collect())
                .collect(),
        )
    }

    #[test]
    fn smith_examples() {
        assert_eq!(dense(&[&[2, 0], &[0, 3]]).smith_invariants(), big(&[1, 6]));
        assert_eq!(dense(&[&[2, 4], &[6, 8]]).smith_invariants(), big(&[2, 4]));
        assert_eq!(dense(&[&[0, 0], &[0, 0]]).smith_invariants(), big(&[]));
        assert_eq!(dense(&[&[1, -1]]).smith_invariants(), big(&[1]));
        assert_eq!(dense(&[&[4, 6, 8]]).smith_invariants(), big(&[2]));
    }

    #[test]
    fn edge_boundary_orientation() {
        let k = SimplicialComplex::from_simplices(2, [vec![0], vec![1], vec![0, 1]]);
        let c = boundary_matrices(&k);
        assert_eq!(c.boundary(1).unwrap().to_dense(), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn full_triangle_is_a_complex() {
        let k = SimplicialComplex::generated_by(3, &[vec![0, 1, 2]]);
        let c = boundary_matrices(&k);
        assert!(c.boundary(1).unwrap().mul(c.boundary(2).unwrap()).is_zero());
        let h = c.homology().unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 0, 0]);
    }

    #[test]
    fn circle_homology() {
        let k = SimplicialComplex::generated_by(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let h = k.homology().unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 1]);
        assert!(h.is_sphere(1));
        assert!(h.is_torsion_free());
    }

    #[test]
    fn rejects_non_complex() {
        let d1 = SparseMatrix::new(1, vec![vec![(0, 1)]]);
        let d2 = SparseMatrix::new(1, vec![vec![(0, 1)]]);
        assert!(matches!(
            ChainComplex::new(vec![1, 1, 1], vec![d1, d2]),
            Err(Error::NotAComplex { degree: 1 })
        ));
    }

    #[test]
    fn projective_plane_has_torsion() {
        // six-vertex triangulation of RP²
        let faces = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5],
        ];
        let k = SimplicialComplex::generated_by(6, &faces.map(|f| f.to_vec()));
        let h = k.homology().unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 0, 0]);
        assert_eq!(h.degrees[1].torsion, big(&[2]));
        assert_eq!(h.euler_characteristic(), 1);
    }

    #[test]
    fn two_points_form_a_zero_sphere() {
        let k = SimplicialComplex::from_simplices(2, [vec![0], vec![1]]);
        assert!(k.homology().unwrap().is_sphere(0));
    }
}
