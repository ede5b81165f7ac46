//! Abstract simplicial complexes, order complexes, nerves and regular cell
//! complexes described by their face posets.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{boundary_matrices, Homology};
use crate::poset::Poset;

/// Anything with a cell count per dimension.
pub trait CellCounts {
    fn cell_counts(&self) -> Vec<usize>;

    fn euler_characteristic(&self) -> i64 {
        self.cell_counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

/// Simplices are stored as sorted vertex-ID vectors, grouped by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Collect the given simplices (already downward closed).
    pub fn from_simplices(vertex_count: usize, simplices: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for mut s in simplices {
            assert!(!s.is_empty(), "simplices are nonempty");
            s.sort_unstable();
            s.dedup();
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, BTreeSet::new());
            }
            by_dim[d].insert(s);
        }
        SimplicialComplex {
            vertex_count,
            simplices: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    /// Downward closure of the given simplices.
    pub fn generated_by(vertex_count: usize, maximal: &[Vec<usize>]) -> Self {
        let mut all = HashSet::new();
        for s in maximal {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            let k = s.len();
            for mask in 1u64..(1 << k) {
                all.insert(
                    (0..k)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| s[b])
                        .collect::<Vec<_>>(),
                );
            }
        }
        SimplicialComplex::from_simplices(vertex_count, all)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Simplices of dimension `d`, each a sorted vertex list.
    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], |s| s.as_slice())
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    /// Every nonempty subset of a simplex is a simplex.
    pub fn is_downward_closed(&self) -> bool {
        let all: HashSet<&Vec<usize>> = self.all_simplices().collect();
        self.all_simplices().all(|s| {
            s.len() == 1
                || (0..s.len()).all(|i| {
                    let mut face = s.clone();
                    face.remove(i);
                    all.contains(&face)
                })
        })
    }

    /// Simplices ordered by inclusion.
    pub fn face_poset(&self) -> Poset {
        let all: Vec<&Vec<usize>> = self.all_simplices().collect();
        let sets: Vec<BTreeSet<usize>> = all.iter().map(|s| s.iter().copied().collect()).collect();
        Poset::from_relation(all.len(), |i, j| sets[i].is_subset(&sets[j])).expect("inclusion order")
    }

    /// Barycentric subdivision: the order complex of the face poset.
    pub fn subdivide(&self) -> SimplicialComplex {
        order_complex(&self.face_poset())
    }

    pub fn homology(&self) -> Result<Homology> {
        boundary_matrices(self).homology()
    }
}

impl CellCounts for SimplicialComplex {
    fn cell_counts(&self) -> Vec<usize> {
        self.simplices.iter().map(|s| s.len()).collect()
    }
}

/// Vertices are the poset elements, simplices its nonempty chains.
pub fn order_complex(poset: &Poset) -> SimplicialComplex {
    SimplicialComplex::from_simplices(poset.len(), poset.chains())
}

/// One vertex per member, one simplex per subfamily with a common point.
pub fn nerve<T: Ord>(family: &[BTreeSet<T>]) -> SimplicialComplex {
    let mut simplices = Vec::new();
    let mut stack: Vec<(Vec<usize>, BTreeSet<&T>)> = family
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_empty())
        .map(|(i, s)| (vec![i], s.iter().collect()))
        .collect();
    while let Some((members, common)) = stack.pop() {
        let last = *members.last().expect("nonempty");
        for (j, set) in family.iter().enumerate().skip(last + 1) {
            let next: BTreeSet<&T> = common.iter().copied().filter(|x| set.contains(x)).collect();
            if !next.is_empty() {
                let mut m = members.clone();
                m.push(j);
                stack.push((m, next));
            }
        }
        simplices.push(members);
    }
    SimplicialComplex::from_simplices(family.len(), simplices)
}

/// A regular CW complex known through its face poset and cell dimensions.
#[derive(Clone, Debug)]
pub struct RegularCellComplexModel {
    poset: Poset,
    dims: Vec<usize>,
}

impl RegularCellComplexModel {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Barycentric subdivision of the complex.
    pub fn subdivision(&self) -> SimplicialComplex {
        order_complex(&self.poset)
    }

    /// Homology, computed on the barycentric subdivision.
    pub fn homology(&self) -> Result<Homology> {
        self.subdivision().homology()
    }

    /// Every cell's boundary (the order complex of its strict down-set) has
    /// the homology of a sphere of one dimension less. Returns the first
    /// offending cell.
    pub fn check_boundary_spheres(&self) -> std::result::Result<(), usize> {
        for cell in 0..self.poset.len() {
            let below = self.poset.strictly_below(cell);
            let d = self.dims[cell];
            let ok = if d == 0 {
                below.is_empty()
            } else {
                let boundary = order_complex(&self.poset.subposet(&below));
                match boundary.homology() {
                    Ok(h) => h.is_sphere(d - 1),
                    Err(_) => false,
                }
            };
            if !ok {
                return Err(cell);
            }
        }
        Ok(())
    }
}

impl CellCounts for RegularCellComplexModel {
    fn cell_counts(&self) -> Vec<usize> {
        let top = self.dims.iter().copied().max().map_or(0, |d| d + 1);
        let mut counts = vec![0; top];
        for &d in &self.dims {
            counts[d] += 1;
        }
        counts
    }
}

/// A cell complex model whose face poset is `poset`. `dims` must strictly
/// increase along the order.
pub fn cell_complex_from_poset(poset: Poset, dims: Vec<usize>) -> Result<RegularCellComplexModel> {
    assert_eq!(poset.len(), dims.len(), "one dimension per element");
    if let Some(&(lower, upper)) = poset
        .covers()
        .iter()
        .find(|&&(lower, upper)| dims[lower] >= dims[upper])
    {
        return Err(Error::NonMonotoneDimension { lower, upper });
    }
    Ok(RegularCellComplexModel { poset, dims })
}

pub fn euler_characteristic(c: &impl CellCounts) -> i64 {
    c.euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(family: &[&[u32]]) -> Vec<BTreeSet<u32>> {
        family.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn order_complex_examples() {
        let antichain = Poset::from_relation(3, |i, j| i == j).unwrap();
        assert_eq!(order_complex(&antichain).cell_counts(), vec![3]);
        let total = Poset::from_relation(3, |i, j| i <= j).unwrap();
        let k = order_complex(&total);
        assert_eq!(k.cell_counts(), vec![3, 3, 1]);
        assert_eq!(k.euler_characteristic(), 1);
        assert!(k.is_downward_closed());
    }

    #[test]
    fn nerve_examples() {
        let k = nerve(&sets(&[&[1, 2], &[2, 3], &[3, 1]]));
        assert_eq!(k.cell_counts(), vec![3, 3]);
        let k = nerve(&sets(&[&[1], &[1, 2], &[1, 2, 3]]));
        assert_eq!(k.cell_counts(), vec![3, 3, 1]);
        let k = nerve(&sets(&[&[1], &[2]]));
        assert_eq!(k.cell_counts(), vec![2]);
        assert!(k.is_downward_closed());
    }

    #[test]
    fn euler_of_point_and_total_orders() {
        let point = SimplicialComplex::from_simplices(1, [vec![0]]);
        assert_eq!(euler_characteristic(&point), 1);
        for k in 1..6 {
            let total = Poset::from_relation(k, |i, j| i <= j).unwrap();
            assert_eq!(euler_characteristic(&order_complex(&total)), 1);
        }
    }

    #[test]
    fn two_cell_circle() {
        // v0, v1 below e0, e1
        let p = Poset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let model = cell_complex_from_poset(p, vec![0, 0, 1, 1]).unwrap();
        assert_eq!(model.cell_counts(), vec![2, 2]);
        assert_eq!(model.euler_characteristic(), 0);
        assert_eq!(model.homology().unwrap().betti_numbers(), vec![1, 1]);
        assert!(model.check_boundary_spheres().is_ok());
    }

    #[test]
    fn single_point_model_and_bad_dims() {
        let p = Poset::from_relation(1, |_, _| true).unwrap();
        let model = cell_complex_from_poset(p, vec![0]).unwrap();
        assert_eq!(model.cell_counts(), vec![1]);
        let p = Poset::from_covers(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            cell_complex_from_poset(p, vec![1, 1]),
            Err(Error::NonMonotoneDimension { lower: 0, upper: 1 })
        ));
    }

    #[test]
    fn subdivision_keeps_homology() {
        // hollow triangle and a full tetrahedron boundary
        let circle = SimplicialComplex::generated_by(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let sphere = SimplicialComplex::generated_by(
            4,
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        );
        for k in [circle, sphere] {
            let before = k.homology().unwrap();
            let after = k.subdivide().homology().unwrap();
            assert_eq!(before, after);
            assert_eq!(k.euler_characteristic(), before.euler_characteristic());
        }
    }
}
