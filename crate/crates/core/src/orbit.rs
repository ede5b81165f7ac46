//! Quotients of the Salvetti complex by a reflection group, the planar dual
//! complex, boundary words and Artin presentations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::arrangement::{Arrangement, FacePoset};
use crate::error::{Error, Result};
use crate::group::{act_on_sal, equivariant_witnesses, ReflectionGroup};
use crate::homology::{ChainComplex, Homology, SparseMatrix};
use crate::linalg::{rank, Point};
use crate::salvetti::{serialize_point_list, SalCell, SalPoset};
use crate::sign::{Sign, SignVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    /// Least cell of the orbit.
    pub representative: SalCell,
    pub dim: usize,
    /// Positions of the member cells in the Salvetti poset.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCellComplexModel {
    /// Sorted by representative.
    pub classes: Vec<OrbitClass>,
    /// Class of each Salvetti cell.
    #[serde(skip)]
    pub class_of: Vec<usize>,
    /// Sorted by `(upper, lower)`.
    pub incidence: Vec<Incidence>,
}

/// The representative of class `upper` covers `count` cells of class `lower`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Incidence {
    pub upper: usize,
    pub lower: usize,
    pub count: usize,
}

impl OrbitCellComplexModel {
    pub fn histogram(&self) -> Vec<usize> {
        let top = self.classes.iter().map(|c| c.dim).max().map_or(0, |d| d + 1);
        let mut h = vec![0; top];
        for c in &self.classes {
            h[c.dim] += 1;
        }
        h
    }

    pub fn class_of_cell(&self, sal: &SalPoset, cell: &SalCell) -> Option<usize> {
        sal.position(&cell.face, &cell.chamber).map(|i| self.class_of[i])
    }
}

/// Orbits of the Salvetti cells under `w`.
pub fn quotient_sal(sal: &SalPoset, w: &ReflectionGroup) -> Result<OrbitCellComplexModel> {
    let cells = sal.cells();
    let mut class_of = vec![usize::MAX; cells.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for (i, cell) in cells.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let mut members = BTreeSet::new();
        for g in &w.elements {
            let image = act_on_sal(g, cell);
            let j = sal
                .position(&image.face, &image.chamber)
                .ok_or(Error::ActionNotClosed)?;
            members.insert(j);
        }
        for &j in &members {
            class_of[j] = orbits.len();
        }
        orbits.push(members.into_iter().collect());
    }
    // cells are sorted, so each orbit's least member is its first, and
    // orbits are already ordered by representative
    let classes: Vec<OrbitClass> = orbits
        .into_iter()
        .map(|members| OrbitClass {
            representative: cells[members[0]].clone(),
            dim: cells[members[0]].dim,
            members,
        })
        .collect();
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (c, class) in classes.iter().enumerate() {
        let rep = class.members[0];
        for &(lower, upper) in sal.poset().covers() {
            if upper == rep {
                *counts.entry((c, class_of[lower])).or_insert(0) += 1;
            }
        }
    }
    let incidence = counts
        .into_iter()
        .map(|((upper, lower), count)| Incidence { upper, lower, count })
        .collect();
    Ok(OrbitCellComplexModel {
        classes,
        class_of,
        incidence,
    })
}

fn require_rank_two(a: &Arrangement) -> Result<()> {
    match a.rank() {
        2 if a.is_essential() => Ok(()),
        2 => Err(Error::NotEssential),
        r => Err(Error::RankNotTwo(r)),
    }
}

/// Chambers in fan order from the base chamber, crossing its first wall
/// first and then always the wall not just crossed. Entry `k` is the chamber
/// and the hyperplane crossed to leave it.
pub fn fan_order(faces: &FacePoset, base: &SignVector) -> Result<Vec<(SignVector, usize)>> {
    let mut walk = Vec::new();
    let mut current = base.clone();
    let mut crossed = *faces.walls(base)?.iter().next().ok_or_else(|| Error::NotAChamber(base.to_string()))?;
    loop {
        walk.push((current.clone(), crossed));
        let next = current.with_entry(crossed, -current.get(crossed));
        if next == *base {
            break;
        }
        if walk.len() > faces.len() {
            return Err(Error::Unsupported("chamber walk does not close up".into()));
        }
        let walls = faces.walls(&next)?;
        let other = walls.iter().copied().find(|&h| h != crossed);
        if walls.len() != 2 {
            return Err(Error::Unsupported(format!("chamber {next} does not have two walls")));
        }
        crossed = other.expect("two walls");
        current = next;
    }
    Ok(walk)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualEdge {
    /// The ray this edge crosses.
    pub ray: SignVector,
    pub from: usize,
    pub to: usize,
}

/// Dual complex of a rank-2 fan: a `2m`-gon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualComplex2D {
    /// Chambers in fan order.
    pub vertices: Vec<SignVector>,
    /// `W`-invariant chamber witnesses, when the arrangement is rational.
    #[serde(serialize_with = "serialize_point_list")]
    pub witnesses: Option<Vec<Point>>,
    /// `edges[k]` joins `vertices[k]` and `vertices[k + 1]` (cyclically).
    pub edges: Vec<DualEdge>,
    /// The single 2-cell as its cyclic edge sequence.
    pub two_cell: Vec<usize>,
}

pub fn dual_complex_2d(a: &Arrangement, faces: &FacePoset, w: &ReflectionGroup) -> Result<DualComplex2D> {
    require_rank_two(a)?;
    let walk = fan_order(faces, &w.base_chamber)?;
    let n = walk.len();
    let vertices: Vec<SignVector> = walk.iter().map(|(c, _)| c.clone()).collect();
    let edges = walk
        .iter()
        .enumerate()
        .map(|(k, (c, h))| DualEdge {
            ray: c.with_entry(*h, Sign::Zero),
            from: k,
            to: (k + 1) % n,
        })
        .collect();
    let witnesses = if a.is_rational() {
        let x = equivariant_witnesses(w, faces)?;
        Some(vertices.iter().map(|c| x[c].clone()).collect())
    } else {
        None
    };
    Ok(DualComplex2D {
        vertices,
        witnesses,
        edges,
        two_cell: (0..n).collect(),
    })
}

/// A letter `g_i^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

pub fn generator_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("g{}", i + 1)
    }
}

/// A word as text: positive letters are concatenated (`aba`); with inverses
/// letters are space separated (`a b^-1`).
pub fn format_word(word: &[Letter]) -> String {
    if word.iter().all(|l| l.exponent == 1) {
        word.iter().map(|l| generator_name(l.generator)).collect()
    } else {
        word.iter()
            .map(|l| {
                let name = generator_name(l.generator);
                if l.exponent == 1 {
                    name
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn inverse_word(word: &[Letter]) -> Vec<Letter> {
    word.iter()
        .rev()
        .map(|l| Letter {
            generator: l.generator,
            exponent: -l.exponent,
        })
        .collect()
}

/// Boundary of the 2-cell `|({0}, C₀)|` read in fan order: each step
/// crosses a ray `F`, reading the edge `(F, F∘C₀)` with its orbit label and
/// exponent `+1` iff the walk moves toward the edge's vertex `(F∘C₀, F∘C₀)`.
pub fn boundary_word(a: &Arrangement, faces: &FacePoset, sal: &SalPoset, w: &ReflectionGroup) -> Result<Vec<Letter>> {
    require_rank_two(a)?;
    let base = &w.base_chamber;
    let walk = fan_order(faces, base)?;
    let quotient = quotient_sal(sal, w)?;
    let label_classes: Vec<usize> = w
        .generator_walls
        .iter()
        .map(|&h| {
            quotient
                .class_of_cell(sal, &SalCell {
                    face: base.with_entry(h, Sign::Zero),
                    chamber: base.clone(),
                    dim: 1,
                })
                .ok_or(Error::ActionNotClosed)
        })
        .collect::<Result<_>>()?;
    let n = walk.len();
    walk.iter()
        .enumerate()
        .map(|(k, (c, h))| {
            let ray = c.with_entry(*h, Sign::Zero);
            let target = ray.compose(base);
            let edge = SalCell {
                face: ray,
                chamber: target.clone(),
                dim: 1,
            };
            let class = quotient.class_of_cell(sal, &edge).ok_or(Error::ActionNotClosed)?;
            let generator = label_classes
                .iter()
                .position(|&l| l == class)
                .ok_or_else(|| Error::Unsupported(format!("edge ({}, {}) has no label", edge.face, edge.chamber)))?;
            let next = &walk[(k + 1) % n].0;
            Ok(Letter {
                generator,
                exponent: if *next == target { 1 } else { -1 },
            })
        })
        .collect()
}

/// An equation between two positive words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
}

impl Relation {
    /// `g_i g_j g_i ⋯ = g_j g_i g_j ⋯` with `m` factors on each side.
    pub fn artin(i: usize, j: usize, m: usize) -> Relation {
        let alternating = |first: usize, second: usize| -> Vec<Letter> {
            (0..m)
                .map(|k| Letter {
                    generator: if k % 2 == 0 { first } else { second },
                    exponent: 1,
                })
                .collect()
        };
        Relation {
            left: alternating(i, j),
            right: alternating(j, i),
        }
    }

    /// Exponent sum of each generator in `left · right⁻¹`.
    pub fn abelianized(&self, generators: usize) -> Vec<i64> {
        let mut sums = vec![0i64; generators];
        for l in &self.left {
            sums[l.generator] += l.exponent as i64;
        }
        for l in &self.right {
            sums[l.generator] -= l.exponent as i64;
        }
        sums
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", format_word(&self.left), format_word(&self.right))
    }
}

/// Split a cyclic word `u·v` of even length into halves and read `u·v = 1`
/// as `u⁻¹ = v`; both sides must be positive. Sides are ordered so the left
/// one starts with the smaller generator.
pub fn relation_from_word(word: &[Letter]) -> Result<Relation> {
    if !word.len().is_multiple_of(2) {
        return Err(Error::Unsupported("boundary word has odd length".into()));
    }
    let (u, v) = word.split_at(word.len() / 2);
    let left = inverse_word(u);
    let right = v.to_vec();
    if left.iter().chain(&right).any(|l| l.exponent != 1) {
        return Err(Error::Unsupported(format!(
            "boundary word {} does not split into positive halves",
            format_word(word)
        )));
    }
    Ok(if left <= right {
        Relation { left, right }
    } else {
        Relation { left: right, right: left }
    })
}

/// Number of hyperplanes containing the flat `H_i ∩ H_j`, i.e. whose normal
/// lies in the span of the normals of `H_i` and `H_j`.
pub fn coxeter_exponent(a: &Arrangement, i: usize, j: usize) -> Result<usize> {
    assert_ne!(i, j, "walls must differ");
    match a.normals() {
        Some(normals) => Ok(normals
            .iter()
            .filter(|n| rank(&[normals[i].clone(), normals[j].clone(), (*n).clone()]) == 2)
            .count()),
        None if a.rank() == 2 => Ok(a.len()),
        None => Err(Error::CombinatorialOnly),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArtinRelation {
    pub i: usize,
    pub j: usize,
    pub m: usize,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    /// Hyperplane index of each generator's wall.
    pub walls: Vec<usize>,
    pub relations: Vec<ArtinRelation>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let relations: Vec<String> = self.relations.iter().map(|r| r.relation.to_string()).collect();
        write!(f, "⟨{} | {}⟩", self.generators.join(", "), relations.join(", "))
    }
}

/// One generator per wall of the base chamber and one Artin relation per
/// pair of walls, pairs ordered by `(j - i, i)`.
pub fn presentation(a: &Arrangement, w: &ReflectionGroup) -> Result<Presentation> {
    let walls = w.generator_walls.clone();
    let k = walls.len();
    let mut pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    pairs.sort_by_key(|&(i, j)| (j - i, i));
    let relations = pairs
        .into_iter()
        .map(|(i, j)| {
            let m = coxeter_exponent(a, walls[i], walls[j])?;
            Ok(ArtinRelation {
                i,
                j,
                m,
                relation: Relation::artin(i, j, m),
            })
        })
        .collect::<Result<_>>()?;
    Ok(Presentation {
        generators: (0..k).map(generator_name).collect(),
        walls,
        relations,
    })
}

/// Homology of the one-vertex presentation 2-complex of a rank-2 quotient,
/// whose 2-cell is attached along the boundary word.
pub fn quotient_homology(quotient: &OrbitCellComplexModel, word: &[Letter]) -> Result<Homology> {
    let h = quotient.histogram();
    if h.first() != Some(&1) {
        return Err(Error::Unsupported("quotient has more than one vertex".into()));
    }
    if h.len() != 3 || h[2] != 1 {
        return Err(Error::Unsupported("only rank-2 quotients are supported".into()));
    }
    let generators = h[1];
    let mut sums = vec![0i64; generators];
    for l in word {
        sums[l.generator] += l.exponent as i64;
    }
    let d1 = SparseMatrix::zero(1, generators);
    let d2 = SparseMatrix::new(generators, vec![sums.iter().copied().enumerate().collect()]);
    ChainComplex::new(vec![1, generators, 1], vec![d1, d2])?.homology()
}
