//! Central hyperplane arrangements with exact rational normals, their
//! covectors and face posets.
//!
//! An arrangement is either *rational* (normals known, witness points
//! available) or *combinatorial* (only the covector set is known, used for
//! dihedral fans without a rational realization). All indices in this API
//! are 0-based; exports shift to 1-based.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feasibility::feasible_point;
use crate::group::SignedPermutation;
use crate::linalg::{
    dot, format_rational, int, is_zero_vector, parse_rational, point, proportional, rank, Matrix,
    Point, Rational,
};
use crate::poset::Poset;
use crate::sign::{Sign, SignVector};

pub const DEFAULT_CAP: usize = 12;

/// Oriented linear hyperplane `{α = 0}`; the positive side is `α > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Point,
}

impl Hyperplane {
    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x)
    }
}

#[derive(Clone, Debug)]
enum Realization {
    Rational {
        hyperplanes: Vec<Hyperplane>,
        /// Inner product used for reflections; identity when absent.
        gram: Option<Matrix>,
    },
    Combinatorial {
        len: usize,
        rank: usize,
        covectors: Vec<SignVector>,
        reflections: Option<Vec<SignedPermutation>>,
    },
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    dimension: usize,
    realization: Realization,
}

impl Arrangement {
    /// Build from rational normals. Zero normals and repeated hyperplanes
    /// (proportional normals, either orientation) are rejected.
    pub fn new(dimension: usize, normals: Vec<Point>) -> Result<Self> {
        for (i, n) in normals.iter().enumerate() {
            if n.len() != dimension {
                return Err(Error::DimensionMismatch {
                    index: i + 1,
                    expected: dimension,
                    found: n.len(),
                });
            }
            if is_zero_vector(n) {
                return Err(Error::ZeroNormal { index: i + 1 });
            }
        }
        for i in 0..normals.len() {
            for j in i + 1..normals.len() {
                if proportional(&normals[j], &normals[i]).is_some() {
                    return Err(Error::RepeatedHyperplane {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        Ok(Arrangement {
            dimension,
            realization: Realization::Rational {
                hyperplanes: normals.into_iter().map(|normal| Hyperplane { normal }).collect(),
                gram: None,
            },
        })
    }

    /// Attach a positive-definite inner product (Gram matrix in the ambient
    /// coordinates) for reflections.
    pub fn with_gram(mut self, gram: Matrix) -> Result<Self> {
        if gram.len() != self.dimension || gram.iter().any(|r| r.len() != self.dimension) {
            return Err(Error::Parse("gram matrix has the wrong shape".into()));
        }
        if let Realization::Rational { gram: g, .. } = &mut self.realization {
            *g = Some(gram);
        }
        Ok(self)
    }

    /// A purely combinatorial arrangement given by its covector set.
    pub fn combinatorial(
        len: usize,
        rank: usize,
        covectors: Vec<SignVector>,
        reflections: Option<Vec<SignedPermutation>>,
    ) -> Self {
        let mut covectors = covectors;
        covectors.sort();
        covectors.dedup();
        Arrangement {
            dimension: rank,
            realization: Realization::Combinatorial {
                len,
                rank,
                covectors,
                reflections,
            },
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of hyperplanes.
    pub fn len(&self) -> usize {
        match &self.realization {
            Realization::Rational { hyperplanes, .. } => hyperplanes.len(),
            Realization::Combinatorial { len, .. } => *len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.realization, Realization::Rational { .. })
    }

    pub fn hyperplanes(&self) -> Option<&[Hyperplane]> {
        match &self.realization {
            Realization::Rational { hyperplanes, .. } => Some(hyperplanes),
            Realization::Combinatorial { .. } => None,
        }
    }

    pub fn normals(&self) -> Option<Vec<Point>> {
        self.hyperplanes()
            .map(|hs| hs.iter().map(|h| h.normal.clone()).collect())
    }

    pub fn gram(&self) -> Option<&Matrix> {
        match &self.realization {
            Realization::Rational { gram, .. } => gram.as_ref(),
            Realization::Combinatorial { .. } => None,
        }
    }

    /// Stored reflections of a combinatorial arrangement, one per hyperplane.
    pub fn combinatorial_reflections(&self) -> Option<&[SignedPermutation]> {
        match &self.realization {
            Realization::Combinatorial { reflections, .. } => reflections.as_deref(),
            Realization::Rational { .. } => None,
        }
    }

    /// Rank of the normals, i.e. the codimension of the common intersection.
    pub fn rank(&self) -> usize {
        match &self.realization {
            Realization::Rational { hyperplanes, .. } => {
                rank(&hyperplanes.iter().map(|h| h.normal.clone()).collect::<Vec<_>>())
            }
            Realization::Combinatorial { rank, .. } => *rank,
        }
    }

    /// Normals span the ambient space (the hyperplanes meet only in `0`).
    pub fn is_essential(&self) -> bool {
        self.rank() == self.dimension
    }

    pub fn covector_of_point(&self, x: &[Rational]) -> Result<SignVector> {
        let hyperplanes = self.hyperplanes().ok_or(Error::CombinatorialOnly)?;
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                index: 0,
                expected: self.dimension,
                found: x.len(),
            });
        }
        Ok(SignVector::new(
            hyperplanes.iter().map(|h| Sign::of(&h.eval(x))).collect(),
        ))
    }

    /// A rational point whose covector is `x`, or `None` when the sign region
    /// is empty. Strict signs become `α ≥ 1` / `α ≤ -1` by homogeneity.
    pub fn feasible_witness(&self, x: &SignVector) -> Result<Option<Point>> {
        let hyperplanes = self.hyperplanes().ok_or(Error::CombinatorialOnly)?;
        assert_eq!(x.len(), hyperplanes.len(), "sign vector length mismatch");
        let mut equalities = Vec::new();
        let mut at_least_one = Vec::new();
        for (h, s) in hyperplanes.iter().zip(x.iter()) {
            match s {
                Sign::Zero => equalities.push(h.normal.clone()),
                Sign::Plus => at_least_one.push(h.normal.clone()),
                Sign::Minus => at_least_one.push(h.normal.iter().map(|c| -c).collect()),
            }
        }
        Ok(feasible_point(&equalities, &at_least_one, self.dimension))
    }

    /// Codimension of the face with covector `x`: rank of the normals on
    /// which it vanishes.
    fn rational_codim(&self, x: &SignVector) -> usize {
        let hs = self.hyperplanes().expect("rational arrangement");
        let rows: Vec<Point> = x.zero_set().into_iter().map(|i| hs[i].normal.clone()).collect();
        rank(&rows)
    }

    /// All faces, by brute force over `3^n` sign vectors with exact
    /// feasibility. Output is sorted by covector string.
    pub fn enumerate_faces(&self, cap: usize) -> Result<FacePoset> {
        let n = self.len();
        if n > cap {
            return Err(Error::CapExceeded { hyperplanes: n, cap });
        }
        let faces = match &self.realization {
            Realization::Rational { .. } => {
                let total = 3usize.pow(n as u32);
                (0..total)
                    .into_par_iter()
                    .map(|code| {
                        let x = decode_candidate(code, n);
                        let witness = self.feasible_witness(&x).expect("rational arrangement");
                        witness.map(|w| Face {
                            codim: self.rational_codim(&x),
                            covector: x,
                            witness: Some(w),
                        })
                    })
                    .filter_map(|f| f)
                    .collect::<Vec<_>>()
            }
            Realization::Combinatorial { covectors, .. } => combinatorial_faces(covectors),
        };
        Ok(FacePoset::from_faces(n, faces))
    }

    /// `A_F`: the hyperplanes containing the face, in original order.
    pub fn subarrangement_at(&self, face: &SignVector) -> Result<Subarrangement> {
        assert_eq!(face.len(), self.len(), "sign vector length mismatch");
        let index_map = face.zero_set();
        let arrangement = match &self.realization {
            Realization::Rational { hyperplanes, gram } => {
                let normals = index_map.iter().map(|&i| hyperplanes[i].normal.clone()).collect();
                let mut sub = Arrangement::new(self.dimension, normals)?;
                if let Some(g) = gram {
                    sub = sub.with_gram(g.clone())?;
                }
                sub
            }
            Realization::Combinatorial { rank, covectors, .. } => {
                let restricted: Vec<SignVector> =
                    covectors.iter().map(|c| c.restrict(&index_map)).collect();
                let sub_rank = if index_map.is_empty() {
                    0
                } else if index_map.len() == 1 {
                    1
                } else {
                    *rank
                };
                Arrangement::combinatorial(index_map.len(), sub_rank, restricted, None)
            }
        };
        Ok(Subarrangement {
            arrangement,
            index_map,
        })
    }

    pub fn to_file(&self) -> Result<ArrangementFile> {
        let hs = self.hyperplanes().ok_or(Error::CombinatorialOnly)?;
        Ok(ArrangementFile {
            dimension: self.dimension,
            hyperplanes: hs
                .iter()
                .map(|h| h.normal.iter().map(format_rational).collect())
                .collect(),
            gram: self
                .gram()
                .map(|g| g.iter().map(|r| r.iter().map(format_rational).collect()).collect()),
        })
    }

    pub fn from_file(file: &ArrangementFile) -> Result<Self> {
        let parse_rows = |rows: &Vec<Vec<String>>| -> Result<Vec<Point>> {
            rows.iter()
                .map(|r| r.iter().map(|s| parse_rational(s)).collect())
                .collect()
        };
        let mut a = Arrangement::new(file.dimension, parse_rows(&file.hyperplanes)?)?;
        if let Some(g) = &file.gram {
            a = a.with_gram(parse_rows(g)?)?;
        }
        Ok(a)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ArrangementFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Arrangement::from_file(&file)
    }
}

/// On-disk arrangement: `{"dimension": ℓ, "hyperplanes": [["p/q", ...], ...]}`
/// with an optional `"gram"` matrix for non-standard inner products.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub dimension: usize,
    pub hyperplanes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
}

fn decode_candidate(mut code: usize, n: usize) -> SignVector {
    let mut entries = Vec::with_capacity(n);
    for _ in 0..n {
        entries.push(Sign::ALL[code % 3]);
        code /= 3;
    }
    SignVector::new(entries)
}

/// Codimension from the poset: longest chain up to a tope.
fn combinatorial_faces(covectors: &[SignVector]) -> Vec<Face> {
    let mut by_zeros: Vec<&SignVector> = covectors.iter().collect();
    by_zeros.sort_by_key(|c| c.zero_set().len());
    let mut height: HashMap<&SignVector, usize> = HashMap::new();
    for c in &by_zeros {
        let h = by_zeros
            .iter()
            .filter(|d| d.zero_set().len() < c.zero_set().len() && c.leq(d))
            .map(|d| height[*d] + 1)
            .max()
            .unwrap_or(0);
        height.insert(c, h);
    }
    covectors
        .iter()
        .map(|c| Face {
            covector: c.clone(),
            witness: None,
            codim: height[c],
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Subarrangement {
    pub arrangement: Arrangement,
    /// Original position of each member hyperplane.
    pub index_map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub covector: SignVector,
    /// Point of the face; absent for combinatorial arrangements.
    pub witness: Option<Point>,
    pub codim: usize,
}

impl Face {
    pub fn is_chamber(&self) -> bool {
        self.covector.is_tope()
    }
}

/// Chambers as vertices, one edge per shared wall labelled by the
/// hyperplane index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberGraph {
    pub chambers: Vec<SignVector>,
    /// `(chamber, chamber, hyperplane)` with the first index smaller.
    pub edges: Vec<(usize, usize, usize)>,
}

impl ChamberGraph {
    pub fn neighbors(&self, chamber: usize) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .filter_map(|&(a, b, h)| {
                if a == chamber {
                    Some((b, h))
                } else if b == chamber {
                    Some((a, h))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Every vertex has degree two and the graph is one cycle.
    pub fn is_single_cycle(&self) -> bool {
        let n = self.chambers.len();
        if n == 2 {
            return self.edges.len() == 1;
        }
        if n < 2 || self.edges.len() != n || (0..n).any(|v| self.neighbors(v).len() != 2) {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for (w, _) in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// The faces of an arrangement ordered by `sign_leq` on covectors.
#[derive(Clone, Debug)]
pub struct FacePoset {
    len: usize,
    faces: Vec<Face>,
    index: HashMap<SignVector, usize>,
}

impl FacePoset {
    pub fn from_faces(len: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_by(|a, b| a.covector.cmp(&b.covector));
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.covector.clone(), i))
            .collect();
        FacePoset { len, faces, index }
    }

    /// Number of hyperplanes.
    pub fn hyperplane_count(&self) -> usize {
        self.len
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn covectors(&self) -> impl Iterator<Item = &SignVector> {
        self.faces.iter().map(|f| &f.covector)
    }

    pub fn position(&self, x: &SignVector) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn get(&self, x: &SignVector) -> Option<&Face> {
        self.position(x).map(|i| &self.faces[i])
    }

    pub fn contains(&self, x: &SignVector) -> bool {
        self.index.contains_key(x)
    }

    pub fn is_chamber(&self, x: &SignVector) -> bool {
        x.is_tope() && self.contains(x)
    }

    pub fn chambers(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.is_chamber()).collect()
    }

    pub fn chamber_covectors(&self) -> Vec<SignVector> {
        self.chambers().into_iter().map(|f| f.covector.clone()).collect()
    }

    /// Default base chamber: the smallest chamber covector (all `+` when
    /// that is a chamber).
    pub fn base_chamber(&self) -> Option<&Face> {
        self.faces.iter().find(|f| f.is_chamber())
    }

    /// Maximal elements under `sign_leq`.
    pub fn maximal(&self) -> Vec<&Face> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.covector != f.covector && f.covector.leq(&g.covector))
            })
            .collect()
    }

    /// Face counts indexed by codimension.
    pub fn codim_histogram(&self) -> Vec<usize> {
        let top = self.faces.iter().map(|f| f.codim).max().unwrap_or(0);
        let mut h = vec![0; top + 1];
        for f in &self.faces {
            h[f.codim] += 1;
        }
        h
    }

    pub fn poset(&self) -> Poset {
        let n = self.faces.len();
        Poset::from_relation(n, |i, j| self.faces[i].covector.leq(&self.faces[j].covector))
            .expect("sign order is a partial order")
    }

    /// Pairs `(i, j)` with face `i` covered by face `j`.
    pub fn covering_relations(&self) -> Vec<(usize, usize)> {
        self.poset().covers().to_vec()
    }

    /// Length of the longest chain counted in edges.
    pub fn rank_edges(&self) -> usize {
        self.poset().height()
    }

    /// Length of the longest chain counted in elements.
    pub fn rank_elements(&self) -> usize {
        if self.faces.is_empty() {
            0
        } else {
            self.rank_edges() + 1
        }
    }

    fn require_face(&self, f: &SignVector) -> Result<()> {
        if self.contains(f) {
            Ok(())
        } else {
            Err(Error::NotAFace(f.to_string()))
        }
    }

    fn require_chamber(&self, c: &SignVector) -> Result<()> {
        if self.is_chamber(c) {
            Ok(())
        } else {
            Err(Error::NotAChamber(c.to_string()))
        }
    }

    /// `C_F` as a sign vector over the members of `A_F`.
    pub fn restrict_chamber(&self, face: &SignVector, chamber: &SignVector) -> Result<SignVector> {
        self.require_face(face)?;
        self.require_chamber(chamber)?;
        Ok(chamber.restrict(&face.zero_set()))
    }

    /// The unique chamber `C ≥ F` with `C_F = D`: `D` on `A_F`, `F` elsewhere.
    pub fn unique_extension(&self, face: &SignVector, restricted: &SignVector) -> Result<SignVector> {
        self.require_face(face)?;
        let zeros = face.zero_set();
        if restricted.len() != zeros.len() || !restricted.is_tope() {
            return Err(Error::NotAChamber(restricted.to_string()));
        }
        let mut entries: Vec<Sign> = face.entries().to_vec();
        for (&i, s) in zeros.iter().zip(restricted.iter()) {
            entries[i] = s;
        }
        let chamber = SignVector::new(entries);
        self.require_chamber(&chamber)
            .map_err(|_| Error::NotAChamber(restricted.to_string()))?;
        Ok(chamber)
    }

    /// Hyperplanes carrying a facet of the chamber.
    pub fn walls(&self, chamber: &SignVector) -> Result<BTreeSet<usize>> {
        self.require_chamber(chamber)?;
        Ok((0..chamber.len())
            .filter(|&j| self.contains(&chamber.with_entry(j, Sign::Zero)))
            .collect())
    }

    pub fn adjacency_graph(&self) -> ChamberGraph {
        let chambers = self.chamber_covectors();
        let pos: HashMap<&SignVector, usize> =
            chambers.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut edges = Vec::new();
        for (a, c) in chambers.iter().enumerate() {
            for j in 0..c.len() {
                if !self.contains(&c.with_entry(j, Sign::Zero)) {
                    continue;
                }
                let other = c.with_entry(j, -c.get(j));
                if let Some(&b) = pos.get(&other) {
                    if a < b {
                        edges.push((a, b, j));
                    }
                }
            }
        }
        ChamberGraph { chambers, edges }
    }

    /// Chambers above a face.
    pub fn chambers_above(&self, face: &SignVector) -> Vec<SignVector> {
        self.faces
            .iter()
            .filter(|f| f.is_chamber() && face.leq(&f.covector))
            .map(|f| f.covector.clone())
            .collect()
    }

    pub fn witnesses(&self) -> BTreeMap<SignVector, Point> {
        self.faces
            .iter()
            .filter_map(|f| f.witness.clone().map(|w| (f.covector.clone(), w)))
            .collect()
    }
}

/// Two coordinate lines in the plane, forms `x₁` and `x₂`.
pub fn coordinate_lines() -> Arrangement {
    Arrangement::new(2, vec![point(&[1, 0]), point(&[0, 1])]).expect("valid")
}

/// The origin in the real line.
pub fn single_hyperplane() -> Arrangement {
    Arrangement::new(1, vec![point(&[1])]).expect("valid")
}

/// Forms `x_i - x_j` for `i < j`, ordered by `(i, j)`. When `essentialize`
/// is set the forms are rewritten in the basis `e_k - e_{k+1}` of the
/// sum-zero subspace, with the induced Gram matrix attached.
pub fn braid_arrangement(ell: usize, essentialize: bool) -> Arrangement {
    assert!(ell >= 2, "braid arrangement needs at least two coordinates");
    let pairs: Vec<(usize, usize)> = (0..ell)
        .flat_map(|i| (i + 1..ell).map(move |j| (i, j)))
        .collect();
    let form = |i: usize, j: usize| -> Point {
        (0..ell)
            .map(|k| int((k == i) as i64 - (k == j) as i64))
            .collect()
    };
    if !essentialize {
        return Arrangement::new(ell, pairs.iter().map(|&(i, j)| form(i, j)).collect())
            .expect("braid forms are distinct");
    }
    let basis: Vec<Point> = (0..ell - 1).map(|k| form(k, k + 1)).collect();
    let normals = pairs
        .iter()
        .map(|&(i, j)| {
            let a = form(i, j);
            basis.iter().map(|b| dot(&a, b)).collect()
        })
        .collect();
    let gram = basis
        .iter()
        .map(|b| basis.iter().map(|c| dot(b, c)).collect())
        .collect();
    Arrangement::new(ell - 1, normals)
        .and_then(|a| a.with_gram(gram))
        .expect("essentialized braid forms are distinct")
}

/// `m` lines through the origin of the plane with dihedral symmetry.
///
/// For `m ∈ {2, 3, 4, 6}` the lines have integer normals (with a Gram
/// matrix for `m = 3, 6`); otherwise the arrangement is combinatorial.
pub fn dihedral_arrangement(m: usize) -> Arrangement {
    assert!(m >= 2, "dihedral arrangement needs at least two lines");
    let hexagonal = || vec![point(&[2, -1]), point(&[-1, 2])];
    match m {
        2 => coordinate_lines(),
        3 => braid_arrangement(3, true),
        4 => Arrangement::new(
            2,
            vec![point(&[1, 0]), point(&[0, 1]), point(&[1, 1]), point(&[1, -1])],
        )
        .expect("valid"),
        6 => Arrangement::new(
            2,
            vec![
                point(&[1, 0]),
                point(&[0, 1]),
                point(&[1, 1]),
                point(&[2, -1]),
                point(&[-1, 2]),
                point(&[-1, 1]),
            ],
        )
        .and_then(|a| a.with_gram(hexagonal()))
        .expect("valid"),
        _ => dihedral_combinatorial(m),
    }
}

/// The fan of `m` lines at angles `kπ/m`, line `k` oriented by
/// `sin(θ - kπ/m)`, with its `m` reflections as signed permutations.
pub fn dihedral_combinatorial(m: usize) -> Arrangement {
    assert!(m >= 2, "dihedral arrangement needs at least two lines");
    let period = 2 * m;
    // sign of sin((2j + half - 2k)·π/(2m)) for a direction at angle
    // (2j + half)·π/(2m); `half` is 1 for chambers, 0 for rays.
    let entry = |j: usize, k: usize, half: bool| -> Sign {
        let d = (j + period - k) % period;
        if !half && (d == 0 || d == m) {
            Sign::Zero
        } else if d < m {
            Sign::Plus
        } else {
            Sign::Minus
        }
    };
    let mut covectors = vec![SignVector::zero(m)];
    for j in 0..period {
        for half in [false, true] {
            covectors.push(SignVector::new((0..m).map(|k| entry(j, k, half)).collect()));
        }
    }
    let reflections = (0..m)
        .map(|k| {
            // line p maps to line q = 2k - p (mod m), α_p ∘ s = -(-1)^t α_q
            let mut perm = vec![0; m];
            let mut flips = vec![1i8; m];
            for p in 0..m {
                let raw = 2 * k as i64 - p as i64;
                let q = raw.rem_euclid(m as i64);
                let t = (raw - q) / m as i64;
                perm[q as usize] = p;
                flips[q as usize] = if t.rem_euclid(2) == 0 { -1 } else { 1 };
            }
            SignedPermutation::new(perm, flips)
        })
        .collect();
    Arrangement::combinatorial(m, 2, covectors, Some(reflections))
}
