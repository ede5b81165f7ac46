//! Finite reflection groups acting on arrangements through signed
//! permutations of the hyperplanes.
//!
//! An element `g` is recorded by `(σ, ε)` with `α_{σ(k)} ∘ g = ε_k α_k`, so
//! that on covectors `(gX)_{σ(k)} = ε_k X_k`. Products compose as maps:
//! `(g·h)X = g(hX)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrangement::{Arrangement, FacePoset};
use crate::error::{Error, Result};
use crate::linalg::{
    dot, format_rational, identity, inverse, mat_mul, mat_vec, proportional, transpose, Matrix,
    Point, Rational,
};
use crate::salvetti::SalCell;
use crate::sign::{Sign, SignVector};

pub const DEFAULT_GROUP_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    flips: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, flips: Vec<i8>) -> Self {
        assert_eq!(perm.len(), flips.len(), "perm and flips differ in length");
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        assert!(flips.iter().all(|&f| f == 1 || f == -1), "flips must be ±1");
        SignedPermutation { perm, flips }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            flips: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[i8] {
        &self.flips
    }

    pub fn is_identity(&self) -> bool {
        *self == SignedPermutation::identity(self.len())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.len(), other.len(), "length mismatch");
        SignedPermutation {
            perm: other.perm.iter().map(|&k| self.perm[k]).collect(),
            flips: (0..self.len())
                .map(|k| self.flips[other.perm[k]] * other.flips[k])
                .collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut perm = vec![0; self.len()];
        let mut flips = vec![1; self.len()];
        for k in 0..self.len() {
            perm[self.perm[k]] = k;
            flips[self.perm[k]] = self.flips[k];
        }
        SignedPermutation { perm, flips }
    }

    pub fn act(&self, x: &SignVector) -> SignVector {
        assert_eq!(x.len(), self.len(), "sign vector length mismatch");
        let mut out = vec![Sign::Zero; x.len()];
        for k in 0..x.len() {
            out[self.perm[k]] = x.get(k).times(self.flips[k]);
        }
        SignVector::new(out)
    }
}

/// A group element: its action on hyperplanes, its matrix (rational mode)
/// and a word in the generators that evaluates to it.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub action: SignedPermutation,
    pub matrix: Option<Matrix>,
    pub word: Vec<usize>,
}

impl GroupElement {
    pub fn identity(n: usize, dimension: Option<usize>) -> Self {
        GroupElement {
            action: SignedPermutation::identity(n),
            matrix: dimension.map(identity),
            word: Vec::new(),
        }
    }

    /// `self · other` with concatenated words.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            action: self.action.compose(&other.action),
            matrix: match (&self.matrix, &other.matrix) {
                (Some(a), Some(b)) => Some(mat_mul(a, b)),
                _ => None,
            },
            word: self.word.iter().chain(&other.word).copied().collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            action: self.action.inverse(),
            matrix: self.matrix.as_ref().map(|m| inverse(m).expect("group elements are invertible")),
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn act_on_point(&self, x: &[Rational]) -> Option<Point> {
        self.matrix.as_ref().map(|m| mat_vec(m, x))
    }
}

pub fn act_on_covector(g: &GroupElement, x: &SignVector) -> SignVector {
    g.action.act(x)
}

/// `w|(F,C)| = |(wF,wC)|`.
pub fn act_on_sal(g: &GroupElement, cell: &SalCell) -> SalCell {
    SalCell {
        face: g.action.act(&cell.face),
        chamber: g.action.act(&cell.chamber),
        dim: cell.dim,
    }
}

/// The hyperplane permutation induced by a linear map `m` on points:
/// `α_j ∘ m = c·α_k` gives `σ(k) = j`, `ε_k = sign(c)`.
pub fn signed_permutation_of_matrix(a: &Arrangement, m: &Matrix, hyperplane: usize) -> Result<SignedPermutation> {
    let normals = a.normals().ok_or(Error::CombinatorialOnly)?;
    let mt = transpose(m);
    let n = normals.len();
    let mut perm = vec![usize::MAX; n];
    let mut flips = vec![1i8; n];
    for (j, aj) in normals.iter().enumerate() {
        let pulled = mat_vec(&mt, aj);
        let hit = normals
            .iter()
            .enumerate()
            .find_map(|(k, ak)| proportional(&pulled, ak).map(|c| (k, c)));
        let Some((k, c)) = hit else {
            return Err(Error::NotASymmetry {
                hyperplane: hyperplane + 1,
                moved: j + 1,
                image: pulled.iter().map(format_rational).collect::<Vec<_>>().join(", "),
            });
        };
        if perm[k] != usize::MAX {
            return Err(Error::NotASymmetry {
                hyperplane: hyperplane + 1,
                moved: j + 1,
                image: pulled.iter().map(format_rational).collect::<Vec<_>>().join(", "),
            });
        }
        perm[k] = j;
        flips[k] = if c > Rational::from_integer(0.into()) { 1 } else { -1 };
    }
    Ok(SignedPermutation::new(perm, flips))
}

/// Orthogonal reflection in hyperplane `j`. With Gram matrix `G` this is
/// `I − 2 G⁻¹ a aᵀ / (aᵀ G⁻¹ a)`; combinatorial arrangements use their
/// stored reflections.
pub fn reflection_of(a: &Arrangement, j: usize) -> Result<GroupElement> {
    assert!(j < a.len(), "hyperplane index out of range");
    let Some(normals) = a.normals() else {
        let stored = a.combinatorial_reflections().ok_or(Error::CombinatorialOnly)?;
        return Ok(GroupElement {
            action: stored[j].clone(),
            matrix: None,
            word: vec![j],
        });
    };
    let dim = a.dimension();
    let normal = &normals[j];
    let g_inv = match a.gram() {
        Some(g) => inverse(g).ok_or_else(|| Error::Parse("gram matrix is singular".into()))?,
        None => identity(dim),
    };
    let v = mat_vec(&g_inv, normal);
    let denom = dot(normal, &v);
    let two = Rational::from_integer(2.into());
    let matrix: Matrix = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| {
                    let id = if r == c { Rational::from_integer(1.into()) } else { Rational::from_integer(0.into()) };
                    id - &two * &v[r] * &normal[c] / &denom
                })
                .collect()
        })
        .collect();
    let action = signed_permutation_of_matrix(a, &matrix, j)?;
    Ok(GroupElement {
        action,
        matrix: Some(matrix),
        word: vec![j],
    })
}

#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    /// Generators, with `word = [index in this list]`.
    pub generators: Vec<GroupElement>,
    /// Hyperplane carrying each generator's mirror.
    pub generator_walls: Vec<usize>,
    /// All elements, sorted by signed permutation; each with a shortest word.
    pub elements: Vec<GroupElement>,
    pub base_chamber: SignVector,
}

impl ReflectionGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn hyperplane_count(&self) -> usize {
        self.base_chamber.len()
    }

    pub fn identity(&self) -> &GroupElement {
        self.elements
            .iter()
            .find(|g| g.action.is_identity())
            .expect("closure contains the identity")
    }

    pub fn element(&self, action: &SignedPermutation) -> Option<&GroupElement> {
        self.elements
            .binary_search_by(|g| g.action.cmp(action))
            .ok()
            .map(|i| &self.elements[i])
    }

    /// Evaluate a word in the generators.
    pub fn evaluate(&self, word: &[usize]) -> GroupElement {
        let n = self.hyperplane_count();
        let dim = self.generators.first().and_then(|g| g.matrix.as_ref()).map(|m| m.len());
        word.iter().fold(GroupElement::identity(n, dim), |acc, &i| {
            let mut g = acc.mul(&self.generators[i]);
            g.word = acc.word.iter().copied().chain([i]).collect();
            g
        })
    }
}

/// Closure of `gens` under multiplication, by breadth-first search on
/// right multiplication so every element carries a shortest word. Each
/// generator's `word` must be the single index of its mirror hyperplane, as
/// produced by `reflection_of`; in the result, words index `gens`.
pub fn generate_group(gens: &[GroupElement], base_chamber: SignVector, cap: usize) -> Result<ReflectionGroup> {
    let n = base_chamber.len();
    let dim = gens.first().and_then(|g| g.matrix.as_ref()).map(|m| m.len());
    let generators: Vec<GroupElement> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| GroupElement {
            action: g.action.clone(),
            matrix: g.matrix.clone(),
            word: vec![i],
        })
        .collect();
    for (i, g) in generators.iter().enumerate() {
        if !g.action.compose(&g.action).is_identity() {
            return Err(Error::Unsupported(format!("generator {} is not an involution", i + 1)));
        }
    }
    let generator_walls = gens.iter().map(|g| g.word.first().copied().unwrap_or(usize::MAX)).collect();
    let id = GroupElement::identity(n, dim);
    let mut seen: HashSet<SignedPermutation> = HashSet::from([id.action.clone()]);
    let mut queue = VecDeque::from([id.clone()]);
    let mut elements = vec![id];
    while let Some(g) = queue.pop_front() {
        for (i, s) in generators.iter().enumerate() {
            let mut h = g.mul(s);
            h.word = g.word.iter().copied().chain([i]).collect();
            if seen.insert(h.action.clone()) {
                if elements.len() == cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    elements.sort_by(|a, b| a.action.cmp(&b.action));
    Ok(ReflectionGroup {
        generators,
        generator_walls,
        elements,
        base_chamber,
    })
}

/// The group generated by the wall reflections of the base chamber (the
/// first chamber in sorted order unless `base` is given).
pub fn reflection_group(a: &Arrangement, faces: &FacePoset, base: Option<&SignVector>, cap: usize) -> Result<ReflectionGroup> {
    let base = match base {
        Some(c) => c.clone(),
        None => faces
            .base_chamber()
            .map(|f| f.covector.clone())
            .ok_or_else(|| Error::NotAChamber(String::new()))?,
    };
    let walls = faces.walls(&base)?;
    let gens = walls
        .iter()
        .map(|&j| reflection_of(a, j))
        .collect::<Result<Vec<_>>>()?;
    generate_group(&gens, base, cap)
}

/// Braid arrangement in `R^ℓ` with the adjacent transpositions as generators.
pub fn symmetric_group_model(ell: usize) -> Result<(Arrangement, ReflectionGroup)> {
    let a = crate::arrangement::braid_arrangement(ell, false);
    let pairs: Vec<(usize, usize)> = (0..ell).flat_map(|i| (i + 1..ell).map(move |j| (i, j))).collect();
    let gens = (0..ell - 1)
        .map(|k| {
            let j = pairs.iter().position(|&p| p == (k, k + 1)).expect("adjacent pair");
            reflection_of(&a, j)
        })
        .collect::<Result<Vec<_>>>()?;
    let base = SignVector::new(vec![Sign::Plus; pairs.len()]);
    let group = generate_group(&gens, base, DEFAULT_GROUP_CAP)?;
    Ok((a, group))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub order: usize,
    pub chambers: usize,
    pub orbit_size: usize,
    pub transitive: bool,
    pub free: bool,
    pub closed: bool,
}

impl TransitivityReport {
    pub fn passed(&self) -> bool {
        self.transitive && self.free && self.closed && self.order == self.chambers
    }
}

pub fn check_transitive_free(w: &ReflectionGroup, faces: &FacePoset) -> TransitivityReport {
    let chambers = faces.chamber_covectors();
    let orbit: BTreeSet<SignVector> = w.elements.iter().map(|g| g.action.act(&w.base_chamber)).collect();
    let closed = w
        .elements
        .iter()
        .all(|g| chambers.iter().all(|c| faces.is_chamber(&g.action.act(c))));
    let free = chambers.iter().all(|c| {
        w.elements.iter().filter(|g| g.action.act(c) == *c).count() == 1
    });
    TransitivityReport {
        order: w.order(),
        chambers: chambers.len(),
        orbit_size: orbit.len(),
        transitive: orbit.len() == chambers.len() && orbit.iter().all(|c| faces.is_chamber(c)),
        free,
        closed,
    }
}

/// A word `w` in the generators with `w·C₀ = C`, by breadth-first search over
/// chambers, moving from `w·C₀` to `w·s·C₀` (adjacent across `w·H_s`).
pub fn chamber_word(w: &ReflectionGroup, faces: &FacePoset, chamber: &SignVector) -> Result<Vec<usize>> {
    if !faces.is_chamber(chamber) {
        return Err(Error::NotAChamber(chamber.to_string()));
    }
    let n = w.hyperplane_count();
    let start = GroupElement::identity(n, None);
    let mut seen: HashSet<SignVector> = HashSet::from([w.base_chamber.clone()]);
    let mut queue = VecDeque::from([(w.base_chamber.clone(), start)]);
    while let Some((d, g)) = queue.pop_front() {
        if d == *chamber {
            return Ok(g.word);
        }
        for (i, s) in w.generators.iter().enumerate() {
            let action = g.action.compose(&s.action);
            let next = action.act(&w.base_chamber);
            if seen.insert(next.clone()) {
                let word = g.word.iter().copied().chain([i]).collect();
                queue.push_back((next, GroupElement { action, matrix: None, word }));
            }
        }
    }
    Err(Error::NotTransitive)
}

/// `s_{σ_w(j)} = w s_j w⁻¹` for the given `(element, hyperplane)` pairs.
/// Returns the first failing pair.
pub fn check_conjugation(
    a: &Arrangement,
    w: &ReflectionGroup,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<std::result::Result<(), (usize, usize)>> {
    let reflections = (0..a.len()).map(|j| reflection_of(a, j)).collect::<Result<Vec<_>>>()?;
    for (e, j) in pairs {
        let g = &w.elements[e];
        let image = g.action.perm()[j];
        let conj = g.action.compose(&reflections[j].action).compose(&g.action.inverse());
        if conj != reflections[image].action {
            return Ok(Err((e, j)));
        }
        if let (Some(m), Some(s), Some(t)) = (&g.matrix, &reflections[j].matrix, &reflections[image].matrix) {
            let lhs = mat_mul(&mat_mul(m, s), &inverse(m).expect("invertible"));
            if lhs != *t {
                return Ok(Err((e, j)));
            }
        }
    }
    Ok(Ok(()))
}

/// Conjugation check on `count` seeded random `(element, hyperplane)` pairs.
pub fn check_conjugation_sampled(
    a: &Arrangement,
    w: &ReflectionGroup,
    count: usize,
    seed: u64,
) -> Result<std::result::Result<(), (usize, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..count)
        .map(|_| (rng.gen_range(0..w.order()), rng.gen_range(0..a.len())))
        .collect();
    check_conjugation(a, w, pairs)
}

/// Every element's action restricted to the face poset is an order
/// automorphism.
pub fn acts_by_automorphisms(w: &ReflectionGroup, faces: &FacePoset) -> bool {
    let covectors: Vec<&SignVector> = faces.covectors().collect();
    w.elements.iter().all(|g| {
        let images: Vec<SignVector> = covectors.iter().map(|x| g.action.act(x)).collect();
        let distinct: HashSet<&SignVector> = images.iter().collect();
        images.iter().all(|y| faces.contains(y))
            && distinct.len() == images.len()
            && (0..covectors.len()).all(|i| {
                (0..covectors.len())
                    .all(|j| covectors[i].leq(covectors[j]) == images[i].leq(&images[j]))
            })
    })
}

/// Faces of the closed base chamber.
pub fn base_faces(w: &ReflectionGroup, faces: &FacePoset) -> Vec<SignVector> {
    faces.covectors().filter(|f| f.leq(&w.base_chamber)).cloned().collect()
}

/// Every face lies in the orbit of exactly one face of the closed base
/// chamber, and orbits keep codimension. Returns the first bad face.
pub fn check_unique_base_representative(w: &ReflectionGroup, faces: &FacePoset) -> std::result::Result<(), SignVector> {
    let base = base_faces(w, faces);
    for f in faces.faces() {
        let reps: BTreeSet<&SignVector> = base
            .iter()
            .filter(|f0| w.elements.iter().any(|g| g.action.act(f0) == f.covector))
            .collect();
        let codim_ok = reps
            .iter()
            .all(|f0| faces.get(f0).map(|x| x.codim) == Some(f.codim));
        if reps.len() != 1 || !codim_ok {
            return Err(f.covector.clone());
        }
    }
    Ok(())
}

/// For each face of the base chamber: its stabilizer equals the subgroup
/// generated by the generators whose walls contain it. Returns the first
/// face where they differ.
pub fn check_stabilizers(w: &ReflectionGroup, faces: &FacePoset) -> std::result::Result<(), SignVector> {
    for f0 in base_faces(w, faces) {
        let stabilizer: BTreeSet<&SignedPermutation> = w
            .elements
            .iter()
            .filter(|g| g.action.act(&f0) == f0)
            .map(|g| &g.action)
            .collect();
        let fixing: Vec<GroupElement> = w
            .generators
            .iter()
            .zip(&w.generator_walls)
            .filter(|(_, &h)| f0.get(h) == Sign::Zero)
            .map(|(g, _)| g.clone())
            .collect();
        let sub = generate_group(&fixing, w.base_chamber.clone(), w.order().max(1))
            .expect("subgroup of a finite group");
        let generated: BTreeSet<&SignedPermutation> = sub.elements.iter().map(|g| &g.action).collect();
        if stabilizer != generated {
            return Err(f0);
        }
    }
    Ok(())
}

/// `W`-invariant witnesses: `x(w F₀) = w · x(F₀)` for faces `F₀` of the
/// closed base chamber. Needs matrices.
pub fn equivariant_witnesses(w: &ReflectionGroup, faces: &FacePoset) -> Result<BTreeMap<SignVector, Point>> {
    let mut out: BTreeMap<SignVector, Point> = BTreeMap::new();
    for f0 in base_faces(w, faces) {
        let x0 = faces
            .get(&f0)
            .and_then(|f| f.witness.clone())
            .ok_or(Error::CombinatorialOnly)?;
        for g in &w.elements {
            let x = g.act_on_point(&x0).ok_or(Error::CombinatorialOnly)?;
            let face = g.action.act(&f0);
            if let Some(prev) = out.get(&face) {
                if *prev != x {
                    return Err(Error::Unsupported(format!(
                        "witness of {face} is not fixed by its stabilizer"
                    )));
                }
            } else {
                out.insert(face, x);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRecord {
    pub perm: Vec<usize>,
    pub flips: Vec<i8>,
    pub word: Vec<usize>,
}

/// Elements with 1-based permutations and words.
pub fn group_records(w: &ReflectionGroup) -> Vec<ElementRecord> {
    w.elements
        .iter()
        .map(|g| ElementRecord {
            perm: g.action.perm().iter().map(|p| p + 1).collect(),
            flips: g.action.flips().to_vec(),
            word: g.word.iter().map(|i| i + 1).collect(),
        })
        .collect()
}

/// Chamber covector → word for every chamber.
pub fn chamber_words(w: &ReflectionGroup, faces: &FacePoset) -> Result<HashMap<SignVector, Vec<usize>>> {
    faces
        .chamber_covectors()
        .into_iter()
        .map(|c| chamber_word(w, faces, &c).map(|word| (c, word)))
        .collect()
}
