//! The Salvetti poset of an arrangement, its complex-covector encoding and
//! the cell complex it describes.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arrangement::{Arrangement, FacePoset};
use crate::complex::{cell_complex_from_poset, order_complex, RegularCellComplexModel, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Point, Rational};
use crate::poset::Poset;
use crate::sign::{ComplexSign, ComplexSignVector, Sign, SignVector};

/// A pair `(F, C)` with `F ≤ C`; its cell has dimension `codim(F)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SalCell {
    pub face: SignVector,
    pub chamber: SignVector,
    pub dim: usize,
}

impl SalCell {
    pub fn is_vertex(&self) -> bool {
        self.face == self.chamber
    }
}

/// `(F′,C′) ≤ (F,C)` iff `F ≤ F′` and `F′ ∘ C = C′`.
pub fn sal_leq(lower: &SalCell, upper: &SalCell) -> bool {
    upper.face.leq(&lower.face) && lower.face.compose(&upper.chamber) == lower.chamber
}

#[derive(Clone, Debug)]
pub struct SalPoset {
    cells: Vec<SalCell>,
    index: HashMap<(SignVector, SignVector), usize>,
    poset: Poset,
    essential: bool,
}

impl SalPoset {
    /// Cells sorted by `(face, chamber)`.
    pub fn cells(&self) -> &[SalCell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn is_essential(&self) -> bool {
        self.essential
    }

    pub fn position(&self, face: &SignVector, chamber: &SignVector) -> Option<usize> {
        self.index.get(&(face.clone(), chamber.clone())).copied()
    }

    pub fn contains(&self, cell: &SalCell) -> bool {
        self.position(&cell.face, &cell.chamber).is_some()
    }

    /// Cell counts by dimension.
    pub fn dim_histogram(&self) -> Vec<usize> {
        let top = self.cells.iter().map(|c| c.dim).max().map_or(0, |d| d + 1);
        let mut h = vec![0; top];
        for c in &self.cells {
            h[c.dim] += 1;
        }
        h
    }

    pub fn complex_covectors(&self) -> Vec<ComplexSignVector> {
        self.cells.iter().map(to_complex_covector).collect()
    }
}

/// All pairs `(F, C)` with `F` a face, `C` a chamber and `F ≤ C`.
pub fn build_salvetti(a: &Arrangement, faces: &FacePoset) -> SalPoset {
    let chambers = faces.chamber_covectors();
    let mut cells: Vec<SalCell> = faces
        .faces()
        .par_iter()
        .flat_map_iter(|f| {
            chambers
                .iter()
                .filter(|c| f.covector.leq(c))
                .map(|c| SalCell {
                    face: f.covector.clone(),
                    chamber: c.clone(),
                    dim: f.codim,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    cells.sort();
    let index = cells
        .iter()
        .enumerate()
        .map(|(i, c)| ((c.face.clone(), c.chamber.clone()), i))
        .collect();
    let poset = Poset::from_relation(cells.len(), |i, j| sal_leq(&cells[i], &cells[j]))
        .expect("the Salvetti relation is a partial order");
    SalPoset {
        cells,
        index,
        poset,
        essential: a.is_essential(),
    }
}

/// `Σ_F #{chambers C ≥ F}`.
pub fn expected_cell_count(faces: &FacePoset) -> usize {
    faces.faces().iter().map(|f| faces.chambers_above(&f.covector).len()).sum()
}

/// `f(F, C)`: `F_j` where nonzero, else `i` or `−i` by the sign of `C_j`.
pub fn to_complex_covector(cell: &SalCell) -> ComplexSignVector {
    ComplexSignVector::new(
        cell.face
            .iter()
            .zip(cell.chamber.iter())
            .map(|(f, c)| match (f, c) {
                (Sign::Plus, _) => ComplexSign::Plus,
                (Sign::Minus, _) => ComplexSign::Minus,
                (Sign::Zero, Sign::Plus) => ComplexSign::Im,
                (Sign::Zero, Sign::Minus) => ComplexSign::NegIm,
                (Sign::Zero, Sign::Zero) => panic!("chamber has a zero entry"),
            })
            .collect(),
    )
}

/// Inverse of `to_complex_covector`; `None` when `x` has a zero entry or the
/// decoded pair is not a Salvetti cell.
pub fn from_complex_covector(faces: &FacePoset, x: &ComplexSignVector) -> Option<SalCell> {
    let mut face = Vec::with_capacity(x.len());
    let mut chamber = Vec::with_capacity(x.len());
    for &e in x.entries() {
        let (f, c) = match e {
            ComplexSign::Plus => (Sign::Plus, Sign::Plus),
            ComplexSign::Minus => (Sign::Minus, Sign::Minus),
            ComplexSign::Im => (Sign::Zero, Sign::Plus),
            ComplexSign::NegIm => (Sign::Zero, Sign::Minus),
            ComplexSign::Zero => return None,
        };
        face.push(f);
        chamber.push(c);
    }
    let face = SignVector::new(face);
    let chamber = SignVector::new(chamber);
    let dim = faces.get(&face)?.codim;
    faces.is_chamber(&chamber).then_some(SalCell { face, chamber, dim })
}

/// Complex covector of `z = x + iy`: the sign of `α_j(x)`, or of `α_j(y)`
/// as an imaginary unit when `α_j(x) = 0`.
pub fn complex_covector_of_point(a: &Arrangement, x: &[Rational], y: &[Rational]) -> Result<ComplexSignVector> {
    let re = a.covector_of_point(x)?;
    let im = a.covector_of_point(y)?;
    Ok(ComplexSignVector::new(
        re.iter().zip(im.iter()).map(|(r, i)| ComplexSign::from_parts(r, i)).collect(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexIsoReport {
    pub cells: usize,
    pub image: usize,
    pub injective: bool,
    pub nowhere_zero: bool,
    pub round_trip: bool,
    /// Every nowhere-zero complex sign vector that decodes to a Salvetti cell
    /// is in the image (checked exhaustively up to eight hyperplanes).
    pub surjective: Option<bool>,
    pub order_isomorphism: bool,
    /// `z(F,C)` has complex covector `f(F,C)` (rational arrangements only).
    pub realized: Option<bool>,
}

impl ComplexIsoReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.nowhere_zero
            && self.round_trip
            && self.order_isomorphism
            && self.surjective != Some(false)
            && self.realized != Some(false)
    }
}

pub fn check_sal_complex_order_iso(a: &Arrangement, faces: &FacePoset, sal: &SalPoset) -> ComplexIsoReport {
    let images = sal.complex_covectors();
    let distinct: std::collections::HashSet<&ComplexSignVector> = images.iter().collect();
    let round_trip = sal
        .cells()
        .iter()
        .zip(&images)
        .all(|(c, x)| from_complex_covector(faces, x).as_ref() == Some(c));
    let n = sal.len();
    let order_isomorphism = (0..n).into_par_iter().all(|i| {
        (0..n).all(|j| sal.poset().leq(i, j) == images[i].leq(&images[j]))
    });
    let len = faces.hyperplane_count();
    let surjective = (len <= 8).then(|| {
        let total = 4usize.pow(len as u32);
        (0..total).into_par_iter().all(|code| {
            let x = decode_nowhere_zero(code, len);
            match from_complex_covector(faces, &x) {
                Some(cell) => sal.contains(&cell) && distinct.contains(&x),
                None => !distinct.contains(&x),
            }
        })
    });
    let realized = a.is_rational().then(|| {
        let w = faces.witnesses();
        sal.cells().iter().zip(&images).all(|(c, x)| {
            complex_covector_of_point(a, &w[&c.face], &w[&c.chamber]).ok().as_ref() == Some(x)
        })
    });
    ComplexIsoReport {
        cells: n,
        image: distinct.len(),
        injective: distinct.len() == n,
        nowhere_zero: images.iter().all(|x| x.is_nowhere_zero()),
        round_trip,
        surjective,
        order_isomorphism,
        realized,
    }
}

fn decode_nowhere_zero(mut code: usize, n: usize) -> ComplexSignVector {
    const UNITS: [ComplexSign; 4] = [ComplexSign::Plus, ComplexSign::Minus, ComplexSign::Im, ComplexSign::NegIm];
    let mut entries = Vec::with_capacity(n);
    for _ in 0..n {
        entries.push(UNITS[code % 4]);
        code /= 4;
    }
    ComplexSignVector::new(entries)
}

/// Strict Salvetti order forces a strictly smaller face on the upper cell:
/// `(F′,C′) < (F,C)` implies `F < F′`. Returns the first offending pair.
pub fn check_face_monotone(sal: &SalPoset) -> std::result::Result<(), (usize, usize)> {
    let cells = sal.cells();
    for i in 0..cells.len() {
        for j in 0..cells.len() {
            if sal.poset().lt(i, j) {
                let (lo, hi) = (&cells[i].face, &cells[j].face);
                if !(hi.leq(lo) && hi != lo) {
                    return Err((i, j));
                }
            }
        }
    }
    Ok(())
}

/// For every chain `(F₀,C₀) ≤ ⋯ ≤ (F_n,C_n)`, `C_n` agrees with `C_i` on
/// the zero set of `F_i`.
pub fn check_chain_restriction(sal: &SalPoset) -> std::result::Result<(), Vec<usize>> {
    let cells = sal.cells();
    for chain in sal.poset().chains() {
        let top = &cells[*chain.last().expect("nonempty")].chamber;
        for &i in &chain {
            let c = &cells[i];
            if c.face.zero_set().into_iter().any(|j| c.chamber.get(j) != top.get(j)) {
                return Err(chain);
            }
        }
    }
    Ok(())
}

/// Barycentric subdivision: chains of the Salvetti order.
pub fn sal_order_complex(sal: &SalPoset) -> SimplicialComplex {
    order_complex(sal.poset())
}

/// The regular cell complex with one cell of dimension `codim(F)` per pair.
/// Its face poset is the Salvetti order itself: `(C,C)` are the vertices and
/// `({0},C)` the top cells.
pub fn sal_cell_complex(sal: &SalPoset) -> Result<RegularCellComplexModel> {
    if !sal.is_essential() {
        return Err(Error::NotEssential);
    }
    cell_complex_from_poset(sal.poset().clone(), sal.cells().iter().map(|c| c.dim).collect())
}

/// `z(F,C) = x(F) + i·x(C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddedVertex {
    #[serde(serialize_with = "serialize_point")]
    pub re: Point,
    #[serde(serialize_with = "serialize_point")]
    pub im: Point,
}

pub(crate) fn serialize_point<S: Serializer>(p: &Point, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(format_rational))
}

pub(crate) fn serialize_point_list<S: Serializer>(
    points: &Option<Vec<Point>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match points {
        Some(ps) => s.collect_seq(ps.iter().map(|p| p.iter().map(format_rational).collect::<Vec<_>>())),
        None => s.serialize_none(),
    }
}

/// Embedded vertices from the stored face witnesses.
pub fn embed_vertices(a: &Arrangement, faces: &FacePoset, sal: &SalPoset) -> Result<BTreeMap<SalCell, EmbeddedVertex>> {
    embed_vertices_with(a, &faces.witnesses(), sal)
}

/// Embedded vertices from the given witnesses. Each `z(F,C)` is checked to
/// avoid every complexified hyperplane.
pub fn embed_vertices_with(
    a: &Arrangement,
    witnesses: &BTreeMap<SignVector, Point>,
    sal: &SalPoset,
) -> Result<BTreeMap<SalCell, EmbeddedVertex>> {
    if !a.is_rational() {
        return Err(Error::CombinatorialOnly);
    }
    let mut out = BTreeMap::new();
    for cell in sal.cells() {
        let re = witnesses.get(&cell.face).ok_or(Error::CombinatorialOnly)?.clone();
        let im = witnesses.get(&cell.chamber).ok_or(Error::CombinatorialOnly)?.clone();
        let z = complex_covector_of_point(a, &re, &im)?;
        if !z.is_nowhere_zero() || z != to_complex_covector(cell) {
            return Err(Error::Unsupported(format!(
                "z({}, {}) does not avoid the complexified hyperplanes",
                cell.face, cell.chamber
            )));
        }
        out.insert(cell.clone(), EmbeddedVertex { re, im });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SalExport {
    pub cells: Vec<SalCell>,
    /// Covering pairs `[lower, upper]`, 0-based positions in `cells`.
    pub covers: Vec<(usize, usize)>,
    pub dims: Vec<usize>,
}

pub fn export_sal(sal: &SalPoset) -> SalExport {
    SalExport {
        cells: sal.cells().to_vec(),
        covers: sal.poset().covers().to_vec(),
        dims: sal.dim_histogram(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CovectorRow {
    pub face: SignVector,
    pub chamber: SignVector,
    pub complex: ComplexSignVector,
}

/// The two-column correspondence `(F, C) ↔ f(F, C)`.
pub fn complex_covector_table(sal: &SalPoset) -> Vec<CovectorRow> {
    sal.cells()
        .iter()
        .map(|c| CovectorRow {
            face: c.face.clone(),
            chamber: c.chamber.clone(),
            complex: to_complex_covector(c),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{braid_arrangement, coordinate_lines, single_hyperplane, DEFAULT_CAP};
    use crate::complex::CellCounts;
    use crate::linalg::point;
    use crate::sign::sv;

    fn cell(f: &str, c: &str) -> SalCell {
        SalCell {
            face: sv(f),
            chamber: sv(c),
            dim: sv(f).zero_set().len(),
        }
    }

    fn cx(s: &str) -> ComplexSignVector {
        s.parse().unwrap()
    }

    fn sal_of(a: &Arrangement) -> (FacePoset, SalPoset) {
        let faces = a.enumerate_faces(DEFAULT_CAP).unwrap();
        let sal = build_salvetti(a, &faces);
        (faces, sal)
    }

    #[test]
    fn order_examples() {
        assert!(sal_leq(&cell("++", "++"), &cell("00", "++")));
        assert!(sal_leq(&cell("0+", "++"), &cell("0+", "++")));
        assert!(!sal_leq(&cell("0+", "++"), &cell("00", "-+")));
        assert!(sal_leq(&cell("0+", "-+"), &cell("00", "-+")));
    }

    #[test]
    fn counts() {
        let (faces, sal) = sal_of(&single_hyperplane());
        assert_eq!(sal.len(), 4);
        assert_eq!(sal.len(), expected_cell_count(&faces));
        let (faces, sal) = sal_of(&coordinate_lines());
        assert_eq!(sal.len(), 16);
        assert_eq!(sal.dim_histogram(), vec![4, 8, 4]);
        assert_eq!(sal.len(), expected_cell_count(&faces));
        let (_, sal) = sal_of(&braid_arrangement(3, true));
        assert_eq!(sal.dim_histogram(), vec![6, 12, 6]);
    }

    #[test]
    fn complex_covector_codec() {
        let (faces, _) = sal_of(&coordinate_lines());
        assert_eq!(to_complex_covector(&cell("0+", "++")), cx("i+"));
        assert_eq!(to_complex_covector(&cell("00", "+-")), cx("ij"));
        assert_eq!(to_complex_covector(&cell("+-", "+-")), cx("+-"));
        assert_eq!(from_complex_covector(&faces, &cx("i+")), Some(cell("0+", "++")));
        assert_eq!(from_complex_covector(&faces, &cx("--")), Some(cell("--", "--")));
        assert_eq!(from_complex_covector(&faces, &cx("0+")), None);
        // +-+ is not a chamber of A₂, so (000, +-+) is not a cell
        let (braid, _) = sal_of(&braid_arrangement(3, false));
        assert_eq!(from_complex_covector(&braid, &cx("iji")), None);
        assert!(from_complex_covector(&braid, &cx("iii")).is_some());
    }

    #[test]
    fn complex_covector_of_points() {
        let a = coordinate_lines();
        assert_eq!(complex_covector_of_point(&a, &point(&[0, 1]), &point(&[1, 1])).unwrap(), cx("i+"));
        assert_eq!(complex_covector_of_point(&a, &point(&[0, 0]), &point(&[0, 0])).unwrap(), cx("00"));
        assert!(complex_covector_of_point(&a, &point(&[0, 0]), &point(&[1, -1])).unwrap().is_nowhere_zero());
    }

    #[test]
    fn order_isomorphism_reports() {
        for a in [single_hyperplane(), coordinate_lines(), braid_arrangement(3, true)] {
            let (faces, sal) = sal_of(&a);
            let report = check_sal_complex_order_iso(&a, &faces, &sal);
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.image, sal.len());
        }
    }

    #[test]
    fn chains_are_face_monotone_and_restrict() {
        for a in [coordinate_lines(), braid_arrangement(3, true)] {
            let (_, sal) = sal_of(&a);
            assert!(check_face_monotone(&sal).is_ok());
            assert!(check_chain_restriction(&sal).is_ok());
        }
    }

    #[test]
    fn cell_complex_counts() {
        let (_, sal) = sal_of(&single_hyperplane());
        assert_eq!(sal_cell_complex(&sal).unwrap().cell_counts(), vec![2, 2]);
        let (_, sal) = sal_of(&coordinate_lines());
        let model = sal_cell_complex(&sal).unwrap();
        assert_eq!(model.cell_counts(), vec![4, 8, 4]);
        assert_eq!(model.euler_characteristic(), 0);
        assert!(model.check_boundary_spheres().is_ok());
        let (_, sal) = sal_of(&braid_arrangement(3, false));
        assert!(matches!(sal_cell_complex(&sal), Err(Error::NotEssential)));
    }

    #[test]
    fn order_complex_homology() {
        let (_, sal) = sal_of(&single_hyperplane());
        let k = sal_order_complex(&sal);
        assert_eq!(k.cell_counts(), vec![4, 4]);
        assert_eq!(k.homology().unwrap().betti_numbers(), vec![1, 1]);
        let (_, sal) = sal_of(&coordinate_lines());
        let h = sal_order_complex(&sal).homology().unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 2, 1]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn embedded_vertices_avoid_hyperplanes() {
        let a = coordinate_lines();
        let (faces, sal) = sal_of(&a);
        let z = embed_vertices(&a, &faces, &sal).unwrap();
        let v = &z[&cell("00", "++")];
        assert_eq!(v.re, point(&[0, 0]));
        assert_eq!(a.covector_of_point(&v.im).unwrap(), sv("++"));
        let a = braid_arrangement(3, true);
        let (faces, sal) = sal_of(&a);
        assert_eq!(embed_vertices(&a, &faces, &sal).unwrap().len(), 24);
        let d = crate::arrangement::dihedral_arrangement(5);
        let (faces, sal) = sal_of(&d);
        assert!(matches!(embed_vertices(&d, &faces, &sal), Err(Error::CombinatorialOnly)));
    }
}
