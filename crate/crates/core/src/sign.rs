//! Sign-vector algebra over `{+, -, 0}` and its complexified variant over
//! `{0, +, -, i, -i}`.
//!
//! Indices in reports are 1-based. Sign vectors serialize as strings over
//! `+-0` (and `+-0ij` for complex sign vectors, with `j` standing for `-i`).

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A single sign. The variant order matches the byte order of the
/// characters `+`, `-`, `0`, so sorting vectors sorts their strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub const ALL: [Sign; 3] = [Sign::Plus, Sign::Minus, Sign::Zero];

    pub fn of<T: num_traits::Signed>(value: &T) -> Sign {
        if value.is_positive() {
            Sign::Plus
        } else if value.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// Multiply by a nonzero orientation `±1`.
    pub fn times(self, flip: i8) -> Sign {
        if flip < 0 {
            -self
        } else {
            self
        }
    }

    /// `0 < +`, `0 < -`, with `+` and `-` incomparable.
    pub fn leq(self, other: Sign) -> bool {
        self == Sign::Zero || self == other
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

/// A covector: one sign per hyperplane, in arrangement order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(entries: Vec<Sign>) -> Self {
        SignVector(entries)
    }

    pub fn zero(len: usize) -> Self {
        SignVector(vec![Sign::Zero; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, index: usize) -> Sign {
        self.0[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        self.0.iter().copied()
    }

    /// True when no entry is zero (a tope).
    pub fn is_tope(&self) -> bool {
        self.0.iter().all(|s| !s.is_zero())
    }

    /// 0-based indices of the zero entries.
    pub fn zero_set(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn opposite(&self) -> SignVector {
        SignVector(self.0.iter().map(|&s| -s).collect())
    }

    /// `(X ∘ Y)_i = X_i` if `X_i ≠ 0`, else `Y_i`.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&x, &y)| if x.is_zero() { y } else { x })
                .collect(),
        )
    }

    /// 0-based indices where the two vectors carry opposite nonzero signs.
    pub fn separation(&self, other: &SignVector) -> BTreeSet<usize> {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .filter(|(_, (&x, &y))| !x.is_zero() && x == -y)
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise `X_i = 0 or X_i = Y_i`.
    pub fn leq(&self, other: &SignVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(&x, &y)| x.leq(y))
    }

    /// Restriction to the given 0-based coordinates, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> SignVector {
        SignVector(indices.iter().map(|&i| self.0[i]).collect())
    }

    pub fn with_entry(&self, index: usize, sign: Sign) -> SignVector {
        let mut entries = self.0.clone();
        entries[index] = sign;
        SignVector(entries)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.to_char()))
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| {
                Sign::from_char(c)
                    .ok_or_else(|| Error::Parse(format!("invalid sign {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignVector)
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and fixtures: panics on a malformed string.
pub fn sv(s: &str) -> SignVector {
    s.parse().expect("valid sign vector literal")
}

pub fn opposite(x: &SignVector) -> SignVector {
    x.opposite()
}

pub fn compose(x: &SignVector, y: &SignVector) -> SignVector {
    x.compose(y)
}

/// Separation set, 1-based as in reports.
pub fn separation(x: &SignVector, y: &SignVector) -> BTreeSet<usize> {
    x.separation(y).into_iter().map(|i| i + 1).collect()
}

pub fn sign_leq(x: &SignVector, y: &SignVector) -> bool {
    x.leq(y)
}

/// One of the four covector axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    L0,
    L1,
    L2,
    L3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::L0 => "L0 (zero vector)",
            Axiom::L1 => "L1 (closed under opposite)",
            Axiom::L2 => "L2 (closed under composition)",
            Axiom::L3 => "L3 (elimination)",
        };
        f.write_str(name)
    }
}

/// Witness for a failed axiom. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomViolation {
    MissingZero,
    MissingOpposite { x: SignVector },
    MissingComposition { x: SignVector, y: SignVector },
    NoEliminant { x: SignVector, y: SignVector, index: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::MissingZero => write!(f, "zero vector missing"),
            AxiomViolation::MissingOpposite { x } => write!(f, "opposite of {x} missing"),
            AxiomViolation::MissingComposition { x, y } => {
                write!(f, "composition {x} o {y} missing")
            }
            AxiomViolation::NoEliminant { x, y, index } => {
                write!(f, "no eliminant of {x}, {y} at index {index}")
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub results: Vec<(Axiom, Option<AxiomViolation>)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, v)| v.is_none())
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&AxiomViolation> {
        self.results
            .iter()
            .find(|(a, _)| *a == axiom)
            .and_then(|(_, v)| v.as_ref())
    }
}

/// Check L0–L3 on an arbitrary finite set of equal-length sign vectors.
///
/// The elimination test is a plain scan: for every pair and every
/// separating index it searches the whole set for an eliminant.
pub fn check_covector_axioms<'a, I>(vectors: I) -> AxiomReport
where
    I: IntoIterator<Item = &'a SignVector>,
{
    let list: Vec<&SignVector> = {
        let mut seen = HashSet::new();
        vectors.into_iter().filter(|v| seen.insert(*v)).collect()
    };
    let set: HashSet<&SignVector> = list.iter().copied().collect();
    let len = list.first().map_or(0, |v| v.len());
    assert!(
        list.iter().all(|v| v.len() == len),
        "covector set mixes lengths"
    );

    let l0 = (!set.contains(&SignVector::zero(len))).then_some(AxiomViolation::MissingZero);

    let l1 = list.iter().find_map(|x| {
        (!set.contains(&x.opposite())).then(|| AxiomViolation::MissingOpposite { x: (*x).clone() })
    });

    let l2 = list.iter().find_map(|x| {
        list.iter().find_map(|y| {
            (!set.contains(&x.compose(y))).then(|| AxiomViolation::MissingComposition {
                x: (*x).clone(),
                y: (*y).clone(),
            })
        })
    });

    let l3 = list.iter().find_map(|x| {
        list.iter().find_map(|y| {
            let sep = x.separation(y);
            if sep.is_empty() {
                return None;
            }
            let xy = x.compose(y);
            sep.iter().find_map(|&e| {
                let found = list.iter().any(|z| {
                    z.get(e).is_zero()
                        && (0..len).all(|f| sep.contains(&f) || z.get(f) == xy.get(f))
                });
                (!found).then(|| AxiomViolation::NoEliminant {
                    x: (*x).clone(),
                    y: (*y).clone(),
                    index: e + 1,
                })
            })
        })
    });

    AxiomReport {
        results: vec![
            (Axiom::L0, l0),
            (Axiom::L1, l1),
            (Axiom::L2, l2),
            (Axiom::L3, l3),
        ],
    }
}

/// Entry of a complex covector: `0, +, -, i, -i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComplexSign {
    Plus,
    Minus,
    Zero,
    Im,
    NegIm,
}

impl ComplexSign {
    /// The five-element order: `0 < ±`, and each of `+`, `-` lies below
    /// both `i` and `-i`.
    pub fn leq(self, other: ComplexSign) -> bool {
        use ComplexSign::*;
        self == other
            || matches!(
                (self, other),
                (Zero, _) | (Plus, Im) | (Plus, NegIm) | (Minus, Im) | (Minus, NegIm)
            )
    }

    pub fn to_char(self) -> char {
        match self {
            ComplexSign::Plus => '+',
            ComplexSign::Minus => '-',
            ComplexSign::Zero => '0',
            ComplexSign::Im => 'i',
            ComplexSign::NegIm => 'j',
        }
    }

    pub fn from_char(c: char) -> Option<ComplexSign> {
        match c {
            '+' => Some(ComplexSign::Plus),
            '-' => Some(ComplexSign::Minus),
            '0' => Some(ComplexSign::Zero),
            'i' => Some(ComplexSign::Im),
            'j' => Some(ComplexSign::NegIm),
            _ => None,
        }
    }

    /// Label of `re + i·im` from the signs of its parts.
    pub fn from_parts(re: Sign, im: Sign) -> ComplexSign {
        match (re, im) {
            (Sign::Plus, _) => ComplexSign::Plus,
            (Sign::Minus, _) => ComplexSign::Minus,
            (Sign::Zero, Sign::Plus) => ComplexSign::Im,
            (Sign::Zero, Sign::Minus) => ComplexSign::NegIm,
            (Sign::Zero, Sign::Zero) => ComplexSign::Zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComplexSignVector(Vec<ComplexSign>);

impl ComplexSignVector {
    pub fn new(entries: Vec<ComplexSign>) -> Self {
        ComplexSignVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[ComplexSign] {
        &self.0
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.0.iter().all(|&s| s != ComplexSign::Zero)
    }

    pub fn leq(&self, other: &ComplexSignVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(&x, &y)| x.leq(y))
    }
}

impl fmt::Display for ComplexSignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.to_char()))
    }
}

impl FromStr for ComplexSignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| {
                ComplexSign::from_char(c)
                    .ok_or_else(|| Error::Parse(format!("invalid complex sign {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ComplexSignVector)
    }
}

impl Serialize for ComplexSignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn complex_sign_leq(x: &ComplexSignVector, y: &ComplexSignVector) -> bool {
    x.leq(y)
}
