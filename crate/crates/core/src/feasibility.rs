//! Exact linear feasibility by Fourier–Motzkin elimination.
//!
//! The systems solved here are homogeneous equalities together with
//! inequalities of the form `c · x ≥ 1`. Equalities are removed by
//! parametrizing their nullspace, then variables are eliminated one at a
//! time; a point is recovered by back-substitution through the stored
//! intermediate systems.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use crate::linalg::{dot, nullspace, Point, Rational};

/// Inequality `coeffs · t ≥ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Row {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl Row {
    /// Scale by a positive factor so the leading nonzero coefficient has
    /// magnitude one. Rows with no nonzero coefficient are left alone.
    fn normalized(mut self) -> Row {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// A point `x ∈ R^dim` with `e · x = 0` for every `e` in `equalities` and
/// `g · x ≥ 1` for every `g` in `at_least_one`, or `None` if there is none.
pub fn feasible_point(
    equalities: &[Vec<Rational>],
    at_least_one: &[Vec<Rational>],
    dim: usize,
) -> Option<Point> {
    let basis = nullspace(equalities, dim);
    let vars = basis.len();
    let rows: Vec<Row> = at_least_one
        .iter()
        .map(|g| Row {
            coeffs: basis.iter().map(|b| dot(g, b)).collect(),
            rhs: Rational::one(),
        })
        .collect();

    let t = solve(rows, vars)?;
    let mut x = vec![Rational::zero(); dim];
    for (tk, bk) in t.iter().zip(&basis) {
        for (xi, bi) in x.iter_mut().zip(bk) {
            *xi += tk * bi;
        }
    }
    Some(x)
}

fn solve(rows: Vec<Row>, vars: usize) -> Option<Vec<Rational>> {
    // systems[k] involves only variables 0..k
    let mut systems: Vec<Vec<Row>> = vec![Vec::new(); vars + 1];
    systems[vars] = dedup(rows)?;
    for k in (0..vars).rev() {
        let current = &systems[k + 1];
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in current {
            let c = &row.coeffs[k];
            if c.is_positive() {
                lower.push(row);
            } else if c.is_negative() {
                upper.push(row);
            } else {
                rest.push(Row {
                    coeffs: row.coeffs[..k].to_vec(),
                    rhs: row.rhs.clone(),
                });
            }
        }
        for lo in &lower {
            for hi in &upper {
                let a = &lo.coeffs[k];
                let b = -hi.coeffs[k].clone();
                let coeffs = (0..k)
                    .map(|i| &lo.coeffs[i] / a + &hi.coeffs[i] / &b)
                    .collect();
                rest.push(Row {
                    coeffs,
                    rhs: &lo.rhs / a + &hi.rhs / &b,
                });
            }
        }
        systems[k] = dedup(rest)?;
    }

    let mut t: Vec<Rational> = Vec::with_capacity(vars);
    for k in 0..vars {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for row in &systems[k + 1] {
            let c = &row.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let partial: Rational = row.coeffs[..k].iter().zip(&t).map(|(a, b)| a * b).sum();
            let bound = (&row.rhs - partial) / c;
            if c.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        t.push(pick(lo, hi));
    }
    Some(t)
}

/// Drop duplicate and vacuous rows; `None` when a row reads `0 ≥ r` with
/// `r > 0`.
fn dedup(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for row in rows {
        let row = row.normalized();
        if row.coeffs.iter().all(|c| c.is_zero()) {
            if row.rhs.is_positive() {
                return None;
            }
            continue;
        }
        if seen.insert(row.clone()) {
            out.push(row);
        }
    }
    Some(out)
}

/// A simple value in `[lo, hi]`: an integer near the middle when one fits.
fn pick(lo: Option<Rational>, hi: Option<Rational>) -> Rational {
    match (lo, hi) {
        (None, None) => Rational::zero(),
        (Some(l), None) => l.ceil(),
        (None, Some(h)) => h.floor(),
        (Some(l), Some(h)) => {
            let mid = (&l + &h) / Rational::from_integer(2.into());
            let rounded = mid.round();
            if rounded >= l && rounded <= h {
                rounded
            } else {
                mid
            }
        }
    }
}
