//! Finite posets on `0..n` with a dense order relation and cached covers.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitRows {
            words,
            bits: vec![0; words * n],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn transpose(&self, n: usize) -> BitRows {
        let mut t = BitRows::new(n);
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) {
                    t.set(j, i);
                }
            }
        }
        t
    }
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// A partial order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: BitRows,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Build from an order predicate. Reflexivity, antisymmetry and
    /// transitivity are verified.
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut rows = BitRows::new(n);
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    rows.set(i, j);
                }
            }
        }
        for i in 0..n {
            if !rows.get(i, i) {
                return Err(Error::NotAPoset(format!("{i} is not below itself")));
            }
            for j in i + 1..n {
                if rows.get(i, j) && rows.get(j, i) {
                    return Err(Error::NotAPoset(format!("{i} and {j} violate antisymmetry")));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j || !rows.get(i, j) || subset(rows.row(j), rows.row(i)) {
                    continue;
                }
                let k = (0..n).find(|&k| rows.get(j, k) && !rows.get(i, k)).expect("witness");
                return Err(Error::NotAPoset(format!(
                    "{i} <= {j} <= {k} but not {i} <= {k}"
                )));
            }
        }
        let mut poset = Poset {
            n,
            leq: rows,
            covers: Vec::new(),
        };
        poset.covers = poset.compute_covers();
        Ok(poset)
    }

    /// Reflexive-transitive closure of the given strict relations.
    pub fn from_covers(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relations {
            reach[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    let through = reach[k].clone();
                    for (target, via) in reach[i].iter_mut().zip(through) {
                        *target |= via;
                    }
                }
            }
        }
        Poset::from_relation(n, |i, j| reach[i][j])
    }

    fn compute_covers(&self) -> Vec<(usize, usize)> {
        // j covers i iff the only elements in [i, j] are i and j
        let below = self.leq.transpose(self.n);
        let mut covers = Vec::new();
        for i in 0..self.n {
            let up = self.leq.row(i);
            for j in 0..self.n {
                if !self.lt(i, j) {
                    continue;
                }
                let between: u32 = up
                    .iter()
                    .zip(below.row(j))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                if between == 2 {
                    covers.push((i, j));
                }
            }
        }
        covers
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Covering pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn strictly_below(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&k| self.lt(k, i)).collect()
    }

    pub fn strictly_above(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&k| self.lt(i, k)).collect()
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> Poset {
        Poset::from_relation(self.n, |i, j| self.leq(j, i)).expect("dual of a poset")
    }

    /// Induced order on a subset; element `k` of the result is `elements[k]`.
    pub fn subposet(&self, elements: &[usize]) -> Poset {
        Poset::from_relation(elements.len(), |i, j| self.leq(elements[i], elements[j]))
            .expect("induced order")
    }

    /// Longest chain measured in edges (0 for an antichain, 0 when empty).
    pub fn height(&self) -> usize {
        let order = self.linear_extension();
        let mut up = vec![0usize; self.n];
        for &i in order.iter().rev() {
            up[i] = self
                .strictly_above(i)
                .into_iter()
                .map(|k| up[k] + 1)
                .max()
                .unwrap_or(0);
        }
        up.into_iter().max().unwrap_or(0)
    }

    /// Elements sorted so that `i < j` in the order implies `i` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| self.strictly_below(i).len());
        order
    }

    /// All nonempty chains, each listed bottom to top.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let above: Vec<Vec<usize>> = (0..self.n).map(|i| self.strictly_above(i)).collect();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..self.n).map(|i| vec![i]).collect();
        while let Some(chain) = stack.pop() {
            let top = *chain.last().expect("nonempty chain");
            for &k in &above[top] {
                let mut next = chain.clone();
                next.push(k);
                stack.push(next);
            }
            out.push(chain);
        }
        out
    }

    /// Search for an order isomorphism onto `other`; returns the image of
    /// each element.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        if self.n != other.n || self.covers.len() != other.covers.len() {
            return None;
        }
        let signature = |p: &Poset, i: usize| {
            (
                p.strictly_below(i).len(),
                p.strictly_above(i).len(),
                p.covers.iter().filter(|c| c.1 == i).count(),
                p.covers.iter().filter(|c| c.0 == i).count(),
            )
        };
        let mine: Vec<_> = (0..self.n).map(|i| signature(self, i)).collect();
        let theirs: Vec<_> = (0..other.n).map(|i| signature(other, i)).collect();
        let mut a: Vec<_> = mine.clone();
        let mut b: Vec<_> = theirs.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
        let mut image = vec![usize::MAX; self.n];
        let mut used = BTreeSet::new();
        let order = self.linear_extension();
        if self.extend_isomorphism(other, &order, 0, &mine, &theirs, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_isomorphism(
        &self,
        other: &Poset,
        order: &[usize],
        depth: usize,
        mine: &[(usize, usize, usize, usize)],
        theirs: &[(usize, usize, usize, usize)],
        image: &mut Vec<usize>,
        used: &mut BTreeSet<usize>,
    ) -> bool {
        let Some(&i) = order.get(depth) else {
            return true;
        };
        for j in 0..other.n {
            if used.contains(&j) || mine[i] != theirs[j] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&k| {
                self.leq(k, i) == other.leq(image[k], j) && self.leq(i, k) == other.leq(j, image[k])
            });
            if !consistent {
                continue;
            }
            image[i] = j;
            used.insert(j);
            if self.extend_isomorphism(other, order, depth + 1, mine, theirs, image, used) {
                return true;
            }
            used.remove(&j);
            image[i] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Poset {
        Poset::from_relation(3, |i, j| i <= j).unwrap()
    }

    #[test]
    fn rejects_non_orders() {
        assert!(Poset::from_relation(2, |_, _| true).is_err());
        assert!(Poset::from_relation(2, |i, j| i != j).is_err());
        // 0 <= 1, 1 <= 2, but not 0 <= 2
        assert!(Poset::from_relation(3, |i, j| i == j || (i, j) == (0, 1) || (i, j) == (1, 2)).is_err());
    }

    #[test]
    fn covers_and_height() {
        let p = chain3();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(p.height(), 2);
        let antichain = Poset::from_relation(3, |i, j| i == j).unwrap();
        assert_eq!(antichain.height(), 0);
        assert!(antichain.covers().is_empty());
    }

    #[test]
    fn chains_of_total_order() {
        let mut chains = chain3().chains();
        chains.sort();
        assert_eq!(chains.len(), 7);
    }

    #[test]
    fn from_covers_closes_transitively() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p, chain3());
    }

    #[test]
    fn isomorphism_search() {
        // V shape vs. its relabelling, and vs. its dual
        let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let w = Poset::from_covers(3, &[(2, 0), (2, 1)]).unwrap();
        let image = v.isomorphism(&w).unwrap();
        assert_eq!(image[0], 2);
        assert!(v.isomorphism(&v.dual()).is_none());
    }
}
