//! The Weyl group `W(A)` acting on the simple-root lattice.
//!
//! Elements are integer matrices whose column `j` is the image of `alpha_j`
//! in simple-root coordinates. `i` is a right descent of `w` iff `w(alpha_i)`
//! is a negative root, which makes lengths and reduced words computable by
//! exact integer arithmetic alone.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcm::GeneralizedCartanMatrix;

type Columns = Vec<Vec<BigInt>>;

/// Reduction steps allowed before a matrix is declared outside the group.
pub const DEFAULT_STRIP_BOUND: usize = 100_000;

#[derive(Clone, Debug)]
pub struct WeylElement {
    columns: Columns,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Lexicographically least reduced word, 0-based generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn columns(&self) -> &[Vec<BigInt>] {
        &self.columns
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn to_dto(&self) -> WordDto {
        WordDto { word: self.word.iter().map(|i| i + 1).collect() }
    }
}

// The canonical word is a normal form, so it determines the matrix.
impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}
impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}
impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for WeylElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let s: Vec<String> = self.word.iter().map(|i| format!("r{}", i + 1)).collect();
        write!(f, "{}", s.join(""))
    }
}

/// Interchange form of a group element: 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordDto {
    pub word: Vec<usize>,
}

/// Handle bundling the Cartan matrix with the group operations.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    gcm: Arc<GeneralizedCartanMatrix>,
    strip_bound: usize,
}

impl PartialEq for WeylGroup {
    fn eq(&self, other: &Self) -> bool {
        self.gcm == other.gcm
    }
}

impl WeylGroup {
    pub fn new(gcm: GeneralizedCartanMatrix) -> Self {
        WeylGroup { gcm: Arc::new(gcm), strip_bound: DEFAULT_STRIP_BOUND }
    }

    pub fn with_strip_bound(mut self, bound: usize) -> Self {
        self.strip_bound = bound;
        self
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    fn identity_columns(&self) -> Columns {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement { columns: self.identity_columns(), word: Vec::new() }
    }

    /// `r_i(alpha_j) = alpha_j - a_ij alpha_i`.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        let mut columns = self.identity_columns();
        self.right_reflect(&mut columns, i);
        Ok(WeylElement { columns, word: vec![i] })
    }

    /// `w <- w r_i`: column j becomes `w(alpha_j) - a_ij w(alpha_i)`.
    fn right_reflect(&self, columns: &mut Columns, i: usize) {
        let ci = columns[i].clone();
        for (j, col) in columns.iter_mut().enumerate() {
            let a = self.gcm.entry(i, j);
            if a.is_zero() {
                continue;
            }
            for (x, y) in col.iter_mut().zip(&ci) {
                *x -= a * y;
            }
        }
    }

    fn is_negative(col: &[BigInt]) -> bool {
        col.iter().all(|x| !x.is_positive())
    }

    fn least_right_descent(columns: &Columns) -> Option<usize> {
        columns.iter().position(|c| Self::is_negative(c))
    }

    fn is_identity_matrix(columns: &Columns) -> bool {
        columns.iter().enumerate().all(|(j, c)| {
            c.iter().enumerate().all(|(k, x)| if k == j { x.is_one() } else { x.is_zero() })
        })
    }

    /// Strips least right descents until the identity is reached. The
    /// returned sequence `s` satisfies `w = r_{s_k} ... r_{s_1}`.
    fn strip(&self, mut columns: Columns) -> Result<Vec<usize>> {
        let mut seq = Vec::new();
        loop {
            match Self::least_right_descent(&columns) {
                Some(i) => {
                    if seq.len() >= self.strip_bound {
                        return Err(Error::NotInGroup { bound: self.strip_bound });
                    }
                    self.right_reflect(&mut columns, i);
                    seq.push(i);
                }
                None if Self::is_identity_matrix(&columns) => return Ok(seq),
                None => return Err(Error::NotInGroup { bound: self.strip_bound }),
            }
        }
    }

    fn product_columns(&self, word: &[usize]) -> Columns {
        let mut columns = self.identity_columns();
        for &i in word {
            self.right_reflect(&mut columns, i);
        }
        columns
    }

    /// Length and lexicographically least reduced word of a matrix.
    ///
    /// Right-stripping `w` yields some reduced word and hence `w^{-1}`;
    /// right-stripping `w^{-1}` by least descents then reads off the least
    /// left descents of `w` in order, which is the lex-least reduced word.
    pub fn length_and_word(&self, columns: &[Vec<BigInt>]) -> Result<(usize, Vec<usize>)> {
        let n = self.rank();
        if columns.len() != n || columns.iter().any(|c| c.len() != n) {
            return Err(Error::NotSquare);
        }
        let seq = self.strip(columns.to_vec())?;
        let inverse = self.product_columns(&seq);
        let word = self.strip(inverse)?;
        Ok((word.len(), word))
    }

    pub fn from_matrix(&self, columns: Vec<Vec<BigInt>>) -> Result<WeylElement> {
        let (_, word) = self.length_and_word(&columns)?;
        Ok(WeylElement { columns, word })
    }

    /// Product of simple reflections along any word (not necessarily reduced).
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        for &i in word {
            self.check_index(i)?;
        }
        self.from_matrix(self.product_columns(word))
    }

    /// Like [`from_word`](Self::from_word) but rejects non-reduced words.
    pub fn from_reduced_word(&self, word: &[usize]) -> Result<WeylElement> {
        let w = self.from_word(word)?;
        if w.length() != word.len() {
            return Err(Error::NotReduced { word: word.to_vec() });
        }
        Ok(w)
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let columns: Columns = v
            .columns
            .iter()
            .map(|vc| {
                let mut out = vec![BigInt::zero(); self.rank()];
                for (k, coeff) in vc.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(&u.columns[k]) {
                        *o += coeff * x;
                    }
                }
                out
            })
            .collect();
        self.from_matrix(columns).expect("product of group elements lies in the group")
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.from_word(&rev).expect("reversed reduced word is valid")
    }

    pub fn mul_reflection(&self, w: &WeylElement, i: usize) -> WeylElement {
        let mut columns = w.columns.clone();
        self.right_reflect(&mut columns, i);
        self.from_matrix(columns).expect("group is closed under reflections")
    }

    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        Self::is_negative(&w.columns[i])
    }

    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_right_descent(w, i)).collect()
    }

    /// Elements of length `0..=max_len`, grouped by length, each layer sorted.
    pub fn enumerate_by_length(&self, max_len: usize) -> Vec<Vec<WeylElement>> {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.enumerate_parabolic(&all, max_len)
    }

    /// Breadth-first closure of the identity under right multiplication by the
    /// generators in `subset`, truncated at `max_len`.
    pub fn enumerate_parabolic(&self, subset: &[usize], max_len: usize) -> Vec<Vec<WeylElement>> {
        let mut layers = vec![vec![self.identity()]];
        while layers.len() <= max_len {
            let last = layers.last().expect("at least one layer");
            let mut seen: HashSet<Columns> = HashSet::new();
            let mut next = Vec::new();
            for w in last {
                for &i in subset {
                    if self.is_right_descent(w, i) {
                        continue;
                    }
                    let mut columns = w.columns.clone();
                    self.right_reflect(&mut columns, i);
                    if seen.insert(columns.clone()) {
                        next.push(self.from_matrix(columns).expect("group element"));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            layers.push(next);
        }
        layers
    }

    /// Bruhat order by the descent recursion on `w`.
    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        let (mut vc, mut vl) = (v.columns.clone(), v.length());
        let (mut wc, mut wl) = (w.columns.clone(), w.length());
        loop {
            if vl > wl {
                return false;
            }
            if wl == 0 {
                return vl == 0;
            }
            let i = Self::least_right_descent(&wc).expect("nonidentity element has a descent");
            if Self::is_negative(&vc[i]) {
                self.right_reflect(&mut vc, i);
                vl -= 1;
            }
            self.right_reflect(&mut wc, i);
            wl -= 1;
        }
    }

    /// Elements of length `<= max_len` with no right descent in `subset`.
    pub fn min_coset_reps(&self, subset: &[usize], max_len: usize) -> Vec<WeylElement> {
        self.enumerate_by_length(max_len)
            .into_iter()
            .flatten()
            .filter(|w| subset.iter().all(|&j| !self.is_right_descent(w, j)))
            .collect()
    }

    /// The longest element of the finite parabolic subgroup `W_J`.
    pub fn longest_element(&self, subset: &[usize]) -> Result<WeylElement> {
        for &i in subset {
            self.check_index(i)?;
        }
        if !self.gcm.is_finite_type(subset) {
            return Err(Error::NotSpherical { subset: subset.to_vec() });
        }
        let layers = self.enumerate_parabolic(subset, usize::MAX);
        let top = layers.last().expect("nonempty");
        debug_assert_eq!(top.len(), 1);
        Ok(top[0].clone())
    }

    /// Elements `u` with `l(u) + l(u^{-1} w) = l(w)`, found by walking up the
    /// right weak order from the identity inside the interval below `w`.
    pub fn left_factors(&self, w: &WeylElement) -> Vec<WeylElement> {
        let mut out = vec![self.identity()];
        let mut seen: HashSet<Vec<usize>> = HashSet::from([Vec::new()]);
        let mut queue: VecDeque<(WeylElement, WeylElement)> =
            VecDeque::from([(self.identity(), w.clone())]);
        while let Some((u, rest)) = queue.pop_front() {
            // rest = u^{-1} w; extend u by any left descent of rest
            let rest_inv = self.inverse(&rest);
            for i in self.right_descents(&rest_inv) {
                let u_next = self.mul_reflection(&u, i);
                if seen.insert(u_next.word.clone()) {
                    let r = self.simple_reflection(i).expect("valid index");
                    let rest_next = self.multiply(&r, &rest);
                    out.push(u_next.clone());
                    queue.push_back((u_next, rest_next));
                }
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(a: u64, b: u64) -> WeylGroup {
        WeylGroup::new(GeneralizedCartanMatrix::rank_two(a, b).unwrap())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn simple_reflection_columns() {
        let g = group(2, 2);
        let r1 = g.simple_reflection(0).unwrap();
        assert_eq!(r1.columns()[0], ints(&[-1, 0]));
        assert_eq!(r1.columns()[1], ints(&[2, 1]));
        assert_eq!(r1.length(), 1);
        assert_eq!(r1.word(), &[0]);
        assert!(g.multiply(&r1, &r1).is_identity());
    }

    #[test]
    fn braid_order_in_a2() {
        let g = group(1, 1);
        let w = g.from_word(&[0, 1, 0, 1, 0, 1]).unwrap();
        assert!(w.is_identity());
        assert_eq!(g.from_word(&[0, 1, 0, 1]).unwrap().length(), 2);
    }

    #[test]
    fn lengths() {
        let g = group(2, 2);
        assert_eq!(g.from_word(&[0, 1, 0]).unwrap().length(), 3);
        let g = group(2, 3);
        let w = g.from_word(&[0, 1, 0, 1]).unwrap();
        assert_eq!(w.length(), 4);
        assert_eq!(w.word(), &[0, 1, 0, 1]);
        assert_eq!(g.length_and_word(g.identity().columns()).unwrap(), (0, vec![]));
    }

    #[test]
    fn not_in_group() {
        let g = group(1, 1).with_strip_bound(50);
        let neg: Vec<Vec<BigInt>> = vec![ints(&[-1, 0]), ints(&[0, -1])];
        assert!(matches!(g.length_and_word(&neg), Err(Error::NotInGroup { .. })));
        let mixed: Vec<Vec<BigInt>> = vec![ints(&[1, 1]), ints(&[0, 1])];
        assert!(matches!(g.length_and_word(&mixed), Err(Error::NotInGroup { .. })));
    }

    #[test]
    fn canonical_word_is_lex_least() {
        // r1 r3 commute in A_3: the lex-least word starts with the least index
        let gcm = GeneralizedCartanMatrix::from_rows(&[
            vec![2, -1, 0],
            vec![-1, 2, -1],
            vec![0, -1, 2],
        ])
        .unwrap();
        let g = WeylGroup::new(gcm);
        assert_eq!(g.from_word(&[2, 0]).unwrap().word(), &[0, 2]);
        assert_eq!(g.from_word(&[1, 0, 1]).unwrap().word(), &[0, 1, 0]);
    }

    #[test]
    fn enumeration_sizes() {
        let sizes = |g: &WeylGroup, n| g.enumerate_by_length(n).iter().map(Vec::len).collect::<Vec<_>>();
        assert_eq!(sizes(&group(1, 1), 6), vec![1, 2, 2, 1]);
        assert_eq!(sizes(&group(2, 2), 6), vec![1, 2, 2, 2, 2, 2, 2]);
        assert_eq!(sizes(&group(2, 1), 6), vec![1, 2, 2, 2, 1]);
        assert_eq!(sizes(&group(1, 3), 8), vec![1, 2, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn bruhat_examples() {
        let g = group(2, 2);
        let w = g.from_word(&[0, 1, 0]).unwrap();
        for v in &g.enumerate_by_length(2)[2] {
            assert!(g.bruhat_leq(v, &w));
        }
        let r1 = g.simple_reflection(0).unwrap();
        let r2 = g.simple_reflection(1).unwrap();
        assert!(!g.bruhat_leq(&r1, &r2));
        assert!(g.bruhat_leq(&g.identity(), &w));
        assert!(!g.bruhat_leq(&w, &r1));
    }

    #[test]
    fn coset_reps() {
        let g = group(2, 2);
        let reps = g.min_coset_reps(&[0], 5);
        assert_eq!(reps.len(), 6);
        assert!(reps.iter().skip(1).all(|w| *w.word().last().unwrap() == 1));
        assert_eq!(group(1, 1).min_coset_reps(&[0], 10).len(), 3);
        assert_eq!(g.min_coset_reps(&[], 3).len(), 7);
    }

    #[test]
    fn longest_elements() {
        let g = group(1, 1);
        assert_eq!(g.longest_element(&[0, 1]).unwrap().length(), 3);
        assert_eq!(g.longest_element(&[1]).unwrap(), g.simple_reflection(1).unwrap());
        assert!(matches!(group(2, 2).longest_element(&[0, 1]), Err(Error::NotSpherical { .. })));
        let gcm = GeneralizedCartanMatrix::from_rows(&[
            vec![2, -2, 0],
            vec![-1, 2, -1],
            vec![0, -1, 2],
        ])
        .unwrap();
        let g = WeylGroup::new(gcm);
        assert_eq!(g.longest_element(&[0, 1]).unwrap().length(), 4);
        assert_eq!(g.enumerate_parabolic(&[0, 1], 10).iter().map(Vec::len).sum::<usize>(), 8);
    }

    #[test]
    fn left_factors_of_rigid_word() {
        let g = group(2, 2);
        let w = g.from_word(&[1, 0]).unwrap();
        let words: Vec<Vec<usize>> = g.left_factors(&w).iter().map(|u| u.word().to_vec()).collect();
        assert_eq!(words, vec![vec![], vec![1], vec![1, 0]]);
    }
}
