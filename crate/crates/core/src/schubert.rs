//! The free module on Schubert classes `delta^w` with the nil Hecke action
//! and the coproduct dual to the group multiplication.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::ring::CoeffRing;
use crate::weyl::{WeylElement, WeylGroup};

/// A finite combination of Schubert classes. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct SchubertVector<R: CoeffRing> {
    group: WeylGroup,
    ring: R,
    terms: BTreeMap<WeylElement, R::Elem>,
}

impl<R: CoeffRing> PartialEq for SchubertVector<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchubertTermDto {
    pub word: Vec<usize>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorTermDto {
    pub left_word: Vec<usize>,
    pub right_word: Vec<usize>,
    pub coefficient: String,
}

fn one_based(w: &WeylElement) -> Vec<usize> {
    w.word().iter().map(|i| i + 1).collect()
}

impl<R: CoeffRing> SchubertVector<R> {
    pub fn zero(group: &WeylGroup, ring: &R) -> Self {
        SchubertVector { group: group.clone(), ring: ring.clone(), terms: BTreeMap::new() }
    }

    /// The single class `delta^w`.
    pub fn basis(group: &WeylGroup, ring: &R, w: WeylElement) -> Self {
        let mut v = Self::zero(group, ring);
        v.add_term(w, ring.one());
        v
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn add_term(&mut self, w: WeylElement, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let sum = self.ring.add(old, &c);
                if self.ring.is_zero(&sum) {
                    self.terms.remove(&w);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, &R::Elem)> {
        self.terms.iter()
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "Schubert vectors over different rings");
        assert!(self.group == other.group, "Schubert vectors over different groups");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(&self.group, &self.ring);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), self.ring.mul(c, x));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.neg(&self.ring.one()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `L_w`: the coefficient of `delta^w`.
    pub fn coefficient(&self, w: &WeylElement) -> R::Elem {
        self.terms.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// `A_i(delta^w) = delta^{w r_i}` if `i` is a right descent of `w`, else 0.
    pub fn nil_a(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.group, &self.ring);
        for (w, c) in &self.terms {
            if self.group.is_right_descent(w, i) {
                out.add_term(self.group.mul_reflection(w, i), c.clone());
            }
        }
        out
    }

    /// `A_{i_1} ... A_{i_k}` for a reduced word; `A_{i_k}` acts first.
    pub fn nil_aw(&self, word: &[usize]) -> Result<Self> {
        self.group.from_reduced_word(word)?;
        let mut out = self.clone();
        for &i in word.iter().rev() {
            out = out.nil_a(i);
        }
        Ok(out)
    }

    pub fn to_dto(&self) -> Vec<SchubertTermDto> {
        self.terms
            .iter()
            .map(|(w, c)| SchubertTermDto { word: one_based(w), coefficient: self.ring.format(c) })
            .collect()
    }
}

/// A finite combination of `delta^u (x) delta^v`.
#[derive(Clone, Debug)]
pub struct TensorVector<R: CoeffRing> {
    ring: R,
    terms: BTreeMap<(WeylElement, WeylElement), R::Elem>,
}

impl<R: CoeffRing> PartialEq for TensorVector<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<R: CoeffRing> TensorVector<R> {
    pub fn zero(ring: &R) -> Self {
        TensorVector { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, u: WeylElement, v: WeylElement, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        let key = (u, v);
        let sum = match self.terms.get(&key) {
            Some(old) => self.ring.add(old, &c),
            None => c,
        };
        if self.ring.is_zero(&sum) {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(WeylElement, WeylElement), &R::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, u: &WeylElement, v: &WeylElement) -> R::Elem {
        self.terms
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn to_dto(&self) -> Vec<TensorTermDto> {
        self.terms
            .iter()
            .map(|((u, v), c)| TensorTermDto {
                left_word: one_based(u),
                right_word: one_based(v),
                coefficient: self.ring.format(c),
            })
            .collect()
    }
}

/// `Delta(delta^w) = sum delta^u (x) delta^v` over `uv = w` with
/// `l(u) + l(v) = l(w)`. Candidates `u` range over all elements of length at
/// most `l(w)`.
pub fn peterson_coproduct<R: CoeffRing>(group: &WeylGroup, ring: &R, w: &WeylElement) -> TensorVector<R> {
    let mut out = TensorVector::zero(ring);
    for u in group.enumerate_by_length(w.length()).into_iter().flatten() {
        let v = group.multiply(&group.inverse(&u), w);
        if u.length() + v.length() == w.length() {
            out.add_term(u, v, ring.one());
        }
    }
    out
}

/// Schubert basis of the partial flag variety for `J`: minimal coset
/// representatives, i.e. the classes killed by every `A_j`, `j` in `J`.
pub fn parabolic_basis(group: &WeylGroup, subset: &[usize], max_len: usize) -> Vec<WeylElement> {
    group.min_coset_reps(subset, max_len)
}

/// Compares `(Delta (x) id) Delta` with `(id (x) Delta) Delta` on `delta^w`.
pub fn coassociative_at(group: &WeylGroup, w: &WeylElement) -> bool {
    let ring = crate::ring::Integers;
    let delta = peterson_coproduct(group, &ring, w);
    let mut left: BTreeMap<[WeylElement; 3], num_bigint::BigInt> = BTreeMap::new();
    let mut right = left.clone();
    for ((u, v), c) in delta.iter() {
        for ((x, y), d) in peterson_coproduct(group, &ring, u).iter() {
            *left.entry([x.clone(), y.clone(), v.clone()]).or_default() += c * d;
        }
        for ((x, y), d) in peterson_coproduct(group, &ring, v).iter() {
            *right.entry([u.clone(), x.clone(), y.clone()]).or_default() += c * d;
        }
    }
    left == right
}

/// Applies the counit to the left and to the right factor of `Delta(delta^w)`
/// and checks both return `delta^w`.
pub fn counit_at<R: CoeffRing>(group: &WeylGroup, ring: &R, w: &WeylElement) -> bool {
    let delta = peterson_coproduct(group, ring, w);
    let mut left = SchubertVector::zero(group, ring);
    let mut right = SchubertVector::zero(group, ring);
    for ((u, v), c) in delta.iter() {
        if u.is_identity() {
            left.add_term(v.clone(), c.clone());
        }
        if v.is_identity() {
            right.add_term(u.clone(), c.clone());
        }
    }
    let target = SchubertVector::basis(group, ring, w.clone());
    left == target && right == target
}
