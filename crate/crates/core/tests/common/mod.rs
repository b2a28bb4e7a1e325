//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use schubert_kit::{CoeffRing, GeneralizedCartanMatrix, GradedPolynomial, WeylElement, WeylGroup};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gcm(rows: &[&[i64]]) -> GeneralizedCartanMatrix {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    GeneralizedCartanMatrix::from_rows(&rows).unwrap()
}

pub fn affine_a2() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])
}

pub fn rank_two(a: u64, b: u64) -> GeneralizedCartanMatrix {
    GeneralizedCartanMatrix::rank_two(a, b).unwrap()
}

/// `c_n`, `d_n` for `n = 0..=max` straight from the recursion.
pub fn cd(a: i64, b: i64, max: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut c = vec![BigInt::from(0), BigInt::from(1)];
    let mut d = c.clone();
    while c.len() <= max {
        let j = c.len() - 1;
        let cn = a * &d[j] - &c[j - 1];
        let dn = b * &c[j] - &d[j - 1];
        c.push(cn);
        d.push(dn);
    }
    c.truncate(max + 1);
    d.truncate(max + 1);
    (c, d)
}

/// Every reduced word of `w`, by peeling right descents recursively.
pub fn reduced_words(group: &WeylGroup, w: &WeylElement) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..group.rank() {
        let shorter = group.mul_reflection(w, i);
        if shorter.length() < w.length() {
            for mut word in reduced_words(group, &shorter) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out
}

/// `v <= w` iff some reduced word of `v` is a subsequence of a fixed reduced
/// word of `w`.
pub fn bruhat_by_subwords(group: &WeylGroup, v: &WeylElement, w: &WeylElement) -> bool {
    let target = w.word();
    reduced_words(group, v).iter().any(|rv| {
        let mut it = target.iter();
        rv.iter().all(|x| it.any(|y| y == x))
    })
}

pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, degree: usize) -> Vec<u32> {
    let mut e = vec![0u32; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    e
}

/// A random polynomial with up to `terms` terms of degree `<= max_degree`, or
/// exactly `max_degree` if `homogeneous`.
pub fn random_poly<R: CoeffRing>(
    rng: &mut ChaCha8Rng,
    ring: &R,
    nvars: usize,
    max_degree: usize,
    terms: usize,
    homogeneous: bool,
) -> GradedPolynomial<R> {
    let mut f = GradedPolynomial::zero(ring, nvars);
    for _ in 0..rng.gen_range(1..=terms) {
        let d = if homogeneous { max_degree } else { rng.gen_range(0..=max_degree) };
        let c = rng.gen_range(-5i64..=5);
        f = f.add(&GradedPolynomial::monomial(ring, random_monomial(rng, nvars, d), ring.from_i64(c)));
    }
    f
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn all_monomials(n: usize, d: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in all_monomials(n - 1, d - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}
