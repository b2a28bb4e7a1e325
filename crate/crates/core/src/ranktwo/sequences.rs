//! The integer sequences `c_n`, `d_n`, `g_n = gcd(c_n, d_n)` and the
//! generalized binomial coefficients built from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `c_0 = d_0 = 0`, `c_1 = d_1 = 1`, `c_{j+1} = a d_j - c_{j-1}`,
/// `d_{j+1} = b c_j - d_{j-1}`, for `n = 0..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTwoTables {
    a: u64,
    b: u64,
    c: Vec<BigInt>,
    d: Vec<BigInt>,
    g: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub c: String,
    pub d: String,
    pub g: String,
}

pub(crate) fn check_params(a: u64, b: u64) -> Result<()> {
    if a.checked_mul(b).is_none_or(|ab| ab < 4) {
        return Err(Error::NotHyperbolicOrAffine { a, b });
    }
    Ok(())
}

/// Iterator over `(n, c_n, d_n)` without storing the sequence.
#[derive(Clone, Debug)]
pub struct CdStream {
    a: BigInt,
    b: BigInt,
    n: usize,
    prev: (BigInt, BigInt),
    cur: (BigInt, BigInt),
}

impl CdStream {
    pub fn new(a: u64, b: u64) -> Self {
        CdStream {
            a: a.into(),
            b: b.into(),
            n: 0,
            prev: (BigInt::zero(), BigInt::zero()),
            cur: (BigInt::zero(), BigInt::zero()),
        }
    }
}

impl Iterator for CdStream {
    type Item = (usize, BigInt, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.n, self.cur.0.clone(), self.cur.1.clone());
        let next = if self.n == 0 {
            (BigInt::one(), BigInt::one())
        } else {
            (&self.a * &self.cur.1 - &self.prev.0, &self.b * &self.cur.0 - &self.prev.1)
        };
        self.prev = std::mem::replace(&mut self.cur, next);
        self.n += 1;
        Some(out)
    }
}

pub fn cd_sequences(a: u64, b: u64, max_n: usize) -> Result<RankTwoTables> {
    check_params(a, b)?;
    let (mut c, mut d, mut g) = (Vec::new(), Vec::new(), Vec::new());
    for (_, cn, dn) in CdStream::new(a, b).take(max_n + 1) {
        g.push(cn.gcd(&dn));
        c.push(cn);
        d.push(dn);
    }
    Ok(RankTwoTables { a, b, c, d, g })
}

impl RankTwoTables {
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn max_n(&self) -> usize {
        self.c.len() - 1
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n() {
            return Err(Error::BoundExceeded { degree: n, bound: self.max_n() });
        }
        Ok(())
    }

    pub fn c(&self, n: usize) -> &BigInt {
        &self.c[n]
    }

    pub fn d(&self, n: usize) -> &BigInt {
        &self.d[n]
    }

    /// `gcd(c_n, d_n)`, with `g_0 = 0`.
    pub fn g(&self, n: usize) -> &BigInt {
        &self.g[n]
    }

    pub fn rows(&self) -> Vec<TableRow> {
        (0..=self.max_n())
            .map(|n| TableRow {
                n,
                c: self.c[n].to_string(),
                d: self.d[n].to_string(),
                g: self.g[n].to_string(),
            })
            .collect()
    }

    fn binomial(seq: &[BigInt], which: char, n: usize, m: usize) -> Result<BigInt> {
        let prod = |lo: usize, hi: usize| -> BigInt { seq[lo..=hi].iter().product() };
        let num = if n + m == 0 { BigInt::one() } else { prod(1, n + m) };
        let den_n = if n == 0 { BigInt::one() } else { prod(1, n) };
        let den_m = if m == 0 { BigInt::one() } else { prod(1, m) };
        let (q, r) = num.div_rem(&(den_n * den_m));
        if !r.is_zero() {
            return Err(Error::NonIntegral { which, n, m });
        }
        Ok(q)
    }

    /// `C(n,m) = c_{n+m} ... c_1 / (c_n ... c_1 c_m ... c_1)`, checked integral.
    pub fn binomial_c(&self, n: usize, m: usize) -> Result<BigInt> {
        self.check(n + m)?;
        Self::binomial(&self.c, 'C', n, m)
    }

    /// `D(n,m)`, the same ratio for the `d` sequence.
    pub fn binomial_d(&self, n: usize, m: usize) -> Result<BigInt> {
        self.check(n + m)?;
        Self::binomial(&self.d, 'D', n, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn first_rows() {
        let t = cd_sequences(2, 3, 6).unwrap();
        let rows: Vec<(i64, i64, i64)> = (0..=4)
            .map(|n| (t.c(n).try_into().unwrap(), t.d(n).try_into().unwrap(), t.g(n).try_into().unwrap()))
            .collect();
        assert_eq!(rows, vec![(0, 0, 0), (1, 1, 1), (2, 3, 1), (5, 5, 5), (8, 12, 4)]);
        assert_eq!(t.g(6), &big(15));
    }

    #[test]
    fn affine_sequence_is_linear() {
        let t = cd_sequences(2, 2, 30).unwrap();
        for n in 0..=30 {
            assert_eq!(t.c(n), &big(n as i64));
            assert_eq!(t.d(n), &big(n as i64));
            assert_eq!(t.g(n), &big(n as i64));
        }
    }

    #[test]
    fn rejects_compact_cases() {
        assert_eq!(cd_sequences(1, 3, 5), Err(Error::NotHyperbolicOrAffine { a: 1, b: 3 }));
        assert!(cd_sequences(0, 7, 5).is_err());
    }

    #[test]
    fn binomials() {
        let t = cd_sequences(2, 2, 12).unwrap();
        assert_eq!(t.binomial_c(5, 7).unwrap(), big(792));
        assert_eq!(t.binomial_c(3, 0).unwrap(), big(1));
        let t = cd_sequences(2, 3, 6).unwrap();
        assert_eq!(t.binomial_d(2, 2).unwrap(), big(20));
        assert!(matches!(t.binomial_d(4, 4), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn stream_matches_tables() {
        let t = cd_sequences(3, 5, 25).unwrap();
        for (n, c, d) in CdStream::new(3, 5).take(26) {
            assert_eq!((&c, &d), (t.c(n), t.d(n)));
        }
    }
}
