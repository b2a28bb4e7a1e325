//! The cup product on `H*(K/T; Z)` for `A(a,b)`, solved degree by degree
//! from the twisted Leibniz rule.
//!
//! Degree `n` has basis `delta_n, tau_n` (one class in degree 0). Writing
//! `u v = A delta_N + B tau_N`, the nil Hecke operators give
//! `A_1(u v) = A tau_{N-1}` and `A_2(u v) = B delta_{N-1}`, while
//! `A_i(u v) = A_i(u) r_i(v) + u A_i(v)` with `r_i(v) = v - alpha_i A_i(v)`
//! only involves products of lower total degree. `A_1 + A_2` is injective in
//! positive degrees, so this determines every product.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::sequences::{cd_sequences, RankTwoTables};
use super::{class_element, classify, Kind};
use crate::error::{Error, Result};
use crate::gcm::GeneralizedCartanMatrix;
use crate::ring::CoeffRing;
use crate::schubert::SchubertVector;
use crate::weyl::WeylGroup;

/// A homogeneous class `x delta_n + y tau_n`; in degree 0 the class is the
/// scalar `x` and `y = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Class {
    pub degree: usize,
    pub x: BigInt,
    pub y: BigInt,
}

impl Class {
    pub fn new(degree: usize, x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        let (x, mut y) = (x.into(), y.into());
        if degree == 0 {
            y = BigInt::zero();
        }
        Class { degree, x, y }
    }

    pub fn zero(degree: usize) -> Self {
        Class::new(degree, 0, 0)
    }

    pub fn unit() -> Self {
        Class::new(0, 1, 0)
    }

    pub fn basis(kind: Kind, n: usize) -> Self {
        match (n, kind) {
            (0, _) => Class::unit(),
            (_, Kind::Delta) => Class::new(n, 1, 0),
            (_, Kind::Tau) => Class::new(n, 0, 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, o: &Class) -> Class {
        debug_assert_eq!(self.degree, o.degree);
        Class::new(self.degree, &self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Class) -> Class {
        debug_assert_eq!(self.degree, o.degree);
        Class::new(self.degree, &self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, c: &BigInt) -> Class {
        Class::new(self.degree, c * &self.x, c * &self.y)
    }

    /// `A_1(delta_n) = tau_{n-1}`, `A_1(tau_n) = 0`; with `delta_0 = tau_0 = 1`.
    pub fn nil_a(&self, i: usize) -> Class {
        assert!(self.degree > 0, "A_i lowers degree");
        let c = if i == 0 { &self.x } else { &self.y };
        let d = self.degree - 1;
        match (d, i) {
            (0, _) => Class::new(0, c.clone(), 0),
            (_, 0) => Class::new(d, 0, c.clone()),
            _ => Class::new(d, c.clone(), 0),
        }
    }
}

impl std::fmt::Display for Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.degree == 0 {
            return write!(f, "{}", self.x);
        }
        write!(f, "{} d{} ", self.x, self.degree)?;
        if self.y.is_negative() {
            write!(f, "- {} t{}", -&self.y, self.degree)
        } else {
            write!(f, "+ {} t{}", self.y, self.degree)
        }
    }
}

/// Structure constants of `H*(K/T; Z)` up to total degree `max_n`.
#[derive(Clone, Debug)]
pub struct ProductTable {
    tables: RankTwoTables,
    group: WeylGroup,
    /// `products[m][n][ku][kv]` for `m, n >= 1`, `m + n <= max_n`.
    products: Vec<Vec<[[Class; 2]; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductRow {
    pub left: String,
    pub right: String,
    pub delta_coefficient: String,
    pub tau_coefficient: String,
}

fn kind_index(k: Kind) -> usize {
    match k {
        Kind::Delta => 0,
        Kind::Tau => 1,
    }
}

const KINDS: [Kind; 2] = [Kind::Delta, Kind::Tau];

impl ProductTable {
    pub fn tables(&self) -> &RankTwoTables {
        &self.tables
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn max_n(&self) -> usize {
        self.tables.max_n()
    }

    /// `alpha_1 = 2 delta - b tau`, `alpha_2 = -a delta + 2 tau`.
    pub fn alpha(&self, i: usize) -> Class {
        let (a, b) = (BigInt::from(self.tables.a()), BigInt::from(self.tables.b()));
        if i == 0 {
            Class::new(1, 2, -b)
        } else {
            Class::new(1, -a, 2)
        }
    }

    /// Product of two homogeneous classes.
    pub fn mul(&self, u: &Class, v: &Class) -> Result<Class> {
        let degree = u.degree + v.degree;
        if degree > self.max_n() {
            return Err(Error::BoundExceeded { degree, bound: self.max_n() });
        }
        if u.degree == 0 {
            return Ok(v.scale(&u.x));
        }
        if v.degree == 0 {
            return Ok(u.scale(&v.x));
        }
        let entry = &self.products[u.degree][v.degree];
        let mut out = Class::zero(degree);
        for (i, cu) in [&u.x, &u.y].into_iter().enumerate() {
            for (j, cv) in [&v.x, &v.y].into_iter().enumerate() {
                if cu.is_zero() || cv.is_zero() {
                    continue;
                }
                out = out.add(&entry[i][j].scale(&(cu * cv)));
            }
        }
        Ok(out)
    }

    pub fn basis_product(&self, ku: Kind, m: usize, kv: Kind, n: usize) -> Result<Class> {
        self.mul(&Class::basis(ku, m), &Class::basis(kv, n))
    }

    /// `A_i(u v) = A_i(u) v - A_i(u) (alpha_i A_i(v)) + u A_i(v)`.
    fn leibniz(&self, i: usize, u: &Class, v: &Class) -> Result<Class> {
        let au = u.nil_a(i);
        let av = v.nil_a(i);
        let twisted = self.mul(&self.alpha(i), &av)?;
        let first = self.mul(&au, v)?;
        let second = self.mul(&au, &twisted)?;
        let third = self.mul(u, &av)?;
        Ok(first.sub(&second).add(&third))
    }

    /// Products of a fixed total degree as `(ku, m, kv, n) -> class`.
    pub fn rows(&self) -> Vec<ProductRow> {
        let name = |k: Kind, n: usize| format!("{}{n}", if k == Kind::Delta { "delta_" } else { "tau_" });
        let mut out = Vec::new();
        for m in 1..self.max_n() {
            for n in 1..=self.max_n() - m {
                for ku in KINDS {
                    for kv in KINDS {
                        let p = &self.products[m][n][kind_index(ku)][kind_index(kv)];
                        out.push(ProductRow {
                            left: name(ku, m),
                            right: name(kv, n),
                            delta_coefficient: p.x.to_string(),
                            tau_coefficient: p.y.to_string(),
                        });
                    }
                }
            }
        }
        out
    }

    /// Cup product of two homogeneous Schubert vectors for this group.
    pub fn cup<R: CoeffRing>(&self, u: &SchubertVector<R>, v: &SchubertVector<R>) -> Result<SchubertVector<R>> {
        let ring = u.ring();
        let mut out = SchubertVector::zero(&self.group, ring);
        for (w1, c1) in u.iter() {
            let (n1, k1) = classify(w1);
            for (w2, c2) in v.iter() {
                let (n2, k2) = classify(w2);
                let p = self.basis_product(k1, n1, k2, n2)?;
                let c = ring.mul(c1, c2);
                let deg = n1 + n2;
                if deg == 0 {
                    out.add_term(self.group.identity(), ring.mul(&c, &ring.from_int(&p.x)));
                    continue;
                }
                for (kind, coeff) in [(Kind::Delta, &p.x), (Kind::Tau, &p.y)] {
                    out.add_term(class_element(&self.group, kind, deg), ring.mul(&c, &ring.from_int(coeff)));
                }
            }
        }
        Ok(out)
    }
}

/// Solves the Leibniz system up to total degree `max_n`.
pub fn leibniz_cup_solver(a: u64, b: u64, max_n: usize) -> Result<ProductTable> {
    let tables = cd_sequences(a, b, max_n)?;
    let group = WeylGroup::new(GeneralizedCartanMatrix::rank_two(a, b)?);
    let blank = || std::array::from_fn(|_| std::array::from_fn(|_| Class::zero(0)));
    let products = (0..=max_n).map(|_| (0..=max_n).map(|_| blank()).collect()).collect();
    let mut table = ProductTable { tables, group, products };
    for total in 2..=max_n {
        for m in 1..total {
            let n = total - m;
            for ku in KINDS {
                for kv in KINDS {
                    let (u, v) = (Class::basis(ku, m), Class::basis(kv, n));
                    let x1 = table.leibniz(0, &u, &v)?;
                    let x2 = table.leibniz(1, &u, &v)?;
                    // A_1(A d_N + B t_N) = A t_{N-1}; A_2(...) = B d_{N-1}
                    if !x1.x.is_zero() || !x2.y.is_zero() {
                        return Err(Error::UnderdeterminedSystem { degree: total });
                    }
                    table.products[m][n][kind_index(ku)][kind_index(kv)] = Class::new(total, x1.y, x2.x);
                }
            }
        }
    }
    Ok(table)
}

fn violation(msg: String) -> Error {
    Error::TheoremViolation(msg)
}

impl ProductTable {
    /// The four families `delta delta_n = d_{n+1} delta_{n+1}`,
    /// `delta tau_n = delta_{n+1} + d_n tau_{n+1}`, `tau tau_n = c_{n+1} tau_{n+1}`,
    /// `tau delta_n = tau_{n+1} + c_n delta_{n+1}`.
    pub fn check_degree_one_products(&self) -> Result<()> {
        let t = &self.tables;
        for n in 0..self.max_n() {
            let zero = BigInt::zero();
            let one = BigInt::from(1);
            let expected = [
                (Kind::Delta, Kind::Delta, t.d(n + 1).clone(), zero.clone()),
                (Kind::Delta, Kind::Tau, one.clone(), t.d(n).clone()),
                (Kind::Tau, Kind::Tau, zero.clone(), t.c(n + 1).clone()),
                (Kind::Tau, Kind::Delta, t.c(n).clone(), one.clone()),
            ];
            for (k1, k2, x, y) in expected {
                let got = self.basis_product(k1, 1, k2, n)?;
                if got != Class::new(n + 1, x.clone(), y.clone()) {
                    return Err(violation(format!("{k1:?}_1 * {k2:?}_{n} = {got}, expected {x}, {y}")));
                }
            }
        }
        Ok(())
    }

    /// `tau_n tau_m = C(n,m) tau_{n+m}` and `delta_n delta_m = D(n,m) delta_{n+m}`.
    pub fn check_partial_flag_products(&self) -> Result<()> {
        let t = &self.tables;
        for n in 0..=self.max_n() {
            for m in 0..=self.max_n() - n {
                let tt = self.basis_product(Kind::Tau, n, Kind::Tau, m)?;
                let dd = self.basis_product(Kind::Delta, n, Kind::Delta, m)?;
                let c = t.binomial_c(n, m)?;
                let d = t.binomial_d(n, m)?;
                let (want_t, want_d) = if n + m == 0 {
                    (Class::unit(), Class::unit())
                } else {
                    (Class::new(n + m, 0, c), Class::new(n + m, d, 0))
                };
                if tt != want_t || dd != want_d {
                    return Err(violation(format!("partial flag products at ({n},{m}): {tt}, {dd}")));
                }
            }
        }
        Ok(())
    }

    pub fn check_commutative_associative(&self) -> Result<()> {
        let max = self.max_n();
        let basis = |n: usize| -> Vec<Class> {
            if n == 0 {
                vec![Class::unit()]
            } else {
                KINDS.iter().map(|&k| Class::basis(k, n)).collect()
            }
        };
        for m in 0..=max {
            for n in 0..=max - m {
                for u in basis(m) {
                    for v in basis(n) {
                        let uv = self.mul(&u, &v)?;
                        if uv != self.mul(&v, &u)? {
                            return Err(violation(format!("non-commuting pair in degrees {m}, {n}")));
                        }
                        for l in 0..=max - m - n {
                            for w in basis(l) {
                                let left = self.mul(&uv, &w)?;
                                let right = self.mul(&u, &self.mul(&v, &w)?)?;
                                if left != right {
                                    return Err(violation(format!("non-associative triple in degrees {m}, {n}, {l}")));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `a delta^2 + b tau^2 - ab delta tau` in degree 2.
    pub fn quadratic_relation(&self) -> Result<Class> {
        let (a, b) = (BigInt::from(self.tables.a()), BigInt::from(self.tables.b()));
        let dd = self.basis_product(Kind::Delta, 1, Kind::Delta, 1)?;
        let tt = self.basis_product(Kind::Tau, 1, Kind::Tau, 1)?;
        let dt = self.basis_product(Kind::Delta, 1, Kind::Tau, 1)?;
        Ok(dd.scale(&a).add(&tt.scale(&b)).sub(&dt.scale(&(&a * &b))))
    }

    /// Rank over Q of the span of the monomials `delta^i tau^{n-i}` in degree
    /// `n`; 2 for every `n >= 1` means the ring is generated in degree 2.
    pub fn monomial_span_rank(&self, n: usize) -> Result<usize> {
        let delta = Class::basis(Kind::Delta, 1);
        let tau = Class::basis(Kind::Tau, 1);
        let mut rows = Vec::new();
        for i in 0..=n {
            let mut m = Class::unit();
            for _ in 0..i {
                m = self.mul(&m, &delta)?;
            }
            for _ in i..n {
                m = self.mul(&m, &tau)?;
            }
            rows.push(vec![m.x, m.y]);
        }
        Ok(crate::linalg::rank(&rows))
    }
}
