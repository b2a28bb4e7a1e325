//! Invariant suites at reduced bounds, one per module, for quick
//! verification of an installed build.

use num_bigint::BigInt;
use serde::Serialize;

use crate::finite_field::Fp2;
use crate::gcm::{CoxeterExponent, GeneralizedCartanMatrix};
use crate::polyring::{monomial_count, TorusCohomology};
use crate::ranktwo::{self, Kind};
use crate::ring::{CoeffRing, Integers, PrimeField, Rationals};
use crate::schubert::{coassociative_at, counit_at, SchubertVector};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.to_string(), passed, detail: detail.into() }
}

fn sample_gcms() -> Vec<GeneralizedCartanMatrix> {
    let rows: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![2, -1], vec![-1, 2]],
        vec![vec![2, -2], vec![-1, 2]],
        vec![vec![2, -2], vec![-2, 2]],
        vec![vec![2, -1], vec![-3, 2]],
        vec![vec![2, -3], vec![-2, 2]],
        vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
    ];
    rows.iter().map(|r| GeneralizedCartanMatrix::from_rows(r).expect("valid sample")).collect()
}

/// Products of all reduced subwords of the canonical word of `w`; by the
/// subword property these are exactly the elements below `w`.
pub fn bruhat_interval_by_subwords(group: &WeylGroup, w: &WeylElement) -> Vec<WeylElement> {
    let word = w.word();
    let mut out = Vec::new();
    for mask in 0u64..(1 << word.len()) {
        let sub: Vec<usize> = word.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        let x = group.from_word(&sub).expect("valid indices");
        if x.length() == sub.len() && !out.contains(&x) {
            out.push(x);
        }
    }
    out.sort();
    out
}

pub fn gcm_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let bad = GeneralizedCartanMatrix::from_rows(&[vec![2, -1], vec![0, 2]]);
    out.push(check("zero asymmetry rejected", bad.is_err(), format!("{bad:?}")));
    let mut ok = true;
    for a in 0..=4u64 {
        for b in 0..=4u64 {
            if (a == 0) != (b == 0) {
                continue;
            }
            let g = GeneralizedCartanMatrix::rank_two(a, b).expect("valid");
            let finite = g.is_finite_type(&[0, 1]);
            let exponent_finite = g.coxeter_exponent(0, 1).map(|m| m != CoxeterExponent::Infinite).unwrap_or(false);
            let group = WeylGroup::new(g);
            let terminates = group.enumerate_by_length(13).len() < 14;
            ok &= finite == (a * b < 4) && finite == exponent_finite && finite == terminates;
        }
    }
    out.push(check("rank-two finite type calibration", ok, "a, b <= 4"));
    let mut closed = true;
    let mut realized = true;
    for g in sample_gcms() {
        let poset = g.spherical_poset();
        for s in &poset.subsets {
            for drop in 0..s.len() {
                let mut t = s.clone();
                t.remove(drop);
                closed &= poset.contains(&t);
            }
        }
        realized &= g.standard_realization().verify(&g);
    }
    out.push(check("spherical posets are downward closed", closed, "sample matrices"));
    out.push(check("standard realizations verify", realized, "sample matrices"));
    out
}

pub fn weyl_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let (mut involutions, mut braids, mut descents, mut bruhat) = (true, true, true, true);
    for g in sample_gcms() {
        let group = WeylGroup::new(g.clone());
        let n = group.rank();
        for i in 0..n {
            let r = group.simple_reflection(i).expect("index");
            involutions &= group.multiply(&r, &r).is_identity();
            for j in 0..n {
                if i == j {
                    continue;
                }
                let alt: Vec<usize> = (0..20).map(|t| if t % 2 == 0 { i } else { j }).collect();
                match g.coxeter_exponent(i, j).expect("distinct").finite() {
                    Some(m) => braids &= group.from_word(&alt[..2 * m as usize]).expect("word").is_identity(),
                    None => braids &= group.from_word(&alt).expect("word").length() == 20,
                }
            }
        }
        let elements: Vec<WeylElement> = group.enumerate_by_length(4).into_iter().flatten().collect();
        for w in &elements {
            for i in 0..n {
                let l = group.mul_reflection(w, i).length();
                descents &= l + 1 == w.length() || l == w.length() + 1;
            }
            let interval = bruhat_interval_by_subwords(&group, w);
            for v in &elements {
                bruhat &= group.bruhat_leq(v, w) == interval.contains(v);
            }
        }
    }
    out.push(check("simple reflections are involutions", involutions, ""));
    out.push(check("braid relations and infinite orders", braids, ""));
    out.push(check("length changes by one under reflections", descents, "length <= 4"));
    out.push(check("Bruhat order matches subword oracle", bruhat, "length <= 4"));
    let group = WeylGroup::new(GeneralizedCartanMatrix::rank_two(2, 3).expect("valid"));
    let sizes: Vec<usize> = group.enumerate_by_length(8).iter().map(Vec::len).collect();
    out.push(check("rank-two growth 1,2,2,...", sizes == [1, 2, 2, 2, 2, 2, 2, 2, 2], format!("{sizes:?}")));
    out
}

pub fn schubert_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let (mut square, mut braid, mut closed_form, mut coalgebra) = (true, true, true, true);
    for g in sample_gcms() {
        let group = WeylGroup::new(g.clone());
        let n = group.rank();
        let elements: Vec<WeylElement> = group.enumerate_by_length(5).into_iter().flatten().collect();
        for w in &elements {
            let x = SchubertVector::basis(&group, &Integers, w.clone());
            for i in 0..n {
                square &= x.nil_a(i).nil_a(i).is_zero();
                for j in 0..n {
                    let Some(m) = g.coxeter_exponent(i, j).ok().and_then(|m| m.finite()) else {
                        continue;
                    };
                    let alt = |s: usize, t: usize| -> Vec<usize> { (0..m as usize).map(|k| if k % 2 == 0 { s } else { t }).collect() };
                    let (lhs, rhs) = (x.nil_aw(&alt(i, j)), x.nil_aw(&alt(j, i)));
                    braid &= lhs.is_ok() && lhs == rhs;
                }
            }
            for v in elements.iter().filter(|v| v.length() <= 3) {
                let vw = group.multiply(v, &group.inverse(w));
                let expect = if vw.length() + w.length() == v.length() {
                    SchubertVector::basis(&group, &Integers, vw)
                } else {
                    SchubertVector::zero(&group, &Integers)
                };
                let y = SchubertVector::basis(&group, &Integers, v.clone());
                closed_form &= y.nil_aw(w.word()).expect("canonical word is reduced") == expect;
            }
            if w.length() <= 3 {
                coalgebra &= coassociative_at(&group, w) && counit_at(&group, &Integers, w);
            }
        }
    }
    out.push(check("A_i^2 = 0", square, "length <= 5"));
    out.push(check("nil Hecke braid relations", braid, "length <= 5"));
    out.push(check("A_w matches its closed form", closed_form, "length <= 3"));
    out.push(check("coproduct coassociative with counit", coalgebra, "length <= 3"));
    out
}

pub fn polyring_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let (mut leibniz, mut square, mut commute) = (true, true, true);
    for g in sample_gcms().into_iter().take(5) {
        let ctx = TorusCohomology::new(g, Rationals);
        let n = ctx.nvars();
        let x = |k: usize| ctx.variable(k % n);
        let f = x(0).pow(2).add(&x(1).mul(&x(n - 1)).scale(&ctx.ring().from_i64(3)));
        let h = x(1).pow(3).sub(&x(0).mul(&x(1)).mul(&x(n - 1)));
        for i in 0..ctx.rank() {
            let dd = |p: &_| ctx.divided_difference(i, p).expect("exact");
            let lhs = dd(&f.mul(&h));
            let rhs = dd(&f).mul(&ctx.weyl_act(i, &h)).add(&f.mul(&dd(&h)));
            leibniz &= lhs == rhs;
            square &= dd(&dd(&h)).is_zero();
            let psi = |p: &_| ctx.characteristic_map(p).expect("homogeneous");
            commute &= psi(&dd(&h)) == psi(&h).nil_a(i);
        }
    }
    out.push(check("twisted Leibniz rule", leibniz, "fixed polynomials"));
    out.push(check("divided differences square to zero", square, ""));
    out.push(check("psi* commutes with A_i", commute, ""));
    let mut counts = true;
    for p in [2u64, 3] {
        let ctx = TorusCohomology::new(GeneralizedCartanMatrix::rank_two(2, 2).expect("valid"), PrimeField::new(p).expect("prime"));
        if let Ok(report) = ctx.s_poincare(4) {
            counts &= report.per_degree.iter().all(|r| r.dim_j + r.dim_s == monomial_count(3, r.degree / 2));
        } else {
            counts = false;
        }
    }
    out.push(check("dim J + dim S = monomial count", counts, "A(2,2), degree <= 8"));
    let mut steenrod = true;
    for p in [2u64, 3] {
        let ctx = TorusCohomology::new(GeneralizedCartanMatrix::rank_two(2, 3).expect("valid"), PrimeField::new(p).expect("prime"));
        let f = ctx.variable(0).mul(&ctx.variable(1)).add(&ctx.variable(1).pow(2));
        for i in 0..2 {
            steenrod &= ctx.steenrod_commutation_check(i, &f).unwrap_or(false);
        }
    }
    out.push(check("total Steenrod commutation", steenrod, "p = 2, 3"));
    out
}

pub fn ranktwo_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let mut table = true;
    for (a, b) in [(1u64, 4u64), (2, 3), (3, 5), (7, 2)] {
        let t = ranktwo::cd_sequences(a, b, 4).expect("ab >= 4");
        let (ab, ga) = (BigInt::from(a * b), num_integer::Integer::gcd(&BigInt::from(a), &BigInt::from(b)));
        table &= t.c(2) == &BigInt::from(a)
            && t.d(2) == &BigInt::from(b)
            && t.c(3) == &(&ab - 1)
            && t.d(3) == &(&ab - 1)
            && t.c(4) == &(BigInt::from(a) * (&ab - 2))
            && t.d(4) == &(BigInt::from(b) * (&ab - 2))
            && t.g(4) == &(ga * (&ab - 2));
    }
    out.push(check("sequence rows 0..4", table, ""));
    let mut integral = true;
    for (a, b) in [(2u64, 2u64), (2, 5), (3, 4)] {
        let t = ranktwo::cd_sequences(a, b, 14).expect("ab >= 4");
        for n in 0..=14 {
            for m in 0..=14 - n {
                integral &= t.binomial_c(n, m).is_ok() && t.binomial_d(n, m).is_ok();
            }
        }
    }
    out.push(check("generalized binomials are integers", integral, "n + m <= 14"));
    let solver = ranktwo::leibniz_cup_solver(2, 3, 10).and_then(|t| {
        t.check_degree_one_products()?;
        t.check_partial_flag_products()?;
        t.check_commutative_associative()
    });
    out.push(check("Leibniz solver matches closed forms", solver.is_ok(), format!("{solver:?}")));
    let mut agree = true;
    for (a, b) in [(1u64, 4u64), (2, 2), (2, 3), (3, 3), (1, 5)] {
        for p in [2u64, 3, 5, 7] {
            let closed = ranktwo::prime_order_closed(a, b, p).map(|r| r.k).ok();
            let scan = ranktwo::prime_order_scan(a, b, p, 80).ok().filter(|s| s.pattern_holds).and_then(|s| s.k);
            agree &= closed.is_some() && closed == scan;
            if p > 2 {
                agree &= ranktwo::matrix_order_method(a, b, p).ok() == closed;
            }
        }
    }
    out.push(check("prime order: three methods agree", agree, "small grid"));
    let bock = [(2u64, 2u64, 3u64), (2, 3, 3), (1, 5, 2)]
        .iter()
        .all(|&(a, b, p)| ranktwo::bockstein_valuation_check(a, b, p, 8).is_ok_and(|r| r.holds));
    out.push(check("Bockstein valuation identity", bock, "s <= 8"));
    let series = [(2u64, 2u64, 2u64), (2, 3, 3), (1, 5, 2)].iter().all(|&(a, b, p)| {
        ranktwo::hopf_afp_series(a, b, p, 12).is_ok_and(|h| h.equal)
            && ranktwo::hk_modp_crosscheck(a, b, p, 24).is_ok_and(|h| h.equal)
            && ranktwo::dual_polynomial_check(a, b, p, 3).is_ok_and(|d| d.holds)
    });
    out.push(check("Hopf and mod-p series", series, ""));
    let group = WeylGroup::new(GeneralizedCartanMatrix::rank_two(2, 3).expect("valid"));
    let coproduct = (0..6).all(|n| {
        let w = ranktwo::class_element(&group, Kind::Delta, n);
        crate::schubert::peterson_coproduct(&group, &Integers, &w).len() == n + 1
    });
    out.push(check("rank-two coproduct has n+1 terms", coproduct, "n < 6"));
    out
}

pub fn finite_field_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let (mut axioms, mut frobenius, mut inverses) = (true, true, true);
    for p in [2u64, 3, 5] {
        let f = Fp2::new(p).expect("prime");
        let all: Vec<_> = f.elements().collect();
        for &x in &all {
            frobenius &= (x.frobenius() == x) == x.in_base_field();
            if !x.is_zero() {
                let inv = x.inv().expect("nonzero");
                inverses &= (x * inv).is_one();
                inverses &= x.multiplicative_order().ok() == inv.multiplicative_order().ok();
            }
            for &y in all.iter().step_by(2) {
                frobenius &= (x + y).frobenius() == x.frobenius() + y.frobenius();
                for &z in all.iter().step_by(3) {
                    axioms &= (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z;
                }
            }
        }
    }
    out.push(check("field axioms", axioms, "p <= 5"));
    out.push(check("Frobenius additive, fixes F_p", frobenius, "p <= 5"));
    out.push(check("inverses and inverse orders", inverses, "p <= 5"));
    let mut vieta = true;
    for p in [3u64, 7, 11] {
        let f = Fp2::new(p).expect("prime");
        for b in 0..p {
            for c in 0..p {
                let (r, s) = f.quadratic_roots(b, c);
                vieta &= r * s == f.element(c, 0) && r + s == -f.element(b, 0);
            }
        }
    }
    out.push(check("Vieta relations for quadratic roots", vieta, "p in {3, 7, 11}"));
    out
}
