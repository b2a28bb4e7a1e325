//! Additive `H*(K; Z)`, its mod-p series, and the Hopf algebras `A_Z`,
//! `A_{F_p}` with the coproduct inherited from the Schubert basis.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::prime_order::prime_order_closed;
use super::sequences::{cd_sequences, RankTwoTables};
use super::{class_element, classify, Kind};
use crate::error::{Error, Result};
use crate::gcm::GeneralizedCartanMatrix;
use crate::ring::{CoeffRing, PrimeField};
use crate::schubert::peterson_coproduct;
use crate::series::PoincareSeries;
use crate::weyl::WeylGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyGroup {
    Free,
    /// `Z/n`; `n = 1` is the trivial group.
    Cyclic(BigInt),
}

impl CohomologyGroup {
    fn from_gcd(g: &BigInt) -> Self {
        if g.is_zero() {
            CohomologyGroup::Free
        } else {
            CohomologyGroup::Cyclic(g.clone())
        }
    }

    /// True if the group is `Z` or has `p`-torsion.
    fn survives_mod(&self, p: u64) -> bool {
        match self {
            CohomologyGroup::Free => true,
            CohomologyGroup::Cyclic(n) => (n % BigInt::from(p)).is_zero(),
        }
    }

    fn has_torsion(&self, p: u64) -> bool {
        matches!(self, CohomologyGroup::Cyclic(_)) && self.survives_mod(p)
    }
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyGroup::Free => write!(f, "Z"),
            CohomologyGroup::Cyclic(n) if n.is_one() => write!(f, "0"),
            CohomologyGroup::Cyclic(n) => write!(f, "Z/{n}"),
        }
    }
}

impl Serialize for CohomologyGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HkRow {
    pub degree: usize,
    pub group: CohomologyGroup,
}

/// `H^m(K; Z)` read off from `H^{2n} = H^{2n+3} = Z/g_n` (with `g_0 = 0`
/// giving the free classes in degrees 0 and 3, and `H^1 = 0`).
fn hk_degree(tables: &RankTwoTables, m: usize) -> CohomologyGroup {
    match m {
        1 => CohomologyGroup::Cyclic(BigInt::one()),
        _ if m % 2 == 0 => CohomologyGroup::from_gcd(tables.g(m / 2)),
        _ => CohomologyGroup::from_gcd(tables.g((m - 3) / 2)),
    }
}

/// Rows for every degree `0..=2N+1` and for `2N+3`.
pub fn hk_integral(a: u64, b: u64, max_n: usize) -> Result<Vec<HkRow>> {
    let tables = cd_sequences(a, b, max_n)?;
    let degrees = (0..=2 * max_n + 1).chain(std::iter::once(2 * max_n + 3));
    Ok(degrees.map(|m| HkRow { degree: m, group: hk_degree(&tables, m) }).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModpCrosscheck {
    pub k: u64,
    pub from_integral: PoincareSeries,
    pub expected: PoincareSeries,
    pub equal: bool,
}

/// Mod-p dimensions from the integral groups by universal coefficients,
/// `dim H^m(F_p) = [H^m free or with p-torsion] + [H^{m+1} with p-torsion]`,
/// compared with `(1 + t^3)(1 + t^{2k-1}) / (1 - t^{2k})`.
pub fn hk_modp_crosscheck(a: u64, b: u64, p: u64, max_degree: usize) -> Result<ModpCrosscheck> {
    let k = prime_order_closed(a, b, p)?.k as usize;
    let tables = cd_sequences(a, b, max_degree / 2 + 2)?;
    let dims: Vec<i64> = (0..=max_degree)
        .map(|m| {
            let here = i64::from(hk_degree(&tables, m).survives_mod(p));
            let above = i64::from(hk_degree(&tables, m + 1).has_torsion(p));
            here + above
        })
        .collect();
    let from_integral = PoincareSeries::new(dims);
    let mut numerator = vec![0i64; 2 * k + 3];
    for (i, &x) in [1i64, 1].iter().enumerate() {
        for (j, &y) in [1i64, 1].iter().enumerate() {
            numerator[3 * i + (2 * k - 1) * j] += x * y;
        }
    }
    let expected = PoincareSeries::geometric(2 * k, max_degree).mul_poly(&numerator);
    let equal = from_integral == expected;
    Ok(ModpCrosscheck { k: k as u64, from_integral, expected, equal })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfSeries {
    pub k: u64,
    pub computed: PoincareSeries,
    pub closed: PoincareSeries,
    pub equal: bool,
}

/// `dim A_{F_p}^{2n}` is 1 for `n = 0` or `p | g_n` and 0 otherwise; compared
/// with `1 / (1 - t^{2k})` up to degree `2N`.
pub fn hopf_afp_series(a: u64, b: u64, p: u64, max_n: usize) -> Result<HopfSeries> {
    let k = prime_order_closed(a, b, p)?.k;
    let tables = cd_sequences(a, b, max_n)?;
    let pb = BigInt::from(p);
    let mut dims = vec![0i64; 2 * max_n + 1];
    for n in 0..=max_n {
        dims[2 * n] = i64::from(n == 0 || (tables.g(n) % &pb).is_zero());
    }
    let computed = PoincareSeries::new(dims);
    let closed = PoincareSeries::geometric(2 * k as usize, 2 * max_n);
    let equal = computed == closed;
    Ok(HopfSeries { k, computed, closed, equal })
}

/// Order of `A_Z` in degree `2n`: `Z^2` on `delta_n, tau_n` modulo the
/// products of degree-2 classes with degree `2n - 2`, namely the rows
/// `(d_n, 0)`, `(1, d_{n-1})`, `(0, c_n)`, `(c_{n-1}, 1)`. The order is the gcd
/// of the 2x2 minors (0 means infinite).
pub fn az_presentation_order(tables: &RankTwoTables, n: usize) -> BigInt {
    assert!(n >= 1 && n <= tables.max_n());
    let one = BigInt::one();
    let zero = BigInt::zero();
    let rows = [
        (tables.d(n).clone(), zero.clone()),
        (one.clone(), tables.d(n - 1).clone()),
        (zero, tables.c(n).clone()),
        (tables.c(n - 1).clone(), one),
    ];
    let mut g = BigInt::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            let minor = &rows[i].0 * &rows[j].1 - &rows[i].1 * &rows[j].0;
            g = g.gcd(&minor);
        }
    }
    g
}

/// Terms of `Delta(x_n)` for `x = delta` or `tau` as pairs of
/// `(length, kind)`: the right factor keeps the kind of `x`, the left factor
/// of length `i` has the same kind iff `n - i` is even. Length-0 factors are
/// reported as `delta_0`.
pub fn closed_form_coproduct(kind: Kind, n: usize) -> Vec<((usize, Kind), (usize, Kind))> {
    let norm = |k: Kind, len: usize| if len == 0 { (0, Kind::Delta) } else { (len, k) };
    (0..=n)
        .map(|i| {
            let left = if (n - i) % 2 == 0 { kind } else { kind.other() };
            (norm(left, i), norm(kind, n - i))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualRow {
    pub n: usize,
    pub degree: usize,
    pub lambda_1: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCheck {
    pub k: u64,
    pub rows: Vec<DualRow>,
    pub holds: bool,
}

/// For `N = nk`, the coefficient `lambda_1` of `tau_k (x) tau_{N-k}` in
/// `Delta(tau_N)` computed in `A_{F_p}`, where degree `2j` (with `k | j`) is
/// spanned by `tau_j` and `delta_j = -d_{j-1} tau_j`. The powers of a degree
/// `2k` generator of the dual generate it iff every `lambda_1` is nonzero.
pub fn dual_polynomial_check(a: u64, b: u64, p: u64, n_max: usize) -> Result<DualCheck> {
    let k = prime_order_closed(a, b, p)?.k as usize;
    let field = PrimeField::new(p)?;
    let tables = cd_sequences(a, b, n_max * k)?;
    let group = WeylGroup::new(GeneralizedCartanMatrix::rank_two(a, b)?);
    let image = |kind: Kind, len: usize| -> u64 {
        match (kind, len) {
            (_, 0) | (Kind::Tau, _) => 1,
            (Kind::Delta, _) => field.neg(&field.from_int(tables.d(len - 1))),
        }
    };
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let top = n * k;
        let w = class_element(&group, Kind::Tau, top);
        let delta = peterson_coproduct(&group, &field, &w);
        let mut lambda = 0u64;
        for ((u, v), c) in delta.iter() {
            if u.length() != k {
                continue;
            }
            let (lu, ku) = classify(u);
            let (lv, kv) = classify(v);
            let term = field.mul(c, &field.mul(&image(ku, lu), &image(kv, lv)));
            lambda = field.add(&lambda, &term);
        }
        rows.push(DualRow { n, degree: 2 * top, lambda_1: lambda });
    }
    if rows.is_empty() {
        return Err(Error::Usage("n_max must be at least 1".into()));
    }
    let holds = rows.iter().all(|r| r.lambda_1 != 0);
    Ok(DualCheck { k: k as u64, rows, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;

    #[test]
    fn integral_cohomology() {
        let rows = hk_integral(2, 2, 5).unwrap();
        let show: Vec<String> = rows.iter().map(|r| r.group.to_string()).collect();
        assert_eq!(&show[..6], &["Z", "0", "0", "Z", "Z/2", "0"]);
        assert_eq!(rows.last().unwrap().degree, 13);
        let rows = hk_integral(2, 3, 4).unwrap();
        assert_eq!(rows[8].group, CohomologyGroup::Cyclic(4.into()));
    }

    #[test]
    fn modp_series() {
        for (a, b, p) in [(2, 2, 2), (2, 2, 3), (2, 3, 3), (1, 5, 2)] {
            let r = hk_modp_crosscheck(a, b, p, 40).unwrap();
            assert!(r.equal, "({a},{b},{p}): {} vs {}", r.from_integral, r.expected);
            assert_eq!((r.from_integral.coeff(0), r.from_integral.coeff(3)), (1, 1 + i64::from(r.k == 2)));
        }
    }

    #[test]
    fn hopf_series() {
        let h = hopf_afp_series(2, 2, 2, 10).unwrap();
        assert!(h.equal);
        assert_eq!(h.k, 2);
        let h = hopf_afp_series(1, 5, 2, 10).unwrap();
        assert!(h.equal);
        assert_eq!(h.computed.coeff(6), 1);
    }

    #[test]
    fn presentation_order_is_gcd() {
        for (a, b) in [(2, 2), (2, 3), (1, 5), (3, 7)] {
            let t = cd_sequences(a, b, 20).unwrap();
            for n in 1..=20 {
                assert_eq!(az_presentation_order(&t, n), t.g(n).clone());
            }
        }
    }

    #[test]
    fn coproduct_closed_form_matches_enumeration() {
        let g = WeylGroup::new(GeneralizedCartanMatrix::rank_two(2, 3).unwrap());
        for n in 0..8 {
            for kind in [Kind::Delta, Kind::Tau] {
                let w = class_element(&g, kind, n);
                let got: Vec<_> = peterson_coproduct(&g, &Integers, &w)
                    .iter()
                    .map(|((u, v), c)| {
                        assert_eq!(c, &BigInt::one());
                        (classify(u), classify(v))
                    })
                    .collect();
                let mut want = closed_form_coproduct(kind, n);
                want.sort();
                assert_eq!(got.len(), n + 1);
                let mut got = got;
                got.sort();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn dual_generators() {
        let r = dual_polynomial_check(2, 2, 3, 10).unwrap();
        assert!(r.holds, "{:?}", r.rows);
        assert!(dual_polynomial_check(2, 3, 3, 8).unwrap().holds);
    }
}
