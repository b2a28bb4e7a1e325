//! The least `k` with `p | g_k`, computed three ways, and the valuation
//! identity `v_p(g_{sk}) = v_p(s) + v_p(g_k)`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::sequences::{check_params, CdStream};
use crate::error::{Error, Result};
use crate::finite_field::{Fp2, Mat2};
use crate::ring::{is_prime, valuation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrimeOrderCase {
    /// `p` divides exactly one of `a`, `b`: `k = 2p`.
    DividesOneOf,
    /// `ab = 4 mod p` otherwise: `k = p`.
    ABCongruent4,
    /// `k` is the multiplicative order of a root of `x^2 - (ab-2)x + 1`.
    RootOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDetail {
    pub polynomial: String,
    pub root: String,
    pub other_root: String,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeOrderResult {
    pub p: u64,
    pub k: u64,
    pub case: PrimeOrderCase,
    pub detail: Option<RootDetail>,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// The case analysis of the prime-order theorem.
pub fn prime_order_closed(a: u64, b: u64, p: u64) -> Result<PrimeOrderResult> {
    check_params(a, b)?;
    check_prime(p)?;
    let (pa, pb) = (a % p == 0, b % p == 0);
    if pa != pb {
        return Ok(PrimeOrderResult { p, k: 2 * p, case: PrimeOrderCase::DividesOneOf, detail: None });
    }
    let ab = (a % p) * (b % p) % p;
    if ab == 4 % p {
        return Ok(PrimeOrderResult { p, k: p, case: PrimeOrderCase::ABCongruent4, detail: None });
    }
    let field = Fp2::new(p)?;
    // x^2 - (ab - 2) x + 1 with the linear coefficient reduced mod p
    let lin = (2 * p + 2 - ab) % p;
    let (r, s) = field.quadratic_roots(lin, 1);
    let order = r.multiplicative_order()?;
    let trace = (ab + p - 2) % p;
    let detail = RootDetail {
        polynomial: format!("x^2 - {trace}x + 1 over F_{p}"),
        root: r.to_string(),
        other_root: s.to_string(),
        order,
    };
    Ok(PrimeOrderResult { p, k: order, case: PrimeOrderCase::RootOrder, detail: Some(detail) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub k: Option<u64>,
    pub bound: usize,
    /// `p | g_n` iff `k | n` for `1 <= n <= bound`; false if `k` was not found.
    pub pattern_holds: bool,
}

/// First `n` in `1..=bound` with `p | g_n`, and the divisibility pattern.
pub fn prime_order_scan(a: u64, b: u64, p: u64, bound: usize) -> Result<ScanResult> {
    check_params(a, b)?;
    check_prime(p)?;
    let pb = BigInt::from(p);
    let divisible: Vec<bool> = CdStream::new(a, b)
        .take(bound + 1)
        .skip(1)
        .map(|(_, c, d)| (&c % &pb).is_zero() && (&d % &pb).is_zero())
        .collect();
    let k = divisible.iter().position(|&x| x).map(|i| i as u64 + 1);
    let pattern_holds = match k {
        None => false,
        Some(k) => divisible.iter().enumerate().all(|(i, &x)| x == ((i as u64 + 1) % k == 0)),
    };
    Ok(ScanResult { k, bound, pattern_holds })
}

/// Orbit computation with `M = (1/2)(mu, a; b, mu)`, `mu^2 = ab - 4` in
/// `F_{p^2}`. For `mu != 0` the answer is the least `n` with
/// `M^{2n} (1,1) = (1,1)`; for `mu = 0` (so `M = M^{-1}`) it is the least `n`
/// with `n M^{n+1} (1,1) = 0`.
pub fn matrix_order_method(a: u64, b: u64, p: u64) -> Result<u64> {
    check_params(a, b)?;
    check_prime(p)?;
    if p == 2 {
        return Err(Error::OddPrimeRequired(p));
    }
    let f = Fp2::new(p)?;
    let ab4 = ((a % p) * (b % p) + 4 * p - 4) % p;
    let mu = f.sqrt(ab4);
    let half = f.from_i64(2).inv()?;
    let (ea, eb) = (f.element(a, 0), f.element(b, 0));
    let m = Mat2([[mu, ea], [eb, mu]]).scale(half);
    let ones = [f.one(), f.one()];
    let bound = 4 * p * p;
    if mu.is_zero() {
        let mut power = m;
        for n in 1..=bound {
            power = power.mul(&m);
            let v = power.apply(ones);
            let scaled = [f.from_i64(n as i64) * v[0], f.from_i64(n as i64) * v[1]];
            if scaled[0].is_zero() && scaled[1].is_zero() {
                return Ok(n);
            }
        }
    } else {
        let m2 = m.mul(&m);
        let mut v = ones;
        for n in 1..=bound {
            v = m2.apply(v);
            if v == ones {
                return Ok(n);
            }
        }
    }
    Err(Error::TheoremViolation(format!("no period of M within {bound} steps for ({a},{b}), p = {p}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BocksteinRow {
    pub s: u64,
    pub nu_g_sk: u64,
    pub nu_s_plus_nu_g_k: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BocksteinReport {
    pub k: u64,
    pub rows: Vec<BocksteinRow>,
    pub holds: bool,
}

/// Checks `v_p(g_{sk}) = v_p(s) + v_p(g_k)` for `s = 1..=s_max`, streaming the
/// sequence so only the current pair of big integers is kept.
pub fn bockstein_valuation_check(a: u64, b: u64, p: u64, s_max: u64) -> Result<BocksteinReport> {
    let k = prime_order_closed(a, b, p)?.k;
    let last = (s_max * k) as usize;
    let mut nu_g = Vec::new();
    for (n, c, d) in CdStream::new(a, b).take(last + 1) {
        if n == 0 || n as u64 % k != 0 {
            continue;
        }
        let vc = valuation(&c, p).expect("c_n > 0");
        let vd = valuation(&d, p).expect("d_n > 0");
        nu_g.push(vc.min(vd));
    }
    let nu_k = nu_g[0];
    let rows: Vec<BocksteinRow> = nu_g
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let s = i as u64 + 1;
            BocksteinRow { s, nu_g_sk: v, nu_s_plus_nu_g_k: valuation(&BigInt::from(s), p).expect("s > 0") + nu_k }
        })
        .collect();
    let holds = rows.iter().all(|r| r.nu_g_sk == r.nu_s_plus_nu_g_k);
    Ok(BocksteinReport { k, rows, holds })
}
