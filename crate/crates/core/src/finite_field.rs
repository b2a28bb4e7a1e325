//! Arithmetic in `F_p` and `F_{p^2}`: square roots, roots of monic
//! quadratics, multiplicative orders and 2x2 matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::is_prime;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Euler's criterion; 0 counts as a square.
pub fn is_square_mod(a: u64, p: u64) -> bool {
    let a = a % p;
    p == 2 || a == 0 || powmod(a, (p - 1) / 2, p) == 1
}

/// Square root of a quadratic residue modulo an odd prime (Tonelli-Shanks).
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if !is_square_mod(a, p) {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| !is_square_mod(z, p)).expect("odd prime has a non-residue");
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(a, q, p);
    let mut r = powmod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulmod(t2, t2, p);
            i += 1;
        }
        let b = powmod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

/// Prime factors of `n` by trial division, ascending and without repeats.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The field `F_p[theta] / (theta^2 - c1 theta - c0)`.
///
/// For odd `p`, `c1 = 0` and `c0` is the least positive non-residue; for
/// `p = 2` the modulus is `theta^2 + theta + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2 {
    p: u64,
    c0: u64,
    c1: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2Element {
    field: Fp2,
    x: u64,
    y: u64,
}

impl Fp2 {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Usage(format!("prime {p} exceeds the supported range")));
        }
        if p == 2 {
            return Ok(Fp2 { p, c0: 1, c1: 1 });
        }
        let s = (2..p).find(|&s| !is_square_mod(s, p)).expect("odd prime has a non-residue");
        Ok(Fp2 { p, c0: s, c1: 0 })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `theta^2` for odd `p` (the chosen non-residue).
    pub fn non_residue(&self) -> u64 {
        self.c0
    }

    pub fn element(&self, x: u64, y: u64) -> Fp2Element {
        Fp2Element { field: *self, x: x % self.p, y: y % self.p }
    }

    pub fn from_i64(&self, n: i64) -> Fp2Element {
        self.element(n.rem_euclid(self.p as i64) as u64, 0)
    }

    pub fn zero(&self) -> Fp2Element {
        self.element(0, 0)
    }

    pub fn one(&self) -> Fp2Element {
        self.element(1, 0)
    }

    pub fn theta(&self) -> Fp2Element {
        self.element(0, 1)
    }

    /// All `p^2` elements, `x` varying fastest.
    pub fn elements(&self) -> impl Iterator<Item = Fp2Element> + '_ {
        (0..self.p).flat_map(move |y| (0..self.p).map(move |x| self.element(x, y)))
    }

    /// A square root of `a` in `F_{p^2}`; for a non-residue `a = s t` the
    /// root is `sqrt(t) theta`.
    pub fn sqrt(&self, a: u64) -> Fp2Element {
        let a = a % self.p;
        if self.p == 2 {
            return self.element(a, 0);
        }
        if let Some(r) = sqrt_mod(a, self.p) {
            return self.element(r, 0);
        }
        let s_inv = powmod(self.c0, self.p - 2, self.p);
        let t = mulmod(a, s_inv, self.p);
        let r = sqrt_mod(t, self.p).expect("quotient of non-residues is a residue");
        self.element(0, r)
    }

    /// Both roots of `x^2 + b x + c`. Completing the square for odd `p`,
    /// exhaustive search over `F_4` for `p = 2`.
    pub fn quadratic_roots(&self, b: u64, c: u64) -> (Fp2Element, Fp2Element) {
        let (b, c) = (self.element(b, 0), self.element(c, 0));
        if self.p == 2 {
            let roots: Vec<Fp2Element> = self.elements().filter(|&x| (x * x + b * x + c).is_zero()).collect();
            return match roots.as_slice() {
                [r] => (*r, *r),
                [r, s] => (*r, *s),
                _ => unreachable!("a quadratic over F_2 splits over F_4"),
            };
        }
        let disc = b * b - self.from_i64(4) * c;
        debug_assert!(disc.y == 0);
        let root = self.sqrt(disc.x);
        let half = self.from_i64(2).inv().expect("p is odd");
        ((-b + root) * half, (-b - root) * half)
    }
}

impl Fp2Element {
    pub fn field(&self) -> Fp2 {
        self.field
    }

    /// Coordinates `(x, y)` of `x + y theta`.
    pub fn coords(&self) -> (u64, u64) {
        (self.x, self.y)
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_one(&self) -> bool {
        self.x == 1 % self.field.p && self.y == 0
    }

    pub fn in_base_field(&self) -> bool {
        self.y == 0
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let p = self.field.p;
        Ok(self.pow(p * p - 2))
    }

    pub fn frobenius(&self) -> Self {
        self.pow(self.field.p)
    }

    /// Least `n >= 1` with `self^n = 1`, descending from `p^2 - 1` through
    /// its prime factors.
    pub fn multiplicative_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let p = self.field.p;
        let mut order = p * p - 1;
        for q in prime_factors(order) {
            while order % q == 0 && self.pow(order / q).is_one() {
                order /= q;
            }
        }
        Ok(order)
    }
}

impl std::ops::Add for Fp2Element {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let p = self.field.p;
        Fp2Element { field: self.field, x: (self.x + o.x) % p, y: (self.y + o.y) % p }
    }
}

impl std::ops::Neg for Fp2Element {
    type Output = Self;
    fn neg(self) -> Self {
        let p = self.field.p;
        Fp2Element { field: self.field, x: (p - self.x) % p, y: (p - self.y) % p }
    }
}

impl std::ops::Sub for Fp2Element {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl std::ops::Mul for Fp2Element {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let f = self.field;
        let p = f.p;
        // (x1 + y1 t)(x2 + y2 t) with t^2 = c0 + c1 t
        let yy = mulmod(self.y, o.y, p);
        let x = (mulmod(self.x, o.x, p) + mulmod(yy, f.c0, p)) % p;
        let y = (mulmod(self.x, o.y, p) + mulmod(self.y, o.x, p) + mulmod(yy, f.c1, p)) % p;
        Fp2Element { field: f, x, y }
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 2 {
            write!(f, "mod 2, θ²=θ+1")
        } else {
            write!(f, "mod {}, θ²={}", self.p, self.c0)
        }
    }
}

impl fmt::Display for Fp2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·θ ({})", self.x, self.y, self.field)
    }
}

/// 2x2 matrix over `F_{p^2}`, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[Fp2Element; 2]; 2]);

impl Mat2 {
    pub fn identity(field: &Fp2) -> Self {
        Mat2([[field.one(), field.zero()], [field.zero(), field.one()]])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn apply(&self, v: [Fp2Element; 2]) -> [Fp2Element; 2] {
        let a = &self.0;
        [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
    }

    pub fn scale(&self, c: Fp2Element) -> Mat2 {
        let a = &self.0;
        Mat2([[c * a[0][0], c * a[0][1]], [c * a[1][0], c * a[1][1]]])
    }

    pub fn pow(&self, mut e: u64) -> Mat2 {
        let field = self.0[0][0].field();
        let mut base = *self;
        let mut acc = Mat2::identity(&field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}
