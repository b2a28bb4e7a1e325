//! `H*(BT)` as a polynomial ring on degree-2 generators, with the Weyl
//! action, divided differences, the characteristic map to the Schubert
//! module, generalized invariants and the total Steenrod operation.
//!
//! Degrees inside this module are polynomial degrees ("half degrees"); a
//! polynomial of degree `d` has topological degree `2d`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcm::{GeneralizedCartanMatrix, Realization};
use crate::linalg;
use crate::ring::{CoeffRing, Field, Integers, PrimeField};
use crate::schubert::SchubertVector;
use crate::series::PoincareSeries;
use crate::weyl::{WeylElement, WeylGroup};

type Exponents = Vec<u32>;

#[derive(Clone, Debug)]
pub struct GradedPolynomial<R: CoeffRing> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<Exponents, R::Elem>,
}

impl<R: CoeffRing> PartialEq for GradedPolynomial<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.nvars == other.nvars && self.terms == other.terms
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyTermDto {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

impl<R: CoeffRing> GradedPolynomial<R> {
    pub fn zero(ring: &R, nvars: usize) -> Self {
        GradedPolynomial { ring: ring.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(ring: &R, nvars: usize, c: R::Elem) -> Self {
        Self::monomial(ring, vec![0; nvars], c)
    }

    pub fn one(ring: &R, nvars: usize) -> Self {
        Self::constant(ring, nvars, ring.one())
    }

    pub fn monomial(ring: &R, exponents: Exponents, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// The coordinate function `x_k`.
    pub fn variable(ring: &R, nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(ring, e, ring.one())
    }

    /// `sum_k c_k x_k` for an integer covector.
    pub fn linear_form(ring: &R, covector: &[BigInt]) -> Self {
        let n = covector.len();
        let mut p = Self::zero(ring, n);
        for (k, c) in covector.iter().enumerate() {
            let mut e = vec![0; n];
            e[k] = 1;
            p.add_term(e, ring.from_int(c));
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &R::Elem)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Exponents, c: R::Elem) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector has the wrong length");
        if self.ring.is_zero(&c) {
            return;
        }
        let sum = match self.terms.get(&exponents) {
            Some(old) => self.ring.add(old, &c),
            None => c,
        };
        if self.ring.is_zero(&sum) {
            self.terms.remove(&exponents);
        } else {
            self.terms.insert(exponents, sum);
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "polynomials over different rings");
        assert_eq!(self.nvars, other.nvars, "polynomials in different numbers of variables");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), self.ring.neg(c))).collect();
        GradedPolynomial { ring: self.ring.clone(), nvars: self.nvars, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), self.ring.mul(c, x));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, self.ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Highest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| total(e)).max()
    }

    /// True if every term has the same total degree (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| total(e));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    pub fn constant_term(&self) -> R::Elem {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// The ring homomorphism `x_k -> images[k]`.
    pub fn substitute(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let nv = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<Self>> = images.iter().map(|p| vec![Self::one(&self.ring, nv), p.clone()]).collect();
        let mut out = Self::zero(&self.ring, nv);
        for (e, c) in &self.terms {
            let mut term = Self::constant(&self.ring, nv, c.clone());
            for (k, &ek) in e.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                while powers[k].len() <= ek as usize {
                    let next = powers[k].last().unwrap().mul(&images[k]);
                    powers[k].push(next);
                }
                term = term.mul(&powers[k][ek as usize]);
            }
            for (e2, c2) in term.terms {
                out.add_term(e2, c2);
            }
        }
        out
    }

    /// An integer preimage, coefficient by coefficient.
    pub fn lift(&self) -> Option<GradedPolynomial<Integers>> {
        let mut out = GradedPolynomial::zero(&Integers, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), self.ring.lift(c)?);
        }
        Some(out)
    }

    /// Image under the canonical map `Z -> R`.
    pub fn from_integers(ring: &R, p: &GradedPolynomial<Integers>) -> Self {
        let mut out = Self::zero(ring, p.nvars);
        for (e, c) in &p.terms {
            out.add_term(e.clone(), ring.from_int(c));
        }
        out
    }

    pub fn to_dto(&self) -> Vec<PolyTermDto> {
        self.terms
            .iter()
            .map(|(e, c)| PolyTermDto { exponents: e.clone(), coefficient: self.ring.format(c) })
            .collect()
    }

    /// Exact quotient by a nonzero linear form, or `None` if the division
    /// leaves a remainder or needs a non-integral coefficient.
    ///
    /// With `alpha = c x_v + beta` and `g = sum_j g_j x_v^j` the quotient
    /// `q = sum_j q_j x_v^j` satisfies `c q_{j-1} = g_j - beta q_j`, solved
    /// from the top power down.
    pub fn div_linear(&self, alpha: &Self) -> Option<Self> {
        self.check(alpha);
        let ring = &self.ring;
        let mut pivot = None;
        for (e, c) in &alpha.terms {
            if total(e) != 1 {
                return None;
            }
            let v = e.iter().position(|&x| x == 1).expect("linear term");
            let unit = ring.div_exact(&ring.one(), c).is_some();
            if pivot.is_none() || (unit && !pivot.as_ref().is_some_and(|(_, _, u)| *u)) {
                pivot = Some((v, c.clone(), unit));
            }
        }
        let (v, c, _) = pivot?;
        let mut beta = alpha.clone();
        let mut ev = vec![0; self.nvars];
        ev[v] = 1;
        beta.terms.remove(&ev);

        let mut slices: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, x) in &self.terms {
            let mut rest = e.clone();
            let j = rest[v];
            rest[v] = 0;
            slices.entry(j).or_insert_with(|| Self::zero(ring, self.nvars)).add_term(rest, x.clone());
        }
        let top = match slices.keys().next_back() {
            None => return Some(Self::zero(ring, self.nvars)),
            Some(&t) => t,
        };
        let mut quotient = Self::zero(ring, self.nvars);
        let mut q_j = Self::zero(ring, self.nvars);
        for j in (1..=top).rev() {
            let g_j = slices.remove(&j).unwrap_or_else(|| Self::zero(ring, self.nvars));
            let num = g_j.sub(&beta.mul(&q_j));
            let mut q_prev = Self::zero(ring, self.nvars);
            for (e, x) in &num.terms {
                q_prev.add_term(e.clone(), ring.div_exact(x, &c)?);
            }
            for (e, x) in &q_prev.terms {
                let mut e = e.clone();
                e[v] = j - 1;
                quotient.add_term(e, x.clone());
            }
            q_j = q_prev;
        }
        let g_0 = slices.remove(&0).unwrap_or_else(|| Self::zero(ring, self.nvars));
        g_0.sub(&beta.mul(&q_j)).is_zero().then_some(quotient)
    }
}

fn total(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl<R: CoeffRing> fmt::Display for GradedPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            let coeff = self.ring.format(c);
            let is_const = e.iter().all(|&x| x == 0);
            let mut prefix = "";
            if is_const || (coeff != "1" && coeff != "-1") {
                factors.push(coeff);
            } else if coeff == "-1" {
                prefix = "-";
            }
            for (k, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(format!("x{}", k + 1)),
                    _ => factors.push(format!("x{}^{x}", k + 1)),
                }
            }
            parts.push(format!("{prefix}{}", factors.join("*")));
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in reverse
/// lexicographic order of the exponent vector.
pub fn monomials(n: usize, d: usize) -> Vec<Exponents> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in (0..=d).rev() {
            prefix.push(x);
            rec(n, d - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d as u32, &mut Vec::new(), &mut out);
    out
}

/// `binomial(n + d - 1, d)`.
pub fn monomial_count(n: usize, d: usize) -> usize {
    monomials(n, d).len()
}

/// `H*(BT; R)` for the standard realization of a generalized Cartan matrix.
#[derive(Clone, Debug)]
pub struct TorusCohomology<R: CoeffRing> {
    group: WeylGroup,
    realization: Realization,
    ring: R,
    roots: Vec<GradedPolynomial<R>>,
}

impl<R: CoeffRing> TorusCohomology<R> {
    pub fn new(gcm: GeneralizedCartanMatrix, ring: R) -> Self {
        let realization = gcm.standard_realization();
        let roots = realization.roots.iter().map(|a| GradedPolynomial::linear_form(&ring, a)).collect();
        TorusCohomology { group: WeylGroup::new(gcm), realization, ring, roots }
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        self.group.gcm()
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.realization.torus_rank
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn zero(&self) -> GradedPolynomial<R> {
        GradedPolynomial::zero(&self.ring, self.nvars())
    }

    pub fn one(&self) -> GradedPolynomial<R> {
        GradedPolynomial::one(&self.ring, self.nvars())
    }

    pub fn constant(&self, c: i64) -> GradedPolynomial<R> {
        GradedPolynomial::constant(&self.ring, self.nvars(), self.ring.from_i64(c))
    }

    pub fn variable(&self, k: usize) -> GradedPolynomial<R> {
        GradedPolynomial::variable(&self.ring, self.nvars(), k)
    }

    /// The root `alpha_i` as a linear form.
    pub fn alpha(&self, i: usize) -> GradedPolynomial<R> {
        self.roots[i].clone()
    }

    /// The dual character `h_i*`.
    pub fn h_dual(&self, i: usize) -> GradedPolynomial<R> {
        GradedPolynomial::linear_form(&self.ring, &self.realization.dual_basis[i])
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// `r_i` acts on linear forms by `lambda -> lambda - lambda(h_i) alpha_i`
    /// and extends multiplicatively.
    pub fn weyl_act(&self, i: usize, f: &GradedPolynomial<R>) -> GradedPolynomial<R> {
        let h = &self.realization.coroots[i];
        let images: Vec<_> = (0..self.nvars())
            .map(|k| {
                let x = self.variable(k);
                if h[k].is_zero() {
                    x
                } else {
                    x.sub(&self.roots[i].scale(&self.ring.from_int(&h[k])))
                }
            })
            .collect();
        f.substitute(&images)
    }

    /// `A_i(f) = (f - r_i f) / alpha_i`.
    ///
    /// When `alpha_i` vanishes in `R` (for example a root divisible by `p`),
    /// the operator is computed on an integer lift and reduced back, which is
    /// well defined because `A_i` preserves integral polynomials.
    pub fn divided_difference(&self, i: usize, f: &GradedPolynomial<R>) -> Result<GradedPolynomial<R>> {
        self.check_index(i)?;
        if self.roots[i].is_zero() {
            let lifted = f.lift().ok_or(Error::InexactDivision)?;
            let z = TorusCohomology::new(self.gcm().clone(), Integers);
            let q = z.divided_difference(i, &lifted)?;
            return Ok(GradedPolynomial::from_integers(&self.ring, &q));
        }
        let g = f.sub(&self.weyl_act(i, f));
        g.div_linear(&self.roots[i]).ok_or(Error::InexactDivision)
    }

    /// `A_{i_1} ... A_{i_k} f`, applying `A_{i_k}` first.
    pub fn divided_difference_word(&self, word: &[usize], f: &GradedPolynomial<R>) -> Result<GradedPolynomial<R>> {
        let mut g = f.clone();
        for &i in word.iter().rev() {
            g = self.divided_difference(i, &g)?;
        }
        Ok(g)
    }

    /// `A_w f` for every `w` of length `d`, obtained by growing `w` on the
    /// left: `A_{r_i v} = A_i A_v` whenever `l(r_i v) = l(v) + 1`.
    fn composite_images(&self, f: &GradedPolynomial<R>, d: usize) -> Result<BTreeMap<WeylElement, GradedPolynomial<R>>> {
        let mut layer = BTreeMap::from([(self.group.identity(), f.clone())]);
        for _ in 0..d {
            let mut next = BTreeMap::new();
            for (v, g) in &layer {
                for i in 0..self.rank() {
                    let r = self.group.simple_reflection(i)?;
                    let u = self.group.multiply(&r, v);
                    if u.length() <= v.length() || next.contains_key(&u) {
                        continue;
                    }
                    let image = self.divided_difference(i, g)?;
                    next.insert(u, image);
                }
            }
            layer = next;
        }
        Ok(layer)
    }

    /// The characteristic homomorphism `psi*` on a homogeneous polynomial.
    ///
    /// The coefficient of `delta^w` in any class `x` is `L_e(A_w x)` since
    /// `L_w = L_e o A_w` on the Schubert module. As `psi*` commutes with every
    /// `A_i` and is the identity in degree zero, the coefficient of `delta^w`
    /// in `psi*(f)` is the constant `A_w f` for `l(w) = deg f`.
    pub fn characteristic_map(&self, f: &GradedPolynomial<R>) -> Result<SchubertVector<R>> {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let mut out = SchubertVector::zero(&self.group, &self.ring);
        let Some(d) = f.degree() else {
            return Ok(out);
        };
        for (w, g) in self.composite_images(f, d)? {
            out.add_term(w, g.constant_term());
        }
        Ok(out)
    }

    /// Polynomial parser for expressions such as `x1^2*x2 - 3*a1 + 2`.
    /// `x<k>` is the k-th coordinate (`h_k*` for `k <= rank`), `a<i>` the root
    /// `alpha_i`; indices are 1-based. Parentheses and `^` are allowed.
    pub fn parse(&self, s: &str) -> Result<GradedPolynomial<R>> {
        let mut p = Parser { ctx: self, chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let out = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("unexpected input at position {} of {s:?}", p.pos)));
        }
        Ok(out)
    }
}

struct Parser<'a, R: CoeffRing> {
    ctx: &'a TorusCohomology<R>,
    chars: Vec<char>,
    pos: usize,
}

impl<R: CoeffRing> Parser<'_, R> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn expr(&mut self) -> Result<GradedPolynomial<R>> {
        let mut acc = self.ctx.zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<GradedPolynomial<R>> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<GradedPolynomial<R>> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number().ok_or_else(|| Error::Parse("expected exponent".into()))?;
            let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent {e}")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<GradedPolynomial<R>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c @ ('x' | 'a')) => {
                self.pos += 1;
                let idx = self.number().ok_or_else(|| Error::Parse(format!("expected index after {c}")))?;
                let k: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index {idx}")))?;
                let (limit, what) = if c == 'x' {
                    (self.ctx.nvars(), "variable")
                } else {
                    (self.ctx.rank(), "root")
                };
                if k == 0 || k > limit {
                    return Err(Error::Parse(format!("{what} index {k} outside 1..={limit}")));
                }
                Ok(if c == 'x' { self.ctx.variable(k - 1) } else { self.ctx.alpha(k - 1) })
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number().expect("digit present");
                let v = self.ctx.ring.parse(&n)?;
                Ok(GradedPolynomial::constant(&self.ctx.ring, self.ctx.nvars(), v))
            }
            other => Err(Error::Parse(format!("unexpected {other:?} at position {}", self.pos))),
        }
    }
}

/// One row of an invariants report, in topological degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub monomials: usize,
    pub dim_j: usize,
    pub dim_s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsReport {
    pub per_degree: Vec<DegreeRow>,
    pub series: PoincareSeries,
    /// The `d_i` with `P_t(S) (1 - t^2)^n = prod (1 - t^{2 d_i})`, or `None`
    /// if no such product fits the computed range.
    pub factor_degrees: Option<Vec<usize>>,
}

impl<F: Field> TorusCohomology<F> {
    /// Matrix of `m -> (L_e(A_w m))_w` on the monomials of degree `d`.
    fn evaluation_matrix(&self, d: usize) -> Result<(Vec<Exponents>, Vec<Vec<F::Elem>>)> {
        let monos = monomials(self.nvars(), d);
        let elements = self.group.enumerate_by_length(d).get(d).cloned().unwrap_or_default();
        let mut rows = vec![vec![self.ring.zero(); monos.len()]; elements.len()];
        for (col, e) in monos.iter().enumerate() {
            let m = GradedPolynomial::monomial(&self.ring, e.clone(), self.ring.one());
            let image = self.characteristic_map(&m)?;
            for (row, w) in elements.iter().enumerate() {
                rows[row][col] = image.coefficient(w);
            }
        }
        Ok((monos, rows))
    }

    /// `J_d = ker psi*` in degree `d` (half degree), as a basis of polynomials.
    pub fn generalized_invariants(&self, d: usize) -> Result<Vec<GradedPolynomial<F>>> {
        let (monos, rows) = self.evaluation_matrix(d)?;
        let basis = if rows.is_empty() {
            (0..monos.len())
                .map(|i| {
                    let mut v = vec![self.ring.zero(); monos.len()];
                    v[i] = self.ring.one();
                    v
                })
                .collect()
        } else {
            linalg::kernel(&self.ring, &rows, monos.len())
        };
        Ok(basis
            .into_iter()
            .map(|v| {
                let mut p = self.zero();
                for (e, c) in monos.iter().zip(v) {
                    p.add_term(e.clone(), c);
                }
                p
            })
            .collect())
    }

    pub fn invariants_dimension(&self, d: usize) -> Result<usize> {
        let (monos, rows) = self.evaluation_matrix(d)?;
        Ok(monos.len() - linalg::field_rank(&self.ring, &rows, monos.len()))
    }

    /// Dimensions of `J` and `S = H*(BT)/J` up to half degree `max_deg`, the
    /// Poincare series of `S`, and its factorization.
    pub fn s_poincare(&self, max_deg: usize) -> Result<InvariantsReport> {
        let mut per_degree = Vec::new();
        let mut coeffs = vec![0i64; 2 * max_deg + 1];
        for d in 0..=max_deg {
            let monos = monomial_count(self.nvars(), d);
            let dim_j = self.invariants_dimension(d)?;
            let dim_s = monos - dim_j;
            coeffs[2 * d] = dim_s as i64;
            per_degree.push(DegreeRow { degree: 2 * d, monomials: monos, dim_j, dim_s });
        }
        let series = PoincareSeries::new(coeffs);
        let factor_degrees = series.factor_even_product(self.nvars());
        Ok(InvariantsReport { per_degree, series, factor_degrees })
    }

    /// Polynomials of half degree `d` fixed by every simple reflection.
    pub fn weyl_invariants(&self, d: usize) -> Vec<GradedPolynomial<F>> {
        let monos = monomials(self.nvars(), d);
        let mut rows = Vec::new();
        for i in 0..self.rank() {
            let images: Vec<GradedPolynomial<F>> = monos
                .iter()
                .map(|e| {
                    let m = GradedPolynomial::monomial(&self.ring, e.clone(), self.ring.one());
                    self.weyl_act(i, &m).sub(&m)
                })
                .collect();
            for target in &monos {
                rows.push(images.iter().map(|p| p.terms.get(target).cloned().unwrap_or_else(|| self.ring.zero())).collect());
            }
        }
        linalg::kernel(&self.ring, &rows, monos.len())
            .into_iter()
            .map(|v| {
                let mut p = self.zero();
                for (e, c) in monos.iter().zip(v) {
                    p.add_term(e.clone(), c);
                }
                p
            })
            .collect()
    }
}

impl TorusCohomology<PrimeField> {
    /// The total Steenrod operation: the ring map `x_k -> x_k + x_k^p`.
    pub fn total_steenrod(&self, f: &GradedPolynomial<PrimeField>) -> GradedPolynomial<PrimeField> {
        let p = self.ring.modulus() as u32;
        let images: Vec<_> = (0..self.nvars())
            .map(|k| {
                let x = self.variable(k);
                x.add(&x.pow(p))
            })
            .collect();
        f.substitute(&images)
    }

    /// Evaluates both sides of `A_i(P f) = (1 + alpha_i^{p-1}) P(A_i f)`.
    pub fn steenrod_commutation_check(&self, i: usize, f: &GradedPolynomial<PrimeField>) -> Result<bool> {
        let p = self.ring.modulus() as u32;
        let lhs = self.divided_difference(i, &self.total_steenrod(f))?;
        let factor = self.one().add(&self.alpha(i).pow(p - 1));
        let rhs = factor.mul(&self.total_steenrod(&self.divided_difference(i, f)?));
        Ok(lhs == rhs)
    }
}
