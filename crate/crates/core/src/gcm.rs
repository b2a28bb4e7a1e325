//! Generalized Cartan matrices, Coxeter exponents, spherical subsets and
//! an explicit integral realization of the Cartan lattice.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// A validated generalized Cartan matrix `A = (a_ij)` over an ordered index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedCartanMatrix {
    labels: Vec<String>,
    entries: Vec<Vec<BigInt>>,
}

/// On-disk form: `{"labels": [...], "rows": [[...], ...]}`. Labels are optional
/// and default to `1..=n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GcmFile {
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub rows: Vec<Vec<i64>>,
}

impl GeneralizedCartanMatrix {
    /// Checks the three axioms. Labels default to `"1"`, `"2"`, ...
    pub fn validate(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let labels = (1..=entries.len()).map(|i| i.to_string()).collect();
        Self::with_labels(labels, entries)
    }

    pub fn with_labels(labels: Vec<String>, entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) || labels.len() != n {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            if entries[i][i] != BigInt::from(2) {
                return Err(Error::DiagonalNotTwo { index: i, value: entries[i][i].to_string() });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && entries[i][j].is_positive() {
                    return Err(Error::PositiveOffDiagonal {
                        row: i,
                        col: j,
                        value: entries[i][j].to_string(),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && entries[i][j].is_zero() != entries[j][i].is_zero() {
                    return Err(Error::ZeroAsymmetry { row: i, col: j });
                }
            }
        }
        Ok(GeneralizedCartanMatrix { labels, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::validate(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// `A(a,b) = [[2, -a], [-b, 2]]`.
    pub fn rank_two(a: u64, b: u64) -> Result<Self> {
        Self::validate(vec![
            vec![BigInt::from(2), -BigInt::from(a)],
            vec![-BigInt::from(b), BigInt::from(2)],
        ])
    }

    /// Parses the inline form `"2,-1;-1,2"` (rows separated by `;`).
    pub fn parse_inline(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::validate(rows)
    }

    pub fn from_file(file: GcmFile) -> Result<Self> {
        let n = file.rows.len();
        let labels = file.labels.unwrap_or_else(|| (1..=n).map(|i| i.to_string()).collect());
        Self::with_labels(
            labels,
            file.rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        let file: GcmFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Small entries as `i64`, for callers that know the matrix is modest.
    pub fn entry_i64(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j].to_i64().expect("Cartan entry fits in i64")
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// Order `m_ij` of `r_i r_j`, from the product `a_ij a_ji`.
    pub fn coxeter_exponent(&self, i: usize, j: usize) -> Result<CoxeterExponent> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Ok(CoxeterExponent::Finite(1));
        }
        let prod = &self.entries[i][j] * &self.entries[j][i];
        Ok(match prod.to_u64() {
            Some(0) => CoxeterExponent::Finite(2),
            Some(1) => CoxeterExponent::Finite(3),
            Some(2) => CoxeterExponent::Finite(4),
            Some(3) => CoxeterExponent::Finite(6),
            _ => CoxeterExponent::Infinite,
        })
    }

    /// Principal submatrix on the (sorted) index subset.
    pub fn submatrix(&self, subset: &[usize]) -> Vec<Vec<BigInt>> {
        subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect()
    }

    /// `W_J` is finite iff every principal minor of `A_J` is positive.
    pub fn is_finite_type(&self, subset: &[usize]) -> bool {
        let k = subset.len();
        (1u64..(1u64 << k)).all(|mask| {
            let sub: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| subset[b]).collect();
            linalg::det(&self.submatrix(&sub)).is_positive()
        })
    }

    pub fn spherical_poset(&self) -> SphericalPoset {
        let n = self.rank();
        let mut subsets: Vec<Vec<usize>> = (0u64..(1u64 << n))
            .map(|mask| (0..n).filter(|b| mask >> b & 1 == 1).collect::<Vec<_>>())
            .filter(|s| self.is_finite_type(s))
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut covers = Vec::new();
        for (lo, small) in subsets.iter().enumerate() {
            for (hi, big) in subsets.iter().enumerate() {
                if big.len() == small.len() + 1 && small.iter().all(|x| big.contains(x)) {
                    covers.push((lo, hi));
                }
            }
        }
        SphericalPoset { subsets, covers }
    }

    pub fn standard_realization(&self) -> Realization {
        Realization::standard(self)
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxeterExponent {
    Finite(u32),
    Infinite,
}

impl CoxeterExponent {
    pub fn finite(self) -> Option<u32> {
        match self {
            CoxeterExponent::Finite(m) => Some(m),
            CoxeterExponent::Infinite => None,
        }
    }
}

impl fmt::Display for CoxeterExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterExponent::Finite(m) => write!(f, "{m}"),
            CoxeterExponent::Infinite => write!(f, "inf"),
        }
    }
}

/// The subsets `J` with `W_J` finite, ordered by size then lexicographically,
/// with cover relations given as index pairs into `subsets`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphericalPoset {
    pub subsets: Vec<Vec<usize>>,
    pub covers: Vec<(usize, usize)>,
}

impl SphericalPoset {
    pub fn contains(&self, subset: &[usize]) -> bool {
        let mut s = subset.to_vec();
        s.sort_unstable();
        self.subsets.contains(&s)
    }
}

/// Integral model of the Cartan lattice: coroots `h_i` in `Z^n_T`, roots
/// `alpha_j` and dual characters `h_i*` as covectors, with `alpha_j(h_i) = a_ij`.
///
/// `h_i` is the i-th standard basis vector and `h_i*` the i-th coordinate
/// function. The root covectors are the columns of `A` stacked over
/// `|I| - rank(A)` extra rows, each a standard basis covector picked greedily
/// (lowest index first) so that the stacked matrix has full column rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub torus_rank: usize,
    #[serde(serialize_with = "as_strings")]
    pub coroots: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "as_strings")]
    pub roots: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "as_strings")]
    pub dual_basis: Vec<Vec<BigInt>>,
}

fn as_strings<S: serde::Serializer>(m: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        seq.serialize_element(&row.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
    }
    seq.end()
}

impl Realization {
    fn standard(gcm: &GeneralizedCartanMatrix) -> Self {
        let n = gcm.rank();
        let rank_a = linalg::rank(gcm.entries());
        let torus_rank = 2 * n - rank_a;

        // rows of the stacked matrix: row k holds alpha_j(e_k) for all j
        let mut stacked: Vec<Vec<BigInt>> = gcm.entries().to_vec();
        let mut current = rank_a;
        let mut m = 0;
        while current < n {
            let mut candidate = stacked.clone();
            let mut e = vec![BigInt::zero(); n];
            e[m] = BigInt::one();
            candidate.push(e);
            let r = linalg::rank(&candidate);
            if r > current {
                stacked = candidate;
                current = r;
            }
            m += 1;
        }
        debug_assert_eq!(stacked.len(), torus_rank);

        let unit = |k: usize| {
            let mut v = vec![BigInt::zero(); torus_rank];
            v[k] = BigInt::one();
            v
        };
        let coroots = (0..n).map(unit).collect();
        let dual_basis = (0..n).map(unit).collect();
        let roots = (0..n).map(|j| (0..torus_rank).map(|k| stacked[k][j].clone()).collect()).collect();
        Realization { torus_rank, coroots, roots, dual_basis }
    }

    pub fn pair(covector: &[BigInt], vector: &[BigInt]) -> BigInt {
        covector.iter().zip(vector).map(|(a, b)| a * b).sum()
    }

    /// Checks `alpha_j(h_i) = a_ij`, `h_i*(h_j) = delta_ij`, and independence.
    pub fn verify(&self, gcm: &GeneralizedCartanMatrix) -> bool {
        let n = gcm.rank();
        let pairing_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                Self::pair(&self.roots[j], &self.coroots[i]) == *gcm.entry(i, j)
                    && Self::pair(&self.dual_basis[i], &self.coroots[j])
                        == if i == j { BigInt::one() } else { BigInt::zero() }
            })
        });
        pairing_ok && linalg::rank(&self.roots) == n && linalg::rank(&self.coroots) == n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcm(rows: &[Vec<i64>]) -> GeneralizedCartanMatrix {
        GeneralizedCartanMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(GeneralizedCartanMatrix::from_rows(&[vec![2, -2], vec![-2, 2]]).is_ok());
        assert!(GeneralizedCartanMatrix::from_rows(&[vec![2]]).is_ok());
        assert_eq!(
            GeneralizedCartanMatrix::from_rows(&[vec![2, -1], vec![0, 2]]),
            Err(Error::ZeroAsymmetry { row: 0, col: 1 })
        );
        assert!(matches!(
            GeneralizedCartanMatrix::from_rows(&[vec![1, 0], vec![0, 2]]),
            Err(Error::DiagonalNotTwo { index: 0, .. })
        ));
        assert!(matches!(
            GeneralizedCartanMatrix::from_rows(&[vec![2, 1], vec![-1, 2]]),
            Err(Error::PositiveOffDiagonal { row: 0, col: 1, .. })
        ));
        assert_eq!(
            GeneralizedCartanMatrix::from_rows(&[vec![2, 0], vec![0]]),
            Err(Error::NotSquare)
        );
    }

    #[test]
    fn inline_and_file_parse_agree() {
        let a = GeneralizedCartanMatrix::parse_inline("2,-2;-2,2").unwrap();
        let b = GeneralizedCartanMatrix::parse_json(r#"{"labels":["1","2"],"rows":[[2,-2],[-2,2]]}"#)
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "2,-2;-2,2");
        assert!(GeneralizedCartanMatrix::parse_inline("2,x;0,2").is_err());
    }

    #[test]
    fn coxeter_exponents() {
        let a11 = GeneralizedCartanMatrix::rank_two(1, 1).unwrap();
        assert_eq!(a11.coxeter_exponent(0, 1).unwrap(), CoxeterExponent::Finite(3));
        let a22 = GeneralizedCartanMatrix::rank_two(2, 2).unwrap();
        assert_eq!(a22.coxeter_exponent(0, 1).unwrap(), CoxeterExponent::Infinite);
        let a00 = GeneralizedCartanMatrix::rank_two(0, 0).unwrap();
        assert_eq!(a00.coxeter_exponent(0, 1).unwrap(), CoxeterExponent::Finite(2));
        let b2 = GeneralizedCartanMatrix::rank_two(2, 1).unwrap();
        assert_eq!(b2.coxeter_exponent(1, 0).unwrap(), CoxeterExponent::Finite(4));
        let g2 = GeneralizedCartanMatrix::rank_two(1, 3).unwrap();
        assert_eq!(g2.coxeter_exponent(0, 1).unwrap(), CoxeterExponent::Finite(6));
        assert!(a11.coxeter_exponent(0, 2).is_err());
    }

    #[test]
    fn finite_type_rank_two() {
        for a in 0..6u64 {
            for b in 0..6u64 {
                if (a == 0) != (b == 0) {
                    continue;
                }
                let g = GeneralizedCartanMatrix::rank_two(a, b).unwrap();
                assert_eq!(g.is_finite_type(&[0, 1]), a * b < 4, "a={a} b={b}");
                assert!(g.is_finite_type(&[]));
                assert!(g.is_finite_type(&[0]));
            }
        }
    }

    #[test]
    fn spherical_posets() {
        let p = GeneralizedCartanMatrix::rank_two(2, 2).unwrap().spherical_poset();
        assert_eq!(p.subsets, vec![vec![], vec![0], vec![1]]);
        assert_eq!(p.covers, vec![(0, 1), (0, 2)]);
        let p = GeneralizedCartanMatrix::rank_two(1, 1).unwrap().spherical_poset();
        assert_eq!(p.subsets, vec![vec![], vec![0], vec![1], vec![0, 1]]);
        let p = gcm(&[vec![2]]).spherical_poset();
        assert_eq!(p.subsets, vec![vec![], vec![0]]);
        // affine A_2^(1): every proper subset is spherical
        let p = gcm(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).spherical_poset();
        assert_eq!(p.subsets.len(), 7);
        assert!(!p.contains(&[0, 1, 2]));
    }

    #[test]
    fn realizations() {
        let r = GeneralizedCartanMatrix::rank_two(1, 1).unwrap().standard_realization();
        assert_eq!(r.torus_rank, 2);
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(r.roots[0], ints(&[2, -1]));
        assert_eq!(r.roots[1], ints(&[-1, 2]));

        let g = GeneralizedCartanMatrix::rank_two(2, 2).unwrap();
        let r = g.standard_realization();
        assert_eq!(r.torus_rank, 3);
        assert!(r.verify(&g));
        assert_eq!(r.roots[0], ints(&[2, -2, 1]));
        assert_eq!(r.roots[1], ints(&[-2, 2, 0]));

        let g = GeneralizedCartanMatrix::rank_two(2, 3).unwrap();
        let r = g.standard_realization();
        assert_eq!(r.torus_rank, 2);
        assert!(r.verify(&g));

        let g = gcm(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let r = g.standard_realization();
        assert_eq!(r.torus_rank, 4);
        assert!(r.verify(&g));
    }
}
