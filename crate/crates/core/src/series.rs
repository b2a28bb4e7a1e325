//! Truncated Poincare series with integer coefficients.

use std::fmt;

use serde::Serialize;

/// `coeffs[m]` is the dimension in topological degree `m`; all degrees above
/// `max_degree()` are unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareSeries {
    coeffs: Vec<i64>,
}

impl PoincareSeries {
    pub fn new(coeffs: Vec<i64>) -> Self {
        PoincareSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> i64 {
        self.coeffs.get(m).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `1 / (1 - t^step)` up to `max_degree`.
    pub fn geometric(step: usize, max_degree: usize) -> Self {
        assert!(step > 0);
        PoincareSeries::new((0..=max_degree).map(|m| i64::from(m % step == 0)).collect())
    }

    /// Product with a polynomial given by its coefficient list, truncated.
    pub fn mul_poly(&self, poly: &[i64]) -> Self {
        let mut out = vec![0i64; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in poly.iter().enumerate() {
                if i + j < out.len() {
                    out[i + j] += a * b;
                }
            }
        }
        PoincareSeries::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut s = self.clone();
        s.coeffs.truncate(n);
        s.mul_poly(&other.coeffs[..n])
    }

    /// Multiplies by `1 / (1 - t^step)`.
    pub fn div_one_minus(&self, step: usize) -> Self {
        let mut out = self.coeffs.clone();
        for m in step..out.len() {
            out[m] += out[m - step];
        }
        PoincareSeries::new(out)
    }

    /// Writes `self * (1 - t^2)^nvars` as `prod (1 - t^{2 d_i})` by peeling
    /// factors greedily from the lowest degree. Returns the `d_i` (ascending)
    /// or `None` if some coefficient forbids such a product up to the
    /// truncation degree.
    pub fn factor_even_product(&self, nvars: usize) -> Option<Vec<usize>> {
        let mut q = self.clone();
        for _ in 0..nvars {
            q = q.mul_poly(&[1, 0, -1]);
        }
        if q.coeff(0) != 1 {
            return None;
        }
        let mut degrees = Vec::new();
        for m in 1..q.coeffs.len() {
            let c = q.coeffs[m];
            if c > 0 || (c != 0 && m % 2 == 1) {
                return None;
            }
            for _ in 0..(-c) {
                degrees.push(m / 2);
                q = q.div_one_minus(m);
            }
        }
        Some(degrees)
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (m, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match m {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{m}"),
            };
            let body = match (c.abs(), m) {
                (1, 0) => "1".to_string(),
                (1, _) => mono,
                (a, 0) => a.to_string(),
                (a, _) => format!("{a}{mono}"),
            };
            if parts.is_empty() {
                parts.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if c < 0 { "-" } else { "+" }));
            }
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "{} + O(t^{})", parts.join(" "), self.coeffs.len())
    }
}
