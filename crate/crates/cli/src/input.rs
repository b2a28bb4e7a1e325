//! Parsing of command-line values: matrices, words and coefficient rings.

use std::path::Path;

use schubert_kit::{Error, GeneralizedCartanMatrix, Result};

/// An inline matrix such as `2,-1;-1,2`, or the path of a JSON file
/// `{"labels": [...], "rows": [[...]]}`.
pub fn gcm(spec: &str) -> Result<GeneralizedCartanMatrix> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {spec}: {e}")))?;
        return GeneralizedCartanMatrix::parse_json(&text);
    }
    GeneralizedCartanMatrix::parse_inline(spec)
}

/// A 1-based, comma-separated word; `e` or the empty string is the identity.
/// Returns 0-based indices.
pub fn word(spec: &str, rank: usize) -> Result<Vec<usize>> {
    let spec = spec.trim();
    if spec.is_empty() || spec == "e" {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|t| {
            let i: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("word entry {t:?} is not a positive integer")))?;
            if i == 0 || i > rank {
                return Err(Error::Usage(format!("generator {i} is out of range 1..={rank}")));
            }
            Ok(i - 1)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Integers,
    Rationals,
    Prime(u64),
}

/// `Z`, `Q`, `F_p`, `Fp` or a bare prime.
pub fn ring(spec: &str) -> Result<RingSpec> {
    let s = spec.trim();
    match s {
        "Z" | "z" => return Ok(RingSpec::Integers),
        "Q" | "q" => return Ok(RingSpec::Rationals),
        _ => {}
    }
    let digits = s.strip_prefix("F_").or_else(|| s.strip_prefix('F')).unwrap_or(s);
    let p: u64 = digits
        .parse()
        .map_err(|_| Error::Usage(format!("unknown coefficient ring {spec:?}; expected Z, Q or F_p")))?;
    schubert_kit::PrimeField::new(p)?;
    Ok(RingSpec::Prime(p))
}

/// `{}` or `{1,3}` for a 0-based subset.
pub fn subset_label(subset: &[usize]) -> String {
    let inner: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
