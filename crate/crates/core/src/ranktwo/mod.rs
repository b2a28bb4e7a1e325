//! Rank-two Kac-Moody groups `K(a,b)` with `ab >= 4`: the integer sequences,
//! the integral cup product on the flag manifold, `H*(K; Z)`, the prime-order
//! theorem and the Hopf algebras `A_Z`, `A_{F_p}`.
//!
//! `delta_n` is the Schubert class of the length-`n` element whose reduced
//! word ends in `r_1`, and `tau_n` the one ending in `r_2`.

pub mod hopf;
pub mod prime_order;
pub mod products;
pub mod sequences;

use serde::Serialize;

use crate::weyl::{WeylElement, WeylGroup};

pub use hopf::{
    az_presentation_order, closed_form_coproduct, dual_polynomial_check, hk_integral, hk_modp_crosscheck,
    hopf_afp_series, CohomologyGroup, DualCheck, HkRow, HopfSeries, ModpCrosscheck,
};
pub use prime_order::{
    bockstein_valuation_check, matrix_order_method, prime_order_closed, prime_order_scan, BocksteinReport,
    PrimeOrderCase, PrimeOrderResult, ScanResult,
};
pub use products::{leibniz_cup_solver, Class, ProductTable};
pub use sequences::{cd_sequences, CdStream, RankTwoTables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Delta,
    Tau,
}

impl Kind {
    pub fn other(self) -> Kind {
        match self {
            Kind::Delta => Kind::Tau,
            Kind::Tau => Kind::Delta,
        }
    }

    fn last_generator(self) -> usize {
        match self {
            Kind::Delta => 0,
            Kind::Tau => 1,
        }
    }
}

/// The alternating word of length `n` ending in the generator of `kind`.
pub fn class_word(kind: Kind, n: usize) -> Vec<usize> {
    let last = kind.last_generator();
    (0..n).map(|j| if (n - 1 - j) % 2 == 0 { last } else { 1 - last }).collect()
}

pub fn class_element(group: &WeylGroup, kind: Kind, n: usize) -> WeylElement {
    group.from_word(&class_word(kind, n)).expect("rank-two group")
}

/// Length and kind of a rank-two element; the identity counts as `delta_0`.
pub fn classify(w: &WeylElement) -> (usize, Kind) {
    match w.word().last() {
        None | Some(0) => (w.length(), Kind::Delta),
        Some(_) => (w.length(), Kind::Tau),
    }
}

pub fn class_name(kind: Kind, n: usize) -> String {
    match kind {
        Kind::Delta => format!("delta_{n}"),
        Kind::Tau => format!("tau_{n}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcm::GeneralizedCartanMatrix;

    #[test]
    fn words() {
        assert_eq!(class_word(Kind::Delta, 3), vec![0, 1, 0]);
        assert_eq!(class_word(Kind::Delta, 2), vec![1, 0]);
        assert_eq!(class_word(Kind::Tau, 1), vec![1]);
        assert!(class_word(Kind::Tau, 0).is_empty());
    }

    #[test]
    fn classification_roundtrip() {
        let g = WeylGroup::new(GeneralizedCartanMatrix::rank_two(2, 3).unwrap());
        for n in 1..8 {
            for kind in [Kind::Delta, Kind::Tau] {
                let w = class_element(&g, kind, n);
                assert_eq!(w.length(), n);
                assert_eq!(classify(&w), (n, kind));
            }
        }
    }
}
