//! Schubert calculus on Kac-Moody flag manifolds and the cohomology of
//! rank-two Kac-Moody groups.

pub mod error;
pub mod finite_field;
pub mod gcm;
pub mod linalg;
pub mod polyring;
pub mod ranktwo;
pub mod ring;
pub mod schubert;
pub mod selftest;
pub mod series;
pub mod weyl;

pub use error::{Error, Result};
pub use gcm::{CoxeterExponent, GeneralizedCartanMatrix, Realization, SphericalPoset};
pub use ring::{CoeffRing, Field, Integers, PrimeField, Rationals, RingTag};
pub use weyl::{WeylElement, WeylGroup, WordDto};
pub use polyring::{GradedPolynomial, InvariantsReport, TorusCohomology};
pub use schubert::{SchubertVector, TensorVector};
pub use series::PoincareSeries;
