//! Exact evaluation of classical-group Weyl characters at points twisted by
//! all `t`-th roots of unity, together with the partition combinatorics
//! (beta sets, `t`-cores, `t`-quotients, `z`-asymmetric partitions) that
//! governs when those values vanish and how they factorize.
//!
//! - [`partitions`]: partitions, beta sets, cores, quotients, signs.
//! - [`cyclotomic`]: the field `Q(ω_t)` with exact rational coefficients.
//! - [`linalg`]: exact determinants over any [`linalg::Scalar`].
//! - [`characters`]: bialternant formulas for GL, Sp, odd O and even O.
//! - [`factorization`]: both sides of the five factorization theorems.
//! - [`series`]: generating functions for `z`-asymmetric partitions and cores.

pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod factorization;
pub mod linalg;
pub mod partitions;
pub mod poly;
pub mod series;

pub use characters::{sample_points, twisted_points, weyl_character, GroupType, PointTuple};
pub use cyclotomic::{cyclotomic_poly, CycloElem, CycloField};
pub use error::{Error, Result};
pub use factorization::{verify, TheoremId, VerificationReport};
pub use partitions::{BetaSet, CoreClass, FrobeniusCoords, Partition, ResidueProfile};
pub use series::{LatticeVec, SeriesZ};
