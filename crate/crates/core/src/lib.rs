//! Exact symbolic engine for differential operators on the split quadric
//! cone and the Weyl-algebra realization of its conformal symmetry algebra.

pub mod cone;
pub mod error;
pub mod euler;
pub mod forms;
pub mod harmonic;
pub mod lie;
pub mod linalg;
pub mod moment;
pub mod poly;
pub mod qlaurent;
pub mod rat;
pub mod report;
pub mod shapovalov;
pub mod weyl;
pub mod words;

pub use cone::{ConeFn, ConeOp, Grading};
pub use error::{Error, Result};
pub use euler::EulerPoly;
pub use harmonic::{SeriesInT, SymmetryCert};
pub use lie::{BasisLabel, GroupElt, LieElt};
pub use linalg::RatMatrix;
pub use moment::PolyMatrix;
pub use poly::{Monomial, Poly};
pub use qlaurent::QLaurent;
pub use rat::Rat;
pub use report::Check;
pub use weyl::WeylOp;
pub use words::{GenWord, Generator};
