//! Exact arithmetic, polynomials, determinants, root counting and jets.

pub mod det;
pub mod jet;
pub mod mpoly;
pub mod rational;
pub mod real;
pub mod scalar;
pub mod sturm;
pub mod upoly;

pub use det::{det, det_bareiss, det_cofactor, wronskian};
pub use jet::{Jet2, JetOps, TaylorJet};
pub use mpoly::MultiPoly;
pub use real::{BigFloat, Real};
pub use scalar::{DetRing, Field, Scalar};
pub use sturm::{sturm_root_count, Endpoint, Interval, RootCount};
pub use upoly::UniPoly;
