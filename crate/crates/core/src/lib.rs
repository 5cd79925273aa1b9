//! Exact Borel-Bott-Weil cohomology of irreducible `GL(V)`-invariant bundles
//! on Grassmannians, together with the classification of the invariant
//! Ulrich bundles on `Gr(k,n)`.
//!
//! A homogeneous bundle `Σ^β Q ⊗ Σ^γ S∨` on `Gr(k,n)` (the Grassmannian of
//! projective `k`-planes in `P^n`) is described by two non-increasing integer
//! weights, `β` of length `k+1` and `γ` of length `n-k`. Everything here is
//! computed over big integers; nothing is ever rounded.
//!
//! ```
//! use bbw_ulrich::{cohomology, GrassmannSpace, HomogeneousBundle, CohomologyReport};
//!
//! let g = GrassmannSpace::new(1, 3).unwrap();
//! let q = HomogeneousBundle::quotient(g);
//! match cohomology(&q, 0) {
//!     CohomologyReport::Group { degree, dimension, .. } => {
//!         assert_eq!(degree, 0);
//!         assert_eq!(dimension, 4u32.into());
//!     }
//!     CohomologyReport::Zero => unreachable!(),
//! }
//! ```
//!
//! Ulrich bundles are indexed by ordered factorization pairs; see [`ulrich`].
//!
//! ```
//! use bbw_ulrich::{ulrich, GrassmannSpace};
//!
//! let g = GrassmannSpace::new(1, 21).unwrap();
//! assert_eq!(ulrich::count_ulrich(g), 6);
//! ```

pub mod bbw;
pub mod error;
pub mod grassmann;
pub mod ulrich;
pub mod weights;

pub use bbw::{
    cohomology, cohomology_table, euler_characteristic, h0, CohomologyReport, GrassmannSpace,
    HomogeneousBundle,
};
pub use error::{Error, Result};
pub use grassmann::{c1_degree, degree, rank, slope, variety_dimension, ExactRational};
pub use ulrich::{BlockGrid, FactorizationPair, UlrichVerdict, Witness};
pub use weights::{GlWeight, Partition};
