//! Borel-Bott-Weil for irreducible homogeneous bundles on `Gr(k,n)`.
//!
//! The bundle `Σ^β Q ⊗ Σ^γ S∨` is encoded by the concatenated weight
//! `α = (β, γ) ∈ Z^{n+1}`. If `α + ρ` has a repeated entry every cohomology
//! group vanishes; otherwise the only nonzero group sits in degree equal to
//! the number of inversions of `α + ρ`, and it is the irreducible
//! representation of `V*` with highest weight `sort(α + ρ) - ρ`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weights::{rho, sort_and_count, weyl_dim, GlWeight, SortOutcome};

/// The Grassmannian `Gr(k,n)` of projective `k`-planes in `P^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassmannSpace {
    k: usize,
    n: usize,
}

impl GrassmannSpace {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::InvalidSpace { k, n });
        }
        Ok(GrassmannSpace { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the universal quotient bundle `Q`, i.e. `k+1`.
    pub fn quotient_rank(&self) -> usize {
        self.k + 1
    }

    /// Rank of the universal subbundle `S`, i.e. `n-k`.
    pub fn sub_rank(&self) -> usize {
        self.n - self.k
    }

    /// `dim V = n+1`.
    pub fn ambient_rank(&self) -> usize {
        self.n + 1
    }

    /// `(k+1)(n-k)`.
    pub fn dimension(&self) -> usize {
        self.quotient_rank() * self.sub_rank()
    }

    /// The isomorphic Grassmannian `Gr(n-k-1, n)`.
    pub fn dual_space(&self) -> Self {
        GrassmannSpace {
            k: self.n - self.k - 1,
            n: self.n,
        }
    }
}

impl fmt::Display for GrassmannSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

/// `Σ^β Q ⊗ Σ^γ S∨` on a Grassmannian.
///
/// Ordering is lexicographic on `(space, β, γ)`, which is the canonical order
/// for bundle lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomogeneousBundle {
    space: GrassmannSpace,
    beta: GlWeight,
    gamma: GlWeight,
}

impl HomogeneousBundle {
    pub fn new(space: GrassmannSpace, beta: GlWeight, gamma: GlWeight) -> Result<Self> {
        if beta.len() != space.quotient_rank() {
            return Err(Error::LengthMismatch {
                expected: space.quotient_rank(),
                found: beta.len(),
            });
        }
        if gamma.len() != space.sub_rank() {
            return Err(Error::LengthMismatch {
                expected: space.sub_rank(),
                found: gamma.len(),
            });
        }
        Ok(HomogeneousBundle { space, beta, gamma })
    }

    /// Convenience constructor from raw entry vectors.
    pub fn from_entries(space: GrassmannSpace, beta: Vec<i64>, gamma: Vec<i64>) -> Result<Self> {
        Self::new(space, GlWeight::new(beta)?, GlWeight::new(gamma)?)
    }

    pub fn structure_sheaf(space: GrassmannSpace) -> Self {
        Self::line_bundle(space, 0)
    }

    /// `O_G(t) = Σ^{(t,...,t)} Q`.
    pub fn line_bundle(space: GrassmannSpace, t: i64) -> Self {
        HomogeneousBundle {
            space,
            beta: GlWeight::constant(t, space.quotient_rank()),
            gamma: GlWeight::zero(space.sub_rank()),
        }
    }

    /// The universal quotient bundle `Q`.
    pub fn quotient(space: GrassmannSpace) -> Self {
        HomogeneousBundle {
            space,
            beta: GlWeight::unit(space.quotient_rank()),
            gamma: GlWeight::zero(space.sub_rank()),
        }
    }

    /// The dual universal subbundle `S∨`.
    pub fn dual_sub(space: GrassmannSpace) -> Self {
        HomogeneousBundle {
            space,
            beta: GlWeight::zero(space.quotient_rank()),
            gamma: GlWeight::unit(space.sub_rank()),
        }
    }

    pub fn space(&self) -> GrassmannSpace {
        self.space
    }

    pub fn beta(&self) -> &GlWeight {
        &self.beta
    }

    pub fn gamma(&self) -> &GlWeight {
        &self.gamma
    }

    /// `α = (β, γ)`.
    pub fn alpha(&self) -> Vec<i64> {
        let mut alpha = self.beta.entries().to_vec();
        alpha.extend_from_slice(self.gamma.entries());
        alpha
    }

    /// Tensor with `O_G(t)`.
    pub fn twist(&self, t: i64) -> Self {
        HomogeneousBundle {
            space: self.space,
            beta: self.beta.shift(t),
            gamma: self.gamma.clone(),
        }
    }

    /// Shifts `β` and `γ` together so that the last entry of `γ` is zero.
    /// Returns the isomorphic bundle and the shift that was applied.
    pub fn normalize(&self) -> (Self, i64) {
        let l = -self.gamma.last();
        let b = HomogeneousBundle {
            space: self.space,
            beta: self.beta.shift(l),
            gamma: self.gamma.shift(l),
        };
        (b, l)
    }

    pub fn is_normalized(&self) -> bool {
        self.gamma.last() == 0
    }

    pub fn dual(&self) -> Self {
        HomogeneousBundle {
            space: self.space,
            beta: self.beta.dual(),
            gamma: self.gamma.dual(),
        }
    }
}

impl fmt::Display for HomogeneousBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ^{}Q ⊗ Σ^{}S∨ on {}", self.beta, self.gamma, self.space)
    }
}

/// Cohomology of an irreducible homogeneous bundle: either nothing at all, or
/// a single irreducible `GL(V)`-representation in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyReport {
    Zero,
    Group {
        degree: usize,
        /// Highest weight of the group as a representation of `V*`.
        weight: GlWeight,
        dimension: BigUint,
    },
}

impl CohomologyReport {
    pub fn is_zero(&self) -> bool {
        matches!(self, CohomologyReport::Zero)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyReport::Zero => None,
            CohomologyReport::Group { degree, .. } => Some(*degree),
        }
    }

    /// `h^m` for the given degree.
    pub fn dimension_in(&self, m: usize) -> BigUint {
        match self {
            CohomologyReport::Group {
                degree, dimension, ..
            } if *degree == m => dimension.clone(),
            _ => BigUint::zero(),
        }
    }
}

impl fmt::Display for CohomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyReport::Zero => write!(f, "0"),
            CohomologyReport::Group {
                degree,
                weight,
                dimension,
            } => write!(f, "H^{degree} = Σ^{weight}V* (dim {dimension})"),
        }
    }
}

/// Cohomology of `b(t)`.
pub fn cohomology(b: &HomogeneousBundle, t: i64) -> CohomologyReport {
    let m = b.space.ambient_rank();
    let shifted: Vec<i64> = b
        .twist(t)
        .alpha()
        .into_iter()
        .zip(rho(m))
        .map(|(a, r)| a + r)
        .collect();
    match sort_and_count(&shifted) {
        SortOutcome::HasRepeat => CohomologyReport::Zero,
        SortOutcome::Sorted { sorted, inversions } => {
            debug_assert!(inversions <= b.space.dimension());
            let entries = sorted.into_iter().zip(rho(m)).map(|(s, r)| s - r).collect();
            let weight = GlWeight::new(entries).expect("sorted weight minus ρ is dominant");
            let dimension = weyl_dim(&weight, m).expect("weight has length n+1");
            CohomologyReport::Group {
                degree: inversions,
                weight,
                dimension,
            }
        }
    }
}

/// [`cohomology`] for every twist in `from..=to`.
pub fn cohomology_table(
    b: &HomogeneousBundle,
    from: i64,
    to: i64,
) -> Result<Vec<(i64, CohomologyReport)>> {
    if from > to {
        return Err(Error::BadRange { from, to });
    }
    Ok((from..=to).map(|t| (t, cohomology(b, t))).collect())
}

/// `χ(b(t)) = Σ (-1)^i h^i(b(t))`.
pub fn euler_characteristic(b: &HomogeneousBundle, t: i64) -> BigInt {
    match cohomology(b, t) {
        CohomologyReport::Zero => BigInt::zero(),
        CohomologyReport::Group {
            degree, dimension, ..
        } => {
            let d = BigInt::from(dimension);
            if degree % 2 == 0 {
                d
            } else {
                -d
            }
        }
    }
}

/// `h^0(b)`.
pub fn h0(b: &HomogeneousBundle) -> BigUint {
    cohomology(b, 0).dimension_in(0)
}
