//! Ulrich bundles among the irreducible homogeneous bundles on `Gr(k,n)`.
//!
//! An initialized bundle `E` on a `d`-dimensional Grassmannian is Ulrich
//! exactly when `E(-t)` has no cohomology at all for `1 <= t <= d`. For a
//! homogeneous bundle that is a finite Borel-Bott-Weil check, see
//! [`is_ulrich`].
//!
//! The invariant Ulrich bundles are indexed by [`FactorizationPair`]s. Each
//! pair determines a numbering of the `(n-k) × (k+1)` grid ([`build_grid`]);
//! the grid in turn pins down the weights ([`bundle_from_grid`]). The
//! independent check of that classification is [`brute_force_classify`],
//! which scans every normalized candidate allowed by the necessary conditions
//! `b_1 = k(n-k-1)` and `b_{k+1} = a_1`.

mod classify;
mod factorization;
mod grid;

pub use classify::{brute_force_classify, candidate_count, ClassifyOptions, DEFAULT_SEARCH_CAP};
pub use factorization::{enumerate_factorization_pairs, FactorizationPair};
pub use grid::{build_grid, bundle_from_grid, BlockGrid};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bbw::{cohomology, h0, CohomologyReport, GrassmannSpace, HomogeneousBundle};
use crate::error::Result;
use crate::grassmann::{degree, rank, superfactorial, ExactRational};

/// First twist in the Ulrich window that has nonzero cohomology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The offending bundle is `E_init(-t)`.
    pub t: usize,
    pub degree: usize,
    pub dimension: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlrichVerdict {
    pub is_ulrich: bool,
    pub witness: Option<Witness>,
    /// Whether the bundle was already initialized as given.
    pub initialized: bool,
    /// The twist `t_0` that initializes the bundle.
    pub init_shift: i64,
}

/// `H^0(E(-1)) = 0` and `H^0(E) ≠ 0`.
pub fn is_initialized(b: &HomogeneousBundle) -> bool {
    h0(&b.twist(-1)).is_zero() && !h0(b).is_zero()
}

/// Twists `b` so that it becomes initialized.
///
/// `H^0(E(t)) ≠ 0` exactly when `(β+t, γ) + ρ` is strictly decreasing, i.e.
/// when `b_{k+1} + t >= a_1`, so `t_0 = a_1 - b_{k+1}`.
pub fn initialize(b: &HomogeneousBundle) -> (HomogeneousBundle, i64) {
    let t0 = b.gamma().first() - b.beta().last();
    (b.twist(t0), t0)
}

/// Twists outside `[lo, hi]` have all cross pairs of `(β+t, γ) + ρ` on the
/// same side, so their cohomology sits in degree `0` or `d`.
fn acm_window(b: &HomogeneousBundle) -> (i64, i64) {
    let slack = b.space().n() as i64 + 2;
    (
        b.gamma().last() - b.beta().first() - slack,
        b.gamma().first() - b.beta().last() + slack,
    )
}

/// No twist of `b` has cohomology strictly between degrees `0` and `d`.
pub fn is_acm(b: &HomogeneousBundle) -> bool {
    let d = b.space().dimension();
    let (lo, hi) = acm_window(b);
    (lo..=hi).all(|t| match cohomology(b, t).degree() {
        Some(m) => m == 0 || m == d,
        None => true,
    })
}

/// Initializes `b` and checks that `E_init(-t)` has no cohomology for
/// `1 <= t <= d`.
pub fn is_ulrich(b: &HomogeneousBundle) -> UlrichVerdict {
    let initialized = is_initialized(b);
    let (init, init_shift) = initialize(b);
    let d = b.space().dimension();
    let witness = (1..=d).find_map(|t| match cohomology(&init, -(t as i64)) {
        CohomologyReport::Zero => None,
        CohomologyReport::Group {
            degree, dimension, ..
        } => Some(Witness {
            t,
            degree,
            dimension,
        }),
    });
    UlrichVerdict {
        is_ulrich: witness.is_none(),
        witness,
        initialized,
        init_shift,
    }
}

/// The alternative Ulrich criterion for an initialized bundle:
/// `H^i(E(-i)) = 0` for `i > 0` and `H^i(E(-i-1)) = 0` for `i < d`.
/// Applies it to the initialization of `b`.
pub fn satisfies_two_diagonal_criterion(b: &HomogeneousBundle) -> bool {
    let (init, _) = initialize(b);
    let d = b.space().dimension();
    let upper = (1..=d).all(|i| cohomology(&init, -(i as i64)).dimension_in(i).is_zero());
    let lower = (0..d).all(|i| cohomology(&init, -(i as i64) - 1).dimension_in(i).is_zero());
    upper && lower
}

/// The Ulrich bundle attached to a factorization pair.
pub fn construct_ulrich(
    space: GrassmannSpace,
    pair: &FactorizationPair,
) -> Result<HomogeneousBundle> {
    bundle_from_grid(&build_grid(space, pair)?)
}

/// All initialized invariant Ulrich bundles on `space`, each with the pair
/// that produced it, sorted by `(β, γ)`.
pub fn enumerate_ulrich_with_pairs(
    space: GrassmannSpace,
) -> Vec<(HomogeneousBundle, FactorizationPair)> {
    let mut out: Vec<_> = enumerate_factorization_pairs(space)
        .into_iter()
        .map(|p| {
            let b = construct_ulrich(space, &p).expect("enumerated pairs are valid");
            (b, p)
        })
        .collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out.dedup_by(|x, y| x.0 == y.0);
    out
}

/// All initialized invariant Ulrich bundles on `space`, sorted by `(β, γ)`.
pub fn enumerate_ulrich(space: GrassmannSpace) -> Vec<HomogeneousBundle> {
    enumerate_ulrich_with_pairs(space)
        .into_iter()
        .map(|(b, _)| b)
        .collect()
}

pub fn count_ulrich(space: GrassmannSpace) -> usize {
    enumerate_ulrich(space).len()
}

/// `Gr(k,n)` or the isomorphic `Gr(n-k-1,n)`, whichever has `k <= (n-1)/2`.
pub fn reduced_space(space: GrassmannSpace) -> GrassmannSpace {
    if 2 * space.k() < space.n() {
        space
    } else {
        space.dual_space()
    }
}

/// The two closed forms of the minimal Ulrich rank evaluated literally at
/// `(k, n)`: `∏_{i<j} (j-i)(n-k) / (k!(k-1)!⋯2!)` and `(n-k)^{k(k+1)/2}`.
///
/// They describe the minimum only when `k <= (n-1)/2`; see [`min_ulrich_rank`].
pub fn min_ulrich_rank_forms(space: GrassmannSpace) -> (BigUint, BigUint) {
    let (q, m) = (space.quotient_rank(), space.sub_rank() as u64);
    let mut product = BigUint::from(1u32);
    for i in 1..=q as u64 {
        for j in i + 1..=q as u64 {
            product *= (j - i) * m;
        }
    }
    let k = space.k() as u64;
    let quotient = product / superfactorial(k);
    let power = BigUint::from(m).pow((k * (k + 1) / 2) as u32);
    (quotient, power)
}

/// Smallest rank of an invariant Ulrich bundle on `space`.
///
/// The closed forms are evaluated on [`reduced_space`]: for `k > (n-1)/2`
/// they overshoot (on `Gr(2,4)` they give 8 while the minimum is 3).
pub fn min_ulrich_rank(space: GrassmannSpace) -> BigUint {
    let reduced = reduced_space(space);
    let (quotient, power) = min_ulrich_rank_forms(reduced);
    assert_eq!(
        quotient, power,
        "minimal rank closed forms disagree on {reduced}"
    );
    power
}

/// Smallest rank among the bundles returned by [`enumerate_ulrich`].
pub fn enumerated_min_rank(space: GrassmannSpace) -> BigUint {
    enumerate_ulrich(space)
        .iter()
        .map(rank)
        .min()
        .expect("every Grassmannian carries an Ulrich bundle")
}

/// Common slope `k(n-k-1)/2 · deg Gr(k,n)` of all initialized Ulrich bundles.
pub fn ulrich_slope(space: GrassmannSpace) -> ExactRational {
    let (k, n) = (space.k() as i64, space.n() as i64);
    ExactRational::new(BigInt::from(k * (n - k - 1)), BigInt::from(2))
        * ExactRational::from_integer(degree(space).into())
}
