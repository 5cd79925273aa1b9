use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bbw::{GrassmannSpace, HomogeneousBundle};
use crate::error::{Error, Result};
use crate::weights::GlWeight;

use super::is_ulrich;

pub const DEFAULT_SEARCH_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Refuse to search more candidates than this.
    pub cap: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            cap: DEFAULT_SEARCH_CAP,
            jobs: None,
        }
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Number of non-increasing sequences of length `len` with entries in `[lo, hi]`.
fn monotone_count(len: usize, lo: i64, hi: i64) -> BigUint {
    if hi < lo {
        return if len == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let width = (hi - lo) as u64;
    binomial(width + len as u64, len as u64)
}

/// Middle entries of `β` and `γ`: `β = (b_1, middle..., c)` and
/// `γ = (c, middle..., 0)` where `c = b_{k+1} = a_1`.
fn middle_lengths(space: GrassmannSpace) -> (usize, usize) {
    (
        space.quotient_rank().saturating_sub(2),
        space.sub_rank().saturating_sub(2),
    )
}

fn top_entry(space: GrassmannSpace) -> i64 {
    (space.k() * (space.sub_rank() - 1)) as i64
}

/// Size of the brute-force search space for `space`.
pub fn candidate_count(space: GrassmannSpace) -> BigUint {
    let b1 = top_entry(space);
    let (lb, lg) = middle_lengths(space);
    (0..=b1)
        .filter(|&c| admissible_corner(space, c))
        .map(|c| monotone_count(lb, c, b1) * monotone_count(lg, 0, c))
        .sum()
}

/// With a single entry in `β` the corner is `b_1` itself; with a single
/// entry in `γ` it is the normalized `a_{n-k} = 0`.
fn admissible_corner(space: GrassmannSpace, c: i64) -> bool {
    (space.quotient_rank() > 1 || c == top_entry(space)) && (space.sub_rank() > 1 || c == 0)
}

/// Calls `f` on every non-increasing sequence of length `len` in `[lo, hi]`,
/// in lexicographically increasing order.
fn for_each_monotone(len: usize, lo: i64, hi: i64, mut f: impl FnMut(&[i64])) {
    if len == 0 {
        f(&[]);
        return;
    }
    if hi < lo {
        return;
    }
    // start at the lexicographically smallest sequence (all lo)
    let mut seq = vec![lo; len];
    loop {
        f(&seq);
        // advance: find the rightmost position that can be increased while
        // keeping seq non-increasing
        let mut pos = len;
        while pos > 0 {
            let p = pos - 1;
            let cap = if p == 0 { hi } else { seq[p - 1] };
            if seq[p] < cap {
                break;
            }
            pos -= 1;
        }
        if pos == 0 {
            return;
        }
        let p = pos - 1;
        seq[p] += 1;
        for x in &mut seq[p + 1..] {
            *x = lo;
        }
    }
}

fn bundle(space: GrassmannSpace, beta: Vec<i64>, gamma: Vec<i64>) -> HomogeneousBundle {
    HomogeneousBundle::new(
        space,
        GlWeight::new(beta).expect("candidate β is non-increasing"),
        GlWeight::new(gamma).expect("candidate γ is non-increasing"),
    )
    .expect("candidate lengths match the space")
}

/// One unit of work: a fixed `β`; scans every compatible `γ`.
fn scan_unit(space: GrassmannSpace, beta: &[i64]) -> Vec<HomogeneousBundle> {
    let c = *beta.last().expect("β is non-empty");
    let (_, lg) = middle_lengths(space);
    let mut found = Vec::new();
    let mut visit = |middle: &[i64]| {
        let gamma: Vec<i64> = if space.sub_rank() == 1 {
            vec![c]
        } else {
            std::iter::once(c)
                .chain(middle.iter().copied())
                .chain([0])
                .collect()
        };
        let b = bundle(space, beta.to_vec(), gamma);
        if is_ulrich(&b).is_ulrich {
            found.push(b);
        }
    };
    for_each_monotone(lg, 0, c, &mut visit);
    found
}

fn beta_units(space: GrassmannSpace) -> Vec<Vec<i64>> {
    let b1 = top_entry(space);
    let (lb, _) = middle_lengths(space);
    let mut units = Vec::new();
    for c in (0..=b1).filter(|&c| admissible_corner(space, c)) {
        if space.quotient_rank() == 1 {
            units.push(vec![b1]);
            continue;
        }
        for_each_monotone(lb, c, b1, |middle| {
            let beta = std::iter::once(b1)
                .chain(middle.iter().copied())
                .chain([c])
                .collect();
            units.push(beta);
        });
    }
    units
}

/// Every normalized initialized candidate with `b_1 = k(n-k-1)` and
/// `b_{k+1} = a_1` that passes [`is_ulrich`], sorted by `(β, γ)`.
///
/// Work is split by `β` and merged afterwards, so the result does not depend
/// on the number of threads.
pub fn brute_force_classify(
    space: GrassmannSpace,
    options: ClassifyOptions,
) -> Result<Vec<HomogeneousBundle>> {
    let candidates = candidate_count(space);
    if candidates > BigUint::from(options.cap) {
        return Err(Error::SearchTooLarge {
            candidates,
            cap: options.cap,
        });
    }
    debug_assert!(candidates.to_u64().is_some());
    let units = beta_units(space);
    let run = || -> Vec<HomogeneousBundle> {
        units
            .par_iter()
            .flat_map_iter(|beta| scan_unit(space, beta))
            .collect()
    };
    let mut found = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    found.sort();
    found.dedup();
    Ok(found)
}
