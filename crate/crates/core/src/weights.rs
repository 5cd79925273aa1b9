//! Partitions, `GL` weights and Schur functor dimensions.
//!
//! Two independent dimension formulas live here. [`weyl_dim`] is the Weyl
//! product over pairs of entries and accepts any weight, including negative
//! ones produced by twisting. [`hook_content_dim`] is the hook-content product
//! over the boxes of a Young diagram and only makes sense for partitions; the
//! test suites use it as an oracle for the former.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A non-increasing integer sequence of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlWeight(Vec<i64>);

impl GlWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyWeight);
        }
        if let Some(position) = entries.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing { position });
        }
        Ok(GlWeight(entries))
    }

    /// The weight `(t, ..., t)` of length `len`.
    pub fn constant(t: i64, len: usize) -> Self {
        assert!(len > 0, "weights have at least one entry");
        GlWeight(vec![t; len])
    }

    pub fn zero(len: usize) -> Self {
        Self::constant(0, len)
    }

    /// `(1, 0, ..., 0)` of length `len`.
    pub fn unit(len: usize) -> Self {
        let mut w = Self::zero(len);
        w.0[0] = 1;
        w
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn last(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    pub fn sum(&self) -> i128 {
        self.0.iter().map(|&x| x as i128).sum()
    }

    /// Appends zeros up to length `r`.
    pub fn pad(&self, r: usize) -> Result<Self> {
        if r < self.len() {
            return Err(Error::LengthShrink {
                len: self.len(),
                requested: r,
            });
        }
        if r > self.len() && self.last() < 0 {
            return Err(Error::PadBelowNegative { last: self.last() });
        }
        let mut entries = self.0.clone();
        entries.resize(r, 0);
        Ok(GlWeight(entries))
    }

    /// Adds `t` to every entry.
    pub fn shift(&self, t: i64) -> Self {
        GlWeight(self.0.iter().map(|&x| x + t).collect())
    }

    /// The highest weight of the dual representation: negate and reverse.
    pub fn dual(&self) -> Self {
        GlWeight(self.0.iter().rev().map(|&x| -x).collect())
    }

    pub fn is_partition(&self) -> bool {
        self.last() >= 0
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if let Some(position) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing { position });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u64)
            .collect();
        Partition(parts)
    }

    /// Zero-padded weight of length `r`.
    pub fn to_weight(&self, r: usize) -> Result<GlWeight> {
        if self.length() > r {
            return Err(Error::TooManyParts {
                parts: self.length(),
                rank: r,
            });
        }
        let mut entries: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        entries.resize(r, 0);
        GlWeight::new(entries)
    }
}

/// `(m, m-1, ..., 1)`.
pub fn rho(m: usize) -> Vec<i64> {
    (1..=m as i64).rev().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SortOutcome {
    HasRepeat,
    /// Strictly decreasing rearrangement and the number of inversions.
    Sorted {
        sorted: Vec<i64>,
        inversions: usize,
    },
}

/// Sorts into strictly decreasing order and counts the pairs `i < j` with
/// `seq[i] < seq[j]`, or reports a repeated entry.
pub fn sort_and_count(seq: &[i64]) -> SortOutcome {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match seq[i].cmp(&seq[j]) {
                std::cmp::Ordering::Equal => return SortOutcome::HasRepeat,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    SortOutcome::Sorted { sorted, inversions }
}

fn exact_quotient(num: BigUint, den: BigUint) -> BigUint {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "dimension formula left a nonzero remainder");
    q
}

/// Dimension of the irreducible `GL_r` representation with highest weight
/// `w`, as `∏_{i<j} (w_i - w_j + j - i) / (j - i)`.
pub fn weyl_dim(w: &GlWeight, r: usize) -> Result<BigUint> {
    if w.len() != r {
        return Err(Error::LengthMismatch {
            expected: r,
            found: w.len(),
        });
    }
    let e = w.entries();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        for j in i + 1..r {
            let gap = (j - i) as u128;
            let top = (e[i] as i128 - e[j] as i128) as u128 + gap;
            num *= top;
            den *= gap;
        }
    }
    Ok(exact_quotient(num, den))
}

/// Hook-content formula: `∏_{(i,j) ∈ p} (r + j - i) / h(i,j)` where
/// `h(i,j) = p_i + p^t_j - i - j + 1` is the hook length of the box.
pub fn hook_content_dim(p: &Partition, r: usize) -> Result<BigUint> {
    if p.length() > r {
        return Err(Error::TooManyParts {
            parts: p.length(),
            rank: r,
        });
    }
    let t = p.transpose();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i0, &row) in p.parts().iter().enumerate() {
        let i = i0 as u64 + 1;
        for j in 1..=row {
            let col = t.parts()[j as usize - 1];
            num *= r as u64 + j - i;
            den *= row + col + 1 - i - j;
        }
    }
    Ok(exact_quotient(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> GlWeight {
        GlWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn make_weight() {
        assert_eq!(w(&[3, 1, 0]).entries(), &[3, 1, 0]);
        assert_eq!(w(&[0, 0]).entries(), &[0, 0]);
        assert_eq!(
            GlWeight::new(vec![1, 2]),
            Err(Error::NotNonIncreasing { position: 0 })
        );
        assert_eq!(GlWeight::new(vec![]), Err(Error::EmptyWeight));
    }

    #[test]
    fn pad_weights() {
        assert_eq!(w(&[19]).pad(2).unwrap(), w(&[19, 0]));
        assert_eq!(w(&[1, 1]).pad(2).unwrap(), w(&[1, 1]));
        assert_eq!(
            w(&[2, -1]).pad(3),
            Err(Error::PadBelowNegative { last: -1 })
        );
        assert_eq!(
            w(&[2, 1, 0]).pad(2),
            Err(Error::LengthShrink {
                len: 3,
                requested: 2
            })
        );
        // Same length is a no-op even for negative entries.
        assert_eq!(w(&[2, -1]).pad(2).unwrap(), w(&[2, -1]));
    }

    #[test]
    fn shift_weights() {
        assert_eq!(w(&[1, 0]).shift(-1), w(&[0, -1]));
        assert_eq!(w(&[9, 6, 3, 0]).shift(0), w(&[9, 6, 3, 0]));
        assert_eq!(w(&[19, 10]).shift(2), w(&[21, 12]));
    }

    #[test]
    fn rho_vectors() {
        assert_eq!(rho(4), vec![4, 3, 2, 1]);
        assert_eq!(rho(1), vec![1]);
        assert_eq!(rho(18), (1..=18).rev().collect::<Vec<i64>>());
    }

    #[test]
    fn sorting_with_inversions() {
        assert_eq!(
            sort_and_count(&[5, 3, 2, 1]),
            SortOutcome::Sorted {
                sorted: vec![5, 3, 2, 1],
                inversions: 0
            }
        );
        assert_eq!(sort_and_count(&[4, 3, 3, 1]), SortOutcome::HasRepeat);
        assert_eq!(
            sort_and_count(&[0, -1, 2, 1]),
            SortOutcome::Sorted {
                sorted: vec![2, 1, 0, -1],
                inversions: 4
            }
        );
        let rev: Vec<i64> = (1..=9).collect();
        assert_eq!(
            sort_and_count(&rev),
            SortOutcome::Sorted {
                sorted: (1..=9).rev().collect(),
                inversions: 36
            }
        );
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim(&w(&[1, 0]), 2).unwrap(), 2u32.into());
        assert_eq!(weyl_dim(&w(&[2, 0, 0, 0, 0]), 5).unwrap(), 15u32.into());
        assert_eq!(weyl_dim(&w(&[4, 2, 0]), 3).unwrap(), 27u32.into());
        assert_eq!(weyl_dim(&w(&[1, 1]), 2).unwrap(), 1u32.into());
        assert_eq!(
            weyl_dim(&w(&[1, 0]), 3),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn hook_content_dimensions() {
        assert_eq!(
            hook_content_dim(&Partition::empty(), 7).unwrap(),
            1u32.into()
        );
        let p = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(hook_content_dim(&p, 4).unwrap(), 4u32.into());
        let p = Partition::new(vec![2, 0]).unwrap();
        assert_eq!(hook_content_dim(&p, 2).unwrap(), 3u32.into());
        let p = Partition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(
            hook_content_dim(&p, 2),
            Err(Error::TooManyParts { parts: 3, rank: 2 })
        );
    }

    #[test]
    fn transpose_example() {
        let p = Partition::new(vec![8, 5, 3, 2, 2, 0, 0]).unwrap();
        assert_eq!(p.transpose().parts(), &[5, 5, 3, 2, 2, 1, 1, 1]);
        assert_eq!(p.transpose().transpose(), p);
    }

    fn partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0u64..=12, 0..=8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    fn weight() -> impl Strategy<Value = GlWeight> {
        proptest::collection::vec(-20i64..=20, 1..=8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            GlWeight::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn hook_content_matches_weyl(p in partition(), extra in 0usize..3) {
            let r = p.length().max(1) + extra;
            let via_weyl = weyl_dim(&p.to_weight(r).unwrap(), r).unwrap();
            prop_assert_eq!(hook_content_dim(&p, r).unwrap(), via_weyl);
        }

        #[test]
        fn weyl_dim_is_shift_invariant(w in weight(), t in -50i64..=50) {
            let r = w.len();
            prop_assert_eq!(weyl_dim(&w.shift(t), r).unwrap(), weyl_dim(&w, r).unwrap());
        }

        #[test]
        fn constant_weights_are_one_dimensional(t in -30i64..=30, r in 1usize..10) {
            prop_assert_eq!(weyl_dim(&GlWeight::constant(t, r), r).unwrap(), BigUint::one());
        }

        #[test]
        fn transpose_is_involutive(p in partition()) {
            prop_assert_eq!(p.transpose().transpose(), p);
        }

        #[test]
        fn inversions_match_adjacent_swaps(v in proptest::collection::hash_set(-40i64..40, 1..12)) {
            let seq: Vec<i64> = v.into_iter().collect();
            // bubble sort counts adjacent transpositions
            let mut s = seq.clone();
            let mut swaps = 0;
            for pass in 0..s.len() {
                for i in 0..s.len() - 1 - pass {
                    if s[i] < s[i + 1] {
                        s.swap(i, i + 1);
                        swaps += 1;
                    }
                }
            }
            prop_assert_eq!(
                sort_and_count(&seq),
                SortOutcome::Sorted { sorted: s, inversions: swaps }
            );
        }
    }
}
