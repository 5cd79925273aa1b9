use std::fmt;

use crate::bbw::GrassmannSpace;
use crate::error::{Error, Result};

/// Ordered sequences `(k_1..k_s)` and `(n_1..n_s)` with `∏k_l = k+1`,
/// `∏n_l = n-k`, `k_l > 1` for `l < s` and `n_l > 1` for `l > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorizationPair {
    ks: Vec<usize>,
    ns: Vec<usize>,
}

impl FactorizationPair {
    pub fn new(space: GrassmannSpace, ks: Vec<usize>, ns: Vec<usize>) -> Result<Self> {
        let pair = FactorizationPair { ks, ns };
        pair.validate(space)?;
        Ok(pair)
    }

    pub(crate) fn validate(&self, space: GrassmannSpace) -> Result<()> {
        let (ks, ns) = (&self.ks, &self.ns);
        if ks.is_empty() || ks.len() != ns.len() {
            return Err(Error::InvalidPair(format!(
                "sequences must be non-empty and of equal length, got {} and {}",
                ks.len(),
                ns.len()
            )));
        }
        if ks.iter().chain(ns).any(|&x| x == 0) {
            return Err(Error::InvalidPair("entries must be positive".into()));
        }
        let s = ks.len();
        if let Some(l) = ks[..s - 1].iter().position(|&x| x == 1) {
            return Err(Error::InvalidPair(format!(
                "k_{} = 1 but only the last k may equal 1",
                l + 1
            )));
        }
        if let Some(l) = ns[1..].iter().position(|&x| x == 1) {
            return Err(Error::InvalidPair(format!(
                "n_{} = 1 but only the first n may equal 1",
                l + 2
            )));
        }
        let pk: usize = ks.iter().product();
        let pn: usize = ns.iter().product();
        if pk != space.quotient_rank() || pn != space.sub_rank() {
            return Err(Error::InvalidPair(format!(
                "products are {pk} and {pn}, expected {} and {} for {space}",
                space.quotient_rank(),
                space.sub_rank()
            )));
        }
        Ok(())
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn ns(&self) -> &[usize] {
        &self.ns
    }

    pub fn len(&self) -> usize {
        self.ks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for FactorizationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "(({}),({}))", join(&self.ks), join(&self.ns))
    }
}

/// Ordered factorizations of `m` into exactly `len` factors, where factor `pos`
/// may equal 1 only if `may_be_one(pos)`.
fn ordered_factorizations(
    m: usize,
    len: usize,
    may_be_one: &dyn Fn(usize) -> bool,
) -> Vec<Vec<usize>> {
    fn go(
        rest: usize,
        pos: usize,
        len: usize,
        may_be_one: &dyn Fn(usize) -> bool,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos + 1 == len {
            if rest > 1 || may_be_one(pos) {
                acc.push(rest);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        let lo = if may_be_one(pos) { 1 } else { 2 };
        for f in lo..=rest {
            if rest.is_multiple_of(f) {
                acc.push(f);
                go(rest / f, pos + 1, len, may_be_one, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, 0, len, may_be_one, &mut Vec::new(), &mut out);
    out
}

/// All factorization pairs for `space`, ordered by length and then
/// lexicographically descending on `(ks, ns)`.
pub fn enumerate_factorization_pairs(space: GrassmannSpace) -> Vec<FactorizationPair> {
    let (kq, ns_total) = (space.quotient_rank(), space.sub_rank());
    // at most one factor equal to 1 in each sequence, the rest are >= 2
    let max_len = 2 + (usize::BITS - kq.max(ns_total).leading_zeros()) as usize;
    let mut pairs = Vec::new();
    for s in 1..=max_len {
        let mut ks_list = ordered_factorizations(kq, s, &|pos| pos + 1 == s);
        let mut ns_list = ordered_factorizations(ns_total, s, &|pos| pos == 0);
        ks_list.sort_unstable_by(|a, b| b.cmp(a));
        ns_list.sort_unstable_by(|a, b| b.cmp(a));
        for ks in &ks_list {
            for ns in &ns_list {
                pairs.push(FactorizationPair {
                    ks: ks.clone(),
                    ns: ns.clone(),
                });
            }
        }
    }
    pairs.dedup();
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(k: usize, n: usize) -> GrassmannSpace {
        GrassmannSpace::new(k, n).unwrap()
    }

    fn as_vecs(pairs: &[FactorizationPair]) -> Vec<(Vec<usize>, Vec<usize>)> {
        pairs
            .iter()
            .map(|p| (p.ks().to_vec(), p.ns().to_vec()))
            .collect()
    }

    #[test]
    fn gr_1_21_has_six_pairs() {
        let pairs = enumerate_factorization_pairs(gr(1, 21));
        assert_eq!(
            as_vecs(&pairs),
            vec![
                (vec![2], vec![20]),
                (vec![2, 1], vec![10, 2]),
                (vec![2, 1], vec![5, 4]),
                (vec![2, 1], vec![4, 5]),
                (vec![2, 1], vec![2, 10]),
                (vec![2, 1], vec![1, 20]),
            ]
        );
    }

    #[test]
    fn projective_space_has_one_pair() {
        for n in 1..12 {
            let pairs = enumerate_factorization_pairs(gr(0, n));
            assert_eq!(as_vecs(&pairs), vec![(vec![1], vec![n])]);
        }
    }

    #[test]
    fn gr_2_5_pairs() {
        let pairs = enumerate_factorization_pairs(gr(2, 5));
        assert_eq!(
            as_vecs(&pairs),
            vec![(vec![3], vec![3]), (vec![3, 1], vec![1, 3])]
        );
    }

    /// Brute force over all sequences with entries in `1..=m` and length up
    /// to `max_len`.
    fn brute_pairs(space: GrassmannSpace, max_len: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
        fn seqs(m: usize, len: usize) -> Vec<Vec<usize>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for tail in seqs(m, len - 1) {
                for x in 1..=m {
                    let mut v = vec![x];
                    v.extend(&tail);
                    out.push(v);
                }
            }
            out
        }
        let mut out = Vec::new();
        for len in 1..=max_len {
            let with_product = |m: usize| -> Vec<Vec<usize>> {
                seqs(m, len)
                    .into_iter()
                    .filter(|v| v.iter().product::<usize>() == m)
                    .collect()
            };
            for ks in with_product(space.quotient_rank()) {
                for ns in with_product(space.sub_rank()) {
                    if FactorizationPair::new(space, ks.clone(), ns.clone()).is_ok() {
                        out.push((ks.clone(), ns));
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force_enumeration() {
        for n in 1..=9 {
            for k in 0..n {
                let g = gr(k, n);
                let mut got = as_vecs(&enumerate_factorization_pairs(g));
                got.sort();
                assert_eq!(got, brute_pairs(g, 4), "{g}");
            }
        }
    }

    #[test]
    fn validation_errors() {
        let g = gr(5, 17);
        assert!(FactorizationPair::new(g, vec![2, 3], vec![3, 4]).is_ok());
        assert!(FactorizationPair::new(g, vec![2, 3], vec![3]).is_err());
        assert!(FactorizationPair::new(g, vec![6, 1], vec![12, 1]).is_err());
        assert!(FactorizationPair::new(g, vec![1, 6], vec![12, 1]).is_err());
        assert!(FactorizationPair::new(g, vec![3, 3], vec![3, 4]).is_err());
        assert!(FactorizationPair::new(g, vec![6, 1], vec![1, 12]).is_ok());
        assert!(FactorizationPair::new(g, vec![6, 0], vec![12, 1]).is_err());
    }
}
