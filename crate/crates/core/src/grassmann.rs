//! Numerical invariants of `Gr(k,n)` and of homogeneous bundles on it.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bbw::{GrassmannSpace, HomogeneousBundle};
use crate::error::{Error, Result};
use crate::weights::weyl_dim;

/// A rational number in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        ExactRational(BigRational::new(num, den))
    }

    pub fn from_integer(n: BigInt) -> Self {
        ExactRational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> Self {
        ExactRational(self.0 + rhs.0)
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> Self {
        ExactRational(self.0 - rhs.0)
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> Self {
        ExactRational(self.0 * rhs.0)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// `dim Gr(k,n) = (k+1)(n-k)`.
pub fn variety_dimension(s: GrassmannSpace) -> usize {
    s.dimension()
}

pub(crate) fn factorial(m: u64) -> BigUint {
    (2..=m).fold(BigUint::one(), |acc, i| acc * i)
}

/// `1! 2! ... m!`
pub(crate) fn superfactorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * factorial(i))
}

/// Plücker degree `d! · k!(k-1)!⋯2! / (n!(n-1)!⋯(n-k)!)` with `d = (k+1)(n-k)`.
pub fn degree(s: GrassmannSpace) -> BigUint {
    let (k, n) = (s.k() as u64, s.n() as u64);
    let num = factorial(s.dimension() as u64) * superfactorial(k);
    let den = (n - k..=n).fold(BigUint::one(), |acc, i| acc * factorial(i));
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "degree formula is not integral for {s}");
    q
}

/// `rk Σ^β Q · rk Σ^γ S∨`.
pub fn rank(b: &HomogeneousBundle) -> BigUint {
    let s = b.space();
    let q = weyl_dim(b.beta(), s.quotient_rank()).expect("β has length k+1");
    let sv = weyl_dim(b.gamma(), s.sub_rank()).expect("γ has length n-k");
    q * sv
}

/// `μ = (Σβ/(k+1) - Σγ/(n-k)) · deg Gr(k,n)`, using signed sums.
pub fn slope(b: &HomogeneousBundle) -> ExactRational {
    let s = b.space();
    let sum_beta = ExactRational::new(
        BigInt::from(b.beta().sum()),
        BigInt::from(s.quotient_rank()),
    );
    let sum_gamma = ExactRational::new(BigInt::from(b.gamma().sum()), BigInt::from(s.sub_rank()));
    (sum_beta - sum_gamma) * ExactRational::from_integer(degree(s).into())
}

/// Degree of the first Chern class, `μ · rk`.
pub fn c1_degree(b: &HomogeneousBundle) -> Result<BigInt> {
    let product = slope(b) * ExactRational::from_integer(rank(b).into());
    product
        .to_integer()
        .ok_or_else(|| Error::NonIntegralChernDegree {
            num: product.numer().to_string(),
            den: product.denom().to_string(),
        })
}
