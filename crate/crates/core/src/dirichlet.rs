//! Truncated Dirichlet series `sum_{n <= N} c(n) / n^s` with exact rational
//! coefficients.
//!
//! Products truncate to the shorter operand; nothing is ever padded with
//! zeros, since padding would silently falsify identities.

use std::collections::BTreeSet;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::numtheory::mobius;
use crate::sequences::Sequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletPoly {
    coeffs: Vec<BigRational>,
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl DirichletPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        Ok(DirichletPoly { coeffs })
    }

    fn from_fn<F: FnMut(u64) -> BigRational>(len: usize, f: F) -> Result<Self> {
        if len == 0 {
            return Err(Error::NonPositive("N"));
        }
        Ok(DirichletPoly {
            coeffs: (1..=len as u64).map(f).collect(),
        })
    }

    pub fn from_sequence(seq: &Sequence) -> Self {
        DirichletPoly {
            coeffs: seq
                .terms()
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        }
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(terms: I) -> Result<Self> {
        Self::new(terms.into_iter().map(BigRational::from_integer).collect())
    }

    /// Truncation length.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `n^{-s}`, one-indexed.
    pub fn coeff(&self, n: u64) -> &BigRational {
        &self.coeffs[n as usize - 1]
    }

    /// The unit `1`.
    pub fn delta(len: usize) -> Result<Self> {
        Self::from_fn(len, |n| {
            if n == 1 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    /// `1 / zeta(s)`.
    pub fn mobius(len: usize) -> Result<Self> {
        Self::from_fn(len, |n| int(mobius(n).expect("positive")))
    }

    /// `zeta(s - a)`: coefficient `n^a`.
    pub fn zeta_shift(a: u32, len: usize) -> Result<Self> {
        Self::from_fn(len, |n| int(Pow::pow(BigInt::from(n), a)))
    }

    /// `zeta(s + 1)`: coefficient `1/n`.
    pub fn zeta_reciprocal_shift(len: usize) -> Result<Self> {
        Self::from_fn(len, |n| BigRational::new(BigInt::one(), BigInt::from(n)))
    }

    /// `zeta(2s - c)`: coefficient `j^c` at `n = j^2`, zero elsewhere.
    pub fn zeta_square_shift(c: u32, len: usize) -> Result<Self> {
        Self::from_fn(len, |n| match exact_root(n, 2) {
            Some(j) => int(Pow::pow(BigInt::from(j), c)),
            None => BigRational::zero(),
        })
    }

    /// Finite Dirichlet polynomial with the listed `(index, coefficient)`
    /// terms, truncated at `len`.
    pub fn sparse(terms: &[(u64, BigRational)], len: usize) -> Result<Self> {
        let mut poly = Self::from_fn(len, |_| BigRational::zero())?;
        let mut seen = BTreeSet::new();
        for (n, c) in terms {
            if !seen.insert(*n) {
                return Err(Error::DuplicateIndex(*n));
            }
            if *n == 0 || *n as usize > len {
                return Err(Error::InvalidParameter(format!(
                    "index {n} outside 1..={len}"
                )));
            }
            poly.coeffs[*n as usize - 1] = c.clone();
        }
        Ok(poly)
    }

    /// Shorthand for [`DirichletPoly::sparse`] with integer coefficients.
    pub fn sparse_int(terms: &[(u64, i64)], len: usize) -> Result<Self> {
        let terms: Vec<_> = terms.iter().map(|&(n, c)| (n, int(c))).collect();
        Self::sparse(&terms, len)
    }

    /// Dirichlet convolution.
    pub fn mul(&self, other: &DirichletPoly) -> DirichletPoly {
        let len = self.len().min(other.len());
        let mut coeffs = vec![BigRational::zero(); len];
        for d in 1..=len {
            let a = &self.coeffs[d - 1];
            if a.is_zero() {
                continue;
            }
            for e in 1..=len / d {
                let b = &other.coeffs[e - 1];
                if !b.is_zero() {
                    coeffs[d * e - 1] += a * b;
                }
            }
        }
        DirichletPoly { coeffs }
    }

    /// The unique `c` with `other * c = self` up to truncation.
    pub fn div(&self, other: &DirichletPoly) -> Result<DirichletPoly> {
        let lead = &other.coeffs[0];
        if lead.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let len = self.len().min(other.len());
        let mut quotient: Vec<BigRational> = Vec::with_capacity(len);
        for n in 1..=len {
            // self(n) = sum_{de = n} other(d) c(e); solve for c(n) at d = 1.
            let mut acc = self.coeffs[n - 1].clone();
            for d in 2..=n {
                if n % d == 0 {
                    acc -= &other.coeffs[d - 1] * &quotient[n / d - 1];
                }
            }
            quotient.push(acc / lead);
        }
        Ok(DirichletPoly { coeffs: quotient })
    }

    /// Substitutes `s -> k s`: coefficient `a(j)` at `n = j^k`, else zero.
    pub fn dilate(&self, k: u32) -> Result<DirichletPoly> {
        if k == 0 {
            return Err(Error::NonPositive("k"));
        }
        let len = self.len();
        Self::from_fn(len, |n| match exact_root(n, k) {
            Some(j) => self.coeffs[j as usize - 1].clone(),
            None => BigRational::zero(),
        })
    }

    /// Coefficients as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// First index where the two series differ, over their common length.
    pub fn first_mismatch(&self, other: &DirichletPoly) -> Option<u64> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
            .map(|i| i as u64 + 1)
    }

    /// Product of a list of series (the unit for an empty list).
    pub fn product<'a, I>(factors: I, len: usize) -> Result<DirichletPoly>
    where
        I: IntoIterator<Item = &'a DirichletPoly>,
    {
        let mut acc = Self::delta(len)?;
        for f in factors {
            acc = acc.mul(f);
        }
        Ok(acc)
    }
}

/// `j` with `j^k = n`, if `n` is a perfect k-th power.
fn exact_root(n: u64, k: u32) -> Option<u64> {
    if k == 1 {
        return Some(n);
    }
    let guess = (n as f64).powf(1.0 / f64::from(k)).round() as u64;
    (guess.saturating_sub(1)..=guess + 1).find(|&j| j >= 1 && j.checked_pow(k) == Some(n))
}

impl Mul for &DirichletPoly {
    type Output = DirichletPoly;

    fn mul(self, rhs: &DirichletPoly) -> DirichletPoly {
        DirichletPoly::mul(self, rhs)
    }
}

impl Add for &DirichletPoly {
    type Output = DirichletPoly;

    fn add(self, rhs: &DirichletPoly) -> DirichletPoly {
        DirichletPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &DirichletPoly {
    type Output = DirichletPoly;

    fn sub(self, rhs: &DirichletPoly) -> DirichletPoly {
        DirichletPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &DirichletPoly {
    type Output = DirichletPoly;

    fn neg(self) -> DirichletPoly {
        DirichletPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}
