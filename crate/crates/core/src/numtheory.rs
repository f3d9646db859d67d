//! Elementary number theory on machine integers, with big-integer results
//! where values can grow (divisor power sums).
//!
//! Everything here is trial division; inputs in this crate stay well below
//! the range where that matters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::sequences::PrimeSet;

/// Prime factorization `n = p1^a1 * ... * pr^ar`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, a)| p.pow(a)).product()
    }
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::NonPositive("n"))
    } else {
        Ok(())
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    require_positive(n)?;
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut a = 0;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            factors.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes `p <= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let len = bound as usize + 1;
    let mut composite = vec![false; len];
    let mut primes = Vec::new();
    for i in 2..len {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j < len {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if f.factors().iter().any(|&(_, a)| a > 1) {
        Ok(0)
    } else if f.factors().len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    require_positive(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors().iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// `sum_{d | n} d^k`.
pub fn sigma_k(n: u64, k: u32) -> Result<BigInt> {
    Ok(divisors(n)?
        .into_iter()
        .map(|d| Pow::pow(BigInt::from(d), k))
        .sum())
}

/// Largest divisor of `n` built only from primes in `set`.
pub fn part(n: u64, set: &PrimeSet) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors()
        .iter()
        .filter(|&&(p, _)| set.contains(p))
        .map(|&(p, a)| p.pow(a))
        .product())
}

/// Exponent of the prime `p` in `n` (the p-adic valuation).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0 && p > 1);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// p-part of a big integer `|x|`, i.e. the largest power of `p` dividing it.
pub fn big_prime_part(x: &BigInt, p: u64) -> BigInt {
    let p = BigInt::from(p);
    let mut part = BigInt::one();
    let mut m = x.clone();
    if m == BigInt::from(0) {
        return part;
    }
    loop {
        let (q, r) = m.div_rem(&p);
        if r != BigInt::from(0) {
            break;
        }
        m = q;
        part *= &p;
    }
    part
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_empty());
        assert_eq!(factorize(360).unwrap().factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97).unwrap().factors(), &[(97, 1)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_k(6, 1).unwrap(), BigInt::from(12));
        assert_eq!(sigma_k(4, 2).unwrap(), BigInt::from(21));
        assert_eq!(sigma_k(1, 7).unwrap(), BigInt::from(1));
        assert!(sigma_k(0, 1).is_err());
    }

    #[test]
    fn part_examples() {
        assert_eq!(part(12, &PrimeSet::finite([2]).unwrap()).unwrap(), 4);
        assert_eq!(part(12, &PrimeSet::finite([2, 3]).unwrap()).unwrap(), 12);
        assert_eq!(part(7, &PrimeSet::finite([2, 3]).unwrap()).unwrap(), 1);
        assert_eq!(part(12, &PrimeSet::cofinite([2]).unwrap()).unwrap(), 3);
        assert!(part(0, &PrimeSet::empty()).is_err());
    }

    #[test]
    fn mobius_sums_vanish() {
        for n in 1..=10_000u64 {
            let s: i64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| mobius(d).unwrap() as i64)
                .sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn phi_and_primes() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(primes_up_to(50).into_iter().all(is_prime));
        assert_eq!(big_prime_part(&BigInt::from(63), 3), BigInt::from(9));
        assert_eq!(valuation(48, 2), 4);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn sigma_multiplicative(m in 1u64..300, n in 1u64..300, k in 0u32..4) {
                prop_assume!(gcd(m, n) == 1);
                prop_assert_eq!(sigma_k(m * n, k).unwrap(), sigma_k(m, k).unwrap() * sigma_k(n, k).unwrap());
            }

            #[test]
            fn factorization_round_trip(n in 1u64..1_000_000) {
                let f = factorize(n).unwrap();
                prop_assert_eq!(f.value(), n);
                prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
                prop_assert!(f.factors().iter().all(|&(p, a)| a >= 1 && is_prime(p)));
            }

            #[test]
            fn part_and_complement(n in 1u64..100_000, mask in 0u8..16) {
                let chosen: Vec<u64> = [2u64, 3, 5, 7]
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, p)| p)
                    .collect();
                let s = PrimeSet::finite(chosen.clone()).unwrap();
                let c = PrimeSet::cofinite(chosen).unwrap();
                prop_assert_eq!(part(n, &s).unwrap() * part(n, &c).unwrap(), n);
            }
        }
    }
}
