//! Composition of systems: Cartesian product, disjoint union and iteration.
//!
//! Truncation is explicit. A product or union is as long as its shorter
//! operand. An iterate `T^k` to length `M` consumes `k M` input terms and
//! fails rather than shortening silently.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{divisors, factorize, gcd, lcm};
use crate::sequences::{Sequence, View};

fn same_view(view: View, a: &Sequence, b: &Sequence) -> Result<usize> {
    a.require_view(view)?;
    b.require_view(view)?;
    Ok(a.len().min(b.len()))
}

/// Orbit counts of `T1 x T2`: `sum_{lcm(d1, d2) = n} O1(d1) O2(d2) gcd(d1, d2)`.
pub fn product_orbits(u: &Sequence, v: &Sequence) -> Result<Sequence> {
    let len = same_view(View::Orbit, u, v)?;
    Sequence::from_fn(View::Orbit, len, |n| {
        let divs = divisors(n).expect("index is positive");
        let mut acc = BigInt::zero();
        for &d1 in &divs {
            let a = u.at(d1);
            if a.is_zero() {
                continue;
            }
            for &d2 in &divs {
                if lcm(d1, d2) == n {
                    acc += a * v.at(d2) * gcd(d1, d2);
                }
            }
        }
        acc
    })
}

/// Orbit counts of the disjoint union: the pointwise sum.
pub fn union_orbits(u: &Sequence, v: &Sequence) -> Result<Sequence> {
    let len = same_view(View::Orbit, u, v)?;
    Sequence::from_fn(View::Orbit, len, |n| u.at(n) + v.at(n))
}

/// Periodic points of `T1 x T2`: the pointwise product.
pub fn product_fix(f: &Sequence, g: &Sequence) -> Result<Sequence> {
    let len = same_view(View::Fix, f, g)?;
    Sequence::from_fn(View::Fix, len, |n| f.at(n) * g.at(n))
}

fn iterate_len(available: usize, k: u64) -> Result<usize> {
    if k == 0 {
        return Err(Error::NonPositive("k"));
    }
    let len = available / k as usize;
    if len == 0 {
        return Err(Error::InsufficientLength {
            needed: k as usize,
            available,
        });
    }
    Ok(len)
}

fn check_consumption(available: usize, k: u64, m: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::NonPositive("k"));
    }
    if m == 0 {
        return Err(Error::NonPositive("M"));
    }
    let needed = k as usize * m;
    if available < needed {
        return Err(Error::InsufficientLength { needed, available });
    }
    Ok(())
}

/// `F_{T^k}(n) = F_T(k n)`, to the longest length the input supports
/// (`floor(N / k)`).
pub fn iterate_fix(f: &Sequence, k: u64) -> Result<Sequence> {
    f.require_view(View::Fix)?;
    let len = iterate_len(f.len(), k)?;
    iterate_fix_to(f, k, len)
}

/// `F_{T^k}` to exactly `m` terms; needs `k m` input terms.
pub fn iterate_fix_to(f: &Sequence, k: u64, m: usize) -> Result<Sequence> {
    f.require_view(View::Fix)?;
    check_consumption(f.len(), k, m)?;
    Sequence::from_fn(View::Fix, m, |n| f.at(k * n).clone())
}

/// Orbit counts of `T^k` directly from orbit counts of `T`, to length
/// `floor(N / k)`.
pub fn iterate_orbits(o: &Sequence, k: u64) -> Result<Sequence> {
    o.require_view(View::Orbit)?;
    let len = iterate_len(o.len(), k)?;
    iterate_orbits_to(o, k, len)
}

/// Orbit counts of `T^k` to exactly `m` terms; needs `k m` input terms.
///
/// With `J(n)` the primes of `k` not dividing `n` and `k_J` the part of `k`
/// supported on `J(n)`:
/// `O_{T^k}(n) = sum_{d | k_J} (k / d) O_T(k n / d)`.
pub fn iterate_orbits_to(o: &Sequence, k: u64, m: usize) -> Result<Sequence> {
    o.require_view(View::Orbit)?;
    check_consumption(o.len(), k, m)?;
    let kf = factorize(k)?;
    Sequence::from_fn(View::Orbit, m, |n| {
        let coprime_part: u64 = kf
            .factors()
            .iter()
            .filter(|&&(p, _)| n % p != 0)
            .map(|&(p, a)| p.pow(a))
            .product();
        divisors(coprime_part)
            .expect("positive")
            .into_iter()
            .map(|d| o.at(k * n / d) * (k / d))
            .sum()
    })
}
